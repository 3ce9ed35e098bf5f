use mould::mould::Mould;
use mould::special::{sa, sang_expanded, Singulator};

#[test]
fn compositional_and_expanded_sang_agree() {
    let sg: Singulator = Singulator::new(4).unwrap();
    for s in [3, 5, -1] {
        let a = sa(s, 4);
        assert_eq!(sg.sang(&a).unwrap(), sang_expanded(&a).unwrap(), "sa_{}", s);
    }
}

#[test]
fn slang_sums_to_sang() {
    let sg: Singulator = Singulator::new(4).unwrap();
    for s in [3, 5] {
        let a = sa(s, 4);
        let parts = sg.slang_all(&a).unwrap();
        let total = parts.iter().fold(Mould::zero(4), |acc, p| acc.add(p));
        assert_eq!(total, sg.sang(&a).unwrap());
    }
}

#[test]
fn slang_r_is_concentrated_in_length_r_after_pulling_back() {
    let sg: Singulator = Singulator::new(3).unwrap();
    let a = sa(3, 3);
    let pal_inv = sg_adari_inverse(&sg);
    for (i, part) in sg.slang_all(&a).unwrap().iter().enumerate() {
        let pulled = pal_inv.apply(part).unwrap();
        for m in 1..=3 {
            if m != i + 1 {
                assert!(pulled.component(m).is_zero(), "slang_{} at depth {}", i + 1, m);
            }
        }
    }
}

fn sg_adari_inverse(sg: &Singulator) -> mould::Adari<mould::RationalFunction> {
    let pal = mould::special::pal(sg.depth()).unwrap();
    mould::Adari::new(&pal).unwrap().inverse()
}

#[test]
fn compositional_and_expanded_sang_agree_generically() {
    use mould::symbolic::{opaque_mould_truncated, SymbolicValue};
    let a = opaque_mould_truncated('A', 3, 1);
    let sg: Singulator<SymbolicValue> = Singulator::new(3).unwrap();
    assert_eq!(sg.sang(&a).unwrap(), sang_expanded(&a).unwrap());
}
