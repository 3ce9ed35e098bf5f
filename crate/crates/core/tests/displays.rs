use mould::displays::{all_rows, report, DisplayRow, Inputs, Verdict};
use mould::Coefficient;

/// The rows whose printed form is off by a known term.
const MISPRINTS: &[(&str, usize)] = &[("ari", 2), ("ari", 3), ("garit", 3), ("slang_1", 2)];

fn assert_rows<C: Coefficient>(rows: &[DisplayRow<C>]) {
    for r in rows {
        let known = MISPRINTS.contains(&(r.name.as_str(), r.depth));
        assert_eq!(known, r.misprint.is_some());
        // a concrete mould can make the missing term vanish
        let expected = match &r.misprint {
            Some(gap) if !gap.is_zero() => Verdict::KnownMisprint,
            _ => Verdict::Reproduced,
        };
        assert_eq!(r.verdict(), expected, "{} at depth {}: {:?}", r.name, r.depth, r.residual());
    }
}

#[test]
fn generic_displays() {
    let rows = all_rows(&Inputs::generic()).unwrap();
    assert_eq!(rows.len(), 39);
    assert_rows(&rows);
}

#[test]
fn random_instantiations() {
    for seed in 0..8 {
        assert_rows(&all_rows(&Inputs::random(seed)).unwrap());
    }
}

#[test]
fn report_lists_every_row() {
    let generic = all_rows(&Inputs::generic()).unwrap();
    assert!(generic.iter().all(|r| r.misprint.as_ref().is_none_or(|g| !g.is_zero())));
    let r = report(&[1]).unwrap();
    assert!(!r.passed());
    assert_eq!(r.checks.len(), 78);
    let failing: Vec<_> = r.checks.iter().filter(|c| !c.passed()).collect();
    let generic_failing = failing.iter().filter(|c| c.claim.starts_with("generic")).count();
    assert_eq!(generic_failing, MISPRINTS.len());
    assert!(failing.iter().all(|c| c.residual_text().unwrap().contains("known gap")));
}
