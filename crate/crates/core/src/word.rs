//! Words over the alphabet of integer linear forms, the shuffle product
//! and the two flexion operators.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{LinearForm, Rational};

/// A word `(u_1, ..., u_r)` whose letters are linear forms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<LinearForm>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<LinearForm>) -> Self {
        Word(letters)
    }

    /// `(x_1, ..., x_m)`.
    pub fn variables(m: usize) -> Self {
        Word::range(1, m)
    }

    /// `(x_from, ..., x_to)`, empty when `from > to`.
    pub fn range(from: usize, to: usize) -> Self {
        Word((from..=to).map(LinearForm::var).collect())
    }

    pub fn letters(&self) -> &[LinearForm] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Sum of all letters.
    pub fn total(&self) -> LinearForm {
        self.0.iter().fold(LinearForm::zero(), |a, l| a.add(l))
    }

    pub fn push(&mut self, l: LinearForm) {
        self.0.push(l);
    }

    /// Apply the substitution `x_i -> forms[i-1]` to every letter.
    pub fn substitute(&self, forms: &[LinearForm]) -> Word {
        Word(self.0.iter().map(|l| l.substitute(forms)).collect())
    }

    pub fn negate(&self) -> Word {
        Word(self.0.iter().map(LinearForm::neg).collect())
    }
}

impl From<Vec<LinearForm>> for Word {
    fn from(v: Vec<LinearForm>) -> Self {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, ")")
    }
}

/// Upper flexion: `beta` acting on the first letter of `alpha`,
/// `(b_1 + ... + b_n + a_1, a_2, ..., a_m)`.
///
/// An empty `beta` leaves `alpha` unchanged; an empty `alpha` stays empty.
pub fn flexion_up(beta: &Word, alpha: &Word) -> Word {
    if alpha.is_empty() || beta.is_empty() {
        return alpha.clone();
    }
    let mut v = alpha.0.clone();
    v[0] = beta.total().add(&v[0]);
    Word(v)
}

/// Lower flexion: `beta` acting on the last letter of `alpha`,
/// `(a_1, ..., a_{m-1}, a_m + b_1 + ... + b_n)`.
pub fn flexion_down(alpha: &Word, beta: &Word) -> Word {
    if alpha.is_empty() || beta.is_empty() {
        return alpha.clone();
    }
    let mut v = alpha.0.clone();
    let last = v.len() - 1;
    v[last] = v[last].add(&beta.total());
    Word(v)
}

/// A formal rational linear combination of words.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ShuffleCombination(BTreeMap<Word, Rational>);

impl ShuffleCombination {
    pub fn single(w: Word) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, Rational::one());
        ShuffleCombination(m)
    }

    pub fn add_word(&mut self, w: Word, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.0.entry(w) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all coefficients.
    pub fn total_coefficient(&self) -> Rational {
        self.0.values().fold(Rational::zero(), |a, c| a + c)
    }
}

/// Shuffle product of two words with multiplicities:
/// `a w ⧢ b v = a (w ⧢ b v) + b (a w ⧢ v)`.
pub fn shuffle(w: &Word, v: &Word) -> ShuffleCombination {
    let mut out = ShuffleCombination::default();
    let mut prefix = Vec::with_capacity(w.len() + v.len());
    shuffle_into(&w.0, &v.0, &mut prefix, &mut out);
    out
}

fn shuffle_into(
    w: &[LinearForm],
    v: &[LinearForm],
    prefix: &mut Vec<LinearForm>,
    out: &mut ShuffleCombination,
) {
    if w.is_empty() || v.is_empty() {
        let mut word = prefix.clone();
        word.extend_from_slice(w);
        word.extend_from_slice(v);
        out.add_word(Word(word), Rational::one());
        return;
    }
    prefix.push(w[0].clone());
    shuffle_into(&w[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0].clone());
    shuffle_into(w, &v[1..], prefix, out);
    prefix.pop();
}
