//! Reduced diagonals of the tensor, symmetric and exterior coalgebras.

use std::collections::BTreeMap;

use crate::graded::{Flavor, GradedSpace, Parity, Word, WordSum};
use crate::perm::{koszul_sign_unchecked, sign_of_permutation, unshuffles};
use crate::scalar::Scalar;

/// Formal sum of `α ⊗ β` with α, β canonical words.
pub type PairSum = BTreeMap<(Vec<usize>, Vec<usize>), Scalar>;

pub(crate) fn add_to<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Reduced diagonal Δ of a word. The word is canonicalized first; degree-one
/// words (and zero words) give the empty sum.
pub fn diagonal(word: &Word, space: &GradedSpace) -> PairSum {
    let mut out = PairSum::new();
    let Some(w) = word.canonical(space) else { return out };
    diagonal_into(w.flavor, space, &w.letters, &w.coefficient, &mut out);
    out
}

/// Δ of `coef · letters` (letters canonical) accumulated into `out`.
pub(crate) fn diagonal_into(flavor: Flavor, space: &GradedSpace, letters: &[usize], coef: &Scalar, out: &mut PairSum) {
    let n = letters.len();
    if flavor == Flavor::Tensor {
        for k in 1..n {
            add_to(out, (letters[..k].to_vec(), letters[k..].to_vec()), coef.clone());
        }
        return;
    }
    let parities = space.tuple_parities(letters);
    for k in 1..n {
        for sigma in unshuffles(k, n - k) {
            let mut odd = koszul_sign_unchecked(sigma.images(), &parities);
            if flavor == Flavor::Exterior {
                odd = odd + sign_of_permutation(&sigma);
            }
            let arranged: Vec<usize> = sigma.images().iter().map(|&i| letters[i - 1]).collect();
            add_to(out, (arranged[..k].to_vec(), arranged[k..].to_vec()), coef.clone().signed(odd.is_odd()));
        }
    }
}

/// Applies Δ to every term of a word sum.
pub fn diagonal_of_sum(flavor: Flavor, space: &GradedSpace, sum: &WordSum) -> PairSum {
    let mut out = PairSum::new();
    for (w, c) in sum.iter() {
        diagonal_into(flavor, space, w, c, &mut out);
    }
    out
}

/// Formal sum of triple tensors `α ⊗ β ⊗ γ`.
pub type TripleSum = BTreeMap<(Vec<usize>, Vec<usize>, Vec<usize>), Scalar>;

/// `(1 ⊗ Δ) ∘ Δ` applied to a canonical word.
pub fn right_coassociator(flavor: Flavor, space: &GradedSpace, letters: &[usize]) -> TripleSum {
    let one = space.field().one();
    let mut first = PairSum::new();
    diagonal_into(flavor, space, letters, &one, &mut first);
    let mut out = TripleSum::new();
    for ((a, b), c) in first {
        let mut inner = PairSum::new();
        diagonal_into(flavor, space, &b, &c, &mut inner);
        for ((b1, b2), c2) in inner {
            add_to(&mut out, (a.clone(), b1, b2), c2);
        }
    }
    out
}

/// `(Δ ⊗ 1) ∘ Δ` applied to a canonical word.
pub fn left_coassociator(flavor: Flavor, space: &GradedSpace, letters: &[usize]) -> TripleSum {
    let one = space.field().one();
    let mut first = PairSum::new();
    diagonal_into(flavor, space, letters, &one, &mut first);
    let mut out = TripleSum::new();
    for ((a, b), c) in first {
        let mut inner = PairSum::new();
        diagonal_into(flavor, space, &a, &c, &mut inner);
        for ((a1, a2), c2) in inner {
            add_to(&mut out, (a1, a2, b.clone()), c2);
        }
    }
    out
}

/// The twist `S(α ⊗ β) = (−1)^{⟨α,β⟩} β ⊗ α`, with the pairing given by
/// `exponent(α, β)`.
pub fn twist(space: &GradedSpace, pairs: &PairSum, with_degree: bool) -> PairSum {
    let mut out = PairSum::new();
    for ((a, b), c) in pairs {
        let mut odd = space.tuple_parity(a) * space.tuple_parity(b);
        if with_degree {
            odd = odd + Parity::of((a.len() * b.len()) as i64);
        }
        add_to(&mut out, (b.clone(), a.clone()), c.clone().signed(odd.is_odd()));
    }
    out
}
