//! Parity reversion and the isomorphisms `η : T(V) → T(ΠV)`, `ΛV → S(ΠV)`.
//!
//! `η(v_1⋯v_n) = (−1)^{(n−1)|v_1| + (n−2)|v_2| + ⋯ + |v_{n−1}|} πv_1⋯πv_n`
//! when `W = ΠV`. With `V = ΠW` the map goes the other way and its sign is
//! computed from the W parities, which adds `n(n−1)/2` to the exponent.
//! In both cases the sign is an involution, so `η⁻¹` uses the same sign.

use std::sync::Arc;

use crate::cochain::{Cochain, Family};
use crate::coderiv::{extend_into, Convention};
use crate::error::{Error, Result};
use crate::graded::{Flavor, GradedSpace, GradingForm, Parity, Word, WordSum};
use crate::perm::{koszul_epsilon, sign_of_permutation, Permutation};

/// The reversed-side flavor: T(V) ↔ T(W), ΛV ↔ S(W).
pub fn reversed_flavor(flavor: Flavor) -> Result<Flavor> {
    match flavor {
        Flavor::Tensor => Ok(Flavor::Tensor),
        Flavor::Exterior => Ok(Flavor::Symmetric),
        Flavor::Symmetric => Err(Error::arg("symmetric cochains already live on the reversed side")),
    }
}

/// Exponent of the η sign for a word with the given V parities.
pub fn eta_exponent(convention: Convention, parities: &[Parity]) -> Parity {
    let n = parities.len();
    let mut odd = Parity::Even;
    for (i, p) in parities.iter().enumerate() {
        if (n - 1 - i) % 2 == 1 {
            odd = odd + *p;
        }
    }
    if convention == Convention::VOfW {
        odd = odd + Parity::of((n * n.saturating_sub(1) / 2) as i64);
    }
    odd
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversionContext {
    v_space: Arc<GradedSpace>,
    w_space: Arc<GradedSpace>,
    convention: Convention,
}

impl ReversionContext {
    pub fn new(v_space: &Arc<GradedSpace>, convention: Convention) -> Self {
        ReversionContext { v_space: v_space.clone(), w_space: v_space.reversed(), convention }
    }

    pub fn v_space(&self) -> &Arc<GradedSpace> {
        &self.v_space
    }

    pub fn w_space(&self) -> &Arc<GradedSpace> {
        &self.w_space
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Sign of η on a V-word, as a parity.
    pub fn eta_sign(&self, letters: &[usize]) -> Parity {
        eta_exponent(self.convention, &self.v_space.tuple_parities(letters))
    }

    /// `η(word)` for a tensor or exterior word over V.
    pub fn eta(&self, word: &Word) -> Result<Word> {
        self.check_letters(&word.letters)?;
        let flavor = reversed_flavor(word.flavor)?;
        let odd = self.eta_sign(&word.letters).is_odd();
        Ok(Word::new(flavor, word.letters.clone(), word.coefficient.clone().signed(odd)))
    }

    /// `η⁻¹(word)` for a tensor or symmetric word over W.
    pub fn eta_inverse(&self, word: &Word) -> Result<Word> {
        self.check_letters(&word.letters)?;
        let flavor = match word.flavor {
            Flavor::Tensor => Flavor::Tensor,
            Flavor::Symmetric => Flavor::Exterior,
            Flavor::Exterior => return Err(Error::arg("η⁻¹ takes tensor or symmetric words over W")),
        };
        let odd = self.eta_sign(&word.letters).is_odd();
        Ok(Word::new(flavor, word.letters.clone(), word.coefficient.clone().signed(odd)))
    }

    fn check_letters(&self, letters: &[usize]) -> Result<()> {
        match letters.iter().find(|&&i| i >= self.v_space.dim()) {
            Some(bad) => Err(Error::arg(format!("basis index {bad} out of range"))),
            None => Ok(()),
        }
    }

    /// `μ_k = η₁⁻¹ ∘ δ_k ∘ η_k` for one cochain on W; `|μ_k| = |δ_k| + k − 1`.
    pub fn conjugate_cochain(&self, delta: &Cochain) -> Result<Cochain> {
        if **delta.space() != *self.w_space {
            return Err(Error::arg("δ must be a cochain on W = ΠV"));
        }
        let flavor = match delta.flavor() {
            Flavor::Tensor => Flavor::Tensor,
            Flavor::Symmetric => Flavor::Exterior,
            Flavor::Exterior => return Err(Error::arg("reversed-side cochains are tensor or symmetric")),
        };
        self.transport(delta, &self.v_space, flavor)
    }

    /// `δ_k = η₁ ∘ μ_k ∘ η_k⁻¹` for one cochain on V.
    pub fn unconjugate_cochain(&self, mu: &Cochain) -> Result<Cochain> {
        if **mu.space() != *self.v_space {
            return Err(Error::arg("μ must be a cochain on V"));
        }
        let flavor = reversed_flavor(mu.flavor())?;
        self.transport(mu, &self.w_space, flavor)
    }

    fn transport(&self, c: &Cochain, target: &Arc<GradedSpace>, flavor: Flavor) -> Result<Cochain> {
        let k = c.arity();
        let parity = c.parity() + Parity::of(k as i64 - 1);
        let mut out = Cochain::zero(target, flavor, k, parity);
        for (t, value) in c.entries() {
            let odd = self.eta_sign(t).is_odd();
            out.set(t, if odd { value.negated() } else { value.clone() })?;
        }
        Ok(out)
    }

    pub fn conjugate(&self, delta: &Family) -> Result<Family> {
        let flavor = match delta.flavor() {
            Flavor::Symmetric => Flavor::Exterior,
            f => f,
        };
        let parts: Result<Vec<Cochain>> = delta.parts().map(|c| self.conjugate_cochain(c)).collect();
        Family::from_parts(&self.v_space, flavor, parts?)
    }

    pub fn unconjugate(&self, mu: &Family) -> Result<Family> {
        let flavor = reversed_flavor(mu.flavor())?;
        let parts: Result<Vec<Cochain>> = mu.parts().map(|c| self.unconjugate_cochain(c)).collect();
        Family::from_parts(&self.w_space, flavor, parts?)
    }

    /// `μ̄_k = η⁻¹ ∘ δ̂_k ∘ η` on one V-word, where `δ̂_k` is the Z₂-graded
    /// extension of the conjugate of `μ_k` on W.
    pub fn bar_extension(&self, mu: &Cochain, letters: &[usize]) -> Result<WordSum> {
        let delta = self.unconjugate_cochain(mu)?;
        let mut on_w = WordSum::zero();
        let one = self.v_space.field().one();
        let odd = self.eta_sign(letters).is_odd();
        extend_into(&delta, GradingForm::ParityOnly, letters, &one.signed(odd), &mut on_w);
        let mut out = WordSum::zero();
        for (w, c) in on_w.iter() {
            let odd = self.eta_sign(w).is_odd();
            out.add_word(mu.flavor(), self.v_space.parities(), w, c.clone().signed(odd));
        }
        Ok(out)
    }

    /// Predicted exponent `s` in `μ̄_k = (−1)^s μ̂_k` on degree-`n` words.
    ///
    /// For `W = ΠV` this is `(n−k)|μ_k|`. For `V = ΠW` the extra η signs
    /// contribute `(n−k)(k−1)`.
    pub fn munot_exponent(&self, mu: &Cochain, n: usize) -> Parity {
        let k = mu.arity();
        let base = Parity::of((n - k) as i64) * mu.parity();
        match self.convention {
            Convention::WOfV => base,
            Convention::VOfW => base + Parity::of(((n - k) * (k + 1)) as i64),
        }
    }

    /// Checks `μ̄_k = (−1)^{(n−k)|μ_k|} μ̂_k` on every basis word of degree `n`.
    pub fn verify_munot(&self, mu: &Cochain, n: usize) -> Result<bool> {
        if n < mu.arity() {
            return Ok(true);
        }
        let form = crate::coderiv::default_form(mu.flavor());
        let odd = self.munot_exponent(mu, n).is_odd();
        let one = self.v_space.field().one();
        for t in self.v_space.canonical_tuples(mu.flavor(), n) {
            let bar = self.bar_extension(mu, &t)?;
            let mut hat = WordSum::zero();
            extend_into(mu, form, &t, &one.clone().signed(odd), &mut hat);
            if bar != hat {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reversal identity: `(−1)^{Σ(n−i)v_i} (−1)^σ ε(σ;v) = (−1)^{Σ(n−i)v_{σ(i)}} ε(σ;w)`
/// with `w` the reversed parities.
pub fn verify_reversal_identity(sigma: &Permutation, parities: &[Parity]) -> Result<bool> {
    let lhs = eta_exponent(Convention::WOfV, parities) + sign_of_permutation(sigma) + koszul_epsilon(sigma, parities)?;
    let rearranged = sigma.rearrange(parities);
    let flipped: Vec<Parity> = parities.iter().map(|p| p.flip()).collect();
    let rhs = eta_exponent(Convention::WOfV, &rearranged) + koszul_epsilon(sigma, &flipped)?;
    Ok(lhs == rhs)
}

/// Rewrites a structure written in one convention into the other:
/// `m_k ↦ (−1)^{k(k−1)/2} m_k`. The map is an involution.
pub fn convert(family: &Family) -> Family {
    let mut out = Family::zero(family.space(), family.flavor());
    for part in family.parts() {
        let k = part.arity();
        let odd = (k * k.saturating_sub(1) / 2) % 2 == 1;
        out.add_part(&part.scale(&part.field().one().signed(odd))).expect("same space");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Parity::{Even, Odd};
    use crate::graded::Vector;

    #[test]
    fn eta_examples() {
        let v = GradedSpace::anonymous(&[Odd, Odd, Even]);
        let ctx = ReversionContext::new(&v, Convention::WOfV);
        let q = v.field();
        let w = ctx.eta(&Word::new(Flavor::Tensor, vec![2], q.one())).unwrap();
        assert_eq!(w.coefficient, q.one());
        let w = ctx.eta(&Word::new(Flavor::Tensor, vec![0, 2], q.one())).unwrap();
        assert_eq!(w.coefficient, q.int(-1));
        let w = ctx.eta(&Word::new(Flavor::Tensor, vec![0, 1, 2], q.one())).unwrap();
        assert_eq!(w.coefficient, q.int(-1));
        let back = ctx.eta_inverse(&w).unwrap();
        assert_eq!(back.coefficient, q.one());
        assert_eq!(ctx.w_space().parities(), &[Even, Even, Odd]);
    }

    #[test]
    fn conjugation_parity_bookkeeping() {
        let v = GradedSpace::anonymous(&[Odd]);
        let ctx = ReversionContext::new(&v, Convention::WOfV);
        let w = ctx.w_space().clone();
        // on an even one-dimensional W an odd δ₂ vanishes; its conjugate is even
        let odd_delta = Cochain::zero(&w, Flavor::Tensor, 2, Odd);
        assert_eq!(ctx.conjugate_cochain(&odd_delta).unwrap().parity(), Even);
        let mut delta = Cochain::zero(&w, Flavor::Tensor, 2, Even);
        delta.set(&[0, 0], Vector::basis(0, w.field())).unwrap();
        let mu = ctx.conjugate_cochain(&delta).unwrap();
        assert_eq!(mu.parity(), Odd);
        assert_eq!(ctx.unconjugate_cochain(&mu).unwrap(), delta);
    }

    #[test]
    fn reversal_identity_small() {
        for n in 1..=4 {
            for sigma in Permutation::all(n) {
                for mask in 0..(1u32 << n) {
                    let parities: Vec<Parity> = (0..n).map(|i| Parity::from(mask >> i & 1 == 1)).collect();
                    assert!(verify_reversal_identity(&sigma, &parities).unwrap());
                }
            }
        }
    }

    #[test]
    fn convert_is_involution() {
        let v = GradedSpace::anonymous(&[Even]);
        let mut m = Cochain::zero(&v, Flavor::Tensor, 2, Even);
        m.set(&[0, 0], Vector::basis(0, v.field())).unwrap();
        let f = Family::single(m.clone());
        assert_eq!(convert(&f), Family::single(m.negated()));
        assert_eq!(convert(&convert(&f)), f);
    }

    #[test]
    fn munot_on_small_cochains() {
        let v = GradedSpace::anonymous(&[Even, Odd]);
        let q = v.field();
        for convention in [Convention::WOfV, Convention::VOfW] {
            let ctx = ReversionContext::new(&v, convention);
            for flavor in [Flavor::Tensor, Flavor::Exterior] {
                for parity in [Even, Odd] {
                    let mut mu = Cochain::zero(&v, flavor, 2, parity);
                    for t in v.canonical_tuples(flavor, 2) {
                        let out = if (v.tuple_parity(&t) + parity).is_odd() { 1 } else { 0 };
                        mu.set(&t, Vector::basis(out, q).scaled(&q.int(t[0] as i64 + 2))).unwrap();
                    }
                    for n in 2..=4 {
                        assert!(ctx.verify_munot(&mu, n).unwrap(), "{convention} {flavor} {parity} n={n}");
                    }
                }
            }
        }
    }
}
