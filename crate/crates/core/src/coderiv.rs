//! Coderivations generated by cochains, their restrictions `d_{kl}`, the
//! coderivation bracket and the modified brackets.
//!
//! A generator `d_k : V^k → V` extends to a coderivation `d̂_k` of T(V), S(V)
//! or ΛV. On the tensor coalgebra the extension depends on the grading:
//! under the Z₂-grading the term inserting `d_k` after `i` letters carries
//! `(−1)^{(v_1+⋯+v_i)|d|}`, under Z₂×Z an extra `(−1)^{i(k−1)}`.
//! Arity-0 generators (vectors) are allowed; they raise word degree by one.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coalgebra::{diagonal_into, PairSum};
use crate::cochain::{Cochain, Family};
use crate::error::{Error, Result};
use crate::graded::{Flavor, GradingForm, Parity, WordSum};
use crate::perm::{koszul_sign_unchecked, sign_of_permutation, unshuffles};
use crate::scalar::Scalar;

/// Which side of the parity reversion carries the odd Z₂ codifferential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Convention {
    /// `W = ΠV`.
    #[default]
    WOfV,
    /// `V = ΠW`.
    VOfW,
}

impl Convention {
    pub fn other(self) -> Convention {
        match self {
            Convention::WOfV => Convention::VOfW,
            Convention::VOfW => Convention::WOfV,
        }
    }

    pub fn parse(text: &str) -> Option<Convention> {
        match text {
            "w-of-v" | "w_of_v" => Some(Convention::WOfV),
            "v-of-w" | "v_of_w" => Some(Convention::VOfW),
            _ => None,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::WOfV => "w-of-v",
            Convention::VOfW => "v-of-w",
        })
    }
}

/// The grading a flavor's coderivations are taken with on the V side:
/// Z₂×Z (product form) for tensor and exterior, Z₂ for symmetric.
pub fn default_form(flavor: Flavor) -> GradingForm {
    match flavor {
        Flavor::Symmetric => GradingForm::ParityOnly,
        Flavor::Tensor | Flavor::Exterior => GradingForm::ProductForm,
    }
}

/// A cochain together with the grading used to extend it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoderivationGenerator {
    base: Cochain,
    form: GradingForm,
}

impl CoderivationGenerator {
    pub fn new(base: Cochain, form: GradingForm) -> Result<Self> {
        check_form(base.flavor(), form)?;
        Ok(CoderivationGenerator { base, form })
    }

    /// Generator with the flavor's default grading.
    pub fn natural(base: Cochain) -> Self {
        let form = default_form(base.flavor());
        CoderivationGenerator { base, form }
    }

    pub fn base(&self) -> &Cochain {
        &self.base
    }

    pub fn form(&self) -> GradingForm {
        self.form
    }

    /// `d̂_k` applied to one word (letters need not be canonical).
    pub fn extend(&self, flavor: Flavor, letters: &[usize]) -> Result<WordSum> {
        if flavor != self.base.flavor() {
            return Err(Error::arg(format!(
                "cannot apply a {} coderivation to a {flavor} word",
                self.base.flavor()
            )));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i >= self.base.space().dim()) {
            return Err(Error::arg(format!("basis index {bad} out of range")));
        }
        let mut out = WordSum::zero();
        extend_into(&self.base, self.form, letters, &self.base.field().one(), &mut out);
        Ok(out)
    }

    /// `d̂_k` applied to a sum of canonical words.
    pub fn extend_sum(&self, sum: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for (w, c) in sum.iter() {
            extend_into(&self.base, self.form, w, c, &mut out);
        }
        out
    }

    /// `d_{kl}`: the extension on canonical words of degree `k + l − 1`.
    pub fn restrict(&self, l: usize) -> Result<Restriction> {
        let k = self.base.arity();
        if l == 0 || k + l == 0 {
            return Err(Error::arg("restrictions need l ≥ 1"));
        }
        let space = self.base.space();
        let n = k + l - 1;
        let one = self.base.field().one();
        let mut map = BTreeMap::new();
        for t in space.canonical_tuples(self.base.flavor(), n) {
            let mut out = WordSum::zero();
            extend_into(&self.base, self.form, &t, &one, &mut out);
            if !out.is_zero() {
                map.insert(t, out);
            }
        }
        Ok(Restriction { k, l, flavor: self.base.flavor(), map })
    }

    /// `Δ∘d̂ − (d̂⊗1 + 1⊗d̂)∘Δ` on one canonical word; zero for a coderivation.
    pub fn coderivation_defect(&self, letters: &[usize]) -> PairSum {
        let space = self.base.space();
        let flavor = self.base.flavor();
        let one = space.field().one();
        let mut image = WordSum::zero();
        extend_into(&self.base, self.form, letters, &one, &mut image);
        let mut lhs = PairSum::new();
        for (w, c) in image.iter() {
            diagonal_into(flavor, space, w, c, &mut lhs);
        }
        let mut split = PairSum::new();
        diagonal_into(flavor, space, letters, &one, &mut split);
        let gen_bideg = (self.base.parity(), self.base.arity() as i64 - 1);
        for ((a, b), c) in split {
            let mut left = WordSum::zero();
            extend_into(&self.base, self.form, &a, &c, &mut left);
            for (a2, c2) in left.iter() {
                crate::coalgebra::add_to(&mut lhs, (a2.clone(), b.clone()), -c2);
            }
            let alpha = (space.tuple_parity(&a), a.len() as i64);
            let odd = self.form.pair(alpha, gen_bideg).is_odd();
            let mut right = WordSum::zero();
            extend_into(&self.base, self.form, &b, &c.clone().signed(odd), &mut right);
            for (b2, c2) in right.iter() {
                crate::coalgebra::add_to(&mut lhs, (a.clone(), b2.clone()), -c2);
            }
        }
        lhs
    }
}

fn check_form(flavor: Flavor, form: GradingForm) -> Result<()> {
    let ok = match flavor {
        Flavor::Tensor => form != GradingForm::ShiftedForm,
        Flavor::Symmetric => form == GradingForm::ParityOnly,
        Flavor::Exterior => form == GradingForm::ProductForm,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::arg(format!("{flavor} coderivations cannot be graded by {form:?}")))
    }
}

/// Adds `coef · d̂_k(letters)` to `out`.
pub(crate) fn extend_into(gen: &Cochain, form: GradingForm, letters: &[usize], coef: &Scalar, out: &mut WordSum) {
    let k = gen.arity();
    let n = letters.len();
    if n < k || gen.is_zero() || coef.is_zero() {
        return;
    }
    let space = gen.space();
    match gen.flavor() {
        Flavor::Tensor => {
            let mut prefix = Parity::Even;
            for i in 0..=n - k {
                if i > 0 {
                    prefix = prefix + space.parity(letters[i - 1]);
                }
                let mut odd = prefix * gen.parity();
                if form == GradingForm::ProductForm {
                    odd = odd + Parity::of((i * (k + 1)) as i64); // i(k−1) ≡ i(k+1)
                }
                let value = gen.evaluate_unchecked(&letters[i..i + k]);
                let c = coef.clone().signed(odd.is_odd());
                for (j, x) in value.iter() {
                    let mut word = Vec::with_capacity(n - k + 1);
                    word.extend_from_slice(&letters[..i]);
                    word.push(j);
                    word.extend_from_slice(&letters[i + k..]);
                    out.add_canonical(word, &c * x);
                }
            }
        }
        flavor => {
            let parities = space.tuple_parities(letters);
            for sigma in unshuffles(k, n - k) {
                let mut odd = koszul_sign_unchecked(sigma.images(), &parities);
                if flavor == Flavor::Exterior {
                    odd = odd + sign_of_permutation(&sigma);
                }
                let arranged = sigma.rearrange(letters);
                let value = gen.evaluate_unchecked(&arranged[..k]);
                let c = coef.clone().signed(odd.is_odd());
                for (j, x) in value.iter() {
                    let mut word = Vec::with_capacity(n - k + 1);
                    word.push(j);
                    word.extend_from_slice(&arranged[k..]);
                    out.add_word(flavor, space.parities(), &word, &c * x);
                }
            }
        }
    }
}

/// The map `d_{kl}` on canonical words of degree `k + l − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub k: usize,
    pub l: usize,
    pub flavor: Flavor,
    map: BTreeMap<Vec<usize>, WordSum>,
}

impl Restriction {
    /// Image of a canonical word (zero if absent).
    pub fn apply(&self, letters: &[usize]) -> WordSum {
        self.map.get(letters).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &WordSum)> {
        self.map.iter()
    }
}

fn check_pair(a: &Cochain, b: &Cochain) -> Result<()> {
    if a.flavor() != b.flavor() || **a.space() != **b.space() {
        return Err(Error::arg(format!(
            "cannot bracket a {} cochain with a {} cochain on a different space",
            a.flavor(),
            b.flavor()
        )));
    }
    if a.arity() + b.arity() == 0 {
        return Err(Error::arg("the bracket of two arity-0 cochains is not defined"));
    }
    Ok(())
}

/// `a_k ∘ b_{lk}` where `b_{lk}` is `b̂_l` on degree `k + l − 1` words.
pub fn compose(a: &Cochain, b: &Cochain, form: GradingForm) -> Result<Cochain> {
    check_pair(a, b)?;
    check_form(a.flavor(), form)?;
    Ok(compose_unchecked(a, b, form))
}

pub(crate) fn compose_unchecked(a: &Cochain, b: &Cochain, form: GradingForm) -> Cochain {
    let n = a.arity() + b.arity() - 1;
    let space = a.space();
    let parity = a.parity() + b.parity();
    let mut out = Cochain::zero(space, a.flavor(), n, parity);
    if a.is_zero() || b.is_zero() {
        return out;
    }
    let one = space.field().one();
    for t in space.canonical_tuples(a.flavor(), n) {
        let mut inner = WordSum::zero();
        extend_into(b, form, &t, &one, &mut inner);
        let mut value = crate::graded::Vector::zero();
        for (w, c) in inner.iter() {
            value.add_scaled(c, &a.evaluate_unchecked(w));
        }
        if !value.is_zero() {
            out.set(&t, value).expect("parity-consistent composition");
        }
    }
    out
}

/// `[a_k, b_l] = a_k∘b_{lk} − (−1)^{⟨a,b⟩} b_l∘a_{kl}` under `form`, with
/// bidegrees `(|a|, k−1)` and `(|b|, l−1)`.
pub fn bracket_with(a: &Cochain, b: &Cochain, form: GradingForm) -> Result<Cochain> {
    check_pair(a, b)?;
    check_form(a.flavor(), form)?;
    Ok(bracket_unchecked(a, b, form))
}

fn bracket_unchecked(a: &Cochain, b: &Cochain, form: GradingForm) -> Cochain {
    let first = compose_unchecked(a, b, form);
    let second = compose_unchecked(b, a, form);
    let odd = form.pair(a.bidegree(), b.bidegree()).is_odd();
    let coef = a.field().one().signed(!odd);
    first.add(&second.scale(&coef)).expect("same shape")
}

/// Coderivation bracket with the flavor's natural grading (Z₂×Z for tensor
/// and exterior cochains on V, Z₂ for symmetric cochains).
pub fn bracket(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    bracket_with(a, b, default_form(a.flavor()))
}

/// Sign exponent of the modified bracket `{a_k, b_l} = (−1)^{s}[a_k, b_l]`.
pub fn modified_sign(convention: Convention, k: usize, b_parity: Parity, l: usize) -> Parity {
    let km1 = Parity::of(k as i64 - 1);
    match convention {
        Convention::WOfV => km1 * b_parity,
        Convention::VOfW => km1 * (b_parity + Parity::of(l as i64 - 1)),
    }
}

/// `{a, b}`: the bracket transported from the reversed side.
pub fn modified_bracket(a: &Cochain, b: &Cochain, convention: Convention) -> Result<Cochain> {
    let plain = bracket(a, b)?;
    let odd = modified_sign(convention, a.arity(), b.parity(), b.arity()).is_odd();
    Ok(plain.scale(&a.field().one().signed(odd)))
}

/// `[a, b]` for families: the sum over all pairs of parts.
pub fn bracket_families_with(a: &Family, b: &Family, form: GradingForm) -> Result<Family> {
    check_families(a, b)?;
    let mut out = Family::zero(a.space(), a.flavor());
    for x in a.parts() {
        for y in b.parts() {
            if x.arity() + y.arity() == 0 {
                continue;
            }
            out.add_part(&bracket_unchecked(x, y, form))?;
        }
    }
    Ok(out)
}

pub fn bracket_families(a: &Family, b: &Family) -> Result<Family> {
    bracket_families_with(a, b, default_form(a.flavor()))
}

pub fn modified_bracket_families(a: &Family, b: &Family, convention: Convention) -> Result<Family> {
    check_families(a, b)?;
    let form = default_form(a.flavor());
    let mut out = Family::zero(a.space(), a.flavor());
    for x in a.parts() {
        for y in b.parts() {
            if x.arity() + y.arity() == 0 {
                continue;
            }
            let odd = modified_sign(convention, x.arity(), y.parity(), y.arity()).is_odd();
            out.add_part(&bracket_unchecked(x, y, form).scale(&x.field().one().signed(odd)))?;
        }
    }
    Ok(out)
}

fn check_families(a: &Family, b: &Family) -> Result<()> {
    if a.flavor() != b.flavor() || **a.space() != **b.space() {
        return Err(Error::arg("families live on different spaces or flavors"));
    }
    Ok(())
}

/// `d̂ = Σ_k d̂_k` on a sum of canonical words.
pub fn extend_family(family: &Family, form: GradingForm, sum: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for part in family.parts() {
        for (w, c) in sum.iter() {
            extend_into(part, form, w, c, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedSpace;
    use crate::graded::Parity::{Even, Odd};
    use crate::graded::Vector;

    fn nonassociative() -> Cochain {
        let v = GradedSpace::from_pairs(&[("a", Even), ("b", Even)]);
        let q = v.field();
        let mut m = Cochain::zero(&v, Flavor::Tensor, 2, Even);
        m.set(&[0, 0], Vector::basis(1, q)).unwrap();
        m.set(&[1, 0], Vector::basis(0, q)).unwrap();
        m
    }

    #[test]
    fn leibniz_extension_of_d1() {
        let v = GradedSpace::anonymous(&[Odd, Even]);
        let q = v.field();
        let mut d = Cochain::zero(&v, Flavor::Tensor, 1, Odd);
        d.set(&[0], Vector::basis(1, q)).unwrap();
        d.set(&[1], Vector::basis(0, q)).unwrap();
        let g = CoderivationGenerator::new(d, GradingForm::ParityOnly).unwrap();
        // d(e0⊗e0) = e1⊗e0 + (−1)^{1·1} e0⊗e1
        let s = g.extend(Flavor::Tensor, &[0, 0]).unwrap();
        assert_eq!(s.coefficient(&[1, 0]), Some(&q.one()));
        assert_eq!(s.coefficient(&[0, 1]), Some(&q.int(-1)));
    }

    #[test]
    fn product_form_sign_on_three_letters() {
        let m = nonassociative();
        let q = m.field();
        let g = CoderivationGenerator::natural(m);
        // m̂₂(a⊗a⊗a) = m(a,a)⊗a − a⊗m(a,a) = b⊗a − a⊗b
        let s = g.extend(Flavor::Tensor, &[0, 0, 0]).unwrap();
        assert_eq!(s.coefficient(&[1, 0]), Some(&q.one()));
        assert_eq!(s.coefficient(&[0, 1]), Some(&q.int(-1)));
        assert!(g.extend(Flavor::Tensor, &[0]).unwrap().is_zero());
        assert!(g.extend(Flavor::Exterior, &[0, 0]).is_err());
    }

    #[test]
    fn restriction_to_one_is_the_generator() {
        let m = nonassociative();
        let r = CoderivationGenerator::natural(m.clone()).restrict(1).unwrap();
        for t in m.space().all_tuples(2) {
            let img = r.apply(&t);
            let mut v = Vector::zero();
            for (w, c) in img.iter() {
                v.add_term(w[0], c.clone());
            }
            assert_eq!(v, m.evaluate_basis(&t).unwrap());
        }
    }

    #[test]
    fn nonassociative_self_bracket() {
        let m = nonassociative();
        let q = m.field();
        let b = bracket(&m, &m).unwrap();
        assert_eq!(b.evaluate_basis(&[0, 0, 0]).unwrap(), Vector::basis(0, q).scaled(&q.int(2)));
    }

    #[test]
    fn odd_b2_modified_sign() {
        let v = GradedSpace::anonymous(&[Even, Odd]);
        let q = v.field();
        let mut a = Cochain::zero(&v, Flavor::Tensor, 2, Even);
        a.set(&[1, 1], Vector::basis(0, q)).unwrap();
        let mut b = Cochain::zero(&v, Flavor::Tensor, 2, Odd);
        b.set(&[0, 0], Vector::basis(1, q)).unwrap();
        let plain = bracket(&a, &b).unwrap();
        assert!(!plain.is_zero());
        assert_eq!(modified_bracket(&a, &b, Convention::WOfV).unwrap(), plain.negated());
    }

    #[test]
    fn coderivation_axiom_small() {
        let v = GradedSpace::anonymous(&[Even, Odd]);
        let q = v.field();
        for flavor in [Flavor::Tensor, Flavor::Symmetric, Flavor::Exterior] {
            let mut d = Cochain::zero(&v, flavor, 2, Odd);
            for t in v.canonical_tuples(flavor, 2) {
                let out = if v.tuple_parity(&t).is_odd() { 0 } else { 1 };
                d.set(&t, Vector::basis(out, q)).unwrap();
            }
            let g = CoderivationGenerator::natural(d);
            for n in 1..=4 {
                for t in v.canonical_tuples(flavor, n) {
                    assert!(g.coderivation_defect(&t).is_empty(), "{flavor} {t:?}");
                }
            }
        }
    }
}
