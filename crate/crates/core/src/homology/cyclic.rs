//! Cyclic cochains with respect to an inner product, the cyclic coboundary
//! on scalar cochains, and cyclic cohomology.
//!
//! On the A∞ side a scalar cochain `f ∈ C^n(V,k)` takes `n + 1` arguments
//! and is cyclic when
//! `f(v₁,…,v_{n+1}) = (−1)^{n + v_{n+1}(v₁+⋯+v_n)} f(v_{n+1},v₁,…,v_n)`.
//! On the L∞ side cyclic means graded antisymmetric, and such cochains are
//! stored with exterior flavor.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{run_window, solve_membership, CohomologyReport, GradedComplex, Membership, Window};
use crate::cochain::{tilde, Cochain, Family, ScalarCochain};
use crate::coderiv::modified_sign;
use crate::error::{Error, Result};
use crate::graded::{Flavor, GradedSpace, Parity, Vector};
use crate::inner::InnerProduct;
use crate::linalg::{reduce_map, Echelon};
use crate::perm::{koszul_sign_unchecked, sign_of_permutation, unshuffles};
use crate::scalar::Field;
use crate::structures::{InfinityStructure, Kind};

/// Scalar cochains of several degrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScalarFamily {
    parts: BTreeMap<usize, ScalarCochain>,
}

impl ScalarFamily {
    pub fn single(f: ScalarCochain) -> Self {
        let mut out = ScalarFamily::default();
        out.add_part(&f).expect("empty family");
        out
    }

    pub fn add_part(&mut self, f: &ScalarCochain) -> Result<()> {
        if f.is_zero() {
            return Ok(());
        }
        let sum = match self.parts.get(&f.degree()) {
            Some(g) => g.add(f)?,
            None => f.clone(),
        };
        if sum.is_zero() {
            self.parts.remove(&f.degree());
        } else {
            self.parts.insert(f.degree(), sum);
        }
        Ok(())
    }

    pub fn part(&self, degree: usize) -> Option<&ScalarCochain> {
        self.parts.get(&degree)
    }

    pub fn parts(&self) -> impl Iterator<Item = &ScalarCochain> {
        self.parts.values()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }
}

/// First tuple violating `⟨φ(v₁,…,v_k), v_{k+1}⟩ = (−1)^{k + v₁|φ|} ⟨v₁, φ(v₂,…,v_{k+1})⟩`
/// (tensor flavor) or graded antisymmetry of `φ̃` (exterior flavor).
pub fn cyclic_failure(phi: &Cochain, ip: &InnerProduct) -> Result<Option<Vec<usize>>> {
    ip.check_space(phi.space())?;
    let space = phi.space();
    let field = space.field();
    let k = phi.arity();
    match phi.flavor() {
        Flavor::Tensor => {
            for t in space.all_tuples(k + 1) {
                let left = ip.pair(&phi.evaluate_unchecked(&t[..k]), &Vector::basis(t[k], field));
                let right = ip.pair(&Vector::basis(t[0], field), &phi.evaluate_unchecked(&t[1..]));
                let odd = Parity::of(k as i64) + space.parity(t[0]) * phi.parity();
                if left != right.signed(odd.is_odd()) {
                    return Ok(Some(t));
                }
            }
            Ok(None)
        }
        Flavor::Exterior => Ok(antisymmetry_failure(&tilde(phi, ip)?)),
        Flavor::Symmetric => Err(Error::arg("cyclicity is defined for tensor and exterior cochains")),
    }
}

pub fn is_cyclic(phi: &Cochain, ip: &InnerProduct) -> Result<bool> {
    Ok(cyclic_failure(phi, ip)?.is_none())
}

/// Every part is cyclic.
pub fn family_is_cyclic(family: &Family, ip: &InnerProduct) -> Result<bool> {
    for p in family.parts() {
        if !is_cyclic(p, ip)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The structure's parts are all cyclic, or the first failing part's arity
/// and tuple.
pub fn check_invariant(s: &InfinityStructure, ip: &InnerProduct) -> Result<()> {
    for p in s.parts().parts() {
        if let Some(t) = cyclic_failure(p, ip)? {
            return Err(Error::validation(format!(
                "inner product is not invariant: part of arity {} fails the cyclic identity at {}",
                p.arity(),
                s.space().format_tuple(&t)
            )));
        }
    }
    Ok(())
}

/// `f(…,a,b,…) = −(−1)^{ab} f(…,b,a,…)` on tensor-flavor scalar cochains.
fn antisymmetry_failure(f: &ScalarCochain) -> Option<Vec<usize>> {
    let space = f.space();
    for t in space.all_tuples(f.args()) {
        let v = f.evaluate_unchecked(&t);
        for j in 0..t.len().saturating_sub(1) {
            let mut s = t.clone();
            s.swap(j, j + 1);
            let odd = !(space.parity(t[j]) * space.parity(t[j + 1])).is_odd();
            if v != f.evaluate_unchecked(&s).signed(odd) {
                return Some(t);
            }
        }
    }
    None
}

/// Reads an antisymmetric tensor-flavor scalar cochain as an exterior one.
pub fn to_exterior(f: &ScalarCochain) -> Result<ScalarCochain> {
    match f.flavor() {
        Flavor::Exterior => return Ok(f.clone()),
        Flavor::Tensor => {}
        Flavor::Symmetric => return Err(Error::arg("expected a tensor or exterior scalar cochain")),
    }
    if let Some(t) = antisymmetry_failure(f) {
        return Err(Error::validation(format!(
            "scalar cochain is not antisymmetric at {}",
            f.space().format_tuple(&t)
        )));
    }
    let space = f.space();
    let mut out = ScalarCochain::zero(space, Flavor::Exterior, f.degree());
    for t in space.canonical_tuples(Flavor::Exterior, f.args()) {
        out.set(&t, f.evaluate_unchecked(&t))?;
    }
    Ok(out)
}

fn tensor_only(f: &ScalarCochain) -> Result<()> {
    if f.flavor() != Flavor::Tensor {
        return Err(Error::arg("expected a tensor-flavor scalar cochain"));
    }
    Ok(())
}

/// Pointwise rotation test.
pub fn is_tilde_cyclic(f: &ScalarCochain) -> Result<bool> {
    tensor_only(f)?;
    let space = f.space();
    let n = f.degree();
    for t in space.all_tuples(n + 1) {
        let last = space.parity(t[n]);
        let odd = Parity::of(n as i64) + last * space.tuple_parity(&t[..n]);
        let mut rotated = vec![t[n]];
        rotated.extend_from_slice(&t[..n]);
        if f.evaluate_unchecked(&t) != f.evaluate_unchecked(&rotated).signed(odd.is_odd()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Block test: `f(α⊗β) = (−1)^{|α||β| + in} f(β⊗α)` for every split with
/// `α` of length `i`.
pub fn is_block_cyclic(f: &ScalarCochain) -> Result<bool> {
    tensor_only(f)?;
    let space = f.space();
    let n = f.degree();
    for t in space.all_tuples(n + 1) {
        let v = f.evaluate_unchecked(&t);
        for i in 1..=n {
            let (a, b) = t.split_at(i);
            let odd = space.tuple_parity(a) * space.tuple_parity(b) + Parity::of((i * n) as i64);
            let swapped: Vec<usize> = b.iter().chain(a).copied().collect();
            if v != f.evaluate_unchecked(&swapped).signed(odd.is_odd()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `C(f)(v₁,…,v_{n+1}) = Σ_i (−1)^{(v₁+⋯+v_i)(v_{i+1}+⋯+v_{n+1}) + ni} f(v_{i+1},…,v_i)`.
pub fn cyclicize(f: &ScalarCochain) -> Result<ScalarCochain> {
    tensor_only(f)?;
    let space = f.space();
    let n = f.degree();
    let mut out = ScalarCochain::zero(space, Flavor::Tensor, n);
    let zero = space.field().zero();
    for t in space.all_tuples(n + 1) {
        let mut acc = zero.clone();
        for i in 0..=n {
            let (a, b) = t.split_at(i);
            let odd = space.tuple_parity(a) * space.tuple_parity(b) + Parity::of((n * i) as i64);
            let rotated: Vec<usize> = b.iter().chain(a).copied().collect();
            acc += f.evaluate_unchecked(&rotated).signed(odd.is_odd());
        }
        out.set(&t, acc)?;
    }
    Ok(out)
}

/// `φ ↦ φ̃` on a family; exterior families give exterior scalar cochains
/// (which requires each `φ̃` to be antisymmetric).
pub fn tilde_family(family: &Family, ip: &InnerProduct) -> Result<ScalarFamily> {
    let mut out = ScalarFamily::default();
    for p in family.parts() {
        let t = tilde(p, ip)?;
        let t = if family.flavor() == Flavor::Exterior { to_exterior(&t)? } else { t };
        out.add_part(&t)?;
    }
    Ok(out)
}

fn scalar_flavor(kind: Kind) -> Flavor {
    match kind {
        Kind::AInfinity => Flavor::Tensor,
        Kind::LInfinity => Flavor::Exterior,
    }
}

/// The cyclic coboundary of a cyclic (A∞) or antisymmetric (L∞) scalar
/// cochain, by the explicit sum over rotations or unshuffles. It does not
/// use an inner product.
pub fn cyclic_coboundary(f: &ScalarCochain, s: &InfinityStructure) -> Result<ScalarFamily> {
    if **f.space() != **s.space() {
        return Err(Error::arg("scalar cochain and structure live on different spaces"));
    }
    let want = scalar_flavor(s.kind());
    if f.flavor() != want {
        return Err(Error::arg(format!("{} structures act on {want} scalar cochains", s.kind())));
    }
    if want == Flavor::Tensor && !is_tilde_cyclic(f)? {
        return Err(Error::arg("the cyclic coboundary is defined on cyclic scalar cochains"));
    }
    Ok(coboundary_unchecked(f, s))
}

fn coboundary_unchecked(f: &ScalarCochain, s: &InfinityStructure) -> ScalarFamily {
    let mut out = ScalarFamily::default();
    for m in s.parts().parts() {
        let part = match s.kind() {
            Kind::AInfinity => rotation_term(f, m, s),
            Kind::LInfinity => unshuffle_term(f, m, s),
        };
        out.add_part(&part).expect("same space");
    }
    out
}

/// `Σ_i (−1)^{(v₁+⋯+v_i)(v_{i+1}+⋯+v_{n+1}) + in + s} f(m_l(v_{i+1},…,v_{i+l}), v_{i+l+1},…,v_i)`
/// with `s` the modified-bracket sign of `{φ_k, m_l}`.
fn rotation_term(f: &ScalarCochain, m: &Cochain, s: &InfinityStructure) -> ScalarCochain {
    let space = f.space();
    let k = f.degree();
    let l = m.arity();
    let n = k + l - 1;
    let twist = modified_sign(s.convention(), k, m.parity(), l);
    let mut out = ScalarCochain::zero(space, Flavor::Tensor, n);
    for t in space.all_tuples(n + 1) {
        let mut acc = space.field().zero();
        for i in 0..=n {
            let (a, b) = t.split_at(i);
            let odd = space.tuple_parity(a) * space.tuple_parity(b) + Parity::of((i * n) as i64) + twist;
            let rotated: Vec<usize> = b.iter().chain(a).copied().collect();
            let value = m.evaluate_unchecked(&rotated[..l]);
            acc += f.evaluate_first_vector(&value, &rotated[l..]).signed(odd.is_odd());
        }
        out.set(&t, acc).expect("tensor tuple");
    }
    out
}

/// `Σ_{σ ∈ Sh(l,k)} (−1)^σ ε(σ) (−1)^s f(l_l(v_{σ(1)},…,v_{σ(l)}), v_{σ(l+1)},…)`.
fn unshuffle_term(f: &ScalarCochain, m: &Cochain, s: &InfinityStructure) -> ScalarCochain {
    let space = f.space();
    let k = f.degree();
    let l = m.arity();
    let n = k + l - 1;
    let twist = modified_sign(s.convention(), k, m.parity(), l);
    let shuffles = unshuffles(l, k);
    let mut out = ScalarCochain::zero(space, Flavor::Exterior, n);
    for t in space.canonical_tuples(Flavor::Exterior, n + 1) {
        let parities = space.tuple_parities(&t);
        let mut acc = space.field().zero();
        for sigma in &shuffles {
            let odd = sign_of_permutation(sigma) + koszul_sign_unchecked(sigma.images(), &parities) + twist;
            let arranged = sigma.rearrange(&t);
            let value = m.evaluate_unchecked(&arranged[..l]);
            acc += f.evaluate_first_vector(&value, &arranged[l..]).signed(odd.is_odd());
        }
        out.set(&t, acc).expect("canonical tuple");
    }
    out
}

struct CyclicComplex<'a> {
    structure: &'a InfinityStructure,
    flavor: Flavor,
    tuples: BTreeMap<usize, (Vec<Vec<usize>>, BTreeMap<Vec<usize>, usize>)>,
}

impl<'a> CyclicComplex<'a> {
    fn new(s: &'a InfinityStructure, top: usize) -> Self {
        let flavor = scalar_flavor(s.kind());
        let reach = top + s.parts().max_arity().unwrap_or(1).saturating_sub(1);
        let tuples = (0..=reach)
            .map(|n| {
                let list = s.space().canonical_tuples(flavor, n + 1);
                let index = list.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
                (n, (list, index))
            })
            .collect();
        CyclicComplex { structure: s, flavor, tuples }
    }

    fn space(&self) -> &Arc<GradedSpace> {
        self.structure.space()
    }

    fn cochain(&self, degree: usize, coords: &Vector) -> ScalarCochain {
        ScalarCochain::from_coordinates(self.space(), self.flavor, degree, &self.tuples[&degree].0, coords)
    }

    fn coordinates(&self, family: &ScalarFamily) -> BTreeMap<usize, Vector> {
        family.parts().map(|p| (p.degree(), p.coordinates(&self.tuples[&p.degree()].1))).collect()
    }
}

impl GradedComplex for CyclicComplex<'_> {
    fn field(&self) -> Field {
        self.space().field()
    }

    fn basis(&self, degree: usize) -> Vec<Vector> {
        let field = self.field();
        let size = self.tuples[&degree].0.len();
        if self.flavor == Flavor::Exterior {
            return (0..size).map(|i| Vector::basis(i, field)).collect();
        }
        cyclic_basis(self.space(), degree)
    }

    fn differential(&self, degree: usize, v: &Vector) -> BTreeMap<usize, Vector> {
        self.coordinates(&coboundary_unchecked(&self.cochain(degree, v), self.structure))
    }
}

/// Basis of the cyclic tensor scalar cochains of degree `n`, in coordinates
/// indexed by the position of each tuple in lexicographic order:
/// cyclicized elementary cochains, row reduced. When `n + 1` is zero in the
/// field the image of `C` can be too small, and the kernel of
/// `f ↦ f − (rotated f)` is used instead.
fn cyclic_basis(space: &Arc<GradedSpace>, n: usize) -> Vec<Vector> {
    let field = space.field();
    if field.int(n as i64 + 1).is_zero() {
        return rotation_kernel(space, n);
    }
    let index: BTreeMap<Vec<usize>, usize> =
        space.all_tuples(n + 1).into_iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut e = Echelon::new(field);
    for t in index.keys() {
        let f = ScalarCochain::elementary(space, Flavor::Tensor, t).expect("tensor tuple");
        e.insert(cyclicize(&f).expect("tensor flavor").coordinates(&index));
    }
    e.reduced_rows()
}

/// Kernel of `f ↦ f(v₁,…,v_{n+1}) − (−1)^{n + v_{n+1}(v₁+⋯+v_n)} f(v_{n+1},v₁,…,v_n)`.
fn rotation_kernel(space: &Arc<GradedSpace>, n: usize) -> Vec<Vector> {
    let field = space.field();
    let tuples = space.all_tuples(n + 1);
    let index: BTreeMap<&Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    // Row r is the constraint at tuple r; column j collects the coefficients
    // of the j-th unknown.
    let mut columns = vec![Vector::zero(); tuples.len()];
    for (r, t) in tuples.iter().enumerate() {
        let odd = Parity::of(n as i64) + space.parity(t[n]) * space.tuple_parity(&t[..n]);
        let mut rotated = vec![t[n]];
        rotated.extend_from_slice(&t[..n]);
        columns[r].add_term(r, field.one());
        columns[index[&rotated]].add_term(r, -field.one().signed(odd.is_odd()));
    }
    reduce_map(field, &columns).kernel
}

/// Cyclic cohomology over the window of degrees. With an inner product the
/// structure is first checked to be invariant; without one the cyclic
/// complex is built from the inner-product-free definition of cyclicity.
pub fn cyclic_cohomology(
    s: &InfinityStructure,
    ip: Option<&InnerProduct>,
    window: Window,
) -> Result<CohomologyReport<ScalarCochain>> {
    s.require_valid()?;
    if let Some(ip) = ip {
        check_invariant(s, ip)?;
    }
    let complex = CyclicComplex::new(s, window.end);
    Ok(run_window(&complex, window, s.is_pure(), |p, v| complex.cochain(p, v)))
}

/// Whether `λ̃ = D(β̃)` for a cyclic `β`, for cyclic `λ` and invariant `ip`.
pub fn is_cyclic_coboundary(
    s: &InfinityStructure,
    lambda: &Family,
    ip: &InnerProduct,
    lowest: usize,
) -> Result<Membership> {
    let target = tilde_family(lambda, ip)?;
    let top = target.parts().map(|p| p.degree()).max().unwrap_or(0);
    let complex = CyclicComplex::new(s, top);
    let coords = complex.coordinates(&target);
    Ok(solve_membership(&complex, lowest, &coords).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Parity::{Even, Odd};

    #[test]
    fn cyclicize_small_example() {
        let v = GradedSpace::anonymous(&[Even, Even]);
        let f = ScalarCochain::elementary(&v, Flavor::Tensor, &[0, 1]).unwrap();
        let c = cyclicize(&f).unwrap();
        assert_eq!(c.evaluate(&[0, 1]).unwrap(), v.field().one());
        assert_eq!(c.evaluate(&[1, 0]).unwrap(), v.field().int(-1));
        assert!(is_tilde_cyclic(&c).unwrap());
        assert!(!is_tilde_cyclic(&f).unwrap());
    }

    #[test]
    fn cyclic_basis_matches_rotation_kernel() {
        for parities in [&[Even, Even][..], &[Even, Odd], &[Odd, Odd]] {
            let v = GradedSpace::anonymous(parities);
            for n in 0..4 {
                assert_eq!(cyclic_basis(&v, n).len(), rotation_kernel(&v, n).len(), "n = {n}");
            }
        }
    }
}
