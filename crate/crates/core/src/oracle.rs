//! Independent dense reference computations used to cross-check the main
//! modules: textbook Hochschild and Chevalley–Eilenberg differentials,
//! dense ranks, and a direct first-order expansion of deformed relations.
//!
//! Nothing here calls the sign code of the main modules. Koszul signs are
//! computed in closed form (one factor per inversion of odd letters) and
//! unshuffles are enumerated from bit masks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::cochain::{Cochain, Family};
use crate::coderiv::Convention;
use crate::error::{Error, Result};
use crate::graded::{Flavor, GradedSpace, Parity, Vector};
use crate::linalg::bareiss_rank;
use crate::scalar::{Field, Scalar};
use crate::structures::{InfinityStructure, Kind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub location: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub agreement: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl OracleReport {
    pub fn agree(name: impl Into<String>) -> Self {
        OracleReport { name: name.into(), agreement: true, first_discrepancy: None }
    }

    pub fn disagree(name: impl Into<String>, d: Discrepancy) -> Self {
        OracleReport { name: name.into(), agreement: false, first_discrepancy: Some(d) }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_discrepancy {
            None => write!(f, "{}: agree", self.name),
            Some(d) => write!(f, "{}: differ at {} (expected {}, got {})", self.name, d.location, d.expected, d.got),
        }
    }
}

/// `(−1)^{#inversions}` and `ε` in closed form: `ε(σ; v)` is the parity of
/// the number of pairs `i < j` with `σ(i) > σ(j)` and both letters odd.
/// `images` is 1-indexed; `parities[k]` is the parity of `v_{k+1}`.
pub fn epsilon_closed_form(images: &[usize], parities: &[Parity]) -> (bool, bool) {
    let mut inversions = false;
    let mut eps = false;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions = !inversions;
                if parities[images[i] - 1].is_odd() && parities[images[j] - 1].is_odd() {
                    eps = !eps;
                }
            }
        }
    }
    (inversions, eps)
}

/// Unshuffles of type `(p, q)` as image lists, from bit masks.
pub fn unshuffles_by_mask(p: usize, q: usize) -> Vec<Vec<usize>> {
    let n = p + q;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let rest = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| i + 1);
        out.push(first.into_iter().chain(rest).collect());
    }
    out
}

/// Value of a cochain on an arbitrary basis tuple, sorting the arguments
/// with the closed-form signs.
fn eval(c: &Cochain, tuple: &[usize]) -> Vector {
    let space = c.space();
    let key = match c.flavor() {
        Flavor::Tensor => return c.value_at_canonical(tuple).cloned().unwrap_or_default(),
        f => f,
    };
    let mut order: Vec<usize> = (1..=tuple.len()).collect();
    order.sort_by_key(|&i| tuple[i - 1]);
    let sorted: Vec<usize> = order.iter().map(|&i| tuple[i - 1]).collect();
    for w in sorted.windows(2) {
        let even = !space.parity(w[0]).is_odd();
        let dead = match key {
            Flavor::Exterior => even,
            _ => !even,
        };
        if w[0] == w[1] && dead {
            return Vector::zero();
        }
    }
    let (inv, eps) = epsilon_closed_form(&order, &space.tuple_parities(tuple));
    let odd = eps ^ (key == Flavor::Exterior && inv);
    let v = c.value_at_canonical(&sorted).cloned().unwrap_or_default();
    if odd {
        v.negated()
    } else {
        v
    }
}

fn lex_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    (0..d.pow(n as u32))
        .map(|mut x| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = x % d;
                x /= d;
            }
            t
        })
        .collect()
}

fn increasing_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    lex_tuples(d, n).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1])).collect()
}

fn tuple_parity(space: &GradedSpace, t: &[usize]) -> Parity {
    Parity::sum(t.iter().map(|&i| space.parity(i)))
}

/// Textbook Hochschild coboundary of `φ` for the graded associative
/// product `m`:
/// `(δφ)(a₁,…,a_{p+1}) = (−1)^{|a₁||φ|} a₁φ(a₂,…) + Σ_i (−1)^i φ(…,a_i a_{i+1},…) + (−1)^{p+1} φ(a₁,…,a_p) a_{p+1}`.
pub fn bar_differential_oracle(m: &Cochain, phi: &Cochain) -> Result<Cochain> {
    if m.flavor() != Flavor::Tensor || phi.flavor() != Flavor::Tensor || m.arity() != 2 || m.parity().is_odd() {
        return Err(Error::arg("the bar oracle needs an even tensor product of arity 2 and a tensor cochain"));
    }
    let space = phi.space();
    let p = phi.arity();
    let mut out = Cochain::zero(space, Flavor::Tensor, p + 1, phi.parity());
    let mul = |x: &Vector, y: &Vector| -> Vector {
        let mut r = Vector::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                r.add_scaled(&(a * b), &eval(m, &[i, j]));
            }
        }
        r
    };
    let field = space.field();
    for t in lex_tuples(space.dim(), p + 1) {
        let mut acc = Vector::zero();
        let first = Vector::basis(t[0], field);
        let sign = (space.parity(t[0]) * phi.parity()).is_odd();
        acc.add_scaled(&field.one().signed(sign), &mul(&first, &eval(phi, &t[1..])));
        for i in 0..p {
            let prod = eval(m, &[t[i], t[i + 1]]);
            for (j, c) in prod.iter() {
                let mut args = t[..i].to_vec();
                args.push(j);
                args.extend_from_slice(&t[i + 2..]);
                acc.add_scaled(&c.clone().signed((i + 1) % 2 == 1), &eval(phi, &args));
            }
        }
        let last = Vector::basis(t[p], field);
        acc.add_scaled(&field.one().signed((p + 1) % 2 == 1), &mul(&eval(phi, &t[..p]), &last));
        if !acc.is_zero() {
            out.set(&t, acc)?;
        }
    }
    Ok(out)
}

fn require_even_lie(l: &Cochain) -> Result<()> {
    if l.flavor() != Flavor::Exterior || l.arity() != 2 || l.space().parities().iter().any(|p| p.is_odd()) {
        return Err(Error::arg("the Chevalley–Eilenberg oracle needs a bracket on an all-even space"));
    }
    Ok(())
}

/// Textbook Chevalley–Eilenberg coboundary with adjoint coefficients:
/// `(dφ)(x₀,…,x_p) = Σ_i (−1)^i [x_i, φ(…x̂_i…)] + Σ_{i<j} (−1)^{i+j} φ([x_i,x_j], …x̂_i…x̂_j…)`.
pub fn ce_differential_oracle(l: &Cochain, phi: &Cochain) -> Result<Cochain> {
    require_even_lie(l)?;
    if phi.flavor() != Flavor::Exterior {
        return Err(Error::arg("CE cochains are exterior"));
    }
    let space = phi.space();
    let p = phi.arity();
    let mut out = Cochain::zero(space, Flavor::Exterior, p + 1, phi.parity());
    for t in increasing_tuples(space.dim(), p + 1) {
        let mut acc = Vector::zero();
        for i in 0..=p {
            let mut rest = t.clone();
            rest.remove(i);
            let value = eval(phi, &rest);
            for (j, c) in value.iter() {
                acc.add_scaled(&c.clone().signed(i % 2 == 1), &eval(l, &[t[i], j]));
            }
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let br = eval(l, &[t[i], t[j]]);
                let rest: Vec<usize> = (0..=p).filter(|&x| x != i && x != j).map(|x| t[x]).collect();
                for (m, c) in br.iter() {
                    let mut args = vec![m];
                    args.extend_from_slice(&rest);
                    acc.add_scaled(&c.clone().signed((i + j) % 2 == 1), &eval(phi, &args));
                }
            }
        }
        if !acc.is_zero() {
            out.set(&t, acc)?;
        }
    }
    Ok(out)
}

/// Rank of a dense matrix: fraction-free elimination over the rationals
/// (rows scaled to integers first), plain elimination over `F_p`.
pub fn dense_rank(field: Field, rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field {
        Field::Rationals => {
            let ints = rows
                .iter()
                .map(|r| {
                    let lcm = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.to_rational().expect("rational").denom()));
                    r.iter()
                        .map(|x| {
                            let q = x.to_rational().expect("rational");
                            q.numer() * (&lcm / q.denom())
                        })
                        .collect()
                })
                .collect();
            bareiss_rank(ints)
        }
        Field::Prime(p) => {
            let mut m: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| r.iter().map(|x| if let Scalar::Fp(v, _) = x { *v } else { 0 }).collect())
                .collect();
            let cols = m[0].len();
            let mut rank = 0;
            for col in 0..cols {
                let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
                m.swap(rank, piv);
                let inv = mod_pow(m[rank][col], p - 2, p);
                for r in 0..m.len() {
                    if r != rank && m[r][col] != 0 {
                        let f = m[r][col] * inv % p;
                        for c in 0..cols {
                            m[r][c] = (m[r][c] + p - f * m[rank][c] % p) % p;
                        }
                    }
                }
                rank += 1;
            }
            rank
        }
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Dense matrix of a linear map given on basis vectors `0..cols`; each
/// image is a list of (row, coefficient) pairs.
fn dense(field: Field, rows: usize, columns: &[Vec<(usize, Scalar)>]) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![field.zero(); columns.len()]; rows];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            m[*i][j] += c;
        }
    }
    m
}

/// Cohomology dimensions of a complex given by dense differentials
/// `D_p : C^p → C^{p+1}` for `p` in `start..=end`, with `C^start` the bottom.
pub fn dims_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len()).map(|i| dims[i] - ranks[i] - if i == 0 { 0 } else { ranks[i - 1] }).collect()
}

fn cochain_columns(
    space: &std::sync::Arc<GradedSpace>,
    flavor: Flavor,
    p: usize,
    tuples_in: &[Vec<usize>],
    tuples_out: &[Vec<usize>],
    diff: &dyn Fn(&Cochain) -> Result<Cochain>,
) -> Result<Vec<Vec<(usize, Scalar)>>> {
    let d = space.dim();
    let index: BTreeMap<&Vec<usize>, usize> = tuples_out.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut cols = Vec::new();
    for t in tuples_in {
        for j in 0..d {
            let parity = space.parity(j) + tuple_parity(space, t);
            let mut e = Cochain::zero(space, flavor, p, parity);
            e.set(t, Vector::basis(j, space.field()))?;
            let img = diff(&e)?;
            let mut col = Vec::new();
            for (tt, v) in img.entries() {
                for (k, c) in v.iter() {
                    col.push((index[tt] * d + k, c.clone()));
                }
            }
            cols.push(col);
        }
    }
    Ok(cols)
}

/// Hochschild cohomology dimensions of `(V, m)` with adjoint coefficients,
/// arities `start..=end`, from the bar oracle and dense ranks.
pub fn hochschild_dims_oracle(m: &Cochain, start: usize, end: usize) -> Result<Vec<usize>> {
    let space = m.space();
    let d = space.dim();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for p in start..=end {
        let tin = lex_tuples(d, p);
        let tout = lex_tuples(d, p + 1);
        let cols = cochain_columns(space, Flavor::Tensor, p, &tin, &tout, &|e| bar_differential_oracle(m, e))?;
        dims.push(tin.len() * d);
        ranks.push(dense_rank(space.field(), &dense(space.field(), tout.len() * d, &cols)));
    }
    Ok(dims_from_ranks(&dims, &ranks))
}

/// Lie algebra cohomology with adjoint coefficients, arities `start..=end`.
pub fn ce_adjoint_dims_oracle(l: &Cochain, start: usize, end: usize) -> Result<Vec<usize>> {
    require_even_lie(l)?;
    let space = l.space();
    let d = space.dim();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for p in start..=end {
        let tin = increasing_tuples(d, p);
        let tout = increasing_tuples(d, p + 1);
        let cols = cochain_columns(space, Flavor::Exterior, p, &tin, &tout, &|e| ce_differential_oracle(l, e))?;
        dims.push(tin.len() * d);
        ranks.push(dense_rank(space.field(), &dense(space.field(), tout.len() * d, &cols)));
    }
    Ok(dims_from_ranks(&dims, &ranks))
}

/// `H^p(V, k)` for `p` in `start..=end`: cochains `Λ^p V → k` with
/// `(df)(x₀,…,x_p) = Σ_{i<j} (−1)^{i+j} f([x_i,x_j], …x̂_i…x̂_j…)`.
pub fn ce_trivial_dims(l: &Cochain, start: usize, end: usize) -> Result<Vec<usize>> {
    require_even_lie(l)?;
    let space = l.space();
    let field = space.field();
    let d = space.dim();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for p in start..=end {
        let tin = increasing_tuples(d, p);
        let tout = increasing_tuples(d, p + 1);
        let index: BTreeMap<&Vec<usize>, usize> = tin.iter().enumerate().map(|(i, t)| (t, i)).collect();
        // Row r of d_p: the functional f ↦ (df)(tout[r]).
        let mut m = vec![vec![field.zero(); tin.len()]; tout.len()];
        for (r, t) in tout.iter().enumerate() {
            for i in 0..=p {
                for j in i + 1..=p {
                    let rest: Vec<usize> = (0..=p).filter(|&x| x != i && x != j).map(|x| t[x]).collect();
                    for (k, c) in eval(l, &[t[i], t[j]]).iter() {
                        let mut args = vec![k];
                        args.extend_from_slice(&rest);
                        if args[1..].contains(&k) {
                            continue;
                        }
                        let mut order: Vec<usize> = (1..=args.len()).collect();
                        order.sort_by_key(|&x| args[x - 1]);
                        let (inv, _) = epsilon_closed_form(&order, &vec![Parity::Even; args.len()]);
                        let sorted: Vec<usize> = order.iter().map(|&x| args[x - 1]).collect();
                        let coef = c.clone().signed(inv ^ ((i + j) % 2 == 1));
                        m[r][index[&sorted]] += &coef;
                    }
                }
            }
        }
        dims.push(tin.len());
        ranks.push(dense_rank(field, &m));
    }
    Ok(dims_from_ranks(&dims, &ranks))
}

/// The coefficient of `u` in the relations of `m + uλ` (with `u² = 0` and
/// `|u|` given), evaluated on every basis tuple and assembled into cochains
/// of arity `n` for `n ≤ 2N − 1`.
pub fn first_order_expansion_oracle(s: &InfinityStructure, lambda: &Family, u: Parity) -> Result<Family> {
    if lambda.flavor() != s.flavor() || **lambda.space() != **s.space() {
        return Err(Error::arg("deformation direction lives on a different space or flavor"));
    }
    let space = s.space();
    let top = s.parts().max_arity().into_iter().chain(lambda.max_arity()).max().unwrap_or(0);
    let m_of = |k: usize| s.parts().parts_of_arity(k).cloned().collect::<Vec<_>>();
    let lam_of = |k: usize| lambda.parts_of_arity(k).cloned().collect::<Vec<_>>();
    let apply = |maps: &[Cochain], args: &[usize]| -> Vector {
        let mut v = Vector::zero();
        for c in maps {
            v.add_scaled(&space.field().one(), &eval(c, args));
        }
        v
    };
    let mut out = Family::zero(space, s.flavor());
    for n in 1..=(2 * top).saturating_sub(1) {
        let parity = Parity::of(n as i64 + 1) + u;
        let mut part = Cochain::zero(space, s.flavor(), n, parity);
        let tuples = match s.flavor() {
            Flavor::Tensor => lex_tuples(space.dim(), n),
            _ => space.canonical_tuples(s.flavor(), n),
        };
        for t in tuples {
            let mut acc = Vector::zero();
            for k in 1..=n {
                let outer_arity = n + 1 - k;
                let (m_in, l_in) = (m_of(k), lam_of(k));
                let (m_out, l_out) = (m_of(outer_arity), lam_of(outer_arity));
                let mut term = |inner_args: &[usize], before: &[usize], after: &[usize], sign: bool, prefix: Parity| {
                    // λ outside, m inside; then m outside, λ inside with u moved
                    // to the front past the outer map and the letters before it.
                    for (inner, outer, extra) in
                        [(&m_in, &l_out, false), (&l_in, &m_out, (u * (Parity::of(outer_arity as i64) + prefix)).is_odd())]
                    {
                        let value = apply(inner, inner_args);
                        for (j, c) in value.iter() {
                            let mut args = before.to_vec();
                            args.push(j);
                            args.extend_from_slice(after);
                            acc.add_scaled(&c.clone().signed(sign ^ extra), &apply(outer, &args));
                        }
                    }
                };
                match s.kind() {
                    Kind::AInfinity => {
                        for i in 0..=n - k {
                            let prefix = tuple_parity(space, &t[..i]);
                            let kk = Parity::of(k as i64);
                            let sign = match s.convention() {
                                Convention::WOfV => {
                                    prefix * kk + Parity::of((i * (k + 1)) as i64) + Parity::of((n - k) as i64) * kk
                                }
                                Convention::VOfW => {
                                    prefix * kk + Parity::of((i * (k + 1)) as i64) + Parity::of((n - k) as i64)
                                }
                            };
                            term(&t[i..i + k], &t[..i], &t[i + k..], sign.is_odd(), prefix);
                        }
                    }
                    Kind::LInfinity => {
                        let conv = match s.convention() {
                            Convention::WOfV => ((outer_arity + 1) * k) % 2 == 1,
                            Convention::VOfW => (outer_arity + 1) % 2 == 1,
                        };
                        for sigma in unshuffles_by_mask(k, n - k) {
                            let (inv, eps) = epsilon_closed_form(&sigma, &space.tuple_parities(&t));
                            let arranged: Vec<usize> = sigma.iter().map(|&x| t[x - 1]).collect();
                            term(&arranged[..k], &[], &arranged[k..], conv ^ inv ^ eps, Parity::Even);
                        }
                    }
                }
            }
            if !acc.is_zero() {
                part.set(&t, acc)?;
            }
        }
        out.add_part(&part)?;
    }
    Ok(out)
}

/// Compares cochain families of each arity up to one sign per arity, fixed
/// by the first nonzero comparison and reused afterwards.
#[derive(Debug, Clone, Default)]
pub struct SignMatcher {
    signs: BTreeMap<usize, bool>,
}

impl SignMatcher {
    pub fn new() -> Self {
        SignMatcher::default()
    }

    pub fn signs(&self) -> &BTreeMap<usize, bool> {
        &self.signs
    }

    /// `main` and `oracle` must agree in every arity up to the recorded sign.
    pub fn check(&mut self, name: &str, main: &Family, oracle: &Family) -> OracleReport {
        let arities: std::collections::BTreeSet<usize> = main.arities().into_iter().chain(oracle.arities()).collect();
        for n in arities {
            let pick = |f: &Family| {
                Family::from_parts(f.space(), f.flavor(), f.parts_of_arity(n).cloned()).expect("same space")
            };
            let (a, b) = (pick(main), pick(oracle));
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let negated = match self.signs.get(&n) {
                Some(&neg) => neg,
                None if a == b => false,
                None if a == b.negated() => true,
                None => {
                    return OracleReport::disagree(
                        name,
                        Discrepancy { location: format!("arity {n}"), expected: describe(&b), got: describe(&a) },
                    )
                }
            };
            let want = if negated { b.negated() } else { b };
            if a != want {
                return OracleReport::disagree(
                    name,
                    Discrepancy { location: format!("arity {n}"), expected: describe(&want), got: describe(&a) },
                );
            }
            self.signs.insert(n, negated);
        }
        OracleReport::agree(name)
    }
}

fn describe(f: &Family) -> String {
    let lines: Vec<String> = f.parts().flat_map(|p| p.format_entries("f")).collect();
    if lines.is_empty() {
        "0".into()
    } else {
        lines.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Parity::Even;
    use crate::perm::{koszul_epsilon, sign_of_permutation, unshuffles, Permutation};

    #[test]
    fn closed_form_matches_transpositions() {
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                for mask in 0..(1 << n) {
                    let parities: Vec<Parity> = (0..n).map(|i| Parity::from(mask & (1 << i) != 0)).collect();
                    let (inv, eps) = epsilon_closed_form(sigma.images(), &parities);
                    assert_eq!(eps, koszul_epsilon(&sigma, &parities).unwrap().is_odd());
                    assert_eq!(inv, sign_of_permutation(&sigma).is_odd());
                }
            }
        }
    }

    #[test]
    fn mask_unshuffles_match() {
        for p in 0..4 {
            for q in 0..4 {
                if p + q == 0 {
                    continue;
                }
                let mut a: Vec<Vec<usize>> = unshuffles(p, q).iter().map(|s| s.images().to_vec()).collect();
                let mut b = unshuffles_by_mask(p, q);
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn trivial_ce_of_abelian_is_exterior_algebra() {
        let v = GradedSpace::anonymous(&[Even, Even]);
        let l = Cochain::zero(&v, Flavor::Exterior, 2, Even);
        assert_eq!(ce_trivial_dims(&l, 0, 3).unwrap(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn dense_rank_agrees_across_fields() {
        let q = Field::Rationals;
        let rows = vec![vec![q.int(1), q.int(2)], vec![q.int(2), q.int(4)]];
        assert_eq!(dense_rank(q, &rows), 1);
        let f5 = Field::prime(5).unwrap();
        let rows = vec![vec![f5.int(1), f5.int(2)], vec![f5.int(3), f5.int(1)]];
        assert_eq!(dense_rank(f5, &rows), 1);
    }
}
