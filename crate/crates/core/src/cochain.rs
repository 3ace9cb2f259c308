//! Multilinear maps `V^k → V` (cochains) and `V^{n+1} → k` (scalar cochains)
//! in the tensor, symmetric and exterior flavors.
//!
//! Storage is sparse and keyed by canonical tuples; an absent key is zero.
//! Symmetric and exterior cochains are evaluated on arbitrary tuples by first
//! canonicalizing the tuple with its Koszul (resp. exterior) sign.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{canonicalize, Flavor, GradedSpace, Parity, Vector};
use crate::inner::InnerProduct;
use crate::scalar::{Field, Scalar};

/// Homogeneous cochain `V^k → V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    space: Arc<GradedSpace>,
    flavor: Flavor,
    arity: usize,
    parity: Parity,
    entries: BTreeMap<Vec<usize>, Vector>,
}

impl Cochain {
    pub fn zero(space: &Arc<GradedSpace>, flavor: Flavor, arity: usize, parity: Parity) -> Self {
        Cochain { space: space.clone(), flavor, arity, parity, entries: BTreeMap::new() }
    }

    /// The cochain sending the canonical form of `tuple` to `e_out` (and
    /// nothing else). Its parity is `|e_out| + |tuple|`.
    pub fn elementary(space: &Arc<GradedSpace>, flavor: Flavor, tuple: &[usize], out: usize) -> Result<Self> {
        let parity = space.parity(out) + space.tuple_parity(tuple);
        let mut c = Cochain::zero(space, flavor, tuple.len(), parity);
        c.set(tuple, Vector::basis(out, space.field()))?;
        Ok(c)
    }

    /// Every elementary cochain of the given arity, ordered by (tuple, output).
    pub fn elementary_basis(space: &Arc<GradedSpace>, flavor: Flavor, arity: usize) -> Vec<Cochain> {
        let mut out = Vec::new();
        for t in space.canonical_tuples(flavor, arity) {
            for j in 0..space.dim() {
                out.push(Cochain::elementary(space, flavor, &t, j).expect("canonical tuple"));
            }
        }
        out
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `(parity, arity − 1)`: the bidegree of the coderivation it generates.
    pub fn bidegree(&self) -> (Parity, i64) {
        (self.parity, self.arity as i64 - 1)
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored (canonical) entries.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.entries.iter()
    }

    /// Sets the value on `tuple`, which is canonicalized first (the sign is
    /// absorbed into the value). Fails if the value has the wrong parity or
    /// the tuple vanishes in the quotient while the value is nonzero.
    pub fn set(&mut self, tuple: &[usize], value: Vector) -> Result<()> {
        self.check_tuple(tuple)?;
        let tp = self.space.tuple_parity(tuple);
        for (j, _) in value.iter() {
            if j >= self.space.dim() {
                return Err(Error::arg(format!("output index {j} out of range")));
            }
            if self.space.parity(j) != self.parity + tp {
                return Err(Error::validation(format!(
                    "value {} on {} is not of parity {} + |tuple|",
                    value.format(&self.space),
                    self.space.format_tuple(tuple),
                    self.parity
                )));
            }
        }
        match canonicalize(self.flavor, self.space.parities(), tuple) {
            None if value.is_zero() => Ok(()),
            None => Err(Error::validation(format!(
                "{} vanishes in the {} algebra; it cannot carry a nonzero value",
                self.space.format_tuple(tuple),
                self.flavor
            ))),
            Some((sign, canon)) => {
                let value = if sign.is_odd() { value.negated() } else { value };
                if value.is_zero() {
                    self.entries.remove(&canon);
                } else {
                    self.entries.insert(canon, value);
                }
                Ok(())
            }
        }
    }

    /// Adds `value` to the entry on `tuple` (same rules as [`Cochain::set`]).
    pub fn accumulate(&mut self, tuple: &[usize], value: &Vector) -> Result<()> {
        let mut current = self.evaluate_basis(tuple)?;
        current.add_scaled(&self.field().one(), value);
        self.set(tuple, current)
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(Error::arg(format!("expected {} arguments, got {}", self.arity, tuple.len())));
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.space.dim()) {
            return Err(Error::arg(format!("basis index {bad} out of range")));
        }
        Ok(())
    }

    /// Value on a canonical tuple (no sign handling).
    pub fn value_at_canonical(&self, tuple: &[usize]) -> Option<&Vector> {
        self.entries.get(tuple)
    }

    /// Value on an arbitrary basis tuple.
    pub fn evaluate_basis(&self, tuple: &[usize]) -> Result<Vector> {
        self.check_tuple(tuple)?;
        Ok(self.evaluate_unchecked(tuple))
    }

    pub(crate) fn evaluate_unchecked(&self, tuple: &[usize]) -> Vector {
        match canonicalize(self.flavor, self.space.parities(), tuple) {
            None => Vector::zero(),
            Some((sign, canon)) => match self.entries.get(&canon) {
                None => Vector::zero(),
                Some(v) if sign.is_odd() => v.negated(),
                Some(v) => v.clone(),
            },
        }
    }

    /// Multilinear evaluation on vectors.
    pub fn evaluate(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::arg(format!("expected {} arguments, got {}", self.arity, args.len())));
        }
        let field = self.field();
        let mut out = Vector::zero();
        let mut tuple = Vec::with_capacity(self.arity);
        self.evaluate_rec(args, &mut tuple, field.one(), &mut out);
        Ok(out)
    }

    fn evaluate_rec(&self, args: &[Vector], tuple: &mut Vec<usize>, coef: Scalar, out: &mut Vector) {
        if tuple.len() == args.len() {
            out.add_scaled(&coef, &self.evaluate_unchecked(tuple));
            return;
        }
        for (i, c) in args[tuple.len()].iter() {
            if i >= self.space.dim() {
                continue;
            }
            tuple.push(i);
            self.evaluate_rec(args, tuple, &coef * c, out);
            tuple.pop();
        }
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.flavor != other.flavor || self.arity != other.arity || *self.space != *other.space {
            return Err(Error::arg(format!(
                "cannot combine {} cochain of arity {} with {} cochain of arity {}",
                self.flavor, self.arity, other.flavor, other.arity
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::arg("cannot add cochains of different parity"));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rhs = if self.is_zero() { return Ok(out) } else { other };
        let one = self.field().one();
        for (t, v) in &rhs.entries {
            let e = out.entries.entry(t.clone()).or_default();
            e.add_scaled(&one, v);
            if e.is_zero() {
                out.entries.remove(t);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        let mut out = Cochain::zero(&self.space, self.flavor, self.arity, self.parity);
        if s.is_zero() {
            return out;
        }
        out.entries = self.entries.iter().map(|(t, v)| (t.clone(), v.scaled(s))).collect();
        out
    }

    pub fn negated(&self) -> Cochain {
        self.scale(&-self.field().one())
    }

    /// Coordinates in the elementary basis of [`Cochain::elementary_basis`],
    /// keyed by `tuple_rank * dim + output`.
    pub fn coordinates(&self, tuple_index: &BTreeMap<Vec<usize>, usize>) -> Vector {
        let d = self.space.dim();
        let mut v = Vector::zero();
        for (t, val) in &self.entries {
            let r = tuple_index[t];
            for (j, c) in val.iter() {
                v.add_term(r * d + j, c.clone());
            }
        }
        v
    }

    /// Lines `name(a,b) = value`, one per stored entry.
    pub fn format_entries(&self, name: &str) -> Vec<String> {
        self.entries
            .iter()
            .map(|(t, v)| {
                let args: Vec<&str> = t.iter().map(|&i| self.space.name(i)).collect();
                format!("{name}({}) = {}", args.join(","), v.format(&self.space))
            })
            .collect()
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.format_entries("c");
        if lines.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", lines.join("; "))
        }
    }
}

/// Finite sum of homogeneous cochains of one flavor over one space, at most
/// one part per (arity, parity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    space: Arc<GradedSpace>,
    flavor: Flavor,
    parts: BTreeMap<(usize, Parity), Cochain>,
}

impl Family {
    pub fn zero(space: &Arc<GradedSpace>, flavor: Flavor) -> Self {
        Family { space: space.clone(), flavor, parts: BTreeMap::new() }
    }

    pub fn from_parts<I: IntoIterator<Item = Cochain>>(space: &Arc<GradedSpace>, flavor: Flavor, parts: I) -> Result<Self> {
        let mut f = Family::zero(space, flavor);
        for p in parts {
            f.add_part(&p)?;
        }
        Ok(f)
    }

    pub fn single(c: Cochain) -> Self {
        let mut f = Family::zero(&c.space.clone(), c.flavor);
        f.add_part(&c).expect("compatible");
        f
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn add_part(&mut self, c: &Cochain) -> Result<()> {
        if c.flavor != self.flavor || *c.space != *self.space {
            return Err(Error::arg("cochain does not belong to this family's space and flavor"));
        }
        if c.is_zero() {
            return Ok(());
        }
        let key = (c.arity, c.parity);
        let sum = match self.parts.get(&key) {
            Some(existing) => existing.add(c)?,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.parts.remove(&key);
        } else {
            self.parts.insert(key, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Family) -> Result<Family> {
        let mut out = self.clone();
        for p in other.parts() {
            out.add_part(p)?;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Family {
        let mut out = Family::zero(&self.space, self.flavor);
        for p in self.parts() {
            out.add_part(&p.scale(s)).expect("same space");
        }
        out
    }

    pub fn negated(&self) -> Family {
        self.scale(&-self.space.field().one())
    }

    pub fn parts(&self) -> impl Iterator<Item = &Cochain> {
        self.parts.values()
    }

    /// The (nonzero) parts of the given arity.
    pub fn parts_of_arity(&self, arity: usize) -> impl Iterator<Item = &Cochain> {
        self.parts.values().filter(move |c| c.arity == arity)
    }

    pub fn part(&self, arity: usize, parity: Parity) -> Option<&Cochain> {
        self.parts.get(&(arity, parity))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_arity(&self) -> Option<usize> {
        self.parts.keys().map(|(a, _)| *a).max()
    }

    pub fn arities(&self) -> Vec<usize> {
        let mut a: Vec<usize> = self.parts.keys().map(|(a, _)| *a).collect();
        a.dedup();
        a
    }

    /// Value of the arity-`tuple.len()` component on a basis tuple.
    pub fn evaluate_basis(&self, tuple: &[usize]) -> Vector {
        let mut out = Vector::zero();
        let one = self.space.field().one();
        for c in self.parts_of_arity(tuple.len()) {
            out.add_scaled(&one, &c.evaluate_unchecked(tuple));
        }
        out
    }
}

/// Multilinear map `V^{n+1} → k`. Tensor flavor stores every tuple; exterior
/// flavor stores canonical tuples and is graded antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarCochain {
    space: Arc<GradedSpace>,
    flavor: Flavor,
    degree: usize,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl ScalarCochain {
    /// Scalar cochain in `C^degree(V, k)`, i.e. taking `degree + 1` arguments.
    pub fn zero(space: &Arc<GradedSpace>, flavor: Flavor, degree: usize) -> Self {
        ScalarCochain { space: space.clone(), flavor, degree, entries: BTreeMap::new() }
    }

    /// Indicator of the canonical form of `tuple`.
    pub fn elementary(space: &Arc<GradedSpace>, flavor: Flavor, tuple: &[usize]) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::arg("scalar cochains take at least one argument"));
        }
        let mut s = ScalarCochain::zero(space, flavor, tuple.len() - 1);
        s.set(tuple, space.field().one())?;
        Ok(s)
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// `n` for a map on `n + 1` arguments.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn args(&self) -> usize {
        self.degree + 1
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn set(&mut self, tuple: &[usize], value: Scalar) -> Result<()> {
        if tuple.len() != self.args() {
            return Err(Error::arg(format!("expected {} arguments, got {}", self.args(), tuple.len())));
        }
        match canonicalize(self.flavor, self.space.parities(), tuple) {
            None if value.is_zero() => Ok(()),
            None => Err(Error::validation(format!(
                "{} vanishes in the exterior algebra",
                self.space.format_tuple(tuple)
            ))),
            Some((sign, canon)) => {
                let value = value.signed(sign.is_odd());
                if value.is_zero() {
                    self.entries.remove(&canon);
                } else {
                    self.entries.insert(canon, value);
                }
                Ok(())
            }
        }
    }

    pub fn add_at(&mut self, tuple: &[usize], value: &Scalar) -> Result<()> {
        let v = self.evaluate(tuple)? + value;
        self.set(tuple, v)
    }

    pub fn evaluate(&self, tuple: &[usize]) -> Result<Scalar> {
        if tuple.len() != self.args() {
            return Err(Error::arg(format!("expected {} arguments, got {}", self.args(), tuple.len())));
        }
        Ok(self.evaluate_unchecked(tuple))
    }

    pub(crate) fn evaluate_unchecked(&self, tuple: &[usize]) -> Scalar {
        let field = self.space.field();
        match canonicalize(self.flavor, self.space.parities(), tuple) {
            None => field.zero(),
            Some((sign, canon)) => match self.entries.get(&canon) {
                None => field.zero(),
                Some(v) => v.clone().signed(sign.is_odd()),
            },
        }
    }

    /// Evaluation with the first argument a vector and the rest basis letters.
    pub(crate) fn evaluate_first_vector(&self, first: &Vector, rest: &[usize]) -> Scalar {
        let mut acc = self.space.field().zero();
        let mut tuple = Vec::with_capacity(rest.len() + 1);
        for (i, c) in first.iter() {
            tuple.clear();
            tuple.push(i);
            tuple.extend_from_slice(rest);
            let v = self.evaluate_unchecked(&tuple);
            if !v.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    pub fn add(&self, other: &ScalarCochain) -> Result<ScalarCochain> {
        if self.flavor != other.flavor || self.degree != other.degree || *self.space != *other.space {
            return Err(Error::arg("incompatible scalar cochains"));
        }
        let mut out = self.clone();
        for (t, c) in &other.entries {
            let e = out.entries.entry(t.clone()).or_insert_with(|| self.space.field().zero());
            *e += c;
            if e.is_zero() {
                out.entries.remove(t);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> ScalarCochain {
        let mut out = ScalarCochain::zero(&self.space, self.flavor, self.degree);
        if !s.is_zero() {
            out.entries = self.entries.iter().map(|(t, c)| (t.clone(), c * s)).collect();
        }
        out
    }

    /// Coordinates keyed by the position of each canonical tuple.
    pub fn coordinates(&self, tuple_index: &BTreeMap<Vec<usize>, usize>) -> Vector {
        Vector::from_terms(self.entries.iter().map(|(t, c)| (tuple_index[t], c.clone())))
    }

    pub fn from_coordinates(
        space: &Arc<GradedSpace>,
        flavor: Flavor,
        degree: usize,
        tuples: &[Vec<usize>],
        coords: &Vector,
    ) -> ScalarCochain {
        let mut out = ScalarCochain::zero(space, flavor, degree);
        for (i, c) in coords.iter() {
            out.entries.insert(tuples[i].clone(), c.clone());
        }
        out
    }
}

/// `φ̃(v_1, …, v_{k+1}) = ⟨φ(v_1, …, v_k), v_{k+1}⟩`.
///
/// Exterior-flavor cochains give exterior-flavor scalar cochains; the caller
/// is responsible for the result actually being antisymmetric (that is the
/// cyclicity condition). Entries are read off on canonical tuples.
pub fn tilde(c: &Cochain, ip: &InnerProduct) -> Result<ScalarCochain> {
    ip.check_space(c.space())?;
    let space = c.space();
    let mut out = ScalarCochain::zero(space, Flavor::Tensor, c.arity());
    for t in space.all_tuples(c.arity() + 1) {
        let (args, last) = t.split_at(c.arity());
        let v = c.evaluate_unchecked(args);
        let val = ip.pair(&v, &Vector::basis(last[0], space.field()));
        if !val.is_zero() {
            out.entries.insert(t, val);
        }
    }
    Ok(out)
}

/// Inverse of [`tilde`]: the unique cochain `φ` (as a family of homogeneous
/// parts) with `φ̃ = s`. Requires a nondegenerate inner product.
pub fn untilde(s: &ScalarCochain, ip: &InnerProduct, flavor: Flavor) -> Result<Family> {
    ip.check_space(s.space())?;
    if s.args() == 0 {
        return Err(Error::arg("scalar cochain without arguments"));
    }
    let space = s.space();
    let arity = s.degree();
    let inverse = ip.inverse();
    let d = space.dim();
    let mut by_parity: BTreeMap<Parity, Cochain> = BTreeMap::new();
    for t in space.canonical_tuples(flavor, arity) {
        // φ(t) = Σ_j c_j e_j with Σ_j c_j ⟨e_j, e_i⟩ = s(t, i)  ⇒  c = G^{-T} s
        let rhs: Vec<Scalar> = (0..d)
            .map(|i| {
                let mut full = t.clone();
                full.push(i);
                s.evaluate_unchecked(&full)
            })
            .collect();
        for j in 0..d {
            let mut cj = space.field().zero();
            for (i, si) in rhs.iter().enumerate() {
                if !si.is_zero() {
                    cj += &inverse[i][j] * si;
                }
            }
            if cj.is_zero() {
                continue;
            }
            let parity = space.parity(j) + space.tuple_parity(&t);
            let part = by_parity.entry(parity).or_insert_with(|| Cochain::zero(space, flavor, arity, parity));
            let mut v = part.value_at_canonical(&t).cloned().unwrap_or_default();
            v.add_term(j, cj);
            part.set(&t, v)?;
        }
    }
    Family::from_parts(space, flavor, by_parity.into_values())
}
