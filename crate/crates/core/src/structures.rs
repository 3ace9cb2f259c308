//! A∞ and L∞ structures, their relations, and first-order deformations.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cochain::{Cochain, Family};
use crate::coderiv::{compose_unchecked, modified_bracket_families, Convention};
use crate::error::{Error, Result};
use crate::graded::{Flavor, GradedSpace, GradingForm, Parity, Vector};
use crate::perm::{koszul_sign_unchecked, sign_of_permutation, unshuffles};
use crate::reversion::ReversionContext;

/// Default bound on the arities a structure may use.
pub const DEFAULT_MAX_ARITY: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    /// Maps on the tensor coalgebra.
    AInfinity,
    /// Maps on the exterior coalgebra.
    LInfinity,
}

impl Kind {
    pub fn flavor(self) -> Flavor {
        match self {
            Kind::AInfinity => Flavor::Tensor,
            Kind::LInfinity => Flavor::Exterior,
        }
    }

    pub fn of_flavor(flavor: Flavor) -> Result<Kind> {
        match flavor {
            Flavor::Tensor => Ok(Kind::AInfinity),
            Flavor::Exterior => Ok(Kind::LInfinity),
            Flavor::Symmetric => Err(Error::arg("structures are authored on the tensor or exterior side")),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::AInfinity => "A-infinity",
            Kind::LInfinity => "L-infinity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinityStructure {
    kind: Kind,
    parts: Family,
    convention: Convention,
    max_arity: usize,
}

impl InfinityStructure {
    /// Parts must have arity between 1 and `max_arity`. The parity
    /// constraint `|m_k| = k` is checked by [`InfinityStructure::check_parity`].
    pub fn new(kind: Kind, parts: Family, convention: Convention, max_arity: usize) -> Result<Self> {
        if parts.flavor() != kind.flavor() {
            return Err(Error::arg(format!("{kind} structures use {} cochains", kind.flavor())));
        }
        for p in parts.parts() {
            if p.arity() == 0 || p.arity() > max_arity {
                return Err(Error::arg(format!(
                    "structure part of arity {} outside 1..={max_arity}",
                    p.arity()
                )));
            }
        }
        Ok(InfinityStructure { kind, parts, convention, max_arity })
    }

    /// Structure with a single part (an associative product or Lie bracket
    /// when the arity is 2).
    pub fn single(kind: Kind, part: Cochain, convention: Convention) -> Result<Self> {
        InfinityStructure::new(kind, Family::single(part), convention, DEFAULT_MAX_ARITY)
    }

    pub fn zero(kind: Kind, space: &Arc<GradedSpace>, convention: Convention) -> Self {
        InfinityStructure {
            kind,
            parts: Family::zero(space, kind.flavor()),
            convention,
            max_arity: DEFAULT_MAX_ARITY,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn flavor(&self) -> Flavor {
        self.kind.flavor()
    }

    pub fn parts(&self) -> &Family {
        &self.parts
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        self.parts.space()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// The same maps read in the other sign convention.
    pub fn converted(&self) -> InfinityStructure {
        InfinityStructure {
            kind: self.kind,
            parts: crate::reversion::convert(&self.parts),
            convention: self.convention.other(),
            max_arity: self.max_arity,
        }
    }

    pub fn with_parts(&self, parts: Family) -> Result<InfinityStructure> {
        InfinityStructure::new(self.kind, parts, self.convention, self.max_arity)
    }

    /// Whether the structure has at most one nonzero arity (then the
    /// coboundary operator is homogeneous and cohomology is graded).
    pub fn is_pure(&self) -> bool {
        self.parts.arities().len() <= 1
    }

    /// `|m_k| = k mod 2` for every part.
    pub fn check_parity(&self) -> Result<()> {
        for p in self.parts.parts() {
            if p.parity() != Parity::of(p.arity() as i64) {
                return Err(Error::validation(format!(
                    "part of arity {} has parity {}; {} structures need parity {}",
                    p.arity(),
                    p.parity(),
                    self.kind,
                    Parity::of(p.arity() as i64)
                )));
            }
        }
        Ok(())
    }

    /// Parity check plus every relation; the error names the first failure.
    pub fn require_valid(&self) -> Result<()> {
        if let Some(f) = self.validate()?.failure {
            return Err(Error::validation(format!(
                "structure relation n = {} fails on {}",
                f.n,
                self.space().format_tuple(&f.tuple)
            )));
        }
        Ok(())
    }

    /// Largest relation index that can be nonzero: `2N − 1` for parts of
    /// arity at most `N`.
    pub fn relation_range(&self) -> usize {
        self.parts.max_arity().map_or(0, |n| 2 * n - 1)
    }

    /// Residual of the `n`-th relation on one basis tuple, computed from the
    /// explicit sign formulas of each convention.
    pub fn relation_residual(&self, tuple: &[usize]) -> Vector {
        match self.kind {
            Kind::AInfinity => self.tensor_residual(tuple),
            Kind::LInfinity => self.exterior_residual(tuple),
        }
    }

    /// All residuals assembled into cochains: the part of arity `n` sends a
    /// canonical tuple to the `n`-th relation evaluated on it.
    pub fn relation_family(&self) -> Family {
        let mut out = Family::zero(self.space(), self.flavor());
        for n in 1..=self.relation_range() {
            let mut part = Cochain::zero(self.space(), self.flavor(), n, Parity::of(n as i64 + 1));
            for t in self.space().canonical_tuples(self.flavor(), n) {
                let r = self.relation_residual(&t);
                if !r.is_zero() {
                    part.set(&t, r).expect("residual has parity n + 1");
                }
            }
            out.add_part(&part).expect("same space");
        }
        out
    }

    fn tensor_residual(&self, v: &[usize]) -> Vector {
        let space = self.space();
        let n = v.len();
        let mut out = Vector::zero();
        for inner in self.parts.parts() {
            let k = inner.arity();
            if k > n {
                continue;
            }
            for outer in self.parts.parts_of_arity(n + 1 - k) {
                let mut prefix = Parity::Even;
                for i in 0..=n - k {
                    if i > 0 {
                        prefix = prefix + space.parity(v[i - 1]);
                    }
                    // W = ΠV: (v₁+⋯+v_i)|m_k| + i(k−1) + (n−k)|m_k|
                    // V = ΠW: (x₁+⋯+x_i)k + i(k−1) + n − k
                    let odd = match self.convention {
                        Convention::WOfV => {
                            prefix * inner.parity()
                                + Parity::of((i * (k + 1)) as i64)
                                + Parity::of((n - k) as i64) * inner.parity()
                        }
                        Convention::VOfW => {
                            prefix * Parity::of(k as i64) + Parity::of((i * (k + 1)) as i64) + Parity::of((n - k) as i64)
                        }
                    };
                    let value = inner.evaluate_unchecked(&v[i..i + k]);
                    let mut args = Vec::with_capacity(outer.arity());
                    for (j, c) in value.iter() {
                        args.clear();
                        args.extend_from_slice(&v[..i]);
                        args.push(j);
                        args.extend_from_slice(&v[i + k..]);
                        out.add_scaled(&c.clone().signed(odd.is_odd()), &outer.evaluate_unchecked(&args));
                    }
                }
            }
        }
        out
    }

    fn exterior_residual(&self, v: &[usize]) -> Vector {
        let space = self.space();
        let n = v.len();
        let parities = space.tuple_parities(v);
        let mut out = Vector::zero();
        for inner in self.parts.parts() {
            let l = inner.arity();
            if l > n {
                continue;
            }
            let k = n + 1 - l;
            for outer in self.parts.parts_of_arity(k) {
                // W = ΠV: (−1)^{(k−1)l};  V = ΠW: (−1)^{k−1}
                let conv = match self.convention {
                    Convention::WOfV => Parity::of(((k + 1) * l) as i64),
                    Convention::VOfW => Parity::of(k as i64 - 1),
                };
                for sigma in unshuffles(l, n - l) {
                    let odd = conv + sign_of_permutation(&sigma) + koszul_sign_unchecked(sigma.images(), &parities);
                    let arranged = sigma.rearrange(v);
                    let value = inner.evaluate_unchecked(&arranged[..l]);
                    let mut args = Vec::with_capacity(k);
                    for (j, c) in value.iter() {
                        args.clear();
                        args.push(j);
                        args.extend_from_slice(&arranged[l..]);
                        out.add_scaled(&c.clone().signed(odd.is_odd()), &outer.evaluate_unchecked(&args));
                    }
                }
            }
        }
        out
    }

    /// `{m, m}` under the structure's convention.
    pub fn self_bracket(&self) -> Family {
        modified_bracket_families(&self.parts, &self.parts, self.convention).expect("same family")
    }

    /// The conjugated family `δ` on the reversed side.
    pub fn reversed(&self) -> Family {
        ReversionContext::new(self.space(), self.convention).unconjugate(&self.parts).expect("V-side family")
    }

    /// `δ̂∘δ̂` read on corestrictions: `Σ_{k+l=n+1} δ_l ∘ δ_{kl}` on W.
    /// This is half of `[δ, δ]` and makes sense in every characteristic.
    pub fn reversed_square(&self) -> Family {
        let delta = self.reversed();
        let mut out = Family::zero(delta.space(), delta.flavor());
        for outer in delta.parts() {
            for inner in delta.parts() {
                out.add_part(&compose_unchecked(outer, inner, GradingForm::ParityOnly)).expect("same space");
            }
        }
        out
    }

    /// Checks every relation on every canonical tuple up to `2N − 1`.
    pub fn validate(&self) -> Result<ValidationReport> {
        self.check_parity()?;
        let top = self.relation_range();
        for n in 1..=top {
            for t in self.space().canonical_tuples(self.flavor(), n) {
                let residual = self.relation_residual(&t);
                if !residual.is_zero() {
                    return Ok(ValidationReport {
                        checked_up_to: top,
                        failure: Some(RelationFailure { n, tuple: t, residual }),
                    });
                }
            }
        }
        Ok(ValidationReport { checked_up_to: top, failure: None })
    }

    /// The three equivalent tests: explicit relations, `{m,m} = 0`, and
    /// `δ̂² = 0` on the reversed side.
    pub fn validation_routes(&self) -> Result<RouteAgreement> {
        let relations = self.validate()?.is_ok();
        let bracket = self.self_bracket().is_zero();
        let reversed = self.reversed_square().is_zero();
        Ok(RouteAgreement { relations, bracket, reversed })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteAgreement {
    pub relations: bool,
    pub bracket: bool,
    pub reversed: bool,
}

impl RouteAgreement {
    pub fn agree(&self) -> bool {
        self.relations == self.bracket && self.bracket == self.reversed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub n: usize,
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Relations were checked for `1 ≤ n ≤ checked_up_to`.
    pub checked_up_to: usize,
    pub failure: Option<RelationFailure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Builds the A∞ structure `{m₁ = d, m₂ = m}` and validates it.
pub fn validate_dga(d: &Cochain, m: &Cochain, convention: Convention) -> Result<ValidationReport> {
    if d.arity() != 1 || m.arity() != 2 {
        return Err(Error::arg("a DGA needs a differential of arity 1 and a product of arity 2"));
    }
    let parts = Family::from_parts(d.space(), Flavor::Tensor, [d.clone(), m.clone()])?;
    InfinityStructure::new(Kind::AInfinity, parts, convention, 2)?.validate()
}

/// A first-order deformation `m + uλ` with `u² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    base: InfinityStructure,
    direction: Family,
    parameter_parity: Parity,
}

impl Deformation {
    /// Checks `|λ_k| = |u| + k` for every part of λ.
    pub fn new(base: &InfinityStructure, direction: Family, parameter_parity: Parity) -> Result<Self> {
        if direction.flavor() != base.flavor() || **direction.space() != **base.space() {
            return Err(Error::arg("deformation direction lives on a different space or flavor"));
        }
        for p in direction.parts() {
            let want = parameter_parity + Parity::of(p.arity() as i64);
            if p.parity() != want {
                return Err(Error::validation(format!(
                    "deformation part of arity {} has parity {}, expected |u| + {} = {want}",
                    p.arity(),
                    p.parity(),
                    p.arity()
                )));
            }
        }
        Ok(Deformation { base: base.clone(), direction, parameter_parity })
    }

    pub fn base(&self) -> &InfinityStructure {
        &self.base
    }

    pub fn direction(&self) -> &Family {
        &self.direction
    }

    pub fn parameter_parity(&self) -> Parity {
        self.parameter_parity
    }

    /// `D(λ) = {λ, m}`.
    pub fn coboundary(&self) -> Family {
        modified_bracket_families(&self.direction, self.base.parts(), self.base.convention()).expect("same family")
    }

    /// Whether `m + uλ` satisfies the relations to first order in `u`.
    pub fn is_infinitesimal(&self) -> bool {
        self.coboundary().is_zero()
    }
}

/// `deform_check`: true iff `D(λ) = 0`. The parameter parity is inferred
/// from λ and must be consistent across parts.
pub fn deform_check(s: &InfinityStructure, lambda: &Family) -> Result<bool> {
    s.check_parity()?;
    let u = infer_parameter_parity(lambda)?;
    Ok(Deformation::new(s, lambda.clone(), u)?.is_infinitesimal())
}

/// `|u| = |λ_k| + k`, which must not depend on `k`.
pub fn infer_parameter_parity(lambda: &Family) -> Result<Parity> {
    let mut u = None;
    for p in lambda.parts() {
        let this = p.parity() + Parity::of(p.arity() as i64);
        match u {
            None => u = Some(this),
            Some(prev) if prev != this => {
                return Err(Error::validation(
                    "deformation parts disagree on the parity of the parameter u".to_string(),
                ))
            }
            _ => {}
        }
    }
    Ok(u.unwrap_or(Parity::Even))
}
