//! The coboundary `D(φ) = {φ, m}`, exact cohomology over a window of
//! arities, and classification of infinitesimal deformations.

mod complex;
pub mod cyclic;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::cochain::{Cochain, Family};
use crate::coderiv::modified_bracket_families;
use crate::error::{Error, Result};
use crate::graded::{Flavor, GradedSpace, Vector};
use crate::inner::InnerProduct;
use crate::scalar::Field;
use crate::structures::{infer_parameter_parity, Deformation, InfinityStructure};

pub(crate) use complex::{Engine, GradedComplex};

/// Inclusive range of arities `start..=end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    pub start: usize,
    pub end: usize,
}

impl Window {
    pub fn new(start: usize, end: usize) -> Result<Window> {
        if end < start {
            return Err(Error::arg(format!("empty window {start}..{end}")));
        }
        Ok(Window { start, end })
    }

    pub fn degrees(self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl Default for Window {
    fn default() -> Self {
        Window { start: 1, end: 4 }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for Window {
    type Err = Error;

    /// `a..b`, both inclusive.
    fn from_str(s: &str) -> Result<Window> {
        let (a, b) = s.split_once("..").ok_or_else(|| Error::arg(format!("window `{s}` is not of the form a..b")))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::arg(format!("bad window bound `{t}`")));
        Window::new(parse(a)?, parse(b)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport<R> {
    pub degree: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub dim: usize,
    pub representatives: Vec<R>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport<R = Family> {
    pub window: Window,
    pub degrees: Vec<DegreeReport<R>>,
    /// True when the differential is homogeneous in arity, so the window
    /// computes the cohomology groups themselves. Otherwise the numbers
    /// describe the truncated complex only.
    pub graded_exact: bool,
}

impl<R> CohomologyReport<R> {
    pub fn degree(&self, d: usize) -> Option<&DegreeReport<R>> {
        self.degrees.iter().find(|r| r.degree == d)
    }

    pub fn dims(&self) -> Vec<(usize, usize)> {
        self.degrees.iter().map(|r| (r.degree, r.dim)).collect()
    }
}

pub(crate) fn run_window<C: GradedComplex, R>(
    complex: &C,
    window: Window,
    graded_exact: bool,
    mut convert: impl FnMut(usize, &Vector) -> R,
) -> CohomologyReport<R> {
    let mut engine = Engine::new(complex);
    let degrees = window
        .degrees()
        .map(|p| {
            let r = engine.degree(window.start, p);
            DegreeReport {
                degree: p,
                cocycles: r.cocycles,
                coboundaries: r.coboundaries,
                dim: r.cocycles - r.coboundaries,
                representatives: r.representatives.iter().map(|v| convert(p, v)).collect(),
            }
        })
        .collect();
    CohomologyReport { window, degrees, graded_exact }
}

/// `D(φ) = {φ, m}` under the structure's convention.
pub fn coboundary(phi: &Cochain, s: &InfinityStructure) -> Result<Family> {
    coboundary_family(&Family::single(phi.clone()), s)
}

pub fn coboundary_family(phi: &Family, s: &InfinityStructure) -> Result<Family> {
    if phi.flavor() != s.flavor() || **phi.space() != **s.space() {
        return Err(Error::arg("cochain and structure live on different spaces or flavors"));
    }
    modified_bracket_families(phi, s.parts(), s.convention())
}

/// Coordinates of cochains of each arity in the elementary basis.
pub(crate) struct CochainCoordinates {
    space: Arc<GradedSpace>,
    flavor: Flavor,
    tuples: BTreeMap<usize, (Vec<Vec<usize>>, BTreeMap<Vec<usize>, usize>)>,
}

impl CochainCoordinates {
    pub fn new(space: &Arc<GradedSpace>, flavor: Flavor) -> Self {
        CochainCoordinates { space: space.clone(), flavor, tuples: BTreeMap::new() }
    }

    fn ensure(&mut self, arity: usize) {
        self.tuples.entry(arity).or_insert_with(|| {
            let list = self.space.canonical_tuples(self.flavor, arity);
            let index = list.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
            (list, index)
        });
    }

    pub fn prepare(&mut self, arities: impl IntoIterator<Item = usize>) {
        for a in arities {
            self.ensure(a);
        }
    }

    pub fn size(&self, arity: usize) -> usize {
        self.tuples[&arity].0.len() * self.space.dim()
    }

    pub fn coordinates(&self, family: &Family) -> BTreeMap<usize, Vector> {
        let mut out: BTreeMap<usize, Vector> = BTreeMap::new();
        for part in family.parts() {
            let idx = &self.tuples.get(&part.arity()).expect("arity prepared").1;
            let v = part.coordinates(idx);
            out.entry(part.arity()).or_default().add_scaled(&self.space.field().one(), &v);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn family(&self, arity: usize, coords: &Vector) -> Family {
        let d = self.space.dim();
        let list = &self.tuples[&arity].0;
        let mut out = Family::zero(&self.space, self.flavor);
        for (i, c) in coords.iter() {
            let mut e = Cochain::elementary(&self.space, self.flavor, &list[i / d], i % d).expect("canonical");
            e = e.scale(c);
            out.add_part(&e).expect("same space");
        }
        out
    }
}

struct HochschildComplex<'a> {
    structure: &'a InfinityStructure,
    coords: CochainCoordinates,
}

impl<'a> HochschildComplex<'a> {
    fn new(s: &'a InfinityStructure, top: usize) -> Self {
        let mut coords = CochainCoordinates::new(s.space(), s.flavor());
        let reach = top + s.parts().max_arity().unwrap_or(1).saturating_sub(1);
        coords.prepare(0..=reach);
        HochschildComplex { structure: s, coords }
    }
}

impl GradedComplex for HochschildComplex<'_> {
    fn field(&self) -> Field {
        self.structure.space().field()
    }

    fn basis(&self, degree: usize) -> Vec<Vector> {
        let f = self.field();
        (0..self.coords.size(degree)).map(|i| Vector::basis(i, f)).collect()
    }

    fn differential(&self, degree: usize, v: &Vector) -> BTreeMap<usize, Vector> {
        let phi = self.coords.family(degree, v);
        let d = coboundary_family(&phi, self.structure).expect("same space");
        self.coords.coordinates(&d)
    }
}

/// Cohomology of `D` on `⊕_{p ∈ window} C^p`.
///
/// `Z^p` is the kernel of the full differential on `C^p`; `B^p` is
/// `D(⊕_{start ≤ q ≤ p} C^q) ∩ C^p`, so the window start acts as the bottom
/// of the complex. When the structure has one arity the complex splits and
/// these are the cohomology groups.
pub fn cohomology(s: &InfinityStructure, window: Window) -> Result<CohomologyReport> {
    s.require_valid()?;
    let complex = HochschildComplex::new(s, window.end);
    Ok(run_window(&complex, window, s.is_pure(), |p, v| complex.coords.family(p, v)))
}

/// Three-valued answer for membership questions on truncated complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Yes,
    No,
    /// A solution exists if arities above the window may be ignored, but
    /// none was found with them taken into account.
    Undetermined,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Undetermined => "undetermined at this truncation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub cocycle: bool,
    pub coboundary: Membership,
    /// A cochain `β` with `D(β) = λ`, when one was found.
    pub witness: Option<Family>,
    /// `λ` is cyclic for the inner product (only with an inner product).
    pub preserves_ip: Option<bool>,
    /// `λ̃` is the cyclic coboundary of a cyclic cochain (only for cyclic λ
    /// and an invariant inner product).
    pub cyclic_coboundary: Option<Membership>,
}

/// Solves `D(β) = target` with `β` of arity in `lowest..=top`, where `top`
/// is the largest arity of the target.
pub(crate) fn solve_membership<C: GradedComplex>(
    complex: &C,
    lowest: usize,
    target: &BTreeMap<usize, Vector>,
) -> (Membership, Option<BTreeMap<usize, Vector>>) {
    let Some(&top) = target.keys().next_back() else {
        return (Membership::Yes, Some(BTreeMap::new()));
    };
    let domain: Vec<usize> = (lowest.min(top)..=top).collect();
    let mut engine = Engine::new(complex);
    // Components of β above `top` cannot reach arities ≤ top, so failing
    // to match those arities is conclusive.
    if engine.solve(&domain, target, Some(top)).is_none() {
        return (Membership::No, None);
    }
    match engine.solve(&domain, target, None) {
        Some(x) => (Membership::Yes, Some(x)),
        None => (Membership::Undetermined, None),
    }
}

/// Cocycle, coboundary and inner-product tests for a deformation direction.
/// Coboundary witnesses are searched in arities `lowest..=max arity of λ`.
pub fn classify_deformation(
    s: &InfinityStructure,
    lambda: &Family,
    ip: Option<&InnerProduct>,
    lowest: usize,
) -> Result<Classification> {
    s.require_valid()?;
    let u = infer_parameter_parity(lambda)?;
    let deformation = Deformation::new(s, lambda.clone(), u)?;
    let cocycle = deformation.is_infinitesimal();

    let top = lambda.max_arity().unwrap_or(0);
    let complex = HochschildComplex::new(s, top);
    let target = complex.coords.coordinates(lambda);
    let (coboundary, witness) = solve_membership(&complex, lowest, &target);
    let witness = witness.map(|parts| {
        let mut out = Family::zero(s.space(), s.flavor());
        for (p, v) in parts {
            out = out.add(&complex.coords.family(p, &v)).expect("same space");
        }
        out
    });

    let (preserves_ip, cyclic_coboundary) = match ip {
        None => (None, None),
        Some(ip) => {
            let preserves = cyclic::family_is_cyclic(lambda, ip)?;
            let invariant = cyclic::family_is_cyclic(s.parts(), ip)?;
            let cyc = if preserves && invariant { Some(cyclic::is_cyclic_coboundary(s, lambda, ip, lowest)?) } else { None };
            (Some(preserves), cyc)
        }
    };
    Ok(Classification { cocycle, coboundary, witness, preserves_ip, cyclic_coboundary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coderiv::Convention;
    use crate::graded::Parity::Even;
    use crate::structures::Kind;

    #[test]
    fn window_parsing() {
        assert_eq!("0..3".parse::<Window>().unwrap(), Window { start: 0, end: 3 });
        assert!("3..1".parse::<Window>().is_err());
        assert!("3".parse::<Window>().is_err());
    }

    #[test]
    fn one_dim_abelian_has_h1_of_dim_one() {
        let v = GradedSpace::anonymous(&[Even]);
        let s = InfinityStructure::zero(Kind::LInfinity, &v, Convention::WOfV);
        let r = cohomology(&s, Window::new(1, 2).unwrap()).unwrap();
        assert_eq!(r.degree(1).unwrap().dim, 1);
        // Λ²V = 0 for one even generator.
        assert_eq!(r.degree(2).unwrap().dim, 0);
        assert!(r.graded_exact);
    }
}
