//! Exact cohomology of a windowed cochain complex whose differential may
//! raise degree by several steps at once.
//!
//! Cochains of each degree live in an "ambient" coordinate space; the
//! complex proper at that degree is the span of a chosen basis there (all
//! of it for ordinary cochains, the cyclic subspace for cyclic ones).

use std::collections::BTreeMap;

use crate::graded::Vector;
use crate::linalg::{reduce_map, Echelon};
use crate::scalar::Field;

pub(crate) trait GradedComplex {
    fn field(&self) -> Field;

    /// Basis of the cochain group of `degree`, in ambient coordinates.
    fn basis(&self, degree: usize) -> Vec<Vector>;

    /// `D(v)` for `v` of the given degree, split by target degree.
    fn differential(&self, degree: usize, v: &Vector) -> BTreeMap<usize, Vector>;
}

pub(crate) struct DegreeResult {
    pub cocycles: usize,
    pub coboundaries: usize,
    /// Ambient coordinates of cocycles spanning a complement of the
    /// coboundaries.
    pub representatives: Vec<Vector>,
}

pub(crate) struct Engine<'a, C: GradedComplex> {
    complex: &'a C,
    cache: BTreeMap<usize, (Vec<Vector>, Vec<BTreeMap<usize, Vector>>)>,
}

/// Lays out the listed degrees consecutively; `sizes` gives one past the
/// largest ambient index used in each degree.
struct Layout {
    offsets: BTreeMap<usize, usize>,
}

impl Layout {
    fn new(order: &[usize], sizes: &BTreeMap<usize, usize>) -> Layout {
        let mut offsets = BTreeMap::new();
        let mut at = 0;
        for &d in order {
            offsets.insert(d, at);
            at += sizes.get(&d).copied().unwrap_or(0);
        }
        Layout { offsets }
    }

    fn flatten(&self, parts: &BTreeMap<usize, Vector>) -> Vector {
        let mut out = Vector::zero();
        for (d, v) in parts {
            let off = self.offsets[d];
            for (i, c) in v.iter() {
                out.add_term(off + i, c.clone());
            }
        }
        out
    }
}

fn extent(v: &Vector) -> usize {
    v.iter().map(|(i, _)| i + 1).max().unwrap_or(0)
}

impl<'a, C: GradedComplex> Engine<'a, C> {
    pub fn new(complex: &'a C) -> Self {
        Engine { complex, cache: BTreeMap::new() }
    }

    fn load(&mut self, degree: usize) {
        if self.cache.contains_key(&degree) {
            return;
        }
        let basis = self.complex.basis(degree);
        let images = basis.iter().map(|b| self.complex.differential(degree, b)).collect();
        self.cache.insert(degree, (basis, images));
    }

    fn sizes<'b>(maps: impl Iterator<Item = &'b BTreeMap<usize, Vector>>, extra: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for m in maps {
            for (d, v) in m {
                let e = sizes.entry(*d).or_default();
                *e = (*e).max(extent(v));
            }
        }
        for &(d, n) in extra {
            let e = sizes.entry(d).or_default();
            *e = (*e).max(n);
        }
        sizes
    }

    /// Cocycles, coboundaries inside the window `[start, degree]`, and
    /// representatives of the quotient at `degree`.
    pub fn degree(&mut self, start: usize, degree: usize) -> DegreeResult {
        for d in start..=degree {
            self.load(d);
        }
        let field = self.complex.field();
        let boundary_rows = self.image_in_degree(start, degree);
        let (basis, images) = &self.cache[&degree];

        let sizes = Self::sizes(images.iter(), &[]);
        let order: Vec<usize> = sizes.keys().copied().collect();
        let layout = Layout::new(&order, &sizes);
        let columns: Vec<Vector> = images.iter().map(|m| layout.flatten(m)).collect();
        let kernel = reduce_map(field, &columns).kernel;

        let mut span = Echelon::new(field);
        for r in &boundary_rows {
            span.insert(r.clone());
        }
        let mut representatives = Vec::new();
        for k in &kernel {
            let mut ambient = Vector::zero();
            for (j, c) in k.iter() {
                ambient.add_scaled(c, &basis[j]);
            }
            if span.insert(ambient.clone()) {
                representatives.push(ambient);
            }
        }
        DegreeResult { cocycles: kernel.len(), coboundaries: boundary_rows.len(), representatives }
    }

    /// Echelon rows spanning `D(⊕_{start ≤ q ≤ degree} C^q) ∩ C^degree`.
    fn image_in_degree(&mut self, start: usize, degree: usize) -> Vec<Vector> {
        for d in start..=degree {
            self.load(d);
        }
        let field = self.complex.field();
        let all: Vec<&BTreeMap<usize, Vector>> =
            (start..=degree).flat_map(|d| self.cache[&d].1.iter()).collect();
        let sizes = Self::sizes(all.iter().copied(), &[(degree, 0)]);
        // Degree of interest last, so echelon rows with a pivot there have
        // no component anywhere else.
        let mut order: Vec<usize> = sizes.keys().copied().filter(|&d| d != degree).collect();
        order.push(degree);
        let layout = Layout::new(&order, &sizes);
        let off = layout.offsets[&degree];
        let mut image = Echelon::new(field);
        for m in &all {
            image.insert(layout.flatten(m));
        }
        image
            .reduced_rows()
            .into_iter()
            .filter(|r| r.iter().next().is_some_and(|(i, _)| i >= off))
            .map(|r| Vector::from_terms(r.iter().map(|(i, c)| (i - off, c.clone()))))
            .collect()
    }

    /// Looks for `x` in the span of the bases of `domain` with `D(x) = target`.
    /// With `match_up_to = Some(h)` only target degrees `≤ h` are compared.
    /// Returns `x` split by degree, in ambient coordinates.
    pub fn solve(
        &mut self,
        domain: &[usize],
        target: &BTreeMap<usize, Vector>,
        match_up_to: Option<usize>,
    ) -> Option<BTreeMap<usize, Vector>> {
        for &d in domain {
            self.load(d);
        }
        let keep = |d: usize| match_up_to.is_none_or(|h| d <= h);
        let restrict = |m: &BTreeMap<usize, Vector>| -> BTreeMap<usize, Vector> {
            m.iter().filter(|(d, _)| keep(**d)).map(|(d, v)| (*d, v.clone())).collect()
        };
        let target = restrict(target);
        let mut cols: Vec<(usize, usize, BTreeMap<usize, Vector>)> = Vec::new();
        for &d in domain {
            for (j, img) in self.cache[&d].1.iter().enumerate() {
                cols.push((d, j, restrict(img)));
            }
        }
        let sizes = Self::sizes(cols.iter().map(|c| &c.2).chain(std::iter::once(&target)), &[]);
        let order: Vec<usize> = sizes.keys().copied().collect();
        let layout = Layout::new(&order, &sizes);
        let field = self.complex.field();
        let mut image = Echelon::new(field);
        for (idx, (_, _, img)) in cols.iter().enumerate() {
            image.insert_tracked(layout.flatten(img), Vector::basis(idx, field));
        }
        let combo = image.solve(&layout.flatten(&target))?;
        let mut out: BTreeMap<usize, Vector> = BTreeMap::new();
        for (idx, c) in combo.iter() {
            let (d, j, _) = &cols[idx];
            out.entry(*d).or_default().add_scaled(c, &self.cache[d].0[*j]);
        }
        out.retain(|_, v| !v.is_zero());
        Some(out)
    }
}
