//! Z₂-graded spaces, words in the tensor/symmetric/exterior (co)algebras and
//! their canonical forms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Parity {
        if n.rem_euclid(2) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> i64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn sum<I: IntoIterator<Item = Parity>>(items: I) -> Parity {
        items.into_iter().fold(Parity::Even, |a, b| a + b)
    }
}

impl From<bool> for Parity {
    fn from(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from(self.is_odd() != rhs.is_odd())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from(self.is_odd() && rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Which of the three (co)algebras a word or cochain lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    Tensor,
    Symmetric,
    Exterior,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Tensor => "tensor",
            Flavor::Symmetric => "symmetric",
            Flavor::Exterior => "exterior",
        })
    }
}

/// Z₂-valued bilinear form on bidegrees `(parity, degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GradingForm {
    /// `|a||b|`
    ParityOnly,
    /// `mm' + nn'`
    ProductForm,
    /// `(m + n)(m' + n')`
    ShiftedForm,
}

impl GradingForm {
    /// Pairing of `(p, n)` with `(p', n')`; degrees may be negative.
    pub fn pair(self, a: (Parity, i64), b: (Parity, i64)) -> Parity {
        let (m, n) = a;
        let (m2, n2) = b;
        match self {
            GradingForm::ParityOnly => m * m2,
            GradingForm::ProductForm => m * m2 + Parity::of(n) * Parity::of(n2),
            GradingForm::ShiftedForm => (m + Parity::of(n)) * (m2 + Parity::of(n2)),
        }
    }
}

/// Finite homogeneous basis with parities over an exact field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    names: Vec<String>,
    parities: Vec<Parity>,
    field: Field,
}

impl GradedSpace {
    pub fn new(basis: Vec<(String, Parity)>, field: Field) -> Result<Arc<Self>> {
        if basis.is_empty() {
            return Err(Error::arg("a graded space needs at least one basis element"));
        }
        let mut names = Vec::with_capacity(basis.len());
        let mut parities = Vec::with_capacity(basis.len());
        for (name, parity) in basis {
            if names.contains(&name) {
                return Err(Error::arg(format!("duplicate basis name '{name}'")));
            }
            names.push(name);
            parities.push(parity);
        }
        Ok(Arc::new(GradedSpace { names, parities, field }))
    }

    /// Convenience constructor: `("x", Parity::Even)` pairs over the rationals.
    pub fn from_pairs(basis: &[(&str, Parity)]) -> Arc<Self> {
        Self::new(basis.iter().map(|(n, p)| (n.to_string(), *p)).collect(), Field::Rationals)
            .expect("valid basis")
    }

    /// Space with basis `e0, e1, …` of the given parities over the rationals.
    pub fn anonymous(parities: &[Parity]) -> Arc<Self> {
        Self::new(
            parities.iter().enumerate().map(|(i, p)| (format!("e{i}"), *p)).collect(),
            Field::Rationals,
        )
        .expect("valid basis")
    }

    pub fn with_field(&self, field: Field) -> Arc<Self> {
        Arc::new(GradedSpace { field, ..self.clone() })
    }

    /// Parity reversion ΠV: same names, parities flipped.
    pub fn reversed(&self) -> Arc<Self> {
        Arc::new(GradedSpace {
            names: self.names.clone(),
            parities: self.parities.iter().map(|p| p.flip()).collect(),
            field: self.field,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn tuple_parity(&self, letters: &[usize]) -> Parity {
        Parity::sum(letters.iter().map(|&i| self.parities[i]))
    }

    pub fn tuple_parities(&self, letters: &[usize]) -> Vec<Parity> {
        letters.iter().map(|&i| self.parities[i]).collect()
    }

    /// All index tuples of length `n` in lexicographic order.
    pub fn all_tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let d = self.dim();
        let mut out = vec![Vec::with_capacity(n)];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * d);
            for t in &out {
                for i in 0..d {
                    let mut t2 = t.clone();
                    t2.push(i);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    /// Canonical basis words of degree `n` for the flavor: all tuples for
    /// tensor; nondecreasing tuples without annihilating repeats otherwise.
    pub fn canonical_tuples(&self, flavor: Flavor, n: usize) -> Vec<Vec<usize>> {
        if flavor == Flavor::Tensor {
            return self.all_tuples(n);
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        self.nondecreasing(flavor, n, 0, &mut current, &mut out);
        out
    }

    fn nondecreasing(
        &self,
        flavor: Flavor,
        n: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in start..self.dim() {
            if current.last() == Some(&i) && annihilates(flavor, self.parities[i]) {
                continue;
            }
            current.push(i);
            self.nondecreasing(flavor, n, i, current, out);
            current.pop();
        }
    }

    pub fn format_tuple(&self, letters: &[usize]) -> String {
        let names: Vec<&str> = letters.iter().map(|&i| self.name(i)).collect();
        format!("({})", names.join(","))
    }
}

/// Whether a repeated letter of this parity kills a word of the flavor.
fn annihilates(flavor: Flavor, parity: Parity) -> bool {
    match flavor {
        Flavor::Tensor => false,
        Flavor::Symmetric => parity.is_odd(),
        Flavor::Exterior => !parity.is_odd(),
    }
}

/// Brings `letters` into canonical order for the flavor.
///
/// Returns the sign picked up (as a parity) and the sorted letters, or `None`
/// if the word vanishes in the quotient: a repeated odd letter in S(V), a
/// repeated even letter in ΛV.
pub fn canonicalize(flavor: Flavor, parities: &[Parity], letters: &[usize]) -> Option<(Parity, Vec<usize>)> {
    let mut word = letters.to_vec();
    if flavor == Flavor::Tensor {
        return Some((Parity::Even, word));
    }
    let mut odd = false;
    let n = word.len();
    for pass in 0..n {
        let mut swapped = false;
        for k in 0..n.saturating_sub(pass + 1) {
            if word[k] > word[k + 1] {
                let both_odd = parities[word[k]].is_odd() && parities[word[k + 1]].is_odd();
                // S(V): uv = (−1)^{uv} vu;  ΛV: u∧v = −(−1)^{uv} v∧u
                let flip = match flavor {
                    Flavor::Symmetric => both_odd,
                    _ => !both_odd,
                };
                odd ^= flip;
                word.swap(k, k + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    if word.windows(2).any(|w| w[0] == w[1] && annihilates(flavor, parities[w[0]])) {
        return None;
    }
    Some((Parity::from(odd), word))
}

/// A scaled basis word `c · v_1 ⋯ v_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub flavor: Flavor,
    pub letters: Vec<usize>,
    pub coefficient: Scalar,
}

impl Word {
    pub fn new(flavor: Flavor, letters: Vec<usize>, coefficient: Scalar) -> Self {
        Word { flavor, letters, coefficient }
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// `(|w|, deg w)`.
    pub fn bidegree(&self, space: &GradedSpace) -> (Parity, usize) {
        (space.tuple_parity(&self.letters), self.letters.len())
    }

    /// Canonical representative, or `None` if the word is zero.
    pub fn canonical(&self, space: &GradedSpace) -> Option<Word> {
        if self.coefficient.is_zero() {
            return None;
        }
        let (sign, letters) = canonicalize(self.flavor, space.parities(), &self.letters)?;
        Some(Word { flavor: self.flavor, letters, coefficient: self.coefficient.clone().signed(sign.is_odd()) })
    }
}

/// Sparse vector in V: basis index → coefficient, zeros never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Vector {
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    pub fn basis(i: usize, field: Field) -> Self {
        let mut v = Vector::zero();
        v.add_term(i, field.one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut v = Vector::zero();
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(i) {
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

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(i, c * x);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        let mut v = Vector::zero();
        v.add_scaled(c, self);
        v
    }

    pub fn negated(&self) -> Vector {
        Vector { entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect() }
    }

    pub fn format(&self, space: &GradedSpace) -> String {
        format_combination(self.iter().map(|(i, c)| (c, space.name(i).to_string())))
    }
}

/// Formats `Σ c_i · name_i` as `2*e - h + 1/2*f`; empty sums print as `0`.
pub(crate) fn format_combination<'a, I: IntoIterator<Item = (&'a Scalar, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Formal linear combination of canonical words of one flavor.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl WordSum {
    pub fn zero() -> Self {
        WordSum::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, letters: &[usize]) -> Option<&Scalar> {
        self.terms.get(letters)
    }

    /// Adds `c · letters`, where `letters` is already canonical.
    pub fn add_canonical(&mut self, letters: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(letters) {
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

    /// Adds `c · letters` after canonicalizing for the flavor.
    pub fn add_word(&mut self, flavor: Flavor, parities: &[Parity], letters: &[usize], c: Scalar) {
        if c.is_zero() {
            return;
        }
        if let Some((sign, canon)) = canonicalize(flavor, parities, letters) {
            self.add_canonical(canon, c.signed(sign.is_odd()));
        }
    }

    pub fn add_sum(&mut self, other: &WordSum, scale: &Scalar) {
        for (w, c) in other.iter() {
            self.add_canonical(w.clone(), scale * c);
        }
    }

    /// Keeps only the words of the given degree.
    pub fn of_degree(&self, n: usize) -> WordSum {
        WordSum {
            terms: self.terms.iter().filter(|(w, _)| w.len() == n).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }
}
