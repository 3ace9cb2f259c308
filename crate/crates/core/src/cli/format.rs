//! The line-oriented algebra file format.
//!
//! ```text
//! field Q            # or: field F 5
//! flavor tensor      # tensor | exterior
//! space
//!   basis 1 even
//!   basis x even
//! map m 2
//!   m(1,1) = 1
//!   m(1,x) = x
//!   m(x,1) = x
//! inner_product
//!   <1,x> = 1
//! deformation lam 2 odd_parameter
//!   lam(x,x) = 1
//! ```
//!
//! Values are combinations `c₁*name₁ + c₂*name₂ - …` of basis names; a bare
//! `0` is the zero vector. Inner product entries imply their graded
//! symmetric partner.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::cochain::{Cochain, Family};
use crate::coderiv::Convention;
use crate::error::{Error, Result};
use crate::graded::{format_combination, Flavor, GradedSpace, Parity, Vector};
use crate::inner::InnerProduct;
use crate::scalar::{Field, Scalar};
use crate::structures::{InfinityStructure, Kind};

/// Diagnostic codes, one per kind of input error.
pub mod codes {
    pub const UNKNOWN_DIRECTIVE: &str = "E001";
    pub const UNDECLARED_NAME: &str = "E002";
    pub const NOT_PRIME: &str = "E003";
    pub const PARITY: &str = "E004";
    pub const DUPLICATE: &str = "E005";
    pub const SYNTAX: &str = "E006";
    pub const ARITY: &str = "E007";
    pub const DUPLICATE_BASIS: &str = "E008";
    pub const ORDER: &str = "E009";
    pub const SCALAR: &str = "E010";
    pub const INNER_PRODUCT: &str = "E011";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: &'static str,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: error[{}]: {}", self.line, self.column, self.code, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub cochain: Cochain,
}

/// A deformation direction: every `deformation` block with this name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction {
    pub name: String,
    pub parameter: Parity,
    pub parts: Vec<Cochain>,
}

impl Direction {
    pub fn family(&self) -> Family {
        let space = self.parts[0].space();
        Family::from_parts(space, self.parts[0].flavor(), self.parts.iter().cloned()).expect("one space")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub space: Arc<GradedSpace>,
    pub flavor: Flavor,
    pub maps: Vec<NamedMap>,
    pub inner_product: Option<InnerProduct>,
    pub directions: Vec<Direction>,
}

impl AlgebraFile {
    /// The sum of all `map` blocks.
    pub fn family(&self) -> Family {
        Family::from_parts(&self.space, self.flavor, self.maps.iter().map(|m| m.cochain.clone())).expect("one space")
    }

    /// Maps with the given name, summed.
    pub fn named(&self, name: &str) -> Option<Family> {
        let parts: Vec<Cochain> = self.maps.iter().filter(|m| m.name == name).map(|m| m.cochain.clone()).collect();
        if parts.is_empty() {
            return None;
        }
        Some(Family::from_parts(&self.space, self.flavor, parts).expect("one space"))
    }

    pub fn structure(&self, convention: Convention, max_arity: usize) -> Result<InfinityStructure> {
        InfinityStructure::new(Kind::of_flavor(self.flavor)?, self.family(), convention, max_arity)
    }

    pub fn direction(&self, name: &str) -> Option<&Direction> {
        self.directions.iter().find(|d| d.name == name)
    }

    /// Canonical text; parsing it gives back an equal value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.space.field() {
            Field::Rationals => out.push_str("field Q\n"),
            Field::Prime(p) => out.push_str(&format!("field F {p}\n")),
        }
        out.push_str(&format!("flavor {}\n", self.flavor));
        out.push_str("space\n");
        for (i, name) in self.space.names().iter().enumerate() {
            let p = if self.space.parity(i).is_odd() { "odd" } else { "even" };
            out.push_str(&format!("  basis {name} {p}\n"));
        }
        for m in &self.maps {
            out.push_str(&format!("map {} {}\n", m.name, m.cochain.arity()));
            for line in m.cochain.format_entries(&m.name) {
                out.push_str(&format!("  {line}\n"));
            }
        }
        if let Some(ip) = &self.inner_product {
            out.push_str("inner_product\n");
            let d = self.space.dim();
            for i in 0..d {
                for j in i..d {
                    let c = ip.entry(i, j);
                    if !c.is_zero() {
                        out.push_str(&format!("  <{},{}> = {c}\n", self.space.name(i), self.space.name(j)));
                    }
                }
            }
        }
        for dir in &self.directions {
            let p = if dir.parameter.is_odd() { "odd_parameter" } else { "even_parameter" };
            for part in &dir.parts {
                out.push_str(&format!("deformation {} {} {p}\n", dir.name, part.arity()));
                for line in part.format_entries(&dir.name) {
                    out.push_str(&format!("  {line}\n"));
                }
            }
        }
        out
    }
}

/// Text of a vector as it appears on the right of an entry.
pub fn format_value(v: &Vector, space: &GradedSpace) -> String {
    format_combination(v.iter().map(|(i, c)| (c, space.name(i).to_string())))
}

fn diag(code: &'static str, line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(Diagnostic { code, line, column, message: message.into() })
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

enum Section {
    None,
    Space,
    Map { index: usize },
    Inner,
    Deformation { index: usize, part: usize },
}

struct Block {
    name: String,
    arity: usize,
    /// Parity fixed by the header (deformations) or the first entry (maps).
    parity: Option<Parity>,
    /// Keyed by canonical tuple; holds the tuple as written and its value.
    entries: BTreeMap<Vec<usize>, (Vec<usize>, Vector)>,
    header_line: usize,
}

struct Parser<'a> {
    text: &'a str,
    field: Option<Field>,
    flavor: Option<Flavor>,
    basis: Vec<(String, Parity)>,
    space: Option<Arc<GradedSpace>>,
    maps: Vec<Block>,
    ip: Option<(usize, BTreeMap<(usize, usize), Scalar>)>,
    directions: Vec<(String, Parity, Vec<Block>)>,
}

/// 1-based column of the first occurrence of `needle` in `line`, starting
/// the search at byte `from`.
fn column_of(line: &str, needle: &str, from: usize) -> usize {
    let at = line[from.min(line.len())..].find(needle).map_or(0, |i| i + from.min(line.len()));
    line[..at].chars().count() + 1
}

fn indent(line: &str) -> usize {
    line.len() - line.trim_start().len()
}

pub fn parse(text: &str) -> Result<AlgebraFile> {
    let mut p = Parser {
        text,
        field: None,
        flavor: None,
        basis: Vec::new(),
        space: None,
        maps: Vec::new(),
        ip: None,
        directions: Vec::new(),
    };
    p.run()?;
    p.finish()
}

impl<'a> Parser<'a> {
    fn run(&mut self) -> Result<()> {
        let mut section = Section::None;
        for (n, raw) in self.text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("");
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = indent(line) + 1;
            let mut words = trimmed.split_whitespace();
            let head = words.next().unwrap_or("");
            let rest: Vec<&str> = words.collect();
            match head {
                "field" => {
                    if self.space.is_some() || !self.basis.is_empty() || self.field.is_some() {
                        return Err(diag(codes::ORDER, line_no, col, "`field` must come once, before `space`"));
                    }
                    self.field = Some(self.parse_field(&rest, line, line_no)?);
                    section = Section::None;
                }
                "flavor" => {
                    if self.flavor.is_some() {
                        return Err(diag(codes::DUPLICATE, line_no, col, "flavor declared twice"));
                    }
                    if !self.maps.is_empty() || !self.directions.is_empty() {
                        return Err(diag(codes::ORDER, line_no, col, "`flavor` must come before any map"));
                    }
                    let f = match rest.as_slice() {
                        ["tensor"] => Flavor::Tensor,
                        ["exterior"] => Flavor::Exterior,
                        ["symmetric"] => Flavor::Symmetric,
                        _ => return Err(diag(codes::SYNTAX, line_no, col, "expected `flavor tensor|exterior|symmetric`")),
                    };
                    self.flavor = Some(f);
                    section = Section::None;
                }
                "space" => {
                    if !rest.is_empty() {
                        return Err(diag(codes::SYNTAX, line_no, col, "`space` takes no arguments"));
                    }
                    if self.space.is_some() || !self.basis.is_empty() {
                        return Err(diag(codes::DUPLICATE, line_no, col, "space declared twice"));
                    }
                    section = Section::Space;
                }
                "basis" => {
                    if !matches!(section, Section::Space) {
                        return Err(diag(codes::ORDER, line_no, col, "`basis` lines belong to the `space` block"));
                    }
                    self.parse_basis(&rest, line, line_no)?;
                }
                "map" | "deformation" => {
                    self.close_space(line_no)?;
                    section = self.parse_block_header(head, &rest, line, line_no)?;
                }
                "inner_product" => {
                    self.close_space(line_no)?;
                    if !rest.is_empty() {
                        return Err(diag(codes::SYNTAX, line_no, col, "`inner_product` takes no arguments"));
                    }
                    if self.ip.is_some() {
                        return Err(diag(codes::DUPLICATE, line_no, col, "inner product declared twice"));
                    }
                    self.ip = Some((line_no, BTreeMap::new()));
                    section = Section::Inner;
                }
                _ if trimmed.starts_with('<') => {
                    if !matches!(section, Section::Inner) {
                        return Err(diag(codes::ORDER, line_no, col, "inner product entry outside `inner_product`"));
                    }
                    self.parse_ip_entry(trimmed, line, line_no)?;
                }
                _ if trimmed.contains('(') && trimmed.contains('=') => {
                    let block = match section {
                        Section::Map { index } => &mut self.maps[index],
                        Section::Deformation { index, part } => &mut self.directions[index].2[part],
                        _ => return Err(diag(codes::ORDER, line_no, col, "map entry outside a `map` or `deformation` block")),
                    };
                    let space = self.space.as_ref().expect("space closed before blocks");
                    let flavor = self.flavor.unwrap_or(Flavor::Tensor);
                    parse_entry(block, space, flavor, trimmed, line, line_no)?;
                }
                _ => {
                    return Err(diag(codes::UNKNOWN_DIRECTIVE, line_no, col, format!("unknown directive `{head}`")));
                }
            }
        }
        Ok(())
    }

    fn parse_field(&self, rest: &[&str], line: &str, line_no: usize) -> Result<Field> {
        match rest {
            ["Q"] => Ok(Field::Rationals),
            ["F", p] => {
                let col = column_of(line, p, 0);
                let p: u64 = p.parse().map_err(|_| diag(codes::SYNTAX, line_no, col, format!("bad modulus `{p}`")))?;
                // {m, m} = 2 m∘m, so the bracket route says nothing in characteristic 2.
                if p == 2 {
                    return Err(diag(codes::NOT_PRIME, line_no, col, "characteristic 2 is not supported"));
                }
                Field::prime(p).map_err(|e| diag(codes::NOT_PRIME, line_no, col, e.to_string()))
            }
            _ => Err(diag(codes::SYNTAX, line_no, indent(line) + 1, "expected `field Q` or `field F p`")),
        }
    }

    fn parse_basis(&mut self, rest: &[&str], line: &str, line_no: usize) -> Result<()> {
        let [name, parity] = rest else {
            return Err(diag(codes::SYNTAX, line_no, indent(line) + 1, "expected `basis NAME even|odd`"));
        };
        let col = column_of(line, name, indent(line) + 5);
        if !is_identifier(name) {
            return Err(diag(codes::SYNTAX, line_no, col, format!("invalid basis name `{name}`")));
        }
        if self.basis.iter().any(|(n, _)| n == name) {
            return Err(diag(codes::DUPLICATE_BASIS, line_no, col, format!("basis name `{name}` declared twice")));
        }
        let parity = match *parity {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => {
                return Err(diag(codes::SYNTAX, line_no, column_of(line, other, col), "parity must be `even` or `odd`"));
            }
        };
        self.basis.push((name.to_string(), parity));
        Ok(())
    }

    fn close_space(&mut self, line_no: usize) -> Result<()> {
        if self.space.is_some() {
            return Ok(());
        }
        if self.basis.is_empty() {
            return Err(diag(codes::ORDER, line_no, 1, "declare a nonempty `space` first"));
        }
        let field = self.field.unwrap_or(Field::Rationals);
        self.space = Some(GradedSpace::new(self.basis.clone(), field).map_err(|e| diag(codes::SYNTAX, line_no, 1, e.to_string()))?);
        Ok(())
    }

    fn parse_block_header(&mut self, head: &str, rest: &[&str], line: &str, line_no: usize) -> Result<Section> {
        let col = indent(line) + 1;
        let (name, arity, parameter) = match (head, rest) {
            ("map", [name, arity]) => (*name, *arity, None),
            ("deformation", [name, arity, param]) => {
                let p = match *param {
                    "odd_parameter" => Parity::Odd,
                    "even_parameter" => Parity::Even,
                    other => {
                        return Err(diag(
                            codes::SYNTAX,
                            line_no,
                            column_of(line, other, col),
                            "expected `odd_parameter` or `even_parameter`",
                        ))
                    }
                };
                (*name, *arity, Some(p))
            }
            ("map", _) => return Err(diag(codes::SYNTAX, line_no, col, "expected `map NAME ARITY`")),
            _ => return Err(diag(codes::SYNTAX, line_no, col, "expected `deformation NAME ARITY odd_parameter|even_parameter`")),
        };
        let name_col = column_of(line, name, col + head.len() - 1);
        if !is_identifier(name) {
            return Err(diag(codes::SYNTAX, line_no, name_col, format!("invalid map name `{name}`")));
        }
        let arity_col = column_of(line, arity, name_col + name.len() - 1);
        let arity: usize = arity.parse().map_err(|_| diag(codes::SYNTAX, line_no, arity_col, format!("bad arity `{arity}`")))?;
        let mut block = Block { name: name.to_string(), arity, parity: None, entries: BTreeMap::new(), header_line: line_no };
        match parameter {
            None => {
                if self.maps.iter().any(|b| b.name == name && b.arity == arity) {
                    return Err(diag(codes::DUPLICATE, line_no, name_col, format!("map `{name}` of arity {arity} declared twice")));
                }
                self.maps.push(block);
                Ok(Section::Map { index: self.maps.len() - 1 })
            }
            Some(u) => {
                block.parity = Some(u + Parity::of(arity as i64));
                let index = match self.directions.iter().position(|d| d.0 == name) {
                    Some(i) => {
                        if self.directions[i].1 != u {
                            return Err(diag(codes::PARITY, line_no, col, format!("deformation `{name}` changes parameter parity")));
                        }
                        if self.directions[i].2.iter().any(|b| b.arity == arity) {
                            return Err(diag(codes::DUPLICATE, line_no, name_col, format!("deformation `{name}` of arity {arity} declared twice")));
                        }
                        i
                    }
                    None => {
                        self.directions.push((name.to_string(), u, Vec::new()));
                        self.directions.len() - 1
                    }
                };
                self.directions[index].2.push(block);
                Ok(Section::Deformation { index, part: self.directions[index].2.len() - 1 })
            }
        }
    }

    fn parse_ip_entry(&mut self, trimmed: &str, line: &str, line_no: usize) -> Result<()> {
        let space = self.space.as_ref().expect("space closed before inner product");
        let col = indent(line) + 1;
        let bad = || diag(codes::SYNTAX, line_no, col, "expected `<a,b> = scalar`");
        let close = trimmed.find('>').ok_or_else(bad)?;
        let (pair, value) = (&trimmed[1..close], trimmed[close + 1..].trim());
        let value = value.strip_prefix('=').ok_or_else(bad)?.trim();
        let (a, b) = pair.split_once(',').ok_or_else(bad)?;
        let lookup = |n: &str| {
            let n = n.trim();
            space.index_of(n).ok_or_else(|| diag(codes::UNDECLARED_NAME, line_no, column_of(line, n, 0), format!("undeclared basis name `{n}`")))
        };
        let (i, j) = (lookup(a)?, lookup(b)?);
        let field = space.field();
        let c = field.parse(value).map_err(|e| diag(codes::SCALAR, line_no, column_of(line, value, close), e.to_string()))?;
        if !c.is_zero() && space.parity(i) != space.parity(j) {
            return Err(diag(codes::PARITY, line_no, col, format!("<{},{}> pairs elements of different parity", a.trim(), b.trim())));
        }
        let partner = c.clone().signed((space.parity(i) * space.parity(j)).is_odd());
        let entries = &mut self.ip.as_mut().expect("inside inner_product").1;
        if entries.contains_key(&(i, j)) && entries[&(i, j)] != c {
            return Err(diag(codes::DUPLICATE, line_no, col, format!("conflicting value for <{},{}>", a.trim(), b.trim())));
        }
        if entries.contains_key(&(i, j)) && i == j {
            return Err(diag(codes::DUPLICATE, line_no, col, format!("<{},{}> assigned twice", a.trim(), b.trim())));
        }
        entries.insert((i, j), c);
        entries.insert((j, i), partner);
        Ok(())
    }

    fn finish(mut self) -> Result<AlgebraFile> {
        let last = self.text.lines().count().max(1);
        self.close_space(last)?;
        let space = self.space.clone().expect("closed");
        let flavor = self.flavor.unwrap_or(Flavor::Tensor);
        let build = |b: &Block, default: Parity| -> Result<Cochain> {
            let parity = b.parity.unwrap_or(default);
            let mut c = Cochain::zero(&space, flavor, b.arity, parity);
            for (t, v) in b.entries.values() {
                c.set(t, v.clone()).map_err(|e| diag(codes::PARITY, b.header_line, 1, e.to_string()))?;
            }
            Ok(c)
        };
        let maps = self
            .maps
            .iter()
            .map(|b| Ok(NamedMap { name: b.name.clone(), cochain: build(b, Parity::of(b.arity as i64))? }))
            .collect::<Result<Vec<_>>>()?;
        let directions = self
            .directions
            .iter()
            .map(|(name, u, blocks)| {
                Ok(Direction {
                    name: name.clone(),
                    parameter: *u,
                    parts: blocks.iter().map(|b| build(b, Parity::Even)).collect::<Result<Vec<_>>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let inner_product = match self.ip {
            None => None,
            Some((line, entries)) => {
                let d = space.dim();
                let mut matrix = vec![vec![space.field().zero(); d]; d];
                for ((i, j), c) in entries {
                    matrix[i][j] = c;
                }
                Some(InnerProduct::new(&space, matrix).map_err(|e| diag(codes::INNER_PRODUCT, line, 1, e.to_string()))?)
            }
        };
        Ok(AlgebraFile { space, flavor, maps, inner_product, directions })
    }
}

fn parse_entry(block: &mut Block, space: &Arc<GradedSpace>, flavor: Flavor, trimmed: &str, line: &str, line_no: usize) -> Result<()> {
    let base = indent(line);
    let open = trimmed.find('(').expect("checked");
    let name = trimmed[..open].trim();
    if name != block.name {
        return Err(diag(
            codes::SYNTAX,
            line_no,
            base + 1,
            format!("entry for `{name}` inside the block of `{}`", block.name),
        ));
    }
    let close = trimmed.find(')').ok_or_else(|| diag(codes::SYNTAX, line_no, base + open + 1, "missing `)`"))?;
    let args_text = &trimmed[open + 1..close];
    let mut tuple = Vec::new();
    if !args_text.trim().is_empty() {
        for a in args_text.split(',') {
            let a = a.trim();
            let idx = space.index_of(a).ok_or_else(|| {
                diag(codes::UNDECLARED_NAME, line_no, column_of(line, a, base + open), format!("undeclared basis name `{a}`"))
            })?;
            tuple.push(idx);
        }
    }
    if tuple.len() != block.arity {
        return Err(diag(
            codes::ARITY,
            line_no,
            base + open + 1,
            format!("`{}` has arity {} but {} arguments were given", block.name, block.arity, tuple.len()),
        ));
    }
    let after = trimmed[close + 1..].trim_start();
    let rhs = after
        .strip_prefix('=')
        .ok_or_else(|| diag(codes::SYNTAX, line_no, base + close + 2, "expected `=`"))?;
    let rhs_offset = line.len() - rhs.len();
    let value = parse_combination(rhs, space, line, line_no, rhs_offset)?;

    let tuple_parity = space.tuple_parity(&tuple);
    let mut parities = value.iter().map(|(j, _)| space.parity(j) + tuple_parity).collect::<BTreeSet<_>>();
    if parities.len() > 1 {
        return Err(diag(codes::PARITY, line_no, rhs_offset + 1, "value mixes even and odd basis elements"));
    }
    if let Some(p) = parities.pop_first() {
        match block.parity {
            None => block.parity = Some(p),
            Some(q) if q != p => {
                return Err(diag(
                    codes::PARITY,
                    line_no,
                    rhs_offset + 1,
                    format!("entry has parity {p} but `{}` has parity {q}", block.name),
                ))
            }
            _ => {}
        }
    }
    let canonical = match crate::graded::canonicalize(flavor, space.parities(), &tuple) {
        Some((_, c)) => c,
        None if value.is_zero() => return Ok(()),
        None => {
            return Err(diag(
                codes::PARITY,
                line_no,
                base + 1,
                format!("{} vanishes in the {flavor} algebra", space.format_tuple(&tuple)),
            ))
        }
    };
    if block.entries.contains_key(&canonical) {
        return Err(diag(codes::DUPLICATE, line_no, base + 1, format!("duplicate assignment to {}", space.format_tuple(&tuple))));
    }
    block.entries.insert(canonical, (tuple, value));
    Ok(())
}

fn parse_combination(text: &str, space: &GradedSpace, line: &str, line_no: usize, offset: usize) -> Result<Vector> {
    let field = space.field();
    let mut out = Vector::zero();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(diag(codes::SYNTAX, line_no, offset + 1, "missing value"));
    }
    // Split into signed terms at top-level + and -.
    let mut terms: Vec<(bool, usize, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = text.as_bytes();
    let mut seen_content = false;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'+' || b == b'-' {
            let piece = &text[start..i];
            if piece.trim().is_empty() {
                if seen_content {
                    return Err(diag(codes::SYNTAX, line_no, offset + i + 1, "dangling operator"));
                }
                if b == b'-' {
                    negative = !negative;
                }
            } else {
                terms.push((negative, offset + start, piece));
                negative = b == b'-';
            }
            start = i + 1;
            seen_content = false;
            continue;
        }
        if !b.is_ascii_whitespace() {
            seen_content = true;
        }
    }
    let piece = &text[start..];
    if piece.trim().is_empty() {
        return Err(diag(codes::SYNTAX, line_no, offset + start + 1, "dangling operator"));
    }
    terms.push((negative, offset + start, piece));

    for (neg, at, piece) in terms {
        let term = piece.trim();
        let col = line[..at + (piece.len() - piece.trim_start().len())].chars().count() + 1;
        let (coef, name) = match term.split_once('*') {
            Some((c, n)) => {
                let c = field.parse(c.trim()).map_err(|e| diag(codes::SCALAR, line_no, col, e.to_string()))?;
                (c, n.trim())
            }
            None => (field.one(), term),
        };
        let Some(idx) = space.index_of(name) else {
            if name == "0" && coef.is_one() {
                continue;
            }
            return Err(diag(codes::UNDECLARED_NAME, line_no, col, format!("undeclared basis name `{name}`")));
        };
        out.add_term(idx, coef.signed(neg));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL: &str = "field Q\nflavor tensor\nspace\n  basis 1 even\n  basis x even\nmap m 2\n  m(1,1) = 1\n  m(1,x) = x\n  m(x,1) = x\ninner_product\n  <1,x> = 1\n";

    #[test]
    fn dual_numbers_round_trip() {
        let a = parse(DUAL).unwrap();
        assert_eq!(a.space.dim(), 2);
        assert_eq!(a.maps.len(), 1);
        assert_eq!(a.to_text(), DUAL);
        assert_eq!(parse(&a.to_text()).unwrap(), a);
        let ip = a.inner_product.as_ref().unwrap();
        assert!(ip.entry(1, 0).is_one());
    }

    fn code_of(text: &str) -> (&'static str, usize) {
        match parse(text) {
            Err(Error::Parse(d)) => (d.code, d.line),
            other => panic!("expected a diagnostic, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics() {
        let undeclared = DUAL.replace("m(x,1) = x", "m(1,y) = x");
        assert_eq!(code_of(&undeclared), (codes::UNDECLARED_NAME, 9));
        assert_eq!(code_of(&DUAL.replace("field Q", "field F 6")).0, codes::NOT_PRIME);
        assert_eq!(code_of(&DUAL.replace("field Q", "field F 2")).0, codes::NOT_PRIME);
        assert_eq!(code_of(&DUAL.replace("flavor tensor", "colour tensor")).0, codes::UNKNOWN_DIRECTIVE);
        assert_eq!(code_of(&DUAL.replace("basis x even", "basis x odd")).0, codes::PARITY);
        assert_eq!(code_of(&DUAL.replace("m(x,1) = x", "m(1,x) = x")).0, codes::DUPLICATE);
        assert_eq!(code_of(&DUAL.replace("m(x,1) = x", "m(x) = x")).0, codes::ARITY);
        assert_eq!(code_of(&DUAL.replace("m(x,1) = x", "m(x,1) = 2*x +")).0, codes::SYNTAX);
    }

    #[test]
    fn empty_structure_is_valid() {
        let a = parse("space\n  basis v even\n").unwrap();
        assert!(a.family().is_zero());
        assert_eq!(a.flavor, Flavor::Tensor);
    }

    #[test]
    fn combinations() {
        let text = "field F 5\nflavor exterior\nspace\n  basis e even\n  basis f even\n  basis h even\nmap l 2\n  l(e,f) = h\n  l(h,e) = 2*e\n  l(h,f) = -2*f\n";
        let a = parse(text).unwrap();
        let l = &a.maps[0].cochain;
        let q = a.space.field();
        assert_eq!(l.evaluate_basis(&[0, 2]).unwrap(), Vector::basis(0, q).scaled(&q.int(-2)));
        assert_eq!(parse(&a.to_text()).unwrap(), a);
    }
}
