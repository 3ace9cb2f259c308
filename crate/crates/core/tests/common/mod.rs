//! Fixtures and random generators shared by the integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::sync::Arc;

use infalg::cli::format::{parse, AlgebraFile};
use infalg::{Cochain, Convention, Family, Flavor, GradedSpace, InfinityStructure, Parity, ScalarCochain, Vector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn load(name: &str) -> AlgebraFile {
    let text = std::fs::read_to_string(fixtures_dir().join(format!("{name}.alg"))).unwrap();
    parse(&text).unwrap()
}

pub fn structure(name: &str, convention: Convention) -> InfinityStructure {
    let file = load(name);
    let s = file.structure(Convention::WOfV, 8).unwrap();
    match convention {
        Convention::WOfV => s,
        Convention::VOfW => s.converted(),
    }
}

/// The only part of a single-part structure.
pub fn only_part(s: &InfinityStructure) -> Cochain {
    let mut parts = s.parts().parts();
    let p = parts.next().unwrap().clone();
    assert!(parts.next().is_none());
    p
}

pub const FIXTURES: &[&str] =
    &["abelian1", "abelian2", "aff1", "dga", "dual_numbers", "dual_numbers_f5", "nonassociative", "odd_generator", "sl2"];

pub const VALID: &[&str] = &["abelian1", "abelian2", "aff1", "dga", "dual_numbers", "dual_numbers_f5", "odd_generator", "sl2"];

/// (fixture, golden suffix, arguments before the file, expected exit code)
pub const CASES: &[(&str, &str, &[&str], i32)] = &[
    ("abelian1", "cohomology", &["cohomology", "--window", "1..2"], 0),
    ("abelian2", "cyclic", &["cyclic", "--ip-free", "--window", "0..3"], 0),
    ("aff1", "cohomology", &["cohomology", "--window", "0..3"], 0),
    ("aff1", "cyclic", &["cyclic", "--ip-free", "--window", "0..3", "--representatives"], 0),
    ("dga", "validate", &["validate"], 0),
    ("dga", "reversed", &["convert", "--reversed"], 0),
    ("dga", "cohomology", &["cohomology", "--window", "1..3"], 0),
    ("dual_numbers", "validate", &["validate"], 0),
    ("dual_numbers", "cohomology", &["cohomology", "--window", "0..3", "--representatives"], 0),
    ("dual_numbers", "cyclic", &["cyclic", "--window", "0..3"], 0),
    ("dual_numbers", "deform", &["deform"], 0),
    ("dual_numbers", "json", &["cohomology", "--window", "0..3", "--format", "json-lines"], 0),
    ("dual_numbers_f5", "cohomology", &["cohomology", "--window", "0..3"], 0),
    ("nonassociative", "validate", &["validate"], 1),
    ("nonassociative", "json", &["validate", "--format", "json-lines"], 1),
    ("odd_generator", "validate", &["validate"], 0),
    ("odd_generator", "cohomology", &["cohomology", "--window", "0..3"], 0),
    ("sl2", "validate", &["validate"], 0),
    ("sl2", "vofw", &["validate", "--convention", "v-of-w"], 0),
    ("sl2", "bracket", &["bracket", "--left", "l", "--right", "lam"], 0),
    ("sl2", "cohomology", &["cohomology", "--window", "0..3"], 0),
    ("sl2", "cyclic", &["cyclic", "--window", "0..3"], 0),
    ("sl2", "deform", &["deform"], 0),
    ("sl2", "convert", &["convert"], 0),
    ("sl2", "reversed", &["convert", "--reversed"], 0),
];

pub fn run_cli(args: &[&str], file: &Path) -> infalg::cli::Outcome {
    let file = file.to_str().unwrap();
    infalg::cli::main_with_args(std::iter::once("infalg").chain(args.iter().copied()).chain(std::iter::once(file)))
}

/// Every parity vector of length `n`.
pub fn parity_vectors(n: usize) -> Vec<Vec<Parity>> {
    (0..1u32 << n).map(|mask| (0..n).map(|i| Parity::from(mask >> i & 1 == 1)).collect()).collect()
}

/// Spaces of dimension 1 and 2 with every parity assignment.
pub fn small_spaces() -> Vec<Arc<GradedSpace>> {
    (1..=2).flat_map(parity_vectors).map(|p| GradedSpace::anonymous(&p)).collect()
}

pub fn random_space(rng: &mut ChaCha8Rng, max_dim: usize) -> Arc<GradedSpace> {
    let d = rng.gen_range(1..=max_dim);
    let p: Vec<Parity> = (0..d).map(|_| Parity::from(rng.gen_bool(0.5))).collect();
    GradedSpace::anonymous(&p)
}

/// Cochain with small random integer entries on canonical tuples.
pub fn random_cochain(rng: &mut ChaCha8Rng, v: &Arc<GradedSpace>, flavor: Flavor, k: usize, parity: Parity) -> Cochain {
    let mut c = Cochain::zero(v, flavor, k, parity);
    for t in v.canonical_tuples(flavor, k) {
        let target = v.tuple_parity(&t) + parity;
        let mut val = Vector::zero();
        for j in 0..v.dim() {
            if v.parity(j) == target && rng.gen_bool(0.6) {
                val.add_term(j, v.field().int(rng.gen_range(-3..=3)));
            }
        }
        c.set(&t, val).unwrap();
    }
    c
}

/// Random cochain of the parity a structure part of arity `k` needs.
pub fn random_part(rng: &mut ChaCha8Rng, v: &Arc<GradedSpace>, flavor: Flavor, k: usize) -> Cochain {
    random_cochain(rng, v, flavor, k, Parity::of(k as i64))
}

pub fn random_scalar(rng: &mut ChaCha8Rng, v: &Arc<GradedSpace>, flavor: Flavor, degree: usize) -> ScalarCochain {
    let mut f = ScalarCochain::zero(v, flavor, degree);
    for t in v.canonical_tuples(flavor, degree + 1) {
        if rng.gen_bool(0.6) {
            f.set(&t, v.field().int(rng.gen_range(-3..=3))).unwrap();
        }
    }
    f
}

/// Parts of one arity of a family.
pub fn arity_slice(f: &Family, n: usize) -> Family {
    Family::from_parts(f.space(), f.flavor(), f.parts_of_arity(n).cloned()).unwrap()
}
