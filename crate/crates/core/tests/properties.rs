//! Randomized algebraic laws driven by proptest seeds.

mod common;

use common::*;
use infalg::cli::format::parse;
use infalg::coderiv::{bracket_with, modified_bracket};
use infalg::homology::coboundary_family;
use infalg::homology::cyclic::{cyclicize, is_tilde_cyclic};
use infalg::{Convention, Family, Flavor, GradingForm, Parity};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn flavor(exterior: bool) -> Flavor {
    if exterior {
        Flavor::Exterior
    } else {
        Flavor::Tensor
    }
}

fn convention(flip: bool) -> Convention {
    if flip {
        Convention::VOfW
    } else {
        Convention::WOfV
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brackets_are_graded_antisymmetric(seed: u64, exterior: bool, flip: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_space(&mut rng, 2);
        let f = flavor(exterior);
        let pick = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(1..=3);
            let p = Parity::from(rng.gen_bool(0.5));
            random_cochain(rng, &v, f, k, p)
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let one = a.field().one();

        let odd = GradingForm::ProductForm.pair(a.bidegree(), b.bidegree()).is_odd();
        let ab = bracket_with(&a, &b, GradingForm::ProductForm).unwrap();
        let ba = bracket_with(&b, &a, GradingForm::ProductForm).unwrap();
        prop_assert_eq!(ab, ba.scale(&one.clone().signed(!odd)));

        let conv = convention(flip);
        let odd = GradingForm::ShiftedForm.pair(a.bidegree(), b.bidegree()).is_odd();
        let ab = modified_bracket(&a, &b, conv).unwrap();
        let ba = modified_bracket(&b, &a, conv).unwrap();
        prop_assert_eq!(ab, ba.scale(&one.signed(!odd)));
    }

    #[test]
    fn coboundary_squares_to_zero(seed: u64, index: usize, flip: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = structure(VALID[index % VALID.len()], convention(flip));
        let k = rng.gen_range(0..=3);
        let p = Parity::from(rng.gen_bool(0.5));
        let phi = Family::single(random_cochain(&mut rng, s.space(), s.flavor(), k, p));
        let once = coboundary_family(&phi, &s).unwrap();
        prop_assert!(coboundary_family(&once, &s).unwrap().is_zero());
    }

    #[test]
    fn cyclicization_is_cyclic(seed: u64, degree in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_space(&mut rng, 2);
        let f = random_scalar(&mut rng, &v, Flavor::Tensor, degree);
        let c = cyclicize(&f).unwrap();
        prop_assert!(is_tilde_cyclic(&c).unwrap());
        let n = v.field().int(degree as i64 + 1);
        prop_assert_eq!(cyclicize(&c).unwrap(), c.scale(&n));
    }

    #[test]
    fn perturbed_fixtures_round_trip(index: usize, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut file = load(FIXTURES[index % FIXTURES.len()]);
        if let Some(map) = file.maps.first_mut() {
            let k = rng.gen_range(1..=3);
            let bump = random_part(&mut rng, &file.space, file.flavor, k);
            map.cochain = bump;
        }
        let text = file.to_text();
        let reparsed = parse(&text).unwrap();
        prop_assert_eq!(reparsed.to_text(), text);
    }
}
