//! Validating structures by explicit relations, the self-bracket and the
//! reversed square.

use infalg::cli::format::parse;
use infalg::Convention;

const FIXTURES: [(&str, &str); 4] = [
    ("dual numbers", include_str!("../fixtures/dual_numbers.alg")),
    ("sl2", include_str!("../fixtures/sl2.alg")),
    ("dga", include_str!("../fixtures/dga.alg")),
    ("nonassociative", include_str!("../fixtures/nonassociative.alg")),
];

fn main() {
    for (name, text) in FIXTURES {
        let s = parse(text).unwrap().structure(Convention::WOfV, 8).unwrap();
        let report = s.validate().unwrap();
        let routes = s.validation_routes().unwrap();
        match &report.failure {
            None => println!("{name}: ok up to n = {}", report.checked_up_to),
            Some(f) => println!(
                "{name}: relation n = {} fails on {} with residual {}",
                f.n,
                s.space().format_tuple(&f.tuple),
                f.residual.format(s.space())
            ),
        }
        println!("  routes agree: {} ({routes:?})", routes.agree());
    }
}
