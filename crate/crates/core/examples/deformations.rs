//! Classifying infinitesimal deformations: cocycle, coboundary and the
//! inner-product conditions.

use infalg::cli::format::parse;
use infalg::homology::classify_deformation;
use infalg::Convention;

fn main() {
    for (name, text) in [
        ("dual numbers", include_str!("../fixtures/dual_numbers.alg")),
        ("sl2", include_str!("../fixtures/sl2.alg")),
    ] {
        let file = parse(text).unwrap();
        let s = file.structure(Convention::WOfV, 8).unwrap();
        for dir in &file.directions {
            let c = classify_deformation(&s, &dir.family(), file.inner_product.as_ref(), 1).unwrap();
            println!("{name}, direction {}:", dir.name);
            println!("  cocycle {}, coboundary {}", c.cocycle, c.coboundary);
            if let Some(w) = &c.witness {
                for line in w.parts().flat_map(|p| p.format_entries("β")) {
                    println!("  witness {line}");
                }
            }
            println!("  preserves the inner product: {:?}", c.preserves_ip);
            println!("  cyclic coboundary: {}", c.cyclic_coboundary.map_or("n/a".into(), |m| m.to_string()));
        }
    }
}
