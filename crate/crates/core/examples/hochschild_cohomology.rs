//! Hochschild cohomology of the dual numbers, with representatives, checked
//! against the dense oracle.

use infalg::cli::format::parse;
use infalg::homology::{cohomology, Window};
use infalg::oracle::hochschild_dims_oracle;
use infalg::Convention;

const DUAL: &str = include_str!("../fixtures/dual_numbers.alg");

fn main() {
    let s = parse(DUAL).unwrap().structure(Convention::WOfV, 8).unwrap();
    let report = cohomology(&s, Window::new(0, 3).unwrap()).unwrap();
    for d in &report.degrees {
        println!("H^{} = {} (cocycles {}, coboundaries {})", d.degree, d.dim, d.cocycles, d.coboundaries);
        for rep in &d.representatives {
            for line in rep.parts().flat_map(|p| p.format_entries("φ")) {
                println!("    {line}");
            }
        }
    }
    let m = s.parts().parts().next().unwrap();
    println!("oracle: {:?}", hochschild_dims_oracle(m, 0, 3).unwrap());
}
