//! Chevalley-Eilenberg cohomology with adjoint coefficients of sl2 and of
//! the nonabelian two-dimensional Lie algebra.

use infalg::cli::format::parse;
use infalg::homology::{cohomology, Window};
use infalg::oracle::ce_adjoint_dims_oracle;
use infalg::Convention;

fn main() {
    for (name, text) in [("sl2", include_str!("../fixtures/sl2.alg")), ("aff1", include_str!("../fixtures/aff1.alg"))] {
        let s = parse(text).unwrap().structure(Convention::WOfV, 8).unwrap();
        let dims: Vec<usize> = cohomology(&s, Window::new(0, 3).unwrap()).unwrap().dims().iter().map(|d| d.1).collect();
        let l = s.parts().parts().next().unwrap();
        println!("{name}: H^0..3 = {dims:?}, oracle {:?}", ce_adjoint_dims_oracle(l, 0, 3).unwrap());
    }
}
