//! Cyclic cohomology with and without an inner product, compared with
//! trivial-coefficient cohomology shifted by one.

use infalg::cli::format::parse;
use infalg::homology::cyclic::{cyclic_cohomology, cyclicize, is_tilde_cyclic};
use infalg::homology::Window;
use infalg::oracle::ce_trivial_dims;
use infalg::{Convention, Flavor, GradedSpace, Parity, ScalarCochain};

fn main() {
    let window = Window::new(0, 3).unwrap();
    let sl2 = parse(include_str!("../fixtures/sl2.alg")).unwrap();
    let s = sl2.structure(Convention::WOfV, 8).unwrap();
    let hc = cyclic_cohomology(&s, sl2.inner_product.as_ref(), window).unwrap();
    let l = s.parts().parts().next().unwrap();
    println!("sl2 with the Killing form: HC = {:?}", hc.dims());
    println!("  H^1..4(sl2, k) = {:?}", ce_trivial_dims(l, 1, 4).unwrap());
    for rep in &hc.degree(2).unwrap().representatives {
        for (t, c) in rep.entries() {
            println!("  class in degree 2: ω{} = {c}", s.space().format_tuple(t));
        }
    }

    let aff = parse(include_str!("../fixtures/aff1.alg")).unwrap().structure(Convention::WOfV, 8).unwrap();
    println!("aff(1) without an inner product: HC = {:?}", cyclic_cohomology(&aff, None, window).unwrap().dims());

    let v = GradedSpace::from_pairs(&[("a", Parity::Even), ("x", Parity::Odd)]);
    let f = ScalarCochain::elementary(&v, Flavor::Tensor, &[0, 1, 1]).unwrap();
    let c = cyclicize(&f).unwrap();
    println!("C(f) for f = indicator of (a,x,x) is cyclic: {}", is_tilde_cyclic(&c).unwrap());
}
