//! Plain and modified brackets of cochains, and the self-bracket of an
//! associative product.

use infalg::coderiv::{bracket, modified_bracket};
use infalg::{Cochain, Convention, Flavor, GradedSpace, Parity, Vector};

fn main() {
    let v = GradedSpace::from_pairs(&[("a", Parity::Even), ("b", Parity::Even)]);
    let q = v.field();
    // m(a,a) = b, m(a,b) = a: not associative.
    let mut m = Cochain::zero(&v, Flavor::Tensor, 2, Parity::Even);
    m.set(&[0, 0], Vector::basis(1, q)).unwrap();
    m.set(&[0, 1], Vector::basis(0, q)).unwrap();

    // d(a) = b as a degree-one map.
    let mut d = Cochain::elementary(&v, Flavor::Tensor, &[0], 1).unwrap();
    d = d.scale(&q.int(2));

    println!("[m,m]   = {}", bracket(&m, &m).unwrap());
    for conv in [Convention::WOfV, Convention::VOfW] {
        println!("{{m,m}}   = {}  ({conv})", modified_bracket(&m, &m, conv).unwrap());
        println!("{{d,m}}   = {}  ({conv})", modified_bracket(&d, &m, conv).unwrap());
    }
}
