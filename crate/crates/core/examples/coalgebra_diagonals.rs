//! Reduced diagonals of words in the tensor, exterior and symmetric coalgebras.

use infalg::coalgebra::diagonal;
use infalg::{Flavor, GradedSpace, Parity, Word};

fn main() {
    let v = GradedSpace::from_pairs(&[("a", Parity::Even), ("x", Parity::Odd)]);
    let q = v.field();
    for flavor in [Flavor::Tensor, Flavor::Exterior, Flavor::Symmetric] {
        let word = Word::new(flavor, vec![0, 1, 1], q.one());
        println!("{flavor}: Δ(a x x)");
        let pairs = diagonal(&word, &v);
        if pairs.is_empty() {
            println!("  0 (the word vanishes)");
        }
        for ((left, right), c) in &pairs {
            println!("  {c} · {} ⊗ {}", v.format_tuple(left), v.format_tuple(right));
        }
    }
}
