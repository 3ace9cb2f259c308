//! Koszul signs of permutations and the unshuffles used by L-infinity sums.

use infalg::perm::{koszul_epsilon, sign_of_permutation, unshuffles};
use infalg::{Parity, Permutation};

fn main() {
    let parities = [Parity::Odd, Parity::Even, Parity::Odd];
    println!("parities {parities:?}");
    for sigma in Permutation::all(3) {
        let eps = koszul_epsilon(&sigma, &parities).unwrap();
        let sgn = sign_of_permutation(&sigma);
        println!("  σ = {sigma}  ε = {:+}  (−1)^σ = {:+}", sign(eps), sign(sgn));
    }
    println!("unshuffles of type (2,2):");
    for sigma in unshuffles(2, 2) {
        println!("  {sigma}");
    }
}

fn sign(p: Parity) -> i8 {
    if p.is_odd() {
        -1
    } else {
        1
    }
}
