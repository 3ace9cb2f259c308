//! Moving a structure across the parity reversion and between the two sign
//! conventions.

use infalg::cli::format::parse;
use infalg::reversion::ReversionContext;
use infalg::Convention;

const SL2: &str = include_str!("../fixtures/sl2.alg");

fn main() {
    let file = parse(SL2).unwrap();
    for conv in [Convention::WOfV, Convention::VOfW] {
        let s = file.structure(conv, 8).unwrap();
        let ctx = ReversionContext::new(s.space(), conv);
        let delta = s.reversed();
        println!("{conv}: δ on the reversed side");
        for part in delta.parts() {
            for line in part.format_entries("δ") {
                println!("  {line}");
            }
        }
        let back = ctx.conjugate(&delta).unwrap();
        println!("  conjugating back recovers the bracket: {}", &back == s.parts());
        println!("  δ² = 0: {}", s.reversed_square().is_zero());
    }
    let s = file.structure(Convention::WOfV, 8).unwrap();
    println!("the same bracket written for v-of-w:");
    for line in s.converted().parts().parts().flat_map(|p| p.format_entries("l")) {
        println!("  {line}");
    }
}
