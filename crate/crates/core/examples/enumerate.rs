//! Lists the solutions for a few small `n`, natural and integral.

use erdos_straus::enumerate::{degenerate_families, integer_solutions, natural_solutions};

fn main() {
    for n in [2u64, 3, 5, 8, 13] {
        let nat = natural_solutions(n);
        let all = integer_solutions(n);
        println!("n = {n}: {} natural, {} integral", nat.len(), all.len());
        for t in &nat {
            println!("  {t}");
        }
        for t in all.iter().filter(|t| !nat.contains(t)).take(3) {
            println!("  {t}  (integer)");
        }
        for fam in degenerate_families(n) {
            println!("  family member t=1: {:?}", fam.member(1));
        }
    }
}
