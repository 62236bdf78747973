//! p-adic points with a prescribed local invariant, certified by Hensel.

use erdos_straus::arith::{Prime, Sign};
use erdos_straus::padic::{hensel_lift, sample_bad_odd_prime, sample_even_two};

fn main() {
    for n in [15u64, 21, 45] {
        for p in [3u64, 5, 7] {
            if n % p != 0 {
                continue;
            }
            let p = Prime::new(p).unwrap();
            for t in [Sign::Plus, Sign::Minus] {
                let pt = sample_bad_odd_prime(n, p, t, 6).unwrap();
                println!(
                    "n={n} p={p} target {t}: {:?} mod {p}^{} valuations {:?}",
                    pt.residues(),
                    pt.precision(),
                    pt.valuations()
                );
            }
        }
    }

    for n in [2u64, 6, 12] {
        for t in [Sign::Plus, Sign::Minus] {
            let pt = sample_even_two(n, t, 8).unwrap();
            let fine = pt.refine(pt.precision() + 8).unwrap();
            println!(
                "n={n} p=2 target {t}: {:?}, refined {:?}",
                pt.residues(),
                fine.residues()
            );
        }
    }

    let lifted = hensel_lift(3, Prime::new(5).unwrap(), [1, 4, 12], 10).unwrap();
    println!("lift of (1,4,12) for n=3 to 5^10: {:?}", lifted.residues());
}
