//! Adelic points on both sides of the Brauer pairing for several `n`.

use erdos_straus::brauer::{adelic_total_invariant, brauer_set_witnesses, LocalPoint};

fn main() {
    for n in [2u64, 3, 6, 15, 35, 60] {
        let (plus, minus) = brauer_set_witnesses(n).unwrap();
        for (name, x) in [("in", &plus), ("out", &minus)] {
            let total = adelic_total_invariant(x).unwrap();
            print!("n={n} {name}: real {:?}", x.real());
            for (p, pt) in x.finite() {
                if let LocalPoint::Padic(pt) = pt {
                    print!(" | {p}: {:?}", pt.residues());
                }
            }
            println!(" => {total}");
        }
    }
}
