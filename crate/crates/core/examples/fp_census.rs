use erdos_straus::arith::primes_between;
use erdos_straus::fp::{census, observed_threshold};

fn main() {
    for n in [2u64, 3, 7] {
        for p in primes_between(2, 23) {
            let c = census(n, p);
            println!(
                "n={n} p={p}: {} points, {} reached, witness {:?}",
                c.total, c.image, c.witness
            );
        }
    }
    for n in 1..=10u64 {
        println!(
            "n={n}: missed points at every prime from {:?} to 100",
            observed_threshold(n, 100)
        );
    }
}
