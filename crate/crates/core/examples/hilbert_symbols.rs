use erdos_straus::arith::{primes_between, rat};
use erdos_straus::hilbert::{hilbert, hilbert_oracle, reciprocity_check, relevant_places, Place};

fn main() {
    let pairs = [
        (rat(-1, 1), rat(-1, 1)),
        (rat(2, 1), rat(5, 1)),
        (rat(-3, 7), rat(10, 9)),
    ];
    for (a, b) in &pairs {
        let places = relevant_places(a, b).unwrap();
        print!("({a}, {b}):");
        for v in &places {
            print!(" {v}={}", hilbert(a, b, *v).unwrap());
        }
        println!("  product {}", reciprocity_check(a, b).unwrap());
    }

    // the closed formulas against brute-force search for local squares
    let (a, b) = (rat(-6, 5), rat(15, 4));
    for p in primes_between(2, 11) {
        let v = Place::Finite(p);
        let depth = if p.is_two() { 6 } else { 3 };
        println!(
            "at {p}: formula {} oracle {}",
            hilbert(&a, &b, v).unwrap(),
            hilbert_oracle(&a, &b, v, depth).unwrap()
        );
    }
}
