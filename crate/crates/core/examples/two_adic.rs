use erdos_straus::padic::{exhaust_two_adic, lemma_two_table};

fn main() {
    println!("r1 r2 r3%4 f g");
    for row in lemma_two_table() {
        println!("{} {} {} {} {}", row.r1, row.r2, row.r3_mod4, row.f, row.g);
    }

    for n in 1..=10u64 {
        let r = exhaust_two_adic(n, 8).unwrap();
        println!(
            "n={n:2} mod 2^8: {} solutions, {} with +1, {} with -1, {} unresolved, pass={}",
            r.solutions,
            r.plus,
            r.minus,
            r.unresolved,
            r.pass()
        );
    }
}
