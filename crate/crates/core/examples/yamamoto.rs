use erdos_straus::arith::primes_between;
use erdos_straus::enumerate::natural_solutions;
use erdos_straus::yamamoto::yamamoto_check;

fn main() {
    for p in primes_between(3, 31) {
        for t in natural_solutions(p.get()) {
            let s = t.solution(p.get());
            match yamamoto_check(&s, p) {
                Ok(reports) => {
                    for r in reports {
                        let f = r.factorization;
                        let conds: Vec<String> = r
                            .conditions
                            .iter()
                            .map(|c| format!("{}={:?}", c.name, c.value))
                            .collect();
                        println!(
                            "{s}: (a,b,c,d)=({},{},{},{}) q={} {}",
                            f.a,
                            f.b,
                            f.c,
                            f.d,
                            f.q,
                            conds.join(" ")
                        );
                    }
                }
                Err(e) => println!("{s}: {e}"),
            }
        }
    }
}
