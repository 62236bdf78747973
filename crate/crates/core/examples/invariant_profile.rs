//! Local invariants of a handful of global points. Every profile multiplies
//! to +1; natural points have invariant −1 at infinity.

use erdos_straus::brauer::invariant_profile;
use erdos_straus::surface::Solution;

fn main() {
    let points = [
        (2, [1, 2, 2]),
        (3, [1, 4, 12]),
        (5, [-5, 2, 2]),
        (7, [2, 15, 210]),
        (9, [3, 12, 36]),
    ];
    for (n, u) in points {
        let s = Solution::new(n, u).unwrap();
        let r = invariant_profile(&s).unwrap();
        let inv: Vec<String> = r
            .invariants
            .iter()
            .map(|(v, e)| format!("{v}:{e}"))
            .collect();
        println!(
            "{s}  {}  [{}]  product {}",
            r.class,
            inv.join(" "),
            r.product
        );
    }
    let r = invariant_profile(&Solution::new(2, [1, 2, 2]).unwrap()).unwrap();
    println!("{}", serde_json::to_string(&r).unwrap());
}
