//! Numerical invariants of genus-2 Lefschetz fibrations: the closed-form
//! Euler characteristic, signature, holomorphic Euler characteristic,
//! Chern number, and slope for a table of admissible types.

use genus2::factorization::FibrationType;
use genus2::geography::{invariants_from_type, slope};

fn main() {
    let types = [
        (4u32, 3u32),   // smallest fibration
        (6, 2),         // Matsumoto
        (8, 6),
        (10, 10),       // the simply connected construction
        (16, 17),
        (20, 0),
        (24, 38),       // slope 53/9
        (28, 41),
        (30, 0),
        (40, 0),
    ];
    println!("{:>8} {:>5} {:>6} {:>6} {:>6} {:>8}", "type", "e", "sigma", "chi_h", "c1^2", "slope");
    for (n, s) in types {
        let t = FibrationType { n, s };
        let inv = invariants_from_type(t).unwrap();
        let a = slope(t).map(|a| a.to_string()).unwrap_or_else(|_| "-".into());
        println!(
            "{:>8} {:>5} {:>6} {:>6} {:>6} {:>8}",
            t.to_string(),
            inv.e,
            inv.sigma,
            inv.chi_h,
            inv.c1sq,
            a
        );
    }

    // the admissibility constraint: n + 2s = 0 mod 10
    let bad = FibrationType { n: 5, s: 1 };
    println!("\n(5,1): {}", invariants_from_type(bad).unwrap_err());
}
