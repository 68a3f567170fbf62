//! Exhaustive bounded search for solutions of x^k + y^k = z^k: the cubic
//! box is full of counterexample families, the quartic and quintic boxes
//! come back empty.
//!
//! Run with: cargo run -p ztau --example fermat_search

use ztau::fermat::{search, verify_report, SearchConfig};

fn main() {
    let cubic = search(&SearchConfig::new(3, 12).with_workers(4));
    println!(
        "k=3, bound=12: {} solutions from {} pairs in {:?} (re-verified: {})",
        cubic.solutions.len(),
        cubic.pairs_tested,
        cubic.elapsed,
        verify_report(&cubic)
    );
    for t in cubic.solutions.iter().take(6) {
        println!("  {t}");
    }
    println!("  ...");

    for k in [4, 5] {
        let report = search(&SearchConfig::new(k, 12).with_workers(4));
        println!(
            "k={k}, bound=12: {} solutions from {} pairs in {:?}",
            report.solutions.len(),
            report.pairs_tested,
            report.elapsed
        );
    }
}
