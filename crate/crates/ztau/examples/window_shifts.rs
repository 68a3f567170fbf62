//! Shifting solution triples into the model set: every nontrivial solution
//! of x^k + y^k = z^k has a minimal exponent N with x·τⁿ, y·τⁿ, z·τⁿ all
//! inside the window exactly when n ≥ N.
//!
//! Run with: cargo run -p ztau --example window_shifts

use ztau::ring::RingElement;
use ztau::triples::PowerTriple;
use ztau::window_shift::{min_shift, solution_family};

fn triple(x: (i64, i64), y: (i64, i64), z: (i64, i64), k: u32) -> PowerTriple {
    PowerTriple::new(
        RingElement::new(x.0, x.1),
        RingElement::new(y.0, y.1),
        RingElement::new(z.0, z.1),
        k,
    )
}

fn main() {
    let examples = [
        triple((0, 1), (0, 2), (2, 1), 2),    // (τ, 2τ, 2+τ)
        triple((2, 12), (11, 8), (3, 18), 2), // a larger Pythagorean solution
        triple((4, 3), (5, 6), (6, 6), 3),    // the cubic counterexample
    ];
    for t in &examples {
        let r = min_shift(t).unwrap();
        let sigma: Vec<String> = r.sigma_values.iter().map(|s| s.decimal_string(6)).collect();
        println!("{t}");
        println!("  N = {}", r.exponent);
        println!("  shifted: {}", r.shifted);
        println!("  σ-images: {}", sigma.join(", "));
    }

    // τ-shifting the cubic solution gives as many in-window solutions as
    // desired, all distinct
    let family = solution_family(&examples[2], 5).unwrap();
    println!("first 5 cubic solutions inside the window:");
    for member in family {
        println!("  {member}");
    }
}
