//! The Fibonacci model set two ways: substitution patches and the exact
//! σ-window test, including the two singular boundary points where the
//! descriptions differ.
//!
//! Run with: cargo run -p ztau --example model_set_patches

use ztau::model_set::{contains, members_in_interval, Patch};
use ztau::ring::RingElement;

fn main() {
    for i in 0..=2 {
        let patch = Patch::generate(i).unwrap();
        let points: Vec<String> = patch.points().iter().map(|p| p.to_string()).collect();
        println!("patch({i}): {} points: {}", patch.len(), points.join(", "));
    }

    // membership is decided exactly from σ(x) ∈ [−1, τ−1)
    for x in [
        RingElement::zero(),
        RingElement::tau(),
        RingElement::new(2, 1),
        RingElement::new(3, 4),
    ] {
        let sigma = x.conj();
        println!(
            "σ({x}) = {sigma} = {} → member: {}",
            sigma.embed().decimal_string(6),
            contains(&x)
        );
    }

    // the two singular points: −1 is in the set but in no patch, −τ is in
    // every patch but not in the set
    println!("contains(-1) = {}", contains(&RingElement::new(-1, 0)));
    println!("contains(-t) = {}", contains(&RingElement::new(0, -1)));

    // cut-and-project enumeration over a real interval
    let lo = RingElement::new(-3, 0).embed();
    let hi = RingElement::new(3, 0).embed();
    let members: Vec<String> = members_in_interval(&lo, &hi)
        .iter()
        .map(|m| m.to_string())
        .collect();
    println!("members in [-3, 3]: {}", members.join(", "));
}
