//! Pythagorean triples in ℤ[τ]: generation from the (l, m, n) form,
//! bounded enumeration, and constructive decomposition back to a witness.
//!
//! Run with: cargo run -p ztau --example pythagorean_triples

use ztau::ring::RingElement;
use ztau::triples::{decompose, enumerate, Parametrization, PowerTriple};

fn main() {
    // x = ±2lmn, y = l(m²−n²), z = l(m²+n²)
    let p = Parametrization::new(
        RingElement::one(),
        RingElement::tau(),
        RingElement::one(),
        false,
        false,
    );
    let t = p.triple();
    println!(
        "witness (l=1, m=t, n=1) generates {t}, verifies: {}",
        t.verify()
    );

    // every triple comes from such a witness; recover one constructively
    for (x, y, z) in [((4, 0), (3, 0), (5, 0)), ((1, 2), (2, 4), (3, 4))] {
        let t = PowerTriple::new(
            RingElement::new(x.0, x.1),
            RingElement::new(y.0, y.1),
            RingElement::new(z.0, z.1),
            2,
        );
        let witness = decompose(&t).unwrap();
        println!(
            "{t}  ←  l={}, m={}, n={}, sign={:+}, swapped={}",
            witness.l,
            witness.m,
            witness.n,
            witness.sign(),
            witness.swapped
        );
        assert_eq!(witness.triple(), t);
    }

    // enumerate distinct nontrivial triples with small witnesses
    println!("first 8 triples from witnesses bounded by 2:");
    for t in enumerate(2, 8) {
        println!("  {t}");
    }
}
