//! Exact arithmetic in ℤ[τ]: ring operations, conjugation, norms,
//! Euclidean division, gcd, canonical associates and root extraction.
//!
//! Run with: cargo run -p ztau --example ring_arithmetic

use ztau::ring::RingElement;

fn main() {
    let tau = RingElement::tau();

    // τ² = τ + 1 is the whole multiplication table
    println!("τ·τ       = {}", &tau * &tau);
    println!("(1+2τ)²   = {}", RingElement::new(1, 2).pow(2));
    println!("(6+6τ)³   = {}", RingElement::new(6, 6).pow(3));

    // conjugation and norm
    let x = RingElement::new(2, 1);
    println!("σ(2+τ)    = {}", x.conj());
    println!("N(2+τ)    = {}", x.norm());
    println!("N(τ)      = {}", tau.norm());

    // the real embedding is exact; decimals are printed on demand
    println!("τ         = {}", tau.embed().decimal_string(6));
    println!("τ⁻¹ = τ−1 = {}", RingElement::tau_power(-1));

    // Euclidean division: x = qy + r with |N(r)| < |N(y)|
    let (q, r) = RingElement::new(7, 9)
        .euclid_div(&RingElement::new(2, -1))
        .unwrap();
    println!("7+9τ = ({})·(2-t) + {}", q, r);

    // gcd lands on the canonical associate
    let d = RingElement::new(2, -1)
        .gcd(&RingElement::new(2, 3))
        .unwrap();
    println!("gcd(2-t, 2+3t) = {d}");

    // associates differ by ±τ^k; the canonical one is pinned down uniquely
    let (rep, unit) = RingElement::new(-5, -8).canonical_associate().unwrap();
    println!("-5-8τ = ({unit})·({rep})");

    // square and cube roots, exactly verified
    println!(
        "sqrt(5+8τ)          = {:?}",
        RingElement::new(5, 8).sqrt().map(|r| r.to_string())
    );
    println!("sqrt(2)             = {:?}", RingElement::new(2, 0).sqrt());
    println!(
        "cbrt(1080+1728τ)    = {:?}",
        RingElement::new(1080, 1728)
            .kth_root(3)
            .map(|r| r.to_string())
    );
}
