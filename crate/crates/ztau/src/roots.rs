//! k-th root extraction in ℤ[τ].
//!
//! A root w of t is pinned down by its two real embeddings: if w = p + qτ
//! then embed(w) must be a real k-th root of embed(t) and embed(σ(w)) a real
//! k-th root of embed(σ(t)), and
//!
//!   q = (embed(w) − embed(σ(w)))/√5,   p = embed(w) − q·τ.
//!
//! Both embeddings are computed as integer k-th roots of exactly scaled
//! surds, so the proposed (p, q) is within ±1 of the truth at any input
//! size; a 3×3 lattice neighborhood is then verified exactly. No candidate
//! is ever accepted without exact verification, and no real root can be
//! missed by rounding.

use crate::ring::{round_half_away, RingElement};
use num_bigint::BigInt;
use num_traits::Signed;

/// log2 of the integer scale factor applied to embeddings before rooting.
const SCALE_BITS: u32 = 16;

/// floor-ish signed k-th root: within 2 of X^(1/k) for the floor X of a real.
fn root_of_floor(x: &BigInt, k: u32) -> BigInt {
    if x.is_negative() {
        -(-x).nth_root(k) - 1
    } else {
        x.nth_root(k)
    }
}

/// ≈ t·√5 with error at most 1, exact integer arithmetic.
fn times_sqrt5(t: &BigInt) -> BigInt {
    let root = (BigInt::from(5) * t * t).sqrt();
    if t.is_negative() {
        -root
    } else {
        root
    }
}

pub(crate) fn kth_root(t: &RingElement, k: u32) -> Option<RingElement> {
    if k < 2 {
        return if k == 1 { Some(t.clone()) } else { None };
    }
    if t.is_zero() {
        return Some(RingElement::zero());
    }

    let e_main = t.embed();
    let e_conj = t.embed_conj();
    let even = k.is_multiple_of(2);
    if even && (e_main.is_negative() || e_conj.is_negative()) {
        return None;
    }

    // Integer approximations of embed(root)·F and embed(σ(root))·F.
    let scale = BigInt::from(1) << SCALE_BITS;
    let scale_k = BigInt::from(1) << (SCALE_BITS * k);
    let main_scaled = root_of_floor(&e_main.scale(&scale_k).floor(), k);
    let conj_scaled = root_of_floor(&e_conj.scale(&scale_k).floor(), k);

    // For even k take the nonnegative main root (the canonical choice) and
    // try both signs on the conjugate side; odd k has a single real root on
    // each side.
    let conj_candidates: &[BigInt] = if even {
        &[conj_scaled.clone(), -&conj_scaled]
    } else {
        std::slice::from_ref(&conj_scaled)
    };

    for conj_root in conj_candidates {
        // q ≈ (E1 − E2)·√5 / (5F), exact to well under 1/2.
        let diff = &main_scaled - conj_root;
        let q = round_half_away(&times_sqrt5(&diff), &(5 * &scale));
        // p ≈ (2E1 − qF − qF√5) / 2F.
        let qf = &q * &scale;
        let p = round_half_away(&(2 * &main_scaled - &qf - times_sqrt5(&qf)), &(2 * &scale));

        for dp in -1i64..=1 {
            for dq in -1i64..=1 {
                let w = RingElement::new(&p + dp, &q + dq);
                if w.pow(k) == *t {
                    // Even roots come in ± pairs; report the one with
                    // nonnegative real embedding.
                    if even && w.embed().is_negative() {
                        return Some(-w);
                    }
                    return Some(w);
                }
            }
        }
    }
    None
}
