//! τ-power shift dynamics: for a nontrivial solution of x^k + y^k = z^k,
//! the exponents n with all of x·τⁿ, y·τⁿ, z·τⁿ in the model set form an
//! upward-closed set with a minimal element N, and the equation survives
//! every shift because (x·τⁿ)^k + (y·τⁿ)^k = (x^k + y^k)·τ^{nk}.

use crate::error::Error;
use crate::model_set::Window;
use crate::ring::RingElement;
use crate::surd::HalfSurd;
use crate::triples::PowerTriple;

/// The outcome of shifting a solution triple into the model set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftResult {
    /// Minimal exponent N with all three components in the model set for
    /// every n ≥ N; at N−1 at least one component falls outside.
    pub exponent: i64,
    /// The triple multiplied through by τ^N.
    pub shifted: PowerTriple,
    /// Exact σ-images of the three shifted components.
    pub sigma_values: [HalfSurd; 3],
}

/// Least exponent from which x·τⁿ sits in the model set for every n ≥
/// that exponent.
///
/// σ(x·τⁿ) = σ(x)·τ'ⁿ shrinks geometrically, so the walk starts from an
/// exponent verified to be outside (|σ| > 1, which only grows further
/// down) and ascends with exact window tests. A membership point is
/// accepted only if the next exponent is also a member: the orbit {−τ^k}
/// touches the window exactly at σ = −1 and leaves it again one step
/// later at σ = τ−1, and that isolated visit does not count as entering.
pub fn min_window_exponent(x: &RingElement) -> Result<i64, Error> {
    if x.is_zero() {
        return Err(Error::ZeroInput("min_window_exponent"));
    }
    let window = Window::fibonacci();
    let one = HalfSurd::from_integer(1);
    let minus_one = HalfSurd::from_integer(-1);

    let mut n: i64 = 0;
    let mut sigma = x.embed_conj();
    // descend until |σ·τ'ⁿ| > 1; magnitudes only grow below that point
    while sigma <= one && sigma >= minus_one {
        sigma = sigma.times_neg_tau();
        n -= 1;
    }
    loop {
        let next = sigma.times_tau_conj();
        if window.admits(&sigma) && window.admits(&next) {
            return Ok(n);
        }
        sigma = next;
        n += 1;
    }
}

/// Minimal N with all three components of the triple in the model set
/// after multiplication by τ^n for every n ≥ N, and some component
/// outside at N−1.
pub fn min_shift(t: &PowerTriple) -> Result<ShiftResult, Error> {
    if !t.is_nontrivial() {
        return Err(Error::ZeroComponent);
    }
    if !t.verify() {
        return Err(Error::NotASolution);
    }
    let exponent = min_window_exponent(&t.x)?
        .max(min_window_exponent(&t.y)?)
        .max(min_window_exponent(&t.z)?);
    let shifted = t.scale(&RingElement::tau_power(exponent));
    debug_assert!(shifted.verify());
    let sigma_values = [
        shifted.x.embed_conj(),
        shifted.y.embed_conj(),
        shifted.z.embed_conj(),
    ];
    Ok(ShiftResult {
        exponent,
        shifted,
        sigma_values,
    })
}

/// The first `count` members of the solution family t·τ^(N+i), i ≥ 0:
/// pairwise distinct solutions of the same equation, all inside the
/// model set.
pub fn solution_family(t: &PowerTriple, count: usize) -> Result<Vec<PowerTriple>, Error> {
    let shift = min_shift(t)?;
    let tau = RingElement::tau();
    let mut out = Vec::with_capacity(count);
    let mut current = shift.shifted;
    for _ in 0..count {
        let next = current.scale(&tau);
        out.push(std::mem::replace(&mut current, next));
    }
    Ok(out)
}
