//! Pythagorean and higher-power triples over ℤ[τ].
//!
//! Every Pythagorean triple in ℤ[τ] arises, up to interchanging x and y,
//! from the three-parameter form
//!
//!   x = ±2lmn,  y = l(m² − n²),  z = l(m² + n²),
//!
//! and `decompose` recovers such a witness constructively: split z² − y²
//! as (z−y)(z+y), divide out the gcd, and peel a unit and two squares off
//! the coprime cofactors.

use crate::error::Error;
use crate::ring::RingElement;
use std::collections::HashSet;

/// A triple (x, y, z) considered against the equation x^k + y^k = z^k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerTriple {
    pub x: RingElement,
    pub y: RingElement,
    pub z: RingElement,
    pub k: u32,
}

impl PowerTriple {
    pub fn new(x: RingElement, y: RingElement, z: RingElement, k: u32) -> Self {
        PowerTriple { x, y, z, k }
    }

    /// Exact check of x^k + y^k = z^k.
    pub fn verify(&self) -> bool {
        &self.x.pow(self.k) + &self.y.pow(self.k) == self.z.pow(self.k)
    }

    /// All three components nonzero.
    pub fn is_nontrivial(&self) -> bool {
        !self.x.is_zero() && !self.y.is_zero() && !self.z.is_zero()
    }

    /// Componentwise multiplication by a common factor; preserves the
    /// equation since f^k distributes over both sides.
    pub fn scale(&self, f: &RingElement) -> Self {
        PowerTriple {
            x: &self.x * f,
            y: &self.y * f,
            z: &self.z * f,
            k: self.k,
        }
    }
}

impl std::fmt::Display for PowerTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}) @ k={}", self.x, self.y, self.z, self.k)
    }
}

/// A witness (l, m, n, sign, swapped) for the Pythagorean form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    pub l: RingElement,
    pub m: RingElement,
    pub n: RingElement,
    /// true means the x-term carries the − sign: x = −2lmn.
    pub negative: bool,
    /// true means x and y trade places in the generated triple.
    pub swapped: bool,
}

impl Parametrization {
    pub fn new(
        l: RingElement,
        m: RingElement,
        n: RingElement,
        negative: bool,
        swapped: bool,
    ) -> Self {
        Parametrization {
            l,
            m,
            n,
            negative,
            swapped,
        }
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// Realize the witness as a Pythagorean triple (k = 2).
    pub fn triple(&self) -> PowerTriple {
        let lm = &self.l * &self.m;
        let mut x = &(&lm * &self.n) + &(&lm * &self.n);
        if self.negative {
            x = -x;
        }
        let m2 = &self.m * &self.m;
        let n2 = &self.n * &self.n;
        let y = &self.l * &(&m2 - &n2);
        let z = &self.l * &(&m2 + &n2);
        if self.swapped {
            PowerTriple::new(y, x, z, 2)
        } else {
            PowerTriple::new(x, y, z, 2)
        }
    }
}

/// Generate a triple from a witness; identical to [`Parametrization::triple`].
pub fn from_params(p: &Parametrization) -> PowerTriple {
    p.triple()
}

/// Coefficient-lexicographic order on (m, n); used to canonicalize the
/// (x, y) pair of a triple, which the equation leaves interchangeable.
fn lex_le(a: &RingElement, b: &RingElement) -> bool {
    (a.m(), a.n()) <= (b.m(), b.n())
}

/// Lazily enumerate distinct nontrivial Pythagorean triples generated by
/// witnesses with all six coefficients in [−bound, bound], deduplicated up
/// to coordinate order, in a fixed deterministic order, at most `limit`.
pub fn enumerate(bound: u32, limit: usize) -> Enumerate {
    let b = bound as i64;
    let mut elements = Vec::new();
    for m in -b..=b {
        for n in -b..=b {
            elements.push(RingElement::new(m, n));
        }
    }
    Enumerate {
        elements,
        li: 0,
        mi: 0,
        ni: 0,
        seen: HashSet::new(),
        remaining: limit,
    }
}

pub struct Enumerate {
    elements: Vec<RingElement>,
    li: usize,
    mi: usize,
    ni: usize,
    seen: HashSet<(RingElement, RingElement, RingElement)>,
    remaining: usize,
}

impl Iterator for Enumerate {
    type Item = PowerTriple;

    fn next(&mut self) -> Option<PowerTriple> {
        if self.remaining == 0 {
            return None;
        }
        let count = self.elements.len();
        while self.li < count {
            let p = Parametrization::new(
                self.elements[self.li].clone(),
                self.elements[self.mi].clone(),
                self.elements[self.ni].clone(),
                false,
                false,
            );
            self.ni += 1;
            if self.ni == count {
                self.ni = 0;
                self.mi += 1;
                if self.mi == count {
                    self.mi = 0;
                    self.li += 1;
                }
            }
            let t = p.triple();
            if !t.is_nontrivial() {
                continue;
            }
            let (a, b) = if lex_le(&t.x, &t.y) {
                (t.x.clone(), t.y.clone())
            } else {
                (t.y.clone(), t.x.clone())
            };
            if self.seen.insert((a.clone(), b.clone(), t.z.clone())) {
                self.remaining -= 1;
                return Some(PowerTriple::new(a, b, t.z, 2));
            }
        }
        None
    }
}

/// Recover a witness for a nontrivial Pythagorean triple, following the
/// constructive route: d = gcd(z−y, z+y), a = (z+y)/d, b = (z−y)/d are
/// coprime with ab = (x/d)², so a = u·m² and b = u·n² for a unit u that
/// can be taken from {1, −1, τ⁻¹, −τ⁻¹} (even τ-powers fold into the
/// squares). The 2 | du case split then reads the witness off directly.
///
/// The returned witness regenerates the input triple exactly; candidates
/// are tried in a fixed order, so the result is deterministic.
pub fn decompose(t: &PowerTriple) -> Result<Parametrization, Error> {
    if t.k != 2 || !t.verify() {
        return Err(Error::NotASolution);
    }
    if !t.is_nontrivial() {
        return Err(Error::ZeroComponent);
    }

    let sum = &t.z + &t.y;
    let diff = &t.z - &t.y;
    let d = diff.gcd(&sum)?;
    let a = d
        .divides(&sum)
        .ok_or(Error::Internal("gcd does not divide z+y"))?;
    let b = d
        .divides(&diff)
        .ok_or(Error::Internal("gcd does not divide z-y"))?;

    // Unit candidates in fixed order; u⁻¹ alongside each.
    let tau_inv = RingElement::new(-1, 1);
    let candidates = [
        (RingElement::one(), RingElement::one()),
        (-&RingElement::one(), -&RingElement::one()),
        (tau_inv.clone(), RingElement::tau()),
        (-&tau_inv, -&RingElement::tau()),
    ];
    let mut found = None;
    for (unit, unit_inv) in &candidates {
        if let (Some(m), Some(n)) = ((&a * unit_inv).sqrt(), (&b * unit_inv).sqrt()) {
            found = Some((unit.clone(), m, n));
            break;
        }
    }
    let (unit, m, mut n) = found.ok_or(Error::Internal("no unit makes both cofactors square"))?;

    let du = &d * &unit;
    let two = RingElement::integer(2);
    if let Some(l) = two.divides(&du) {
        // Case 1: 2 | du, so x = ±2lmn with l = du/2.
        let two_lmn = &two * &(&(&l * &m) * &n);
        let negative = if t.x == two_lmn {
            false
        } else if t.x == -&two_lmn {
            true
        } else {
            return Err(Error::Internal("x does not match ±2lmn"));
        };
        Ok(Parametrization::new(l, m, n, negative, false))
    } else {
        // Case 2: 2 ∤ du forces 2 | m² − n²; flip the sign of n if needed
        // so that 2 | m − n, then halve.
        if two.divides(&(&m - &n)).is_none() {
            n = -n;
        }
        let m1 = two
            .divides(&(&m - &n))
            .ok_or(Error::Internal("2 divides neither m-n nor m+n"))?;
        let n1 = &m1 + &n;
        // y = 2·du·m'·n' and x = ±du·(n'² − m'²); pick the (m, n) order
        // whose difference of squares lands on x exactly.
        for (big, small) in [(&n1, &m1), (&m1, &n1)] {
            let diff_sq = &(big * big) - &(small * small);
            if &du * &diff_sq == t.x {
                return Ok(Parametrization::new(
                    du,
                    big.clone(),
                    small.clone(),
                    false,
                    true,
                ));
            }
        }
        Err(Error::Internal("x does not match ±du(n'^2 - m'^2)"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(m: i64, n: i64) -> RingElement {
        RingElement::new(m, n)
    }

    fn int_triple(x: i64, y: i64, z: i64) -> PowerTriple {
        PowerTriple::new(el(x, 0), el(y, 0), el(z, 0), 2)
    }

    #[test]
    fn classic_integer_triple_from_params() {
        let p = Parametrization::new(el(1, 0), el(2, 0), el(1, 0), false, true);
        assert_eq!(p.triple(), int_triple(3, 4, 5));
    }

    #[test]
    fn tau_triple_from_params() {
        // l=1, m=τ, n=1 gives (2τ, τ²−1, τ²+1) = (2τ, τ, 2+τ)
        let p = Parametrization::new(el(1, 0), el(0, 1), el(1, 0), false, false);
        let t = p.triple();
        assert_eq!(t, PowerTriple::new(el(0, 2), el(0, 1), el(2, 1), 2));
        assert!(t.verify());
    }

    #[test]
    fn zero_scale_degenerates() {
        let p = Parametrization::new(el(0, 0), el(5, -3), el(2, 7), true, false);
        let t = p.triple();
        assert_eq!(t, PowerTriple::new(el(0, 0), el(0, 0), el(0, 0), 2));
        assert!(t.verify());
    }

    #[test]
    fn verify_known_triples() {
        assert!(PowerTriple::new(el(1, 2), el(2, 4), el(3, 4), 2).verify());
        assert!(PowerTriple::new(el(4, 3), el(5, 6), el(6, 6), 3).verify());
        assert!(!PowerTriple::new(el(1, 0), el(1, 0), el(1, 0), 2).verify());
    }

    #[test]
    fn generated_triples_always_verify() {
        for l in [el(1, 0), el(0, 1), el(2, -1), el(-1, 3)] {
            for m in [el(2, 0), el(0, 1), el(1, 1), el(-3, 2)] {
                for n in [el(1, 0), el(0, -1), el(2, 1)] {
                    for negative in [false, true] {
                        for swapped in [false, true] {
                            let p = Parametrization::new(
                                l.clone(),
                                m.clone(),
                                n.clone(),
                                negative,
                                swapped,
                            );
                            assert!(p.triple().verify(), "{:?}", p);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_finds_known_triples() {
        let small: Vec<_> = enumerate(1, usize::MAX).collect();
        assert!(
            small.contains(&PowerTriple::new(el(0, 1), el(0, 2), el(2, 1), 2)),
            "bound 1 should produce (τ, 2τ, 2+τ)"
        );
        let classic: Vec<_> = enumerate(2, usize::MAX).collect();
        assert!(
            classic.contains(&int_triple(3, 4, 5)),
            "bound 2 should produce (3, 4, 5)"
        );
        for t in &classic {
            assert!(t.verify());
            assert!(t.is_nontrivial());
        }
        // dedup: no repeats up to coordinate order
        let mut keys: Vec<_> = classic
            .iter()
            .map(|t| (t.x.clone(), t.y.clone(), t.z.clone()))
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), classic.len());
    }

    #[test]
    fn enumeration_respects_limit() {
        assert_eq!(enumerate(2, 7).count(), 7);
        assert_eq!(enumerate(1, 0).count(), 0);
    }

    #[test]
    fn decompose_classic_triple() {
        let t = int_triple(4, 3, 5);
        let p = decompose(&t).unwrap();
        assert_eq!(p.triple(), t);
        assert_eq!((p.l, p.m, p.n), (el(1, 0), el(2, 0), el(1, 0)));

        // brute-force oracle: some witness with small coefficients exists
        let mut witnessed = false;
        'outer: for lm in -2i64..=2 {
            for ln in -2i64..=2 {
                for mm in -2i64..=2 {
                    for mn in -2i64..=2 {
                        for nm in -2i64..=2 {
                            for nn in -2i64..=2 {
                                for negative in [false, true] {
                                    let p = Parametrization::new(
                                        el(lm, ln),
                                        el(mm, mn),
                                        el(nm, nn),
                                        negative,
                                        false,
                                    );
                                    let c = p.triple();
                                    if (c.x == t.x && c.y == t.y || c.x == t.y && c.y == t.x)
                                        && c.z == t.z
                                    {
                                        witnessed = true;
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(witnessed, "no small witness for (4,3,5)");
    }

    #[test]
    fn decompose_round_trips_known_triples() {
        for t in [
            PowerTriple::new(el(0, 2), el(0, 1), el(2, 1), 2),
            PowerTriple::new(el(1, 2), el(2, 4), el(3, 4), 2),
            PowerTriple::new(el(2, 12), el(11, 8), el(3, 18), 2),
        ] {
            let p = decompose(&t).unwrap();
            assert_eq!(p.triple(), t, "witness failed to regenerate {t}");
        }
    }

    #[test]
    fn decompose_is_deterministic() {
        let t = PowerTriple::new(el(1, 2), el(2, 4), el(3, 4), 2);
        assert_eq!(decompose(&t).unwrap(), decompose(&t).unwrap());
    }

    #[test]
    fn decompose_rejects_bad_input() {
        assert!(matches!(
            decompose(&int_triple(1, 1, 1)),
            Err(Error::NotASolution)
        ));
        assert!(matches!(
            decompose(&PowerTriple::new(el(0, 0), el(0, 0), el(0, 0), 2)),
            Err(Error::ZeroComponent)
        ));
        assert!(matches!(
            decompose(&PowerTriple::new(el(4, 3), el(5, 6), el(6, 6), 3)),
            Err(Error::NotASolution)
        ));
    }

    #[test]
    fn every_enumerated_triple_decomposes() {
        for t in enumerate(2, usize::MAX) {
            let p = decompose(&t).unwrap_or_else(|e| panic!("decompose({t}) failed: {e}"));
            assert_eq!(p.triple(), t);
        }
    }
}
