//! Exact reals of the form (u + v√5)/2.
//!
//! Real embeddings of ring elements land in this shape: m + nτ maps to
//! ((2m+n) + n√5)/2. All sign and order decisions are made on integers,
//! never on floating approximations; √5 is irrational, so u + v√5 = 0
//! forces u = v = 0 and every comparison is decidable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// The exact real number (u + v√5)/2.
///
/// Values produced by embedding a ring element satisfy u ≡ v (mod 2);
/// multiplication assumes that parity and keeps it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfSurd {
    u: BigInt,
    v: BigInt,
}

/// floor(v·√5), exact. 5v² is never a perfect square for v ≠ 0.
fn sqrt5_floor(v: &BigInt) -> BigInt {
    if v.is_zero() {
        return BigInt::zero();
    }
    let root = (BigInt::from(5) * v * v).sqrt();
    if v.is_positive() {
        root
    } else {
        -root - 1
    }
}

impl HalfSurd {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Self {
        HalfSurd {
            u: u.into(),
            v: v.into(),
        }
    }

    /// The integer n as a surd: (2n + 0√5)/2.
    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        HalfSurd {
            u: 2 * n.into(),
            v: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        HalfSurd {
            u: BigInt::zero(),
            v: BigInt::zero(),
        }
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Exact sign: −1, 0 or +1.
    ///
    /// Matching signs of u and v decide directly; opposite signs reduce
    /// to comparing u² against 5v², carrying the sign of u.
    pub fn signum(&self) -> i8 {
        let su = sign_of(&self.u);
        let sv = sign_of(&self.v);
        match (su, sv) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (a, b) if a == b => a,
            _ => {
                let u2 = &self.u * &self.u;
                let v2 = 5 * &self.v * &self.v;
                match u2.cmp(&v2) {
                    Ordering::Greater => su,
                    Ordering::Less => sv,
                    // u² = 5v² with v ≠ 0 would make √5 rational.
                    Ordering::Equal => unreachable!("u^2 = 5v^2 with v != 0"),
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Largest integer ≤ self, exact.
    pub fn floor(&self) -> BigInt {
        (&self.u + sqrt5_floor(&self.v)).div_floor(&BigInt::from(2))
    }

    /// Nearest integer, exact; a tie (only possible for half-integers)
    /// rounds up.
    pub fn round(&self) -> BigInt {
        (&self.u + BigInt::from(1) + sqrt5_floor(&self.v)).div_floor(&BigInt::from(2))
    }

    /// Multiply by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        HalfSurd {
            u: &self.u * k,
            v: &self.v * k,
        }
    }

    /// Exact product. Both factors must satisfy u ≡ v (mod 2), which every
    /// ring-element embedding does; the product then has integer halves.
    pub fn mul(&self, other: &Self) -> Self {
        let two = BigInt::from(2);
        let u = &self.u * &other.u + BigInt::from(5) * &self.v * &other.v;
        let v = &self.u * &other.v + &self.v * &other.u;
        debug_assert!(
            u.is_even() && v.is_even(),
            "parity invariant broken in surd product"
        );
        HalfSurd {
            u: u / &two,
            v: v / two,
        }
    }

    /// Multiply by τ' = (1−√5)/2. Shrinks magnitude by a factor |τ'| ≈ 0.618.
    pub fn times_tau_conj(&self) -> Self {
        let two = BigInt::from(2);
        let u = &self.u - BigInt::from(5) * &self.v;
        let v = &self.v - &self.u;
        HalfSurd {
            u: u / &two,
            v: v / two,
        }
    }

    /// Multiply by −τ = (τ')⁻¹. Grows magnitude by a factor τ ≈ 1.618.
    pub fn times_neg_tau(&self) -> Self {
        let two = BigInt::from(2);
        let u = -(&self.u + BigInt::from(5) * &self.v);
        let v = -(&self.u + &self.v);
        HalfSurd {
            u: u / &two,
            v: v / two,
        }
    }

    /// Decimal rendering with `places` digits after the point, rounded to
    /// nearest. The digits come from an exact integer square root of the
    /// scaled value, so output is identical on every platform.
    pub fn decimal_string(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        // floor(value·scale + 1/2) = floor((u·scale + 1 + v·scale·√5)/2)
        let shifted = &self.u * &scale + BigInt::from(1) + sqrt5_floor(&(&self.v * &scale));
        let n = shifted.div_floor(&BigInt::from(2));
        let negative = n.is_negative();
        let a = n.abs();
        let (int_part, frac_part) = (&a / &scale, &a % &scale);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{frac_part:0>width$}",
                width = places as usize
            )
        }
    }
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl Add for HalfSurd {
    type Output = HalfSurd;
    fn add(self, rhs: HalfSurd) -> HalfSurd {
        HalfSurd {
            u: self.u + rhs.u,
            v: self.v + rhs.v,
        }
    }
}

impl Add for &HalfSurd {
    type Output = HalfSurd;
    fn add(self, rhs: &HalfSurd) -> HalfSurd {
        HalfSurd {
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        }
    }
}

impl Sub for HalfSurd {
    type Output = HalfSurd;
    fn sub(self, rhs: HalfSurd) -> HalfSurd {
        HalfSurd {
            u: self.u - rhs.u,
            v: self.v - rhs.v,
        }
    }
}

impl Sub for &HalfSurd {
    type Output = HalfSurd;
    fn sub(self, rhs: &HalfSurd) -> HalfSurd {
        HalfSurd {
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        }
    }
}

impl Neg for HalfSurd {
    type Output = HalfSurd;
    fn neg(self) -> HalfSurd {
        HalfSurd {
            u: -self.u,
            v: -self.v,
        }
    }
}

impl Neg for &HalfSurd {
    type Output = HalfSurd;
    fn neg(self) -> HalfSurd {
        HalfSurd {
            u: -&self.u,
            v: -&self.v,
        }
    }
}

impl PartialOrd for HalfSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for HalfSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√5)/2", self.u, self.v)
    }
}
