//! The ring ℤ[τ] = {m + nτ | m, n ∈ ℤ} where τ = (1+√5)/2, τ² = τ + 1.
//!
//! Arithmetic is exact over arbitrary-precision integers. The ring is a
//! Euclidean domain under the size function |N(·)|, which is what makes
//! `euclid_div`, `gcd` and unique factorization work.

use crate::error::Error;
use crate::surd::HalfSurd;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// An element m + nτ of ℤ[τ], stored as the exact integer pair (m, n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    m: BigInt,
    n: BigInt,
}

impl RingElement {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        RingElement {
            m: m.into(),
            n: n.into(),
        }
    }

    pub fn zero() -> Self {
        RingElement::new(0, 0)
    }

    pub fn one() -> Self {
        RingElement::new(1, 0)
    }

    pub fn tau() -> Self {
        RingElement::new(0, 1)
    }

    pub fn integer(k: impl Into<BigInt>) -> Self {
        RingElement {
            m: k.into(),
            n: BigInt::zero(),
        }
    }

    /// Coefficient of 1.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// Coefficient of τ.
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero() && self.n.is_zero()
    }

    /// Galois conjugation σ: τ ↦ τ' = 1−τ, so m + nτ ↦ (m+n) − nτ.
    /// An involutive ring homomorphism.
    pub fn conj(&self) -> Self {
        RingElement {
            m: &self.m + &self.n,
            n: -&self.n,
        }
    }

    /// N(x) = x·σ(x) = m² + mn − n². Multiplicative and integer-valued.
    pub fn norm(&self) -> BigInt {
        &self.m * &self.m + &self.m * &self.n - &self.n * &self.n
    }

    /// The real value of the element under τ ↦ (1+√5)/2, as an exact surd:
    /// m + nτ = ((2m+n) + n√5)/2.
    pub fn embed(&self) -> HalfSurd {
        HalfSurd::new(2 * &self.m + &self.n, self.n.clone())
    }

    /// Real value of σ(x); equals `self.conj().embed()` without the clone
    /// of an intermediate element.
    pub fn embed_conj(&self) -> HalfSurd {
        HalfSurd::new(2 * &self.m + &self.n, -&self.n)
    }

    /// τ^k for any integer k. τ·(m+nτ) = n + (m+n)τ and
    /// τ⁻¹ = τ − 1, so coefficients walk the Fibonacci recurrence.
    pub fn tau_power(k: i64) -> Self {
        let mut m = BigInt::from(1);
        let mut n = BigInt::from(0);
        if k >= 0 {
            for _ in 0..k {
                let next_n = &m + &n;
                m = std::mem::replace(&mut n, next_n);
            }
        } else {
            for _ in 0..(-k) {
                let next_m = &n - &m;
                n = std::mem::replace(&mut m, next_m);
            }
        }
        RingElement { m, n }
    }

    /// Multiply by τ in place-like fashion (cheap special case of `mul`).
    pub fn times_tau(&self) -> Self {
        RingElement {
            m: self.n.clone(),
            n: &self.m + &self.n,
        }
    }

    /// Exact k-th power by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RingElement::one();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: x = q·y + r with |N(r)| < |N(y)|.
    ///
    /// q is x·σ(y)/N(y) with both rational coordinates rounded to a nearest
    /// integer; ties (fraction exactly 1/2) round half away from zero.
    pub fn euclid_div(&self, y: &RingElement) -> Result<(RingElement, RingElement), Error> {
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &y.conj();
        let den = y.norm();
        let q = RingElement {
            m: round_half_away(&num.m, &den),
            n: round_half_away(&num.n, &den),
        };
        let r = self - &(&q * y);
        debug_assert!(r.norm().abs() < y.norm().abs());
        Ok((q, r))
    }

    /// Greatest common divisor by the Euclidean loop, returned as the
    /// canonical associate. `gcd(x, 0)` is the canonical associate of x;
    /// `gcd(0, 0)` is an error.
    pub fn gcd(&self, other: &RingElement) -> Result<RingElement, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput("gcd"));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.euclid_div(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.canonical_associate()?.0)
    }

    /// If self divides x, the exact quotient x/self; `None` otherwise
    /// (including when self is zero).
    pub fn divides(&self, x: &RingElement) -> Option<RingElement> {
        if self.is_zero() {
            return None;
        }
        let num = x * &self.conj();
        let den = self.norm();
        let (qm, rm) = num_integer::Integer::div_rem(&num.m, &den);
        if !rm.is_zero() {
            return None;
        }
        let (qn, rn) = num_integer::Integer::div_rem(&num.n, &den);
        if !rn.is_zero() {
            return None;
        }
        Some(RingElement { m: qm, n: qn })
    }

    /// The canonical representative of the associate class of x, plus the
    /// unit u with x = u · representative.
    ///
    /// Associates differ by ±τ^k; the representative is the unique one
    /// whose real embedding is positive and lies in [√|N(x)|, τ·√|N(x)|),
    /// a half-open multiplicative window of ratio τ.
    pub fn canonical_associate(&self) -> Result<(RingElement, Unit), Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput("canonical_associate"));
        }
        let mut y = self.clone();
        let mut negative = false;
        let mut exponent: i64 = 0;
        if y.embed().is_negative() {
            y = -&y;
            negative = true;
        }
        let norm_abs = self.norm().abs();
        // embed(y) ∈ [√|N|, τ√|N|)  ⟺  embed(y)² ∈ [|N|, τ²|N|), and
        // embed(y)² = embed(y²) because the embedding is multiplicative.
        let lower = HalfSurd::from_integer(norm_abs.clone());
        let upper = HalfSurd::new(3 * &norm_abs, norm_abs); // τ²|N| = (3+√5)/2·|N|
        loop {
            let sq = (&y * &y).embed();
            if sq < lower {
                y = y.times_tau();
                exponent -= 1;
            } else if sq >= upper {
                y = &y * &RingElement::new(-1, 1); // τ⁻¹ = τ − 1
                exponent += 1;
            } else {
                break;
            }
        }
        Ok((y, Unit { negative, exponent }))
    }

    /// A square root r with r² = self, if one exists. The returned root has
    /// nonnegative real embedding; the root is unique up to global sign.
    pub fn sqrt(&self) -> Option<RingElement> {
        crate::roots::kth_root(self, 2)
    }

    /// A k-th root w with w^k = self, if one exists (k ≥ 2). For even k the
    /// returned root has nonnegative real embedding; for odd k it is unique.
    pub fn kth_root(&self, k: u32) -> Option<RingElement> {
        crate::roots::kth_root(self, k)
    }
}

/// Round the rational p/q (q ≠ 0) to a nearest integer, ties away from zero.
pub(crate) fn round_half_away(p: &BigInt, q: &BigInt) -> BigInt {
    let (p, q) = if q.is_negative() {
        (-p, -q)
    } else {
        (p.clone(), q.clone())
    };
    let magnitude = (BigInt::from(2) * p.abs() + &q) / (BigInt::from(2) * q);
    if p.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

impl From<i64> for RingElement {
    fn from(k: i64) -> Self {
        RingElement::integer(k)
    }
}

/// A unit ±τ^exponent of ℤ[τ]. Every unit has this form: the units are
/// exactly the elements of norm ±1, generated by −1 and the fundamental
/// unit τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Unit {
    pub negative: bool,
    pub exponent: i64,
}

impl Unit {
    pub fn one() -> Self {
        Unit {
            negative: false,
            exponent: 0,
        }
    }

    /// The ring element this unit denotes.
    pub fn value(&self) -> RingElement {
        let t = RingElement::tau_power(self.exponent);
        if self.negative {
            -&t
        } else {
            t
        }
    }

    pub fn inverse(&self) -> Self {
        Unit {
            negative: self.negative,
            exponent: -self.exponent,
        }
    }
}

impl std::fmt::Display for Unit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        match self.exponent {
            0 => write!(f, "{sign}1"),
            1 => write!(f, "{sign}t"),
            e => write!(f, "{sign}t^{e}"),
        }
    }
}

// (a+bτ)(c+dτ) = (ac+bd) + (ad+bc+bd)τ after reducing by τ² = τ+1.
impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        let ac = &self.m * &rhs.m;
        let bd = &self.n * &rhs.n;
        let ad_bc = &self.m * &rhs.n + &self.n * &rhs.m;
        RingElement {
            m: ac + &bd,
            n: ad_bc + bd,
        }
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        RingElement {
            m: &self.m + &rhs.m,
            n: &self.n + &rhs.n,
        }
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        RingElement {
            m: self.m + rhs.m,
            n: self.n + rhs.n,
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        RingElement {
            m: &self.m - &rhs.m,
            n: &self.n - &rhs.n,
        }
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        RingElement {
            m: self.m - rhs.m,
            n: self.n - rhs.n,
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            m: -&self.m,
            n: -&self.n,
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            m: -self.m,
            n: -self.n,
        }
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by real embedding. The embedding is injective on ℤ[τ]
/// (τ is irrational), so this is consistent with componentwise equality.
impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.embed().cmp(&other.embed())
    }
}
