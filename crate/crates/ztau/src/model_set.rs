//! The Fibonacci model set Λ = {x ∈ ℤ[τ] | σ(x) ∈ [−1, τ−1)}.
//!
//! Two routes to the same point set live here. The algebraic window above
//! is authoritative for membership. The substitution rule a → ab, b → a,
//! realized with a as an interval of length τ and b as an interval of
//! length 1, generates finite patches and serves as a generator and a
//! cross-check. The two descriptions disagree at exactly two singular
//! points: −τ sits in every patch but σ(−τ) = τ−1 is excluded by the open
//! window end, while −1 is in Λ but never appears as a patch endpoint.
//! Tests pin both facts down rather than hide them.

use crate::error::Error;
use crate::ring::RingElement;
use crate::surd::HalfSurd;
use num_bigint::BigInt;
use num_integer::Integer;

/// Hard ceiling on patch iterations; each iteration applies the
/// substitution twice, so word length grows by ~τ² per step.
pub const DEFAULT_ITERATION_CAP: u32 = 12;

/// The half-open acceptance window [lo, hi) for σ-images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub lo: HalfSurd,
    pub hi: HalfSurd,
}

impl Window {
    /// The Fibonacci window [−1, τ−1).
    pub fn fibonacci() -> Self {
        Window {
            lo: HalfSurd::from_integer(-1),
            hi: HalfSurd::new(-1, 1), // τ−1 = (−1+√5)/2
        }
    }

    /// lo inclusive, hi exclusive, decided exactly.
    pub fn admits(&self, sigma: &HalfSurd) -> bool {
        *sigma >= self.lo && *sigma < self.hi
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::fibonacci()
    }
}

/// Exact membership in Λ: σ(x) ∈ [−1, τ−1).
pub fn contains(x: &RingElement) -> bool {
    Window::fibonacci().admits(&x.embed_conj())
}

/// One letter of the substitution alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    /// Geometric length of the interval this letter denotes: τ for a, 1 for b.
    fn length(self) -> RingElement {
        match self {
            Letter::A => RingElement::tau(),
            Letter::B => RingElement::one(),
        }
    }
}

/// A two-sided word over {a, b} with a marked origin, written left|right.
/// Both sides read left to right; the origin sits between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionWord {
    left: Vec<Letter>,
    right: Vec<Letter>,
}

impl SubstitutionWord {
    /// The starting word a|a.
    pub fn seed() -> Self {
        SubstitutionWord {
            left: vec![Letter::A],
            right: vec![Letter::A],
        }
    }

    pub fn new(left: Vec<Letter>, right: Vec<Letter>) -> Option<Self> {
        if left.is_empty() || right.is_empty() {
            return None;
        }
        Some(SubstitutionWord { left, right })
    }

    pub fn left(&self) -> &[Letter] {
        &self.left
    }

    pub fn right(&self) -> &[Letter] {
        &self.right
    }

    /// Apply a → ab, b → a letterwise to both sides, keeping the origin.
    pub fn substitute(&self) -> Self {
        fn expand(side: &[Letter]) -> Vec<Letter> {
            let mut out = Vec::with_capacity(side.len() * 2);
            for letter in side {
                match letter {
                    Letter::A => out.extend_from_slice(&[Letter::A, Letter::B]),
                    Letter::B => out.push(Letter::A),
                }
            }
            out
        }
        SubstitutionWord {
            left: expand(&self.left),
            right: expand(&self.right),
        }
    }
}

/// A finite ordered piece of the substitution point set: the interval
/// endpoints of a realized word, anchored at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Patch {
    points: Vec<RingElement>,
    hull_lo: RingElement,
    hull_hi: RingElement,
}

impl Patch {
    /// The patch after `iterations` doubled substitutions of a|a;
    /// iteration 0 realizes a|a itself as {−τ, 0, τ}.
    pub fn generate(iterations: u32) -> Result<Patch, Error> {
        Patch::generate_with_cap(iterations, DEFAULT_ITERATION_CAP)
    }

    pub fn generate_with_cap(iterations: u32, cap: u32) -> Result<Patch, Error> {
        if iterations > cap {
            return Err(Error::CapExceeded {
                requested: iterations,
                cap,
            });
        }
        let mut word = SubstitutionWord::seed();
        for _ in 0..2 * iterations {
            word = word.substitute();
        }
        Ok(Patch::realize(&word))
    }

    /// Interval endpoints of the word, accumulated exactly from the origin:
    /// leftward for the left side, rightward for the right side.
    pub fn realize(word: &SubstitutionWord) -> Patch {
        let mut points = Vec::with_capacity(word.left.len() + word.right.len() + 1);
        let mut pos = RingElement::zero();
        for letter in word.left.iter().rev() {
            pos = &pos - &letter.length();
            points.push(pos.clone());
        }
        points.reverse();
        points.push(RingElement::zero());
        pos = RingElement::zero();
        for letter in &word.right {
            pos = &pos + &letter.length();
            points.push(pos.clone());
        }
        let hull_lo = points.first().expect("word sides are nonempty").clone();
        let hull_hi = points.last().expect("word sides are nonempty").clone();
        Patch {
            points,
            hull_lo,
            hull_hi,
        }
    }

    /// Strictly increasing by real embedding; contains the origin.
    pub fn points(&self) -> &[RingElement] {
        &self.points
    }

    pub fn hull_lo(&self) -> &RingElement {
        &self.hull_lo
    }

    pub fn hull_hi(&self) -> &RingElement {
        &self.hull_hi
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Largest integer n with n·√5 ≤ bound, by binary search over an exact
/// predicate. Returns the lower search bound − 1 if none satisfies.
fn max_n_sqrt5_le(bound: &HalfSurd) -> BigInt {
    let crude = (bound.abs().floor() + BigInt::from(2)) / BigInt::from(2) + BigInt::from(1);
    let mut lo = -&crude;
    let mut hi = crude;
    let pred = |n: &BigInt| HalfSurd::new(BigInt::from(0), BigInt::from(2) * n) <= *bound;
    if !pred(&lo) {
        return lo - BigInt::from(1);
    }
    // invariant: pred(lo) holds, pred(hi+1) fails
    if pred(&hi) {
        return hi;
    }
    while &lo + BigInt::from(1) < hi {
        let mid = (&lo + &hi) / 2;
        if pred(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// All members of Λ whose real value lies in [lo, hi], sorted ascending.
///
/// The two embedding constraints are linear in (2m+n, n), so a conservative
/// integer range for n = (embed − σ-embed)/√5 is derived first and every
/// candidate is then filtered through the exact window and interval tests.
pub fn members_in_interval(lo: &HalfSurd, hi: &HalfSurd) -> Vec<RingElement> {
    if lo > hi {
        return Vec::new();
    }
    let window = Window::fibonacci();
    // n√5 = embed(x) − σ(embed(x)) ∈ (lo − (τ−1), hi − (−1)]
    let n_upper = max_n_sqrt5_le(&(hi - &HalfSurd::from_integer(-1)));
    let n_lower = max_n_sqrt5_le(&(lo - &window.hi)) + BigInt::from(1);

    let two = BigInt::from(2);
    let mut out = Vec::new();
    let mut n = n_lower;
    while n <= n_upper {
        // 2m+n ∈ [2·lo − n√5, 2·hi − n√5]
        let n_sqrt5 = HalfSurd::new(BigInt::from(0), BigInt::from(2) * &n);
        let a_lo = -(-(&lo.scale(&two) - &n_sqrt5)).floor();
        let a_hi = (&hi.scale(&two) - &n_sqrt5).floor();
        // m = (A − n)/2 over integers A of the forced parity
        let mut m = Integer::div_ceil(&(a_lo - &n), &two);
        let m_hi = Integer::div_floor(&(a_hi - &n), &two);
        while m <= m_hi {
            let x = RingElement::new(m.clone(), n.clone());
            let e = x.embed();
            if &e >= lo && &e <= hi && window.admits(&x.embed_conj()) {
                out.push(x);
            }
            m += BigInt::from(1);
        }
        n += BigInt::from(1);
    }
    out.sort();
    out
}
