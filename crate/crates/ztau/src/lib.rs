//! Exact arithmetic in the golden-ratio ring ℤ[τ] and the Fibonacci model set.
//!
//! τ = (1+√5)/2 satisfies τ² = τ + 1. Everything in this crate is computed
//! over exact integers: ring operations, Galois conjugation, norms, sign
//! decisions for numbers of the form (u + v√5)/2, Euclidean division and
//! gcd, square and k-th roots, model-set membership, Pythagorean-triple
//! parametrization, window-shift exponents, and a bounded exhaustive search
//! for solutions of x^k + y^k = z^k.
//!
//! No floating-point value ever decides a result; floats appear only in
//! doc text. See the `examples/` directory for one runnable program per
//! capability.

pub mod error;
pub mod fermat;
pub mod json;
pub mod model_set;
pub mod render;
pub mod ring;
pub mod surd;
pub mod triples;
pub mod window_shift;

mod roots;
mod text;

pub use error::{Error, ParseError};
pub use ring::{RingElement, Unit};
pub use surd::HalfSurd;
