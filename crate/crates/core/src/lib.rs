//! Exact construction, certification, and counting of polynomials whose
//! Galois group is the alternating group.
//!
//! The crate builds two parametrized families of monic integer
//! polynomials whose discriminants are perfect squares by design (one for
//! even degree, one for odd), certifies the Galois group A_n from
//! factorization patterns modulo primes, enumerates specializations in
//! weighted boxes to count the distinct number fields they cut out, and
//! evaluates the exact rational exponents that govern how those counts
//! grow with the discriminant bound.
//!
//! The polynomial core is generic over the coefficient scalar through
//! `num_traits` bounds; the concrete instantiations used everywhere are
//! the crate-root aliases [`IntPoly`] and [`RatPoly`].

pub mod arith;
pub mod census;
pub mod construct;
pub mod exponents;
pub mod galois;
pub mod poly;
pub mod resultant;

/// Arbitrary-precision rational scalar.
pub type BigRat = num_rational::BigRational;

/// Dense polynomial over ℤ.
pub type IntPoly = poly::Poly<num_bigint::BigInt>;

/// Dense polynomial over ℚ.
pub type RatPoly = poly::Poly<BigRat>;

pub use poly::{Poly, PolyError};
