//! The two parametrized families of monic integral polynomials with
//! square discriminant, one per degree parity, plus their reference
//! specializations.
//!
//! Even degree n = 2r+2: pick h = x^r + α_1·x^{r−1} + ⋯ + α_r, set
//! g = n(x−α)h² and let f̃ be the antiderivative of g vanishing at α.
//! The offset γ = (−1)^{n/2}τ² then makes Disc(f̃ + γ) a square times
//! the square (Π f̃_γ at the roots of h)².
//!
//! Odd degree n = 2r+1: pick h = x^r + α_1·x^{r−1} + ⋯ + α_{r−1}x +
//! 2α_{r−1}α (the constant term kills the x^1 coefficient of the
//! right-hand side), set g = (n−1)(x−α)h², solve x·f̃′ − f̃ = g, and
//! take the offset γ = (−1)^r·τ² − f̃′(α), which forces f̃_γ′(α) = (−1)^r·τ²
//! and hence a square discriminant.
//!
//! Both families are finally rescaled by n! to clear denominators:
//! f_γ = (n!)^n·f̃_γ(x/n!), monic and integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::factorial;
use crate::poly::{antiderivative_vanishing_at, scale_clear, solve_euler_ode, Poly, PolyError};
use crate::{BigRat, IntPoly, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ConstructError {
    #[error("degree {n} unsupported: {reason}")]
    UnsupportedDegree { n: usize, reason: &'static str },
    #[error("degree {n} takes {expected} free coefficients, got {got}")]
    AlphaCount {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("perturbation must be nonnegative, got {0}")]
    NegativePerturbation(BigRat),
    #[error("internal consistency failure at {spec}: {source}")]
    Internal {
        spec: Box<Specialization>,
        source: PolyError,
    },
    #[error("reference point for degree {n} is degenerate: {detail}")]
    ReferenceDegenerate { n: usize, detail: String },
}

/// An integer point of the parameter space: the free coefficients
/// α_1,…  of h, the extra root α, and the offset parameter τ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Specialization {
    n: usize,
    alphas: Vec<i64>,
    alpha: i64,
    tau: i64,
}

impl std::fmt::Display for Specialization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(n={}, alphas={:?}, alpha={}, tau={})",
            self.n, self.alphas, self.alpha, self.tau
        )
    }
}

/// Number of free coefficients of h for degree n: r = n/2 − 1 of them
/// when n is even, r − 1 = (n−1)/2 − 1 when n is odd.
pub fn free_alpha_count(n: usize) -> Result<usize, ConstructError> {
    match Parity::of(n) {
        Parity::Even if n >= 6 => Ok(n / 2 - 1),
        Parity::Odd if n >= 7 => Ok((n - 1) / 2 - 1),
        _ => Err(ConstructError::UnsupportedDegree {
            n,
            reason: "families are defined for even n >= 6 and odd n >= 7",
        }),
    }
}

impl Specialization {
    pub fn new(
        n: usize,
        alphas: Vec<i64>,
        alpha: i64,
        tau: i64,
    ) -> Result<Self, ConstructError> {
        let expected = free_alpha_count(n)?;
        if alphas.len() != expected {
            return Err(ConstructError::AlphaCount {
                n,
                expected,
                got: alphas.len(),
            });
        }
        Ok(Specialization {
            n,
            alphas,
            alpha,
            tau,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.n)
    }

    pub fn alphas(&self) -> &[i64] {
        &self.alphas
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn tau(&self) -> i64 {
        self.tau
    }

    /// τ = 0 collapses the offset; the output has a repeated root.
    pub fn is_degenerate(&self) -> bool {
        self.tau == 0
    }
}

/// Everything produced on the way from a parameter point to the final
/// monic integral polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionRecord {
    pub spec: Specialization,
    pub h: RatPoly,
    pub g: RatPoly,
    pub f_tilde: RatPoly,
    pub gamma: BigRat,
    pub f_tilde_gamma: RatPoly,
    pub f_gamma: IntPoly,
}

fn rat_int(v: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(v))
}

fn internal(spec: &Specialization, source: PolyError) -> ConstructError {
    ConstructError::Internal {
        spec: Box::new(spec.clone()),
        source,
    }
}

/// Builds the record for either parity.
pub fn build(spec: &Specialization) -> Result<ConstructionRecord, ConstructError> {
    match spec.parity() {
        Parity::Even => build_even(spec),
        Parity::Odd => build_odd(spec),
    }
}

fn even_h(r: usize, alphas: &[i64]) -> RatPoly {
    let mut c = vec![BigRational::zero(); r + 1];
    c[r] = BigRational::one();
    for (i, &a) in alphas.iter().enumerate() {
        // α_{i+1} multiplies x^{r−(i+1)}
        c[r - (i + 1)] = rat_int(a);
    }
    Poly::new(c)
}

fn build_even(spec: &Specialization) -> Result<ConstructionRecord, ConstructError> {
    let n = spec.n;
    let r = n / 2 - 1;
    let a = rat_int(spec.alpha);
    let h = even_h(r, &spec.alphas);
    let x_minus_a = &RatPoly::x() - &RatPoly::constant(a.clone());
    let g = (&x_minus_a * &h.pow(2)).scale(&rat_int(n as i64));
    let f_tilde = antiderivative_vanishing_at(&g, &a);
    let tau_sq = rat_int(spec.tau) * rat_int(spec.tau);
    let gamma = if (n / 2) % 2 == 1 { -tau_sq } else { tau_sq };
    let f_tilde_gamma = &f_tilde + &RatPoly::constant(gamma.clone());
    let f_gamma =
        scale_clear(&f_tilde_gamma, &factorial(n)).map_err(|e| internal(spec, e))?;
    Ok(ConstructionRecord {
        spec: spec.clone(),
        h,
        g,
        f_tilde,
        gamma,
        f_tilde_gamma,
        f_gamma,
    })
}

fn odd_h(r: usize, alphas: &[i64], alpha: i64) -> RatPoly {
    let mut c = vec![BigRational::zero(); r + 1];
    c[r] = BigRational::one();
    for (i, &a) in alphas.iter().enumerate() {
        c[r - (i + 1)] = rat_int(a);
    }
    // constant term 2·α_{r−1}·α  (alphas has length r−1, so the last free
    // coefficient sits at x^1)
    c[0] = rat_int(2) * rat_int(alphas[r - 2]) * rat_int(alpha);
    Poly::new(c)
}

fn build_odd(spec: &Specialization) -> Result<ConstructionRecord, ConstructError> {
    let n = spec.n;
    let r = (n - 1) / 2;
    let a = rat_int(spec.alpha);
    let h = odd_h(r, &spec.alphas, spec.alpha);
    let x_minus_a = &RatPoly::x() - &RatPoly::constant(a.clone());
    let g = (&x_minus_a * &h.pow(2)).scale(&rat_int(n as i64 - 1));
    debug_assert!(g.coeff(1).is_zero(), "constant term of h must kill the x^1 term");
    let f_tilde = solve_euler_ode(&g).map_err(|e| internal(spec, e))?;
    let tau_sq = rat_int(spec.tau) * rat_int(spec.tau);
    let signed_tau_sq = if r % 2 == 1 { -tau_sq } else { tau_sq };
    let gamma = signed_tau_sq - f_tilde.derivative().evaluate(&a);
    let f_tilde_gamma = &f_tilde + &RatPoly::x().scale(&gamma);
    let f_gamma =
        scale_clear(&f_tilde_gamma, &factorial(n)).map_err(|e| internal(spec, e))?;
    Ok(ConstructionRecord {
        spec: spec.clone(),
        h,
        g,
        f_tilde,
        gamma,
        f_tilde_gamma,
        f_gamma,
    })
}

/// The even reference point: h = (x−1)(x−2)⋯(x−r) and α = 0, with τ left
/// open. The values f̃(1),…,f̃(r) are verified pairwise distinct and
/// nonzero.
#[derive(Debug, Clone)]
pub struct EvenReference {
    pub n: usize,
    pub h: RatPoly,
    pub g: RatPoly,
    pub f_tilde: RatPoly,
    /// f̃ at 1,…,r.
    pub values: Vec<BigRat>,
    alphas: Vec<i64>,
}

impl EvenReference {
    /// Fills the τ slot and builds the full record.
    pub fn with_tau(&self, tau: i64) -> Result<ConstructionRecord, ConstructError> {
        let spec = Specialization::new(self.n, self.alphas.clone(), 0, tau)?;
        build(&spec)
    }
}

pub fn reference_even(n: usize) -> Result<EvenReference, ConstructError> {
    if n % 2 != 0 || n < 6 {
        return Err(ConstructError::UnsupportedDegree {
            n,
            reason: "even reference requires even n >= 6",
        });
    }
    let r = n / 2 - 1;
    let mut h = RatPoly::one();
    for i in 1..=r {
        h = &h * &(&RatPoly::x() - &RatPoly::constant(rat_int(i as i64)));
    }
    let alphas: Vec<i64> = (1..=r)
        .map(|i| {
            h.coeff(r - i)
                .to_integer()
                .to_i64()
                .ok_or(ConstructError::UnsupportedDegree {
                    n,
                    reason: "reference coefficients exceed the machine range",
                })
        })
        .collect::<Result<_, _>>()?;
    let spec = Specialization::new(n, alphas.clone(), 0, 1)?;
    let rec = build(&spec)?;
    let values: Vec<BigRat> = (1..=r)
        .map(|i| rec.f_tilde.evaluate(&rat_int(i as i64)))
        .collect();
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            return Err(ConstructError::ReferenceDegenerate {
                n,
                detail: format!("f~({}) = 0", i + 1),
            });
        }
        for (j, w) in values.iter().enumerate().skip(i + 1) {
            if v == w {
                return Err(ConstructError::ReferenceDegenerate {
                    n,
                    detail: format!("f~({}) = f~({})", i + 1, j + 1),
                });
            }
        }
    }
    Ok(EvenReference {
        n,
        h: rec.h,
        g: rec.g,
        f_tilde: rec.f_tilde,
        values,
        alphas,
    })
}

/// The odd reference point: β_i = 1 + i·ε and α = −1/(2Σβ_i^{−1}), the
/// normalization that makes the Euler equation solvable. At ε = 0 the
/// solution collapses to (x−1)^n − nx.
#[derive(Debug, Clone)]
pub struct OddReference {
    pub n: usize,
    pub betas: Vec<BigRat>,
    pub alpha: BigRat,
    pub g: RatPoly,
    pub poly: RatPoly,
    /// Derivative of the solution at each β_i.
    pub slopes: Vec<BigRat>,
    /// Derivative of the solution at α.
    pub slope_at_alpha: BigRat,
}

pub fn reference_odd(n: usize, eps: &BigRat) -> Result<OddReference, ConstructError> {
    if n % 2 != 1 || n < 7 {
        return Err(ConstructError::UnsupportedDegree {
            n,
            reason: "odd reference requires odd n >= 7",
        });
    }
    if eps.is_negative() {
        return Err(ConstructError::NegativePerturbation(eps.clone()));
    }
    let r = (n - 1) / 2;
    let betas: Vec<BigRat> = (1..=r)
        .map(|i| BigRational::one() + rat_int(i as i64) * eps)
        .collect();
    let inv_sum: BigRat = betas.iter().map(|b| b.recip()).sum();
    let alpha = -(rat_int(2) * inv_sum).recip();
    let mut squares = RatPoly::one();
    for b in &betas {
        let lin = &RatPoly::x() - &RatPoly::constant(b.clone());
        squares = &squares * &lin.pow(2);
    }
    let x_minus_a = &RatPoly::x() - &RatPoly::constant(alpha.clone());
    let g = (&x_minus_a * &squares).scale(&rat_int(n as i64 - 1));
    let poly = solve_euler_ode(&g).map_err(|e| ConstructError::ReferenceDegenerate {
        n,
        detail: e.to_string(),
    })?;
    let deriv = poly.derivative();
    let slopes = betas.iter().map(|b| deriv.evaluate(b)).collect();
    let slope_at_alpha = deriv.evaluate(&alpha);
    Ok(OddReference {
        n,
        betas,
        alpha,
        g,
        poly,
        slopes,
        slope_at_alpha,
    })
}

/// Explicit height constant c(n): every family member built from a box
/// point with |α_i| ≤ Y^i, |α| ≤ Y and the parity's τ bound satisfies
/// height(f̃_γ) ≤ c(n)·Y. Obtained by maximizing the coefficient
/// formulas over the box after rescaling x by Y (each scaled coefficient
/// of h is at most 1 even, 2 odd; squaring multiplies by the term count;
/// the antiderivative/Euler steps never enlarge; the evaluation shifts
/// contribute a factor n).
pub fn height_constant(n: usize) -> u64 {
    let n = n as u64;
    match n % 2 {
        0 => n * n * n + 1,
        _ => 4 * n * n * n + 1,
    }
}

/// Explicit discriminant bound: every family member from a box at edge Y
/// has |Disc(f_γ)| ≤ (4·n!·c(n))^{n(n−1)}·Y^{n(n−1)}, since all roots of
/// f_γ lie within 2·n!·c(n)·Y in absolute value.
pub fn disc_bound(n: usize, y: &BigRat) -> BigRat {
    let c = BigRational::from_integer(BigInt::from(4u64) * factorial(n) * BigInt::from(height_constant(n)));
    let base = c * y;
    num_traits::pow(base, n * (n - 1))
}
