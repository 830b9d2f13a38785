//! Dense univariate polynomials over an arbitrary coefficient ring,
//! plus the exact rational operations used by the polynomial family
//! builders: antiderivatives with a prescribed zero, the Euler equation
//! x·f' − f = g, denominator clearing, and weighted height.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Coefficient scalars: a commutative ring with ring ops from `num_traits`
/// and `std::ops`. Blanket-implemented; `BigInt` and `BigRational` are the
/// instantiations used throughout, see the crate-root aliases.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

fn offenders_text(offenders: &[(usize, BigRational)]) -> String {
    offenders
        .iter()
        .map(|(k, c)| format!("x^{k}: {c}"))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation requires nonzero polynomials")]
    ZeroPolynomial,
    #[error("discriminant requires degree >= 1")]
    ConstantPolynomial,
    #[error("operation requires a monic polynomial")]
    NotMonic,
    #[error(
        "x*f' - f = g has no solution: the x^1 coefficient of g is {obstruction}, \
         but x*f' - f annihilates the x^1 term"
    )]
    NoSolution { obstruction: BigRational },
    #[error("scaling left non-integral coefficients ({})", offenders_text(offenders))]
    NonIntegral { offenders: Vec<(usize, BigRational)> },
}

/// Dense polynomial; `coeffs[k]` is the coefficient of x^k.
/// Invariant: no trailing zero coefficient (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    /// c·x^k.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().map_or(false, |c| c.is_one())
    }

    /// Coefficient of x^k (zero when k exceeds the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Substitution f(g(x)) by Horner.
    pub fn compose(&self, g: &Poly<T>) -> Poly<T> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly<T> {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Σ k·c_k x^{k−1}, exactly.
    pub fn derivative(&self) -> Poly<T>
    where
        T: FromPrimitive,
    {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let k = T::from_usize(i + 1).expect("small integer fits any scalar");
                    c.clone() * k
                })
                .collect(),
        )
    }

    /// Quotient and remainder over a field scalar (deg r < deg d).
    pub fn div_rem(&self, d: &Poly<T>) -> (Poly<T>, Poly<T>)
    where
        T: Div<Output = T>,
    {
        let dd = d.degree().expect("division by the zero polynomial");
        let dlc = d.leading_coefficient().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coefficient().unwrap().clone() / dlc.clone();
            let shift = rd - dd;
            quo[shift] = factor.clone();
            rem = &rem - &d.scale(&factor).shift_up(shift);
        }
        (Poly::new(quo), rem)
    }
}

impl<'a, 'b, T: Coeff> Add<&'b Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'b Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(v)
    }
}

impl<'a, 'b, T: Coeff> Sub<&'b Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'b Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(v)
    }
}

impl<'a, 'b, T: Coeff> Mul<&'b Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'b Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<'a, T: Coeff> Neg for &'a Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Monic gcd over a field scalar; zero when both inputs are zero.
pub fn gcd<T>(a: &Poly<T>, b: &Poly<T>) -> Poly<T>
where
    T: Coeff + Div<Output = T>,
{
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        return a;
    }
    let lc = a.leading_coefficient().unwrap().clone();
    a.scale(&(T::one() / lc))
}

impl Poly<BigInt> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// self / content; the sign stays with the primitive part.
    pub fn primitive_part(&self) -> Poly<BigInt> {
        let c = self.content();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl Poly<BigRational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_pairs(coeffs: &[(i64, i64)]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    /// (d·self, d) with d ≥ 1 the lcm of the coefficient denominators.
    pub fn clear_denominators(&self) -> (Poly<BigInt>, BigInt) {
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&d / c.denom()))
            .collect();
        (Poly { coeffs: ints }, d)
    }

    /// Some(f) iff every coefficient is an integer.
    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(Poly {
                coeffs: self.coeffs.iter().map(|c| c.numer().clone()).collect(),
            })
        } else {
            None
        }
    }

    /// Positive rational c with self = c·(primitive integer polynomial);
    /// zero for the zero polynomial.
    pub fn content(&self) -> BigRational {
        let (ints, d) = self.clear_denominators();
        BigRational::new(ints.content(), d)
    }

    pub fn primitive_part(&self) -> Poly<BigInt> {
        let (ints, _) = self.clear_denominators();
        ints.primitive_part()
    }
}

/// The antiderivative F of g with F(a) = 0. When (x−a) | g, additionally
/// (x−a)² | F.
pub fn antiderivative_vanishing_at(g: &Poly<BigRational>, a: &BigRational) -> Poly<BigRational> {
    let mut v = vec![BigRational::zero(); g.coeffs().len() + 1];
    for (k, c) in g.coeffs().iter().enumerate() {
        v[k + 1] = c / BigRational::from_integer(BigInt::from(k + 1));
    }
    let raw = Poly::new(v);
    let shift = raw.evaluate(a);
    &raw - &Poly::constant(shift)
}

/// Solves x·f' − f = g with f'(0) = 0: coefficientwise (k−1)·c_k = b_k,
/// so c_k = b_k/(k−1) for k ≠ 1, c_1 = 0, c_0 = −b_0. Solvable iff the
/// x^1 coefficient of g vanishes. f is monic exactly when the leading
/// coefficient of g is deg g − 1.
pub fn solve_euler_ode(g: &Poly<BigRational>) -> Result<Poly<BigRational>, PolyError> {
    let b1 = g.coeff(1);
    if !b1.is_zero() {
        return Err(PolyError::NoSolution { obstruction: b1 });
    }
    let mut v = vec![BigRational::zero(); g.coeffs().len()];
    for (k, b) in g.coeffs().iter().enumerate() {
        if k == 1 {
            continue;
        }
        let div = BigRational::from_integer(BigInt::from(k as i64 - 1));
        v[k] = b / div;
    }
    Ok(Poly::new(v))
}

/// m^n·f(x/m) for monic f of degree n: the coefficient of x^k becomes
/// c_k·m^{n−k}. Integrality of every coefficient is verified, not assumed.
pub fn scale_clear(f: &Poly<BigRational>, m: &BigInt) -> Result<Poly<BigInt>, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let n = f.degree().unwrap();
    let mut scaled = vec![BigRational::zero(); n + 1];
    let mut power = BigRational::one();
    let m_rat = BigRational::from_integer(m.clone());
    for k in (0..=n).rev() {
        scaled[k] = f.coeff(k) * &power;
        power *= &m_rat;
    }
    let offenders: Vec<(usize, BigRational)> = scaled
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_integer())
        .map(|(k, c)| (k, c.clone()))
        .collect();
    if !offenders.is_empty() {
        return Err(PolyError::NonIntegral { offenders });
    }
    Ok(Poly::new(
        scaled.into_iter().map(|c| c.numer().clone()).collect(),
    ))
}

/// Weighted height of a monic integer polynomial: max over i ≥ 1 of
/// |c_i|^{1/i}, where c_i is the coefficient of x^{n−i}. Zero for x^n.
/// Exact when |c_i| is a perfect i-th power.
pub fn height(f: &Poly<BigInt>) -> Result<f64, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let n = f.degree().unwrap();
    let mut best = 0.0f64;
    for i in 1..=n {
        let c = f.coeff(n - i).abs();
        if c.is_zero() {
            continue;
        }
        let root = c.nth_root(i as u32);
        let v = if num_traits::pow(root.clone(), i) == c {
            root.to_f64().unwrap_or(f64::INFINITY)
        } else {
            c.to_f64().map_or(f64::INFINITY, |x| x.powf(1.0 / i as f64))
        };
        best = best.max(v);
    }
    Ok(best)
}

/// Exact height comparison for a monic rational polynomial: true iff
/// |c_i| ≤ bound^i for every i ≥ 1 (rational inequalities, no rounding).
pub fn height_at_most(f: &Poly<BigRational>, bound: &BigRational) -> Result<bool, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let n = f.degree().unwrap();
    let mut power = BigRational::one();
    for i in 1..=n {
        power *= bound;
        if f.coeff(n - i).abs() > power {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fmt_terms<T>(
    poly: &Poly<T>,
    f: &mut fmt::Formatter<'_>,
    negative: impl Fn(&T) -> bool,
    abs_text: impl Fn(&T) -> String,
    abs_is_one: impl Fn(&T) -> bool,
) -> fmt::Result
where
    T: Coeff,
{
    if poly.is_zero() {
        return write!(f, "0");
    }
    let deg = poly.degree().unwrap();
    let mut first = true;
    for k in (0..=deg).rev() {
        let c = poly.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = negative(&c);
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let unit = abs_is_one(&c);
        if k == 0 {
            write!(f, "{}", abs_text(&c))?;
        } else {
            if !unit {
                write!(f, "{}*", abs_text(&c))?;
            }
            if k == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            self,
            f,
            |c| c.is_negative(),
            |c| c.abs().to_string(),
            |c| c.abs().is_one(),
        )
    }
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            self,
            f,
            |c| c.is_negative(),
            |c| c.abs().to_string(),
            |c| c.abs().is_one(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type IntPoly = Poly<BigInt>;
    type RatPoly = Poly<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn construction_trims() {
        let p = IntPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_ints(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = IntPoly::from_ints(&[1, 2, 1]); // (x+1)^2
        let b = IntPoly::from_ints(&[-1, 1]); // x-1
        assert_eq!(&a * &b, IntPoly::from_ints(&[-1, -1, 1, 1]));
        assert_eq!(&a + &b, IntPoly::from_ints(&[0, 3, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!((-&b), IntPoly::from_ints(&[1, -1]));
    }

    #[test]
    fn derivative_rule() {
        // d/dx (x^3 + 2x^2 + 5) = 3x^2 + 4x
        let p = IntPoly::from_ints(&[5, 0, 2, 1]);
        assert_eq!(p.derivative(), IntPoly::from_ints(&[0, 4, 3]));
        assert!(IntPoly::from_ints(&[7]).derivative().is_zero());
    }

    #[test]
    fn evaluate_and_compose() {
        let p = IntPoly::from_ints(&[1, 0, 1]); // x^2+1
        assert_eq!(p.evaluate(&BigInt::from(3)), BigInt::from(10));
        // p(x+1) = x^2 + 2x + 2
        let shifted = p.compose(&IntPoly::from_ints(&[1, 1]));
        assert_eq!(shifted, IntPoly::from_ints(&[2, 2, 1]));
    }

    #[test]
    fn field_division_and_gcd() {
        let a = RatPoly::from_ints(&[-1, 0, 1]); // x^2-1
        let b = RatPoly::from_ints(&[1, -2, 1]); // (x-1)^2
        let g = gcd(&a, &b);
        assert_eq!(g, RatPoly::from_ints(&[-1, 1])); // monic x-1
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(gcd(&RatPoly::zero(), &RatPoly::zero()).is_zero());
    }

    #[test]
    fn content_and_primitive_part() {
        let p = IntPoly::from_ints(&[-4, 6]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive_part(), IntPoly::from_ints(&[-2, 3]));
        let q = RatPoly::from_pairs(&[(1, 2), (3, 4)]);
        // 1/2 + 3/4 x = 1/4 · (2 + 3x)
        assert_eq!(q.content(), rat(1, 4));
        assert_eq!(q.primitive_part(), IntPoly::from_ints(&[2, 3]));
    }

    #[test]
    fn antiderivative_frozen_example() {
        // g = 6x(x^2-3x+2)^2 = 6x^5 - 36x^4 + 78x^3 - 72x^2 + 24x
        let g = RatPoly::from_ints(&[0, 24, -72, 78, -36, 6]);
        let f = antiderivative_vanishing_at(&g, &rat(0, 1));
        let expected = RatPoly::new(vec![
            rat(0, 1),
            rat(0, 1),
            rat(12, 1),
            rat(-24, 1),
            rat(39, 2),
            rat(-36, 5),
            rat(1, 1),
        ]);
        assert_eq!(f, expected);
        assert_eq!(f.derivative(), g);
        assert!(f.evaluate(&rat(0, 1)).is_zero());
    }

    #[test]
    fn antiderivative_double_root_at_base_point() {
        // (x-a) | g forces (x-a)^2 | F
        let a = rat(2, 1);
        let g = RatPoly::from_ints(&[-2, 1]).scale(&rat(5, 1)); // 5(x-2)
        let f = antiderivative_vanishing_at(&g, &a);
        assert!(f.evaluate(&a).is_zero());
        assert!(f.derivative().evaluate(&a).is_zero());
    }

    #[test]
    fn euler_ode_examples() {
        // (x-1)^8 (8x+1) -> (x-1)^9 - 9x
        let lhs = RatPoly::from_ints(&[-1, 1]).pow(8);
        let g = &lhs * &RatPoly::from_ints(&[1, 8]);
        let f = solve_euler_ode(&g).unwrap();
        let expected = &RatPoly::from_ints(&[-1, 1]).pow(9) - &RatPoly::from_ints(&[0, 9]);
        assert_eq!(f, expected);
        // identity x f' - f = g holds coefficientwise
        let xfp = f.derivative().shift_up(1);
        assert_eq!(&xfp - &f, g);
        assert!(f.derivative().evaluate(&rat(0, 1)).is_zero());
        assert!(f.is_monic());

        match solve_euler_ode(&RatPoly::from_ints(&[0, 1])) {
            Err(PolyError::NoSolution { obstruction }) => assert_eq!(obstruction, rat(1, 1)),
            other => panic!("expected NoSolution, got {other:?}"),
        }
    }

    #[test]
    fn scale_clear_examples() {
        // x^2 + x/2, m=2 -> x^2 + x
        let f = RatPoly::new(vec![rat(0, 1), rat(1, 2), rat(1, 1)]);
        let scaled = scale_clear(&f, &BigInt::from(2)).unwrap();
        assert_eq!(scaled, IntPoly::from_ints(&[0, 1, 1]));
        assert!(scaled.is_monic());

        // x^2 + 1/3, m=2 -> the constant coefficient 4/3 violates integrality
        let g = RatPoly::new(vec![rat(1, 3), rat(0, 1), rat(1, 1)]);
        match scale_clear(&g, &BigInt::from(2)) {
            Err(PolyError::NonIntegral { offenders }) => {
                assert_eq!(offenders, vec![(0, rat(4, 3))]);
            }
            other => panic!("expected NonIntegral, got {other:?}"),
        }

        assert_eq!(
            scale_clear(&RatPoly::from_ints(&[0, 2]), &BigInt::from(2)),
            Err(PolyError::NotMonic)
        );
    }

    #[test]
    fn height_examples() {
        let h = |c: &[i64]| height(&IntPoly::from_ints(c)).unwrap();
        assert_eq!(h(&[8, 0, 0, 1]), 2.0); // x^3+8
        assert_eq!(h(&[4, 3, 1]), 3.0); // x^2+3x+4
        assert_eq!(h(&[0, 0, 0, 0, 0, 1]), 0.0); // x^5
        assert_eq!(
            height(&IntPoly::from_ints(&[1, 2])),
            Err(PolyError::NotMonic)
        );
    }

    #[test]
    fn height_comparison_is_exact() {
        let f = RatPoly::new(vec![rat(9, 1), rat(0, 1), rat(1, 1)]); // x^2+9
        assert!(height_at_most(&f, &rat(3, 1)).unwrap());
        assert!(!height_at_most(&f, &rat(29, 10)).unwrap());
    }

    #[test]
    fn display_rendering() {
        let f = RatPoly::new(vec![
            rat(0, 1),
            rat(0, 1),
            rat(12, 1),
            rat(-24, 1),
            rat(39, 2),
            rat(-36, 5),
            rat(1, 1),
        ]);
        assert_eq!(
            f.to_string(),
            "x^6 - 36/5*x^5 + 39/2*x^4 - 24*x^3 + 12*x^2"
        );
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_ints(&[-1, -1]).to_string(), "-x - 1");
        assert_eq!(IntPoly::from_ints(&[3]).to_string(), "3");
        assert_eq!(IntPoly::from_ints(&[0, -9, 0, 1]).to_string(), "x^3 - 9*x");
    }
}
