//! Independent cross-checks for the integration suites: a Sylvester
//! determinant for resultants, closed-form low-degree discriminants,
//! and a complex root finder for numeric comparisons. None of these
//! share code with the library paths they validate.
//!
//! Shared by several test targets; not every target uses every helper.
#![allow(dead_code)]

use an_forge::IntPoly;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = (num / den, num % den);
    assert!(r.is_zero(), "inexact division in Bareiss elimination");
    q
}

pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = exact_div(&v, &prev);
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let n = f.degree().expect("nonzero f");
    let m = g.degree().expect("nonzero g");
    if n + m == 0 {
        return BigInt::one();
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for k in 0..=n {
            mat[row][row + k] = f.coeff(n - k);
        }
    }
    for row in 0..n {
        for k in 0..=m {
            mat[m + row][row + k] = g.coeff(m - k);
        }
    }
    det_bareiss(mat)
}

/// Discriminant of x^3 + p x^2 + q x + r, expanded in coefficients.
pub fn cubic_disc(p: &BigInt, q: &BigInt, r: &BigInt) -> BigInt {
    BigInt::from(18) * p * q * r - BigInt::from(4) * p.pow(3) * r + p.pow(2) * q.pow(2)
        - BigInt::from(4) * q.pow(3)
        - BigInt::from(27) * r.pow(2)
}

/// Discriminant of x^4 + a x^3 + b x^2 + c x + d, expanded in
/// coefficients (16 terms).
pub fn quartic_disc(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    BigInt::from(256) * d.pow(3) - BigInt::from(192) * a * c * d.pow(2)
        - BigInt::from(128) * b.pow(2) * d.pow(2)
        + BigInt::from(144) * b * c.pow(2) * d
        - BigInt::from(27) * c.pow(4)
        + BigInt::from(144) * a.pow(2) * b * d.pow(2)
        - BigInt::from(6) * a.pow(2) * c.pow(2) * d
        - BigInt::from(80) * a * b.pow(2) * c * d
        + BigInt::from(18) * a * b * c.pow(3)
        + BigInt::from(16) * b.pow(4) * d
        - BigInt::from(4) * b.pow(3) * c.pow(2)
        - BigInt::from(27) * a.pow(4) * d.pow(2)
        + BigInt::from(18) * a.pow(3) * b * c * d
        - BigInt::from(4) * a.pow(3) * c.pow(3)
        - BigInt::from(4) * a.pow(2) * b.pow(3) * d
        + a.pow(2) * b.pow(2) * c.pow(2)
}

pub fn big_to_f64(v: &BigInt) -> f64 {
    v.to_f64().expect("fits in f64 for test sizes")
}

/// All complex roots by Durand-Kerner iteration. Input coefficients
/// ascending; leading coefficient nonzero.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    assert!(n >= 1 && coeffs[n] != 0.0);
    let monic: Vec<Complex64> = coeffs
        .iter()
        .map(|&c| Complex64::new(c / coeffs[n], 0.0))
        .collect();
    let radius = 1.0
        + monic
            .iter()
            .take(n)
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.7)
        })
        .collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * x + *c;
        }
        acc
    };
    for _ in 0..400 {
        let mut worst = 0.0f64;
        for k in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            let step = eval(z[k]) / denom;
            z[k] -= step;
            worst = worst.max(step.norm());
        }
        if worst < 1e-14 * radius {
            break;
        }
    }
    z
}

/// Random integer polynomial of exact degree `deg` with |coeffs| <= bound.
pub fn random_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> IntPoly {
    let mut v: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    if v[deg] == 0 {
        v[deg] = 1;
    }
    IntPoly::from_ints(&v)
}

/// Random monic integer polynomial of degree `deg`.
pub fn random_monic<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> IntPoly {
    let mut v: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    v[deg] = 1;
    IntPoly::from_ints(&v)
}

/// Numeric discriminant of a monic f through the critical-value product:
/// Disc(f) = (-1)^{n(n-1)/2} n^n prod f(beta) over the roots beta of f'.
pub fn numeric_disc_critical_points(f: &IntPoly) -> f64 {
    let n = f.degree().expect("positive degree");
    assert!(f.is_monic());
    let deriv = f.derivative();
    let dcoeffs: Vec<f64> = (0..n).map(|i| big_to_f64(&deriv.coeff(i))).collect();
    let betas = complex_roots(&dcoeffs);
    let fc: Vec<f64> = (0..=n).map(|i| big_to_f64(&f.coeff(i))).collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in fc.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut prod = Complex64::new(1.0, 0.0);
    for b in betas {
        prod *= eval(b);
    }
    let signed = if (n * (n - 1) / 2) % 2 == 1 {
        -prod
    } else {
        prod
    };
    (n as f64).powi(n as i32) * signed.re
}

/// |got - want| relative to |want|.
pub fn rel_err(got: f64, want: &BigInt) -> f64 {
    let w = big_to_f64(want);
    assert!(w != 0.0, "relative error against zero");
    ((got - w) / w).abs()
}

#[allow(dead_code)]
pub fn bigint(v: i64) -> BigInt {
    BigInt::from(v)
}
