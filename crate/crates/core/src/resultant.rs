//! Resultants over ℤ by subresultant polynomial remainder sequences
//! (content-managed, no coefficient blowup), rational resultants by
//! denominator clearing, and discriminants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Poly, PolyError};

type IntPoly = Poly<BigInt>;
type RatPoly = Poly<BigRational>;

fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact division in subresultant bookkeeping");
    q
}

fn exact_scalar_div(p: &IntPoly, d: &BigInt) -> IntPoly {
    Poly::new(p.coeffs().iter().map(|c| exact_div(c, d)).collect())
}

/// Pseudo-remainder: the R with lc(b)^(deg a − deg b + 1)·a = q·b + R.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo-division by zero");
    let d = b.leading_coefficient().unwrap().clone();
    let mut e = a.degree().unwrap() - db + 1;
    let mut r = a.clone();
    while let Some(rd) = r.degree() {
        if rd < db {
            break;
        }
        let lr = r.leading_coefficient().unwrap().clone();
        r = &r.scale(&d) - &b.scale(&lr).shift_up(rd - db);
        e -= 1;
    }
    let mut factor = BigInt::one();
    for _ in 0..e {
        factor *= &d;
    }
    r.scale(&factor)
}

/// Resultant of two nonzero integer polynomials via the subresultant
/// sequence of their primitive parts, with the content contribution
/// restored at the end.
pub fn resultant_int(f: &IntPoly, g: &IntPoly) -> Result<BigInt, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut negate = false;
    {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                negate = !negate;
            }
        }
    }
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    if db == 0 {
        let r = num_traits::pow(b.coeff(0), da);
        return Ok(if negate { -r } else { r });
    }
    let ca = a.content();
    let cb = b.content();
    a = a.primitive_part();
    b = b.primitive_part();
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            // positive-degree common factor
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &g_ * num_traits::pow(h.clone(), delta);
        b = exact_scalar_div(&r, &divisor);
        g_ = a.leading_coefficient().unwrap().clone();
        if delta > 0 {
            h = exact_div(&num_traits::pow(g_.clone(), delta), &num_traits::pow(h, delta - 1));
        }
        if b.degree().unwrap() == 0 {
            break;
        }
    }
    let q = a.degree().unwrap(); // last positive-degree element
    let num = num_traits::pow(b.coeff(0), q);
    let hf = exact_div(&num, &num_traits::pow(h, q - 1));
    let r = t * hf;
    Ok(if negate { -r } else { r })
}

/// Rational resultant: clear denominators, run the integer algorithm,
/// undo the scaling (Res(c·f, g) = c^{deg g}·Res(f, g)).
pub fn resultant(f: &RatPoly, g: &RatPoly) -> Result<BigRational, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (fi, df) = f.clear_denominators();
    let (gi, dg) = g.clear_denominators();
    let r = resultant_int(&fi, &gi)?;
    let den =
        num_traits::pow(df, g.degree().unwrap()) * num_traits::pow(dg, f.degree().unwrap());
    Ok(BigRational::new(r, den))
}

/// Disc(f) = (−1)^{n(n−1)/2}·Res(f, f′)/lc(f); zero iff f has a repeated
/// root. Requires deg f ≥ 1.
pub fn discriminant(f: &RatPoly) -> Result<BigRational, PolyError> {
    let n = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(n) => n,
    };
    let res = resultant(f, &f.derivative())?;
    let lc = f.leading_coefficient().unwrap().clone();
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / lc)
}

/// Integer discriminant. The division by lc(f) is exact over ℤ.
pub fn discriminant_int(f: &IntPoly) -> Result<BigInt, PolyError> {
    let n = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(n) => n,
    };
    let res = resultant_int(f, &f.derivative())?;
    let lc = f.leading_coefficient().unwrap();
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(exact_div(&signed, lc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    /// Root-free oracle: the resultant as the determinant of the Sylvester
    /// matrix, evaluated by fraction-free Gaussian elimination. Entirely
    /// independent of the remainder-sequence path.
    fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
        let n = f.degree().unwrap();
        let m = g.degree().unwrap();
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

    fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let pivot = (k + 1..n).find(|&i| !m[i][k].is_zero());
                match pivot {
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

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn frozen_resultants() {
        // Res(x^2-1, x-2) = f(2) = 3
        let f = RatPoly::from_ints(&[-1, 0, 1]);
        let g = RatPoly::from_ints(&[-2, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), rat(3, 1));
        // Res(x^2-2, x^2-3) = 1
        let f = RatPoly::from_ints(&[-2, 0, 1]);
        let g = RatPoly::from_ints(&[-3, 0, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), rat(1, 1));
        // shared root -> 0
        let f = RatPoly::from_ints(&[-1, 0, 1]);
        let g = RatPoly::from_ints(&[-1, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), rat(0, 1));
        assert_eq!(
            resultant(&RatPoly::zero(), &g),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn frozen_discriminants() {
        // disc(x^2+3x+1) = 9-4 = 5
        let f = RatPoly::from_ints(&[1, 3, 1]);
        assert_eq!(discriminant(&f).unwrap(), rat(5, 1));
        // disc(x^3+x+1) = -4-27 = -31
        let f = RatPoly::from_ints(&[1, 1, 0, 1]);
        assert_eq!(discriminant(&f).unwrap(), rat(-31, 1));
        assert_eq!(
            discriminant_int(&IntPoly::from_ints(&[1, 1, 0, 1])).unwrap(),
            BigInt::from(-31)
        );
        // repeated root -> 0
        let f = RatPoly::from_ints(&[1, 2, 1]);
        assert_eq!(discriminant(&f).unwrap(), rat(0, 1));
        assert_eq!(
            discriminant(&RatPoly::from_ints(&[5])),
            Err(PolyError::ConstantPolynomial)
        );
        // degree 1: empty product
        assert_eq!(discriminant(&RatPoly::from_ints(&[7, 2])).unwrap(), rat(1, 1));
    }

    #[test]
    fn rational_scaling_law() {
        // Res over Q must match the integer resultant after clearing
        let f = RatPoly::from_pairs(&[(1, 2), (0, 1), (1, 1)]); // x^2 + 1/2
        let g = RatPoly::from_pairs(&[(-1, 3), (1, 1)]); // x - 1/3
        // Res = f(1/3) = 1/9 + 1/2 = 11/18
        assert_eq!(resultant(&f, &g).unwrap(), rat(11, 18));
    }

    #[test]
    fn matches_sylvester_oracle_on_random_pairs() {
        let mut rng = ChaCha12Rng::seed_from_u64(42);
        for _ in 0..400 {
            let df = rng.gen_range(1..=8);
            let dg = rng.gen_range(1..=8);
            let f = random_poly(&mut rng, df);
            let g = random_poly(&mut rng, dg);
            let got = resultant_int(&f, &g).unwrap();
            let want = sylvester_resultant(&f, &g);
            assert_eq!(got, want, "f={f} g={g}");
        }
    }

    #[test]
    fn matches_sylvester_on_degenerate_shapes() {
        // equal degrees, shared factors, negative leading coefficients
        let cases: Vec<(IntPoly, IntPoly)> = vec![
            (IntPoly::from_ints(&[1, 2, 3]), IntPoly::from_ints(&[4, 5, 6])),
            (IntPoly::from_ints(&[-2, 0, -4]), IntPoly::from_ints(&[3, -1])),
            (
                IntPoly::from_ints(&[2, 4]),
                IntPoly::from_ints(&[0, 0, 0, 5]),
            ),
            (
                &IntPoly::from_ints(&[-1, 1]) * &IntPoly::from_ints(&[7, 0, 1]),
                &IntPoly::from_ints(&[-1, 1]) * &IntPoly::from_ints(&[3, 1]),
            ),
            (IntPoly::from_ints(&[0, 1]), IntPoly::from_ints(&[0, 0, 1])),
        ];
        for (f, g) in cases {
            assert_eq!(
                resultant_int(&f, &g).unwrap(),
                sylvester_resultant(&f, &g),
                "f={f} g={g}"
            );
            assert_eq!(
                resultant_int(&g, &f).unwrap(),
                sylvester_resultant(&g, &f),
                "swapped f={f} g={g}"
            );
        }
    }

    fn random_poly(rng: &mut ChaCha12Rng, deg: usize) -> IntPoly {
        loop {
            let mut v: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-30..=30)).collect();
            if v[deg] == 0 {
                v[deg] = 1;
            }
            let p = IntPoly::from_ints(&v);
            if p.degree() == Some(deg) {
                return p;
            }
        }
    }
}
