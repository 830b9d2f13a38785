//! Integer and rational scalar helpers: perfect-square tests, prime
//! iteration, and squarefree-kernel extraction for discriminants.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// True iff `n` is the square of an integer. Negative numbers are not
/// squares; zero is.
pub fn is_perfect_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return true;
    }
    let root = n.sqrt();
    &root * &root == *n
}

/// True iff `q` is the square of a rational. Relies on the reduced
/// representation: p/q is a square iff both p and q are.
pub fn is_perfect_square_rat(q: &BigRational) -> bool {
    if q.is_negative() {
        return false;
    }
    is_perfect_square_int(q.numer()) && is_perfect_square_int(q.denom())
}

/// Deterministic primality for machine-sized candidates by trial division.
/// Intended for the small primes consumed by cycle-type sampling.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 11u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Unbounded iterator over primes `>= start`, in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime_u64(n))
}

/// Strong probable-prime test to a fixed base set. Deterministic as a
/// function of the input; exact below 3.3·10^24, a fixed-base heuristic
/// beyond that (adequate for the stable cofactor classification done by
/// `squarefree_kernel`).
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    let small: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &small {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &small {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `bound`, by sieve. Used as the trial-division base for
/// kernel extraction.
pub fn primes_below(bound: u64) -> Vec<u64> {
    let bound = bound as usize;
    if bound <= 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; bound];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p < bound {
        if sieve[p] {
            let mut q = p * p;
            while q < bound {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Squarefree kernel of a nonzero integer: sign times the product of the
/// primes dividing it to odd multiplicity.
///
/// Primes up to `trial_bound` are extracted exactly. A remaining cofactor
/// (all of whose prime factors exceed the bound) is dropped when it is a
/// perfect square, kept whole when it is a probable prime, and otherwise
/// kept whole as a stable proxy. The proxy branch can over-retain a square
/// factor with two huge primes, which is acceptable for fingerprinting:
/// the result is still a deterministic invariant of the input integer.
pub fn squarefree_kernel(n: &BigInt, trial_primes: &[u64]) -> BigInt {
    assert!(!n.is_zero(), "squarefree kernel of zero is undefined");
    let sign = n.signum();
    let mut rest = n.abs();
    let mut kernel = BigInt::one();
    for &p in trial_primes {
        let p = BigInt::from(p);
        if &p * &p > rest {
            break;
        }
        let mut mult = 0u32;
        loop {
            let (q, r) = rest.div_rem(&p);
            if r.is_zero() {
                rest = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult % 2 == 1 {
            kernel *= &p;
        }
    }
    if !rest.is_one() {
        if is_perfect_square_int(&rest) {
            // even multiplicity throughout; contributes nothing
        } else {
            kernel *= &rest;
        }
    }
    sign * kernel
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Floor of y^e for a positive real edge, as an i64 box bound.
/// Exact for integral y within i64 range; f64-rounded otherwise.
pub fn floor_pow(y: f64, e: u32) -> i64 {
    assert!(y >= 0.0, "box edge must be nonnegative");
    if y.fract() == 0.0 && y <= 9.0e18 {
        // integer base: exact big-integer power, saturating to i64::MAX
        let base = BigInt::from(y as i64);
        let p = num_traits::pow(base, e as usize);
        p.to_i64().unwrap_or(i64::MAX)
    } else {
        y.powi(e as i32).floor() as i64
    }
}
