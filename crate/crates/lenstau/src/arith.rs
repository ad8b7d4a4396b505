//! Small modular and combinatorial helpers shared by the other modules.

use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};

pub(crate) fn is_odd_prime(r: u64) -> bool {
    if r < 3 || r % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= r {
        if r % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse mod the odd prime r; requires a not divisible by r.
pub(crate) fn mod_inv(a: u64, r: u64) -> u64 {
    debug_assert!(a % r != 0);
    mod_pow(a % r, r - 2, r)
}

/// Reduce a signed integer into [0, r).
pub(crate) fn mod_reduce(a: i64, r: u64) -> u64 {
    (a.rem_euclid(r as i64)) as u64
}

pub(crate) fn big_mod_u64(x: &BigInt, r: u64) -> u64 {
    let m = BigInt::from(r);
    let rem = ((x % &m) + &m) % &m;
    let (_, digits) = rem.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

/// Whether the (reduced) rational has denominator coprime to r.
pub(crate) fn rat_is_r_integral(c: &BigRational, r: u64) -> bool {
    big_mod_u64(c.denom(), r) != 0
}

/// The natural image of a rational with denominator coprime to r in Z/rZ:
/// numerator times inverse denominator, everything reduced mod r.
pub(crate) fn rat_mod_r(c: &BigRational, r: u64) -> Result<u64> {
    let d = big_mod_u64(c.denom(), r);
    if d == 0 {
        return Err(Error::DenominatorHitsModulus(c.to_string(), r));
    }
    let n = big_mod_u64(c.numer(), r);
    Ok(n * mod_inv(d, r) % r)
}

/// Whether the numerator of a r-integral rational is divisible by r.
pub(crate) fn rat_divisible_by_r(c: &BigRational, r: u64) -> bool {
    big_mod_u64(c.numer(), r) == 0
}

pub(crate) fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// binom(m, k) for integer m of either sign; always an exact integer.
pub(crate) fn binom_int(m: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k as i64 {
        acc *= BigInt::from(m - j);
        let q = &acc / BigInt::from(j + 1);
        debug_assert!((&q * BigInt::from(j + 1)) == acc);
        acc = q;
    }
    acc
}

/// r-adic valuation of a nonzero rational: v_r(numerator) - v_r(denominator).
#[cfg(test)]
pub(crate) fn rational_r_valuation(c: &BigRational, r: u64) -> i64 {
    use num::{Signed, Zero};
    assert!(!c.is_zero());
    let m = BigInt::from(r);
    let count = |mut x: BigInt| {
        let mut v = 0i64;
        x = x.abs();
        while (&x % &m).is_zero() {
            x /= &m;
            v += 1;
        }
        v
    };
    count(c.numer().clone()) - count(c.denom().clone())
}

pub(crate) fn perm_parity(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_odd_prime(3));
        assert!(is_odd_prime(13));
        assert!(is_odd_prime(19));
        assert!(!is_odd_prime(2));
        assert!(!is_odd_prime(9));
        assert!(!is_odd_prime(15));
        assert!(!is_odd_prime(1));
    }

    #[test]
    fn modular_inverse() {
        for r in [5u64, 7, 11, 13] {
            for a in 1..r {
                assert_eq!(a * mod_inv(a, r) % r, 1);
            }
        }
    }

    #[test]
    fn rational_vee_map() {
        let c = BigRational::new(BigInt::from(-1), BigInt::from(4));
        assert_eq!(rat_mod_r(&c, 5).unwrap(), 1);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert!(rat_mod_r(&bad, 5).is_err());
    }

    #[test]
    fn integer_binomials() {
        assert_eq!(binom_int(5, 2), BigInt::from(10));
        assert_eq!(binom_int(-1, 3), BigInt::from(-1));
        assert_eq!(binom_int(-2, 2), BigInt::from(3));
        assert_eq!(binom_int(3, 5), BigInt::from(0));
    }

    #[test]
    fn parity_matches_inversion_count() {
        let perms: [&[usize]; 4] = [&[0, 1, 2], &[1, 0, 2], &[1, 2, 0], &[2, 1, 0]];
        let signs = [1, -1, 1, -1];
        for (p, s) in perms.iter().zip(signs) {
            assert_eq!(perm_parity(p) as i64, s);
        }
    }
}
