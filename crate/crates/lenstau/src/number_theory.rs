//! Bernoulli polynomials, power-sum identities, and the binomial
//! vanishing/valuation lemmas that drive the divisibility estimates: the
//! alternating sum Σ (−1)^{|s|} binom(a,s) p(s) kills polynomials of
//! total degree below |a|, and quadratically twisted sums of
//! integer-valued polynomials over (Z/r)^{n−1} inherit high (ζ−1)-adic
//! valuation from the Gauss sum they perturb.

use num::{BigInt, BigRational, One, Zero};

use crate::arith::{binom_int, is_odd_prime};
use crate::cyclotomic::{CycloNumber, ZetaPoly};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::{CheckResult, ValuationBound};

/// Largest supported Bernoulli degree; exact rationals grow fast beyond
/// desk scale.
pub const MAX_BERNOULLI_DEGREE: usize = 64;

/// B_d(z) with exact rational coefficients, constant term first.
/// Convention: B_1(0) = −1/2, so that Σ_{k=0}^{m−1} k^d =
/// (B_{d+1}(m) − B_{d+1}(0))/(d+1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BernoulliPoly {
    degree: usize,
    coeffs: Vec<BigRational>,
}

/// Bernoulli numbers B_0..B_d from the defining recurrence
/// Σ_{j=0}^{m} binom(m+1, j) B_j = 0 for m ≥ 1.
fn bernoulli_numbers(d: usize) -> Vec<BigRational> {
    let mut b = Vec::with_capacity(d + 1);
    b.push(BigRational::one());
    for m in 1..=d {
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            let c = binom_int(m as i64 + 1, j as u32);
            acc += BigRational::from_integer(c) * bj;
        }
        let denom = BigRational::from_integer(BigInt::from(m as i64 + 1));
        b.push(-acc / denom);
    }
    b
}

/// B_d(z) = Σ_k binom(d,k) B_k z^{d−k}.
pub fn bernoulli_polynomial(d: usize) -> Result<BernoulliPoly> {
    if d > MAX_BERNOULLI_DEGREE {
        return Err(Error::DegreeOutOfRange(d, MAX_BERNOULLI_DEGREE));
    }
    let numbers = bernoulli_numbers(d);
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for (k, bk) in numbers.iter().enumerate() {
        // contributes to the z^{d−k} coefficient
        let c = binom_int(d as i64, k as u32);
        coeffs[d - k] = BigRational::from_integer(c) * bk;
    }
    Ok(BernoulliPoly { degree: d, coeffs })
}

impl BernoulliPoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of z^0..z^degree.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// B_d(0), the d-th Bernoulli number.
    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }
}

/// Σ_{k=0}^{r−1} k^d, exactly.
pub fn power_sum_direct(r: u64, d: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..r {
        acc += BigInt::from(k).pow(d);
    }
    acc
}

/// Compares the direct power sum with (B_{d+1}(r) − B_{d+1}(0))/(d+1).
pub fn power_sum_check(r: u64, d: u32) -> Result<CheckResult<BigRational>> {
    let lhs = BigRational::from_integer(power_sum_direct(r, d));
    let b = bernoulli_polynomial(d as usize + 1)?;
    let at_r = b.eval(&BigRational::from_integer(BigInt::from(r)));
    let at_zero = b.constant_term().clone();
    let rhs = (at_r - at_zero) / BigRational::from_integer(BigInt::from(d as i64 + 1));
    Ok(CheckResult::of(lhs, rhs))
}

/// An integer-valued polynomial in `vars` variables, stored in the
/// binomial basis: Σ c · Π_i binom(t_i, l_i) with integer coefficients.
/// Integrality on Z^vars is structural in this basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinomialPoly {
    vars: usize,
    terms: Vec<(BigInt, Vec<u32>)>,
}

impl BinomialPoly {
    pub fn new(vars: usize, terms: Vec<(BigInt, Vec<u32>)>) -> Self {
        for (_, ls) in &terms {
            assert_eq!(ls.len(), vars, "term arity mismatch");
        }
        BinomialPoly { vars, terms }
    }

    /// The single term Π_i binom(t_i, l_i).
    pub fn monomial(ls: Vec<u32>) -> Self {
        let vars = ls.len();
        BinomialPoly { vars, terms: vec![(BigInt::one(), ls)] }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, ls)| ls.iter().map(|&l| l as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[i64]) -> BigInt {
        assert_eq!(point.len(), self.vars, "evaluation arity mismatch");
        let mut acc = BigInt::zero();
        for (c, ls) in &self.terms {
            let mut term = c.clone();
            for (t, l) in point.iter().zip(ls) {
                term *= binom_int(*t, *l);
            }
            acc += term;
        }
        acc
    }
}

/// Σ_{0≤s≤a} (−1)^{|s|} binom(a,s) p(s): zero whenever the total degree
/// of p is below |a| (the difference operator Π Δ_i^{a_i} annihilates
/// low-degree polynomials). Returns the sum so a caller can inspect a
/// failure; errors when the degree precondition does not hold.
pub fn alternating_binomial_sum(a: &[u32], p: &BinomialPoly) -> Result<BigInt> {
    assert_eq!(a.len(), p.vars(), "exponent arity mismatch");
    let bound: u32 = a.iter().sum();
    let deg = p.total_degree();
    if deg as u32 >= bound {
        return Err(Error::DegreeNotBelowOrder { deg, bound });
    }
    let mut acc = BigInt::zero();
    let mut s = vec![0u32; a.len()];
    loop {
        let parity: u32 = s.iter().sum();
        let mut weight = BigInt::one();
        for (si, ai) in s.iter().zip(a) {
            weight *= binom_int(*ai as i64, *si);
        }
        let point: Vec<i64> = s.iter().map(|&x| x as i64).collect();
        let term = weight * p.eval(&point);
        if parity % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        // odometer over 0 ≤ s ≤ a
        let mut i = 0;
        loop {
            if i == s.len() {
                return Ok(acc);
            }
            s[i] += 1;
            if s[i] <= a[i] {
                break;
            }
            s[i] = 0;
            i += 1;
        }
    }
}

/// Σ_{k=0}^{r−1} binom(k, d) = binom(r, d+1) by the hockey-stick
/// identity.
pub fn binom_column_sum(r: u64, d: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..r {
        acc += binom_int(k as i64, d);
    }
    acc
}

/// Valuation bound for the column sum embedded in Z_(r)[ζ]:
/// xi_valuation ≥ (r−1)/2 − ⌊d/2⌋ (vacuous once d ≥ r−1).
pub fn binom_column_sum_valuation(r: u64, d: u32) -> ValuationBound {
    assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
    let sum = binom_column_sum(r, d);
    let valuation = CycloNumber::new(r, vec![BigRational::from_integer(sum)])
        .expect("integer embeds")
        .xi_valuation();
    let bound = (r as i64 - 1) / 2 - (d as i64) / 2;
    ValuationBound::check(valuation, bound)
}

/// Σ_{k∈(Z/r)^{n−1}} ζ^{b·kᵗAk/2}·p(k) for an integer-valued p: the
/// quadratically twisted sum whose valuation stays within ⌊deg/2⌋ of the
/// bare Gauss sum's (n−1)(r−1)/2.
pub fn quadratic_weighted_poly_sum(
    rs: &RootSystem,
    r: u64,
    b: i64,
    p: &BinomialPoly,
) -> Result<CycloNumber> {
    assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
    assert_eq!(p.vars(), rs.rank(), "polynomial arity mismatch");
    if b % r as i64 == 0 {
        return Err(Error::FramingDivisibleByR(b));
    }
    let m = rs.rank();
    let cartan = rs.cartan();
    let mut acc = ZetaPoly::zero(r);
    let mut k = vec![0i64; m];
    loop {
        let mut quad: i128 = 0;
        for i in 0..m {
            for j in 0..m {
                quad += (cartan[i][j] * k[i] * k[j]) as i128;
            }
        }
        debug_assert_eq!(quad % 2, 0);
        let e = (b as i128 * (quad / 2)).rem_euclid(r as i128) as i64;
        acc.add_term(e, &p.eval(&k));
        let mut i = 0;
        loop {
            if i == m {
                return Ok(acc.to_cyclo());
            }
            k[i] += 1;
            if k[i] < r as i64 {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}
