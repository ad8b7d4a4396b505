//! Exact arithmetic in Z_(r)[ζ] for an odd prime r, in the canonical
//! basis of powers of x = ζ − 1.
//!
//! The ring is presented as Z_(r)[x]/(Ψ) with Ψ(x) = ((1+x)^r − 1)/x,
//! the minimal polynomial of ζ − 1. In this basis the arithmetic facts
//! the invariants depend on are immediate: Ψ(0) = r and Ψ ≡ x^{r−1}
//! (mod r), so r is an associate of x^{r−1} and the ring is a discrete
//! valuation ring with uniformizer x. [`CycloNumber::xi_valuation`],
//! exact division, and the residue map [`CycloNumber::reduce_p_r`] are
//! all native here, which is why the basis is x-powers rather than
//! ζ-powers.
//!
//! Coefficients are exact rationals whose denominators must stay coprime
//! to r; constructors enforce this.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{is_odd_prime, rat_divisible_by_r, rat_is_r_integral, rat_mod_r};
use crate::error::{Error, Result};

/// Coefficients of Ψ(x) = ((1+x)^r − 1)/x: the k-th is binom(r, k+1),
/// so the vector has length r, constant term r, and leading term 1.
pub(crate) fn psi_coeffs(r: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(r as usize);
    let mut c = BigInt::from(r);
    out.push(c.clone());
    for k in 1..r {
        c = c * BigInt::from(r - k) / BigInt::from(k + 1);
        out.push(c.clone());
    }
    out
}

/// Coefficients of h(x) = (Ψ(x) − r)/x: the k-th is binom(r, k+2).
fn h_coeffs(r: u64) -> Vec<BigRational> {
    psi_coeffs(r)
        .into_iter()
        .skip(1)
        .map(BigRational::from_integer)
        .collect()
}

/// The truncation degree r̄ = (r−1−n(n−1))/2 of the residue map;
/// defined only when r > n(n−1).
pub(crate) fn rbar_for(r: u64, n: usize) -> Result<usize> {
    let nn1 = (n * (n - 1)) as u64;
    if r <= nn1 {
        return Err(Error::ModulusTooSmallForPr { r, nn1 });
    }
    Ok(((r - 1 - nn1) / 2) as usize)
}

/// An element of Z_(r)[ζ] in the canonical basis 1, x, …, x^{r−2}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloNumber {
    r: u64,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    /// Builds from arbitrary-degree x-basis coefficients, reducing mod Ψ.
    /// Every denominator must be coprime to r.
    pub fn new(r: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
        for c in &coeffs {
            if !rat_is_r_integral(c, r) {
                return Err(Error::DenominatorHitsModulus(c.to_string(), r));
            }
        }
        Ok(Self::from_poly(r, coeffs))
    }

    /// Trusted constructor: reduces mod Ψ and pads, assuming the
    /// Z_(r)-denominator invariant already holds.
    fn from_poly(r: u64, mut coeffs: Vec<BigRational>) -> Self {
        let m = (r - 1) as usize;
        if coeffs.len() > m {
            let psi: Vec<BigRational> =
                psi_coeffs(r).into_iter().map(BigRational::from_integer).collect();
            while coeffs.len() > m {
                let c = coeffs.pop().unwrap();
                if c.is_zero() {
                    continue;
                }
                let base = coeffs.len() - m;
                for (k, p) in psi.iter().take(m).enumerate() {
                    let delta = &c * p;
                    coeffs[base + k] -= delta;
                }
            }
        }
        coeffs.resize(m, BigRational::zero());
        debug_assert!(coeffs.iter().all(|c| rat_is_r_integral(c, r)));
        CycloNumber { r, coeffs }
    }

    pub fn zero(r: u64) -> Self {
        assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
        CycloNumber { r, coeffs: vec![BigRational::zero(); (r - 1) as usize] }
    }

    pub fn one(r: u64) -> Self {
        Self::from_integer(r, 1)
    }

    /// The uniformizer x = ζ − 1.
    pub fn x(r: u64) -> Self {
        let mut out = Self::zero(r);
        out.coeffs[1] = BigRational::one();
        out
    }

    pub fn from_integer(r: u64, m: i64) -> Self {
        let mut out = Self::zero(r);
        out.coeffs[0] = BigRational::from_integer(BigInt::from(m));
        out
    }

    pub fn from_rational(r: u64, c: &BigRational) -> Result<Self> {
        let mut out = Self::zero(r);
        if !rat_is_r_integral(c, r) {
            return Err(Error::DenominatorHitsModulus(c.to_string(), r));
        }
        out.coeffs[0] = c.clone();
        Ok(out)
    }

    /// ζ^e for an integer exponent: (1+x)^{e mod r}.
    pub fn zeta_int(r: u64, e: i64) -> Self {
        let m = e.rem_euclid(r as i64) as u64;
        // Pascal row binom(m, j), degree m ≤ r−1.
        let mut row = vec![BigRational::one()];
        for j in 1..=m {
            let next = &row[j as usize - 1]
                * BigRational::new(BigInt::from(m - j + 1), BigInt::from(j));
            row.push(next);
        }
        Self::from_poly(r, row)
    }

    /// ζ^{a^∨} where a^∨ is the image of a rational with r-coprime
    /// denominator in Z/rZ (the exponent-lifting used throughout the
    /// Gauss-sum formulas).
    pub fn zeta_power(r: u64, a: &BigRational) -> Result<Self> {
        assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
        let e = rat_mod_r(a, r)?;
        Ok(Self::zeta_int(r, e as i64))
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Canonical coefficients c_0..c_{r−2} of Σ c_j x^j.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Multiplies by a rational scalar (denominator coprime to r).
    pub fn scaled(&self, c: &BigRational) -> Result<Self> {
        if !rat_is_r_integral(c, self.r) {
            return Err(Error::DenominatorHitsModulus(c.to_string(), self.r));
        }
        Ok(CycloNumber { r: self.r, coeffs: self.coeffs.iter().map(|k| k * c).collect() })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.r);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// One exact division by x in the quotient ring, in place. Returns
    /// false (leaving the vector untouched) when the element is a unit,
    /// i.e. its constant term is not divisible by r.
    ///
    /// Uses r = Ψ(x) − x·h(x) ≡ −x·h(x): writing u = r·c′ + x·g gives
    /// u/x = g − c′·h.
    fn div_by_x_in_place(coeffs: &mut [BigRational], r: u64, h: &[BigRational]) -> bool {
        let c0 = coeffs[0].clone();
        if c0.is_zero() {
            coeffs.rotate_left(1);
            let m = coeffs.len();
            coeffs[m - 1] = BigRational::zero();
            return true;
        }
        if !rat_divisible_by_r(&c0, r) {
            return false;
        }
        let cprime = c0 / BigRational::from_integer(BigInt::from(r));
        coeffs.rotate_left(1);
        let m = coeffs.len();
        coeffs[m - 1] = BigRational::zero();
        for (k, hk) in h.iter().enumerate() {
            let delta = &cprime * hk;
            coeffs[k] -= delta;
        }
        true
    }

    /// The (ζ−1)-adic valuation; `None` is the infinity marker for zero.
    /// Always finite and ≥ 0 on nonzero elements because coefficients
    /// live in Z_(r).
    pub fn xi_valuation(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let h = h_coeffs(self.r);
        let mut v = self.coeffs.clone();
        let mut val = 0u64;
        while Self::div_by_x_in_place(&mut v, self.r, &h) {
            val += 1;
        }
        Some(val)
    }

    /// Exact division by x^k; errors when the valuation is below k.
    pub fn xi_shift(&self, k: u64) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let h = h_coeffs(self.r);
        let mut v = self.coeffs.clone();
        for step in 0..k {
            if !Self::div_by_x_in_place(&mut v, self.r, &h) {
                return Err(Error::ValuationDeficit { num: step, den: k });
            }
        }
        Ok(CycloNumber { r: self.r, coeffs: v })
    }

    /// Inverse of a unit (valuation 0), by extended gcd with Ψ over Q.
    pub fn invert(&self) -> Result<Self> {
        match self.xi_valuation() {
            None => Err(Error::DivisionByZero),
            Some(v) if v > 0 => Err(Error::NotAUnit(v)),
            Some(_) => {
                let psi: Vec<BigRational> =
                    psi_coeffs(self.r).into_iter().map(BigRational::from_integer).collect();
                let (mut r0, mut r1) = (psi, poly_trimmed(&self.coeffs));
                let (mut t0, mut t1) = (vec![], vec![BigRational::one()]);
                while !r1.is_empty() {
                    let (q, rem) = poly_divmod(&r0, &r1);
                    let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
                    r0 = r1;
                    r1 = rem;
                    t0 = t1;
                    t1 = t2;
                }
                // r0 is a nonzero constant (Ψ is irreducible over Q).
                debug_assert_eq!(r0.len(), 1);
                let c = r0[0].clone();
                let inv_coeffs: Vec<BigRational> = t0.iter().map(|t| t / &c).collect();
                let out = Self::new(self.r, inv_coeffs)?;
                debug_assert!((&out * self).is_one());
                Ok(out)
            }
        }
    }

    /// Exact division u/v in the valuation ring: defined whenever
    /// val(u) ≥ val(v); shifts both by val(v), then multiplies by the
    /// unit inverse.
    pub fn exact_div(&self, v: &CycloNumber) -> Result<Self> {
        assert_eq!(self.r, v.r, "cyclotomic modulus mismatch");
        if v.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let val_u = self.xi_valuation().expect("nonzero");
        let val_v = v.xi_valuation().expect("nonzero");
        if val_u < val_v {
            return Err(Error::ValuationDeficit { num: val_u, den: val_v });
        }
        let num = self.xi_shift(val_v)?;
        let den = v.xi_shift(val_v)?;
        Ok(&num * &den.invert()?)
    }

    /// The residue map p_r: the canonical coefficients c_0..c_{r̄}
    /// reduced mod r. Multiples of Ψ have all kept coefficients ≡ 0
    /// (Ψ ≡ x^{r−1} mod r with r−1 > r̄), so this is well defined on
    /// the quotient ring.
    pub fn reduce_p_r(&self, n: usize) -> Result<ResidueSeries> {
        let rbar = rbar_for(self.r, n)?;
        let coeffs = self.coeffs[..=rbar]
            .iter()
            .map(|c| rat_mod_r(c, self.r))
            .collect::<Result<Vec<u64>>>()?;
        Ok(ResidueSeries { r: self.r, n, rbar, coeffs })
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        assert_eq!(self.r, rhs.r, "cyclotomic modulus mismatch");
        CycloNumber {
            r: self.r,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        assert_eq!(self.r, rhs.r, "cyclotomic modulus mismatch");
        CycloNumber {
            r: self.r,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { r: self.r, coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        assert_eq!(self.r, rhs.r, "cyclotomic modulus mismatch");
        let m = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * m - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        CycloNumber::from_poly(self.r, prod)
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CycloNumber", 2)?;
        st.serialize_field("r", &self.r)?;
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &strs)?;
        st.end()
    }
}

/// Image of p_r: a polynomial of degree ≤ r̄ = (r−1−n(n−1))/2 over Z/rZ.
/// This is the currency both sides of the main congruence are reduced to.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ResidueSeries {
    r: u64,
    #[serde(skip)]
    n: usize,
    rbar: usize,
    coeffs: Vec<u64>,
}

impl ResidueSeries {
    pub(crate) fn from_raw(r: u64, n: usize, coeffs: Vec<u64>) -> Self {
        let rbar = coeffs.len() - 1;
        debug_assert_eq!(rbar_for(r, n).ok(), Some(rbar));
        debug_assert!(coeffs.iter().all(|&c| c < r));
        ResidueSeries { r, n, rbar, coeffs }
    }

    pub fn one(r: u64, n: usize) -> Result<Self> {
        let rbar = rbar_for(r, n)?;
        let mut coeffs = vec![0; rbar + 1];
        coeffs[0] = 1;
        Ok(ResidueSeries { r, n, rbar, coeffs })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rbar(&self) -> usize {
        self.rbar
    }

    /// Coefficients in [0, r), constant term first; length r̄+1.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add(&self, other: &ResidueSeries) -> ResidueSeries {
        assert_eq!((self.r, self.rbar), (other.r, other.rbar), "residue series mismatch");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % self.r).collect();
        ResidueSeries { r: self.r, n: self.n, rbar: self.rbar, coeffs }
    }

    /// Truncated convolution mod r.
    pub fn mul(&self, other: &ResidueSeries) -> ResidueSeries {
        assert_eq!((self.r, self.rbar), (other.r, other.rbar), "residue series mismatch");
        let mut coeffs = vec![0u64; self.rbar + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.rbar {
                    break;
                }
                coeffs[i + j] = (coeffs[i + j] + (a * b) % self.r) % self.r;
            }
        }
        ResidueSeries { r: self.r, n: self.n, rbar: self.rbar, coeffs }
    }
}

impl fmt::Display for ResidueSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if *c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if *c == 1 => write!(f, "x^{k}")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (mod {}, deg <= {})", self.r, self.rbar)
    }
}

/// Dense cyclic integer combination Σ c_k ζ^k, k ∈ Z/rZ: the working
/// currency of the brute-force lattice sums. Every summand there is an
/// integer times a root of unity, so sums accumulate as length-r integer
/// vectors and convert to the canonical x-basis once at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZetaPoly {
    r: u64,
    c: Vec<BigInt>,
}

impl ZetaPoly {
    pub(crate) fn zero(r: u64) -> Self {
        ZetaPoly { r, c: vec![BigInt::zero(); r as usize] }
    }

    pub(crate) fn one(r: u64) -> Self {
        Self::zeta(r, 0)
    }

    pub(crate) fn zeta(r: u64, e: i64) -> Self {
        let mut out = Self::zero(r);
        out.c[e.rem_euclid(r as i64) as usize] = BigInt::one();
        out
    }

    pub(crate) fn add_term(&mut self, e: i64, a: &BigInt) {
        let k = e.rem_euclid(self.r as i64) as usize;
        self.c[k] += a;
    }

    pub(crate) fn add_assign(&mut self, other: &ZetaPoly) {
        debug_assert_eq!(self.r, other.r);
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            *a += b;
        }
    }

    /// Multiplication by the sparse factor (1 − ζ^e).
    pub(crate) fn mul_one_minus_zeta(&self, e: i64) -> ZetaPoly {
        let r = self.r as i64;
        let mut out = self.clone();
        for k in 0..self.r as i64 {
            let src = (k - e).rem_euclid(r) as usize;
            out.c[k as usize] -= &self.c[src];
        }
        out
    }

    /// Rotation by ζ^e.
    pub(crate) fn mul_zeta(&self, e: i64) -> ZetaPoly {
        let r = self.r as i64;
        let mut out = Self::zero(self.r);
        for k in 0..r {
            out.c[((k + e).rem_euclid(r)) as usize] = self.c[k as usize].clone();
        }
        out
    }

    /// Full cyclic convolution.
    pub(crate) fn mul(&self, other: &ZetaPoly) -> ZetaPoly {
        debug_assert_eq!(self.r, other.r);
        let r = self.r as usize;
        let mut out = Self::zero(self.r);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % r;
                out.c[k] += a * b;
            }
        }
        out
    }

    /// Σ c_k ζ^k = Σ c_k (1+x)^k, expanded through one shared Pascal
    /// triangle and reduced once.
    pub(crate) fn to_cyclo(&self) -> CycloNumber {
        let r = self.r as usize;
        let mut out = vec![BigInt::zero(); r];
        let mut row = vec![BigInt::one()];
        for k in 0..r {
            if !self.c[k].is_zero() {
                for (j, b) in row.iter().enumerate() {
                    out[j] += &self.c[k] * b;
                }
            }
            let mut next = vec![BigInt::one(); k + 2];
            for j in 1..=k {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        CycloNumber::from_poly(self.r, out.into_iter().map(BigRational::from_integer).collect())
    }
}

fn poly_trimmed(p: &[BigRational]) -> Vec<BigRational> {
    let mut v = p.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trimmed(&out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trimmed(&out)
}

/// Quotient and remainder of dense rational polynomials; b nonzero.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = poly_trimmed(b);
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = poly_trimmed(a);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![BigRational::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while rem.len() >= b.len() {
        let d = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        q[d] = c.clone();
        for (k, bk) in b.iter().enumerate() {
            let delta = &c * bk;
            rem[d + k] -= delta;
        }
        // the top coefficient cancelled exactly
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    (q, rem)
}
