//! Truncated formal power series in x with exact rational coefficients:
//! the carrier of the perturbative invariant. Arithmetic truncates to the
//! smaller operand order and never silently extends it; the Z_(r)
//! denominator discipline is enforced only at reduction time
//! ([`TruncSeries::series_p_r`]), because the mod-r image is the only
//! consumer.

use num::{BigInt, BigRational, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::rat_mod_r;
use crate::cyclotomic::{rbar_for, ResidueSeries};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// Σ c_ℓ x^ℓ, ℓ ≤ order, with exact rational c_ℓ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    /// Keeps coefficients up to x^order, truncating or zero-padding.
    pub fn new(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, &BigRational::one())
    }

    pub fn constant(order: usize, c: &BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.clone();
        s
    }

    pub fn from_integer(order: usize, m: i64) -> Self {
        Self::constant(order, &BigRational::from_integer(BigInt::from(m)))
    }

    /// c·x^k.
    pub fn monomial(order: usize, k: usize, c: &BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c.clone();
        }
        s
    }

    /// (1+x)^c = Σ binom(c, ℓ) x^ℓ for any rational exponent c.
    pub fn binomial_series(c: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = BigRational::one();
        coeffs.push(acc.clone());
        for l in 1..=order {
            let l_rat = BigRational::from_integer(BigInt::from(l as i64));
            acc = acc * (c - (&l_rat - BigRational::one())) / l_rat;
            coeffs.push(acc.clone());
        }
        TruncSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest ℓ with c_ℓ ≠ 0, or None for the zero series.
    pub fn x_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncation cannot extend the order");
        TruncSeries { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|k| k * c).collect() }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let c0_inv = BigRational::one() / &self.coeffs[0];
        let mut out = vec![BigRational::zero(); self.order + 1];
        out[0] = c0_inv.clone();
        for k in 1..=self.order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &c0_inv;
        }
        Ok(TruncSeries { order: self.order, coeffs: out })
    }

    /// Exact division by x^k, shrinking the order by k; errors if any
    /// coefficient below x^k is nonzero.
    pub fn divide_by_x_pow(&self, k: usize) -> Result<Self> {
        assert!(k <= self.order, "shift exceeds the series order");
        if let Some(index) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::NotDivisibleByX { shift: k, index });
        }
        Ok(TruncSeries { order: self.order - k, coeffs: self.coeffs[k..].to_vec() })
    }

    /// The series-level reduction: coefficients c_0..c_{r̄} mod r.
    /// Denominators hitting r surface as errors here; that is where the
    /// Q[[x]]-denominator discipline is checked.
    pub fn series_p_r(&self, r: u64, n: usize) -> Result<ResidueSeries> {
        let rbar = rbar_for(r, n)?;
        if self.order < rbar {
            return Err(Error::OrderBelowRbar { order: self.order, rbar });
        }
        let coeffs = self.coeffs[..=rbar]
            .iter()
            .map(|c| rat_mod_r(c, r))
            .collect::<Result<Vec<u64>>>()?;
        Ok(ResidueSeries::from_raw(r, n, coeffs))
    }
}

/// Π_{α∈Φ₊} (1 − (1+x)^{−scale·(ρ|α)}): the series form of the Weyl
/// denominator evaluated at cρ. For scale = ±1 its x-order is exactly
/// n(n−1)/2, one power per positive root.
pub fn psi_series(rs: &RootSystem, scale: &BigRational, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for alpha in rs.positive_roots() {
        let pairing = BigRational::from_integer(BigInt::from(rs.root_pairing(rs.rho(), alpha)));
        let exponent = -(scale * pairing);
        let factor = &TruncSeries::one(order) - &TruncSeries::binomial_series(&exponent, order);
        acc = &acc * &factor;
    }
    acc
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let coeffs =
            (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        TruncSeries { order, coeffs }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let coeffs =
            (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        TruncSeries { order, coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncSeries { order, coeffs }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num::Signed;
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
        write!(f, " + O(x^{})", self.order + 1)
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TruncSeries", 2)?;
        st.serialize_field("order", &self.order)?;
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &strs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(TruncSeries::binomial_series(&rat(0, 1), 3), TruncSeries::one(3));
        let geo = TruncSeries::binomial_series(&rat(-1, 1), 3);
        assert_eq!(geo.coeffs(), &[rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)]);
        let sqrt_inv = TruncSeries::binomial_series(&rat(-1, 2), 2);
        assert_eq!(sqrt_inv.coeffs(), &[rat(1, 1), rat(-1, 2), rat(3, 8)]);
        let one_plus_x = TruncSeries::binomial_series(&rat(1, 1), 4);
        assert_eq!(one_plus_x, TruncSeries::new(4, vec![rat(1, 1), rat(1, 1)]));
        // integer exponent gives a polynomial
        let cube = TruncSeries::binomial_series(&rat(3, 1), 5);
        assert_eq!(cube.coeffs(), &[rat(1, 1), rat(3, 1), rat(3, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn arithmetic_truncates_to_min_order() {
        let a = TruncSeries::binomial_series(&rat(2, 1), 5);
        let b = TruncSeries::binomial_series(&rat(-1, 1), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        let prod = &a * &b;
        // (1+x)²·(1+x)^{−1} = 1+x
        assert_eq!(prod.coeffs(), &[rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn inversion() {
        let s = TruncSeries::binomial_series(&rat(1, 1), 4);
        let inv = s.invert().unwrap();
        assert_eq!(inv.coeffs(), &[rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1), rat(1, 1)]);
        assert!((&s * &inv) == TruncSeries::one(4));
        assert_eq!(TruncSeries::zero(3).invert(), Err(Error::NonUnitSeries));
        assert_eq!(TruncSeries::monomial(3, 1, &rat(1, 1)).invert(), Err(Error::NonUnitSeries));
    }

    #[test]
    fn x_division() {
        let s = TruncSeries::new(4, vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)]);
        let q = s.divide_by_x_pow(2).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.coeffs(), &[rat(1, 1), rat(1, 1), rat(0, 1)]);
        assert_eq!(s.divide_by_x_pow(0).unwrap(), s);
        assert!(matches!(
            s.divide_by_x_pow(3),
            Err(Error::NotDivisibleByX { shift: 3, index: 2 })
        ));
    }

    #[test]
    fn psi_series_examples() {
        let rs = RootSystem::new(2).unwrap();
        // scale −1: 1 − (1+x)^{1} = −x
        let m = psi_series(&rs, &rat(-1, 1), 4);
        assert_eq!(m.coeffs(), &[rat(0, 1), rat(-1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        // scale 1/2: 1 − (1+x)^{−1/2} = x/2 − 3x²/8 + …
        let h = psi_series(&rs, &rat(1, 2), 2);
        assert_eq!(h.coeffs(), &[rat(0, 1), rat(1, 2), rat(-3, 8)]);
        // scale 0 kills every factor
        assert!(psi_series(&rs, &rat(0, 1), 3).is_zero());
        // scale 1 at n=2: x − x² + x³ − …
        let p = psi_series(&rs, &rat(1, 1), 3);
        assert_eq!(p.coeffs(), &[rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn psi_series_leading_term() {
        // x-order n(n−1)/2 with leading coefficient sn^{n(n−1)/2}·Π(ρ|α)
        for n in 2..=3usize {
            let rs = RootSystem::new(n).unwrap();
            let d = n * (n - 1) / 2;
            let prod: i64 = rs
                .positive_roots()
                .iter()
                .map(|a| rs.root_pairing(rs.rho(), a))
                .product();
            for sn in [1i64, -1] {
                let s = psi_series(&rs, &rat(sn, 1), d + 2);
                assert_eq!(s.x_order(), Some(d));
                let expect = rat(sn.pow(d as u32) * prod, 1);
                assert_eq!(s.coeff(d), &expect);
            }
        }
    }

    #[test]
    fn p_r_reduction() {
        let one = TruncSeries::one(3).series_p_r(7, 2).unwrap();
        assert_eq!(one.coeffs(), &[1, 0, 0]);
        let all = TruncSeries::new(5, vec![rat(1, 1); 6]).series_p_r(7, 2).unwrap();
        assert_eq!(all.coeffs(), &[1, 1, 1]);
        // denominator divisible by r is rejected at a kept index
        let bad = TruncSeries::new(3, vec![rat(1, 1), rat(1, 7)]);
        assert!(matches!(bad.series_p_r(7, 2), Err(Error::DenominatorHitsModulus(_, 7))));
        // ... but tolerated beyond r̄
        let tail = TruncSeries::new(4, vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(1, 7)]);
        assert!(tail.series_p_r(7, 2).is_ok());
        assert!(matches!(
            TruncSeries::one(1).series_p_r(7, 2),
            Err(Error::OrderBelowRbar { order: 1, rbar: 2 })
        ));
    }

    #[test]
    fn serialization_shape() {
        let s = TruncSeries::new(2, vec![rat(-1, 2), rat(0, 1), rat(5, 1)]);
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["order"], 2);
        assert_eq!(json["coeffs"][0], "-1/2");
        assert_eq!(json["coeffs"][2], "5");
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec((-12i64..12, 1i64..5), order + 1).prop_map(move |v| {
            TruncSeries::new(order, v.into_iter().map(|(p, q)| rat(p, q)).collect())
        })
    }

    proptest! {
        #[test]
        fn exponent_law(p1 in -9i64..9, q1 in 1i64..5, p2 in -9i64..9, q2 in 1i64..5) {
            let (a, b) = (rat(p1, q1), rat(p2, q2));
            let lhs = &TruncSeries::binomial_series(&a, 6) * &TruncSeries::binomial_series(&b, 6);
            let rhs = TruncSeries::binomial_series(&(&a + &b), 6);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ring_axioms(s in arb_series(5), t in arb_series(5), u in arb_series(5)) {
            prop_assert_eq!(&s * &t, &t * &s);
            prop_assert_eq!(&(&s * &t) * &u, &s * &(&t * &u));
            prop_assert_eq!(&s * &(&t + &u), &(&s * &t) + &(&s * &u));
            prop_assert_eq!(&s * &TruncSeries::zero(5), TruncSeries::zero(5));
        }

        #[test]
        fn inversion_roundtrip(s in arb_series(5)) {
            if !s.coeff(0).is_zero() {
                let inv = s.invert().unwrap();
                prop_assert_eq!(&s * &inv, TruncSeries::one(5));
                prop_assert_eq!(inv.invert().unwrap(), s);
            }
        }

        #[test]
        fn p_r_multiplicative(s in arb_series(4), t in arb_series(4)) {
            let (r, n) = (11u64, 2usize);
            let ok = |w: &TruncSeries| w.coeffs().iter().all(|c| crate::arith::rat_is_r_integral(c, r));
            if ok(&s) && ok(&t) {
                let ps = s.series_p_r(r, n).unwrap();
                let pt = t.series_p_r(r, n).unwrap();
                prop_assert_eq!((&s * &t).series_p_r(r, n).unwrap(), ps.mul(&pt));
                prop_assert_eq!((&s + &t).series_p_r(r, n).unwrap(), ps.add(&pt));
            }
        }
    }
}
