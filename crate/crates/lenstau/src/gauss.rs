//! Gauss sums over the root lattice of sl_n at an odd prime r: the
//! classical quadratic sum γ = Σ ζ^{k²}, its Legendre twists, the
//! multivariate sum weighted by the Cartan form on (Z/r)^{n−1}, and the
//! shifted-box sums G(b) = Σ ζ^{b(|μ|²−|ρ|²)/2} together with their
//! closed evaluations (n/r)·[(b/r)(2/r)γ]^{n−1}·ζ^{(−b|ρ|²/2)^∨}.

use num::{BigInt, BigRational, One};

use crate::arith::{is_odd_prime, mod_pow, mod_reduce};
use crate::cyclotomic::{CycloNumber, ZetaPoly};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight, DEFAULT_ENUM_CAP};
use crate::CheckResult;

/// Legendre symbol (b/r) ∈ {±1} by Euler's criterion.
pub fn legendre_symbol(b: i64, r: u64) -> Result<i64> {
    assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
    let bm = mod_reduce(b, r);
    if bm == 0 {
        return Err(Error::FramingDivisibleByR(b));
    }
    Ok(if mod_pow(bm, (r - 1) / 2, r) == 1 { 1 } else { -1 })
}

/// γ = Σ_{k=0}^{r−1} ζ^{k²}, satisfying γ² = (−1)^{(r−1)/2}·r.
pub fn quadratic_gauss(r: u64) -> CycloNumber {
    assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
    let mut acc = ZetaPoly::zero(r);
    for k in 0..r {
        acc.add_term(((k * k) % r) as i64, &BigInt::one());
    }
    acc.to_cyclo()
}

/// Σ_{k=0}^{r−1} ζ^{bk²}, computed literally; equals (b/r)·γ.
pub fn twisted_quadratic_gauss(r: u64, b: i64) -> Result<CycloNumber> {
    assert!(is_odd_prime(r), "modulus {r} is not an odd prime");
    if mod_reduce(b, r) == 0 {
        return Err(Error::FramingDivisibleByR(b));
    }
    let mut acc = ZetaPoly::zero(r);
    for k in 0..r {
        let e = (b as i128 * (k * k) as i128).rem_euclid(r as i128) as i64;
        acc.add_term(e, &BigInt::one());
    }
    Ok(acc.to_cyclo())
}

/// ζ-exponent of the box point μ = ρ + Σ k_i α_i under framing b:
/// b·(|μ|²−|ρ|²)/2 = b·(kᵗAk/2 + Σk_i), reduced mod r. Surfaces a
/// half-integer ever escaping the even quadratic form as an error
/// instead of silently rounding.
pub(crate) fn box_exponent(cartan: &[Vec<i64>], k: &[i64], b: i64, r: u64) -> Result<i64> {
    let mut quad: i128 = 0;
    for (i, row) in cartan.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            quad += (*a * k[i] * k[j]) as i128;
        }
    }
    let lin: i128 = k.iter().map(|&x| x as i128).sum();
    let num = quad + 2 * lin;
    if num % 2 != 0 {
        return Err(Error::NonIntegralExponent(format!("{num}/2")));
    }
    Ok((b as i128 * (num / 2)).rem_euclid(r as i128) as i64)
}

/// Visits every k with k_i ∈ [lo_i, lo_i + r); lo = 0 is the standard
/// box ρ + Σ k_i α_i, other lo give its root-lattice translates.
pub(crate) fn sweep_shifted_box(
    rank: usize,
    r: u64,
    lo: &[i64],
    cap: u64,
    mut f: impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    let size = (r as u128).pow(rank as u32);
    if size > cap as u128 {
        return Err(Error::EnumerationCap { size, cap });
    }
    let mut k: Vec<i64> = lo.to_vec();
    loop {
        f(&k)?;
        let mut i = 0;
        loop {
            if i == rank {
                return Ok(());
            }
            k[i] += 1;
            if k[i] < lo[i] + r as i64 {
                break;
            }
            k[i] = lo[i];
            i += 1;
        }
    }
}

/// Gauss sums attached to one (sl_n, r) pair; caches γ.
pub struct GaussContext {
    rs: RootSystem,
    r: u64,
    cap: u64,
    gamma: CycloNumber,
}

impl GaussContext {
    /// Requires r an odd prime exceeding n.
    pub fn new(rs: RootSystem, r: u64) -> Result<Self> {
        if !is_odd_prime(r) || r <= rs.n() as u64 {
            return Err(Error::BadModulus { r, n: rs.n() });
        }
        let gamma = quadratic_gauss(r);
        Ok(GaussContext { rs, r, cap: DEFAULT_ENUM_CAP, gamma })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn gamma(&self) -> &CycloNumber {
        &self.gamma
    }

    /// Bound on brute-force enumeration sizes (default 10^6 points).
    pub fn set_cap(&mut self, cap: u64) {
        self.cap = cap;
    }

    fn require_coprime(&self, b: i64) -> Result<()> {
        if mod_reduce(b, self.r) == 0 {
            return Err(Error::FramingDivisibleByR(b));
        }
        Ok(())
    }

    /// Integral α-coordinates of a root-lattice weight.
    fn lattice_coords(&self, beta: &Weight) -> Result<Vec<i64>> {
        if !self.rs.in_root_lattice(beta) {
            return Err(Error::RootLatticeViolation);
        }
        Ok(self
            .rs
            .alpha_coords(beta)
            .iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                i64::try_from(c.to_integer()).expect("small lattice coordinate")
            })
            .collect())
    }

    /// G(b) = Σ_{μ ∈ box} ζ^{b(|μ|²−|ρ|²)/2}, summed point by point.
    pub fn root_gauss_brute(&self, b: i64) -> Result<CycloNumber> {
        self.require_coprime(b)?;
        self.shifted_gauss_brute(b, &vec![0; self.rs.rank()])
    }

    /// The same sum over the translated box μ ∈ β + box, β ∈ Λ^root.
    pub fn root_gauss_translated(&self, b: i64, beta: &Weight) -> Result<CycloNumber> {
        self.require_coprime(b)?;
        self.shifted_gauss_brute(b, &self.lattice_coords(beta)?)
    }

    fn shifted_gauss_brute(&self, b: i64, lo: &[i64]) -> Result<CycloNumber> {
        let mut acc = ZetaPoly::zero(self.r);
        let cartan = self.rs.cartan();
        sweep_shifted_box(self.rs.rank(), self.r, lo, self.cap, |k| {
            let e = box_exponent(cartan, k, b, self.r)?;
            acc.add_term(e, &BigInt::one());
            Ok(())
        })?;
        Ok(acc.to_cyclo())
    }

    /// Translating the box by a root-lattice vector leaves G(b) fixed.
    pub fn translation_check(&self, b: i64, beta: &Weight) -> Result<CheckResult<CycloNumber>> {
        let shifted = self.root_gauss_translated(b, beta)?;
        let straight = self.root_gauss_brute(b)?;
        Ok(CheckResult::of(shifted, straight))
    }

    /// Closed form (n/r)·[(b/r)(2/r)γ]^{n−1}·ζ^{(−b|ρ|²/2)^∨}.
    pub fn root_gauss_closed(&self, b: i64) -> Result<CycloNumber> {
        self.require_coprime(b)?;
        let n = self.rs.n();
        let twist = legendre_symbol(b, self.r)? * legendre_symbol(2, self.r)?;
        let mut sign = legendre_symbol(n as i64, self.r)?;
        if (n - 1) % 2 == 1 {
            sign *= twist;
        }
        let gpow = self.gamma.pow((n - 1) as u64);
        let exponent = BigRational::from_integer(BigInt::from(-b)) * self.rs.rho_norm_sq()
            / BigRational::from_integer(BigInt::from(2));
        let phase = CycloNumber::zeta_power(self.r, &exponent)?;
        let unsigned = &gpow * &phase;
        Ok(if sign < 0 { -&unsigned } else { unsigned })
    }

    /// Σ_{k ∈ (Z/r)^{n−1}} ζ^{b·kᵗAk/2}: the bare quadratic-form sum,
    /// without the ρ-shift; equals (n/r)·[(b/r)(2/r)γ]^{n−1}.
    pub fn multivar_gauss_brute(&self, b: i64) -> Result<CycloNumber> {
        self.require_coprime(b)?;
        let mut acc = ZetaPoly::zero(self.r);
        let cartan = self.rs.cartan();
        let r = self.r;
        sweep_shifted_box(self.rs.rank(), r, &vec![0; self.rs.rank()], self.cap, |k| {
            let mut quad: i128 = 0;
            for (i, row) in cartan.iter().enumerate() {
                for (j, a) in row.iter().enumerate() {
                    quad += (*a * k[i] * k[j]) as i128;
                }
            }
            debug_assert_eq!(quad % 2, 0);
            let e = (b as i128 * (quad / 2)).rem_euclid(r as i128) as i64;
            acc.add_term(e, &BigInt::one());
            Ok(())
        })?;
        Ok(acc.to_cyclo())
    }

    /// Completing the square: Σ_box ζ^{b(|μ|²−|ρ|²)/2}·ζ^{(μ|β)} =
    /// ζ^{(−|β|²/2b)^∨}·G(b) for β in the root lattice.
    pub fn complete_square_check(&self, b: i64, beta: &Weight) -> Result<CheckResult<CycloNumber>> {
        self.require_coprime(b)?;
        self.lattice_coords(beta)?;
        let rho_beta = self.rs.inner_product(self.rs.rho(), beta);
        debug_assert!(rho_beta.is_integer());
        let rho_beta = i64::try_from(rho_beta.to_integer()).expect("small pairing");
        // λ-coordinates of β are the pairings (α_i|β)
        let pairings = beta.coords().to_vec();
        let r = self.r;
        let cartan = self.rs.cartan();
        let mut acc = ZetaPoly::zero(r);
        sweep_shifted_box(self.rs.rank(), r, &vec![0; self.rs.rank()], self.cap, |k| {
            let base = box_exponent(cartan, k, b, r)?;
            let mut pair: i128 = rho_beta as i128;
            for (ki, ci) in k.iter().zip(&pairings) {
                pair += (*ki as i128) * (*ci as i128);
            }
            let e = (base as i128 + pair).rem_euclid(r as i128) as i64;
            acc.add_term(e, &BigInt::one());
            Ok(())
        })?;
        let lhs = acc.to_cyclo();
        let beta_sq = self.rs.inner_product(beta, beta);
        let exponent = -beta_sq
            / (BigRational::from_integer(BigInt::from(2)) * BigRational::from_integer(BigInt::from(b)));
        let phase = CycloNumber::zeta_power(self.r, &exponent)?;
        let rhs = &phase * &self.root_gauss_brute(b)?;
        Ok(CheckResult::of(lhs, rhs))
    }

    /// Ratio law feeding the lens-space closed form:
    /// G(b)/G(sn b) = (|b|/r)^{n−1}·ζ^{((sn(b)−b)|ρ|²/2)^∨}.
    pub fn gauss_ratio_check(&self, b: i64) -> Result<CheckResult<CycloNumber>> {
        self.require_coprime(b)?;
        let sn = b.signum();
        let lhs = self.root_gauss_closed(b)?.exact_div(&self.root_gauss_closed(sn)?)?;
        let n = self.rs.n();
        let mut sign = 1i64;
        if (n - 1) % 2 == 1 {
            sign = legendre_symbol(b.abs(), self.r)?;
        }
        let exponent = BigRational::from_integer(BigInt::from(sn - b)) * self.rs.rho_norm_sq()
            / BigRational::from_integer(BigInt::from(2));
        let phase = CycloNumber::zeta_power(self.r, &exponent)?;
        let rhs = if sign < 0 { -&phase } else { phase };
        Ok(CheckResult::of(lhs, rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta_sum(r: u64, terms: &[(i64, i64)]) -> CycloNumber {
        // Σ c·ζ^e from (c, e) pairs
        let mut acc = CycloNumber::zero(r);
        for &(c, e) in terms {
            acc = &acc
                + &CycloNumber::zeta_int(r, e)
                    .scaled(&BigRational::from_integer(BigInt::from(c)))
                    .unwrap();
        }
        acc
    }

    fn ctx(n: usize, r: u64) -> GaussContext {
        GaussContext::new(RootSystem::new(n).unwrap(), r).unwrap()
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(2, 5).unwrap(), -1);
        assert_eq!(legendre_symbol(4, 5).unwrap(), 1);
        assert_eq!(legendre_symbol(2, 7).unwrap(), 1);
        assert_eq!(legendre_symbol(-1, 5).unwrap(), 1);
        assert_eq!(legendre_symbol(-1, 7).unwrap(), -1);
        assert!(matches!(legendre_symbol(10, 5), Err(Error::FramingDivisibleByR(10))));
    }

    #[test]
    fn quadratic_gauss_values() {
        // r=5: 1 + 2ζ + 2ζ⁴
        let gamma = quadratic_gauss(5);
        assert_eq!(gamma, zeta_sum(5, &[(1, 0), (2, 1), (2, 4)]));
        assert_eq!(gamma.xi_valuation(), Some(2));
        // γ² = (−1)^{(r−1)/2}·r
        for r in [5u64, 7, 11, 13, 17, 19] {
            let gamma = quadratic_gauss(r);
            let sign = if ((r - 1) / 2) % 2 == 0 { 1 } else { -1 };
            let expect = CycloNumber::from_integer(r, sign * r as i64);
            assert_eq!(&gamma * &gamma, expect, "r = {r}");
            assert_eq!(gamma.xi_valuation(), Some((r - 1) / 2));
        }
    }

    #[test]
    fn twisted_gauss_is_legendre_multiple() {
        for r in [5u64, 7, 11] {
            let gamma = quadratic_gauss(r);
            for b in 1..r as i64 {
                let tw = twisted_quadratic_gauss(r, b).unwrap();
                let expect = if legendre_symbol(b, r).unwrap() == 1 { gamma.clone() } else { -&gamma };
                assert_eq!(tw, expect, "r = {r}, b = {b}");
            }
        }
        assert!(twisted_quadratic_gauss(5, 5).is_err());
    }

    #[test]
    fn root_gauss_small_example() {
        // n=2, r=5, b=1: Σ_{k<5} ζ^{k²+k} = 2 + ζ + 2ζ², which is γ·ζ
        let g = ctx(2, 5).root_gauss_brute(1).unwrap();
        assert_eq!(g, zeta_sum(5, &[(2, 0), (1, 1), (2, 2)]));
        let gamma_zeta = &quadratic_gauss(5) * &CycloNumber::zeta_int(5, 1);
        assert_eq!(g, gamma_zeta);
    }

    #[test]
    fn closed_matches_brute() {
        for n in [2usize, 3] {
            for r in [5u64, 7] {
                if r <= n as u64 {
                    continue;
                }
                let ctx = ctx(n, r);
                for b in [-3i64, -1, 1, 2, 3, r as i64 - 1] {
                    if b % r as i64 == 0 {
                        continue;
                    }
                    let brute = ctx.root_gauss_brute(b).unwrap();
                    let closed = ctx.root_gauss_closed(b).unwrap();
                    assert_eq!(brute, closed, "n = {n}, r = {r}, b = {b}");
                    let expect_val = (n as u64 - 1) * (r - 1) / 2;
                    assert_eq!(brute.xi_valuation(), Some(expect_val));
                }
            }
        }
    }

    #[test]
    fn closed_is_periodic_in_b() {
        let ctx = ctx(2, 7);
        assert_eq!(ctx.root_gauss_closed(2).unwrap(), ctx.root_gauss_closed(9).unwrap());
        assert_eq!(ctx.root_gauss_closed(-3).unwrap(), ctx.root_gauss_closed(4).unwrap());
    }

    #[test]
    fn multivar_gauss() {
        // n=3, r=5, b=1: the A₂ form sum collapses to −5
        let g = ctx(3, 5).multivar_gauss_brute(1).unwrap();
        assert_eq!(g, CycloNumber::from_integer(5, -5));
        // ρ-shifted and bare sums differ by ζ^{(−b|ρ|²/2)^∨}
        for (n, r) in [(2usize, 5u64), (2, 7), (3, 5), (3, 7)] {
            let ctx = ctx(n, r);
            for b in [1i64, 2, -1] {
                let bare = ctx.multivar_gauss_brute(b).unwrap();
                let exponent = BigRational::from_integer(BigInt::from(-b)) * ctx.root_system().rho_norm_sq()
                    / BigRational::from_integer(BigInt::from(2));
                let phase = CycloNumber::zeta_power(r, &exponent).unwrap();
                assert_eq!(
                    ctx.root_gauss_brute(b).unwrap(),
                    &bare * &phase,
                    "n = {n}, r = {r}, b = {b}"
                );
            }
        }
    }

    #[test]
    fn completing_the_square() {
        let c2 = ctx(2, 5);
        let beta = Weight::new(vec![0]);
        assert!(c2.complete_square_check(1, &beta).unwrap().pass);
        // β = α₁ has λ-coordinates (2)
        let alpha = c2.root_system().simple_root(0);
        assert!(c2.complete_square_check(1, &alpha).unwrap().pass);
        let c3 = ctx(3, 7);
        // β = α₁ + α₂ has λ-coordinates (1, 1)
        let theta = Weight::new(c3.root_system().highest_root());
        assert!(c3.complete_square_check(3, &theta).unwrap().pass);
        // λ₁ is not in the root lattice for n = 3
        let lambda1 = Weight::new(vec![1, 0]);
        assert!(matches!(
            c3.complete_square_check(1, &lambda1),
            Err(Error::RootLatticeViolation)
        ));
    }

    #[test]
    fn box_translation_invariance() {
        let c2 = ctx(2, 5);
        let alpha = c2.root_system().simple_root(0);
        assert!(c2.translation_check(2, &alpha).unwrap().pass);
        let c3 = ctx(3, 7);
        let beta = &c3.root_system().simple_root(0).scaled(2) - &c3.root_system().simple_root(1);
        assert!(c3.translation_check(-3, &beta).unwrap().pass);
    }

    #[test]
    fn ratio_law() {
        for (n, r) in [(2usize, 5u64), (2, 7), (3, 7), (3, 11)] {
            let ctx = ctx(n, r);
            for b in [2i64, 3, -2, -3, 4] {
                if b % r as i64 == 0 {
                    continue;
                }
                assert!(ctx.gauss_ratio_check(b).unwrap().pass, "n = {n}, r = {r}, b = {b}");
            }
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(
            GaussContext::new(RootSystem::new(3).unwrap(), 3),
            Err(Error::BadModulus { r: 3, n: 3 })
        ));
        assert!(matches!(
            GaussContext::new(RootSystem::new(2).unwrap(), 9),
            Err(Error::BadModulus { r: 9, n: 2 })
        ));
        let mut c = ctx(3, 11);
        assert!(matches!(c.root_gauss_brute(11), Err(Error::FramingDivisibleByR(11))));
        c.set_cap(100);
        assert!(matches!(
            c.root_gauss_brute(1),
            Err(Error::EnumerationCap { size: 121, cap: 100 })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn closed_matches_brute_random_framing(b in -12i64..12) {
            prop_assume!(b % 7 != 0);
            let ctx = ctx(2, 7);
            prop_assert_eq!(
                ctx.root_gauss_brute(b).unwrap(),
                ctx.root_gauss_closed(b).unwrap()
            );
        }

        #[test]
        fn translation_invariance_random_beta(c0 in -3i64..3, c1 in -3i64..3, b in 1i64..5) {
            let ctx = ctx(3, 5);
            let beta = &ctx.root_system().simple_root(0).scaled(c0)
                + &ctx.root_system().simple_root(1).scaled(c1);
            prop_assert!(ctx.translation_check(b, &beta).unwrap().pass);
            prop_assert!(ctx.complete_square_check(b, &beta).unwrap().pass);
        }
    }
}
