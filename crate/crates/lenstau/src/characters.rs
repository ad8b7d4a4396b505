//! Character values at ζ: the product form of the Weyl denominator
//! ψ(μ;ζ) = Π_{α>0}(1 − ζ^{−(μ|α)}), its alternating-sum expansion, the
//! unknot colorings J(μ) = ζ^{(μ−ρ|ρ)}·ψ(μ)/ψ(ρ) and their framed
//! companions Q(μ,b) = ζ^{b(|μ|²−|ρ|²)/2 + 2(μ−ρ|ρ)}·ψ(μ)²/ψ(ρ)², and
//! the affine Weyl symmetry Q inherits on the enumeration box at b = 0.

use num::{BigInt, BigRational};

use crate::arith::mod_reduce;
use crate::cyclotomic::{CycloNumber, ZetaPoly};
use crate::error::{Error, Result};
use crate::gauss::legendre_symbol;
use crate::root_system::{AffineWeylElement, RootSystem, Weight, DEFAULT_ENUM_CAP};
use crate::CheckResult;

/// Character evaluations for one (sl_n, r) pair. Caches ψ(ρ;ζ) and the
/// inverses of its unit parts so box sweeps divide by a single cached
/// multiplication instead of re-running the extended gcd per point.
pub struct CharacterContext {
    rs: RootSystem,
    r: u64,
    cap: u64,
    psi_rho: CycloNumber,
    /// x^{−d}·ψ(ρ;ζ) inverted, d = n(n−1)/2: ψ(ρ) is x^d times a unit.
    psi_rho_unit_inv: CycloNumber,
    /// Inverse of the unit part of ψ(ρ;ζ)².
    psi_rho_sq_unit_inv: CycloNumber,
}

impl CharacterContext {
    /// Requires r an odd prime exceeding n.
    pub fn new(rs: RootSystem, r: u64) -> Result<Self> {
        if !crate::arith::is_odd_prime(r) || r <= rs.n() as u64 {
            return Err(Error::BadModulus { r, n: rs.n() });
        }
        let d = rs.positive_roots().len() as u64;
        let psi_rho = psi_product(&rs, rs.rho(), r).to_cyclo();
        debug_assert_eq!(psi_rho.xi_valuation(), Some(d));
        let unit = psi_rho.xi_shift(d)?;
        let psi_rho_unit_inv = unit.invert()?;
        let psi_rho_sq_unit_inv = (&unit * &unit).invert()?;
        Ok(CharacterContext { rs, r, cap: DEFAULT_ENUM_CAP, psi_rho, psi_rho_unit_inv, psi_rho_sq_unit_inv })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Bound on brute-force enumeration sizes (default 10^6 points).
    pub fn set_cap(&mut self, cap: u64) {
        self.cap = cap;
    }

    /// ψ(ρ;ζ), the denominator shared by every character value.
    pub fn psi_rho(&self) -> &CycloNumber {
        &self.psi_rho
    }

    /// Number of positive roots d = n(n−1)/2, the valuation of ψ(ρ;ζ).
    pub fn half_root_count(&self) -> u64 {
        self.rs.positive_roots().len() as u64
    }

    /// ψ(μ;ζ) = Π_{α>0}(1 − ζ^{−(μ|α)}).
    pub fn psi_at_root(&self, mu: &Weight) -> CycloNumber {
        self.psi_zeta(mu).to_cyclo()
    }

    pub(crate) fn psi_zeta(&self, mu: &Weight) -> ZetaPoly {
        psi_product(&self.rs, mu, self.r)
    }

    /// Exact division by ψ(ρ;ζ) through the cached unit inverse.
    pub(crate) fn div_psi_rho(&self, u: &CycloNumber) -> Result<CycloNumber> {
        if u.is_zero() {
            return Ok(CycloNumber::zero(self.r));
        }
        Ok(&u.xi_shift(self.half_root_count())? * &self.psi_rho_unit_inv)
    }

    /// Exact division by ψ(ρ;ζ)².
    pub(crate) fn div_psi_rho_sq(&self, u: &CycloNumber) -> Result<CycloNumber> {
        if u.is_zero() {
            return Ok(CycloNumber::zero(self.r));
        }
        Ok(&u.xi_shift(2 * self.half_root_count())? * &self.psi_rho_sq_unit_inv)
    }

    /// ψ(μ;ζ) recomputed as the alternating Weyl sum
    /// Σ_w sn(w)·ζ^{(μ|w(ρ)−ρ)}, compared with the product form.
    pub fn weyl_denominator_check(&self, mu: &Weight) -> CheckResult<CycloNumber> {
        let mut acc = ZetaPoly::zero(self.r);
        for w in self.rs.weyl_group() {
            let delta = &self.rs.weyl_act(&w, self.rs.rho()) - self.rs.rho();
            let pairing = self.rs.inner_product(mu, &delta);
            debug_assert!(pairing.is_integer(), "w(ρ)−ρ must pair integrally");
            let e = crate::arith::rat_mod_r(&pairing, self.r).expect("integral pairing") as i64;
            acc.add_term(e, &BigInt::from(w.sign()));
        }
        CheckResult::of(self.psi_at_root(mu), acc.to_cyclo())
    }

    /// J(μ) = ζ^{(μ−ρ|ρ)}·ψ(μ;ζ)/ψ(ρ;ζ): the unknot colored by μ,
    /// normalized so J(ρ) = 1. Defined wherever the framing exponent is
    /// an integer, i.e. on the weights pairing integrally with ρ; the
    /// formula is Weyl-antisymmetric, so it extends the dominant values
    /// by J(w(μ)) = sn(w)·J(μ) and vanishes on chamber walls.
    pub fn unknot_j(&self, mu: &Weight) -> Result<CycloNumber> {
        let e = self.rs.inner_product(&(mu - self.rs.rho()), self.rs.rho());
        if !e.is_integer() {
            return Err(Error::NonIntegralExponent(e.to_string()));
        }
        let e = crate::arith::rat_mod_r(&e, self.r)? as i64;
        let num = self.psi_zeta(mu).mul_zeta(e).to_cyclo();
        self.div_psi_rho(&num)
    }

    /// J extended from the dominant chamber by antisymmetry: reduce μ to
    /// its dominant representative, keep the sign, send walls to zero.
    /// Agrees with [`Self::unknot_j`] everywhere both are defined.
    pub fn unknot_j_extended(&self, mu: &Weight) -> Result<CycloNumber> {
        match self.rs.reduce_to_dominant(mu) {
            None => Ok(CycloNumber::zero(self.r)),
            Some((w, dom)) => {
                let j = self.unknot_j(&dom)?;
                Ok(if w.sign() < 0 { -&j } else { j })
            }
        }
    }

    /// Q(μ,b) = ζ^{b(|μ|²−|ρ|²)/2}·ζ^{2(μ−ρ|ρ)}·ψ(μ;ζ)²/ψ(ρ;ζ)²:
    /// the b-framed unknot correlator, the summand of the surgery sums.
    /// Requires μ ∈ ρ + Λ^root so both exponents are integers.
    pub fn unknot_q(&self, mu: &Weight, b: i64) -> Result<CycloNumber> {
        let beta = mu - self.rs.rho();
        if !self.rs.in_root_lattice(&beta) {
            return Err(Error::CosetViolation);
        }
        let half = BigRational::from_integer(BigInt::from(2));
        let framing = BigRational::from_integer(BigInt::from(b))
            * (self.rs.inner_product(mu, mu) - self.rs.rho_norm_sq())
            / half;
        if !framing.is_integer() {
            return Err(Error::NonIntegralExponent(framing.to_string()));
        }
        let twist = self.rs.inner_product(&beta, self.rs.rho());
        debug_assert!(twist.is_integer());
        let e = crate::arith::rat_mod_r(&framing, self.r)? as i64
            + 2 * crate::arith::rat_mod_r(&twist, self.r)? as i64;
        let psi = self.psi_zeta(mu);
        let num = psi.mul(&psi).mul_zeta(e).to_cyclo();
        self.div_psi_rho_sq(&num)
    }

    /// Whether μ lies on an affine alcove wall: some positive root
    /// pairing vanishes mod r, which forces ψ(μ;ζ) = 0.
    pub fn on_affine_wall(&self, mu: &Weight) -> bool {
        self.rs
            .positive_roots()
            .iter()
            .any(|alpha| mod_reduce(self.rs.root_pairing(mu, alpha), self.r) == 0)
    }

    /// Q(·,0) is invariant under the affine Weyl action on the box.
    pub fn affine_symmetry_check(
        &self,
        mu: &Weight,
        w: &AffineWeylElement,
        b: i64,
    ) -> Result<CheckResult<CycloNumber>> {
        if b != 0 {
            return Err(Error::NonZeroFraming(b));
        }
        let moved = self.rs.affine_act(w, mu, self.r);
        Ok(CheckResult::of(self.unknot_q(&moved, 0)?, self.unknot_q(mu, 0)?))
    }

    /// ψ(c·ρ;ζ) for an integer scale c; the scaled-ρ values appear in
    /// every closed surgery formula.
    pub fn psi_at_scaled_rho(&self, c: i64) -> CycloNumber {
        self.psi_at_root(&self.rs.rho().scaled(c))
    }

    /// Legendre symbol shortcut with this context's modulus.
    pub fn legendre(&self, b: i64) -> Result<i64> {
        legendre_symbol(b, self.r)
    }
}

/// Product form of ψ over the positive roots, in the cyclic basis.
fn psi_product(rs: &RootSystem, mu: &Weight, r: u64) -> ZetaPoly {
    let mut acc = ZetaPoly::one(r);
    for alpha in rs.positive_roots() {
        acc = acc.mul_one_minus_zeta(-rs.root_pairing(mu, alpha));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(n: usize, r: u64) -> CharacterContext {
        CharacterContext::new(RootSystem::new(n).unwrap(), r).unwrap()
    }

    fn zeta(r: u64, e: i64) -> CycloNumber {
        CycloNumber::zeta_int(r, e)
    }

    /// ρ + Σ k_i α_i from box indices.
    fn box_weight(rs: &RootSystem, k: &[i64]) -> Weight {
        let mut mu = rs.rho().clone();
        for (i, &ki) in k.iter().enumerate() {
            mu = &mu + &rs.simple_root(i).scaled(ki);
        }
        mu
    }

    #[test]
    fn psi_small_values() {
        // n=2: ψ(μ;ζ) = 1 − ζ^{−m} for μ = mλ₁
        let c = ctx(2, 5);
        let psi = c.psi_at_root(&Weight::new(vec![3]));
        let expect = &CycloNumber::one(5) - &zeta(5, -3);
        assert_eq!(psi, expect);
        assert_eq!(c.psi_rho().xi_valuation(), Some(1));
        // n=3: ψ(ρ;ζ) = (1−ζ⁻¹)²(1−ζ⁻²), valuation 3
        let c = ctx(3, 7);
        let f1 = &CycloNumber::one(7) - &zeta(7, -1);
        let f2 = &CycloNumber::one(7) - &zeta(7, -2);
        assert_eq!(c.psi_rho(), &(&(&f1 * &f1) * &f2));
        assert_eq!(c.psi_rho().xi_valuation(), Some(3));
    }

    #[test]
    fn psi_vanishes_on_walls() {
        let c = ctx(2, 5);
        // (μ|θ) = 5 ≡ 0: wall point
        let mu = Weight::new(vec![5]);
        assert!(c.on_affine_wall(&mu));
        assert!(c.psi_at_root(&mu).is_zero());
        assert!(!c.on_affine_wall(&Weight::new(vec![3])));
    }

    #[test]
    fn weyl_denominator_examples() {
        for (n, r) in [(2usize, 5u64), (2, 7), (3, 7), (4, 7)] {
            let c = ctx(n, r);
            assert!(c.weyl_denominator_check(c.root_system().rho()).pass);
            let skew = Weight::new((0..n - 1).map(|i| i as i64 + 2).collect());
            assert!(c.weyl_denominator_check(&skew).pass, "n = {n}, r = {r}");
        }
    }

    #[test]
    fn unknot_j_values() {
        let c = ctx(2, 5);
        assert!(c.unknot_j(c.root_system().rho()).unwrap().is_one());
        // J(3λ₁) = ζ·(1−ζ⁻³)/(1−ζ⁻¹) = ζ·(quantum integer [3])
        let j3 = c.unknot_j(&Weight::new(vec![3])).unwrap();
        let num = &zeta(5, 1) * &(&CycloNumber::one(5) - &zeta(5, -3));
        let den = &CycloNumber::one(5) - &zeta(5, -1);
        assert_eq!(j3, num.exact_div(&den).unwrap());
        // (μ|θ) ≡ 0 mod r kills the numerator
        assert!(c.unknot_j(&Weight::new(vec![5])).unwrap().is_zero());
        // non-integral exponent is reported, not rounded: for n=2,
        // (λ₁|ρ) = 1/2, so μ = 2λ₁ gives (μ−ρ|ρ) = 1/2
        assert!(matches!(
            c.unknot_j(&Weight::new(vec![2])),
            Err(Error::NonIntegralExponent(_))
        ));
    }

    #[test]
    fn unknot_j_antisymmetry() {
        let c = ctx(2, 7);
        for m in [-5i64, -3, -1, 1, 3, 5] {
            let mu = Weight::new(vec![m]);
            let direct = c.unknot_j(&mu).unwrap();
            let extended = c.unknot_j_extended(&mu).unwrap();
            assert_eq!(direct, extended, "m = {m}");
        }
        // wall: μ = 0 is fixed by the reflection, so the extension
        // sends it to zero ((μ−ρ|ρ) is half-integral there, so the
        // direct formula does not apply)
        assert!(c.unknot_j_extended(&Weight::new(vec![0])).unwrap().is_zero());
        // affine wall inside the coset: ψ(μ) = 0 makes J vanish
        assert!(c.unknot_j(&Weight::new(vec![7])).unwrap().is_zero());
    }

    #[test]
    fn unknot_q_example() {
        // n=2, r=5, b=0, μ = ρ + α₁ = 3λ₁:
        // Q = ζ²·(1−ζ⁻³)²/(1−ζ⁻¹)²
        let c = ctx(2, 5);
        let mu = Weight::new(vec![3]);
        let q = c.unknot_q(&mu, 0).unwrap();
        let num = &zeta(5, 2) * &(&CycloNumber::one(5) - &zeta(5, -3)).pow(2);
        let den = (&CycloNumber::one(5) - &zeta(5, -1)).pow(2);
        assert_eq!(q, num.exact_div(&den).unwrap());
        // coset guard: 2λ₁ is not in ρ + Λ^root for n=2
        assert!(matches!(c.unknot_q(&Weight::new(vec![2]), 0), Err(Error::CosetViolation)));
    }

    #[test]
    fn q_vanishes_on_alcove_boundary() {
        for (n, r) in [(2usize, 5u64), (3, 5), (3, 7)] {
            let c = ctx(n, r);
            let rs = c.root_system();
            let mut boundary = 0;
            for mu in rs.box_points(r).unwrap() {
                if c.on_affine_wall(&mu) {
                    boundary += 1;
                    assert!(c.unknot_q(&mu, 0).unwrap().is_zero());
                    assert!(c.unknot_q(&mu, 3).unwrap().is_zero());
                }
            }
            assert!(boundary > 0, "n = {n}, r = {r} has wall points in the box");
        }
    }

    #[test]
    fn affine_invariance_examples() {
        let c = ctx(2, 5);
        let rs = c.root_system();
        let mu = Weight::new(vec![3]);
        // pure translation by r·α₁
        let t = rs.affine_element(crate::root_system::WeylElement::identity(2), rs.simple_root(0)).unwrap();
        assert!(c.affine_symmetry_check(&mu, &t, 0).unwrap().pass);
        // reflection composed with translation
        let s = rs
            .affine_element(crate::root_system::WeylElement::simple_reflection(2, 0), rs.simple_root(0).scaled(-1))
            .unwrap();
        assert!(c.affine_symmetry_check(&mu, &s, 0).unwrap().pass);
        // nonzero framing is rejected
        assert!(matches!(
            c.affine_symmetry_check(&mu, &t, 2),
            Err(Error::NonZeroFraming(2))
        ));
    }

    #[test]
    fn modulus_guard() {
        assert!(matches!(
            CharacterContext::new(RootSystem::new(3).unwrap(), 3),
            Err(Error::BadModulus { r: 3, n: 3 })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn weyl_denominator_random(k in proptest::collection::vec(0i64..7, 2)) {
            let c = ctx(3, 7);
            let mu = box_weight(c.root_system(), &k);
            prop_assert!(c.weyl_denominator_check(&mu).pass);
        }

        #[test]
        fn j_extension_matches_direct(k in proptest::collection::vec(-4i64..4, 2)) {
            let c = ctx(3, 7);
            let rs = c.root_system();
            // μ = ρ + Σ k·(n·λ_i) stays in a coset with integral pairings
            let mut mu = rs.rho().clone();
            for (i, &ki) in k.iter().enumerate() {
                mu = &mu + &rs.simple_root(i).scaled(ki);
            }
            prop_assert_eq!(
                c.unknot_j(&mu).unwrap(),
                c.unknot_j_extended(&mu).unwrap()
            );
        }

        #[test]
        fn q_affine_invariance_random(
            k in proptest::collection::vec(0i64..5, 2),
            t in proptest::collection::vec(-2i64..2, 2),
            swap in 0usize..6,
        ) {
            let c = ctx(3, 5);
            let rs = c.root_system();
            let mu = box_weight(rs, &k);
            let finite = rs.weyl_group()[swap].clone();
            let translation = &rs.simple_root(0).scaled(t[0]) + &rs.simple_root(1).scaled(t[1]);
            let w = rs.affine_element(finite, translation).unwrap();
            prop_assert!(c.affine_symmetry_check(&mu, &w, 0).unwrap().pass);
        }
    }
}
