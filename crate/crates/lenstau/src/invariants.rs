//! Surgery invariants of lens spaces and their connected sums: the
//! framed-unknot values F_{U_b} (brute box sums, alcove collapses, and
//! Gauss-sum closed forms), the quantum invariant τ_r as a product of
//! F-ratios, the perturbative series τ in x = ζ−1, the bracket
//! transform Γ_b that mirrors box sums of η-monomials into series, and
//! the residue congruence p_r(τ) = p_r(τ_r).

use num::{BigInt, BigRational, One};
use serde::Serialize;

use crate::arith::{binom_int, factorial, mod_inv, mod_reduce};
use crate::characters::CharacterContext;
use crate::cyclotomic::{rbar_for, CycloNumber, ZetaPoly};
use crate::error::{Error, Result};
use crate::gauss::{box_exponent, legendre_symbol, sweep_shifted_box, GaussContext};
use crate::root_system::{RootSystem, Weight};
use crate::series::{psi_series, TruncSeries};

/// Surgery on a chain of unknots with the given nonzero framings. The
/// resulting manifold is the connected sum of the lens spaces L(b_j, 1),
/// with |H₁| = Π|b_j|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurgeryPresentation {
    framings: Vec<i64>,
}

impl SurgeryPresentation {
    pub fn new(framings: Vec<i64>) -> Result<Self> {
        if framings.iter().any(|&b| b == 0) {
            return Err(Error::ZeroFraming);
        }
        Ok(SurgeryPresentation { framings })
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    /// Order of the first homology group, Π|b_j|.
    pub fn h1_order(&self) -> u64 {
        self.framings.iter().map(|&b| b.unsigned_abs()).product()
    }

    /// Signature counts of the (diagonal) linking matrix.
    pub fn sigma_plus(&self) -> usize {
        self.framings.iter().filter(|&&b| b > 0).count()
    }

    pub fn sigma_minus(&self) -> usize {
        self.framings.iter().filter(|&&b| b < 0).count()
    }

    pub fn is_lens(&self) -> bool {
        self.framings.len() == 1
    }
}

impl std::fmt::Display for SurgeryPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "surgery(")?;
        for (i, b) in self.framings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Exponent vector a of the observable η^a(μ) = Π_i (1−ζ^{−(α_i|μ)})^{a_i}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaMonomial {
    a: Vec<u32>,
}

impl EtaMonomial {
    pub fn new(a: Vec<u32>) -> Self {
        EtaMonomial { a }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.a
    }

    pub fn total(&self) -> u32 {
        self.a.iter().sum()
    }
}

/// The x-order that Γ_b(η^a) is guaranteed to reach:
/// ⌊(n(n−1) + |a| + 1)/2⌋.
pub fn gamma_order_bound(n: usize, a_total: u32) -> usize {
    (n * (n - 1) + a_total as usize + 1) / 2
}

/// Everything needed to evaluate surgery invariants for one (sl_n, r)
/// pair: character data with cached ψ(ρ;ζ)-inverses plus Gauss sums.
pub struct InvariantContext {
    chars: CharacterContext,
    gauss: GaussContext,
    /// Inverse of the unit part of ψ(−ρ;ζ), for the closed forms.
    psi_rho_neg_unit_inv: CycloNumber,
}

impl InvariantContext {
    /// Requires 2 ≤ n ≤ 6 and r an odd prime exceeding n.
    pub fn new(n: usize, r: u64) -> Result<Self> {
        let chars = CharacterContext::new(RootSystem::new(n)?, r)?;
        let gauss = GaussContext::new(RootSystem::new(n)?, r)?;
        let psi_rho_neg = chars.psi_at_scaled_rho(-1);
        let d = chars.half_root_count();
        let psi_rho_neg_unit_inv = psi_rho_neg.xi_shift(d)?.invert()?;
        Ok(InvariantContext { chars, gauss, psi_rho_neg_unit_inv })
    }

    pub fn characters(&self) -> &CharacterContext {
        &self.chars
    }

    pub fn gauss(&self) -> &GaussContext {
        &self.gauss
    }

    pub fn root_system(&self) -> &RootSystem {
        self.chars.root_system()
    }

    pub fn n(&self) -> usize {
        self.root_system().n()
    }

    pub fn r(&self) -> u64 {
        self.chars.r()
    }

    /// Bound on brute-force enumeration sizes (default 10^6 points).
    pub fn set_cap(&mut self, cap: u64) {
        self.chars.set_cap(cap);
        self.gauss.set_cap(cap);
    }

    fn require_coprime(&self, b: i64) -> Result<()> {
        if mod_reduce(b, self.r()) == 0 {
            return Err(Error::FramingDivisibleByR(b));
        }
        Ok(())
    }

    /// λ-coordinates 1 + A·k of the box point indexed by k.
    fn box_coords(&self, k: &[i64]) -> Vec<i64> {
        let cartan = self.root_system().cartan();
        (0..k.len())
            .map(|i| 1 + cartan[i].iter().zip(k).map(|(a, ki)| a * ki).sum::<i64>())
            .collect()
    }

    /// ψ(μ;ζ)² rotated into the summand of F, as a cyclic polynomial.
    fn q_numerator(&self, k: &[i64], b: i64) -> Result<ZetaPoly> {
        let r = self.r();
        let rs = self.root_system();
        let base = box_exponent(rs.cartan(), k, b, r)?;
        let twist: i64 = 2 * k.iter().sum::<i64>();
        let mu = Weight::new(self.box_coords(k));
        let psi = self.chars.psi_zeta(&mu);
        Ok(psi.mul(&psi).mul_zeta(base + twist))
    }

    /// F_{U_b} = Σ_{μ ∈ box} Q(μ,b), summed literally: the numerators
    /// accumulate in the cyclic basis and ψ(ρ;ζ)² is divided out once.
    /// Any integer framing is admissible here, including 0.
    pub fn f_unknot_brute(&self, b: i64) -> Result<CycloNumber> {
        let r = self.r();
        let rank = self.root_system().rank();
        let mut acc = ZetaPoly::zero(r);
        sweep_shifted_box(rank, r, &vec![0; rank], self.chars.cap(), |k| {
            acc.add_assign(&self.q_numerator(k, b)?);
            Ok(())
        })?;
        self.chars.div_psi_rho_sq(&acc.to_cyclo())
    }

    /// Closed form n!·G(b)·ψ(b*ρ;ζ)/(ψ(ρ;ζ)·ψ(−ρ;ζ)), with bb* ≡ 1
    /// mod r. At b = ±1 this collapses to n!·G(±1)/ψ(∓ρ;ζ).
    pub fn f_unknot_closed(&self, b: i64) -> Result<CycloNumber> {
        self.require_coprime(b)?;
        let r = self.r();
        let b_star = mod_inv(mod_reduce(b, r), r) as i64;
        let g = self.gauss.root_gauss_closed(b)?;
        let num = &g * &self.chars.psi_at_scaled_rho(b_star);
        let num = num.scaled(&BigRational::from_integer(factorial(self.n() as u64)))?;
        let num = self.chars.div_psi_rho(&num)?;
        self.div_psi_rho_neg(&num)
    }

    fn div_psi_rho_neg(&self, u: &CycloNumber) -> Result<CycloNumber> {
        if u.is_zero() {
            return Ok(CycloNumber::zero(self.r()));
        }
        Ok(&u.xi_shift(self.chars.half_root_count())? * &self.psi_rho_neg_unit_inv)
    }

    /// The same sum collapsed to the dominant alcove by the affine Weyl
    /// symmetry: F = n!·F_alcove.
    pub fn f_alcove(&self, b: i64) -> Result<CycloNumber> {
        let mut acc = ZetaPoly::zero(self.r());
        for mu in self.root_system().alcove_points(self.r()) {
            let beta = &mu - self.root_system().rho();
            let coords = self.root_system().alpha_coords(&beta);
            let k: Vec<i64> = coords
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    i64::try_from(c.to_integer()).expect("small alcove coordinate")
                })
                .collect();
            acc.add_assign(&self.q_numerator(&k, b)?);
        }
        self.chars.div_psi_rho_sq(&acc.to_cyclo())
    }

    /// τ_r of the surgered manifold: Π_j F_{U_{b_j}}/F_{U_{sn(b_j)}}.
    /// Requires r > n(n−1) (so the residue map downstream exists) and
    /// r ∤ b_j for every framing.
    pub fn tau_r_surgery(&self, pres: &SurgeryPresentation) -> Result<CycloNumber> {
        rbar_for(self.r(), self.n())?;
        let mut tau = CycloNumber::one(self.r());
        for &b in pres.framings() {
            self.require_coprime(b)?;
            let factor = self.f_unknot_closed(b)?.exact_div(&self.f_unknot_closed(b.signum())?)?;
            tau = &tau * &factor;
        }
        Ok(tau)
    }

    /// τ_r of the lens space L(b,1) directly from the Gauss-sum ratio:
    /// (|b|/r)^{n−1}·ζ^{((sn(b)−b)|ρ|²/2)^∨}·ψ(b*ρ;ζ)/ψ(sn(b)·ρ;ζ).
    pub fn tau_r_lens_closed(&self, b: i64) -> Result<CycloNumber> {
        if b == 0 {
            return Err(Error::ZeroFraming);
        }
        if b.unsigned_abs() >= self.r() {
            return Err(Error::FramingTooLarge(b, self.r()));
        }
        self.require_coprime(b)?;
        let r = self.r();
        let n = self.n();
        let sn = b.signum();
        let mut sign = 1i64;
        if (n - 1) % 2 == 1 {
            sign = legendre_symbol(b.abs(), r)?;
        }
        let exponent = BigRational::from_integer(BigInt::from(sn - b)) * self.root_system().rho_norm_sq()
            / BigRational::from_integer(BigInt::from(2));
        let phase = CycloNumber::zeta_power(r, &exponent)?;
        let b_star = mod_inv(mod_reduce(b, r), r) as i64;
        let num = &phase * &self.chars.psi_at_scaled_rho(b_star);
        let quotient = if sn > 0 { self.chars.div_psi_rho(&num)? } else { self.div_psi_rho_neg(&num)? };
        Ok(if sign < 0 { -&quotient } else { quotient })
    }

    /// η^a(μ) = Π_i (1 − ζ^{−(α_i|μ)})^{a_i}.
    pub fn eta_at_weight(&self, a: &EtaMonomial, mu: &Weight) -> CycloNumber {
        assert_eq!(a.exponents().len(), self.root_system().rank(), "monomial arity mismatch");
        self.eta_zeta(a, mu.coords()).to_cyclo()
    }

    fn eta_zeta(&self, a: &EtaMonomial, coords: &[i64]) -> ZetaPoly {
        let mut acc = ZetaPoly::one(self.r());
        for (ai, ci) in a.exponents().iter().zip(coords) {
            for _ in 0..*ai {
                acc = acc.mul_one_minus_zeta(-ci);
            }
        }
        acc
    }

    /// The bracket transform: the series in x whose p_r-residues match
    /// the normalized box sums g_b(η^a). Explicitly
    /// Γ_b(η^a) = [Σ_{0≤s≤a} (−1)^{|s|} binom(a,s)·(1+x)^{−|β_s|²/2b}]·y_b
    /// with β_s = Σ s_i α_i and
    /// y_b = (1/n!)·(|b|/r)^{n−1}·(1+x)^{(sn(b)−b)|ρ|²/2}·ψ(−sn(b)ρ;1+x).
    pub fn gamma_transform(&self, a: &EtaMonomial, b: i64, order: usize) -> Result<TruncSeries> {
        if b == 0 {
            return Err(Error::ZeroFraming);
        }
        self.require_coprime(b)?;
        let rs = self.root_system();
        assert_eq!(a.exponents().len(), rs.rank(), "monomial arity mismatch");
        let n = self.n();
        let sn = b.signum();

        // y_b
        let sign = if (n - 1) % 2 == 1 { legendre_symbol(b.abs(), self.r())? } else { 1 };
        let half = BigRational::from_integer(BigInt::from(2));
        let rho_exp = BigRational::from_integer(BigInt::from(sn - b)) * rs.rho_norm_sq() / &half;
        let mut y = TruncSeries::binomial_series(&rho_exp, order);
        y = &y * &psi_series(rs, &BigRational::from_integer(BigInt::from(-sn)), order);
        let scale = BigRational::new(BigInt::from(sign), factorial(n as u64));
        y = y.scaled(&scale);

        // alternating (1+x)-power sum over 0 ≤ s ≤ a
        let cartan = rs.cartan();
        let mut total = TruncSeries::zero(order);
        let mut s = vec![0u32; a.exponents().len()];
        loop {
            let parity: u32 = s.iter().sum();
            let mut weight = BigInt::one();
            for (si, ai) in s.iter().zip(a.exponents()) {
                weight *= binom_int(*ai as i64, *si);
            }
            if parity % 2 == 1 {
                weight = -weight;
            }
            let mut beta_sq: i64 = 0;
            for i in 0..s.len() {
                for j in 0..s.len() {
                    beta_sq += cartan[i][j] * s[i] as i64 * s[j] as i64;
                }
            }
            let exponent = BigRational::new(BigInt::from(-beta_sq), BigInt::from(2 * b));
            let term = TruncSeries::binomial_series(&exponent, order)
                .scaled(&BigRational::from_integer(weight));
            total = &total + &term;
            let mut i = 0;
            loop {
                if i == s.len() {
                    return Ok(&total * &y);
                }
                s[i] += 1;
                if s[i] <= a.exponents()[i] {
                    break;
                }
                s[i] = 0;
                i += 1;
            }
        }
    }

    /// g_b(η^a) = [Σ_{μ ∈ box} ζ^{b(|μ|²−|ρ|²)/2}·η^a(μ)] / F_{U_{sn(b)}}:
    /// the exact cyclotomic side of the bracket transform. A division
    /// failure here would falsify the divisibility theory, so it is
    /// surfaced as an error rather than truncated.
    pub fn g_b_bruteform(&self, a: &EtaMonomial, b: i64) -> Result<CycloNumber> {
        if b == 0 {
            return Err(Error::ZeroFraming);
        }
        self.require_coprime(b)?;
        let rs = self.root_system();
        assert_eq!(a.exponents().len(), rs.rank(), "monomial arity mismatch");
        let r = self.r();
        let rank = rs.rank();
        let mut acc = ZetaPoly::zero(r);
        sweep_shifted_box(rank, r, &vec![0; rank], self.chars.cap(), |k| {
            let e = box_exponent(rs.cartan(), k, b, r)?;
            let eta = self.eta_zeta(a, &self.box_coords(k));
            acc.add_assign(&eta.mul_zeta(e));
            Ok(())
        })?;
        acc.to_cyclo().exact_div(&self.f_unknot_closed(b.signum())?)
    }

    /// Σ_box ζ^{b(|μ|²−|ρ|²)/2}·Π_i binom((α_i|μ), a_i): the binomially
    /// weighted Gauss sum of the divisibility estimates.
    pub fn weighted_binomial_sum(&self, a: &EtaMonomial, b: i64) -> Result<CycloNumber> {
        self.require_coprime(b)?;
        let rs = self.root_system();
        assert_eq!(a.exponents().len(), rs.rank(), "monomial arity mismatch");
        let r = self.r();
        let rank = rs.rank();
        let mut acc = ZetaPoly::zero(r);
        sweep_shifted_box(rank, r, &vec![0; rank], self.chars.cap(), |k| {
            let e = box_exponent(rs.cartan(), k, b, r)?;
            let mut weight = BigInt::one();
            for (ci, ai) in self.box_coords(k).iter().zip(a.exponents()) {
                weight *= binom_int(*ci, *ai);
            }
            acc.add_term(e, &weight);
            Ok(())
        })?;
        Ok(acc.to_cyclo())
    }

    /// The perturbative invariant as a truncated series in x: one
    /// factor (|b|/r)^{n−1}·(1+x)^{((sn(b)−b)/2)|ρ|²}·ψ(ρ/b;1+x)/ψ(sn(b)ρ;1+x)
    /// per framing. Both ψ-series vanish to order n(n−1)/2, so the
    /// quotient is computed at an inflated order and shifted down.
    pub fn tau_series_surgery(&self, pres: &SurgeryPresentation, order: usize) -> Result<TruncSeries> {
        let rs = self.root_system();
        let n = self.n();
        let d = rs.positive_roots().len();
        let mut tau = TruncSeries::one(order);
        for &b in pres.framings() {
            self.require_coprime(b)?;
            let sn = b.signum();
            let sign = if (n - 1) % 2 == 1 { legendre_symbol(b.abs(), self.r())? } else { 1 };
            let half = BigRational::from_integer(BigInt::from(2));
            let rho_exp = BigRational::from_integer(BigInt::from(sn - b)) * rs.rho_norm_sq() / &half;
            let phase = TruncSeries::binomial_series(&rho_exp, order);
            let inv_b = BigRational::new(BigInt::one(), BigInt::from(b));
            let num = psi_series(rs, &inv_b, order + d).divide_by_x_pow(d)?;
            let den = psi_series(rs, &BigRational::from_integer(BigInt::from(sn)), order + d)
                .divide_by_x_pow(d)?
                .invert()?;
            let mut factor = &(&phase * &num) * &den;
            factor = factor.scaled(&BigRational::from_integer(BigInt::from(sign)));
            tau = &tau * &factor;
        }
        Ok(tau)
    }

    /// The congruence p_r(τ) = p_r(τ_r): reduces the exact invariant
    /// through the ∨-lift of 1/(x-unit denominators) and the series
    /// coefficient-wise, then compares through degree (r−1−n(n−1))/2.
    /// Requires r > n(n−1) and r ∤ |H₁|.
    pub fn congruence_check(&self, pres: &SurgeryPresentation) -> Result<CongruenceCheck> {
        let r = self.r();
        let n = self.n();
        let h1 = pres.h1_order();
        if h1 % r == 0 {
            return Err(Error::HomologyDivisibleByR { r, h1 });
        }
        let rbar = rbar_for(r, n)?;
        let lhs = self.tau_r_surgery(pres)?.reduce_p_r(n)?;
        let rhs = self.tau_series_surgery(pres, rbar)?.series_p_r(r, n)?;
        Ok(CongruenceCheck {
            n,
            r,
            framings: pres.framings().to_vec(),
            rbar,
            pass: lhs.coeffs() == rhs.coeffs(),
            lhs: lhs.coeffs().to_vec(),
            rhs: rhs.coeffs().to_vec(),
        })
    }
}

/// Result of one congruence comparison; serializes to the report row
/// {"n", "r", "framings", "rbar", "lhs", "rhs", "pass"}.
#[derive(Clone, Debug, Serialize)]
pub struct CongruenceCheck {
    pub n: usize,
    pub r: u64,
    pub framings: Vec<i64>,
    pub rbar: usize,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    pub pass: bool,
}

/// Constant term forced on the τ-series by the closed form:
/// (|H₁|/r)^{n−1}·|H₁|^{−n(n−1)/2}.
pub fn series_constant_term(n: usize, r: u64, pres: &SurgeryPresentation) -> Result<BigRational> {
    let h1 = pres.h1_order();
    let mut sign = 1i64;
    if (n - 1) % 2 == 1 {
        sign = legendre_symbol(h1 as i64, r)?;
    }
    let d = n * (n - 1) / 2;
    Ok(BigRational::new(BigInt::from(sign), BigInt::from(h1).pow(d as u32)))
}
