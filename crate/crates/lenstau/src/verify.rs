//! The audited check battery behind `lenstau verify`: each suite runs a
//! family of exact identities over a configured (n, r, framings) grid
//! with seeded sampling, and reports one record per check instance.
//! Reports are deterministic: the same config and seed serialize to
//! byte-identical JSON (wall-clock runtimes stay in memory only).

use std::collections::BTreeMap;
use std::time::Instant;

use num::{BigInt, BigRational, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::characters::CharacterContext;
use crate::cyclotomic::CycloNumber;
use crate::error::Error;
use crate::gauss::{quadratic_gauss, twisted_quadratic_gauss, GaussContext};
use crate::invariants::{
    gamma_order_bound, series_constant_term, EtaMonomial, InvariantContext, SurgeryPresentation,
};
use crate::number_theory::{
    alternating_binomial_sum, binom_column_sum_valuation, power_sum_check, BinomialPoly,
};
use crate::root_system::{RootSystem, Weight, DEFAULT_ENUM_CAP};
use crate::ValuationBound;

/// Which family of identities to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    Gauss,
    Characters,
    Invariants,
    Congruence,
    Divisibility,
    #[value(name = "numbertheory")]
    NumberTheory,
    Appendix,
    Symmetry,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Gauss => "gauss",
            Suite::Characters => "characters",
            Suite::Invariants => "invariants",
            Suite::Congruence => "congruence",
            Suite::Divisibility => "divisibility",
            Suite::NumberTheory => "numbertheory",
            Suite::Appendix => "appendix",
            Suite::Symmetry => "symmetry",
            Suite::All => "all",
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid and sampling parameters for one verification run. Empty grids
/// produce an empty (passing) report.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n_values: Vec<usize>,
    pub r_values: Vec<u64>,
    /// Framing lists for surgery presentations; the flattened set also
    /// serves as the pool of twisting integers b. Empty means the
    /// default pool {±1, ±2, ±3} and lens lists per pool entry.
    pub framings: Vec<Vec<i64>>,
    /// Extra x-order for series checks beyond each check's own floor.
    pub order: Option<usize>,
    pub seed: u64,
    /// Bound on brute-force enumeration sizes; breaches are recorded as
    /// skipped, not failed.
    pub cap: u64,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            n_values: Vec::new(),
            r_values: Vec::new(),
            framings: Vec::new(),
            order: None,
            seed: 0,
            cap: DEFAULT_ENUM_CAP,
        }
    }
}

fn serialize_u64_as_string<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn serialize_usize_as_string<S: Serializer>(v: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// One check instance. `lhs`/`rhs` hold what was compared (or counts
/// for sampled families), `valuations` any (ζ−1)-adic data involved;
/// all numeric payloads are decimal strings. A record is `skipped`
/// when a precondition or the enumeration cap rules the instance out;
/// skipped records never fail a run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub suite: &'static str,
    pub check: &'static str,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub skipped: bool,
    pub lhs: String,
    pub rhs: String,
    pub valuations: Vec<String>,
    /// Wall-clock duration; in-memory only so reports stay byte-stable.
    #[serde(skip)]
    pub runtime: std::time::Duration,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct VerificationSummary {
    #[serde(serialize_with = "serialize_usize_as_string")]
    pub total: usize,
    #[serde(serialize_with = "serialize_usize_as_string")]
    pub passed: usize,
    #[serde(serialize_with = "serialize_usize_as_string")]
    pub failed: usize,
    #[serde(serialize_with = "serialize_usize_as_string")]
    pub skipped: usize,
}

/// Full outcome of a [`run_suite`] call; serializes with `"schema": 1`
/// and records sorted by (suite, check, params).
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: &'static str,
    #[serde(serialize_with = "serialize_u64_as_string")]
    pub seed: u64,
    pub records: Vec<VerificationRecord>,
    pub summary: VerificationSummary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

/// Collects records while timing each one.
struct Recorder {
    records: Vec<VerificationRecord>,
}

/// What a single check instance produced.
struct Outcome {
    pass: bool,
    skipped: bool,
    lhs: String,
    rhs: String,
    valuations: Vec<String>,
}

impl Outcome {
    fn compared<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Self {
        Outcome {
            pass: lhs == rhs,
            skipped: false,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            valuations: Vec::new(),
        }
    }

    fn counted(passed: usize, total: usize) -> Self {
        Outcome {
            pass: passed == total,
            skipped: false,
            lhs: passed.to_string(),
            rhs: total.to_string(),
            valuations: Vec::new(),
        }
    }

    fn skipped(why: &Error) -> Self {
        Outcome {
            pass: true,
            skipped: true,
            lhs: why.to_string(),
            rhs: String::new(),
            valuations: Vec::new(),
        }
    }
}

impl Recorder {
    fn new() -> Self {
        Recorder { records: Vec::new() }
    }

    /// Runs one check instance; an `Err` becomes a skipped record, so
    /// out-of-precondition grid points never abort a whole suite.
    fn run(
        &mut self,
        suite: Suite,
        check: &'static str,
        params: BTreeMap<String, String>,
        f: impl FnOnce() -> crate::error::Result<Outcome>,
    ) {
        let start = Instant::now();
        let outcome = match f() {
            Ok(outcome) => outcome,
            Err(error) => Outcome::skipped(&error),
        };
        self.records.push(VerificationRecord {
            suite: suite.name(),
            check,
            params,
            pass: outcome.pass,
            skipped: outcome.skipped,
            lhs: outcome.lhs,
            rhs: outcome.rhs,
            valuations: outcome.valuations,
            runtime: start.elapsed(),
        });
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Seeds a sampler that is stable per (seed, check) pair, so adding or
/// reordering checks does not shift another check's samples.
fn rng_for(seed: u64, tag: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in tag.bytes() {
        h = (h ^ byte as u64).wrapping_mul(0x100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Twisting integers: the flattened framing lists, or a default pool.
fn framing_pool(cfg: &SuiteConfig) -> Vec<i64> {
    let mut pool: Vec<i64> = cfg.framings.iter().flatten().copied().collect();
    if pool.is_empty() {
        pool = vec![1, -1, 2, -2, 3, -3];
    }
    pool.dedup();
    pool
}

/// Surgery presentations: the configured lists, or lens spaces over the
/// default pool.
fn presentations(cfg: &SuiteConfig) -> Vec<Vec<i64>> {
    if cfg.framings.is_empty() {
        framing_pool(cfg).iter().map(|&b| vec![b]).collect()
    } else {
        cfg.framings.clone()
    }
}

fn random_root_lattice(rs: &RootSystem, rng: &mut ChaCha8Rng, spread: i64) -> Weight {
    let mut beta = Weight::zero(rs.rank());
    for i in 0..rs.rank() {
        let c = rng.gen_range(-spread..=spread);
        beta = &beta + &rs.simple_root(i).scaled(c);
    }
    beta
}

fn random_box_weight(rs: &RootSystem, r: u64, rng: &mut ChaCha8Rng) -> Weight {
    let mut mu = rs.rho().clone();
    for i in 0..rs.rank() {
        let k = rng.gen_range(0..r as i64);
        mu = &mu + &rs.simple_root(i).scaled(k);
    }
    mu
}

/// Runs the configured suite over its grid and returns the report.
pub fn run_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rec = Recorder::new();
    let suites: Vec<Suite> = match cfg.suite {
        Suite::All => vec![
            Suite::Gauss,
            Suite::Characters,
            Suite::Invariants,
            Suite::Congruence,
            Suite::Divisibility,
            Suite::NumberTheory,
            Suite::Appendix,
            Suite::Symmetry,
        ],
        s => vec![s],
    };
    for suite in suites {
        match suite {
            Suite::Gauss => run_gauss(cfg, &mut rec),
            Suite::Characters => run_characters(cfg, &mut rec),
            Suite::Invariants => run_invariants(cfg, &mut rec),
            Suite::Congruence => run_congruence(cfg, &mut rec),
            Suite::Divisibility => run_divisibility(cfg, &mut rec),
            Suite::NumberTheory => run_number_theory(cfg, &mut rec),
            Suite::Appendix => run_appendix(cfg, &mut rec),
            Suite::Symmetry => run_symmetry(cfg, &mut rec),
            Suite::All => unreachable!(),
        }
    }
    let mut records = rec.records;
    records.sort_by(|a, b| {
        (a.suite, a.check, &a.params).cmp(&(b.suite, b.check, &b.params))
    });
    let summary = VerificationSummary {
        total: records.len(),
        passed: records.iter().filter(|x| x.pass && !x.skipped).count(),
        failed: records.iter().filter(|x| !x.pass).count(),
        skipped: records.iter().filter(|x| x.skipped).count(),
    };
    VerificationReport {
        schema: 1,
        suite: cfg.suite.name(),
        seed: cfg.seed,
        records,
        summary,
    }
}

fn gauss_ctx(n: usize, r: u64, cap: u64) -> crate::error::Result<GaussContext> {
    let mut ctx = GaussContext::new(RootSystem::new(n)?, r)?;
    ctx.set_cap(cap);
    Ok(ctx)
}

fn char_ctx(n: usize, r: u64, cap: u64) -> crate::error::Result<CharacterContext> {
    let mut ctx = CharacterContext::new(RootSystem::new(n)?, r)?;
    ctx.set_cap(cap);
    Ok(ctx)
}

fn inv_ctx(n: usize, r: u64, cap: u64) -> crate::error::Result<InvariantContext> {
    let mut ctx = InvariantContext::new(n, r)?;
    ctx.set_cap(cap);
    Ok(ctx)
}

fn run_gauss(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Gauss;
    for &r in &cfg.r_values {
        let p = params(&[("r", r.to_string())]);
        rec.run(suite, "quadratic_gauss_square", p, || {
            let gamma = quadratic_gauss(r);
            let sign = if ((r - 1) / 2) % 2 == 0 { 1 } else { -1 };
            let expect = CycloNumber::from_integer(r, sign * r as i64);
            Ok(Outcome::compared(&(&gamma * &gamma), &expect))
        });
        for &b in &framing_pool(cfg) {
            let p = params(&[("b", b.to_string()), ("r", r.to_string())]);
            rec.run(suite, "twisted_quadratic_gauss", p, || {
                let tw = twisted_quadratic_gauss(r, b)?;
                let gamma = quadratic_gauss(r);
                let expect = if crate::gauss::legendre_symbol(b, r)? == 1 { gamma } else { -&gamma };
                Ok(Outcome::compared(&tw, &expect))
            });
        }
    }
    for &n in &cfg.n_values {
        for &r in &cfg.r_values {
            for &b in &framing_pool(cfg) {
                let p = params(&[
                    ("b", b.to_string()),
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                ]);
                rec.run(suite, "root_gauss_brute_vs_closed", p.clone(), || {
                    let ctx = gauss_ctx(n, r, cfg.cap)?;
                    let brute = ctx.root_gauss_brute(b)?;
                    let closed = ctx.root_gauss_closed(b)?;
                    let mut outcome = Outcome::compared(&brute, &closed);
                    outcome.valuations = brute
                        .xi_valuation()
                        .iter()
                        .map(|v| v.to_string())
                        .collect();
                    Ok(outcome)
                });
                rec.run(suite, "root_gauss_valuation", p.clone(), || {
                    let ctx = gauss_ctx(n, r, cfg.cap)?;
                    let g = ctx.root_gauss_brute(b)?;
                    let bound = ((n as i64 - 1) * (r as i64 - 1)) / 2;
                    let v = g.xi_valuation();
                    Ok(Outcome {
                        pass: v == Some(bound as u64),
                        skipped: false,
                        lhs: v.map_or_else(|| "infinity".into(), |x| x.to_string()),
                        rhs: bound.to_string(),
                        valuations: v.iter().map(|x| x.to_string()).collect(),
                    })
                });
                rec.run(suite, "gauss_ratio_law", p.clone(), || {
                    let ctx = gauss_ctx(n, r, cfg.cap)?;
                    let check = ctx.gauss_ratio_check(b)?;
                    Ok(Outcome::compared(&check.lhs, &check.rhs))
                });
                rec.run(suite, "box_translation_invariance", p.clone(), || {
                    let ctx = gauss_ctx(n, r, cfg.cap)?;
                    let mut rng = rng_for(cfg.seed, &format!("translation/{n}/{r}/{b}"));
                    let mut passed = 0;
                    let total = 20;
                    for _ in 0..total {
                        let beta = random_root_lattice(ctx.root_system(), &mut rng, 3);
                        if ctx.translation_check(b, &beta)?.pass {
                            passed += 1;
                        }
                    }
                    Ok(Outcome::counted(passed, total))
                });
                rec.run(suite, "completed_square", p, || {
                    let ctx = gauss_ctx(n, r, cfg.cap)?;
                    let mut rng = rng_for(cfg.seed, &format!("square/{n}/{r}/{b}"));
                    let mut passed = 0;
                    let total = 20;
                    for _ in 0..total {
                        let beta = random_root_lattice(ctx.root_system(), &mut rng, 3);
                        if ctx.complete_square_check(b, &beta)?.pass {
                            passed += 1;
                        }
                    }
                    Ok(Outcome::counted(passed, total))
                });
            }
            let p = params(&[("n", n.to_string()), ("r", r.to_string())]);
            rec.run(suite, "multivar_gauss_closed", p, || {
                let ctx = gauss_ctx(n, r, cfg.cap)?;
                let mut passed = 0;
                let pool = framing_pool(cfg);
                let total = pool.len();
                for &b in &pool {
                    // the bare quadratic sum carries no ρ-phase, so undo it
                    let exponent = BigRational::from_integer(BigInt::from(b))
                        * ctx.root_system().rho_norm_sq()
                        / BigRational::from_integer(BigInt::from(2));
                    let phase = CycloNumber::zeta_power(r, &exponent)?;
                    let closed = &ctx.root_gauss_closed(b)? * &phase;
                    if ctx.multivar_gauss_brute(b)? == closed {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
        }
    }
}

fn run_characters(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Characters;
    for &n in &cfg.n_values {
        for &r in &cfg.r_values {
            let p = params(&[("n", n.to_string()), ("r", r.to_string())]);
            rec.run(suite, "weyl_denominator", p.clone(), || {
                let ctx = char_ctx(n, r, cfg.cap)?;
                let mut rng = rng_for(cfg.seed, &format!("weyl/{n}/{r}"));
                let mut passed = 0;
                let total = 50;
                for _ in 0..total {
                    let mu = random_box_weight(ctx.root_system(), r, &mut rng);
                    if ctx.weyl_denominator_check(&mu).pass {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
            rec.run(suite, "unknot_normalization", p.clone(), || {
                let ctx = char_ctx(n, r, cfg.cap)?;
                let j = ctx.unknot_j(ctx.root_system().rho())?;
                Ok(Outcome::compared(&j, &CycloNumber::one(r)))
            });
            rec.run(suite, "unknot_antisymmetry", p.clone(), || {
                let ctx = char_ctx(n, r, cfg.cap)?;
                let mut rng = rng_for(cfg.seed, &format!("unknot/{n}/{r}"));
                let mut passed = 0;
                let total = 20;
                for _ in 0..total {
                    let mu = random_box_weight(ctx.root_system(), r, &mut rng);
                    if ctx.unknot_j(&mu)? == ctx.unknot_j_extended(&mu)? {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
            rec.run(suite, "alcove_boundary_vanishing", p, || {
                let ctx = char_ctx(n, r, cfg.cap)?;
                let mut passed = 0;
                let mut total = 0;
                for mu in ctx.root_system().box_points_capped(r, cfg.cap)? {
                    if ctx.on_affine_wall(&mu) {
                        total += 1;
                        if ctx.unknot_q(&mu, 0)?.is_zero() {
                            passed += 1;
                        }
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
        }
    }
}

fn run_symmetry(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Symmetry;
    for &n in &cfg.n_values {
        for &r in &cfg.r_values {
            let p = params(&[("n", n.to_string()), ("r", r.to_string())]);
            rec.run(suite, "affine_symmetry", p, || {
                let ctx = char_ctx(n, r, cfg.cap)?;
                let rs = ctx.root_system();
                let mut rng = rng_for(cfg.seed, &format!("affine/{n}/{r}"));
                let group = rs.weyl_group();
                let mut passed = 0;
                let total = 20;
                for _ in 0..total {
                    let mu = random_box_weight(rs, r, &mut rng);
                    let finite = group[rng.gen_range(0..group.len())].clone();
                    let translation = random_root_lattice(rs, &mut rng, 2);
                    let w = rs.affine_element(finite, translation)?;
                    if ctx.affine_symmetry_check(&mu, &w, 0)?.pass {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
        }
    }
}

fn run_invariants(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Invariants;
    for &n in &cfg.n_values {
        for &r in &cfg.r_values {
            for &b in &framing_pool(cfg) {
                let p = params(&[
                    ("b", b.to_string()),
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                ]);
                rec.run(suite, "f_unknot_brute_vs_closed", p.clone(), || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let brute = ctx.f_unknot_brute(b)?;
                    let closed = ctx.f_unknot_closed(b)?;
                    let mut outcome = Outcome::compared(&brute, &closed);
                    outcome.valuations =
                        brute.xi_valuation().iter().map(|v| v.to_string()).collect();
                    Ok(outcome)
                });
                rec.run(suite, "f_unknot_valuation", p.clone(), || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let f = ctx.f_unknot_brute(b)?;
                    let expect = ((n as i64 - 1) * (r as i64 - n as i64 - 1)) / 2;
                    let v = f.xi_valuation();
                    Ok(Outcome {
                        pass: v == Some(expect as u64),
                        skipped: false,
                        lhs: v.map_or_else(|| "infinity".into(), |x| x.to_string()),
                        rhs: expect.to_string(),
                        valuations: v.iter().map(|x| x.to_string()).collect(),
                    })
                });
                rec.run(suite, "f_factorial_alcove", p.clone(), || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let whole = ctx.f_unknot_brute(b)?;
                    let scale = BigRational::from_integer(crate::arith::factorial(n as u64));
                    let alcove = ctx.f_alcove(b)?.scaled(&scale)?;
                    Ok(Outcome::compared(&whole, &alcove))
                });
                rec.run(suite, "tau_lens_closed", p, || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let pres = SurgeryPresentation::new(vec![b])?;
                    let surgery = ctx.tau_r_surgery(&pres)?;
                    let closed = ctx.tau_r_lens_closed(b)?;
                    Ok(Outcome::compared(&surgery, &closed))
                });
            }
            let p = params(&[("n", n.to_string()), ("r", r.to_string())]);
            rec.run(suite, "tau_multiplicative", p, || {
                let ctx = inv_ctx(n, r, cfg.cap)?;
                let pool = framing_pool(cfg);
                let mut passed = 0;
                let mut total = 0;
                for pair in pool.windows(2) {
                    total += 1;
                    let joint = ctx.tau_r_surgery(&SurgeryPresentation::new(pair.to_vec())?)?;
                    let left = ctx.tau_r_surgery(&SurgeryPresentation::new(vec![pair[0]])?)?;
                    let right = ctx.tau_r_surgery(&SurgeryPresentation::new(vec![pair[1]])?)?;
                    if joint == &left * &right {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
        }
    }
}

fn run_congruence(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Congruence;
    for &n in &cfg.n_values {
        for &r in &cfg.r_values {
            for framings in presentations(cfg) {
                let p = params(&[
                    ("framings", format!("{framings:?}")),
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                ]);
                rec.run(suite, "tau_congruence", p, || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let pres = SurgeryPresentation::new(framings.clone())?;
                    let check = ctx.congruence_check(&pres)?;
                    Ok(Outcome {
                        pass: check.pass,
                        skipped: false,
                        lhs: format!("{:?}", check.lhs),
                        rhs: format!("{:?}", check.rhs),
                        valuations: Vec::new(),
                    })
                });
            }
        }
    }
}

fn run_divisibility(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Divisibility;
    for &n in &cfg.n_values {
        for &r in &cfg.r_values {
            for &b in &framing_pool(cfg) {
                let p = params(&[
                    ("b", b.to_string()),
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                ]);
                rec.run(suite, "gamma_order_bound", p.clone(), || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let mut passed = 0;
                    let mut total = 0;
                    for a in eta_monomials(n - 1, 6) {
                        total += 1;
                        let bound = gamma_order_bound(n, a.total());
                        let order = bound + 2 + cfg.order.unwrap_or(0);
                        let g = ctx.gamma_transform(&a, b, order)?;
                        if g.x_order().map_or(true, |o| o >= bound) {
                            passed += 1;
                        }
                    }
                    Ok(Outcome::counted(passed, total))
                });
                rec.run(suite, "g_b_matches_gamma", p.clone(), || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let rbar = crate::cyclotomic::rbar_for(r, n)?;
                    let mut passed = 0;
                    let mut total = 0;
                    for a in eta_monomials(n - 1, 4) {
                        total += 1;
                        let exact = ctx.g_b_bruteform(&a, b)?.reduce_p_r(n)?;
                        let series = ctx.gamma_transform(&a, b, rbar)?.series_p_r(r, n)?;
                        if exact.coeffs() == series.coeffs() {
                            passed += 1;
                        }
                    }
                    Ok(Outcome::counted(passed, total))
                });
                rec.run(suite, "weighted_binomial_valuation", p, || {
                    let ctx = inv_ctx(n, r, cfg.cap)?;
                    let mut passed = 0;
                    let mut total = 0;
                    for a in eta_monomials(n - 1, 4) {
                        total += 1;
                        let sum = ctx.weighted_binomial_sum(&a, b)?;
                        let bound =
                            ((n as i64 - 1) * (r as i64 - 1)) / 2 - (a.total() as i64) / 2;
                        if ValuationBound::check(sum.xi_valuation(), bound).pass {
                            passed += 1;
                        }
                    }
                    Ok(Outcome::counted(passed, total))
                });
            }
        }
    }
}

/// All monomials with Σa_i ≤ total over `rank` variables.
fn eta_monomials(rank: usize, total: u32) -> Vec<EtaMonomial> {
    let mut out = Vec::new();
    let mut a = vec![0u32; rank];
    loop {
        if a.iter().sum::<u32>() <= total {
            out.push(EtaMonomial::new(a.clone()));
        }
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            a[i] += 1;
            if a[i] <= total {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

fn run_number_theory(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::NumberTheory;
    for &r in &cfg.r_values {
        let p = params(&[("r", r.to_string())]);
        rec.run(suite, "bernoulli_power_sum", p.clone(), || {
            let mut passed = 0;
            let total = 11;
            for d in 0..=10 {
                if power_sum_check(r, d)?.pass {
                    passed += 1;
                }
            }
            Ok(Outcome::counted(passed, total))
        });
        rec.run(suite, "binomial_column_valuation", p, || {
            let mut passed = 0;
            let total = 13;
            for d in 0..=12 {
                if binom_column_sum_valuation(r, d).pass {
                    passed += 1;
                }
            }
            Ok(Outcome::counted(passed, total))
        });
    }
    if cfg.r_values.is_empty() {
        return;
    }
    let p = params(&[("samples", "200".to_string())]);
    rec.run(suite, "alternating_binomial_vanishing", p, || {
        let mut rng = rng_for(cfg.seed, "vanishing");
        let mut passed = 0;
        let total = 200;
        for _ in 0..total {
            let rank = rng.gen_range(1..=2usize);
            let a: Vec<u32> = (0..rank).map(|_| rng.gen_range(1..=3u32)).collect();
            let bound: u32 = a.iter().sum();
            // random binomial-basis polynomial of total degree < |a|
            let terms: Vec<(BigInt, Vec<u32>)> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let coeff = BigInt::from(rng.gen_range(-9i64..=9));
                    let mut ls = vec![0u32; rank];
                    let mut budget = bound.saturating_sub(1);
                    for l in ls.iter_mut() {
                        *l = rng.gen_range(0..=budget);
                        budget -= *l;
                    }
                    (coeff, ls)
                })
                .collect();
            let poly = BinomialPoly::new(rank, terms);
            if alternating_binomial_sum(&a, &poly)?.is_zero() {
                passed += 1;
            }
        }
        Ok(Outcome::counted(passed, total))
    });
}

fn run_appendix(cfg: &SuiteConfig, rec: &mut Recorder) {
    let suite = Suite::Appendix;
    for &n in &cfg.n_values {
        let p = params(&[("n", n.to_string())]);
        rec.run(suite, "cartan_half_factorization", p.clone(), || {
            let rs = RootSystem::new(n)?;
            let (pmat, diag) = rs.cartan_half_factorization();
            let rank = rs.rank();
            let mut pass = true;
            for i in 0..rank {
                for j in 0..rank {
                    // (PᵗDP)_{ij}
                    let mut acc = BigRational::from_integer(BigInt::from(0));
                    for l in 0..rank {
                        acc += &pmat[l][i] * &diag[l] * &pmat[l][j];
                    }
                    let expect = BigRational::new(BigInt::from(rs.cartan()[i][j]), BigInt::from(2));
                    if acc != expect {
                        pass = false;
                    }
                }
            }
            Ok(Outcome {
                pass,
                skipped: false,
                lhs: "PᵗDP".into(),
                rhs: "A/2".into(),
                valuations: Vec::new(),
            })
        });
        rec.run(suite, "root_lattice_membership", p, || {
            let rs = RootSystem::new(n)?;
            let mut rng = rng_for(cfg.seed, &format!("lattice/{n}"));
            let mut passed = 0;
            let total = 50;
            for _ in 0..total {
                let coords: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-6..=6)).collect();
                let mu = Weight::new(coords);
                let integral = rs.alpha_coords(&mu).iter().all(|c| c.is_integer());
                if rs.in_root_lattice(&mu) == integral {
                    passed += 1;
                }
            }
            Ok(Outcome::counted(passed, total))
        });
        for &r in &cfg.r_values {
            let p = params(&[("n", n.to_string()), ("r", r.to_string())]);
            rec.run(suite, "multivar_vs_root_gauss", p.clone(), || {
                let ctx = gauss_ctx(n, r, cfg.cap)?;
                let mut passed = 0;
                let pool = framing_pool(cfg);
                let total = pool.len();
                for &b in &pool {
                    let bare = ctx.multivar_gauss_brute(b)?;
                    let exponent = BigRational::from_integer(BigInt::from(-b))
                        * ctx.root_system().rho_norm_sq()
                        / BigRational::from_integer(BigInt::from(2));
                    let phase = CycloNumber::zeta_power(r, &exponent)?;
                    if ctx.root_gauss_brute(b)? == &bare * &phase {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
            rec.run(suite, "f_factorial_alcove", p, || {
                let ctx = inv_ctx(n, r, cfg.cap)?;
                let mut passed = 0;
                let pool = framing_pool(cfg);
                let total = pool.len();
                for &b in &pool {
                    let whole = ctx.f_unknot_brute(b)?;
                    let scale = BigRational::from_integer(crate::arith::factorial(n as u64));
                    if whole == ctx.f_alcove(b)?.scaled(&scale)? {
                        passed += 1;
                    }
                }
                Ok(Outcome::counted(passed, total))
            });
        }
    }
}

/// Sanity targets used by the acceptance battery: the series constant
/// term forced by the closed form.
pub fn constant_term_check(
    ctx: &InvariantContext,
    pres: &SurgeryPresentation,
) -> crate::error::Result<crate::CheckResult<BigRational>> {
    let tau = ctx.tau_series_surgery(pres, 0)?;
    let expect = series_constant_term(ctx.n(), ctx.r(), pres)?;
    Ok(crate::CheckResult::of(tau.coeff(0).clone(), expect))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config(suite: Suite) -> SuiteConfig {
        let mut cfg = SuiteConfig::new(suite);
        cfg.n_values = vec![2];
        cfg.r_values = vec![5, 7];
        cfg.seed = 42;
        cfg
    }

    #[test]
    fn empty_grid_gives_empty_report() {
        let cfg = SuiteConfig::new(Suite::All);
        let report = run_suite(&cfg);
        assert_eq!(report.summary.total, 0);
        assert_eq!(report.summary.failed, 0);
        assert!(report.all_passed());
        assert_eq!(report.schema, 1);
    }

    #[test]
    fn gauss_suite_passes() {
        let report = run_suite(&base_config(Suite::Gauss));
        assert!(report.all_passed(), "{}", report.to_json());
        assert!(report.summary.total > 0);
        assert_eq!(report.summary.skipped, 0);
    }

    #[test]
    fn characters_suite_passes() {
        let report = run_suite(&base_config(Suite::Characters));
        assert!(report.all_passed(), "{}", report.to_json());
    }

    #[test]
    fn invariants_suite_passes() {
        let report = run_suite(&base_config(Suite::Invariants));
        assert!(report.all_passed(), "{}", report.to_json());
    }

    #[test]
    fn congruence_suite_passes_and_skips_preconditions() {
        let mut cfg = base_config(Suite::Congruence);
        cfg.r_values = vec![5, 7];
        cfg.framings = vec![vec![2], vec![3, -2], vec![5]];
        let report = run_suite(&cfg);
        // [5] at r=5 violates r ∤ |H₁| and is skipped, not failed
        assert!(report.all_passed(), "{}", report.to_json());
        assert!(report.summary.skipped > 0);
        assert!(report.summary.passed > 0);
    }

    #[test]
    fn number_theory_suite_passes() {
        let report = run_suite(&base_config(Suite::NumberTheory));
        assert!(report.all_passed(), "{}", report.to_json());
    }

    #[test]
    fn symmetry_and_appendix_pass() {
        let report = run_suite(&base_config(Suite::Symmetry));
        assert!(report.all_passed(), "{}", report.to_json());
        let report = run_suite(&base_config(Suite::Appendix));
        assert!(report.all_passed(), "{}", report.to_json());
    }

    #[test]
    fn divisibility_suite_passes() {
        let mut cfg = base_config(Suite::Divisibility);
        cfg.r_values = vec![7];
        cfg.framings = vec![vec![1], vec![2]];
        let report = run_suite(&cfg);
        assert!(report.all_passed(), "{}", report.to_json());
    }

    #[test]
    fn reports_are_byte_identical_per_seed() {
        let cfg = base_config(Suite::Gauss);
        let a = run_suite(&cfg).to_json();
        let b = run_suite(&cfg).to_json();
        assert_eq!(a, b);
        let mut other = base_config(Suite::Gauss);
        other.seed = 43;
        // a different seed still passes but may sample different data
        assert!(run_suite(&other).all_passed());
    }

    #[test]
    fn cap_breaches_are_skipped() {
        let mut cfg = base_config(Suite::Gauss);
        cfg.n_values = vec![3];
        cfg.cap = 10;
        let report = run_suite(&cfg);
        assert!(report.all_passed(), "{}", report.to_json());
        assert!(report.summary.skipped > 0);
    }

    #[test]
    fn report_serialization_shape() {
        let report = run_suite(&base_config(Suite::NumberTheory));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["seed"], "42");
        assert!(json["records"].as_array().unwrap().len() > 0);
        let first = &json["records"][0];
        for key in ["suite", "check", "params", "pass", "skipped", "lhs", "rhs", "valuations"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
        assert!(first.get("runtime").is_none(), "runtime must stay out of the JSON");
        // records are sorted
        let records = json["records"].as_array().unwrap();
        let keys: Vec<String> = records
            .iter()
            .map(|x| format!("{}/{}/{}", x["suite"], x["check"], x["params"]))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
