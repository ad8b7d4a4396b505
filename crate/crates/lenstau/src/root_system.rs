//! Root-system combinatorics for sl_n: the Cartan matrix and its inverse,
//! positive roots, the Weyl group as permutations, the affine Weyl group
//! W ⋉ rΛ^root, and the lattice enumerations (box and alcove) that every
//! brute-force sum downstream ranges over.
//!
//! Weights are stored in the fundamental-weight (λ) basis with integer
//! coordinates; the simple-root (α) basis is derived and rational with
//! denominator dividing n. The inner product is normalized so that
//! (α|α) = 2 for every root, i.e. the Gram matrix of the λ-basis is the
//! inverse Cartan matrix.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::arith::perm_parity;
use crate::error::{Error, Result};

/// Default ceiling on lattice enumerations (`r^{n-1}` points for the box).
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// A weight of sl_n in λ-basis coordinates (length n−1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![0; rank] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight { coords: self.coords.iter().map(|k| k * c).collect() }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|k| -k).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of the Weyl group W ≅ S_n, stored as the permutation it
/// induces on the ε-coordinate slots; `sign` is the permutation parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    perm: Vec<usize>,
    sign: i8,
}

impl WeylElement {
    /// `perm[i]` is the slot index i is sent to; must be a permutation.
    pub fn from_permutation(perm: Vec<usize>) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let sign = perm_parity(&perm);
        WeylElement { perm, sign }
    }

    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), sign: 1 }
    }

    /// The simple reflection s_{i+1} (0-indexed i), i.e. the transposition
    /// of adjacent ε-slots i and i+1.
    pub fn simple_reflection(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        WeylElement { perm, sign: -1 }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn sign(&self) -> i64 {
        self.sign as i64
    }

    /// Composition self ∘ other (other acts first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.perm.len(), other.perm.len());
        let perm: Vec<usize> = (0..self.perm.len()).map(|i| self.perm[other.perm[i]]).collect();
        WeylElement { perm, sign: self.sign * other.sign }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        WeylElement { perm, sign: self.sign }
    }
}

/// An element w·t_{rβ} of the affine Weyl group W_(r) = W ⋉ rΛ^root:
/// a finite part and a translation β that must lie in the root lattice.
/// Build through [`RootSystem::affine_element`] so the lattice condition
/// is checked.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineWeylElement {
    finite: WeylElement,
    translation: Weight,
}

impl AffineWeylElement {
    pub fn finite(&self) -> &WeylElement {
        &self.finite
    }

    pub fn translation(&self) -> &Weight {
        &self.translation
    }
}

/// Root-system data for sl_n, 2 ≤ n ≤ 6.
#[derive(Clone, Debug)]
pub struct RootSystem {
    n: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<BigRational>>,
    positive_roots: Vec<Vec<i64>>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=6).contains(&n) {
            return Err(Error::RankOutOfRange(n));
        }
        let m = n - 1;
        let mut cartan = vec![vec![0i64; m]; m];
        for i in 0..m {
            cartan[i][i] = 2;
            if i + 1 < m {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        // (A^{-1})_{ij} = (n - max(i,j)) * min(i,j) / n in 1-indexed terms.
        let cartan_inv = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| {
                        let (lo, hi) = (i.min(j) as i64, i.max(j) as i64);
                        BigRational::new(BigInt::from((n as i64 - hi) * lo), BigInt::from(n as i64))
                    })
                    .collect()
            })
            .collect();
        // Positive roots are the intervals α_i + ... + α_j, i ≤ j.
        let mut positive_roots = Vec::with_capacity(m * (m + 1) / 2);
        for i in 0..m {
            for j in i..m {
                let mut c = vec![0i64; m];
                for k in c.iter_mut().take(j + 1).skip(i) {
                    *k = 1;
                }
                positive_roots.push(c);
            }
        }
        let rho = Weight::new(vec![1; m]);
        Ok(RootSystem { n, cartan, cartan_inv, positive_roots, rho })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank n−1 of sl_n.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<BigRational>] {
        &self.cartan_inv
    }

    /// The n(n−1)/2 positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The highest root θ = α_1 + ... + α_{n−1} in simple-root coordinates.
    pub fn highest_root(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// The simple root α_{i+1} as a weight (the i-th column of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        assert!(i < self.rank());
        Weight::new((0..self.rank()).map(|k| self.cartan[k][i]).collect())
    }

    /// (μ|ν) through the inverse Cartan matrix; rational with denominator
    /// dividing n.
    pub fn inner_product(&self, mu: &Weight, nu: &Weight) -> BigRational {
        let m = self.rank();
        assert_eq!(mu.rank(), m, "weight rank mismatch");
        assert_eq!(nu.rank(), m, "weight rank mismatch");
        let n = self.n as i64;
        let mut acc: i128 = 0;
        for i in 0..m {
            let ki = mu.coords[i];
            if ki == 0 {
                continue;
            }
            for j in 0..m {
                let mj = nu.coords[j];
                if mj == 0 {
                    continue;
                }
                let (lo, hi) = ((i + 1).min(j + 1) as i64, (i + 1).max(j + 1) as i64);
                acc += ki as i128 * mj as i128 * ((n - hi) * lo) as i128;
            }
        }
        BigRational::new(BigInt::from(acc), BigInt::from(n))
    }

    /// (μ|α) for a root in simple-root coordinates; always an integer
    /// because (μ|α_j) is the j-th λ-coordinate of μ.
    pub fn root_pairing(&self, mu: &Weight, alpha: &[i64]) -> i64 {
        assert_eq!(mu.rank(), alpha.len(), "root rank mismatch");
        mu.coords.iter().zip(alpha).map(|(k, c)| k * c).sum()
    }

    /// |ρ|² = n(n²−1)/12.
    pub fn rho_norm_sq(&self) -> BigRational {
        self.inner_product(&self.rho, &self.rho)
    }

    /// The α-basis coordinates A⁻¹·coords of a weight.
    pub fn alpha_coords(&self, mu: &Weight) -> Vec<BigRational> {
        assert_eq!(mu.rank(), self.rank());
        (0..self.rank())
            .map(|i| {
                let mut acc = BigRational::zero();
                for (j, k) in mu.coords.iter().enumerate() {
                    acc += &self.cartan_inv[i][j] * BigRational::from_integer(BigInt::from(*k));
                }
                acc
            })
            .collect()
    }

    /// Membership in the root lattice: Σ i·k_i ≡ 0 (mod n), equivalently
    /// integrality of the α-coordinates.
    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        assert_eq!(mu.rank(), self.rank());
        let n = self.n as i64;
        let s: i64 = mu.coords.iter().enumerate().map(|(i, k)| ((i as i64 + 1) * k).rem_euclid(n)).sum();
        s % n == 0
    }

    /// All n! Weyl elements, in lexicographic permutation order.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        use itertools::Itertools;
        (0..self.n)
            .permutations(self.n)
            .map(WeylElement::from_permutation)
            .collect()
    }

    /// Partial-sum lift used by the S_n action: v_j = Σ_{i≥j} k_i, v_n = 0.
    /// The true ε-coordinates differ from v by a common constant, which a
    /// permutation of slots cannot see.
    fn epsilon_lift(&self, mu: &Weight) -> Vec<i64> {
        let m = self.rank();
        let mut v = vec![0i64; self.n];
        for j in (0..m).rev() {
            v[j] = v[j + 1] + mu.coords[j];
        }
        v
    }

    fn from_epsilon_lift(&self, v: &[i64]) -> Weight {
        Weight::new((0..self.rank()).map(|i| v[i] - v[i + 1]).collect())
    }

    pub fn weyl_act(&self, w: &WeylElement, mu: &Weight) -> Weight {
        assert_eq!(w.perm.len(), self.n, "Weyl element rank mismatch");
        let v = self.epsilon_lift(mu);
        let mut out = vec![0i64; self.n];
        for (i, &vi) in v.iter().enumerate() {
            out[w.perm[i]] = vi;
        }
        self.from_epsilon_lift(&out)
    }

    /// Builds w·t_β after checking β ∈ Λ^root.
    pub fn affine_element(&self, finite: WeylElement, translation: Weight) -> Result<AffineWeylElement> {
        if !self.in_root_lattice(&translation) {
            return Err(Error::RootLatticeViolation);
        }
        Ok(AffineWeylElement { finite, translation })
    }

    /// The affine action w(μ) + r·β.
    pub fn affine_act(&self, w: &AffineWeylElement, mu: &Weight, r: u64) -> Weight {
        &self.weyl_act(&w.finite, mu) + &w.translation.scaled(r as i64)
    }

    /// Iterator over the box ρ + {Σ k_i α_i : 0 ≤ k_i < r}, in
    /// lexicographic k-order; r^{n−1} points, guarded by the default cap.
    pub fn box_points(&self, r: u64) -> Result<BoxIter<'_>> {
        self.box_points_capped(r, DEFAULT_ENUM_CAP)
    }

    pub fn box_points_capped(&self, r: u64, cap: u64) -> Result<BoxIter<'_>> {
        let size = (r as u128).pow(self.rank() as u32);
        if size > cap as u128 {
            return Err(Error::EnumerationCap { size, cap });
        }
        Ok(BoxIter { rs: self, r, k: vec![0; self.rank()], done: r == 0 })
    }

    /// The alcove slice Λ″_r: weights of ρ + Λ^root with every λ-coordinate
    /// ≥ 1 and (μ|θ) ≤ r. Points with (μ|θ) = r sit on the alcove boundary
    /// and make every Q-type summand vanish, so including them changes sets
    /// but never sums.
    pub fn alcove_points(&self, r: u64) -> Vec<Weight> {
        let m = self.rank();
        let mut out = Vec::new();
        let mut c = vec![1i64; m];
        if (m as u64) > r.saturating_add(0) && m as i64 > r as i64 {
            return out;
        }
        loop {
            let total: i64 = c.iter().sum();
            if total <= r as i64 {
                let mu = Weight::new(c.clone());
                if self.in_root_lattice(&(&mu - &self.rho)) {
                    out.push(mu);
                }
            }
            // odometer over c_i ≥ 1 with Σ c ≤ r, pruned by resetting
            let mut i = 0;
            loop {
                if i == m {
                    return out;
                }
                c[i] += 1;
                let total: i64 = c.iter().sum();
                if total <= r as i64 {
                    break;
                }
                c[i] = 1;
                i += 1;
            }
        }
    }

    /// Δ(μ) = Π (μ|α) / Π (ρ|α): the Weyl dimension polynomial; an integer
    /// on Λ, zero exactly on chamber walls.
    pub fn weyl_dimension(&self, mu: &Weight) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            num *= BigInt::from(self.root_pairing(mu, alpha));
            den *= BigInt::from(self.root_pairing(&self.rho, alpha));
        }
        if num.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(num, den)
    }

    /// Finds w with w(μ) strongly dominant (all coordinates ≥ 1), or None
    /// when μ lies on a chamber wall (some Weyl image has a zero
    /// coordinate). The returned w is unique.
    pub fn reduce_to_dominant(&self, mu: &Weight) -> Option<(WeylElement, Weight)> {
        let v = self.epsilon_lift(mu);
        let mut idx: Vec<usize> = (0..self.n).collect();
        idx.sort_by(|&a, &b| v[b].cmp(&v[a]));
        for pair in idx.windows(2) {
            if v[pair[0]] == v[pair[1]] {
                return None;
            }
        }
        let mut perm = vec![0usize; self.n];
        for (j, &slot) in idx.iter().enumerate() {
            perm[slot] = j;
        }
        let w = WeylElement::from_permutation(perm);
        let sorted: Vec<i64> = idx.iter().map(|&slot| v[slot]).collect();
        let dominant = self.from_epsilon_lift(&sorted);
        debug_assert_eq!(self.weyl_act(&w, mu), dominant);
        Some((w, dominant))
    }

    /// The factorization A/2 = Pᵗ·D·P with P unit upper-triangular,
    /// P_{i,i+1} = −i/(i+1), and D = diag((j+1)/(2j)); returned as (P, D).
    pub fn cartan_half_factorization(&self) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
        let m = self.rank();
        let mut p = vec![vec![BigRational::zero(); m]; m];
        for i in 0..m {
            p[i][i] = BigRational::one();
            if i + 1 < m {
                p[i][i + 1] = BigRational::new(BigInt::from(-(i as i64 + 1)), BigInt::from(i as i64 + 2));
            }
        }
        let d = (1..=m)
            .map(|j| BigRational::new(BigInt::from(j as i64 + 1), BigInt::from(2 * j as i64)))
            .collect();
        (p, d)
    }
}

/// Lazy iterator over the shifted root-lattice box; see
/// [`RootSystem::box_points`].
pub struct BoxIter<'a> {
    rs: &'a RootSystem,
    r: u64,
    k: Vec<u64>,
    done: bool,
}

impl BoxIter<'_> {
    fn weight_at(&self) -> Weight {
        let m = self.rs.rank();
        let coords = (0..m)
            .map(|i| 1 + (0..m).map(|j| self.rs.cartan[i][j] * self.k[j] as i64).sum::<i64>())
            .collect();
        Weight::new(coords)
    }
}

impl Iterator for BoxIter<'_> {
    type Item = Weight;

    fn next(&mut self) -> Option<Weight> {
        if self.done {
            return None;
        }
        let out = self.weight_at();
        let mut i = 0;
        loop {
            if i == self.k.len() {
                self.done = true;
                break;
            }
            self.k[i] += 1;
            if self.k[i] < self.r {
                break;
            }
            self.k[i] = 0;
            i += 1;
        }
        Some(out)
    }
}
