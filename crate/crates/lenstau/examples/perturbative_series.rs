//! The perturbative side: truncated power series over Q in x, the
//! character series, the finite-difference transform Gamma_b with its
//! order bound, and the series invariant tau for connected sums.
//!
//! ```bash
//! cargo run --example perturbative_series
//! ```

use lenstau::invariants::{gamma_order_bound, series_constant_term, EtaMonomial};
use lenstau::{InvariantContext, SurgeryPresentation, TruncSeries};
use num::{BigInt, BigRational};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn main() {
    // (1+x)^c for rational c, truncated: the basic building block
    let sqrt = TruncSeries::binomial_series(&rat(1, 2), 4);
    println!("(1+x)^(1/2) = {sqrt}");
    let square = &sqrt * &sqrt;
    println!("squared     = {square}");

    // unit series invert exactly
    let inv = square.invert().unwrap();
    println!("inverted    = {inv}");

    // Gamma_b applies the alternating-difference transform to a
    // monomial in the eta coordinates; its x-order grows with the
    // monomial degree, which is what makes the full series converge
    // x-adically
    let ctx = InvariantContext::new(2, 7).unwrap();
    let a = EtaMonomial::new(vec![2]);
    let bound = gamma_order_bound(2, a.total());
    let gamma = ctx.gamma_transform(&a, 1, bound + 3).unwrap();
    println!("Gamma_1(eta^2) = {gamma}");
    println!("x-order {} >= bound {}", gamma.x_order().unwrap(), bound);
    assert!(gamma.x_order().unwrap() >= bound);

    // tau for a lens space: Legendre sign, binomial prefactor, and the
    // ratio of character series, all exact in Q[[x]]
    let pres = SurgeryPresentation::new(vec![2]).unwrap();
    let tau = ctx.tau_series_surgery(&pres, 4).unwrap();
    println!("tau(L(2,1)), sl_2, r = 7: {tau}");

    // its constant term is forced: (|H_1|/r)^(n-1) / |H_1|^(n(n-1)/2)
    let c0 = series_constant_term(2, 7, &pres).unwrap();
    println!("constant term = {} (closed form {})", tau.coeff(0), c0);
    assert_eq!(tau.coeff(0), &c0);

    // series for a sum of lens spaces is the product of the factors
    let sum = SurgeryPresentation::new(vec![3, -2]).unwrap();
    let joint = ctx.tau_series_surgery(&sum, 4).unwrap();
    let left = ctx.tau_series_surgery(&SurgeryPresentation::new(vec![3]).unwrap(), 4).unwrap();
    let right = ctx.tau_series_surgery(&SurgeryPresentation::new(vec![-2]).unwrap(), 4).unwrap();
    assert_eq!(joint, &left * &right);
    println!("tau(L(3,1) # L(-2,1)) = {joint}");

    // surgery on a +/-1 framing changes nothing
    let one = ctx.tau_series_surgery(&SurgeryPresentation::new(vec![-1]).unwrap(), 4).unwrap();
    assert_eq!(one, TruncSeries::one(4));
    println!("tau(S^3) = {one}");
}
