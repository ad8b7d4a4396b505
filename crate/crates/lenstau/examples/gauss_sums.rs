//! Gauss sums from the classical quadratic sum up to the root-lattice
//! sums over the shifted box, with their closed evaluations, the
//! valuation count, and the ratio law that drives the lens invariants.
//!
//! ```bash
//! cargo run --example gauss_sums
//! ```

use lenstau::gauss::{legendre_symbol, quadratic_gauss, twisted_quadratic_gauss, GaussContext};
use lenstau::RootSystem;

fn main() {
    let r = 7;

    // gamma = sum of zeta^{k^2}: gamma^2 = (-1)^{(r-1)/2} r, and its
    // x-adic valuation is exactly (r-1)/2
    let gamma = quadratic_gauss(r);
    println!("gamma(7)   = {gamma}");
    println!("gamma^2    = {}", &gamma * &gamma);
    println!("v(gamma)   = {:?}", gamma.xi_valuation());

    // twisting by b only flips the sign through the Legendre symbol
    for b in [1i64, 2, 3] {
        let tw = twisted_quadratic_gauss(r, b).unwrap();
        println!("(b = {b})  sum zeta^(b k^2) = {tw}   (b/7) = {}", legendre_symbol(b, r).unwrap());
    }

    // root-lattice version: sum over the box of zeta^{b(|mu|^2-|rho|^2)/2}
    let ctx = GaussContext::new(RootSystem::new(3).unwrap(), r).unwrap();
    for b in [1i64, 2, -3] {
        let brute = ctx.root_gauss_brute(b).unwrap();
        let closed = ctx.root_gauss_closed(b).unwrap();
        assert_eq!(brute, closed);
        println!("G({b:2}) = {closed}");
    }

    // valuation is (n-1)(r-1)/2 on the nose: two gamma factors for sl_3
    let g = ctx.root_gauss_closed(1).unwrap();
    println!("v(G(1)) = {:?} (expected {})", g.xi_valuation(), (3 - 1) * (r - 1) / 2);

    // the combination entering surgery is the unit G(b)/G(sign b); the
    // ratio collapses to a Legendre sign times one zeta power
    let check = ctx.gauss_ratio_check(-3).unwrap();
    println!("G(-3)/G(-1) = {}", check.lhs);
    assert!(check.pass);

    // translating the box by a root-lattice vector leaves the sum fixed,
    // which is what lets the quadratic form complete squares
    let beta = RootSystem::new(3).unwrap().simple_root(0);
    let shift = ctx.translation_check(2, &beta).unwrap();
    println!("box shifted by alpha_1: sum unchanged = {}", shift.pass);
    assert!(shift.pass);
}
