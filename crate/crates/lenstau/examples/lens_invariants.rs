//! The quantum invariant tau_r at an odd prime: framed unknot brackets
//! F_{U_b}, the surgery formula for connected sums of lens spaces, the
//! closed lens-space evaluation, and the integrality of the result.
//!
//! ```bash
//! cargo run --example lens_invariants
//! ```

use lenstau::{InvariantContext, SurgeryPresentation};

fn main() {
    let ctx = InvariantContext::new(2, 7).unwrap();

    // F_{U_b}: bracket of the b-framed unknot summed over box colors.
    // The brute force box sum and the Gauss-sum evaluation agree.
    for b in [1i64, 2, -3] {
        let brute = ctx.f_unknot_brute(b).unwrap();
        let closed = ctx.f_unknot_closed(b).unwrap();
        assert_eq!(brute, closed);
        println!("F_U({b:2}) = {closed}");
    }

    // surgery on a +/-1 framed unknot gives S^3 back: tau_r = 1
    let s3 = ctx.tau_r_surgery(&SurgeryPresentation::new(vec![1]).unwrap()).unwrap();
    println!("tau_7(S^3)      = {s3}");
    assert!(s3.is_one());

    // the lens space L(b,1): surgery quotient F(b)/F(sign b), or in
    // closed form a Legendre sign, a zeta power, and a character ratio
    let pres = SurgeryPresentation::new(vec![2]).unwrap();
    let tau = ctx.tau_r_surgery(&pres).unwrap();
    println!("tau_7(L(2,1))   = {tau}");
    assert_eq!(tau, ctx.tau_r_lens_closed(2).unwrap());

    // tau_r is an algebraic integer of valuation zero: a unit
    println!("v(tau_7(L(2,1))) = {:?}", tau.xi_valuation());

    // connected sums multiply
    let sum = SurgeryPresentation::new(vec![3, -2]).unwrap();
    println!("presentation {sum}: |H_1| = {}", sum.h1_order());
    let joint = ctx.tau_r_surgery(&sum).unwrap();
    let left = ctx.tau_r_surgery(&SurgeryPresentation::new(vec![3]).unwrap()).unwrap();
    let right = ctx.tau_r_surgery(&SurgeryPresentation::new(vec![-2]).unwrap()).unwrap();
    assert_eq!(joint, &left * &right);
    println!("tau_7(L(3,1) # L(-2,1)) = {joint}");

    // a larger gauge group: same machinery, sl_3 at r = 11
    let ctx3 = InvariantContext::new(3, 11).unwrap();
    let tau3 = ctx3.tau_r_surgery(&SurgeryPresentation::new(vec![2]).unwrap()).unwrap();
    println!("sl_3, r = 11: tau(L(2,1)) = {tau3}");
    assert_eq!(tau3.xi_valuation(), Some(0));
}
