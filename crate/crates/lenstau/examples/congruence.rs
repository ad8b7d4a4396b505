//! The headline identity: for a connected sum of lens spaces with
//! |H_1| coprime to r, the exact invariant tau_r and the perturbative
//! series tau agree under the residue map p_r, coefficient by
//! coefficient mod r up to x-degree rbar = (r - 1 - n(n-1))/2.
//!
//! ```bash
//! cargo run --example congruence
//! ```

use lenstau::{InvariantContext, SurgeryPresentation};

fn main() {
    // sl_2 at r = 7: rbar = 2, so three coefficients must match
    let ctx = InvariantContext::new(2, 7).unwrap();
    let pres = SurgeryPresentation::new(vec![3, -2]).unwrap();
    let check = ctx.congruence_check(&pres).unwrap();
    println!(
        "n = {}, r = {}, surgery {pres}: p_r(tau_r) = {:?}, p_r(tau) = {:?}",
        check.n, check.r, check.lhs, check.rhs
    );
    assert!(check.pass);

    // the full report serializes, so it can be logged or diffed
    println!("{}", serde_json::to_string_pretty(&check).unwrap());

    // a grid of presentations across both sides of the theorem
    for (n, r) in [(2u32, 5u64), (2, 11), (2, 13), (3, 11), (3, 13)] {
        let ctx = InvariantContext::new(n as usize, r).unwrap();
        for framings in [vec![2i64], vec![-3], vec![2, 2, 3]] {
            let pres = SurgeryPresentation::new(framings).unwrap();
            if pres.h1_order() % r == 0 {
                continue; // the congruence needs |H_1| coprime to r
            }
            let check = ctx.congruence_check(&pres).unwrap();
            println!(
                "n = {n}, r = {r:2}, {pres}: residues {:?} pass = {}",
                check.lhs, check.pass
            );
            assert!(check.pass);
        }
    }

    // where the hypotheses fail, the library says so instead of
    // producing junk: r | |H_1| is rejected, as is r <= n(n-1)
    let ctx = InvariantContext::new(2, 5).unwrap();
    let bad = SurgeryPresentation::new(vec![5, 2]).unwrap();
    println!("r divides |H_1|: {:?}", ctx.congruence_check(&bad).unwrap_err());
    let small = InvariantContext::new(3, 5).unwrap();
    let pres = SurgeryPresentation::new(vec![2]).unwrap();
    println!("r too small for p_r: {:?}", small.congruence_check(&pres).unwrap_err());
}
