//! Character values at zeta: the psi product over positive roots, the
//! Weyl denominator identity, the unknot colorings J and their framed
//! squares Q, and the affine symmetry that folds box sums onto one
//! alcove.
//!
//! ```bash
//! cargo run --example character_formulas
//! ```

use lenstau::characters::CharacterContext;
use lenstau::{RootSystem, Weight};

fn main() {
    let r = 7;
    let ctx = CharacterContext::new(RootSystem::new(2).unwrap(), r).unwrap();
    let rs = ctx.root_system();

    // psi(mu) = prod over positive roots of (1 - zeta^{-(mu|alpha)});
    // at mu = rho every factor is 1 - zeta^{-1}
    println!("psi(rho)  = {}", ctx.psi_rho());
    println!("v(psi(rho)) = {:?} (one per positive root)", ctx.psi_rho().xi_valuation());

    // alternating Weyl sum equals the product: the denominator identity
    let mu = Weight::new(vec![4]);
    let check = ctx.weyl_denominator_check(&mu);
    println!("Weyl denominator at {:?}: {} = {}", mu.coords(), check.lhs, check.rhs);
    assert!(check.pass);

    // J is the normalized unknot coloring: J(rho) = 1, and reflecting
    // the color flips the sign, so chamber walls force zeros
    println!("J(rho)    = {}", ctx.unknot_j(rs.rho()).unwrap());
    println!("J(3 l1)   = {}", ctx.unknot_j(&Weight::new(vec![3])).unwrap());
    println!("J(7 l1)   = {} (affine wall at r = 7)", ctx.unknot_j(&Weight::new(vec![7])).unwrap());
    // the extended version reduces any color to the dominant chamber first
    let mu = Weight::new(vec![-3]);
    println!("J(-3 l1)  = {}", ctx.unknot_j_extended(&mu).unwrap());

    // Q(mu, b) is the framed square entering surgery sums; at framing 0
    // it is invariant under the affine Weyl group, so the whole box sum
    // is n! copies of the dominant alcove
    let mu = Weight::new(vec![3]);
    let q = ctx.unknot_q(&mu, 0).unwrap();
    println!("Q(3 l1, 0) = {q}");

    let w = rs
        .affine_element(lenstau::WeylElement::simple_reflection(2, 0), rs.simple_root(0))
        .unwrap();
    let sym = ctx.affine_symmetry_check(&mu, &w, 0).unwrap();
    println!("Q(w.mu, 0) = {} (affine invariance: {})", sym.lhs, sym.pass);
    assert!(sym.pass);

    // colors on alcove walls contribute nothing
    for mu in rs.box_points(r).unwrap() {
        if ctx.on_affine_wall(&mu) {
            assert!(ctx.unknot_q(&mu, 0).unwrap().is_zero());
        }
    }
    println!("Q vanishes on every wall point of the box");
}
