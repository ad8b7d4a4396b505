//! Exact arithmetic in Z_(r)[zeta] written in the basis of powers of
//! x = zeta - 1: valuations, unit inversion, exact division, and the
//! residue map p_r into (Z/r)[x] / (x^{rbar+1}).
//!
//! ```bash
//! cargo run --example cyclotomic_arithmetic
//! ```

use lenstau::CycloNumber;
use num::{BigInt, BigRational};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn main() {
    let r = 7;

    // zeta as 1 + x, reduced mod the minimal polynomial of x
    let zeta = CycloNumber::zeta_int(r, 1);
    println!("zeta     = {zeta}");
    println!("zeta^7   = {}", zeta.pow(7));
    assert!(zeta.pow(7).is_one());

    // x = zeta - 1 is the uniformizer: v(x) = 1, v(r) = r - 1
    let x = CycloNumber::x(r);
    println!("v(x)   = {:?}", x.xi_valuation());
    println!("v(7)   = {:?}", CycloNumber::from_integer(r, 7).xi_valuation());

    // 1 - zeta^k is x times a unit, so every such factor contributes
    // exactly one to the valuation
    let u = &CycloNumber::one(r) - &zeta.pow(3);
    println!("v(1 - zeta^3) = {:?}", u.xi_valuation());

    // units invert exactly; non-units refuse
    let unit = &CycloNumber::from_integer(r, 2) + &x;
    let inv = unit.invert().unwrap();
    assert!((&unit * &inv).is_one());
    println!("(2 + x)^-1 = {inv}");
    assert!(u.invert().is_err());

    // exact division tracks valuations: (1 - zeta^3)/(1 - zeta) is the
    // unit 1 + zeta + zeta^2
    let v = &CycloNumber::one(r) - &zeta;
    let q = u.exact_div(&v).unwrap();
    println!("(1 - zeta^3)/(1 - zeta) = {q}");
    assert_eq!(q.xi_valuation(), Some(0));

    // denominators coprime to r are welcome: 1/2 exists mod 7
    let half = CycloNumber::from_rational(r, &rat(1, 2)).unwrap();
    println!("1/2 in Z_(7)[zeta] = {half}");

    // p_r keeps coefficients mod r up to degree rbar = (r-1-n(n-1))/2;
    // for n = 2, rbar = (7-3)/2 = 2
    let value = &CycloNumber::from_integer(r, 10) + &x.pow(2).scaled(&rat(3, 1)).unwrap();
    let residue = value.reduce_p_r(2).unwrap();
    println!("p_7(10 + 3x^2) = {:?} (degree <= {})", residue.coeffs(), residue.rbar());
    assert_eq!(residue.coeffs(), &[3, 0, 3]);

    // p_r is a ring map: residues multiply like the numbers they came from
    let lhs = (&value * &unit).reduce_p_r(2).unwrap();
    let rhs = value.reduce_p_r(2).unwrap().mul(&unit.reduce_p_r(2).unwrap());
    println!("p_7(u*v) = {:?} = p_7(u)*p_7(v) = {:?}", lhs.coeffs(), rhs.coeffs());
    assert_eq!(lhs.coeffs(), rhs.coeffs());
}
