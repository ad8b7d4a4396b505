//! Tour of the sl_n root data: Cartan matrix, Weyl vector, positive
//! roots, the Weyl group, and the two enumeration domains (shifted box
//! and dominant alcove) that every sum in the crate runs over.
//!
//! ```bash
//! cargo run --example root_systems
//! ```

use lenstau::{RootSystem, Weight};

fn main() {
    let rs = RootSystem::new(3).unwrap();
    println!("sl_3: rank {}, {} positive roots", rs.rank(), rs.positive_roots().len());
    println!("Cartan matrix: {:?}", rs.cartan());
    println!("rho (fundamental-weight coords): {:?}", rs.rho().coords());
    println!("(rho|rho) = {}", rs.rho_norm_sq());

    // the inner product is the Killing form normalized so roots have
    // square length 2; simple roots pair through the Cartan matrix
    let a1 = rs.simple_root(0);
    let a2 = rs.simple_root(1);
    println!("(a1|a1) = {}, (a1|a2) = {}", rs.inner_product(&a1, &a1), rs.inner_product(&a1, &a2));

    // the Weyl group of sl_n is the symmetric group S_n
    let group = rs.weyl_group();
    println!("Weyl group order: {}", group.len());
    let signs: i64 = group.iter().map(|w| w.sign()).sum();
    println!("sum of signs: {signs}");

    // a weight is in the root lattice iff its alpha-coordinates are
    // integers; lambda_1 is not, rho = a1 + a2 is
    let lambda1 = Weight::new(vec![1, 0]);
    println!("lambda_1 in root lattice: {}", rs.in_root_lattice(&lambda1));
    println!("rho in root lattice:      {}", rs.in_root_lattice(rs.rho()));

    // box domain: rho + sum k_i alpha_i with 0 <= k_i < r. The Weyl
    // group folds it onto the dominant alcove n! times over, up to
    // wall points that vanish in every character sum.
    let r = 7;
    let box_count = rs.box_points(r).unwrap().count();
    let alcove = rs.alcove_points(r);
    println!("r = {r}: box has {box_count} points, dominant alcove {}", alcove.len());

    // reduce an arbitrary weight into the dominant chamber
    let mu = Weight::new(vec![-2, 5]);
    match rs.reduce_to_dominant(&mu) {
        Some((w, dom)) => println!(
            "{:?} = w({:?}) with sign {}",
            mu.coords(),
            dom.coords(),
            w.sign()
        ),
        None => println!("{:?} lies on a chamber wall", mu.coords()),
    }

    // A/2 = P^t D P over Q: the quadratic form diagonalizes with the
    // partial quotients n/1, ... as diagonal entries
    let (p, d) = rs.cartan_half_factorization();
    let diag: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    println!("diagonal of D: [{}]", diag.join(", "));
    assert_eq!(p.len(), rs.rank());
}
