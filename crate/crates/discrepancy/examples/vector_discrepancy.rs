//! Vector discrepancy: a primal unit-vector coloring plus an independently
//! checkable dual certificate from one interior-point solve.
//!
//! ```bash
//! cargo run --release --example vector_discrepancy
//! ```

use discrepancy::core::SetSystem;
use discrepancy::generators::random_system;
use discrepancy::vecdisc::{
    hervecdisc, solve_vecdisc, verify_certificate, HervecdiscMode, SolveStatus,
};

fn main() {
    let triangle = SetSystem::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
    let r = solve_vecdisc(&triangle, 1e-6, 200).unwrap();
    println!(
        "triangle: vecdisc in [{:.8}, {:.8}], gap {:.2e}, {} Newton steps",
        r.dual.certified_bound, r.primal.achieved_d, r.gap, r.iterations
    );
    assert_eq!(r.status, SolveStatus::Converged);

    // the optimal coloring places the three unit vectors at mutual angle 120°
    for (j, u) in r.primal.vectors.iter().enumerate() {
        let coords: Vec<String> = u.iter().map(|x| format!("{x:+.4}")).collect();
        println!("  u_{} = ({})", j + 1, coords.join(", "));
    }

    // the certificate (w, z) verifies with no reference to the solver
    let check = verify_certificate(&triangle, &r.dual, 1e-6).unwrap();
    println!(
        "certificate: valid = {}, certified lower bound = {:.8}",
        check.valid, check.bound
    );
    println!("  w = {:?}", r.dual.w.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>());
    println!("  z = {:?}", r.dual.z.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>());

    // a pair set has vector discrepancy zero: antipodal unit vectors
    let pair = SetSystem::new(2, vec![vec![1, 2]]).unwrap();
    let r = solve_vecdisc(&pair, 1e-6, 200).unwrap();
    println!("pair set: vecdisc = {:.2e} (antipodal optimum)", r.primal.achieved_d);

    // hereditary vector discrepancy, exact over all restrictions
    let f = random_system(6, 5, 0.5, 3).unwrap();
    let h = hervecdisc(&f, HervecdiscMode::Exact, 0, 1e-6, 200, 1 << 20).unwrap();
    println!(
        "random(6,5): hervecdisc = {:.6} on subset {:?} ({} solves)",
        h.value,
        h.witness_subset.members(),
        h.solves
    );
}
