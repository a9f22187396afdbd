//! Determinant lower bound witnesses, and the factor-2 relation to the
//! hereditary discrepancy.
//!
//! ```bash
//! cargo run --release --example determinant_lower_bound
//! ```

use num_bigint::BigInt;
use num_traits::Signed;

use discrepancy::core::SetSystem;
use discrepancy::detlb::{detlb_exact, detlb_greedy};
use discrepancy::disc::herdisc_exact;
use discrepancy::exactla::IntMatrix;
use discrepancy::generators::{random_system, sylvester_hadamard};

fn main() {
    // Hadamard matrices attain detlb = sqrt(order) with the full matrix
    for order in [4usize, 8] {
        let h = sylvester_hadamard(order).unwrap();
        let r = detlb_exact(&h, 1 << 24).unwrap();
        println!(
            "H_{order}: detlb = {:.6} via a {}x{} submatrix with det {}",
            r.witness.value(),
            r.witness.k(),
            r.witness.k(),
            r.witness.det_value
        );
        assert!(r.witness.verify(&h));
    }

    // the triangle system: all small minors are unimodular, the full 3x3 has det 2
    let triangle = SetSystem::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
    let a = IntMatrix::incidence(&triangle);
    let r = detlb_exact(&a, 1 << 20).unwrap();
    println!(
        "triangle: detlb = {:.6} = 2^(1/3), witness rows {:?} cols {:?}",
        r.witness.value(),
        r.witness.row_indices,
        r.witness.col_indices
    );

    // greedy volume maximization gives a sound (if not maximal) witness fast
    let g = detlb_greedy(&a, 3).unwrap();
    println!("triangle: greedy witness certifies {:.6}", g.value());
    assert!(g.value_log <= r.witness.value_log + 1e-12);

    // herdisc >= detlb / 2, compared exactly in integers: (2h)^k >= |det B|
    for seed in 0..5u64 {
        let f = random_system(7, 7, 0.5, seed).unwrap();
        let a = IntMatrix::incidence(&f);
        if a.is_zero() {
            continue;
        }
        let h = herdisc_exact(&f, 1 << 32).unwrap();
        let d = detlb_exact(&a, 1 << 24).unwrap();
        let holds = d.witness.det_value.abs()
            <= BigInt::from(2 * h.value).pow(d.witness.k() as u32);
        println!(
            "random seed {seed}: herdisc = {}, detlb = {:.4}, factor-2 bound holds: {holds}",
            h.value,
            d.witness.value()
        );
        assert!(holds);
    }
}
