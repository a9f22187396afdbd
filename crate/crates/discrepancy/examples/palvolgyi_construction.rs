//! The recursive pair construction: two systems of hereditary discrepancy 1
//! whose union forces a monochromatic set under every 2-coloring.
//!
//! ```bash
//! cargo run --release --example palvolgyi_construction
//! ```

use discrepancy::core::{restrict, union_tagged, GroundSubset};
use discrepancy::disc::{disc_exact, herdisc_exact};
use discrepancy::generators::{palvolgyi, palvolgyi_coloring, verify_mono_property, PairSide};

fn main() {
    let pair = palvolgyi(2, 2, 1 << 20).unwrap();
    println!("(k,l) = (2,2) on n = {}", pair.f1.n());
    println!("  f1 = {:?}", pair.f1.sets());
    println!("  f2 = {:?}", pair.f2.sets());

    // each family alone is hereditarily trivial
    let h1 = herdisc_exact(&pair.f1, 1 << 30).unwrap();
    let h2 = herdisc_exact(&pair.f2, 1 << 30).unwrap();
    println!("  herdisc(f1) = {}, herdisc(f2) = {}", h1.value, h2.value);

    // but their union cannot be balanced
    let union = union_tagged(&[pair.f1.clone(), pair.f2.clone()]).unwrap();
    let d = disc_exact(&union, 1 << 30).unwrap();
    println!("  disc(f1 ∪ f2) = {}", d.value);

    // reason: every red/blue coloring leaves a monochromatic set
    let verdict = verify_mono_property(&pair.f1, &pair.f2, 1 << 20).unwrap();
    println!("  monochromatic set unavoidable: {}", verdict.holds());

    // the hereditary bound comes from an explicit recursive coloring: on any
    // subset, every f1-set meets it with signed sum 0 or 1
    let w = GroundSubset::new(vec![1, 3, 4, 5]);
    let chi = palvolgyi_coloring(&pair, &w, PairSide::First).unwrap();
    println!("  coloring of W = {:?}: {:?}", w.members(), chi.values());
    let restricted = restrict(&pair.f1, &w).unwrap();
    for (set, orig) in restricted.sets().iter().zip(pair.f1.sets()) {
        let sum: i64 = set.iter().map(|&e| i64::from(chi.value(e))).sum();
        println!("    f1 set {orig:?} meets W with sum {sum}");
    }

    // the same holds one level up: (3,3) lives on 19 elements
    let pair = palvolgyi(3, 3, 1 << 20).unwrap();
    let union = union_tagged(&[pair.f1.clone(), pair.f2.clone()]).unwrap();
    let d = disc_exact(&union, 1 << 32).unwrap();
    println!("(k,l) = (3,3) on n = {}: disc(f1 ∪ f2) = {}", pair.f1.n(), d.value);
}
