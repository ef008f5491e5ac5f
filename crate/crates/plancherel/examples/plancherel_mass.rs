//! Integrates the Macdonald density over the compact dual torus and
//! compares the mass with the motive factor of Sp_{2a} (the reciprocal
//! Tamagawa volume), plus the exact residue oracle in rank 1.
//!
//! Run with: cargo run --release --example plancherel_mass

use plancherel::algebra::rat;
use plancherel::density::{plancherel_mass, rational_as_f64, residue_mass_rank1, QuadratureSpec};
use plancherel::lfactors::motive_delta;
use plancherel::roots::Family;

fn main() {
    println!("total mass of the Macdonald Plancherel density\n");
    for (a, q, n) in [(1usize, 3u64, 4096usize), (1, 5, 4096), (2, 3, 512), (2, 5, 512), (3, 3, 64)]
    {
        let spec = QuadratureSpec::new(n, 4).unwrap();
        let mass = plancherel_mass(a, q, &spec).unwrap();
        let exact = motive_delta(Family::C, a, q).unwrap();
        let exact_f = rational_as_f64(&exact);
        println!(
            "a = {a}, q = {q}, N = {n:>4}:  mass = {mass:.15}  vs  Delta_Sp(1) = {exact} = {exact_f:.15}  (err {:.2e})",
            (mass - exact_f).abs()
        );
    }
    println!("\nrank-1 residue oracle: the contour integral collapses to 1/(1-c^2)");
    for q in [3i64, 5, 7] {
        let exact = residue_mass_rank1(&rat(1, q)).unwrap();
        println!("q = {q}: residue value {exact} (the whole-group mass at c = 1/q)");
    }
}
