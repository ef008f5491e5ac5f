//! Lifts Satake parameters from the rank-a dual torus to the rank-k torus
//! of the even orthogonal group and exhibits the eigenvalue bookkeeping:
//! the q-power string matches rho_L(X) and the standard-representation
//! eigenvalue multiset restricts as expected.
//!
//! Run with: cargo run --example satake_lift

use plancherel::algebra::rat;
use plancherel::lfactors::{lift_q_exponents, lift_satake, std_eigenvalues_complex, SatakeParam};
use plancherel::lie::slice::rho_l_of_x;

fn main() {
    for (k, a, q) in [(3usize, 1usize, 3u64), (5, 2, 3), (4, 3, 3)] {
        println!("(k,a) = ({k},{a}), q = {q}");
        let t = SatakeParam::exact((1..=a).map(|i| rat(i as i64 + 1, 2 * i as i64 + 3)).collect());
        let lifted = lift_satake(&t, k, q).unwrap();
        let coords: Vec<String> =
            lifted.as_exact().unwrap().iter().map(|c| c.to_string()).collect();
        println!("  lifted parameter: ({})", coords.join(", "));
        println!("  q-exponent string: {:?}", lift_q_exponents(k, a));
        println!("  rho_L(X):          {:?}", rho_l_of_x(k, a).unwrap());
        let eigen = std_eigenvalues_complex(&lifted);
        let mut display: Vec<String> = eigen.iter().map(|z| format!("{:.4}", z.re)).collect();
        display.sort();
        println!("  std_{} eigenvalues: [{}]\n", 2 * k, display.join(", "));
    }

    // a unitary parameter lifts the same way, with the angles untouched
    let t = SatakeParam::unitary(vec![0.21, 0.62]);
    let lifted = lift_satake(&t, 5, 3).unwrap();
    println!("unitary (0.21, 0.62) lifted to rank 5: {} coordinates", lifted.rank());
}
