//! The exact L-factor identity behind the spectral density: the graded
//! L-value of the slice equals L(k-a, std) times a string of zeta factors,
//! as rational functions in the Satake variables and u = q^{-1/2}.
//!
//! Run with: cargo run --example lfactor_identities

use plancherel::algebra::zeta_symbolic;
use plancherel::lfactors::{graded_l_value_symbolic, l_factor_symbolic, std_char};
use plancherel::lie::slice::slice_v_x;
use plancherel::roots::Family;

fn main() {
    for (k, a) in [(3usize, 1usize), (4, 2), (5, 2)] {
        let vx = slice_v_x(k, a).unwrap();
        let lhs = graded_l_value_symbolic(&vx);
        let mut rhs = l_factor_symbolic(&std_char(Family::B, a), 2 * (k as i64 - a as i64));
        let mut zeta_desc = Vec::new();
        for j in 1..=(k - a - 1) {
            rhs = rhs.mul(&zeta_symbolic(2 * j as i64).unwrap());
            zeta_desc.push(format!("zeta({})", 2 * j));
        }
        let zeta_part = if zeta_desc.is_empty() {
            String::new()
        } else {
            format!(" * {}", zeta_desc.join(" * "))
        };
        println!("(k,a) = ({k},{a})");
        println!("  slice: {}", vx.describe());
        println!("  graded L-value of the slice:");
        println!("    {lhs}");
        println!("  L({}, std_{}){}:", k - a, 2 * a + 1, zeta_part);
        println!("    {rhs}");
        println!("  exactly equal: {}\n", lhs.equals(&rhs));
    }
}
