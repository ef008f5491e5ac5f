//! Computes the graded slice for a range of hook parameters by exact
//! matrix linear algebra and checks it against the closed form.
//!
//! Run with: cargo run --example graded_slice

use plancherel::lfactors::hook_slice_closed_form;
use plancherel::lie::slice::{rho_l_of_x, slice_v_x, x_geometry};

fn main() {
    println!("graded slices from the matrix oracle (centralizer + trace-form complement)\n");
    for k in 2..=6usize {
        for a in 1..k {
            let oracle = slice_v_x(k, a).expect("in range");
            let closed = hook_slice_closed_form(k, a).expect("in range");
            let geom = x_geometry(k, a).expect("in range");
            let rho = rho_l_of_x(k, a).expect("in range");
            let matches = if oracle == closed { "=" } else { "!=" };
            println!(
                "(k,a) = ({k},{a}):  {}  {} closed form   [dim {} = k+a]",
                oracle.describe(),
                matches,
                oracle.dim()
            );
            println!(
                "            geometry: dim L = {}, dim U = {}, dim X = {};  rho_L(X) = {:?}",
                geom.dim_l, geom.dim_u, geom.dim_x, rho
            );
            assert_eq!(oracle, closed);
        }
    }
    println!("\nall slices match their closed forms");
}
