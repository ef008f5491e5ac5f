//! Evaluates the spectral density of the basic function on a theta-grid,
//! writes it to CSV, and checks that its lattice mean reproduces the
//! renormalized volume of X.
//!
//! Run with: cargo run --release --example spectral_density_grid

use plancherel::counts::x_volume_renormalized;
use plancherel::density::{integrate_lattice, rational_as_f64, QuadratureSpec, TrigTables};
use plancherel::verify::SpectralDensity;

fn main() {
    let (k, a, q, n) = (3usize, 1usize, 3u64, 1024usize);
    let density = SpectralDensity::new(k, a, q).unwrap();
    let tables = TrigTables::new(n);

    let path = std::env::temp_dir().join("spectral_density_3_1_3.csv");
    let mut body = String::from("theta_1,density\n");
    for i in 0..n {
        body.push_str(&format!("{},{}\n", i as f64 / n as f64, density.eval_idx(&[i], &tables)));
    }
    std::fs::write(&path, &body).unwrap();
    println!("wrote {} rows to {}", n, path.display());

    let spec = QuadratureSpec::new(n, 1).unwrap();
    let mean = integrate_lattice(|idx| density.eval_idx(idx, &tables), a, &spec).unwrap();
    let exact = x_volume_renormalized(k, a, q).unwrap();
    println!(
        "lattice mean = {mean:.15}; renormalized volume of X = {exact} = {:.15}",
        rational_as_f64(&exact)
    );
    println!("difference: {:.2e}", (mean - rational_as_f64(&exact)).abs());
}
