//! The Macdonald Plancherel density for Sp_{2a} on the compact dual torus,
//! lattice (product trapezoid) quadrature over that torus, and the exact
//! residue oracle for rank 1.
//!
//! The density at a unitary point t is
//!
//! ```text
//!   (1/(2^a a!)) * prod_{alpha in Phi(B_a)} (1 - t^alpha)
//!                / [(1 - 1/q)^a * prod_{alpha} (1 - t^alpha / q)]
//! ```
//!
//! computed over positive roots as |1 - t^alpha|^2 factors, so the value is
//! manifestly real and nonnegative. All quadrature sums run in a fixed
//! chunked order (one theta_1 row per chunk), so results are bit-identical
//! regardless of the worker count.

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::rational_to_f64;
use crate::roots::{Family, RootSystem};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuadError {
    #[error("resolution {0} must be a power of two >= 8")]
    BadResolution(usize),
    #[error("rank {0} not supported for quadrature (a <= 3)")]
    RankUnsupported(usize),
    #[error("grid {0}^{1} exceeds the supported size")]
    GridTooLarge(usize, usize),
    #[error("residue oracle needs 0 < c < 1")]
    ResidueParamOutOfRange,
    #[error("quadrature did not converge: |I(2N) - I(N)| = {delta:e} > {tol:e} at N = {n}")]
    NotConverged { n: usize, delta: f64, tol: f64 },
}

/// A point of the compact torus, by angles in [0, 1).
#[derive(Clone, Debug)]
pub struct TorusPoint {
    pub angles: Vec<f64>,
}

impl TorusPoint {
    pub fn new(angles: Vec<f64>) -> Self {
        TorusPoint { angles: angles.into_iter().map(|x| x.rem_euclid(1.0)).collect() }
    }
}

/// Lattice resolution and worker count for the fixed-order reduction.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    pub resolution: usize,
    pub jobs: usize,
}

impl QuadratureSpec {
    pub fn new(resolution: usize, jobs: usize) -> Result<Self, QuadError> {
        if resolution < 8 || !resolution.is_power_of_two() {
            return Err(QuadError::BadResolution(resolution));
        }
        Ok(QuadratureSpec { resolution, jobs: jobs.max(1) })
    }

    pub fn with_resolution(self, resolution: usize) -> Result<Self, QuadError> {
        Self::new(resolution, self.jobs)
    }
}

const MAX_GRID: usize = 1 << 27; // 512^3

/// Shared cos/sin lookup for angles that are multiples of 1/n; keeps the
/// hot loops in integer index arithmetic.
pub struct TrigTables {
    n: usize,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl TrigTables {
    pub fn new(n: usize) -> Self {
        let tau = 2.0 * std::f64::consts::PI;
        let cos = (0..n).map(|m| (tau * m as f64 / n as f64).cos()).collect();
        let sin = (0..n).map(|m| (tau * m as f64 / n as f64).sin()).collect();
        TrigTables { n, cos, sin }
    }

    #[inline]
    pub fn phase(&self, idx: &[usize], weight: &[i64]) -> usize {
        let n = self.n as i64;
        let mut acc: i64 = 0;
        for (&i, &w) in idx.iter().zip(weight) {
            acc += (i as i64) * w;
        }
        acc.rem_euclid(n) as usize
    }

    #[inline]
    pub fn cos_at(&self, m: usize) -> f64 {
        self.cos[m]
    }

    #[inline]
    pub fn complex_at(&self, m: usize) -> (f64, f64) {
        (self.cos[m], self.sin[m])
    }
}

/// Macdonald density evaluator for fixed (a, q).
pub struct MacdonaldDensity {
    rank: usize,
    qinv: f64,
    positive_roots: Vec<Vec<i64>>,
    all_roots: Vec<Vec<i64>>,
    norm: f64,
}

impl MacdonaldDensity {
    pub fn new(rank: usize, q: u64) -> Result<Self, QuadError> {
        let rs = RootSystem::build(Family::B, rank)
            .map_err(|_| QuadError::RankUnsupported(rank))?;
        let qinv = 1.0 / q as f64;
        let order = rs.weyl_group_order() as f64;
        let norm = 1.0 / (order * (1.0 - qinv).powi(rank as i32));
        Ok(MacdonaldDensity {
            rank,
            qinv,
            positive_roots: rs.positive_roots(),
            all_roots: rs.roots().to_vec(),
            norm,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Density at a torus point given by angles.
    pub fn eval(&self, t: &TorusPoint) -> f64 {
        assert_eq!(t.angles.len(), self.rank);
        let tau = 2.0 * std::f64::consts::PI;
        let mut num = 1.0;
        let mut den = 1.0;
        for alpha in &self.positive_roots {
            let phase: f64 = alpha.iter().zip(&t.angles).map(|(&a, &th)| a as f64 * th).sum();
            let c = (tau * phase).cos();
            num *= 2.0 - 2.0 * c;
            den *= 1.0 - 2.0 * self.qinv * c + self.qinv * self.qinv;
        }
        self.norm * num / den
    }

    /// Density at a lattice point, via the shared trig tables.
    #[inline]
    pub fn eval_idx(&self, idx: &[usize], tables: &TrigTables) -> f64 {
        let mut num = 1.0;
        let mut den = 1.0;
        for alpha in &self.positive_roots {
            let c = tables.cos_at(tables.phase(idx, alpha));
            num *= 2.0 - 2.0 * c;
            den *= 1.0 - 2.0 * self.qinv * c + self.qinv * self.qinv;
        }
        self.norm * num / den
    }

    /// Reference evaluation as the full complex product over all roots,
    /// without the |.|^2 pairing; used to cross-check realness.
    pub fn eval_unpaired_complex(&self, t: &TorusPoint) -> (f64, f64) {
        let tau = 2.0 * std::f64::consts::PI;
        let mut num = (1.0, 0.0);
        let mut den = (1.0, 0.0);
        let cmul = |x: (f64, f64), y: (f64, f64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        for alpha in &self.all_roots {
            let phase: f64 = alpha.iter().zip(&t.angles).map(|(&a, &th)| a as f64 * th).sum();
            let (c, s) = ((tau * phase).cos(), (tau * phase).sin());
            num = cmul(num, (1.0 - c, -s));
            den = cmul(den, (1.0 - self.qinv * c, -self.qinv * s));
        }
        let d2 = den.0 * den.0 + den.1 * den.1;
        let re = (num.0 * den.0 + num.1 * den.1) / d2;
        let im = (num.1 * den.0 - num.0 * den.1) / d2;
        (self.norm * re, self.norm * im)
    }
}

/// Mean of `f` over the uniform N^a lattice, with the fixed-order chunked
/// reduction (chunks indexed by the first coordinate, summed in index
/// order; within a chunk the remaining coordinates run lexicographically).
pub fn integrate_torus<F>(f: F, rank: usize, spec: &QuadratureSpec) -> Result<f64, QuadError>
where
    F: Fn(&TorusPoint) -> f64 + Sync,
{
    let n = spec.resolution;
    let g = |idx: &[usize]| {
        let angles: Vec<f64> = idx.iter().map(|&i| i as f64 / n as f64).collect();
        f(&TorusPoint { angles })
    };
    integrate_lattice(g, rank, spec)
}

/// Lattice-index form of the integrator; integrands receive the integer
/// multi-index directly.
pub fn integrate_lattice<F>(f: F, rank: usize, spec: &QuadratureSpec) -> Result<f64, QuadError>
where
    F: Fn(&[usize]) -> f64 + Sync,
{
    if rank == 0 || rank > 3 {
        return Err(QuadError::RankUnsupported(rank));
    }
    let n = spec.resolution;
    if n < 8 || !n.is_power_of_two() {
        return Err(QuadError::BadResolution(n));
    }
    let total = n.checked_pow(rank as u32).filter(|&t| t <= MAX_GRID)
        .ok_or(QuadError::GridTooLarge(n, rank))?;
    let inner = total / n;
    let jobs = spec.jobs.max(1).min(n);

    let chunk_sum = |first: usize| -> f64 {
        let mut idx = vec![0usize; rank];
        idx[0] = first;
        let mut acc = 0.0;
        for flat in 0..inner {
            let mut rem = flat;
            for d in (1..rank).rev() {
                idx[d] = rem % n;
                rem /= n;
            }
            acc += f(&idx);
        }
        acc
    };

    let mut chunks = vec![0.0f64; n];
    if jobs == 1 {
        for (first, slot) in chunks.iter_mut().enumerate() {
            *slot = chunk_sum(first);
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let results = std::sync::Mutex::new(vec![0.0f64; n]);
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| {
                    let mut local: Vec<(usize, f64)> = Vec::new();
                    loop {
                        let first = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if first >= n {
                            break;
                        }
                        local.push((first, chunk_sum(first)));
                    }
                    let mut guard = results.lock().unwrap();
                    for (i, v) in local {
                        guard[i] = v;
                    }
                });
            }
        });
        chunks = results.into_inner().unwrap();
    }
    // fixed-order reduction over chunk index
    let mut acc = 0.0;
    for v in &chunks {
        acc += v;
    }
    Ok(acc / total as f64)
}

/// Total Plancherel mass of the Macdonald density at resolution `spec`.
pub fn plancherel_mass(rank: usize, q: u64, spec: &QuadratureSpec) -> Result<f64, QuadError> {
    let density = MacdonaldDensity::new(rank, q)?;
    let tables = TrigTables::new(spec.resolution);
    integrate_lattice(|idx| density.eval_idx(idx, &tables), rank, spec)
}

/// Exact value of the rank-1 contour integral
/// (1/2) ∮ (2 - t - t^{-1}) / [(1-c)(1-ct)(1-c t^{-1})] dt/(2 pi i t)
/// by residues at t = c and t = 0: equal to 1/(1-c^2).
pub fn residue_mass_rank1(c: &BigRational) -> Result<BigRational, QuadError> {
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::one();
    if *c <= zero || *c >= one {
        return Err(QuadError::ResidueParamOutOfRange);
    }
    Ok((one.clone() - c * c).recip())
}

/// Convergence-checked mass: evaluates at N and 2N and errors out when the
/// doubling moves the value by more than `tol`.
pub fn plancherel_mass_converged(
    rank: usize,
    q: u64,
    spec: &QuadratureSpec,
    tol: f64,
) -> Result<f64, QuadError> {
    let v = plancherel_mass(rank, q, spec)?;
    let doubled = spec.with_resolution(spec.resolution * 2)?;
    let v2 = plancherel_mass(rank, q, &doubled)?;
    let delta = (v - v2).abs();
    if delta > tol {
        return Err(QuadError::NotConverged { n: spec.resolution, delta, tol });
    }
    Ok(v)
}

pub fn rational_as_f64(x: &BigRational) -> f64 {
    rational_to_f64(x)
}
