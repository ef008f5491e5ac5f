//! The graded slice and the geometry of the hook case (k, a).
//!
//! For the hook pair the slice is computed from scratch by exact linear
//! algebra: build the sl2-triple for [2k-2a-1, 1^{2a+1}] inside so_{2k},
//! embed so_{2a+1} as the isometry algebra of the trivial multiplicity
//! space, take the trace-form orthogonal complement inside the centralizer
//! of e, and decompose under the embedded Cartan torus and the ad-grading
//! (shifted by 2). The closed form this must reproduce lives in
//! [`crate::lfactors::hook_slice_closed_form`].

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::{nullspace, row_rank, QMatrix};
use super::{assemble, build_algebra, combine, grading_decomposition, Block, BlockKind, Flavor,
            LieError, Partition};
use crate::lfactors::GradedCharacter;

/// The parameter pair (k, a) with its partitions and flag geometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookCase {
    pub k: usize,
    pub a: usize,
    pub gamma: Partition,
    pub gamma_dual: Partition,
    pub dim_u: usize,
    pub dim_l: usize,
    pub dim_x: usize,
}

fn check_range(k: usize, a: usize) -> Result<(), LieError> {
    if a < 1 || a + 1 > k {
        return Err(LieError::ParameterRange);
    }
    Ok(())
}

fn hook_partition(m: usize, ones: usize) -> Partition {
    let mut parts = vec![m];
    parts.extend(std::iter::repeat(1).take(ones));
    if m == 1 {
        parts = vec![1; ones + 1];
    }
    Partition::new(parts, Flavor::Orthogonal).expect("hook partitions are orthogonal")
}

/// gamma = [2a-1, 1^{2k-2a+1}], the orbit defining the unipotent U.
pub fn gamma_partition(k: usize, a: usize) -> Result<Partition, LieError> {
    check_range(k, a)?;
    Ok(hook_partition(2 * a - 1, 2 * k - 2 * a + 1))
}

/// gamma_dual = [2k-2a-1, 1^{2a+1}], the orbit defining the slice.
pub fn gamma_dual_partition(k: usize, a: usize) -> Result<Partition, LieError> {
    check_range(k, a)?;
    Ok(hook_partition(2 * k - 2 * a - 1, 2 * a + 1))
}

/// Flag geometry of X = LU \ G: dim L from the fixed subspace, dim U as
/// the positive part of the gamma-grading, dim X as the complement in
/// so_{2k}.
pub fn x_geometry(k: usize, a: usize) -> Result<HookCase, LieError> {
    check_range(k, a)?;
    let gamma = gamma_partition(k, a)?;
    let gamma_dual = gamma_dual_partition(k, a)?;
    let n = 2 * k;
    let alg = build_algebra(Flavor::Orthogonal, n)?;
    let triple = super::sl2_from_partition(&alg, &gamma)?;
    let grading = grading_decomposition(&alg, &triple.h);
    let dim_u: usize = grading.iter().filter(|(&w, _)| w > 0).map(|(_, &d)| d).sum();
    let l_size = 2 * k - 2 * a + 1;
    let dim_l = l_size * (l_size - 1) / 2;
    let dim_g = k * (2 * k - 1);
    let dim_x = dim_g - dim_l - dim_u;
    Ok(HookCase { k, a, gamma, gamma_dual, dim_u, dim_l, dim_x })
}

/// rho_{L(X)}: half the dominant h-weight vector of the hook sl2 on the
/// standard 2k-space, in D_k torus coordinates (length k).
pub fn rho_l_of_x(k: usize, a: usize) -> Result<Vec<i64>, LieError> {
    check_range(k, a)?;
    let m = 2 * k - 2 * a - 1;
    let mut positives: Vec<i64> = (0..m as i64)
        .map(|i| m as i64 - 1 - 2 * i)
        .filter(|&w| w > 0)
        .collect();
    positives.sort_unstable_by_key(|x| -*x);
    let mut rho: Vec<i64> = positives
        .iter()
        .map(|w| {
            debug_assert!(w % 2 == 0);
            w / 2
        })
        .collect();
    rho.resize(k, 0);
    Ok(rho)
}

/// The graded slice, computed by the matrix oracle.
pub fn slice_v_x(k: usize, a: usize) -> Result<GradedCharacter, LieError> {
    check_range(k, a)?;
    let n = 2 * k;
    let m = 2 * k - 2 * a - 1;
    let alg = build_algebra(Flavor::Orthogonal, n)?;

    // one m-chain, then the trivial multiplicity space as a hyperbolic
    // pairs + one self-paired center
    let mut blocks = vec![Block { m, kind: BlockKind::Single }];
    for _ in 0..a {
        blocks.push(Block { m: 1, kind: BlockKind::Paired });
    }
    blocks.push(Block { m: 1, kind: BlockKind::Single });
    let asm = assemble(&alg, &blocks);
    let e = &asm.triple.e;
    let h_diag: Vec<i64> = asm.triple.h_weights();

    // standard-coordinate columns spanning the multiplicity space W
    let mut w_cols: Vec<Vec<BigRational>> = Vec::new();
    let mut pair_slots: Vec<usize> = Vec::new(); // slot of x_i for the Cartan
    for b in 1..=a {
        for copy in 0..2 {
            let abs = asm.abs_index[b][copy][0];
            let col: Vec<BigRational> = (0..n).map(|r| asm.t.get(r, abs).clone()).collect();
            if copy == 0 {
                let slot = col
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("pair representative has a slot");
                pair_slots.push(slot);
            }
            w_cols.push(col);
        }
    }
    let center_abs = asm.abs_index[a + 1][0][0];
    w_cols.push((0..n).map(|r| asm.t.get(r, center_abs).clone()).collect());
    let n_w = w_cols.len();
    debug_assert_eq!(n_w, 2 * a + 1);

    // isometry algebra of W, expressed inside so_{2k}
    let mut w_mat = QMatrix::zero(n, n_w);
    for (c, col) in w_cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            w_mat.set(r, c, v.clone());
        }
    }
    let gram_w = w_mat.transpose().mul(alg.gram()).mul(&w_mat);
    let gram_w_inv = gram_w.inverse().expect("restricted form is nondegenerate");
    let so_w: Vec<QMatrix> = {
        // solve A^T G + G A = 0 on n_w x n_w unknowns
        let mut sys = QMatrix::zero(n_w * n_w, n_w * n_w);
        for i in 0..n_w {
            for j in 0..n_w {
                // condition entry (i, j): sum_k A_ki G_kj + G_ik A_kj
                for kk in 0..n_w {
                    let row = i * n_w + j;
                    let v1 = sys.get(row, kk * n_w + i) + gram_w.get(kk, j);
                    sys.set(row, kk * n_w + i, v1);
                    let v2 = sys.get(row, kk * n_w + j) + gram_w.get(i, kk);
                    sys.set(row, kk * n_w + j, v2);
                }
            }
        }
        nullspace(&sys)
            .into_iter()
            .map(|flat| {
                let mut aa = QMatrix::zero(n_w, n_w);
                for i in 0..n_w {
                    for j in 0..n_w {
                        aa.set(i, j, flat[i * n_w + j].clone());
                    }
                }
                // x_A = W A G^-1 W^T J acts as A on W and kills W-perp
                w_mat.mul(&aa).mul(&gram_w_inv).mul(&w_mat.transpose()).mul(alg.gram())
            })
            .collect()
    };
    debug_assert_eq!(so_w.len(), a * (2 * a + 1));
    for s in &so_w {
        debug_assert!(alg.contains(s));
        debug_assert!(e.commutator(s).is_zero());
    }

    // kernel system: [e, x] = 0 and trace(x * s) = 0 for s in so(W)
    let d = alg.dim();
    let n2 = n * n;
    let mut sys = QMatrix::zero(n2 + so_w.len(), d);
    for (col, b) in alg.basis().iter().enumerate() {
        let br = e.commutator(b);
        for r in 0..n {
            for c in 0..n {
                sys.set(r * n + c, col, br.get(r, c).clone());
            }
        }
        for (j, s) in so_w.iter().enumerate() {
            sys.set(n2 + j, col, b.trace_product(s));
        }
    }
    let kernel = nullspace(&sys);
    let slice_dim = kernel.len();
    let mats: Vec<QMatrix> = kernel.iter().map(|c| combine(&alg, c)).collect();

    // joint eigenspace decomposition under the embedded Cartan (diagonal
    // +1/-1 at the hyperbolic pair slots) and the ad-grading of h
    let mut cartan_diags: Vec<Vec<i64>> = Vec::new();
    for &s in &pair_slots {
        let mut diag = vec![0i64; n];
        diag[s] = 1;
        diag[n - 1 - s] = -1;
        cartan_diags.push(diag);
    }
    type Bucket = (Vec<i64>, i64); // (torus weight, ad-weight)
    let mut positions: BTreeMap<Bucket, Vec<(usize, usize)>> = BTreeMap::new();
    for r in 0..n {
        for c in 0..n {
            let weight: Vec<i64> = cartan_diags.iter().map(|d| d[r] - d[c]).collect();
            let ad = h_diag[r] - h_diag[c];
            positions.entry((weight, ad)).or_default().push((r, c));
        }
    }
    let mut entries: Vec<(Vec<i64>, i64, usize)> = Vec::new();
    let mut total = 0usize;
    for ((weight, ad), pos) in &positions {
        let rows: Vec<Vec<BigRational>> = mats
            .iter()
            .map(|x| pos.iter().map(|&(r, c)| x.get(r, c).clone()).collect::<Vec<_>>())
            .filter(|row| row.iter().any(|v| !v.is_zero()))
            .collect();
        if rows.is_empty() {
            continue;
        }
        let mult = row_rank(&rows);
        if mult == 0 {
            continue;
        }
        let grade = ad + 2;
        if grade % 2 != 0 {
            return Err(LieError::OddGrade(grade));
        }
        total += mult;
        entries.push((weight.clone(), grade, mult));
    }
    assert_eq!(total, slice_dim, "bucket multiplicities must exhaust the slice");
    Ok(GradedCharacter::new(a, entries))
}

#[derive(Serialize, Deserialize)]
struct SliceCacheFile {
    k: usize,
    a: usize,
    entries: Vec<SliceCacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct SliceCacheEntry {
    weight: Vec<i64>,
    grade: i64,
    mult: usize,
}

pub fn slice_cache_path(dir: &Path, k: usize, a: usize) -> PathBuf {
    dir.join(format!("slice_k{}_a{}.json", k, a))
}

/// Writes the slice to the cache directory; the file is canonical JSON of
/// the sorted entry list, so rewriting is byte-stable.
pub fn write_slice_cache(dir: &Path, k: usize, a: usize, ch: &GradedCharacter) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let file = SliceCacheFile {
        k,
        a,
        entries: ch
            .entries()
            .iter()
            .map(|e| SliceCacheEntry { weight: e.weight.clone(), grade: e.grade, mult: e.mult })
            .collect(),
    };
    let body = serde_json::to_string_pretty(&file).expect("serializable");
    fs::write(slice_cache_path(dir, k, a), body + "\n")
}

/// Reads a cached slice if present. Corrupt or mismatched files are
/// treated as absent (the cache is purely an optimization).
pub fn read_slice_cache(dir: &Path, k: usize, a: usize) -> Option<GradedCharacter> {
    let body = fs::read_to_string(slice_cache_path(dir, k, a)).ok()?;
    let file: SliceCacheFile = serde_json::from_str(&body).ok()?;
    if file.k != k || file.a != a || file.entries.iter().any(|e| e.weight.len() != a) {
        return None;
    }
    Some(GradedCharacter::new(
        a,
        file.entries.into_iter().map(|e| (e.weight, e.grade, e.mult)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfactors::hook_slice_closed_form;
    use crate::roots::{Family, RootSystem};

    #[test]
    fn parameter_range_enforced() {
        assert!(matches!(slice_v_x(2, 2), Err(LieError::ParameterRange)));
        assert!(matches!(x_geometry(3, 0), Err(LieError::ParameterRange)));
        assert!(matches!(rho_l_of_x(3, 3), Err(LieError::ParameterRange)));
    }

    #[test]
    fn slice_3_1_matches_closed_form() {
        let got = slice_v_x(3, 1).unwrap();
        assert_eq!(got, hook_slice_closed_form(3, 1).unwrap());
        assert_eq!(got.describe(), "std_3@4 + triv@4 (dim 4)");
    }

    #[test]
    fn slice_5_2_matches_closed_form() {
        let got = slice_v_x(5, 2).unwrap();
        assert_eq!(got, hook_slice_closed_form(5, 2).unwrap());
        assert_eq!(got.describe(), "std_5@6 + triv@4 + triv@8 (dim 7)");
    }

    #[test]
    fn slice_regular_case_is_std_at_grade_two() {
        // a = k-1: std_{2k-1} at grade 2, no trivial summands
        for k in 2..=4usize {
            let got = slice_v_x(k, k - 1).unwrap();
            assert_eq!(got, hook_slice_closed_form(k, k - 1).unwrap());
            assert_eq!(got.dim(), 2 * k - 1);
        }
    }

    #[test]
    fn slice_dimension_is_k_plus_a() {
        for k in 2..=6usize {
            for a in 1..k {
                let got = slice_v_x(k, a).unwrap();
                assert_eq!(got.dim(), k + a, "(k,a)=({k},{a})");
            }
        }
    }

    #[test]
    fn slice_weights_are_weyl_stable() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let ch = slice_v_x(4, 2).unwrap();
        for w in rs.weyl_elements(false) {
            assert_eq!(ch.weyl_image(&w), ch);
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_l_of_x(3, 1).unwrap(), vec![1, 0, 0]);
        assert_eq!(rho_l_of_x(5, 2).unwrap(), vec![2, 1, 0, 0, 0]);
        assert_eq!(rho_l_of_x(4, 3).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn geometry_examples() {
        let g31 = x_geometry(3, 1).unwrap();
        assert_eq!((g31.dim_l, g31.dim_u, g31.dim_x), (10, 0, 5));
        let g32 = x_geometry(3, 2).unwrap();
        assert_eq!((g32.dim_l, g32.dim_u, g32.dim_x), (3, 4, 8));
        let g42 = x_geometry(4, 2).unwrap();
        assert_eq!(g42.dim_l, 10);
        assert_eq!(g42.dim_x, 28 - 10 - g42.dim_u);
        assert_eq!(g42.dim_u, 6);
    }

    #[test]
    fn cache_roundtrip_is_identical() {
        let dir = std::env::temp_dir().join("plancherel-slice-cache-test");
        let ch = slice_v_x(3, 2).unwrap();
        write_slice_cache(&dir, 3, 2, &ch).unwrap();
        let back = read_slice_cache(&dir, 3, 2).unwrap();
        assert_eq!(back, ch);
        // byte-identical on rewrite
        let p = slice_cache_path(&dir, 3, 2);
        let first = fs::read(&p).unwrap();
        write_slice_cache(&dir, 3, 2, &back).unwrap();
        let second = fs::read(&p).unwrap();
        assert_eq!(first, second);
        let _ = fs::remove_dir_all(&dir);
    }
}
