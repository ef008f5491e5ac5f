//! Explicit matrix models of so_N and sp_N over exact rationals, with
//! sl2-triples built from partitions, ad-gradings, and centralizers.
//!
//! Conventions: the Gram matrix is antidiagonal (split), so the diagonal
//! torus is a maximal split torus and every constructed `h` is diagonal.
//! An sl2-triple for a partition is assembled block by block: each part m
//! carries the m-dimensional irreducible with basis w_0..w_{m-1},
//! h w_i = (m-1-2i) w_i, f w_i = w_{i+1}, e w_i = i(m-i) w_{i-1}, and an
//! invariant pairing <w_i, w_{m-1-i}> = ±(-1)^i. Parts pair up hyperbolically
//! whenever possible; leftover odd parts contribute one self-paired
//! zero-weight vector each, which are matched in twos into hyperbolic
//! planes of the standard form.

mod matrix;
pub mod slice;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub use matrix::{nullspace, row_rank, QMatrix};

use crate::algebra::{rat, rat_int};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    Orthogonal,
    Symplectic,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid dimension {0} for {1:?} algebra")]
    InvalidDimension(usize, Flavor),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("require 1 <= a <= k-1")]
    ParameterRange,
    #[error("graded slice has an odd grade {0}; outside the even-orbit regime")]
    OddGrade(i64),
}

/// Partition labelling a nilpotent orbit, together with the flavor of the
/// ambient isometry algebra it must live in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<usize>,
    flavor: Flavor,
}

impl Partition {
    pub fn new(parts: Vec<usize>, flavor: Flavor) -> Result<Self, LieError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(LieError::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(LieError::InvalidPartition("parts must be weakly decreasing".into()));
        }
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        for (&p, &m) in &mult {
            match flavor {
                Flavor::Orthogonal if p % 2 == 0 && m % 2 != 0 => {
                    return Err(LieError::InvalidPartition(format!(
                        "orthogonal: even part {p} has odd multiplicity {m}"
                    )));
                }
                Flavor::Symplectic if p % 2 == 1 && m % 2 != 0 => {
                    return Err(LieError::InvalidPartition(format!(
                        "symplectic: odd part {p} has odd multiplicity {m}"
                    )));
                }
                _ => {}
            }
        }
        Ok(Partition { parts, flavor })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Hook type: [m, 1, 1, ..., 1] (trivial and one-part cases included).
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Vec<usize> {
        let max = self.parts[0];
        (1..=max).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect()
    }

    /// Centralizer dimension in the isometry algebra, by the standard
    /// partition formula; used as an independent cross-check on the
    /// matrix-kernel computation.
    pub fn centralizer_dim_formula(&self) -> usize {
        let conj = self.conjugate();
        let sq: usize = conj.iter().map(|&c| c * c).sum();
        match self.flavor {
            Flavor::Orthogonal => {
                let odd = self.parts.iter().filter(|&&p| p % 2 == 1).count();
                (sq - odd) / 2
            }
            Flavor::Symplectic => {
                let odd = self.parts.iter().filter(|&&p| p % 2 == 1).count();
                (sq + odd) / 2
            }
        }
    }
}

/// Matrix model of so_N (split, antidiagonal Gram) or sp_N (antidiagonal,
/// +1 above the center and -1 below).
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    pub flavor: Flavor,
    pub n: usize,
    gram: QMatrix,
    basis: Vec<QMatrix>,
}

pub fn build_algebra(flavor: Flavor, n: usize) -> Result<MatrixLieAlgebra, LieError> {
    match flavor {
        Flavor::Orthogonal if n < 2 => return Err(LieError::InvalidDimension(n, flavor)),
        Flavor::Symplectic if n < 2 || n % 2 != 0 => {
            return Err(LieError::InvalidDimension(n, flavor))
        }
        _ => {}
    }
    let gram = gram_matrix(flavor, n);
    let mut basis = Vec::new();
    match flavor {
        Flavor::Orthogonal => {
            // x = J y with y antisymmetric
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut y = QMatrix::zero(n, n);
                    y.set(i, j, rat_int(1));
                    y.set(j, i, rat_int(-1));
                    basis.push(gram.mul(&y));
                }
            }
        }
        Flavor::Symplectic => {
            // x = -J y with y symmetric (J^2 = -1)
            for i in 0..n {
                for j in i..n {
                    let mut y = QMatrix::zero(n, n);
                    y.set(i, j, rat_int(1));
                    if i != j {
                        y.set(j, i, rat_int(1));
                    }
                    basis.push(gram.mul(&y).neg());
                }
            }
        }
    }
    Ok(MatrixLieAlgebra { flavor, n, gram, basis })
}

fn gram_matrix(flavor: Flavor, n: usize) -> QMatrix {
    let mut j = QMatrix::zero(n, n);
    for i in 0..n {
        let v = match flavor {
            Flavor::Orthogonal => rat_int(1),
            Flavor::Symplectic => {
                if i < n / 2 {
                    rat_int(1)
                } else {
                    rat_int(-1)
                }
            }
        };
        j.set(i, n - 1 - i, v);
    }
    j
}

impl MatrixLieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    /// Membership in the isometry algebra: x^T J + J x = 0.
    pub fn contains(&self, x: &QMatrix) -> bool {
        x.transpose().mul(&self.gram).add(&self.gram.mul(x)).is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: QMatrix,
    pub h: QMatrix,
    pub f: QMatrix,
}

impl Sl2Triple {
    pub fn check_relations(&self) -> bool {
        let two_e = self.e.scale(&rat_int(2));
        let neg_two_f = self.f.scale(&rat_int(-2));
        self.h.commutator(&self.e) == two_e
            && self.h.commutator(&self.f) == neg_two_f
            && self.e.commutator(&self.f) == self.h
    }

    /// Diagonal of h as integers (h is diagonal by construction).
    pub fn h_weights(&self) -> Vec<i64> {
        self.h
            .diagonal()
            .iter()
            .map(|x| {
                assert!(x.is_integer());
                x.to_integer().to_i64().expect("small weight")
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BlockKind {
    Single,
    Paired,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Block {
    pub(crate) m: usize,
    pub(crate) kind: BlockKind,
}

impl Block {
    fn size(&self) -> usize {
        match self.kind {
            BlockKind::Single => self.m,
            BlockKind::Paired => 2 * self.m,
        }
    }
}

/// Outcome of the block assembly: the triple plus the change of basis,
/// kept so callers can transport distinguished subspaces (the trivial
/// multiplicity space) into standard coordinates.
pub(crate) struct Assembly {
    pub triple: Sl2Triple,
    /// Columns map abstract basis vectors to standard coordinates.
    pub t: QMatrix,
    /// Per block, per copy, the abstract index of each chain vector.
    pub abs_index: Vec<Vec<Vec<usize>>>,
}

fn blocks_from_partition(p: &Partition) -> Vec<Block> {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &part in p.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    let mut blocks = Vec::new();
    for (&m, &mu) in mult.iter().rev() {
        let must_pair = match p.flavor() {
            Flavor::Orthogonal => m % 2 == 0,
            Flavor::Symplectic => m % 2 == 1,
        };
        if must_pair {
            debug_assert!(mu % 2 == 0);
        }
        for _ in 0..mu / 2 {
            blocks.push(Block { m, kind: BlockKind::Paired });
        }
        if mu % 2 == 1 {
            blocks.push(Block { m, kind: BlockKind::Single });
        }
    }
    blocks
}

pub fn sl2_from_partition(
    alg: &MatrixLieAlgebra,
    p: &Partition,
) -> Result<Sl2Triple, LieError> {
    if p.flavor() != alg.flavor {
        return Err(LieError::InvalidPartition("flavor mismatch with algebra".into()));
    }
    if p.total() != alg.n {
        return Err(LieError::InvalidPartition(format!(
            "partition of {} does not fit dimension {}",
            p.total(),
            alg.n
        )));
    }
    let blocks = blocks_from_partition(p);
    Ok(assemble(alg, &blocks).triple)
}

/// Builds the triple and change of basis for an explicit block list.
/// Blocks must tile the standard space of `alg`.
pub(crate) fn assemble(alg: &MatrixLieAlgebra, blocks: &[Block]) -> Assembly {
    let n: usize = blocks.iter().map(|b| b.size()).sum();
    assert_eq!(n, alg.n);
    let orthogonal = alg.flavor == Flavor::Orthogonal;

    // abstract indexing
    let mut abs_index: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut next = 0usize;
    for b in blocks {
        let copies = match b.kind {
            BlockKind::Single => 1,
            BlockKind::Paired => 2,
        };
        let mut per_copy = Vec::new();
        for _ in 0..copies {
            let idx: Vec<usize> = (next..next + b.m).collect();
            next += b.m;
            per_copy.push(idx);
        }
        abs_index.push(per_copy);
    }

    // block scalars: hyperbolic blocks take 1; single odd (orthogonal)
    // blocks are matched in twos so their self-paired centers carry +1/-1
    let mut delta: Vec<BigRational> = vec![rat_int(1); blocks.len()];
    let selfpair_blocks: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.kind == BlockKind::Single && b.m % 2 == 1)
        .map(|(i, _)| i)
        .collect();
    debug_assert!(
        blocks
            .iter()
            .all(|b| b.kind == BlockKind::Paired || (b.m % 2 == 1) == orthogonal),
        "single blocks must carry a form of the ambient flavor"
    );
    for (pos, &bi) in selfpair_blocks.iter().enumerate() {
        let c = (blocks[bi].m - 1) / 2;
        let center_sign = if c % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        // alternate +1/-1 along the pairing (0,1), (2,3), ...; an odd count
        // leaves the last index even, so the leftover center carries +1 as
        // the odd middle slot of the standard form requires
        let target = if pos % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        delta[bi] = target / center_sign;
    }

    // pairing data: (representative, partner, <rep, partner>, weight of rep)
    struct Pair {
        rep: usize,
        partner: usize,
        eps: BigRational,
        weight: i64,
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut selfs: Vec<usize> = Vec::new(); // abstract indices of self-paired centers
    for (bi, b) in blocks.iter().enumerate() {
        let m = b.m as i64;
        let sign = |i: usize| if i % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        match b.kind {
            BlockKind::Single => {
                let idx = &abs_index[bi][0];
                for i in 0..b.m {
                    let j = b.m - 1 - i;
                    if i < j {
                        pairs.push(Pair {
                            rep: idx[i],
                            partner: idx[j],
                            eps: &delta[bi] * sign(i),
                            weight: m - 1 - 2 * i as i64,
                        });
                    } else if i == j {
                        selfs.push(idx[i]);
                    }
                }
            }
            BlockKind::Paired => {
                let a = &abs_index[bi][0];
                let c = &abs_index[bi][1];
                // the pairing couples w_i in copy 0 with w_{m-1-i} in copy 1,
                // <w_i^0, w_{m-1-i}^1> = delta * (-1)^i
                for i in 0..b.m {
                    let w = m - 1 - 2 * i as i64;
                    let j = b.m - 1 - i;
                    if w >= 0 {
                        pairs.push(Pair {
                            rep: a[i],
                            partner: c[j],
                            eps: &delta[bi] * sign(i),
                            weight: w,
                        });
                    } else {
                        // representative taken in the second copy; in the
                        // symplectic case the reversed pairing flips sign
                        let eps = if orthogonal {
                            &delta[bi] * sign(i)
                        } else {
                            -(&delta[bi] * sign(i))
                        };
                        pairs.push(Pair { rep: c[j], partner: a[i], eps, weight: -w });
                    }
                }
            }
        }
    }
    // weight-descending slot order; stable so block order breaks ties
    pairs.sort_by_key(|p| -p.weight);

    // change of basis: abstract -> standard
    let mut t = QMatrix::zero(n, n);
    let mut slot = 0usize;
    for p in &pairs {
        t.set(slot, p.rep, rat_int(1));
        t.set(n - 1 - slot, p.partner, p.eps.clone());
        slot += 1;
    }
    let mut it = selfs.iter();
    while let (Some(&x), y) = (it.next(), it.next()) {
        match y {
            Some(&y) => {
                // <x,x> = 1, <y,y> = -1 by the delta choice above
                t.set(slot, x, rat_int(1));
                t.set(n - 1 - slot, x, rat(1, 2));
                t.set(slot, y, rat_int(1));
                t.set(n - 1 - slot, y, rat(-1, 2));
                slot += 1;
            }
            None => {
                assert!(n % 2 == 1, "leftover self-paired vector needs an odd center");
                t.set((n - 1) / 2, x, rat_int(1));
            }
        }
    }

    // abstract operators
    let mut e = QMatrix::zero(n, n);
    let mut h = QMatrix::zero(n, n);
    let mut f = QMatrix::zero(n, n);
    for (bi, b) in blocks.iter().enumerate() {
        for idx in &abs_index[bi] {
            let m = b.m;
            for i in 0..m {
                h.set(idx[i], idx[i], rat_int(m as i64 - 1 - 2 * i as i64));
                if i + 1 < m {
                    f.set(idx[i + 1], idx[i], rat_int(1));
                    e.set(idx[i], idx[i + 1], rat_int((i as i64 + 1) * (m as i64 - 1 - i as i64)));
                }
            }
        }
    }

    let t_inv = t.inverse().expect("change of basis is invertible");
    let conj = |x: &QMatrix| t.mul(x).mul(&t_inv);
    let triple = Sl2Triple { e: conj(&e), h: conj(&h), f: conj(&f) };

    assert!(triple.h.is_diagonal(), "h must be diagonal in standard coordinates");
    assert!(alg.contains(&triple.e), "e must preserve the form");
    assert!(alg.contains(&triple.h), "h must preserve the form");
    assert!(alg.contains(&triple.f), "f must preserve the form");
    assert!(triple.check_relations(), "sl2 relations must hold exactly");

    Assembly { triple, t, abs_index }
}

/// Dimensions of the ad-weight spaces of `alg` under a diagonal integral h.
/// Every basis element is a weight vector for any such h, so this is a tally.
pub fn grading_decomposition(alg: &MatrixLieAlgebra, h: &QMatrix) -> BTreeMap<i64, usize> {
    assert!(h.is_diagonal(), "grading requires a diagonal h");
    let hd: Vec<BigRational> = h.diagonal();
    let mut out: BTreeMap<i64, usize> = BTreeMap::new();
    for b in alg.basis() {
        let mut weight: Option<BigRational> = None;
        for r in 0..alg.n {
            for c in 0..alg.n {
                if b.get(r, c).is_zero() {
                    continue;
                }
                let w = &hd[r] - &hd[c];
                match &weight {
                    None => weight = Some(w),
                    Some(prev) => assert_eq!(*prev, w, "basis element mixes ad-weights"),
                }
            }
        }
        let w = weight.expect("zero basis element");
        assert!(w.is_integer());
        *out.entry(w.to_integer().to_i64().expect("small weight")).or_insert(0) += 1;
    }
    out
}

/// Exact basis of the centralizer {x in alg : [e, x] = 0}.
pub fn centralizer(alg: &MatrixLieAlgebra, e: &QMatrix) -> Vec<QMatrix> {
    assert!(alg.contains(e), "e must lie in the algebra");
    let d = alg.dim();
    let n2 = alg.n * alg.n;
    let mut m = QMatrix::zero(n2, d);
    for (col, b) in alg.basis().iter().enumerate() {
        let br = e.commutator(b);
        for r in 0..alg.n {
            for c in 0..alg.n {
                m.set(r * alg.n + c, col, br.get(r, c).clone());
            }
        }
    }
    nullspace(&m)
        .into_iter()
        .map(|coeffs| combine(alg, &coeffs))
        .collect()
}

pub(crate) fn combine(alg: &MatrixLieAlgebra, coeffs: &[BigRational]) -> QMatrix {
    let mut out = QMatrix::zero(alg.n, alg.n);
    for (c, b) in coeffs.iter().zip(alg.basis()) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

/// Multiset of h-eigenvalues on the standard space for a partition:
/// the union over parts m of {m-1, m-3, ..., -(m-1)}.
pub fn partition_weights(p: &Partition) -> Vec<i64> {
    let mut w: Vec<i64> = Vec::new();
    for &m in p.parts() {
        let m = m as i64;
        for i in 0..m {
            w.push(m - 1 - 2 * i);
        }
    }
    w.sort_unstable_by_key(|x| -*x);
    w
}
