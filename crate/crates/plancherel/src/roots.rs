//! Root systems and Weyl groups of types B, C, D.
//!
//! Characters of the dual torus are written additively as integer vectors,
//! matching the exponent vectors of the Laurent ring directly. Weyl
//! elements are signed permutations; type D restricts to evenly many sign
//! flips unless the outer involution of the full orthogonal group is
//! explicitly requested.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    roots: Vec<Vec<i64>>,
}

/// A signed permutation: coordinate `i` is sent to slot `perm[i]` with
/// sign `signs[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { perm: (0..rank).collect(), signs: vec![1; rank] }
    }

    /// Image of an additive character (integer weight vector).
    pub fn apply_weight(&self, w: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; w.len()];
        for (i, &x) in w.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i64 * x;
        }
        out
    }

    /// Image of a multiplicative torus point given by angles in [0, 1):
    /// permutation moves coordinates, sign -1 inverts (negates the angle).
    pub fn apply_angles(&self, theta: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; theta.len()];
        for (i, &x) in theta.iter().enumerate() {
            let y = if self.signs[i] == 1 { x } else { (1.0 - x) % 1.0 };
            out[self.perm[i]] = y;
        }
        out
    }
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self, RootError> {
        let min = match family {
            Family::D => 2,
            _ => 1,
        };
        if rank < min {
            return Err(RootError::InvalidRank { family, rank });
        }
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let e = |i: usize, c: i64| -> Vec<i64> {
            let mut v = vec![0i64; rank];
            v[i] = c;
            v
        };
        match family {
            Family::B => {
                for i in 0..rank {
                    roots.push(e(i, 1));
                    roots.push(e(i, -1));
                }
            }
            Family::C => {
                for i in 0..rank {
                    roots.push(e(i, 2));
                    roots.push(e(i, -2));
                }
            }
            Family::D => {}
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![0i64; rank];
                    v[i] = si;
                    v[j] = sj;
                    roots.push(v);
                }
            }
        }
        roots.sort();
        Ok(RootSystem { family, rank, roots })
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Roots with first nonzero coordinate positive.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .filter(|r| r.iter().find(|&&x| x != 0).map(|&x| x > 0).unwrap_or(false))
            .cloned()
            .collect()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn weyl_group_order(&self) -> u64 {
        let fact: u64 = (1..=self.rank as u64).product();
        match self.family {
            Family::B | Family::C => (1u64 << self.rank) * fact,
            Family::D => (1u64 << (self.rank - 1)) * fact,
        }
    }

    /// Degrees of the fundamental invariants.
    pub fn degrees(&self) -> Vec<u64> {
        let r = self.rank as u64;
        match self.family {
            Family::B | Family::C => (1..=r).map(|j| 2 * j).collect(),
            Family::D => {
                let mut d: Vec<u64> = (1..r).map(|j| 2 * j).collect();
                d.push(r);
                d
            }
        }
    }

    /// Explicit enumeration of the Weyl group. For type D only evenly many
    /// sign flips are included unless `include_outer` adds the coset coming
    /// from the disconnected orthogonal group.
    pub fn weyl_elements(&self, include_outer: bool) -> Vec<WeylElement> {
        let rank = self.rank;
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut idx: Vec<usize> = (0..rank).collect();
        permutations(&mut idx, 0, &mut perms);
        let mut out = Vec::new();
        for perm in &perms {
            for mask in 0u32..(1 << rank) {
                let signs: Vec<i8> =
                    (0..rank).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                if self.family == Family::D && !include_outer {
                    let flips = signs.iter().filter(|&&s| s == -1).count();
                    if flips % 2 != 0 {
                        continue;
                    }
                }
                out.push(WeylElement { perm: perm.clone(), signs });
            }
        }
        out
    }
}

fn permutations(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permutations(idx, k + 1, out);
        idx.swap(k, i);
    }
}
