//! Graded characters of dual tori, unramified local L-factors, zeta and
//! motive factors, and the Satake-parameter lift.
//!
//! A local L-factor is det(I - rho(t) q^{-s})^{-1}. Symbolically it is a
//! rational function in the torus variables t1..ta and u = q^{-1/2}; the
//! s-argument enters as u^{2s} and grades enter as u^{grade}, kept separate
//! so the two uses (explicit s, graded evaluation) stay independently
//! computable.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{
    one_minus_monomial, rat_int, rational_pow, rational_to_f64, AlgebraError, LaurentPoly,
    RationalFunction, Var,
};
use crate::roots::{Family, RootSystem, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LFactorError {
    #[error("zeta factor has a pole at s = 0")]
    ZetaAtZero,
    #[error("L-factor pole: a factor 1 - t^w q^-s vanishes")]
    Pole,
    #[error("rank mismatch between character and Satake parameter")]
    RankMismatch,
    #[error("exact evaluation needs an integral power of q (even 2s/grade)")]
    HalfIntegral,
    #[error("require 1 <= a <= k-1")]
    ParameterRange,
    #[error("invalid rank for root data: {0}")]
    BadRank(String),
}

impl From<AlgebraError> for LFactorError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::OddHalfPower => LFactorError::HalfIntegral,
            _ => LFactorError::Pole,
        }
    }
}

/// One isotypic piece of a graded virtual character: a torus weight, the
/// integer grade, and a positive multiplicity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CharEntry {
    pub weight: Vec<i64>,
    pub grade: i64,
    pub mult: usize,
}

/// Dual-torus representation with an integer grading. Entries are kept
/// sorted by (grade, weight) with duplicates merged, so equality of
/// characters is plain structural equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedCharacter {
    rank: usize,
    entries: Vec<CharEntry>,
}

impl GradedCharacter {
    pub fn new(rank: usize, raw: Vec<(Vec<i64>, i64, usize)>) -> Self {
        let mut map: BTreeMap<(i64, Vec<i64>), usize> = BTreeMap::new();
        for (weight, grade, mult) in raw {
            assert_eq!(weight.len(), rank, "weight length must equal rank");
            if mult == 0 {
                continue;
            }
            *map.entry((grade, weight)).or_insert(0) += mult;
        }
        let entries = map
            .into_iter()
            .map(|((grade, weight), mult)| CharEntry { weight, grade, mult })
            .collect();
        GradedCharacter { rank, entries }
    }

    pub fn empty(rank: usize) -> Self {
        GradedCharacter { rank, entries: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[CharEntry] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn union(&self, other: &GradedCharacter) -> GradedCharacter {
        assert_eq!(self.rank, other.rank);
        let mut raw: Vec<(Vec<i64>, i64, usize)> = Vec::new();
        for e in self.entries.iter().chain(other.entries.iter()) {
            raw.push((e.weight.clone(), e.grade, e.mult));
        }
        GradedCharacter::new(self.rank, raw)
    }

    /// Self-duality: within each grade the weights are closed under negation.
    pub fn is_closed_under_negation(&self) -> bool {
        let mut map: BTreeMap<(i64, Vec<i64>), usize> = BTreeMap::new();
        for e in &self.entries {
            map.insert((e.grade, e.weight.clone()), e.mult);
        }
        map.iter().all(|((g, w), m)| {
            let neg: Vec<i64> = w.iter().map(|x| -x).collect();
            map.get(&(*g, neg)) == Some(m)
        })
    }

    /// Image under a Weyl element acting on all weights.
    pub fn weyl_image(&self, w: &WeylElement) -> GradedCharacter {
        let raw = self
            .entries
            .iter()
            .map(|e| (w.apply_weight(&e.weight), e.grade, e.mult))
            .collect();
        GradedCharacter::new(self.rank, raw)
    }

    /// Re-grades every entry to the given grade (used to place an ungraded
    /// character at a single evaluation point).
    pub fn at_grade(&self, grade: i64) -> GradedCharacter {
        let raw = self.entries.iter().map(|e| (e.weight.clone(), grade, e.mult)).collect();
        GradedCharacter::new(self.rank, raw)
    }

    /// Human-readable decomposition, recognizing full std orbits and
    /// trivial summands per grade, e.g. "std_3@4 + triv@4 (dim 4)".
    pub fn describe(&self) -> String {
        let mut left: BTreeMap<(i64, Vec<i64>), usize> = BTreeMap::new();
        for e in &self.entries {
            left.insert((e.grade, e.weight.clone()), e.mult);
        }
        let grades: Vec<i64> = {
            let mut g: Vec<i64> = self.entries.iter().map(|e| e.grade).collect();
            g.sort_unstable();
            g.dedup();
            g
        };
        let mut stds: Vec<(i64, usize)> = Vec::new(); // (grade, copies)
        for &g in &grades {
            loop {
                let mut orbit: Vec<Vec<i64>> = vec![vec![0; self.rank]];
                for i in 0..self.rank {
                    let mut plus = vec![0i64; self.rank];
                    plus[i] = 1;
                    let minus: Vec<i64> = plus.iter().map(|x| -x).collect();
                    orbit.push(plus);
                    orbit.push(minus);
                }
                let available = orbit.iter().all(|w| left.get(&(g, w.clone())).copied().unwrap_or(0) >= 1);
                if !available {
                    break;
                }
                for w in orbit {
                    let m = left.get_mut(&(g, w)).unwrap();
                    *m -= 1;
                }
                stds.push((g, 1));
            }
        }
        let mut parts: Vec<String> = Vec::new();
        for (g, _) in &stds {
            parts.push(format!("std_{}@{}", 2 * self.rank + 1, g));
        }
        let mut trivs: Vec<(i64, usize)> = Vec::new();
        let mut leftover = false;
        for ((g, w), m) in &left {
            if *m == 0 {
                continue;
            }
            if w.iter().all(|&x| x == 0) {
                trivs.push((*g, *m));
            } else {
                leftover = true;
            }
        }
        for (g, m) in trivs {
            for _ in 0..m {
                parts.push(format!("triv@{}", g));
            }
        }
        if leftover {
            // fall back to the raw entry list
            parts.clear();
            for e in &self.entries {
                parts.push(format!("w{:?}@{} x{}", e.weight, e.grade, e.mult));
            }
        }
        format!("{} (dim {})", parts.join(" + "), self.dim())
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Standard character: B_a has weights {±e_i} and one zero weight; D_k has
/// weights {±e_i}. Grade 0.
pub fn std_char(family: Family, rank: usize) -> GradedCharacter {
    assert!(rank >= 1);
    let mut raw: Vec<(Vec<i64>, i64, usize)> = Vec::new();
    for i in 0..rank {
        let mut w = vec![0i64; rank];
        w[i] = 1;
        raw.push((w.clone(), 0, 1));
        raw.push((w.iter().map(|x| -x).collect(), 0, 1));
    }
    match family {
        Family::B => raw.push((vec![0; rank], 0, 1)),
        Family::D => {}
        Family::C => panic!("std_char: only types B and D are used here"),
    }
    GradedCharacter::new(rank, raw)
}

/// Adjoint character of so_{2a+1}: all roots of B_a plus `rank` zero weights.
pub fn adjoint_char(rank: usize) -> GradedCharacter {
    let rs = RootSystem::build(Family::B, rank).expect("rank >= 1");
    let mut raw: Vec<(Vec<i64>, i64, usize)> =
        rs.roots().iter().map(|r| (r.clone(), 0, 1)).collect();
    raw.push((vec![0; rank], 0, rank));
    GradedCharacter::new(rank, raw)
}

/// Character of g^vee / a^vee for type B: exactly the roots, no zero weights.
pub fn g_mod_a_char(rank: usize) -> GradedCharacter {
    let rs = RootSystem::build(Family::B, rank).expect("rank >= 1");
    GradedCharacter::new(rank, rs.roots().iter().map(|r| (r.clone(), 0, 1)).collect())
}

fn monomial_t(weight: &[i64]) -> LaurentPoly {
    let mut m = LaurentPoly::one();
    for (i, &e) in weight.iter().enumerate() {
        if e != 0 {
            m = m.mul(&LaurentPoly::monomial(rat_int(1), Var::T(i as u32 + 1), e));
        }
    }
    m
}

/// Symbolic L-factor at s given as 2s: prod over entries of
/// (1 - t^w u^{2s})^{-mult}, ignoring grades.
pub fn l_factor_symbolic(char_: &GradedCharacter, two_s: i64) -> RationalFunction {
    let mut den = LaurentPoly::one();
    for e in char_.entries() {
        let base = LaurentPoly::one()
            .sub(&monomial_t(&e.weight).mul(&LaurentPoly::monomial(rat_int(1), Var::U, two_s)));
        for _ in 0..e.mult {
            den = den.mul(&base);
        }
    }
    RationalFunction::new(LaurentPoly::one(), den).expect("L-factor denominators are nonzero")
}

/// Symbolic graded value: prod over entries of (1 - t^w u^{grade})^{-mult}.
pub fn graded_l_value_symbolic(char_: &GradedCharacter) -> RationalFunction {
    let mut den = LaurentPoly::one();
    for e in char_.entries() {
        let base = LaurentPoly::one()
            .sub(&monomial_t(&e.weight).mul(&LaurentPoly::monomial(rat_int(1), Var::U, e.grade)));
        for _ in 0..e.mult {
            den = den.mul(&base);
        }
    }
    RationalFunction::new(LaurentPoly::one(), den).expect("graded denominators are nonzero")
}

/// Exact L-factor at integral s and exact nonzero torus coordinates.
pub fn l_factor_exact(
    char_: &GradedCharacter,
    s: i64,
    t: &[BigRational],
    q: u64,
) -> Result<BigRational, LFactorError> {
    if t.len() != char_.rank() {
        return Err(LFactorError::RankMismatch);
    }
    let qinv_s = rational_pow(&BigRational::new(1.into(), (q as i64).into()), s)
        .map_err(LFactorError::from)?;
    let mut acc = BigRational::one();
    for e in char_.entries() {
        let tw = eval_weight_exact(&e.weight, t)?;
        let factor = BigRational::one() - tw * &qinv_s;
        if factor.is_zero() {
            return Err(LFactorError::Pole);
        }
        for _ in 0..e.mult {
            acc *= factor.clone().recip();
        }
    }
    Ok(acc)
}

/// Exact graded value at exact torus coordinates: grades must be even so
/// that u^grade = q^{-grade/2} stays rational.
pub fn graded_l_value_exact(
    char_: &GradedCharacter,
    t: &[BigRational],
    q: u64,
) -> Result<BigRational, LFactorError> {
    if t.len() != char_.rank() {
        return Err(LFactorError::RankMismatch);
    }
    let qinv = BigRational::new(1.into(), (q as i64).into());
    let mut acc = BigRational::one();
    for e in char_.entries() {
        if e.grade % 2 != 0 {
            return Err(LFactorError::HalfIntegral);
        }
        let tw = eval_weight_exact(&e.weight, t)?;
        let factor =
            BigRational::one() - tw * rational_pow(&qinv, e.grade / 2).map_err(LFactorError::from)?;
        if factor.is_zero() {
            return Err(LFactorError::Pole);
        }
        for _ in 0..e.mult {
            acc *= factor.clone().recip();
        }
    }
    Ok(acc)
}

fn eval_weight_exact(weight: &[i64], t: &[BigRational]) -> Result<BigRational, LFactorError> {
    let mut acc = BigRational::one();
    for (x, &e) in t.iter().zip(weight) {
        acc *= rational_pow(x, e).map_err(LFactorError::from)?;
    }
    Ok(acc)
}

/// Numeric L-factor; s is supplied as 2s so half-integers stay exact in
/// the exponent.
pub fn l_factor_complex(
    char_: &GradedCharacter,
    two_s: i64,
    t: &[Complex64],
    q: u64,
) -> Result<Complex64, LFactorError> {
    if t.len() != char_.rank() {
        return Err(LFactorError::RankMismatch);
    }
    let u = (q as f64).powf(-0.5);
    let us = Complex64::new(u.powi(two_s as i32), 0.0);
    let mut acc = Complex64::new(1.0, 0.0);
    for e in char_.entries() {
        let tw = eval_weight_complex(&e.weight, t);
        let factor = Complex64::new(1.0, 0.0) - tw * us;
        if factor.norm() < 1e-14 {
            return Err(LFactorError::Pole);
        }
        for _ in 0..e.mult {
            acc /= factor;
        }
    }
    Ok(acc)
}

pub fn graded_l_value_complex(
    char_: &GradedCharacter,
    t: &[Complex64],
    q: u64,
) -> Result<Complex64, LFactorError> {
    if t.len() != char_.rank() {
        return Err(LFactorError::RankMismatch);
    }
    let u = (q as f64).powf(-0.5);
    let mut acc = Complex64::new(1.0, 0.0);
    for e in char_.entries() {
        let tw = eval_weight_complex(&e.weight, t);
        let factor = Complex64::new(1.0, 0.0) - tw * u.powi(e.grade as i32);
        if factor.norm() < 1e-14 {
            return Err(LFactorError::Pole);
        }
        for _ in 0..e.mult {
            acc /= factor;
        }
    }
    Ok(acc)
}

fn eval_weight_complex(weight: &[i64], t: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for (x, &e) in t.iter().zip(weight) {
        acc *= x.powi(e as i32);
    }
    acc
}

/// Local zeta factor 1 / (1 - q^{-s}) for integral s != 0.
pub fn zeta(s: i64, q: u64) -> Result<BigRational, LFactorError> {
    if s == 0 {
        return Err(LFactorError::ZetaAtZero);
    }
    let qinv = BigRational::new(1.into(), (q as i64).into());
    let x = BigRational::one() - rational_pow(&qinv, s).map_err(LFactorError::from)?;
    Ok(x.recip())
}

/// Motive factor Delta_G(1) = prod of zeta at the fundamental degrees.
pub fn motive_delta(family: Family, rank: usize, q: u64) -> Result<BigRational, LFactorError> {
    let rs = RootSystem::build(family, rank)
        .map_err(|e| LFactorError::BadRank(e.to_string()))?;
    let mut acc = BigRational::one();
    for d in rs.degrees() {
        acc *= zeta(d as i64, q)?;
    }
    Ok(acc)
}

/// Symbolic motive factor as an exact rational function in u.
pub fn motive_delta_symbolic(family: Family, rank: usize) -> Result<RationalFunction, LFactorError> {
    let rs = RootSystem::build(family, rank)
        .map_err(|e| LFactorError::BadRank(e.to_string()))?;
    let mut den = LaurentPoly::one();
    for d in rs.degrees() {
        den = den.mul(&one_minus_monomial(rat_int(1), &[(Var::U, 2 * d as i64)]));
    }
    Ok(RationalFunction::new(LaurentPoly::one(), den).expect("nonzero"))
}

/// A point of the dual maximal torus. Coordinates are either exact nonzero
/// rationals (lifted mode, where powers of q appear) or unit-circle angles
/// (unitary mode).
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(BigRational),
    /// Angle theta in [0,1); the coordinate is exp(2 pi i theta).
    Unit(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SatakeParam {
    coords: Vec<Coord>,
}

impl SatakeParam {
    pub fn unitary(angles: Vec<f64>) -> Self {
        SatakeParam { coords: angles.into_iter().map(|a| Coord::Unit(a.rem_euclid(1.0))).collect() }
    }

    pub fn exact(values: Vec<BigRational>) -> Self {
        assert!(values.iter().all(|v| !v.is_zero()), "torus coordinates must be nonzero");
        SatakeParam { coords: values.into_iter().map(Coord::Exact).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn as_exact(&self) -> Option<Vec<BigRational>> {
        self.coords
            .iter()
            .map(|c| match c {
                Coord::Exact(v) => Some(v.clone()),
                Coord::Unit(_) => None,
            })
            .collect()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coords
            .iter()
            .map(|c| match c {
                Coord::Exact(v) => Complex64::new(rational_to_f64(v), 0.0),
                Coord::Unit(theta) => {
                    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * theta)
                }
            })
            .collect()
    }

    /// Signed-permutation action: coordinates move to permuted slots, a
    /// sign of -1 inverting on the torus.
    pub fn weyl_act(&self, w: &WeylElement) -> SatakeParam {
        assert_eq!(w.perm.len(), self.coords.len());
        let mut out = vec![Coord::Unit(0.0); self.coords.len()];
        for (i, c) in self.coords.iter().enumerate() {
            let img = if w.signs[i] == 1 {
                c.clone()
            } else {
                match c {
                    Coord::Exact(v) => Coord::Exact(v.clone().recip()),
                    Coord::Unit(theta) => Coord::Unit((1.0 - theta).rem_euclid(1.0)),
                }
            };
            out[w.perm[i]] = img;
        }
        SatakeParam { coords: out }
    }
}

/// Lift of a rank-a Satake parameter to the rank-k dual torus of the even
/// orthogonal group: appends the q-power string q^{k-a-1}, ..., q, 1. The
/// exponents are half the positive h-weights of the hook sl2, i.e. the
/// nonzero part of rho_{L(X)}.
pub fn lift_satake(t: &SatakeParam, k: usize, q: u64) -> Result<SatakeParam, LFactorError> {
    let a = t.rank();
    if a < 1 || a + 1 > k {
        return Err(LFactorError::ParameterRange);
    }
    let mut coords = t.coords().to_vec();
    for j in (1..=(k - a - 1)).rev() {
        coords.push(Coord::Exact(rational_pow(
            &BigRational::from_integer((q as i64).into()),
            j as i64,
        )
        .expect("positive power")));
    }
    coords.push(Coord::Exact(BigRational::one()));
    Ok(SatakeParam { coords })
}

/// The q-exponents of the lifted coordinates (a..k), for comparison with
/// rho_{L(X)}: (k-a-1, ..., 1, 0).
pub fn lift_q_exponents(k: usize, a: usize) -> Vec<i64> {
    let mut v: Vec<i64> = (1..=(k as i64 - a as i64 - 1)).rev().collect();
    v.push(0);
    v
}

/// Eigenvalue multiset of the standard 2k-dim representation at a torus
/// point: every coordinate and its inverse.
pub fn std_eigenvalues_complex(param: &SatakeParam) -> Vec<Complex64> {
    let t = param.to_complex();
    let mut out = Vec::with_capacity(2 * t.len());
    for z in t {
        out.push(z);
        out.push(Complex64::new(1.0, 0.0) / z);
    }
    out
}

/// Symbolic eigenvalue multiset of std_{2k} at the lifted parameter:
/// {t_i^{±1}} ∪ {q^{±j}} ∪ {1, 1}, with q^j written as u^{-2j}.
pub fn lift_std_eigenvalues_symbolic(k: usize, a: usize) -> Result<Vec<LaurentPoly>, LFactorError> {
    if a < 1 || a + 1 > k {
        return Err(LFactorError::ParameterRange);
    }
    let mut out = Vec::new();
    for i in 1..=a {
        out.push(LaurentPoly::monomial(rat_int(1), Var::T(i as u32), 1));
        out.push(LaurentPoly::monomial(rat_int(1), Var::T(i as u32), -1));
    }
    for j in 1..=(k - a - 1) {
        out.push(LaurentPoly::monomial(rat_int(1), Var::U, -2 * j as i64));
        out.push(LaurentPoly::monomial(rat_int(1), Var::U, 2 * j as i64));
    }
    out.push(LaurentPoly::one());
    out.push(LaurentPoly::one());
    Ok(out)
}

/// Symbolic restriction multiset from the hook datum: std_{2a+1}(t) joined
/// with the sl2 weight string {q^{±j}} and one extra trivial eigenvalue.
pub fn lift_expected_multiset_symbolic(
    k: usize,
    a: usize,
) -> Result<Vec<LaurentPoly>, LFactorError> {
    if a < 1 || a + 1 > k {
        return Err(LFactorError::ParameterRange);
    }
    let mut out = Vec::new();
    // std of SO_{2a+1}: t_i^{±1} and one 1
    for i in 1..=a {
        out.push(LaurentPoly::monomial(rat_int(1), Var::T(i as u32), 1));
        out.push(LaurentPoly::monomial(rat_int(1), Var::T(i as u32), -1));
    }
    out.push(LaurentPoly::one());
    // (2k-2a-1)-dimensional sl2 string at q: q^{k-a-1}, ..., q, 1, q^-1, ...
    for j in 1..=(k - a - 1) {
        out.push(LaurentPoly::monomial(rat_int(1), Var::U, -2 * j as i64));
        out.push(LaurentPoly::monomial(rat_int(1), Var::U, 2 * j as i64));
    }
    out.push(LaurentPoly::one());
    Ok(out)
}

/// Closed-form graded slice from the hook data: std_{2a+1} at grade 2k-2a
/// plus trivial summands at grades 4, 8, ..., 4(k-a-1).
pub fn hook_slice_closed_form(k: usize, a: usize) -> Result<GradedCharacter, LFactorError> {
    if a < 1 || a + 1 > k {
        return Err(LFactorError::ParameterRange);
    }
    let std = std_char(Family::B, a).at_grade(2 * (k as i64 - a as i64));
    let mut trivs: Vec<(Vec<i64>, i64, usize)> = Vec::new();
    for j in 1..=(k - a - 1) {
        trivs.push((vec![0; a], 4 * j as i64, 1));
    }
    Ok(std.union(&GradedCharacter::new(a, trivs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn std_char_shapes() {
        let b1 = std_char(Family::B, 1);
        assert_eq!(b1.dim(), 3);
        let b2 = std_char(Family::B, 2);
        assert_eq!(b2.dim(), 5);
        let d3 = std_char(Family::D, 3);
        assert_eq!(d3.dim(), 6);
        assert!(d3.entries().iter().all(|e| e.grade == 0));
        assert!(b1.is_closed_under_negation());
    }

    #[test]
    fn adjoint_and_g_mod_a() {
        assert_eq!(adjoint_char(1).dim(), 3);
        assert_eq!(adjoint_char(2).dim(), 10);
        assert_eq!(adjoint_char(3).dim(), 21);
        assert_eq!(g_mod_a_char(1).dim(), 2);
        assert_eq!(g_mod_a_char(2).dim(), 8);
        // adjoint minus roots is the rank-dimensional Cartan
        for a in 1..=3usize {
            assert_eq!(adjoint_char(a).dim() - g_mod_a_char(a).dim(), a);
        }
    }

    #[test]
    fn l_factor_exact_values() {
        // std(B1) at s=2, t=1, q=3: (1 - 1/9)^-3 = 729/512
        let c = std_char(Family::B, 1);
        let v = l_factor_exact(&c, 2, &[rat_int(1)], 3).unwrap();
        assert_eq!(v, rat(729, 512));
        // trivial 1-dim character at s=1 gives 1/(1 - 1/q)
        let triv = GradedCharacter::new(0, vec![(vec![], 0, 1)]);
        assert_eq!(l_factor_exact(&triv, 1, &[], 3).unwrap(), rat(3, 2));
        // pole at s=0, t=1
        assert!(matches!(
            l_factor_exact(&c, 0, &[rat_int(1)], 3),
            Err(LFactorError::Pole)
        ));
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta(2, 3).unwrap(), rat(9, 8));
        assert_eq!(zeta(4, 3).unwrap(), rat(81, 80));
        assert_eq!(zeta(3, 3).unwrap(), rat(27, 26));
        assert!(zeta(0, 3).is_err());
    }

    #[test]
    fn motive_deltas() {
        assert_eq!(motive_delta(Family::C, 1, 3).unwrap(), rat(9, 8));
        assert_eq!(motive_delta(Family::C, 2, 3).unwrap(), rat(729, 640));
        assert_eq!(motive_delta(Family::D, 3, 3).unwrap(), rat(19683, 16640));
    }

    #[test]
    fn graded_value_of_hook_slice() {
        // V_X(3,1) symbolic: 1/[(1-u^4 t1)(1-u^4)(1-u^4 t1^-1)(1-u^4)]
        let vx = hook_slice_closed_form(3, 1).unwrap();
        let got = graded_l_value_symbolic(&vx);
        let f1 = one_minus_monomial(rat_int(1), &[(Var::U, 4), (Var::T(1), 1)]);
        let f2 = one_minus_monomial(rat_int(1), &[(Var::U, 4)]);
        let f3 = one_minus_monomial(rat_int(1), &[(Var::U, 4), (Var::T(1), -1)]);
        let den = f1.mul(&f2).mul(&f3).mul(&f2);
        let expect = RationalFunction::new(LaurentPoly::one(), den).unwrap();
        assert!(got.equals(&expect));
        // empty character evaluates to 1
        assert!(graded_l_value_symbolic(&GradedCharacter::empty(1)).is_one());
        // a single trivial summand at grade 4 is zeta(2): 9/8 at q=3
        let triv4 = GradedCharacter::new(0, vec![(vec![], 4, 1)]);
        assert_eq!(graded_l_value_exact(&triv4, &[], 3).unwrap(), rat(9, 8));
    }

    #[test]
    fn describe_hook_slices() {
        assert_eq!(hook_slice_closed_form(3, 1).unwrap().describe(), "std_3@4 + triv@4 (dim 4)");
        assert_eq!(
            hook_slice_closed_form(5, 2).unwrap().describe(),
            "std_5@6 + triv@4 + triv@8 (dim 7)"
        );
        // k = a+1: single std summand at grade 2
        assert_eq!(hook_slice_closed_form(4, 3).unwrap().describe(), "std_7@2 (dim 7)");
    }

    #[test]
    fn lift_examples() {
        let t = SatakeParam::exact(vec![rat(2, 5)]);
        let lifted = lift_satake(&t, 3, 3).unwrap();
        assert_eq!(lifted.rank(), 3);
        let ex = lifted.as_exact().unwrap();
        assert_eq!(ex, vec![rat(2, 5), rat_int(3), rat_int(1)]);
        // a = k-1 pads with a single 1, no q powers
        let t2 = SatakeParam::exact(vec![rat(2, 5), rat(3, 7)]);
        let l2 = lift_satake(&t2, 3, 3).unwrap();
        assert_eq!(l2.as_exact().unwrap(), vec![rat(2, 5), rat(3, 7), rat_int(1)]);
        // a = 2, k = 5: (t1, t2, q^2, q, 1)
        let l3 = lift_satake(&t2, 5, 3).unwrap();
        assert_eq!(
            l3.as_exact().unwrap(),
            vec![rat(2, 5), rat(3, 7), rat_int(9), rat_int(3), rat_int(1)]
        );
        assert_eq!(lift_q_exponents(5, 2), vec![2, 1, 0]);
    }

    #[test]
    fn lift_multiset_identity_symbolic() {
        for k in 2..=6usize {
            for a in 1..k {
                let mut lhs = lift_std_eigenvalues_symbolic(k, a).unwrap();
                let mut rhs = lift_expected_multiset_symbolic(k, a).unwrap();
                let key = |p: &LaurentPoly| p.to_string();
                lhs.sort_by_key(key);
                rhs.sort_by_key(key);
                assert_eq!(lhs, rhs, "(k,a)=({k},{a})");
            }
        }
    }

    #[test]
    fn weyl_invariance_of_symbolic_l_factor() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let c = std_char(Family::B, 2);
        let base = l_factor_symbolic(&c, 3);
        for w in rs.weyl_elements(false) {
            let img = l_factor_symbolic(&c.weyl_image(&w), 3);
            assert!(img.equals(&base));
        }
    }

    #[test]
    fn weyl_invariance_of_graded_value() {
        // symbolic: the graded value of a Weyl-moved character is unchanged
        let vx = hook_slice_closed_form(4, 2).unwrap();
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let base_sym = graded_l_value_symbolic(&vx);
        for w in rs.weyl_elements(false) {
            assert!(graded_l_value_symbolic(&vx.weyl_image(&w)).equals(&base_sym));
        }
        // numeric: value at w.t equals value at t on random unitary points
        use crate::rng::SplitMix64;
        let mut rng = SplitMix64::new(909);
        for _ in 0..20 {
            let t = SatakeParam::unitary(vec![rng.next_f64(), rng.next_f64()]);
            let base = graded_l_value_complex(&vx, &t.to_complex(), 3).unwrap();
            for w in rs.weyl_elements(false).iter().take(6) {
                let tw = t.weyl_act(w);
                let v = graded_l_value_complex(&vx, &tw.to_complex(), 3).unwrap();
                assert!((v - base).norm() <= 1e-12 * (1.0 + base.norm()));
            }
        }
    }

    #[test]
    fn satake_weyl_action() {
        let t = SatakeParam::exact(vec![rat(2, 3), rat(5, 7)]);
        let w = WeylElement { perm: vec![1, 0], signs: vec![-1, 1] };
        let img = t.weyl_act(&w);
        assert_eq!(img.as_exact().unwrap(), vec![rat(5, 7), rat(3, 2)]);
        let tu = SatakeParam::unitary(vec![0.25]);
        let flip = WeylElement { perm: vec![0], signs: vec![-1] };
        let img2 = tu.weyl_act(&flip);
        match img2.coords()[0] {
            Coord::Unit(theta) => assert!((theta - 0.75).abs() < 1e-15),
            _ => panic!("expected unitary coordinate"),
        }
    }
}
