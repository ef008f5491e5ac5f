//! Multivariate Laurent polynomials over exact rationals.
//!
//! Variables are drawn from the fixed alphabet `u, t1, t2, ...` where
//! `u = q^{-1/2}`; half-integer powers of `q` therefore appear as integer
//! powers of `u`. Exponents may be negative. Terms are kept in a sorted
//! map keyed by exponent vector, so iteration order (and every derived
//! textual form) is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Variable of the Laurent ring: `u` sorts before `t1 < t2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    U,
    /// Torus coordinate `t{i}`, 1-based.
    T(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::U => write!(f, "u"),
            Var::T(i) => write!(f, "t{}", i),
        }
    }
}

/// Sparse Laurent polynomial. Invariants: variable list sorted and
/// deduplicated, no stored zero coefficients, every exponent vector has
/// the same length as the variable list, and no variable column is
/// identically zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly { vars: Vec::new(), terms }
    }

    /// The monomial `c * v^e`.
    pub fn monomial(c: BigRational, v: Var, e: i64) -> Self {
        if c.is_zero() || e == 0 {
            return Self::constant(c);
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![e], c);
        LaurentPoly { vars: vec![v], terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(BigRational::one(), v, 1)
    }

    /// Builds a polynomial from (vars, exponent map) data, normalizing.
    pub fn from_terms(vars: Vec<Var>, terms: Vec<(Vec<i64>, BigRational)>) -> Self {
        let mut map: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length mismatch");
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut p = LaurentPoly { vars, terms: map };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
                .unwrap_or(false)
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    /// Constant term as a rational, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        // drop variable columns that are identically zero
        let n = self.vars.len();
        if n == 0 {
            return;
        }
        let mut used = vec![false; n];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i]).collect();
        let old = std::mem::take(&mut self.terms);
        for (e, c) in old {
            let ne: Vec<i64> = keep.iter().map(|&i| e[i]).collect();
            self.terms.insert(ne, c);
        }
    }

    /// Re-expresses both polynomials over the union of their variables.
    fn align(a: &LaurentPoly, b: &LaurentPoly) -> (Vec<Var>, LaurentPoly, LaurentPoly) {
        if a.vars == b.vars {
            return (a.vars.clone(), a.clone(), b.clone());
        }
        let mut vars: Vec<Var> = a.vars.iter().chain(b.vars.iter()).copied().collect();
        vars.sort();
        vars.dedup();
        (vars.clone(), a.embed(&vars), b.embed(&vars))
    }

    /// Rewrites over a superset of variables (must contain self.vars).
    fn embed(&self, vars: &[Var]) -> LaurentPoly {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable superset"))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[pos[i]] = x;
            }
            terms.insert(ne, c.clone());
        }
        LaurentPoly { vars: vars.to_vec(), terms }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (vars, a, b) = Self::align(self, other);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            let entry = terms.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut p = LaurentPoly { vars, terms };
        p.normalize();
        p
    }

    pub fn neg(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let (vars, a, b) = Self::align(self, other);
        let mut terms: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        let mut p = LaurentPoly { vars, terms };
        p.normalize();
        p
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies by the monomial with the given exponent shift, expressed
    /// in this polynomial's own variable order.
    pub fn shift(&self, delta: &[i64]) -> LaurentPoly {
        assert_eq!(delta.len(), self.vars.len());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(delta).map(|(x, d)| x + d).collect(), c.clone()))
            .collect();
        let mut p = LaurentPoly { vars: self.vars.clone(), terms };
        p.normalize();
        p
    }

    /// Componentwise minimum exponent over all terms (zero vector if constant).
    pub fn min_exponents(&self) -> Vec<i64> {
        let n = self.vars.len();
        let mut min = vec![i64::MAX; n];
        for e in self.terms.keys() {
            for (m, &x) in min.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        if self.terms.is_empty() {
            min = vec![0; n];
        }
        min
    }

    /// Positive rational content: gcd of coefficient numerators over lcm
    /// of coefficient denominators.
    pub fn content(&self) -> BigRational {
        if self.terms.is_empty() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Coefficient of the lex-largest exponent vector.
    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Exact evaluation; all variables must be assigned a nonzero rational
    /// (zero only allowed where no negative exponent consumes it).
    pub fn eval_rational(
        &self,
        assignment: &BTreeMap<Var, BigRational>,
    ) -> Result<BigRational, AlgebraError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let x = assignment
                .get(v)
                .ok_or_else(|| AlgebraError::MissingAssignment(v.to_string()))?;
            vals.push(x.clone());
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in vals.iter().zip(e) {
                term *= rational_pow(x, k)?;
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn eval_complex(
        &self,
        assignment: &BTreeMap<Var, Complex64>,
    ) -> Result<Complex64, AlgebraError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let x = assignment
                .get(v)
                .ok_or_else(|| AlgebraError::MissingAssignment(v.to_string()))?;
            vals.push(*x);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = Complex64::new(rational_to_f64(c), 0.0);
            for (x, &k) in vals.iter().zip(e) {
                term *= x.powi(k as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes `u^2 := qinv` exactly. All powers of `u` must be even
    /// (true of every graded object here); the result is a Laurent
    /// polynomial in the remaining torus variables.
    pub fn eval_u_squared(&self, qinv: &BigRational) -> Result<LaurentPoly, AlgebraError> {
        let Some(upos) = self.vars.iter().position(|v| *v == Var::U) else {
            return Ok(self.clone());
        };
        let vars: Vec<Var> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != upos)
            .map(|(_, v)| *v)
            .collect();
        let mut terms: Vec<(Vec<i64>, BigRational)> = Vec::new();
        for (e, c) in &self.terms {
            let eu = e[upos];
            if eu % 2 != 0 {
                return Err(AlgebraError::OddHalfPower);
            }
            let coeff = c * rational_pow(qinv, eu / 2)?;
            let ne: Vec<i64> = e
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != upos)
                .map(|(_, &x)| x)
                .collect();
            terms.push((ne, coeff));
        }
        Ok(LaurentPoly::from_terms(vars, terms))
    }

    /// Substitutes each variable by a (coefficient-one) monomial; used for
    /// signed-permutation actions like `t_i -> t_{pi(i)}^{s_i}`.
    pub fn substitute_monomials(&self, map: &BTreeMap<Var, (Var, i64)>) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            for (v, &k) in self.vars.iter().zip(e) {
                let (w, s) = map.get(v).copied().unwrap_or((*v, 1));
                term = term.mul(&LaurentPoly::monomial(BigRational::one(), w, s * k));
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// x^k for possibly negative k; errors on 0^negative.
pub fn rational_pow(x: &BigRational, k: i64) -> Result<BigRational, AlgebraError> {
    if k == 0 {
        return Ok(BigRational::one());
    }
    if x.is_zero() {
        if k < 0 {
            return Err(AlgebraError::PoleEvaluation);
        }
        return Ok(BigRational::zero());
    }
    Ok(x.pow(k as i32))
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms in descending lex monomial order,
    /// `coeff * u^j * t1^e1 * ...` with unit coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(abs.to_string());
            }
            for (v, &k) in self.vars.iter().zip(e) {
                if k == 1 {
                    factors.push(v.to_string());
                } else if k != 0 {
                    factors.push(format!("{}^{}", v, k));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
