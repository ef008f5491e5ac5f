//! Rational functions in the Laurent ring, with a canonical form and exact
//! equality by cross-multiplication.
//!
//! Canonical form: the denominator is shifted to have minimum exponent 0 in
//! every variable (the same monomial unit multiplies the numerator), then
//! scaled to content 1 with positive lex-leading coefficient. No polynomial
//! gcd is taken; equality never depends on it.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{rat, rat_int, LaurentPoly, Var};
use super::AlgebraError;
use crate::rng::SplitMix64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut f = RationalFunction { num, den };
        f.canonicalize();
        Ok(f)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let mut f = RationalFunction { num: p, den: LaurentPoly::one() };
        f.canonicalize();
        f
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Constant value if both numerator and denominator are constants.
    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.num = LaurentPoly::zero();
            self.den = LaurentPoly::one();
            return;
        }
        // clear denominators of exponents: shift both sides by the unit
        // monomial making den's minimum exponent 0 in each variable
        let min = self.den.min_exponents();
        if min.iter().any(|&m| m != 0) {
            let delta: Vec<i64> = min.iter().map(|&m| -m).collect();
            let unit_vars = self.den.vars().to_vec();
            let mut unit = LaurentPoly::one();
            for (v, d) in unit_vars.iter().zip(&delta) {
                unit = unit.mul(&LaurentPoly::monomial(BigRational::one(), *v, *d));
            }
            self.den = self.den.mul(&unit);
            self.num = self.num.mul(&unit);
        }
        // scale so den has content 1 and positive leading coefficient
        let mut c = self.den.content();
        if self.den.leading_coeff().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            let inv = c.recip();
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("nonzero denominators")
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RationalFunction::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<RationalFunction, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Exact equality of the underlying functions, decided by exact
    /// cross-multiplication. A randomized-evaluation fast path may
    /// short-circuit a "false" answer (a single exact-rational mismatch is
    /// already a proof of inequality); equality always goes through the
    /// cross product.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        if self == other {
            return true; // identical canonical representations
        }
        let mut rng = SplitMix64::new(0x9d5c_8a1b_f00d_0001);
        let mut vars: Vec<Var> = self
            .num
            .vars()
            .iter()
            .chain(self.den.vars())
            .chain(other.num.vars())
            .chain(other.den.vars())
            .copied()
            .collect();
        vars.sort();
        vars.dedup();
        let mut tested = 0;
        let mut attempts = 0;
        while tested < 20 && attempts < 200 {
            attempts += 1;
            let mut asn = BTreeMap::new();
            for v in &vars {
                let mut n = 0;
                while n == 0 {
                    n = rng.range_i64(-10_000, 10_000);
                }
                let d = rng.range_i64(1, 10_000);
                asn.insert(*v, rat(n, d));
            }
            let lhs = match self.eval_rational(&asn) {
                Ok(v) => v,
                Err(_) => continue, // landed on a pole; redraw
            };
            let rhs = match other.eval_rational(&asn) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if lhs != rhs {
                return false;
            }
            tested += 1;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn eval_rational(
        &self,
        assignment: &BTreeMap<Var, BigRational>,
    ) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval_rational(assignment)?;
        if d.is_zero() {
            return Err(AlgebraError::PoleEvaluation);
        }
        Ok(self.num.eval_rational(assignment)? / d)
    }

    pub fn eval_complex(
        &self,
        assignment: &BTreeMap<Var, Complex64>,
    ) -> Result<Complex64, AlgebraError> {
        let d = self.den.eval_complex(assignment)?;
        if d.norm() < 1e-300 {
            return Err(AlgebraError::PoleEvaluation);
        }
        Ok(self.num.eval_complex(assignment)? / d)
    }

    /// Exact evaluation with `u^2 := 1/q` and the given torus assignment.
    /// This is the rational-mode evaluation used for everything graded:
    /// all grades here are even, so no odd power of `u` ever appears.
    pub fn eval_rational_at_q(
        &self,
        qinv: &BigRational,
        t_assign: &BTreeMap<Var, BigRational>,
    ) -> Result<BigRational, AlgebraError> {
        let num = self.num.eval_u_squared(qinv)?;
        let den = self.den.eval_u_squared(qinv)?;
        let d = den.eval_rational(t_assign)?;
        if d.is_zero() {
            return Err(AlgebraError::PoleEvaluation);
        }
        Ok(num.eval_rational(t_assign)? / d)
    }

    /// Applies a unit-monomial substitution to numerator and denominator.
    pub fn substitute_monomials(&self, map: &BTreeMap<Var, (Var, i64)>) -> RationalFunction {
        RationalFunction::new(
            self.num.substitute_monomials(map),
            self.den.substitute_monomials(map),
        )
        .expect("unit substitution preserves nonzero denominator")
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<RationalFunction, AlgebraError> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        let mut acc = RationalFunction::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }
}

/// The factor `1 - c * m` where `m` is the monomial with the given
/// variable exponents. Used for det-type L-factor terms.
pub fn one_minus_monomial(c: BigRational, exps: &[(Var, i64)]) -> LaurentPoly {
    let mut m = LaurentPoly::constant(c);
    for &(v, e) in exps {
        m = m.mul(&LaurentPoly::monomial(BigRational::one(), v, e));
    }
    LaurentPoly::one().sub(&m)
}

/// Exact zeta factor 1 / (1 - u^{2s}) as a rational function in `u`
/// (recall u^2 = q^{-1}).
pub fn zeta_symbolic(s: i64) -> Result<RationalFunction, AlgebraError> {
    if s == 0 {
        return Err(AlgebraError::DivisionByZero);
    }
    let den = one_minus_monomial(rat_int(1), &[(Var::U, 2 * s)]);
    RationalFunction::new(LaurentPoly::one(), den)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u32) -> LaurentPoly {
        LaurentPoly::var(Var::T(i))
    }

    fn one_minus(p: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::one().sub(p)
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        // (1 - u^2) * 1/(1 - u^2) = 1
        let p = one_minus(&LaurentPoly::monomial(rat_int(1), Var::U, 2));
        let f = RationalFunction::from_poly(p.clone());
        let g = RationalFunction::new(LaurentPoly::one(), p).unwrap();
        assert!(f.mul(&g).is_one());
    }

    #[test]
    fn partial_fraction_sum_is_one() {
        // 1/(1 - t) + 1/(1 - t^-1) = 1
        let f = RationalFunction::new(LaurentPoly::one(), one_minus(&t(1))).unwrap();
        let g = RationalFunction::new(
            LaurentPoly::one(),
            one_minus(&LaurentPoly::monomial(rat_int(1), Var::T(1), -1)),
        )
        .unwrap();
        let s = f.add(&g);
        assert!(s.is_one(), "got {}", s);
        // cross-check at 5 random rational points
        let mut rng = SplitMix64::new(3);
        let mut checked = 0;
        while checked < 5 {
            let n = rng.range_i64(2, 9999);
            let d = rng.range_i64(1, 9999);
            if n == d {
                continue;
            }
            let mut asn = BTreeMap::new();
            asn.insert(Var::T(1), rat(n, d));
            let lhs = f.eval_rational(&asn).unwrap() + g.eval_rational(&asn).unwrap();
            assert_eq!(lhs, rat_int(1));
            checked += 1;
        }
    }

    #[test]
    fn det_expansion_equals_product_form() {
        // (1-u^4 t1)(1-u^4)(1-u^4 t1^-1)(1-u^4): expanded vs factored
        let f1 = one_minus_monomial(rat_int(1), &[(Var::U, 4), (Var::T(1), 1)]);
        let f2 = one_minus_monomial(rat_int(1), &[(Var::U, 4)]);
        let f3 = one_minus_monomial(rat_int(1), &[(Var::U, 4), (Var::T(1), -1)]);
        let product = f1.mul(&f2).mul(&f3).mul(&f2);
        let expanded = RationalFunction::from_poly(product.clone());
        let factored = RationalFunction::from_poly(f1)
            .mul(&RationalFunction::from_poly(f2.clone()))
            .mul(&RationalFunction::from_poly(f3))
            .mul(&RationalFunction::from_poly(f2));
        assert!(expanded.equals(&factored));
        assert_eq!(expanded, factored);
        let _ = product;
    }

    #[test]
    fn asymmetric_factors_differ() {
        let f = RationalFunction::new(
            LaurentPoly::one(),
            one_minus_monomial(rat_int(1), &[(Var::U, 2), (Var::T(1), 1)]),
        )
        .unwrap();
        let g = RationalFunction::new(
            LaurentPoly::one(),
            one_minus_monomial(rat_int(1), &[(Var::U, 2), (Var::T(1), -1)]),
        )
        .unwrap();
        assert!(!f.equals(&g));
    }

    #[test]
    fn zeta_values_at_small_q() {
        let empty = BTreeMap::new();
        // 1/(1 - u^2) at u^2 = 1/3 (q = 3, s = 1) is 3/2
        let z1 = zeta_symbolic(1).unwrap();
        assert_eq!(z1.eval_rational_at_q(&rat(1, 3), &empty).unwrap(), rat(3, 2));
        // 1/(1 - u^4) at q = 3 is 9/8
        let z2 = zeta_symbolic(2).unwrap();
        assert_eq!(z2.eval_rational_at_q(&rat(1, 3), &empty).unwrap(), rat(9, 8));
    }

    #[test]
    fn odd_power_of_u_cannot_be_evaluated_rationally() {
        let f = RationalFunction::from_poly(LaurentPoly::var(Var::U));
        let empty = BTreeMap::new();
        assert!(matches!(
            f.eval_rational_at_q(&rat(1, 3), &empty),
            Err(AlgebraError::OddHalfPower)
        ));
    }

    #[test]
    fn canonical_form_is_idempotent_and_eval_stable() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..25 {
            // random small rational function in (u, t1)
            let mut num = LaurentPoly::zero();
            let mut den = LaurentPoly::zero();
            for _ in 0..4 {
                let c = rat(rng.range_i64(-6, 6), rng.range_i64(1, 4));
                let eu = rng.range_i64(-3, 3);
                let et = rng.range_i64(-3, 3);
                let m = LaurentPoly::monomial(c, Var::U, eu)
                    .mul(&LaurentPoly::monomial(rat_int(1), Var::T(1), et));
                num = num.add(&m);
                let c2 = rat(rng.range_i64(-6, 6), rng.range_i64(1, 4));
                let m2 = LaurentPoly::monomial(c2, Var::U, rng.range_i64(-3, 3));
                den = den.add(&m2);
            }
            if den.is_zero() {
                continue;
            }
            let f = RationalFunction::new(num.clone(), den.clone()).unwrap();
            let f2 = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
            assert_eq!(f, f2, "canonical form must be idempotent");
            // evaluation agrees with the raw num/den at a random point
            let mut asn = BTreeMap::new();
            asn.insert(Var::U, rat(rng.range_i64(1, 50), rng.range_i64(1, 50)));
            asn.insert(Var::T(1), rat(rng.range_i64(1, 50), rng.range_i64(1, 50)));
            let dv = den.eval_rational(&asn).unwrap();
            if dv.is_zero() {
                continue;
            }
            let raw = num.eval_rational(&asn).unwrap() / dv;
            assert_eq!(f.eval_rational(&asn).unwrap(), raw);
        }
    }

    #[test]
    fn commutativity_through_canonical_form() {
        let mut rng = SplitMix64::new(17);
        for _ in 0..10 {
            let a = one_minus_monomial(
                rat(rng.range_i64(-4, 4), rng.range_i64(1, 3)),
                &[(Var::U, rng.range_i64(-2, 2)), (Var::T(1), rng.range_i64(-2, 2))],
            );
            let b = one_minus_monomial(
                rat(rng.range_i64(-4, 4), rng.range_i64(1, 3)),
                &[(Var::T(1), rng.range_i64(-2, 2))],
            );
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let f = RationalFunction::new(LaurentPoly::one(), a).unwrap();
            let g = RationalFunction::new(b, LaurentPoly::one()).unwrap();
            assert_eq!(f.mul(&g), g.mul(&f));
            assert!(f.mul(&g).equals(&g.mul(&f)));
        }
    }

    #[test]
    fn division_by_zero_function_errors() {
        let f = RationalFunction::one();
        assert!(matches!(f.div(&RationalFunction::zero()), Err(AlgebraError::DivisionByZero)));
    }
}
