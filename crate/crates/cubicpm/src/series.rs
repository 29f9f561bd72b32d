//! Truncated formal power series over exact rationals.
//!
//! Everything in here is exact: coefficients are `BigRational`, truncation
//! order is explicit, and binary operations demand equal orders so that a
//! silent precision loss cannot slip through a pipeline. The two solvers
//! (`solve_fixed_point`, `solve_algebraic`) are the workhorses behind every
//! generating-function computation in this crate.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Binary operation on series of different truncation orders.
    OrderMismatch(usize, usize),
    /// Composition or exponential of a series with nonzero constant term.
    NonzeroConstantTerm,
    /// Division where the numerator is not divisible by the denominator's
    /// leading power of z.
    InexactDivision { valuation: usize },
    /// Division by the zero series.
    DivisionByZero,
    /// Fixed-point iteration did not stabilize within the iteration cap.
    Divergence { iterations: usize },
    /// A solution that must have nonnegative coefficients came out negative.
    NegativeCoefficient { component: usize, index: usize },
    /// No power-series branch of the polynomial is consistent with the seed.
    BranchError { index: usize },
    /// The y-derivative degenerates before the seed pins down a branch.
    NeedsLongerSeed,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OrderMismatch(a, b) => write!(f, "series order mismatch: {} vs {}", a, b),
            SeriesError::NonzeroConstantTerm => write!(f, "series must have zero constant term"),
            SeriesError::InexactDivision { valuation } => {
                write!(f, "inexact division by z^{}", valuation)
            }
            SeriesError::DivisionByZero => write!(f, "division by zero series"),
            SeriesError::Divergence { iterations } => {
                write!(f, "fixed point did not stabilize within {} iterations", iterations)
            }
            SeriesError::NegativeCoefficient { component, index } => write!(
                f,
                "negative coefficient in component {} at index {} (transcription alarm)",
                component, index
            ),
            SeriesError::BranchError { index } => {
                write!(f, "no branch consistent with seed (first obstruction at z^{})", index)
            }
            SeriesError::NeedsLongerSeed => {
                write!(f, "derivative degenerate beyond seed length; seed must pin more coefficients")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Which coefficientwise binary operation `combine` performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

/// A power series modulo z^{order+1}: coefficients of z^0 .. z^order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rat::one())
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series z (or z^k via `monomial`).
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, Rat::one())
    }

    pub fn monomial(order: usize, k: usize, c: Rat) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant coefficient");
        TruncatedSeries { coeffs }
    }

    /// Test helper: integer coefficients c0, c1, ...
    pub fn from_integers(order: usize, cs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (i, &c) in cs.iter().enumerate() {
            if i <= order {
                s.coeffs[i] = rat(c, 1);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a series by truncation");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    /// Coefficientwise add/sub or Cauchy product, truncated to the common order.
    pub fn combine(&self, other: &Self, op: BinOp) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(match op {
            BinOp::Add => self.add(other),
            BinOp::Sub => self.sub(other),
            BinOp::Mul => self.mul(other),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch in add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch in sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch in mul");
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add_constant(&self, c: &Rat) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += c;
        s
    }

    /// Multiply by z^k, dropping the coefficients that overflow the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for i in 0..=n.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        TruncatedSeries { coeffs }
    }

    /// f(g(z)) mod z^{order+1}, by Horner evaluation. Requires g(0) = 0.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        self.check_order(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = Self::zero(self.order());
        for k in (0..=self.order()).rev() {
            acc = acc.mul(g).add_constant(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// a / b. If b has valuation k, every coefficient of a below z^k must be
    /// zero; the result then has order self.order() - k.
    pub fn divide(&self, b: &Self) -> Result<Self, SeriesError> {
        self.check_order(b)?;
        let k = match b.valuation() {
            Some(k) => k,
            None => return Err(SeriesError::DivisionByZero),
        };
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::InexactDivision { valuation: k });
        }
        let n = self.order() - k;
        // long division by the unit part of b, after shifting both down by z^k
        let mut q = vec![Rat::zero(); n + 1];
        let lead = &b.coeffs[k];
        for i in 0..=n {
            let mut acc = self.coeffs[i + k].clone();
            for j in 0..i {
                if !q[j].is_zero() {
                    acc -= &q[j] * &b.coeffs[k + i - j];
                }
            }
            q[i] = acc / lead;
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// 1 / b for b with nonzero constant term, at the same order.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Self::one(self.order()).divide(self)
    }

    /// exp(f) = sum f^k / k! for f with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = Self::one(self.order());
        let mut term = Self::one(self.order());
        for k in 1..=self.order() {
            term = term.mul(self).scale(&rat(1, k as i64));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Inverse of the pointing operator f -> z f': divides coefficient n by n.
    /// Requires zero constant term.
    pub fn integrate_pointed(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut coeffs = vec![Rat::zero(); self.order() + 1];
        for n in 1..=self.order() {
            coeffs[n] = &self.coeffs[n] / rat(n as i64, 1);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Exact partial-sum evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Iterate y <- F(z, y) from y = 0 until two consecutive rounds agree on
/// every coefficient up to the truncation order. The returned solution is
/// checked to be coefficientwise nonnegative; a violation means the system
/// was transcribed wrong, not that iteration failed.
pub fn solve_fixed_point<F>(
    unknowns: usize,
    order: usize,
    f: F,
) -> Result<Vec<TruncatedSeries>, SeriesError>
where
    F: Fn(&[TruncatedSeries]) -> Vec<TruncatedSeries>,
{
    let cap = 4 * (order + 1);
    let mut y: Vec<TruncatedSeries> = vec![TruncatedSeries::zero(order); unknowns];
    for _ in 0..cap {
        let next = f(&y);
        assert_eq!(next.len(), unknowns, "system returned wrong number of series");
        for s in &next {
            assert_eq!(s.order(), order, "system changed the truncation order");
        }
        if next == y {
            for (ci, s) in y.iter().enumerate() {
                for (i, c) in s.coeffs().iter().enumerate() {
                    if c.is_negative() {
                        return Err(SeriesError::NegativeCoefficient { component: ci, index: i });
                    }
                }
            }
            return Ok(y);
        }
        y = next;
    }
    Err(SeriesError::Divergence { iterations: cap })
}

/// A polynomial in y and z with integer coefficients, stored sparsely.
/// Zero coefficients are never kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(u32, u32), Int>,
}

impl BivariatePoly {
    pub fn new() -> Self {
        BivariatePoly { coeffs: BTreeMap::new() }
    }

    /// Terms as (deg_y, deg_z, coefficient).
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::new();
        for &(dy, dz, c) in terms {
            p.add_term(dy, dz, Int::from(c));
        }
        p
    }

    pub fn add_term(&mut self, deg_y: u32, deg_z: u32, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((deg_y, deg_z)).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(deg_y, deg_z));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Int)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_deg_y(&self) -> u32 {
        self.coeffs.keys().map(|&(dy, _)| dy).max().unwrap_or(0)
    }

    /// d/dy.
    pub fn partial_y(&self) -> Self {
        let mut p = Self::new();
        for (&(dy, dz), c) in &self.coeffs {
            if dy > 0 {
                p.add_term(dy - 1, dz, c * Int::from(dy));
            }
        }
        p
    }

    /// The coefficient of y^k, as a series in z at the given order.
    fn y_coefficient_series(&self, k: u32, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        for (&(dy, dz), c) in &self.coeffs {
            if dy == k && (dz as usize) <= order {
                s = s.add(&TruncatedSeries::monomial(
                    order,
                    dz as usize,
                    Rat::from_integer(c.clone()),
                ));
            }
        }
        s
    }

    /// p(y(z), z) mod z^{order+1}.
    pub fn eval_series(&self, y: &TruncatedSeries) -> TruncatedSeries {
        let order = y.order();
        let mut acc = TruncatedSeries::zero(order);
        for k in (0..=self.max_deg_y()).rev() {
            acc = acc.mul(y).add(&self.y_coefficient_series(k, order));
        }
        acc
    }
}

impl Default for BivariatePoly {
    fn default() -> Self {
        Self::new()
    }
}

/// Solve p(y(z), z) = 0 mod z^{order+1} for the power-series branch pinned
/// down by the seed coefficients.
///
/// Uses quadratically convergent Newton lifting when the y-derivative at the
/// current approximation is invertible (nonzero constant term), and falls
/// back to determining one coefficient at a time when the derivative has
/// positive valuation.
pub fn solve_algebraic(
    p: &BivariatePoly,
    seed: &[Rat],
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let mut y = TruncatedSeries::zero(order);
    for (i, c) in seed.iter().enumerate() {
        if i <= order {
            y = y.add(&TruncatedSeries::monomial(order, i, c.clone()));
        }
    }
    let deriv = p.partial_y();
    let cap = 4 * (order + 2);
    for _ in 0..cap {
        let residual = p.eval_series(&y);
        let v_r = match residual.valuation() {
            None => {
                // converged; the seed must survive in the solution
                for (i, c) in seed.iter().enumerate() {
                    if i <= order && y.coeff(i) != c {
                        return Err(SeriesError::BranchError { index: i });
                    }
                }
                return Ok(y);
            }
            Some(v) => v,
        };
        let d = deriv.eval_series(&y);
        let v_d = match d.valuation() {
            None => return Err(SeriesError::NeedsLongerSeed),
            Some(v) => v,
        };
        if v_d == 0 {
            // Newton step corrects every determinable coefficient at once
            let delta = residual.divide(&d).expect("derivative is a unit");
            y = y.sub(&delta);
        } else {
            if v_r < v_d {
                return Err(SeriesError::BranchError { index: v_r });
            }
            let k = v_r - v_d;
            if k > order {
                return Ok(y);
            }
            if (k as usize) < seed.len() {
                // the correction would overwrite a pinned coefficient
                return Err(SeriesError::BranchError { index: k });
            }
            let c = -(residual.coeff(v_r) / d.coeff(v_d));
            let before = y.clone();
            y = y.add(&TruncatedSeries::monomial(order, k, c));
            if y == before {
                return Err(SeriesError::BranchError { index: k });
            }
        }
    }
    Err(SeriesError::Divergence { iterations: cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = TruncatedSeries::from_integers(2, &[1, 1]);
        let b = TruncatedSeries::from_integers(2, &[1, -1]);
        let got = a.combine(&b, BinOp::Mul).unwrap();
        assert_eq!(got, TruncatedSeries::from_integers(2, &[1, 0, -1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let a = TruncatedSeries::from_integers(5, &[3, 1, 4, 1, 5, 9]);
        let got = a.combine(&TruncatedSeries::zero(5), BinOp::Add).unwrap();
        assert_eq!(got, a);
    }

    #[test]
    fn square_of_z_plus_3z2() {
        let a = TruncatedSeries::from_integers(4, &[0, 1, 3]);
        let got = a.mul(&a);
        assert_eq!(got, TruncatedSeries::from_integers(4, &[0, 0, 1, 6, 9]));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = TruncatedSeries::zero(3);
        let b = TruncatedSeries::zero(4);
        assert_eq!(a.combine(&b, BinOp::Add), Err(SeriesError::OrderMismatch(3, 4)));
    }

    #[test]
    fn compose_square_with_double() {
        let f = TruncatedSeries::from_integers(3, &[0, 0, 1]);
        let g = TruncatedSeries::from_integers(3, &[0, 2]);
        assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::from_integers(3, &[0, 0, 4]));
    }

    #[test]
    fn compose_with_identity() {
        let f = TruncatedSeries::from_integers(6, &[7, 1, 0, 5, 2, 0, 3]);
        let z = TruncatedSeries::x(6);
        assert_eq!(f.compose(&z).unwrap(), f);
    }

    #[test]
    fn compose_needs_zero_constant() {
        let f = TruncatedSeries::x(3);
        let g = TruncatedSeries::one(3);
        assert_eq!(f.compose(&g), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn divide_by_power_of_z() {
        let a = TruncatedSeries::from_integers(3, &[0, 0, 1, 1]);
        let z = TruncatedSeries::x(3);
        let got = a.divide(&z).unwrap();
        assert_eq!(got, TruncatedSeries::from_integers(2, &[0, 1, 1]));
    }

    #[test]
    fn geometric_series() {
        let one = TruncatedSeries::one(3);
        let b = TruncatedSeries::from_integers(3, &[1, -1]);
        assert_eq!(one.divide(&b).unwrap(), TruncatedSeries::from_integers(3, &[1, 1, 1, 1]));
    }

    #[test]
    fn inexact_division_is_rejected() {
        let a = TruncatedSeries::from_integers(3, &[1, 1]);
        let z = TruncatedSeries::x(3);
        assert_eq!(a.divide(&z), Err(SeriesError::InexactDivision { valuation: 1 }));
    }

    #[test]
    fn exp_of_zero_and_z() {
        assert_eq!(TruncatedSeries::zero(4).exp().unwrap(), TruncatedSeries::one(4));
        let e = TruncatedSeries::x(3).exp().unwrap();
        assert_eq!(e.coeff(0), &rat(1, 1));
        assert_eq!(e.coeff(1), &rat(1, 1));
        assert_eq!(e.coeff(2), &rat(1, 2));
        assert_eq!(e.coeff(3), &rat(1, 6));
    }

    #[test]
    fn integrate_pointed_examples() {
        let f = TruncatedSeries::from_integers(3, &[0, 0, 1]);
        let g = f.integrate_pointed().unwrap();
        assert_eq!(g.coeff(2), &rat(1, 2));
        assert_eq!(
            TruncatedSeries::zero(5).integrate_pointed().unwrap(),
            TruncatedSeries::zero(5)
        );
    }

    #[test]
    fn fixed_point_catalan() {
        // y = z + y^2
        let sol = solve_fixed_point(1, 4, |ys| {
            let y = &ys[0];
            vec![TruncatedSeries::x(4).add(&y.mul(y))]
        })
        .unwrap();
        assert_eq!(sol[0], TruncatedSeries::from_integers(4, &[0, 1, 1, 2, 5]));
    }

    #[test]
    fn fixed_point_divergence() {
        // y = z + y never stabilizes
        let err = solve_fixed_point(1, 3, |ys| vec![TruncatedSeries::x(3).add(&ys[0])]);
        assert!(matches!(err, Err(SeriesError::Divergence { .. })));
    }

    #[test]
    fn algebraic_catalan_branch() {
        // y^2 - y + z = 0, combinatorial branch through 0
        let p = BivariatePoly::from_terms(&[(2, 0, 1), (1, 0, -1), (0, 1, 1)]);
        let y = solve_algebraic(&p, &[Rat::zero()], 5).unwrap();
        assert_eq!(y, TruncatedSeries::from_integers(5, &[0, 1, 1, 2, 5, 14]));
        // residual is identically zero
        assert!(p.eval_series(&y).is_zero());
    }

    #[test]
    fn algebraic_bad_seed() {
        let p = BivariatePoly::from_terms(&[(2, 0, 1), (1, 0, -1), (0, 1, 1)]);
        let err = solve_algebraic(&p, &[rat(2, 1)], 5);
        assert!(matches!(err, Err(SeriesError::BranchError { .. })));
    }

    #[test]
    fn algebraic_degenerate_derivative() {
        // y^2 - z^2 = 0: derivative 2y vanishes at the zero seed
        let p = BivariatePoly::from_terms(&[(2, 0, 1), (0, 2, -1)]);
        let err = solve_algebraic(&p, &[Rat::zero()], 5);
        assert!(matches!(err, Err(SeriesError::NeedsLongerSeed)));
        // seeding y = z pins the branch; the linear fallback finishes it
        let y = solve_algebraic(&p, &[Rat::zero(), Rat::one()], 5).unwrap();
        assert_eq!(y, TruncatedSeries::from_integers(5, &[0, 1]));
    }

    #[test]
    fn eval_partial_sum() {
        let f = TruncatedSeries::from_integers(2, &[1, 2, 3]);
        assert_eq!(f.eval(&rat(1, 2)), rat(11, 4));
    }
}
