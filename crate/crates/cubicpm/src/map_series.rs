//! Map-level counting: closed formulas, the matched-map quadratic, the
//! 3-connected series and the two decomposition systems built on it, plus
//! the classical simple-triangulation series.
//!
//! Size convention throughout: a cubic map of size n has 2n vertices, 3n
//! edges and n+2 faces; z^n carries the size-n count.

use num::{One, Signed, Zero};

use crate::polynomials;
use crate::series::{
    int, rat, solve_algebraic, solve_fixed_point, BivariatePoly, Int, Rat, SeriesError,
    TruncatedSeries,
};

/// Which closed-form counting sequence to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// Rooted cubic planar maps with a distinguished perfect matching.
    MatchedCubic,
    /// All rooted cubic planar maps.
    Cubic,
    /// Rooted bridgeless cubic planar maps with a distinguished matching.
    MatchedBridgeless,
    /// All rooted bridgeless cubic planar maps.
    Bridgeless,
    /// Rooted planar maps with n edges (= rooted 4-regular maps, n vertices).
    RootedPlanarR,
    /// Rooted loopless planar maps with n edges (= rooted bridgeless, dually).
    LooplessL,
}

impl CountKind {
    pub const ALL: [CountKind; 6] = [
        CountKind::MatchedCubic,
        CountKind::Cubic,
        CountKind::MatchedBridgeless,
        CountKind::Bridgeless,
        CountKind::RootedPlanarR,
        CountKind::LooplessL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountKind::MatchedCubic => "matched_cubic",
            CountKind::Cubic => "cubic",
            CountKind::MatchedBridgeless => "matched_bridgeless",
            CountKind::Bridgeless => "bridgeless",
            CountKind::RootedPlanarR => "rooted_planar_R",
            CountKind::LooplessL => "loopless_L",
        }
    }

    pub fn parse(s: &str) -> Option<CountKind> {
        CountKind::ALL.iter().copied().find(|k| k.name() == s)
    }
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * int(k as i64))
}

/// n!! = n(n-2)(n-4)... terminating at 2 or 1; 0!! = 1.
pub fn double_factorial(n: u64) -> Int {
    let mut acc = Int::one();
    let mut k = n;
    while k > 1 {
        acc *= int(k as i64);
        k -= 2;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = exact_div(acc * int((n - i) as i64), &int((i + 1) as i64));
    }
    acc
}

pub fn pow2(e: u64) -> Int {
    Int::one() << e as usize
}

pub fn pow(base: u64, e: u64) -> Int {
    num::pow::pow(int(base as i64), e as usize)
}

fn exact_div(a: Int, b: &Int) -> Int {
    use num::Integer;
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "formula division was not exact: {} / {}", q, b);
    q
}

/// Evaluate one of the closed counting formulas at size n >= 1. Every
/// division is asserted exact; a remainder would mean the formula was
/// transcribed wrong.
pub fn closed_form_count(kind: CountKind, n: u64) -> Int {
    assert!(n >= 1, "counts are defined for n >= 1");
    match kind {
        // 3 * 6^n * C(2n, n) / ((n+2)(n+1))
        CountKind::MatchedCubic => exact_div(
            int(3) * pow(6, n) * binomial(2 * n, n),
            &(int((n + 2) as i64) * int((n + 1) as i64)),
        ),
        // 2^(2n+1) * (3n)!! / ((n+2)! * n!!)
        CountKind::Cubic => exact_div(
            pow2(2 * n + 1) * double_factorial(3 * n),
            &(factorial(n + 2) * double_factorial(n)),
        ),
        // 3 * 2^(n-1) * C(4n+2, n) / ((2n+1)(n+1))
        CountKind::MatchedBridgeless => exact_div(
            int(3) * pow2(n - 1) * binomial(4 * n + 2, n),
            &(int((2 * n + 1) as i64) * int((n + 1) as i64)),
        ),
        // 2^(n+1) * C(3n, n) / ((2n+2)(2n+1))
        CountKind::Bridgeless => exact_div(
            pow2(n + 1) * binomial(3 * n, n),
            &(int((2 * n + 2) as i64) * int((2 * n + 1) as i64)),
        ),
        // 2 * 3^n * C(2n, n) / ((n+2)(n+1))
        CountKind::RootedPlanarR => exact_div(
            int(2) * pow(3, n) * binomial(2 * n, n),
            &(int((n + 2) as i64) * int((n + 1) as i64)),
        ),
        // C(4n+2, n) / ((2n+1)(n+1))
        CountKind::LooplessL => exact_div(
            binomial(4 * n + 2, n),
            &(int((2 * n + 1) as i64) * int((n + 1) as i64)),
        ),
    }
}

/// Matched cubic map series from its quadratic equation, seed [0].
pub fn matched_map_series(order: usize) -> Result<TruncatedSeries, SeriesError> {
    solve_algebraic(&polynomials::matched_map_quadratic(), &[Rat::zero()], order)
}

/// Matched 3-connected series pair (T0, T1). T1 solves its degree-6 minimal
/// polynomial with seed [0, 0, 1]; T0 = 2 T1 by rerooting (a cubic map on 2n
/// vertices has n matching and 2n non-matching edges).
pub fn matched_3connected_series(
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    let t1 = solve_algebraic(
        &polynomials::three_connected_t1_poly(),
        &[Rat::zero(), Rat::zero(), Rat::one()],
        order,
    )?;
    let t0 = t1.scale(&rat(2, 1));
    Ok((t0, t1))
}

/// All series of the root-edge decomposition of matched cubic maps.
#[derive(Debug, Clone)]
pub struct MatchedMapSystem {
    pub m0: TruncatedSeries,
    pub m1: TruncatedSeries,
    pub d0: TruncatedSeries,
    pub d1: TruncatedSeries,
    pub i: TruncatedSeries,
    pub l: TruncatedSeries,
    pub s0: TruncatedSeries,
    pub s1: TruncatedSeries,
    pub p0: TruncatedSeries,
    pub p1: TruncatedSeries,
    pub h0: TruncatedSeries,
    pub h1: TruncatedSeries,
}

fn require_order(t: &TruncatedSeries, order: usize) -> TruncatedSeries {
    assert!(t.order() >= order, "input series shorter than requested order");
    t.truncated(order)
}

/// Solve the matched cubic map system given the 3-connected input series.
///
/// Index 1 marks classes whose root edge is in the matching, index 0 the
/// rest. The S-equations are iterated in the nonnegative rewriting
/// (D1 - S1 = P1 + H1 and D0 - S0 = L + P0 + H0), and I = L^2/(4z) is used
/// in the cleared form z(1 + D0)^2.
pub fn solve_matched_map_system(
    t0: &TruncatedSeries,
    t1: &TruncatedSeries,
    order: usize,
) -> Result<MatchedMapSystem, SeriesError> {
    let t0 = require_order(t0, order);
    let t1 = require_order(t1, order);
    let z = TruncatedSeries::x(order);
    let one = Rat::one();

    // unknowns: [l, i, s0, s1, p0, p1, h0, h1, d0, d1]
    let sol = solve_fixed_point(10, order, |ys| {
        let d0 = &ys[8];
        let d1 = &ys[9];
        let od0 = d0.add_constant(&one);
        let od1 = d1.add_constant(&one);
        let l = z.mul(&od0).scale(&rat(2, 1));
        let p1 = z.mul(&od0).mul(&od0);
        let p0 = z.mul(&od0).mul(&od1).scale(&rat(2, 1));
        let w = z.mul(&od1).mul(&od0).mul(&od0);
        let h1 = t1
            .compose(&w)
            .expect("substitution argument has zero constant term")
            .divide(&od1)
            .expect("1 + D1 is a unit");
        let h0 = t0
            .compose(&w)
            .expect("substitution argument has zero constant term")
            .divide(&od0)
            .expect("1 + D0 is a unit");
        let i = z.mul(&od0).mul(&od0);
        let s1 = d1.mul(&p1.add(&h1));
        let s0 = d0.mul(&l.add(&p0).add(&h0));
        let d0n = l.add(&s0).add(&p0).add(&h0);
        let d1n = s1.add(&p1).add(&h1);
        vec![l, i, s0, s1, p0, p1, h0, h1, d0n, d1n]
    })?;

    let [l, i, s0, s1, p0, p1, h0, h1, d0, d1]: [TruncatedSeries; 10] =
        sol.try_into().expect("ten unknowns");
    let m0 = d0.clone();
    let m1 = d1.add(&i);
    // forced identities of the decomposition
    assert_eq!(l.mul(&l), i.shift_up(1).scale(&rat(4, 1)), "I != L^2/(4z)");
    assert_eq!(m0, m1.scale(&rat(2, 1)), "rerooting forces M0 = 2 M1");
    Ok(MatchedMapSystem { m0, m1, d0, d1, i, l, s0, s1, p0, p1, h0, h1 })
}

/// Solve the bridgeless variant (loop and isthmus classes removed) and
/// return B = D0 + D1.
pub fn solve_matched_bridgeless_system(
    t0: &TruncatedSeries,
    t1: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let t0 = require_order(t0, order);
    let t1 = require_order(t1, order);
    let z = TruncatedSeries::x(order);
    let one = Rat::one();

    // unknowns: [s0, s1, p0, p1, h0, h1, d0, d1]
    let sol = solve_fixed_point(8, order, |ys| {
        let d0 = &ys[6];
        let d1 = &ys[7];
        let od0 = d0.add_constant(&one);
        let od1 = d1.add_constant(&one);
        let p1 = z.mul(&od0).mul(&od0);
        let p0 = z.mul(&od0).mul(&od1).scale(&rat(2, 1));
        let w = z.mul(&od1).mul(&od0).mul(&od0);
        let h1 = t1
            .compose(&w)
            .expect("substitution argument has zero constant term")
            .divide(&od1)
            .expect("1 + D1 is a unit");
        let h0 = t0
            .compose(&w)
            .expect("substitution argument has zero constant term")
            .divide(&od0)
            .expect("1 + D0 is a unit");
        let s1 = d1.mul(&p1.add(&h1));
        let s0 = d0.mul(&p0.add(&h0));
        let d0n = s0.add(&p0).add(&h0);
        let d1n = s1.add(&p1).add(&h1);
        vec![s0, s1, p0, p1, h0, h1, d0n, d1n]
    })?;

    Ok(sol[6].add(&sol[7]))
}

/// Tutte's simple-triangulation series: U solves z = U(1-U)^3, taken as the
/// fixed point U = z + 3U^2 - 3U^3 + U^4; Theta = U(1 - 2U); and the series
/// of 3-connected cubic maps is M3 = Theta - z (the lone triangle does not
/// count as 3-connected).
pub fn tutte_triangulation_series(
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries, TruncatedSeries), SeriesError> {
    let z = TruncatedSeries::x(order);
    let sol = solve_fixed_point(1, order, |ys| {
        let u = &ys[0];
        let u2 = u.mul(u);
        let u3 = u2.mul(u);
        let u4 = u2.mul(&u2);
        vec![z.add(&u2.scale(&rat(3, 1))).sub(&u3.scale(&rat(3, 1))).add(&u4)]
    })?;
    let u = sol.into_iter().next().expect("one unknown");
    let theta = u.sub(&u.mul(&u).scale(&rat(2, 1)));
    let m3 = theta.sub(&z);
    Ok((u, theta, m3))
}

/// Result of substituting a series into a candidate annihilating polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residual {
    /// p(y(z), z) = 0 through the whole truncation order.
    Clean,
    /// Index of the first nonzero residual coefficient.
    FirstNonzeroAt(usize),
}

pub fn verify_minimal_polynomial(y: &TruncatedSeries, p: &BivariatePoly) -> Residual {
    match p.eval_series(y).valuation() {
        None => Residual::Clean,
        Some(v) => Residual::FirstNonzeroAt(v),
    }
}

/// Series coefficients [z^1..z^max_n] as exact integers (all the map series
/// here are integral; asserts if one is not).
pub fn integer_coefficients(s: &TruncatedSeries, max_n: usize) -> Vec<Int> {
    (1..=max_n)
        .map(|n| {
            let c = s.coeff(n);
            assert!(c.is_integer(), "coefficient {} is not an integer", n);
            assert!(!c.is_negative(), "coefficient {} is negative", n);
            c.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goldens;

    #[test]
    fn closed_forms_small_values() {
        assert_eq!(closed_form_count(CountKind::MatchedCubic, 1), int(6));
        assert_eq!(closed_form_count(CountKind::MatchedCubic, 2), int(54));
        assert_eq!(closed_form_count(CountKind::MatchedCubic, 5), int(139968));
        assert_eq!(closed_form_count(CountKind::MatchedBridgeless, 1), int(3));
        assert_eq!(closed_form_count(CountKind::MatchedBridgeless, 3), int(156));
        assert_eq!(closed_form_count(CountKind::Cubic, 1), int(4));
        assert_eq!(closed_form_count(CountKind::Cubic, 2), int(32));
        assert_eq!(closed_form_count(CountKind::Bridgeless, 1), int(1));
        assert_eq!(closed_form_count(CountKind::RootedPlanarR, 1), int(2));
        assert_eq!(closed_form_count(CountKind::RootedPlanarR, 2), int(9));
        assert_eq!(closed_form_count(CountKind::RootedPlanarR, 3), int(54));
        assert_eq!(closed_form_count(CountKind::LooplessL, 1), int(1));
        assert_eq!(closed_form_count(CountKind::LooplessL, 2), int(3));
        assert_eq!(closed_form_count(CountKind::LooplessL, 3), int(13));
    }

    #[test]
    fn closed_forms_divide_exactly_up_to_200() {
        // exact_div panics on a remainder, so evaluation is the test
        for kind in CountKind::ALL {
            for n in 1..=200 {
                let v = closed_form_count(kind, n);
                assert!(v.is_positive());
            }
        }
    }

    #[test]
    fn matched_series_first_terms() {
        let m = matched_map_series(10).unwrap();
        assert_eq!(
            integer_coefficients(&m, 4),
            vec![int(6), int(54), int(648), int(9072)]
        );
        assert!(m.coeff(0).is_zero());
    }

    #[test]
    fn matched_series_matches_closed_form() {
        let m = matched_map_series(30).unwrap();
        for n in 1..=30u64 {
            assert_eq!(
                m.coeff(n as usize).to_integer(),
                closed_form_count(CountKind::MatchedCubic, n),
                "mismatch at n = {}",
                n
            );
        }
    }

    #[test]
    fn three_connected_first_terms() {
        let (t0, t1) = matched_3connected_series(10).unwrap();
        let t = t0.add(&t1);
        // K4 has a unique rooting and 3 matchings; the prism has 3 and 4
        assert_eq!(t.coeff(2), &rat(3, 1));
        assert_eq!(t.coeff(3), &rat(12, 1));
        assert_eq!(t.coeff(4), &rat(69, 1));
        assert_eq!(t.coeff(5), &rat(468, 1));
        assert_eq!(t.coeff(10), &rat(22201410, 1));
        assert_eq!(
            integer_coefficients(&t1, 6),
            vec![int(0), int(1), int(4), int(23), int(156), int(1194)]
        );
    }

    #[test]
    fn map_system_reproduces_quadratic_series() {
        let order = 12;
        let (t0, t1) = matched_3connected_series(order).unwrap();
        let sys = solve_matched_map_system(&t0, &t1, order).unwrap();
        let m = sys.m0.add(&sys.m1);
        assert_eq!(m, matched_map_series(order).unwrap());
        assert_eq!(sys.m0.coeff(1), &rat(4, 1));
        assert_eq!(sys.m1.coeff(1), &rat(2, 1));
        // 2-vertex census by root class: 2 loop-rooted dumbbells, 1
        // isthmus-rooted dumbbell, triple edge split 1/2 by matching
        assert_eq!(sys.l.coeff(1), &rat(2, 1));
        assert_eq!(sys.i.coeff(1), &rat(1, 1));
        assert_eq!(sys.p1.coeff(1), &rat(1, 1));
        assert_eq!(sys.p0.coeff(1), &rat(2, 1));
    }

    #[test]
    fn bridgeless_system_matches_table_and_quartic() {
        let order = 12;
        let (t0, t1) = matched_3connected_series(order).unwrap();
        let b = solve_matched_bridgeless_system(&t0, &t1, order).unwrap();
        assert_eq!(
            integer_coefficients(&b, 4),
            vec![int(3), int(18), int(156), int(1632)]
        );
        for n in 1..=order as u64 {
            assert_eq!(
                b.coeff(n as usize).to_integer(),
                closed_form_count(CountKind::MatchedBridgeless, n)
            );
        }
        assert_eq!(
            verify_minimal_polynomial(&b, &polynomials::matched_bridgeless_quartic()),
            Residual::Clean
        );
        // B1/3 = 2^0 * L1
        assert_eq!(b.coeff(1), &rat(3, 1));
    }

    #[test]
    fn residual_detects_wrong_polynomial() {
        let m = matched_map_series(8).unwrap();
        assert_eq!(
            verify_minimal_polynomial(&m, &polynomials::matched_map_quadratic()),
            Residual::Clean
        );
        // y - z is wrong already at z^1
        let wrong = BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(verify_minimal_polynomial(&m, &wrong), Residual::FirstNonzeroAt(1));
    }

    #[test]
    fn t1_polynomial_residual_clean() {
        let (_, t1) = matched_3connected_series(30).unwrap();
        assert_eq!(
            verify_minimal_polynomial(&t1, &polynomials::three_connected_t1_poly()),
            Residual::Clean
        );
    }

    #[test]
    fn triangulation_series_first_terms() {
        let (u, theta, m3) = tutte_triangulation_series(6).unwrap();
        assert_eq!(theta, TruncatedSeries::from_integers(6, &[0, 1, 1, 3, 13, 68, 399]));
        assert!(m3.coeff(1).is_zero());
        assert_eq!(m3.coeff(2), &rat(1, 1));
        // the parametrization polynomial annihilates U
        assert_eq!(
            verify_minimal_polynomial(&u, &polynomials::triangulation_parameter_poly()),
            Residual::Clean
        );
    }

    #[test]
    fn table1_golden_reproduction() {
        let order = 16;
        let m = matched_map_series(order).unwrap();
        let (t0, t1) = matched_3connected_series(order).unwrap();
        let b = solve_matched_bridgeless_system(&t0, &t1, order).unwrap();
        let t = t1.scale(&rat(3, 1));
        for row in goldens::table1() {
            let k = (row.vertices / 2) as usize;
            assert_eq!(m.coeff(k).to_integer(), row.matched, "M at {}", row.vertices);
            assert_eq!(b.coeff(k).to_integer(), row.bridgeless, "B at {}", row.vertices);
            assert_eq!(t.coeff(k).to_integer(), row.three_connected, "T at {}", row.vertices);
        }
    }

    #[test]
    fn section6_count_identities() {
        // M_n/3 = 2^(n-1) R_n and B_n/3 = 2^(n-1) L_n, as pure arithmetic
        for n in 1..=30u64 {
            let m = closed_form_count(CountKind::MatchedCubic, n);
            let r = closed_form_count(CountKind::RootedPlanarR, n);
            assert_eq!(m, int(3) * pow2(n - 1) * &r);
            let b = closed_form_count(CountKind::MatchedBridgeless, n);
            let l = closed_form_count(CountKind::LooplessL, n);
            assert_eq!(b, int(3) * pow2(n - 1) * &l);
        }
    }
}
