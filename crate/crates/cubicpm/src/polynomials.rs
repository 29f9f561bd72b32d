//! Every polynomial literal used by this crate, transcribed in one place.
//!
//! Each literal is pinned by tests elsewhere: the bivariate ones by
//! series-residual checks, the univariate ones by root isolation against
//! reference decimals. Term order inside each constructor mirrors the written
//! form of the equation it encodes, to make proofreading against that form
//! mechanical.

use crate::series::BivariatePoly;

/// 72 M^2 z^2 + (216 z^2 - 36 z + 1) M + 162 z^2 - 6 z = 0,
/// the quadratic satisfied by the series counting rooted cubic planar maps
/// with a distinguished perfect matching (z marks faces minus two).
/// Branch seed: [0].
pub fn matched_map_quadratic() -> BivariatePoly {
    BivariatePoly::from_terms(&[
        (2, 2, 72),
        (1, 2, 216),
        (1, 1, -36),
        (1, 0, 1),
        (0, 2, 162),
        (0, 1, -6),
    ])
}

/// Degree-6 minimal polynomial of T1, the series of matched 3-connected
/// cubic maps rooted on a matching edge. Branch seed: [0, 0, 1].
pub fn three_connected_t1_poly() -> BivariatePoly {
    BivariatePoly::from_terms(&[
        (6, 0, 1),
        (5, 1, 24),
        (5, 0, 16),
        (4, 2, 60),
        (4, 1, 92),
        (4, 0, 25),
        (3, 3, 80),
        (3, 2, 208),
        (3, 1, 96),
        (3, 0, 19),
        (2, 4, 60),
        (2, 3, 232),
        (2, 2, 150),
        (2, 1, 12),
        (2, 0, 7),
        (1, 5, 24),
        (1, 4, 128),
        (1, 3, 112),
        (1, 2, 1),
        (1, 1, -16),
        (1, 0, 1),
        (0, 6, 4),
        (0, 5, 28),
        (0, 4, 33),
        (0, 3, 12),
        (0, 2, -1),
    ])
}

/// 64 B^4 z^3 + (384 z^3 + 144 z^2) B^3 + (864 z^3 + 1224 z^2 + 108 z) B^2
/// + (864 z^3 + 2700 z^2 - 756 z + 27) B + 324 z^3 + 1782 z^2 - 81 z = 0,
/// the quartic satisfied by the matched bridgeless cubic map series.
pub fn matched_bridgeless_quartic() -> BivariatePoly {
    BivariatePoly::from_terms(&[
        (4, 3, 64),
        (3, 3, 384),
        (3, 2, 144),
        (2, 3, 864),
        (2, 2, 1224),
        (2, 1, 108),
        (1, 3, 864),
        (1, 2, 2700),
        (1, 1, -756),
        (1, 0, 27),
        (0, 3, 324),
        (0, 2, 1782),
        (0, 1, -81),
    ])
}

/// U(1-U)^3 - z = 0, the parametrization of the simple-triangulation series.
/// Branch seed: [0, 1]. Expanded: U - 3U^2 + 3U^3 - U^4 - z.
pub fn triangulation_parameter_poly() -> BivariatePoly {
    BivariatePoly::from_terms(&[(1, 0, 1), (2, 0, -3), (3, 0, 3), (4, 0, -1), (0, 1, -1)])
}

/// Univariate integer polynomials, coefficients in ascending degree order.
pub type IntPolyCoeffs = &'static [i64];

/// 904 x^8 + 7232 x^6 - 11833 x^4 - 45362 x^2 + 3616: its smallest positive
/// root is the dominant singularity for matched connected cubic planar
/// graphs (sigma ~ 0.27964).
pub const SIGMA_POLY: IntPolyCoeffs = &[3616, 0, -45362, 0, -11833, 0, 7232, 0, 904];

/// 729 x^12 + 17496 x^10 + 148716 x^8 + 513216 x^6 - 7293760 x^4
/// + 279936 x^2 + 46656: smallest positive root is the singularity for
/// labeled cubic planar graphs (rho ~ 0.31923).
pub const RHO_POLY: IntPolyCoeffs =
    &[46656, 0, 279936, 0, -7293760, 0, 513216, 0, 148716, 0, 17496, 0, 729];

/// 216 x^6 + 864 x^4 - 5587 x^2 + 432: smallest positive root is the
/// singularity for matched bridgeless cubic planar graphs (sigma_b ~ 0.27980).
pub const SIGMA_B_POLY: IntPolyCoeffs = &[432, 0, -5587, 0, 864, 0, 216];

/// 54 x^6 + 324 x^4 - 4265 x^2 + 432: smallest positive root is the
/// singularity for labeled bridgeless cubic planar graphs (rho_b ~ 0.319523).
pub const RHO_B_POLY: IntPolyCoeffs = &[432, 0, -4265, 0, 324, 0, 54];

/// 2 x^4 + 10 x^2 - 1: its smallest (only) positive root is
/// sqrt((3 sqrt 3 - 5)/2), the growth-rate constant for simple bridgeless
/// cubic maps (alpha_b ~ 0.31317). Derived by clearing the nested radical.
pub const ALPHA_B_POLY: IntPolyCoeffs = &[-1, 0, 10, 0, 2];
