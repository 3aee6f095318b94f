//! Closed-form bounds on book Ramsey numbers as functions of the page ratio
//! alpha, the crossing point between the two lower-bound constructions, the
//! discriminant identities behind the quadratic bounds, expectation formulas
//! for the three-block construction, and a rigorous interval certificate for
//! the terminal slack inequality.
//!
//! Everything here evaluates leading coefficients: a bound value of, say,
//! 2.25 means the corresponding Ramsey number grows like 2.25*n for books
//! with n pages (plus lower-order terms that the formulas deliberately drop).

mod certify;
mod interval;

pub use certify::{
    certify_no_solution, certify_no_solution_with_leaves, inequality_slack, IntervalCertificate,
    LeafBox, LeafKind, Verdict, SLACK_C, SLACK_D, SLACK_FUNCTION_ID,
};
pub use interval::Interval;

/// Errors from bound evaluation and certification.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundsError {
    #[error("alpha {alpha} outside [{lo}, {hi}]")]
    AlphaOutOfRange { alpha: f64, lo: f64, hi: f64 },
    #[error("book order {0} must be at least 2")]
    BadOrder(usize),
    #[error("exponent base {0} must be at least 1")]
    BaseBelowOne(f64),
    #[error("vertex count {0} must be a positive multiple of 3")]
    NotDivisibleByThree(usize),
    #[error("probability {0} is not in [0, 1]")]
    BadProbability(f64),
    #[error("tolerance {0} must be positive")]
    BadTolerance(f64),
    #[error("alpha box [{lo}, {hi}] is not contained in [1/6, 1/4]")]
    BadAlphaBox { lo: f64, hi: f64 },
}

/// Left end of the middle regime.
pub const ALPHA_SIXTH: f64 = 1.0 / 6.0;
/// Right end of the middle regime.
pub const ALPHA_QUARTER: f64 = 0.25;

/// The ratio where the three-block and random lower bounds exchange the
/// lead: (52 - 16*sqrt(3)) / 121.
pub fn crossing_alpha_closed_form() -> f64 {
    (52.0 - 16.0 * 3.0_f64.sqrt()) / 121.0
}

fn check_alpha(alpha: f64, lo: f64, hi: f64) -> Result<(), BoundsError> {
    if alpha.is_finite() && lo <= alpha && alpha <= hi {
        Ok(())
    } else {
        Err(BoundsError::AlphaOutOfRange { alpha, lo, hi })
    }
}

/// Leading coefficient of the random lower bound for order-k books whose
/// page counts are in ratio alpha: (alpha^(1/k) + 1)^k.
pub fn random_bound(alpha: f64, k: usize) -> Result<f64, BoundsError> {
    if k < 2 {
        return Err(BoundsError::BadOrder(k));
    }
    check_alpha(alpha, f64::MIN_POSITIVE, 1.0)?;
    let root = if k == 2 {
        alpha.sqrt()
    } else {
        alpha.powf(1.0 / k as f64)
    };
    Ok((root + 1.0).powi(k as i32))
}

/// Leading coefficient of the upper bound 3/2 + 3*alpha on the middle range.
pub fn mid_upper(alpha: f64) -> Result<f64, BoundsError> {
    check_alpha(alpha, ALPHA_SIXTH, ALPHA_QUARTER)?;
    Ok(1.5 + 3.0 * alpha)
}

/// Cross-pair red probability that balances the three-block construction:
/// p = (1 - sqrt(alpha*(3 - 2*alpha))) / (1 - 2*alpha).
///
/// Defined on [1/6, (52-16*sqrt(3))/121]; on that range it satisfies
/// alpha*(1 + 2p^2) = (1-p)^2.
pub fn p_star(alpha: f64) -> Result<f64, BoundsError> {
    check_alpha(alpha, ALPHA_SIXTH, crossing_alpha_closed_form())?;
    Ok(p_star_raw(alpha))
}

fn p_star_raw(alpha: f64) -> f64 {
    (1.0 - (alpha * (3.0 - 2.0 * alpha)).sqrt()) / (1.0 - 2.0 * alpha)
}

/// Leading coefficient of the three-block lower bound 3/(1 + 2*p_star^2),
/// on the same range as [`p_star`].
pub fn three_block_bound(alpha: f64) -> Result<f64, BoundsError> {
    check_alpha(alpha, ALPHA_SIXTH, crossing_alpha_closed_form())?;
    Ok(three_block_bound_raw(alpha))
}

fn three_block_bound_raw(alpha: f64) -> f64 {
    let p = p_star_raw(alpha);
    3.0 / (1.0 + 2.0 * p * p)
}

/// Ratio where the three-block bound stops beating the random bound, found
/// by bisecting their difference on [0.17, 0.25] down to width 1e-12.
pub fn crossing_alpha() -> f64 {
    let gap = |alpha: f64| three_block_bound_raw(alpha) - (alpha.sqrt() + 1.0).powi(2);
    let mut lo = 0.17;
    let mut hi = 0.25;
    debug_assert!(gap(lo) > 0.0 && gap(hi) < 0.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// The two discriminants and the product identity behind the quadratic
/// bound analysis, with c = sqrt(alpha) + 1 and d = 1 + 1/sqrt(alpha):
///
/// - delta1 = (2d/3)^2 - 4(c+d)(d-1)/9
/// - delta2 = d^2 - (d+c)(d-1)
/// - cd_identity = c*d - c - d
///
/// All three vanish identically in alpha > 0.
pub fn claim_discriminants(alpha: f64) -> Result<(f64, f64, f64), BoundsError> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(BoundsError::AlphaOutOfRange {
            alpha,
            lo: f64::MIN_POSITIVE,
            hi: f64::INFINITY,
        });
    }
    let s = alpha.sqrt();
    let c = s + 1.0;
    let d = 1.0 + 1.0 / s;
    let delta1 = (2.0 * d / 3.0).powi(2) - 4.0 * (c + d) * (d - 1.0) / 9.0;
    let delta2 = d * d - (d + c) * (d - 1.0);
    let cd_identity = c * d - c - d;
    Ok((delta1, delta2, cd_identity))
}

/// Exponent of the tail bound Pr(X >= x) <= exp(-c'x) for a sum of
/// geometric-like contributions with mean ratio c: c' = ln c - 1 + 1/c.
pub fn chernoff_exponent(c: f64) -> Result<f64, BoundsError> {
    if !c.is_finite() || c < 1.0 {
        return Err(BoundsError::BaseBelowOne(c));
    }
    Ok(c.ln() - 1.0 + 1.0 / c)
}

/// Expected book sizes inside the three-block construction on N vertices
/// with cross-pair red probability p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectationReport {
    pub n_vertices: usize,
    pub p: f64,
    /// Red book on an intra-block pair: N/3 - 2 + (2N/3) p^2.
    pub expected_red_intra: f64,
    /// Blue book on a cross pair: (N/3)(1-p)^2.
    pub expected_blue_cross: f64,
    /// Red book on a cross pair: (N/3) p^2 + (2N/3 - 2) p.
    pub expected_red_cross: f64,
}

/// Evaluates the three expectation formulas for the three-block construction.
pub fn construction_expectations(
    n_vertices: usize,
    p: f64,
) -> Result<ExpectationReport, BoundsError> {
    if n_vertices == 0 || n_vertices % 3 != 0 {
        return Err(BoundsError::NotDivisibleByThree(n_vertices));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(BoundsError::BadProbability(p));
    }
    let third = n_vertices as f64 / 3.0;
    Ok(ExpectationReport {
        n_vertices,
        p,
        expected_red_intra: third - 2.0 + 2.0 * third * p * p,
        expected_blue_cross: third * (1.0 - p) * (1.0 - p),
        expected_red_cross: third * p * p + (2.0 * third - 2.0) * p,
    })
}

/// Which bound pair is best at a given alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// alpha < 1/6: the value is known exactly; both bounds are 2.
    KnownExact,
    /// 1/6 <= alpha < crossing: three-block below, 3/2 + 3*alpha above.
    ThreeBlockLower,
    /// crossing <= alpha <= 1/4: random below, 3/2 + 3*alpha above.
    RandomLower,
    /// alpha > 1/4: the random bound is tight on both sides.
    RandomTight,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::KnownExact => "known-exact",
            Regime::ThreeBlockLower => "three-block-lower",
            Regime::RandomLower => "random-lower",
            Regime::RandomTight => "random-tight",
        })
    }
}

/// Best known lower and upper leading coefficients at one ratio alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundPoint {
    pub alpha: f64,
    /// (sqrt(alpha) + 1)^2, defined for every alpha.
    pub random_lb: f64,
    /// 3/2 + 3*alpha, defined on [1/6, 1/4].
    pub mid_ub: Option<f64>,
    /// 3/(1 + 2 p_star^2), defined on [1/6, crossing].
    pub three_block_lb: Option<f64>,
    pub best_lower: f64,
    pub best_upper: f64,
    pub regime: Regime,
}

/// Header for [`BoundPoint::csv_row`] emissions.
pub const BOUND_CSV_HEADER: &str =
    "alpha,random_lb,mid_ub,three_block_lb,best_lower,best_upper,regime";

impl BoundPoint {
    /// One CSV data row matching [`BOUND_CSV_HEADER`]; undefined columns are
    /// left empty.
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.alpha,
            self.random_lb,
            opt(self.mid_ub),
            opt(self.three_block_lb),
            self.best_lower,
            self.best_upper,
            self.regime
        )
    }
}

/// Best known bounds at the given ratio, picked by regime.
pub fn best_known(alpha: f64) -> Result<BoundPoint, BoundsError> {
    check_alpha(alpha, f64::MIN_POSITIVE, 1.0)?;
    let crossing = crossing_alpha_closed_form();
    let random_lb = (alpha.sqrt() + 1.0).powi(2);
    let mid_ub = (ALPHA_SIXTH..=ALPHA_QUARTER)
        .contains(&alpha)
        .then(|| 1.5 + 3.0 * alpha);
    let three_block_lb = (ALPHA_SIXTH..=crossing)
        .contains(&alpha)
        .then(|| three_block_bound_raw(alpha));
    let (best_lower, best_upper, regime) = if alpha < ALPHA_SIXTH {
        (2.0, 2.0, Regime::KnownExact)
    } else if alpha < crossing {
        (
            three_block_lb.expect("alpha in [1/6, crossing)"),
            mid_ub.expect("alpha in [1/6, 1/4]"),
            Regime::ThreeBlockLower,
        )
    } else if alpha <= ALPHA_QUARTER {
        (
            random_lb,
            mid_ub.expect("alpha in [crossing, 1/4]"),
            Regime::RandomLower,
        )
    } else {
        (random_lb, random_lb, Regime::RandomTight)
    };
    Ok(BoundPoint {
        alpha,
        random_lb,
        mid_ub,
        three_block_lb,
        best_lower,
        best_upper,
        regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_bound_examples() {
        assert_eq!(random_bound(1.0, 2).unwrap(), 4.0);
        assert_eq!(random_bound(0.25, 2).unwrap(), 2.25);
        assert_eq!(random_bound(1.0, 3).unwrap(), 8.0);
        assert!(matches!(
            random_bound(0.0, 2),
            Err(BoundsError::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            random_bound(1.5, 2),
            Err(BoundsError::AlphaOutOfRange { .. })
        ));
        assert!(matches!(random_bound(0.5, 1), Err(BoundsError::BadOrder(1))));
    }

    #[test]
    fn mid_upper_examples() {
        assert!((mid_upper(1.0 / 6.0).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(mid_upper(0.25).unwrap(), 2.25);
        assert!((mid_upper(0.2).unwrap() - 2.1).abs() < 1e-12);
        assert!(mid_upper(0.1).is_err());
        assert!(mid_upper(0.3).is_err());
    }

    #[test]
    fn p_star_examples_and_identity() {
        assert!((p_star(1.0 / 6.0).unwrap() - 0.5).abs() < 1e-12);
        assert!(matches!(
            p_star(0.25),
            Err(BoundsError::AlphaOutOfRange { .. })
        ));
        assert!(p_star(0.1).is_err());
        // alpha*(1 + 2p^2) = (1-p)^2 across the domain.
        let crossing = crossing_alpha_closed_form();
        for i in 0..=1000 {
            let alpha = 1.0 / 6.0 + (crossing - 1.0 / 6.0) * i as f64 / 1000.0;
            let p = p_star(alpha).unwrap();
            let residual = alpha * (1.0 + 2.0 * p * p) - (1.0 - p) * (1.0 - p);
            assert!(residual.abs() < 1e-12, "alpha {alpha}: residual {residual}");
        }
    }

    #[test]
    fn three_block_bound_examples() {
        assert!((three_block_bound(1.0 / 6.0).unwrap() - 2.0).abs() < 1e-12);
        let crossing = crossing_alpha_closed_form();
        let at_crossing = three_block_bound(crossing).unwrap();
        let random = random_bound(crossing, 2).unwrap();
        assert!((at_crossing - random).abs() < 1e-9);
        assert!(three_block_bound(0.18).unwrap() > random_bound(0.18, 2).unwrap());
    }

    #[test]
    fn crossing_alpha_matches_closed_form() {
        let computed = crossing_alpha();
        let closed = crossing_alpha_closed_form();
        assert!(
            (computed - closed).abs() < 1e-9,
            "bisection {computed} vs closed form {closed}"
        );
        // Sign change around the crossing.
        let gap = |a: f64| three_block_bound_raw(a) - (a.sqrt() + 1.0).powi(2);
        assert!(gap(0.19) > 0.0);
        assert!(gap(0.21) < 0.0);
    }

    #[test]
    fn three_block_beats_random_below_crossing() {
        let crossing = crossing_alpha_closed_form();
        for i in 0..1000 {
            let alpha = 1.0 / 6.0 + (crossing - 1e-9 - 1.0 / 6.0) * i as f64 / 1000.0;
            assert!(
                three_block_bound(alpha).unwrap() > random_bound(alpha, 2).unwrap(),
                "alpha {alpha}"
            );
        }
    }

    #[test]
    fn discriminants_vanish() {
        let (d1, d2, cd) = claim_discriminants(1.0).unwrap();
        assert!(d1.abs() < 1e-15);
        assert_eq!(d2, 0.0);
        assert_eq!(cd, 0.0);

        // c = 3/2, d = 3 at alpha = 1/4, with c + d = c*d.
        let s = 0.25_f64.sqrt();
        assert_eq!(s + 1.0, 1.5);
        assert_eq!(1.0 + 1.0 / s, 3.0);
        let (_, _, cd) = claim_discriminants(0.25).unwrap();
        assert_eq!(cd, 0.0);

        let mut rng = ChaCha8Rng::seed_from_u64(31337);
        for _ in 0..100 {
            let alpha: f64 = rng.random_range(0.01..=1.0);
            let (d1, d2, cd) = claim_discriminants(alpha).unwrap();
            assert!(d1.abs() < 1e-12, "alpha {alpha}: d1 {d1}");
            assert!(d2.abs() < 1e-12, "alpha {alpha}: d2 {d2}");
            assert!(cd.abs() < 1e-12, "alpha {alpha}: cd {cd}");
        }
        assert!(claim_discriminants(0.0).is_err());
        assert!(claim_discriminants(-1.0).is_err());
    }

    #[test]
    fn chernoff_exponent_examples() {
        assert_eq!(chernoff_exponent(1.0).unwrap(), 0.0);
        let at_e = chernoff_exponent(std::f64::consts::E).unwrap();
        assert!((at_e - 1.0 / std::f64::consts::E).abs() < 1e-15);
        let a = chernoff_exponent(1.5).unwrap();
        let b = chernoff_exponent(2.0).unwrap();
        assert!(b > a && a > 0.0);
        assert!(matches!(
            chernoff_exponent(0.9),
            Err(BoundsError::BaseBelowOne(_))
        ));
    }

    #[test]
    fn expectation_examples() {
        let r = construction_expectations(600, 0.5).unwrap();
        assert_eq!(r.expected_red_intra, 298.0);
        assert_eq!(r.expected_blue_cross, 50.0);
        assert_eq!(r.expected_red_cross, 249.0);

        let r0 = construction_expectations(600, 0.0).unwrap();
        assert_eq!(r0.expected_red_intra, 198.0);
        assert_eq!(r0.expected_blue_cross, 200.0);
        assert_eq!(r0.expected_red_cross, 0.0);

        let r1 = construction_expectations(600, 1.0).unwrap();
        assert_eq!(r1.expected_blue_cross, 0.0);

        assert!(construction_expectations(601, 0.5).is_err());
        assert!(construction_expectations(0, 0.5).is_err());
        assert!(construction_expectations(600, 1.5).is_err());
    }

    #[test]
    fn red_cross_stays_below_red_intra_when_pages_remain() {
        // intra - cross factors as (1-p)(N(1-p)/3 - 2), so the ordering
        // holds exactly when N(1-p) >= 6 (and trivially at p = 1).
        let n = 600;
        for i in 0..=990 {
            let p = i as f64 / 1000.0; // stays within p <= 1 - 6/N
            let r = construction_expectations(n, p).unwrap();
            let gap = r.expected_red_intra - r.expected_red_cross;
            let factored = (1.0 - p) * (n as f64 * (1.0 - p) / 3.0 - 2.0);
            assert!((gap - factored).abs() < 1e-9, "p {p}");
            assert!(gap >= 0.0, "p {p}: gap {gap}");
        }
        let r = construction_expectations(n, 1.0).unwrap();
        assert!(r.expected_red_intra >= r.expected_red_cross);
    }

    #[test]
    fn best_known_regime_table() {
        let p = best_known(0.1).unwrap();
        assert_eq!((p.best_lower, p.best_upper), (2.0, 2.0));
        assert_eq!(p.regime, Regime::KnownExact);
        assert_eq!(p.mid_ub, None);
        assert_eq!(p.three_block_lb, None);

        let p = best_known(0.18).unwrap();
        assert_eq!(p.regime, Regime::ThreeBlockLower);
        assert!(p.best_lower > random_bound(0.18, 2).unwrap());
        assert!((p.best_upper - 2.04).abs() < 1e-12);

        let p = best_known(0.22).unwrap();
        assert_eq!(p.regime, Regime::RandomLower);
        assert_eq!(p.best_lower, random_bound(0.22, 2).unwrap());
        assert_eq!(p.best_upper, mid_upper(0.22).unwrap());

        let p = best_known(0.3).unwrap();
        assert_eq!(p.regime, Regime::RandomTight);
        let expected = (0.3_f64.sqrt() + 1.0).powi(2);
        assert_eq!((p.best_lower, p.best_upper), (expected, expected));

        assert!(best_known(0.0).is_err());
        assert!(best_known(1.1).is_err());
    }

    #[test]
    fn bounds_are_ordered_on_a_dense_grid() {
        for i in 1..=10_000 {
            let alpha = i as f64 / 10_000.0;
            let p = best_known(alpha).unwrap();
            assert!(
                p.best_lower <= p.best_upper + 1e-12,
                "alpha {alpha}: {} > {}",
                p.best_lower,
                p.best_upper
            );
        }
    }

    #[test]
    fn regime_boundaries_are_continuous() {
        let sixth = 1.0 / 6.0;
        assert!((three_block_bound(sixth).unwrap() - mid_upper(sixth).unwrap()).abs() < 1e-9);
        assert!((mid_upper(0.25).unwrap() - random_bound(0.25, 2).unwrap()).abs() < 1e-9);
        let crossing = crossing_alpha();
        assert!(
            (three_block_bound_raw(crossing) - random_bound(crossing, 2).unwrap()).abs() < 1e-9
        );
    }

    #[test]
    fn csv_rows_match_header() {
        assert_eq!(BOUND_CSV_HEADER.split(',').count(), 7);
        let row = best_known(0.2).unwrap().csv_row();
        assert_eq!(row.split(',').count(), 7);
        assert!(row.starts_with("0.2,"));
        assert!(row.ends_with(",three-block-lower"));
        let row = best_known(0.1).unwrap().csv_row();
        // Undefined middle-range columns stay empty.
        assert!(row.contains(",,"));
        assert!(row.ends_with(",known-exact"));
    }
}
