//! Moment-method verification that the same-sex marriage count is
//! asymptotically normal.
//!
//! For each order `r`, the raw-moment data `m_r(n)` over `n = 1..=n_max` is
//! fitted to an exact rational function of `n` (the raw moments have modest
//! degrees, `(2r, r)`), central and normalized moments are then derived from
//! the fitted closed forms by exact rational-function algebra, and every
//! derived normalized moment is re-checked against the exact per-`n` data
//! before its asymptotic expansion is compared with the corresponding
//! normal-distribution moment. Deriving rather than fitting the normalized
//! moments matters: their reduced degrees grow fast (`alpha_13^2` has total
//! degree 127), far beyond what `n_max = 60` data points could pin down
//! directly.
//!
//! Odd normalized moments are handled as exact squares plus sign; their
//! limit must be zero. Even ones must converge to `r!/(2^(r/2) (r/2)!)`.

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::asympt::{expand_asymptotic, series_limit, AsymptoticSeries, SeriesLimit};
use crate::guess::{fit_rational, FitRequest, DEFAULT_VERIFICATION_POINTS};
use crate::moments::{moment_table_range, MomentTable};
use crate::numbers::{binomial, factorial};
use crate::pgf::{build_pgf, mean_formula, variance_formula};
use crate::ratfunc::RationalFunction;
use crate::{Error, Int, Rat, Result};

/// `r`-th moment of the standard normal distribution: 0 for odd `r`,
/// `r!/(2^(r/2) (r/2)!) = (r-1)!!` for even `r`.
pub fn normal_moment(r: u32) -> Rat {
    if r % 2 == 1 {
        return Rat::zero();
    }
    let half = r / 2;
    let num = factorial(r as u64);
    let den = factorial(half as u64) * (Int::one() << half);
    Rat::new(num, den)
}

/// Outcome for one moment order.
#[derive(Clone, Debug)]
pub struct MomentCheck {
    pub r: u32,
    /// Odd orders carry `alpha_r^2` (the signed root is irrational).
    pub squared: bool,
    /// Derived closed form of `alpha_r` (even) or `alpha_r^2` (odd), if the
    /// pipeline got that far.
    pub function: Option<RationalFunction>,
    pub series: Option<AsymptoticSeries>,
    /// Limit the normal distribution demands: `normal_moment(r)` for even
    /// `r`, zero for the odd squares.
    pub expected_limit: Rat,
    pub limit: Option<SeriesLimit>,
    pub pass: bool,
    /// Diagnostics when a step failed.
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct NormalityReport {
    pub n_max: u32,
    pub r_max: u32,
    pub series_order: usize,
    pub per_moment: Vec<MomentCheck>,
    pub overall: bool,
}

/// Runs the full verification for `r = 3 ..= r_max` on fresh moment tables.
pub fn verify_normality(n_max: u32, r_max: u32, series_order: usize) -> Result<NormalityReport> {
    if r_max < 3 {
        return Err(Error::InvalidInput(
            "normality verification requires r_max >= 3".into(),
        ));
    }
    let tables = moment_table_range(1, n_max, r_max)?;
    verify_normality_with_tables(&tables, r_max, series_order)
}

/// Same as [`verify_normality`] but reuses prebuilt tables (cache path).
pub fn verify_normality_with_tables(
    tables: &[MomentTable],
    r_max: u32,
    series_order: usize,
) -> Result<NormalityReport> {
    if r_max < 3 {
        return Err(Error::InvalidInput(
            "normality verification requires r_max >= 3".into(),
        ));
    }
    if tables.is_empty() {
        return Err(Error::InvalidInput("no moment tables supplied".into()));
    }
    if tables.iter().any(|t| t.r_max() < r_max) {
        return Err(Error::InvalidInput(format!(
            "moment tables must reach r_max = {r_max}"
        )));
    }
    let n_max = tables.last().unwrap().n();

    // Step 1: fit every raw moment to a rational function of n.
    let raw_fits: Vec<Result<RationalFunction>> = (1..=r_max)
        .into_par_iter()
        .map(|r| fit_raw_moment(tables, r))
        .collect();

    // Step 2: central moments about the mean, by the binomial transform over
    // rational functions.
    let central = central_functions(&raw_fits, r_max);

    // Step 3: normalize, verify against the exact data, expand, take limits.
    let per_moment: Vec<MomentCheck> = (3..=r_max)
        .into_par_iter()
        .map(|r| check_moment(tables, &central, r, series_order))
        .collect();

    let overall = per_moment.iter().all(|c| c.pass);
    Ok(NormalityReport {
        n_max,
        r_max,
        series_order,
        per_moment,
        overall,
    })
}

fn fit_raw_moment(tables: &[MomentTable], r: u32) -> Result<RationalFunction> {
    let points: Vec<(u32, Rat)> = tables
        .iter()
        .map(|t| (t.n(), t.raw_moment(r).clone()))
        .collect();
    let verification_points = DEFAULT_VERIFICATION_POINTS.min(points.len().saturating_sub(2) / 2);
    let verification_points = verification_points.max(4);
    let max_total_degree = points
        .len()
        .saturating_sub(2 + verification_points)
        .min(3 * r as usize + 6);
    let req = FitRequest {
        points,
        max_total_degree,
        verification_points,
    };
    Ok(fit_rational(&req)?.function)
}

/// `mu_r = sum_i C(r,i) m_i (-m_1)^(r-i)` as rational functions; index 0 and
/// 1 are the constants 1 and 0.
fn central_functions(
    raw_fits: &[Result<RationalFunction>],
    r_max: u32,
) -> Vec<Result<RationalFunction>> {
    let mean = match &raw_fits[0] {
        Ok(f) => f.clone(),
        Err(e) => {
            return (0..=r_max).map(|_| Err(e.clone())).collect();
        }
    };
    let neg_mean = mean.neg();
    let mut neg_mean_pows = Vec::with_capacity(r_max as usize + 1);
    neg_mean_pows.push(RationalFunction::one());
    for _ in 1..=r_max {
        let next = neg_mean_pows.last().unwrap().mul(&neg_mean);
        neg_mean_pows.push(next);
    }
    let mut central = Vec::with_capacity(r_max as usize + 1);
    central.push(Ok(RationalFunction::one()));
    central.push(Ok(RationalFunction::zero()));
    for r in 2..=r_max as usize {
        let mut acc = Ok(neg_mean_pows[r].clone()); // i = 0 term, m_0 = 1
        for i in 1..=r {
            match (&acc, &raw_fits[i - 1]) {
                (Ok(sum), Ok(mi)) => {
                    let coeff =
                        RationalFunction::constant(&Rat::from_integer(binomial(r as u64, i as u64)));
                    let term = coeff.mul(mi).mul(&neg_mean_pows[r - i]);
                    acc = Ok(sum.add(&term));
                }
                (Err(_), _) => {}
                (_, Err(e)) => acc = Err(e.clone()),
            }
        }
        central.push(acc);
    }
    central
}

fn check_moment(
    tables: &[MomentTable],
    central: &[Result<RationalFunction>],
    r: u32,
    series_order: usize,
) -> MomentCheck {
    let squared = r % 2 == 1;
    let expected_limit = if squared { Rat::zero() } else { normal_moment(r) };
    let mut check = MomentCheck {
        r,
        squared,
        function: None,
        series: None,
        expected_limit: expected_limit.clone(),
        limit: None,
        pass: false,
        note: None,
    };

    let variance = match &central[2] {
        Ok(f) if !f.is_zero() => f.clone(),
        Ok(_) => {
            check.note = Some("derived variance is identically zero".into());
            return check;
        }
        Err(e) => {
            check.note = Some(format!("variance closed form unavailable: {e}"));
            return check;
        }
    };
    let mu_r = match &central[r as usize] {
        Ok(f) => f.clone(),
        Err(e) => {
            check.note = Some(format!("central moment fit failed: {e}"));
            return check;
        }
    };

    let alpha = if squared {
        mu_r.mul(&mu_r).div(&variance.pow(r)) // alpha_r^2 = mu_r^2 / mu_2^r
    } else {
        mu_r.div(&variance.pow(r / 2))
    };
    let alpha = match alpha {
        Ok(f) => f,
        Err(e) => {
            check.note = Some(format!("normalization failed: {e}"));
            return check;
        }
    };

    // the derived closed form must reproduce the exact data at every n
    for t in tables {
        let expected = if squared {
            t.alpha_squared(r)
        } else {
            t.alpha(r)
        };
        let Some(expected) = expected else {
            check.note = Some(format!("table for n = {} lacks order {r}", t.n()));
            return check;
        };
        match alpha.eval(t.n() as u64) {
            Ok(v) if &v == expected => {}
            Ok(v) => {
                check.note = Some(format!(
                    "derived closed form disagrees with exact data at n = {}: {v} != {expected}",
                    t.n()
                ));
                return check;
            }
            Err(e) => {
                check.note = Some(format!("derived closed form has a pole in range: {e}"));
                return check;
            }
        }
    }

    let series = expand_asymptotic(&alpha, series_order);
    let limit = series_limit(&series);
    let pass = match (&limit, squared) {
        (SeriesLimit::Zero, true) => true,
        (SeriesLimit::Finite(value), false) => *value == expected_limit,
        _ => false,
    };
    check.function = Some(alpha);
    check.series = Some(series);
    check.limit = Some(limit);
    check.pass = pass;
    if !pass && check.note.is_none() {
        check.note = Some("series limit differs from the normal moment".into());
    }
    check
}

/// Local-limit diagnostic (floating point, not part of the exact pipeline):
/// compares lattice probabilities, rescaled by the support spacing 2,
/// against the normal density with the closed-form mean and variance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalDeviation {
    pub sup_discrepancy: f64,
    pub at_value: u64,
}

pub fn distribution_vs_normal(n: u32) -> Result<NormalDeviation> {
    let pgf = build_pgf(n)?;
    let mean = mean_formula(n)?.to_f64().expect("mean fits f64");
    let variance = variance_formula(n)?.to_f64().expect("variance fits f64");
    let sigma = variance.sqrt();
    let norm = 1.0 / (sigma * (2.0 * std::f64::consts::PI).sqrt());
    let mut best = NormalDeviation {
        sup_discrepancy: 0.0,
        at_value: 0,
    };
    for k in 0..=n as usize {
        let j = 2 * k;
        // X lives on the even lattice, so each atom accounts for a density
        // strip of width 2; forgetting this factor is the classic mistake
        let p = pgf.probability(j).to_f64().expect("probability fits f64") / 2.0;
        let z = (j as f64 - mean) / sigma;
        let density = norm * (-0.5 * z * z).exp();
        let d = (p - density).abs();
        if d > best.sup_discrepancy {
            best = NormalDeviation {
                sup_discrepancy: d,
                at_value: j as u64,
            };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;

    #[test]
    fn normal_moments() {
        assert_eq!(normal_moment(3), rat(0, 1));
        assert_eq!(normal_moment(4), rat(3, 1));
        assert_eq!(normal_moment(5), rat(0, 1));
        assert_eq!(normal_moment(6), rat(15, 1));
        assert_eq!(normal_moment(8), rat(105, 1));
        assert_eq!(normal_moment(0), rat(1, 1));
        // (r-1)!! identity
        assert_eq!(
            normal_moment(14),
            Rat::from_integer(crate::numbers::double_factorial_odd(13).unwrap())
        );
    }

    #[test]
    fn r_max_must_be_at_least_three() {
        assert!(matches!(
            verify_normality(20, 2, 5),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn verifies_up_to_order_six() {
        let report = verify_normality(60, 6, 9).unwrap();
        assert!(report.overall);
        assert_eq!(report.per_moment.len(), 4);
        for check in &report.per_moment {
            assert!(check.pass, "r = {} failed: {:?}", check.r, check.note);
        }
        let limits: Vec<_> = report
            .per_moment
            .iter()
            .map(|c| c.limit.clone().unwrap())
            .collect();
        assert_eq!(limits[0], SeriesLimit::Zero); // alpha_3^2
        assert_eq!(limits[1], SeriesLimit::Finite(rat(3, 1)));
        assert_eq!(limits[2], SeriesLimit::Zero); // alpha_5^2
        assert_eq!(limits[3], SeriesLimit::Finite(rat(15, 1)));
    }

    #[test]
    fn kurtosis_matches_the_printed_closed_form_and_series() {
        let report = verify_normality(60, 4, 9).unwrap();
        let kurtosis = report
            .per_moment
            .iter()
            .find(|c| c.r == 4)
            .unwrap()
            .function
            .clone()
            .unwrap();
        let expected = RationalFunction::from_integer_coeffs(
            &[3, -100, 650, -1896, 2632, -1664, 384],
            &[0, 0, 70, -376, 696, -512, 128],
        )
        .unwrap();
        assert_eq!(kurtosis, expected);
        let series = expand_asymptotic(&kurtosis, 2);
        assert_eq!(series.leading_exponent(), 0);
        assert_eq!(series.coefficients()[0], rat(3, 1));
        assert_eq!(series.coefficients()[1], rat(-1, 1));
        assert_eq!(series.coefficients()[2], rat(1, 4));
    }

    #[test]
    fn third_moment_square_matches_the_printed_closed_form() {
        let report = verify_normality(40, 3, 9).unwrap();
        let a3sq = report.per_moment[0].function.clone().unwrap();
        // square of (1/2) sqrt(2) sqrt((4n-3)/(n^2 (64n^4-224n^3+276n^2-140n+25)))
        let expected = RationalFunction::from_integer_coeffs(
            &[-3, 4],
            &[0, 0, 50, -280, 552, -448, 128],
        )
        .unwrap();
        assert_eq!(a3sq, expected);
        assert_eq!(a3sq.leading_exponent(), Some(-5));
        assert_eq!(report.per_moment[0].series.as_ref().unwrap().coefficients()[0], rat(1, 32));
    }

    #[test]
    fn sixth_moment_series_prefix() {
        let report = verify_normality(60, 6, 9).unwrap();
        let series = report
            .per_moment
            .iter()
            .find(|c| c.r == 6)
            .unwrap()
            .series
            .clone()
            .unwrap();
        assert_eq!(series.coefficients()[0], rat(15, 1));
        assert_eq!(series.coefficients()[1], rat(-15, 1));
        assert_eq!(series.coefficients()[2], rat(31, 4));
    }

    #[test]
    fn fifth_moment_square_has_leading_exponent_minus_five() {
        let report = verify_normality(60, 5, 9).unwrap();
        let check = report.per_moment.iter().find(|c| c.r == 5).unwrap();
        assert_eq!(
            check.function.as_ref().unwrap().leading_exponent(),
            Some(-5)
        );
        assert_eq!(
            check.series.as_ref().unwrap().coefficients()[0],
            rat(25, 8)
        );
    }

    #[test]
    fn insufficient_data_fails_per_moment_not_wholesale() {
        // 8 points cannot pin down the kurtosis pipeline; the report must
        // carry the failure rather than abort
        let tables = moment_table_range(1, 8, 4).unwrap();
        let report = verify_normality_with_tables(&tables, 4, 5).unwrap();
        assert!(!report.overall);
        assert!(report.per_moment.iter().any(|c| !c.pass));
        assert!(report
            .per_moment
            .iter()
            .any(|c| c.note.as_deref().is_some()));
    }

    #[test]
    fn local_limit_diagnostic_improves_with_n() {
        let d1 = distribution_vs_normal(1).unwrap();
        assert!(d1.sup_discrepancy > 0.0);
        let d25 = distribution_vs_normal(25).unwrap();
        let d100 = distribution_vs_normal(100).unwrap();
        assert!(d100.sup_discrepancy < d25.sup_discrepancy);
    }
}
