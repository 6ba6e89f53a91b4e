//! Exact analysis of the number of same-sex marriages in a uniformly random
//! perfect matching of `2n` men and `2n` women.
//!
//! Everyone is equally attracted to either sex and everyone marries, so the
//! marriage pattern is a uniform perfect matching of the `4n` individuals.
//! This crate builds the exact probability generating function of the
//! same-sex marriage count, extracts raw/central/normalized moments by
//! repeated application of the `x d/dx` operator, recovers closed-form
//! rational functions of `n` from the data, expands them as asymptotic
//! series in `1/n`, and checks that the normalized moments converge to the
//! moments of the standard normal distribution. Brute-force enumeration and
//! a seeded Monte Carlo sampler serve as independent ground truth.
//!
//! All core arithmetic is exact. Floating point appears only in Monte Carlo
//! summaries and the local-limit diagnostic, and is clearly quarantined
//! there.
//!
//! The arithmetic kernel ([`poly`], [`series`]) is generic over a [`scalar::Scalar`]
//! type; the concrete aliases below pin the exact instantiations used by the
//! pipeline.

pub mod asympt;
mod elim;
pub mod error;
pub mod guess;
pub mod moments;
pub mod normality;
pub mod numbers;
pub mod oracle;
pub mod pgf;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational in canonical form, the universal exact scalar.
pub type Rat = num_rational::BigRational;
/// Dense polynomial with exact rational coefficients.
pub type Poly = poly::Polynomial<Rat>;
/// Dense polynomial with integer coefficients (numerators/denominators of
/// rational functions of `n`).
pub type IntPoly = poly::Polynomial<Int>;
/// Truncated power series with exact rational coefficients.
pub type Series = series::PowerSeries<Rat>;

pub use asympt::{expand_asymptotic, series_limit, AsymptoticSeries, SeriesLimit};
pub use guess::{evaluate_ratfunc, fit_rational, FitRequest, FitResult};
pub use moments::{
    central_moments, moment_table_range, normalized_moments, raw_moment, raw_moment_power_sum,
    MomentTable, NormalizedMoments,
};
pub use normality::{
    distribution_vs_normal, normal_moment, verify_normality, verify_normality_with_tables,
    MomentCheck, NormalDeviation, NormalityReport,
};
pub use numbers::{binomial, double_factorial_odd, factorial, rat, rat_arith, RatOp, Sign};
pub use oracle::{
    enumerate_matchings, enumerate_matchings_unguarded, sample_matchings,
    sample_matchings_parallel, MatchingDistribution, SampleSummary,
};
pub use pgf::{
    build_pgf, matching_count, mean_formula, mean_ratfunc, variance_formula, variance_ratfunc,
    PgfDistribution,
};
pub use ratfunc::RationalFunction;
