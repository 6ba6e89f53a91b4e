//! Raw, central, and normalized moments of the same-sex marriage count.
//!
//! Raw moments come from repeated application of the `x d/dx` operator to
//! the generating function followed by evaluation at `x = 1`; a direct
//! weighted power sum recomputes them in debug builds so the two routes
//! check each other. Central moments follow by the binomial transform about
//! the mean, normalized moments by dividing by the appropriate power of the
//! variance. Odd normalized moments are irrational (a square root of the
//! variance appears), so they are carried as exact squares plus the sign of
//! the central moment; the whole pipeline stays in exact arithmetic.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::numbers::{binomial, Sign};
use crate::pgf::{build_pgf, PgfDistribution};
use crate::{Error, Int, Rat, Result};

/// `E[X^r]` via the theta-operator route. Debug builds assert agreement
/// with the independent power-sum route.
pub fn raw_moment(pgf: &PgfDistribution, r: u32) -> Rat {
    let mut p = pgf.as_polynomial();
    for _ in 0..r {
        p = p.theta();
    }
    let value = p.eval(&Rat::one());
    debug_assert_eq!(
        value,
        raw_moment_power_sum(pgf, r),
        "theta route and power-sum route disagree at n = {}, r = {}",
        pgf.n(),
        r
    );
    value
}

/// `E[X^r]` as the direct weighted power sum over the support.
pub fn raw_moment_power_sum(pgf: &PgfDistribution, r: u32) -> Rat {
    let mut acc = Rat::zero();
    for (j, p) in pgf.probabilities().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let jr = num_traits::pow::pow(Int::from(j), r as usize);
        acc += Rat::from_integer(jr) * p;
    }
    acc
}

/// `m_0 ..= m_r_max` with one theta application per order.
pub fn raw_moments_upto(pgf: &PgfDistribution, r_max: u32) -> Vec<Rat> {
    let mut values = Vec::with_capacity(r_max as usize + 1);
    let mut p = pgf.as_polynomial();
    values.push(p.eval(&Rat::one()));
    for r in 1..=r_max {
        p = p.theta();
        let value = p.eval(&Rat::one());
        debug_assert_eq!(
            value,
            raw_moment_power_sum(pgf, r),
            "theta route and power-sum route disagree at n = {}, r = {}",
            pgf.n(),
            r
        );
        values.push(value);
    }
    values
}

/// Central moments from raw moments by the binomial transform
/// `mu_r = sum_i C(r,i) m_i (-m_1)^(r-i)`.
pub fn central_moments(raw: &[Rat]) -> Result<Vec<Rat>> {
    if raw.first().map_or(true, |m0| !m0.is_one()) {
        return Err(Error::InvalidInput(
            "raw moment list must start with m_0 = 1".into(),
        ));
    }
    if raw.len() == 1 {
        return Ok(vec![Rat::one()]);
    }
    let neg_mean = -raw[1].clone();
    // powers of (-m_1) up to r_max
    let r_max = raw.len() - 1;
    let mut pows = Vec::with_capacity(r_max + 1);
    pows.push(Rat::one());
    for _ in 1..=r_max {
        let next = pows.last().unwrap() * &neg_mean;
        pows.push(next);
    }
    let mut central = Vec::with_capacity(raw.len());
    for r in 0..=r_max {
        let mut mu = Rat::zero();
        for (i, m) in raw.iter().enumerate().take(r + 1) {
            mu += Rat::from_integer(binomial(r as u64, i as u64)) * m * &pows[r - i];
        }
        central.push(mu);
    }
    debug_assert!(central[1].is_zero(), "first central moment must vanish");
    Ok(central)
}

/// Normalized moments split by parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedMoments {
    /// Even `r`: `alpha_r = mu_r / mu_2^(r/2)`, exact.
    pub even: BTreeMap<u32, Rat>,
    /// Odd `r`: `alpha_r^2 = mu_r^2 / mu_2^r`, exact (alpha itself is
    /// irrational).
    pub odd_squared: BTreeMap<u32, Rat>,
    /// Sign of `mu_r` for odd `r`, so no information is lost by squaring.
    pub odd_sign: BTreeMap<u32, Sign>,
}

/// Normalizes central moments; fails on zero variance.
pub fn normalized_moments(central: &[Rat]) -> Result<NormalizedMoments> {
    let mu2 = central
        .get(2)
        .ok_or_else(|| Error::InvalidInput("need central moments up to order 2".into()))?;
    if !mu2.is_positive() {
        return Err(Error::DegenerateDistribution);
    }
    // mu_2^(1..=r_max), so both parities index by full powers
    let r_max = central.len() - 1;
    let mut mu2_pow = Vec::with_capacity(r_max + 1);
    mu2_pow.push(Rat::one());
    for _ in 1..=r_max {
        let next = mu2_pow.last().unwrap() * mu2;
        mu2_pow.push(next);
    }
    let mut even = BTreeMap::new();
    let mut odd_squared = BTreeMap::new();
    let mut odd_sign = BTreeMap::new();
    for r in 2..=r_max {
        let mu = &central[r];
        if r % 2 == 0 {
            even.insert(r as u32, mu / &mu2_pow[r / 2]);
        } else {
            odd_squared.insert(r as u32, mu * mu / &mu2_pow[r]);
            odd_sign.insert(r as u32, Sign::of(mu));
        }
    }
    Ok(NormalizedMoments {
        even,
        odd_squared,
        odd_sign,
    })
}

/// All moment data for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    n: u32,
    raw: Vec<Rat>,
    central: Vec<Rat>,
    normalized: NormalizedMoments,
}

impl MomentTable {
    pub fn build(n: u32, r_max: u32) -> Result<Self> {
        if r_max < 2 {
            return Err(Error::InvalidInput("moment tables require r_max >= 2".into()));
        }
        let pgf = build_pgf(n)?;
        Self::from_raw(n, raw_moments_upto(&pgf, r_max))
    }

    /// Rebuilds the derived columns from raw moments (also the cache-reload
    /// path, so everything downstream of the raw moments is recomputed
    /// rather than trusted).
    pub fn from_raw(n: u32, raw: Vec<Rat>) -> Result<Self> {
        if raw.len() < 3 {
            return Err(Error::InvalidInput("need raw moments up to order 2".into()));
        }
        let central = central_moments(&raw)?;
        let normalized = normalized_moments(&central)?;
        Ok(MomentTable {
            n,
            raw,
            central,
            normalized,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r_max(&self) -> u32 {
        (self.raw.len() - 1) as u32
    }

    pub fn raw(&self) -> &[Rat] {
        &self.raw
    }

    pub fn central(&self) -> &[Rat] {
        &self.central
    }

    pub fn raw_moment(&self, r: u32) -> &Rat {
        &self.raw[r as usize]
    }

    pub fn central_moment(&self, r: u32) -> &Rat {
        &self.central[r as usize]
    }

    /// `alpha_r` for even `r >= 2`.
    pub fn alpha(&self, r: u32) -> Option<&Rat> {
        self.normalized.even.get(&r)
    }

    /// `alpha_r^2` for odd `r >= 3`.
    pub fn alpha_squared(&self, r: u32) -> Option<&Rat> {
        self.normalized.odd_squared.get(&r)
    }

    pub fn alpha_sign(&self, r: u32) -> Option<Sign> {
        self.normalized.odd_sign.get(&r).copied()
    }

    pub fn normalized(&self) -> &NormalizedMoments {
        &self.normalized
    }
}

/// One table per `n` in `n_min ..= n_max`, computed in parallel, returned in
/// `n` order regardless of scheduling.
pub fn moment_table_range(n_min: u32, n_max: u32, r_max: u32) -> Result<Vec<MomentTable>> {
    if n_min < 1 || n_min > n_max {
        return Err(Error::InvalidInput(format!(
            "invalid range {n_min}..={n_max}"
        )));
    }
    if r_max < 2 {
        return Err(Error::InvalidInput("moment tables require r_max >= 2".into()));
    }
    (n_min..=n_max)
        .into_par_iter()
        .map(|n| MomentTable::build(n, r_max))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;
    use crate::pgf::{mean_formula, variance_formula};

    #[test]
    fn raw_moments_of_smallest_population() {
        let pgf = build_pgf(1).unwrap();
        assert_eq!(raw_moment(&pgf, 0), rat(1, 1));
        assert_eq!(raw_moment(&pgf, 1), rat(2, 3));
        assert_eq!(raw_moment(&pgf, 2), rat(4, 3));
        assert_eq!(raw_moments_upto(&pgf, 2), vec![rat(1, 1), rat(2, 3), rat(4, 3)]);
    }

    #[test]
    fn theta_and_power_sum_routes_agree() {
        for n in [1, 5, 17, 50] {
            let pgf = build_pgf(n).unwrap();
            let upto = raw_moments_upto(&pgf, 14);
            for r in 0..=14 {
                assert_eq!(upto[r as usize], raw_moment_power_sum(&pgf, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn central_moments_of_smallest_population() {
        let pgf = build_pgf(1).unwrap();
        let central = central_moments(&raw_moments_upto(&pgf, 3)).unwrap();
        assert_eq!(central[1], rat(0, 1));
        assert_eq!(central[2], rat(8, 9));
        assert_eq!(central[3], rat(16, 27));
        assert!(central_moments(&[rat(2, 1)]).is_err());
    }

    #[test]
    fn normalized_moments_of_smallest_population() {
        let table = MomentTable::build(1, 4).unwrap();
        assert_eq!(table.alpha(2), Some(&rat(1, 1)));
        assert_eq!(table.alpha_squared(3), Some(&rat(1, 2)));
        assert_eq!(table.alpha_sign(3), Some(Sign::Positive));
        assert_eq!(table.alpha(4), Some(&rat(3, 2)));
    }

    #[test]
    fn degenerate_distribution_is_reported() {
        // a point mass has mu_2 = 0
        let raw = vec![rat(1, 1), rat(2, 1), rat(4, 1)];
        let central = central_moments(&raw).unwrap();
        assert_eq!(normalized_moments(&central), Err(Error::DegenerateDistribution));
    }

    #[test]
    fn first_moments_match_closed_forms() {
        for table in moment_table_range(1, 40, 2).unwrap() {
            let n = table.n();
            assert_eq!(table.raw_moment(1), &mean_formula(n).unwrap());
            assert_eq!(table.central_moment(2), &variance_formula(n).unwrap());
        }
    }

    #[test]
    fn range_is_ordered_and_validated() {
        let tables = moment_table_range(3, 7, 4).unwrap();
        assert_eq!(tables.iter().map(MomentTable::n).collect::<Vec<_>>(), vec![3, 4, 5, 6, 7]);
        assert!(moment_table_range(5, 3, 2).is_err());
        assert!(moment_table_range(0, 3, 2).is_err());
        assert!(moment_table_range(1, 2, 1).is_err());
    }

    #[test]
    fn variance_increases_over_tested_range() {
        let tables = moment_table_range(1, 60, 2).unwrap();
        for pair in tables.windows(2) {
            assert!(pair[1].central_moment(2) > pair[0].central_moment(2));
        }
    }
}
