//! Asymptotic expansion of rational functions of `n` in descending powers.
//!
//! Substituting `n = 1/t` turns `p(n)/q(n)` into `t^(deg q - deg p)` times a
//! quotient of power series in `t` whose divisor has a nonzero constant
//! term, so exact series division yields the expansion coefficients.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::ratfunc::RationalFunction;
use crate::series::PowerSeries;
use crate::{Error, Rat, Result, Series};

/// Truncated expansion `sum_j c_j n^(p - j) + O(n^(p - K - 1))`.
///
/// `c_0` is never zero; the zero function gets the distinguished empty
/// representation rather than a zero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticSeries {
    leading_exponent: i64,
    coefficients: Vec<Rat>,
}

impl AsymptoticSeries {
    pub fn zero() -> Self {
        AsymptoticSeries {
            leading_exponent: 0,
            coefficients: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn leading_exponent(&self) -> i64 {
        self.leading_exponent
    }

    /// `c_0 ..= c_K`; empty for the zero series.
    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Exact value of the truncated sum at integer `n >= 1`.
    pub fn eval(&self, n: u64) -> Result<Rat> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "asymptotic series cannot be evaluated at n = 0".into(),
            ));
        }
        let base = Rat::from_integer(n.into());
        let mut acc = Rat::zero();
        for (j, c) in self.coefficients.iter().enumerate() {
            let e = self.leading_exponent - j as i64;
            acc += c * pow_i64(&base, e);
        }
        Ok(acc)
    }

    /// Renders like the displays in the source material, e.g.
    /// `n-1/4-1/16*n^-1-1/64*n^-2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.leading_exponent - j as i64;
            let term = render_term(c, e);
            if out.is_empty() || term.starts_with('-') {
                out.push_str(&term);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn render_term(c: &Rat, e: i64) -> String {
    let mut s = String::new();
    let one = c.numer().magnitude() == c.denom().magnitude() && c.denom().is_positive();
    match e {
        0 => {
            let _ = write!(s, "{c}");
        }
        _ => {
            if one {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                let _ = write!(s, "{c}*");
            }
            if e == 1 {
                s.push('n');
            } else {
                let _ = write!(s, "n^{e}");
            }
        }
    }
    s
}

fn pow_i64(base: &Rat, e: i64) -> Rat {
    base.pow(e as i32)
}

/// Limit classification of an asymptotic series as `n -> infinity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesLimit {
    DivergesPositive,
    DivergesNegative,
    Finite(Rat),
    Zero,
}

/// Expands `f` through `order + 1` exact coefficients `c_0 ..= c_order`.
///
/// One extra guard coefficient is computed internally and checked against
/// the series round-trip so truncation bookkeeping mistakes cannot pass
/// silently.
pub fn expand_asymptotic(f: &RationalFunction, order: usize) -> AsymptoticSeries {
    let Some(leading_exponent) = f.leading_exponent() else {
        return AsymptoticSeries::zero();
    };
    let guard_order = order + 1;
    let num_rev = PowerSeries::new(
        f.numerator()
            .coeffs_descending()
            .into_iter()
            .map(Rat::from_integer)
            .collect(),
        guard_order,
    );
    let den_rev = PowerSeries::new(
        f.denominator()
            .coeffs_descending()
            .into_iter()
            .map(Rat::from_integer)
            .collect(),
        guard_order,
    );
    let quotient =
        Series::div(&num_rev, &den_rev, guard_order).expect("leading denominator coefficient is nonzero");
    debug_assert_eq!(
        quotient.mul(&den_rev),
        num_rev,
        "series division round trip failed"
    );
    let mut coefficients = quotient.coeffs().to_vec();
    coefficients.truncate(order + 1);
    debug_assert!(!coefficients[0].is_zero());
    AsymptoticSeries {
        leading_exponent,
        coefficients,
    }
}

/// Reads the limit off the leading term.
pub fn series_limit(s: &AsymptoticSeries) -> SeriesLimit {
    if s.is_zero() {
        return SeriesLimit::Zero;
    }
    let c0 = &s.coefficients[0];
    match s.leading_exponent {
        e if e > 0 => {
            if c0.is_positive() {
                SeriesLimit::DivergesPositive
            } else {
                SeriesLimit::DivergesNegative
            }
        }
        0 => SeriesLimit::Finite(c0.clone()),
        _ => SeriesLimit::Zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;
    use crate::pgf::{mean_ratfunc, variance_ratfunc};

    #[test]
    fn identity_expands_to_one() {
        let f = RationalFunction::from_integer_coeffs(&[0, 1], &[0, 1]).unwrap();
        let s = expand_asymptotic(&f, 3);
        assert_eq!(s.leading_exponent(), 0);
        assert_eq!(s.coefficients()[0], rat(1, 1));
        assert!(s.coefficients()[1..].iter().all(|c| c.is_zero()));
        assert_eq!(series_limit(&s), SeriesLimit::Finite(rat(1, 1)));
        assert_eq!(s.render(), "1");
    }

    #[test]
    fn mean_expansion_matches_printed_coefficients() {
        let s = expand_asymptotic(&mean_ratfunc(), 9);
        assert_eq!(s.leading_exponent(), 1);
        let expected = [
            rat(1, 1),
            rat(-1, 4),
            rat(-1, 16),
            rat(-1, 64),
            rat(-1, 256),
            rat(-1, 1024),
            rat(-1, 4096),
            rat(-1, 16384),
            rat(-1, 65536),
            rat(-1, 262144),
        ];
        assert_eq!(s.coefficients(), &expected);
        assert_eq!(series_limit(&s), SeriesLimit::DivergesPositive);
        assert!(s.render().starts_with("n-1/4-1/16*n^-1-1/64*n^-2"));
    }

    #[test]
    fn variance_expansion_matches_printed_coefficients() {
        let s = expand_asymptotic(&variance_ratfunc(), 9);
        assert_eq!(s.leading_exponent(), 1);
        let expected = [
            rat(1, 2),
            rat(1, 8),
            rat(1, 16),
            rat(3, 64),
            rat(19, 512),
            rat(59, 2048),
            rat(45, 2048),
            rat(17, 1024),
            rat(1637, 131072),
            rat(4917, 524288),
        ];
        assert_eq!(s.coefficients(), &expected);
    }

    #[test]
    fn polynomial_expands_to_its_own_coefficients() {
        let f = RationalFunction::from_integer_coeffs(&[7, 0, -3, 2], &[1]).unwrap();
        let s = expand_asymptotic(&f, 3);
        assert_eq!(s.leading_exponent(), 3);
        assert_eq!(
            s.coefficients(),
            &[rat(2, 1), rat(-3, 1), rat(0, 1), rat(7, 1)]
        );
    }

    #[test]
    fn zero_function_expands_to_the_zero_series() {
        let s = expand_asymptotic(&RationalFunction::zero(), 5);
        assert!(s.is_zero());
        assert_eq!(series_limit(&s), SeriesLimit::Zero);
        assert_eq!(s.render(), "0");
        assert_eq!(s.eval(3).unwrap(), rat(0, 1));
    }

    #[test]
    fn negative_leading_exponent_goes_to_zero() {
        let f = RationalFunction::from_integer_coeffs(&[1], &[0, 1]).unwrap();
        let s = expand_asymptotic(&f, 2);
        assert_eq!(s.leading_exponent(), -1);
        assert_eq!(series_limit(&s), SeriesLimit::Zero);
    }

    #[test]
    fn diverges_negative_with_negative_leading_coefficient() {
        let f = RationalFunction::from_integer_coeffs(&[0, 0, -1], &[1, 1]).unwrap();
        let s = expand_asymptotic(&f, 2);
        assert_eq!(series_limit(&s), SeriesLimit::DivergesNegative);
    }

    #[test]
    fn truncated_series_tracks_the_function() {
        // |f(n) - s(n)| * n^(K+1-p) stays near the first dropped coefficient
        for (f, order) in [(mean_ratfunc(), 8usize), (variance_ratfunc(), 9)] {
            let s = expand_asymptotic(&f, order);
            let next = expand_asymptotic(&f, order + 1);
            let dropped = next.coefficients()[order + 1].clone();
            let bound = (Rat::from_integer(4.into())) * dropped.abs().max(rat(1, 1));
            for n in [1_000u64, 10_000, 100_000, 1_000_000] {
                let err = (f.eval(n).unwrap() - s.eval(n).unwrap()).abs();
                let scale = pow_i64(
                    &Rat::from_integer(n.into()),
                    order as i64 + 1 - s.leading_exponent(),
                );
                assert!(err * scale <= bound, "witnessed bound violated at n = {n}");
            }
        }
    }

    #[test]
    fn rendering_style() {
        let s = expand_asymptotic(&variance_ratfunc(), 3);
        assert_eq!(s.render(), "1/2*n+1/8+1/16*n^-1+3/64*n^-2");
    }
}
