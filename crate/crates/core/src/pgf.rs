//! The exact distribution of the same-sex marriage count.
//!
//! A population of `2n` men and `2n` women marries by a uniform random
//! perfect matching of all `4n` individuals. Writing `X` for the number of
//! same-sex marriages, `X = 2k` exactly when the matching uses `k` man-man
//! pairs (forcing `k` woman-woman pairs). The count of such matchings is
//!
//! ```text
//! C(2n,2k)^2 * (2n-2k)! * ((2k)!/(k! 2^k))^2
//! ```
//!
//! choose the 2k men and 2k women who marry within their own sex, match the
//! remaining men to the remaining women in `(2n-2k)!` ways, and pair up each
//! same-sex group in `(2k-1)!! = (2k)!/(k! 2^k)` ways. Dividing by the total
//! number of matchings `(4n)!/((2n)! 2^(2n)) = (4n-1)!!` gives the
//! probability generating function coefficients. The brute-force oracle
//! certifies this combinatorial derivation for small `n`.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::numbers::{double_factorial_odd, factorial_table};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::{Error, Int, Poly, Rat, Result};

/// Exact distribution of the same-sex marriage count for a given `n`.
///
/// `probabilities[j]` is `Pr[X = j]` for `j = 0..=2n`; odd `j` carry
/// probability zero. All entries are exact rationals summing to one, and
/// every `probabilities[j] * total_matchings` is a nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgfDistribution {
    n: u32,
    probabilities: Vec<Rat>,
    total_matchings: Int,
}

impl PgfDistribution {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Probabilities indexed by the value of the random variable.
    pub fn probabilities(&self) -> &[Rat] {
        &self.probabilities
    }

    pub fn probability(&self, j: usize) -> Rat {
        self.probabilities.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    /// `(4n)!/((2n)! 2^(2n))`, the number of perfect matchings of all `4n`
    /// individuals.
    pub fn total_matchings(&self) -> &Int {
        &self.total_matchings
    }

    /// Number of matchings with exactly `j` same-sex marriages.
    pub fn matching_weight(&self, j: usize) -> Int {
        let w = self.probability(j) * Rat::from_integer(self.total_matchings.clone());
        debug_assert!(w.is_integer());
        w.to_integer()
    }

    /// The generating function as a polynomial in the formal variable.
    pub fn as_polynomial(&self) -> Poly {
        Polynomial::new(self.probabilities.clone())
    }
}

/// Builds the exact generating-function coefficients for `n >= 1`.
pub fn build_pgf(n: u32) -> Result<PgfDistribution> {
    if n < 1 {
        return Err(Error::InvalidInput("build_pgf requires n >= 1".into()));
    }
    let four_n = 4 * n as u64;
    let two_n = 2 * n as u64;
    let fact = factorial_table(four_n);
    let total = exact_quot(
        &fact[four_n as usize],
        &(&fact[two_n as usize] * (Int::one() << two_n)),
    );
    // (4n-1)!! counts the same matchings; cheap independent cross-check
    assert_eq!(total, double_factorial_odd(four_n - 1).expect("odd"));

    let mut probabilities = vec![Rat::zero(); two_n as usize + 1];
    let mut weight_sum = Int::zero();
    for k in 0..=n as u64 {
        let choose = exact_quot(
            &fact[two_n as usize],
            &(&fact[2 * k as usize] * &fact[(two_n - 2 * k) as usize]),
        );
        // (2k-1)!! as (2k)!/(k! 2^k)
        let pair_up = exact_quot(&fact[2 * k as usize], &(&fact[k as usize] * (Int::one() << k)));
        let weight = &choose * &choose * &fact[(two_n - 2 * k) as usize] * &pair_up * &pair_up;
        weight_sum += &weight;
        probabilities[2 * k as usize] = Rat::new(weight, total.clone());
    }
    assert_eq!(weight_sum, total, "matching weights must exhaust (4n-1)!!");

    Ok(PgfDistribution {
        n,
        probabilities,
        total_matchings: total,
    })
}

fn exact_quot(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero());
    q
}

/// Closed-form expectation `2n(2n-1)/(4n-1)`.
pub fn mean_formula(n: u32) -> Result<Rat> {
    if n < 1 {
        return Err(Error::InvalidInput("mean_formula requires n >= 1".into()));
    }
    let n = Int::from(n);
    Ok(Rat::new(
        Int::from(2) * &n * (Int::from(2) * &n - 1),
        Int::from(4) * &n - 1,
    ))
}

/// Closed-form variance `8n^2(4n^2-4n+1)/(64n^3-80n^2+28n-3)`.
pub fn variance_formula(n: u32) -> Result<Rat> {
    if n < 1 {
        return Err(Error::InvalidInput(
            "variance_formula requires n >= 1".into(),
        ));
    }
    let n = Int::from(n);
    let n2 = &n * &n;
    let num = Int::from(8) * &n2 * (Int::from(4) * &n2 - Int::from(4) * &n + 1);
    let den = Int::from(64) * &n2 * &n - Int::from(80) * &n2 + Int::from(28) * &n - 3;
    Ok(Rat::new(num, den))
}

/// The mean closed form as a rational function of `n`.
pub fn mean_ratfunc() -> RationalFunction {
    RationalFunction::from_integer_coeffs(&[0, -2, 4], &[-1, 4]).expect("static denominator")
}

/// The variance closed form as a rational function of `n`.
pub fn variance_ratfunc() -> RationalFunction {
    RationalFunction::from_integer_coeffs(&[0, 0, 8, -32, 32], &[-3, 28, -80, 64])
        .expect("static denominator")
}

/// Number of perfect matchings of `m` labeled individuals:
/// `m!/((m/2)! 2^(m/2)) = (m-1)!!`. Requires even `m >= 2`.
pub fn matching_count(m: u64) -> Result<Int> {
    if m < 2 || m % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "matching_count requires positive even m, got {m}"
        )));
    }
    let fact = factorial_table(m);
    let count = exact_quot(
        &fact[m as usize],
        &(&fact[(m / 2) as usize] * (Int::one() << (m / 2))),
    );
    debug_assert_eq!(count, double_factorial_odd(m - 1).expect("odd"));
    Ok(count)
}
