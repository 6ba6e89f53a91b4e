//! Exact integer and rational helpers: factorials, double factorials,
//! binomials, checked rational arithmetic, signs.

use num_traits::{One, Signed, Zero};

use crate::{Error, Int, Rat, Result};

/// `p/q` as an exact rational in canonical form. Panics if `q == 0`;
/// use [`try_ratio`] for checked construction.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(Int::from(p), Int::from(q))
}

/// Checked construction of `num/den` in canonical form.
pub fn try_ratio(num: Int, den: Int) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rat::new(num, den))
}

/// Parses an exact rational from `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::InvalidInput(format!("cannot parse rational {s:?}: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact rational arithmetic with an explicit error on division by zero.
/// The result is always in canonical form (reduced, positive denominator).
pub fn rat_arith(a: &Rat, b: &Rat, op: RatOp) -> Result<Rat> {
    match op {
        RatOp::Add => Ok(a + b),
        RatOp::Sub => Ok(a - b),
        RatOp::Mul => Ok(a * b),
        RatOp::Div => {
            if b.is_zero() {
                Err(Error::DivisionByZero)
            } else {
                Ok(a / b)
            }
        }
    }
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

/// `k!` as a big integer. The pipeline routinely needs `(4n)!` for `n` up to
/// 200, i.e. `800!` (1977 decimal digits); see the test at that magnitude.
pub fn factorial(k: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// Incremental table `0!..=upto!`.
pub fn factorial_table(upto: u64) -> Vec<Int> {
    let mut table = Vec::with_capacity(upto as usize + 1);
    table.push(Int::one());
    for i in 1..=upto {
        let next = table.last().unwrap() * i;
        table.push(next);
    }
    table
}

/// Double factorial of an odd number: `m!! = m (m-2) (m-4) ... 1`.
/// `(2m-1)!!` counts the perfect matchings of `2m` labeled individuals.
pub fn double_factorial_odd(m: u64) -> Result<Int> {
    if m % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "double_factorial_odd expects an odd argument, got {m}"
        )));
    }
    let mut acc = Int::one();
    let mut i = 3;
    while i <= m {
        acc *= i;
        i += 2;
    }
    Ok(acc)
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
