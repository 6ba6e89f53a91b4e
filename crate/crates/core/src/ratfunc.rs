//! Rational functions of the population parameter `n` with integer
//! coefficients, kept in canonical form.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::{Error, Int, IntPoly, Rat, Result};

/// Ratio of two integer-coefficient polynomials in `n`.
///
/// Canonical form, enforced by every constructor and operation:
/// the numerator and denominator share no polynomial factor, the gcd of all
/// integer coefficients across the pair is 1, the denominator's leading
/// coefficient is positive, and zero is `0/1`. Two equal functions therefore
/// compare equal coefficient-by-coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(mut num: IntPoly, mut den: IntPoly) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd_poly(&den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let joint = num.content().gcd(&den.content());
        if !joint.is_one() {
            num = num
                .div_exact(&Polynomial::constant(joint.clone()))
                .expect("content divides");
            den = den
                .div_exact(&Polynomial::constant(joint))
                .expect("content divides");
        }
        if den.leading().map_or(false, |l| l.is_negative()) {
            num = -&num;
            den = -&den;
        }
        RationalFunction { num, den }
    }

    /// Builds from rational-coefficient polynomials by clearing denominators.
    pub fn from_rat_polys(num: &Polynomial<Rat>, den: &Polynomial<Rat>) -> Result<Self> {
        let (ni, nscale) = clear_denominators(num);
        let (di, dscale) = clear_denominators(den);
        // num/nscale over den/dscale == (num * dscale) / (den * nscale)
        let num = ni.scaled(&dscale);
        let den = di.scaled(&nscale);
        Self::new(num, den)
    }

    pub fn from_integer_coeffs(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(
            Polynomial::new(num.iter().map(|&c| Int::from(c)).collect()),
            Polynomial::new(den.iter().map(|&c| Int::from(c)).collect()),
        )
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn constant(c: &Rat) -> Self {
        RationalFunction {
            num: Polynomial::constant(c.numer().clone()),
            den: Polynomial::constant(c.denom().clone()),
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `(numerator degree, denominator degree)`; the zero numerator reports 0.
    pub fn degrees(&self) -> (usize, usize) {
        (
            self.num.degree().unwrap_or(0),
            self.den.degree().unwrap_or(0),
        )
    }

    /// Degree at infinity, `deg num - deg den`; `None` for the zero function.
    pub fn leading_exponent(&self) -> Option<i64> {
        let nd = self.num.degree()? as i64;
        Some(nd - self.den.degree().unwrap_or(0) as i64)
    }

    /// Exact value at integer `n`; poles are reported, not panicked on.
    pub fn eval(&self, n: u64) -> Result<Rat> {
        let x = Int::from(n);
        let d = self.den.eval_big(&x);
        if d.is_zero() {
            return Err(Error::Pole(n));
        }
        Ok(Rat::new(self.num.eval_big(&x), d))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Self::canonicalize(num, den)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // cross-cancel first so the final gcd works on small polynomials
        let g1 = self.num.gcd_poly(&rhs.den);
        let g2 = rhs.num.gcd_poly(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = rhs.den.div_exact(&g1).expect("gcd divides");
        let b = rhs.num.div_exact(&g2).expect("gcd divides");
        let c = self.den.div_exact(&g2).expect("gcd divides");
        Self::canonicalize(&a * &b, &c * &d)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RationalFunction {
            num: rhs.den.clone(),
            den: rhs.num.clone(),
        }))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

fn clear_denominators(p: &Polynomial<Rat>) -> (IntPoly, Int) {
    let mut lcm = Int::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom()));
    (Polynomial::new(ints.collect()), lcm)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.format_with_var("n"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.format_with_var("n"),
                self.den.format_with_var("n")
            )
        }
    }
}
