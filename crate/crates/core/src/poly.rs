//! Dense univariate polynomials over a generic scalar.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;
use crate::{Int, Rat};

/// Dense polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// Invariant: the highest stored coefficient is nonzero. The zero polynomial
/// stores an empty list and reports `degree() == None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_index(k))
            .collect();
        Self::new(coeffs)
    }

    /// The operator `f(x) -> x f'(x)`: coefficient `k` of the result is
    /// `k` times coefficient `k` of the input. Applying it `r` times and
    /// evaluating at 1 turns a probability generating function into its
    /// `r`-th raw moment.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone() * T::from_index(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn scaled(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Coefficients in descending order (leading first); empty for zero.
    pub fn coeffs_descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Renders in descending order, e.g. `4*n^2-2*n` for `var = "n"`.
    pub fn format_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = render_term(c, k, var);
            if out.is_empty() || s.starts_with('-') {
                out.push_str(&s);
            } else {
                out.push('+');
                out.push_str(&s);
            }
        }
        out
    }
}

fn render_term<T: Scalar>(c: &T, k: usize, var: &str) -> String {
    let power = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if k == 0 {
        return format!("{c}");
    }
    if c.is_one() {
        power
    } else if (T::zero() - c.clone()).is_one() {
        format!("-{power}")
    } else {
        format!("{c}*{power}")
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| T::zero() - c.clone()).collect())
    }
}

// Integer-coefficient specifics: content, primitive part, pseudo-division,
// and a subresultant-PRS gcd. These back the canonical form of rational
// functions of n.
impl Polynomial<Int> {
    /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn eval_big(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_rational(&self) -> Polynomial<Rat> {
        self.map(|c| Rat::from_integer(c.clone()))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`,
    /// computed entirely over the integers.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let mut r = self.clone();
        if r.degree().map_or(true, |rd| rd < dd) {
            return r;
        }
        let lead = d.leading().unwrap().clone();
        let mut scale_left = (self.degree().unwrap() - dd + 1) as i64;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let shift = Polynomial::monomial(r.leading().unwrap().clone(), rd - dd);
            r = &r.scaled(&lead) - &(&shift * d);
            scale_left -= 1;
        }
        if scale_left > 0 {
            let mut factor = Int::one();
            for _ in 0..scale_left {
                factor *= &lead;
            }
            r = r.scaled(&factor);
        }
        r
    }

    /// Primitive gcd of the primitive parts, with positive leading
    /// coefficient (integer contents are ignored; rational-function
    /// canonicalization handles those separately).
    pub fn gcd_poly(&self, other: &Self) -> Self {
        if self.is_zero() {
            return positive_primitive(other);
        }
        if other.is_zero() {
            return positive_primitive(self);
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        // subresultant PRS keeps coefficient growth polynomial without
        // taking a full content gcd at every step
        let mut g = Int::one();
        let mut h = Int::one();
        loop {
            if b.degree() == Some(0) {
                return Polynomial::one();
            }
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return positive_primitive(&b);
            }
            a = b;
            let scale = &g * h_pow(&h, delta);
            b = r.div_coeffs_exact(&scale);
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                // h^(1-delta) g^delta, exact by subresultant theory
                exact_int_div(&h_pow(&g, delta), &h_pow(&h, delta - 1))
            };
        }
    }

    /// Exact polynomial division; `None` when the division is not exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.clone();
        let mut q = vec![Int::zero(); sd - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None; // nonzero remainder
            }
            let (quot, r) = rem.leading().unwrap().div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            let shift = Polynomial::monomial(quot.clone(), rd - dd);
            q[rd - dd] = quot;
            rem = &rem - &(&shift * d);
        }
        Some(Polynomial::new(q))
    }

    fn div_coeffs_exact(&self, d: &Int) -> Self {
        if d.is_one() {
            return self.clone();
        }
        Polynomial::new(self.coeffs.iter().map(|c| exact_int_div(c, d)).collect())
    }
}

fn positive_primitive(p: &Polynomial<Int>) -> Polynomial<Int> {
    let pp = p.primitive_part();
    match pp.leading() {
        Some(l) if l.is_negative() => -&pp,
        _ => pp,
    }
}

fn h_pow(base: &Int, exp: usize) -> Int {
    let mut acc = Int::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn exact_int_div(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact integer division in PRS");
    q
}
