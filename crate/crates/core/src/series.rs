//! Truncated formal power series over a generic scalar.

use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Power series truncated at order `K`: exactly `K + 1` stored coefficients
/// for `t^0 ..= t^K` (zeros included, unlike [`Polynomial`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncated(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::new(
            (0..=order).map(|j| self.coeff(j) + rhs.coeff(j)).collect(),
            order,
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs }
    }

    /// Formal quotient `num / den` through order `order`.
    ///
    /// Requires `den` to have a nonzero constant term; callers dividing by a
    /// series with a zero constant term must factor out powers of `t` first.
    /// Multiplying the result back by `den` reproduces `num` through `order`.
    pub fn div(num: &Self, den: &Self, order: usize) -> Result<Self> {
        let b0 = den.coeff(0);
        if b0.is_zero() {
            return Err(Error::SeriesDivisor);
        }
        let mut out = vec![T::zero(); order + 1];
        for j in 0..=order {
            let mut acc = num.coeff(j);
            for i in 1..=j {
                let bi = den.coeff(i);
                if bi.is_zero() {
                    continue;
                }
                acc = acc - bi * out[j - i].clone();
            }
            out[j] = acc / b0.clone();
        }
        Ok(PowerSeries { coeffs: out })
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use crate::numbers::rat;
    use crate::Series;
    use proptest::prelude::*;

    fn arb_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-20i64..=20, 1i64..=7), 1..=order + 1)
            .prop_map(move |cs| {
                PowerSeries::new(cs.into_iter().map(|(p, q)| rat(p, q)).collect(), order)
            })
    }

    proptest! {
        // (num / den) * den == num through the truncation order
        #[test]
        fn division_round_trip(num in arb_series(6), den in arb_series(6)) {
            prop_assume!(!den.coeff(0).is_zero());
            let q = Series::div(&num, &den, 6).unwrap();
            prop_assert_eq!(q.mul(&den), num);
        }
    }
}
