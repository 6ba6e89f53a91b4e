//! Scalar abstraction for the arithmetic kernel.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// Coefficient type for [`crate::poly::Polynomial`] and
/// [`crate::series::PowerSeries`].
///
/// Satisfied by `f64`, [`crate::Int`], and [`crate::Rat`]. The exact pipeline
/// instantiates everything at [`crate::Rat`] (see the aliases at the crate
/// root); `f64` instantiations exist for quick numeric experiments only and
/// give up exactness.
pub trait Scalar: Signed + Clone + PartialEq + Debug + Display + FromPrimitive + 'static {
    /// Embeds a small nonnegative integer (exponents, multiplicities).
    fn from_index(k: usize) -> Self {
        Self::from_usize(k).expect("index does not fit in scalar type")
    }
}

impl<T> Scalar for T where T: Signed + Clone + PartialEq + Debug + Display + FromPrimitive + 'static {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, Rat};

    fn embeds<T: Scalar>() -> T {
        T::from_index(7)
    }

    #[test]
    fn all_three_instantiations_embed_indices() {
        assert_eq!(embeds::<f64>(), 7.0);
        assert_eq!(embeds::<Int>(), Int::from(7));
        assert_eq!(embeds::<Rat>(), Rat::from_integer(Int::from(7)));
    }
}
