use std::ops::Neg;

use num_traits::Num;

/// Scalar type the numeric kernels are generic over.
///
/// [`crate::ExactRatio`] is the workhorse: the inversion formulas divide by
/// constant and linear coefficients, so they need field semantics.
/// [`crate::ExactInt`] works wherever no division occurs (the Bell recurrence,
/// the chromatic sums).
pub trait Scalar: Num + Neg<Output = Self> + Clone {}

impl<T> Scalar for T where T: Num + Neg<Output = T> + Clone {}

/// base^exp by repeated multiplication.
pub fn pow<T: Scalar>(base: &T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

/// base^0 .. base^max_exp.
pub fn powers<T: Scalar>(base: &T, max_exp: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(max_exp + 1);
    out.push(T::one());
    for e in 1..=max_exp {
        out.push(out[e - 1].clone() * base.clone());
    }
    out
}

/// 0! .. n_max!, built by repeated multiplication so no integer conversion
/// into `T` is ever needed.
pub(crate) fn factorials<T: Scalar>(n_max: usize) -> Vec<T> {
    let mut fact = Vec::with_capacity(n_max + 1);
    fact.push(T::one());
    let mut counter = T::zero();
    for i in 1..=n_max {
        counter = counter + T::one();
        fact.push(fact[i - 1].clone() * counter.clone());
    }
    fact
}
