//! Truncated exponential generating functions with exact coefficient
//! manipulation: binomial product, reciprocal, integration, derivative,
//! composition, and compositional inverse.
//!
//! The reciprocal and the compositional inverse each come in two forms, a
//! closed Bell-polynomial formula and an iterative term-by-term solver, so
//! the two routes can cross-check each other exactly.

use std::fmt::{Display, Write as _};
use std::str::FromStr;

use crate::bell::{bell_table, pascal_triangle, ArgSeq};
use crate::error::Error;
use crate::scalar::{factorials, powers, Scalar};

/// Truncated EGF: `coeffs[n]` stores n! * [t^n], so the truncation order is
/// `coeffs.len() - 1`. Two series are equal iff orders and all coefficients
/// match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> EgfSeries<T> {
    /// A series from its coefficient list; rejects an empty list.
    pub fn new(coeffs: Vec<T>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The identity series t, truncated at `order` (which must be >= 1).
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1, "the identity series needs order >= 1");
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[1] = T::one();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// n! * [t^n]; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// EGF product (binomial convolution), truncated to the smaller order.
    pub fn product(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let binom = pascal_triangle::<T>(order);
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut sum = T::zero();
            for j in 0..=n {
                if self.coeffs[j].is_zero() || other.coeffs[n - j].is_zero() {
                    continue;
                }
                sum = sum
                    + binom[n][j].clone() * self.coeffs[j].clone() * other.coeffs[n - j].clone();
            }
            out.push(sum);
        }
        Self { coeffs: out }
    }

    /// Coefficients of 1/x(t) by the closed Bell form: coefficient n is
    /// (1/x_0) sum_{k=0}^{n} k!/(-x_0)^k B_{n,k}(x_1, ..., x_{n-k+1}).
    pub fn reciprocal_bell(&self) -> Result<Self, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let inv_x0 = T::one() / self.coeffs[0].clone();
        if order == 0 {
            return Ok(Self {
                coeffs: vec![inv_x0],
            });
        }
        let args = ArgSeq::new(self.coeffs[1..].to_vec()).expect("order >= 1");
        let table = bell_table(order, &args);
        let fact = factorials::<T>(order);
        let neg_x0 = -self.coeffs[0].clone();
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut sum = T::zero();
            let mut denom = T::one(); // (-x_0)^k
            for k in 0..=n {
                let b = table.value(n, k);
                if !b.is_zero() {
                    sum = sum + fact[k].clone() / denom.clone() * b;
                }
                denom = denom * neg_x0.clone();
            }
            out.push(inv_x0.clone() * sum);
        }
        Ok(Self { coeffs: out })
    }

    /// Coefficients of 1/x(t) by solving the convolution
    /// sum_j C(n,j) x_j y_{n-j} = [n = 0] one term at a time.
    pub fn reciprocal_oracle(&self) -> Result<Self, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let binom = pascal_triangle::<T>(order);
        let inv_x0 = T::one() / self.coeffs[0].clone();
        let mut y: Vec<T> = vec![inv_x0.clone()];
        for n in 1..=order {
            let mut sum = T::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() || y[n - j].is_zero() {
                    continue;
                }
                sum = sum + binom[n][j].clone() * self.coeffs[j].clone() * y[n - j].clone();
            }
            y.push(-(inv_x0.clone() * sum));
        }
        Ok(Self { coeffs: y })
    }

    /// Integration from 0: an index shift to the right. The order grows by
    /// one and the constant term is zero.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// d/dt: an index shift to the left. The order shrinks by one.
    pub fn derivative(&self) -> Result<Self, Error> {
        if self.order() == 0 {
            return Err(Error::EmptySeries);
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Composition self(inner) by Faa di Bruno in Bell form: coefficient n
    /// is sum_{k=0}^{n} self_k B_{n,k}(inner_1, inner_2, ...). The inner
    /// series must have zero constant term; the result is truncated to the
    /// smaller of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        if order == 0 {
            return Ok(Self {
                coeffs: vec![self.coeffs[0].clone()],
            });
        }
        let args = ArgSeq::new(inner.coeffs[1..=order].to_vec()).expect("order >= 1");
        let table = bell_table(order, &args);
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut sum = T::zero();
            for k in 0..=n {
                let b = table.value(n, k);
                if !b.is_zero() && !self.coeffs[k].is_zero() {
                    sum = sum + self.coeffs[k].clone() * b;
                }
            }
            out.push(sum);
        }
        Ok(Self { coeffs: out })
    }

    /// Coefficients of the compositional inverse by the closed Bell form:
    /// coefficient 1 is 1/x_1 and, for n > 1, coefficient n is
    /// sum_{k=1}^{n-1} (-1)^k / x_1^{n+k} B_{n+k-1,k}(0, x_2, ..., x_n).
    pub fn comp_inverse_bell(&self) -> Result<Self, Error> {
        self.check_invertible()?;
        let order = self.order();
        let x1 = self.coeffs[1].clone();
        let mut out = vec![T::zero(), T::one() / x1.clone()];
        if order >= 2 {
            // argument list (0, x_2, ..., x_order): the lead slot is the
            // literal zero; B_{n+k-1,k} never reads past index n, so one
            // shared list serves every n.
            let mut vals = vec![T::zero()];
            vals.extend_from_slice(&self.coeffs[2..]);
            let args = ArgSeq::new(vals).expect("order >= 2");
            let table = bell_table(2 * order - 2, &args);
            let x1_pows = powers(&x1, 2 * order - 1);
            for n in 2..=order {
                let mut sum = T::zero();
                for k in 1..=(n - 1) {
                    let b = table.value(n + k - 1, k);
                    if b.is_zero() {
                        continue;
                    }
                    let term = b / x1_pows[n + k].clone();
                    sum = if k % 2 == 1 { sum - term } else { sum + term };
                }
                out.push(sum);
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Compositional inverse by solving self(y) = t one coefficient per
    /// degree: with y_n still unset, degree n of the composition misses
    /// exactly x_1 y_n.
    pub fn comp_inverse_oracle(&self) -> Result<Self, Error> {
        self.check_invertible()?;
        let order = self.order();
        let inv_x1 = T::one() / self.coeffs[1].clone();
        let mut y = Self::zero(order);
        y.coeffs[1] = inv_x1.clone();
        for n in 2..=order {
            let residual = self.compose(&y)?.coeffs[n].clone();
            y.coeffs[n] = -(inv_x1.clone() * residual);
        }
        Ok(y)
    }

    fn check_invertible(&self) -> Result<(), Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        if self.order() == 0 || self.coeffs[1].is_zero() {
            return Err(Error::ZeroLinearTerm);
        }
        Ok(())
    }
}

impl<T: Scalar + Display> EgfSeries<T> {
    /// Line-based text form: an `order N` header, then one coefficient per
    /// line (integers bare, rationals as `p/q` in lowest terms).
    pub fn to_text(&self) -> String {
        let mut out = format!("order {}\n", self.order());
        for c in &self.coeffs {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

impl<T: Scalar + FromStr> EgfSeries<T> {
    /// Parses the format written by [`EgfSeries::to_text`].
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty series text".into()))?;
        let order: usize = header
            .strip_prefix("order ")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad series header {header:?}")))?;
        let mut coeffs = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("series text ends early".into()))?;
            let c = line
                .trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad coefficient {line:?}")))?;
            coeffs.push(c);
        }
        Ok(Self { coeffs })
    }
}
