//! Degree-chromatic polynomials of complete graphs.
//!
//! A coloring of K_n is counted when no color is used more than m times, so
//! the polynomial lives naturally in the falling-factorial basis with the
//! Bell values B_{n,k}(1_m) as coefficients. An exhaustive coloring oracle
//! and the Gessel sequence a_n(m) round the module out.

use num_traits::{One, Zero};

use crate::bell::{bell_table, ArgSeq};
use crate::error::Error;
use crate::series::EgfSeries;
use crate::{ratio_to_int, ExactInt, ExactRatio};

/// Default cap on the number of colorings [`coloring_count_oracle`] visits.
pub const DEFAULT_COLORING_BOUND: u64 = 10_000_000;

/// Polynomial in the falling-factorial basis: `coeffs[k]` multiplies
/// (lambda)_k = lambda (lambda - 1) ... (lambda - k + 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingPoly {
    coeffs: Vec<ExactInt>,
}

impl FallingPoly {
    /// Wraps the coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest k with a nonzero coefficient; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of (lambda)_k; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> ExactInt {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactInt::zero)
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Exact evaluation: sum_k coeffs[k] (lambda)_k.
    pub fn eval(&self, lambda: &ExactInt) -> ExactInt {
        let mut total = ExactInt::zero();
        let mut falling = ExactInt::one();
        let mut factor = lambda.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                falling *= &factor;
                factor -= 1;
            }
            if !c.is_zero() {
                total += c * &falling;
            }
        }
        total
    }
}

/// chi_m(K_n, .) in the falling-factorial basis:
/// sum_{k=1}^{n} B_{n,k}(1_m) (lambda)_k, with the zero polynomial for n = 0
/// (this module pins chi_m(K_0, -1) = 0; the closed tree-count form needs
/// that value in its lead argument slot).
pub fn degree_chromatic_complete(m: usize, n: usize) -> FallingPoly {
    assert!(m >= 1, "m must be >= 1");
    if n == 0 {
        return FallingPoly::zero();
    }
    let table = bell_table(n, &ArgSeq::<ExactInt>::ones(m));
    FallingPoly::new((0..=n).map(|k| table.value(n, k)).collect())
}

/// chi_m(K_n, -1) by the direct sum sum_{k=1}^{n} (-1)^k k! B_{n,k}(1_m);
/// agrees with evaluating [`degree_chromatic_complete`] at -1.
pub fn chromatic_at_minus_one(m: usize, n: usize) -> ExactInt {
    assert!(m >= 1, "m must be >= 1");
    if n == 0 {
        return ExactInt::zero();
    }
    let table = bell_table(n, &ArgSeq::<ExactInt>::ones(m));
    let mut total = ExactInt::zero();
    let mut k_factorial = ExactInt::one();
    for k in 1..=n {
        k_factorial *= ExactInt::from(k);
        let b = table.value(n, k);
        if b.is_zero() {
            continue;
        }
        let term = &k_factorial * b;
        if k % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

/// Counts colorings of K_n in `colors` colors with every color class of size
/// at most m, by walking all colorings with a mixed-radix counter and an
/// incrementally maintained color histogram.
pub fn coloring_count_oracle(m: usize, n: usize, colors: u64) -> Result<ExactInt, Error> {
    coloring_count_oracle_bounded(m, n, colors, DEFAULT_COLORING_BOUND)
}

/// [`coloring_count_oracle`] with a caller-chosen cap on colors^n.
pub fn coloring_count_oracle_bounded(
    m: usize,
    n: usize,
    colors: u64,
    bound: u64,
) -> Result<ExactInt, Error> {
    assert!(m >= 1, "m must be >= 1");
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(colors as u128);
        if total > bound as u128 {
            return Err(Error::OracleBoundExceeded {
                size: total.min(u64::MAX as u128) as u64,
                bound,
            });
        }
    }
    if n == 0 {
        return Ok(ExactInt::one());
    }
    if colors == 0 {
        return Ok(ExactInt::zero());
    }
    let lambda = colors as usize;
    let mut digits = vec![0usize; n];
    let mut counts = vec![0usize; lambda];
    counts[0] = n;
    // number of colors currently used more than m times
    let mut overfull = usize::from(n > m);
    let mut legal: u64 = 0;
    loop {
        if overfull == 0 {
            legal += 1;
        }
        // advance the mixed-radix counter, keeping the histogram in step
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(ExactInt::from(legal));
            }
            pos -= 1;
            let old = digits[pos];
            if counts[old] == m + 1 {
                overfull -= 1;
            }
            counts[old] -= 1;
            let new = old + 1;
            if new < lambda {
                digits[pos] = new;
                counts[new] += 1;
                if counts[new] == m + 1 {
                    overfull += 1;
                }
                break;
            }
            digits[pos] = 0;
            counts[0] += 1;
            if counts[0] == m + 1 {
                overfull += 1;
            }
        }
    }
}

/// The Gessel sequence a_0(m) .. a_n_max(m): EGF coefficients of the
/// reciprocal of the partial alternating exponential sum with 2m terms,
/// whose coefficient n is simply (-1)^n for n <= 2m - 1.
pub fn gessel_sequence(m: usize, n_max: usize) -> Vec<ExactInt> {
    assert!(m >= 1, "m must be >= 1");
    let coeffs: Vec<ExactRatio> = (0..=n_max)
        .map(|n| {
            if n < 2 * m {
                if n % 2 == 0 {
                    ExactRatio::one()
                } else {
                    -ExactRatio::one()
                }
            } else {
                ExactRatio::zero()
            }
        })
        .collect();
    let partial_sum = EgfSeries::new(coeffs).expect("n_max + 1 >= 1");
    let recip = partial_sum
        .reciprocal_bell()
        .expect("constant term is one");
    recip
        .coeffs()
        .iter()
        .map(|c| {
            ratio_to_int(c).expect("reciprocal of a unit integer series has integer coefficients")
        })
        .collect()
}

/// Matrix of chi_m(K_n, -1) for 1 <= m <= m_max, 1 <= n <= n_max; rows are
/// indexed by m.
pub fn chromatic_table(m_max: usize, n_max: usize) -> Vec<Vec<ExactInt>> {
    assert!(m_max >= 1 && n_max >= 1);
    (1..=m_max)
        .map(|m| (1..=n_max).map(|n| chromatic_at_minus_one(m, n)).collect())
        .collect()
}
