//! Partial Bell polynomials B_{n,k} evaluated at explicit numeric sequences.
//!
//! The production path is the binomial recurrence
//! B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1};
//! [`bell_definition_sum`] keeps the defining sum over block-size multisets
//! and serves as an independent oracle for it.

use crate::error::Error;
use crate::scalar::{factorials, Scalar};

/// Default cap on `n` for [`bell_definition_sum`].
pub const DEFAULT_ORACLE_BOUND: usize = 25;

/// Argument sequence x_1, x_2, ... with 1-indexed access and implicit
/// zero-extension past the stored length, so finitely supported sequences
/// can be passed without padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgSeq<T> {
    values: Vec<T>,
}

impl<T: Scalar> ArgSeq<T> {
    /// Wraps the values; `values[0]` plays the role of x_1.
    pub fn new(values: Vec<T>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyArgs);
        }
        Ok(Self { values })
    }

    /// The sequence 1_m: m ones followed by zeros.
    pub fn ones(m: usize) -> Self {
        assert!(m >= 1, "ones(m) requires m >= 1");
        Self {
            values: vec![T::one(); m],
        }
    }

    /// x_i for i >= 1; zero beyond the stored length (and for i = 0).
    pub fn get(&self, i: usize) -> T {
        if i >= 1 && i <= self.values.len() {
            self.values[i - 1].clone()
        } else {
            T::zero()
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

/// Triangular table of B_{n,k}(args) for 0 <= k <= n <= n_max, with the
/// Pascal triangle used to build it cached alongside.
#[derive(Debug, Clone)]
pub struct BellTable<T> {
    entries: Vec<Vec<T>>,
    binomials: Vec<Vec<T>>,
}

impl<T: Scalar> BellTable<T> {
    pub fn new(n_max: usize, args: &ArgSeq<T>) -> Self {
        let binomials = pascal_triangle::<T>(n_max);
        let mut entries: Vec<Vec<T>> = Vec::with_capacity(n_max + 1);
        entries.push(vec![T::one()]);
        for n in 1..=n_max {
            let mut row = Vec::with_capacity(n + 1);
            row.push(T::zero());
            for k in 1..=n {
                let mut sum = T::zero();
                for i in 1..=(n - k + 1) {
                    let x = args.get(i);
                    if x.is_zero() {
                        continue;
                    }
                    let prev = &entries[n - i][k - 1];
                    if prev.is_zero() {
                        continue;
                    }
                    sum = sum + binomials[n - 1][i - 1].clone() * x * prev.clone();
                }
                row.push(sum);
            }
            entries.push(row);
        }
        Self { entries, binomials }
    }

    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// B_{n,k}; zero when k > n. Panics when n exceeds the table size.
    pub fn value(&self, n: usize, k: usize) -> T {
        if k > n {
            T::zero()
        } else {
            self.entries[n][k].clone()
        }
    }

    /// C(n,k) from the cached Pascal triangle; zero when k > n.
    pub fn binomial(&self, n: usize, k: usize) -> T {
        if k > n {
            T::zero()
        } else {
            self.binomials[n][k].clone()
        }
    }

    /// The triangular rows; row n holds B_{n,0} .. B_{n,n}.
    pub fn rows(&self) -> &[Vec<T>] {
        &self.entries
    }
}

/// Pascal-triangle rows C(i,j) for 0 <= j <= i <= n_max, built in `T` purely
/// by additions.
pub fn pascal_triangle<T: Scalar>(n_max: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![T::one()]);
    for i in 1..=n_max {
        let mut row = Vec::with_capacity(i + 1);
        row.push(T::one());
        for j in 1..i {
            row.push(rows[i - 1][j - 1].clone() + rows[i - 1][j].clone());
        }
        row.push(T::one());
        rows.push(row);
    }
    rows
}

/// B_{n,k}(args) by the binomial recurrence. Total: zero whenever k > n.
pub fn bell<T: Scalar>(n: usize, k: usize, args: &ArgSeq<T>) -> T {
    if k > n {
        return T::zero();
    }
    BellTable::new(n, args).value(n, k)
}

/// All B_{n,k}(args) for 0 <= k <= n <= n_max in one pass.
pub fn bell_table<T: Scalar>(n_max: usize, args: &ArgSeq<T>) -> BellTable<T> {
    BellTable::new(n_max, args)
}

/// B_{n,k}(args) straight from the definition: the sum over all multisets
/// alpha with sum alpha_i = k and sum i*alpha_i = n of
/// n!/(alpha_1! alpha_2! ...) * prod_i (x_i/i!)^{alpha_i}.
///
/// The weights divide by factorials, so exact results need a field scalar
/// (use the rational instantiation). Capped at [`DEFAULT_ORACLE_BOUND`].
pub fn bell_definition_sum<T: Scalar>(n: usize, k: usize, args: &ArgSeq<T>) -> Result<T, Error> {
    bell_definition_sum_bounded(n, k, args, DEFAULT_ORACLE_BOUND)
}

/// [`bell_definition_sum`] with a caller-chosen cap on `n`.
pub fn bell_definition_sum_bounded<T: Scalar>(
    n: usize,
    k: usize,
    args: &ArgSeq<T>,
    bound: usize,
) -> Result<T, Error> {
    if n > bound {
        return Err(Error::OracleBoundExceeded {
            size: n as u64,
            bound: bound as u64,
        });
    }
    if k > n {
        return Ok(T::zero());
    }
    if n == 0 {
        return Ok(T::one());
    }
    if k == 0 {
        return Ok(T::zero());
    }
    let fact = factorials::<T>(n);
    let max_part = n - k + 1;
    let mut total = T::zero();
    multiset_sum(args, &fact, 1, max_part, k, n, T::one(), &mut total);
    Ok(total * fact[n].clone())
}

/// Walks all choices of alpha_i for i = part..=max_part, accumulating
/// prod (x_i/i!)^{alpha_i} / alpha_i! in `partial`.
fn multiset_sum<T: Scalar>(
    args: &ArgSeq<T>,
    fact: &[T],
    part: usize,
    max_part: usize,
    blocks_left: usize,
    weight_left: usize,
    partial: T,
    total: &mut T,
) {
    if blocks_left == 0 {
        if weight_left == 0 {
            *total = total.clone() + partial;
        }
        return;
    }
    // remaining blocks have sizes in part..=max_part
    if part > max_part || weight_left < blocks_left * part || weight_left > blocks_left * max_part {
        return;
    }
    let x = args.get(part);
    let mut term = partial;
    let mut count = T::zero();
    let mut alpha = 0usize;
    loop {
        multiset_sum(
            args,
            fact,
            part + 1,
            max_part,
            blocks_left - alpha,
            weight_left - part * alpha,
            term.clone(),
            total,
        );
        alpha += 1;
        if alpha > blocks_left || part * alpha > weight_left || x.is_zero() {
            break;
        }
        count = count + T::one();
        term = term * x.clone() / fact[part].clone() / count.clone();
    }
}
