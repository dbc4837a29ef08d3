//! Counting increasing trees by out-degree weights.
//!
//! The tree generating function P(t) satisfies P'(t) = x(P(t)) for a degree
//! weight series x; its coefficients come out of a closed Bell-polynomial
//! form ([`p_coefficients`]), which [`count_mary_trees`] specializes to unit
//! weights. Three independent oracles guard the whole chain: term-by-term
//! ODE stepping, insertion-sequence enumeration, and the Seidel triangle for
//! the zigzag numbers.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bell::{bell_table, ArgSeq};
use crate::chromatic::chromatic_at_minus_one;
use crate::error::Error;
use crate::scalar::{powers, Scalar};
use crate::series::EgfSeries;
use crate::{ratio_to_int, ExactInt, ExactRatio};

/// Default cap on `n` for [`insertion_enum_oracle`].
pub const DEFAULT_INSERTION_BOUND: usize = 10;

/// Default cap on `n` for [`insertion_trees_materialized`], which walks every
/// insertion sequence individually.
pub const DEFAULT_MATERIALIZE_BOUND: usize = 7;

/// Out-degree weight sequence: `weights[k]` is the weight x_k of a vertex
/// with k children. Access is zero-extended past the stored length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSeq<T> {
    weights: Vec<T>,
}

impl<T: Scalar> WeightSeq<T> {
    pub fn new(weights: Vec<T>) -> Self {
        Self { weights }
    }

    /// Unit weights for out-degrees 0..=m: every vertex may have at most m
    /// children and all trees count with weight 1.
    pub fn mary(m: usize) -> Self {
        assert!(m >= 1, "m must be >= 1");
        Self {
            weights: vec![T::one(); m + 1],
        }
    }

    /// x_k; zero beyond the stored length.
    pub fn get(&self, k: usize) -> T {
        self.weights.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Largest out-degree with nonzero weight, if any.
    pub fn support(&self) -> Option<usize> {
        self.weights.iter().rposition(|w| !w.is_zero())
    }

    /// The EGF x(t) truncated at `order`.
    pub fn to_series(&self, order: usize) -> EgfSeries<T> {
        EgfSeries::new((0..=order).map(|k| self.get(k)).collect()).expect("order + 1 >= 1")
    }
}

/// One row of tree counts: T_n(m) for n = 1..=n_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCountRow {
    m: usize,
    counts: Vec<ExactInt>,
}

impl TreeCountRow {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_max(&self) -> usize {
        self.counts.len()
    }

    /// T_n(m); n is 1-based.
    pub fn count(&self, n: usize) -> &ExactInt {
        &self.counts[n - 1]
    }

    /// All counts, index 0 holding T_1(m).
    pub fn counts(&self) -> &[ExactInt] {
        &self.counts
    }
}

/// Coefficients p_1 .. p_n_max of the tree generating function for weight
/// sequence x: p_1 = x_0 and, for n > 1,
/// p_n = sum_{k=1}^{n-1} (-1)^k x_0^{n+k} B_{n+k-1,k}(0, b_1, ..., b_{n-1}),
/// where b_s are the coefficients of 1/x(t).
///
/// The k = 0 and k = n terms of the wider sum vanish (B_{n-1,0} = 0 for
/// n > 1, and k = n would need n blocks of size >= 2 inside n + k - 1 = 2n - 1
/// elements), so the range stops at n - 1.
pub fn p_coefficients<T: Scalar>(x: &WeightSeq<T>, n_max: usize) -> Result<Vec<T>, Error> {
    assert!(n_max >= 1, "n_max must be >= 1");
    let x0 = x.get(0);
    if x0.is_zero() {
        return Err(Error::ZeroLeafWeight);
    }
    let mut p = Vec::with_capacity(n_max);
    p.push(x0.clone());
    if n_max == 1 {
        return Ok(p);
    }
    let reciprocal = x
        .to_series(n_max - 1)
        .reciprocal_bell()
        .expect("x_0 checked nonzero");
    let mut vals = vec![T::zero()];
    vals.extend_from_slice(&reciprocal.coeffs()[1..]);
    let args = ArgSeq::new(vals).expect("n_max >= 2");
    let table = bell_table(2 * n_max - 2, &args);
    let x0_pows = powers(&x0, 2 * n_max - 1);
    for n in 2..=n_max {
        let mut sum = T::zero();
        for k in 1..=(n - 1) {
            let b = table.value(n + k - 1, k);
            if b.is_zero() {
                continue;
            }
            let term = x0_pows[n + k].clone() * b;
            sum = if k % 2 == 1 { sum - term } else { sum + term };
        }
        p.push(sum);
    }
    Ok(p)
}

/// T_n(m) for n = 1..=n_max, computed by two routes that must agree: the
/// closed integer form
/// T_n(m) = sum_{k=1}^{n-1} (-1)^k B_{n+k-1,k}(chi_m(K_0,-1), ..., chi_m(K_{n-1},-1))
/// and the rational [`p_coefficients`] route specialized to unit weights.
pub fn count_mary_trees(m: usize, n_max: usize) -> Result<TreeCountRow, Error> {
    assert!(m >= 1 && n_max >= 1, "m and n_max must be >= 1");
    let chi: Vec<ExactInt> = (0..n_max).map(|s| chromatic_at_minus_one(m, s)).collect();
    let args = ArgSeq::new(chi).expect("n_max >= 1");
    let table = bell_table(if n_max >= 2 { 2 * n_max - 2 } else { 0 }, &args);
    let mut counts = vec![ExactInt::one()];
    for n in 2..=n_max {
        let mut sum = ExactInt::zero();
        for k in 1..=(n - 1) {
            let b = table.value(n + k - 1, k);
            if b.is_zero() {
                continue;
            }
            if k % 2 == 1 {
                sum -= b;
            } else {
                sum += b;
            }
        }
        counts.push(sum);
    }
    let p = p_coefficients(&WeightSeq::<ExactRatio>::mary(m), n_max)?;
    for (i, p_n) in p.iter().enumerate() {
        let value =
            ratio_to_int(p_n).ok_or_else(|| Error::NonIntegerResult(p_n.to_string()))?;
        assert_eq!(
            value,
            counts[i],
            "closed form and p-coefficient route disagree at m = {m}, n = {}",
            i + 1
        );
    }
    Ok(TreeCountRow { m, counts })
}

/// Steps P'(t) = x(P(t)) one coefficient at a time: p_{s+1} is coefficient s
/// of x composed with the current truncation of P. Total in x (no nonzero
/// leaf weight required).
pub fn ode_step_oracle<T: Scalar>(x: &WeightSeq<T>, n_max: usize) -> Vec<T> {
    assert!(n_max >= 1, "n_max must be >= 1");
    let mut p = Vec::with_capacity(n_max);
    let mut inner = vec![T::zero()];
    for s in 0..n_max {
        let outer = x.to_series(s);
        let truncated = EgfSeries::new(inner.clone()).expect("nonempty");
        let rhs = outer.compose(&truncated).expect("P has zero constant term");
        let next = rhs.coeff(s).clone();
        p.push(next.clone());
        inner.push(next);
    }
    p
}

/// Counts m-ary increasing trees on n labeled vertices by the insertion
/// bijection: vertex j joins as a child of any earlier vertex whose
/// out-degree is still below m. The count only depends on the histogram of
/// current out-degrees, which keeps the memoized recursion tiny.
pub fn insertion_enum_oracle(m: usize, n: usize) -> Result<ExactInt, Error> {
    insertion_enum_oracle_bounded(m, n, DEFAULT_INSERTION_BOUND)
}

/// [`insertion_enum_oracle`] with a caller-chosen cap on `n`.
pub fn insertion_enum_oracle_bounded(m: usize, n: usize, bound: usize) -> Result<ExactInt, Error> {
    assert!(m >= 1 && n >= 1, "m and n must be >= 1");
    if n > bound {
        return Err(Error::OracleBoundExceeded {
            size: n as u64,
            bound: bound as u64,
        });
    }
    let mut memo: HashMap<Vec<u16>, ExactInt> = HashMap::new();
    let mut histogram = vec![0u16; m + 1];
    histogram[0] = 1;
    Ok(count_insertions(&mut memo, histogram, n - 1, m))
}

fn count_insertions(
    memo: &mut HashMap<Vec<u16>, ExactInt>,
    histogram: Vec<u16>,
    remaining: usize,
    m: usize,
) -> ExactInt {
    if remaining == 0 {
        return ExactInt::one();
    }
    if let Some(v) = memo.get(&histogram) {
        return v.clone();
    }
    let mut total = ExactInt::zero();
    for degree in 0..m {
        if histogram[degree] == 0 {
            continue;
        }
        let mut next = histogram.clone();
        next[degree] -= 1;
        next[degree + 1] += 1;
        next[0] += 1;
        total += ExactInt::from(histogram[degree]) * count_insertions(memo, next, remaining - 1, m);
    }
    memo.insert(histogram, total.clone());
    total
}

/// Materializes every m-ary increasing tree on n vertices as a parent array
/// (entry j holds the parent of vertex j + 2), walking each insertion
/// sequence individually. Capped low since the output is exponential.
pub fn insertion_trees_materialized(m: usize, n: usize) -> Result<Vec<Vec<usize>>, Error> {
    assert!(m >= 1 && n >= 1, "m and n must be >= 1");
    if n > DEFAULT_MATERIALIZE_BOUND {
        return Err(Error::OracleBoundExceeded {
            size: n as u64,
            bound: DEFAULT_MATERIALIZE_BOUND as u64,
        });
    }
    let mut trees = Vec::new();
    let mut parents = Vec::with_capacity(n.saturating_sub(1));
    let mut out_degrees = vec![0usize; n + 1];
    materialize(m, n, 2, &mut parents, &mut out_degrees, &mut trees);
    Ok(trees)
}

fn materialize(
    m: usize,
    n: usize,
    next_vertex: usize,
    parents: &mut Vec<usize>,
    out_degrees: &mut Vec<usize>,
    trees: &mut Vec<Vec<usize>>,
) {
    if next_vertex > n {
        trees.push(parents.clone());
        return;
    }
    for parent in 1..next_vertex {
        if out_degrees[parent] >= m {
            continue;
        }
        out_degrees[parent] += 1;
        parents.push(parent);
        materialize(m, n, next_vertex + 1, parents, out_degrees, trees);
        parents.pop();
        out_degrees[parent] -= 1;
    }
}

/// Zigzag numbers E_0 .. E_n_max = 1, 1, 1, 2, 5, 16, 61, ... generated by
/// the boustrophedon (Seidel) triangle, with no generating functions
/// involved: each row starts at 0 and adds the previous row read backwards.
/// T_n(2) equals E_n.
pub fn euler_seidel_oracle(n_max: usize) -> Vec<ExactInt> {
    let mut values = vec![ExactInt::one()];
    let mut prev_row = vec![ExactInt::one()];
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(ExactInt::zero());
        for k in 1..=n {
            let next = &row[k - 1] + &prev_row[n - k];
            row.push(next);
        }
        values.push(row[n].clone());
        prev_row = row;
    }
    values
}
