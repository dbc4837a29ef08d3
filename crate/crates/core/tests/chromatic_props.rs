mod common;

use common::{int, set_partition_block_counts};
use num_traits::Zero;
use treecount::chromatic::{
    chromatic_at_minus_one, coloring_count_oracle, degree_chromatic_complete, gessel_sequence,
};
use treecount::scalar::pow;
use treecount::ExactInt;

#[test]
fn coloring_oracle_agrees_with_polynomial() {
    for m in 1..=3usize {
        for n in 1..=6usize {
            let poly = degree_chromatic_complete(m, n);
            for colors in 0..=4u64 {
                let by_oracle = coloring_count_oracle(m, n, colors).unwrap();
                let by_eval = poly.eval(&ExactInt::from(colors));
                assert_eq!(by_oracle, by_eval, "m = {m}, n = {n}, colors = {colors}");
            }
        }
    }
}

#[test]
fn direct_sum_matches_eval_at_minus_one() {
    let minus_one = int(-1);
    for m in 1..=12usize {
        for n in 0..=12usize {
            assert_eq!(
                chromatic_at_minus_one(m, n),
                degree_chromatic_complete(m, n).eval(&minus_one),
                "m = {m}, n = {n}"
            );
        }
    }
}

#[test]
fn gessel_sign_identity() {
    for m in 1..=4usize {
        let a = gessel_sequence(m, 12);
        for n in 1..=12usize {
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(
                chromatic_at_minus_one(2 * m - 1, n),
                sign * &a[n],
                "m = {m}, n = {n}"
            );
        }
    }
}

#[test]
fn saturated_bound_counts_all_colorings() {
    // once m >= n no coloring is excluded, so the polynomial evaluates to
    // lambda^n
    for n in 1..=8usize {
        for m in n..=9usize {
            let poly = degree_chromatic_complete(m, n);
            for lambda in 1..=5i64 {
                assert_eq!(
                    poly.eval(&int(lambda)),
                    pow(&int(lambda), n),
                    "m = {m}, n = {n}, lambda = {lambda}"
                );
            }
        }
    }
}

#[test]
fn m_one_degenerates_to_proper_chromatic_polynomial() {
    for n in 1..=9usize {
        let poly = degree_chromatic_complete(1, n);
        for k in 0..n {
            assert!(poly.coeff(k).is_zero());
        }
        assert_eq!(poly.coeff(n), int(1));
        // (lambda)_n at small integers
        for lambda in -3..=5i64 {
            let mut falling = int(1);
            for j in 0..n as i64 {
                falling *= int(lambda - j);
            }
            assert_eq!(poly.eval(&int(lambda)), falling, "n = {n}, lambda = {lambda}");
        }
    }
}

#[test]
fn coefficients_vanish_exactly_when_blocks_cannot_cover() {
    for m in 1..=4usize {
        for n in 1..=12usize {
            let poly = degree_chromatic_complete(m, n);
            assert!(poly.coeff(0).is_zero());
            for k in 1..=n {
                if k * m < n {
                    assert!(poly.coeff(k).is_zero(), "m = {m}, n = {n}, k = {k}");
                } else {
                    assert!(poly.coeff(k) > int(0), "m = {m}, n = {n}, k = {k}");
                }
            }
        }
    }
}

#[test]
fn coefficients_count_bounded_partitions() {
    for m in 1..=3usize {
        for n in 1..=9usize {
            let poly = degree_chromatic_complete(m, n);
            let counts = set_partition_block_counts(n, Some(m));
            for (k, &expected) in counts.iter().enumerate() {
                assert_eq!(poly.coeff(k), int(expected as i64), "m = {m}, n = {n}, k = {k}");
            }
        }
    }
}
