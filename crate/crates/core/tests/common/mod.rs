//! Brute-force helpers shared by the integration tests. Everything here
//! enumerates structures directly and stays independent of the library's
//! production formulas.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use treecount::{ExactInt, ExactRatio};

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rational(v: i64) -> ExactRatio {
    ExactRatio::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> ExactRatio {
    ExactRatio::new(BigInt::from(n), BigInt::from(d))
}

/// A rational with numerator in [-9, 9] and denominator in [1, 9].
pub fn random_ratio<R: Rng>(rng: &mut R, allow_zero: bool) -> ExactRatio {
    loop {
        let numer = rng.gen_range(-9i64..=9);
        if !allow_zero && numer == 0 {
            continue;
        }
        let denom = rng.gen_range(1i64..=9);
        return ratio(numer, denom);
    }
}

/// Number of set partitions of [n] into exactly k blocks, indexed by k,
/// enumerated via restricted growth strings. `max_block` caps block sizes.
pub fn set_partition_block_counts(n: usize, max_block: Option<usize>) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut sizes: Vec<usize> = Vec::new();
    grow(1, n, &mut sizes, max_block, &mut counts);
    counts
}

fn grow(
    placed: usize,
    n: usize,
    sizes: &mut Vec<usize>,
    max_block: Option<usize>,
    counts: &mut [u64],
) {
    if placed > n {
        counts[sizes.len()] += 1;
        return;
    }
    for b in 0..=sizes.len() {
        if b == sizes.len() {
            sizes.push(1);
            grow(placed + 1, n, sizes, max_block, counts);
            sizes.pop();
        } else {
            if max_block.is_some_and(|cap| sizes[b] == cap) {
                continue;
            }
            sizes[b] += 1;
            grow(placed + 1, n, sizes, max_block, counts);
            sizes[b] -= 1;
        }
    }
}

/// Pairs of a set partition of [n] and a set partition of its block set,
/// counted by direct enumeration.
pub fn two_level_partition_count(n: usize) -> u64 {
    let outer = set_partition_block_counts(n, None);
    let mut total = 0u64;
    for (k, &ways) in outer.iter().enumerate() {
        if ways == 0 {
            continue;
        }
        let inner: u64 = set_partition_block_counts(k, None).iter().sum();
        total += ways * inner;
    }
    total
}
