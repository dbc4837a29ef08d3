mod common;

use common::{random_ratio, rational, set_partition_block_counts};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treecount::bell::{bell, bell_definition_sum, ArgSeq};
use treecount::scalar::pow;
use treecount::ExactRatio;

fn random_args<R: Rng>(rng: &mut R, len: usize) -> ArgSeq<ExactRatio> {
    ArgSeq::new((0..len).map(|_| random_ratio(rng, true)).collect()).unwrap()
}

#[test]
fn recurrence_agrees_with_definition_sum_on_random_args() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e11);
    for _ in 0..100 {
        let n = rng.gen_range(0usize..=10);
        let k = rng.gen_range(0usize..=n.max(1));
        let args = random_args(&mut rng, n.max(1));
        assert_eq!(
            bell(n, k, &args),
            bell_definition_sum(n, k, &args).unwrap(),
            "n = {n}, k = {k}, args = {:?}",
            args.values()
        );
    }
}

#[test]
fn all_ones_gives_stirling_numbers() {
    for n in 0..=10 {
        let counts = set_partition_block_counts(n, None);
        let args = ArgSeq::<ExactRatio>::ones(n.max(1));
        for (k, &expected) in counts.iter().enumerate() {
            assert_eq!(
                bell(n, k, &args),
                rational(expected as i64),
                "S({n},{k})"
            );
        }
    }
}

#[test]
fn bounded_ones_counts_bounded_partitions() {
    for m in 1..=4usize {
        for n in 0..=10usize {
            let counts = set_partition_block_counts(n, Some(m));
            let args = ArgSeq::<ExactRatio>::ones(m);
            for (k, &expected) in counts.iter().enumerate() {
                assert_eq!(
                    bell(n, k, &args),
                    rational(expected as i64),
                    "m = {m}, n = {n}, k = {k}"
                );
            }
        }
    }
}

#[test]
fn first_column_and_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1a6);
    for _ in 0..20 {
        let n = rng.gen_range(1usize..=12);
        let args = random_args(&mut rng, n);
        assert_eq!(bell(n, 1, &args), args.get(n));
        assert_eq!(bell(n, n, &args), pow(&args.get(1), n));
    }
}

#[test]
fn homogeneity_in_the_arguments() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    for _ in 0..40 {
        let n = rng.gen_range(0usize..=8);
        let k = rng.gen_range(0usize..=n.max(1));
        let args = random_args(&mut rng, n.max(1));
        let c = random_ratio(&mut rng, false);
        let scaled = ArgSeq::new(
            args.values().iter().map(|x| x * &c).collect(),
        )
        .unwrap();
        assert_eq!(
            bell(n, k, &scaled),
            pow(&c, k) * bell(n, k, &args),
            "n = {n}, k = {k}, c = {c}"
        );
    }
}
