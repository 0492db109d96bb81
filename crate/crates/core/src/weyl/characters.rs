use std::collections::HashMap;

use num_bigint::BigInt;

use super::classes::ClassLabel;
use crate::error::Result;
use crate::partition::{check_same_size, partitions_of, Partition};

/// Irreducible character `chi^lambda` of `S_n` on the class of cycle type
/// `cycle_type`, by the Murnaghan-Nakayama rule.
///
/// Rim hooks are removed on the beta-set (abacus) of `lambda`: a `k`-hook is
/// a bead moving from `b` to an empty `b - k`, with sign `(-1)^height` where
/// the height is the number of beads strictly in between.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    check_same_size(lambda, cycle_type)?;
    let mut memo = HashMap::new();
    Ok(mn(lambda.parts(), cycle_type.parts(), &mut memo))
}

fn mn(lambda: &[u32], cycles: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beads: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beads.iter().enumerate() {
        if b < k || beads.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Character values of `chi^lambda` keyed by cycle-type class labels, ready
/// for the Molien class average.
pub fn type_a_characters(lambda: &Partition) -> HashMap<ClassLabel, BigInt> {
    let mut memo = HashMap::new();
    partitions_of(lambda.size())
        .into_iter()
        .map(|mu| {
            let v = mn(lambda.parts(), mu.parts(), &mut memo);
            (ClassLabel::CycleType(mu), BigInt::from(v))
        })
        .collect()
}
