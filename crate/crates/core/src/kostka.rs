//! Kostka-Foulkes polynomials via the charge statistic, and fake degrees of
//! symmetric-group representations via the q-hook formula.
//!
//! Charge convention: on a standard word the index of `1` is zero and the
//! index of `r + 1` is one more than that of `r` when `r + 1` lies to the
//! right of `r`, otherwise equal. With reading words taken bottom row first
//! this gives `K_{(n),(1^n)}(t) = t^{n(n-1)/2}` and `K_{(1^n),(1^n)}(t) = 1`:
//! the trivial representation sits in the top power and the sign
//! representation in degree zero.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{check_same_size, partitions_of, Partition};
use crate::tableau::ssyt_enumerate;
use crate::LaurentPoly;

pub const CONVENTION_TAG: &str = "charge/right-increment/bottom-up-reading/cyclic-rtl-extraction";
pub const FORMAT_VERSION: u32 = 1;

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
///
/// Non-standard words are split into standard subwords: scan cyclically
/// right to left from the right end, pick the first `1`, continue from there
/// (still cyclically, right to left) to the first `2`, and so on up to the
/// largest letter still present. Remove the selected letters and repeat. The
/// charge is the sum of the charges of the subwords, each computed with the
/// letters' positions in the original word.
pub fn charge(word: &[u32]) -> Result<u64> {
    let content = word_content(word)?;
    let mut remaining: Vec<usize> = (0..word.len()).collect();
    let mut counts = content;
    let mut total = 0u64;
    while !remaining.is_empty() {
        let top = counts.iter().take_while(|&&c| c > 0).count() as u32;
        let mut picked = Vec::with_capacity(top as usize);
        let len = remaining.len();
        let mut cur = (0..len)
            .rev()
            .find(|&i| word[remaining[i]] == 1)
            .expect("content is a partition, so 1 is present");
        picked.push(cur);
        for letter in 2..=top {
            cur = (1..=len)
                .map(|step| (cur + len - step) % len)
                .find(|&i| word[remaining[i]] == letter)
                .expect("every letter up to the top is present");
            picked.push(cur);
        }
        total += standard_charge(picked.iter().map(|&i| remaining[i]));
        for c in counts.iter_mut().take(top as usize) {
            *c -= 1;
        }
        picked.sort_unstable();
        for i in picked.into_iter().rev() {
            remaining.remove(i);
        }
    }
    Ok(total)
}

/// Charge of a standard subword given the positions of `1, 2, ..., m`.
fn standard_charge<I: Iterator<Item = usize>>(positions: I) -> u64 {
    let mut index = 0u64;
    let mut total = 0u64;
    let mut prev: Option<usize> = None;
    for pos in positions {
        if let Some(p) = prev {
            if pos > p {
                index += 1;
            }
            total += index;
        }
        prev = Some(pos);
    }
    total
}

/// Letter multiplicities, checked to form a partition.
fn word_content(word: &[u32]) -> Result<Vec<u32>> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; max as usize];
    for &v in word {
        if v == 0 {
            return Err(Error::NonPartitionContent { letter: 0, prev: 0 });
        }
        counts[v as usize - 1] += 1;
    }
    for (i, w) in counts.windows(2).enumerate() {
        if w[1] > w[0] {
            return Err(Error::NonPartitionContent {
                letter: i as u32 + 2,
                prev: i as u32 + 1,
            });
        }
    }
    Ok(counts)
}

/// `K_{lambda,mu}(t) = sum_T t^{charge(T)}` over semistandard tableaux of
/// shape `lambda` and content `mu`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    check_same_size(lambda, mu)?;
    if !lambda.dominates(mu)? {
        return Ok(LaurentPoly::zero().with_var("t"));
    }
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    for t in ssyt_enumerate(lambda, mu)? {
        let c = charge(&t.reading_word())?;
        *terms.entry(c as i64).or_default() += 1;
    }
    Ok(LaurentPoly::from_terms(terms).with_var("t"))
}

/// Fake degree of the `S_n` irreducible `lambda`:
/// `q^{n(lambda)} prod_{k<=n} (1 - q^k) / prod_{cells} (1 - q^{hook})`.
pub fn fake_degree_qhook(lambda: &Partition) -> LaurentPoly {
    let one = BigInt::one();
    let num: LaurentPoly = (1..=lambda.size() as i64)
        .map(|k| LaurentPoly::one_minus(one.clone(), k))
        .product();
    let den: LaurentPoly = lambda
        .hooks()
        .into_iter()
        .map(|h| LaurentPoly::one_minus(one.clone(), h as i64))
        .product();
    num.div_exact(&den)
        .expect("q-hook quotient is always a polynomial")
        .shift(lambda.n_stat() as i64)
}

/// `t^N * FD_lambda(t^{-1})` with `N = n(n-1)/2`: the fake degree re-indexed by
/// codegree in the cohomology of the flag variety.
pub fn kostka_from_fake_degree(lambda: &Partition) -> LaurentPoly {
    let n = lambda.size() as i64;
    fake_degree_qhook(lambda)
        .reverse()
        .shift(n * (n - 1) / 2)
        .with_var("t")
}

/// All Kostka-Foulkes polynomials for partitions of `n`.
///
/// Only pairs with `lambda` dominating `mu` are stored; every other entry is
/// zero.
#[derive(Clone, Debug, PartialEq)]
pub struct KostkaTable {
    pub n: u32,
    pub entries: BTreeMap<(Partition, Partition), LaurentPoly>,
    pub convention_tag: String,
    pub format_version: u32,
}

impl KostkaTable {
    pub fn compute(n: u32) -> Self {
        let parts = partitions_of(n);
        let mut entries = BTreeMap::new();
        for lambda in &parts {
            for mu in &parts {
                if lambda.dominates(mu).expect("same size") {
                    let k = kostka_foulkes(lambda, mu).expect("same size");
                    entries.insert((lambda.clone(), mu.clone()), k);
                }
            }
        }
        KostkaTable {
            n,
            entries,
            convention_tag: CONVENTION_TAG.to_string(),
            format_version: FORMAT_VERSION,
        }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        self.entries
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero().with_var("t"))
    }

    /// Check the structural invariants; used before trusting a loaded table.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.convention_tag != CONVENTION_TAG {
            return Err(format!("convention tag {:?}", self.convention_tag));
        }
        if self.format_version != FORMAT_VERSION {
            return Err(format!("format version {}", self.format_version));
        }
        let parts = partitions_of(self.n);
        let mut expected = 0;
        for lambda in &parts {
            for mu in &parts {
                if lambda.dominates(mu).map_err(|e| e.to_string())? {
                    expected += 1;
                    if !self.entries.contains_key(&(lambda.clone(), mu.clone())) {
                        return Err(format!("missing entry {lambda} {mu}"));
                    }
                }
            }
        }
        if self.entries.len() != expected {
            return Err("entries outside the dominance order".into());
        }
        for ((lambda, mu), k) in &self.entries {
            if !k.has_nonnegative_coeffs() || k.is_zero() {
                return Err(format!("bad entry {lambda} {mu}"));
            }
            if lambda == mu && !k.is_one() {
                return Err(format!("diagonal entry {lambda} is not 1"));
            }
        }
        Ok(())
    }
}
