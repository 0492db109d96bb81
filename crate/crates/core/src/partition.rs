//! Integer partitions, their statistics, and the dominance order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Labels both irreducible representations of `S_n` and Jordan types of
/// nilpotent `n x n` matrices. The empty partition is the unique partition
/// of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid(&parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(&parts, "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n)`, the trivial representation / regular orbit.
    pub fn row(n: u32) -> Self {
        Partition {
            parts: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// `(1^n)`, the sign representation / zero orbit.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-indexed), or zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        check_same_size(self, other)?;
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sum_i (i - 1) * mu_i` with 1-indexed parts.
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Hook length of every cell, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.part(j) - 1 - i as u32;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Number of standard Young tableaux, `n! / prod hooks`.
    pub fn num_standard_tableaux(&self) -> BigInt {
        let fact: BigInt = (1..=self.size()).map(BigInt::from).product();
        let hooks: BigInt = self.hooks().into_iter().map(BigInt::from).product();
        fact / hooks
    }

    /// Order of the centralizer of a permutation with this cycle type,
    /// `prod_k k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&p| p == k).count();
            for j in 1..=m {
                z *= BigInt::from(k) * BigInt::from(j);
            }
            i += m;
        }
        z
    }
}

fn invalid(parts: &[u32], reason: &'static str) -> Error {
    Error::InvalidPartition {
        parts: parts.iter().map(|&p| p as i64).collect(),
        reason,
    }
}

pub(crate) fn check_same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size() as usize,
            right: b.size() as usize,
        });
    }
    Ok(())
}

/// All partitions of `n` in reverse lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing parts, e.g. `3,1,1`. The empty string
    /// (or `()`) is the empty partition. Unsorted input is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let v: i64 = tok.trim().parse().map_err(|_| Error::InvalidPartition {
                parts: vec![],
                reason: "parts must be integers",
            })?;
            if v <= 0 || v > u32::MAX as i64 {
                return Err(Error::InvalidPartition {
                    parts: vec![v],
                    reason: "parts must be positive",
                });
            }
            parts.push(v as u32);
        }
        Partition::new(parts)
    }
}
