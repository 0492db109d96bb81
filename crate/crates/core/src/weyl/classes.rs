use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::matrix::Matrix;
use super::{Family, WeylType};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::LaurentPoly;

/// Identifies a class (or union of classes) in the Molien sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Cycle type of a permutation (type A).
    CycleType(Partition),
    /// Signed cycle type of a signed permutation (types B, C, D).
    SignedCycleType {
        positive: Partition,
        negative: Partition,
    },
    /// Elements grouped by `det(1 - t w)` (enumerated types).
    CharFactor(String),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::CycleType(p) => write!(f, "{p}"),
            ClassLabel::SignedCycleType { positive, negative } => {
                write!(f, "{positive}|{negative}")
            }
            ClassLabel::CharFactor(s) => write!(f, "det[{s}]"),
        }
    }
}

/// One term of the Molien sum: a set of group elements of known size on which
/// `det(1 - t w)` on the reflection representation is constant.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassDatum {
    pub label: ClassLabel,
    pub size: BigInt,
    pub char_factor: LaurentPoly,
}

/// Class data for the Molien sum.
///
/// Types A, B, C and D use closed forms over (signed) cycle types. For D the
/// labels are B-classes with an even number of negative cycles; B-classes that
/// split in D are kept whole, which is harmless because only sums over
/// elements are taken. G2, F4 and E6 are enumerated (subject to `budget`) and
/// grouped by characteristic factor.
pub fn conjugacy_data(w: &WeylType, budget: usize) -> Result<Vec<ClassDatum>> {
    match w.family {
        Family::A => Ok(type_a_classes(w.rank + 1)),
        Family::B | Family::C => Ok(signed_classes(w.rank, false)),
        Family::D => Ok(signed_classes(w.rank, true)),
        Family::G2 | Family::F4 | Family::E6 => class_data_by_enumeration(w, budget),
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn type_a_classes(n: usize) -> Vec<ClassDatum> {
    let fact = factorial(n as u32);
    let one_minus_t = LaurentPoly::one_minus(BigInt::one(), 1);
    partitions_of(n as u32)
        .into_iter()
        .map(|mu| {
            // Permutation representation divided by its trivial summand.
            let perm: LaurentPoly = mu
                .parts()
                .iter()
                .map(|&c| LaurentPoly::one_minus(BigInt::one(), c as i64))
                .product();
            let char_factor = perm
                .div_exact(&one_minus_t)
                .expect("1 - t divides")
                .with_var("t");
            ClassDatum {
                size: &fact / mu.centralizer_order(),
                label: ClassLabel::CycleType(mu),
                char_factor,
            }
        })
        .collect()
}

fn signed_classes(n: usize, even_only: bool) -> Vec<ClassDatum> {
    let order = factorial(n as u32) * (BigInt::one() << n);
    let mut out = Vec::new();
    for k in 0..=n as u32 {
        for pos in partitions_of(k) {
            for neg in partitions_of(n as u32 - k) {
                if even_only && neg.len() % 2 == 1 {
                    continue;
                }
                let centralizer = pos.centralizer_order()
                    * neg.centralizer_order()
                    * (BigInt::one() << (pos.len() + neg.len()));
                let char_factor: LaurentPoly = pos
                    .parts()
                    .iter()
                    .map(|&c| LaurentPoly::one_minus(BigInt::one(), c as i64))
                    .chain(
                        neg.parts()
                            .iter()
                            .map(|&c| LaurentPoly::one_minus(-BigInt::one(), c as i64)),
                    )
                    .product::<LaurentPoly>()
                    .with_var("t");
                out.push(ClassDatum {
                    label: ClassLabel::SignedCycleType {
                        positive: pos.clone(),
                        negative: neg,
                    },
                    size: &order / centralizer,
                    char_factor,
                });
            }
        }
    }
    out
}

/// Simple reflections acting on the root lattice in the basis of simple roots.
pub fn simple_reflections(w: &WeylType) -> Vec<Matrix<i64>> {
    let a = w.cartan_matrix();
    let r = w.rank;
    (0..r)
        .map(|i| {
            let mut rows: Vec<Vec<i64>> = (0..r)
                .map(|k| (0..r).map(|j| i64::from(k == j)).collect())
                .collect();
            // s_i(alpha_j) = alpha_j - a_ij alpha_i
            for j in 0..r {
                rows[i][j] -= a[i][j];
            }
            Matrix::from_rows(rows)
        })
        .collect()
}

/// Every element of `W` as an integer matrix, by breadth-first search from the
/// identity over the simple reflections.
pub fn enumerate_elements(w: &WeylType, budget: usize) -> Result<Vec<Matrix<i64>>> {
    let gens = simple_reflections(w);
    let id = Matrix::identity(w.rank);
    let mut seen: HashSet<Matrix<i64>> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = s * &g;
            if seen.insert(h.clone()) {
                if seen.len() > budget {
                    return Err(Error::EnumerationBudget { budget });
                }
                order.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(order)
}

/// Enumerate `W` and group elements by `det(1 - t w)`.
pub fn class_data_by_enumeration(w: &WeylType, budget: usize) -> Result<Vec<ClassDatum>> {
    let mut groups: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for g in enumerate_elements(w, budget)? {
        let f = g.char_factor();
        let key: Vec<i64> = (0..=w.rank as i64).map(|e| f.coeff(e)).collect();
        *groups.entry(key).or_default() += 1;
    }
    Ok(groups
        .into_iter()
        .map(|(key, size)| {
            let char_factor =
                LaurentPoly::from_coeffs(0, key.into_iter().map(BigInt::from).collect())
                    .with_var("t");
            ClassDatum {
                label: ClassLabel::CharFactor(char_factor.to_string()),
                size,
                char_factor,
            }
        })
        .collect())
}

/// Counts obtained by enumerating the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationCheck {
    pub order: u64,
    /// Elements fixing a hyperplane pointwise; equals the number of positive roots.
    pub reflections: u64,
}

impl EnumerationCheck {
    pub fn matches(&self, w: &WeylType) -> bool {
        self.order == w.order
            && self.order == w.degrees.iter().map(|&d| d as u64).product::<u64>()
            && self.reflections == w.num_positive_roots
            && self.reflections == w.degrees.iter().map(|&d| d as u64 - 1).sum::<u64>()
    }
}

/// Count elements and reflections of `W` by enumeration.
pub fn verify_by_enumeration(w: &WeylType, budget: usize) -> Result<EnumerationCheck> {
    let one = BigInt::one();
    let reflection = (&LaurentPoly::one_minus(one.clone(), 1).pow(w.rank as u32 - 1)
        * &LaurentPoly::one_minus(-one, 1))
        .with_var("t");
    let mut order = 0;
    let mut reflections = 0;
    for g in enumerate_elements(w, budget)? {
        order += 1;
        let f = g.char_factor();
        let f = LaurentPoly::from_terms(f.terms().map(|(e, c)| (e, BigInt::from(*c))));
        if f == reflection {
            reflections += 1;
        }
    }
    Ok(EnumerationCheck { order, reflections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::weyl_type;
    use num_traits::Zero;

    fn t(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn total(classes: &[ClassDatum]) -> BigInt {
        classes.iter().fold(BigInt::zero(), |a, c| a + &c.size)
    }

    #[test]
    fn s2_and_s3_classes() {
        let s2 = conjugacy_data(&weyl_type(Family::A, 1).unwrap(), 0).unwrap();
        assert_eq!(s2.len(), 2);
        assert_eq!(s2[0].char_factor, t(&[1, 1]));
        assert_eq!(s2[1].char_factor, t(&[1, -1]));
        assert!(s2.iter().all(|c| c.size == BigInt::one()));

        let s3 = conjugacy_data(&weyl_type(Family::A, 2).unwrap(), 0).unwrap();
        let got: Vec<(BigInt, LaurentPoly)> = s3
            .iter()
            .map(|c| (c.size.clone(), c.char_factor.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (BigInt::from(2), t(&[1, 1, 1])),
                (BigInt::from(3), t(&[1, 0, -1])),
                (BigInt::from(1), t(&[1, -2, 1])),
            ]
        );
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for (f, r) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::D, 5),
            (Family::G2, 2),
            (Family::F4, 4),
        ] {
            let w = weyl_type(f, r).unwrap();
            let classes = conjugacy_data(&w, super::super::DEFAULT_ENUMERATION_BUDGET).unwrap();
            assert_eq!(total(&classes), BigInt::from(w.order), "{w}");
            for c in &classes {
                assert_eq!(c.char_factor.coeff(0), BigInt::one());
                assert_eq!(c.char_factor.max_exp(), Some(r as i64), "{w} {}", c.label);
            }
        }
    }

    /// Closed-form class data agrees with enumeration once both are grouped by
    /// characteristic factor.
    #[test]
    fn closed_forms_match_enumeration() {
        let group = |classes: Vec<ClassDatum>| {
            let mut m: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
            for c in classes {
                let key = c
                    .char_factor
                    .terms()
                    .map(|(e, v)| e * 1000 + i64::try_from(v).unwrap())
                    .collect();
                *m.entry(key).or_default() += c.size;
            }
            m
        };
        for (f, r) in [
            (Family::A, 1),
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 2),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let w = weyl_type(f, r).unwrap();
            let closed = group(conjugacy_data(&w, 0).unwrap());
            let enumerated = group(class_data_by_enumeration(&w, 10_000).unwrap());
            assert_eq!(closed, enumerated, "{w}");
        }
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let f4 = weyl_type(Family::F4, 4).unwrap();
        assert_eq!(
            enumerate_elements(&f4, 1000),
            Err(Error::EnumerationBudget { budget: 1000 })
        );
        let g2 = weyl_type(Family::G2, 2).unwrap();
        assert_eq!(enumerate_elements(&g2, 12).unwrap().len(), 12);
    }

    #[test]
    fn enumeration_counts_small_types() {
        for (f, r) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::G2, 2),
            (Family::D, 4),
        ] {
            let w = weyl_type(f, r).unwrap();
            let check = verify_by_enumeration(&w, 10_000).unwrap();
            assert!(check.matches(&w), "{w}: {check:?}");
        }
    }
}
