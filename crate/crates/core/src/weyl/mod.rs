//! Weyl groups of types A-D, G2, F4 and E6: degrees, conjugacy-class Molien
//! data, graded characters of the coinvariant algebra, and symmetric-group
//! characters.

mod characters;
mod classes;
mod matrix;
mod molien;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use characters::{mn_character, type_a_characters};
pub use classes::{
    class_data_by_enumeration, conjugacy_data, enumerate_elements, simple_reflections,
    verify_by_enumeration, ClassDatum, ClassLabel, EnumerationCheck,
};
pub use matrix::Matrix;
pub use molien::{fake_degree_molien, molien_graded_character, pn_series_molien, MolienData};

/// Largest group enumerated unless the caller raises the budget. Admits F4
/// (1152 elements) but not E6 (51840).
pub const DEFAULT_ENUMERATION_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "G" | "G2" => Family::G2,
            "F" | "F4" => Family::F4,
            "E" | "E6" => Family::E6,
            other => {
                return Err(Error::UnsupportedWeylType {
                    family: other.to_string(),
                    rank: 0,
                })
            }
        })
    }
}

/// A Weyl group together with its classical invariants.
///
/// `degrees` are the degrees `d_i` of the fundamental invariants of `W` acting
/// on the Cartan subalgebra; formulas that need the doubled grading use
/// `2 d_i` explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylType {
    pub family: Family,
    pub rank: usize,
    pub degrees: Vec<u32>,
    pub order: u64,
    pub num_positive_roots: u64,
}

impl WeylType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedWeylType {
            family: family.to_string(),
            rank,
        };
        let r = rank as u32;
        let fact = |k: u32| (1..=k as u64).product::<u64>();
        let (degrees, order, positive): (Vec<u32>, u64, u64) = match family {
            Family::A if rank <= 12 => (
                (2..=r + 1).collect(),
                fact(r + 1),
                (r as u64) * (r as u64 + 1) / 2,
            ),
            Family::B | Family::C if (2..=12).contains(&rank) => (
                (1..=r).map(|i| 2 * i).collect(),
                (1u64 << r) * fact(r),
                (r as u64).pow(2),
            ),
            Family::D if (4..=12).contains(&rank) => {
                let mut d: Vec<u32> = (1..r).map(|i| 2 * i).collect();
                d.push(r);
                (d, (1u64 << (r - 1)) * fact(r), (r as u64) * (r as u64 - 1))
            }
            Family::G2 if rank == 2 => (vec![2, 6], 12, 6),
            Family::F4 if rank == 4 => (vec![2, 6, 8, 12], 1152, 24),
            Family::E6 if rank == 6 => (vec![2, 5, 6, 8, 9, 12], 51840, 36),
            _ => return Err(unsupported()),
        };
        let w = WeylType {
            family,
            rank,
            degrees,
            order,
            num_positive_roots: positive,
        };
        assert_eq!(
            w.degrees.iter().map(|&d| d as u64).product::<u64>(),
            w.order
        );
        assert_eq!(
            w.degrees.iter().map(|&d| d as u64 - 1).sum::<u64>(),
            w.num_positive_roots
        );
        Ok(w)
    }

    /// `S_n`, i.e. type `A_{n-1}`.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(Family::A, n.saturating_sub(1))
    }

    /// Cartan matrix `a_ij = <alpha_i^vee, alpha_j>`, Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (1..r).for_each(|i| link(i - 1, i, -1, -1)),
            Family::B | Family::C => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                let (x, y) = if self.family == Family::B {
                    (-2, -1)
                } else {
                    (-1, -2)
                };
                link(r - 2, r - 1, x, y);
            }
            Family::D => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 3, r - 1, -1, -1);
            }
            Family::G2 => link(0, 1, -1, -3),
            Family::F4 => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::E6 => {
                link(0, 2, -1, -1);
                link(2, 3, -1, -1);
                link(3, 4, -1, -1);
                link(4, 5, -1, -1);
                link(1, 3, -1, -1);
            }
        }
        a
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::G2 | Family::F4 | Family::E6 => write!(f, "{}", self.family),
            _ => write!(f, "{}{}", self.family, self.rank),
        }
    }
}

/// Construct a supported Weyl type.
pub fn weyl_type(family: Family, rank: usize) -> Result<WeylType> {
    WeylType::new(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let a2 = weyl_type(Family::A, 2).unwrap();
        assert_eq!(
            (a2.degrees.clone(), a2.order, a2.num_positive_roots),
            (vec![2, 3], 6, 3)
        );
        let g2 = weyl_type(Family::G2, 2).unwrap();
        assert_eq!(
            (g2.degrees.clone(), g2.order, g2.num_positive_roots),
            (vec![2, 6], 12, 6)
        );
        let a1 = weyl_type(Family::A, 1).unwrap();
        assert_eq!(
            (a1.degrees.clone(), a1.order, a1.num_positive_roots),
            (vec![2], 2, 1)
        );
        let d4 = weyl_type(Family::D, 4).unwrap();
        assert_eq!(d4.degrees, vec![2, 4, 6, 4]);
    }

    #[test]
    fn unsupported_types() {
        assert!(weyl_type(Family::G2, 3).is_err());
        assert!(weyl_type(Family::D, 3).is_err());
        assert!(weyl_type(Family::A, 13).is_err());
        assert_eq!(WeylType::symmetric(1).unwrap().order, 1);
        assert!("E8".parse::<Family>().is_err());
        assert_eq!("f4".parse::<Family>().unwrap(), Family::F4);
    }

    #[test]
    fn cartan_matrices_are_symmetrizable_with_expected_bonds() {
        for (f, r) in [
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 5),
            (Family::G2, 2),
            (Family::F4, 4),
            (Family::E6, 6),
        ] {
            let a = weyl_type(f, r).unwrap().cartan_matrix();
            for (i, row) in a.iter().enumerate() {
                for (j, &aij) in row.iter().enumerate() {
                    assert_eq!(aij == 0, a[j][i] == 0);
                    if i != j {
                        assert!(aij * a[j][i] <= 3);
                    }
                }
            }
        }
    }
}
