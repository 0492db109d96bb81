use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::classes::{conjugacy_data, ClassDatum, ClassLabel};
use super::WeylType;
use crate::error::{Error, Result};
use crate::{BiLaurentPoly, LaurentPoly};

/// Graded character of the coinvariant algebra at a class:
/// `prod_i (1 - q^{d_i}) / det(1 - q w)`.
///
/// The quotient is always a polynomial of degree `N` with constant term 1; a
/// failed division means the class data is wrong.
pub fn molien_graded_character(w: &WeylType, c: &ClassDatum) -> Result<LaurentPoly> {
    let invariants: LaurentPoly = w
        .degrees
        .iter()
        .map(|&d| LaurentPoly::one_minus(BigInt::one(), d as i64))
        .product();
    Ok(invariants.div_exact(&c.char_factor)?.with_var("q"))
}

/// Class data of a Weyl group together with the graded character at each
/// class, computed once and reused.
#[derive(Clone, Debug)]
pub struct MolienData {
    pub weyl: WeylType,
    pub classes: Vec<ClassDatum>,
    pub graded: Vec<LaurentPoly>,
}

impl MolienData {
    pub fn new(w: &WeylType, budget: usize) -> Result<Self> {
        let classes = conjugacy_data(w, budget)?;
        let graded = classes
            .iter()
            .map(|c| molien_graded_character(w, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(MolienData {
            weyl: w.clone(),
            classes,
            graded,
        })
    }

    /// Graded multiplicity of the character `chi` in the coinvariant algebra,
    /// `(1/|W|) sum_classes size * chi(class) * f_class(q)`.
    pub fn fake_degree(&self, chi: &HashMap<ClassLabel, BigInt>) -> Result<LaurentPoly> {
        let mut sum = LaurentPoly::zero();
        for (c, f) in self.classes.iter().zip(&self.graded) {
            let v = chi
                .get(&c.label)
                .ok_or_else(|| Error::MissingCharacter(c.label.to_string()))?;
            if v.is_zero() {
                continue;
            }
            sum = &sum + &f.scale(&(&c.size * v));
        }
        sum.div_scalar_exact(&BigInt::from(self.weyl.order))
            .map(|p| p.with_var("q"))
            .map_err(|_| Error::NonIntegralAverage)
    }

    /// `P_N(x, y) = x^{2N} y^{-2N} (1/|W|) sum_classes size * f(x^{-2}) f(y^2)`.
    ///
    /// By column orthogonality of the (real) character table this is
    /// `sum_chi K_chi(x^2) K_chi(y^{-2})` without needing any characters.
    pub fn pn_series(&self) -> Result<BiLaurentPoly> {
        let mut sum = BiLaurentPoly::zero();
        for (c, f) in self.classes.iter().zip(&self.graded) {
            let fx = f.substitute_power(-2)?;
            let fy = f.substitute_power(2)?;
            sum = &sum + &BiLaurentPoly::outer(&fx.scale(&c.size), &fy);
        }
        let n = self.weyl.num_positive_roots as i64;
        sum.div_scalar_exact(&BigInt::from(self.weyl.order))
            .map(|p| p.shift(2 * n, -2 * n))
            .map_err(|_| Error::NonIntegralAverage)
    }
}

/// Fake degree of `chi` via the Molien class average.
pub fn fake_degree_molien(
    w: &WeylType,
    character_values: &HashMap<ClassLabel, BigInt>,
    budget: usize,
) -> Result<LaurentPoly> {
    MolienData::new(w, budget)?.fake_degree(character_values)
}

/// Character-free `P_N(x, y)` for any supported type.
pub fn pn_series_molien(w: &WeylType, budget: usize) -> Result<BiLaurentPoly> {
    MolienData::new(w, budget)?.pn_series()
}
