//! Type-A Springer dictionary and the Hilbert series built on it.
//!
//! The irreducible `S_n`-representation `lambda` corresponds to the nilpotent
//! orbit of Jordan type `lambda`: the trivial representation `(n)` to the
//! regular orbit, the sign representation `(1^n)` to the zero orbit. The
//! closure order on orbits is dominance on Jordan types. All local systems in
//! type A are trivial.

use log::warn;
use num_bigint::BigInt;

use crate::error::Result;
use crate::kostka::kostka_foulkes;
use crate::partition::{check_same_size, partitions_of, Partition};
use crate::poly::Series;
use crate::{BiLaurentPoly, LaurentPoly, TruncatedSeries};

/// Nilpotent orbit in `sl_n` labelled by its Jordan type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    jordan_type: Partition,
}

impl OrbitLabel {
    pub fn new(jordan_type: Partition) -> Self {
        OrbitLabel { jordan_type }
    }

    pub fn n(&self) -> u32 {
        self.jordan_type.size()
    }

    pub fn jordan_type(&self) -> &Partition {
        &self.jordan_type
    }

    /// `n^2 - sum_i (lambda^t_i)^2`.
    pub fn dim(&self) -> u64 {
        let n = self.n() as u64;
        let cols: u64 = self
            .jordan_type
            .conjugate()
            .parts()
            .iter()
            .map(|&c| (c as u64).pow(2))
            .sum();
        n * n - cols
    }

    /// `2 (n(n-1)/2 - n(lambda))`, the same number computed from the partition
    /// statistic.
    pub fn dim_from_n_stat(&self) -> u64 {
        let n = self.n() as u64;
        n * n.saturating_sub(1) - 2 * self.jordan_type.n_stat()
    }

    /// Dimension of the flag variety of `sl_n`.
    pub fn flag_dim(&self) -> u64 {
        let n = self.n() as u64;
        n * n.saturating_sub(1) / 2
    }
}

/// Dimension of the nilpotent orbit with Jordan type `lambda`.
pub fn orbit_dim(lambda: &Partition) -> u64 {
    OrbitLabel::new(lambda.clone()).dim()
}

/// A bigraded Hilbert series: `x` tracks homological degree, `y` the weight.
#[derive(Clone, Debug, PartialEq)]
pub struct BigradedSeries {
    pub poly: BiLaurentPoly,
    pub x_grading: &'static str,
    pub y_grading: &'static str,
}

impl BigradedSeries {
    fn new(poly: BiLaurentPoly) -> Self {
        BigradedSeries {
            poly,
            x_grading: "homological degree",
            y_grading: "weight",
        }
    }

    /// Total dimension, the value at `x = y = 1`.
    pub fn total_dim(&self) -> BigInt {
        self.poly.eval_at_one()
    }
}

/// `K_{g,chi}(t) = K_{lambda,(1^n)}(t)` for `g = sl_n`.
pub fn kostka_g(lambda: &Partition) -> LaurentPoly {
    kostka_foulkes(lambda, &Partition::column(lambda.size())).expect("sizes agree")
}

fn k_at_x_squared(k: &LaurentPoly) -> LaurentPoly {
    k.substitute_power(2).expect("nonzero").with_var("x")
}

fn k_at_y_inverse_squared(k: &LaurentPoly) -> LaurentPoly {
    k.substitute_power(-2).expect("nonzero").with_var("y")
}

/// `P_N(x, y) = sum_{lambda |- n} K_lambda(x^2) K_lambda(y^{-2})`.
pub fn pn_series(n: u32) -> BigradedSeries {
    let poly = partitions_of(n)
        .iter()
        .map(|lambda| {
            let k = kostka_g(lambda);
            BiLaurentPoly::outer(&k_at_x_squared(&k), &k_at_y_inverse_squared(&k))
        })
        .sum();
    BigradedSeries::new(poly)
}

/// `P_phi(y) = y^{dim O_phi} K_phi(y^{-2})`, the Hilbert series of zeroth
/// Poisson homology of the centrally reduced W-algebra at `phi`.
pub fn hp0_slice_series(phi: &Partition) -> LaurentPoly {
    k_at_y_inverse_squared(&kostka_g(phi)).shift(orbit_dim(phi) as i64)
}

/// `P_phi(y) prod_{i} (1 - y^{2 d_i})^{-1}` up to `y^truncate`, with `d_i` the
/// degrees `2..=n` of `S_n`. Also the associated graded Hilbert series of
/// `HH_0` of the quantum W-algebra.
pub fn hp0_walg_full_series(phi: &Partition, truncate: usize) -> TruncatedSeries {
    let n = phi.size();
    let doubled: Vec<u32> = (2..=n).map(|d| 2 * d).collect();
    let head = Series::from_laurent(&hp0_slice_series(phi), truncate)
        .expect("P_phi has nonnegative exponents");
    &head * &Series::invert_product(&doubled, truncate)
}

/// Intersection cohomology Poincare polynomial of the closure of the orbit
/// `lambda`: `x^{dim O} K_lambda(x^{-2})`.
pub fn ih_orbit_closure(lambda: &Partition) -> LaurentPoly {
    kostka_g(lambda)
        .substitute_power(-2)
        .expect("nonzero")
        .shift(orbit_dim(lambda) as i64)
        .with_var("x")
}

/// IH Poincare polynomial of the S3 variety `closure(O_nu) ∩ S_phi`:
/// `x^{dim O_nu - dim O_phi} K_{nu,phi}(x^{-2})`.
///
/// When `nu` does not dominate `phi` the variety is empty; the result is zero
/// and a warning is logged.
pub fn ih_s3_variety(nu: &Partition, phi: &Partition) -> Result<LaurentPoly> {
    check_same_size(nu, phi)?;
    if !nu.dominates(phi)? {
        warn!("{nu} does not dominate {phi}: the S3 variety is empty");
        return Ok(LaurentPoly::zero().with_var("x"));
    }
    let shift = orbit_dim(nu) as i64 - orbit_dim(phi) as i64;
    Ok(kostka_foulkes(nu, phi)?
        .substitute_power(-2)?
        .shift(shift)
        .with_var("x"))
}

/// `sum_{nu >= phi} K_{nu,phi}(x^2) K_nu(y^{-2})`, the common body of both
/// slice formulas.
fn slice_sum(phi: &Partition) -> BiLaurentPoly {
    partitions_of(phi.size())
        .iter()
        .filter(|nu| nu.dominates(phi).expect("same size"))
        .map(|nu| {
            let k = kostka_foulkes(nu, phi).expect("same size");
            BiLaurentPoly::outer(&k_at_x_squared(&k), &k_at_y_inverse_squared(&kostka_g(nu)))
        })
        .sum()
}

/// `P_{S_phi ∩ N}(x, y) = y^{dim O_phi} sum_{nu >= phi} K_{nu,phi}(x^2) K_nu(y^{-2})`:
/// the bigraded series of the cohomology of the Springer fiber over `phi`.
pub fn springer_fiber_series(phi: &Partition) -> BigradedSeries {
    BigradedSeries::new(slice_sum(phi).shift(0, orbit_dim(phi) as i64))
}

/// The same sum with prefactor `y^{2 n(mu)}` in place of `y^{dim O_mu}`.
pub fn slice_series_type_a_printed(mu: &Partition) -> BigradedSeries {
    BigradedSeries::new(slice_sum(mu).shift(0, 2 * mu.n_stat() as i64))
}

/// Comparison of the two slice normalizations for one `mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedAudit {
    pub mu: Partition,
    pub printed: BigradedSeries,
    pub normative: BigradedSeries,
    /// `k` with `printed = y^k * normative`, if the ratio is a pure power of `y`.
    pub ratio_exponent: Option<i64>,
    pub two_n_stat: u64,
    pub orbit_dim: u64,
}

impl PrintedAudit {
    /// Predicted exponent `2 n(mu) - dim O_mu`.
    pub fn expected_exponent(&self) -> i64 {
        self.two_n_stat as i64 - self.orbit_dim as i64
    }
}

pub fn printed_audit(mu: &Partition) -> PrintedAudit {
    let printed = slice_series_type_a_printed(mu);
    let normative = springer_fiber_series(mu);
    PrintedAudit {
        mu: mu.clone(),
        ratio_exponent: printed.poly.y_power_ratio(&normative.poly),
        printed,
        normative,
        two_n_stat: 2 * mu.n_stat(),
        orbit_dim: orbit_dim(mu),
    }
}

/// Both sides of the duality `HP_0(S_lambda ∩ N) = IH^*(closure(O_{lambda^t}))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProudfootReport {
    pub lambda: Partition,
    pub dual: Partition,
    pub hp0: LaurentPoly,
    pub ih: LaurentPoly,
    pub equal: bool,
}

pub fn proudfoot_check(lambda: &Partition) -> ProudfootReport {
    let dual = lambda.conjugate();
    let hp0 = hp0_slice_series(lambda);
    let ih = ih_orbit_closure(&dual);
    // Equality compares exponent maps; the variable names differ.
    let equal = hp0 == ih;
    ProudfootReport {
        lambda: lambda.clone(),
        dual,
        hp0,
        ih,
        equal,
    }
}
