//! Exact computation of Kostka-Foulkes polynomials, fake degrees of Weyl
//! groups, and the Hilbert series they control: the bigraded Poisson-de Rham
//! series of the nilpotent cone and of Slodowy slices, zeroth Poisson
//! homology of W-algebras, and intersection cohomology of nilpotent orbit
//! closures.
//!
//! Arithmetic is exact throughout. Polynomial types are generic over the
//! coefficient ring (see [`scalar`]); the aliases below fix the
//! arbitrary-precision integer instantiation used by every formula.

pub mod error;
pub mod kostka;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod springer;
pub mod tableau;
pub mod weyl;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use kostka::{charge, fake_degree_qhook, kostka_foulkes, kostka_from_fake_degree, KostkaTable};
pub use partition::{partitions_of, Partition};
pub use springer::{
    hp0_slice_series, hp0_walg_full_series, ih_orbit_closure, ih_s3_variety, kostka_g, orbit_dim,
    pn_series, printed_audit, proudfoot_check, slice_series_type_a_printed, springer_fiber_series,
    BigradedSeries, OrbitLabel, PrintedAudit, ProudfootReport,
};
pub use tableau::{ssyt_enumerate, syt_major_index_genfun, Tableau};
pub use weyl::{Family, WeylType};

/// One-variable Laurent polynomial over the integers.
pub type LaurentPoly = poly::Laurent<BigInt>;
/// Two-variable Laurent polynomial over the integers.
pub type BiLaurentPoly = poly::BiLaurent<BigInt>;
/// Truncated integer power series.
pub type TruncatedSeries = poly::Series<BigInt>;
/// Weyl group element acting on the root lattice.
pub type ReflectionMatrix = weyl::Matrix<i64>;
