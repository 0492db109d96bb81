//! Exact Laurent polynomials in one and two variables, and truncated power
//! series.
//!
//! Shift convention for Hilbert series: a graded space shifted by `[-d]` has
//! its series multiplied by `var^d`. Every formula in the crate uses
//! [`Laurent::shift`] / [`BiLaurent::shift`] in this sense.

mod bivariate;
mod laurent;
mod series;

pub use bivariate::BiLaurent;
pub use laurent::Laurent;
pub use series::Series;
