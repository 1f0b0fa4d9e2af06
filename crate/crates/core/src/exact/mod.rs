//! Exact arithmetic carriers: integer polynomials, rational power series and
//! integer matrices with fraction-free determinants.

pub mod matrix;
pub mod poly;
pub mod series;

pub use matrix::{det_bareiss, det_i_minus_ta, IntMatrix};
pub use poly::IntPolynomial;
pub use series::RationalPowerSeries;
