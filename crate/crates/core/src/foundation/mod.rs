//! Scalars, polynomials, `Z_fin` combinatorics and isometries of `Z`.

pub mod finset;
pub mod isometry;
pub mod poly;

pub use finset::{cocycle_sign, interval, FinSet};
pub use isometry::Isometry;
pub use poly::{h_poly, rat, rat_frac, Poly, Rational};
