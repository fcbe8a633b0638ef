//! Exact computation in the `Z_fin`-graded ring `C`, its graded modules,
//! its Grothendieck and Picard groups, and the graded Weyl algebra `A`
//! together with the dictionary relating graded modules on both sides.
//!
//! All arithmetic is over the rationals with arbitrary-precision integers;
//! there is no floating point anywhere in the crate.

pub mod error;
pub mod foundation;

pub mod cideal;
pub mod cmod;
pub mod cring;
pub mod k0;
pub mod pic;
pub mod text;
pub mod weyl;

pub use error::{Error, ParseError, Result};
pub use foundation::*;
