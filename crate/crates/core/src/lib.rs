pub mod error;
pub mod annulus;
pub mod cli;
pub mod cycles;
pub mod farey;
pub mod geometry;
pub mod polygon;
pub mod laurent;
pub mod pfaffian;
pub mod qcore;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use qcore::Mat2;
