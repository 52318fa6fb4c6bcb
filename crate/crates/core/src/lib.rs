//! Exact linear algebra over prime fields for minimal span forms,
//! characteristic matrices and tail-biting trellises.

pub mod charmat;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod matrix;
pub mod report;
pub mod spanform;
pub mod text;
pub mod trellis;

pub use error::{Error, Result};
pub use field::{Field, Fp, Scalar};
pub use matrix::{Mat, PivotProfile};
pub use report::Report;

pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type Gf7 = Fp<7>;
pub type Mat2 = Mat<Gf2>;
pub type Mat3 = Mat<Gf3>;
pub type Mat5 = Mat<Gf5>;
