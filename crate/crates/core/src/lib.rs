pub mod approx_roots;
pub mod bipoly;
pub mod branch;
pub mod checks;
pub mod codes;
pub mod error;
pub mod field;
pub mod parse;
pub mod poly;
pub mod resultant;
pub mod semigroup;
pub mod weierstrass;

pub use bipoly::BiPoly;
pub use error::{Error, ErrorClass, Result};
pub use field::{Elem, FieldElement, FiniteField};
pub use poly::UniPoly;
