pub mod coeffs;
pub mod error;
pub mod families;
pub mod interface;
pub mod ncpoly;
pub mod rewrite;
pub mod verify;

pub use coeffs::{Coefficient, GaussRational};
pub use error::{Error, ErrorCategory, Result};
pub use families::{Presentation, Relation};
pub use ncpoly::{Alphabet, GenId, Generator, NCPoly, Word};
pub use rewrite::{RewriteSystem, TermOrder};
