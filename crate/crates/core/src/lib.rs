//! Arithmetic degrees of graded and bigraded modules, associated graded rings,
//! and the tools to compute them exactly.

pub mod adeg;
pub mod checks;
pub mod combinatorics;
pub mod corpus;
pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod monomial;
pub mod numerical;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod run;
pub mod session;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{IdealHandle, ModulePresentation};
pub use monomial::{Monomial, TermOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{Ring, RingRef};
