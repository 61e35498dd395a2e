//! Local invariants of isolated hypersurface singularities and holomorphic
//! 1-forms, computed with exact rational arithmetic.

pub mod config;
pub mod error;
pub mod foliation;
pub mod form;
pub mod invariants;
pub mod local;
pub mod p2;
pub mod poly;

pub use config::Config;
pub use error::{Error, ErrorKind, Result};
pub use form::OneForm;
pub use poly::{Coeff, MPoly, Monomial, Ring};
pub use local::{Colength, LocalIdeal};
