//! Session files, directive execution and the built-in example corpus.

pub mod corpus;
pub mod exec;
pub mod record;
pub mod session;
pub mod suites;

pub use exec::{run_directive, run_session};
pub use record::{exit_status, Check, Record};
pub use session::{parse_session, ParseError, Session};
