pub mod bounds;
pub mod cli;
pub mod consistency;
pub mod error;
pub mod hilbert;
pub mod lattice;
pub mod limits;
pub mod macaulay;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
pub use limits::Limits;
