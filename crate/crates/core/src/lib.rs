//! Exact enumeration of column-strict plane partitions and their relatives:
//! Pfaffians, structured matrices, brute-force enumeration, generating
//! functions, constant terms and closed-form reference numbers.

pub mod error;
pub mod constterm;
pub mod exactmath;
pub mod genfun;
pub mod pfaffian;
pub mod ppart;
pub mod refnum;
pub mod structmat;
pub mod verify;

pub use error::{Error, Result};
