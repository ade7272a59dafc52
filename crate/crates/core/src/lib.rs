pub mod algebra;
pub mod cli;
pub mod error;
pub mod glue;
pub mod golden;
pub mod io;
pub mod linalg;
pub mod rep;
pub mod tilt;

pub use error::{Error, Result};
