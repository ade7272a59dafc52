pub mod findim;
pub mod glued;
pub mod path;
pub mod quiver;

pub use findim::{AlgebraInvariants, FinDimAlgebra, MatrixAlgebra};
pub use glued::GluedAlgebra;
pub use path::{Path, PathAlgebra, SearchParams};
pub use quiver::{Arrow, Quiver};
