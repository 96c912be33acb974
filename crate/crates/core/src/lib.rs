//! Hesitant fuzzy soft sets and soft mappings between hesitant fuzzy soft
//! classes.

pub mod cli;
pub mod error;
pub mod hfe;
pub mod hfss;
pub mod laws;
pub mod mapping;
pub mod scenario;

pub use error::{Error, Result};
pub use hfe::{Degree, Hfe, UnionMode, EPS};
pub use hfss::{Hfss, SoftClass};
pub use mapping::{compose, composite_image, PointMap, SoftMapping};
