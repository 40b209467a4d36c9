pub mod error;
pub mod frac;
pub mod genfun;
pub mod legendre;
pub mod numerics;
pub mod quad;
pub mod registry;

pub use error::{Error, Result};
pub use numerics::{ComplexValue, EvalResult};
