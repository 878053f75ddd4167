pub mod algebra;
pub mod cli;
pub mod connector;
pub mod diagram;
pub mod error;
pub mod kauffman;
pub mod ring;

pub use algebra::{AlgebraElement, Engine};
pub use connector::{BrauerElem, Connector};
pub use diagram::{Slice, SliceKind, SliceWord};
pub use error::{Error, Result};
pub use ring::{DeltaPoly, LaurentLZ, RingElem, SPoly};
