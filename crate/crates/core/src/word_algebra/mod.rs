//! Words over an alphabet and the products on `k<A>`.

mod alphabet;
mod ncpoly;
mod tensor;
mod word;

pub use alphabet::{Alphabet, Product};
pub use ncpoly::{LinComb, NcPoly};
pub use tensor::Tensor;
pub use word::{Letter, Word};

pub(crate) use ncpoly::write_terms;
