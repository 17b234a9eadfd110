//! Linear algebra over `F_p` and `Z`.

mod fp;
mod snf;

pub use fp::{inv_mod, kernel, rank, rref, Fp};
pub use snf::{smith, Smith};
