//! Exact arithmetic for `NCSym`, the bialgebra of symmetric functions in
//! noncommuting variables, together with the partition lattice algebras whose
//! Grothendieck rings it realizes.
//!
//! * [`partition`]: set partitions, the lattice operations and concatenation.
//! * [`lattice`]: intervals and the Möbius function of `Π_n`.
//! * [`ncsym`]: elements in the `m`, `p` and `x` bases, products, coproducts.
//! * [`lattice_algebra`]: the meet, join and diagonal algebras on `kΠ_n`,
//!   their idempotents, simple modules and Frobenius maps.
//! * [`realization`]: brute-force expansion over finite alphabets.

pub mod error;
pub mod lattice;
pub mod lattice_algebra;
pub mod ncsym;
pub mod partition;
pub mod realization;

pub use error::{Error, Result};
pub use lattice_algebra::{Algebra, AlgebraElement, ModuleSum, PairModuleSum, SimpleModule};
pub use ncsym::{Basis, Element, Tensor};
pub use partition::{SetPartition, Shape};
pub use realization::{NcPolynomial, NcWord, PairWord};
