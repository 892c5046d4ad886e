//! Affine type `A^{(1)}_{e-1}` and `𝔰𝔩_∞` crystals on partitions and
//! multipartitions.
//!
//! A charged partition is read as a set of beads ([`Symbol`]). Level one uses the
//! Misra–Miwa rule on addable and removable nodes, higher levels use the Uglov
//! realization ([`Uglov`]) or the tensor product of level-one crystals
//! ([`kleshchev`]). The orbit of the empty multipartition is described by
//! [`cores`].

pub mod cores;
pub mod kleshchev;
pub mod partition;
pub mod symbol;
pub mod uglov;

pub use cores::{is_es_core, CoreLattice};
pub use kleshchev::{fundamental_rmatrix, higher_level_key_right, Kleshchev};
pub use partition::{Multipartition, Partition};
pub use symbol::{LevelOne, Modulus, Symbol};
pub use uglov::{MultiSymbol, Uglov};
