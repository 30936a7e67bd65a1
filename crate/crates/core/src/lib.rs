//! Group shifts over finite groups: one-sided shift spaces that are subgroups of `Γ^ℕ`,
//! their sliding block homomorphisms, σ-topology, and composition-type decompositions.

pub mod blocks;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod finite_group;
pub mod group_shift;
pub mod morphisms;
pub mod sigma_topology;
pub mod two_sided;

pub use blocks::{BlockGroup, Word};
pub use error::{Error, Result};
pub use finite_group::{FiniteGroup, GroupHom, Subgroup};
pub use group_shift::GroupShift;
pub use morphisms::SlidingBlockCode;
