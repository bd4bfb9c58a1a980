//! Exact computations with the quantum loop algebra `L_{0,1}(sl2)`, the graph
//! algebras `L_{0,n}(sl2)`, the RSD and Alekseev maps, and their specialisations
//! at odd roots of unity.

pub mod cartan;
pub mod error;
pub mod filtration;
pub mod graphn;
pub mod hopfdual;
pub mod linalg;
pub mod loop01;
pub mod ncalg;
pub mod report;
pub mod rootsofunity;
pub mod repmod;
pub mod scalars;

pub use error::{QmodError, Result};
pub use hopfdual::Sl2;
