//! The comitant engine: C_i, D_j, the T-table, the named invariants and the
//! affine comitants G1..G3 with their gcd H.

mod omega;
mod system;
mod table;

pub use omega::{g_comitant, AffineComitants};
pub use system::{CubicSystem, LETTERS};
pub use table::{coefficient_degree, ComitantTable, GaugeEntry, NAMES};
