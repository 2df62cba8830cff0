//! Exact crossing-matrix invariants of braids and Hurwitz-equivalence
//! invariants of braid systems.

pub mod bigjson;
pub mod braid;
pub mod compare;
pub mod crossing;
pub mod error;
pub mod garside;
pub mod invariants;
pub mod linalg;
pub mod monodromy;
pub mod moves;
pub mod orbit;
pub mod perm;
pub mod poly;
pub mod regression;
pub mod script;
pub mod system;

pub use braid::BraidWord;
pub use crossing::{crossing_matrix, permutation_equivalent, pure_power_matrix, CrossingMatrix};
pub use error::{BraidError, Result};
pub use garside::{braids_equal, is_identity, normal_form, NormalForm};
pub use moves::{hurwitz_act, hurwitz_move, Direction, GroupElement, HurwitzMove};
pub use linalg::{charpoly, determinant, rank, SquareMatrix};
pub use perm::Permutation;
pub use poly::{integer_roots, reduce_poly, IntPolynomial, ReducedPolynomial};
