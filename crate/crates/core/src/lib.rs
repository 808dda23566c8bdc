//! Word problems in free Burnside quotients `F_r / F_rⁿ` through elementary
//! moves.
//!
//! * [`word`]: reduced words and free-group arithmetic.
//! * [`repetition`]: maximal repetitions and power factorizations `p·uᵐ·s`.
//! * [`moves`] and [`search`]: elementary moves, witnesses, the verifier and
//!   budgeted searches for trivializing or identifying sequences.
//! * [`tree`]: exact metric geometry of the Cayley tree and the geometric form
//!   of the move condition.
//! * [`automorphism`]: endomorphisms, orbits, limit words, Thue–Morse.
//! * [`cone`]: the cone comparison function `μ` and its properties.
//! * [`record`]: text records of move sequences.

pub mod automorphism;
pub mod cone;
mod error;
pub mod moves;
pub mod record;
pub mod repetition;
pub mod search;
pub mod tree;
pub mod word;

pub use automorphism::{thue_morse, verify_inverse, Endomorphism};
pub use cone::{check_mu_properties, cone_distance, mu, ConeParams, PropertyReport};
pub use error::{Error, Result};
pub use moves::{
    apply_move, enumerate_moves, parse_xi, verify_sequence, BurnsideParams, ElementaryMove,
    MoveSequence, Step, VerificationReport, Witness,
};
pub use record::{SequenceRecord, StepRecord};
pub use repetition::{find_power_factorizations, find_runs, is_power_free, PowerFactorization, Run};
pub use search::{search_identification, search_trivialization, Exhausted, SearchBudget, SearchOutcome};
pub use tree::{
    axis, axis_axis_overlap, combinatorial_move_bases, distance, geodesic_axis_overlap, geometric_move_bases, geometric_move_condition,
    gromov_product, stable_length, translation_length, Axis, GromovProduct, Overlap, TreePoint,
};
pub use word::{CyclicDecomposition, FreeWord, Letter, Sign};
