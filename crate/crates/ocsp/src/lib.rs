//! Ordering CSPs: a constraint asks that its variables appear in one of a
//! set of relative orders. Orders are linked to `Z_q`-valued CSPs by
//! coarsening (cut the order into `q` blocks) and refining (sort by block).

pub mod coarsen;
pub mod error;
pub mod expansion;
pub mod format;
pub mod instance;
pub mod perm;

pub use coarsen::{
    coarsen_assignment, coarsen_blocks, coarsen_instance, coarsen_predicate, gen_ocsp_hard, iota, refine_assignment,
    refine_instance, OcspGenerated,
};
pub use error::{OcspError, Result};
pub use expansion::{bpe_epsilon, count_twice_touching, is_bpe, is_sse, sse_epsilon};
pub use format::{OrderingDocument, PlantedOrder};
pub use instance::{next_permutation, OrderingInstance, ORDER_CAP};
pub use perm::{induced, is_permutation, ord, OrderingPredicate};
