//! Modified Macdonald polynomials and related families.

mod cache;
mod construct;
mod enk;
mod expand;
mod memo;
mod stats;

pub use cache::{validate, MacCache};
pub use construct::{alternate_order, default_order, h_from_p, macdonald_p_all, modified_h_axioms, modified_h_gram_schmidt};
pub use enk::{enk, enk_unchecked};
pub use expand::{apply_diagonal, clear_expansion_memo, mac_expand, mac_resum};
pub use memo::{install, max_degree, memoized_degrees, modified_h, modified_h_degree, set_max_degree, MacTable};
pub use stats::{cell_weights, one_minus_v_product, stats, PartitionStats};
