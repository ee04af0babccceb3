//! Colouring algorithms: the peeling meta-algorithm, greedy colourful and
//! t-UM colourings, their transformations into t-subset colourings, the
//! interval constructions and the rectangle pipeline.

mod greedy;
mod interval;
mod meta;
mod rect;
mod subset;

pub use greedy::{degeneracy_colouring, greedy_colourful, t_um_colouring, t_um_colouring_traced};
pub use interval::{interval_um, interval_union_pairs, ADJACENT, SPREAD};
pub use meta::{meta_colour, meta_colour_traced, peel, MetaStep};
pub use rect::{claim_colourcount_check, qcode, rect_subset_cf, BoxMultiplicity, ClaimViolation, QCode, RectSubsetColouring};
pub use subset::{subset_cf_from_t_strong, subset_cf_from_t_um, union_pairs_colouring};
