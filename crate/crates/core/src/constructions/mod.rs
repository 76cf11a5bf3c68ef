//! Lattice constructions and their predicted effect on canonical join
//! complexes.

mod congruence;
mod doubling;
mod multichain;
mod product;

pub use congruence::{
    all_congruences, check_congruence, congruence_generated, congruence_from_pairs,
    contracted_join_irreducibles, element_in_pi_down_image, quotient, Congruence, Quotient,
};
pub use doubling::{
    check_doubling_consequences, double, double_interval, is_order_convex, order_convex_witness,
    predicted_doubled_cjg_edges, Doubling,
};
pub use multichain::{multichain_cjg_predicted, multichain_lattice, Multichain};
pub use product::{direct_product, ordinal_sum, wedge_right_map, wedge_sum};
