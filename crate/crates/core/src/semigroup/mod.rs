//! Cayley tables and the arithmetic of monogenic subsemigroups.

mod construct;
mod monogenic;
mod table;

pub use construct::{
    adjoin_identity, complete_partial_table, cyclic_group, direct_product, elementary_abelian_2,
    left_zero, monogenic, right_zero, zero_semigroup, Generator,
};
pub use monogenic::{
    all_monogenic_data, exponent, gen_intersection, idempotents, is_band, is_monogenic,
    maximal_monogenic, monogenic_data, pi_set, s_f, MonogenicData, SubsemigroupSet,
};
pub use table::{validate, CayleyTable, Element};
