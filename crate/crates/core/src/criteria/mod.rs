//! Reducibility and irreducibility tests.

mod certificates;
mod contact;
mod mw;
mod speh;
mod verdict;

pub use certificates::{badulescu_check, certificate_route, is_t_additive, rc_check};
pub use contact::{contact_speh, dashed_intervals_meet, is_contact, is_crossed};
pub use mw::{
    joint_normalize, mw_linked, mw_to_speh, mw_verdict, same_lattice, MwParams, MwQuadruple,
};
pub use speh::{
    product_irreducible, speh_reducible_by_crossing, speh_reducible_by_dominance, strong_less,
    supports_linked, supports_union_is_segment,
};
pub use verdict::{Clause, Criterion, Evidence, Status, Verdict, Witness};
