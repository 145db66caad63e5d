//! Multisegment combinatorics for products of Speh representations.
//!
//! The crate computes the Zelevinsky involution on multisegments with both
//! Moeglin-Waldspurger algorithms, enumerates the linking order, and decides
//! reducibility of products of Speh multisegments by several independent
//! criteria that can be cross-checked against each other.
//!
//! ```
//! use multiseg::{mwa_left, parse_multisegment, speh_reducible_by_dominance, SpehParams};
//!
//! let a = parse_multisegment("[0,2]+[1,3]").unwrap();
//! assert_eq!(mwa_left(&a).to_string(), "[0,1]+[1,2]+[2,3]");
//!
//! let v = speh_reducible_by_dominance(&SpehParams::rho(0, 1, 2, 3), &SpehParams::rho(1, 2, 3, 4));
//! assert!(v.is_reducible());
//! ```

pub mod criteria;
pub mod error;
pub mod involution;
pub mod lnt;
pub mod multisegment;
pub mod order;
pub mod segment;
pub mod speh;
pub mod text;
pub mod verify;

pub use criteria::{
    badulescu_check, contact_speh, is_contact, is_crossed, mw_linked, product_irreducible,
    rc_check, speh_reducible_by_crossing, speh_reducible_by_dominance, strong_less, MwParams,
    Status, Verdict,
};
pub use error::{Error, Result};
pub use involution::{
    dual, mwa_left, mwa_left_step, mwa_right, mwa_right_step, Algorithm, StepTrace,
};
pub use lnt::{i_set, i_set_speh, ladder_multisegment, lnt_reducible, Ladder, Partition, RaySet};
pub use multisegment::{a_nd, Multisegment};
pub use order::{elementary_linkings, leq, lt, strict_downset, DEFAULT_BUDGET};
pub use segment::{is_linked, precedes, Line, Segment};
pub use speh::{speh_multisegment, SpehParams};
pub use text::{format_multisegment, parse_multisegment};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/segments.md")]
    mod segments {}
    #[doc = include_str!("../../../book/src/involution.md")]
    mod involution {}
    #[doc = include_str!("../../../book/src/order.md")]
    mod order {}
    #[doc = include_str!("../../../book/src/criteria.md")]
    mod criteria {}
    #[doc = include_str!("../../../book/src/ladders.md")]
    mod ladders {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
