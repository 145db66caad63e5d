//! Contact and crossing of multisegments.

use crate::involution::mwa_left;
use crate::multisegment::Multisegment;
use crate::segment::{bounds, is_juxtaposed};
use crate::speh::SpehParams;

/// Some segment of `a` and some segment of `b` are juxtaposed.
pub fn is_contact(a: &Multisegment, b: &Multisegment) -> bool {
    a.iter().any(|s| b.iter().any(|t| is_juxtaposed(s, t)))
}

/// `a` contacts `b^t` and `a^t` contacts `b`.
pub fn is_crossed(a: &Multisegment, b: &Multisegment) -> bool {
    is_contact(a, &mwa_left(b)) && is_contact(&mwa_left(a), b)
}

fn meets(s: bounds::Bounds, t: bounds::Bounds) -> bool {
    bounds::intersection(s, t).is_some()
}

/// Closed-form contact test for two staircases:
/// `[A1,C1] ∩ [B2+1,D2+1] ≠ ∅` or `[B1+1,D1+1] ∩ [A2,C2] ≠ ∅`.
pub fn contact_speh(p1: &SpehParams, p2: &SpehParams) -> bool {
    if p1.line() != p2.line() {
        return false;
    }
    meets((p1.a(), p1.c()), (p2.b() + 1, p2.d() + 1))
        || meets((p1.b() + 1, p1.d() + 1), (p2.a(), p2.c()))
}

/// The second half of [`contact_speh`] alone: `[B1+1,D1+1] ∩ [A2,C2] ≠ ∅`.
/// When the support of `p1` precedes that of `p2` this alone decides
/// contact.
pub fn dashed_intervals_meet(p1: &SpehParams, p2: &SpehParams) -> bool {
    meets((p1.b() + 1, p1.d() + 1), (p2.a(), p2.c()))
}
