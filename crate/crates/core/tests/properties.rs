use proptest::prelude::*;

use multiseg::criteria::{
    badulescu_check, is_crossed, rc_check, speh_reducible_by_crossing, speh_reducible_by_dominance,
    Status,
};
use multiseg::lnt::{lnt_condition, lnt_condition_pattern, Ladder, Partition};
use multiseg::order::{elementary_linkings, leq, lt, strict_downset};
use multiseg::segment::{is_juxtaposed, is_linked, precedes};
use multiseg::text::{from_json_str, to_json_string};
use multiseg::{
    format_multisegment, mwa_left, mwa_right, parse_multisegment, Line, Multisegment, Segment,
    SpehParams,
};

const BUDGET: usize = 200_000;

fn line() -> impl Strategy<Value = Line> {
    prop_oneof![Just("rho"), Just("mu"), Just("rho~"), Just("nu2")]
        .prop_map(|l| Line::new(l).unwrap())
}

fn bounds(lo: i64, hi: i64) -> impl Strategy<Value = (i64, i64)> {
    (lo..=hi, 0..=(hi - lo)).prop_map(move |(b, len)| (b, (b + len).min(hi)))
}

fn segment() -> impl Strategy<Value = Segment> {
    (line(), bounds(-6, 6)).prop_map(|(l, (b, e))| Segment::new(l, b, e).unwrap())
}

fn rho_segment(lo: i64, hi: i64) -> impl Strategy<Value = Segment> {
    bounds(lo, hi).prop_map(|(b, e)| Segment::rho(b, e))
}

fn multisegment(max: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(), 0..=max).prop_map(Multisegment::from_segments)
}

fn rho_multisegment(max: usize, lo: i64, hi: i64) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(rho_segment(lo, hi), 0..=max).prop_map(Multisegment::from_segments)
}

fn speh() -> impl Strategy<Value = SpehParams> {
    (0i64..=5, 0i64..=4, 0i64..=4).prop_map(|(a, w, h)| SpehParams::rho(a, a + w, a + h, a + w + h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_ignores_order(mut v in prop::collection::vec(segment(), 0..8), seed in any::<u64>()) {
        let a = Multisegment::from_segments(v.clone());
        let n = v.len().max(1);
        v.rotate_left((seed as usize) % n);
        v.reverse();
        prop_assert_eq!(&Multisegment::from_segments(v), &a);
        prop_assert!(a.segments().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn predicates_are_shift_invariant(s in segment(), t in segment(), k in -10i64..10) {
        let (s2, t2) = (s.shifted(k), t.shifted(k));
        prop_assert_eq!(is_linked(&s, &t), is_linked(&s2, &t2));
        prop_assert_eq!(precedes(&s, &t), precedes(&s2, &t2));
        prop_assert_eq!(is_juxtaposed(&s, &t), is_juxtaposed(&s2, &t2));
    }

    #[test]
    fn support_shape_is_shift_invariant(a in multisegment(6), k in -10i64..10) {
        let b = a.shifted(k);
        let shape = |m: &Multisegment| -> Vec<(Line, Vec<(i64, i64)>)> {
            m.underlying_support().into_iter().map(|(l, v)| {
                let lo = v.first().map_or(0, |s| s.0);
                (l, v.into_iter().map(|(x, y)| (x - lo, y - lo)).collect())
            }).collect()
        };
        prop_assert_eq!(shape(&a), shape(&b));
        prop_assert_eq!(a.shift_normalized(), b.shift_normalized());
    }

    #[test]
    fn linking_is_symmetric_and_precedence_antisymmetric(s in segment(), t in segment()) {
        prop_assert_eq!(is_linked(&s, &t), is_linked(&t, &s));
        prop_assert!(!(precedes(&s, &t) && precedes(&t, &s)));
        prop_assert_eq!(is_linked(&s, &t), precedes(&s, &t) || precedes(&t, &s));
    }

    #[test]
    fn contragredient_is_an_involution(a in multisegment(6)) {
        prop_assert_eq!(a.contragredient().contragredient(), a.clone());
        prop_assert_eq!(a.contragredient().degree(), a.degree());
    }

    #[test]
    fn contragredient_preserves_linking(s in segment(), t in segment()) {
        prop_assert_eq!(is_linked(&s, &t), is_linked(&s.contragredient(), &t.contragredient()));
        prop_assert_eq!(precedes(&s, &t), precedes(&t.contragredient(), &s.contragredient()));
    }

    #[test]
    fn text_round_trip(a in multisegment(6)) {
        let text = format_multisegment(&a);
        prop_assert_eq!(parse_multisegment(&text).unwrap(), a.clone());
        prop_assert_eq!(from_json_str(&to_json_string(&a)).unwrap(), a);
    }

    #[test]
    fn involution_properties(a in multisegment(7)) {
        let t = mwa_left(&a);
        prop_assert_eq!(mwa_left(&t), a.clone());
        prop_assert_eq!(mwa_right(&a), t.clone());
        prop_assert_eq!(mwa_left(&a.contragredient()), t.contragredient());
        prop_assert_eq!(t.support(), a.support());
    }

    #[test]
    fn involution_commutes_with_shift(a in multisegment(6), k in -5i64..5) {
        prop_assert_eq!(mwa_left(&a.shifted(k)), mwa_left(&a).shifted(k));
    }

    #[test]
    fn linkings_preserve_support_and_lengthen(b in rho_multisegment(5, 0, 5)) {
        let longest = |m: &Multisegment| m.iter().map(Segment::len).max().unwrap_or(0);
        for c in elementary_linkings(&b) {
            prop_assert_eq!(c.support(), b.support());
            prop_assert!(longest(&c) >= longest(&b));
            prop_assert!(lt(&c, &b, BUDGET).unwrap());
        }
    }

    #[test]
    fn order_is_a_partial_order(
        a in rho_multisegment(4, 0, 4),
        b in rho_multisegment(4, 0, 4),
    ) {
        prop_assert!(leq(&a, &a, BUDGET).unwrap());
        if leq(&a, &b, BUDGET).unwrap() && leq(&b, &a, BUDGET).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        // transitivity along the downset of a
        for c in strict_downset(&a, BUDGET).unwrap() {
            prop_assert!(!leq(&a, &c, BUDGET).unwrap());
            for d in strict_downset(&c, BUDGET).unwrap() {
                prop_assert!(lt(&d, &a, BUDGET).unwrap());
            }
        }
    }

    #[test]
    fn verdicts_are_symmetric(p in speh(), q in speh()) {
        prop_assert_eq!(speh_reducible_by_dominance(&p, &q).status, speh_reducible_by_dominance(&q, &p).status);
        prop_assert_eq!(speh_reducible_by_crossing(&p, &q).status, speh_reducible_by_crossing(&q, &p).status);
        let (a, b) = (p.multisegment(), q.multisegment());
        prop_assert_eq!(rc_check(&a, &b).status, rc_check(&b, &a).status);
        prop_assert_eq!(is_crossed(&a, &b), is_crossed(&b, &a));
    }

    #[test]
    fn verdicts_survive_contragredient_and_shift(p in speh(), q in speh(), k in -4i64..4) {
        let dom = speh_reducible_by_dominance(&p, &q).status;
        prop_assert_eq!(speh_reducible_by_dominance(&p.contragredient(), &q.contragredient()).status, dom);
        prop_assert_eq!(speh_reducible_by_dominance(&p.shifted(k), &q.shifted(k)).status, dom);
        prop_assert_eq!(speh_reducible_by_crossing(&p.contragredient(), &q.contragredient()).status, dom);
    }

    #[test]
    fn certificates_never_contradict(p in speh(), q in speh()) {
        let dom = speh_reducible_by_dominance(&p, &q).status;
        let v = badulescu_check(&p.multisegment(), &q.multisegment(), BUDGET);
        prop_assert!(v.status == Status::Unknown || v.status == dom, "{} vs {:?}", v, dom);
    }

    #[test]
    fn ladder_forms_agree(
        a in prop::collection::vec(1u32..5, 1..4),
        b in prop::collection::vec(1u32..5, 1..4),
        x in -3i64..4,
        y in -3i64..4,
    ) {
        let sorted = |mut v: Vec<u32>| { v.sort_by(|p, q| q.cmp(p)); Partition::new(v).unwrap() };
        let (l1, l2) = (Ladder::new(sorted(a), x), Ladder::new(sorted(b), y));
        prop_assert_eq!(lnt_condition(&l1, &l2), lnt_condition_pattern(&l1, &l2));
        prop_assert_eq!(lnt_condition(&l1, &l2), lnt_condition(&l2, &l1));
    }
}
