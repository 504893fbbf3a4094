//! Property tests for the structural invariants that hold across the whole
//! input space rather than on named instances.

use proptest::prelude::*;

use modal_duality::alpha::{AlphaPoint, AlphaRelation, AlphaSet};
use modal_duality::beta::{BetaRelation, BetaSet};
use modal_duality::evset::EvPeriodicSet;
use modal_duality::poset::{witness_refutes, FinPoset};
use modal_duality::report::{Check, Report};

fn arb_evset() -> impl Strategy<Value = EvPeriodicSet> {
    (
        proptest::collection::vec(any::<bool>(), 0..8),
        proptest::collection::vec(any::<bool>(), 1..6),
    )
        .prop_map(|(prefix, cycle)| EvPeriodicSet::new(prefix, cycle))
}

fn arb_alpha_set() -> impl Strategy<Value = AlphaSet> {
    (arb_evset(), any::<bool>()).prop_map(|(fin, inf)| AlphaSet::new(fin, inf))
}

proptest! {
    #[test]
    fn canonical_form_is_semantic_equality(
        prefix in proptest::collection::vec(any::<bool>(), 0..8),
        cycle in proptest::collection::vec(any::<bool>(), 1..6),
        pad in 1..4u64,
        extra in 0..5u64,
    ) {
        // Re-describe the same set with an inflated period and threshold;
        // the canonical forms must be structurally equal.
        let s = EvPeriodicSet::new(prefix, cycle);
        let p = s.period() * pad;
        let t = s.threshold() + extra;
        let inflated = EvPeriodicSet::from_fn(t, p, |n| s.contains(n));
        prop_assert_eq!(&inflated, &s);
    }

    #[test]
    fn evset_boolean_laws_pointwise(a in arb_evset(), b in arb_evset(), n in 0..200u64) {
        prop_assert_eq!(a.union(&b).contains(n), a.contains(n) || b.contains(n));
        prop_assert_eq!(a.intersect(&b).contains(n), a.contains(n) && b.contains(n));
        prop_assert_eq!(a.difference(&b).contains(n), a.contains(n) && !b.contains(n));
        prop_assert_eq!(a.complement().contains(n), !a.contains(n));
        prop_assert_eq!(&a.complement().complement(), &a);
    }

    #[test]
    fn clopen_iff_both_sides_closed(a in arb_alpha_set()) {
        prop_assert_eq!(
            a.is_clopen(),
            a.is_closed() && a.complement().is_closed()
        );
        prop_assert_eq!(a.is_open(), a.complement().is_closed());
        // interior and closure are dual through complement
        prop_assert_eq!(a.interior(), a.complement().closure().complement());
    }

    #[test]
    fn alpha_set_syntax_round_trips(a in arb_alpha_set()) {
        let text = a.to_string();
        let back: AlphaSet = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn beta_normalization_is_stable(a in arb_evset()) {
        let plain = BetaSet::plain(a.clone());
        let renorm = BetaSet::new(plain.base().clone(), plain.form());
        prop_assert_eq!(&renorm, &plain);
        prop_assert_eq!(renorm.is_clopen(), plain.is_clopen());
        // closures are always clopen and closed
        let cl = BetaSet::closure(a);
        prop_assert!(cl.is_clopen() && cl.is_closed());
    }

    #[test]
    fn beta_preimages_are_monotone(a in arb_evset(), b in arb_evset()) {
        let small = BetaSet::closure(a.clone());
        let large = BetaSet::closure(a.union(&b));
        for rel in [
            BetaRelation::LeqStar,
            BetaRelation::ConverseLeqStar,
            BetaRelation::DiagMeetCandidate,
        ] {
            let pre_small = rel.preimage(&small).unwrap();
            let pre_large = rel.preimage(&large).unwrap();
            prop_assert!(pre_small.subset_of(&pre_large));
        }
    }

    #[test]
    fn analyzer_witnesses_refute_their_laws(
        edges in proptest::collection::vec((0..6usize, 0..6usize), 0..10)
    ) {
        let mut text = String::from("elements 6\n");
        for (i, j) in &edges {
            text.push_str(&format!("{i} <= {j}\n"));
        }
        // Random edge sets may create cycles; those are rejected upstream.
        let Ok(poset) = FinPoset::from_edge_list(&text) else { return Ok(()); };
        let Ok(verdict) = poset.analyze() else { return Ok(()); };
        for (flag, name) in [
            (&verdict.bounded, "bounded"),
            (&verdict.meet_semilattice, "meet"),
            (&verdict.join_semilattice, "join"),
            (&verdict.lattice, "lattice"),
            (&verdict.distributive_semilattice, "dist-sl"),
            (&verdict.distributive_lattice, "dist"),
            (&verdict.frame_law, "frame"),
            (&verdict.coframe_law, "coframe"),
            (&verdict.boolean, "boolean"),
            (&verdict.atomic, "atomic"),
            (&verdict.zero_dimensional, "zero-dim"),
            (&verdict.spatial, "spatial"),
        ] {
            if !flag.holds {
                let w = flag.witness.as_ref().expect("false flag without witness");
                prop_assert!(witness_refutes(&poset, w), "{name} witness does not refute");
            }
        }
        // Frame, coframe, and distributivity must agree on lattices.
        if verdict.lattice.holds {
            prop_assert_eq!(verdict.frame_law.holds, verdict.distributive_lattice.holds);
            prop_assert_eq!(verdict.coframe_law.holds, verdict.distributive_lattice.holds);
        }
    }

    #[test]
    fn report_round_trips(names in proptest::collection::vec("[a-z]{1,8}", 0..5)) {
        let checks: Vec<Check> = names
            .iter()
            .enumerate()
            .map(|(i, n)| Check::new(n.clone(), "law", vec![], format!("v{i}"), i % 2 == 0))
            .collect();
        let report = Report::new("property", checks);
        let json = serde_json::to_string(&report).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relation_union_intersection_membership(
        xs in proptest::collection::vec((0..40u64, 0..40u64), 0..6),
        ys in proptest::collection::vec((0..40u64, 0..40u64), 0..6),
        probe in proptest::collection::vec((0..60u64, 0..60u64), 8),
    ) {
        let r = AlphaRelation::finite_pairs(
            xs.iter().map(|&(x, y)| (AlphaPoint::Nat(x), AlphaPoint::Nat(y))),
        )
        .union(&AlphaRelation::injection_r());
        let s = AlphaRelation::finite_pairs(
            ys.iter().map(|&(x, y)| (AlphaPoint::Nat(x), AlphaPoint::Nat(y))),
        )
        .union(&AlphaRelation::injection_s());
        let meet = r.intersect(&s);
        let join = r.union(&s);
        for &(x, y) in &probe {
            let (px, py) = (AlphaPoint::Nat(x), AlphaPoint::Nat(y));
            prop_assert_eq!(meet.member(px, py), r.member(px, py) && s.member(px, py));
            prop_assert_eq!(join.member(px, py), r.member(px, py) || s.member(px, py));
        }
    }
}
