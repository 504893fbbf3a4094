//! Differential validation of the continuity decision: an independent
//! brute-force falsifier enumerates clopen test sets and row windows and
//! must agree with the verdict on randomly generated guarded relations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use modal_duality::alpha::{
    is_continuous, is_interior, AffineTail, AlphaPoint, AlphaRelation, AlphaSet,
    ContinuityVerdict, Piece,
};
use modal_duality::evset::{lcm, EvPeriodicSet};

fn rand_clopen(rng: &mut ChaCha8Rng) -> AlphaSet {
    let count = rng.gen_range(0..5usize);
    let fin = EvPeriodicSet::from_elements((0..count).map(|_| rng.gen_range(0..10u64)));
    let finite = AlphaSet::naturals(fin);
    if rng.gen() {
        finite
    } else {
        finite.complement()
    }
}

fn rand_guarded(rng: &mut ChaCha8Rng) -> AlphaRelation {
    let mut pieces = Vec::new();
    for _ in 0..rng.gen_range(1..=3usize) {
        pieces.push(match rng.gen_range(0..4u8) {
            0 => Piece::Tail(
                AffineTail::new(
                    rng.gen_range(1..=3),
                    rng.gen_range(0..=4),
                    rng.gen_range(1..=3),
                    rng.gen_range(0..=4),
                    rng.gen_range(0..=2),
                )
                .unwrap(),
            ),
            1 => Piece::Diagonal(rand_clopen(rng)),
            2 => Piece::Product(rand_clopen(rng), rand_clopen(rng)),
            _ => {
                let mut pairs = std::collections::BTreeSet::new();
                for _ in 0..rng.gen_range(0..3usize) {
                    pairs.insert((
                        AlphaPoint::Nat(rng.gen_range(0..8)),
                        AlphaPoint::Nat(rng.gen_range(0..8)),
                    ));
                }
                if rng.gen() {
                    pairs.insert((AlphaPoint::Inf, AlphaPoint::Inf));
                }
                Piece::Pairs(pairs)
            }
        });
    }
    AlphaRelation::from_pieces(pieces)
}

/// Brute-force search for a continuity violation: a non-closed row on the
/// window, or a clopen test set with a non-clopen preimage. Test sets are
/// all finite sets inside the constant bound together with all singletons
/// up to the class window, in both clopen families.
fn falsify(r: &AlphaRelation) -> Option<String> {
    let c = r.constant_bound();
    let l = lcm(r.stride_lcm(), r.converse().stride_lcm());
    let window = r.stability_base().max(r.converse().stability_base()) + 3 * l;
    if !r.row(AlphaPoint::Inf).is_closed() {
        return Some("row at infinity not closed".into());
    }
    for x in 0..=window {
        if !r.row(AlphaPoint::Nat(x)).is_closed() {
            return Some(format!("row {x} not closed"));
        }
    }
    let mut try_set = |f: EvPeriodicSet| -> Option<String> {
        let finite = AlphaSet::naturals(f.clone());
        if !r.preimage(&finite).is_clopen() {
            return Some(format!("preimage of {finite} not clopen"));
        }
        let cofinite = AlphaSet::new(f.complement(), true);
        if !r.preimage(&cofinite).is_clopen() {
            return Some(format!("preimage of {cofinite} not clopen"));
        }
        None
    };
    for mask in 0u64..(1 << (c + 1).min(13)) {
        let f = EvPeriodicSet::from_elements((0..=c.min(12)).filter(|&i| mask >> i & 1 == 1));
        if let Some(hit) = try_set(f) {
            return Some(hit);
        }
    }
    for y in 0..=window {
        if let Some(hit) = try_set(EvPeriodicSet::singleton(y)) {
            return Some(hit);
        }
    }
    None
}

#[test]
fn verdicts_agree_with_the_brute_force_falsifier() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFA15E);
    let mut yes = 0u32;
    let mut no = 0u32;
    for case in 0..150 {
        let r = rand_guarded(&mut rng);
        match is_continuous(&r) {
            ContinuityVerdict::Yes(_) => {
                yes += 1;
                assert_eq!(
                    falsify(&r),
                    None,
                    "case {case}: falsifier contradicts Yes for {r}"
                );
                // Interiority of a continuous relation is the converse
                // condition; cross-check the same way.
                if matches!(is_interior(&r), Ok(v) if v.is_yes()) {
                    assert_eq!(falsify(&r.converse()), None, "case {case}: converse of {r}");
                }
            }
            ContinuityVerdict::No(w) => {
                no += 1;
                assert!(w.refutes(&r), "case {case}: stale witness for {r}");
                assert!(
                    falsify(&r).is_some(),
                    "case {case}: falsifier finds nothing for No on {r}"
                );
            }
            ContinuityVerdict::Unknown { .. } => {
                panic!("case {case}: guarded relation got Unknown: {r}")
            }
        }
    }
    // The generator must exercise both outcomes to mean anything.
    assert!(yes >= 20 && no >= 20, "unbalanced sample: {yes} yes / {no} no");
}

#[test]
fn intersection_is_commutative_and_associative_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA550C);
    for _ in 0..200 {
        let r = rand_guarded(&mut rng);
        let s = rand_guarded(&mut rng);
        let t = rand_guarded(&mut rng);
        assert!(r.intersect(&s).semantically_eq(&s.intersect(&r)));
        assert!(r
            .intersect(&s.intersect(&t))
            .semantically_eq(&r.intersect(&s).intersect(&t)));
        // Union distributes through membership; intersection is idempotent.
        assert!(r.intersect(&r).semantically_eq(&r));
        assert!(r.union(&r).semantically_eq(&r));
    }
}
