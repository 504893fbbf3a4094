//! Relations on the carrier compatible with arbitrary meets in both
//! coordinates, and their order isomorphism with tense necessity operators.

use modal_duality::algebra::enumerate_necessity_ops;
use modal_duality::tense::{
    compatible_relation_to_operator, enumerate_meet_compatible_relations,
    operator_to_compatible_relation,
};

fn main() {
    // Brute force over all 2^16 candidate relations on the 4-element
    // carrier.
    let relations = enumerate_meet_compatible_relations(2).unwrap();
    println!(
        "meet-compatible relations on the 4-element carrier: {} of 65536 candidates",
        relations.len()
    );

    // They are in monotone bijection with the necessity operators.
    let ops = enumerate_necessity_ops(2).unwrap();
    assert_eq!(relations.len(), ops.len());
    for op in &ops {
        let r = operator_to_compatible_relation(op).unwrap();
        assert_eq!(&compatible_relation_to_operator(&r).unwrap(), op);
        assert!(r.structural_facts_hold());
    }
    println!(
        "operator -> relation -> operator round-trips on all {} operators",
        ops.len()
    );

    for r in relations.iter().take(4) {
        println!("  sample relation with {} pairs", r.pairs().len());
    }

    // Monotone both ways.
    let monotone = ops.iter().all(|a| {
        ops.iter().all(|b| {
            a.leq(b)
                == operator_to_compatible_relation(a)
                    .unwrap()
                    .is_subset(&operator_to_compatible_relation(b).unwrap())
        })
    });
    println!("the pairing is an order isomorphism: {monotone}");
}
