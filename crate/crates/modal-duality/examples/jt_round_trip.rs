//! The operator/relation correspondence on a finite algebra: round trips,
//! order reversal, and joins of relations against meets of operators.

use modal_duality::algebra::UnaryOpTable;
use modal_duality::duality::{
    all_relations, box_to_relation, jt_antitone_check, relation_to_box, relation_to_diamond,
    FiniteRelation,
};

fn main() {
    let m = 2;
    println!("relations on a {m}-point space and their necessity operators:");
    for r in all_relations(m).unwrap() {
        let box_op = relation_to_box(&r);
        let back = box_to_relation(&box_op).unwrap();
        assert_eq!(back, r);
        println!("  {:?}  ->  {}", r.pairs(), box_op.label());
    }

    // The empty relation gives the constant-top operator, the full relation
    // the bottom one, and the identity relation the identity operator.
    assert_eq!(
        relation_to_box(&FiniteRelation::empty(m).unwrap()),
        UnaryOpTable::constant_top(m)
    );
    assert_eq!(
        relation_to_box(&FiniteRelation::full(m).unwrap()),
        UnaryOpTable::necessity_bottom(m)
    );
    assert_eq!(
        relation_to_box(&FiniteRelation::identity(m).unwrap()),
        UnaryOpTable::identity(m)
    );

    println!("inclusion of relations reverses the operator order: {}", {
        jt_antitone_check(2).unwrap() && jt_antitone_check(3).unwrap()
    });

    // Diamond is the dual of Box, and union of relations is meet of boxes.
    let rels: Vec<_> = all_relations(m).unwrap().collect();
    for r in &rels {
        assert_eq!(relation_to_diamond(r), relation_to_box(r).dual());
        for s in &rels {
            assert_eq!(
                relation_to_box(&r.union(s)),
                relation_to_box(r)
                    .pointwise_meet(&relation_to_box(s))
                    .unwrap()
            );
        }
    }
    println!("diamond = dual of box, and join of relations = meet of operators");
}
