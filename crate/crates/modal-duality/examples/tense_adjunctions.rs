//! Tense structure on finite algebras: left adjoints, the five equivalent
//! characterizations, and the identification of the atom-set pairing.

use modal_duality::algebra::{enumerate_necessity_ops, UnaryOpTable};
use modal_duality::report::Verdict;
use modal_duality::tense::{
    equivalence_battery, interior_bridge_check, left_adjoint, pairing_map_report, tno_powerset_map,
};

fn main() {
    // Left adjoints of the named operators.
    for (name, op) in [
        ("identity", UnaryOpTable::identity(2)),
        ("constant top", UnaryOpTable::constant_top(2)),
        ("bottom", UnaryOpTable::necessity_bottom(2)),
    ] {
        let adj = left_adjoint(&op).unwrap();
        println!("left adjoint of {name}: {}", adj.label());
    }

    // Every necessity operator on a finite algebra passes all five
    // characterizations of a tense necessity operator.
    let ops = enumerate_necessity_ops(2).unwrap();
    let all = ops
        .iter()
        .all(|op| equivalence_battery(op).unwrap().all_true());
    println!(
        "\nall {} operators pass the five-way battery: {all}",
        ops.len()
    );

    // The displayed atom-set pairing, and what it turns out to be.
    println!(
        "identity operator pairs with {:?}",
        tno_powerset_map(&UnaryOpTable::identity(2))
            .unwrap()
            .pairs()
    );
    let report = pairing_map_report(2).unwrap();
    println!(
        "pairing is bijective: {}, order iso: {}, equals complement-of-converse: {}, \
         equals plain complement: {}",
        report.bijective,
        report.order_isomorphism,
        report.matches_complement_of_converse,
        report.matches_plain_complement
    );

    println!("\nbridge report:");
    for check in interior_bridge_check(200) {
        let tag = match check.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "????",
        };
        println!("  [{tag}] {}", check.name);
    }
}
