//! The symbolic fragment of the Stone–Čech compactification: catalogued
//! relations whose meet differs from their intersection.

use modal_duality::beta::{certify_meet_defect, BetaPoint, BetaRelation, BetaSet};
use modal_duality::evset::EvPeriodicSet;
use modal_duality::report::Verdict;

fn main() {
    let leq = BetaRelation::LeqStar;
    println!("row(3)      = {}", leq.row(BetaPoint::Nat(3)));
    println!("row(star)   = {}", leq.row(BetaPoint::Star));
    println!(
        "converse row(star) = {}",
        leq.converse().row(BetaPoint::Star)
    );

    let finite = BetaSet::closure(EvPeriodicSet::from_elements([1, 3]));
    let infinite = BetaSet::closure(EvPeriodicSet::evens());
    println!(
        "\npreimage of {finite} = {}",
        leq.preimage(&finite).unwrap()
    );
    println!(
        "preimage of {infinite} = {}",
        leq.preimage(&infinite).unwrap()
    );
    println!("image of {infinite} = {}", leq.image(&infinite).unwrap());

    // The defect: the intersection of the relation with its converse pulls
    // a clopen back to a non-clopen set.
    let defect = BetaRelation::DiagMeetCandidate.preimage(&infinite).unwrap();
    println!(
        "\nintersection preimage of {infinite} = {defect} (clopen: {})",
        defect.is_clopen()
    );

    println!("\ndefect certificate:");
    for check in certify_meet_defect() {
        let tag = match check.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "????",
        };
        println!("  [{tag}] {}", check.name);
    }
}
