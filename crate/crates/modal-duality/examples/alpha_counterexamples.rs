//! The counterexample engine on the one-point compactification of ℕ: the
//! diagonal, two shifted injections, their meets (and non-meets), and the
//! full machine-checked certificate bundle.

use modal_duality::alpha::{
    certify_counterexamples, is_continuous, is_interior, subdiagonal_analysis, AlphaRelation,
};
use modal_duality::report::Verdict;

fn main() {
    let d = AlphaRelation::diagonal_full();
    let r = AlphaRelation::injection_r();
    let s = AlphaRelation::injection_s();
    println!("d = {d}");
    println!("r = {r}");
    println!("s = {s}");
    for (name, rel) in [("d", &d), ("r", &r), ("s", &s)] {
        println!(
            "{name}: continuous {:?}, interior {:?}",
            is_continuous(rel).is_yes(),
            is_interior(rel).unwrap().is_yes()
        );
    }

    let dr = d.intersect(&r);
    let rep = subdiagonal_analysis(&dr).unwrap();
    println!("\nd ∩ r = {dr}");
    println!("  domain: {}", rep.domain);
    println!(
        "  greatest clopen subset: {}",
        rep.greatest_clopen_subset
            .map_or("none, so d and r have no meet".to_string(), |g| g
                .to_string())
    );

    let rs = r.intersect(&s);
    println!(
        "\nr ∩ s = {rs} (continuous: {})",
        is_continuous(&rs).is_yes()
    );

    println!("\ncertificate bundle:");
    for check in certify_counterexamples(1000) {
        let tag = match check.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "????",
        };
        println!("  [{tag}] {}", check.name);
    }
}
