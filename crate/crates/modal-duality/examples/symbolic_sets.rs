//! The two symbolic set calculi: eventually periodic subsets of the
//! one-point compactification, and the three-form subsets of the Stone–Čech
//! compactification, with their textual syntax.

use modal_duality::alpha::AlphaSet;
use modal_duality::beta::BetaSet;
use modal_duality::evset::EvPeriodicSet;

fn main() {
    let evens = EvPeriodicSet::evens();
    let evens_inf = AlphaSet::new(evens.clone(), true);
    println!("evens ∪ {{∞}} prints as   {evens_inf}");
    println!("  clopen: {}", evens_inf.is_clopen());
    println!("  closed: {}", evens_inf.is_closed());
    println!("  interior: {}", evens_inf.interior());
    println!("  complement: {}", evens_inf.complement());

    // Round-trip through the textual syntax.
    let back: AlphaSet = ";2:10;inf".parse().unwrap();
    assert_eq!(back, evens_inf);

    // Canonical forms make equality structural: an inflated description of
    // the evens collapses to the canonical one.
    let inflated = EvPeriodicSet::new(
        vec![true, false, true, false],
        vec![true, false, true, false, true, false],
    );
    assert_eq!(inflated, evens);
    println!("\ninflated description canonicalizes to {inflated}");

    // The three forms over the same base behave differently at the remainder.
    println!("\nover the base {evens}:");
    for s in [
        BetaSet::plain(evens.clone()),
        BetaSet::closure(evens.clone()),
        BetaSet::plus_all_free(evens),
    ] {
        println!("  {s}: clopen {}, closed {}", s.is_clopen(), s.is_closed());
    }
}
