//! Build operator posets and run the lattice-law analyzer on them and on
//! classic small posets.

use modal_duality::poset::{build_no_poset, FinPoset};

fn show(name: &str, p: &FinPoset) {
    let v = p.analyze().unwrap();
    println!(
        "{name} (n = {}): bounded {} | lattice {} | distributive {} | frame {} | \
         coframe {} | boolean {} | atomic {} | zero-dim {} | spatial {}",
        v.size,
        v.bounded.holds,
        v.lattice.holds,
        v.distributive_lattice.holds,
        v.frame_law.holds,
        v.coframe_law.holds,
        v.boolean.holds,
        v.atomic.holds,
        v.zero_dimensional.holds,
        v.spatial.holds,
    );
    for (flag, label) in [
        (&v.lattice, "lattice"),
        (&v.distributive_lattice, "distributivity"),
        (&v.distributive_semilattice, "semilattice distributivity"),
    ] {
        if let Some(w) = &flag.witness {
            println!("    {label} witness: {w:?}");
        }
    }
}

fn main() {
    // The poset of all necessity operators at one and two atoms.
    show("operator poset, m = 1", &build_no_poset(1).unwrap());
    show("operator poset, m = 2", &build_no_poset(2).unwrap());

    // The diamond with three incomparable middle elements: a lattice that is
    // not distributive.
    let m3 = FinPoset::from_edge_list("0 <= 1\n0 <= 2\n0 <= 3\n1 <= 4\n2 <= 4\n3 <= 4\n").unwrap();
    show("three-atom diamond", &m3);

    // A join-semilattice that is not a lattice: a square with an extra
    // element below the top only.
    let join_only =
        FinPoset::from_edge_list("elements 5\n0 <= 1\n0 <= 2\n1 <= 3\n2 <= 3\n4 <= 3\n").unwrap();
    show("square plus top-only element", &join_only);

    // Meet-primes and join-primes of the 16-element powerset.
    let powerset4 = FinPoset::from_leq_fn(16, None, |a, b| a & !b == 0).unwrap();
    let (mp, jp) = powerset4.primes().unwrap();
    println!(
        "powerset of a 4-set: {} meet-primes, {} join-primes",
        mp.len(),
        jp.len()
    );
}
