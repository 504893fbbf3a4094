//! Machine-checked certificate bundle for the counterexample structure of
//! the continuous- and interior-relation orders on the compactified space.
//!
//! The engine certifies, with every set and relation computation re-verified
//! against the dense truncation oracle:
//!
//! 1. the diagonal and the two shifted injections are continuous and
//!    interior;
//! 2. the diagonal has no meet with either injection: the intersection's
//!    domain has no greatest clopen subset, and relations below the diagonal
//!    correspond exactly to clopen subsets of their domain;
//! 3. no continuous (or interior) parts of the two injections can union to
//!    the diagonal (all candidates are finite but the diagonal is not), so
//!    the join-semilattices of continuous and interior relations are not
//!    distributive and not lattices;
//! 4. the two injections intersect in the singleton at infinity, which is
//!    not continuous, yet their meet exists and is the empty relation.

use crate::alpha::continuity::{is_continuous, is_interior, ContinuityVerdict};
use crate::alpha::oracle::Truncation;
use crate::alpha::{AlphaError, AlphaPoint, AlphaRelation, AlphaSet};
use crate::evset::EvPeriodicSet;
use crate::report::Check;

/// Analysis of a relation contained in the diagonal. Such relations are in
/// order bijection with subsets of their domain `{x | (x,x) ∈ r}`, and the
/// continuous ones correspond to the clopen subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiagonalReport {
    pub domain: AlphaSet,
    /// The greatest clopen subset of the domain, when one exists, i.e. when
    /// the domain's interior is clopen.
    pub greatest_clopen_subset: Option<AlphaSet>,
    /// True unless the domain contains infinity together with a cofinite
    /// set of naturals.
    pub all_clopen_subsets_finite: bool,
}

pub fn subdiagonal_analysis(r: &AlphaRelation) -> Result<SubdiagonalReport, AlphaError> {
    if !r.is_subdiagonal() {
        return Err(AlphaError::NotSubdiagonal);
    }
    let domain = r.domain();
    let interior = domain.interior();
    let greatest_clopen_subset = interior.is_clopen().then_some(interior);
    let all_clopen_subsets_finite = !(domain.has_inf && domain.fin.is_cofinite());
    Ok(SubdiagonalReport {
        domain,
        greatest_clopen_subset,
        all_clopen_subsets_finite,
    })
}

fn verdict_name(v: &ContinuityVerdict) -> &'static str {
    match v {
        ContinuityVerdict::Yes(_) => "yes",
        ContinuityVerdict::No(_) => "no",
        ContinuityVerdict::Unknown { .. } => "unknown",
    }
}

/// Runs the full bundle; `truncation` is the oracle depth.
pub fn certify_counterexamples(truncation: u64) -> Vec<Check> {
    let d = AlphaRelation::diagonal_full();
    let r = AlphaRelation::injection_r();
    let s = AlphaRelation::injection_s();
    let mut checks = Vec::new();

    // Step 0: the three ingredients are continuous and interior.
    {
        let all_yes = [&d, &r, &s].iter().all(|rel| {
            is_continuous(rel).is_yes() && is_interior(rel).map(|v| v.is_yes()).unwrap_or(false)
        });
        checks.push(Check::new(
            "ingredients-continuous-interior",
            "the diagonal and both shifted injections are continuous and interior",
            vec![d.to_string(), r.to_string(), s.to_string()],
            if all_yes {
                "yes/yes for all three"
            } else {
                "failed"
            },
            all_yes,
        ));
    }

    // Steps 1-2: no meet of the diagonal with either injection.
    let evens_inf = AlphaSet::new(EvPeriodicSet::evens(), true);
    let odds_inf = AlphaSet::new(EvPeriodicSet::odds(), true);
    let mut meet_analysis = |name: &str, other: &AlphaRelation, expect_domain: &AlphaSet| {
        let meet_candidate = d.intersect(other);
        let report = subdiagonal_analysis(&meet_candidate);
        let ok = match &report {
            Ok(rep) => {
                rep.domain == *expect_domain
                    && rep.greatest_clopen_subset.is_none()
                    && rep.all_clopen_subsets_finite
                    && is_continuous(&meet_candidate).is_no()
            }
            Err(_) => false,
        };
        let computed = match &report {
            Ok(rep) => format!(
                "domain {}, greatest clopen subset {}, clopen subsets all finite: {}",
                rep.domain,
                rep.greatest_clopen_subset
                    .as_ref()
                    .map_or("none".to_string(), |g| g.to_string()),
                rep.all_clopen_subsets_finite
            ),
            Err(e) => format!("error: {e}"),
        };
        checks.push(Check::new(
            name,
            "lower bounds are the diagonal restrictions to clopen subsets of \
             the intersection's domain; no greatest clopen subset, so no meet",
            vec![d.to_string(), other.to_string()],
            computed,
            ok,
        ));
        ok
    };
    let dr_ok = meet_analysis("d-r-meet-nonexistent", &r, &evens_inf);
    let ds_ok = meet_analysis("d-s-meet-nonexistent", &s, &odds_inf);

    // Step 3: no continuous parts of the injections union to the diagonal.
    {
        let dr = d.intersect(&r);
        let ds = d.intersect(&s);
        let rep_r = subdiagonal_analysis(&dr).unwrap();
        let rep_s = subdiagonal_analysis(&ds).unwrap();
        let diagonal_infinite = !d.domain().is_finite();
        let ok =
            rep_r.all_clopen_subsets_finite && rep_s.all_clopen_subsets_finite && diagonal_infinite;
        checks.push(Check::new(
            "no-decomposition-of-diagonal",
            "continuous parts of the injections below the diagonal are \
                 finite, so no two of them union to the (infinite) diagonal; \
                 the join-semilattice of continuous relations is not \
                 distributive",
            vec![d.to_string(), r.to_string(), s.to_string()],
            format!(
                "candidate parts finite: {} and {}; diagonal infinite: {}",
                rep_r.all_clopen_subsets_finite, rep_s.all_clopen_subsets_finite, diagonal_infinite
            ),
            ok,
        ));
    }

    // Step 4: the injections intersect in the singleton at infinity; their
    // intersection is not continuous, yet their meet exists and is empty.
    {
        let rs = r.intersect(&s);
        let expected = AlphaRelation::finite_pairs([(AlphaPoint::Inf, AlphaPoint::Inf)]);
        let same = rs.semantically_eq(&expected);
        let verdict = is_continuous(&rs);
        let not_continuous = verdict.is_no();
        let witness_ok = match &verdict {
            ContinuityVerdict::No(w) => w.refutes(&rs),
            _ => false,
        };
        let rep = subdiagonal_analysis(&rs).unwrap();
        let meet_is_empty = rep
            .greatest_clopen_subset
            .as_ref()
            .is_some_and(|g| g.is_empty());
        let ok = same && not_continuous && witness_ok && meet_is_empty;
        checks.push(
            Check::new(
                "r-s-intersection-singleton",
                "the injections intersect exactly in the pair at infinity; \
                 the intersection is not continuous (the singleton at \
                 infinity is not clopen) but the meet exists and is the \
                 empty relation",
                vec![r.to_string(), s.to_string()],
                format!(
                    "intersection = {rs}; continuity {}; greatest clopen subset of domain = {}",
                    verdict_name(&verdict),
                    rep.greatest_clopen_subset
                        .as_ref()
                        .map_or("none".to_string(), |g| g.to_string()),
                ),
                ok,
            )
            .with_witness(match verdict {
                ContinuityVerdict::No(w) => format!("{w:?}"),
                _ => "missing".to_string(),
            }),
        );
    }

    // Step 5: the same two facts inside the interior-relation order. The
    // candidate lower bounds are diagonal restrictions, which are symmetric,
    // so interiority coincides with continuity on them; a strictly growing
    // chain of interior parts below d ∩ r witnesses that no greatest exists.
    {
        let dr = d.intersect(&r);
        let mut chain_ok = true;
        let mut prev = AlphaRelation::empty();
        for j in 1..=5u64 {
            let u = AlphaSet::naturals(EvPeriodicSet::from_elements((0..j).map(|i| 2 * i)));
            let part = AlphaRelation::diagonal(u);
            let interior_ok = matches!(is_interior(&part), Ok(v) if v.is_yes());
            let below = part.intersect(&dr).semantically_eq(&part);
            let grows = !part.semantically_eq(&prev);
            chain_ok &= interior_ok && below && grows;
            prev = part;
        }
        let ok = chain_ok && dr_ok && ds_ok;
        checks.push(Check::new(
            "interior-order-counterexamples",
            "the diagonal restrictions are interior exactly when continuous \
             (they are symmetric); below the diagonal-injection \
             intersections they form unbounded strictly growing chains, so \
             the interior-relation order also lacks these meets and is not \
             distributive",
            vec![d.to_string(), r.to_string(), s.to_string()],
            format!("strict interior chain of length 5 below {dr}"),
            ok,
        ));
    }

    // Step 6: full truncation-oracle agreement for every relation involved.
    {
        let oracle = Truncation::new(truncation);
        let dr = d.intersect(&r);
        let ds = d.intersect(&s);
        let rs = r.intersect(&s);
        let relations = [&d, &r, &s, &dr, &ds, &rs];
        let sets = [
            AlphaSet::full(),
            evens_inf.clone(),
            odds_inf.clone(),
            AlphaSet::new(EvPeriodicSet::range_from(7), true),
            AlphaSet::naturals(EvPeriodicSet::from_elements([0, 3, 8])),
        ];
        let mut failure = None;
        'outer: for rel in relations {
            if let Err(e) = oracle.check_slices(rel) {
                failure = Some(e);
                break;
            }
            for u in &sets {
                if let Err(e) = oracle.check_polarity(rel, u) {
                    failure = Some(e);
                    break 'outer;
                }
            }
        }
        if failure.is_none() {
            for (a, b) in [(&d, &r), (&d, &s), (&r, &s)] {
                if let Err(e) = oracle.check_lattice_ops(a, b) {
                    failure = Some(e);
                    break;
                }
            }
        }
        let ok = failure.is_none();
        let mut check = Check::new(
            "truncation-oracle-agreement",
            "rows, columns, images, preimages, unions, and intersections of \
             every certified relation agree with dense pointwise enumeration \
             on the truncated space",
            vec![format!("depth {truncation}")],
            if ok {
                "agreement".to_string()
            } else {
                "mismatch".to_string()
            },
            ok,
        );
        if let Some(e) = failure {
            check = check.with_witness(e);
        }
        checks.push(check);
    }

    checks
}
