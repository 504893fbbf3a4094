//! Symbolic fragment of the Stone–Čech compactification of ℕ.
//!
//! Free ultrafilters are never enumerated. Subsets come in three forms over
//! an eventually periodic base `A ⊆ ℕ`: `plain` (just `A`), `closure`
//! (the closure of `A`, which is clopen), and `plus-all-free` (`A` together
//! with the whole remainder). Normalization identifies `plain(A)` with
//! `closure(A)` for finite `A` and `plus-all-free(A)` with `closure(A)` for
//! cofinite `A`, so clopenness is simply "has closure form".
//!
//! The relation catalogue is closed: the order-with-remainder relation
//! `{(n1, n2) | n1 <= n2} ∪ (βℕ × ℕ*)`, its converse, and their intersection
//! `{(n, n) | n ∈ ℕ} ∪ (ℕ* × ℕ*)`. Each carries closed-form row, column,
//! image, and preimage rules, split on the finite/infinite dichotomy of the
//! base set; the remainder appears only as the symbolic point class `Star`.
//! Adding a relation means supplying such rules plus truncation validation.

use std::fmt;

use thiserror::Error;

use crate::evset::EvPeriodicSet;
use crate::report::Check;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BetaError {
    #[error("rule for {relation} is only defined on closure-form or finite sets, got {form}")]
    UnsupportedForm { relation: String, form: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BetaForm {
    /// `A`, as a plain subset of the compactification.
    Plain,
    /// `cl(A)`; always clopen.
    Closure,
    /// `A ∪ ℕ*`.
    PlusAllFree,
}

impl fmt::Display for BetaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaForm::Plain => "plain",
            BetaForm::Closure => "closure",
            BetaForm::PlusAllFree => "plus-all-free",
        })
    }
}

/// A symbolic subset, normalized at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    base: EvPeriodicSet,
    form: BetaForm,
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BetaSet({self})")
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.form, self.base)
    }
}

/// How much of the remainder a set covers: nothing, the free ultrafilters
/// containing a base set, or all of it.
#[derive(Debug, Clone, PartialEq, Eq)]
enum StarPart {
    None,
    OfBase(EvPeriodicSet),
    All,
}

impl BetaSet {
    pub fn new(base: EvPeriodicSet, form: BetaForm) -> BetaSet {
        let form = match form {
            BetaForm::Plain if base.is_finite() => BetaForm::Closure,
            BetaForm::PlusAllFree if base.is_cofinite() => BetaForm::Closure,
            other => other,
        };
        BetaSet { base, form }
    }

    pub fn plain(base: EvPeriodicSet) -> BetaSet {
        BetaSet::new(base, BetaForm::Plain)
    }

    pub fn closure(base: EvPeriodicSet) -> BetaSet {
        BetaSet::new(base, BetaForm::Closure)
    }

    pub fn plus_all_free(base: EvPeriodicSet) -> BetaSet {
        BetaSet::new(base, BetaForm::PlusAllFree)
    }

    pub fn empty() -> BetaSet {
        BetaSet::closure(EvPeriodicSet::empty())
    }

    /// The whole compactification, `cl(ℕ)`.
    pub fn full() -> BetaSet {
        BetaSet::closure(EvPeriodicSet::full())
    }

    /// The remainder `ℕ*`.
    pub fn remainder() -> BetaSet {
        BetaSet::plus_all_free(EvPeriodicSet::empty())
    }

    pub fn base(&self) -> &EvPeriodicSet {
        &self.base
    }

    pub fn form(&self) -> BetaForm {
        self.form
    }

    pub fn contains_nat(&self, n: u64) -> bool {
        self.base.contains(n)
    }

    fn star_part(&self) -> StarPart {
        match self.form {
            BetaForm::Plain => StarPart::None,
            BetaForm::Closure => {
                if self.base.is_finite() {
                    StarPart::None
                } else if self.base.is_cofinite() {
                    StarPart::All
                } else {
                    StarPart::OfBase(self.base.clone())
                }
            }
            BetaForm::PlusAllFree => StarPart::All,
        }
    }

    /// Clopen sets are exactly the closures of base sets.
    pub fn is_clopen(&self) -> bool {
        match self.form {
            BetaForm::Closure => true,
            BetaForm::Plain => self.base.is_finite(),
            BetaForm::PlusAllFree => self.base.is_cofinite(),
        }
    }

    /// Plain infinite sets are the only non-closed form: closures are closed
    /// and the remainder is closed, hence so is anything of the third form.
    pub fn is_closed(&self) -> bool {
        match self.form {
            BetaForm::Plain => self.base.is_finite(),
            BetaForm::Closure | BetaForm::PlusAllFree => true,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty() && matches!(self.star_part(), StarPart::None)
    }

    pub fn subset_of(&self, other: &BetaSet) -> bool {
        if !self.base.is_subset(&other.base) {
            return false;
        }
        match (self.star_part(), other.star_part()) {
            (StarPart::None, _) => true,
            (_, StarPart::All) => true,
            (StarPart::All, StarPart::OfBase(b)) => b.is_cofinite(),
            (StarPart::All, StarPart::None) => false,
            (StarPart::OfBase(_), StarPart::None) => false,
            // Every free ultrafilter containing a contains b iff a ∖ b is
            // finite.
            (StarPart::OfBase(a), StarPart::OfBase(b)) => a.is_almost_subset(&b),
        }
    }

    pub fn set_eq(&self, other: &BetaSet) -> bool {
        self.subset_of(other) && other.subset_of(self)
    }
}

/// The catalogued relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaRelation {
    /// `{(n1, n2) | n1 <= n2} ∪ (βℕ × ℕ*)`.
    LeqStar,
    /// Its converse.
    ConverseLeqStar,
    /// Their intersection `{(n, n) | n ∈ ℕ} ∪ (ℕ* × ℕ*)`.
    DiagMeetCandidate,
}

impl fmt::Display for BetaRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaRelation::LeqStar => "leq-star",
            BetaRelation::ConverseLeqStar => "converse-leq-star",
            BetaRelation::DiagMeetCandidate => "diag-meet-candidate",
        })
    }
}

/// A natural number or the symbolic class of all remainder points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaPoint {
    Nat(u64),
    Star,
}

impl BetaRelation {
    pub fn converse(&self) -> BetaRelation {
        match self {
            BetaRelation::LeqStar => BetaRelation::ConverseLeqStar,
            BetaRelation::ConverseLeqStar => BetaRelation::LeqStar,
            BetaRelation::DiagMeetCandidate => BetaRelation::DiagMeetCandidate,
        }
    }

    /// The image of a single point (uniform over the remainder class).
    pub fn row(&self, x: BetaPoint) -> BetaSet {
        match (self, x) {
            (BetaRelation::LeqStar, BetaPoint::Nat(n)) => {
                BetaSet::plus_all_free(EvPeriodicSet::range_from(n))
            }
            (BetaRelation::LeqStar, BetaPoint::Star) => BetaSet::remainder(),
            (BetaRelation::ConverseLeqStar, BetaPoint::Nat(n)) => {
                BetaSet::closure(EvPeriodicSet::from_elements(0..=n))
            }
            (BetaRelation::ConverseLeqStar, BetaPoint::Star) => BetaSet::full(),
            (BetaRelation::DiagMeetCandidate, BetaPoint::Nat(n)) => {
                BetaSet::plain(EvPeriodicSet::singleton(n))
            }
            (BetaRelation::DiagMeetCandidate, BetaPoint::Star) => BetaSet::remainder(),
        }
    }

    pub fn column(&self, y: BetaPoint) -> BetaSet {
        self.converse().row(y)
    }

    fn supported(&self, s: &BetaSet) -> Result<(), BetaError> {
        match s.form() {
            BetaForm::Closure => Ok(()),
            BetaForm::Plain if s.base().is_finite() => Ok(()),
            other => Err(BetaError::UnsupportedForm {
                relation: self.to_string(),
                form: other.to_string(),
            }),
        }
    }

    /// Preimage of a clopen set, by the finite/infinite dichotomy of its
    /// base.
    pub fn preimage(&self, s: &BetaSet) -> Result<BetaSet, BetaError> {
        self.supported(s)?;
        let a = s.base();
        Ok(match self {
            BetaRelation::LeqStar => {
                if a.is_empty() {
                    BetaSet::empty()
                } else if a.is_finite() {
                    // everything at or below the maximum
                    BetaSet::closure(EvPeriodicSet::from_elements(0..=a.max_element().unwrap()))
                } else {
                    BetaSet::full()
                }
            }
            BetaRelation::ConverseLeqStar => {
                if a.is_empty() {
                    BetaSet::empty()
                } else {
                    // everything at or above the minimum, plus the remainder
                    BetaSet::closure(EvPeriodicSet::range_from(a.min_element().unwrap()))
                }
            }
            BetaRelation::DiagMeetCandidate => {
                if a.is_finite() {
                    BetaSet::plain(a.clone())
                } else {
                    BetaSet::plus_all_free(a.clone())
                }
            }
        })
    }

    pub fn image(&self, s: &BetaSet) -> Result<BetaSet, BetaError> {
        self.converse().preimage(s)
    }
}

/// Independent pointwise check of the natural part of a preimage: membership
/// of `n` is decided by quantifier reasoning on the base set, not by the
/// closed-form rules.
pub fn preimage_nat_direct(r: BetaRelation, a: &EvPeriodicSet, n: u64) -> bool {
    match r {
        BetaRelation::LeqStar => a.exists_geq(n),
        BetaRelation::ConverseLeqStar => a.members_below(n + 1).next().is_some(),
        BetaRelation::DiagMeetCandidate => a.contains(n),
    }
}

/// Machine-checked certificate: the catalogued order relation and its
/// converse are continuous, but their intersection has a non-clopen
/// preimage of a clopen set, so the meet differs from the intersection; as
/// a corollary binary intersection on the hyperspace of closed sets is not
/// continuous.
pub fn certify_meet_defect() -> Vec<Check> {
    let mut checks = Vec::new();
    let evens = EvPeriodicSet::evens();

    // Rows are closed, including the symbolic remainder class.
    {
        let mut ok = true;
        for rel in [BetaRelation::LeqStar, BetaRelation::ConverseLeqStar] {
            for n in 0..16 {
                ok &= rel.row(BetaPoint::Nat(n)).is_closed();
            }
            ok &= rel.row(BetaPoint::Star).is_closed();
        }
        checks.push(Check::new(
            "rows-closed",
            "under the order relation and its converse, the image of every \
             point is closed",
            vec!["leq-star".into(), "converse-leq-star".into()],
            format!(
                "row(3) = {}, row(*) = {}, converse row(3) = {}, converse row(*) = {}",
                BetaRelation::LeqStar.row(BetaPoint::Nat(3)),
                BetaRelation::LeqStar.row(BetaPoint::Star),
                BetaRelation::ConverseLeqStar.row(BetaPoint::Nat(3)),
                BetaRelation::ConverseLeqStar.row(BetaPoint::Star),
            ),
            ok,
        ));
    }

    // Preimages and images of clopens are clopen, over both dichotomy
    // branches, with the natural parts validated pointwise.
    {
        let finite_rep = EvPeriodicSet::from_elements([1, 3]);
        let infinite_rep = evens.clone();
        let mut ok = true;
        let mut detail = Vec::new();
        for rel in [BetaRelation::LeqStar, BetaRelation::ConverseLeqStar] {
            for (branch, a) in [("finite", &finite_rep), ("infinite", &infinite_rep)] {
                let s = BetaSet::closure(a.clone());
                let pre = rel.preimage(&s).unwrap();
                let img = rel.image(&s).unwrap();
                ok &= pre.is_clopen() && img.is_clopen();
                for n in 0..=1000 {
                    ok &= pre.contains_nat(n) == preimage_nat_direct(rel, a, n);
                }
                detail.push(format!("{rel}[{branch}]: pre = {pre}, img = {img}"));
            }
        }
        checks.push(Check::new(
            "continuity-certificates",
            "inverse and forward images of clopen sets under the order \
             relation and its converse are clopen on both branches of the \
             finite/infinite dichotomy, and agree pointwise with direct \
             evaluation on the naturals",
            vec!["leq-star".into(), "converse-leq-star".into()],
            detail.join("; "),
            ok,
        ));
    }

    // The defect: the intersection's preimage of cl(evens) picks up the
    // whole remainder and is not clopen.
    let defect_ok;
    {
        let s = BetaSet::closure(evens.clone());
        let pre = BetaRelation::DiagMeetCandidate.preimage(&s).unwrap();
        let expected = BetaSet::plus_all_free(evens.clone());
        defect_ok = pre.set_eq(&expected)
            && !pre.is_clopen()
            && pre.base().complement() == EvPeriodicSet::odds();
        checks.push(
            Check::new(
                "intersection-preimage-defect",
                "the intersection of the order relation with its converse \
                 pulls the closure of the evens back to the evens plus the \
                 whole remainder, whose natural-part complement is the odds; \
                 that set is not clopen, so the intersection is not \
                 continuous",
                vec!["diag-meet-candidate".into(), s.to_string()],
                format!("preimage = {pre}, clopen = {}", pre.is_clopen()),
                defect_ok,
            )
            .with_witness(expected.to_string()),
        );
    }

    // Conclusion and hyperspace corollary.
    {
        let ok = defect_ok;
        checks.push(Check::new(
            "meet-differs-from-intersection",
            "both factors are continuous but their intersection is not, so \
             the meet in the continuous-relation order differs from the \
             intersection",
            vec!["leq-star".into(), "converse-leq-star".into()],
            if ok {
                "meet ≠ intersection"
            } else {
                "unconfirmed"
            }
            .to_string(),
            ok,
        ));
        checks.push(Check::new(
            "hyperspace-intersection-not-continuous",
            "if binary intersection on the hyperspace of closed sets were \
             continuous, the pointwise intersection of the two mediating \
             maps would make the intersection relation continuous, \
             contradicting the defect; so it is not continuous",
            vec!["diag-meet-candidate".into()],
            if ok { "corollary holds" } else { "unconfirmed" }.to_string(),
            ok,
        ));
    }

    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn normalization_rules() {
        let finite = EvPeriodicSet::from_elements([0, 1, 2]);
        assert_eq!(BetaSet::plain(finite.clone()).form(), BetaForm::Closure);
        let cofinite = EvPeriodicSet::range_from(5);
        assert_eq!(BetaSet::plus_all_free(cofinite).form(), BetaForm::Closure);
        let evens = EvPeriodicSet::evens();
        assert_eq!(BetaSet::plain(evens.clone()).form(), BetaForm::Plain);
        assert_eq!(BetaSet::plus_all_free(evens).form(), BetaForm::PlusAllFree);
    }

    #[test]
    fn clopen_classification() {
        assert!(BetaSet::closure(EvPeriodicSet::evens()).is_clopen());
        assert!(!BetaSet::plus_all_free(EvPeriodicSet::evens()).is_clopen());
        assert!(BetaSet::plain(EvPeriodicSet::from_elements([0, 1, 2])).is_clopen());
        assert!(!BetaSet::plain(EvPeriodicSet::evens()).is_clopen());
        assert!(!BetaSet::plain(EvPeriodicSet::evens()).is_closed());
        assert!(BetaSet::remainder().is_closed());
    }

    #[test]
    fn rows_match_the_catalogue() {
        assert_eq!(
            BetaRelation::LeqStar.row(BetaPoint::Nat(3)),
            BetaSet::plus_all_free(EvPeriodicSet::range_from(3))
        );
        assert!(BetaRelation::LeqStar
            .row(BetaPoint::Star)
            .set_eq(&BetaSet::remainder()));
        assert!(BetaRelation::ConverseLeqStar
            .row(BetaPoint::Star)
            .set_eq(&BetaSet::full()));
        assert_eq!(
            BetaRelation::ConverseLeqStar.row(BetaPoint::Nat(2)),
            BetaSet::closure(EvPeriodicSet::from_elements([0, 1, 2]))
        );
    }

    #[test]
    fn preimage_rules_on_the_worked_instances() {
        // Finite branch: everything at or below max {1,3}.
        let pre = BetaRelation::LeqStar
            .preimage(&BetaSet::closure(EvPeriodicSet::from_elements([1, 3])))
            .unwrap();
        assert_eq!(
            pre,
            BetaSet::closure(EvPeriodicSet::from_elements([0, 1, 2, 3]))
        );
        // Image with minimum 2: the cofinite clopen from 2 up.
        let img = BetaRelation::LeqStar
            .image(&BetaSet::closure(EvPeriodicSet::progression(3, 2, 0)))
            .unwrap();
        assert_eq!(img, BetaSet::closure(EvPeriodicSet::range_from(2)));
        // The defect preimage.
        let pre = BetaRelation::DiagMeetCandidate
            .preimage(&BetaSet::closure(EvPeriodicSet::evens()))
            .unwrap();
        assert_eq!(pre, BetaSet::plus_all_free(EvPeriodicSet::evens()));
        assert!(!pre.is_clopen());
    }

    #[test]
    fn unsupported_forms_are_rejected() {
        let err = BetaRelation::LeqStar
            .preimage(&BetaSet::plus_all_free(EvPeriodicSet::evens()))
            .unwrap_err();
        assert!(matches!(err, BetaError::UnsupportedForm { .. }));
        let err = BetaRelation::LeqStar
            .preimage(&BetaSet::plain(EvPeriodicSet::evens()))
            .unwrap_err();
        assert!(matches!(err, BetaError::UnsupportedForm { .. }));
    }

    #[test]
    fn duality_consistency() {
        for a in [
            EvPeriodicSet::from_elements([2, 5]),
            EvPeriodicSet::evens(),
            EvPeriodicSet::range_from(4),
            EvPeriodicSet::empty(),
        ] {
            let s = BetaSet::closure(a);
            assert_eq!(
                BetaRelation::ConverseLeqStar.preimage(&s).unwrap(),
                BetaRelation::LeqStar.image(&s).unwrap()
            );
        }
    }

    #[test]
    fn subset_semantics() {
        let evens = BetaSet::closure(EvPeriodicSet::evens());
        let full = BetaSet::full();
        assert!(evens.subset_of(&full));
        assert!(!full.subset_of(&evens));
        // cl(evens ∖ {0}) still contains the same remainder points.
        let shifted =
            BetaSet::closure(EvPeriodicSet::evens().difference(&EvPeriodicSet::singleton(0)));
        assert!(shifted.subset_of(&evens));
        assert!(!evens.subset_of(&shifted)); // 0 is missing
        let remainder = BetaSet::remainder();
        assert!(remainder.subset_of(&full));
        assert!(!remainder.subset_of(&BetaSet::closure(EvPeriodicSet::from_elements([1]))));
    }

    #[test]
    fn defect_certificate_validates() {
        let checks = certify_meet_defect();
        for c in &checks {
            assert_eq!(
                c.verdict,
                crate::report::Verdict::Pass,
                "step {} failed: {}",
                c.name,
                c.computed
            );
        }
        assert!(all_pass(&checks));
        assert_eq!(checks.len(), 5);
    }
}
