//! Symbolic engine for the one-point compactification of ℕ.
//!
//! Points are the naturals plus a single point at infinity whose
//! neighborhoods are the cofinite sets. Subsets are an eventually periodic
//! part plus an infinity flag, so the clopen sets (finite sets without
//! infinity, cofinite sets with it) are decidable, as are interior and
//! closure. Relations are finite unions of structured [`Piece`]s closed
//! under union and intersection, with exact rows, columns, images, and
//! preimages. Continuity and interiority of a relation are decided in
//! `continuity`; the machine-checked certificate bundles live in `certify`;
//! the `oracle` re-validates every symbolic computation against a dense
//! truncation.

mod certify;
mod continuity;
mod oracle;
mod parse;
mod relation;

pub use certify::{certify_counterexamples, subdiagonal_analysis, SubdiagonalReport};
pub use continuity::{
    is_continuous, is_interior, ContinuityCertificate, ContinuityVerdict, ContinuityWitness,
};
pub use oracle::Truncation;
pub use parse::AlphaParseError;
pub use relation::{AffineTail, AlphaRelation, Piece};

use std::fmt;

use thiserror::Error;

use crate::evset::EvPeriodicSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphaError {
    #[error("relation is not contained in the diagonal")]
    NotSubdiagonal,
    #[error("affine tail requires a first-coordinate stride >= 1")]
    ZeroStride,
    #[error("interiority requires a continuous relation")]
    NotContinuous,
}

/// A point of the compactified space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlphaPoint {
    Nat(u64),
    Inf,
}

impl fmt::Display for AlphaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaPoint::Nat(n) => write!(f, "{n}"),
            AlphaPoint::Inf => write!(f, "inf"),
        }
    }
}

/// A subset of the compactified space: an eventually periodic set of
/// naturals plus an infinity flag.
///
/// Clopen iff the natural part is finite without infinity or cofinite with
/// it; closed iff the natural part is finite or infinity is present.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaSet {
    pub fin: EvPeriodicSet,
    pub has_inf: bool,
}

impl AlphaSet {
    pub fn new(fin: EvPeriodicSet, has_inf: bool) -> Self {
        AlphaSet { fin, has_inf }
    }

    pub fn empty() -> Self {
        AlphaSet::new(EvPeriodicSet::empty(), false)
    }

    /// The whole space ℕ ∪ {∞}.
    pub fn full() -> Self {
        AlphaSet::new(EvPeriodicSet::full(), true)
    }

    pub fn naturals(fin: EvPeriodicSet) -> Self {
        AlphaSet::new(fin, false)
    }

    pub fn point(p: AlphaPoint) -> Self {
        match p {
            AlphaPoint::Nat(n) => AlphaSet::new(EvPeriodicSet::singleton(n), false),
            AlphaPoint::Inf => AlphaSet::new(EvPeriodicSet::empty(), true),
        }
    }

    pub fn contains(&self, p: AlphaPoint) -> bool {
        match p {
            AlphaPoint::Nat(n) => self.fin.contains(n),
            AlphaPoint::Inf => self.has_inf,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        AlphaSet::new(self.fin.union(&other.fin), self.has_inf || other.has_inf)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        AlphaSet::new(
            self.fin.intersect(&other.fin),
            self.has_inf && other.has_inf,
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        AlphaSet::new(
            self.fin.difference(&other.fin),
            self.has_inf && !other.has_inf,
        )
    }

    pub fn complement(&self) -> Self {
        AlphaSet::new(self.fin.complement(), !self.has_inf)
    }

    pub fn is_empty(&self) -> bool {
        self.fin.is_empty() && !self.has_inf
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.fin.is_subset(&other.fin) && (!self.has_inf || other.has_inf)
    }

    /// Finitely many points in total (infinity counts as one point).
    pub fn is_finite(&self) -> bool {
        self.fin.is_finite()
    }

    pub fn is_clopen(&self) -> bool {
        (self.fin.is_finite() && !self.has_inf) || (self.fin.is_cofinite() && self.has_inf)
    }

    pub fn is_closed(&self) -> bool {
        self.fin.is_finite() || self.has_inf
    }

    pub fn is_open(&self) -> bool {
        self.complement().is_closed()
    }

    /// Every natural point is isolated; infinity is interior exactly when a
    /// cofinite neighborhood fits inside.
    pub fn interior(&self) -> Self {
        AlphaSet::new(self.fin.clone(), self.has_inf && self.fin.is_cofinite())
    }

    /// Adds infinity when the natural part accumulates there.
    pub fn closure(&self) -> Self {
        AlphaSet::new(self.fin.clone(), self.has_inf || self.fin.is_infinite())
    }
}

impl fmt::Debug for AlphaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaSet({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn evens_inf() -> AlphaSet {
        AlphaSet::new(EvPeriodicSet::evens(), true)
    }

    #[test]
    fn evens_with_infinity_is_closed_not_clopen() {
        let a = evens_inf();
        assert!(!a.is_clopen());
        assert!(a.is_closed());
        assert_eq!(a.interior(), AlphaSet::naturals(EvPeriodicSet::evens()));
        assert_eq!(a.closure(), a);
    }

    #[test]
    fn complement_of_evens_with_infinity_is_odds() {
        assert_eq!(
            evens_inf().complement(),
            AlphaSet::naturals(EvPeriodicSet::odds())
        );
    }

    #[test]
    fn clopen_classification() {
        assert!(AlphaSet::naturals(EvPeriodicSet::from_elements([1, 5])).is_clopen());
        assert!(AlphaSet::new(EvPeriodicSet::range_from(3), true).is_clopen());
        assert!(!AlphaSet::point(AlphaPoint::Inf).is_clopen());
        assert!(AlphaSet::point(AlphaPoint::Inf).is_closed());
        assert!(!AlphaSet::naturals(EvPeriodicSet::full()).is_clopen());
    }

    #[test]
    fn boolean_structure() {
        let a = evens_inf();
        assert!(a.union(&a.complement()).complement().is_empty());
        assert!(a.intersect(&a.complement()).is_empty());
        assert!(AlphaSet::naturals(EvPeriodicSet::evens())
            .intersect(&AlphaSet::naturals(EvPeriodicSet::odds()))
            .is_empty());
    }

    #[test]
    fn closure_of_finite_set_is_itself() {
        let f = AlphaSet::naturals(EvPeriodicSet::from_elements([0, 7]));
        assert_eq!(f.closure(), f);
        assert!(f.is_clopen());
    }
}
