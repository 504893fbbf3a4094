//! Dense truncation oracle.
//!
//! Replaces the compactified space by `{0..=depth} ∪ {∞}` and re-derives
//! rows, columns, preimages, images, unions, and intersections from pointwise
//! membership alone (per-piece arithmetic, never the symbolic set algebra),
//! then compares against the symbolic answers on the truncated window.
//! Only truncation-stable laws are checked; continuity verdicts are validated
//! separately by witness re-evaluation, because continuity does not truncate.

use crate::alpha::relation::Piece;
use crate::alpha::{AlphaPoint, AlphaRelation, AlphaSet};

#[derive(Debug, Clone, Copy)]
pub struct Truncation {
    pub depth: u64,
}

impl Truncation {
    pub fn new(depth: u64) -> Truncation {
        Truncation { depth }
    }

    fn points(&self) -> impl Iterator<Item = AlphaPoint> {
        (0..=self.depth)
            .map(AlphaPoint::Nat)
            .chain(std::iter::once(AlphaPoint::Inf))
    }

    /// Upper bound on second coordinates reachable from first coordinates
    /// `.. = depth`, from piece constants alone.
    fn reach(&self, r: &AlphaRelation) -> u64 {
        let mut y = self.depth;
        for p in r.pieces() {
            match p {
                Piece::Pairs(set) => {
                    for &(_, py) in set {
                        if let AlphaPoint::Nat(n) = py {
                            y = y.max(n);
                        }
                    }
                }
                Piece::Diagonal(_) => {}
                Piece::Product(_, b) => {
                    // one witness from the product column suffices
                    if let Some(m) = b.fin.min_element() {
                        y = y.max(m);
                    }
                }
                Piece::Tail(t) => y = y.max(t.c * self.depth + t.d),
            }
        }
        y
    }

    /// Rows and columns agree with pointwise membership on the window.
    pub fn check_slices(&self, r: &AlphaRelation) -> Result<(), String> {
        for x in self.points() {
            let row = r.row(x);
            for y in self.points() {
                if row.contains(y) != r.member(x, y) {
                    return Err(format!("row({x}) disagrees with membership at {y}"));
                }
            }
        }
        for y in self.points() {
            let col = r.column(y);
            for x in self.points() {
                if col.contains(x) != r.member(x, y) {
                    return Err(format!("column({y}) disagrees with membership at {x}"));
                }
            }
        }
        Ok(())
    }

    /// Intersection and union agree with pointwise conjunction and
    /// disjunction of membership.
    pub fn check_lattice_ops(&self, r: &AlphaRelation, s: &AlphaRelation) -> Result<(), String> {
        let meet = r.intersect(s);
        let join = r.union(s);
        for x in self.points() {
            for y in self.points() {
                let both = r.member(x, y) && s.member(x, y);
                if meet.member(x, y) != both {
                    return Err(format!("intersection disagrees at ({x},{y})"));
                }
                let either = r.member(x, y) || s.member(x, y);
                if join.member(x, y) != either {
                    return Err(format!("union disagrees at ({x},{y})"));
                }
            }
        }
        Ok(())
    }

    /// Preimage and image of `u` agree with an existential scan over the
    /// (bounded-reach) window.
    pub fn check_polarity(&self, r: &AlphaRelation, u: &AlphaSet) -> Result<(), String> {
        let reach = self.reach(r);
        let conv = r.converse();
        let co_reach = self.reach(&conv);
        let pre = r.preimage(u);
        for x in self.points() {
            let dense = (0..=reach)
                .map(AlphaPoint::Nat)
                .chain(std::iter::once(AlphaPoint::Inf))
                .any(|y| r.member(x, y) && u.contains(y));
            if pre.contains(x) != dense {
                return Err(format!("preimage disagrees at {x}"));
            }
        }
        let img = r.image(u);
        for y in self.points() {
            let dense = (0..=co_reach)
                .map(AlphaPoint::Nat)
                .chain(std::iter::once(AlphaPoint::Inf))
                .any(|x| r.member(x, y) && u.contains(x));
            if img.contains(y) != dense {
                return Err(format!("image disagrees at {y}"));
            }
        }
        Ok(())
    }

    /// Set algebra agrees with pointwise boolean operations on the window.
    pub fn check_set_ops(&self, a: &AlphaSet, b: &AlphaSet) -> Result<(), String> {
        let u = a.union(b);
        let i = a.intersect(b);
        let d = a.difference(b);
        let c = a.complement();
        for p in self.points() {
            let (pa, pb) = (a.contains(p), b.contains(p));
            if u.contains(p) != (pa || pb)
                || i.contains(p) != (pa && pb)
                || d.contains(p) != (pa && !pb)
                || c.contains(p) != !pa
            {
                return Err(format!("set operation disagrees at {p}"));
            }
        }
        Ok(())
    }
}
