//! Structured relations on the compactified space.
//!
//! A relation is a finite union of pieces: explicit finite pair patches,
//! diagonal restrictions `{(x,x) | x ∈ A}`, products `A × B`, and affine
//! tails `{(a·n+b, c·n+d) | n >= k}`. Tails with constant second coordinate
//! are normalized into products at construction, so stored tails always have
//! both strides at least 1; this keeps the class closed under converse.
//! Union is concatenation; intersection reduces piece pairs within the class,
//! with tail/tail handled by solving the two linear Diophantine conditions.

use std::collections::BTreeSet;

use crate::alpha::{AlphaError, AlphaPoint, AlphaSet};
use crate::evset::{lcm, EvPeriodicSet};

/// `{(a·n + b, c·n + d) | n >= k}`. Requires `a >= 1`; `c = 0` is accepted
/// by [`AlphaRelation::from_pieces`] and rewritten as a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineTail {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub k: u64,
}

impl AffineTail {
    pub fn new(a: u64, b: u64, c: u64, d: u64, k: u64) -> Result<Self, AlphaError> {
        if a == 0 {
            return Err(AlphaError::ZeroStride);
        }
        Ok(AffineTail { a, b, c, d, k })
    }

    /// The parameter index for first coordinate `v`, if any.
    fn param_of_first(&self, v: u64) -> Option<u64> {
        if v < self.b || (v - self.b) % self.a != 0 {
            return None;
        }
        let n = (v - self.b) / self.a;
        (n >= self.k).then_some(n)
    }

    fn second(&self, n: u64) -> u64 {
        self.c * n + self.d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Pairs(BTreeSet<(AlphaPoint, AlphaPoint)>),
    Diagonal(AlphaSet),
    Product(AlphaSet, AlphaSet),
    Tail(AffineTail),
}

impl Piece {
    fn member(&self, x: AlphaPoint, y: AlphaPoint) -> bool {
        match self {
            Piece::Pairs(set) => set.contains(&(x, y)),
            Piece::Diagonal(a) => x == y && a.contains(x),
            Piece::Product(a, b) => a.contains(x) && b.contains(y),
            Piece::Tail(t) => match (x, y) {
                (AlphaPoint::Nat(vx), AlphaPoint::Nat(vy)) => {
                    t.param_of_first(vx).is_some_and(|n| t.second(n) == vy)
                }
                _ => false,
            },
        }
    }

    fn is_empty(&self) -> bool {
        match self {
            Piece::Pairs(set) => set.is_empty(),
            Piece::Diagonal(a) => a.is_empty(),
            Piece::Product(a, b) => a.is_empty() || b.is_empty(),
            Piece::Tail(_) => false,
        }
    }
}

/// A relation on the compactified space, as a finite union of pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRelation {
    pieces: Vec<Piece>,
}

fn singletons(points: impl IntoIterator<Item = AlphaPoint>) -> AlphaSet {
    let mut fin = Vec::new();
    let mut inf = false;
    for p in points {
        match p {
            AlphaPoint::Nat(n) => fin.push(n),
            AlphaPoint::Inf => inf = true,
        }
    }
    AlphaSet::new(EvPeriodicSet::from_elements(fin), inf)
}

fn ceil_div(x: i128, y: i128) -> i128 {
    debug_assert!(y > 0);
    let q = x.div_euclid(y);
    if x.rem_euclid(y) == 0 {
        q
    } else {
        q + 1
    }
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl AlphaRelation {
    pub fn from_pieces(pieces: impl IntoIterator<Item = Piece>) -> Self {
        let mut out = Vec::new();
        for p in pieces {
            if p.is_empty() {
                continue;
            }
            match p {
                Piece::Tail(t) if t.c == 0 => {
                    // Constant-target tail is a product of a progression row
                    // set with a singleton column.
                    let row_set = AlphaSet::naturals(EvPeriodicSet::progression(t.a, t.b, t.k));
                    let col = AlphaSet::naturals(EvPeriodicSet::singleton(t.d));
                    out.push(Piece::Product(row_set, col));
                }
                other => out.push(other),
            }
        }
        AlphaRelation { pieces: out }
    }

    pub fn empty() -> Self {
        AlphaRelation { pieces: Vec::new() }
    }

    /// The full diagonal, including the point at infinity.
    pub fn diagonal_full() -> Self {
        AlphaRelation::from_pieces([Piece::Diagonal(AlphaSet::full())])
    }

    pub fn diagonal(a: AlphaSet) -> Self {
        AlphaRelation::from_pieces([Piece::Diagonal(a)])
    }

    pub fn product(a: AlphaSet, b: AlphaSet) -> Self {
        AlphaRelation::from_pieces([Piece::Product(a, b)])
    }

    pub fn finite_pairs(pairs: impl IntoIterator<Item = (AlphaPoint, AlphaPoint)>) -> Self {
        AlphaRelation::from_pieces([Piece::Pairs(pairs.into_iter().collect())])
    }

    /// `{(2n, 2n)} ∪ {(2n+1, 2n+3)} ∪ {(∞, ∞)}`: the even points are fixed
    /// and each odd point is shifted up by two.
    pub fn injection_r() -> Self {
        AlphaRelation::from_pieces([
            Piece::Tail(AffineTail::new(2, 0, 2, 0, 0).unwrap()),
            Piece::Tail(AffineTail::new(2, 1, 2, 3, 0).unwrap()),
            Piece::Pairs([(AlphaPoint::Inf, AlphaPoint::Inf)].into()),
        ])
    }

    /// `{(2n, 2n+2)} ∪ {(2n+1, 2n+1)} ∪ {(∞, ∞)}`: the odd points are fixed
    /// and each even point is shifted up by two.
    pub fn injection_s() -> Self {
        AlphaRelation::from_pieces([
            Piece::Tail(AffineTail::new(2, 0, 2, 2, 0).unwrap()),
            Piece::Tail(AffineTail::new(2, 1, 2, 1, 0).unwrap()),
            Piece::Pairs([(AlphaPoint::Inf, AlphaPoint::Inf)].into()),
        ])
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn member(&self, x: AlphaPoint, y: AlphaPoint) -> bool {
        self.pieces.iter().any(|p| p.member(x, y))
    }

    pub fn row(&self, x: AlphaPoint) -> AlphaSet {
        let mut acc = AlphaSet::empty();
        for p in &self.pieces {
            let part = match p {
                Piece::Pairs(set) => {
                    singletons(set.iter().filter(|(px, _)| *px == x).map(|(_, py)| *py))
                }
                Piece::Diagonal(a) => {
                    if a.contains(x) {
                        AlphaSet::point(x)
                    } else {
                        AlphaSet::empty()
                    }
                }
                Piece::Product(a, b) => {
                    if a.contains(x) {
                        b.clone()
                    } else {
                        AlphaSet::empty()
                    }
                }
                Piece::Tail(t) => match x {
                    AlphaPoint::Nat(v) => match t.param_of_first(v) {
                        Some(n) => AlphaSet::point(AlphaPoint::Nat(t.second(n))),
                        None => AlphaSet::empty(),
                    },
                    AlphaPoint::Inf => AlphaSet::empty(),
                },
            };
            acc = acc.union(&part);
        }
        acc
    }

    pub fn column(&self, y: AlphaPoint) -> AlphaSet {
        self.converse().row(y)
    }

    pub fn converse(&self) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|p| match p {
                Piece::Pairs(set) => Piece::Pairs(set.iter().map(|&(x, y)| (y, x)).collect()),
                Piece::Diagonal(a) => Piece::Diagonal(a.clone()),
                Piece::Product(a, b) => Piece::Product(b.clone(), a.clone()),
                Piece::Tail(t) => Piece::Tail(AffineTail {
                    a: t.c,
                    b: t.d,
                    c: t.a,
                    d: t.b,
                    k: t.k,
                }),
            })
            .collect();
        AlphaRelation { pieces }
    }

    pub fn union(&self, other: &Self) -> Self {
        AlphaRelation::from_pieces(self.pieces.iter().chain(&other.pieces).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for p in &self.pieces {
            for q in &other.pieces {
                out.extend(intersect_pieces(p, q));
            }
        }
        AlphaRelation::from_pieces(out)
    }

    /// `{x | row(x) ≠ ∅}`.
    pub fn domain(&self) -> AlphaSet {
        let mut acc = AlphaSet::empty();
        for p in &self.pieces {
            let part = match p {
                Piece::Pairs(set) => singletons(set.iter().map(|&(x, _)| x)),
                Piece::Diagonal(a) => a.clone(),
                Piece::Product(a, _) => a.clone(),
                Piece::Tail(t) => AlphaSet::naturals(EvPeriodicSet::progression(t.a, t.b, t.k)),
            };
            acc = acc.union(&part);
        }
        acc
    }

    /// `{x | row(x) ∩ u ≠ ∅}`, computed exactly piece by piece.
    pub fn preimage(&self, u: &AlphaSet) -> AlphaSet {
        let mut acc = AlphaSet::empty();
        for p in &self.pieces {
            let part = match p {
                Piece::Pairs(set) => {
                    singletons(set.iter().filter(|&&(_, y)| u.contains(y)).map(|&(x, _)| x))
                }
                Piece::Diagonal(a) => a.intersect(u),
                Piece::Product(a, b) => {
                    if b.intersect(u).is_empty() {
                        AlphaSet::empty()
                    } else {
                        a.clone()
                    }
                }
                Piece::Tail(t) => {
                    // First coordinates whose target lands in u; eventually
                    // periodic in the coordinate with period a * period(u).
                    let pu = u.fin.period();
                    let tu = u.fin.threshold();
                    let n_settle = t.k.max(if t.c == 0 {
                        0
                    } else {
                        ceil_div(tu as i128 - t.d as i128, t.c as i128).max(0) as u64
                    }) + pu;
                    let t_bound = t.a * n_settle + t.b + 1;
                    let p_bound = t.a * pu;
                    let fin = EvPeriodicSet::from_fn(t_bound, p_bound, |v| {
                        t.param_of_first(v)
                            .is_some_and(|n| u.fin.contains(t.second(n)))
                    });
                    AlphaSet::naturals(fin)
                }
            };
            acc = acc.union(&part);
        }
        acc
    }

    /// `r[u] = {y | column(y) ∩ u ≠ ∅}`.
    pub fn image(&self, u: &AlphaSet) -> AlphaSet {
        self.converse().preimage(u)
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Piecewise containment in the diagonal.
    pub fn is_subdiagonal(&self) -> bool {
        self.pieces.iter().all(|p| match p {
            Piece::Pairs(set) => set.iter().all(|&(x, y)| x == y),
            Piece::Diagonal(_) => true,
            Piece::Product(a, b) => {
                // A × B fits under the diagonal only when both are the same
                // single point.
                a == b
                    && a.fin
                        .elements()
                        .is_some_and(|e| e.len() + (a.has_inf as usize) == 1)
                    || a.is_empty()
                    || b.is_empty()
            }
            Piece::Tail(t) => t.a == t.c && t.b == t.d,
        })
    }

    /// Largest constant mentioned by any piece: tail offsets and starting
    /// coordinates, finite pair coordinates, and set thresholds + periods.
    pub fn constant_bound(&self) -> u64 {
        let mut c = 0u64;
        let set_bound = |s: &AlphaSet| s.fin.threshold() + s.fin.period();
        for p in &self.pieces {
            match p {
                Piece::Pairs(set) => {
                    for &(x, y) in set {
                        if let AlphaPoint::Nat(n) = x {
                            c = c.max(n);
                        }
                        if let AlphaPoint::Nat(n) = y {
                            c = c.max(n);
                        }
                    }
                }
                Piece::Diagonal(a) => c = c.max(set_bound(a)),
                Piece::Product(a, b) => c = c.max(set_bound(a)).max(set_bound(b)),
                Piece::Tail(t) => {
                    c = c
                        .max(t.b)
                        .max(t.d)
                        .max(t.a * t.k + t.b)
                        .max(t.c * t.k + t.d);
                }
            }
        }
        c
    }

    /// Least common multiple of every stride and set period in the pieces.
    pub fn stride_lcm(&self) -> u64 {
        let mut l = 1u64;
        for p in &self.pieces {
            match p {
                Piece::Pairs(_) => {}
                Piece::Diagonal(a) => l = lcm(l, a.fin.period()),
                Piece::Product(a, b) => {
                    l = lcm(l, a.fin.period());
                    l = lcm(l, b.fin.period());
                }
                Piece::Tail(t) => {
                    l = lcm(l, t.a);
                    l = lcm(l, t.c);
                }
            }
        }
        l
    }

    /// For first coordinates beyond this bound, piece applicability is
    /// constant on residue classes modulo [`Self::stride_lcm`] and every
    /// tail target has passed every set threshold.
    pub fn stability_base(&self) -> u64 {
        let c = self.constant_bound();
        let l = self.stride_lcm();
        c + l * (c + 1)
    }

    /// A window bound such that row agreement on `0..=bound` plus the
    /// infinity row pins the relation: each residue class gets enough sample
    /// points past the stability base to identify every affine target.
    pub fn equivalence_bound(&self, other: &Self) -> u64 {
        let base = self.stability_base().max(other.stability_base());
        let l = lcm(self.stride_lcm(), other.stride_lcm());
        let pieces = (self.pieces.len() + other.pieces.len()) as u64;
        base + (2 * pieces + 3) * l
    }

    /// Set-level equality, decided on the finite window of
    /// [`Self::equivalence_bound`].
    pub fn semantically_eq(&self, other: &Self) -> bool {
        let bound = self.equivalence_bound(other);
        if self.row(AlphaPoint::Inf) != other.row(AlphaPoint::Inf) {
            return false;
        }
        (0..=bound).all(|x| self.row(AlphaPoint::Nat(x)) == other.row(AlphaPoint::Nat(x)))
    }
}

/// Restricts a tail to an eventually periodic set of parameter indices,
/// producing explicit pairs for the prefix and one tail per live residue.
fn restrict_tail(t: &AffineTail, params: &EvPeriodicSet) -> Vec<Piece> {
    let mut out = Vec::new();
    let mut pairs = BTreeSet::new();
    for n in params.members_below(params.threshold()) {
        if n >= t.k {
            pairs.insert((AlphaPoint::Nat(t.a * n + t.b), AlphaPoint::Nat(t.second(n))));
        }
    }
    if !pairs.is_empty() {
        out.push(Piece::Pairs(pairs));
    }
    let p = params.period();
    for r in 0..p {
        if !params.class_eventually_in(r, p) {
            continue;
        }
        // smallest index >= max(threshold, k) congruent to r
        let start = params.threshold().max(t.k);
        let n0 = start + (p + r % p - start % p) % p;
        out.push(Piece::Tail(AffineTail {
            a: t.a * p,
            b: t.a * n0 + t.b,
            c: t.c * p,
            d: t.c * n0 + t.d,
            k: 0,
        }));
    }
    out
}

fn intersect_tails(t1: &AffineTail, t2: &AffineTail) -> Vec<Piece> {
    let (a1, b1, c1, d1, k1) = (
        t1.a as i128,
        t1.b as i128,
        t1.c as i128,
        t1.d as i128,
        t1.k as i128,
    );
    let (a2, b2, c2, d2, k2) = (
        t2.a as i128,
        t2.b as i128,
        t2.c as i128,
        t2.d as i128,
        t2.k as i128,
    );
    // Solve a1·n - a2·m = b2 - b1 and c1·n - c2·m = d2 - d1 with n >= k1,
    // m >= k2.
    let e = b2 - b1;
    let (g, x0, y0) = egcd(a1, a2);
    if e % g != 0 {
        return Vec::new();
    }
    let n0 = x0 * (e / g);
    let m0 = -y0 * (e / g);
    let step_n = a2 / g;
    let step_m = a1 / g;
    let w = c1 * step_n - c2 * step_m;
    let h = (c2 * m0 + d2) - (c1 * n0 + d1);
    let single = |n: i128, m: i128| -> Vec<Piece> {
        if n < k1 || m < k2 {
            return Vec::new();
        }
        let x = a1 * n + b1;
        let y = c1 * n + d1;
        debug_assert_eq!(a2 * m + b2, x);
        debug_assert_eq!(c2 * m + d2, y);
        vec![Piece::Pairs(
            [(AlphaPoint::Nat(x as u64), AlphaPoint::Nat(y as u64))].into(),
        )]
    };
    if w != 0 {
        if h % w != 0 {
            return Vec::new();
        }
        let t = h / w;
        return single(n0 + step_n * t, m0 + step_m * t);
    }
    if h != 0 {
        return Vec::new();
    }
    // Whole one-parameter family: clip to both start indices.
    let t_min = ceil_div(k1 - n0, step_n).max(ceil_div(k2 - m0, step_m));
    let n_min = n0 + step_n * t_min;
    debug_assert!(n_min >= k1 && m0 + step_m * t_min >= k2);
    vec![Piece::Tail(AffineTail {
        a: (a1 * step_n) as u64,
        b: (a1 * n_min + b1) as u64,
        c: (c1 * step_n) as u64,
        d: (c1 * n_min + d1) as u64,
        k: 0,
    })]
}

fn intersect_tail_diagonal(t: &AffineTail, a: &AlphaSet) -> Vec<Piece> {
    if t.a == t.c {
        if t.b != t.d {
            return Vec::new();
        }
        let values = EvPeriodicSet::progression(t.a, t.b, t.k).intersect(&a.fin);
        return vec![Piece::Diagonal(AlphaSet::naturals(values))];
    }
    // a·n + b = c·n + d has at most one solution when the strides differ.
    let num = t.d as i128 - t.b as i128;
    let den = t.a as i128 - t.c as i128;
    if num % den != 0 {
        return Vec::new();
    }
    let n = num / den;
    if n < t.k as i128 || n < 0 {
        return Vec::new();
    }
    let v = t.a * n as u64 + t.b;
    if a.contains(AlphaPoint::Nat(v)) {
        vec![Piece::Pairs(
            [(AlphaPoint::Nat(v), AlphaPoint::Nat(v))].into(),
        )]
    } else {
        Vec::new()
    }
}

fn intersect_tail_product(t: &AffineTail, a: &AlphaSet, b: &AlphaSet) -> Vec<Piece> {
    let pa = a.fin.period();
    let pb = b.fin.period();
    let settle = |stride: u64, offset: u64, thr: u64| -> u64 {
        if stride == 0 {
            0
        } else {
            ceil_div(thr as i128 - offset as i128, stride as i128).max(0) as u64
        }
    };
    let t_bound =
        t.k.max(settle(t.a, t.b, a.fin.threshold()))
            .max(settle(t.c, t.d, b.fin.threshold()))
            + 1;
    let p_bound = lcm(pa, pb);
    let params = EvPeriodicSet::from_fn(t_bound, p_bound, |n| {
        n >= t.k && a.fin.contains(t.a * n + t.b) && b.fin.contains(t.second(n))
    });
    restrict_tail(t, &params)
}

fn intersect_pieces(p: &Piece, q: &Piece) -> Vec<Piece> {
    match (p, q) {
        (Piece::Pairs(set), other) | (other, Piece::Pairs(set)) => {
            let filtered: BTreeSet<_> = set
                .iter()
                .copied()
                .filter(|&(x, y)| other.member(x, y))
                .collect();
            if filtered.is_empty() {
                Vec::new()
            } else {
                vec![Piece::Pairs(filtered)]
            }
        }
        (Piece::Diagonal(a), Piece::Diagonal(b)) => {
            vec![Piece::Diagonal(a.intersect(b))]
        }
        (Piece::Diagonal(a), Piece::Product(b, c)) | (Piece::Product(b, c), Piece::Diagonal(a)) => {
            vec![Piece::Diagonal(a.intersect(b).intersect(c))]
        }
        (Piece::Diagonal(a), Piece::Tail(t)) | (Piece::Tail(t), Piece::Diagonal(a)) => {
            intersect_tail_diagonal(t, a)
        }
        (Piece::Product(a1, b1), Piece::Product(a2, b2)) => {
            vec![Piece::Product(a1.intersect(a2), b1.intersect(b2))]
        }
        (Piece::Product(a, b), Piece::Tail(t)) | (Piece::Tail(t), Piece::Product(a, b)) => {
            intersect_tail_product(t, a, b)
        }
        (Piece::Tail(t1), Piece::Tail(t2)) => intersect_tails(t1, t2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> AlphaPoint {
        AlphaPoint::Nat(n)
    }

    fn evens_inf() -> AlphaSet {
        AlphaSet::new(EvPeriodicSet::evens(), true)
    }

    #[test]
    fn rows_and_columns_of_the_named_injections() {
        let r = AlphaRelation::injection_r();
        let s = AlphaRelation::injection_s();
        let d = AlphaRelation::diagonal_full();
        assert_eq!(r.row(nat(3)), AlphaSet::point(nat(5)));
        assert_eq!(r.row(nat(4)), AlphaSet::point(nat(4)));
        assert_eq!(d.row(AlphaPoint::Inf), AlphaSet::point(AlphaPoint::Inf));
        assert_eq!(s.column(nat(4)), AlphaSet::point(nat(2)));
        assert_eq!(s.column(nat(0)), AlphaSet::empty());
        assert_eq!(r.column(nat(1)), AlphaSet::empty());
    }

    #[test]
    fn membership_matches_rows() {
        let r = AlphaRelation::injection_r();
        for x in 0..50 {
            for y in 0..110 {
                assert_eq!(
                    r.member(nat(x), nat(y)),
                    r.row(nat(x)).contains(nat(y)),
                    "({x},{y})"
                );
            }
        }
        assert!(r.member(AlphaPoint::Inf, AlphaPoint::Inf));
    }

    #[test]
    fn diagonal_meets_injection_r_on_the_even_fixed_points() {
        let d = AlphaRelation::diagonal_full();
        let r = AlphaRelation::injection_r();
        let dr = d.intersect(&r);
        let expected = AlphaRelation::from_pieces([
            Piece::Tail(AffineTail::new(2, 0, 2, 0, 0).unwrap()),
            Piece::Pairs([(AlphaPoint::Inf, AlphaPoint::Inf)].into()),
        ]);
        assert!(dr.semantically_eq(&expected));
        assert_eq!(dr.domain(), evens_inf());
    }

    #[test]
    fn r_meets_s_only_at_infinity() {
        let r = AlphaRelation::injection_r();
        let s = AlphaRelation::injection_s();
        let rs = r.intersect(&s);
        let expected = AlphaRelation::finite_pairs([(AlphaPoint::Inf, AlphaPoint::Inf)]);
        assert!(rs.semantically_eq(&expected));
    }

    #[test]
    fn union_with_empty_is_identity() {
        let r = AlphaRelation::injection_r();
        assert!(r.union(&AlphaRelation::empty()).semantically_eq(&r));
    }

    #[test]
    fn preimage_and_image_on_singletons() {
        let r = AlphaRelation::injection_r();
        let s = AlphaRelation::injection_s();
        let five = AlphaSet::naturals(EvPeriodicSet::singleton(5));
        let one = AlphaSet::naturals(EvPeriodicSet::singleton(1));
        assert_eq!(
            r.preimage(&five),
            AlphaSet::naturals(EvPeriodicSet::singleton(3))
        );
        assert_eq!(s.image(&one), one);
        let d = AlphaRelation::diagonal_full();
        let u = AlphaSet::new(EvPeriodicSet::range_from(4), true);
        assert_eq!(d.preimage(&u), u);
    }

    #[test]
    fn preimage_of_cofinite_clopen_under_r() {
        let r = AlphaRelation::injection_r();
        // U_4 = {n >= 4} ∪ {∞}: evens from 4 up, odds whose target 2n+3 >= 4.
        let u = AlphaSet::new(EvPeriodicSet::range_from(4), true);
        let pre = r.preimage(&u);
        let expected = AlphaSet::new(EvPeriodicSet::range_from(3), true);
        assert_eq!(pre, expected);
    }

    #[test]
    fn tail_tail_intersection_families() {
        // Same line: {(n, n+1) | n >= 0} twice with different presentations.
        let t1 = AffineTail::new(1, 0, 1, 1, 0).unwrap();
        let t2 = AffineTail::new(2, 0, 2, 1, 0).unwrap(); // only even n
        let r1 = AlphaRelation::from_pieces([Piece::Tail(t1)]);
        let r2 = AlphaRelation::from_pieces([Piece::Tail(t2)]);
        let meet = r1.intersect(&r2);
        assert!(meet.semantically_eq(&r2));
        // Disjoint lines.
        let t3 = AffineTail::new(1, 0, 1, 2, 0).unwrap();
        let r3 = AlphaRelation::from_pieces([Piece::Tail(t3)]);
        assert!(r1.intersect(&r3).is_empty());
        // Crossing lines meet in one pair: n+1 = 2n ⇒ n = 1.
        let t4 = AffineTail::new(1, 0, 2, 0, 0).unwrap();
        let r4 = AlphaRelation::from_pieces([Piece::Tail(t4)]);
        let cross = r1.intersect(&r4);
        assert!(cross.semantically_eq(&AlphaRelation::finite_pairs([(nat(1), nat(2))])));
    }

    #[test]
    fn constant_target_tails_become_products() {
        let r = AlphaRelation::from_pieces([Piece::Tail(AffineTail {
            a: 2,
            b: 1,
            c: 0,
            d: 7,
            k: 0,
        })]);
        assert!(matches!(r.pieces()[0], Piece::Product(..)));
        assert!(r.member(nat(3), nat(7)));
        assert!(!r.member(nat(3), nat(8)));
        assert!(!r.member(nat(2), nat(7)));
        // Converse stays in the class.
        let c = r.converse();
        assert!(c.member(nat(7), nat(3)));
    }

    #[test]
    fn subdiagonal_detection() {
        assert!(AlphaRelation::diagonal_full().is_subdiagonal());
        assert!(AlphaRelation::diagonal_full()
            .intersect(&AlphaRelation::injection_r())
            .is_subdiagonal());
        assert!(!AlphaRelation::injection_r().is_subdiagonal());
        assert!(AlphaRelation::finite_pairs([(AlphaPoint::Inf, AlphaPoint::Inf)]).is_subdiagonal());
        let p = AlphaRelation::product(
            AlphaSet::naturals(EvPeriodicSet::singleton(3)),
            AlphaSet::naturals(EvPeriodicSet::singleton(3)),
        );
        assert!(p.is_subdiagonal());
    }

    #[test]
    fn converse_is_an_involution() {
        for r in [
            AlphaRelation::injection_r(),
            AlphaRelation::injection_s(),
            AlphaRelation::diagonal_full(),
            AlphaRelation::product(evens_inf(), AlphaSet::point(nat(2))),
        ] {
            assert!(r.converse().converse().semantically_eq(&r));
        }
    }

    #[test]
    fn domain_of_injection_r_is_everything() {
        assert_eq!(AlphaRelation::injection_r().domain(), AlphaSet::full());
    }

    #[test]
    fn preimage_commutes_with_relational_closure() {
        // injection_r is the closure of its natural part (the limit pair at
        // infinity is the only accumulation point), and preimages of clopen
        // sets under a closure are closures of preimages.
        let r = AlphaRelation::injection_r();
        let p = AlphaRelation::from_pieces([
            Piece::Tail(AffineTail::new(2, 0, 2, 0, 0).unwrap()),
            Piece::Tail(AffineTail::new(2, 1, 2, 3, 0).unwrap()),
        ]);
        for v in [
            AlphaSet::naturals(EvPeriodicSet::from_elements([4, 5])),
            AlphaSet::naturals(EvPeriodicSet::empty()),
            AlphaSet::new(EvPeriodicSet::range_from(6), true),
            AlphaSet::new(EvPeriodicSet::range_from(0), true),
        ] {
            assert!(v.is_clopen());
            assert_eq!(r.preimage(&v), p.preimage(&v).closure(), "v = {v:?}");
        }
    }

    #[test]
    fn semantic_equality_distinguishes_close_relations() {
        let r = AlphaRelation::injection_r();
        let mut pieces: Vec<Piece> = r.pieces().to_vec();
        pieces.push(Piece::Pairs([(nat(1000), nat(7))].into()));
        let r_extra = AlphaRelation::from_pieces(pieces);
        assert!(!r.semantically_eq(&r_extra));
        assert!(r.semantically_eq(&AlphaRelation::injection_r()));
    }
}
