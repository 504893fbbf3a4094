//! Operators ↔ relations on the dual finite space, and the finite Vietoris
//! construction.
//!
//! A finite powerset algebra's dual space is its atom set with the discrete
//! topology, so every relation on the atoms is continuous and interior; the
//! correspondence `r ↦ Box_r` with `Box_r(U) = {x | r[x] ⊆ U}` is a bijection
//! onto the necessity operators, and it reverses order. The finite Vietoris
//! space is just the powerset of the atom set; only its subbasis sets and the
//! membership counit are materialized here, since those are what downstream
//! checks use.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::UnaryOpTable;

/// Relations are stored as `u64` masks over `m*m` pair slots.
pub const MAX_REL_ATOMS: u8 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DualityError {
    #[error("atom count {0} exceeds the relation maximum {1}")]
    TooManyAtoms(u8, u8),
    #[error("pair ({0}, {1}) out of range")]
    PairOutOfRange(u8, u8),
    #[error("operator is not a necessity operator")]
    NotNecessity,
}

/// A binary relation on the atom set of a finite powerset algebra.
/// Pair `(x, y)` occupies bit `x*m + y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteRelation {
    atoms: u8,
    bits: u64,
}

impl FiniteRelation {
    pub fn empty(atoms: u8) -> Result<Self, DualityError> {
        if atoms > MAX_REL_ATOMS {
            return Err(DualityError::TooManyAtoms(atoms, MAX_REL_ATOMS));
        }
        Ok(FiniteRelation { atoms, bits: 0 })
    }

    pub fn full(atoms: u8) -> Result<Self, DualityError> {
        let mut r = Self::empty(atoms)?;
        let slots = atoms as u32 * atoms as u32;
        r.bits = if slots == 0 {
            0
        } else {
            (!0u64) >> (64 - slots)
        };
        Ok(r)
    }

    pub fn identity(atoms: u8) -> Result<Self, DualityError> {
        let mut r = Self::empty(atoms)?;
        for x in 0..atoms {
            r.bits |= 1 << (x as u32 * atoms as u32 + x as u32);
        }
        Ok(r)
    }

    pub fn from_pairs(
        atoms: u8,
        pairs: impl IntoIterator<Item = (u8, u8)>,
    ) -> Result<Self, DualityError> {
        let mut r = Self::empty(atoms)?;
        for (x, y) in pairs {
            if x >= atoms || y >= atoms {
                return Err(DualityError::PairOutOfRange(x, y));
            }
            r.bits |= 1 << (x as u32 * atoms as u32 + y as u32);
        }
        Ok(r)
    }

    pub fn from_bits(atoms: u8, bits: u64) -> Result<Self, DualityError> {
        let full = Self::full(atoms)?;
        debug_assert_eq!(bits & !full.bits, 0);
        Ok(FiniteRelation {
            atoms,
            bits: bits & full.bits,
        })
    }

    pub fn atoms(&self) -> u8 {
        self.atoms
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: u8, y: u8) -> bool {
        self.bits >> (x as u32 * self.atoms as u32 + y as u32) & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for x in 0..self.atoms {
            for y in 0..self.atoms {
                if self.contains(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The set `r[x]` as an element mask.
    pub fn row_mask(&self, x: u8) -> u32 {
        let m = self.atoms as u32;
        ((self.bits >> (x as u32 * m)) as u32) & (((1u64 << m) - 1) as u32)
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.atoms, other.atoms);
        FiniteRelation {
            atoms: self.atoms,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.atoms, other.atoms);
        FiniteRelation {
            atoms: self.atoms,
            bits: self.bits & other.bits,
        }
    }

    pub fn complement(&self) -> Self {
        let full = Self::full(self.atoms).unwrap();
        FiniteRelation {
            atoms: self.atoms,
            bits: full.bits & !self.bits,
        }
    }

    pub fn converse(&self) -> Self {
        let mut r = Self::empty(self.atoms).unwrap();
        for (x, y) in self.pairs() {
            r.bits |= 1 << (y as u32 * self.atoms as u32 + x as u32);
        }
        r
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.atoms == other.atoms && self.bits & !other.bits == 0
    }
}

/// All `2^(m*m)` relations on `m` atoms, ascending by mask.
pub fn all_relations(atoms: u8) -> Result<impl Iterator<Item = FiniteRelation>, DualityError> {
    if atoms > 4 {
        return Err(DualityError::TooManyAtoms(atoms, 4));
    }
    let count = 1u64 << (atoms as u32 * atoms as u32);
    Ok((0..count).map(move |bits| FiniteRelation { atoms, bits }))
}

/// `Box_r(U) = {x | r[x] ⊆ U}`; always a necessity operator.
pub fn relation_to_box(r: &FiniteRelation) -> UnaryOpTable {
    let m = r.atoms;
    let size = 1usize << m;
    let rows: Vec<u32> = (0..m).map(|x| r.row_mask(x)).collect();
    let table: Vec<u32> = (0..size as u32)
        .map(|u| {
            let mut img = 0u32;
            for (x, &row) in rows.iter().enumerate() {
                if row & !u == 0 {
                    img |= 1 << x;
                }
            }
            img
        })
        .collect();
    UnaryOpTable::new(m, table).unwrap()
}

/// `Diamond_r(U) = {x | r[x] ∩ U ≠ ∅} = r⁻¹[U]`; always a possibility
/// operator, and equal to the dual of [`relation_to_box`].
pub fn relation_to_diamond(r: &FiniteRelation) -> UnaryOpTable {
    let m = r.atoms;
    let size = 1usize << m;
    let rows: Vec<u32> = (0..m).map(|x| r.row_mask(x)).collect();
    let table: Vec<u32> = (0..size as u32)
        .map(|u| {
            let mut img = 0u32;
            for (x, &row) in rows.iter().enumerate() {
                if row & u != 0 {
                    img |= 1 << x;
                }
            }
            img
        })
        .collect();
    UnaryOpTable::new(m, table).unwrap()
}

/// Inverse of [`relation_to_box`]: atom `x` is related to atom `y` exactly
/// when every `u` with `x ∈ f(u)` contains `y`, i.e. `y` lies in the
/// intersection of all such `u`.
pub fn box_to_relation(f: &UnaryOpTable) -> Result<FiniteRelation, DualityError> {
    if !f.is_necessity() {
        return Err(DualityError::NotNecessity);
    }
    let m = f.atoms();
    let size = 1u32 << m;
    let mask = size - 1;
    let mut rel = FiniteRelation::empty(m)?;
    for x in 0..m {
        let mut acc = mask;
        for u in 0..size {
            if f.apply_bits(u) >> x & 1 == 1 {
                acc &= u;
            }
        }
        for y in 0..m {
            if acc >> y & 1 == 1 {
                rel.bits |= 1 << (x as u32 * m as u32 + y as u32);
            }
        }
    }
    Ok(rel)
}

/// Inclusion of relations reverses the operator order: exhaustive over all
/// relation pairs for `m <= 2`, sampled (1000 fixed-seed pairs) at `m = 3`.
pub fn jt_antitone_check(m: u8) -> Result<bool, DualityError> {
    match m {
        0..=2 => {
            let rels: Vec<_> = all_relations(m)?.collect();
            for r in &rels {
                for s in &rels {
                    if r.is_subset(s) && !relation_to_box(s).leq(&relation_to_box(r)) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        3 => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x414e5449_544f4e45);
            let full = FiniteRelation::full(3)?.bits;
            for _ in 0..1000 {
                let r_bits: u64 = rng.gen::<u64>() & full;
                let extra: u64 = rng.gen::<u64>() & full;
                let r = FiniteRelation::from_bits(3, r_bits)?;
                let s = FiniteRelation::from_bits(3, r_bits | extra)?;
                if !relation_to_box(&s).leq(&relation_to_box(&r)) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(DualityError::TooManyAtoms(m, 3)),
    }
}

/// The finite Vietoris space of a discrete atom set: its points are all
/// subsets (the closed sets), encoded as element masks.
#[derive(Debug, Clone, Copy)]
pub struct VietorisSpace {
    atoms: u8,
}

impl VietorisSpace {
    pub fn new(atoms: u8) -> Result<Self, DualityError> {
        if atoms > MAX_REL_ATOMS {
            return Err(DualityError::TooManyAtoms(atoms, MAX_REL_ATOMS));
        }
        Ok(VietorisSpace { atoms })
    }

    pub fn point_count(&self) -> u64 {
        1u64 << self.atoms
    }

    pub fn points(&self) -> impl Iterator<Item = u32> {
        0..self.point_count() as u32
    }

    /// `Box_u = {F | F ⊆ u}` and `Diamond_u = {F | F ∩ u ≠ ∅}`, as sorted
    /// point lists.
    pub fn subbasis(&self, u: u32) -> (Vec<u32>, Vec<u32>) {
        let boxes = self.points().filter(|&f| f & !u == 0).collect();
        let diamonds = self.points().filter(|&f| f & u != 0).collect();
        (boxes, diamonds)
    }
}

/// The mediating map `x ↦ r[x]` into the Vietoris space; composing membership
/// with it reproduces `r`, and it is the unique map that does.
pub fn vietoris_rho(r: &FiniteRelation) -> Vec<u32> {
    (0..r.atoms()).map(|x| r.row_mask(x)).collect()
}

/// Whether `∋ ∘ rho` equals `r`, i.e. `(x, y) ∈ r ⟺ y ∈ rho[x]`.
pub fn counit_holds(r: &FiniteRelation, rho: &[u32]) -> bool {
    if rho.len() != r.atoms() as usize {
        return false;
    }
    (0..r.atoms())
        .all(|x| (0..r.atoms()).all(|y| r.contains(x, y) == (rho[x as usize] >> y & 1 == 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_necessity_ops;

    #[test]
    fn named_relations_to_named_operators() {
        let empty = FiniteRelation::empty(2).unwrap();
        let full = FiniteRelation::full(2).unwrap();
        let id = FiniteRelation::identity(2).unwrap();
        assert_eq!(relation_to_box(&empty), UnaryOpTable::constant_top(2));
        assert_eq!(relation_to_box(&full), UnaryOpTable::necessity_bottom(2));
        assert_eq!(relation_to_box(&id), UnaryOpTable::identity(2));
        assert_eq!(
            relation_to_diamond(&empty),
            UnaryOpTable::constant_bottom(2)
        );
        assert_eq!(relation_to_diamond(&id), UnaryOpTable::identity(2));
    }

    #[test]
    fn diamond_of_single_pair() {
        let r = FiniteRelation::from_pairs(2, [(0, 1)]).unwrap();
        let d = relation_to_diamond(&r);
        // Diamond({1}) = {0}
        assert_eq!(d.apply_bits(0b10), 0b01);
    }

    #[test]
    fn diamond_is_dual_of_box() {
        for r in all_relations(2).unwrap() {
            assert_eq!(relation_to_diamond(&r), relation_to_box(&r).dual());
        }
    }

    #[test]
    fn round_trips_are_bijective_at_m2() {
        let mut seen = std::collections::BTreeSet::new();
        for r in all_relations(2).unwrap() {
            let f = relation_to_box(&r);
            assert_eq!(box_to_relation(&f).unwrap(), r);
            seen.insert(f);
        }
        assert_eq!(seen.len(), 16);
        for f in enumerate_necessity_ops(2).unwrap() {
            let r = box_to_relation(&f).unwrap();
            assert_eq!(relation_to_box(&r), f);
        }
    }

    #[test]
    fn round_trip_sampled_at_m3() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x524f554e44);
        let full = FiniteRelation::full(3).unwrap().bits();
        for _ in 0..1000 {
            let r = FiniteRelation::from_bits(3, rng.gen::<u64>() & full).unwrap();
            assert_eq!(box_to_relation(&relation_to_box(&r)).unwrap(), r);
        }
    }

    #[test]
    fn box_to_relation_on_named_operators() {
        assert_eq!(
            box_to_relation(&UnaryOpTable::constant_top(2)).unwrap(),
            FiniteRelation::empty(2).unwrap()
        );
        assert_eq!(
            box_to_relation(&UnaryOpTable::identity(2)).unwrap(),
            FiniteRelation::identity(2).unwrap()
        );
        assert_eq!(
            box_to_relation(&UnaryOpTable::constant_bottom(2)).unwrap_err(),
            DualityError::NotNecessity
        );
    }

    #[test]
    fn antitone_at_small_sizes() {
        assert!(jt_antitone_check(0).unwrap());
        assert!(jt_antitone_check(1).unwrap());
        assert!(jt_antitone_check(2).unwrap());
        // Box of the full relation is the bottom operator.
        let full = FiniteRelation::full(2).unwrap();
        for r in all_relations(2).unwrap() {
            assert!(relation_to_box(&full).leq(&relation_to_box(&r)));
        }
    }

    #[test]
    fn join_of_relations_is_meet_of_boxes() {
        let rels: Vec<_> = all_relations(2).unwrap().collect();
        for r in &rels {
            for s in &rels {
                let lhs = relation_to_box(&r.union(s));
                let rhs = relation_to_box(r)
                    .pointwise_meet(&relation_to_box(s))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // The worked instance: {(0,0)} ∧ {(1,1)} = {(0,0),(1,1)}.
        let a = FiniteRelation::from_pairs(2, [(0, 0)]).unwrap();
        let b = FiniteRelation::from_pairs(2, [(1, 1)]).unwrap();
        let both = FiniteRelation::from_pairs(2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(
            relation_to_box(&a)
                .pointwise_meet(&relation_to_box(&b))
                .unwrap(),
            relation_to_box(&both)
        );
    }

    #[test]
    fn vietoris_counit_and_uniqueness() {
        for r in all_relations(2).unwrap() {
            let rho = vietoris_rho(&r);
            assert!(counit_holds(&r, &rho));
            // Perturbing rho at any point breaks the counit law.
            for x in 0..2usize {
                for other in 0u32..4 {
                    if other == rho[x] {
                        continue;
                    }
                    let mut bad = rho.clone();
                    bad[x] = other;
                    assert!(!counit_holds(&r, &bad));
                }
            }
        }
    }

    #[test]
    fn vietoris_subbasis_laws() {
        let space = VietorisSpace::new(3).unwrap();
        assert_eq!(space.point_count(), 8);
        let all: Vec<u32> = space.points().collect();
        let (box_full, _) = space.subbasis(0b111);
        assert_eq!(box_full, all);
        let (box_empty, diamond_empty) = space.subbasis(0);
        assert_eq!(box_empty, vec![0]);
        assert!(diamond_empty.is_empty());
        // Box over the complement is the complement of Diamond, and dually.
        for u in 0u32..8 {
            let uc = !u & 0b111;
            let (bx, dm) = space.subbasis(u);
            let (bxc, dmc) = space.subbasis(uc);
            let complement =
                |pts: &[u32]| -> Vec<u32> { space.points().filter(|p| !pts.contains(p)).collect() };
            assert_eq!(bxc, complement(&dm));
            assert_eq!(dmc, complement(&bx));
        }
    }
}
