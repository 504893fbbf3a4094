//! Finite powerset boolean algebras `℘({0..m-1})` and unary operator tables.
//!
//! Elements are bitmasks of atom indices; the element order used everywhere
//! (operator tables, enumeration output, poset labels) is the numeric order
//! of those masks. A necessity operator preserves finite meets including the
//! empty meet `1`; a possibility operator preserves finite joins including
//! `0`. The one-atom-free algebra (`m = 0`, where `0 = 1`) is permitted and
//! carries a single operator that is both.

use std::fmt;

use thiserror::Error;

/// Element masks are kept in `u32`.
pub const MAX_ATOMS: u8 = 24;
/// Cap for checking all `(2^m)^(2^m)` unary maps.
pub const BRUTE_FORCE_MAX_ATOMS: u8 = 3;
/// Cap for materializing all `2^(m*m)` relation-generated operators.
pub const RELATION_PATH_MAX_ATOMS: u8 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebras differ: {0} vs {1} atoms")]
    MismatchedAlgebras(u8, u8),
    #[error("atom count {0} exceeds the supported maximum {1}")]
    TooManyAtoms(u8, u8),
    #[error("atom index {index} out of range for {atoms} atoms")]
    AtomOutOfRange { index: u8, atoms: u8 },
    #[error("operator table is not a necessity operator")]
    NotNecessity,
    #[error("enumeration for {m} atoms exceeds the {path} cap of {cap} atoms")]
    EnumerationCap { m: u8, cap: u8, path: &'static str },
}

/// The boolean algebra of all subsets of `{0, .., atoms-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinBoolAlg {
    atoms: u8,
}

/// An element of a [`FinBoolAlg`], tagged with its ambient atom count so
/// cross-algebra misuse is detectable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElement {
    atoms: u8,
    bits: u32,
}

impl FinBoolAlg {
    pub fn new(atoms: u8) -> Result<Self, AlgebraError> {
        if atoms > MAX_ATOMS {
            return Err(AlgebraError::TooManyAtoms(atoms, MAX_ATOMS));
        }
        Ok(FinBoolAlg { atoms })
    }

    pub fn atoms(&self) -> u8 {
        self.atoms
    }

    /// Number of elements, `2^m`.
    pub fn carrier_size(&self) -> u64 {
        1u64 << self.atoms
    }

    fn mask(&self) -> u32 {
        ((1u64 << self.atoms) - 1) as u32
    }

    pub fn element(&self, bits: u32) -> AlgElement {
        debug_assert_eq!(bits & !self.mask(), 0);
        AlgElement {
            atoms: self.atoms,
            bits: bits & self.mask(),
        }
    }

    pub fn atom(&self, index: u8) -> Result<AlgElement, AlgebraError> {
        if index >= self.atoms {
            return Err(AlgebraError::AtomOutOfRange {
                index,
                atoms: self.atoms,
            });
        }
        Ok(self.element(1 << index))
    }

    pub fn top(&self) -> AlgElement {
        self.element(self.mask())
    }

    pub fn bottom(&self) -> AlgElement {
        self.element(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = AlgElement> + '_ {
        (0..self.carrier_size()).map(|bits| self.element(bits as u32))
    }

    fn check(&self, e: AlgElement) -> Result<u32, AlgebraError> {
        if e.atoms != self.atoms {
            return Err(AlgebraError::MismatchedAlgebras(self.atoms, e.atoms));
        }
        Ok(e.bits)
    }

    pub fn meet(&self, a: AlgElement, b: AlgElement) -> Result<AlgElement, AlgebraError> {
        Ok(self.element(self.check(a)? & self.check(b)?))
    }

    pub fn join(&self, a: AlgElement, b: AlgElement) -> Result<AlgElement, AlgebraError> {
        Ok(self.element(self.check(a)? | self.check(b)?))
    }

    pub fn complement(&self, a: AlgElement) -> Result<AlgElement, AlgebraError> {
        Ok(self.element(!self.check(a)? & self.mask()))
    }

    pub fn leq(&self, a: AlgElement, b: AlgElement) -> Result<bool, AlgebraError> {
        Ok(self.check(a)? & !self.check(b)? == 0)
    }
}

impl AlgElement {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn atom_indices(&self) -> Vec<u8> {
        (0..self.atoms)
            .filter(|&i| self.bits >> i & 1 == 1)
            .collect()
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.atom_indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A total unary operation on a [`FinBoolAlg`], stored positionally:
/// `table[e]` is the image of the element with mask `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryOpTable {
    atoms: u8,
    table: Vec<u32>,
}

impl UnaryOpTable {
    pub fn new(atoms: u8, table: Vec<u32>) -> Result<Self, AlgebraError> {
        let alg = FinBoolAlg::new(atoms)?;
        assert_eq!(
            table.len() as u64,
            alg.carrier_size(),
            "table must be total"
        );
        let mask = alg.mask();
        assert!(
            table.iter().all(|&v| v & !mask == 0),
            "images must lie in the same algebra"
        );
        Ok(UnaryOpTable { atoms, table })
    }

    pub fn identity(atoms: u8) -> Self {
        let size = 1u64 << atoms;
        UnaryOpTable::new(atoms, (0..size as u32).collect()).unwrap()
    }

    /// Maps everything to `1`; the top of the necessity-operator order.
    pub fn constant_top(atoms: u8) -> Self {
        let size = 1usize << atoms;
        let top = (size - 1) as u32;
        UnaryOpTable::new(atoms, vec![top; size]).unwrap()
    }

    /// Maps everything to `0`; the bottom of the possibility-operator order.
    pub fn constant_bottom(atoms: u8) -> Self {
        let size = 1usize << atoms;
        UnaryOpTable::new(atoms, vec![0; size]).unwrap()
    }

    /// Sends `1` to `1` and everything else to `0`; the bottom of the
    /// necessity-operator order.
    pub fn necessity_bottom(atoms: u8) -> Self {
        let size = 1usize << atoms;
        let top = (size - 1) as u32;
        let mut table = vec![0; size];
        table[top as usize] = top;
        UnaryOpTable::new(atoms, table).unwrap()
    }

    pub fn atoms(&self) -> u8 {
        self.atoms
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn algebra(&self) -> FinBoolAlg {
        FinBoolAlg::new(self.atoms).unwrap()
    }

    pub fn apply(&self, e: AlgElement) -> Result<AlgElement, AlgebraError> {
        let alg = self.algebra();
        let bits = alg.check(e)?;
        Ok(alg.element(self.table[bits as usize]))
    }

    pub fn apply_bits(&self, bits: u32) -> u32 {
        self.table[bits as usize]
    }

    /// `f(1) = 1` and `f(a ∧ b) = f(a) ∧ f(b)` for all pairs.
    pub fn is_necessity(&self) -> bool {
        let size = self.table.len();
        let top = (size - 1) as u32;
        if self.table[top as usize] != top {
            return false;
        }
        for a in 0..size {
            for b in 0..=a {
                let lhs = self.table[a & b];
                let rhs = self.table[a] & self.table[b];
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `f(0) = 0` and `f(a ∨ b) = f(a) ∨ f(b)` for all pairs.
    pub fn is_possibility(&self) -> bool {
        let size = self.table.len();
        if self.table[0] != 0 {
            return false;
        }
        for a in 0..size {
            for b in 0..=a {
                let lhs = self.table[a | b];
                let rhs = self.table[a] | self.table[b];
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The conjugate table `a ↦ ¬f(¬a)`; an involution exchanging necessity
    /// and possibility operators and reversing the pointwise order.
    pub fn dual(&self) -> Self {
        let size = self.table.len();
        let mask = (size - 1) as u32;
        let table = (0..size)
            .map(|a| !self.table[(!(a as u32)) as usize & mask as usize] & mask)
            .collect();
        UnaryOpTable {
            atoms: self.atoms,
            table,
        }
    }

    /// Componentwise meet `(f ∧ g)(a) = f(a) ∧ g(a)`. This is the meet in the
    /// necessity-operator order, so both inputs must be necessity operators.
    pub fn pointwise_meet(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.atoms != other.atoms {
            return Err(AlgebraError::MismatchedAlgebras(self.atoms, other.atoms));
        }
        if !self.is_necessity() || !other.is_necessity() {
            return Err(AlgebraError::NotNecessity);
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| a & b)
            .collect();
        Ok(UnaryOpTable {
            atoms: self.atoms,
            table,
        })
    }

    /// Pointwise order: `f <= g` iff `f(a) <= g(a)` for all `a`.
    pub fn leq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
            && self
                .table
                .iter()
                .zip(&other.table)
                .all(|(&a, &b)| a & !b == 0)
    }

    /// Compact label: image masks rendered as hex digits in element order.
    pub fn label(&self) -> String {
        let mut s = String::with_capacity(self.table.len());
        for &v in &self.table {
            s.push_str(&format!("{v:x}."));
        }
        s.pop();
        s
    }
}

/// All necessity operators on `m` atoms found by checking every unary map.
/// The output is sorted by table, the canonical enumeration order.
pub fn enumerate_necessity_ops_brute(m: u8) -> Result<Vec<UnaryOpTable>, AlgebraError> {
    if m > BRUTE_FORCE_MAX_ATOMS {
        return Err(AlgebraError::EnumerationCap {
            m,
            cap: BRUTE_FORCE_MAX_ATOMS,
            path: "brute-force",
        });
    }
    if m == 0 {
        return Ok(vec![UnaryOpTable::identity(0)]);
    }
    let size = 1usize << m;
    let digit_bits = m as u32;
    let digit_mask = (size - 1) as u64;
    let total: u64 = 1u64 << (digit_bits as u64 * size as u64);
    let top = (size - 1) as u32;
    let mut out = Vec::new();
    let mut table = vec![0u32; size];
    'candidates: for code in 0..total {
        // The map with entry i equal to digit i of `code` in base 2^m.
        let top_digit = (code >> (digit_bits as u64 * top as u64)) & digit_mask;
        if top_digit != top as u64 {
            continue;
        }
        for (i, t) in table.iter_mut().enumerate() {
            *t = ((code >> (digit_bits as u64 * i as u64)) & digit_mask) as u32;
        }
        for a in 0..size {
            for b in 0..=a {
                if table[a & b] != table[a] & table[b] {
                    continue 'candidates;
                }
            }
        }
        out.push(UnaryOpTable {
            atoms: m,
            table: table.clone(),
        });
    }
    out.sort_unstable_by(|a, b| a.table.cmp(&b.table));
    Ok(out)
}

/// All necessity operators on `m` atoms, generated directly from the `2^(m*m)`
/// relations on the atom set: the operator of relation `r` sends `u` to
/// `{x | r[x] ⊆ u}`. Sorted by table, matching the brute-force order.
pub fn enumerate_necessity_ops(m: u8) -> Result<Vec<UnaryOpTable>, AlgebraError> {
    if m > RELATION_PATH_MAX_ATOMS {
        return Err(AlgebraError::EnumerationCap {
            m,
            cap: RELATION_PATH_MAX_ATOMS,
            path: "relation-generated",
        });
    }
    let size = 1usize << m;
    let rel_bits = (m as u32) * (m as u32);
    let rel_count: u64 = 1u64 << rel_bits;
    let mut out = Vec::with_capacity(rel_count as usize);
    let row_mask = (size - 1) as u32;
    for rel in 0..rel_count {
        let rows: Vec<u32> = (0..m)
            .map(|x| ((rel >> (x as u32 * m as u32)) as u32) & row_mask)
            .collect();
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
        out.push(UnaryOpTable { atoms: m, table });
    }
    out.sort_unstable_by(|a, b| a.table.cmp(&b.table));
    out.dedup();
    Ok(out)
}

/// `2^(m*m)`, the number of necessity operators on `m` atoms.
pub fn necessity_op_count(m: u8) -> Result<u128, AlgebraError> {
    let bits = m as u32 * m as u32;
    if bits >= 128 {
        return Err(AlgebraError::EnumerationCap {
            m,
            cap: 11,
            path: "count",
        });
    }
    Ok(1u128 << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations_on_three_atoms() {
        let alg = FinBoolAlg::new(3).unwrap();
        let a = alg.element(0b011); // {0,1}
        let b = alg.element(0b110); // {1,2}
        assert_eq!(alg.meet(a, b).unwrap(), alg.element(0b010));
        assert_eq!(alg.join(a, b).unwrap(), alg.top());
        assert_eq!(alg.complement(alg.top()).unwrap(), alg.bottom());
        assert_eq!(alg.join(a, alg.bottom()).unwrap(), a);
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a2 = FinBoolAlg::new(2).unwrap();
        let a3 = FinBoolAlg::new(3).unwrap();
        let err = a3.meet(a2.top(), a3.top()).unwrap_err();
        assert_eq!(err, AlgebraError::MismatchedAlgebras(3, 2));
    }

    #[test]
    fn necessity_predicate_on_named_operators() {
        for m in 0..=2 {
            assert!(UnaryOpTable::identity(m).is_necessity());
            assert!(UnaryOpTable::constant_top(m).is_necessity());
            assert!(UnaryOpTable::necessity_bottom(m).is_necessity());
            assert!(UnaryOpTable::identity(m).is_possibility());
            assert!(UnaryOpTable::constant_bottom(m).is_possibility());
        }
        // Constant bottom does not fix 1, so it is not a necessity operator
        // on a nontrivial algebra.
        assert!(!UnaryOpTable::constant_bottom(2).is_necessity());
    }

    #[test]
    fn dual_swaps_named_operators() {
        assert_eq!(
            UnaryOpTable::constant_top(2).dual(),
            UnaryOpTable::constant_bottom(2)
        );
        assert_eq!(UnaryOpTable::identity(2).dual(), UnaryOpTable::identity(2));
    }

    #[test]
    fn dual_is_an_involution_on_all_256_maps() {
        // Every unary map on the 2-atom algebra, not just the operators.
        for code in 0u32..256 {
            let table: Vec<u32> = (0..4).map(|i| code >> (2 * i) & 0b11).collect();
            let f = UnaryOpTable::new(2, table).unwrap();
            assert_eq!(f.dual().dual(), f);
        }
    }

    #[test]
    fn dual_exchanges_necessity_and_possibility_and_reverses_order() {
        let ops = enumerate_necessity_ops(2).unwrap();
        for f in &ops {
            assert!(f.dual().is_possibility());
        }
        for f in &ops {
            for g in &ops {
                assert_eq!(f.leq(g), g.dual().leq(&f.dual()));
            }
        }
    }

    #[test]
    fn necessity_operators_are_monotone() {
        for m in 0..=2u8 {
            let size = 1u32 << m;
            for f in enumerate_necessity_ops(m).unwrap() {
                for a in 0..size {
                    for b in 0..size {
                        if a & !b == 0 {
                            assert_eq!(f.apply_bits(a) & !f.apply_bits(b), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pointwise_meet_laws() {
        let ops = enumerate_necessity_ops(2).unwrap();
        let top = UnaryOpTable::constant_top(2);
        for f in &ops {
            assert_eq!(&f.pointwise_meet(&top).unwrap(), f);
            assert_eq!(&f.pointwise_meet(f).unwrap(), f);
            for g in &ops {
                assert!(f.pointwise_meet(g).unwrap().is_necessity());
            }
        }
        // Non-necessity inputs are rejected.
        let bad = UnaryOpTable::constant_bottom(2);
        assert_eq!(
            top.pointwise_meet(&bad).unwrap_err(),
            AlgebraError::NotNecessity
        );
    }

    #[test]
    fn pointwise_meet_stays_necessity_at_three_atoms() {
        // Randomized closure check at m = 3: operators generated from
        // relation rows.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let from_rows = |rows: [u32; 3]| {
            let table: Vec<u32> = (0..8u32)
                .map(|u| {
                    let mut img = 0;
                    for (x, &row) in rows.iter().enumerate() {
                        if row & !u == 0 {
                            img |= 1 << x;
                        }
                    }
                    img
                })
                .collect();
            UnaryOpTable::new(3, table).unwrap()
        };
        for _ in 0..300 {
            let f = from_rows([next() as u32 & 7, next() as u32 & 7, next() as u32 & 7]);
            let g = from_rows([next() as u32 & 7, next() as u32 & 7, next() as u32 & 7]);
            assert!(f.is_necessity() && g.is_necessity());
            assert!(f.pointwise_meet(&g).unwrap().is_necessity());
        }
    }

    #[test]
    fn enumeration_counts_match_2_pow_m_squared() {
        for m in 0..=2u8 {
            let brute = enumerate_necessity_ops_brute(m).unwrap();
            let fast = enumerate_necessity_ops(m).unwrap();
            assert_eq!(brute.len() as u128, necessity_op_count(m).unwrap());
            assert_eq!(brute, fast);
        }
        assert_eq!(necessity_op_count(3).unwrap(), 512);
        assert_eq!(
            enumerate_necessity_ops_brute(4).unwrap_err(),
            AlgebraError::EnumerationCap {
                m: 4,
                cap: BRUTE_FORCE_MAX_ATOMS,
                path: "brute-force",
            }
        );
    }

    #[test]
    fn trivial_algebra_has_one_operator() {
        let ops = enumerate_necessity_ops(0).unwrap();
        assert_eq!(ops.len(), 1);
        assert!(ops[0].is_necessity());
        assert!(ops[0].is_possibility());
    }
}
