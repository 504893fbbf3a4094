//! Tense operators on finite powerset algebras.
//!
//! A necessity operator is a tense necessity operator when its dual
//! possibility operator has a conjugate, equivalently when the operator has
//! a left adjoint. On finite algebras finite meet preservation is all meet
//! preservation, so every necessity operator qualifies; the point of the
//! battery here is to evaluate the five classical characterizations
//! independently and check that they agree, rather than assume the theory.
//!
//! The second half implements the relational presentation of tense
//! operators: relations `R ⊆ B × B` compatible with arbitrary meets in both
//! coordinates (the `(†)` condition), the mutually inverse monotone maps
//! `□ ↦ {(a,b) | □a ∨ b = 1}` and `R ↦ (a ↦ ¬⋀R[a])`, and the pairing of
//! operators with relations on the atom set through `□ ↦ {(x,y) | y ∈
//! □(M∖{x})}`, whose exact relationship to the operator/relation
//! correspondence is itself established computationally.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{enumerate_necessity_ops, UnaryOpTable};
use crate::alpha;
use crate::duality::{all_relations, box_to_relation, relation_to_diamond, FiniteRelation};
use crate::evset::EvPeriodicSet;
use crate::report::Check;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TenseError {
    #[error("operator is not a necessity operator")]
    NotNecessity,
    #[error("operator is not a tense necessity operator")]
    NotTense,
    #[error("carrier size {0} exceeds the cap {1}")]
    CapExceeded(usize, usize),
    #[error("relation does not satisfy the double-meet compatibility condition")]
    NotMeetCompatible,
}

/// Carrier-size cap for subset-indexed checks (`2^carrier` subsets).
pub const MEET_SUBSET_CAP: usize = 16;

fn possibility_ops(m: u8) -> Vec<UnaryOpTable> {
    enumerate_necessity_ops(m)
        .expect("atom cap")
        .into_iter()
        .map(|f| f.dual())
        .collect()
}

/// A pair of conjugate possibility operators: `◇F a ∧ b = 0` exactly when
/// `◇P b ∧ a = 0`. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatePair {
    pub diamond_f: UnaryOpTable,
    pub diamond_p: UnaryOpTable,
}

impl ConjugatePair {
    pub fn new(diamond_f: UnaryOpTable, diamond_p: UnaryOpTable) -> Result<Self, TenseError> {
        if !diamond_f.is_possibility() || !diamond_p.is_possibility() {
            return Err(TenseError::NotTense);
        }
        if !are_conjugate(&diamond_f, &diamond_p) {
            return Err(TenseError::NotTense);
        }
        Ok(ConjugatePair {
            diamond_f,
            diamond_p,
        })
    }
}

pub fn are_conjugate(f: &UnaryOpTable, p: &UnaryOpTable) -> bool {
    let size = 1u32 << f.atoms();
    (0..size).all(|a| (0..size).all(|b| (f.apply_bits(a) & b == 0) == (p.apply_bits(b) & a == 0)))
}

/// The left adjoint of a necessity operator: `a ↦ ⋀{x | a <= □x}`.
pub fn left_adjoint(box_op: &UnaryOpTable) -> Result<UnaryOpTable, TenseError> {
    if !box_op.is_necessity() {
        return Err(TenseError::NotNecessity);
    }
    let m = box_op.atoms();
    let size = 1u32 << m;
    let mask = size - 1;
    let table: Vec<u32> = (0..size)
        .map(|a| {
            let mut acc = mask;
            for x in 0..size {
                if a & !box_op.apply_bits(x) == 0 {
                    acc &= x;
                }
            }
            acc
        })
        .collect();
    let adj = UnaryOpTable::new(m, table).unwrap();
    debug_assert!(adj.is_possibility());
    debug_assert!(adjunction_holds(&adj, box_op));
    Ok(adj)
}

/// `◇P a <= b ⟺ a <= □ b` for all pairs.
pub fn adjunction_holds(diamond_p: &UnaryOpTable, box_op: &UnaryOpTable) -> bool {
    let size = 1u32 << box_op.atoms();
    (0..size).all(|a| {
        (0..size).all(|b| (diamond_p.apply_bits(a) & !b == 0) == (a & !box_op.apply_bits(b) == 0))
    })
}

/// Independent evaluation of the five characterizations of a tense
/// necessity operator, each by its own search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TenseBatteryReport {
    /// Some possibility operator is conjugate to the dual of the input.
    pub conjugate_exists: bool,
    /// Some possibility operator is left adjoint to the input.
    pub adjoint_exists: bool,
    /// Some possibility operator satisfies `a <= □◇a` and `◇□a <= a`.
    pub unit_counit: bool,
    /// Some possibility operator satisfies both unit laws, the second
    /// through the dual pair.
    pub double_unit: bool,
    /// The canonical meets `⋀{x | a <= □x}` exist and are preserved by the
    /// operator.
    pub preserves_canonical_meets: bool,
    pub all_agree: bool,
}

impl TenseBatteryReport {
    pub fn all_true(&self) -> bool {
        self.all_agree
            && self.conjugate_exists
            && self.adjoint_exists
            && self.unit_counit
            && self.double_unit
            && self.preserves_canonical_meets
    }
}

pub fn equivalence_battery(box_op: &UnaryOpTable) -> Result<TenseBatteryReport, TenseError> {
    if !box_op.is_necessity() {
        return Err(TenseError::NotNecessity);
    }
    let m = box_op.atoms();
    let size = 1u32 << m;
    let mask = size - 1;
    let diamond_f = box_op.dual();
    let candidates = possibility_ops(m);

    let conjugate_exists = candidates.iter().any(|g| are_conjugate(&diamond_f, g));
    let adjoint_exists = candidates.iter().any(|g| adjunction_holds(g, box_op));
    let unit_counit = candidates.iter().any(|g| {
        (0..size).all(|a| {
            a & !box_op.apply_bits(g.apply_bits(a)) == 0
                && g.apply_bits(box_op.apply_bits(a)) & !a == 0
        })
    });
    let double_unit = candidates.iter().any(|g| {
        let box_p = g.dual();
        (0..size).all(|a| {
            a & !box_op.apply_bits(g.apply_bits(a)) == 0
                && a & !box_p.apply_bits(diamond_f.apply_bits(a)) == 0
        })
    });
    let preserves_canonical_meets = (0..size).all(|a| {
        let mut meet = mask;
        let mut meet_of_images = mask;
        for x in 0..size {
            if a & !box_op.apply_bits(x) == 0 {
                meet &= x;
                meet_of_images &= box_op.apply_bits(x);
            }
        }
        box_op.apply_bits(meet) == meet_of_images
    });

    let all_agree = [
        conjugate_exists,
        adjoint_exists,
        unit_counit,
        double_unit,
        preserves_canonical_meets,
    ]
    .windows(2)
    .all(|w| w[0] == w[1]);

    Ok(TenseBatteryReport {
        conjugate_exists,
        adjoint_exists,
        unit_counit,
        double_unit,
        preserves_canonical_meets,
        all_agree,
    })
}

/// `□⋀S = ⋀□[S]` over every subset `S` of the carrier, empty subset
/// included (both sides are then the top).
pub fn is_completely_meet_preserving(box_op: &UnaryOpTable) -> Result<bool, TenseError> {
    if !box_op.is_necessity() {
        return Err(TenseError::NotNecessity);
    }
    let size = 1usize << box_op.atoms();
    if size > MEET_SUBSET_CAP {
        return Err(TenseError::CapExceeded(size, MEET_SUBSET_CAP));
    }
    let mask = (size - 1) as u32;
    for subset in 0u32..(1u32 << size) {
        let mut meet = mask;
        let mut meet_images = mask;
        for x in 0..size as u32 {
            if subset >> x & 1 == 1 {
                meet &= x;
                meet_images &= box_op.apply_bits(x);
            }
        }
        if box_op.apply_bits(meet) != meet_images {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A relation on the carrier of a finite powerset algebra satisfying the
/// double-meet compatibility condition: `(⋀S, ⋀T) ∈ R` iff `(a, b) ∈ R` for
/// all `a ∈ S`, `b ∈ T`. Validated exhaustively on construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MeetCompatibleRelation {
    atoms: u8,
    /// Pair `(a, b)` of element masks occupies bit `a * carrier + b`.
    bits: Vec<u64>,
}

impl MeetCompatibleRelation {
    pub fn new(atoms: u8, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, TenseError> {
        let carrier = 1usize << atoms;
        if carrier > MEET_SUBSET_CAP {
            return Err(TenseError::CapExceeded(carrier, MEET_SUBSET_CAP));
        }
        let words = (carrier * carrier).div_ceil(64);
        let mut bits = vec![0u64; words];
        for (a, b) in pairs {
            let slot = a as usize * carrier + b as usize;
            bits[slot / 64] |= 1 << (slot % 64);
        }
        let r = MeetCompatibleRelation { atoms, bits };
        if !r.compatibility_holds() {
            return Err(TenseError::NotMeetCompatible);
        }
        Ok(r)
    }

    fn from_raw(atoms: u8, bits: Vec<u64>) -> MeetCompatibleRelation {
        MeetCompatibleRelation { atoms, bits }
    }

    pub fn atoms(&self) -> u8 {
        self.atoms
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        let carrier = 1usize << self.atoms;
        let slot = a as usize * carrier + b as usize;
        self.bits[slot / 64] >> (slot % 64) & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let carrier = 1u32 << self.atoms;
        let mut out = Vec::new();
        for a in 0..carrier {
            for b in 0..carrier {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_subset(&self, other: &MeetCompatibleRelation) -> bool {
        self.atoms == other.atoms
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(&a, &b)| a & !b == 0)
    }

    /// `R[a]` as a bitset over carrier elements.
    fn row_set(&self, a: u32) -> u32 {
        let carrier = 1u32 << self.atoms;
        let mut row = 0u32;
        for b in 0..carrier {
            if self.contains(a, b) {
                row |= 1 << b;
            }
        }
        row
    }

    /// Literal exhaustive check over all subset pairs of the carrier.
    pub fn compatibility_holds_exhaustive(&self) -> bool {
        let carrier = 1usize << self.atoms;
        assert!(carrier <= 8, "exhaustive route only for carriers up to 8");
        let top = (carrier - 1) as u32;
        // rowcap[S] = ⋂_{a ∈ S} R[a]; meets[S] = ⋀S.
        let subsets = 1usize << carrier;
        let mut rowcap = vec![0u32; subsets];
        let mut meets = vec![0u32; subsets];
        let full_row = (1u32 << carrier) - 1;
        rowcap[0] = full_row;
        meets[0] = top;
        for s in 1..subsets {
            let low = s.trailing_zeros();
            let rest = s & (s - 1);
            rowcap[s] = rowcap[rest] & self.row_set(low);
            meets[s] = meets[rest] & low;
        }
        for s in 0..subsets {
            for t in 0..subsets {
                let lhs = self.contains(meets[s], meets[t]);
                let rhs = (t as u32) & !rowcap[s] == 0;
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Equivalent quantifier-free form: for each subset meet `m` with row
    /// intersection `A`, the row of `m` must contain every meet of a subset
    /// of `A` and avoid everything below any element outside `A`. (A meet
    /// `⋀T` with `T ⊆ A` realizes exactly the meet-closure of `A`, and
    /// `⋀T` with `T ⊄ A` realizes exactly the down-sets of the complement.)
    pub fn compatibility_holds(&self) -> bool {
        let carrier = 1usize << self.atoms;
        if carrier <= 8 {
            return self.compatibility_holds_exhaustive();
        }
        let top = (carrier - 1) as u32;
        let full_row = if carrier == 32 {
            u32::MAX
        } else {
            (1u32 << carrier) - 1
        };
        let rows: Vec<u32> = (0..carrier as u32).map(|a| self.row_set(a)).collect();
        let meet_closure = |set: u32| -> u32 {
            let mut closure = 1u32 << top; // empty meet
            let mut frontier: Vec<u32> =
                (0..carrier as u32).filter(|&c| set >> c & 1 == 1).collect();
            while let Some(c) = frontier.pop() {
                if closure >> c & 1 == 1 {
                    continue;
                }
                closure |= 1 << c;
                for d in 0..carrier as u32 {
                    if closure >> d & 1 == 1 {
                        let m = c & d;
                        if closure >> m & 1 == 0 {
                            frontier.push(m);
                        }
                    }
                }
            }
            closure
        };
        let down_union = |outside: u32| -> u32 {
            let mut bad = 0u32;
            for t in 0..carrier as u32 {
                if outside >> t & 1 == 1 {
                    for c in 0..carrier as u32 {
                        if c & !t == 0 {
                            bad |= 1 << c;
                        }
                    }
                }
            }
            bad
        };
        for subset in 0u32..(1u32 << carrier) {
            let mut m = top;
            let mut cap = full_row;
            for a in 0..carrier as u32 {
                if subset >> a & 1 == 1 {
                    m &= a;
                    cap &= rows[a as usize];
                }
            }
            let row_m = rows[m as usize];
            if meet_closure(cap) & !row_m != 0 {
                return false;
            }
            if row_m & down_union(full_row & !cap) != 0 {
                return false;
            }
        }
        true
    }

    /// The three structural consequences of the compatibility condition:
    /// each row contains its meet, each row is the principal up-set of that
    /// meet, and rows grow monotonically.
    pub fn structural_facts_hold(&self) -> bool {
        let carrier = 1u32 << self.atoms;
        let top = carrier - 1;
        for a in 0..carrier {
            let row = self.row_set(a);
            let mut meet = top;
            for b in 0..carrier {
                if row >> b & 1 == 1 {
                    meet &= b;
                }
            }
            if row >> meet & 1 == 0 {
                return false;
            }
            for b in 0..carrier {
                let above = meet & !b == 0;
                if (row >> b & 1 == 1) != above {
                    return false;
                }
            }
            for a2 in 0..carrier {
                if a & !a2 == 0 && row & !self.row_set(a2) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// `□ ↦ {(a, b) | □a ∨ b = 1}`, into the compatible relations.
pub fn operator_to_compatible_relation(
    box_op: &UnaryOpTable,
) -> Result<MeetCompatibleRelation, TenseError> {
    let adj = left_adjoint(box_op)?;
    if !adjunction_holds(&adj, box_op) {
        return Err(TenseError::NotTense);
    }
    let carrier = 1u32 << box_op.atoms();
    let top = carrier - 1;
    let pairs = (0..carrier).flat_map(|a| {
        (0..carrier).filter_map(move |b| (box_op.apply_bits(a) | b == top).then_some((a, b)))
    });
    MeetCompatibleRelation::new(box_op.atoms(), pairs)
}

/// `R ↦ (a ↦ ¬⋀R[a])`, back to tense necessity operators.
pub fn compatible_relation_to_operator(
    r: &MeetCompatibleRelation,
) -> Result<UnaryOpTable, TenseError> {
    if !r.compatibility_holds() {
        return Err(TenseError::NotMeetCompatible);
    }
    let carrier = 1u32 << r.atoms();
    let top = carrier - 1;
    let table: Vec<u32> = (0..carrier)
        .map(|a| {
            let mut meet = top;
            for b in 0..carrier {
                if r.contains(a, b) {
                    meet &= b;
                }
            }
            !meet & top
        })
        .collect();
    let op = UnaryOpTable::new(r.atoms(), table).unwrap();
    if !op.is_necessity() {
        return Err(TenseError::NotMeetCompatible);
    }
    Ok(op)
}

/// Brute force over all `2^(carrier²)` candidate relations; only feasible
/// for `m <= 2`.
pub fn enumerate_meet_compatible_relations(
    m: u8,
) -> Result<Vec<MeetCompatibleRelation>, TenseError> {
    let carrier = 1usize << m;
    let slots = carrier * carrier;
    if slots > 16 {
        return Err(TenseError::CapExceeded(slots, 16));
    }
    let mut out = Vec::new();
    for code in 0u64..(1u64 << slots) {
        let r = MeetCompatibleRelation::from_raw(m, vec![code]);
        if r.compatibility_holds() {
            out.push(r);
        }
    }
    Ok(out)
}

/// The pairing `□ ↦ {(x, y) ∈ M × M | y ∈ □(M ∖ {x})}` on the atom set,
/// exactly as displayed.
pub fn tno_powerset_map(box_op: &UnaryOpTable) -> Result<FiniteRelation, TenseError> {
    if !box_op.is_necessity() {
        return Err(TenseError::NotNecessity);
    }
    let m = box_op.atoms();
    let mask = (1u32 << m) - 1;
    let pairs = (0..m).flat_map(|x| {
        let img = box_op.apply_bits(mask & !(1 << x));
        (0..m).filter_map(move |y| (img >> y & 1 == 1).then_some((x, y)))
    });
    FiniteRelation::from_pairs(m, pairs).map_err(|_| TenseError::CapExceeded(m as usize, 8))
}

/// Computational identification of the displayed pairing against the
/// operator/relation correspondence, evaluated over every operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingMapReport {
    pub bijective: bool,
    pub order_isomorphism: bool,
    /// The displayed map equals graph complementation composed with
    /// conversion of the dual relation.
    pub matches_complement_of_converse: bool,
    /// Whether plain graph complementation (no conversion) also matches;
    /// false as soon as a non-symmetric operator appears.
    pub matches_plain_complement: bool,
}

pub fn pairing_map_report(m: u8) -> Result<PairingMapReport, TenseError> {
    let ops = enumerate_necessity_ops(m).map_err(|_| TenseError::CapExceeded(m as usize, 4))?;
    let full = FiniteRelation::full(m).unwrap();
    let mut images = BTreeSet::new();
    let mut matches_cc = true;
    let mut matches_c = true;
    let mut literals = Vec::new();
    for op in &ops {
        let literal = tno_powerset_map(op)?;
        let jt = box_to_relation(op).unwrap();
        let complement_converse =
            FiniteRelation::from_bits(m, full.bits() & !jt.converse().bits()).unwrap();
        let complement = FiniteRelation::from_bits(m, full.bits() & !jt.bits()).unwrap();
        matches_cc &= literal == complement_converse;
        matches_c &= literal == complement;
        images.insert(literal);
        literals.push(literal);
    }
    let bijective = images.len() == ops.len()
        && images.len() as u128 == crate::algebra::necessity_op_count(m).unwrap();
    let mut order_isomorphism = true;
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate() {
            if a.leq(b) != literals[i].is_subset(&literals[j]) {
                order_isomorphism = false;
            }
        }
    }
    Ok(PairingMapReport {
        bijective,
        order_isomorphism,
        matches_complement_of_converse: matches_cc,
        matches_plain_complement: matches_c,
    })
}

/// Down-directed nonempty families of elements, checked against both
/// intersection-exchange laws on a finite algebra.
fn esakia_finite_holds(m: u8) -> bool {
    let carrier = 1u32 << m;
    let mask = carrier - 1;
    let family_count = 1u64 << carrier;
    for family in 1..family_count {
        let members: Vec<u32> = (0..carrier).filter(|&u| family >> u & 1 == 1).collect();
        let directed = members.iter().all(|&u| {
            members
                .iter()
                .all(|&v| members.iter().any(|&w| w & !(u & v) == 0))
        });
        if !directed {
            continue;
        }
        let inter = members.iter().fold(mask, |acc, &u| acc & u);
        for rel in all_relations(m).unwrap() {
            let diamond = relation_to_diamond(&rel);
            let lhs = members
                .iter()
                .fold(mask, |acc, &u| acc & diamond.apply_bits(u));
            if lhs != diamond.apply_bits(inter) {
                return false;
            }
            let forward = relation_to_diamond(&rel.converse());
            let lhs2 = members
                .iter()
                .fold(mask, |acc, &u| acc & forward.apply_bits(u));
            if lhs2 != forward.apply_bits(inter) {
                return false;
            }
        }
    }
    true
}

/// Bridging report: on finite algebras every necessity operator is tense
/// (the operator and tense-operator posets coincide), the displayed pairing
/// is identified computationally, and the compactified-space engine
/// supplies the interior-order counterexamples.
pub fn interior_bridge_check(truncation: u64) -> Vec<Check> {
    let mut checks = Vec::new();

    for m in 0..=2u8 {
        let ops = enumerate_necessity_ops(m).unwrap();
        let tense_count = ops
            .iter()
            .filter(|op| equivalence_battery(op).unwrap().all_true())
            .count();
        checks.push(Check::new(
            format!("finite-tense-count-m{m}"),
            "on a finite powerset algebra every necessity operator is a \
             tense necessity operator, so the two operator posets coincide",
            vec![format!("m = {m}")],
            format!("necessity {} / tense {}", ops.len(), tense_count),
            tense_count == ops.len(),
        ));
    }

    {
        let report = pairing_map_report(2).unwrap();
        let ok =
            report.bijective && report.order_isomorphism && report.matches_complement_of_converse;
        checks.push(
            Check::new(
                "atom-pairing-identification",
                "the displayed pairing into relations on the atom set is a \
                 bijective order isomorphism and equals graph complementation \
                 after conversion of the dual relation; plain complementation \
                 fails on non-symmetric operators",
                vec!["m = 2".into()],
                format!(
                    "bijective {}, order iso {}, complement-of-converse {}, plain complement {}",
                    report.bijective,
                    report.order_isomorphism,
                    report.matches_complement_of_converse,
                    report.matches_plain_complement
                ),
                ok,
            )
            .with_witness(if report.matches_plain_complement {
                "plain complement also matched (unexpected)"
            } else {
                "plain complement ruled out by a non-symmetric operator"
            }),
        );
    }

    {
        let d = alpha::AlphaRelation::diagonal_full();
        let r = alpha::AlphaRelation::injection_r();
        let s = alpha::AlphaRelation::injection_s();
        let all_interior = [&d, &r, &s]
            .iter()
            .all(|rel| matches!(alpha::is_interior(rel), Ok(v) if v.is_yes()));
        checks.push(Check::new(
            "compactified-ingredients-interior",
            "the diagonal and both shifted injections are interior relations",
            vec![d.to_string(), r.to_string(), s.to_string()],
            format!("all interior: {all_interior}"),
            all_interior,
        ));

        let dr = d.intersect(&r);
        let ds = d.intersect(&s);
        let rep_r = alpha::subdiagonal_analysis(&dr).unwrap();
        let rep_s = alpha::subdiagonal_analysis(&ds).unwrap();
        let oracle = alpha::Truncation::new(truncation);
        let oracle_ok =
            oracle.check_slices(&dr).is_ok() && oracle.check_slices(&ds).is_ok();
        let ok = rep_r.greatest_clopen_subset.is_none()
            && rep_s.greatest_clopen_subset.is_none()
            && rep_r.all_clopen_subsets_finite
            && rep_s.all_clopen_subsets_finite
            && oracle_ok;
        checks.push(Check::new(
            "interior-order-meets-absent",
            "within the interior-relation order the diagonal has no meet \
             with either injection, and no interior parts of the two \
             injections union to the diagonal",
            vec![dr.to_string(), ds.to_string()],
            format!(
                "domains {} and {}; no greatest clopen subsets; all candidate \
                 parts finite; truncation agreement at depth {truncation}: {oracle_ok}",
                rep_r.domain, rep_s.domain
            ),
            ok,
        ));
    }

    {
        // Symmetric relations: interiority coincides with continuity.
        let samples = [
            alpha::AlphaRelation::diagonal_full(),
            alpha::AlphaRelation::diagonal(crate::alpha::AlphaSet::naturals(
                EvPeriodicSet::from_elements([0, 2, 5]),
            )),
            alpha::AlphaRelation::finite_pairs([
                (alpha::AlphaPoint::Nat(1), alpha::AlphaPoint::Nat(4)),
                (alpha::AlphaPoint::Nat(4), alpha::AlphaPoint::Nat(1)),
            ]),
        ];
        let mut ok = true;
        for rel in &samples {
            assert!(rel.semantically_eq(&rel.converse()));
            let cont = alpha::is_continuous(rel);
            match cont {
                alpha::ContinuityVerdict::Yes(_) => {
                    ok &= matches!(alpha::is_interior(rel), Ok(v) if v.is_yes());
                }
                alpha::ContinuityVerdict::No(_) => {
                    ok &= alpha::is_interior(rel).is_err();
                }
                alpha::ContinuityVerdict::Unknown { .. } => ok = false,
            }
        }
        checks.push(Check::new(
            "symmetric-interior-iff-continuous",
            "for symmetric relations the interiority verdict coincides with \
             the continuity verdict",
            samples.iter().map(|r| r.to_string()).collect(),
            format!("agreement on {} samples", samples.len()),
            ok,
        ));
    }

    {
        let ok = esakia_finite_holds(1) && esakia_finite_holds(2);
        checks.push(Check::new(
            "directed-intersection-exchange-finite",
            "for every nonempty down-directed family of elements of a finite \
             algebra, preimages and images exchange with the family \
             intersection under every relation",
            vec!["m = 1".into(), "m = 2".into()],
            "exhaustive over all families and relations",
            ok,
        ));
    }

    {
        // The descending-chain instance on the compactified space: the
        // preimages of the neighborhoods of infinity intersect down to the
        // preimage of their intersection.
        let r = alpha::AlphaRelation::injection_r();
        let mut ok = true;
        let mut chain_meet = alpha::AlphaSet::full();
        for k in 0..=64u64 {
            let u_k = alpha::AlphaSet::new(EvPeriodicSet::range_from(k), true);
            chain_meet = chain_meet.intersect(&r.preimage(&u_k));
            ok &= chain_meet == r.preimage(&u_k);
        }
        let limit = alpha::AlphaSet::point(alpha::AlphaPoint::Inf);
        let pre_limit = r.preimage(&limit);
        ok &= pre_limit == limit;
        ok &= pre_limit.is_subset(&chain_meet);
        // The finite parts escape every bound: by depth 64 nothing below 61
        // survives.
        ok &= chain_meet.fin.min_element().is_none_or(|m| m >= 61);
        checks.push(Check::new(
            "directed-intersection-exchange-chain",
            "along the descending chain of basic neighborhoods of infinity, \
             intersected preimages equal preimages of intersections, and the \
             symbolic limit is the point at infinity",
            vec![
                r.to_string(),
                format!("chain depth 64, truncation {truncation}"),
            ],
            format!("meet after depth 64: {chain_meet}; preimage of the limit: {pre_limit}"),
            ok,
        ));
    }

    checks
}
