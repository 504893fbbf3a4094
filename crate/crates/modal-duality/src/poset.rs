//! Finite posets with exhaustive lattice-law verdicts.
//!
//! The analyzer decides boundedness, semilattice/lattice structure, both
//! semilattice and lattice distributivity, the subset-indexed frame and
//! coframe laws, booleanness, atomicity, zero-dimensionality, and spatiality.
//! Every failed law carries a concrete witness (indices into the poset), and
//! witness search scans elements in ascending index order so output is
//! reproducible. On finite lattices the frame law, the coframe law, and
//! lattice distributivity are equivalent; the analyzer computes them
//! independently and errors out if they ever disagree rather than assuming
//! the equivalence.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::enumerate_necessity_ops;

/// Hard cap on poset size.
pub const MAX_POSET_SIZE: usize = 1 << 16;
/// Cap for triple-indexed distributivity checks.
pub const DISTRIBUTIVITY_CAP: usize = 4096;
/// Below this size the frame/coframe laws are checked over all `2^n` subsets;
/// above it they are checked on a fixed-seed sample and tied to binary
/// distributivity.
pub const FRAME_EXHAUSTIVE_CAP: usize = 16;
/// Cap for the quintic semilattice-decomposition search; larger lattices
/// inherit the triple-indexed verdict, and larger non-lattices error out.
pub const SEMILATTICE_SEARCH_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset must be nonempty")]
    Empty,
    #[error("poset size {0} exceeds the cap {1}")]
    SizeCap(usize, usize),
    #[error("order is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric: {0} and {1} are mutually below each other")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("distributivity checks require at most {cap} elements, got {n}")]
    DistributivityCap { n: usize, cap: usize },
    #[error("operation requires a lattice")]
    NotALattice,
    #[error("frame/coframe/distributivity verdicts disagree; analyzer invariant violated")]
    LawEquivalenceViolated,
    #[error("labels length {0} does not match size {1}")]
    LabelMismatch(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected `i <= j`, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("line {line}: bad index {text:?}")]
    BadIndex { line: usize, text: String },
    #[error("line {line}: index {index} out of range (elements = {n})")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("empty input: a poset must be nonempty")]
    Empty,
    #[error("edges create a cycle through {0} and {1}")]
    Cycle(usize, usize),
    #[error("{0}")]
    Poset(PosetError),
}

/// Explicit finite poset: `n` elements, a row-bitset order matrix, and opaque
/// labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    n: usize,
    words: usize,
    /// Row `a` is the upward set `{b | a <= b}` as a bitset.
    up: Vec<u64>,
    labels: Vec<String>,
}

fn bit_get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

impl FinPoset {
    /// Builds a poset from a `leq` predicate, validating the order axioms.
    pub fn from_leq_fn(
        n: usize,
        labels: Option<Vec<String>>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_POSET_SIZE {
            return Err(PosetError::SizeCap(n, MAX_POSET_SIZE));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(PosetError::LabelMismatch(l.len(), n));
                }
                l
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let words = n.div_ceil(64);
        let mut up = vec![0u64; n * words];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    bit_set(&mut up[a * words..(a + 1) * words], b);
                }
            }
        }
        let p = FinPoset {
            n,
            words,
            up,
            labels,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), PosetError> {
        for a in 0..self.n {
            if !self.leq(a, a) {
                return Err(PosetError::NotReflexive(a));
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(PosetError::NotAntisymmetric(a, b));
                }
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.leq(a, b) {
                    continue;
                }
                // up(b) must be contained in up(a)
                for w in 0..self.words {
                    let ub = self.up[b * self.words + w];
                    let ua = self.up[a * self.words + w];
                    if ub & !ua != 0 {
                        let c = w * 64 + (ub & !ua).trailing_zeros() as usize;
                        return Err(PosetError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses the text edge-list format: one `i <= j` per line, `#` comments,
    /// blank lines ignored, optional `elements N` header for isolated
    /// elements. The order is the reflexive-transitive closure of the edges.
    pub fn from_edge_list(text: &str) -> Result<Self, EdgeListError> {
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut declared_n: Option<usize> = None;
        let mut max_index = 0usize;
        let mut saw_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() == 2 && tokens[0] == "elements" {
                declared_n = Some(tokens[1].parse().map_err(|_| EdgeListError::BadIndex {
                    line: line_no,
                    text: tokens[1].to_string(),
                })?);
                saw_content = true;
                continue;
            }
            if tokens.len() != 3 || tokens[1] != "<=" {
                return Err(EdgeListError::BadLine {
                    line: line_no,
                    text: line.to_string(),
                });
            }
            let parse = |t: &str| -> Result<usize, EdgeListError> {
                t.parse().map_err(|_| EdgeListError::BadIndex {
                    line: line_no,
                    text: t.to_string(),
                })
            };
            let i = parse(tokens[0])?;
            let j = parse(tokens[2])?;
            max_index = max_index.max(i).max(j);
            edges.push((line_no, i, j));
            saw_content = true;
        }
        if !saw_content {
            return Err(EdgeListError::Empty);
        }
        let n = declared_n.unwrap_or(max_index + 1);
        if n == 0 {
            return Err(EdgeListError::Empty);
        }
        for &(line, i, j) in &edges {
            if i >= n || j >= n {
                return Err(EdgeListError::IndexOutOfRange {
                    line,
                    index: i.max(j),
                    n,
                });
            }
        }
        // Reflexive-transitive closure over bitset rows.
        let words = n.div_ceil(64);
        let mut up = vec![0u64; n * words];
        for a in 0..n {
            bit_set(&mut up[a * words..(a + 1) * words], a);
        }
        for &(_, i, j) in &edges {
            bit_set(&mut up[i * words..(i + 1) * words], j);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    if a == b || !bit_get(&up[a * words..(a + 1) * words], b) {
                        continue;
                    }
                    for w in 0..words {
                        let extra = up[b * words + w] & !up[a * words + w];
                        if extra != 0 {
                            up[a * words + w] |= extra;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if bit_get(&up[a * words..(a + 1) * words], b)
                    && bit_get(&up[b * words..(b + 1) * words], a)
                {
                    return Err(EdgeListError::Cycle(a, b));
                }
            }
        }
        let up_owned = up;
        FinPoset::from_leq_fn(n, None, |a, b| {
            bit_get(&up_owned[a * words..(a + 1) * words], b)
        })
        .map_err(EdgeListError::Poset)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty posets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        bit_get(&self.up[a * self.words..(a + 1) * self.words], b)
    }

    fn up_row(&self, a: usize) -> &[u64] {
        &self.up[a * self.words..(a + 1) * self.words]
    }

    fn down_rows(&self) -> Vec<u64> {
        let mut down = vec![0u64; self.n * self.words];
        for a in 0..self.n {
            for b in 0..self.n {
                if self.leq(b, a) {
                    bit_set(&mut down[a * self.words..(a + 1) * self.words], b);
                }
            }
        }
        down
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&t| (0..self.n).all(|a| self.leq(a, t)))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&b| (0..self.n).all(|a| self.leq(b, a)))
    }

    fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| !self.leq(a, b) || a == b))
            .collect()
    }

    fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| !self.leq(b, a) || a == b))
            .collect()
    }
}

const NONE: u32 = u32::MAX;

/// Meet and join tables plus the primes of a lattice-to-be; `NONE` entries
/// mark missing bounds.
struct Tables {
    n: usize,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl Tables {
    fn build(p: &FinPoset) -> Tables {
        let n = p.n;
        let words = p.words;
        let down = p.down_rows();
        let mut down_index: HashMap<&[u64], u32> = HashMap::with_capacity(n);
        let mut up_index: HashMap<&[u64], u32> = HashMap::with_capacity(n);
        for a in 0..n {
            down_index.insert(&down[a * words..(a + 1) * words], a as u32);
            up_index.insert(p.up_row(a), a as u32);
        }
        let mut meet = vec![NONE; n * n];
        let mut join = vec![NONE; n * n];
        let mut meet_key = vec![0u64; words];
        let mut join_key = vec![0u64; words];
        for a in 0..n {
            for b in 0..=a {
                for w in 0..words {
                    meet_key[w] = down[a * words + w] & down[b * words + w];
                    join_key[w] = p.up_row(a)[w] & p.up_row(b)[w];
                }
                // The meet exists iff the common lower set is itself a down
                // set, i.e. the down set of its greatest element.
                if let Some(&m) = down_index.get(meet_key.as_slice()) {
                    meet[a * n + b] = m;
                    meet[b * n + a] = m;
                }
                if let Some(&j) = up_index.get(join_key.as_slice()) {
                    join[a * n + b] = j;
                    join[b * n + a] = j;
                }
            }
        }
        Tables { n, meet, join }
    }

    fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let m = self.meet[a * self.n + b];
        (m != NONE).then_some(m as usize)
    }

    fn join(&self, a: usize, b: usize) -> Option<usize> {
        let j = self.join[a * self.n + b];
        (j != NONE).then_some(j as usize)
    }

    fn first_missing_meet(&self) -> Option<(usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                if self.meet[a * self.n + b] == NONE {
                    return Some((a.min(b), a.max(b)));
                }
            }
        }
        None
    }

    fn first_missing_join(&self) -> Option<(usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                if self.join[a * self.n + b] == NONE {
                    return Some((a.min(b), a.max(b)));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NoTop {
        maximal: Vec<usize>,
    },
    NoBottom {
        minimal: Vec<usize>,
    },
    NoMeet {
        a: usize,
        b: usize,
    },
    NoJoin {
        a: usize,
        b: usize,
    },
    /// `a ∧ (b ∨ c) = lhs` but `(a ∧ b) ∨ (a ∧ c) = rhs`.
    DistributivityTriple {
        a: usize,
        b: usize,
        c: usize,
        lhs: usize,
        rhs: usize,
    },
    /// `a <= b ∨ c` but no `b' <= b`, `c' <= c` join to `a`.
    NoJoinDecomposition {
        a: usize,
        b: usize,
        c: usize,
    },
    /// Dual of `NoJoinDecomposition`.
    NoMeetDecomposition {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `a ∧ ⋁S = lhs` but `⋁{a ∧ s} = rhs`.
    FrameSubset {
        a: usize,
        subset: Vec<usize>,
        lhs: usize,
        rhs: usize,
    },
    /// `a ∨ ⋀S = lhs` but `⋀{a ∨ s} = rhs`.
    CoframeSubset {
        a: usize,
        subset: Vec<usize>,
        lhs: usize,
        rhs: usize,
    },
    NotComplemented {
        a: usize,
    },
    NoAtomBelow {
        a: usize,
    },
    /// `a` differs from the join of the complemented elements below it.
    NotJoinOfComplemented {
        a: usize,
        join_below: usize,
    },
    /// `a` differs from the meet of the meet-primes above it.
    NotMeetOfPrimes {
        a: usize,
        meet_above: usize,
    },
    /// A lattice-dependent law evaluated on a non-lattice.
    RequiresLattice {
        a: usize,
        b: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Flag {
    fn yes() -> Flag {
        Flag {
            holds: true,
            witness: None,
        }
    }

    fn no(w: Witness) -> Flag {
        Flag {
            holds: false,
            witness: Some(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVerdict {
    pub size: usize,
    pub labels: Vec<String>,
    pub bounded: Flag,
    pub meet_semilattice: Flag,
    pub join_semilattice: Flag,
    pub lattice: Flag,
    pub distributive_semilattice: Flag,
    pub distributive_lattice: Flag,
    pub frame_law: Flag,
    pub coframe_law: Flag,
    pub boolean: Flag,
    pub atomic: Flag,
    pub zero_dimensional: Flag,
    pub spatial: Flag,
}

impl FinPoset {
    /// Full lattice-law analysis. Fails on the size caps and if the
    /// independently computed frame/coframe/distributivity verdicts disagree
    /// on a lattice.
    pub fn analyze(&self) -> Result<LatticeVerdict, PosetError> {
        let n = self.n;
        if n > DISTRIBUTIVITY_CAP {
            return Err(PosetError::DistributivityCap {
                n,
                cap: DISTRIBUTIVITY_CAP,
            });
        }
        let tables = Tables::build(self);
        let top = self.top();
        let bottom = self.bottom();

        let bounded = match (top, bottom) {
            (Some(_), Some(_)) => Flag::yes(),
            (None, _) => Flag::no(Witness::NoTop {
                maximal: self.maximal_elements(),
            }),
            (_, None) => Flag::no(Witness::NoBottom {
                minimal: self.minimal_elements(),
            }),
        };

        let meet_semilattice = match tables.first_missing_meet() {
            None => Flag::yes(),
            Some((a, b)) => Flag::no(Witness::NoMeet { a, b }),
        };
        let join_semilattice = match tables.first_missing_join() {
            None => Flag::yes(),
            Some((a, b)) => Flag::no(Witness::NoJoin { a, b }),
        };
        let is_lattice = meet_semilattice.holds && join_semilattice.holds;
        let lattice = if is_lattice {
            Flag::yes()
        } else if let Some(w) = meet_semilattice.witness.clone() {
            Flag::no(w)
        } else {
            Flag::no(join_semilattice.witness.clone().unwrap())
        };

        let lattice_witness_pair = || match (&meet_semilattice.witness, &join_semilattice.witness) {
            (Some(Witness::NoMeet { a, b }), _) => (*a, *b),
            (_, Some(Witness::NoJoin { a, b })) => (*a, *b),
            _ => (0, 0),
        };

        let distributive_lattice = if is_lattice {
            self.check_lattice_distributivity(&tables)
        } else {
            let (a, b) = lattice_witness_pair();
            Flag::no(Witness::RequiresLattice { a, b })
        };

        let distributive_semilattice = self.check_semilattice_distributivity(
            &tables,
            &meet_semilattice,
            &join_semilattice,
            &distributive_lattice,
        )?;

        let (frame_law, coframe_law) =
            self.check_frame_laws(&tables, top, bottom, is_lattice, &distributive_lattice)?;

        if is_lattice
            && (frame_law.holds != distributive_lattice.holds
                || coframe_law.holds != distributive_lattice.holds)
        {
            return Err(PosetError::LawEquivalenceViolated);
        }

        let complemented: Vec<usize> = match (top, bottom, is_lattice) {
            (Some(t), Some(b), true) => (0..n)
                .filter(|&a| {
                    (0..n).any(|c| tables.meet(a, c) == Some(b) && tables.join(a, c) == Some(t))
                })
                .collect(),
            _ => Vec::new(),
        };

        let boolean = if !bounded.holds {
            Flag {
                holds: false,
                witness: bounded.witness.clone(),
            }
        } else if !is_lattice {
            let (a, b) = lattice_witness_pair();
            Flag::no(Witness::RequiresLattice { a, b })
        } else if !distributive_lattice.holds {
            Flag {
                holds: false,
                witness: distributive_lattice.witness.clone(),
            }
        } else {
            match (0..n).find(|a| !complemented.contains(a)) {
                None => Flag::yes(),
                Some(a) => Flag::no(Witness::NotComplemented { a }),
            }
        };

        let atomic = match bottom {
            None => Flag {
                holds: false,
                witness: bounded.witness.clone(),
            },
            Some(b) => {
                let atoms: Vec<usize> = (0..n)
                    .filter(|&a| a != b && (0..n).all(|c| !(self.leq(c, a) && c != a && c != b)))
                    .collect();
                match (0..n).find(|&x| x != b && !atoms.iter().any(|&a| self.leq(a, x))) {
                    None => Flag::yes(),
                    Some(x) => Flag::no(Witness::NoAtomBelow { a: x }),
                }
            }
        };

        let zero_dimensional = if let (true, Some(bot)) = (is_lattice, bottom) {
            let mut flag = Flag::yes();
            for a in 0..n {
                let mut j = bot;
                for &c in &complemented {
                    if self.leq(c, a) {
                        j = tables.join(j, c).unwrap();
                    }
                }
                if j != a {
                    flag = Flag::no(Witness::NotJoinOfComplemented { a, join_below: j });
                    break;
                }
            }
            flag
        } else {
            let (a, b) = lattice_witness_pair();
            Flag::no(Witness::RequiresLattice { a, b })
        };

        let spatial = if let (true, Some(t)) = (is_lattice, top) {
            let meet_primes = self.meet_primes(&tables, t);
            let mut flag = Flag::yes();
            for a in 0..n {
                let mut m = t;
                for &p in &meet_primes {
                    if self.leq(a, p) {
                        m = tables.meet(m, p).unwrap();
                    }
                }
                if m != a {
                    flag = Flag::no(Witness::NotMeetOfPrimes { a, meet_above: m });
                    break;
                }
            }
            flag
        } else {
            let (a, b) = lattice_witness_pair();
            Flag::no(Witness::RequiresLattice { a, b })
        };

        Ok(LatticeVerdict {
            size: n,
            labels: self.labels.clone(),
            bounded,
            meet_semilattice,
            join_semilattice,
            lattice,
            distributive_semilattice,
            distributive_lattice,
            frame_law,
            coframe_law,
            boolean,
            atomic,
            zero_dimensional,
            spatial,
        })
    }

    fn check_lattice_distributivity(&self, t: &Tables) -> Flag {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let bc = t.join(b, c).unwrap();
                    let lhs = t.meet(a, bc).unwrap();
                    let ab = t.meet(a, b).unwrap();
                    let ac = t.meet(a, c).unwrap();
                    let rhs = t.join(ab, ac).unwrap();
                    if lhs != rhs {
                        return Flag::no(Witness::DistributivityTriple { a, b, c, lhs, rhs });
                    }
                }
            }
        }
        Flag::yes()
    }

    /// Join-semilattice distributivity: `a <= b ∨ c` implies `a` decomposes
    /// as `b' ∨ c'` with `b' <= b`, `c' <= c`; dually for meet-semilattices.
    /// Whichever semilattice structure is present gets checked; on a lattice
    /// both reduce to lattice distributivity, and the agreement is asserted
    /// wherever the quintic decomposition search is affordable.
    fn check_semilattice_distributivity(
        &self,
        t: &Tables,
        meet_sl: &Flag,
        join_sl: &Flag,
        dist_lattice: &Flag,
    ) -> Result<Flag, PosetError> {
        let n = self.n;
        let both = meet_sl.holds && join_sl.holds;
        if both && n > SEMILATTICE_SEARCH_CAP {
            // The equivalence with lattice distributivity is exercised by
            // the search below on every poset within the cap.
            return Ok(dist_lattice.clone());
        }
        if !both && n > SEMILATTICE_SEARCH_CAP {
            return Err(PosetError::DistributivityCap {
                n,
                cap: SEMILATTICE_SEARCH_CAP,
            });
        }
        let mut verdict = if !meet_sl.holds && !join_sl.holds {
            let w = meet_sl.witness.clone().unwrap();
            Flag {
                holds: false,
                witness: Some(w),
            }
        } else {
            Flag::yes()
        };
        if join_sl.holds && verdict.holds {
            'outer: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let bc = t.join(b, c).unwrap();
                        if !self.leq(a, bc) {
                            continue;
                        }
                        let ok = (0..n).any(|bp| {
                            self.leq(bp, b)
                                && (0..n).any(|cp| self.leq(cp, c) && t.join(bp, cp) == Some(a))
                        });
                        if !ok {
                            verdict = Flag::no(Witness::NoJoinDecomposition { a, b, c });
                            break 'outer;
                        }
                    }
                }
            }
        }
        if meet_sl.holds && verdict.holds {
            'outer2: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let bc = t.meet(b, c).unwrap();
                        if !self.leq(bc, a) {
                            continue;
                        }
                        let ok = (0..n).any(|bp| {
                            self.leq(b, bp)
                                && (0..n).any(|cp| self.leq(c, cp) && t.meet(bp, cp) == Some(a))
                        });
                        if !ok {
                            verdict = Flag::no(Witness::NoMeetDecomposition { a, b, c });
                            break 'outer2;
                        }
                    }
                }
            }
        }
        if meet_sl.holds && join_sl.holds && verdict.holds != dist_lattice.holds {
            return Err(PosetError::LawEquivalenceViolated);
        }
        Ok(verdict)
    }

    fn check_frame_laws(
        &self,
        t: &Tables,
        top: Option<usize>,
        bottom: Option<usize>,
        is_lattice: bool,
        dist: &Flag,
    ) -> Result<(Flag, Flag), PosetError> {
        if !is_lattice || top.is_none() || bottom.is_none() {
            let w = Witness::RequiresLattice { a: 0, b: 0 };
            return Ok((Flag::no(w.clone()), Flag::no(w)));
        }
        let n = self.n;
        let bot = bottom.unwrap();
        let tp = top.unwrap();
        let join_fold = |subset: &[usize]| -> usize {
            subset.iter().fold(bot, |acc, &s| t.join(acc, s).unwrap())
        };
        let meet_fold = |subset: &[usize]| -> usize {
            subset.iter().fold(tp, |acc, &s| t.meet(acc, s).unwrap())
        };
        let frame_violation = |subset: &[usize]| -> Option<Witness> {
            let big = join_fold(subset);
            for a in 0..n {
                let lhs = t.meet(a, big).unwrap();
                let parts: Vec<usize> = subset.iter().map(|&s| t.meet(a, s).unwrap()).collect();
                let rhs = join_fold(&parts);
                if lhs != rhs {
                    return Some(Witness::FrameSubset {
                        a,
                        subset: subset.to_vec(),
                        lhs,
                        rhs,
                    });
                }
            }
            None
        };
        let coframe_violation = |subset: &[usize]| -> Option<Witness> {
            let big = meet_fold(subset);
            for a in 0..n {
                let lhs = t.join(a, big).unwrap();
                let parts: Vec<usize> = subset.iter().map(|&s| t.join(a, s).unwrap()).collect();
                let rhs = meet_fold(&parts);
                if lhs != rhs {
                    return Some(Witness::CoframeSubset {
                        a,
                        subset: subset.to_vec(),
                        lhs,
                        rhs,
                    });
                }
            }
            None
        };
        if n <= FRAME_EXHAUSTIVE_CAP {
            let mut frame = Flag::yes();
            let mut coframe = Flag::yes();
            for mask in 0u32..(1u32 << n) {
                let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                if frame.holds {
                    if let Some(w) = frame_violation(&subset) {
                        frame = Flag::no(w);
                    }
                }
                if coframe.holds {
                    if let Some(w) = coframe_violation(&subset) {
                        coframe = Flag::no(w);
                    }
                }
                if !frame.holds && !coframe.holds {
                    break;
                }
            }
            Ok((frame, coframe))
        } else {
            // Sampled subsets cross-check the binary route; on a finite
            // lattice the subset laws follow from binary distributivity by
            // folding.
            let mut rng = ChaCha8Rng::seed_from_u64(0x4652414d45);
            for _ in 0..2048 {
                let len = rng.gen_range(0..32usize);
                let subset: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
                if let Some(w) = frame_violation(&subset) {
                    if dist.holds {
                        return Err(PosetError::LawEquivalenceViolated);
                    }
                    return Ok((Flag::no(w.clone()), Flag::no(w)));
                }
                if let Some(w) = coframe_violation(&subset) {
                    if dist.holds {
                        return Err(PosetError::LawEquivalenceViolated);
                    }
                    return Ok((Flag::no(w.clone()), Flag::no(w)));
                }
            }
            let flag = if dist.holds {
                Flag::yes()
            } else {
                Flag {
                    holds: false,
                    witness: dist.witness.clone(),
                }
            };
            Ok((flag.clone(), flag))
        }
    }

    fn meet_primes(&self, t: &Tables, top: usize) -> Vec<usize> {
        let n = self.n;
        (0..n)
            .filter(|&m| {
                m != top
                    && (0..n).all(|a| {
                        (0..n).all(|b| {
                            let ab = t.meet(a, b).unwrap();
                            !self.leq(ab, m) || self.leq(a, m) || self.leq(b, m)
                        })
                    })
            })
            .collect()
    }

    fn join_primes(&self, t: &Tables, bottom: usize) -> Vec<usize> {
        let n = self.n;
        (0..n)
            .filter(|&j| {
                j != bottom
                    && (0..n).all(|a| {
                        (0..n).all(|b| {
                            let ab = t.join(a, b).unwrap();
                            !self.leq(j, ab) || self.leq(j, a) || self.leq(j, b)
                        })
                    })
            })
            .collect()
    }

    /// Meet-prime and join-prime elements of a lattice.
    pub fn primes(&self) -> Result<(Vec<usize>, Vec<usize>), PosetError> {
        let tables = Tables::build(self);
        if tables.first_missing_meet().is_some() || tables.first_missing_join().is_some() {
            return Err(PosetError::NotALattice);
        }
        let top = self.top().ok_or(PosetError::NotALattice)?;
        let bottom = self.bottom().ok_or(PosetError::NotALattice)?;
        Ok((
            self.meet_primes(&tables, top),
            self.join_primes(&tables, bottom),
        ))
    }
}

/// `f` must be a total map `p -> q` given positionally. True iff `f` is a
/// bijection with `x <= y ⟺ f(x) <= f(y)`.
pub fn order_iso_check(p: &FinPoset, q: &FinPoset, f: &[usize]) -> bool {
    if f.len() != p.len() || p.len() != q.len() {
        return false;
    }
    if f.iter().any(|&v| v >= q.len()) {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &v in f {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(x, y) != q.leq(f[x], f[y]) {
                return false;
            }
        }
    }
    true
}

/// The poset of all necessity operators on `m` atoms under the pointwise
/// order, in canonical enumeration order.
pub fn build_no_poset(m: u8) -> Result<FinPoset, PosetError> {
    if m > 3 {
        return Err(PosetError::SizeCap(1 << (m as usize * m as usize), 512));
    }
    let ops = enumerate_necessity_ops(m).expect("cap checked above");
    let labels = ops.iter().map(|op| op.label()).collect();
    FinPoset::from_leq_fn(ops.len(), Some(labels), |a, b| ops[a].leq(&ops[b]))
}

/// Re-evaluates a witness against the law it falsifies; used to keep the
/// analyzer honest.
pub fn witness_refutes(p: &FinPoset, w: &Witness) -> bool {
    let tables = Tables::build(p);
    match w {
        Witness::NoTop { .. } => p.top().is_none(),
        Witness::NoBottom { .. } => p.bottom().is_none(),
        Witness::NoMeet { a, b } => tables.meet(*a, *b).is_none(),
        Witness::NoJoin { a, b } => tables.join(*a, *b).is_none(),
        Witness::DistributivityTriple { a, b, c, lhs, rhs } => {
            let bc = tables.join(*b, *c).unwrap();
            let l = tables.meet(*a, bc).unwrap();
            let r = tables
                .join(tables.meet(*a, *b).unwrap(), tables.meet(*a, *c).unwrap())
                .unwrap();
            l == *lhs && r == *rhs && lhs != rhs
        }
        Witness::NoJoinDecomposition { a, b, c } => {
            let bc = tables.join(*b, *c).unwrap();
            p.leq(*a, bc)
                && !(0..p.len()).any(|bp| {
                    p.leq(bp, *b)
                        && (0..p.len()).any(|cp| p.leq(cp, *c) && tables.join(bp, cp) == Some(*a))
                })
        }
        Witness::NoMeetDecomposition { a, b, c } => {
            let bc = tables.meet(*b, *c).unwrap();
            p.leq(bc, *a)
                && !(0..p.len()).any(|bp| {
                    p.leq(*b, bp)
                        && (0..p.len()).any(|cp| p.leq(*c, cp) && tables.meet(bp, cp) == Some(*a))
                })
        }
        Witness::FrameSubset {
            a,
            subset,
            lhs,
            rhs,
        } => {
            let bot = p.bottom().unwrap();
            let big = subset
                .iter()
                .fold(bot, |acc, &s| tables.join(acc, s).unwrap());
            let l = tables.meet(*a, big).unwrap();
            let r = subset.iter().fold(bot, |acc, &s| {
                tables.join(acc, tables.meet(*a, s).unwrap()).unwrap()
            });
            l == *lhs && r == *rhs && lhs != rhs
        }
        Witness::CoframeSubset {
            a,
            subset,
            lhs,
            rhs,
        } => {
            let top = p.top().unwrap();
            let big = subset
                .iter()
                .fold(top, |acc, &s| tables.meet(acc, s).unwrap());
            let l = tables.join(*a, big).unwrap();
            let r = subset.iter().fold(top, |acc, &s| {
                tables.meet(acc, tables.join(*a, s).unwrap()).unwrap()
            });
            l == *lhs && r == *rhs && lhs != rhs
        }
        Witness::NotComplemented { a } => {
            let (top, bot) = (p.top().unwrap(), p.bottom().unwrap());
            !(0..p.len())
                .any(|c| tables.meet(*a, c) == Some(bot) && tables.join(*a, c) == Some(top))
        }
        Witness::NoAtomBelow { a } => {
            let bot = p.bottom().unwrap();
            let atoms: Vec<usize> = (0..p.len())
                .filter(|&x| x != bot && (0..p.len()).all(|c| !(p.leq(c, x) && c != x && c != bot)))
                .collect();
            *a != bot && !atoms.iter().any(|&at| p.leq(at, *a))
        }
        Witness::NotJoinOfComplemented { a, join_below } => a != join_below,
        Witness::NotMeetOfPrimes { a, meet_above } => a != meet_above,
        Witness::RequiresLattice { .. } => {
            tables.first_missing_meet().is_some() || tables.first_missing_join().is_some()
        }
    }
}
