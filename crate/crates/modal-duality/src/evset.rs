//! Eventually periodic subsets of ℕ in canonical form.
//!
//! A set is described by a finite `prefix` table on `0..threshold` and a
//! `cycle` table on residues modulo `period` that governs every
//! `n >= threshold`. Canonical form (minimal period first, then minimal
//! threshold) makes structural equality coincide with set equality, so the
//! derived `Eq` and `Hash` are semantic. Every operation returns a canonical
//! value.
//!
//! The textual form is `prefix;period:cycle`, e.g. the even numbers are
//! `;2:10` and `{0, 2}` is `101;1:0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Guard against runaway periods from repeated lcm folding.
const MAX_PERIOD: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvPeriodicSet {
    threshold: u64,
    prefix: Vec<bool>,
    period: u64,
    cycle: Vec<bool>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvSetParseError {
    #[error("expected `prefix;period:cycle`, got {0:?}")]
    Shape(String),
    #[error("invalid bit character {0:?}")]
    BadBit(char),
    #[error("cycle length {found} does not match declared period {declared}")]
    PeriodMismatch { declared: u64, found: u64 },
    #[error("period must be at least 1")]
    ZeroPeriod,
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return a.max(b).max(1);
    }
    a / gcd(a, b) * b
}

impl EvPeriodicSet {
    /// Builds the set whose membership below `prefix.len()` is `prefix` and
    /// for `n >= prefix.len()` is `cycle[n % cycle.len()]`. The result is
    /// canonicalized.
    pub fn new(prefix: Vec<bool>, cycle: Vec<bool>) -> Self {
        assert!(!cycle.is_empty(), "cycle must have period >= 1");
        let mut s = EvPeriodicSet {
            threshold: prefix.len() as u64,
            prefix,
            period: cycle.len() as u64,
            cycle,
        };
        s.canonicalize();
        s
    }

    pub fn empty() -> Self {
        EvPeriodicSet::new(Vec::new(), vec![false])
    }

    pub fn full() -> Self {
        EvPeriodicSet::new(Vec::new(), vec![true])
    }

    pub fn evens() -> Self {
        EvPeriodicSet::new(Vec::new(), vec![true, false])
    }

    pub fn odds() -> Self {
        EvPeriodicSet::new(Vec::new(), vec![false, true])
    }

    pub fn singleton(n: u64) -> Self {
        Self::from_elements(std::iter::once(n))
    }

    pub fn from_elements(iter: impl IntoIterator<Item = u64>) -> Self {
        let elems: Vec<u64> = iter.into_iter().collect();
        let bound = elems.iter().copied().max().map_or(0, |m| m + 1);
        let mut prefix = vec![false; bound as usize];
        for e in elems {
            prefix[e as usize] = true;
        }
        EvPeriodicSet::new(prefix, vec![false])
    }

    /// All `m >= n`.
    pub fn range_from(n: u64) -> Self {
        EvPeriodicSet::new(vec![false; n as usize], vec![true])
    }

    /// The arithmetic progression `{stride * n + offset | n >= start}`.
    pub fn progression(stride: u64, offset: u64, start: u64) -> Self {
        assert!(stride >= 1, "progression stride must be >= 1");
        let first = stride * start + offset;
        Self::from_fn(first + stride, stride, |v| {
            v >= first && (v - offset) % stride == 0 && v >= offset
        })
    }

    /// Builds a set from a membership predicate known to be eventually
    /// periodic with threshold at most `threshold_bound` and period dividing
    /// `period_bound`. The bounds are a caller contract; the result is
    /// canonicalized, so generous bounds only cost time.
    pub fn from_fn(threshold_bound: u64, period_bound: u64, f: impl Fn(u64) -> bool) -> Self {
        let p = period_bound.max(1);
        assert!(p <= MAX_PERIOD, "period bound {p} too large");
        let prefix: Vec<bool> = (0..threshold_bound).map(&f).collect();
        let cycle: Vec<bool> = (0..p)
            .map(|r| {
                // smallest n >= threshold_bound with n ≡ r (mod p)
                let n = if threshold_bound == 0 {
                    r
                } else {
                    let base = threshold_bound + (p - threshold_bound % p) % p;
                    base + r
                };
                f(n)
            })
            .collect();
        EvPeriodicSet::new(prefix, cycle)
    }

    fn canonicalize(&mut self) {
        // Minimal period: smallest divisor d of the period with a d-shift
        // invariant cycle table.
        let p = self.period;
        for d in 1..=p {
            if p % d != 0 {
                continue;
            }
            let ok = (0..p).all(|r| self.cycle[r as usize] == self.cycle[((r + d) % p) as usize]);
            if ok {
                self.cycle.truncate(d as usize);
                self.period = d;
                break;
            }
        }
        // Minimal threshold: drop prefix entries that agree with the cycle.
        while self.threshold > 0 {
            let last = self.threshold - 1;
            if self.prefix[last as usize] == self.cycle[(last % self.period) as usize] {
                self.prefix.pop();
                self.threshold -= 1;
            } else {
                break;
            }
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        if n < self.threshold {
            self.prefix[n as usize]
        } else {
            self.cycle[(n % self.period) as usize]
        }
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// True when the residue class `r` modulo `modulus` eventually lies in
    /// the set, where `modulus` must be a multiple of the period.
    pub(crate) fn class_eventually_in(&self, r: u64, modulus: u64) -> bool {
        debug_assert_eq!(modulus % self.period, 0);
        self.cycle[(r % self.period) as usize]
    }

    fn combine(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        let t = self.threshold.max(other.threshold);
        let p = lcm(self.period, other.period);
        Self::from_fn(t, p, |n| f(self.contains(n), other.contains(n)))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        s.prefix.iter_mut().for_each(|b| *b = !*b);
        s.cycle.iter_mut().for_each(|b| *b = !*b);
        s.canonicalize();
        s
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.iter().all(|&b| !b) && self.cycle.iter().all(|&b| !b)
    }

    pub fn is_full(&self) -> bool {
        self.prefix.iter().all(|&b| b) && self.cycle.iter().all(|&b| b)
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.iter().all(|&b| !b)
    }

    pub fn is_cofinite(&self) -> bool {
        self.cycle.iter().all(|&b| b)
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// `self ∖ other` is finite, i.e. almost containment.
    pub fn is_almost_subset(&self, other: &Self) -> bool {
        self.difference(other).is_finite()
    }

    pub fn min_element(&self) -> Option<u64> {
        (0..self.threshold + self.period).find(|&n| self.contains(n))
    }

    /// Largest element of a finite set.
    pub fn max_element(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        (0..self.threshold).rev().find(|&n| self.contains(n))
    }

    /// Whether some member is `>= n`; decidable because infinite sets are
    /// cofinal and finite sets have a computable maximum.
    pub fn exists_geq(&self, n: u64) -> bool {
        if self.is_infinite() {
            return true;
        }
        self.max_element().is_some_and(|m| m >= n)
    }

    /// Elements of a finite set, ascending. `None` when infinite.
    pub fn elements(&self) -> Option<Vec<u64>> {
        if !self.is_finite() {
            return None;
        }
        Some((0..self.threshold).filter(|&n| self.contains(n)).collect())
    }

    pub fn members_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }
}

impl fmt::Display for EvPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.prefix {
            f.write_str(if b { "1" } else { "0" })?;
        }
        write!(f, ";{}:", self.period)?;
        for &b in &self.cycle {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for EvPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EvPeriodicSet({self})")
    }
}

fn parse_bits(s: &str) -> Result<Vec<bool>, EvSetParseError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(EvSetParseError::BadBit(other)),
        })
        .collect()
}

impl FromStr for EvPeriodicSet {
    type Err = EvSetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (prefix_part, rest) = s
            .split_once(';')
            .ok_or_else(|| EvSetParseError::Shape(s.to_string()))?;
        let (period_part, cycle_part) = rest
            .split_once(':')
            .ok_or_else(|| EvSetParseError::Shape(s.to_string()))?;
        let declared: u64 = period_part
            .parse()
            .map_err(|_| EvSetParseError::Shape(s.to_string()))?;
        if declared == 0 {
            return Err(EvSetParseError::ZeroPeriod);
        }
        let prefix = parse_bits(prefix_part)?;
        let cycle = parse_bits(cycle_part)?;
        if cycle.len() as u64 != declared {
            return Err(EvSetParseError::PeriodMismatch {
                declared,
                found: cycle.len() as u64,
            });
        }
        Ok(EvPeriodicSet::new(prefix, cycle))
    }
}
