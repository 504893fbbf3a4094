//! Textual syntax for sets and relations, round-trip parseable.
//!
//! Sets print as `prefix;period:cycle;inf` with the trailing marker empty
//! for sets avoiding infinity: the even numbers plus infinity are
//! `;2:10;inf`, the set `{0,2}` is `101;1:0;`. Relations are `+`-joined
//! pieces: `diag{SET}`, `prod{SET | SET}`, `tail{a,b,c,d,k}`,
//! `pairs{(x,y),...}` with `inf` as a point, or `empty`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::alpha::relation::Piece;
use crate::alpha::{AffineTail, AlphaPoint, AlphaRelation, AlphaSet};
use crate::evset::{EvPeriodicSet, EvSetParseError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphaParseError {
    #[error("expected `evset;inf?`, got {0:?}")]
    SetShape(String),
    #[error(transparent)]
    EvSet(#[from] EvSetParseError),
    #[error("unknown piece syntax {0:?}")]
    PieceShape(String),
    #[error("bad point {0:?}")]
    BadPoint(String),
    #[error("bad tail parameters {0:?}")]
    BadTail(String),
}

impl fmt::Display for AlphaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.fin, if self.has_inf { "inf" } else { "" })
    }
}

impl FromStr for AlphaSet {
    type Err = AlphaParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (fin_part, inf_part) = s
            .rsplit_once(';')
            .ok_or_else(|| AlphaParseError::SetShape(s.to_string()))?;
        let has_inf = match inf_part {
            "inf" => true,
            "" => false,
            _ => return Err(AlphaParseError::SetShape(s.to_string())),
        };
        let fin: EvPeriodicSet = fin_part.parse()?;
        Ok(AlphaSet::new(fin, has_inf))
    }
}

impl fmt::Display for AlphaRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces().is_empty() {
            return f.write_str("empty");
        }
        let mut first = true;
        for p in self.pieces() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match p {
                Piece::Pairs(set) => {
                    f.write_str("pairs{")?;
                    let mut inner_first = true;
                    for (x, y) in set {
                        if !inner_first {
                            f.write_str(",")?;
                        }
                        inner_first = false;
                        write!(f, "({x},{y})")?;
                    }
                    f.write_str("}")?;
                }
                Piece::Diagonal(a) => write!(f, "diag{{{a}}}")?,
                Piece::Product(a, b) => write!(f, "prod{{{a} | {b}}}")?,
                Piece::Tail(t) => write!(f, "tail{{{},{},{},{},{}}}", t.a, t.b, t.c, t.d, t.k)?,
            }
        }
        Ok(())
    }
}

fn parse_point(s: &str) -> Result<AlphaPoint, AlphaParseError> {
    let s = s.trim();
    if s == "inf" {
        return Ok(AlphaPoint::Inf);
    }
    s.parse::<u64>()
        .map(AlphaPoint::Nat)
        .map_err(|_| AlphaParseError::BadPoint(s.to_string()))
}

fn parse_piece(s: &str) -> Result<Piece, AlphaParseError> {
    let s = s.trim();
    let body = |prefix: &str| -> Option<&str> {
        s.strip_prefix(prefix)?.strip_prefix('{')?.strip_suffix('}')
    };
    if let Some(inner) = body("diag") {
        return Ok(Piece::Diagonal(inner.trim().parse()?));
    }
    if let Some(inner) = body("prod") {
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| AlphaParseError::PieceShape(s.to_string()))?;
        return Ok(Piece::Product(a.trim().parse()?, b.trim().parse()?));
    }
    if let Some(inner) = body("tail") {
        let nums: Vec<u64> = inner
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| AlphaParseError::BadTail(inner.to_string()))?;
        if nums.len() != 5 {
            return Err(AlphaParseError::BadTail(inner.to_string()));
        }
        let tail = AffineTail::new(nums[0], nums[1], nums[2], nums[3], nums[4])
            .map_err(|_| AlphaParseError::BadTail(inner.to_string()))?;
        return Ok(Piece::Tail(tail));
    }
    if let Some(inner) = body("pairs") {
        let mut pairs = std::collections::BTreeSet::new();
        for chunk in inner.split("),") {
            let chunk = chunk.trim().trim_start_matches('(').trim_end_matches(')');
            if chunk.is_empty() {
                continue;
            }
            let (x, y) = chunk
                .split_once(',')
                .ok_or_else(|| AlphaParseError::PieceShape(s.to_string()))?;
            pairs.insert((parse_point(x)?, parse_point(y)?));
        }
        return Ok(Piece::Pairs(pairs));
    }
    Err(AlphaParseError::PieceShape(s.to_string()))
}

impl FromStr for AlphaRelation {
    type Err = AlphaParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "empty" {
            return Ok(AlphaRelation::empty());
        }
        let pieces: Vec<Piece> = s.split(" + ").map(parse_piece).collect::<Result<_, _>>()?;
        Ok(AlphaRelation::from_pieces(pieces))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_syntax_round_trips() {
        let evens_inf = AlphaSet::new(EvPeriodicSet::evens(), true);
        assert_eq!(evens_inf.to_string(), ";2:10;inf");
        for s in [
            AlphaSet::empty(),
            AlphaSet::full(),
            evens_inf,
            AlphaSet::naturals(EvPeriodicSet::from_elements([0, 2])),
        ] {
            let back: AlphaSet = s.to_string().parse().unwrap();
            assert_eq!(back, s);
        }
        assert_eq!(
            "101;1:0;".parse::<AlphaSet>().unwrap(),
            AlphaSet::naturals(EvPeriodicSet::from_elements([0, 2]))
        );
        assert!("nonsense".parse::<AlphaSet>().is_err());
    }

    #[test]
    fn relation_syntax_round_trips() {
        for r in [
            AlphaRelation::empty(),
            AlphaRelation::diagonal_full(),
            AlphaRelation::injection_r(),
            AlphaRelation::injection_s(),
            AlphaRelation::product(
                AlphaSet::naturals(EvPeriodicSet::from_elements([1])),
                AlphaSet::full(),
            ),
        ] {
            let text = r.to_string();
            let back: AlphaRelation = text.parse().unwrap();
            assert_eq!(back, r, "syntax: {text}");
        }
        let r: AlphaRelation = "tail{2,0,2,0,0} + pairs{(inf,inf)}".parse().unwrap();
        assert!(r.member(AlphaPoint::Nat(4), AlphaPoint::Nat(4)));
        assert!(r.member(AlphaPoint::Inf, AlphaPoint::Inf));
        assert!("garbage{}".parse::<AlphaRelation>().is_err());
        assert!("tail{0,1}".parse::<AlphaRelation>().is_err());
    }
}
