//! Seaweed type symbols.
//!
//! A seaweed subalgebra of `sl(n)` is indexed by a pair of compositions of
//! `n`, written on one line as `a1|a2|...|am/b1|b2|...|bt`. The top
//! composition fixes the diagonal blocks below the main diagonal, the bottom
//! composition the blocks above it.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest `n` accepted by [`parse_type`].
pub const DEFAULT_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("top parts sum to {top} but bottom parts sum to {bottom}")]
    SumMismatch { top: usize, bottom: usize },
    #[error("composition parts must be positive (part {index} is zero)")]
    ZeroPart { index: usize },
    #[error("n = {n} exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("a composition needs at least one part")]
    Empty,
}

/// A composition of `n`: a non-empty sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TypeError> {
        if parts.is_empty() {
            return Err(TypeError::Empty);
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(TypeError::ZeroPart { index });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.parts[0]
    }

    /// Vertex ranges of the blocks, 1-based and inclusive.
    pub fn blocks(&self) -> Vec<RangeInclusive<usize>> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..=start + p - 1;
                start += p;
                r
            })
            .collect()
    }

    /// All `2^(n-1)` compositions of `n`, ordered by the bitmask of cut
    /// points (bit `k` set means a cut after position `k + 1`).
    pub fn all(n: usize) -> impl Iterator<Item = Composition> {
        assert!(n >= 1, "compositions of zero are not supported");
        let cuts = n - 1;
        (0u64..1u64 << cuts).map(move |mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for k in 0..cuts {
                if mask >> k & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition { parts }
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The type `top/bottom` of a seaweed subalgebra of `sl(n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeaweedType {
    top: Composition,
    bottom: Composition,
}

impl SeaweedType {
    pub fn new(top: Composition, bottom: Composition) -> Result<Self, TypeError> {
        if top.n() != bottom.n() {
            return Err(TypeError::SumMismatch {
                top: top.n(),
                bottom: bottom.n(),
            });
        }
        Ok(SeaweedType { top, bottom })
    }

    pub fn from_parts(top: &[usize], bottom: &[usize]) -> Result<Self, TypeError> {
        Self::new(Composition::new(top.to_vec())?, Composition::new(bottom.to_vec())?)
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn n(&self) -> usize {
        self.top.n()
    }

    /// Swap top and bottom compositions.
    pub fn flipped(&self) -> SeaweedType {
        SeaweedType {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }

    /// The one-vertex type `1/1`.
    pub fn trivial() -> SeaweedType {
        SeaweedType {
            top: Composition { parts: vec![1] },
            bottom: Composition { parts: vec![1] },
        }
    }

    /// Every type with `n` vertices, `4^(n-1)` of them.
    pub fn all(n: usize) -> impl Iterator<Item = SeaweedType> {
        Composition::all(n).flat_map(move |top| {
            Composition::all(n).map(move |bottom| SeaweedType {
                top: top.clone(),
                bottom,
            })
        })
    }
}

impl fmt::Display for SeaweedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

impl FromStr for SeaweedType {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_type(s)
    }
}

impl Serialize for SeaweedType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SeaweedType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_type(&s).map_err(serde::de::Error::custom)
    }
}

/// Canonical, whitespace-free rendering of a type.
pub fn format_type(t: &SeaweedType) -> String {
    t.to_string()
}

pub fn parse_type(text: &str) -> Result<SeaweedType, TypeError> {
    parse_type_with_limit(text, DEFAULT_MAX_N)
}

#[derive(Debug, PartialEq, Eq)]
enum Token<'a> {
    Int(&'a str),
    Bar,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token<'_>)>, TypeError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b if b.is_ascii_whitespace() => pos += 1,
            b'|' => {
                tokens.push((pos, Token::Bar));
                pos += 1;
            }
            b'/' => {
                tokens.push((pos, Token::Slash));
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                tokens.push((start, Token::Int(&text[start..pos])));
            }
            _ => {
                return Err(TypeError::Syntax {
                    pos,
                    message: format!("unexpected character {:?}", text[pos..].chars().next().unwrap_or('?')),
                })
            }
        }
    }
    Ok(tokens)
}

/// Parse `INT ("|" INT)* "/" INT ("|" INT)*`, rejecting `n > max_n`.
pub fn parse_type_with_limit(text: &str, max_n: usize) -> Result<SeaweedType, TypeError> {
    let tokens = tokenize(text)?;
    let mut iter = tokens.iter().peekable();
    let mut sides: [Vec<(usize, &str)>; 2] = [Vec::new(), Vec::new()];

    for (side_idx, side) in sides.iter_mut().enumerate() {
        loop {
            match iter.next() {
                Some((pos, Token::Int(digits))) => side.push((*pos, digits)),
                Some((pos, tok)) => {
                    return Err(TypeError::Syntax {
                        pos: *pos,
                        message: format!("expected an integer, found {tok:?}"),
                    })
                }
                None => {
                    return Err(TypeError::Syntax {
                        pos: text.len(),
                        message: "expected an integer, found end of input".into(),
                    })
                }
            }
            match iter.peek() {
                Some((_, Token::Bar)) => {
                    iter.next();
                }
                Some((_, Token::Slash)) if side_idx == 0 => {
                    iter.next();
                    break;
                }
                None if side_idx == 1 => break,
                Some((pos, tok)) => {
                    return Err(TypeError::Syntax {
                        pos: *pos,
                        message: format!("unexpected {tok:?}"),
                    })
                }
                None => {
                    return Err(TypeError::Syntax {
                        pos: text.len(),
                        message: "missing '/' separator".into(),
                    })
                }
            }
        }
    }

    let mut comps = Vec::with_capacity(2);
    for side in &sides {
        let mut parts = Vec::with_capacity(side.len());
        let mut sum = 0usize;
        for (index, &(_, digits)) in side.iter().enumerate() {
            // Anything longer than 20 digits is certainly beyond the limit.
            let value = if digits.trim_start_matches('0').len() > 20 {
                usize::MAX
            } else {
                digits.parse::<u128>().map_or(usize::MAX, |v| usize::try_from(v).unwrap_or(usize::MAX))
            };
            if value == 0 {
                return Err(TypeError::ZeroPart { index });
            }
            sum = sum.saturating_add(value);
            parts.push(value);
        }
        comps.push((parts, sum));
    }
    let (bottom, bottom_sum) = comps.pop().unwrap();
    let (top, top_sum) = comps.pop().unwrap();
    if top_sum != bottom_sum {
        return Err(TypeError::SumMismatch {
            top: top_sum,
            bottom: bottom_sum,
        });
    }
    if top_sum > max_n {
        return Err(TypeError::TooLarge { n: top_sum, max: max_n });
    }
    SeaweedType::new(Composition::new(top)?, Composition::new(bottom)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_figure_type() {
        let t = parse_type("2|4/1|2|3").unwrap();
        assert_eq!(t.top().parts(), &[2, 4]);
        assert_eq!(t.bottom().parts(), &[1, 2, 3]);
        assert_eq!(t.n(), 6);
    }

    #[test]
    fn parses_smallest() {
        let t = parse_type("1/1").unwrap();
        assert_eq!(t, SeaweedType::trivial());
        assert_eq!(t.n(), 1);
    }

    #[test]
    fn rejects_sum_mismatch() {
        assert_eq!(
            parse_type("2|3/4"),
            Err(TypeError::SumMismatch { top: 5, bottom: 4 })
        );
    }

    #[test]
    fn whitespace_around_tokens() {
        let t = parse_type("  2 | 4 /1|2 |3\n").unwrap();
        assert_eq!(format_type(&t), "2|4/1|2|3");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "/", "2", "2/", "/2", "2//2", "2|/2", "|2/2", "2/2|", "+2/2", "-1/1", "2/2/2", "2 2/4", "a/b", "1.0/1"] {
            assert!(
                matches!(parse_type(bad), Err(TypeError::Syntax { .. })),
                "{bad:?} should be a syntax error, got {:?}",
                parse_type(bad)
            );
        }
    }

    #[test]
    fn rejects_zero_part() {
        assert!(matches!(parse_type("0|2/2"), Err(TypeError::ZeroPart { index: 0 })));
        assert!(matches!(parse_type("2/2|00"), Err(TypeError::ZeroPart { index: 1 })));
    }

    #[test]
    fn enforces_limit() {
        assert!(parse_type("64/64").is_ok());
        assert_eq!(parse_type("65/65"), Err(TypeError::TooLarge { n: 65, max: 64 }));
        assert!(parse_type_with_limit("65/65", 100).is_ok());
        assert!(matches!(
            parse_type("99999999999999999999999999/1"),
            Err(TypeError::SumMismatch { .. })
        ));
    }

    #[test]
    fn formats() {
        let t = SeaweedType::from_parts(&[14], &[6, 5, 3]).unwrap();
        assert_eq!(format_type(&t), "14/6|5|3");
        assert_eq!(format_type(&SeaweedType::trivial()), "1/1");
    }

    #[test]
    fn composition_counts() {
        for n in 1..=8 {
            let all: Vec<_> = Composition::all(n).collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|c| c.n() == n));
            let unique: std::collections::BTreeSet<_> = all.iter().collect();
            assert_eq!(unique.len(), all.len());
        }
        assert_eq!(SeaweedType::all(4).count(), 64);
    }

    #[test]
    fn block_ranges() {
        let c = Composition::new(vec![2, 4]).unwrap();
        assert_eq!(c.blocks(), vec![1..=2, 3..=6]);
    }

    fn arb_type() -> impl Strategy<Value = SeaweedType> {
        (1usize..=12).prop_flat_map(|n| {
            let masks = 1u64 << (n - 1);
            (0..masks, 0..masks).prop_map(move |(a, b)| {
                let top = Composition::all(n).nth(a as usize).unwrap();
                let bottom = Composition::all(n).nth(b as usize).unwrap();
                SeaweedType::new(top, bottom).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(t in arb_type()) {
            prop_assert_eq!(parse_type(&format_type(&t)).unwrap(), t);
        }

        #[test]
        fn never_panics_on_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..24)) {
            let text = String::from_utf8_lossy(&bytes);
            let _ = parse_type(&text);
        }

        #[test]
        fn never_panics_on_near_miss(text in "[0-9|/ +-]{0,16}") {
            let _ = parse_type(&text);
        }
    }
}
