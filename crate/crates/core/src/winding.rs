//! Winding-down and winding-up moves on seaweed types.
//!
//! Every Frobenius meander contracts to the one-vertex meander `1/1` through
//! a unique sequence of down-moves, each chosen by comparing the first top
//! part `a1` with the first bottom part `b1`. Up-moves invert them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::typesym::{Composition, SeaweedType};

/// Deepest enumeration accepted by [`enumerate_windup_reachable`].
pub const MAX_WINDUP_DEPTH: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    BlockElimination,
    RotationContraction,
    PureContraction,
    FlipDown,
    BlockCreation,
    RotationExpansion,
    PureExpansion,
    FlipUp,
}

impl MoveKind {
    pub const DOWN: [MoveKind; 4] = [
        MoveKind::BlockElimination,
        MoveKind::RotationContraction,
        MoveKind::PureContraction,
        MoveKind::FlipDown,
    ];
    pub const UP: [MoveKind; 4] = [
        MoveKind::BlockCreation,
        MoveKind::RotationExpansion,
        MoveKind::PureExpansion,
        MoveKind::FlipUp,
    ];

    pub fn is_down(self) -> bool {
        Self::DOWN.contains(&self)
    }

    pub fn inverse(self) -> MoveKind {
        use MoveKind::*;
        match self {
            BlockElimination => BlockCreation,
            RotationContraction => RotationExpansion,
            PureContraction => PureExpansion,
            FlipDown => FlipUp,
            BlockCreation => BlockElimination,
            RotationExpansion => RotationContraction,
            PureExpansion => PureContraction,
            FlipUp => FlipDown,
        }
    }

    pub fn name(self) -> &'static str {
        use MoveKind::*;
        match self {
            BlockElimination => "BlockElimination",
            RotationContraction => "RotationContraction",
            PureContraction => "PureContraction",
            FlipDown => "FlipDown",
            BlockCreation => "BlockCreation",
            RotationExpansion => "RotationExpansion",
            PureExpansion => "PureExpansion",
            FlipUp => "FlipUp",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for MoveKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown move {0:?}")]
pub struct UnknownMove(pub String);

impl FromStr for MoveKind {
    type Err = UnknownMove;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        Self::DOWN
            .iter()
            .chain(Self::UP.iter())
            .copied()
            .find(|m| m.name().to_ascii_lowercase() == key)
            .ok_or_else(|| UnknownMove(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WindingError {
    #[error("{0} stalls: a1 == b1")]
    Stall(SeaweedType),
    #[error("{0} is the one-vertex meander; no move applies")]
    Terminal(SeaweedType),
    #[error("{mv} does not apply to {ty}: {condition}")]
    PreconditionViolated {
        mv: MoveKind,
        ty: SeaweedType,
        condition: &'static str,
    },
    #[error("{0} is a down-move; expected an up-move")]
    NotAnUpMove(MoveKind),
    #[error("enumeration depth {depth} exceeds the limit of {max}")]
    DepthTooLarge { depth: usize, max: usize },
}

fn build(top: Vec<usize>, bottom: Vec<usize>) -> SeaweedType {
    // The move formulas conserve equal sums and positive parts, so failure
    // here is a bug rather than bad input.
    SeaweedType::new(
        Composition::new(top).expect("move produced an invalid top composition"),
        Composition::new(bottom).expect("move produced an invalid bottom composition"),
    )
    .expect("move produced unequal sums")
}

/// Apply the unique winding-down move for `t`.
pub fn wind_down_step(t: &SeaweedType) -> Result<(MoveKind, SeaweedType), WindingError> {
    let a = t.top().parts();
    let b = t.bottom().parts();
    let (a1, b1) = (a[0], b[0]);
    if t.n() == 1 {
        return Err(WindingError::Terminal(t.clone()));
    }
    if a1 == b1 {
        return Err(WindingError::Stall(t.clone()));
    }
    let step = if a1 < b1 {
        (MoveKind::FlipDown, t.flipped())
    } else if a1 == 2 * b1 {
        let top = std::iter::once(b1).chain(a[1..].iter().copied()).collect();
        (MoveKind::BlockElimination, build(top, b[1..].to_vec()))
    } else if a1 < 2 * b1 {
        let top = std::iter::once(b1).chain(a[1..].iter().copied()).collect();
        let bottom = std::iter::once(2 * b1 - a1).chain(b[1..].iter().copied()).collect();
        (MoveKind::RotationContraction, build(top, bottom))
    } else {
        let top = [a1 - 2 * b1, b1].into_iter().chain(a[1..].iter().copied()).collect();
        (MoveKind::PureContraction, build(top, b[1..].to_vec()))
    };
    Ok(step)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WindingOutcome {
    /// Reached `1/1`.
    Completed,
    /// Reached a type with `a1 == b1` and `n > 1`.
    Stalled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindingStep {
    #[serde(rename = "move")]
    pub mv: MoveKind,
    #[serde(rename = "type")]
    pub ty: SeaweedType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindingTrace {
    pub start: SeaweedType,
    pub steps: Vec<WindingStep>,
    pub outcome: WindingOutcome,
}

impl WindingTrace {
    pub fn end(&self) -> &SeaweedType {
        self.steps.last().map_or(&self.start, |s| &s.ty)
    }
}

pub fn wind_down_sequence(t: &SeaweedType) -> WindingTrace {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    let outcome = loop {
        match wind_down_step(&cur) {
            Ok((mv, next)) => {
                steps.push(WindingStep { mv, ty: next.clone() });
                cur = next;
            }
            Err(WindingError::Terminal(_)) => break WindingOutcome::Completed,
            Err(WindingError::Stall(_)) => break WindingOutcome::Stalled,
            Err(e) => unreachable!("wind_down_step only fails with Terminal or Stall: {e}"),
        }
    };
    WindingTrace {
        start: t.clone(),
        steps,
        outcome,
    }
}

/// Apply a winding-up move.
pub fn wind_up(t: &SeaweedType, mv: MoveKind) -> Result<SeaweedType, WindingError> {
    let a = t.top().parts();
    let b = t.bottom().parts();
    let a1 = a[0];
    match mv {
        MoveKind::BlockCreation => {
            let top = std::iter::once(2 * a1).chain(a[1..].iter().copied()).collect();
            let bottom = std::iter::once(a1).chain(b.iter().copied()).collect();
            Ok(build(top, bottom))
        }
        MoveKind::RotationExpansion => {
            let b1 = b[0];
            if a1 <= b1 {
                return Err(WindingError::PreconditionViolated {
                    mv,
                    ty: t.clone(),
                    condition: "requires a1 > b1",
                });
            }
            let top = std::iter::once(2 * a1 - b1).chain(a[1..].iter().copied()).collect();
            let bottom = std::iter::once(a1).chain(b[1..].iter().copied()).collect();
            Ok(build(top, bottom))
        }
        MoveKind::PureExpansion => {
            if a.len() < 2 {
                return Err(WindingError::PreconditionViolated {
                    mv,
                    ty: t.clone(),
                    condition: "requires at least two top parts",
                });
            }
            let top = std::iter::once(a1 + 2 * a[1]).chain(a[2..].iter().copied()).collect();
            let bottom = std::iter::once(a[1]).chain(b.iter().copied()).collect();
            Ok(build(top, bottom))
        }
        MoveKind::FlipUp => Ok(t.flipped()),
        down => Err(WindingError::NotAnUpMove(down)),
    }
}

/// Every type reachable from `1/1` by at most `depth` up-moves.
pub fn enumerate_windup_reachable(depth: usize) -> Result<BTreeSet<SeaweedType>, WindingError> {
    if depth > MAX_WINDUP_DEPTH {
        return Err(WindingError::DepthTooLarge {
            depth,
            max: MAX_WINDUP_DEPTH,
        });
    }
    let mut seen = BTreeSet::from([SeaweedType::trivial()]);
    let mut frontier = vec![SeaweedType::trivial()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for t in &frontier {
            for mv in MoveKind::UP {
                if let Ok(u) = wind_up(t, mv) {
                    if seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}
