//! Closed forms for `i(P_m × K_n)` and `i(C_m × K_n)`, and the repeating
//! label patterns that attain them.

use std::fmt;
use std::str::FromStr;

use super::{Label, Labelling, LabellingError};
use crate::io::pattern::{Group, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathOrCycle {
    Path,
    Cycle,
}

impl fmt::Display for PathOrCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathOrCycle::Path => "path",
            PathOrCycle::Cycle => "cycle",
        })
    }
}

impl FromStr for PathOrCycle {
    type Err = LabellingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" | "P" => Ok(PathOrCycle::Path),
            "cycle" | "C" => Ok(PathOrCycle::Cycle),
            _ => Err(LabellingError::OutOfRange(format!("unknown family {s:?}, expected path or cycle"))),
        }
    }
}

fn check_m(m: usize) -> Result<(), LabellingError> {
    if m < 3 {
        return Err(LabellingError::OutOfRange(format!("order must be at least 3, got {m}")));
    }
    Ok(())
}

/// Closed-form `i(P_m × K_n)` or `i(C_m × K_n)` for `m ≥ 3`, `n ≥ 2`.
pub fn formula_value(family: PathOrCycle, m: usize, n: usize) -> Result<usize, LabellingError> {
    check_m(m)?;
    if n < 2 {
        return Err(LabellingError::CliqueOrder(n));
    }
    let third = m.div_ceil(3);
    Ok(match (family, n) {
        (PathOrCycle::Path, 2) => 2 * third,
        // C_m × K_2 is C_2m for odd m and two copies of C_m for even m.
        (PathOrCycle::Cycle, 2) if m % 2 == 1 => (2 * m).div_ceil(3),
        (PathOrCycle::Cycle, 2) => 2 * third,
        (PathOrCycle::Cycle, _) if m <= 5 => m,
        (PathOrCycle::Cycle, _) => (2 * m).div_ceil(3),
        (PathOrCycle::Path, _) => (2 * m + 2).div_ceil(3),
    })
}

fn group(labels: &[u32], repeat: usize) -> Group {
    Group {
        labels: labels
            .iter()
            .map(|&k| if k == 0 { Label::Zero } else { Label::Class(k) })
            .collect(),
        repeat,
    }
}

const BLOCK: [u32; 6] = [1, 1, 0, 2, 2, 0];

/// The optimal pattern for `P_m` or `C_m`, `m ≥ 3`, as a block repeated
/// `r = ⌊m/6⌋` times (or one fewer) followed by a tail fixed by `m mod 6`.
pub fn table_pattern(family: PathOrCycle, m: usize) -> Result<Pattern, LabellingError> {
    check_m(m)?;
    let r = m / 6;
    let (reps, tail): (usize, &[u32]) = match family {
        PathOrCycle::Cycle if m <= 5 => {
            return Ok(Pattern {
                groups: vec![group(&vec![1; m], 1)],
            })
        }
        PathOrCycle::Cycle => match m % 6 {
            0 => (r, &[]),
            1 => (r - 1, &[1, 1, 0, 2, 2, 2, 0]),
            2 => (r - 1, &[1, 1, 0, 2, 2, 2, 2, 0]),
            3 => (r, &[3, 3, 0]),
            4 => (r, &[3, 3, 3, 0]),
            _ => (r, &[3, 3, 3, 3, 0]),
        },
        PathOrCycle::Path => match m % 6 {
            0 => (r - 1, &[1, 1, 0, 2, 2, 2]),
            1 => (r - 1, &[1, 1, 1, 0, 2, 2, 2]),
            2 => (r, &[1, 1]),
            3 => (r, &[1, 1, 1]),
            4 => (r, &[1, 1, 1, 1]),
            _ => (r, &[1, 1, 0, 2, 2]),
        },
    };
    let mut groups = Vec::new();
    if reps > 0 {
        groups.push(group(&BLOCK, reps));
    }
    if !tail.is_empty() {
        groups.push(group(tail, 1));
    }
    Ok(Pattern { groups })
}

/// The pattern from [`table_pattern`] as a labelling for `n ≥ 3`.
pub fn pattern_labelling(family: PathOrCycle, m: usize, n: usize) -> Result<Labelling, LabellingError> {
    if n < 3 {
        return Err(LabellingError::OutOfRange(format!(
            "patterns use three classes, so n must be at least 3, got {n}"
        )));
    }
    Labelling::from_labels(n, &table_pattern(family, m)?.expand())
}
