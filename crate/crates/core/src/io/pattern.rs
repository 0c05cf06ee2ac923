//! Compact label patterns such as `(1,1,0,2,2,0)^2(3,3,3,0)`.
//!
//! ```text
//! pattern := group+
//! group   := "(" label ("," label)* ")" ("^" repeat)?
//! label   := digits | "[n]"
//! ```
//!
//! A missing exponent means 1. Whitespace between tokens is ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::labelling::{table_pattern, Label, Labelling, LabellingError, PathOrCycle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown label {token:?} at byte {pos}")]
    UnknownToken { token: String, pos: usize },
    #[error("pattern expands to {got} labels, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error(transparent)]
    Labelling(#[from] LabellingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub labels: Vec<Label>,
    pub repeat: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Pattern {
    pub groups: Vec<Group>,
}

impl Pattern {
    /// Length of the expanded label sequence.
    pub fn len(&self) -> usize {
        self.groups.iter().map(|g| g.labels.len() * g.repeat).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn expand(&self) -> Vec<Label> {
        self.groups
            .iter()
            .flat_map(|g| std::iter::repeat_n(&g.labels, g.repeat).flatten().copied())
            .collect()
    }

    /// Groups the sequence greedily: at each position take the block whose
    /// immediate repetitions cover the most labels, otherwise extend a run
    /// of unrepeated labels.
    pub fn compress(labels: &[Label]) -> Pattern {
        let mut groups = Vec::new();
        let mut literal: Vec<Label> = Vec::new();
        let mut i = 0;
        while i < labels.len() {
            let rest = &labels[i..];
            let mut best: Option<(usize, usize)> = None;
            for k in 1..=rest.len() / 2 {
                let block = &rest[..k];
                let r = rest.chunks_exact(k).take_while(|c| *c == block).count();
                if r >= 2 && best.is_none_or(|(bk, br)| k * r > bk * br) {
                    best = Some((k, r));
                }
            }
            match best {
                Some((k, r)) => {
                    if !literal.is_empty() {
                        groups.push(Group {
                            labels: std::mem::take(&mut literal),
                            repeat: 1,
                        });
                    }
                    groups.push(Group {
                        labels: rest[..k].to_vec(),
                        repeat: r,
                    });
                    i += k * r;
                }
                None => {
                    literal.push(rest[0]);
                    i += 1;
                }
            }
        }
        if !literal.is_empty() {
            groups.push(Group {
                labels: literal,
                repeat: 1,
            });
        }
        Pattern { groups }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.groups.iter().filter(|g| g.repeat > 0) {
            f.write_str("(")?;
            for (i, l) in g.labels.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
            if g.repeat != 1 {
                write!(f, "^{}", g.repeat)?;
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), PatternError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            other => Err(PatternError::Syntax {
                pos: self.pos,
                msg: match other {
                    Some(x) => format!("expected {:?}, found {:?}", c as char, x as char),
                    None => format!("expected {:?}, found end of input", c as char),
                },
            }),
        }
    }

    fn number(&mut self) -> Result<usize, PatternError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or(PatternError::Syntax {
                pos: start,
                msg: "expected a number".into(),
            })
    }

    fn label(&mut self) -> Result<Label, PatternError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && !matches!(self.s[self.pos], b',' | b')' | b'(') && !self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let token = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
        if token.is_empty() {
            return Err(PatternError::Syntax {
                pos: start,
                msg: "expected a label".into(),
            });
        }
        Label::parse(&token).ok_or(PatternError::UnknownToken { token, pos: start })
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer {
            s: text.as_bytes(),
            pos: 0,
        };
        let mut groups = Vec::new();
        while lx.peek().is_some() {
            lx.expect(b'(')?;
            let mut labels = vec![lx.label()?];
            while lx.peek() == Some(b',') {
                lx.pos += 1;
                labels.push(lx.label()?);
            }
            lx.expect(b')')?;
            let mut repeat = 1;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                let at = lx.pos;
                repeat = lx.number()?;
                if repeat == 0 {
                    return Err(PatternError::Syntax {
                        pos: at,
                        msg: "exponent must be at least 1".into(),
                    });
                }
            }
            groups.push(Group { labels, repeat });
        }
        if groups.is_empty() {
            return Err(PatternError::Syntax {
                pos: 0,
                msg: "empty pattern".into(),
            });
        }
        Ok(Pattern { groups })
    }
}

/// Parses a pattern for a graph of order `m` and clique order `n`.
pub fn parse_pattern(text: &str, m: usize, n: usize) -> Result<Labelling, PatternError> {
    let p: Pattern = text.parse()?;
    let labels = p.expand();
    if labels.len() != m {
        return Err(PatternError::Length {
            expected: m,
            got: labels.len(),
        });
    }
    Ok(Labelling::from_labels(n, &labels)?)
}

/// Prints a labelling in pattern syntax. For a path or cycle whose labelling
/// is the standard optimal pattern, the standard grouping is used.
pub fn print_pattern(l: &Labelling, family: Option<PathOrCycle>) -> String {
    let labels = l.labels();
    if let Some(f) = family {
        if let Ok(p) = table_pattern(f, labels.len()) {
            if p.expand() == labels {
                return p.to_string();
            }
        }
    }
    Pattern::compress(&labels).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::pattern_labelling;

    #[test]
    fn c16_pattern() {
        let l = parse_pattern("(1,1,0,2,2,0)^2(3,3,3,0)", 16, 3).unwrap();
        assert_eq!(l, pattern_labelling(PathOrCycle::Cycle, 16, 3).unwrap());
        assert_eq!(print_pattern(&l, Some(PathOrCycle::Cycle)), "(1,1,0,2,2,0)^2(3,3,3,0)");
    }

    #[test]
    fn all_ones_c3() {
        let l = parse_pattern("(1,1,1)", 3, 3).unwrap();
        assert_eq!(l.tags(), &[1, 1, 1]);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            parse_pattern("(1,1)^3", 5, 3),
            Err(PatternError::Length { expected: 5, got: 6 })
        );
    }

    #[test]
    fn full_label_and_whitespace() {
        let l = parse_pattern(" ([n], 0)^2 (1,1) ", 6, 4).unwrap();
        assert_eq!(l.to_strings(), ["[n]", "0", "[n]", "0", "1", "1"]);
        assert_eq!(print_pattern(&l, None), "([n],0)^2(1)^2");
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!("(1,x)".parse::<Pattern>(), Err(PatternError::UnknownToken { .. })));
        assert!(matches!("(1,1".parse::<Pattern>(), Err(PatternError::Syntax { .. })));
        assert!(matches!("(1)^0".parse::<Pattern>(), Err(PatternError::Syntax { .. })));
        assert!(matches!("".parse::<Pattern>(), Err(PatternError::Syntax { .. })));
        assert!(matches!("(1,,1)".parse::<Pattern>(), Err(PatternError::Syntax { .. })));
        assert!(matches!(parse_pattern("(4,4)", 2, 3), Err(PatternError::Labelling(_))));
    }

    #[test]
    fn table_rows_round_trip() {
        for m in 3..=40 {
            for f in [PathOrCycle::Path, PathOrCycle::Cycle] {
                let l = pattern_labelling(f, m, 3).unwrap();
                let text = print_pattern(&l, Some(f));
                assert_eq!(text, table_pattern(f, m).unwrap().to_string());
                assert_eq!(parse_pattern(&text, m, 3).unwrap(), l);
            }
        }
    }

    #[test]
    fn generic_printer_round_trips() {
        let l = Labelling::new(3, vec![0, 1, 1, 0, 1, 1, 0, 4, 2, 2, 2]).unwrap();
        let text = print_pattern(&l, None);
        assert_eq!(parse_pattern(&text, l.len(), 3).unwrap(), l);
    }
}
