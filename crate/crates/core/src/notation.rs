//! Cycle notation.
//!
//! Two textual forms are understood, both with the degree supplied
//! separately:
//!
//! * the compact form for `n <= 9`, one pair of parentheses with each cycle
//!   written as digits and terminated by a point: `(123.45.6.)`;
//! * the extended form for any degree, one parenthesised group of
//!   space-separated integers per cycle: `(1 2 3)(4 5)(6)`.
//!
//! Cycles are read left to right, so `(123.)` sends 1 to 2, 2 to 3 and 3
//! back to 1. Fixed points may be left out on input; they are always
//! written on output.

use std::fmt;

use crate::error::{check_degree, Error, Result};
use crate::perm::Permutation;

/// Largest degree rendered in the compact single-digit form.
pub const COMPACT_MAX_DEGREE: usize = 9;

/// Parses cycle notation for a permutation of degree `n`.
pub fn parse(text: &str, n: usize) -> Result<Permutation> {
    check_degree(n)?;
    let text = text.trim();
    let cycles = cycles_of(text)?;

    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for cycle in &cycles {
        for &x in cycle {
            if x == 0 || x > n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            if std::mem::replace(&mut used[x - 1], true) {
                return Err(Error::RepeatedElement(x));
            }
        }
        for (i, &x) in cycle.iter().enumerate() {
            image[x - 1] = Some(cycle[(i + 1) % cycle.len()]);
        }
    }
    let raw = image
        .into_iter()
        .enumerate()
        .map(|(i, y)| (y.unwrap_or(i + 1) - 1) as u8)
        .collect();
    Ok(Permutation::from_raw_unchecked(raw))
}

/// Like [`parse`] but every element of `1..=n` must be written, fixed points
/// included.
pub fn parse_strict(text: &str, n: usize) -> Result<Permutation> {
    let phi = parse(text, n)?;
    let written = cycles_of(text.trim())?.iter().map(Vec::len).sum::<usize>();
    if written != n {
        return Err(Error::MissingElements(n));
    }
    Ok(phi)
}

fn cycles_of(text: &str) -> Result<Vec<Vec<usize>>> {
    if text.contains('.') {
        parse_compact(text)
    } else {
        parse_extended(text)
    }
}

/// `(123.45.6.)`: digits only, every cycle closed by a point.
fn parse_compact(text: &str) -> Result<Vec<Vec<usize>>> {
    let body = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Malformed(format!("{text:?} must be wrapped in parentheses")))?;
    if !body.ends_with('.') {
        return Err(Error::Malformed(format!(
            "{text:?}: every cycle must end with '.'"
        )));
    }
    body[..body.len() - 1]
        .split('.')
        .map(|cycle| {
            if cycle.is_empty() {
                return Err(Error::Malformed(format!("{text:?}: empty cycle")));
            }
            cycle
                .chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::Malformed(format!("{text:?}: unexpected character {c:?}"))
                    })
                })
                .collect()
        })
        .collect()
}

/// `(1 2 3)(4 5)`: groups of whitespace-separated integers. `()` and the
/// empty string denote the identity.
fn parse_extended(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Malformed(format!("{text:?}: expected '('")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Malformed(format!("{text:?}: unclosed '('")))?;
        let group = &open[..close];
        if group.contains('(') {
            return Err(Error::Malformed(format!("{text:?}: nested '('")));
        }
        let cycle = group
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("{text:?}: bad element {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        } else if text != "()" {
            return Err(Error::Malformed(format!("{text:?}: empty cycle")));
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Canonical text: compact form for `n <= 9`, extended form otherwise.
pub fn format(phi: &Permutation) -> String {
    phi.to_string()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.decompose();
        if self.degree() <= COMPACT_MAX_DEGREE {
            write!(f, "(")?;
            for cycle in d.cycles() {
                for x in cycle {
                    write!(f, "{x}")?;
                }
                write!(f, ".")?;
            }
            write!(f, ")")
        } else {
            for cycle in d.cycles() {
                write!(f, "(")?;
                for (i, x) in cycle.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}
