//! Line-oriented text formats.
//!
//! Element (and polynomial) lines are `<signed integer> <p1> … <pn>`;
//! subset lines are bare one-line permutations `<p1> … <pn>`. Blank lines and
//! lines starting with `#` are ignored. A line holding only `---` separates
//! stanzas (basis vectors, or subsets). The degree is inferred from the
//! number of tokens and must agree across the whole input.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group_ring::GroupRingElement;
use crate::perm::Permutation;

pub const SEPARATOR: &str = "---";

enum Line<'a> {
    Skip,
    Separator,
    Content(Vec<&'a str>),
}

fn classify(raw: &str) -> Line<'_> {
    let line = raw.trim();
    if line.is_empty() || line.starts_with('#') {
        Line::Skip
    } else if line == SEPARATOR {
        Line::Separator
    } else {
        Line::Content(line.split_whitespace().collect())
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_perm_tokens(tokens: &[&str], line: usize) -> Result<Permutation> {
    let images = tokens
        .iter()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line, format!("invalid permutation entry `{tok}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(&images).map_err(|e| parse_err(line, e.to_string()))
}

/// Tracks the inferred degree and reports the first disagreeing line.
struct DegreeGuard {
    degree: Option<usize>,
}

impl DegreeGuard {
    fn check(&mut self, found: usize, line: usize) -> Result<()> {
        match self.degree {
            None => {
                self.degree = Some(found);
                Ok(())
            }
            Some(d) if d == found => Ok(()),
            Some(d) => Err(parse_err(
                line,
                format!("expected {d} permutation entries, found {found}"),
            )),
        }
    }

    fn resolve(self) -> Result<usize> {
        self.degree.ok_or(Error::EmptyInput)
    }
}

/// Parses element stanzas separated by `---`. `degree` is only needed when
/// the input holds no terms at all.
pub fn parse_element_stanzas(text: &str, degree: Option<usize>) -> Result<Vec<GroupRingElement>> {
    let mut guard = DegreeGuard { degree };
    let mut stanzas: Vec<Vec<(Permutation, BigInt)>> = vec![Vec::new()];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        match classify(raw) {
            Line::Skip => {}
            Line::Separator => stanzas.push(Vec::new()),
            Line::Content(tokens) => {
                if tokens.len() < 2 {
                    return Err(parse_err(line, "expected a coefficient followed by a permutation"));
                }
                let coeff = tokens[0]
                    .parse::<BigInt>()
                    .map_err(|_| parse_err(line, format!("invalid coefficient `{}`", tokens[0])))?;
                guard.check(tokens.len() - 1, line)?;
                let sigma = parse_perm_tokens(&tokens[1..], line)?;
                stanzas.last_mut().expect("nonempty").push((sigma, coeff));
            }
        }
    }
    let n = guard.resolve()?;
    stanzas
        .into_iter()
        .map(|terms| GroupRingElement::from_terms(n, terms))
        .collect()
}

/// Parses a single element; repeated permutations are summed.
pub fn parse_element(text: &str, degree: Option<usize>) -> Result<GroupRingElement> {
    let mut stanzas = parse_element_stanzas(text, degree)?;
    if stanzas.len() != 1 {
        return Err(parse_err(0, "expected a single element, found `---` separators"));
    }
    Ok(stanzas.remove(0))
}

pub fn write_element_stanzas(elements: &[GroupRingElement]) -> String {
    let mut out = String::new();
    for (i, e) in elements.iter().enumerate() {
        if i > 0 {
            out.push_str(SEPARATOR);
            out.push('\n');
        }
        write!(out, "{e}").expect("writing to a String");
    }
    out
}

/// Parses subsets separated by `---`. A permutation listed twice in the same
/// subset is an error.
pub fn parse_subsets(text: &str, degree: Option<usize>) -> Result<(usize, Vec<BTreeSet<Permutation>>)> {
    let mut guard = DegreeGuard { degree };
    let mut subsets: Vec<BTreeSet<Permutation>> = vec![BTreeSet::new()];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        match classify(raw) {
            Line::Skip => {}
            Line::Separator => subsets.push(BTreeSet::new()),
            Line::Content(tokens) => {
                guard.check(tokens.len(), line)?;
                let sigma = parse_perm_tokens(&tokens, line)?;
                if !subsets.last_mut().expect("nonempty").insert(sigma) {
                    return Err(parse_err(line, "permutation listed twice in one subset"));
                }
            }
        }
    }
    Ok((guard.resolve()?, subsets))
}

pub fn write_subsets(subsets: &[BTreeSet<Permutation>]) -> String {
    let mut out = String::new();
    for (i, t) in subsets.iter().enumerate() {
        if i > 0 {
            out.push_str(SEPARATOR);
            out.push('\n');
        }
        for sigma in t {
            writeln!(out, "{sigma}").expect("writing to a String");
        }
    }
    out
}
