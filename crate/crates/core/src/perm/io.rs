//! Group file format: a `degree N` header followed by one generator per line in
//! 1-based cycle notation. Lines starting with `#` and blank lines are ignored.

use thiserror::Error;

use super::{GroupWithChain, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupFileError {
    #[error("missing 'degree N' header")]
    MissingHeader,
    #[error("line {line}: bad header {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: {source}")]
    Generator { line: usize, source: PermError },
    #[error("no generators")]
    Empty,
}

pub fn parse_group_file(text: &str) -> Result<GroupWithChain, GroupFileError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let mut parts = line.split_whitespace();
                let n = match (parts.next(), parts.next(), parts.next()) {
                    (Some("degree"), Some(n), None) => n.parse::<usize>().ok().filter(|&n| n > 0),
                    _ => None,
                };
                degree = Some(n.ok_or_else(|| GroupFileError::BadHeader {
                    line: i + 1,
                    text: line.to_string(),
                })?);
            }
            Some(n) => {
                let p = Permutation::parse(line, n)
                    .map_err(|source| GroupFileError::Generator { line: i + 1, source })?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or(GroupFileError::MissingHeader)?;
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    GroupWithChain::from_generators(gens).map_err(|_| GroupFileError::Empty)
}

/// Canonical writer: header, then the generators in canonical cycle notation.
pub fn format_group_file(group: &GroupWithChain) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
