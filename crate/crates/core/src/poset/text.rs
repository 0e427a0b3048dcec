//! Plain-text poset files.
//!
//! ```text
//! # the poset X
//! d 5
//! names: a b c g h
//! 0 2
//! 1 2
//! 2 3
//! 2 4
//! ```
//!
//! The header `d <n>` comes first. Each `<i> <j>` line states that `x_j`
//! covers `x_i`. `#` starts a comment; blank lines are ignored. The
//! optional `names:` line assigns display labels to the indices.

use std::fmt::Write as _;

use thiserror::Error;

use super::Poset;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error(transparent)]
    Poset(#[from] Error),
}

/// A parsed poset file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetFile {
    pub poset: Poset,
    pub names: Option<Vec<String>>,
}

impl PosetFile {
    /// Label for element `i`: its name if the file has one, else the index.
    pub fn label(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> TextError {
    TextError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_poset(input: &str) -> Result<PosetFile, TextError> {
    let mut d: Option<usize> = None;
    let mut names = None;
    let mut covers = Vec::new();

    for (k, raw) in input.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = d else {
            let mut tokens = line.split_whitespace();
            let (Some("d"), Some(count), None) = (tokens.next(), tokens.next(), tokens.next())
            else {
                return Err(syntax(line_no, "expected header `d <n>`"));
            };
            let count: usize = count
                .parse()
                .map_err(|_| syntax(line_no, format!("invalid element count `{count}`")))?;
            if count == 0 {
                return Err(syntax(line_no, "a poset needs at least one element"));
            }
            d = Some(count);
            continue;
        };
        if let Some(rest) = line.strip_prefix("names:") {
            if names.is_some() {
                return Err(syntax(line_no, "duplicate `names:` line"));
            }
            let list: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
            if list.len() != n {
                return Err(syntax(
                    line_no,
                    format!("expected {n} names, found {}", list.len()),
                ));
            }
            names = Some(list);
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(i), Some(j), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(syntax(line_no, "expected a cover line `<i> <j>`"));
        };
        let parse_index = |tok: &str| -> Result<usize, TextError> {
            let v: usize = tok
                .parse()
                .map_err(|_| syntax(line_no, format!("invalid element index `{tok}`")))?;
            if v >= n {
                return Err(syntax(line_no, format!("element {v} out of range 0..{n}")));
            }
            Ok(v)
        };
        let (i, j) = (parse_index(i)?, parse_index(j)?);
        if i == j {
            return Err(syntax(line_no, format!("element {i} cannot cover itself")));
        }
        covers.push((i, j));
    }

    let d = d.ok_or_else(|| syntax(input.lines().count().max(1), "missing header `d <n>`"))?;
    let poset = Poset::from_covers(d, &covers)?;
    Ok(PosetFile { poset, names })
}

/// Renders `p` as its header followed by its cover pairs.
pub fn write_poset(p: &Poset, names: Option<&[String]>) -> String {
    let mut out = format!("d {}\n", p.len());
    if let Some(names) = names {
        let _ = writeln!(out, "names: {}", names.join(" "));
    }
    for (i, j) in p.cover_pairs() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_x() {
        let file = parse_poset("d 5\n0 2\n1 2\n2 3\n2 4\n").unwrap();
        assert_eq!(file.poset, Poset::x_poset());
        assert_eq!(file.names, None);
        assert_eq!(write_poset(&file.poset, None), "d 5\n0 2\n1 2\n2 3\n2 4\n");
    }

    #[test]
    fn comments_blank_lines_and_names() {
        let src = "# X\n\nd 5   # five\nnames: a b c g h\n0 2\n\n1 2 # b<c\n2 3\n2 4\n";
        let file = parse_poset(src).unwrap();
        assert_eq!(file.poset, Poset::x_poset());
        assert_eq!(file.label(4), "h");
        let names = file.names.clone().unwrap();
        let again = parse_poset(&write_poset(&file.poset, Some(&names))).unwrap();
        assert_eq!(again, file);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_poset("d 2\n0 x\n").unwrap_err();
        assert_eq!(err, syntax(2, "invalid element index `x`"));
        assert!(matches!(
            parse_poset("0 1\n"),
            Err(TextError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_poset("d 2\n0 5\n"),
            Err(TextError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("d 2\n0 1 1\n"),
            Err(TextError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("# nothing\n"),
            Err(TextError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poset("d 3\nnames: a b\n"),
            Err(TextError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn cycle_is_a_poset_error() {
        let err = parse_poset("d 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err, TextError::Poset(Error::Cycle(0, 1)));
    }

    #[test]
    fn singleton() {
        let file = parse_poset("d 1\n").unwrap();
        assert_eq!(file.poset, Poset::chain(1));
    }
}
