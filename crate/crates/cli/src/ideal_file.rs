//! Ideal files:
//!
//! ```text
//! # three coordinate points
//! ring 0 x,y,z
//! gens:
//! x*y
//! y*z
//! z*x
//! ```
//!
//! The header gives the characteristic (`0` for the rationals, otherwise a
//! prime below 2^31) and the variables; each line after `gens:` is one
//! homogeneous generator. `#` starts a comment.

use std::fmt;
use std::sync::Arc;

use satbound::{AlgebraError, Field, FieldKind, Ideal, PolyRing};

/// Largest number of variables a file may declare.
pub const MAX_FILE_VARS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for FileError {}

fn at(line: usize, column: usize, message: impl Into<String>) -> FileError {
    FileError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub text: String,
    /// 1-based position of `text` in the source, for error messages.
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub gens: Vec<Generator>,
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

fn valid_var(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<IdealFile, FileError> {
        let mut header: Option<(u64, Vec<String>)> = None;
        let mut in_gens = false;
        let mut gens = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let code = strip_comment(raw);
            let trimmed = code.trim();
            if trimmed.is_empty() {
                continue;
            }
            let column = code.len() - code.trim_start().len() + 1;
            if in_gens {
                gens.push(Generator {
                    text: trimmed.to_string(),
                    line: line_no,
                    column,
                });
                continue;
            }
            if header.is_none() {
                let mut parts = trimmed.split_whitespace();
                if parts.next() != Some("ring") {
                    return Err(at(line_no, column, "expected `ring <char> <vars>`"));
                }
                let ch = parts
                    .next()
                    .ok_or_else(|| at(line_no, column, "missing characteristic"))?;
                let ch_col = code.find(ch).unwrap_or(0) + 1;
                let characteristic: u64 = ch
                    .parse()
                    .map_err(|_| at(line_no, ch_col, format!("bad characteristic `{ch}`")))?;
                let rest: Vec<&str> = parts.collect();
                if rest.is_empty() {
                    return Err(at(line_no, code.len() + 1, "missing variable list"));
                }
                let list = rest.join("");
                let list_col = code.find(rest[0]).unwrap_or(0) + 1;
                let vars: Vec<String> = list.split(',').map(|v| v.trim().to_string()).collect();
                for v in &vars {
                    if !valid_var(v) {
                        return Err(at(line_no, list_col, format!("bad variable name `{v}`")));
                    }
                }
                if vars.len() > MAX_FILE_VARS {
                    return Err(at(
                        line_no,
                        list_col,
                        format!("{} variables declared, at most {MAX_FILE_VARS} allowed", vars.len()),
                    ));
                }
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return Err(at(line_no, list_col, format!("duplicate variable `{v}`")));
                    }
                }
                header = Some((characteristic, vars));
                continue;
            }
            if trimmed == "gens:" {
                in_gens = true;
                continue;
            }
            return Err(at(line_no, column, "expected `gens:`"));
        }
        let Some((characteristic, vars)) = header else {
            return Err(at(last_line.max(1), 1, "missing `ring` header"));
        };
        if !in_gens {
            return Err(at(last_line.max(1), 1, "missing `gens:` section"));
        }
        Ok(IdealFile {
            characteristic,
            vars,
            gens,
        })
    }

    /// The ideal over `field`, whose characteristic must match the header.
    pub fn to_ideal<F: Field>(&self, field: F) -> Result<Ideal<F>, FileError> {
        let desc = field.descriptor();
        let ch = if desc.kind == FieldKind::Rationals { 0 } else { desc.characteristic };
        if ch != self.characteristic {
            return Err(at(1, 1, format!("file declares characteristic {}", self.characteristic)));
        }
        let ring: Arc<PolyRing<F>> = PolyRing::new(field, self.vars.clone()).map_err(|e| at(1, 1, e.to_string()))?;
        let mut polys = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let p = ring.parse(&g.text).map_err(|e| match e {
                AlgebraError::Parse { column, message, .. } => at(g.line, g.column + column - 1, message),
                other => at(g.line, g.column, other.to_string()),
            })?;
            if !p.is_homogeneous() {
                return Err(at(g.line, g.column, "generator is not homogeneous"));
            }
            polys.push(p);
        }
        Ideal::new(&ring, polys).map_err(|e| at(1, 1, e.to_string()))
    }

    pub fn from_ideal<F: Field>(ideal: &Ideal<F>) -> IdealFile {
        let desc = ideal.ring().field().descriptor();
        IdealFile {
            characteristic: if desc.kind == FieldKind::Rationals { 0 } else { desc.characteristic },
            vars: ideal.ring().names().to_vec(),
            gens: ideal
                .generators()
                .iter()
                .enumerate()
                .map(|(i, g)| Generator {
                    text: g.to_string(),
                    line: i + 3,
                    column: 1,
                })
                .collect(),
        }
    }
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {} {}", self.characteristic, self.vars.join(","))?;
        writeln!(f, "gens:")?;
        for g in &self.gens {
            writeln!(f, "{}", g.text)?;
        }
        Ok(())
    }
}
