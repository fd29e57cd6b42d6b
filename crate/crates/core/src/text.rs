//! The line-oriented framework document format.
//!
//! A document is a sequence of statements, one per line: `arg(x).`,
//! `att(x,y).` and `pref(x,y).` (x weakly preferred to y). `#` starts a
//! comment, blank lines are skipped, and statements may reference arguments
//! declared anywhere in the document. Any `pref` line makes the document
//! preference-based.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::framework::{Argument, ArgumentationFramework};
use crate::preferences::PreferenceBasedFramework;

/// A parsed document: a plain attack framework or a preference-based one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameworkDocument {
    Abstract(ArgumentationFramework),
    PreferenceBased(PreferenceBasedFramework),
}

impl FrameworkDocument {
    pub fn is_preference_based(&self) -> bool {
        matches!(self, FrameworkDocument::PreferenceBased(_))
    }

    /// The attack-level framework, preferences dropped if present.
    pub fn abstract_framework(&self) -> &ArgumentationFramework {
        match self {
            FrameworkDocument::Abstract(af) => af,
            FrameworkDocument::PreferenceBased(paf) => paf.abstract_framework(),
        }
    }
}

enum Statement {
    Arg(Argument),
    Att(Argument, Argument),
    Pref(Argument, Argument),
}

fn parse_error(line: usize, reason: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        reason: reason.into(),
    }
}

fn parse_label(token: &str, line: usize) -> Result<Argument> {
    Argument::new(token.trim()).map_err(|e| match e {
        Error::InvalidLabel(l) => parse_error(
            line,
            format!("invalid argument label {l:?} (labels are nonempty and drawn from [A-Za-z0-9_])"),
        ),
        other => other,
    })
}

fn parse_statement(line_no: usize, line: &str) -> Result<Option<Statement>> {
    let text = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let text = text.trim();
    if text.is_empty() {
        return Ok(None);
    }
    let body = text
        .strip_suffix('.')
        .ok_or_else(|| parse_error(line_no, "statement must end with '.'"))?;
    if body.contains('.') {
        return Err(parse_error(line_no, "one statement per line"));
    }
    let open = body
        .find('(')
        .ok_or_else(|| parse_error(line_no, "expected '(' after the statement name"))?;
    let inner = body[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| parse_error(line_no, "statement must close with ')'"))?;
    let kind = body[..open].trim();
    let tokens: Vec<&str> = inner.split(',').collect();
    match (kind, tokens.as_slice()) {
        ("arg", [label]) => Ok(Some(Statement::Arg(parse_label(label, line_no)?))),
        ("att", [a, b]) => Ok(Some(Statement::Att(
            parse_label(a, line_no)?,
            parse_label(b, line_no)?,
        ))),
        ("pref", [a, b]) => Ok(Some(Statement::Pref(
            parse_label(a, line_no)?,
            parse_label(b, line_no)?,
        ))),
        ("arg", _) => Err(parse_error(line_no, "arg takes exactly one label")),
        ("att", _) => Err(parse_error(line_no, "att takes exactly two labels")),
        ("pref", _) => Err(parse_error(line_no, "pref takes exactly two labels")),
        _ => Err(parse_error(
            line_no,
            format!("unknown statement {kind:?} (expected arg, att or pref)"),
        )),
    }
}

/// Parses a document. Duplicate statements are idempotent; `att` and `pref`
/// may precede the `arg` lines that declare their labels.
pub fn parse_framework(text: &str) -> Result<FrameworkDocument> {
    let mut statements = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(statement) = parse_statement(i + 1, line)? {
            statements.push((i + 1, statement));
        }
    }

    let mut arguments = BTreeSet::new();
    for (_, statement) in &statements {
        if let Statement::Arg(a) = statement {
            arguments.insert(a.clone());
        }
    }

    let mut attacks = BTreeSet::new();
    let mut prefs = BTreeSet::new();
    let mut has_prefs = false;
    for (line, statement) in statements {
        let endpoints: &[&Argument] = match &statement {
            Statement::Arg(_) => &[],
            Statement::Att(a, b) | Statement::Pref(a, b) => &[a, b],
        };
        for end in endpoints {
            if !arguments.contains(*end) {
                return Err(Error::UndeclaredArgument {
                    label: end.as_str().to_owned(),
                    line,
                });
            }
        }
        match statement {
            Statement::Arg(_) => {}
            Statement::Att(a, b) => {
                attacks.insert((a, b));
            }
            Statement::Pref(a, b) => {
                has_prefs = true;
                prefs.insert((a, b));
            }
        }
    }

    let framework = ArgumentationFramework::from_sets(arguments, attacks)?;
    if has_prefs {
        Ok(FrameworkDocument::PreferenceBased(
            PreferenceBasedFramework::from_parts(framework, prefs)?,
        ))
    } else {
        Ok(FrameworkDocument::Abstract(framework))
    }
}

/// Canonical text for an attack framework: sorted `arg` lines, then sorted
/// `att` lines, one per line with a trailing newline; the empty framework
/// serializes to the empty string.
pub fn serialize_framework(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for a in af.arguments() {
        let _ = writeln!(out, "arg({a}).");
    }
    for (a, b) in af.attacks() {
        let _ = writeln!(out, "att({a},{b}).");
    }
    out
}

/// Canonical text for a preference-based framework. The preference lines
/// spell out the stored transitive closure, so parsing the result
/// reconstructs the framework exactly.
pub fn serialize_paf(paf: &PreferenceBasedFramework) -> String {
    let mut out = serialize_framework(paf.abstract_framework());
    for (a, b) in paf.preferences() {
        let _ = writeln!(out, "pref({a},{b}).");
    }
    out
}

/// Canonical text for either document kind.
pub fn serialize_document(doc: &FrameworkDocument) -> String {
    match doc {
        FrameworkDocument::Abstract(af) => serialize_framework(af),
        FrameworkDocument::PreferenceBased(paf) => serialize_paf(paf),
    }
}
