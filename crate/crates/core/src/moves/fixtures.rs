//! Before/after diagram pairs for each move, and invariance checks over them.
//!
//! A fixture directory holds `manifest.txt` with one pair per line:
//! `<move> <before.mkd> <after.mkd>`, paths relative to the directory, `#` for comments.

use std::fmt;
use std::path::{Path, PathBuf};

use super::MoveKind;
use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::evaluate::compute;
use crate::magma::{validate_marked_conditions, MagmaSpec, MarkedReport, DEFAULT_N};

#[derive(Debug, Clone)]
pub struct FixturePair {
    pub kind: MoveKind,
    pub name: String,
    pub before: MarkedDiagram,
    pub after: MarkedDiagram,
}

impl FixturePair {
    /// Checks that the crossing and marker counts change the way the named move allows.
    pub fn check_stats(&self) -> Result<()> {
        use MoveKind::*;
        let (b, a) = (self.before.stats(), self.after.stats());
        let dc = a.c as i64 - b.c as i64;
        let dm = a.m as i64 - b.m as i64;
        let dw = match (a.w, b.w) {
            (Some(x), Some(y)) => Some(x - y),
            _ => None,
        };
        let ok = match self.kind {
            R1Pos => dm == 0 && b.m == 0 && dc.abs() == 1 && dw.is_none_or(|w| w == dc),
            R1Neg => dm == 0 && b.m == 0 && dc.abs() == 1 && dw.is_none_or(|w| w == -dc),
            G1 => dm == 0 && dc.abs() == 1 && dw.is_none_or(|w| w.abs() == 1),
            R2 => dm == 0 && b.m == 0 && dc.abs() == 2 && dw.is_none_or(|w| w == 0),
            G2 => dm == 0 && dc.abs() == 2 && dw.is_none_or(|w| w == 0),
            R3 => dm == 0 && b.m == 0 && dc == 0 && dw.is_none_or(|w| w == 0),
            G3 | G4 | G4Prime | G5 | G7 | G8 => dm == 0 && dc == 0 && dw.is_none_or(|w| w == 0),
            G6 | G6Prime => dc == 0 && dm.abs() == 1 && dw.is_none_or(|w| w == 0),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(format!(
                "{} ({}): stats {} -> {} do not fit the move",
                self.name, self.kind, b, a
            )))
        }
    }
}

fn stem(path: &str) -> String {
    Path::new(path).file_stem().map_or_else(|| path.to_string(), |s| s.to_string_lossy().into_owned())
}

fn read(path: &Path) -> Result<MarkedDiagram> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    MarkedDiagram::parse(&text)
}

pub fn load_fixtures(dir: &Path) -> Result<Vec<FixturePair>> {
    let manifest = dir.join("manifest.txt");
    let text = std::fs::read_to_string(&manifest).map_err(|e| Error::Io(format!("{}: {e}", manifest.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let w: Vec<&str> = line.split_whitespace().collect();
        if w.len() != 3 {
            return Err(Error::Parse { line: i + 1, msg: "expected `<move> <before> <after>`".into() });
        }
        let kind: MoveKind = w[0].parse().map_err(|_| Error::Parse { line: i + 1, msg: format!("unknown move `{}`", w[0]) })?;
        let (b, a): (PathBuf, PathBuf) = (dir.join(w[1]), dir.join(w[2]));
        out.push(FixturePair { kind, name: stem(w[1]), before: read(&b)?, after: read(&a)? });
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct MoveOutcome {
    pub kind: MoveKind,
    pub name: String,
    /// `Ok(equal)`, or the evaluation error.
    pub result: std::result::Result<bool, Error>,
    pub guaranteed: bool,
}

impl MoveOutcome {
    pub fn invariant(&self) -> bool {
        matches!(self.result, Ok(true))
    }
}

#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub magma: String,
    pub normalizers: Vec<String>,
    pub outcomes: Vec<MoveOutcome>,
}

impl InvarianceReport {
    /// Every guaranteed move was invariant on every pair.
    pub fn consistent(&self) -> bool {
        self.outcomes.iter().filter(|o| o.guaranteed).all(MoveOutcome::invariant)
    }

    /// Per move kind: whether all its pairs were invariant.
    pub fn by_kind(&self) -> Vec<(MoveKind, bool, bool)> {
        let mut kinds: Vec<MoveKind> = self.outcomes.iter().map(|o| o.kind).collect();
        kinds.sort();
        kinds.dedup();
        kinds
            .into_iter()
            .map(|k| {
                let mine: Vec<&MoveOutcome> = self.outcomes.iter().filter(|o| o.kind == k).collect();
                (k, mine.iter().all(|o| o.invariant()), mine[0].guaranteed)
            })
            .collect()
    }
}

impl fmt::Display for InvarianceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "magma {} normalizers [{}]", self.magma, self.normalizers.join(", "))?;
        for o in &self.outcomes {
            let res = match &o.result {
                Ok(true) => "invariant".to_string(),
                Ok(false) => "changed".to_string(),
                Err(e) => format!("error: {e}"),
            };
            let g = if o.guaranteed { "guaranteed" } else { "not guaranteed" };
            writeln!(f, "{:<4} {:<24} {res} ({g})", o.kind.to_string(), o.name)?;
        }
        Ok(())
    }
}

/// The flags of a magma without `•` are all false.
pub fn marked_flags(m: &MagmaSpec) -> Result<MarkedReport> {
    match validate_marked_conditions(m, DEFAULT_N) {
        Err(Error::NoBullet) => Ok(MarkedReport {
            period2: false,
            mixed_entropic: false,
            bullet_absorbing: false,
            mixed_residual: String::new(),
        }),
        other => other,
    }
}

pub fn verify_invariance(m: &MagmaSpec, normalizers: &[&str], pairs: &[FixturePair]) -> Result<InvarianceReport> {
    let kinds = normalizers
        .iter()
        .map(|n| m.normalizer(n).map(|s| s.kind))
        .collect::<Result<Vec<_>>>()?;
    let flags = marked_flags(m)?;
    let outcomes = pairs
        .iter()
        .map(|p| {
            let result = compute(&p.before, m, normalizers)
                .and_then(|a| compute(&p.after, m, normalizers).and_then(|b| a.eq(&b)));
            MoveOutcome { kind: p.kind, name: p.name.clone(), result, guaranteed: p.kind.guaranteed(&flags, &kinds) }
        })
        .collect();
    Ok(InvarianceReport {
        magma: m.name.clone(),
        normalizers: normalizers.iter().map(|s| s.to_string()).collect(),
        outcomes,
    })
}
