//! Declarative text format for custom magmas.
//!
//! ```text
//! # comment
//! name my-magma
//! var A laurent
//! var x
//! var y
//! relation A^4 + 2 + A^-4 = 1
//! localize x + y*(-A^2 - A^-2)
//! star A ; A^-1 ; 0
//! bullet x ; y ; 0
//! seq geometric -A^2 - A^-2
//! normalizer rho-writhe -A^3
//! normalizer phi-marker
//! ```
//! `seq constant <poly>` is the other sequence form; `rho-parity <poly>` the other normalizer.

use super::{AffineForm, MagmaSpec, Sequence};
use crate::algebra::{parse_polynomial, Polynomial, RingContext, VariableTable};
use crate::error::{Error, Result};
use crate::evaluate::{NormalizerKind, NormalizerSpec};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn relocate(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

pub fn parse_magma(text: &str) -> Result<MagmaSpec> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    let mut vars = Vec::new();
    for (ln, l) in &lines {
        let mut words = l.split_whitespace();
        if words.next() == Some("var") {
            let name = words.next().ok_or_else(|| perr(*ln, "var needs a name"))?;
            let laurent = match words.next() {
                None => false,
                Some("laurent") => true,
                Some(w) => return Err(perr(*ln, format!("unknown var flag `{w}`"))),
            };
            vars.push((name.to_string(), laurent));
        }
    }
    let table = VariableTable::new(vars).map_err(|e| relocate(0, e))?;
    let poly = |ln: usize, s: &str| parse_polynomial(s, &table).map_err(|e| relocate(ln, e));

    let mut name = "custom".to_string();
    let mut relations: Vec<Polynomial> = Vec::new();
    let mut localized = None;
    for (ln, l) in &lines {
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match head {
            "name" => name = rest.to_string(),
            "relation" => {
                let p = match rest.split_once('=') {
                    Some((a, b)) => &poly(*ln, a)? - &poly(*ln, b)?,
                    None => poly(*ln, rest)?,
                };
                relations.push(p);
            }
            "localize" => {
                if localized.is_some() {
                    return Err(perr(*ln, "only one localized element is supported"));
                }
                localized = Some(poly(*ln, rest)?);
            }
            _ => {}
        }
    }
    let carrier = RingContext::new(table.clone(), relations, localized)?;

    let mut star = None;
    let mut bullet = None;
    let mut seq = None;
    let mut normalizers = Vec::new();
    for (ln, l) in &lines {
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let elem = |s: &str| carrier.parse(s).map_err(|e| relocate(*ln, e));
        match head {
            "var" | "name" | "relation" | "localize" => {}
            "star" | "bullet" => {
                let parts: Vec<&str> = rest.split(';').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(perr(*ln, "expected `left ; right ; constant`"));
                }
                let form = AffineForm::new(elem(parts[0])?, elem(parts[1])?, elem(parts[2])?);
                if head == "star" {
                    star = Some(form);
                } else {
                    bullet = Some(form);
                }
            }
            "seq" => {
                let (kind, arg) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                seq = Some(match kind {
                    "constant" => Sequence::Constant(elem(arg)?),
                    "geometric" => Sequence::Geometric(elem(arg)?),
                    other => return Err(perr(*ln, format!("unknown sequence kind `{other}`"))),
                });
            }
            "normalizer" => {
                let (kind, arg) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let kind: NormalizerKind = kind.parse()?;
                let param = match kind {
                    NormalizerKind::PhiMarker => {
                        let s = carrier.localized_at().ok_or(Error::NotLocalized)?.clone();
                        carrier.element(s)?
                    }
                    _ => elem(arg)?,
                };
                normalizers.push(NormalizerSpec { kind, param });
            }
            other => return Err(perr(*ln, format!("unknown directive `{other}`"))),
        }
    }
    Ok(MagmaSpec {
        name,
        carrier: carrier.clone(),
        star: star.ok_or_else(|| perr(0, "missing `star`"))?,
        bullet,
        seq: seq.ok_or_else(|| perr(0, "missing `seq`"))?,
        normalizers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builtin;

    const QUOTIENT: &str = "
        name my-quotient
        var A laurent
        var x
        var y
        relation A^4 + 2 + A^-4 = 1
        relation x + y*(-A^2 - A^-2) = 1
        relation y + x*(-A^2 - A^-2) = 1
        star A ; A^-1 ; 0
        bullet x ; y ; 0   # the marked operation
        seq geometric -A^2 - A^-2
        normalizer rho-writhe -A^3
    ";

    #[test]
    fn file_matches_builtin() {
        let m = parse_magma(QUOTIENT).unwrap();
        let b = builtin("mkb-quotient").unwrap();
        assert_eq!(m.name, "my-quotient");
        assert_eq!(*m.carrier, *b.carrier);
        for n in 1..5 {
            assert_eq!(m.seq(n).unwrap().to_string(), b.seq(n).unwrap().to_string());
        }
        assert!(m.normalizer("rho-writhe").is_ok());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_magma("var x\nstar x ; q ; 0\nseq constant x").unwrap_err();
        assert_eq!(e, Error::UnknownVariable("q".into()));
        let e = parse_magma("var x\nstar x ; x\nseq constant x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_magma("var x\nfrobnicate\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(parse_magma("var x\nstar x ; x ; 0").is_err());
        assert!(matches!(
            parse_magma("var x\nstar x ; x ; 0\nseq constant x\nnormalizer phi-marker"),
            Err(Error::NotLocalized)
        ));
    }
}
