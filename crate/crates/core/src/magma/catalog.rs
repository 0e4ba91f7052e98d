//! Builtin magmas, one per worked example.

use std::sync::Arc;

use super::{AffineForm, MagmaSpec, Sequence};
use crate::algebra::{parse_polynomial, RingContext, VariableTable};
use crate::error::{Error, Result};
use crate::evaluate::{NormalizerKind, NormalizerSpec};

const DELTA: &str = "-A^2 - A^-2";

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "kb-affine",
        "kb-poly",
        "mkb-affine",
        "mkb-affine-x",
        "mkb-poly",
        "mkb-quotient",
        "mkb-lee",
        "mkb-phi",
    ]
}

fn ring(vars: &[(&str, bool)], relations: &[&str], localized: Option<&str>) -> Result<Arc<RingContext>> {
    let table = VariableTable::new(vars.iter().map(|(n, l)| (*n, *l)))?;
    let rels = relations
        .iter()
        .map(|r| parse_polynomial(r, &table))
        .collect::<Result<Vec<_>>>()?;
    let loc = localized.map(|s| parse_polynomial(s, &table)).transpose()?;
    RingContext::new(table, rels, loc)
}

fn writhe(ctx: &Arc<RingContext>) -> Result<NormalizerSpec> {
    Ok(NormalizerSpec { kind: NormalizerKind::RhoWrithe, param: ctx.parse("-A^3")? })
}

fn parity(ctx: &Arc<RingContext>) -> Result<NormalizerSpec> {
    Ok(NormalizerSpec { kind: NormalizerKind::RhoParity, param: ctx.parse("r")? })
}

fn kb_poly_star(ctx: &Arc<RingContext>) -> Result<AffineForm> {
    AffineForm::parse(ctx, "A", "A^-1", "0")
}

fn affine_star(ctx: &Arc<RingContext>) -> Result<AffineForm> {
    AffineForm::parse(ctx, "p", "-1 - p", "r")
}

pub fn builtin(name: &str) -> Result<MagmaSpec> {
    let spec = |carrier: Arc<RingContext>,
                star: AffineForm,
                bullet: Option<AffineForm>,
                seq: Sequence,
                normalizers: Vec<NormalizerSpec>| MagmaSpec {
        name: name.to_string(),
        carrier,
        star,
        bullet,
        seq,
        normalizers,
    };
    match name {
        "kb-affine" => {
            let c = ring(&[("p", false), ("r", false), ("c", false)], &[], None)?;
            Ok(spec(c.clone(), affine_star(&c)?, None, Sequence::Constant(c.parse("c")?), vec![parity(&c)?]))
        }
        "kb-poly" => {
            let c = ring(&[("A", true)], &[], None)?;
            Ok(spec(c.clone(), kb_poly_star(&c)?, None, Sequence::Geometric(c.parse(DELTA)?), vec![writhe(&c)?]))
        }
        "mkb-affine" => {
            let c = ring(&[("p", false), ("r", false), ("x", false), ("y", false), ("c", false)], &[], None)?;
            let bullet = AffineForm::parse(&c, "x", "y", "0")?;
            Ok(spec(c.clone(), affine_star(&c)?, Some(bullet), Sequence::Constant(c.parse("c")?), vec![parity(&c)?]))
        }
        "mkb-affine-x" => {
            let c = ring(&[("p", false), ("r", false), ("x", false), ("c", false)], &[], None)?;
            let bullet = AffineForm::parse(&c, "x", "1 - x", "0")?;
            Ok(spec(c.clone(), affine_star(&c)?, Some(bullet), Sequence::Constant(c.parse("c")?), vec![parity(&c)?]))
        }
        "mkb-poly" => {
            let c = ring(&[("A", true), ("x", false), ("y", false)], &[], None)?;
            let bullet = AffineForm::parse(&c, "x", "y", "0")?;
            Ok(spec(c.clone(), kb_poly_star(&c)?, Some(bullet), Sequence::Geometric(c.parse(DELTA)?), vec![writhe(&c)?]))
        }
        "mkb-quotient" => {
            let rels = [
                "A^4 + 2 + A^-4 - 1".to_string(),
                format!("x + y*({DELTA}) - 1"),
                format!("y + x*({DELTA}) - 1"),
            ];
            let rels: Vec<&str> = rels.iter().map(|s| s.as_str()).collect();
            let c = ring(&[("A", true), ("x", false), ("y", false)], &rels, None)?;
            let bullet = AffineForm::parse(&c, "x", "y", "0")?;
            Ok(spec(c.clone(), kb_poly_star(&c)?, Some(bullet), Sequence::Geometric(c.parse(DELTA)?), vec![writhe(&c)?]))
        }
        "mkb-lee" => {
            let c = ring(&[("A", true), ("x", false), ("y", false), ("z", false), ("w", false)], &[], None)?;
            let bullet = AffineForm::parse(&c, "x + A*y + A^-1*z", "A^-1*y + A*z + w", "0")?;
            Ok(spec(c.clone(), kb_poly_star(&c)?, Some(bullet), Sequence::Geometric(c.parse(DELTA)?), vec![writhe(&c)?]))
        }
        "mkb-phi" => {
            let s = format!("x + y*({DELTA})");
            let rels = ["A^4 + 2 + A^-4 - 1".to_string(), format!("({s}) - (y + x*({DELTA}))")];
            let rels: Vec<&str> = rels.iter().map(|s| s.as_str()).collect();
            let c = ring(&[("A", true), ("x", false), ("y", false)], &rels, Some(&s))?;
            let bullet = AffineForm::parse(&c, "x", "y", "0")?;
            let phi = NormalizerSpec { kind: NormalizerKind::PhiMarker, param: c.parse(&s)? };
            Ok(spec(
                c.clone(),
                kb_poly_star(&c)?,
                Some(bullet),
                Sequence::Geometric(c.parse(DELTA)?),
                vec![phi, writhe(&c)?],
            ))
        }
        other => Err(Error::UnknownMagma(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_constructs() {
        for name in builtin_names() {
            let m = builtin(name).unwrap();
            assert_eq!(m.name, *name);
            assert_eq!(m.is_marked(), name.starts_with("mkb"));
        }
        assert!(matches!(builtin("nope"), Err(Error::UnknownMagma(_))));
    }

    #[test]
    fn declared_relations_vanish() {
        for name in builtin_names() {
            let m = builtin(name).unwrap();
            for r in m.carrier.relations() {
                assert!(m.carrier.element(r.clone()).unwrap().is_zero(), "{name}");
            }
        }
    }

    #[test]
    fn phi_carrier_is_localized() {
        let m = builtin("mkb-phi").unwrap();
        assert!(m.carrier.localized_at().is_some());
        assert!(m.normalizer("phi-marker").is_ok());
        assert!(builtin("mkb-poly").unwrap().normalizer("phi-marker").is_err());
    }
}
