//! Entropic magmas over a ring: affine operations `*` and `•`, the sequence `a_n`, builtin
//! instances and symbolic validators.

mod catalog;
mod file;
mod validate;

use std::sync::Arc;

use crate::algebra::{RingContext, RingElement};
use crate::error::{Error, Result};
use crate::evaluate::{NormalizerKind, NormalizerSpec};

pub use catalog::{builtin, builtin_names};
pub use file::parse_magma;
pub use validate::{
    gamma8_leaves, validate_entropic, validate_kbm, validate_kbm_with, validate_marked_conditions,
    validate_mixed_entropic, verify_gamma8_tables, EntropicReport, Gamma8Report, KbmCheck,
    KbmReport, MarkedReport, DEFAULT_N,
};

/// Anything usable as a binary operation on ring elements.
pub trait BinaryOperation {
    fn apply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement>;
}

impl<F> BinaryOperation for F
where
    F: Fn(&RingElement, &RingElement) -> Result<RingElement>,
{
    fn apply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self(a, b)
    }
}

/// `a ∘ b = left*a + right*b + constant`.
#[derive(Debug, Clone)]
pub struct AffineForm {
    pub left: RingElement,
    pub right: RingElement,
    pub constant: RingElement,
}

impl AffineForm {
    pub fn new(left: RingElement, right: RingElement, constant: RingElement) -> Self {
        AffineForm { left, right, constant }
    }

    /// Coefficients parsed in `ctx`.
    pub fn parse(ctx: &Arc<RingContext>, left: &str, right: &str, constant: &str) -> Result<Self> {
        Ok(AffineForm { left: ctx.parse(left)?, right: ctx.parse(right)?, constant: ctx.parse(constant)? })
    }
}

impl BinaryOperation for AffineForm {
    fn apply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        // Coefficients follow the arguments into an extended context when needed.
        let ctx = a.context();
        let l = self.left.lift_to(ctx)?;
        let r = self.right.lift_to(ctx)?;
        let k = self.constant.lift_to(ctx)?;
        l.mul(a)?.add(&r.mul(b)?)?.add(&k)
    }
}

/// The sequence `a_n`.
#[derive(Debug, Clone)]
pub enum Sequence {
    Constant(RingElement),
    /// `a_n = ratio^(n-1)`
    Geometric(RingElement),
}

impl Sequence {
    pub fn get(&self, n: i64) -> Result<RingElement> {
        if n < 1 {
            return Err(Error::BadIndex(n));
        }
        match self {
            Sequence::Constant(c) => Ok(c.clone()),
            Sequence::Geometric(d) => d.pow(n - 1),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MagmaSpec {
    pub name: String,
    pub carrier: Arc<RingContext>,
    pub star: AffineForm,
    pub bullet: Option<AffineForm>,
    pub seq: Sequence,
    pub normalizers: Vec<NormalizerSpec>,
}

impl MagmaSpec {
    pub fn star(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.star.apply(a, b)
    }

    pub fn bullet(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.bullet.as_ref().ok_or(Error::NoBullet)?.apply(a, b)
    }

    pub fn seq(&self, n: i64) -> Result<RingElement> {
        self.seq.get(n)
    }

    pub fn is_marked(&self) -> bool {
        self.bullet.is_some()
    }

    /// The declared normalizer with the given name (`rho-writhe`, `rho-parity`, `phi-marker`).
    pub fn normalizer(&self, name: &str) -> Result<&NormalizerSpec> {
        let kind: NormalizerKind = name.parse()?;
        self.normalizers
            .iter()
            .find(|n| n.kind == kind)
            .ok_or_else(|| Error::UndeclaredNormalizer(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        let kb = builtin("kb-poly").unwrap();
        let one = kb.seq(1).unwrap();
        assert_eq!(kb.star(&one, &one).unwrap().to_string(), "A + A^-1");
        let a2 = kb.seq(2).unwrap();
        assert_eq!(kb.star(&a2, &one).unwrap().to_string(), "-A^3");

        let aff = builtin("kb-affine").unwrap();
        let c = aff.seq(7).unwrap();
        assert!(aff.star(&c, &c).unwrap().eq(&aff.carrier.parse("-c + r").unwrap()).unwrap());
    }

    #[test]
    fn bullet_examples() {
        let m = builtin("mkb-poly").unwrap();
        let one = m.seq(1).unwrap();
        assert_eq!(m.bullet(&one, &one).unwrap().to_string(), "x + y");
        let (a1, a2) = (m.seq(1).unwrap(), m.seq(2).unwrap());
        let v = m.bullet(&m.star(&a2, &a1).unwrap(), &m.star(&a1, &a2).unwrap()).unwrap();
        assert_eq!(v.to_string(), "-A^3*x - A^-3*y");

        let lee = builtin("mkb-lee").unwrap();
        let one = lee.seq(1).unwrap();
        let expect = lee.carrier.parse("x + A*y + A^-1*z + A^-1*y + A*z + w").unwrap();
        assert!(lee.bullet(&one, &one).unwrap().eq(&expect).unwrap());

        let kb = builtin("kb-poly").unwrap();
        assert_eq!(kb.bullet(&one_of(&kb), &one_of(&kb)).err(), Some(Error::NoBullet));
    }

    fn one_of(m: &MagmaSpec) -> RingElement {
        m.carrier.one()
    }

    #[test]
    fn sequence_examples() {
        let kb = builtin("kb-poly").unwrap();
        assert_eq!(kb.seq(1).unwrap().to_string(), "1");
        assert_eq!(kb.seq(3).unwrap().to_string(), "A^4 + 2 + A^-4");
        assert_eq!(kb.seq(0).err(), Some(Error::BadIndex(0)));
        let aff = builtin("kb-affine").unwrap();
        assert_eq!(aff.seq(5).unwrap().to_string(), "c");
    }
}
