//! Symbolic checks of the magma axioms and of the conditions behind move invariance.

use std::fmt;
use std::sync::Arc;

use super::{BinaryOperation, MagmaSpec, Sequence};
use crate::algebra::{RingContext, RingElement};
use crate::error::{Error, Result};
use crate::moves::MoveKind;

/// Finite-prefix length used when none is given.
pub const DEFAULT_N: i64 = 8;

fn fresh(ctx: &Arc<RingContext>, bases: &[&str]) -> Result<(Arc<RingContext>, Vec<RingElement>)> {
    let mut names: Vec<String> = Vec::new();
    for b in bases {
        let n = ctx.vars().fresh_name(b, &names);
        names.push(n);
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ext = ctx.extend(&refs)?;
    let vars = names.iter().map(|n| ext.var(n)).collect::<Result<Vec<_>>>()?;
    Ok((ext, vars))
}

#[derive(Debug, Clone)]
pub struct EntropicReport {
    pub passed: bool,
    /// `lhs - rhs` in the extended ring; `0` when the identity holds.
    pub residual: String,
}

impl fmt::Display for EntropicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "pass")
        } else {
            write!(f, "fail (residual {})", self.residual)
        }
    }
}

/// Checks `(a∘b)∘(c∘d) = (a∘c)∘(b∘d)` with fresh indeterminates.
pub fn validate_entropic(op: &dyn BinaryOperation, ctx: &Arc<RingContext>) -> Result<EntropicReport> {
    let (_, v) = fresh(ctx, &["a", "b", "c", "d"])?;
    let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
    let lhs = op.apply(&op.apply(a, b)?, &op.apply(c, d)?)?;
    let rhs = op.apply(&op.apply(a, c)?, &op.apply(b, d)?)?;
    let residual = lhs.sub(&rhs)?;
    let passed = residual.eq(&residual.context().zero())?;
    Ok(EntropicReport { passed, residual: residual.to_string() })
}

/// Checks `(a*b)•(c*d) = (a•c)*(b•d)` with fresh indeterminates.
pub fn validate_mixed_entropic(
    star: &dyn BinaryOperation,
    bullet: &dyn BinaryOperation,
    ctx: &Arc<RingContext>,
) -> Result<EntropicReport> {
    let (_, v) = fresh(ctx, &["a", "b", "c", "d"])?;
    let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
    let lhs = bullet.apply(&star.apply(a, b)?, &star.apply(c, d)?)?;
    let rhs = star.apply(&bullet.apply(a, c)?, &bullet.apply(b, d)?)?;
    let residual = lhs.sub(&rhs)?;
    let passed = residual.eq(&residual.context().zero())?;
    Ok(EntropicReport { passed, residual: residual.to_string() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbmCheck {
    pub n: i64,
    /// `(a_{n+1}*a_{n+2})*(a_n*a_{n+1}) = a_n`
    pub first: bool,
    /// `(a_n*a_{n+1})*(a_{n+1}*a_n) = a_{n+1}`
    pub second: bool,
}

#[derive(Debug, Clone)]
pub struct KbmReport {
    pub checks: Vec<KbmCheck>,
    /// Result of the check with `a_n` symbolic, when the sequence allows one.
    pub symbolic: Option<bool>,
    pub passed: bool,
}

impl KbmReport {
    pub fn first_failure(&self) -> Option<i64> {
        self.checks.iter().find(|c| !(c.first && c.second)).map(|c| c.n)
    }
}

impl fmt::Display for KbmReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.checks.len();
        match self.first_failure() {
            None => write!(f, "pass for n=1..{n}")?,
            Some(k) => write!(f, "fail at n={k}")?,
        }
        match self.symbolic {
            Some(true) => write!(f, "; symbolic pass"),
            Some(false) => write!(f, "; symbolic fail"),
            None => Ok(()),
        }
    }
}

fn kbm_pair(op: &dyn BinaryOperation, a0: &RingElement, a1: &RingElement, a2: &RingElement) -> Result<(bool, bool)> {
    let first = op.apply(&op.apply(a1, a2)?, &op.apply(a0, a1)?)?.eq(a0)?;
    let second = op.apply(&op.apply(a0, a1)?, &op.apply(a1, a0)?)?.eq(a1)?;
    Ok((first, second))
}

/// Finite-prefix check for an arbitrary sequence.
pub fn validate_kbm_with(
    op: &dyn BinaryOperation,
    seq: &dyn Fn(i64) -> Result<RingElement>,
    n_max: i64,
) -> Result<KbmReport> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let (first, second) = kbm_pair(op, &seq(n)?, &seq(n + 1)?, &seq(n + 2)?)?;
        checks.push(KbmCheck { n, first, second });
    }
    let passed = checks.iter().all(|c| c.first && c.second);
    Ok(KbmReport { checks, symbolic: None, passed })
}

/// Both bracket-magma identities for `n = 1..N`, plus one symbolic check.
pub fn validate_kbm(m: &MagmaSpec, n_max: i64) -> Result<KbmReport> {
    let mut report = validate_kbm_with(&m.star, &|n| m.seq(n), n_max)?;
    let symbolic = match &m.seq {
        Sequence::Constant(c) => {
            let (x, y) = kbm_pair(&m.star, c, c, c)?;
            x && y
        }
        Sequence::Geometric(d) => {
            let (ext, v) = fresh(&m.carrier, &["t"])?;
            let d = d.lift_to(&ext)?;
            let t = &v[0];
            let (x, y) = kbm_pair(&m.star, t, &t.mul(&d)?, &t.mul(&d)?.mul(&d)?)?;
            x && y
        }
    };
    report.symbolic = Some(symbolic);
    report.passed &= symbolic;
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct MarkedReport {
    pub period2: bool,
    pub mixed_entropic: bool,
    pub bullet_absorbing: bool,
    pub mixed_residual: String,
}

impl MarkedReport {
    /// Moves under which `P_M` is invariant by the flags alone.
    pub fn guaranteed_moves(&self) -> Vec<MoveKind> {
        MoveKind::all()
            .iter()
            .copied()
            .filter(|k| k.guaranteed(self, &[]))
            .collect()
    }
}

impl fmt::Display for MarkedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |b: bool| if b { "pass" } else { "fail" };
        writeln!(f, "period2: {}", flag(self.period2))?;
        writeln!(f, "mixed_entropic: {}", flag(self.mixed_entropic))?;
        writeln!(f, "bullet_absorbing: {}", flag(self.bullet_absorbing))?;
        let moves: Vec<String> = self.guaranteed_moves().iter().map(|k| k.to_string()).collect();
        write!(f, "guaranteed moves: {}", moves.join(" "))
    }
}

pub fn validate_marked_conditions(m: &MagmaSpec, n_max: i64) -> Result<MarkedReport> {
    let bullet = m.bullet.as_ref().ok_or(Error::NoBullet)?;
    let mut period2 = true;
    let mut absorbing = true;
    for n in 1..=n_max {
        let (a0, a1, a2) = (m.seq(n)?, m.seq(n + 1)?, m.seq(n + 2)?);
        period2 &= a0.eq(&a2)?;
        absorbing &= m.bullet(&a1, &a0)?.eq(&a0)? && m.bullet(&a0, &a1)?.eq(&a0)?;
    }
    if let Sequence::Geometric(d) = &m.seq {
        let (ext, v) = fresh(&m.carrier, &["t"])?;
        let d = d.lift_to(&ext)?;
        let t = &v[0];
        let td = t.mul(&d)?;
        period2 &= td.mul(&d)?.eq(t)?;
        absorbing &= bullet.apply(&td, t)?.eq(t)? && bullet.apply(t, &td)?.eq(t)?;
    }
    let mixed = validate_mixed_entropic(&m.star, bullet, &m.carrier)?;
    Ok(MarkedReport {
        period2,
        mixed_entropic: mixed.passed,
        bullet_absorbing: absorbing,
        mixed_residual: mixed.residual,
    })
}

/// Leaf indices of the six displayed Γ₈ expressions, left to right; each expression is the
/// balanced `*`-tree over its 16 leaves.
pub fn gamma8_leaves() -> [(&'static str, [i64; 16]); 6] {
    [
        ("x0", [2, 1, 3, 2, 3, 2, 4, 3, 1, 2, 2, 3, 2, 3, 3, 4]),
        ("y0", [4, 3, 3, 2, 3, 2, 2, 1, 3, 4, 2, 3, 2, 3, 1, 2]),
        ("x2", [3, 2, 4, 3, 4, 3, 5, 4, 2, 1, 3, 2, 3, 2, 4, 3]),
        ("y2", [3, 4, 2, 3, 2, 3, 1, 2, 4, 5, 3, 4, 3, 4, 2, 3]),
        ("x10", [4, 3, 3, 2, 3, 2, 4, 3, 3, 2, 2, 1, 2, 1, 3, 2]),
        ("y10", [2, 3, 1, 2, 1, 2, 2, 3, 3, 4, 2, 3, 2, 3, 3, 4]),
    ]
}

fn balanced(m: &MagmaSpec, leaves: &[i64]) -> Result<RingElement> {
    let mut level = leaves.iter().map(|&n| m.seq(n)).collect::<Result<Vec<_>>>()?;
    while level.len() > 1 {
        level = level
            .chunks(2)
            .map(|p| m.star(&p[0], &p[1]))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(level.pop().expect("nonempty"))
}

#[derive(Debug, Clone)]
pub struct Gamma8Report {
    /// `("x0=y0", holds)` and so on.
    pub identities: Vec<(String, bool)>,
    /// Column-wise equality of the two Γ₇ table rows.
    pub gamma7_columns: Vec<bool>,
}

impl Gamma8Report {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|(_, ok)| *ok) && self.gamma7_columns.iter().all(|ok| *ok)
    }
}

impl fmt::Display for Gamma8Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.identities {
            writeln!(f, "{name}: {}", if *ok { "holds" } else { "differs" })?;
        }
        let cols: Vec<&str> = self.gamma7_columns.iter().map(|ok| if *ok { "=" } else { "≠" }).collect();
        write!(f, "gamma7 columns t0..t4: {}", cols.join(" "))
    }
}

pub fn verify_gamma8_tables(m: &MagmaSpec) -> Result<Gamma8Report> {
    let leaves = gamma8_leaves();
    let mut identities = Vec::new();
    for pair in leaves.chunks(2) {
        let x = balanced(m, &pair[0].1)?;
        let y = balanced(m, &pair[1].1)?;
        identities.push((format!("{}={}", pair[0].0, pair[1].0), x.eq(&y)?));
    }
    let t4 = [1, 2, 2, 3, 1];
    let t3 = [1, 2, 2, 1, 3];
    let gamma7_columns = t4
        .iter()
        .zip(&t3)
        .map(|(&i, &j)| m.seq(i)?.eq(&m.seq(j)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Gamma8Report { identities, gamma7_columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{builtin, builtin_names, AffineForm};

    #[test]
    fn builtins_are_entropic() {
        for name in builtin_names() {
            let m = builtin(name).unwrap();
            assert!(validate_entropic(&m.star, &m.carrier).unwrap().passed, "{name} star");
            if let Some(b) = &m.bullet {
                assert!(validate_entropic(b, &m.carrier).unwrap().passed, "{name} bullet");
            }
        }
    }

    #[test]
    fn symbolic_affine_is_entropic() {
        let ctx = crate::algebra::RingContext::free(
            crate::algebra::VariableTable::new([("al", false), ("be", false), ("ga", false)]).unwrap(),
        );
        let op = AffineForm::parse(&ctx, "al", "be", "ga").unwrap();
        let r = validate_entropic(&op, &ctx).unwrap();
        assert!(r.passed);
        assert_eq!(r.residual, "0");
    }

    #[test]
    fn product_plus_one_is_not_entropic() {
        let ctx = crate::algebra::RingContext::free(crate::algebra::VariableTable::new([("A", true)]).unwrap());
        let op = |a: &RingElement, b: &RingElement| a.mul(b)?.add(&a.context().one());
        let r = validate_entropic(&op, &ctx).unwrap();
        assert!(!r.passed);
        // (ab+1)(cd+1)+1 - ((ac+1)(bd+1)+1) = ab + cd - ac - bd
        let ext = ctx.extend(&["a", "b", "c", "d"]).unwrap();
        let expect = ext.parse("a*b + c*d - a*c - b*d").unwrap();
        assert_eq!(r.residual, expect.to_string());
    }

    #[test]
    fn kbm_identities() {
        for name in ["kb-poly", "kb-affine"] {
            let m = builtin(name).unwrap();
            let r = validate_kbm(&m, 5).unwrap();
            assert!(r.passed, "{name}");
            assert_eq!(r.symbolic, Some(true));
        }
        let m = builtin("kb-poly").unwrap();
        let bad = validate_kbm_with(&m.star, &|n| Ok(m.carrier.int(n)), 5).unwrap();
        assert!(!bad.passed);
        assert_eq!(bad.first_failure(), Some(1));
    }

    #[test]
    fn marked_condition_flags() {
        let q = validate_marked_conditions(&builtin("mkb-quotient").unwrap(), DEFAULT_N).unwrap();
        assert!(q.period2 && q.mixed_entropic && q.bullet_absorbing);
        let x = validate_marked_conditions(&builtin("mkb-affine-x").unwrap(), DEFAULT_N).unwrap();
        assert!(x.period2 && x.mixed_entropic && x.bullet_absorbing);
        let p = validate_marked_conditions(&builtin("mkb-poly").unwrap(), DEFAULT_N).unwrap();
        assert!(p.mixed_entropic && !p.period2);
        let phi = validate_marked_conditions(&builtin("mkb-phi").unwrap(), DEFAULT_N).unwrap();
        assert!(phi.period2 && phi.mixed_entropic && !phi.bullet_absorbing);
        let aff = validate_marked_conditions(&builtin("mkb-affine").unwrap(), DEFAULT_N).unwrap();
        assert!(!aff.mixed_entropic);
        assert!(matches!(
            validate_marked_conditions(&builtin("kb-poly").unwrap(), 3),
            Err(Error::NoBullet)
        ));
    }

    #[test]
    fn gamma8_tables() {
        let q = verify_gamma8_tables(&builtin("mkb-quotient").unwrap()).unwrap();
        assert!(q.passed());
        let p = verify_gamma8_tables(&builtin("mkb-poly").unwrap()).unwrap();
        assert!(!p.identities[0].1, "x0 should differ from y0 without period 2");
        let c = verify_gamma8_tables(&builtin("kb-affine").unwrap()).unwrap();
        assert!(c.gamma7_columns.iter().all(|b| *b));
    }
}
