//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered variable names, each flagged as Laurent (negative powers allowed) or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
    laurent: Vec<bool>,
}

impl VariableTable {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, bool)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut laurent = Vec::new();
        for (name, flag) in vars {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::BadVariables(format!("`{name}` is not an identifier")));
            }
            if names.contains(&name) {
                return Err(Error::BadVariables(format!("duplicate variable `{name}`")));
            }
            names.push(name);
            laurent.push(flag);
        }
        Ok(VariableTable { names, laurent })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.laurent[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Appends non-Laurent variables.
    pub fn extended(&self, extra: &[&str]) -> Result<Self> {
        let vars = self
            .names
            .iter()
            .cloned()
            .zip(self.laurent.iter().copied())
            .chain(extra.iter().map(|s| (s.to_string(), false)));
        VariableTable::new(vars)
    }

    /// A name not yet in the table, derived from `base`.
    pub fn fresh_name(&self, base: &str, taken: &[String]) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.index_of(&name).is_some() || taken.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> Exponents {
        let mut m = vec![0; self.nvars];
        for e in self.terms.keys() {
            for (a, &b) in m.iter_mut().zip(e) {
                *a = (*a).min(b);
            }
        }
        m
    }

    /// Pads exponent vectors with zeros up to `nvars`.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, c.clone())
            })
            .collect();
        Polynomial { nvars, terms }
    }

    /// Fails if a non-Laurent variable carries a negative exponent.
    pub fn check_laurent(&self, vars: &VariableTable) -> Result<()> {
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x < 0 && !vars.is_laurent(i) {
                    return Err(Error::NegativeExponent(vars.name(i).to_string()));
                }
            }
        }
        Ok(())
    }

    /// If this is `±x^e`, returns the sign and exponents.
    pub fn as_signed_monomial(&self) -> Option<(BigInt, &Exponents)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some((c.clone(), e))
        } else {
            None
        }
    }

    /// Replaces variable `i` by `value`; `value` must be a unit monomial when `i` appears with
    /// negative exponent.
    pub fn substitute(&self, i: usize, value: &Polynomial) -> Result<Self> {
        let inverse = value.as_signed_monomial().map(|(c, e)| Polynomial::monomial(
                self.nvars,
                e.iter().map(|x| -x).collect(),
                c,
            ));
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            let factor = if k >= 0 {
                value.pow(k as u32)
            } else {
                match &inverse {
                    Some(inv) => inv.pow((-k) as u32),
                    None => return Err(Error::NotInvertible(format!("substitution for variable {i}"))),
                }
            };
            out = &out + &factor.shift(&rest).scale(c);
        }
        Ok(out)
    }

    /// Terms in display order: descending total degree, then by exponents in variable order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_order(b.0, a.0));
        v
    }

    /// Canonical text form, e.g. `-A^3*x - A^-3*y`.
    pub fn display(&self, vars: &VariableTable) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", vars.name(i), x)),
                }
            }
            if factors.is_empty() {
                let _ = write!(out, "{mag}");
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{mag}*");
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn display_order(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> VariableTable {
        VariableTable::new([("A", true), ("x", false), ("y", false)]).unwrap()
    }

    #[test]
    fn display_orders_by_degree_then_variable() {
        let v = vars();
        let p = Polynomial::from_terms(
            3,
            [
                (vec![-3, 0, 1], BigInt::from(-1)),
                (vec![3, 1, 0], BigInt::from(-1)),
            ],
        );
        assert_eq!(p.display(&v), "-A^3*x - A^-3*y");
        let q = Polynomial::from_terms(
            3,
            [
                (vec![4, 0, 0], BigInt::from(1)),
                (vec![0, 0, 0], BigInt::from(2)),
                (vec![-4, 0, 0], BigInt::from(1)),
            ],
        );
        assert_eq!(q.display(&v), "A^4 + 2 + A^-4");
        assert_eq!(Polynomial::zero(3).display(&v), "0");
        let r = Polynomial::monomial(3, vec![0, 1, 1], 2);
        assert_eq!(r.display(&v), "2*x*y");
    }

    #[test]
    fn cancellation_and_products() {
        let a = Polynomial::var(3, 0);
        let ainv = Polynomial::monomial(3, vec![-1, 0, 0], 1);
        let s = &(&a + &ainv) + &(&a - &ainv);
        assert_eq!(s, Polynomial::monomial(3, vec![1, 0, 0], 2));
        let d = &(&a + &ainv) * &(&a - &ainv);
        let expect = &Polynomial::monomial(3, vec![2, 0, 0], 1) - &Polynomial::monomial(3, vec![-2, 0, 0], 1);
        assert_eq!(d, expect);
    }

    #[test]
    fn laurent_flags_are_enforced() {
        let v = vars();
        let bad = Polynomial::monomial(3, vec![0, -1, 0], 1);
        assert!(bad.check_laurent(&v).is_err());
        assert!(Polynomial::monomial(3, vec![-5, 1, 0], 1).check_laurent(&v).is_ok());
    }

    #[test]
    fn duplicate_variables_rejected() {
        assert!(VariableTable::new([("x", false), ("x", false)]).is_err());
        assert!(VariableTable::new([("1x", false)]).is_err());
    }

    #[test]
    fn substitute_replaces_variable() {
        // y := 1 - x in x*y
        let p = Polynomial::monomial(3, vec![0, 1, 1], 1);
        let v = &Polynomial::one(3) - &Polynomial::var(3, 1);
        let q = p.substitute(2, &v).unwrap();
        let expect = &Polynomial::var(3, 1) - &Polynomial::monomial(3, vec![0, 2, 0], 1);
        assert_eq!(q, expect);
    }
}
