//! Quotient rings of Laurent polynomial rings, optionally localized at one element.
//!
//! Internally each Laurent variable `v` gets a partner `v'` with the rule `v*v' - 1`, and the
//! localized element `s` gets a partner `u` with `u*s - 1`. Reduction happens in that ordinary
//! polynomial ring under an order that compares the power of `u` first, then total degree,
//! then exponents lexicographically in declaration order. Because `u` dominates, reducing a
//! `u`-free polynomial never introduces `u`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::parse::parse_polynomial;
use super::poly::{Polynomial, VariableTable};
use crate::error::{Error, Result};

/// Internal monomial key `[u, degree, e_0, e_1, ...]`; its natural `Vec` ordering is the
/// monomial order.
type Key = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
struct IPoly {
    terms: BTreeMap<Key, BigInt>,
}

fn make_key(u: u32, e: &[u32]) -> Key {
    let mut k = Vec::with_capacity(e.len() + 2);
    k.push(u);
    k.push(e.iter().sum());
    k.extend_from_slice(e);
    k
}

fn key_mul(a: &[u32], b: &[u32]) -> Key {
    let e: Vec<u32> = a[2..].iter().zip(&b[2..]).map(|(x, y)| x + y).collect();
    make_key(a[0] + b[0], &e)
}

fn key_divides(a: &[u32], b: &[u32]) -> bool {
    a[0] <= b[0] && a[2..].iter().zip(&b[2..]).all(|(x, y)| x <= y)
}

fn key_div(b: &[u32], a: &[u32]) -> Key {
    let e: Vec<u32> = b[2..].iter().zip(&a[2..]).map(|(y, x)| y - x).collect();
    make_key(b[0] - a[0], &e)
}

fn key_lcm(a: &[u32], b: &[u32]) -> Key {
    let e: Vec<u32> = a[2..].iter().zip(&b[2..]).map(|(x, y)| *x.max(y)).collect();
    make_key(a[0].max(b[0]), &e)
}

fn key_coprime(a: &[u32], b: &[u32]) -> bool {
    !(a[0] > 0 && b[0] > 0) && a[2..].iter().zip(&b[2..]).all(|(x, y)| *x == 0 || *y == 0)
}

impl IPoly {
    fn zero() -> Self {
        IPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> Option<(&Key, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, k: Key, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `self += c * m * other`
    fn add_scaled(&mut self, c: &BigInt, m: &[u32], other: &IPoly) {
        for (k, v) in &other.terms {
            self.add_term(key_mul(m, k), c * v);
        }
    }
}

/// A ring presented as `Z[vars]` (Laurent where flagged) modulo `relations`, optionally
/// localized at one element.
#[derive(Debug)]
pub struct RingContext {
    vars: VariableTable,
    relations: Vec<Polynomial>,
    localized_at: Option<Polynomial>,
    /// Internal variable index of the inverse partner of each declared variable.
    inverse_of: Vec<Option<usize>>,
    internal_len: usize,
    rules: Vec<IPoly>,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.relations == other.relations
            && self.localized_at == other.localized_at
    }
}

const MAX_PAIRS: usize = 20_000;

impl RingContext {
    /// Builds the context and completes the relations into a confluent rule set.
    pub fn new(
        vars: VariableTable,
        relations: Vec<Polynomial>,
        localized_at: Option<Polynomial>,
    ) -> Result<Arc<Self>> {
        let n = vars.len();
        for r in relations.iter().chain(localized_at.iter()) {
            if r.nvars() != n {
                return Err(Error::BadVariables("relation has wrong arity".into()));
            }
            r.check_laurent(&vars)?;
        }
        if let Some(s) = &localized_at {
            if s.is_zero() {
                return Err(Error::NotInvertible("cannot localize at 0".into()));
            }
        }
        let mut inverse_of = vec![None; n];
        let mut next = n;
        for (i, slot) in inverse_of.iter_mut().enumerate() {
            if vars.is_laurent(i) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut ctx = RingContext {
            vars,
            relations,
            localized_at,
            inverse_of,
            internal_len: next,
            rules: Vec::new(),
        };
        let mut gens = Vec::new();
        for r in &ctx.relations {
            let cleared = r.shift(&r.min_exponents().iter().map(|x| -x).collect::<Vec<_>>());
            gens.push(ctx.to_internal(&cleared, 0));
        }
        for i in 0..n {
            if let Some(j) = ctx.inverse_of[i] {
                let mut e = vec![0u32; ctx.internal_len];
                e[i] = 1;
                e[j] = 1;
                let mut g = IPoly::zero();
                g.add_term(make_key(0, &e), BigInt::one());
                g.add_term(make_key(0, &vec![0; ctx.internal_len]), BigInt::from(-1));
                gens.push(g);
            }
        }
        if let Some(s) = &ctx.localized_at {
            let mut g = IPoly::zero();
            let us = ctx.to_internal(s, 1);
            for (k, v) in us.terms {
                g.add_term(k, v);
            }
            g.add_term(make_key(0, &vec![0; ctx.internal_len]), BigInt::from(-1));
            gens.push(g);
        }
        ctx.rules = complete(gens)?;
        Ok(Arc::new(ctx))
    }

    /// A context with no relations.
    pub fn free(vars: VariableTable) -> Arc<Self> {
        RingContext::new(vars, Vec::new(), None).expect("relation-free context")
    }

    pub fn vars(&self) -> &VariableTable {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn localized_at(&self) -> Option<&Polynomial> {
        self.localized_at.as_ref()
    }

    /// Number of rules in the completed rewrite system.
    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Same relations and localization over additional non-Laurent variables.
    pub fn extend(&self, extra: &[&str]) -> Result<Arc<Self>> {
        let vars = self.vars.extended(extra)?;
        let n = vars.len();
        RingContext::new(
            vars,
            self.relations.iter().map(|r| r.extend_vars(n)).collect(),
            self.localized_at.as_ref().map(|s| s.extend_vars(n)),
        )
    }

    /// Multiplies by `u^upow`; negative exponents go to inverse partners.
    fn to_internal(&self, p: &Polynomial, upow: u32) -> IPoly {
        let mut out = IPoly::zero();
        for (e, c) in p.terms() {
            let mut ie = vec![0u32; self.internal_len];
            for (i, &x) in e.iter().enumerate() {
                if x >= 0 {
                    ie[i] = x as u32;
                } else {
                    let j = self.inverse_of[i].expect("negative exponent on non-Laurent variable");
                    ie[j] = (-x) as u32;
                }
            }
            out.add_term(make_key(upow, &ie), c.clone());
        }
        out
    }

    fn from_internal(&self, p: &IPoly) -> Polynomial {
        let n = self.vars.len();
        let mut out = Polynomial::zero(n);
        for (k, c) in &p.terms {
            debug_assert_eq!(k[0], 0, "u leaked into a numerator");
            let ie = &k[2..];
            let mut e = vec![0i32; n];
            for i in 0..n {
                e[i] = ie[i] as i32;
                if let Some(j) = self.inverse_of[i] {
                    e[i] -= ie[j] as i32;
                }
            }
            out.add_term(e, c.clone());
        }
        out
    }

    fn reduce(&self, f: IPoly) -> IPoly {
        reduce_by(f, &self.rules)
    }

    /// Normal form of a polynomial in this ring.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.from_internal(&self.reduce(self.to_internal(p, 0)))
    }

    pub fn element(self: &Arc<Self>, p: Polynomial) -> Result<RingElement> {
        if p.nvars() != self.nvars() {
            return Err(Error::BadVariables("polynomial has wrong arity".into()));
        }
        p.check_laurent(&self.vars)?;
        Ok(RingElement { num: self.normal_form(&p), denom: 0, ctx: Arc::clone(self) })
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<RingElement> {
        self.element(parse_polynomial(text, &self.vars)?)
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement { num: Polynomial::zero(self.nvars()), denom: 0, ctx: Arc::clone(self) }
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        RingElement { num: self.normal_form(&Polynomial::one(self.nvars())), denom: 0, ctx: Arc::clone(self) }
    }

    pub fn int(self: &Arc<Self>, k: i64) -> RingElement {
        RingElement {
            num: self.normal_form(&Polynomial::constant(self.nvars(), k)),
            denom: 0,
            ctx: Arc::clone(self),
        }
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<RingElement> {
        let i = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        self.element(Polynomial::var(self.nvars(), i))
    }

    /// Numerator `1` over `s^k`.
    pub fn inverse_power_of_localized(self: &Arc<Self>, k: u32) -> Result<RingElement> {
        if self.localized_at.is_none() {
            return Err(Error::NotLocalized);
        }
        Ok(RingElement { num: Polynomial::one(self.nvars()), denom: k, ctx: Arc::clone(self) })
    }

    fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// Euclidean division with remainder in `[0, d)` for `d > 0`.
fn floor_divmod(c: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    let mut q = c / d;
    let mut r = c - &q * d;
    if r.is_negative() {
        q -= 1;
        r += d;
    }
    (q, r)
}

/// Reduces every term: among rules whose leading monomial divides the term, the one with the
/// smallest leading coefficient cuts the coefficient down to its remainder. With a strong basis
/// this yields a canonical representative.
fn reduce_by(mut f: IPoly, rules: &[IPoly]) -> IPoly {
    let mut done = IPoly::zero();
    while let Some((k, c)) = f.terms.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let rule = rules
            .iter()
            .filter(|g| key_divides(g.lead().unwrap().0, &k))
            .min_by(|a, b| a.lead().unwrap().1.cmp(b.lead().unwrap().1));
        if let Some(g) = rule {
            let (lk, lc) = g.lead().unwrap();
            let (q, _) = floor_divmod(&c, lc);
            if !q.is_zero() {
                let m = key_div(&k, lk);
                f.add_scaled(&-q, &m, g);
            }
        }
        if let Some(r) = f.terms.remove(&k) {
            done.terms.insert(k, r);
        }
    }
    done
}

fn positive(mut p: IPoly) -> IPoly {
    if p.lead().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        for v in p.terms.values_mut() {
            *v = -&*v;
        }
    }
    p
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// S- and G-polynomials of a pair (both leading coefficients positive).
fn pair_polys(f: &IPoly, g: &IPoly) -> Vec<IPoly> {
    let (lf, af) = f.lead().unwrap();
    let (lg, ag) = g.lead().unwrap();
    let l = key_lcm(lf, lg);
    let (mf, mg) = (key_div(&l, lf), key_div(&l, lg));
    let (gcd, s, t) = ext_gcd(af, ag);
    let lcm = af * ag / &gcd;
    let mut sp = IPoly::zero();
    sp.add_scaled(&(&lcm / af), &mf, f);
    sp.add_scaled(&-(&lcm / ag), &mg, g);
    let mut out = vec![sp];
    let divides = |a: &BigInt, b: &BigInt| (b % a).is_zero();
    if !divides(af, ag) && !divides(ag, af) {
        let mut gp = IPoly::zero();
        gp.add_scaled(&s, &mf, f);
        gp.add_scaled(&t, &mg, g);
        out.push(gp);
    }
    out
}

/// Strong Groebner completion over the integers, then inter-reduction.
fn complete(gens: Vec<IPoly>) -> Result<Vec<IPoly>> {
    let mut basis: Vec<IPoly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let push = |basis: &mut Vec<IPoly>, pairs: &mut Vec<(usize, usize)>, p: IPoly| {
        let k = basis.len();
        basis.push(positive(p));
        for i in 0..k {
            pairs.insert(0, (i, k));
        }
    };
    for g in gens {
        let r = reduce_by(g, &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > MAX_PAIRS {
            return Err(Error::NonConfluent("completion did not terminate".into()));
        }
        let (li, ci) = basis[i].lead().unwrap();
        let (lj, cj) = basis[j].lead().unwrap();
        if key_coprime(li, lj) && ci.is_one() && cj.is_one() {
            continue;
        }
        for p in pair_polys(&basis[i], &basis[j]) {
            let r = reduce_by(p, &basis);
            if !r.is_zero() {
                push(&mut basis, &mut pairs, r);
            }
        }
    }
    // Drop rules made redundant by another rule, then reduce tails.
    let mut minimal: Vec<IPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let (lg, cg) = g.lead().unwrap();
        let redundant = basis.iter().enumerate().any(|(jdx, h)| {
            let (lh, ch) = h.lead().unwrap();
            jdx != idx
                && key_divides(lh, lg)
                && (cg % ch).is_zero()
                && (lh != lg || ch != cg || jdx < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let mut g = minimal[idx].clone();
        let (lk, lc) = g.lead().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        g.terms.remove(&lk);
        let others: Vec<IPoly> =
            minimal.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, h)| h.clone()).collect();
        let mut tail = reduce_by(g, &others);
        tail.add_term(lk, lc);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
    Ok(reduced)
}

/// An element `numerator / s^denom_power` of a ring context.
#[derive(Clone)]
pub struct RingElement {
    ctx: Arc<RingContext>,
    num: Polynomial,
    denom: u32,
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({})", self)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.display(&self.ctx.vars);
        if self.denom == 0 {
            return f.write_str(&num);
        }
        let s = self.ctx.localized_at.as_ref().expect("denominator without localization");
        let s = s.display(&self.ctx.vars);
        if self.denom == 1 {
            write!(f, "({num})/({s})")
        } else {
            write!(f, "({num})/({s})^{}", self.denom)
        }
    }
}

impl RingElement {
    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom_power(&self) -> u32 {
        self.denom
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if RingContext::same(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Numerator scaled so the denominator is `s^k`, `k >= self.denom`.
    fn numerator_over(&self, k: u32) -> Polynomial {
        if k == self.denom {
            return self.num.clone();
        }
        let s = self.ctx.localized_at.as_ref().expect("denominator without localization");
        &self.num * &s.pow(k - self.denom)
    }

    fn with(&self, num: Polynomial, denom: u32) -> RingElement {
        RingElement { num: self.ctx.normal_form(&num), denom, ctx: Arc::clone(&self.ctx) }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let k = self.denom.max(other.denom);
        Ok(self.with(&self.numerator_over(k) + &other.numerator_over(k), k))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let k = self.denom.max(other.denom);
        Ok(self.with(&self.numerator_over(k) - &other.numerator_over(k), k))
    }

    pub fn neg(&self) -> RingElement {
        RingElement { num: -&self.num, denom: self.denom, ctx: Arc::clone(&self.ctx) }
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.with(&self.num * &other.num, self.denom + other.denom))
    }

    /// Re-reduces the numerator; the result is already canonical for every constructed value.
    pub fn normalize(&self) -> RingElement {
        self.with(self.num.clone(), self.denom)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality after cross-multiplying denominators.
    pub fn eq(&self, other: &RingElement) -> Result<bool> {
        self.check(other)?;
        let k = self.denom.max(other.denom);
        let diff = &self.numerator_over(k) - &other.numerator_over(k);
        Ok(self.ctx.normal_form(&diff).is_zero())
    }

    /// Exact power; negative exponents need a unit monomial, the localized element, or an
    /// element whose square reduces to 1.
    pub fn pow(&self, k: i64) -> Result<RingElement> {
        if k >= 0 {
            let k = u32::try_from(k).map_err(|_| Error::NotInvertible("exponent too large".into()))?;
            let mut acc = self.ctx.one();
            let mut base = self.clone();
            let mut e = k;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&base)?;
                }
                e >>= 1;
                if e > 0 {
                    base = base.mul(&base)?;
                }
            }
            return Ok(acc);
        }
        self.inverse()?.pow(-k)
    }

    pub fn inverse(&self) -> Result<RingElement> {
        let vars = &self.ctx.vars;
        if self.denom == 0 {
            if let Some((sign, e)) = self.num.as_signed_monomial() {
                if e.iter().enumerate().all(|(i, &x)| x == 0 || vars.is_laurent(i)) {
                    let inv = Polynomial::monomial(self.num.nvars(), e.iter().map(|x| -x).collect(), sign);
                    return Ok(self.with(inv, 0));
                }
            }
        }
        if let Some(s) = &self.ctx.localized_at {
            // num / s^d is invertible when num is a unit times a power of s.
            let s_el = self.with(s.clone(), 0);
            if self.num.is_one() {
                return Ok(self.with(s.pow(self.denom), 0));
            }
            if self.denom == 0 && self.eq(&s_el)? {
                return Ok(RingElement {
                    num: Polynomial::one(self.num.nvars()),
                    denom: 1,
                    ctx: Arc::clone(&self.ctx),
                });
            }
        }
        let sq = self.mul(self)?;
        if sq.eq(&self.ctx.one())? {
            return Ok(self.clone());
        }
        Err(Error::NotInvertible(self.to_string()))
    }

    /// The same value in a context whose variables extend this one's.
    pub fn lift_to(&self, ctx: &Arc<RingContext>) -> Result<RingElement> {
        if RingContext::same(&self.ctx, ctx) {
            return Ok(self.clone());
        }
        let n = self.ctx.nvars();
        let prefix_ok = ctx.nvars() >= n
            && (0..n).all(|i| {
                ctx.vars.name(i) == self.ctx.vars.name(i)
                    && ctx.vars.is_laurent(i) == self.ctx.vars.is_laurent(i)
            });
        if !prefix_ok {
            return Err(Error::ContextMismatch);
        }
        if self.denom > 0 {
            let s = self.ctx.localized_at.as_ref().map(|s| s.extend_vars(ctx.nvars()));
            if s.as_ref() != ctx.localized_at.as_ref() {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(RingElement {
            num: ctx.normal_form(&self.num.extend_vars(ctx.nvars())),
            denom: self.denom,
            ctx: Arc::clone(ctx),
        })
    }
}
