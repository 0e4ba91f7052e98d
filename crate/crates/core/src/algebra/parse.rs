//! Text to `Polynomial`. Accepts `+ - * ^`, parentheses, integers, variable names and
//! juxtaposition as multiplication. Exponents may be written `A^-7` or `A^{-7}`.

use num_bigint::BigInt;

use super::poly::{Polynomial, VariableTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let err = |msg: String| Error::Parse { line: 0, msg };
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '\u{00b7}' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '{' => {
                out.push(Tok::LBrace);
                i += 1
            }
            '}' => {
                out.push(Tok::RBrace);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse().map_err(|_| err(format!("bad integer {text}")))?));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(err(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a VariableTable,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: 0, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(n);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.exponent()?;
        if k >= 0 {
            return Ok(base.pow(k as u32));
        }
        let (sign, e) = base
            .as_signed_monomial()
            .ok_or_else(|| self.err("negative exponent on a non-monomial"))?;
        for (i, &x) in e.iter().enumerate() {
            if x != 0 && !self.vars.is_laurent(i) {
                return Err(Error::NegativeExponent(self.vars.name(i).to_string()));
            }
        }
        let inv = Polynomial::monomial(self.vars.len(), e.iter().map(|x| -x).collect(), sign);
        Ok(inv.pow((-k) as u32))
    }

    fn exponent(&mut self) -> Result<i64> {
        let closing = match self.peek() {
            Some(Tok::LBrace) => Some(Tok::RBrace),
            Some(Tok::LParen) => Some(Tok::RParen),
            _ => None,
        };
        if closing.is_some() {
            self.pos += 1;
        }
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = match self.bump() {
            Some(Tok::Num(n)) => i64::try_from(n).map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        if let Some(c) = closing {
            if self.bump() != Some(c) {
                return Err(self.err("unclosed exponent"));
            }
        }
        if k > i32::MAX as i64 / 2 {
            return Err(self.err("exponent too large"));
        }
        Ok(if neg { -k } else { k })
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        match self.bump() {
            Some(Tok::Num(c)) => Ok(Polynomial::constant(n, c)),
            Some(Tok::Ident(name)) => {
                let i = self.vars.index_of(&name).ok_or(Error::UnknownVariable(name))?;
                Ok(Polynomial::var(n, i))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `text` over `vars`.
pub fn parse_polynomial(text: &str, vars: &VariableTable) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { line: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, pos: 0, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    out.check_laurent(vars)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> VariableTable {
        VariableTable::new([("A", true), ("x", false), ("y", false)]).unwrap()
    }

    #[test]
    fn round_trips_display() {
        let v = vars();
        for s in ["A^-7 - A^-3 - A^5", "-A^3*x - A^-3*y", "A^4 + 2 + A^-4", "2*x*y", "0", "-1"] {
            let p = parse_polynomial(s, &v).unwrap();
            let again = parse_polynomial(&p.display(&v), &v).unwrap();
            assert_eq!(p, again, "{s}");
        }
        assert_eq!(parse_polynomial("-A^5 - A^-3 + A^-7", &v).unwrap().display(&v), "-A^5 - A^-3 + A^-7");
    }

    #[test]
    fn braces_parens_and_juxtaposition() {
        let v = vars();
        let a = parse_polynomial("(x+y)(-A^{2}-A^{-2})", &v).unwrap();
        let b = parse_polynomial("-x*A^2 - x*A^-2 - y*A^2 - y*A^-2", &v).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_polynomial("2x", &v).unwrap(), parse_polynomial("x+x", &v).unwrap());
        assert_eq!(parse_polynomial("(-A^3)^-1", &v).unwrap(), parse_polynomial("-A^-3", &v).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let v = vars();
        assert!(matches!(parse_polynomial("x^-1", &v), Err(Error::NegativeExponent(_))));
        assert!(matches!(parse_polynomial("q", &v), Err(Error::UnknownVariable(_))));
        assert!(parse_polynomial("(x+y", &v).is_err());
        assert!(parse_polynomial("(x+y)^-1", &v).is_err());
        assert!(parse_polynomial("", &v).is_err());
        assert!(parse_polynomial("x $ y", &v).is_err());
    }
}
