//! Canonical text form of Laurent polynomials and its parser.
//!
//! Output: terms in ascending lexicographic exponent order, joined by ` + ` /
//! ` - `; a term is `c*x^e*y^f` with `^1` and unit coefficients omitted.
//! Example: `3*x^-1*y^2 - 1`.
//!
//! Input grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'] digits]
//! atom   := digits ['/' digits] | name | '(' expr ')'
//! ```
//!
//! Negative powers are only allowed on monomials.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::poly::{Coeff, LaurentPoly};

/// `t` for one variable, `x, y` / `x, y, z` for two or three, `x1..xn` otherwise.
pub fn default_names(nvars: usize) -> Vec<String> {
    match nvars {
        1 => vec!["t".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        n => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        assert_eq!(names.len(), self.nvars(), "one name per variable");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, c)) in self.terms().enumerate() {
            let negative = c.is_negative_coeff();
            let mag = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = exp
                .iter()
                .zip(names)
                .filter(|(e, _)| **e != 0)
                .map(|(e, n)| if *e == 1 { n.as_ref().to_string() } else { format!("{}^{}", n.as_ref(), e) })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Self, AlgebraError> {
        let names: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
        let mut p = Parser { src: text.as_bytes(), pos: 0, names: &names };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn expr<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, AlgebraError> {
        let n = self.names.len();
        let mut acc = LaurentPoly::zero(n);
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        loop {
            let t = self.term::<C>()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, AlgebraError> {
        let mut acc = self.factor::<C>()?;
        while self.eat(b'*') {
            let f = self.factor::<C>()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, AlgebraError> {
        let base = self.atom::<C>()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        let at = self.pos;
        let e = self.digits()?;
        let e: u32 = e.try_into().map_err(|_| AlgebraError::Parse { pos: at, msg: "exponent too large".into() })?;
        if !negative {
            return Ok(base.pow(e));
        }
        let inv = match base.as_monomial() {
            Some((exp, c)) if c.is_one() => {
                let neg: Vec<i64> = exp.iter().map(|x| -x).collect();
                LaurentPoly::monomial(base.nvars(), neg, C::one())
            }
            _ => return Err(AlgebraError::Parse { pos: at, msg: "negative power of a non-monomial".into() }),
        };
        Ok(inv.pow(e))
    }

    fn atom<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, AlgebraError> {
        let n = self.names.len();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b) if b.is_ascii_digit() => {
                let num = C::from_bigint(&self.digits()?);
                if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(AlgebraError::Parse { pos: at, msg: "zero denominator".into() });
                    }
                    let q = num
                        .div_exact(&C::from_bigint(&den))
                        .ok_or(AlgebraError::Parse { pos: at, msg: "fraction not allowed over these coefficients".into() })?;
                    return Ok(LaurentPoly::constant(n, q));
                }
                Ok(LaurentPoly::constant(n, num))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                match self.names.iter().position(|nm| *nm == word) {
                    Some(i) => Ok(LaurentPoly::var(n, i)),
                    None => Err(AlgebraError::Parse { pos: start, msg: format!("unknown variable '{word}'") }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
