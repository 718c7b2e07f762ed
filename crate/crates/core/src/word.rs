//! Freely reduced words in a free group on indexed generators, and the word
//! parser.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! word   := factor (['*'] factor)*
//! factor := atom ['^' ['-'] digits]
//! atom   := name | '1' | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! Names are matched greedily, longest first. `[u,v]` is `u v u⁻¹ v⁻¹`.

use std::fmt;

use crate::error::{EmbedError, Result};

/// Letters `(generator, exponent)`; adjacent letters never share a generator
/// and exponents are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length as a word in generators and their inverses.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        Word { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// Free product `self · other`, reduced.
    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `self · other · self⁻¹ · other⁻¹`
    pub fn commutator(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    pub fn conjugate_by(&self, x: &Word) -> Word {
        x.mul(self).mul(&x.inverse())
    }

    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for &(g, e) in &self.letters {
            v[g] += e;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    /// Replaces each generator by a word.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut acc = Word::identity();
        for &(g, e) in &self.letters {
            acc = acc.mul(&images[g].pow(e));
        }
        acc
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> WordDisplay<'a, S> {
        WordDisplay { word: self, names }
    }
}

/// Prints `a*b^-1*c^2`; the identity prints as `1`.
pub struct WordDisplay<'a, S> {
    word: &'a Word,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for WordDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.word.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.names[g].as_ref())?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn parse_word<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Word> {
    let names: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
    let mut p = WordParser { src: text.as_bytes(), text, pos: 0, names: &names };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(format!("unexpected '{}'", p.rest_char())));
    }
    Ok(w)
}

struct WordParser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    names: &'a [&'a str],
}

impl WordParser<'_> {
    fn err(&self, msg: String) -> EmbedError {
        EmbedError::Syntax { pos: self.pos + 1, msg }
    }

    fn rest_char(&self) -> char {
        self.text[self.pos..].chars().next().unwrap_or(' ')
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

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b) if b == b'(' || b == b'[' || b == b'1' || b.is_ascii_alphabetic() || b == b'_')
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        if !self.starts_factor() {
            return Err(self.err("expected a generator, '1', '(' or '['".into()));
        }
        loop {
            acc = acc.mul(&self.factor()?);
            if self.eat(b'*') {
                if !self.starts_factor() {
                    return Err(self.err("expected a factor after '*'".into()));
                }
                continue;
            }
            if !self.starts_factor() {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer exponent".into()));
        }
        let n: i64 = self.text[start..self.pos]
            .parse()
            .map_err(|_| EmbedError::Syntax { pos: start + 1, msg: "exponent too large".into() })?;
        Ok(base.pow(if negative { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'".into()));
                }
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.word()?;
                if !self.eat(b',') {
                    return Err(self.err("expected ',' in commutator".into()));
                }
                let v = self.word()?;
                if !self.eat(b']') {
                    return Err(self.err("expected ']'".into()));
                }
                Ok(u.commutator(&v))
            }
            Some(b'1') if !self.names.iter().any(|n| n.starts_with('1')) => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(_) => {
                let rest = &self.text[self.pos..];
                let best = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| !n.is_empty() && rest.starts_with(**n))
                    .max_by_key(|(_, n)| n.len());
                match best {
                    Some((g, n)) => {
                        self.pos += n.len();
                        Ok(Word::generator(g))
                    }
                    None => {
                        let name: String =
                            rest.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
                        let name = if name.is_empty() { self.rest_char().to_string() } else { name };
                        Err(EmbedError::UnknownGenerator { name, pos: self.pos + 1 })
                    }
                }
            }
            None => Err(self.err("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AB: [&str; 2] = ["a", "b"];

    #[test]
    fn commutator_convention() {
        let w = parse_word("[a,b]", &AB).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
    }

    #[test]
    fn reduction_and_identity() {
        assert!(parse_word("a*a^-1", &AB).unwrap().is_identity());
        assert!(parse_word("1", &AB).unwrap().is_identity());
        let ab = parse_word("ab", &AB).unwrap();
        let bia = parse_word("b^-1 a", &AB).unwrap();
        assert_eq!(ab.mul(&bia), parse_word("a^2", &AB).unwrap());
        assert_eq!(Word::identity().mul(&ab), ab);
    }

    #[test]
    fn paper_longitude_has_nine_syllables() {
        let names = ["s", "t", "u", "v", "w", "x", "y", "z"];
        let w = parse_word("x^2*t*y^-1*t^-1*y*s^-1*w^-1*x*v^-1", &names).unwrap();
        assert_eq!(w.syllables(), 9);
        assert_eq!(w.display(&names).to_string(), "x^2*t*y^-1*t^-1*y*s^-1*w^-1*x*v^-1");
    }

    #[test]
    fn greedy_names_and_errors() {
        let names = ["x", "x1", "y"];
        let w = parse_word("x1x y", &names).unwrap();
        assert_eq!(w.letters(), &[(1, 1), (0, 1), (2, 1)]);
        assert_eq!(parse_word("a q", &AB), Err(EmbedError::UnknownGenerator { name: "q".into(), pos: 3 }));
        assert!(matches!(parse_word("(a b", &AB), Err(EmbedError::Syntax { pos: 5, .. })));
        assert!(matches!(parse_word("a^", &AB), Err(EmbedError::Syntax { .. })));
        assert!(matches!(parse_word("", &AB), Err(EmbedError::Syntax { .. })));
    }

    #[test]
    fn nested_commutators_and_powers() {
        let w = parse_word("[[a,b],a]", &AB).unwrap();
        assert_eq!(w.exponent_sums(2), vec![0, 0]);
        assert_eq!(parse_word("(ab)^-2", &AB).unwrap(), parse_word("b^-1a^-1b^-1a^-1", &AB).unwrap());
    }
}
