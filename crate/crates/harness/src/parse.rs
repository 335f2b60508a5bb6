//! Element grammar:
//!
//! ```text
//! expr   := factor ('*' factor)*
//! factor := atom ('^' int)*
//! atom   := 'e' | 'h(' int ';' int ',' int ',' int ')'
//!         | 'L[' int ',' int ',' int ';' int ',' int ',' int ';' int ',' int ',' int ']'
//!         | 't(' int ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere. Positions in errors are byte offsets
//! into the original text.

use amalgam::{GroupWord, HnVector, LambdaMatrix, PrimeSeq};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("at {pos}: {source}")]
    Element {
        pos: usize,
        #[source]
        source: amalgam::Error,
    },
    #[error("at {pos}: exponent {exponent} out of range")]
    Exponent { pos: usize, exponent: BigInt },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Element { pos, .. } | ParseError::Exponent { pos, .. } => *pos,
        }
    }
}

pub fn parse_element(text: &str, primes: &PrimeSeq) -> Result<GroupWord, ParseError> {
    let mut p = Parser { text: text.as_bytes(), pos: 0, primes };
    let w = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.syntax("'*' or end of input"));
    }
    Ok(w)
}

enum Atom {
    Stable { level: usize, exponent: BigInt },
    Word(GroupWord),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    primes: &'a PrimeSeq,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn syntax(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax { pos: self.pos, expected }
    }

    fn expect(&mut self, c: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(expected))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.text.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.syntax("integer"));
        }
        let body: String = self.text[start..self.pos]
            .iter()
            .filter(|c| !c.is_ascii_whitespace())
            .map(|&c| c as char)
            .collect();
        Ok(body.parse().expect("sign and digits form an integer"))
    }

    fn small(&mut self, what: &'static str) -> Result<i64, ParseError> {
        let pos = self.pos;
        let v = self.int()?;
        v.to_i64().ok_or(ParseError::Syntax { pos, expected: what })
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let pos = self.pos;
        let v = self.int()?;
        if v.is_negative() {
            return Err(ParseError::Syntax { pos, expected: "non-negative index" });
        }
        v.to_usize().ok_or(ParseError::Syntax { pos, expected: "index" })
    }

    fn expr(&mut self) -> Result<GroupWord, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GroupWord, ParseError> {
        let start = self.pos;
        let mut atom = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let pos = self.pos;
            let k = self.int()?;
            atom = match atom {
                Atom::Stable { level, exponent } => Atom::Stable { level, exponent: exponent * k },
                Atom::Word(w) => {
                    let k = k.to_i64().ok_or(ParseError::Exponent { pos, exponent: k })?;
                    Atom::Word(w.pow(k))
                }
            };
        }
        match atom {
            Atom::Word(w) => Ok(w),
            Atom::Stable { exponent, .. } if exponent.is_zero() => Ok(GroupWord::identity()),
            Atom::Stable { level, exponent } => {
                GroupWord::stable(level, exponent).map_err(|source| ParseError::Element { pos: start, source })
            }
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.syntax("element")),
        };
        let element = |source| ParseError::Element { pos: start, source };
        match self.text[self.pos] {
            b'e' => {
                self.pos += 1;
                Ok(Atom::Word(GroupWord::identity()))
            }
            b'h' => {
                self.pos += 1;
                self.expect(b'(', "'('")?;
                let n = self.index()?;
                self.expect(b';', "';'")?;
                let mut c = [0i64; 3];
                for (i, slot) in c.iter_mut().enumerate() {
                    if i > 0 {
                        self.expect(b',', "','")?;
                    }
                    *slot = self.small("coordinate")?;
                }
                self.expect(b')', "')'")?;
                let x = HnVector::new(self.primes, n, c).map_err(element)?;
                Ok(Atom::Word(x.into()))
            }
            b'L' => {
                self.pos += 1;
                self.expect(b'[', "'['")?;
                let mut m: [[BigInt; 3]; 3] = Default::default();
                for (i, row) in m.iter_mut().enumerate() {
                    if i > 0 {
                        self.expect(b';', "';'")?;
                    }
                    for (j, slot) in row.iter_mut().enumerate() {
                        if j > 0 {
                            self.expect(b',', "','")?;
                        }
                        *slot = self.int()?;
                    }
                }
                self.expect(b']', "']'")?;
                let l = LambdaMatrix::new(m).map_err(element)?;
                Ok(Atom::Word(l.into()))
            }
            b't' => {
                self.pos += 1;
                self.expect(b'(', "'('")?;
                let level = self.index()?;
                self.expect(b')', "')'")?;
                if level == 0 {
                    return Err(element(amalgam::Error::ZeroLevel));
                }
                Ok(Atom::Stable { level, exponent: BigInt::from(1) })
            }
            b'(' => {
                self.pos += 1;
                let w = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(Atom::Word(w))
            }
            _ => Err(self.syntax("element")),
        }
    }
}
