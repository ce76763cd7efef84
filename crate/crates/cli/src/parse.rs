//! Parser for the multivector expression language.
//!
//! An expression is a signed sum of terms. A term is a coefficient, a basis symbol, or a
//! coefficient followed by a basis symbol, optionally joined by `*`:
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := coeff ('*'? blade)? | blade
//! coeff  := number ('/' number)?
//! number := digits ('.' digits?)? | '.' digits
//! blade  := 'e1' | 'e2' | 'e3' | 'e12' | 'e13' | 'e23' | 'e123' | 'I'
//! ```
//!
//! Whitespace is ignored between tokens. Numbers have no exponent notation, since `3e12`
//! reads as `3·e12`.

use std::fmt;

use mvlog::{Blade, Multivector, Signature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based character offset of the offending token.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at column {}: {}", self.pos + 1, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Slash,
    Star,
    Plus,
    Minus,
    Blade(Blade),
}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((i, Tok::Plus)),
            '-' => out.push((i, Tok::Minus)),
            '*' => out.push((i, Tok::Star)),
            '/' => out.push((i, Tok::Slash)),
            'I' => out.push((i, Tok::Blade(Blade::E123))),
            '0'..='9' | '.' => {
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let x: f64 = text.parse().map_err(|_| err(start, format!("malformed number `{text}`")))?;
                if !x.is_finite() {
                    return Err(err(start, format!("number `{text}` is out of range")));
                }
                out.push((start, Tok::Num(x)));
                continue;
            }
            'e' => {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let blade = Blade::ALL
                    .into_iter()
                    .find(|b| *b != Blade::S && b.symbol() == text)
                    .ok_or_else(|| err(start, format!("unknown basis symbol `{text}`")))?;
                out.push((start, Tok::Blade(blade)));
                continue;
            }
            _ => {
                let mut j = i;
                while j < chars.len() && chars[j].is_alphanumeric() {
                    j += 1;
                }
                let text: String = chars[start..j.max(i + 1)].iter().collect();
                return Err(err(start, format!("unexpected `{text}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|t| t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.at += 1;
        t
    }

    fn expect_number(&mut self) -> Result<f64, ParseError> {
        match self.bump() {
            Some(Tok::Num(x)) => Ok(x),
            _ => Err(err(self.toks.get(self.at - 1).map_or(self.end, |t| t.0), "expected a number")),
        }
    }

    fn term(&mut self) -> Result<(f64, Blade), ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Blade(b)) => {
                self.at += 1;
                Ok((1.0, b))
            }
            Some(Tok::Num(x)) => {
                self.at += 1;
                let mut coeff = x;
                if self.peek() == Some(Tok::Slash) {
                    self.at += 1;
                    let den_pos = self.pos();
                    let den = self.expect_number()?;
                    if den == 0.0 {
                        return Err(err(den_pos, "division by zero"));
                    }
                    coeff /= den;
                }
                let star = self.peek() == Some(Tok::Star);
                if star {
                    self.at += 1;
                }
                match self.peek() {
                    Some(Tok::Blade(b)) => {
                        self.at += 1;
                        Ok((coeff, b))
                    }
                    _ if star => Err(err(self.pos(), "expected a basis symbol after `*`")),
                    _ => Ok((coeff, Blade::S)),
                }
            }
            Some(_) => Err(err(pos, "expected a coefficient or basis symbol")),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

/// Parses `src` as a multivector of signature `sig`.
///
/// Repeated basis symbols are summed.
pub fn parse_mv(src: &str, sig: Signature) -> Result<Multivector, ParseError> {
    let toks = lex(src)?;
    let end = src.chars().count();
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end };
    let mut coeffs = [0.0; 8];
    let mut sign = match p.peek() {
        Some(Tok::Minus) => {
            p.at += 1;
            -1.0
        }
        Some(Tok::Plus) => {
            p.at += 1;
            1.0
        }
        _ => 1.0,
    };
    loop {
        let (c, blade) = p.term()?;
        coeffs[blade.index()] += sign * c;
        sign = match p.bump() {
            None => break,
            Some(Tok::Plus) => 1.0,
            Some(Tok::Minus) => -1.0,
            Some(_) => return Err(err(p.toks[p.at - 1].0, "expected `+` or `-` between terms")),
        };
    }
    Multivector::try_new(sig, coeffs).map_err(|e| err(0, e.to_string()))
}

/// Canonical text of a multivector, which [`parse_mv`] reads back exactly.
pub fn print_mv(a: &Multivector) -> String {
    a.to_string()
}
