//! Expression grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)* ['*' word] | word
//! word   := letter+            letter := 'z' int [',' int]
//! factor := int ['/' int] | ident ['^' int] | '(' poly ')' ['^' int]
//! poly   := ['+'|'-'] pterm (('+'|'-') pterm)*
//! pterm  := factor ('*' factor)*
//! ```
//!
//! A bare scalar denotes that multiple of the empty word `1`. Letters are
//! separated by whitespace; any bytes after a complete expression are an
//! error.

use std::fmt;

use quasishuffle::scalars::{One, Zero};
use quasishuffle::{Letter, NcPoly, PolyScalar, Rational, Word};

/// A parsed linear combination of words with polynomial coefficients.
pub type Expr = NcPoly<PolyScalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Letter(Letter),
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Letter(a) => format!("letter `{a}`"),
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |from: usize| {
        let mut j = from;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    let number = |from: usize, to: usize| -> Result<u64, ParseError> {
        input[from..to]
            .parse::<u64>()
            .or_else(|_| err(from, format!("number `{}` is too large", &input[from..to])))
    };
    while i < bytes.len() {
        let c = input[i..].chars().next().expect("in bounds");
        let start = i;
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let end = digits(i);
                let n = number(i, end)?;
                i = end;
                out.push((start, Tok::Int(n)));
                continue;
            }
            'z' if i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() => {
                let end = digits(i + 1);
                let index = number(i + 1, end)? as u32;
                if index == 0 {
                    return err(start, "letter index must be at least 1");
                }
                i = end;
                let mut color = None;
                if i < bytes.len() && bytes[i] == b',' {
                    let cend = digits(i + 1);
                    if cend == i + 1 {
                        return err(i + 1, "expected a color index after `,`");
                    }
                    color = Some(number(i + 1, cend)? as u32);
                    i = cend;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    return err(start, format!("unknown letter `{}`", token_text(input, start)));
                }
                out.push((start, Tok::Letter(Letter { index, color })));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i;
                while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
                    end += 1;
                }
                out.push((start, Tok::Ident(input[i..end].to_string())));
                i = end;
                continue;
            }
            other => return err(start, format!("unexpected character `{other}`")),
        };
        i += c.len_utf8();
        out.push((start, tok));
    }
    Ok(out)
}

fn token_text(input: &str, start: usize) -> &str {
    let end = input[start..]
        .find(|c: char| c.is_whitespace() || "+-*/^()".contains(c))
        .map_or(input.len(), |k| start + k);
    &input[start..end]
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(input)?, pos: 0, end: input.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => err(self.offset(), format!("expected {wanted}, found {}", t.describe())),
            None => err(self.offset(), format!("expected {wanted}, found end of input")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.unexpected("`+`, `-` or end of input"),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat(&Tok::Plus) {
            Some(false)
        } else if self.eat(&Tok::Minus) {
            Some(true)
        } else {
            None
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => u32::try_from(n).or_else(|_| err(at, "exponent is too large")),
            _ => {
                self.pos -= 1;
                self.unexpected("an integer exponent")
            }
        }
    }

    fn factor(&mut self) -> Result<PolyScalar, ParseError> {
        let at = self.offset();
        let base = match self.bump() {
            Some(Tok::Int(n)) => {
                if self.eat(&Tok::Slash) {
                    let dat = self.offset();
                    match self.bump() {
                        Some(Tok::Int(0)) => return err(dat, "zero denominator"),
                        Some(Tok::Int(d)) => PolyScalar::constant(Rational::new(n, d).expect("nonzero")),
                        _ => {
                            self.pos -= 1;
                            return self.unexpected("a denominator");
                        }
                    }
                } else {
                    PolyScalar::constant(Rational::from(n as i64))
                }
            }
            Some(Tok::Ident(v)) => PolyScalar::var(&v),
            Some(Tok::LParen) => {
                let p = self.poly()?;
                if !self.eat(&Tok::RParen) {
                    return self.unexpected("`)`");
                }
                p
            }
            Some(Tok::Letter(_)) => return err(at, "letters cannot appear inside a scalar"),
            _ => {
                self.pos -= 1;
                return self.unexpected("a scalar");
            }
        };
        if self.eat(&Tok::Caret) {
            let e = self.exponent()?;
            let mut acc = PolyScalar::one();
            for _ in 0..e {
                acc = acc * base.clone();
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn poly(&mut self) -> Result<PolyScalar, ParseError> {
        let mut negative = self.sign() == Some(true);
        let mut acc = PolyScalar::zero();
        loop {
            let mut term = self.factor()?;
            while self.eat(&Tok::Star) {
                term = term * self.factor()?;
            }
            acc = if negative { acc - term } else { acc + term };
            match self.sign() {
                Some(s) => negative = s,
                None => return Ok(acc),
            }
        }
    }

    fn word(&mut self) -> Word {
        let mut letters = Vec::new();
        while let Some(Tok::Letter(a)) = self.peek() {
            letters.push(*a);
            self.pos += 1;
        }
        Word::new(letters)
    }

    fn term(&mut self) -> Result<(Word, PolyScalar), ParseError> {
        if matches!(self.peek(), Some(Tok::Letter(_))) {
            return Ok((self.word(), PolyScalar::one()));
        }
        let mut coeff = self.factor()?;
        while self.eat(&Tok::Star) {
            if matches!(self.peek(), Some(Tok::Letter(_))) {
                return Ok((self.word(), coeff));
            }
            coeff = coeff * self.factor()?;
        }
        if matches!(self.peek(), Some(Tok::Letter(_))) {
            return self.unexpected("`*` between a scalar and a word");
        }
        Ok((Word::empty(), coeff))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if self.peek().is_none() {
            return self.unexpected("an expression");
        }
        let mut negative = self.sign() == Some(true);
        let mut acc = Expr::zero();
        loop {
            let (w, c) = self.term()?;
            acc.add_term(w, if negative { -c } else { c });
            match self.sign() {
                Some(s) => negative = s,
                None => return Ok(acc),
            }
        }
    }
}

/// Parses a linear combination of words.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(input)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a scalar: a rational or a polynomial in named variables.
pub fn parse_scalar(input: &str) -> Result<PolyScalar, ParseError> {
    let mut p = Parser::new(input)?;
    if p.peek().is_none() {
        return p.unexpected("a scalar");
    }
    let s = p.poly()?;
    p.finish()?;
    Ok(s)
}

/// The canonical printed form, which [`parse_expr`] reads back.
pub fn print_expr(e: &Expr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ix: &[u32]) -> Word {
        Word::from_indices(ix)
    }

    #[test]
    fn words_and_sums() {
        assert_eq!(parse_expr("z2 z1").unwrap(), NcPoly::word(w(&[2, 1])));
        let e = parse_expr("1/2*z2 z1 + z3").unwrap();
        assert_eq!(e.num_terms(), 2);
        assert_eq!(e.coeff(&w(&[2, 1])), PolyScalar::constant(Rational::new(1, 2).unwrap()));
        assert_eq!(parse_expr("1").unwrap(), NcPoly::one());
        assert_eq!(parse_expr("-z1 + z1").unwrap(), NcPoly::zero());
    }

    #[test]
    fn colored_letters() {
        let e = parse_expr("z2,1 z1,0").unwrap();
        let word = Word::new(vec![Letter { index: 2, color: Some(1) }, Letter { index: 1, color: Some(0) }]);
        assert_eq!(e, NcPoly::word(word));
    }

    #[test]
    fn polynomial_coefficients() {
        let e = parse_expr("(r + 1)*z3 - 2*r^2*z1 z2 + eps").unwrap();
        let r = PolyScalar::var("r");
        assert_eq!(e.coeff(&w(&[3])), r.clone() + PolyScalar::one());
        assert_eq!(e.coeff(&w(&[1, 2])), -(PolyScalar::constant(Rational::from(2)) * r.clone() * r));
        assert_eq!(e.coeff(&Word::empty()), PolyScalar::var("eps"));
        assert_eq!(parse_scalar("-(1 - r)^2").unwrap().to_string(), "-r^2 + 2*r - 1");
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_expr("z1 + z0").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = parse_expr("z1 +").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_expr("2 z1").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_expr("z1 x1").unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!(parse_expr("y2").unwrap(), NcPoly::term(Word::empty(), PolyScalar::var("y2")));
        let e = parse_expr("(r*z1)").unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!(parse_expr("z1 & z2").unwrap_err().offset, 3);
        assert_eq!(parse_expr("z1,").unwrap_err().offset, 3);
        assert_eq!(parse_expr("z2x").unwrap_err().message, "unknown letter `z2x`");
        assert_eq!(parse_expr("1/0*z1").unwrap_err().offset, 2);
    }

    #[test]
    fn prints_back() {
        for s in ["2*z1 z1 + z2", "z2 z1 + z3", "-1/2*r*z2,1 + (r + 1)*z3", "-eps", "0"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(print_expr(&e), s);
        }
    }
}
