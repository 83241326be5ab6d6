//! Text forms for complex and bicomplex literals.
//!
//! Complex literals are sums of a real term and an `i` term, e.g. `2`, `-i`,
//! `1.5-2i`. Bicomplex literals come in two forms:
//!
//! - cartesian: `a+bi1+ci2+di1i2`, every term optional and in any order
//!   (`i2i1` is accepted for `i1i2`), e.g. `i2`, `1-3i1i2`;
//! - idempotent: `[m|p]e` with complex literals `m = ξ⁻`, `p = ξ⁺`, e.g. `[1|0]e`.
//!
//! Whitespace between tokens is ignored. Printing uses the idempotent form,
//! collapsing numbers with equal real components to a plain real (`2`, `-1`,
//! `0`), so printed values always reparse to the same components.

use crate::bicomplex::BiComplex;
use crate::complex::Complex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Units {
    /// `1`, `i`
    Complex,
    /// `1`, `i1`, `i2`, `i1i2`
    Cartesian,
}

const CARTESIAN_NAMES: [&str; 4] = ["real", "i1", "i2", "i1i2"];
const COMPLEX_NAMES: [&str; 2] = ["real", "i"];

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    idx: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.char_indices().collect(),
            idx: 0,
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.idx + offset).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.idx += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.idx += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.idx += 1;
                Ok(())
            }
            Some(c) => Err(Error::parse(
                self.pos(),
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(Error::parse(
                self.pos(),
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(self.pos(), format!("unexpected '{c}'"))),
        }
    }

    fn number(&mut self) -> Result<Option<f64>> {
        let start = self.idx;
        let start_pos = self.pos();
        let mut digits = 0;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.idx += 1;
            digits += 1;
        }
        if self.peek() == Some('.') {
            self.idx += 1;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.idx += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            if self.idx > start {
                return Err(Error::parse(start_pos, "malformed number"));
            }
            return Ok(None);
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let exp_digit_at = match self.peek_at(1) {
                Some('+' | '-') => 2,
                _ => 1,
            };
            if self
                .peek_at(exp_digit_at)
                .is_some_and(|c| c.is_ascii_digit())
            {
                self.idx += exp_digit_at;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.idx += 1;
                }
            }
        }
        let text: String = self.chars[start..self.idx]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        let value: f64 = text
            .parse()
            .map_err(|_| Error::parse(start_pos, format!("malformed number '{text}'")))?;
        if !value.is_finite() {
            return Err(Error::parse(
                start_pos,
                format!("number '{text}' is out of range"),
            ));
        }
        Ok(Some(value))
    }

    /// Index into the unit table of `units`, or `None` when no unit follows.
    fn unit(&mut self, units: Units) -> Result<Option<usize>> {
        if self.peek() != Some('i') {
            return Ok(None);
        }
        let pos = self.pos();
        match units {
            Units::Complex => {
                self.idx += 1;
                Ok(Some(1))
            }
            Units::Cartesian => {
                self.idx += 1;
                let first = match self.bump() {
                    Some('1') => 1,
                    Some('2') => 2,
                    _ => return Err(Error::parse(pos, "expected 'i1' or 'i2'")),
                };
                if self.peek() == Some('i') {
                    self.idx += 1;
                    let second = match self.bump() {
                        Some('1') => 1,
                        Some('2') => 2,
                        _ => return Err(Error::parse(pos, "expected 'i1i2'")),
                    };
                    if second == first {
                        return Err(Error::parse(pos, "repeated imaginary unit"));
                    }
                    Ok(Some(3))
                } else {
                    Ok(Some(first))
                }
            }
        }
    }

    /// Parses a signed sum of terms and returns the coefficient of each unit.
    /// Stops before the first character that cannot continue the sum.
    fn sum(&mut self, units: Units) -> Result<[f64; 4]> {
        let names: &[&str] = match units {
            Units::Complex => &COMPLEX_NAMES,
            Units::Cartesian => &CARTESIAN_NAMES,
        };
        let mut coeffs = [0.0; 4];
        let mut seen = [false; 4];
        let mut first = true;
        loop {
            self.skip_ws();
            let term_pos = self.pos();
            let sign = match self.peek() {
                Some('+') => {
                    self.idx += 1;
                    1.0
                }
                Some('-') => {
                    self.idx += 1;
                    -1.0
                }
                _ if first => 1.0,
                _ => break,
            };
            self.skip_ws();
            let number = self.number()?;
            if number.is_some() {
                self.skip_ws();
            }
            let unit = self.unit(units)?;
            let slot = match (number, unit) {
                (None, None) => {
                    let msg = match self.peek() {
                        Some(c) => format!("expected a term, found '{c}'"),
                        None => "expected a term, found end of input".to_owned(),
                    };
                    return Err(Error::parse(self.pos(), msg));
                }
                (_, Some(u)) => u,
                (Some(_), None) => 0,
            };
            if seen[slot] {
                return Err(Error::parse(
                    term_pos,
                    format!("duplicate {} term", names[slot]),
                ));
            }
            seen[slot] = true;
            coeffs[slot] = sign * number.unwrap_or(1.0);
            first = false;
        }
        Ok(coeffs)
    }

    fn complex(&mut self) -> Result<Complex> {
        let [re, im, ..] = self.sum(Units::Complex)?;
        Ok(Complex::new(re, im))
    }

    fn bicomplex(&mut self) -> Result<BiComplex> {
        self.skip_ws();
        if self.peek() == Some('[') {
            self.idx += 1;
            let minus = self.complex()?;
            self.expect('|')?;
            let plus = self.complex()?;
            self.expect(']')?;
            // the suffix follows the bracket directly
            match self.bump() {
                Some('e') => {}
                _ => return Err(Error::parse(self.pos(), "expected 'e' after ']'")),
            }
            Ok(BiComplex::join(minus, plus))
        } else {
            let [u1, u2, u3, u4] = self.sum(Units::Cartesian)?;
            BiComplex::from_cartesian(u1, u2, u3, u4)
        }
    }
}

/// Parses a bicomplex literal in cartesian or idempotent form.
pub fn parse_bicomplex(text: &str) -> Result<BiComplex> {
    let mut p = Parser::new(text);
    let value = p.bicomplex()?;
    p.expect_end()?;
    Ok(value)
}

/// Parses a complex literal `x+yi`.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut p = Parser::new(text);
    let value = p.complex()?;
    p.expect_end()?;
    Ok(value)
}

fn real(x: f64) -> String {
    // -0 prints as 0
    if x == 0.0 {
        "0".to_owned()
    } else {
        format!("{x}")
    }
}

/// Appends `coeff·unit` as a signed term; `leading` omits a `+` sign.
fn push_term(out: &mut String, coeff: f64, unit: &str, leading: bool) {
    if coeff < 0.0 {
        out.push('-');
    } else if !leading {
        out.push('+');
    }
    let magnitude = coeff.abs();
    if unit.is_empty() || magnitude != 1.0 {
        out.push_str(&real(magnitude));
    }
    out.push_str(unit);
}

fn format_terms(coeffs: &[(f64, &str)]) -> String {
    let mut out = String::new();
    for &(coeff, unit) in coeffs {
        if coeff != 0.0 {
            let leading = out.is_empty();
            push_term(&mut out, coeff, unit, leading);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `x+yi` with zero terms omitted.
pub fn format_complex(z: Complex) -> String {
    format_terms(&[(z.re, ""), (z.im, "i")])
}

/// Idempotent form `[m|p]e`, or a plain real when both components are the same real number.
pub fn format_idempotent(x: &BiComplex) -> String {
    let (minus, plus) = x.split();
    if minus == plus && minus.im == 0.0 {
        real(minus.re)
    } else {
        format!("[{}|{}]e", format_complex(minus), format_complex(plus))
    }
}

/// Cartesian form `a+bi1+ci2+di1i2` with zero terms omitted.
pub fn format_cartesian(x: &BiComplex) -> String {
    let [u1, u2, u3, u4] = x.to_cartesian();
    format_terms(&[(u1, ""), (u2, "i1"), (u3, "i2"), (u4, "i1i2")])
}

/// Output style for bicomplex values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Idempotent,
    Cartesian,
}

impl Style {
    pub fn format(self, x: &BiComplex) -> String {
        match self {
            Style::Idempotent => format_idempotent(x),
            Style::Cartesian => format_cartesian(x),
        }
    }
}

/// `[a, b, ...]`
pub fn format_row<'a>(entries: impl IntoIterator<Item = &'a BiComplex>, style: Style) -> String {
    let items: Vec<String> = entries.into_iter().map(|x| style.format(x)).collect();
    format!("[{}]", items.join(", "))
}

/// `[[a, b],[c, d]]`
pub fn format_rows(rows: &[Vec<BiComplex>], style: Style) -> String {
    let items: Vec<String> = rows.iter().map(|r| format_row(r, style)).collect();
    format!("[{}]", items.join(","))
}
