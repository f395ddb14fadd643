//! Parser for initial-state expressions: a whitespace-insensitive sum of
//! terms `coef|j,m>`, where `coef` is a real literal (`0.5`), an imaginary
//! literal (`0.5i` or bare `i`), or a parenthesized complex literal
//! (`(0.5+0.5i)`). A missing coefficient means 1, and terms may carry leading
//! `+`/`-` signs. Amplitudes refer to the |j,m⟩ kets themselves.

use std::fmt;

use fdl_core::channels::InitialStateSpec;
use fdl_core::hilbert::AngularMomentumLabel;
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid initial-state expression at offset {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, expected: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.pos += 1;
                Ok(())
            }
            found => Err(self.error(format!(
                "expected '{expected}'{}",
                match found {
                    Some(c) => format!(", found '{c}'"),
                    None => ", found end of input".into(),
                }
            ))),
        }
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            position: self.pos,
            message,
        }
    }

    /// Unsigned decimal literal: digits with an optional fractional part.
    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some('.') {
            self.pos += 1;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        if self.pos == start || (self.pos == start + 1 && self.chars[start] == '.') {
            return Err(self.error("expected a decimal literal".into()));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| self.error(format!("cannot parse number '{text}'")))
    }

    fn signed_number(&mut self) -> Result<f64, ParseError> {
        let sign = match self.peek() {
            Some('+') => {
                self.pos += 1;
                1.0
            }
            Some('-') => {
                self.pos += 1;
                -1.0
            }
            _ => 1.0,
        };
        Ok(sign * self.number()?)
    }

    /// Coefficient of one term; empty means 1.
    fn coefficient(&mut self) -> Result<Complex64, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let re = self.signed_number()?;
                let im = self.signed_number()?;
                self.eat('i')?;
                self.eat(')')?;
                Ok(Complex64::new(re, im))
            }
            Some('i') => {
                self.pos += 1;
                Ok(Complex64::new(0.0, 1.0))
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let value = self.number()?;
                if self.peek() == Some('i') {
                    self.pos += 1;
                    Ok(Complex64::new(0.0, value))
                } else {
                    Ok(Complex64::new(value, 0.0))
                }
            }
            _ => Ok(Complex64::new(1.0, 0.0)),
        }
    }

    fn integer(&mut self) -> Result<i32, ParseError> {
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer".into()));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let value: i32 = text
            .parse()
            .map_err(|_| self.error(format!("cannot parse integer '{text}'")))?;
        Ok(if negative { -value } else { value })
    }

    fn ket(&mut self) -> Result<AngularMomentumLabel, ParseError> {
        self.eat('|')?;
        let j = self.integer()?;
        self.eat(',')?;
        let m = self.integer()?;
        self.eat('>')?;
        AngularMomentumLabel::new(j, m)
            .map_err(|_| self.error(format!("no basis ket |{j},{m}>")))
    }
}

/// Parses an expression into an [`InitialStateSpec`]; normalization is
/// checked later, when the state is realized.
pub fn parse_initial(text: &str) -> Result<InitialStateSpec, ParseError> {
    let mut scanner = Scanner::new(text);
    if scanner.peek().is_none() {
        return Err(scanner.error("empty expression".into()));
    }
    let mut amplitudes = Vec::new();
    let mut first = true;
    while scanner.peek().is_some() {
        let sign = match scanner.peek() {
            Some('+') => {
                scanner.bump();
                1.0
            }
            Some('-') => {
                scanner.bump();
                -1.0
            }
            _ if first => 1.0,
            Some(c) => {
                return Err(scanner.error(format!("expected '+' or '-' between terms, found '{c}'")))
            }
            None => unreachable!(),
        };
        first = false;
        let coefficient = scanner.coefficient()?;
        let label = scanner.ket()?;
        amplitudes.push((label, coefficient * sign));
    }
    Ok(InitialStateSpec::new(amplitudes))
}
