//! Polynomial front-end: from expression text to the exponent support.
//!
//! Only the support of a germ feeds the Newton-diagram formulas, so
//! coefficients are parsed exactly (arbitrary precision), combined, and then
//! discarded apart from the zero/non-zero distinction. The grammar is
//!
//! ```text
//! poly   := term { ("+" | "-") term } ;
//! term   := [ sign ] [ nat "*" ] factor { "*" factor } | [ sign ] nat ;
//! factor := ident [ "^" nat ] ;
//! ident  := letter { letter | digit | "_" } ;
//! nat    := digit { digit } ;
//! ```
//!
//! with whitespace insignificant between tokens. Germs are required to
//! vanish at the origin, so a constant term that survives cancellation is
//! rejected, as is a polynomial whose terms cancel completely.
//!
//! Only finite polynomial expressions are accepted. A holomorphic germ with
//! infinite support must be truncated by the caller to a finite set that
//! still contains every vertex of its Newton polyhedron; no automatic
//! truncation is attempted.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("empty support: all terms cancel, and the zero germ has no Newton diagram")]
    EmptySupport,
    #[error("germ does not vanish at the origin: a constant term survives cancellation")]
    DoesNotVanish,
    #[error("invalid variable name `{name}`")]
    BadVariableName { name: String },
    #[error("duplicate variable name `{name}`")]
    DuplicateVariable { name: String },
    #[error("invalid support: {0}")]
    InvalidSupport(String),
}

/// Ordered list of variable names; position `i` owns ambient coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableMap {
    names: Vec<String>,
}

impl VariableMap {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, ParseError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(ParseError::BadVariableName { name: name.clone() });
            }
            if names[..i].contains(name) {
                return Err(ParseError::DuplicateVariable { name: name.clone() });
            }
        }
        Ok(VariableMap { names })
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

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Finite set of exponent vectors of a holomorphic germ. The coefficients
/// are gone; only the support drives every formula downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GermSupport {
    ambient_dim: usize,
    points: Vec<Vec<Int>>,
}

impl GermSupport {
    /// Build a support from raw exponent vectors. Duplicates are merged;
    /// emptiness, dimension mismatches and negative exponents are rejected.
    pub fn new(
        ambient_dim: usize,
        points: impl IntoIterator<Item = Vec<Int>>,
    ) -> Result<Self, ParseError> {
        if ambient_dim == 0 {
            return Err(ParseError::InvalidSupport(
                "ambient dimension must be positive".into(),
            ));
        }
        let mut set: Vec<Vec<Int>> = Vec::new();
        for p in points {
            if p.len() != ambient_dim {
                return Err(ParseError::InvalidSupport(format!(
                    "exponent vector has {} coordinates, expected {}",
                    p.len(),
                    ambient_dim
                )));
            }
            if p.iter().any(|c| c < &Int::zero()) {
                return Err(ParseError::InvalidSupport(
                    "negative exponent in support point".into(),
                ));
            }
            if !set.contains(&p) {
                set.push(p);
            }
        }
        if set.is_empty() {
            return Err(ParseError::EmptySupport);
        }
        set.sort();
        Ok(GermSupport {
            ambient_dim,
            points: set,
        })
    }

    pub fn from_ints(ambient_dim: usize, points: &[&[i64]]) -> Result<Self, ParseError> {
        Self::new(
            ambient_dim,
            points.iter().map(|p| crate::linalg::vec_int(p)),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[Vec<Int>] {
        &self.points
    }

    /// Render as a sum of monomials with coefficient 1 (the round-trip form).
    pub fn to_expression(&self, vars: &VariableMap) -> String {
        assert_eq!(vars.len(), self.ambient_dim);
        let mut terms = Vec::new();
        for point in &self.points {
            let mut factors = Vec::new();
            for (i, e) in point.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if e.is_one() {
                    factors.push(vars.names()[i].clone());
                } else {
                    factors.push(format!("{}^{}", vars.names()[i], e));
                }
            }
            if factors.is_empty() {
                terms.push("1".to_string());
            } else {
                terms.push(factors.join("*"));
            }
        }
        terms.join(" + ")
    }
}

impl fmt::Display for GermSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|p| {
                let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
                format!("({})", coords.join(","))
            })
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}

/// Parse a polynomial expression into the support of its germ.
///
/// Exponent vectors whose total coefficient cancels to zero are dropped; a
/// support point with all coordinates zero (the germ not vanishing at the
/// origin) and the all-cancelled polynomial are errors.
pub fn parse_polynomial(text: &str, vars: &VariableMap) -> Result<GermSupport, ParseError> {
    let mut parser = Parser {
        input: text.as_bytes(),
        pos: 0,
        vars,
    };
    let coeffs = parser.parse_poly()?;
    let mut points = Vec::new();
    for (exps, coeff) in coeffs {
        if coeff.is_zero() {
            continue;
        }
        if exps.iter().all(Zero::is_zero) {
            return Err(ParseError::DoesNotVanish);
        }
        points.push(exps);
    }
    if points.is_empty() {
        return Err(ParseError::EmptySupport);
    }
    GermSupport::new(vars.len(), points)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    vars: &'a VariableMap,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn parse_poly(&mut self) -> Result<BTreeMap<Vec<Int>, Int>, ParseError> {
        let mut acc: BTreeMap<Vec<Int>, Int> = BTreeMap::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.bump();
                    Int::one()
                }
                Some(b'-') => {
                    self.bump();
                    -Int::one()
                }
                Some(_) if first => Int::one(),
                Some(_) => return self.syntax("expected `+` or `-` between terms"),
                None if first => return self.syntax("empty polynomial"),
                None => return self.syntax("trailing operator"),
            };
            let (exps, coeff) = self.parse_term()?;
            *acc.entry(exps).or_insert_with(Int::zero) += sign * coeff;
            first = false;
            if self.peek().is_none() {
                return Ok(acc);
            }
        }
    }

    /// One term after its sign: `[ nat "*" ] factor { "*" factor } | nat`.
    fn parse_term(&mut self) -> Result<(Vec<Int>, Int), ParseError> {
        // The grammar allows one extra sign inside the term itself.
        let extra_sign = match self.peek() {
            Some(b'+') => {
                self.bump();
                Int::one()
            }
            Some(b'-') => {
                self.bump();
                -Int::one()
            }
            _ => Int::one(),
        };
        let mut coeff = extra_sign;
        let mut exps = vec![Int::zero(); self.vars.len()];
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff *= self.parse_nat()?;
                match self.peek() {
                    Some(b'*') => {
                        self.bump();
                        self.parse_factor(&mut exps)?;
                    }
                    // A bare natural number is a constant term.
                    _ => return Ok((exps, coeff)),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.parse_factor(&mut exps)?;
            }
            _ => return self.syntax("expected a number or a variable"),
        }
        while self.peek() == Some(b'*') {
            self.bump();
            self.parse_factor(&mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn parse_factor(&mut self, exps: &mut [Int]) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return self.syntax("expected a variable"),
        }
        let mut end = self.pos;
        while end < self.input.len()
            && (self.input[end].is_ascii_alphanumeric() || self.input[end] == b'_')
        {
            end += 1;
        }
        let name = std::str::from_utf8(&self.input[self.pos..end])
            .expect("identifier bytes are ASCII")
            .to_string();
        self.pos = end;
        let Some(index) = self.vars.index_of(&name) else {
            return Err(ParseError::UnknownVariable { name, pos: start });
        };
        let exponent = if self.peek() == Some(b'^') {
            self.bump();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => self.parse_nat()?,
                _ => return self.syntax("expected a natural number after `^`"),
            }
        } else {
            Int::one()
        };
        exps[index] += exponent;
        Ok(())
    }

    fn parse_nat(&mut self) -> Result<Int, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.syntax("expected a natural number");
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(digits.parse::<Int>().expect("digits parse as an integer"))
    }
}
