//! Cup-length certificates: a target map (or a family sharing one domain),
//! a list of kernel classes, and a claimed product. A passing certificate
//! with k factors witnesses secat >= k + 1 for the underlying fibration.
//!
//! Factors are written in the double-index notation of the calculations:
//! `a1[2]` is the class a_1 placed in tensor slot 2 (slots are 1-based).
//! The grammar supports sums, differences, products, integer coefficients
//! and powers, e.g. `(a1[1] + b1[1]) * x1[2]^2`.

use std::sync::Arc;

use super::coeff::Coeff;
use super::map::AlgebraMap;
use super::ring::{include_in_slot, Elem, GradedAlgebra};
use super::AlgebraError;

/// Expected value of the certificate product.
#[derive(Debug, Clone)]
pub enum Expected<C: Coeff> {
    Nonzero,
    Equals(Elem<C>),
}

pub struct Certificate<C: Coeff> {
    pub label: String,
    /// Maps sharing a domain; a factor counts as a zero divisor when every
    /// map kills it (a single map is the common case, the effective family
    /// needs the whole twisted-diagonal collection).
    pub targets: Vec<AlgebraMap<C>>,
    pub factor_exprs: Vec<String>,
    pub factors: Vec<Elem<C>>,
    pub expected: Expected<C>,
}

/// Per-certificate verification report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CertReport {
    pub label: String,
    pub factors_in_kernel: Vec<bool>,
    pub product: String,
    pub product_nonzero: bool,
    pub expected_matches: bool,
    pub pass: bool,
    /// secat lower bound implied by a passing certificate: #factors + 1.
    pub bound: Option<usize>,
}

impl<C: Coeff> Certificate<C> {
    pub fn new(
        label: impl Into<String>,
        targets: Vec<AlgebraMap<C>>,
        factor_exprs: Vec<String>,
        expected: Expected<C>,
    ) -> Result<Self, AlgebraError> {
        let label = label.into();
        let Some(first) = targets.first() else {
            return Err(AlgebraError::BadParams {
                reason: "certificate needs at least one target map".into(),
            });
        };
        let domain = first.domain().clone();
        let factors = factor_exprs
            .iter()
            .map(|e| parse_expr(&domain, e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            label,
            targets,
            factor_exprs,
            factors,
            expected,
        })
    }
}

/// Checks every factor for kernel membership, multiplies the factors in
/// order, and compares against the expectation.
pub fn verify_certificate<C: Coeff>(cert: &Certificate<C>) -> CertReport {
    let domain = cert.targets[0].domain().clone();
    let factors_in_kernel: Vec<bool> = cert
        .factors
        .iter()
        .map(|f| cert.targets.iter().all(|m| m.apply(f).is_zero()))
        .collect();
    let product = domain.product(&cert.factors);
    let product_nonzero = !product.is_zero();
    let expected_matches = match &cert.expected {
        Expected::Nonzero => product_nonzero,
        Expected::Equals(e) => product == *e,
    };
    let pass = factors_in_kernel.iter().all(|&b| b) && expected_matches;
    CertReport {
        label: cert.label.clone(),
        factors_in_kernel,
        product: domain.display(&product),
        product_nonzero,
        expected_matches,
        pass,
        bound: pass.then_some(cert.factors.len() + 1),
    }
}

// ---------------------------------------------------------------------------
// Expression parser.

struct Parser<'a, C: Coeff> {
    ring: &'a Arc<GradedAlgebra<C>>,
    chars: Vec<char>,
    pos: usize,
}

/// Parses a factor expression in the ring (tensor slots via `name[slot]`;
/// for base rings the slot may be omitted).
pub fn parse_expr<C: Coeff>(
    ring: &Arc<GradedAlgebra<C>>,
    src: &str,
) -> Result<Elem<C>, AlgebraError> {
    let mut p = Parser {
        ring,
        chars: src.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(AlgebraError::ParseError {
            expr: src.to_string(),
            reason: format!("trailing input at position {}", p.pos),
        });
    }
    Ok(e)
}

impl<'a, C: Coeff> Parser<'a, C> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, reason: impl Into<String>) -> AlgebraError {
        AlgebraError::ParseError {
            expr: self.chars.iter().collect(),
            reason: reason.into(),
        }
    }

    fn expr(&mut self) -> Result<Elem<C>, AlgebraError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                self.ring.scale(&self.term()?, C::one().neg())
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Elem<C>, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.power()?;
                    acc = self.ring.mul(&acc, &f);
                }
                // Implicit multiplication before '(' or an identifier.
                Some(c) if c == '(' || c.is_ascii_alphabetic() => {
                    let f = self.power()?;
                    acc = self.ring.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Elem<C>, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let k = self.integer()? as usize;
            Ok(self.ring.pow(&base, k))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Elem<C>, AlgebraError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.error("expected )"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(self.ring.scale(&self.ring.unit_elem(), C::from_int(k)))
            }
            Some(c) if c.is_ascii_alphabetic() => self.generator(),
            _ => Err(self.error("expected a class, integer or parenthesis")),
        }
    }

    fn integer(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }

    fn generator(&mut self) -> Result<Elem<C>, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_'
                || self.chars[self.pos] == '^')
        {
            // Stop before '^' so powers parse separately.
            if self.chars[self.pos] == '^' {
                break;
            }
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        if name.is_empty() {
            return Err(self.error("expected a class name"));
        }
        if self.peek() == Some('[') {
            self.bump();
            let slot = self.integer()? as usize;
            if self.bump() != Some(']') {
                return Err(self.error("expected ]"));
            }
            let factors = self
                .ring
                .tensor_factors()
                .ok_or_else(|| self.error("slot notation requires a tensor ring"))?;
            if slot == 0 || slot > factors.len() {
                return Err(self.error(format!("slot {slot} out of range")));
            }
            let base = &factors[slot - 1];
            let elem = base.named(&name)?;
            Ok(include_in_slot(self.ring, slot - 1, &elem))
        } else {
            self.ring.named(&name)
        }
    }
}
