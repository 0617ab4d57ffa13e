//! Expression parser for the session grammar:
//!
//! ```text
//! expr   := ('-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | 't' | 'x' | name | 'exp' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Everything is exact: rationals are `p` or `p/q` (decimal literals are
//! accepted and converted exactly), `t` is the field generator, and the
//! argument of `exp` must be a K-linear form in x with zero constant term.

use num_traits::{One, Zero};
use rittlab::numberfield::{FieldDesc, FieldElement};
use rittlab::polyalg::Poly;
use rittlab::scalar::Scalar;
use rittlab::{ExpPoly, Int, KPoly, Rat};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
pub enum ParseError {
    Syntax { pos: usize, detail: String },
    ExponentNotAffine { pos: usize },
    UnknownSymbol { pos: usize, name: String },
    MixedFields,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, detail } => {
                write!(f, "syntax error at {}: {}", pos, detail)
            }
            ParseError::ExponentNotAffine { pos } => write!(
                f,
                "exponent at {} is not a K-linear form in x (with zero constant term)",
                pos
            ),
            ParseError::UnknownSymbol { pos, name } => {
                write!(f, "unknown symbol `{}` at {}", name, pos)
            }
            ParseError::MixedFields => write!(f, "expression mixes distinct fields"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut value: Rat;
                if i < bytes.len() && bytes[i] == b'.' {
                    // decimal literal, exact conversion
                    let int_part = &src[start..i];
                    i += 1;
                    let fstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let frac = &src[fstart..i];
                    if frac.is_empty() {
                        return Err(ParseError::Syntax {
                            pos: i,
                            detail: "digits expected after decimal point".into(),
                        });
                    }
                    let num: Int = format!("{}{}", int_part, frac).parse().unwrap();
                    let den = Int::from(10u32).pow(frac.len() as u32);
                    value = Rat::new(num, den);
                } else if i < bytes.len() && bytes[i] == b'/' {
                    // p/q only when the slash is followed by a digit
                    if i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                        let p: Int = src[start..i].parse().unwrap();
                        i += 1;
                        let qstart = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        let q: Int = src[qstart..i].parse().unwrap();
                        if q.is_zero() {
                            return Err(ParseError::Syntax {
                                pos: qstart,
                                detail: "zero denominator".into(),
                            });
                        }
                        value = Rat::new(p, q);
                    } else {
                        return Err(ParseError::Syntax {
                            pos: i,
                            detail: "digits expected after /".into(),
                        });
                    }
                } else {
                    value = Rat::from_integer(src[start..i].parse().unwrap());
                }
                out.push((start, Tok::Num(value)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    detail: format!("unexpected character `{}`", c),
                })
            }
        }
    }
    Ok(out)
}

pub struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    field: &'a Arc<FieldDesc>,
    bindings: &'a BTreeMap<String, ExpPoly>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        let pos = self.here();
        match self.next() {
            Some(x) if x == t => Ok(()),
            other => Err(ParseError::Syntax {
                pos,
                detail: format!("expected {:?}, found {:?}", t, other),
            }),
        }
    }

    fn expr(&mut self) -> Result<ExpPoly, ParseError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).map_err(|_| ParseError::MixedFields)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).map_err(|_| ParseError::MixedFields)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ExpPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs).map_err(|_| ParseError::MixedFields)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ExpPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let pos = self.here();
            match self.next() {
                Some(Tok::Num(n)) if n.denom().is_one() && n >= Rat::zero() => {
                    let e: u32 = n.numer().try_into().map_err(|_| ParseError::Syntax {
                        pos,
                        detail: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::Syntax {
                    pos,
                    detail: "a natural number exponent is required after ^".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<ExpPoly, ParseError> {
        let pos = self.here();
        match self.next() {
            Some(Tok::Num(r)) => Ok(ExpPoly::constant(
                FieldElement::from_rat_value(r).promote(self.field),
            )),
            Some(Tok::Minus) => {
                // unary minus inside a term, e.g. 2 * -3
                Ok(self.atom()?.neg())
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "t" => Ok(ExpPoly::constant(FieldElement::generator(self.field))),
                "x" => Ok(ExpPoly::x().mul(&one_in(self.field)).unwrap()),
                "exp" => {
                    self.expect(Tok::LParen)?;
                    let inner_pos = self.here();
                    let inner = self.expr()?;
                    self.expect(Tok::RParen)?;
                    self.exp_of(inner, inner_pos)
                }
                _ => match self.bindings.get(&name) {
                    Some(f) => Ok(f.clone()),
                    None => Err(ParseError::UnknownSymbol { pos, name }),
                },
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(ParseError::Syntax {
                pos,
                detail: format!("expected an atom, found {:?}", other),
            }),
        }
    }

    /// `exp(c1 * x)` for a K-scalar `c1`: the inner expression must be a
    /// K-linear form in x with zero constant term, so that the result
    /// stays in the ring of exponential polynomials.
    fn exp_of(&self, inner: ExpPoly, pos: usize) -> Result<ExpPoly, ParseError> {
        let not_affine = || ParseError::ExponentNotAffine { pos };
        if inner.is_zero() {
            return Ok(ExpPoly::one().mul(&one_in(self.field)).unwrap());
        }
        if inner.num_terms() != 1 {
            return Err(not_affine());
        }
        let (beta, poly) = inner.terms().next().unwrap();
        if !beta.is_zero() || poly.deg() > 1 {
            return Err(not_affine());
        }
        if !poly.coeff(0).is_zero() {
            // exp of a nonzero algebraic constant is transcendental
            return Err(not_affine());
        }
        let c1 = poly.coeff(1);
        Ok(ExpPoly::exp_term(c1, KPoly::one())
            .mul(&one_in(self.field))
            .unwrap())
    }
}

fn one_in(field: &Arc<FieldDesc>) -> ExpPoly {
    ExpPoly::constant(FieldElement::one().promote(field))
}

/// Parse an expression over the session field.
pub fn parse_expression(
    src: &str,
    field: &Arc<FieldDesc>,
    bindings: &BTreeMap<String, ExpPoly>,
) -> Result<ExpPoly, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        bindings,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Syntax {
            pos: p.here(),
            detail: "trailing input".into(),
        });
    }
    Ok(e)
}

/// Parse a field element: an expression with no x and no exp.
pub fn parse_scalar(
    src: &str,
    field: &Arc<FieldDesc>,
) -> Result<FieldElement, ParseError> {
    let none = BTreeMap::new();
    let e = parse_expression(src, field, &none)?;
    if e.is_zero() {
        return Ok(FieldElement::zero().promote(field));
    }
    if e.num_terms() != 1 {
        return Err(ParseError::Syntax {
            pos: 0,
            detail: "a scalar expression is required".into(),
        });
    }
    let (beta, poly) = e.terms().next().unwrap();
    if !beta.is_zero() || !poly.is_constant() {
        return Err(ParseError::Syntax {
            pos: 0,
            detail: "a scalar expression is required".into(),
        });
    }
    Ok(poly.constant_term())
}

/// Parse a field declaration: `field Q(t) where <minpoly in t> = 0 near
/// <complex literal>`, or the bare `<minpoly> = 0 near <literal>` form,
/// or one of the named shortcuts.
pub fn parse_field(src: &str) -> Result<Arc<FieldDesc>, String> {
    let s = src.trim();
    match s {
        "rationals" | "Q" => return Ok(FieldDesc::rationals()),
        "gaussian" | "Q(i)" => return Ok(FieldDesc::gaussian()),
        "sqrt2" => return Ok(FieldDesc::sqrt2()),
        "zeta8" => return Ok(FieldDesc::zeta8()),
        "zeta12" => return Ok(FieldDesc::zeta12()),
        _ => {}
    }
    let mut body = s;
    if let Some(rest) = body.strip_prefix("field") {
        body = rest.trim_start();
        // accept and discard the `Q(t) where` introduction
        if let Some(ix) = body.find("where") {
            body = body[ix + 5..].trim_start();
        }
    }
    let (poly_part, near_part) = body
        .split_once("near")
        .ok_or_else(|| "field declaration needs `near <point>`".to_string())?;
    let poly_part = poly_part.trim();
    let poly_src = poly_part
        .strip_suffix("= 0")
        .or_else(|| poly_part.strip_suffix("=0"))
        .unwrap_or(poly_part)
        .trim();
    let rationals = FieldDesc::rationals();
    let none = BTreeMap::new();
    // parse the minimal polynomial over Q, with t as the variable: reuse
    // the expression parser by substituting x for t
    let swapped: String = poly_src
        .chars()
        .map(|c| match c {
            't' => 'x',
            'x' => return '?',
            other => other,
        })
        .collect();
    let e = parse_expression(&swapped, &rationals, &none)
        .map_err(|err| format!("bad minimal polynomial: {}", err))?;
    if e.num_terms() > 1 || e.exponents().iter().any(|b| !b.is_zero()) {
        return Err("minimal polynomial must be a polynomial in t".to_string());
    }
    let kp = e.coeff_of(&FieldElement::zero());
    let mut coeffs = Vec::with_capacity(kp.coeffs().len());
    for c in kp.coeffs() {
        coeffs.push(
            c.to_rat()
                .ok_or_else(|| "minimal polynomial must have rational coefficients".to_string())?,
        );
    }
    let minpoly: Poly<Rat> = Poly::from_coeffs(coeffs);
    let (re, im) = parse_complex_literal(near_part.trim())?;
    let quarter = rittlab::rat(1, 4);
    let rect = rittlab::dyadic::Rectangle::new(
        &re - &quarter,
        &re + &quarter,
        &im - &quarter,
        &im + &quarter,
    );
    FieldDesc::create(minpoly, rect).map_err(|e| e.to_string())
}

/// `a`, `bi`, `a+bi`, `a-bi` with decimal or rational parts.
fn parse_complex_literal(s: &str) -> Result<(Rat, Rat), String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || format!("bad complex literal `{}`", s);
    let parse_rat = |txt: &str| -> Result<Rat, String> {
        let txt = txt.trim();
        let (sign, txt) = match txt.strip_prefix('-') {
            Some(rest) => (-Rat::one(), rest),
            None => (Rat::one(), txt),
        };
        let body = if txt.is_empty() { "1" } else { txt };
        if let Some((ip, fp)) = body.split_once('.') {
            let ip = if ip.is_empty() { "0" } else { ip };
            let num: Int = format!("{}{}", ip, fp).parse().map_err(|_| err())?;
            let den = Int::from(10u32).pow(fp.len() as u32);
            Ok(sign * Rat::new(num, den))
        } else if let Some((p, q)) = body.split_once('/') {
            let p: Int = p.parse().map_err(|_| err())?;
            let q: Int = q.parse().map_err(|_| err())?;
            Ok(sign * Rat::new(p, q))
        } else {
            let p: Int = body.parse().map_err(|_| err())?;
            Ok(sign * Rat::from_integer(p))
        }
    };
    if let Some(body) = s.strip_suffix('i') {
        // forms: bi, a+bi, a-bi
        // find the split point: the last +/- that is not leading
        let chars: Vec<char> = body.chars().collect();
        let mut split = None;
        for k in (1..chars.len()).rev() {
            if chars[k] == '+' || chars[k] == '-' {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re = parse_rat(&body[..k])?;
                let sign = if chars[k] == '-' { -Rat::one() } else { Rat::one() };
                let im = parse_rat(&body[k + 1..])?;
                Ok((re, sign * im))
            }
            None => Ok((Rat::zero(), parse_rat(body)?)),
        }
    } else {
        Ok((parse_rat(&s)?, Rat::zero()))
    }
}
