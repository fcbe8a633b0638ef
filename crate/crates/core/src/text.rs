//! Text grammars for every value type, shared with the command-line front end.
//!
//! Each printer in the crate emits a form accepted by the matching parser
//! here. Arithmetic expressions (`Poly`, `CElement`, `WeylElem`, group-ring
//! expressions) share one recursive-descent grammar:
//!
//! ```text
//! expr   := signed (('+' | '-') signed)*
//! signed := '-' signed | ['+'] term
//! term   := factor (('*' factor) | ('/' integer))*
//! factor := atom ['^' integer]
//! atom   := integer | '(' expr ')' | ring-specific identifier
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cideal::GradedIdeal;
use crate::cmod::{Module, ProjMod, SimpleMod};
use crate::cring::{AlmostAut, CElement};
use crate::error::{Error, ParseError, Result};
use crate::foundation::{FinSet, Isometry, Poly, Rational};
use crate::k0::{k0_reduce, GroupRingExpr, K0Elem};
use crate::pic::{PicElem, PicGenerator};
use crate::weyl::{AGenerator, ASimple, BElem, PElem, WeylElem};

type PResult<T> = std::result::Result<T, ParseError>;

/// A cursor over the input with byte positions for error reporting.
pub struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    /// Next non-space character, not consumed.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Next character with no whitespace skipping.
    fn peek_raw(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    /// An identifier made of ASCII letters, or `None` without consuming.
    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return None;
        }
        let word = &self.rest()[..len];
        self.pos += len;
        Some(word)
    }

    fn digits(&mut self) -> PResult<&'a str> {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        let d = &self.rest()[..len];
        self.pos += len;
        Ok(d)
    }

    pub fn unsigned_big(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits()?;
        d.parse()
            .map_err(|_| ParseError::new(start, "malformed integer"))
    }

    pub fn integer(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-') || {
            self.eat('+');
            false
        };
        self.skip_ws();
        let d = self.digits()?;
        let text = if neg { format!("-{d}") } else { d.to_string() };
        text.parse()
            .map_err(|_| ParseError::new(start, "integer out of range"))
    }

    /// `p` or `p/q` with an optional sign.
    pub fn rational(&mut self) -> PResult<Rational> {
        self.skip_ws();
        let neg = self.eat('-') || {
            self.eat('+');
            false
        };
        let n = self.unsigned_big()?;
        let value = if self.eat('/') {
            let at = self.position();
            let d = self.unsigned_big()?;
            if d.is_zero() {
                return Err(ParseError::new(at, "division by zero"));
            }
            Rational::new(n, d)
        } else {
            Rational::from_integer(n)
        };
        Ok(if neg { -value } else { value })
    }

    /// `{a,b,...}`; duplicates are rejected.
    pub fn finset(&mut self) -> PResult<FinSet> {
        self.expect('{')?;
        let mut elems = Vec::new();
        if !self.eat('}') {
            loop {
                let at = self.position();
                let n = self.integer()?;
                if elems.contains(&n) {
                    return Err(ParseError::new(at, format!("repeated element {n}")));
                }
                elems.push(n);
                if self.eat('}') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(FinSet::from_iter_unsorted(elems))
    }

    /// `n->εn+d`, with the right side any affine expression in `n`.
    pub fn isometry(&mut self) -> PResult<Isometry> {
        if !(self.eat('n') && (self.eat_str("->") || self.eat('↦'))) {
            return Err(self.error("expected 'n->'"));
        }
        let start = self.position();
        let bump = |acc: i64, sign: i64, c: i64| c.checked_mul(sign).and_then(|t| acc.checked_add(t));
        let (mut eps, mut d) = (0i64, 0i64);
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -1
            } else if self.eat('+') || first {
                1
            } else {
                break;
            };
            first = false;
            let coeff = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                let c = self.integer()?;
                if self.eat('*') {
                    if !self.eat('n') {
                        return Err(self.error("expected 'n'"));
                    }
                    eps = bump(eps, sign, c).ok_or_else(|| self.error("coefficient out of range"))?;
                    continue;
                }
                if self.eat('n') {
                    eps = bump(eps, sign, c).ok_or_else(|| self.error("coefficient out of range"))?;
                    continue;
                }
                c
            } else if self.eat('n') {
                eps = bump(eps, sign, 1).ok_or_else(|| self.error("coefficient out of range"))?;
                continue;
            } else {
                return Err(self.error("expected an integer or 'n'"));
            };
            d = bump(d, sign, coeff).ok_or_else(|| self.error("shift out of range"))?;
        }
        Isometry::new(eps, d).map_err(|_| ParseError::new(start, "coefficient of n must be 1 or -1"))
    }

    /// An arithmetic expression over `R`.
    pub fn expr<R: ExprRing>(&mut self) -> PResult<R> {
        let mut acc = self.signed_term::<R>()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.signed_term::<R>()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.signed_term::<R>()?);
            } else {
                return Ok(acc);
            }
        }
    }

    /// A term with optional leading signs, so `a + -b` and `a - -b` parse.
    fn signed_term<R: ExprRing>(&mut self) -> PResult<R> {
        if self.eat('-') {
            Ok(self.signed_term::<R>()?.neg())
        } else {
            self.eat('+');
            self.term::<R>()
        }
    }

    fn term<R: ExprRing>(&mut self) -> PResult<R> {
        let mut acc = self.factor::<R>()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor::<R>()?);
            } else if self.eat('/') {
                let at = self.position();
                let d = self.unsigned_big()?;
                if d.is_zero() {
                    return Err(ParseError::new(at, "division by zero"));
                }
                acc = acc
                    .scale(&Rational::new(BigInt::one(), d))
                    .map_err(|m| ParseError::new(at, m))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<R: ExprRing>(&mut self) -> PResult<R> {
        let base = self.atom::<R>()?;
        if self.eat('^') {
            let at = self.position();
            let e = self.integer()?;
            let e = u32::try_from(e)
                .ok()
                .filter(|e| *e <= 4096)
                .ok_or_else(|| ParseError::new(at, "exponent must be in 0..=4096"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom<R: ExprRing>(&mut self) -> PResult<R> {
        if self.eat('(') {
            let inner = self.expr::<R>()?;
            self.expect(')')?;
            return Ok(inner);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.position();
                let n = self.unsigned_big()?;
                R::from_integer(n).map_err(|m| ParseError::new(at, m))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.position();
                let name = self.ident().expect("alphabetic");
                R::named_atom(name, at, self)
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// A ring whose elements can be written in the shared expression grammar.
pub trait ExprRing: Sized {
    fn from_integer(n: BigInt) -> std::result::Result<Self, String>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Self;
    /// Multiplication by `1/d`.
    fn scale(&self, r: &Rational) -> std::result::Result<Self, String>;
    /// Resolves an identifier such as `z` or `x`; may consume further input.
    fn named_atom(name: &str, at: usize, p: &mut Parser<'_>) -> PResult<Self>;
}

macro_rules! ring_ops {
    () => {
        fn add(&self, other: &Self) -> Self {
            self + other
        }
        fn sub(&self, other: &Self) -> Self {
            self - other
        }
        fn mul(&self, other: &Self) -> Self {
            self * other
        }
        fn neg(&self) -> Self {
            -self
        }
    };
}

fn unknown(name: &str, at: usize) -> ParseError {
    ParseError::new(at, format!("unknown symbol '{name}'"))
}

impl ExprRing for Poly {
    fn from_integer(n: BigInt) -> std::result::Result<Self, String> {
        Ok(Poly::constant(Rational::from_integer(n)))
    }
    ring_ops!();
    fn pow(&self, e: u32) -> Self {
        Poly::pow(self, e)
    }
    fn scale(&self, r: &Rational) -> std::result::Result<Self, String> {
        Ok(Poly::scale(self, r))
    }
    fn named_atom(name: &str, at: usize, _: &mut Parser<'_>) -> PResult<Self> {
        match name {
            "z" => Ok(Poly::z()),
            _ => Err(unknown(name, at)),
        }
    }
}

impl ExprRing for CElement {
    fn from_integer(n: BigInt) -> std::result::Result<Self, String> {
        Ok(CElement::from_poly(Poly::constant(Rational::from_integer(n))))
    }
    ring_ops!();
    fn pow(&self, e: u32) -> Self {
        CElement::pow(self, e)
    }
    fn scale(&self, r: &Rational) -> std::result::Result<Self, String> {
        Ok(CElement::scale(self, r))
    }
    fn named_atom(name: &str, at: usize, p: &mut Parser<'_>) -> PResult<Self> {
        match name {
            "z" => Ok(CElement::from_poly(Poly::z())),
            "x" => Ok(CElement::x_set(&p.finset()?)),
            _ => Err(unknown(name, at)),
        }
    }
}

impl ExprRing for WeylElem {
    fn from_integer(n: BigInt) -> std::result::Result<Self, String> {
        Ok(WeylElem::constant(Rational::from_integer(n)))
    }
    ring_ops!();
    fn pow(&self, e: u32) -> Self {
        WeylElem::pow(self, e)
    }
    fn scale(&self, r: &Rational) -> std::result::Result<Self, String> {
        Ok(WeylElem::scale(self, r))
    }
    fn named_atom(name: &str, at: usize, _: &mut Parser<'_>) -> PResult<Self> {
        match name {
            "x" => Ok(WeylElem::x()),
            "y" => Ok(WeylElem::y()),
            "z" => Ok(WeylElem::z()),
            _ => Err(unknown(name, at)),
        }
    }
}

impl ExprRing for GroupRingExpr {
    fn from_integer(n: BigInt) -> std::result::Result<Self, String> {
        Ok(GroupRingExpr::term(n, FinSet::empty()))
    }
    ring_ops!();
    fn pow(&self, e: u32) -> Self {
        (0..e).fold(GroupRingExpr::u(FinSet::empty()), |acc, _| &acc * self)
    }
    fn scale(&self, _: &Rational) -> std::result::Result<Self, String> {
        Err("group-ring coefficients are integers".into())
    }
    fn named_atom(name: &str, at: usize, p: &mut Parser<'_>) -> PResult<Self> {
        if name != "u" {
            return Err(unknown(name, at));
        }
        match p.peek_raw() {
            Some('{') => Ok(GroupRingExpr::u(p.finset()?)),
            Some(c) if c.is_ascii_digit() => {
                let n = p.integer()?;
                Ok(GroupRingExpr::u(FinSet::singleton(n)))
            }
            _ => Err(p.error("expected '{' or an index after 'u'")),
        }
    }
}

fn whole<T>(s: &str, f: impl FnOnce(&mut Parser<'_>) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(s);
    let v = f(&mut p)?;
    p.finish()?;
    Ok(v)
}

impl FromStr for FinSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| Ok(p.finset()?))
    }
}

impl FromStr for Isometry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| Ok(p.isometry()?))
    }
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| Ok(p.expr::<Poly>()?))
    }
}

impl FromStr for CElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| Ok(p.expr::<CElement>()?))
    }
}

impl FromStr for WeylElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| Ok(p.expr::<WeylElem>()?))
    }
}

impl FromStr for GroupRingExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| Ok(p.expr::<GroupRingExpr>()?))
    }
}

impl FromStr for K0Elem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(k0_reduce(&s.parse::<GroupRingExpr>()?))
    }
}

/// A homogeneous element `f·x_J`, returned as `(f, J)`; zero yields `None`.
pub fn parse_homogeneous(s: &str) -> Result<Option<(Poly, FinSet)>> {
    let c: CElement = s.parse()?;
    if c.is_zero() {
        return Ok(None);
    }
    let j = c.is_homogeneous().ok_or(Error::NotHomogeneous)?;
    Ok(Some((c.component(&j), j)))
}

/// `;`-separated homogeneous generators.
pub fn parse_generators(s: &str) -> Result<Vec<(Poly, FinSet)>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in s.split(';') {
        let parsed = parse_homogeneous(piece).map_err(|e| match e {
            Error::Parse(pe) => Error::Parse(ParseError::new(pe.position + offset, pe.message)),
            other => other,
        })?;
        out.extend(parsed);
        offset += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for GradedIdeal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match parse_homogeneous(s)? {
            None => Ok(GradedIdeal::Zero),
            Some((d, j)) => GradedIdeal::principal(d, j),
        }
    }
}

fn simple_body(p: &mut Parser<'_>, kind: &str, at: usize) -> Result<SimpleMod> {
    p.expect('(')?;
    let s = match kind {
        "X" => SimpleMod::X(p.integer()?),
        "Y" => SimpleMod::Y(p.integer()?),
        "O" => SimpleMod::ordinary(p.rational()?)?,
        _ => return Err(unknown(kind, at).into()),
    };
    p.expect(')')?;
    Ok(s)
}

impl FromStr for SimpleMod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            let at = p.position();
            let kind = p.ident().ok_or_else(|| p.error("expected X, Y or O"))?;
            simple_body(p, kind, at)
        })
    }
}

impl FromStr for ASimple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<SimpleMod>() {
            Ok(SimpleMod::X(n)) => Ok(ASimple::X(n)),
            Ok(SimpleMod::Y(n)) => Ok(ASimple::Y(n)),
            Ok(SimpleMod::O(_)) | Err(Error::InvalidArgument(_)) => Err(ParseError::new(
                0,
                "graded A-module simples are X(n) or Y(n)",
            )
            .into()),
            Err(e) => Err(e),
        }
    }
}

/// Summands `C{I}`, `X(n)`, `Y(n)`, `O(λ)` joined by `+` or `⊕`, or `0`.
impl FromStr for Module {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            if p.eat('0') {
                return Ok(Module::zero());
            }
            let mut twists = Vec::new();
            let mut simples = Vec::new();
            loop {
                let at = p.position();
                match p.ident() {
                    Some("C") => twists.push(p.finset()?),
                    Some(kind) => simples.push(simple_body(p, kind, at)?),
                    None => return Err(p.error("expected a summand").into()),
                }
                if !(p.eat('+') || p.eat('⊕')) {
                    break;
                }
            }
            Ok(Module::new(ProjMod::new(twists), simples))
        })
    }
}

impl FromStr for ProjMod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let m: Module = s.parse()?;
        m.as_projective()
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("{m} is not projective")))
    }
}

const MAX_PIC_POWER: u64 = 1 << 16;

fn pic_atom(p: &mut Parser<'_>) -> Result<PicElem> {
    if p.eat('(') {
        let j = p.finset()?;
        p.expect(',')?;
        let h = p.isometry()?;
        p.expect(')')?;
        return Ok(PicElem::new(j, h));
    }
    let at = p.position();
    let base = match p.ident() {
        Some("tau") => PicElem::tau(),
        Some("phi") => PicElem::phi(),
        Some("id") => PicElem::identity(),
        Some("twist") => PicElem::twist_by(p.finset()?),
        Some(other) => return Err(unknown(other, at).into()),
        None => return Err(p.error("expected a Picard element").into()),
    };
    if p.eat('^') {
        let at = p.position();
        let e = p.integer()?;
        if e.unsigned_abs() > MAX_PIC_POWER {
            return Err(ParseError::new(at, format!("exponent exceeds {MAX_PIC_POWER}")).into());
        }
        let step = if e < 0 { base.invert()? } else { base };
        let mut acc = PicElem::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&step)?;
        }
        return Ok(acc);
    }
    Ok(base)
}

/// Products `F1 * F2 * ...` of `(J,h)`, `tau`, `phi`, `twist{J}` and `id`,
/// where `F1 * F2` applies `F2` first.
impl FromStr for PicElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            let mut acc = pic_atom(p)?;
            while p.eat('*') || p.eat('∘') {
                acc = acc.compose(&pic_atom(p)?)?;
            }
            Ok(acc)
        })
    }
}

impl FromStr for PicGenerator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            let at = p.position();
            match p.ident() {
                Some("tau") => Ok(PicGenerator::Tau),
                Some("phi") => Ok(PicGenerator::Phi),
                Some("twist") => Ok(PicGenerator::Twist(p.finset()?)),
                _ => Err(ParseError::new(at, "expected tau, phi or twist{J}").into()),
            }
        })
    }
}

/// Products of `tau`, `tau^k`, `phi` and `id`, composed right to left.
impl FromStr for AlmostAut {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            let mut acc = AlmostAut::identity();
            loop {
                let at = p.position();
                let letter = match p.ident() {
                    Some("tau") => {
                        let e = if p.eat('^') { p.integer()? } else { 1 };
                        AlmostAut::tau_pow(e)
                    }
                    Some("phi") => AlmostAut::phi(),
                    Some("id") => AlmostAut::identity(),
                    _ => return Err(ParseError::new(at, "expected tau, phi or id").into()),
                };
                acc = acc.compose(&letter);
                if !p.eat('*') {
                    return Ok(acc);
                }
            }
        })
    }
}

/// The letters `shift(k)`, `iota{J}` and `sigma`.
impl FromStr for AGenerator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            let at = p.position();
            match p.ident() {
                Some("shift") => {
                    p.expect('(')?;
                    let k = p.integer()?;
                    p.expect(')')?;
                    Ok(AGenerator::Shift(k))
                }
                Some("iota") => Ok(AGenerator::Iota(p.finset()?)),
                Some("sigma") => Ok(AGenerator::Sigma),
                _ => Err(ParseError::new(at, "expected shift(k), iota{J} or sigma").into()),
            }
        })
    }
}

/// `(f)@{J}`; the divisibility `h_J | f` is checked.
impl FromStr for BElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            let f = p.expr::<Poly>()?;
            p.expect('@')?;
            let j = p.finset()?;
            BElem::new(f, j)
        })
    }
}

/// Sums of `e[n]` or `e[n]*(c)` with `c` a `C`-element.
impl FromStr for PElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        whole(s, |p| {
            if p.eat('0') {
                return Ok(PElem::zero());
            }
            let mut acc = PElem::zero();
            let mut negative = p.eat('-');
            if !negative {
                p.eat('+');
            }
            loop {
                let at = p.position();
                if p.ident() != Some("e") {
                    return Err(ParseError::new(at, "expected e[n]").into());
                }
                p.expect('[')?;
                let n = p.integer()?;
                p.expect(']')?;
                let c = if p.eat('*') {
                    p.expect('(')?;
                    let c = p.expr::<CElement>()?;
                    p.expect(')')?;
                    c
                } else {
                    CElement::one()
                };
                let t = PElem::term(n, c);
                acc = if negative { &acc - &t } else { &acc + &t };
                if p.eat('+') {
                    negative = false;
                } else if p.eat('-') {
                    negative = true;
                } else {
                    return Ok(acc);
                }
            }
        })
    }
}
