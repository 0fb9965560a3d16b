//! Exact multivariate polynomials over the Gaussian rationals extended by
//! integer powers of the formal symbol `hbar`.

use num::{BigInt, BigRational, Complex, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::GqError;
use crate::laurent::{GaussRational, LaurentPoly};

pub const HBAR_VAR: &str = "hbar";

/// Scalar domain for every coefficient in this module: Laurent polynomials
/// in `hbar` over the Gaussian rationals. `hbar` is a formal invertible
/// symbol, never a float.
pub type Hbar = LaurentPoly<GaussRational>;

pub fn gauss(re: i64, im: i64) -> GaussRational {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

pub fn hbar_zero() -> Hbar {
    LaurentPoly::zero(HBAR_VAR)
}

pub fn hbar_one() -> Hbar {
    LaurentPoly::one(HBAR_VAR)
}

pub fn hbar_int(n: i64) -> Hbar {
    LaurentPoly::constant(HBAR_VAR, gauss(n, 0))
}

pub fn hbar_gauss(c: GaussRational) -> Hbar {
    LaurentPoly::constant(HBAR_VAR, c)
}

/// The symbol iℏ.
pub fn i_hbar() -> Hbar {
    LaurentPoly::monomial(HBAR_VAR, 1, gauss(0, 1))
}

/// The symbol −iℏ.
pub fn minus_i_hbar() -> Hbar {
    i_hbar().neg()
}

fn hadd(a: &Hbar, b: &Hbar) -> Hbar {
    a.checked_add(b).expect("all scalars share the hbar tag")
}

fn hmul(a: &Hbar, b: &Hbar) -> Hbar {
    a.checked_mul(b).expect("all scalars share the hbar tag")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    /// q₁..qₙ, p₁..pₙ
    PhaseSpace,
    /// x₁..xₙ
    Position,
    /// z₁..zₙ, z̄₁..z̄ₙ
    Holomorphic,
}

/// Fixed variable alphabet shared by every polynomial in one computation.
/// Variables are addressed by a flat index; the paired kinds put the
/// "momentum-like" half (p or z̄) after the first half.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarTable {
    kind: VarKind,
    n: usize,
}

impl VarTable {
    pub fn phase_space(n: usize) -> Self {
        VarTable { kind: VarKind::PhaseSpace, n }
    }

    pub fn position(n: usize) -> Self {
        VarTable { kind: VarKind::Position, n }
    }

    pub fn holomorphic(n: usize) -> Self {
        VarTable { kind: VarKind::Holomorphic, n }
    }

    pub fn kind(self) -> VarKind {
        self.kind
    }

    /// Degrees of freedom, not the variable count.
    pub fn n(self) -> usize {
        self.n
    }

    pub fn len(self) -> usize {
        match self.kind {
            VarKind::Position => self.n,
            VarKind::PhaseSpace | VarKind::Holomorphic => 2 * self.n,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn name(self, idx: usize) -> String {
        debug_assert!(idx < self.len());
        match self.kind {
            VarKind::Position => format!("x{}", idx + 1),
            VarKind::PhaseSpace if idx < self.n => format!("q{}", idx + 1),
            VarKind::PhaseSpace => format!("p{}", idx - self.n + 1),
            VarKind::Holomorphic if idx < self.n => format!("z{}", idx + 1),
            VarKind::Holomorphic => format!("zbar{}", idx - self.n + 1),
        }
    }

    pub fn index_of(self, name: &str) -> Option<usize> {
        let split = name.find(|c: char| c.is_ascii_digit())?;
        let (prefix, digits) = name.split_at(split);
        let k: usize = digits.parse().ok()?;
        if k == 0 || k > self.n {
            return None;
        }
        let base = match (self.kind, prefix) {
            (VarKind::PhaseSpace, "q") => 0,
            (VarKind::PhaseSpace, "p") => self.n,
            (VarKind::Position, "x") => 0,
            (VarKind::Holomorphic, "z") => 0,
            (VarKind::Holomorphic, "zbar") => self.n,
            _ => return None,
        };
        Some(base + k - 1)
    }

    /// Flat index of qₖ (1-based k); phase-space tables only.
    pub fn q(self, k: usize) -> usize {
        debug_assert!(self.kind == VarKind::PhaseSpace && 1 <= k && k <= self.n);
        k - 1
    }

    /// Flat index of pₖ (1-based k); phase-space tables only.
    pub fn p(self, k: usize) -> usize {
        debug_assert!(self.kind == VarKind::PhaseSpace && 1 <= k && k <= self.n);
        self.n + k - 1
    }
}

/// Polynomial in the table's variables; zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    table: VarTable,
    terms: BTreeMap<Vec<u16>, Hbar>,
}

impl MultiPoly {
    pub fn zero(table: VarTable) -> Self {
        MultiPoly {
            table,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: VarTable, c: Hbar) -> Self {
        let mut out = Self::zero(table);
        out.insert_term(vec![0; table.len()], c);
        out
    }

    pub fn one(table: VarTable) -> Self {
        Self::constant(table, hbar_one())
    }

    pub fn var(table: VarTable, idx: usize) -> Self {
        assert!(idx < table.len(), "variable index in range");
        let mut exps = vec![0u16; table.len()];
        exps[idx] = 1;
        let mut out = Self::zero(table);
        out.insert_term(exps, hbar_one());
        out
    }

    pub fn table(&self) -> VarTable {
        self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Hbar)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|exps| exps.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, exps: Vec<u16>, c: Hbar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let merged = hadd(slot.get(), &c);
                if merged.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(merged);
                }
            }
        }
    }

    pub fn scale(&self, c: &Hbar) -> Self {
        let mut out = Self::zero(self.table);
        for (exps, coeff) in &self.terms {
            out.insert_term(exps.clone(), hmul(coeff, c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.table);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// ∂/∂(variable idx).
    pub fn partial(&self, idx: usize) -> Self {
        assert!(idx < self.table.len(), "variable index in range");
        let mut out = Self::zero(self.table);
        for (exps, coeff) in &self.terms {
            let e = exps[idx];
            if e == 0 {
                continue;
            }
            let mut lowered = exps.clone();
            lowered[idx] = e - 1;
            out.insert_term(lowered, hmul(coeff, &hbar_int(i64::from(e))));
        }
        out
    }

    /// Parses "q1^2*p1 + 3*q2" style text: terms joined by + or -, factors
    /// joined by *, each factor a rational number, `i`, `hbar`, or a table
    /// variable, optionally raised by ^ to a nonnegative integer power.
    pub fn parse(table: VarTable, text: &str) -> Result<Self, GqError> {
        let tokens = tokenize(text)?;
        Parser {
            table,
            tokens,
            pos: 0,
        }
        .poly()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.table, rhs.table, "operands share one variable table");
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.insert_term(exps.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &-rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.table);
        for (exps, coeff) in &self.terms {
            out.insert_term(exps.clone(), coeff.neg());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.table, rhs.table, "operands share one variable table");
        let mut out = MultiPoly::zero(self.table);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| x.checked_add(y).expect("degree fits in u16"))
                    .collect();
                out.insert_term(exps, hmul(ca, cb));
            }
        }
        out
    }
}

pub(super) fn monomial_string(table: VarTable, exps: &[u16]) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(table.name(idx)),
            _ => parts.push(format!("{}^{e}", table.name(idx))),
        }
    }
    parts.join("*")
}

/// Renders one signed summand and lets the caller join pieces; `body` is the
/// non-coefficient part ("" for a constant term).
pub(super) fn coefficient_piece(coeff: &Hbar, body: &str) -> String {
    let cs = coeff.to_string();
    if body.is_empty() {
        cs
    } else if *coeff == hbar_one() {
        body.to_string()
    } else if *coeff == hbar_int(-1) {
        format!("-{body}")
    } else if cs.contains(' ') {
        format!("({cs})*{body}")
    } else {
        format!("{cs}*{body}")
    }
}

pub(super) fn join_signed(pieces: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    for piece in pieces {
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self
            .terms
            .iter()
            .rev()
            .map(|(exps, coeff)| coefficient_piece(coeff, &monomial_string(self.table, exps)));
        f.write_str(&join_signed(pieces))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Num(BigRational),
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, GqError> {
    let bad = |c: char| GqError::Parse(format!("unexpected character {c:?}"));
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Tok::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Tok::Caret);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let mut denom = String::new();
                if chars.peek() == Some(&'/') {
                    chars.next();
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        denom.push(*d);
                        chars.next();
                    }
                    if denom.is_empty() {
                        return Err(GqError::Parse("missing denominator after /".into()));
                    }
                }
                let numer = BigInt::from_str(&digits).expect("ascii digits");
                let denom = if denom.is_empty() {
                    BigInt::one()
                } else {
                    BigInt::from_str(&denom).expect("ascii digits")
                };
                if denom.is_zero() {
                    return Err(GqError::Parse("zero denominator".into()));
                }
                tokens.push(Tok::Num(BigRational::new(numer, denom)));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut ident = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_alphanumeric()) {
                    ident.push(*d);
                    chars.next();
                }
                tokens.push(Tok::Ident(ident));
            }
            other => return Err(bad(other)),
        }
    }
    Ok(tokens)
}

struct Parser {
    table: VarTable,
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn poly(mut self) -> Result<MultiPoly, GqError> {
        let mut negated = false;
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            negated = true;
        }
        let mut total = self.term()?;
        if negated {
            total = -&total;
        }
        while let Some(tok) = self.peek().cloned() {
            match tok {
                Tok::Plus => {
                    self.next();
                    let t = self.term()?;
                    total = &total + &t;
                }
                Tok::Minus => {
                    self.next();
                    let t = self.term()?;
                    total = &total - &t;
                }
                _ => return Err(GqError::Parse("expected + or - between terms".into())),
            }
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<MultiPoly, GqError> {
        let mut product = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let f = self.factor()?;
            product = &product * &f;
        }
        Ok(product)
    }

    fn factor(&mut self) -> Result<MultiPoly, GqError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let e = match self.next() {
                Some(Tok::Num(r)) if r.is_integer() => {
                    let e: u32 = r
                        .to_integer()
                        .try_into()
                        .map_err(|_| GqError::Parse("exponent out of range".into()))?;
                    if e > 10_000 {
                        return Err(GqError::Parse("exponent out of range".into()));
                    }
                    e
                }
                _ => return Err(GqError::Parse("expected a nonnegative integer exponent".into())),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, GqError> {
        match self.next() {
            Some(Tok::Num(r)) => Ok(MultiPoly::constant(
                self.table,
                hbar_gauss(Complex::new(r, BigRational::zero())),
            )),
            Some(Tok::Ident(name)) => {
                if name == "i" {
                    return Ok(MultiPoly::constant(self.table, hbar_gauss(gauss(0, 1))));
                }
                if name == "hbar" {
                    return Ok(MultiPoly::constant(
                        self.table,
                        LaurentPoly::monomial(HBAR_VAR, 1, gauss(1, 0)),
                    ));
                }
                match self.table.index_of(&name) {
                    Some(idx) => Ok(MultiPoly::var(self.table, idx)),
                    None => Err(GqError::Parse(format!("unknown variable `{name}`"))),
                }
            }
            Some(tok) => Err(GqError::Parse(format!("unexpected token {tok:?}"))),
            None => Err(GqError::Parse("unexpected end of input".into())),
        }
    }
}

/// Seeded random polynomial with small Gaussian-rational coefficients and a
/// total-degree budget; shared by the property tests across this module.
#[cfg(test)]
pub(crate) fn random_poly(
    rng: &mut rand_chacha::ChaCha8Rng,
    table: VarTable,
    max_deg: u16,
) -> MultiPoly {
    use rand::Rng;
    let mut out = MultiPoly::zero(table);
    let terms = rng.random_range(0..=4);
    for _ in 0..terms {
        let mut exps = vec![0u16; table.len()];
        let mut budget = max_deg;
        for slot in exps.iter_mut() {
            let e = rng.random_range(0..=budget);
            *slot = e;
            budget -= e;
        }
        let coeff = LaurentPoly::monomial(
            HBAR_VAR,
            rng.random_range(0..=1),
            gauss(rng.random_range(-2..=2), rng.random_range(-2..=2)),
        );
        out.insert_term(exps, coeff);
    }
    out
}
