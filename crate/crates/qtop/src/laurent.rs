//! Sparse Laurent polynomials over exact coefficient rings.
//!
//! Every polynomial carries a variable tag (`"A"`, `"s"`, `"hbar"`, ...).
//! Arithmetic between polynomials with different tags is refused instead of
//! silently mixing incompatible gradings. Coefficients are exact; floating
//! point enters only through [`LaurentPoly::eval_root_of_unity`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact complex numbers with rational real and imaginary parts.
pub type GaussRational = num::complex::Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable tag mismatch: `{left}` vs `{right}`")]
    VarMismatch { left: String, right: String },
    #[error("exponent {exp} is odd; even-exponent reindexing does not apply")]
    OddExponent { exp: i64 },
    #[error("root-of-unity denominator must be nonzero")]
    ZeroDenominator,
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error("malformed coefficient `{0}`")]
    Coeff(String),
}

/// Coefficient ring interface: exact arithmetic plus the canonical string
/// form used in JSON term lists.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Numeric image, used by root-of-unity evaluation.
    fn to_complex(&self) -> Complex64;
    fn coeff_str(&self) -> String;
    fn parse_coeff(s: &str) -> Result<Self, LaurentError>;
    /// `(true, |c|)` when the coefficient prints with a leading minus.
    fn display_sign(&self) -> (bool, Self);
}

impl CoeffRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn coeff_str(&self) -> String {
        self.to_string()
    }
    fn parse_coeff(s: &str) -> Result<Self, LaurentError> {
        BigInt::from_str(s).map_err(|_| LaurentError::Coeff(s.to_string()))
    }
    fn display_sign(&self) -> (bool, Self) {
        if *self < Zero::zero() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
}

impl CoeffRing for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn coeff_str(&self) -> String {
        self.to_string()
    }
    fn parse_coeff(s: &str) -> Result<Self, LaurentError> {
        BigRational::from_str(s).map_err(|_| LaurentError::Coeff(s.to_string()))
    }
    fn display_sign(&self) -> (bool, Self) {
        if *self < Zero::zero() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
}

impl CoeffRing for GaussRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn coeff_str(&self) -> String {
        if Zero::is_zero(self) {
            return "0".to_string();
        }
        let mut out = String::new();
        if !Zero::is_zero(&self.re) {
            out.push_str(&self.re.to_string());
        }
        if !Zero::is_zero(&self.im) {
            let neg = self.im < Zero::zero();
            let mag = if neg { -&self.im } else { self.im.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if !One::is_one(&mag) {
                out.push_str(&mag.to_string());
            }
            out.push('i');
        }
        out
    }
    fn parse_coeff(s: &str) -> Result<Self, LaurentError> {
        let bad = || LaurentError::Coeff(s.to_string());
        let rat = |t: &str| BigRational::from_str(t).map_err(|_| bad());
        let imag = |t: &str| -> Result<BigRational, LaurentError> {
            match t {
                "" | "+" => Ok(<BigRational as One>::one()),
                "-" => Ok(-<BigRational as One>::one()),
                _ => rat(t),
            }
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        if let Some(head) = s.strip_suffix('i') {
            // Either pure imaginary or "re±imi"; the split sign can only
            // appear past the leading character.
            if let Some(pos) = head.get(1..).and_then(|t| t.rfind(['+', '-'])).map(|p| p + 1) {
                let (re_str, im_str) = head.split_at(pos);
                let sign = if im_str.starts_with('-') {
                    -<BigRational as One>::one()
                } else {
                    <BigRational as One>::one()
                };
                return Ok(GaussRational::new(rat(re_str)?, sign * imag(&im_str[1..])?));
            }
            return Ok(GaussRational::new(<BigRational as Zero>::zero(), imag(head)?));
        }
        Ok(GaussRational::new(rat(s)?, <BigRational as Zero>::zero()))
    }
    fn display_sign(&self) -> (bool, Self) {
        let neg = self.re < Zero::zero() || (Zero::is_zero(&self.re) && self.im < Zero::zero());
        if neg {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
}

/// Laurent polynomial with a variable tag; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<C: CoeffRing> {
    var: String,
    terms: BTreeMap<i64, C>,
}

#[derive(Serialize)]
struct PolyJsonRef<'a> {
    var: &'a str,
    terms: Vec<(i64, String)>,
}

#[derive(Deserialize)]
struct PolyJsonOwned {
    var: String,
    terms: Vec<(i64, String)>,
}

impl<C: CoeffRing> LaurentPoly<C> {
    pub fn zero(var: &str) -> Self {
        LaurentPoly {
            var: var.to_string(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: &str) -> Self {
        Self::monomial(var, 0, C::one())
    }

    pub fn constant(var: &str, c: C) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: &str, exp: i64, c: C) -> Self {
        let mut p = Self::zero(var);
        p.accumulate(exp, c);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(var: &str, terms: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.accumulate(e, c);
        }
        p
    }

    fn accumulate(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&exp) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(exp, merged);
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    fn same_var(&self, rhs: &Self) -> Result<(), LaurentError> {
        if self.var == rhs.var {
            Ok(())
        } else {
            Err(LaurentError::VarMismatch {
                left: self.var.clone(),
                right: rhs.var.clone(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, LaurentError> {
        self.same_var(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.accumulate(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&rhs.neg())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LaurentError> {
        self.same_var(rhs)?;
        let mut out = Self::zero(&self.var);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.accumulate(ea + eb, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.var);
        for (e, t) in &self.terms {
            out.accumulate(*e, t.mul(c));
        }
        out
    }

    /// Multiplies by a bare power of the variable.
    pub fn shift(&self, exp: i64) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(e, c)| (e + exp, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.var);
        for _ in 0..n {
            out = out.checked_mul(self).expect("same variable");
        }
        out
    }

    /// Substitutes the variable by its inverse (negates every exponent).
    pub fn invert_var(&self) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitution `new^(-m)` for each term `old^(2m)`; every exponent must
    /// be even. Used to pass from the framing variable to its inverse square.
    pub fn reindex_even(&self, new_var: &str) -> Result<Self, LaurentError> {
        let mut out = Self::zero(new_var);
        for (e, c) in &self.terms {
            if e % 2 != 0 {
                return Err(LaurentError::OddExponent { exp: *e });
            }
            out.accumulate(-e / 2, c.clone());
        }
        Ok(out)
    }

    /// Evaluates at `exp(2*pi*i*num/den)`. The exponent arithmetic is reduced
    /// modulo `den` before touching floating point.
    pub fn eval_root_of_unity(&self, num: i64, den: i64) -> Result<Complex64, LaurentError> {
        if den == 0 {
            return Err(LaurentError::ZeroDenominator);
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let r = (num as i128 * *e as i128).rem_euclid(den as i128);
            let theta = std::f64::consts::TAU * (r as f64) / (den as f64);
            acc += c.to_complex() * Complex64::new(theta.cos(), theta.sin());
        }
        Ok(acc)
    }

    /// `{"var": ..., "terms": [[exp, "coeff"], ...]}` with ascending exponents.
    pub fn to_json_string(&self) -> String {
        let doc = PolyJsonRef {
            var: &self.var,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.coeff_str()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("poly JSON never fails to serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self, LaurentError> {
        let doc: PolyJsonOwned =
            serde_json::from_str(s).map_err(|e| LaurentError::Json(e.to_string()))?;
        let mut out = Self::zero(&doc.var);
        for (e, c) in &doc.terms {
            if out.terms.contains_key(e) {
                return Err(LaurentError::Json(format!("duplicate exponent {e}")));
            }
            out.accumulate(*e, C::parse_coeff(c)?);
        }
        Ok(out)
    }
}

impl<C: CoeffRing> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.display_sign();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let ms = mag.coeff_str();
            if *e == 0 {
                write!(f, "{ms}")?;
                continue;
            }
            if ms != "1" {
                if ms[1..].contains(['+', '-']) {
                    write!(f, "({ms})*")?;
                } else {
                    write!(f, "{ms}*")?;
                }
            }
            write!(f, "{}", self.var)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial with integer coefficients; the common case for link
/// invariants.
pub type IntLaurent = LaurentPoly<BigInt>;

pub fn int_poly(var: &str, terms: &[(i64, i64)]) -> IntLaurent {
    LaurentPoly::from_terms(var, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}
