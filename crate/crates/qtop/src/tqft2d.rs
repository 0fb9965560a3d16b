//! Two-dimensional field-theory evaluation over exact rationals.
//!
//! A commutative Frobenius algebra drives a functor from the category of
//! circle cobordisms to rational vector spaces. Cobordisms are words in six
//! generators (identity, swap, cap, cup, pants, copants); evaluation stacks
//! layer matrices by multiplication and parallel pieces by Kronecker
//! product. Everything stays in `BigRational`, so the functor laws are
//! checked exactly rather than within a tolerance.

use num::{BigRational, One, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::fusion::FusionLevel;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TqftError {
    #[error("layer {layer} expects {expect} circles but receives {got}")]
    Arity { layer: usize, expect: usize, got: usize },
    #[error("cannot glue: left half ends on {left} circles, right half starts on {right}")]
    Interface { left: usize, right: usize },
    #[error("pairing matrix is singular")]
    SingularPairing,
    #[error("algebra data malformed: {0}")]
    Shape(String),
    #[error("bad rational literal {0:?}")]
    Rational(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("json: {0}")]
    Json(String),
}

fn parse_rational(text: &str) -> Result<BigRational, TqftError> {
    let bad = || TqftError::Rational(text.to_string());
    let t = text.trim();
    let (numer, denom) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let n = num::BigInt::from_str(numer).map_err(|_| bad())?;
    let d = match denom {
        Some(d) => num::BigInt::from_str(d).map_err(|_| bad())?,
        None => num::BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense row-major matrix of exact rationals. The state space of `m`
/// circles over a dimension-`d` algebra is indexed big-endian: basis state
/// (s₁,…,s_m) ↦ s₁·d^(m−1) + … + s_m.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_scalar(&self) -> bool {
        self.rows == 1 && self.cols == 1
    }

    pub fn scalar(&self) -> Option<&BigRational> {
        self.is_scalar().then(|| self.entry(0, 0))
    }

    pub fn entries_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| rational_string(self.entry(i, j))).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.entry(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(t, j);
                    if !b.is_zero() {
                        let cur = out.entry(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.entry(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.entry(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.entry(i, j).clone());
            }
        }
        out
    }

    /// Exact Gauss-Jordan inverse; `None` on a singular matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "only square matrices invert");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.entry(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.entry(col, j).clone();
                    a.set(col, j, a.entry(pivot, j).clone());
                    a.set(pivot, j, tmp);
                    let tmp = inv.entry(col, j).clone();
                    inv.set(col, j, inv.entry(pivot, j).clone());
                    inv.set(pivot, j, tmp);
                }
            }
            let scale = a.entry(col, col).recip();
            for j in 0..n {
                a.set(col, j, a.entry(col, j) * &scale);
                inv.set(col, j, inv.entry(col, j) * &scale);
            }
            for r in 0..n {
                if r == col || a.entry(r, col).is_zero() {
                    continue;
                }
                let factor = a.entry(r, col).clone();
                for j in 0..n {
                    a.set(r, j, a.entry(r, j) - &factor * a.entry(col, j));
                    inv.set(r, j, inv.entry(r, j) - &factor * inv.entry(col, j));
                }
            }
        }
        Some(inv)
    }

    /// n-fold Kronecker power; the 0th power is the 1×1 identity.
    pub fn kron_power(&self, n: usize) -> Matrix {
        let mut out = Matrix::identity(1);
        for _ in 0..n {
            out = out.kron(self);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Identity,
    Swap,
    Cap,
    Cup,
    Pants,
    Copants,
}

impl Generator {
    /// (incoming circles, outgoing circles)
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Identity => (1, 1),
            Generator::Swap => (2, 2),
            Generator::Cap => (0, 1),
            Generator::Cup => (1, 0),
            Generator::Pants => (2, 1),
            Generator::Copants => (1, 2),
        }
    }

    /// Orientation reversal: births become deaths, merges become splits.
    pub fn dual(self) -> Self {
        match self {
            Generator::Cap => Generator::Cup,
            Generator::Cup => Generator::Cap,
            Generator::Pants => Generator::Copants,
            Generator::Copants => Generator::Pants,
            g => g,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Identity => "identity",
            Generator::Swap => "swap",
            Generator::Cap => "cap",
            Generator::Cup => "cup",
            Generator::Pants => "pants",
            Generator::Copants => "copants",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, TqftError> {
        match name {
            "identity" | "id" => Ok(Generator::Identity),
            "swap" => Ok(Generator::Swap),
            "cap" => Ok(Generator::Cap),
            "cup" => Ok(Generator::Cup),
            "pants" => Ok(Generator::Pants),
            "copants" => Ok(Generator::Copants),
            other => Err(TqftError::UnknownGenerator(other.to_string())),
        }
    }
}

fn layer_arity(layer: &[Generator]) -> (usize, usize) {
    layer.iter().fold((0, 0), |(i, o), g| {
        let (gi, go) = g.arity();
        (i + gi, o + go)
    })
}

/// A cobordism between disjoint unions of circles, presented as layers of
/// parallel generators read from source to target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cobordism {
    source: usize,
    target: usize,
    layers: Vec<Vec<Generator>>,
}

impl Cobordism {
    pub fn new(source: usize, layers: Vec<Vec<Generator>>) -> Result<Self, TqftError> {
        let mut width = source;
        for (li, layer) in layers.iter().enumerate() {
            let (input, output) = layer_arity(layer);
            if input != width {
                return Err(TqftError::Arity {
                    layer: li,
                    expect: input,
                    got: width,
                });
            }
            width = output;
        }
        Ok(Cobordism {
            source,
            target: width,
            layers,
        })
    }

    pub fn identity(circles: usize) -> Self {
        Cobordism {
            source: circles,
            target: circles,
            layers: Vec::new(),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn layers(&self) -> &[Vec<Generator>] {
        &self.layers
    }

    /// `self` first, then `next`.
    pub fn compose(&self, next: &Cobordism) -> Result<Cobordism, TqftError> {
        if self.target != next.source {
            return Err(TqftError::Interface {
                left: self.target,
                right: next.source,
            });
        }
        let mut layers = self.layers.clone();
        layers.extend(next.layers.iter().cloned());
        Ok(Cobordism {
            source: self.source,
            target: next.target,
            layers,
        })
    }

    /// `self` stacked above `below`; the shorter word is padded with
    /// identity layers at its target end.
    pub fn parallel(&self, below: &Cobordism) -> Cobordism {
        let depth = self.layers.len().max(below.layers.len());
        let pad = |c: &Cobordism| {
            let mut layers = c.layers.clone();
            while layers.len() < depth {
                layers.push(vec![Generator::Identity; c.target]);
            }
            layers
        };
        let layers = pad(self)
            .into_iter()
            .zip(pad(below))
            .map(|(mut top, bottom)| {
                top.extend(bottom);
                top
            })
            .collect();
        Cobordism {
            source: self.source + below.source,
            target: self.target + below.target,
            layers,
        }
    }

    /// The same surface read target-to-source.
    pub fn reverse(&self) -> Cobordism {
        let layers = self
            .layers
            .iter()
            .rev()
            .map(|layer| layer.iter().map(|g| g.dual()).collect())
            .collect();
        Cobordism {
            source: self.target,
            target: self.source,
            layers,
        }
    }

    pub fn sphere() -> Cobordism {
        Cobordism::closed_surface(0)
    }

    pub fn torus() -> Cobordism {
        Cobordism::closed_surface(1)
    }

    /// Cap, then `genus` handles (a split followed by a merge), then cup.
    pub fn closed_surface(genus: u32) -> Cobordism {
        let mut layers = vec![vec![Generator::Cap]];
        for _ in 0..genus {
            layers.push(vec![Generator::Copants]);
            layers.push(vec![Generator::Pants]);
        }
        layers.push(vec![Generator::Cup]);
        Cobordism::new(0, layers).expect("closed-surface word is arity-correct")
    }

    /// Word-list form: an array whose items are either a generator name or
    /// an array of names making up one parallel layer, e.g.
    /// `["cap", ["copants"], ["pants"], "cup"]`.
    pub fn from_json_str(text: &str) -> Result<Cobordism, TqftError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| TqftError::Json(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| TqftError::Json("expected a top-level array".into()))?;
        let mut layers = Vec::with_capacity(items.len());
        for item in items {
            let layer = match item {
                serde_json::Value::String(name) => vec![Generator::from_name(name)?],
                serde_json::Value::Array(names) => names
                    .iter()
                    .map(|n| {
                        n.as_str()
                            .ok_or_else(|| TqftError::Json("layer items must be strings".into()))
                            .and_then(Generator::from_name)
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                _ => return Err(TqftError::Json("items must be strings or arrays".into())),
            };
            layers.push(layer);
        }
        let source = layers.first().map_or(0, |l| layer_arity(l).0);
        Cobordism::new(source, layers)
    }
}

/// Structure constants of a commutative Frobenius algebra in a fixed basis:
/// eᵢ·eⱼ = Σ_k mult[i][j][k] e_k, a unit vector, and a symmetric invertible
/// pairing. The counit is derived as ε(eᵢ) = Σⱼ pairing[i][j]·unitⱼ rather
/// than stored.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusAlgebra {
    dim: usize,
    mult: Vec<Vec<Vec<BigRational>>>,
    unit: Vec<BigRational>,
    pairing: Vec<Vec<BigRational>>,
}

/// Outcome of checking the algebra identities; empty means every identity
/// holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            f.write_str("all identities hold")
        } else {
            f.write_str(&self.violations.join("; "))
        }
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct AlgebraJson {
    dim: usize,
    mult: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
    pairing: Vec<Vec<String>>,
}

impl FrobeniusAlgebra {
    pub fn new(
        mult: Vec<Vec<Vec<BigRational>>>,
        unit: Vec<BigRational>,
        pairing: Vec<Vec<BigRational>>,
    ) -> Result<Self, TqftError> {
        let dim = unit.len();
        if dim == 0 {
            return Err(TqftError::Shape("dimension must be positive".into()));
        }
        let square = pairing.len() == dim && pairing.iter().all(|r| r.len() == dim);
        let cube = mult.len() == dim
            && mult
                .iter()
                .all(|p| p.len() == dim && p.iter().all(|r| r.len() == dim));
        if !square || !cube {
            return Err(TqftError::Shape(format!(
                "tensors do not all have dimension {dim}"
            )));
        }
        Ok(FrobeniusAlgebra {
            dim,
            mult,
            unit,
            pairing,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &[Vec<Vec<BigRational>>] {
        &self.mult
    }

    pub fn unit(&self) -> &[BigRational] {
        &self.unit
    }

    pub fn pairing(&self) -> &[Vec<BigRational>] {
        &self.pairing
    }

    /// ε(eᵢ) = Σⱼ pairing[i][j]·unitⱼ
    pub fn counit(&self) -> Vec<BigRational> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| &self.pairing[i][j] * &self.unit[j])
                    .sum()
            })
            .collect()
    }

    /// The group algebra of the two-element group: basis {e, g}, g² = e,
    /// pairing ⟨a,b⟩ = coefficient of e in a·b.
    pub fn z2_group_algebra() -> Self {
        let one = BigRational::one;
        let zero = BigRational::zero;
        let mult = vec![
            vec![vec![one(), zero()], vec![zero(), one()]],
            vec![vec![zero(), one()], vec![one(), zero()]],
        ];
        let unit = vec![one(), zero()];
        let pairing = vec![vec![one(), zero()], vec![zero(), one()]];
        FrobeniusAlgebra::new(mult, unit, pairing).expect("shapes are consistent")
    }

    /// Checks every algebra identity exactly and reports the first failure
    /// of each kind.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim;
        let mut violations = Vec::new();
        let prod = |i: usize, j: usize, k: usize| &self.mult[i][j][k];

        'unit: for j in 0..d {
            for k in 0..d {
                let got: BigRational = (0..d).map(|i| &self.unit[i] * prod(i, j, k)).sum();
                let want = if j == k {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if got != want {
                    violations.push(format!("unit law fails: unit·e{j} has e{k}-coefficient {got}"));
                    break 'unit;
                }
            }
        }

        'comm: for i in 0..d {
            for j in 0..i {
                for k in 0..d {
                    if prod(i, j, k) != prod(j, i, k) {
                        violations
                            .push(format!("multiplication not commutative at ({i},{j},{k})"));
                        break 'comm;
                    }
                }
            }
        }

        'assoc: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let left: BigRational = (0..d).map(|t| prod(i, j, t) * prod(t, k, l)).sum();
                        let right: BigRational =
                            (0..d).map(|t| prod(j, k, t) * prod(i, t, l)).sum();
                        if left != right {
                            violations.push(format!(
                                "multiplication not associative: (e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k}) in e{l}"
                            ));
                            break 'assoc;
                        }
                    }
                }
            }
        }

        'sym: for i in 0..d {
            for j in 0..i {
                if self.pairing[i][j] != self.pairing[j][i] {
                    violations.push(format!("pairing not symmetric at ({i},{j})"));
                    break 'sym;
                }
            }
        }

        if self.pairing_matrix().inverse().is_none() {
            violations.push("pairing is singular".into());
        }

        'frob: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left: BigRational =
                        (0..d).map(|t| prod(i, j, t) * &self.pairing[t][k]).sum();
                    let right: BigRational =
                        (0..d).map(|t| prod(j, k, t) * &self.pairing[i][t]).sum();
                    if left != right {
                        violations.push(format!(
                            "pairing incompatible with multiplication at ({i},{j},{k})"
                        ));
                        break 'frob;
                    }
                }
            }
        }

        ValidationReport { violations }
    }

    fn pairing_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.pairing[i][j].clone());
            }
        }
        m
    }

    fn generator_matrix(&self, g: Generator) -> Result<Matrix, TqftError> {
        let d = self.dim;
        Ok(match g {
            Generator::Identity => Matrix::identity(d),
            Generator::Swap => {
                let mut m = Matrix::zeros(d * d, d * d);
                for i in 0..d {
                    for j in 0..d {
                        m.set(j * d + i, i * d + j, BigRational::one());
                    }
                }
                m
            }
            Generator::Cap => {
                let mut m = Matrix::zeros(d, 1);
                for i in 0..d {
                    m.set(i, 0, self.unit[i].clone());
                }
                m
            }
            Generator::Cup => {
                let counit = self.counit();
                let mut m = Matrix::zeros(1, d);
                for (i, c) in counit.into_iter().enumerate() {
                    m.set(0, i, c);
                }
                m
            }
            Generator::Pants => {
                let mut m = Matrix::zeros(d, d * d);
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            m.set(k, i * d + j, self.mult[i][j][k].clone());
                        }
                    }
                }
                m
            }
            Generator::Copants => {
                // Adjoint of the merge under the pairing: both output legs
                // raised by the inverse pairing.
                let ginv = self
                    .pairing_matrix()
                    .inverse()
                    .ok_or(TqftError::SingularPairing)?;
                let mut m = Matrix::zeros(d * d, d);
                for a in 0..d {
                    for b in 0..d {
                        for c in 0..d {
                            let mut total = BigRational::zero();
                            for y in 0..d {
                                for z in 0..d {
                                    let lowered: BigRational = (0..d)
                                        .map(|k| &self.mult[y][z][k] * &self.pairing[k][a])
                                        .sum();
                                    total += ginv.entry(b, y) * ginv.entry(c, z) * lowered;
                                }
                            }
                            m.set(b * d + c, a, total);
                        }
                    }
                }
                m
            }
        })
    }

    /// Functorial evaluation: the matrix sending states on the source
    /// circles to states on the target circles.
    pub fn evaluate(&self, c: &Cobordism) -> Result<Matrix, TqftError> {
        let mut current = Matrix::identity(self.dim.pow(c.source() as u32));
        for layer in c.layers() {
            let mut step = Matrix::identity(1);
            for &g in layer {
                step = step.kron(&self.generator_matrix(g)?);
            }
            current = step.mul(&current);
        }
        Ok(current)
    }

    /// Contracts the two halves of a surface cut along `m` circles: the
    /// right half is reversed into a map landing on the cut, and its states
    /// are paired against the left half's through the m-fold pairing. Any
    /// boundary the right half keeps open is re-raised by the inverse
    /// pairing (nothing, in the closed-surface case). Equals evaluation of
    /// the composed cobordism.
    pub fn glue_pair(&self, left: &Cobordism, right: &Cobordism) -> Result<Matrix, TqftError> {
        if left.target() != right.source() {
            return Err(TqftError::Interface {
                left: left.target(),
                right: right.source(),
            });
        }
        let cut = self.pairing_matrix().kron_power(left.target());
        let reraise = self
            .pairing_matrix()
            .inverse()
            .ok_or(TqftError::SingularPairing)?
            .kron_power(right.target());
        let left_states = self.evaluate(left)?;
        let right_states = self.evaluate(&right.reverse())?;
        Ok(reraise.mul(&right_states.transpose().mul(&cut.mul(&left_states))))
    }

    /// Scalar invariant of the closed genus-g surface.
    pub fn closed_surface(&self, genus: u32) -> Result<BigRational, TqftError> {
        let value = self.evaluate(&Cobordism::closed_surface(genus))?;
        Ok(value.scalar().expect("closed surface evaluates to a scalar").clone())
    }

    pub fn from_json_str(text: &str) -> Result<Self, TqftError> {
        let raw: AlgebraJson =
            serde_json::from_str(text).map_err(|e| TqftError::Json(e.to_string()))?;
        let mult = raw
            .mult
            .iter()
            .map(|p| {
                p.iter()
                    .map(|r| r.iter().map(|s| parse_rational(s)).collect())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let unit = raw
            .unit
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        let pairing = raw
            .pairing
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<_>, _>>()?;
        let algebra = FrobeniusAlgebra::new(mult, unit, pairing)?;
        if algebra.dim != raw.dim {
            return Err(TqftError::Shape(format!(
                "stated dim {} disagrees with tensors of dimension {}",
                raw.dim, algebra.dim
            )));
        }
        Ok(algebra)
    }

    pub fn to_json_string(&self) -> String {
        let raw = AlgebraJson {
            dim: self.dim,
            mult: self
                .mult
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|r| r.iter().map(rational_string).collect())
                        .collect()
                })
                .collect(),
            unit: self.unit.iter().map(rational_string).collect(),
            pairing: self
                .pairing
                .iter()
                .map(|r| r.iter().map(rational_string).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("algebra JSON never fails to serialize")
    }
}

/// The level-k fusion ring as a Frobenius algebra: basis = labels,
/// multiplication = fusion multiplicities, unit = label 0, pairing = δ
/// (the labels are self-dual).
pub fn frobenius_from_fusion(lv: FusionLevel) -> FrobeniusAlgebra {
    let d = lv.label_count();
    let mut mult = vec![vec![vec![BigRational::zero(); d]; d]; d];
    for a in lv.labels() {
        for b in lv.labels() {
            for c in lv.fuse(a, b).expect("labels in range") {
                mult[a as usize][b as usize][c as usize] = BigRational::one();
            }
        }
    }
    let mut unit = vec![BigRational::zero(); d];
    unit[0] = BigRational::one();
    let mut pairing = vec![vec![BigRational::zero(); d]; d];
    for i in 0..d {
        pairing[i][i] = BigRational::one();
    }
    FrobeniusAlgebra::new(mult, unit, pairing).expect("shapes are consistent")
}
