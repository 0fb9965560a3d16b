//! Normal-ordered differential operators: every term is a polynomial
//! coefficient standing to the left of a monomial in the commuting partial
//! derivatives. Composition re-establishes normal order through the Leibniz
//! rule, so operator identities can be decided by structural equality.

use num::{BigInt, BigRational, Complex, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::poly::{hbar_gauss, hbar_int, join_signed, Hbar, MultiPoly, VarTable};

#[derive(Debug, Clone, PartialEq)]
pub struct DiffOperator {
    table: VarTable,
    /// derivative multi-index → coefficient polynomial
    terms: BTreeMap<Vec<u16>, MultiPoly>,
}

impl DiffOperator {
    pub fn zero(table: VarTable) -> Self {
        DiffOperator {
            table,
            terms: BTreeMap::new(),
        }
    }

    /// Multiplication by a polynomial.
    pub fn from_poly(p: &MultiPoly) -> Self {
        let mut out = Self::zero(p.table());
        out.insert(vec![0; p.table().len()], p.clone());
        out
    }

    pub fn scalar(table: VarTable, c: &Hbar) -> Self {
        Self::from_poly(&MultiPoly::constant(table, c.clone()))
    }

    /// ∂/∂(variable idx).
    pub fn derivative(table: VarTable, idx: usize) -> Self {
        assert!(idx < table.len(), "variable index in range");
        let mut alpha = vec![0u16; table.len()];
        alpha[idx] = 1;
        let mut out = Self::zero(table);
        out.insert(alpha, MultiPoly::one(table));
        out
    }

    pub fn table(&self) -> VarTable {
        self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &MultiPoly)> {
        self.terms.iter()
    }

    fn insert(&mut self, alpha: Vec<u16>, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let merged = slot.get() + &p;
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
        for (alpha, p) in &self.terms {
            out.insert(alpha.clone(), p.scale(c));
        }
        out
    }

    /// `self` after `rhs` (apply `rhs` first). Normal order is restored by
    /// the multi-index Leibniz rule:
    /// (c₁∂^α)(c₂∂^β) = c₁ Σ_{γ≤α} C(α,γ) (∂^γ c₂) ∂^{α−γ+β}.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.table, rhs.table, "operands share one variable table");
        let mut out = Self::zero(self.table);
        for (alpha, c1) in &self.terms {
            for gamma in indices_leq(alpha) {
                let weight = binomial_product(alpha, &gamma);
                for (beta, c2) in &rhs.terms {
                    let d = partial_multi(c2, &gamma);
                    if d.is_zero() {
                        continue;
                    }
                    let exps = alpha
                        .iter()
                        .zip(&gamma)
                        .zip(beta)
                        .map(|((&a, &g), &b)| {
                            (a - g).checked_add(b).expect("derivative order fits in u16")
                        })
                        .collect();
                    out.insert(exps, (c1 * &d).scale(&weight));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) - &rhs.compose(self)
    }

    /// The operator acting on a polynomial: Σ_α c_α · ∂^α p.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        assert_eq!(self.table, p.table(), "operands share one variable table");
        let mut out = MultiPoly::zero(self.table);
        for (alpha, c) in &self.terms {
            let d = partial_multi(p, alpha);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        out
    }
}

impl Add for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        assert_eq!(self.table, rhs.table, "operands share one variable table");
        let mut out = self.clone();
        for (alpha, p) in &rhs.terms {
            out.insert(alpha.clone(), p.clone());
        }
        out
    }
}

impl Sub for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        self + &-rhs
    }
}

impl Neg for &DiffOperator {
    type Output = DiffOperator;
    fn neg(self) -> DiffOperator {
        let mut out = DiffOperator::zero(self.table);
        for (alpha, p) in &self.terms {
            out.insert(alpha.clone(), -p);
        }
        out
    }
}

/// All multi-indices γ with γ ≤ α slot-wise.
fn indices_leq(alpha: &[u16]) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::with_capacity(alpha.len())];
    for &a in alpha {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for prefix in &out {
            for g in 0..=a {
                let mut v = prefix.clone();
                v.push(g);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Π_i C(α_i, γ_i) as a scalar.
fn binomial_product(alpha: &[u16], gamma: &[u16]) -> Hbar {
    let mut product = BigInt::from(1);
    for (&a, &g) in alpha.iter().zip(gamma) {
        product *= num::integer::binomial(BigInt::from(a), BigInt::from(g));
    }
    hbar_gauss(Complex::new(
        BigRational::from_integer(product),
        BigRational::zero(),
    ))
}

fn partial_multi(p: &MultiPoly, gamma: &[u16]) -> MultiPoly {
    let mut d = p.clone();
    for (idx, &g) in gamma.iter().enumerate() {
        for _ in 0..g {
            if d.is_zero() {
                return d;
            }
            d = d.partial(idx);
        }
    }
    d
}

fn derivative_string(table: VarTable, alpha: &[u16]) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in alpha.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("d{}", table.name(idx))),
            _ => parts.push(format!("d{}^{e}", table.name(idx))),
        }
    }
    parts.join("*")
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.terms.iter().rev().map(|(alpha, coeff)| {
            let body = derivative_string(self.table, alpha);
            let cs = coeff.to_string();
            if body.is_empty() {
                cs
            } else if *coeff == MultiPoly::one(self.table) {
                body
            } else if *coeff == MultiPoly::constant(self.table, hbar_int(-1)) {
                format!("-{body}")
            } else if cs.contains(' ') {
                format!("({cs})*{body}")
            } else {
                format!("{cs}*{body}")
            }
        });
        f.write_str(&join_signed(pieces))
    }
}
