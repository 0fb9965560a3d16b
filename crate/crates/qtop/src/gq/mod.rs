//! Symbolic quantization checks on flat phase space ℝ²ⁿ.
//!
//! Conventions, fixed once for the whole module: coordinates q₁..qₙ,
//! momenta p₁..pₙ; symplectic form ω = Σⱼ dqⱼ∧dpⱼ; bracket
//! {f,g} = X_f(g), which makes {qᵢ,pⱼ} = −δᵢⱼ; global potential
//! A = −Σⱼ pⱼ dqⱼ (so dA = ω, and a single chart suffices because the
//! space is contractible). The phase-space operator assignment is
//! Q(f) = −iℏ∇_{X_f} − f with ∇ = d − (i/ℏ)A, expanded here as
//! Q(f) = Σⱼ (−iℏ ∂f/∂pⱼ)∂_{qⱼ} + (iℏ ∂f/∂qⱼ)∂_{pⱼ} + (Σⱼ pⱼ ∂f/∂pⱼ − f).
//!
//! Two sign facts follow from these choices and are easy to trip over.
//! The constant observable 1 maps to the scalar −1, not the identity.
//! And the commutator [Q(p),Q(q)] equals +iℏ for the phase-space
//! operators, while the familiar −iℏ belongs to the position-space
//! realization built by [`schrodinger_quantize`]; both satisfy the same
//! quantum condition [Q(f),Q(g)] = −iℏ Q({f,g}) in their own settings,
//! which is exactly what [`dirac_residual`] and [`schrodinger_residual`]
//! verify term by term.
//!
//! ℏ is a formal invertible symbol with exact Gaussian-rational
//! coefficients, so every identity here is decided structurally — no
//! tolerances anywhere.

mod operator;
mod poly;

pub use operator::DiffOperator;
pub use poly::{
    gauss, hbar_gauss, hbar_int, hbar_one, hbar_zero, i_hbar, minus_i_hbar, Hbar, MultiPoly,
    VarKind, VarTable, HBAR_VAR,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GqError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("observables use different variable tables")]
    TableMismatch,
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operation needs {expected} variables")]
    WrongVariables { expected: &'static str },
    #[error("position-space quantization covers observables of degree at most 1, got {degree}")]
    DegreeTooHigh { degree: usize },
}

fn require_phase_space(f: &MultiPoly) -> Result<(), GqError> {
    if f.table().kind() != VarKind::PhaseSpace {
        return Err(GqError::WrongVariables {
            expected: "phase-space (q/p)",
        });
    }
    Ok(())
}

fn require_same_table(f: &MultiPoly, g: &MultiPoly) -> Result<(), GqError> {
    if f.table() != g.table() {
        return Err(GqError::TableMismatch);
    }
    Ok(())
}

/// Polynomial vector field: one coefficient polynomial per ∂/∂(variable).
#[derive(Debug, Clone, PartialEq)]
pub struct VectorFieldPoly {
    table: VarTable,
    components: Vec<MultiPoly>,
}

impl VectorFieldPoly {
    pub fn table(&self) -> VarTable {
        self.table
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    /// Directional derivative Σⱼ componentⱼ · ∂g/∂(variable j).
    pub fn apply(&self, g: &MultiPoly) -> MultiPoly {
        assert_eq!(self.table, g.table(), "operands share one variable table");
        let mut out = MultiPoly::zero(self.table);
        for (idx, comp) in self.components.iter().enumerate() {
            if !comp.is_zero() {
                out = &out + &(comp * &g.partial(idx));
            }
        }
        out
    }

    /// [X,Y]ₖ = X(Yₖ) − Y(Xₖ).
    pub fn commutator(&self, other: &VectorFieldPoly) -> VectorFieldPoly {
        assert_eq!(self.table, other.table, "operands share one variable table");
        let components = (0..self.components.len())
            .map(|k| &self.apply(&other.components[k]) - &other.apply(&self.components[k]))
            .collect();
        VectorFieldPoly {
            table: self.table,
            components,
        }
    }
}

/// X_f = Σⱼ (∂f/∂pⱼ)∂_{qⱼ} − (∂f/∂qⱼ)∂_{pⱼ}, so that X_q = −∂_p and
/// X_p = ∂_q.
pub fn hamiltonian_vf(f: &MultiPoly) -> Result<VectorFieldPoly, GqError> {
    require_phase_space(f)?;
    let t = f.table();
    let n = t.n();
    let mut components = vec![MultiPoly::zero(t); t.len()];
    for k in 1..=n {
        components[t.q(k)] = f.partial(t.p(k));
        components[t.p(k)] = -&f.partial(t.q(k));
    }
    Ok(VectorFieldPoly {
        table: t,
        components,
    })
}

/// {f,g} = X_f(g); in particular {qᵢ,pⱼ} = −δᵢⱼ.
pub fn poisson(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, GqError> {
    require_same_table(f, g)?;
    Ok(hamiltonian_vf(f)?.apply(g))
}

/// Phase-space operator
/// Q(f) = Σⱼ (−iℏ ∂f/∂pⱼ)∂_{qⱼ} + (iℏ ∂f/∂qⱼ)∂_{pⱼ} + (Σⱼ pⱼ ∂f/∂pⱼ − f).
/// Q(p) = −iℏ∂_q, Q(q) = iℏ∂_p − q, Q(1) = −1.
pub fn prequant(f: &MultiPoly) -> Result<DiffOperator, GqError> {
    require_phase_space(f)?;
    let t = f.table();
    let n = t.n();
    let mut op = DiffOperator::zero(t);
    let mut mult_part = -f;
    for k in 1..=n {
        let df_dp = f.partial(t.p(k));
        let df_dq = f.partial(t.q(k));
        if !df_dp.is_zero() {
            op = &op
                + &DiffOperator::from_poly(&df_dp.scale(&minus_i_hbar()))
                    .compose(&DiffOperator::derivative(t, t.q(k)));
            mult_part = &mult_part + &(&MultiPoly::var(t, t.p(k)) * &df_dp);
        }
        if !df_dq.is_zero() {
            op = &op
                + &DiffOperator::from_poly(&df_dq.scale(&i_hbar()))
                    .compose(&DiffOperator::derivative(t, t.p(k)));
        }
    }
    Ok(&op + &DiffOperator::from_poly(&mult_part))
}

/// [Q(f), Q(g)] + iℏ·Q({f,g}); the quantum condition says this is the zero
/// operator, identically in ℏ, for every pair of polynomial observables.
pub fn dirac_residual(f: &MultiPoly, g: &MultiPoly) -> Result<DiffOperator, GqError> {
    require_same_table(f, g)?;
    let qf = prequant(f)?;
    let qg = prequant(g)?;
    let bracket = poisson(f, g)?;
    Ok(&qf.commutator(&qg) + &prequant(&bracket)?.scale(&i_hbar()))
}

fn check_index(n: usize, k: usize) -> Result<(), GqError> {
    if k == 0 || k > n {
        Err(GqError::IndexOutOfRange { index: k, n })
    } else {
        Ok(())
    }
}

/// Position-space realization of the coordinate: multiplication by xₖ.
pub fn position_operator(n: usize, k: usize) -> Result<DiffOperator, GqError> {
    check_index(n, k)?;
    let t = VarTable::position(n);
    Ok(DiffOperator::from_poly(&MultiPoly::var(t, k - 1)))
}

/// Position-space realization of the momentum: −iℏ ∂/∂xₖ.
pub fn momentum_operator(n: usize, k: usize) -> Result<DiffOperator, GqError> {
    check_index(n, k)?;
    let t = VarTable::position(n);
    Ok(DiffOperator::derivative(t, k - 1).scale(&minus_i_hbar()))
}

/// Linear extension of the position-space rules qₖ ↦ xₖ·, pₖ ↦ −iℏ∂ₖ,
/// constant ↦ the same constant. Only observables of total degree ≤ 1 have
/// a representation here.
pub fn schrodinger_quantize(f: &MultiPoly) -> Result<DiffOperator, GqError> {
    require_phase_space(f)?;
    let degree = f.total_degree();
    if degree > 1 {
        return Err(GqError::DegreeTooHigh { degree });
    }
    let n = f.table().n();
    let xt = VarTable::position(n);
    let mut op = DiffOperator::zero(xt);
    for (exps, c) in f.terms() {
        match exps.iter().position(|&e| e > 0) {
            None => op = &op + &DiffOperator::scalar(xt, c),
            Some(idx) if idx < n => {
                op = &op + &DiffOperator::from_poly(&MultiPoly::var(xt, idx).scale(c));
            }
            Some(idx) => {
                op = &op + &DiffOperator::derivative(xt, idx - n).scale(c).scale(&minus_i_hbar());
            }
        }
    }
    Ok(op)
}

/// The quantum condition in the position-space realization:
/// [Q(f), Q(g)] + iℏ·Q({f,g}), zero for all observables of degree ≤ 1.
pub fn schrodinger_residual(f: &MultiPoly, g: &MultiPoly) -> Result<DiffOperator, GqError> {
    require_same_table(f, g)?;
    let qf = schrodinger_quantize(f)?;
    let qg = schrodinger_quantize(g)?;
    let bracket = poisson(f, g)?;
    Ok(&qf.commutator(&qg) + &schrodinger_quantize(&bracket)?.scale(&i_hbar()))
}

/// First antiholomorphic derivative that fails to vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizationWitness {
    /// 1-based index k of the offending z̄ₖ.
    pub index: usize,
    pub derivative: MultiPoly,
}

/// A section is polarized exactly when ∂s/∂z̄ₖ = 0 for every k — the
/// holomorphic functions. Returns the first violation as a witness.
pub fn polarization_witness(s: &MultiPoly) -> Result<Option<PolarizationWitness>, GqError> {
    if s.table().kind() != VarKind::Holomorphic {
        return Err(GqError::WrongVariables {
            expected: "holomorphic (z/zbar)",
        });
    }
    let n = s.table().n();
    for k in 1..=n {
        let derivative = s.partial(n + k - 1);
        if !derivative.is_zero() {
            return Ok(Some(PolarizationWitness {
                index: k,
                derivative,
            }));
        }
    }
    Ok(None)
}

pub fn is_polarized(s: &MultiPoly) -> Result<bool, GqError> {
    Ok(polarization_witness(s)?.is_none())
}
