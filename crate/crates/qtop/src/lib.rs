//! Exact computational toolkit for quantum topology: link invariants from
//! diagram combinatorics, SU(2) fusion data, two-dimensional field-theory
//! evaluation, and symbolic quantization checks on polynomial observables.

#![forbid(unsafe_code)]

pub mod diagram;
pub mod fusion;
pub mod gq;
pub mod laurent;
pub mod skein;
pub mod tqft2d;

mod unionfind;

pub use diagram::{BraidWord, DiagramError, LinkDiagram};
pub use fusion::{FusionError, FusionLevel, SMatrix};
pub use gq::{
    dirac_residual, hamiltonian_vf, is_polarized, momentum_operator, poisson,
    polarization_witness, position_operator, prequant, schrodinger_quantize,
    schrodinger_residual, DiffOperator, GqError, Hbar, MultiPoly, PolarizationWitness,
    VarKind, VarTable, VectorFieldPoly,
};
pub use laurent::{int_poly, GaussRational, IntLaurent, LaurentError, LaurentPoly};
pub use skein::{jones, jones_at_level, kauffman_bracket, skein_residual, SkeinError};
pub use tqft2d::{
    frobenius_from_fusion, Cobordism, FrobeniusAlgebra, Generator, Matrix, TqftError,
    ValidationReport,
};
