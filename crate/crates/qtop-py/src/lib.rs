//! Python bindings: link invariants, fusion dimensions, 2d TQFT evaluation,
//! and quantization residuals, mirroring the `qtop` command-line surface.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use qtop::{BraidWord, FusionLevel, LinkDiagram, MultiPoly, VarTable};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_diagram(text: &str) -> PyResult<LinkDiagram> {
    let t = text.trim();
    if t.starts_with('B') {
        Ok(BraidWord::parse(t).map_err(err)?.closure())
    } else {
        LinkDiagram::parse_pd(t).map_err(err)
    }
}

/// Link diagram built from braid text ("B2 1 1 1") or planar-diagram text
/// ("X(1,4,2,3) X(3,2,4,1)").
#[pyclass]
struct Diagram {
    inner: LinkDiagram,
}

#[pymethods]
impl Diagram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Diagram {
            inner: parse_diagram(text)?,
        })
    }

    /// Jones polynomial as display text, e.g. "-s^8 + s^6 + s^2".
    fn jones(&self) -> PyResult<String> {
        Ok(qtop::jones(&self.inner).map_err(err)?.to_string())
    }

    /// Jones terms as (exponent, coefficient) pairs, exponent ascending;
    /// coefficients are decimal strings to keep them exact.
    fn jones_terms(&self) -> PyResult<Vec<(i64, String)>> {
        let v = qtop::jones(&self.inner).map_err(err)?;
        Ok(v.terms().map(|(e, c)| (e, c.to_string())).collect())
    }

    /// Kauffman bracket in the framing variable A.
    fn bracket(&self) -> PyResult<String> {
        Ok(qtop::kauffman_bracket(&self.inner).map_err(err)?.to_string())
    }

    /// Skein-relation residual at one crossing; "0" for every valid diagram.
    fn skein_residual(&self, index: usize) -> PyResult<String> {
        Ok(qtop::skein_residual(&self.inner, index)
            .map_err(err)?
            .to_string())
    }

    /// Jones value at s = exp(i*pi/(k+2)), returned as (re, im).
    fn jones_at_level(&self, k: u32) -> PyResult<(f64, f64)> {
        let v = qtop::jones_at_level(&self.inner, k).map_err(err)?;
        Ok((v.re, v.im))
    }

    fn mirror(&self) -> Diagram {
        Diagram {
            inner: self.inner.mirror(),
        }
    }

    fn writhe(&self) -> i64 {
        self.inner.writhe()
    }

    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    fn component_count(&self) -> usize {
        self.inner.component_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram({} crossings, {} components)",
            self.inner.crossing_count(),
            self.inner.component_count()
        )
    }
}

/// Conformal-block dimension on the sphere by fusion-path counting.
#[pyfunction]
fn fusion_dim(level: u32, marked: Vec<u32>) -> PyResult<u64> {
    FusionLevel::new(level)
        .map_err(err)?
        .block_dim_sphere(&marked)
        .map_err(err)
}

/// Verlinde-formula dimension for a genus-g surface with marked points.
#[pyfunction]
#[pyo3(signature = (level, genus, marked=vec![]))]
fn verlinde_dim(level: u32, genus: u32, marked: Vec<u32>) -> PyResult<u64> {
    FusionLevel::new(level)
        .map_err(err)?
        .verlinde_dim(genus, &marked)
        .map_err(err)
}

/// Admissible fusion products of two labels at the given level.
#[pyfunction]
fn fuse(level: u32, a: u32, b: u32) -> PyResult<Vec<u32>> {
    FusionLevel::new(level).map_err(err)?.fuse(a, b).map_err(err)
}

/// Group algebra of Z/2 as algebra JSON, ready for `tqft_eval`.
#[pyfunction]
fn z2_algebra_json() -> String {
    qtop::FrobeniusAlgebra::z2_group_algebra().to_json_string()
}

/// Fusion (Verlinde) algebra of the given level as algebra JSON.
#[pyfunction]
fn verlinde_algebra_json(level: u32) -> PyResult<String> {
    Ok(qtop::frobenius_from_fusion(FusionLevel::new(level).map_err(err)?).to_json_string())
}

/// Evaluates a cobordism word against a Frobenius algebra; returns
/// (rows, cols, entries) with exact rational entries as strings.
#[pyfunction]
fn tqft_eval(
    algebra_json: &str,
    cobordism_json: &str,
) -> PyResult<(usize, usize, Vec<Vec<String>>)> {
    let alg = qtop::FrobeniusAlgebra::from_json_str(algebra_json).map_err(err)?;
    let cob = qtop::Cobordism::from_json_str(cobordism_json).map_err(err)?;
    let m = alg.evaluate(&cob).map_err(err)?;
    Ok((m.rows(), m.cols(), m.entries_as_strings()))
}

/// Invariant of the closed genus-g surface under the given algebra.
#[pyfunction]
fn closed_surface(algebra_json: &str, genus: u32) -> PyResult<String> {
    let alg = qtop::FrobeniusAlgebra::from_json_str(algebra_json).map_err(err)?;
    Ok(alg.closed_surface(genus).map_err(err)?.to_string())
}

/// Largest q/p subscript mentioned in the observable texts (at least 1).
fn infer_dof(texts: &[&str]) -> usize {
    let mut n = 1usize;
    for t in texts {
        for (i, b) in t.bytes().enumerate() {
            if b == b'q' || b == b'p' {
                let digits: String = t[i + 1..]
                    .chars()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                if let Ok(k) = digits.parse::<usize>() {
                    n = n.max(k);
                }
            }
        }
    }
    n
}

/// Quantum-condition residual [Q(f),Q(g)] + i*hbar*Q({f,g}) as display text;
/// "0" whenever the condition holds. `rep` picks the operator realization
/// ("prequantum" or "schrodinger").
#[pyfunction]
#[pyo3(signature = (f, g, rep="prequantum", n=None))]
fn quantization_residual(f: &str, g: &str, rep: &str, n: Option<usize>) -> PyResult<String> {
    let n = n.unwrap_or_else(|| infer_dof(&[f, g]));
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    let table = VarTable::phase_space(n);
    let fp = MultiPoly::parse(table, f).map_err(err)?;
    let gp = MultiPoly::parse(table, g).map_err(err)?;
    let residual = match rep {
        "prequantum" => qtop::dirac_residual(&fp, &gp).map_err(err)?,
        "schrodinger" => qtop::schrodinger_residual(&fp, &gp).map_err(err)?,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown representation `{other}`"
            )))
        }
    };
    Ok(residual.to_string())
}

/// Whether a section in z/zbar variables is holomorphic (annihilated by
/// every d/dzbar).
#[pyfunction]
fn is_polarized(section: &str, n: usize) -> PyResult<bool> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    let table = VarTable::holomorphic(n);
    let s = MultiPoly::parse(table, section).map_err(err)?;
    qtop::is_polarized(&s).map_err(err)
}

#[pymodule]
fn qtop_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Diagram>()?;
    m.add_function(wrap_pyfunction!(fusion_dim, m)?)?;
    m.add_function(wrap_pyfunction!(verlinde_dim, m)?)?;
    m.add_function(wrap_pyfunction!(fuse, m)?)?;
    m.add_function(wrap_pyfunction!(z2_algebra_json, m)?)?;
    m.add_function(wrap_pyfunction!(verlinde_algebra_json, m)?)?;
    m.add_function(wrap_pyfunction!(tqft_eval, m)?)?;
    m.add_function(wrap_pyfunction!(closed_surface, m)?)?;
    m.add_function(wrap_pyfunction!(quantization_residual, m)?)?;
    m.add_function(wrap_pyfunction!(is_polarized, m)?)?;
    Ok(())
}
