//! Python bindings: `import seaweed_py`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;
use seaweed::meander::{build_meander, graph_index, is_frobenius as meander_is_frobenius, orient};
use seaweed::oracle::{cross_check, OracleError};
use seaweed::rational::to_pq;
use seaweed::spectrum::{principal_element_with_reference, SpectrumError};
use seaweed::typesym::{parse_type, SeaweedType, TypeError};
use seaweed::verify::{check_theorem, check_windup_equations, VerifyError};
use seaweed::winding::{wind_down_sequence, MoveKind, UnknownMove, WindingError};
use thiserror::Error;

create_exception!(seaweed_py, NotFrobeniusError, PyValueError, "The type's meander is not a single path.");

#[derive(Debug, Error)]
enum Error {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("{0} is not Frobenius")]
    NotFrobenius(SeaweedType),
    #[error(transparent)]
    Winding(#[from] WindingError),
    #[error(transparent)]
    Move(#[from] UnknownMove),
    #[error(transparent)]
    Spectrum(SpectrumError),
    #[error(transparent)]
    Oracle(OracleError),
    #[error("{0}")]
    Other(String),
}

impl From<SpectrumError> for Error {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::NotFrobenius(t) => Error::NotFrobenius(t),
            other => Error::Spectrum(other),
        }
    }
}

impl From<OracleError> for Error {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NotFrobenius(t) => Error::NotFrobenius(t),
            other => Error::Oracle(other),
        }
    }
}

impl From<VerifyError> for Error {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::NotFrobenius(t) => Error::NotFrobenius(t),
            VerifyError::Winding(w) => Error::Winding(w),
            other => Error::Other(other.to_string()),
        }
    }
}

impl From<Error> for PyErr {
    fn from(e: Error) -> PyErr {
        match e {
            Error::NotFrobenius(_) => NotFrobeniusError::new_err(e.to_string()),
            _ => PyValueError::new_err(e.to_string()),
        }
    }
}

fn ty(text: &str) -> Result<SeaweedType, Error> {
    Ok(parse_type(text)?)
}

fn json<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// `(top, bottom)` parts of a type symbol.
#[pyfunction]
fn parse(text: &str) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let t = ty(text)?;
    Ok((t.top().parts().to_vec(), t.bottom().parts().to_vec()))
}

/// Normalized type symbol.
#[pyfunction]
fn normalize(text: &str) -> PyResult<String> {
    Ok(ty(text)?.to_string())
}

#[pyfunction]
fn index(text: &str) -> PyResult<usize> {
    Ok(graph_index(&build_meander(&ty(text)?)))
}

#[pyfunction]
fn is_frobenius(text: &str) -> PyResult<bool> {
    Ok(meander_is_frobenius(&build_meander(&ty(text)?)))
}

/// Eigenvalue to multiplicity.
#[pyfunction]
fn spectrum(text: &str) -> PyResult<std::collections::BTreeMap<i64, u64>> {
    let s = seaweed::spectrum::spectrum(&ty(text)?).map_err(Error::from)?;
    Ok(s.counts().clone())
}

/// Diagonal of the principal element as `fractions.Fraction` values.
#[pyfunction]
#[pyo3(signature = (text, ref_vertex=None))]
fn principal<'py>(py: Python<'py>, text: &str, ref_vertex: Option<usize>) -> PyResult<Bound<'py, PyList>> {
    let t = ty(text)?;
    let dm = orient(&build_meander(&t));
    let p = principal_element_with_reference(&dm, ref_vertex.unwrap_or(t.n())).map_err(Error::from)?;
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    let values = p.diag.iter().map(|r| fraction.call1((to_pq(r),))).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, values)
}

/// `(steps, outcome)` where each step is `(move, type)`.
#[pyfunction]
fn wind_down(text: &str) -> PyResult<(Vec<(String, String)>, String)> {
    let trace = wind_down_sequence(&ty(text)?);
    let steps = trace.steps.iter().map(|s| (s.mv.name().to_string(), s.ty.to_string())).collect();
    let outcome = serde_json::to_value(trace.outcome).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((steps, outcome.as_str().unwrap_or_default().to_string()))
}

#[pyfunction]
fn wind_up(text: &str, mv: &str) -> PyResult<String> {
    let mv: MoveKind = mv.parse().map_err(Error::from)?;
    Ok(seaweed::winding::wind_up(&ty(text)?, mv).map_err(Error::from)?.to_string())
}

/// Exact linear-algebra cross-check, as a dict.
#[pyfunction]
fn oracle<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    let report = cross_check(&ty(text)?).map_err(Error::from)?;
    json(py, &report)
}

/// Theorem report, or the winding-up equations of `move`, as a dict.
#[pyfunction]
#[pyo3(signature = (text, r#move=None))]
fn verify<'py>(py: Python<'py>, text: &str, r#move: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let t = ty(text)?;
    match r#move {
        None => json(py, &check_theorem(&t)),
        Some(name) => {
            let mv: MoveKind = name.parse().map_err(Error::from)?;
            json(py, &check_windup_equations(&t, mv).map_err(Error::from)?)
        }
    }
}

#[pymodule]
fn seaweed_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NotFrobeniusError", m.py().get_type::<NotFrobeniusError>())?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(index, m)?)?;
    m.add_function(wrap_pyfunction!(is_frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(principal, m)?)?;
    m.add_function(wrap_pyfunction!(wind_down, m)?)?;
    m.add_function(wrap_pyfunction!(wind_up, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_frobenius_is_kept_apart() {
        let t = ty("2/2").unwrap();
        let e = Error::from(seaweed::spectrum::spectrum(&t).unwrap_err());
        assert!(matches!(e, Error::NotFrobenius(_)));
        assert_eq!(e.to_string(), "2/2 is not Frobenius");
        let e = Error::from(seaweed::oracle::oracle_principal(&t).unwrap_err());
        assert!(matches!(e, Error::NotFrobenius(_)));
    }

    #[test]
    fn parse_errors_pass_through() {
        assert!(matches!(ty("3/2"), Err(Error::Type(_))));
        assert!(matches!("Sideways".parse::<MoveKind>().map_err(Error::from), Err(Error::Move(_))));
    }
}
