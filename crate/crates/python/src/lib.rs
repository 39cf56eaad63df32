//! Python module `bicomm`: presentations, completed quotients and the fast
//! GK dimension methods.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bicomm_core::bicomm::{gk_box_sweep_bc, gk_fast_bc_leading, parse_term, NfMonomial};
use bicomm_core::commutative::{gk_box_sweep, gk_fast, Monomial, DEFAULT_GROWTH_BUDGET};
use bicomm_core::presentation::{parse_bc_expr, parse_com_expr, parse_presentation, Presentation};
use bicomm_core::quotient::{fitted_degree, BcQuotient, ComQuotient};
use bicomm_core::{Error, VarSet};

create_exception!(bicomm, BudgetError, PyRuntimeError, "A step or growth budget ran out.");

fn to_py(e: Error) -> PyErr {
    if e.is_resource() {
        BudgetError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

enum Inner {
    Com(ComQuotient),
    Bc(BcQuotient),
}

/// A presentation with its relations completed to a Groebner basis
/// (commutative) or Groebner-Shirshov basis (bicommutative).
#[pyclass(module = "bicomm", frozen)]
struct Quotient {
    inner: Inner,
}

impl Quotient {
    fn vars(&self) -> &VarSet {
        match &self.inner {
            Inner::Com(q) => &q.vars,
            Inner::Bc(q) => &q.vars,
        }
    }

    fn normal_form_text(&self, expr: &str) -> PyResult<String> {
        let vars = self.vars();
        Ok(match &self.inner {
            Inner::Com(q) => q
                .normal_form(&parse_com_expr(expr, vars, q.order).map_err(to_py)?)
                .display(vars)
                .to_string(),
            Inner::Bc(q) => q
                .normal_form(&parse_bc_expr(expr, vars, q.order).map_err(to_py)?)
                .display(vars)
                .to_string(),
        })
    }
}

#[pymethods]
impl Quotient {
    #[new]
    #[pyo3(signature = (text, max_steps = 100_000))]
    fn new(text: &str, max_steps: usize) -> PyResult<Self> {
        let inner = match parse_presentation(text).map_err(to_py)? {
            Presentation::Commutative(p) => Inner::Com(ComQuotient::new(&p)),
            Presentation::Bicommutative(p) => Inner::Bc(BcQuotient::new(&p, max_steps).map_err(to_py)?),
        };
        Ok(Quotient { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (path, max_steps = 100_000))]
    fn from_file(path: &str, max_steps: usize) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Quotient::new(&text, max_steps)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match &self.inner {
            Inner::Com(_) => "commutative",
            Inner::Bc(_) => "bicommutative",
        }
    }

    #[getter]
    fn arity(&self) -> usize {
        self.vars().len()
    }

    /// `None` for commutative presentations.
    #[getter]
    fn input_was_gsb(&self) -> Option<bool> {
        match &self.inner {
            Inner::Com(_) => None,
            Inner::Bc(q) => Some(q.input_was_gsb),
        }
    }

    fn basis(&self) -> Vec<String> {
        let vars = self.vars();
        match &self.inner {
            Inner::Com(q) => q.basis.iter().map(|b| b.display(vars).to_string()).collect(),
            Inner::Bc(q) => q.basis.iter().map(|b| b.display(vars).to_string()).collect(),
        }
    }

    /// The completed basis in the presentation file format.
    fn to_text(&self) -> String {
        match &self.inner {
            Inner::Com(q) => q.presentation().to_text(),
            Inner::Bc(q) => q.presentation().to_text(),
        }
    }

    /// Dict with `gk`, `witness`, `candidates` and `c_s` or `n_s`.
    fn gk<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        let vars = self.vars();
        match &self.inner {
            Inner::Com(q) => {
                let r = q.gk();
                d.set_item("c_s", r.c_s)?;
                d.set_item("gk", r.gk)?;
                d.set_item("witness", r.witness.map(|w| w.display(vars).to_string()))?;
                d.set_item("candidates", r.candidate_count)?;
            }
            Inner::Bc(q) => {
                let r = q.gk();
                d.set_item("n_s", r.n_s)?;
                d.set_item("gk", r.gk)?;
                d.set_item("witness", r.witness.map(|w| w.display(vars).to_string()))?;
                d.set_item("candidates", r.candidate_count)?;
            }
        }
        Ok(d)
    }

    /// GK dimension by the brute-force box sweep.
    fn gk_oracle(&self) -> usize {
        match &self.inner {
            Inner::Com(q) => q.gk_oracle(),
            Inner::Bc(q) => q.gk_oracle(),
        }
    }

    fn normal_form(&self, expr: &str) -> PyResult<String> {
        self.normal_form_text(expr)
    }

    fn equal(&self, lhs: &str, rhs: &str) -> PyResult<bool> {
        let vars = self.vars();
        match &self.inner {
            Inner::Com(q) => {
                let f = parse_com_expr(lhs, vars, q.order).map_err(to_py)?;
                let g = parse_com_expr(rhs, vars, q.order).map_err(to_py)?;
                Ok(q.equal(&f, &g))
            }
            Inner::Bc(q) => {
                let f = parse_bc_expr(lhs, vars, q.order).map_err(to_py)?;
                let g = parse_bc_expr(rhs, vars, q.order).map_err(to_py)?;
                Ok(q.equal(&f, &g))
            }
        }
    }

    /// Number of irreducible monomials of length at most `n`, for `n = 0..=n_max`.
    #[pyo3(signature = (n_max = 40))]
    fn growth(&self, n_max: u64) -> PyResult<Vec<BigUint>> {
        match &self.inner {
            Inner::Com(q) => q.growth(n_max, DEFAULT_GROWTH_BUDGET),
            Inner::Bc(q) => q.growth(n_max, DEFAULT_GROWTH_BUDGET),
        }
        .map_err(to_py)
    }

    #[pyo3(signature = (n_max = 40))]
    fn growth_degree(&self, n_max: u64) -> PyResult<usize> {
        let counts = self.growth(n_max)?;
        fitted_degree(&counts, 2 * self.arity() + 1).map_err(to_py)
    }

    fn irreducible(&self, max_len: u32) -> Vec<String> {
        let vars = self.vars();
        match &self.inner {
            Inner::Com(q) => q.irreducible(max_len).iter().map(|m| m.display(vars).to_string()).collect(),
            Inner::Bc(q) => q.irreducible(max_len).iter().map(|m| m.display(vars).to_string()).collect(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Quotient({}, {} vars, {} basis elements)", self.kind(), self.arity(), self.basis().len())
    }
}

fn monomials(arity: usize, exps: Vec<Vec<u32>>) -> PyResult<Vec<Monomial>> {
    exps.into_iter()
        .map(|e| {
            if e.len() != arity {
                return Err(PyValueError::new_err(format!("exponent vector {e:?} is not of length {arity}")));
            }
            Ok(Monomial::from_exponents(e))
        })
        .collect()
}

fn pairs(arity: usize, sides: Vec<(Vec<u32>, Vec<u32>)>) -> PyResult<Vec<NfMonomial>> {
    sides
        .into_iter()
        .map(|(u, v)| {
            let mut m = monomials(arity, vec![u, v])?;
            let v = m.pop().unwrap();
            NfMonomial::pair(m.pop().unwrap(), v).map_err(to_py)
        })
        .collect()
}

/// `(c_s, gk)` of `k[X | S]` for monomials `S` given as exponent vectors.
#[pyfunction]
fn gk_commutative(arity: usize, leading: Vec<Vec<u32>>) -> PyResult<(u32, usize)> {
    let r = gk_fast(arity, &monomials(arity, leading)?);
    Ok((r.c_s, r.gk))
}

#[pyfunction]
fn gk_commutative_oracle(arity: usize, leading: Vec<Vec<u32>>) -> PyResult<usize> {
    Ok(gk_box_sweep(arity, &monomials(arity, leading)?))
}

/// `(n_s, gk)` for a set of pair monomials `[u; v]`, each given as a tuple
/// of two exponent vectors. The set is a GSB as it stands.
#[pyfunction]
fn gk_bicommutative(arity: usize, leading: Vec<(Vec<u32>, Vec<u32>)>) -> PyResult<(u32, usize)> {
    let r = gk_fast_bc_leading(arity, &pairs(arity, leading)?);
    Ok((r.n_s, r.gk))
}

#[pyfunction]
fn gk_bicommutative_oracle(arity: usize, leading: Vec<(Vec<u32>, Vec<u32>)>) -> PyResult<usize> {
    Ok(gk_box_sweep_bc(arity, &pairs(arity, leading)?))
}

/// Normal form `[u; v]` (or a letter) of a parenthesized term.
#[pyfunction]
fn normalize_term(term: &str, vars: Vec<String>) -> PyResult<String> {
    let vars = VarSet::new(vars).map_err(to_py)?;
    let t = parse_term(term, &vars).map_err(to_py)?;
    let nf = t.normalize(vars.len());
    let text = nf.display(&vars).to_string();
    Ok(text)
}

#[pymodule]
fn bicomm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Quotient>()?;
    m.add("BudgetError", m.py().get_type::<BudgetError>())?;
    m.add_function(wrap_pyfunction!(gk_commutative, m)?)?;
    m.add_function(wrap_pyfunction!(gk_commutative_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(gk_bicommutative, m)?)?;
    m.add_function(wrap_pyfunction!(gk_bicommutative_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_term, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_queries() {
        Python::initialize();
        Python::attach(|py| {
            let q = Quotient::new("algebra bicommutative\nvars x1 x2\nrel x2 - x1\n", 100_000).unwrap();
            assert_eq!(q.input_was_gsb(), Some(false));
            let d = q.gk(py).unwrap();
            assert_eq!(d.get_item("gk").unwrap().unwrap().extract::<usize>().unwrap(), 2);
            assert!(q.equal("(x1 x1)", "(x1 x2)").unwrap());
            assert_eq!(q.growth_degree(20).unwrap(), 2);
        });
    }

    #[test]
    fn errors_map_to_exception_types() {
        Python::initialize();
        Python::attach(|py| {
            let e = Quotient::new("algebra commutative\nvars x\nrel x +\n", 10).err().unwrap();
            assert!(e.is_instance_of::<PyValueError>(py));
            let e = Quotient::new("algebra bicommutative\nvars x1 x2\nrel x2 - x1\n", 1).err().unwrap();
            assert!(e.is_instance_of::<BudgetError>(py));
        });
    }

    #[test]
    fn exponent_vectors_are_checked() {
        assert_eq!(gk_commutative(2, vec![vec![1, 0]]).unwrap(), (1, 1));
        assert!(monomials(2, vec![vec![1]]).is_err());
        assert_eq!(gk_bicommutative(1, vec![]).unwrap(), (1, 2));
        assert_eq!(normalize_term("(x1 (x2 x1))", vec!["x1".into(), "x2".into()]).unwrap(), "[x1 x2; x1]");
    }
}
