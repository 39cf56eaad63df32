use std::path::Path;

use num_bigint::BigUint;
use serde_json::Value;

use bicomm_core::bicomm::{gsb_check, parse_term, BcTerm};
use bicomm_core::commutative::DEFAULT_GROWTH_BUDGET;
use bicomm_core::presentation::{parse_bc_expr, parse_com_expr, parse_presentation, Presentation};
use bicomm_core::quotient::{fitted_degree, BcQuotient, ComQuotient};
use bicomm_core::{Error, Result};

use crate::output::{big, CliOutput};
use crate::Flags;

enum Quotient {
    Com(ComQuotient),
    Bc(BcQuotient),
}

fn load(path: &Path, flags: &Flags) -> Result<(Presentation, Quotient)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let p = parse_presentation(&text)?;
    let q = match &p {
        Presentation::Commutative(c) => {
            let mut q = ComQuotient::new(c);
            let order = q.order;
            q.basis.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
            Quotient::Com(q)
        }
        Presentation::Bicommutative(b) => Quotient::Bc(BcQuotient::new(b, flags.max_steps)?),
    };
    Ok((p, q))
}

fn header(out: &mut CliOutput, p: &Presentation) {
    out.put("algebra", p.kind().name());
    out.put("order", p.order_name());
    out.put("vars", p.vars().names().to_vec());
}

pub fn gk(path: &Path, flags: &Flags) -> Result<CliOutput> {
    let (p, q) = load(path, flags)?;
    let mut out = CliOutput::new("gk");
    header(&mut out, &p);
    let vars = p.vars();
    match &q {
        Quotient::Com(q) => {
            let rep = q.gk();
            out.put("basis_size", q.basis.len());
            out.put("c_s", rep.c_s);
            out.put("gk", rep.gk);
            out.put("witness", rep.witness.as_ref().map(|w| w.display(vars).to_string()));
            out.put("candidates", rep.candidate_count);
            if flags.oracle {
                out.oracle("gk", rep.gk, q.gk_oracle());
            }
        }
        Quotient::Bc(q) => {
            let rep = q.gk();
            out.put("input_was_gsb", q.input_was_gsb);
            out.put("basis_size", q.basis.len());
            out.put("completion_steps", q.steps);
            out.put("n_s", rep.n_s);
            out.put("gk", rep.gk);
            out.put("witness", rep.witness.as_ref().map(|w| w.display(vars).to_string()));
            out.put("candidates", rep.candidate_count);
            if flags.oracle {
                out.oracle("gk", rep.gk, q.gk_oracle());
            }
        }
    }
    Ok(out)
}

pub fn gsb(path: &Path, flags: &Flags) -> Result<CliOutput> {
    let (p, q) = load(path, flags)?;
    let mut out = CliOutput::new("gsb");
    header(&mut out, &p);
    let vars = p.vars();
    let (completed, basis) = match &q {
        Quotient::Com(q) => (q.presentation(), q.basis.iter().map(|b| b.display(vars).to_string()).collect::<Vec<_>>()),
        Quotient::Bc(q) => {
            out.put("input_was_gsb", q.input_was_gsb);
            out.put("completion_steps", q.steps);
            (q.presentation(), q.basis.iter().map(|b| b.display(vars).to_string()).collect())
        }
    };
    out.put("basis_size", basis.len());
    out.put("basis", basis);
    let text = completed.to_text();
    out.put("presentation", text.clone());
    if flags.oracle {
        // the emitted presentation must be a fixed point
        let again = parse_presentation(&text)?;
        let fixed = match (&again, &q) {
            (Presentation::Commutative(c), Quotient::Com(q)) => {
                let mut b = ComQuotient::new(c).basis;
                b.sort_by(|x, y| q.order.compare(x.leading_monomial().unwrap(), y.leading_monomial().unwrap()));
                b == q.basis
            }
            (Presentation::Bicommutative(c), Quotient::Bc(q)) => {
                gsb_check(&c.relations, q.arity()).is_complete
                    && BcQuotient::new(c, flags.max_steps)?.basis == q.basis
            }
            _ => false,
        };
        out.oracle("fixed_point", true, fixed);
    }
    out.set_text(text);
    Ok(out)
}

fn com_expr(q: &ComQuotient, text: &str) -> Result<bicomm_core::commutative::ComPolynomial> {
    parse_com_expr(text, &q.vars, q.order)
}

fn bc_expr(q: &BcQuotient, text: &str) -> Result<bicomm_core::bicomm::BcPolynomial> {
    parse_bc_expr(text, &q.vars, q.order)
}

/// Like [`bc_expr`], but also evaluates a lone term by normalizing it
/// directly, as a check on the expression parser.
fn bc_term(q: &BcQuotient, text: &str) -> Option<BcTerm> {
    parse_term(text, &q.vars).ok()
}

pub fn reduce(path: &Path, expr: &str, flags: &Flags) -> Result<CliOutput> {
    let (p, q) = load(path, flags)?;
    let mut out = CliOutput::new("reduce");
    header(&mut out, &p);
    out.put("input", expr);
    let vars = p.vars();
    match &q {
        Quotient::Com(q) => {
            let f = com_expr(q, expr)?;
            out.put("normal_form", q.normal_form(&f).display(vars).to_string());
        }
        Quotient::Bc(q) => {
            let f = bc_expr(q, expr)?;
            let nf = q.normal_form(&f);
            out.put("normal_form", nf.display(vars).to_string());
            if flags.oracle {
                if let Some(t) = bc_term(q, expr) {
                    let direct = bicomm_core::bicomm::BcPolynomial::monomial(q.order, t.normalize(q.arity()));
                    out.oracle("normal_form", nf.display(vars).to_string(), q.normal_form(&direct).display(vars).to_string());
                }
            }
        }
    }
    Ok(out)
}

pub fn eq(path: &Path, lhs: &str, rhs: &str, flags: &Flags) -> Result<CliOutput> {
    let (p, q) = load(path, flags)?;
    let mut out = CliOutput::new("eq");
    header(&mut out, &p);
    out.put("lhs", lhs);
    out.put("rhs", rhs);
    let vars = p.vars();
    let (equal, l, r) = match &q {
        Quotient::Com(q) => {
            let (f, g) = (com_expr(q, lhs)?, com_expr(q, rhs)?);
            (q.equal(&f, &g), q.normal_form(&f).display(vars).to_string(), q.normal_form(&g).display(vars).to_string())
        }
        Quotient::Bc(q) => {
            let (f, g) = (bc_expr(q, lhs)?, bc_expr(q, rhs)?);
            (q.equal(&f, &g), q.normal_form(&f).display(vars).to_string(), q.normal_form(&g).display(vars).to_string())
        }
    };
    out.put("equal", equal);
    out.put("lhs_normal_form", l.clone());
    out.put("rhs_normal_form", r.clone());
    if flags.oracle {
        // normal forms are unique, so equality must match their comparison
        out.oracle("equal", equal, l == r);
    }
    Ok(out)
}

pub fn growth(path: &Path, flags: &Flags) -> Result<CliOutput> {
    let (p, q) = load(path, flags)?;
    let mut out = CliOutput::new("growth");
    header(&mut out, &p);
    let (counts, gk, max_degree) = match &q {
        Quotient::Com(q) => (q.growth(flags.n, DEFAULT_GROWTH_BUDGET)?, q.gk().gk, q.arity() + 1),
        Quotient::Bc(q) => (q.growth(flags.n, DEFAULT_GROWTH_BUDGET)?, q.gk().gk, 2 * q.arity() + 1),
    };
    out.put("n_max", flags.n);
    out.put("counts", counts.iter().enumerate().map(|(n, c)| table_row(n, c)).collect::<Vec<_>>());
    let degree = fitted_degree(&counts, max_degree);
    match &degree {
        Ok(d) => out.put("fitted_degree", *d),
        Err(e) => {
            out.put("fitted_degree", Value::Null);
            out.put("fit_error", e.to_string());
        }
    }
    out.put("gk", gk);
    if flags.oracle {
        out.oracle("fitted_degree", gk, degree.ok());
    }
    Ok(out)
}

fn table_row(n: usize, c: &BigUint) -> Value {
    let mut row = serde_json::Map::new();
    row.insert("n".into(), n.into());
    row.insert("count".into(), big(c));
    Value::Object(row)
}

pub fn irr(path: &Path, flags: &Flags) -> Result<CliOutput> {
    let (p, q) = load(path, flags)?;
    let mut out = CliOutput::new("irr");
    header(&mut out, &p);
    let vars = p.vars();
    let (listed, count) = match &q {
        Quotient::Com(q) => {
            let ms = q.irreducible(flags.maxlen);
            let count = flags.oracle.then(|| q.growth(flags.maxlen.into(), DEFAULT_GROWTH_BUDGET)).transpose()?;
            (ms.iter().map(|m| m.display(vars).to_string()).collect::<Vec<_>>(), count)
        }
        Quotient::Bc(q) => {
            let ms = q.irreducible(flags.maxlen);
            let count = flags.oracle.then(|| q.growth(flags.maxlen.into(), DEFAULT_GROWTH_BUDGET)).transpose()?;
            (ms.iter().map(|m| m.display(vars).to_string()).collect(), count)
        }
    };
    out.put("maxlen", flags.maxlen);
    out.put("count", listed.len());
    out.put("monomials", listed.clone());
    if let Some(counts) = count {
        out.oracle("count", big(&BigUint::from(listed.len())), big(counts.last().unwrap()));
    }
    Ok(out)
}
