//! JSON shapes and text rendering.

use operad_gb_core::{ArityCheck, CrossValidation, DimensionRecord, GroebnerBasis, TreePolynomial};
use serde::Serialize;

#[derive(Serialize)]
pub struct Term {
    pub coeff: String,
    pub tree: String,
}

#[derive(Serialize)]
pub struct Generator {
    pub terms: Vec<Term>,
}

#[derive(Serialize)]
pub struct Dim {
    pub arity: usize,
    pub weight: usize,
    pub trees: u128,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct BasisReport {
    pub m: usize,
    pub parity: String,
    pub generators: Vec<Generator>,
    pub complete_up_to_arity: usize,
    pub complete: bool,
    pub deferred_pairs: usize,
    pub dims: Vec<Dim>,
}

#[derive(Serialize)]
pub struct Check {
    pub arity: usize,
    pub weight: usize,
    pub trees: u128,
    pub oracle_dim: usize,
    pub basis_dim: usize,
    pub vectors: usize,
    pub nonreducing: usize,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub m: usize,
    pub parity: String,
    pub agrees: bool,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
pub struct ReduceReport {
    pub input: Generator,
    pub normal_form: Generator,
}

/// Terms in descending order, leading term first.
pub fn generator(f: &TreePolynomial) -> Generator {
    Generator {
        terms: f
            .terms()
            .rev()
            .map(|(t, c)| Term { coeff: format!("{}/{}", c.numer(), c.denom()), tree: t.to_string() })
            .collect(),
    }
}

pub fn basis_report(gb: &GroebnerBasis, dims: &[DimensionRecord]) -> BasisReport {
    let ctx = gb.ctx();
    BasisReport {
        m: ctx.m(),
        parity: ctx.parity().to_string(),
        generators: gb.gens().iter().map(generator).collect(),
        complete_up_to_arity: gb.checked_bound(),
        complete: gb.is_complete(),
        deferred_pairs: gb.deferred_pairs(),
        dims: dims
            .iter()
            .map(|r| Dim {
                arity: r.arity,
                weight: r.weight,
                trees: r.trees,
                dim: r.dim,
                monomials: r.monomials.as_ref().map(|ms| ms.iter().map(ToString::to_string).collect()),
            })
            .collect(),
    }
}

fn check(c: &ArityCheck) -> Check {
    Check {
        arity: c.arity,
        weight: c.weight,
        trees: c.trees,
        oracle_dim: c.oracle_dim,
        basis_dim: c.basis_dim,
        vectors: c.vectors,
        nonreducing: c.nonreducing,
        agrees: c.agrees(),
    }
}

pub fn verify_report(gb: &GroebnerBasis, cv: &CrossValidation) -> VerifyReport {
    VerifyReport {
        m: gb.ctx().m(),
        parity: gb.ctx().parity().to_string(),
        agrees: cv.agrees(),
        checks: cv.checks.iter().map(check).collect(),
    }
}

pub fn certificate_line(gb: &GroebnerBasis) -> String {
    if gb.is_complete() {
        "complete: every S-polynomial reduces to 0".to_string()
    } else if gb.complete_below_bound() {
        format!(
            "complete up to arity {}; {} SCMs above the bound unchecked",
            gb.checked_bound(),
            gb.deferred_pairs()
        )
    } else {
        format!("incomplete: certified only up to arity {}", gb.checked_bound())
    }
}

pub fn basis_text(gb: &GroebnerBasis) -> String {
    let ctx = gb.ctx();
    let n = gb.gens().len();
    let noun = if n == 1 { "generator" } else { "generators" };
    let mut out = format!("# m = {}, parity = {}, {n} {noun}\n", ctx.m(), ctx.parity());
    for (k, g) in gb.gens().iter().enumerate() {
        let lm = g.leading_monomial().map(ToString::to_string).unwrap_or_default();
        out += &format!("g{}  [lm {lm}]  {g}\n", k + 1);
    }
    out += &format!("# {}\n", certificate_line(gb));
    out
}

pub fn dims_text(dims: &[DimensionRecord]) -> String {
    let mut out = format!("{:>6} {:>6} {:>12} {:>8}\n", "arity", "weight", "trees", "dim");
    for r in dims {
        out += &format!("{:>6} {:>6} {:>12} {:>8}\n", r.arity, r.weight, r.trees, r.dim);
        for m in r.monomials.iter().flatten() {
            out += &format!("    {m}\n");
        }
    }
    out
}

pub fn verify_text(cv: &CrossValidation) -> String {
    let mut out = format!(
        "{:>6} {:>12} {:>8} {:>8} {:>8} {:>8}\n",
        "arity", "trees", "oracle", "basis", "vectors", "stuck"
    );
    for c in &cv.checks {
        out += &format!(
            "{:>6} {:>12} {:>8} {:>8} {:>8} {:>8}  {}\n",
            c.arity,
            c.trees,
            c.oracle_dim,
            c.basis_dim,
            c.vectors,
            c.nonreducing,
            if c.agrees() { "ok" } else { "MISMATCH" }
        );
    }
    out += if cv.agrees() { "PASS\n" } else { "FAIL\n" };
    out
}
