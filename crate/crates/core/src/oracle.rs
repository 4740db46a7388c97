//! Independent dimension oracle: exact rank of the ideal's spanning set in
//! each arity, with no use of Gröbner bases.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::context::GradedContext;
use crate::dimensions::{avoiding_monomials, tree_count};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{integer_row, Echelon};
use crate::poly::{normal_form, poly_compose, Coeff, TreePolynomial};
use crate::tree::{enumerate_trees, PlanarTree};

/// The ideal component of arity `n` as a spanning set with its rank.
#[derive(Debug, Clone)]
pub struct IdealSpan {
    pub ctx: GradedContext,
    pub arity: usize,
    /// Spanning vectors of the component, up to scalar duplicates.
    pub vectors: Vec<TreePolynomial>,
    pub rank: usize,
    /// Column order used for the rank computation.
    pub basis_of_t_n: Vec<PlanarTree>,
}

impl IdealSpan {
    pub fn quotient_dim(&self) -> usize {
        self.basis_of_t_n.len() - self.rank
    }
}

/// Spans of every valid arity up to `n_max`. Each level is generated by the
/// relations of that arity and by `x ∘_i t`, `t ∘_j x` for `x` running over
/// an independent subset of the previous level.
pub fn ideal_spans(
    relations: &[TreePolynomial],
    ctx: GradedContext,
    n_max: usize,
    max_vectors: Option<usize>,
) -> Result<Vec<IdealSpan>> {
    if relations.iter().any(|r| r.ctx() != ctx) {
        return Err(Error::ContextMismatch);
    }
    let m = ctx.m();
    let t = TreePolynomial::monomial(ctx, PlanarTree::generator(m)?)?;
    let mut spans = Vec::new();
    let mut prev_independent: Vec<TreePolynomial> = Vec::new();
    let mut n = 1;
    while n <= n_max {
        let columns = enumerate_trees(m, n)?;
        let mut seen: BTreeSet<Vec<(PlanarTree, Coeff)>> = BTreeSet::new();
        let mut vectors = Vec::new();
        let mut push = |v: TreePolynomial, vectors: &mut Vec<TreePolynomial>| -> Result<()> {
            if v.is_zero() {
                return Ok(());
            }
            let key: Vec<_> = v.monic().terms().map(|(k, c)| (k.clone(), c.clone())).collect();
            if seen.insert(key) {
                if max_vectors.is_some_and(|cap| vectors.len() >= cap) {
                    return Err(Error::SpanLimit(max_vectors.unwrap_or_default()));
                }
                vectors.push(v);
            }
            Ok(())
        };
        for r in relations.iter().filter(|r| r.arity() == Some(n)) {
            push(r.clone(), &mut vectors)?;
        }
        for x in &prev_independent {
            let a = x.arity().unwrap_or(0);
            for i in 1..=a {
                push(poly_compose(x, i, &t)?, &mut vectors)?;
            }
            for j in 1..=m {
                push(poly_compose(&t, j, x)?, &mut vectors)?;
            }
        }
        let mut echelon = Echelon::new();
        let mut independent = Vec::new();
        for v in &vectors {
            let row = integer_row(v.terms().map(|(k, c)| (columns.binary_search(k).expect("tree of arity n"), c)));
            if echelon.insert(row) {
                independent.push(v.clone());
            }
        }
        spans.push(IdealSpan { ctx, arity: n, vectors, rank: echelon.rank(), basis_of_t_n: columns });
        prev_independent = independent;
        n += m - 1;
    }
    Ok(spans)
}

/// The ideal component of arity `n`.
pub fn ideal_span(relations: &[TreePolynomial], ctx: GradedContext, n: usize) -> Result<IdealSpan> {
    ctx.weight_of_arity(n).ok_or(Error::InvalidArity { arity: n, step: ctx.m() - 1 })?;
    Ok(ideal_spans(relations, ctx, n, None)?.pop().expect("n is a valid arity"))
}

/// `|T(n)| - rank` of the ideal component.
pub fn quotient_dim(relations: &[TreePolynomial], ctx: GradedContext, n: usize) -> Result<usize> {
    Ok(ideal_span(relations, ctx, n)?.quotient_dim())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArityCheck {
    pub arity: usize,
    pub weight: usize,
    pub trees: u128,
    pub oracle_dim: usize,
    /// Monomials avoiding every leading monomial of the basis.
    pub basis_dim: usize,
    pub vectors: usize,
    /// Spanning vectors whose normal form is nonzero.
    pub nonreducing: usize,
}

impl ArityCheck {
    pub fn agrees(&self) -> bool {
        self.oracle_dim == self.basis_dim && self.nonreducing == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub checks: Vec<ArityCheck>,
}

impl CrossValidation {
    pub fn agrees(&self) -> bool {
        self.checks.iter().all(ArityCheck::agrees)
    }

    pub fn first_mismatch(&self) -> Option<&ArityCheck> {
        self.checks.iter().find(|c| !c.agrees())
    }
}

/// Compares the basis against the oracle in every arity up to `n_max`.
pub fn cross_validate(basis: &GroebnerBasis, relations: &[TreePolynomial], n_max: usize) -> Result<CrossValidation> {
    let gens = basis.gens();
    cross_validate_with(basis, relations, n_max, None, &|vectors| {
        vectors.iter().map(|v| normal_form(v, gens).map(|r| r.is_zero())).collect()
    })
}

/// As [`cross_validate`], with a caller-supplied test deciding for each
/// spanning vector whether it reduces to zero.
pub fn cross_validate_with(
    basis: &GroebnerBasis,
    relations: &[TreePolynomial],
    n_max: usize,
    max_vectors: Option<usize>,
    reduces: &dyn Fn(&[TreePolynomial]) -> Result<Vec<bool>>,
) -> Result<CrossValidation> {
    let ctx = basis.ctx();
    let leading = basis.leading_monomials();
    let mut checks = Vec::new();
    for span in ideal_spans(relations, ctx, n_max, max_vectors)? {
        let weight = ctx.weight_of_arity(span.arity).expect("valid arity");
        let basis_dim = avoiding_monomials(ctx.m(), &leading, span.arity)?.len();
        let nonreducing = reduces(&span.vectors)?.iter().filter(|ok| !**ok).count();
        checks.push(ArityCheck {
            arity: span.arity,
            weight,
            trees: tree_count(ctx.m(), weight),
            oracle_dim: span.quotient_dim(),
            basis_dim,
            vectors: span.vectors.len(),
            nonreducing,
        });
    }
    Ok(CrossValidation { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::presets::{self, EVEN_TERNARY as EVEN, ODD_TERNARY as ODD};

    #[test]
    fn arity_seven_ranks() {
        let even = ideal_span(&[presets::alpha(EVEN)], EVEN, 7).unwrap();
        assert_eq!((even.rank, even.basis_of_t_n.len()), (8, 12));
        let odd = ideal_span(&[presets::alpha(ODD)], ODD, 7).unwrap();
        assert_eq!((odd.rank, odd.quotient_dim()), (7, 5));
    }

    #[test]
    fn arity_nine_even() {
        assert_eq!(quotient_dim(&[presets::alpha(EVEN)], EVEN, 9).unwrap(), 5);
    }

    #[test]
    fn odd_self_composites_are_dependent() {
        let span = ideal_span(&[presets::alpha(ODD)], ODD, 7).unwrap();
        assert_eq!(span.vectors.len(), 8);
        assert_eq!(span.rank, 7);
    }

    #[test]
    fn full_basis_agrees() {
        let gb = buchberger(&[presets::alpha(EVEN)], EVEN, 15).unwrap();
        let report = cross_validate(&gb, &[presets::alpha(EVEN)], 11).unwrap();
        assert!(report.agrees(), "{report:?}");
    }

    #[test]
    fn truncated_basis_disagrees() {
        let raw = GroebnerBasis::from_generators(EVEN, alloc::vec![presets::alpha(EVEN)]).unwrap();
        let report = cross_validate(&raw, &[presets::alpha(EVEN)], 7).unwrap();
        let bad = report.first_mismatch().unwrap();
        assert_eq!((bad.arity, bad.oracle_dim, bad.basis_dim), (7, 4, 5));
    }

    #[test]
    fn span_limit() {
        assert_eq!(
            ideal_spans(&[presets::alpha(EVEN)], EVEN, 9, Some(4)).unwrap_err(),
            Error::SpanLimit(4)
        );
    }
}
