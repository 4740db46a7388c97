//! Normal monomials and the dimension series of the quotient.

use alloc::vec::Vec;

use crate::context::GradedContext;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::occurrence::matches_at;
use crate::tree::{enumerate_by_weight, weight_for_arity, PlanarTree};

/// Trees of every weight up to `max_weight` avoiding all of `leading`.
pub fn avoiding_by_weight(m: usize, leading: &[PlanarTree], max_weight: usize) -> Vec<Vec<PlanarTree>> {
    enumerate_by_weight(m, max_weight, |tree| !leading.iter().any(|lm| matches_at(tree, lm, 0)))
}

/// Trees of arity `n` containing no occurrence of any of `leading`,
/// ascending in path-lex. No certificate is needed or checked.
pub fn avoiding_monomials(m: usize, leading: &[PlanarTree], n: usize) -> Result<Vec<PlanarTree>> {
    let w = weight_for_arity(m, n)?;
    Ok(avoiding_by_weight(m, leading, w).pop().unwrap_or_default())
}

/// Normal monomials of arity `n` with respect to a certified basis.
pub fn normal_monomials(basis: &GroebnerBasis, n: usize) -> Result<Vec<PlanarTree>> {
    if !basis.certifies_arity(n) {
        return Err(Error::IncompleteBasis { checked: basis.checked_bound(), requested: n });
    }
    avoiding_monomials(basis.ctx().m(), &basis.leading_monomials(), n)
}

/// Number of planar `m`-ary trees with `w` internal vertices, saturating at
/// `u128::MAX`.
pub fn tree_count(m: usize, w: usize) -> u128 {
    // c(x) = 1 + x c(x)^m, coefficients up to x^w
    let mut c = alloc::vec![0u128; w + 1];
    c[0] = 1;
    for k in 1..=w {
        // coefficient of x^(k-1) in c^m, using c[0..k]
        let mut pow = alloc::vec![0u128; k];
        pow[0] = 1;
        for _ in 0..m {
            let mut next = alloc::vec![0u128; k];
            for (i, &a) in pow.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in c[..k - i].iter().enumerate() {
                    next[i + j] = next[i + j].saturating_add(a.saturating_mul(b));
                }
            }
            pow = next;
        }
        c[k] = pow[k - 1];
    }
    c[w]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionRecord {
    pub arity: usize,
    pub weight: usize,
    /// `|T(n)|`.
    pub trees: u128,
    /// Number of normal monomials.
    pub dim: usize,
    pub monomials: Option<Vec<PlanarTree>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub ctx: GradedContext,
    pub records: Vec<DimensionRecord>,
}

impl DimensionReport {
    pub fn dims(&self) -> Vec<usize> {
        self.records.iter().map(|r| r.dim).collect()
    }
}

/// Dimensions for every valid arity `n <= n_max`, optionally listing the
/// normal monomials.
pub fn dimension_series(basis: &GroebnerBasis, n_max: usize, list: bool) -> Result<DimensionReport> {
    let ctx = basis.ctx();
    let top = (1..=n_max).rev().find(|&n| ctx.valid_arity(n));
    if let Some(n) = top {
        if !basis.certifies_arity(n) {
            return Err(Error::IncompleteBasis { checked: basis.checked_bound(), requested: n });
        }
    }
    let max_weight = top.and_then(|n| ctx.weight_of_arity(n));
    let levels = match max_weight {
        Some(w) => avoiding_by_weight(ctx.m(), &basis.leading_monomials(), w),
        None => Vec::new(),
    };
    let records = levels
        .into_iter()
        .enumerate()
        .map(|(w, trees)| DimensionRecord {
            arity: ctx.arity_of_weight(w),
            weight: w,
            trees: tree_count(ctx.m(), w),
            dim: trees.len(),
            monomials: list.then_some(trees),
        })
        .collect();
    Ok(DimensionReport { ctx, records })
}

/// `M_0` is the leaf, `M_1 = t` and `M_l = t ∘_2 M_(l-1)`.
pub fn comb_monomial(ctx: GradedContext, l: usize) -> Result<PlanarTree> {
    let m = ctx.m();
    let t = PlanarTree::generator(m)?;
    let mut comb = PlanarTree::leaf(m)?;
    for _ in 0..l {
        comb = t.compose(2, &comb)?;
    }
    Ok(comb)
}

/// The normal monomials `f_1, ..., f_(k+1)` of weight `k >= 3` for the even
/// ternary basis, in index order.
pub fn even_basis_family(k: usize) -> Result<Vec<PlanarTree>> {
    if k < 3 {
        return Err(Error::WeightTooSmall { min: 3, got: k });
    }
    let ctx = crate::presets::EVEN_TERNARY;
    let t = PlanarTree::generator(3)?;
    let comb = |l: usize| comb_monomial(ctx, l);
    let t3t3 = |l: usize| -> Result<PlanarTree> { t.compose(3, &t.compose(3, &comb(l)?)?) };
    let mut out = Vec::with_capacity(k + 1);
    out.push(t3t3(k - 2)?);
    out.push(t.compose(3, &comb(k - 1)?)?);
    for i in 3..=k {
        out.push(t3t3(k - i)?.compose(2, &comb(i - 2)?)?);
    }
    out.push(comb(k)?);
    Ok(out)
}
