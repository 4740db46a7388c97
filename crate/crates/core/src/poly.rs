//! Tree polynomials with exact rational coefficients.
//!
//! A monomial stands for the product of its generators taken in preorder.
//! Every composition or substitution that produces a tree whose preorder
//! differs from the naive concatenation of its pieces picks up the Koszul
//! sign of that reordering; in an even context all such signs are `+1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::context::GradedContext;
use crate::error::{Error, Result};
use crate::occurrence::{first_occurrence_anchor, Occurrence};
use crate::tree::PlanarTree;

pub type Coeff = BigRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreePolynomial {
    ctx: GradedContext,
    terms: BTreeMap<PlanarTree, Coeff>,
}

impl TreePolynomial {
    pub fn zero(ctx: GradedContext) -> Self {
        TreePolynomial { ctx, terms: BTreeMap::new() }
    }

    pub fn monomial(ctx: GradedContext, tree: PlanarTree) -> Result<Self> {
        Self::from_terms(ctx, [(tree, Coeff::one())])
    }

    /// Sums the given terms. All trees must share the context's branching
    /// arity and one common arity.
    pub fn from_terms<I>(ctx: GradedContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PlanarTree, Coeff)>,
    {
        let mut poly = TreePolynomial::zero(ctx);
        let mut arity = None;
        for (tree, c) in terms {
            if tree.m() != ctx.m() {
                return Err(Error::MismatchedBranching(ctx.m(), tree.m()));
            }
            match arity {
                None => arity = Some(tree.arity()),
                Some(a) if a != tree.arity() => return Err(Error::ArityMismatch(a, tree.arity())),
                _ => {}
            }
            poly.add_term(tree, c);
        }
        Ok(poly)
    }

    pub fn ctx(&self) -> GradedContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common arity of the terms, `None` for the zero polynomial.
    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(PlanarTree::arity)
    }

    pub fn weight(&self) -> Option<usize> {
        self.terms.keys().next().map(PlanarTree::weight)
    }

    /// Terms in ascending path-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PlanarTree, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, tree: &PlanarTree) -> Option<&Coeff> {
        self.terms.get(tree)
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &PlanarTree> {
        self.terms.keys()
    }

    /// Leading monomial and coefficient.
    pub fn leading(&self) -> Result<(&PlanarTree, &Coeff)> {
        self.terms.last_key_value().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&PlanarTree> {
        self.terms.last_key_value().map(|(t, _)| t)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> TreePolynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> TreePolynomial {
        if c.is_zero() {
            return TreePolynomial::zero(self.ctx);
        }
        TreePolynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    /// Adds `c·tree`, dropping the term if it cancels.
    pub(crate) fn add_term(&mut self, tree: PlanarTree, c: Coeff) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.arity().is_none_or(|a| a == tree.arity()));
        match self.terms.entry(tree) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·other`.
    pub(crate) fn add_scaled(&mut self, other: &TreePolynomial, c: &Coeff) {
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    fn check_ctx(&self, other: &TreePolynomial) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        match (self.arity(), other.arity()) {
            (Some(a), Some(b)) if a != b => Err(Error::ArityMismatch(a, b)),
            _ => Ok(()),
        }
    }

    pub fn checked_add(&self, other: &TreePolynomial) -> Result<TreePolynomial> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TreePolynomial) -> Result<TreePolynomial> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        Ok(out)
    }
}

/// Panics on mismatched contexts or arities; use [`TreePolynomial::checked_add`]
/// to get an error instead.
impl Add for &TreePolynomial {
    type Output = TreePolynomial;
    fn add(self, rhs: &TreePolynomial) -> TreePolynomial {
        self.checked_add(rhs).expect("compatible polynomials")
    }
}

impl Sub for &TreePolynomial {
    type Output = TreePolynomial;
    fn sub(self, rhs: &TreePolynomial) -> TreePolynomial {
        self.checked_sub(rhs).expect("compatible polynomials")
    }
}

impl Neg for &TreePolynomial {
    type Output = TreePolynomial;
    fn neg(self) -> TreePolynomial {
        self.scale(&-Coeff::one())
    }
}

impl Mul<&Coeff> for &TreePolynomial {
    type Output = TreePolynomial;
    fn mul(self, rhs: &Coeff) -> TreePolynomial {
        self.scale(rhs)
    }
}

/// Number of internal vertices after each leaf, in preorder.
fn internal_after_leaves(tree: &PlanarTree) -> Vec<usize> {
    let mut remaining = tree.weight();
    let mut out = Vec::with_capacity(tree.arity());
    for &b in tree.shape() {
        if b == 1 {
            remaining -= 1;
        } else {
            out.push(remaining);
        }
    }
    out
}

/// The sign σ with `p ∘_i q = σ · (p ∘_i q as a canonical monomial)`.
pub fn koszul_compose_sign(ctx: GradedContext, p: &PlanarTree, i: usize, q: &PlanarTree) -> Result<i8> {
    if i == 0 || i > p.arity() {
        return Err(Error::LeafIndex { index: i, arity: p.arity() });
    }
    if !ctx.is_odd() || q.weight().is_multiple_of(2) {
        return Ok(1);
    }
    Ok(if p.internal_after_leaf(i).is_multiple_of(2) { 1 } else { -1 })
}

fn signed(c: Coeff, negative: bool) -> Coeff {
    if negative {
        -c
    } else {
        c
    }
}

/// Bilinear partial composition `f ∘_i g` with Koszul signs.
pub fn poly_compose(f: &TreePolynomial, i: usize, g: &TreePolynomial) -> Result<TreePolynomial> {
    if f.ctx != g.ctx {
        return Err(Error::ContextMismatch);
    }
    let ctx = f.ctx;
    let mut out = TreePolynomial::zero(ctx);
    if let Some(a) = f.arity() {
        if i == 0 || i > a {
            return Err(Error::LeafIndex { index: i, arity: a });
        }
    }
    for (p, a) in f.terms() {
        let after = if ctx.is_odd() { p.internal_after_leaf(i) } else { 0 };
        for (q, b) in g.terms() {
            let negative = ctx.is_odd() && q.weight() % 2 == 1 && after % 2 == 1;
            out.add_term(p.compose(i, q)?, signed(a * b, negative));
        }
    }
    Ok(out)
}

/// `M(host, p, f)`: replaces the occurrence of its pattern `p` in `host` by
/// `f`, keeping the hanging subtrees and the surrounding context in place.
pub fn substitute(host: &PlanarTree, occ: &Occurrence, f: &TreePolynomial) -> Result<TreePolynomial> {
    if occ.host() != host {
        return Err(Error::OccurrenceMismatch);
    }
    let ctx = f.ctx;
    if host.m() != ctx.m() {
        return Err(Error::MismatchedBranching(ctx.m(), host.m()));
    }
    let pattern = occ.pattern();
    if let Some(a) = f.arity() {
        if a != pattern.arity() {
            return Err(Error::ArityMismatch(pattern.arity(), a));
        }
    }
    let hs = host.shape();
    let span = occ.span();
    let branches = occ.branches();

    // Koszul bookkeeping: sign = Σ_k |S_k|·(d_p(k) + d_r(k)) where S_k hangs
    // at leaf k and d_x(k) counts internal vertices after leaf k in x.
    let odd_branches: Vec<bool> = if ctx.is_odd() {
        occ.branch_weights().iter().map(|w| w % 2 == 1).collect()
    } else {
        Vec::new()
    };
    let pattern_parity = if ctx.is_odd() { parity_against(&odd_branches, &internal_after_leaves(pattern)) } else { 0 };

    let mut out = TreePolynomial::zero(ctx);
    for (r, c) in f.terms() {
        let mut shape = Vec::with_capacity(hs.len() + r.shape().len());
        shape.extend_from_slice(&hs[..span.start]);
        let mut leaf = 0;
        for &b in r.shape() {
            if b == 1 {
                shape.push(1);
            } else {
                shape.extend_from_slice(&hs[branches[leaf].clone()]);
                leaf += 1;
            }
        }
        shape.extend_from_slice(&hs[span.end..]);
        let negative = ctx.is_odd() && (pattern_parity + parity_against(&odd_branches, &internal_after_leaves(r))) % 2 == 1;
        out.add_term(PlanarTree::from_shape_unchecked(host.m(), shape), signed(c.clone(), negative));
    }
    Ok(out)
}

fn parity_against(odd_branches: &[bool], after: &[usize]) -> usize {
    odd_branches.iter().zip(after).filter(|(&odd, &d)| odd && d % 2 == 1).count() % 2
}

/// Eliminates the term `c·mono` of `f` using `g`, where `ℓm(g)` occurs in
/// `mono`; the occurrence with the smallest anchor is used.
fn eliminate(f: &mut TreePolynomial, mono: &PlanarTree, g: &TreePolynomial) -> Result<()> {
    let (lm, lc) = g.leading()?;
    let anchor = first_occurrence_anchor(lm, mono).ok_or_else(|| Error::NotDivisible {
        divisor: alloc::format!("{lm}"),
        dividend: alloc::format!("{mono}"),
    })?;
    let occ = Occurrence::at(mono, lm, anchor).expect("anchor found by matcher");
    let c = f.coeff(mono).cloned().unwrap_or_else(Coeff::zero);
    let m = substitute(mono, &occ, g)?;
    f.add_scaled(&m, &(-(c / lc)));
    Ok(())
}

/// `R(f, g) = f − (ℓc(f)/ℓc(g))·M(ℓm(f), ℓm(g), g)`.
pub fn reduce_once(f: &TreePolynomial, g: &TreePolynomial) -> Result<TreePolynomial> {
    if f.ctx != g.ctx {
        return Err(Error::ContextMismatch);
    }
    let (lm, _) = f.leading()?;
    let lm = lm.clone();
    let mut out = f.clone();
    eliminate(&mut out, &lm, g)?;
    Ok(out)
}

/// Index of the first basis element whose leading monomial divides `mono`.
pub(crate) fn find_divisor(mono: &PlanarTree, basis: &[TreePolynomial]) -> Option<usize> {
    basis.iter().position(|g| {
        g.leading_monomial().is_some_and(|lm| lm.weight() <= mono.weight() && first_occurrence_anchor(lm, mono).is_some())
    })
}

/// Fully reduces `f` by `basis`: repeatedly eliminates the greatest monomial
/// divisible by some leading monomial, trying basis elements in list order.
pub fn normal_form(f: &TreePolynomial, basis: &[TreePolynomial]) -> Result<TreePolynomial> {
    if basis.iter().any(|g| g.ctx != f.ctx) {
        return Err(Error::ContextMismatch);
    }
    let mut out = f.clone();
    // monomials at or above `ceiling` are already irreducible
    let mut ceiling: Option<PlanarTree> = None;
    loop {
        let next = {
            let below = match &ceiling {
                Some(c) => out.terms.range(..c.clone()),
                None => out.terms.range(..),
            };
            below
                .rev()
                .find_map(|(mono, _)| find_divisor(mono, basis).map(|k| (mono.clone(), k)))
        };
        match next {
            Some((mono, k)) => {
                eliminate(&mut out, &mono, &basis[k])?;
                ceiling = Some(mono);
            }
            None => return Ok(out),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::occurrence::find_occurrences;
    use crate::presets;
    use alloc::string::ToString;

    fn t() -> PlanarTree {
        PlanarTree::generator(3).unwrap()
    }

    fn tree(s: &str) -> PlanarTree {
        crate::notation::parse_tree(3, s).unwrap()
    }

    fn poly(ctx: GradedContext, s: &str) -> TreePolynomial {
        crate::notation::parse_poly(ctx, s).unwrap()
    }

    const EVEN: GradedContext = presets::EVEN_TERNARY;
    const ODD: GradedContext = presets::ODD_TERNARY;

    #[test]
    fn even_signs_are_trivial() {
        let p = tree("(*(***)*)");
        for i in 1..=5 {
            assert_eq!(koszul_compose_sign(EVEN, &p, i, &t()), Ok(1));
        }
    }

    #[test]
    fn odd_sign_examples() {
        let leaf = PlanarTree::leaf(3).unwrap();
        assert_eq!(koszul_compose_sign(ODD, &tree("(*(***)*)"), 1, &leaf), Ok(1));
        // (t∘2t)∘5t = −(t∘3t)∘2t
        let tm = TreePolynomial::monomial(ODD, t()).unwrap();
        let lhs = poly_compose(&poly_compose(&tm, 2, &tm).unwrap(), 5, &tm).unwrap();
        let rhs = poly_compose(&poly_compose(&tm, 3, &tm).unwrap(), 2, &tm).unwrap();
        assert_eq!(lhs, -&rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn compose_with_zero() {
        let tm = TreePolynomial::monomial(EVEN, t()).unwrap();
        let z = TreePolynomial::zero(EVEN);
        assert!(poly_compose(&z, 1, &tm).unwrap().is_zero());
        assert!(poly_compose(&tm, 1, &z).unwrap().is_zero());
    }

    #[test]
    fn alpha_composed_with_generator() {
        let alpha = presets::alpha(EVEN);
        let tm = TreePolynomial::monomial(EVEN, t()).unwrap();
        let got = poly_compose(&alpha, 1, &tm).unwrap();
        assert_eq!(got, poly(EVEN, "(((***)**)**) + ((***)(***)*) + ((***)*(***))"));
    }

    #[test]
    fn leading_terms() {
        let (lm, lc) = presets::alpha(EVEN).leading().map(|(a, b)| (a.clone(), b.clone())).unwrap();
        assert_eq!(lm.to_string(), "((***)**)");
        assert!(lc.is_one());
        let (lm, _) = presets::beta(EVEN).leading().map(|(a, b)| (a.clone(), b.clone())).unwrap();
        assert_eq!(lm.to_string(), "(*(**(***))*)");
        let p = poly(EVEN, "-3/2*(*(***)*)");
        assert_eq!(p.leading().unwrap().1, &Coeff::new((-3).into(), 2.into()));
        assert_eq!(TreePolynomial::zero(EVEN).leading(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn substitution_on_self_scm() {
        let host = tree("(((***)**)**)");
        let alpha = presets::alpha(EVEN);
        let occs = find_occurrences(alpha.leading_monomial().unwrap(), &host).unwrap();
        let tm = TreePolynomial::monomial(EVEN, t()).unwrap();
        let root = substitute(&host, &occs[0], &alpha).unwrap();
        assert_eq!(root, poly_compose(&alpha, 1, &tm).unwrap());
        let inner = substitute(&host, &occs[1], &alpha).unwrap();
        assert_eq!(inner, poly_compose(&tm, 1, &alpha).unwrap());
        assert_eq!(inner, poly(EVEN, "(((***)**)**) + ((*(***)*)**) + ((**(***))**)"));
    }

    #[test]
    fn identity_substitution() {
        for ctx in [EVEN, ODD] {
            let host = tree("(*((***)(***)*)(***))");
            for occ in find_occurrences(&t(), &host).unwrap() {
                let mono = TreePolynomial::monomial(ctx, t()).unwrap();
                assert_eq!(substitute(&host, &occ, &mono).unwrap(), TreePolynomial::monomial(ctx, host.clone()).unwrap());
            }
        }
    }

    #[test]
    fn substitution_arity_mismatch() {
        let host = tree("(((***)**)**)");
        let occ = find_occurrences(&t(), &host).unwrap().remove(0);
        assert_eq!(substitute(&host, &occ, &presets::alpha(EVEN)), Err(Error::ArityMismatch(3, 5)));
    }

    #[test]
    fn rewrite_rules() {
        let alpha = presets::alpha(EVEN);
        let beta = presets::beta(EVEN);
        let lm_a = TreePolynomial::monomial(EVEN, tree("((***)**)")).unwrap();
        assert_eq!(reduce_once(&lm_a, &alpha).unwrap(), poly(EVEN, "-(*(***)*) - (**(***))"));
        let lm_b = TreePolynomial::monomial(EVEN, tree("(*(**(***))*)")).unwrap();
        assert_eq!(reduce_once(&lm_b, &beta).unwrap(), poly(EVEN, "-(**(*(***)*)) - (**(**(***)))"));
        assert!(reduce_once(&alpha, &alpha).unwrap().is_zero());
        assert!(matches!(reduce_once(&alpha, &beta), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn normal_form_of_self_s_polynomial() {
        for (ctx, expect_zero) in [(EVEN, false), (ODD, true)] {
            let alpha = presets::alpha(ctx);
            let tm = TreePolynomial::monomial(ctx, t()).unwrap();
            let s = &poly_compose(&alpha, 1, &tm).unwrap() - &poly_compose(&tm, 1, &alpha).unwrap();
            let nf = normal_form(&s, core::slice::from_ref(&alpha)).unwrap();
            if expect_zero {
                assert!(nf.is_zero(), "odd: {nf}");
            } else {
                assert_eq!(nf, presets::beta(ctx).scale(&Coeff::from_integer((-2).into())));
            }
        }
        let f = presets::alpha(EVEN);
        assert_eq!(normal_form(&f, &[]).unwrap(), f);
    }

    #[test]
    fn context_mismatch() {
        let a = presets::alpha(EVEN);
        let b = presets::alpha(ODD);
        assert_eq!(poly_compose(&a, 1, &b), Err(Error::ContextMismatch));
        assert_eq!(normal_form(&a, &[b]), Err(Error::ContextMismatch));
    }
}
