//! S-polynomials, Buchberger completion and basis verification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::context::GradedContext;
use crate::error::{Error, Result};
use crate::occurrence::{enumerate_scms, Scm};
use crate::poly::{normal_form, substitute, TreePolynomial};
use crate::tree::PlanarTree;

/// A monic, inter-reduced generating set plus the arity range over which
/// the S-polynomial criterion has been checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: GradedContext,
    gens: Vec<TreePolynomial>,
    checked_bound: usize,
    complete_below_bound: bool,
    deferred_pairs: usize,
    history: Vec<CompletionStep>,
}

/// One insertion made during completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionStep {
    /// Arity of the SCM whose S-polynomial produced the element.
    pub scm_arity: usize,
    /// The monic normal form that was added.
    pub added: TreePolynomial,
    /// Leading monomials of the basis just before the insertion.
    pub leading_before: Vec<PlanarTree>,
}

impl GroebnerBasis {
    /// Wraps generators without any certificate. Generators are made monic
    /// and sorted; run [`GroebnerBasis::certify`] to check the criterion.
    pub fn from_generators(ctx: GradedContext, gens: Vec<TreePolynomial>) -> Result<Self> {
        if gens.iter().any(|g| g.ctx() != ctx) {
            return Err(Error::ContextMismatch);
        }
        let mut gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
        sort_by_leading(&mut gens);
        Ok(GroebnerBasis {
            ctx,
            gens,
            checked_bound: 0,
            complete_below_bound: false,
            deferred_pairs: 0,
            history: Vec::new(),
        })
    }

    pub fn ctx(&self) -> GradedContext {
        self.ctx
    }

    /// Generators ascending by (arity, path-lex of the leading monomial).
    pub fn gens(&self) -> &[TreePolynomial] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> Vec<PlanarTree> {
        self.gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    /// Every S-polynomial from an SCM of arity at most this value reduces to 0.
    pub fn checked_bound(&self) -> usize {
        self.checked_bound
    }

    /// Whether every pending pair within the arity bound was processed.
    pub fn complete_below_bound(&self) -> bool {
        self.complete_below_bound
    }

    /// SCMs of the final basis lying above the arity bound, left unchecked.
    pub fn deferred_pairs(&self) -> usize {
        self.deferred_pairs
    }

    /// True when the criterion holds for every SCM of the basis, so it is a
    /// Gröbner basis in all arities.
    pub fn is_complete(&self) -> bool {
        self.complete_below_bound && self.deferred_pairs == 0
    }

    /// Whether normal monomials of arity `n` are guaranteed to span the quotient.
    pub fn certifies_arity(&self, n: usize) -> bool {
        self.is_complete() || (self.complete_below_bound && n <= self.checked_bound)
    }

    pub fn history(&self) -> &[CompletionStep] {
        &self.history
    }

    /// Checks the S-polynomial criterion up to `arity_bound` and records the
    /// outcome as this basis' certificate.
    pub fn certify(&mut self, arity_bound: usize) -> Result<GroebnerReport> {
        let report = is_groebner(self, arity_bound)?;
        self.complete_below_bound = report.holds;
        self.checked_bound = if report.holds { arity_bound } else { 0 };
        self.deferred_pairs = report.deferred_pairs;
        Ok(report)
    }
}

fn sort_by_leading(gens: &mut [TreePolynomial]) {
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
}

/// `S = M(X, ℓm g, g) − M(X, ℓm h, h)` for the SCM `X` of `ℓm g` and `ℓm h`.
pub fn s_polynomial(scm: &Scm, g: &TreePolynomial, h: &TreePolynomial) -> Result<TreePolynomial> {
    let (lg, lh) = match (g.leading_monomial(), h.leading_monomial()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    if scm.occ_left.pattern() != lg || scm.occ_right.pattern() != lh {
        return Err(Error::OccurrenceMismatch);
    }
    let left = substitute(&scm.tree, &scm.occ_left, g)?;
    let right = substitute(&scm.tree, &scm.occ_right, h)?;
    left.checked_sub(&right)
}

/// Monic, pairwise fully reduced generators spanning the same ideal
/// components, sorted by leading monomial.
pub fn inter_reduce(list: &[TreePolynomial]) -> Result<Vec<TreePolynomial>> {
    if let Some(first) = list.first() {
        if list.iter().any(|g| g.ctx() != first.ctx()) {
            return Err(Error::ContextMismatch);
        }
    }
    let mut gs: Vec<TreePolynomial> = list.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    sort_by_leading(&mut gs);
    'outer: loop {
        for idx in 0..gs.len() {
            let g = gs.remove(idx);
            let nf = normal_form(&g, &gs)?;
            if nf == g {
                gs.insert(idx, g);
                continue;
            }
            if !nf.is_zero() {
                gs.push(nf.monic());
            }
            sort_by_leading(&mut gs);
            continue 'outer;
        }
        return Ok(gs);
    }
}

/// A critical pair waiting to be processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingPair {
    pub scm: Scm,
    pub left: usize,
    pub right: usize,
}

impl PendingPair {
    pub fn arity(&self) -> usize {
        self.scm.tree.arity()
    }

    fn key(&self) -> (&PlanarTree, usize, usize, usize, usize) {
        (&self.scm.tree, self.scm.occ_left.anchor(), self.scm.occ_right.anchor(), self.left, self.right)
    }
}

impl Ord for PendingPair {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PendingPair {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// SCMs above this arity are not processed.
    pub arity_bound: usize,
    /// Stop after this many pairs, leaving the basis incomplete.
    pub max_pairs: Option<usize>,
}

impl BuchbergerOptions {
    pub fn new(arity_bound: usize) -> Self {
        BuchbergerOptions { arity_bound, max_pairs: None }
    }
}

/// Completion processing pairs in ascending (arity, path-lex, anchors) order.
pub fn buchberger(initial: &[TreePolynomial], ctx: GradedContext, arity_bound: usize) -> Result<GroebnerBasis> {
    buchberger_with(initial, ctx, BuchbergerOptions::new(arity_bound), &mut |_| 0)
}

/// Completion with a caller-chosen pair selection. `select` receives the
/// pending pairs sorted ascending and returns the index to process next.
pub fn buchberger_with(
    initial: &[TreePolynomial],
    ctx: GradedContext,
    options: BuchbergerOptions,
    select: &mut dyn FnMut(&[PendingPair]) -> usize,
) -> Result<GroebnerBasis> {
    if initial.iter().any(|g| g.ctx() != ctx) {
        return Err(Error::ContextMismatch);
    }
    if let Some(a) = initial.iter().filter_map(TreePolynomial::arity).max() {
        if options.arity_bound < a {
            return Err(Error::BoundBelowGenerator { bound: options.arity_bound, arity: a });
        }
    }
    let mut state = Completion {
        bound: options.arity_bound,
        gens: BTreeMap::new(),
        next_id: 0,
        pending: Vec::new(),
        deferred: Vec::new(),
        history: Vec::new(),
    };
    state.replace_basis(inter_reduce(initial)?)?;

    let mut processed = 0usize;
    while !state.pending.is_empty() {
        if options.max_pairs.is_some_and(|cap| processed >= cap) {
            break;
        }
        let idx = select(&state.pending).min(state.pending.len() - 1);
        let pair = state.pending.remove(idx);
        processed += 1;
        let (Some(g), Some(h)) = (state.gens.get(&pair.left), state.gens.get(&pair.right)) else {
            continue;
        };
        let s = s_polynomial(&pair.scm, g, h)?;
        let basis = state.basis();
        let r = normal_form(&s, &basis)?;
        if r.is_zero() {
            continue;
        }
        let added = r.monic();
        state.history.push(CompletionStep {
            scm_arity: pair.arity(),
            added: added.clone(),
            leading_before: basis.iter().filter_map(|b| b.leading_monomial().cloned()).collect(),
        });
        let mut next = basis;
        next.push(added);
        state.replace_basis(inter_reduce(&next)?)?;
    }

    let complete_below_bound = state.pending.is_empty();
    let checked_bound = if complete_below_bound {
        options.arity_bound
    } else {
        let lowest = state.pending.iter().map(PendingPair::arity).min().unwrap_or(options.arity_bound + 1);
        (1..lowest).rev().find(|&n| ctx.valid_arity(n)).unwrap_or(0)
    };
    let deferred_pairs = state.deferred.len();
    Ok(GroebnerBasis {
        ctx,
        gens: state.basis(),
        checked_bound,
        complete_below_bound,
        deferred_pairs,
        history: state.history,
    })
}

struct Completion {
    bound: usize,
    gens: BTreeMap<usize, TreePolynomial>,
    next_id: usize,
    pending: Vec<PendingPair>,
    /// (left id, right id) of each SCM above the bound.
    deferred: Vec<(usize, usize)>,
    history: Vec<CompletionStep>,
}

impl Completion {
    fn basis(&self) -> Vec<TreePolynomial> {
        let mut b: Vec<_> = self.gens.values().cloned().collect();
        sort_by_leading(&mut b);
        b
    }

    /// Installs a new reduced basis. Unchanged elements keep their ids and
    /// pairs; every other element gets a fresh id and fresh pairs.
    fn replace_basis(&mut self, reduced: Vec<TreePolynomial>) -> Result<()> {
        let mut old: Vec<(usize, TreePolynomial)> = core::mem::take(&mut self.gens).into_iter().collect();
        let mut fresh = Vec::new();
        for g in reduced {
            if let Some(pos) = old.iter().position(|(_, o)| *o == g) {
                let (id, o) = old.swap_remove(pos);
                self.gens.insert(id, o);
            } else {
                let id = self.next_id;
                self.next_id += 1;
                self.gens.insert(id, g);
                fresh.push(id);
            }
        }
        let gens = &self.gens;
        self.pending.retain(|p| gens.contains_key(&p.left) && gens.contains_key(&p.right));
        self.deferred.retain(|(l, r)| gens.contains_key(l) && gens.contains_key(r));
        for id in fresh {
            let ids: Vec<usize> = self.gens.keys().copied().filter(|&k| k <= id).collect();
            for other in ids {
                self.add_pairs(other, id)?;
            }
        }
        self.pending.sort();
        Ok(())
    }

    fn add_pairs(&mut self, left: usize, right: usize) -> Result<()> {
        let lm = |id: usize| self.gens[&id].leading_monomial().cloned().ok_or(Error::ZeroPolynomial);
        let (l, r) = (lm(left)?, lm(right)?);
        for scm in enumerate_scms(&l, &r, left == right)? {
            if scm.arity() <= self.bound {
                self.pending.push(PendingPair { scm, left, right });
            } else {
                self.deferred.push((left, right));
            }
        }
        Ok(())
    }
}

/// One S-polynomial that did not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionFailure {
    pub scm: Scm,
    /// Indices into the basis' generator list.
    pub left: usize,
    pub right: usize,
    pub s_polynomial: TreePolynomial,
    pub remainder: TreePolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerReport {
    pub holds: bool,
    pub arity_bound: usize,
    pub pairs_checked: usize,
    /// SCMs above the bound, not checked.
    pub deferred_pairs: usize,
    pub failures: Vec<CriterionFailure>,
}

/// Checks that every S-polynomial from an SCM of arity at most `arity_bound`
/// reduces to zero by the basis.
pub fn is_groebner(basis: &GroebnerBasis, arity_bound: usize) -> Result<GroebnerReport> {
    let gens: Vec<TreePolynomial> = basis.gens.iter().map(TreePolynomial::monic).collect();
    let mut report = GroebnerReport {
        holds: true,
        arity_bound,
        pairs_checked: 0,
        deferred_pairs: 0,
        failures: Vec::new(),
    };
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let (li, lj) = (gens[i].leading()?.0, gens[j].leading()?.0);
            for scm in enumerate_scms(li, lj, i == j)? {
                if scm.arity() > arity_bound {
                    report.deferred_pairs += 1;
                    continue;
                }
                report.pairs_checked += 1;
                let s = s_polynomial(&scm, &gens[i], &gens[j])?;
                let remainder = normal_form(&s, &gens)?;
                if !remainder.is_zero() {
                    report.holds = false;
                    report.failures.push(CriterionFailure { scm, left: i, right: j, s_polynomial: s, remainder });
                }
            }
        }
    }
    Ok(report)
}
