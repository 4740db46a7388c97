#![allow(dead_code)]

use std::cmp::Ordering;

use num_rational::BigRational;
use operad_gb_core::presets::{self, EVEN_TERNARY, ODD_TERNARY};
use operad_gb_core::{
    buchberger, buchberger_with, compare_pathlex, koszul_compose_sign, normal_form, parse_poly, poly_compose,
    reduce_once, BuchbergerOptions, GradedContext, PlanarTree, TreePolynomial,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn t3() -> PlanarTree {
    PlanarTree::generator(3).unwrap()
}

/// Grows a ternary tree by grafting `t` at the leaf chosen by each pick.
pub fn grow(picks: &[u32]) -> PlanarTree {
    let t = t3();
    let mut tree = PlanarTree::leaf(3).unwrap();
    for p in picks {
        let i = (*p as usize) % tree.arity() + 1;
        tree = tree.compose(i, &t).unwrap();
    }
    tree
}

/// Ternary trees of arity at most 9.
pub fn tree() -> impl Strategy<Value = PlanarTree> {
    prop::collection::vec(any::<u32>(), 0..=4).prop_map(|p| grow(&p))
}

pub fn tree_of_weight(w: usize) -> impl Strategy<Value = PlanarTree> {
    prop::collection::vec(any::<u32>(), w).prop_map(|p| grow(&p))
}

pub fn same_arity_pair() -> impl Strategy<Value = (PlanarTree, PlanarTree)> {
    (0usize..=4).prop_flat_map(|w| (tree_of_weight(w), tree_of_weight(w)))
}

pub fn same_arity_triple() -> impl Strategy<Value = (PlanarTree, PlanarTree, PlanarTree)> {
    (0usize..=4).prop_flat_map(|w| (tree_of_weight(w), tree_of_weight(w), tree_of_weight(w)))
}

pub fn coeff() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// Homogeneous polynomials of arity at most 9 with up to five terms.
pub fn polynomial(ctx: GradedContext) -> impl Strategy<Value = TreePolynomial> {
    (0usize..=4).prop_flat_map(move |w| {
        prop::collection::vec((tree_of_weight(w), coeff()), 1..=5)
            .prop_map(move |terms| TreePolynomial::from_terms(ctx, terms).unwrap())
    })
    .prop_filter("nonzero", |f| !f.is_zero())
}

fn mono(ctx: GradedContext, tree: &PlanarTree) -> TreePolynomial {
    TreePolynomial::monomial(ctx, tree.clone()).unwrap()
}

/// The three cases of the composition relations for trees, all valid `i`, `j`.
pub fn check_unsigned_relations(p: &PlanarTree, q: &PlanarTree, r: &PlanarTree) -> Result<(), TestCaseError> {
    let (lp, lq, lr) = (p.arity(), q.arity(), r.arity());
    for i in 1..=lp {
        let pq = p.compose(i, q).unwrap();
        for j in 1..=lp + lq - 1 {
            let lhs = pq.compose(j, r).unwrap();
            let rhs = if j < i {
                p.compose(j, r).unwrap().compose(i + lr - 1, q).unwrap()
            } else if j < i + lq {
                p.compose(i, &q.compose(j - i + 1, r).unwrap()).unwrap()
            } else {
                p.compose(j - lq + 1, r).unwrap().compose(i, q).unwrap()
            };
            prop_assert_eq!(lhs, rhs, "i = {}, j = {}", i, j);
        }
    }
    Ok(())
}

/// The signed relations on canonical monomials; in the even context every
/// sign must be `+1`.
pub fn check_signed_relations(
    ctx: GradedContext,
    p: &PlanarTree,
    q: &PlanarTree,
    r: &PlanarTree,
) -> Result<(), TestCaseError> {
    let (lp, lq, lr) = (p.arity(), q.arity(), r.arity());
    let (fp, fq, fr) = (mono(ctx, p), mono(ctx, q), mono(ctx, r));
    let swap = if ctx.is_odd() && q.weight() % 2 == 1 && r.weight() % 2 == 1 { -1 } else { 1 };
    for i in 1..=lp {
        let pq = poly_compose(&fp, i, &fq).unwrap();
        for j in 1..=lp + lq - 1 {
            let lhs = poly_compose(&pq, j, &fr).unwrap();
            let rhs = if j < i {
                let pr = poly_compose(&fp, j, &fr).unwrap();
                poly_compose(&pr, i + lr - 1, &fq).unwrap().scale(&BigRational::from_integer(swap.into()))
            } else if j < i + lq {
                poly_compose(&fp, i, &poly_compose(&fq, j - i + 1, &fr).unwrap()).unwrap()
            } else {
                let pr = poly_compose(&fp, j - lq + 1, &fr).unwrap();
                poly_compose(&pr, i, &fq).unwrap().scale(&BigRational::from_integer(swap.into()))
            };
            prop_assert_eq!(&lhs, &rhs, "i = {}, j = {}", i, j);
        }
    }
    if !ctx.is_odd() {
        for i in 1..=lp {
            prop_assert_eq!(koszul_compose_sign(ctx, p, i, q).unwrap(), 1);
        }
    }
    Ok(())
}

/// `(t∘2t)∘5t = −(t∘3t)∘2t` for an odd generator.
pub fn odd_sign_example() -> bool {
    let ctx = ODD_TERNARY;
    let t = mono(ctx, &t3());
    let lhs = poly_compose(&poly_compose(&t, 2, &t).unwrap(), 5, &t).unwrap();
    let rhs = poly_compose(&poly_compose(&t, 3, &t).unwrap(), 2, &t).unwrap();
    let tree = lhs.leading_monomial().cloned();
    lhs.len() == 1 && tree.is_some_and(|tr| lhs == mono(ctx, &tr)) && lhs == -&rhs
}

pub fn check_path_bijection(p: &PlanarTree) -> Result<(), TestCaseError> {
    let rebuilt = PlanarTree::from_path(3, p.path()).unwrap();
    prop_assert_eq!(&rebuilt, p);
    prop_assert_eq!(rebuilt.shape(), p.shape());
    Ok(())
}

pub fn check_total_order(p: &PlanarTree, q: &PlanarTree, r: &PlanarTree) -> Result<(), TestCaseError> {
    let pq = compare_pathlex(p, q).unwrap();
    let qp = compare_pathlex(q, p).unwrap();
    prop_assert_eq!(pq, qp.reverse());
    prop_assert_eq!(pq == Ordering::Equal, p == q);
    let qr = compare_pathlex(q, r).unwrap();
    if pq != Ordering::Greater && qr != Ordering::Greater {
        prop_assert_ne!(compare_pathlex(p, r).unwrap(), Ordering::Greater);
    }
    Ok(())
}

pub fn check_monotone(c: &PlanarTree, p: &PlanarTree, q: &PlanarTree) -> Result<(), TestCaseError> {
    let (lo, hi) = match compare_pathlex(p, q).unwrap() {
        Ordering::Less => (p, q),
        Ordering::Greater => (q, p),
        Ordering::Equal => return Ok(()),
    };
    for i in 1..=c.arity() {
        let a = c.compose(i, lo).unwrap();
        let b = c.compose(i, hi).unwrap();
        prop_assert_eq!(compare_pathlex(&a, &b).unwrap(), Ordering::Less);
    }
    for i in 1..=lo.arity() {
        let a = lo.compose(i, c).unwrap();
        let b = hi.compose(i, c).unwrap();
        prop_assert_eq!(compare_pathlex(&a, &b).unwrap(), Ordering::Less);
    }
    Ok(())
}

pub fn basis_for(ctx: GradedContext) -> Vec<TreePolynomial> {
    if ctx.is_odd() {
        vec![presets::alpha(ctx)]
    } else {
        presets::even_basis()
    }
}

pub fn check_reduce_descent(f: &TreePolynomial) -> Result<(), TestCaseError> {
    let lm = f.leading_monomial().unwrap().clone();
    for g in basis_for(f.ctx()) {
        if let Ok(r) = reduce_once(f, &g) {
            if let Some(next) = r.leading_monomial() {
                prop_assert!(*next < lm);
            }
        }
    }
    Ok(())
}

pub fn check_idempotent(f: &TreePolynomial) -> Result<(), TestCaseError> {
    let basis = basis_for(f.ctx());
    let once = normal_form(f, &basis).unwrap();
    let twice = normal_form(&once, &basis).unwrap();
    prop_assert_eq!(once, twice);
    Ok(())
}

pub fn check_round_trip(f: &TreePolynomial) -> Result<(), TestCaseError> {
    let text = f.to_string();
    prop_assert_eq!(&parse_poly(f.ctx(), &text).unwrap(), f, "text {}", text);
    Ok(())
}

/// The reduced basis obtained when pending pairs are picked at random.
pub fn shuffled_completion(ctx: GradedContext, seed: u64) -> Vec<TreePolynomial> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut pick = |pending: &[operad_gb_core::PendingPair]| rng.gen_range(0..pending.len());
    buchberger_with(&[presets::alpha(ctx)], ctx, BuchbergerOptions::new(15), &mut pick)
        .unwrap()
        .gens()
        .to_vec()
}

pub fn shuffle_invariance(seeds: &[u64]) -> bool {
    [EVEN_TERNARY, ODD_TERNARY].into_iter().all(|ctx| {
        let reference = buchberger(&[presets::alpha(ctx)], ctx, 15).unwrap().gens().to_vec();
        seeds.iter().all(|&s| shuffled_completion(ctx, s) == reference)
    })
}

pub fn shuffled<T: Clone>(items: &[T], seed: u64) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    v
}
