//! Named relations for the ternary partially associative operad.
//!
//! `alpha` is defined for any branching arity as `Σ_i t ∘_i t`; the other
//! named polynomials are ternary and expect a context with `m = 3`. Their
//! coefficients are those of the even reduced basis and of the S-polynomials
//! met on the way to it.

use alloc::vec::Vec;

use crate::context::{GradedContext, Parity};
use crate::notation::parse_poly;
use crate::poly::{poly_compose, TreePolynomial};
use crate::tree::PlanarTree;

pub const EVEN_TERNARY: GradedContext = GradedContext::ternary(Parity::Even);
pub const ODD_TERNARY: GradedContext = GradedContext::ternary(Parity::Odd);

/// Partial associativity `t∘1t + t∘2t + ... + t∘mt`.
pub fn alpha(ctx: GradedContext) -> TreePolynomial {
    let t = TreePolynomial::monomial(ctx, PlanarTree::generator(ctx.m()).expect("m >= 2")).expect("generator");
    let mut sum = TreePolynomial::zero(ctx);
    for i in 1..=ctx.m() {
        sum = &sum + &poly_compose(&t, i, &t).expect("valid leaf index");
    }
    sum
}

fn ternary(ctx: GradedContext, text: &str) -> TreePolynomial {
    assert_eq!(ctx.m(), 3, "named relation is ternary");
    parse_poly(ctx, text).expect("well-formed preset")
}

pub fn beta(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(*(**(***))*) + (**(*(***)*)) + (**(**(***)))")
}

pub fn gamma(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "2*(**(*(***)(***))) + (**(**(**(***))))")
}

pub fn delta(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(*(***)(*(***)*)) + (*(***)(**(***))) + (**(**(**(***))))")
}

pub fn epsilon(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(*(***)(*(***)*)) + (*(***)(**(***))) - (**(*(***)(***))) - (**(**(**(***))))")
}

pub fn zeta(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(**(*(***)(***))) - (**(**(**(***))))")
}

pub fn eta(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(*(***)(*(***)*)) + (*(***)(**(***)))")
}

pub fn theta(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(**(*(***)(***)))")
}

pub fn nu(ctx: GradedContext) -> TreePolynomial {
    ternary(ctx, "(**(**(**(***))))")
}

/// The reduced Gröbner basis of `⟨alpha⟩` for an even ternary generator,
/// ascending by leading monomial.
pub fn even_basis() -> Vec<TreePolynomial> {
    let ctx = EVEN_TERNARY;
    let mut gens = alloc::vec![alpha(ctx), beta(ctx), eta(ctx), theta(ctx), nu(ctx)];
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    gens
}

/// Registered relation sets, by name.
pub const PRESETS: &[(&str, &str)] = &[("pa", "partial associativity: sum over i of t o_i t")];

pub fn preset(name: &str, ctx: GradedContext) -> Option<Vec<TreePolynomial>> {
    match name {
        "pa" => Some(alloc::vec![alpha(ctx)]),
        _ => None,
    }
}
