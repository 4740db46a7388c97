//! Gröbner bases for ideals in the free nonsymmetric operad generated by a
//! single m-ary operation, over the rationals, with the generator in even or
//! odd homological degree.
//!
//! Trees are compared in path-lex order. Quotient dimensions are obtained
//! by counting normal monomials and can be cross-checked against an
//! independent rank computation in [`oracle`].

#![no_std]

extern crate alloc;

pub mod context;
pub mod dimensions;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod notation;
pub mod occurrence;
pub mod oracle;
pub mod poly;
pub mod presets;
pub mod tree;

pub use context::{GradedContext, Parity};
pub use dimensions::{
    avoiding_monomials, comb_monomial, dimension_series, even_basis_family, normal_monomials, tree_count, DimensionRecord,
    DimensionReport,
};
pub use error::{Error, ParseError, Result};
pub use groebner::{
    buchberger, buchberger_with, inter_reduce, is_groebner, s_polynomial, BuchbergerOptions, CompletionStep,
    CriterionFailure, GroebnerBasis, GroebnerReport, PendingPair,
};
pub use notation::{parse_poly, parse_tree, print_poly};
pub use occurrence::{divides, enumerate_scms, find_occurrences, Occurrence, Scm};
pub use oracle::{
    cross_validate, cross_validate_with, ideal_span, ideal_spans, quotient_dim, ArityCheck, CrossValidation, IdealSpan,
};
pub use poly::{koszul_compose_sign, normal_form, poly_compose, reduce_once, substitute, Coeff, TreePolynomial};
pub use tree::{compare_pathlex, enumerate_trees, PathSequence, PlanarTree};
