use core::fmt;

use crate::error::{Error, Result};

/// Homological degree of the generator, modulo 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl core::str::FromStr for Parity {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(()),
        }
    }
}

/// Branching arity of the generator together with its degree parity.
///
/// The parity fixes the Koszul sign calculus: with an even generator every
/// sign is `+1`, with an odd one a monomial has parity `weight mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedContext {
    m: usize,
    parity: Parity,
}

impl GradedContext {
    pub fn new(m: usize, parity: Parity) -> Result<Self> {
        if m < 2 {
            return Err(Error::BranchingArity(m));
        }
        Ok(GradedContext { m, parity })
    }

    pub const fn ternary(parity: Parity) -> Self {
        GradedContext { m: 3, parity }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    /// Degree parity of a monomial with `weight` generators.
    pub fn monomial_parity(&self, weight: usize) -> usize {
        match self.parity {
            Parity::Even => 0,
            Parity::Odd => weight & 1,
        }
    }

    /// Arities admitted by this context are `1 + k(m-1)`.
    pub fn valid_arity(&self, n: usize) -> bool {
        n >= 1 && (n - 1).is_multiple_of(self.m - 1)
    }

    pub fn weight_of_arity(&self, n: usize) -> Option<usize> {
        self.valid_arity(n).then(|| (n - 1) / (self.m - 1))
    }

    pub fn arity_of_weight(&self, w: usize) -> usize {
        1 + w * (self.m - 1)
    }
}
