//! Exact sparse multivariate polynomial arithmetic over the rationals:
//! the algebraic substrate for divisors, self-maps, and heights.
//!
//! Coefficients are arbitrary-precision integers; divisor-defining forms are
//! kept primitive (content one) with canonical sign so that equality of
//! divisor components is plain structural equality. The term order is graded
//! reverse lexicographic throughout, both for canonical printing and for the
//! Macaulay matrices built in [`crate::intersect`].

mod form;
mod gcd;
mod linfactor;
mod monomial;
mod parse;
mod poly;
mod squarefree;

pub use form::HomogeneousForm;
pub use linfactor::LinearExtraction;
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::Poly;

pub(crate) use gcd::poly_gcd;
pub(crate) use linfactor::extract_linear_factors;
pub(crate) use squarefree::squarefree_decomposition_poly;

use std::fmt;
use std::sync::Arc;

/// The coordinate ring of P^N: N+1 named variables over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring(Arc<RingInner>);

#[derive(PartialEq, Eq)]
struct RingInner {
    var_names: Vec<String>,
}

impl Ring {
    pub fn new(var_names: Vec<String>) -> Result<Ring, AlgebraError> {
        if var_names.len() < 2 {
            return Err(AlgebraError::InvalidRing(
                "a projective coordinate ring needs at least two variables".into(),
            ));
        }
        for name in &var_names {
            if !is_identifier(name) {
                return Err(AlgebraError::InvalidRing(format!("bad variable name `{name}`")));
            }
        }
        for (i, a) in var_names.iter().enumerate() {
            if var_names[i + 1..].contains(a) {
                return Err(AlgebraError::InvalidRing(format!("duplicate variable `{a}`")));
            }
        }
        Ok(Ring(Arc::new(RingInner { var_names })))
    }

    pub fn num_vars(&self) -> usize {
        self.0.var_names.len()
    }

    /// Ambient projective dimension N = num_vars - 1.
    pub fn dimension(&self) -> usize {
        self.num_vars() - 1
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.var_names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.var_names.join(","))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Malformed expression text.
    Syntax(String),
    /// Expansion produced terms of mixed total degree.
    Inhomogeneous { degrees: Vec<u32> },
    /// Expansion produced the zero polynomial where a form is required.
    ZeroForm,
    /// Identifier not declared in the ring (and not splittable into
    /// declared variables).
    UnknownVariable(String),
    /// Operands belong to different rings.
    RingMismatch,
    /// Wrong number of substitution forms or coordinates.
    ArityMismatch { expected: usize, got: usize },
    /// Substitution forms of unequal degree.
    DegreeMismatch,
    /// Exact division failed.
    NotDivisible,
    /// Ring construction rejected.
    InvalidRing(String),
    /// Predicted term count exceeds the configured budget.
    TermBudget { predicted: u64, budget: u64 },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Syntax(msg) => write!(f, "syntax error: {msg}"),
            AlgebraError::Inhomogeneous { degrees } => {
                write!(f, "inhomogeneous expression: term degrees {degrees:?}")
            }
            AlgebraError::ZeroForm => write!(f, "expression expands to the zero form"),
            AlgebraError::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            AlgebraError::RingMismatch => write!(f, "operands live in different rings"),
            AlgebraError::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: expected {expected}, got {got}")
            }
            AlgebraError::DegreeMismatch => write!(f, "substitution forms have unequal degrees"),
            AlgebraError::NotDivisible => write!(f, "not divisible"),
            AlgebraError::InvalidRing(msg) => write!(f, "invalid ring: {msg}"),
            AlgebraError::TermBudget { predicted, budget } => {
                write!(f, "term budget exceeded: predicted {predicted} > budget {budget}")
            }
        }
    }
}

impl std::error::Error for AlgebraError {}
