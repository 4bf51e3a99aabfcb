//! Cohen-Macaulay test for the tangent cone.
//!
//! For a one-dimensional quotient by a monomial ideal `M` with `X1` of
//! smallest weight, the quotient is Cohen-Macaulay exactly when `X1` is a
//! nonzerodivisor, i.e. when `X1` divides no minimal generator of `M`.
//! A homogeneous ideal that is not monomial is first replaced by its
//! degree-reverse-lex leading ideal with `X1` as the smallest variable, which
//! preserves whether `X1` is a nonzerodivisor.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hilbert::{monomial_colon, MonomialIdeal};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::stdbasis::{buchberger_homogeneous, leading_ideal, TangentConeIdeal};

/// Which monomial ideal the divisibility test was run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmMethod {
    MonomialGenerators,
    RevLexLeadingIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// A minimal generator divisible by `X1`, when there is one.
    pub witness: Option<Monomial>,
    pub method: CmMethod,
}

/// Divisibility test on a monomial ideal.
pub fn cm_for_monomial_ideal(m: &MonomialIdeal) -> CmVerdict {
    let witness = m.generators().iter().find(|g| g.exponent(0) > 0).cloned();
    CmVerdict { cohen_macaulay: witness.is_none(), witness, method: CmMethod::MonomialGenerators }
}

/// Runs the test on a tangent cone, going through a leading ideal when the
/// generators are not all monomials.
pub fn cm_by_divisibility(cone: &TangentConeIdeal) -> Result<CmVerdict> {
    match cone.as_monomial_ideal() {
        Some(m) => Ok(cm_for_monomial_ideal(&m)),
        None => cm_via_leading_ideal(&cone.generators),
    }
}

/// Divisibility test on the reverse-lex leading ideal of homogeneous
/// generators in four variables, with `X1` ordered last.
pub fn cm_via_leading_ideal(generators: &[Polynomial]) -> Result<CmVerdict> {
    if let Some(g) = generators.iter().find(|g| g.nvars() != 4) {
        return Err(Error::Dimension { expected: 4, found: g.nvars() });
    }
    // X1 -> X4, X2 -> X1, X3 -> X2, X4 -> X3
    const FORWARD: [usize; 4] = [3, 0, 1, 2];
    const BACK: [usize; 4] = [1, 2, 3, 0];
    let moved: Vec<Polynomial> = generators.iter().map(|g| g.permuted(&FORWARD)).collect();
    let lead = leading_ideal(&buchberger_homogeneous(&moved)?)?;
    let witness = lead.generators().iter().find(|g| g.exponent(3) > 0).map(|g| g.permuted(&BACK));
    Ok(CmVerdict { cohen_macaulay: witness.is_none(), witness, method: CmMethod::RevLexLeadingIdeal })
}

/// Whether `M : v = M`, i.e. `v` is a nonzerodivisor modulo `M`.
pub fn colon_stability(m: &MonomialIdeal, v: &Monomial) -> bool {
    monomial_colon(m, v) == *m
}
