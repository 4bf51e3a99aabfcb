//! Exponent tuples over a fixed variable list `X1, ..., Xn`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A monomial `X1^e1 * ... * Xn^en`, stored as its exponent tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn from_slice(exponents: &[u32]) -> Self {
        Monomial(exponents.to_vec())
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    /// `X_{index+1}^exp` (variables are indexed from zero internally).
    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub(crate) fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.nvars(), found: other.nvars() })
        }
    }

    /// `self | other`, i.e. componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `other / self` when `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Componentwise `max(self - other, 0)`: the generator of `<self> : other`.
    pub fn saturating_sub(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    /// Moves the exponent of variable `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        debug_assert_eq!(perm.len(), self.nvars());
        let mut out = alloc::vec![0; self.nvars()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        Monomial(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Weighted degree `sum e_i * w_i`.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| u64::from(e) * w).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `X1^8*X4`; the constant monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "X{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
