//! Monomial orderings with fixed variable precedence `X1 > X2 > ... > Xn`.

use core::cmp::Ordering;

use crate::error::Result;
use crate::monomial::Monomial;

/// Degree reverse-lexicographic orderings, in a local and a global flavour.
///
/// Both break degree ties by reverse-lex: the last variable in which the
/// exponents differ decides, and the monomial with the *smaller* exponent
/// there is the larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrdering {
    /// Negative degree reverse-lex (`ds`): lower total degree is larger, so
    /// `1 > Xi` for every variable.
    #[default]
    LocalDegRevLex,
    /// Degree reverse-lex (`dp`): higher total degree is larger.
    GlobalDegRevLex,
}

impl MonomialOrdering {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_dim(b)?;
        Ok(self.cmp(a, b))
    }

    /// Comparison without the dimension check; callers guarantee equal lengths.
    #[inline]
    pub(crate) fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        let by_degree = match self {
            MonomialOrdering::LocalDegRevLex => by_degree.reverse(),
            MonomialOrdering::GlobalDegRevLex => by_degree,
        };
        by_degree.then_with(|| revlex_tiebreak(a, b))
    }

    pub fn is_local(self) -> bool {
        matches!(self, MonomialOrdering::LocalDegRevLex)
    }

    pub const fn name(self) -> &'static str {
        match self {
            MonomialOrdering::LocalDegRevLex => "ds",
            MonomialOrdering::GlobalDegRevLex => "dp",
        }
    }
}

#[inline]
fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
