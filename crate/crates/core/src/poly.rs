//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] keeps its terms strictly descending under its
//! [`MonomialOrdering`], so the leading term is always `terms()[0]` and the
//! zero polynomial is the empty term list. Every constructor and arithmetic
//! operation restores that canonical form.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;

pub type Coefficient = BigRational;

pub fn int(v: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coefficient: Coefficient,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    ordering: MonomialOrdering,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, ordering: MonomialOrdering) -> Self {
        Polynomial { nvars, ordering, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary `(coefficient, monomial)` pairs,
    /// merging repeated monomials and dropping zero coefficients.
    pub fn from_terms<I>(nvars: usize, ordering: MonomialOrdering, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coefficient, Monomial)>,
    {
        let mut raw: Vec<Term> = Vec::new();
        for (coefficient, monomial) in terms {
            if monomial.nvars() != nvars {
                return Err(Error::Dimension { expected: nvars, found: monomial.nvars() });
            }
            raw.push(Term { coefficient, monomial });
        }
        raw.sort_by(|a, b| ordering.cmp(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coefficient += t.coefficient,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coefficient.is_zero());
        Ok(Polynomial { nvars, ordering, terms })
    }

    pub fn monomial(ordering: MonomialOrdering, coefficient: Coefficient, monomial: Monomial) -> Self {
        let nvars = monomial.nvars();
        let terms = if coefficient.is_zero() {
            Vec::new()
        } else {
            alloc::vec![Term { coefficient, monomial }]
        };
        Polynomial { nvars, ordering, terms }
    }

    /// The binomial `a - b`.
    pub fn binomial(ordering: MonomialOrdering, a: Monomial, b: Monomial) -> Result<Self> {
        let nvars = a.nvars();
        Polynomial::from_terms(nvars, ordering, [(int(1), a), (int(-1), b)])
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn ordering(&self) -> MonomialOrdering {
        self.ordering
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| &t.monomial)
    }

    pub fn leading_coefficient(&self) -> Result<&Coefficient> {
        self.leading_term().map(|t| &t.coefficient)
    }

    #[inline]
    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].monomial
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Minimal total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).min()
    }

    /// `deg(f) - deg(LM(f))`.
    pub fn ecart(&self) -> Result<u64> {
        let lead = self.leading_monomial()?.degree();
        Ok(self.degree().unwrap_or(0) - lead)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True for `c*(m1 - m2)`, the shape every toric generator has.
    pub fn is_pure_binomial(&self) -> bool {
        self.terms.len() == 2 && (&self.terms[0].coefficient + &self.terms[1].coefficient).is_zero()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: other.nvars });
        }
        if self.ordering != other.ordering {
            return Err(Error::OrderingMismatch);
        }
        Ok(())
    }

    /// `self + factor * shift * other`, computed in one merge pass.
    ///
    /// Multiplying by a monomial preserves the term order, so the shifted
    /// operand is still sorted and a linear merge suffices.
    pub(crate) fn add_scaled(&self, other: &Polynomial, factor: &Coefficient, shift: &Monomial) -> Polynomial {
        let ord = self.ordering;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = other
            .terms
            .iter()
            .map(|t| Term { coefficient: &t.coefficient * factor, monomial: t.monomial.mul(shift) })
            .peekable();
        loop {
            let step = match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => ord.cmp(&a.monomial, &b.monomial),
            };
            match step {
                Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                Ordering::Less => out.push(rhs.next().unwrap()),
                Ordering::Equal => {
                    let a = lhs.next().unwrap();
                    let b = rhs.next().unwrap();
                    let c = &a.coefficient + b.coefficient;
                    if !c.is_zero() {
                        out.push(Term { coefficient: c, monomial: b.monomial });
                    }
                }
            }
        }
        Polynomial { nvars: self.nvars, ordering: ord, terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(other, &int(1), &Monomial::one(self.nvars)))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(other, &int(-1), &Monomial::one(self.nvars)))
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coefficient: -&t.coefficient, monomial: t.monomial.clone() })
            .collect();
        Polynomial { terms, ..self.clone() }
    }

    /// `coefficient * monomial * self`.
    pub fn mul_term(&self, coefficient: &Coefficient, monomial: &Monomial) -> Result<Polynomial> {
        if monomial.nvars() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: monomial.nvars() });
        }
        if coefficient.is_zero() {
            return Ok(Polynomial::zero(self.nvars, self.ordering));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coefficient: &t.coefficient * coefficient, monomial: t.monomial.mul(monomial) })
            .collect();
        Ok(Polynomial { terms, ..self.clone() })
    }

    /// Flips the sign so that the leading coefficient is positive.
    pub fn normalize(mut self) -> Polynomial {
        if self.terms.first().is_some_and(|t| t.coefficient.is_negative()) {
            for t in &mut self.terms {
                t.coefficient = -&t.coefficient;
            }
        }
        self
    }

    /// The same polynomial with its terms re-sorted under `ordering`.
    pub fn with_ordering(&self, ordering: MonomialOrdering) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ordering.cmp(&b.monomial, &a.monomial));
        Polynomial { nvars: self.nvars, ordering, terms }
    }

    /// Renames variable `i` to variable `perm[i]`; `perm` must be a permutation.
    pub fn permuted(&self, perm: &[usize]) -> Polynomial {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term { coefficient: t.coefficient.clone(), monomial: t.monomial.permuted(perm) })
            .collect();
        terms.sort_by(|a, b| self.ordering.cmp(&b.monomial, &a.monomial));
        Polynomial { nvars: self.nvars, ordering: self.ordering, terms }
    }

    /// Sum of the terms of minimal total degree.
    pub fn lowest_form(&self) -> Result<Polynomial> {
        let d = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        let terms = self.terms.iter().filter(|t| t.monomial.degree() == d).cloned().collect();
        Ok(Polynomial { terms, ..self.clone() })
    }

    /// One reduction step `self - (LT(self) / LT(g)) * g`; requires `LM(g) | LM(self)`.
    pub(crate) fn reduce_lead_by(&self, g: &Polynomial) -> Polynomial {
        let h = &self.terms[0];
        let lg = &g.terms[0];
        let shift = lg.monomial.quotient_of(&h.monomial).expect("reducer must divide the leading monomial");
        let factor = -(&h.coefficient / &lg.coefficient);
        self.add_scaled(g, &factor, &shift)
    }

    /// Reduces the term at `index` by `g`, whose leading monomial must divide it.
    pub(crate) fn reduce_term_by(&self, index: usize, g: &Polynomial) -> Polynomial {
        let t = &self.terms[index];
        let lg = &g.terms[0];
        let shift = lg.monomial.quotient_of(&t.monomial).expect("reducer must divide the term");
        let factor = -(&t.coefficient / &lg.coefficient);
        self.add_scaled(g, &factor, &shift)
    }
}

/// Leading term under the polynomial's own ordering.
pub fn leading_term(f: &Polynomial) -> Result<&Term> {
    f.leading_term()
}

pub fn ecart(f: &Polynomial) -> Result<u64> {
    f.ecart()
}

/// The s-polynomial `lc(g) * (L / LM(f)) * f - lc(f) * (L / LM(g)) * g` with
/// `L = lcm(LM(f), LM(g))`, returned normalized.
pub fn spoly(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_compatible(g)?;
    let (lf, lg) = (f.leading_term()?, g.leading_term()?);
    let lcm = lf.monomial.lcm(&lg.monomial);
    let sf = lf.monomial.quotient_of(&lcm).expect("lcm is a multiple");
    let sg = lg.monomial.quotient_of(&lcm).expect("lcm is a multiple");
    let left = f.mul_term(&lg.coefficient, &sf)?;
    Ok(left.add_scaled(g, &-&lf.coefficient, &sg).normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use alloc::string::ToString;
    use proptest::prelude::*;

    const LOCAL: MonomialOrdering = MonomialOrdering::LocalDegRevLex;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 4, LOCAL).unwrap()
    }

    #[test]
    fn leading_terms_under_local_order() {
        // f2 of the k = 1 tuple
        let f2 = p("X2^20-X1^8*X4");
        let lt = f2.leading_term().unwrap();
        assert_eq!(lt.monomial.to_string(), "X1^8*X4");
        assert_eq!(lt.coefficient, int(-1));
        assert_eq!(p("X1^24-X2^20*X3").leading_monomial().unwrap().to_string(), "X2^20*X3");
        assert_eq!(p("5*X1^3").leading_term().unwrap().coefficient, int(5));
        assert_eq!(Polynomial::zero(4, LOCAL).leading_term(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn ecart_values() {
        assert_eq!(p("X1^16-X3*X4").ecart(), Ok(14));
        assert_eq!(p("X1^24-X2^20*X3").ecart(), Ok(3));
        assert_eq!(p("X2*X3^4").ecart(), Ok(0));
        assert_eq!(Polynomial::zero(4, LOCAL).ecart(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn spoly_of_toric_generators() {
        let f1 = p("X1^16-X3*X4");
        let f2 = p("X2^20-X1^8*X4");
        let f5 = p("X1^9*X3^6-X2*X4");
        assert_eq!(spoly(&f1, &f2).unwrap(), p("X1^24-X2^20*X3").normalize());
        assert_eq!(spoly(&f2, &f5).unwrap(), p("X1^17*X3^6-X2^21").normalize());
        assert!(spoly(&f1, &f1).unwrap().is_zero());
        assert_eq!(spoly(&f1, &Polynomial::zero(4, LOCAL)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_basics() {
        let f = p("X3^7-X1^7*X2");
        let zero = Polynomial::zero(4, LOCAL);
        assert_eq!(f.add(&zero).unwrap(), f);
        assert!(f.sub(&f).unwrap().is_zero());
        let g = f.mul_term(&int(1), &Monomial::from_slice(&[1, 0, 0, 0])).unwrap();
        assert_eq!(g, p("X1*X3^7-X1^8*X2"));
        assert_eq!(
            f.add(&f.with_ordering(MonomialOrdering::GlobalDegRevLex)),
            Err(Error::OrderingMismatch)
        );
        let other = parse_polynomial("X1", 3, LOCAL).unwrap();
        assert!(matches!(f.add(&other), Err(Error::Dimension { .. })));
    }

    #[test]
    fn lowest_form_keeps_ties() {
        assert_eq!(p("X1^3-X1*X2+X3^2").lowest_form().unwrap(), p("-X1*X2+X3^2"));
        assert_eq!(p("X2^20-X1^8*X4").lowest_form().unwrap(), p("-X1^8*X4"));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..4, 4)), 0..6).prop_map(|ts| {
            Polynomial::from_terms(4, LOCAL, ts.into_iter().map(|(c, e)| (int(c), Monomial::new(e)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn add_commutative_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
            prop_assert_eq!(a.sub(&b).unwrap(), a.add(&b.neg()).unwrap());
        }

        #[test]
        fn normalize_idempotent(a in small_poly()) {
            let n = a.clone().normalize();
            prop_assert_eq!(n.clone().normalize(), n.clone());
            if let Ok(c) = n.leading_coefficient() {
                prop_assert!(c.is_positive());
            }
        }

        #[test]
        fn canonical_form_is_sorted(a in small_poly()) {
            for w in a.terms().windows(2) {
                prop_assert_eq!(LOCAL.cmp(&w[0].monomial, &w[1].monomial), Ordering::Greater);
            }
        }

        #[test]
        fn spoly_cancels_leading_monomials(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let s = spoly(&a, &b).unwrap();
            let lcm = a.lm().lcm(b.lm());
            prop_assert!(s.terms().iter().all(|t| t.monomial != lcm));
        }

        #[test]
        fn lowest_form_is_homogeneous_of_lead_degree(a in small_poly()) {
            prop_assume!(!a.is_zero());
            let low = a.lowest_form().unwrap();
            prop_assert!(low.is_homogeneous());
            prop_assert_eq!(low.degree(), Some(a.lm().degree()));
        }
    }
}
