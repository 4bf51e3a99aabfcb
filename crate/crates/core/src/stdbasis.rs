//! Standard bases under the local ordering, and what is read off them.
//!
//! [`standard_basis`] runs the s-pair completion with Mora's normal form
//! ([`nf_mora`]); the result is minimalized and its tails interreduced. The
//! tangent cone ideal is generated by the lowest forms of a local standard
//! basis. [`buchberger_homogeneous`] covers the global case used when that
//! ideal is not monomial.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::hilbert::MonomialIdeal;
use crate::ordering::MonomialOrdering;
use crate::poly::{spoly, Polynomial};

/// Upper bound on tail-reduction steps per basis; tails of polynomials that
/// are homogeneous for a positive grading always finish far below it.
const TAIL_REDUCTION_BUDGET: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSet {
    pub elements: Vec<Polynomial>,
}

impl BasisSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements normalized and sorted by leading monomial (largest first),
    /// then by rendered text.
    pub fn canonical(&self) -> Vec<Polynomial> {
        canonical(&self.elements)
    }

    /// Set equality up to sign normalization.
    pub fn same_elements(&self, other: &[Polynomial]) -> bool {
        self.canonical() == canonical(other)
    }

    /// True when every element is `m1 - m2` up to sign.
    pub fn all_unit_binomials(&self) -> bool {
        self.elements.iter().all(|f| {
            f.is_pure_binomial() && f.terms().iter().all(|t| t.coefficient.abs().is_one())
        })
    }
}

pub fn canonical(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = polys.iter().cloned().map(Polynomial::normalize).collect();
    v.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Ok(x), Ok(y)) => a.ordering().cmp(y, x).then_with(|| a.to_string().cmp(&b.to_string())),
        _ => a.len().cmp(&b.len()),
    });
    v
}

/// Mora's weak normal form of `h` with respect to `g`.
///
/// Among the reducers whose leading monomial divides `LM(h)` one of minimal
/// ecart is chosen (earliest on ties). If even that ecart exceeds the ecart
/// of `h`, `h` itself joins the reducer list before the step.
pub fn nf_mora(h: &Polynomial, g: &[Polynomial]) -> Polynomial {
    let mut h = h.clone();
    let mut reducers: Vec<(usize, u64)> = g
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| (i, p.ecart().unwrap_or(0)))
        .collect();
    let mut extra: Vec<Polynomial> = Vec::new();
    while !h.is_zero() {
        let lm = h.lm();
        let mut best: Option<(usize, u64)> = None;
        for &(i, e) in &reducers {
            let p = if i < g.len() { &g[i] } else { &extra[i - g.len()] };
            if p.lm().divides(lm) && best.is_none_or(|(_, be)| e < be) {
                best = Some((i, e));
            }
        }
        let Some((idx, reducer_ecart)) = best else { break };
        let reducer = if idx < g.len() { &g[idx] } else { &extra[idx - g.len()] };
        let next = h.reduce_lead_by(reducer);
        let h_ecart = h.ecart().unwrap_or(0);
        if reducer_ecart > h_ecart {
            reducers.push((g.len() + extra.len(), h_ecart));
            extra.push(h);
        }
        h = next;
    }
    h
}

fn check_input(f: &[Polynomial], ordering: MonomialOrdering) -> Result<usize> {
    let first = f.first().ok_or_else(|| Error::Precondition("empty generating set".into()))?;
    let nvars = first.nvars();
    for p in f {
        if p.nvars() != nvars {
            return Err(Error::Dimension { expected: nvars, found: p.nvars() });
        }
        if p.ordering() != ordering {
            return Err(Error::OrderingMismatch);
        }
    }
    Ok(nvars)
}

/// Keeps the elements whose leading monomial is not divisible by another
/// element's leading monomial (the earlier one survives on equality).
pub fn minimalize(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let lms: Vec<_> = polys.iter().map(|p| p.lm().clone()).collect();
    polys
        .into_iter()
        .enumerate()
        .filter(|(j, _)| {
            !lms.iter().enumerate().any(|(i, m)| i != *j && m.divides(&lms[*j]) && (m != &lms[*j] || i < *j))
        })
        .map(|(_, p)| p)
        .collect()
}

/// Rewrites every non-leading term divisible by another element's leading
/// monomial until no such term remains.
pub fn reduce_tails(mut basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let mut budget = TAIL_REDUCTION_BUDGET;
    for i in 0..basis.len() {
        loop {
            let hit = basis[i].terms().iter().enumerate().skip(1).find_map(|(ti, t)| {
                basis.iter().enumerate().find(|(j, g)| *j != i && !g.is_zero() && g.lm().divides(&t.monomial)).map(|(j, _)| (ti, j))
            });
            let Some((ti, j)) = hit else { break };
            budget = budget
                .checked_sub(1)
                .ok_or_else(|| Error::Inconsistency("tail reduction exceeded its step budget".into()))?;
            let reduced = basis[i].reduce_term_by(ti, &basis[j]);
            basis[i] = reduced;
        }
    }
    Ok(basis.into_iter().filter(|p| !p.is_zero()).map(Polynomial::normalize).collect())
}

/// Standard basis with respect to the local ordering.
///
/// Pairs are processed first-in first-out by creation order; pairs with
/// coprime leading monomials are skipped. The result is minimal with
/// interreduced tails, which makes it unique for binomial ideals.
pub fn standard_basis(f: &[Polynomial]) -> Result<BasisSet> {
    let ordering = f.first().map(|p| p.ordering()).unwrap_or_default();
    if !ordering.is_local() {
        return Err(Error::Precondition("standard_basis expects the local ordering".into()));
    }
    check_input(f, ordering)?;
    let mut s: Vec<Polynomial> = Vec::new();
    for p in f.iter().filter(|p| !p.is_zero()) {
        let p = p.clone().normalize();
        if !s.contains(&p) {
            s.push(p);
        }
    }
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..s.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        if s[i].lm().is_coprime(s[j].lm()) {
            continue;
        }
        let h = nf_mora(&spoly(&s[i], &s[j])?, &s);
        if !h.is_zero() {
            let idx = s.len();
            pairs.extend((0..idx).map(|k| (k, idx)));
            s.push(h.normalize());
        }
    }
    let elements = reduce_tails(minimalize(s))?;
    Ok(BasisSet { elements })
}

/// `f*`: the sum of the terms of minimal total degree.
pub fn lowest_form(f: &Polynomial) -> Result<Polynomial> {
    f.lowest_form()
}

/// The lowest forms of a local standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentConeIdeal {
    pub generators: Vec<Polynomial>,
    /// True iff every generator is a monomial.
    pub monomial_flag: bool,
}

pub fn tangent_cone_ideal(g: &BasisSet) -> Result<TangentConeIdeal> {
    let generators = g.elements.iter().map(|f| lowest_form(f).map(Polynomial::normalize)).collect::<Result<Vec<_>>>()?;
    let monomial_flag = generators.iter().all(Polynomial::is_monomial);
    Ok(TangentConeIdeal { generators, monomial_flag })
}

impl TangentConeIdeal {
    /// The generators as a monomial ideal, when they are all monomials.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.monomial_flag {
            return None;
        }
        let nvars = self.generators.first()?.nvars();
        MonomialIdeal::new(nvars, self.generators.iter().map(|p| p.lm().clone())).ok()
    }
}

/// A monomial ideal with the same Hilbert function as the tangent cone: the
/// generators themselves when they are monomials, otherwise the leading ideal
/// of a degree-reverse-lex basis.
pub fn tangent_cone_monomial_ideal(tc: &TangentConeIdeal) -> Result<MonomialIdeal> {
    match tc.as_monomial_ideal() {
        Some(m) => Ok(m),
        None => leading_ideal(&buchberger_homogeneous(&tc.generators)?),
    }
}

/// Minimal generators of the ideal of leading monomials.
pub fn leading_ideal(g: &BasisSet) -> Result<MonomialIdeal> {
    let first = g.elements.first().ok_or_else(|| Error::Precondition("empty basis".into()))?;
    MonomialIdeal::new(first.nvars(), g.elements.iter().map(|p| p.lm().clone()))
}

/// Full reduction of `f` by `g` under a global ordering.
fn full_reduce(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut i = 0;
    while i < p.len() {
        let m = &p.terms()[i].monomial;
        match g.iter().find(|q| q.lm().divides(m)) {
            Some(q) => p = p.reduce_term_by(i, q),
            None => i += 1,
        }
    }
    p
}

/// Reduced Groebner basis under [`MonomialOrdering::GlobalDegRevLex`] for
/// homogeneous input. For homogeneous ideals it is also a standard basis.
pub fn buchberger_homogeneous(f: &[Polynomial]) -> Result<BasisSet> {
    let ordering = MonomialOrdering::GlobalDegRevLex;
    if let Some(p) = f.iter().find(|p| !p.is_homogeneous()) {
        return Err(Error::Precondition(format!("input {p} is not homogeneous")));
    }
    let input: Vec<Polynomial> = f.iter().map(|p| p.with_ordering(ordering)).collect();
    if input.is_empty() {
        return Err(Error::Precondition("empty generating set".into()));
    }
    check_input(&input, ordering)?;
    let mut s: Vec<Polynomial> = Vec::new();
    for p in input {
        let r = full_reduce(&p, &s);
        if !r.is_zero() {
            s.push(r.normalize());
        }
    }
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..s.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        if s[i].lm().is_coprime(s[j].lm()) {
            continue;
        }
        let h = full_reduce(&spoly(&s[i], &s[j])?, &s);
        if !h.is_zero() {
            let idx = s.len();
            pairs.extend((0..idx).map(|k| (k, idx)));
            s.push(h.normalize());
        }
    }
    let mut min = minimalize(s);
    for i in 0..min.len() {
        let others: Vec<Polynomial> =
            min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        min[i] = full_reduce(&min[i], &others).normalize();
    }
    min.sort_by(|a, b| ordering.cmp(b.lm(), a.lm()).then(Ordering::Equal));
    Ok(BasisSet { elements: min })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use crate::toric::{closed_form_basis, is_sdegree_homogeneous, toric_generators};
    use crate::semigroup::construct_generators;
    use crate::{Monomial, PseudoSymmetricParams};
    use proptest::prelude::*;

    const LOCAL: MonomialOrdering = MonomialOrdering::LocalDegRevLex;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 4, LOCAL).unwrap()
    }

    fn params(a21: u32, a1: u32, a2: u32, a3: u32, a4: u32) -> PseudoSymmetricParams {
        PseudoSymmetricParams::new(a1, a2, a3, a4, a21).unwrap()
    }

    fn k1_basis() -> Vec<Polynomial> {
        closed_form_basis(&params(8, 16, 20, 7, 2)).unwrap().elements
    }

    #[test]
    fn nf_mora_reduces_theorem_pairs_to_zero() {
        let g = k1_basis();
        assert!(nf_mora(&spoly(&g[0], &g[1]).unwrap(), &g).is_zero());
        assert!(nf_mora(&spoly(&g[4], &g[5]).unwrap(), &g).is_zero());
        assert!(nf_mora(&Polynomial::zero(4, LOCAL), &g).is_zero());
    }

    #[test]
    fn engine_k1_basis() {
        let sys = toric_generators(&params(8, 16, 20, 7, 2)).unwrap();
        let b = standard_basis(&sys.generators).unwrap();
        assert_eq!(b.len(), 7);
        assert!(b.same_elements(&k1_basis()));
        assert!(b.all_unit_binomials());
    }

    #[test]
    fn single_monomial_basis() {
        let b = standard_basis(&[p("X1^2*X3")]).unwrap();
        assert_eq!(b.elements, alloc::vec![p("X1^2*X3")]);
    }

    #[test]
    fn rejects_global_input() {
        let f = p("X1-X2").with_ordering(MonomialOrdering::GlobalDegRevLex);
        assert!(matches!(standard_basis(&[f]), Err(Error::Precondition(_))));
        assert!(standard_basis(&[]).is_err());
    }

    #[test]
    fn lowest_forms() {
        assert_eq!(lowest_form(&p("X2^20-X1^8*X4")).unwrap(), p("-X1^8*X4"));
        assert_eq!(lowest_form(&p("X1*X2-X3^2")).unwrap(), p("X1*X2-X3^2"));
        assert_eq!(lowest_form(&Polynomial::zero(4, LOCAL)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn tangent_cone_of_k1_basis() {
        let b = BasisSet { elements: k1_basis() };
        let tc = tangent_cone_ideal(&b).unwrap();
        assert!(tc.monomial_flag);
        let expected = ["X3*X4", "X1^8*X4", "X3^7", "X4^2", "X2*X4", "X2^20*X3", "X2^21"];
        let got: Vec<_> = tc.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(got, expected);
        let m = tc.as_monomial_ideal().unwrap();
        assert_eq!(m.generators().len(), 7);
        assert_eq!(leading_ideal(&b).unwrap(), m);
    }

    #[test]
    fn tangent_cone_of_k2_basis_keeps_j_below_k() {
        let b = BasisSet { elements: closed_form_basis(&params(4, 22, 13, 5, 2)).unwrap().elements };
        let tc = tangent_cone_ideal(&b).unwrap();
        let got: Vec<_> = tc.generators.iter().map(|g| g.to_string()).collect();
        assert!(got.contains(&"X1^9*X3^4".into()), "{got:?}");
        assert!(got.contains(&"X2^27".into()), "{got:?}");
    }

    #[test]
    fn homogeneous_input_is_its_own_tangent_cone() {
        let b = BasisSet { elements: alloc::vec![p("X1*X2-X3^2"), p("X4^3")] };
        let tc = tangent_cone_ideal(&b).unwrap();
        assert_eq!(tc.generators, b.elements);
        assert!(!tc.monomial_flag);
        assert!(tc.as_monomial_ideal().is_none());
    }

    #[test]
    fn leading_ideal_minimalizes() {
        let b = BasisSet { elements: alloc::vec![p("X3*X4"), p("X3^2*X4")] };
        let m = leading_ideal(&b).unwrap();
        assert_eq!(m.generators(), &[Monomial::from_slice(&[0, 0, 1, 1])]);
    }

    #[test]
    fn buchberger_small_cases() {
        let b = buchberger_homogeneous(&[p("X1*X2-X3^2"), p("X3^3")]).unwrap();
        let got: Vec<_> = b.elements.iter().map(|g| g.to_string()).collect();
        assert_eq!(got, ["X3^3", "X1*X2-X3^2"]);
        // coprime leading monomials: nothing new
        let b = buchberger_homogeneous(&[p("X1*X3-X2^2"), p("X2*X4-X3^2")]).unwrap();
        let got: Vec<_> = b.elements.iter().map(|g| g.to_string()).collect();
        assert_eq!(got, ["X2^2-X1*X3", "X3^2-X2*X4"]);
        // the twisted cubic's three quadrics already form a basis
        let b = buchberger_homogeneous(&[p("X1*X3-X2^2"), p("X2*X4-X3^2"), p("X1*X4-X2*X3")]).unwrap();
        assert_eq!(b.len(), 3);
        assert!(buchberger_homogeneous(&[p("X1-X2^2")]).is_err());
        let m = buchberger_homogeneous(&[p("X2^2"), p("X1*X3")]).unwrap();
        assert_eq!(m.len(), 2);
    }

    fn toric_params() -> impl Strategy<Value = PseudoSymmetricParams> {
        (2u32..9, 2u32..9, 2u32..5, 2u32..5, 1u32..7)
            .prop_filter_map("invalid", |(a1, a2, a3, a4, a21)| {
                PseudoSymmetricParams::new(a1, a2, a3, a4, a21).ok().filter(|p| construct_generators(p).is_ok())
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn computed_bases_are_certified(pr in toric_params(), e in prop::collection::vec(0u32..3, 4), which in 0usize..5) {
            let sys = toric_generators(&pr).unwrap();
            let b = standard_basis(&sys.generators).unwrap();
            for f in &b.elements {
                prop_assert!(f.is_pure_binomial());
                prop_assert!(is_sdegree_homogeneous(f, &sys.semigroup));
            }
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let s = spoly(&b.elements[i], &b.elements[j]).unwrap();
                    prop_assert!(nf_mora(&s, &b.elements).is_zero());
                }
            }
            let multiple = sys.generators[which].mul_term(&crate::poly::int(1), &Monomial::new(e)).unwrap();
            prop_assert!(nf_mora(&multiple, &b.elements).is_zero());
        }
    }
}
