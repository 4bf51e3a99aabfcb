//! The toric ideal of the semigroup and the closed-form standard basis for
//! `alpha4 = 2`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::semigroup::{check_conditions, construct_generators, NumericalSemigroup, PseudoSymmetricParams};
use crate::NVARS;

/// `S`-degree of a monomial: `sum e_i * n_i`.
pub fn sdegree(m: &Monomial, s: &NumericalSemigroup) -> u64 {
    m.weighted_degree(s.generators())
}

/// True when every term of `f` has the same `S`-degree, which for a
/// binomial `m1 - m2` means membership in the toric ideal.
pub fn is_sdegree_homogeneous(f: &Polynomial, s: &NumericalSemigroup) -> bool {
    let mut it = f.terms().iter().map(|t| sdegree(&t.monomial, s));
    match it.next() {
        None => true,
        Some(d) => it.all(|e| e == d),
    }
}

fn mono(e: [u32; NVARS]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn binomial(s: &NumericalSemigroup, a: [u32; NVARS], b: [u32; NVARS]) -> Result<Polynomial> {
    let f = Polynomial::binomial(MonomialOrdering::LocalDegRevLex, mono(a), mono(b))?;
    if !is_sdegree_homogeneous(&f, s) {
        return Err(Error::Inconsistency(format!("binomial {f} is not S-homogeneous")));
    }
    Ok(f)
}

/// The semigroup together with the five generators `f1..f5` of its toric ideal.
#[derive(Clone, Debug)]
pub struct ToricSystem {
    pub params: PseudoSymmetricParams,
    pub semigroup: NumericalSemigroup,
    pub generators: Vec<Polynomial>,
}

pub fn toric_generators(p: &PseudoSymmetricParams) -> Result<ToricSystem> {
    let s = construct_generators(p)?;
    let (a1, a2, a3, a4, a21) = (p.alpha1(), p.alpha2(), p.alpha3(), p.alpha4(), p.alpha21());
    let generators = alloc::vec![
        binomial(&s, [a1, 0, 0, 0], [0, 0, 1, a4 - 1])?,
        binomial(&s, [0, a2, 0, 0], [a21, 0, 0, 1])?,
        binomial(&s, [0, 0, a3, 0], [a1 - a21 - 1, 1, 0, 0])?,
        binomial(&s, [0, 0, 0, a4], [1, a2 - 1, a3 - 1, 0])?,
        binomial(&s, [a21 + 1, 0, a3 - 1, 0], [0, 1, 0, a4 - 1])?,
    ];
    Ok(ToricSystem { params: *p, semigroup: s, generators })
}

/// Which reading of the defining inequality of `k` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum KMode {
    /// `k(alpha2 + 1) <= (k-1) alpha1 + (k+1) alpha21 + alpha3`
    #[default]
    NonStrict,
    /// `k(alpha2 + 1) < (k-1) alpha1 + (k+1) alpha21 + alpha3`
    Strict,
}

/// Left and right side of the `k`-inequality at `j`.
pub fn k_inequality_sides(p: &PseudoSymmetricParams, j: u32) -> (u64, u64) {
    let [a1, a2, a3, a21, j] = [p.alpha1(), p.alpha2(), p.alpha3(), p.alpha21(), j].map(u64::from);
    (j * (a2 + 1), (j - 1) * a1 + (j + 1) * a21 + a3)
}

/// Smallest positive `k` satisfying the inequality, with no upper cap.
///
/// Each step adds `alpha1 + alpha21` to the right side and `alpha2 + 1` to
/// the left, so when no solution exists by `alpha2 + 2` there is none.
pub fn smallest_k(p: &PseudoSymmetricParams, mode: KMode) -> Option<u32> {
    (1..=p.alpha2() + 2).find(|&k| {
        let (lhs, rhs) = k_inequality_sides(p, k);
        match mode {
            KMode::NonStrict => lhs <= rhs,
            KMode::Strict => lhs < rhs,
        }
    })
}

/// The `k` of the closed form: [`smallest_k`], rejected when `k > alpha3`
/// since `X3^(alpha3 - k)` would need a negative exponent.
pub fn compute_k(p: &PseudoSymmetricParams, mode: KMode) -> Result<u32> {
    if p.alpha4() != 2 {
        return Err(Error::Precondition(format!("alpha4 = 2 required, got {}", p.alpha4())));
    }
    if !check_conditions(p).c4 {
        return Err(Error::Precondition("alpha2 > alpha21 + 1 required".into()));
    }
    match smallest_k(p, mode) {
        Some(k) if k <= p.alpha3() => Ok(k),
        Some(k) => Err(Error::Unsupported(format!("k = {k} exceeds alpha3 = {}", p.alpha3()))),
        None => Err(Error::Unsupported("no positive k satisfies the inequality".into())),
    }
}

/// `f1, ..., f5, f6, f7, ..., f_{6+k}`.
#[derive(Clone, Debug)]
pub struct ClosedFormBasis {
    pub k: u32,
    pub elements: Vec<Polynomial>,
}

/// Checks the standing hypotheses of the closed form: `alpha4 = 2`,
/// conditions (1)-(4) and increasing generators.
pub fn check_closed_form_scope(p: &PseudoSymmetricParams) -> Result<()> {
    let r = check_conditions(p);
    if p.alpha4() != 2 {
        return Err(Error::Precondition(format!("alpha4 = 2 required, got {}", p.alpha4())));
    }
    if !r.increasing {
        return Err(Error::Precondition("n1 < n2 < n3 < n4 required".into()));
    }
    let required = [
        (r.c1, "alpha1 > alpha4"),
        (r.c2, "alpha3 < alpha1 - alpha21"),
        (r.c3, "alpha4 < alpha2 + alpha3 - 1"),
        (r.c4, "alpha2 > alpha21 + 1"),
    ];
    for (ok, what) in required {
        if !ok {
            return Err(Error::Precondition(format!("{what} required")));
        }
    }
    construct_generators(p).map(|_| ())
}

/// True when `alpha1 + alpha21 + 1 = alpha2 + alpha4`; then `f6` has two
/// monomials of equal degree and its leading monomial is decided by the
/// reverse-lex tie-break rather than by degree.
pub fn condition6_is_tight(p: &PseudoSymmetricParams) -> bool {
    p.alpha1() + p.alpha21() + 1 == p.alpha2() + p.alpha4()
}

pub fn closed_form_basis(p: &PseudoSymmetricParams) -> Result<ClosedFormBasis> {
    closed_form_basis_with(p, KMode::NonStrict)
}

pub fn closed_form_basis_with(p: &PseudoSymmetricParams, mode: KMode) -> Result<ClosedFormBasis> {
    check_closed_form_scope(p)?;
    let k = compute_k(p, mode)?;
    closed_form_basis_for_k(p, k)
}

/// The closed form for an explicitly chosen `k <= alpha3`.
pub fn closed_form_basis_for_k(p: &PseudoSymmetricParams, k: u32) -> Result<ClosedFormBasis> {
    if k == 0 || k > p.alpha3() {
        return Err(Error::Unsupported(format!("k = {k} outside 1..=alpha3")));
    }
    let sys = toric_generators(p)?;
    let s = &sys.semigroup;
    let (a1, a2, a3, a21) = (p.alpha1(), p.alpha2(), p.alpha3(), p.alpha21());
    let mut elements = sys.generators;
    elements.push(binomial(s, [a1 + a21, 0, 0, 0], [0, a2, 1, 0])?);
    for j in 1..=k {
        let x1 = (j - 1) * a1 + (j + 1) * a21 + 1;
        elements.push(binomial(s, [x1, 0, a3 - j, 0], [0, j * a2 + 1, 0, 0])?);
    }
    Ok(ClosedFormBasis { k, elements })
}

/// For `1 <= j <= k-1`: `j alpha2 + 1 >= (j-1) alpha1 + (j+1) alpha21 + alpha3 + 1 - j`,
/// i.e. the exponent inequality making each `S_j(t) = t^a - t^b` nonnegative
/// for `t >= 1`.
pub fn sj_exponents_ordered(p: &PseudoSymmetricParams, k: u32) -> bool {
    (1..k).all(|j| {
        let [a1, a2, a3, a21, j] = [p.alpha1(), p.alpha2(), p.alpha3(), p.alpha21(), j].map(i64::from);
        j * a2 + 1 >= (j - 1) * a1 + (j + 1) * a21 + a3 + 1 - j
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn params(a21: u32, a1: u32, a2: u32, a3: u32, a4: u32) -> PseudoSymmetricParams {
        PseudoSymmetricParams::new(a1, a2, a3, a4, a21).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 4, MonomialOrdering::LocalDegRevLex).unwrap()
    }

    #[test]
    fn generators_k1_tuple() {
        let sys = toric_generators(&params(8, 16, 20, 7, 2)).unwrap();
        let expected = ["X1^16-X3*X4", "X2^20-X1^8*X4", "X3^7-X1^7*X2", "X4^2-X1*X2^19*X3^6", "X1^9*X3^6-X2*X4"];
        for (f, e) in sys.generators.iter().zip(expected) {
            assert_eq!(f, &p(e));
        }
        let s = &sys.semigroup;
        let [n1, n2, _, n4] = [0, 1, 2, 3].map(|i| s.generators()[i]);
        assert_eq!(20 * n2, 8 * n1 + n4);
    }

    #[test]
    fn generators_alpha4_three() {
        let sys = toric_generators(&params(2, 9, 5, 3, 3)).unwrap();
        assert_eq!(sys.generators[2], p("X3^3-X1^6*X2"));
    }

    #[test]
    fn sdegree_checks() {
        let s = construct_generators(&params(8, 16, 20, 7, 2)).unwrap();
        assert_eq!(sdegree(&Monomial::one(4), &s), 0);
        assert_eq!(sdegree(&mono([0, 21, 0, 0]), &s), 3381);
        assert_eq!(sdegree(&mono([17, 0, 6, 0]), &s), 3381);
    }

    #[test]
    fn k_values() {
        assert_eq!(compute_k(&params(8, 16, 20, 7, 2), KMode::NonStrict), Ok(1));
        assert_eq!(compute_k(&params(8, 16, 20, 7, 2), KMode::Strict), Ok(1));
        assert_eq!(compute_k(&params(4, 22, 13, 5, 2), KMode::NonStrict), Ok(2));
        assert_eq!(compute_k(&params(10, 17, 25, 4, 2), KMode::NonStrict), Ok(3));
        assert_eq!(compute_k(&params(10, 17, 25, 4, 2), KMode::Strict), Ok(4));
        assert!(matches!(closed_form_basis_for_k(&params(10, 17, 25, 4, 2), 5), Err(Error::Unsupported(_))));
        assert!(matches!(closed_form_basis_for_k(&params(10, 17, 25, 4, 2), 0), Err(Error::Unsupported(_))));
        assert_eq!(smallest_k(&params(10, 17, 25, 4, 2), KMode::Strict), Some(4));
        assert_eq!(compute_k(&params(3, 13, 14, 6, 2), KMode::NonStrict), Ok(4));
        assert_eq!(compute_k(&params(3, 13, 14, 6, 2), KMode::Strict), Ok(5));
        assert!(matches!(compute_k(&params(2, 9, 5, 3, 3), KMode::NonStrict), Err(Error::Precondition(_))));
    }

    #[test]
    fn closed_forms_of_reference_tuples() {
        let b = closed_form_basis(&params(8, 16, 20, 7, 2)).unwrap();
        assert_eq!(b.elements.len(), 7);
        assert_eq!(b.elements[6], p("X1^17*X3^6-X2^21"));
        let b = closed_form_basis(&params(4, 22, 13, 5, 2)).unwrap();
        assert_eq!(b.elements.len(), 8);
        assert_eq!(b.elements[7], p("X1^35*X3^3-X2^27"));
        let b = closed_form_basis(&params(3, 13, 14, 6, 2)).unwrap();
        assert_eq!(b.elements.len(), 10);
        assert_eq!(b.elements[9], p("X1^55*X3^2-X2^57"));
        assert_eq!(b.elements[9].leading_monomial().unwrap().to_string(), "X2^57");
        assert_eq!(b.elements[8].leading_monomial().unwrap().to_string(), "X1^39*X3^3");
    }

    fn theorem_params() -> impl Strategy<Value = PseudoSymmetricParams> {
        (3u32..12, 3u32..14, 2u32..9, 1u32..10).prop_filter_map("out of scope", |(a1, a2, a3, a21)| {
            let p = PseudoSymmetricParams::new(a1, a2, a3, 2, a21).ok()?;
            check_closed_form_scope(&p).ok()?;
            compute_k(&p, KMode::NonStrict).ok()?;
            Some(p)
        })
    }

    proptest! {
        #[test]
        fn closed_form_elements_are_toric(p in theorem_params()) {
            let s = construct_generators(&p).unwrap();
            let b = closed_form_basis(&p).unwrap();
            for f in &b.elements {
                prop_assert!(f.is_pure_binomial());
                prop_assert!(is_sdegree_homogeneous(f, &s));
            }
        }

        #[test]
        fn leading_monomials_switch_at_k(p in theorem_params()) {
            let b = closed_form_basis(&p).unwrap();
            let k = b.k as usize;
            for j in 1..=k {
                let lm = b.elements[5 + j].leading_monomial().unwrap();
                let x2_leads = lm.exponent(1) > 0;
                prop_assert_eq!(x2_leads, j == k, "j = {}", j);
            }
            prop_assert!(sj_exponents_ordered(&p, b.k));
        }
    }
}
