//! Pseudo-symmetric numerical semigroups and brute-force semigroup oracles.
//!
//! [`construct_generators`] realizes Komeda's parametrization of the
//! 4-generated pseudo-symmetric semigroups. The remaining functions work on
//! any [`NumericalSemigroup`] by dynamic programming over the generators and
//! serve as independent checks of the algebraic pipeline.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The integers `(alpha1, alpha2, alpha3, alpha4, alpha21)` of Komeda's
/// parametrization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoSymmetricParams {
    alpha1: u32,
    alpha2: u32,
    alpha3: u32,
    alpha4: u32,
    alpha21: u32,
}

impl PseudoSymmetricParams {
    /// Validates `alpha_i > 1`, `alpha21 > 0` and `alpha21 < alpha1 - 1`.
    pub fn new(alpha1: u32, alpha2: u32, alpha3: u32, alpha4: u32, alpha21: u32) -> Result<Self> {
        if alpha1 <= 1 {
            return Err(Error::InvalidParams("alpha1 > 1"));
        }
        if alpha2 <= 1 {
            return Err(Error::InvalidParams("alpha2 > 1"));
        }
        if alpha3 <= 1 {
            return Err(Error::InvalidParams("alpha3 > 1"));
        }
        if alpha4 <= 1 {
            return Err(Error::InvalidParams("alpha4 > 1"));
        }
        if alpha21 == 0 {
            return Err(Error::InvalidParams("alpha21 > 0"));
        }
        if alpha21 + 1 >= alpha1 {
            return Err(Error::InvalidParams("alpha21 < alpha1 - 1"));
        }
        Ok(PseudoSymmetricParams { alpha1, alpha2, alpha3, alpha4, alpha21 })
    }

    pub fn alpha1(&self) -> u32 {
        self.alpha1
    }
    pub fn alpha2(&self) -> u32 {
        self.alpha2
    }
    pub fn alpha3(&self) -> u32 {
        self.alpha3
    }
    pub fn alpha4(&self) -> u32 {
        self.alpha4
    }
    pub fn alpha21(&self) -> u32 {
        self.alpha21
    }
}

/// A numerical semigroup given by generators with gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn new(generators: Vec<u64>) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::Precondition("generators must be positive".into()));
        }
        let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        Ok(NumericalSemigroup { generators })
    }

    /// Generators in the order they were given.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn smallest_generator(&self) -> u64 {
        *self.generators.iter().min().expect("nonempty")
    }

    pub fn largest_generator(&self) -> u64 {
        *self.generators.iter().max().expect("nonempty")
    }
}

/// Komeda's four generators, in formula order (not sorted).
pub fn construct_generators(p: &PseudoSymmetricParams) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(formula_generators(p).to_vec())
}

fn formula_generators(p: &PseudoSymmetricParams) -> [u64; 4] {
    let [a1, a2, a3, a4, a21] = [p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21].map(u64::from);
    let n1 = a2 * a3 * (a4 - 1) + 1;
    let n2 = a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3;
    let n3 = a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1;
    let n4 = a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2;
    [n1, n2, n3, n4]
}

/// Truth values of the inequalities that pin down leading monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// `alpha1 > alpha4`
    pub c1: bool,
    /// `alpha3 < alpha1 - alpha21`
    pub c2: bool,
    /// `alpha4 < alpha2 + alpha3 - 1`
    pub c3: bool,
    /// `alpha2 > alpha21 + 1`
    pub c4: bool,
    /// `alpha21 + alpha3 > alpha4`
    pub c5: bool,
    /// `alpha1 + alpha21 + 1 >= alpha2 + alpha4`
    pub c6: bool,
    /// `n1 < n2 < n3 < n4` for the constructed generators.
    pub increasing: bool,
}

impl ConditionReport {
    pub fn as_array(&self) -> [bool; 6] {
        [self.c1, self.c2, self.c3, self.c4, self.c5, self.c6]
    }
}

pub fn check_conditions(p: &PseudoSymmetricParams) -> ConditionReport {
    let [a1, a2, a3, a4, a21] = [p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21].map(i64::from);
    let increasing = formula_generators(p).windows(2).all(|w| w[0] < w[1]);
    ConditionReport {
        c1: a1 > a4,
        c2: a3 < a1 - a21,
        c3: a4 < a2 + a3 - 1,
        c4: a2 > a21 + 1,
        c5: a21 + a3 > a4,
        c6: a1 + a21 + 1 >= a2 + a4,
        increasing,
    }
}

/// Membership and maximal-order tables for `0..=bound`.
#[derive(Clone, Debug)]
pub struct SemigroupTable {
    pub bound: u64,
    pub member: Vec<bool>,
    /// `order[s] = max { sum u_i : sum u_i n_i = s }` for members.
    pub order: Vec<Option<u32>>,
}

pub fn membership_table(s: &NumericalSemigroup, bound: u64) -> SemigroupTable {
    let len = bound as usize + 1;
    let mut order: Vec<Option<u32>> = alloc::vec![None; len];
    order[0] = Some(0);
    for v in 1..len {
        order[v] = s
            .generators()
            .iter()
            .filter_map(|&g| {
                let g = g as usize;
                if g <= v { order[v - g] } else { None }
            })
            .max()
            .map(|o| o + 1);
    }
    let member = order.iter().map(Option::is_some).collect();
    SemigroupTable { bound, member, order }
}

/// Frobenius number and the sorted list of gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSet {
    /// Largest non-member; `-1` when the semigroup is all of `N`.
    pub frobenius: i64,
    pub gaps: Vec<u64>,
}

impl GapSet {
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_gap(&self, x: u64) -> bool {
        self.gaps.binary_search(&x).is_ok()
    }
}

/// Enumerates members until a run of `min generator` consecutive members
/// certifies that everything beyond is in the semigroup.
pub fn frobenius_and_gaps(s: &NumericalSemigroup) -> GapSet {
    let m = s.smallest_generator() as usize;
    let mut member: Vec<bool> = alloc::vec![true];
    let mut gaps = Vec::new();
    let mut run = 1usize;
    let mut v = 0usize;
    while run < m {
        v += 1;
        let is_member = s.generators().iter().any(|&g| {
            let g = g as usize;
            g <= v && member[v - g]
        });
        member.push(is_member);
        if is_member {
            run += 1;
        } else {
            run = 0;
            gaps.push(v as u64);
        }
    }
    let frobenius = gaps.last().map_or(-1, |&f| f as i64);
    GapSet { frobenius, gaps }
}

/// Gap-set definition: `F` even, and `F - x` is a member for every gap `x != F/2`.
pub fn is_pseudo_symmetric(s: &NumericalSemigroup) -> bool {
    let gs = frobenius_and_gaps(s);
    if gs.frobenius <= 0 || gs.frobenius % 2 != 0 {
        return false;
    }
    let f = gs.frobenius as u64;
    gs.gaps.iter().all(|&x| x == f / 2 || !gs.is_gap(f - x))
}

/// Symmetric semigroups: `F - x` is a member for every gap `x`.
pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    let gs = frobenius_and_gaps(s);
    if gs.frobenius < 0 {
        return true;
    }
    let f = gs.frobenius as u64;
    gs.gaps.iter().all(|&x| !gs.is_gap(f - x))
}

/// `H(n) = #{ s in S : ord(s) = n }` for `n = 0..=up_to_level`.
///
/// Every element of order at most `L` is a sum of at most `L` generators,
/// so a table up to `(L + 1) * max generator` sees all of them.
pub fn hilbert_oracle(s: &NumericalSemigroup, up_to_level: usize) -> Vec<u64> {
    let bound = (up_to_level as u64 + 1) * s.largest_generator();
    let table = membership_table(s, bound);
    let mut h = alloc::vec![0u64; up_to_level + 1];
    for o in table.order.iter().flatten() {
        if let Some(slot) = h.get_mut(*o as usize) {
            *slot += 1;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // (alpha21, alpha1, alpha2, alpha3, alpha4) as in fixture names.
    fn params(a21: u32, a1: u32, a2: u32, a3: u32, a4: u32) -> PseudoSymmetricParams {
        PseudoSymmetricParams::new(a1, a2, a3, a4, a21).unwrap()
    }

    #[test]
    fn generators_k1_tuple() {
        let s = construct_generators(&params(8, 16, 20, 7, 2)).unwrap();
        assert_eq!(s.generators(), &[141, 161, 164, 2092]);
        let s = construct_generators(&params(4, 22, 13, 5, 2)).unwrap();
        assert_eq!(s.generators()[0], 66);
    }

    #[test]
    fn validation_names_the_failed_inequality() {
        let e = PseudoSymmetricParams::new(16, 20, 7, 2, 15).unwrap_err();
        assert_eq!(e, Error::InvalidParams("alpha21 < alpha1 - 1"));
        assert_eq!(alloc::format!("{e}"), "alpha21 < alpha1 - 1 violated");
        assert!(PseudoSymmetricParams::new(16, 1, 7, 2, 3).is_err());
        assert!(PseudoSymmetricParams::new(16, 20, 7, 2, 0).is_err());
    }

    #[test]
    fn conditions_k1_tuple() {
        let r = check_conditions(&params(8, 16, 20, 7, 2));
        assert_eq!(r.as_array(), [true; 6]);
        assert!(r.increasing);
        assert!(!check_conditions(&params(1, 5, 3, 2, 5)).c1);
    }

    #[test]
    fn table_basics() {
        let s = construct_generators(&params(8, 16, 20, 7, 2)).unwrap();
        let t = membership_table(&s, 600);
        assert_eq!(t.order[0], Some(0));
        assert!(!t.member[1]);
        for &g in &[141, 161, 164] {
            assert_eq!(t.order[g], Some(1));
        }
        assert_eq!(t.order[282], Some(2));
    }

    #[test]
    fn frobenius_of_small_semigroups() {
        let s = NumericalSemigroup::new(alloc::vec![5, 6, 7, 8]).unwrap();
        let gs = frobenius_and_gaps(&s);
        assert_eq!(gs.frobenius, 9);
        assert_eq!(gs.gaps, alloc::vec![1, 2, 3, 4, 9]);
        assert!(matches!(NumericalSemigroup::new(alloc::vec![4, 6, 10]), Err(Error::NotCoprime(2))));
    }

    #[test]
    fn pseudo_symmetry_oracle() {
        // <3,5,7>: F = 4, gaps {1,2,4}; 4 - 1 = 3 in S, so pseudo-symmetric.
        let s = NumericalSemigroup::new(alloc::vec![3, 5, 7]).unwrap();
        assert!(is_pseudo_symmetric(&s));
        // <3,4,5>: F = 2, gaps {1,2}; x = 1 = F/2 is exempt, so pseudo-symmetric too.
        let s = NumericalSemigroup::new(alloc::vec![3, 4, 5]).unwrap();
        assert!(is_pseudo_symmetric(&s));
        // <3,5>: symmetric, F = 7 odd.
        let s = NumericalSemigroup::new(alloc::vec![3, 5]).unwrap();
        assert!(is_symmetric(&s));
        assert!(!is_pseudo_symmetric(&s));
        // <4,5,11>: F = 7 odd.
        let s = NumericalSemigroup::new(alloc::vec![4, 5, 11]).unwrap();
        assert!(!is_pseudo_symmetric(&s));
        // <5,6,7,8>: F = 9 odd.
        assert!(!is_pseudo_symmetric(&NumericalSemigroup::new(alloc::vec![5, 6, 7, 8]).unwrap()));
        // <4,7,9,10>: F = 6 even, gaps {1,2,3,5,6}; 6 - 1 = 5 is a gap.
        assert!(!is_pseudo_symmetric(&NumericalSemigroup::new(alloc::vec![4, 7, 9, 10]).unwrap()));
    }

    #[test]
    fn oracle_low_levels() {
        let s = construct_generators(&params(8, 16, 20, 7, 2)).unwrap();
        let h = hilbert_oracle(&s, 3);
        assert_eq!(h[0], 1);
        assert_eq!(h[1], 4);
    }

    fn valid_params() -> impl Strategy<Value = PseudoSymmetricParams> {
        (2u32..10, 2u32..10, 2u32..7, 2u32..6, 1u32..8).prop_filter_map("invalid", |(a1, a2, a3, a4, a21)| {
            PseudoSymmetricParams::new(a1, a2, a3, a4, a21).ok().filter(|p| construct_generators(p).is_ok())
        })
    }

    fn c4_params() -> impl Strategy<Value = PseudoSymmetricParams> {
        (1u32..8, 2u32..12, 2u32..20, 2u32..9, 2u32..9).prop_filter_map("unsorted", |(a21, d2, d1, a3, a4)| {
            let p = PseudoSymmetricParams::new(a21 + d1, a21 + d2, a3, a4, a21).ok()?;
            check_conditions(&p).increasing.then_some(p)
        })
    }

    proptest! {
        #[test]
        fn komeda_semigroups_are_pseudo_symmetric(p in valid_params()) {
            let s = construct_generators(&p).unwrap();
            prop_assert!(is_pseudo_symmetric(&s));
            let gs = frobenius_and_gaps(&s);
            prop_assert_eq!(gs.genus() as i64, (gs.frobenius + 2) / 2);
            prop_assert!(gs.is_gap(1));
        }

        #[test]
        fn sorted_and_c4_imply_c5_c6(p in c4_params()) {
            let r = check_conditions(&p);
            prop_assume!(r.increasing && r.c4);
            prop_assert!(r.c5);
            prop_assert!(r.c6);
        }

        #[test]
        fn order_is_superadditive(p in valid_params(), a in 0usize..400, b in 0usize..400) {
            let s = construct_generators(&p).unwrap();
            let t = membership_table(&s, 800);
            if let (Some(x), Some(y)) = (t.order[a], t.order[b]) {
                prop_assert!(t.order[a + b].unwrap() >= x + y);
            }
        }
    }
}
