//! Hilbert series of monomial ideals and of the tangent cone.
//!
//! Numerators are computed with Bayer's pivot recursion
//! `P(<J, w>) = P(J) - t^deg(w) P(J : w)` over `K[X1..Xn]`; for the
//! one-dimensional quotients here the second Hilbert series is
//! `Q = P / (1 - t)^3` and the Hilbert function is the running sum of the
//! coefficients of `Q`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::semigroup::PseudoSymmetricParams;
use crate::toric::{compute_k, KMode};

/// Integer polynomial in one variable `t`, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: BTreeMap<u32, i64>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, 0)
    }

    /// `c * t^e`.
    pub fn term(c: i64, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(e, c);
        }
        UnivariatePoly { coeffs }
    }

    pub fn t_pow(e: u32) -> Self {
        Self::term(1, e)
    }

    /// `1 + t + ... + t^(n-1)`; zero for `n = 0`.
    pub fn geometric(n: u32) -> Self {
        UnivariatePoly { coeffs: (0..n).map(|e| (e, 1)).collect() }
    }

    /// `1 - t^e`.
    pub fn one_minus_t_pow(e: u32) -> Self {
        &Self::one() - &Self::t_pow(e)
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, c: i64, e: u32) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, e: u32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs sorted by exponent.
    pub fn pairs(&self) -> Vec<(u32, i64)> {
        self.coeffs.iter().map(|(&e, &c)| (e, c)).collect()
    }

    /// Dense coefficient list `c_0 .. c_deg`.
    pub fn dense(&self) -> Vec<i64> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient by `1 - t`, or `None` when `1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        let Some(d) = self.degree() else { return Some(Self::zero()) };
        let mut out = Self::zero();
        let mut running = 0i64;
        for e in 0..d {
            running += self.coeff(e);
            out.add_term(running, e);
        }
        Some(out)
    }

    /// Multiplicity of `t = 1` as a root; `None` for the zero polynomial.
    pub fn order_at_one(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut order = 0;
        while let Some(q) = p.div_one_minus_t() {
            p = q;
            order += 1;
        }
        Some(order)
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(-c, e);
        }
        out
    }
}

impl Neg for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn neg(self) -> UnivariatePoly {
        UnivariatePoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let mut out = UnivariatePoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

/// Renders as `1-3*t^2+3*t^3`.
impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.coeffs.iter().enumerate() {
            if c < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses `1-3*t^2+3t^3`-style input (the `*` is optional).
pub fn parse_univariate(input: &str) -> Result<UnivariatePoly> {
    let s: Vec<u8> = input.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty input" });
    }
    let mut out = UnivariatePoly::zero();
    let mut pos = 0;
    let number = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        core::str::from_utf8(&s[start..*pos]).ok()?.parse().ok()
    };
    while pos < s.len() {
        let sign = match s[pos] {
            b'-' => {
                pos += 1;
                -1
            }
            b'+' => {
                pos += 1;
                1
            }
            _ if pos == 0 => 1,
            _ => return Err(Error::Parse { pos, msg: "expected '+' or '-'" }),
        };
        let coeff = number(&mut pos);
        if pos < s.len() && s[pos] == b'*' {
            pos += 1;
        }
        let exp = if pos < s.len() && s[pos] == b't' {
            pos += 1;
            if pos < s.len() && s[pos] == b'^' {
                pos += 1;
                number(&mut pos).ok_or(Error::Parse { pos, msg: "expected exponent" })? as u32
            } else {
                1
            }
        } else if coeff.is_none() {
            return Err(Error::Parse { pos, msg: "expected coefficient or t" });
        } else {
            0
        };
        out.add_term(sign * coeff.unwrap_or(1), exp);
    }
    Ok(out)
}

/// A monomial ideal kept in minimal form: no generator divides another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new<I: IntoIterator<Item = Monomial>>(nvars: usize, gens: I) -> Result<Self> {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::Dimension { expected: nvars, found: g.nvars() });
            }
            all.push(g);
        }
        Ok(Self::minimal(nvars, all))
    }

    fn minimal(nvars: usize, mut all: Vec<Monomial>) -> Self {
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        all.dedup();
        let mut generators: Vec<Monomial> = Vec::new();
        for g in all {
            if !generators.iter().any(|h| h.divides(&g)) {
                generators.push(g);
            }
        }
        MonomialIdeal { nvars, generators }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators, sorted by degree.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// `M : w`, generated by `max(g - w, 0)` for the generators `g`.
pub fn monomial_colon(m: &MonomialIdeal, w: &Monomial) -> MonomialIdeal {
    MonomialIdeal::minimal(m.nvars, m.generators.iter().map(|g| g.saturating_sub(w)).collect())
}

/// How the recursion picks the pivot generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pivot {
    First,
    /// A generator of maximal total degree (the last one on ties).
    #[default]
    MaxDegree,
}

impl Pivot {
    fn pick(self, gens: &[Monomial]) -> usize {
        match self {
            Pivot::First => 0,
            Pivot::MaxDegree => {
                let mut best = 0;
                for (i, g) in gens.iter().enumerate() {
                    if g.degree() >= gens[best].degree() {
                        best = i;
                    }
                }
                best
            }
        }
    }
}

/// Numerator `P(t)` of the Hilbert series of `K[X1..Xn] / M` over `(1 - t)^n`.
pub fn bayer_numerator(m: &MonomialIdeal) -> UnivariatePoly {
    bayer_numerator_with(m, &mut |g: &[Monomial]| Pivot::default().pick(g))
}

pub fn bayer_numerator_pivot(m: &MonomialIdeal, pivot: Pivot) -> UnivariatePoly {
    bayer_numerator_with(m, &mut |g: &[Monomial]| pivot.pick(g))
}

/// Bayer's recursion with a caller-chosen pivot; `pick` returns an index
/// into the current (minimal) generator list.
pub fn bayer_numerator_with(m: &MonomialIdeal, pick: &mut dyn FnMut(&[Monomial]) -> usize) -> UnivariatePoly {
    let gens = &m.generators;
    if gens.is_empty() {
        return UnivariatePoly::one();
    }
    if m.is_unit() {
        return UnivariatePoly::zero();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens
            .iter()
            .fold(UnivariatePoly::one(), |acc, g| &acc * &UnivariatePoly::one_minus_t_pow(g.degree() as u32));
    }
    let idx = pick(gens) % gens.len();
    let w = &gens[idx];
    let mut rest = gens.clone();
    rest.remove(idx);
    let j = MonomialIdeal { nvars: m.nvars, generators: rest };
    let colon = monomial_colon(&j, w);
    let pj = bayer_numerator_with(&j, pick);
    let pc = bayer_numerator_with(&colon, pick);
    &pj - &(&UnivariatePoly::t_pow(w.degree() as u32) * &pc)
}

fn exp_i64(e: i64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::Inconsistency(format!("negative exponent {e} in closed form")))
}

fn check_k(p: &PseudoSymmetricParams, k: u32) -> Result<()> {
    if k == 0 || k > p.alpha3() {
        return Err(Error::Precondition(format!("k = {k} must lie in 1..=alpha3")));
    }
    Ok(())
}

/// Exponent `(k-j) alpha1 + (k-j+2) alpha21 + alpha3 + j - k` of the `j`-th
/// correction term.
fn r_exponent(p: &PseudoSymmetricParams, k: u32, j: u32) -> Result<u32> {
    let [a1, a3, a21, k, j] = [p.alpha1(), p.alpha3(), p.alpha21(), k, j].map(i64::from);
    exp_i64((k - j) * a1 + (k - j + 2) * a21 + a3 + j - k)
}

/// Closed-form Hilbert numerator of the tangent cone for `alpha4 = 2`.
pub fn closed_form_numerator(p: &PseudoSymmetricParams, k: u32) -> Result<UnivariatePoly> {
    check_k(p, k)?;
    let (a2, a3, a21) = (p.alpha2(), p.alpha3(), p.alpha21());
    let t = UnivariatePoly::t_pow;
    let one_minus_t = UnivariatePoly::one_minus_t_pow(1);
    let omt2 = one_minus_t.pow(2);
    let mut out = UnivariatePoly::from_pairs([(0, 1), (2, -3), (3, 3), (4, -1)]);
    out = &out - &(&t(a21 + 1) * &one_minus_t.pow(3));
    out = &out - &(&t(a3) * &one_minus_t);
    out = &out - &(&(&t(a2 + 1) * &one_minus_t) * &UnivariatePoly::one_minus_t_pow(a3 - 1));
    out = &out - &(&t(k * a2 + 1) * &omt2);
    let tail = &omt2 * &UnivariatePoly::one_minus_t_pow(a2);
    for j in 2..=k {
        out = &out - &(&t(r_exponent(p, k, j)?) * &tail);
    }
    Ok(out)
}

/// Closed-form second Hilbert series,
/// `1 + t + t G(k a2) + t G(a2) G(a3 - 1) - t^(a21+1) - sum_j t^(e_j) G(a2)`
/// with `G(n) = 1 + t + ... + t^(n-1)`.
pub fn closed_form_q(p: &PseudoSymmetricParams, k: u32) -> Result<UnivariatePoly> {
    check_k(p, k)?;
    let (a2, a3, a21) = (p.alpha2(), p.alpha3(), p.alpha21());
    let g = UnivariatePoly::geometric;
    let t = UnivariatePoly::t_pow;
    let mut out = UnivariatePoly::from_pairs([(0, 1), (1, 1)]);
    out = &out + &(&t(1) * &g(k * a2));
    out = &out + &(&(&t(1) * &g(a2)) * &g(a3 - 1));
    out = &out - &t(a21 + 1);
    for j in 2..=k {
        out = &out - &(&t(r_exponent(p, k, j)?) * &g(a2));
    }
    Ok(out)
}

/// The same series regrouped as
/// `1 + t - t^(a21+1) + G(a2) [ t (1 + G(a3 - 1)) + sum_{j<k} S_j ]` with
/// `S_j = t^(j a2 + 1) - t^((j-1) a1 + (j+1) a21 + a3 + 1 - j)`.
pub fn closed_form_q_regrouped(p: &PseudoSymmetricParams, k: u32) -> Result<UnivariatePoly> {
    check_k(p, k)?;
    let (a1, a2, a3, a21) = (p.alpha1(), p.alpha2(), p.alpha3(), p.alpha21());
    let g = UnivariatePoly::geometric;
    let t = UnivariatePoly::t_pow;
    let mut bracket = &t(1) * &(&UnivariatePoly::one() + &g(a3 - 1));
    for j in 1..k {
        let [a1, a3, a21, ji] = [a1, a3, a21, j].map(i64::from);
        let low = exp_i64((ji - 1) * a1 + (ji + 1) * a21 + a3 + 1 - ji)?;
        bracket = &bracket + &(&t(j * a2 + 1) - &t(low));
    }
    let head = &UnivariatePoly::from_pairs([(0, 1), (1, 1)]) - &t(a21 + 1);
    Ok(&head + &(&g(a2) * &bracket))
}

/// `Q = P / (1 - t)^3`, failing when the division is not exact.
pub fn second_series(p: &UnivariatePoly) -> Result<UnivariatePoly> {
    let mut q = p.clone();
    for _ in 0..3 {
        q = q
            .div_one_minus_t()
            .ok_or_else(|| Error::Inconsistency(format!("numerator {p} is not divisible by (1-t)^3")))?;
    }
    Ok(q)
}

/// Values of the Hilbert function and the verdicts read off them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    /// `H(0..=L)`.
    pub values: Vec<i64>,
    /// `Q(1)`, the eventual constant value.
    pub multiplicity: i64,
    /// Smallest `n0` with `H(n) = Q(1)` for all `n >= n0`.
    pub regularity_index: usize,
    pub non_decreasing: bool,
    pub first_decrease_level: Option<usize>,
}

/// `H(n) = sum_{i <= n} q_i` for `n = 0..=max(L, deg Q)`.
pub fn hilbert_function(q: &UnivariatePoly, up_to_level: usize) -> HilbertFunction {
    let dq = q.degree().unwrap_or(0) as usize;
    let level = up_to_level.max(dq);
    let mut values = Vec::with_capacity(level + 1);
    let mut acc = 0i64;
    for n in 0..=level {
        acc += q.coeff(n as u32);
        values.push(acc);
    }
    let multiplicity = q.eval_at_one();
    let mut regularity_index = dq;
    while regularity_index > 0 && values[regularity_index - 1] == multiplicity {
        regularity_index -= 1;
    }
    let first_decrease_level = (1..=dq).find(|&n| q.coeff(n as u32) < 0);
    HilbertFunction {
        values,
        multiplicity,
        regularity_index,
        non_decreasing: first_decrease_level.is_none(),
        first_decrease_level,
    }
}

/// Numerator, second series and Hilbert function together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub numerator: UnivariatePoly,
    pub second_series: UnivariatePoly,
    pub function: HilbertFunction,
}

impl HilbertReport {
    /// Builds the report from a numerator; `up_to_level` defaults to `deg Q + 5`.
    pub fn from_numerator(numerator: UnivariatePoly, up_to_level: Option<usize>) -> Result<Self> {
        let second_series = second_series(&numerator)?;
        let level = up_to_level.unwrap_or(second_series.degree().unwrap_or(0) as usize + 5);
        let function = hilbert_function(&second_series, level);
        Ok(HilbertReport { numerator, second_series, function })
    }
}

/// Coefficientwise nonnegativity certificate for the `k = 1` second series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityCertificate {
    /// Dense coefficients `q_0 .. q_deg`, all nonnegative.
    pub coefficients: Vec<i64>,
}

/// For `k = 1` the closed-form `Q` must have no negative coefficient.
pub fn k1_monotonic_verdict(p: &PseudoSymmetricParams) -> Result<MonotonicityCertificate> {
    let k = compute_k(p, KMode::NonStrict)?;
    if k != 1 {
        return Err(Error::Precondition(format!("k = 1 required, got k = {k}")));
    }
    let q = closed_form_q(p, 1)?;
    if second_series(&closed_form_numerator(p, 1)?)? != q {
        return Err(Error::Inconsistency("closed-form Q disagrees with P / (1-t)^3".into()));
    }
    let coefficients = q.dense();
    if let Some((e, c)) = coefficients.iter().enumerate().find(|(_, c)| **c < 0) {
        return Err(Error::TheoremViolation(format!("coefficient of t^{e} in Q is {c}")));
    }
    Ok(MonotonicityCertificate { coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn params(a21: u32, a1: u32, a2: u32, a3: u32, a4: u32) -> PseudoSymmetricParams {
        PseudoSymmetricParams::new(a1, a2, a3, a4, a21).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_slice(e)
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(4, gens.iter().map(|g| m(g))).unwrap()
    }

    const P_K1: &str = "1-3t^2+3t^3-t^4-t^7+t^8-t^9+3t^10-3t^11+t^12-2t^21+3t^22-t^23+t^27-t^28";
    const P_K2: &str = "1-3t^2+3t^3-t^4-2t^5+4t^6-3t^7+t^8-t^13+t^14+t^18-t^19+t^26-3t^27+3t^28-t^29";

    const P_K3: &str = "1-3t^2+3t^3-2t^4+t^5-t^11+3t^12-3t^13+t^14-t^24+2t^25-2t^26+t^27+t^29-t^30+t^49-3t^50+3t^51-t^52+t^75-3t^76+3t^77-t^78";
    const P_K4: &str = "1-3t^2+3t^3-2t^4+3t^5-4t^6+2t^7-t^12+2t^13-t^14-t^15+t^16+t^20-t^21+t^26-3t^27+3t^28-t^29+t^41-3t^42+3t^43-t^44+t^56-3t^57+3t^58-t^59";

    fn k1_tangent_cone() -> MonomialIdeal {
        ideal(&[&[0, 0, 1, 1], &[8, 0, 0, 1], &[0, 0, 7, 0], &[0, 0, 0, 2], &[0, 1, 0, 1], &[0, 20, 1, 0], &[0, 21, 0, 0]])
    }

    #[test]
    fn univariate_arithmetic_and_text() {
        let p = parse_univariate("1-3*t^2+3t^3 - t^4").unwrap();
        assert_eq!(p.to_string(), "1-3*t^2+3*t^3-t^4");
        assert_eq!(parse_univariate("2t+t").unwrap(), UnivariatePoly::term(3, 1));
        assert!(parse_univariate("t^").is_err());
        assert!(parse_univariate("").is_err());
        let cube = UnivariatePoly::one_minus_t_pow(1).pow(3);
        assert_eq!(second_series(&cube).unwrap(), UnivariatePoly::one());
        assert!(second_series(&UnivariatePoly::one_minus_t_pow(1)).is_err());
        assert_eq!(cube.order_at_one(), Some(3));
    }

    #[test]
    fn bayer_base_cases() {
        assert_eq!(bayer_numerator(&ideal(&[])), UnivariatePoly::one());
        assert_eq!(bayer_numerator(&ideal(&[&[1, 0, 0, 0]])), UnivariatePoly::one_minus_t_pow(1));
        assert_eq!(bayer_numerator(&ideal(&[&[0, 0, 0, 0]])), UnivariatePoly::zero());
    }

    #[test]
    fn bayer_k1_cone() {
        let p = bayer_numerator(&k1_tangent_cone());
        assert_eq!(p, parse_univariate(P_K1).unwrap());
        for pivot in [Pivot::First, Pivot::MaxDegree] {
            assert_eq!(bayer_numerator_pivot(&k1_tangent_cone(), pivot), p);
        }
    }

    #[test]
    fn colon_ideals() {
        let c = monomial_colon(&ideal(&[&[0, 0, 1, 1], &[0, 0, 0, 2]]), &m(&[0, 0, 0, 2]));
        assert!(c.is_unit());
        let j = ideal(&[&[0, 0, 1, 1], &[0, 0, 0, 2]]);
        assert_eq!(monomial_colon(&j, &Monomial::one(4)), j);
        // J1 : X2^(k a2 + 1) for the k = 1 tuple is <X3, X4>.
        let j1 = ideal(&[&[0, 0, 1, 1], &[8, 0, 0, 1], &[0, 0, 7, 0], &[0, 0, 0, 2], &[0, 1, 0, 1], &[0, 20, 1, 0]]);
        assert_eq!(monomial_colon(&j1, &m(&[0, 21, 0, 0])), ideal(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn closed_form_numerators() {
        assert_eq!(closed_form_numerator(&params(8, 16, 20, 7, 2), 1).unwrap(), parse_univariate(P_K1).unwrap());
        assert_eq!(closed_form_numerator(&params(4, 22, 13, 5, 2), 2).unwrap(), parse_univariate(P_K2).unwrap());
        assert_eq!(closed_form_numerator(&params(10, 17, 25, 4, 2), 3).unwrap(), parse_univariate(P_K3).unwrap());
        assert_eq!(closed_form_numerator(&params(3, 13, 14, 6, 2), 4).unwrap(), parse_univariate(P_K4).unwrap());
    }

    #[test]
    fn second_series_k1() {
        let p = parse_univariate(P_K1).unwrap();
        let q = second_series(&p).unwrap();
        assert_eq!(q.eval_at_one(), 141);
        assert_eq!(q, closed_form_q(&params(8, 16, 20, 7, 2), 1).unwrap());
        // the -t^(a21+1) term is absorbed
        assert!(q.coeff(9) >= 0);
    }

    #[test]
    fn closed_form_q_routes_agree_k3() {
        let pr = params(10, 17, 25, 4, 2);
        let q = closed_form_q(&pr, 3).unwrap();
        assert_eq!(q, closed_form_q_regrouped(&pr, 3).unwrap());
        assert_eq!(second_series(&closed_form_numerator(&pr, 3).unwrap()).unwrap(), q);
        assert_eq!(q.eval_at_one(), 101);
    }

    #[test]
    fn hilbert_function_k1() {
        let q = second_series(&parse_univariate(P_K1).unwrap()).unwrap();
        let h = hilbert_function(&q, 30);
        assert_eq!(h.values[0], 1);
        assert_eq!(h.values[1], 4);
        assert!(h.non_decreasing);
        assert_eq!(h.first_decrease_level, None);
        assert_eq!(h.multiplicity, 141);
        assert!(h.values[h.regularity_index..].iter().all(|&v| v == 141));
        assert_ne!(h.values[h.regularity_index - 1], 141);
    }

    #[test]
    fn hilbert_function_flags_a_decrease() {
        let q = UnivariatePoly::from_pairs([(0, 1), (1, 3), (2, -1), (3, 1)]);
        let h = hilbert_function(&q, 2);
        assert_eq!(h.values, alloc::vec![1, 4, 3, 4]);
        assert!(!h.non_decreasing);
        assert_eq!(h.first_decrease_level, Some(2));
        assert_eq!(h.regularity_index, 3);
    }

    #[test]
    fn k1_verdicts() {
        let cert = k1_monotonic_verdict(&params(8, 16, 20, 7, 2)).unwrap();
        assert!(cert.coefficients.iter().all(|&c| c >= 0));
        assert!(matches!(k1_monotonic_verdict(&params(4, 22, 13, 5, 2)), Err(Error::Precondition(_))));
    }

    fn random_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, 4), 1..7)
            .prop_map(|gs| MonomialIdeal::new(4, gs.into_iter().map(Monomial::new)).unwrap())
    }

    /// Number of degree-`d` monomials in 4 variables outside `m`.
    fn standard_monomials(m: &MonomialIdeal, d: u32) -> i64 {
        let mut count = 0;
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    if !m.contains(&Monomial::new(alloc::vec![a, b, c, d - a - b - c])) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    proptest! {
        #[test]
        fn pivot_invariance(mi in random_ideal(), seed in any::<u64>()) {
            let base = bayer_numerator_pivot(&mi, Pivot::First);
            prop_assert_eq!(bayer_numerator_pivot(&mi, Pivot::MaxDegree), base.clone());
            let mut state = seed;
            let mut random = |g: &[Monomial]| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % g.len()
            };
            prop_assert_eq!(bayer_numerator_with(&mi, &mut random), base);
        }

        #[test]
        fn numerator_counts_standard_monomials(mi in random_ideal()) {
            let p = bayer_numerator(&mi);
            // coefficients of 1 / (1-t)^4 are C(n+3, 3)
            for n in 0..=8u32 {
                let series: i64 = p
                    .pairs()
                    .iter()
                    .filter(|(e, _)| *e <= n)
                    .map(|&(e, c)| {
                        let r = i64::from(n - e);
                        c * (r + 1) * (r + 2) * (r + 3) / 6
                    })
                    .sum();
                prop_assert_eq!(series, standard_monomials(&mi, n));
            }
        }

        #[test]
        fn minimal_generators_do_not_divide_each_other(mi in random_ideal()) {
            let g = mi.generators();
            for i in 0..g.len() {
                for j in 0..g.len() {
                    prop_assert!(i == j || !g[i].divides(&g[j]));
                }
            }
        }
    }
}
