//! The subcommands as functions from parameters to JSON reports.

use std::time::Instant;

use pseudosym_core::cm::{cm_by_divisibility, CmMethod, CmVerdict};
use pseudosym_core::hilbert::{
    bayer_numerator, closed_form_numerator, k1_monotonic_verdict, HilbertReport, UnivariatePoly,
};
use pseudosym_core::semigroup::{
    check_conditions, construct_generators, frobenius_and_gaps, hilbert_oracle, is_pseudo_symmetric, is_symmetric,
    ConditionReport, NumericalSemigroup,
};
use pseudosym_core::stdbasis::{
    canonical, standard_basis, tangent_cone_ideal, tangent_cone_monomial_ideal, BasisSet, TangentConeIdeal,
};
use pseudosym_core::toric::{
    check_closed_form_scope, closed_form_basis_with, compute_k, condition6_is_tight, smallest_k, toric_generators,
    ClosedFormBasis, KMode,
};
use pseudosym_core::{Error, Monomial, Polynomial, PseudoSymmetricParams};
use serde_json::{json, Map, Value};

use crate::failure::{Failure, EXIT_MISMATCH, EXIT_OK};
use crate::fixtures::Fixtures;
use crate::params::params_json;

/// A JSON report plus the disagreements found while building it.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub findings: Vec<String>,
}

impl Report {
    fn new(json: Value, findings: Vec<String>) -> Self {
        Report { json, findings }
    }

    pub fn exit_code(&self) -> u8 {
        if self.findings.is_empty() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasisMode {
    #[default]
    Engine,
    ClosedForm,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HilbertSource {
    #[default]
    Bayer,
    ClosedForm,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub k_mode: KMode,
    pub max_level: Option<usize>,
    pub cm: bool,
    pub timing: bool,
}

pub fn k_mode_name(mode: KMode) -> &'static str {
    match mode {
        KMode::NonStrict => "non_strict",
        KMode::Strict => "strict",
    }
}

fn poly_strings(polys: &[Polynomial]) -> Value {
    Value::from(canonical(polys).iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn pairs(p: &UnivariatePoly) -> Value {
    Value::from(p.pairs().into_iter().map(|(e, c)| json!([e, c])).collect::<Vec<_>>())
}

fn conditions_json(c: &ConditionReport) -> Value {
    json!({
        "c1": c.c1, "c2": c.c2, "c3": c.c3, "c4": c.c4, "c5": c.c5, "c6": c.c6,
        "increasing": c.increasing,
    })
}

fn in_k_regime(p: &PseudoSymmetricParams) -> bool {
    p.alpha4() == 2 && check_conditions(p).c4
}

/// Both readings of the `k`-inequality. `null` entries mean no admissible `k`.
fn k_json(p: &PseudoSymmetricParams) -> Value {
    if !in_k_regime(p) {
        return Value::Null;
    }
    let ns = smallest_k(p, KMode::NonStrict);
    let st = smallest_k(p, KMode::Strict);
    json!({
        "non_strict": compute_k(p, KMode::NonStrict).ok(),
        "strict": compute_k(p, KMode::Strict).ok(),
        "non_strict_smallest": ns,
        "strict_smallest": st,
        "agree": ns == st,
    })
}

fn witness_string(m: &Option<Monomial>) -> Value {
    m.as_ref().map_or(Value::Null, |m| Value::from(m.to_string()))
}

fn cm_json(v: &CmVerdict) -> Value {
    let method = match v.method {
        CmMethod::MonomialGenerators => "monomial_generators",
        CmMethod::RevLexLeadingIdeal => "revlex_leading_ideal",
    };
    json!({ "cohen_macaulay": v.cohen_macaulay, "witness": witness_string(&v.witness), "method": method })
}

/// `X1^alpha21 * X4`, the lowest form of `f2` when `alpha2 > alpha21 + 1`.
pub fn expected_witness(p: &PseudoSymmetricParams) -> Monomial {
    Monomial::new(vec![p.alpha21(), 0, 0, 1])
}

pub fn gens(p: &PseudoSymmetricParams) -> Result<Report, Failure> {
    let s = construct_generators(p)?;
    let gaps = frobenius_and_gaps(&s);
    let json = json!({
        "params": params_json(p),
        "generators": s.generators(),
        "conditions": conditions_json(&check_conditions(p)),
        "condition6_tight": p.alpha4() == 2 && condition6_is_tight(p),
        "k": k_json(p),
        "frobenius": gaps.frobenius,
        "genus": gaps.genus(),
        "pseudo_symmetric": is_pseudo_symmetric(&s),
    });
    let mut findings = Vec::new();
    if !is_pseudo_symmetric(&s) {
        findings.push(format!("generators {:?} are not pseudo-symmetric", s.generators()));
    }
    Ok(Report::new(json, findings))
}

/// Standard basis of the toric ideal computed by the engine.
pub fn engine_basis(p: &PseudoSymmetricParams) -> Result<BasisSet, Failure> {
    Ok(standard_basis(&toric_generators(p)?.generators)?)
}

/// Closed-form basis, or the reason it does not exist under `mode`.
fn closed_form(p: &PseudoSymmetricParams, mode: KMode) -> Result<Result<ClosedFormBasis, Error>, Failure> {
    check_closed_form_scope(p)?;
    match closed_form_basis_with(p, mode) {
        Err(e @ Error::Unsupported(_)) => Ok(Err(e)),
        other => Ok(Ok(other?)),
    }
}

pub fn basis(p: &PseudoSymmetricParams, mode: BasisMode, k_mode: KMode) -> Result<Report, Failure> {
    let mut obj = Map::new();
    let mut findings = Vec::new();
    obj.insert("params".into(), params_json(p));
    obj.insert("k_mode".into(), k_mode_name(k_mode).into());
    let engine = match mode {
        BasisMode::ClosedForm => None,
        _ => Some(engine_basis(p)?),
    };
    let closed = match mode {
        BasisMode::Engine => None,
        BasisMode::ClosedForm => Some(closed_form(p, k_mode)?.map_err(Failure::from)?),
        BasisMode::Both => match closed_form(p, k_mode)? {
            Ok(cf) => Some(cf),
            Err(e) => {
                findings.push(format!("closed form undefined: {e}"));
                None
            }
        },
    };
    if let Some(b) = &engine {
        obj.insert("engine".into(), poly_strings(&b.elements));
        obj.insert("count".into(), b.len().into());
    }
    if let Some(cf) = &closed {
        obj.insert("closed_form".into(), poly_strings(&cf.elements));
        obj.insert("k".into(), cf.k.into());
        obj.entry("count").or_insert(cf.elements.len().into());
    }
    if mode == BasisMode::Both {
        let same = match (&engine, &closed) {
            (Some(b), Some(cf)) => b.same_elements(&cf.elements),
            _ => false,
        };
        if !same && closed.is_some() {
            findings.push("engine basis differs from the closed form".into());
        }
        obj.insert("match".into(), same.into());
    }
    Ok(Report::new(Value::Object(obj), findings))
}

/// Engine basis, tangent cone and its Bayer numerator.
pub struct ConeData {
    pub basis: BasisSet,
    pub cone: TangentConeIdeal,
    pub numerator: UnivariatePoly,
}

pub fn cone_data(p: &PseudoSymmetricParams) -> Result<ConeData, Failure> {
    let basis = engine_basis(p)?;
    let cone = tangent_cone_ideal(&basis)?;
    let numerator = bayer_numerator(&tangent_cone_monomial_ideal(&cone)?);
    Ok(ConeData { basis, cone, numerator })
}

fn closed_numerator(p: &PseudoSymmetricParams, mode: KMode) -> Result<UnivariatePoly, Failure> {
    check_closed_form_scope(p)?;
    Ok(closed_form_numerator(p, compute_k(p, mode)?)?)
}

fn hilbert_json(r: &HilbertReport) -> Map<String, Value> {
    let f = &r.function;
    let mut m = Map::new();
    m.insert("P".into(), pairs(&r.numerator));
    m.insert("Q".into(), pairs(&r.second_series));
    m.insert("H".into(), f.values.clone().into());
    m.insert("non_decreasing".into(), f.non_decreasing.into());
    m.insert("first_decrease_level".into(), f.first_decrease_level.into());
    m.insert("regularity_index".into(), f.regularity_index.into());
    m.insert("multiplicity".into(), f.multiplicity.into());
    m
}

pub fn hilbert(
    p: &PseudoSymmetricParams,
    source: HilbertSource,
    k_mode: KMode,
    max_level: Option<usize>,
) -> Result<Report, Failure> {
    let mut findings = Vec::new();
    let bayer = match source {
        HilbertSource::ClosedForm => None,
        _ => Some(cone_data(p)?.numerator),
    };
    let closed = match source {
        HilbertSource::Bayer => None,
        _ => Some(closed_numerator(p, k_mode)?),
    };
    let numerator = bayer.clone().or_else(|| closed.clone()).expect("one source is always computed");
    let report = HilbertReport::from_numerator(numerator, max_level)?;
    let mut obj = hilbert_json(&report);
    obj.insert("params".into(), params_json(p));
    if let (Some(b), Some(c)) = (&bayer, &closed) {
        if b != c {
            findings.push(format!("Bayer numerator {b} differs from closed form {c}"));
        }
        obj.insert("match".into(), (b == c).into());
    }
    Ok(Report::new(Value::Object(obj), findings))
}

fn oracle_values(s: &NumericalSemigroup, level: usize) -> Vec<i64> {
    hilbert_oracle(s, level).into_iter().map(|v| v as i64).collect()
}

pub fn oracle(p: &PseudoSymmetricParams, max_level: Option<usize>) -> Result<Report, Failure> {
    let s = construct_generators(p)?;
    let gaps = frobenius_and_gaps(&s);
    let level = max_level.unwrap_or(20);
    let json = json!({
        "params": params_json(p),
        "generators": s.generators(),
        "frobenius": gaps.frobenius,
        "gaps": gaps.gaps,
        "genus": gaps.genus(),
        "pseudo_symmetric": is_pseudo_symmetric(&s),
        "symmetric": is_symmetric(&s),
        "H": oracle_values(&s, level),
    });
    Ok(Report::new(json, Vec::new()))
}

/// The full cross-check for one parameter tuple.
pub fn verify(p: &PseudoSymmetricParams, opts: &VerifyOptions, fixtures: &Fixtures) -> Result<Report, Failure> {
    let start = Instant::now();
    let mut findings: Vec<String> = Vec::new();
    let mut obj = Map::new();
    let s = construct_generators(p)?;
    let conditions = check_conditions(p);
    let tight = p.alpha4() == 2 && condition6_is_tight(p);
    let in_scope = check_closed_form_scope(p).is_ok();
    obj.insert("params".into(), params_json(p));
    obj.insert("generators".into(), s.generators().into());
    obj.insert("conditions".into(), conditions_json(&conditions));
    obj.insert("condition6_tight".into(), tight.into());
    obj.insert("closed_form_scope".into(), in_scope.into());

    let data = cone_data(p)?;
    let engine_count = data.basis.len();

    // k and the closed-form basis
    let mut k_obj = match k_json(p) {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    k_obj.insert("mode".into(), k_mode_name(opts.k_mode).into());
    let mut basis_obj = Map::new();
    basis_obj.insert("engine_count".into(), engine_count.into());
    let mut closed_k = None;
    if tight {
        obj.insert(
            "refused".into(),
            "alpha1 + alpha21 + 1 = alpha2 + alpha4: the leading monomial of f6 is fixed by the tie-break".into(),
        );
    } else if in_scope {
        let implied = engine_count.checked_sub(6).filter(|&k| k > 0);
        k_obj.insert("engine_implied".into(), implied.into());
        let fits = |m: KMode| compute_k(p, m).ok().map(|k| k as usize) == implied;
        let verdict = match (fits(KMode::NonStrict), fits(KMode::Strict)) {
            (true, true) => "both",
            (true, false) => "non_strict",
            (false, true) => "strict",
            (false, false) => "neither",
        };
        k_obj.insert("matches_engine".into(), verdict.into());
        match closed_form(p, opts.k_mode)? {
            Ok(cf) => {
                let same = data.basis.same_elements(&cf.elements);
                basis_obj.insert("closed_form_count".into(), cf.elements.len().into());
                basis_obj.insert("match".into(), same.into());
                if !same {
                    findings.push(format!(
                        "engine basis ({engine_count} elements) differs from the closed form with {} k = {} ({} elements)",
                        k_mode_name(opts.k_mode),
                        cf.k,
                        cf.elements.len()
                    ));
                }
                closed_k = Some(cf.k);
            }
            Err(e) => {
                basis_obj.insert("closed_form_count".into(), Value::Null);
                basis_obj.insert("match".into(), false.into());
                findings.push(format!(
                    "closed form undefined under {} k ({e}); engine basis has {engine_count} elements",
                    k_mode_name(opts.k_mode)
                ));
            }
        }
    }
    if let Some(printed) = fixtures.basis(p)? {
        let same = data.basis.same_elements(&printed);
        basis_obj.insert("fixture_match".into(), same.into());
        if !same {
            findings.push(format!("engine basis differs from the fixture ({} elements)", printed.len()));
        }
    }
    obj.insert("k".into(), Value::Object(k_obj));
    obj.insert("basis".into(), Value::Object(basis_obj));
    obj.insert(
        "tangent_cone".into(),
        json!({ "monomial": data.cone.monomial_flag, "generators": poly_strings(&data.cone.generators) }),
    );

    // Hilbert series
    let report = HilbertReport::from_numerator(data.numerator.clone(), opts.max_level)?;
    let mut h = hilbert_json(&report);
    let order = data.numerator.order_at_one();
    h.insert("order_at_one".into(), order.into());
    if order != Some(3) {
        findings.push(format!("numerator vanishes to order {order:?} at t = 1, expected 3"));
    }
    if report.function.multiplicity as u64 != s.smallest_generator() {
        findings.push(format!(
            "Q(1) = {} but the smallest generator is {}",
            report.function.multiplicity,
            s.smallest_generator()
        ));
    }
    if let Some(k) = closed_k {
        let cf = closed_form_numerator(p, k)?;
        let same = cf == data.numerator;
        h.insert("closed_form_match".into(), same.into());
        if !same {
            findings.push(format!("Bayer numerator differs from the closed form with k = {k}"));
        }
    }
    if let Some(printed) = fixtures.numerator(p)? {
        let same = printed == data.numerator;
        h.insert("fixture_match".into(), same.into());
        if !same {
            findings.push("Bayer numerator differs from the fixture".into());
        }
    }
    let values = &report.function.values;
    let oracle = oracle_values(&s, values.len() - 1);
    let oracle_match = *values == oracle;
    h.insert("oracle_match".into(), oracle_match.into());
    if !oracle_match {
        findings.push("Hilbert function differs from the semigroup order count".into());
    }
    obj.insert("hilbert".into(), Value::Object(h));

    // monotonicity
    let k1 = match compute_k(p, KMode::NonStrict) {
        Ok(1) if in_scope && !tight => match k1_monotonic_verdict(p) {
            Ok(_) => Some(true),
            Err(Error::TheoremViolation(m)) => {
                findings.push(format!("k = 1 but {m}"));
                Some(false)
            }
            Err(e) => return Err(e.into()),
        },
        _ => None,
    };
    obj.insert("k1_certificate".into(), k1.into());

    if opts.cm {
        let verdict = cm_by_divisibility(&data.cone)?;
        let mut cm = cm_json(&verdict);
        if let Value::Object(m) = &mut cm {
            if in_scope {
                let expected = Some(expected_witness(p));
                let ok = !verdict.cohen_macaulay && verdict.witness == expected;
                m.insert("expected_witness".into(), witness_string(&expected));
                m.insert("matches_expected".into(), ok.into());
                if !ok {
                    findings.push(format!(
                        "tangent cone verdict {} with witness {:?}, expected not Cohen-Macaulay with {}",
                        verdict.cohen_macaulay,
                        verdict.witness.as_ref().map(ToString::to_string),
                        expected_witness(p)
                    ));
                }
            }
        }
        obj.insert("cm".into(), cm);
    }

    obj.insert("findings".into(), findings.clone().into());
    obj.insert("ok".into(), findings.is_empty().into());
    if opts.timing {
        obj.insert("elapsed_ms".into(), (start.elapsed().as_millis() as u64).into());
    }
    Ok(Report::new(Value::Object(obj), findings))
}
