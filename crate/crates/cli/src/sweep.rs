//! Parameter sweeps: every tuple in a box, filtered, verified in parallel,
//! one JSON line per tuple.

use std::collections::BTreeMap;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Mutex;

use pseudosym_core::semigroup::construct_generators;
use pseudosym_core::toric::{check_closed_form_scope, compute_k, KMode};
use pseudosym_core::PseudoSymmetricParams;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::failure::{Failure, EXIT_MISMATCH};
use crate::fixtures::Fixtures;
use crate::params::{params_json, tuple_label};
use crate::pipeline::{verify, VerifyOptions};

/// Inclusive integer interval written `LO:HI` or `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval(pub RangeInclusive<u32>);

impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once(':') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty interval {lo}:{hi}"));
        }
        Ok(Interval(lo..=hi))
    }
}

/// Which tuples a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Scope {
    /// `alpha4 = 2`, the four inequalities and increasing generators.
    #[default]
    ClosedForm,
    /// Every valid tuple with coprime generators.
    Valid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub alpha1: RangeInclusive<u32>,
    pub alpha2: RangeInclusive<u32>,
    pub alpha3: RangeInclusive<u32>,
    pub alpha4: RangeInclusive<u32>,
    pub alpha21: RangeInclusive<u32>,
    pub scope: Scope,
    /// Keep only tuples with this non-strict `k`.
    pub k: Option<u32>,
    pub jobs: usize,
    pub sorted: bool,
    pub verify: VerifyOptions,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            alpha1: 2..=8,
            alpha2: 2..=8,
            alpha3: 2..=8,
            alpha4: 2..=2,
            alpha21: 1..=8,
            scope: Scope::ClosedForm,
            k: None,
            jobs: 0,
            sorted: false,
            verify: VerifyOptions { cm: true, ..VerifyOptions::default() },
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<(), Failure> {
        let lows = [
            ("alpha1", *self.alpha1.start(), 2),
            ("alpha2", *self.alpha2.start(), 2),
            ("alpha3", *self.alpha3.start(), 2),
            ("alpha4", *self.alpha4.start(), 2),
            ("alpha21", *self.alpha21.start(), 1),
        ];
        for (name, lo, min) in lows {
            if lo < min {
                return Err(Failure::Invalid(format!("{name} range must start at {min} or above")));
            }
        }
        Ok(())
    }
}

/// The tuples of the box that pass the filters, in lexicographic order of
/// `(alpha21, alpha1, alpha2, alpha3, alpha4)`.
pub fn tuples(cfg: &SweepConfig) -> Result<Vec<PseudoSymmetricParams>, Failure> {
    cfg.validate()?;
    let mut out = Vec::new();
    for a21 in cfg.alpha21.clone() {
        for a1 in cfg.alpha1.clone() {
            for a2 in cfg.alpha2.clone() {
                for a3 in cfg.alpha3.clone() {
                    for a4 in cfg.alpha4.clone() {
                        let Ok(p) = PseudoSymmetricParams::new(a1, a2, a3, a4, a21) else { continue };
                        let keep = match cfg.scope {
                            Scope::ClosedForm => check_closed_form_scope(&p).is_ok(),
                            Scope::Valid => construct_generators(&p).is_ok(),
                        };
                        let k_ok = cfg.k.is_none_or(|k| compute_k(&p, KMode::NonStrict).ok() == Some(k));
                        if keep && k_ok {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Counts aggregated over a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub tuples: usize,
    pub ok: usize,
    pub by_k: BTreeMap<String, usize>,
    pub non_decreasing: usize,
    pub decreasing: Vec<String>,
    pub mismatches: Vec<String>,
    pub condition6_tight: Vec<String>,
    pub errors: Vec<String>,
    /// Worst exit code over all tuples.
    pub exit_code: u8,
}

impl SweepSummary {
    fn add(&mut self, label: String, outcome: &Result<Value, Failure>) {
        self.tuples += 1;
        let r = match outcome {
            Ok(r) => r,
            Err(f) => {
                self.errors.push(format!("{label}: {f}"));
                self.exit_code = self.exit_code.max(f.exit_code());
                return;
            }
        };
        let k = r["k"]["non_strict"].as_u64().map_or("none".to_string(), |k| k.to_string());
        *self.by_k.entry(k).or_insert(0) += 1;
        if r["hilbert"]["non_decreasing"] == true {
            self.non_decreasing += 1;
        } else {
            self.decreasing.push(label.clone());
        }
        if r["condition6_tight"] == true {
            self.condition6_tight.push(label.clone());
        }
        if r["ok"] == true {
            self.ok += 1;
        } else {
            self.mismatches.push(label);
            self.exit_code = self.exit_code.max(EXIT_MISMATCH);
        }
    }

    fn finish(&mut self) {
        for v in [&mut self.decreasing, &mut self.mismatches, &mut self.condition6_tight, &mut self.errors] {
            v.sort();
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tuples": self.tuples,
            "ok": self.ok,
            "by_k": self.by_k,
            "non_decreasing": self.non_decreasing,
            "decreasing": self.decreasing,
            "mismatches": self.mismatches,
            "condition6_tight": self.condition6_tight,
            "errors": self.errors,
        })
    }
}

fn line_for(p: &PseudoSymmetricParams, outcome: &Result<Value, Failure>) -> String {
    let v = match outcome {
        Ok(v) => v.clone(),
        Err(f) => json!({ "params": params_json(p), "error": f.message(), "exit_code": f.exit_code() }),
    };
    v.to_string()
}

/// Runs the sweep, writing one line per tuple to `sink`. Without `sorted`
/// lines appear in completion order.
pub fn run_sweep(cfg: &SweepConfig, fixtures: &Fixtures, sink: &mut (dyn Write + Send)) -> Result<SweepSummary, Failure> {
    let list = tuples(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))?;
    let run = |p: &PseudoSymmetricParams| verify(p, &cfg.verify, fixtures).map(|r| r.json);
    let io_err = |e: std::io::Error| Failure::Invalid(format!("writing sweep output: {e}"));

    let mut summary = SweepSummary::default();
    if cfg.sorted {
        let outcomes: Vec<_> = pool.install(|| list.par_iter().map(run).collect());
        for (p, o) in list.iter().zip(&outcomes) {
            writeln!(sink, "{}", line_for(p, o)).map_err(io_err)?;
            summary.add(tuple_label(p), o);
        }
    } else {
        let shared = Mutex::new((sink, SweepSummary::default(), None::<std::io::Error>));
        pool.install(|| {
            list.par_iter().for_each(|p| {
                let o = run(p);
                let line = line_for(p, &o);
                let mut guard = shared.lock().expect("sweep writer poisoned");
                let (sink, summary, err) = &mut *guard;
                if err.is_none() {
                    if let Err(e) = writeln!(sink, "{line}") {
                        *err = Some(e);
                    }
                }
                summary.add(tuple_label(p), &o);
            })
        });
        let (sink, s, err) = shared.into_inner().expect("sweep writer poisoned");
        if let Some(e) = err {
            return Err(io_err(e));
        }
        sink.flush().map_err(io_err)?;
        summary = s;
        summary.finish();
        return Ok(summary);
    }
    sink.flush().map_err(io_err)?;
    summary.finish();
    Ok(summary)
}
