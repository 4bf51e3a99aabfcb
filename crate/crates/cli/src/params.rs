use clap::Args;
use pseudosym_core::PseudoSymmetricParams;
use serde_json::{json, Value};

use crate::failure::Failure;

/// The five integers `alpha1..alpha4, alpha21`.
#[derive(Args, Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamArgs {
    #[arg(long)]
    pub alpha1: u32,
    #[arg(long)]
    pub alpha2: u32,
    #[arg(long)]
    pub alpha3: u32,
    #[arg(long)]
    pub alpha4: u32,
    #[arg(long)]
    pub alpha21: u32,
}

impl ParamArgs {
    pub fn params(&self) -> Result<PseudoSymmetricParams, Failure> {
        Ok(PseudoSymmetricParams::new(self.alpha1, self.alpha2, self.alpha3, self.alpha4, self.alpha21)?)
    }
}

/// File-name stem used for fixtures, e.g. `a21-8_a1-16_a2-20_a3-7_a4-2`.
pub fn tuple_label(p: &PseudoSymmetricParams) -> String {
    format!("a21-{}_a1-{}_a2-{}_a3-{}_a4-{}", p.alpha21(), p.alpha1(), p.alpha2(), p.alpha3(), p.alpha4())
}

pub fn params_json(p: &PseudoSymmetricParams) -> Value {
    json!({
        "alpha1": p.alpha1(),
        "alpha2": p.alpha2(),
        "alpha3": p.alpha3(),
        "alpha4": p.alpha4(),
        "alpha21": p.alpha21(),
    })
}
