//! The continuous knowledge–uncertainty model.
//!
//! If uncertainty changes in proportion to itself as knowledge (or
//! ignorance) varies, then `ln U` is linear in that variable:
//! `ln U = slope * v + intercept`. Pinning `U` at `v = 0` and `v = 1`
//! determines both constants, and the closed form converts in either
//! direction between `U` and `v`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Which variable the model is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariableKind {
    /// Uncertainty falls as knowledge rises: negative slope.
    Knowledge,
    /// Uncertainty rises with ignorance: positive slope.
    Ignorance,
}

impl std::str::FromStr for VariableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "knowledge" => Ok(VariableKind::Knowledge),
            "ignorance" => Ok(VariableKind::Ignorance),
            other => Err(Error::Input(format!("unknown variable kind `{other}`"))),
        }
    }
}

// Relative slack on the uncertainty range, so that values produced by
// `predict_uncertainty` at the end points are always accepted back.
const RANGE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvolutionModel {
    slope: f64,
    intercept: f64,
    kind: VariableKind,
    u_min: f64,
    u_max: f64,
}

impl EvolutionModel {
    /// Fits `ln U = slope * v + intercept` through `U(0) = u_at_var0` and
    /// `U(1) = u_at_var1`.
    pub fn calibrate(u_at_var0: f64, u_at_var1: f64, kind: VariableKind) -> Result<Self> {
        for u in [u_at_var0, u_at_var1] {
            if !(u.is_finite() && u > 0.0) {
                return Err(Error::Domain(format!(
                    "uncertainty boundary values must be finite and positive, got {u}"
                )));
            }
        }
        let ordered = match kind {
            VariableKind::Knowledge => u_at_var1 < u_at_var0,
            VariableKind::Ignorance => u_at_var1 > u_at_var0,
        };
        if !ordered {
            let want = match kind {
                VariableKind::Knowledge => "decrease",
                VariableKind::Ignorance => "increase",
            };
            return Err(Error::Sign(format!(
                "uncertainty must strictly {want} from v=0 (U={u_at_var0}) to v=1 (U={u_at_var1})"
            )));
        }
        Ok(EvolutionModel {
            slope: (u_at_var1 / u_at_var0).ln(),
            intercept: u_at_var0.ln(),
            kind,
            u_min: u_at_var0.min(u_at_var1),
            u_max: u_at_var0.max(u_at_var1),
        })
    }

    /// The knowledge model for `n` objects: `U(K=0) = n²`, `U(K=1) = n`.
    pub fn knowledge_for_objects(n: usize) -> Result<Self> {
        let n = object_count(n)?;
        EvolutionModel::calibrate(n * n, n, VariableKind::Knowledge)
    }

    /// The ignorance model for `n` objects: `U(I=0) = n`, `U(I=1) = n²`.
    pub fn ignorance_for_objects(n: usize) -> Result<Self> {
        let n = object_count(n)?;
        EvolutionModel::calibrate(n, n * n, VariableKind::Ignorance)
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn intercept(&self) -> f64 {
        self.intercept
    }

    pub fn kind(&self) -> VariableKind {
        self.kind
    }

    pub fn u_min(&self) -> f64 {
        self.u_min
    }

    pub fn u_max(&self) -> f64 {
        self.u_max
    }

    /// `U(v) = exp(slope * v + intercept)` for `v` in `[0, 1]`.
    pub fn predict_uncertainty(&self, v: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Domain(format!(
                "variable must lie in [0, 1], got {v}"
            )));
        }
        Ok((self.slope * v + self.intercept).exp())
    }

    /// Inverts the model: `v = (ln U - intercept) / slope`.
    pub fn infer_variable(&self, u: f64) -> Result<f64> {
        let lo = self.u_min * (1.0 - RANGE_SLACK);
        let hi = self.u_max * (1.0 + RANGE_SLACK);
        if !(lo..=hi).contains(&u) {
            return Err(Error::Domain(format!(
                "uncertainty must lie in [{}, {}], got {u}",
                self.u_min, self.u_max
            )));
        }
        Ok(((u.ln() - self.intercept) / self.slope).clamp(0.0, 1.0))
    }
}

fn object_count(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("need at least 2 objects, got {n}")));
    }
    Ok(n as f64)
}
