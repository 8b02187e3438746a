//! Exact computation of mixing and Gray code numbers.

pub mod hamilton;
mod params;

pub use hamilton::{hamiltonian_cycle, HamiltonStatus, HamiltonicityVerdict};
pub use params::{
    compute_g, compute_h, compute_h_with, graycode_number_k0, is_hamiltonian_at, mixing_number_k1,
    parameter_report, reconfiguration_path, HStrategy, LevelReport, ParameterReport,
};

use crate::error::{Error, Result};
use std::time::{Duration, Instant};

pub const DEFAULT_MAX_COLORINGS: usize = 2_000_000;
pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(60);

/// Limits for a single decision: coloring-space size and wall-clock time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_colorings: usize,
    pub time_limit: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_colorings: DEFAULT_MAX_COLORINGS,
            time_limit: DEFAULT_TIME_LIMIT,
        }
    }
}

impl Budget {
    /// Defaults overridden by `RECOLOR_BUDGET_NODES` and `RECOLOR_BUDGET_SECS`.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var("RECOLOR_BUDGET_NODES") {
            b.max_colorings = v
                .trim()
                .parse()
                .map_err(|_| Error::Argument(format!("RECOLOR_BUDGET_NODES={v:?} is not a count")))?;
        }
        if let Ok(v) = std::env::var("RECOLOR_BUDGET_SECS") {
            let secs: f64 = v
                .trim()
                .parse()
                .ok()
                .filter(|s: &f64| s.is_finite() && *s >= 0.0)
                .ok_or_else(|| Error::Argument(format!("RECOLOR_BUDGET_SECS={v:?} is not a duration")))?;
            b.time_limit = Duration::from_secs_f64(secs);
        }
        Ok(b)
    }

    pub fn deadline(&self) -> Deadline {
        Deadline {
            start: Instant::now(),
            limit: self.time_limit,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Deadline {
    start: Instant,
    limit: Duration,
}

impl Deadline {
    pub fn expired(&self) -> bool {
        self.start.elapsed() > self.limit
    }
}
