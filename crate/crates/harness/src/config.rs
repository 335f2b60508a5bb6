use amalgam::PrimeSeq;
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SIZE_GUARD: u128 = amalgam::finite::DEFAULT_SIZE_GUARD;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid prime list: {0}")]
    Primes(amalgam::Error),
    #[error("tolerance must be positive and finite, got {0}")]
    Tolerance(f64),
    #[error("size guard must be positive")]
    SizeGuard,
}

/// Run settings. `radius`, `level` and `samples` override the per-check
/// defaults when set.
#[derive(Debug, Clone)]
pub struct Config {
    pub primes: PrimeSeq,
    pub seed: u64,
    pub tolerance: f64,
    pub size_guard: u128,
    pub radius: Option<usize>,
    pub level: Option<usize>,
    pub samples: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            primes: PrimeSeq::default(),
            seed: DEFAULT_SEED,
            tolerance: DEFAULT_TOLERANCE,
            size_guard: DEFAULT_SIZE_GUARD,
            radius: None,
            level: None,
            samples: None,
        }
    }
}

impl Config {
    pub fn with_primes(primes: Vec<u64>) -> Result<Self, ConfigError> {
        Ok(Self {
            primes: PrimeSeq::new(primes).map_err(ConfigError::Primes)?,
            ..Self::default()
        })
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(ConfigError::Tolerance(self.tolerance));
        }
        if self.size_guard == 0 {
            return Err(ConfigError::SizeGuard);
        }
        Ok(())
    }

    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    pub fn radius_or(&self, default: usize) -> usize {
        self.radius.unwrap_or(default)
    }

    /// The requested level if one was given, otherwise `defaults`.
    pub fn levels_or(&self, defaults: &[usize]) -> Vec<usize> {
        match self.level {
            Some(l) => vec![l],
            None => defaults.to_vec(),
        }
    }

    pub fn record(&self) -> ConfigRecord {
        ConfigRecord {
            primes: self.primes.as_slice().to_vec(),
            seed: self.seed,
            tolerance: self.tolerance,
            size_guard: self.size_guard.to_string(),
            radius: self.radius,
            level: self.level,
            samples: self.samples,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ConfigRecord {
    pub primes: Vec<u64>,
    pub seed: u64,
    pub tolerance: f64,
    pub size_guard: String,
    pub radius: Option<usize>,
    pub level: Option<usize>,
    pub samples: Option<usize>,
}
