//! Settings resolved from built-in defaults, then an optional `key = value`
//! file, then command-line flags (later sources win).
//!
//! The file is taken from `--config <path>`, else from the
//! `GROVER_ABSZETA_CONFIG` environment variable. Blank lines and lines
//! starting with `#` are ignored; unknown keys are rejected.

use std::path::Path;

use clap::ValueEnum;
use grover_abszeta_core::abszeta::{BinomialWeight, SeriesConfig};
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const CONFIG_ENV: &str = "GROVER_ABSZETA_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BinomialSetting {
    Included,
    Omitted,
}

impl From<BinomialSetting> for BinomialWeight {
    fn from(b: BinomialSetting) -> Self {
        match b {
            BinomialSetting::Included => BinomialWeight::Included,
            BinomialSetting::Omitted => BinomialWeight::Omitted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Settings {
    /// Significant digits in text output; JSON always carries full doubles.
    pub precision: usize,
    pub lmax: usize,
    pub rmax: usize,
    pub product_lmax: usize,
    pub product_rmax: usize,
    pub binomial: BinomialSetting,
    pub tolerance_scale: f64,
    /// Brute-force period scan cutoff; `None` means the per-`N` default.
    pub cutoff: Option<u64>,
}

impl Default for Settings {
    fn default() -> Self {
        let series = SeriesConfig::default();
        Self {
            precision: 12,
            lmax: series.l_max,
            rmax: series.r_max,
            product_lmax: 24,
            product_rmax: 24,
            binomial: BinomialSetting::Included,
            tolerance_scale: 1.0,
            cutoff: None,
        }
    }
}

/// Flag values that override the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub precision: Option<usize>,
    pub lmax: Option<usize>,
    pub rmax: Option<usize>,
    pub binomial: Option<BinomialSetting>,
    pub tolerance_scale: Option<f64>,
    pub cutoff: Option<u64>,
}

impl Settings {
    pub fn resolve(config: Option<&Path>, overrides: &Overrides) -> CliResult<Self> {
        let mut settings = Self::default();
        let env_path = std::env::var_os(CONFIG_ENV);
        let path = config.or(env_path.as_deref().map(Path::new));
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            settings.apply_file(&text)?;
        }
        settings.apply_overrides(overrides);
        settings.validate()?;
        Ok(settings)
    }

    pub fn apply_file(&mut self, text: &str) -> CliResult<()> {
        for (lineno, raw) in text.lines().enumerate() {
            // Everything after `#` is a comment.
            let line = raw.split_once('#').map_or(raw, |(before, _)| before).trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            self.set(key.trim(), value.trim())
                .map_err(|msg| CliError::Config(format!("line {}: {msg}", lineno + 1)))?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
            value
                .parse()
                .map_err(|_| format!("invalid value {value:?} for {key}"))
        }
        match key {
            "precision" => self.precision = num(key, value)?,
            "lmax" => self.lmax = num(key, value)?,
            "rmax" => self.rmax = num(key, value)?,
            "product_lmax" => self.product_lmax = num(key, value)?,
            "product_rmax" => self.product_rmax = num(key, value)?,
            "tolerance_scale" => self.tolerance_scale = num(key, value)?,
            "cutoff" => self.cutoff = Some(num(key, value)?),
            "binomial" => {
                self.binomial = BinomialSetting::from_str(value, true)
                    .map_err(|_| format!("binomial must be included or omitted, got {value:?}"))?
            }
            _ => return Err(format!("unknown key {key:?}")),
        }
        Ok(())
    }

    pub fn apply_overrides(&mut self, o: &Overrides) {
        if let Some(p) = o.precision {
            self.precision = p;
        }
        if let Some(l) = o.lmax {
            self.lmax = l;
            self.product_lmax = l;
        }
        if let Some(r) = o.rmax {
            self.rmax = r;
            self.product_rmax = r;
        }
        if let Some(b) = o.binomial {
            self.binomial = b;
        }
        if let Some(t) = o.tolerance_scale {
            self.tolerance_scale = t;
        }
        if let Some(c) = o.cutoff {
            self.cutoff = Some(c);
        }
    }

    fn validate(&self) -> CliResult<()> {
        if !(1..=17).contains(&self.precision) {
            return Err(CliError::Usage(format!(
                "precision must be between 1 and 17 digits, got {}",
                self.precision
            )));
        }
        if !(self.tolerance_scale.is_finite() && self.tolerance_scale > 0.0) {
            return Err(CliError::Usage(format!(
                "tolerance scale must be positive, got {}",
                self.tolerance_scale
            )));
        }
        Ok(())
    }

    pub fn series_config(&self) -> SeriesConfig {
        SeriesConfig {
            l_max: self.lmax,
            r_max: self.rmax,
            binomial: self.binomial.into(),
        }
    }

    pub fn product_config(&self) -> SeriesConfig {
        SeriesConfig {
            l_max: self.product_lmax,
            r_max: self.product_rmax,
            binomial: self.binomial.into(),
        }
    }
}
