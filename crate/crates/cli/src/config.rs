//! Run configuration: command-line flags over a `key = value` file over defaults.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use primezeta::estimates::BoundVariant;
use primezeta::Mode;

/// A problem with user input; reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input_error(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n_max: u64,
    pub sigma_step: f64,
    pub tau_step: f64,
    pub zoom_step: f64,
    pub quad_tol: f64,
    pub mode: Mode,
    pub bound_variant: BoundVariant,
    pub seed: u64,
    pub output_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_max: 100,
            sigma_step: 0.1,
            tau_step: 0.1,
            zoom_step: 0.001,
            quad_tol: 1e-8,
            mode: Mode::Optimized,
            bound_variant: BoundVariant::SqrtXTimesLog,
            seed: 20240501,
            output_dir: PathBuf::from("out"),
        }
    }
}

/// Values that may be set from the command line; `None` falls through.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub n_max: Option<u64>,
    pub sigma_step: Option<f64>,
    pub tau_step: Option<f64>,
    pub zoom_step: Option<f64>,
    pub quad_tol: Option<f64>,
    pub mode: Option<Mode>,
    pub bound_variant: Option<BoundVariant>,
    pub seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> anyhow::Result<T>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| input_error(format!("config key `{key}`: cannot parse `{value}`: {e}")))
}

impl RunConfig {
    /// Applies the lines of a `key = value` file. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn apply_file_text(&mut self, text: &str) -> anyhow::Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| input_error(format!("config line {}: expected key = value", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "n_max" => self.n_max = parse(key, value)?,
                "sigma_step" => self.sigma_step = parse(key, value)?,
                "tau_step" => self.tau_step = parse(key, value)?,
                "zoom_step" => self.zoom_step = parse(key, value)?,
                "quad_tol" => self.quad_tol = parse(key, value)?,
                "mode" => self.mode = parse(key, value)?,
                "bound_variant" => self.bound_variant = parse(key, value)?,
                "seed" => self.seed = parse(key, value)?,
                "output_dir" => self.output_dir = PathBuf::from(value),
                other => return Err(input_error(format!("unknown config key `{other}`"))),
            }
        }
        Ok(())
    }

    pub fn apply_overrides(&mut self, o: &Overrides) {
        if let Some(v) = o.n_max {
            self.n_max = v;
        }
        if let Some(v) = o.sigma_step {
            self.sigma_step = v;
        }
        if let Some(v) = o.tau_step {
            self.tau_step = v;
        }
        if let Some(v) = o.zoom_step {
            self.zoom_step = v;
        }
        if let Some(v) = o.quad_tol {
            self.quad_tol = v;
        }
        if let Some(v) = o.mode {
            self.mode = v;
        }
        if let Some(v) = o.bound_variant {
            self.bound_variant = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = &o.output_dir {
            self.output_dir = v.clone();
        }
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.n_max < 2 {
            return Err(input_error(format!("n_max must be at least 2, got {}", self.n_max)));
        }
        for (name, v) in [
            ("sigma_step", self.sigma_step),
            ("tau_step", self.tau_step),
            ("zoom_step", self.zoom_step),
            ("quad_tol", self.quad_tol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(input_error(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    /// Defaults, then `file`, then `overrides`.
    pub fn resolve(file: Option<&Path>, overrides: &Overrides) -> anyhow::Result<Self> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = fs::read_to_string(path)
                .map_err(|e| input_error(format!("cannot read config {}: {e}", path.display())))?;
            cfg.apply_file_text(&text)?;
        }
        cfg.apply_overrides(overrides);
        cfg.validate()?;
        Ok(cfg)
    }
}
