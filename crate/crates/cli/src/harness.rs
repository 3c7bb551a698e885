//! Seeded runs of the property catalog.

use std::fs;
use std::io;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::instance::Instance;
use crate::properties::{self, Property};
use crate::sample::{EntryPool, Sampler};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown property `{0}` (expected P1..P15)")]
    UnknownProperty(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct HarnessConfig {
    pub property: String,
    pub trials: usize,
    pub dims: (usize, usize),
    pub pool: EntryPool,
    pub seed: u64,
}

impl HarnessConfig {
    /// The catalog defaults for `property`, with seed 0.
    pub fn defaults(property: &str) -> Result<Self, HarnessError> {
        let p = lookup(property)?;
        Ok(HarnessConfig {
            property: p.id.to_string(),
            trials: p.default_trials,
            dims: p.default_dims,
            pool: EntryPool::default(),
            seed: 0,
        })
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_dims(mut self, lo: usize, hi: usize) -> Self {
        self.dims = (lo, hi);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

fn lookup(id: &str) -> Result<&'static Property, HarnessError> {
    properties::find(id).ok_or_else(|| HarnessError::UnknownProperty(id.to_string()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub trial: u64,
    pub message: String,
    pub instance: Instance,
}

impl Failure {
    /// The counterexample file: the failure as comments, then the instance.
    pub fn to_file_text(&self, seed: u64) -> String {
        format!(
            "# seed {seed} trial {}\n# {}\n{}",
            self.trial, self.message, self.instance
        )
    }

    pub fn file_name(&self, seed: u64) -> String {
        format!(
            "{}-seed{seed}-trial{}.txt",
            self.instance.property, self.trial
        )
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub property: String,
    pub seed: u64,
    pub trials: usize,
    pub dims: (usize, usize),
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    let text = e
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| e.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown panic".into());
    format!("panic: {}", one_line(&text))
}

fn guarded<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    panic::catch_unwind(AssertUnwindSafe(f)).map_err(panic_message)
}

/// Generates the instance of one trial.
pub fn instance_for(cfg: &HarnessConfig, trial: u64) -> Result<Instance, HarnessError> {
    let p = lookup(&cfg.property)?;
    let mut s = Sampler::for_trial(cfg.seed, trial, &cfg.pool, cfg.dims);
    let mut inst = (p.generate)(&mut s);
    inst.property = p.id.to_string();
    Ok(inst)
}

/// Runs the checker named by the instance.
pub fn check_instance(inst: &Instance) -> Result<Result<(), String>, HarnessError> {
    let p = lookup(&inst.property)?;
    Ok(guarded(|| (p.check)(inst)).and_then(|r| r.map_err(|m| one_line(&m))))
}

pub fn run(cfg: &HarnessConfig) -> Result<RunReport, HarnessError> {
    let p = lookup(&cfg.property)?;
    let (lo, hi) = cfg.dims;
    if lo == 0 || lo > hi {
        return Err(HarnessError::Config(format!(
            "dimension range {lo}:{hi} is empty or contains 0"
        )));
    }
    if cfg.trials == 0 {
        return Err(HarnessError::Config("trials must be positive".into()));
    }
    let start = Instant::now();
    let failures: Vec<Failure> = (0..cfg.trials as u64)
        .into_par_iter()
        .filter_map(|trial| {
            let mut s = Sampler::for_trial(cfg.seed, trial, &cfg.pool, cfg.dims);
            let inst = match guarded(|| (p.generate)(&mut s)) {
                Ok(mut inst) => {
                    inst.property = p.id.to_string();
                    inst
                }
                Err(message) => {
                    return Some(Failure {
                        trial,
                        message: format!("generator {message}"),
                        instance: Instance::new(p.id),
                    })
                }
            };
            match check_instance(&inst).expect("known property") {
                Ok(()) => None,
                Err(message) => Some(Failure {
                    trial,
                    message,
                    instance: inst,
                }),
            }
        })
        .collect();
    Ok(RunReport {
        property: p.id.to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
        dims: cfg.dims,
        failures,
        elapsed: start.elapsed(),
    })
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The text report. Elapsed time is left out so that reruns compare
    /// byte for byte.
    pub fn render(&self) -> String {
        let mut out = format!(
            "property {}\nseed {}\ntrials {}\ndims {}:{}\nfailures {}\n",
            self.property,
            self.seed,
            self.trials,
            self.dims.0,
            self.dims.1,
            self.failures.len()
        );
        for f in &self.failures {
            out.push_str(&format!("failure {} {}\n", f.trial, f.message));
        }
        out
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            property: self.property.clone(),
            seed: self.seed,
            trials: self.trials,
            dims: [self.dims.0, self.dims.1],
            failures: self
                .failures
                .iter()
                .map(|f| FailureJson {
                    trial: f.trial,
                    message: f.message.clone(),
                    instance: f.instance.to_string(),
                })
                .collect(),
        }
    }

    /// Writes one replayable file per failure into `dir`.
    pub fn write_counterexamples(&self, dir: &Path) -> io::Result<Vec<PathBuf>> {
        if self.failures.is_empty() {
            return Ok(Vec::new());
        }
        fs::create_dir_all(dir)?;
        self.failures
            .iter()
            .map(|f| {
                let path = dir.join(f.file_name(self.seed));
                fs::write(&path, f.to_file_text(self.seed))?;
                Ok(path)
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub property: String,
    pub seed: u64,
    pub trials: usize,
    pub dims: [usize; 2],
    pub failures: Vec<FailureJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureJson {
    pub trial: u64,
    pub message: String,
    /// The counterexample in the instance text format.
    pub instance: String,
}
