//! Run configuration: an optional TOML file merged under the command-line flags.
//!
//! File schema (every key optional):
//!
//! ```toml
//! grid = [[2, 2], [2, 3]]      # (rank, level) pairs
//! ranks = [2, 3, 4]            # for the root suite
//! pairs = ["A2:A1", "D4:A1"]
//! mode = "rational"
//! tol = 1e-8
//! seed = 20100
//! samples = 5
//! timings = false
//! ```

use std::path::Path;

use anyhow::{bail, Context, Result};
use brlab::br::BrConfig;
use brlab::pairs::Pair;
use serde::Deserialize;

/// Largest rank or level accepted from the command line.
pub const MAX_SIZE: usize = 8;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub grid: Option<Vec<(usize, usize)>>,
    pub ranks: Option<Vec<usize>>,
    pub pairs: Option<Vec<String>>,
    pub mode: Option<String>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub timings: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

/// Which configurations a suite runs on.
#[derive(Clone, Debug, PartialEq)]
pub enum Grid {
    /// The suite's own default list.
    Default,
    Explicit(Vec<BrConfig>),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub grid: Grid,
    pub ranks: Option<Vec<usize>>,
    pub pairs: Option<Vec<Pair>>,
    pub mode: Option<String>,
    pub tol: f64,
    pub seed: u64,
    pub samples: u64,
    pub timings: bool,
}

pub fn br_config(r: usize, level: usize) -> Result<BrConfig> {
    if r > MAX_SIZE || level > MAX_SIZE {
        bail!("rank and level must be at most {MAX_SIZE}, got r={r}, level={level}");
    }
    Ok(BrConfig::new(r, level)?)
}

/// Parses `default` or a comma list such as `2x2,3x2`.
pub fn parse_grid(s: &str) -> Result<Grid> {
    if s == "default" {
        return Ok(Grid::Default);
    }
    let mut out = Vec::new();
    for item in s.split(',') {
        let (r, l) = item.trim().split_once('x').with_context(|| format!("bad grid entry {item:?}, want RxL"))?;
        out.push(br_config(r.parse()?, l.parse()?)?);
    }
    Ok(Grid::Explicit(out))
}

pub fn parse_pairs(names: &[String]) -> Result<Vec<Pair>> {
    names.iter().map(|s| Pair::parse(s).with_context(|| format!("bad pair {s:?}"))).collect()
}

pub fn check_tol(tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        bail!("tolerance must be positive, got {tol}");
    }
    Ok(tol)
}
