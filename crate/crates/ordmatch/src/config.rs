//! Experiment sizes, loaded from TOML. The built-in defaults live in
//! `config/default.toml`.

use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

pub const DEFAULT_CONFIG: &str = include_str!("../config/default.toml");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub sd_line: SdLine,
    pub tree_det: TreeDet,
    pub tree_frac: TreeFrac,
    pub repmatch_bound: RepmatchBound,
    pub trsd_bound: TrsdBound,
    pub boston: Boston,
    pub thin_cycle: ThinCycle,
    pub hall_round: HallRound,
    pub da_serializable: DaSerializable,
    pub marginals: Marginals,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SdLine {
    pub n_min: usize,
    pub n_max: usize,
    pub oracle_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeDet {
    pub k_min: u32,
    pub k_max: u32,
    pub exhaustive_k: u32,
    pub samples: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFrac {
    pub k_min: u32,
    pub k_max: u32,
    pub mixtures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepmatchBound {
    pub n_max: usize,
    pub random_instances: u64,
    pub line_instances: bool,
    pub tree_instances: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrsdBound {
    pub n_max: usize,
    pub pairs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Boston {
    pub k_min: u32,
    pub k_max: u32,
    pub growth_min: String,
    pub growth_max: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThinCycle {
    pub k_min: usize,
    pub k_max: usize,
    pub q: Vec<String>,
    pub copies: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HallRound {
    pub matrices: u64,
    pub n_max: usize,
    pub metrics: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DaSerializable {
    pub n_max: usize,
    pub profiles: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Marginals {
    pub monte_carlo_trials: u64,
}

impl Default for Config {
    fn default() -> Self {
        toml::from_str(DEFAULT_CONFIG).expect("built-in config parses")
    }
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config> {
        match path {
            None => Ok(Config::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                toml::from_str(&text).with_context(|| format!("parsing {}", p.display()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_parse() {
        let c = Config::default();
        assert_eq!(c.sd_line.n_max, 8);
        assert_eq!(c.thin_cycle.q.len(), 3);
    }

    #[test]
    fn unknown_keys_rejected() {
        let bad = DEFAULT_CONFIG.replace("[marginals]", "[marginals]\nbogus = 1");
        assert!(toml::from_str::<Config>(&bad).is_err());
    }
}
