//! JSON file formats. Rationals are always strings `num/den`; unbounded
//! values are `inf`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ordmatch_core::distortion::DistortionReport;
use ordmatch_core::rational::{format_rational, parse_rational};
use ordmatch_core::thin::{CycleCounterexample, ThinnessReport};
use ordmatch_core::{Extended, FractionalMatching, Instance, Matching, Metric, Rational};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub prefs: Vec<Vec<usize>>,
}

impl From<&Instance> for InstanceFile {
    fn from(inst: &Instance) -> Self {
        InstanceFile {
            n: inst.n(),
            prefs: inst.prefs().to_vec(),
        }
    }
}

impl InstanceFile {
    pub fn to_instance(&self) -> Result<Instance> {
        if self.prefs.len() != self.n {
            bail!("instance declares n = {} but lists {} agents", self.n, self.prefs.len());
        }
        Ok(Instance::new(self.prefs.clone())?)
    }
}

fn rat_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>> {
    rows.iter()
        .map(|r| r.iter().map(|s| Ok(parse_rational(s)?)).collect())
        .collect()
}

fn text_rows(rows: Vec<Vec<Rational>>) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

/// Distances between all `2n` points, agents first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricFile {
    pub n: usize,
    pub dist: Vec<Vec<String>>,
}

impl From<&Metric> for MetricFile {
    fn from(d: &Metric) -> Self {
        MetricFile {
            n: d.n(),
            dist: text_rows(d.rows()),
        }
    }
}

impl MetricFile {
    pub fn to_metric(&self) -> Result<Metric> {
        Ok(Metric::new(self.n, rat_rows(&self.dist)?)?)
    }
}

/// `assign` maps agent to item; agents left out are unmatched. `n` may be
/// omitted for perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchingFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub assign: BTreeMap<usize, usize>,
}

impl From<&Matching> for MatchingFile {
    fn from(m: &Matching) -> Self {
        MatchingFile {
            n: Some(m.n()),
            assign: m.pairs().collect(),
        }
    }
}

impl MatchingFile {
    pub fn to_matching(&self) -> Result<Matching> {
        let n = self.n.unwrap_or(self.assign.len());
        let mut assign = vec![None; n];
        for (&a, &b) in &self.assign {
            if a >= n {
                bail!("agent {a} out of range for n = {n}");
            }
            assign[a] = Some(b);
        }
        Ok(Matching::new(assign)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionalFile {
    pub n: usize,
    pub p: Vec<Vec<String>>,
}

impl From<&FractionalMatching> for FractionalFile {
    fn from(p: &FractionalMatching) -> Self {
        FractionalFile {
            n: p.n(),
            p: text_rows(p.rows()),
        }
    }
}

impl FractionalFile {
    pub fn to_fractional(&self) -> Result<FractionalMatching> {
        if self.p.len() != self.n {
            bail!("fractional matching declares n = {} but has {} rows", self.n, self.p.len());
        }
        Ok(FractionalMatching::new(rat_rows(&self.p)?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistortionFile {
    pub value: String,
    pub mechanism_cost: String,
    pub opt_cost: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<String>,
    pub witness_opt: MatchingFile,
    pub witness_metric: MetricFile,
}

impl From<&DistortionReport> for DistortionFile {
    fn from(r: &DistortionReport) -> Self {
        DistortionFile {
            value: r.value.to_text(),
            mechanism_cost: format_rational(&r.mechanism_cost),
            opt_cost: format_rational(&r.opt_cost),
            margin: r.margin.as_ref().map(format_rational),
            witness_opt: (&r.witness_opt).into(),
            witness_metric: (&r.witness_metric).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThinnessFile {
    pub beta: String,
    /// Points of `S` (agents `0..n`, items `n..2n`).
    pub witness_cut: Vec<usize>,
    pub crossing: usize,
    pub weight: String,
}

pub fn cut_points(in_cut: &[bool]) -> Vec<usize> {
    in_cut.iter().enumerate().filter(|(_, &s)| s).map(|(x, _)| x).collect()
}

impl From<&ThinnessReport> for ThinnessFile {
    fn from(r: &ThinnessReport) -> Self {
        ThinnessFile {
            beta: r.beta.to_text(),
            witness_cut: cut_points(&r.witness_cut),
            crossing: r.crossing,
            weight: format_rational(&r.weight),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleFile {
    pub k: usize,
    pub q: String,
    pub copies: usize,
    pub p: FractionalFile,
    pub m_odd: MatchingFile,
    pub m_even: MatchingFile,
    pub cut_odd: Vec<usize>,
    pub cut_even: Vec<usize>,
    /// `m_odd` across `cut_odd`, i.e. `1/q`.
    pub ratio_odd: String,
    /// `m_even` across `cut_even`, i.e. `1/(1-q)`.
    pub ratio_even: String,
}

impl CounterexampleFile {
    pub fn new(ce: &CycleCounterexample, ratio_odd: &Extended, ratio_even: &Extended) -> Self {
        CounterexampleFile {
            k: ce.k,
            q: format_rational(&ce.q),
            copies: ce.copies,
            p: (&ce.p).into(),
            m_odd: (&ce.m_odd).into(),
            m_even: (&ce.m_even).into(),
            cut_odd: cut_points(&ce.cut_odd),
            cut_even: cut_points(&ce.cut_even),
            ratio_odd: ratio_odd.to_text(),
            ratio_even: ratio_even.to_text(),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("writing {}", path.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write_atomic(path, to_json(value)?.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordmatch_core::generators::euclidean_random;

    #[test]
    fn matching_keys_are_strings() {
        let m = Matching::new(vec![Some(2), None, Some(0)]).unwrap();
        let s = serde_json::to_string(&MatchingFile::from(&m)).unwrap();
        assert_eq!(s, r#"{"n":3,"assign":{"0":2,"2":0}}"#);
        let back: MatchingFile = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_matching().unwrap(), m);
        // n defaults to the number of entries
        let bare: MatchingFile = serde_json::from_str(r#"{"assign":{"1":0,"0":1}}"#).unwrap();
        assert_eq!(bare.to_matching().unwrap().as_permutation().unwrap(), vec![1, 0]);
    }

    #[test]
    fn metric_round_trip_is_exact() {
        let (inst, d) = euclidean_random(3, 2, 7).unwrap();
        let f = MetricFile::from(&d);
        assert!(f.dist.iter().flatten().all(|s| s.contains('/')));
        assert_eq!(f.to_metric().unwrap(), d);
        assert_eq!(InstanceFile::from(&inst).to_instance().unwrap(), inst);
    }

    #[test]
    fn fractional_uses_num_den() {
        let p = FractionalMatching::uniform(3);
        let f = FractionalFile::from(&p);
        assert_eq!(f.p[0][0], "1/3");
        assert_eq!(f.to_fractional().unwrap(), p);
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let f = InstanceFile {
            n: 3,
            prefs: vec![vec![0, 1], vec![1, 0]],
        };
        assert!(f.to_instance().is_err());
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.json");
        write_json(&path, &InstanceFile { n: 1, prefs: vec![vec![0]] }).unwrap();
        write_json(&path, &InstanceFile { n: 1, prefs: vec![vec![0]] }).unwrap();
        let back: InstanceFile = read_json(&path).unwrap();
        assert_eq!(back.n, 1);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
