//! Sweeps over many point sets: every `n`-subset of a small grid, or
//! seeded random sets.
//!
//! Instances are numbered in generation order. Workers evaluate chunks in
//! parallel but results are folded in instance order, so a report depends
//! only on the configuration and never on the worker count.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::error::{Error, Result};
use crate::geometry::MetricKind;
use crate::geometry::PointSet;
use crate::io::serialize_point_set;
use crate::lines::half_ceil;
use crate::oracle::{linf_line_count, oracle_check};
use crate::verifier::verify_theorem;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    ExhaustiveGrid,
    Random,
}

impl FromStr for SweepMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" | "exhaustive_grid" | "grid" => Ok(SweepMode::ExhaustiveGrid),
            "random" => Ok(SweepMode::Random),
            other => Err(Error::InvalidConfig(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub grid_width: usize,
    pub grid_height: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub sample_count: u64,
    /// Random coordinates are integers in `[0, coord_bound]`.
    pub coord_bound: u64,
    pub seed: u64,
    pub workers: usize,
    /// Random sets with pairwise distinct x and pairwise distinct y.
    pub distinct_coords: bool,
    /// Also check the L∞ route and its bound.
    pub check_linf: bool,
    /// Also compare the specialized enumeration with the matrix oracle.
    pub check_oracle: bool,
    /// Refuse exhaustive sweeps larger than this.
    pub max_instances: u64,
    /// At most this many anomalies are listed in the report; counts stay exact.
    pub max_recorded: usize,
    pub witness_dir: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            mode: SweepMode::ExhaustiveGrid,
            grid_width: 3,
            grid_height: 3,
            n_min: 3,
            n_max: 4,
            sample_count: 100,
            coord_bound: 10,
            seed: 0,
            workers: 1,
            distinct_coords: false,
            check_linf: false,
            check_oracle: false,
            max_instances: 5_000_000,
            max_recorded: 100,
            witness_dir: None,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("{key}: cannot parse `{value}`")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(Error::InvalidConfig(format!(
            "{key}: expected true or false, got `{value}`"
        ))),
    }
}

/// `WxH`
pub fn parse_grid(value: &str) -> Result<(usize, usize)> {
    let (w, h) = value
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::InvalidConfig(format!("grid: expected WxH, got `{value}`")))?;
    Ok((parse_num("grid", w)?, parse_num("grid", h)?))
}

/// `A-B` or a single `N`.
pub fn parse_range(value: &str) -> Result<(usize, usize)> {
    match value.split_once('-') {
        Some((a, b)) => Ok((parse_num("n", a)?, parse_num("n", b)?)),
        None => {
            let n = parse_num("n", value)?;
            Ok((n, n))
        }
    }
}

impl SweepConfig {
    /// Sets one option by its key, as used in config files.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "mode" => self.mode = value.parse()?,
            "grid" => (self.grid_width, self.grid_height) = parse_grid(value)?,
            "grid_width" => self.grid_width = parse_num(key, value)?,
            "grid_height" => self.grid_height = parse_num(key, value)?,
            "n" | "n_range" => (self.n_min, self.n_max) = parse_range(value)?,
            "sample_count" | "count" => self.sample_count = parse_num(key, value)?,
            "coord_bound" | "coord_max" => self.coord_bound = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "workers" => self.workers = parse_num(key, value)?,
            "distinct_coords" => self.distinct_coords = parse_bool(key, value)?,
            "check_linf" => self.check_linf = parse_bool(key, value)?,
            "check_oracle" => self.check_oracle = parse_bool(key, value)?,
            "max_instances" => self.max_instances = parse_num(key, value)?,
            "max_recorded" => self.max_recorded = parse_num(key, value)?,
            "witness_dir" => self.witness_dir = Some(PathBuf::from(value)),
            other => return Err(Error::InvalidConfig(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Reads `key = value` lines; `#` starts a comment line.
    pub fn from_kv(text: &str) -> Result<Self> {
        let mut cfg = SweepConfig::default();
        cfg.apply_kv(text)?;
        Ok(cfg)
    }

    pub fn apply_kv(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected key=value, found `{line}`"),
            })?;
            self.set(k, v)?;
        }
        Ok(())
    }

    /// Everything that determines the results, as `key=value` lines. The
    /// worker count and witness directory are left out.
    pub fn canonical(&self) -> BTreeMap<&'static str, String> {
        let mode = match self.mode {
            SweepMode::ExhaustiveGrid => "exhaustive",
            SweepMode::Random => "random",
        };
        let mut m = BTreeMap::new();
        m.insert("mode", mode.to_string());
        m.insert("n", format!("{}-{}", self.n_min, self.n_max));
        m.insert("check_linf", self.check_linf.to_string());
        m.insert("check_oracle", self.check_oracle.to_string());
        m.insert("max_recorded", self.max_recorded.to_string());
        match self.mode {
            SweepMode::ExhaustiveGrid => {
                m.insert("grid", format!("{}x{}", self.grid_width, self.grid_height));
            }
            SweepMode::Random => {
                m.insert("sample_count", self.sample_count.to_string());
                m.insert("coord_bound", self.coord_bound.to_string());
                m.insert("seed", self.seed.to_string());
                m.insert("distinct_coords", self.distinct_coords.to_string());
            }
        }
        m
    }

    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.canonical() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::InvalidConfig(format!(
                "n range {}-{} must satisfy 2 <= min <= max",
                self.n_min, self.n_max
            )));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be at least 1".into()));
        }
        match self.mode {
            SweepMode::ExhaustiveGrid => {
                if self.distinct_coords {
                    return Err(Error::InvalidConfig(
                        "distinct_coords applies to random mode only".into(),
                    ));
                }
                let total = grid_instance_count(self);
                if total > self.max_instances as u128 {
                    return Err(Error::SweepTooLarge(format!(
                        "{}x{} grid with n in {}-{} has {total} subsets (limit {})",
                        self.grid_width,
                        self.grid_height,
                        self.n_min,
                        self.n_max,
                        self.max_instances
                    )));
                }
            }
            SweepMode::Random => {
                let side = self.coord_bound as u128 + 1;
                let room = if self.distinct_coords {
                    side
                } else {
                    side * side
                };
                if self.n_max as u128 > room {
                    return Err(Error::CannotAvoidDuplicates(format!(
                        "{} points do not fit in coordinates 0..={}",
                        self.n_max, self.coord_bound
                    )));
                }
            }
        }
        Ok(())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// `Σ C(w·h, n)` over the configured range.
pub fn grid_instance_count(cfg: &SweepConfig) -> u128 {
    let cells = (cfg.grid_width as u128) * (cfg.grid_height as u128);
    (cfg.n_min..=cfg.n_max)
        .map(|n| binomial(cells, n as u128))
        .fold(0u128, u128::saturating_add)
}

/// Every `n`-subset of the `w × h` integer grid, `n` ascending, subsets in
/// lexicographic order of the cells sorted by `(x, y)`.
pub fn gen_grid_exhaustive(cfg: &SweepConfig) -> Result<impl Iterator<Item = PointSet>> {
    let mut cfg = cfg.clone();
    cfg.mode = SweepMode::ExhaustiveGrid;
    cfg.validate()?;
    let (w, h) = (cfg.grid_width, cfg.grid_height);
    let cells: Vec<(i64, i64)> = (0..w)
        .flat_map(|x| (0..h).map(move |y| (x as i64, y as i64)))
        .collect();
    Ok((cfg.n_min..=cfg.n_max).flat_map(move |n| {
        let cells = cells.clone();
        (0..cells.len()).combinations(n).map(move |idx| {
            let pts: Vec<(i64, i64)> = idx.iter().map(|&i| cells[i]).collect();
            PointSet::from_ints(&pts).expect("grid cells are distinct")
        })
    }))
}

/// The random instance with the given index.
pub fn random_instance(cfg: &SweepConfig, index: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let side = cfg.coord_bound + 1;
    let pts: Vec<(i64, i64)> = if cfg.distinct_coords {
        let xs = sample(&mut rng, side as usize, n);
        let ys = sample(&mut rng, side as usize, n);
        xs.iter()
            .zip(ys.iter())
            .map(|(x, y)| (x as i64, y as i64))
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(n);
        let mut pts = Vec::with_capacity(n);
        while pts.len() < n {
            let p = (
                rng.gen_range(0..=cfg.coord_bound) as i64,
                rng.gen_range(0..=cfg.coord_bound) as i64,
            );
            if seen.insert(p) {
                pts.push(p);
            }
        }
        pts
    };
    PointSet::from_ints(&pts).expect("sampling avoids duplicates")
}

/// `sample_count` seeded random sets.
pub fn gen_random(cfg: &SweepConfig) -> Result<impl Iterator<Item = PointSet>> {
    let mut cfg = cfg.clone();
    cfg.mode = SweepMode::Random;
    cfg.validate()?;
    Ok((0..cfg.sample_count).map(move |i| random_instance(&cfg, i)))
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceOutcome {
    pub n: usize,
    pub lines: usize,
    pub universal: bool,
    pub anomalies: Vec<Anomaly>,
    pub lemmas: Vec<String>,
}

fn all_distinct<T: Eq + std::hash::Hash>(it: impl Iterator<Item = T>) -> bool {
    let mut seen = HashSet::new();
    it.into_iter().all(|v| seen.insert(v))
}

/// Runs every enabled check on one set.
pub fn evaluate(set: &PointSet, cfg: &SweepConfig) -> InstanceOutcome {
    let n = set.len();
    let report = verify_theorem(set).expect("sweep instances have at least two points");
    let mut anomalies = report.anomalies.clone();
    let lemmas = report
        .isolated_reports
        .iter()
        .map(|r| {
            serde_json::to_value(r.lemma_used)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default()
        })
        .collect();

    if !report.universal
        && report.distinct_line_count < n
        && all_distinct(set.points().iter().map(|p| &p.x))
        && all_distinct(set.points().iter().map(|p| &p.y))
    {
        anomalies.push(Anomaly::new(
            AnomalyKind::DistinctCoords,
            vec![],
            format!(
                "distinct coordinates but only {} lines",
                report.distinct_line_count
            ),
        ));
    }
    if cfg.check_oracle {
        for metric in [MetricKind::L1, MetricKind::Linf] {
            match oracle_check(set, metric) {
                Ok(None) => {}
                Ok(Some(diff)) => anomalies.push(Anomaly::new(
                    AnomalyKind::OracleMismatch,
                    vec![],
                    format!("{metric}: {diff}"),
                )),
                Err(e) => anomalies.push(Anomaly::new(
                    AnomalyKind::OracleMismatch,
                    vec![],
                    e.to_string(),
                )),
            }
        }
    }
    if cfg.check_linf {
        match linf_line_count(set) {
            Ok(c) if !c.has_universal && c.count < half_ceil(n) => anomalies.push(Anomaly::new(
                AnomalyKind::Bound,
                vec![],
                format!("linf: {} lines < ceil(n/2) = {}", c.count, half_ceil(n)),
            )),
            Ok(_) => {}
            Err(e) => anomalies.push(Anomaly::new(
                AnomalyKind::OracleMismatch,
                vec![],
                e.to_string(),
            )),
        }
    }
    InstanceOutcome {
        n,
        lines: report.distinct_line_count,
        universal: report.universal,
        anomalies,
        lemmas,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinRatio {
    pub lines: usize,
    pub n: usize,
    pub index: u64,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordedAnomaly {
    pub index: u64,
    pub anomaly: Anomaly,
    pub points: String,
    pub witness_file: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub instances_tested: u64,
    pub universal_count: u64,
    pub bound_violations: u64,
    /// Smallest `lines / n` over instances without a universal line.
    pub min_ratio: Option<MinRatio>,
    pub anomaly_total: u64,
    pub anomaly_counts: BTreeMap<String, u64>,
    pub lemma_counts: BTreeMap<String, u64>,
    pub anomalies: Vec<RecordedAnomaly>,
    /// `n ↦ (line count ↦ instances)`
    pub histogram: BTreeMap<usize, BTreeMap<usize, u64>>,
}

impl SweepResult {
    pub fn is_clean(&self) -> bool {
        self.anomaly_total == 0 && self.bound_violations == 0
    }

    fn absorb(
        &mut self,
        index: u64,
        set: &PointSet,
        out: InstanceOutcome,
        cfg: &SweepConfig,
    ) -> Result<()> {
        self.instances_tested += 1;
        *self
            .histogram
            .entry(out.n)
            .or_default()
            .entry(out.lines)
            .or_insert(0) += 1;
        for lemma in out.lemmas {
            *self.lemma_counts.entry(lemma).or_insert(0) += 1;
        }
        if out.universal {
            self.universal_count += 1;
        } else {
            if out.lines < half_ceil(out.n) {
                self.bound_violations += 1;
            }
            let better = match &self.min_ratio {
                None => true,
                Some(m) => out.lines * m.n < m.lines * out.n,
            };
            if better {
                self.min_ratio = Some(MinRatio {
                    lines: out.lines,
                    n: out.n,
                    index,
                    witness: serialize_point_set(set),
                });
            }
        }
        if out.anomalies.is_empty() {
            return Ok(());
        }
        let witness_file = match &cfg.witness_dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Error::InvalidConfig(format!("{}: {e}", dir.display())))?;
                let path = dir.join(format!("witness-{index:09}.txt"));
                let mut text = format!("# instance {index}\n");
                for a in &out.anomalies {
                    let _ = writeln!(text, "# {a}");
                }
                text.push_str(&serialize_point_set(set));
                std::fs::write(&path, text)
                    .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
                path.file_name().map(|f| f.to_string_lossy().into_owned())
            }
            None => None,
        };
        for a in out.anomalies {
            self.anomaly_total += 1;
            *self
                .anomaly_counts
                .entry(a.kind.name().to_string())
                .or_insert(0) += 1;
            if self.anomalies.len() < cfg.max_recorded {
                self.anomalies.push(RecordedAnomaly {
                    index,
                    anomaly: a,
                    points: serialize_point_set(set),
                    witness_file: witness_file.clone(),
                });
            }
        }
        Ok(())
    }
}

fn sweep_over(cfg: &SweepConfig, instances: impl Iterator<Item = PointSet>) -> Result<SweepResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let mut result = SweepResult::default();
    let mut index = 0u64;
    for chunk in &instances.chunks(CHUNK) {
        let sets: Vec<PointSet> = chunk.collect();
        let outcomes: Vec<InstanceOutcome> =
            pool.install(|| sets.par_iter().map(|s| evaluate(s, cfg)).collect());
        for (set, out) in sets.iter().zip(outcomes) {
            result.absorb(index, set, out, cfg)?;
            index += 1;
        }
    }
    Ok(result)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    match cfg.mode {
        SweepMode::ExhaustiveGrid => sweep_over(cfg, gen_grid_exhaustive(cfg)?),
        SweepMode::Random => sweep_over(cfg, gen_random(cfg)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(w: usize, h: usize, n: usize) -> SweepConfig {
        SweepConfig {
            grid_width: w,
            grid_height: h,
            n_min: n,
            n_max: n,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn grid_counts() {
        assert_eq!(gen_grid_exhaustive(&grid(2, 2, 3)).unwrap().count(), 4);
        assert_eq!(gen_grid_exhaustive(&grid(4, 4, 5)).unwrap().count(), 4368);
    }

    #[test]
    fn grid_sets_are_distinct_and_ordered() {
        let sets: Vec<PointSet> = gen_grid_exhaustive(&grid(3, 2, 2)).unwrap().collect();
        assert_eq!(sets.len(), 15);
        let unique: HashSet<&PointSet> = sets.iter().collect();
        assert_eq!(unique.len(), 15);
        assert_eq!(serialize_point_set(&sets[0]), "0 0\n0 1\n");
        assert_eq!(serialize_point_set(&sets[1]), "0 0\n1 0\n");
    }

    #[test]
    fn oversized_grid_is_refused() {
        let cfg = grid(100, 100, 10);
        assert!(matches!(
            gen_grid_exhaustive(&cfg).err(),
            Some(Error::SweepTooLarge(_))
        ));
    }

    #[test]
    fn random_is_reproducible() {
        let cfg = SweepConfig {
            mode: SweepMode::Random,
            sample_count: 20,
            n_min: 5,
            n_max: 9,
            seed: 42,
            ..SweepConfig::default()
        };
        let a: Vec<PointSet> = gen_random(&cfg).unwrap().collect();
        let b: Vec<PointSet> = gen_random(&cfg).unwrap().collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|s| (5..=9).contains(&s.len())));
        let other: Vec<PointSet> = gen_random(&SweepConfig { seed: 43, ..cfg })
            .unwrap()
            .collect();
        assert_ne!(a, other);
    }

    #[test]
    fn pigeonhole_guard() {
        let cfg = SweepConfig {
            mode: SweepMode::Random,
            n_min: 5,
            n_max: 5,
            coord_bound: 1,
            ..SweepConfig::default()
        };
        assert!(matches!(
            gen_random(&cfg).err(),
            Some(Error::CannotAvoidDuplicates(_))
        ));
        let distinct = SweepConfig {
            distinct_coords: true,
            n_min: 3,
            n_max: 3,
            coord_bound: 1,
            ..cfg
        };
        assert!(matches!(
            gen_random(&distinct).err(),
            Some(Error::CannotAvoidDuplicates(_))
        ));
    }

    #[test]
    fn distinct_coordinate_sets() {
        let cfg = SweepConfig {
            mode: SweepMode::Random,
            sample_count: 30,
            n_min: 6,
            n_max: 6,
            coord_bound: 9,
            distinct_coords: true,
            ..SweepConfig::default()
        };
        for s in gen_random(&cfg).unwrap() {
            assert!(all_distinct(s.points().iter().map(|p| &p.x)));
            assert!(all_distinct(s.points().iter().map(|p| &p.y)));
        }
    }

    #[test]
    fn config_file_round_trip() {
        let cfg = SweepConfig::from_kv(
            "# sweep\nmode = random\nn=10\ncount=100\ncoord_max=50\nseed=7\nworkers=4\n",
        )
        .unwrap();
        assert_eq!(cfg.mode, SweepMode::Random);
        assert_eq!((cfg.n_min, cfg.n_max), (10, 10));
        assert_eq!(cfg.workers, 4);
        let again = SweepConfig::from_kv(&cfg.canonical_text()).unwrap();
        assert_eq!(again.canonical_text(), cfg.canonical_text());
        assert!(SweepConfig::from_kv("bogus=1").is_err());
        assert!(SweepConfig::from_kv("mode").is_err());
    }

    #[test]
    fn small_exhaustive_sweep_is_clean() {
        let cfg = SweepConfig {
            n_min: 3,
            n_max: 4,
            ..SweepConfig::default()
        };
        let r = run_sweep(&cfg).unwrap();
        assert_eq!(r.instances_tested, 84 + 126);
        assert!(r.is_clean(), "{:?}", r.anomaly_counts);
        let m = r.min_ratio.unwrap();
        assert!(2 * m.lines >= m.n);
    }
}
