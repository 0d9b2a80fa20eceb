//! Invariant suites: exhaustive and sampled sweeps that cross-check the fast
//! predicates against brute-force oracles and against the structural results.
//!
//! Every suite is deterministic: work is split into items processed in
//! parallel but merged in item order, so reports do not depend on the number
//! of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{h_equivalent, hom_sets, Coloring, EdgeSet, HomSet};
use crate::critical::{find_critical_pairs, is_critical_pair};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::reconstruct::{
    all_reconstructions, component_restriction_valid, is_valid_difference, r_value_with_budget,
    RValue, SearchBudget, SearchMode,
};
use crate::srcheck::{alpha_coloring, alpha_coloring_with_seed, theorem63_witnesses, verify_alpha};
use crate::structure::{
    check_parity_lemmas, components, find_claw, hom_color_uniform, hom_partition, make_cycle_pair,
    make_path_pair, ComponentKind,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Oracle,
    Claws,
    Parity,
    PartitionTheorem,
    RSweep,
    Connectivity,
    Alpha,
    Theorem63,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Oracle,
        Suite::Claws,
        Suite::Parity,
        Suite::PartitionTheorem,
        Suite::RSweep,
        Suite::Connectivity,
        Suite::Alpha,
        Suite::Theorem63,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Claws => "claws",
            Suite::Parity => "parity",
            Suite::PartitionTheorem => "partition-theorem",
            Suite::RSweep => "r-sweep",
            Suite::Connectivity => "connectivity",
            Suite::Alpha => "alpha",
            Suite::Theorem63 => "theorem63",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Scale of a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Vertex count of the sweep.
    pub n: usize,
    /// Enumerate every coloring on `n` vertices instead of sampling.
    pub exhaustive: bool,
    /// Number of sampled colorings (or sampled cases for `oracle`).
    pub samples: usize,
    pub seed: u64,
    /// Upper size for suites that walk a range (`alpha`, `partition-theorem`,
    /// `theorem63`).
    pub nmax: usize,
    /// Only difference sets with at most this many pairs are visited.
    pub max_diff: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n: 5,
            exhaustive: true,
            samples: 1000,
            seed: 0,
            nmax: 20,
            max_diff: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub config: VerifyConfig,
    pub passed: bool,
    pub cases: u64,
    pub stats: BTreeMap<String, u64>,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite, config: &VerifyConfig) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            suite,
            config: config.clone(),
            passed: true,
            cases: 0,
            stats: BTreeMap::new(),
            counterexample: None,
        }
    }

    fn absorb(&mut self, part: Partial) {
        self.cases += part.cases;
        for (k, v) in part.stats {
            *self.stats.entry(k).or_insert(0) += v;
        }
        if let Some(c) = part.counterexample {
            self.passed = false;
            if self.counterexample.is_none() {
                self.counterexample = Some(c);
            }
        }
    }

    /// Human-readable summary, one `key: value` per line.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "suite {}: {} ({} cases)\n",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.cases
        );
        for (k, v) in &self.stats {
            s.push_str(&format!("  {k}: {v}\n"));
        }
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("  first counterexample: {c}\n"));
        }
        s
    }
}

/// Result of one work item.
#[derive(Default)]
struct Partial {
    cases: u64,
    stats: BTreeMap<String, u64>,
    counterexample: Option<String>,
}

impl Partial {
    fn bump(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_insert(0) += by;
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.bump("violations", 1);
        if self.counterexample.is_none() {
            self.counterexample = Some(msg());
        }
    }
}

pub fn run(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(suite, config);
    let parts = match suite {
        Suite::Oracle => oracle(config)?,
        Suite::Claws => per_coloring(config, claws_item)?,
        Suite::Parity => per_coloring(config, parity_item)?,
        Suite::PartitionTheorem => partition_theorem(config)?,
        Suite::RSweep => per_coloring(config, r_sweep_item)?,
        Suite::Connectivity => per_coloring(config, connectivity_item)?,
        Suite::Alpha => alpha_suite(config)?,
        Suite::Theorem63 => theorem63(config)?,
    };
    report.stats.insert("violations".into(), 0);
    for p in parts {
        report.absorb(p);
    }
    Ok(report)
}

/// Colorings of a sweep: all `2^(n(n-1)/2)` colorings, or `samples` random
/// ones with density 1/2.
pub fn sweep_colorings(config: &VerifyConfig) -> Result<Vec<Coloring>> {
    let n = config.n;
    if n < 3 {
        return Err(Error::TooSmall {
            what: "sweep",
            min: 3,
            got: n,
        });
    }
    if config.exhaustive {
        if n > 6 {
            return Err(Error::Budget(format!(
                "exhaustive sweeps are limited to n <= 6, asked for {n}"
            )));
        }
        let p = crate::pair_count(n);
        (0..1u64 << p).map(|m| Coloring::from_mask(n, m)).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        (0..config.samples)
            .map(|_| random_coloring(&mut rng, n))
            .collect()
    }
}

fn random_coloring(rng: &mut ChaCha8Rng, n: usize) -> Result<Coloring> {
    let bits: Vec<bool> = (0..crate::pair_count(n))
        .map(|_| rng.gen_bool(0.5))
        .collect();
    Coloring::from_bits(n, &bits)
}

fn per_coloring(
    config: &VerifyConfig,
    item: fn(&Coloring, &VerifyConfig) -> Result<Partial>,
) -> Result<Vec<Partial>> {
    let colorings = sweep_colorings(config)?;
    colorings.par_iter().map(|phi| item(phi, config)).collect()
}

fn differences(phi: &Coloring, config: &VerifyConfig) -> Result<Vec<EdgeSet>> {
    let mut all = all_reconstructions(phi, &SearchBudget::extended())?;
    if let Some(k) = config.max_diff {
        all.retain(|d| d.len() <= k);
    }
    Ok(all)
}

fn oracle_valid(phi: &Coloring, d: &EdgeSet) -> Result<bool> {
    h_equivalent(phi, &phi.flipped(d)?)
}

fn oracle(config: &VerifyConfig) -> Result<Vec<Partial>> {
    let n = config.n;
    if config.exhaustive {
        if n > 5 {
            return Err(Error::Budget(format!(
                "exhaustive oracle sweep is limited to n <= 5, asked for {n}"
            )));
        }
        let p = crate::pair_count(n);
        return (0..1u64 << p)
            .into_par_iter()
            .map(|cm| {
                let phi = Coloring::from_mask(n, cm)?;
                let mut part = Partial::default();
                for dm in 0..1u64 << p {
                    let d = Coloring::from_mask(n, dm)?.ones_set();
                    compare(&phi, &d, &mut part)?;
                }
                Ok(part)
            })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let cases: Vec<(Coloring, EdgeSet)> = (0..config.samples)
        .map(|i| oracle_case(&mut rng, n, i % 4))
        .collect::<Result<_>>()?;
    cases
        .par_iter()
        .map(|(phi, d)| {
            let mut part = Partial::default();
            compare(phi, d, &mut part)?;
            Ok(part)
        })
        .collect()
}

fn compare(phi: &Coloring, d: &EdgeSet, part: &mut Partial) -> Result<()> {
    let fast = is_valid_difference(phi, d)?;
    let slow = oracle_valid(phi, d)?;
    part.cases += 1;
    part.bump(if slow { "valid" } else { "invalid" }, 1);
    if fast != slow {
        part.fail(|| format!("phi={} D={:?} local={fast} oracle={slow}", phi.to_json(), d));
    }
    Ok(())
}

/// Sampled oracle case. Kinds: 0 uniform `D`; 1 small `D`; 2 planted
/// critical pair; 3 planted critical cycle. Kinds 2 and 3 perturb the planted
/// set by one pair half of the time.
fn oracle_case(rng: &mut ChaCha8Rng, n: usize, kind: usize) -> Result<(Coloring, EdgeSet)> {
    let p = crate::pair_count(n);
    let mut phi = random_coloring(rng, n)?;
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let mut d = EdgeSet::empty(n);
    match kind {
        0 => {
            for i in 0..p {
                if rng.gen_bool(0.5) {
                    let (x, y) = crate::pair_from_index(i);
                    d.insert(x, y)?;
                }
            }
        }
        1 => {
            let k = rng.gen_range(1..=4);
            while d.len() < k {
                let (x, y) = crate::pair_from_index(rng.gen_range(0..p));
                d.insert(x, y)?;
            }
        }
        2 => {
            let (a, b) = (vertices[0], vertices[1]);
            for &z in &vertices[2..] {
                let c = phi.color(a, z);
                phi.set(b, z, 1 - c)?;
            }
            d.insert(a, b)?;
        }
        _ => {
            let [a, b, c, e] = [vertices[0], vertices[1], vertices[2], vertices[3]];
            let u: u8 = rng.gen_range(0..=1);
            for (x, y, col) in [
                (a, b, u),
                (b, c, 1 - u),
                (a, c, 1 - u),
                (b, e, u),
                (c, e, u),
                (e, a, 1 - u),
            ] {
                phi.set(x, y, col)?;
            }
            for &z in &vertices[4..] {
                let r: u8 = rng.gen_range(0..=1);
                for (v, col) in [(a, r), (b, 1 - r), (c, r), (e, 1 - r)] {
                    phi.set(v, z, col)?;
                }
            }
            for (x, y) in [(a, b), (b, c), (c, e), (e, a)] {
                d.insert(x, y)?;
            }
        }
    }
    if kind >= 2 && rng.gen_bool(0.5) {
        let (x, y) = crate::pair_from_index(rng.gen_range(0..p));
        if d.contains(x, y) {
            d.remove(x, y)?;
        } else {
            d.insert(x, y)?;
        }
    }
    Ok((phi, d))
}

fn claws_item(phi: &Coloring, config: &VerifyConfig) -> Result<Partial> {
    let mut part = Partial::default();
    for d in differences(phi, config)? {
        part.cases += 1;
        for (label, set) in [("D1", d.clone()), ("D0", d.complement())] {
            if let Some(c) = find_claw(&set)? {
                part.fail(|| format!("phi={} D={:?}: claw in {label}: {c:?}", phi.to_json(), d));
            }
        }
    }
    part.bump("colorings", 1);
    Ok(part)
}

fn parity_item(phi: &Coloring, config: &VerifyConfig) -> Result<Partial> {
    let mut part = Partial::default();
    part.bump("colorings", 1);
    for d in differences(phi, config)? {
        part.cases += 1;
        let psi = phi.flipped(&d)?;
        let report = check_parity_lemmas(phi, &psi)?;
        part.bump("paths_checked", report.paths_checked as u64);
        if let Some(v) = report.violation {
            part.fail(|| format!("phi={} D={:?}: {v:?}", phi.to_json(), d));
        }
        if hom_color_uniform(&d.to_coloring())? != Some(0) {
            continue;
        }
        part.bump("uniform_0_pairs", 1);
        if let Some(x) = (0..phi.n()).find(|&x| d.degree(x) > 2) {
            part.fail(|| {
                format!(
                    "phi={} D={:?}: degree {} at {x}",
                    phi.to_json(),
                    d,
                    d.degree(x)
                )
            });
        }
        for c in components(&d) {
            match c.kind {
                ComponentKind::Path | ComponentKind::EvenCycle => {}
                other => part.fail(|| {
                    format!(
                        "phi={} D={:?}: component {:?} is {other:?}",
                        phi.to_json(),
                        d,
                        c.vertices
                    )
                }),
            }
            if c.len() >= 6 {
                part.bump("partitioned_components", 1);
                if let Err(e) = hom_partition(phi, &c) {
                    part.fail(|| format!("phi={} D={:?}: {e}", phi.to_json(), d));
                }
            }
        }
    }
    Ok(part)
}

fn partition_theorem(config: &VerifyConfig) -> Result<Vec<Partial>> {
    let sizes: Vec<usize> = (6..=config.nmax.min(12)).step_by(2).collect();
    let mut jobs = Vec::new();
    for &m in &sizes {
        for c in 0..=1u8 {
            for phase in 0..=1u8 {
                jobs.push((m, c, phase, false));
                jobs.push((m, c, phase, true));
            }
        }
    }
    jobs.par_iter()
        .map(|&(m, c, phase, cycle)| {
            let mut part = Partial::default();
            part.cases += 1;
            let (phi, psi) = if cycle {
                make_cycle_pair(m, c, phase)?
            } else {
                make_path_pair(m, c, phase)?
            };
            let tag = format!("{}({m},{c},{phase})", if cycle { "cycle" } else { "path" });
            if !h_equivalent(&phi, &psi)? {
                part.fail(|| format!("{tag}: not H-equivalent"));
                return Ok(part);
            }
            let comps = components(&phi.boolean_sum(&psi)?.ones_set());
            if comps.len() != 1 {
                part.fail(|| format!("{tag}: {} components", comps.len()));
                return Ok(part);
            }
            let comp = &comps[0];
            match hom_partition(&phi, comp) {
                Err(e) => part.fail(|| format!("{tag}: {e}")),
                Ok(hp) => {
                    let restricted = phi.restrict(&comp.sorted_vertices())?;
                    let expected = vec![
                        HomSet {
                            vertices: hp.h1.clone(),
                            color: hp.color,
                        },
                        HomSet {
                            vertices: hp.h2.clone(),
                            color: hp.color,
                        },
                    ];
                    if hom_sets(&restricted, 3)? != expected {
                        part.fail(|| {
                            format!("{tag}: maximal homogeneous sets differ from {expected:?}")
                        });
                    }
                    let mut union: Vec<usize> = hp.h1.iter().chain(&hp.h2).copied().collect();
                    union.sort_unstable();
                    if union != comp.sorted_vertices() {
                        part.fail(|| format!("{tag}: classes do not partition the component"));
                    }
                }
            }
            Ok(part)
        })
        .collect()
}

fn r_sweep_item(phi: &Coloring, _config: &VerifyConfig) -> Result<Partial> {
    let mut part = Partial::default();
    part.cases += 1;
    let report = r_value_with_budget(phi, SearchMode::Exhaustive, &SearchBudget::extended())?;
    let has_pair = !find_critical_pairs(phi)?.is_empty();
    let key = match report.r {
        RValue::Finite(r) => format!("r={r}"),
        RValue::NotApplicable => "in_r".into(),
        RValue::Unknown => "unknown".into(),
    };
    part.bump(&key, 1);
    match report.r {
        RValue::Finite(2) => part.fail(|| format!("phi={}: r = 2", phi.to_json())),
        RValue::Unknown => part.fail(|| format!("phi={}: search incomplete", phi.to_json())),
        _ => {}
    }
    if (report.r == RValue::Finite(1)) != has_pair {
        part.fail(|| {
            format!(
                "phi={}: r={:?} but critical pair present={has_pair}",
                phi.to_json(),
                report.r
            )
        });
    }
    for w in &report.witnesses {
        if w.components.len() != 1 {
            part.fail(|| {
                format!(
                    "phi={}: minimal witness {:?} is disconnected",
                    phi.to_json(),
                    w.difference
                )
            });
        }
    }
    Ok(part)
}

fn connectivity_item(phi: &Coloring, config: &VerifyConfig) -> Result<Partial> {
    let mut part = Partial::default();
    part.bump("colorings", 1);
    let has_pair = !find_critical_pairs(phi)?.is_empty();
    let mut minimal = usize::MAX;
    let diffs = differences(phi, config)?;
    for d in &diffs {
        minimal = minimal.min(d.len());
    }
    for d in &diffs {
        part.cases += 1;
        let comps = components(d);
        if d.len() == minimal && comps.len() != 1 {
            part.fail(|| {
                format!(
                    "phi={} D={d:?}: minimal difference is disconnected",
                    phi.to_json()
                )
            });
        }
        if comps.len() >= 2 {
            part.bump("multi_component", 1);
            for c in &comps {
                if !component_restriction_valid(phi, d, c)? {
                    part.fail(|| {
                        format!(
                            "phi={} D={d:?}: component {:?} invalid alone",
                            phi.to_json(),
                            c.vertices
                        )
                    });
                }
            }
        }
        for c in &comps {
            if c.len() < 3 {
                continue;
            }
            let sorted = c.sorted_vertices();
            let local = phi.restrict(&sorted)?;
            for (x, y) in d.within(&sorted).iter() {
                let (i, j) = (
                    sorted.binary_search(&x).expect("in component"),
                    sorted.binary_search(&y).expect("in component"),
                );
                if is_critical_pair(&local, i, j)? && !is_critical_pair(phi, x, y)? {
                    part.fail(|| {
                        format!(
                            "phi={} D={d:?}: {{{x},{y}}} critical on component only",
                            phi.to_json()
                        )
                    });
                }
            }
        }
        if hom_color_uniform(&d.to_coloring())? == Some(0)
            && comps
                .iter()
                .any(|c| !(c.kind == ComponentKind::EvenCycle && c.len() == 4))
        {
            part.bump("non_square_uniform_0", 1);
            if !has_pair {
                part.fail(|| format!("phi={} D={d:?}: no critical pair", phi.to_json()));
            }
        }
    }
    Ok(part)
}

fn alpha_suite(config: &VerifyConfig) -> Result<Vec<Partial>> {
    let mut parts = Vec::new();
    let report = verify_alpha(config.nmax)?;
    let mut p = Partial::default();
    for c in &report.checks {
        p.cases += 1;
        if !c.passed {
            p.fail(|| format!("n={} ({}): {}", c.n, c.family, c.detail));
        }
    }
    parts.push(p);

    // drawn restriction to {0..5}: thick edges of the drawing, the remaining
    // pairs {k, m} share the color of {k, k+1}
    let mut p = Partial::default();
    p.cases += 1;
    let drawn = drawn_alpha6();
    let seed0 = alpha_coloring_with_seed(6, 0)?;
    if seed0 != drawn {
        p.fail(|| format!("alpha(6, seed 0) = {seed0:?}, drawing = {drawn:?}"));
    }
    if alpha_coloring(6)? != drawn.complement() {
        p.fail(|| "alpha(6) is not the complement of the drawing".into());
    }
    parts.push(p);

    let mut p = Partial::default();
    for n in 3..=config.nmax {
        let big = alpha_coloring(n)?;
        for m in 3..=n {
            p.cases += 1;
            let prefix: Vec<usize> = (0..m).collect();
            if big.restrict(&prefix)? != alpha_coloring(m)? {
                p.fail(|| format!("alpha({n}) restricted to {m} vertices differs from alpha({m})"));
            }
        }
    }
    parts.push(p);
    Ok(parts)
}

/// The 6-vertex drawing of `α`, thick = 1.
pub fn drawn_alpha6() -> Coloring {
    let thick = [
        (1, 2),
        (2, 3),
        (0, 3),
        (0, 5),
        (4, 5),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 4),
        (2, 5),
    ];
    Coloring::from_ones(6, thick).expect("static drawing")
}

fn theorem63(config: &VerifyConfig) -> Result<Vec<Partial>> {
    let mut inputs: Vec<(String, Coloring)> = Vec::new();
    let hi = config.nmax.clamp(7, 9);
    for n in 7..=hi {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (n as u64) << 32);
        for i in 0..config.samples {
            inputs.push((format!("random n={n} #{i}"), random_coloring(&mut rng, n)?));
        }
    }
    inputs.push(("partition(8)".into(), fixtures::partition(8)));
    inputs.push(("alpha(9)".into(), alpha_coloring(9)?));
    inputs
        .par_iter()
        .map(|(label, phi)| {
            let mut part = Partial::default();
            part.bump("colorings", 1);
            let ws = theorem63_witnesses(phi)?;
            if !ws.is_empty() {
                part.bump("colorings_with_witness", 1);
            }
            for w in &ws {
                part.cases += 1;
                let psi = w.global_flip(phi)?;
                let nontrivial = psi != *phi && psi != phi.complement();
                if !nontrivial || !h_equivalent(phi, &psi)? {
                    part.fail(|| format!("{label}: F={:?} D={:?} does not lift", w.f, w.d));
                }
            }
            if phi.n() == 7 {
                let m = crate::reconstruct::in_r(phi, &SearchBudget::default())?;
                if m.verdict == crate::reconstruct::Verdict::NotInR {
                    part.bump("n7_not_in_r", 1);
                    if !ws.is_empty() {
                        part.bump("n7_not_in_r_with_witness", 1);
                    }
                }
            }
            Ok(part)
        })
        .collect()
}
