//! Property `E_i`, finite strong reconstructibility, the four-set/seven-set
//! characterization of non-membership, and the coloring `α`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::combinations;
use crate::coloring::{check_subset, need_n, Coloring, EdgeSet};
use crate::critical::{b_set, find_critical_cycles, is_critical_pair};
use crate::error::{Error, Result};
use crate::reconstruct::{in_r, is_valid_difference, SearchBudget, Verdict, HARD_MAX_N};

/// A vertex outside `f` joined to every vertex of `f` in color `i`; the
/// smallest such vertex is returned.
pub fn e_property_witness(phi: &Coloring, f: &[usize], i: u8) -> Result<Option<usize>> {
    if f.is_empty() {
        return Err(Error::InvalidSubset("F must be nonempty".into()));
    }
    let mut sorted = f.to_vec();
    sorted.sort_unstable();
    check_subset(phi.n(), &sorted)?;
    Ok((0..phi.n())
        .filter(|z| sorted.binary_search(z).is_err())
        .find(|&z| f.iter().all(|&x| phi.color(x, z) == i)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrEntry {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SRReport {
    pub holds: bool,
    /// First 4-set (colex) without a qualifying superset.
    pub failing_f: Option<Vec<usize>>,
    /// Smallest qualifying superset for each 4-set that has one.
    pub per_f: Vec<SrEntry>,
}

/// Finite strong reconstructibility: every 4-set extends to a vertex set of
/// size at most `max_g` whose restriction has no non-trivial reconstruction.
///
/// Supersets are tried by size and then in colex order of the added vertices.
pub fn is_sr_finite(phi: &Coloring, max_g: usize) -> Result<SRReport> {
    need_n("strong reconstructibility", 4, phi.n())?;
    if max_g > HARD_MAX_N {
        return Err(Error::Budget(format!(
            "superset size {max_g} exceeds the exhaustive ceiling {HARD_MAX_N}"
        )));
    }
    if max_g < 4 {
        return Err(Error::Precondition(format!(
            "supersets of a 4-set have at least 4 vertices, got max_g={max_g}"
        )));
    }
    let n = phi.n();
    let budget = SearchBudget::extended();
    let fs: Vec<Vec<usize>> = combinations(n, 4).collect();
    let results: Vec<Result<Option<Vec<usize>>>> = fs
        .par_iter()
        .map(|f| smallest_good_superset(phi, f, max_g.min(n), &budget))
        .collect();
    let mut report = SRReport {
        holds: true,
        failing_f: None,
        per_f: Vec::new(),
    };
    for (f, res) in fs.into_iter().zip(results) {
        match res? {
            Some(g) => report.per_f.push(SrEntry { f, g }),
            None => {
                report.holds = false;
                if report.failing_f.is_none() {
                    report.failing_f = Some(f);
                }
            }
        }
    }
    Ok(report)
}

fn smallest_good_superset(
    phi: &Coloring,
    f: &[usize],
    max_g: usize,
    budget: &SearchBudget,
) -> Result<Option<Vec<usize>>> {
    let rest: Vec<usize> = (0..phi.n()).filter(|v| !f.contains(v)).collect();
    for extra in 0..=max_g - f.len() {
        for pick in combinations(rest.len(), extra) {
            let mut g: Vec<usize> = f
                .iter()
                .copied()
                .chain(pick.iter().map(|&i| rest[i]))
                .collect();
            g.sort_unstable();
            let m = in_r(&phi.restrict(&g)?, budget)?;
            if m.verdict == Verdict::InR {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// A 4-set `F` and a difference set inside `[F]²` that stays valid on every
/// 7-set containing `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem63Witness {
    pub f: Vec<usize>,
    /// Pairs of `[F]²`, in the labels of the full vertex set.
    pub d: EdgeSet,
    pub checked_gs: usize,
}

impl Theorem63Witness {
    /// The coloring equal to `φ` off `d` and flipped on `d`.
    pub fn global_flip(&self, phi: &Coloring) -> Result<Coloring> {
        phi.flipped(&self.d)
    }
}

const F_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];

/// All witnesses `(F, D)`: `F` in colex order, `D` by its mask over the six
/// pairs of `F` in colex order.
pub fn theorem63_witnesses(phi: &Coloring) -> Result<Vec<Theorem63Witness>> {
    need_n("seven-set characterization", 7, phi.n())?;
    let n = phi.n();
    let fs: Vec<Vec<usize>> = combinations(n, 4).collect();
    let per_f: Vec<Result<Vec<Theorem63Witness>>> =
        fs.par_iter().map(|f| witnesses_for(phi, f)).collect();
    let mut out = Vec::new();
    for r in per_f {
        out.extend(r?);
    }
    Ok(out)
}

/// The first witness of [`theorem63_witnesses`], if any.
pub fn theorem63_condition_c(phi: &Coloring) -> Result<Option<Theorem63Witness>> {
    need_n("seven-set characterization", 7, phi.n())?;
    for f in combinations(phi.n(), 4) {
        if let Some(w) = witnesses_for(phi, &f)?.into_iter().next() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn witnesses_for(phi: &Coloring, f: &[usize]) -> Result<Vec<Theorem63Witness>> {
    let n = phi.n();
    let local = phi.restrict(f)?;
    let rest: Vec<usize> = (0..n).filter(|v| !f.contains(v)).collect();
    let gs: Vec<Vec<usize>> = combinations(rest.len(), 3)
        .map(|pick| {
            let mut g: Vec<usize> = f
                .iter()
                .copied()
                .chain(pick.iter().map(|&i| rest[i]))
                .collect();
            g.sort_unstable();
            g
        })
        .collect();
    let restricted: Vec<Coloring> = gs.iter().map(|g| phi.restrict(g)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for mask in 1u32..63 {
        let local_pairs: Vec<(usize, usize)> = (0..6)
            .filter(|b| (mask >> b) & 1 == 1)
            .map(|b| F_PAIRS[b])
            .collect();
        if !is_valid_difference(
            &local,
            &EdgeSet::from_pairs(4, local_pairs.iter().copied())?,
        )? {
            continue;
        }
        let global = EdgeSet::from_pairs(n, local_pairs.iter().map(|&(i, j)| (f[i], f[j])))?;
        let mut all = true;
        for (g, psi) in gs.iter().zip(&restricted) {
            let pos = |v: usize| g.binary_search(&v).expect("F ⊆ G");
            let in_g = EdgeSet::from_pairs(7, global.iter().map(|(x, y)| (pos(x), pos(y))))?;
            if !is_valid_difference(psi, &in_g)? {
                all = false;
                break;
            }
        }
        if all {
            out.push(Theorem63Witness {
                f: f.to_vec(),
                d: global,
                checked_gs: gs.len(),
            });
        }
    }
    Ok(out)
}

/// `α` on `{0..n-1}` with `α{0,1} = 1`.
pub fn alpha_coloring(n: usize) -> Result<Coloring> {
    alpha_coloring_with_seed(n, 1)
}

/// The coloring fixed by
/// `α{0,1} = α{0,2} = 1 - α{1,2}`,
/// `α{m,m+1} = α{0,m+1} = 1 - α{0,m}` for `m ≥ 2`, and
/// `α{k,m} = 1 - α{0,k}` for `1 ≤ k < m`, with `α{0,1} = seed`.
pub fn alpha_coloring_with_seed(n: usize, seed: u8) -> Result<Coloring> {
    need_n("alpha coloring", 3, n)?;
    let seed = seed & 1;
    let mut zero_row = vec![0u8; n];
    zero_row[1] = seed;
    zero_row[2] = seed;
    for m in 2..n - 1 {
        zero_row[m + 1] = 1 - zero_row[m];
    }
    let alpha = Coloring::from_fn(n, |x, y| {
        if x == 0 {
            zero_row[y] == 1
        } else {
            zero_row[x] == 0
        }
    })?;
    // the overlapping recurrences must agree
    assert_eq!(alpha.color(1, 2), 1 - alpha.color(0, 1));
    for m in 2..n - 1 {
        assert_eq!(alpha.color(m, m + 1), 1 - alpha.color(0, m));
        assert_eq!(alpha.color(0, m + 1), 1 - alpha.color(0, m));
    }
    Ok(alpha)
}

/// Outcome of one assertion family of [`verify_alpha`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCheck {
    pub n: usize,
    pub family: char,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaReport {
    pub checks: Vec<AlphaCheck>,
}

impl AlphaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One `PASS`/`FAIL` line per check.
    pub fn log(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                format!(
                    "{} alpha n={} ({}) {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.n,
                    c.family,
                    c.detail
                )
            })
            .collect()
    }
}

/// Checks, for every `5 ≤ n ≤ nmax`, the facts behind `α` having neither
/// critical pairs nor critical cycles in the limit:
/// (a) `α↾n` has no critical cycle; (b) `{0, n-1}` is critical in `α↾n`;
/// (c) `y+1, y+3 ∈ B_{0,y}` for `3 ≤ y ≤ n-4`; (d) `1, 2 ∈ B_{x,y}` for
/// `2 < x < y`; (e) `{1, 2, z}` is homogeneous for every `z ≥ 3`.
pub fn verify_alpha(nmax: usize) -> Result<AlphaReport> {
    if nmax < 8 {
        return Err(Error::TooSmall {
            what: "alpha verification",
            min: 8,
            got: nmax,
        });
    }
    let mut checks = Vec::new();
    for n in 5..=nmax {
        let a = alpha_coloring(n)?;
        let cycles = find_critical_cycles(&a)?;
        checks.push(AlphaCheck {
            n,
            family: 'a',
            passed: cycles.is_empty(),
            detail: match cycles.first() {
                None => "no critical cycles".into(),
                Some(w) => format!("critical cycle {:?}", w.quad),
            },
        });
        let crit = is_critical_pair(&a, 0, n - 1)?;
        checks.push(AlphaCheck {
            n,
            family: 'b',
            passed: crit,
            detail: format!("{{0,{}}} critical: {crit}", n - 1),
        });
        let mut bad = None;
        for y in 3..n.saturating_sub(3) {
            let b = b_set(&a, 0, y)?;
            if !(b.members.contains(&(y + 1)) && b.members.contains(&(y + 3))) {
                bad = Some(format!("B{{0,{y}}} = {:?}", b.members));
                break;
            }
        }
        checks.push(family('c', n, bad, "y+1, y+3 in B{0,y}"));
        let mut bad = None;
        'outer: for y in 4..n {
            for x in 3..y {
                let b = b_set(&a, x, y)?;
                if !(b.members.contains(&1) && b.members.contains(&2)) {
                    bad = Some(format!("B{{{x},{y}}} = {:?}", b.members));
                    break 'outer;
                }
            }
        }
        checks.push(family('d', n, bad, "1, 2 in B{x,y} for x,y > 2"));
        let bad = (3..n)
            .find(|&z| !(a.color(1, 2) == a.color(1, z) && a.color(1, 2) == a.color(2, z)))
            .map(|z| format!("{{1,2,{z}}} not homogeneous"));
        checks.push(family('e', n, bad, "{1,2,z} homogeneous for z >= 3"));
    }
    Ok(AlphaReport { checks })
}

fn family(family: char, n: usize, bad: Option<String>, ok: &str) -> AlphaCheck {
    AlphaCheck {
        n,
        family,
        passed: bad.is_none(),
        detail: bad.unwrap_or_else(|| ok.to_string()),
    }
}
