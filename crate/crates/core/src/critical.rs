//! Critical pairs, critical 4-cycles, B-sets, and the flips they induce.

use serde::{Deserialize, Serialize};

use crate::bits::{pair_idx, Rows};
use crate::coloring::{need_n, Coloring, EdgeSet};
use crate::error::{Error, Result};

/// `B_{x,y}`: the external vertices seeing `x` and `y` in the same color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSet {
    pub pair: (usize, usize),
    pub members: Vec<usize>,
}

impl BSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

fn ordered(x: usize, y: usize, n: usize) -> Result<(usize, usize)> {
    crate::pair_index(x, y, n)?;
    Ok((x.min(y), x.max(y)))
}

/// Bitmask over vertices of `B_{x,y}`, one u64 word per 64 vertices.
fn b_mask(rows: &Rows, x: usize, y: usize, out: &mut [u64]) {
    for (wi, slot) in out.iter_mut().enumerate() {
        let mut m = !(rows.row(x)[wi] ^ rows.row(y)[wi]) & rows.valid_mask(wi);
        for v in [x, y] {
            if v / 64 == wi {
                m &= !(1u64 << (v % 64));
            }
        }
        *slot = m;
    }
}

pub fn b_set(phi: &Coloring, x: usize, y: usize) -> Result<BSet> {
    need_n("B-set", 3, phi.n())?;
    let pair = ordered(x, y, phi.n())?;
    let members = (0..phi.n())
        .filter(|&z| z != pair.0 && z != pair.1 && phi.color(pair.0, z) == phi.color(pair.1, z))
        .collect();
    Ok(BSet { pair, members })
}

/// `{x, y}` is critical when every other vertex sees its ends in opposite colors.
pub fn is_critical_pair(phi: &Coloring, x: usize, y: usize) -> Result<bool> {
    Ok(b_set(phi, x, y)?.is_empty())
}

/// All critical pairs in colex order.
pub fn find_critical_pairs(phi: &Coloring) -> Result<Vec<(usize, usize)>> {
    need_n("critical pair search", 3, phi.n())?;
    let rows = phi.rows();
    let mut mask = vec![0u64; rows.words()];
    let mut out = Vec::new();
    for y in 1..phi.n() {
        for x in 0..y {
            b_mask(&rows, x, y, &mut mask);
            if mask.iter().all(|&w| w == 0) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Which chain of equalities a critical cycle satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleOrientation {
    /// `φ{a,c} = φ{b,c} ≠ φ{a,b}` and its two rotations along `a b c d`.
    Primary,
    /// The same chain read along `a d c b`.
    Alternate,
}

/// A critical 4-cycle `a - b - c - d - a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalCycleWitness {
    pub quad: [usize; 4],
    /// Every orientation that holds; never empty.
    pub orientations: Vec<CycleOrientation>,
    pub edges: EdgeSet,
}

impl CriticalCycleWitness {
    pub fn orientation(&self) -> CycleOrientation {
        self.orientations[0]
    }
}

// (x, y, z) means φ{x,z} = φ{y,z} ≠ φ{x,y}.
fn chain_holds(phi: &Coloring, chain: &[[usize; 3]; 3]) -> bool {
    chain.iter().all(|&[x, y, z]| {
        let xz = phi.color(x, z);
        xz == phi.color(y, z) && xz != phi.color(x, y)
    })
}

fn orientations_of(phi: &Coloring, [a, b, c, d]: [usize; 4]) -> Vec<CycleOrientation> {
    let mut out = Vec::new();
    if chain_holds(phi, &[[a, b, c], [b, c, d], [c, d, a]]) {
        out.push(CycleOrientation::Primary);
    }
    if chain_holds(phi, &[[b, a, d], [a, d, c], [d, c, b]]) {
        out.push(CycleOrientation::Alternate);
    }
    out
}

fn external_ok(rows: &Rows, quad: [usize; 4], scratch: &mut [u64]) -> bool {
    for i in 0..4 {
        let (x, y) = (quad[i], quad[(i + 1) % 4]);
        b_mask(rows, x, y, scratch);
        for v in quad {
            scratch[v / 64] &= !(1u64 << (v % 64));
        }
        if scratch.iter().any(|&w| w != 0) {
            return false;
        }
    }
    true
}

fn cycle_edges(n: usize, [a, b, c, d]: [usize; 4]) -> EdgeSet {
    EdgeSet::from_pairs(n, [(a, b), (b, c), (c, d), (d, a)]).expect("distinct in-range quad")
}

/// Tests the cyclic arrangement `(a, b, c, d)` in both orientations.
///
/// Requires `n ≥ 5`; at `n = 4` the external condition is vacuous, see
/// [`is_critical_cycle_with`].
pub fn is_critical_cycle(phi: &Coloring, quad: [usize; 4]) -> Result<Option<CriticalCycleWitness>> {
    is_critical_cycle_with(phi, quad, false)
}

/// As [`is_critical_cycle`]; `allow_vacuous` admits `n = 4`.
pub fn is_critical_cycle_with(
    phi: &Coloring,
    quad: [usize; 4],
    allow_vacuous: bool,
) -> Result<Option<CriticalCycleWitness>> {
    need_n("critical cycle", if allow_vacuous { 4 } else { 5 }, phi.n())?;
    for (i, &v) in quad.iter().enumerate() {
        if v >= phi.n() {
            return Err(Error::VertexOutOfRange { v, n: phi.n() });
        }
        if quad[..i].contains(&v) {
            return Err(Error::InvalidSubset(format!("repeated vertex in {quad:?}")));
        }
    }
    let orientations = orientations_of(phi, quad);
    if orientations.is_empty() {
        return Ok(None);
    }
    let rows = phi.rows();
    let mut scratch = vec![0u64; rows.words()];
    if !external_ok(&rows, quad, &mut scratch) {
        return Ok(None);
    }
    Ok(Some(CriticalCycleWitness {
        quad,
        orientations,
        edges: cycle_edges(phi.n(), quad),
    }))
}

/// The three cyclic arrangements of a 4-set `p < q < r < s`, each starting at
/// `p` and continuing to its smaller neighbor.
pub fn canonical_arrangements([p, q, r, s]: [usize; 4]) -> [[usize; 4]; 3] {
    [[p, q, r, s], [p, q, s, r], [p, r, q, s]]
}

/// Every critical cycle, one witness per edge set, ordered by vertex set
/// (colex) and then by arrangement.
pub fn find_critical_cycles(phi: &Coloring) -> Result<Vec<CriticalCycleWitness>> {
    need_n("critical cycle search", 5, phi.n())?;
    let n = phi.n();
    let rows = phi.rows();
    let mut scratch = vec![0u64; rows.words()];
    // pairs whose B-set has exactly one member, keyed by colex index
    let mut single = vec![false; crate::pair_count(n)];
    for y in 1..n {
        for x in 0..y {
            b_mask(&rows, x, y, &mut scratch);
            single[pair_idx(x, y)] = scratch.iter().map(|w| w.count_ones()).sum::<u32>() == 1;
        }
    }
    let on = |x: usize, y: usize| single[crate::bits::upair_idx(x, y)];
    let mut out = Vec::new();
    for quad in crate::bits::combinations(n, 4) {
        let quad = [quad[0], quad[1], quad[2], quad[3]];
        for arr in canonical_arrangements(quad) {
            let [a, b, c, d] = arr;
            if !(on(a, b) && on(b, c) && on(c, d) && on(d, a)) {
                continue;
            }
            let orientations = orientations_of(phi, arr);
            if orientations.is_empty() || !external_ok(&rows, arr, &mut scratch) {
                continue;
            }
            out.push(CriticalCycleWitness {
                quad: arr,
                orientations,
                edges: cycle_edges(n, arr),
            });
        }
    }
    Ok(out)
}

/// `ψ` equal to `φ` off `d` and to `1 - φ` on `d`.
pub fn flip_reconstruction(phi: &Coloring, d: &EdgeSet) -> Result<Coloring> {
    if d.is_empty() {
        return Err(Error::DegenerateInput("flip set is empty"));
    }
    phi.flipped(d)
}

/// Machine-readable witness record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub orientation: Option<CycleOrientation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    CriticalPair,
    CriticalCycle,
}

impl WitnessRecord {
    pub fn pair((x, y): (usize, usize)) -> Self {
        Self {
            kind: WitnessKind::CriticalPair,
            vertices: vec![x, y],
            orientation: None,
        }
    }

    pub fn cycle(w: &CriticalCycleWitness) -> Self {
        Self {
            kind: WitnessKind::CriticalCycle,
            vertices: w.quad.to_vec(),
            orientation: Some(w.orientation()),
        }
    }
}
