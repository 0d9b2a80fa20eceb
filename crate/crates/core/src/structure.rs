//! Graph structure of edge sets: degrees, components, claws, and the parity
//! and partition results for components of a Boolean sum.

use serde::{Deserialize, Serialize};

use crate::coloring::{h_equivalent, hom_signature, need_n, same_n, Coloring, EdgeSet};
use crate::error::{Error, Result};

/// Shape of a connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    Path,
    EvenCycle,
    OddCycle,
    Other,
}

/// A connected component of an edge set.
///
/// For paths and cycles `vertices` is the traversal order; for `Other` it is
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
    pub edge_count: usize,
}

impl Component {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertex set in ascending order.
    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }
}

/// `deg_A(x)`.
pub fn degree(a: &EdgeSet, x: usize) -> Result<usize> {
    if x >= a.n() {
        return Err(Error::VertexOutOfRange { v: x, n: a.n() });
    }
    Ok(a.degree(x))
}

fn adjacency(a: &EdgeSet) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); a.n()];
    for (x, y) in a.iter() {
        adj[x].push(y);
        adj[y].push(x);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Connected components of the graph `(V, A)` restricted to non-isolated
/// vertices, ordered by smallest vertex.
pub fn components(a: &EdgeSet) -> Vec<Component> {
    let adj = adjacency(a);
    let n = a.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(classify(&adj, members));
    }
    out
}

fn classify(adj: &[Vec<usize>], members: Vec<usize>) -> Component {
    let degree_sum: usize = members.iter().map(|&v| adj[v].len()).sum();
    let edge_count = degree_sum / 2;
    let max_deg = members.iter().map(|&v| adj[v].len()).max().unwrap_or(0);
    let k = members.len();
    if max_deg <= 2 && edge_count + 1 == k {
        let start = *members
            .iter()
            .find(|&&v| adj[v].len() == 1)
            .expect("a path has an endpoint");
        let vertices = walk(adj, start, adj[start][0], k);
        return Component {
            vertices,
            kind: ComponentKind::Path,
            edge_count,
        };
    }
    if max_deg == 2 && edge_count == k && members.iter().all(|&v| adj[v].len() == 2) {
        let start = members[0];
        let vertices = walk(adj, start, adj[start][0], k);
        let kind = if k.is_multiple_of(2) {
            ComponentKind::EvenCycle
        } else {
            ComponentKind::OddCycle
        };
        return Component {
            vertices,
            kind,
            edge_count,
        };
    }
    Component {
        vertices: members,
        kind: ComponentKind::Other,
        edge_count,
    }
}

fn walk(adj: &[Vec<usize>], start: usize, next: usize, k: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(k);
    order.push(start);
    let (mut prev, mut cur) = (start, next);
    while order.len() < k {
        order.push(cur);
        let step = adj[cur].iter().copied().find(|&w| w != prev);
        match step {
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    order
}

/// A triangle of `A` together with a vertex joined to none of its corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClawWitness {
    pub apex: usize,
    pub leaves: [usize; 3],
}

/// Finds a 4-set `{x, y, z, w}` whose only `A`-edges are the triangle on
/// `{x, y, z}`. Triangles are scanned in colex order and the smallest
/// admissible apex is reported.
pub fn find_claw(a: &EdgeSet) -> Result<Option<ClawWitness>> {
    need_n("claw search", 4, a.n())?;
    let rows = a.rows();
    let n = a.n();
    let w = rows.words();
    for z in 2..n {
        for y in 1..z {
            if !rows.has(y, z) {
                continue;
            }
            for x in 0..y {
                if !(rows.has(x, y) && rows.has(x, z)) {
                    continue;
                }
                for (wi, word) in (0..w).map(|wi| {
                    let touched = rows.row(x)[wi] | rows.row(y)[wi] | rows.row(z)[wi];
                    (wi, !touched & rows.valid_mask(wi))
                }) {
                    let mut word = word;
                    for v in [x, y, z] {
                        if v / 64 == wi {
                            word &= !(1u64 << (v % 64));
                        }
                    }
                    if word != 0 {
                        return Ok(Some(ClawWitness {
                            apex: wi * 64 + word.trailing_zeros() as usize,
                            leaves: [x, y, z],
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The common color of all homogeneous triples of `sigma`, `Some(0)` when
/// there are none, and `None` when both colors occur.
pub fn hom_color_uniform(sigma: &Coloring) -> Result<Option<u8>> {
    let sig = hom_signature(sigma)?;
    let mut seen = [false; 2];
    for (_, class) in sig.iter() {
        if let Some(c) = class.color() {
            seen[c as usize] = true;
        }
    }
    Ok(match seen {
        [true, true] => None,
        [false, true] => Some(1),
        _ => Some(0),
    })
}

/// Which of the three path identities failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityLemma {
    /// `φ{x0,x1} ≠ φ{x(n-1),xn}` iff the length is even.
    EndEdges,
    /// `φ{x0,x2} = φ{x0,xn}` iff the length is even.
    Chords,
    /// `φ{x0,x2} = φ{xi,x(i+2)} = 1 - φ{xi,x(i+3)} = φ{x(i+1),x(i+3)}`.
    EvenPaths,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityViolation {
    pub lemma: ParityLemma,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    /// Directed induced paths of length at least 2 that were examined.
    pub paths_checked: usize,
    pub violation: Option<ParityViolation>,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the path identities on every induced path of `D₁(φ+ψ)`.
///
/// Paths are enumerated in both directions. The scan stops at the first
/// violated identity.
pub fn check_parity_lemmas(phi: &Coloring, psi: &Coloring) -> Result<ParityReport> {
    same_n(phi.n(), psi.n())?;
    if !h_equivalent(phi, psi)? {
        return Err(Error::Precondition(
            "parity identities need H-equivalent colorings".into(),
        ));
    }
    let d = phi.boolean_sum(psi)?.ones_set();
    let adj = adjacency(&d);
    let mut report = ParityReport {
        paths_checked: 0,
        violation: None,
    };
    let mut path = Vec::new();
    for start in 0..phi.n() {
        path.clear();
        path.push(start);
        if extend_paths(phi, &d, &adj, &mut path, &mut report) {
            break;
        }
    }
    Ok(report)
}

// Returns true once a violation has been recorded.
fn extend_paths(
    phi: &Coloring,
    d: &EdgeSet,
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    report: &mut ParityReport,
) -> bool {
    let last = *path.last().expect("nonempty path");
    for &next in &adj[last] {
        // induced: `next` must not touch any earlier vertex besides `last`
        let k = path.len();
        if path[..k - 1]
            .iter()
            .any(|&v| v == next || d.contains(v, next))
            || next == last
        {
            continue;
        }
        path.push(next);
        if path.len() >= 3 {
            report.paths_checked += 1;
            if let Some(lemma) = path_violation(phi, path) {
                report.violation = Some(ParityViolation {
                    lemma,
                    path: path.clone(),
                });
                return true;
            }
        }
        if extend_paths(phi, d, adj, path, report) {
            return true;
        }
        path.pop();
    }
    false
}

fn path_violation(phi: &Coloring, p: &[usize]) -> Option<ParityLemma> {
    let len = p.len() - 1;
    let even = len.is_multiple_of(2);
    let c = |i: usize, j: usize| phi.color(p[i], p[j]);
    if (c(0, 1) != c(len - 1, len)) != even {
        return Some(ParityLemma::EndEdges);
    }
    if (c(0, 2) == c(0, len)) != even {
        return Some(ParityLemma::Chords);
    }
    if len >= 3 {
        let base = c(0, 2);
        for i in 0..=len - 3 {
            if c(i, i + 2) != base || c(i, i + 3) == base || c(i + 1, i + 3) != base {
                return Some(ParityLemma::EvenPaths);
            }
        }
    }
    None
}

/// The two position classes of a component together with their common color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomPartition {
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
    pub color: u8,
}

/// Splits a path or cycle component into its even- and odd-position vertices
/// and checks that both are maximal homogeneous sets of one color within it.
pub fn hom_partition(phi: &Coloring, c: &Component) -> Result<HomPartition> {
    if c.len() < 6 {
        return Err(Error::TooSmall {
            what: "homogeneous partition",
            min: 6,
            got: c.len(),
        });
    }
    if let Some(&v) = c.vertices.iter().find(|&&v| v >= phi.n()) {
        return Err(Error::VertexOutOfRange { v, n: phi.n() });
    }
    let mut h1: Vec<usize> = c.vertices.iter().copied().step_by(2).collect();
    let mut h2: Vec<usize> = c.vertices.iter().copied().skip(1).step_by(2).collect();
    h1.sort_unstable();
    h2.sort_unstable();
    let c1 = set_color(phi, &h1);
    let c2 = set_color(phi, &h2);
    let color = match (c1, c2) {
        (Some(a), Some(b)) if a == b => a,
        _ => {
            return Err(Error::Precondition(format!(
                "position classes {h1:?} / {h2:?} are not homogeneous of one color"
            )))
        }
    };
    for (set, other) in [(&h1, &h2), (&h2, &h1)] {
        for &v in other.iter() {
            if set.iter().all(|&u| phi.color(u, v) == color) {
                return Err(Error::Precondition(format!(
                    "class {set:?} is not maximal: {v} extends it"
                )));
            }
        }
    }
    Ok(HomPartition { h1, h2, color })
}

fn set_color(phi: &Coloring, set: &[usize]) -> Option<u8> {
    let first = phi.color(set[0], set[1]);
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            if phi.color(x, y) != first {
                return None;
            }
        }
    }
    Some(first)
}

fn pair_by_distance(
    m: usize,
    c: u8,
    phase: u8,
    dist: impl Fn(usize, usize) -> usize,
    adjacent_parity: impl Fn(usize, usize) -> usize,
) -> Result<(Coloring, Coloring)> {
    let c = c & 1;
    let phase = phase & 1;
    let color = |x: usize, y: usize| -> u8 {
        let d = dist(x, y);
        if d == 1 {
            phase ^ (adjacent_parity(x, y) as u8 & 1)
        } else if d.is_multiple_of(2) {
            c
        } else {
            1 - c
        }
    };
    let phi = Coloring::from_fn(m, |x, y| color(x, y) == 1)?;
    let psi = Coloring::from_fn(m, |x, y| (color(x, y) ^ (dist(x, y) == 1) as u8) == 1)?;
    Ok((phi, psi))
}

/// H-equivalent pair whose Boolean sum is the path `0 - 1 - ... - (m-1)`.
///
/// Same-parity pairs get color `c`, pairs at odd distance at least 3 get
/// `1 - c`, and the path edge `{i, i+1}` gets `phase XOR (i mod 2)`; `ψ` flips
/// the path edges.
pub fn make_path_pair(m: usize, c: u8, phase: u8) -> Result<(Coloring, Coloring)> {
    need_n("path pair", 4, m)?;
    pair_by_distance(m, c, phase, |x, y| x.abs_diff(y), |x, y| x.min(y))
}

/// H-equivalent pair whose Boolean sum is the cycle `0 - 1 - ... - (m-1) - 0`.
///
/// Distances are measured along the cycle; otherwise as [`make_path_pair`].
/// The closing edge `{m-1, 0}` counts as edge number `m - 1`.
pub fn make_cycle_pair(m: usize, c: u8, phase: u8) -> Result<(Coloring, Coloring)> {
    if m < 6 || m % 2 == 1 {
        return Err(Error::InvalidLength(format!(
            "cycle pair needs an even length of at least 6, got {m}"
        )));
    }
    pair_by_distance(
        m,
        c,
        phase,
        |x, y| {
            let d = x.abs_diff(y);
            d.min(m - d)
        },
        |x, y| {
            let (lo, hi) = (x.min(y), x.max(y));
            if lo == 0 && hi == m - 1 {
                m - 1
            } else {
                lo
            }
        },
    )
}
