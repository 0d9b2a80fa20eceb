//! Validity of difference sets, enumeration of reconstructions, membership in
//! the class of reconstructible colorings, and the minimal-reconstruction
//! number `r(φ)`.
//!
//! A set of pairs `D` is a *valid difference* for `φ` when flipping `φ` on `D`
//! yields an H-equivalent coloring. Validity is decided triple by triple: a
//! triple meeting `D` in one or two pairs has a distinguished pair (the lone
//! member of `D`, or the lone non-member), and the vertex opposite to it must
//! see the other two pairs in different colors. Triples meeting `D` in zero
//! or three pairs are unconstrained.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bits::{binomial, combinations, pair_count, pair_from_index, pair_idx, Rows};
use crate::coloring::{need_n, same_n, triples, Coloring, EdgeSet};
use crate::critical::{find_critical_cycles, find_critical_pairs};
use crate::error::{Error, Result};
use crate::structure::{components, Component};

/// Largest vertex count accepted by the exhaustive membership search.
pub const HARD_MAX_N: usize = 8;

/// Vertex count handled exhaustively unless the budget says otherwise.
pub const DEFAULT_MAX_N: usize = 7;

/// `true` iff flipping `phi` on `d` gives an H-equivalent coloring.
pub fn is_valid_difference(phi: &Coloring, d: &EdgeSet) -> Result<bool> {
    same_n(phi.n(), d.n())?;
    need_n("validity check", 3, phi.n())?;
    Ok(valid_rows(&phi.rows(), &d.rows()))
}

fn valid_rows(p: &Rows, d: &Rows) -> bool {
    let n = p.n();
    let w = p.words();
    for z in 1..n {
        let (pz, dz) = (p.row(z), d.row(z));
        for y in 0..z {
            let (py, dy) = (p.row(y), d.row(y));
            let in_d = d.has(y, z);
            for wi in 0..w {
                // x sees {y,z} as the distinguished pair of {x,y,z}, and
                // φ{x,y} = φ{x,z}
                let same_d = !(dy[wi] ^ dz[wi]);
                let odd = if in_d { !dy[wi] } else { dy[wi] };
                let mut bad = !(py[wi] ^ pz[wi]) & same_d & odd & p.valid_mask(wi);
                for v in [y, z] {
                    if v / 64 == wi {
                        bad &= !(1u64 << (v % 64));
                    }
                }
                if bad != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Incremental triple-pattern engine over pair masks (`pair_count(n) ≤ 64`).
///
/// Each triple `x < y < z` keeps a 3-bit pattern recording which of its pairs
/// `xy`, `xz`, `yz` (bits 0, 1, 2) lie in the current difference set, and an
/// 8-bit table of the patterns that keep the triple's homogeneity status.
struct Engine {
    n: usize,
    pairs: usize,
    allowed: Vec<u8>,
    tri_pairs: Vec<[u8; 3]>,
    // for pair i: (triple, bit) for the n - 2 triples containing it
    incid: Vec<(u32, u8)>,
}

impl Engine {
    fn new(phi: &Coloring) -> Self {
        let n = phi.n();
        let pairs = pair_count(n);
        assert!(pairs <= 64, "engine limited to 64 pairs");
        let stride = n - 2;
        let mut incid = vec![(0u32, 0u8); pairs * stride];
        let mut fill = vec![0usize; pairs];
        let mut allowed = Vec::new();
        let mut tri_pairs = Vec::new();
        for (t, (x, y, z)) in triples(n).enumerate() {
            let ids = [pair_idx(x, y), pair_idx(x, z), pair_idx(y, z)];
            for (bit, &i) in ids.iter().enumerate() {
                incid[i * stride + fill[i]] = (t as u32, bit as u8);
                fill[i] += 1;
            }
            tri_pairs.push(ids.map(|i| i as u8));
            let (cxy, cxz, cyz) = (phi.color(x, y), phi.color(x, z), phi.color(y, z));
            let mut mask = 0u8;
            for pat in 0u8..8 {
                let ok = match pat.count_ones() {
                    0 | 3 => true,
                    k => {
                        let odd = if k == 1 { pat } else { !pat & 7 };
                        match odd {
                            0b001 => cxz != cyz,
                            0b010 => cxy != cyz,
                            _ => cxy != cxz,
                        }
                    }
                };
                mask |= (ok as u8) << pat;
            }
            allowed.push(mask);
        }
        Self {
            n,
            pairs,
            allowed,
            tri_pairs,
            incid,
        }
    }

    #[inline]
    fn pattern(&self, t: usize, dmask: u64) -> u8 {
        let [a, b, c] = self.tri_pairs[t];
        (((dmask >> a) & 1) | (((dmask >> b) & 1) << 1) | (((dmask >> c) & 1) << 2)) as u8
    }

    #[inline]
    fn incident(&self, i: usize) -> &[(u32, u8)] {
        let s = self.n - 2;
        &self.incid[i * s..(i + 1) * s]
    }

    /// Validity of `dmask`, touching only triples that meet it.
    fn valid(&self, dmask: u64) -> bool {
        let mut m = dmask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            for &(t, _) in self.incident(i) {
                let t = t as usize;
                if (self.allowed[t] >> self.pattern(t, dmask)) & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Gray-code scan of one shard. The `high` pairs are fixed by `prefix`,
    /// the `low` lowest pairs run through all patterns. Every valid nonempty
    /// mask is passed to `sink` until it returns `false`.
    fn scan_shard(&self, low: usize, prefix: u64, mut sink: impl FnMut(u64) -> bool) {
        let mut pattern: Vec<u8> = (0..self.tri_pairs.len())
            .map(|t| self.pattern(t, prefix))
            .collect();
        let mut bad: usize = pattern
            .iter()
            .zip(&self.allowed)
            .filter(|(&p, &a)| (a >> p) & 1 == 0)
            .count();
        let mut d = prefix;
        if bad == 0 && d != 0 && !sink(d) {
            return;
        }
        for g in 1u64..(1u64 << low) {
            let i = g.trailing_zeros() as usize;
            d ^= 1 << i;
            for &(t, bit) in self.incident(i) {
                let t = t as usize;
                let old = pattern[t];
                let new = old ^ (1 << bit);
                pattern[t] = new;
                let a = self.allowed[t];
                bad = bad + ((a >> new) & 1 == 0) as usize - ((a >> old) & 1 == 0) as usize;
            }
            if bad == 0 && !sink(d) {
                return;
            }
        }
    }
}

fn mask_to_set(n: usize, mask: u64) -> EdgeSet {
    let mut m = mask;
    let mut out = EdgeSet::empty(n);
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        let (x, y) = pair_from_index(i);
        out.insert(x, y).expect("index in range");
    }
    out
}

/// A non-trivial (or trivial) reconstruction described by its difference set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionWitness {
    pub difference: EdgeSet,
    pub components: Vec<Component>,
    pub trivial: bool,
}

impl ReconstructionWitness {
    pub fn new(difference: EdgeSet) -> Self {
        let trivial = difference.is_empty() || difference.is_full();
        Self {
            components: components(&difference),
            difference,
            trivial,
        }
    }

    pub fn size(&self) -> usize {
        self.difference.len()
    }

    /// The reconstruction itself, `φ` flipped on the difference set.
    pub fn apply(&self, phi: &Coloring) -> Result<Coloring> {
        phi.flipped(&self.difference)
    }
}

impl Serialize for ReconstructionWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.difference.serialize(s)
    }
}

fn size_then_colex(n: usize, k: usize) -> impl Iterator<Item = EdgeSet> {
    combinations(pair_count(n), k)
        .map(move |c| EdgeSet::from_indices(n, c).expect("indices in range"))
}

/// Every valid non-trivial difference with at most `max_size` pairs (all
/// sizes when `None`), by size and then colex order.
pub fn enumerate_reconstructions(
    phi: &Coloring,
    max_size: Option<usize>,
) -> Result<Box<dyn Iterator<Item = ReconstructionWitness> + '_>> {
    need_n("reconstruction enumeration", 3, phi.n())?;
    let n = phi.n();
    let p = pair_count(n);
    let top = max_size.unwrap_or(p).min(p - 1);
    if p <= 64 {
        let engine = Engine::new(phi);
        let it = (1..=top)
            .flat_map(move |k| combinations(p, k))
            .filter_map(move |c| {
                let mask = c.iter().fold(0u64, |m, &i| m | (1 << i));
                engine
                    .valid(mask)
                    .then(|| ReconstructionWitness::new(mask_to_set(n, mask)))
            });
        Ok(Box::new(it))
    } else {
        let rows = phi.rows();
        let it = (1..=top)
            .flat_map(move |k| size_then_colex(n, k))
            .filter(move |d| valid_rows(&rows, &d.rows()))
            .map(ReconstructionWitness::new);
        Ok(Box::new(it))
    }
}

/// Limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest vertex count searched exhaustively (at most [`HARD_MAX_N`]).
    pub max_n: usize,
    /// Cap on examined difference sets; `None` for no cap.
    pub max_steps: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            max_steps: None,
        }
    }
}

impl SearchBudget {
    /// The default budget with the exhaustive ceiling raised to [`HARD_MAX_N`].
    pub fn extended() -> Self {
        Self {
            max_n: HARD_MAX_N,
            max_steps: None,
        }
    }

    fn check(&self) -> Result<()> {
        if self.max_n > HARD_MAX_N {
            return Err(Error::Budget(format!(
                "exhaustive search is capped at n = {HARD_MAX_N}, asked for {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    InR,
    NotInR,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RMembership {
    pub verdict: Verdict,
    pub witness: Option<ReconstructionWitness>,
}

const SHARD_BITS: usize = 8;

/// Decides whether `phi` has a non-trivial reconstruction.
///
/// Critical pairs and critical cycles are tried first. Otherwise, for
/// `n ≤ budget.max_n`, all difference sets avoiding the last pair are scanned
/// (a set and its complement are equivalent, so this covers everything). The
/// scan is split into a fixed number of shards taken in order, so the reported
/// witness does not depend on the number of worker threads.
pub fn in_r(phi: &Coloring, budget: &SearchBudget) -> Result<RMembership> {
    need_n("membership search", 3, phi.n())?;
    budget.check()?;
    if let Some(w) = structural_witness(phi)? {
        return Ok(RMembership {
            verdict: Verdict::NotInR,
            witness: Some(w),
        });
    }
    let n = phi.n();
    if n > budget.max_n {
        return Ok(RMembership {
            verdict: Verdict::Unknown,
            witness: None,
        });
    }
    let engine = Engine::new(phi);
    let free = engine.pairs - 1;
    let shard_bits = SHARD_BITS.min(free);
    let low = free - shard_bits;
    let shards = 1u64 << shard_bits;
    let per_shard = 1u64 << low;
    let allowed_shards = match budget.max_steps {
        Some(cap) => (cap / per_shard).min(shards),
        None => shards,
    };
    let found = (0..allowed_shards).into_par_iter().find_map_first(|k| {
        let mut hit = None;
        engine.scan_shard(low, k << low, |d| {
            hit = Some(d);
            false
        });
        hit
    });
    Ok(match found {
        Some(mask) => RMembership {
            verdict: Verdict::NotInR,
            witness: Some(ReconstructionWitness::new(mask_to_set(n, mask))),
        },
        None if allowed_shards == shards => RMembership {
            verdict: Verdict::InR,
            witness: None,
        },
        None => RMembership {
            verdict: Verdict::Unknown,
            witness: None,
        },
    })
}

fn structural_witness(phi: &Coloring) -> Result<Option<ReconstructionWitness>> {
    if let Some(&(x, y)) = find_critical_pairs(phi)?.first() {
        let d = EdgeSet::from_pairs(phi.n(), [(x, y)])?;
        debug_assert!(is_valid_difference(phi, &d)?);
        // a single pair is the whole edge set only when n = 2
        if !d.is_full() {
            return Ok(Some(ReconstructionWitness::new(d)));
        }
    }
    if phi.n() >= 5 {
        if let Some(w) = find_critical_cycles(phi)?.first() {
            debug_assert!(is_valid_difference(phi, &w.edges)?);
            return Ok(Some(ReconstructionWitness::new(w.edges.clone())));
        }
    }
    Ok(None)
}

/// Every valid non-trivial difference set of `phi`, by size then colex.
///
/// Exhaustive; requires `n ≤ budget.max_n`.
pub fn all_reconstructions(phi: &Coloring, budget: &SearchBudget) -> Result<Vec<EdgeSet>> {
    need_n("reconstruction enumeration", 3, phi.n())?;
    budget.check()?;
    if phi.n() > budget.max_n {
        return Err(Error::Budget(format!(
            "n = {} exceeds the exhaustive ceiling {}",
            phi.n(),
            budget.max_n
        )));
    }
    let engine = Engine::new(phi);
    let free = engine.pairs - 1;
    let shard_bits = SHARD_BITS.min(free);
    let low = free - shard_bits;
    let full = if engine.pairs == 64 {
        u64::MAX
    } else {
        (1u64 << engine.pairs) - 1
    };
    let mut masks: Vec<u64> = (0..1u64 << shard_bits)
        .into_par_iter()
        .flat_map_iter(|k| {
            let mut found = Vec::new();
            engine.scan_shard(low, k << low, |d| {
                found.push(d);
                found.push(full ^ d);
                true
            });
            found
        })
        .collect();
    // among sets of one size, colex order is numeric order of the bitmask
    masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
    Ok(masks.into_iter().map(|m| mask_to_set(phi.n(), m)).collect())
}

/// `r(φ)` as found by a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RValue {
    Finite(usize),
    /// `φ` has no non-trivial reconstruction.
    NotApplicable,
    Unknown,
}

impl RValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            RValue::Finite(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    #[serde(rename = "structural")]
    StructuralOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RValueReport {
    pub r: RValue,
    pub witnesses: Vec<ReconstructionWitness>,
    pub mode: SearchMode,
    /// Whether the search covered everything needed to certify `r`.
    pub complete: bool,
}

impl Serialize for RValueReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            r: Option<usize>,
            mode: SearchMode,
            complete: bool,
            witnesses: &'a [ReconstructionWitness],
        }
        Repr {
            r: self.r.finite(),
            mode: self.mode,
            complete: self.complete,
            witnesses: &self.witnesses,
        }
        .serialize(s)
    }
}

/// `r(φ)` with the default budget.
pub fn r_value(phi: &Coloring, mode: SearchMode) -> Result<RValueReport> {
    r_value_with_budget(phi, mode, &SearchBudget::default())
}

pub fn r_value_with_budget(
    phi: &Coloring,
    mode: SearchMode,
    budget: &SearchBudget,
) -> Result<RValueReport> {
    need_n("r search", 3, phi.n())?;
    match mode {
        SearchMode::StructuralOnly => structural_r(phi),
        SearchMode::Exhaustive => exhaustive_r(phi, budget),
    }
}

fn structural_r(phi: &Coloring) -> Result<RValueReport> {
    let n = phi.n();
    let pairs = find_critical_pairs(phi)?;
    if !pairs.is_empty() && pair_count(n) > 1 {
        let witnesses = pairs
            .into_iter()
            .map(|p| ReconstructionWitness::new(EdgeSet::from_pairs(n, [p]).expect("valid pair")))
            .collect();
        return Ok(RValueReport {
            r: RValue::Finite(1),
            witnesses,
            mode: SearchMode::StructuralOnly,
            complete: true,
        });
    }
    if n >= 5 {
        let cycles = find_critical_cycles(phi)?;
        if !cycles.is_empty() {
            return Ok(RValueReport {
                r: RValue::Finite(4),
                witnesses: cycles
                    .into_iter()
                    .map(|w| ReconstructionWitness::new(w.edges))
                    .collect(),
                mode: SearchMode::StructuralOnly,
                // minimality of a cycle is only guaranteed on large vertex sets
                complete: n >= crate::RAMSEY_7_UPPER,
            });
        }
    }
    Ok(RValueReport {
        r: RValue::Unknown,
        witnesses: Vec::new(),
        mode: SearchMode::StructuralOnly,
        complete: false,
    })
}

fn exhaustive_r(phi: &Coloring, budget: &SearchBudget) -> Result<RValueReport> {
    let unknown = RValueReport {
        r: RValue::Unknown,
        witnesses: Vec::new(),
        mode: SearchMode::Exhaustive,
        complete: false,
    };
    let membership = in_r(phi, budget)?;
    let upper = match (membership.verdict, &membership.witness) {
        (Verdict::InR, _) => {
            return Ok(RValueReport {
                r: RValue::NotApplicable,
                witnesses: Vec::new(),
                mode: SearchMode::Exhaustive,
                complete: true,
            })
        }
        (Verdict::NotInR, Some(w)) => w.size().min(pair_count(phi.n()) - w.size()),
        _ => return Ok(unknown),
    };
    if pair_count(phi.n()) > 64 {
        // a critical pair is minimal on any vertex set
        if upper == 1 {
            return structural_r(phi).map(|mut r| {
                r.mode = SearchMode::Exhaustive;
                r
            });
        }
        return Ok(unknown);
    }
    let engine = Engine::new(phi);
    let p = engine.pairs;
    let mut spent: u128 = 0;
    for k in 1..=upper {
        spent += binomial(p, k);
        if budget.max_steps.is_some_and(|cap| spent > cap as u128) {
            return Ok(unknown);
        }
        let found = valid_of_size(&engine, k);
        if !found.is_empty() {
            return Ok(RValueReport {
                r: RValue::Finite(k),
                witnesses: found
                    .into_iter()
                    .map(|m| ReconstructionWitness::new(mask_to_set(phi.n(), m)))
                    .collect(),
                mode: SearchMode::Exhaustive,
                complete: true,
            });
        }
    }
    unreachable!("the membership witness has size at most {upper}")
}

/// All valid k-subsets in colex order: grouped by largest element, which is
/// the outermost colex key.
fn valid_of_size(engine: &Engine, k: usize) -> Vec<u64> {
    let p = engine.pairs;
    (k - 1..p)
        .into_par_iter()
        .flat_map_iter(|top| {
            combinations(top, k - 1).filter_map(move |c| {
                let mask = c.iter().fold(1u64 << top, |m, &i| m | (1 << i));
                engine.valid(mask).then_some(mask)
            })
        })
        .collect()
}

/// All minimum-size non-trivial reconstructions.
pub fn minimal_reconstructions(phi: &Coloring) -> Result<Vec<ReconstructionWitness>> {
    minimal_reconstructions_with_budget(phi, &SearchBudget::default())
}

pub fn minimal_reconstructions_with_budget(
    phi: &Coloring,
    budget: &SearchBudget,
) -> Result<Vec<ReconstructionWitness>> {
    let report = exhaustive_r(phi, budget)?;
    match report.r {
        RValue::Finite(_) => Ok(report.witnesses),
        RValue::NotApplicable => Err(Error::NotApplicable(
            "coloring has no non-trivial reconstruction".into(),
        )),
        RValue::Unknown => Err(Error::Budget(
            "minimal reconstructions not established within budget".into(),
        )),
    }
}

/// Validity of `D ∩ [C]²` for a component `C` of a valid difference `D`.
pub fn component_restriction_valid(phi: &Coloring, d: &EdgeSet, c: &Component) -> Result<bool> {
    same_n(phi.n(), d.n())?;
    if !components(d).contains(c) {
        return Err(Error::Precondition(format!(
            "{:?} is not a component of the difference set",
            c.vertices
        )));
    }
    is_valid_difference(phi, &d.within(&c.vertices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, h_equivalent};

    fn oracle(phi: &Coloring, d: &EdgeSet) -> bool {
        h_equivalent(phi, &phi.flipped(d).unwrap()).unwrap()
    }

    #[test]
    fn validity_examples() {
        let (phi, psi) = fixtures::fig_homsum();
        assert!(is_valid_difference(&phi, &EdgeSet::empty(5)).unwrap());
        assert!(is_valid_difference(&phi, &EdgeSet::full(5)).unwrap());
        let d = phi.boolean_sum(&psi).unwrap().ones_set();
        assert_eq!(d.len(), 5);
        assert!(is_valid_difference(&phi, &d).unwrap());
        assert!(oracle(&phi, &d));
        assert!(is_valid_difference(&phi, &EdgeSet::empty(4)).is_err());
    }

    #[test]
    fn engine_agrees_with_rows_at_n5() {
        for cm in (0u64..1024).step_by(37) {
            let phi = Coloring::from_mask(5, cm).unwrap();
            let e = Engine::new(&phi);
            for dm in 0u64..1024 {
                let d = mask_to_set(5, dm);
                assert_eq!(e.valid(dm), is_valid_difference(&phi, &d).unwrap());
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let zero = Coloring::zeros(5).unwrap();
        assert_eq!(enumerate_reconstructions(&zero, None).unwrap().count(), 0);

        let part = fixtures::partition(6);
        let ws: Vec<_> = enumerate_reconstructions(&part, Some(1)).unwrap().collect();
        assert_eq!(ws.len(), 9);

        let ncp = fixtures::fig_no_critical_pair(6).unwrap();
        let ws: Vec<_> = enumerate_reconstructions(&ncp, Some(4)).unwrap().collect();
        assert!(ws.iter().all(|w| w.size() == 4));
        let z = EdgeSet::from_pairs(6, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(ws.iter().any(|w| w.difference == z));
    }

    #[test]
    fn in_r_examples() {
        let b = SearchBudget::default();
        assert_eq!(
            in_r(&Coloring::zeros(5).unwrap(), &b).unwrap().verdict,
            Verdict::InR
        );
        for n in 5..=12 {
            let m = in_r(&crate::srcheck::alpha_coloring(n).unwrap(), &b).unwrap();
            assert_eq!(m.verdict, Verdict::NotInR);
        }
        let (phi, _) = fixtures::fig_homsum();
        let m = in_r(&phi, &b).unwrap();
        assert_eq!(m.verdict, Verdict::NotInR);
        let w = m.witness.unwrap();
        assert!(w.size() <= 5 && !w.trivial && oracle(&phi, &w.difference));
        assert!(in_r(
            &phi,
            &SearchBudget {
                max_n: 9,
                max_steps: None
            }
        )
        .is_err());
    }

    #[test]
    fn in_r_budget_gives_unknown() {
        let zero = Coloring::zeros(6).unwrap();
        let tight = SearchBudget {
            max_n: 7,
            max_steps: Some(10),
        };
        assert_eq!(in_r(&zero, &tight).unwrap().verdict, Verdict::Unknown);
        let small = SearchBudget {
            max_n: 5,
            max_steps: None,
        };
        assert_eq!(in_r(&zero, &small).unwrap().verdict, Verdict::Unknown);
    }

    #[test]
    fn r_value_examples() {
        let part = fixtures::partition(6);
        let r = r_value(&part, SearchMode::Exhaustive).unwrap();
        assert_eq!(
            (r.r, r.witnesses.len(), r.complete),
            (RValue::Finite(1), 9, true)
        );

        let ncp = fixtures::fig_no_critical_pair(6).unwrap();
        let r = r_value(&ncp, SearchMode::Exhaustive).unwrap();
        assert_eq!(r.r, RValue::Finite(4));
        let z = EdgeSet::from_pairs(6, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].difference, z);

        let s = r_value(&ncp, SearchMode::StructuralOnly).unwrap();
        assert_eq!((s.r, s.complete), (RValue::Finite(4), false));

        let zero = Coloring::zeros(5).unwrap();
        let r = r_value(&zero, SearchMode::Exhaustive).unwrap();
        assert_eq!((r.r, r.complete), (RValue::NotApplicable, true));
        let s = r_value(&zero, SearchMode::StructuralOnly).unwrap();
        assert_eq!((s.r, s.complete), (RValue::Unknown, false));
    }

    #[test]
    fn report_json() {
        let ncp = fixtures::fig_no_critical_pair(6).unwrap();
        let r = r_value(&ncp, SearchMode::Exhaustive).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"r":4,"mode":"exhaustive","complete":true,"witnesses":[[[0,1],[1,2],[0,3],[2,3]]]}"#
        );
        let zero = Coloring::zeros(5).unwrap();
        let s = r_value(&zero, SearchMode::StructuralOnly).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"r":null,"mode":"structural","complete":false,"witnesses":[]}"#
        );
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(
            minimal_reconstructions(&fixtures::partition(6))
                .unwrap()
                .len(),
            9
        );
        let cc = minimal_reconstructions(&fixtures::fig_critical_cycle()).unwrap();
        assert_eq!(cc.len(), 1);
        assert_eq!(cc[0].difference.pairs(), vec![(4, 5)]);
        let ncp = minimal_reconstructions(&fixtures::fig_no_critical_pair(6).unwrap()).unwrap();
        assert!(ncp.iter().all(|w| w.size() == 4));
        assert!(matches!(
            minimal_reconstructions(&Coloring::zeros(5).unwrap()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn component_restriction_examples() {
        let phi = fixtures::fig_critical_cycle();
        let mut d = EdgeSet::from_pairs(6, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        d.insert(4, 5).unwrap();
        assert!(is_valid_difference(&phi, &d).unwrap());
        let comps = components(&d);
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert!(component_restriction_valid(&phi, &d, c).unwrap());
        }
        let bogus = Component {
            vertices: vec![0, 1],
            kind: crate::structure::ComponentKind::Path,
            edge_count: 1,
        };
        assert!(component_restriction_valid(&phi, &d, &bogus).is_err());
    }

    #[test]
    fn all_reconstructions_match_enumeration() {
        let b = SearchBudget::default();
        for phi in [
            fixtures::partition(6),
            fixtures::fig_no_critical_pair(6).unwrap(),
            fixtures::fig_critical_cycle(),
        ] {
            let all = all_reconstructions(&phi, &b).unwrap();
            let en: Vec<_> = enumerate_reconstructions(&phi, None)
                .unwrap()
                .map(|w| w.difference)
                .collect();
            assert_eq!(all, en);
        }
    }
}
