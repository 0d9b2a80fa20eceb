//! Colorings of the pairs of `{0..n-1}`, edge sets, and homogeneous-set
//! machinery.
//!
//! A [`Coloring`] assigns 0 or 1 to every unordered pair; an [`EdgeSet`] is a
//! set of unordered pairs. Both store one bit per pair in colex order, so the
//! 1-edges of a coloring and an edge set convert into each other for free.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{pair_count, pair_from_index, pair_idx, triple_count, triple_idx, BitVec, Rows};
use crate::error::{Error, Result};

use crate::bits::pair_index;

/// Total 2-coloring of the pairs of an `n`-vertex complete graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    bits: BitVec,
}

impl Coloring {
    /// All-zero coloring.
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            bits: BitVec::zeros(pair_count(n)),
        })
    }

    /// All-one coloring.
    pub fn ones(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            bits: BitVec::ones(pair_count(n)),
        })
    }

    /// Builds a coloring from a predicate evaluated on every pair `x < y`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut c = Self::zeros(n)?;
        for y in 1..n {
            for x in 0..y {
                if f(x, y) {
                    c.bits.set(pair_idx(x, y), true);
                }
            }
        }
        Ok(c)
    }

    /// Coloring whose 1-pairs are exactly `ones`.
    pub fn from_ones<I>(n: usize, ones: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Ok(EdgeSet::from_pairs(n, ones)?.into_coloring())
    }

    /// Coloring from its bit sequence in colex pair order.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        check_n(n)?;
        if bits.len() != pair_count(n) {
            return Err(Error::InvalidLength(format!(
                "expected {} pair bits for n={n}, got {}",
                pair_count(n),
                bits.len()
            )));
        }
        let mut c = Self::zeros(n)?;
        for (i, &b) in bits.iter().enumerate() {
            c.bits.set(i, b);
        }
        Ok(c)
    }

    /// Coloring from the low `pair_count(n)` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        check_n(n)?;
        let p = pair_count(n);
        if p > 64 || (p < 64 && mask >> p != 0) {
            return Err(Error::InvalidLength(format!("mask does not fit {p} pairs")));
        }
        let mut c = Self::zeros(n)?;
        for i in 0..p {
            c.bits.set(i, (mask >> i) & 1 == 1);
        }
        Ok(c)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pair_count(&self) -> usize {
        self.bits.len()
    }

    /// Color of the pair `{x, y}`.
    ///
    /// Panics on `x == y` or an out-of-range vertex; use [`Coloring::try_color`]
    /// for checked access.
    #[inline]
    pub fn color(&self, x: usize, y: usize) -> u8 {
        assert!(
            x != y && x < self.n && y < self.n,
            "invalid pair {{{x},{y}}}"
        );
        self.bits.get(crate::bits::upair_idx(x, y)) as u8
    }

    pub fn try_color(&self, x: usize, y: usize) -> Result<u8> {
        let idx = pair_index(x, y, self.n)?;
        Ok(self.bits.get(idx) as u8)
    }

    /// Color of the pair with colex index `idx`.
    #[inline]
    pub fn bit(&self, idx: usize) -> u8 {
        self.bits.get(idx) as u8
    }

    pub fn set(&mut self, x: usize, y: usize, color: u8) -> Result<()> {
        let idx = pair_index(x, y, self.n)?;
        self.bits.set(idx, color != 0);
        Ok(())
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    /// `1 - φ`.
    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            bits: self.bits.not(),
        }
    }

    /// Pairwise XOR of two colorings on the same vertex set.
    pub fn boolean_sum(&self, other: &Self) -> Result<Self> {
        same_n(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            bits: self.bits.xor(&other.bits),
        })
    }

    /// Restriction to the strictly increasing vertex list `subset`; vertex
    /// `subset[i]` becomes vertex `i` of the result.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        if subset.len() < 2 {
            return Err(Error::TooSmall {
                what: "restriction",
                min: 2,
                got: subset.len(),
            });
        }
        check_subset(self.n, subset)?;
        Self::from_fn(subset.len(), |i, j| self.color(subset[i], subset[j]) == 1)
    }

    /// The set of 1-pairs, `D₁(φ)`.
    pub fn ones_set(&self) -> EdgeSet {
        EdgeSet {
            n: self.n,
            bits: self.bits.clone(),
        }
    }

    /// The set of 0-pairs, `D₀(φ)`.
    pub fn zeros_set(&self) -> EdgeSet {
        EdgeSet {
            n: self.n,
            bits: self.bits.not(),
        }
    }

    /// Flips every pair in `d`; no emptiness check.
    pub fn flipped(&self, d: &EdgeSet) -> Result<Self> {
        same_n(self.n, d.n)?;
        Ok(Self {
            n: self.n,
            bits: self.bits.xor(&d.bits),
        })
    }

    /// Colex bit sequence.
    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.pair_count()).map(|i| self.bits.get(i)).collect()
    }

    /// Hex form of the bit sequence: bit `i` is pair `i`, little-endian within
    /// each byte.
    pub fn to_bits_hex(&self) -> String {
        hex::encode(self.bits.to_le_bytes())
    }

    pub fn from_bits_hex(n: usize, s: &str) -> Result<Self> {
        check_n(n)?;
        let bytes = hex::decode(s).map_err(|e| Error::Parse(format!("bits_hex: {e}")))?;
        let bits = BitVec::from_le_bytes(pair_count(n), &bytes).ok_or_else(|| {
            Error::Parse(format!(
                "bits_hex must be exactly {} bytes with no bits beyond pair {}",
                pair_count(n).div_ceil(8),
                pair_count(n)
            ))
        })?;
        Ok(Self { n, bits })
    }

    pub(crate) fn rows(&self) -> Rows {
        Rows::from_pair_bits(self.n, &self.bits)
    }

    /// JSON object in the hex form `{"n": .., "bits_hex": ".."}`.
    pub fn to_hex_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "bits_hex": self.to_bits_hex() })
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(n={}, ones=[", self.n)?;
        for (i, (x, y)) in self.ones_set().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}{}{y}", if self.n > 10 { "-" } else { "" })?;
        }
        write!(f, "])")
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooSmall {
            what: "coloring",
            min: 2,
            got: n,
        });
    }
    Ok(())
}

pub(crate) fn same_n(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn need_n(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::TooSmall { what, min, got });
    }
    Ok(())
}

/// Checks that `subset` is strictly increasing and within `0..n`.
pub(crate) fn check_subset(n: usize, subset: &[usize]) -> Result<()> {
    for w in subset.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidSubset(format!(
                "vertices must be strictly increasing and distinct, got {subset:?}"
            )));
        }
    }
    if let Some(&v) = subset.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { v, n });
    }
    Ok(())
}

/// A set of unordered pairs over `{0..n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    n: usize,
    bits: BitVec,
}

impl EdgeSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            bits: BitVec::zeros(pair_count(n)),
        }
    }

    /// Every pair of `{0..n-1}`.
    pub fn full(n: usize) -> Self {
        Self {
            n,
            bits: BitVec::ones(pair_count(n)),
        }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = Self::empty(n);
        for (x, y) in pairs {
            s.insert(x, y)?;
        }
        Ok(s)
    }

    /// Edge set from colex pair indices.
    pub fn from_indices<I>(n: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(n);
        for idx in indices {
            if idx >= s.bits.len() {
                return Err(Error::InvalidLength(format!(
                    "pair index {idx} out of range for n={n}"
                )));
            }
            s.bits.set(idx, true);
        }
        Ok(s)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x: usize, y: usize) -> Result<bool> {
        let idx = pair_index(x, y, self.n)?;
        let was = self.bits.get(idx);
        self.bits.set(idx, true);
        Ok(!was)
    }

    pub fn remove(&mut self, x: usize, y: usize) -> Result<bool> {
        let idx = pair_index(x, y, self.n)?;
        let was = self.bits.get(idx);
        self.bits.set(idx, false);
        Ok(was)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x != y && x < self.n && y < self.n && self.bits.get(crate::bits::upair_idx(x, y))
    }

    #[inline]
    pub fn contains_index(&self, idx: usize) -> bool {
        self.bits.get(idx)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.count_ones() == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits.count_ones() == self.bits.len()
    }

    /// Member pairs `(x, y)`, `x < y`, in colex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.iter_ones().map(pair_from_index)
    }

    /// Colex indices of the members.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            bits: self.bits.not(),
        }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Result<Self> {
        same_n(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            bits: self.bits.xor(&other.bits),
        })
    }

    /// `A ∩ [S]²` for a vertex set `S` (any order).
    pub fn within(&self, vertices: &[usize]) -> Self {
        let mut mask = Self::empty(self.n);
        for (i, &x) in vertices.iter().enumerate() {
            for &y in &vertices[i + 1..] {
                if x != y && x < self.n && y < self.n {
                    mask.bits.set(crate::bits::upair_idx(x, y), true);
                }
            }
        }
        Self {
            n: self.n,
            bits: self.bits.and(&mask.bits),
        }
    }

    /// Number of members incident to `x`.
    pub fn degree(&self, x: usize) -> usize {
        assert!(x < self.n, "vertex {x} out of range for n={}", self.n);
        (0..self.n)
            .filter(|&y| y != x && self.contains(x, y))
            .count()
    }

    /// Re-labels the edge set through an embedding `local i ↦ map[i]`.
    pub fn embed(&self, target_n: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: map.len(),
            });
        }
        Self::from_pairs(target_n, self.iter().map(|(x, y)| (map[x], map[y])))
    }

    /// Restriction of the edge set to the increasing vertex list `subset`,
    /// relabelled to `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        check_subset(self.n, subset)?;
        let mut out = Self::empty(subset.len());
        for j in 1..subset.len() {
            for i in 0..j {
                if self.contains(subset[i], subset[j]) {
                    out.bits.set(pair_idx(i, j), true);
                }
            }
        }
        Ok(out)
    }

    /// Indicator coloring of the set.
    pub fn into_coloring(self) -> Coloring {
        Coloring {
            n: self.n,
            bits: self.bits,
        }
    }

    pub fn to_coloring(&self) -> Coloring {
        self.clone().into_coloring()
    }

    pub(crate) fn rows(&self) -> Rows {
        Rows::from_pair_bits(self.n, &self.bits)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.iter().map(|(x, y)| [x, y]).collect();
        pairs.serialize(s)
    }
}

/// Classification of a vertex triple under a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleClass {
    NonHom,
    Hom0,
    Hom1,
}

impl TripleClass {
    pub fn is_hom(self) -> bool {
        self != TripleClass::NonHom
    }

    pub fn swapped(self) -> Self {
        match self {
            TripleClass::NonHom => TripleClass::NonHom,
            TripleClass::Hom0 => TripleClass::Hom1,
            TripleClass::Hom1 => TripleClass::Hom0,
        }
    }

    pub fn color(self) -> Option<u8> {
        match self {
            TripleClass::NonHom => None,
            TripleClass::Hom0 => Some(0),
            TripleClass::Hom1 => Some(1),
        }
    }

    fn of(a: u8, b: u8, c: u8) -> Self {
        if a == b && b == c {
            if a == 0 {
                TripleClass::Hom0
            } else {
                TripleClass::Hom1
            }
        } else {
            TripleClass::NonHom
        }
    }
}

/// Per-triple classification of a coloring, in colex triple order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomSignature {
    n: usize,
    classes: Vec<TripleClass>,
}

impl HomSignature {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class of `{x, y, z}` (any order, distinct vertices).
    pub fn get(&self, x: usize, y: usize, z: usize) -> TripleClass {
        let mut t = [x, y, z];
        t.sort_unstable();
        assert!(
            t[0] != t[1] && t[1] != t[2] && t[2] < self.n,
            "invalid triple {t:?}"
        );
        self.classes[triple_idx(t[0], t[1], t[2])]
    }

    /// `((x, y, z), class)` for every triple, colex order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), TripleClass)> + '_ {
        triples(self.n).zip(self.classes.iter().copied())
    }

    /// Color-agnostic projection: `true` for homogeneous triples.
    pub fn projection(&self) -> Vec<bool> {
        self.classes.iter().map(|c| c.is_hom()).collect()
    }

    pub fn color_swapped(&self) -> Self {
        Self {
            n: self.n,
            classes: self.classes.iter().map(|c| c.swapped()).collect(),
        }
    }

    /// Signature of the sub-structure on the increasing vertex list `subset`.
    pub fn project_to(&self, subset: &[usize]) -> Result<Self> {
        check_subset(self.n, subset)?;
        let m = subset.len();
        let classes = triples(m)
            .map(|(i, j, k)| self.classes[triple_idx(subset[i], subset[j], subset[k])])
            .collect();
        Ok(Self { n: m, classes })
    }

    /// Homogeneous triples, colex order.
    pub fn homogeneous(&self) -> Vec<((usize, usize, usize), u8)> {
        self.iter()
            .filter_map(|(t, c)| c.color().map(|col| (t, col)))
            .collect()
    }
}

/// All triples `x < y < z < n` in colex order.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (2..n).flat_map(|z| (1..z).flat_map(move |y| (0..y).map(move |x| (x, y, z))))
}

/// Classifies every triple as non-homogeneous, 0-homogeneous or 1-homogeneous.
pub fn hom_signature(phi: &Coloring) -> Result<HomSignature> {
    need_n("homogeneity query", 3, phi.n)?;
    let mut classes = Vec::with_capacity(triple_count(phi.n));
    for (x, y, z) in triples(phi.n) {
        classes.push(TripleClass::of(
            phi.color(x, y),
            phi.color(x, z),
            phi.color(y, z),
        ));
    }
    Ok(HomSignature { n: phi.n, classes })
}

/// Same homogeneous triples, hence the same homogeneous sets.
pub fn h_equivalent(phi: &Coloring, psi: &Coloring) -> Result<bool> {
    same_n(phi.n, psi.n)?;
    let a = hom_signature(phi)?;
    let b = hom_signature(psi)?;
    Ok(a.classes
        .iter()
        .zip(&b.classes)
        .all(|(p, q)| p.is_hom() == q.is_hom()))
}

/// A maximal homogeneous vertex set together with its color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HomSet {
    pub vertices: Vec<usize>,
    pub color: u8,
}

/// All inclusion-maximal homogeneous sets with at least `min_size` vertices,
/// sorted by vertex list.
pub fn hom_sets(phi: &Coloring, min_size: usize) -> Result<Vec<HomSet>> {
    need_n("homogeneity query", 3, phi.n)?;
    if min_size < 3 {
        return Err(Error::Precondition(format!(
            "homogeneous sets have at least 3 vertices, got min_size={min_size}"
        )));
    }
    let ones = phi.rows();
    let zeros = phi.zeros_set().rows();
    let mut out = Vec::new();
    for (color, rows) in [(0u8, &zeros), (1u8, &ones)] {
        let mut found = Vec::new();
        let w = rows.words();
        let mut p = vec![0u64; w];
        for (i, word) in p.iter_mut().enumerate() {
            *word = rows.valid_mask(i);
        }
        bron_kerbosch(rows, &mut Vec::new(), p, vec![0u64; w], &mut found);
        out.extend(
            found
                .into_iter()
                .filter(|c: &Vec<usize>| c.len() >= min_size)
                .map(|vertices| HomSet { vertices, color }),
        );
    }
    out.sort();
    Ok(out)
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            }
        })
    })
}

fn bron_kerbosch(
    rows: &Rows,
    r: &mut Vec<usize>,
    p: Vec<u64>,
    x: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.iter().all(|&w| w == 0) {
        if x.iter().all(|&w| w == 0) {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    // pivot: vertex of P ∪ X with most neighbours in P
    let pivot = iter_bits(&p)
        .chain(iter_bits(&x))
        .max_by_key(|&u| {
            rows.row(u)
                .iter()
                .zip(&p)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
        })
        .expect("P is nonempty");
    let candidates: Vec<usize> = iter_bits(&p).filter(|&v| !rows.has(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let nv = rows.row(v);
        let p2: Vec<u64> = p.iter().zip(nv).map(|(a, b)| a & b).collect();
        let x2: Vec<u64> = x.iter().zip(nv).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(rows, r, p2, x2, out);
        r.pop();
        p[v / 64] &= !(1u64 << (v % 64));
        x[v / 64] |= 1u64 << (v % 64);
    }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum ColoringRepr {
    Ones { n: usize, ones: Vec<[usize; 2]> },
    Hex { n: usize, bits_hex: String },
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringRepr::Ones {
            n: self.n,
            ones: self.ones_set().iter().map(|(x, y)| [x, y]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ColoringRepr::deserialize(d)?;
        let parsed = match repr {
            ColoringRepr::Ones { n, ones } => {
                let mut c = Coloring::zeros(n);
                if let Ok(c) = c.as_mut() {
                    for [x, y] in ones {
                        let idx = pair_index(x, y, n).map_err(serde::de::Error::custom)?;
                        if c.bits.get(idx) {
                            return Err(serde::de::Error::custom(format!(
                                "duplicate pair [{x},{y}]"
                            )));
                        }
                        c.bits.set(idx, true);
                    }
                }
                c
            }
            ColoringRepr::Hex { n, bits_hex } => Coloring::from_bits_hex(n, &bits_hex),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

impl Coloring {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pair_index_examples() {
        assert_eq!(pair_index(0, 1, 6).unwrap(), 0);
        assert_eq!(pair_index(0, 2, 6).unwrap(), 1);
        assert_eq!(pair_index(3, 5, 6).unwrap(), 13);
        assert_eq!(pair_index(5, 3, 6).unwrap(), 13);
        assert!(matches!(
            pair_index(2, 2, 6),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            pair_index(2, 6, 6),
            Err(Error::InvalidPair { .. })
        ));
    }

    #[test]
    fn pair_index_matches_enumeration() {
        // enumerate pairs of n=6 in colex order and count
        let mut pairs = Vec::new();
        for x in 0..6 {
            for y in x + 1..6 {
                pairs.push((x, y));
            }
        }
        pairs.sort_by_key(|&(x, y)| (y, x));
        for (i, &(x, y)) in pairs.iter().enumerate() {
            assert_eq!(pair_index(x, y, 6).unwrap(), i);
        }
    }

    #[test]
    fn coloring_construction_errors() {
        assert!(matches!(Coloring::zeros(1), Err(Error::TooSmall { .. })));
        assert!(Coloring::from_bits(4, &[true; 5]).is_err());
        assert!(Coloring::from_ones(4, [(1, 1)]).is_err());
    }

    #[test]
    fn boolean_sum_examples() {
        let phi = fixtures::fig_homsum().0;
        assert_eq!(phi.boolean_sum(&phi).unwrap(), Coloring::zeros(5).unwrap());
        assert_eq!(
            phi.boolean_sum(&phi.complement()).unwrap(),
            Coloring::ones(5).unwrap()
        );
        let (phi, psi) = fixtures::fig_homsum();
        let sum = phi.boolean_sum(&psi).unwrap();
        let (a, b, c, d, e) = (0, 1, 2, 3, 4);
        let expected = EdgeSet::from_pairs(5, [(a, e), (e, d), (d, a), (c, d), (b, e)]).unwrap();
        assert_eq!(sum.ones_set(), expected);
        assert!(matches!(
            phi.boolean_sum(&Coloring::zeros(4).unwrap()),
            Err(Error::DimensionMismatch { left: 5, right: 4 })
        ));
    }

    #[test]
    fn restrict_examples() {
        let phi = fixtures::partition(6);
        assert_eq!(phi.restrict(&[0, 1, 2, 3, 4, 5]).unwrap(), phi);
        let a8 = crate::srcheck::alpha_coloring(8).unwrap();
        assert_eq!(
            a8.restrict(&[0, 1, 2, 3, 4, 5]).unwrap(),
            crate::srcheck::alpha_coloring(6).unwrap()
        );
        let cc = fixtures::fig_critical_cycle();
        let sub = cc.restrict(&[0, 1, 2, 3]).unwrap();
        assert_eq!(
            sub.ones_set().pairs(),
            EdgeSet::from_pairs(4, [(0, 1), (1, 3), (2, 3)])
                .unwrap()
                .pairs()
        );
        assert!(matches!(phi.restrict(&[3]), Err(Error::TooSmall { .. })));
        assert!(matches!(
            phi.restrict(&[1, 1, 2]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            phi.restrict(&[3, 1]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            phi.restrict(&[1, 7]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn hom_signature_examples() {
        let sig = hom_signature(&Coloring::ones(4).unwrap()).unwrap();
        assert_eq!(sig.len(), 4);
        assert!(sig.iter().all(|(_, c)| c == TripleClass::Hom1));

        let (phi, _) = fixtures::fig_homsum();
        let sig = hom_signature(&phi).unwrap();
        assert_eq!(sig.homogeneous(), vec![((0, 1, 2), 1), ((0, 3, 4), 0)]);

        let sig = hom_signature(&fixtures::partition(6)).unwrap();
        assert_eq!(sig.homogeneous(), vec![((0, 2, 4), 1), ((1, 3, 5), 1)]);
        assert_eq!(sig.get(0, 2, 1), TripleClass::NonHom);

        assert!(matches!(
            hom_signature(&Coloring::zeros(2).unwrap()),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn hom_sets_examples() {
        let all = hom_sets(&Coloring::zeros(5).unwrap(), 3).unwrap();
        assert_eq!(
            all,
            vec![HomSet {
                vertices: vec![0, 1, 2, 3, 4],
                color: 0
            }]
        );
        let part = hom_sets(&fixtures::partition(6), 3).unwrap();
        assert_eq!(
            part,
            vec![
                HomSet {
                    vertices: vec![0, 2, 4],
                    color: 1
                },
                HomSet {
                    vertices: vec![1, 3, 5],
                    color: 1
                },
            ]
        );
        let ncp = hom_sets(&fixtures::fig_no_critical_pair(6).unwrap(), 3).unwrap();
        assert!(ncp.contains(&HomSet {
            vertices: vec![0, 4, 5],
            color: 1
        }));
        assert!(ncp.contains(&HomSet {
            vertices: vec![2, 4, 5],
            color: 1
        }));
        assert!(hom_sets(&fixtures::partition(6), 2).is_err());
        assert!(hom_sets(&fixtures::partition(6), 4).unwrap().is_empty());
    }

    #[test]
    fn h_equivalent_examples() {
        let (phi, psi) = fixtures::fig_homsum();
        assert!(h_equivalent(&phi, &phi.complement()).unwrap());
        assert!(h_equivalent(&phi, &psi).unwrap());
        let zero = Coloring::zeros(4).unwrap();
        let one_edge = Coloring::from_ones(4, [(1, 2)]).unwrap();
        assert!(!h_equivalent(&zero, &one_edge).unwrap());
        assert!(h_equivalent(&zero, &Coloring::zeros(5).unwrap()).is_err());
    }

    #[test]
    fn json_forms() {
        let phi = fixtures::fig_no_critical_pair(6).unwrap();
        let s = phi.to_json();
        assert!(s.starts_with(r#"{"n":6,"ones":[[1,2],[0,3],[1,3],[0,4],[2,4],[0,5],[2,5],[4,5]]"#));
        assert_eq!(Coloring::from_json(&s).unwrap(), phi);
        let hex = phi.to_hex_json().to_string();
        assert_eq!(Coloring::from_json(&hex).unwrap(), phi);
        assert!(Coloring::from_json(r#"{"n":4,"ones":[[0,1],[1,0]]}"#).is_err());
        assert!(Coloring::from_json(r#"{"n":4,"ones":[[0,4]]}"#).is_err());
        assert!(Coloring::from_json(r#"{"n":4,"bits_hex":"ff"}"#).is_err());
        assert!(Coloring::from_json(r#"{"n":4,"bits_hex":"3f"}"#).is_ok());
        assert!(Coloring::from_json(r#"{"n":1,"ones":[]}"#).is_err());
    }
}
