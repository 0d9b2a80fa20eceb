//! Low-level indexing and bit containers shared by the public types.
//!
//! Pairs `{x, y}` with `x < y` are numbered colexicographically:
//! `idx = y * (y - 1) / 2 + x`. Triples `{x, y, z}` with `x < y < z` use the
//! same rule one level up: `idx = C(z, 3) + C(y, 2) + x`. Under both rules the
//! objects living inside a prefix `{0..m-1}` form a prefix of the numbering.

use crate::error::{Error, Result};

#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
pub const fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Colex index of `{x, y}`; caller guarantees `x < y`.
#[inline]
pub(crate) const fn pair_idx(x: usize, y: usize) -> usize {
    y * (y - 1) / 2 + x
}

/// Colex index of an unordered pair, normalizing the order.
#[inline]
pub(crate) fn upair_idx(x: usize, y: usize) -> usize {
    if x < y {
        pair_idx(x, y)
    } else {
        pair_idx(y, x)
    }
}

/// Checked colex pair index on `n` vertices. The pair is unordered, so
/// `(5, 3)` and `(3, 5)` map to the same index.
pub fn pair_index(x: usize, y: usize, n: usize) -> Result<usize> {
    if x == y || x >= n || y >= n {
        return Err(Error::InvalidPair { x, y, n });
    }
    Ok(upair_idx(x, y))
}

/// Inverse of [`pair_index`]: returns `(x, y)` with `x < y`.
pub fn pair_from_index(idx: usize) -> (usize, usize) {
    // largest y with y(y-1)/2 <= idx
    let mut y = ((((8 * idx + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while y * (y - 1) / 2 > idx {
        y -= 1;
    }
    while (y + 1) * y / 2 <= idx {
        y += 1;
    }
    (idx - y * (y - 1) / 2, y)
}

#[inline]
pub(crate) const fn triple_idx(x: usize, y: usize, z: usize) -> usize {
    let c3 = if z < 3 { 0 } else { z * (z - 1) * (z - 2) / 6 };
    c3 + y * (y - 1) / 2 + x
}

#[inline]
pub(crate) const fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Fixed-length bit vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.trim();
        v
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn not(&self) -> Self {
        let mut v = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        v.trim();
        v
    }

    pub fn xor(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn and(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
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

    pub fn to_le_bytes(&self) -> Vec<u8> {
        let nbytes = self.len.div_ceil(8);
        let mut out = Vec::with_capacity(nbytes);
        for i in 0..nbytes {
            out.push((self.words[i / 8] >> ((i % 8) * 8)) as u8);
        }
        out
    }

    /// Inverse of `to_le_bytes`; rejects wrong lengths and stray high bits.
    pub fn from_le_bytes(len: usize, bytes: &[u8]) -> Option<Self> {
        if bytes.len() != len.div_ceil(8) {
            return None;
        }
        let mut v = Self::zeros(len);
        for (i, &b) in bytes.iter().enumerate() {
            v.words[i / 8] |= (b as u64) << ((i % 8) * 8);
        }
        let before = v.words.clone();
        v.trim();
        (before == v.words).then_some(v)
    }
}

/// Symmetric adjacency bit-matrix: one row of `words` u64 per vertex.
#[derive(Clone, Debug)]
pub(crate) struct Rows {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl Rows {
    pub fn new(n: usize) -> Self {
        let words = words_for(n).max(1);
        Self {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    /// Rows of the pairs whose bit is set in `bits` (colex pair numbering).
    pub fn from_pair_bits(n: usize, bits: &BitVec) -> Self {
        let mut rows = Self::new(n);
        for idx in bits.iter_ones() {
            let (x, y) = pair_from_index(idx);
            rows.set_edge(x, y);
        }
        rows
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.data[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has(&self, u: usize, v: usize) -> bool {
        (self.data[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    pub fn set_edge(&mut self, u: usize, v: usize) {
        self.data[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.data[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    /// Mask of valid vertex bits in word `w`.
    #[inline]
    pub fn valid_mask(&self, w: usize) -> u64 {
        let lo = w * 64;
        if self.n >= lo + 64 {
            u64::MAX
        } else if self.n <= lo {
            0
        } else {
            (1u64 << (self.n - lo)) - 1
        }
    }
}

/// Colex successor of a sorted k-combination drawn from `0..universe`.
/// Returns `false` once the last combination has been passed.
pub(crate) fn next_combination(c: &mut [usize], universe: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { universe };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// All k-subsets of `0..universe` in colex order.
pub(crate) fn combinations(universe: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= universe).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = next_combination(&mut next, universe).then_some(next);
        Some(out)
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_roundtrip() {
        let mut idx = 0;
        for y in 1..40 {
            for x in 0..y {
                assert_eq!(pair_idx(x, y), idx);
                assert_eq!(pair_from_index(idx), (x, y));
                idx += 1;
            }
        }
    }

    #[test]
    fn triple_index_is_dense_colex() {
        let mut idx = 0;
        for z in 2..12 {
            for y in 1..z {
                for x in 0..y {
                    assert_eq!(triple_idx(x, y, z), idx);
                    idx += 1;
                }
            }
        }
        assert_eq!(idx, triple_count(12));
    }

    #[test]
    fn combinations_are_colex_and_complete() {
        let all: Vec<_> = combinations(6, 3).collect();
        assert_eq!(all.len(), 20);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[1], vec![0, 1, 3]);
        assert_eq!(all[2], vec![0, 2, 3]);
        assert_eq!(all[3], vec![1, 2, 3]);
        assert_eq!(all[19], vec![3, 4, 5]);
        // colex: compare reversed tuples
        for w in all.windows(2) {
            let a: Vec<_> = w[0].iter().rev().collect();
            let b: Vec<_> = w[1].iter().rev().collect();
            assert!(a < b);
        }
        assert_eq!(combinations(4, 0).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(binomial(15, 7), 6435);
    }

    #[test]
    fn bitvec_bytes_roundtrip() {
        let mut v = BitVec::zeros(15);
        v.set(0, true);
        v.set(9, true);
        v.set(14, true);
        let bytes = v.to_le_bytes();
        assert_eq!(bytes, vec![0b0000_0001, 0b0100_0010]);
        assert_eq!(BitVec::from_le_bytes(15, &bytes), Some(v));
        assert_eq!(BitVec::from_le_bytes(15, &[0, 0x80]), None);
        assert_eq!(BitVec::from_le_bytes(15, &[0]), None);
    }
}
