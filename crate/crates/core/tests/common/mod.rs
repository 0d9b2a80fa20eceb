//! Brute-force reference implementations on bitmask colorings, written
//! without the library's fast paths.
#![allow(dead_code)]

use homrec::Coloring;

/// Colorings on up to 11 vertices as `u64` masks, bit `y(y-1)/2 + x` for the
/// pair `x < y`.
pub struct Oracle {
    pub n: usize,
    pub p: usize,
    triples: Vec<[usize; 3]>,
}

pub fn pair(x: usize, y: usize) -> usize {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    y * (y - 1) / 2 + x
}

impl Oracle {
    pub fn new(n: usize) -> Self {
        assert!(n * (n - 1) / 2 <= 64 && n * (n - 1) * (n - 2) / 6 <= 128);
        let mut triples = Vec::new();
        for z in 0..n {
            for y in 0..z {
                for x in 0..y {
                    triples.push([pair(x, y), pair(x, z), pair(y, z)]);
                }
            }
        }
        Self {
            n,
            p: n * (n - 1) / 2,
            triples,
        }
    }

    pub fn full(&self) -> u64 {
        if self.p == 64 {
            u64::MAX
        } else {
            (1 << self.p) - 1
        }
    }

    pub fn color(&self, phi: u64, x: usize, y: usize) -> u64 {
        (phi >> pair(x, y)) & 1
    }

    /// Bit `t` set iff triple `t` (colex) is homogeneous.
    pub fn hom(&self, phi: u64) -> u128 {
        let mut out = 0u128;
        for (t, &[a, b, c]) in self.triples.iter().enumerate() {
            let s = ((phi >> a) & 1) + ((phi >> b) & 1) + ((phi >> c) & 1);
            if s == 0 || s == 3 {
                out |= 1 << t;
            }
        }
        out
    }

    /// Bits of homogeneous triples of color 1.
    pub fn hom1(&self, phi: u64) -> u128 {
        let mut out = 0u128;
        for (t, &[a, b, c]) in self.triples.iter().enumerate() {
            if (phi >> a) & (phi >> b) & (phi >> c) & 1 == 1 {
                out |= 1 << t;
            }
        }
        out
    }

    pub fn valid(&self, phi: u64, d: u64) -> bool {
        self.hom(phi) == self.hom(phi ^ d)
    }

    /// All non-trivial valid differences, ascending mask order.
    pub fn valid_differences(&self, phi: u64, max_size: u32) -> Vec<u64> {
        let h = self.hom(phi);
        (1..self.full())
            .filter(|d| d.count_ones() <= max_size && self.hom(phi ^ d) == h)
            .collect()
    }

    /// Smallest non-trivial valid difference size, `None` when there is none.
    pub fn r(&self, phi: u64) -> Option<usize> {
        let h = self.hom(phi);
        (1..self.full())
            .filter(|d| self.hom(phi ^ d) == h)
            .map(|d| d.count_ones() as usize)
            .min()
    }

    pub fn critical_pairs(&self, phi: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.n {
            for x in 0..y {
                if (0..self.n)
                    .filter(|&z| z != x && z != y)
                    .all(|z| self.color(phi, x, z) != self.color(phi, y, z))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, d: u64, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| u != v && self.color(d, u, v) == 1)
            .collect()
    }

    /// A triangle of `d` plus a fourth vertex joined to none of its corners.
    pub fn has_claw(&self, d: u64) -> bool {
        let e = |a, b| self.color(d, a, b) == 1;
        (0..self.n).any(|z| {
            (0..z).any(|y| {
                (0..y).any(|x| {
                    e(x, y)
                        && e(x, z)
                        && e(y, z)
                        && (0..self.n)
                            .any(|w| ![x, y, z].contains(&w) && !e(w, x) && !e(w, y) && !e(w, z))
                })
            })
        })
    }

    /// `(vertices, edges)` of every component of `d` with at least one edge.
    pub fn components(&self, d: u64) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] || self.neighbors(d, s).is_empty() {
                continue;
            }
            let mut stack = vec![s];
            let mut verts = Vec::new();
            seen[s] = true;
            while let Some(v) = stack.pop() {
                verts.push(v);
                for u in self.neighbors(d, v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            let deg: usize = verts.iter().map(|&v| self.neighbors(d, v).len()).sum();
            out.push((verts.len(), deg / 2));
        }
        out
    }

    pub fn max_degree(&self, d: u64) -> usize {
        (0..self.n)
            .map(|v| self.neighbors(d, v).len())
            .max()
            .unwrap_or(0)
    }
}

pub fn mask_of(c: &Coloring) -> u64 {
    c.to_bits()
        .iter()
        .enumerate()
        .fold(0, |m, (i, &b)| m | (b as u64) << i)
}

/// All maximal homogeneous sets (size at least 3) by subset enumeration.
pub fn brute_hom_sets(c: &Coloring) -> Vec<(Vec<usize>, u8)> {
    let n = c.n();
    assert!(n <= 16);
    let hom = |s: u32| -> Option<u8> {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let first = c.color(vs[0], vs[1]);
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| c.color(a, b) == first))
            .then_some(first)
    };
    let mut found: Vec<(u32, u8)> = Vec::new();
    for s in 0u32..1 << n {
        if s.count_ones() >= 3 {
            if let Some(col) = hom(s) {
                found.push((s, col));
            }
        }
    }
    let mut out: Vec<(Vec<usize>, u8)> = found
        .iter()
        .filter(|&&(s, col)| {
            !found
                .iter()
                .any(|&(t, c2)| c2 == col && t != s && t & s == s)
        })
        .map(|&(s, col)| ((0..n).filter(|&v| s >> v & 1 == 1).collect(), col))
        .collect();
    out.sort();
    out
}

/// The 6-vertex `α` drawing, thick pairs read as 1.
pub const ALPHA_DRAWN_THICK: [(usize, usize); 10] = [
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

/// `α` from its defining recurrence: the `0`-row starts `s, s` on `1, 2`
/// and alternates after, and `{x, y}` for `1 ≤ x < y` has the opposite of
/// the `0`-row color at `x`.
pub fn alpha_reference(n: usize, seed: u8) -> Coloring {
    let mut zero_row = vec![0u8; n.max(3)];
    zero_row[1] = seed;
    zero_row[2] = seed;
    for m in 3..n {
        zero_row[m] = 1 - zero_row[m - 1];
    }
    Coloring::from_fn(n, |x, y| {
        if x == 0 {
            zero_row[y] == 1
        } else {
            zero_row[x] == 0
        }
    })
    .unwrap()
}
