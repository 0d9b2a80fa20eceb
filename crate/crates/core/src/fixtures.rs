//! Named colorings: the standard worked examples and parameterized families.
//!
//! Vertices of the drawn fixtures are numbered in the order the labels are
//! listed in each builder's doc comment. Pairs that the drawings leave out are colored 0.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Coloring, EdgeSet};
use crate::error::{Error, Result};
use crate::srcheck::alpha_coloring_with_seed;
use crate::structure::{make_cycle_pair, make_path_pair};

/// Even/odd partition coloring: a pair is 1 iff both ends have the same parity.
pub fn partition(n: usize) -> Coloring {
    Coloring::from_fn(n.max(2), |x, y| (x + y) % 2 == 0).expect("n >= 2")
}

/// Six vertices `y, z, a, b, c, d` with 1-pairs `yc, ya, zd, zb`; `{y, z}` is
/// a critical pair. Pairs inside `{a, b, c, d}` and `{y, z}` itself are 0.
pub fn fig_critical_pair() -> Coloring {
    let (y, z, a, b, c, d) = (0, 1, 2, 3, 4, 5);
    Coloring::from_ones(6, [(y, c), (y, a), (z, d), (z, b)]).expect("static fixture")
}

/// Six vertices `a, b, c, d, x1, x2`. The cycle `a b c d` is critical and so
/// is the pair `{x1, x2}`, which is 0.
pub fn fig_critical_cycle() -> Coloring {
    let (a, b, c, d, x1, x2) = (0, 1, 2, 3, 4, 5);
    Coloring::from_ones(
        6,
        [(a, b), (b, d), (d, c), (c, x1), (x1, a), (d, x2), (x2, b)],
    )
    .expect("static fixture")
}

/// The pair drawn with [`fig_critical_cycle`]: `ψ` flips the four cycle pairs.
pub fn fig_critical_cycle_pair() -> (Coloring, Coloring) {
    let phi = fig_critical_cycle();
    let z = EdgeSet::from_pairs(6, [(0, 1), (1, 2), (2, 3), (0, 3)]).expect("static fixture");
    let psi = phi.flipped(&z).expect("same n");
    (phi, psi)
}

/// Truncation to `{0..n-1}` (`4 ≤ n ≤ 6`) of the coloring without critical
/// pairs whose cycle `0 1 2 3` is critical in the alternate orientation.
pub fn fig_no_critical_pair(n: usize) -> Result<Coloring> {
    if !(4..=6).contains(&n) {
        return Err(Error::InvalidLength(format!(
            "truncation size must be 4..=6, got {n}"
        )));
    }
    let ones = [
        (0, 3),
        (1, 3),
        (1, 2),
        (0, 4),
        (4, 5),
        (2, 5),
        (2, 4),
        (0, 5),
    ];
    Coloring::from_ones(n, ones.into_iter().filter(|&(x, y)| x < n && y < n))
}

/// Five vertices `a..e`: `φ` has 1-pairs `ab, bc, ca, cd, be` and `ψ` differs
/// from it on `ae, ed, da, cd, be`. Both have homogeneous triples `abc` and
/// `ade` only.
pub fn fig_homsum() -> (Coloring, Coloring) {
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    let phi = Coloring::from_ones(5, [(a, b), (b, c), (c, a), (c, d), (b, e)]).expect("static");
    let diff = EdgeSet::from_pairs(5, [(a, e), (e, d), (d, a), (c, d), (b, e)]).expect("static");
    let psi = phi.flipped(&diff).expect("same n");
    (phi, psi)
}

/// Eight vertices `a, b, c, d, a1, b1, c1, d1` with two critical cycles,
/// `a b c d` and `a1 b1 c1 d1`.
pub fn fig_two_cycles() -> Coloring {
    let (a, b, c, d, a1, b1, c1, d1) = (0, 1, 2, 3, 4, 5, 6, 7);
    Coloring::from_ones(
        8,
        [
            (a, b),
            (b, d),
            (d, c),
            (b1, a1),
            (a1, c1),
            (c1, d1),
            (c, d1),
            (d1, a),
            (a, b1),
            (b1, c),
            (b, a1),
            (a1, d),
            (d, c1),
            (c1, b),
        ],
    )
    .expect("static fixture")
}

/// Reproducible random coloring: each pair, in colex order, is 1 with
/// probability `density`, drawn from ChaCha8 seeded with `seed`.
pub fn random(n: usize, density: f64, seed: u64) -> Result<Coloring> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Parse(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: Vec<bool> = (0..crate::pair_count(n))
        .map(|_| rng.gen_bool(density))
        .collect();
    Coloring::from_bits(n, &bits)
}

/// A fixture selector as written on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum FixtureId {
    Partition(usize),
    FigCriticalPair,
    FigCriticalCycle,
    FigNoCriticalPair(usize),
    FigHomsum,
    FigTwoCycles,
    Alpha { n: usize, seed: u8 },
    PathPair { m: usize, c: u8, phase: u8 },
    CyclePair { m: usize, c: u8, phase: u8 },
    Random { n: usize, density: f64, seed: u64 },
}

/// A generated fixture: a single coloring or an H-equivalent pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Single(Coloring),
    Pair(Coloring, Coloring),
}

impl Fixture {
    /// The first (or only) coloring.
    pub fn primary(&self) -> &Coloring {
        match self {
            Fixture::Single(c) | Fixture::Pair(c, _) => c,
        }
    }
}

impl FixtureId {
    pub fn build(&self) -> Result<Fixture> {
        Ok(match *self {
            FixtureId::Partition(n) => {
                if n < 2 {
                    return Err(Error::TooSmall {
                        what: "partition",
                        min: 2,
                        got: n,
                    });
                }
                Fixture::Single(partition(n))
            }
            FixtureId::FigCriticalPair => Fixture::Single(fig_critical_pair()),
            FixtureId::FigCriticalCycle => {
                let (p, q) = fig_critical_cycle_pair();
                Fixture::Pair(p, q)
            }
            FixtureId::FigNoCriticalPair(n) => Fixture::Single(fig_no_critical_pair(n)?),
            FixtureId::FigHomsum => {
                let (p, q) = fig_homsum();
                Fixture::Pair(p, q)
            }
            FixtureId::FigTwoCycles => Fixture::Single(fig_two_cycles()),
            FixtureId::Alpha { n, seed } => Fixture::Single(alpha_coloring_with_seed(n, seed)?),
            FixtureId::PathPair { m, c, phase } => {
                let (p, q) = make_path_pair(m, c, phase)?;
                Fixture::Pair(p, q)
            }
            FixtureId::CyclePair { m, c, phase } => {
                let (p, q) = make_cycle_pair(m, c, phase)?;
                Fixture::Pair(p, q)
            }
            FixtureId::Random { n, density, seed } => Fixture::Single(random(n, density, seed)?),
        })
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::Partition(n) => write!(f, "partition({n})"),
            FixtureId::FigCriticalPair => write!(f, "fig-critical-pair"),
            FixtureId::FigCriticalCycle => write!(f, "fig-critical-cycle"),
            FixtureId::FigNoCriticalPair(n) => write!(f, "fig-no-critical-pair({n})"),
            FixtureId::FigHomsum => write!(f, "fig-homsum"),
            FixtureId::FigTwoCycles => write!(f, "fig-two-cycles"),
            FixtureId::Alpha { n, seed } => write!(f, "alpha({n},{seed})"),
            FixtureId::PathPair { m, c, phase } => write!(f, "path-pair({m},{c},{phase})"),
            FixtureId::CyclePair { m, c, phase } => write!(f, "cycle-pair({m},{c},{phase})"),
            FixtureId::Random { n, density, seed } => write!(f, "random({n},{density},{seed})"),
        }
    }
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what}: {s:?}")))
}

fn parse_bit(s: &str, what: &str) -> Result<u8> {
    match parse_num::<u8>(s, what)? {
        b @ (0 | 1) => Ok(b),
        other => Err(Error::Parse(format!("{what} must be 0 or 1, got {other}"))),
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    /// Accepts `name` or `name(arg,...)`, e.g. `partition(6)`,
    /// `alpha(12)`, `alpha(12,0)`, `random(6,0.5,42)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args): (&str, Vec<&str>) = match s.find('(') {
            Some(open) => {
                let inner = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
                let args = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner.split(',').collect()
                };
                (&s[..open], args)
            }
            None => (s, Vec::new()),
        };
        let arity = |k: &[usize]| -> Result<()> {
            if k.contains(&args.len()) {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "{name} takes {k:?} arguments, got {}",
                    args.len()
                )))
            }
        };
        Ok(match name.trim() {
            "partition" => {
                arity(&[1])?;
                FixtureId::Partition(parse_num(args[0], "n")?)
            }
            "fig-critical-pair" => {
                arity(&[0])?;
                FixtureId::FigCriticalPair
            }
            "fig-critical-cycle" => {
                arity(&[0])?;
                FixtureId::FigCriticalCycle
            }
            "fig-no-critical-pair" => {
                arity(&[0, 1])?;
                FixtureId::FigNoCriticalPair(match args.first() {
                    Some(a) => parse_num(a, "n")?,
                    None => 6,
                })
            }
            "fig-homsum" => {
                arity(&[0])?;
                FixtureId::FigHomsum
            }
            "fig-two-cycles" => {
                arity(&[0])?;
                FixtureId::FigTwoCycles
            }
            "alpha" => {
                arity(&[1, 2])?;
                FixtureId::Alpha {
                    n: parse_num(args[0], "n")?,
                    seed: match args.get(1) {
                        Some(a) => parse_bit(a, "seed")?,
                        None => 1,
                    },
                }
            }
            "path-pair" | "cycle-pair" => {
                arity(&[3])?;
                let m = parse_num(args[0], "m")?;
                let c = parse_bit(args[1], "c")?;
                let phase = parse_bit(args[2], "phase")?;
                if name == "path-pair" {
                    FixtureId::PathPair { m, c, phase }
                } else {
                    FixtureId::CyclePair { m, c, phase }
                }
            }
            "random" => {
                arity(&[3])?;
                FixtureId::Random {
                    n: parse_num(args[0], "n")?,
                    density: parse_num(args[1], "density")?,
                    seed: parse_num(args[2], "seed")?,
                }
            }
            other => return Err(Error::Parse(format!("unknown fixture {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in [
            "partition(6)",
            "fig-critical-pair",
            "fig-critical-cycle",
            "fig-no-critical-pair(6)",
            "fig-homsum",
            "fig-two-cycles",
            "alpha(12,1)",
            "path-pair(6,1,0)",
            "cycle-pair(8,0,1)",
            "random(6,0.5,42)",
        ] {
            let id: FixtureId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
            id.build().unwrap();
        }
        assert_eq!(
            "alpha(9)".parse::<FixtureId>().unwrap(),
            FixtureId::Alpha { n: 9, seed: 1 }
        );
        assert!("partition".parse::<FixtureId>().is_err());
        assert!("path-pair(6,2,0)".parse::<FixtureId>().is_err());
        assert!("nope".parse::<FixtureId>().is_err());
        assert!("random(6,0.5".parse::<FixtureId>().is_err());
        assert!("cycle-pair(7,0,0)"
            .parse::<FixtureId>()
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn random_is_reproducible() {
        assert_eq!(random(9, 0.5, 42).unwrap(), random(9, 0.5, 42).unwrap());
        assert_ne!(random(9, 0.5, 42).unwrap(), random(9, 0.5, 43).unwrap());
        assert_eq!(random(6, 0.0, 1).unwrap(), Coloring::zeros(6).unwrap());
        assert!(random(6, 1.5, 1).is_err());
    }

    #[test]
    fn figure_pairs_are_equivalent() {
        let (p, q) = fig_critical_cycle_pair();
        assert!(crate::h_equivalent(&p, &q).unwrap());
        let (p, q) = fig_homsum();
        assert!(crate::h_equivalent(&p, &q).unwrap());
    }
}
