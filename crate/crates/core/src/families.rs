//! Named graph families and the explicit asymmetrizing constructions.
//!
//! Labels are 0-based throughout. Where a construction is usually written
//! with vertices `v_1, v_2, ...`, vertex `v_k` here is `k - 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions;
use crate::edit::FlipSet;
use crate::graph::{EdgePair, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse {0:?}: {1}")]
    Parse(String, String),
    #[error("unknown witness {0:?}")]
    UnknownWitness(String),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters(msg.into())
}

/// A member of one of the named families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n-1}` on `n` vertices, center 0.
    Star(usize),
    /// Hub 0 joined to the cycle `1..n-1`; `n` vertices in total.
    Wheel(usize),
    /// `C_m(S)`: `i ~ j` iff `(i - j) mod m` is in `S` or `m - S`.
    Circulant {
        order: usize,
        connections: Vec<usize>,
    },
    /// `P_r × P_s`.
    Grid(usize, usize),
    /// `P_r × C_s`.
    PathCycleProduct(usize, usize),
    /// `C_r × C_s`.
    Torus(usize, usize),
    /// `K_s + t K_1`: clique on `0..s`, then `t` isolated vertices.
    Split {
        clique: usize,
        isolated: usize,
    },
    /// `C_l` with pendant paths `P_6, ..., P_{l+5}`, path `i` hanging off cycle vertex `i`.
    CycleWithPendantPaths(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        use FamilySpec::*;
        match *self {
            Path(n) | Complete(n) | Star(n) if n == 0 => Err(invalid("need at least one vertex")),
            Cycle(n) if n < 3 => Err(invalid(format!("cycle needs n >= 3, got {n}"))),
            Wheel(n) if n < 4 => Err(invalid(format!("wheel needs n >= 4, got {n}"))),
            Circulant {
                order,
                ref connections,
            } => {
                if order == 0 {
                    return Err(invalid("circulant order must be positive"));
                }
                match connections.iter().find(|&&d| d == 0 || 2 * d > order) {
                    Some(d) => Err(invalid(format!("connection {d} outside 1..={}", order / 2))),
                    None => Ok(()),
                }
            }
            Grid(r, s) if r == 0 || s == 0 => Err(invalid("grid sides must be positive")),
            PathCycleProduct(r, s) if r == 0 || s < 3 => Err(invalid("need r >= 1 and s >= 3")),
            Torus(r, s) if r < 3 || s < 3 => Err(invalid("torus sides must be >= 3")),
            Split { clique, isolated } if clique == 0 || isolated == 0 => {
                Err(invalid("split parameters must be positive"))
            }
            CycleWithPendantPaths(l) if l < 3 => Err(invalid("pendant cycle needs l >= 3")),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        use FamilySpec::*;
        Ok(match *self {
            Path(n) => path(n),
            Cycle(n) => cycle(n),
            Complete(n) => Graph::empty(n).complement(),
            Star(n) => Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("in range"),
            Wheel(n) => Graph::empty(1).join(&cycle(n - 1)),
            Circulant {
                order,
                ref connections,
            } => circulant(order, connections),
            Grid(r, s) => path(r).cartesian_product(&path(s)),
            PathCycleProduct(r, s) => path(r).cartesian_product(&cycle(s)),
            Torus(r, s) => cycle(r).cartesian_product(&cycle(s)),
            Split { clique, isolated } => Graph::empty(clique)
                .complement()
                .disjoint_union(&Graph::empty(isolated)),
            CycleWithPendantPaths(l) => {
                let (base, links) = constructions::pendant_cycle(l);
                crate::edit::apply_flips(&base, &links).expect("links join distinct components")
            }
        })
    }
}

pub(crate) fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("in range")
}

pub(crate) fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("in range")
}

fn circulant(m: usize, connections: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        for &d in connections {
            let j = (i + d) % m;
            if i != j {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(m, edges).expect("in range")
}

fn parse_num(text: &str, field: &str) -> Result<usize, FamilyError> {
    field
        .trim()
        .parse()
        .map_err(|_| FamilyError::Parse(text.into(), format!("bad number {field:?}")))
}

fn parse_pair(text: &str, field: &str, sep: char) -> Result<(usize, usize), FamilyError> {
    let (a, b) = field
        .split_once(sep)
        .ok_or_else(|| FamilyError::Parse(text.into(), format!("expected A{sep}B")))?;
    Ok((parse_num(text, a)?, parse_num(text, b)?))
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// `family:params`, e.g. `path:9`, `circulant:17:1,4`, `torus:6x7`, `split:8+3`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (name, rest) = text
            .split_once(':')
            .ok_or_else(|| FamilyError::Parse(text.into(), "expected family:params".into()))?;
        let spec = match name {
            "path" => FamilySpec::Path(parse_num(text, rest)?),
            "cycle" => FamilySpec::Cycle(parse_num(text, rest)?),
            "complete" => FamilySpec::Complete(parse_num(text, rest)?),
            "star" => FamilySpec::Star(parse_num(text, rest)?),
            "wheel" => FamilySpec::Wheel(parse_num(text, rest)?),
            "circulant" => {
                let (m, s) = rest.split_once(':').ok_or_else(|| {
                    FamilyError::Parse(text.into(), "expected circulant:m:d1,d2,...".into())
                })?;
                let connections = s
                    .split(',')
                    .map(|d| parse_num(text, d))
                    .collect::<Result<_, _>>()?;
                FamilySpec::Circulant {
                    order: parse_num(text, m)?,
                    connections,
                }
            }
            "grid" => {
                let (r, s) = parse_pair(text, rest, 'x')?;
                FamilySpec::Grid(r, s)
            }
            "pxc" => {
                let (r, s) = parse_pair(text, rest, 'x')?;
                FamilySpec::PathCycleProduct(r, s)
            }
            "torus" => {
                let (r, s) = parse_pair(text, rest, 'x')?;
                FamilySpec::Torus(r, s)
            }
            "split" => {
                let (s, t) = parse_pair(text, rest, '+')?;
                FamilySpec::Split {
                    clique: s,
                    isolated: t,
                }
            }
            "pendant-cycle" => FamilySpec::CycleWithPendantPaths(parse_num(text, rest)?),
            other => {
                return Err(FamilyError::Parse(
                    text.into(),
                    format!("unknown family {other:?}"),
                ))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Star(n) => write!(f, "star:{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            Circulant { order, connections } => {
                let c: Vec<String> = connections.iter().map(|d| d.to_string()).collect();
                write!(f, "circulant:{order}:{}", c.join(","))
            }
            Grid(r, s) => write!(f, "grid:{r}x{s}"),
            PathCycleProduct(r, s) => write!(f, "pxc:{r}x{s}"),
            Torus(r, s) => write!(f, "torus:{r}x{s}"),
            Split { clique, isolated } => write!(f, "split:{clique}+{isolated}"),
            CycleWithPendantPaths(l) => write!(f, "pendant-cycle:{l}"),
        }
    }
}

/// Which of `n^2 + 1` or `n^2 - 1` a circulant witness uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn order(self, n: usize) -> usize {
        match self {
            Sign::Plus => n * n + 1,
            Sign::Minus => n * n - 1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Catalog of explicit asymmetrizing constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessId {
    PathAddChord(usize),
    CycleRemoveAdd(usize),
    CycleTwoChords {
        n: usize,
        k: usize,
        m: usize,
        l: usize,
    },
    WheelTwoRemovals(usize),
    CirculantRemove2(usize, Sign),
    CirculantAdd2(usize, Sign),
    CirculantMixed(usize, Sign),
    GridCorner(usize, usize),
    PxcTwoRemovals(usize, usize),
    SplitConstruction(usize, usize),
}

fn e(u: usize, v: usize) -> EdgePair {
    EdgePair::new(u, v).expect("distinct endpoints")
}

/// Base graph and flip set for a cataloged construction.
pub fn paper_witness(id: WitnessId) -> Result<(FamilySpec, FlipSet), FamilyError> {
    use WitnessId::*;
    let need = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("{id}: {msg}")))
        }
    };
    Ok(match id {
        PathAddChord(n) => {
            need(n >= 6, "needs n >= 6")?;
            (FamilySpec::Path(n), FlipSet::new(vec![], vec![e(1, 3)]))
        }
        CycleRemoveAdd(n) => {
            need(n >= 6, "needs n >= 6")?;
            // dropping (n-1, 0) leaves the path 0..n-1
            (
                FamilySpec::Cycle(n),
                FlipSet::new(vec![e(0, n - 1)], vec![e(1, 3)]),
            )
        }
        CycleTwoChords { n, k, m, l } => {
            need(k > 2 && k < l, "needs 2 < k < l")?;
            need(m >= 3, "needs m >= 3")?;
            need(k + m + l == n + 4, "needs k + m + l = n + 4")?;
            // both chords leave vertex 0; the first closes 0..k-1
            (
                FamilySpec::Cycle(n),
                FlipSet::new(vec![], vec![e(0, k - 1), e(0, k + m - 3)]),
            )
        }
        WheelTwoRemovals(n) => {
            need(n >= 6, "needs n >= 6")?;
            // rim edge (1,2), then the spoke to rim vertex 1
            (
                FamilySpec::Wheel(n),
                FlipSet::new(vec![e(1, 2), e(0, 1)], vec![]),
            )
        }
        CirculantRemove2(n, sign) | CirculantAdd2(n, sign) | CirculantMixed(n, sign) => {
            need(n >= 4, "needs n >= 4")?;
            let base = FamilySpec::Circulant {
                order: sign.order(n),
                connections: vec![1, n],
            };
            let flips = match id {
                CirculantRemove2(..) => FlipSet::new(vec![e(1, 2), e(3, 3 + n)], vec![]),
                CirculantAdd2(..) => FlipSet::new(vec![], vec![e(0, 2), e(0, 3)]),
                _ => FlipSet::new(vec![e(3, 3 + n)], vec![e(0, 2)]),
            };
            (base, flips)
        }
        GridCorner(r, s) => {
            need(r >= 2 && s >= 2, "needs r, s >= 2")?;
            // (0,0) -- (1,0)
            (FamilySpec::Grid(r, s), FlipSet::new(vec![e(0, s)], vec![]))
        }
        PxcTwoRemovals(r, s) => {
            need(r >= 2 && s >= 3, "needs r >= 2 and s >= 3")?;
            // u = (0,0), v = (1,0) along the path, w = (0,1) along the cycle
            (
                FamilySpec::PathCycleProduct(r, s),
                FlipSet::new(vec![e(0, s), e(0, 1)], vec![]),
            )
        }
        SplitConstruction(s, t) => {
            need(s >= 8 && t >= 1, "needs s >= 8 and t >= 1")?;
            (
                FamilySpec::Split {
                    clique: s,
                    isolated: t,
                },
                constructions::split_flips(s, t),
            )
        }
    })
}

impl fmt::Display for WitnessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use WitnessId::*;
        match *self {
            PathAddChord(n) => write!(f, "path-add-chord:{n}"),
            CycleRemoveAdd(n) => write!(f, "cycle-remove-add:{n}"),
            CycleTwoChords { n, k, m, l } => write!(f, "cycle-two-chords:{n},{k},{m},{l}"),
            WheelTwoRemovals(n) => write!(f, "wheel-two-removals:{n}"),
            CirculantRemove2(n, s) => write!(f, "circulant-remove2:{n},{}", s.symbol()),
            CirculantAdd2(n, s) => write!(f, "circulant-add2:{n},{}", s.symbol()),
            CirculantMixed(n, s) => write!(f, "circulant-mixed:{n},{}", s.symbol()),
            GridCorner(r, s) => write!(f, "grid-corner:{r},{s}"),
            PxcTwoRemovals(r, s) => write!(f, "pxc-two-removals:{r},{s}"),
            SplitConstruction(s, t) => write!(f, "split-construction:{s},{t}"),
        }
    }
}

impl FromStr for WitnessId {
    type Err = FamilyError;

    /// `name:p1,p2,...`, with `+`/`-` as the last circulant parameter.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let fields: Vec<&str> = rest
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let nums = |count: usize| -> Result<Vec<usize>, FamilyError> {
            if fields.len() != count {
                return Err(FamilyError::Parse(
                    text.into(),
                    format!("expected {count} parameters"),
                ));
            }
            fields.iter().map(|f| parse_num(text, f)).collect()
        };
        let circ = || -> Result<(usize, Sign), FamilyError> {
            let [n, s] = fields.as_slice() else {
                return Err(FamilyError::Parse(
                    text.into(),
                    "expected n,+ or n,-".into(),
                ));
            };
            let sign = match *s {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                _ => {
                    return Err(FamilyError::Parse(
                        text.into(),
                        "sign must be + or -".into(),
                    ))
                }
            };
            Ok((parse_num(text, n)?, sign))
        };
        let id = match name {
            "path-add-chord" => WitnessId::PathAddChord(nums(1)?[0]),
            "cycle-remove-add" => WitnessId::CycleRemoveAdd(nums(1)?[0]),
            "cycle-two-chords" => {
                let v = nums(4)?;
                WitnessId::CycleTwoChords {
                    n: v[0],
                    k: v[1],
                    m: v[2],
                    l: v[3],
                }
            }
            "wheel-two-removals" => WitnessId::WheelTwoRemovals(nums(1)?[0]),
            "circulant-remove2" => {
                let (n, s) = circ()?;
                WitnessId::CirculantRemove2(n, s)
            }
            "circulant-add2" => {
                let (n, s) = circ()?;
                WitnessId::CirculantAdd2(n, s)
            }
            "circulant-mixed" => {
                let (n, s) = circ()?;
                WitnessId::CirculantMixed(n, s)
            }
            "grid-corner" => {
                let v = nums(2)?;
                WitnessId::GridCorner(v[0], v[1])
            }
            "pxc-two-removals" => {
                let v = nums(2)?;
                WitnessId::PxcTwoRemovals(v[0], v[1])
            }
            "split-construction" => {
                let v = nums(2)?;
                WitnessId::SplitConstruction(v[0], v[1])
            }
            _ => return Err(FamilyError::UnknownWitness(text.into())),
        };
        Ok(id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::are_isomorphic;

    #[test]
    fn circulant_17_1_4() {
        let g = FamilySpec::Circulant {
            order: 17,
            connections: vec![1, 4],
        }
        .generate()
        .unwrap();
        assert_eq!((g.n(), g.edge_count(), g.is_regular()), (17, 34, Some(4)));
    }

    #[test]
    fn wheel_seven() {
        let g = FamilySpec::Wheel(7).generate().unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degrees(), vec![6, 3, 3, 3, 3, 3, 3]);
        assert!(FamilySpec::Wheel(3).generate().is_err());
    }

    #[test]
    fn pendant_cycle_three() {
        let g = FamilySpec::CycleWithPendantPaths(3).generate().unwrap();
        assert_eq!((g.n(), g.edge_count()), (24, 24));
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn family_degrees() {
        assert_eq!(
            FamilySpec::Cycle(9).generate().unwrap().is_regular(),
            Some(2)
        );
        assert_eq!(
            FamilySpec::Torus(4, 6).generate().unwrap().is_regular(),
            Some(4)
        );
        let c = FamilySpec::Circulant {
            order: 12,
            connections: vec![1, 6],
        }
        .generate()
        .unwrap();
        assert_eq!(c.is_regular(), Some(3));
        let star = FamilySpec::Star(8).generate().unwrap();
        assert_eq!(star.degree(0).unwrap(), 7);
        let split = FamilySpec::Split {
            clique: 8,
            isolated: 3,
        }
        .generate()
        .unwrap();
        assert_eq!((split.n(), split.edge_count()), (11, 28));
        assert!(are_isomorphic(
            &FamilySpec::Grid(2, 2).generate().unwrap(),
            &cycle(4)
        ));
    }

    #[test]
    fn circulant_with_unit_step_is_a_cycle() {
        for m in 3..=12 {
            let c = FamilySpec::Circulant {
                order: m,
                connections: vec![1],
            }
            .generate()
            .unwrap();
            assert!(are_isomorphic(&c, &cycle(m)), "m = {m}");
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(FamilySpec::Cycle(2).generate().is_err());
        assert!(FamilySpec::Circulant {
            order: 10,
            connections: vec![6]
        }
        .generate()
        .is_err());
        assert!(FamilySpec::Circulant {
            order: 10,
            connections: vec![0]
        }
        .generate()
        .is_err());
        assert!(FamilySpec::Torus(2, 5).generate().is_err());
    }

    #[test]
    fn grammar_round_trip() {
        for text in [
            "path:9",
            "cycle:12",
            "complete:7",
            "star:8",
            "wheel:9",
            "circulant:17:1,4",
            "grid:3x4",
            "pxc:3x5",
            "torus:6x7",
            "split:8+3",
            "pendant-cycle:4",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            assert!(spec.generate().unwrap().check_invariants());
        }
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("grid:3".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn figure_two_witness() {
        let (base, flips) = paper_witness(WitnessId::CycleTwoChords {
            n: 6,
            k: 3,
            m: 3,
            l: 4,
        })
        .unwrap();
        assert_eq!(base, FamilySpec::Cycle(6));
        assert_eq!(flips, FlipSet::add(&[(0, 2), (0, 3)]));
        assert!(paper_witness(WitnessId::CycleTwoChords {
            n: 6,
            k: 4,
            m: 3,
            l: 3
        })
        .is_err());
        assert!(paper_witness(WitnessId::CycleTwoChords {
            n: 7,
            k: 3,
            m: 3,
            l: 4
        })
        .is_err());
    }

    #[test]
    fn circulant_and_grid_witnesses() {
        let (base, flips) = paper_witness(WitnessId::CirculantRemove2(4, Sign::Plus)).unwrap();
        assert_eq!(
            base,
            FamilySpec::Circulant {
                order: 17,
                connections: vec![1, 4]
            }
        );
        assert_eq!(flips, FlipSet::remove(&[(1, 2), (3, 7)]));
        let (base, flips) = paper_witness(WitnessId::GridCorner(3, 3)).unwrap();
        assert_eq!(base, FamilySpec::Grid(3, 3));
        assert_eq!(flips, FlipSet::remove(&[(0, 3)]));
    }

    #[test]
    fn witness_ids_parse() {
        for text in [
            "path-add-chord:9",
            "cycle-two-chords:6,3,3,4",
            "circulant-mixed:4,-",
            "split-construction:8,2",
        ] {
            let id: WitnessId = text.parse().unwrap();
            assert_eq!(id.to_string(), text);
        }
        assert!(matches!(
            "nope:1".parse::<WitnessId>(),
            Err(FamilyError::UnknownWitness(_))
        ));
        assert!("circulant-add2:4,*".parse::<WitnessId>().is_err());
    }

    #[test]
    fn every_witness_applies_cleanly() {
        let ids = [
            WitnessId::PathAddChord(6),
            WitnessId::CycleRemoveAdd(8),
            WitnessId::WheelTwoRemovals(7),
            WitnessId::CirculantAdd2(4, Sign::Minus),
            WitnessId::CirculantMixed(5, Sign::Plus),
            WitnessId::PxcTwoRemovals(2, 4),
            WitnessId::SplitConstruction(9, 3),
        ];
        for id in ids {
            let (base, flips) = paper_witness(id).unwrap();
            let g = base.generate().unwrap();
            assert!(crate::edit::apply_flips(&g, &flips).is_ok(), "{id}");
        }
    }
}
