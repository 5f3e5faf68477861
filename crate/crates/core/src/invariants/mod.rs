//! Isotopy invariants of a [`Config`]: signatures, spectra, the chirality
//! graph, homogeneity and the two triple chains.

pub mod classify;

pub use classify::{
    class_table, identify_class, identify_key, resolve_for_kind, theorem_target, Branch, ClassId, ClassTable,
    CoarseClass, Identification, InvariantKey, TableRow,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Sign;

/// `n₊ − n₋` over all triples.
pub fn signature(c: &Config) -> i32 {
    let n = c.len();
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                total += c.triple(i, j, k).to_i32();
            }
        }
    }
    total
}

/// Image under the orientation-reversing map `x₃ ↦ −x₃`.
pub fn mirror_config(c: &Config) -> Config {
    Config::new(c.lines().iter().map(|l| l.mirrored()).collect()).expect("mirror preserves skewness")
}

/// Sorted signatures of the subconfigurations obtained by deleting one line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SignatureSpectrum {
    pub values: Vec<i32>,
}

impl SignatureSpectrum {
    pub fn from_values(mut values: Vec<i32>) -> SignatureSpectrum {
        values.sort();
        SignatureSpectrum { values }
    }

    pub fn negated(&self) -> SignatureSpectrum {
        SignatureSpectrum::from_values(self.values.iter().map(|v| -v).collect())
    }

    /// Absolute values, sorted.
    pub fn coarse(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.values.iter().map(|x| x.abs()).collect();
        v.sort();
        v
    }
}

impl fmt::Display for SignatureSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", multiset_string(&self.values))
    }
}

/// `{10×6}` style rendering of a sorted multiset.
pub fn multiset_string(values: &[i32]) -> String {
    let mut groups: Vec<(i32, usize)> = Vec::new();
    for &v in values {
        match groups.last_mut() {
            Some((w, k)) if *w == v => *k += 1,
            _ => groups.push((v, 1)),
        }
    }
    groups
        .iter()
        .map(|&(v, k)| if k == 1 { v.to_string() } else { format!("{v}×{k}") })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Signature of `c` minus line `i`, for every `i`, in line order.
pub fn deletion_signatures(c: &Config) -> Vec<i32> {
    let total = signature(c);
    let n = c.len();
    (0..n)
        .map(|i| {
            let mut through_i = 0;
            for j in 0..n {
                for k in j + 1..n {
                    if j != i && k != i {
                        through_i += c.triple(i, j, k).to_i32();
                    }
                }
            }
            total - through_i
        })
        .collect()
}

pub fn signature_spectrum(c: &Config) -> SignatureSpectrum {
    SignatureSpectrum::from_values(deletion_signatures(c))
}

/// Coarse class of a 5-line configuration, named by its absolute signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pentagram {
    P10,
    P4,
    P2,
    P0,
}

impl Pentagram {
    pub const ALL: [Pentagram; 4] = [Pentagram::P10, Pentagram::P4, Pentagram::P2, Pentagram::P0];

    pub fn from_abs_signature(s: i32) -> Option<Pentagram> {
        match s.abs() {
            10 => Some(Pentagram::P10),
            4 => Some(Pentagram::P4),
            2 => Some(Pentagram::P2),
            0 => Some(Pentagram::P0),
            _ => None,
        }
    }

    pub fn abs_signature(self) -> i32 {
        match self {
            Pentagram::P10 => 10,
            Pentagram::P4 => 4,
            Pentagram::P2 => 2,
            Pentagram::P0 => 0,
        }
    }
}

impl fmt::Display for Pentagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn require_six(c: &Config) -> Result<()> {
    if c.len() == 6 {
        Ok(())
    } else {
        Err(Error::WrongSize {
            expected: 6,
            got: c.len(),
        })
    }
}

/// Pentagrams of the six 5-line subconfigurations, sorted.
pub fn pentagram_spectrum(c: &Config) -> Result<Vec<Pentagram>> {
    require_six(c)?;
    let mut out: Vec<Pentagram> = deletion_signatures(c)
        .into_iter()
        .map(|s| Pentagram::from_abs_signature(s).expect("5-line signatures lie in {0, ±2, ±4, ±10}"))
        .collect();
    out.sort();
    Ok(out)
}

/// Edge `{i, j}` (1-based) when the 4 lines left after removing `i`, `j`
/// form a chiral configuration, detected by `|signature| = 4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiralityGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(u8, u8)>,
}

impl ChiralityGraph {
    pub fn degree(&self, v: u8) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.vertices as u8).map(|v| self.degree(v)).collect()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.iter().all(|&x| x == d[0])
    }
}

pub fn chirality_graph(c: &Config) -> ChiralityGraph {
    let n = c.len();
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if signature(&c.without(&[i, j])).abs() == 4 {
                edges.insert((i as u8 + 1, j as u8 + 1));
            }
        }
    }
    ChiralityGraph { vertices: n, edges }
}

/// All six 5-line subconfigurations share one coarse class.
pub fn is_homogeneous(c: &Config) -> Result<bool> {
    require_six(c)?;
    let coarse = signature_spectrum(c).coarse();
    Ok(coarse.iter().all(|&v| v == coarse[0]))
}

/// Product of the four triple linkings of each 4-subset is `+1`.
pub fn cocycle_check(c: &Config) -> bool {
    let n = c.len();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for e in d + 1..n {
                    let p = c.triple(a, b, d) * c.triple(a, b, e) * c.triple(a, d, e) * c.triple(b, d, e);
                    if p != Sign::Positive {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A `Z/2` 2-chain: a set of triangles on 1-based vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TripleChain {
    pub triples: BTreeSet<[u8; 3]>,
}

impl TripleChain {
    /// Vertex order within each triple is irrelevant.
    pub fn from_triples(list: &[[u8; 3]]) -> TripleChain {
        TripleChain {
            triples: list
                .iter()
                .map(|t| {
                    let mut t = *t;
                    t.sort();
                    t
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Number of triangles on each edge.
    pub fn edge_counts(&self) -> BTreeMap<(u8, u8), usize> {
        let mut counts = BTreeMap::new();
        for &[a, b, c] in &self.triples {
            for e in [(a, b), (a, c), (b, c)] {
                *counts.entry(e).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Edges of the mod-2 boundary.
    pub fn boundary(&self) -> BTreeSet<(u8, u8)> {
        self.edge_counts()
            .into_iter()
            .filter(|&(_, k)| k % 2 == 1)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn is_cycle(&self) -> bool {
        self.boundary().is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<u8> {
        self.triples.iter().flatten().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleChains {
    pub positive: TripleChain,
    pub negative: TripleChain,
    pub positive_is_cycle: bool,
    pub negative_is_cycle: bool,
}

pub fn triple_chains(c: &Config) -> TripleChains {
    let n = c.len();
    let mut positive = TripleChain::default();
    let mut negative = TripleChain::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let t = [i as u8 + 1, j as u8 + 1, k as u8 + 1];
                match c.triple(i, j, k) {
                    Sign::Positive => positive.triples.insert(t),
                    _ => negative.triples.insert(t),
                };
            }
        }
    }
    TripleChains {
        positive_is_cycle: positive.is_cycle(),
        negative_is_cycle: negative.is_cycle(),
        positive,
        negative,
    }
}

/// Whether the chain triangulates the real projective plane on the six
/// vertices: 10 triangles, all 15 edges each on exactly two triangles,
/// connected, Euler characteristic 1.
pub fn rp2_check(ch: &TripleChain) -> bool {
    if ch.len() != 10 {
        return false;
    }
    let counts = ch.edge_counts();
    let vertices = ch.vertices();
    if vertices.len() != 6 || counts.len() != 15 || counts.values().any(|&k| k != 2) {
        return false;
    }
    let euler = vertices.len() as i64 - counts.len() as i64 + ch.len() as i64;
    euler == 1 && is_connected(ch)
}

/// Triangles connected through shared edges.
fn is_connected(ch: &TripleChain) -> bool {
    let tris: Vec<[u8; 3]> = ch.triples.iter().copied().collect();
    let shares_edge = |a: &[u8; 3], b: &[u8; 3]| a.iter().filter(|v| b.contains(v)).count() == 2;
    let mut seen = vec![false; tris.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for u in 0..tris.len() {
            if !seen[u] && shares_edge(&tris[t], &tris[u]) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainsReport {
    pub positive: TripleChain,
    pub negative: TripleChain,
    pub cycles: bool,
}

/// Flat invariant report of a 6-line configuration.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub signature: i32,
    pub spectrum: SignatureSpectrum,
    pub coarse_spectrum: Vec<i32>,
    pub pentagrams: Vec<Pentagram>,
    pub chirality_edges: Vec<(u8, u8)>,
    pub homogeneous: bool,
    pub chains: ChainsReport,
    pub class: Identification,
}

pub fn report(c: &Config) -> Result<InvariantReport> {
    require_six(c)?;
    let spectrum = signature_spectrum(c);
    let chains = triple_chains(c);
    Ok(InvariantReport {
        signature: signature(c),
        coarse_spectrum: spectrum.coarse(),
        pentagrams: pentagram_spectrum(c)?,
        chirality_edges: chirality_graph(c).edges.into_iter().collect(),
        homogeneous: is_homogeneous(c)?,
        chains: ChainsReport {
            cycles: chains.positive_is_cycle && chains.negative_is_cycle,
            positive: chains.positive,
            negative: chains.negative,
        },
        class: identify_class(c)?,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::joins::{build_join, Perm};

    fn join(s: &str) -> Config {
        build_join(&s.parse::<Perm>().unwrap())
    }

    #[test]
    fn signatures_of_joins() {
        assert_eq!(signature(&join("12345")), 10);
        assert_eq!(signature(&join("123456")), 20);
        assert_eq!(signature(&mirror_config(&join("12345"))), -10);
        assert_eq!(signature(&join("123")), 1);
        assert_eq!(signature(&join("321")), -1);
    }

    #[test]
    fn spectra() {
        assert_eq!(signature_spectrum(&join("123456")).values, vec![10; 6]);
        assert_eq!(signature_spectrum(&join("123654")).values, vec![-4, -4, -4, 4, 4, 4]);
        assert_eq!(signature_spectrum(&join("214365")).coarse(), vec![2; 6]);
        assert_eq!(pentagram_spectrum(&join("123654")).unwrap(), vec![Pentagram::P4; 6]);
        assert!(pentagram_spectrum(&join("12345")).is_err());
        assert_eq!(multiset_string(&[-4, -4, 2, 10, 10, 10]), "-4×2, 2, 10×3");
    }

    #[test]
    fn chirality_graphs() {
        assert_eq!(chirality_graph(&join("123456")).edges.len(), 15);
        let g = chirality_graph(&join("123654"));
        assert_eq!(g.degrees(), vec![2; 6]);
        // 4-line chirality separates J(1234) from J(1243)
        assert_eq!(signature(&join("1234")).abs(), 4);
        assert_eq!(signature(&join("1243")), 0);
    }

    #[test]
    fn homogeneity_and_chains() {
        assert!(is_homogeneous(&join("123456")).unwrap());
        assert!(!is_homogeneous(&join("123465")).unwrap());
        let ch = triple_chains(&join("123456"));
        assert_eq!(ch.positive.len(), 20);
        assert!(ch.positive_is_cycle && ch.negative_is_cycle);
        let ch = triple_chains(&join("123465"));
        assert!(!ch.positive_is_cycle && !ch.negative_is_cycle);
        assert!(cocycle_check(&join("1234")));
    }

    #[test]
    fn projective_plane_chains() {
        let a = TripleChain::from_triples(&[
            [1, 2, 3],
            [2, 3, 4],
            [3, 4, 5],
            [4, 5, 1],
            [5, 1, 2],
            [1, 3, 6],
            [3, 5, 6],
            [5, 2, 6],
            [2, 4, 6],
            [4, 1, 6],
        ]);
        let b = TripleChain::from_triples(&[
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
            [1, 2, 6],
            [2, 3, 6],
            [3, 4, 6],
            [4, 5, 6],
            [5, 1, 6],
        ]);
        assert!(rp2_check(&a));
        assert!(rp2_check(&b));
        assert!(a.triples.is_disjoint(&b.triples));
        let all = triple_chains(&join("123456")).positive;
        assert!(!rp2_check(&all));
        assert!(!rp2_check(&TripleChain::default()));
    }
}
