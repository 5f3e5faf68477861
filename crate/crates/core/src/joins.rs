//! Permutations, join configurations `J(σ)` and their combinatorics.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::projgeom::{HomPoint3, OrientedLine};

pub const MIN_DEGREE: usize = 3;
pub const MAX_DEGREE: usize = 6;

/// A permutation `σ` of `{1..n}`, stored as `(σ(1), …, σ(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn new(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} outside {MIN_DEGREE}..={MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// Unchecked constructor for internal orbit computations.
    fn raw(images: Vec<u8>) -> Perm {
        Perm { images }
    }

    pub fn identity(n: usize) -> Perm {
        Perm::raw((1..=n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.images[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm::raw(other.images.iter().map(|&i| self.at(i as usize)).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Perm::raw(inv)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm::raw(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    /// Shift positions by `k`: `i ↦ σ(i + k)`.
    fn rotate_positions(&self, k: usize) -> Perm {
        let n = self.len();
        Perm::raw((0..n).map(|i| self.images[(i + k) % n]).collect())
    }

    /// Shift values by `k` modulo `n`.
    fn rotate_values(&self, k: usize) -> Perm {
        let n = self.len() as u8;
        Perm::raw(self.images.iter().map(|&v| (v - 1 + k as u8) % n + 1).collect())
    }

    fn reverse_positions(&self) -> Perm {
        Perm::raw(self.images.iter().rev().copied().collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.images {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `"123654"` or `"1 2 3 6 5 4"`.
    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        let parts: Vec<&str> = if s.contains(char::is_whitespace) {
            s.split_whitespace().collect()
        } else {
            s.split("").filter(|p| !p.is_empty()).collect()
        };
        let images = parts
            .iter()
            .map(|p| {
                p.parse::<u8>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry '{p}'")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Perm::new(images)
    }
}

/// The axes of every join: `L^p = span(e₁, e₂)` and `L^q` spanned by
/// `(e₄, e₃)` in that order, so that their linking index is −1.
pub fn join_axes() -> (OrientedLine, OrientedLine) {
    let lp = OrientedLine::new(HomPoint3::from_ints([1, 0, 0, 0]), HomPoint3::from_ints([0, 1, 0, 0]));
    let lq = OrientedLine::new(HomPoint3::from_ints([0, 0, 0, 1]), HomPoint3::from_ints([0, 0, 1, 0]));
    (lp.unwrap(), lq.unwrap())
}

/// `pᵢ = e₁ + i·e₂` on `L^p`.
pub fn join_point_p(i: usize) -> HomPoint3 {
    HomPoint3::from_ints([1, i as i64, 0, 0])
}

/// `q_j = e₄ + j·e₃` on `L^q`.
pub fn join_point_q(j: usize) -> HomPoint3 {
    HomPoint3::from_ints([0, 0, j as i64, 1])
}

/// `J(σ)`: line `Lᵢ` runs from `pᵢ` to `q_{σ(i)}`. With these charts
/// `lk(Lᵢ, Lⱼ) = +1` exactly when `σ(i) < σ(j)` for `i < j`.
pub fn build_join(sigma: &Perm) -> Config {
    let lines = (1..=sigma.len())
        .map(|i| OrientedLine::new(join_point_p(i), join_point_q(sigma.at(i) as usize)).expect("distinct axes"))
        .collect();
    Config::new(lines).expect("join lines are pairwise skew")
}

/// `(−1)^r` for the triple of values `(a, b, c)`, `r` = number of inversions.
pub fn triple_sign(a: u8, b: u8, c: u8) -> i32 {
    let r = (a > b) as u32 + (a > c) as u32 + (b > c) as u32;
    if r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn comb_signature(sigma: &Perm) -> i32 {
    let v = sigma.images();
    let n = v.len();
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                total += triple_sign(v[i], v[j], v[k]);
            }
        }
    }
    total
}

/// `ρ ∘ σ` with `ρ(i) = n + 1 − i`.
pub fn mirror_perm(sigma: &Perm) -> Perm {
    let n = sigma.len() as u8;
    Perm::raw(sigma.images().iter().map(|&v| n + 1 - v).collect())
}

/// The orbit of `σ` under two-sided cyclic shifts, sorted and deduplicated.
pub fn cyclic_orbit(sigma: &Perm) -> Vec<Perm> {
    let n = sigma.len();
    let mut orbit: Vec<Perm> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| sigma.rotate_positions(a).rotate_values(b))
        .collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct JoinClassToken {
    pub canonical: Perm,
    pub coarse_canonical: Perm,
}

pub fn canonical_coarse(sigma: &Perm) -> JoinClassToken {
    let canonical = cyclic_orbit(sigma)[0].clone();
    let mirrored = cyclic_orbit(&mirror_perm(sigma))[0].clone();
    let coarse_canonical = canonical.clone().min(mirrored);
    JoinClassToken {
        canonical,
        coarse_canonical,
    }
}

/// Minimum over cyclic shifts and reversals of both positions and values:
/// the token of a spindle, whose two cyclic orders carry no direction.
pub fn dihedral_canonical(sigma: &Perm) -> Perm {
    let n = sigma.len() as u8;
    let flip_values = |p: &Perm| Perm::raw(p.images().iter().map(|&v| n + 1 - v).collect());
    [sigma.clone(), sigma.reverse_positions()]
        .into_iter()
        .flat_map(|p| [flip_values(&p), p])
        .flat_map(|p| cyclic_orbit(&p))
        .min()
        .expect("nonempty orbit")
}

/// The broken line `σ(1), …, σ(n)` has no side of the `n`-gon: consecutive
/// values (positions read cyclically) are never adjacent vertices, and the
/// vertices `n` and `1` are adjacent.
pub fn is_irreducible_join(sigma: &Perm) -> bool {
    let n = sigma.len();
    let v = sigma.images();
    (0..n).all(|i| {
        let d = v[i].abs_diff(v[(i + 1) % n]) as usize;
        d != 1 && d != n - 1
    })
}

/// Closed broken line `σ(1) → σ(2) → … → σ(n) → σ(1)` on the `n`-gon.
pub fn diagram_edges(sigma: &Perm) -> Vec<(u8, u8)> {
    let v = sigma.images();
    (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Sign;
    use crate::projgeom::linking_index;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(p("123654"), p("1 2 3 6 5 4"));
        assert_eq!(p("213").images(), &[2, 1, 3]);
        assert!("1223".parse::<Perm>().is_err());
        assert!("12".parse::<Perm>().is_err());
        assert!("1234567".parse::<Perm>().is_err());
        assert!("12a".parse::<Perm>().is_err());
        assert_eq!(p("563412").to_string(), "563412");
    }

    #[test]
    fn group_operations() {
        let s = p("231");
        assert_eq!(s.compose(&s.inverse()), Perm::identity(3));
        assert_eq!(s.compose(&s), p("312"));
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(3)[1], p("132"));
    }

    #[test]
    fn builder_linking_contract_s4() {
        for sigma in Perm::all(4) {
            let c = build_join(&sigma);
            for i in 0..4 {
                for j in i + 1..4 {
                    let lk = linking_index(c.line(i), c.line(j)).unwrap();
                    let up = sigma.images()[i] < sigma.images()[j];
                    assert_eq!(lk == Sign::Positive, up, "{sigma:?} {i} {j}");
                    assert_eq!(c.link(i, j), lk);
                }
            }
        }
        let (lp, lq) = join_axes();
        assert_eq!(linking_index(&lp, &lq).unwrap(), Sign::Negative);
    }

    #[test]
    fn signatures() {
        assert_eq!(comb_signature(&p("12345")), 10);
        assert_eq!(comb_signature(&p("12354")), 4);
        assert_eq!(comb_signature(&p("13425")), 2);
        assert_eq!(comb_signature(&p("13524")), 0);
        assert_eq!(comb_signature(&p("214365")), -4);
        assert_eq!(comb_signature(&p("123456")), 20);
    }

    #[test]
    fn mirrors() {
        assert_eq!(mirror_perm(&p("123456")), p("654321"));
        assert_eq!(mirror_perm(&p("214365")), p("563412"));
        assert_eq!(
            canonical_coarse(&p("654123")).coarse_canonical,
            canonical_coarse(&p("123654")).coarse_canonical
        );
        for s in Perm::all(5) {
            assert_eq!(comb_signature(&mirror_perm(&s)), -comb_signature(&s));
        }
    }

    #[test]
    fn canonical_tokens() {
        assert_eq!(canonical_coarse(&p("234561")).canonical, p("123456"));
        assert_eq!(canonical_coarse(&p("12345")), canonical_coarse(&p("23451")));
        assert_eq!(
            canonical_coarse(&p("563412")).coarse_canonical,
            canonical_coarse(&p("214365")).coarse_canonical
        );
        let t = canonical_coarse(&p("153624"));
        assert_eq!(canonical_coarse(&t.canonical), t);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_join(&p("135264")));
        assert!(!is_irreducible_join(&p("123456")));
        assert!(!is_irreducible_join(&p("123654")));
        // 6 → 1 is a side of the hexagon
        assert!(!is_irreducible_join(&p("135246")));
    }

    #[test]
    fn dihedral_tokens() {
        assert_eq!(dihedral_canonical(&p("54321")), p("12345"));
        assert_eq!(dihedral_canonical(&p("42531")), dihedral_canonical(&p("13524")));
        let t = dihedral_canonical(&p("13425"));
        assert_eq!(dihedral_canonical(&t.inverse().inverse()), t);
    }

    #[test]
    fn diagram() {
        assert_eq!(diagram_edges(&p("132")), vec![(1, 3), (3, 2), (2, 1)]);
    }
}
