//! Ordered configurations of pairwise skew lines.

use crate::error::{Error, Result};
use crate::field::Sign;
use crate::projgeom::{OrientedLine, PluckerLine};

/// `n` pairwise skew oriented lines. The pairwise linking indices are
/// computed once on construction; every class invariant derived from them
/// is independent of the order and orientations of the lines.
#[derive(Clone, Debug)]
pub struct Config {
    lines: Vec<OrientedLine>,
    links: Vec<Vec<Sign>>,
}

impl Config {
    /// Fails with `NotSkew(i, j)` for the first meeting pair.
    pub fn new(lines: Vec<OrientedLine>) -> Result<Config> {
        let n = lines.len();
        let mut links = vec![vec![Sign::Zero; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let s = lines[i].plucker().pairing(lines[j].plucker()).sign();
                if s.is_zero() {
                    return Err(Error::NotSkew(i, j));
                }
                links[i][j] = s;
                links[j][i] = s;
            }
        }
        Ok(Config { lines, links })
    }

    pub fn from_plucker(lines: &[PluckerLine]) -> Result<Config> {
        Config::new(lines.iter().map(OrientedLine::from_plucker).collect())
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn lines(&self) -> &[OrientedLine] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &OrientedLine {
        &self.lines[i]
    }

    pub fn plucker_lines(&self) -> Vec<PluckerLine> {
        self.lines.iter().map(|l| l.plucker().clone()).collect()
    }

    /// Linking index of lines `i` and `j` (`i ≠ j`).
    pub fn link(&self, i: usize, j: usize) -> Sign {
        self.links[i][j]
    }

    /// Triple linking index of lines `i`, `j`, `k`.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> Sign {
        self.links[i][j] * self.links[i][k] * self.links[j][k]
    }

    /// The subconfiguration formed by the listed lines, in that order.
    pub fn subconfig(&self, keep: &[usize]) -> Config {
        Config {
            lines: keep.iter().map(|&i| self.lines[i].clone()).collect(),
            links: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.links[i][j]).collect())
                .collect(),
        }
    }

    /// Drops the listed lines.
    pub fn without(&self, drop: &[usize]) -> Config {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !drop.contains(i)).collect();
        self.subconfig(&keep)
    }
}
