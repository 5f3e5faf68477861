//! Real Schläfli sixes: detection by transversals, the double six, spindles
//! and Segre's kind.

pub mod clebsch;

pub use clebsch::{clebsch_lines, clebsch_schlafli_sixes, ClebschSix};

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::invariants::{is_homogeneous, Pentagram};
use crate::joins::{comb_signature, dihedral_canonical, Perm};
use crate::planar::Kind;
use crate::projgeom::{
    common_transversals, meets, pencil_order, points_order_on_line, transversal_of_five, PluckerLine, TransversalSet,
};

#[derive(Clone, Debug)]
pub enum SchlafliWitness {
    /// The transversal `L′ᵢ` of the six minus line `i`, for each `i`.
    Transversals(Vec<PluckerLine>),
    /// The six minus this line has no common transversal.
    NoTransversal { omitted: usize },
    /// Lines meeting all six.
    CommonTransversals(Vec<PluckerLine>),
    /// All six lie in one ruling of a quadric.
    CommonQuadric,
}

#[derive(Clone, Debug)]
pub struct SchlafliCheck {
    pub is_schlafli: bool,
    pub witness: SchlafliWitness,
}

impl SchlafliCheck {
    fn fail(witness: SchlafliWitness) -> SchlafliCheck {
        SchlafliCheck {
            is_schlafli: false,
            witness,
        }
    }

    pub fn transversals(&self) -> Option<&[PluckerLine]> {
        match &self.witness {
            SchlafliWitness::Transversals(v) if self.is_schlafli => Some(v),
            _ => None,
        }
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

/// Every five of the lines have a common transversal and the six have none.
///
/// The six are tested first: lines sharing two transversals would make
/// every five-line check ambiguous, and those two lines are the witness.
pub fn is_schlafli_six(c: &Config) -> Result<SchlafliCheck> {
    require_six(c)?;
    let lines = c.plucker_lines();
    let refs: Vec<&PluckerLine> = lines.iter().collect();
    match common_transversals(&refs)? {
        TransversalSet::Infinite => return Ok(SchlafliCheck::fail(SchlafliWitness::CommonQuadric)),
        TransversalSet::Finite(v) if !v.is_empty() => {
            return Ok(SchlafliCheck::fail(SchlafliWitness::CommonTransversals(v)))
        }
        TransversalSet::Finite(_) => {}
    }
    let mut found = Vec::with_capacity(6);
    for omitted in 0..6 {
        let five: Vec<&PluckerLine> = (0..6).filter(|&k| k != omitted).map(|k| &lines[k]).collect();
        match transversal_of_five(five.try_into().expect("five lines"))? {
            Some(t) => found.push(t),
            None => return Ok(SchlafliCheck::fail(SchlafliWitness::NoTransversal { omitted })),
        }
    }
    Ok(SchlafliCheck {
        is_schlafli: true,
        witness: SchlafliWitness::Transversals(found),
    })
}

fn transversals_of(c: &Config) -> Result<Vec<PluckerLine>> {
    let check = is_schlafli_six(c)?;
    check.transversals().map(<[_]>::to_vec).ok_or(Error::NotSchlafli)
}

/// The six lines `L′ᵢ`, each the transversal of `c` minus line `i`.
pub fn complementary_six(c: &Config) -> Result<Config> {
    Config::from_plucker(&transversals_of(c)?).map_err(|_| Error::NotSchlafli)
}

#[derive(Clone, Debug)]
pub struct DoubleSix {
    pub top: Config,
    pub bottom: Config,
}

impl DoubleSix {
    /// Checks that `bottom[i]` meets `top[j]` exactly when `i ≠ j`.
    pub fn validate(top: Config, bottom: Config) -> Result<DoubleSix> {
        require_six(&top)?;
        require_six(&bottom)?;
        for i in 0..6 {
            for j in 0..6 {
                if meets(bottom.line(i).plucker(), top.line(j).plucker()) != (i != j) {
                    return Err(Error::IncidenceViolation(i, j));
                }
            }
        }
        Ok(DoubleSix { top, bottom })
    }

    /// `(i, j)` pairs with `bottom[i]` meeting `top[j]`.
    pub fn meeting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in 0..6 {
                if meets(self.bottom.line(i).plucker(), self.top.line(j).plucker()) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn swapped(&self) -> Result<DoubleSix> {
        DoubleSix::validate(self.bottom.clone(), self.top.clone())
    }
}

pub fn double_six(c: &Config) -> Result<DoubleSix> {
    DoubleSix::validate(c.clone(), complementary_six(c)?)
}

/// A spindle's permutation, up to cyclic shifts and reversals on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SpindlePermutation {
    pub sigma: Perm,
}

impl SpindlePermutation {
    pub fn pentagram(&self) -> Option<Pentagram> {
        Pentagram::from_abs_signature(comb_signature(&self.sigma))
    }
}

/// Numbers the lines by their planes through the axis, then lists those
/// numbers in the order the lines cross the axis.
pub fn spindle_to_join(lines: &[PluckerLine], axis: &PluckerLine) -> Result<SpindlePermutation> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if meets(&lines[i], &lines[j]) {
                return Err(Error::DegenerateInput(format!("lines {i} and {j} are not skew")));
            }
        }
    }
    let planes = pencil_order(axis, lines)?;
    let mut label = vec![0u8; lines.len()];
    for (pos, &k) in planes.items().iter().enumerate() {
        label[k] = pos as u8 + 1;
    }
    let points = lines
        .iter()
        .enumerate()
        .map(|(i, l)| l.intersection(axis).ok_or(Error::NotIncident(i)))
        .collect::<Result<Vec<_>>>()?;
    let along = points_order_on_line(axis, &points)?;
    let sigma = Perm::new(along.items().iter().map(|&k| label[k]).collect())?;
    Ok(SpindlePermutation {
        sigma: dihedral_canonical(&sigma),
    })
}

fn pentagram_with(c: &Config, transversals: &[PluckerLine], role: usize) -> Result<Pentagram> {
    let five: Vec<PluckerLine> = (0..6)
        .filter(|&k| k != role)
        .map(|k| c.line(k).plucker().clone())
        .collect();
    let token = spindle_to_join(&five, &transversals[role])?;
    token
        .pentagram()
        .ok_or_else(|| Error::DegenerateInput("spindle permutation has no 5-line signature".into()))
}

/// The five lines other than `role` form a spindle about `L′_role`.
pub fn segre_pentagram_spatial(c: &Config, role: usize) -> Result<Pentagram> {
    pentagram_with(c, &transversals_of(c)?, role)
}

/// Pentagrams for all six roles.
pub fn segre_pentagrams(c: &Config) -> Result<Vec<Pentagram>> {
    let t = transversals_of(c)?;
    (0..6).map(|r| pentagram_with(c, &t, r)).collect()
}

pub fn schlafli_kind(c: &Config) -> Result<Kind> {
    let all = segre_pentagrams(c)?;
    if all.iter().any(|&p| p != all[0]) || !is_homogeneous(c)? {
        return Err(Error::InconsistentPentagrams(
            all.iter().map(|p| p.abs_signature() as u8).collect(),
        ));
    }
    Ok(Kind::from_pentagram(all[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::joins::{build_join, join_axes};

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn joins_are_not_schlafli() {
        let (lp, lq) = join_axes();
        // the identity join lies in one ruling of a quadric
        let check = is_schlafli_six(&build_join(&perm("123456"))).unwrap();
        assert!(matches!(check.witness, SchlafliWitness::CommonQuadric));
        let check = is_schlafli_six(&build_join(&perm("214365"))).unwrap();
        assert!(!check.is_schlafli);
        match check.witness {
            SchlafliWitness::CommonTransversals(v) => {
                assert_eq!(v.len(), 2);
                assert!(v.iter().any(|l| l.same_line(lp.plucker())));
                assert!(v.iter().any(|l| l.same_line(lq.plucker())));
            }
            w => panic!("unexpected witness {w:?}"),
        }
        assert_eq!(
            complementary_six(&build_join(&perm("214365"))).unwrap_err(),
            Error::NotSchlafli
        );
    }

    #[test]
    fn joins_are_spindles() {
        let (lp, lq) = join_axes();
        for s in ["12345", "13524", "12354", "13425", "21453"] {
            let sigma = perm(s);
            let lines = build_join(&sigma).plucker_lines();
            let token = spindle_to_join(&lines, lp.plucker()).unwrap();
            assert_eq!(token.sigma, dihedral_canonical(&sigma), "{s}");
            assert_eq!(spindle_to_join(&lines, &lp.plucker().negated()).unwrap(), token);
            let other = spindle_to_join(&lines, lq.plucker()).unwrap();
            assert_eq!(other.sigma, dihedral_canonical(&sigma.inverse()));
        }
    }

    #[test]
    fn spindle_needs_incidence() {
        let lines = build_join(&perm("12345")).plucker_lines();
        let axis = lines[0].clone();
        assert!(spindle_to_join(&lines[1..], &axis).is_err());
    }
}
