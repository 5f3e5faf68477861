//! The 27 lines of the Clebsch diagonal cubic and its Schläfli sixes.
//!
//! The surface is `Σ xᵢ = Σ xᵢ³ = 0` in projective 4-space. Points are
//! carried to 3-space by dropping `x₄`, which is recovered as `−(x₀+…+x₃)`,
//! so the cubic becomes `Σ xᵢ³ − (Σ xᵢ)³`.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::config::Config;
use crate::field::{rational, FieldElement, FieldTower};
use crate::joins::Perm;
use crate::projgeom::{line_through, meets, HomPoint3, PluckerLine};

/// `Σ xᵢ³ − (Σ xᵢ)³` on 3-space coordinates.
pub fn clebsch_cubic(x: &[FieldElement; 4]) -> FieldElement {
    let cube = |y: &FieldElement| &(y * y) * y;
    let sum = x.iter().skip(1).fold(x[0].clone(), |acc, y| &acc + y);
    let cubes = x.iter().skip(1).fold(cube(&x[0]), |acc, y| &acc + &cube(y));
    &cubes - &cube(&sum)
}

/// Drops `x₄` from a point of the hyperplane `Σ xᵢ = 0`.
fn to_space(v: &[FieldElement; 5]) -> HomPoint3 {
    HomPoint3::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]).expect("nonzero point")
}

fn unit_difference(a: usize, b: usize) -> [FieldElement; 5] {
    std::array::from_fn(|k| FieldElement::from_int((k == a) as i64 - (k == b) as i64))
}

/// A binary cubic vanishing at four points of a line vanishes on it.
fn lies_on_cubic(line: &PluckerLine) -> bool {
    let (u, v) = line.points();
    clebsch_cubic(v.coords()).is_zero()
        && (0..3i64).all(|t| {
            let t = FieldElement::from_int(t);
            let x: [FieldElement; 4] = std::array::from_fn(|i| &u.coords()[i] + &(&t * &v.coords()[i]));
            clebsch_cubic(&x).is_zero()
        })
}

fn build_lines() -> Vec<PluckerLine> {
    let mut lines: Vec<PluckerLine> = Vec::with_capacity(27);
    let mut push = |l: PluckerLine| {
        assert!(lies_on_cubic(&l), "line {l} is not on the cubic");
        if !lines.iter().any(|m| m.same_line(&l)) {
            lines.push(l);
        }
    };

    // x_a + x_b = x_c + x_d = x_e = 0
    for e in 0..5 {
        let rest: Vec<usize> = (0..5).filter(|&k| k != e).collect();
        for partner in 1..4 {
            let (a, b) = (rest[0], rest[partner]);
            let cd: Vec<usize> = rest[1..].iter().copied().filter(|&k| k != b).collect();
            let u = to_space(&unit_difference(a, b));
            let v = to_space(&unit_difference(cd[0], cd[1]));
            push(line_through(&u, &v).expect("independent points"));
        }
    }

    // orbit of the line through (1, 0, −1, ψ, −ψ) and (0, 1, ψ, −1, −ψ),
    // for both roots ψ of ψ² + ψ − 1
    let root5 = FieldTower::rationals()
        .adjoin_sqrt(&rational(5, 1))
        .expect("depth 1")
        .sqrt;
    let half = FieldElement::from_rational(rational(1, 2));
    let one = FieldElement::from_int(1);
    let zero = FieldElement::from_int(0);
    for psi in [&(&root5 - &one) * &half, -&(&(&root5 + &one) * &half)] {
        let p = [one.clone(), zero.clone(), -&one, psi.clone(), -&psi];
        let q = [zero.clone(), one.clone(), psi.clone(), -&one, -&psi];
        for pi in Perm::all(5) {
            let move_coords = |x: &[FieldElement; 5]| -> [FieldElement; 5] {
                let mut y: [FieldElement; 5] = std::array::from_fn(|_| zero.clone());
                for (k, &target) in pi.images().iter().enumerate() {
                    y[target as usize - 1] = x[k].clone();
                }
                y
            };
            push(line_through(&to_space(&move_coords(&p)), &to_space(&move_coords(&q))).expect("independent points"));
        }
    }
    assert_eq!(lines.len(), 27, "the cubic carries 27 lines");
    lines
}

/// The 27 lines: the 15 rational ones first, then 12 over `Q(√5)`.
pub fn clebsch_lines() -> Vec<PluckerLine> {
    static LINES: OnceLock<Vec<PluckerLine>> = OnceLock::new();
    LINES.get_or_init(build_lines).clone()
}

/// A Schläfli six among the 27 lines.
#[derive(Clone, Debug)]
pub struct ClebschSix {
    /// Positions in [`clebsch_lines`], increasing.
    pub indices: [usize; 6],
    pub config: Config,
}

/// All 6-cliques of the skew graph, by index order.
fn skew_sixes(skew: &[Vec<bool>]) -> Vec<[usize; 6]> {
    fn extend(skew: &[Vec<bool>], chosen: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
        if chosen.len() == 6 {
            out.push(chosen.clone().try_into().unwrap());
            return;
        }
        let start = chosen.last().map_or(0, |&l| l + 1);
        for k in start..skew.len() {
            if chosen.iter().all(|&c| skew[c][k]) {
                chosen.push(k);
                extend(skew, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(skew, &mut Vec::new(), &mut out);
    out
}

/// Pairwise skew sextuples that pass [`super::is_schlafli_six`].
pub fn clebsch_schlafli_sixes() -> Vec<ClebschSix> {
    let lines = clebsch_lines();
    let n = lines.len();
    let skew: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && !meets(&lines[i], &lines[j])).collect())
        .collect();
    skew_sixes(&skew)
        .into_par_iter()
        .filter_map(|indices| {
            let config = Config::from_plucker(&indices.map(|k| lines[k].clone())).ok()?;
            let check = super::is_schlafli_six(&config).ok()?;
            check.is_schlafli.then_some(ClebschSix { indices, config })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_seven_lines() {
        let lines = clebsch_lines();
        assert_eq!(lines.len(), 27);
        for (i, l) in lines.iter().enumerate() {
            let k = lines.iter().enumerate().filter(|&(j, m)| j != i && meets(l, m)).count();
            assert_eq!(k, 10, "line {i}");
        }
        let is_rational = |l: &PluckerLine| {
            let lead = l.coords().iter().find(|c| !c.is_zero()).unwrap().inverse().unwrap();
            l.coords().iter().all(|c| (c * &lead).as_rational().is_some())
        };
        let rational = lines.iter().filter(|l| is_rational(l)).count();
        assert_eq!(rational, 15);
    }
}
