//! Six points in the real projective plane: general position, the
//! inseparability graph, orders on conics and pencils, and Segre's kind.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower};
use crate::invariants::Pentagram;
use crate::joins::{comb_signature, Perm};
use crate::linalg;
use crate::projgeom::{cyclic_order_on_projective_line, CyclicOrder};

/// Segre's four kinds of real Schläfli sixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Icosahedral,
    Bipartite,
    Tripartite,
    Hexagonal,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Icosahedral, Kind::Bipartite, Kind::Tripartite, Kind::Hexagonal];

    pub fn from_pentagram(p: Pentagram) -> Kind {
        match p {
            Pentagram::P10 => Kind::Hexagonal,
            Pentagram::P4 => Kind::Bipartite,
            Pentagram::P2 => Kind::Tripartite,
            Pentagram::P0 => Kind::Icosahedral,
        }
    }

    pub fn pentagram(self) -> Pentagram {
        match self {
            Kind::Hexagonal => Pentagram::P10,
            Kind::Bipartite => Pentagram::P4,
            Kind::Tripartite => Pentagram::P2,
            Kind::Icosahedral => Pentagram::P0,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct PlanarPoint {
    coords: [FieldElement; 3],
}

fn common_tower<'a>(elems: impl IntoIterator<Item = &'a FieldElement>) -> FieldTower {
    elems.into_iter().fold(FieldTower::rationals(), |acc, e| {
        acc.common(e.tower()).expect("incompatible towers")
    })
}

impl PlanarPoint {
    pub fn new(coords: [FieldElement; 3]) -> Result<PlanarPoint> {
        if coords.iter().all(FieldElement::is_zero) {
            return Err(Error::DegenerateInput("zero point".into()));
        }
        let tower = common_tower(coords.iter());
        Ok(PlanarPoint {
            coords: coords.map(|c| c.lift(&tower)),
        })
    }

    pub fn from_ints(c: [i64; 3]) -> PlanarPoint {
        PlanarPoint::new(c.map(FieldElement::from_int)).expect("nonzero point")
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn same_point(&self, other: &PlanarPoint) -> bool {
        linalg::proportional(&self.coords, &other.coords)
    }
}

impl fmt::Display for PlanarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "{x} : {y} : {z}")
    }
}

/// Six labeled points; general position is checked separately.
#[derive(Clone, Debug)]
pub struct SixPoints {
    points: Vec<PlanarPoint>,
}

impl SixPoints {
    pub fn new(points: Vec<PlanarPoint>) -> Result<SixPoints> {
        if points.len() != 6 {
            return Err(Error::WrongSize {
                expected: 6,
                got: points.len(),
            });
        }
        Ok(SixPoints { points })
    }

    pub fn points(&self) -> &[PlanarPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &PlanarPoint {
        &self.points[i]
    }

    /// Relabel: the new point `k` is the old point `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> SixPoints {
        SixPoints {
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// 0-based indices of three collinear points.
    Collinear([usize; 3]),
    Coconic,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Collinear([a, b, c]) => write!(f, "points {a}, {b}, {c} are collinear"),
            Violation::Coconic => write!(f, "the six points lie on a conic"),
        }
    }
}

fn det3(a: &PlanarPoint, b: &PlanarPoint, c: &PlanarPoint) -> FieldElement {
    linalg::det(vec![a.coords.to_vec(), b.coords.to_vec(), c.coords.to_vec()])
}

fn monomials(p: &PlanarPoint) -> Vec<FieldElement> {
    let [x, y, z] = &p.coords;
    vec![x * x, x * y, y * y, x * z, y * z, z * z]
}

fn first_collinear(points: &[PlanarPoint]) -> Option<[usize; 3]> {
    let n = points.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if det3(&points[a], &points[b], &points[c]).is_zero() {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn general_position_check(s: &SixPoints) -> std::result::Result<(), Violation> {
    if let Some(t) = first_collinear(&s.points) {
        return Err(Violation::Collinear(t));
    }
    if linalg::det(s.points.iter().map(monomials).collect()).is_zero() {
        return Err(Violation::Coconic);
    }
    Ok(())
}

fn require_general(s: &SixPoints) -> Result<()> {
    general_position_check(s).map_err(|v| Error::DegenerateInput(v.to_string()))
}

/// The line through two points, as a coefficient vector.
fn join_points(a: &PlanarPoint, b: &PlanarPoint) -> [FieldElement; 3] {
    linalg::cross3(&a.coords, &b.coords)
}

/// Edge `{i, j}` (1-based) when one of the two arcs between `pᵢ` and `pⱼ`
/// misses all six lines through pairs of the remaining points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InseparabilityGraph {
    pub edges: BTreeSet<(u8, u8)>,
}

impl InseparabilityGraph {
    pub fn degrees(&self) -> Vec<usize> {
        (1..=6u8)
            .map(|v| self.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
            .collect()
    }
}

/// A cutting line `ℓ` meets `s·pᵢ + t·pⱼ` where `s·ℓ(pᵢ) + t·ℓ(pⱼ) = 0`, so
/// the sign of `s·t` is `−sign(ℓ(pᵢ)·ℓ(pⱼ))`. One arc is free exactly when
/// that sign is the same for all six cuts.
fn inseparable(s: &SixPoints, i: usize, j: usize) -> bool {
    let rest: Vec<usize> = (0..6).filter(|&k| k != i && k != j).collect();
    let mut signs = Vec::with_capacity(6);
    for a in 0..4 {
        for b in a + 1..4 {
            let l = join_points(&s.points[rest[a]], &s.points[rest[b]]);
            let li = linalg::dot(&l, &s.points[i].coords);
            let lj = linalg::dot(&l, &s.points[j].coords);
            signs.push((&li * &lj).sign());
        }
    }
    signs.iter().all(|&x| x == signs[0])
}

pub fn inseparability_graph(s: &SixPoints) -> Result<InseparabilityGraph> {
    require_general(s)?;
    let mut edges = BTreeSet::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if inseparable(s, i, j) {
                edges.insert((i as u8 + 1, j as u8 + 1));
            }
        }
    }
    Ok(InseparabilityGraph { edges })
}

/// `a x² + b xy + c y² + d xz + e yz + f z² = 0`.
#[derive(Clone, Debug)]
pub struct Conic {
    coeffs: [FieldElement; 6],
}

impl Conic {
    pub fn new(coeffs: [FieldElement; 6]) -> Result<Conic> {
        if coeffs.iter().all(FieldElement::is_zero) {
            return Err(Error::DegenerateConic);
        }
        let tower = common_tower(coeffs.iter());
        Ok(Conic {
            coeffs: coeffs.map(|c| c.lift(&tower)),
        })
    }

    pub fn coeffs(&self) -> &[FieldElement; 6] {
        &self.coeffs
    }

    pub fn eval(&self, p: &PlanarPoint) -> FieldElement {
        linalg::dot(&self.coeffs, &monomials(p))
    }

    /// The polar line of `p`; the tangent when `p` is on the conic.
    pub fn polar(&self, p: &PlanarPoint) -> [FieldElement; 3] {
        let [a, b, c, d, e, f] = &self.coeffs;
        let [x, y, z] = &p.coords;
        let two = FieldElement::from_int(2);
        // gradient / 1: (2ax + by + dz, bx + 2cy + ez, dx + ey + 2fz)
        [
            &(&(&(&two * a) * x) + &(b * y)) + &(d * z),
            &(&(b * x) + &(&(&two * c) * y)) + &(e * z),
            &(&(d * x) + &(e * y)) + &(&(&two * f) * z),
        ]
    }

    pub fn is_degenerate(&self) -> bool {
        let [a, b, c, d, e, f] = &self.coeffs;
        let two = FieldElement::from_int(2);
        let m = vec![
            vec![&two * a, b.clone(), d.clone()],
            vec![b.clone(), &two * c, e.clone()],
            vec![d.clone(), e.clone(), &two * f],
        ];
        linalg::det(m).is_zero()
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"];
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| format!("({c})*{m}"))
            .collect();
        write!(f, "{} = 0", terms.join(" + "))
    }
}

pub fn conic_through_five(pts: &[PlanarPoint; 5]) -> Result<Conic> {
    if first_collinear(pts).is_some() {
        return Err(Error::DegenerateConic);
    }
    let rows: Vec<Vec<FieldElement>> = pts.iter().map(monomials).collect();
    let k = linalg::kernel_by_minors(&rows);
    Conic::new(k.try_into().expect("six coefficients"))
}

/// Coordinates of lines through a common point in a basis of the pencil.
fn pencil_params(lines: &[[FieldElement; 3]]) -> Vec<(FieldElement, FieldElement)> {
    let base0 = &lines[0];
    let base1 = lines
        .iter()
        .find(|l| !linalg::proportional(*l, base0))
        .expect("pencil spans two lines");
    lines
        .iter()
        .map(|l| linalg::coords_in_basis(l, base0, base1).expect("line in pencil"))
        .collect()
}

/// Cyclic order of five points along a conic, read in the pencil of lines
/// through `pts[0]`, where the tangent at `pts[0]` stands for `pts[0]`.
pub fn cyclic_order_on_conic(conic: &Conic, pts: &[PlanarPoint; 5]) -> Result<CyclicOrder> {
    for (i, p) in pts.iter().enumerate() {
        if !conic.eval(p).is_zero() {
            return Err(Error::NotOnConic(i));
        }
    }
    if conic.is_degenerate() {
        return Err(Error::DegenerateConic);
    }
    let mut lines = vec![conic.polar(&pts[0])];
    lines.extend(pts[1..].iter().map(|p| join_points(&pts[0], p)));
    if lines.iter().any(|l| l.iter().all(FieldElement::is_zero)) {
        return Err(Error::DegenerateInput("repeated point on the conic".into()));
    }
    cyclic_order_on_projective_line(&pencil_params(&lines))
        .map_err(|(i, j)| Error::DegenerateInput(format!("points {i} and {j} coincide")))
}

/// Cyclic order of the lines `p_center pᵢ` in the pencil through `p_center`.
fn pencil_order_at(s: &SixPoints, center: usize, others: &[usize]) -> Result<CyclicOrder> {
    let lines: Vec<[FieldElement; 3]> = others
        .iter()
        .map(|&i| join_points(&s.points[center], &s.points[i]))
        .collect();
    cyclic_order_on_projective_line(&pencil_params(&lines))
        .map_err(|(i, j)| Error::DegenerateInput(format!("points {i}, {j} collinear with the center")))
}

/// The permutation read off with point `role` distinguished: the other five
/// are numbered along the pencil through it, then read along their conic.
pub fn segre_permutation(s: &SixPoints, role: usize) -> Result<Perm> {
    require_general(s)?;
    let others: Vec<usize> = (0..6).filter(|&k| k != role).collect();
    let pencil = pencil_order_at(s, role, &others)?;
    let mut label = [0u8; 5];
    for (pos, &k) in pencil.items().iter().enumerate() {
        label[k] = pos as u8 + 1;
    }
    let five: [PlanarPoint; 5] = std::array::from_fn(|k| s.points[others[k]].clone());
    let conic = conic_through_five(&five)?;
    let along = cyclic_order_on_conic(&conic, &five)?;
    Perm::new(along.items().iter().map(|&k| label[k]).collect())
}

pub fn segre_pentagram_planar_role(s: &SixPoints, role: usize) -> Result<Pentagram> {
    let sigma = segre_permutation(s, role)?;
    Ok(Pentagram::from_abs_signature(comb_signature(&sigma)).expect("5-line signature"))
}

/// The pentagram with the last point distinguished.
pub fn segre_pentagram_planar(s: &SixPoints) -> Result<Pentagram> {
    segre_pentagram_planar_role(s, 5)
}

/// Computes all six roles and requires them to agree.
pub fn planar_kind(s: &SixPoints) -> Result<Kind> {
    let all = (0..6)
        .map(|r| segre_pentagram_planar_role(s, r))
        .collect::<Result<Vec<Pentagram>>>()?;
    if all.iter().any(|&p| p != all[0]) {
        return Err(Error::InconsistentPentagrams(
            all.iter().map(|p| p.abs_signature() as u8).collect(),
        ));
    }
    Ok(Kind::from_pentagram(all[0]))
}

/// Sample configurations of each kind.
pub mod fixtures {
    use super::*;
    use crate::field::rational;

    fn affine(pts: &[(i64, i64)]) -> SixPoints {
        SixPoints::new(pts.iter().map(|&(x, y)| PlanarPoint::from_ints([x, y, 1])).collect()).unwrap()
    }

    /// An affine image of the regular hexagon with one vertex pushed out by 1/100.
    pub fn perturbed_hexagon() -> SixPoints {
        let mut pts: Vec<PlanarPoint> = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)]
            .iter()
            .map(|&(x, y)| PlanarPoint::from_ints([x, y, 1]))
            .collect();
        pts[0] = PlanarPoint::new([
            FieldElement::from_rational(rational(201, 100)),
            FieldElement::from_int(0),
            FieldElement::from_int(1),
        ])
        .unwrap();
        SixPoints::new(pts).unwrap()
    }

    /// The unperturbed hexagon: six points on `x² + 3y² = 4`.
    pub fn conic_hexagon() -> SixPoints {
        affine(&[(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)])
    }

    /// Vertices of an affine-regular pentagon and its center, using
    /// `c = cos 72°` and vertical scale `1 / sin 72°`, so every coordinate
    /// lies in `Q(√5)`; `root5` supplies the value used for `√5`.
    fn pentagon_with(root5: &FieldElement) -> SixPoints {
        let q = |n: i64, d: i64| FieldElement::from_rational(rational(n, d));
        let one = FieldElement::from_int(1);
        let c1 = &(root5 - &one) * &q(1, 4);
        let c2 = -&(&(root5 + &one) * &q(1, 4));
        let s2 = &(root5 - &one) * &q(1, 2);
        let pts = [
            [one.clone(), q(0, 1)],
            [c1.clone(), one.clone()],
            [c2.clone(), s2.clone()],
            [c2, -&s2],
            [c1, -&one],
            [q(0, 1), q(0, 1)],
        ];
        SixPoints::new(
            pts.into_iter()
                .map(|[x, y]| PlanarPoint::new([x, y, one.clone()]).unwrap())
                .collect(),
        )
        .unwrap()
    }

    pub fn pentagon_and_center() -> SixPoints {
        let tower = FieldTower::rationals();
        let root5 = tower.adjoin_sqrt(&rational(5, 1)).expect("depth 1").sqrt;
        pentagon_with(&root5)
    }

    /// The same with `√5` replaced by `559/250`.
    pub fn pentagon_and_center_rational() -> SixPoints {
        pentagon_with(&FieldElement::from_rational(rational(559, 250)))
    }

    /// A triangle inside a copy of itself six times larger, turned by about 25°.
    pub fn nested_triangles() -> SixPoints {
        let pts = [
            [0, 12, 1],
            [-10, -6, 1],
            [10, -6, 1],
            [-101, 218, 120],
            [-131, -193, 120],
            [232, -24, 120],
        ];
        SixPoints::new(pts.iter().map(|&c| PlanarPoint::from_ints(c)).collect()).unwrap()
    }

    pub fn bipartite_sample() -> SixPoints {
        affine(&[(-4, -1), (4, 4), (-1, 2), (4, 1), (1, 3), (0, 4)])
    }

    pub fn tripartite_sample() -> SixPoints {
        affine(&[(-4, 2), (4, -2), (4, 4), (-1, 2), (-4, 3), (1, 4)])
    }

    pub fn hexagonal_sample() -> SixPoints {
        affine(&[(-3, 2), (0, 4), (3, -4), (1, 2), (0, -4), (-2, -1)])
    }

    pub fn icosahedral_sample() -> SixPoints {
        affine(&[(3, 1), (1, 0), (-2, -2), (2, 3), (2, -3), (-2, 0)])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::field::rational;

    fn pt(x: i64, y: i64, z: i64) -> PlanarPoint {
        PlanarPoint::from_ints([x, y, z])
    }

    #[test]
    fn general_position() {
        let s = SixPoints::new(vec![
            pt(1, 0, 0),
            pt(0, 1, 0),
            pt(1, 1, 0),
            pt(0, 0, 1),
            pt(1, 2, 3),
            pt(2, 7, 1),
        ])
        .unwrap();
        assert_eq!(general_position_check(&s), Err(Violation::Collinear([0, 1, 2])));
        assert_eq!(general_position_check(&conic_hexagon()), Err(Violation::Coconic));
        assert_eq!(general_position_check(&perturbed_hexagon()), Ok(()));
        assert!(inseparability_graph(&conic_hexagon()).is_err());
    }

    #[test]
    fn conic_through_points() {
        let pts = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 3)];
        let c = conic_through_five(&pts).unwrap();
        assert!(pts.iter().all(|p| c.eval(p).is_zero()));
        // x² + 3y² = 4z²
        let h = conic_hexagon();
        let five: [PlanarPoint; 5] = std::array::from_fn(|i| h.point(i).clone());
        let c = conic_through_five(&five).unwrap();
        let expect = [1, 0, 3, 0, 0, -4].map(FieldElement::from_int);
        assert!(linalg::proportional(c.coeffs(), &expect));
        let bad = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 0, 1), pt(1, 2, 3)];
        assert_eq!(conic_through_five(&bad).unwrap_err(), Error::DegenerateConic);
    }

    /// Rational points of the unit circle at the tangent half-angle `t`.
    fn circle_point(t: (i64, i64)) -> PlanarPoint {
        let (n, d) = t;
        PlanarPoint::from_ints([d * d - n * n, 2 * n * d, d * d + n * n])
    }

    #[test]
    fn order_on_a_circle() {
        // half-angles of 0°, 30°, 90°, 180°, 270°: tan = 0, 2-√3 ≈ 27/100, 1, ∞, -1
        let pts = [
            circle_point((0, 1)),
            circle_point((27, 100)),
            circle_point((1, 1)),
            pt(-1, 0, 1),
            circle_point((-1, 1)),
        ];
        let conic = conic_through_five(&pts).unwrap();
        assert_eq!(cyclic_order_on_conic(&conic, &pts).unwrap().items(), &[0, 1, 2, 3, 4]);
        for shift in 1..5 {
            let rot: [PlanarPoint; 5] = std::array::from_fn(|i| pts[(i + shift) % 5].clone());
            let items: Vec<usize> = cyclic_order_on_conic(&conic, &rot)
                .unwrap()
                .items()
                .iter()
                .map(|&k| (k + shift) % 5)
                .collect();
            assert_eq!(CyclicOrder::from_sequence(&items).items(), &[0, 1, 2, 3, 4]);
        }
        let off = [
            pts[0].clone(),
            pts[1].clone(),
            pts[2].clone(),
            pts[3].clone(),
            pt(0, 0, 1),
        ];
        assert_eq!(cyclic_order_on_conic(&conic, &off).unwrap_err(), Error::NotOnConic(4));
    }

    #[test]
    fn kinds_of_fixtures() {
        assert_eq!(planar_kind(&perturbed_hexagon()).unwrap(), Kind::Hexagonal);
        assert_eq!(planar_kind(&pentagon_and_center()).unwrap(), Kind::Icosahedral);
        assert_eq!(planar_kind(&pentagon_and_center_rational()).unwrap(), Kind::Icosahedral);
        assert_eq!(planar_kind(&nested_triangles()).unwrap(), Kind::Bipartite);
        assert_eq!(planar_kind(&bipartite_sample()).unwrap(), Kind::Bipartite);
        assert_eq!(planar_kind(&tripartite_sample()).unwrap(), Kind::Tripartite);
        assert_eq!(planar_kind(&hexagonal_sample()).unwrap(), Kind::Hexagonal);
        assert_eq!(planar_kind(&icosahedral_sample()).unwrap(), Kind::Icosahedral);
    }

    #[test]
    fn hexagon_graph_is_a_six_cycle() {
        let g = inseparability_graph(&perturbed_hexagon()).unwrap();
        let expect: BTreeSet<(u8, u8)> = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)].into();
        assert_eq!(g.edges, expect);
    }

    #[test]
    fn relabeling_is_equivariant() {
        let s = tripartite_sample();
        let order = [3, 0, 5, 1, 4, 2];
        let g = inseparability_graph(&s).unwrap();
        let h = inseparability_graph(&s.permuted(&order)).unwrap();
        let relabeled: BTreeSet<(u8, u8)> = h
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (order[a as usize - 1] as u8 + 1, order[b as usize - 1] as u8 + 1);
                (x.min(y), x.max(y))
            })
            .collect();
        assert_eq!(relabeled, g.edges);
    }

    #[test]
    fn scaling_representatives() {
        let s = bipartite_sample();
        let k = FieldElement::from_rational(rational(-7, 3));
        let scaled = SixPoints::new(
            s.points()
                .iter()
                .map(|p| PlanarPoint::new(p.coords().clone().map(|c| &c * &k)).unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(
            inseparability_graph(&s).unwrap(),
            inseparability_graph(&scaled).unwrap()
        );
    }
}
