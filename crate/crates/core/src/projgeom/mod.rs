//! Points, lines and planes of projective 3-space over a [`FieldTower`],
//! with the incidence, linking and ordering predicates built on them.
//!
//! Plücker coordinates are stored in the order `(p01, p02, p03, p12, p13, p23)`
//! with `pᵢⱼ = aᵢbⱼ − aⱼbᵢ` for spanning points `a`, `b`. The sign of the
//! vector carries an orientation: the symmetric pairing of two such vectors
//! equals `det[a₁, b₁, a₂, b₂]`.

mod transversal;

pub use transversal::{common_transversals, transversal_of_five, transversals_of_four, TransversalSet};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower, Sign};
use crate::linalg;

/// Index pairs of the Plücker coordinates.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn common_tower<'a>(elems: impl IntoIterator<Item = &'a FieldElement>) -> FieldTower {
    elems.into_iter().fold(FieldTower::rationals(), |acc, e| {
        acc.common(e.tower()).expect("incompatible towers")
    })
}

fn lift_all<const N: usize>(v: [FieldElement; N]) -> [FieldElement; N] {
    let tower = common_tower(v.iter());
    v.map(|x| x.lift(&tower))
}

/// A point of projective 3-space.
#[derive(Clone, Debug)]
pub struct HomPoint3 {
    coords: [FieldElement; 4],
}

impl HomPoint3 {
    pub fn new(coords: [FieldElement; 4]) -> Result<HomPoint3> {
        if coords.iter().all(FieldElement::is_zero) {
            return Err(Error::DegenerateInput("zero point".into()));
        }
        Ok(HomPoint3 {
            coords: lift_all(coords),
        })
    }

    pub fn from_ints(c: [i64; 4]) -> HomPoint3 {
        HomPoint3::new(c.map(FieldElement::from_int)).expect("nonzero integer point")
    }

    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.coords
    }

    pub fn tower(&self) -> &FieldTower {
        self.coords[0].tower()
    }

    /// Projective equality.
    pub fn same_point(&self, other: &HomPoint3) -> bool {
        linalg::proportional(&self.coords, &other.coords)
    }

    pub fn negated(&self) -> HomPoint3 {
        HomPoint3 {
            coords: self.coords.clone().map(|c| -c),
        }
    }

    pub fn scaled(&self, k: &FieldElement) -> HomPoint3 {
        assert!(!k.is_zero());
        HomPoint3 {
            coords: lift_all(self.coords.clone().map(|c| &c * k)),
        }
    }

    /// `s·self + t·other`, as a coordinate vector (possibly zero).
    fn combine(&self, s: &FieldElement, other: &HomPoint3, t: &FieldElement) -> [FieldElement; 4] {
        std::array::from_fn(|i| &(s * &self.coords[i]) + &(t * &other.coords[i]))
    }

    /// Image under the orientation-reversing map that negates the last coordinate.
    pub fn mirrored(&self) -> HomPoint3 {
        let mut coords = self.coords.clone();
        coords[3] = -coords[3].clone();
        HomPoint3 { coords }
    }
}

impl fmt::Display for HomPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = &self.coords;
        write!(f, "{x} : {y} : {z} : {w}")
    }
}

/// A plane `Σ cᵢxᵢ = 0`.
#[derive(Clone, Debug)]
pub struct ProjPlane {
    coeffs: [FieldElement; 4],
}

impl ProjPlane {
    pub fn new(coeffs: [FieldElement; 4]) -> Result<ProjPlane> {
        if coeffs.iter().all(FieldElement::is_zero) {
            return Err(Error::DegenerateInput("zero plane".into()));
        }
        Ok(ProjPlane {
            coeffs: lift_all(coeffs),
        })
    }

    pub fn coeffs(&self) -> &[FieldElement; 4] {
        &self.coeffs
    }

    pub fn eval(&self, x: &HomPoint3) -> FieldElement {
        linalg::dot(&self.coeffs, x.coords())
    }

    pub fn same_plane(&self, other: &ProjPlane) -> bool {
        linalg::proportional(&self.coeffs, &other.coeffs)
    }
}

/// A line given by its Plücker coordinates.
#[derive(Clone, Debug)]
pub struct PluckerLine {
    p: [FieldElement; 6],
}

fn wedge(a: &[FieldElement; 4], b: &[FieldElement; 4]) -> [FieldElement; 6] {
    PLUCKER_PAIRS.map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
}

fn pairing_raw(p: &[FieldElement; 6], q: &[FieldElement; 6]) -> FieldElement {
    let terms = [
        &p[0] * &q[5],
        -(&p[1] * &q[4]),
        &p[2] * &q[3],
        &p[3] * &q[2],
        -(&p[4] * &q[1]),
        &p[5] * &q[0],
    ];
    terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + t)
}

/// Coefficients of the plane spanned by the line and `x`: the linear form
/// `y ↦ det[a, b, x, y]`. Zero exactly when `x` lies on the line.
fn plane_coeffs_raw(p: &[FieldElement; 6], x: &[FieldElement; 4]) -> [FieldElement; 4] {
    let tower = common_tower(p.iter().chain(x.iter()));
    std::array::from_fn(|m| {
        let mut e: [FieldElement; 4] = std::array::from_fn(|_| FieldElement::zero(&tower));
        e[m] = FieldElement::one(&tower);
        pairing_raw(p, &wedge(x, &e))
    })
}

/// Primal Plücker coordinates of the intersection of two planes.
fn meet_of_planes_raw(a: &[FieldElement; 4], b: &[FieldElement; 4]) -> [FieldElement; 6] {
    let d = wedge(a, b);
    // dual (d01, d02, d03, d12, d13, d23) ↦ primal (d23, -d13, d12, d03, -d02, d01)
    [
        d[5].clone(),
        -d[4].clone(),
        d[3].clone(),
        d[2].clone(),
        -d[1].clone(),
        d[0].clone(),
    ]
}

impl PluckerLine {
    /// Validates the Plücker relation and non-vanishing.
    pub fn new(p: [FieldElement; 6]) -> Result<PluckerLine> {
        if p.iter().all(FieldElement::is_zero) {
            return Err(Error::DegenerateInput("zero Plücker vector".into()));
        }
        let p = lift_all(p);
        let rel = &(&(&p[0] * &p[5]) - &(&p[1] * &p[4])) + &(&p[2] * &p[3]);
        if !rel.is_zero() {
            return Err(Error::DegenerateInput("Plücker relation fails".into()));
        }
        Ok(PluckerLine { p })
    }

    pub fn coords(&self) -> &[FieldElement; 6] {
        &self.p
    }

    pub fn tower(&self) -> &FieldTower {
        self.p[0].tower()
    }

    /// Entry `(i, j)` of the antisymmetric 4×4 matrix.
    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        match i.cmp(&j) {
            Ordering::Equal => FieldElement::zero(self.tower()),
            Ordering::Less => {
                let k = PLUCKER_PAIRS.iter().position(|&q| q == (i, j)).unwrap();
                self.p[k].clone()
            }
            Ordering::Greater => -self.entry(j, i),
        }
    }

    /// The symmetric bilinear pairing; vanishes iff the lines meet.
    pub fn pairing(&self, other: &PluckerLine) -> FieldElement {
        pairing_raw(&self.p, &other.p)
    }

    pub fn same_line(&self, other: &PluckerLine) -> bool {
        linalg::proportional(&self.p, &other.p)
    }

    pub fn negated(&self) -> PluckerLine {
        PluckerLine {
            p: self.p.clone().map(|c| -c),
        }
    }

    /// Two spanning points `(a, b)` with `line_through(a, b)` a positive
    /// multiple of `self`.
    pub fn points(&self) -> (HomPoint3, HomPoint3) {
        let cols: Vec<[FieldElement; 4]> = (0..4).map(|k| std::array::from_fn(|i| self.entry(i, k))).collect();
        for k in 0..4 {
            for l in k + 1..4 {
                let scale = self.entry(k, l);
                if scale.is_zero() {
                    continue;
                }
                // wedge(col_k, col_l) = p_kl · p
                let (a, b) = (cols[k].clone(), cols[l].clone());
                let (a, b) = if scale.sign() == Sign::Positive { (a, b) } else { (b, a) };
                return (HomPoint3 { coords: a }, HomPoint3 { coords: b });
            }
        }
        unreachable!("nonzero Plücker vector has a nonzero entry")
    }

    pub fn contains_point(&self, x: &HomPoint3) -> bool {
        plane_coeffs_raw(&self.p, x.coords()).iter().all(FieldElement::is_zero)
    }

    /// The plane spanned by the line and a point off it.
    pub fn plane_through_point(&self, x: &HomPoint3) -> Option<ProjPlane> {
        ProjPlane::new(plane_coeffs_raw(&self.p, x.coords())).ok()
    }

    /// Intersection of two planes, `None` if they coincide.
    pub fn from_planes(a: &ProjPlane, b: &ProjPlane) -> Option<PluckerLine> {
        PluckerLine::new(meet_of_planes_raw(a.coeffs(), b.coeffs())).ok()
    }

    /// Intersection with a plane not containing the line.
    pub fn meet_plane(&self, plane: &ProjPlane) -> Option<HomPoint3> {
        let (u, v) = self.points();
        let pu = plane.eval(&u);
        let pv = plane.eval(&v);
        let x = u.combine(&pv, &v, &(-&pu));
        HomPoint3::new(x).ok()
    }

    /// Common point of two distinct meeting lines.
    pub fn intersection(&self, other: &PluckerLine) -> Option<HomPoint3> {
        if !meets(self, other) || self.same_line(other) {
            return None;
        }
        let tower = self.tower().common(other.tower())?;
        for k in 0..4 {
            let e = HomPoint3::new(std::array::from_fn(|i| {
                if i == k {
                    FieldElement::one(&tower)
                } else {
                    FieldElement::zero(&tower)
                }
            }))
            .ok()?;
            if let Some(plane) = other.plane_through_point(&e) {
                if let Some(x) = self.meet_plane(&plane) {
                    return Some(x);
                }
            }
        }
        None
    }

    pub fn mirrored(&self) -> PluckerLine {
        let (a, b) = self.points();
        line_through(&a.mirrored(), &b.mirrored()).expect("mirror preserves spans")
    }
}

impl fmt::Display for PluckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.p.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn line_through(a: &HomPoint3, b: &HomPoint3) -> Result<PluckerLine> {
    let tower = a.tower().common(b.tower()).expect("incompatible towers");
    let a = a.coords.clone().map(|x| x.lift(&tower));
    let b = b.coords.clone().map(|x| x.lift(&tower));
    let p = wedge(&a, &b);
    if p.iter().all(FieldElement::is_zero) {
        return Err(Error::DegenerateSpan);
    }
    Ok(PluckerLine { p })
}

pub fn meets(l1: &PluckerLine, l2: &PluckerLine) -> bool {
    l1.pairing(l2).is_zero()
}

/// A line with an orientation, fixed by an ordered pair of representative
/// coordinate vectors. Negating one representative reverses the
/// orientation; negating both preserves it.
#[derive(Clone, Debug)]
pub struct OrientedLine {
    a: HomPoint3,
    b: HomPoint3,
    plucker: PluckerLine,
}

impl OrientedLine {
    pub fn new(a: HomPoint3, b: HomPoint3) -> Result<OrientedLine> {
        let plucker = line_through(&a, &b)?;
        Ok(OrientedLine { a, b, plucker })
    }

    pub fn from_plucker(line: &PluckerLine) -> OrientedLine {
        let (a, b) = line.points();
        OrientedLine::new(a, b).expect("points span the line")
    }

    pub fn a(&self) -> &HomPoint3 {
        &self.a
    }

    pub fn b(&self) -> &HomPoint3 {
        &self.b
    }

    pub fn plucker(&self) -> &PluckerLine {
        &self.plucker
    }

    pub fn reversed(&self) -> OrientedLine {
        OrientedLine::new(self.b.clone(), self.a.clone()).unwrap()
    }

    pub fn mirrored(&self) -> OrientedLine {
        OrientedLine::new(self.a.mirrored(), self.b.mirrored()).unwrap()
    }
}

/// 4×4 determinant of the rows.
pub fn det4(rows: [&[FieldElement; 4]; 4]) -> FieldElement {
    linalg::det(rows.iter().map(|r| r.to_vec()).collect())
}

/// Sign of `det[a₁, b₁, a₂, b₂]`.
pub fn linking_index(l1: &OrientedLine, l2: &OrientedLine) -> Result<Sign> {
    let d = det4([l1.a.coords(), l1.b.coords(), l2.a.coords(), l2.b.coords()]);
    match d.sign() {
        Sign::Zero => Err(Error::NotSkew(0, 1)),
        s => Ok(s),
    }
}

/// Product of the three pairwise linking indices; independent of the
/// orientations and of the argument order.
pub fn triple_linking(l1: &PluckerLine, l2: &PluckerLine, l3: &PluckerLine) -> Result<Sign> {
    let lines = [l1, l2, l3];
    let mut acc = Sign::Positive;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        match lines[i].pairing(lines[j]).sign() {
            Sign::Zero => return Err(Error::NotSkew(i, j)),
            s => acc = acc * s,
        }
    }
    Ok(acc)
}

/// One cyclic traversal of items placed on a real projective line, stored
/// canonically: rotated to start at the smallest item, with the direction
/// giving the lexicographically smaller sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicOrder {
    items: Vec<usize>,
}

impl CyclicOrder {
    pub fn from_sequence(seq: &[usize]) -> CyclicOrder {
        if seq.is_empty() {
            return CyclicOrder { items: Vec::new() };
        }
        let n = seq.len();
        let start = (0..n).min_by_key(|&i| seq[i]).unwrap();
        let forward: Vec<usize> = (0..n).map(|k| seq[(start + k) % n]).collect();
        let backward: Vec<usize> = (0..n).map(|k| seq[(start + n - k) % n]).collect();
        CyclicOrder {
            items: forward.min(backward),
        }
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Cyclic order of points `(λ : μ)` of the real projective line.
/// Errors with the first pair of coinciding points.
pub fn cyclic_order_on_projective_line(
    params: &[(FieldElement, FieldElement)],
) -> std::result::Result<CyclicOrder, (usize, usize)> {
    // normalize to μ ≥ 0; μ = 0 is the point at infinity
    let norm: Vec<(FieldElement, FieldElement)> = params
        .iter()
        .map(|(l, m)| {
            if m.sign() == Sign::Negative {
                (-l, -m)
            } else {
                (l.clone(), m.clone())
            }
        })
        .collect();
    for i in 0..norm.len() {
        for j in i + 1..norm.len() {
            let (li, mi) = &norm[i];
            let (lj, mj) = &norm[j];
            if (&(li * mj) - &(lj * mi)).is_zero() {
                return Err((i, j));
            }
        }
    }
    let mut idx: Vec<usize> = (0..norm.len()).collect();
    idx.sort_by(|&i, &j| {
        let (li, mi) = &norm[i];
        let (lj, mj) = &norm[j];
        match (mi.is_zero(), mj.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => match (&(li * mj) - &(lj * mi)).sign() {
                Sign::Negative => Ordering::Less,
                Sign::Zero => Ordering::Equal,
                Sign::Positive => Ordering::Greater,
            },
        }
    });
    Ok(CyclicOrder::from_sequence(&idx))
}

fn point_off(line: &PluckerLine, other: &PluckerLine) -> HomPoint3 {
    let (u, v) = other.points();
    if line.contains_point(&u) {
        v
    } else {
        u
    }
}

/// Coordinates of each plane through `axis` in a fixed basis of the pencil.
fn pencil_coordinates(axis: &PluckerLine, planes: &[ProjPlane]) -> Vec<(FieldElement, FieldElement)> {
    let tower = planes
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(axis.tower().clone(), |acc, e| acc.common(e.tower()).expect("towers"));
    let base0 = planes[0].clone();
    let base1 = (0..4)
        .filter_map(|k| {
            let e = HomPoint3::new(std::array::from_fn(|i| {
                if i == k {
                    FieldElement::one(&tower)
                } else {
                    FieldElement::zero(&tower)
                }
            }))
            .ok()?;
            axis.plane_through_point(&e)
        })
        .find(|p| !p.same_plane(&base0))
        .expect("pencil has two independent planes");
    planes
        .iter()
        .map(|p| linalg::coords_in_basis(p.coeffs(), base0.coeffs(), base1.coeffs()).expect("plane contains the axis"))
        .collect()
}

/// Cyclic order of the planes `span(axis, others[i])` in the pencil about `axis`.
pub fn pencil_order(axis: &PluckerLine, others: &[PluckerLine]) -> Result<CyclicOrder> {
    let mut planes = Vec::with_capacity(others.len());
    for (i, l) in others.iter().enumerate() {
        if !meets(axis, l) || axis.same_line(l) {
            return Err(Error::NotIncident(i));
        }
        let x = point_off(axis, l);
        planes.push(axis.plane_through_point(&x).ok_or(Error::NotIncident(i))?);
    }
    if planes.is_empty() {
        return Ok(CyclicOrder::from_sequence(&[]));
    }
    let coords = pencil_coordinates(axis, &planes);
    cyclic_order_on_projective_line(&coords)
        .map_err(|(i, j)| Error::DegenerateInput(format!("lines {i} and {j} span the same plane with the axis")))
}

/// Cyclic order of points along their common carrier line.
pub fn points_order_on_line(carrier: &PluckerLine, pts: &[HomPoint3]) -> Result<CyclicOrder> {
    let (u, v) = carrier.points();
    let mut coords = Vec::with_capacity(pts.len());
    for (i, x) in pts.iter().enumerate() {
        let c = linalg::coords_in_basis(x.coords(), u.coords(), v.coords()).ok_or(Error::NotOnLine(i))?;
        coords.push(c);
    }
    cyclic_order_on_projective_line(&coords).map_err(|(i, j)| Error::DuplicatePoint(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: [i64; 4]) -> HomPoint3 {
        HomPoint3::from_ints(c)
    }

    fn ints(v: &[i64]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement::from_int(x)).collect()
    }

    fn line(a: [i64; 4], b: [i64; 4]) -> PluckerLine {
        line_through(&pt(a), &pt(b)).unwrap()
    }

    #[test]
    fn line_through_examples() {
        assert_eq!(
            line([1, 0, 0, 0], [0, 1, 0, 0]).coords().to_vec(),
            ints(&[1, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            line([0, 0, 1, 0], [0, 0, 0, 1]).coords().to_vec(),
            ints(&[0, 0, 0, 0, 0, 1])
        );
        // minors of (1,1,0,0),(0,0,1,1)
        assert_eq!(
            line([1, 1, 0, 0], [0, 0, 1, 1]).coords().to_vec(),
            ints(&[0, 1, 1, 1, 1, 0])
        );
        assert_eq!(
            line_through(&pt([1, 2, 3, 4]), &pt([2, 4, 6, 8])).unwrap_err(),
            Error::DegenerateSpan
        );
    }

    #[test]
    fn meeting_predicates() {
        let x = line([1, 0, 0, 0], [0, 1, 0, 0]);
        let y = line([0, 0, 1, 0], [0, 0, 0, 1]);
        assert!(!meets(&x, &y));
        assert!(meets(&x, &x));
        let p = [1, 2, 3, 4];
        let l1 = line(p, [0, 1, 0, 2]);
        let l2 = line(p, [5, 0, 1, 1]);
        assert!(meets(&l1, &l2));
        assert!(l1.intersection(&l2).unwrap().same_point(&pt(p)));
    }

    #[test]
    fn linking_examples() {
        let e = |i: usize| {
            let mut c = [0; 4];
            c[i] = 1;
            pt(c)
        };
        let l12 = OrientedLine::new(e(0), e(1)).unwrap();
        let l34 = OrientedLine::new(e(2), e(3)).unwrap();
        let l43 = OrientedLine::new(e(3), e(2)).unwrap();
        assert_eq!(linking_index(&l12, &l34).unwrap(), Sign::Positive);
        assert_eq!(linking_index(&l12, &l43).unwrap(), Sign::Negative);
        let meeting = OrientedLine::new(e(0), e(2)).unwrap();
        assert!(linking_index(&l12, &meeting).is_err());
    }

    #[test]
    fn recovered_points_keep_orientation() {
        let l = line([1, 2, 0, -1], [3, 0, 1, 1]);
        let (a, b) = l.points();
        let back = line_through(&a, &b).unwrap();
        assert!(back.same_line(&l));
        let k = back.pairing(&line([0, 1, 1, 0], [1, 0, 0, 5]));
        let k0 = l.pairing(&line([0, 1, 1, 0], [1, 0, 0, 5]));
        assert_eq!(k.sign(), k0.sign());
    }

    #[test]
    fn plane_meet_round_trip() {
        let l = line([1, 2, 0, -1], [3, 0, 1, 1]);
        let p1 = l.plane_through_point(&pt([0, 0, 0, 1])).unwrap();
        let p2 = l.plane_through_point(&pt([0, 1, 0, 0])).unwrap();
        assert!(PluckerLine::from_planes(&p1, &p2).unwrap().same_line(&l));
        assert!(l.plane_through_point(&pt([4, 2, 1, 0])).is_none());
    }

    #[test]
    fn cyclic_order_canonical_form() {
        assert_eq!(CyclicOrder::from_sequence(&[2, 0, 1]).items(), &[0, 1, 2]);
        assert_eq!(CyclicOrder::from_sequence(&[1, 0, 2]).items(), &[0, 1, 2]);
        assert_eq!(CyclicOrder::from_sequence(&[3, 4, 1, 0, 2]).items(), &[0, 1, 4, 3, 2]);
    }

    #[test]
    fn pencil_parameters() {
        // axis x0 = x1 = 0; planes x0 = t·x1 for t = 0, 1, ∞
        let axis = line([0, 0, 1, 0], [0, 0, 0, 1]);
        let through = |t: [i64; 2]| line([t[0], t[1], 0, 0], [t[0], t[1], 1, 0]);
        let order = pencil_order(&axis, &[through([0, 1]), through([1, 1]), through([1, 0])]).unwrap();
        assert_eq!(order.items(), &[0, 1, 2]);
        let five: Vec<_> = (0..5).map(|t| through([t, 1])).collect();
        assert_eq!(pencil_order(&axis, &five).unwrap().items(), &[0, 1, 2, 3, 4]);
        let skew = line([1, 0, 0, 0], [0, 1, 0, 0]);
        assert_eq!(pencil_order(&axis, &[skew]).unwrap_err(), Error::NotIncident(0));
    }

    #[test]
    fn points_on_a_line() {
        let carrier = line([1, 0, 0, 0], [0, 1, 0, 0]);
        let at = |t: i64| pt([1, t, 0, 0]);
        let o = points_order_on_line(&carrier, &[at(0), at(1), pt([0, 1, 0, 0])]).unwrap();
        assert_eq!(o.items(), &[0, 1, 2]);
        let o = points_order_on_line(&carrier, &[at(0), at(2), at(1), at(4), at(3)]).unwrap();
        assert_eq!(o.items(), &[0, 2, 1, 4, 3]);
        assert_eq!(
            points_order_on_line(&carrier, &[at(0), pt([0, 0, 1, 0])]).unwrap_err(),
            Error::NotOnLine(1)
        );
        assert_eq!(
            points_order_on_line(&carrier, &[at(2), at(0), pt([2, 4, 0, 0])]).unwrap_err(),
            Error::DuplicatePoint(0, 2)
        );
    }

    #[test]
    fn projective_invariance_of_point_order() {
        let carrier = line([1, 0, 0, 0], [0, 1, 0, 0]);
        let params = [0, 2, 1, 4, 3];
        let base: Vec<_> = params.iter().map(|&t| pt([1, t, 0, 0])).collect();
        let before = points_order_on_line(&carrier, &base).unwrap();
        // (x, y) ↦ (2x + y, x - 3y) on the carrier, identity elsewhere
        let image: Vec<_> = params.iter().map(|&t| pt([2 + t, 1 - 3 * t, 0, 0])).collect();
        assert_eq!(points_order_on_line(&carrier, &image).unwrap(), before);
    }
}
