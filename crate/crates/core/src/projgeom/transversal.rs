//! Common transversals of four and five lines.
//!
//! A point `x(s, t) = s·a + t·b` runs along the moving line. Through each
//! such point passes exactly one line meeting two fixed skew lines: the
//! intersection of the planes `span(x, l₁)` and `span(x, l₂)`. Its Plücker
//! vector is quadratic in `(s, t)`, so asking it to meet a third line gives a
//! binary quadratic form whose real roots are the transversals.

use super::{meet_of_planes_raw, meets, pairing_raw, plane_coeffs_raw, HomPoint3, PluckerLine};
use crate::error::{Error, Result};
use crate::field::{FieldElement, Sign};

#[derive(Clone, Debug)]
pub enum TransversalSet {
    /// Zero, one or two lines; coordinates may live in a one-step
    /// extension of the input tower.
    Finite(Vec<PluckerLine>),
    /// The moving line lies on the quadric ruled by the other three.
    Infinite,
}

impl TransversalSet {
    pub fn count(&self) -> Option<usize> {
        match self {
            TransversalSet::Finite(v) => Some(v.len()),
            TransversalSet::Infinite => None,
        }
    }
}

/// Lines through points of `moving` that meet both `fixed` lines.
struct Sweep<'a> {
    fixed: [&'a PluckerLine; 2],
    a: HomPoint3,
    b: HomPoint3,
}

/// Coefficients `(α, β, γ)` of `α s² + β s t + γ t²`.
type Quadratic = [FieldElement; 3];

impl<'a> Sweep<'a> {
    fn new(fixed: [&'a PluckerLine; 2], moving: &PluckerLine) -> Sweep<'a> {
        let (a, b) = moving.points();
        Sweep { fixed, a, b }
    }

    fn line_at(&self, s: &FieldElement, t: &FieldElement) -> [FieldElement; 6] {
        let x = self.a.combine(s, &self.b, t);
        let p1 = plane_coeffs_raw(self.fixed[0].coords(), &x);
        let p2 = plane_coeffs_raw(self.fixed[1].coords(), &x);
        meet_of_planes_raw(&p1, &p2)
    }

    /// The quadratic form `(s, t) ↦ ⟨line_at(s, t), target⟩`, read off from
    /// three evaluations.
    fn incidence_form(&self, target: &PluckerLine) -> Quadratic {
        let one = FieldElement::from_int(1);
        let zero = FieldElement::from_int(0);
        let eval = |s: &FieldElement, t: &FieldElement| pairing_raw(&self.line_at(s, t), target.coords());
        let alpha = eval(&one, &zero);
        let gamma = eval(&zero, &one);
        let beta = &(&eval(&one, &one) - &alpha) - &gamma;
        [alpha, beta, gamma]
    }

    fn line(&self, root: &(FieldElement, FieldElement)) -> PluckerLine {
        PluckerLine::new(self.line_at(&root.0, &root.1)).expect("sweep line is well defined")
    }
}

fn is_zero_form(q: &Quadratic) -> bool {
    q.iter().all(FieldElement::is_zero)
}

fn discriminant(q: &Quadratic) -> FieldElement {
    let [a, b, c] = q;
    &(b * b) - &(&FieldElement::from_int(4) * &(a * c))
}

/// The repeated root of a form with zero discriminant.
fn double_root(q: &Quadratic) -> (FieldElement, FieldElement) {
    let [a, b, _] = q;
    if a.is_zero() {
        (FieldElement::from_int(1), FieldElement::from_int(0))
    } else {
        (-b, a + a)
    }
}

/// Both roots of a form with positive discriminant, adjoining `√D` if needed.
fn simple_roots(q: &Quadratic) -> Result<[(FieldElement, FieldElement); 2]> {
    let [a, b, c] = q;
    if a.is_zero() {
        return Ok([(FieldElement::from_int(1), FieldElement::from_int(0)), (-c, b.clone())]);
    }
    let d = discriminant(q);
    let root = match d.sqrt() {
        Some(r) => r,
        None => {
            let r = d.as_rational().ok_or(Error::NonRationalRadicand)?;
            d.tower().adjoin_sqrt(r)?.sqrt
        }
    };
    let two_a = a + a;
    Ok([(&(-b) + &root, two_a.clone()), (&(-b) - &root, two_a)])
}

/// Picks two of the first three lines that are skew to `moving` to span the
/// planes; the remaining one becomes the target of the quadratic.
fn arrange<'a>(
    first: [&'a PluckerLine; 3],
    moving: &PluckerLine,
) -> Result<Option<([&'a PluckerLine; 2], &'a PluckerLine)>> {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if !meets(first[i], first[j]) {
            continue;
        }
        return Err(Error::DegenerateInput(format!("lines {i} and {j} are not skew")));
    }
    if first.iter().any(|l| l.same_line(moving)) {
        return Ok(None);
    }
    let skew: Vec<usize> = (0..3).filter(|&i| !meets(first[i], moving)).collect();
    match skew.len() {
        3 | 2 => {
            let target = (0..3).find(|&i| i != skew[0] && i != skew[1]).unwrap();
            Ok(Some(([first[skew[0]], first[skew[1]]], first[target])))
        }
        _ => Err(Error::DegenerateInput(
            "fourth line meets two of the first three".into(),
        )),
    }
}

/// All common transversals of four lines, the first three pairwise skew.
pub fn transversals_of_four(
    l1: &PluckerLine,
    l2: &PluckerLine,
    l3: &PluckerLine,
    l4: &PluckerLine,
) -> Result<TransversalSet> {
    let Some((fixed, target)) = arrange([l1, l2, l3], l4)? else {
        return Ok(TransversalSet::Infinite);
    };
    let sweep = Sweep::new(fixed, l4);
    let q = sweep.incidence_form(target);
    if is_zero_form(&q) {
        return Ok(TransversalSet::Infinite);
    }
    let lines = match discriminant(&q).sign() {
        Sign::Negative => Vec::new(),
        Sign::Zero => vec![sweep.line(&double_root(&q))],
        Sign::Positive => simple_roots(&q)?.iter().map(|r| sweep.line(r)).collect(),
    };
    Ok(TransversalSet::Finite(lines))
}

/// Common roots of a family of forms on one sweep.
enum Roots {
    None,
    One((FieldElement, FieldElement)),
    /// Every form is a multiple of this one, which has two distinct roots.
    Two(Quadratic),
    /// Every form vanishes identically.
    All,
}

fn eval_form(q: &Quadratic, (s, t): &(FieldElement, FieldElement)) -> FieldElement {
    let [a, b, c] = q;
    &(&(a * &(s * s)) + &(b * &(s * t))) + &(c * &(t * t))
}

/// Two non-proportional forms share at most one root, and it is rational
/// over their field: `(s², st, t²)` must be proportional to the cross product
/// of the coefficient vectors. No square root is adjoined.
fn common_roots(forms: &[Quadratic]) -> Roots {
    let nonzero: Vec<&Quadratic> = forms.iter().filter(|q| !is_zero_form(q)).collect();
    let Some(&first) = nonzero.first() else {
        return Roots::All;
    };
    for &g in &nonzero[1..] {
        let [a, b, c] = first;
        let [d, e, f] = g;
        let w = [&(b * f) - &(c * e), &(c * d) - &(a * f), &(a * e) - &(b * d)];
        if w.iter().all(FieldElement::is_zero) {
            continue;
        }
        if !(&(&w[1] * &w[1]) - &(&w[0] * &w[2])).is_zero() {
            return Roots::None;
        }
        let [w0, w1, w2] = w;
        let root = if w0.is_zero() { (w1, w2) } else { (w0, w1) };
        return if forms.iter().all(|q| eval_form(q, &root).is_zero()) {
            Roots::One(root)
        } else {
            Roots::None
        };
    }
    match discriminant(first).sign() {
        Sign::Negative => Roots::None,
        Sign::Zero => Roots::One(double_root(first)),
        Sign::Positive => Roots::Two(first.clone()),
    }
}

fn check_pairwise_skew(lines: &[&PluckerLine]) -> Result<()> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if meets(lines[i], lines[j]) {
                return Err(Error::DegenerateInput(format!("lines {i} and {j} are not skew")));
            }
        }
    }
    Ok(())
}

/// The sweep along the third line with the first two fixed, and the
/// incidence forms of all remaining lines.
fn sweep_forms<'a>(lines: &[&'a PluckerLine]) -> (Sweep<'a>, Vec<Quadratic>) {
    let sweep = Sweep::new([lines[0], lines[1]], lines[2]);
    let forms = lines[3..].iter().map(|l| sweep.incidence_form(l)).collect();
    (sweep, forms)
}

/// The common transversal of five pairwise skew lines, if there is one.
/// Fails with `AmbiguousTransversal` when there are two or infinitely many.
pub fn transversal_of_five(lines: [&PluckerLine; 5]) -> Result<Option<PluckerLine>> {
    check_pairwise_skew(&lines)?;
    let (sweep, forms) = sweep_forms(&lines);
    match common_roots(&forms) {
        Roots::None => Ok(None),
        Roots::One(r) => Ok(Some(sweep.line(&r))),
        Roots::Two(_) | Roots::All => Err(Error::AmbiguousTransversal),
    }
}

/// All common transversals of at least four pairwise skew lines.
pub fn common_transversals(lines: &[&PluckerLine]) -> Result<TransversalSet> {
    if lines.len() < 4 {
        return Err(Error::DegenerateInput("need at least four lines".into()));
    }
    check_pairwise_skew(lines)?;
    let (sweep, forms) = sweep_forms(lines);
    Ok(match common_roots(&forms) {
        Roots::None => TransversalSet::Finite(Vec::new()),
        Roots::One(r) => TransversalSet::Finite(vec![sweep.line(&r)]),
        Roots::Two(q) => TransversalSet::Finite(simple_roots(&q)?.iter().map(|r| sweep.line(r)).collect()),
        Roots::All => TransversalSet::Infinite,
    })
}
