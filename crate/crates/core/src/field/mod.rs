//! Exact arithmetic over the rationals and towers of real quadratic extensions.
//!
//! A [`FieldTower`] is the field `Q(√d₁, …, √d_k)` for positive rational
//! radicands, each one not a square in the field generated by the previous
//! ones. Elements are stored densely in the basis of products of the
//! adjoined roots, indexed by bitmask: coefficient `c[S]` multiplies
//! `∏_{i∈S} √dᵢ`. All roots denote their positive real values, so every
//! element is a real number and [`FieldElement::sign`] is exact.

mod parse;

pub use parse::{parse_element, ParseError, TowerBuilder};

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Deepest supported tower: the rationals followed by two square roots.
pub const MAX_TOWER_DEPTH: usize = 2;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Square root of a non-negative rational, if it is itself rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.to_i32() * rhs.to_i32() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Negative
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i32(self.to_i32())
    }
}

struct TowerData {
    radicands: Vec<Rational>,
    /// `products[S] = ∏_{i∈S} dᵢ`, the square of the basis element `S`.
    products: Vec<Rational>,
}

/// A chain `Q ⊂ Q(√d₁) ⊂ Q(√d₁,√d₂)` of real quadratic extensions.
#[derive(Clone)]
pub struct FieldTower {
    data: Arc<TowerData>,
}

/// Result of [`FieldTower::adjoin_sqrt`].
#[derive(Clone, Debug)]
pub struct Adjunction {
    pub tower: FieldTower,
    /// The positive square root of the radicand, as an element of `tower`.
    pub sqrt: FieldElement,
    /// `false` when the radicand was already a square in the base tower.
    pub extended: bool,
}

impl FieldTower {
    fn from_vec(radicands: Vec<Rational>) -> FieldTower {
        let mut products = vec![Rational::one()];
        for d in &radicands {
            let next: Vec<Rational> = products.iter().map(|p| p * d).collect();
            products.extend(next);
        }
        FieldTower {
            data: Arc::new(TowerData { radicands, products }),
        }
    }

    /// The rationals, as the empty tower.
    pub fn rationals() -> FieldTower {
        static Q: OnceLock<FieldTower> = OnceLock::new();
        Q.get_or_init(|| FieldTower::from_vec(Vec::new())).clone()
    }

    /// Builds a tower by adjoining the given radicands in order. Each one must
    /// genuinely extend the field.
    pub fn from_radicands(radicands: &[Rational]) -> Result<FieldTower> {
        let mut tower = FieldTower::rationals();
        for d in radicands {
            let adj = tower.adjoin_sqrt(d)?;
            if !adj.extended {
                return Err(Error::DegenerateInput(format!(
                    "radicand {d} is already a square in the tower"
                )));
            }
            tower = adj.tower;
        }
        Ok(tower)
    }

    pub fn depth(&self) -> usize {
        self.data.radicands.len()
    }

    /// Dimension over the rationals.
    pub fn dim(&self) -> usize {
        1 << self.depth()
    }

    pub fn radicands(&self) -> &[Rational] {
        &self.data.radicands
    }

    fn product(&self, mask: usize) -> &Rational {
        &self.data.products[mask]
    }

    pub fn prefix(&self, depth: usize) -> FieldTower {
        if depth == self.depth() {
            return self.clone();
        }
        if depth == 0 {
            return FieldTower::rationals();
        }
        FieldTower::from_vec(self.data.radicands[..depth].to_vec())
    }

    pub fn is_prefix_of(&self, other: &FieldTower) -> bool {
        self.depth() <= other.depth() && self.radicands() == &other.radicands()[..self.depth()]
    }

    /// The smaller of two towers if it is a prefix of the larger one.
    pub fn common(&self, other: &FieldTower) -> Option<FieldTower> {
        if self.is_prefix_of(other) {
            Some(other.clone())
        } else if other.is_prefix_of(self) {
            Some(self.clone())
        } else {
            None
        }
    }

    /// Adjoins `√d`. A radicand that is already a square leaves the tower
    /// unchanged and reports `extended == false`.
    pub fn adjoin_sqrt(&self, d: &Rational) -> Result<Adjunction> {
        if !d.is_positive() {
            return Err(Error::NonPositiveRadicand(d.to_string()));
        }
        let elem = FieldElement::from_rational(d.clone()).lift(self);
        if let Some(sqrt) = elem.sqrt() {
            return Ok(Adjunction {
                tower: self.clone(),
                sqrt,
                extended: false,
            });
        }
        if self.depth() >= MAX_TOWER_DEPTH {
            return Err(Error::TowerDepthExceeded { max: MAX_TOWER_DEPTH });
        }
        let mut radicands = self.data.radicands.clone();
        radicands.push(d.clone());
        let tower = FieldTower::from_vec(radicands);
        let sqrt = FieldElement::basis_root(&tower, tower.depth() - 1);
        Ok(Adjunction {
            tower,
            sqrt,
            extended: true,
        })
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &FieldTower) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.radicands() == other.radicands()
    }
}

impl Eq for FieldTower {}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        for d in self.radicands() {
            write!(f, "(√{d})")?;
        }
        Ok(())
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "field")?;
        for d in self.radicands() {
            write!(f, " sqrt({d})")?;
        }
        Ok(())
    }
}

/// An exact real number in a [`FieldTower`].
///
/// Arithmetic between elements of different towers lifts the operand living
/// in the shorter tower, provided that tower is a prefix of the other one.
/// Mixing unrelated towers is a logic error and panics.
#[derive(Clone)]
pub struct FieldElement {
    tower: FieldTower,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn new(tower: FieldTower, coeffs: Vec<Rational>) -> FieldElement {
        assert_eq!(coeffs.len(), tower.dim(), "coefficient count must match the tower");
        FieldElement { tower, coeffs }
    }

    pub fn zero(tower: &FieldTower) -> FieldElement {
        FieldElement::new(tower.clone(), vec![Rational::zero(); tower.dim()])
    }

    pub fn one(tower: &FieldTower) -> FieldElement {
        let mut e = FieldElement::zero(tower);
        e.coeffs[0] = Rational::one();
        e
    }

    pub fn from_rational(r: Rational) -> FieldElement {
        FieldElement {
            tower: FieldTower::rationals(),
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> FieldElement {
        FieldElement::from_rational(integer(n))
    }

    /// `√d` for the radicand adjoined at `level`.
    pub fn basis_root(tower: &FieldTower, level: usize) -> FieldElement {
        let mut e = FieldElement::zero(tower);
        e.coeffs[1 << level] = Rational::one();
        e
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when all irrational coefficients vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Re-expresses the element in a tower that extends its own.
    pub fn lift(&self, tower: &FieldTower) -> FieldElement {
        self.try_lift(tower)
            .unwrap_or_else(|| panic!("cannot lift {:?} into {:?}", self.tower, tower))
    }

    pub fn try_lift(&self, tower: &FieldTower) -> Option<FieldElement> {
        if &self.tower == tower {
            return Some(self.clone());
        }
        if !self.tower.is_prefix_of(tower) {
            return None;
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(tower.dim(), Rational::zero());
        Some(FieldElement {
            tower: tower.clone(),
            coeffs,
        })
    }

    /// Splits `x = a + b·√d` over the top level of the tower.
    fn split_top(&self) -> (FieldElement, FieldElement, Rational) {
        let depth = self.tower.depth();
        debug_assert!(depth > 0);
        let lower = self.tower.prefix(depth - 1);
        let half = lower.dim();
        let a = FieldElement::new(lower.clone(), self.coeffs[..half].to_vec());
        let b = FieldElement::new(lower, self.coeffs[half..].to_vec());
        (a, b, self.tower.radicands()[depth - 1].clone())
    }

    fn join_top(tower: &FieldTower, a: FieldElement, b: FieldElement) -> FieldElement {
        let lower = tower.prefix(tower.depth() - 1);
        let mut coeffs = a.lift(&lower).coeffs;
        coeffs.extend(b.lift(&lower).coeffs);
        FieldElement::new(tower.clone(), coeffs)
    }

    /// Exact sign. For `a + b√d` with opposite signs of `a` and `b`, the
    /// answer follows from the sign of `a² − b²d` one level down.
    pub fn sign(&self) -> Sign {
        if self.tower.depth() == 0 {
            return Sign::of_rational(&self.coeffs[0]);
        }
        let (a, b, d) = self.split_top();
        let sa = a.sign();
        let sb = b.sign();
        if sb.is_zero() || sa == sb {
            return sa;
        }
        if sa.is_zero() {
            return sb;
        }
        let gap = &(&a * &a) - &(&(&b * &b) * &FieldElement::from_rational(d));
        sa * gap.sign()
    }

    pub fn signum(&self) -> i32 {
        self.sign().to_i32()
    }

    pub fn square(&self) -> FieldElement {
        self * self
    }

    pub fn inverse(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        if self.tower.depth() == 0 {
            return Some(FieldElement::from_rational(self.coeffs[0].recip()));
        }
        let (a, b, d) = self.split_top();
        let norm = &(&a * &a) - &(&(&b * &b) * &FieldElement::from_rational(d));
        let inv = norm.inverse()?;
        Some(FieldElement::join_top(&self.tower, &a * &inv, -(&b * &inv)))
    }

    /// The non-negative square root, if it lies in the same tower.
    pub fn sqrt(&self) -> Option<FieldElement> {
        match self.sign() {
            Sign::Negative => return None,
            Sign::Zero => return Some(FieldElement::zero(&self.tower)),
            Sign::Positive => {}
        }
        if self.tower.depth() == 0 {
            return rational_sqrt(&self.coeffs[0]).map(FieldElement::from_rational);
        }
        let tower = self.tower.clone();
        let (a, b, d) = self.split_top();
        let lower = a.tower.clone();
        if b.is_zero() {
            if let Some(r) = a.sqrt() {
                return Some(FieldElement::join_top(&tower, r, FieldElement::zero(&lower)));
            }
            // a = d·w² gives √a = w·√d
            let w2 = &a * &FieldElement::from_rational(d.recip());
            return w2
                .sqrt()
                .map(|w| FieldElement::join_top(&tower, FieldElement::zero(&lower), w));
        }
        let d_elem = FieldElement::from_rational(d);
        let norm = &(&a * &a) - &(&(&b * &b) * &d_elem);
        let n = norm.sqrt()?;
        let half = FieldElement::from_rational(rational(1, 2));
        for cand in [&(&a + &n) * &half, &(&a - &n) * &half] {
            let Some(u) = cand.sqrt() else { continue };
            if u.is_zero() {
                continue;
            }
            let v = &b * &(&u + &u).inverse()?;
            let root = FieldElement::join_top(&tower, u, v);
            let root = if root.sign() == Sign::Negative { -root } else { root };
            if &root.square() == self {
                return Some(root);
            }
        }
        None
    }

    /// Floating-point approximation (for display and diagnostics only).
    pub fn to_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                let root = self.tower.product(mask).to_f64().unwrap_or(f64::NAN).sqrt();
                c.to_f64().unwrap_or(f64::NAN) * root
            })
            .sum()
    }

    fn unify<'a>(a: &'a FieldElement, b: &'a FieldElement) -> (Cow<'a, FieldElement>, Cow<'a, FieldElement>) {
        if a.tower == b.tower {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let tower = a
            .tower
            .common(&b.tower)
            .unwrap_or_else(|| panic!("incompatible towers {:?} and {:?}", a.tower, b.tower));
        (Cow::Owned(a.lift(&tower)), Cow::Owned(b.lift(&tower)))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &FieldElement) -> bool {
        match self.tower.common(&other.tower) {
            Some(_) => {
                let (a, b) = FieldElement::unify(self, other);
                a.coeffs == b.coeffs
            }
            None => false,
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &FieldElement) -> Option<Ordering> {
        self.tower.common(&other.tower)?;
        Some(match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> FieldElement {
        FieldElement::from_rational(r)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let (a, b) = FieldElement::unify(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        FieldElement::new(a.tower.clone(), coeffs)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let (a, b) = FieldElement::unify(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        FieldElement::new(a.tower.clone(), coeffs)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let (a, b) = FieldElement::unify(self, rhs);
        let tower = a.tower.clone();
        let mut out = vec![Rational::zero(); tower.dim()];
        for (s, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let term = x * y;
                let shared = s & t;
                out[s ^ t] += if shared == 0 {
                    term
                } else {
                    term * tower.product(shared)
                };
            }
        }
        FieldElement::new(tower, out)
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(self.tower.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(mut self) -> FieldElement {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats in the text grammar accepted by [`parse_element`].
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if mask == 0 {
                    write_rational(f, c)?;
                } else if c.is_one() {
                    write!(f, "sqrt(")?;
                    write_rational(f, self.tower.product(mask))?;
                    write!(f, ")")?;
                } else {
                    write_rational(f, c)?;
                    write!(f, "*sqrt(")?;
                    write_rational(f, self.tower.product(mask))?;
                    write!(f, ")")?;
                }
                first = false;
                continue;
            }
            write!(f, " {} ", if negative { '-' } else { '+' })?;
            let abs = c.abs();
            if mask == 0 {
                write_rational(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rational(f, &abs)?;
                    write!(f, "*")?;
                }
                write!(f, "sqrt(")?;
                write_rational(f, self.tower.product(mask))?;
                write!(f, ")")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5() -> FieldTower {
        FieldTower::from_radicands(&[integer(5)]).unwrap()
    }

    fn elem(t: &FieldTower, c: &[i64]) -> FieldElement {
        FieldElement::new(t.clone(), c.iter().map(|&x| integer(x)).collect())
    }

    #[test]
    fn sign_of_rational_literal() {
        assert_eq!(FieldElement::from_rational(rational(3, 4)).sign(), Sign::Positive);
        assert_eq!(FieldElement::zero(&q5()).sign(), Sign::Zero);
        assert_eq!(FieldElement::zero(&FieldTower::rationals()).sign(), Sign::Zero);
    }

    #[test]
    fn two_minus_root_five_is_negative() {
        // 4 < 5
        assert_eq!(elem(&q5(), &[2, -1]).sign(), Sign::Negative);
        assert_eq!(elem(&q5(), &[3, -1]).sign(), Sign::Positive);
        assert_eq!(elem(&q5(), &[-3, 1]).sign(), Sign::Negative);
    }

    #[test]
    fn adjoin_cases() {
        let q = FieldTower::rationals();
        let a = q.adjoin_sqrt(&integer(5)).unwrap();
        assert!(a.extended);
        assert_eq!(a.tower.depth(), 1);

        let b = q.adjoin_sqrt(&integer(4)).unwrap();
        assert!(!b.extended);
        assert_eq!(b.tower, q);
        assert_eq!(b.sqrt, FieldElement::from_int(2));

        let c = a.tower.adjoin_sqrt(&integer(5)).unwrap();
        assert!(!c.extended);
        assert_eq!(c.tower, a.tower);
        assert_eq!(c.sqrt, FieldElement::basis_root(&a.tower, 0));

        // 20 = 4·5 is a square in Q(√5) as well
        let d = a.tower.adjoin_sqrt(&integer(20)).unwrap();
        assert!(!d.extended);
        assert_eq!(d.sqrt, elem(&a.tower, &[0, 2]));

        assert!(matches!(q.adjoin_sqrt(&integer(0)), Err(Error::NonPositiveRadicand(_))));
        assert!(matches!(
            q.adjoin_sqrt(&integer(-3)),
            Err(Error::NonPositiveRadicand(_))
        ));
    }

    #[test]
    fn depth_is_capped() {
        let t = FieldTower::from_radicands(&[integer(2), integer(3)]).unwrap();
        assert!(!t.adjoin_sqrt(&integer(6)).unwrap().extended);
        assert_eq!(
            t.adjoin_sqrt(&integer(5)).unwrap_err(),
            Error::TowerDepthExceeded { max: 2 }
        );
    }

    #[test]
    fn golden_ratio_identities() {
        let t = q5();
        let phi = &elem(&t, &[1, 1]) * &FieldElement::from_rational(rational(1, 2));
        // φ² = φ + 1
        assert_eq!(phi.square(), &phi + &FieldElement::from_int(1));
        let inv = phi.inverse().unwrap();
        assert_eq!(&inv, &(&phi - &FieldElement::from_int(1)));
    }

    #[test]
    fn sqrt_in_quadratic_field() {
        let t = q5();
        // (1 + √5)² = 6 + 2√5
        let x = elem(&t, &[6, 2]);
        assert_eq!(x.sqrt().unwrap(), elem(&t, &[1, 1]));
        // (1 - √5)² = 6 - 2√5, positive root is √5 - 1
        let y = elem(&t, &[6, -2]);
        assert_eq!(y.sqrt().unwrap(), elem(&t, &[-1, 1]));
        assert!(elem(&t, &[2, 1]).sqrt().is_none());
        assert!(elem(&t, &[2, -1]).sqrt().is_none());
    }

    #[test]
    fn sqrt_in_depth_two() {
        let t = FieldTower::from_radicands(&[integer(2), integer(3)]).unwrap();
        let r = elem(&t, &[1, 1, 1, 1]);
        let sq = r.square();
        assert_eq!(sq.sqrt().unwrap(), r);
        assert_eq!(elem(&t, &[6, 0, 0, 0]).sqrt().unwrap(), elem(&t, &[0, 0, 0, 1]));
    }

    #[test]
    fn mixed_towers_lift() {
        let t = q5();
        let x = &elem(&t, &[0, 1]) + &FieldElement::from_int(3);
        assert_eq!(x, elem(&t, &[3, 1]));
        assert_eq!(FieldElement::from_int(3), elem(&t, &[3, 0]));
    }

    #[test]
    fn display_uses_grammar() {
        let t = q5();
        let x = FieldElement::new(t.clone(), vec![rational(1, 2), rational(-1, 2)]);
        assert_eq!(x.to_string(), "1/2 - 1/2*sqrt(5)");
        assert_eq!(elem(&t, &[0, 1]).to_string(), "sqrt(5)");
        assert_eq!(elem(&t, &[0, -1]).to_string(), "-1*sqrt(5)");
        assert_eq!(elem(&t, &[0, 0]).to_string(), "0");
        let t2 = FieldTower::from_radicands(&[integer(2), integer(3)]).unwrap();
        assert_eq!(elem(&t2, &[1, 0, 0, 2]).to_string(), "1 + 2*sqrt(6)");
    }

    #[test]
    fn square_radicand_in_tower_is_rejected() {
        assert!(FieldTower::from_radicands(&[integer(5), integer(20)]).is_err());
        assert!(FieldTower::from_radicands(&[integer(9)]).is_err());
    }
}
