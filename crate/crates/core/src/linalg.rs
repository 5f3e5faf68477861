//! Small dense linear algebra over [`FieldElement`].

use crate::field::{FieldElement, FieldTower};

/// Determinant by Gaussian elimination.
pub fn det(mut m: Vec<Vec<FieldElement>>) -> FieldElement {
    let n = m.len();
    let tower = m
        .iter()
        .flatten()
        .map(FieldElement::tower)
        .fold(FieldTower::rationals(), |acc, t| {
            acc.common(t).expect("incompatible towers")
        });
    let mut result = FieldElement::one(&tower);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return FieldElement::zero(&tower);
        };
        if pivot != col {
            m.swap(pivot, col);
            result = -result;
        }
        let inv = m[col][col].inverse().expect("nonzero pivot");
        result = &result * &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            let (top, bottom) = m.split_at_mut(r);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = &*x - &(&factor * p);
            }
        }
    }
    result
}

/// Generalized cross product: for an `(n-1) × n` matrix of full rank,
/// the vector of signed maximal minors spans the kernel.
pub fn kernel_by_minors(rows: &[Vec<FieldElement>]) -> Vec<FieldElement> {
    let n = rows.len() + 1;
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<FieldElement>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det(minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let mut acc = &a[0] * &b[0];
    for (x, y) in a.iter().zip(b).skip(1) {
        acc = &acc + &(x * y);
    }
    acc
}

pub fn cross3(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// True when the two vectors are proportional (all 2×2 minors vanish).
pub fn proportional(a: &[FieldElement], b: &[FieldElement]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if !(&a[i] * &b[j] - &a[j] * &b[i]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Solves `v = λ·u0 + μ·u1` exactly, or `None` if `v` is outside the span
/// (or `u0`, `u1` are dependent).
pub fn coords_in_basis(
    v: &[FieldElement],
    u0: &[FieldElement],
    u1: &[FieldElement],
) -> Option<(FieldElement, FieldElement)> {
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            let d = &u0[i] * &u1[j] - &u0[j] * &u1[i];
            if d.is_zero() {
                continue;
            }
            let inv = d.inverse()?;
            let lam = &(&v[i] * &u1[j] - &v[j] * &u1[i]) * &inv;
            let mu = &(&u0[i] * &v[j] - &u0[j] * &v[i]) * &inv;
            let ok = (0..n).all(|k| (&(&lam * &u0[k]) + &(&mu * &u1[k])) == v[k]);
            return ok.then_some((lam, mu));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement::from_int(x)).collect()
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(det(vec![row(&[2, 1]), row(&[7, 4])]), FieldElement::from_int(1));
        assert_eq!(
            det(vec![row(&[0, 1, 0]), row(&[1, 0, 0]), row(&[0, 0, 3])]),
            FieldElement::from_int(-3)
        );
        assert!(det(vec![row(&[1, 2]), row(&[2, 4])]).is_zero());
    }

    #[test]
    fn kernel_is_orthogonal() {
        let rows = vec![row(&[1, 2, 3, 4]), row(&[0, 1, 5, 2]), row(&[3, 1, 1, 1])];
        let k = kernel_by_minors(&rows);
        assert!(k.iter().any(|x| !x.is_zero()));
        for r in &rows {
            assert!(dot(r, &k).is_zero());
        }
    }

    #[test]
    fn basis_coordinates() {
        let (l, m) = coords_in_basis(&row(&[2, 3, 1]), &row(&[1, 1, 0]), &row(&[0, 1, 1])).unwrap();
        assert_eq!((l, m), (FieldElement::from_int(2), FieldElement::from_int(1)));
        assert!(coords_in_basis(&row(&[1, 0, 0]), &row(&[1, 1, 0]), &row(&[0, 1, 1])).is_none());
    }
}
