//! Common transversals checked against a Plücker-kernel oracle: the lines
//! meeting `L₁ … L_k` form the kernel of a linear system intersected with
//! the Klein quadric.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sixlines::joins::{build_join, join_axes};
use sixlines::projgeom::{
    common_transversals, line_through, meets, transversal_of_five, transversals_of_four, HomPoint3, PluckerLine,
    TransversalSet,
};
use sixlines::schlafli::{clebsch_lines, clebsch_schlafli_sixes};
use sixlines::Error;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn rational_coords(l: &PluckerLine) -> [Q; 6] {
    std::array::from_fn(|i| l.coords()[i].as_rational().expect("rational line").clone())
}

/// Row `r` with `r · T = ω(T, L)`.
fn incidence_row(l: &[Q; 6]) -> [Q; 6] {
    [
        l[5].clone(),
        -l[4].clone(),
        l[3].clone(),
        l[2].clone(),
        -l[1].clone(),
        l[0].clone(),
    ]
}

fn omega(a: &[Q; 6], b: &[Q; 6]) -> Q {
    incidence_row(b).iter().zip(a).map(|(x, y)| x * y).sum()
}

fn kernel(rows: Vec<[Q; 6]>) -> Vec<[Q; 6]> {
    let mut m: Vec<Vec<Q>> = rows.into_iter().map(|r| r.to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..6 {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..6)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [Q; 6] = std::array::from_fn(|_| q(0));
            v[free] = q(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

#[derive(Debug, PartialEq)]
enum Count {
    Finite(usize),
    Infinite,
}

fn oracle(lines: &[&PluckerLine]) -> Count {
    let basis = kernel(lines.iter().map(|l| incidence_row(&rational_coords(l))).collect());
    match basis.as_slice() {
        [] => Count::Finite(0),
        [u] => Count::Finite(omega(u, u).is_zero() as usize),
        [u, v] => {
            // Q(u + t v) up to a factor 2: ω(u,u) + 2t ω(u,v) + t² ω(v,v)
            let (a, b, c) = (omega(u, u), omega(u, v), omega(v, v));
            if a.is_zero() && b.is_zero() && c.is_zero() {
                return Count::Infinite;
            }
            let disc = &b * &b - &a * &c;
            Count::Finite(if disc.is_positive() {
                2
            } else if disc.is_zero() {
                1
            } else {
                0
            })
        }
        _ => Count::Infinite,
    }
}

fn count_of(set: &TransversalSet) -> Count {
    match set {
        TransversalSet::Finite(v) => Count::Finite(v.len()),
        TransversalSet::Infinite => Count::Infinite,
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> HomPoint3 {
    loop {
        let c: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-9..=9));
        if c.iter().any(|&x| x != 0) {
            return HomPoint3::from_ints(c);
        }
    }
}

fn random_line(rng: &mut ChaCha8Rng) -> PluckerLine {
    loop {
        if let Ok(l) = line_through(&random_point(rng), &random_point(rng)) {
            return l;
        }
    }
}

fn pairwise_skew(lines: &[PluckerLine]) -> bool {
    (0..lines.len()).all(|i| (i + 1..lines.len()).all(|j| !meets(&lines[i], &lines[j])))
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Vec<PluckerLine> {
    loop {
        let v: Vec<PluckerLine> = (0..n).map(|_| random_line(rng)).collect();
        if pairwise_skew(&v) {
            return v;
        }
    }
}

/// Line of the ruling `{(a, b, λa, λb)}` of `xw = yz`.
fn ruling(lambda: i64) -> PluckerLine {
    line_through(
        &HomPoint3::from_ints([1, 0, lambda, 0]),
        &HomPoint3::from_ints([0, 1, 0, lambda]),
    )
    .unwrap()
}

#[test]
fn four_lines_of_a_ruling() {
    let l: Vec<PluckerLine> = (1..=4).map(ruling).collect();
    let set = transversals_of_four(&l[0], &l[1], &l[2], &l[3]).unwrap();
    assert_eq!(count_of(&set), Count::Infinite);
    assert_eq!(oracle(&[&l[0], &l[1], &l[2], &l[3]]), Count::Infinite);
}

#[test]
fn tangent_line_gives_one_transversal() {
    let l: Vec<PluckerLine> = (1..=3).map(ruling).collect();
    // through (1,0,0,0) inside its tangent plane w = 0
    let tangent = line_through(&HomPoint3::from_ints([1, 0, 0, 0]), &HomPoint3::from_ints([0, 1, 1, 0])).unwrap();
    assert_eq!(oracle(&[&l[0], &l[1], &l[2], &tangent]), Count::Finite(1));
    let TransversalSet::Finite(v) = transversals_of_four(&l[0], &l[1], &l[2], &tangent).unwrap() else {
        panic!("finite set expected")
    };
    assert_eq!(v.len(), 1);
    assert!(v[0].contains_point(&HomPoint3::from_ints([1, 0, 0, 0])));
}

#[test]
fn random_quadruples_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = [0usize; 3];
    for _ in 0..300 {
        let l = random_skew(&mut rng, 4);
        let set = transversals_of_four(&l[0], &l[1], &l[2], &l[3]).unwrap();
        let expected = oracle(&[&l[0], &l[1], &l[2], &l[3]]);
        assert_eq!(count_of(&set), expected);
        if let TransversalSet::Finite(v) = &set {
            seen[v.len()] += 1;
            for t in v {
                assert!(t.pairing(t).is_zero());
                assert!(l.iter().all(|m| meets(t, m)));
            }
            if v.len() == 2 {
                assert!(!v[0].same_line(&v[1]));
            }
        }
    }
    // both generic outcomes occur
    assert!(seen[0] > 0 && seen[2] > 0, "{seen:?}");
}

#[test]
fn five_lines_through_a_common_transversal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let t = random_line(&mut rng);
        let (a, b) = t.points();
        let lines = loop {
            let v: Vec<PluckerLine> = (0..5)
                .map(|_| {
                    let (s, u) = (rng.gen_range(-5..=5), rng.gen_range(1..=5));
                    let on_t = HomPoint3::new(std::array::from_fn(|i| {
                        &(&a.coords()[i] * &s.into()) + &(&b.coords()[i] * &u.into())
                    }))
                    .unwrap();
                    loop {
                        if let Ok(l) = line_through(&on_t, &random_point(&mut rng)) {
                            break l;
                        }
                    }
                })
                .collect();
            if pairwise_skew(&v) {
                break v;
            }
        };
        let refs: Vec<&PluckerLine> = lines.iter().collect();
        let expected = oracle(&refs);
        match transversal_of_five(refs.clone().try_into().unwrap()) {
            Ok(Some(found)) => {
                assert_eq!(expected, Count::Finite(1));
                assert!(found.same_line(&t));
            }
            Err(Error::AmbiguousTransversal) => assert!(matches!(expected, Count::Infinite | Count::Finite(2))),
            other => panic!("unexpected {other:?}"),
        }
    }
}

#[test]
fn random_five_have_none() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let l = random_skew(&mut rng, 5);
        let refs: Vec<&PluckerLine> = l.iter().collect();
        assert_eq!(oracle(&refs), Count::Finite(0));
        assert!(transversal_of_five(refs.try_into().unwrap()).unwrap().is_none());
    }
}

#[test]
fn join_minus_one_is_ambiguous() {
    let (lp, lq) = join_axes();
    for s in ["214365", "123654", "135264", "123456"] {
        let lines = build_join(&s.parse().unwrap()).plucker_lines();
        let five: Vec<&PluckerLine> = lines[1..].iter().collect();
        assert!(matches!(
            transversal_of_five(five.clone().try_into().unwrap()),
            Err(Error::AmbiguousTransversal)
        ));
        match common_transversals(&five).unwrap() {
            TransversalSet::Finite(v) => {
                assert_eq!(oracle(&five), Count::Finite(2));
                assert!(v.iter().any(|l| l.same_line(lp.plucker())));
                assert!(v.iter().any(|l| l.same_line(lq.plucker())));
            }
            TransversalSet::Infinite => assert_eq!(oracle(&five), Count::Infinite),
        }
    }
}

#[test]
fn clebsch_fives_have_a_line_of_the_surface() {
    let all = clebsch_lines();
    let sixes = clebsch_schlafli_sixes();
    for six in sixes.iter().step_by(7) {
        let lines = six.config.plucker_lines();
        for omitted in 0..6 {
            let five: Vec<&PluckerLine> = (0..6).filter(|&k| k != omitted).map(|k| &lines[k]).collect();
            let t = transversal_of_five(five.try_into().unwrap()).unwrap().unwrap();
            assert!(!meets(&t, &lines[omitted]));
            assert!(all.iter().any(|l| l.same_line(&t)));
        }
    }
}

#[test]
fn too_few_or_meeting_lines_are_rejected() {
    let l: Vec<PluckerLine> = (1..=3).map(ruling).collect();
    let refs: Vec<&PluckerLine> = l.iter().collect();
    assert!(matches!(common_transversals(&refs), Err(Error::DegenerateInput(_))));
    let meeting = line_through(&HomPoint3::from_ints([1, 0, 1, 0]), &HomPoint3::from_ints([0, 0, 0, 1])).unwrap();
    assert!(meets(&meeting, &l[0]));
    let five = [&l[0], &l[1], &l[2], &ruling(4), &meeting];
    assert!(transversal_of_five(five).is_err());
}
