//! Brute-force reference computations in the orthonormal-vector model of the
//! classical root systems. Nothing here touches the crate's Cartan or root
//! generation code, so the tests can compare the two.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

fn unit(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

fn add(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Simple roots as integer vectors: e_i - e_{i+1} plus the family-specific tail.
pub fn simple_roots(family: char, rank: usize) -> Vec<Vec<i64>> {
    let dim = if family == 'A' { rank + 1 } else { rank };
    let diff = |i: usize| add(&unit(dim, i), &unit(dim, i + 1), -1);
    match family {
        'A' => (0..rank).map(diff).collect(),
        'B' | 'C' | 'D' => {
            let mut s: Vec<Vec<i64>> = (0..rank - 1).map(diff).collect();
            let last = match family {
                'B' => unit(dim, rank - 1),
                'C' => add(&vec![0; dim], &unit(dim, rank - 1), 2),
                _ => add(&unit(dim, rank - 2), &unit(dim, rank - 1), 1),
            };
            s.push(last);
            s
        }
        _ => panic!("unknown family {family}"),
    }
}

/// a[i][j] = 2(α_j, α_i)/(α_i, α_i).
pub fn cartan(family: char, rank: usize) -> Vec<Vec<i64>> {
    let s = simple_roots(family, rank);
    (0..rank)
        .map(|i| (0..rank).map(|j| 2 * dot(&s[j], &s[i]) / dot(&s[i], &s[i])).collect())
        .collect()
}

pub fn reflect(v: &[i64], alpha: &[i64]) -> Vec<i64> {
    let k = 2 * dot(v, alpha);
    let n = dot(alpha, alpha);
    assert_eq!(k % n, 0, "non-integral reflection");
    add(v, alpha, -(k / n))
}

/// Closure of the simple roots under simple reflections, keeping the roots
/// whose first nonzero coordinate is positive.
pub fn positive_roots(family: char, rank: usize) -> BTreeSet<Vec<i64>> {
    let simple = simple_roots(family, rank);
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for a in &simple {
            let w = reflect(&v, a);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter()
        .filter(|v| v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .collect()
}

pub fn to_vector(family: char, rank: usize, coeffs: &[i64]) -> Vec<i64> {
    let simple = simple_roots(family, rank);
    let mut v = vec![0; simple[0].len()];
    for (c, a) in coeffs.iter().zip(&simple) {
        v = add(&v, a, *c);
    }
    v
}

/// Orbit of a label vector under the shifted action w·λ = w(λ+ρ) - ρ.
pub fn shifted_orbit(cartan: &[Vec<i64>], labels: &[i64]) -> BTreeSet<Vec<i64>> {
    let rank = labels.len();
    let shifted: Vec<i64> = labels.iter().map(|x| x + 1).collect();
    let mut seen = BTreeSet::from([shifted.clone()]);
    let mut queue = VecDeque::from([shifted]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..rank {
            // labels of α_i at node j are a[j][i]
            let nu: Vec<i64> = (0..rank).map(|j| mu[j] - mu[i] * cartan[j][i]).collect();
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen.into_iter()
        .map(|mu| mu.into_iter().map(|x| x - 1).collect())
        .collect()
}

/// |W| as the size of the orbit of a regular element.
pub fn weyl_order(family: char, rank: usize) -> usize {
    shifted_orbit(&cartan(family, rank), &vec![0; rank]).len()
}
