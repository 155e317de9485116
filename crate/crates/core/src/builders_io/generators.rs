//! Built-in fans.

use super::document::FanDocument;
use std::collections::{HashMap, HashSet, VecDeque};

/// The coordinate fan: rays `e_1..e_n` then `-e_1..-e_n`, one chamber per
/// sign vector. `1 ≤ n ≤ 6`.
pub fn gen_orthant(n: usize) -> FanDocument {
    assert!((1..=6).contains(&n), "orthant dimension must be in 1..=6");
    let mut rays = Vec::with_capacity(2 * n);
    for sign in [1, -1] {
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = sign;
            rays.push(r);
        }
    }
    let chambers = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask & (1 << i) != 0 { i + n } else { i })
                .collect()
        })
        .collect();
    FanDocument {
        dim: n,
        rays,
        chambers,
        name: Some(format!("orthant({n})")),
    }
}

/// A complete fan in the plane whose chamber poset is a crown with `q + 1`
/// chambers strictly inside the right chain and `p + 1` inside the left.
///
/// Rays in counterclockwise-from-top order: `(0,1)`, `(1,0)`, `(1,-1)`, …,
/// `(1,-q)`, `(0,-1)`, `(-1,0)`, `(-p,1)`, …, `(-1,1)`. Chambers are
/// consecutive pairs.
pub fn gen_crown(p: usize, q: usize) -> FanDocument {
    let mut rays: Vec<Vec<i64>> = vec![vec![0, 1], vec![1, 0]];
    rays.extend((1..=q as i64).map(|k| vec![1, -k]));
    rays.push(vec![0, -1]);
    rays.push(vec![-1, 0]);
    rays.extend((1..=p as i64).rev().map(|k| vec![-k, 1]));
    let len = rays.len();
    let chambers = (0..len).map(|i| vec![i, (i + 1) % len]).collect();
    FanDocument {
        dim: 2,
        rays,
        chambers,
        name: Some(format!("crown({p},{q})")),
    }
}

/// The fan of the path algebra of `1 → 2`: five chambers in the plane.
pub fn gen_fa2() -> FanDocument {
    FanDocument {
        name: Some("papera2".into()),
        ..gen_crown(0, 1)
    }
}

/// The Coxeter fan of type `A_n` in fundamental-weight coordinates.
/// `2 ≤ n ≤ 4`.
///
/// Chambers are `w(C+)` for `w` in the Weyl group, generated by
/// `s_i = I - α_i e_iᵀ` with `α_i` the `i`-th column of the Cartan matrix.
/// Rays are numbered by first appearance, starting with the unit vectors.
pub fn gen_coxeter_a(n: usize) -> FanDocument {
    assert!((2..=4).contains(&n), "type A rank must be in 2..=4");
    type Matrix = Vec<Vec<i64>>;
    let cartan = |i: usize, j: usize| -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    };
    let reflections: Vec<Matrix> = (0..n)
        .map(|i| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| i64::from(r == c) - if c == i { cartan(r, i) } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mul = |a: &Matrix, b: &Matrix| -> Matrix {
        (0..n)
            .map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect())
            .collect()
    };
    let identity: Matrix = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();

    let mut seen: HashSet<Matrix> = HashSet::from([identity.clone()]);
    let mut order = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        for s in &reflections {
            let next = mul(s, &w);
            if seen.insert(next.clone()) {
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }

    let mut rays: Vec<Vec<i64>> = Vec::new();
    let mut ray_index: HashMap<Vec<i64>, usize> = HashMap::new();
    let chambers = order
        .iter()
        .map(|w| {
            (0..n)
                .map(|c| {
                    let col: Vec<i64> = (0..n).map(|r| w[r][c]).collect();
                    *ray_index.entry(col.clone()).or_insert_with(|| {
                        rays.push(col);
                        rays.len() - 1
                    })
                })
                .collect()
        })
        .collect();
    FanDocument {
        dim: n,
        rays,
        chambers,
        name: Some(format!("coxeterA({n})")),
    }
}
