//! Exact feasibility of small linear systems over the rationals.
//!
//! A [`LinearSystem`] collects constraints of the form `a·x ≥ b` and `a·x = b`
//! over free rational variables. Two independent deciders are provided:
//! Fourier–Motzkin elimination, which is fast for a handful of variables, and
//! a dense two-phase simplex (phase one only) with Bland's rule, which scales
//! further. Both are exact and must agree on every input.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

type Row = (Vec<BigRational>, BigRational);

/// Conjunction of linear constraints over `vars` free rational variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    vars: usize,
    ge: Vec<Row>,
    eq: Vec<Row>,
}

/// Which decider [`LinearSystem::feasible`] dispatched to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    FourierMotzkin,
    Simplex,
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        LinearSystem {
            vars,
            ge: Vec::new(),
            eq: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Adds `coeffs · x ≥ rhs`.
    pub fn add_ge(&mut self, coeffs: Vec<BigRational>, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.vars, "constraint width mismatch");
        self.ge.push((coeffs, rhs));
    }

    /// Adds `coeffs · x = rhs`.
    pub fn add_eq(&mut self, coeffs: Vec<BigRational>, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.vars, "constraint width mismatch");
        self.eq.push((coeffs, rhs));
    }

    /// Adds `x_i ≥ 0`.
    pub fn add_nonnegative(&mut self, i: usize) {
        let mut coeffs = vec![BigRational::zero(); self.vars];
        coeffs[i] = BigRational::one();
        self.add_ge(coeffs, BigRational::zero());
    }

    /// Decides feasibility, using Fourier–Motzkin when `dim ≤ 4` and simplex
    /// otherwise.
    pub fn feasible(&self, dim: usize) -> (bool, Method) {
        if dim <= 4 {
            (self.feasible_fourier_motzkin(), Method::FourierMotzkin)
        } else {
            (self.feasible_simplex(), Method::Simplex)
        }
    }

    pub fn feasible_fourier_motzkin(&self) -> bool {
        let mut rows: Vec<Row> = self.ge.clone();
        let mut eqs: Vec<Row> = self.eq.clone();

        // Substitute equalities away first.
        while let Some((coeffs, rhs)) = eqs.pop() {
            let Some(pivot) = coeffs.iter().position(|c| !c.is_zero()) else {
                if !rhs.is_zero() {
                    return false;
                }
                continue;
            };
            let pc = coeffs[pivot].clone();
            let substitute = |row: &mut Row| {
                let f = &row.0[pivot] / &pc;
                if f.is_zero() {
                    return;
                }
                for (k, c) in coeffs.iter().enumerate() {
                    row.0[k] -= &f * c;
                }
                row.1 -= &f * &rhs;
            };
            for row in rows.iter_mut() {
                substitute(row);
            }
            for row in eqs.iter_mut() {
                substitute(row);
            }
        }

        let mut rows = match normalize_rows(rows) {
            Some(r) => r,
            None => return false,
        };
        for var in 0..self.vars {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            let mut keep = Vec::new();
            for row in rows {
                if row.0[var].is_positive() {
                    pos.push(row);
                } else if row.0[var].is_negative() {
                    neg.push(row);
                } else {
                    keep.push(row);
                }
            }
            for p in &pos {
                let pf = p.0[var].clone();
                for q in &neg {
                    let qf = -q.0[var].clone();
                    let coeffs: Vec<BigRational> = p
                        .0
                        .iter()
                        .zip(&q.0)
                        .map(|(a, b)| a / &pf + b / &qf)
                        .collect();
                    let rhs = &p.1 / &pf + &q.1 / &qf;
                    keep.push((coeffs, rhs));
                }
            }
            rows = match normalize_rows(keep) {
                Some(r) => r,
                None => return false,
            };
        }
        rows.iter().all(|(_, rhs)| !rhs.is_positive())
    }

    pub fn feasible_simplex(&self) -> bool {
        // Columns: u (vars), v (vars) with x = u - v, one surplus per ≥ row,
        // then one artificial per row.
        let n_ge = self.ge.len();
        let m = n_ge + self.eq.len();
        if m == 0 {
            return true;
        }
        let structural = 2 * self.vars + n_ge;
        let width = structural + m;
        let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        for (r, (coeffs, rhs)) in self.ge.iter().chain(&self.eq).enumerate() {
            let mut row = vec![BigRational::zero(); width + 1];
            for (j, c) in coeffs.iter().enumerate() {
                row[j] = c.clone();
                row[self.vars + j] = -c.clone();
            }
            if r < n_ge {
                row[2 * self.vars + r] = -BigRational::one();
            }
            row[width] = rhs.clone();
            if rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            row[structural + r] = BigRational::one();
            tab.push(row);
        }
        let mut basis: Vec<usize> = (structural..width).collect();
        // Reduced costs of the phase-one objective (sum of artificials).
        let mut obj = vec![BigRational::zero(); width + 1];
        for row in &tab {
            for j in 0..structural {
                obj[j] -= &row[j];
            }
            obj[width] -= &row[width];
        }

        while let Some(enter) = (0..width).find(|&j| obj[j].is_negative()) {
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in tab.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((pr, _)) = leave else {
                // Unbounded direction cannot occur for a phase-one objective
                // bounded below by zero.
                unreachable!("phase-one objective is bounded");
            };
            let pivot = tab[pr][enter].clone();
            for x in tab[pr].iter_mut() {
                *x /= &pivot;
            }
            let prow = tab[pr].clone();
            for (i, row) in tab.iter_mut().enumerate() {
                if i == pr || row[enter].is_zero() {
                    continue;
                }
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
            if !obj[enter].is_zero() {
                let f = obj[enter].clone();
                for (x, p) in obj.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
            basis[pr] = enter;
        }
        obj[width].is_zero()
    }
}

/// Scales each row so its first nonzero coefficient has absolute value one,
/// drops tautologies and duplicates. Returns `None` on a contradiction `0 ≥ c`
/// with `c > 0`.
fn normalize_rows(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut out = BTreeSet::new();
    for (coeffs, rhs) in rows {
        match coeffs.iter().find(|c| !c.is_zero()) {
            None => {
                if rhs.is_positive() {
                    return None;
                }
            }
            Some(lead) => {
                let s = lead.abs();
                let coeffs: Vec<BigRational> = coeffs.iter().map(|c| c / &s).collect();
                out.insert((coeffs, rhs / s));
            }
        }
    }
    Some(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn row(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn empty_system_is_feasible() {
        let s = LinearSystem::new(3);
        assert!(s.feasible_fourier_motzkin());
        assert!(s.feasible_simplex());
    }

    #[test]
    fn contradictory_bounds() {
        // x ≥ 1 and -x ≥ 0
        let mut s = LinearSystem::new(1);
        s.add_ge(row(&[1]), q(1));
        s.add_ge(row(&[-1]), q(0));
        assert!(!s.feasible_fourier_motzkin());
        assert!(!s.feasible_simplex());
    }

    #[test]
    fn equality_with_nonnegativity() {
        // x + y = 1, x - y = 3, y ≥ 0 is infeasible (y = -1)
        let mut s = LinearSystem::new(2);
        s.add_eq(row(&[1, 1]), q(1));
        s.add_eq(row(&[1, -1]), q(3));
        s.add_nonnegative(1);
        assert!(!s.feasible_fourier_motzkin());
        assert!(!s.feasible_simplex());
        let mut t = LinearSystem::new(2);
        t.add_eq(row(&[1, 1]), q(3));
        t.add_eq(row(&[1, -1]), q(1));
        t.add_nonnegative(1);
        assert!(t.feasible_fourier_motzkin());
        assert!(t.feasible_simplex());
    }

    #[test]
    fn inconsistent_equalities() {
        let mut s = LinearSystem::new(2);
        s.add_eq(row(&[1, 1]), q(1));
        s.add_eq(row(&[2, 2]), q(3));
        assert!(!s.feasible_fourier_motzkin());
        assert!(!s.feasible_simplex());
    }

    #[test]
    fn dispatch_by_dimension() {
        let s = LinearSystem::new(1);
        assert_eq!(s.feasible(4).1, Method::FourierMotzkin);
        assert_eq!(s.feasible(5).1, Method::Simplex);
    }

    fn arb_system() -> impl Strategy<Value = LinearSystem> {
        (1usize..=4).prop_flat_map(|vars| {
            let r = (prop::collection::vec(-3i64..=3, vars), -4i64..=4);
            (
                prop::collection::vec(r.clone(), 0..7),
                prop::collection::vec(r, 0..3),
            )
                .prop_map(move |(ge, eq)| {
                    let mut s = LinearSystem::new(vars);
                    for (c, b) in ge {
                        s.add_ge(row(&c), q(b));
                    }
                    for (c, b) in eq {
                        s.add_eq(row(&c), q(b));
                    }
                    s
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn fourier_motzkin_agrees_with_simplex(s in arb_system()) {
            prop_assert_eq!(s.feasible_fourier_motzkin(), s.feasible_simplex());
        }
    }
}
