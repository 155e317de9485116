//! Finite lattices: meet/join tables, semidistributivity, join-irreducibles,
//! cover labels and canonical join representations.
//!
//! Everything here works on plain indices so it can be exercised on
//! synthetic lattices that do not come from a fan.

use super::poset::FinitePoset;
use super::LatticeError;
use crate::par;
use fixedbitset::FixedBitSet;
use serde::Serialize;

/// Which semidistributive law a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SemidistributiveLaw {
    /// `a∨b = a∨c` implies `a∨b = a∨(b∧c)`.
    Join,
    /// `a∧b = a∧c` implies `a∧b = a∧(b∨c)`.
    Meet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemidistributiveWitness {
    pub law: SemidistributiveLaw,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// A finite lattice with precomputed meet and join tables.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    top: usize,
    bottom: usize,
}

impl Lattice {
    pub fn new(poset: FinitePoset) -> Result<Self, LatticeError> {
        let n = poset.len();
        let (top, bottom) = match (&poset.maximal_elements()[..], &poset.minimal_elements()[..]) {
            ([t], [b]) => (*t, *b),
            _ => return Err(LatticeError::NoBounds),
        };
        let rows = par::map_range(n, |a| -> Result<(Vec<usize>, Vec<usize>), LatticeError> {
            let mut meets = Vec::with_capacity(n);
            let mut joins = Vec::with_capacity(n);
            for b in 0..n {
                let mut ub = poset.up_set(a).clone();
                ub.intersect_with(poset.up_set(b));
                let j = least(&poset, &ub).ok_or(LatticeError::NotALattice { a, b })?;
                let mut lb = poset.down_set(a).clone();
                lb.intersect_with(poset.down_set(b));
                let m = greatest(&poset, &lb).ok_or(LatticeError::NotALattice { a, b })?;
                meets.push(m);
                joins.push(j);
            }
            Ok((meets, joins))
        });
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for row in rows {
            let (m, j) = row?;
            meet.extend(m);
            join.extend(j);
        }
        Ok(Lattice {
            poset,
            meet,
            join,
            top,
            bottom,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Exhaustive check of both semidistributive laws over all triples.
    /// Returns the first violation in `(a, b, c)` order.
    pub fn check_semidistributive(&self) -> Result<(), SemidistributiveWitness> {
        let n = self.len();
        let found = par::map_range(n, |a| {
            for b in 0..n {
                for c in 0..n {
                    let ab = self.join(a, b);
                    if ab == self.join(a, c) && ab != self.join(a, self.meet(b, c)) {
                        return Some(SemidistributiveWitness {
                            law: SemidistributiveLaw::Join,
                            a,
                            b,
                            c,
                        });
                    }
                    let ab = self.meet(a, b);
                    if ab == self.meet(a, c) && ab != self.meet(a, self.join(b, c)) {
                        return Some(SemidistributiveWitness {
                            law: SemidistributiveLaw::Meet,
                            a,
                            b,
                            c,
                        });
                    }
                }
            }
            None
        });
        match found.into_iter().flatten().next() {
            Some(w) => Err(w),
            None => Ok(()),
        }
    }

    /// Elements with exactly one lower cover, ascending.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.poset.lower_covers(x).len() == 1)
            .collect()
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.poset.lower_covers(x).len() == 1
    }

    /// The least `x` with `lower ∨ x = upper`, for a cover `upper ⋗ lower`.
    pub fn gamma(&self, upper: usize, lower: usize) -> Result<usize, LatticeError> {
        if !self.poset.lower_covers(upper).contains(&lower) {
            return Err(LatticeError::NotACover { upper, lower });
        }
        let mut solutions = FixedBitSet::with_capacity(self.len());
        for x in 0..self.len() {
            if self.join(lower, x) == upper {
                solutions.insert(x);
            }
        }
        least(&self.poset, &solutions).ok_or(LatticeError::NoMinimum { upper, lower })
    }

    /// All irredundant join representations of `x` by join-irreducibles,
    /// each sorted ascending, in lexicographic order.
    pub fn irredundant_join_reps(&self, x: usize) -> Vec<Vec<usize>> {
        let candidates: Vec<usize> = self
            .join_irreducibles()
            .into_iter()
            .filter(|&j| self.leq(j, x))
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_reps(x, &candidates, 0, self.bottom, &mut current, &mut out);
        out
    }

    fn extend_reps(
        &self,
        target: usize,
        candidates: &[usize],
        from: usize,
        acc: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if acc == target {
            if self.is_irredundant(current, target) {
                out.push(current.clone());
            }
            return;
        }
        for (i, &j) in candidates.iter().enumerate().skip(from) {
            // An element below the running join would be redundant.
            if self.leq(j, acc) {
                continue;
            }
            current.push(j);
            self.extend_reps(target, candidates, i + 1, self.join(acc, j), current, out);
            current.pop();
        }
    }

    fn is_irredundant(&self, set: &[usize], target: usize) -> bool {
        (0..set.len()).all(|skip| {
            let rest = set
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &y)| y);
            self.join_all(rest) != target
        })
    }

    /// The canonical join representation of `x`: the irredundant
    /// representation that refines every other one.
    pub fn canonical_join_rep(&self, x: usize) -> Result<Vec<usize>, LatticeError> {
        let reps = self.irredundant_join_reps(x);
        let mut common = FixedBitSet::with_capacity(self.len());
        common.insert_range(..);
        for rep in &reps {
            let mut down = FixedBitSet::with_capacity(self.len());
            for &u in rep {
                down.union_with(self.poset.down_set(u));
            }
            common.intersect_with(&down);
        }
        let mut refining = reps
            .into_iter()
            .filter(|rep| rep.iter().all(|&c| common.contains(c)));
        match (refining.next(), refining.next()) {
            (Some(rep), None) => Ok(rep),
            _ => Err(LatticeError::NoCanonicalJoinRep(x)),
        }
    }
}

fn least(poset: &FinitePoset, set: &FixedBitSet) -> Option<usize> {
    set.ones().find(|&c| set.is_subset(poset.up_set(c)))
}

fn greatest(poset: &FinitePoset, set: &FixedBitSet) -> Option<usize> {
    set.ones().find(|&c| set.is_subset(poset.down_set(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 0 bottom, 1..=3 atoms, 4 top.
    fn m3() -> Lattice {
        let covers = [(4, 1), (4, 2), (4, 3), (1, 0), (2, 0), (3, 0)];
        Lattice::new(FinitePoset::from_covers(5, &covers).unwrap()).unwrap()
    }

    /// The pentagon N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    fn n5() -> Lattice {
        let covers = [(4, 2), (2, 1), (1, 0), (4, 3), (3, 0)];
        Lattice::new(FinitePoset::from_covers(5, &covers).unwrap()).unwrap()
    }

    #[test]
    fn m3_is_not_semidistributive() {
        let w = m3().check_semidistributive().unwrap_err();
        assert!(w.a != w.b && w.b != w.c);
    }

    #[test]
    fn n5_is_semidistributive_with_canonical_reps() {
        let l = n5();
        assert!(l.check_semidistributive().is_ok());
        assert_eq!(l.join_irreducibles(), vec![1, 2, 3]);
        // top = 1 ∨ 3 = 2 ∨ 3; the canonical one uses the smaller element 1.
        assert_eq!(l.irredundant_join_reps(4), vec![vec![1, 3], vec![2, 3]]);
        assert_eq!(l.canonical_join_rep(4).unwrap(), vec![1, 3]);
        assert_eq!(l.canonical_join_rep(0).unwrap(), Vec::<usize>::new());
        assert_eq!(l.canonical_join_rep(2).unwrap(), vec![2]);
        assert_eq!(l.gamma(4, 3).unwrap(), 1);
        assert_eq!(l.gamma(2, 1).unwrap(), 2);
    }

    #[test]
    fn m3_has_no_canonical_rep_at_top() {
        assert_eq!(
            m3().canonical_join_rep(4),
            Err(LatticeError::NoCanonicalJoinRep(4))
        );
    }

    #[test]
    fn gamma_requires_a_cover() {
        assert_eq!(
            n5().gamma(4, 0),
            Err(LatticeError::NotACover { upper: 4, lower: 0 })
        );
    }

    #[test]
    fn non_lattice_is_rejected() {
        // Two maximal elements over two minimal ones plus a top and bottom:
        // 1,2 both cover 3 and 4; 0 covers 1,2; 3,4 cover 5.
        let covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];
        let p = FinitePoset::from_covers(6, &covers).unwrap();
        assert!(matches!(
            Lattice::new(p),
            Err(LatticeError::NotALattice { .. })
        ));
    }
}
