//! Finite posets given by their cover relation.

use super::LatticeError;
use fixedbitset::FixedBitSet;
use std::collections::VecDeque;

/// A finite poset on `0..len` stored as covers plus down-set and up-set
/// bitsets. Immutable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
}

impl FinitePoset {
    /// Builds the poset whose order is the reflexive transitive closure of
    /// `covers`, given as `(upper, lower)` pairs. Rejects cycles, repeated
    /// pairs and pairs that are implied by transitivity.
    pub fn from_covers(len: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let mut lower_covers = vec![Vec::new(); len];
        let mut upper_covers = vec![Vec::new(); len];
        for &(u, l) in covers {
            assert!(u < len && l < len, "cover ({u}, {l}) out of range");
            if u == l {
                return Err(LatticeError::Cyclic(u));
            }
            lower_covers[u].push(l);
            upper_covers[l].push(u);
        }
        for v in lower_covers.iter_mut().chain(upper_covers.iter_mut()) {
            v.sort_unstable();
            let before = v.len();
            v.dedup();
            if v.len() != before {
                return Err(LatticeError::RepeatedCover);
            }
        }

        // Kahn's algorithm from the minimal elements upward.
        let mut pending: Vec<usize> = lower_covers.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..len).filter(|&x| pending[x] == 0).collect();
        let mut below = vec![FixedBitSet::with_capacity(len); len];
        let mut done = 0;
        while let Some(x) = queue.pop_front() {
            done += 1;
            below[x].insert(x);
            for &l in &lower_covers[x] {
                let (bx, bl) = pair_mut(&mut below, x, l);
                bx.union_with(bl);
            }
            for &u in &upper_covers[x] {
                pending[u] -= 1;
                if pending[u] == 0 {
                    queue.push_back(u);
                }
            }
        }
        if done != len {
            let stuck = (0..len).find(|&x| pending[x] > 0).unwrap_or(0);
            return Err(LatticeError::Cyclic(stuck));
        }

        for (u, lows) in lower_covers.iter().enumerate() {
            for &l in lows {
                if lows.iter().any(|&m| m != l && below[m].contains(l)) {
                    return Err(LatticeError::TransitiveArrow { upper: u, lower: l });
                }
            }
        }

        let mut above = vec![FixedBitSet::with_capacity(len); len];
        for (x, bx) in below.iter().enumerate() {
            for y in bx.ones() {
                above[y].insert(x);
            }
        }
        Ok(FinitePoset {
            lower_covers,
            upper_covers,
            below,
            above,
        })
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements covered by `x`, ascending.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// Elements covering `x`, ascending.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    /// `{y : y ≥ x}`.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// The closed interval `[lo, hi]`, empty unless `lo ≤ hi`.
    pub fn interval(&self, lo: usize, hi: usize) -> FixedBitSet {
        let mut s = self.below[hi].clone();
        s.intersect_with(&self.above[lo]);
        s
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.upper_covers[x].is_empty())
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower_covers[x].is_empty())
            .collect()
    }

    /// All cover pairs `(upper, lower)` in ascending order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.lower_covers
            .iter()
            .enumerate()
            .flat_map(|(u, ls)| ls.iter().map(move |&l| (u, l)))
            .collect()
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_three() {
        let p = FinitePoset::from_covers(3, &[(2, 1), (1, 0)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p.maximal_elements(), vec![2]);
        assert_eq!(p.interval(0, 2).count_ones(..), 3);
    }

    #[test]
    fn rejects_cycles_and_transitive_arrows() {
        assert!(matches!(
            FinitePoset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(LatticeError::Cyclic(_))
        ));
        assert_eq!(
            FinitePoset::from_covers(3, &[(2, 1), (1, 0), (2, 0)]),
            Err(LatticeError::TransitiveArrow { upper: 2, lower: 0 })
        );
    }
}
