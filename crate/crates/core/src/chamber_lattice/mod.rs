//! The chamber poset of a fan and its lattice structure.
//!
//! Each wall is oriented towards the chamber on the positive side of its
//! hyperplane; the order on chambers is the transitive closure of these
//! covers.

pub mod lattice;
pub mod poset;

pub use lattice::{Lattice, SemidistributiveLaw, SemidistributiveWitness};
pub use poset::FinitePoset;

use crate::exactgeom::Sign;
use crate::fan::{ChamberId, FaceId, Fan, WallId};
use crate::par;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("cannot orient wall {0}: a barycenter or the all-ones vector lies on its hyperplane")]
    AmbiguousOrientation(WallId),
    #[error("the cover relation has a cycle through element {0}")]
    Cyclic(usize),
    #[error("a cover pair is listed twice")]
    RepeatedCover,
    #[error("cover {upper} -> {lower} is implied by transitivity")]
    TransitiveArrow { upper: usize, lower: usize },
    #[error("the poset has no unique maximum and minimum")]
    NoBounds,
    #[error("maximum {top} / minimum {bottom} differ from the identity / negated chambers")]
    BoundsMismatch { top: usize, bottom: usize },
    #[error("elements {a} and {b} have no unique meet or join")]
    NotALattice { a: usize, b: usize },
    #[error("{upper} -> {lower} is not a cover")]
    NotACover { upper: usize, lower: usize },
    #[error("the label set of {upper} -> {lower} has no minimum")]
    NoMinimum { upper: usize, lower: usize },
    #[error("element {0} has no canonical join representation")]
    NoCanonicalJoinRep(usize),
    #[error("the star of face {face} is not an order interval")]
    IntervalMismatch { face: FaceId },
}

/// A Hasse arrow `upper ⋗ lower` across `wall`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CoverArrow {
    pub upper: ChamberId,
    pub lower: ChamberId,
    pub wall: WallId,
}

/// The chambers of a fan as a lattice, with its Hasse arrows labelled by
/// walls. Immutable.
#[derive(Clone, Debug)]
pub struct ChamberPoset {
    lattice: Lattice,
    arrows: Vec<CoverArrow>,
    arrow_of_wall: Vec<usize>,
}

/// Orients every wall of `fan` and builds the resulting chamber lattice.
pub fn orient_hasse(fan: &Fan) -> Result<ChamberPoset, LatticeError> {
    let mut arrows = Vec::with_capacity(fan.walls().len());
    for wall in fan.walls() {
        if wall.hyperplane.is_ambiguous() {
            return Err(LatticeError::AmbiguousOrientation(wall.id));
        }
        let [a, b] = wall.chambers;
        let sa = wall.hyperplane.side(fan.barycenter(a));
        let sb = wall.hyperplane.side(fan.barycenter(b));
        let (upper, lower) = match (sa, sb) {
            (Sign::Positive, Sign::Negative) => (a, b),
            (Sign::Negative, Sign::Positive) => (b, a),
            _ => return Err(LatticeError::AmbiguousOrientation(wall.id)),
        };
        arrows.push(CoverArrow {
            upper,
            lower,
            wall: wall.id,
        });
    }
    arrows.sort();
    let covers: Vec<(usize, usize)> = arrows.iter().map(|a| (a.upper.0, a.lower.0)).collect();
    let poset = FinitePoset::from_covers(fan.num_chambers(), &covers)?;
    let (top, bottom) = match (&poset.maximal_elements()[..], &poset.minimal_elements()[..]) {
        ([t], [b]) => (*t, *b),
        _ => return Err(LatticeError::NoBounds),
    };
    if top != fan.identity_chamber().0 || bottom != fan.negated_chamber().0 {
        return Err(LatticeError::BoundsMismatch { top, bottom });
    }
    let lattice = Lattice::new(poset)?;
    let mut arrow_of_wall = vec![usize::MAX; fan.walls().len()];
    for (i, a) in arrows.iter().enumerate() {
        arrow_of_wall[a.wall.0] = i;
    }
    Ok(ChamberPoset {
        lattice,
        arrows,
        arrow_of_wall,
    })
}

impl ChamberPoset {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn top(&self) -> ChamberId {
        ChamberId(self.lattice.top())
    }

    pub fn bottom(&self) -> ChamberId {
        ChamberId(self.lattice.bottom())
    }

    /// All Hasse arrows, sorted by `(upper, lower)`.
    pub fn arrows(&self) -> &[CoverArrow] {
        &self.arrows
    }

    pub fn arrow_of_wall(&self, w: WallId) -> &CoverArrow {
        &self.arrows[self.arrow_of_wall[w.0]]
    }

    pub fn arrow(&self, upper: ChamberId, lower: ChamberId) -> Option<&CoverArrow> {
        self.arrows
            .binary_search_by(|a| (a.upper, a.lower).cmp(&(upper, lower)))
            .ok()
            .map(|i| &self.arrows[i])
    }

    pub fn leq(&self, a: ChamberId, b: ChamberId) -> bool {
        self.lattice.leq(a.0, b.0)
    }

    pub fn comparable(&self, a: ChamberId, b: ChamberId) -> bool {
        self.lattice.poset().comparable(a.0, b.0)
    }

    pub fn meet(&self, a: ChamberId, b: ChamberId) -> ChamberId {
        ChamberId(self.lattice.meet(a.0, b.0))
    }

    pub fn join(&self, a: ChamberId, b: ChamberId) -> ChamberId {
        ChamberId(self.lattice.join(a.0, b.0))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = ChamberId>) -> ChamberId {
        ChamberId(self.lattice.join_all(xs.into_iter().map(|c| c.0)))
    }

    pub fn lower_covers(&self, x: ChamberId) -> Vec<ChamberId> {
        ids(self.lattice.poset().lower_covers(x.0))
    }

    pub fn upper_covers(&self, x: ChamberId) -> Vec<ChamberId> {
        ids(self.lattice.poset().upper_covers(x.0))
    }

    pub fn join_irreducibles(&self) -> Vec<ChamberId> {
        ids(&self.lattice.join_irreducibles())
    }

    pub fn is_join_irreducible(&self, x: ChamberId) -> bool {
        self.lattice.is_join_irreducible(x.0)
    }

    pub fn check_semidistributive(&self) -> Result<(), SemidistributiveWitness> {
        self.lattice.check_semidistributive()
    }

    pub fn gamma(&self, arrow: &CoverArrow) -> Result<ChamberId, LatticeError> {
        self.lattice
            .gamma(arrow.upper.0, arrow.lower.0)
            .map(ChamberId)
    }

    /// γ of every arrow, in arrow order.
    pub fn gammas(&self) -> Vec<Result<ChamberId, LatticeError>> {
        par::map_slice(&self.arrows, |a| self.gamma(a))
    }

    pub fn canonical_join_rep_oracle(&self, x: ChamberId) -> Result<Vec<ChamberId>, LatticeError> {
        self.lattice.canonical_join_rep(x.0).map(|v| ids(&v))
    }
}

fn ids(v: &[usize]) -> Vec<ChamberId> {
    v.iter().copied().map(ChamberId).collect()
}

/// The chambers containing a face, with their extremes in the chamber order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarInterval {
    pub face: FaceId,
    pub min: ChamberId,
    pub max: ChamberId,
    pub chambers: Vec<ChamberId>,
}

/// The star of `face` as an order interval. Fails unless the star has a
/// unique maximum and minimum and coincides with the interval between them.
pub fn star_interval(
    fan: &Fan,
    poset: &ChamberPoset,
    face: FaceId,
) -> Result<StarInterval, LatticeError> {
    let chambers = fan.star(face);
    let mismatch = LatticeError::IntervalMismatch { face };
    let maxes: Vec<ChamberId> = chambers
        .iter()
        .copied()
        .filter(|&c| chambers.iter().all(|&d| poset.leq(d, c)))
        .collect();
    let mins: Vec<ChamberId> = chambers
        .iter()
        .copied()
        .filter(|&c| chambers.iter().all(|&d| poset.leq(c, d)))
        .collect();
    let (&[max], &[min]) = (&maxes[..], &mins[..]) else {
        return Err(mismatch);
    };
    let interval = poset.lattice().poset().interval(min.0, max.0);
    if interval.count_ones(..) != chambers.len() || chambers.iter().any(|c| !interval.contains(c.0))
    {
        return Err(mismatch);
    }
    Ok(StarInterval {
        face,
        min,
        max,
        chambers,
    })
}

/// Shape of a crown: the two maximal chains of a rank-two interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crown {
    /// Chambers strictly between max and min on each side, shorter side first.
    pub chains: [Vec<ChamberId>; 2],
}

impl Crown {
    /// Number of chambers strictly inside each chain.
    pub fn interior_lengths(&self) -> (usize, usize) {
        (self.chains[0].len(), self.chains[1].len())
    }

    /// Number of arrows along each chain.
    pub fn arrow_lengths(&self) -> (usize, usize) {
        (self.chains[0].len() + 1, self.chains[1].len() + 1)
    }
}

/// Checks that the Hasse quiver induced on a star interval consists of two
/// disjoint chains from its maximum to its minimum.
pub fn crown_check(poset: &ChamberPoset, star: &StarInterval) -> Option<Crown> {
    let inside = |c: &ChamberId| star.chambers.binary_search(c).is_ok();
    let down = |c: ChamberId| -> Vec<ChamberId> {
        poset.lower_covers(c).into_iter().filter(inside).collect()
    };
    let up = |c: ChamberId| -> Vec<ChamberId> {
        poset.upper_covers(c).into_iter().filter(inside).collect()
    };
    if star.max == star.min || down(star.max).len() != 2 || up(star.min).len() != 2 {
        return None;
    }
    let mut chains: Vec<Vec<ChamberId>> = Vec::with_capacity(2);
    for start in down(star.max) {
        let mut chain = Vec::new();
        let mut cur = start;
        while cur != star.min {
            if up(cur).len() != 1 {
                return None;
            }
            chain.push(cur);
            match &down(cur)[..] {
                [next] => cur = *next,
                _ => return None,
            }
        }
        chains.push(chain);
    }
    if chains[0].len() + chains[1].len() + 2 != star.chambers.len() {
        return None;
    }
    chains.sort_by_key(Vec::len);
    let second = chains.pop()?;
    let first = chains.pop()?;
    Some(Crown {
        chains: [first, second],
    })
}
