//! Plates, cutting and shards, and the maps relating shards to
//! join-irreducible chambers.
//!
//! A plate is a connected set of walls in one hyperplane, connected through
//! shared codimension-2 faces. At a codimension-2 face `L`, the basic walls
//! are the walls through `L` that are facets of the maximum or minimum of the
//! star of `L`; a plate holding none of them is cut at `L`. Shards are the
//! components of a plate once the cut adjacencies are removed.

pub mod arrangement;

pub use arrangement::arrangement_shards_oracle;

use crate::chamber_lattice::{star_interval, ChamberPoset, CoverArrow, LatticeError};
use crate::exactgeom::Hyperplane;
use crate::fan::{ChamberId, FaceId, FaceSet, Fan, WallId};
use crate::par;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

id_type!(PlateId);
id_type!(ShardId);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShardError {
    #[error("face {0} does not have codimension two")]
    FaceNotCodim2(FaceId),
    #[error("upper chambers of shard {0} have no unique minimum")]
    NonUniqueMinimum(ShardId),
    #[error("minimal upper chamber {chamber} of shard {shard} is not join-irreducible")]
    NotJoinIrreducible { shard: ShardId, chamber: ChamberId },
    #[error("the fan is not induced by a hyperplane arrangement: {0}")]
    NotAnArrangement(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plate {
    pub id: PlateId,
    pub hyperplane: Hyperplane,
    pub walls: Vec<WallId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shard {
    pub id: ShardId,
    pub plate: PlateId,
    pub hyperplane: Hyperplane,
    pub walls: Vec<WallId>,
    pub faces: FaceSet,
}

/// A plate cut along a codimension-2 face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CutLocus {
    pub plate: PlateId,
    pub face: FaceId,
}

/// Plates, shards and cut loci of a fan, with the shard of every wall.
#[derive(Clone, Debug)]
pub struct ShardSystem {
    plates: Vec<Plate>,
    shards: Vec<Shard>,
    cut_loci: Vec<CutLocus>,
    shard_of_wall: Vec<ShardId>,
    j_of_shard: Vec<Result<ChamberId, ShardError>>,
    upper: Vec<Vec<ChamberId>>,
    lower: Vec<Vec<ChamberId>>,
}

/// Walls grouped by hyperplane, split into components connected through
/// shared codimension-2 faces. Sorted by (normal, smallest wall).
pub fn plates(fan: &Fan) -> Vec<Plate> {
    let mut by_plane: BTreeMap<&Hyperplane, Vec<WallId>> = BTreeMap::new();
    for w in fan.walls() {
        by_plane.entry(&w.hyperplane).or_default().push(w.id);
    }
    let mut out = Vec::new();
    for (h, walls) in by_plane {
        for comp in components(&walls, |a, b| shared_ridge(fan, a, b).is_some()) {
            out.push(Plate {
                id: PlateId(out.len()),
                hyperplane: h.clone(),
                walls: comp,
            });
        }
    }
    out
}

/// The codimension-2 face shared by two walls, if any.
pub(crate) fn shared_ridge(fan: &Fan, a: WallId, b: WallId) -> Option<FaceId> {
    let ra = &fan.face(fan.wall(a).face).rays;
    let rb = &fan.face(fan.wall(b).face).rays;
    let common: Vec<usize> = ra.iter().copied().filter(|r| rb.contains(r)).collect();
    (a != b && common.len() + 2 == fan.dim())
        .then(|| fan.face_id(&common))
        .flatten()
}

/// Connected components of `items` under `adjacent`, each sorted, ordered by
/// smallest element.
pub(crate) fn components<T: Copy + Ord>(
    items: &[T],
    adjacent: impl Fn(T, T) -> bool,
) -> Vec<Vec<T>> {
    let mut seen = vec![false; items.len()];
    let mut out = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![items[start]];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..items.len() {
                if !seen[j] && adjacent(items[i], items[j]) {
                    seen[j] = true;
                    comp.push(items[j]);
                    queue.push_back(j);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out.sort();
    out
}

/// Walls through `face` that are facets of the maximum or minimum chamber of
/// its star.
pub fn basic_walls(
    fan: &Fan,
    poset: &ChamberPoset,
    face: FaceId,
) -> Result<Vec<WallId>, ShardError> {
    if fan.face(face).dim() + 2 != fan.dim() {
        return Err(ShardError::FaceNotCodim2(face));
    }
    let star = star_interval(fan, poset, face)?;
    let mut out: BTreeSet<WallId> = BTreeSet::new();
    for c in [star.max, star.min] {
        for &w in fan.chamber_walls(c) {
            if fan.face_contains(fan.wall(w).face, face) {
                out.insert(w);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Whether `plate` is cut along the codimension-2 face `face`.
pub fn is_cut(
    fan: &Fan,
    poset: &ChamberPoset,
    plate: &Plate,
    face: FaceId,
) -> Result<bool, ShardError> {
    let basic = basic_walls(fan, poset, face)?;
    Ok(!basic.is_empty() && basic.iter().all(|w| !plate.walls.contains(w)))
}

/// Computes all shards of a fan.
pub fn shards(fan: &Fan, poset: &ChamberPoset) -> Result<ShardSystem, ShardError> {
    let plates = plates(fan);
    let per_plate = par::map_slice(&plates, |plate| -> Result<_, ShardError> {
        let mut cut = BTreeSet::new();
        let mut uncut = BTreeSet::new();
        for (i, &a) in plate.walls.iter().enumerate() {
            for &b in &plate.walls[i + 1..] {
                if let Some(l) = shared_ridge(fan, a, b) {
                    if is_cut(fan, poset, plate, l)? {
                        cut.insert(l);
                    } else {
                        uncut.insert((a, b));
                    }
                }
            }
        }
        let comps = if plate.walls.len() == 1 {
            vec![plate.walls.clone()]
        } else {
            components(&plate.walls, |a, b| {
                uncut.contains(&(a.min(b), a.max(b)))
            })
        };
        let loci: Vec<CutLocus> = cut
            .into_iter()
            .map(|face| CutLocus {
                plate: plate.id,
                face,
            })
            .collect();
        Ok((comps, loci))
    });

    let mut raw = Vec::new();
    let mut cut_loci = Vec::new();
    for (plate, result) in plates.iter().zip(per_plate) {
        let (comps, loci) = result?;
        cut_loci.extend(loci);
        for walls in comps {
            raw.push((plate, walls));
        }
    }
    let shards = assemble_shards(fan, raw);
    Ok(ShardSystem::new(fan, poset, plates, shards, cut_loci))
}

/// Turns wall components into shards sorted by (normal, smallest wall).
pub(crate) fn assemble_shards(fan: &Fan, mut raw: Vec<(&Plate, Vec<WallId>)>) -> Vec<Shard> {
    raw.sort_by(|a, b| (&a.0.hyperplane, a.1[0]).cmp(&(&b.0.hyperplane, b.1[0])));
    raw.into_iter()
        .enumerate()
        .map(|(i, (plate, walls))| {
            let mut faces = FaceSet::empty(fan.enumerate_faces().len());
            for &w in &walls {
                faces.union_with(fan.face_closure(fan.wall(w).face));
            }
            Shard {
                id: ShardId(i),
                plate: plate.id,
                hyperplane: plate.hyperplane.clone(),
                walls,
                faces,
            }
        })
        .collect()
}

impl ShardSystem {
    fn new(
        fan: &Fan,
        poset: &ChamberPoset,
        plates: Vec<Plate>,
        shards: Vec<Shard>,
        cut_loci: Vec<CutLocus>,
    ) -> Self {
        let mut shard_of_wall = vec![ShardId(usize::MAX); fan.walls().len()];
        for s in &shards {
            for &w in &s.walls {
                shard_of_wall[w.0] = s.id;
            }
        }
        let (upper, lower): (Vec<_>, Vec<_>) = shards
            .iter()
            .map(|s| upper_lower(poset, s))
            .unzip();
        let j_of_shard = shards
            .iter()
            .zip(&upper)
            .map(|(s, up)| min_upper(poset, s.id, up))
            .collect();
        ShardSystem {
            plates,
            shards,
            cut_loci,
            shard_of_wall,
            j_of_shard,
            upper,
            lower,
        }
    }

    pub fn plates(&self) -> &[Plate] {
        &self.plates
    }

    pub fn shards(&self) -> &[Shard] {
        &self.shards
    }

    pub fn shard(&self, s: ShardId) -> &Shard {
        &self.shards[s.0]
    }

    pub fn len(&self) -> usize {
        self.shards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shards.is_empty()
    }

    pub fn cut_loci(&self) -> &[CutLocus] {
        &self.cut_loci
    }

    pub fn shard_of_wall(&self, w: WallId) -> ShardId {
        self.shard_of_wall[w.0]
    }

    /// Σ of a Hasse arrow: the shard containing its wall.
    pub fn shard_of_cover(&self, arrow: &CoverArrow) -> ShardId {
        self.shard_of_wall(arrow.wall)
    }

    /// Chambers with a facet in the shard on the positive side, ascending.
    pub fn upper(&self, s: ShardId) -> &[ChamberId] {
        &self.upper[s.0]
    }

    /// Chambers with a facet in the shard on the negative side, ascending.
    pub fn lower(&self, s: ShardId) -> &[ChamberId] {
        &self.lower[s.0]
    }

    /// J of a shard: the minimum of its upper chambers.
    pub fn j_of_shard(&self, s: ShardId) -> Result<ChamberId, ShardError> {
        self.j_of_shard[s.0].clone()
    }

    /// Shards having `r` as an upper chamber, ascending.
    pub fn lower_shards(&self, poset: &ChamberPoset, r: ChamberId) -> Vec<ShardId> {
        let mut out: Vec<ShardId> = poset
            .lower_covers(r)
            .into_iter()
            .filter_map(|l| poset.arrow(r, l))
            .map(|a| self.shard_of_cover(a))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `{J(Σ) : Σ a lower shard of r}`, ascending.
    pub fn canonical_join_via_shards(
        &self,
        poset: &ChamberPoset,
        r: ChamberId,
    ) -> Result<Vec<ChamberId>, ShardError> {
        let mut out = self
            .lower_shards(poset, r)
            .into_iter()
            .map(|s| self.j_of_shard(s))
            .collect::<Result<Vec<_>, _>>()?;
        out.sort();
        Ok(out)
    }
}

/// Up and Lo of a shard, read off the orientation of its walls.
pub fn upper_lower(poset: &ChamberPoset, shard: &Shard) -> (Vec<ChamberId>, Vec<ChamberId>) {
    let mut up: Vec<ChamberId> = shard
        .walls
        .iter()
        .map(|&w| poset.arrow_of_wall(w).upper)
        .collect();
    let mut lo: Vec<ChamberId> = shard
        .walls
        .iter()
        .map(|&w| poset.arrow_of_wall(w).lower)
        .collect();
    up.sort();
    up.dedup();
    lo.sort();
    lo.dedup();
    (up, lo)
}

fn min_upper(poset: &ChamberPoset, s: ShardId, up: &[ChamberId]) -> Result<ChamberId, ShardError> {
    let mins: Vec<ChamberId> = up
        .iter()
        .copied()
        .filter(|&c| up.iter().all(|&d| poset.leq(c, d)))
        .collect();
    let [j] = mins[..] else {
        return Err(ShardError::NonUniqueMinimum(s));
    };
    if !poset.is_join_irreducible(j) {
        return Err(ShardError::NotJoinIrreducible { shard: s, chamber: j });
    }
    Ok(j)
}

/// Checks `J∘Σ = id` on join-irreducibles, `Σ∘J = id` on shards and
/// `γ = J∘Σ` on every arrow. Returns one message per violation.
pub fn verify_jirr_shard_bijection(poset: &ChamberPoset, sys: &ShardSystem) -> Vec<String> {
    let mut violations = Vec::new();
    let sigma_of_jirr = |j: ChamberId| -> ShardId {
        let lower = poset.lower_covers(j)[0];
        sys.shard_of_cover(poset.arrow(j, lower).expect("cover has an arrow"))
    };
    let jirr = poset.join_irreducibles();
    if jirr.len() != sys.len() {
        violations.push(format!(
            "{} join-irreducibles but {} shards",
            jirr.len(),
            sys.len()
        ));
    }
    for &j in &jirr {
        let s = sigma_of_jirr(j);
        match sys.j_of_shard(s) {
            Ok(back) if back == j => {}
            Ok(back) => violations.push(format!("J(Σ({j})) = {back}, expected {j}")),
            Err(e) => violations.push(format!("J(Σ({j})): {e}")),
        }
    }
    for s in sys.shards() {
        match sys.j_of_shard(s.id) {
            Ok(j) if poset.is_join_irreducible(j) => {
                if sigma_of_jirr(j) != s.id {
                    violations.push(format!("Σ(J(shard {})) = shard {}", s.id, sigma_of_jirr(j)));
                }
            }
            Ok(j) => violations.push(format!("J(shard {}) = {j} is not join-irreducible", s.id)),
            Err(e) => violations.push(e.to_string()),
        }
    }
    for (arrow, gamma) in poset.arrows().iter().zip(poset.gammas()) {
        let via = sys.j_of_shard(sys.shard_of_cover(arrow));
        match (gamma, via) {
            (Ok(g), Ok(j)) if g == j => {}
            (g, j) => violations.push(format!(
                "arrow {} -> {}: γ = {g:?}, J∘Σ = {j:?}",
                arrow.upper, arrow.lower
            )),
        }
    }
    violations
}

/// Compares the shard-based canonical join representation with the
/// brute-force oracle on every chamber.
pub fn verify_cjr_via_shards(poset: &ChamberPoset, sys: &ShardSystem) -> Vec<String> {
    par::flat_map_range(poset.len(), |i| {
        let r = ChamberId(i);
        let via = match sys.canonical_join_via_shards(poset, r) {
            Ok(v) => v,
            Err(e) => return vec![format!("chamber {r}: {e}")],
        };
        let mut out = Vec::new();
        if poset.join_all(via.iter().copied()) != r {
            out.push(format!("chamber {r}: shard labels {via:?} do not join to it"));
        }
        match poset.canonical_join_rep_oracle(r) {
            Ok(mut oracle) => {
                oracle.sort();
                if oracle != via {
                    out.push(format!("chamber {r}: shards give {via:?}, oracle {oracle:?}"));
                }
            }
            Err(e) => out.push(format!("chamber {r}: {e}")),
        }
        out
    })
}

/// Checks that a shard's walls are connected through shared codimension-2
/// faces and that adjacent walls have comparable upper chambers and
/// comparable lower chambers.
pub fn shard_wall_connectivity_check(
    fan: &Fan,
    poset: &ChamberPoset,
    shard: &Shard,
) -> Result<(), String> {
    let comps = components(&shard.walls, |a, b| shared_ridge(fan, a, b).is_some());
    if comps.len() != 1 {
        return Err(format!(
            "shard {} splits into {} wall components",
            shard.id,
            comps.len()
        ));
    }
    for (i, &a) in shard.walls.iter().enumerate() {
        for &b in &shard.walls[i + 1..] {
            if shared_ridge(fan, a, b).is_none() {
                continue;
            }
            let (pa, pb) = (poset.arrow_of_wall(a), poset.arrow_of_wall(b));
            if !poset.comparable(pa.upper, pb.upper) || !poset.comparable(pa.lower, pb.lower) {
                return Err(format!(
                    "shard {}: walls {a} and {b} have incomparable upper or lower chambers",
                    shard.id
                ));
            }
        }
    }
    Ok(())
}
