//! Shards of a hyperplane arrangement by the rank-two rule: at each
//! codimension-2 subspace, every hyperplane through it other than the two
//! bounding the region of the base chamber is cut.
//!
//! Independent of the star-interval machinery in the parent module; used to
//! cross-check it on fans that come from arrangements.

use super::{assemble_shards, components, plates, shared_ridge, Shard, ShardError};
use crate::chamber_lattice::ChamberPoset;
use crate::exactgeom::{Hyperplane, IntVec, LinearSystem, Sign};
use crate::fan::{FaceId, Fan};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Shards by the arrangement rule, or [`ShardError::NotAnArrangement`] when
/// some hyperplane is not fully covered by walls.
pub fn arrangement_shards_oracle(fan: &Fan, poset: &ChamberPoset) -> Result<Vec<Shard>, ShardError> {
    let ps = plates(fan);
    let mut per_plane: BTreeMap<&Hyperplane, usize> = BTreeMap::new();
    for p in &ps {
        *per_plane.entry(&p.hyperplane).or_default() += 1;
    }
    if let Some((h, k)) = per_plane.iter().find(|(_, &k)| k != 1) {
        return Err(ShardError::NotAnArrangement(format!(
            "hyperplane {} carries {k} plates",
            h.normal()
        )));
    }
    for p in &ps {
        let mut ridge_count: BTreeMap<FaceId, usize> = BTreeMap::new();
        for &w in &p.walls {
            let wf = fan.wall(w).face;
            for f in fan.face_closure(wf).iter() {
                if fan.face(f).dim() + 2 == fan.dim() {
                    *ridge_count.entry(f).or_default() += 1;
                }
            }
        }
        if let Some((f, k)) = ridge_count.iter().find(|(_, &k)| k != 2) {
            return Err(ShardError::NotAnArrangement(format!(
                "face {} lies on {k} wall(s) of hyperplane {}",
                fan.face_label(*f),
                p.hyperplane.normal()
            )));
        }
    }

    let hyperplanes: Vec<&Hyperplane> = ps.iter().map(|p| &p.hyperplane).collect();
    let base = fan.barycenter(poset.top());
    let mut bounding_cache: BTreeMap<FaceId, BTreeSet<usize>> = BTreeMap::new();
    let mut raw = Vec::new();
    for (pi, plate) in ps.iter().enumerate() {
        let mut uncut = BTreeSet::new();
        for (i, &a) in plate.walls.iter().enumerate() {
            for &b in &plate.walls[i + 1..] {
                let Some(l) = shared_ridge(fan, a, b) else {
                    continue;
                };
                let bounding = bounding_cache
                    .entry(l)
                    .or_insert_with(|| bounding_hyperplanes(fan, &hyperplanes, base, l));
                if bounding.contains(&pi) {
                    uncut.insert((a, b));
                }
            }
        }
        for walls in components(&plate.walls, |a, b| uncut.contains(&(a.min(b), a.max(b)))) {
            raw.push((plate, walls));
        }
    }
    Ok(assemble_shards(fan, raw))
}

/// Indices of the hyperplanes through `face` that bound the region of the
/// rank-two subarrangement at `face` containing `base`.
fn bounding_hyperplanes(
    fan: &Fan,
    hyperplanes: &[&Hyperplane],
    base: &IntVec,
    face: FaceId,
) -> BTreeSet<usize> {
    let span = fan.face_vectors(face);
    let through: Vec<usize> = (0..hyperplanes.len())
        .filter(|&k| span.iter().all(|v| hyperplanes[k].contains(v)))
        .collect();
    let n = fan.dim();
    let row = |v: &IntVec, s: i64| -> Vec<BigRational> {
        v.coords()
            .iter()
            .map(|c| BigRational::from_integer(c * s))
            .collect()
    };
    through
        .iter()
        .copied()
        .filter(|&k| {
            let mut sys = LinearSystem::new(n);
            sys.add_eq(row(hyperplanes[k].normal(), 1), BigRational::zero());
            for &j in &through {
                if j == k {
                    continue;
                }
                let s = match hyperplanes[j].side(base) {
                    Sign::Positive => 1,
                    Sign::Negative => -1,
                    Sign::Zero => return false,
                };
                sys.add_ge(row(hyperplanes[j].normal(), s), BigRational::one());
            }
            sys.feasible(n).0
        })
        .collect()
}
