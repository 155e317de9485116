//! Intersections of shards, ordered by containment, and their relation to
//! the core label order on chambers.
//!
//! Every intersection is a face-closed [`FaceSet`]; the whole space is the
//! full face set. The lattice is enumerated as the image of the chamber map
//! `R ↦ ⋂ Σ(R ⋗ R′)` and then certified closed under pairwise intersection.

use crate::chamber_lattice::{star_interval, ChamberPoset, LatticeError};
pub use crate::fan::FaceSet;
use crate::fan::{ChamberId, FaceId, Fan};
use crate::par;
use crate::shard_engine::{ShardId, ShardSystem};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// A face set together with shards realizing it. No generators means the
/// whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShardIntersection {
    pub faces: FaceSet,
    pub generators: Vec<ShardId>,
}

impl ShardIntersection {
    /// Largest face dimension present; the whole space has dimension `n`.
    pub fn dim(&self, fan: &Fan) -> usize {
        if self.faces.len() == fan.enumerate_faces().len() {
            return fan.dim();
        }
        self.faces
            .iter()
            .map(|f| fan.face(f).dim())
            .max()
            .unwrap_or(0)
    }

    pub fn label(&self) -> String {
        let ids: Vec<usize> = self.generators.iter().map(|s| s.0).collect();
        crate::fan::tuple_label(&ids)
    }
}

pub fn intersect_shards(fan: &Fan, sys: &ShardSystem, ids: &[ShardId]) -> ShardIntersection {
    let mut faces = fan.all_faces();
    for &s in ids {
        faces.intersect_with(&sys.shard(s).faces);
    }
    let mut generators = ids.to_vec();
    generators.sort();
    generators.dedup();
    ShardIntersection { faces, generators }
}

/// `⋂ Σ(R ⋗ R′)` over the lower covers of `r`; the whole space at the bottom.
pub fn s_of_chamber(
    fan: &Fan,
    poset: &ChamberPoset,
    sys: &ShardSystem,
    r: ChamberId,
) -> ShardIntersection {
    intersect_shards(fan, sys, &sys.lower_shards(poset, r))
}

pub fn si_leq(a: &ShardIntersection, b: &ShardIntersection) -> bool {
    a.faces.is_subset(&b.faces)
}

/// `{γ(T ⋗ T′) : R↓ ≤ T′ ⋖ T ≤ R}` where `R↓` is the meet of the lower
/// covers of `r`. Empty at the bottom.
pub fn core_label_set(poset: &ChamberPoset, gammas: &[ChamberId], r: ChamberId) -> Vec<ChamberId> {
    let covers = poset.lower_covers(r);
    if covers.is_empty() {
        return Vec::new();
    }
    let r_down = covers
        .iter()
        .copied()
        .reduce(|a, b| poset.meet(a, b))
        .expect("nonempty");
    let mut out: Vec<ChamberId> = poset
        .arrows()
        .iter()
        .zip(gammas)
        .filter(|(a, _)| poset.leq(a.upper, r) && poset.leq(r_down, a.lower))
        .map(|(_, &g)| g)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The shard intersection lattice, indexed by chamber through `𝕊`.
#[derive(Clone, Debug)]
pub struct ShardIntersectionLattice {
    elements: Vec<ShardIntersection>,
    core_labels: Vec<Vec<ChamberId>>,
    dims: Vec<usize>,
    ranks: Vec<usize>,
    contained_in: Vec<FixedBitSet>,
    hasse: Vec<(ChamberId, ChamberId)>,
    violations: Vec<String>,
}

/// Computes `𝕊(R)` for every chamber and certifies that the image is the
/// full intersection closure of the shards. Failures of that certificate
/// are collected in [`ShardIntersectionLattice::violations`].
pub fn enumerate_shard_intersections(
    fan: &Fan,
    poset: &ChamberPoset,
    sys: &ShardSystem,
) -> Result<ShardIntersectionLattice, LatticeError> {
    let gammas = poset.gammas().into_iter().collect::<Result<Vec<_>, _>>()?;
    let n = poset.len();
    let elements: Vec<ShardIntersection> =
        par::map_range(n, |i| s_of_chamber(fan, poset, sys, ChamberId(i)));
    let core_labels: Vec<Vec<ChamberId>> =
        par::map_range(n, |i| core_label_set(poset, &gammas, ChamberId(i)));
    let dims = elements.iter().map(|e| e.dim(fan)).collect();
    let ranks = (0..n)
        .map(|i| poset.lower_covers(ChamberId(i)).len())
        .collect();
    let contained_in: Vec<FixedBitSet> = par::map_range(n, |i| {
        let mut s = FixedBitSet::with_capacity(n);
        for j in 0..n {
            if si_leq(&elements[i], &elements[j]) {
                s.insert(j);
            }
        }
        s
    });

    let mut violations = Vec::new();
    let mut index: HashMap<&FaceSet, ChamberId> = HashMap::new();
    for (i, e) in elements.iter().enumerate() {
        if let Some(prev) = index.insert(&e.faces, ChamberId(i)) {
            violations.push(format!("chambers {prev} and {i} have the same shard intersection"));
        }
    }
    if !index.contains_key(&fan.all_faces()) {
        violations.push("the whole space is not an image".into());
    }
    for s in sys.shards() {
        if !index.contains_key(&s.faces) {
            violations.push(format!("shard {} is not an image", s.id));
        }
    }
    let missing = par::flat_map_range(n, |i| {
        (i + 1..n)
            .filter(|&j| !index.contains_key(&elements[i].faces.intersection(&elements[j].faces)))
            .map(|j| format!("𝕊({i}) ∩ 𝕊({j}) is not an image"))
            .collect()
    });
    violations.extend(missing);

    let hasse = par::flat_map_range(n, |big| {
        let below: Vec<usize> = (0..n)
            .filter(|&s| s != big && contained_in[s].contains(big))
            .collect();
        below
            .iter()
            .copied()
            .filter(|&small| {
                !below
                    .iter()
                    .any(|&mid| mid != small && contained_in[small].contains(mid))
            })
            .map(|small| (ChamberId(big), ChamberId(small)))
            .collect()
    });

    Ok(ShardIntersectionLattice {
        elements,
        core_labels,
        dims,
        ranks,
        contained_in,
        hasse,
        violations,
    })
}

impl ShardIntersectionLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `𝕊(r)`.
    pub fn element(&self, r: ChamberId) -> &ShardIntersection {
        &self.elements[r.0]
    }

    pub fn elements(&self) -> &[ShardIntersection] {
        &self.elements
    }

    pub fn core_labels(&self, r: ChamberId) -> &[ChamberId] {
        &self.core_labels[r.0]
    }

    pub fn dim(&self, r: ChamberId) -> usize {
        self.dims[r.0]
    }

    /// Number of lower covers of `r`.
    pub fn rank(&self, r: ChamberId) -> usize {
        self.ranks[r.0]
    }

    /// `𝕊(a) ⊆ 𝕊(b)`.
    pub fn si_leq(&self, a: ChamberId, b: ChamberId) -> bool {
        self.contained_in[a.0].contains(b.0)
    }

    /// Core label order: containment of core label sets.
    pub fn clo_leq(&self, a: ChamberId, b: ChamberId) -> bool {
        let lb = &self.core_labels[b.0];
        self.core_labels[a.0]
            .iter()
            .all(|x| lb.binary_search(x).is_ok())
    }

    /// Containment covers as `(larger, smaller)` pairs, sorted.
    pub fn hasse(&self) -> &[(ChamberId, ChamberId)] {
        &self.hasse
    }

    /// Failures of injectivity, completeness or pairwise closure.
    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

/// Checks `𝕊(R) ⊆ 𝕊(T) ⇔ CL(R) ⊇ CL(T)` for all pairs and
/// `CL(R) = {J(Σ) : 𝕊(R) ⊆ Σ}` for every chamber.
pub fn verify_anti_isomorphism(sys: &ShardSystem, si: &ShardIntersectionLattice) -> Vec<String> {
    let n = si.len();
    let mut out = par::flat_map_range(n, |i| {
        (0..n)
            .filter(|&j| si.si_leq(ChamberId(i), ChamberId(j)) != si.clo_leq(ChamberId(j), ChamberId(i)))
            .map(|j| format!("pair ({i}, {j}): containment and core labels disagree"))
            .collect()
    });
    for i in 0..n {
        let r = ChamberId(i);
        let mut via: Vec<ChamberId> = sys
            .shards()
            .iter()
            .filter(|s| si.element(r).faces.is_subset(&s.faces))
            .filter_map(|s| sys.j_of_shard(s.id).ok())
            .collect();
        via.sort();
        if via != si.core_labels(r) {
            out.push(format!(
                "chamber {i}: core labels {:?}, shards above give {via:?}",
                si.core_labels(r)
            ));
        }
    }
    out
}

/// `Γ(U)`: the intersection of `Σ(max ⋗ T)` over the lower covers `T` of the
/// star maximum that stay inside the star interval of `face`.
pub fn gamma_of_face(
    fan: &Fan,
    poset: &ChamberPoset,
    sys: &ShardSystem,
    face: FaceId,
) -> Result<ShardIntersection, LatticeError> {
    let star = star_interval(fan, poset, face)?;
    let ids: Vec<ShardId> = poset
        .lower_covers(star.max)
        .into_iter()
        .filter(|&t| poset.leq(star.min, t))
        .filter_map(|t| poset.arrow(star.max, t))
        .map(|a| sys.shard_of_cover(a))
        .collect();
    Ok(intersect_shards(fan, sys, &ids))
}

/// For every face `U` of positive codimension: `Γ(U)` equals the
/// intersection of all shards containing `U`, and every shard intersection
/// of the same dimension containing `U` equals `Γ(U)`.
pub fn verify_containing_shard(
    fan: &Fan,
    poset: &ChamberPoset,
    sys: &ShardSystem,
    si: &ShardIntersectionLattice,
) -> Vec<String> {
    let faces: Vec<FaceId> = fan
        .enumerate_faces()
        .iter()
        .filter(|f| f.dim() < fan.dim())
        .map(|f| f.id)
        .collect();
    par::map_slice(&faces, |&u| {
        let mut out = Vec::new();
        let label = fan.face_label(u);
        let gamma = match gamma_of_face(fan, poset, sys, u) {
            Ok(g) => g,
            Err(e) => return vec![format!("face {label}: {e}")],
        };
        let containing: Vec<ShardId> = sys
            .shards()
            .iter()
            .filter(|s| s.faces.contains(u))
            .map(|s| s.id)
            .collect();
        if intersect_shards(fan, sys, &containing).faces != gamma.faces {
            out.push(format!(
                "face {label}: Γ differs from the intersection of the shards containing it"
            ));
        }
        let du = fan.face(u).dim();
        for (i, e) in si.elements().iter().enumerate() {
            if e.faces.contains(u) && si.dim(ChamberId(i)) == du && e.faces != gamma.faces {
                out.push(format!(
                    "face {label}: 𝕊({i}) has its dimension and contains it but differs from Γ"
                ));
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Checks that every containment cover changes the rank by exactly one and
/// that `dim 𝕊(R) + rank 𝕊(R) = n`.
pub fn rank_and_gradedness(fan: &Fan, si: &ShardIntersectionLattice) -> Vec<String> {
    let mut out = Vec::new();
    for &(big, small) in si.hasse() {
        if si.rank(small) != si.rank(big) + 1 {
            out.push(format!(
                "cover 𝕊({big}) ⊃ 𝕊({small}) has ranks {} and {}",
                si.rank(big),
                si.rank(small)
            ));
        }
    }
    for i in 0..si.len() {
        let r = ChamberId(i);
        if si.dim(r) + si.rank(r) != fan.dim() {
            out.push(format!(
                "chamber {i}: dim {} + rank {} ≠ {}",
                si.dim(r),
                si.rank(r),
                fan.dim()
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders_io::generators::{gen_coxeter_a, gen_orthant, gen_fa2};
    use crate::chamber_lattice::orient_hasse;
    use crate::exactgeom::IntVec;
    use crate::fan::validate_fan;
    use crate::shard_engine::shards;
    use crate::FanDocument;

    struct Setup {
        fan: Fan,
        poset: ChamberPoset,
        sys: ShardSystem,
        si: ShardIntersectionLattice,
    }

    fn setup(doc: FanDocument) -> Setup {
        let fan = validate_fan(&doc).unwrap();
        let poset = orient_hasse(&fan).unwrap();
        let sys = shards(&fan, &poset).unwrap();
        let si = enumerate_shard_intersections(&fan, &poset, &sys).unwrap();
        Setup { fan, poset, sys, si }
    }

    fn chamber(fan: &Fan, rays: &[usize]) -> ChamberId {
        let f = fan.face_id(rays).unwrap();
        fan.chamber_ids().find(|&c| fan.chamber_face(c) == f).unwrap()
    }

    fn face_set(fan: &Fan, faces: &[&[usize]]) -> FaceSet {
        let mut s = FaceSet::empty(fan.enumerate_faces().len());
        for f in faces {
            s.insert(fan.face_id(f).unwrap());
        }
        s
    }

    fn shard_with_normal(sys: &ShardSystem, n: &[i64]) -> ShardId {
        sys.shards()
            .iter()
            .find(|s| s.hyperplane.normal() == &IntVec::from_i64s(n))
            .unwrap()
            .id
    }

    #[test]
    fn fa2_intersections() {
        let Setup { fan, poset, sys, si } = setup(gen_fa2());
        let x = shard_with_normal(&sys, &[0, 1]);
        let y = shard_with_normal(&sys, &[1, 0]);
        let d = shard_with_normal(&sys, &[1, 1]);
        assert_eq!(intersect_shards(&fan, &sys, &[x, y]).faces, face_set(&fan, &[&[]]));
        assert_eq!(intersect_shards(&fan, &sys, &[]).faces.len(), 11);
        assert_eq!(
            intersect_shards(&fan, &sys, &[d]).faces,
            face_set(&fan, &[&[], &[2]])
        );

        let c = |r: &[usize]| chamber(&fan, r);
        assert_eq!(s_of_chamber(&fan, &poset, &sys, c(&[0, 1])).faces, face_set(&fan, &[&[]]));
        assert_eq!(s_of_chamber(&fan, &poset, &sys, c(&[3, 4])).faces.len(), 11);
        assert_eq!(
            s_of_chamber(&fan, &poset, &sys, c(&[1, 2])).faces,
            face_set(&fan, &[&[], &[2]])
        );

        assert_eq!(si.len(), 5);
        assert!(si.violations().is_empty());
        assert_eq!(si.hasse().len(), 6);
        let top = c(&[0, 1]);
        assert!(si.si_leq(top, c(&[0, 4])));
        assert!(!si.si_leq(c(&[0, 4]), c(&[2, 3])));
        for r in fan.chamber_ids() {
            assert!(si.si_leq(r, poset.bottom()));
        }

        let jirr = {
            let mut v = vec![c(&[0, 4]), c(&[1, 2]), c(&[2, 3])];
            v.sort();
            v
        };
        assert_eq!(si.core_labels(top), &jirr[..]);
        assert_eq!(si.core_labels(c(&[1, 2])), &[c(&[1, 2])][..]);
        for &j in &jirr {
            assert_eq!(si.core_labels(j), &[j][..]);
        }

        assert!(verify_anti_isomorphism(&sys, &si).is_empty());

        let ray = fan.face_id(&[2]).unwrap();
        assert_eq!(gamma_of_face(&fan, &poset, &sys, ray).unwrap().faces, sys.shard(d).faces);
        assert_eq!(
            gamma_of_face(&fan, &poset, &sys, fan.origin()).unwrap().faces,
            face_set(&fan, &[&[]])
        );
        let chamber_gamma = gamma_of_face(&fan, &poset, &sys, fan.chamber_face(top)).unwrap();
        assert_eq!(chamber_gamma.faces, fan.all_faces());
        assert!(verify_containing_shard(&fan, &poset, &sys, &si).is_empty());

        let mut ranks: Vec<usize> = fan.chamber_ids().map(|r| si.rank(r)).collect();
        ranks.sort();
        assert_eq!(ranks, vec![0, 1, 1, 1, 2]);
        assert!(rank_and_gradedness(&fan, &si).is_empty());
    }

    #[test]
    fn orthant_boolean() {
        let Setup { fan, poset, sys, si } = setup(gen_orthant(3));
        assert_eq!(si.len(), 8);
        assert!(si.violations().is_empty());
        for r in fan.chamber_ids() {
            let negatives = fan
                .barycenter(r)
                .coords()
                .iter()
                .filter(|x| x.sign() == num_bigint::Sign::Minus)
                .count();
            assert_eq!(si.rank(r), 3 - negatives);
            assert_eq!(si.dim(r), negatives);
        }
        assert!(verify_anti_isomorphism(&sys, &si).is_empty());
        assert!(rank_and_gradedness(&fan, &si).is_empty());
        // Γ(e3) is the z-axis: the intersection of the x = 0 and y = 0 planes.
        let e3 = fan.face_id(&[2]).unwrap();
        let g = gamma_of_face(&fan, &poset, &sys, e3).unwrap();
        assert_eq!(g.dim(&fan), 1);
        assert_eq!(g.faces.len(), 3);
        assert!(verify_containing_shard(&fan, &poset, &sys, &si).is_empty());
    }

    #[test]
    fn coxeter_counts() {
        let a2 = setup(gen_coxeter_a(2));
        assert_eq!(a2.si.len(), 6);
        assert!(a2.si.violations().is_empty());
        let a3 = setup(gen_coxeter_a(3));
        assert_eq!(a3.si.len(), 24);
        assert!(a3.si.violations().is_empty());
        assert!(verify_anti_isomorphism(&a3.sys, &a3.si).is_empty());
        assert!(rank_and_gradedness(&a3.fan, &a3.si).is_empty());
        let mut ranks: Vec<usize> = a3.fan.chamber_ids().map(|r| a3.si.rank(r)).collect();
        ranks.dedup();
        ranks.sort();
        ranks.dedup();
        assert_eq!(ranks, vec![0, 1, 2, 3]);
    }

    #[test]
    fn join_irreducibles_map_to_their_shard() {
        let Setup { fan, poset, sys, si } = setup(gen_coxeter_a(3));
        for j in poset.join_irreducibles() {
            let lower = poset.lower_covers(j)[0];
            let s = sys.shard_of_cover(poset.arrow(j, lower).unwrap());
            assert_eq!(si.element(j).faces, sys.shard(s).faces);
        }
        assert_eq!(si.element(poset.bottom()).faces, fan.all_faces());
        assert_eq!(si.element(poset.top()).faces.len(), 1);
    }
}
