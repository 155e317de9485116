//! Complete simplicial nonsingular fans: validation, faces, walls and stars.
//!
//! Faces are identified with the sets of ray indices spanning them. That
//! identification is only sound for a face-to-face fan, which
//! [`validate_fan`] checks exactly rather than assumes.

use crate::builders_io::document::FanDocument;
use crate::exactgeom::{self, det_sign, Hyperplane, IntVec, RatVec};
use crate::par;
use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use thiserror::Error;

id_type!(ChamberId);
id_type!(FaceId);
id_type!(WallId);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("malformed fan description: {0}")]
    Malformed(String),
    #[error("ray {0} is not primitive")]
    RayNotPrimitive(usize),
    #[error("rays {0} and {1} are positively proportional")]
    DuplicateRay(usize, usize),
    #[error("chambers {0} and {1} have the same rays")]
    DuplicateChamber(usize, usize),
    #[error("chamber {chamber} is not unimodular (|det| = {abs_det})")]
    NotUnimodular { chamber: usize, abs_det: BigInt },
    #[error("the identity chamber spanned by the unit vectors is missing")]
    MissingIdentityChamber,
    #[error("the negated identity chamber is missing")]
    MissingNegatedChamber,
    #[error("wall {wall:?} lies in {} chamber(s) {chambers:?}, expected exactly two", chambers.len())]
    WallNotTwoChambers {
        wall: Vec<usize>,
        chambers: Vec<usize>,
    },
    #[error("the chamber adjacency graph is disconnected")]
    DisconnectedDualGraph,
    #[error("chambers {0} and {1} meet beyond their common face")]
    NotFaceToFace(usize, usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("rays {0:?} do not span a face of the fan")]
    FaceNotInFan(Vec<usize>),
}

/// A cone of the fan, given by its sorted ray indices. The empty set is the
/// origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub rays: Vec<usize>,
}

impl Face {
    pub fn dim(&self) -> usize {
        self.rays.len()
    }
}

/// A codimension-one cone together with its two chambers and its hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub id: WallId,
    pub face: FaceId,
    pub chambers: [ChamberId; 2],
    pub hyperplane: Hyperplane,
}

/// A face-closed set of faces of a fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSet(FixedBitSet);

impl FaceSet {
    pub fn empty(num_faces: usize) -> Self {
        FaceSet(FixedBitSet::with_capacity(num_faces))
    }

    pub fn full(num_faces: usize) -> Self {
        let mut b = FixedBitSet::with_capacity(num_faces);
        b.insert_range(..);
        FaceSet(b)
    }

    pub fn insert(&mut self, f: FaceId) {
        self.0.insert(f.0);
    }

    pub fn contains(&self, f: FaceId) -> bool {
        self.0.contains(f.0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union_with(&mut self, other: &FaceSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &FaceSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.0.ones().map(FaceId)
    }
}

/// Options for the sampling diagnostic of [`validate_fan_with`].
#[derive(Clone, Copy, Debug)]
pub struct ValidationOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            samples: 100,
            seed: 0,
        }
    }
}

/// A validated complete nonsingular fan containing the identity chamber and
/// its negative. Immutable.
#[derive(Clone, Debug)]
pub struct Fan {
    name: Option<String>,
    dim: usize,
    rays: Vec<IntVec>,
    chambers: Vec<Vec<usize>>,
    faces: Vec<Face>,
    face_index: HashMap<Vec<usize>, FaceId>,
    closures: Vec<FaceSet>,
    chamber_face: Vec<FaceId>,
    chamber_walls: Vec<Vec<WallId>>,
    walls: Vec<Wall>,
    wall_of_face: Vec<Option<WallId>>,
    barycenters: Vec<IntVec>,
    identity: ChamberId,
    negated: ChamberId,
}

pub fn validate_fan(doc: &FanDocument) -> Result<Fan, FanError> {
    validate_fan_with(doc, ValidationOptions::default())
}

pub fn validate_fan_with(doc: &FanDocument, opts: ValidationOptions) -> Result<Fan, FanError> {
    doc.check_schema()
        .map_err(|e| FanError::Malformed(e.to_string()))?;
    let dim = doc.dim;
    let rays: Vec<IntVec> = doc.rays.iter().map(|r| IntVec::from_i64s(r)).collect();

    for (i, r) in rays.iter().enumerate() {
        if !r.is_primitive() {
            return Err(FanError::RayNotPrimitive(i));
        }
    }
    let mut ray_lookup: HashMap<&IntVec, usize> = HashMap::new();
    for (i, r) in rays.iter().enumerate() {
        if let Some(&j) = ray_lookup.get(r) {
            return Err(FanError::DuplicateRay(j, i));
        }
        ray_lookup.insert(r, i);
    }

    let mut chambers = Vec::with_capacity(doc.chambers.len());
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (c, raw) in doc.chambers.iter().enumerate() {
        let mut s = raw.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != dim {
            return Err(FanError::Malformed(format!(
                "chamber {c} repeats a ray index"
            )));
        }
        if let Some(&prev) = seen.get(&s) {
            return Err(FanError::DuplicateChamber(prev, c));
        }
        seen.insert(s.clone(), c);
        chambers.push(s);
    }

    for (c, ch) in chambers.iter().enumerate() {
        let cols: Vec<IntVec> = ch.iter().map(|&k| rays[k].clone()).collect();
        let (_, abs_det) = det_sign(&cols);
        if !abs_det.is_one() {
            return Err(FanError::NotUnimodular { chamber: c, abs_det });
        }
    }

    let find_chamber = |vectors: Vec<IntVec>| -> Option<usize> {
        let mut idx: Vec<usize> = vectors
            .iter()
            .map(|v| ray_lookup.get(v).copied())
            .collect::<Option<_>>()?;
        idx.sort_unstable();
        seen.get(&idx).copied()
    };
    let identity = find_chamber((0..dim).map(|i| IntVec::unit(dim, i)).collect())
        .ok_or(FanError::MissingIdentityChamber)?;
    let negated = find_chamber((0..dim).map(|i| IntVec::unit(dim, i).neg()).collect())
        .ok_or(FanError::MissingNegatedChamber)?;

    // Walls: every facet of a chamber must lie in exactly two chambers.
    let mut facet_map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (c, ch) in chambers.iter().enumerate() {
        for skip in 0..dim {
            let facet: Vec<usize> = ch
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &r)| r)
                .collect();
            facet_map.entry(facet).or_default().push(c);
        }
    }
    for (facet, owners) in &facet_map {
        if owners.len() != 2 {
            return Err(FanError::WallNotTwoChambers {
                wall: facet.clone(),
                chambers: owners.clone(),
            });
        }
    }

    // Dual graph connectivity.
    let mut adj = vec![Vec::new(); chambers.len()];
    for owners in facet_map.values() {
        adj[owners[0]].push(owners[1]);
        adj[owners[1]].push(owners[0]);
    }
    let mut visited = vec![false; chambers.len()];
    let mut queue = VecDeque::from([identity]);
    visited[identity] = true;
    while let Some(c) = queue.pop_front() {
        for &d in &adj[c] {
            if !visited[d] {
                visited[d] = true;
                queue.push_back(d);
            }
        }
    }
    if visited.iter().any(|v| !v) {
        return Err(FanError::DisconnectedDualGraph);
    }

    // Face-to-face: no two chambers meet beyond their common face.
    let ray_sets: Vec<Vec<IntVec>> = chambers
        .iter()
        .map(|ch| ch.iter().map(|&k| rays[k].clone()).collect())
        .collect();
    let bad_pairs = par::flat_map_range(chambers.len(), |i| {
        let mut bad = Vec::new();
        for j in i + 1..chambers.len() {
            let common: Vec<IntVec> = chambers[i]
                .iter()
                .filter(|k| chambers[j].contains(k))
                .map(|&k| rays[k].clone())
                .collect();
            if exactgeom::cones_meet_beyond_common_face(&ray_sets[i], &ray_sets[j], &common) {
                bad.push((i, j));
            }
        }
        bad
    });
    if let Some(&(i, j)) = bad_pairs.first() {
        return Err(FanError::NotFaceToFace(i, j));
    }

    // Faces, sorted by dimension then lexicographically.
    let mut face_sets: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for ch in &chambers {
        for mask in 0u32..(1 << dim) {
            let f: Vec<usize> = ch
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &r)| r)
                .collect();
            face_sets.insert((f.len(), f));
        }
    }
    let faces: Vec<Face> = face_sets
        .into_iter()
        .enumerate()
        .map(|(i, (_, rays))| Face {
            id: FaceId(i),
            rays,
        })
        .collect();
    let face_index: HashMap<Vec<usize>, FaceId> =
        faces.iter().map(|f| (f.rays.clone(), f.id)).collect();
    let closures: Vec<FaceSet> = faces
        .iter()
        .map(|f| {
            let mut s = FaceSet::empty(faces.len());
            for mask in 0u32..(1 << f.rays.len()) {
                let sub: Vec<usize> = f
                    .rays
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &r)| r)
                    .collect();
                s.insert(face_index[&sub]);
            }
            s
        })
        .collect();
    let chamber_face: Vec<FaceId> = chambers.iter().map(|ch| face_index[ch]).collect();

    let mut walls = Vec::with_capacity(facet_map.len());
    let mut wall_of_face = vec![None; faces.len()];
    let mut chamber_walls = vec![Vec::new(); chambers.len()];
    for (facet, owners) in &facet_map {
        let id = WallId(walls.len());
        let vectors: Vec<IntVec> = facet.iter().map(|&k| rays[k].clone()).collect();
        let hyperplane = Hyperplane::spanned_by(dim, &vectors).map_err(|e| {
            FanError::InternalInconsistency(format!("wall {facet:?} does not span: {e}"))
        })?;
        let face = face_index[facet];
        wall_of_face[face.0] = Some(id);
        chamber_walls[owners[0]].push(id);
        chamber_walls[owners[1]].push(id);
        walls.push(Wall {
            id,
            face,
            chambers: [ChamberId(owners[0]), ChamberId(owners[1])],
            hyperplane,
        });
    }

    let barycenters: Vec<IntVec> = chambers
        .iter()
        .map(|ch| {
            ch.iter()
                .fold(IntVec::zero(dim), |acc, &k| acc.add(&rays[k]))
        })
        .collect();

    let fan = Fan {
        name: doc.name.clone(),
        dim,
        rays,
        chambers,
        faces,
        face_index,
        closures,
        chamber_face,
        chamber_walls,
        walls,
        wall_of_face,
        barycenters,
        identity: ChamberId(identity),
        negated: ChamberId(negated),
    };

    let uncovered = fan.sample_coverage(opts);
    if let Some(p) = uncovered.first() {
        return Err(FanError::InternalInconsistency(format!(
            "sample point {p:?} lies in no chamber although walls and adjacency certify completeness"
        )));
    }
    Ok(fan)
}

impl Fan {
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn num_chambers(&self) -> usize {
        self.chambers.len()
    }

    pub fn chamber_ids(&self) -> impl Iterator<Item = ChamberId> {
        (0..self.chambers.len()).map(ChamberId)
    }

    /// Sorted ray indices of a chamber.
    pub fn chamber_rays(&self, c: ChamberId) -> &[usize] {
        &self.chambers[c.0]
    }

    pub fn chamber_face(&self, c: ChamberId) -> FaceId {
        self.chamber_face[c.0]
    }

    /// Sum of the chamber's rays, an interior point.
    pub fn barycenter(&self, c: ChamberId) -> &IntVec {
        &self.barycenters[c.0]
    }

    pub fn chamber_walls(&self, c: ChamberId) -> &[WallId] {
        &self.chamber_walls[c.0]
    }

    /// The chamber spanned by the unit vectors.
    pub fn identity_chamber(&self) -> ChamberId {
        self.identity
    }

    /// The chamber spanned by the negated unit vectors.
    pub fn negated_chamber(&self) -> ChamberId {
        self.negated
    }

    /// All faces, including the origin (id 0) and the chambers, ordered by
    /// dimension and then lexicographically by ray indices.
    pub fn enumerate_faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn origin(&self) -> FaceId {
        FaceId(0)
    }

    pub fn face_id(&self, rays: &[usize]) -> Option<FaceId> {
        let mut key = rays.to_vec();
        key.sort_unstable();
        self.face_index.get(&key).copied()
    }

    /// `a ⊆ b` as cones.
    pub fn face_contains(&self, b: FaceId, a: FaceId) -> bool {
        self.closures[b.0].contains(a)
    }

    /// The face together with all of its faces.
    pub fn face_closure(&self, f: FaceId) -> &FaceSet {
        &self.closures[f.0]
    }

    pub fn all_faces(&self) -> FaceSet {
        FaceSet::full(self.faces.len())
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn wall(&self, w: WallId) -> &Wall {
        &self.walls[w.0]
    }

    pub fn wall_of_face(&self, f: FaceId) -> Option<WallId> {
        self.wall_of_face[f.0]
    }

    /// Faces of codimension two.
    pub fn codim2_faces(&self) -> impl Iterator<Item = &Face> {
        let d = self.dim;
        self.faces.iter().filter(move |f| f.dim() + 2 == d)
    }

    /// Chambers having `face` as a face.
    pub fn star(&self, face: FaceId) -> Vec<ChamberId> {
        self.chamber_ids()
            .filter(|&c| self.face_contains(self.chamber_face(c), face))
            .collect()
    }

    /// Chambers whose ray sets contain `rays`.
    pub fn star_chambers(&self, rays: &[usize]) -> Result<Vec<ChamberId>, FanError> {
        let f = self
            .face_id(rays)
            .ok_or_else(|| FanError::FaceNotInFan(rays.to_vec()))?;
        Ok(self.star(f))
    }

    /// Generators of a face as vectors.
    pub fn face_vectors(&self, f: FaceId) -> Vec<IntVec> {
        self.faces[f.0]
            .rays
            .iter()
            .map(|&k| self.rays[k].clone())
            .collect()
    }

    pub fn face_label(&self, f: FaceId) -> String {
        tuple_label(&self.faces[f.0].rays)
    }

    pub fn chamber_label(&self, c: ChamberId) -> String {
        tuple_label(&self.chambers[c.0])
    }

    /// Returns the document this fan was validated from, with chambers in
    /// sorted ray order.
    pub fn to_document(&self) -> FanDocument {
        FanDocument {
            dim: self.dim,
            rays: self
                .rays
                .iter()
                .map(|r| r.to_i64s().expect("rays originate from i64 input"))
                .collect(),
            chambers: self.chambers.clone(),
            name: self.name.clone(),
        }
    }

    /// Monte-Carlo diagnostic: seeded random rational points that lie in no
    /// chamber.
    pub fn sample_coverage(&self, opts: ValidationOptions) -> Vec<RatVec> {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let points: Vec<RatVec> = (0..opts.samples)
            .map(|_| {
                RatVec::new(
                    (0..self.dim)
                        .map(|_| {
                            let num: i64 = rng.random_range(-1000..=1000);
                            let den: i64 = rng.random_range(1..=97);
                            BigRational::new(num.into(), den.into())
                        })
                        .collect(),
                )
            })
            .collect();
        let chamber_vectors: Vec<Vec<IntVec>> = self
            .chambers
            .iter()
            .map(|ch| ch.iter().map(|&k| self.rays[k].clone()).collect())
            .collect();
        let covered = par::map_slice(&points, |p| {
            chamber_vectors
                .iter()
                .any(|rays| exactgeom::cone_membership(rays, p).is_some())
        });
        points
            .into_iter()
            .zip(covered)
            .filter(|(_, c)| !c)
            .map(|(p, _)| p)
            .collect()
    }
}

pub(crate) fn tuple_label(idx: &[usize]) -> String {
    let inner: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
    format!("({})", inner.join(","))
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "fan{} in dimension {}: {} rays, {} chambers, {} faces, {} walls",
            self.name.as_ref().map(|n| format!(" {n}")).unwrap_or_default(),
            self.dim,
            self.rays.len(),
            self.chambers.len(),
            self.faces.len(),
            self.walls.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders_io::generators::{gen_coxeter_a, gen_crown, gen_orthant, gen_fa2};

    fn fa2() -> Fan {
        validate_fan(&gen_fa2()).unwrap()
    }

    #[test]
    fn fa2_validates() {
        let fan = fa2();
        assert_eq!(fan.num_chambers(), 5);
        assert_eq!(fan.enumerate_faces().len(), 11);
        assert_eq!(fan.walls().len(), 5);
        assert_eq!(fan.chamber_rays(fan.identity_chamber()), &[0, 1]);
        assert_eq!(fan.chamber_rays(fan.negated_chamber()), &[3, 4]);
    }

    #[test]
    fn orthant_counts() {
        let o1 = validate_fan(&gen_orthant(1)).unwrap();
        assert_eq!(o1.enumerate_faces().len(), 3);
        assert_eq!(o1.walls().len(), 1);
        assert!(o1.face(o1.wall(WallId(0)).face).rays.is_empty());
        let o2 = validate_fan(&gen_orthant(2)).unwrap();
        assert_eq!(o2.num_chambers(), 4);
        let o3 = validate_fan(&gen_orthant(3)).unwrap();
        assert_eq!(o3.enumerate_faces().len(), 27);
        assert_eq!(o3.walls().len(), 12);
    }

    #[test]
    fn dropped_chamber_leaves_a_single_chamber_wall() {
        let mut doc = gen_fa2();
        doc.chambers.retain(|c| c != &vec![1, 2]);
        match validate_fan(&doc) {
            Err(FanError::WallNotTwoChambers { wall, chambers }) => {
                assert_eq!(wall, vec![1]);
                assert_eq!(chambers.len(), 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negated_ray_breaks_face_to_face() {
        let mut doc = gen_fa2();
        doc.rays[2] = vec![-1, 1];
        assert!(matches!(
            validate_fan(&doc),
            Err(FanError::NotFaceToFace(..))
        ));
    }

    #[test]
    fn duplicated_ray_is_rejected() {
        let mut doc = gen_fa2();
        doc.rays.push(vec![1, -1]);
        assert_eq!(validate_fan(&doc).unwrap_err(), FanError::DuplicateRay(2, 5));
    }

    #[test]
    fn non_primitive_ray() {
        let mut doc = gen_fa2();
        doc.rays[2] = vec![2, 4];
        assert_eq!(validate_fan(&doc).unwrap_err(), FanError::RayNotPrimitive(2));
    }

    #[test]
    fn non_unimodular_chamber() {
        let doc = FanDocument {
            dim: 2,
            rays: vec![vec![1, 0], vec![1, 2], vec![0, 1]],
            chambers: vec![vec![0, 1]],
            name: None,
        };
        assert!(matches!(
            validate_fan(&doc),
            Err(FanError::RayNotPrimitive(_)) | Err(FanError::NotUnimodular { .. })
        ));
    }

    #[test]
    fn missing_identity_and_negated() {
        // Orthant fan rotated so that no chamber is spanned by e1, e2.
        let doc = FanDocument {
            dim: 2,
            rays: vec![vec![1, 1], vec![-1, 0], vec![0, -1], vec![1, 0], vec![0, 1]],
            chambers: vec![vec![0, 4], vec![4, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            name: None,
        };
        assert_eq!(validate_fan(&doc).unwrap_err(), FanError::MissingIdentityChamber);
        let doc = FanDocument {
            dim: 2,
            rays: vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![-1, -1], vec![0, -1]],
            chambers: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
            name: None,
        };
        assert_eq!(validate_fan(&doc).unwrap_err(), FanError::MissingNegatedChamber);
    }

    #[test]
    fn star_chambers_examples() {
        let fan = fa2();
        assert_eq!(fan.star_chambers(&[]).unwrap().len(), 5);
        let star: Vec<&[usize]> = fan
            .star_chambers(&[2])
            .unwrap()
            .into_iter()
            .map(|c| fan.chamber_rays(c))
            .collect();
        assert_eq!(star, vec![&[1, 2][..], &[2, 3][..]]);
        assert_eq!(
            fan.star_chambers(&[0, 2]).unwrap_err(),
            FanError::FaceNotInFan(vec![0, 2])
        );

        let o3 = validate_fan(&gen_orthant(3)).unwrap();
        // Ray e3 has index 2 in the orthant generator.
        let star = o3.star_chambers(&[2]).unwrap();
        assert_eq!(star.len(), 4);
        for c in star {
            assert!(o3.barycenter(c).coords()[2] > BigInt::from(0));
        }
    }

    #[test]
    fn structural_invariants_on_generated_fans() {
        let docs = vec![
            gen_fa2(),
            gen_orthant(1),
            gen_orthant(3),
            gen_crown(2, 3),
            gen_coxeter_a(3),
        ];
        for doc in docs {
            let fan = validate_fan(&doc).unwrap();
            // Faces are closed under subsets.
            for f in fan.enumerate_faces() {
                for sub in fan.face_closure(f.id).iter() {
                    assert!(fan
                        .face(sub)
                        .rays
                        .iter()
                        .all(|r| f.rays.contains(r)));
                }
                assert_eq!(fan.face_closure(f.id).len(), 1 << f.dim());
            }
            // Chambers across a wall differ in exactly one ray.
            for w in fan.walls() {
                let a = fan.chamber_rays(w.chambers[0]);
                let b = fan.chamber_rays(w.chambers[1]);
                assert_eq!(a.iter().filter(|r| !b.contains(r)).count(), 1);
            }
            assert_eq!(fan.star(fan.origin()).len(), fan.num_chambers());
            for c in fan.chamber_ids() {
                assert_eq!(fan.star(fan.chamber_face(c)), vec![c]);
            }
        }
    }

    #[test]
    fn sampling_diagnostic_covers_fa2() {
        let fan = fa2();
        assert!(fan
            .sample_coverage(ValidationOptions { samples: 200, seed: 7 })
            .is_empty());
    }
}
