#![allow(dead_code)]

use itertools::Itertools;
use shardfan_core::builders_io::generators::{gen_coxeter_a, gen_crown, gen_orthant, gen_fa2};
use shardfan_core::chamber_lattice::orient_hasse;
use shardfan_core::shard_engine::shards;
use shardfan_core::shard_intersections::{enumerate_shard_intersections, ShardIntersectionLattice};
use shardfan_core::{validate_fan, ChamberId, ChamberPoset, Fan, FanDocument, ShardSystem};

pub struct Pipeline {
    pub fan: Fan,
    pub poset: ChamberPoset,
    pub sys: ShardSystem,
    pub si: ShardIntersectionLattice,
}

pub fn pipeline(doc: &FanDocument) -> Pipeline {
    let fan = validate_fan(doc).expect("valid fan");
    let poset = orient_hasse(&fan).expect("chamber lattice");
    let sys = shards(&fan, &poset).expect("shards");
    let si = enumerate_shard_intersections(&fan, &poset, &sys).expect("shard intersections");
    Pipeline { fan, poset, sys, si }
}

pub fn chamber(fan: &Fan, rays: &[usize]) -> ChamberId {
    let f = fan.face_id(rays).expect("face");
    fan.chamber_ids()
        .find(|&c| fan.chamber_face(c) == f)
        .expect("chamber")
}

/// Permutations of `0..m` with exactly one descent; the number of
/// join-irreducibles of the weak order on `S_m`.
pub fn one_descent_permutations(m: usize) -> usize {
    (0..m)
        .permutations(m)
        .filter(|p| p.windows(2).filter(|w| w[0] > w[1]).count() == 1)
        .count()
}

/// Every fan shipped with the generators.
pub fn bundled_fans() -> Vec<FanDocument> {
    let mut docs = vec![gen_fa2()];
    docs.extend((1..=4).map(gen_orthant));
    for p in 0..=5 {
        for q in 0..=5 {
            docs.push(gen_crown(p, q));
        }
    }
    docs.extend((2..=4).map(gen_coxeter_a));
    docs
}

/// Signs of a chamber's barycenter: `true` for positive coordinates.
pub fn positive_coords(fan: &Fan, c: ChamberId) -> Vec<bool> {
    fan.barycenter(c)
        .coords()
        .iter()
        .map(|x| x.sign() == num_bigint::Sign::Plus)
        .collect()
}
