//! The full verification suite: builds every structure for a fan and checks
//! the identities relating them.

use super::document::FanDocument;
use crate::chamber_lattice::{crown_check, orient_hasse, star_interval, ChamberPoset};
use crate::fan::{validate_fan, ChamberId, Fan};
use crate::par;
use crate::shard_engine::{
    arrangement_shards_oracle, shard_wall_connectivity_check, shards, verify_cjr_via_shards,
    verify_jirr_shard_bijection, ShardError, ShardSystem,
};
use crate::shard_intersections::{
    enumerate_shard_intersections, gamma_of_face, rank_and_gradedness, verify_anti_isomorphism,
    verify_containing_shard, ShardIntersectionLattice,
};
use crate::Error;
use serde::Serialize;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Lattice,
    Shards,
    Intersections,
}

impl Suite {
    fn runs_lattice(self) -> bool {
        matches!(self, Suite::All | Suite::Lattice)
    }

    fn runs_shards(self) -> bool {
        matches!(self, Suite::All | Suite::Shards)
    }

    fn runs_intersections(self) -> bool {
        matches!(self, Suite::All | Suite::Intersections)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "lattice" => Ok(Suite::Lattice),
            "shards" => Ok(Suite::Shards),
            "intersections" => Ok(Suite::Intersections),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub violations: Vec<String>,
}

impl Check {
    fn from_violations(name: &'static str, violations: Vec<String>) -> Self {
        let status = if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            name,
            status,
            violations,
        }
    }

    fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skipped,
            violations: vec![reason.into()],
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub chambers: usize,
    pub faces: usize,
    pub walls: usize,
    pub join_irreducibles: Option<usize>,
    pub plates: Option<usize>,
    pub shards: Option<usize>,
    pub shard_intersections: Option<usize>,
}

/// Outcome of [`run_verify_suite`]. Everything except `timings` is a pure
/// function of the input document and suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: Option<String>,
    pub dim: usize,
    pub suite: Suite,
    pub counts: Counts,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub timings: Vec<(&'static str, Duration)>,
}

impl VerifyReport {
    /// No check failed. Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

struct Timer(Vec<(&'static str, Duration)>);

impl Timer {
    fn run<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push((stage, start.elapsed()));
        out
    }
}

/// Validates `doc` and runs the checks selected by `suite`. Validation
/// failures are errors; everything after validation is reported as checks.
pub fn run_verify_suite(doc: &FanDocument, suite: Suite) -> Result<VerifyReport, Error> {
    let mut timer = Timer(Vec::new());
    let fan = timer.run("validate", || validate_fan(doc))?;
    let mut report = VerifyReport {
        name: doc.name.clone(),
        dim: fan.dim(),
        suite,
        counts: Counts {
            chambers: fan.num_chambers(),
            faces: fan.enumerate_faces().len(),
            walls: fan.walls().len(),
            ..Counts::default()
        },
        checks: Vec::new(),
        notes: Vec::new(),
        timings: Vec::new(),
    };

    let poset = match timer.run("lattice", || orient_hasse(&fan)) {
        Ok(p) => {
            report.checks.push(Check::from_violations("lattice", vec![]));
            p
        }
        Err(e) => {
            report
                .checks
                .push(Check::from_violations("lattice", vec![e.to_string()]));
            report.timings = timer.0;
            return Ok(report);
        }
    };
    report.counts.join_irreducibles = Some(poset.join_irreducibles().len());

    if suite.runs_lattice() {
        timer.run("lattice checks", || lattice_checks(&fan, &poset, &mut report));
    }
    if !(suite.runs_shards() || suite.runs_intersections()) {
        report.timings = timer.0;
        return Ok(report);
    }

    let sys = match timer.run("shards", || shards(&fan, &poset)) {
        Ok(s) => s,
        Err(e) => {
            report
                .checks
                .push(Check::from_violations("shard_construction", vec![e.to_string()]));
            report.timings = timer.0;
            return Ok(report);
        }
    };
    report.counts.plates = Some(sys.plates().len());
    report.counts.shards = Some(sys.len());

    if suite.runs_shards() {
        timer.run("shard checks", || shard_checks(&fan, &poset, &sys, &mut report));
    }
    if suite.runs_intersections() {
        match timer.run("shard intersections", || {
            enumerate_shard_intersections(&fan, &poset, &sys)
        }) {
            Ok(si) => {
                report.counts.shard_intersections = Some(si.len());
                timer.run("intersection checks", || {
                    intersection_checks(&fan, &poset, &sys, &si, &mut report)
                });
            }
            Err(e) => report.checks.push(Check::from_violations(
                "shard_intersection_enumeration",
                vec![e.to_string()],
            )),
        }
    }
    report.timings = timer.0;
    Ok(report)
}

fn lattice_checks(fan: &Fan, poset: &ChamberPoset, report: &mut VerifyReport) {
    let sd = match poset.check_semidistributive() {
        Ok(()) => vec![],
        Err(w) => vec![format!(
            "{:?} law fails at ({}, {}, {})",
            w.law, w.a, w.b, w.c
        )],
    };
    report.checks.push(Check::from_violations("semidistributive", sd));

    let ridges: Vec<_> = fan.codim2_faces().map(|f| f.id).collect();
    let crown = par::flat_map_range(ridges.len(), |i| {
        let f = ridges[i];
        match star_interval(fan, poset, f) {
            Ok(s) if crown_check(poset, &s).is_some() => vec![],
            Ok(_) => vec![format!("face {}: star is not a crown", fan.face_label(f))],
            Err(e) => vec![format!("face {}: {e}", fan.face_label(f))],
        }
    });
    report.checks.push(Check::from_violations("crown", crown));

    let faces = fan.enumerate_faces();
    let stars = par::flat_map_range(faces.len(), |i| match star_interval(fan, poset, faces[i].id) {
        Ok(_) => vec![],
        Err(e) => vec![format!("face {}: {e}", fan.face_label(faces[i].id))],
    });
    report.checks.push(Check::from_violations("star_interval", stars));

    let cjr = par::flat_map_range(poset.len(), |i| {
        let r = ChamberId(i);
        match poset.canonical_join_rep_oracle(r) {
            Ok(rep) if poset.join_all(rep.iter().copied()) == r => vec![],
            Ok(rep) => vec![format!("chamber {i}: representation {rep:?} does not join to it")],
            Err(e) => vec![e.to_string()],
        }
    });
    report
        .checks
        .push(Check::from_violations("canonical_join_oracle", cjr));
}

fn shard_checks(fan: &Fan, poset: &ChamberPoset, sys: &ShardSystem, report: &mut VerifyReport) {
    let mut partition = Vec::new();
    let mut seen = vec![0usize; fan.walls().len()];
    for s in sys.shards() {
        for &w in &s.walls {
            seen[w.0] += 1;
        }
        if sys.upper(s.id).len() != s.walls.len() || sys.lower(s.id).len() != s.walls.len() {
            partition.push(format!("shard {}: |Up|, |Lo| and wall count differ", s.id));
        }
        if s.faces.iter().any(|f| !fan.face_closure(f).is_subset(&s.faces)) {
            partition.push(format!("shard {}: face set is not face-closed", s.id));
        }
    }
    for (w, &k) in seen.iter().enumerate() {
        if k != 1 {
            partition.push(format!("wall {w} lies in {k} shards"));
        }
    }
    report
        .checks
        .push(Check::from_violations("shard_partition", partition));

    let unique_min = sys
        .shards()
        .iter()
        .filter_map(|s| sys.j_of_shard(s.id).err().map(|e| e.to_string()))
        .collect();
    report
        .checks
        .push(Check::from_violations("unique_minimal_upper", unique_min));

    let connectivity = sys
        .shards()
        .iter()
        .filter_map(|s| shard_wall_connectivity_check(fan, poset, s).err())
        .collect();
    report
        .checks
        .push(Check::from_violations("shard_connectivity", connectivity));

    report.checks.push(Check::from_violations(
        "jirr_shard_bijection",
        verify_jirr_shard_bijection(poset, sys),
    ));
    report.checks.push(Check::from_violations(
        "canonical_join_via_shards",
        verify_cjr_via_shards(poset, sys),
    ));

    let arrangement = match arrangement_shards_oracle(fan, poset) {
        Ok(oracle) if oracle == sys.shards() => Check::from_violations("arrangement_oracle", vec![]),
        Ok(oracle) => Check::from_violations(
            "arrangement_oracle",
            vec![format!(
                "arrangement rule gives {} shards, plate cutting gives {}",
                oracle.len(),
                sys.len()
            )],
        ),
        Err(ShardError::NotAnArrangement(why)) => Check::skipped("arrangement_oracle", why),
        Err(e) => Check::from_violations("arrangement_oracle", vec![e.to_string()]),
    };
    report.checks.push(arrangement);
}

fn intersection_checks(
    fan: &Fan,
    poset: &ChamberPoset,
    sys: &ShardSystem,
    si: &ShardIntersectionLattice,
    report: &mut VerifyReport,
) {
    report.checks.push(Check::from_violations(
        "shard_intersection_enumeration",
        si.violations().to_vec(),
    ));
    report.checks.push(Check::from_violations(
        "anti_isomorphism",
        verify_anti_isomorphism(sys, si),
    ));
    report.checks.push(Check::from_violations(
        "containing_shard",
        verify_containing_shard(fan, poset, sys, si),
    ));
    report
        .checks
        .push(Check::from_violations("gradedness", rank_and_gradedness(fan, si)));

    let whole = fan
        .chamber_ids()
        .filter(|&c| {
            gamma_of_face(fan, poset, sys, fan.chamber_face(c))
                .map(|g| g.generators.is_empty())
                .unwrap_or(false)
        })
        .count();
    report.notes.push(format!(
        "Γ of a chamber is the whole space for {whole} of {} chambers",
        fan.num_chambers()
    ));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders_io::generators::{gen_coxeter_a, gen_orthant, gen_fa2};

    #[test]
    fn fa2_report() {
        let r = run_verify_suite(&gen_fa2(), Suite::All).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(
            r.counts,
            Counts {
                chambers: 5,
                faces: 11,
                walls: 5,
                join_irreducibles: Some(3),
                plates: Some(3),
                shards: Some(3),
                shard_intersections: Some(5),
            }
        );
        assert_eq!(r.check("arrangement_oracle").unwrap().status, Status::Skipped);
        assert_eq!(r.checks.len(), 15);
    }

    #[test]
    fn a3_report() {
        let r = run_verify_suite(&gen_coxeter_a(3), Suite::All).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.counts.walls, 36);
        assert_eq!(r.counts.shards, Some(11));
        assert_eq!(r.counts.join_irreducibles, Some(11));
        assert_eq!(r.counts.shard_intersections, Some(24));
        assert_eq!(r.check("arrangement_oracle").unwrap().status, Status::Pass);
    }

    #[test]
    fn suites_select_checks() {
        let doc = gen_orthant(2);
        let l = run_verify_suite(&doc, Suite::Lattice).unwrap();
        assert!(l.check("semidistributive").is_some());
        assert!(l.check("gradedness").is_none());
        assert_eq!(l.counts.shards, None);
        let s = run_verify_suite(&doc, Suite::Shards).unwrap();
        assert!(s.check("jirr_shard_bijection").is_some());
        assert!(s.check("crown").is_none());
        let i = run_verify_suite(&doc, Suite::Intersections).unwrap();
        assert!(i.check("anti_isomorphism").is_some());
        assert_eq!("intersections".parse::<Suite>().unwrap(), Suite::Intersections);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn json_excludes_timings() {
        let r = run_verify_suite(&gen_fa2(), Suite::All).unwrap();
        assert!(!r.timings.is_empty());
        let json = r.to_json();
        assert!(!json.contains("timings"));
        assert_eq!(json, run_verify_suite(&gen_fa2(), Suite::All).unwrap().to_json());
    }
}
