//! `shardfan`: validate fans, print their chamber lattices, shards and
//! shard intersections, and run the verification suite.
//!
//! Exit status: 0 when everything passes, 1 on unusable input, 2 when a
//! check reports violations.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use shardfan_core::builders_io::dot::{export_poset_dot, export_shard_intersection_dot};
use shardfan_core::builders_io::generators::{gen_coxeter_a, gen_crown, gen_orthant, gen_fa2};
use shardfan_core::chamber_lattice::orient_hasse;
use shardfan_core::shard_engine::shards;
use shardfan_core::shard_intersections::enumerate_shard_intersections;
use shardfan_core::{
    load_fan, run_verify_suite, save_fan, validate_fan, ChamberId, ChamberPoset, Fan, FanDocument,
    ShardSystem, Suite,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "shardfan", version, about = "Shards and shard intersections of complete nonsingular fans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a fan document.
    Validate { fan: PathBuf },
    /// Print the chamber poset.
    Poset {
        fan: PathBuf,
        #[command(flatten)]
        format: DotOrJson,
    },
    /// Print the shards with their upper and lower chambers.
    Shards {
        fan: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print canonical join representations.
    Cjr {
        fan: PathBuf,
        /// Chamber index; all chambers when omitted.
        #[arg(long)]
        chamber: Option<usize>,
    },
    /// Print the shard intersection lattice.
    Shardint {
        fan: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Si)]
        order: Order,
        #[arg(long)]
        dot: bool,
    },
    /// Run the verification suite.
    Verify {
        fan: PathBuf,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
    /// Write a built-in fan.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(short = 'o', long = "output", global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct DotOrJson {
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Si,
    Clo,
}

#[derive(Subcommand)]
enum GenKind {
    /// Coordinate fan, 1 ≤ N ≤ 6.
    Orthant { n: usize },
    /// Rank-two crown fan.
    Crown { p: usize, q: usize },
    /// Type A Coxeter fan, 2 ≤ N ≤ 4.
    #[command(name = "coxeterA")]
    CoxeterA { n: usize },
    /// The five-chamber fan of the path algebra of 1 → 2.
    Papera2,
}

/// Failures that make the input unusable, as opposed to check violations.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

struct Built {
    fan: Fan,
    poset: ChamberPoset,
}

fn build(path: &PathBuf) -> Result<Built, InputError> {
    let doc = load_fan(path).with_context(|| format!("reading {}", path.display()))?;
    let fan = validate_fan(&doc)?;
    let poset = orient_hasse(&fan)?;
    Ok(Built { fan, poset })
}

fn shard_system(b: &Built) -> Result<ShardSystem, InputError> {
    Ok(shards(&b.fan, &b.poset)?)
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool, InputError> {
    match command {
        Command::Validate { fan } => {
            let doc = load_fan(&fan).with_context(|| format!("reading {}", fan.display()))?;
            let fan = validate_fan(&doc)?;
            println!("valid {fan}");
            Ok(true)
        }
        Command::Poset { fan, format } => {
            let b = build(&fan)?;
            if format.dot {
                print!("{}", export_poset_dot(&b.fan, &b.poset));
            } else if format.json {
                println!("{}", poset_json(&b));
            } else {
                print_poset(&b);
            }
            Ok(true)
        }
        Command::Shards { fan, json } => {
            let b = build(&fan)?;
            let sys = shard_system(&b)?;
            if json {
                println!("{}", shards_json(&b, &sys));
            } else {
                print_shards(&b, &sys);
            }
            Ok(sys.shards().iter().all(|s| sys.j_of_shard(s.id).is_ok()))
        }
        Command::Cjr { fan, chamber } => {
            let b = build(&fan)?;
            let sys = shard_system(&b)?;
            let targets: Vec<ChamberId> = match chamber {
                Some(i) if i < b.fan.num_chambers() => vec![ChamberId(i)],
                Some(i) => {
                    return Err(InputError(anyhow::anyhow!(
                        "chamber {i} out of range (fan has {})",
                        b.fan.num_chambers()
                    )))
                }
                None => b.fan.chamber_ids().collect(),
            };
            let mut ok = true;
            for r in targets {
                let label = |c: &ChamberId| b.fan.chamber_label(*c);
                match b.poset.canonical_join_rep_oracle(r) {
                    Ok(mut rep) => {
                        rep.sort();
                        let names: Vec<String> = rep.iter().map(label).collect();
                        let agrees = sys.canonical_join_via_shards(&b.poset, r).ok() == Some(rep);
                        ok &= agrees;
                        println!(
                            "{} = ∨{{{}}}{}",
                            label(&r),
                            names.join(", "),
                            if agrees { "" } else { "  [differs from shard labels]" }
                        );
                    }
                    Err(e) => {
                        ok = false;
                        println!("{}: {e}", label(&r));
                    }
                }
            }
            Ok(ok)
        }
        Command::Shardint { fan, order, dot } => {
            let b = build(&fan)?;
            let sys = shard_system(&b)?;
            let si = enumerate_shard_intersections(&b.fan, &b.poset, &sys)?;
            if dot {
                print!("{}", export_shard_intersection_dot(&si));
            } else {
                let mut rows: Vec<ChamberId> = b.fan.chamber_ids().collect();
                match order {
                    Order::Si => {
                        rows.sort_by_key(|&r| (std::cmp::Reverse(si.rank(r)), si.element(r).label()));
                        for r in rows {
                            let e = si.element(r);
                            println!(
                                "{:<16} dim {} rank {} faces {:>4}  from chamber {}",
                                e.label(),
                                si.dim(r),
                                si.rank(r),
                                e.faces.len(),
                                b.fan.chamber_label(r)
                            );
                        }
                    }
                    Order::Clo => {
                        rows.sort_by_key(|&r| (si.core_labels(r).len(), b.fan.chamber_label(r)));
                        for r in rows {
                            let labels: Vec<String> = si
                                .core_labels(r)
                                .iter()
                                .map(|c| b.fan.chamber_label(*c))
                                .collect();
                            println!("{:<16} core labels {{{}}}", b.fan.chamber_label(r), labels.join(", "));
                        }
                    }
                }
            }
            Ok(si.violations().is_empty())
        }
        Command::Verify { fan, suite, json } => {
            let doc = load_fan(&fan).with_context(|| format!("reading {}", fan.display()))?;
            let report = run_verify_suite(&doc, suite)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print_report(&report);
            }
            for (stage, t) in &report.timings {
                eprintln!("time {stage:<22} {:>10.3} ms", t.as_secs_f64() * 1e3);
            }
            Ok(report.passed())
        }
        Command::Gen { kind, output } => {
            let doc = generate(kind)?;
            match output {
                Some(path) => save_fan(&doc, &path)?,
                None => println!("{}", doc.to_json()),
            }
            Ok(true)
        }
    }
}

fn generate(kind: GenKind) -> Result<FanDocument> {
    Ok(match kind {
        GenKind::Orthant { n } => {
            if !(1..=6).contains(&n) {
                bail!("orthant dimension must be between 1 and 6, got {n}");
            }
            gen_orthant(n)
        }
        GenKind::Crown { p, q } => gen_crown(p, q),
        GenKind::CoxeterA { n } => {
            if !(2..=4).contains(&n) {
                bail!("coxeterA rank must be between 2 and 4, got {n}");
            }
            gen_coxeter_a(n)
        }
        GenKind::Papera2 => gen_fa2(),
    })
}

fn print_poset(b: &Built) {
    println!("top {}  bottom {}", b.fan.chamber_label(b.poset.top()), b.fan.chamber_label(b.poset.bottom()));
    for a in b.poset.arrows() {
        println!(
            "{} -> {}  across {}",
            b.fan.chamber_label(a.upper),
            b.fan.chamber_label(a.lower),
            b.fan.face_label(b.fan.wall(a.wall).face)
        );
    }
    let jirr: Vec<String> = b
        .poset
        .join_irreducibles()
        .iter()
        .map(|c| b.fan.chamber_label(*c))
        .collect();
    println!("join-irreducible: {}", jirr.join(" "));
}

fn poset_json(b: &Built) -> String {
    let label = |c: ChamberId| b.fan.chamber_label(c);
    let value = json!({
        "chambers": b.fan.chamber_ids().map(|c| b.fan.chamber_rays(c).to_vec()).collect::<Vec<_>>(),
        "top": b.poset.top(),
        "bottom": b.poset.bottom(),
        "arrows": b.poset.arrows().iter().map(|a| json!({
            "upper": a.upper,
            "lower": a.lower,
            "wall": b.fan.face(b.fan.wall(a.wall).face).rays,
            "label": format!("{} -> {}", label(a.upper), label(a.lower)),
        })).collect::<Vec<_>>(),
        "join_irreducibles": b.poset.join_irreducibles(),
    });
    serde_json::to_string_pretty(&value).expect("json values serialize")
}

fn print_shards(b: &Built, sys: &ShardSystem) {
    let names = |cs: &[ChamberId]| -> String {
        cs.iter().map(|c| b.fan.chamber_label(*c)).collect::<Vec<_>>().join(" ")
    };
    println!("{} plates, {} shards, {} cut loci", sys.plates().len(), sys.len(), sys.cut_loci().len());
    for s in sys.shards() {
        let walls: Vec<String> = s.walls.iter().map(|&w| b.fan.face_label(b.fan.wall(w).face)).collect();
        let j = match sys.j_of_shard(s.id) {
            Ok(c) => b.fan.chamber_label(c),
            Err(e) => format!("<{e}>"),
        };
        println!(
            "shard {}: normal {} walls {} J {} up [{}] lo [{}]",
            s.id,
            s.hyperplane.normal(),
            walls.join(" "),
            j,
            names(sys.upper(s.id)),
            names(sys.lower(s.id))
        );
    }
}

fn shards_json(b: &Built, sys: &ShardSystem) -> String {
    let value = json!({
        "plates": sys.plates().iter().map(|p| json!({
            "id": p.id,
            "normal": p.hyperplane.normal().to_i64s(),
            "walls": p.walls.iter().map(|&w| b.fan.face(b.fan.wall(w).face).rays.clone()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "shards": sys.shards().iter().map(|s| json!({
            "id": s.id,
            "plate": s.plate,
            "normal": s.hyperplane.normal().to_i64s(),
            "walls": s.walls.iter().map(|&w| b.fan.face(b.fan.wall(w).face).rays.clone()).collect::<Vec<_>>(),
            "faces": s.faces.iter().map(|f| b.fan.face(f).rays.clone()).collect::<Vec<_>>(),
            "upper": sys.upper(s.id),
            "lower": sys.lower(s.id),
            "j": sys.j_of_shard(s.id).ok(),
        })).collect::<Vec<_>>(),
        "cut_loci": sys.cut_loci().iter().map(|c| json!({
            "plate": c.plate,
            "face": b.fan.face(c.face).rays,
        })).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&value).expect("json values serialize")
}

fn print_report(r: &shardfan_core::VerifyReport) {
    let c = &r.counts;
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    println!(
        "{}: {} chambers, {} faces, {} walls, {} plates, {} shards, {} join-irreducibles, {} shard intersections",
        r.name.as_deref().unwrap_or("fan"),
        c.chambers,
        c.faces,
        c.walls,
        opt(c.plates),
        opt(c.shards),
        opt(c.join_irreducibles),
        opt(c.shard_intersections)
    );
    for check in &r.checks {
        let status = format!("{:?}", check.status).to_uppercase();
        println!("{status:<7} {}", check.name);
        for v in &check.violations {
            println!("        {v}");
        }
    }
    for n in &r.notes {
        println!("note    {n}");
    }
}
