use std::fmt::Write;

use polyface::faces::facets;
use polyface::hrep::to_hformat;
use polyface::lattice::vertex_figure;
use polyface::lp::{solve, verify_outcome};
use polyface::{Error, FmConfig, LinProgram, LpOutcome, QFaceLattice, QLinRel, QPoly, QPolytope, QVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{CheckArgs, Cli, Command};
use crate::{input, status};

pub struct Report {
    pub stdout: String,
    pub status: u8,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report { stdout, status: 0 }
    }

    fn json(value: Value) -> Self {
        Report::ok(format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")))
    }
}

#[derive(Debug)]
pub struct Failure {
    pub status: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: String) -> Self {
        Failure { status: status::PARSE, message }
    }

    fn precondition(message: String) -> Self {
        Failure { status: status::PRECONDITION, message: format!("precondition violated: {message}") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Usage(_) | Error::DimensionMismatch { .. } => Failure::parse(e.to_string()),
            Error::Precondition(m) => Failure::precondition(m),
            Error::Invariant(m) => Failure { status: status::INVARIANT, message: format!("internal invariant failed: {m}") },
        }
    }
}

type Outcome = Result<Report, Failure>;

fn vec_json(v: &QVector) -> Value {
    Value::Array(v.entries().iter().map(|x| Value::String(x.to_string())).collect())
}

fn rel_json(e: &QLinRel) -> Value {
    json!({ "normal": vec_json(&e.normal), "offset": e.offset.to_string() })
}

fn with_schema(mut value: Value) -> Value {
    value["schema"] = json!(1);
    value
}

fn expect_dim(v: &QVector, dim: usize, what: &str) -> Result<(), Failure> {
    if v.dim() == dim {
        Ok(())
    } else {
        Err(Failure::parse(format!("{what}: expected {dim} coordinates, got {}", v.dim())))
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = FmConfig { redundancy_threshold: cli.fm_threshold };
    match &cli.command {
        Command::Info(i) => info(&input::poly(&i.file, &cfg)?),
        Command::Lp { input: i, min } => lp(&input::poly(&i.file, &cfg)?, min),
        Command::Project { input: i, drop } => {
            let p = input::poly(&i.file, &cfg)?;
            let coords = input::naturals(drop, "--drop")?;
            if let Some(bad) = coords.iter().find(|&&c| c == 0 || c > p.dim()) {
                return Err(Failure::parse(format!("--drop: coordinate {bad} not in 1..={}", p.dim())));
            }
            let zero_based: Vec<usize> = coords.iter().map(|c| c - 1).collect();
            Ok(Report::ok(to_hformat(&p.hrep().project_out_with(&zero_based, &cfg)?)))
        }
        Command::Image { input: i, matrix } => {
            let p = input::poly(&i.file, &cfg)?;
            let a = input::matrix(matrix)?;
            Ok(Report::ok(to_hformat(p.map_with(&a, &cfg)?.hrep())))
        }
        Command::Conv(i) => {
            let (dim, pts) = input::points(&i.file)?;
            Ok(Report::ok(to_hformat(QPoly::conv_with(dim, &pts, &cfg)?.hrep())))
        }
        Command::Faces { input: i, dot, .. } => {
            let l = QFaceLattice::build(&input::poly(&i.file, &cfg)?);
            Ok(if *dot { Report::ok(l.to_dot()) } else { Report::json(with_schema(l.to_json())) })
        }
        Command::Hasse { input: i, json } => {
            let l = QFaceLattice::build(&input::poly(&i.file, &cfg)?);
            Ok(if *json { Report::json(with_schema(l.to_json())) } else { Report::ok(l.to_dot()) })
        }
        Command::Vertices { input: i, json } => vertices(&input::poly(&i.file, &cfg)?, *json),
        Command::Facets(i) => {
            let p = input::poly(&i.file, &cfg)?;
            let fs = facets(&p)?;
            let base = polyface::faces::nonredundant_base(&p);
            let top: std::collections::BTreeSet<usize> = polyface::faces::active(&base, &p);
            let rows: Vec<QLinRel> = fs
                .iter()
                .map(|f| {
                    let e = *f.active.difference(&top).next().expect("a facet forces one more row");
                    base.items()[e].clone()
                })
                .collect();
            Ok(Report::ok(to_hformat(&polyface::QHPoly::new(p.dim(), rows)?)))
        }
        Command::Check(args) => check(args, &cfg),
        Command::VertexFigure { input: i, vertex } => {
            let p = input::poly(&i.file, &cfg)?;
            let v = input::vector(vertex, "--vertex")?;
            expect_dim(&v, p.dim(), "--vertex")?;
            let vf = vertex_figure(&p, &v)?;
            Ok(Report::json(json!({
                "schema": 1,
                "vertex": vec_json(&v),
                "cut": rel_json(&vf.cut),
                "slice": vf.slice_lattice.to_json(),
                "f_vector": vf.slice_lattice.f_vector(),
                "correspondence": vf.correspondence.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "isomorphism": vf.is_isomorphism(),
            })))
        }
        Command::Balinski { input: i, remove, from, to, json } => {
            let p = QPolytope::new(input::poly(&i.file, &cfg)?)?;
            let dim = p.poly().dim();
            let removed = input::vectors(remove, "--remove")?;
            let (v, w) = (input::vector(from, "--from")?, input::vector(to, "--to")?);
            for x in removed.iter().chain([&v, &w]) {
                expect_dim(x, dim, "vertex")?;
            }
            let path = p.balinski_path(&removed, &v, &w)?;
            if !path.is_walk_in(p.graph()) || !path.avoids(&removed) {
                return Err(Error::Invariant("returned path is not a valid avoiding walk".into()).into());
            }
            if *json {
                return Ok(Report::json(json!({
                    "schema": 1,
                    "path": path.indices(p.graph()),
                    "points": path.points().map(vec_json).collect::<Vec<_>>(),
                })));
            }
            let idx = path.indices(p.graph()).expect("walk in the graph");
            Ok(Report::ok(format!("{}\n", idx.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))))
        }
    }
}

fn info(p: &QPoly) -> Outcome {
    let pdim = p.pdim();
    Ok(Report::json(json!({
        "schema": 1,
        "ambient": p.dim(),
        "rows": p.hrep().rows().len(),
        "empty": p.is_empty(),
        "compact": p.compact(),
        "pdim": pdim,
        "dim": if pdim == 0 { Value::Null } else { json!(pdim - 1) },
        "hull": p.hull().to_json(),
    })))
}

fn lp(p: &QPoly, min: &str) -> Outcome {
    let c = input::vector(min, "--min")?;
    expect_dim(&c, p.dim(), "--min")?;
    let program = LinProgram::new(p.hrep().rows().to_vec(), c)?;
    let out = solve(&program);
    let strings = |xs: &[polyface::Rational]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let mut value = match &out {
        LpOutcome::Infeasible { farkas } => json!({ "outcome": "infeasible", "farkas": strings(farkas) }),
        LpOutcome::Unbounded { feasible, ray } => {
            json!({ "outcome": "unbounded", "feasible": vec_json(feasible), "ray": vec_json(ray) })
        }
        LpOutcome::Optimal { point, value, dual } => json!({
            "outcome": "optimal",
            "point": vec_json(point),
            "value": value.to_string(),
            "dual": strings(dual),
        }),
    };
    value["verified"] = json!(verify_outcome(&program, &out));
    Ok(Report::json(with_schema(value)))
}

fn vertices(p: &QPoly, as_json: bool) -> Outcome {
    if as_json {
        let value = if p.compact() {
            QPolytope::new(p.clone())?.graph().to_json()
        } else {
            let vs = polyface::faces::vertex_set(p);
            json!({ "vertices": vs.iter().map(vec_json).collect::<Vec<_>>() })
        };
        return Ok(Report::json(with_schema(value)));
    }
    let mut out = String::new();
    for v in polyface::faces::vertex_set(p) {
        let cells: Vec<String> = v.entries().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    Ok(Report::ok(out))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Property {
    Graded,
    Atomistic,
    Coatomistic,
    Diamond,
    Euler,
    Minkowski,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Graded => "graded",
            Property::Atomistic => "atomistic",
            Property::Coatomistic => "coatomistic",
            Property::Diamond => "diamond",
            Property::Euler => "euler",
            Property::Minkowski => "minkowski",
        }
    }

    /// Whether the property is expected of every input, or only of polytopes.
    fn needs_compact(self) -> bool {
        matches!(self, Property::Atomistic | Property::Euler | Property::Minkowski)
    }

    fn evaluate(self, p: &QPoly, l: &QFaceLattice) -> Result<bool, Failure> {
        let compact = |what: &str| {
            if p.compact() {
                Ok(())
            } else {
                Err(Failure::precondition(format!("the {what} check requires a compact polyhedron")))
            }
        };
        Ok(match self {
            Property::Graded => l.check_graded(),
            Property::Atomistic => {
                compact("atomistic")?;
                l.check_atomistic()?
            }
            Property::Coatomistic => l.check_coatomistic(),
            Property::Diamond => l.check_diamond(),
            Property::Euler => {
                compact("euler")?;
                p.is_empty() || l.euler_sum() == 0
            }
            Property::Minkowski => {
                compact("minkowski")?;
                polyface::faces::minkowski_check(p)?
            }
        })
    }
}

fn check(args: &CheckArgs, cfg: &FmConfig) -> Outcome {
    let all = [
        (args.graded, Property::Graded),
        (args.atomistic, Property::Atomistic),
        (args.coatomistic, Property::Coatomistic),
        (args.diamond, Property::Diamond),
        (args.euler, Property::Euler),
        (args.minkowski, Property::Minkowski),
    ];
    let chosen: Vec<Property> = all.iter().filter(|(on, _)| *on).map(|&(_, p)| p).collect();
    let explicit = !chosen.is_empty();
    let props: Vec<Property> = if explicit { chosen } else { all.iter().map(|&(_, p)| p).collect() };

    let mut inputs: Vec<(String, QPoly)> = Vec::new();
    if let Some(file) = &args.file {
        inputs.push((file.display().to_string(), input::poly(file, cfg)?));
    }
    if let Some(spec) = &args.random {
        let nums = input::naturals(spec, "--random")?;
        let [k, d, count] = nums[..] else {
            return Err(Failure::parse(format!("--random: expected k,d,count, got {spec:?}")));
        };
        if k == 0 || d == 0 {
            return Err(Failure::parse("--random: k and d must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        for i in 0..count {
            let pts: Vec<QVector> = (0..k)
                .map(|_| QVector::new((0..d).map(|_| polyface::rat(rng.gen_range(-5..=5))).collect()))
                .collect();
            inputs.push((format!("random #{i}"), QPoly::conv_with(d, &pts, cfg)?));
        }
    }

    let mut out = String::new();
    let mut failed = false;
    for (name, p) in &inputs {
        let l = QFaceLattice::build(p);
        for &prop in &props {
            if !explicit && prop.needs_compact() && !p.compact() {
                let _ = writeln!(out, "{name}: {} skipped (not compact)", prop.name());
                continue;
            }
            let ok = prop.evaluate(p, &l)?;
            failed |= !ok;
            let _ = writeln!(out, "{name}: {} {}", prop.name(), if ok { "pass" } else { "FAIL" });
        }
    }
    Ok(Report { stdout: out, status: if failed { status::CHECK_FAILED } else { 0 } })
}
