mod io;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use clusterforge::ccmap::{cc_map, DecoratedObject};
use clusterforge::checks;
use clusterforge::cluster::{explore, Seed};
use clusterforge::generic::{BasisKind, GenericEngine};
use clusterforge::grassmannian::counting_polynomials;
use clusterforge::kronecker::{base_change_matrix, KroneckerFamily};
use clusterforge::quiver::reflection_class;
use clusterforge::reflect::{extended_reflect, verify_reflection_compatibility, ReflectionContext};
use clusterforge::tubes::{check_difference_property, exceptional_tubes, thin_delta_module, Lambda};
use clusterforge::{LaurentPolynomial, Quiver, QuiverType};
use serde_json::{json, Value};

use crate::io::{fmt_vector, laurent_to_json, load_json, object_from_json, object_to_json, parse_ints, quiver_from_json};

#[derive(Parser)]
#[command(name = "clusterforge", version, about = "Cluster characters and generic variables of acyclic quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Quiver as a JSON file or inline JSON: {"vertices":[..],"arrows":[[s,t],..]}
    #[arg(long)]
    quiver: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Dynkin, affine or wild type of the underlying graph.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Caldero-Chapoton character of a decorated object, or of the thin
    /// delta-module M_lambda of an affine A quiver.
    Ccmap {
        #[command(flatten)]
        common: Common,
        /// Object as a JSON file or inline JSON.
        #[arg(long, conflicts_with = "lambda")]
        rep: Option<String>,
        /// Parameter of M_lambda: a rational such as 2 or -1/3, or inf.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Counting polynomials and Euler characteristics of quiver Grassmannians.
    Grassmannian {
        #[command(flatten)]
        common: Common,
        /// Object as a JSON file or inline JSON.
        #[arg(long)]
        rep: String,
        /// Only this subdimension vector.
        #[arg(long)]
        dim: Option<String>,
    },
    /// Generic variable X_d.
    Generic {
        #[command(flatten)]
        common: Common,
        /// Dimension vector, negative entries allowed.
        #[arg(long, allow_hyphen_values = true)]
        dim: String,
    },
    /// Generic basis elements with dimension vectors in [-1, box].
    Basis {
        #[command(flatten)]
        common: Common,
        /// Upper corner of the box, e.g. 2,2,2.
        #[arg(long = "box")]
        bound: String,
    },
    /// Mutate the initial seed along a sequence of vertices, or explore all
    /// seeds up to a depth when no sequence is given.
    Mutate {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertex labels, mutated left to right.
        #[arg(long)]
        seq: Option<String>,
        /// Maximal number of mutations from the initial seed.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Difference property for every quasi-simple of every exceptional tube.
    Diffprop {
        #[command(flatten)]
        common: Common,
    },
    /// Reflect an object at a sink or source and compare the characters.
    Reflect {
        #[command(flatten)]
        common: Common,
        /// Label of the sink or source to reflect at.
        #[arg(long)]
        sink: u32,
        /// Object as a JSON file or inline JSON.
        #[arg(long)]
        rep: String,
    },
    /// Grading form of the quiver or of a quiver in its reflection class.
    Grade {
        #[command(flatten)]
        common: Common,
    },
    /// Base change between the Kronecker families z^n, P_n(z) and C_n(z).
    KroneckerBasechange {
        #[arg(long)]
        from: KroneckerFamily,
        #[arg(long)]
        to: KroneckerFamily,
        /// Largest index.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the property suite of every module.
    Verify {
        /// Restrict to one module.
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Status {
    Ok,
    /// A checked property failed.
    Failed,
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
    if let Ok(n) = std::env::var("CLUSTERFORGE_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: CLUSTERFORGE_THREADS must be a positive integer");
                return ExitCode::from(1);
            }
        }
    }
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn quiver(common: &Common) -> Result<Quiver> {
    let arg = common.quiver.as_deref().ok_or_else(|| anyhow!("--quiver is required"))?;
    quiver_from_json(&load_json(arg)?)
}

fn vertex(q: &Quiver, label: u32) -> Result<usize> {
    q.index_of(label).ok_or_else(|| anyhow!("no vertex labelled {label}"))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).unwrap());
}

fn run(command: Command) -> Result<Status> {
    match command {
        Command::Classify { common } => classify(&common),
        Command::Ccmap { common, rep, lambda } => ccmap(&common, rep.as_deref(), lambda.as_deref()),
        Command::Grassmannian { common, rep, dim } => grassmannian(&common, &rep, dim.as_deref()),
        Command::Generic { common, dim } => generic(&common, &dim),
        Command::Basis { common, bound } => basis(&common, &bound),
        Command::Mutate { common, seq, depth } => mutate(&common, seq.as_deref(), depth),
        Command::Diffprop { common } => diffprop(&common),
        Command::Reflect { common, sink, rep } => reflect(&common, sink, &rep),
        Command::Grade { common } => grade(&common),
        Command::KroneckerBasechange { from, to, n, format } => basechange(from, to, n, format),
        Command::Verify { module, format } => verify(module.as_deref(), format),
    }
}

fn classify(common: &Common) -> Result<Status> {
    let q = quiver(common)?;
    let ty = q.classify()?;
    let delta = match ty {
        QuiverType::Affine(_) => Some(q.delta()?),
        _ => None,
    };
    match common.format {
        Format::Text => {
            println!("{ty}");
            if let Some(d) = &delta {
                println!("delta = {}", fmt_vector(d));
            }
        }
        Format::Json => print_json(&json!({
            "type": ty.to_string(),
            "delta": delta,
            "sinks": q.sinks().iter().map(|&i| q.label(i)).collect::<Vec<_>>(),
            "sources": q.sources().iter().map(|&i| q.label(i)).collect::<Vec<_>>(),
        })),
    }
    Ok(Status::Ok)
}

fn print_laurent(p: &LaurentPolynomial, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => print_json(&laurent_to_json(p)),
    }
}

fn load_object(common: &Common, rep: &str) -> Result<DecoratedObject> {
    let fallback = common.quiver.as_deref().map(|_| quiver(common)).transpose()?;
    object_from_json(&load_json(rep)?, fallback.as_ref())
}

fn ccmap(common: &Common, rep: Option<&str>, lambda: Option<&str>) -> Result<Status> {
    let obj = match (rep, lambda) {
        (Some(rep), _) => load_object(common, rep)?,
        (None, Some(l)) => {
            let l: Lambda = l.parse()?;
            DecoratedObject::from_module(thin_delta_module(&quiver(common)?, &l)?)
        }
        (None, None) => bail!("give --rep or --lambda"),
    };
    print_laurent(&cc_map(&obj)?, common.format);
    Ok(Status::Ok)
}

fn grassmannian(common: &Common, rep: &str, dim: Option<&str>) -> Result<Status> {
    let obj = load_object(common, rep)?;
    let only = dim
        .map(|d| -> Result<Vec<usize>> {
            parse_ints(d)?
                .into_iter()
                .map(|x| usize::try_from(x).map_err(|_| anyhow!("--dim must be nonnegative")))
                .collect()
        })
        .transpose()?;
    let table = counting_polynomials(obj.module())?;
    if let Some(e) = &only {
        if !table.contains_key(e) {
            bail!("{} is not a subdimension vector of {}", fmt_vector(e), fmt_vector(obj.module().dims()));
        }
    }
    let rows: Vec<_> = table.iter().filter(|(e, _)| only.as_ref().map_or(true, |o| o == *e)).collect();
    match common.format {
        Format::Text => {
            for (e, poly) in &rows {
                let count = poly.to_string().replace('x', "q");
                println!("{}  chi = {}  count = {count}", fmt_vector(e), poly.eval(&1.into()));
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(e, poly)| {
                    let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
                    json!({ "dim": e, "chi": poly.eval(&1.into()).to_string(), "count": coeffs })
                })
                .collect();
            print_json(&Value::Array(v));
        }
    }
    Ok(Status::Ok)
}

fn kind_string(kind: &BasisKind) -> String {
    match kind {
        BasisKind::ClusterMonomial => "cluster monomial".into(),
        BasisKind::ZPowerTimesRigidRegular { n, regular } => {
            let parts: Vec<String> = regular.iter().map(|r| format!("X{}", fmt_vector(r))).collect();
            if parts.is_empty() {
                format!("z^{n}")
            } else {
                format!("z^{n} * {}", parts.join(" * "))
            }
        }
    }
}

fn generic(common: &Common, dim: &str) -> Result<Status> {
    let q = quiver(common)?;
    let d = parse_ints(dim)?;
    let mut engine = GenericEngine::new(&q)?;
    let positive: Vec<i64> = d.iter().map(|&x| x.max(0)).collect();
    let decomposition = engine.canonical_decomposition(&positive)?;
    let x = engine.generic_variable(&d)?;
    match common.format {
        Format::Text => {
            println!("d = {}", fmt_vector(&d));
            println!("decomposition: {decomposition}");
            println!("kind: {}", kind_string(&x.kind));
            println!("X_d = {}", x.value);
        }
        Format::Json => print_json(&json!({
            "d": d,
            "decomposition": decomposition.to_string(),
            "kind": kind_string(&x.kind),
            "value": laurent_to_json(&x.value),
        })),
    }
    Ok(Status::Ok)
}

fn basis(common: &Common, bound: &str) -> Result<Status> {
    let q = quiver(common)?;
    let bound = parse_ints(bound)?;
    let elements = GenericEngine::new(&q)?.enumerate_generic_basis(&bound)?;
    match common.format {
        Format::Text => {
            for b in &elements {
                println!("{}\t{}\t{}", fmt_vector(&b.d), kind_string(&b.kind), b.value);
            }
        }
        Format::Json => {
            let v: Vec<Value> = elements
                .iter()
                .map(|b| json!({ "d": b.d, "kind": kind_string(&b.kind), "value": laurent_to_json(&b.value) }))
                .collect();
            print_json(&Value::Array(v));
        }
    }
    Ok(Status::Ok)
}

fn mutate(common: &Common, seq: Option<&str>, depth: usize) -> Result<Status> {
    let q = quiver(common)?;
    let Some(seq) = seq else {
        let e = explore(&q, depth)?;
        match common.format {
            Format::Text => {
                println!("{} cluster variables, {} clusters, closed = {}", e.variables.len(), e.clusters, e.closed);
                for x in e.variables.values() {
                    println!("{x}");
                }
            }
            Format::Json => print_json(&json!({
                "clusters": e.clusters,
                "closed": e.closed,
                "variables": e.variables.values().map(laurent_to_json).collect::<Vec<_>>(),
            })),
        }
        return Ok(Status::Ok);
    };
    let path = parse_ints(seq)?
        .into_iter()
        .map(|v| vertex(&q, u32::try_from(v).map_err(|_| anyhow!("bad vertex {v}"))?))
        .collect::<Result<Vec<_>>>()?;
    let seed = Seed::initial(&q).mutate_sequence(&path)?;
    match common.format {
        Format::Text => {
            for (i, x) in seed.cluster().iter().enumerate() {
                println!("x{} = {x}", q.label(i));
            }
        }
        Format::Json => print_json(&json!({
            "cluster": seed.cluster().iter().map(laurent_to_json).collect::<Vec<_>>(),
        })),
    }
    Ok(Status::Ok)
}

fn diffprop(common: &Common) -> Result<Status> {
    let q = quiver(common)?;
    let mut all = true;
    let mut out = Vec::new();
    for (t, tube) in exceptional_tubes(&q)?.iter().enumerate() {
        for r in check_difference_property(&q, tube)? {
            all &= r.holds;
            match common.format {
                Format::Text => println!(
                    "{}  {}  {}",
                    fmt_vector(&r.quasi_socle),
                    r.difference,
                    if r.holds { "PASS" } else { "FAIL" }
                ),
                Format::Json => out.push(json!({
                    "tube": t,
                    "quasi_socle": r.quasi_socle,
                    "difference": laurent_to_json(&r.difference),
                    "quotient": laurent_to_json(&r.x_quotient),
                    "holds": r.holds,
                })),
            }
        }
    }
    if common.format == Format::Json {
        print_json(&Value::Array(out));
    }
    Ok(if all { Status::Ok } else { Status::Failed })
}

fn reflect(common: &Common, sink: u32, rep: &str) -> Result<Status> {
    let obj = load_object(common, rep)?;
    let q = obj.quiver().clone();
    let ctx = ReflectionContext::new(&q, vertex(&q, sink)?)?;
    let image = extended_reflect(&ctx, &obj)?;
    let ok = verify_reflection_compatibility(&ctx, &obj)?;
    match common.format {
        Format::Text => {
            println!("{}", serde_json::to_string(&object_to_json(&image))?);
            println!("dimension {} -> {}", fmt_vector(&obj.extended_dimension()), fmt_vector(&image.extended_dimension()));
            println!("compatibility {}", if ok { "PASS" } else { "FAIL" });
        }
        Format::Json => print_json(&json!({ "object": object_to_json(&image), "compatible": ok })),
    }
    Ok(if ok { Status::Ok } else { Status::Failed })
}

fn grade(common: &Common) -> Result<Status> {
    let q = quiver(common)?;
    let found = if let Some(eps) = q.grading_form() {
        Some((q.clone(), eps))
    } else if q.is_acyclic() {
        reflection_class(&q, 2 * q.n()).into_iter().find_map(|x| x.grading_form().map(|e| (x, e)))
    } else {
        None
    };
    match common.format {
        Format::Text => match &found {
            Some((x, eps)) if x == &q => println!("grading form {}", fmt_vector(eps)),
            Some((x, eps)) => {
                println!("no grading form; reflection class contains a graded quiver");
                println!("{}", serde_json::to_string(&io::quiver_to_json(x))?);
                println!("grading form {}", fmt_vector(eps));
            }
            None => println!("infeasible"),
        },
        Format::Json => print_json(&match &found {
            Some((x, eps)) => json!({ "feasible": true, "quiver": io::quiver_to_json(x), "form": eps }),
            None => json!({ "feasible": false }),
        }),
    }
    Ok(Status::Ok)
}

fn basechange(from: KroneckerFamily, to: KroneckerFamily, n: usize, format: Format) -> Result<Status> {
    let m = base_change_matrix(from, to, n);
    match format {
        Format::Text => {
            for row in &m {
                let r: Vec<String> = row.iter().map(ToString::to_string).collect();
                println!("{}", r.join(" "));
            }
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            print_json(&json!({ "from": from.to_string(), "to": to.to_string(), "matrix": rows }));
        }
    }
    Ok(Status::Ok)
}

fn verify(module: Option<&str>, format: Format) -> Result<Status> {
    if let Some(m) = module {
        if !checks::MODULES.contains(&m) {
            bail!("unknown module {m:?}; expected one of {}", checks::MODULES.join(", "));
        }
    }
    let results = checks::run(module);
    let failed = results.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Text => {
            for r in &results {
                match &r.outcome {
                    Ok(detail) => println!("PASS  {}: {}: {detail}", r.module, r.name),
                    Err(why) => println!("FAIL  {}: {}: {why}", r.module, r.name),
                }
            }
            println!("{} checks, {failed} failed", results.len());
        }
        Format::Json => {
            let v: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "module": r.module,
                        "check": r.name,
                        "passed": r.passed(),
                        "detail": match &r.outcome { Ok(s) | Err(s) => s },
                    })
                })
                .collect();
            print_json(&Value::Array(v));
        }
    }
    Ok(if failed == 0 { Status::Ok } else { Status::Failed })
}
