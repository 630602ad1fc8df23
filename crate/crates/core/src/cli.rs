//! Command-line front end: argument parsing, JSON/text output and the
//! on-disk cache of `F_k` tables.

use std::ffi::OsString;
use std::fs::{self, OpenOptions};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charclass::{
    by_degree, chern2_closed, chern_classes, chern_of_rep, is_spinorial, orthogonality_type,
    swc_restrict, total_swc_factorization, CharacterLattice, Rep, SWC_KMAX_DEFAULT,
};
use crate::error::{Error, Result};
use crate::linalg::q;
use crate::oracle::{oracle_elementary, oracle_power_sum, weight_multiplicities, MAX_DIM_DEFAULT};
use crate::polyalg::BiPoly;
use crate::powersum::{power_sums, symbolic_power_sums, PowerSumResult};
use crate::rootsys::{build_root_system, supported, Kind, RootSystem, WeightVector};
use crate::weylsum::{d_vee_at_delta, fk_at_point, q2, q2_vee, FkTable, KMAX_DEFAULT};

pub const SCHEMA: u64 = 1;
const BUILD: &str = concat!(env!("CARGO_PKG_NAME"), "-", env!("CARGO_PKG_VERSION"));

#[derive(Parser, Debug)]
#[command(
    name = "weightcalc",
    version,
    about = "Power sums and characteristic classes of highest-weight representations"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Directory for cached F_k tables (default: $WEIGHTCALC_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Dimension guard for weight enumeration.
    #[arg(long, global = true, default_value_t = MAX_DIM_DEFAULT)]
    max_dim: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct RsArgs {
    /// Root system type, e.g. A2, or A together with --rank.
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct WeightArg {
    /// Highest weight, comma separated (e-coordinates for GLn).
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    weight: Vec<i64>,
}

#[derive(Args, Debug, Clone)]
struct GroupArgs {
    /// Built-in group: SLn, PGL2, GLn, Sp2n, SOn, SC-<type>.
    #[arg(long)]
    group: String,
    #[command(flatten)]
    weight: WeightArg,
}

#[derive(Args, Debug, Clone)]
struct SumArgs {
    #[command(flatten)]
    rs: RsArgs,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Option<Vec<i64>>,
    #[arg(long)]
    k: usize,
    /// Polynomials in the highest weight (a-variables) instead of a fixed weight.
    #[arg(long)]
    symbolic: bool,
    /// Largest F_k index allowed in symbolic mode.
    #[arg(long, default_value_t = KMAX_DEFAULT)]
    kmax: usize,
}

#[derive(Args, Debug, Clone)]
struct SwcArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Use S(pi) = pi + dual with its hyperbolic form.
    #[arg(long)]
    hyperbolic: bool,
    #[arg(long, default_value_t = SWC_KMAX_DEFAULT)]
    k: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system data.
    Info(RsArgs),
    /// The Weyl sum F_k as a polynomial in a and y.
    Fk {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long)]
        k: usize,
        /// Divide by d * d^vee.
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value_t = KMAX_DEFAULT)]
        kmax: usize,
    },
    /// Power sums P_0..P_k of the weights.
    Powersum(SumArgs),
    /// Elementary symmetric functions E_0..E_k of the weights.
    Elementary(SumArgs),
    /// Torus Chern classes in the lattice generators.
    Chern {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// c_2 from the closed formula.
    Chern2(GroupArgs),
    /// Stiefel-Whitney classes restricted to the 2-torsion of the torus.
    Swc(SwcArgs),
    /// Total Stiefel-Whitney class from order-2 character values.
    SwcTotal(SwcArgs),
    Spinorial {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        hyperbolic: bool,
    },
    /// Orthogonal, symplectic or not self-dual.
    Orthotype {
        #[arg(long, conflicts_with = "kind")]
        group: Option<String>,
        #[arg(long = "type")]
        kind: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[command(flatten)]
        weight: WeightArg,
    },
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Cross-check the independent computation paths on a grid.
    Verify {
        /// Rank <= 3 and coordinates <= 3 instead of rank <= 2 and <= 2.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Weight multiplicities by Freudenthal's formula.
    Weights {
        #[command(flatten)]
        rs: RsArgs,
        #[command(flatten)]
        weight: WeightArg,
    },
}

/// Exit code and the two output streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    input: Value,
    result: Value,
    text: String,
    failed: bool,
}

impl Reply {
    fn new(input: Value, result: Value, text: String) -> Self {
        Reply {
            input,
            result,
            text,
            failed: false,
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.format;
    let reply = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Config(format!("cannot start {n} workers: {e}"))),
        },
        None => dispatch(&cli),
    };
    match reply {
        Ok(r) => {
            let stdout = match format {
                Format::Json => {
                    let doc = json!({"schema": SCHEMA, "input": r.input, "result": r.result});
                    format!("{doc}\n")
                }
                Format::Text => format!("{}\n", r.text),
            };
            Outcome {
                code: if r.failed { 1 } else { 0 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: if e.is_domain() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn root_system(kind: &str, rank: Option<usize>) -> Result<RootSystem> {
    let (k, r) =
        Kind::parse(kind).ok_or_else(|| Error::Config(format!("unknown type {kind:?}")))?;
    let r = match (r, rank) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Config(format!(
                "type {kind} conflicts with --rank {b}"
            )))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(Error::Config(format!("type {kind} needs --rank"))),
    };
    build_root_system(k, r)
}

impl RsArgs {
    fn build(&self) -> Result<RootSystem> {
        root_system(&self.kind, self.rank)
    }
}

fn lattice_for(rs: &RootSystem) -> Result<CharacterLattice> {
    CharacterLattice::builtin(&format!("SC-{}", rs.name()))
}

fn poly_entry(k: usize, f: &BiPoly, names: Option<&[String]>) -> Value {
    match names {
        Some(n) => {
            let x: Vec<String> = (1..=n.len()).map(|i| format!("x{i}")).collect();
            json!({"k": k, "text": f.to_text_with(n), "poly": f.to_json_with(&x)})
        }
        None => json!({"k": k, "text": f.to_text(), "poly": f.to_json()}),
    }
}

fn dispatch(cli: &Cli) -> Result<Reply> {
    let cache = Cache::new(cli.cache_dir.clone());
    match &cli.command {
        Command::Info(a) => info(&a.build()?),
        Command::Fk {
            rs,
            k,
            reduced,
            kmax,
        } => {
            let rs = rs.build()?;
            let mut table = cache.load(&rs, *kmax);
            let f = if *reduced {
                table.reduced(&rs, *k)?.clone()
            } else {
                table.get(&rs, *k)?.clone()
            };
            cache.store(&rs, &table);
            Ok(Reply::new(
                json!({"command": "fk", "type": rs.name(), "k": k, "reduced": reduced}),
                poly_entry(*k, &f, None),
                f.to_text(),
            ))
        }
        Command::Powersum(a) => sums(&cache, a, false),
        Command::Elementary(a) => sums(&cache, a, true),
        Command::Chern { group, k } => {
            let lat = CharacterLattice::builtin(&group.group)?;
            let c = chern_classes(&lat, &group.weight.weight, *k)?.c;
            let text = (1..c.len())
                .map(|i| format!("c{i} = {}", c[i].to_text_with(&lat.names)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Reply::new(
                json!({"command": "chern", "group": lat.name, "weight": group.weight.weight, "k": k}),
                json!({"lattice": lat.to_json(), "c": c.iter().enumerate().map(|(i, f)| poly_entry(i, f, Some(&lat.names))).collect::<Vec<_>>()}),
                text,
            ))
        }
        Command::Chern2(group) => {
            let lat = CharacterLattice::builtin(&group.group)?;
            let c2 = chern2_closed(&lat, &group.weight.weight)?;
            Ok(Reply::new(
                json!({"command": "chern2", "group": lat.name, "weight": group.weight.weight}),
                json!({"lattice": lat.to_json(), "c2": poly_entry(2, &c2, Some(&lat.names))}),
                c2.to_text_with(&lat.names),
            ))
        }
        Command::Swc(a) => {
            let (lat, pi) = swc_input(a)?;
            let w = swc_restrict(&lat, &pi, a.k)?.w;
            let text = (1..w.len())
                .map(|i| format!("w{i} = {}", w[i].to_text_with(&lat.mod2_names)))
                .collect::<Vec<_>>()
                .join("\n");
            let ws: Vec<Value> = w
                .iter()
                .enumerate()
                .map(|(i, p)| json!({"k": i, "text": p.to_text_with(&lat.mod2_names), "poly": p.to_text()}))
                .collect();
            Ok(Reply::new(
                swc_json("swc", &lat, a),
                json!({"lattice": lat.to_json(), "w": ws}),
                text,
            ))
        }
        Command::SwcTotal(a) => {
            let (lat, pi) = swc_input(a)?;
            let f = total_swc_factorization(&lat, &pi, a.k, cli.max_dim)?;
            let direct = swc_restrict(&lat, &pi, a.k)?.w;
            let agrees = by_degree(&f.w, a.k) == direct;
            let names = &lat.mod2_names;
            let m: Vec<String> = f.m.iter().map(BigInt::to_string).collect();
            let mut reply = Reply::new(
                swc_json("swc-total", &lat, a),
                json!({
                    "lattice": lat.to_json(),
                    "chi": f.chi.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    "m": m,
                    "w": f.w.to_text_with(names),
                    "agrees_with_swc": agrees,
                }),
                format!("m = {}\nw = {}", m.join(", "), f.w.to_text_with(names)),
            );
            reply.failed = !agrees;
            Ok(reply)
        }
        Command::Spinorial { group, hyperbolic } => {
            let lat = CharacterLattice::builtin(&group.group)?;
            let pi = Rep {
                weight: group.weight.weight.clone(),
                hyperbolic: *hyperbolic,
            };
            let cert = is_spinorial(&lat, &pi)?;
            Ok(Reply::new(
                json!({"command": "spinorial", "group": lat.name, "weight": pi.weight, "hyperbolic": hyperbolic}),
                json!({
                    "spinorial": cert.spinorial,
                    "c2": poly_entry(2, &cert.c2, Some(&lat.names)),
                    "j": cert.j,
                    "secondary": cert.secondary,
                }),
                if cert.spinorial {
                    "spinorial"
                } else {
                    "not spinorial"
                }
                .into(),
            ))
        }
        Command::Orthotype {
            group,
            kind,
            rank,
            weight,
        } => {
            let lat = match (group, kind) {
                (Some(g), _) => CharacterLattice::builtin(g)?,
                (None, Some(t)) => lattice_for(&root_system(t, *rank)?)?,
                (None, None) => {
                    return Err(Error::Config("orthotype needs --group or --type".into()))
                }
            };
            let t = orthogonality_type(&lat, &weight.weight)?;
            Ok(Reply::new(
                json!({"command": "orthotype", "group": lat.name, "weight": weight.weight}),
                json!({"type": t.as_str()}),
                t.as_str().into(),
            ))
        }
        Command::Oracle {
            command: OracleCommand::Weights { rs, weight },
        } => {
            let rs = rs.build()?;
            let wm = weight_multiplicities(&rs, &WeightVector(weight.weight.clone()), cli.max_dim)?;
            let text = wm
                .mult
                .iter()
                .rev()
                .map(|(mu, m)| {
                    let c: Vec<String> = mu.0.iter().map(i64::to_string).collect();
                    format!("{}: {m}", c.join(","))
                })
                .collect::<Vec<_>>()
                .join("\n");
            let mut result = wm.to_json();
            result["dimension"] = json!(wm.dimension());
            Ok(Reply::new(
                json!({"command": "oracle weights", "type": rs.name(), "weight": weight.weight}),
                result,
                text,
            ))
        }
        Command::Verify { full } => verify(*full, cli.max_dim),
    }
}

fn swc_input(a: &SwcArgs) -> Result<(CharacterLattice, Rep)> {
    let lat = CharacterLattice::builtin(&a.group.group)?;
    let pi = Rep {
        weight: a.group.weight.weight.clone(),
        hyperbolic: a.hyperbolic,
    };
    Ok((lat, pi))
}

fn swc_json(command: &str, lat: &CharacterLattice, a: &SwcArgs) -> Value {
    json!({
        "command": command,
        "group": lat.name,
        "weight": a.group.weight.weight,
        "hyperbolic": a.hyperbolic,
        "k": a.k,
    })
}

fn info(rs: &RootSystem) -> Result<Reply> {
    let killing: Vec<Vec<String>> = rs
        .killing
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    let q2 = q2(rs).y_only()?;
    let q2v = q2_vee(rs);
    let result = json!({
        "name": rs.name(),
        "rank": rs.rank,
        "cartan": rs.cartan,
        "positive_roots": rs.positive_roots.iter().map(|a| a.0.clone()).collect::<Vec<_>>(),
        "n_pos": rs.n_pos,
        "dim_g": rs.dim_g,
        "weyl_order": rs.weyl_order(),
        "minus_one_in_w": rs.minus_one_in_w,
        "killing": killing,
        "q2": q2.to_text(),
        "q2_vee": q2v.to_text(),
        "d_vee_at_delta": d_vee_at_delta(rs).to_string(),
    });
    let rows: Vec<String> = rs
        .cartan
        .iter()
        .map(|r| r.iter().map(|c| format!("{c:>3}")).collect::<String>())
        .collect();
    let text = format!(
        "{}: rank {}, {} positive roots, dim {}, |W| = {}\ncartan:\n{}\nq2 = {}\nq2_vee = {}",
        rs.name(),
        rs.rank,
        rs.n_pos,
        rs.dim_g,
        rs.weyl_order(),
        rows.join("\n"),
        q2.to_text(),
        q2v.to_text()
    );
    Ok(Reply::new(
        json!({"command": "info", "type": rs.name()}),
        result,
        text,
    ))
}

fn sums(cache: &Cache, a: &SumArgs, elementary: bool) -> Result<Reply> {
    let rs = a.rs.build()?;
    let res: PowerSumResult = match (&a.weight, a.symbolic) {
        (Some(_), true) => {
            return Err(Error::Config("--symbolic takes no --weight".into()));
        }
        (None, false) => {
            return Err(Error::Config(
                "--weight is required unless --symbolic".into(),
            ))
        }
        (Some(w), false) => power_sums(&rs, &WeightVector(w.clone()), a.k)?,
        (None, true) => {
            let mut table = cache.load(&rs, a.kmax);
            let r = symbolic_power_sums(&rs, &mut table, a.k);
            cache.store(&rs, &table);
            r?
        }
    };
    let seq = if elementary { &res.e } else { &res.p };
    let key = if elementary { "e" } else { "p" };
    let command = if elementary { "elementary" } else { "powersum" };
    let mut result = json!({});
    result[key] = seq
        .iter()
        .enumerate()
        .map(|(i, f)| poly_entry(i, f, None))
        .collect();
    if !a.symbolic {
        result["dimension"] = json!(seq[0].constant_term().to_string());
    }
    Ok(Reply::new(
        json!({"command": command, "type": rs.name(), "weight": a.weight, "k": a.k, "symbolic": a.symbolic}),
        result,
        seq[a.k].to_text(),
    ))
}

/// One JSON file of `F_k` entries per root system, written atomically under
/// an exclusive lock. Entries that fail to parse or to match a spot check are
/// thrown away.
struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    fn new(flag: Option<PathBuf>) -> Self {
        let dir = flag.or_else(|| std::env::var_os("WEIGHTCALC_CACHE").map(PathBuf::from));
        Cache { dir }
    }

    fn paths(&self, rs: &RootSystem) -> Option<(PathBuf, PathBuf)> {
        let dir = self.dir.as_ref()?;
        Some((
            dir.join(format!("fk-{}.json", rs.name())),
            dir.join(format!("fk-{}.lock", rs.name())),
        ))
    }

    fn load(&self, rs: &RootSystem, kmax: usize) -> FkTable {
        let mut table = FkTable::new(rs, kmax);
        if let Some((path, _)) = self.paths(rs) {
            if let Ok(text) = fs::read_to_string(&path) {
                if read_table(rs, &text, &mut table).is_err() {
                    table = FkTable::new(rs, kmax);
                    let _ = fs::remove_file(&path);
                }
            }
        }
        table
    }

    /// Best effort: a failed write only costs recomputation later.
    fn store(&self, rs: &RootSystem, table: &FkTable) {
        if let Some((path, lock)) = self.paths(rs) {
            let _ = write_table(rs, table, &path, &lock);
        }
    }
}

fn read_table(rs: &RootSystem, text: &str, table: &mut FkTable) -> Result<()> {
    let v: Value = serde_json::from_str(text)?;
    if v.get("schema").and_then(Value::as_u64) != Some(SCHEMA)
        || v.get("build").and_then(Value::as_str) != Some(BUILD)
    {
        return Err(Error::Invariant("stale cache file".into()));
    }
    table.merge_json(&v["table"])?;
    spot_check(rs, table)
}

/// Compare every entry with the concrete Weyl sum at one point.
fn spot_check(rs: &RootSystem, table: &FkTable) -> Result<()> {
    let r = rs.rank;
    let mu = WeightVector((0..r).map(|i| 2 + i as i64).collect());
    let nu: Vec<_> = (0..r).map(|i| q(((i + 1) * (i + 1) + 1) as i64)).collect();
    let a: Vec<_> = mu.0.iter().map(|&x| q(x)).collect();
    for (k, f) in table.entries() {
        if f.eval_point(&a, &nu) != fk_at_point(rs, &mu, &nu, *k) {
            return Err(Error::Invariant(format!(
                "cached F_{k} fails the spot check"
            )));
        }
    }
    Ok(())
}

fn write_table(rs: &RootSystem, table: &FkTable, path: &Path, lock: &Path) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let lock = OpenOptions::new()
        .create(true)
        .truncate(false)
        .write(true)
        .open(lock)?;
    lock.lock()?;
    let mut merged = FkTable::new(rs, usize::MAX);
    if let Ok(text) = fs::read_to_string(path) {
        if read_table(rs, &text, &mut merged).is_err() {
            merged = FkTable::new(rs, usize::MAX);
        }
    }
    let before = merged.entries().len();
    merged.merge_json(&table.to_json())?;
    if merged.entries().len() == before && before > 0 {
        return Ok(());
    }
    let doc = json!({"schema": SCHEMA, "build": BUILD, "table": merged.to_json()});
    let tmp = dir.join(format!(
        "{}.tmp{}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("fk"),
        std::process::id()
    ));
    fs::write(&tmp, doc.to_string())?;
    fs::rename(&tmp, path)?;
    Ok(())
}

type Check = (String, Box<dyn Fn() -> Result<bool> + Send + Sync>);

fn dominant_grid(rank: usize, bound: i64) -> Vec<WeightVector> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WeightVector).collect()
}

fn verify_checks(full: bool, max_dim: u64) -> Vec<Check> {
    let (rmax, bound) = if full { (3, 3) } else { (2, 2) };
    let mut checks: Vec<Check> = vec![];
    for (kind, rank) in supported().into_iter().filter(|&(_, r)| r <= rmax) {
        for lambda in dominant_grid(rank, bound) {
            let name = format!("oracle {kind:?}{rank} {:?}", lambda.0);
            checks.push((
                name,
                Box::new(move || {
                    let rs = build_root_system(kind, rank)?;
                    let res = power_sums(&rs, &lambda, 6)?;
                    let wm = weight_multiplicities(&rs, &lambda, max_dim)?;
                    let p_ok = (0..=6).all(|k| res.p[k] == oracle_power_sum(&wm, k));
                    let e_ok = res.e == oracle_elementary(&wm, 6);
                    let lat = lattice_for(&rs)?;
                    let c2 = chern_classes(&lat, &lambda.0, 2)?.c.swap_remove(2);
                    Ok(p_ok && e_ok && c2 == chern2_closed(&lat, &lambda.0)?)
                }),
            ));
        }
    }
    let mut triangle: Vec<(&str, Vec<i64>, bool)> = vec![];
    for l in 0..=10 {
        triangle.push(("SL2", vec![l], l % 2 == 1));
    }
    for m in 0..=3 {
        for n in 0..=3 {
            triangle.push(("SL3", vec![m, n], m != n));
        }
    }
    triangle.push(("Sp4", vec![2, 0], false));
    triangle.push(("SO5", vec![0, 2], false));
    triangle.push(("SO5", vec![1, 0], false));
    triangle.push(("GL2", vec![1, -1], false));
    for (group, weight, hyperbolic) in triangle {
        let name = format!(
            "triangle {group} {}{weight:?}",
            if hyperbolic { "S" } else { "" }
        );
        checks.push((
            name,
            Box::new(move || {
                let lat = CharacterLattice::builtin(group)?;
                let pi = Rep {
                    weight: weight.clone(),
                    hyperbolic,
                };
                let k = SWC_KMAX_DEFAULT;
                let from_c: Vec<_> = chern_of_rep(&lat, &pi, k)?
                    .iter()
                    .map(BiPoly::mod2_reduce)
                    .collect::<Result<_>>()?;
                let w = swc_restrict(&lat, &pi, k)?.w;
                let f = total_swc_factorization(&lat, &pi, k, max_dim)?;
                Ok(from_c == w && by_degree(&f.w, k) == w)
            }),
        ));
    }
    checks
}

fn verify(full: bool, max_dim: u64) -> Result<Reply> {
    let checks = verify_checks(full, max_dim);
    let results: Vec<(String, std::result::Result<bool, String>)> = checks
        .par_iter()
        .map(|(name, f)| (name.clone(), f().map_err(|e| e.to_string())))
        .collect();
    let failed: Vec<&(String, std::result::Result<bool, String>)> =
        results.iter().filter(|(_, r)| r != &Ok(true)).collect();
    let entries: Vec<Value> = results
        .iter()
        .map(|(name, r)| match r {
            Ok(b) => json!({"check": name, "pass": b}),
            Err(e) => json!({"check": name, "pass": false, "error": e}),
        })
        .collect();
    let mut text: Vec<String> = failed
        .iter()
        .map(|(name, r)| match r {
            Err(e) => format!("FAIL {name}: {e}"),
            _ => format!("FAIL {name}"),
        })
        .collect();
    text.push(format!("{} checks, {} failed", results.len(), failed.len()));
    let mut reply = Reply::new(
        json!({"command": "verify", "full": full}),
        json!({"checks": entries, "passed": results.len() - failed.len(), "failed": failed.len()}),
        text.join("\n"),
    );
    reply.failed = !failed.is_empty();
    Ok(reply)
}
