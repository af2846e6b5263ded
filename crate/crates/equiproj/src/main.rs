//! Command-line front end: every subcommand prints a deterministic JSON
//! report (command echo, normalized inputs, results with a provenance label
//! on every number, optional certificate, timing) or, with `--csv`, a flat
//! CSV table. Exit codes: 0 on success, 1 when independently computed values
//! disagree (`project --method both`, `verify`), 2 on usage or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use equiproj::angles::{angle_sum_table, grassmann_sum, intrinsic_volume_sum};
use equiproj::arrangements::Arrangement;
use equiproj::combinatorics::{stirling1_b_row, stirling1_row, stirling2, stirling2_b};
use equiproj::linalg::{parse_rat, Rat, RationalMatrix};
use equiproj::permutohedra::{faces_of_dim_a, faces_of_dim_b, PermutohedronA, PermutohedronB};
use equiproj::projection::{
    certified_projection, certify_general_position, projected_face_count_formula,
    projected_face_count_oracle, Certificate, PolytopeSpec, Projection,
};
use equiproj::report::{json_int, json_int_vec, json_rat_vec, json_usize, Report};
use equiproj::verify::run_desk_suite;
use equiproj::{Error, Result};
use num_bigint::BigInt;
use serde_json::{Map, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "equiproj",
    version,
    about = "Exact face counts, characteristic polynomials, and angle sums \
             for permutohedra and belt polytopes under linear projection"
)]
struct Cli {
    /// Worker threads for parallel enumeration (default: $EQUIPROJ_THREADS,
    /// else one per core); results never depend on the thread count
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print tables as CSV rows instead of the JSON report
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One row of Stirling-style counting numbers, k = 0..=n
    Stirling {
        /// 1 = cycles, 2 = surjections, 1B / 2B = signed analogues
        #[arg(long)]
        kind: StirlingKind,
        #[arg(long)]
        n: usize,
    },
    /// Face counts and face descriptors of a permutohedron
    Faces {
        #[arg(long = "type")]
        family: Family,
        /// Strictly decreasing parameter values, e.g. "3,2,1"
        #[arg(long)]
        x: String,
        /// List the faces of this dimension
        #[arg(long)]
        j: Option<usize>,
        /// Include vertex coordinates
        #[arg(long)]
        vertices: bool,
    },
    /// Characteristic polynomial of a hyperplane arrangement
    Charpoly {
        /// Arrangement file: first line `dim n`, then one normal per line
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long, default_value = "moebius")]
        method: CharMethod,
    },
    /// Face counts of a d-dimensional shadow, by closed form and/or LP oracle
    Project {
        #[arg(long = "type")]
        family: Family,
        /// Parameter values for --type A/B
        #[arg(long)]
        x: Option<String>,
        /// Arrangement file for --type belt
        #[arg(long)]
        arrangement: Option<PathBuf>,
        /// Target dimension of the image
        #[arg(long)]
        d: usize,
        /// Count only faces of this dimension (default: all j < d)
        #[arg(long)]
        j: Option<usize>,
        /// Projection matrix file: first line `rows cols`, then entries
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Seed for the certified random matrix draw (fixed default keeps
        /// runs reproducible)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "formula")]
        method: ProjectMethod,
    },
    /// Sums of conic intrinsic volumes and Grassmann angles over j-faces
    Angles {
        #[arg(long = "type")]
        family: Family,
        /// Parameter values for --type A/B
        #[arg(long)]
        x: Option<String>,
        /// Arrangement file for --type belt
        #[arg(long)]
        arrangement: Option<PathBuf>,
        /// Emit the full (j, d) grid
        #[arg(long)]
        table: bool,
        /// Face dimension for a single query
        #[arg(long)]
        j: Option<usize>,
        /// Subspace codimension parameter for a single query
        #[arg(long)]
        d: Option<usize>,
    },
    /// Run a verification suite and exit nonzero on any mismatch
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StirlingKind {
    #[value(name = "1")]
    Cycle,
    #[value(name = "2")]
    Surjection,
    #[value(name = "1B", alias = "1b")]
    CycleB,
    #[value(name = "2B", alias = "2b")]
    SurjectionB,
}

impl StirlingKind {
    fn label(self) -> &'static str {
        match self {
            StirlingKind::Cycle => "1",
            StirlingKind::Surjection => "2",
            StirlingKind::CycleB => "1B",
            StirlingKind::SurjectionB => "2B",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "belt")]
    Belt,
}

impl Family {
    fn label(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::Belt => "belt",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CharMethod {
    #[value(name = "whitney")]
    Whitney,
    #[value(name = "moebius")]
    Moebius,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProjectMethod {
    #[value(name = "formula")]
    Formula,
    #[value(name = "oracle")]
    Oracle,
    #[value(name = "both")]
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    #[value(name = "desk")]
    Desk,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    init_threads(cli.threads)?;
    let start = Instant::now();
    match cli.command {
        Command::Stirling { kind, n } => cmd_stirling(kind, n, cli.csv, start),
        Command::Faces { family, x, j, vertices } => {
            cmd_faces(family, &x, j, vertices, cli.csv, start)
        }
        Command::Charpoly { arrangement, method } => {
            cmd_charpoly(&arrangement, method, cli.csv, start)
        }
        Command::Project { family, x, arrangement, d, j, matrix, seed, method } => cmd_project(
            family,
            x.as_deref(),
            arrangement.as_deref(),
            d,
            j,
            matrix.as_deref(),
            seed,
            method,
            cli.csv,
            start,
        ),
        Command::Angles { family, x, arrangement, table, j, d } => {
            cmd_angles(family, x.as_deref(), arrangement.as_deref(), table, j, d, cli.csv, start)
        }
        Command::Verify { suite: Suite::Desk, seed } => cmd_verify(seed),
    }
}

fn init_threads(flag: Option<usize>) -> Result<()> {
    let threads = match flag {
        Some(t) => Some(t),
        None => match std::env::var("EQUIPROJ_THREADS") {
            Ok(raw) => Some(raw.parse::<usize>().map_err(|_| {
                Error::InvalidArgument(format!("EQUIPROJ_THREADS must be an integer, got {raw:?}"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::State(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn parse_values(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(|t| parse_rat(t.trim())).collect()
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Builds the polytope named on the command line: A/B take `--x`,
/// belt takes `--arrangement`.
fn build_spec(
    family: Family,
    x: Option<&str>,
    arrangement: Option<&Path>,
) -> Result<(PolytopeSpec, Value)> {
    match family {
        Family::A | Family::B => {
            let x = x.ok_or_else(|| {
                Error::InvalidArgument(format!("--type {} requires --x", family.label()))
            })?;
            let values = parse_values(x)?;
            let mut inputs = Map::new();
            inputs.insert("type".into(), Value::String(family.label().into()));
            inputs.insert("x".into(), json_rat_vec(&values));
            let spec = match family {
                Family::A => {
                    let p = PermutohedronA::new(values)?;
                    PolytopeSpec::TypeA(p.n())
                }
                _ => {
                    let p = PermutohedronB::new(values)?;
                    PolytopeSpec::TypeB(p.n())
                }
            };
            Ok((spec, Value::Object(inputs)))
        }
        Family::Belt => {
            let path = arrangement.ok_or_else(|| {
                Error::InvalidArgument("--type belt requires --arrangement".into())
            })?;
            let arr = Arrangement::parse(&read_file(path)?)?;
            let mut inputs = Map::new();
            inputs.insert("type".into(), Value::String("belt".into()));
            inputs.insert("arrangement".into(), arrangement_summary(&arr, Some(path)));
            Ok((PolytopeSpec::Belt(arr), Value::Object(inputs)))
        }
    }
}

fn arrangement_summary(arr: &Arrangement, path: Option<&Path>) -> Value {
    let mut m = Map::new();
    m.insert("ambient_dim".into(), json_usize(arr.ambient_dim()));
    m.insert("hyperplanes".into(), json_usize(arr.num_hyperplanes()));
    if let Some(path) = path {
        m.insert("file".into(), Value::String(path.display().to_string()));
    }
    Value::Object(m)
}

/// Writes to stdout, exiting quietly when the consumer has closed the pipe
/// (e.g. `equiproj … | head`).
fn emit(text: &str) {
    use std::io::Write;
    if std::io::stdout().write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

fn print_report(
    command: &'static str,
    inputs: Value,
    results: Value,
    certificate: Option<Value>,
    start: Instant,
) {
    let report = Report {
        command,
        inputs,
        results,
        certificate,
        timing_seconds: start.elapsed().as_secs_f64(),
    };
    emit(&report.render());
}

fn cmd_stirling(kind: StirlingKind, n: usize, csv: bool, start: Instant) -> Result<ExitCode> {
    let row: Vec<BigInt> = match kind {
        StirlingKind::Cycle => stirling1_row(n),
        StirlingKind::Surjection => (0..=n).map(|k| stirling2(n, k)).collect(),
        StirlingKind::CycleB => stirling1_b_row(n),
        StirlingKind::SurjectionB => (0..=n).map(|k| stirling2_b(n, k)).collect(),
    };
    if csv {
        let mut out = String::from("k,value\n");
        for (k, v) in row.iter().enumerate() {
            out.push_str(&format!("{k},{v}\n"));
        }
        emit(&out);
        return Ok(ExitCode::SUCCESS);
    }
    let mut inputs = Map::new();
    inputs.insert("kind".into(), Value::String(kind.label().into()));
    inputs.insert("n".into(), json_usize(n));
    let mut results = Map::new();
    results.insert("row".into(), json_int_vec(&row));
    results.insert("provenance".into(), Value::String("formula".into()));
    print_report("stirling", Value::Object(inputs), Value::Object(results), None, start);
    Ok(ExitCode::SUCCESS)
}

fn block_1based(block: &[usize]) -> Value {
    Value::Array(block.iter().map(|&i| json_usize(i + 1)).collect())
}

fn sorted_points(mut pts: Vec<Vec<Rat>>) -> Value {
    pts.sort();
    Value::Array(pts.iter().map(|p| json_rat_vec(p)).collect())
}

fn cmd_faces(
    family: Family,
    x: &str,
    j: Option<usize>,
    vertices: bool,
    csv: bool,
    start: Instant,
) -> Result<ExitCode> {
    if family == Family::Belt {
        return Err(Error::InvalidArgument(
            "faces describes permutohedra; use --type A or --type B".into(),
        ));
    }
    let values = parse_values(x)?;
    let mut inputs = Map::new();
    inputs.insert("type".into(), Value::String(family.label().into()));
    inputs.insert("x".into(), json_rat_vec(&values));
    if let Some(j) = j {
        inputs.insert("j".into(), json_usize(j));
    }
    if vertices {
        inputs.insert("vertices".into(), Value::Bool(true));
    }

    enum Poly {
        A(PermutohedronA),
        B(PermutohedronB),
    }
    let poly = match family {
        Family::A => Poly::A(PermutohedronA::new(values)?),
        _ => Poly::B(PermutohedronB::new(values)?),
    };
    let (n, dim) = match &poly {
        Poly::A(p) => (p.n(), p.dim()),
        Poly::B(p) => (p.n(), p.dim()),
    };

    let counts: Vec<BigInt> = match &poly {
        Poly::A(p) => (0..=dim).map(|j| p.face_count(j)).collect(),
        Poly::B(p) => (0..=dim).map(|j| p.face_count(j)).collect(),
    };
    if csv {
        let mut out = String::from("j,count\n");
        for (j, c) in counts.iter().enumerate() {
            out.push_str(&format!("{j},{c}\n"));
        }
        emit(&out);
        return Ok(ExitCode::SUCCESS);
    }

    let mut results = Map::new();
    results.insert("ambient_dim".into(), json_usize(n));
    results.insert("dim".into(), json_usize(dim));
    let count_rows: Vec<Value> = counts
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut row = Map::new();
            row.insert("j".into(), json_usize(j));
            row.insert("count".into(), json_int(c));
            row.insert("provenance".into(), Value::String("formula".into()));
            Value::Object(row)
        })
        .collect();
    results.insert("face_counts".into(), Value::Array(count_rows));

    if let Some(j) = j {
        let mut faces = Vec::new();
        match &poly {
            Poly::A(p) => {
                for partition in faces_of_dim_a(n, j) {
                    let mut face = Map::new();
                    face.insert(
                        "blocks".into(),
                        Value::Array(partition.blocks().iter().map(|b| block_1based(b)).collect()),
                    );
                    if vertices {
                        face.insert("vertices".into(), sorted_points(p.face_vertices(&partition)?));
                    }
                    faces.push(Value::Object(face));
                }
            }
            Poly::B(p) => {
                for partition in faces_of_dim_b(n, j) {
                    let mut face = Map::new();
                    face.insert(
                        "blocks".into(),
                        Value::Array(partition.blocks().iter().map(|b| block_1based(b)).collect()),
                    );
                    face.insert("zero_block".into(), block_1based(partition.zero_block()));
                    face.insert(
                        "signs".into(),
                        Value::Array(
                            partition.signs().iter().map(|&s| Value::from(i64::from(s))).collect(),
                        ),
                    );
                    if vertices {
                        face.insert("vertices".into(), sorted_points(p.face_vertices(&partition)?));
                    }
                    faces.push(Value::Object(face));
                }
            }
        }
        results.insert("faces".into(), Value::Array(faces));
        results.insert("faces_provenance".into(), Value::String("identity".into()));
    } else if vertices {
        let pts = match &poly {
            Poly::A(p) => p.vertices(),
            Poly::B(p) => p.vertices(),
        };
        results.insert("vertices".into(), sorted_points(pts));
        results.insert("vertices_provenance".into(), Value::String("identity".into()));
    }

    print_report("faces", Value::Object(inputs), Value::Object(results), None, start);
    Ok(ExitCode::SUCCESS)
}

fn cmd_charpoly(
    path: &Path,
    method: CharMethod,
    csv: bool,
    start: Instant,
) -> Result<ExitCode> {
    let arr = Arrangement::parse(&read_file(path)?)?;
    let poly = match method {
        CharMethod::Moebius => arr.characteristic_polynomial(),
        CharMethod::Whitney => arr.characteristic_polynomial_whitney()?,
    };
    if csv {
        let mut out = String::from("i,a\n");
        for (i, a) in poly.unsigned_coefficients().iter().enumerate() {
            out.push_str(&format!("{i},{a}\n"));
        }
        emit(&out);
        return Ok(ExitCode::SUCCESS);
    }
    let mut inputs = Map::new();
    inputs.insert("arrangement".into(), arrangement_summary(&arr, Some(path)));
    inputs.insert(
        "method".into(),
        Value::String(match method {
            CharMethod::Moebius => "moebius".into(),
            CharMethod::Whitney => "whitney".into(),
        }),
    );
    let mut results = Map::new();
    results.insert("degree".into(), json_usize(poly.degree()));
    results.insert("a".into(), json_int_vec(poly.unsigned_coefficients()));
    results.insert("provenance".into(), Value::String("formula".into()));
    print_report("charpoly", Value::Object(inputs), Value::Object(results), None, start);
    Ok(ExitCode::SUCCESS)
}

fn certificate_json(cert: &Certificate, proj: &Projection, seed_used: Option<u64>) -> Value {
    let mut m = Map::new();
    m.insert("passed".into(), Value::Bool(cert.passed()));
    m.insert("transversal_to_flats".into(), Value::Bool(cert.transversal_to_flats));
    m.insert(
        "face_hull_check".into(),
        cert.face_hull_check.map_or(Value::Null, Value::Bool),
    );
    if let Some(w) = &cert.flat_witness {
        m.insert("flat_witness".into(), Value::String(w.clone()));
    }
    if let Some(w) = &cert.face_witness {
        m.insert("face_witness".into(), Value::String(w.clone()));
    }
    if let Some(s) = seed_used {
        m.insert("seed_used".into(), Value::from(s));
    }
    let g = proj.matrix();
    let mut matrix = Map::new();
    matrix.insert("rows".into(), json_usize(g.rows()));
    matrix.insert("cols".into(), json_usize(g.cols()));
    matrix.insert(
        "entries".into(),
        Value::Array((0..g.rows()).map(|r| json_rat_vec(g.row(r))).collect()),
    );
    m.insert("matrix".into(), Value::Object(matrix));
    Value::Object(m)
}

#[allow(clippy::too_many_arguments)]
fn cmd_project(
    family: Family,
    x: Option<&str>,
    arrangement: Option<&Path>,
    d: usize,
    j: Option<usize>,
    matrix: Option<&Path>,
    seed: Option<u64>,
    method: ProjectMethod,
    csv: bool,
    start: Instant,
) -> Result<ExitCode> {
    let (spec, mut inputs_value) = build_spec(family, x, arrangement)?;
    let inputs = inputs_value.as_object_mut().expect("inputs are an object");
    inputs.insert("d".into(), json_usize(d));
    if let Some(j) = j {
        inputs.insert("j".into(), json_usize(j));
    }
    inputs.insert(
        "method".into(),
        Value::String(
            match method {
                ProjectMethod::Formula => "formula",
                ProjectMethod::Oracle => "oracle",
                ProjectMethod::Both => "both",
            }
            .into(),
        ),
    );

    let want_formula = method != ProjectMethod::Oracle;
    let want_oracle = method != ProjectMethod::Formula;

    // A projection is in play if the oracle runs or if the caller supplied a
    // matrix to certify; the certificate always rides along in the report.
    let mut certified: Option<(Projection, Certificate, Option<u64>)> = None;
    if let Some(path) = matrix {
        let g = RationalMatrix::parse(&read_file(path)?)?;
        let proj = Projection::new(g, spec.ambient_dim())?;
        if proj.d() != d {
            return Err(Error::InvalidArgument(format!(
                "--d {d} does not match the {}-row matrix in {}",
                proj.d(),
                path.display()
            )));
        }
        inputs.insert("matrix_file".into(), Value::String(path.display().to_string()));
        let cert = certify_general_position(&spec, &proj)?;
        if want_oracle && !cert.passed() {
            let witness = cert.flat_witness.clone().unwrap_or_default();
            return Err(Error::InvalidArgument(format!(
                "matrix in {} is not in general position ({witness}); \
                 the oracle requires a certified matrix",
                path.display()
            )));
        }
        certified = Some((proj, cert, None));
    } else if want_oracle {
        let seed = seed.unwrap_or(0);
        inputs.insert("seed".into(), Value::from(seed));
        let (proj, cert, used) = certified_projection(&spec, d, seed, 256)?;
        certified = Some((proj, cert, Some(used)));
    } else if let Some(seed) = seed {
        inputs.insert("seed".into(), Value::from(seed));
        let (proj, cert, used) = certified_projection(&spec, d, seed, 256)?;
        certified = Some((proj, cert, Some(used)));
    }

    let targets: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..d).collect(),
    };

    let mut rows = Vec::new();
    let mut agreement = true;
    let mut csv_lines = Vec::new();
    for &j in &targets {
        let mut row = Map::new();
        row.insert("j".into(), json_usize(j));
        let formula = if want_formula {
            let v = projected_face_count_formula(&spec, d, j)?;
            row.insert("formula".into(), json_int(&v));
            Some(v)
        } else {
            None
        };
        let oracle = if want_oracle {
            let (proj, cert, _) = certified.as_ref().expect("oracle needs a projection");
            let v = projected_face_count_oracle(&spec, proj, cert, j)?;
            row.insert("oracle".into(), json_int(&v));
            Some(v)
        } else {
            None
        };
        if let (Some(f), Some(o)) = (&formula, &oracle) {
            if f != o {
                agreement = false;
            }
        }
        csv_lines.push(format!(
            "{j},{},{}",
            formula.map(|v| v.to_string()).unwrap_or_default(),
            oracle.map(|v| v.to_string()).unwrap_or_default()
        ));
        rows.push(Value::Object(row));
    }

    if csv {
        let mut out = String::from("j,formula,oracle\n");
        for line in csv_lines {
            out.push_str(&line);
            out.push('\n');
        }
        emit(&out);
    } else {
        let mut results = Map::new();
        results.insert("counts".into(), Value::Array(rows));
        if method == ProjectMethod::Both {
            results.insert("agreement".into(), Value::Bool(agreement));
        }
        let certificate =
            certified.as_ref().map(|(proj, cert, used)| certificate_json(cert, proj, *used));
        print_report("project", inputs_value, Value::Object(results), certificate, start);
    }
    if method == ProjectMethod::Both && !agreement {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_angles(
    family: Family,
    x: Option<&str>,
    arrangement: Option<&Path>,
    table: bool,
    j: Option<usize>,
    d: Option<usize>,
    csv: bool,
    start: Instant,
) -> Result<ExitCode> {
    let (spec, mut inputs_value) = build_spec(family, x, arrangement)?;
    let inputs = inputs_value.as_object_mut().expect("inputs are an object");

    if table {
        inputs.insert("table".into(), Value::Bool(true));
        let grid = angle_sum_table(&spec)?;
        if csv {
            let mut out = String::from("j,face_count,d,intrinsic_volume_sum,grassmann_sum\n");
            for row in &grid.rows {
                for d in 0..row.intrinsic_volume_sums.len() {
                    out.push_str(&format!(
                        "{},{},{d},{},{}\n",
                        row.j, row.face_count, row.intrinsic_volume_sums[d], row.grassmann_sums[d]
                    ));
                }
            }
            emit(&out);
            return Ok(ExitCode::SUCCESS);
        }
        let mut results = Map::new();
        results.insert("ambient_dim".into(), json_usize(grid.ambient_dim));
        results.insert("polytope_dim".into(), json_usize(grid.polytope_dim));
        let rows: Vec<Value> = grid
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                m.insert("j".into(), json_usize(row.j));
                m.insert("face_count".into(), json_int(&row.face_count));
                m.insert(
                    "intrinsic_volume_sums".into(),
                    json_int_vec(&row.intrinsic_volume_sums),
                );
                m.insert("grassmann_sums".into(), json_int_vec(&row.grassmann_sums));
                Value::Object(m)
            })
            .collect();
        results.insert("rows".into(), Value::Array(rows));
        results.insert("provenance".into(), Value::String("formula".into()));
        print_report("angles", inputs_value, Value::Object(results), None, start);
        return Ok(ExitCode::SUCCESS);
    }

    let (j, d) = match (j, d) {
        (Some(j), Some(d)) => (j, d),
        _ => {
            return Err(Error::InvalidArgument(
                "angles needs either --table or both --j and --d".into(),
            ))
        }
    };
    inputs.insert("j".into(), json_usize(j));
    inputs.insert("d".into(), json_usize(d));
    let upsilon = intrinsic_volume_sum(&spec, j, d)?;
    let gamma = grassmann_sum(&spec, j, d)?;
    if csv {
        emit(&format!(
            "j,d,intrinsic_volume_sum,grassmann_sum\n{j},{d},{upsilon},{gamma}\n"
        ));
        return Ok(ExitCode::SUCCESS);
    }
    let mut results = Map::new();
    results.insert("intrinsic_volume_sum".into(), json_int(&upsilon));
    results.insert("grassmann_sum".into(), json_int(&gamma));
    results.insert("provenance".into(), Value::String("formula".into()));
    print_report("angles", inputs_value, Value::Object(results), None, start);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(seed: u64) -> Result<ExitCode> {
    let outcomes = run_desk_suite(seed);
    let mut failed = 0usize;
    for o in &outcomes {
        match &o.outcome {
            Ok(()) => emit(&format!("criterion {}: PASS ({:.1} s)\n", o.number, o.seconds)),
            Err(e) => {
                failed += 1;
                emit(&format!("criterion {}: FAIL ({:.1} s)\n", o.number, o.seconds));
                eprintln!("criterion {} ({}): {e}", o.number, o.name);
            }
        }
    }
    emit(&format!("desk suite: {}/{} passed\n", outcomes.len() - failed, outcomes.len()));
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
