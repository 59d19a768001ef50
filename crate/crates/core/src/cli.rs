//! The `schroder` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::bijections::{big_phi, big_phi_inv, big_psi, big_psi_inv, phi, phi_inv, psi, psi_inv, BitSeq, TritSeq};
use crate::error::Error;
use crate::paths::{enumerate_paths, hill_triangle, PathClass, SchroderPath};
use crate::perm::enumerate_separable;
use crate::riordan::{compare_with_bfile, parse_bfile, specialize, uv_triangle};
use crate::trees::{enumerate_trees, path_to_tree, rho, rho_inv, tau, tree_to_path, DiSkTree};
use crate::triangle::{RiordanTriangle, TriangleEntry};
use crate::verify::{run_suite, SuiteId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "schroder", version, about = "Schröder paths, di-sk trees and separable permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a triangle of counts or polynomials.
    Triangle {
        #[arg(long, value_enum)]
        kind: TriangleKind,
        /// Number of rows, starting at row 0.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(long, allow_hyphen_values = true, requires = "v")]
        u: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "u")]
        v: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Compare row sums against a local b-file (`index value` lines).
        #[arg(long)]
        bfile: Option<PathBuf>,
    },
    /// Apply one of the bijections.
    Map {
        #[arg(value_enum)]
        map: MapName,
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        tree: Option<String>,
        /// Apply the inverse afterwards and report OK or FAIL.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List objects of one size, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TriangleKind {
    Hills,
    Littlehills,
    Uv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    #[value(name = "phi")]
    Phi,
    #[value(name = "phi-inv")]
    PhiInv,
    #[value(name = "Phi")]
    BigPhi,
    #[value(name = "Phi-inv")]
    BigPhiInv,
    #[value(name = "psi")]
    Psi,
    #[value(name = "psi-inv")]
    PsiInv,
    #[value(name = "Psi")]
    BigPsi,
    #[value(name = "Psi-inv")]
    BigPsiInv,
    #[value(name = "rho")]
    Rho,
    #[value(name = "rho-inv")]
    RhoInv,
    #[value(name = "tau")]
    Tau,
    #[value(name = "path-to-tree")]
    PathToTree,
    #[value(name = "tree-to-path")]
    TreeToPath,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumKind {
    Paths,
    Little,
    Trees,
    Separable,
}

enum Failure {
    Usage(String),
    Precondition(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Triangle { kind, rows, u, v, format, bfile } => {
            cmd_triangle(kind, rows as usize, u.zip(v), format, bfile, out, err)
        }
        Command::Map { map, path, b, t, k, tree, roundtrip } => {
            let inputs = MapInputs { path, b, t, k, tree };
            cmd_map(map, &inputs, roundtrip, out)
        }
        Command::Verify { suite, n, jobs } => cmd_verify(&suite, n, jobs, out),
        Command::Enumerate { kind, n, count } => cmd_enumerate(kind, n, count, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Precondition(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_FAILURE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn emit<T: TriangleEntry>(tri: &RiordanTriangle<T>, kind: &str, format: Format, out: &mut dyn Write) -> Outcome {
    let text = match format {
        Format::Json => format!("{}\n", tri.to_json(kind)),
        Format::Csv => tri.to_csv(),
        Format::Md => tri.to_markdown(),
    };
    out.write_all(text.as_bytes()).map_err(|e| Failure::Verification(e.to_string()))
}

fn cmd_triangle(
    kind: TriangleKind,
    rows: usize,
    uv: Option<(i64, i64)>,
    format: Format,
    bfile: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let n_max = rows - 1;
    let ints = match (kind, uv) {
        (TriangleKind::Hills, None) => hill_triangle(n_max, PathClass::All),
        (TriangleKind::Littlehills, None) => hill_triangle(n_max, PathClass::Little),
        (TriangleKind::Uv, Some((u, v))) => specialize(&uv_triangle(n_max), &BigInt::from(u), &BigInt::from(v)),
        (TriangleKind::Uv, None) => {
            if bfile.is_some() {
                return Err(Failure::Usage("--bfile needs integer entries; pass --u and --v".into()));
            }
            return emit(&uv_triangle(n_max), "uv", format, out);
        }
        (_, Some(_)) => return Err(Failure::Usage("--u/--v only apply to --kind uv".into())),
    };
    let label = match kind {
        TriangleKind::Hills => "hills",
        TriangleKind::Littlehills => "littlehills",
        TriangleKind::Uv => "uv",
    };
    emit(&ints, label, format, out)?;
    if let Some(path) = bfile {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let entries = parse_bfile(&text)?;
        let compared = compare_with_bfile(&ints.row_sums(), &entries)
            .map_err(|e| Failure::Verification(format!("b-file {}: {e}", path.display())))?;
        let _ = writeln!(err, "b-file: {compared} entries match");
    }
    Ok(())
}

struct MapInputs {
    path: Option<String>,
    b: Option<String>,
    t: Option<String>,
    k: Option<usize>,
    tree: Option<String>,
}

/// `-` stands for an empty word or sequence.
fn blank(s: &str) -> &str {
    if s == "-" {
        ""
    } else {
        s
    }
}

fn show(s: impl ToString) -> String {
    let s = s.to_string();
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}

impl MapInputs {
    fn need<'a>(v: &'a Option<String>, flag: &str) -> std::result::Result<&'a str, Failure> {
        v.as_deref().map(blank).ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
    }

    fn path(&self) -> std::result::Result<SchroderPath, Failure> {
        Self::need(&self.path, "path")?.parse().map_err(|e: Error| Failure::Usage(format!("{}: {e}", e.name())))
    }

    fn bits(&self) -> std::result::Result<BitSeq, Failure> {
        Self::need(&self.b, "b")?.parse().map_err(|e: Error| Failure::Usage(format!("{}: {e}", e.name())))
    }

    fn trits(&self) -> std::result::Result<TritSeq, Failure> {
        Self::need(&self.t, "t")?.parse().map_err(|e: Error| Failure::Usage(format!("{}: {e}", e.name())))
    }

    fn tree(&self) -> std::result::Result<DiSkTree, Failure> {
        Self::need(&self.tree, "tree")?.parse().map_err(|e: Error| Failure::Usage(format!("{}: {e}", e.name())))
    }

    fn k(&self) -> std::result::Result<usize, Failure> {
        self.k.ok_or_else(|| Failure::Usage("missing --k".into()))
    }
}

fn cmd_map(map: MapName, inp: &MapInputs, roundtrip: bool, out: &mut dyn Write) -> Outcome {
    use MapName::*;
    let (image, back_ok) = match map {
        Phi => {
            let (p, b) = (inp.path()?, inp.bits()?);
            let q = phi(&p, &b)?;
            let ok = roundtrip && phi_inv(&q)? == (p, b);
            (show(&q), ok)
        }
        PhiInv => {
            let q = inp.path()?;
            let (p, b) = phi_inv(&q)?;
            let ok = roundtrip && phi(&p, &b)? == q;
            (format!("{} {}", show(&p), show(&b)), ok)
        }
        BigPhi => {
            let (p, b, k) = (inp.path()?, inp.bits()?, inp.k()?);
            let q = big_phi(&p, &b, k)?;
            let ok = roundtrip && big_phi_inv(&q)? == (p, b);
            (show(&q), ok)
        }
        BigPhiInv => {
            let q = inp.path()?;
            let (p, b) = big_phi_inv(&q)?;
            let ok = roundtrip && big_phi(&p, &b, q.hills())? == q;
            (format!("{} {}", show(&p), show(&b)), ok)
        }
        Psi => {
            let (p, t) = (inp.path()?, inp.trits()?);
            let q = psi(&p, &t)?;
            let ok = roundtrip && psi_inv(&q)? == (p, t);
            (show(&q), ok)
        }
        PsiInv => {
            let q = inp.path()?;
            let (p, t) = psi_inv(&q)?;
            let ok = roundtrip && psi(&p, &t)? == q;
            (format!("{} {}", show(&p), show(&t)), ok)
        }
        BigPsi => {
            let (p, t, k) = (inp.path()?, inp.trits()?, inp.k()?);
            let q = big_psi(&p, &t, k)?;
            let ok = roundtrip && big_psi_inv(&q)? == (p, t);
            (show(&q), ok)
        }
        BigPsiInv => {
            let q = inp.path()?;
            let (p, t) = big_psi_inv(&q)?;
            let ok = roundtrip && big_psi(&p, &t, q.hills())? == q;
            (format!("{} {}", show(&p), show(&t)), ok)
        }
        Rho => {
            let (t, b, k) = (inp.tree()?, inp.bits()?, inp.k()?);
            let s = rho(&t, &b, k)?;
            let ok = roundtrip && rho_inv(&s)? == (t, b);
            (s.to_string(), ok)
        }
        RhoInv => {
            let s = inp.tree()?;
            let (t, b) = rho_inv(&s)?;
            let ok = roundtrip && rho(&t, &b, s.first_minus_index())? == s;
            (format!("{t} {}", show(&b)), ok)
        }
        Tau => {
            let t = inp.tree()?;
            let f = tau(&t)?;
            let ok = roundtrip && tau(&f)? == t;
            (f.to_string(), ok)
        }
        PathToTree => {
            let p = inp.path()?;
            let t = path_to_tree(&p)?;
            let ok = roundtrip && tree_to_path(&t)? == p;
            (t.to_string(), ok)
        }
        TreeToPath => {
            let t = inp.tree()?;
            let p = tree_to_path(&t)?;
            let ok = roundtrip && path_to_tree(&p)? == t;
            (show(&p), ok)
        }
    };
    let write = |out: &mut dyn Write, s: &str| writeln!(out, "{s}").map_err(|e| Failure::Verification(e.to_string()));
    write(out, &image)?;
    if roundtrip {
        write(out, if back_ok { "OK" } else { "FAIL" })?;
        if !back_ok {
            return Err(Failure::Verification("roundtrip mismatch".into()));
        }
    }
    Ok(())
}

fn cmd_verify(suite: &str, n: Option<usize>, jobs: Option<usize>, out: &mut dyn Write) -> Outcome {
    let ids: Vec<SuiteId> = if suite == "all" {
        SuiteId::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| {
            let names: Vec<&str> = SuiteId::ALL.iter().map(|s| s.as_str()).collect();
            Failure::Usage(format!("unknown suite {suite:?}; expected all or one of {}", names.join(", ")))
        })?]
    };
    let mut failed = None;
    for id in ids {
        let report = run_suite(id, n.unwrap_or(id.default_n()), jobs)?;
        writeln!(out, "{report}").map_err(|e| Failure::Verification(e.to_string()))?;
        if let Some(p) = report.first_failure() {
            failed.get_or_insert_with(|| format!("{id}: {} failed", p.name));
        }
    }
    match failed {
        Some(msg) => Err(Failure::Verification(msg)),
        None => Ok(()),
    }
}

fn cmd_enumerate(kind: EnumKind, n: usize, count: bool, out: &mut dyn Write) -> Outcome {
    let lines: Box<dyn Iterator<Item = String>> = match kind {
        EnumKind::Paths => Box::new(enumerate_paths(n, PathClass::All).map(show)),
        EnumKind::Little => Box::new(enumerate_paths(n, PathClass::Little).map(show)),
        EnumKind::Trees => {
            if n == 0 {
                return Err(Failure::Usage("trees are indexed from n = 1".into()));
            }
            Box::new(enumerate_trees(n).into_iter().map(|t| t.to_string()))
        }
        EnumKind::Separable => {
            if n == 0 {
                return Err(Failure::Usage("permutations need n >= 1".into()));
            }
            Box::new(enumerate_separable(n).into_iter().map(|p| p.to_string()))
        }
    };
    let io = |e: std::io::Error| Failure::Verification(e.to_string());
    if count {
        writeln!(out, "{}", lines.count()).map_err(io)?;
    } else {
        for line in lines {
            writeln!(out, "{line}").map_err(io)?;
        }
    }
    Ok(())
}
