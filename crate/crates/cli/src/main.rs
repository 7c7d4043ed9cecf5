use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use sgcover::engine::{
    describe, exact_scc_signed, histogram, scc_upper_cover, theorem_bounds, verify_cover, BoundReport, CoverOptions,
    Rational64,
};
use sgcover::format::{emit_cover, emit_instance, parse_cover, parse_instance};
use sgcover::generate::{random_instance, rng, GenSpec};
use sgcover::structure::{classify_bridges, is_g_bridgeless, is_s_bridgeless};
use sgcover::switching::negativeness_exact;
use sgcover::{Error, Limits, SignedGraph};

#[derive(Parser)]
#[command(name = "sgcover", version, about = "Signed-circuit covers of signed graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Negativeness, bridges, partner sets and bridgeless verdicts.
    Analyze { file: PathBuf },
    /// Build a signed-circuit cover and report its bounds.
    Cover {
        file: PathBuf,
        /// Use the exact minimum-length search instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a cover file against an instance.
    Verify {
        file: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Print the bound report only.
    Bound { file: PathBuf },
    /// Emit a random instance.
    Gen(GenArgs),
    /// Cover a random corpus and check every bound.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    neg: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    s_bridgeless: bool,
    #[arg(long)]
    g_bridgeless_even: bool,
    #[arg(long, default_value_t = 10_000)]
    max_attempts: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 20)]
    max_m: usize,
    #[arg(long)]
    g_bridgeless_even: bool,
}

/// Failure with its exit code: 1 property violation, 2 input error,
/// 3 budget or size limit.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimit { .. } | Error::Budget(_) => 3,
            Error::Defect(_) | Error::BoundViolation(_) | Error::NotACover(_) | Error::InvalidCircuit(_) => 1,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn violation(msg: impl Into<String>) -> Failure {
    Failure { code: 1, msg: msg.into() }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<SignedGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    })?;
    Ok(parse_instance(&text)?)
}

fn edges(es: &[usize]) -> String {
    let v: Vec<String> = es.iter().map(|e| format!("e{e}")).collect();
    format!("[{}]", v.join(" "))
}

fn analyze(path: &Path, limits: &Limits) -> Outcome {
    let g = load(path)?;
    let mut out = String::new();
    let eps = negativeness_exact(&g, limits)?;
    let cat = classify_bridges(&g)?;
    let _ = writeln!(out, "vertices {} edges {}", g.vertex_count(), g.edge_count());
    let _ = writeln!(out, "negativeness {}", eps.epsilon_n);
    let _ = writeln!(out, "bridges {}", edges(&cat.bridges));
    let _ = writeln!(out, "s-bridges {}", edges(&cat.s_bridges));
    let _ = writeln!(out, "g-bridges {}", edges(&cat.g_class_bridges));
    for (e, s) in &cat.partner_sets {
        let _ = writeln!(out, "partners e{e} {}", edges(s));
    }
    let report = is_s_bridgeless(&g, limits)?;
    let _ = writeln!(out, "s-bridgeless {} uncovered {}", report.is_s_bridgeless(), edges(&report.uncovered()));
    let _ = writeln!(out, "g-bridgeless {}", is_g_bridgeless(&g, limits)?);
    Ok(out)
}

fn bound_lines(b: &BoundReport) -> String {
    format!(
        "bound e={} v={} eps={} k={}\n  general {}\n  even {}\n  corollary {}\n  chained {}\n",
        b.e, b.v, b.eps_n, b.k, b.bound_general, b.bound_even, b.corollary_bound, b.chained_bound
    )
}

fn cover(path: &Path, oracle: bool, limits: &Limits) -> Outcome {
    let g = load(path)?;
    if oracle {
        return match exact_scc_signed(&g, limits)? {
            Some(f) => Ok(format!("{}length {}\n", emit_cover(&f), f.length())),
            None => Err(Failure {
                code: 2,
                msg: "instance has no signed-circuit cover".into(),
            }),
        };
    }
    let up = scc_upper_cover(&g, limits, CoverOptions::default())?;
    let mut out = emit_cover(&up.cover);
    for m in &up.cover.members {
        let _ = writeln!(out, "# {}", describe(m));
    }
    let _ = writeln!(out, "length {} (without positive loops {})", up.length, up.stripped_length);
    let _ = writeln!(out, "branch {:?}", up.branch);
    out.push_str(&bound_lines(&up.bounds));
    Ok(out)
}

fn verify(path: &Path, cover_path: &Path) -> Outcome {
    let g = load(path)?;
    let text = std::fs::read_to_string(cover_path).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", cover_path.display()),
    })?;
    let parsed = parse_cover(&g, &text)?;
    let report = verify_cover(&g, &parsed.family, None);
    let mut out = String::new();
    for (line, d) in &parsed.rejected {
        let _ = writeln!(out, "line {line}: {d:?}");
    }
    let _ = writeln!(out, "{}", report.summary());
    let m: Vec<String> = report.multiplicities.iter().enumerate().map(|(e, k)| format!("e{e}:{k}")).collect();
    let _ = writeln!(out, "multiplicities {}", m.join(" "));
    let h: Vec<String> = histogram(&report).iter().map(|(k, n)| format!("{k}x{n}")).collect();
    let _ = writeln!(out, "histogram {}", h.join(" "));
    if report.valid && parsed.rejected.is_empty() {
        Ok(out + "valid\n")
    } else {
        Err(violation(out + "invalid"))
    }
}

fn bound(path: &Path, limits: &Limits) -> Outcome {
    let g = load(path)?;
    match scc_upper_cover(&g, limits, CoverOptions::default()) {
        Ok(up) => Ok(bound_lines(&up.bounds)),
        Err(Error::NotSBridgeless(_)) => {
            let eps = negativeness_exact(&g, limits)?.epsilon_n as i64;
            let b = theorem_bounds(g.edge_count() as i64, g.vertex_count() as i64, eps, 3)?;
            Ok(format!("# not s-bridgeless: no cover exists\n{}", bound_lines(&b)))
        }
        Err(e) => Err(e.into()),
    }
}

fn gen(a: &GenArgs, limits: &Limits) -> Outcome {
    let mut spec = GenSpec::new(a.n, a.m, a.neg);
    spec.s_bridgeless = a.s_bridgeless;
    spec.g_bridgeless_even = a.g_bridgeless_even;
    spec.max_attempts = a.max_attempts;
    let g = random_instance(&spec, a.seed, limits)?;
    Ok(format!("# sgcover gen --n {} --m {} --neg {} --seed {}\n{}", a.n, a.m, a.neg, a.seed, emit_instance(&g)))
}

/// Instance `idx` of the corpus: sizes are redrawn from a per-instance
/// stream until the generator accepts, so output is independent of threading.
fn bench_one(a: &BenchArgs, idx: usize, limits: &Limits) -> Result<String, Failure> {
    use sgcover::generate::Rng;
    let mut r = rng(a.seed ^ (idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut last = None;
    for _ in 0..20 {
        let n = r.gen_range(2..=a.max_n);
        let m = r.gen_range((n + 1).min(a.max_m)..=a.max_m);
        let mut spec = GenSpec::new(n, m, r.gen_range(2..=m.min(8)));
        spec.s_bridgeless = true;
        spec.g_bridgeless_even = a.g_bridgeless_even;
        spec.min_negativeness = 2;
        spec.max_attempts = 2_000;
        match random_instance(&spec, r.gen(), limits) {
            Ok(g) => return bench_check(a, &g, limits),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt").into())
}

fn bench_check(a: &BenchArgs, g: &SignedGraph, limits: &Limits) -> Result<String, Failure> {
    let up = scc_upper_cover(g, limits, CoverOptions::default())?;
    let b = &up.bounds;
    let limit = if a.g_bridgeless_even { b.bound_even } else { b.bound_general };
    let len = Rational64::from_integer(up.stripped_length as i64);
    if len > limit {
        return Err(violation(format!("length={} bound={limit}", up.stripped_length)));
    }
    Ok(format!("length={} bound={limit} slack={}", up.stripped_length, limit - len))
}

fn bench(a: &BenchArgs, limits: &Limits) -> Result<String, Failure> {
    if a.max_n < 2 || a.max_m < 3 {
        return Err(Failure {
            code: 2,
            msg: "bench needs --max-n of at least 2 and --max-m of at least 3".into(),
        });
    }
    let lines: Vec<Result<String, Failure>> = (0..a.count).into_par_iter().map(|i| bench_one(a, i, limits)).collect();
    let mut out = String::new();
    let mut code = 0;
    for l in lines {
        match l {
            Ok(s) => {
                let _ = writeln!(out, "ok {s}");
            }
            Err(f) => {
                code = code.max(f.code);
                let word = if f.code == 1 { "violation" } else { "error" };
                let _ = writeln!(out, "{word} {}", f.msg);
            }
        }
    }
    if code > 0 {
        Err(Failure {
            code: code.min(3),
            msg: out.trim_end().to_string(),
        })
    } else {
        Ok(out)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let result = match &cli.cmd {
        Command::Analyze { file } => analyze(file, &limits),
        Command::Cover { file, oracle } => cover(file, *oracle, &limits),
        Command::Verify { file, cover } => verify(file, cover),
        Command::Bound { file } => bound(file, &limits),
        Command::Gen(a) => gen(a, &limits),
        Command::Bench(a) => bench(a, &limits),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.code == 1 || f.msg.contains('\n') {
                println!("{}", f.msg);
            } else {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}
