use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skeinmagma::evaluate::{compute, state_sum, state_sum_ordered};
use skeinmagma::magma::{
    builtin, builtin_names, parse_magma, validate_entropic, validate_kbm, validate_marked_conditions, verify_gamma8_tables,
    DEFAULT_N,
};
use skeinmagma::moves::{is_admissible, load_fixtures, simplify, simplify_seeded, verify_invariance, Admissibility};
use skeinmagma::{Error, MagmaSpec, MarkedDiagram, Sign, SiteKind};

mod report;

use report::{pass, render_all, Format, Record};

#[derive(Parser)]
#[command(name = "skeinmagma", version, about = "Magma-valued state sums of link and marked graph diagrams")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output form.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct MagmaArgs {
    /// Builtin magma name or path to a magma file.
    #[arg(long)]
    magma: String,
    /// Normalizer to apply after evaluation; repeat to chain, left to right.
    #[arg(long = "normalize")]
    normalize: Vec<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate a diagram.
    Eval {
        diagram: PathBuf,
        #[command(flatten)]
        magma: MagmaArgs,
        /// Also evaluate in 20 site orders shuffled from this seed and check they agree.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a magma against the axioms and the move conditions.
    ValidateMagma {
        #[arg(long)]
        magma: String,
        /// Length of the finite sequence checks.
        #[arg(long, default_value_t = DEFAULT_N)]
        n: i64,
    },
    /// Evaluate both sides of every pair in a fixture corpus.
    CheckMoves {
        #[arg(long)]
        fixtures: PathBuf,
        #[command(flatten)]
        magma: MagmaArgs,
    },
    /// Write the two marker resolutions.
    Resolutions {
        diagram: PathBuf,
        /// Write `<out>.plus.mkd` and `<out>.minus.mkd` instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide admissibility by simplifying both resolutions.
    Admissible { diagram: PathBuf },
    /// Remove kinks and bigons.
    Simplify {
        diagram: PathBuf,
        /// Write the result here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Shuffle the choice of moves.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Exit 1: the check ran and failed. Exit 2: bad input or unmet prerequisites.
enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_diagram(path: &Path) -> Result<MarkedDiagram, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    MarkedDiagram::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_magma(name: &str) -> Result<MagmaSpec, Failure> {
    if builtin_names().contains(&name) {
        return Ok(builtin(name)?);
    }
    let path = Path::new(name);
    if !path.exists() {
        return Err(Failure::Input(format!(
            "unknown magma `{name}` (builtins: {})",
            builtin_names().join(", ")
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_magma(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn eval(path: &Path, args: &MagmaArgs, seed: Option<u64>, format: Format) -> Outcome {
    let d = read_diagram(path)?;
    let m = load_magma(&args.magma)?;
    let norms: Vec<&str> = args.normalize.iter().map(|s| s.as_str()).collect();
    let v = compute(&d, &m, &norms)?;
    let mut orders_agree = None;
    if let Some(seed) = seed {
        let base = state_sum(&d, &m)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ids = |k: SiteKind| -> Vec<usize> { d.sites().iter().filter(|s| s.kind == k).map(|s| s.id).collect() };
        let mut ok = true;
        for _ in 0..20 {
            let (mut order, mut c) = (ids(SiteKind::Marker), ids(SiteKind::Crossing));
            order.shuffle(&mut rng);
            c.shuffle(&mut rng);
            order.extend(c);
            ok &= state_sum_ordered(&d, &m, &order)?.eq(&base)?;
        }
        orders_agree = Some(ok);
    }
    let out = match format {
        Format::Text => format!("{v}\n"),
        Format::Machine => {
            let s = d.stats();
            let mut r = Record::new()
                .field("value", &v)
                .field("magma", &m.name)
                .field("normalizers", args.normalize.join(","))
                .field("c", s.c)
                .field("m", s.m);
            if let Some(w) = s.w {
                r.push("w", w);
            }
            if let Some(ok) = orders_agree {
                r.push("orders", pass(ok));
            }
            r.render(format)
        }
    };
    match orders_agree {
        Some(false) => Err(Failure::Check(format!("{out}site orders disagree"))),
        _ => Ok(out),
    }
}

fn validate(name: &str, n: i64, format: Format) -> Outcome {
    let m = load_magma(name)?;
    let mut r = Record::new().field("magma", &m.name);
    let star = validate_entropic(&m.star, &m.carrier)?;
    r.push("star_entropic", &star);
    let mut ok = star.passed;
    if let Some(b) = &m.bullet {
        let bullet = validate_entropic(b, &m.carrier)?;
        r.push("bullet_entropic", &bullet);
        ok &= bullet.passed;
    }
    let kbm = validate_kbm(&m, n)?;
    r.push("kbm", &kbm);
    ok &= kbm.passed;
    if m.is_marked() {
        let flags = validate_marked_conditions(&m, n)?;
        r.push("period2", pass(flags.period2));
        r.push("mixed_entropic", pass(flags.mixed_entropic));
        r.push("bullet_absorbing", pass(flags.bullet_absorbing));
        let moves: Vec<String> = flags.guaranteed_moves().iter().map(|k| k.ascii().to_string()).collect();
        r.push("guaranteed", moves.join(" "));
        let g8 = verify_gamma8_tables(&m)?;
        for (id, holds) in &g8.identities {
            r.push(&format!("gamma8 {id}"), if *holds { "holds" } else { "differs" });
        }
        r.push("gamma8", pass(g8.passed()));
    }
    let out = r.render(format);
    if ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn check_moves(dir: &Path, args: &MagmaArgs, format: Format) -> Outcome {
    let pairs = load_fixtures(dir)?;
    let m = load_magma(&args.magma)?;
    let norms: Vec<&str> = args.normalize.iter().map(|s| s.as_str()).collect();
    let report = verify_invariance(&m, &norms, &pairs)?;
    let records: Vec<Record> = report
        .outcomes
        .iter()
        .map(|o| {
            let result = match (&o.result, o.guaranteed) {
                (Ok(true), _) => "pass".to_string(),
                (Ok(false), false) => "expected-fail".to_string(),
                (Ok(false), true) => "fail".to_string(),
                (Err(e), _) => format!("error: {e}"),
            };
            Record::new()
                .field("move", o.kind.ascii())
                .field("fixture", &o.name)
                .field("magma", &m.name)
                .field("normalizers", args.normalize.join(","))
                .field("result", result)
        })
        .collect();
    let out = match format {
        Format::Machine => render_all(&records, format),
        Format::Text => {
            let mut s = report.to_string();
            s.push_str(&format!("consistent: {}\n", if report.consistent() { "yes" } else { "no" }));
            s
        }
    };
    let errors = report.outcomes.iter().any(|o| o.result.is_err());
    if errors || !report.consistent() {
        Err(Failure::Check(out))
    } else {
        Ok(out)
    }
}

fn resolutions(path: &Path, out: Option<&Path>) -> Outcome {
    let d = read_diagram(path)?;
    let (plus, minus) = (d.resolution(Sign::Positive), d.resolution(Sign::Negative));
    match out {
        None => Ok(format!("# L+\n{}# L-\n{}", plus.to_mkd(), minus.to_mkd())),
        Some(prefix) => {
            let mut written = String::new();
            for (tag, r) in [("plus", &plus), ("minus", &minus)] {
                let p = PathBuf::from(format!("{}.{tag}.mkd", prefix.display()));
                std::fs::write(&p, r.to_mkd()).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                written.push_str(&format!("{}\n", p.display()));
            }
            Ok(written)
        }
    }
}

fn admissible(path: &Path, format: Format) -> Outcome {
    let d = read_diagram(path)?;
    let a = is_admissible(&d)?;
    Ok(match (format, &a) {
        (Format::Text, _) => format!("{a}\n"),
        (Format::Machine, Admissibility::Unknown(why)) => {
            Record::new().field("admissible", &a).field("reason", why).render(format)
        }
        (Format::Machine, _) => Record::new().field("admissible", &a).render(format),
    })
}

fn simplify_cmd(path: &Path, out: Option<&Path>, seed: Option<u64>) -> Outcome {
    let d = read_diagram(path)?;
    let s = match seed {
        Some(k) => simplify_seeded(&d, k),
        None => simplify(&d),
    };
    let text = s.diagram.to_mkd();
    match out {
        None => Ok(text),
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            Ok(format!("{} ({} moves)\n", s.diagram.stats(), s.moves.len()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let f = cli.format;
    let result = match &cli.verb {
        Verb::Eval { diagram, magma, seed } => eval(diagram, magma, *seed, f),
        Verb::ValidateMagma { magma, n } => validate(magma, *n, f),
        Verb::CheckMoves { fixtures, magma } => check_moves(fixtures, magma, f),
        Verb::Resolutions { diagram, out } => resolutions(diagram, out.as_deref()),
        Verb::Admissible { diagram } => admissible(diagram, f),
        Verb::Simplify { diagram, out, seed } => simplify_cmd(diagram, out.as_deref(), *seed),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
