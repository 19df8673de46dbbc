use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bhl::bosonization::{
    check_bosonization_data, check_smash_compat, cross_product, regular_smash_module, BraidedHopfInModules,
};
use bhl::context::{check_quasitriangular, set_probe_depth};
use bhl::double::{check_double, drinfeld_double};
use bhl::error::Error;
use bhl::examples::{hmnd, transparency_demo, FamilyParams};
use bhl::functors::{check_functor, FunctorId, Property};
use bhl::hopf::{check_hopf, Side};
use bhl::io::{algebra_to_text, load_algebra, load_module, parse_list, LoadError};
use bhl::report::Report;

#[derive(Parser)]
#[command(name = "bhl", version, about = "Exact checks for Hopf algebras, doubles, YD modules and their functors")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Maximum tensor power in probe families (BHL_PROBE_DEPTH takes precedence).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    probe_depth: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Hopf axioms of an algebra file or `builtin:<name>`.
    VerifyHopf {
        algebra: String,
        /// Report path (default stdout).
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Builds the Drinfel'd double, writes it as an algebra file and reports its checks.
    Double {
        algebra: String,
        /// Output algebra file.
        #[arg(short)]
        o: Option<PathBuf>,
        /// Report path (default stdout).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Structure laws and every YD condition of a module.
    CheckYd {
        /// Module file or `builtin:<name>`.
        #[arg(long)]
        module: String,
        /// Algebra for built-in modules.
        #[arg(long, default_value = "builtin:sweedler")]
        algebra: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Round trip, monoidality or braiding preservation of one functor.
    CheckFunctor {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        property: String,
        /// Algebra for built-in modules.
        #[arg(long, default_value = "builtin:sweedler")]
        algebra: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        module2: Option<String>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Bosonization of the braided exterior line over H(m, n-1, d).
    Bosonize {
        #[arg(long)]
        m: usize,
        /// Comma-separated weights; the last one belongs to the line.
        #[arg(long)]
        d: String,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Output algebra file for the cross product.
        #[arg(short)]
        o: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The family H(m,n,d) with R_s and the transparency demonstration.
    Demo {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: String,
        #[arg(long)]
        s: Option<usize>,
        /// Directory for the emitted algebra files.
        #[arg(short)]
        o: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The full acceptance matrix.
    Suite {
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

/// A run that could not produce a report.
enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Model(e) => e.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn write_file(path: &std::path::Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| io_err(path, e))
}

fn family(m: usize, d: &str, s: Option<usize>) -> Result<FamilyParams, Failure> {
    let d = parse_list(d).map_err(|e| Failure::Usage(format!("--d: {e}")))?;
    Ok(FamilyParams::new(m, &d, s))
}

fn run(cli: &Cli) -> Result<(Report, Option<PathBuf>), Failure> {
    Ok(match &cli.cmd {
        Cmd::VerifyHopf { algebra, o } => {
            let h = load_algebra(algebra)?;
            (check_hopf(&h), o.clone())
        }
        Cmd::Double { algebra, o, report } => {
            let h = load_algebra(algebra)?;
            let d = drinfeld_double(&h)?;
            let mut rep = check_double(&d);
            rep.extend("qt.", check_quasitriangular(&d.hopf, &d.r_matrix)?);
            if let Some(o) = o {
                write_file(o, &algebra_to_text(&d.hopf))?;
            }
            (rep, report.clone())
        }
        Cmd::CheckYd { module, algebra, o } => {
            let h = load_algebra(algebra)?;
            let x = load_module(module, &h)?;
            (x.check(), o.clone())
        }
        Cmd::CheckFunctor { functor, property, algebra, module, module2, o } => {
            let fid =
                FunctorId::parse(functor).ok_or_else(|| Failure::Usage(format!("unknown functor `{functor}`")))?;
            let prop =
                Property::parse(property).ok_or_else(|| Failure::Usage(format!("unknown property `{property}`")))?;
            let h = load_algebra(algebra)?;
            let m = load_module(module, &h)?;
            let n = module2.as_deref().map(|s| load_module(s, &h)).transpose()?;
            let n = match (prop, n) {
                (Property::Roundtrip, n) => n,
                (_, Some(n)) => Some(n),
                (_, None) => Some(m.clone()),
            };
            (check_functor(fid, &m, n.as_ref(), prop)?, o.clone())
        }
        Cmd::Bosonize { m, d, s, side, o, report } => {
            let p = family(*m, d, *s)?;
            let bh = BraidedHopfInModules::line(&p)?;
            let side = Side::from(*side);
            let mut rep = check_bosonization_data(&bh, side)?;
            let cp = cross_product(&bh, side)?;
            rep.extend("product.", check_hopf(&cp));
            rep.extend("smash.regular.", check_smash_compat(&regular_smash_module(&bh, side)?, &bh)?);
            if let Some(o) = o {
                write_file(o, &algebra_to_text(&cp))?;
            }
            (rep, report.clone())
        }
        Cmd::Demo { m, n, d, s, o, report } => {
            let p = family(*m, d, *s)?;
            if p.n != *n {
                return Err(Failure::Usage(format!("--n {n} but --d lists {} weights", p.n)));
            }
            let h = hmnd(&FamilyParams { s: None, ..p.clone() })?;
            let mut rep = Report::new();
            rep.extend("hopf.", check_hopf(&h));
            let s_used = p.s.unwrap_or_else(|| p.smallest_s());
            let with_s = FamilyParams { s: Some(s_used), ..p.clone() };
            let r = bhl::examples::hmnd_r(&with_s)?;
            rep.extend("qt.", check_quasitriangular(&h, &r)?);
            rep.extend("", transparency_demo(&with_s, None, bhl::context::probe_depth())?);
            if let Some(dir) = o {
                std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
                write_file(
                    &dir.join(format!("hmnd_{}_{}_{}.alg", p.m, p.n, d.replace(',', "-"))),
                    &algebra_to_text(&h),
                )?;
                if p.n >= 1 {
                    let base = hmnd(&FamilyParams { s: None, ..p.base() })?;
                    write_file(&dir.join(format!("hmnd_{}_{}_base.alg", p.m, p.n - 1)), &algebra_to_text(&base))?;
                }
            }
            (rep, report.clone())
        }
        Cmd::Suite { o } => (bhl::suite::run_suite(), o.clone()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_probe_depth(cli.probe_depth as usize);
    match run(&cli) {
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("precondition violated: {msg}");
            ExitCode::from(3)
        }
        Ok((rep, out)) => {
            let text = match cli.format {
                Format::Json => rep.to_json() + "\n",
                Format::Text => rep.to_text(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if rep.any_fail() {
                2
            } else if rep.any_precondition() {
                3
            } else {
                0
            })
        }
    }
}
