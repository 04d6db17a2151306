use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use lseries::forms::FormDescriptor;
use lseries::values::parse_complex;
use lseries::{default_suite, default_tolerance, load_suite, run_suite, Status};
use lseries_core::ltest::{l_star_with, l_value_with, TestFunction};
use lseries_core::specfun::{
    bernoulli_poly, cal_ei, exp_int_e, gamma, hurwitz_zeta, hurwitz_zeta_star, inc_gamma_upper, lerch_zeta, polygamma,
};
use lseries_core::{Complex64, EvalConfig};
use serde_json::value::RawValue;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lseries", version, about = "L-series of weakly holomorphic and harmonic Maass forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one special function and print `re im`.
    ///
    /// Functions: E s z | gamma z | gammainc r z | EI w | zeta s z |
    /// zetastar a z | lerch s a z | psi m z | bernoulli n z.
    /// Complex arguments are written `re` or `re,im`; put `--` before
    /// negative arguments.
    #[command(allow_negative_numbers = true)]
    Specfun {
        function: String,
        #[arg(num_args = 0.., allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Export Fourier coefficients.
    Coeffs {
        /// `J`, `Jsq` or `synth:{...}`.
        form: String,
        /// Number of coefficients past the principal part.
        #[arg(long, default_value_t = 40)]
        prec: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate `L_f(φ_s^w)`, or `L*(f, s)` with `--star`.
    Lvalue {
        form: String,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        /// `RE,IM`.
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long)]
        star: bool,
        #[arg(long)]
        prec: Option<i64>,
    },
    /// Run a verification suite.
    Verify {
        /// Suite file; the bundled default suite when absent.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Glob over check ids.
        #[arg(long)]
        filter: Option<String>,
        /// Where to write the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Errors that should exit with status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn complex_arg(text: &str) -> anyhow::Result<Complex64> {
    parse_complex(text).map_err(usage)
}

fn real_arg(text: &str) -> anyhow::Result<f64> {
    let z = complex_arg(text)?;
    if z.im != 0.0 {
        return Err(usage(format!("`{text}` must be real")));
    }
    Ok(z.re)
}

fn index_arg(text: &str) -> anyhow::Result<u32> {
    text.trim().parse().map_err(|_| usage(format!("`{text}` is not a non-negative integer")))
}

fn specfun(function: &str, args: &[String]) -> anyhow::Result<Complex64> {
    let arity = |n: usize| -> anyhow::Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(usage(format!("`{function}` takes {n} argument(s), got {}", args.len())))
        }
    };
    let v = match function {
        "E" => {
            arity(2)?;
            exp_int_e(complex_arg(&args[0])?, complex_arg(&args[1])?)?
        }
        "gamma" => {
            arity(1)?;
            gamma(complex_arg(&args[0])?)?
        }
        "gammainc" => {
            arity(2)?;
            inc_gamma_upper(complex_arg(&args[0])?, complex_arg(&args[1])?)?
        }
        "EI" => {
            arity(1)?;
            cal_ei(real_arg(&args[0])?)?
        }
        "zeta" => {
            arity(2)?;
            hurwitz_zeta(complex_arg(&args[0])?, complex_arg(&args[1])?)?
        }
        "zetastar" => {
            arity(2)?;
            hurwitz_zeta_star(real_arg(&args[0])?, complex_arg(&args[1])?)?
        }
        "lerch" => {
            arity(3)?;
            lerch_zeta(complex_arg(&args[0])?, complex_arg(&args[1])?, complex_arg(&args[2])?)?
        }
        "psi" => {
            arity(2)?;
            polygamma(index_arg(&args[0])?, complex_arg(&args[1])?)?
        }
        "bernoulli" => {
            arity(2)?;
            bernoulli_poly(index_arg(&args[0])? as usize, complex_arg(&args[1])?)?
        }
        other => return Err(usage(format!("unknown function `{other}`"))),
    };
    Ok(v)
}

fn form(text: &str, prec: Option<i64>) -> anyhow::Result<lseries_core::modforms::FourierExpansion> {
    let d = FormDescriptor::parse(text).map_err(|e| usage(e.to_string()))?;
    Ok(d.build(prec)?)
}

fn coeffs(text: &str, prec: i64, format: Format) -> anyhow::Result<String> {
    if prec < 1 {
        return Err(usage("--prec must be at least 1"));
    }
    let f = form(text, Some(prec))?;
    let holo: Vec<(i64, String, String)> = match &f.exact {
        Some(q) => (q.min_exponent()..q.precision())
            .map(|n| q.integer_coeff(n).map(|a| (n, a.to_string(), "0".to_string())))
            .collect::<Result<_, _>>()?,
        None => f.holo.iter().map(|(&n, a)| (n, a.re.to_string(), a.im.to_string())).collect(),
    };
    let nonholo: Vec<(i64, String, String)> =
        f.nonholo.iter().map(|(&n, b)| (n, b.re.to_string(), b.im.to_string())).collect();
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("n,re,im\n");
            for (n, re, im) in &holo {
                out.push_str(&format!("{n},{re},{im}\n"));
            }
            out
        }
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Row {
                n: i64,
                re: Box<RawValue>,
                im: Box<RawValue>,
            }
            #[derive(serde::Serialize)]
            struct Export {
                form: String,
                weight: i32,
                holo: Vec<Row>,
                nonholo: Vec<Row>,
            }
            let rows = |v: Vec<(i64, String, String)>| -> anyhow::Result<Vec<Row>> {
                v.into_iter()
                    .map(|(n, re, im)| Ok(Row { n, re: RawValue::from_string(re)?, im: RawValue::from_string(im)? }))
                    .collect()
            };
            let e = Export { form: f.name.clone(), weight: f.weight, holo: rows(holo)?, nonholo: rows(nonholo)? };
            serde_json::to_string_pretty(&e)? + "\n"
        }
    })
}

fn verify(config: Option<PathBuf>, filter: Option<String>, report: Option<PathBuf>) -> anyhow::Result<bool> {
    let suite = match &config {
        Some(p) => load_suite(p).map_err(|e| usage(e.to_string()))?,
        None => default_suite(),
    };
    let pattern = filter
        .map(|f| glob::Pattern::new(&f).map_err(|e| usage(format!("bad --filter: {e}"))))
        .transpose()?;
    let result = run_suite(&suite, pattern.as_ref(), default_tolerance(), &EvalConfig::default());
    for c in &result.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let detail = match c.abs_err {
            Some(e) => format!("|Δ| = {e:.3e} (tol {:.1e})", c.tolerance),
            None => c.message.clone(),
        };
        println!("{tag} {} [{}] {detail} {} ms", c.id, c.theorem, c.runtime_ms);
    }
    let s = result.summary;
    eprintln!("{} passed, {} failed, {} skipped", s.pass, s.fail, s.skipped);
    if let Some(path) = report {
        std::fs::write(&path, result.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(result.success())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Specfun { function, args } => {
            let args: Vec<String> = args.into_iter().filter(|a| a != "--").collect();
            let v = specfun(&function, &args)?;
            println!("{} {}", v.re, v.im);
            Ok(true)
        }
        Command::Coeffs { form: f, prec, format } => {
            print!("{}", coeffs(&f, prec, format)?);
            Ok(true)
        }
        Command::Lvalue { form: f, s, w, star, prec } => {
            let f = form(&f, prec)?;
            let cfg = EvalConfig::default();
            let v = match (star, w) {
                (true, Some(_)) => return Err(usage("--star evaluates at w = 0; drop --w")),
                (true, None) => l_star_with(&f, s, &cfg)?,
                (false, Some(w)) => l_value_with(&f, &TestFunction::phi_sw(s, complex_arg(&w)?), &cfg)?,
                (false, None) => return Err(usage("give --w RE,IM or --star")),
            };
            println!("{} {}", v.value.re, v.value.im);
            eprintln!("error estimate {:.3e}", v.error_estimate);
            Ok(true)
        }
        Command::Verify { config, filter, report } => verify(config, filter, report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                eprintln!("run `lseries --help` for usage");
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

