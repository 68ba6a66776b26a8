mod oracle_cmd;
mod report;
mod routes;
mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map};
use sixvertex::Error;

use report::{Entry, Report};
use routes::{GammaArg, Route, What};
use suites::Suite;

#[derive(Parser, Debug)]
#[command(name = "sixv", version, about = "Exact series for Eulerian orientations and the six-vertex model on planar maps")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// record wall-clock time in the report
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the coefficients of t^1..t^N.
    Series(SeriesArgs),
    /// Run identity and cross-route suites.
    Verify(VerifyArgs),
    /// Exhaustive enumeration of small maps.
    Oracle(oracle_cmd::OracleArgs),
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    what: What,
    /// a rational such as 1 or -3/2, or "symbolic"
    #[arg(long, value_parser = GammaArg::parse)]
    gamma: Option<GammaArg>,
    #[arg(long, env = "SIXV_ORDER", default_value_t = 20)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Route::Auto)]
    route: Route,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, env = "SIXV_ORDER", default_value_t = 20)]
    order: usize,
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Verification(Box<Report>),
    Inconsistent(Box<Report>),
    Usage(String),
    Internal(String),
}

fn classify(e: Error) -> Failure {
    match e {
        Error::IncompatibleRoute(_)
        | Error::BadParameter(_)
        | Error::SizeLimitExceeded(_)
        | Error::GammaEqualsMinusTwo
        | Error::DerivativeTooHigh(_) => Failure::Usage(e.to_string()),
        other => Failure::Internal(other.to_string()),
    }
}

fn series(a: SeriesArgs) -> Result<Report, Failure> {
    let gamma = a.gamma.unwrap_or(if a.what == What::G { GammaArg::Value(sixvertex::ring::ri(0)) } else { GammaArg::Symbolic });
    let mut params = Map::new();
    params.insert("what".into(), json!(a.what.to_string()));
    params.insert("gamma".into(), json!(gamma.to_string()));
    params.insert("order".into(), json!(a.order));
    params.insert("route".into(), json!(a.route.to_string()));
    let mut report = Report::new("series", params);
    let routes = if a.route == Route::Auto {
        routes::applicable(a.what, &gamma)
    } else {
        if let Some(msg) = routes::incompatibility(a.what, &gamma, a.route) {
            return Err(Failure::Usage(msg));
        }
        vec![a.route]
    };
    if routes.is_empty() {
        return Err(Failure::Usage(format!("no route computes {} at gamma = {gamma}", a.what)));
    }
    let mut results = Vec::new();
    for r in &routes {
        let cs = routes::compute(a.what, &gamma, *r, a.order).map_err(classify)?;
        report.results.push(Entry::new(a.what.to_string(), format!("route {r}"), true, json!({ "coefficients": cs })));
        results.push(cs);
    }
    for (r, cs) in routes.iter().zip(&results).skip(1) {
        if *cs != results[0] {
            report.results.push(Entry::compare(
                format!("agreement.{}.{r}", routes[0]),
                "routes agree coefficientwise",
                &results[0],
                cs,
            ));
        }
    }
    if !report.all_passed() {
        return Err(Failure::Inconsistent(Box::new(report)));
    }
    report.coefficients = Some(results[0].iter().cloned().enumerate().map(|(k, v)| (k + 1, v)).collect());
    Ok(report)
}

fn verify(a: VerifyArgs) -> Result<Report, Failure> {
    let mut params = Map::new();
    params.insert("suite".into(), json!(format!("{:?}", a.suite).to_lowercase()));
    params.insert("order".into(), json!(a.order));
    let mut report = Report::new("verify", params);
    report.results = suites::run(a.suite, a.order).map_err(classify)?;
    if report.all_passed() {
        Ok(report)
    } else {
        Err(Failure::Verification(Box::new(report)))
    }
}

fn emit(r: &mut Report, format: Format, start: Option<Instant>) {
    r.elapsed_ms = start.map(|s| s.elapsed().as_millis());
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("report serializes")),
        Format::Plain => print!("{}", r.to_plain()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let start = cli.timing.then(Instant::now);
    let outcome = match cli.cmd {
        Cmd::Series(a) => series(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Oracle(a) => oracle_cmd::run(a).map_err(classify).and_then(|r| {
            if r.all_passed() {
                Ok(r)
            } else {
                Err(Failure::Verification(Box::new(r)))
            }
        }),
    };
    match outcome {
        Ok(mut r) => {
            emit(&mut r, cli.format, start);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(mut r)) => {
            emit(&mut r, cli.format, start);
            ExitCode::from(1)
        }
        Err(Failure::Inconsistent(mut r)) => {
            emit(&mut r, cli.format, start);
            eprintln!("error: routes disagree");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
