//! `compoly` command-line front end.
//!
//! Every subcommand prints one record. JSON is the default; `--format tsv`
//! flattens the same record into tab-separated rows. Exit status is 0 on
//! success, 1 when two routes disagree or a verified identity fails, and 2
//! on usage errors (bad arguments, unparseable compositions, size guards).

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};

use compoly::ehrhart_zeta::{
    ehrhart_count_oracle, ehrhart_polynomial, ehrhart_sp, ehrhart_values, el_chain_h, hstar_from_series,
    hstar_words, zeta_brute, zeta_polynomial, zeta_value,
};
use compoly::lattice_enum::{gamma_direct, h_vector};
use compoly::limits::MAX_N_ENV;
use compoly::polynomial::{gamma_expand, sturm_report};
use compoly::verify::{h_polynomial, sweep, Check, Status};
use compoly::{Composition, Error, ExactPolynomial, Limits};

#[derive(Debug, Parser)]
#[command(name = "compoly", version, about = "Exact lattice-point statistics of composition polytopes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Raise every size guard on n to this value.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// h-vector: lattice points counted by number of nonzero coordinates.
    Hvec { composition: String },
    /// γ-vector of h(σ, t).
    Gamma {
        composition: String,
        /// Route; both are run and compared when omitted.
        #[arg(long, value_enum)]
        method: Option<GammaMethod>,
    },
    /// Ehrhart polynomial or a single dilate count.
    Ehrhart {
        composition: String,
        #[arg(long, value_enum, default_value_t = EhrhartMethod::Poly)]
        method: EhrhartMethod,
        /// Dilation factor m.
        #[arg(long, value_name = "M")]
        eval: Option<usize>,
    },
    /// Zeta polynomial of P_σ, or the number of m-multichains.
    Zeta {
        composition: String,
        /// Multichain length m; prints Z(P_σ, m + 1).
        #[arg(long, value_name = "M")]
        eval: Option<usize>,
    },
    /// h*-polynomial of Q_σ.
    Hstar {
        composition: String,
        #[arg(long, value_enum, default_value_t = HstarMethod::Series)]
        method: HstarMethod,
    },
    /// Real-root report for the Ehrhart polynomial on [-1, 0].
    Roots { composition: String },
    /// Identity sweep over every composition of N.
    Verify {
        #[arg(long, value_name = "N")]
        n: usize,
        /// Comma-separated subset of checks (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GammaMethod {
    Direct,
    Expand,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EhrhartMethod {
    Oracle,
    Sp,
    Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HstarMethod {
    Series,
    Words,
    Elchains,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::GuardExceeded { .. } | Error::NonPositive(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failure(other.to_string()),
        }
    }
}

/// Output record: composition, quantity kind, producing route, payload.
#[derive(Debug, Serialize)]
struct Record {
    composition: Vec<usize>,
    kind: &'static str,
    route: String,
    #[serde(flatten)]
    payload: Map<String, Value>,
}

impl Record {
    fn new(sigma: &Composition, kind: &'static str, route: impl Into<String>) -> Self {
        Record {
            composition: sigma.parts().to_vec(),
            kind,
            route: route.into(),
            payload: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.payload.insert(key.to_string(), value);
        self
    }

    fn with_poly(self, prefix: &str, p: &ExactPolynomial, var: &str) -> Self {
        self.with(prefix, json!(p.coeff_strings()))
            .with(&format!("{prefix}_pretty"), json!(p.pretty(var)))
    }
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Parses `argv` (including the program name), writes the record to `out`
/// and diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut limits = Limits::from_env();
    if let Some(n) = cli.max_n {
        let _ = writeln!(err, "warning: size guards raised to n = {n}; enumerations may run for a long time");
        limits = limits.with_max_n(n);
    } else if std::env::var_os(MAX_N_ENV).is_some() {
        let _ = writeln!(err, "warning: size guards raised by {MAX_N_ENV}");
    }
    match execute(&cli, &limits) {
        Ok((value, failed)) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string(&value).expect("records serialize"),
                Format::Tsv => to_tsv(&value),
            };
            let _ = writeln!(out, "{text}");
            i32::from(failed)
        }
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) | CliError::Failure(m) => m,
            };
            let _ = writeln!(err, "error: {msg}");
            e.code()
        }
    }
}

fn parse(text: &str, limits: &Limits) -> Result<Composition, CliError> {
    Ok(Composition::parse_with(text, limits)?)
}

fn to_value(r: Record) -> Value {
    serde_json::to_value(r).expect("records serialize")
}

/// Returns the rendered record and whether any identity failed.
fn execute(cli: &Cli, limits: &Limits) -> Result<(Value, bool), CliError> {
    let record = match &cli.command {
        Command::Hvec { composition } => {
            let sigma = parse(composition, limits)?;
            let h = h_vector(&sigma, limits)?;
            Record::new(&sigma, "hvec", "enumeration")
                .with("h", json!(h.values()))
                .with("pretty", json!(h_polynomial(&h).pretty("t")))
        }
        Command::Gamma { composition, method } => {
            let sigma = parse(composition, limits)?;
            gamma(&sigma, *method, limits)?
        }
        Command::Ehrhart {
            composition,
            method,
            eval,
        } => {
            let sigma = parse(composition, limits)?;
            ehrhart(&sigma, *method, *eval, limits)?
        }
        Command::Zeta { composition, eval } => {
            let sigma = parse(composition, limits)?;
            zeta(&sigma, *eval, limits)?
        }
        Command::Hstar { composition, method } => {
            let sigma = parse(composition, limits)?;
            hstar(&sigma, *method, limits)?
        }
        Command::Roots { composition } => {
            let sigma = parse(composition, limits)?;
            roots(&sigma, limits)?
        }
        Command::Verify { n, checks } => return verify(*n, checks, limits),
    };
    Ok((to_value(record), false))
}

fn gamma(sigma: &Composition, method: Option<GammaMethod>, limits: &Limits) -> Result<Record, CliError> {
    let n = sigma.n();
    let direct = || -> Result<Vec<i64>, CliError> { Ok(gamma_direct(sigma, limits)?.values().to_vec()) };
    let expand = || -> Result<Vec<i64>, CliError> {
        let h = h_polynomial(&h_vector(sigma, limits)?);
        gamma_expand(&h, n)?
            .into_iter()
            .map(|g| {
                if g.is_integer() {
                    i64::try_from(g.to_integer()).map_err(|_| CliError::Failure("γ entry overflows i64".into()))
                } else {
                    Err(CliError::Failure(format!("non-integral γ entry {g}")))
                }
            })
            .collect()
    };
    let (route, values) = match method {
        Some(GammaMethod::Direct) => ("direct", direct()?),
        Some(GammaMethod::Expand) => ("expand", expand()?),
        None => {
            let (a, b) = (direct()?, expand()?);
            if a != b {
                return Err(CliError::Failure(format!("γ routes disagree: direct {a:?}, expand {b:?}")));
            }
            ("direct+expand", a)
        }
    };
    Ok(Record::new(sigma, "gamma", route).with("gamma", json!(values)))
}

fn ehrhart(
    sigma: &Composition,
    method: EhrhartMethod,
    eval: Option<usize>,
    limits: &Limits,
) -> Result<Record, CliError> {
    let n = sigma.n();
    let route = match method {
        EhrhartMethod::Oracle => "oracle",
        EhrhartMethod::Sp => "sp",
        EhrhartMethod::Poly => "poly",
    };
    let rec = Record::new(sigma, "ehrhart", route);
    Ok(match (method, eval) {
        (EhrhartMethod::Oracle, Some(m)) => rec.with("m", json!(m)).with("value", big(&ehrhart_count_oracle(sigma, m, limits)?)),
        (EhrhartMethod::Sp, Some(m)) => rec.with("m", json!(m)).with("value", big(&ehrhart_sp(sigma, m, limits)?)),
        (EhrhartMethod::Poly, Some(m)) => {
            let p = ehrhart_polynomial(sigma, limits)?;
            rec.with("m", json!(m)).with("value", json!(p.eval_int(m as i64).to_string()))
        }
        (EhrhartMethod::Oracle, None) => {
            let top = n.min(limits.oracle_m);
            let values = (0..=top)
                .map(|m| ehrhart_count_oracle(sigma, m, limits).map(|v| big(&v)))
                .collect::<Result<Vec<_>, _>>()?;
            rec.with("m", json!((0..=top).collect::<Vec<_>>())).with("values", Value::Array(values))
        }
        (EhrhartMethod::Sp, None) => {
            let values: Vec<Value> = ehrhart_values(sigma, n, limits)?.iter().map(big).collect();
            rec.with("m", json!((0..=n).collect::<Vec<_>>())).with("values", Value::Array(values))
        }
        (EhrhartMethod::Poly, None) => {
            let p = ehrhart_polynomial(sigma, limits)?;
            rec.with_poly("polynomial", &p, "t")
        }
    })
}

fn zeta(sigma: &Composition, eval: Option<usize>, limits: &Limits) -> Result<Record, CliError> {
    match eval {
        Some(m) => {
            let value = zeta_value(sigma, m, limits)?;
            let mut route = "product";
            if sigma.n() <= limits.brute_zeta_n && m <= limits.brute_zeta_m {
                let brute = zeta_brute(sigma, m, limits)?;
                if brute != value {
                    return Err(CliError::Failure(format!("zeta routes disagree: product {value}, brute {brute}")));
                }
                route = "product+brute";
            }
            Ok(Record::new(sigma, "zeta", route).with("m", json!(m)).with("value", big(&value)))
        }
        None => {
            let z = zeta_polynomial(sigma, limits)?;
            let shifted = z.shift(&q(1));
            Ok(Record::new(sigma, "zeta", "product")
                .with_poly("polynomial", &z, "t")
                .with_poly("shifted", &shifted, "m"))
        }
    }
}

fn hstar(sigma: &Composition, method: HstarMethod, limits: &Limits) -> Result<Record, CliError> {
    let (route, p) = match method {
        HstarMethod::Series => {
            let p = hstar_from_series(sigma, limits)?;
            if sigma.n() <= limits.words_n {
                let w = hstar_words(sigma, limits)?;
                if w != p {
                    return Err(CliError::Failure(format!("h* routes disagree: series {p}, words {w}")));
                }
                ("series+words", p)
            } else {
                ("series", p)
            }
        }
        HstarMethod::Words => ("words", hstar_words(sigma, limits)?),
        HstarMethod::Elchains => ("elchains", el_chain_h(&sigma.reverse(), limits)?),
    };
    Ok(Record::new(sigma, "hstar", route).with_poly("polynomial", &p, "t"))
}

fn roots(sigma: &Composition, limits: &Limits) -> Result<Record, CliError> {
    let ehr = ehrhart_polynomial(sigma, limits)?;
    let r = sturm_report(&ehr, &q(-1), &q(0))?;
    let intervals: Vec<Value> = r
        .isolating_intervals
        .iter()
        .map(|(a, b)| json!([a.to_string(), b.to_string()]))
        .collect();
    Ok(Record::new(sigma, "roots", "sturm")
        .with_poly("ehrhart", &ehr, "t")
        .with("degree", json!(r.degree))
        .with("squarefree_degree", json!(r.squarefree_degree))
        .with("all_real", json!(r.all_real))
        .with("distinct_real_roots", json!(r.distinct_root_count))
        .with("interval", json!([r.interval.0.to_string(), r.interval.1.to_string()]))
        .with("roots_in_interval", json!(r.roots_in_interval))
        .with("isolating_intervals", Value::Array(intervals))
        .with("real_and_inside", json!(r.real_and_inside())))
}

fn verify(n: usize, names: &[String], limits: &Limits) -> Result<(Value, bool), CliError> {
    let checks: Vec<Check> = if names.is_empty() {
        Check::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| s.trim().parse::<Check>().map_err(CliError::Usage))
            .collect::<Result<_, _>>()?
    };
    let results = sweep(n, &checks, limits)?;
    let (mut pass, mut fail, mut skipped) = (0, 0, 0);
    let rows: Vec<Value> = results
        .iter()
        .map(|r| {
            match r.status {
                Status::Pass => pass += 1,
                Status::Fail(_) => fail += 1,
                Status::Skipped(_) => skipped += 1,
            }
            json!({
                "composition": r.composition.parts(),
                "check": r.check.name(),
                "status": r.status.label(),
                "detail": r.status.detail(),
            })
        })
        .collect();
    let value = json!({
        "kind": "verify",
        "n": n,
        "checks": checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
        "results": rows,
        "summary": {"pass": pass, "fail": fail, "skipped": skipped},
    });
    Ok((value, fail > 0))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Flat rendering: `key<TAB>value…` per field; `verify` becomes a table.
fn to_tsv(value: &Value) -> String {
    let Value::Object(map) = value else {
        return scalar(value);
    };
    if map.get("kind") == Some(&json!("verify")) {
        let mut lines = vec!["composition\tcheck\tstatus\tdetail".to_string()];
        for row in map["results"].as_array().into_iter().flatten() {
            lines.push(format!(
                "{}\t{}\t{}\t{}",
                scalar(&row["composition"]),
                scalar(&row["check"]),
                scalar(&row["status"]),
                scalar(&row["detail"])
            ));
        }
        return lines.join("\n");
    }
    map.iter()
        .map(|(k, v)| match v {
            Value::Array(items) => {
                let cells: Vec<String> = items.iter().map(scalar).collect();
                format!("{k}\t{}", cells.join("\t"))
            }
            other => format!("{k}\t{}", scalar(other)),
        })
        .collect::<Vec<_>>()
        .join("\n")
}
