//! The `monoglue` command line: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 on success, 1 on a domain error (its code is printed), 2 on
//! a usage error.

pub mod output;
mod render;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use monoglue::basis;
use monoglue::gluing::{scan_family, ScanError, ScanTemplate};
use monoglue::hilbert::is_nondecreasing;
use monoglue::{
    defining_ideal, glued_curve, glued_ideal, minimal_generators, validate_gluing,
    verify_instance_with_limit, CurveAnalysis, Error, MonomialCurve, MonomialOrder,
    NumericalSemigroup, Polynomial, VarNames,
};
use serde::Serialize;

use output::*;

#[derive(Debug, Parser)]
#[command(
    name = "monoglue",
    version,
    about = "Gluings of numerical semigroups and tangent cones of monomial curves"
)]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators, Frobenius number, Apéry set and symmetry.
    Semigroup {
        /// Generators, space or comma separated.
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
    },
    /// Defining ideal of a monomial curve, or a basis of raw polynomials.
    Ideal {
        #[arg(num_args = 1.., required_unless_present = "raw", conflicts_with = "raw")]
        generators: Vec<String>,
        /// Polynomials such as "x^3 - y^2"; several may be comma separated.
        #[arg(long, num_args = 1..)]
        raw: Vec<String>,
        /// Compute a standard basis under the local degree order.
        #[arg(long)]
        local: bool,
        /// Variable priority, highest first, e.g. "x2,x3,x1".
        #[arg(long)]
        order: Option<String>,
    },
    /// Tangent cone and the Cohen-Macaulay test.
    TangentCone {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
        #[arg(long)]
        order: Option<String>,
    },
    /// Hilbert function of the local ring.
    Hilbert {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
        #[arg(long)]
        order: Option<String>,
        /// Last degree of the printed Hilbert function prefix.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Validate a gluing and print the glued curve.
    Glue(GlueArgs),
    /// Verify the cone and Hilbert function statements on one gluing.
    Verify {
        #[command(flatten)]
        gluing: GlueArgs,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Verify a parameterized family of gluings.
    Scan {
        /// TOML template with s1, s2, parameter, p, q, range and optional output.
        #[arg(long)]
        config: PathBuf,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// JSON-lines output file; overrides the template.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct GlueArgs {
    /// Generators of S1, e.g. 5,12.
    #[arg(long)]
    s1: String,
    /// Generators of S2.
    #[arg(long)]
    s2: String,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Semigroup { .. } => "semigroup",
            Command::Ideal { .. } => "ideal",
            Command::TangentCone { .. } => "tangent-cone",
            Command::Hilbert { .. } => "hilbert",
            Command::Glue(_) => "glue",
            Command::Verify { .. } => "verify",
            Command::Scan { .. } => "scan",
        }
    }
}

/// Failure of a command.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain {
        code: String,
        message: String,
        details: Option<serde_json::Value>,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let details = match &e {
            Error::Scan(ScanError::Falsified(bundle)) => serde_json::to_value(bundle).ok(),
            _ => None,
        };
        Failure::Domain {
            code: e.code().to_string(),
            message: e.to_string(),
            details,
        }
    }
}

fn domain<E: Into<Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

fn io_failure(code: &str, what: impl fmt::Display) -> Failure {
    Failure::Domain {
        code: code.to_string(),
        message: what.to_string(),
        details: None,
    }
}

/// Parses generator lists such as `["5,12"]`, `["5", "12"]` or `["5, 12"]`.
fn parse_list(parts: &[String]) -> Result<Vec<u64>, Failure> {
    let values: Vec<u64> = parts
        .iter()
        .flat_map(|p| p.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Failure::Usage(format!("`{t}` is not a non-negative integer")))
        })
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err(Failure::Usage("empty generator list".into()));
    }
    Ok(values)
}

fn semigroup_of(parts: &[String]) -> Result<NumericalSemigroup, Failure> {
    minimal_generators(&parse_list(parts)?).map_err(domain)
}

fn curve_of(parts: &[String]) -> Result<MonomialCurve, Failure> {
    Ok(MonomialCurve::new(semigroup_of(parts)?))
}

fn priority_of(names: &VarNames, order: Option<&str>) -> Result<Option<Vec<usize>>, Failure> {
    order
        .map(|s| names.parse_priority(s).map_err(domain))
        .transpose()
}

fn semigroup(generators: &[String]) -> Result<SemigroupOut, Failure> {
    let s = semigroup_of(generators)?;
    let (frobenius, apery) = s.frobenius_and_apery();
    let genus = (0..frobenius.max(0) as u64 + 1)
        .filter(|&n| !s.is_member(n))
        .count() as u64;
    Ok(SemigroupOut {
        embedding_dimension: s.len(),
        multiplicity: s.multiplicity(),
        frobenius,
        genus,
        apery,
        symmetric: s.is_symmetric(),
        generators: s,
    })
}

fn ideal(
    generators: &[String],
    raw: &[String],
    local: bool,
    order: Option<&str>,
) -> Result<IdealOut, Failure> {
    let (curve, names, ideal, default_priority) = if raw.is_empty() {
        let c = curve_of(generators)?;
        let ideal = defining_ideal(&c);
        let prio = if local {
            c.canonical_priority()
        } else {
            (0..c.nvars()).collect()
        };
        (Some(c.clone()), c.names().clone(), ideal, prio)
    } else {
        let texts: Vec<&str> = raw
            .iter()
            .flat_map(|r| r.split(','))
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        let names = VarNames::infer(&texts).map_err(domain)?;
        if names.is_empty() {
            return Err(Failure::Usage("raw polynomials use no variables".into()));
        }
        let ord = MonomialOrder::degrevlex(names.len());
        let ideal = texts
            .iter()
            .map(|t| names.parse(t, &ord))
            .collect::<Result<Vec<Polynomial>, _>>()
            .map_err(domain)?;
        let prio = (0..names.len()).collect();
        (None, names, ideal, prio)
    };
    let priority = priority_of(&names, order)?.unwrap_or(default_priority);
    let ord = if local {
        MonomialOrder::local_with_priority(priority)
    } else {
        MonomialOrder::global_with_priority(priority)
    }
    .map_err(domain)?;
    let basis = if local {
        basis::standard_basis(&ideal, &ord)
    } else {
        basis::buchberger(&ideal, &ord)
    }
    .map_err(domain)?;
    let minimal_generators = curve.as_ref().map(|_| ideal.len());
    Ok(IdealOut {
        complete_intersection: curve.as_ref().map(|c| ideal.len() + 1 == c.nvars()),
        curve: curve.as_ref().map(|c| c.generators().to_vec()),
        variables: names.names().to_vec(),
        ideal: ideal.iter().map(|f| names.format(f)).collect(),
        order: names.format_priority(ord.priority()),
        local,
        basis: basis.elements.iter().map(|f| names.format(f)).collect(),
        leading_monomials: basis::leading_ideal(&basis)
            .iter()
            .map(|m| names.format_monomial(m))
            .collect(),
        minimal_generators,
    })
}

fn analysis(
    generators: &[String],
    order: Option<&str>,
    limit: Option<usize>,
) -> Result<CurveAnalysis, Failure> {
    let c = curve_of(generators)?;
    let priority = priority_of(c.names(), order)?;
    CurveAnalysis::new(&c, priority.as_deref(), limit).map_err(domain)
}

fn tangent_cone(generators: &[String], order: Option<&str>) -> Result<TangentConeOut, Failure> {
    let a = analysis(generators, order, None)?;
    let r = a.report();
    let names = a.curve.names();
    Ok(TangentConeOut {
        curve: r.generators,
        variables: r.variables,
        order: r.order,
        lowest_variable: names.names()[a.cone.lowest_variable()].clone(),
        ideal: r.ideal,
        standard_basis: r.standard_basis,
        leading_monomials: r.leading_monomials,
        cone: r.cone,
        cohen_macaulay: r.cohen_macaulay,
        witness: r.witness,
        witness_leading_monomial: a
            .cone
            .witness
            .as_ref()
            .map(|w| names.format_monomial(w.lm())),
    })
}

fn hilbert(
    generators: &[String],
    order: Option<&str>,
    limit: Option<usize>,
) -> Result<HilbertOut, Failure> {
    let a = analysis(generators, order, limit)?;
    let h = &a.hilbert;
    Ok(HilbertOut {
        curve: a.curve.generators().to_vec(),
        order: a.curve.names().format_priority(a.cone.order.priority()),
        numerator: h.numerator.clone(),
        h: h.reduced_numerator.clone(),
        series: format!("({})/(1 - t)", h.reduced_numerator),
        hf_prefix: h.hf_prefix.clone(),
        multiplicity: h.multiplicity,
        nondecreasing: h.nondecreasing,
        first_violation: is_nondecreasing(h).first_violation,
    })
}

fn gluing_of(args: &GlueArgs) -> Result<monoglue::Gluing, Failure> {
    let s1 = semigroup_of(std::slice::from_ref(&args.s1))?;
    let s2 = semigroup_of(std::slice::from_ref(&args.s2))?;
    validate_gluing(&s1, &s2, args.p, args.q).map_err(domain)
}

fn glue(args: &GlueArgs) -> Result<GlueOut, Failure> {
    let g = gluing_of(args)?;
    let curve = glued_curve(&g);
    let c1 = MonomialCurve::new(g.s1.clone());
    let c2 = MonomialCurve::new(g.s2.clone());
    let ideal = glued_ideal(&g, &defining_ideal(&c1), &defining_ideal(&c2));
    Ok(GlueOut {
        glued_generators: g.glued_generators(),
        variables: curve.names().names().to_vec(),
        gluing_generators: ideal.iter().map(|f| curve.names().format(f)).collect(),
        s1: g.s1,
        s2: g.s2,
        p: g.p,
        q: g.q,
        nice: g.nice,
        b: g.b,
        a: g.a,
    })
}

fn verify(args: &GlueArgs, limit: Option<usize>) -> Result<VerifyOut, Failure> {
    let g = gluing_of(args)?;
    verify_instance_with_limit(&g, limit).map_err(domain)
}

fn scan(
    config: &PathBuf,
    jobs: Option<usize>,
    output: Option<&PathBuf>,
) -> Result<ScanOut, Failure> {
    let text = std::fs::read_to_string(config)
        .map_err(|e| io_failure("InvalidConfig", format!("{}: {e}", config.display())))?;
    let template: ScanTemplate = toml::from_str(&text)
        .map_err(|e| io_failure("InvalidConfig", format!("{}: {e}", config.display())))?;
    if jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let records = scan_family(&template, jobs).map_err(domain)?;
    let out_path = output
        .cloned()
        .or_else(|| template.output.as_ref().map(PathBuf::from));
    if let Some(path) = &out_path {
        let mut body = String::new();
        for r in &records {
            let line = ScanLine {
                schema: SCHEMA,
                record: r.clone(),
            };
            body.push_str(&serde_json::to_string(&line).expect("records serialize"));
            body.push('\n');
        }
        std::fs::write(path, body)
            .map_err(|e| io_failure("OutputError", format!("{}: {e}", path.display())))?;
    }
    let verdicts: Vec<_> = records
        .iter()
        .filter_map(|r| r.verdicts().map(|v| (r.parameter, v)))
        .collect();
    Ok(ScanOut {
        parameter: template.parameter.clone(),
        range: template.range,
        verified: verdicts.len(),
        skipped: records.len() - verdicts.len(),
        cohen_macaulay: verdicts.iter().filter(|(_, v)| v.glued_cm).count(),
        nondecreasing: verdicts
            .iter()
            .filter(|(_, v)| v.glued_nondecreasing)
            .count(),
        decreasing_gorenstein: verdicts
            .iter()
            .filter(|(_, v)| v.decreasing_gorenstein)
            .map(|(x, _)| *x)
            .collect(),
        output: out_path.map(|p| p.display().to_string()),
        records: if output.is_none() && template.output.is_none() {
            Some(records)
        } else {
            None
        },
    })
}

fn emit<T: Serialize + render::Human>(
    out: &mut dyn Write,
    json: bool,
    command: &str,
    result: T,
) -> std::io::Result<()> {
    if json {
        let env = Envelope {
            schema: SCHEMA,
            command: command.to_string(),
            result,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&env).expect("output serializes")
        )
    } else {
        result.render(out)
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    let name = cli.command.name();
    let json = cli.json;
    let written = match &cli.command {
        Command::Semigroup { generators } => {
            semigroup(generators).map(|r| emit(out, json, name, r))
        }
        Command::Ideal {
            generators,
            raw,
            local,
            order,
        } => ideal(generators, raw, *local, order.as_deref()).map(|r| emit(out, json, name, r)),
        Command::TangentCone { generators, order } => {
            tangent_cone(generators, order.as_deref()).map(|r| emit(out, json, name, r))
        }
        Command::Hilbert {
            generators,
            order,
            limit,
        } => hilbert(generators, order.as_deref(), *limit).map(|r| emit(out, json, name, r)),
        Command::Glue(args) => glue(args).map(|r| emit(out, json, name, r)),
        Command::Verify { gluing, limit } => {
            verify(gluing, *limit).map(|r| emit(out, json, name, r))
        }
        Command::Scan {
            config,
            jobs,
            output,
        } => scan(config, *jobs, output.as_ref()).map(|r| emit(out, json, name, r)),
    };
    match written {
        Ok(Ok(())) => 0,
        Ok(Err(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error[OutputError]: {e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Domain {
            code,
            message,
            details,
        }) => {
            if json {
                let env = ErrorEnvelope {
                    schema: SCHEMA,
                    command: name.to_string(),
                    error: ErrorBody {
                        code,
                        message,
                        details,
                    },
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&env).expect("error serializes")
                );
            } else {
                let _ = writeln!(err, "error[{code}]: {message}");
                if let Some(d) = details {
                    let _ = writeln!(
                        err,
                        "{}",
                        serde_json::to_string_pretty(&d).expect("details serialize")
                    );
                }
            }
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("monoglue").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn list_parsing() {
        let l = |v: &[&str]| parse_list(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        assert_eq!(l(&["5,12"]).unwrap(), vec![5, 12]);
        assert_eq!(l(&["5", "12"]).unwrap(), vec![5, 12]);
        assert_eq!(l(&["5, 12,", "7"]).unwrap(), vec![5, 12, 7]);
        assert!(matches!(l(&["5", "x"]), Err(Failure::Usage(_))));
        assert!(matches!(l(&[","]), Err(Failure::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["semigroup", "2", "3", "4"]).0, 0);
        let (code, _, err) = run_str(&["semigroup", "4", "6"]);
        assert_eq!(code, 1);
        assert!(err.contains("error[GcdNotOne]"), "{err}");
        assert_eq!(run_str(&["semigroup", "2", "x"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(
            run_str(&["glue", "--s1", "2,3", "--s2", "4,5", "--p", "6", "--q", "8"]).0,
            1
        );
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("tangent-cone"));
    }

    #[test]
    fn raw_ideals() {
        let (code, out, err) = run_str(&["--json", "ideal", "--raw", "x^3 - y^2, x*y - 1"]);
        assert_eq!(code, 0, "{err}");
        let v: Envelope<IdealOut> = serde_json::from_str(&out).unwrap();
        assert_eq!(v.result.variables, vec!["x", "y"]);
        assert!(v.result.curve.is_none());
        let (code, out, _) = run_str(&["--json", "ideal", "--raw", "x^2 - x^3", "--local"]);
        assert_eq!(code, 0);
        let v: Envelope<IdealOut> = serde_json::from_str(&out).unwrap();
        assert_eq!(v.result.leading_monomials, vec!["x^2"]);
        let (code, _, err) = run_str(&["ideal", "--raw", "x^^2"]);
        assert_eq!(code, 1);
        assert!(err.contains("ParseError"), "{err}");
    }

    #[test]
    fn priority_errors_are_domain_errors() {
        let (code, _, err) = run_str(&["tangent-cone", "6", "7", "15", "--order", "x1,x2,x3"]);
        assert_eq!(code, 1);
        assert!(err.contains("LowestNotSmallest"), "{err}");
        let (code, _, err) = run_str(&["tangent-cone", "6", "7", "15", "--order", "x2,x3"]);
        assert_eq!(code, 1);
        assert!(err.contains("InvalidPriority"), "{err}");
    }
}
