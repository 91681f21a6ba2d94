//! Command implementations behind the `srfrob` binary. Every command yields
//! one JSON object and an exit code.

mod input;
mod render;

pub use input::{parse_inline, parse_input, InputDocument, InputError, Overrides};
pub use render::{render_text, symbolic_monomial};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::frobenius::{
    classify, complexity_sequence_with, generating_function, C0Convention,
    ComplexityReport, FrobeniusComplexity, verify_main_theorem,
};
use crate::ideal::MonomialIdeal;
use crate::oracle::{cross_check, random_squarefree_ideals, DEFAULT_SEED};
use crate::stanley_reisner::{minimal_primes, restrict_variables, SquareFreeIdeal};

pub const DEFAULT_E_MAX: u32 = 5;
/// Degrees covered by the oracle cross-checks in `verify`.
pub const ORACLE_E_MAX: u32 = 2;
pub const DEFAULT_SUITE_SIZE: usize = 100;
pub const DEFAULT_SUITE_E_MAX: u32 = 3;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Colon,
    Jq,
    Classify,
    Complexity,
    Support,
    Genfun,
    Verify,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub e_max: Option<u32>,
    pub c0: C0Convention,
    pub seed: Option<u64>,
    /// `genfun` only: use this `μ` instead of computing it.
    pub mu: Option<usize>,
    pub instances: Option<usize>,
    /// Characteristic for the random suite when no ideal is given.
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Self { report, exit_code: EXIT_OK }
    }

    pub fn input_error(message: impl Into<String>) -> Self {
        Self { report: json!({ "error": message.into(), "kind": "input" }), exit_code: EXIT_INPUT }
    }

    fn from_error(err: Error) -> Self {
        if err.is_internal() {
            Self {
                report: json!({ "error": err.to_string(), "kind": "formula-violation" }),
                exit_code: EXIT_INTERNAL,
            }
        } else {
            Self::input_error(err.to_string())
        }
    }
}

#[derive(Serialize)]
struct GenfunJson {
    numerator: Vec<i64>,
    denominator: Vec<i64>,
}

#[derive(Serialize)]
struct SupportJson {
    gamma: Vec<Vec<usize>>,
    minimal: bool,
}

/// Output of the `complexity` command.
#[derive(Serialize)]
struct ComplexityJson {
    case: &'static str,
    principally_generated: bool,
    mu: usize,
    c: Vec<usize>,
    k: Vec<usize>,
    frobenius_complexity: Value,
    genfun: GenfunJson,
    #[serde(rename = "J_p")]
    j_p: Vec<Vec<u64>>,
    support_set: SupportJson,
    restricted_variables: Vec<usize>,
}

fn frobenius_complexity_json(fc: FrobeniusComplexity) -> Value {
    match fc {
        FrobeniusComplexity::Zero => json!(0),
        FrobeniusComplexity::NegativeInfinity => json!("-inf"),
    }
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|i| i + 1).collect()).collect()
}

fn complexity_json(r: &ComplexityReport<u64>) -> Value {
    let out = ComplexityJson {
        case: r.case().as_str(),
        principally_generated: r.classification.principally_generated,
        mu: r.mu,
        c: r.c.clone(),
        k: r.k.clone(),
        frobenius_complexity: frobenius_complexity_json(r.frobenius_complexity),
        genfun: GenfunJson {
            numerator: r.genfun.numerator.clone(),
            denominator: r.genfun.denominator.clone(),
        },
        j_p: r.jp.to_u64_vecs(),
        support_set: SupportJson {
            gamma: one_based(&r.support_set.gamma),
            minimal: r.support_set.is_minimal,
        },
        restricted_variables: r.restricted_variables(),
    };
    serde_json::to_value(out).expect("plain data serializes")
}

fn ideal_json(ideal: &MonomialIdeal<u64>, q: u64) -> Value {
    json!({
        "generators": ideal.to_u64_vecs(),
        "symbolic": ideal.generators().iter().map(|g| symbolic_monomial(g, q)).collect::<Vec<_>>(),
    })
}

fn degrees_json(r: &ComplexityReport<u64>, pick: impl Fn(&crate::frobenius::FrobeniusDegreeData<u64>) -> &MonomialIdeal<u64>) -> Value {
    let degrees: Vec<Value> = r
        .degrees
        .iter()
        .map(|d| {
            let mut v = ideal_json(pick(d), d.q);
            v["e"] = json!(d.e);
            v["q"] = json!(d.q);
            v
        })
        .collect();
    json!({
        "p": r.p,
        "restricted_variables": r.restricted_variables(),
        "degrees": degrees,
    })
}

fn verify_instance(ideal: &SquareFreeIdeal<u64>, p: u64, e_max: u32) -> Result<(Value, bool), Error> {
    let theorem = verify_main_theorem(ideal, p, e_max)?;
    let oracle = cross_check(ideal, p, e_max.min(ORACLE_E_MAX))?;
    let failures: Vec<Value> = theorem
        .failures()
        .into_iter()
        .map(|(e, c)| json!({ "e": e, "check": c.name, "detail": c.detail }))
        .collect();
    let passed = theorem.passed() && oracle.is_empty();
    let value = json!({
        "variables": ideal.nvars(),
        "generators": ideal.ideal().to_u64_vecs(),
        "p": p,
        "e_max": e_max,
        "passed": passed,
        "main_theorem": {
            "passed": theorem.passed(),
            "mu": theorem.mu,
            "c": theorem.c(),
            "checks": theorem.degrees.iter().map(|d| d.checks.len()).sum::<usize>(),
            "failures": failures,
        },
        "oracle": {
            "passed": oracle.is_empty(),
            "e_max": e_max.min(ORACLE_E_MAX),
            "failures": oracle,
        },
    });
    Ok((value, passed))
}

fn run_verify(doc: Option<&InputDocument>, options: &Options) -> Result<Outcome, Error> {
    let mut instances = Vec::new();
    let mut all_passed = true;
    let mut header = json!({});
    match doc {
        Some(doc) => {
            let e_max = options.e_max.or(doc.e_max).unwrap_or(DEFAULT_E_MAX).max(2);
            let (value, passed) = verify_instance(&doc.ideal(), doc.p, e_max)?;
            all_passed &= passed;
            instances.push(value);
        }
        None => {
            let seed = options.seed.unwrap_or(DEFAULT_SEED);
            let count = options.instances.unwrap_or(DEFAULT_SUITE_SIZE);
            let e_max = options.e_max.unwrap_or(DEFAULT_SUITE_E_MAX).max(2);
            let primes = match options.p {
                Some(p) => vec![p],
                None => vec![2, 3],
            };
            for ideal in random_squarefree_ideals(seed, count) {
                for &p in &primes {
                    let (value, passed) = verify_instance(&ideal, p, e_max)?;
                    all_passed &= passed;
                    // Keep the report small: only failing instances in full.
                    if !passed {
                        instances.push(value);
                    }
                }
            }
            header = json!({ "seed": seed, "ideals": count, "primes": primes, "e_max": e_max });
        }
    }
    let mut report = json!({ "passed": all_passed, "instances": instances });
    if let Value::Object(extra) = header {
        for (k, v) in extra {
            report[k] = v;
        }
    }
    Ok(Outcome {
        report,
        exit_code: if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}

fn run(cmd: Command, doc: Option<&InputDocument>, options: &Options) -> Result<Outcome, Error> {
    if cmd == Command::Verify {
        return run_verify(doc, options);
    }
    if cmd == Command::Genfun {
        if let Some(mu) = options.mu {
            return Ok(Outcome::ok(genfun_json(mu, options, DEFAULT_E_MAX)));
        }
    }
    let Some(doc) = doc else {
        return Ok(Outcome::input_error("no ideal given; pass --input or --ideal"));
    };
    let ideal = doc.ideal();
    let e_max = options.e_max.or(doc.e_max).unwrap_or(DEFAULT_E_MAX);
    let report = match cmd {
        Command::Classify => {
            let (restricted, map) = restrict_variables(&ideal)?;
            let d = minimal_primes(&restricted)?;
            let cl = classify(&restricted, &d, doc.p)?;
            let primes: Vec<Vec<usize>> = d.primes.iter().map(|p| p.support().to_vec()).collect();
            json!({
                "case": cl.case.as_str(),
                "principally_generated": cl.principally_generated,
                "heights": cl.heights,
                "primes": one_based(&primes),
                "jp_is_zero": cl.jp_is_zero,
                "jp_in_bracket_plus_top": cl.jp_in_bracket_plus_top,
                "jp_in_top": cl.jp_in_top,
                "restricted_variables": map.used.iter().map(|i| i + 1).collect::<Vec<_>>(),
            })
        }
        _ => {
            let r = complexity_sequence_with(&ideal, doc.p, e_max, options.c0)?;
            match cmd {
                Command::Colon => degrees_json(&r, |d| &d.k),
                Command::Jq => degrees_json(&r, |d| &d.jq),
                Command::Complexity => complexity_json(&r),
                Command::Support => json!({
                    "gamma": one_based(&r.support_set.gamma),
                    "minimal": r.support_set.is_minimal,
                    "restricted_variables": r.restricted_variables(),
                }),
                Command::Genfun => {
                    let mut v = genfun_json(r.mu, options, e_max);
                    v["c"] = json!(r.c);
                    v
                }
                Command::Classify | Command::Verify => unreachable!(),
            }
        }
    };
    Ok(Outcome::ok(report))
}

fn genfun_json(mu: usize, options: &Options, e_max: u32) -> Value {
    let g = generating_function(mu, options.c0);
    json!({
        "mu": mu,
        "c0_convention": match options.c0 { C0Convention::Zero => "zero", C0Convention::One => "one" },
        "numerator": g.numerator,
        "denominator": g.denominator,
        "closed_form": g.closed_form(),
        "coefficients": g.coefficients(e_max as usize + 1),
    })
}

/// Runs one command. Library errors become exit codes 1 (input) or 2
/// (formula violation); a failed `verify` exits with 3.
pub fn run_command(cmd: Command, doc: Option<&InputDocument>, options: &Options) -> Outcome {
    run(cmd, doc, options).unwrap_or_else(Outcome::from_error)
}
