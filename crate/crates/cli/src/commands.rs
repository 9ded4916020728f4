use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use quasishuffle::evaluators::{to_qseries, HarmonicEvaluator, MzvEvaluator, PolylogEvaluator, QZetaEvaluator, SumMode};
use quasishuffle::hopf::{antipode, deconcat, derivation_d, exp_rd, reduced_deconcat, Antipode};
use quasishuffle::lambda_series::{check_identity, IdentityInputs, IdentityKind, LambdaLinComb};
use quasishuffle::series_maps::sigma_power;
use quasishuffle::verify::{parse_suite, run_suite, Suite, SuiteConfig, SuiteReport};
use quasishuffle::{
    Alphabet, FormalSeries, LinComb, LinearWordMap, NamedSeries, NcPoly, NumericScalar, PolyScalar, Product, QSeries,
    Rational, Scalar,
};

use crate::config::{lift_expr, CliScalar, Config, Format};
use crate::output::{poly_json, render, tensor_json};
use crate::parse::{parse_expr, parse_scalar};
use crate::{Command, Outcome};

fn emit_poly<R: Scalar>(cfg: &Config, x: &NcPoly<R>) -> Outcome {
    Outcome::ok(match cfg.format {
        Format::Text => format!("{x}\n"),
        Format::Json => render(&poly_json(x)) + "\n",
    })
}

/// Every command except `eval`, over the configured coefficient ring.
pub fn dispatch<R: CliScalar>(cfg: &Config, command: &Command) -> Result<Outcome> {
    let alphabet: Alphabet<R> = cfg.alphabet()?;
    match command {
        Command::Prod { op, operands } => {
            let mode: Product = op.parse().map_err(|e: String| anyhow!(e))?;
            let mut acc: NcPoly<R> = cfg.expr(&operands[0])?;
            for text in &operands[1..] {
                acc = alphabet.product(mode, &acc, &cfg.expr(text)?);
            }
            Ok(emit_poly(cfg, &acc))
        }
        Command::Map { series, expr } => {
            let mut x: NcPoly<R> = cfg.expr(expr)?;
            for token in series {
                x = map_token(cfg, &alphabet, token)?.apply(&x)?;
            }
            Ok(emit_poly(cfg, &x))
        }
        Command::Coproduct { reduced, expr } => {
            let x: NcPoly<R> = cfg.expr(expr)?;
            let t = if *reduced { reduced_deconcat(&x) } else { deconcat(&x) };
            Ok(Outcome::ok(match cfg.format {
                Format::Text => format!("{t}\n"),
                Format::Json => render(&tensor_json(&t)) + "\n",
            }))
        }
        Command::Antipode { kind, expr } => {
            let which: Antipode = kind.parse().map_err(|e: String| anyhow!(e))?;
            let x: NcPoly<R> = cfg.expr(expr)?;
            Ok(emit_poly(cfg, &antipode(&alphabet, which, &x)))
        }
        Command::Derivation { exp, expr } => {
            let x: NcPoly<R> = cfg.expr(expr)?;
            let y = match exp {
                None => derivation_d(&alphabet, &x),
                Some(c) => exp_rd(&alphabet, &cfg.scalar::<R>(c)?, &x),
            };
            Ok(emit_poly(cfg, &y))
        }
        Command::Gf { identity, z, y, p, s, r, series, mode } => {
            let kind = IdentityKind::from_name(identity)?;
            let params: Vec<&String> = [p, s, r].into_iter().flatten().collect();
            if params.len() > 1 {
                bail!("give at most one of --p, --s, --r");
            }
            let inputs = IdentityInputs {
                z: z.as_deref().map(|t| lambda_lincomb(cfg, t)).transpose()?,
                y: y.as_deref().map(|t| lambda_lincomb(cfg, t)).transpose()?,
                param: params.first().map(|t| cfg.scalar::<R>(t)).transpose()?,
                series: series.as_deref().map(|t| series_token(cfg, t, cfg.trunc)).transpose()?,
                mode: mode.as_deref().map(|m| m.parse::<Product>().map_err(|e| anyhow!(e))).transpose()?,
            };
            let report = check_identity(&alphabet, &inputs.build(kind)?, cfg.trunc)?;
            let code = if report.passed() { 0 } else { 1 };
            let stdout = match cfg.format {
                Format::Text => format!("{report}\n"),
                Format::Json => {
                    let parts: Vec<Value> = report
                        .parts
                        .iter()
                        .map(|part| match &part.mismatch {
                            None => json!({ "label": part.label, "passed": true }),
                            Some(m) => json!({
                                "label": part.label,
                                "passed": false,
                                "degree": m.degree,
                                "difference": poly_json(&m.difference),
                            }),
                        })
                        .collect();
                    let v = json!({
                        "identity": kind.name(),
                        "order": report.order,
                        "passed": report.passed(),
                        "parts": parts,
                    });
                    render(&v) + "\n"
                }
            };
            Ok(Outcome { code, stdout })
        }
        Command::Check { suite, maxlen, samples, max_index } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![parse_suite(suite)?] };
            let config = SuiteConfig {
                maxlen: *maxlen,
                samples: *samples,
                seed: cfg.seed,
                max_index: *max_index,
                trunc: cfg.trunc,
            };
            let reports = suites
                .into_iter()
                .map(|s| run_suite(s, &alphabet, &config))
                .collect::<quasishuffle::Result<Vec<SuiteReport>>>()?;
            let passed = reports.iter().all(SuiteReport::passed);
            let stdout = match cfg.format {
                Format::Text => reports.iter().map(ToString::to_string).collect(),
                Format::Json => {
                    let v: Vec<Value> = reports
                        .iter()
                        .map(|rep| {
                            let results: Vec<Value> = rep
                                .results
                                .iter()
                                .map(|c| json!({ "name": c.name, "cases": c.cases, "counterexample": c.counterexample }))
                                .collect();
                            json!({ "suite": rep.suite.name(), "passed": rep.passed(), "results": results })
                        })
                        .collect();
                    render(&Value::Array(v)) + "\n"
                }
            };
            Ok(Outcome { code: if passed { 0 } else { 1 }, stdout })
        }
        Command::Eval { .. } => unreachable!("eval is handled before ring dispatch"),
    }
}

/// `u0; u1; ...` as `u0 + λu1 + ...`, each part a combination of letters.
fn lambda_lincomb<R: CliScalar>(cfg: &Config, text: &str) -> Result<LambdaLinComb<R>> {
    let mut coeffs = Vec::new();
    for part in text.split(';') {
        let x: NcPoly<R> = cfg.expr(part)?;
        let mut u = LinComb::zero();
        for (w, c) in x.terms() {
            match w.letters() {
                [a] => u.add_term(*a, c.clone()),
                _ => bail!("`{}` is not a combination of single letters (found {w})", part.trim()),
            }
        }
        coeffs.push(u);
    }
    Ok(LambdaLinComb::new(coeffs))
}

enum MapToken<R> {
    Named(NamedSeries<R>),
    Explicit(FormalSeries<R>),
    Reverse,
}

fn bracketed<'a>(token: &'a str, head: &str) -> Option<&'a str> {
    token.strip_prefix(head)?.strip_prefix('[')?.strip_suffix(']')
}

fn parse_map_token<R: CliScalar>(cfg: &Config, token: &str) -> Result<MapToken<R>> {
    let token = token.trim();
    Ok(match token {
        "t" | "id" => MapToken::Named(NamedSeries::Identity),
        "-t" | "T" => MapToken::Named(NamedSeries::Negation),
        "sigma" => MapToken::Named(NamedSeries::Sigma),
        "sigma_inv" => MapToken::Named(NamedSeries::SigmaInverse),
        "exp" => MapToken::Named(NamedSeries::Exp),
        "log" => MapToken::Named(NamedSeries::Log),
        "R" | "reverse" => MapToken::Reverse,
        _ => {
            if let Some(p) = token.strip_prefix("sigma^") {
                MapToken::Named(NamedSeries::SigmaPower(cfg.scalar(p)?))
            } else if let Some(p) = bracketed(token, "H") {
                MapToken::Named(NamedSeries::Hp(cfg.scalar(p)?))
            } else if let Some(list) = bracketed(token, "series") {
                let coeffs = list.split(',').map(|c| cfg.scalar::<R>(c)).collect::<Result<Vec<R>>>()?;
                MapToken::Explicit(FormalSeries::new(coeffs)?)
            } else {
                MapToken::Named(NamedSeries::from_name(token, None).with_context(|| {
                    format!("unknown series `{token}` (see `qsh map --help` for the accepted tokens)")
                })?)
            }
        }
    })
}

fn map_token<R: CliScalar>(cfg: &Config, alphabet: &Alphabet<R>, token: &str) -> Result<LinearWordMap<R>> {
    Ok(match parse_map_token(cfg, token)? {
        MapToken::Named(f) => LinearWordMap::named(alphabet, f),
        MapToken::Explicit(f) => LinearWordMap::psi(alphabet, f),
        MapToken::Reverse => LinearWordMap::reverse(),
    })
}

fn series_token<R: CliScalar>(cfg: &Config, token: &str, order: usize) -> Result<FormalSeries<R>> {
    match parse_map_token(cfg, token)? {
        MapToken::Named(f) => Ok(f.series(order)?),
        MapToken::Explicit(f) => Ok(f),
        MapToken::Reverse => bail!("`{token}` is a map, not a power series"),
    }
}

enum Evaluator {
    Harmonic(u64),
    QZeta(usize),
    Sum(SumMode, u64),
    Polylog(u32, u64),
}

fn parse_evaluator(text: &str) -> Result<Evaluator> {
    let (name, params) = text.split_once(':').unwrap_or((text, ""));
    let mut values = std::collections::BTreeMap::new();
    for kv in params.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| anyhow!("expected key=value in `{kv}`"))?;
        let v: u64 = v.trim().parse().with_context(|| format!("`{kv}` needs a nonnegative integer"))?;
        values.insert(k.trim().to_string(), v);
    }
    let get = |key: &str, default: u64| -> u64 { values.get(key).copied().unwrap_or(default) };
    let allowed: &[&str] = match name {
        "harmonic" => &["n"],
        "qzeta" => &["order"],
        "mzv" | "t" => &["cutoff"],
        "polylog" => &["r", "cutoff"],
        _ => bail!("unknown evaluator `{name}` (expected harmonic, qzeta, mzv, t or polylog)"),
    };
    if let Some(k) = values.keys().find(|k| !allowed.contains(&k.as_str())) {
        bail!("evaluator `{name}` has no parameter `{k}`");
    }
    Ok(match name {
        "harmonic" => Evaluator::Harmonic(get("n", 8)),
        "qzeta" => Evaluator::QZeta(get("order", 20) as usize),
        "mzv" => Evaluator::Sum(SumMode::Zeta, get("cutoff", 10_000)),
        "t" => Evaluator::Sum(SumMode::TValue, get("cutoff", 10_000)),
        _ => Evaluator::Polylog(u32::try_from(get("r", 2))?, get("cutoff", 10_000)),
    })
}

fn complex_text(z: NumericScalar) -> String {
    if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

fn rational_expr(x: &NcPoly<PolyScalar>) -> Result<NcPoly<Rational>> {
    lift_expr(x, &crate::Ring::Rational)
}

/// Evaluation ignores `--coeff`: harmonic, zeta and polylog values need
/// rational coefficients, q-zeta values accept `eps`.
pub fn eval(cfg: &Config, evaluator: &str, star: bool, interp: Option<&str>, text: &str) -> Result<Outcome> {
    let evaluator = parse_evaluator(evaluator)?;
    let e = parse_expr(text).with_context(|| format!("cannot parse `{text}`"))?;
    let rho = match interp {
        None => None,
        Some(kv) => {
            let v = kv.strip_prefix("r=").ok_or_else(|| anyhow!("--interp expects r=<rational>"))?;
            let p = parse_scalar(v).with_context(|| format!("cannot parse `{v}`"))?;
            Some(p.as_rational().ok_or_else(|| anyhow!("--interp needs a rational value"))?)
        }
    };
    if star && rho.is_some() {
        bail!("--star and --interp cannot be combined");
    }
    let rho = if star { Some(Rational::from(1)) } else { rho };
    let interpolate = |alphabet: &Alphabet<Rational>, x: NcPoly<Rational>| match &rho {
        None => x,
        Some(r) => sigma_power(alphabet, r, &x),
    };
    let (value, kind) = match evaluator {
        Evaluator::Harmonic(n) => {
            let x = interpolate(&Alphabet::Z, rational_expr(&e)?);
            (HarmonicEvaluator::new(n)?.eval(&x)?.to_string(), "rational")
        }
        Evaluator::Sum(mode, cutoff) => {
            let x = interpolate(&Alphabet::Z, rational_expr(&e)?);
            (MzvEvaluator::new(cutoff, mode)?.eval(&x)?.to_string(), "real")
        }
        Evaluator::Polylog(r, cutoff) => {
            let ev = PolylogEvaluator::new(r, cutoff)?;
            let x = interpolate(&ev.alphabet(), rational_expr(&e)?);
            (complex_text(ev.eval(&x)?), "complex")
        }
        Evaluator::QZeta(order) => {
            let ev = QZetaEvaluator::new(order)?;
            let mut x = to_qseries(&e)?;
            if let Some(r) = &rho {
                x = sigma_power(&ev.alphabet(), &QSeries::constant(r.clone()), &x);
            }
            (ev.eval(&x)?.to_string(), "qseries")
        }
    };
    Ok(Outcome::ok(match cfg.format {
        Format::Text => format!("{value}\n"),
        Format::Json => render(&json!({ "input": e.to_string(), "value": value, "kind": kind })) + "\n",
    }))
}
