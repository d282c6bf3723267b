use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use rayon::prelude::*;

use genusdist::analysis::{certify_gamma, log_concave_on_support, moment_report};
use genusdist::characters::{frobenius_count, mn_character};
use genusdist::combinatorics::{factorial, partitions_of, Partition};
use genusdist::genus::{
    bouquet_gamma, dipole_gamma, fan_gamma, fan_handles, gamma_constellation, gamma_digraph, Family, GenusPolynomial,
};
use genusdist::oracle::{
    count_factorizations_exhaustive, enumerate_bieulerian_4tuples, enumerate_embeddings, enumerate_factorizations,
    total_embeddings, EulerianDigraph, GenusHistogram, OracleConfig, DEFAULT_BUDGET,
};
use genusdist::{Error, Result};

use crate::args::{Cli, Command, FamilyArg, LambdaSel, TableFamily, VerifyMode, DEFAULT_N_CAP};
use crate::record::{CheckCase, CheckReport, Inputs, OutputRecord, Payload, VerifyCase, VerifyReport};

/// Limits in force for one invocation.
#[derive(Debug, Clone)]
pub struct Limits {
    pub n_cap: usize,
    pub oracle: OracleConfig,
}

impl Limits {
    pub fn from_cli(cli: &Cli) -> Result<Limits> {
        let g = &cli.global;
        if (g.n_cap > DEFAULT_N_CAP || g.budget > DEFAULT_BUDGET) && !g.allow_large {
            return Err(Error::Usage(format!(
                "raising --n-cap above {DEFAULT_N_CAP} or --budget above {DEFAULT_BUDGET} requires --allow-large"
            )));
        }
        Ok(Limits {
            n_cap: g.n_cap,
            oracle: OracleConfig {
                budget: BigUint::from(g.budget),
            },
        })
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Usage("n must be positive".into()));
        }
        if n > self.n_cap {
            return Err(Error::Usage(format!(
                "n = {n} exceeds the cap {} (see --n-cap)",
                self.n_cap
            )));
        }
        Ok(())
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Usage(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::Consistency(_) => 4,
        Error::NotEulerian(_) | Error::NotAFan(_) => 5,
    }
}

fn lambdas(n: usize, sel: &LambdaSel) -> Vec<Partition> {
    match &sel.lambda {
        Some(l) => vec![l.clone()],
        None => partitions_of(n),
    }
}

fn read_digraph(path: &Path) -> Result<EulerianDigraph> {
    let text = fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    EulerianDigraph::from_json(&text)
}

fn case_from(case: String, oracle: &GenusHistogram, formula: &GenusPolynomial, total_law: Option<bool>) -> VerifyCase {
    let oracle_coeffs: Vec<String> = oracle.to_coeffs().iter().map(|c| c.to_string()).collect();
    let formula_coeffs = formula.coeff_strings();
    let pass = oracle_coeffs == formula_coeffs && total_law != Some(false);
    VerifyCase {
        case,
        oracle: oracle_coeffs,
        formula: formula_coeffs,
        total_law,
        pass,
    }
}

fn report(mode: &str, cases: Vec<VerifyCase>) -> Payload {
    let pass = cases.iter().all(|c| c.pass);
    Payload::Verify(VerifyReport {
        mode: mode.into(),
        cases,
        pass,
    })
}

pub fn execute(cli: &Cli, limits: &Limits) -> Result<OutputRecord> {
    let mut inputs = Inputs::default();
    let (command, result) = match &cli.command {
        Command::Genus { family, m, n, lambda } => {
            inputs.family = Some(Family::from(*family).to_string());
            (inputs.m, inputs.n, inputs.lambda) = (*m, Some(*n), lambda.clone());
            limits.check_n(*n)?;
            ("genus", Payload::Genus(genus(*family, *m, *n, lambda.as_ref())?))
        }
        Command::Table { family, max_n } => {
            inputs.max_n = Some(*max_n);
            limits.check_n(*max_n)?;
            let (family, rows) = match family {
                TableFamily::Bouquet => (Family::Bouquet, (1..=*max_n).map(bouquet_gamma).collect::<Result<_>>()?),
                TableFamily::Dipole => (Family::Dipole, (1..=*max_n).map(dipole_gamma).collect::<Result<_>>()?),
            };
            inputs.family = Some(family.to_string());
            ("table", Payload::Table { family, rows })
        }
        Command::Verify { mode } => verify(mode, limits, &mut inputs)?,
        Command::Check { m, n, lambdas: sel } => {
            (inputs.m, inputs.n, inputs.lambda, inputs.all_lambda) =
                (Some(*m), Some(*n), sel.lambda.clone(), sel.all_lambda);
            limits.check_n(*n)?;
            ("check", check(*m, *n, &lambdas(*n, sel))?)
        }
        Command::Moments {
            m,
            n,
            lambda,
            precision,
        } => {
            (inputs.m, inputs.n, inputs.lambda, inputs.precision) =
                (Some(*m), Some(*n), Some(lambda.clone()), Some(*precision));
            (
                "moments",
                Payload::Moments(Box::new(moment_report(*m, *n, lambda, *precision)?)),
            )
        }
        Command::Fan { input, handle } => {
            (inputs.input, inputs.handle) = (Some(input.display().to_string()), Some(*handle));
            let d = read_digraph(input)?;
            let gamma = fan_gamma(&d, *handle)?;
            ("fan", Payload::Genus(gamma))
        }
        Command::Char { theta, mu } => {
            (inputs.theta, inputs.mu) = (Some(theta.clone()), Some(mu.clone()));
            limits.check_n(theta.weight())?;
            let value = mn_character(theta, mu)?;
            (
                "char",
                Payload::Character {
                    theta: theta.clone(),
                    mu: mu.clone(),
                    value: value.to_string(),
                },
            )
        }
    };
    let format = format!("{:?}", cli.global.format).to_lowercase();
    Ok(OutputRecord {
        command: command.to_string(),
        inputs,
        result,
        format,
    })
}

fn genus(family: FamilyArg, m: Option<usize>, n: usize, lambda: Option<&Partition>) -> Result<GenusPolynomial> {
    let need_lambda =
        || lambda.ok_or_else(|| Error::Usage(format!("--lambda is required for {}", Family::from(family))));
    if m.is_some() && family != FamilyArg::Constellation {
        return Err(Error::Usage("--m applies only to constellations".into()));
    }
    match family {
        FamilyArg::Constellation => {
            let m = m.ok_or_else(|| Error::Usage("--m is required for constellations".into()))?;
            gamma_constellation(m, n, need_lambda()?)
        }
        FamilyArg::Digraph => gamma_digraph(n, need_lambda()?),
        FamilyArg::Bouquet | FamilyArg::Dipole if lambda.is_some() => Err(Error::Usage(format!(
            "--lambda does not apply to {}",
            Family::from(family)
        ))),
        FamilyArg::Bouquet => bouquet_gamma(n),
        FamilyArg::Dipole => dipole_gamma(n),
    }
}

fn check(m: usize, n: usize, lambdas: &[Partition]) -> Result<Payload> {
    let cases = lambdas
        .par_iter()
        .map(|lambda| {
            let gamma = gamma_constellation(m, n, lambda)?;
            let cert = certify_gamma(&gamma)?;
            let log_concave = log_concave_on_support(gamma.coeffs());
            Ok(CheckCase {
                lambda: lambda.clone(),
                coeffs: gamma.coeff_strings(),
                real_rooted: cert.real_rooted,
                nonpositive_roots: cert.all_roots_nonpositive,
                log_concave,
                pass: cert.passes() && log_concave.holds(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = cases.iter().all(|c| c.pass);
    Ok(Payload::Check(CheckReport { m, n, cases, pass }))
}

fn verify(mode: &VerifyMode, limits: &Limits, inputs: &mut Inputs) -> Result<(&'static str, Payload)> {
    let cfg = &limits.oracle;
    match mode {
        VerifyMode::Factorizations { m, n, lambdas: sel } => {
            (inputs.m, inputs.n, inputs.lambda, inputs.all_lambda) =
                (Some(*m), Some(*n), sel.lambda.clone(), sel.all_lambda);
            limits.check_n(*n)?;
            let cases = lambdas(*n, sel)
                .iter()
                .map(|lambda| {
                    let oracle = enumerate_factorizations(*m, *n, lambda, cfg)?;
                    let formula = gamma_constellation(*m, *n, lambda)?;
                    Ok(case_from(lambda.to_string(), &oracle, &formula, None))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(("verify factorizations", report("factorizations", cases)))
        }
        VerifyMode::Embeddings {
            input: Some(path),
            handle,
            ..
        } => {
            (inputs.input, inputs.handle) = (Some(path.display().to_string()), *handle);
            let d = read_digraph(path)?;
            let handle = match handle {
                Some(h) => *h,
                None => *fan_handles(&d)
                    .first()
                    .ok_or_else(|| Error::NotAFan("no vertex of the input works as a fan handle".into()))?,
            };
            let formula = fan_gamma(&d, handle)?;
            let oracle = enumerate_embeddings(&d, cfg)?;
            let law = BigUint::from(oracle.total()) == total_embeddings(&d);
            let case = case_from(
                format!("{} (handle {handle})", path.display()),
                &oracle,
                &formula,
                Some(law),
            );
            Ok(("verify embeddings", report("embeddings", vec![case])))
        }
        VerifyMode::Embeddings {
            input: None,
            n,
            lambda,
            all_lambda,
            ..
        } => {
            let n = n.ok_or_else(|| Error::Usage("--n or --input is required".into()))?;
            (inputs.n, inputs.lambda, inputs.all_lambda) = (Some(n), lambda.clone(), *all_lambda);
            limits.check_n(n)?;
            if lambda.is_none() && !all_lambda {
                return Err(Error::Usage("one of --lambda or --all-lambda is required".into()));
            }
            let sel = LambdaSel {
                lambda: lambda.clone(),
                all_lambda: *all_lambda,
            };
            let cases = lambdas(n, &sel)
                .iter()
                .map(|lambda| {
                    let d = EulerianDigraph::bipartite(lambda)?;
                    let oracle = enumerate_embeddings(&d, cfg)?;
                    let formula = gamma_digraph(n, lambda)?;
                    let law = BigUint::from(oracle.total()) == total_embeddings(&d);
                    Ok(case_from(lambda.to_string(), &oracle, &formula, Some(law)))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(("verify embeddings", report("embeddings", cases)))
        }
        VerifyMode::Frobenius { n, k } => {
            (inputs.n, inputs.k) = (Some(*n), Some(*k));
            limits.check_n(*n)?;
            Ok(("verify frobenius", frobenius(*n, *k, cfg)?))
        }
        VerifyMode::Bieulerian { n, lambdas: sel } => {
            (inputs.n, inputs.lambda, inputs.all_lambda) = (Some(*n), sel.lambda.clone(), sel.all_lambda);
            limits.check_n(*n)?;
            let cases = lambdas(*n, sel)
                .iter()
                .map(|lambda| {
                    let oracle = enumerate_bieulerian_4tuples(*n, lambda, cfg)?;
                    let formula = gamma_constellation(3, *n, lambda)?;
                    Ok(case_from(lambda.to_string(), &oracle, &formula, None))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(("verify bieulerian", report("bieulerian", cases)))
        }
    }
}

/// Every ordered `k`-tuple of cycle types of `n`.
fn frobenius(n: usize, k: usize, cfg: &OracleConfig) -> Result<Payload> {
    if k == 0 {
        return Err(Error::Usage("k must be positive".into()));
    }
    let parts = partitions_of(n);
    // the exhaustive counter enumerates all but the last factor
    let space = factorial(n).pow(k as u32 - 1) * BigUint::from(parts.len());
    if space > cfg.budget {
        return Err(Error::BudgetExceeded {
            space,
            budget: cfg.budget.clone(),
        });
    }
    let tuples = (0..parts.len().pow(k as u32))
        .map(|mut code| {
            (0..k)
                .map(|_| {
                    let p = parts[code % parts.len()].clone();
                    code /= parts.len();
                    p
                })
                .rev()
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    let cases = tuples
        .par_iter()
        .map(|types| {
            let formula = frobenius_count(types)?;
            let oracle = count_factorizations_exhaustive(types, cfg)?;
            let label = types.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>().join(" ");
            Ok(VerifyCase {
                case: label,
                pass: oracle == formula,
                oracle: vec![oracle.to_string()],
                formula: vec![formula.to_string()],
                total_law: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report("frobenius", cases))
}
