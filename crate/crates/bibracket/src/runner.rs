//! Glue between spec files and the check suites: picks the sections a
//! command needs, runs the corresponding checks, and assembles a
//! `Report`. Check names are prefixed with their component
//! (`bibracket/antisymmetry`, `lie/pbw-confluence`, ...) so `all` output
//! stays unambiguous.

use std::path::Path;

use thiserror::Error;

use crate::bracket::Evaluator;
use crate::hopf::{check_hopf, check_reducible, check_scalar_form};
use crate::lie::check_lie;
use crate::moment::check_moment;
use crate::reduce::{reduce_H0, ReduceError};
use crate::repalg::{check_deviation_identity, check_repalg_axioms, check_trace_compat};
use crate::report::{AxiomReport, CheckResult, Report, Witness};
use crate::specfile::{parse_spec_file, SpecError, SpecFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    CheckBibracket,
    CheckRepalg,
    CheckHopf,
    CheckMoment,
    Reduce,
    CheckLie,
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckBibracket => "check-bibracket",
            Command::CheckRepalg => "check-repalg",
            Command::CheckHopf => "check-hopf",
            Command::CheckMoment => "check-moment",
            Command::Reduce => "reduce",
            Command::CheckLie => "check-lie",
            Command::All => "all",
        }
    }
}

pub struct RunOptions {
    pub maxlen: usize,
    pub seed: u64,
    pub n: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            maxlen: 4,
            seed: 0,
            n: 2,
        }
    }
}

/// How many random entry tuples the representation-algebra Jacobi and
/// deviation sweeps sample per run.
const REPALG_TUPLES: usize = 25;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Model(String),
}

fn model_err(e: impl std::fmt::Display) -> RunError {
    RunError::Model(e.to_string())
}

fn prefixed(component: &str, checks: AxiomReport) -> AxiomReport {
    checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{component}/{}", c.name);
            c
        })
        .collect()
}

pub fn run_file(path: &Path, cmd: Command, opts: &RunOptions) -> Result<Report, RunError> {
    let spec = parse_spec_file(path)?;
    run_spec(&spec, cmd, opts)
}

pub fn run_spec(spec: &SpecFile, cmd: Command, opts: &RunOptions) -> Result<Report, RunError> {
    let checks = match cmd {
        Command::CheckBibracket => bibracket_checks(spec, opts)?,
        Command::CheckRepalg => repalg_checks(spec, opts)?,
        Command::CheckHopf => hopf_checks(spec, opts)?,
        Command::CheckMoment => moment_checks(spec, opts)?,
        Command::Reduce => reduce_checks(spec, opts)?,
        Command::CheckLie => lie_checks(spec, opts)?,
        Command::All => {
            let mut out = Vec::new();
            if spec.bibracket.is_some() {
                out.extend(bibracket_checks(spec, opts)?);
            }
            if spec.bibracket.is_some() {
                out.extend(repalg_checks(spec, opts)?);
            }
            if spec.hopf.is_some() && spec.bibracket.is_some() {
                out.extend(hopf_checks(spec, opts)?);
            }
            if spec.moment.is_some() && spec.bibracket.is_some() {
                out.extend(moment_checks(spec, opts)?);
            }
            if spec.reduction.is_some() && spec.moment.is_some() && spec.bibracket.is_some() {
                out.extend(reduce_checks(spec, opts)?);
            }
            if spec.lie.is_some() {
                out.extend(lie_checks(spec, opts)?);
            }
            out
        }
    };
    Ok(Report::new(
        cmd.name(),
        &spec.name,
        &spec.digest,
        opts.seed,
        opts.maxlen,
        checks,
    ))
}

fn bibracket_checks(spec: &SpecFile, opts: &RunOptions) -> Result<AxiomReport, RunError> {
    let bb = spec.require_bibracket()?;
    let ev = Evaluator::new(&spec.alg, bb);
    let mut checks = ev.check_gerstenhaber(opts.maxlen).map_err(model_err)?;
    checks.extend(ev.check_assoc_bracket(opts.maxlen).map_err(model_err)?);
    Ok(prefixed("bibracket", checks))
}

fn repalg_checks(spec: &SpecFile, opts: &RunOptions) -> Result<AxiomReport, RunError> {
    let bb = spec.require_bibracket()?;
    let mut checks = check_repalg_axioms(&spec.alg, bb, opts.n, opts.seed, REPALG_TUPLES)
        .map_err(model_err)?;
    checks.push(
        check_deviation_identity(&spec.alg, bb, opts.n, opts.seed, REPALG_TUPLES)
            .map_err(model_err)?,
    );
    checks.extend(
        check_trace_compat(&spec.alg, bb, opts.n, opts.maxlen, opts.seed).map_err(model_err)?,
    );
    Ok(prefixed("repalg", checks))
}

fn hopf_checks(spec: &SpecFile, opts: &RunOptions) -> Result<AxiomReport, RunError> {
    let h = spec.require_hopf()?;
    let bb = spec.require_bibracket()?;
    let mut checks = check_hopf(&spec.alg, h, opts.maxlen).map_err(model_err)?;
    checks.extend(
        check_scalar_form(&spec.alg, bb, Some(h), opts.maxlen).map_err(model_err)?,
    );
    checks.extend(check_reducible(&spec.alg, bb, h, opts.maxlen).map_err(model_err)?);
    Ok(prefixed("hopf", checks))
}

fn moment_checks(spec: &SpecFile, opts: &RunOptions) -> Result<AxiomReport, RunError> {
    let bb = spec.require_bibracket()?;
    let m = spec.require_moment()?;
    let ev = Evaluator::new(&spec.alg, bb);
    let checks = check_moment(&ev, m, opts.maxlen).map_err(model_err)?;
    Ok(prefixed("moment", checks))
}

fn reduce_checks(spec: &SpecFile, opts: &RunOptions) -> Result<AxiomReport, RunError> {
    let bb = spec.require_bibracket()?;
    let m = spec.require_moment()?;
    let q = spec.require_reduction()?;
    let ev = Evaluator::new(&spec.alg, bb);
    match reduce_H0(&ev, m, q, opts.maxlen) {
        Ok((rb, mut checks)) => {
            let t = &q.target;
            let mut lines = Vec::new();
            for i in 0..t.len() {
                for j in 0..t.len() {
                    if let Some(p) = rb.table_entry(i, j) {
                        lines.push(format!(
                            "{{{},{}}} = {}",
                            t.gen(i).name,
                            t.gen(j).name,
                            p.display(t)
                        ));
                    }
                }
            }
            checks.insert(
                0,
                CheckResult::passed("table", lines.len(), lines.join("; ")),
            );
            Ok(prefixed("reduce", checks))
        }
        Err(ReduceError::RelationNotKilled { image }) => Ok(prefixed(
            "reduce",
            vec![CheckResult::failed(
                "relation-killed",
                1,
                "the moment element must map to 0 in the target",
                Witness {
                    inputs: vec!["mu".to_string()],
                    lhs: image,
                    rhs: "0".to_string(),
                },
            )],
        )),
        Err(e) => Err(model_err(e)),
    }
}

fn lie_checks(spec: &SpecFile, opts: &RunOptions) -> Result<AxiomReport, RunError> {
    let lie = spec.require_lie()?;
    Ok(prefixed(
        "lie",
        check_lie(lie, opts.n, opts.seed, opts.maxlen),
    ))
}
