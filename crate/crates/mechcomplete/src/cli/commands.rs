//! Command implementations behind the thin binary. Each returns the process
//! exit code: 0 success, 1 verification failure, 2 usage/config error
//! (mapped by the caller), 3 physical failure verdict, 4 numerical failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::cli::overrides::{apply_all, split_assignment};
use crate::error::{Error, Result};
use crate::harness::{run_suite, Suite};
use crate::reasoning::graph::export_graph;
use crate::reasoning::plan::ModelPlan;
use crate::reasoning::scenario::ScenarioSpec;
use crate::reasoning::{reason, ReasonedModel};
use crate::skills::registry::{SkillRegistry, DEFAULT_SKILL_FILE};
use crate::solver::config::{check_mode_plan, Mode, SolverConfig};
use crate::solver::output::write_run_outputs;
use crate::solver::runner::run_with_plan;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PHYSICAL_FAILURE: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

/// Default output directory: --out flag, then MECHCOMPLETE_OUT, then ./out.
pub fn resolve_out_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("MECHCOMPLETE_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"))
}

fn load_registry(skills: Option<&Path>) -> Result<SkillRegistry> {
    match skills {
        Some(path) => SkillRegistry::load(path),
        None => SkillRegistry::from_json_str(DEFAULT_SKILL_FILE),
    }
}

fn load_inputs(
    scenario_path: &Path,
    skills: Option<&Path>,
    sets: &[String],
) -> Result<(ScenarioSpec, SolverConfig, SkillRegistry)> {
    let mut scenario = ScenarioSpec::from_path(scenario_path)?;
    let mut config = SolverConfig::default();
    apply_all(&mut scenario, &mut config, sets)?;
    let registry = load_registry(skills)?;
    Ok((scenario, config, registry))
}

fn render_reasoning(model: &ReasonedModel) -> String {
    let mut out = String::new();
    let report = &model.report;
    let _ = writeln!(
        out,
        "regime: {} (De = {:.3e}, tau_diff = {:.3e} s, tau_load = {:.3e} s, beta = {:.3e} 1/Pa)",
        report.regime, report.deborah, report.tau_diff, report.tau_load, report.beta_used
    );
    for edge in &model.graph.edges {
        let detail = if edge.reason.is_empty() {
            String::new()
        } else {
            format!(" — {}", edge.reason)
        };
        let _ = writeln!(
            out,
            "{}: {} ({} -> {}){detail}",
            edge.status, edge.skill_id, edge.from, edge.to
        );
    }
    let _ = writeln!(
        out,
        "plan sources: {}",
        model.plan.pressure_source_terms.join(", ")
    );
    let _ = writeln!(
        out,
        "plan sinks: {}",
        model.plan.pressure_sink_terms.join(", ")
    );
    let _ = writeln!(out, "plan hydraulic bc: {}", model.plan.hydraulic_bc);
    out
}

pub fn cmd_plan(scenario_path: &Path, skills: Option<&Path>, sets: &[String]) -> Result<i32> {
    let (scenario, _, registry) = load_inputs(scenario_path, skills, sets)?;
    let model = reason(&registry, &scenario)?;
    print!("{}", render_reasoning(&model));
    Ok(EXIT_OK)
}

pub fn cmd_graph(
    scenario_path: &Path,
    skills: Option<&Path>,
    out: Option<&Path>,
    sets: &[String],
) -> Result<i32> {
    let (scenario, _, registry) = load_inputs(scenario_path, skills, sets)?;
    let model = reason(&registry, &scenario)?;
    let dot = export_graph(&model.graph);
    match out {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(path, &dot)?;
            println!("wrote {}", path.display());
        }
        None => print!("{dot}"),
    }
    Ok(EXIT_OK)
}

pub fn cmd_run(
    scenario_path: &Path,
    mode: Mode,
    out_dir: &Path,
    skills: Option<&Path>,
    sets: &[String],
) -> Result<i32> {
    let (scenario, config, registry) = load_inputs(scenario_path, skills, sets)?;
    let plan = match mode {
        Mode::Auto => reason(&registry, &scenario)?.plan,
        Mode::Naive => ModelPlan::naive(),
        Mode::Completed => ModelPlan::completed(),
    };
    check_mode_plan(mode, &plan)?;

    let result = run_with_plan(&scenario, &config, &plan)?;
    let files = write_run_outputs(out_dir, &result)?;

    // The resolved plan, not the requested mode: identical reasoning and
    // forced-completed invocations print identically.
    println!(
        "plan: sources=[{}] sinks=[{}] bc={}",
        plan.pressure_source_terms.join(","),
        plan.pressure_sink_terms.join(","),
        plan.hydraulic_bc
    );
    println!(
        "outcome: {} at t = {:.3} s{}",
        result.outcome.verdict,
        result.outcome.t_final,
        match result.outcome.t_fail {
            Some(t) => format!(" (failure crossed at {t:.3} s)"),
            None => String::new(),
        }
    );
    for file in &files {
        println!("wrote {}", out_dir.join(file).display());
    }

    Ok(
        if result.outcome.verdict == crate::constitutive::mcc::FailureMode::Safe {
            EXIT_OK
        } else {
            EXIT_PHYSICAL_FAILURE
        },
    )
}

pub fn cmd_verify(
    suite: Suite,
    scenario_path: Option<&Path>,
    out_dir: &Path,
    sets: &[String],
) -> Result<i32> {
    let mut scenario = match scenario_path {
        Some(path) => ScenarioSpec::from_path(path)?,
        None => ScenarioSpec::rothbach(),
    };
    let mut config = SolverConfig::default();
    apply_all(&mut scenario, &mut config, sets)?;

    let reports = run_suite(suite, &scenario, &config, out_dir)?;
    let mut all_passed = true;
    for report in &reports {
        print!("{}", report.render());
        all_passed &= report.passed;
    }
    Ok(if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

#[derive(Debug, Clone)]
struct SweepRow {
    value: f64,
    deborah: f64,
    regime: String,
    p_eff_final_pa: f64,
    verdict: String,
}

pub fn cmd_sweep(
    scenario_path: &Path,
    param: &str,
    values: &[f64],
    out_dir: &Path,
    jobs: usize,
    sets: &[String],
) -> Result<i32> {
    if values.is_empty() {
        return Err(Error::InvalidConfig(
            "sweep requires at least one value".into(),
        ));
    }
    if values.iter().any(|v| *v <= 0.0 || !v.is_finite()) {
        return Err(Error::InvalidConfig(
            "sweep values must be strictly positive and finite".into(),
        ));
    }
    // Validate the parameter path early against the schema.
    {
        let mut probe = ScenarioSpec::from_path(scenario_path)?;
        let mut probe_cfg = SolverConfig::default();
        crate::cli::overrides::apply_override(
            &mut probe,
            &mut probe_cfg,
            &format!("{param}={}", values[0]),
        )?;
    }

    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();

    let jobs = jobs.max(1).min(sorted.len());
    let results: Mutex<Vec<(usize, Result<SweepRow>)>> = Mutex::new(Vec::new());
    let next: Mutex<usize> = Mutex::new(0);

    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let idx = {
                    let mut guard = next.lock().unwrap();
                    let idx = *guard;
                    if idx >= sorted.len() {
                        break;
                    }
                    *guard += 1;
                    idx
                };
                let row = sweep_row(scenario_path, param, sorted[idx], out_dir, idx, sets);
                results.lock().unwrap().push((idx, row));
            });
        }
    });

    let mut rows = results.into_inner().unwrap();
    rows.sort_by_key(|(idx, _)| *idx);

    let mut csv = format!("{param},De,regime,p_eff_final_MPa,verdict\n");
    for (_, row) in rows {
        let row = row?;
        let _ = writeln!(
            csv,
            "{:e},{:.6e},{},{:.6},{}",
            row.value,
            row.deborah,
            row.regime,
            row.p_eff_final_pa / 1e6,
            row.verdict
        );
    }
    std::fs::create_dir_all(out_dir)?;
    let csv_path = out_dir.join("sweep.csv");
    std::fs::write(&csv_path, &csv)?;
    let manifest = format!("sweep.csv\t{}\n", csv.len());
    std::fs::write(out_dir.join("MANIFEST.txt"), manifest)?;
    print!("{csv}");
    println!("wrote {}", csv_path.display());
    Ok(EXIT_OK)
}

fn sweep_row(
    scenario_path: &Path,
    param: &str,
    value: f64,
    out_dir: &Path,
    idx: usize,
    sets: &[String],
) -> Result<SweepRow> {
    let mut scenario = ScenarioSpec::from_path(scenario_path)?;
    let mut config = SolverConfig::default();
    apply_all(&mut scenario, &mut config, sets)?;
    crate::cli::overrides::apply_override(&mut scenario, &mut config, &format!("{param}={value}"))?;
    scenario.validate()?;

    let registry = SkillRegistry::from_json_str(DEFAULT_SKILL_FILE)?;
    let model = reason(&registry, &scenario)?;
    let result = run_with_plan(&scenario, &config, &model.plan)?;

    let row_dir = out_dir.join(format!("row_{idx:03}"));
    write_run_outputs(&row_dir, &result)?;

    Ok(SweepRow {
        value,
        deborah: model.report.deborah,
        regime: model.report.regime.to_string(),
        p_eff_final_pa: result.trace.last().unwrap().p_eff_pa,
        verdict: result.outcome.verdict.to_string(),
    })
}

/// Maps an error to the exit-code contract.
pub fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::NoConvergence { .. } | Error::LinearSolveFailure { .. } => EXIT_NUMERICAL,
        _ => EXIT_CONFIG,
    }
}

/// Sanity re-export used by tests to keep the assignment parser covered.
pub fn parse_assignment(raw: &str) -> Result<(String, String)> {
    split_assignment(raw).map(|(p, v)| (p.to_string(), v.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario_file(dir: &Path) -> PathBuf {
        std::fs::create_dir_all(dir).unwrap();
        let path = dir.join("scenario.toml");
        std::fs::write(&path, ScenarioSpec::rothbach().to_toml_string()).unwrap();
        path
    }

    #[test]
    fn plan_command_reports_the_reference_pipeline() {
        let dir = std::env::temp_dir().join("mc_cmd_plan");
        let _ = std::fs::remove_dir_all(&dir);
        let path = scenario_file(&dir);
        assert_eq!(cmd_plan(&path, None, &[]).unwrap(), EXIT_OK);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn run_naive_exits_with_physical_failure() {
        let dir = std::env::temp_dir().join("mc_cmd_run_naive");
        let _ = std::fs::remove_dir_all(&dir);
        let path = scenario_file(&dir);
        let code = cmd_run(&path, Mode::Naive, &dir.join("out"), None, &[]).unwrap();
        assert_eq!(code, EXIT_PHYSICAL_FAILURE);
        assert!(dir.join("out/trace.csv").exists());
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn auto_and_completed_outputs_are_byte_identical() {
        let dir = std::env::temp_dir().join("mc_cmd_run_modes");
        let _ = std::fs::remove_dir_all(&dir);
        let path = scenario_file(&dir);
        let out_a = dir.join("auto");
        let out_c = dir.join("completed");
        assert_eq!(
            cmd_run(&path, Mode::Auto, &out_a, None, &[]).unwrap(),
            EXIT_OK
        );
        assert_eq!(
            cmd_run(&path, Mode::Completed, &out_c, None, &[]).unwrap(),
            EXIT_OK
        );
        for entry in std::fs::read_dir(&out_a).unwrap() {
            let name = entry.unwrap().file_name();
            let a = std::fs::read(out_a.join(&name)).unwrap();
            let c = std::fs::read(out_c.join(&name)).unwrap();
            assert_eq!(a, c, "file {name:?} differs between auto and completed");
        }
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn sweep_rejects_non_positive_values() {
        let dir = std::env::temp_dir().join("mc_cmd_sweep_bad");
        let _ = std::fs::remove_dir_all(&dir);
        let path = scenario_file(&dir);
        assert!(cmd_sweep(&path, "material.k", &[-1.0], &dir.join("out"), 1, &[]).is_err());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
