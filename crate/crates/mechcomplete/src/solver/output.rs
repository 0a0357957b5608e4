//! File outputs: trace CSV, per-field snapshot grids, and the run MANIFEST.
//! All formats are fixed-width enough to be byte-reproducible.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::solver::runner::RunResult;
use crate::solver::state::Snapshot;

const KELVIN_OFFSET: f64 = 273.15;

/// Renders the trace as CSV with the fixed unit-carrying header.
pub fn trace_csv(result: &RunResult) -> String {
    let mut out = String::new();
    out.push_str("t_s,p_eff_MPa,q_MPa,uw_mean_MPa,uw_max_MPa,T_center_C,T_rim_C,verdict\n");
    for row in &result.trace {
        let _ = writeln!(
            out,
            "{:.3},{:.6},{:.6},{:.6},{:.6},{:.4},{:.4},{}",
            row.t_s,
            row.p_eff_pa / 1e6,
            row.q_pa / 1e6,
            row.uw_mean_pa / 1e6,
            row.uw_max_pa / 1e6,
            row.t_center_k - KELVIN_OFFSET,
            row.t_rim_k - KELVIN_OFFSET,
            row.verdict,
        );
    }
    out
}

fn grid_file(
    snapshot: &Snapshot,
    field: &str,
    rows: &[Vec<f64>],
    scale: impl Fn(f64) -> f64,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# t_s {:.3}", snapshot.t_s);
    let _ = writeln!(out, "# field {field}");
    out.push_str("# r_m");
    for r in &snapshot.r_m {
        let _ = write!(out, " {r:.6}");
    }
    out.push('\n');
    out.push_str("# z_m");
    for z in &snapshot.z_m {
        let _ = write!(out, " {z:.6}");
    }
    out.push('\n');
    for row in rows {
        let mut first = true;
        for v in row {
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{:.6}", scale(*v));
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Temperature snapshot grid in Celsius.
pub fn snapshot_temperature_file(snapshot: &Snapshot) -> String {
    grid_file(snapshot, "T_C", &snapshot.temperature_k, |v| {
        v - KELVIN_OFFSET
    })
}

/// Pore-pressure snapshot grid in MPa.
pub fn snapshot_pressure_file(snapshot: &Snapshot) -> String {
    grid_file(snapshot, "uw_MPa", &snapshot.u_w_pa, |v| v / 1e6)
}

/// Writes trace, snapshots and MANIFEST.txt into `dir`; returns the files
/// written (sorted, relative names as listed in the manifest).
pub fn write_run_outputs(dir: &Path, result: &RunResult) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut names: Vec<String> = Vec::new();

    let trace_name = "trace.csv".to_string();
    fs::write(dir.join(&trace_name), trace_csv(result))?;
    names.push(trace_name);

    for snapshot in &result.snapshots {
        let t_name = format!("snapshot_T_C_t{:.3}s.txt", snapshot.t_s);
        fs::write(dir.join(&t_name), snapshot_temperature_file(snapshot))?;
        names.push(t_name);
        let u_name = format!("snapshot_uw_MPa_t{:.3}s.txt", snapshot.t_s);
        fs::write(dir.join(&u_name), snapshot_pressure_file(snapshot))?;
        names.push(u_name);
    }

    names.sort();
    let mut manifest = String::new();
    for name in &names {
        let bytes = fs::metadata(dir.join(name))?.len();
        let _ = writeln!(manifest, "{name}\t{bytes}");
    }
    fs::write(dir.join("MANIFEST.txt"), manifest)?;
    names.push("MANIFEST.txt".to_string());
    names.sort();

    Ok(names.into_iter().map(PathBuf::from).collect())
}
