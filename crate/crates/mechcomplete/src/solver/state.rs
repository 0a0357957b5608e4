//! Field state carried through the staggered time loop.

use serde::{Deserialize, Serialize};

use crate::constitutive::mcc::{FailureMode, FailureVerdict, MccState};
use crate::solver::grid::AxiGrid;

#[derive(Debug, Clone, PartialEq)]
pub struct FieldState {
    /// Scenario clock (s).
    pub t: f64,
    /// Temperature per cell (K).
    pub temperature: Vec<f64>,
    /// Pore pressure per cell (Pa).
    pub u_w: Vec<f64>,
    /// Specimen-level effective-stress point.
    pub stress: MccState,
    /// Sticky failure flag; once non-safe the run halts.
    pub verdict: FailureVerdict,
}

impl FieldState {
    pub fn uniform(grid: &AxiGrid, t0_k: f64, u_w0_pa: f64, stress: MccState) -> Self {
        FieldState {
            t: 0.0,
            temperature: vec![t0_k; grid.n_cells()],
            u_w: vec![u_w0_pa; grid.n_cells()],
            stress,
            verdict: FailureVerdict {
                state: FailureMode::Safe,
                margin: stress.p_eff,
            },
        }
    }

    pub fn u_w_max(&self) -> f64 {
        self.u_w.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn is_safe(&self) -> bool {
        self.verdict.is_safe()
    }
}

/// A field snapshot including the r = R boundary column, ready for plotting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub t_s: f64,
    /// Cell-center radii plus the boundary radius R (m).
    pub r_m: Vec<f64>,
    /// Cell-center heights (m).
    pub z_m: Vec<f64>,
    /// Temperature rows (row-major, nz rows of nr+1 values, K).
    pub temperature_k: Vec<Vec<f64>>,
    /// Pore-pressure rows (row-major, nz rows of nr+1 values, Pa).
    pub u_w_pa: Vec<Vec<f64>>,
}

impl Snapshot {
    /// Builds a snapshot from the current state. The boundary column holds
    /// the applied Dirichlet values on a drained run and mirrors the rim cell
    /// (zero gradient) otherwise.
    pub fn capture(
        state: &FieldState,
        grid: &AxiGrid,
        t_bnd_k: f64,
        u_bnd_pa: Option<f64>,
    ) -> Self {
        let mut r_m: Vec<f64> = (0..grid.nr).map(|i| grid.r_center(i)).collect();
        r_m.push(grid.radius);
        let z_m: Vec<f64> = (0..grid.nz).map(|j| (j as f64 + 0.5) * grid.dz).collect();

        let mut temperature_k = Vec::with_capacity(grid.nz);
        let mut u_w_pa = Vec::with_capacity(grid.nz);
        for j in 0..grid.nz {
            let mut t_row = Vec::with_capacity(grid.nr + 1);
            let mut u_row = Vec::with_capacity(grid.nr + 1);
            for i in 0..grid.nr {
                t_row.push(state.temperature[grid.idx(i, j)]);
                u_row.push(state.u_w[grid.idx(i, j)]);
            }
            t_row.push(t_bnd_k);
            u_row.push(u_bnd_pa.unwrap_or(state.u_w[grid.idx(grid.nr - 1, j)]));
            temperature_k.push(t_row);
            u_w_pa.push(u_row);
        }
        Snapshot {
            t_s: state.t,
            r_m,
            z_m,
            temperature_k,
            u_w_pa,
        }
    }

    /// Mid-height radial profile of a field (including the boundary column).
    pub fn mid_profile<'a>(&'a self, rows: &'a [Vec<f64>]) -> &'a [f64] {
        &rows[self.z_m.len() / 2]
    }
}
