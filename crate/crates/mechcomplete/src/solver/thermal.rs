//! Explicit FTCS step of the axisymmetric heat equation with automatic
//! sub-stepping to honor the stability bound.

use crate::solver::grid::AxiGrid;

/// Number of sub-steps needed so that
/// alpha * dt_sub * (1/dr^2 + 1/dz^2) <= 0.25.
pub fn substeps_for(alpha_th: f64, dt: f64, grid: &AxiGrid) -> usize {
    let number = alpha_th * dt * (1.0 / (grid.dr * grid.dr) + 1.0 / (grid.dz * grid.dz));
    (number / 0.25).ceil().max(1.0) as usize
}

/// Advances the temperature field by `dt`, splitting into stable sub-steps.
///
/// Boundaries: Dirichlet `t_bnd(time)` at the r = R face, symmetry at the
/// axis, insulated at both z ends. `t_now` is the clock at the start of the
/// step; the boundary value is evaluated at each sub-step's end time.
pub fn thermal_step(
    temperature: &mut Vec<f64>,
    grid: &AxiGrid,
    dt: f64,
    alpha_th: f64,
    t_now: f64,
    t_bnd: &dyn Fn(f64) -> f64,
) {
    let n_sub = substeps_for(alpha_th, dt, grid);
    let dt_sub = dt / n_sub as f64;
    let mut scratch = temperature.clone();

    for sub in 0..n_sub {
        let time = t_now + (sub as f64 + 1.0) * dt_sub;
        let bnd = t_bnd(time);
        let (nr, nz) = (grid.nr, grid.nz);
        let (dr, dz) = (grid.dr, grid.dz);
        for j in 0..nz {
            for i in 0..nr {
                let c = grid.idx(i, j);
                let t_c = temperature[c];
                let r_c = grid.r_center(i);

                // Conservative radial fluxes: face areas scale with radius,
                // the axis face has zero area, the rim face sits dr/2 from
                // the last cell center.
                let flux_e = if i + 1 < nr {
                    grid.r_face(i + 1) * (temperature[grid.idx(i + 1, j)] - t_c) / dr
                } else {
                    grid.radius * (bnd - t_c) / (0.5 * dr)
                };
                let flux_w = if i > 0 {
                    grid.r_face(i) * (t_c - temperature[grid.idx(i - 1, j)]) / dr
                } else {
                    0.0
                };
                let lap_r = (flux_e - flux_w) / (r_c * dr);

                let flux_n = if j + 1 < nz {
                    (temperature[grid.idx(i, j + 1)] - t_c) / dz
                } else {
                    0.0
                };
                let flux_s = if j > 0 {
                    (t_c - temperature[grid.idx(i, j - 1)]) / dz
                } else {
                    0.0
                };
                let lap_z = (flux_n - flux_s) / dz;

                scratch[c] = t_c + alpha_th * dt_sub * (lap_r + lap_z);
            }
        }
        std::mem::swap(temperature, &mut scratch);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> AxiGrid {
        AxiGrid::new(25, 50, 0.025, 0.050)
    }

    #[test]
    fn default_setup_needs_four_substeps() {
        // alpha dt (1/dr^2 + 1/dz^2) = 1e-6 * 0.5 * 2e6 = 1.0 -> 4 sub-steps.
        assert_eq!(substeps_for(1.0e-6, 0.5, &grid()), 4);
    }

    #[test]
    fn uniform_field_at_boundary_temperature_is_stationary() {
        let g = grid();
        let mut temp = vec![300.0; g.n_cells()];
        thermal_step(&mut temp, &g, 0.5, 1.0e-6, 0.0, &|_| 300.0);
        for v in &temp {
            assert!((v - 300.0).abs() < 1e-12);
        }
    }

    #[test]
    fn maximum_principle_under_step_heating() {
        let g = grid();
        let t0 = 298.15;
        let bnd = 350.0;
        let mut temp = vec![t0; g.n_cells()];
        for step in 0..200 {
            thermal_step(&mut temp, &g, 0.5, 1.0e-6, step as f64 * 0.5, &|_| bnd);
            for v in &temp {
                assert!(*v >= t0 - 1e-9 && *v <= bnd + 1e-9);
            }
        }
        // Heat must actually enter the domain.
        assert!(temp[g.idx(g.nr - 1, 25)] > t0 + 1.0);
    }

    #[test]
    fn ramp_heating_gives_rim_hotter_than_core() {
        let g = grid();
        let t0 = 298.15;
        let mut temp = vec![t0; g.n_cells()];
        let rate = 1.0;
        let dt = 0.5;
        let steps = 350; // 175 s
        for step in 0..steps {
            let t_now = step as f64 * dt;
            thermal_step(&mut temp, &g, dt, 1.0e-6, t_now, &|t| {
                t0 + rate * t.min(175.0)
            });
        }
        let j = 25;
        // Radially monotone non-decreasing profile, strictly hotter rim.
        for i in 0..g.nr - 1 {
            assert!(temp[g.idx(i + 1, j)] >= temp[g.idx(i, j)] - 1e-9);
        }
        assert!(temp[g.idx(g.nr - 1, j)] - temp[g.idx(0, j)] > 50.0);
        // The rim cell tracks the 175 K boundary rise closely.
        assert!(temp[g.idx(g.nr - 1, j)] > t0 + 165.0);
    }

    #[test]
    fn axial_cosine_mode_decays_at_the_discrete_rate() {
        // cos(pi z_j / H) on cell centers is an exact eigenvector of the
        // no-flux axial stencil; with a huge radius the rim coupling is
        // negligible and each sub-step scales the amplitude by
        // (1 - alpha dt_sub mu), mu = (2/dz^2)(1 - cos(pi dz / H)).
        let g = AxiGrid::new(1, 50, 1.0e3, 0.050);
        let t0 = 300.0;
        let amp = 10.0;
        let mut temp: Vec<f64> = (0..g.nz)
            .map(|j| {
                let z = (j as f64 + 0.5) * g.dz;
                t0 + amp * (std::f64::consts::PI * z / g.height).cos()
            })
            .collect();

        let alpha = 1.0e-6;
        let dt = 0.5;
        let n_sub = substeps_for(alpha, dt, &g);
        let dt_sub = dt / n_sub as f64;
        let mu = 2.0 / (g.dz * g.dz) * (1.0 - (std::f64::consts::PI * g.dz / g.height).cos());
        let steps = 40;
        let factor = (1.0 - alpha * dt_sub * mu).powi((n_sub * steps) as i32);

        for step in 0..steps {
            thermal_step(&mut temp, &g, dt, alpha, step as f64 * dt, &|_| t0);
        }
        let measured = (temp[0] - t0) / (std::f64::consts::PI * 0.5 * g.dz / g.height).cos();
        assert!(
            (measured - amp * factor).abs() / (amp * factor) < 1e-9,
            "measured {measured}, expected {}",
            amp * factor
        );
    }

    #[test]
    fn z_uniform_fields_stay_z_uniform() {
        let g = grid();
        let mut temp = vec![298.15; g.n_cells()];
        for step in 0..50 {
            thermal_step(&mut temp, &g, 0.5, 1.0e-6, step as f64 * 0.5, &|t| {
                298.15 + t
            });
        }
        for i in 0..g.nr {
            let v0 = temp[g.idx(i, 0)];
            for j in 1..g.nz {
                assert!((temp[g.idx(i, j)] - v0).abs() < 1e-10);
            }
        }
    }
}
