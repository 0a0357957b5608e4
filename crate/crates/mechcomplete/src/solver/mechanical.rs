//! Mechanical step: effective-stress update from constant totals, return
//! mapping, and the failure checks on both the specimen-level state and the
//! worst (highest-pressure) cell.

use crate::constitutive::mcc::{
    failure_check, return_map, FailureVerdict, MccParams, MccState, ReturnMapConfig, ReturnOutcome,
};
use crate::error::Result;

pub struct MechanicalUpdate {
    pub stress: MccState,
    pub verdict: FailureVerdict,
    pub outcome: ReturnOutcome,
}

/// Builds the trial state from the mean pore pressure under constant total
/// stresses, return-maps it, and evaluates failure on the mapped state and on
/// the per-cell worst case (maximum pore pressure).
pub fn mechanical_step(
    previous: &MccState,
    p_total: f64,
    q_total: f64,
    u_w_mean: f64,
    u_w_max: f64,
    params: &MccParams,
    cfg: &ReturnMapConfig,
) -> Result<MechanicalUpdate> {
    let trial = MccState {
        p_eff: p_total - u_w_mean,
        q: q_total,
        p_c: previous.p_c,
        eps_v_p: previous.eps_v_p,
    };
    let (stress, outcome) = return_map(trial, params, cfg)?;

    let specimen = failure_check(stress.p_eff, stress.q, stress.p_c, params);
    let worst_cell = failure_check(p_total - u_w_max, q_total, stress.p_c, params);
    let verdict = if !specimen.is_safe() {
        specimen
    } else if !worst_cell.is_safe() {
        worst_cell
    } else {
        FailureVerdict {
            state: specimen.state,
            margin: specimen.margin.min(worst_cell.margin),
        }
    };

    Ok(MechanicalUpdate {
        stress,
        verdict,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constitutive::mcc::FailureMode;

    const MPA: f64 = 1.0e6;

    fn initial() -> MccState {
        MccState {
            p_eff: 46.0 * MPA,
            q: 15.0 * MPA,
            p_c: 60.0 * MPA,
            eps_v_p: 0.0,
        }
    }

    #[test]
    fn uniform_low_pressure_reproduces_initial_invariants() {
        let params = MccParams::default();
        let up = mechanical_step(
            &initial(),
            50.0 * MPA,
            15.0 * MPA,
            4.0 * MPA,
            4.0 * MPA,
            &params,
            &ReturnMapConfig::default(),
        )
        .unwrap();
        assert_eq!(up.stress.p_eff, 46.0 * MPA);
        assert_eq!(up.stress.q, 15.0 * MPA);
        assert_eq!(up.outcome, ReturnOutcome::Elastic);
        assert_eq!(up.verdict.state, FailureMode::Safe);
    }

    #[test]
    fn paper_endpoint_pressure_is_safe() {
        let params = MccParams::default();
        let up = mechanical_step(
            &initial(),
            50.0 * MPA,
            15.0 * MPA,
            41.1 * MPA,
            41.1 * MPA,
            &params,
            &ReturnMapConfig::default(),
        )
        .unwrap();
        assert!((up.stress.p_eff - 8.9 * MPA).abs() < 1.0);
        assert_eq!(up.verdict.state, FailureMode::Safe);
    }

    #[test]
    fn worst_cell_at_50_mpa_trips_tensile_failure() {
        let params = MccParams::default();
        let up = mechanical_step(
            &initial(),
            50.0 * MPA,
            15.0 * MPA,
            12.0 * MPA,
            50.0 * MPA,
            &params,
            &ReturnMapConfig::default(),
        )
        .unwrap();
        assert_eq!(up.verdict.state, FailureMode::TensileFailure);
        // The mean-based state itself is still elastic and safe.
        assert!(up.stress.p_eff > 0.0);
    }
}
