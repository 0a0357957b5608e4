//! Modified Cam-Clay plasticity in p'-q invariant space: yield surface,
//! exponential volumetric hardening, closest-point return mapping, and the
//! tension/Hvorslev failure envelopes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MccParams {
    /// Critical state slope M.
    pub m: f64,
    /// Normal compression index (lambda).
    pub lambda_c: f64,
    /// Recompression index (kappa).
    pub kappa_c: f64,
    /// Initial void ratio.
    pub e0: f64,
    /// Poisson ratio.
    pub nu: f64,
    /// Initial preconsolidation pressure (Pa).
    pub p_c0: f64,
    /// Slope dq/dp' of the Hvorslev line through the critical-state point.
    /// Must stay <= q0/(M*p_c/2 - ...)-compatible with the tension cutoff so
    /// that a path at constant q reaches p' = 0 before the shear envelope.
    pub hvorslev_slope: f64,
}

impl Default for MccParams {
    fn default() -> Self {
        MccParams {
            m: 1.2,
            lambda_c: 0.15,
            kappa_c: 0.03,
            e0: 0.3,
            nu: 0.3,
            p_c0: 60.0e6,
            hvorslev_slope: 0.70,
        }
    }
}

impl MccParams {
    pub fn validate(&self) -> Result<()> {
        if self.m <= 0.0 {
            return Err(Error::InvalidConfig("M must be positive".into()));
        }
        if !(self.lambda_c > self.kappa_c && self.kappa_c > 0.0) {
            return Err(Error::InvalidConfig(
                "compression indices must satisfy lambda > kappa > 0".into(),
            ));
        }
        if !(0.0 < self.nu && self.nu < 0.5) {
            return Err(Error::InvalidConfig("nu must be in (0, 0.5)".into()));
        }
        if self.p_c0 <= 0.0 {
            return Err(Error::InvalidConfig("p_c0 must be positive".into()));
        }
        if self.hvorslev_slope <= 0.0 {
            return Err(Error::InvalidConfig(
                "hvorslev slope must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Hardening modulus chi = (1 + e0) / (lambda - kappa).
    pub fn hardening_modulus(&self) -> f64 {
        (1.0 + self.e0) / (self.lambda_c - self.kappa_c)
    }
}

/// Effective-stress point with hardening memory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MccState {
    /// Mean effective stress (Pa).
    pub p_eff: f64,
    /// Deviatoric stress (Pa).
    pub q: f64,
    /// Current preconsolidation pressure (Pa).
    pub p_c: f64,
    /// Accumulated plastic volumetric strain.
    pub eps_v_p: f64,
}

/// Yield function f = q^2 + M^2 p' (p' - p_c), in Pa^2.
/// Negative inside the ellipse, zero on it, positive for inadmissible trials.
pub fn yield_function(p_eff: f64, q: f64, p_c: f64, m: f64) -> f64 {
    q * q + m * m * p_eff * (p_eff - p_c)
}

/// Exact exponential integration of the hardening law
/// dp_c / p_c = chi * d_eps_v_p.
pub fn hardening_update(p_c: f64, d_eps_v_p: f64, params: &MccParams) -> f64 {
    p_c * (params.hardening_modulus() * d_eps_v_p).exp()
}

/// State-dependent elastic moduli for the return-map metric:
/// bulk modulus from the recompression line, shear modulus from nu.
pub fn elastic_moduli(p_eff: f64, params: &MccParams) -> (f64, f64) {
    // Floor keeps the metric defined for near-tension trials.
    let p = p_eff.max(1.0e3);
    let k = (1.0 + params.e0) * p / params.kappa_c;
    let g = 1.5 * k * (1.0 - 2.0 * params.nu) / (1.0 + params.nu);
    (k, g)
}

/// Residual tolerance for the yield function at the mapped point:
/// 1 Pa^2 floor, scaled with the f-magnitude (M^2 p_c^2) so it stays just
/// above f64 round-off for large stresses.
pub fn yield_tolerance(p_c: f64, m: f64) -> f64 {
    (1e-14 * m * m * p_c * p_c).max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReturnOutcome {
    /// Trial was admissible; state returned unchanged.
    Elastic,
    /// Plastic projection with volumetric hardening.
    MappedHardening,
    /// Plastic projection with frozen p_c (dilative/dry-side trial).
    MappedFrozen,
    /// Trial mean stress at or below the tension cutoff; state clamped.
    TensileClamped,
}

#[derive(Debug, Clone, Copy)]
pub struct ReturnMapConfig {
    pub max_iter: usize,
}

impl Default for ReturnMapConfig {
    fn default() -> Self {
        ReturnMapConfig { max_iter: 50 }
    }
}

/// Safeguarded Newton (bisection fallback) for a bracketed scalar root.
/// `bracket` must satisfy f(lo) >= 0 >= f(hi) or the reverse.
fn rtsafe(
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    eval: &mut impl FnMut(f64) -> f64,
    tol: f64,
    max_iter: usize,
) -> Option<(f64, f64)> {
    let mut x = 0.5 * (lo + hi);
    let mut fx = eval(x);
    let mut x_prev = lo;
    let mut f_prev = f_lo;
    for _ in 0..max_iter {
        if fx.abs() <= tol {
            return Some((x, fx));
        }
        if (fx > 0.0) == (f_lo > 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        // Secant proposal, bisection fallback.
        let denom = fx - f_prev;
        let mut x_new = if denom.abs() > 0.0 {
            x - fx * (x - x_prev) / denom
        } else {
            f64::NAN
        };
        if !x_new.is_finite() || x_new <= lo.min(hi) || x_new >= lo.max(hi) {
            x_new = 0.5 * (lo + hi);
        }
        x_prev = x;
        f_prev = fx;
        x = x_new;
        fx = eval(x);
    }
    if fx.abs() <= tol {
        Some((x, fx))
    } else {
        None
    }
}

/// Closest-point projection of the trial elastically onto the fixed ellipse
/// f(., ., p_c) = 0. Returns (p, q, plastic multiplier).
#[allow(clippy::too_many_arguments)]
fn project_frozen(
    p_t: f64,
    q_t: f64,
    p_c: f64,
    k: f64,
    g: f64,
    m: f64,
    tol: f64,
    max_iter: usize,
) -> Option<(f64, f64, f64)> {
    let m2 = m * m;
    let state_at = |dgamma: f64| {
        let p = (p_t + k * dgamma * m2 * p_c) / (1.0 + 2.0 * k * dgamma * m2);
        let q = q_t / (1.0 + 6.0 * g * dgamma);
        (p, q)
    };
    let mut eval = |dgamma: f64| {
        let (p, q) = state_at(dgamma);
        yield_function(p, q, p_c, m)
    };
    let f0 = eval(0.0);
    if f0 <= tol {
        return Some((p_t, q_t, 0.0));
    }
    // Expand the upper bracket until f < 0 (limit state p -> p_c/2, q -> 0).
    let mut hi = 1.0 / (6.0 * g);
    let mut f_hi = eval(hi);
    let mut guard = 0;
    while f_hi > 0.0 {
        hi *= 8.0;
        f_hi = eval(hi);
        guard += 1;
        if guard > 200 {
            return None;
        }
    }
    let (dgamma, _) = rtsafe(0.0, hi, f0, &mut eval, tol, max_iter)?;
    let (p, q) = state_at(dgamma);
    Some((p, q, dgamma))
}

/// Return mapping with volumetric hardening: outer unknown is the plastic
/// multiplier, the inner scalar solve recovers the plastic volumetric strain
/// consistent with the flow rule and the exponential hardening law.
#[allow(clippy::too_many_arguments)]
fn project_hardening(
    p_t: f64,
    q_t: f64,
    p_c0: f64,
    k: f64,
    g: f64,
    params: &MccParams,
    tol: f64,
    max_iter: usize,
) -> Option<(f64, f64, f64, f64)> {
    let m = params.m;
    let m2 = m * m;
    let chi = params.hardening_modulus();

    // v - dgamma * M^2 * (2(p_t - K v) - p_c0 e^{chi v}) is strictly
    // increasing in v, so the inner root is unique.
    let inner_v = |dgamma: f64| -> f64 {
        let residual = |v: f64| v - dgamma * m2 * (2.0 * (p_t - k * v) - p_c0 * (chi * v).exp());
        let mut lo = -1.0;
        let mut hi = 1.0;
        let mut guard = 0;
        while residual(lo) > 0.0 {
            lo *= 2.0;
            guard += 1;
            if guard > 100 {
                break;
            }
        }
        guard = 0;
        while residual(hi) < 0.0 {
            hi *= 2.0;
            guard += 1;
            if guard > 100 {
                break;
            }
        }
        // Bisection to high relative precision.
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            if residual(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let state_at = |dgamma: f64| {
        let v = inner_v(dgamma);
        let p = p_t - k * v;
        let p_c = p_c0 * (chi * v).exp();
        let q = q_t / (1.0 + 6.0 * g * dgamma);
        (p, q, p_c, v)
    };
    let mut eval = |dgamma: f64| {
        let (p, q, p_c, _) = state_at(dgamma);
        yield_function(p, q, p_c, m)
    };

    let f0 = eval(0.0);
    if f0 <= tol {
        return Some((p_t, q_t, p_c0, 0.0));
    }
    let mut hi = 1.0 / (6.0 * g);
    let mut f_hi = eval(hi);
    let mut guard = 0;
    while f_hi > 0.0 {
        hi *= 8.0;
        f_hi = eval(hi);
        guard += 1;
        if guard > 200 {
            return None;
        }
    }
    let (dgamma, _) = rtsafe(0.0, hi, f0, &mut eval, tol, max_iter)?;
    let (p, q, p_c, v) = state_at(dgamma);
    Some((p, q, p_c, v))
}

/// Maps an inadmissible trial state back onto the yield surface.
///
/// Elastic trials return unchanged. Plastic trials are projected in the
/// elastic norm onto the updated surface; compactive flow hardens p_c via
/// the exponential law, dilative (dry-side) flow projects with p_c frozen so
/// the preconsolidation pressure never decreases. Trials at or beyond the
/// tension cutoff clamp to the surface apex with the outcome recorded.
pub fn return_map(
    trial: MccState,
    params: &MccParams,
    cfg: &ReturnMapConfig,
) -> Result<(MccState, ReturnOutcome)> {
    debug_assert!(trial.p_c > 0.0);
    let tol = yield_tolerance(trial.p_c, params.m);
    let f_trial = yield_function(trial.p_eff, trial.q, trial.p_c, params.m);
    if f_trial <= tol {
        return Ok((trial, ReturnOutcome::Elastic));
    }
    if trial.p_eff <= 0.0 {
        let clamped = MccState {
            p_eff: 0.0,
            q: 0.0,
            p_c: trial.p_c,
            eps_v_p: trial.eps_v_p,
        };
        return Ok((clamped, ReturnOutcome::TensileClamped));
    }

    let (k, g) = elastic_moduli(trial.p_eff, params);
    let no_conv = |residual: f64| Error::NoConvergence {
        iterations: cfg.max_iter,
        residual,
    };

    // Frozen projection decides which side of the surface the trial maps to.
    let (p_f, q_f, dg_f) = project_frozen(
        trial.p_eff,
        trial.q,
        trial.p_c,
        k,
        g,
        params.m,
        tol,
        cfg.max_iter,
    )
    .ok_or_else(|| no_conv(f_trial))?;

    if 2.0 * p_f - trial.p_c > 0.0 {
        // Compactive flow: harden.
        let (p, q, p_c, v) = project_hardening(
            trial.p_eff,
            trial.q,
            trial.p_c,
            k,
            g,
            params,
            tol,
            cfg.max_iter,
        )
        .ok_or_else(|| no_conv(f_trial))?;
        if v >= 0.0 {
            let state = MccState {
                p_eff: p.max(0.0),
                q,
                p_c,
                eps_v_p: trial.eps_v_p + v,
            };
            return Ok((state, ReturnOutcome::MappedHardening));
        }
        // Hardening solve landed dilative; fall through to the frozen result.
    }

    let v = dg_f * params.m * params.m * (2.0 * p_f - trial.p_c);
    let state = MccState {
        p_eff: p_f.max(0.0),
        q: q_f,
        p_c: trial.p_c,
        eps_v_p: trial.eps_v_p + v,
    };
    Ok((state, ReturnOutcome::MappedFrozen))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureMode {
    Safe,
    TensileFailure,
    ShearFailure,
}

impl std::fmt::Display for FailureMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FailureMode::Safe => "safe",
            FailureMode::TensileFailure => "tensile_failure",
            FailureMode::ShearFailure => "shear_failure",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FailureVerdict {
    pub state: FailureMode,
    /// Distance to the nearest envelope along the p' axis (Pa); negative or
    /// zero once an envelope is crossed.
    pub margin: f64,
}

impl FailureVerdict {
    pub fn is_safe(&self) -> bool {
        self.state == FailureMode::Safe
    }
}

/// Shear strength of the Hvorslev line at mean stress `p_eff`: the straight
/// line through the critical-state point (p_c/2, M p_c/2).
pub fn hvorslev_q(p_eff: f64, p_c: f64, params: &MccParams) -> f64 {
    params.m * p_c / 2.0 + params.hvorslev_slope * (p_eff - p_c / 2.0)
}

/// Failure envelopes: tension cutoff at p' = 0, Hvorslev line on the dry side.
pub fn failure_check(p_eff: f64, q: f64, p_c: f64, params: &MccParams) -> FailureVerdict {
    if p_eff <= 0.0 {
        return FailureVerdict {
            state: FailureMode::TensileFailure,
            margin: p_eff,
        };
    }
    if p_eff < p_c / 2.0 {
        // p' at which the Hvorslev line drops to the current q.
        let p_cross = p_c / 2.0 + (q - params.m * p_c / 2.0) / params.hvorslev_slope;
        if q >= hvorslev_q(p_eff, p_c, params) {
            return FailureVerdict {
                state: FailureMode::ShearFailure,
                margin: p_eff - p_cross,
            };
        }
        let margin = if p_cross > 0.0 {
            (p_eff - p_cross).min(p_eff)
        } else {
            p_eff
        };
        return FailureVerdict {
            state: FailureMode::Safe,
            margin,
        };
    }
    FailureVerdict {
        state: FailureMode::Safe,
        margin: p_eff,
    }
}
