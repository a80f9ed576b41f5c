//! The core maps: Hedge (exponential weights), the discrete-time replicator,
//! and the finite-power approximants that interpolate between them, plus
//! fixed-point detection and small-instance fixed-point enumeration.

use crate::game::Strategy;
use crate::graph::VertexSet;
use crate::linalg::{self, Mat};
use crate::{Error, Result};

pub const FIXED_POINT_TOL: f64 = 1e-9;
pub const ENUM_CONDITION_LIMIT: f64 = 1e12;

/// Positive step size for the exponential-weights map.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LearningRate(f64);

impl LearningRate {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha.is_finite() {
            Ok(LearningRate(alpha))
        } else {
            Err(Error::Validation(format!("learning rate {alpha} must be positive")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Exponentially reweights mass by payoff: X(i) exp(alpha (CX)_i), normalized.
/// The max payoff is subtracted in the exponent before exponentiation; the map
/// is invariant under that shift, and it prevents overflow. The carrier is
/// preserved exactly.
pub fn hedge_step(c: &Mat, x: &Strategy, alpha: LearningRate) -> Result<Strategy> {
    let payoffs = payoff_vector(c, x)?;
    Ok(hedge_with_payoffs(x, &payoffs, alpha.get()))
}

/// Hedge driven by an externally supplied payoff vector (the exponent uses
/// this vector verbatim). Shared by the guarded dynamics and trace replay.
pub fn hedge_with_payoffs(x: &Strategy, payoffs: &[f64], alpha: f64) -> Strategy {
    let top = payoffs
        .iter()
        .zip(x.mass())
        .filter(|(_, &m)| m > 0.0)
        .map(|(&p, _)| p)
        .fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = x
        .mass()
        .iter()
        .zip(payoffs)
        .map(|(&m, &p)| if m > 0.0 { m * f64::exp(alpha * (p - top)) } else { 0.0 })
        .collect();
    let sum: f64 = weights.iter().sum();
    Strategy::new(weights.into_iter().map(|w| w / sum).collect())
        .expect("hedge output is a strategy")
}

/// Linear reweighting X(i)(CX)_i / (X.CX); requires a strictly positive
/// payoff matrix.
pub fn replicator_step(c: &Mat, x: &Strategy) -> Result<Strategy> {
    if c.min_entry() <= 0.0 {
        return Err(Error::Validation(
            "replicator step requires a strictly positive payoff matrix".into(),
        ));
    }
    let payoffs = payoff_vector(c, x)?;
    let pot: f64 = x.mass().iter().zip(&payoffs).map(|(m, p)| m * p).sum();
    let mass: Vec<f64> = x
        .mass()
        .iter()
        .zip(&payoffs)
        .map(|(&m, &p)| m * p / pot)
        .collect();
    Strategy::new(mass.clone()).or_else(|_| Strategy::normalized(mass))
}

/// The degree-k approximant: multiplier (1 + alpha (CX)_i / k)^k, normalized.
/// Requires payoffs scaled so the quadratic-form gradient 2(CX)_i stays at
/// most one; converges pointwise to `hedge_step` as k grows.
pub fn finite_k_step(c: &Mat, x: &Strategy, alpha: LearningRate, k: u64) -> Result<Strategy> {
    if k == 0 {
        return Err(Error::Validation("k must be a positive integer".into()));
    }
    let payoffs = payoff_vector(c, x)?;
    let max_p = payoffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if 2.0 * max_p > 1.0 + 1e-9 {
        return Err(Error::Validation(format!(
            "payoff scale violates the growth assumption: 2 max (CX)_i = {}",
            2.0 * max_p
        )));
    }
    let a = alpha.get();
    let kf = k as f64;
    let weights: Vec<f64> = x
        .mass()
        .iter()
        .zip(&payoffs)
        .map(|(&m, &p)| m * (1.0 + a * p / kf).powf(kf))
        .collect();
    let sum: f64 = weights.iter().sum();
    Strategy::new(weights.into_iter().map(|w| w / sum).collect())
}

fn payoff_vector(c: &Mat, x: &Strategy) -> Result<Vec<f64>> {
    if c.cols() != x.dim() {
        return Err(Error::Dimension {
            expected: c.cols(),
            got: x.dim(),
        });
    }
    Ok(c.matvec(x.mass()))
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct FixedPointReport {
    pub is_fixed: bool,
    /// 1-indexed carrier, matching vertex numbering in the vertex game.
    pub carrier: VertexSet,
    /// max - min of (CX)_i over the carrier.
    pub payoff_spread: f64,
}

/// A strategy is fixed under Hedge (equivalently the replicator and every
/// finite-power approximant) iff it is pure or its carrier payoffs agree.
pub fn detect_fixed_point(c: &Mat, x: &Strategy, tol: f64) -> Result<FixedPointReport> {
    let payoffs = payoff_vector(c, x)?;
    let carrier_idx = x.carrier();
    let carrier = VertexSet::new(
        carrier_idx.iter().map(|&i| i as u32 + 1).collect(),
        x.dim(),
    )?;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &i in &carrier_idx {
        lo = lo.min(payoffs[i]);
        hi = hi.max(payoffs[i]);
    }
    let spread = if carrier_idx.is_empty() { 0.0 } else { hi - lo };
    Ok(FixedPointReport {
        is_fixed: x.is_pure() || spread <= tol,
        carrier,
        payoff_spread: spread,
    })
}

/// Fixed points found by support enumeration, with supports whose equalizing
/// system was too ill-conditioned to trust listed separately.
#[derive(Debug, Clone)]
pub struct FixedPointEnumeration {
    pub points: Vec<Strategy>,
    pub degenerate_supports: Vec<Vec<usize>>,
}

/// Enumerates every fixed point of the replicator on an n-strategy game by
/// solving, for each nonempty support S, the linear system equalizing carrier
/// payoffs with unit total mass, keeping solutions that are nonnegative with
/// support exactly S.
pub fn enumerate_replicator_fixed_points(c: &Mat, n_cap: usize) -> Result<FixedPointEnumeration> {
    let n = c.cols();
    if n > n_cap {
        return Err(Error::Validation(format!(
            "support enumeration capped at n = {n_cap}, got {n}"
        )));
    }
    let mut points: Vec<Strategy> = Vec::new();
    let mut degenerate: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let support: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let s = support.len();
        if s == 1 {
            points.push(Strategy::pure(support[0], n));
            continue;
        }
        // unknowns: masses on the support plus the common payoff value
        let mut a = Mat::zeros(s + 1, s + 1);
        let mut b = vec![0.0; s + 1];
        for (row, &i) in support.iter().enumerate() {
            for (col, &j) in support.iter().enumerate() {
                a.set(row, col, c.at(i, j));
            }
            a.set(row, s, -1.0);
        }
        for col in 0..s {
            a.set(s, col, 1.0);
        }
        b[s] = 1.0;
        let sol = match linalg::solve(&a, &b) {
            Ok(sol) => sol,
            Err(_) => {
                degenerate.push(support);
                continue;
            }
        };
        match linalg::condition_inf(&a) {
            Ok(kappa) if kappa <= ENUM_CONDITION_LIMIT => {}
            _ => {
                degenerate.push(support);
                continue;
            }
        }
        if sol[..s].iter().any(|&m| m <= 1e-10) {
            continue; // support not exact (or infeasible sign)
        }
        let mut mass = vec![0.0; n];
        for (idx, &i) in support.iter().enumerate() {
            mass[i] = sol[idx];
        }
        if let Ok(x) = Strategy::normalized(mass) {
            points.push(x);
        }
    }
    // Distinct supports give distinct points, but guard against numerical
    // duplicates anyway.
    points.dedup_by(|a, b| a.linf_distance(b) < 1e-9);
    Ok(FixedPointEnumeration {
        points,
        degenerate_supports: degenerate,
    })
}
