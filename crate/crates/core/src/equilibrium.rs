//! Equalizer computation by a dense feasibility LP, gap machinery, and the
//! approximate / well-supported equilibrium predicates.

use crate::game::Strategy;
use crate::graph::VertexSet;
use crate::linalg::Mat;
use crate::{Error, Result};

pub const EQUALIZER_RESIDUAL_TOL: f64 = 1e-8;

/// A strategy whose payoffs are all equal, together with the common payoff.
#[derive(Debug, Clone, serde::Serialize)]
pub struct EqualizerSolution {
    pub strategy: Strategy,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub enum EqualizerOutcome {
    Found(EqualizerSolution),
    Infeasible,
    /// Numerical failure, distinct from proven infeasibility.
    SolverFailure(String),
}

/// Summary of how close a strategy is to a symmetric equilibrium.
#[derive(Debug, Clone, serde::Serialize)]
pub struct EquilibriumReport {
    /// (CX)_max - X.CX, nonnegative up to rounding.
    pub approx_error: f64,
    /// carrier payoff spread (max - min over the carrier).
    pub well_supported_eps: f64,
    pub carrier: VertexSet,
}

pub fn equilibrium_report(c: &Mat, x: &Strategy) -> Result<EquilibriumReport> {
    let payoffs = payoffs(c, x)?;
    let pot: f64 = x.mass().iter().zip(&payoffs).map(|(m, p)| m * p).sum();
    let max = payoffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let carrier_idx = x.carrier();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &i in &carrier_idx {
        lo = lo.min(payoffs[i]);
        hi = hi.max(payoffs[i]);
    }
    Ok(EquilibriumReport {
        approx_error: max - pot,
        well_supported_eps: if carrier_idx.is_empty() { 0.0 } else { hi - lo },
        carrier: VertexSet::new(carrier_idx.iter().map(|&i| i as u32 + 1).collect(), x.dim())?,
    })
}

fn payoffs(c: &Mat, x: &Strategy) -> Result<Vec<f64>> {
    if c.cols() != x.dim() {
        return Err(Error::Dimension {
            expected: c.cols(),
            got: x.dim(),
        });
    }
    Ok(c.matvec(x.mass()))
}

/// Finds X >= 0 with CX = c1 and unit mass, or decides none exists, by a
/// phase-one simplex with Bland's rule on the artificial objective. The matrix
/// is shifted positive first so the common payoff variable is sign-free.
pub fn solve_equalizer(c: &Mat) -> EqualizerOutcome {
    let n = c.cols();
    if n == 0 {
        return EqualizerOutcome::SolverFailure("empty matrix".into());
    }
    let shift = if c.min_entry() <= 0.0 {
        -c.min_entry() + 1.0
    } else {
        0.0
    };
    // rows 0..n: sum_j C'_ij x_j - v = 0; row n: sum_j x_j = 1.
    // variables: x_0..x_{n-1}, v, then one artificial per row.
    let rows = n + 1;
    let structural = n + 1;
    let total = structural + rows;
    let mut t = vec![vec![0.0; total + 1]; rows];
    for i in 0..n {
        for j in 0..n {
            t[i][j] = c.at(i, j) + shift;
        }
        t[i][n] = -1.0;
        t[i][structural + i] = 1.0;
        t[i][total] = 0.0;
    }
    for j in 0..n {
        t[rows - 1][j] = 1.0;
    }
    t[rows - 1][structural + rows - 1] = 1.0;
    t[rows - 1][total] = 1.0;

    let mut basis: Vec<usize> = (structural..total).collect();
    // reduced costs for minimizing the artificial sum
    let mut obj = vec![0.0; total + 1];
    for col in 0..=total {
        let s: f64 = t.iter().map(|row| row[col]).sum();
        obj[col] = -s;
    }
    for col in structural..total {
        obj[col] += 1.0;
    }

    let mut iterations = 0usize;
    let max_iterations = 200 * total.max(8);
    loop {
        iterations += 1;
        if iterations > max_iterations {
            return EqualizerOutcome::SolverFailure("pivot budget exhausted".into());
        }
        // Bland: least-index column with negative reduced cost
        let Some(enter) = (0..total).find(|&j| obj[j] < -1e-11) else {
            break;
        };
        // ratio test, Bland tie-break on the basic variable index
        let mut leave: Option<(usize, f64, usize)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[enter] > 1e-11 {
                let ratio = row[total] / row[enter];
                match leave {
                    None => leave = Some((r, ratio, basis[r])),
                    Some((_, best, bvar)) => {
                        if ratio < best - 1e-12
                            || (ratio <= best + 1e-12 && basis[r] < bvar)
                        {
                            leave = Some((r, ratio, basis[r]));
                        }
                    }
                }
            }
        }
        let Some((lr, _, _)) = leave else {
            return EqualizerOutcome::SolverFailure("unbounded phase-one subproblem".into());
        };
        let piv = t[lr][enter];
        for v in t[lr].iter_mut() {
            *v /= piv;
        }
        let pivot_row = t[lr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == lr || row[enter] == 0.0 {
                continue;
            }
            let f = row[enter];
            for (vi, pv) in row.iter_mut().zip(&pivot_row) {
                *vi -= f * pv;
            }
        }
        let f = obj[enter];
        if f != 0.0 {
            for (vi, pv) in obj.iter_mut().zip(&pivot_row) {
                *vi -= f * pv;
            }
        }
        basis[lr] = enter;
    }

    let artificial_sum = -obj[total];
    if artificial_sum > 1e-9 {
        return EqualizerOutcome::Infeasible;
    }
    let mut x = vec![0.0; n];
    let mut v_shifted = 0.0;
    for (r, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[r][total].max(0.0);
        } else if bv == n {
            v_shifted = t[r][total];
        }
    }
    let strategy = match Strategy::normalized(x) {
        Ok(s) => s,
        Err(e) => return EqualizerOutcome::SolverFailure(format!("degenerate solution: {e}")),
    };
    let value = v_shifted - shift;
    // verify the invariant before handing the solution out
    let resid = c
        .matvec(strategy.mass())
        .iter()
        .map(|p| (p - value).abs())
        .fold(0.0, f64::max);
    if resid > EQUALIZER_RESIDUAL_TOL {
        return EqualizerOutcome::SolverFailure(format!(
            "equalizer residual {resid} above tolerance"
        ));
    }
    EqualizerOutcome::Found(EqualizerSolution { strategy, value })
}

/// Checks that sampled affine combinations of two equalizers remain
/// equalizers; combinations leaving the simplex are excluded.
pub fn equalizer_line_check(
    c: &Mat,
    x1: &EqualizerSolution,
    x2: &EqualizerSolution,
    lambdas: &[f64],
) -> Result<bool> {
    for &lam in lambdas {
        let mass: Vec<f64> = x1
            .strategy
            .mass()
            .iter()
            .zip(x2.strategy.mass())
            .map(|(&a, &b)| (1.0 - lam) * a + lam * b)
            .collect();
        if mass.iter().any(|&m| m < -1e-12) {
            continue; // outside the simplex
        }
        let x = Strategy::normalized(mass.iter().map(|&m| m.max(0.0)).collect())?;
        let p = payoffs(c, &x)?;
        let spread = p.iter().copied().fold(f64::NEG_INFINITY, f64::max)
            - p.iter().copied().fold(f64::INFINITY, f64::min);
        if spread > EQUALIZER_RESIDUAL_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Payoff spread (CX)_max - (CX)_min.
pub fn gap(c: &Mat, x: &Strategy) -> Result<f64> {
    let p = payoffs(c, x)?;
    Ok(p.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - p.iter().copied().fold(f64::INFINITY, f64::min))
}

/// Potential deficit against a caller-supplied maximum (the exact maximum is
/// the hard problem itself, so it arrives from the oracle at desk scale).
pub fn potential_gap(c: &Mat, x: &Strategy, max_potential: f64) -> Result<f64> {
    let p = payoffs(c, x)?;
    let pot: f64 = x.mass().iter().zip(&p).map(|(m, v)| m * v).sum();
    Ok(max_potential - pot)
}

/// Lower bound on the minimum positive potential deficit over subgames:
/// 1/(2(k-1)) - 1/(2k).
pub fn min_gap_lower_bound(k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::Validation(format!("k = {k} must be at least 2")));
    }
    let kf = k as f64;
    Ok(1.0 / (2.0 * (kf - 1.0)) - 1.0 / (2.0 * kf))
}

/// eps-approximate symmetric equilibrium whose carrier payoffs also agree
/// within eps.
pub fn is_well_supported(c: &Mat, x: &Strategy, eps: f64) -> Result<bool> {
    let rep = equilibrium_report(c, x)?;
    Ok(rep.approx_error <= eps + 1e-12 && rep.well_supported_eps <= eps + 1e-12)
}

/// Support-trimming: zero every coordinate whose payoff trails the maximum by
/// more than eps_a, renormalize. Input must be an (eps_a^2/8)-approximate
/// equilibrium; the output is validated by `is_well_supported` in tests rather
/// than trusted.
pub fn well_supported_extract(c: &Mat, x: &Strategy, eps_a: f64) -> Result<Strategy> {
    let rep = equilibrium_report(c, x)?;
    let eps = eps_a * eps_a / 8.0;
    if rep.approx_error > eps + 1e-12 {
        return Err(Error::Validation(format!(
            "input approximation error {} exceeds eps_a^2/8 = {eps}",
            rep.approx_error
        )));
    }
    let p = payoffs(c, x)?;
    let max = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mass: Vec<f64> = x
        .mass()
        .iter()
        .zip(&p)
        .map(|(&m, &pi)| if pi < max - eps_a { 0.0 } else { m })
        .collect();
    Strategy::normalized(mass)
        .map_err(|_| Error::Validation("trimming removed the whole carrier".into()))
}
