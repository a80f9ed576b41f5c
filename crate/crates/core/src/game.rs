//! The Nisan-Bomze game for a graph and Nisan parameter k: payoff matrices in
//! raw and normalized scale, the derived thresholds, and potential evaluation.
//!
//! Strategy coordinates for the vertex game: coordinate i (0-based) is vertex
//! i+1. The full (n+1)-dimensional game puts the extra strategy at index 0.

use crate::graph::{Graph, VertexSet};
use crate::linalg::Mat;
use crate::{Error, Result};

pub const STRATEGY_SUM_TOL: f64 = 1e-12;

/// A point of the probability simplex.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Strategy(Vec<f64>);

impl Strategy {
    pub fn new(mass: Vec<f64>) -> Result<Self> {
        if mass.is_empty() {
            return Err(Error::Validation("empty strategy".into()));
        }
        if mass.iter().any(|&m| m < 0.0 || !m.is_finite()) {
            return Err(Error::Validation("negative or non-finite mass".into()));
        }
        let sum: f64 = mass.iter().sum();
        if (sum - 1.0).abs() > STRATEGY_SUM_TOL {
            return Err(Error::Validation(format!(
                "strategy mass sums to {sum}, not 1"
            )));
        }
        Ok(Strategy(mass))
    }

    /// Normalizes a nonnegative, not-all-zero vector onto the simplex.
    pub fn normalized(mass: Vec<f64>) -> Result<Self> {
        let sum: f64 = mass.iter().sum();
        if sum <= 0.0 || !sum.is_finite() {
            return Err(Error::Validation("mass must have positive finite sum".into()));
        }
        Strategy::new(mass.into_iter().map(|m| m / sum).collect())
    }

    pub fn uniform(n: usize) -> Self {
        Strategy(vec![1.0 / n as f64; n])
    }

    pub fn pure(i: usize, n: usize) -> Self {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        Strategy(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn mass(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }

    /// 0-based coordinates with strictly positive mass.
    pub fn carrier(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0.0).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.0.iter().filter(|&&m| m > 0.0).count() == 1
    }

    pub fn linf_distance(&self, other: &Strategy) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// The entrywise affine payoff map v -> (v + shift) * scale.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PayoffTransform {
    pub shift: f64,
    pub scale: f64,
}

impl PayoffTransform {
    pub fn apply(&self, v: f64) -> f64 {
        (v + self.shift) * self.scale
    }
}

/// Maps payoffs in [0,1] to [1/4, 1/2] via v -> (v+1)/4. The upper bound 1/2
/// keeps the quadratic-form gradient at most one (the growth transformations
/// require it), and max/min stays at most two.
pub fn normalize_payoffs(raw: &Mat) -> Result<(Mat, PayoffTransform)> {
    if raw.data().iter().any(|&v| !(0.0..=1.0).contains(&v)) {
        return Err(Error::Validation(
            "raw payoff entries must lie in [0,1]".into(),
        ));
    }
    let tf = PayoffTransform {
        shift: 1.0,
        scale: 0.25,
    };
    Ok((raw.map(|v| tf.apply(v)), tf))
}

/// The game built from a graph and Nisan parameter k.
#[derive(Debug, Clone)]
pub struct NisanGame {
    pub graph: Graph,
    pub k: u32,
    /// (n+1)x(n+1) raw payoff matrix including the extra strategy (index 0).
    pub cplus_raw: Mat,
    /// n x n vertex-only submatrix, raw scale (adjacency + I/2).
    pub c_raw: Mat,
    /// n x n vertex-only submatrix, normalized scale; drives all dynamics.
    pub c: Mat,
    /// Threshold C00 = 1 - 1/(2k), both scales.
    pub c00_raw: f64,
    pub c00: f64,
    /// Lower-band threshold, both scales.
    pub c_ell_raw: f64,
    pub c_ell: f64,
    /// Equilibrium approximation tolerances (raw payoff scale).
    pub eps_a: f64,
    pub eps: f64,
    pub transform: PayoffTransform,
    /// max/min entry ratio of the normalized matrix.
    pub payoff_ratio: f64,
}

pub fn build_nisan_game(g: &Graph, k: u32) -> Result<NisanGame> {
    let n = g.n();
    if k < 2 || k as usize > n {
        return Err(Error::Validation(format!(
            "Nisan parameter k = {k} outside 2..={n}"
        )));
    }
    let kf = k as f64;
    let c00_raw = 1.0 - 1.0 / (2.0 * kf);
    let c_ell_raw = 0.5 * ((1.0 - 1.0 / (2.0 * (kf - 1.0))) + (1.0 - 1.0 / (2.0 * kf)));
    let eps_a = 0.5 * (1.0 / (kf - 1.0) - 1.0 / kf);
    let eps = eps_a * eps_a / 8.0;

    let adj = g.adjacency_matrix();
    let cplus_raw = Mat::from_fn(n + 1, n + 1, |i, j| {
        if i == 0 || j == 0 {
            c00_raw
        } else if i == j {
            0.5
        } else {
            adj[(i - 1) * n + (j - 1)]
        }
    });
    let c_raw = Mat::from_fn(n, n, |i, j| if i == j { 0.5 } else { adj[i * n + j] });
    let (c, transform) = normalize_payoffs(&c_raw)?;
    let payoff_ratio = c.max_entry() / c.min_entry();

    Ok(NisanGame {
        graph: g.clone(),
        k,
        cplus_raw,
        c_raw,
        c,
        c00_raw,
        c00: transform.apply(c00_raw),
        c_ell_raw,
        c_ell: transform.apply(c_ell_raw),
        eps_a,
        eps,
        transform,
        payoff_ratio,
    })
}

/// The game potential X . CX.
pub fn potential(c: &Mat, x: &Strategy) -> Result<f64> {
    if c.cols() != x.dim() {
        return Err(Error::Dimension {
            expected: c.cols(),
            got: x.dim(),
        });
    }
    Ok(c.quadform(x.mass()))
}

/// Uniform strategy over the members of a nonempty vertex set.
pub fn characteristic_vector(s: &VertexSet, n: usize) -> Result<Strategy> {
    if s.is_empty() {
        return Err(Error::Validation(
            "characteristic vector of the empty set".into(),
        ));
    }
    let w = 1.0 / s.len() as f64;
    let mut mass = vec![0.0; n];
    for &v in s.members() {
        mass[v as usize - 1] = w;
    }
    Strategy::new(mass)
}
