//! The hyperbolic cone of radius `r₀` over a metric space: the comparison
//! function `μ` and the cone distance.
//!
//! Both are evaluated through half-angle forms. From
//! `cosh μ = cosh²r₀ − sinh²r₀ cos θ` and `cosh x − 1 = 2 sinh²(x/2)` one gets
//! `sinh(μ/2) = sinh r₀ · sin(θ/2)`, which has no cancellation near `μ = 0`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeParams {
    r0: f64,
}

impl ConeParams {
    pub fn new(r0: f64) -> Result<ConeParams> {
        if !(r0.is_finite() && r0 > 0.0) {
            return Err(Error::OutOfDomain("r0", r0));
        }
        Ok(ConeParams { r0 })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    /// `π sinh r₀`, the base distance beyond which `μ` is constant.
    pub fn saturation(&self) -> f64 {
        PI * self.r0.sinh()
    }

    fn angle(&self, t: f64) -> f64 {
        (t / self.r0.sinh()).min(PI)
    }
}

/// `μ(t)`, the cone distance between two base points at distance `t`.
pub fn mu(t: f64, p: &ConeParams) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::OutOfDomain("t", t));
    }
    let half = p.angle(t) / 2.0;
    Ok(2.0 * (p.r0.sinh() * half.sin()).asinh())
}

/// Distance between the cone points `(y, r)` and `(y', r')` with `d(y, y') = dy`.
pub fn cone_distance(r: f64, r_prime: f64, dy: f64, p: &ConeParams) -> Result<f64> {
    for (name, x) in [("r", r), ("r'", r_prime)] {
        if !(x >= 0.0 && x <= p.r0) {
            return Err(Error::OutOfDomain(name, x));
        }
    }
    if !(dy >= 0.0) {
        return Err(Error::OutOfDomain("dy", dy));
    }
    // sinh²(d/2) = sinh²((r − r')/2) + sinh r sinh r' sin²(θ/2)
    let half = p.angle(dy) / 2.0;
    let radial = ((r - r_prime) / 2.0).sinh();
    let angular = half.sin();
    let s = (radial * radial + r.sinh() * r_prime.sinh() * angular * angular).sqrt();
    Ok(2.0 * s.asinh())
}

/// Floating slack allowed on top of the stated tolerance, relative to `r₀`.
fn rounding_slack(p: &ConeParams) -> f64 {
    64.0 * f64::EPSILON * (1.0 + 2.0 * p.r0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub max_violation: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyReport {
    pub r0: f64,
    pub grid: usize,
    pub tolerance: f64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r0 = {}, grid = {}, tolerance = {:e}", self.r0, self.grid, self.tolerance)?;
        writeln!(f, "{:<28} {:>14}  result", "property", "max violation")?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<28} {:>14.3e}  {}",
                c.name,
                c.max_violation,
                if c.passed { "pass" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

pub const MU_TOLERANCE: f64 = 1e-9;

/// Evaluates the analytic properties of `μ` on a uniform grid of `grid`
/// points over `[0, 2π sinh r₀]`.
///
/// Pair and triple checks only use sums and midpoints of grid points, so every
/// value comes from one table of `μ` on the doubled grid.
pub fn check_mu_properties(p: &ConeParams, grid: usize) -> PropertyReport {
    let grid = grid.max(2);
    let span = 2.0 * p.saturation();
    let h = span / (grid - 1) as f64;
    let t = |i: usize| i as f64 * h;
    // μ at 0, h, 2h, …, 2(grid − 1)h
    let table: Vec<f64> = (0..2 * grid - 1)
        .map(|i| mu(t(i), p).expect("grid points are non-negative"))
        .collect();
    let tol = MU_TOLERANCE + rounding_slack(p);
    let mut checks = Vec::new();
    let mut push = |name: &'static str, violation: f64| {
        let violation = violation.max(0.0);
        checks.push(PropertyCheck {
            name,
            max_violation: violation,
            passed: violation <= tol,
        });
    };

    let monotone = (0..grid - 1)
        .map(|i| table[i] - table[i + 1])
        .fold(0.0, f64::max);
    push("non-decreasing", monotone);

    // μ((a + b)/2) ≥ (μ(a) + μ(b))/2 for grid points a, b of equal parity
    let mut concave = 0.0f64;
    for i in 0..grid {
        for j in (i..grid).step_by(2) {
            let mid = (i + j) / 2;
            concave = concave.max((table[i] + table[j]) / 2.0 - table[mid]);
        }
    }
    push("concave (midpoint)", concave);

    let mut subadditive = 0.0f64;
    for i in 0..grid {
        for j in i..grid {
            subadditive = subadditive.max(table[i + j] - table[i] - table[j]);
        }
    }
    push("subadditive", subadditive);

    let below_identity = (0..grid).map(|i| table[i] - t(i)).fold(0.0, f64::max);
    push("mu(t) <= t", below_identity);

    let sat = p.saturation();
    let sinh_bound = (0..grid)
        .filter(|&i| t(i) <= sat)
        .map(|i| t(i) - PI * (table[i] / 2.0).sinh())
        .fold(0.0, f64::max);
    push("t <= pi sinh(mu(t)/2)", sinh_bound);

    // μ(r + s) ≤ μ(r + t) + μ(t + s) − μ(t)
    let mut shortening = 0.0f64;
    for r in 0..grid {
        for s in 0..grid {
            let lhs = table[r + s];
            for tt in 0..grid {
                let v = lhs - (table[r + tt] + table[tt + s] - table[tt]);
                if v > shortening {
                    shortening = v;
                }
            }
        }
    }
    push("shortening inequality", shortening);

    PropertyReport {
        r0: p.r0,
        grid,
        tolerance: tol,
        checks,
    }
}
