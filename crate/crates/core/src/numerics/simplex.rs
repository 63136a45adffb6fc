use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MinResult {
    pub argmin: Vec<f64>,
    pub objective_value: f64,
    pub iterations: usize,
    /// Set only when the final simplex diameter fell below the tolerance.
    pub converged: bool,
}

/// Nelder–Mead minimizer configuration.
///
/// `steps` gives the initial edge length per coordinate; a single entry is
/// broadcast. After a first convergence the search is restarted once from
/// the best vertex with fresh steps, and only reported as converged if the
/// restart converges as well.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex {
    pub steps: Vec<f64>,
    pub tol: f64,
    pub max_iter: usize,
}

impl Simplex {
    pub fn new(step: f64, tol: f64, max_iter: usize) -> Self {
        Simplex {
            steps: vec![step],
            tol,
            max_iter,
        }
    }

    pub fn with_steps(mut self, steps: Vec<f64>) -> Self {
        self.steps = steps;
        self
    }

    pub fn minimize<F>(&self, objective: F, start: &[f64]) -> Result<MinResult>
    where
        F: FnMut(&[f64]) -> f64,
    {
        let mut objective = objective;
        if start.is_empty() {
            return Err(Error::domain("simplex start point is empty"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::domain("simplex tolerance must be positive"));
        }
        if self.steps.is_empty() || self.steps.iter().any(|s| *s == 0.0 || !s.is_finite()) {
            return Err(Error::domain("simplex steps must be finite and nonzero"));
        }
        let f0 = objective(start);
        if !f0.is_finite() {
            return Err(Error::domain("objective is not finite at the start point"));
        }

        let first = self.run(&mut objective, start, f0, self.max_iter);
        if !first.converged {
            return Ok(first);
        }
        let remaining = self.max_iter.saturating_sub(first.iterations);
        let mut second = self.run(&mut objective, &first.argmin, first.objective_value, remaining);
        second.iterations += first.iterations;
        Ok(second)
    }

    fn step(&self, i: usize) -> f64 {
        if self.steps.len() == 1 {
            self.steps[0]
        } else {
            self.steps[i.min(self.steps.len() - 1)]
        }
    }

    fn run<F>(&self, objective: &mut F, start: &[f64], f_start: f64, max_iter: usize) -> MinResult
    where
        F: FnMut(&[f64]) -> f64,
    {
        const REFLECT: f64 = 1.0;
        const EXPAND: f64 = 2.0;
        const CONTRACT: f64 = 0.5;
        const SHRINK: f64 = 0.5;

        let n = start.len();
        let mut eval = |x: &[f64]| {
            let v = objective(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };

        let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        let mut vals: Vec<f64> = Vec::with_capacity(n + 1);
        pts.push(start.to_vec());
        vals.push(f_start);
        for i in 0..n {
            let mut p = start.to_vec();
            p[i] += self.step(i);
            vals.push(eval(&p));
            pts.push(p);
        }

        let mut iterations = 0;
        let mut centroid = vec![0.0; n];
        let mut trial = vec![0.0; n];
        let mut trial2 = vec![0.0; n];
        loop {
            // Order vertices by objective, best first; ties keep insertion order.
            let mut order: Vec<usize> = (0..=n).collect();
            order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
            pts = order.iter().map(|&i| pts[i].clone()).collect();
            vals = order.iter().map(|&i| vals[i]).collect();

            let diameter = pts[1..]
                .iter()
                .flat_map(|p| p.iter().zip(&pts[0]).map(|(a, b)| (a - b).abs()))
                .fold(0.0, f64::max);
            if diameter < self.tol {
                return MinResult {
                    argmin: pts[0].clone(),
                    objective_value: vals[0],
                    iterations,
                    converged: true,
                };
            }
            if iterations >= max_iter {
                return MinResult {
                    argmin: pts[0].clone(),
                    objective_value: vals[0],
                    iterations,
                    converged: false,
                };
            }
            iterations += 1;

            for c in centroid.iter_mut() {
                *c = 0.0;
            }
            for p in &pts[..n] {
                for (c, x) in centroid.iter_mut().zip(p) {
                    *c += x / n as f64;
                }
            }
            let worst = pts[n].clone();
            for i in 0..n {
                trial[i] = centroid[i] + REFLECT * (centroid[i] - worst[i]);
            }
            let fr = eval(&trial);

            if fr < vals[0] {
                for i in 0..n {
                    trial2[i] = centroid[i] + EXPAND * (trial[i] - centroid[i]);
                }
                let fe = eval(&trial2);
                if fe < fr {
                    pts[n].copy_from_slice(&trial2);
                    vals[n] = fe;
                } else {
                    pts[n].copy_from_slice(&trial);
                    vals[n] = fr;
                }
                continue;
            }
            if fr < vals[n - 1] {
                pts[n].copy_from_slice(&trial);
                vals[n] = fr;
                continue;
            }
            // Contraction: outside if the reflection improved on the worst vertex.
            let (base, fbase) = if fr < vals[n] { (&trial, fr) } else { (&worst, vals[n]) };
            for i in 0..n {
                trial2[i] = centroid[i] + CONTRACT * (base[i] - centroid[i]);
            }
            let fc = eval(&trial2);
            if fc < fbase {
                pts[n].copy_from_slice(&trial2);
                vals[n] = fc;
                continue;
            }
            let best = pts[0].clone();
            for j in 1..=n {
                for i in 0..n {
                    pts[j][i] = best[i] + SHRINK * (pts[j][i] - best[i]);
                }
                vals[j] = eval(&pts[j]);
            }
        }
    }
}

pub fn minimize_simplex<F>(
    objective: F,
    start: &[f64],
    step: f64,
    tol: f64,
    max_iter: usize,
) -> Result<MinResult>
where
    F: FnMut(&[f64]) -> f64,
{
    Simplex::new(step, tol, max_iter).minimize(objective, start)
}
