//! Dense two-phase simplex for small linear programs with free variables.
//!
//! Minimizes c'x subject to inequality rows a'x <= b and equality rows
//! e'x = f, with every component of x free. Free variables are split into
//! nonnegative pairs internally. Entering variables follow Dantzig's rule
//! with a deterministic fallback to Bland's rule, so results are
//! reproducible and cycling terminates.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct LpProblem {
    pub num_vars: usize,
    /// Objective coefficients, length num_vars.
    pub objective: Vec<f64>,
    /// (coefficients, rhs) rows meaning a'x <= b.
    pub ineqs: Vec<(Vec<f64>, f64)>,
    /// (coefficients, rhs) rows meaning e'x = f.
    pub eqs: Vec<(Vec<f64>, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

const PIVOT_TOL: f64 = 1e-11;
const COST_TOL: f64 = 1e-10;

struct Tableau {
    m: usize,
    ncols: usize, // structural + slack + artificial
    a: Vec<f64>,  // m x (ncols + 1), last column is rhs
    basis: Vec<usize>,
    cost: Vec<f64>, // reduced cost row, length ncols + 1 (last = -objective value)
}

impl Tableau {
    #[inline]
    fn at(&self, r: usize, c: usize) -> f64 {
        self.a[r * (self.ncols + 1) + c]
    }

    #[inline]
    fn at_mut(&mut self, r: usize, c: usize) -> &mut f64 {
        &mut self.a[r * (self.ncols + 1) + c]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.ncols + 1;
        let p = self.a[row * w + col];
        for c in 0..w {
            self.a[row * w + c] /= p;
        }
        for r in 0..self.m {
            if r != row {
                let f = self.a[r * w + col];
                if f != 0.0 {
                    for c in 0..w {
                        self.a[r * w + c] -= f * self.a[row * w + c];
                    }
                    self.a[r * w + col] = 0.0;
                }
            }
        }
        let f = self.cost[col];
        if f != 0.0 {
            for c in 0..w {
                self.cost[c] -= f * self.a[row * w + c];
            }
            self.cost[col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Run the simplex loop on the current cost row. `allowed` masks the
    /// columns permitted to enter. Returns false when unbounded.
    fn optimize(&mut self, allowed: &[bool]) -> bool {
        let mut iters = 0usize;
        let bland_after = 50 * (self.m + self.ncols) + 1000;
        loop {
            iters += 1;
            let use_bland = iters > bland_after;
            // entering column
            let mut enter: Option<usize> = None;
            if use_bland {
                for c in 0..self.ncols {
                    if allowed[c] && self.cost[c] < -COST_TOL {
                        enter = Some(c);
                        break;
                    }
                }
            } else {
                let mut best = -COST_TOL;
                for c in 0..self.ncols {
                    if allowed[c] && self.cost[c] < best {
                        best = self.cost[c];
                        enter = Some(c);
                    }
                }
            }
            let Some(e) = enter else { return true };
            // ratio test; ties resolved by smallest basis index (Bland)
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.m {
                let v = self.at(r, e);
                if v > PIVOT_TOL {
                    let ratio = self.at(r, self.ncols) / v;
                    match leave {
                        None => leave = Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio < lratio - 1e-12
                                || ((ratio - lratio).abs() <= 1e-12
                                    && self.basis[r] < self.basis[lr])
                            {
                                leave = Some((r, ratio));
                            }
                        }
                    }
                }
            }
            let Some((row, _)) = leave else { return false };
            self.pivot(row, e);
        }
    }
}

/// Solve the LP. Errors only on malformed input (dimension mismatch).
pub fn solve(p: &LpProblem) -> Result<LpOutcome> {
    let nv = p.num_vars;
    if p.objective.len() != nv {
        return Err(Error::invalid("objective length mismatch"));
    }
    for (row, _) in p.ineqs.iter().chain(&p.eqs) {
        if row.len() != nv {
            return Err(Error::invalid("constraint length mismatch"));
        }
    }
    let m = p.ineqs.len() + p.eqs.len();
    let n_split = 2 * nv;
    let n_slack = p.ineqs.len();

    // assemble rows as (split coefficients, slack sign, rhs, is_eq)
    let mut rows: Vec<(Vec<f64>, f64, f64, bool)> = Vec::with_capacity(m);
    for (a, b) in &p.ineqs {
        rows.push((a.clone(), 1.0, *b, false));
    }
    for (e, f) in &p.eqs {
        rows.push((e.clone(), 0.0, *f, true));
    }

    // artificial variables: one per row whose canonical basis column is
    // unavailable (negative rhs after flip, or equality row)
    let mut needs_art: Vec<bool> = Vec::with_capacity(m);
    for (_, _, b, is_eq) in &rows {
        needs_art.push(*is_eq || *b < 0.0);
    }
    let n_art: usize = needs_art.iter().filter(|&&x| x).count();
    let ncols = n_split + n_slack + n_art;

    let mut t = Tableau {
        m,
        ncols,
        a: vec![0.0; m * (ncols + 1)],
        basis: vec![0; m],
        cost: vec![0.0; ncols + 1],
    };

    let mut art_idx = n_split + n_slack;
    for (r, (coef, slack_sign, b, _is_eq)) in rows.iter().enumerate() {
        let flip = if *b < 0.0 { -1.0 } else { 1.0 };
        for (j, &c) in coef.iter().enumerate() {
            *t.at_mut(r, j) = flip * c;
            *t.at_mut(r, nv + j) = -flip * c;
        }
        if *slack_sign != 0.0 {
            // inequality rows come first, so row index == slack index
            *t.at_mut(r, n_split + r) = flip * slack_sign;
        }
        *t.at_mut(r, ncols) = flip * b;
        if needs_art[r] {
            *t.at_mut(r, art_idx) = 1.0;
            t.basis[r] = art_idx;
            art_idx += 1;
        } else {
            t.basis[r] = n_split + r; // slack column with +1 coefficient
        }
    }

    // phase 1: minimize the sum of artificials
    if n_art > 0 {
        for c in 0..=ncols {
            t.cost[c] = 0.0;
        }
        for c in (n_split + n_slack)..ncols {
            t.cost[c] = 1.0;
        }
        // make reduced costs consistent with the starting basis
        for r in 0..m {
            if t.basis[r] >= n_split + n_slack {
                let w = ncols + 1;
                for c in 0..w {
                    t.cost[c] -= t.a[r * w + c];
                }
            }
        }
        let allowed: Vec<bool> = (0..ncols).map(|_| true).collect();
        if !t.optimize(&allowed) {
            return Err(Error::InvalidState("phase-1 unbounded".into()));
        }
        let infeas = -t.cost[ncols];
        if infeas > 1e-7 {
            return Ok(LpOutcome::Infeasible);
        }
        // drive remaining artificials out of the basis where possible
        for r in 0..m {
            if t.basis[r] >= n_split + n_slack {
                if let Some(c) = (0..n_split + n_slack).find(|&c| t.at(r, c).abs() > 1e-9) {
                    t.pivot(r, c);
                }
            }
        }
    }

    // phase 2: real objective as reduced costs over the current basis
    for c in 0..=ncols {
        t.cost[c] = 0.0;
    }
    for j in 0..nv {
        t.cost[j] = p.objective[j];
        t.cost[nv + j] = -p.objective[j];
    }
    for r in 0..m {
        let b = t.basis[r];
        let cb = if b < nv {
            p.objective[b]
        } else if b < n_split {
            -p.objective[b - nv]
        } else {
            0.0
        };
        if cb != 0.0 {
            let w = ncols + 1;
            for c in 0..w {
                t.cost[c] -= cb * t.a[r * w + c];
            }
        }
    }
    let allowed: Vec<bool> = (0..ncols).map(|c| c < n_split + n_slack).collect();
    if !t.optimize(&allowed) {
        return Ok(LpOutcome::Unbounded);
    }

    let mut x = vec![0.0; nv];
    for r in 0..m {
        let b = t.basis[r];
        let v = t.at(r, ncols);
        if b < nv {
            x[b] += v;
        } else if b < n_split {
            x[b - nv] -= v;
        }
    }
    let value: f64 = x.iter().zip(&p.objective).map(|(a, b)| a * b).sum();
    Ok(LpOutcome::Optimal { x, value })
}
