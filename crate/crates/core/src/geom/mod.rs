//! Geometric primitives: unit vectors, reproducible sphere sampling,
//! determinants, spherical-cap measures, and the named constants.

pub mod constants;
pub mod linalg;
pub mod quadrature;
pub mod rng;
pub mod special;

pub use constants::{eval_constants, s_threshold, ConstantsRecord};
pub use rng::SeededStream;

use crate::error::{Error, Result};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// A point of the Euclidean unit sphere in R^n.
///
/// Construction enforces unit norm to within 1e-12.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    pub const NORM_TOL: f64 = 1e-12;

    /// Wrap coordinates that are already unit length.
    pub fn try_new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::invalid("unit vectors need dimension >= 2"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("unit vector coordinates must be finite"));
        }
        let n = linalg::norm(&coords);
        if (n - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::invalid(format!(
                "norm {n} deviates from 1 by more than {}",
                Self::NORM_TOL
            )));
        }
        Ok(UnitVector(coords))
    }

    /// Normalize arbitrary nonzero coordinates onto the sphere.
    pub fn normalized(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::invalid("unit vectors need dimension >= 2"));
        }
        let n = linalg::norm(&coords);
        if !n.is_finite() || n == 0.0 {
            return Err(Error::invalid("cannot normalize a zero or non-finite vector"));
        }
        Ok(UnitVector(linalg::scale(&coords, 1.0 / n)))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn antipode(&self) -> UnitVector {
        UnitVector(linalg::neg(&self.0))
    }
}

impl AsRef<[f64]> for UnitVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl std::ops::Index<usize> for UnitVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Draw `count` points independently and uniformly from the unit sphere in
/// R^n, by normalizing standard Gaussian vectors (exactly rotation
/// invariant).
pub fn sample_unit_sphere(n: usize, count: usize, stream: SeededStream) -> Result<Vec<UnitVector>> {
    if n < 2 {
        return Err(Error::invalid("sphere sampling needs n >= 2"));
    }
    if count < 1 {
        return Err(Error::invalid("sample count must be >= 1"));
    }
    let mut rng = stream.rng();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(sample_one(n, &mut rng));
    }
    Ok(out)
}

/// One uniform point on the sphere from an existing RNG.
pub fn sample_one<R: Rng>(n: usize, rng: &mut R) -> UnitVector {
    loop {
        let g: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let nrm = linalg::norm(&g);
        if nrm > 1e-12 {
            return UnitVector(linalg::scale(&g, 1.0 / nrm));
        }
    }
}

/// Determinant of n row vectors of dimension n (partial-pivot LU).
///
/// Singular input yields exactly 0.0.
pub fn determinant(rows: &[UnitVector]) -> f64 {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.dim() == n),
        "determinant requires square input"
    );
    let refs: Vec<&[f64]> = rows.iter().map(|r| r.coords()).collect();
    linalg::det_rows(&refs)
}

/// The normalizing constant c of the density c (1 - s^2)^{(n-3)/2} of
/// a single coordinate of a uniform point on the sphere in R^n:
/// c = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)).
pub fn coordinate_density_constant(n: usize) -> f64 {
    let nf = n as f64;
    (special::ln_gamma(nf / 2.0)
        - 0.5 * std::f64::consts::PI.ln()
        - special::ln_gamma((nf - 1.0) / 2.0))
    .exp()
}

/// Uniform measure of the spherical cap { y : |x - y| <= r } on the unit
/// sphere in R^n, i.e. { y : <x, y> >= 1 - r^2/2 }, computed by adaptive
/// quadrature of the coordinate density to absolute error 1e-10.
pub fn cap_measure(n: usize, r: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::invalid("cap measure needs n >= 3"));
    }
    if !(r > 0.0 && r < 2.0) {
        return Err(Error::invalid(format!("cap radius must lie in (0, 2), got {r}")));
    }
    let c = coordinate_density_constant(n);
    let t0 = 1.0 - r * r / 2.0;
    let ex = (n as f64 - 3.0) / 2.0;
    let (v, _) = quadrature::integrate(
        move |s| c * (1.0 - s * s).max(0.0).powf(ex),
        t0,
        1.0,
        1e-10,
    );
    Ok(v.clamp(0.0, 1.0))
}

/// Closed-form lower bound on the cap measure:
/// (2 pi (n-1))^{-1/2} (r / sqrt 2)^{n-1}.
///
/// The bound is stated for 0 < r < 1; radii up to sqrt 2 are accepted only
/// with `allow_extended` (the underlying estimate covers caps up to a
/// hemisphere).
pub fn cap_measure_lower_bound(n: usize, r: f64, allow_extended: bool) -> Result<f64> {
    if n < 3 {
        return Err(Error::invalid("cap bound needs n >= 3"));
    }
    let max_r = if allow_extended { std::f64::consts::SQRT_2 } else { 1.0 };
    if !(r > 0.0 && r <= max_r) {
        return Err(Error::invalid(format!(
            "cap radius {r} outside (0, {max_r}] (allow_extended = {allow_extended})"
        )));
    }
    let nf = n as f64;
    Ok((2.0 * std::f64::consts::PI * (nf - 1.0)).sqrt().recip()
        * (r / std::f64::consts::SQRT_2).powi(n as i32 - 1))
}

/// Volume of the regular k-simplex with the given edge length:
/// sqrt(k+1) / (k! 2^{k/2}) * edge^k.
pub fn regular_simplex_volume(k: usize, edge: f64) -> Result<f64> {
    if k < 1 {
        return Err(Error::invalid("simplex dimension must be >= 1"));
    }
    if edge <= 0.0 {
        return Err(Error::invalid("edge length must be positive"));
    }
    let kf = k as f64;
    let ln_v = 0.5 * (kf + 1.0).ln() - special::ln_gamma(kf + 1.0)
        - 0.5 * kf * std::f64::consts::LN_2
        + kf * edge.ln();
    Ok(ln_v.exp())
}

/// For each grid point x > 0, the bracket
/// sqrt(x) <= Gamma(x+1)/Gamma(x+1/2) <= sqrt(x + 1/2),
/// returned as (lower, ratio, upper) triples.
pub fn gamma_ratio_sweep(x_grid: &[f64]) -> Result<Vec<(f64, f64, f64)>> {
    if let Some(bad) = x_grid.iter().find(|&&x| x <= 0.0) {
        return Err(Error::invalid(format!("grid values must be positive, got {bad}")));
    }
    Ok(x_grid
        .iter()
        .map(|&x| {
            let ratio = (special::ln_gamma(x + 1.0) - special::ln_gamma(x + 0.5)).exp();
            (x.sqrt(), ratio, (x + 0.5).sqrt())
        })
        .collect())
}
