//! The named constants of the certified-bound machinery.

use super::special::ln_gamma;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Every named constant for dimension n, in linear and natural-log form.
///
/// The log forms are the primary values; linear fields are their exponentials
/// and overflow-safe for 3 <= n <= 20.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstantsRecord {
    pub n: usize,
    /// Constant of the certified lower bound 1 + C * alpha^2 * beta:
    /// C = 2^{(3/2)n - 2} n^{n-4} / (5 sqrt(n-1)).
    pub c_certified: f64,
    /// Constant printed in the random-polytope bound:
    /// n^2 sqrt(n-1) / (5 2^{n/2} n^{n-1}) * (n-1)^6 * e^{3n/2}.
    pub c_random: f64,
    /// The coefficient obtained by composing the certified bound with the
    /// alpha, beta thresholds of the random-polytope argument:
    /// c_certified * (n-1)^{-6} * e^{-3n/2}. Consistency would require
    /// c_random * c_random_recomposed = 1; the observed product is
    /// 2^n / (100 n), and both values are exposed so reports can surface
    /// the discrepancy.
    pub c_random_recomposed: f64,
    /// Expected-face-count coefficient for the asymptotically sharp regime:
    /// 2^n pi^{n/2-1} / (n (n-1)^2) *
    /// Gamma((n^2-2n+2)/2) / Gamma((n^2-2n+1)/2) *
    /// (Gamma((n+1)/2) / Gamma(n/2))^{n-1}.
    pub k_face_asymptotic: f64,
    /// Closed form of E |det|^{-1/2} for n independent uniform unit vectors:
    /// prod_{i=1}^{n-1} Gamma(i/2 - 1/4) Gamma(n/2) /
    ///                  (Gamma(i/2) Gamma(n/2 - 1/4)).
    pub det_moment_closed: f64,
    /// Upper bound e^{n/4} (n-1) on the same moment.
    pub det_moment_bound: f64,
    /// Face-diameter bound d = 1/(2n) implied by a 1/(4n)-net vertex set.
    pub face_diameter_bound: f64,
    pub ln_c_certified: f64,
    pub ln_c_random: f64,
    pub ln_c_random_recomposed: f64,
    pub ln_k_face_asymptotic: f64,
    pub ln_det_moment_closed: f64,
    pub ln_det_moment_bound: f64,
}

/// Evaluate every named constant for dimension n (3 <= n <= 20).
pub fn eval_constants(n: usize) -> Result<ConstantsRecord> {
    if !(3..=20).contains(&n) {
        return Err(Error::invalid(format!(
            "constants are defined for 3 <= n <= 20, got n = {n}"
        )));
    }
    let nf = n as f64;
    let ln2 = std::f64::consts::LN_2;
    let lnpi = std::f64::consts::PI.ln();

    let ln_c_certified =
        (1.5 * nf - 2.0) * ln2 + (nf - 4.0) * nf.ln() - (5.0 * (nf - 1.0).sqrt()).ln();

    let ln_c_random = 2.0 * nf.ln() + 0.5 * (nf - 1.0).ln()
        - (5.0f64.ln() + 0.5 * nf * ln2 + (nf - 1.0) * nf.ln())
        + 6.0 * (nf - 1.0).ln()
        + 1.5 * nf;

    let ln_c_random_recomposed = ln_c_certified - 6.0 * (nf - 1.0).ln() - 1.5 * nf;

    let m = nf * nf - 2.0 * nf; // n^2 - 2n
    let ln_k_face = nf * ln2 + (0.5 * nf - 1.0) * lnpi
        - (nf.ln() + 2.0 * (nf - 1.0).ln())
        + ln_gamma((m + 2.0) / 2.0)
        - ln_gamma((m + 1.0) / 2.0)
        + (nf - 1.0) * (ln_gamma((nf + 1.0) / 2.0) - ln_gamma(nf / 2.0));

    let mut ln_moment = 0.0;
    for i in 1..n {
        let i2 = i as f64 / 2.0;
        ln_moment += ln_gamma(i2 - 0.25) + ln_gamma(nf / 2.0)
            - ln_gamma(i2)
            - ln_gamma(nf / 2.0 - 0.25);
    }
    let ln_moment_bound = nf / 4.0 + (nf - 1.0).ln();

    Ok(ConstantsRecord {
        n,
        c_certified: ln_c_certified.exp(),
        c_random: ln_c_random.exp(),
        c_random_recomposed: ln_c_random_recomposed.exp(),
        k_face_asymptotic: ln_k_face.exp(),
        det_moment_closed: ln_moment.exp(),
        det_moment_bound: ln_moment_bound.exp(),
        face_diameter_bound: 1.0 / (2.0 * nf),
        ln_c_certified,
        ln_c_random,
        ln_c_random_recomposed,
        ln_k_face_asymptotic: ln_k_face,
        ln_det_moment_closed: ln_moment,
        ln_det_moment_bound: ln_moment_bound,
    })
}

/// Depth threshold separating deep from shallow hyperplane-face
/// intersections: s = 2^{n/2 - 1} alpha^2 / (n^2 sqrt(n-1) d^{n-1}),
/// with the face-diameter bound d = 1/(2n).
///
/// Satisfies the identity 5 * C * alpha^2 * beta / s = beta / n for the
/// certified-bound constant C and any beta.
pub fn s_threshold(n: usize, alpha: f64) -> Result<f64> {
    if alpha <= 0.0 {
        return Err(Error::invalid(format!("alpha must be positive, got {alpha}")));
    }
    if n < 3 {
        return Err(Error::invalid("dimension must be at least 3"));
    }
    let nf = n as f64;
    let d = 1.0 / (2.0 * nf);
    Ok(2.0f64.powf(nf / 2.0 - 1.0) * alpha * alpha
        / (nf * nf * (nf - 1.0).sqrt() * d.powi(n as i32 - 1)))
}
