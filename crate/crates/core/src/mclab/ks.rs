//! Kolmogorov-Smirnov statistics and the asymptotic survival function.

/// Survival function of the Kolmogorov distribution,
/// Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
pub fn ks_survival(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for j in 1..=200 {
        let term = (-2.0 * (j as f64) * (j as f64) * lambda * lambda).exp();
        sum += sign * term;
        if term < 1e-16 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Two-sample KS statistic D = sup |F1 - F2| over the pooled sample.
///
/// Both inputs are sorted internally.
pub fn ks2_statistic(xs: &mut [f64], ys: &mut [f64]) -> f64 {
    assert!(!xs.is_empty() && !ys.is_empty());
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let (n1, n2) = (xs.len() as f64, ys.len() as f64);
    let mut i = 0;
    let mut j = 0;
    let mut d = 0.0f64;
    while i < xs.len() && j < ys.len() {
        let x = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= x {
            i += 1;
        }
        while j < ys.len() && ys[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n1 - j as f64 / n2).abs());
    }
    d
}

/// Two-sample KS test p-value (asymptotic, with the small-sample
/// correction lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) D).
pub fn ks2_pvalue(xs: &mut [f64], ys: &mut [f64]) -> (f64, f64) {
    let d = ks2_statistic(xs, ys);
    let ne = (xs.len() as f64 * ys.len() as f64) / (xs.len() as f64 + ys.len() as f64);
    let lambda = (ne.sqrt() + 0.12 + 0.11 / ne.sqrt()) * d;
    (d, ks_survival(lambda))
}

/// One-sample KS test against a CDF. Returns (D, p-value).
pub fn ks1_pvalue<F: Fn(f64) -> f64>(xs: &mut [f64], cdf: F) -> (f64, f64) {
    assert!(!xs.is_empty());
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let c = cdf(x);
        d = d.max(((i as f64 + 1.0) / n - c).abs());
        d = d.max((c - i as f64 / n).abs());
    }
    let lambda = (n.sqrt() + 0.12 + 0.11 / n.sqrt()) * d;
    (d, ks_survival(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn survival_endpoints() {
        assert!((ks_survival(0.0) - 1.0).abs() < 1e-15);
        assert!(ks_survival(3.0) < 1e-6);
        // Q(0.82757) is close to 0.5 (median of the Kolmogorov law)
        assert!((ks_survival(0.827_57) - 0.5).abs() < 1e-3);
    }

    #[test]
    fn identical_samples_have_zero_statistic() {
        let mut a = vec![1.0, 2.0, 3.0, 4.0];
        let mut b = vec![4.0, 3.0, 2.0, 1.0];
        assert_eq!(ks2_statistic(&mut a, &mut b), 0.0);
    }

    #[test]
    fn known_two_sample_statistic() {
        let mut a = vec![1.0, 1.0, 4.0, 4.0];
        let mut b = vec![1.0, 1.0, 1.0, 4.0];
        assert!((ks2_statistic(&mut a, &mut b) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn separates_different_distributions() {
        // U[0,1] vs U[0.3, 1.3] at n = 2000 must reject decisively
        let mut rng = crate::geom::SeededStream::new(3, 0).rng();
        use rand::Rng;
        let mut a: Vec<f64> = (0..2000).map(|_| rng.gen::<f64>()).collect();
        let mut b: Vec<f64> = (0..2000).map(|_| rng.gen::<f64>() + 0.3).collect();
        let (_, p) = ks2_pvalue(&mut a, &mut b);
        assert!(p < 1e-6);
    }

    #[test]
    fn accepts_same_distribution() {
        let mut rng = crate::geom::SeededStream::new(4, 0).rng();
        use rand::Rng;
        let mut a: Vec<f64> = (0..5000).map(|_| rng.gen::<f64>()).collect();
        let mut b: Vec<f64> = (0..5000).map(|_| rng.gen::<f64>()).collect();
        let (_, p) = ks2_pvalue(&mut a, &mut b);
        assert!(p > 0.01);
    }
}
