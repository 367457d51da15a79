//! Determinant certificates and the certified lower bound.
//!
//! alpha is the minimum |det| over n-tuples of representative vertices;
//! beta is the minimum |det| over admissible n-tuples of facet normals,
//! where a tuple of facet orbits is admissible when some assignment of
//! orientations makes all pairs non-neighbouring (tuples containing an
//! antipodal facet pair are excluded by construction, one facet per pair
//! being enumerated). A certificate combines them with the epsilon-net
//! condition (or its 3-D volume/edge alternative) into the bound
//! 1 + C alpha^2 beta.

use crate::combin::{binomial, first_combination, next_combination};
use crate::error::{Error, Result};
use crate::geom::linalg::{det3, det_in_place, dot};
use crate::geom::{eval_constants, SeededStream, UnitVector};
use crate::hull::{self, Polytope};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Values below this are reported as exact zeros (determinant round-off
/// floor) and invalidate the certificate.
pub const ZERO_TOL: f64 = 1e-14;

/// Default guard on the number of tuples an exact enumeration may visit.
pub const DEFAULT_GUARD: u128 = 10_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ComputeMode {
    Exact,
    Sampled { samples: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NetMethod {
    VoronoiExact,
    OffsetBound,
    #[serde(rename = "3d-alternative")]
    ThreeDAlternative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BetaValue {
    Value(f64),
    /// No admissible tuple of pairwise non-neighbouring facets exists.
    Vacuous,
}

#[derive(Debug, Clone, Copy)]
pub struct AlphaStats {
    pub value: f64,
    pub tuples: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct BetaStats {
    pub value: BetaValue,
    /// Tuples that passed the pairwise screen.
    pub visited: u64,
    /// Tuples admitting a consistent orientation assignment.
    pub admissible: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub num_reps: usize,
    pub epsilon: f64,
    pub net_ok: bool,
    pub net_method: NetMethod,
    pub alpha: f64,
    /// None when the non-neighbouring condition is vacuous.
    pub beta: Option<f64>,
    pub alpha_mode: ComputeMode,
    pub beta_mode: ComputeMode,
    pub c_n: f64,
    /// 1 + c_n * alpha^2 * beta; None when beta is vacuous.
    pub bound: Option<f64>,
    /// The certified excess c_n * alpha^2 * beta = bound - 1, kept separate
    /// because the excess is far below one ulp of 1.0 and would be absorbed
    /// by the addition.
    pub bound_excess: Option<f64>,
    pub valid: bool,
    pub notes: String,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct NetCheck {
    pub ok: bool,
    pub margin: f64,
    pub method: NetMethod,
    pub radius: f64,
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    pub epsilon: Option<f64>,
    pub mode: ComputeMode,
    pub use_3d_alternative: bool,
    pub stream: SeededStream,
    pub guard_limit: u128,
    pub override_guard: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            epsilon: None,
            mode: ComputeMode::Exact,
            use_3d_alternative: false,
            stream: SeededStream::new(0, 0),
            guard_limit: DEFAULT_GUARD,
            override_guard: false,
        }
    }
}

/// Minimum |det| over n-tuples of unit vectors, exact enumeration.
///
/// Signs are irrelevant (|det| is invariant under row negation), so only
/// the representatives are enumerated.
pub fn min_abs_det_tuples(points: &[UnitVector], guard: u128, override_guard: bool) -> Result<AlphaStats> {
    let n = points[0].dim();
    let count = points.len();
    if count < n {
        return Err(Error::invalid(format!(
            "need at least {n} points for a determinant tuple, got {count}"
        )));
    }
    let total = binomial(count as u64, n as u64);
    if total > guard && !override_guard {
        return Err(Error::EnumerationGuard {
            tuples: total,
            limit: guard,
        });
    }
    let coords: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();

    if n == 3 {
        let res = (0..count - 2)
            .into_par_iter()
            .map(|i| {
                let mut local = f64::INFINITY;
                let mut tuples = 0u64;
                for j in (i + 1)..count - 1 {
                    for k in (j + 1)..count {
                        let d = det3(coords[i], coords[j], coords[k]).abs();
                        local = local.min(d);
                        tuples += 1;
                    }
                }
                (local, tuples)
            })
            .reduce(
                || (f64::INFINITY, 0),
                |a, b| (a.0.min(b.0), a.1 + b.1),
            );
        return Ok(AlphaStats {
            value: res.0,
            tuples: res.1,
        });
    }

    let res = (0..=count - n)
        .into_par_iter()
        .map(|first| {
            let mut local = f64::INFINITY;
            let mut tuples = 0u64;
            let mut scratch = vec![0.0f64; n * n];
            let rest = count - first - 1;
            let Some(mut idx) = first_combination(rest, n - 1) else {
                return (local, tuples);
            };
            loop {
                scratch[..n].copy_from_slice(coords[first]);
                for (r, &off) in idx.iter().enumerate() {
                    let p = coords[first + 1 + off];
                    scratch[(r + 1) * n..(r + 2) * n].copy_from_slice(p);
                }
                let d = det_in_place(&mut scratch, n).abs();
                local = local.min(d);
                tuples += 1;
                if !next_combination(&mut idx, rest) {
                    break;
                }
            }
            (local, tuples)
        })
        .reduce(|| (f64::INFINITY, 0), |a, b| (a.0.min(b.0), a.1 + b.1));
    Ok(AlphaStats {
        value: res.0,
        tuples: res.1,
    })
}

/// Minimum |det| over `samples` random n-tuples (an upper estimate of the
/// exact minimum).
pub fn min_abs_det_sampled(points: &[UnitVector], samples: u64, stream: SeededStream) -> Result<AlphaStats> {
    let n = points[0].dim();
    let count = points.len();
    if count < n {
        return Err(Error::invalid("not enough points"));
    }
    let mut rng = stream.rng();
    let mut best = f64::INFINITY;
    let mut scratch = vec![0.0f64; n * n];
    let mut chosen = vec![0usize; n];
    for _ in 0..samples {
        // sample n distinct indices
        let mut filled = 0;
        while filled < n {
            let c = rng.gen_range(0..count);
            if !chosen[..filled].contains(&c) {
                chosen[filled] = c;
                filled += 1;
            }
        }
        for (r, &c) in chosen.iter().enumerate() {
            scratch[r * n..(r + 1) * n].copy_from_slice(points[c].coords());
        }
        best = best.min(det_in_place(&mut scratch, n).abs());
    }
    Ok(AlphaStats {
        value: best,
        tuples: samples,
    })
}

/// alpha: minimum |det| over representative vertex n-tuples.
pub fn compute_alpha(p: &Polytope, mode: ComputeMode, opts: &CertifyOptions) -> Result<AlphaStats> {
    match mode {
        ComputeMode::Exact => min_abs_det_tuples(p.reps(), opts.guard_limit, opts.override_guard),
        ComputeMode::Sampled { samples } => min_abs_det_sampled(p.reps(), samples, opts.stream),
    }
}

/// Pairwise orientation relation between two facet orbits:
/// bit 0 set = same orientations are non-neighbouring,
/// bit 1 set = opposite orientations are non-neighbouring.
fn pair_relation(ids_a: &[i32], ids_b: &[i32], neg_ids_b: &[i32]) -> u8 {
    let mut rel = 0u8;
    if hull::disjoint_sorted(ids_a, ids_b) {
        rel |= 1;
    }
    if hull::disjoint_sorted(ids_a, neg_ids_b) {
        rel |= 2;
    }
    rel
}

/// Whether some orientation assignment of the tuple makes all pairs
/// non-neighbouring: search sign patterns (first fixed +) against the
/// pairwise relation table.
fn orientation_satisfiable(tuple: &[usize], rel: &[Vec<u8>]) -> bool {
    let n = tuple.len();
    'mask: for mask in 0u32..(1 << (n - 1)) {
        for i in 0..n {
            let si = i > 0 && (mask >> (i - 1)) & 1 == 1;
            for j in (i + 1)..n {
                let sj = (mask >> (j - 1)) & 1 == 1;
                let needed = if si == sj { 1u8 } else { 2u8 };
                if rel[tuple[i]][tuple[j]] & needed == 0 {
                    continue 'mask;
                }
            }
        }
        return true;
    }
    false
}

struct OrbitData {
    normals: Vec<Vec<f64>>,
    rel: Vec<Vec<u8>>,
    usable: Vec<Vec<u64>>, // bitset per orbit: pairs with rel != 0
    words: usize,
}

fn orbit_data(p: &Polytope) -> OrbitData {
    let orbit_ids = p.orbit_facets();
    let m = orbit_ids.len();
    let mut ids: Vec<&[i32]> = Vec::with_capacity(m);
    let mut neg_ids: Vec<Vec<i32>> = Vec::with_capacity(m);
    let mut normals: Vec<Vec<f64>> = Vec::with_capacity(m);
    for &f in &orbit_ids {
        let facet = &p.facets()[f];
        ids.push(&facet.vertex_ids);
        let mut neg: Vec<i32> = facet.vertex_ids.iter().map(|&v| -v).collect();
        neg.sort_unstable();
        neg_ids.push(neg);
        normals.push(facet.unit_normal.coords().to_vec());
    }
    let words = m.div_ceil(64);
    let mut rel = vec![vec![0u8; m]; m];
    let mut usable = vec![vec![0u64; words]; m];
    for a in 0..m {
        for b in (a + 1)..m {
            let r = pair_relation(ids[a], ids[b], &neg_ids[b]);
            rel[a][b] = r;
            rel[b][a] = r;
            if r != 0 {
                usable[a][b / 64] |= 1 << (b % 64);
                usable[b][a / 64] |= 1 << (a % 64);
            }
        }
    }
    OrbitData {
        normals,
        rel,
        usable,
        words,
    }
}

fn for_each_bit(words: &[u64], from: usize, mut f: impl FnMut(usize)) {
    for (w, &word) in words.iter().enumerate() {
        let mut bits = word;
        if w * 64 + 63 < from {
            continue;
        }
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            let idx = w * 64 + b;
            if idx >= from {
                f(idx);
            }
            bits &= bits - 1;
        }
    }
}

fn beta_dfs(
    data: &OrbitData,
    tuple: &mut Vec<usize>,
    cand: &[u64],
    depth_left: usize,
    scratch: &mut [f64],
    best: &mut f64,
    visited: &mut u64,
    admissible: &mut u64,
) {
    let n_dim = data.normals[0].len();
    if depth_left == 1 {
        let from = tuple.last().map_or(0, |&t| t + 1);
        for_each_bit(cand, from, |k| {
            *visited += 1;
            tuple.push(k);
            if orientation_satisfiable(tuple, &data.rel) {
                *admissible += 1;
                let d = if n_dim == 3 {
                    det3(
                        &data.normals[tuple[0]],
                        &data.normals[tuple[1]],
                        &data.normals[tuple[2]],
                    )
                    .abs()
                } else {
                    for (r, &t) in tuple.iter().enumerate() {
                        scratch[r * n_dim..(r + 1) * n_dim].copy_from_slice(&data.normals[t]);
                    }
                    det_in_place(&mut scratch[..n_dim * n_dim], n_dim).abs()
                };
                if d < *best {
                    *best = d;
                }
            }
            tuple.pop();
        });
        return;
    }
    let from = tuple.last().map_or(0, |&t| t + 1);
    let mut next_cand = vec![0u64; data.words];
    for_each_bit(cand, from, |j| {
        for w in 0..data.words {
            next_cand[w] = cand[w] & data.usable[j][w];
        }
        tuple.push(j);
        beta_dfs(
            data,
            tuple,
            &next_cand,
            depth_left - 1,
            scratch,
            best,
            visited,
            admissible,
        );
        tuple.pop();
    });
}

/// beta: minimum |det| over admissible facet-normal n-tuples, exact
/// depth-first enumeration over one facet per antipodal pair with pairwise
/// pruning.
pub fn min_abs_det_facet_tuples(p: &Polytope, guard: u128, override_guard: bool) -> Result<BetaStats> {
    let n = p.dim();
    let data = orbit_data(p);
    let m = data.normals.len();
    if m < n {
        return Ok(BetaStats {
            value: BetaValue::Vacuous,
            visited: 0,
            admissible: 0,
        });
    }
    let total = binomial(m as u64, n as u64);
    if total > guard && !override_guard {
        return Err(Error::EnumerationGuard {
            tuples: total,
            limit: guard,
        });
    }

    let res = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut best = f64::INFINITY;
            let mut visited = 0u64;
            let mut admissible = 0u64;
            let mut tuple = vec![first];
            let mut scratch = vec![0.0f64; n * n];
            beta_dfs(
                &data,
                &mut tuple,
                &data.usable[first],
                n - 1,
                &mut scratch,
                &mut best,
                &mut visited,
                &mut admissible,
            );
            (best, visited, admissible)
        })
        .reduce(
            || (f64::INFINITY, 0, 0),
            |a, b| (a.0.min(b.0), a.1 + b.1, a.2 + b.2),
        );

    Ok(BetaStats {
        value: if res.2 == 0 {
            BetaValue::Vacuous
        } else {
            BetaValue::Value(res.0)
        },
        visited: res.1,
        admissible: res.2,
    })
}

/// Sampled variant of the facet-normal minimum (an upper estimate).
pub fn min_abs_det_facet_sampled(p: &Polytope, samples: u64, stream: SeededStream) -> Result<BetaStats> {
    let n = p.dim();
    let data = orbit_data(p);
    let m = data.normals.len();
    if m < n {
        return Ok(BetaStats {
            value: BetaValue::Vacuous,
            visited: 0,
            admissible: 0,
        });
    }
    let mut rng = stream.rng();
    let mut best = f64::INFINITY;
    let mut admissible = 0u64;
    let mut scratch = vec![0.0f64; n * n];
    let mut tuple = vec![0usize; n];
    for _ in 0..samples {
        let mut filled = 0;
        while filled < n {
            let c = rng.gen_range(0..m);
            if !tuple[..filled].contains(&c) {
                tuple[filled] = c;
                filled += 1;
            }
        }
        tuple.sort_unstable();
        let pairwise_ok = (0..n)
            .all(|i| ((i + 1)..n).all(|j| data.rel[tuple[i]][tuple[j]] != 0));
        if pairwise_ok && orientation_satisfiable(&tuple, &data.rel) {
            admissible += 1;
            for (r, &t) in tuple.iter().enumerate() {
                scratch[r * n..(r + 1) * n].copy_from_slice(&data.normals[t]);
            }
            best = best.min(det_in_place(&mut scratch[..n * n], n).abs());
        }
    }
    Ok(BetaStats {
        value: if admissible == 0 {
            BetaValue::Vacuous
        } else {
            BetaValue::Value(best)
        },
        visited: samples,
        admissible,
    })
}

pub fn compute_beta(p: &Polytope, mode: ComputeMode, opts: &CertifyOptions) -> Result<BetaStats> {
    match mode {
        ComputeMode::Exact => min_abs_det_facet_tuples(p, opts.guard_limit, opts.override_guard),
        ComputeMode::Sampled { samples } => min_abs_det_facet_sampled(p, samples, opts.stream),
    }
}

/// Epsilon-net condition: covering radius at most epsilon. The offset
/// bound is cited when it suffices; otherwise the cap-apex value decides.
pub fn check_net(p: &Polytope, epsilon: f64) -> Result<NetCheck> {
    let cr = hull::covering_radius(p)?;
    if cr.certified_bound <= epsilon {
        Ok(NetCheck {
            ok: true,
            margin: epsilon - cr.certified_bound,
            method: NetMethod::OffsetBound,
            radius: cr.certified_bound,
        })
    } else {
        Ok(NetCheck {
            ok: cr.exact <= epsilon,
            margin: epsilon - cr.exact,
            method: NetMethod::VoronoiExact,
            radius: cr.exact,
        })
    }
}

/// The 3-D alternative to the net condition: volume > 4 and every edge
/// shorter than 1/4 (strict inequalities).
pub fn check_3d_alternative(p: &Polytope) -> Result<(bool, f64, f64)> {
    if p.dim() != 3 {
        return Err(Error::invalid("the volume/edge alternative requires n = 3"));
    }
    let vol = hull::volume(p);
    let edge = hull::max_edge_length(p);
    Ok((vol > 4.0 && edge < 0.25, vol, edge))
}

const BETA_CONVENTION_NOTE: &str = "beta enumerates one facet per antipodal pair; a tuple is \
admissible when some orientation assignment makes all pairs non-neighbouring (tuples with an \
antipodal facet pair are excluded)";

/// Assemble the full certificate for a polytope.
pub fn certify(p: &Polytope, opts: &CertifyOptions) -> Result<Certificate> {
    let n = p.dim();
    let epsilon = opts.epsilon.unwrap_or(1.0 / (4.0 * n as f64));
    let mut notes: Vec<String> = vec![BETA_CONVENTION_NOTE.to_string()];

    let (net_ok, net_method) = if opts.use_3d_alternative {
        let (ok, vol, edge) = check_3d_alternative(p)?;
        notes.push(format!(
            "net condition replaced by the 3-D alternative: volume = {vol:.6} (> 4 required), \
             max edge = {edge:.6} (< 0.25 required)"
        ));
        (ok, NetMethod::ThreeDAlternative)
    } else {
        let nc = check_net(p, epsilon)?;
        notes.push(format!(
            "covering radius {:.6} vs epsilon {:.6} (margin {:+.6})",
            nc.radius, epsilon, nc.margin
        ));
        (nc.ok, nc.method)
    };

    let alpha_stats = compute_alpha(p, opts.mode, opts)?;
    let mut alpha = alpha_stats.value;
    if alpha < ZERO_TOL {
        notes.push(format!(
            "alpha {alpha:.3e} below the zero tolerance {ZERO_TOL:.0e}; reported as degenerate 0"
        ));
        alpha = 0.0;
    }
    let beta_stats = compute_beta(p, opts.mode, opts)?;
    let beta = match beta_stats.value {
        BetaValue::Vacuous => {
            notes.push(
                "non-neighbouring facet condition vacuous - certified bound not applicable".into(),
            );
            None
        }
        BetaValue::Value(b) if b < ZERO_TOL => {
            notes.push(format!(
                "beta {b:.3e} below the zero tolerance {ZERO_TOL:.0e}; reported as degenerate 0"
            ));
            Some(0.0)
        }
        BetaValue::Value(b) => Some(b),
    };

    let exact_modes = matches!(opts.mode, ComputeMode::Exact);
    if !exact_modes {
        notes.push("sampled modes only overestimate alpha/beta; certificate not valid".into());
    }

    let c_n = eval_constants(n)?.c_certified;
    let excess = beta.map(|b| c_n * alpha * alpha * b);
    let valid = net_ok && alpha > 0.0 && beta.is_some_and(|b| b > 0.0) && exact_modes;

    Ok(Certificate {
        n,
        num_reps: p.num_reps(),
        epsilon,
        net_ok,
        net_method,
        alpha,
        beta,
        alpha_mode: opts.mode,
        beta_mode: opts.mode,
        c_n,
        bound: excess.map(|e| 1.0 + e),
        bound_excess: excess,
        valid,
        notes: notes.join("; "),
    })
}

/// Certificate assembled from externally computed alpha and beta (used to
/// evaluate the bound formula on published values).
pub fn certificate_from_parts(
    n: usize,
    num_reps: usize,
    alpha: f64,
    beta: f64,
    net_ok: bool,
    net_method: NetMethod,
) -> Result<Certificate> {
    if alpha <= 0.0 || beta <= 0.0 {
        return Err(Error::invalid("alpha and beta must be positive"));
    }
    let c_n = eval_constants(n)?.c_certified;
    let excess = c_n * alpha * alpha * beta;
    Ok(Certificate {
        n,
        num_reps,
        epsilon: 1.0 / (4.0 * n as f64),
        net_ok,
        net_method,
        alpha,
        beta: Some(beta),
        alpha_mode: ComputeMode::Exact,
        beta_mode: ComputeMode::Exact,
        c_n,
        bound: Some(1.0 + excess),
        bound_excess: Some(excess),
        valid: net_ok,
        notes: format!("alpha and beta injected as precomputed values; {BETA_CONVENTION_NOTE}"),
    })
}

/// Pigeonhole consequence of a determinant lower bound: for unit vectors
/// xs with |det(xs)| >= alpha and any unit v, max_i |<x_i, v>| >= alpha/n.
///
/// The precondition is checked; the conclusion is returned (a quantified
/// property that must hold on every valid input).
pub fn check_max_inner_product(xs: &[UnitVector], v: &UnitVector, alpha: f64) -> Result<bool> {
    let n = xs.len();
    if alpha <= 0.0 {
        return Err(Error::invalid("alpha must be positive"));
    }
    let d = crate::geom::determinant(xs).abs();
    if d < alpha {
        return Err(Error::invalid(format!(
            "precondition violated: |det| = {d:.6e} < alpha = {alpha:.6e}"
        )));
    }
    let best = xs
        .iter()
        .map(|x| dot(x.coords(), v.coords()).abs())
        .fold(0.0, f64::max);
    Ok(best >= alpha / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{sample_one, sample_unit_sphere};
    use crate::hull::build_hull;

    fn unit(v: Vec<f64>) -> UnitVector {
        UnitVector::normalized(v).unwrap()
    }

    fn octahedron() -> Polytope {
        build_hull(vec![
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![0.0, 1.0, 0.0]),
            unit(vec![0.0, 0.0, 1.0]),
        ])
        .unwrap()
    }

    #[test]
    fn alpha_of_standard_basis() {
        let p = octahedron();
        let opts = CertifyOptions::default();
        let a = compute_alpha(&p, ComputeMode::Exact, &opts).unwrap();
        assert_eq!(a.tuples, 1);
        assert!((a.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn alpha_of_cube_representatives() {
        // four cube-vertex representatives; all four triples have |det| =
        // 4/(3 sqrt 3)
        let s = 1.0 / 3.0f64.sqrt();
        let reps = vec![
            unit(vec![s, s, s]),
            unit(vec![s, s, -s]),
            unit(vec![s, -s, s]),
            unit(vec![-s, s, s]),
        ];
        let a = min_abs_det_tuples(&reps, DEFAULT_GUARD, false).unwrap();
        assert_eq!(a.tuples, 4);
        let expect = 4.0 / (3.0 * 3.0f64.sqrt());
        assert!((a.value - expect).abs() < 1e-12, "alpha = {}", a.value);
    }

    #[test]
    fn alpha_zero_for_duplicate_points() {
        let reps = vec![
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![0.0, 1.0, 0.0]),
            unit(vec![0.0, 0.0, 1.0]),
        ];
        let a = min_abs_det_tuples(&reps, DEFAULT_GUARD, false).unwrap();
        assert_eq!(a.value, 0.0);
    }

    #[test]
    fn enumeration_guard_trips() {
        let reps = sample_unit_sphere(3, 5000, SeededStream::new(1, 0)).unwrap();
        match min_abs_det_tuples(&reps, DEFAULT_GUARD, false) {
            Err(Error::EnumerationGuard { tuples, .. }) => {
                assert!(tuples > DEFAULT_GUARD);
            }
            other => panic!("expected guard error, got {other:?}"),
        }
    }

    #[test]
    fn beta_vacuous_on_octahedron() {
        // every pair of distinct facet orbits shares a vertex in one
        // orientation and the mirrored vertex in the other
        let p = octahedron();
        let b = min_abs_det_facet_tuples(&p, DEFAULT_GUARD, false).unwrap();
        assert_eq!(b.admissible, 0);
        assert!(matches!(b.value, BetaValue::Vacuous));
    }

    #[test]
    fn beta_positive_on_random_polytope() {
        let reps = sample_unit_sphere(3, 40, SeededStream::new(2, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        let b = min_abs_det_facet_tuples(&p, DEFAULT_GUARD, false).unwrap();
        match b.value {
            BetaValue::Value(v) => assert!(v > 0.0),
            BetaValue::Vacuous => panic!("expected admissible tuples"),
        }
        assert!(b.admissible > 0);
        assert!(b.visited >= b.admissible);
    }

    #[test]
    fn beta_sampled_upper_bounds_exact() {
        let reps = sample_unit_sphere(3, 60, SeededStream::new(3, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        let exact = match min_abs_det_facet_tuples(&p, DEFAULT_GUARD, false).unwrap().value {
            BetaValue::Value(v) => v,
            BetaValue::Vacuous => panic!(),
        };
        let sampled = match min_abs_det_facet_sampled(&p, 100_000, SeededStream::new(4, 0))
            .unwrap()
            .value
        {
            BetaValue::Value(v) => v,
            BetaValue::Vacuous => panic!(),
        };
        assert!(sampled >= exact - 1e-300, "{sampled} < {exact}");
    }

    #[test]
    fn alpha_sampled_upper_bounds_exact() {
        let reps = sample_unit_sphere(3, 30, SeededStream::new(5, 0)).unwrap();
        let exact = min_abs_det_tuples(&reps, DEFAULT_GUARD, false).unwrap().value;
        let sampled = min_abs_det_sampled(&reps, 50_000, SeededStream::new(6, 0))
            .unwrap()
            .value;
        assert!(sampled >= exact);
    }

    #[test]
    fn sampled_refinement_is_monotone() {
        // the first k1 draws of a stream are a prefix of the first k2 > k1
        let reps = sample_unit_sphere(3, 30, SeededStream::new(7, 0)).unwrap();
        let a1 = min_abs_det_sampled(&reps, 1000, SeededStream::new(8, 0)).unwrap().value;
        let a2 = min_abs_det_sampled(&reps, 5000, SeededStream::new(8, 0)).unwrap().value;
        assert!(a2 <= a1);
    }

    #[test]
    fn rotation_invariance() {
        let reps = sample_unit_sphere(3, 30, SeededStream::new(9, 0)).unwrap();
        let p = build_hull(reps.clone()).unwrap();
        let a0 = compute_alpha(&p, ComputeMode::Exact, &CertifyOptions::default()).unwrap().value;
        let b0 = match compute_beta(&p, ComputeMode::Exact, &CertifyOptions::default()).unwrap().value {
            BetaValue::Value(v) => v,
            _ => panic!(),
        };

        // random rotation via Gram-Schmidt of a Gaussian matrix
        let mut rng = SeededStream::new(10, 0).rng();
        let cols: Vec<Vec<f64>> = (0..3).map(|_| sample_one(3, &mut rng).coords().to_vec()).collect();
        let q = crate::geom::linalg::orthonormal_basis(&cols, 1e-9);
        assert_eq!(q.len(), 3);
        let rotated: Vec<UnitVector> = reps
            .iter()
            .map(|r| {
                let c = r.coords();
                unit((0..3).map(|i| dot(&q[i], c)).collect())
            })
            .collect();
        let p2 = build_hull(rotated).unwrap();
        let a1 = compute_alpha(&p2, ComputeMode::Exact, &CertifyOptions::default()).unwrap().value;
        let b1 = match compute_beta(&p2, ComputeMode::Exact, &CertifyOptions::default()).unwrap().value {
            BetaValue::Value(v) => v,
            _ => panic!(),
        };
        assert!((a0 - a1).abs() < 1e-8 * a0.max(1e-8), "{a0} vs {a1}");
        assert!((b0 - b1).abs() < 1e-8 * b0.max(1e-8), "{b0} vs {b1}");
    }

    #[test]
    fn net_check_cross_polytope() {
        let p = octahedron();
        let nc = check_net(&p, 1.0 / 12.0).unwrap();
        assert!(!nc.ok);
        assert!(nc.margin < 0.0);
        let expect = (2.0 - 2.0 / 3.0f64.sqrt()).sqrt();
        assert!((nc.margin - (1.0 / 12.0 - expect)).abs() < 1e-9);
        // the whole sphere is a 2-net
        assert!(check_net(&p, 2.0).unwrap().ok);
    }

    #[test]
    fn three_d_alternative() {
        let p = octahedron();
        let (ok, vol, edge) = check_3d_alternative(&p).unwrap();
        assert!(!ok);
        assert!((vol - 4.0 / 3.0).abs() < 1e-9);
        assert!((edge - std::f64::consts::SQRT_2).abs() < 1e-9);

        let p4 = build_hull(sample_unit_sphere(4, 20, SeededStream::new(1, 1)).unwrap()).unwrap();
        assert!(check_3d_alternative(&p4).is_err());
    }

    #[test]
    fn certify_octahedron_invalid() {
        let p = octahedron();
        let cert = certify(&p, &CertifyOptions::default()).unwrap();
        assert!(!cert.valid);
        assert!(!cert.net_ok);
        assert!(cert.beta.is_none());
        assert!(cert.notes.contains("vacuous"));
        assert!((cert.epsilon - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn certify_sampled_never_valid() {
        let reps = sample_unit_sphere(3, 50, SeededStream::new(11, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        let opts = CertifyOptions {
            mode: ComputeMode::Sampled { samples: 500 },
            ..Default::default()
        };
        let cert = certify(&p, &opts).unwrap();
        assert!(!cert.valid);
        assert!(cert.notes.contains("sampled"));
    }

    #[test]
    fn published_values_reproduce_bound() {
        let cert = certificate_from_parts(
            3,
            434,
            5.303e-7,
            1.244e-7,
            true,
            NetMethod::ThreeDAlternative,
        )
        .unwrap();
        let rho = cert.bound_excess.unwrap();
        assert!(
            (9.31e-21..=9.35e-21).contains(&rho),
            "bound - 1 = {rho:.4e}"
        );
    }

    #[test]
    fn max_inner_product_examples() {
        let basis = vec![
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![0.0, 1.0, 0.0]),
            unit(vec![0.0, 0.0, 1.0]),
        ];
        let v = unit(vec![1.0, 1.0, 1.0]);
        assert!(check_max_inner_product(&basis, &v, 1.0).unwrap());
        // precondition violation
        assert!(check_max_inner_product(&basis, &v, 1.5).is_err());
    }

    #[test]
    fn max_inner_product_random_property() {
        let mut rng = SeededStream::new(12, 0).rng();
        for _ in 0..2000 {
            let xs: Vec<UnitVector> = (0..3).map(|_| sample_one(3, &mut rng)).collect();
            let v = sample_one(3, &mut rng);
            let alpha = crate::geom::determinant(&xs).abs();
            if alpha > 0.0 {
                assert!(check_max_inner_product(&xs, &v, alpha).unwrap());
            }
        }
    }

    #[test]
    fn certificate_json_fields() {
        let cert = certificate_from_parts(3, 10, 0.1, 0.2, true, NetMethod::OffsetBound).unwrap();
        let v = serde_json::to_value(&cert).unwrap();
        let obj = v.as_object().unwrap();
        for key in [
            "n", "num_reps", "epsilon", "net_ok", "net_method", "alpha", "beta", "alpha_mode",
            "beta_mode", "c_n", "bound", "bound_excess", "valid", "notes",
        ] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(obj.len(), 14);
        assert_eq!(v["net_method"], "offset-bound");
        assert_eq!(v["alpha_mode"]["mode"], "exact");
    }
}
