//! Facet complexes of centrally symmetric spherical polytopes and the
//! geometric queries on them.

mod build;

use crate::error::{Error, Result};
use crate::geom::linalg::{dist, dot, generalized_cross, gram_volume, norm, orthonormal_basis, sub};
use crate::geom::special::ln_gamma;
use crate::geom::UnitVector;
use crate::lp::{self, LpOutcome, LpProblem};
use serde::{Deserialize, Serialize};

/// One (n-1)-dimensional face of the polytope.
///
/// `vertex_ids` are signed 1-based representative indices: +k is reps[k-1],
/// -k is its antipode. `twin` is the index of the mirrored facet, whose
/// normal is the exact negation of this one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Facet {
    pub vertex_ids: Vec<i32>,
    pub unit_normal: UnitVector,
    pub offset: f64,
    pub twin: usize,
}

/// A centrally symmetric spherical polytope: representative vertices on the
/// unit sphere plus the complete simplicial facet complex of the symmetric
/// hull. Both orientations of every facet are stored.
#[derive(Debug, Clone)]
pub struct Polytope {
    n: usize,
    reps: Vec<UnitVector>,
    facets: Vec<Facet>,
    pub symmetric: bool,
}

/// Covering radius of the vertex set, by two routes: the cap-apex scan
/// (max over facets of the distance from the facet's normal direction to
/// the nearest vertex) and the offset bound max_F sqrt(2 - 2 h_F). The two
/// agree for simplicial hulls; the offset bound is the certified one.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoveringRadius {
    pub exact: f64,
    pub certified_bound: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Inradius {
    pub radius: f64,
    /// Set when the facet is so thin that the value is below 1e-6.
    pub ill_conditioned: bool,
}

/// Build the facet complex of conv(+-reps). All points must be distinct
/// unit vectors of a common dimension n >= 3, with at least n of them, in
/// generic position (exactly degenerate tuples are rejected).
pub fn build_hull(reps: Vec<UnitVector>) -> Result<Polytope> {
    if reps.is_empty() {
        return Err(Error::invalid("no representatives given"));
    }
    let n = reps[0].dim();
    if reps.iter().any(|r| r.dim() != n) {
        return Err(Error::invalid("representatives have mixed dimensions"));
    }
    build::build(reps)
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of representative (antipodal pair) vertices.
    pub fn num_reps(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[UnitVector] {
        &self.reps
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Coordinates of a signed vertex id.
    pub fn vertex_coords(&self, id: i32) -> Vec<f64> {
        let rep = self.reps[(id.unsigned_abs() - 1) as usize].coords();
        if id > 0 {
            rep.to_vec()
        } else {
            rep.iter().map(|c| -c).collect()
        }
    }

    /// Indices of one facet per antipodal pair (the one with the smaller
    /// index).
    pub fn orbit_facets(&self) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| i < self.facets[i].twin)
            .collect()
    }

    /// Materialized vertex coordinates of one facet.
    pub fn facet_vertices(&self, fid: usize) -> Vec<Vec<f64>> {
        self.facets[fid]
            .vertex_ids
            .iter()
            .map(|&id| self.vertex_coords(id))
            .collect()
    }
}

/// Whether two facets have empty intersection; for a simplicial complex
/// this is exactly disjointness of their (signed) vertex sets.
pub fn non_neighbouring(p: &Polytope, i: usize, j: usize) -> Result<bool> {
    let nf = p.facets.len();
    if i >= nf || j >= nf {
        return Err(Error::invalid(format!("facet id out of range ({i}, {j})")));
    }
    Ok(disjoint_sorted(&p.facets[i].vertex_ids, &p.facets[j].vertex_ids))
}

pub(crate) fn disjoint_sorted(a: &[i32], b: &[i32]) -> bool {
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Norm of `z` in the space whose unit ball is the polytope:
/// max over facets of <z, f> / h.
pub fn polytope_norm(p: &Polytope, z: &[f64]) -> f64 {
    p.facets
        .iter()
        .map(|f| dot(z, f.unit_normal.coords()) / f.offset)
        .fold(0.0, f64::max)
}

/// Covering radius of the full signed vertex set on the sphere.
pub fn covering_radius(p: &Polytope) -> Result<CoveringRadius> {
    for r in &p.reps {
        if (norm(r.coords()) - 1.0).abs() > 1e-9 {
            return Err(Error::invalid("vertex off the unit sphere"));
        }
    }
    let mut exact: f64 = 0.0;
    let mut certified: f64 = 0.0;
    for (i, f) in p.facets.iter().enumerate() {
        if i > f.twin {
            continue; // mirrored facet gives the mirrored apex
        }
        let apex = f.unit_normal.coords();
        let mut nearest = f64::INFINITY;
        for r in &p.reps {
            let d_plus = dist(apex, r.coords());
            // distance to the antipode: |a + r|
            let mut s = 0.0;
            for k in 0..p.n {
                let t = apex[k] + r.coords()[k];
                s += t * t;
            }
            nearest = nearest.min(d_plus).min(s.sqrt());
        }
        exact = exact.max(nearest);
        certified = certified.max((2.0 - 2.0 * f.offset).max(0.0).sqrt());
    }
    Ok(CoveringRadius {
        exact,
        certified_bound: certified,
    })
}

/// Volume of the polytope by the cone decomposition
/// sum over facets of h * vol_{n-1}(facet) / n.
pub fn volume(p: &Polytope) -> f64 {
    let n = p.n;
    let ln_fact: f64 = ln_gamma(n as f64); // (n-1)!
    let fact = ln_fact.exp();
    p.facets
        .iter()
        .map(|f| {
            let verts = f
                .vertex_ids
                .iter()
                .map(|&id| p.vertex_coords(id))
                .collect::<Vec<_>>();
            let diffs: Vec<Vec<f64>> = verts[1..].iter().map(|v| sub(v, &verts[0])).collect();
            let refs: Vec<&[f64]> = diffs.iter().map(|d| d.as_slice()).collect();
            let facet_vol = gram_volume(&refs) / fact;
            f.offset * facet_vol / n as f64
        })
        .sum()
}

/// Maximum Euclidean edge length. Every pair of vertices inside one facet
/// spans an edge of that facet simplex, and faces of facets are faces of
/// the polytope, so the scan is exact for simplicial hulls.
pub fn max_edge_length(p: &Polytope) -> f64 {
    let mut best = 0.0f64;
    for f in &p.facets {
        let verts: Vec<Vec<f64>> = f.vertex_ids.iter().map(|&id| p.vertex_coords(id)).collect();
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                best = best.max(dist(&verts[i], &verts[j]));
            }
        }
    }
    best
}

/// Chebyshev (in)radius of a (k)-simplex given by k+1 vertices in R^n,
/// within its affine hull, solved as a small LP: maximize the margin to
/// every ridge hyperplane.
pub fn simplex_inradius(verts: &[Vec<f64>]) -> Result<Inradius> {
    let k = verts.len() - 1; // simplex dimension
    if k < 1 {
        return Err(Error::invalid("simplex needs at least 2 vertices"));
    }
    let diffs: Vec<Vec<f64>> = verts[1..].iter().map(|v| sub(v, &verts[0])).collect();
    let basis = orthonormal_basis(&diffs, 1e-12);
    if basis.len() != k {
        return Err(Error::InvalidState(
            "degenerate simplex: vertices are affinely dependent".into(),
        ));
    }
    // local coordinates
    let local: Vec<Vec<f64>> = verts
        .iter()
        .map(|v| {
            let d = sub(v, &verts[0]);
            basis.iter().map(|b| dot(&d, b)).collect()
        })
        .collect();
    // ridge j omits vertex j; its hyperplane normal in R^k
    let mut ineqs: Vec<(Vec<f64>, f64)> = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let ridge: Vec<&Vec<f64>> = local.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, v)| v).collect();
        let rdiffs: Vec<Vec<f64>> = ridge[1..].iter().map(|v| sub(v, ridge[0])).collect();
        let refs: Vec<&[f64]> = rdiffs.iter().map(|d| d.as_slice()).collect();
        let mut u = generalized_cross(&refs, k);
        let un = norm(&u);
        if un < 1e-300 {
            return Err(Error::InvalidState("degenerate ridge".into()));
        }
        for c in u.iter_mut() {
            *c /= un;
        }
        let mut c0 = dot(&u, ridge[0]);
        // orient outward: the omitted vertex is on the inner side
        if dot(&u, &local[j]) > c0 {
            for c in u.iter_mut() {
                *c = -*c;
            }
            c0 = -c0;
        }
        // <u, y> + m <= c0
        let mut row = u;
        row.push(1.0);
        ineqs.push((row, c0));
    }
    let problem = LpProblem {
        num_vars: k + 1,
        objective: {
            let mut c = vec![0.0; k + 1];
            c[k] = -1.0; // maximize m
            c
        },
        ineqs,
        eqs: vec![],
    };
    match lp::solve(&problem)? {
        LpOutcome::Optimal { x, .. } => {
            let radius = x[k].max(0.0);
            Ok(Inradius {
                radius,
                ill_conditioned: radius < 1e-6,
            })
        }
        other => Err(Error::InvalidState(format!(
            "inradius LP did not reach an optimum: {other:?}"
        ))),
    }
}

/// Inradius of one facet within its affine hull.
pub fn facet_inradius(p: &Polytope, fid: usize) -> Result<Inradius> {
    if fid >= p.facets.len() {
        return Err(Error::invalid(format!("facet id {fid} out of range")));
    }
    simplex_inradius(&p.facet_vertices(fid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{sample_unit_sphere, SeededStream};

    fn unit(v: Vec<f64>) -> UnitVector {
        UnitVector::normalized(v).unwrap()
    }

    fn cross_polytope(n: usize) -> Polytope {
        let reps: Vec<UnitVector> = (0..n)
            .map(|i| {
                let mut c = vec![0.0; n];
                c[i] = 1.0;
                UnitVector::try_new(c).unwrap()
            })
            .collect();
        build_hull(reps).unwrap()
    }

    #[test]
    fn cross_polytope_3d_facets() {
        let p = cross_polytope(3);
        assert_eq!(p.facets().len(), 8);
        let h = 1.0 / 3.0f64.sqrt();
        for f in p.facets() {
            assert!((f.offset - h).abs() < 1e-12);
            for c in f.unit_normal.coords() {
                assert!((c.abs() - h).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cross_polytope_higher_dims() {
        for n in [4usize, 5] {
            let p = cross_polytope(n);
            assert_eq!(p.facets().len(), 1 << n);
            let h = 1.0 / (n as f64).sqrt();
            for f in p.facets() {
                assert!((f.offset - h).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn random_3d_facet_count_identity() {
        // simplicial symmetric 3-polytope with 2N vertices has 4N-4 facets
        for seed in 0..5u64 {
            let reps = sample_unit_sphere(3, 100, SeededStream::new(seed, 0)).unwrap();
            let p = build_hull(reps).unwrap();
            assert_eq!(p.facets().len(), 4 * 100 - 4);
        }
    }

    #[test]
    fn euler_relation_3d() {
        let reps = sample_unit_sphere(3, 60, SeededStream::new(17, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        let v = 2 * p.num_reps();
        let f = p.facets().len();
        // count distinct edges from facet ridges
        let mut edges = std::collections::HashSet::new();
        let mut ridge_count = std::collections::HashMap::new();
        for facet in p.facets() {
            let ids = &facet.vertex_ids;
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let key = (ids[i].min(ids[j]), ids[i].max(ids[j]));
                    edges.insert(key);
                    *ridge_count.entry(key).or_insert(0u32) += 1;
                }
            }
        }
        assert_eq!(v as i64 - edges.len() as i64 + f as i64, 2);
        // every edge shared by exactly two facets
        assert!(ridge_count.values().all(|&c| c == 2));
    }

    #[test]
    fn random_4d_hull_verifies() {
        let reps = sample_unit_sphere(4, 30, SeededStream::new(3, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        assert!(p.facets().len() % 2 == 0);
        assert!(p.facets().len() > 2 * 30);
    }

    #[test]
    fn duplicate_rep_rejected() {
        let reps = vec![
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![0.0, 1.0, 0.0]),
            unit(vec![0.0, 0.0, 1.0]),
            unit(vec![1.0, 0.0, 0.0]),
        ];
        match build_hull(reps) {
            Err(Error::Degenerate(_)) => {}
            other => panic!("expected degeneracy error, got {other:?}"),
        }
    }

    #[test]
    fn antipodal_duplicate_rejected() {
        let reps = vec![
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![0.0, 1.0, 0.0]),
            unit(vec![0.0, 0.0, 1.0]),
            unit(vec![-1.0, 0.0, 0.0]),
        ];
        assert!(matches!(build_hull(reps), Err(Error::Degenerate(_))));
    }

    #[test]
    fn coplanar_quadruple_rejected() {
        // four sphere points exactly on the plane x = 0.5, plus e1:
        // the candidate facet through them is not simplicial
        let r = 0.75f64.sqrt();
        let reps = vec![
            unit(vec![1.0, 0.0, 0.0]),
            UnitVector::try_new(vec![0.5, r, 0.0]).unwrap(),
            UnitVector::try_new(vec![0.5, -r, 0.0]).unwrap(),
            UnitVector::try_new(vec![0.5, 0.0, r]).unwrap(),
            UnitVector::try_new(vec![0.5, 0.0, -r]).unwrap(),
        ];
        assert!(matches!(build_hull(reps), Err(Error::Degenerate(_))));
    }

    #[test]
    fn rank_deficient_rejected() {
        // all reps in the xy-plane
        let reps = vec![
            unit(vec![1.0, 0.0, 0.0]),
            unit(vec![0.6, 0.8, 0.0]),
            unit(vec![0.0, 1.0, 0.0]),
            unit(vec![-0.6, 0.8, 0.0]),
        ];
        assert!(matches!(build_hull(reps), Err(Error::RankDeficient(_))));
    }

    #[test]
    fn non_neighbouring_octahedron() {
        let p = cross_polytope(3);
        // find facet ids by vertex sets
        let find = |ids: &[i32]| -> usize {
            let mut key = ids.to_vec();
            key.sort_unstable();
            p.facets()
                .iter()
                .position(|f| f.vertex_ids == key)
                .unwrap()
        };
        let f_ppp = find(&[1, 2, 3]);
        let f_mmp = find(&[-1, -2, 3]);
        let f_mmm = find(&[-1, -2, -3]);
        assert!(!non_neighbouring(&p, f_ppp, f_mmp).unwrap()); // share +3
        assert!(non_neighbouring(&p, f_ppp, f_mmm).unwrap());
        assert!(!non_neighbouring(&p, f_ppp, f_ppp).unwrap());
        assert!(non_neighbouring(&p, 0, 999).is_err());
    }

    #[test]
    fn norm_on_cross_polytope() {
        let p = cross_polytope(3);
        // vertices have norm 1
        assert!((polytope_norm(&p, &[1.0, 0.0, 0.0]) - 1.0).abs() < 1e-12);
        // the cross-polytope norm is the l1 norm
        assert!((polytope_norm(&p, &[1.0, 1.0, 1.0]) - 3.0).abs() < 1e-12);
        // homogeneity
        let z = [0.3, -0.7, 0.2];
        let a = polytope_norm(&p, &z);
        let z2: Vec<f64> = z.iter().map(|c| 2.0 * c).collect();
        assert!((polytope_norm(&p, &z2) - 2.0 * a).abs() < 1e-12);
    }

    #[test]
    fn norm_dominates_euclidean() {
        let reps = sample_unit_sphere(3, 40, SeededStream::new(8, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        let mut rng = SeededStream::new(9, 0).rng();
        for _ in 0..50 {
            let z = crate::geom::sample_one(3, &mut rng);
            assert!(polytope_norm(&p, z.coords()) >= norm(z.coords()) - 1e-12);
        }
        // vertices are on the unit ball boundary
        for r in p.reps() {
            assert!((polytope_norm(&p, r.coords()) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn covering_radius_cross_polytope() {
        let p = cross_polytope(3);
        let cr = covering_radius(&p).unwrap();
        let expect = (2.0 - 2.0 / 3.0f64.sqrt()).sqrt();
        assert!((cr.exact - expect).abs() < 1e-12, "exact {}", cr.exact);
        assert!((cr.certified_bound - expect).abs() < 1e-12);
        assert!(cr.exact <= cr.certified_bound + 1e-12);
    }

    #[test]
    fn covering_radius_brute_force_oracle() {
        // dense geodesic grid: max over grid points of min distance to the
        // signed vertex set, compared with the returned radius
        let p = cross_polytope(3);
        let m = 1_000_000usize;
        let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
        let mut worst = 0.0f64;
        for i in 0..m {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / m as f64;
            let r = (1.0 - z * z).sqrt();
            let th = golden * i as f64;
            let q = [r * th.cos(), r * th.sin(), z];
            let mut best = f64::INFINITY;
            for rep in p.reps() {
                let c = rep.coords();
                let dp = ((q[0] - c[0]).powi(2) + (q[1] - c[1]).powi(2) + (q[2] - c[2]).powi(2))
                    .sqrt();
                let dm = ((q[0] + c[0]).powi(2) + (q[1] + c[1]).powi(2) + (q[2] + c[2]).powi(2))
                    .sqrt();
                best = best.min(dp).min(dm);
            }
            worst = worst.max(best);
        }
        let cr = covering_radius(&p).unwrap();
        // the grid undershoots by at most its own mesh width
        assert!(worst <= cr.exact + 1e-9);
        assert!(cr.exact - worst < 5e-3, "grid {worst} vs exact {}", cr.exact);
    }

    #[test]
    fn volume_cross_polytope() {
        let p = cross_polytope(3);
        assert!((volume(&p) - 4.0 / 3.0).abs() < 1e-12);
        let p4 = cross_polytope(4);
        assert!((volume(&p4) - 2.0f64.powi(4) / 24.0).abs() < 1e-12);
    }

    #[test]
    fn volume_bounded_by_ball() {
        for seed in [1u64, 2, 3] {
            let reps = sample_unit_sphere(3, 150, SeededStream::new(seed, 1)).unwrap();
            let p = build_hull(reps).unwrap();
            let v = volume(&p);
            assert!(v < 4.0 * std::f64::consts::PI / 3.0);
            assert!(v > 3.0); // 300 near-uniform vertices fill most of the ball
        }
    }

    #[test]
    fn volume_perturbed_cube() {
        // conv of the 8 cube vertices has volume 8/(3 sqrt 3); the exact
        // cube is non-simplicial, so test against a tiny perturbation
        let mut rng = SeededStream::new(12, 0).rng();
        use rand::Rng;
        let s = 1.0 / 3.0f64.sqrt();
        let mut reps = Vec::new();
        for signs in [[1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [1.0, -1.0, 1.0], [1.0, -1.0, -1.0]] {
            let v: Vec<f64> = signs
                .iter()
                .map(|&sg| sg * s + 1e-6 * (rng.gen::<f64>() - 0.5))
                .collect();
            reps.push(unit(v));
        }
        let p = build_hull(reps).unwrap();
        let expect = 8.0 / (3.0 * 3.0f64.sqrt());
        assert!((volume(&p) - expect).abs() < 1e-4, "vol = {}", volume(&p));
    }

    #[test]
    fn max_edge_cross_polytope() {
        let p = cross_polytope(3);
        assert!((max_edge_length(&p) - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn edges_shrink_under_refinement() {
        let a = {
            let reps = sample_unit_sphere(3, 50, SeededStream::new(5, 5)).unwrap();
            max_edge_length(&build_hull(reps).unwrap())
        };
        let b = {
            let reps = sample_unit_sphere(3, 800, SeededStream::new(5, 6)).unwrap();
            max_edge_length(&build_hull(reps).unwrap())
        };
        assert!(b < a);
    }

    #[test]
    fn facet_inradius_equilateral() {
        let p = cross_polytope(3);
        let r = facet_inradius(&p, 0).unwrap();
        // equilateral triangle of side sqrt 2: inradius = side / (2 sqrt 3)
        let expect = std::f64::consts::SQRT_2 / (2.0 * 3.0f64.sqrt());
        assert!((r.radius - expect).abs() < 1e-9, "r = {}", r.radius);
        assert!(!r.ill_conditioned);
    }

    #[test]
    fn inradius_matches_closed_form_on_random_simplices() {
        // closed form: r = k * V / sum of ridge volumes
        let mut rng = SeededStream::new(77, 0).rng();
        for n in [3usize, 4] {
            let k = n - 1;
            for _ in 0..5 {
                let verts: Vec<Vec<f64>> = (0..n)
                    .map(|_| crate::geom::sample_one(n, &mut rng).coords().to_vec())
                    .collect();
                let lp_r = simplex_inradius(&verts).unwrap().radius;

                let diffs: Vec<Vec<f64>> = verts[1..].iter().map(|v| sub(v, &verts[0])).collect();
                let refs: Vec<&[f64]> = diffs.iter().map(|d| d.as_slice()).collect();
                let factorial = |m: usize| -> f64 { (1..=m).map(|x| x as f64).product() };
                let vol = gram_volume(&refs) / factorial(k);
                let mut ridge_sum = 0.0;
                for j in 0..n {
                    let ridge: Vec<&Vec<f64>> =
                        verts.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, v)| v).collect();
                    let rd: Vec<Vec<f64>> = ridge[1..].iter().map(|v| sub(v, ridge[0])).collect();
                    let rrefs: Vec<&[f64]> = rd.iter().map(|d| d.as_slice()).collect();
                    ridge_sum += gram_volume(&rrefs) / factorial(k - 1);
                }
                let closed = k as f64 * vol / ridge_sum;
                assert!(
                    (lp_r - closed).abs() < 1e-9 * closed.max(1e-9),
                    "n = {n}: {lp_r} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn needle_simplex_flagged() {
        let verts = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.5, 1e-8, 0.0],
        ];
        let r = simplex_inradius(&verts).unwrap();
        assert!(r.radius < 1e-6);
        assert!(r.ill_conditioned);
    }

    #[test]
    fn symmetry_is_exact() {
        let reps = sample_unit_sphere(3, 80, SeededStream::new(21, 0)).unwrap();
        let p = build_hull(reps).unwrap();
        for (i, f) in p.facets().iter().enumerate() {
            let t = &p.facets()[f.twin];
            assert_eq!(t.twin, i);
            assert_eq!(f.offset.to_bits(), t.offset.to_bits());
            for k in 0..3 {
                assert_eq!(
                    f.unit_normal.coords()[k].to_bits(),
                    (-t.unit_normal.coords()[k]).to_bits()
                );
            }
            let mut mirrored: Vec<i32> = t.vertex_ids.iter().map(|&v| -v).collect();
            mirrored.sort_unstable();
            assert_eq!(f.vertex_ids, mirrored);
        }
    }
}
