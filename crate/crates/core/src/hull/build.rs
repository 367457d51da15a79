//! Randomized incremental facet enumeration for symmetric spherical
//! polytopes (beneath-beyond with a conflict graph).
//!
//! Antipodal point pairs are inserted consecutively, and after construction
//! every facet is paired with its mirror; the mirror's normal and offset are
//! copied by negation so the stored complex is exactly centrally symmetric.

use std::collections::HashMap;

use super::{Facet, Polytope};
use crate::error::{Error, Result};
use crate::exact::orientation_sign;
use crate::geom::linalg::{dot, generalized_cross, norm, scale, sub};
use crate::geom::UnitVector;

/// Float margins inside this band escalate to the exact predicate.
const BAND: f64 = 1e-12;

struct BFacet {
    verts: Vec<u32>,
    /// nbrs[k] is the facet across the ridge omitting verts[k].
    nbrs: Vec<u32>,
    normal: Vec<f64>,
    offset: f64,
    /// Exact homogeneous orientation sign that classifies a point as beyond.
    beyond_sign: i8,
    conflicts: Vec<u32>,
    alive: bool,
}

struct Builder {
    n: usize,
    pts: Vec<Vec<f64>>,
    centroid: Vec<f64>,
    facets: Vec<BFacet>,
    pt_conflicts: Vec<Vec<u32>>,
    inserted: Vec<bool>,
    visible_stamp: Vec<u32>,
    point_stamp: Vec<u32>,
    generation: u32,
}

fn point_name(p: u32) -> String {
    let rep = (p >> 1) + 1;
    if p & 1 == 0 {
        format!("+{rep}")
    } else {
        format!("-{rep}")
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut x = *state;
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

impl Builder {
    /// Non-strict visibility: a point exactly on the facet hyperplane counts
    /// as beyond, so coplanar patches are re-triangulated from the new point
    /// during construction. Coplanarity that survives to the final hull is
    /// rejected afterwards.
    fn beyond(&mut self, fid: u32, q: u32) -> bool {
        let f = &self.facets[fid as usize];
        let margin = dot(&f.normal, &self.pts[q as usize]) - f.offset;
        if margin > BAND {
            return true;
        }
        if margin < -BAND {
            return false;
        }
        let mut refs: Vec<&[f64]> = f
            .verts
            .iter()
            .map(|&v| self.pts[v as usize].as_slice())
            .collect();
        refs.push(&self.pts[q as usize]);
        let s = orientation_sign(&refs);
        s == 0 || s == f.beyond_sign
    }

    fn make_facet(&self, verts: Vec<u32>) -> Result<BFacet> {
        let n = self.n;
        let w0 = &self.pts[verts[0] as usize];
        let diffs: Vec<Vec<f64>> = verts[1..]
            .iter()
            .map(|&v| sub(&self.pts[v as usize], w0))
            .collect();
        let diff_refs: Vec<&[f64]> = diffs.iter().map(|d| d.as_slice()).collect();
        let g = generalized_cross(&diff_refs, n);
        let gn = norm(&g);
        if gn < 1e-300 {
            return Err(Error::Degenerate(format!(
                "flat facet candidate [{}]",
                verts.iter().map(|&v| point_name(v)).collect::<Vec<_>>().join(", ")
            )));
        }
        let mut normal = scale(&g, 1.0 / gn);
        let mean_off = |f: &[f64]| -> f64 {
            verts.iter().map(|&v| dot(f, &self.pts[v as usize])).sum::<f64>() / n as f64
        };
        let mut offset = mean_off(&normal);
        let margin_c = dot(&normal, &self.centroid) - offset;
        // The homogeneous orientation H(x) of (verts.., x) satisfies
        // sign(<normal, x> - offset) = -sign(H(x)) for the unflipped normal.
        let flipped = if margin_c < -BAND {
            false
        } else if margin_c > BAND {
            true
        } else {
            let mut refs: Vec<&[f64]> = verts
                .iter()
                .map(|&v| self.pts[v as usize].as_slice())
                .collect();
            refs.push(&self.centroid);
            match orientation_sign(&refs) {
                0 => {
                    return Err(Error::Degenerate(
                        "interior reference point lies on a facet hyperplane".into(),
                    ))
                }
                s => s == -1,
            }
        };
        if flipped {
            normal = scale(&normal, -1.0);
            offset = mean_off(&normal);
        }
        Ok(BFacet {
            nbrs: vec![u32::MAX; verts.len()],
            verts,
            normal,
            offset,
            beyond_sign: if flipped { 1 } else { -1 },
            conflicts: Vec::new(),
            alive: true,
        })
    }

    /// Greedy farthest-from-affine-hull choice of n+1 spanning points.
    fn initial_simplex(&self) -> Result<Vec<u32>> {
        let n = self.n;
        let total = self.pts.len();
        let mut chosen: Vec<u32> = vec![0];
        let mut basis: Vec<Vec<f64>> = Vec::new();
        let origin = self.pts[0].clone();
        while chosen.len() < n + 1 {
            let mut best = (0u32, 0.0f64);
            for q in 0..total as u32 {
                if chosen.contains(&q) {
                    continue;
                }
                let mut r = sub(&self.pts[q as usize], &origin);
                for b in &basis {
                    let c = dot(&r, b);
                    for i in 0..n {
                        r[i] -= c * b[i];
                    }
                }
                let d = norm(&r);
                if d > best.1 {
                    best = (q, d);
                }
            }
            if best.1 < 1e-9 {
                return Err(Error::RankDeficient(format!(
                    "points span only {} of {} dimensions",
                    chosen.len() - 1,
                    n
                )));
            }
            let mut r = sub(&self.pts[best.0 as usize], &origin);
            for b in &basis {
                let c = dot(&r, b);
                for i in 0..n {
                    r[i] -= c * b[i];
                }
            }
            let d = norm(&r);
            basis.push(scale(&r, 1.0 / d));
            chosen.push(best.0);
        }
        Ok(chosen)
    }

    fn insert_point(&mut self, p: u32) -> Result<()> {
        let n = self.n;
        // visible facets from the conflict graph
        let visible: Vec<u32> = self.pt_conflicts[p as usize]
            .iter()
            .copied()
            .filter(|&f| self.facets[f as usize].alive)
            .collect();
        if visible.is_empty() {
            return Err(Error::Degenerate(format!(
                "point {} is not outside the current hull (duplicate or interior point)",
                point_name(p)
            )));
        }
        self.generation += 1;
        let gen = self.generation;
        for &f in &visible {
            self.visible_stamp[f as usize] = gen;
        }
        // horizon ridges: (owner facet, omitted slot, hidden facet, slot in hidden)
        let mut horizon: Vec<(u32, usize, u32, usize)> = Vec::new();
        for &fv in &visible {
            for k in 0..n {
                let g = self.facets[fv as usize].nbrs[k];
                if self.visible_stamp[g as usize] != gen {
                    let slot_g = self.facets[g as usize]
                        .nbrs
                        .iter()
                        .position(|&x| x == fv)
                        .expect("neighbor links out of sync");
                    horizon.push((fv, k, g, slot_g));
                }
            }
        }
        if horizon.is_empty() {
            return Err(Error::Degenerate(format!(
                "no horizon found while inserting point {}",
                point_name(p)
            )));
        }
        for &f in &visible {
            self.facets[f as usize].alive = false;
        }

        let mut ridge_map: HashMap<Vec<u32>, (u32, usize)> = HashMap::new();
        for (owner, k, g, slot_g) in horizon {
            let owner_verts = self.facets[owner as usize].verts.clone();
            let mut verts: Vec<u32> = Vec::with_capacity(n);
            verts.extend(owner_verts.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v));
            verts.push(p);
            let mut f = self.make_facet(verts)?;
            f.nbrs[n - 1] = g;
            let fid = self.facets.len() as u32;

            // conflicts: candidates are the dead owner's and the hidden
            // neighbor's conflict lists
            self.generation += 1;
            let tag = self.generation;
            let mut candidates: Vec<u32> = Vec::new();
            for src in [owner, g] {
                for &q in &self.facets[src as usize].conflicts {
                    if q != p
                        && !self.inserted[q as usize]
                        && self.point_stamp[q as usize] != tag
                    {
                        self.point_stamp[q as usize] = tag;
                        candidates.push(q);
                    }
                }
            }
            self.facets.push(f);
            for q in candidates {
                if self.beyond(fid, q) {
                    self.facets[fid as usize].conflicts.push(q);
                    self.pt_conflicts[q as usize].push(fid);
                }
            }

            self.facets[g as usize].nbrs[slot_g] = fid;
            // adjacency between the new cone facets, keyed by the sorted
            // sub-ridge (always contains p)
            for k2 in 0..(n - 1) {
                let mut key: Vec<u32> = self.facets[fid as usize]
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k2)
                    .map(|(_, &v)| v)
                    .collect();
                key.sort_unstable();
                match ridge_map.remove(&key) {
                    Some((fid2, slot2)) => {
                        self.facets[fid as usize].nbrs[k2] = fid2;
                        self.facets[fid2 as usize].nbrs[slot2] = fid;
                    }
                    None => {
                        ridge_map.insert(key, (fid, k2));
                    }
                }
            }
        }
        if !ridge_map.is_empty() {
            return Err(Error::InvalidState(
                "unmatched ridges after point insertion".into(),
            ));
        }
        self.inserted[p as usize] = true;
        Ok(())
    }
}

pub(super) fn build(reps: Vec<UnitVector>) -> Result<Polytope> {
    let n_reps = reps.len();
    let n = reps[0].dim();
    if n < 3 {
        return Err(Error::invalid("hull construction needs dimension >= 3"));
    }
    if n_reps < n {
        return Err(Error::invalid(format!(
            "need at least n = {n} representatives, got {n_reps}"
        )));
    }

    // signed points: 2i = +reps[i], 2i+1 = -reps[i]
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(2 * n_reps);
    for r in &reps {
        pts.push(r.coords().to_vec());
        pts.push(r.antipode().coords().to_vec());
    }

    // exact duplicate / antipodal-duplicate detection
    let mut seen: HashMap<Vec<u64>, u32> = HashMap::with_capacity(pts.len());
    for (i, pt) in pts.iter().enumerate() {
        // normalize -0.0 so antipodes of axis points hash equal
        let key: Vec<u64> = pt
            .iter()
            .map(|&c| if c == 0.0 { 0u64 } else { c.to_bits() })
            .collect();
        if let Some(&j) = seen.get(&key) {
            return Err(Error::Degenerate(format!(
                "points {} and {} coincide",
                point_name(j),
                point_name(i as u32)
            )));
        }
        seen.insert(key, i as u32);
    }

    let total = pts.len();
    let mut b = Builder {
        n,
        pts,
        centroid: vec![0.0; n],
        facets: Vec::new(),
        pt_conflicts: vec![Vec::new(); total],
        inserted: vec![false; total],
        visible_stamp: Vec::new(),
        point_stamp: vec![0; total],
        generation: 0,
    };

    let chosen = b.initial_simplex()?;
    for i in 0..n {
        let mut acc = 0.0;
        for &c in &chosen {
            acc += b.pts[c as usize][i];
        }
        b.centroid[i] = acc / chosen.len() as f64;
    }
    // the n+1 simplex facets: facet_i omits chosen[i]
    for i in 0..=n {
        let verts: Vec<u32> = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| v)
            .collect();
        let mut f = b.make_facet(verts)?;
        // the ridge of facet_i omitting chosen[j] is shared with facet_j
        for (k, nb) in f.nbrs.iter_mut().enumerate() {
            // verts[k] is chosen[k] for k < i, chosen[k+1] for k >= i
            let omitted_chosen = if k < i { k } else { k + 1 };
            *nb = omitted_chosen as u32;
        }
        b.facets.push(f);
    }
    for &c in &chosen {
        b.inserted[c as usize] = true;
    }
    b.visible_stamp = vec![0; b.facets.len()];
    // seed the conflict graph
    for fid in 0..b.facets.len() as u32 {
        for q in 0..total as u32 {
            if !b.inserted[q as usize] && b.beyond(fid, q) {
                b.facets[fid as usize].conflicts.push(q);
                b.pt_conflicts[q as usize].push(fid);
            }
        }
    }

    // antipodal pairs in a deterministic shuffled order
    let mut order: Vec<usize> = (0..n_reps).collect();
    let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ (n_reps as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    for i in (1..order.len()).rev() {
        let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    for r in order {
        for p in [2 * r as u32, 2 * r as u32 + 1] {
            if !b.inserted[p as usize] {
                b.visible_stamp.resize(b.facets.len(), 0);
                b.insert_point(p)?;
            }
        }
    }

    reject_surviving_coplanarity(&b)?;
    finalize(b, reps)
}

/// A facet candidate with more than n vertices on one hyperplane shows up
/// in the finished complex as a pair of coplanar neighbors. Reject it,
/// naming the offending n+1 points.
fn reject_surviving_coplanarity(b: &Builder) -> Result<()> {
    let n = b.n;
    for (i, f) in b.facets.iter().enumerate() {
        if !f.alive {
            continue;
        }
        for k in 0..n {
            let g = f.nbrs[k] as usize;
            if g <= i {
                continue;
            }
            let gf = &b.facets[g];
            let slot = gf
                .nbrs
                .iter()
                .position(|&x| x as usize == i)
                .expect("neighbor links out of sync");
            let opp = gf.verts[slot];
            let margin = dot(&f.normal, &b.pts[opp as usize]) - f.offset;
            if margin.abs() <= BAND {
                let mut refs: Vec<&[f64]> =
                    f.verts.iter().map(|&v| b.pts[v as usize].as_slice()).collect();
                refs.push(&b.pts[opp as usize]);
                if orientation_sign(&refs) == 0 {
                    let mut names: Vec<String> =
                        f.verts.iter().map(|&v| point_name(v)).collect();
                    names.push(point_name(opp));
                    return Err(Error::Degenerate(format!(
                        "points [{}] lie on a common hyperplane through a facet candidate",
                        names.join(", ")
                    )));
                }
            }
        }
    }
    Ok(())
}

fn finalize(b: Builder, reps: Vec<UnitVector>) -> Result<Polytope> {
    let n = b.n;
    let n_reps = reps.len();
    let signed_id = |p: u32| -> i32 {
        let rep = (p >> 1) as i32 + 1;
        if p & 1 == 0 {
            rep
        } else {
            -rep
        }
    };

    let mut facets: Vec<Facet> = Vec::new();
    for f in b.facets.into_iter().filter(|f| f.alive) {
        let mut ids: Vec<i32> = f.verts.iter().map(|&v| signed_id(v)).collect();
        ids.sort_unstable();
        facets.push(Facet {
            vertex_ids: ids,
            unit_normal: UnitVector::normalized(f.normal)?,
            offset: f.offset,
            twin: usize::MAX,
        });
    }
    facets.sort_by(|a, b| a.vertex_ids.cmp(&b.vertex_ids));

    // antipodal pairing and exact mirror geometry
    let mut index: HashMap<Vec<i32>, usize> = HashMap::with_capacity(facets.len());
    for (i, f) in facets.iter().enumerate() {
        index.insert(f.vertex_ids.clone(), i);
    }
    for i in 0..facets.len() {
        let mut mirror: Vec<i32> = facets[i].vertex_ids.iter().map(|&v| -v).collect();
        mirror.sort_unstable();
        let j = *index.get(&mirror).ok_or_else(|| {
            Error::InvalidState(format!(
                "facet {:?} has no antipodal partner",
                facets[i].vertex_ids
            ))
        })?;
        facets[i].twin = j;
        if i < j {
            let normal = facets[i].unit_normal.antipode();
            let offset = facets[i].offset;
            facets[j].unit_normal = normal;
            facets[j].offset = offset;
        }
    }

    let p = Polytope {
        n,
        reps,
        facets,
        symmetric: true,
    };
    verify(&p, n_reps)?;
    Ok(p)
}

/// Structural verification run on every built hull.
fn verify(p: &Polytope, n_reps: usize) -> Result<()> {
    use rayon::prelude::*;
    let n = p.n;
    let fail = |msg: String| Err(Error::InvalidState(format!("hull verification: {msg}")));

    let mut seen_pos = vec![false; n_reps];
    let mut seen_neg = vec![false; n_reps];
    for f in &p.facets {
        if f.vertex_ids.len() != n {
            return fail(format!("facet with {} vertices", f.vertex_ids.len()));
        }
        if !(f.offset > 0.0 && f.offset < 1.0) {
            return fail(format!("facet offset {} outside (0, 1)", f.offset));
        }
        for &id in &f.vertex_ids {
            if id > 0 {
                seen_pos[(id - 1) as usize] = true;
            } else {
                seen_neg[(-id - 1) as usize] = true;
            }
        }
    }
    if !(seen_pos.iter().all(|&x| x) && seen_neg.iter().all(|&x| x)) {
        return fail("some signed vertex lies on no facet".into());
    }

    let bad = p
        .facets
        .par_iter()
        .enumerate()
        .find_map_any(|(i, f)| {
            let normal = f.unit_normal.coords();
            for &id in &f.vertex_ids {
                let v = p.vertex_coords(id);
                if (dot(normal, &v) - f.offset).abs() > 1e-9 {
                    return Some(format!("facet {i}: vertex {id} off its hyperplane"));
                }
            }
            for q in 0..(2 * n_reps) {
                let id = if q % 2 == 0 { (q / 2 + 1) as i32 } else { -((q / 2 + 1) as i32) };
                let v = p.vertex_coords(id);
                if dot(normal, &v) - f.offset > 1e-9 {
                    return Some(format!("facet {i}: vertex {id} beyond its hyperplane"));
                }
            }
            let t = f.twin;
            if t >= p.facets.len() || p.facets[t].twin != i {
                return Some(format!("facet {i}: broken twin link"));
            }
            let tw = &p.facets[t];
            for k in 0..n {
                if tw.unit_normal.coords()[k] != -normal[k] {
                    return Some(format!("facet {i}: twin normal not an exact mirror"));
                }
            }
            if tw.offset != f.offset {
                return Some(format!("facet {i}: twin offset differs"));
            }
            None
        });
    if let Some(msg) = bad {
        return fail(msg);
    }
    Ok(())
}
