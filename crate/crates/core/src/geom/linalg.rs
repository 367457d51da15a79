//! Dense vector / small-matrix primitives used throughout the crate.

/// Euclidean inner product.
#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// Euclidean norm.
#[inline]
pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Euclidean distance.
#[inline]
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        let d = a[i] - b[i];
        s += d * d;
    }
    s.sqrt()
}

#[inline]
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[inline]
pub fn scale(a: &[f64], c: f64) -> Vec<f64> {
    a.iter().map(|x| c * x).collect()
}

#[inline]
pub fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

/// a + c * b
#[inline]
pub fn axpy(a: &[f64], c: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

/// 3x3 determinant, expanded directly.
#[inline]
pub fn det3(a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Determinant of an n x n matrix given as row-major scratch data, in place.
///
/// Partial-pivot LU; a zero pivot column means a singular matrix and yields
/// exactly 0.0.
pub fn det_in_place(m: &mut [f64], n: usize) -> f64 {
    debug_assert_eq!(m.len(), n * n);
    let mut det = 1.0;
    for k in 0..n {
        // pivot search in column k
        let mut p = k;
        let mut best = m[k * n + k].abs();
        for r in (k + 1)..n {
            let v = m[r * n + k].abs();
            if v > best {
                best = v;
                p = r;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if p != k {
            for c in 0..n {
                m.swap(k * n + c, p * n + c);
            }
            det = -det;
        }
        let pivot = m[k * n + k];
        det *= pivot;
        for r in (k + 1)..n {
            let f = m[r * n + k] / pivot;
            if f != 0.0 {
                for c in (k + 1)..n {
                    m[r * n + c] -= f * m[k * n + c];
                }
            }
        }
    }
    det
}

/// Determinant of n row vectors of dimension n.
pub fn det_rows(rows: &[&[f64]]) -> f64 {
    let n = rows.len();
    if n == 3 {
        return det3(rows[0], rows[1], rows[2]);
    }
    let mut m = Vec::with_capacity(n * n);
    for r in rows {
        debug_assert_eq!(r.len(), n);
        m.extend_from_slice(r);
    }
    det_in_place(&mut m, n)
}

/// Generalized cross product: the vector orthogonal to the k = n-1 given
/// rows, with components (-1)^j det(rows minus column j).
///
/// Returns the zero vector when the rows are linearly dependent.
pub fn generalized_cross(rows: &[&[f64]], n: usize) -> Vec<f64> {
    debug_assert_eq!(rows.len(), n - 1);
    if n == 3 {
        let (a, b) = (rows[0], rows[1]);
        return vec![
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ];
    }
    let k = n - 1;
    let mut out = vec![0.0; n];
    let mut minor = vec![0.0; k * k];
    for j in 0..n {
        for (r, row) in rows.iter().enumerate() {
            let mut cc = 0;
            for c in 0..n {
                if c != j {
                    minor[r * k + cc] = row[c];
                    cc += 1;
                }
            }
        }
        let d = det_in_place(&mut minor, k);
        out[j] = if j % 2 == 0 { d } else { -d };
    }
    out
}

/// Volume of the parallelepiped spanned by k vectors in R^n via the Gram
/// determinant: sqrt(det(D D^T)).
pub fn gram_volume(rows: &[&[f64]]) -> f64 {
    let k = rows.len();
    let mut g = vec![0.0; k * k];
    for i in 0..k {
        for j in i..k {
            let v = dot(rows[i], rows[j]);
            g[i * k + j] = v;
            g[j * k + i] = v;
        }
    }
    det_in_place(&mut g, k).max(0.0).sqrt()
}

/// Orthonormal basis of the span of the given rows (modified Gram-Schmidt).
///
/// Rows whose residual falls below `tol` are dropped; the returned basis may
/// therefore have fewer vectors than the input.
pub fn orthonormal_basis(rows: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut v = row.clone();
        for b in &basis {
            let c = dot(&v, b);
            for i in 0..v.len() {
                v[i] -= c * b[i];
            }
        }
        // second pass for numerical orthogonality
        for b in &basis {
            let c = dot(&v, b);
            for i in 0..v.len() {
                v[i] -= c * b[i];
            }
        }
        let nv = norm(&v);
        if nv > tol {
            basis.push(scale(&v, 1.0 / nv));
        }
    }
    basis
}

/// Two unit vectors orthogonal to `v` and to each other (n >= 3).
pub fn tangent_pair(v: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = v.len();
    // seed with the coordinate axis least aligned with v
    let mut k = 0;
    let mut best = f64::INFINITY;
    for i in 0..n {
        if v[i].abs() < best {
            best = v[i].abs();
            k = i;
        }
    }
    let mut e = vec![0.0; n];
    e[k] = 1.0;
    let mut t1 = axpy(&e, -dot(&e, v), v);
    let n1 = norm(&t1);
    t1 = scale(&t1, 1.0 / n1);
    // second axis
    let mut k2 = 0;
    let mut best2 = f64::INFINITY;
    for i in 0..n {
        let score = v[i].abs() + t1[i].abs();
        if i != k && score < best2 {
            best2 = score;
            k2 = i;
        }
    }
    let mut e2 = vec![0.0; n];
    e2[k2] = 1.0;
    let mut t2 = axpy(&e2, -dot(&e2, v), v);
    t2 = axpy(&t2, -dot(&t2, &t1), &t1);
    let n2 = norm(&t2);
    t2 = scale(&t2, 1.0 / n2);
    (t1, t2)
}
