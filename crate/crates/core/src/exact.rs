//! Exact orientation predicates over floating-point input.
//!
//! Hull predicates run in f64 with an epsilon band; a sign decision inside
//! the band escalates to an exact integer determinant (every f64 is a
//! dyadic rational, so the escalation is lossless).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Decompose a finite f64 into (mantissa, exponent) with value m * 2^e.
fn decode(f: f64) -> (i64, i32) {
    debug_assert!(f.is_finite());
    let bits = f.to_bits();
    let neg = bits >> 63 == 1;
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    let (m, e) = if exp == 0 {
        (frac, -1074) // subnormal or zero
    } else {
        (frac | (1 << 52), exp - 1075)
    };
    (if neg { -m } else { m }, e)
}

/// Sign of the determinant of an integer matrix (Bareiss fraction-free
/// elimination). Returns -1, 0, or 1.
fn det_sign_bigint(mut m: Vec<Vec<BigInt>>) -> i8 {
    let n = m.len();
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let last = &m[n - 1][n - 1];
    if last.is_zero() {
        0
    } else if last.is_positive() {
        sign
    } else {
        -sign
    }
}

/// Exact sign of the homogeneous orientation determinant
/// det [[p_0, 1], [p_1, 1], ..., [p_n, 1]] for n+1 points in R^n.
///
/// Zero means the points lie on a common hyperplane.
pub fn orientation_sign(points: &[&[f64]]) -> i8 {
    let rows = points.len();
    let n = rows - 1;
    debug_assert!(points.iter().all(|p| p.len() == n));

    // Each row is scaled by a positive power of two to clear exponents;
    // positive row scalings do not change the sign.
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for p in points {
        let decoded: Vec<(i64, i32)> = p.iter().map(|&c| decode(c)).collect();
        // the homogeneous 1 entry has decomposition (1, 0)
        let min_e = decoded.iter().map(|&(_, e)| e).chain([0]).min().unwrap();
        let mut row: Vec<BigInt> = decoded
            .iter()
            .map(|&(mant, e)| BigInt::from(mant) << (e - min_e) as u32)
            .collect();
        row.push(BigInt::from(1) << (-min_e) as u32);
        m.push(row);
    }
    det_sign_bigint(m)
}
