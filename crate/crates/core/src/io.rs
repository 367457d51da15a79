//! Polytope file format and report helpers.
//!
//! Text format, bit-exact round trip at 17 significant digits:
//!   line 1: `n N`
//!   lines 2..N+1: n space-separated coordinates of each representative.

use crate::error::{Error, Result};
use crate::geom::{linalg, UnitVector};
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::Path;

/// Render representatives in the polytope text format.
pub fn format_reps(reps: &[UnitVector]) -> String {
    let n = reps[0].dim();
    let mut out = String::with_capacity(reps.len() * n * 25 + 16);
    out.push_str(&format!("{} {}\n", n, reps.len()));
    for r in reps {
        let row: Vec<String> = r.coords().iter().map(|c| format!("{c:.16e}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_reps(path: &Path, reps: &[UnitVector]) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(format_reps(reps).as_bytes())?;
    Ok(())
}

/// Parse the polytope text format. Coordinates must be unit vectors to
/// within 1e-9; they are renormalized exactly onto the sphere.
pub fn parse_reps(text: &str) -> Result<Vec<UnitVector>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty polytope file".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad header: expected `n N`".into()))?;
    let count: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad header: expected `n N`".into()))?;
    if it.next().is_some() {
        return Err(Error::Parse("bad header: trailing tokens".into()));
    }
    let mut reps = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        if i >= count {
            return Err(Error::Parse(format!("more than {count} coordinate lines")));
        }
        let coords: Vec<f64> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{t}` on line {}", i + 2)))
            })
            .collect::<Result<_>>()?;
        if coords.len() != n {
            return Err(Error::Parse(format!(
                "line {}: expected {n} coordinates, got {}",
                i + 2,
                coords.len()
            )));
        }
        let nrm = linalg::norm(&coords);
        if (nrm - 1.0).abs() > 1e-9 {
            return Err(Error::Parse(format!(
                "line {}: vertex norm {nrm} deviates from 1 beyond 1e-9",
                i + 2
            )));
        }
        // keep bits untouched when already unit to tolerance, so written
        // files round-trip exactly; renormalize only coarser input
        reps.push(match UnitVector::try_new(coords.clone()) {
            Ok(u) => u,
            Err(_) => UnitVector::normalized(coords)?,
        });
    }
    if reps.len() != count {
        return Err(Error::Parse(format!(
            "expected {count} coordinate lines, got {}",
            reps.len()
        )));
    }
    Ok(reps)
}

pub fn read_reps(path: &Path) -> Result<Vec<UnitVector>> {
    let text = std::fs::read_to_string(path)?;
    parse_reps(&text)
}

/// SHA-256 of a file's bytes, hex encoded.
pub fn file_sha256(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

/// SHA-256 of a string, hex encoded.
pub fn text_sha256(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{sample_unit_sphere, SeededStream};
    use proptest::prelude::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let reps = sample_unit_sphere(4, 25, SeededStream::new(42, 0)).unwrap();
        let text = format_reps(&reps);
        let back = parse_reps(&text).unwrap();
        assert_eq!(back.len(), reps.len());
        for (a, b) in reps.iter().zip(&back) {
            for (x, y) in a.coords().iter().zip(b.coords()) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
        // and the rendered text itself is stable
        assert_eq!(format_reps(&back), text);
    }

    proptest! {
        #[test]
        fn round_trip_random_dims(seed in 0u64..500, n in 3usize..6, count in 3usize..12) {
            let count = count.max(n);
            let reps = sample_unit_sphere(n, count, SeededStream::new(seed, 1)).unwrap();
            let back = parse_reps(&format_reps(&reps)).unwrap();
            for (a, b) in reps.iter().zip(&back) {
                for (x, y) in a.coords().iter().zip(b.coords()) {
                    prop_assert_eq!(x.to_bits(), y.to_bits());
                }
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_reps("").is_err());
        assert!(parse_reps("3\n").is_err());
        assert!(parse_reps("3 1\n1 0\n").is_err());
        assert!(parse_reps("3 2\n1 0 0\n").is_err());
        assert!(parse_reps("3 1\n2 0 0\n").is_err()); // not unit
        assert!(parse_reps("3 1\n1 0 zebra\n").is_err());
    }
}
