//! Combination counting and enumeration.

/// Binomial coefficient as u128, saturating at u128::MAX on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// Advance `idx` to the next k-combination of {0, .., n-1} in lexicographic
/// order. Returns false when the last combination has been passed.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if idx[i] != i + n - k {
            break;
        }
    }
    idx[i] += 1;
    for j in (i + 1)..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// First k-combination [0, 1, .., k-1], or None when k > n.
pub fn first_combination(n: usize, k: usize) -> Option<Vec<usize>> {
    if k > n {
        None
    } else {
        Some((0..k).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(434, 3), 13_530_384);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), binomial(200, 100)); // no panic
    }

    #[test]
    fn enumerates_all_combinations() {
        let mut idx = first_combination(6, 3).unwrap();
        let mut count = 1u32;
        while next_combination(&mut idx, 6) {
            count += 1;
            assert!(idx.windows(2).all(|w| w[0] < w[1]));
            assert!(*idx.last().unwrap() < 6);
        }
        assert_eq!(count as u128, binomial(6, 3));
    }
}
