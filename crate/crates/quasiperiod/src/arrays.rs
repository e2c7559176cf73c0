//! Fundamental periodicity arrays: border, period, suffix period, maxgap.

use crate::text::{PosArray, Text};
use crate::{Error, Result};

/// Border array: `B[i]` is the length of the longest border of `u[1..i]`
/// strictly shorter than `i`. Runs in `O(n)`.
pub fn border_array(u: &Text) -> Result<PosArray> {
    let n = u.len();
    if n == 0 {
        return Err(Error::EmptyText);
    }
    let s = u.bytes();
    let mut b = vec![0usize; n];
    for i in 1..n {
        let mut t = b[i - 1];
        while t > 0 && s[i] != s[t] {
            t = b[t - 1];
        }
        if s[i] == s[t] {
            t += 1;
        }
        b[i] = t;
    }
    Ok(b)
}

/// Period array: `P[i] = per(u[1..i]) = i - B[i]`. Non-decreasing.
pub fn period_array(u: &Text) -> Result<PosArray> {
    let b = border_array(u)?;
    Ok(b.iter().enumerate().map(|(i, &bi)| i + 1 - bi).collect())
}

/// Suffix period array: `P'[i] = per(u[i..n])`.
///
/// Computed as the period array of the reversed text, re-indexed:
/// `P'[i] = P_rev[n - i + 1]`.
pub fn suffix_period_array(u: &Text) -> Result<PosArray> {
    let mut p = period_array(&u.reversed())?;
    p.reverse();
    Ok(p)
}

/// Maximum difference of consecutive elements of a strictly increasing
/// sequence; `0` when the sequence has at most one element.
///
/// Sortedness is checked in debug builds only.
pub fn maxgap(sorted: &[usize]) -> usize {
    debug_assert!(
        sorted.windows(2).all(|w| w[0] < w[1]),
        "maxgap input must be strictly increasing"
    );
    sorted.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn t(s: &str) -> Text {
        Text::from_str(s).unwrap()
    }

    #[test]
    fn border_array_reference_values() {
        assert_eq!(
            border_array(&t("abaabaaabbaabaab")).unwrap(),
            vec![0, 0, 1, 1, 2, 3, 4, 1, 2, 0, 1, 1, 2, 3, 4, 5]
        );
        assert_eq!(border_array(&t("aaaa")).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(border_array(&t("abcd")).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn period_array_reference_values() {
        assert_eq!(
            period_array(&t("abaabaaabbaabaab")).unwrap(),
            vec![1, 2, 2, 3, 3, 3, 3, 7, 7, 10, 10, 11, 11, 11, 11, 11]
        );
        assert_eq!(period_array(&t("aaaa")).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(period_array(&t("abcd")).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn suffix_period_examples() {
        assert_eq!(suffix_period_array(&t("aaaa")).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(suffix_period_array(&t("abcd")).unwrap(), vec![4, 3, 2, 1]);
        let u = t("abaabaaabbaabaab");
        let p = suffix_period_array(&u).unwrap();
        // Cross-check every entry against the naive period of each suffix.
        for i in 1..=u.len() {
            assert_eq!(p[i - 1], oracle::per(u.suffix(i)), "suffix at {}", i);
        }
        assert_eq!(p[13 - 1], 3);
        assert_eq!(p[16 - 1], 1);
    }

    #[test]
    fn maxgap_examples() {
        assert_eq!(maxgap(&[1, 3, 8, 13, 17]), 5);
        assert_eq!(maxgap(&[7]), 0);
        assert_eq!(maxgap(&[]), 0);
        // Translation invariance.
        assert_eq!(maxgap(&[101, 103, 108, 113, 117]), 5);
    }

    #[test]
    fn period_plus_border_is_length() {
        for s in ["abaabaaabbaabaab", "aaaa", "abcd", "abababab", "x"] {
            let u = t(s);
            let p = period_array(&u).unwrap();
            let b = border_array(&u).unwrap();
            for i in 1..=u.len() {
                assert_eq!(p[i - 1] + b[i - 1], i);
            }
            assert!(p.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(Text::from_str(""), Err(Error::EmptyText)));
    }
}
