//! Naive reference implementations used as ground truth in tests.
//!
//! Everything here works directly from the definitions by exhaustive search
//! and shares nothing with the fast modules beyond [`Text`]. The functions
//! are deliberately slow; they refuse inputs longer than [`MAX_ORACLE_LEN`]
//! to keep accidental blowups out of CI.

use crate::text::{PosArray, Text};

/// Upper bound on input length accepted by the oracle.
pub const MAX_ORACLE_LEN: usize = 5000;

fn guard(u: &Text) {
    assert!(
        u.len() <= MAX_ORACLE_LEN,
        "oracle refuses n > {} (got {})",
        MAX_ORACLE_LEN,
        u.len()
    );
}

/// All 1-based starting positions of `s` in `u`, by naive scan.
pub fn occurrences(u: &Text, s: &[u8]) -> Vec<usize> {
    guard(u);
    assert!(!s.is_empty());
    let text = u.bytes();
    let mut out = Vec::new();
    if s.len() > text.len() {
        return out;
    }
    for start in 0..=text.len() - s.len() {
        if &text[start..start + s.len()] == s {
            out.push(start + 1);
        }
    }
    out
}

/// Smallest period of `w`: the least `p >= 1` with `w[i] = w[i+p]` for all
/// valid `i`.
pub fn per(w: &[u8]) -> usize {
    assert!(!w.is_empty());
    let n = w.len();
    for p in 1..n {
        if (0..n - p).all(|i| w[i] == w[i + p]) {
            return p;
        }
    }
    n
}

/// Length of the longest border of `w` strictly shorter than `w`.
pub fn border(w: &[u8]) -> usize {
    assert!(!w.is_empty());
    let n = w.len();
    (1..n).rev().find(|&b| w[..b] == w[n - b..]).unwrap_or(0)
}

/// Does `s` cover `w`, i.e. is every position of `w` inside an occurrence
/// of `s`?
fn covers_word(w: &[u8], s: &[u8]) -> bool {
    assert!(!s.is_empty());
    if s.len() > w.len() {
        return false;
    }
    // A cover is in particular a prefix and a suffix.
    if &w[..s.len()] != s || &w[w.len() - s.len()..] != s {
        return false;
    }
    let mut covered_to = 0; // prefix w[..covered_to] is covered so far
    for start in 0..=w.len() - s.len() {
        if &w[start..start + s.len()] == s {
            if start > covered_to {
                return false;
            }
            covered_to = start + s.len();
        }
    }
    covered_to == w.len()
}

/// Does `s` cover `u`?
pub fn is_cover(u: &Text, s: &[u8]) -> bool {
    guard(u);
    covers_word(u.bytes(), s)
}

/// Is `s` a seed of `u`: a factor of `u` such that `u` is a factor of some
/// string `w` covered by `s`?
///
/// Directly from the definition: try every extension `w` made of a proper
/// suffix of `s`, then `u`, then a proper prefix of `s`.
pub fn is_seed(u: &Text, s: &[u8]) -> bool {
    guard(u);
    assert!(!s.is_empty());
    if occurrences(u, s).is_empty() {
        return false;
    }
    let text = u.bytes();
    let m = s.len();
    // w = s[a..] + u + s[..b] with a, b in [0, m). Prune on the prefix and
    // suffix of w, which any cover must match.
    let mut left_ok = Vec::new();
    for a in 0..m {
        let mut w = Vec::with_capacity(m - a + text.len());
        w.extend_from_slice(&s[a..]);
        w.extend_from_slice(text);
        let ok = w.len() >= m && &w[..m] == s;
        if ok {
            left_ok.push(a);
        }
    }
    let mut right_ok = Vec::new();
    for b in 0..m {
        let mut w = Vec::with_capacity(text.len() + b);
        w.extend_from_slice(text);
        w.extend_from_slice(&s[..b]);
        let ok = w.len() >= m && &w[w.len() - m..] == s;
        if ok {
            right_ok.push(b);
        }
    }
    for &a in &left_ok {
        for &b in &right_ok {
            let mut w = Vec::with_capacity(m - a + text.len() + b);
            w.extend_from_slice(&s[a..]);
            w.extend_from_slice(text);
            w.extend_from_slice(&s[..b]);
            if covers_word(&w, s) {
                return true;
            }
        }
    }
    false
}

/// Is `s` a left seed of `u`: a prefix of `u` that is a seed of `u`?
pub fn is_left_seed(u: &Text, s: &[u8]) -> bool {
    guard(u);
    !s.is_empty() && s.len() <= u.len() && &u.bytes()[..s.len()] == s && is_seed(u, s)
}

/// Is `s` a right seed of `u`? Defined by reversal: `s^R` must be a left
/// seed of `u^R`.
pub fn is_right_seed(u: &Text, s: &[u8]) -> bool {
    guard(u);
    let ur = u.reversed();
    let mut sr = s.to_vec();
    sr.reverse();
    is_left_seed(&ur, &sr)
}

/// The eight arrays of a string, computed by exhaustive candidate search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteArrays {
    pub period: PosArray,
    pub border: PosArray,
    pub suffix_period: PosArray,
    pub cover: PosArray,
    pub longest_cover: PosArray,
    pub left_seed: PosArray,
    pub longest_left_seed: PosArray,
    pub seed: PosArray,
}

/// Computes every array by brute force. Intended for small `n`.
pub fn brute_arrays(u: &Text) -> BruteArrays {
    guard(u);
    let n = u.len();
    let text = u.bytes();
    let mut period = vec![0; n];
    let mut border_arr = vec![0; n];
    let mut suffix_period = vec![0; n];
    let mut cover = vec![0; n];
    let mut longest_cover = vec![0; n];
    let mut left_seed = vec![0; n];
    let mut longest_left_seed = vec![0; n];
    let mut seed = vec![0; n];

    for i in 1..=n {
        let prefix = &text[..i];
        period[i - 1] = per(prefix);
        border_arr[i - 1] = border(prefix);
        suffix_period[i - 1] = per(&text[i - 1..]);

        let pt = Text::new(prefix.to_vec()).unwrap();
        cover[i - 1] = (1..=i)
            .find(|&c| covers_word(prefix, &prefix[..c]))
            .unwrap();
        longest_cover[i - 1] = (1..i)
            .rev()
            .find(|&c| covers_word(prefix, &prefix[..c]))
            .unwrap_or(0);
        left_seed[i - 1] = (1..=i).find(|&c| is_seed(&pt, &prefix[..c])).unwrap();
        longest_left_seed[i - 1] = (1..i)
            .rev()
            .find(|&c| is_seed(&pt, &prefix[..c]))
            .unwrap_or(0);
        seed[i - 1] = (1..=i)
            .find(|&k| {
                (0..=i - k).any(|start| is_seed(&pt, &prefix[start..start + k]))
            })
            .unwrap();
    }

    BruteArrays {
        period,
        border: border_arr,
        suffix_period,
        cover,
        longest_cover,
        left_seed,
        longest_left_seed,
        seed,
    }
}

/// Maxgap by direct scan, for cross-checking the fast version.
pub fn maxgap(sorted: &[usize]) -> usize {
    sorted.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
}
