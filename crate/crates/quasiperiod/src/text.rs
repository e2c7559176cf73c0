//! Input text and factor references.
//!
//! All public contracts use 1-based positions: `u[i..j]` denotes the symbols
//! at positions `i` through `j` inclusive, with positions numbered from 1.

use std::fmt;

use crate::Error;

/// A non-empty string of raw bytes, the subject of every computation.
///
/// The alphabet is bytes 0..=255; no text encoding is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    /// Wraps a byte string. Empty input is rejected.
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, Error> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(Text { bytes })
    }

    /// Builds a text from a `&str`, rejecting the empty string.
    pub fn from_str(s: &str) -> Result<Self, Error> {
        Text::new(s.as_bytes().to_vec())
    }

    /// Number of symbols.
    #[inline]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// Always false: empty texts cannot be constructed.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The symbol at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.len());
        self.bytes[i - 1]
    }

    /// Underlying bytes (0-based slice).
    #[inline]
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The factor `u[start..start+len-1]` as a byte slice.
    #[inline]
    pub fn factor(&self, f: FactorRef) -> &[u8] {
        debug_assert!(f.start >= 1 && f.len >= 1 && f.start + f.len - 1 <= self.len());
        &self.bytes[f.start - 1..f.start - 1 + f.len]
    }

    /// The prefix `u[1..i]`.
    #[inline]
    pub fn prefix(&self, i: usize) -> &[u8] {
        debug_assert!(i >= 1 && i <= self.len());
        &self.bytes[..i]
    }

    /// The suffix `u[i..n]`.
    #[inline]
    pub fn suffix(&self, i: usize) -> &[u8] {
        debug_assert!(i >= 1 && i <= self.len());
        &self.bytes[i - 1..]
    }

    /// The reversed text.
    pub fn reversed(&self) -> Text {
        let mut bytes = self.bytes.clone();
        bytes.reverse();
        Text { bytes }
    }

    /// The text restricted to its prefix of length `i` (1 <= i <= n).
    pub fn prefix_text(&self, i: usize) -> Text {
        assert!(i >= 1 && i <= self.len());
        Text {
            bytes: self.bytes[..i].to_vec(),
        }
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(&self.bytes))
    }
}

/// Integer array of length `n`; entry for position `i` is stored at `i - 1`.
///
/// Values are themselves 1-based positions or lengths, with `0` encoding
/// "none" where a contract allows it.
pub type PosArray = Vec<usize>;

/// A factor of a text given by 1-based start position and positive length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorRef {
    pub start: usize,
    pub len: usize,
}

impl FactorRef {
    pub fn new(start: usize, len: usize) -> Self {
        FactorRef { start, len }
    }

    /// 1-based position of the last symbol of the factor.
    #[inline]
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}
