//! Vertex labels and the 90-character label alphabet.
//!
//! A vertex label is one symbol from the alphabet, prefixed by zero or more
//! `+` escapes. The alphabet is every printable ASCII character except
//! space, `0`, `+`, `,` and `.` (those five are reserved by the notation).
//! Once the 90 bare symbols are exhausted, labels continue as `+1`, `+2`, …
//! then `++1` and so on, so the label space is unbounded.

use std::fmt;

use thiserror::Error;

/// Number of bare (unescaped) symbols.
pub const ALPHABET_SIZE: usize = 90;

/// The label alphabet in canonical order: digits `1`-`9`, then `A`-`Z`,
/// then `a`-`z`, then the remaining punctuation in ASCII order. This is the
/// order used when assigning fresh labels to generated vertices.
pub const ALPHABET: [u8; ALPHABET_SIZE] = build_alphabet();

const fn is_symbol(c: u8) -> bool {
    c > b' ' && c < 0x7f && c != b'0' && c != b'+' && c != b',' && c != b'.'
}

const fn build_alphabet() -> [u8; ALPHABET_SIZE] {
    let mut out = [0u8; ALPHABET_SIZE];
    let mut i = 0;
    let mut c = b'1';
    while c <= b'9' {
        out[i] = c;
        i += 1;
        c += 1;
    }
    c = b'A';
    while c <= b'Z' {
        out[i] = c;
        i += 1;
        c += 1;
    }
    c = b'a';
    while c <= b'z' {
        out[i] = c;
        i += 1;
        c += 1;
    }
    c = b'!';
    while c < 0x7f {
        if is_symbol(c) && !c.is_ascii_alphanumeric() {
            out[i] = c;
            i += 1;
        }
        c += 1;
    }
    assert!(i == ALPHABET_SIZE);
    out
}

/// Rank of each byte in [`ALPHABET`]; 0xff marks a non-alphabet byte.
const RANK: [u8; 128] = {
    let mut r = [0xffu8; 128];
    let mut i = 0;
    while i < ALPHABET_SIZE {
        r[ALPHABET[i] as usize] = i as u8;
        i += 1;
    }
    r
};

/// Returns true if `c` may appear as a bare label symbol.
pub fn is_legal_symbol(c: char) -> bool {
    (c as u32) < 128 && RANK[c as usize] != 0xff
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("character {0:?} is not a legal label symbol")]
pub struct IllegalSymbol(pub char);

/// A vertex label: an alphabet symbol plus its `+`-escape level.
///
/// Ordering follows the canonical alphabet within an escape level, with
/// lower escape levels first, so labels sort `1 < 2 < … < A < … < +1 < …`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    escape: u32,
    symbol: u8,
}

impl VertexLabel {
    pub fn new(symbol: char, escape: u32) -> Result<Self, IllegalSymbol> {
        if !is_legal_symbol(symbol) {
            return Err(IllegalSymbol(symbol));
        }
        Ok(VertexLabel {
            escape,
            symbol: symbol as u8,
        })
    }

    /// The n-th label in canonical order; inverse of [`VertexLabel::index`].
    pub fn from_index(index: u64) -> Self {
        VertexLabel {
            escape: (index / ALPHABET_SIZE as u64) as u32,
            symbol: ALPHABET[(index % ALPHABET_SIZE as u64) as usize],
        }
    }

    /// Position in the canonical label sequence.
    pub fn index(&self) -> u64 {
        self.escape as u64 * ALPHABET_SIZE as u64 + RANK[self.symbol as usize] as u64
    }

    pub fn symbol(&self) -> char {
        self.symbol as char
    }

    pub fn escape_level(&self) -> u32 {
        self.escape
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.escape {
            write!(f, "+")?;
        }
        write!(f, "{}", self.symbol as char)
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
