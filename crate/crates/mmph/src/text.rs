//! Text formats: MMPH strings (`.mmph`) and vector tables (`.vec`).
//!
//! MMPH notation: vertices are single alphabet symbols, optionally
//! `+`-escaped (`+A`, `++A`, …); hyperedges are separated by `,` and each
//! MMPH is terminated by `.`. Whitespace is skipped between tokens and
//! never separates anything. Vector tables are line oriented:
//! `LABEL = (c1,c2,…,cn)` with exact integer components.
//!
//! Both file formats require a leading header block of `#`-lines containing
//! `# rank: n`. The header block ends at the first line that does not begin
//! with `#`; after that point `#` is an ordinary vertex symbol, and the
//! serializers indent a body line with one space if it would otherwise
//! begin with `#`.
//!
//! The first parse error aborts with a byte offset into the input.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::hypergraph::{Hyperedge, Mmph, ValidationReport};
use crate::label::{is_legal_symbol, VertexLabel};
use crate::ray::{Ray, RayError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("illegal character {0:?}")]
    IllegalCharacter(char),
    #[error("'+' escape not followed by a label symbol")]
    DanglingEscape,
    #[error("empty hyperedge")]
    EmptyHyperedge,
    #[error("missing '.' terminator")]
    MissingTerminator,
    #[error("duplicate vertex {0} within a hyperedge")]
    DuplicateVertex(VertexLabel),
    #[error("hyperedge has {size} vertices but rank is {rank}")]
    EdgeExceedsRank { size: usize, rank: usize },
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("parsed MMPH fails validation: {0}")]
    InvalidMmph(ValidationReport),
    #[error("missing '# rank: n' header")]
    MissingRankHeader,
    #[error("malformed header line")]
    InvalidHeader,
    #[error("expected '='")]
    ExpectedEquals,
    #[error("expected '('")]
    ExpectedTuple,
    #[error("expected integer component")]
    InvalidInteger,
    #[error("expected ',' or ')' in tuple")]
    UnterminatedTuple,
    #[error("entry has {got} components, expected {want}")]
    WrongArity { got: usize, want: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("duplicate label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("labels {first} and {second} lie on the same ray")]
    DuplicateRay {
        first: VertexLabel,
        second: VertexLabel,
    },
    #[error("unexpected trailing content")]
    TrailingContent,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

fn err<T>(kind: ParseErrorKind, offset: usize) -> Result<T, ParseError> {
    Err(ParseError { kind, offset })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SerializeError {
    #[error("cannot serialize an MMPH with no hyperedges")]
    EmptyMmph,
    #[error("document mixes ranks {0} and {1}")]
    MixedRank(usize, usize),
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn parse_label(&mut self) -> Result<VertexLabel, ParseError> {
        let start = self.pos;
        let mut escape = 0u32;
        while self.peek() == Some(b'+') {
            escape += 1;
            self.bump();
        }
        match self.peek() {
            Some(c) if is_legal_symbol(c as char) => {
                self.bump();
                Ok(VertexLabel::new(c as char, escape).expect("legal symbol"))
            }
            Some(c) if escape == 0 || !(c as char).is_ascii() || c == b'0' => {
                err(ParseErrorKind::IllegalCharacter(c as char), self.pos)
            }
            _ => err(ParseErrorKind::DanglingEscape, start),
        }
    }
}

/// Parses a single `.`-terminated MMPH (no header) and validates it.
pub fn parse_mmph(text: &str, rank: usize) -> Result<Mmph, ParseError> {
    let mut cur = Cursor::new(text);
    let m = parse_mmph_body(&mut cur, rank)?;
    cur.skip_whitespace();
    if !cur.at_end() {
        return err(ParseErrorKind::TrailingContent, cur.pos);
    }
    Ok(m)
}

fn parse_mmph_body(cur: &mut Cursor, rank: usize) -> Result<Mmph, ParseError> {
    if rank < 2 {
        return err(ParseErrorKind::RankTooSmall(rank), cur.pos);
    }
    cur.skip_whitespace();
    let mmph_start = cur.pos;
    let mut edges: Vec<Hyperedge> = Vec::new();
    let mut current: Vec<VertexLabel> = Vec::new();
    loop {
        cur.skip_whitespace();
        match cur.peek() {
            None => return err(ParseErrorKind::MissingTerminator, cur.pos),
            Some(b',') => {
                if current.is_empty() {
                    return err(ParseErrorKind::EmptyHyperedge, cur.pos);
                }
                edges.push(Hyperedge::new(std::mem::take(&mut current)).expect("checked"));
                cur.bump();
            }
            Some(b'.') => {
                if current.is_empty() {
                    return err(ParseErrorKind::EmptyHyperedge, cur.pos);
                }
                edges.push(Hyperedge::new(std::mem::take(&mut current)).expect("checked"));
                cur.bump();
                break;
            }
            Some(_) => {
                let lstart = cur.pos;
                let label = cur.parse_label()?;
                if current.contains(&label) {
                    return err(ParseErrorKind::DuplicateVertex(label), lstart);
                }
                if current.len() == rank {
                    return err(
                        ParseErrorKind::EdgeExceedsRank {
                            size: rank + 1,
                            rank,
                        },
                        lstart,
                    );
                }
                current.push(label);
            }
        }
    }
    let m = Mmph::new(rank, edges).expect("edge-local constraints checked during parse");
    let report = m.validate();
    if !report.is_valid() {
        return err(ParseErrorKind::InvalidMmph(report), mmph_start);
    }
    Ok(m)
}

/// Serializes a single MMPH (no header, no trailing newline).
pub fn serialize_mmph(m: &Mmph) -> Result<String, SerializeError> {
    if m.edge_count() == 0 {
        return Err(SerializeError::EmptyMmph);
    }
    let mut out = String::new();
    for (i, edge) in m.edges().enumerate() {
        if i > 0 {
            out.push(',');
        }
        for &v in edge {
            out.push_str(&m.label(v).to_string());
        }
    }
    out.push('.');
    Ok(out)
}

/// A parsed `.mmph` file: shared rank, the MMPHs in order, their byte
/// offsets in the source, and any extra header comments.
#[derive(Debug, Clone)]
pub struct MmphDocument {
    pub rank: usize,
    pub mmphs: Vec<Mmph>,
    pub offsets: Vec<usize>,
    pub comments: Vec<String>,
}

impl MmphDocument {
    pub fn new(rank: usize, mmphs: Vec<Mmph>) -> Self {
        MmphDocument {
            rank,
            mmphs,
            offsets: Vec::new(),
            comments: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (rank, comments, body_start) = parse_header(text)?;
        let mut cur = Cursor::new(text);
        cur.pos = body_start;
        let mut mmphs = Vec::new();
        let mut offsets = Vec::new();
        loop {
            cur.skip_whitespace();
            if cur.at_end() {
                break;
            }
            offsets.push(cur.pos);
            mmphs.push(parse_mmph_body(&mut cur, rank)?);
        }
        Ok(MmphDocument {
            rank,
            mmphs,
            offsets,
            comments,
        })
    }

    pub fn to_text(&self) -> Result<String, SerializeError> {
        let mut out = format!("# rank: {}\n", self.rank);
        for c in &self.comments {
            out.push_str(&format!("# {c}\n"));
        }
        for m in &self.mmphs {
            if m.rank() != self.rank {
                return Err(SerializeError::MixedRank(self.rank, m.rank()));
            }
            let line = serialize_mmph(m)?;
            if line.starts_with('#') {
                out.push(' ');
            }
            out.push_str(&line);
            out.push('\n');
        }
        Ok(out)
    }
}

/// Reads the leading `#`-header block; returns (rank, comments, body offset).
fn parse_header(text: &str) -> Result<(usize, Vec<String>, usize), ParseError> {
    let len = text.len();
    let mut pos = 0usize;
    let mut rank: Option<usize> = None;
    let mut comments = Vec::new();
    while pos < len {
        let line_end = text[pos..].find('\n').map(|i| pos + i).unwrap_or(len);
        let next = if line_end >= len { len } else { line_end + 1 };
        let line = &text[pos..line_end];
        if line.trim().is_empty() {
            pos = next;
            continue;
        }
        if !line.starts_with('#') {
            break; // body starts here
        }
        let content = line[1..].trim();
        if let Some(rest) = content.strip_prefix("rank:") {
            if rank.is_some() {
                return err(ParseErrorKind::InvalidHeader, pos);
            }
            match rest.trim().parse::<usize>() {
                Ok(r) => rank = Some(r),
                Err(_) => return err(ParseErrorKind::InvalidHeader, pos),
            }
        } else {
            comments.push(content.to_string());
        }
        pos = next;
    }
    match rank {
        Some(r) => Ok((r, comments, pos)),
        None => err(ParseErrorKind::MissingRankHeader, 0),
    }
}

/// A coordinatization table: labels to rays, all of one dimension.
/// Entries keep insertion order; no label repeats and no two labels lie on
/// the same ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorTable {
    dimension: usize,
    entries: Vec<(VertexLabel, Ray)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("ray has {got} components, table dimension is {want}")]
    WrongArity { got: usize, want: usize },
    #[error("duplicate label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("labels {first} and {second} lie on the same ray")]
    DuplicateRay {
        first: VertexLabel,
        second: VertexLabel,
    },
}

impl VectorTable {
    pub fn new(dimension: usize) -> Self {
        VectorTable {
            dimension,
            entries: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, label: VertexLabel, ray: Ray) -> Result<(), TableError> {
        if ray.dimension() != self.dimension {
            return Err(TableError::WrongArity {
                got: ray.dimension(),
                want: self.dimension,
            });
        }
        if self.get(&label).is_some() {
            return Err(TableError::DuplicateLabel(label));
        }
        if let Some((first, _)) = self.entries.iter().find(|(_, r)| *r == ray) {
            return Err(TableError::DuplicateRay {
                first: *first,
                second: label,
            });
        }
        self.entries.push((label, ray));
        Ok(())
    }

    pub fn get(&self, label: &VertexLabel) -> Option<&Ray> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, r)| r)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexLabel, &Ray)> {
        self.entries.iter().map(|(l, r)| (l, r))
    }

    pub fn labels(&self) -> impl Iterator<Item = &VertexLabel> {
        self.entries.iter().map(|(l, _)| l)
    }

    pub fn rays(&self) -> impl Iterator<Item = &Ray> {
        self.entries.iter().map(|(_, r)| r)
    }

    /// Serializes with the `# rank: n` header.
    pub fn to_text(&self) -> String {
        let mut out = format!("# rank: {}\n", self.dimension);
        for (label, ray) in &self.entries {
            let line = format!("{label} = {ray}");
            if line.starts_with('#') {
                out.push(' ');
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// Parses vector-table lines (no header) at a known dimension.
pub fn parse_vectors(text: &str, dimension: usize) -> Result<VectorTable, ParseError> {
    if dimension < 2 {
        return err(ParseErrorKind::RankTooSmall(dimension), 0);
    }
    parse_vector_body(text, 0, dimension)
}

/// Parses a full `.vec` file, dimension taken from the `# rank: n` header.
pub fn parse_vector_document(text: &str) -> Result<VectorTable, ParseError> {
    let (dimension, _comments, body_start) = parse_header(text)?;
    if dimension < 2 {
        return err(ParseErrorKind::RankTooSmall(dimension), 0);
    }
    parse_vector_body(&text[body_start..], body_start, dimension)
}

fn parse_vector_body(
    body: &str,
    base: usize,
    dimension: usize,
) -> Result<VectorTable, ParseError> {
    let mut table = VectorTable::new(dimension);
    let mut pos = 0usize;
    for line in body.split('\n') {
        let line_start = pos;
        pos += line.len() + 1;
        if line.trim().is_empty() {
            continue;
        }
        parse_vector_line(line, base + line_start, &mut table)?;
    }
    Ok(table)
}

fn parse_vector_line(
    line: &str,
    base: usize,
    table: &mut VectorTable,
) -> Result<(), ParseError> {
    let mut cur = Cursor::new(line);
    cur.skip_whitespace();
    let label_at = base + cur.pos;
    let label = cur.parse_label().map_err(|e| ParseError {
        kind: e.kind,
        offset: base + e.offset,
    })?;
    cur.skip_whitespace();
    if cur.peek() != Some(b'=') {
        return err(ParseErrorKind::ExpectedEquals, base + cur.pos);
    }
    cur.bump();
    cur.skip_whitespace();
    let tuple_at = base + cur.pos;
    if cur.peek() != Some(b'(') {
        return err(ParseErrorKind::ExpectedTuple, base + cur.pos);
    }
    cur.bump();
    let mut components: Vec<BigInt> = Vec::new();
    loop {
        cur.skip_whitespace();
        let int_at = cur.pos;
        let mut end = cur.pos;
        if cur.bytes.get(end) == Some(&b'-') {
            end += 1;
        }
        while end < cur.bytes.len() && cur.bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == int_at || (end == int_at + 1 && cur.bytes[int_at] == b'-') {
            return err(ParseErrorKind::InvalidInteger, base + cur.pos);
        }
        let value = BigInt::from_str(&line[int_at..end]).expect("digits");
        components.push(value);
        cur.pos = end;
        cur.skip_whitespace();
        match cur.peek() {
            Some(b',') => cur.bump(),
            Some(b')') => {
                cur.bump();
                break;
            }
            _ => return err(ParseErrorKind::UnterminatedTuple, base + cur.pos),
        }
    }
    cur.skip_whitespace();
    if !cur.at_end() {
        return err(ParseErrorKind::TrailingContent, base + cur.pos);
    }
    if components.len() != table.dimension() {
        return err(
            ParseErrorKind::WrongArity {
                got: components.len(),
                want: table.dimension(),
            },
            tuple_at,
        );
    }
    let ray = Ray::new(components).map_err(|e| ParseError {
        kind: match e {
            RayError::ZeroVector => ParseErrorKind::ZeroVector,
            RayError::DimensionMismatch { left, right } => ParseErrorKind::WrongArity {
                got: left,
                want: right,
            },
        },
        offset: tuple_at,
    })?;
    table.insert(label, ray).map_err(|e| ParseError {
        kind: match e {
            TableError::WrongArity { got, want } => ParseErrorKind::WrongArity { got, want },
            TableError::DuplicateLabel(l) => ParseErrorKind::DuplicateLabel(l),
            TableError::DuplicateRay { first, second } => {
                ParseErrorKind::DuplicateRay { first, second }
            }
        },
        offset: label_at,
    })
}

impl fmt::Display for MmphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text() {
            Ok(s) => write!(f, "{s}"),
            Err(_) => write!(f, "<unserializable document>"),
        }
    }
}
