//! Line-oriented set-list files: `.scx` complexes and `.hg` hypergraphs.
//!
//! ```text
//! # two disjoint edges
//! vertices: 4
//! 0 1
//! 2 3
//! ```
//!
//! One set per line as space-separated decimal ids. Blank lines are ignored
//! and `#` starts a comment. A line holding only `-` is the empty set. The
//! optional header `vertices: n` fixes the vertex set to `{0, …, n-1}`
//! (default: one past the largest id); `vertex-set: a b c` names an explicit
//! vertex set instead, which is how complexes on non-prefix vertex sets
//! (links, induced subcomplexes) round-trip. Comment lines of the form
//! `# @key value` carry named parameters and are returned to the caller.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A parsed set-list file.
#[derive(Debug, Clone, Default)]
pub struct SetList {
    pub sets: Vec<VertexSet>,
    /// Declared vertex set, if a header was present.
    pub ambient: Option<VertexSet>,
    /// `# @key value` annotations in file order.
    pub params: Vec<(String, String)>,
}

impl SetList {
    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// The declared vertex set, or `{0, …, max id}`.
    pub fn resolved_ambient(&self) -> VertexSet {
        self.ambient.unwrap_or_else(|| {
            let span = self.sets.iter().map(|s| s.span()).max().unwrap_or(0);
            VertexSet::range(span)
        })
    }
}

fn parse_ids(text: &str, line: usize) -> Result<VertexSet> {
    let mut ids = Vec::new();
    for tok in text.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| Error::parse(line, format!("invalid vertex id `{tok}`")))?;
        ids.push(v);
    }
    VertexSet::try_from_vertices(ids).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn parse_set_list(text: &str) -> Result<SetList> {
    let mut out = SetList::default();
    let mut seen_set = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(i) => (&raw[..i], Some(&raw[i + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim_start().strip_prefix('@') {
                let mut parts = rest.splitn(2, char::is_whitespace);
                let key = parts.next().unwrap_or("").to_string();
                let value = parts.next().unwrap_or("").trim().to_string();
                if !key.is_empty() {
                    out.params.push((key, value));
                }
            }
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("vertices:") {
            if seen_set || out.ambient.is_some() {
                return Err(Error::parse(line, "vertex header must precede all sets and appear once"));
            }
            let n: usize = rest.trim().parse().map_err(|_| Error::parse(line, "expected `vertices: <count>`"))?;
            if n > crate::vertex_set::MAX_VERTICES {
                return Err(Error::parse(line, format!("at most 64 vertices are supported, got {n}")));
            }
            out.ambient = Some(VertexSet::range(n));
            continue;
        }
        if let Some(rest) = body.strip_prefix("vertex-set:") {
            if seen_set || out.ambient.is_some() {
                return Err(Error::parse(line, "vertex header must precede all sets and appear once"));
            }
            out.ambient = Some(parse_ids(rest, line)?);
            continue;
        }
        seen_set = true;
        if body == "-" {
            out.sets.push(VertexSet::EMPTY);
            continue;
        }
        let set = parse_ids(body, line)?;
        if let Some(amb) = out.ambient {
            if !set.is_subset(amb) {
                return Err(Error::parse(line, format!("set {set} lies outside the declared vertex set {amb}")));
            }
        }
        out.sets.push(set);
    }
    Ok(out)
}

/// Parses a `.scx` complex. No set lines means the void complex.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    parse_complex_with_params(text).map(|(k, _)| k)
}

pub fn parse_complex_with_params(text: &str) -> Result<(SimplicialComplex, SetList)> {
    let list = parse_set_list(text)?;
    let ambient = list.resolved_ambient();
    let k = SimplicialComplex::from_maximal_faces(list.sets.iter().copied(), ambient)?;
    Ok((k, list))
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

fn write_set(out: &mut String, s: VertexSet) {
    if s.is_empty() {
        out.push('-');
    } else {
        let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
    }
    out.push('\n');
}

pub fn write_ambient_header(out: &mut String, ambient: VertexSet) {
    if ambient == VertexSet::range(ambient.span()) {
        let _ = writeln!(out, "vertices: {}", ambient.span());
    } else {
        let ids: Vec<String> = ambient.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "vertex-set: {}", ids.join(" "));
    }
}

/// Serializes a list of sets with a vertex header and optional parameters.
pub fn format_set_list(sets: &[VertexSet], ambient: VertexSet, params: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in params {
        let _ = writeln!(out, "# @{k} {v}");
    }
    write_ambient_header(&mut out, ambient);
    for &s in sets {
        write_set(&mut out, s);
    }
    out
}

/// `.scx` text for `k`; parsing it back yields an equal complex.
pub fn format_complex(k: &SimplicialComplex) -> String {
    format_set_list(k.maximal_faces(), k.ambient(), &[])
}

pub fn format_complex_with_params(k: &SimplicialComplex, params: &[(String, String)]) -> String {
    format_set_list(k.maximal_faces(), k.ambient(), params)
}

pub fn write_complex(path: impl AsRef<Path>, k: &SimplicialComplex) -> Result<()> {
    std::fs::write(path, format_complex(k))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_faces_comments_and_header() {
        let k = parse_complex("# comment\nvertices: 5\n0 1   # trailing\n\n2 3\n1\n").unwrap();
        assert_eq!(k.ambient(), VertexSet::range(5));
        assert_eq!(k.maximal_faces(), &[VertexSet::from([0, 1]), VertexSet::from([2, 3])]);
    }

    #[test]
    fn default_ambient_is_max_id_plus_one() {
        let k = parse_complex("0 4\n").unwrap();
        assert_eq!(k.ambient(), VertexSet::range(5));
    }

    #[test]
    fn empty_file_is_void_and_dash_is_empty_complex() {
        assert!(parse_complex("").unwrap().is_void());
        assert!(parse_complex("# nothing\n\n").unwrap().is_void());
        let e = parse_complex("vertices: 3\n-\n").unwrap();
        assert!(e.is_empty_complex());
        assert_eq!(e.ambient(), VertexSet::range(3));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_complex("0 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_complex("vertices: 2\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_complex("0 1\nvertices: 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_complex("0 64\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn params_round_trip() {
        let k = parse_complex("0 1\n").unwrap();
        let text = format_complex_with_params(&k, &[("t".into(), "2".into()), ("sigma".into(), "0 1".into())]);
        let (back, list) = parse_complex_with_params(&text).unwrap();
        assert_eq!(back, k);
        assert_eq!(list.param("t"), Some("2"));
        assert_eq!(list.param("sigma"), Some("0 1"));
    }

    proptest! {
        #[test]
        fn complex_round_trips(faces in proptest::collection::vec(0u64..(1 << 9), 0..6), extra in 0u64..(1 << 12)) {
            let faces: Vec<VertexSet> = faces.into_iter().map(VertexSet::from_bits).collect();
            let ambient = faces.iter().fold(VertexSet::from_bits(extra), |a, f| a.union(*f));
            let k = SimplicialComplex::from_maximal_faces(faces, ambient).unwrap();
            let back = parse_complex(&format_complex(&k)).unwrap();
            prop_assert_eq!(back, k);
        }
    }
}
