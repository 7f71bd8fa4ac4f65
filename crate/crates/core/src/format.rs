//! Text and JSON serializations of multi-complexes, plus the line format read
//! by the encoders.
//!
//! Text format (vertices and face ids are 1-based; ids `1..=n` name the
//! singletons):
//!
//! ```text
//! n 3
//! face 4 : 1 2
//! face 5 : 2 3
//! face 6 : 1 2 3
//! rel 4 < 6
//! rel 5 < 6
//! ```
//!
//! `#` starts a comment. Singleton faces may be declared but are otherwise
//! implicit.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{bits, MultiComplex, Multiset};
use crate::encode;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, got {tok:?}"),
        )
    })
}

fn parse_label(tok: &str, line: usize) -> Result<usize> {
    match parse_num(tok, line)? {
        0 => Err(parse_err(line, "vertex labels are 1-based")),
        v => Ok(v - 1),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

/// Raw face declarations keyed by user ids, shared by the text and JSON
/// readers.
struct Declared {
    n: usize,
    faces: Vec<(usize, Multiset)>,
    order: Vec<(usize, usize)>,
}

impl Declared {
    fn build(self) -> Result<MultiComplex> {
        let Declared { n, faces, order } = self;
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut contents: Vec<Multiset> = Vec::new();
        let mut has_singleton = vec![false; n];
        for (id, content) in faces {
            if index.insert(id, contents.len()).is_some() {
                return Err(Error::DuplicateFaceId(id));
            }
            if let Some(v) = content.as_singleton() {
                if v < n {
                    has_singleton[v] = true;
                }
            }
            contents.push(content);
        }
        for (v, _) in has_singleton.iter().enumerate().filter(|(_, &has)| !has) {
            index.entry(v + 1).or_insert(contents.len());
            contents.push(Multiset::singleton(v));
        }
        let mut pairs = Vec::with_capacity(order.len());
        for (a, b) in order {
            let lo = *index.get(&a).ok_or(Error::UnknownFace(a))?;
            let hi = *index.get(&b).ok_or(Error::UnknownFace(b))?;
            pairs.push((lo, hi));
        }
        MultiComplex::new(n, contents, &pairs)
    }
}

/// Parses the canonical text format.
pub fn parse_text(text: &str) -> Result<MultiComplex> {
    let mut n = None;
    let mut faces = Vec::new();
    let mut order = Vec::new();
    for (line, toks) in content_lines(text) {
        match toks[0] {
            "n" => {
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected `n <int>`"));
                }
                if n.is_some() {
                    return Err(parse_err(line, "`n` given twice"));
                }
                n = Some(parse_num(toks[1], line)?);
            }
            "face" => {
                if toks.len() < 4 || toks[2] != ":" {
                    return Err(parse_err(line, "expected `face <id> : v1 v2 ...`"));
                }
                let id = parse_num(toks[1], line)?;
                let labels = toks[3..]
                    .iter()
                    .map(|t| parse_label(t, line))
                    .collect::<Result<Vec<_>>>()?;
                faces.push((id, Multiset::new(labels)));
            }
            "rel" => {
                if toks.len() != 4 || toks[2] != "<" {
                    return Err(parse_err(line, "expected `rel <id> < <id>`"));
                }
                order.push((parse_num(toks[1], line)?, parse_num(toks[3], line)?));
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing `n <int>` line"))?;
    Declared { n, faces, order }.build()
}

/// Non-singleton faces get ids `n+1..`, in canonical face order; every
/// strict order pair among them is listed.
pub fn to_text(c: &MultiComplex) -> String {
    let n = c.n();
    let mut out = format!("n {n}\n");
    for (j, f) in c.nonsingletons().iter().enumerate() {
        let labels: Vec<String> = f.as_slice().iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&format!("face {} : {}\n", n + j + 1, labels.join(" ")));
    }
    for j in 0..c.m() {
        for i in bits(c.below(j)) {
            out.push_str(&format!("rel {} < {}\n", n + i + 1, n + j + 1));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub id: usize,
    pub multiset: Vec<usize>,
}

/// JSON mirror of the text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub faces: Vec<FaceJson>,
    #[serde(default)]
    pub order: Vec<[usize; 2]>,
}

impl ComplexJson {
    pub fn from_complex(c: &MultiComplex) -> Self {
        let n = c.n();
        let faces = c
            .nonsingletons()
            .iter()
            .enumerate()
            .map(|(j, f)| FaceJson {
                id: n + j + 1,
                multiset: f.as_slice().iter().map(|v| v + 1).collect(),
            })
            .collect();
        let order = (0..c.m())
            .flat_map(|j| bits(c.below(j)).map(move |i| [n + i + 1, n + j + 1]))
            .collect();
        ComplexJson { n, faces, order }
    }

    pub fn to_complex(&self) -> Result<MultiComplex> {
        let mut faces = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let mut labels = Vec::with_capacity(f.multiset.len());
            for &v in &f.multiset {
                if v == 0 {
                    return Err(Error::Json("vertex labels are 1-based".into()));
                }
                labels.push(v - 1);
            }
            faces.push((f.id, Multiset::new(labels)));
        }
        Declared {
            n: self.n,
            faces,
            order: self.order.iter().map(|&[a, b]| (a, b)).collect(),
        }
        .build()
    }
}

pub fn parse_json(text: &str) -> Result<MultiComplex> {
    let doc: ComplexJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    doc.to_complex()
}

pub fn to_json(c: &MultiComplex) -> String {
    serde_json::to_string(&ComplexJson::from_complex(c)).expect("plain data serializes")
}

/// Accepts either format; JSON is recognized by a leading `{`.
pub fn parse_complex(text: &str) -> Result<MultiComplex> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

/// Object families accepted by [`encode_text`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncodeKind {
    Graph,
    Multigraph,
    Hypergraph { allow_singleton_edges: bool },
    Simplicial,
    Delta,
    Colored,
}

/// Reads the encoder line format and builds the complex.
///
/// ```text
/// n 4                  # optional; defaults to the largest label
/// edge 1 2             # graph, multigraph, hypergraph
/// simplex 1 2 3        # simplicial, colored
/// simplex 5 : 1 1      # delta: explicit id and ordered vertex tuple
/// boundary 5 < 7       # delta: simplex 5 is a face of simplex 7
/// color 4 2            # colored: face id 4 gets count 2
/// ```
///
/// For the colored encoder, ids `1..=n` name vertices and simplices of
/// dimension at least one are numbered `n+1..` in order of appearance
/// unless given an explicit id.
pub fn encode_text(kind: EncodeKind, text: &str) -> Result<MultiComplex> {
    let mut n_decl = None;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut simplices: Vec<(usize, Option<usize>, Vec<usize>)> = Vec::new();
    let mut boundary: Vec<(usize, usize, usize)> = Vec::new();
    let mut colors: Vec<(usize, usize, i64)> = Vec::new();
    let mut max_label = 0;
    let mut labels_of = |toks: &[&str], line: usize| -> Result<Vec<usize>> {
        let vs = toks
            .iter()
            .map(|t| parse_label(t, line))
            .collect::<Result<Vec<_>>>()?;
        max_label = vs.iter().map(|v| v + 1).fold(max_label, usize::max);
        Ok(vs)
    };
    for (line, toks) in content_lines(text) {
        match toks[0] {
            "n" if toks.len() == 2 => n_decl = Some(parse_num(toks[1], line)?),
            "edge" => edges.push((line, labels_of(&toks[1..], line)?)),
            "simplex" => {
                if toks.len() >= 3 && toks[2] == ":" {
                    let id = parse_num(toks[1], line)?;
                    simplices.push((line, Some(id), labels_of(&toks[3..], line)?));
                } else {
                    simplices.push((line, None, labels_of(&toks[1..], line)?));
                }
            }
            "boundary" if toks.len() == 4 && toks[2] == "<" => {
                boundary.push((line, parse_num(toks[1], line)?, parse_num(toks[3], line)?))
            }
            "color" if toks.len() == 3 => {
                let k = toks[2]
                    .parse::<i64>()
                    .map_err(|_| parse_err(line, format!("bad color {:?}", toks[2])))?;
                colors.push((line, parse_num(toks[1], line)?, k));
            }
            other => {
                return Err(parse_err(
                    line,
                    format!("unexpected line starting with {other:?}"),
                ))
            }
        }
    }
    let n = n_decl.unwrap_or(max_label);
    let edge_line = edges.first().map(|e| e.0);
    let simplex_line = simplices.first().map(|s| s.0);
    let boundary_line = boundary.first().map(|b| b.0);
    let color_line = colors.first().map(|c| c.0);
    let expect_none = |what: &str, line: Option<usize>| -> Result<()> {
        match line {
            Some(line) => Err(parse_err(
                line,
                format!("`{what}` lines are not used by this encoder"),
            )),
            None => Ok(()),
        }
    };

    match kind {
        EncodeKind::Graph | EncodeKind::Multigraph => {
            expect_none("simplex", simplex_line)?;
            expect_none("boundary", boundary_line)?;
            expect_none("color", color_line)?;
            let mut pairs = Vec::with_capacity(edges.len());
            for (line, e) in &edges {
                match e.as_slice() {
                    &[a, b] => pairs.push((a, b)),
                    _ => return Err(parse_err(*line, "an edge needs exactly two vertices")),
                }
            }
            if kind == EncodeKind::Graph {
                encode::from_graph(n, &pairs)
            } else {
                encode::from_multigraph(n, &pairs)
            }
        }
        EncodeKind::Hypergraph {
            allow_singleton_edges,
        } => {
            expect_none("simplex", simplex_line)?;
            expect_none("boundary", boundary_line)?;
            expect_none("color", color_line)?;
            let es: Vec<Vec<usize>> = edges.into_iter().map(|(_, e)| e).collect();
            encode::from_hypergraph(n, &es, allow_singleton_edges)
        }
        EncodeKind::Simplicial => {
            expect_none("edge", edge_line)?;
            expect_none("boundary", boundary_line)?;
            expect_none("color", color_line)?;
            let fs: Vec<Vec<usize>> = simplices.into_iter().map(|(_, _, s)| s).collect();
            encode::from_simplicial(n, &fs)
        }
        EncodeKind::Delta => {
            expect_none("edge", edge_line)?;
            expect_none("color", color_line)?;
            let mut index = HashMap::new();
            let mut tuples = Vec::with_capacity(simplices.len());
            for (line, id, s) in simplices {
                let id = id.ok_or_else(|| {
                    parse_err(line, "delta simplices need an id: `simplex <id> : v...`")
                })?;
                if index.insert(id, tuples.len()).is_some() {
                    return Err(parse_err(line, format!("simplex id {id} used twice")));
                }
                tuples.push(s);
            }
            let mut face_of = Vec::with_capacity(boundary.len());
            for (line, a, b) in boundary {
                let lo = *index
                    .get(&a)
                    .ok_or_else(|| parse_err(line, format!("unknown simplex {a}")))?;
                let hi = *index
                    .get(&b)
                    .ok_or_else(|| parse_err(line, format!("unknown simplex {b}")))?;
                face_of.push((lo, hi));
            }
            encode::from_delta(n, &tuples, &face_of)
        }
        EncodeKind::Colored => {
            expect_none("edge", edge_line)?;
            expect_none("boundary", boundary_line)?;
            let mut by_id: HashMap<usize, Vec<usize>> = (0..n).map(|v| (v + 1, vec![v])).collect();
            let mut next = n + 1;
            let mut faces = Vec::with_capacity(simplices.len());
            for (line, id, s) in simplices {
                if s.len() >= 2 {
                    let id = id.unwrap_or_else(|| {
                        next += 1;
                        next - 1
                    });
                    if by_id.insert(id, s.clone()).is_some() {
                        return Err(parse_err(line, format!("face id {id} used twice")));
                    }
                }
                faces.push(s);
            }
            let mut cs = Vec::with_capacity(colors.len());
            for (line, id, k) in colors {
                let face = by_id
                    .get(&id)
                    .ok_or_else(|| parse_err(line, format!("unknown face id {id}")))?;
                cs.push((face.clone(), k));
            }
            encode::from_colored_simplicial(n, &faces, &cs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    const SIMPLEX: &str = "n 3\nface 4 : 1 2\nface 5 : 1 2 3\nface 6 : 1 3\nface 7 : 2 3\n\
rel 4 < 5\nrel 6 < 5\nrel 7 < 5\n";

    #[test]
    fn text_round_trip_is_exact() {
        let c = parse_text(SIMPLEX).unwrap();
        assert_eq!(c.face_count(), 7);
        assert_eq!(to_text(&c), SIMPLEX);
        assert_eq!(parse_text(&to_text(&c)).unwrap(), c);
    }

    #[test]
    fn text_accepts_ids_comments_and_singletons() {
        let src = "# a path\nn 3\nface 1 : 1\nface 20 : 2 3 # edge\nface 10 : 1 2\n";
        let c = parse_text(src).unwrap();
        assert_eq!(
            c.nonsingletons(),
            &[Multiset::from([0, 1]), Multiset::from([1, 2])]
        );
        assert_eq!(to_text(&c), "n 3\nface 4 : 1 2\nface 5 : 2 3\n");
    }

    #[test]
    fn text_errors() {
        assert!(matches!(
            parse_text("face 2 : 1 1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_text("n 2\nfoo"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("n 2\nface 3 : 0 1"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            parse_text("n 2\nface 3 : 1 2\nface 3 : 1 1"),
            Err(Error::DuplicateFaceId(3))
        );
        assert_eq!(parse_text("n 2\nrel 3 < 4"), Err(Error::UnknownFace(3)));
        assert!(matches!(
            parse_text("n 3\nface 4 : 1 2\nface 5 : 2 3\nrel 4 < 5"),
            Err(Error::ContainmentViolation { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let c = parse_text(SIMPLEX).unwrap();
        let json = to_json(&c);
        assert_eq!(parse_complex(&json).unwrap(), c);
        assert_eq!(to_json(&parse_json(&json).unwrap()), json);
        let doc: ComplexJson = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.order, vec![[4, 5], [6, 5], [7, 5]]);
        assert!(matches!(parse_json("{\"n\": 1}"), Err(Error::Json(_))));
    }

    #[test]
    fn encoder_lines() {
        let g = encode_text(EncodeKind::Graph, "edge 1 2\nedge 2 3\nedge 1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        let padded = encode_text(EncodeKind::Graph, "n 5\nedge 1 2\n").unwrap();
        assert_eq!(padded.n(), 5);
        let mg = encode_text(EncodeKind::Multigraph, "edge 1 1\nedge 1 2\nedge 1 2\n").unwrap();
        assert_eq!(mg.m(), 3);
        let h = encode_text(
            EncodeKind::Hypergraph {
                allow_singleton_edges: false,
            },
            "edge 1 2 3\n",
        )
        .unwrap();
        assert_eq!(h.m(), 1);
        let s = encode_text(
            EncodeKind::Simplicial,
            "simplex 1 2 3\nsimplex 1 2\nsimplex 1 3\nsimplex 2 3\n",
        )
        .unwrap();
        assert_eq!(s, parse_text(SIMPLEX).unwrap());
        let d = encode_text(
            EncodeKind::Delta,
            "simplex 4 : 1 2\nsimplex 5 : 1 3\nsimplex 6 : 2 3\nsimplex 7 : 1 2 3\n\
             boundary 4 < 7\nboundary 5 < 7\nboundary 6 < 7\n",
        )
        .unwrap();
        assert_eq!(d, s);
        let col = encode_text(EncodeKind::Colored, "simplex 1 2\ncolor 1 1\ncolor 3 1\n").unwrap();
        let expect = encode_text(EncodeKind::Multigraph, "edge 1 1\nedge 1 2\nedge 1 2\n").unwrap();
        assert!(is_isomorphic(&col, &expect).unwrap());
        assert!(matches!(
            encode_text(EncodeKind::Graph, "edge 1 2 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            encode_text(EncodeKind::Graph, "simplex 1 2\n"),
            Err(Error::Parse { .. })
        ));
    }
}
