//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! graph <n> <m>        (or: digraph <n> <m>)
//! <u> <v>              (m edge/arc lines, 0-based endpoints)
//! labels <bitstring>   (optional, length n)
//! ```
//!
//! Parsing rejects self-loops, duplicate edges and out-of-range endpoints;
//! serialization emits a canonical ordering, so parse-then-serialize is a
//! fixed point.

use crate::gf2::BitVector;
use crate::graph::{Digraph, Graph, LabelFn};

/// A parse failure, pointing at the offending line (1-based).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Contents of an edge-list file.
#[derive(Debug)]
pub enum ParsedFile {
    Graph {
        graph: Graph,
        labels: Option<LabelFn>,
    },
    Digraph {
        digraph: Digraph,
        labels: Option<LabelFn>,
    },
}

enum Body {
    Graph(Graph),
    Digraph(Digraph),
}

/// Parses the edge-list format, producing a graph or digraph according to
/// the header keyword.
pub fn parse_edge_list(text: &str) -> Result<ParsedFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(ParseError::new(
            header_line,
            format!("expected header `graph <n> <m>` or `digraph <n> <m>`, got `{header}`"),
        ));
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| ParseError::new(header_line, format!("invalid vertex count `{}`", fields[1])))?;
    let m: usize = fields[2]
        .parse()
        .map_err(|_| ParseError::new(header_line, format!("invalid edge count `{}`", fields[2])))?;
    let mut body = match fields[0] {
        "graph" => Body::Graph(Graph::empty(n)),
        "digraph" => Body::Digraph(Digraph::empty(n)),
        other => {
            return Err(ParseError::new(
                header_line,
                format!("unknown header keyword `{other}` (expected `graph` or `digraph`)"),
            ))
        }
    };

    let mut labels: Option<LabelFn> = None;
    let mut edges_seen = 0usize;
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if let Some(rest) = line.strip_prefix("labels") {
            if labels.is_some() {
                return Err(ParseError::new(line_no, "duplicate labels line"));
            }
            let bits = rest.trim();
            let v = BitVector::from_bitstring(bits).ok_or_else(|| {
                ParseError::new(line_no, "labels must be a string of 0 and 1 characters")
            })?;
            if v.len() != n {
                return Err(ParseError::new(
                    line_no,
                    format!("labels length {} does not match vertex count {n}", v.len()),
                ));
            }
            labels = Some(LabelFn::new(v));
            continue;
        }

        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ParseError::new(
                line_no,
                format!("expected `<u> <v>`, got `{line}`"),
            ));
        }
        let u: usize = parts[0]
            .parse()
            .map_err(|_| ParseError::new(line_no, format!("invalid vertex `{}`", parts[0])))?;
        let v: usize = parts[1]
            .parse()
            .map_err(|_| ParseError::new(line_no, format!("invalid vertex `{}`", parts[1])))?;
        if u >= n || v >= n {
            return Err(ParseError::new(
                line_no,
                format!("vertex {} out of range (n = {n})", u.max(v)),
            ));
        }
        if u == v {
            return Err(ParseError::new(line_no, format!("self-loop at vertex {u}")));
        }
        edges_seen += 1;
        if edges_seen > m {
            return Err(ParseError::new(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        match &mut body {
            Body::Graph(g) => {
                if g.has_edge(u, v) {
                    return Err(ParseError::new(line_no, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v);
            }
            Body::Digraph(d) => {
                if d.has_arc(u, v) {
                    return Err(ParseError::new(line_no, format!("duplicate arc {u} {v}")));
                }
                d.add_arc(u, v);
            }
        }
    }
    if edges_seen < m {
        return Err(ParseError::new(
            last_line,
            format!("expected {m} edges, found {edges_seen}"),
        ));
    }

    Ok(match body {
        Body::Graph(graph) => ParsedFile::Graph { graph, labels },
        Body::Digraph(digraph) => ParsedFile::Digraph { digraph, labels },
    })
}

/// Canonical edge-list text for a graph: sorted edges, labels last.
pub fn serialize_graph(graph: &Graph, labels: Option<&LabelFn>) -> String {
    let edges = graph.edges();
    let mut out = format!("graph {} {}\n", graph.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(f) = labels {
        out.push_str(&format!("labels {}\n", f.bits().bitstring()));
    }
    out
}

/// Canonical edge-list text for a digraph: sorted arcs, labels last.
pub fn serialize_digraph(digraph: &Digraph, labels: Option<&LabelFn>) -> String {
    let arcs = digraph.arcs();
    let mut out = format!("digraph {} {}\n", digraph.n(), arcs.len());
    for (u, v) in arcs {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(f) = labels {
        out.push_str(&format!("labels {}\n", f.bits().bitstring()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn parse_graph(text: &str) -> Graph {
        match parse_edge_list(text).unwrap() {
            ParsedFile::Graph { graph, .. } => graph,
            _ => panic!("expected graph"),
        }
    }

    #[test]
    fn parses_small_path() {
        let g = parse_graph("graph 3 2\n0 1\n1 2");
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_single_arc_digraph() {
        match parse_edge_list("digraph 2 1\n0 1").unwrap() {
            ParsedFile::Digraph { digraph, .. } => {
                assert!(digraph.has_arc(0, 1));
                assert!(!digraph.has_arc(1, 0));
            }
            _ => panic!("expected digraph"),
        }
    }

    #[test]
    fn comments_blank_lines_and_labels() {
        let text = "# a path\n\ngraph 3 2\n0 1\n# middle comment\n1 2\nlabels 101\n";
        match parse_edge_list(text).unwrap() {
            ParsedFile::Graph { graph, labels } => {
                assert_eq!(graph.edge_count(), 2);
                let f = labels.expect("labels line present");
                assert!(f.get(0) && !f.get(1) && f.get(2));
            }
            _ => panic!("expected graph"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("graph 3 2\n0 1\n1 5").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("out of range"), "{}", err.message);

        let err = parse_edge_list("graph 3 1\n1 1").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("self-loop"), "{}", err.message);

        let err = parse_edge_list("graph 3 2\n0 1\nbogus line").unwrap_err();
        assert_eq!(err.line, 3);

        let err = parse_edge_list("graph 3 2\n0 1\n0 1").unwrap_err();
        assert!(err.message.contains("duplicate"), "{}", err.message);

        let err = parse_edge_list("graph 3 3\n0 1\n1 2").unwrap_err();
        assert!(err.message.contains("expected 3 edges"), "{}", err.message);

        let err = parse_edge_list("# nothing\n").unwrap_err();
        assert!(err.message.contains("missing header"), "{}", err.message);

        let err = parse_edge_list("graph 2 1\nlabels 01\n0 1\nlabels 01").unwrap_err();
        assert!(err.message.contains("duplicate labels"), "{}", err.message);

        let err = parse_edge_list("graph 2 1\nlabels 011\n0 1").unwrap_err();
        assert!(err.message.contains("does not match"), "{}", err.message);
    }

    #[test]
    fn serialize_is_canonical_fixed_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(211);
        for _ in 0..100 {
            let n = rng.random_range(1..=12);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let labels = rng
                .random_bool(0.5)
                .then(|| LabelFn::new(BitVector::random(n, &mut rng)));
            let text = serialize_graph(&g, labels.as_ref());
            match parse_edge_list(&text).unwrap() {
                ParsedFile::Graph {
                    graph,
                    labels: parsed,
                } => {
                    assert_eq!(serialize_graph(&graph, parsed.as_ref()), text);
                    assert_eq!(graph.edges(), g.edges());
                }
                _ => panic!("expected graph"),
            }
        }
    }

    #[test]
    fn digraph_round_trip_preserves_opposite_arcs() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 0), (2, 0)]);
        let text = serialize_digraph(&d, None);
        match parse_edge_list(&text).unwrap() {
            ParsedFile::Digraph { digraph, .. } => assert_eq!(digraph.arcs(), d.arcs()),
            _ => panic!("expected digraph"),
        }
    }
}
