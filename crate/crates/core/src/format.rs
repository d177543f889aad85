//! Line-oriented text formats, all 1-based.
//!
//! * graph: header `L R`, then one `i j` line per edge `{x_i, y_j}`;
//! * lattice: header `n`, then one `n`-character 0/1 string per member,
//!   leftmost character `x_1`;
//! * poset: header `n`, then one `i j` line per relation `p_i ≤ p_j`;
//!   the reflexive-transitive closure is taken on load.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Writers
//! emit sorted output with no comments, so parse-then-write is canonical.

use crate::bits::{mask_from_str, mask_to_string};
use crate::{BipartiteGraph, Error, Poset, Result, SubsetFamily};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_numbers<const K: usize>(line: usize, text: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != K {
        return Err(parse_err(
            line,
            format!("expected {K} integers, found {:?}", text),
        ));
    }
    let mut out = [0usize; K];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {f:?}")))?;
    }
    Ok(out)
}

fn parse_index(line: usize, value: usize, bound: usize, what: &str) -> Result<usize> {
    if value == 0 || value > bound {
        return Err(parse_err(
            line,
            format!("{what} index {value} outside 1..={bound}"),
        ));
    }
    Ok(value - 1)
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `L R`"))?;
    let [l, r] = parse_numbers::<2>(hline, header)?;
    if l > crate::graph::MAX_SIDE || r > crate::graph::MAX_SIDE {
        return Err(parse_err(
            hline,
            format!("sides exceed {}", crate::graph::MAX_SIDE),
        ));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    for (ln, text) in lines {
        let [i, j] = parse_numbers::<2>(ln, text)?;
        let i = parse_index(ln, i, l, "left")?;
        let j = parse_index(ln, j, r, "right")?;
        if !seen.insert((i, j)) {
            return Err(parse_err(ln, format!("duplicate edge {} {}", i + 1, j + 1)));
        }
        edges.push((i, j));
    }
    BipartiteGraph::new(l, r, edges)
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {}\n", g.left_size(), g.right_size());
    for (i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}

pub fn parse_lattice(text: &str) -> Result<SubsetFamily> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n`"))?;
    let [n] = parse_numbers::<1>(hline, header)?;
    if n == 0 || n > 64 {
        return Err(parse_err(hline, format!("ground size {n} outside 1..=64")));
    }
    let mut members = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (ln, text) in lines {
        if text.len() != n {
            return Err(parse_err(
                ln,
                format!("member {text:?} should have {n} characters"),
            ));
        }
        let mask = mask_from_str(text)
            .ok_or_else(|| parse_err(ln, format!("member {text:?} is not a 0/1 string")))?;
        if !seen.insert(mask) {
            return Err(parse_err(ln, format!("duplicate member {text}")));
        }
        members.push(mask);
    }
    SubsetFamily::new(n, members)
}

pub fn write_lattice(f: &SubsetFamily) -> String {
    let mut out = format!("{}\n", f.ground_size());
    for m in f.members() {
        out.push_str(&mask_to_string(*m, f.ground_size()));
        out.push('\n');
    }
    out
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n`"))?;
    let [n] = parse_numbers::<1>(hline, header)?;
    if n == 0 || n > 64 {
        return Err(parse_err(hline, format!("poset size {n} outside 1..=64")));
    }
    let mut relations = Vec::new();
    for (ln, text) in lines {
        let [i, j] = parse_numbers::<2>(ln, text)?;
        relations.push((
            parse_index(ln, i, n, "element")?,
            parse_index(ln, j, n, "element")?,
        ));
    }
    Poset::from_relations(n, relations)
}

/// Writes every strict relation, so the file needs no closure to be read back.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("{}\n", p.size());
    for (i, j) in p.strict_relations() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_roundtrip_and_comments() {
        let text = "# four-cycle\n2 2\n1 1\n\n1 2\n# c\n2 2\n2 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(write_graph(&g), "2 2\n1 1\n1 2\n2 1\n2 2\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("2 2\n1 1\n2 2\n1 1\n").unwrap_err(),
            Error::Parse {
                line: 4,
                message: "duplicate edge 1 1".into()
            }
        );
        assert!(matches!(
            parse_graph("2 2\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("2 2\n3 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("2 2\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("2 2\n1 1\n"),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn lattice_format() {
        let f = parse_lattice("2\n11\n00\n").unwrap();
        assert_eq!(f.members(), &[0b00, 0b11]);
        assert_eq!(write_lattice(&f), "2\n00\n11\n");
        assert!(matches!(
            parse_lattice("2\n00\n00\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_lattice("2\n001\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_lattice("2\n0a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_lattice("0\n"), Err(Error::Parse { .. })));
        // leftmost character is x1
        assert_eq!(parse_lattice("3\n100\n").unwrap().members(), &[0b001]);
    }

    #[test]
    fn poset_format() {
        let p = parse_poset("3\n1 2\n2 3\n").unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(write_poset(&p), "3\n1 2\n1 3\n2 3\n");
        assert!(matches!(
            parse_poset("2\n1 2\n2 1\n"),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_poset("2\n1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
