//! graph6 front-end: certify, encode and decode line-oriented streams.

use std::io::BufRead;

use hamspec::certifier::{certify, certify_bipartite, Certificate, Verdict};
use hamspec::{
    decode_graph6, encode_graph6_string, BipartiteGraph, Family, FamilyParams, Graph, Perturbation,
};

use crate::error::{CliError, CliResult};

const HEADER: &str = ">>graph6<<";

/// Non-empty records with their 1-based line numbers; an optional `>>graph6<<`
/// prefix is stripped.
pub fn read_records<R: BufRead>(input: R) -> CliResult<Vec<(usize, String)>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let rec = line.trim_end_matches(['\r', '\n']);
        let rec = rec.strip_prefix(HEADER).unwrap_or(rec).trim();
        if !rec.is_empty() {
            out.push((i + 1, rec.to_string()));
        }
    }
    Ok(out)
}

pub fn parse_record(line: usize, record: &str) -> CliResult<Graph> {
    decode_graph6(record.as_bytes()).map_err(|source| CliError::Parse { line, source })
}

/// Certificates for every record, in input order. Parse errors stop the run.
pub fn certify_stream<R: BufRead>(
    input: R,
    bipartite: bool,
    budget: u64,
) -> CliResult<Vec<(usize, Certificate)>> {
    let mut out = Vec::new();
    for (line, rec) in read_records(input)? {
        let g = parse_record(line, &rec)?;
        let cert = if bipartite {
            let b = BipartiteGraph::from_halves(g)
                .map_err(|source| CliError::Parse { line, source })?;
            certify_bipartite(&b, budget)?
        } else {
            certify(&g, budget).map_err(|source| match source {
                hamspec::Error::Precondition(_) => CliError::Parse { line, source },
                other => CliError::Core(other),
            })?
        };
        out.push((line, cert));
    }
    Ok(out)
}

pub fn all_resolved(certs: &[(usize, Certificate)]) -> bool {
    certs
        .iter()
        .all(|(_, c)| c.verdict != Verdict::Inconclusive)
}

/// graph6 of a family member, optionally with one edge removed.
pub fn encode_family(
    family: Family,
    n: usize,
    k: usize,
    perturbation: Perturbation,
) -> CliResult<String> {
    let p = FamilyParams::new(family, n, k)?;
    let lab = p.labelled(perturbation)?;
    Ok(encode_graph6_string(lab.graph.graph()))
}

/// graph6 of a graph given as `n` on the first line and one `u v` edge per line.
pub fn encode_edge_list<R: BufRead>(input: R) -> CliResult<String> {
    let mut lines = input.lines().enumerate().filter_map(|(i, l)| match l {
        Ok(l) if l.trim().is_empty() || l.trim_start().starts_with('#') => None,
        other => Some((i + 1, other)),
    });
    let usage = |line: usize, msg: &str| CliError::Usage(format!("line {line}: {msg}"));
    let (first, n) = match lines.next() {
        Some((i, l)) => (i, l?),
        None => return Err(CliError::Usage("empty edge list".into())),
    };
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| usage(first, "expected the vertex count"))?;
    let mut edges = Vec::new();
    for (i, l) in lines {
        let l = l?;
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(usage(i, "expected two vertex indices")),
        }
    }
    let g = Graph::from_edges(n, edges).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(encode_graph6_string(&g))
}

/// `n=.. e=.. edges=u-v,...` for one decoded record.
pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!(
        "n={} e={} edges={}",
        g.order(),
        g.edge_count(),
        edges.join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_a_cycle() {
        let certs = certify_stream(">>graph6<<Bw\n\n".as_bytes(), false, 1 << 20).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].0, 1);
        assert!(matches!(
            certs[0].1.verdict,
            Verdict::HamiltonianByTheorem | Verdict::HamiltonianWithCycle
        ));
        assert!(all_resolved(&certs));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = certify_stream("Bw\n\nB!\n".as_bytes(), false, 1 << 20).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, .. }), "{err}");
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().starts_with("line 3: "));
    }

    #[test]
    fn encode_round_trips() {
        let s = encode_family(Family::N, 10, 2, Perturbation::Intact).unwrap();
        let g = parse_record(1, &s).unwrap();
        assert_eq!(g.edge_count(), 32);
        let p5 = encode_edge_list("5\n0 1\n1 2\n# comment\n2 3\n3 4\n".as_bytes()).unwrap();
        assert_eq!(p5, "DhC");
        assert_eq!(
            describe(&parse_record(1, &p5).unwrap()),
            "n=5 e=4 edges=0-1,1-2,2-3,3-4"
        );
        assert!(encode_edge_list("3\n0 1 2\n".as_bytes()).is_err());
    }
}
