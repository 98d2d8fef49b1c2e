//! Undirected weighted graphs, graph signals and the normalized Laplacian.

use std::collections::HashSet;

use crate::error::{domain, Error, Result};
use crate::linalg::{eig_sym, Matrix, SpectralDecomposition};

/// Eigenvalue round-off beyond `[0, 2]` smaller than this is clamped away.
const SPECTRUM_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl Graph {
    /// Builds a graph from `(u, v, w)` triples. Each unordered pair may
    /// appear once; weights must be positive.
    pub fn new(node_count: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if node_count == 0 {
            return Err(domain("graph needs at least one node"));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, w) in &edges {
            if u >= node_count || v >= node_count {
                return Err(domain(format!(
                    "edge ({u}, {v}) refers to a node outside 0..{node_count}"
                )));
            }
            if u == v {
                return Err(domain(format!("self-loop at node {u}")));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(domain(format!("edge ({u}, {v}) has non-positive weight {w}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(domain(format!("edge ({u}, {v}) listed more than once")));
            }
        }
        Ok(Self { node_count, edges })
    }

    /// Parses a whitespace-separated `u v [w]` edge list with 0-based node
    /// indices. `#` starts a comment. A `# nodes: N` line fixes the node
    /// count; otherwise it is one more than the largest index.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut declared = None;
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let (body, comment) = match raw.split_once('#') {
                Some((b, c)) => (b, Some(c)),
                None => (raw, None),
            };
            if let Some(count) = comment.and_then(|c| c.trim().strip_prefix("nodes:")) {
                let n = count.trim().parse::<usize>().map_err(|_| {
                    Error::Parse(format!("line {lineno}: bad node count '{}'", count.trim()))
                })?;
                declared = Some(n);
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            if fields.len() > 3 || fields.len() < 2 {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected 'u v [w]', got '{}'",
                    raw.trim()
                )));
            }
            let index = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad node index '{s}'")))
            };
            let weight = match fields.get(2) {
                Some(s) => s
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad weight '{s}'")))?,
                None => 1.0,
            };
            edges.push((index(fields[0])?, index(fields[1])?, weight));
        }
        let inferred = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
        let node_count = match declared {
            Some(n) if n < inferred => {
                return Err(Error::Parse(format!(
                    "declared {n} nodes but an edge refers to node {}",
                    inferred - 1
                )))
            }
            Some(n) => n,
            None => inferred,
        };
        if node_count == 0 {
            return Err(Error::Parse("edge list defines no nodes".into()));
        }
        Self::new(node_count, edges)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.node_count];
        for &(u, v, w) in &self.edges {
            d[u] += w;
            d[v] += w;
        }
        d
    }

    /// `D^{-1/2} (D - A) D^{-1/2}`, with zero rows and columns for isolated
    /// nodes.
    pub fn normalized_laplacian(&self) -> Matrix {
        let n = self.node_count;
        let inv_sqrt: Vec<f64> = self
            .degrees()
            .iter()
            .map(|&d| if d > 0.0 { 1.0 / d.sqrt() } else { 0.0 })
            .collect();
        let mut l = Matrix::zeros(n, n);
        for (i, &s) in inv_sqrt.iter().enumerate() {
            if s > 0.0 {
                l[(i, i)] = 1.0;
            }
        }
        for &(u, v, w) in &self.edges {
            let x = -w * inv_sqrt[u] * inv_sqrt[v];
            l[(u, v)] = x;
            l[(v, u)] = x;
        }
        l
    }

    /// Eigendecomposition of the normalized Laplacian, eigenvalues in `[0, 2]`.
    pub fn laplacian_spectrum(&self) -> Result<SpectralDecomposition> {
        let mut d = eig_sym(&self.normalized_laplacian())?;
        d.clamp_eigenvalues(0.0, 2.0, SPECTRUM_SLACK);
        Ok(d)
    }
}

/// One real value per node.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSignal {
    pub values: Vec<f64>,
}

impl GraphSignal {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.values.len() == expected {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected,
                found: self.values.len(),
            })
        }
    }

    /// Reads one value per line (or a single-column CSV). A non-numeric
    /// first line is taken as a header; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut first = true;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let field = line.strip_suffix(',').unwrap_or(line).trim();
            if field.contains(',') {
                return Err(Error::Parse(format!(
                    "line {}: expected a single column, got '{line}'",
                    lineno + 1
                )));
            }
            match field.parse::<f64>() {
                Ok(v) if v.is_finite() => values.push(v),
                Ok(_) => {
                    return Err(Error::Parse(format!(
                        "line {}: non-finite value '{field}'",
                        lineno + 1
                    )))
                }
                Err(_) if first => {}
                Err(_) => {
                    return Err(Error::Parse(format!(
                        "line {}: bad value '{field}'",
                        lineno + 1
                    )))
                }
            }
            first = false;
        }
        Ok(Self { values })
    }

    /// Single-column CSV with a `value` header, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value\n");
        for v in &self.values {
            out.push_str(&format!("{v:.16e}\n"));
        }
        out
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl From<Vec<f64>> for GraphSignal {
    fn from(values: Vec<f64>) -> Self {
        Self::new(values)
    }
}
