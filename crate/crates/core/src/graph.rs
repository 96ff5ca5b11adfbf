//! Directed-graph representation, degrees, bipartization and file loading.
//!
//! Graphs are unweighted, loop-free 0/1 adjacency structures. Node ids are
//! 1-based at the I/O boundary (edge lists, Matrix Market, constructors that
//! mirror file contents) and 0-based everywhere inside the library.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Immutable directed graph over `n` nodes with dense 0/1 adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    adj: Vec<u8>,
    labels: Option<Vec<String>>,
}

/// Row and column sums of the adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    pub out_deg: Vec<usize>,
    pub in_deg: Vec<usize>,
}

/// Symmetric `2n x 2n` adjacency `[[0, A], [A^T, 0]]` of the bipartization.
///
/// Flat index `i < n` is the hub copy of node `i`; index `n + i` is its
/// authority copy.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteAdjacency {
    pub size: usize,
    pub matrix: Matrix,
}

/// A graph read from a file, plus loader warnings.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: DirectedGraph,
    /// Self-loop entries dropped from the input.
    pub self_loops_dropped: usize,
    /// Advisory only: loading succeeds either way.
    pub weakly_connected: bool,
}

impl DirectedGraph {
    /// Build a graph from 1-based `(source, target)` pairs.
    ///
    /// Duplicate edges collapse to a single edge. Self-loops and ids outside
    /// `1..=n` are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        assert!(n > 0, "node count must be positive");
        let mut adj = vec![0u8; n * n];
        for &(src, dst) in edges {
            if src == 0 || src > n {
                return Err(Error::NodeOutOfRange { id: src, n });
            }
            if dst == 0 || dst > n {
                return Err(Error::NodeOutOfRange { id: dst, n });
            }
            if src == dst {
                return Err(Error::SelfLoop { id: src });
            }
            adj[(src - 1) * n + (dst - 1)] = 1;
        }
        Ok(Self {
            n,
            adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch {
                left: labels.len(),
                right: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Edge test on 0-based ids.
    #[inline]
    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        self.adj[src * self.n + dst] != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&b| b as usize).sum()
    }

    /// All edges as 0-based pairs in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(move |(k, _)| (k / n, k % n))
    }

    /// Dense adjacency as a float matrix.
    pub fn adjacency_matrix(&self) -> Matrix {
        Matrix::from_fn(self.n, self.n, |i, j| self.adj[i * self.n + j] as f64)
    }

    /// Graph with all edges reversed. Labels carry over.
    pub fn reversed(&self) -> DirectedGraph {
        let mut adj = vec![0u8; self.n * self.n];
        for (src, dst) in self.edges() {
            adj[dst * self.n + src] = 1;
        }
        DirectedGraph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    pub fn degrees(&self) -> DegreeVector {
        let mut out_deg = vec![0usize; self.n];
        let mut in_deg = vec![0usize; self.n];
        for (src, dst) in self.edges() {
            out_deg[src] += 1;
            in_deg[dst] += 1;
        }
        DegreeVector { out_deg, in_deg }
    }

    /// Adjacency of the associated undirected bipartite graph.
    pub fn bipartite_adjacency(&self) -> BipartiteAdjacency {
        let n = self.n;
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for (src, dst) in self.edges() {
            m[(src, n + dst)] = 1.0;
            m[(n + dst, src)] = 1.0;
        }
        BipartiteAdjacency {
            size: 2 * n,
            matrix: m,
        }
    }

    /// True when the undirected version of the graph is connected.
    #[allow(clippy::needless_range_loop)] // scanning node ids
    pub fn is_weakly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in 0..self.n {
                if !seen[v] && (self.has_edge(u, v) || self.has_edge(v, u)) {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }
}

/// Connected components of the bipartite graph, as sorted 0-based flat-index
/// sets ordered by smallest member.
#[allow(clippy::needless_range_loop)] // scanning node ids
pub fn connected_components_undirected(b: &BipartiteAdjacency) -> Vec<Vec<usize>> {
    let n = b.size;
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !seen[v] && b.matrix[(u, v)] != 0.0 {
                    seen[v] = true;
                    component.push(v);
                    queue.push_back(v);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

fn build_loaded(n: usize, edges: Vec<(usize, usize)>, self_loops: usize) -> Result<LoadedGraph> {
    let graph = DirectedGraph::from_edges(n, &edges)?;
    let weakly_connected = graph.is_weakly_connected();
    Ok(LoadedGraph {
        graph,
        self_loops_dropped: self_loops,
        weakly_connected,
    })
}

/// Read a whitespace-separated `src dst` edge list with 1-based ids.
///
/// Lines starting with `#` are comments. An optional `n=<k>` line fixes the
/// node count; otherwise it is inferred as the largest id seen. Self-loops
/// are dropped and counted, duplicates collapse silently.
pub fn load_edgelist(reader: impl BufRead) -> Result<LoadedGraph> {
    let mut edges = Vec::new();
    let mut declared_n: Option<usize> = None;
    let mut max_id = 0usize;
    let mut self_loops = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("n=") {
            let k: usize = rest.trim().parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                reason: format!("invalid node count {rest:?}"),
            })?;
            if k == 0 {
                return Err(Error::MalformedLine {
                    line: line_no,
                    reason: "node count must be positive".into(),
                });
            }
            declared_n = Some(k);
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: format!("expected `src dst`, found {trimmed:?}"),
            });
        }
        let parse = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                reason: format!("invalid node id {tok:?}"),
            })
        };
        let src = parse(tokens[0])?;
        let dst = parse(tokens[1])?;
        if src == 0 || dst == 0 {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: "node ids are 1-based".into(),
            });
        }
        if src == dst {
            self_loops += 1;
            continue;
        }
        max_id = max_id.max(src).max(dst);
        edges.push((src, dst));
    }

    let n = match declared_n {
        Some(k) => k,
        None if max_id > 0 => max_id,
        None => return Err(Error::EmptyInput),
    };
    build_loaded(n, edges, self_loops)
}

/// Read a Matrix Market coordinate file as a directed graph.
///
/// Accepts `matrix coordinate (pattern|real|integer) general` headers only.
/// Nonzero off-diagonal entries become unweighted edges; values are
/// discarded, self-loops dropped and counted.
pub fn load_matrix_market(reader: impl BufRead) -> Result<LoadedGraph> {
    let mut lines = reader.lines().enumerate();

    let (_, header) = lines.next().ok_or(Error::EmptyInput)?;
    let header = header?;
    let tokens: Vec<String> = header.split_whitespace().map(str::to_lowercase).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(Error::UnsupportedHeader(header));
    }
    if tokens[1] != "matrix" || tokens[2] != "coordinate" {
        return Err(Error::UnsupportedHeader(header));
    }
    let field = tokens[3].as_str();
    if !matches!(field, "pattern" | "real" | "integer") {
        return Err(Error::UnsupportedHeader(header));
    }
    if tokens[4] != "general" {
        return Err(Error::UnsupportedHeader(header));
    }

    let mut size: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut self_loops = 0usize;

    for (idx, line) in lines {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let parse_usize = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                reason: format!("invalid integer {tok:?}"),
            })
        };
        match size {
            None => {
                if tokens.len() != 3 {
                    return Err(Error::MalformedLine {
                        line: line_no,
                        reason: format!("expected `rows cols nnz`, found {trimmed:?}"),
                    });
                }
                let rows = parse_usize(tokens[0])?;
                let cols = parse_usize(tokens[1])?;
                let nnz = parse_usize(tokens[2])?;
                if rows != cols {
                    return Err(Error::NonSquareMatrix { rows, cols });
                }
                if rows == 0 {
                    return Err(Error::EmptyInput);
                }
                size = Some((rows, cols, nnz));
            }
            Some((rows, _, _)) => {
                let expected = if field == "pattern" { 2 } else { 3 };
                if tokens.len() != expected {
                    return Err(Error::MalformedLine {
                        line: line_no,
                        reason: format!("expected {expected} fields, found {trimmed:?}"),
                    });
                }
                let i = parse_usize(tokens[0])?;
                let j = parse_usize(tokens[1])?;
                if i == 0 || i > rows || j == 0 || j > rows {
                    return Err(Error::MalformedLine {
                        line: line_no,
                        reason: format!("entry ({i}, {j}) outside {rows}x{rows} matrix"),
                    });
                }
                let value = if field == "pattern" {
                    1.0
                } else {
                    tokens[2].parse::<f64>().map_err(|_| Error::MalformedLine {
                        line: line_no,
                        reason: format!("invalid value {:?}", tokens[2]),
                    })?
                };
                if value == 0.0 {
                    continue;
                }
                if i == j {
                    self_loops += 1;
                    continue;
                }
                edges.push((i, j));
            }
        }
    }

    let (n, _, _) = size.ok_or(Error::EmptyInput)?;
    build_loaded(n, edges, self_loops)
}

/// Write the graph in the edge-list format understood by [`load_edgelist`].
///
/// The `n=<k>` header is always emitted so isolated nodes survive a round
/// trip.
pub fn write_edgelist(graph: &DirectedGraph, mut writer: impl Write) -> std::io::Result<()> {
    writeln!(writer, "n={}", graph.n())?;
    for (src, dst) in graph.edges() {
        writeln!(writer, "{} {}", src + 1, dst + 1)?;
    }
    Ok(())
}
