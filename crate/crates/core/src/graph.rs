//! Immutable undirected graphs, generators, Cartesian products and BFS distances.
//!
//! Vertices are contiguous ids `0..order`. Graphs built as Cartesian products
//! carry a [`ProductLabels`] layout: the vertex `v_{i,j}` (column `i` from the
//! first factor, row `j` from the second) has id `j * columns + i`, with both
//! coordinates reduced modulo the factor orders.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Column/row layout of a product graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductLabels {
    /// Order of the first factor (number of columns, index `i`).
    pub columns: usize,
    /// Order of the second factor (number of rows, index `j`).
    pub rows: usize,
}

impl ProductLabels {
    pub fn id(&self, i: isize, j: isize) -> usize {
        let i = i.rem_euclid(self.columns as isize) as usize;
        let j = j.rem_euclid(self.rows as isize) as usize;
        j * self.columns + i
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v % self.columns, v / self.columns)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<ProductLabels>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), order });
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge(u, w[0]));
            }
        }
        Ok(Self { adjacency, labels: None })
    }

    pub fn with_labels(mut self, labels: ProductLabels) -> Result<Self> {
        if labels.columns * labels.rows != self.order() {
            return Err(Error::Malformed(format!(
                "torus: {}x{} labeling does not match order {}",
                labels.columns,
                labels.rows,
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn labels(&self) -> Option<ProductLabels> {
        self.labels
    }

    pub fn product_labels(&self) -> Result<ProductLabels> {
        self.labels.ok_or(Error::NotAProduct)
    }

    /// Id of `v_{i,j}`; indices wrap around.
    pub fn vertex_at(&self, i: isize, j: isize) -> Result<usize> {
        Ok(self.product_labels()?.id(i, j))
    }

    pub fn coords(&self, v: usize) -> Result<(usize, usize)> {
        self.check_vertex(v)?;
        Ok(self.product_labels()?.coords(v))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        bfs(self, 0).iter().all(|d| d.is_some())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for start in 0..self.order() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Vertices of a shortest cycle, in cyclic order, if the graph has one.
    /// A shortest cycle is always induced.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut best: Option<Vec<usize>> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            if let Some(cycle) = close_cycle(&parent, u, w) {
                                if cycle.len() == len {
                                    best = Some(cycle);
                                }
                            }
                        }
                    }
                }
            }
        }
        best
    }
}

/// Joins the tree paths of `u` and `w` back to their lowest common ancestor.
fn close_cycle(parent: &[usize], u: usize, w: usize) -> Option<Vec<usize>> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    let lca = *pu.iter().find(|x| pw.contains(x))?;
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    let back: Vec<usize> = pw.iter().copied().take_while(|&x| x != lca).collect();
    cycle.extend(back.into_iter().rev());
    let mut sorted = cycle.clone();
    sorted.sort_unstable();
    sorted.dedup();
    (sorted.len() == cycle.len()).then_some(cycle)
}

fn bfs(g: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidOrder("path needs at least 1 vertex".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidOrder("complete graph needs at least 1 vertex".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}`: vertices `0..a` on the left, `a..a+b` on the right.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidOrder(format!("both sides must be nonempty, got K_{{{a},{b}}}")));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// `G □ H`. Vertex `(u, u')` gets id `u' * |V(G)| + u`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::InvalidOrder("product factors must be nonempty".into()));
    }
    let labels = ProductLabels { columns: g.order(), rows: h.order() };
    let mut edges = Vec::with_capacity(g.edge_count() * h.order() + h.edge_count() * g.order());
    for j in 0..h.order() {
        for (a, b) in g.edges() {
            edges.push((j * labels.columns + a, j * labels.columns + b));
        }
    }
    for i in 0..g.order() {
        for (a, b) in h.edges() {
            edges.push((a * labels.columns + i, b * labels.columns + i));
        }
    }
    Graph::from_edges(labels.columns * labels.rows, &edges)?.with_labels(labels)
}

/// `C_m □ C_n`.
pub fn make_torus(m: usize, n: usize) -> Result<Graph> {
    cartesian_product(&make_cycle(m)?, &make_cycle(n)?)
}

/// `P_m □ P_n`.
pub fn make_grid(m: usize, n: usize) -> Result<Graph> {
    cartesian_product(&make_path(m)?, &make_path(n)?)
}

/// All-pairs hop distances, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for source in 0..n {
        for (target, d) in bfs(g, source).into_iter().enumerate() {
            dist.push(d.ok_or(Error::Unreachable { from: source, to: target })?);
        }
    }
    Ok(DistanceMatrix { order: n, dist })
}

/// `N[S]`: the members of `s` and all their neighbours, sorted.
pub fn closed_neighborhood(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    for &v in s {
        g.check_vertex(v)?;
        seen[v] = true;
        for &w in g.neighbors(v) {
            seen[w] = true;
        }
    }
    Ok(seen.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TorusJson {
    m: usize,
    rows: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    edges: Vec<(usize, usize)>,
    n: usize,
    torus: Option<TorusJson>,
}

impl Graph {
    /// Canonical JSON: sorted keys, edges sorted lexicographically with `u < v`,
    /// no whitespace.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            edges: self.edges(),
            n: self.order(),
            torus: self.labels.map(|l| TorusJson { m: l.columns, rows: l.rows }),
        };
        serde_json::to_string(&doc).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| {
            // re-read field by field so the message can name the culprit
            let field = serde_json::from_str::<serde_json::Map<String, serde_json::Value>>(text)
                .ok()
                .and_then(|map| {
                    let bad = |key: &str, ok: bool| (!ok).then(|| key.to_string());
                    let get = |key: &str| map.get(key).cloned().unwrap_or(serde_json::Value::Null);
                    bad("n", serde_json::from_value::<usize>(get("n")).is_ok())
                        .or_else(|| bad("edges", serde_json::from_value::<Vec<(usize, usize)>>(get("edges")).is_ok()))
                        .or_else(|| bad("torus", serde_json::from_value::<Option<TorusJson>>(get("torus")).is_ok()))
                });
            match field {
                Some(f) => Error::Malformed(format!("{f}: {e}")),
                None => Error::Malformed(format!("graph JSON: {e}")),
            }
        })?;
        for &(u, v) in &doc.edges {
            if u >= doc.n || v >= doc.n {
                return Err(Error::Malformed(format!(
                    "edges: endpoint of [{u},{v}] out of range for n = {}",
                    doc.n
                )));
            }
        }
        let g = Graph::from_edges(doc.n, &doc.edges)
            .map_err(|e| Error::Malformed(format!("edges: {e}")))?;
        match doc.torus {
            None => Ok(g),
            Some(t) => {
                if t.m == 0 || t.rows == 0 {
                    return Err(Error::Malformed("torus: m and rows must be positive".into()));
                }
                g.with_labels(ProductLabels { columns: t.m, rows: t.rows })
            }
        }
    }

    /// Graphviz export. Product graphs label each node `v_{i,j}`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match self.labels {
                Some(l) => {
                    let (i, j) = l.coords(v);
                    let _ = writeln!(out, "  {v} [label=\"v_{{{i},{j}}}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
