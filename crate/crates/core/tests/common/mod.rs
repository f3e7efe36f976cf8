//! Shared fixtures: a seeded corpus of small connected graphs and an
//! independent minimax model of the game on byte masks.

#![allow(dead_code)]

use std::collections::VecDeque;

use locgame::graph::{
    make_complete, make_complete_bipartite, make_cycle, make_grid, make_path, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Named families plus seeded random connected graphs, all with 3 to 8
/// vertices.
pub fn mini_corpus(random: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=8 {
        out.push((format!("P{n}"), make_path(n).unwrap()));
        out.push((format!("C{n}"), make_cycle(n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("K{n}"), make_complete(n).unwrap()));
    }
    for (a, b) in [(1, 3), (1, 5), (2, 3), (2, 4), (3, 3), (2, 6)] {
        out.push((format!("K{a},{b}"), make_complete_bipartite(a, b).unwrap()));
    }
    for (a, b) in [(2, 2), (2, 3), (2, 4)] {
        out.push((format!("P{a}xP{b}"), make_grid(a, b).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..random {
        let n = rng.gen_range(3..=8);
        let density: f64 = rng.gen_range(0.1..0.7);
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        for u in 0..n {
            for v in u + 1..n {
                if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        out.push((format!("random#{idx}(n={n})"), Graph::from_edges(n, &edges).unwrap()));
    }
    out
}

/// BFS distances computed from the edge list alone.
pub fn bfs_distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n)
        .map(|s| {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if d[w] == u32::MAX {
                        d[w] = d[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Depth-bounded minimax over candidate sets of at most eight vertices.
pub struct Minimax {
    n: usize,
    dist: Vec<Vec<u32>>,
    closed: Vec<u8>,
    probes: Vec<Vec<usize>>,
    memo: Vec<Vec<Option<bool>>>,
}

impl Minimax {
    pub fn new(g: &Graph, k: usize) -> Self {
        let n = g.order();
        assert!(n <= 8 && k <= n);
        let dist = bfs_distances(g);
        let closed = (0..n)
            .map(|v| (0..n).filter(|&w| dist[v][w] <= 1).fold(0u8, |m, w| m | 1 << w))
            .collect();
        let mut probes = Vec::new();
        let mut cur = Vec::new();
        subsets(n, k, 0, &mut cur, &mut probes);
        let depth_bound = 1usize << n;
        Minimax { n, dist, closed, probes, memo: vec![vec![None; depth_bound + 1]; 256] }
    }

    fn classes(&self, s: u8, probe: &[usize]) -> Vec<u8> {
        let mut keyed: Vec<(Vec<u32>, u8)> = Vec::new();
        for v in (0..self.n).filter(|&v| s >> v & 1 == 1) {
            let key: Vec<u32> = probe.iter().map(|&b| self.dist[b][v]).collect();
            match keyed.iter_mut().find(|(k, _)| *k == key) {
                Some((_, m)) => *m |= 1 << v,
                None => keyed.push((key, 1 << v)),
            }
        }
        keyed.into_iter().map(|(_, m)| m).collect()
    }

    fn expand(&self, t: u8) -> u8 {
        (0..self.n).filter(|&v| t >> v & 1 == 1).fold(0, |m, v| m | self.closed[v])
    }

    /// True iff the Cop locates the Robber from candidate set `s` within
    /// `depth` probes against every Robber reply.
    pub fn wins(&mut self, s: u8, depth: usize) -> bool {
        if depth == 0 {
            return false;
        }
        if let Some(r) = self.memo[s as usize][depth] {
            return r;
        }
        let mut result = false;
        for i in 0..self.probes.len() {
            let probe = self.probes[i].clone();
            let open: Vec<u8> = self.classes(s, &probe).into_iter().filter(|c| c.count_ones() >= 2).collect();
            if open.iter().all(|&t| {
                let next = self.expand(t);
                self.wins(next, depth - 1)
            }) {
                result = true;
                break;
            }
        }
        self.memo[s as usize][depth] = Some(result);
        result
    }

    /// Fewest probes that locate the Robber from the full vertex set, or
    /// `None` if the Robber survives every depth up to `2^n`.
    pub fn optimal_turns(&mut self) -> Option<u32> {
        let all = if self.n == 8 { u8::MAX } else { (1u8 << self.n) - 1 };
        (1..=1usize << self.n).find(|&d| self.wins(all, d)).map(|d| d as u32)
    }
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for v in start..n {
        cur.push(v);
        subsets(n, k, v + 1, cur, out);
        cur.pop();
    }
}
