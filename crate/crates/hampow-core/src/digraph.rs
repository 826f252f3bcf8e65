//! Simple digraph representation: degrees, connectivity, acyclicity,
//! distances, and the p# imbalance measure.

use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
}

/// Simple directed graph on dense vertex indices `0..n`.
///
/// No self-loops, no parallel edges. Out-adjacency lists are kept sorted,
/// so edge membership is a binary search and all traversals are
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    m: usize,
    out_adj: Vec<Vec<usize>>,
}

impl Digraph {
    /// Validates and builds. Duplicate edges are a hard error rather than
    /// silently collapsed, so corpus generators cannot mask bugs.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            out_adj[u].push(v);
        }
        for (u, adj) in out_adj.iter_mut().enumerate() {
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u, w[0]));
            }
        }
        Ok(Digraph {
            n,
            m: edges.len(),
            out_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn out(&self, u: usize) -> &[usize] {
        &self.out_adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Edges in (source, then target) sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().map(move |&v| (u, v)))
    }

    /// Per-vertex (indegree, outdegree).
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        let mut deg = vec![(0usize, 0usize); self.n];
        for (u, adj) in self.out_adj.iter().enumerate() {
            deg[u].1 = adj.len();
            for &v in adj {
                deg[v].0 += 1;
            }
        }
        deg
    }

    /// p#(G) = half the total degree imbalance; equals the minimum number of
    /// dipaths in any edge-disjoint dipath + dicycle decomposition.
    pub fn p_sharp(&self) -> u64 {
        let total: u64 = self
            .degrees()
            .iter()
            .map(|&(din, dout)| (dout as i64 - din as i64).unsigned_abs())
            .sum();
        debug_assert_eq!(total % 2, 0, "imbalances sum to an even number");
        total / 2
    }

    /// Graph with every edge reversed.
    pub fn reverse(&self) -> Digraph {
        let rev: Vec<(usize, usize)> = self.edges().map(|(u, v)| (v, u)).collect();
        Digraph::build(self.n, &rev).expect("reversal preserves simplicity")
    }

    fn reach_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.out_adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Two reachability sweeps from vertex 0 (forward and on the reverse
    /// graph). The empty graph and a single vertex count as strongly
    /// connected.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_from(0).iter().all(|&r| r) && self.reverse().reach_from(0).iter().all(|&r| r)
    }

    /// Connectivity in the sense used for Eulerian checks: strong
    /// connectivity, with isolated vertices rejected (a degree-0 vertex makes
    /// the graph not connected, since subgraphs stay on the full vertex set).
    pub fn is_connected_eulerian_sense(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.degrees().iter().all(|&(din, dout)| din + dout > 0) && self.is_strongly_connected()
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_sort().is_some()
    }

    /// Kahn's algorithm with a min-heap, so the returned ordering is the
    /// lexicographically smallest topological sort. `None` iff a dicycle
    /// exists.
    pub fn topological_sort(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = vec![0; self.n];
        for (_, v) in self.edges() {
            indeg[v] += 1;
        }
        let mut heap: BinaryHeap<std::cmp::Reverse<usize>> = indeg
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(v, _)| std::cmp::Reverse(v))
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(std::cmp::Reverse(u)) = heap.pop() {
            order.push(u);
            for &v in &self.out_adj[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    heap.push(std::cmp::Reverse(v));
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// One BFS sweep per source vertex.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let mut d = vec![DistanceMatrix::INFINITY; self.n * self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            let row = &mut d[s * self.n..(s + 1) * self.n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.out_adj[u] {
                    if row[v] == DistanceMatrix::INFINITY {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n: self.n, d }
    }

    /// BFS distances from one source; INFINITY marks unreachable.
    pub fn bfs_distances(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![DistanceMatrix::INFINITY; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.out_adj[u] {
                if dist[v] == DistanceMatrix::INFINITY {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS parent tree from `root`; parent[root] = root, unreached = None.
    pub fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        parent[root] = Some(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.out_adj[u] {
                if parent[v].is_none() {
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        parent
    }
}

/// All-pairs shortest dipath lengths. Unreachable pairs carry a sentinel
/// strictly greater than any possible finite distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const INFINITY: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn is_finite(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != Self::INFINITY
    }

    /// Addition that saturates at the infinity sentinel.
    pub fn add(a: u32, b: u32) -> u32 {
        a.saturating_add(b)
    }
}
