//! Graph powers, exact Hamiltonicity testing, and the Hamiltonicity
//! exponent h(G) with verifiable certificates.

use crate::digraph::Digraph;
use crate::walk::Walk;

/// Default node-expansion budget for the branch-and-bound solver.
/// Expansions, not wall-clock, so runs are reproducible.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Bitmask DP handles up to this many vertices by default.
pub const DP_VERTEX_LIMIT: usize = 22;

// Endpoint sets are u32 bitmasks and the table is 2^n entries, so the DP
// cannot be pushed past this regardless of configuration.
const DP_HARD_CAP: usize = 24;

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Node-expansion budget for branch-and-bound.
    pub budget: u64,
    /// Largest n routed to the exact bitmask DP (capped at 24 internally).
    pub dp_threshold: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: DEFAULT_BUDGET,
            dp_threshold: DP_VERTEX_LIMIT,
        }
    }
}

/// k-th power: edge u -> v whenever 0 < dist(u, v) <= k in G.
pub fn power(g: &Digraph, k: u32) -> Digraph {
    assert!(k >= 1, "power exponent must be positive");
    let n = g.n();
    let d = g.all_pairs_distances();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && d.is_finite(u, v) && d.get(u, v) <= k {
                edges.push((u, v));
            }
        }
    }
    Digraph::build(n, &edges).expect("power of a simple digraph is simple")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamResult {
    /// A spanning dicycle, starting and ending at its minimum vertex.
    Hamiltonian(Walk),
    NonHamiltonian,
    /// Branch-and-bound ran out of node expansions.
    Indeterminate,
}

impl HamResult {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, HamResult::Hamiltonian(_))
    }
}

// Held-Karp style subset DP. dp[mask] is the set of endpoints v reachable
// from vertex 0 by a dipath visiting exactly `mask` (0 in every mask).
// Exact; only called for n <= DP_HARD_CAP.
fn dp_hamiltonian(g: &Digraph) -> Option<Walk> {
    let n = g.n();
    debug_assert!((2..=DP_HARD_CAP).contains(&n));
    let full: u32 = ((1u64 << n) - 1) as u32;
    let mut dp = vec![0u32; 1usize << n];
    dp[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        let mut ends = dp[mask as usize];
        while ends != 0 {
            let u = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            for &v in g.out(u) {
                let bit = 1u32 << v;
                if mask & bit == 0 {
                    dp[(mask | bit) as usize] |= bit;
                }
            }
        }
    }
    let closers = dp[full as usize];
    let last = (0..n).find(|&v| closers >> v & 1 == 1 && g.has_edge(v, 0))?;
    // walk the table backwards, smallest predecessor first, for a
    // deterministic cycle
    let mut seq = vec![last];
    let mut mask = full;
    let mut cur = last;
    while mask != 1 {
        let prev_mask = mask & !(1u32 << cur);
        let prev = (0..n)
            .find(|&u| dp[prev_mask as usize] >> u & 1 == 1 && g.has_edge(u, cur))
            .expect("dp table is backward-consistent");
        seq.push(prev);
        mask = prev_mask;
        cur = prev;
    }
    seq.reverse();
    seq.push(0);
    Some(Walk::dicycle(seq).expect("dp reconstruction visits each vertex once"))
}

struct Bnb<'a> {
    g: &'a Digraph,
    rev: Digraph,
    budget: u64,
    expansions: u64,
    exhausted: bool,
    on_path: Vec<bool>,
    path: Vec<usize>,
}

impl Bnb<'_> {
    // Every unvisited vertex must still be reachable from `cur` and must
    // still reach vertex 0, both within the unvisited region; otherwise no
    // completion exists and the subtree is pruned.
    fn feasible(&self, cur: usize) -> bool {
        let n = self.g.n();
        let free = |v: usize| !self.on_path[v];
        let sweep = |g: &Digraph, src: usize| -> usize {
            let mut seen = vec![false; n];
            seen[src] = true;
            let mut stack = vec![src];
            let mut count = 0;
            while let Some(u) = stack.pop() {
                for &v in g.out(u) {
                    if !seen[v] && free(v) {
                        seen[v] = true;
                        count += 1;
                        stack.push(v);
                    }
                }
            }
            count
        };
        let unvisited = n - self.path.len();
        // forward from cur reaches all unvisited plus (via them) back to 0:
        // checking the count of newly reached free vertices suffices for the
        // forward half; the return direction is the reverse sweep from 0.
        sweep(self.g, cur) == unvisited && sweep(&self.rev, 0) == unvisited
    }

    fn search(&mut self, cur: usize) -> Option<Walk> {
        if self.exhausted {
            return None;
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            self.exhausted = true;
            return None;
        }
        if self.path.len() == self.g.n() {
            if self.g.has_edge(cur, 0) {
                let mut seq = self.path.clone();
                seq.push(0);
                return Some(Walk::dicycle(seq).expect("search path is vertex-simple"));
            }
            return None;
        }
        if !self.feasible(cur) {
            return None;
        }
        for i in 0..self.g.out(cur).len() {
            let v = self.g.out(cur)[i];
            if self.on_path[v] {
                continue;
            }
            self.on_path[v] = true;
            self.path.push(v);
            let hit = self.search(v);
            self.path.pop();
            self.on_path[v] = false;
            if hit.is_some() || self.exhausted {
                return hit;
            }
        }
        None
    }
}

fn bnb_hamiltonian(g: &Digraph, budget: u64) -> HamResult {
    let mut solver = Bnb {
        g,
        rev: g.reverse(),
        budget,
        expansions: 0,
        exhausted: false,
        on_path: {
            let mut p = vec![false; g.n()];
            p[0] = true;
            p
        },
        path: vec![0],
    };
    match solver.search(0) {
        Some(c) => HamResult::Hamiltonian(c),
        None if solver.exhausted => HamResult::Indeterminate,
        None => HamResult::NonHamiltonian,
    }
}

/// Exact bitmask DP for n <= opts.dp_threshold (and the hard cap 24);
/// budgeted branch-and-bound above. Indeterminate only from the latter.
pub fn is_hamiltonian(g: &Digraph, opts: &SolverOptions) -> HamResult {
    let n = g.n();
    if n < 2 {
        // no self-loops, so a spanning dicycle needs at least two vertices
        return HamResult::NonHamiltonian;
    }
    if !g.is_strongly_connected() {
        return HamResult::NonHamiltonian;
    }
    if n <= opts.dp_threshold.min(DP_HARD_CAP) {
        match dp_hamiltonian(g) {
            Some(c) => HamResult::Hamiltonian(c),
            None => HamResult::NonHamiltonian,
        }
    } else {
        bnb_hamiltonian(g, opts.budget)
    }
}

/// Witness that G^k is Hamiltonian: a spanning cyclic ordering plus, for
/// each consecutive pair, a dipath of length <= k in the base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCertificate {
    pub k: u32,
    /// All n vertices, each exactly once; cyclically closed by convention.
    pub cycle: Vec<usize>,
    /// hops[i] joins cycle[i] to cycle[(i+1) % n] in the base graph.
    pub hops: Vec<Walk>,
}

impl HamiltonCertificate {
    /// "k=..." line, "cycle: ..." line, then one "hop: ..." line per edge.
    pub fn serialize(&self) -> String {
        let joined = |vs: &[usize]| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("k={}\ncycle: {}\n", self.k, joined(&self.cycle));
        for hop in &self.hops {
            out.push_str(&format!("hop: {}\n", joined(hop.vertices())));
        }
        out
    }
}

/// Checks every certificate invariant against the base graph.
pub fn verify_certificate(g: &Digraph, cert: &HamiltonCertificate) -> bool {
    let n = g.n();
    if cert.cycle.len() != n || cert.hops.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &cert.cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for (i, hop) in cert.hops.iter().enumerate() {
        let from = cert.cycle[i];
        let to = cert.cycle[(i + 1) % n];
        let vs = hop.vertices();
        if vs.first() != Some(&from) || vs.last() != Some(&to) {
            return false;
        }
        if hop.len() as u32 > cert.k || hop.validate_in(g).is_err() {
            return false;
        }
    }
    true
}

// Shortest dipath s -> t from the BFS parent tree of s.
fn bfs_path(g: &Digraph, s: usize, t: usize) -> Vec<usize> {
    let parent = g.bfs_parents(s);
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = parent[cur].expect("endpoint reachable when the power edge exists");
        path.push(cur);
    }
    path.reverse();
    path
}

fn build_certificate(base: &Digraph, k: u32, spanning: &Walk) -> HamiltonCertificate {
    let vs = spanning.vertices();
    let cycle: Vec<usize> = vs[..vs.len() - 1].to_vec();
    let hops = spanning
        .edges()
        .map(|(u, v)| Walk::dipath(bfs_path(base, u, v)).expect("bfs paths are vertex-simple"))
        .collect();
    HamiltonCertificate { k, cycle, hops }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentOutcome {
    /// Least k with G^k Hamiltonian, plus a verified certificate.
    Exact { h: u32, cert: HamiltonCertificate },
    /// Not strongly connected or n < 2: no power is ever Hamiltonian
    /// (powers preserve reachability).
    NotApplicable,
    /// Budget ran out; h is guaranteed to lie in [lo, hi].
    BudgetExhausted { lo: u32, hi: u32 },
}

/// Binary search on k over [1, n-1]; sound because the powers nest
/// (A(G^k) is contained in A(G^{k+1})) and G^{n-1} of a strongly connected
/// graph is complete, hence Hamiltonian.
pub fn ham_exponent(g: &Digraph, opts: &SolverOptions) -> ExponentOutcome {
    let n = g.n();
    if n < 2 || !g.is_strongly_connected() {
        return ExponentOutcome::NotApplicable;
    }
    let mut lo = 1u32;
    let mut hi = (n - 1) as u32;
    let mut witness: Option<(u32, Walk)> = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match is_hamiltonian(&power(g, mid), opts) {
            HamResult::Hamiltonian(c) => {
                hi = mid;
                witness = Some((mid, c));
            }
            HamResult::NonHamiltonian => lo = mid + 1,
            HamResult::Indeterminate => return ExponentOutcome::BudgetExhausted { lo, hi },
        }
    }
    let spanning = match witness {
        Some((k, c)) if k == lo => c,
        _ => match is_hamiltonian(&power(g, lo), opts) {
            HamResult::Hamiltonian(c) => c,
            // h = lo is forced mathematically, but without a cycle there is
            // no certificate to hand out
            _ => return ExponentOutcome::BudgetExhausted { lo, hi: lo },
        },
    };
    let cert = build_certificate(g, lo, &spanning);
    debug_assert!(verify_certificate(g, &cert));
    ExponentOutcome::Exact { h: lo, cert }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> Digraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Digraph::build(n, &edges).unwrap()
    }

    fn figure_eight() -> Digraph {
        Digraph::build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn power_one_is_identity() {
        for g in [
            cycle_graph(5),
            figure_eight(),
            Digraph::build(3, &[(0, 1)]).unwrap(),
        ] {
            assert_eq!(power(&g, 1), g);
        }
    }

    #[test]
    fn power_small_fixtures() {
        let sq = power(&cycle_graph(3), 2);
        assert_eq!(sq.m(), 6);

        let path = Digraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let sq = power(&path, 2);
        let edges: Vec<(usize, usize)> = sq.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn hamiltonicity_fixtures() {
        let opts = SolverOptions::default();
        for n in 2..=12 {
            match is_hamiltonian(&cycle_graph(n), &opts) {
                HamResult::Hamiltonian(c) => {
                    assert_eq!(c.len(), n);
                    assert!(c.validate_in(&cycle_graph(n)).is_ok());
                }
                other => panic!("n-cycle must be Hamiltonian, got {other:?}"),
            }
        }
        let star = Digraph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_hamiltonian(&star, &opts), HamResult::NonHamiltonian);

        let f8 = figure_eight();
        assert_eq!(is_hamiltonian(&f8, &opts), HamResult::NonHamiltonian);
        assert!(is_hamiltonian(&power(&f8, 2), &opts).is_hamiltonian());
    }

    #[test]
    fn dp_reconstruction_is_deterministic() {
        match is_hamiltonian(&cycle_graph(6), &SolverOptions::default()) {
            HamResult::Hamiltonian(c) => assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5, 0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bnb_agrees_with_dp() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let dp_opts = SolverOptions::default();
        let bnb_opts = SolverOptions {
            dp_threshold: 0,
            ..Default::default()
        };
        let mut checked = 0;
        while checked < 60 {
            let n = rng.gen_range(3..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Digraph::build(n, &edges).unwrap();
            if !g.is_strongly_connected() {
                continue;
            }
            checked += 1;
            let a = is_hamiltonian(&g, &dp_opts);
            let b = is_hamiltonian(&g, &bnb_opts);
            assert_eq!(
                a.is_hamiltonian(),
                b.is_hamiltonian(),
                "n={n} edges={edges:?}"
            );
            for r in [a, b] {
                if let HamResult::Hamiltonian(c) = r {
                    assert!(c.validate_in(&g).is_ok());
                    assert_eq!(c.len(), n);
                }
            }
        }
    }

    #[test]
    fn bnb_budget_exhaustion() {
        let opts = SolverOptions {
            budget: 1,
            dp_threshold: 0,
        };
        // 5-cycle with a chord: enough branching that one expansion cannot
        // settle it
        let g = Digraph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(is_hamiltonian(&g, &opts), HamResult::Indeterminate);
    }

    #[test]
    fn exponent_fixtures() {
        let opts = SolverOptions::default();
        for n in 3..=12 {
            match ham_exponent(&cycle_graph(n), &opts) {
                ExponentOutcome::Exact { h, cert } => {
                    assert_eq!(h, 1);
                    assert!(verify_certificate(&cycle_graph(n), &cert));
                }
                other => panic!("{other:?}"),
            }
        }
        match ham_exponent(&figure_eight(), &opts) {
            ExponentOutcome::Exact { h, cert } => {
                assert_eq!(h, 2);
                assert_eq!(cert.k, 2);
                assert!(verify_certificate(&figure_eight(), &cert));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            ham_exponent(&Digraph::build(2, &[(0, 1)]).unwrap(), &opts),
            ExponentOutcome::NotApplicable
        );
    }

    #[test]
    fn exponent_budget_brackets() {
        let opts = SolverOptions {
            budget: 1,
            dp_threshold: 0,
        };
        match ham_exponent(&figure_eight(), &opts) {
            ExponentOutcome::BudgetExhausted { lo, hi } => {
                assert!(lo >= 1 && hi <= 4 && lo <= hi);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn certificate_verification_rejects_bad_hops() {
        let g = cycle_graph(3);
        let unit = |u: usize, v: usize| Walk::dipath(vec![u, v]).unwrap();
        let good = HamiltonCertificate {
            k: 1,
            cycle: vec![0, 1, 2],
            hops: vec![unit(0, 1), unit(1, 2), unit(2, 0)],
        };
        assert!(verify_certificate(&g, &good));

        // claims 0 -> 2 directly, but that edge is absent at k=1
        let bad = HamiltonCertificate {
            k: 1,
            cycle: vec![0, 2, 1],
            hops: vec![unit(0, 2), unit(2, 1), unit(1, 0)],
        };
        assert!(!verify_certificate(&g, &bad));

        // hop longer than k
        let long_hop = HamiltonCertificate {
            k: 1,
            cycle: vec![0, 1, 2],
            hops: vec![
                Walk::dipath(vec![0, 1]).unwrap(),
                Walk::dipath(vec![1, 2]).unwrap(),
                Walk::dipath(vec![2, 0]).unwrap(),
            ],
        };
        assert!(verify_certificate(&g, &long_hop));
        let mut broken = long_hop;
        broken.hops[0] = Walk::dipath(vec![0, 1, 2]).unwrap();
        assert!(!verify_certificate(&g, &broken));
    }

    #[test]
    fn certificate_serialization_format() {
        let cert = HamiltonCertificate {
            k: 2,
            cycle: vec![0, 1, 2],
            hops: vec![
                Walk::dipath(vec![0, 1]).unwrap(),
                Walk::dipath(vec![1, 3, 2]).unwrap(),
                Walk::dipath(vec![2, 0]).unwrap(),
            ],
        };
        assert_eq!(
            cert.serialize(),
            "k=2\ncycle: 0 1 2\nhop: 0 1\nhop: 1 3 2\nhop: 2 0\n"
        );
    }
}
