//! Generators: the extremal family G_k with its certificate checks, and
//! seeded random corpora (Eulerian unions of dicycles, DAGs).

use crate::digraph::Digraph;
use crate::euler::{is_minimally_eulerian, DEFAULT_CYCLE_CAP};
use crate::power::{ham_exponent, ExponentOutcome, SolverOptions};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

/// Algorithm identifier stamped into emitted corpus files so corpora
/// regenerate identically anywhere.
pub const PRNG_ALGORITHM: &str = "chacha8";

const GENERATION_ATTEMPTS: u32 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameter k must be at least 4")]
    ParameterTooSmall,
    #[error("index {0} outside [1, {1}]")]
    IndexOutOfRange(u64, u64),
    #[error("generation failed after {0} attempts")]
    GenerationFailed(u32),
}

/// Closed-form sizes of the family member for parameter k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GkParams {
    pub k: u64,
    /// ell = k(k+1)/2; there are ell-1 u-vertices and ell v-vertices.
    pub ell: u64,
    /// n = 2*ell - 1 = k^2 + k - 1
    pub n: u64,
    /// m = k(k^2 + 2k - 1)/2
    pub m: u64,
}

impl GkParams {
    pub fn new(k: u64) -> Result<GkParams, FamilyError> {
        if k < 4 {
            return Err(FamilyError::ParameterTooSmall);
        }
        let ell = k * (k + 1) / 2;
        Ok(GkParams {
            k,
            ell,
            n: 2 * ell - 1,
            m: k * (k * k + 2 * k - 1) / 2,
        })
    }
}

/// smallest p with (k) + (k-1) + ... + (k+1-p) >= i, for i in [1, ell]
pub fn phi(i: u64, k: u64) -> Result<u64, FamilyError> {
    let params = GkParams::new(k)?;
    if i < 1 || i > params.ell {
        return Err(FamilyError::IndexOutOfRange(i, params.ell));
    }
    let mut sum = 0;
    for p in 1..=k {
        sum += k + 1 - p;
        if sum >= i {
            return Ok(p);
        }
    }
    unreachable!("partial sums reach ell = {}", params.ell)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    U,
    V,
}

/// A generated family member: dense indices for the solvers, roles on the
/// side. u_i sits at index i-1 (i in [1, ell-1]), v_i at ell+i-2.
#[derive(Debug, Clone)]
pub struct GkGraph {
    pub graph: Digraph,
    pub params: GkParams,
    pub roles: Vec<Role>,
}

impl GkGraph {
    pub fn u_index(&self, i: u64) -> usize {
        debug_assert!((1..self.params.ell).contains(&i));
        (i - 1) as usize
    }

    pub fn v_index(&self, i: u64) -> usize {
        debug_assert!((1..=self.params.ell).contains(&i));
        (self.params.ell + i - 2) as usize
    }

    /// Figure-style DOT: u-vertices pinned on a horizontal line,
    /// v-vertices arced above their attachment span.
    pub fn to_dot(&self) -> String {
        let ell = self.params.ell;
        let k = self.params.k;
        let mut out = String::from("digraph gk {\n  rankdir=LR;\n  node [shape=circle];\n");
        for i in 1..ell {
            out.push_str(&format!(
                "  {} [label=\"u{}\", pos=\"{},0!\"];\n",
                self.u_index(i),
                i,
                2 * (i - 1)
            ));
        }
        for i in 1..=ell {
            // horizontal midpoint of the span from u_{ell-phi(i)} to u_{phi(i)}
            let p = phi(i, k).expect("i in range");
            let x = (ell - p - 1) + (p - 1);
            out.push_str(&format!(
                "  {} [label=\"v{}\", pos=\"{},{}!\"];\n",
                self.v_index(i),
                i,
                x,
                2 + (i % k)
            ));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("  {u} -> {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// The family member for parameter k >= 4: a chain of u-vertices with all
/// forward edges of span at most k, plus one in/out pendant v-vertex per
/// index i in [1, ell], attached via phi.
pub fn generate_gk(k: u64) -> Result<GkGraph, FamilyError> {
    let params = GkParams::new(k)?;
    let ell = params.ell;
    let mut roles = vec![Role::U; (ell - 1) as usize];
    roles.extend(std::iter::repeat_n(Role::V, ell as usize));
    let gk = GkGraph {
        graph: Digraph::build(1, &[]).unwrap(),
        params,
        roles,
    };

    let mut edges = Vec::with_capacity(params.m as usize);
    for i in 1..ell {
        for j in (i + 1)..ell.min(i + k + 1) {
            edges.push((gk.u_index(i), gk.u_index(j)));
        }
    }
    for i in 1..=ell {
        let p = phi(i, k).expect("i in range");
        edges.push((gk.u_index(ell - p), gk.v_index(i)));
        edges.push((gk.v_index(i), gk.u_index(p)));
    }
    let graph = Digraph::build(params.n as usize, &edges).expect("construction is simple");
    debug_assert_eq!(graph.m() as u64, params.m);
    Ok(GkGraph { graph, ..gk })
}

/// Exact-exponent slot of a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HExact {
    Computed(u32),
    /// Solver budget ran out; h lies in [lo, hi].
    Indeterminate {
        lo: u32,
        hi: u32,
    },
    Skipped,
}

/// What the family promises, checked rather than assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct GkCertificate {
    pub params: GkParams,
    /// is_minimally_eulerian verdict (includes Eulerian-ness).
    pub minimal: bool,
    /// every v-vertex has indegree 1 and outdegree 1
    pub v_degrees_ok: bool,
    /// min over ordered pairs i != j of dist(v_i, v_j)
    pub min_v_distance: u32,
    /// ceil(k/2) + 1 = ceil((ell+1)/k), the claimed distance value
    pub distance_bound: u64,
    pub distance_ok: bool,
    /// floor(sqrt(n)/2) + 1; the distance bound dominates it
    pub sqrt_bound: u64,
    pub sqrt_bound_ok: bool,
    pub h_exact: HExact,
}

impl GkCertificate {
    /// One stable record line per checked item.
    pub fn render(&self) -> String {
        let mut out = format!(
            "gk k={} ell={} n={} m={}\n",
            self.params.k, self.params.ell, self.params.n, self.params.m
        );
        out.push_str(&format!("gk minimal={}\n", self.minimal));
        out.push_str(&format!("gk v_degrees_ok={}\n", self.v_degrees_ok));
        out.push_str(&format!(
            "gk min_v_distance={} bound={} ok={}\n",
            self.min_v_distance, self.distance_bound, self.distance_ok
        ));
        out.push_str(&format!(
            "gk pigeonhole_h_lower={} sqrt_bound={} ok={}\n",
            self.distance_bound, self.sqrt_bound, self.sqrt_bound_ok
        ));
        match &self.h_exact {
            HExact::Computed(h) => out.push_str(&format!("gk h={h}\n")),
            HExact::Indeterminate { lo, hi } => {
                out.push_str(&format!("gk h=indeterminate lo={lo} hi={hi}\n"))
            }
            HExact::Skipped => out.push_str("gk h=skipped\n"),
        }
        out
    }

    pub fn all_checked_ok(&self) -> bool {
        self.minimal && self.v_degrees_ok && self.distance_ok && self.sqrt_bound_ok
    }
}

/// Checks the family's claims for parameter k: minimality, pendant degree
/// structure, the v-distance lower bound with its pigeonhole consequence
/// (more than half the vertices are v's, so any Hamilton cycle of a power
/// makes two v's adjacent, forcing h >= min v-distance), and, when the
/// budget permits, the exact exponent.
pub fn certify_gk(k: u64, opts: &SolverOptions) -> Result<GkCertificate, FamilyError> {
    let gk = generate_gk(k)?;
    let g = &gk.graph;
    let params = gk.params;
    let ell = params.ell;

    let minimal = is_minimally_eulerian(g, DEFAULT_CYCLE_CAP).is_minimal();

    let deg = g.degrees();
    let v_degrees_ok = (1..=ell).all(|i| deg[gk.v_index(i)] == (1, 1));

    let mut min_v_distance = u32::MAX;
    for i in 1..=ell {
        let dist = g.bfs_distances(gk.v_index(i));
        for j in 1..=ell {
            if i != j {
                min_v_distance = min_v_distance.min(dist[gk.v_index(j)]);
            }
        }
    }
    let distance_bound = k / 2 + 1 + (k % 2);
    debug_assert_eq!(distance_bound, (ell + 1).div_ceil(k));
    let sqrt_bound = params.n.isqrt() / 2 + 1;

    let h_exact = if opts.budget == 0 {
        HExact::Skipped
    } else {
        match ham_exponent(g, opts) {
            ExponentOutcome::Exact { h, .. } => HExact::Computed(h),
            ExponentOutcome::BudgetExhausted { lo, hi } => HExact::Indeterminate { lo, hi },
            ExponentOutcome::NotApplicable => {
                unreachable!("family members are strongly connected")
            }
        }
    };

    Ok(GkCertificate {
        params,
        minimal,
        v_degrees_ok,
        min_v_distance,
        distance_bound,
        distance_ok: min_v_distance as u64 >= distance_bound,
        sqrt_bound,
        sqrt_bound_ok: distance_bound >= sqrt_bound,
        h_exact,
    })
}

/// Union of `cycles` random simple dicycles (lengths uniform in
/// [3, min(n, 8)], vertices sampled without replacement), rejecting any
/// attempt that would duplicate an edge or leave the result disconnected.
pub fn random_eulerian(n: usize, cycles: usize, seed: u64) -> Result<Digraph, FamilyError> {
    assert!(n >= 3, "need room for a dicycle");
    assert!(cycles >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..GENERATION_ATTEMPTS {
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for _ in 0..cycles {
            let len = rng.gen_range(3..=n.min(8));
            let mut vs = rand::seq::index::sample(&mut rng, n, len).into_vec();
            vs.push(vs[0]);
            for w in vs.windows(2) {
                if !edges.insert((w[0], w[1])) {
                    continue 'attempt;
                }
            }
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let g = Digraph::build(n, &edges).expect("cycle edges are simple");
        if g.is_connected_eulerian_sense() {
            return Ok(g);
        }
    }
    Err(FamilyError::GenerationFailed(GENERATION_ATTEMPTS))
}

/// Random permutation, then each forward pair kept independently with
/// probability `density`; acyclic by construction.
pub fn random_dag(n: usize, density: f64, seed: u64) -> Digraph {
    assert!(n >= 1);
    assert!((0.0..=1.0).contains(&density), "density is a probability");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density) {
                edges.push((perm[i], perm[j]));
            }
        }
    }
    Digraph::build(n, &edges).expect("forward pairs of a permutation are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{enumerate_dicycles, is_eulerian};

    #[test]
    fn params_closed_forms() {
        for (k, n, m) in [(4u64, 19u64, 46u64), (5, 29, 85), (8, 71, 316)] {
            let p = GkParams::new(k).unwrap();
            assert_eq!((p.n, p.m), (n, m));
            let g = generate_gk(k).unwrap();
            assert_eq!((g.graph.n() as u64, g.graph.m() as u64), (n, m));
        }
        for k in 4..=12u64 {
            let p = GkParams::new(k).unwrap();
            let g = generate_gk(k).unwrap();
            assert_eq!(g.graph.n() as u64, p.n);
            assert_eq!(g.graph.m() as u64, p.m);
            assert_eq!(p.n, k * k + k - 1);
        }
        assert_eq!(GkParams::new(3), Err(FamilyError::ParameterTooSmall));
        assert!(matches!(
            generate_gk(3),
            Err(FamilyError::ParameterTooSmall)
        ));
    }

    #[test]
    fn phi_table_k4() {
        let want = [1u64, 1, 1, 1, 2, 2, 2, 3, 3, 4];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(phi(i as u64 + 1, 4).unwrap(), *w);
        }
        assert_eq!(phi(0, 4), Err(FamilyError::IndexOutOfRange(0, 10)));
        assert_eq!(phi(11, 4), Err(FamilyError::IndexOutOfRange(11, 10)));
    }

    #[test]
    fn members_are_eulerian_with_pendant_vs() {
        for k in 4..=8u64 {
            let gk = generate_gk(k).unwrap();
            assert!(is_eulerian(&gk.graph), "k={k}");
            let deg = gk.graph.degrees();
            for i in 1..=gk.params.ell {
                assert_eq!(deg[gk.v_index(i)], (1, 1), "k={k} v_{i}");
            }
        }
    }

    #[test]
    fn u_subgraph_is_acyclic() {
        for k in [4u64, 6] {
            let gk = generate_gk(k).unwrap();
            let ell = gk.params.ell as usize;
            let u_edges: Vec<(usize, usize)> = gk
                .graph
                .edges()
                .filter(|&(u, v)| u < ell - 1 && v < ell - 1)
                .collect();
            assert!(u_edges.iter().all(|&(u, v)| u < v));
            let sub = Digraph::build(ell - 1, &u_edges).unwrap();
            assert!(sub.is_acyclic());
        }
        // consequence: every dicycle passes through a v-vertex
        let gk = generate_gk(4).unwrap();
        let ell = gk.params.ell as usize;
        let (cycles, _) = enumerate_dicycles(&gk.graph, 2_000);
        assert!(!cycles.is_empty());
        for c in cycles {
            assert!(c.vertices().iter().any(|&v| v >= ell - 1));
        }
    }

    #[test]
    fn distance_fixtures() {
        let gk = generate_gk(4).unwrap();
        let d = gk.graph.bfs_distances(gk.v_index(10));
        assert_eq!(d[gk.v_index(8)], 3);
    }

    #[test]
    fn certificates_without_solver() {
        let skip = SolverOptions {
            budget: 0,
            ..Default::default()
        };
        let c4 = certify_gk(4, &skip).unwrap();
        assert!(c4.all_checked_ok());
        assert_eq!(c4.min_v_distance, 3);
        assert_eq!(c4.distance_bound, 3);
        assert_eq!(c4.sqrt_bound, 3);
        assert_eq!(c4.h_exact, HExact::Skipped);
        assert!(c4.render().contains("gk min_v_distance=3 bound=3 ok=true"));

        let c5 = certify_gk(5, &skip).unwrap();
        assert!(c5.all_checked_ok());
        assert_eq!(c5.min_v_distance, 4);
        assert_eq!(c5.distance_bound, 4);
        assert_eq!((c5.params.n, c5.params.m), (29, 85));
    }

    #[test]
    fn exact_exponent_k4() {
        let c = certify_gk(4, &SolverOptions::default()).unwrap();
        assert_eq!(c.h_exact, HExact::Computed(3));
        assert!(c.render().contains("gk h=3"));
    }

    #[test]
    fn random_eulerian_contract() {
        let a = random_eulerian(8, 3, 1).unwrap();
        let b = random_eulerian(8, 3, 1).unwrap();
        assert_eq!(a, b);
        assert!(is_eulerian(&a));

        let tri = random_eulerian(3, 1, 42).unwrap();
        assert_eq!(tri.m(), 3);
        assert!(is_eulerian(&tri));

        assert_eq!(
            random_eulerian(3, 50, 7),
            Err(FamilyError::GenerationFailed(10_000))
        );

        for seed in 0..20 {
            let g = random_eulerian(12, 2, seed).unwrap();
            assert!(is_eulerian(&g), "seed={seed}");
        }
    }

    #[test]
    fn random_dag_contract() {
        assert_eq!(random_dag(5, 0.0, 3).m(), 0);
        let tt = random_dag(5, 1.0, 3);
        assert_eq!(tt.m(), 10);
        assert!(tt.is_acyclic());
        let a = random_dag(40, 0.3, 7);
        assert_eq!(a, random_dag(40, 0.3, 7));
        assert!(a.is_acyclic());
        assert!(crate::theorem::check_prop12(&a).unwrap().holds);
    }

    #[test]
    fn dot_export_shape() {
        let gk = generate_gk(4).unwrap();
        let dot = gk.to_dot();
        assert!(dot.starts_with("digraph gk {"));
        assert!(dot.ends_with("}\n"));
        assert_eq!(dot.matches(" -> ").count(), 46);
        assert!(dot.contains("label=\"u1\""));
        assert!(dot.contains("label=\"v10\""));
    }
}
