//! Eulerian predicates, Euler circuits, dicycle machinery, spanning
//! arborescences, and the p#-optimal dipath/dicycle decomposition.

use crate::digraph::Digraph;
use crate::walk::{Walk, WalkKind};
use std::collections::HashMap;
use std::collections::HashSet;
use thiserror::Error;

/// Default cap for simple-cycle enumeration. Callers must handle
/// [`Minimality::Indeterminate`] when the cap stops a search early.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerError {
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("edge {0} -> {1} not present in graph")]
    EdgeMissing(usize, usize),
    #[error("vertex {0} not reachable from root")]
    Unreachable(usize),
}

/// Connected (strongly) and balanced at every vertex.
pub fn is_eulerian(g: &Digraph) -> bool {
    g.is_connected_eulerian_sense() && g.degrees().iter().all(|&(din, dout)| din == dout)
}

/// Hierholzer's algorithm, visiting out-neighbors in ascending order, so the
/// circuit is deterministic given the graph. Starts at vertex 0.
pub fn euler_circuit(g: &Digraph) -> Result<Walk, EulerError> {
    if !is_eulerian(g) {
        return Err(EulerError::NotEulerian);
    }
    let mut next = vec![0usize; g.n()];
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(g.m() + 1);
    while let Some(&u) = stack.last() {
        if next[u] < g.out(u).len() {
            let v = g.out(u)[next[u]];
            next[u] += 1;
            stack.push(v);
        } else {
            circuit.push(stack.pop().unwrap());
        }
    }
    circuit.reverse();
    debug_assert_eq!(
        circuit.len(),
        g.m() + 1,
        "connected balanced graph is fully covered"
    );
    Ok(Walk::euler_circuit(circuit).expect("hierholzer closes at the start vertex"))
}

struct CycleSearch<'a> {
    g: &'a Digraph,
    start: usize,
    blocked: Vec<bool>,
    blist: Vec<Vec<usize>>,
    stack: Vec<usize>,
    found: Vec<Walk>,
    cap: usize,
    suppressed: bool,
}

impl CycleSearch<'_> {
    // Johnson's CIRCUIT procedure, restricted to vertices >= start so every
    // cycle is emitted exactly once, rooted at its minimum vertex.
    fn circuit(&mut self, v: usize) -> bool {
        let mut found_here = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for i in 0..self.g.out(v).len() {
            if self.suppressed {
                break;
            }
            let w = self.g.out(v)[i];
            if w < self.start {
                continue;
            }
            if w == self.start {
                if self.found.len() == self.cap {
                    self.suppressed = true;
                    break;
                }
                let mut vs = self.stack.clone();
                vs.push(self.start);
                self.found
                    .push(Walk::dicycle(vs).expect("search stack holds distinct vertices"));
                found_here = true;
            } else if !self.blocked[w] && self.circuit(w) {
                found_here = true;
            }
        }
        if found_here {
            self.unblock(v);
        } else {
            for &w in self.g.out(v) {
                if w >= self.start && !self.blist[w].contains(&v) {
                    self.blist[w].push(v);
                }
            }
        }
        self.stack.pop();
        found_here
    }

    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        for w in std::mem::take(&mut self.blist[u]) {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }
}

/// Johnson-style enumeration of all simple dicycles, in deterministic order
/// (grouped by minimum cycle vertex, DFS in ascending neighbor order). The
/// second component is false iff the cap suppressed at least one cycle.
pub fn enumerate_dicycles(g: &Digraph, cap: usize) -> (Vec<Walk>, bool) {
    let n = g.n();
    let mut search = CycleSearch {
        g,
        start: 0,
        blocked: vec![false; n],
        blist: vec![Vec::new(); n],
        stack: Vec::new(),
        found: Vec::new(),
        cap,
        suppressed: false,
    };
    for s in 0..n {
        if search.suppressed {
            break;
        }
        search.start = s;
        search.blocked.iter_mut().for_each(|b| *b = false);
        search.blist.iter_mut().for_each(|l| l.clear());
        search.circuit(s);
        debug_assert!(search.stack.is_empty());
    }
    let complete = !search.suppressed;
    (search.found, complete)
}

/// Same vertex set with the edges of dicycle `c` deleted. Balance is
/// preserved at every vertex.
pub fn remove_dicycle(g: &Digraph, c: &Walk) -> Result<Digraph, EulerError> {
    debug_assert_eq!(c.kind(), WalkKind::Dicycle);
    for (u, v) in c.edges() {
        if !g.has_edge(u, v) {
            return Err(EulerError::EdgeMissing(u, v));
        }
    }
    let removed: HashSet<(usize, usize)> = c.edges().collect();
    let kept: Vec<(usize, usize)> = g.edges().filter(|e| !removed.contains(e)).collect();
    Ok(Digraph::build(g.n(), &kept).expect("edge deletion preserves simplicity"))
}

/// Every dicycle passes through a vertex of in- and outdegree 1 exactly when
/// the subgraph induced on the remaining vertices is acyclic; removing any
/// dicycle then isolates such a vertex, so the graph is minimally Eulerian.
/// Sound but not complete; a cheap certificate that avoids cycle
/// enumeration on families whose cycle count explodes.
fn pierced_by_degree_one_vertices(g: &Digraph) -> bool {
    let deg = g.degrees();
    let keep: Vec<usize> = (0..g.n()).filter(|&v| deg[v] != (1, 1)).collect();
    let index_of: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(u, v)| Some((*index_of.get(&u)?, *index_of.get(&v)?)))
        .collect();
    Digraph::build(keep.len(), &edges)
        .expect("induced subgraph stays simple")
        .is_acyclic()
}

/// Outcome of the minimally-Eulerian check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minimality {
    /// Eulerian, and removing any dicycle disconnects the graph.
    Minimal,
    NotEulerian,
    /// Eulerian, but this dicycle's removal keeps the graph connected.
    Removable(Walk),
    /// Cycle enumeration hit the cap before finding a removable dicycle.
    Indeterminate,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal)
    }
}

/// Tri-state check: Minimal / not (with a witness or NotEulerian) /
/// Indeterminate when enumeration is cut off by `cap`.
pub fn is_minimally_eulerian(g: &Digraph, cap: usize) -> Minimality {
    if !is_eulerian(g) {
        return Minimality::NotEulerian;
    }
    if pierced_by_degree_one_vertices(g) {
        return Minimality::Minimal;
    }
    let (cycles, complete) = enumerate_dicycles(g, cap);
    for c in cycles {
        let reduced = remove_dicycle(g, &c).expect("enumerated cycles use present edges");
        if reduced.is_connected_eulerian_sense() {
            return Minimality::Removable(c);
        }
    }
    if complete {
        Minimality::Minimal
    } else {
        Minimality::Indeterminate
    }
}

/// Repeatedly removes a dicycle whose removal keeps the graph connected and
/// spanning, until none exists. Among removable dicycles the shortest is
/// taken, ties broken by lexicographically smallest vertex sequence rotated
/// to the minimum vertex, so traces are reproducible.
pub fn reduce_to_minimally_eulerian(g: &Digraph) -> Result<(Digraph, Vec<Walk>), EulerError> {
    if !is_eulerian(g) {
        return Err(EulerError::NotEulerian);
    }
    let mut cur = g.clone();
    let mut trace = Vec::new();
    loop {
        if pierced_by_degree_one_vertices(&cur) {
            break;
        }
        let (cycles, _) = enumerate_dicycles(&cur, DEFAULT_CYCLE_CAP);
        let removable = cycles
            .into_iter()
            .filter(|c| {
                remove_dicycle(&cur, c)
                    .expect("enumerated cycles use present edges")
                    .is_connected_eulerian_sense()
            })
            .min_by(|a, b| (a.len(), a.vertices()).cmp(&(b.len(), b.vertices())));
        match removable {
            Some(c) => {
                cur = remove_dicycle(&cur, &c).expect("candidate was checked");
                trace.push(c);
            }
            None => break,
        }
    }
    Ok((cur, trace))
}

/// BFS tree from `root`: n-1 edges with a unique root-to-vertex path.
pub fn spanning_arborescence(g: &Digraph, root: usize) -> Result<Vec<(usize, usize)>, EulerError> {
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut tree = Vec::with_capacity(g.n().saturating_sub(1));
    while let Some(u) = queue.pop_front() {
        for &v in g.out(u) {
            if !seen[v] {
                seen[v] = true;
                tree.push((u, v));
                queue.push_back(v);
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(EulerError::Unreachable(v));
    }
    Ok(tree)
}

/// Edge-disjoint decomposition into exactly p#(G) dipaths plus dicycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompOutcome {
    pub dipaths: Vec<Walk>,
    pub dicycles: Vec<Walk>,
}

impl DecompOutcome {
    /// One walk per line: "P: ..." then "C: ...".
    pub fn report(&self) -> String {
        let mut out = String::new();
        for w in self.dipaths.iter().chain(self.dicycles.iter()) {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

// Walks greedily from `start` along smallest unused out-edges until stuck,
// cutting each revisited-vertex loop out as a dicycle so the residual stack
// is always vertex-simple.
fn walk_and_cut(
    g: &Digraph,
    start: usize,
    next: &mut [usize],
    rem_out: &mut [usize],
    rem_in: &mut [usize],
) -> (Vec<Walk>, Vec<usize>) {
    let mut stack = vec![start];
    let mut pos_of: HashMap<usize, usize> = HashMap::from([(start, 0)]);
    let mut cycles = Vec::new();
    loop {
        let u = *stack.last().unwrap();
        if next[u] >= g.out(u).len() {
            break;
        }
        let v = g.out(u)[next[u]];
        next[u] += 1;
        rem_out[u] -= 1;
        rem_in[v] -= 1;
        if let Some(&i) = pos_of.get(&v) {
            let mut loop_vs = stack[i..].to_vec();
            loop_vs.push(v);
            for w in stack.drain(i + 1..) {
                pos_of.remove(&w);
            }
            cycles.push(
                Walk::dicycle(loop_vs)
                    .expect("loop cut closes on its first vertex")
                    .canonical_rotation(),
            );
        } else {
            pos_of.insert(v, stack.len());
            stack.push(v);
        }
    }
    (cycles, stack)
}

/// Repeatedly extracts a maximal dipath from a positive-imbalance vertex to a
/// negative-imbalance one (each extraction lowers the total imbalance by 2,
/// so exactly p# dipaths appear); once balanced, peels dicycles.
pub fn decompose(g: &Digraph) -> DecompOutcome {
    let n = g.n();
    let mut next = vec![0usize; n];
    let deg = g.degrees();
    let mut rem_in: Vec<usize> = deg.iter().map(|d| d.0).collect();
    let mut rem_out: Vec<usize> = deg.iter().map(|d| d.1).collect();
    let mut dipaths = Vec::new();
    let mut dicycles = Vec::new();
    while let Some(start) = (0..n).find(|&u| rem_out[u] > rem_in[u]) {
        let (mut cycles, path) = walk_and_cut(g, start, &mut next, &mut rem_out, &mut rem_in);
        dicycles.append(&mut cycles);
        dipaths.push(Walk::dipath(path).expect("imbalanced start cannot collapse into cycles"));
    }
    while let Some(start) = (0..n).find(|&u| rem_out[u] > 0) {
        let (mut cycles, path) = walk_and_cut(g, start, &mut next, &mut rem_out, &mut rem_in);
        debug_assert_eq!(path, vec![start], "balanced walks close fully into cycles");
        dicycles.append(&mut cycles);
    }
    debug_assert_eq!(dipaths.len() as u64, g.p_sharp());
    DecompOutcome { dipaths, dicycles }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn triangle() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn figure_eight() -> Digraph {
        Digraph::build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn k3_bidirected() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap()
    }

    #[test]
    fn eulerian_predicate() {
        assert!(is_eulerian(&triangle()));
        let two_triangles =
            Digraph::build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_eulerian(&two_triangles));
        assert!(!is_eulerian(&Digraph::build(2, &[(0, 1)]).unwrap()));
    }

    #[test]
    fn euler_circuit_triangle_is_deterministic() {
        let c = euler_circuit(&triangle()).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 0]);
    }

    #[test]
    fn euler_circuit_figure_eight() {
        let g = figure_eight();
        let c = euler_circuit(&g).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.validate_in(&g).is_ok());
    }

    #[test]
    fn euler_circuit_rejects_non_eulerian() {
        assert_eq!(
            euler_circuit(&Digraph::build(2, &[(0, 1)]).unwrap()),
            Err(EulerError::NotEulerian)
        );
    }

    #[test]
    fn enumerate_small_fixtures() {
        let (c, complete) = enumerate_dicycles(&triangle(), DEFAULT_CYCLE_CAP);
        assert!(complete);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].vertices(), &[0, 1, 2, 0]);

        let path3 = Digraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let (c, complete) = enumerate_dicycles(&path3, DEFAULT_CYCLE_CAP);
        assert!(complete && c.is_empty());

        let (c, complete) = enumerate_dicycles(&figure_eight(), DEFAULT_CYCLE_CAP);
        assert!(complete);
        let got: Vec<&[usize]> = c.iter().map(|w| w.vertices()).collect();
        assert_eq!(got, vec![&[0, 1, 2, 0][..], &[0, 3, 4, 0][..]]);

        let (c, complete) = enumerate_dicycles(&k3_bidirected(), DEFAULT_CYCLE_CAP);
        assert!(complete);
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn cap_suppression_is_flagged() {
        let (c, complete) = enumerate_dicycles(&k3_bidirected(), 2);
        assert_eq!(c.len(), 2);
        assert!(!complete);
        // cap exactly at the cycle count is not a suppression
        let (c, complete) = enumerate_dicycles(&triangle(), 1);
        assert_eq!(c.len(), 1);
        assert!(complete);
    }

    // Independent oracle: plain path-extension enumeration with no blocking
    // machinery, over vertices >= the cycle root.
    fn brute_force_cycles(g: &Digraph) -> BTreeSet<Vec<usize>> {
        fn extend(
            g: &Digraph,
            root: usize,
            path: &mut Vec<usize>,
            on_path: &mut Vec<bool>,
            out: &mut BTreeSet<Vec<usize>>,
        ) {
            let u = *path.last().unwrap();
            for &w in g.out(u) {
                if w == root && path.len() >= 2 {
                    let mut c = path.clone();
                    c.push(root);
                    out.insert(c);
                } else if w > root && !on_path[w] {
                    on_path[w] = true;
                    path.push(w);
                    extend(g, root, path, on_path, out);
                    path.pop();
                    on_path[w] = false;
                }
            }
        }
        let mut out = BTreeSet::new();
        for root in 0..g.n() {
            let mut on_path = vec![false; g.n()];
            on_path[root] = true;
            extend(g, root, &mut vec![root], &mut on_path, &mut out);
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force_exhaustively_n4() {
        // all 2^12 labeled digraphs on 4 vertices
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        assert_eq!(pairs.len(), 12);
        for mask in 0u32..(1 << 12) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Digraph::build(4, &edges).unwrap();
            let (cycles, complete) = enumerate_dicycles(&g, DEFAULT_CYCLE_CAP);
            assert!(complete);
            let got: BTreeSet<Vec<usize>> = cycles.iter().map(|w| w.vertices().to_vec()).collect();
            assert_eq!(got.len(), cycles.len(), "no duplicates");
            assert_eq!(got, brute_force_cycles(&g), "mask {mask}");
        }
    }

    #[test]
    fn remove_dicycle_cases() {
        let c = Walk::dicycle(vec![0, 1, 2, 0]).unwrap();
        let stripped = remove_dicycle(&triangle(), &c).unwrap();
        assert_eq!(stripped.m(), 0);
        assert!(!stripped.is_connected_eulerian_sense());

        let g = figure_eight();
        let left = remove_dicycle(&g, &c).unwrap();
        assert_eq!(left.m(), 3);
        assert!(!left.is_connected_eulerian_sense());
        // balance preserved
        assert!(left.degrees().iter().all(|&(i, o)| i == o));

        let missing = Walk::dicycle(vec![0, 2, 1, 0]).unwrap();
        assert_eq!(
            remove_dicycle(&triangle(), &missing),
            Err(EulerError::EdgeMissing(0, 2))
        );
    }

    #[test]
    fn minimality_fixtures() {
        assert_eq!(
            is_minimally_eulerian(&triangle(), DEFAULT_CYCLE_CAP),
            Minimality::Minimal
        );
        assert_eq!(
            is_minimally_eulerian(&figure_eight(), DEFAULT_CYCLE_CAP),
            Minimality::Minimal
        );
        match is_minimally_eulerian(&k3_bidirected(), DEFAULT_CYCLE_CAP) {
            Minimality::Removable(c) => assert_eq!(c.vertices(), &[0, 1, 0]),
            other => panic!("expected a removable witness, got {other:?}"),
        }
        assert_eq!(
            is_minimally_eulerian(&Digraph::build(2, &[(0, 1)]).unwrap(), DEFAULT_CYCLE_CAP),
            Minimality::NotEulerian
        );
        // cap too small to find the witness
        assert_eq!(
            is_minimally_eulerian(&k3_bidirected(), 0),
            Minimality::Indeterminate
        );
    }

    #[test]
    fn reduce_fixtures() {
        let (g, trace) = reduce_to_minimally_eulerian(&triangle()).unwrap();
        assert_eq!(g, triangle());
        assert!(trace.is_empty());

        let (g, trace) = reduce_to_minimally_eulerian(&figure_eight()).unwrap();
        assert_eq!(g, figure_eight());
        assert!(trace.is_empty());

        // Shortest-removable-first: the 2-cycle 0<->1 goes first and the
        // remainder (a 4-edge graph through vertex 2) is already minimal.
        let (g, trace) = reduce_to_minimally_eulerian(&k3_bidirected()).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].vertices(), &[0, 1, 0]);
        assert_eq!(g.m(), 4);
        assert!(is_minimally_eulerian(&g, DEFAULT_CYCLE_CAP).is_minimal());
    }

    #[test]
    fn reduce_reconstructs_input_edges() {
        let input = k3_bidirected();
        let (g, trace) = reduce_to_minimally_eulerian(&input).unwrap();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for c in &trace {
            edges.extend(c.edges());
        }
        edges.sort_unstable();
        let mut expect: Vec<(usize, usize)> = input.edges().collect();
        expect.sort_unstable();
        assert_eq!(edges, expect);
    }

    #[test]
    fn arborescence_fixtures() {
        assert_eq!(
            spanning_arborescence(&triangle(), 0).unwrap(),
            vec![(0, 1), (1, 2)]
        );
        let t = spanning_arborescence(&figure_eight(), 0).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t, vec![(0, 1), (0, 3), (1, 2), (3, 4)]);
        assert_eq!(
            spanning_arborescence(&Digraph::build(2, &[(0, 1)]).unwrap(), 1),
            Err(EulerError::Unreachable(0))
        );
    }

    fn edge_multiset(out: &DecompOutcome) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = out
            .dipaths
            .iter()
            .chain(out.dicycles.iter())
            .flat_map(|w| w.edges().collect::<Vec<_>>())
            .collect();
        edges.sort_unstable();
        edges
    }

    #[test]
    fn decompose_fixtures() {
        let out = decompose(&triangle());
        assert!(out.dipaths.is_empty());
        assert_eq!(out.dicycles.len(), 1);

        let star = Digraph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let out = decompose(&star);
        assert_eq!(out.dipaths.len(), 3);
        assert!(out.dipaths.iter().all(|p| p.len() == 1));
        assert!(out.dicycles.is_empty());

        let g = Digraph::build(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (3, 1)]).unwrap();
        let out = decompose(&g);
        assert!(out.dipaths.is_empty());
        assert_eq!(out.dicycles.len(), 2);
        assert_eq!(out.dicycles[0].vertices(), &[0, 1, 2, 0]);
        assert_eq!(out.dicycles[1].vertices(), &[1, 3, 1]);
        assert_eq!(out.report(), "C: 0 1 2 0\nC: 1 3 1\n");
    }

    #[test]
    fn decompose_preserves_edges_and_counts() {
        let samples = [
            Digraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 0)]).unwrap(),
            Digraph::build(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 0)]).unwrap(),
            figure_eight(),
        ];
        for g in samples {
            let out = decompose(&g);
            assert_eq!(out.dipaths.len() as u64, g.p_sharp());
            let mut expect: Vec<(usize, usize)> = g.edges().collect();
            expect.sort_unstable();
            assert_eq!(edge_multiset(&out), expect);
            for w in out.dipaths.iter().chain(out.dicycles.iter()) {
                assert!(w.validate_in(&g).is_ok());
            }
        }
    }
}
