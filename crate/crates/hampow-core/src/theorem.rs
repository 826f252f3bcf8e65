//! Executable bound functions and predicates: the edge-count bounds for
//! acyclic and minimally Eulerian digraphs, the power-threshold function
//! f_bound, and the dipath-decomposition search built on the
//! Euler-circuit / occurrence-selection correspondence.

use crate::digraph::Digraph;
use crate::euler::{euler_circuit, is_eulerian, is_minimally_eulerian};
use crate::walk::{Walk, WalkKind};
use thiserror::Error;

/// Exponent constant log_{3/2} 2 = 1.709511291351454777... appearing in
/// the refined envelope (log2 n)^{c+o(1)}. Reported for context only; the
/// o(1) term is not quantified, so no operation asserts the refined bound.
pub const REFINED_EXPONENT: f64 = 1.709_511_291_351_454_8;

/// Largest n accepted by [`f_bound`]; keeps the 128-bit interval
/// arithmetic in the near-integer fallback exact.
pub const F_BOUND_MAX_N: u64 = 1 << 26;

/// Default budget for the Euler-circuit search in
/// [`lexmin_decomposition`], counting completions plus backtrack pops.
pub const DEFAULT_CIRCUIT_BUDGET: u64 = 1_000_000;

/// Product-of-occurrence-counts ceiling for the exact occurrence search.
pub const OCCURRENCE_PRODUCT_LIMIT: u128 = 1_000_000;

/// Largest vertex count routed to the exact occurrence search.
pub const OCCURRENCE_EXACT_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("graph is not acyclic")]
    NotAcyclic,
    #[error("graph is not (verifiably) minimally Eulerian")]
    NotMinimallyEulerian,
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("walk is not an Euler circuit of this graph")]
    NotEulerCircuit,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(&'static str),
}

// ---------------------------------------------------------------------------
// f_bound: ceil(0.5 * sqrt(n) * log2(n)^2)
//
// The double-precision value is trusted outside a 1e-6 band around integers
// (its absolute error here is < 1e-8). Inside the band the value is
// re-derived in 128-bit fixed point: ln via the atanh series in Q.60 with
// directed rounding, then sqrt and the product in Q.50. Interval width stays
// below 1e-11, and the true value is never an integer except at n = 2^even
// (handled exactly), so the interval always separates from the boundary.
// ---------------------------------------------------------------------------

const F: u32 = 60;
const FX: u32 = 50;
const ONE: u128 = 1 << F;
// floor(ln 2 * 2^60)
const LN2_Q60: u128 = 799_144_290_325_165_978;

// Bounds on ln(n / 2^t) in Q.60 where t = floor(log2 n), via
// ln y = 2 atanh((y-1)/(y+1)); z < 1/3 so the series converges fast.
fn ln_frac_interval(n: u64) -> (u128, u128, u32) {
    let t = n.ilog2();
    let y = (n as u128) << (F - t);
    let num = y - ONE;
    let den = y + ONE;
    let zlo = (num << F) / den;
    let zhi = (num << F).div_ceil(den);
    debug_assert!(zhi < 1 << (F - 1));
    let z2lo = (zlo * zlo) >> F;
    let z2hi = (zhi * zhi + ONE - 1) >> F;
    let (mut slo, mut shi) = (zlo, zhi);
    let (mut plo, mut phi) = (zlo, zhi);
    let mut j: u128 = 1;
    loop {
        plo = (plo * z2lo) >> F;
        phi = (phi * z2hi + ONE - 1) >> F;
        j += 2;
        slo += plo / j;
        shi += phi.div_ceil(j);
        if phi == 0 || j > 101 {
            break;
        }
    }
    // tail of the series plus one ulp of slack
    shi += phi + 1;
    (2 * slo, 2 * shi + 1, t)
}

// Bounds on log2(n) in Q.60.
fn log2_interval(n: u64) -> (u128, u128) {
    let (lnlo, lnhi, t) = ln_frac_interval(n);
    let flo = (lnlo << F) / (LN2_Q60 + 1);
    let fhi = (lnhi << F).div_ceil(LN2_Q60);
    (((t as u128) << F) + flo, ((t as u128) << F) + fhi)
}

// Bounds on 0.5 * sqrt(n) * log2(n)^2 in Q.50; requires n <= 2^26 so that
// n << 100 fits in u128.
fn x_interval(n: u64) -> (u128, u128) {
    let a = ((n as u128) << (2 * FX)).isqrt();
    let (llo, lhi) = log2_interval(n);
    let llo50 = llo >> (F - FX);
    let lhi50 = (lhi >> (F - FX)) + 1;
    let sqlo = (llo50 * llo50) >> FX;
    let sqhi = (lhi50 * lhi50 + (1 << FX) - 1) >> FX;
    let xlo = (a * sqlo) >> (FX + 1);
    let xhi = ((a + 1) * sqhi + (1 << (FX + 1)) - 1) >> (FX + 1);
    (xlo, xhi)
}

// Precise path: exact closed form at n = 2^t with t even, interval decision
// otherwise. `nearest` is the integer the double landed next to.
fn f_bound_precise(n: u64, nearest: u64) -> u64 {
    let t = n.ilog2();
    if n == 1 << t && t.is_multiple_of(2) {
        // 0.5 * 2^(t/2) * t^2 exactly
        return (t as u64 * t as u64) << (t / 2 - 1);
    }
    let (xlo, xhi) = x_interval(n);
    let mq = (nearest as u128) << FX;
    if xhi <= mq {
        nearest
    } else if xlo >= mq {
        // the true value is irrational here, so "x > nearest" is strict
        nearest + 1
    } else {
        unreachable!("f_bound interval straddles an integer at n={n}")
    }
}

/// ceil(0.5 * sqrt(n) * log2(n)^2) for 2 <= n <= 2^26, with a guard band:
/// doubles within 1e-6 of an integer are re-decided in exact fixed point.
pub fn f_bound(n: u64) -> u64 {
    assert!(
        (2..=F_BOUND_MAX_N).contains(&n),
        "f_bound domain is [2, 2^26]"
    );
    let x = 0.5 * (n as f64).sqrt() * (n as f64).log2().powi(2);
    let nearest = x.round();
    if (x - nearest).abs() >= 1e-6 {
        x.ceil() as u64
    } else {
        f_bound_precise(n, nearest as u64)
    }
}

// Test hook: the precise path unconditionally, so the two computation
// routes can be compared over a whole range.
#[cfg(test)]
fn f_bound_via_interval(n: u64) -> u64 {
    let x = 0.5 * (n as f64).sqrt() * (n as f64).log2().powi(2);
    f_bound_precise(n, x.round() as u64)
}

/// Outcome of scanning f_bound(n) against n-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    /// n in [2, 6387] where f_bound(n) < n-1; expected empty.
    pub violations: Vec<u64>,
    /// Smallest n <= limit with f_bound(n) < n-1, if any.
    pub first_failure: Option<u64>,
    /// (n, f_bound(n)) for every n in [2, 6387].
    pub table: Vec<(u64, u64)>,
}

/// Scans n in [2, limit], verifying f_bound(n) >= n-1 throughout [2, 6387]
/// and locating the first n where the inequality fails strictly.
pub fn threshold_scan(limit: u64) -> ThresholdReport {
    assert!(
        limit >= 6388,
        "scan limit must reach past the claimed range"
    );
    let mut violations = Vec::new();
    let mut first_failure = None;
    let mut table = Vec::with_capacity(6386);
    for n in 2..=limit.min(F_BOUND_MAX_N) {
        let f = f_bound(n);
        let fails = f < n - 1;
        if n <= 6387 {
            table.push((n, f));
            if fails {
                violations.push(n);
            }
        }
        if fails && first_failure.is_none() {
            first_failure = Some(n);
            if n > 6387 {
                break;
            }
        }
    }
    ThresholdReport {
        violations,
        first_failure,
        table,
    }
}

// ---------------------------------------------------------------------------
// Bound reports
// ---------------------------------------------------------------------------

/// One bound evaluation: lhs <= rhs with context.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Stable predicate tag: "prop12" | "prop13" | "thm11" | "thm21-len".
    pub name: String,
    pub n: u64,
    pub m: u64,
    /// p# for prop12, the power k for thm21-len, absent otherwise.
    /// Shown in the table; not part of the record stream.
    pub param: Option<u64>,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl BoundReport {
    /// Machine-readable record with a stable field order.
    pub fn record(&self) -> String {
        format!(
            "name={} n={} m={} lhs={} rhs={} holds={}",
            self.name, self.n, self.m, self.lhs, self.rhs, self.holds
        )
    }

    /// Parses the output of [`BoundReport::record`]; rejects reordered or
    /// missing fields.
    pub fn parse_record(s: &str) -> Option<BoundReport> {
        let mut it = s.split_whitespace();
        let field = |it: &mut std::str::SplitWhitespace, key: &str| -> Option<String> {
            it.next()?.strip_prefix(key).map(str::to_string)
        };
        let name = field(&mut it, "name=")?;
        let n = field(&mut it, "n=")?.parse().ok()?;
        let m = field(&mut it, "m=")?.parse().ok()?;
        let lhs = field(&mut it, "lhs=")?.parse().ok()?;
        let rhs = field(&mut it, "rhs=")?.parse().ok()?;
        let holds = field(&mut it, "holds=")?.parse().ok()?;
        if it.next().is_some() {
            return None;
        }
        Some(BoundReport {
            name,
            n,
            m,
            param: None,
            lhs,
            rhs,
            holds,
        })
    }

    /// Aligned human-readable table.
    pub fn table(reports: &[BoundReport]) -> String {
        let mut out = format!(
            "{:<10} {:>6} {:>6} {:>8} {:>14} {:>14} {:>6}\n",
            "name", "n", "m", "param", "lhs", "rhs", "holds"
        );
        for r in reports {
            let param = r.param.map_or_else(|| "-".to_string(), |p| p.to_string());
            out.push_str(&format!(
                "{:<10} {:>6} {:>6} {:>8} {:>14.4} {:>14.4} {:>6}\n",
                r.name, r.n, r.m, param, r.lhs, r.rhs, r.holds
            ));
        }
        out
    }
}

/// Edge bound for acyclic digraphs: m <= sqrt(2 p#) * n, decided in exact
/// integer arithmetic as m^2 <= 2 p# n^2.
pub fn check_prop12(g: &Digraph) -> Result<BoundReport, TheoremError> {
    if !g.is_acyclic() {
        return Err(TheoremError::NotAcyclic);
    }
    let (n, m, p) = (g.n() as u64, g.m() as u64, g.p_sharp());
    let holds = (m as u128).pow(2) <= 2 * p as u128 * (n as u128).pow(2);
    Ok(BoundReport {
        name: "prop12".to_string(),
        n,
        m,
        param: Some(p),
        lhs: m as f64,
        rhs: (2.0 * p as f64).sqrt() * n as f64,
        holds,
    })
}

/// Edge bound for minimally Eulerian digraphs:
/// m <= sqrt(2(n-1)) * n + n - 1, decided as (m-n+1)^2 <= 2(n-1)n^2 when
/// m >= n-1 and trivially true otherwise.
pub fn check_prop13(g: &Digraph, cycle_cap: usize) -> Result<BoundReport, TheoremError> {
    if !is_minimally_eulerian(g, cycle_cap).is_minimal() {
        return Err(TheoremError::NotMinimallyEulerian);
    }
    let (n, m) = (g.n() as u64, g.m() as u64);
    let holds = if m < n - 1 {
        true
    } else {
        ((m - n + 1) as u128).pow(2) <= 2 * (n - 1) as u128 * (n as u128).pow(2)
    };
    Ok(BoundReport {
        name: "prop13".to_string(),
        n,
        m,
        param: None,
        lhs: m as f64,
        rhs: (2.0 * (n - 1) as f64).sqrt() * n as f64 + (n - 1) as f64,
        holds,
    })
}

// ---------------------------------------------------------------------------
// Path decompositions via occurrence selection on an Euler circuit
// ---------------------------------------------------------------------------

/// A cyclic vertex ordering plus edge-disjoint connecting walks covering
/// every edge exactly once; concatenating the walks in order retraces an
/// Euler circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    /// Every vertex exactly once.
    pub ordering: Vec<usize>,
    /// paths[i] runs from ordering[i] to ordering[(i+1) % n]. Edge-simple;
    /// interior vertices may repeat when the source circuit revisits them.
    pub paths: Vec<Vec<usize>>,
    /// max over paths of edge count.
    pub max_len: usize,
    /// Whether the occurrence choice is provably gap-optimal for the
    /// circuit it was cut from.
    pub exact: bool,
}

impl PathDecomposition {
    /// Descending-sorted path lengths; the lexicographic comparison key.
    pub fn sorted_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.paths.iter().map(|p| p.len() - 1).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

/// Checks every PathDecomposition invariant against `g`.
pub fn validate_decomposition(g: &Digraph, d: &PathDecomposition) -> Result<(), TheoremError> {
    let n = g.n();
    let fail = TheoremError::InvalidDecomposition;
    if d.ordering.len() != n {
        return Err(fail("ordering must list every vertex"));
    }
    let mut seen = vec![false; n];
    for &v in &d.ordering {
        if v >= n || seen[v] {
            return Err(fail("ordering must be a permutation"));
        }
        seen[v] = true;
    }
    if d.paths.len() != n {
        return Err(fail("one path per ordering position"));
    }
    for (i, p) in d.paths.iter().enumerate() {
        if p.first() != Some(&d.ordering[i]) || p.last() != Some(&d.ordering[(i + 1) % n]) {
            return Err(fail("path endpoints must chain along the ordering"));
        }
        if p.len() < 2 {
            return Err(fail("paths must contain at least one edge"));
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(fail("path steps must be edges of the graph"));
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = d
        .paths
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
        .collect();
    let total = edges.len();
    edges.sort_unstable();
    edges.dedup();
    if total != g.m() || edges.len() != total {
        return Err(fail("paths must cover every edge exactly once"));
    }
    if d.max_len != d.paths.iter().map(|p| p.len() - 1).max().unwrap_or(0) {
        return Err(fail("max_len must match the longest path"));
    }
    // concatenation retraces an Euler circuit
    let mut circuit = vec![d.ordering[0]];
    for p in &d.paths {
        circuit.extend_from_slice(&p[1..]);
    }
    let w = Walk::euler_circuit(circuit)
        .map_err(|_| fail("concatenation must close into a circuit"))?;
    w.validate_in(g)
        .map_err(|_| fail("concatenation must retrace an Euler circuit"))?;
    Ok(())
}

// One rotation of the occurrence-selection problem: positions 0..m-1
// around the circuit, anchor fixed at rotated position 0.
struct Rotation {
    // vertex at each rotated position
    vertex: Vec<usize>,
    // whether this position is its vertex's final occurrence
    is_last: Vec<bool>,
}

impl Rotation {
    fn new(positions: &[usize], circuit: &[usize], anchor: usize) -> Rotation {
        let m = positions.len();
        let vertex: Vec<usize> = (0..m).map(|q| circuit[(anchor + q) % m]).collect();
        let mut remaining = std::collections::HashMap::new();
        for &v in &vertex {
            *remaining.entry(v).or_insert(0usize) += 1;
        }
        let mut is_last = vec![false; m];
        let mut left = remaining;
        for q in 0..m {
            let c = left.get_mut(&vertex[q]).unwrap();
            *c -= 1;
            if *c == 0 {
                is_last[q] = true;
            }
        }
        Rotation { vertex, is_last }
    }
}

struct ExactSelect<'a> {
    rot: &'a Rotation,
    m: usize,
    chosen: Vec<bool>,
    stack: Vec<usize>,
    best_val: usize,
    best_stack: Vec<usize>,
}

impl ExactSelect<'_> {
    // Branch over positions in order; a position of an unchosen vertex may
    // be selected or (unless it is the final occurrence) skipped. Any
    // completion from a state with q - last >= best_val carries a gap at
    // least that large, so the subtree is pruned.
    fn dfs(&mut self, q: usize, last: usize, cur_max: usize) {
        if cur_max >= self.best_val {
            return;
        }
        if q == self.m {
            let total = cur_max.max(self.m - last);
            if total < self.best_val {
                self.best_val = total;
                self.best_stack = self.stack.clone();
            }
            return;
        }
        if q - last >= self.best_val {
            return;
        }
        let w = self.rot.vertex[q];
        if self.chosen[w] {
            self.dfs(q + 1, last, cur_max);
            return;
        }
        self.chosen[w] = true;
        self.stack.push(q);
        self.dfs(q + 1, q, cur_max.max(q - last));
        self.stack.pop();
        self.chosen[w] = false;
        if !self.rot.is_last[q] {
            self.dfs(q + 1, last, cur_max);
        }
    }
}

// Greedy feasibility sweep: can one occurrence per vertex be chosen with
// every cyclic gap <= cap, anchored at rotated position 0? Picks the latest
// position not past any unchosen vertex's final occurrence. Returns chosen
// rotated positions.
fn greedy_sweep(rot: &Rotation, n: usize, cap: usize) -> Option<Vec<usize>> {
    let m = rot.vertex.len();
    let mut deadline = vec![0usize; n];
    for q in 0..m {
        if rot.is_last[q] {
            deadline[rot.vertex[q]] = q;
        }
    }
    let mut chosen_flag = vec![false; n];
    chosen_flag[rot.vertex[0]] = true;
    let mut chosen = vec![0usize];
    let mut last = 0usize;
    for _ in 1..n {
        let min_deadline = (0..n)
            .filter(|&v| !chosen_flag[v])
            .map(|v| deadline[v])
            .min()
            .expect("unchosen vertices remain");
        let q_max = min_deadline.min(last + cap);
        let q = (last + 1..=q_max.min(m - 1))
            .rev()
            .find(|&q| !chosen_flag[rot.vertex[q]])?;
        chosen_flag[rot.vertex[q]] = true;
        chosen.push(q);
        last = q;
    }
    if m - last > cap {
        return None;
    }
    Some(chosen)
}

fn build_decomposition(
    circuit: &[usize],
    chosen_original: &mut Vec<usize>,
    exact: bool,
) -> PathDecomposition {
    let m = circuit.len();
    chosen_original.sort_unstable();
    let pos = &*chosen_original;
    let n = pos.len();
    let ordering: Vec<usize> = pos.iter().map(|&p| circuit[p]).collect();
    let mut paths = Vec::with_capacity(n);
    let mut max_len = 0;
    for i in 0..n {
        let from = pos[i];
        let to = if i + 1 < n { pos[i + 1] } else { pos[0] + m };
        let path: Vec<usize> = (from..=to).map(|p| circuit[p % m]).collect();
        max_len = max_len.max(path.len() - 1);
        paths.push(path);
    }
    PathDecomposition {
        ordering,
        paths,
        max_len,
        exact,
    }
}

/// Cuts an Euler circuit at one chosen occurrence of each vertex,
/// minimizing the maximum cyclic gap between consecutive chosen
/// occurrences. Exact (branch-and-prune over occurrence choices) while
/// n <= 9 and the product of occurrence counts stays within 10^6; a
/// binary-search greedy otherwise, flagged non-exact.
pub fn occurrence_select(g: &Digraph, circuit: &Walk) -> Result<PathDecomposition, TheoremError> {
    if circuit.kind() != WalkKind::EulerCircuit
        || !is_eulerian(g)
        || circuit.validate_in(g).is_err()
    {
        return Err(TheoremError::NotEulerCircuit);
    }
    let n = g.n();
    let verts = &circuit.vertices()[..circuit.len()];
    let m = verts.len();
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, &v) in verts.iter().enumerate() {
        occ[v].push(p);
    }
    // anchor on a fewest-occurrence vertex so rotations are few
    let anchor_vertex = (0..n)
        .min_by_key(|&v| occ[v].len())
        .expect("eulerian graphs are nonempty");
    let product = occ.iter().try_fold(1u128, |acc, o| {
        let p = acc.checked_mul(o.len() as u128)?;
        (p <= OCCURRENCE_PRODUCT_LIMIT).then_some(p)
    });
    let exact_mode = n <= OCCURRENCE_EXACT_N && product.is_some();

    if exact_mode {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for &a in &occ[anchor_vertex] {
            let rot = Rotation::new(verts, verts, a);
            let mut search = ExactSelect {
                rot: &rot,
                m,
                chosen: {
                    let mut c = vec![false; n];
                    c[anchor_vertex] = true;
                    c
                },
                stack: vec![0],
                best_val: best.as_ref().map_or(m + 1, |b| b.0),
                best_stack: Vec::new(),
            };
            search.dfs(1, 0, 0);
            if !search.best_stack.is_empty() {
                let original: Vec<usize> = search.best_stack.iter().map(|&q| (q + a) % m).collect();
                best = Some((search.best_val, original));
            }
        }
        let (_, mut chosen) = best.expect("a full selection always exists");
        Ok(build_decomposition(verts, &mut chosen, true))
    } else {
        // smallest cap for which some anchored sweep succeeds; cap = m is
        // always feasible, so the search is well-defined
        let mut lo = m.div_ceil(n);
        let mut hi = m;
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            let feasible = occ[anchor_vertex]
                .iter()
                .any(|&a| greedy_sweep(&Rotation::new(verts, verts, a), n, mid).is_some());
            if feasible {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let (a, chosen_rot) = occ[anchor_vertex]
            .iter()
            .find_map(|&a| greedy_sweep(&Rotation::new(verts, verts, a), n, lo).map(|c| (a, c)))
            .expect("binary search verified feasibility at this cap");
        let mut chosen: Vec<usize> = chosen_rot.iter().map(|&q| (q + a) % m).collect();
        Ok(build_decomposition(verts, &mut chosen, false))
    }
}

// DFS over Euler circuits from vertex 0, branch choices in ascending
// neighbor order. Budget counts completions plus backtrack pops; returns
// true if the enumeration ran to completion.
fn for_each_circuit<FCb: FnMut(&Walk)>(g: &Digraph, budget: u64, cb: &mut FCb) -> bool {
    struct S<'a, FCb: FnMut(&Walk)> {
        g: &'a Digraph,
        base: Vec<usize>,
        used: Vec<bool>,
        remaining: usize,
        path: Vec<usize>,
        spent: u64,
        budget: u64,
        aborted: bool,
        cb: &'a mut FCb,
    }
    impl<FCb: FnMut(&Walk)> S<'_, FCb> {
        fn go(&mut self, cur: usize) {
            if self.remaining == 0 {
                debug_assert_eq!(cur, 0, "balanced circuits close at the start");
                self.spent += 1;
                let w = Walk::euler_circuit(self.path.clone())
                    .expect("complete traversal closes at the start");
                (self.cb)(&w);
                if self.spent >= self.budget {
                    self.aborted = true;
                }
                return;
            }
            for j in 0..self.g.out(cur).len() {
                if self.aborted {
                    return;
                }
                let e = self.base[cur] + j;
                if self.used[e] {
                    continue;
                }
                let v = self.g.out(cur)[j];
                self.used[e] = true;
                self.path.push(v);
                self.remaining -= 1;
                self.go(v);
                self.remaining += 1;
                self.path.pop();
                self.used[e] = false;
                self.spent += 1;
                if self.spent >= self.budget {
                    self.aborted = true;
                    return;
                }
            }
        }
    }
    let mut base = vec![0usize; g.n() + 1];
    for u in 0..g.n() {
        base[u + 1] = base[u] + g.out(u).len();
    }
    let mut s = S {
        g,
        base,
        used: vec![false; g.m()],
        remaining: g.m(),
        path: vec![0],
        spent: 0,
        budget,
        aborted: false,
        cb,
    };
    s.go(0);
    !s.aborted
}

/// Searches Euler circuits (within `budget`) combined with
/// [`occurrence_select`], keeping the decomposition whose descending-sorted
/// path lengths are lexicographically smallest. The flag is true only when
/// the circuit search completed and every occurrence selection along the
/// way was exact.
pub fn lexmin_decomposition(
    g: &Digraph,
    budget: u64,
) -> Result<(PathDecomposition, bool), TheoremError> {
    if !is_eulerian(g) {
        return Err(TheoremError::NotEulerian);
    }
    let mut best: Option<(Vec<usize>, PathDecomposition)> = None;
    let mut all_exact = true;
    let complete = for_each_circuit(g, budget, &mut |w: &Walk| {
        let d = occurrence_select(g, w).expect("enumerated circuits are valid");
        if !d.exact {
            all_exact = false;
        }
        let key = d.sorted_lengths();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, d));
        }
    });
    let d = match best {
        Some((_, d)) => d,
        // budget too small for even one completion: fall back to the
        // canonical circuit
        None => occurrence_select(g, &euler_circuit(g).expect("eulerian"))?,
    };
    Ok((d, complete && all_exact))
}

/// Compares a decomposition's longest path against f_bound(n) after
/// checking all structural invariants.
pub fn check_thm21(g: &Digraph, d: &PathDecomposition) -> Result<BoundReport, TheoremError> {
    validate_decomposition(g, d)?;
    let n = g.n() as u64;
    let rhs = f_bound(n.max(2));
    Ok(BoundReport {
        name: "thm21-len".to_string(),
        n,
        m: g.m() as u64,
        param: Some(d.max_len as u64),
        lhs: d.max_len as f64,
        rhs: rhs as f64,
        holds: (d.max_len as u64) <= rhs,
    })
}

/// f_bound(n) >= n-1 as a BoundReport row (lhs = n-1, rhs = f_bound(n)).
pub fn threshold_row(n: u64) -> BoundReport {
    let f = f_bound(n);
    BoundReport {
        name: "thm11".to_string(),
        n,
        m: 0,
        param: None,
        lhs: (n - 1) as f64,
        rhs: f as f64,
        holds: f >= n - 1,
    }
}
