//! Digraph toolkit around one question: how large a power of an Eulerian
//! digraph must you take before it becomes Hamiltonian?
//!
//! The pieces: a compact simple-digraph type, the path-number p# and
//! edge-disjoint decompositions realizing it, graph powers and exact
//! Hamiltonicity exponents with certificates, reduction to minimally
//! Eulerian subgraphs, an extremal family with large exponent, and bound
//! checkers wired into a batch verification harness.

pub mod batch;
pub mod digraph;
pub mod euler;
pub mod families;
pub mod io;
pub mod power;
pub mod theorem;
pub mod walk;

pub use batch::{acceptance_suite, render_records, CheckResult};
pub use digraph::{Digraph, DistanceMatrix, GraphError};
pub use euler::{
    decompose, enumerate_dicycles, euler_circuit, is_eulerian, is_minimally_eulerian,
    reduce_to_minimally_eulerian, remove_dicycle, spanning_arborescence, DecompOutcome, EulerError,
    Minimality, DEFAULT_CYCLE_CAP,
};
pub use families::{
    certify_gk, generate_gk, phi, random_dag, random_eulerian, FamilyError, GkCertificate, GkGraph,
    GkParams, HExact, Role, PRNG_ALGORITHM,
};
pub use io::{format_edge_list, format_edge_list_commented, parse_edge_list, to_dot, IoError};
pub use power::{
    ham_exponent, is_hamiltonian, power, verify_certificate, ExponentOutcome, HamResult,
    HamiltonCertificate, SolverOptions, DEFAULT_BUDGET, DP_VERTEX_LIMIT,
};
pub use theorem::{
    check_prop12, check_prop13, check_thm21, f_bound, lexmin_decomposition, occurrence_select,
    threshold_scan, validate_decomposition, BoundReport, PathDecomposition, TheoremError,
    ThresholdReport, DEFAULT_CIRCUIT_BUDGET, F_BOUND_MAX_N, REFINED_EXPONENT,
};
pub use walk::{Walk, WalkError, WalkKind};
