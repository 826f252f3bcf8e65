//! Vertex-sequence walks (dipaths, dicycles, Euler circuits) with
//! edge-validity invariants checked against a host graph.

use crate::digraph::Digraph;
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk too short for kind {0:?}")]
    TooShort(WalkKind),
    #[error("dipath repeats vertex {0}")]
    RepeatedVertex(usize),
    #[error("dicycle must start and end at the same vertex")]
    NotClosed,
    #[error("missing edge {0} -> {1} in host graph")]
    MissingEdge(usize, usize),
    #[error("euler circuit repeats edge {0} -> {1}")]
    RepeatedEdge(usize, usize),
    #[error("euler circuit covers {0} of {1} edges")]
    IncompleteCover(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    Dipath,
    Dicycle,
    EulerCircuit,
}

/// A walk is a vertex sequence; which structural invariants apply depends on
/// the kind:
///
/// - `Dipath`: all vertices distinct (at least one edge).
/// - `Dicycle`: first = last, interior distinct, length >= 2.
/// - `EulerCircuit`: first = last; edge coverage is checked against a host
///   graph by [`Walk::validate_in`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    kind: WalkKind,
    vertices: Vec<usize>,
}

impl Walk {
    pub fn dipath(vertices: Vec<usize>) -> Result<Walk, WalkError> {
        if vertices.len() < 2 {
            return Err(WalkError::TooShort(WalkKind::Dipath));
        }
        let mut seen = HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(WalkError::RepeatedVertex(v));
            }
        }
        Ok(Walk {
            kind: WalkKind::Dipath,
            vertices,
        })
    }

    pub fn dicycle(vertices: Vec<usize>) -> Result<Walk, WalkError> {
        // [v0, ..., v0] with at least 2 edges
        if vertices.len() < 3 {
            return Err(WalkError::TooShort(WalkKind::Dicycle));
        }
        if vertices.first() != vertices.last() {
            return Err(WalkError::NotClosed);
        }
        let mut seen = HashSet::new();
        for &v in &vertices[..vertices.len() - 1] {
            if !seen.insert(v) {
                return Err(WalkError::RepeatedVertex(v));
            }
        }
        Ok(Walk {
            kind: WalkKind::Dicycle,
            vertices,
        })
    }

    pub fn euler_circuit(vertices: Vec<usize>) -> Result<Walk, WalkError> {
        if vertices.len() < 3 {
            return Err(WalkError::TooShort(WalkKind::EulerCircuit));
        }
        if vertices.first() != vertices.last() {
            return Err(WalkError::NotClosed);
        }
        Ok(Walk {
            kind: WalkKind::EulerCircuit,
            vertices,
        })
    }

    pub fn kind(&self) -> WalkKind {
        self.kind
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false // a valid walk always has at least one edge
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Checks every consecutive pair against the host graph; for Euler
    /// circuits additionally checks that every host edge is used exactly
    /// once.
    pub fn validate_in(&self, g: &Digraph) -> Result<(), WalkError> {
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(WalkError::MissingEdge(u, v));
            }
        }
        if self.kind == WalkKind::EulerCircuit {
            let mut used = HashSet::new();
            for (u, v) in self.edges() {
                if !used.insert((u, v)) {
                    return Err(WalkError::RepeatedEdge(u, v));
                }
            }
            if used.len() != g.m() {
                return Err(WalkError::IncompleteCover(used.len(), g.m()));
            }
        }
        Ok(())
    }

    /// Canonical form of a dicycle: rotated so the minimum vertex comes
    /// first. Other kinds are returned unchanged.
    pub fn canonical_rotation(&self) -> Walk {
        if self.kind != WalkKind::Dicycle {
            return self.clone();
        }
        let interior = &self.vertices[..self.vertices.len() - 1];
        let minpos = interior
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .unwrap();
        let mut rotated: Vec<usize> = interior[minpos..]
            .iter()
            .chain(interior[..minpos].iter())
            .copied()
            .collect();
        rotated.push(rotated[0]);
        Walk {
            kind: WalkKind::Dicycle,
            vertices: rotated,
        }
    }
}

/// Report line: "P: v0 v1 ... vk" for dipaths, "C: v0 ... v0" for dicycles,
/// "E: v0 ... v0" for Euler circuits.
impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            WalkKind::Dipath => "P",
            WalkKind::Dicycle => "C",
            WalkKind::EulerCircuit => "E",
        };
        write!(f, "{tag}:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn dipath_requires_distinct_vertices() {
        assert!(Walk::dipath(vec![0, 1, 2]).is_ok());
        assert_eq!(
            Walk::dipath(vec![0, 1, 0]),
            Err(WalkError::RepeatedVertex(0))
        );
        assert_eq!(
            Walk::dipath(vec![0]),
            Err(WalkError::TooShort(WalkKind::Dipath))
        );
    }

    #[test]
    fn dicycle_structure() {
        assert!(Walk::dicycle(vec![0, 1, 0]).is_ok());
        assert!(Walk::dicycle(vec![0, 1, 2, 0]).is_ok());
        assert_eq!(Walk::dicycle(vec![0, 1, 2]), Err(WalkError::NotClosed));
        assert_eq!(
            Walk::dicycle(vec![0, 0]),
            Err(WalkError::TooShort(WalkKind::Dicycle))
        );
        assert_eq!(
            Walk::dicycle(vec![0, 1, 2, 1, 0]),
            Err(WalkError::RepeatedVertex(1))
        );
    }

    #[test]
    fn validate_against_host() {
        let g = triangle();
        let c = Walk::dicycle(vec![0, 1, 2, 0]).unwrap();
        assert!(c.validate_in(&g).is_ok());
        let bad = Walk::dicycle(vec![0, 2, 1, 0]).unwrap();
        assert_eq!(bad.validate_in(&g), Err(WalkError::MissingEdge(0, 2)));
    }

    #[test]
    fn euler_circuit_coverage() {
        let g = triangle();
        let e = Walk::euler_circuit(vec![0, 1, 2, 0]).unwrap();
        assert!(e.validate_in(&g).is_ok());
        let partial = Walk::euler_circuit(vec![0, 1, 2, 0]).unwrap();
        let bigger = Digraph::build(3, &[(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert_eq!(
            partial.validate_in(&bigger),
            Err(WalkError::IncompleteCover(3, 4))
        );
    }

    #[test]
    fn canonical_rotation_starts_at_minimum() {
        let c = Walk::dicycle(vec![2, 0, 1, 2]).unwrap();
        assert_eq!(c.canonical_rotation().vertices(), &[0, 1, 2, 0]);
    }

    #[test]
    fn display_format() {
        assert_eq!(Walk::dipath(vec![0, 1, 2]).unwrap().to_string(), "P: 0 1 2");
        assert_eq!(
            Walk::dicycle(vec![1, 3, 1]).unwrap().to_string(),
            "C: 1 3 1"
        );
    }
}
