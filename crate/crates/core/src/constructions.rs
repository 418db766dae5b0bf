//! Radially maximal graph families for every feasible (radius, diameter,
//! order) triple.
//!
//! Label conventions, fixed so that output is reproducible:
//!
//! * `H(r, d)` on `3r - 1` vertices: `x_i -> i - 1` for `i in 1..=2r-1`,
//!   `y_j -> 2r - 2 + j` for `j in 1..=r`.
//! * the self-centered family starts from the cycle `c1 .. c{2r}` (`c_i -> i - 1`),
//!   always extended at `c1`.
//! * extension copies are appended in creation order and named
//!   `<base>'<k>` for the `k`-th copy of `<base>`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("no radially maximal graph has radius {r} and diameter {d}: {violated}")]
    Infeasible { r: u32, d: u32, violated: String },
    #[error("order {n} is below the construction floor {floor} ({which}) for radius {r}, diameter {d}")]
    UnsupportedOrder { r: u32, d: u32, n: usize, floor: usize, which: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a requested (r, d, n) triple is handled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// `d = r >= 2`, `n >= 2r`.
    SelfCentered,
    /// `r < d <= 2r - 2`, `n >= 3r - 1`.
    NonSelfCentered,
    /// `d` lies outside `[r, 2r - 2]` (or `r < 2`).
    InfeasibleByTheorem(String),
    /// Feasible `(r, d)` but `n` below the constructive floor.
    UnsupportedOrder { floor: usize, which: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub r: u32,
    pub d: u32,
    pub n: usize,
}

impl ConstructionParams {
    pub fn new(r: u32, d: u32, n: usize) -> Self {
        ConstructionParams { r, d, n }
    }

    /// Reason `(r, d)` cannot be the radius and diameter of any radially
    /// maximal graph, if any.
    pub fn diameter_violation(r: u32, d: u32) -> Option<String> {
        if r < 2 {
            Some(format!("radius {r} < 2 (a radius-1 graph gains no smaller radius from a new edge)"))
        } else if d < r {
            Some(format!("diameter {d} < radius {r}"))
        } else if d > 2 * r - 2 {
            Some(format!("requires d <= 2r-2 = {}, got d = {d}", 2 * r - 2))
        } else {
            None
        }
    }

    pub fn classify(&self) -> Feasibility {
        let (r, d, n) = (self.r, self.d, self.n);
        if let Some(v) = Self::diameter_violation(r, d) {
            return Feasibility::InfeasibleByTheorem(v);
        }
        if d == r {
            let floor = 2 * r as usize;
            if n < floor {
                return Feasibility::UnsupportedOrder { floor, which: "2r" };
            }
            Feasibility::SelfCentered
        } else {
            let floor = 3 * r as usize - 1;
            if n < floor {
                return Feasibility::UnsupportedOrder { floor, which: "3r-1" };
            }
            Feasibility::NonSelfCentered
        }
    }

    fn check(&self) -> Result<Feasibility, ConstructionError> {
        let (r, d, n) = (self.r, self.d, self.n);
        match self.classify() {
            Feasibility::InfeasibleByTheorem(violated) => Err(ConstructionError::Infeasible { r, d, violated }),
            Feasibility::UnsupportedOrder { floor, which } => {
                Err(ConstructionError::UnsupportedOrder { r, d, n, floor, which })
            }
            _ if n > MAX_ORDER => Err(GraphError::OrderOutOfRange { order: n, max: MAX_ORDER }.into()),
            ok => Ok(ok),
        }
    }
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, d={}, n={})", self.r, self.d, self.n)
    }
}

/// A constructed graph with the name of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledConstruction {
    pub graph: Graph,
    /// `labels[v]` names vertex `v`.
    pub labels: Vec<String>,
    pub r: u32,
    pub d: u32,
}

impl LabeledConstruction {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertex id of `x_i` in an `H` construction.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!((1..=2 * self.r as usize - 1).contains(&i));
        i - 1
    }

    /// Vertex id of `y_j` in an `H` construction.
    pub fn y(&self, j: usize) -> usize {
        debug_assert!((1..=self.r as usize).contains(&j));
        2 * self.r as usize - 2 + j
    }

    /// Extends at vertex `v` and records the new copy's label.
    pub fn extend_at(&mut self, v: usize) -> Result<usize, GraphError> {
        self.graph = extend(&self.graph, v)?;
        let base = self.labels[v].split('\'').next().unwrap_or_default().to_string();
        let k = self.labels.iter().filter(|l| l.starts_with(&format!("{base}'"))).count() + 1;
        self.labels.push(format!("{base}'{k}"));
        Ok(self.graph.order() - 1)
    }
}

/// `G{v}`: a new vertex `v'` (id `n`) joined to `v` and to every neighbour
/// of `v`. Eccentricities of old vertices are unchanged and `e(v') = e(v)`
/// when `G` is connected of order at least 2.
pub fn extend(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let mut out = g.clone();
    let copy = out.push_vertex()?;
    for u in g.neighbors(v) {
        out.insert_edge(copy, u)?;
    }
    out.insert_edge(copy, v)?;
    Ok(out)
}

/// `C_{2r}` extended `n - 2r` times at `c1`; self-centered of radius `r`.
pub fn build_self_centered(r: u32, n: usize) -> Result<LabeledConstruction, ConstructionError> {
    let params = ConstructionParams::new(r, r, n);
    params.check()?;
    let len = 2 * r as usize;
    let mut c = LabeledConstruction {
        graph: Graph::cycle(len)?,
        labels: (1..=len).map(|i| format!("c{i}")).collect(),
        r,
        d: r,
    };
    while c.graph.order() < n {
        c.extend_at(0)?;
    }
    Ok(c)
}

/// Edge list of `H(r, d)` in 1-based `(x_i | y_j)` form, before id mapping.
fn h_edges(r: usize, d: usize) -> Vec<(Vertex, Vertex)> {
    use Vertex::{X, Y};
    let m = 2 * r - 1;
    let mut edges: Vec<(Vertex, Vertex)> = (1..=m).map(|i| (X(i), X(i % m + 1))).collect();
    edges.push((X(m), Y(1)));
    for j in 1..=2 * r - d {
        let i = 2 * r - 2 * j + 2;
        // only j = 1 reaches x_{2r}, which is x_1
        assert!(i <= 2 * r && (i < 2 * r || j == 1));
        edges.push((X(if i == 2 * r { 1 } else { i }), Y(j)));
    }
    edges.push((X(d - r + 1), Y(2 * r - d + 1)));
    if d >= r + 2 {
        for t in 2 * r - d + 1..r {
            edges.push((Y(t), Y(t + 1)));
        }
    }
    edges
}

#[derive(Debug, Clone, Copy)]
enum Vertex {
    X(usize),
    Y(usize),
}

/// `H(r, d)`: the cycle `x_1 .. x_{2r-1}` with pendant `y`s and one `y`-path;
/// order `3r - 1`, radius `r`, diameter `d`.
#[allow(non_snake_case)]
pub fn build_H(r: u32, d: u32) -> Result<LabeledConstruction, ConstructionError> {
    let params = ConstructionParams::new(r, d, 3 * r.max(1) as usize - 1);
    match params.check()? {
        Feasibility::NonSelfCentered => {}
        _ => {
            return Err(ConstructionError::Infeasible {
                r,
                d,
                violated: format!("requires r < d, got d = r = {r}"),
            })
        }
    }
    let (ru, du) = (r as usize, d as usize);
    let id = |v: Vertex| match v {
        Vertex::X(i) => i - 1,
        Vertex::Y(j) => 2 * ru - 2 + j,
    };
    let graph = Graph::from_edges(3 * ru - 1, h_edges(ru, du).into_iter().map(|(a, b)| (id(a), id(b))))?;
    let labels = (1..2 * ru).map(|i| format!("x{i}")).chain((1..=ru).map(|j| format!("y{j}"))).collect();
    Ok(LabeledConstruction { graph, labels, r, d })
}

/// Radially maximal graph with exactly radius `r`, diameter `d`, order `n`.
/// Orders above `3r - 1` extend `H(r, d)` repeatedly at `x_{2r-2}`.
pub fn build_radially_maximal(params: ConstructionParams) -> Result<LabeledConstruction, ConstructionError> {
    match params.check()? {
        Feasibility::SelfCentered => build_self_centered(params.r, params.n),
        Feasibility::NonSelfCentered => {
            let mut h = build_H(params.r, params.d)?;
            let anchor = h.x(2 * params.r as usize - 2);
            while h.graph.order() < params.n {
                h.extend_at(anchor)?;
            }
            Ok(h)
        }
        _ => unreachable!("check() rejects the other classes"),
    }
}

/// True iff `v` is not an eccentric vertex of any central vertex of `g`.
pub fn lemma1_precondition(g: &Graph, v: usize) -> Result<bool, GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let p = g.eccentricity_profile();
    if !p.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(p.center.iter().all(|&c| !p.eccentric_vertices(c).contains(&v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neighbours(g: &Graph, v: usize) -> Vec<usize> {
        g.neighbors(v).collect()
    }

    #[test]
    fn extend_k2_gives_triangle() {
        let g = extend(&Graph::complete(2).unwrap(), 0).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn extend_c4() {
        let g = extend(&Graph::cycle(4).unwrap(), 0).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(neighbours(&g, 4), vec![0, 1, 3]);
        let p = g.eccentricity_profile();
        assert_eq!((p.radius, p.diameter), (2, 2));
        assert!(extend(&g, 5).is_err());
    }

    #[test]
    fn extension_chain_on_c8() {
        let c = build_self_centered(4, 11).unwrap();
        assert_eq!(c.graph.order(), 11);
        let p = c.graph.eccentricity_profile();
        assert_eq!((p.radius, p.diameter), (4, 4));
        assert_eq!(c.labels[8..], ["c1'1", "c1'2", "c1'3"]);
        assert_eq!(build_self_centered(2, 4).unwrap().graph, Graph::cycle(4).unwrap());
    }

    #[test]
    fn self_centered_rejects_bad_params() {
        assert!(matches!(build_self_centered(1, 4), Err(ConstructionError::Infeasible { .. })));
        assert!(matches!(
            build_self_centered(3, 5),
            Err(ConstructionError::UnsupportedOrder { floor: 6, which: "2r", .. })
        ));
    }

    #[test]
    fn h_3_4_edge_list() {
        let h = build_H(3, 4).unwrap();
        assert_eq!(h.graph.order(), 8);
        assert_eq!(h.graph.size(), 9);
        let named = |a: &str, b: &str| h.graph.has_edge(h.vertex(a).unwrap(), h.vertex(b).unwrap());
        for (a, b) in [
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("x5", "x1"),
            ("x5", "y1"),
            ("x1", "y1"),
            ("x4", "y2"),
            ("x2", "y3"),
        ] {
            assert!(named(a, b), "{a}{b}");
        }
        assert_eq!((h.x(3), h.y(1), h.y(3)), (2, 5, 7));
    }

    #[test]
    fn h_6_7_has_no_y_path() {
        let h = build_H(6, 7).unwrap();
        assert_eq!(h.graph.order(), 17);
        assert_eq!(neighbours(&h.graph, h.y(6)), vec![h.x(2)]);
        for t in 1..6 {
            assert!(!h.graph.has_edge(h.y(t), h.y(t + 1)));
        }
    }

    #[test]
    fn h_6_10_y_path() {
        let h = build_H(6, 10).unwrap();
        for t in 3..6 {
            assert!(h.graph.has_edge(h.y(t), h.y(t + 1)));
        }
        assert!(!h.graph.has_edge(h.y(2), h.y(3)));
        assert_eq!(neighbours(&h.graph, h.y(2)), vec![h.x(10)]);
        assert!(h.graph.has_edge(h.x(5), h.y(3)));
        let p = h.graph.eccentricity_profile();
        assert_eq!((p.radius, p.diameter), (6, 10));
    }

    #[test]
    fn h_named_neighbourhoods() {
        for r in 3..=8u32 {
            for d in r + 1..=2 * r - 2 {
                let h = build_H(r, d).unwrap();
                let ru = r as usize;
                let mut y1 = neighbours(&h.graph, h.y(1));
                y1.sort();
                assert_eq!(y1, vec![h.x(1), h.x(2 * ru - 1)]);
                let j = 2 * ru - d as usize;
                if j >= 2 {
                    let k = 2 * (d as usize - ru + 1);
                    assert_eq!(neighbours(&h.graph, h.y(j)), vec![h.x(k)], "r={r} d={d}");
                }
            }
        }
    }

    #[test]
    fn build_h_rejects_infeasible() {
        assert!(build_H(2, 3).is_err());
        assert!(build_H(3, 3).is_err());
        assert!(build_H(3, 5).is_err());
    }

    #[test]
    fn dispatch_and_extension_anchor() {
        let g = build_radially_maximal(ConstructionParams::new(3, 4, 8)).unwrap();
        assert_eq!(g, build_H(3, 4).unwrap());
        let g = build_radially_maximal(ConstructionParams::new(3, 4, 12)).unwrap();
        assert_eq!(g.graph.order(), 12);
        assert_eq!(g.labels[8..], ["x4'1", "x4'2", "x4'3", "x4'4"]);
        let p = g.graph.eccentricity_profile();
        assert_eq!((p.radius, p.diameter), (3, 4));
    }

    #[test]
    fn classification() {
        use Feasibility::*;
        assert_eq!(ConstructionParams::new(2, 2, 4).classify(), SelfCentered);
        assert_eq!(ConstructionParams::new(3, 4, 8).classify(), NonSelfCentered);
        assert!(matches!(ConstructionParams::new(3, 5, 10).classify(), InfeasibleByTheorem(m) if m.contains("2r-2")));
        assert!(matches!(ConstructionParams::new(2, 3, 9).classify(), InfeasibleByTheorem(_)));
        assert!(matches!(ConstructionParams::new(4, 3, 9).classify(), InfeasibleByTheorem(_)));
        assert_eq!(
            ConstructionParams::new(4, 5, 10).classify(),
            UnsupportedOrder { floor: 11, which: "3r-1" }
        );
        assert!(matches!(
            build_radially_maximal(ConstructionParams::new(4, 4, 600)),
            Err(ConstructionError::Graph(GraphError::OrderOutOfRange { .. }))
        ));
    }

    #[test]
    fn extension_precondition_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!((0..4).all(|v| !lemma1_precondition(&c4, v).unwrap()));
        let h = build_H(3, 4).unwrap();
        assert!(lemma1_precondition(&h.graph, h.x(4)).unwrap());
        let h = build_H(6, 8).unwrap();
        assert!(lemma1_precondition(&h.graph, h.x(10)).unwrap());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(lemma1_precondition(&split, 0), Err(GraphError::Disconnected));
    }
}
