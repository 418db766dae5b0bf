//! Radial maximality: decision, witness certificates, and the named
//! central/eccentric vertex facts of `H(r, d)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{build_H, ConstructionError};
use crate::graph::{Graph, GraphError, Scratch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaximalityError {
    #[error("graph is disconnected, so its radius is infinite")]
    Disconnected,
    #[error("complete graphs are not radially maximal")]
    Complete,
    #[error("adding edge {u}-{v} keeps the radius at {radius}")]
    NotMaximal { u: usize, v: usize, radius: u32 },
    #[error("certificate entry for {u}-{v} is invalid: {reason}")]
    InvalidCertificate { u: usize, v: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub u: usize,
    pub v: usize,
    pub witness: usize,
    /// Eccentricity of `witness` in `G + uv`.
    pub new_ecc: u32,
}

/// One witness per non-edge, each with eccentricity below the radius once
/// that edge is added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityCertificate {
    pub radius: u32,
    pub entries: Vec<CertificateEntry>,
}

fn connected_radius(g: &Graph) -> Result<u32, MaximalityError> {
    let p = g.eccentricity_profile();
    if !p.is_connected() {
        return Err(MaximalityError::Disconnected);
    }
    Ok(p.radius)
}

/// Smallest vertex id with eccentricity below `radius` in `g`.
fn first_witness(g: &Graph, radius: u32, s: &mut Scratch) -> Option<usize> {
    if radius == 0 {
        return None;
    }
    (0..g.order()).find(|&z| g.reaches_all_within(z, radius - 1, s))
}

/// First non-edge whose addition leaves the radius unchanged.
fn first_failure(g: &Graph, radius: u32) -> Option<(usize, usize)> {
    let mut s = Scratch::new(g);
    let mut t = g.clone();
    for (u, v) in g.non_edges() {
        t.insert_edge(u, v).expect("non-edge");
        let found = first_witness(&t, radius, &mut s).is_some();
        t.remove_edge(u, v).expect("in range");
        if !found {
            return Some((u, v));
        }
    }
    None
}

/// Not complete, and every added edge lowers the radius.
pub fn is_radially_maximal(g: &Graph) -> Result<bool, MaximalityError> {
    let radius = connected_radius(g)?;
    if g.is_complete() {
        return Ok(false);
    }
    Ok(first_failure(g, radius).is_none())
}

/// Full certificate, witnesses chosen as the minimum qualifying id.
pub fn certificate(g: &Graph) -> Result<MaximalityCertificate, MaximalityError> {
    let radius = connected_radius(g)?;
    if g.is_complete() {
        return Err(MaximalityError::Complete);
    }
    let pairs: Vec<_> = g.non_edges().collect();
    let entries = pairs
        .par_iter()
        .map_init(
            || Scratch::new(g),
            |s, &(u, v)| {
                let t = g.add_edge(u, v)?;
                let witness =
                    first_witness(&t, radius, s).ok_or(MaximalityError::NotMaximal { u, v, radius })?;
                Ok(CertificateEntry { u, v, witness, new_ecc: t.eccentricity(witness)? })
            },
        )
        .collect::<Result<Vec<_>, MaximalityError>>()?;
    Ok(MaximalityCertificate { radius, entries })
}

impl MaximalityCertificate {
    /// Rechecks every entry against `g` by recomputing the witness's
    /// eccentricity in `g + uv` from scratch.
    pub fn validate(&self, g: &Graph) -> Result<(), MaximalityError> {
        let radius = connected_radius(g)?;
        if radius != self.radius {
            return Err(MaximalityError::InvalidCertificate {
                u: 0,
                v: 0,
                reason: format!("radius {} recorded, graph has {radius}", self.radius),
            });
        }
        let mut expected = g.non_edges();
        for e in &self.entries {
            let bad = |reason: String| MaximalityError::InvalidCertificate { u: e.u, v: e.v, reason };
            if expected.next() != Some((e.u, e.v)) {
                return Err(bad("entries do not enumerate the non-edges in order".into()));
            }
            let ecc = g.add_edge(e.u, e.v)?.eccentricity(e.witness)?;
            if ecc != e.new_ecc {
                return Err(bad(format!("recomputed eccentricity {ecc}, recorded {}", e.new_ecc)));
            }
            if ecc >= radius {
                return Err(bad(format!("eccentricity {ecc} is not below radius {radius}")));
            }
        }
        if let Some((u, v)) = expected.next() {
            return Err(MaximalityError::InvalidCertificate { u, v, reason: "missing entry".into() });
        }
        if self.entries.is_empty() {
            return Err(MaximalityError::Complete);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessFact {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub r: u32,
    pub d: u32,
    pub facts: Vec<WitnessFact>,
}

impl WitnessReport {
    pub fn all_passed(&self) -> bool {
        self.facts.iter().all(|f| f.passed)
    }
}

/// Checks on the built `H(r, d)`:
///
/// * (a) `x_{d-r+1}` is central and `e(y_r) = d`;
/// * (b) `x_r` is central with unique eccentric vertex `y_1`;
/// * (c) `x_{r-1}` and `x_{r-2}` are central with unique eccentric vertex `y_2`;
/// * (d) `x_{r+1}` and `x_{2d-3r+1}` are central with unique eccentric vertex `y_r`;
/// * (e) `x_{2r-2}` is not an eccentric vertex of any vertex.
///
/// `x` subscripts are read modulo `2r - 1` (`x_0 = x_{2r-1}`).
#[allow(non_snake_case)]
pub fn verify_H_witnesses(r: u32, d: u32) -> Result<WitnessReport, ConstructionError> {
    let h = build_H(r, d)?;
    let p = h.graph.eccentricity_profile();
    let (ri, di) = (r as i64, d as i64);
    let m = 2 * ri - 1;
    let x = |k: i64| h.x(((k - 1).rem_euclid(m) + 1) as usize);
    let name = |v: usize| h.labels[v].clone();

    let unique_ecc = |v: usize, target: usize| -> (bool, String) {
        let ecc = p.eccentric_vertices(v);
        let ok = p.is_central(v) && ecc == [target];
        let names: Vec<_> = ecc.iter().map(|&e| name(e)).collect();
        (ok, format!("{}: e={} (radius {}), eccentric {{{}}}", name(v), p.ecc[v], p.radius, names.join(",")))
    };
    let combine = |parts: Vec<(bool, String)>| -> (bool, String) {
        (parts.iter().all(|p| p.0), parts.into_iter().map(|p| p.1).collect::<Vec<_>>().join("; "))
    };

    let mut facts = Vec::new();
    let mut push = |name: &str, (passed, detail): (bool, String)| {
        facts.push(WitnessFact { name: name.to_string(), passed, detail });
    };

    let center = x(di - ri + 1);
    let yr = h.y(r as usize);
    push(
        "x_{d-r+1} central, e(y_r) = d",
        (
            p.is_central(center) && p.ecc[yr] == d && p.radius == r && p.diameter == d,
            format!("{}: e={}; y{r}: e={}; radius {} diameter {}", name(center), p.ecc[center], p.ecc[yr], p.radius, p.diameter),
        ),
    );
    push("x_r central, unique eccentric y_1", unique_ecc(x(ri), h.y(1)));
    push(
        "x_{r-1}, x_{r-2} central, unique eccentric y_2",
        combine(vec![unique_ecc(x(ri - 1), h.y(2)), unique_ecc(x(ri - 2), h.y(2))]),
    );
    push(
        "x_{r+1}, x_{2d-3r+1} central, unique eccentric y_r",
        combine(vec![unique_ecc(x(ri + 1), yr), unique_ecc(x(2 * di - 3 * ri + 1), yr)]),
    );
    let anchor = x(2 * ri - 2);
    let hits: Vec<_> = (0..h.graph.order()).filter(|&v| p.eccentric_vertices(v).contains(&anchor)).map(name).collect();
    push(
        "x_{2r-2} eccentric to no vertex",
        (hits.is_empty(), format!("{} is eccentric to {{{}}}", name(anchor), hits.join(","))),
    );

    Ok(WitnessReport { r, d, facts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_self_centered;

    #[test]
    fn small_examples() {
        assert!(is_radially_maximal(&Graph::cycle(4).unwrap()).unwrap());
        assert!(!is_radially_maximal(&Graph::path(3).unwrap()).unwrap());
        assert!(!is_radially_maximal(&Graph::complete(5).unwrap()).unwrap());
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_radially_maximal(&split), Err(MaximalityError::Disconnected));
    }

    #[test]
    fn c4_certificate() {
        let c = certificate(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c.radius, 2);
        assert_eq!(
            c.entries,
            vec![
                CertificateEntry { u: 0, v: 2, witness: 0, new_ecc: 1 },
                CertificateEntry { u: 1, v: 3, witness: 1, new_ecc: 1 },
            ]
        );
        c.validate(&Graph::cycle(4).unwrap()).unwrap();
    }

    #[test]
    fn certificate_errors() {
        assert_eq!(
            certificate(&Graph::path(3).unwrap()),
            Err(MaximalityError::NotMaximal { u: 0, v: 2, radius: 1 })
        );
        assert_eq!(certificate(&Graph::complete(3).unwrap()), Err(MaximalityError::Complete));
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let g = build_self_centered(3, 7).unwrap().graph;
        let mut c = certificate(&g).unwrap();
        c.validate(&g).unwrap();
        c.entries[0].new_ecc += 1;
        assert!(c.validate(&g).is_err());
        c.entries[0].new_ecc -= 1;
        c.entries.pop();
        assert!(c.validate(&g).is_err());
    }

    #[test]
    fn h_3_4_witness_facts() {
        let report = verify_H_witnesses(3, 4).unwrap();
        assert_eq!(report.facts.len(), 5);
        assert!(report.all_passed(), "{report:#?}");
        assert!(verify_H_witnesses(3, 5).is_err());
    }
}
