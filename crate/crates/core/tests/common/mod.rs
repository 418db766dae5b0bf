//! Independent oracles. Nothing here calls the crate's BFS or maximality
//! code: distances come from Floyd–Warshall over a plain adjacency matrix.

#![allow(dead_code)]

use rand::Rng;
use radmax::Graph;

pub const INF: u32 = u32::MAX;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn floyd_warshall(adj: &[Vec<bool>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn eccentricities(adj: &[Vec<bool>]) -> Vec<u32> {
    floyd_warshall(adj).iter().map(|row| *row.iter().max().unwrap()).collect()
}

pub fn radius(adj: &[Vec<bool>]) -> u32 {
    *eccentricities(adj).iter().min().unwrap()
}

/// Radially maximal by definition: connected, not complete, and every
/// added edge lowers the Floyd–Warshall radius.
pub fn brute_force_radially_maximal(g: &Graph) -> bool {
    let mut adj = matrix(g);
    let n = adj.len();
    let r = radius(&adj);
    if r == INF {
        panic!("oracle called on a disconnected graph");
    }
    let mut any_missing = false;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                continue;
            }
            any_missing = true;
            adj[u][v] = true;
            adj[v][u] = true;
            let lower = radius(&adj) < r;
            adj[u][v] = false;
            adj[v][u] = false;
            if !lower {
                return false;
            }
        }
    }
    any_missing
}

/// Random connected graph: a random spanning tree plus each other pair
/// with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.insert_edge(parent, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.insert_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// graph6 written from the format description, bit by bit.
pub fn graph6_reference(n: usize, edges: &[(usize, usize)]) -> String {
    assert!(n <= 62);
    let mut bitstring = String::new();
    for j in 1..n {
        for i in 0..j {
            let on = edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
            bitstring.push(if on { '1' } else { '0' });
        }
    }
    while !bitstring.len().is_multiple_of(6) {
        bitstring.push('0');
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bitstring.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}
