//! Exhaustive labeled enumeration at small order.
//!
//! A labeled graph on `n` vertices is an `n(n-1)/2`-bit mask; bit
//! `j(j-1)/2 + i` is the pair `(i, j)`, the same column-major order graph6
//! uses. Masks are visited in increasing order, so a contiguous mask range
//! is a shard and a power-of-two shard count is a fixed high-bit prefix.
//!
//! Nonexistence over labeled graphs implies nonexistence over isomorphism
//! classes: every unlabeled graph has at least one labeling, and each
//! labeling is visited. No canonical augmentation is needed for negative
//! results. Positive witnesses are deduplicated by canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::build_H;
use crate::formats::{pair_index, to_graph6};
use crate::graph::{Graph, INFINITE};
use crate::maximality::is_radially_maximal;

/// Default enumeration cap (`2^28` masks at order 8).
pub const DEFAULT_ORDER_CAP: usize = 8;
/// Masks must fit a `u64` and rows a `u16`.
pub const HARD_ORDER_CAP: usize = 11;
pub const ORDER_CAP_ENV: &str = "RADMAX_MAX_ORDER";
/// Labeled witnesses kept per shard before canonical deduplication.
pub const WITNESS_SAMPLE: usize = 64;
/// Violations kept per shard; the total is always counted.
pub const VIOLATION_SAMPLE: usize = 64;

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the enumeration cap {cap} (set {ORDER_CAP_ENV} to raise it, at most {HARD_ORDER_CAP})")]
    OrderAboveCap { order: usize, cap: usize },
    #[error("invalid {ORDER_CAP_ENV} value {0:?}")]
    InvalidCap(String),
    #[error("shard {index} is out of range for {count} shards")]
    InvalidShard { index: u64, count: u64 },
    #[error("minimum-order search needs radius >= 3, got {0}")]
    RadiusTooSmall(u32),
    #[error("cannot merge reports of different searches")]
    IncompatibleMerge,
}

/// Enumeration cap from `RADMAX_MAX_ORDER`, else [`DEFAULT_ORDER_CAP`].
pub fn order_cap() -> Result<usize, SearchError> {
    match std::env::var(ORDER_CAP_ENV) {
        Err(_) => Ok(DEFAULT_ORDER_CAP),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(cap) if (1..=HARD_ORDER_CAP).contains(&cap) => Ok(cap),
            _ => Err(SearchError::InvalidCap(raw)),
        },
    }
}

fn check_order(n: usize, cap: usize) -> Result<(), SearchError> {
    if n == 0 || n > cap.min(HARD_ORDER_CAP) {
        return Err(SearchError::OrderAboveCap { order: n, cap: cap.min(HARD_ORDER_CAP) });
    }
    Ok(())
}

#[inline]
pub fn edge_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

pub fn mask_count(n: usize) -> u64 {
    1u64 << edge_bits(n)
}

/// Mask range of shard `index` out of `count` equal contiguous shards.
pub fn shard_range(n: usize, shard: ShardSpec) -> Result<Range<u64>, SearchError> {
    let ShardSpec { index, count } = shard;
    if count == 0 || index >= count {
        return Err(SearchError::InvalidShard { index, count });
    }
    let total = mask_count(n) as u128;
    let at = |i: u64| (total * i as u128 / count as u128) as u64;
    Ok(at(index)..at(index + 1))
}

/// Calls `visitor` on every mask of order `n`, in increasing order.
pub fn enumerate_labeled(n: usize, visitor: impl FnMut(u64)) -> Result<(), SearchError> {
    check_order(n, order_cap()?)?;
    (0..mask_count(n)).for_each(visitor);
    Ok(())
}

pub fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let pairs = pair_table(n);
    let mut g = Graph::empty(n).expect("order within cap");
    let mut m = mask;
    while m != 0 {
        let (i, j) = pairs[m.trailing_zeros() as usize];
        g.insert_edge(i as usize, j as usize).expect("distinct pair");
        m &= m - 1;
    }
    g
}

pub fn graph_to_mask(g: &Graph) -> u64 {
    g.edges().fold(0, |acc, (i, j)| acc | 1 << pair_index(i, j))
}

fn pair_table(n: usize) -> Vec<(u8, u8)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i as u8, j as u8))).collect()
}

/// Bit-row graph used in the enumeration hot loop.
#[derive(Clone, Copy)]
struct Small {
    n: usize,
    adj: [u16; HARD_ORDER_CAP],
}

impl Small {
    #[inline]
    fn from_mask(n: usize, mask: u64, pairs: &[(u8, u8)]) -> Self {
        let mut adj = [0u16; HARD_ORDER_CAP];
        let mut m = mask;
        while m != 0 {
            let (i, j) = pairs[m.trailing_zeros() as usize];
            adj[i as usize] |= 1 << j;
            adj[j as usize] |= 1 << i;
            m &= m - 1;
        }
        Small { n, adj }
    }

    #[inline]
    fn full(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    #[inline]
    fn expand(&self, frontier: u16) -> u16 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= self.adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        next
    }

    #[inline]
    fn connected(&self) -> bool {
        let full = self.full();
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            frontier = self.expand(frontier) & !seen;
            seen |= frontier;
        }
        seen == full
    }

    /// Eccentricity of `v`, or `INFINITE` once it would exceed `limit`.
    #[inline]
    fn ecc(&self, v: usize, limit: u32) -> u32 {
        let full = self.full();
        let mut seen = 1u16 << v;
        let mut frontier = seen;
        let mut depth = 0;
        while seen != full {
            if depth == limit {
                return INFINITE;
            }
            frontier = self.expand(frontier) & !seen;
            if frontier == 0 {
                return INFINITE;
            }
            seen |= frontier;
            depth += 1;
        }
        depth
    }

    fn radius_diameter(&self) -> (u32, u32) {
        (0..self.n).map(|v| self.ecc(v, INFINITE)).fold((INFINITE, 0), |(lo, hi), e| (lo.min(e), hi.max(e)))
    }

    /// Every non-edge, once added, yields a vertex of eccentricity `< radius`.
    fn radially_maximal(&self, radius: u32) -> bool {
        if radius < 2 {
            return false;
        }
        for u in 0..self.n {
            let mut missing = !self.adj[u] & self.full() & !((2u16 << u) - 1);
            while missing != 0 {
                let v = missing.trailing_zeros() as usize;
                missing &= missing - 1;
                let mut t = *self;
                t.adj[u] |= 1 << v;
                t.adj[v] |= 1 << u;
                if !(0..self.n).any(|z| t.ecc(z, radius - 1) != INFINITE) {
                    return false;
                }
            }
        }
        true
    }
}

/// Classification of one labeled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskClass {
    pub radius: u32,
    pub diameter: u32,
    pub radially_maximal: bool,
}

/// `None` for disconnected graphs. With `radius_filter`, graphs of another
/// radius are reported with `radially_maximal = false` without testing.
fn classify_small(g: &Small, radius_filter: Option<u32>) -> Option<MaskClass> {
    if !g.connected() {
        return None;
    }
    let (radius, diameter) = g.radius_diameter();
    let wanted = radius_filter.is_none_or(|r| r == radius);
    Some(MaskClass { radius, diameter, radially_maximal: wanted && g.radially_maximal(radius) })
}

pub fn classify_mask(n: usize, mask: u64) -> Option<MaskClass> {
    classify_small(&Small::from_mask(n, mask, &pair_table(n)), None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardSpec {
    pub index: u64,
    pub count: u64,
}

impl ShardSpec {
    pub const WHOLE: ShardSpec = ShardSpec { index: 0, count: 1 };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Radius/diameter bound over every radially maximal graph.
    Bound,
    /// Non-self-centered radially maximal graphs of one radius.
    MinOrder,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStats {
    pub order: usize,
    pub graphs_visited: u64,
    pub connected: u64,
    pub radially_maximal: u64,
    pub self_centered_radially_maximal: u64,
    /// radius -> count of non-self-centered radially maximal graphs.
    pub non_self_centered_by_radius: BTreeMap<u32, u64>,
    /// radius -> diameter -> count of radially maximal graphs.
    pub radially_maximal_by_radius_diameter: BTreeMap<u32, BTreeMap<u32, u64>>,
    /// Radially maximal graphs with `d = 2r - 1`.
    pub diameter_2r_minus_1: u64,
    /// Radially maximal graphs with `d = 2r`.
    pub diameter_2r: u64,
}

impl OrderStats {
    fn merge(&mut self, other: &OrderStats) {
        debug_assert_eq!(self.order, other.order);
        self.graphs_visited += other.graphs_visited;
        self.connected += other.connected;
        self.radially_maximal += other.radially_maximal;
        self.self_centered_radially_maximal += other.self_centered_radially_maximal;
        for (&r, &c) in &other.non_self_centered_by_radius {
            *self.non_self_centered_by_radius.entry(r).or_default() += c;
        }
        for (&r, ds) in &other.radially_maximal_by_radius_diameter {
            let row = self.radially_maximal_by_radius_diameter.entry(r).or_default();
            for (&d, &c) in ds {
                *row.entry(d).or_default() += c;
            }
        }
        self.diameter_2r_minus_1 += other.diameter_2r_minus_1;
        self.diameter_2r += other.diameter_2r;
    }

    pub fn non_self_centered(&self, radius: u32) -> u64 {
        self.non_self_centered_by_radius.get(&radius).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub order: usize,
    pub graph6: String,
    pub radius: u32,
    pub diameter: u32,
    pub claim: String,
}

/// The order-`3r-1` graph `H(r, r+1)`, checked by the maximality verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedWitness {
    pub order: usize,
    pub graph6: String,
    pub radius: u32,
    pub diameter: u32,
    pub radially_maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub mode: SearchMode,
    pub radius: Option<u32>,
    /// Inclusive.
    pub order_range: (usize, usize),
    pub orders: Vec<OrderStats>,
    /// Canonical graph6 of non-self-centered radially maximal graphs found.
    pub extremal_examples: Vec<String>,
    /// Set when a shard saw more labeled witnesses than it sampled.
    pub examples_truncated: bool,
    pub violations: Vec<Violation>,
    pub violation_count: u64,
    pub constructed_witness: Option<ConstructedWitness>,
}

impl SearchReport {
    fn empty(mode: SearchMode, radius: Option<u32>, lo: usize, hi: usize) -> Self {
        SearchReport {
            mode,
            radius,
            order_range: (lo, hi),
            orders: Vec::new(),
            extremal_examples: Vec::new(),
            examples_truncated: false,
            violations: Vec::new(),
            violation_count: 0,
            constructed_witness: None,
        }
    }

    pub fn order(&self, n: usize) -> Option<&OrderStats> {
        self.orders.iter().find(|o| o.order == n)
    }

    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }

    /// Associative, commutative merge of two reports of the same search
    /// (e.g. two shards). Output is sorted, so merge order is irrelevant.
    pub fn merge(mut self, other: SearchReport) -> Result<SearchReport, SearchError> {
        if self.mode != other.mode || self.radius != other.radius {
            return Err(SearchError::IncompatibleMerge);
        }
        self.order_range = (self.order_range.0.min(other.order_range.0), self.order_range.1.max(other.order_range.1));
        for o in other.orders {
            match self.orders.iter_mut().find(|s| s.order == o.order) {
                Some(s) => s.merge(&o),
                None => self.orders.push(o),
            }
        }
        self.orders.sort_by_key(|o| o.order);
        let examples: BTreeSet<_> = self.extremal_examples.into_iter().chain(other.extremal_examples).collect();
        self.extremal_examples = examples.into_iter().collect();
        self.examples_truncated |= other.examples_truncated;
        self.violations.extend(other.violations);
        self.violations.sort();
        self.violations.dedup();
        self.violation_count += other.violation_count;
        if self.constructed_witness.is_none() {
            self.constructed_witness = other.constructed_witness;
        }
        Ok(self)
    }
}

/// Per-chunk accumulator.
#[derive(Default)]
struct Partial {
    stats: OrderStats,
    witnesses: Vec<u64>,
    truncated: bool,
    violations: Vec<Violation>,
    violation_count: u64,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.stats.merge(&other.stats);
        self.truncated |= other.truncated;
        for w in other.witnesses {
            if self.witnesses.len() < WITNESS_SAMPLE {
                self.witnesses.push(w);
            } else {
                self.truncated = true;
            }
        }
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.truncate(VIOLATION_SAMPLE);
        self
    }
}

fn scan(n: usize, range: Range<u64>, mode: SearchMode, radius_filter: Option<u32>) -> Partial {
    let pairs = pair_table(n);
    let chunks: Vec<Range<u64>> = {
        let mut v = Vec::new();
        let mut s = range.start;
        while s < range.end {
            let e = (s + CHUNK).min(range.end);
            v.push(s..e);
            s = e;
        }
        v
    };
    let identity = || Partial { stats: OrderStats { order: n, ..Default::default() }, ..Default::default() };
    chunks
        .into_par_iter()
        .map(|chunk| {
            let mut acc = identity();
            for mask in chunk {
                acc.stats.graphs_visited += 1;
                let g = Small::from_mask(n, mask, &pairs);
                let Some(class) = classify_small(&g, radius_filter) else { continue };
                acc.stats.connected += 1;
                if !class.radially_maximal {
                    continue;
                }
                record(&mut acc, n, mask, class, mode);
            }
            acc
        })
        .reduce(identity, Partial::merge)
}

fn record(acc: &mut Partial, n: usize, mask: u64, class: MaskClass, mode: SearchMode) {
    let MaskClass { radius: r, diameter: d, .. } = class;
    let s = &mut acc.stats;
    s.radially_maximal += 1;
    *s.radially_maximal_by_radius_diameter.entry(r).or_default().entry(d).or_default() += 1;
    if d == 2 * r - 1 {
        s.diameter_2r_minus_1 += 1;
    }
    if d == 2 * r {
        s.diameter_2r += 1;
    }
    if r == d {
        s.self_centered_radially_maximal += 1;
        return;
    }
    *s.non_self_centered_by_radius.entry(r).or_default() += 1;
    if acc.witnesses.len() < WITNESS_SAMPLE {
        acc.witnesses.push(mask);
    } else {
        acc.truncated = true;
    }
    let claim = match mode {
        SearchMode::Bound if d < r || d > 2 * r - 2 => Some("radius <= diameter <= 2*radius - 2".to_string()),
        SearchMode::MinOrder if n < 3 * r as usize - 1 => {
            Some(format!("no non-self-centered radially maximal graph of radius {r} below order {}", 3 * r - 1))
        }
        _ => None,
    };
    if let Some(claim) = claim {
        acc.violation_count += 1;
        if acc.violations.len() < VIOLATION_SAMPLE {
            let graph6 = to_graph6(&mask_to_graph(n, mask));
            acc.violations.push(Violation { order: n, graph6, radius: r, diameter: d, claim });
        }
    }
}

/// Lexicographically smallest mask over all relabelings.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let pairs = pair_table(n);
    let edges: Vec<(usize, usize)> = (0..pairs.len())
        .filter(|&k| mask >> k & 1 == 1)
        .map(|k| (pairs[k].0 as usize, pairs[k].1 as usize))
        .collect();
    let relabel = |p: &[usize]| {
        edges.iter().fold(0u64, |acc, &(i, j)| {
            let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
            acc | 1 << pair_index(a, b)
        })
    };
    // Heap's algorithm
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut best = relabel(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let k = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(k, i);
            best = best.min(relabel(&perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn finish(n: usize, partial: Partial, mode: SearchMode, radius: Option<u32>) -> SearchReport {
    let canon: BTreeSet<u64> = partial.witnesses.iter().map(|&m| canonical_mask(n, m)).collect();
    let mut report = SearchReport::empty(mode, radius, n, n);
    report.extremal_examples = canon.into_iter().map(|m| to_graph6(&mask_to_graph(n, m))).collect();
    report.extremal_examples.sort();
    report.examples_truncated = partial.truncated;
    report.violations = partial.violations;
    report.violations.sort();
    report.violation_count = partial.violation_count;
    report.orders = vec![partial.stats];
    report
}

/// Checks `r <= d <= 2r - 2` for every radially maximal labeled graph of
/// order `n` inside `shard`.
pub fn check_bound_all_sharded(n: usize, shard: ShardSpec) -> Result<SearchReport, SearchError> {
    check_order(n, order_cap()?)?;
    let range = shard_range(n, shard)?;
    Ok(finish(n, scan(n, range, SearchMode::Bound, None), SearchMode::Bound, None))
}

pub fn check_bound_all(n: usize) -> Result<SearchReport, SearchError> {
    check_bound_all_sharded(n, ShardSpec::WHOLE)
}

/// Counts non-self-centered radially maximal graphs of radius `r` at every
/// order `1..=n_max`; any found below `3r - 1` is a violation. The report
/// carries `H(r, r+1)` as the order-`3r-1` witness.
pub fn min_order_nonselfcentered_sharded(
    r: u32,
    n_max: usize,
    shard: ShardSpec,
) -> Result<SearchReport, SearchError> {
    if r < 3 {
        return Err(SearchError::RadiusTooSmall(r));
    }
    check_order(n_max, order_cap()?)?;
    let mut report = SearchReport::empty(SearchMode::MinOrder, Some(r), 1, n_max);
    for n in 1..=n_max {
        let partial = scan(n, shard_range(n, shard)?, SearchMode::MinOrder, Some(r));
        report = report.merge(finish(n, partial, SearchMode::MinOrder, Some(r)))?;
    }
    report.order_range = (1, n_max);
    report.constructed_witness = Some(constructed_witness(r));
    Ok(report)
}

pub fn min_order_nonselfcentered(r: u32, n_max: usize) -> Result<SearchReport, SearchError> {
    min_order_nonselfcentered_sharded(r, n_max, ShardSpec::WHOLE)
}

fn constructed_witness(r: u32) -> ConstructedWitness {
    let h = build_H(r, r + 1).expect("r >= 3 makes (r, r+1) feasible");
    let p = h.graph.eccentricity_profile();
    ConstructedWitness {
        order: h.graph.order(),
        graph6: to_graph6(&h.graph),
        radius: p.radius,
        diameter: p.diameter,
        radially_maximal: is_radially_maximal(&h.graph).unwrap_or(false),
    }
}
