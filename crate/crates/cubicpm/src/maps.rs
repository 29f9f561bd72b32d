//! Rooted combinatorial maps in the dart model.
//!
//! A map is a pair of permutations on darts: `sigma` rotates the darts
//! counterclockwise around their vertex, `alpha` is the fixed-point-free
//! involution pairing the two darts of every edge. Faces are the cycles of
//! phi = sigma o alpha (apply alpha, then sigma); with counterclockwise
//! rotations, the phi-cycle through a dart is the face on its left, so the
//! outer face (right of the root) is the phi-cycle through alpha(root).
//!
//! Rooted maps have no nontrivial automorphisms, so a breadth-first
//! relabeling from the root dart is a complete isomorphism invariant; all
//! comparisons in the crate go through `canonical_form`.

use std::fmt;

pub const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// An operation requiring a cubic map got something else.
    NotCubic,
    /// Requested enumeration size is outside the supported range.
    SizeOutOfRange { requested: usize, max: usize },
    /// The root edge must belong to the distinguished matching.
    RootNotInMatching,
    /// The edge set is not a perfect matching of the map.
    NotAPerfectMatching,
    /// Input must be bridgeless.
    HasBridge,
    /// Flip target must be a red (matching) edge other than the root edge.
    NotFlippable,
    /// A coloring had the wrong number of monochromatic edges.
    WrongMonochromaticCount { got: usize, expected: usize },
    /// Contradiction with a structural guarantee; indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::NotCubic => write!(f, "map is not cubic"),
            MapError::SizeOutOfRange { requested, max } => {
                write!(f, "size {} out of supported range (max {})", requested, max)
            }
            MapError::RootNotInMatching => write!(f, "root edge is not in the matching"),
            MapError::NotAPerfectMatching => write!(f, "edge set is not a perfect matching"),
            MapError::HasBridge => write!(f, "map has a bridge"),
            MapError::NotFlippable => write!(f, "edge is not a flippable red edge"),
            MapError::WrongMonochromaticCount { got, expected } => {
                write!(f, "coloring has {} monochromatic edges, expected {}", got, expected)
            }
            MapError::Internal(msg) => write!(f, "internal invariant violated: {}", msg),
        }
    }
}

impl std::error::Error for MapError {}

/// Rooted map on darts 0..n_darts. Connected, any genus until checked.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedMap {
    sigma: Vec<u32>,
    alpha: Vec<u32>,
    root: u32,
}

impl fmt::Debug for RootedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedMap{{root: {}, vertices: {:?}}}", self.root, self.vertex_cycles())
    }
}

impl RootedMap {
    pub fn new(sigma: Vec<u32>, alpha: Vec<u32>, root: u32) -> Self {
        let m = RootedMap { sigma, alpha, root };
        m.validate();
        m
    }

    fn validate(&self) {
        let n = self.sigma.len();
        assert_eq!(self.alpha.len(), n);
        assert!(n >= 2 && n % 2 == 0, "dart count must be even and positive");
        assert!((self.root as usize) < n);
        let mut seen = vec![false; n];
        for d in 0..n {
            let s = self.sigma[d] as usize;
            assert!(s < n, "sigma out of range");
            assert!(!seen[s], "sigma is not a permutation");
            seen[s] = true;
            let a = self.alpha[d] as usize;
            assert!(a < n && a != d, "alpha must be fixed-point-free");
            assert_eq!(self.alpha[a], d as u32, "alpha must be an involution");
        }
        assert!(self.is_connected(), "maps are connected by definition");
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_darts() / 2
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn sigma(&self, d: u32) -> u32 {
        self.sigma[d as usize]
    }

    pub fn alpha(&self, d: u32) -> u32 {
        self.alpha[d as usize]
    }

    pub fn phi(&self, d: u32) -> u32 {
        self.sigma[self.alpha[d as usize] as usize]
    }

    /// Canonical edge id of the edge containing d: the smaller dart.
    pub fn edge_of(&self, d: u32) -> u32 {
        d.min(self.alpha(d))
    }

    pub fn edges(&self) -> Vec<u32> {
        (0..self.n_darts() as u32).filter(|&d| d < self.alpha(d)).collect()
    }

    fn cycles_of(perm: &[u32]) -> Vec<Vec<u32>> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start as u32;
            while !seen[d as usize] {
                seen[d as usize] = true;
                cycle.push(d);
                d = perm[d as usize];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Vertices as sigma-cycles, each starting at its minimal dart,
    /// ordered by that dart.
    pub fn vertex_cycles(&self) -> Vec<Vec<u32>> {
        Self::cycles_of(&self.sigma)
    }

    /// Faces as phi-cycles.
    pub fn face_cycles(&self) -> Vec<Vec<u32>> {
        let phi: Vec<u32> = (0..self.n_darts() as u32).map(|d| self.phi(d)).collect();
        Self::cycles_of(&phi)
    }

    /// dart -> vertex index, vertex indices matching `vertex_cycles` order.
    pub fn vertex_of_darts(&self) -> Vec<u32> {
        let cycles = self.vertex_cycles();
        let mut vx = vec![UNSET; self.n_darts()];
        for (v, cycle) in cycles.iter().enumerate() {
            for &d in cycle {
                vx[d as usize] = v as u32;
            }
        }
        vx
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_cycles().len()
    }

    pub fn n_faces(&self) -> usize {
        self.face_cycles().len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n_darts();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for next in [self.sigma[d as usize], self.alpha[d as usize]] {
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count == n
    }

    /// Euler check V - E + F = 2.
    pub fn is_planar(&self) -> bool {
        self.n_vertices() + self.n_faces() == self.n_edges() + 2
    }

    pub fn is_cubic(&self) -> bool {
        self.vertex_cycles().iter().all(|c| c.len() == 3)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.vertex_cycles().iter().all(|c| c.len() == k)
    }

    fn relabeling(&self) -> Vec<u32> {
        let n = self.n_darts();
        let mut new_of_old = vec![UNSET; n];
        let mut old_of_new: Vec<u32> = Vec::with_capacity(n);
        let mut label_vertex = |start: u32, new_of_old: &mut Vec<u32>, old_of_new: &mut Vec<u32>| {
            let mut d = start;
            loop {
                new_of_old[d as usize] = old_of_new.len() as u32;
                old_of_new.push(d);
                d = self.sigma[d as usize];
                if d == start {
                    break;
                }
            }
        };
        label_vertex(self.root, &mut new_of_old, &mut old_of_new);
        let mut t = 0;
        while t < old_of_new.len() {
            let partner = self.alpha[old_of_new[t] as usize];
            if new_of_old[partner as usize] == UNSET {
                label_vertex(partner, &mut new_of_old, &mut old_of_new);
            }
            t += 1;
        }
        assert_eq!(old_of_new.len(), n, "canonical relabeling must reach every dart");
        new_of_old
    }

    /// Breadth-first relabeling from the root. Two rooted maps are equal as
    /// rooted maps iff their canonical forms are identical.
    pub fn canonical_form(&self) -> RootedMap {
        let new_of_old = self.relabeling();
        let n = self.n_darts();
        let mut sigma = vec![UNSET; n];
        let mut alpha = vec![UNSET; n];
        for old in 0..n {
            let new = new_of_old[old] as usize;
            sigma[new] = new_of_old[self.sigma[old] as usize];
            alpha[new] = new_of_old[self.alpha[old] as usize];
        }
        RootedMap { sigma, alpha, root: 0 }
    }

    /// Dual map: faces become vertices (sigma* = phi), edges are shared,
    /// and the dual root is alpha(root) so that the dual root vertex is the
    /// face on the right of the primal root dart. An involution on the nose.
    pub fn dual(&self) -> RootedMap {
        let phi: Vec<u32> = (0..self.n_darts() as u32).map(|d| self.phi(d)).collect();
        RootedMap { sigma: phi, alpha: self.alpha.clone(), root: self.alpha(self.root) }
    }

    /// Endpoint vertices (edge dart, u, v) for every edge, in the vertex
    /// indexing of `vertex_cycles`.
    pub fn edge_endpoints(&self) -> Vec<(u32, u32, u32)> {
        let vx = self.vertex_of_darts();
        self.edges()
            .iter()
            .map(|&d| (d, vx[d as usize], vx[self.alpha(d) as usize]))
            .collect()
    }

    fn connected_without_edges(&self, banned: &[u32]) -> bool {
        let vx = self.vertex_of_darts();
        let nv = self.n_vertices();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for &(d, u, v) in &self.edge_endpoints() {
            if banned.contains(&d) {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut seen = vec![false; nv];
        let start = vx[self.root as usize];
        let mut stack = vec![start];
        seen[start as usize] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == nv
    }

    /// Deleting these two edges disconnects the underlying multigraph.
    pub fn disconnects(&self, e1: u32, e2: u32) -> bool {
        !self.connected_without_edges(&[self.edge_of(e1), self.edge_of(e2)])
    }

    pub fn is_loop_edge(&self, edge: u32) -> bool {
        let d = self.edge_of(edge);
        let vx = self.vertex_of_darts();
        vx[d as usize] == vx[self.alpha(d) as usize]
    }

    pub fn is_bridge(&self, edge: u32) -> bool {
        let d = self.edge_of(edge);
        if self.is_loop_edge(d) {
            return false;
        }
        !self.connected_without_edges(&[d])
    }

    pub fn has_bridge(&self) -> bool {
        self.edges().iter().any(|&d| self.is_bridge(d))
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs = std::collections::HashSet::new();
        for &(_, u, v) in &self.edge_endpoints() {
            if u == v {
                return false;
            }
            if !pairs.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    fn connected_without_vertices(&self, banned: &[u32]) -> bool {
        let nv = self.n_vertices();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for &(_, u, v) in &self.edge_endpoints() {
            if banned.contains(&u) || banned.contains(&v) {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let remaining: Vec<u32> = (0..nv as u32).filter(|v| !banned.contains(v)).collect();
        if remaining.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; nv];
        let mut stack = vec![remaining[0]];
        seen[remaining[0] as usize] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == remaining.len()
    }

    /// 3-connected in the polyhedral sense: simple, at least 4 vertices,
    /// and no separating vertex set of size at most 2.
    pub fn is_three_connected(&self) -> bool {
        let nv = self.n_vertices();
        if nv < 4 || !self.is_simple() {
            return false;
        }
        for u in 0..nv as u32 {
            if !self.connected_without_vertices(&[u]) {
                return false;
            }
            for v in u + 1..nv as u32 {
                if !self.connected_without_vertices(&[u, v]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn connectivity(&self) -> ConnectivityClass {
        if self.has_bridge() {
            ConnectivityClass::HasBridge
        } else if self.is_three_connected() {
            ConnectivityClass::ThreeConnected
        } else {
            ConnectivityClass::Bridgeless
        }
    }
}

/// Connectivity strata used by the censuses, mutually exclusive;
/// ThreeConnected implies bridgeless.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConnectivityClass {
    HasBridge,
    Bridgeless,
    ThreeConnected,
}

/// Which maps a census keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityFilter {
    All,
    Bridgeless,
    ThreeConnected,
}

impl ConnectivityFilter {
    pub const ALL: [ConnectivityFilter; 3] = [
        ConnectivityFilter::All,
        ConnectivityFilter::Bridgeless,
        ConnectivityFilter::ThreeConnected,
    ];

    pub fn admits(self, class: ConnectivityClass) -> bool {
        match self {
            ConnectivityFilter::All => true,
            ConnectivityFilter::Bridgeless => class >= ConnectivityClass::Bridgeless,
            ConnectivityFilter::ThreeConnected => class >= ConnectivityClass::ThreeConnected,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConnectivityFilter::All => "all",
            ConnectivityFilter::Bridgeless => "bridgeless",
            ConnectivityFilter::ThreeConnected => "three_connected",
        }
    }

    pub fn parse(s: &str) -> Option<ConnectivityFilter> {
        ConnectivityFilter::ALL.iter().copied().find(|f| f.name() == s)
    }
}

/// A perfect matching, as the sorted list of canonical edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<u32>,
}

impl Matching {
    pub fn new(mut edges: Vec<u32>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    pub fn contains(&self, map: &RootedMap, dart: u32) -> bool {
        self.edges.binary_search(&map.edge_of(dart)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Type invariants: covers every vertex exactly once, no loops.
    pub fn is_perfect_on(&self, map: &RootedMap) -> bool {
        let vx = map.vertex_of_darts();
        let nv = map.n_vertices();
        let mut cover = vec![0u8; nv];
        for &e in &self.edges {
            if map.edge_of(e) != e || map.is_loop_edge(e) {
                return false;
            }
            cover[vx[e as usize] as usize] += 1;
            cover[vx[map.alpha(e) as usize] as usize] += 1;
        }
        cover.iter().all(|&c| c == 1)
    }
}

/// All perfect matchings of a cubic map, by backtracking over vertices.
pub fn list_perfect_matchings(map: &RootedMap) -> Result<Vec<Matching>, MapError> {
    if !map.is_cubic() {
        return Err(MapError::NotCubic);
    }
    let vx = map.vertex_of_darts();
    let nv = map.n_vertices();
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); nv];
    for (d, u, v) in map.edge_endpoints() {
        if u != v {
            incident[u as usize].push(d);
            incident[v as usize].push(d);
        }
    }

    fn rec(
        map: &RootedMap,
        vx: &[u32],
        incident: &[Vec<u32>],
        covered: &mut [bool],
        chosen: &mut Vec<u32>,
        out: &mut Vec<Matching>,
    ) {
        let u = match covered.iter().position(|&c| !c) {
            None => {
                out.push(Matching::new(chosen.clone()));
                return;
            }
            Some(u) => u,
        };
        for &e in &incident[u] {
            let a = vx[e as usize] as usize;
            let b = vx[map.alpha(e) as usize] as usize;
            let other = if a == u { b } else { a };
            if other == u || covered[other] {
                continue;
            }
            covered[u] = true;
            covered[other] = true;
            chosen.push(e);
            rec(map, vx, incident, covered, chosen, out);
            chosen.pop();
            covered[u] = false;
            covered[other] = false;
        }
    }

    let mut covered = vec![false; nv];
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    rec(map, &vx, &incident, &mut covered, &mut chosen, &mut out);
    Ok(out)
}

pub fn count_perfect_matchings(map: &RootedMap) -> Result<usize, MapError> {
    Ok(list_perfect_matchings(map)?.len())
}

/// A map with a distinguished perfect matching, in canonical form. Used as
/// a set element by the bijection fiber tests.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchedMap {
    pub map: RootedMap,
    pub matching: Matching,
}

impl MatchedMap {
    /// Canonicalize the map and carry the matching through the relabeling.
    pub fn canonical(map: &RootedMap, matching: &Matching) -> MatchedMap {
        let new_of_old = map.relabeling();
        let canon = map.canonical_form();
        let edges = matching
            .edges()
            .iter()
            .map(|&e| {
                let d = new_of_old[e as usize];
                let d2 = new_of_old[map.alpha(e) as usize];
                d.min(d2)
            })
            .collect();
        MatchedMap { map: canon, matching: Matching::new(edges) }
    }
}

#[cfg(test)]
pub mod fixtures {
    use super::RootedMap;

    /// The triple edge: two vertices joined by three parallel edges.
    pub fn triple_edge() -> RootedMap {
        RootedMap::new(vec![1, 2, 0, 4, 5, 3], vec![3, 5, 4, 0, 2, 1], 0)
    }

    /// Two loops joined by a bridge.
    pub fn dumbbell() -> RootedMap {
        RootedMap::new(vec![1, 2, 0, 4, 5, 3], vec![1, 0, 3, 2, 5, 4], 0)
    }

    /// Planar K4: outer triangle on vertices 0-1-2, vertex 3 inside.
    pub fn k4() -> RootedMap {
        RootedMap::new(
            vec![1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9],
            vec![3, 9, 7, 0, 6, 10, 4, 2, 11, 1, 5, 8],
            0,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::{dumbbell, k4, triple_edge};
    use super::*;

    #[test]
    fn triple_edge_is_planar_and_cubic() {
        let m = triple_edge();
        assert!(m.is_planar());
        assert!(m.is_cubic());
        assert_eq!(m.n_vertices(), 2);
        assert_eq!(m.n_faces(), 3);
        assert_eq!(m.connectivity(), ConnectivityClass::Bridgeless);
        assert!(!m.is_simple());
    }

    #[test]
    fn triple_edge_has_three_matchings() {
        let m = triple_edge();
        let pms = list_perfect_matchings(&m).unwrap();
        assert_eq!(pms.len(), 3);
        for pm in &pms {
            assert!(pm.is_perfect_on(&m));
        }
    }

    #[test]
    fn dumbbell_unique_matching_is_the_bridge() {
        let m = dumbbell();
        assert!(m.is_planar());
        assert!(m.is_cubic());
        assert_eq!(m.connectivity(), ConnectivityClass::HasBridge);
        let pms = list_perfect_matchings(&m).unwrap();
        assert_eq!(pms.len(), 1);
        assert!(m.is_bridge(pms[0].edges()[0]));
    }

    #[test]
    fn k4_is_three_connected_with_three_matchings() {
        let m = k4();
        assert!(m.is_planar(), "V={} F={} E={}", m.n_vertices(), m.n_faces(), m.n_edges());
        assert!(m.is_cubic());
        assert_eq!(m.connectivity(), ConnectivityClass::ThreeConnected);
        assert_eq!(count_perfect_matchings(&m).unwrap(), 3);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for m in [triple_edge(), dumbbell(), k4()] {
            let c = m.canonical_form();
            assert_eq!(c, c.canonical_form());
            assert_eq!(c.root(), 0);
            assert!(c.is_planar());
        }
    }

    #[test]
    fn dual_is_involution_and_swaps_loops_with_bridges() {
        for m in [triple_edge(), dumbbell(), k4()] {
            let d = m.dual();
            assert_eq!(d.n_vertices(), m.n_faces());
            assert_eq!(d.n_faces(), m.n_vertices());
            assert!(d.is_planar());
            assert_eq!(d.dual().canonical_form(), m.canonical_form());
        }
        // a bridge dualizes to a loop
        let d = dumbbell().dual();
        assert!(d.edges().iter().any(|&e| d.is_loop_edge(e)));
        // duals of cubic maps are triangulations
        assert!(triple_edge().dual().face_cycles().iter().all(|c| c.len() == 3));
        assert!(k4().dual().face_cycles().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn non_cubic_matching_request_is_rejected() {
        // one vertex with two loops is 4-regular
        let m = RootedMap::new(vec![1, 2, 3, 0], vec![1, 0, 3, 2], 0);
        assert_eq!(list_perfect_matchings(&m), Err(MapError::NotCubic));
    }
}
