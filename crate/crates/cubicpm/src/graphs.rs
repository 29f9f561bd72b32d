//! Labeled simple graphs on {1..n} (stored 0-based) and the brute-force
//! census of cubic planar ones with their perfect matching counts.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::maps::MapError;
use crate::planarity;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl LabeledGraph {
    pub fn new(n: usize, mut edges: Vec<(u32, u32)>) -> LabeledGraph {
        for e in edges.iter_mut() {
            assert!(e.0 != e.1, "no loops in simple graphs");
            assert!((e.0 as usize) < n && (e.1 as usize) < n);
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.windows(2).for_each(|w| assert!(w[0] != w[1], "no repeated edges"));
        LabeledGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    pub fn is_planar(&self) -> bool {
        planarity::is_planar(self.n, &self.edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
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
        count == self.n
    }

    fn connected_skipping_edge(&self, skip: usize) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i == skip {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let start = self.edges[skip].0 as usize;
        let target = self.edges[skip].1;
        let mut seen = vec![false; self.n];
        let mut stack = vec![start as u32];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            if u == target {
                return true;
            }
            for &v in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    pub fn has_bridge(&self) -> bool {
        (0..self.edges.len()).any(|i| !self.connected_skipping_edge(i))
    }

    /// Connected with no bridges.
    pub fn is_bridgeless(&self) -> bool {
        self.is_connected() && !self.has_bridge()
    }

    /// Simple edge-list text format: "n m" then one "u v" line per edge,
    /// 1-based.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }
}

/// Exhaustive count of perfect matchings, by matching the lowest uncovered
/// vertex first. Errors on odd vertex count.
pub fn count_perfect_matchings_graph(g: &LabeledGraph) -> Result<u64, MapError> {
    if g.n % 2 != 0 {
        return Err(MapError::Internal("perfect matchings need evenly many vertices"));
    }
    let adj = g.adjacency();
    fn rec(adj: &[Vec<u32>], covered: &mut [bool]) -> u64 {
        let u = match covered.iter().position(|&c| !c) {
            None => return 1,
            Some(u) => u,
        };
        covered[u] = true;
        let mut total = 0;
        for &v in &adj[u] {
            if !covered[v as usize] {
                covered[v as usize] = true;
                total += rec(adj, covered);
                covered[v as usize] = false;
            }
        }
        covered[u] = false;
        total
    }
    let mut covered = vec![false; g.n];
    Ok(rec(&adj, &mut covered))
}

pub const DEFAULT_MAX_LABELED: usize = 8;
pub const OPT_IN_MAX_LABELED: usize = 10;

/// Every labeled simple cubic graph on {1..n} exactly once (planar or not),
/// via completion of the lowest incomplete vertex: once vertices below u
/// are finished, u's missing neighbors can only be above u, so choosing
/// them as a set never repeats a graph.
fn for_each_labeled_cubic<F: FnMut(&LabeledGraph)>(n: usize, f: &mut F) {
    assert!(n % 2 == 0 && n >= 4);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut deg = vec![0u8; n];
    rec_cubic(n, &mut deg, &mut edges, f);
}

fn rec_cubic<F: FnMut(&LabeledGraph)>(
    n: usize,
    deg: &mut Vec<u8>,
    edges: &mut Vec<(u32, u32)>,
    f: &mut F,
) {
    let u = match deg.iter().position(|&d| d < 3) {
        None => {
            f(&LabeledGraph::new(n, edges.clone()));
            return;
        }
        Some(u) => u,
    };
    let need = 3 - deg[u] as usize;
    let candidates: Vec<u32> = (u as u32 + 1..n as u32)
        .filter(|&v| deg[v as usize] < 3 && !edges.contains(&(u as u32, v)))
        .collect();
    if candidates.len() < need {
        return;
    }
    // choose the `need`-subset of candidates joined to u
    let mut pick = vec![0usize; need];
    choose_rec(n, u, &candidates, need, 0, 0, &mut pick, deg, edges, f);
}

#[allow(clippy::too_many_arguments)]
fn choose_rec<F: FnMut(&LabeledGraph)>(
    n: usize,
    u: usize,
    candidates: &[u32],
    need: usize,
    chosen: usize,
    from: usize,
    pick: &mut Vec<usize>,
    deg: &mut Vec<u8>,
    edges: &mut Vec<(u32, u32)>,
    f: &mut F,
) {
    if chosen == need {
        rec_cubic(n, deg, edges, f);
        return;
    }
    for i in from..candidates.len() {
        if candidates.len() - i < need - chosen {
            break;
        }
        let v = candidates[i];
        pick[chosen] = i;
        deg[u] += 1;
        deg[v as usize] += 1;
        edges.push((u as u32, v));
        choose_rec(n, u, candidates, need, chosen + 1, i + 1, pick, deg, edges, f);
        edges.pop();
        deg[u] -= 1;
        deg[v as usize] -= 1;
    }
}

/// All labeled simple cubic planar graphs on {1..n}, including the
/// disconnected ones.
pub fn enumerate_labeled_cubic_planar(
    n: usize,
    allow_large: bool,
) -> Result<Vec<LabeledGraph>, MapError> {
    let max = if allow_large { OPT_IN_MAX_LABELED } else { DEFAULT_MAX_LABELED };
    if n % 2 != 0 || n < 4 || n > max {
        return Err(MapError::SizeOutOfRange { requested: n, max });
    }
    let mut out = Vec::new();
    for_each_labeled_cubic(n, &mut |g| {
        if g.is_planar() {
            out.push(g.clone());
        }
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    Connected,
    Bridgeless,
}

impl GraphFilter {
    pub const ALL: [GraphFilter; 3] =
        [GraphFilter::All, GraphFilter::Connected, GraphFilter::Bridgeless];

    pub fn admits(self, g: &LabeledGraph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::Connected => g.is_connected(),
            GraphFilter::Bridgeless => g.is_bridgeless(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphFilter::All => "all",
            GraphFilter::Connected => "connected",
            GraphFilter::Bridgeless => "bridgeless",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledCensus {
    pub graphs: u64,
    pub matched_all: u64,
    pub matched_connected: u64,
    pub matched_bridgeless: u64,
}

impl std::ops::AddAssign for LabeledCensus {
    fn add_assign(&mut self, rhs: Self) {
        self.graphs += rhs.graphs;
        self.matched_all += rhs.matched_all;
        self.matched_connected += rhs.matched_connected;
        self.matched_bridgeless += rhs.matched_bridgeless;
    }
}

/// Sum of perfect-matching counts over labeled cubic planar graphs on n
/// vertices, for all three connectivity filters at once. Work is split
/// across threads by the first vertex's neighbor choice.
pub fn labeled_census(n: usize, threads: usize, allow_large: bool) -> Result<LabeledCensus, MapError> {
    let max = if allow_large { OPT_IN_MAX_LABELED } else { DEFAULT_MAX_LABELED };
    if n % 2 != 0 || n < 4 || n > max {
        return Err(MapError::SizeOutOfRange { requested: n, max });
    }
    let tally = |g: &LabeledGraph| -> LabeledCensus {
        if !g.is_planar() {
            return LabeledCensus::default();
        }
        let pm = count_perfect_matchings_graph(g).expect("even vertex count");
        LabeledCensus {
            graphs: 1,
            matched_all: pm,
            matched_connected: if g.is_connected() { pm } else { 0 },
            matched_bridgeless: if g.is_bridgeless() { pm } else { 0 },
        }
    };

    // seed branches: the completed adjacency of vertex 0
    let firsts: Vec<[u32; 3]> = {
        let mut v = Vec::new();
        for a in 1..n as u32 {
            for b in a + 1..n as u32 {
                for c in b + 1..n as u32 {
                    v.push([a, b, c]);
                }
            }
        }
        v
    };
    let threads = threads.max(1).min(firsts.len());
    let run_branch = |first: &[u32; 3]| -> LabeledCensus {
        let mut acc = LabeledCensus::default();
        let mut deg = vec![0u8; n];
        deg[0] = 3;
        let mut edges: Vec<(u32, u32)> = first.iter().map(|&v| (0, v)).collect();
        for &v in first {
            deg[v as usize] = 1;
        }
        rec_cubic(n, &mut deg, &mut edges, &mut |g| acc += tally(g));
        acc
    };
    if threads == 1 {
        let mut acc = LabeledCensus::default();
        for first in &firsts {
            acc += run_branch(first);
        }
        return Ok(acc);
    }
    let next = AtomicUsize::new(0);
    let total = Mutex::new(LabeledCensus::default());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut local = LabeledCensus::default();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= firsts.len() {
                        break;
                    }
                    local += run_branch(&firsts[i]);
                }
                *total.lock().unwrap() += local;
            });
        }
    });
    Ok(total.into_inner().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> LabeledGraph {
        LabeledGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn prism() -> LabeledGraph {
        LabeledGraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
    }

    fn k33() -> LabeledGraph {
        LabeledGraph::new(
            6,
            vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
    }

    #[test]
    fn matching_counts_on_named_graphs() {
        assert_eq!(count_perfect_matchings_graph(&k4()).unwrap(), 3);
        assert_eq!(count_perfect_matchings_graph(&prism()).unwrap(), 4);
        assert_eq!(count_perfect_matchings_graph(&k33()).unwrap(), 6);
    }

    #[test]
    fn k4_is_the_only_cubic_graph_on_four_vertices() {
        let graphs = enumerate_labeled_cubic_planar(4, false).unwrap();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0], k4());
    }

    #[test]
    fn six_vertex_census() {
        let c = labeled_census(6, 1, false).unwrap();
        assert_eq!(c.matched_all, 240);
        assert_eq!(c.matched_connected, 240);
        assert_eq!(c.matched_bridgeless, 240);
    }

    #[test]
    fn six_vertex_enumeration_is_complete() {
        // there are 70 labeled cubic graphs on 6 vertices: the labelings of
        // K33 (10) and of the prism (60); only the prisms are planar
        let mut total = 0usize;
        for_each_labeled_cubic(6, &mut |_| total += 1);
        assert_eq!(total, 70);
        let planar = enumerate_labeled_cubic_planar(6, false).unwrap();
        assert_eq!(planar.len(), 60);
        for g in &planar {
            assert!(g.degrees().iter().all(|&d| d == 3));
            assert_eq!(g.is_planar(), planarity::is_planar_by_rotations(g.n(), g.edges()));
        }
    }

    #[test]
    fn census_thread_count_invariance() {
        let a = labeled_census(6, 1, false).unwrap();
        let b = labeled_census(6, 4, false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn size_checks() {
        assert!(matches!(labeled_census(7, 1, false), Err(MapError::SizeOutOfRange { .. })));
        assert!(matches!(labeled_census(12, 1, true), Err(MapError::SizeOutOfRange { .. })));
    }

    #[test]
    fn edge_list_format() {
        let s = k4().to_edge_list();
        assert!(s.starts_with("4 6\n"));
        assert!(s.contains("1 2\n"));
    }
}
