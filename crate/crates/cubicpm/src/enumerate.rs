//! Exhaustive generation of rooted planar maps and the brute-force censuses
//! built on it.
//!
//! Generation works directly in canonical labels: vertices are created in
//! discovery order, each vertex's darts are consecutive and follow its
//! rotation, and at every step the smallest unpaired dart is paired either
//! with a later unpaired dart or with slot 0 of a fresh vertex. Complete
//! pairings are therefore exactly the breadth-first canonical forms of
//! rooted connected maps (of every genus); a final Euler check keeps the
//! planar ones. No isomorphism rejection is ever needed.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::maps::{
    count_perfect_matchings, ConnectivityFilter, MapError, RootedMap, UNSET,
};

/// Sizes above this need the explicit opt-in flag; counts grow ~24^n.
pub const DEFAULT_MAX_SIZE: usize = 4;
pub const OPT_IN_MAX_SIZE: usize = 5;

/// What degrees the generated vertices may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSpec {
    /// Every vertex has this degree.
    Regular(usize),
    /// Arbitrary degrees >= 1.
    Any,
}

#[derive(Clone)]
struct GenState {
    /// degree of each created vertex
    degrees: Vec<u32>,
    /// pairing[d] = partner dart, or UNSET
    pairing: Vec<u32>,
    /// total darts to allocate (2 * edges)
    target: usize,
    spec: DegreeSpec,
    /// cap on vertex count (Regular only)
    max_vertices: usize,
}

impl GenState {
    fn new(spec: DegreeSpec, n_edges: usize, max_vertices: usize) -> Vec<GenState> {
        let target = 2 * n_edges;
        let mut seeds = Vec::new();
        let root_degrees: Vec<usize> = match spec {
            DegreeSpec::Regular(k) => vec![k],
            DegreeSpec::Any => (1..=target).collect(),
        };
        for d in root_degrees {
            if d <= target {
                seeds.push(GenState {
                    degrees: vec![d as u32],
                    pairing: vec![UNSET; d],
                    target,
                    spec,
                    max_vertices,
                });
            }
        }
        seeds
    }

    fn allocated(&self) -> usize {
        self.pairing.len()
    }

    fn first_unpaired(&self) -> Option<usize> {
        self.pairing.iter().position(|&p| p == UNSET)
    }

    fn add_vertex(&mut self, degree: usize, paired_to: usize) {
        let start = self.pairing.len();
        self.degrees.push(degree as u32);
        self.pairing.resize(start + degree, UNSET);
        self.pairing[paired_to] = start as u32;
        self.pairing[start] = paired_to as u32;
    }

    fn build_map(&self) -> RootedMap {
        let mut sigma = vec![UNSET; self.target];
        let mut start = 0usize;
        for &deg in &self.degrees {
            let deg = deg as usize;
            for i in 0..deg {
                sigma[start + i] = (start + (i + 1) % deg) as u32;
            }
            start += deg;
        }
        RootedMap::new(sigma, self.pairing.clone(), 0)
    }
}

fn generate_from<F: FnMut(RootedMap)>(state: &mut GenState, emit: &mut F) {
    let s = match state.first_unpaired() {
        None => {
            if state.allocated() == state.target {
                let map = state.build_map();
                if map.is_planar() {
                    emit(map);
                }
            }
            return;
        }
        Some(s) => s,
    };
    // pair s with a later unpaired dart on an existing vertex
    for t in s + 1..state.allocated() {
        if state.pairing[t] == UNSET {
            state.pairing[s] = t as u32;
            state.pairing[t] = s as u32;
            generate_from(state, emit);
            state.pairing[s] = UNSET;
            state.pairing[t] = UNSET;
        }
    }
    // or attach a fresh vertex at its slot 0
    let degree_choices: Vec<usize> = match state.spec {
        DegreeSpec::Regular(k) => {
            if state.degrees.len() < state.max_vertices { vec![k] } else { vec![] }
        }
        DegreeSpec::Any => (1..=state.target - state.allocated()).collect(),
    };
    for d in degree_choices {
        if state.allocated() + d > state.target {
            continue;
        }
        let undo_darts = state.allocated();
        state.add_vertex(d, s);
        generate_from(state, emit);
        state.degrees.pop();
        state.pairing.truncate(undo_darts);
        state.pairing[s] = UNSET;
    }
}

/// All rooted planar maps with the given degree constraint and edge count,
/// in canonical form, deterministic order.
pub fn enumerate_planar_maps(spec: DegreeSpec, n_edges: usize) -> Vec<RootedMap> {
    let max_vertices = match spec {
        DegreeSpec::Regular(k) => {
            assert_eq!(2 * n_edges % k, 0, "degree must divide dart count");
            2 * n_edges / k
        }
        DegreeSpec::Any => usize::MAX,
    };
    let mut out = Vec::new();
    for mut seed in GenState::new(spec, n_edges, max_vertices) {
        generate_from(&mut seed, &mut |m| out.push(m));
    }
    out
}

/// Rooted cubic planar maps of size n (2n vertices, 3n edges).
pub fn enumerate_rooted_cubic_maps(n: usize, allow_large: bool) -> Result<Vec<RootedMap>, MapError> {
    let max = if allow_large { OPT_IN_MAX_SIZE } else { DEFAULT_MAX_SIZE };
    if n < 1 || n > max {
        return Err(MapError::SizeOutOfRange { requested: n, max });
    }
    Ok(enumerate_planar_maps(DegreeSpec::Regular(3), 3 * n))
}

/// Rooted 4-regular planar maps with n vertices (2n edges).
pub fn enumerate_rooted_4regular_maps(n: usize) -> Result<Vec<RootedMap>, MapError> {
    if n < 1 || n > DEFAULT_MAX_SIZE {
        return Err(MapError::SizeOutOfRange { requested: n, max: DEFAULT_MAX_SIZE });
    }
    Ok(enumerate_planar_maps(DegreeSpec::Regular(4), 2 * n))
}

/// Rooted planar maps with n edges and arbitrary degrees.
pub fn enumerate_rooted_maps(n_edges: usize) -> Result<Vec<RootedMap>, MapError> {
    if n_edges < 1 || n_edges > DEFAULT_MAX_SIZE {
        return Err(MapError::SizeOutOfRange { requested: n_edges, max: DEFAULT_MAX_SIZE });
    }
    Ok(enumerate_planar_maps(DegreeSpec::Any, n_edges))
}

/// Rooted bridgeless planar maps with n edges, arbitrary degrees.
pub fn enumerate_bridgeless_maps(n_edges: usize) -> Result<Vec<RootedMap>, MapError> {
    Ok(enumerate_rooted_maps(n_edges)?
        .into_iter()
        .filter(|m| !m.has_bridge())
        .collect())
}

/// Generation seeds a few levels deep, for partitioning work across
/// threads. Each seed owns a disjoint subtree of the search.
fn seeds_at_depth(spec: DegreeSpec, n_edges: usize, depth: usize) -> Vec<GenState> {
    let max_vertices = match spec {
        DegreeSpec::Regular(k) => 2 * n_edges / k,
        DegreeSpec::Any => usize::MAX,
    };
    let mut frontier = GenState::new(spec, n_edges, max_vertices);
    for _ in 0..depth {
        let mut next = Vec::new();
        for state in frontier {
            let s = match state.first_unpaired() {
                None => {
                    next.push(state);
                    continue;
                }
                Some(s) => s,
            };
            for t in s + 1..state.allocated() {
                if state.pairing[t] == UNSET {
                    let mut child = state.clone();
                    child.pairing[s] = t as u32;
                    child.pairing[t] = s as u32;
                    next.push(child);
                }
            }
            let degree_choices: Vec<usize> = match state.spec {
                DegreeSpec::Regular(k) => {
                    if state.degrees.len() < state.max_vertices { vec![k] } else { vec![] }
                }
                DegreeSpec::Any => (1..=state.target - state.allocated()).collect(),
            };
            for d in degree_choices {
                if state.allocated() + d > state.target {
                    continue;
                }
                let mut child = state.clone();
                child.add_vertex(d, s);
                next.push(child);
            }
        }
        frontier = next;
    }
    frontier
}

/// Fold every generated planar map through `map_fn`, in parallel, reducing
/// with `+`. The reduction is associative and the seed partition fixed, so
/// the result is deterministic regardless of thread count.
pub fn parallel_census<T, F>(spec: DegreeSpec, n_edges: usize, threads: usize, map_fn: F) -> T
where
    T: Default + std::ops::AddAssign + Send,
    F: Fn(&RootedMap) -> T + Sync,
{
    let threads = threads.max(1);
    let seeds = seeds_at_depth(spec, n_edges, 2);
    if threads == 1 || seeds.len() <= 1 {
        let mut acc = T::default();
        for mut seed in seeds {
            generate_from(&mut seed, &mut |m| acc += map_fn(&m));
        }
        return acc;
    }
    let next_seed = AtomicUsize::new(0);
    let total = Mutex::new(T::default());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut local = T::default();
                loop {
                    let idx = next_seed.fetch_add(1, Ordering::Relaxed);
                    if idx >= seeds.len() {
                        break;
                    }
                    let mut seed = seeds[idx].clone();
                    generate_from(&mut seed, &mut |m| local += map_fn(&m));
                }
                *total.lock().unwrap() += local;
            });
        }
    });
    total.into_inner().unwrap()
}

/// Census row: total perfect matchings over all size-n cubic maps passing
/// each connectivity filter, plus the raw map count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub maps: u64,
    pub matched_all: u64,
    pub matched_bridgeless: u64,
    pub matched_three_connected: u64,
}

impl std::ops::AddAssign for CensusCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.maps += rhs.maps;
        self.matched_all += rhs.matched_all;
        self.matched_bridgeless += rhs.matched_bridgeless;
        self.matched_three_connected += rhs.matched_three_connected;
    }
}

/// Exhaustive matched census of cubic maps of size n.
pub fn cubic_census(n: usize, threads: usize, allow_large: bool) -> Result<CensusCounts, MapError> {
    let max = if allow_large { OPT_IN_MAX_SIZE } else { DEFAULT_MAX_SIZE };
    if n < 1 || n > max {
        return Err(MapError::SizeOutOfRange { requested: n, max });
    }
    Ok(parallel_census(DegreeSpec::Regular(3), 3 * n, threads, |m| {
        let pm = count_perfect_matchings(m).expect("generator emits cubic maps") as u64;
        let class = m.connectivity();
        CensusCounts {
            maps: 1,
            matched_all: pm,
            matched_bridgeless: if ConnectivityFilter::Bridgeless.admits(class) { pm } else { 0 },
            matched_three_connected: if ConnectivityFilter::ThreeConnected.admits(class) {
                pm
            } else {
                0
            },
        }
    }))
}

/// Matched census restricted to one connectivity filter.
pub fn matched_census(
    n: usize,
    filter: ConnectivityFilter,
    threads: usize,
    allow_large: bool,
) -> Result<u64, MapError> {
    let counts = cubic_census(n, threads, allow_large)?;
    Ok(match filter {
        ConnectivityFilter::All => counts.matched_all,
        ConnectivityFilter::Bridgeless => counts.matched_bridgeless,
        ConnectivityFilter::ThreeConnected => counts.matched_three_connected,
    })
}
