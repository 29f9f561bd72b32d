//! Perfect matchings of a cubic map versus 2-colorings of its dual
//! triangulation with the minimum number of monochromatic edges.
//!
//! Every triangular face has at least one monochromatic edge in any
//! 2-coloring, so a triangulation with 2n faces needs at least n of them;
//! the colorings attaining n, with the root vertex's color fixed, correspond
//! exactly to the perfect matchings of the dual cubic map. Both directions
//! are implemented on dart face-cycles so that loops and degenerate faces
//! need no special casing.

use crate::maps::{MapError, Matching, RootedMap};

/// A 2-coloring of the vertices of a (dual) triangulation, indexed by the
/// vertex order of `vertex_cycles`. The root vertex always has color 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, triangulation: &RootedMap) -> Result<Coloring, MapError> {
        if colors.len() != triangulation.n_vertices() {
            return Err(MapError::Internal("coloring length must match vertex count"));
        }
        if colors.iter().any(|&c| c != 1 && c != 2) {
            return Err(MapError::Internal("colors must be 1 or 2"));
        }
        let root = root_vertex(triangulation);
        if colors[root as usize] != 1 {
            return Err(MapError::Internal("root vertex color is fixed to 1"));
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }
}

/// The vertex of the triangulation holding its root dart. For a dual built
/// by `RootedMap::dual`, this is the face on the right of the primal root.
pub fn root_vertex(t: &RootedMap) -> u32 {
    t.vertex_of_darts()[t.root() as usize]
}

/// Edge ids whose two endpoints have equal colors. A loop is always
/// monochromatic.
pub fn monochromatic_edges(t: &RootedMap, c: &Coloring) -> Vec<u32> {
    let vx = t.vertex_of_darts();
    t.edges()
        .into_iter()
        .filter(|&e| {
            let u = vx[e as usize] as usize;
            let v = vx[t.alpha(e) as usize] as usize;
            c.colors[u] == c.colors[v]
        })
        .collect()
}

/// From a 2-coloring of a triangulation with 2n faces and exactly n
/// monochromatic edges to the perfect matching they cut out on the dual
/// cubic map. Edge ids are shared between a map and its dual.
pub fn matching_from_coloring(t: &RootedMap, c: &Coloring) -> Result<Matching, MapError> {
    if t.face_cycles().iter().any(|f| f.len() != 3) {
        return Err(MapError::Internal("input must be a triangulation"));
    }
    let faces = t.n_faces();
    if faces % 2 != 0 {
        return Err(MapError::Internal("a triangulation has evenly many faces"));
    }
    let n = faces / 2;
    let mono = monochromatic_edges(t, c);
    if mono.len() != n {
        return Err(MapError::WrongMonochromaticCount { got: mono.len(), expected: n });
    }
    let dual = t.dual();
    let matching = Matching::new(mono);
    if !matching.is_perfect_on(&dual) {
        return Err(MapError::Internal("minimal coloring did not induce a perfect matching"));
    }
    Ok(matching)
}

/// From a perfect matching of a cubic map to the coloring of its dual
/// triangulation whose monochromatic edges are exactly the duals of the
/// matching: contract the matched dual edges, 2-color the resulting
/// component graph (bipartite by the parity count of inner triangles), and
/// anchor the root component at color 1.
pub fn coloring_from_matching(m: &RootedMap, a: &Matching) -> Result<Coloring, MapError> {
    if !m.is_cubic() {
        return Err(MapError::NotCubic);
    }
    if !a.is_perfect_on(m) {
        return Err(MapError::NotAPerfectMatching);
    }
    let t = m.dual();
    let vx = t.vertex_of_darts();
    let nv = t.n_vertices();

    // union-find over triangulation vertices along matched edges
    let mut parent: Vec<u32> = (0..nv as u32).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut r = x;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut x = x;
        while parent[x as usize] != r {
            let next = parent[x as usize];
            parent[x as usize] = r;
            x = next;
        }
        r
    }
    for &e in a.edges() {
        let u = find(&mut parent, vx[e as usize]);
        let v = find(&mut parent, vx[t.alpha(e) as usize]);
        if u != v {
            parent[u as usize] = v;
        }
    }

    // 2-color the component graph; an odd cycle would contradict the
    // parity argument for near-triangulations, so it is trapped as a bug
    let mut edges_between: Vec<(u32, u32)> = Vec::new();
    for &e in &t.edges() {
        if a.edges().binary_search(&e).is_ok() {
            continue;
        }
        let u = find(&mut parent, vx[e as usize]);
        let v = find(&mut parent, vx[t.alpha(e) as usize]);
        if u == v {
            return Err(MapError::Internal("component graph has a loop"));
        }
        edges_between.push((u, v));
    }
    let mut comp_color: Vec<u8> = vec![0; nv];
    let root_comp = find(&mut parent, root_vertex(&t));
    let mut queue = std::collections::VecDeque::new();
    comp_color[root_comp as usize] = 1;
    queue.push_back(root_comp);
    while let Some(u) = queue.pop_front() {
        for &(x, y) in &edges_between {
            for (from, to) in [(x, y), (y, x)] {
                if from == u {
                    let want = 3 - comp_color[u as usize];
                    let got = comp_color[to as usize];
                    if got == 0 {
                        comp_color[to as usize] = want;
                        queue.push_back(to);
                    } else if got != want {
                        return Err(MapError::Internal("component graph is not bipartite"));
                    }
                }
            }
        }
    }
    // a map is connected, so every component is reachable from the root's
    for v in 0..nv as u32 {
        if comp_color[find(&mut parent, v) as usize] == 0 {
            return Err(MapError::Internal("component graph is disconnected"));
        }
    }

    let colors: Vec<u8> =
        (0..nv as u32).map(|v| comp_color[find(&mut parent, v) as usize]).collect();
    let coloring = Coloring::new(colors, &t)?;
    // the monochromatic edges must come out as exactly the matched ones
    let mono = monochromatic_edges(&t, &coloring);
    if mono != a.edges() {
        return Err(MapError::Internal("coloring does not reproduce the matching"));
    }
    Ok(coloring)
}

/// All 2-colorings of t with the root vertex fixed to color 1.
pub fn colorings_with_fixed_root(t: &RootedMap) -> Vec<Coloring> {
    let nv = t.n_vertices();
    let root = root_vertex(t) as usize;
    let free: Vec<usize> = (0..nv).filter(|&v| v != root).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0..(1u64 << free.len()) {
        let mut colors = vec![1u8; nv];
        for (bit, &v) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                colors[v] = 2;
            }
        }
        out.push(Coloring { colors });
    }
    out
}

/// Number of colorings of t (root color fixed) with exactly
/// `target_mono` monochromatic edges.
pub fn count_minimal_colorings(t: &RootedMap, target_mono: usize) -> usize {
    colorings_with_fixed_root(t)
        .iter()
        .filter(|c| monochromatic_edges(t, c).len() == target_mono)
        .count()
}

/// Census over all rooted triangulations with 2n faces (duals of the size-n
/// cubic maps) of minimal colorings with the root color fixed.
pub fn ising_census(n: usize, allow_large: bool) -> Result<u64, MapError> {
    let maps = crate::enumerate::enumerate_rooted_cubic_maps(n, allow_large)?;
    let mut total = 0u64;
    for m in &maps {
        total += count_minimal_colorings(&m.dual(), n) as u64;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_rooted_cubic_maps;
    use crate::maps::fixtures::{dumbbell, triple_edge};
    use crate::maps::list_perfect_matchings;

    #[test]
    fn census_matches_matched_counts() {
        assert_eq!(ising_census(1, false).unwrap(), 6);
        assert_eq!(ising_census(2, false).unwrap(), 54);
        assert_eq!(ising_census(3, false).unwrap(), 648);
    }

    #[test]
    fn all_one_coloring_is_rejected_on_two_faces() {
        let t = triple_edge().dual();
        let c = Coloring::new(vec![1; t.n_vertices()], &t).unwrap();
        // three monochromatic edges, but a 2-face triangulation needs exactly 1
        assert_eq!(
            matching_from_coloring(&t, &c),
            Err(MapError::WrongMonochromaticCount { got: 3, expected: 1 })
        );
    }

    #[test]
    fn round_trip_on_all_small_maps() {
        for n in 1..=3 {
            for m in enumerate_rooted_cubic_maps(n, false).unwrap() {
                let t = m.dual();
                for a in list_perfect_matchings(&m).unwrap() {
                    let c = coloring_from_matching(&m, &a).unwrap();
                    let back = matching_from_coloring(&t, &c).unwrap();
                    assert_eq!(back, a, "round trip failed on {:?}", m);
                }
            }
        }
    }

    #[test]
    fn coloring_count_equals_matching_count_per_map() {
        for n in 1..=3 {
            for m in enumerate_rooted_cubic_maps(n, false).unwrap() {
                let pm = list_perfect_matchings(&m).unwrap().len();
                let col = count_minimal_colorings(&m.dual(), n);
                assert_eq!(pm, col, "per-map census failed on {:?}", m);
            }
        }
    }

    #[test]
    fn minimality_of_monochromatic_count() {
        for n in 1..=2 {
            for m in enumerate_rooted_cubic_maps(n, false).unwrap() {
                let t = m.dual();
                for c in colorings_with_fixed_root(&t) {
                    assert!(monochromatic_edges(&t, &c).len() >= n);
                }
            }
        }
    }

    #[test]
    fn dumbbell_forced_coloring() {
        let m = dumbbell();
        let a = &list_perfect_matchings(&m).unwrap()[0];
        let c = coloring_from_matching(&m, a).unwrap();
        let t = m.dual();
        assert_eq!(monochromatic_edges(&t, &c).len(), 1);
        // the unique matching is the bridge, whose dual is a loop; a loop is
        // monochromatic under every coloring
        assert!(t.is_loop_edge(a.edges()[0]));
    }
}
