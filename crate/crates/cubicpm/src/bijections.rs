//! The two fiber-counting correspondences behind the closed formulas:
//!
//! * contraction/splitting: matched cubic maps whose root edge is matched,
//!   versus 4-regular maps, with fibers of size 2^(n-1);
//! * truncation/flip/normalization: matched bridgeless cubic maps whose
//!   root edge is matched, versus arbitrary bridgeless maps, again with
//!   2^(n-1) fibers generated by an involutive flip on red edges.
//!
//! Matching edges are called red throughout, the rest black. Deleting the
//! red edges of a matched cubic map leaves a disjoint union of black
//! cycles; a red edge is bad when it lies inside one of them (the outside
//! of a cycle is the region holding the root edge), and a bad edge is
//! worthy when it is inside exactly one cycle and touches it. Flipping bad
//! worthy edges strictly shrinks the bad set, so every map normalizes to
//! the unique good map of its fiber, whose black cycles contract to the
//! base map.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::maps::{MapError, MatchedMap, Matching, RootedMap, UNSET};

/// One binary splitting choice per non-root vertex, in canonical vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitChoice {
    bits: Vec<bool>,
}

impl SplitChoice {
    pub fn new(bits: Vec<bool>) -> Self {
        SplitChoice { bits }
    }

    pub fn from_mask(mask: u64, len: usize) -> Self {
        SplitChoice { bits: (0..len).map(|i| mask >> i & 1 == 1).collect() }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

/// Contract every matching edge (the root edge must be one of them),
/// respecting the embedding. The result is 4-regular, rooted at the dart
/// that followed the root dart in the rotation at the contracted root
/// vertex, which lies on the outer face.
pub fn contract_matching(m: &RootedMap, a: &Matching) -> Result<RootedMap, MapError> {
    if !m.is_cubic() {
        return Err(MapError::NotCubic);
    }
    if !a.is_perfect_on(m) {
        return Err(MapError::NotAPerfectMatching);
    }
    if !a.contains(m, m.root()) {
        return Err(MapError::RootNotInMatching);
    }
    let nd = m.n_darts();
    let survives: Vec<bool> = (0..nd as u32).map(|d| !a.contains(m, d)).collect();
    let mut new_id = vec![UNSET; nd];
    let mut count = 0u32;
    for d in 0..nd {
        if survives[d] {
            new_id[d] = count;
            count += 1;
        }
    }
    let mut sigma = vec![UNSET; count as usize];
    let mut alpha = vec![UNSET; count as usize];
    for d in 0..nd as u32 {
        if !survives[d as usize] {
            continue;
        }
        // hop over the single matched dart of the vertex, splicing the two
        // rotations of the contracted edge together
        let mut s = m.sigma(d);
        if !survives[s as usize] {
            s = m.sigma(m.alpha(s));
        }
        debug_assert!(survives[s as usize]);
        sigma[new_id[d as usize] as usize] = new_id[s as usize];
        alpha[new_id[d as usize] as usize] = new_id[m.alpha(d) as usize];
    }
    let root = new_id[m.sigma(m.root()) as usize];
    debug_assert!(root != UNSET);
    let contracted = RootedMap::new(sigma, alpha, root);
    debug_assert!(contracted.is_regular(4));
    debug_assert!(contracted.is_planar());
    Ok(contracted.canonical_form())
}

/// Split every vertex of a 4-regular map into a matched edge: the root
/// vertex in the single way that puts the new root edge in the matching,
/// every other vertex according to its choice bit. Inverse of
/// `contract_matching` for every choice.
pub fn split_expand(f: &RootedMap, choice: &SplitChoice) -> Result<MatchedMap, MapError> {
    if !f.is_regular(4) {
        return Err(MapError::Internal("split_expand needs a 4-regular map"));
    }
    let f = f.canonical_form();
    let vertices = f.vertex_cycles();
    if choice.bits.len() != vertices.len() - 1 {
        return Err(MapError::Internal("one choice bit per non-root vertex"));
    }
    let nd = f.n_darts();
    let n = vertices.len();
    let mut sigma = vec![UNSET; nd + 2 * n];
    let mut alpha = vec![UNSET; nd + 2 * n];
    for d in 0..nd as u32 {
        alpha[d as usize] = f.alpha(d);
    }
    let mut set_cycle = |darts: [u32; 3], sigma: &mut Vec<u32>| {
        sigma[darts[0] as usize] = darts[1];
        sigma[darts[1] as usize] = darts[2];
        sigma[darts[2] as usize] = darts[0];
    };
    let mut red_edges = Vec::with_capacity(n);
    for (v, cycle) in vertices.iter().enumerate() {
        let (r, r2) = ((nd + 2 * v) as u32, (nd + 2 * v + 1) as u32);
        alpha[r as usize] = r2;
        alpha[r2 as usize] = r;
        red_edges.push(r);
        let &[d0, d1, d2, d3] = cycle.as_slice() else {
            unreachable!("4-regular vertex");
        };
        // bit false: split between d3|d0 and d1|d2; bit true: rotate by one
        let swap = v > 0 && choice.bits[v - 1];
        if swap {
            set_cycle([r, d1, d2], &mut sigma);
            set_cycle([r2, d3, d0], &mut sigma);
        } else {
            set_cycle([r, d0, d1], &mut sigma);
            set_cycle([r2, d2, d3], &mut sigma);
        }
    }
    let map = RootedMap::new(sigma, alpha, nd as u32);
    debug_assert!(map.is_cubic());
    if !map.is_planar() {
        return Err(MapError::Internal("vertex split broke planarity"));
    }
    Ok(MatchedMap::canonical(&map, &Matching::new(red_edges)))
}

/// Replace every degree-k vertex of a bridgeless map by a k-cycle; the
/// original edges become the red matching of the cubic result, the root is
/// kept, and loops become double edges with exactly one red side.
pub fn truncate_map(b: &RootedMap) -> Result<MatchedMap, MapError> {
    if b.has_bridge() {
        return Err(MapError::HasBridge);
    }
    let b = b.canonical_form();
    let nd = b.n_darts();
    let total: usize = nd + 2 * nd; // each original dart grows one cycle arc
    let mut sigma = vec![UNSET; total];
    let mut alpha = vec![UNSET; total];
    for d in 0..nd as u32 {
        alpha[d as usize] = b.alpha(d);
    }
    let mut next_arc = nd as u32;
    for cycle in b.vertex_cycles() {
        let k = cycle.len();
        // arc i joins cycle vertex i to vertex i+1; plus dart at i,
        // minus dart at i+1
        let plus: Vec<u32> = (0..k).map(|i| next_arc + 2 * i as u32).collect();
        let minus: Vec<u32> = (0..k).map(|i| next_arc + 2 * i as u32 + 1).collect();
        next_arc += 2 * k as u32;
        for i in 0..k {
            alpha[plus[i] as usize] = minus[i];
            alpha[minus[i] as usize] = plus[i];
            let prev = (i + k - 1) % k;
            // rotation at cycle vertex i: (original dart, forward arc,
            // backward arc)
            sigma[cycle[i] as usize] = plus[i];
            sigma[plus[i] as usize] = minus[prev];
            sigma[minus[prev] as usize] = cycle[i];
        }
    }
    let map = RootedMap::new(sigma, alpha, b.root());
    debug_assert!(map.is_cubic());
    debug_assert!(map.is_planar());
    if map.has_bridge() {
        return Err(MapError::Internal("truncation of a bridgeless map grew a bridge"));
    }
    let matching = Matching::new(b.edges());
    debug_assert!(matching.is_perfect_on(&map));
    Ok(MatchedMap::canonical(&map, &matching))
}

/// Flip a non-root red edge.
///
/// With red darts r_x, r_y and arms a = sigma(r_x), b = sigma^2(r_x),
/// c = sigma(r_y), d = sigma^2(r_y): the rotation at both endpoints is
/// reversed (the red edge is redrawn on the other side), and unless the
/// exceptional test fires, the arms a and c swap their far ends. The
/// exception — {b, c} forms an edge or deleting the edges of b and c
/// disconnects the map — leaves the pairing alone; the same test on
/// {a, d} must agree, which is asserted.
pub fn flip_edge(m: &RootedMap, red: &Matching, edge: u32) -> Result<RootedMap, MapError> {
    let e = m.edge_of(edge);
    if !red.contains(m, e) || e == m.edge_of(m.root()) {
        return Err(MapError::NotFlippable);
    }
    if !m.is_cubic() {
        return Err(MapError::NotCubic);
    }
    let r_x = e;
    let r_y = m.alpha(e);
    let a = m.sigma(r_x);
    let b = m.sigma(a);
    let c = m.sigma(r_y);
    let d = m.sigma(c);
    debug_assert!(!red.contains(m, a) && !red.contains(m, b));
    debug_assert!(!red.contains(m, c) && !red.contains(m, d));

    let exceptional = m.alpha(b) == c || m.disconnects(b, c);
    let mirror = m.alpha(a) == d || m.disconnects(a, d);
    if exceptional != mirror {
        return Err(MapError::Internal("exception test is not side-symmetric"));
    }

    let mut sigma: Vec<u32> = (0..m.n_darts() as u32).map(|t| m.sigma(t)).collect();
    let mut alpha: Vec<u32> = (0..m.n_darts() as u32).map(|t| m.alpha(t)).collect();
    // reverse both rotations: (r, a, b) -> (r, b, a)
    sigma[r_x as usize] = b;
    sigma[b as usize] = a;
    sigma[a as usize] = r_x;
    sigma[r_y as usize] = d;
    sigma[d as usize] = c;
    sigma[c as usize] = r_y;
    if !exceptional {
        let fa = m.alpha(a);
        let fc = m.alpha(c);
        if fa == c {
            return Err(MapError::Internal("twisted parallel arms in main flip case"));
        }
        alpha[a as usize] = fc;
        alpha[fc as usize] = a;
        alpha[c as usize] = fa;
        alpha[fa as usize] = c;
    }
    let flipped = RootedMap::new(sigma, alpha, m.root());
    if !flipped.is_planar() {
        return Err(MapError::Internal("flip broke planarity"));
    }
    Ok(flipped)
}

/// Flip a set of red edges, one after the other. The red edge ids are
/// stable under flips, and the outcome does not depend on the order.
pub fn flip_set(m: &RootedMap, red: &Matching, edges: &[u32]) -> Result<RootedMap, MapError> {
    let mut cur = m.clone();
    for &e in edges {
        cur = flip_edge(&cur, red, e)?;
    }
    Ok(cur)
}

/// A black cycle: the edges and vertices of one component of the map minus
/// its red edges.
#[derive(Debug, Clone)]
pub struct BlackCycle {
    pub edges: Vec<u32>,
    pub vertices: Vec<u32>,
}

/// Components of the black (non-matching) subgraph; 2-regular, so a
/// disjoint union of cycles. Requires a cubic map with a perfect matching.
pub fn black_cycles(m: &RootedMap, red: &Matching) -> Vec<BlackCycle> {
    let vx = m.vertex_of_darts();
    let mut seen_edge = std::collections::HashSet::new();
    let mut cycles = Vec::new();
    for start in 0..m.n_darts() as u32 {
        if red.contains(m, start) || seen_edge.contains(&m.edge_of(start)) {
            continue;
        }
        let mut edges = Vec::new();
        let mut vertices = Vec::new();
        let mut cur = start;
        loop {
            seen_edge.insert(m.edge_of(cur));
            edges.push(m.edge_of(cur));
            vertices.push(vx[cur as usize]);
            // step across the edge, then take the other black dart there
            let landed = m.alpha(cur);
            let mut next = m.sigma(landed);
            while next == landed || red.contains(m, next) {
                next = m.sigma(next);
            }
            debug_assert_ne!(next, landed);
            cur = next;
            if cur == start {
                break;
            }
        }
        edges.sort_unstable();
        edges.dedup();
        vertices.sort_unstable();
        vertices.dedup();
        cycles.push(BlackCycle { edges, vertices });
    }
    cycles
}

/// For each face, whether it lies on the far side of the given closed curve
/// from the root edge. Crossing a curve edge toggles the side; any other
/// edge connects faces on the same side.
fn face_sides(m: &RootedMap, curve_edges: &[u32]) -> Vec<bool> {
    let faces = m.face_cycles();
    let mut face_of = vec![UNSET; m.n_darts()];
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            face_of[d as usize] = i as u32;
        }
    }
    let mut side: Vec<Option<bool>> = vec![None; faces.len()];
    let start = face_of[m.root() as usize] as usize;
    side[start] = Some(false);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let here = side[f].unwrap();
        for &d in &faces[f] {
            let g = face_of[m.alpha(d) as usize] as usize;
            let flips = curve_edges.binary_search(&m.edge_of(d)).is_ok();
            let there = here ^ flips;
            match side[g] {
                None => {
                    side[g] = Some(there);
                    queue.push_back(g);
                }
                Some(s) => {
                    debug_assert_eq!(s, there, "inconsistent sides across a closed curve")
                }
            }
        }
    }
    side.into_iter().map(|s| s.expect("face graph of a map is connected")).collect()
}

/// Red edges that lie inside at least one black cycle, each with the list
/// of cycle indices enclosing it.
pub fn enclosing_cycles(m: &RootedMap, red: &Matching) -> (Vec<BlackCycle>, Vec<Vec<usize>>) {
    let cycles = black_cycles(m, red);
    let mut face_of = vec![UNSET; m.n_darts()];
    for (i, f) in m.face_cycles().iter().enumerate() {
        for &d in f {
            face_of[d as usize] = i as u32;
        }
    }
    let mut enclosing: Vec<Vec<usize>> = vec![Vec::new(); red.edges().len()];
    for (ci, cyc) in cycles.iter().enumerate() {
        let sides = face_sides(m, &cyc.edges);
        for (ei, &e) in red.edges().iter().enumerate() {
            if sides[face_of[e as usize] as usize] {
                enclosing[ei].push(ci);
            }
        }
    }
    // the root edge delimits the outside, so it can never be inside
    let root_idx = red.edges().binary_search(&m.edge_of(m.root()));
    if let Ok(ri) = root_idx {
        debug_assert!(enclosing[ri].is_empty(), "root edge cannot be inside a black cycle");
    }
    (cycles, enclosing)
}

/// Red edge ids that are bad (inside some black cycle).
pub fn bad_edges(m: &RootedMap, red: &Matching) -> Vec<u32> {
    let (_, enclosing) = enclosing_cycles(m, red);
    red.edges()
        .iter()
        .zip(&enclosing)
        .filter(|(_, inside)| !inside.is_empty())
        .map(|(&e, _)| e)
        .collect()
}

/// Bad edges inside exactly one cycle with at least one endpoint on it.
pub fn worthy_bad_edges(m: &RootedMap, red: &Matching) -> Vec<u32> {
    let vx = m.vertex_of_darts();
    let (cycles, enclosing) = enclosing_cycles(m, red);
    red.edges()
        .iter()
        .zip(&enclosing)
        .filter(|(&e, inside)| {
            if inside.len() != 1 {
                return false;
            }
            let cyc = &cycles[inside[0]];
            let u = vx[e as usize];
            let v = vx[m.alpha(e) as usize];
            cyc.vertices.binary_search(&u).is_ok() || cyc.vertices.binary_search(&v).is_ok()
        })
        .map(|(&e, _)| e)
        .collect()
}

/// How `normalize` picks the next bad worthy edge.
#[derive(Debug, Clone, Copy)]
pub enum FlipOrder {
    /// Smallest edge id first; deterministic.
    First,
    /// Uniform among the candidates, from a seeded generator. Used by the
    /// confluence tests.
    Seeded(u64),
}

/// Flip bad worthy edges until no bad edge remains. Each flip must
/// strictly decrease the number of bad edges; the step budget is
/// quadratic in the matching size.
pub fn normalize(m: &RootedMap, red: &Matching, order: FlipOrder) -> Result<RootedMap, MapError> {
    let mut rng = match order {
        FlipOrder::First => None,
        FlipOrder::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut cur = m.clone();
    let cap = red.len() * red.len() + 1;
    let mut last_bad = usize::MAX;
    for _ in 0..cap {
        let bad = bad_edges(&cur, red);
        if bad.is_empty() {
            return Ok(cur);
        }
        if bad.len() >= last_bad {
            return Err(MapError::Internal("flip did not decrease the bad edge count"));
        }
        last_bad = bad.len();
        let worthy = worthy_bad_edges(&cur, red);
        let pick = match &mut rng {
            None => *worthy.first().ok_or(MapError::Internal("no worthy bad edge"))?,
            Some(rng) => {
                *worthy.choose(rng).ok_or(MapError::Internal("no worthy bad edge"))?
            }
        };
        cur = flip_edge(&cur, red, pick)?;
    }
    Err(MapError::Internal("normalization exceeded its step budget"))
}

/// Contract the black cycles of a good map, recovering the base bridgeless
/// map whose truncation fiber the input belongs to.
pub fn recover_base(m: &RootedMap, red: &Matching) -> Result<RootedMap, MapError> {
    if !red.contains(m, m.root()) {
        return Err(MapError::RootNotInMatching);
    }
    if !bad_edges(m, red).is_empty() {
        return Err(MapError::Internal("recover_base needs a good map"));
    }
    let vx = m.vertex_of_darts();
    // the unique red dart at each vertex
    let mut red_dart = vec![UNSET; m.n_vertices()];
    for d in 0..m.n_darts() as u32 {
        if red.contains(m, d) {
            red_dart[vx[d as usize] as usize] = d;
        }
    }
    // compact new ids for the surviving (red) darts
    let mut new_id = vec![UNSET; m.n_darts()];
    let mut count = 0u32;
    for d in 0..m.n_darts() as u32 {
        if red.contains(m, d) {
            new_id[d as usize] = count;
            count += 1;
        }
    }
    let mut sigma = vec![UNSET; count as usize];
    let mut alpha = vec![UNSET; count as usize];
    let mut visited = vec![false; m.n_vertices()];
    for v0 in 0..m.n_vertices() {
        if visited[v0] {
            continue;
        }
        // walk the black cycle through v0, collecting red darts in the
        // rotation order of the contracted vertex
        let mut order = Vec::new();
        let mut v = v0 as u32;
        loop {
            visited[v as usize] = true;
            order.push(red_dart[v as usize]);
            let out = m.sigma(red_dart[v as usize]);
            debug_assert!(!red.contains(m, out));
            v = vx[m.alpha(out) as usize];
            if v == v0 as u32 {
                break;
            }
        }
        for (i, &d) in order.iter().enumerate() {
            sigma[new_id[d as usize] as usize] = new_id[order[(i + 1) % order.len()] as usize];
        }
    }
    for d in 0..m.n_darts() as u32 {
        if red.contains(m, d) {
            alpha[new_id[d as usize] as usize] = new_id[m.alpha(d) as usize];
        }
    }
    let base = RootedMap::new(sigma, alpha, new_id[m.root() as usize]);
    if !base.is_planar() {
        return Err(MapError::Internal("contracted base is not planar"));
    }
    if base.has_bridge() {
        return Err(MapError::Internal("contracted base has a bridge"));
    }
    Ok(base.canonical_form())
}

/// Normalize, then contract: the left inverse of `truncate_map` followed
/// by any flip set.
pub fn normalize_and_recover(
    m: &RootedMap,
    red: &Matching,
    order: FlipOrder,
) -> Result<RootedMap, MapError> {
    let good = normalize(m, red, order)?;
    recover_base(&good, red)
}

/// The full truncation fiber of a base map: every subset of non-root red
/// edges applied as flips, canonicalized.
pub fn truncation_fiber(base: &RootedMap) -> Result<Vec<MatchedMap>, MapError> {
    let matched = truncate_map(base)?;
    let root_edge = matched.map.edge_of(matched.map.root());
    let free: Vec<u32> =
        matched.matching.edges().iter().copied().filter(|&e| e != root_edge).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0..(1u64 << free.len()) {
        let subset: Vec<u32> = free
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let flipped = flip_set(&matched.map, &matched.matching, &subset)?;
        out.push(MatchedMap::canonical(&flipped, &matched.matching));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{
        enumerate_bridgeless_maps, enumerate_rooted_4regular_maps, enumerate_rooted_cubic_maps,
    };
    use crate::maps::list_perfect_matchings;

    fn matched_with_root_in(n: usize) -> Vec<MatchedMap> {
        let mut out = Vec::new();
        for m in enumerate_rooted_cubic_maps(n, false).unwrap() {
            for a in list_perfect_matchings(&m).unwrap() {
                if a.contains(&m, m.root()) {
                    out.push(MatchedMap::canonical(&m, &a));
                }
            }
        }
        out
    }

    #[test]
    fn one_vertex_four_regular_splits() {
        // the two 4-regular maps on one vertex split into the two matched
        // cubic maps on two vertices with the root edge matched
        let maps = enumerate_rooted_4regular_maps(1).unwrap();
        assert_eq!(maps.len(), 2);
        let mut produced = std::collections::HashSet::new();
        for f in &maps {
            let mm = split_expand(f, &SplitChoice::new(vec![])).unwrap();
            assert_eq!(contract_matching(&mm.map, &mm.matching).unwrap(), f.canonical_form());
            produced.insert(mm);
        }
        assert_eq!(produced.len(), 2);
        let want: std::collections::HashSet<_> = matched_with_root_in(1).into_iter().collect();
        assert_eq!(produced, want);
    }

    #[test]
    fn contract_requires_root_in_matching() {
        for m in enumerate_rooted_cubic_maps(1, false).unwrap() {
            for a in list_perfect_matchings(&m).unwrap() {
                if !a.contains(&m, m.root()) {
                    assert_eq!(contract_matching(&m, &a), Err(MapError::RootNotInMatching));
                }
            }
        }
    }

    #[test]
    fn split_round_trip_n2() {
        for f in enumerate_rooted_4regular_maps(2).unwrap() {
            let mut seen = std::collections::HashSet::new();
            for mask in 0..2u64 {
                let mm = split_expand(&f, &SplitChoice::from_mask(mask, 1)).unwrap();
                assert_eq!(
                    contract_matching(&mm.map, &mm.matching).unwrap(),
                    f.canonical_form()
                );
                assert!(seen.insert(mm), "choices must give distinct matched maps");
            }
        }
    }

    #[test]
    fn truncate_loop_map_gives_triple_edge() {
        // single vertex with one loop
        let base = RootedMap::new(vec![1, 0], vec![1, 0], 0);
        let mm = truncate_map(&base).unwrap();
        assert_eq!(mm.map.n_vertices(), 2);
        assert_eq!(mm.map.n_edges(), 3);
        assert!(!mm.map.is_simple());
        assert!(!mm.map.has_bridge());
        assert_eq!(mm.matching.len(), 1);
        // and it recovers
        assert_eq!(
            normalize_and_recover(&mm.map, &mm.matching, FlipOrder::First).unwrap(),
            base.canonical_form()
        );
    }

    #[test]
    fn truncate_rejects_bridges() {
        // path with one edge: a bridge
        let base = RootedMap::new(vec![0, 1], vec![1, 0], 0);
        assert_eq!(truncate_map(&base), Err(MapError::HasBridge));
    }

    #[test]
    fn flip_is_involution_up_to_isomorphism() {
        for n in 1..=2 {
            for mm in matched_with_root_in(n) {
                let root_edge = mm.map.edge_of(mm.map.root());
                for &e in mm.matching.edges() {
                    if e == root_edge {
                        continue;
                    }
                    let once = flip_edge(&mm.map, &mm.matching, e).unwrap();
                    let twice = flip_edge(&once, &mm.matching, e).unwrap();
                    assert_eq!(
                        MatchedMap::canonical(&twice, &mm.matching),
                        mm,
                        "flip twice on {:?}",
                        mm
                    );
                }
            }
        }
    }

    #[test]
    fn flip_rejects_root_and_black_edges() {
        let base = RootedMap::new(vec![1, 0], vec![1, 0], 0);
        let mm = truncate_map(&base).unwrap();
        let root_edge = mm.map.edge_of(mm.map.root());
        assert_eq!(flip_edge(&mm.map, &mm.matching, root_edge), Err(MapError::NotFlippable));
        let black = mm.map.edges().into_iter().find(|&e| e != root_edge).unwrap();
        assert_eq!(flip_edge(&mm.map, &mm.matching, black), Err(MapError::NotFlippable));
    }

    #[test]
    fn fibers_partition_bridgeless_matched_maps_n2() {
        let bases = enumerate_bridgeless_maps(2).unwrap();
        assert_eq!(bases.len(), 3);
        let mut produced = Vec::new();
        for b in &bases {
            let fiber = truncation_fiber(b).unwrap();
            assert_eq!(fiber.len(), 2);
            // every fiber element recovers its base
            for mm in &fiber {
                assert_eq!(
                    normalize_and_recover(&mm.map, &mm.matching, FlipOrder::First).unwrap(),
                    b.canonical_form()
                );
            }
            produced.extend(fiber);
        }
        let set: std::collections::HashSet<_> = produced.iter().cloned().collect();
        assert_eq!(set.len(), 6, "fibers must be disjoint");
        let want: std::collections::HashSet<_> = matched_with_root_in(2)
            .into_iter()
            .filter(|mm| !mm.map.has_bridge())
            .collect();
        assert_eq!(set, want);
        // exactly one of the six is simple: the planar K4
        assert_eq!(produced.iter().filter(|mm| mm.map.is_simple()).count(), 1);
    }

    #[test]
    fn truncation_output_is_good() {
        for n in 1..=3 {
            for b in enumerate_bridgeless_maps(n).unwrap() {
                let mm = truncate_map(&b).unwrap();
                assert!(bad_edges(&mm.map, &mm.matching).is_empty());
            }
        }
    }
}
