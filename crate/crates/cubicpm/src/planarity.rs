//! Exact planarity testing for small simple graphs, two independent ways.
//!
//! The primary tester embeds paths into faces one fragment at a time
//! (Demoucron-Malgrange-Pertuiset), per biconnected block. The second,
//! `is_planar_by_rotations`, simply tries every rotation system and checks
//! Euler's formula; it is exponential but exact, and the two must agree —
//! the censuses hang off this filter, so it gets a redundant
//! implementation.

use std::collections::{HashSet, VecDeque};

type Edge = (u32, u32);

fn norm(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

/// Exact planarity of a simple graph given as edge list on 0..n.
pub fn is_planar(n: usize, edges: &[Edge]) -> bool {
    if edges.len() < 9 {
        // K5 has 10 edges and K33 has 9; anything smaller embeds
        return true;
    }
    if edges.len() > 3 * n.max(3) - 6 {
        return false;
    }
    for block in biconnected_blocks(n, edges) {
        if !dmp_block_planar(&block) {
            return false;
        }
    }
    true
}

/// Biconnected blocks as edge lists (bridges come out as single-edge
/// blocks). Standard depth-first block decomposition.
fn biconnected_blocks(n: usize, edges: &[Edge]) -> Vec<Vec<Edge>> {
    let mut adj: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u as usize].push((v, i));
        adj[v as usize].push((u, i));
    }
    let mut depth = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();
    let mut used_edge = vec![false; edges.len()];

    // iterative DFS to keep the recursion depth bounded
    fn dfs(
        u: usize,
        d: usize,
        adj: &[Vec<(u32, usize)>],
        depth: &mut [usize],
        low: &mut [usize],
        stack: &mut Vec<Edge>,
        blocks: &mut Vec<Vec<Edge>>,
        used_edge: &mut [bool],
    ) {
        depth[u] = d;
        low[u] = d;
        for &(v, ei) in &adj[u] {
            let v = v as usize;
            if used_edge[ei] {
                continue;
            }
            used_edge[ei] = true;
            stack.push((u as u32, v as u32));
            if depth[v] == usize::MAX {
                dfs(v, d + 1, adj, depth, low, stack, blocks, used_edge);
                low[u] = low[u].min(low[v]);
                if low[v] >= d {
                    // u is a cut vertex (or the root); pop one block
                    let mut block = Vec::new();
                    while let Some(e) = stack.pop() {
                        block.push(e);
                        if e == (u as u32, v as u32) {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            } else {
                low[u] = low[u].min(depth[v]);
            }
        }
    }

    for s in 0..n {
        if depth[s] == usize::MAX && !adj[s].is_empty() {
            dfs(s, 0, &adj, &mut depth, &mut low, &mut stack, &mut blocks, &mut used_edge);
        }
    }
    blocks
}

/// DMP on one biconnected block.
fn dmp_block_planar(block_edges: &[Edge]) -> bool {
    if block_edges.len() <= 2 {
        return true;
    }
    let vertices: Vec<u32> = {
        let mut vs: Vec<u32> = block_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };
    if block_edges.len() + 6 > 3 * vertices.len() {
        if block_edges.len() > 3 * vertices.len() - 6 {
            return false;
        }
    }
    let all_edges: HashSet<Edge> = block_edges.iter().map(|&e| norm(e)).collect();
    let mut adj: std::collections::HashMap<u32, Vec<u32>> = std::collections::HashMap::new();
    for &(u, v) in block_edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }

    // seed with any cycle (exists: the block is 2-connected with >= 3 edges)
    let cycle = match find_cycle(&vertices, &adj) {
        None => return true, // acyclic block: a single edge, planar
        Some(c) => c,
    };
    let mut faces: Vec<Vec<u32>> = vec![cycle.clone(), cycle.clone()];
    let mut embedded_v: HashSet<u32> = cycle.iter().copied().collect();
    let mut embedded_e: HashSet<Edge> = HashSet::new();
    for i in 0..cycle.len() {
        embedded_e.insert(norm((cycle[i], cycle[(i + 1) % cycle.len()])));
    }

    while embedded_e.len() < all_edges.len() {
        // fragments: chords between embedded vertices, and components of
        // the non-embedded vertices with their attachment edges
        let mut fragments: Vec<(Vec<u32>, Vec<u32>)> = Vec::new(); // (attachments, interior)
        for &e in &all_edges {
            if !embedded_e.contains(&e) && embedded_v.contains(&e.0) && embedded_v.contains(&e.1)
            {
                fragments.push((vec![e.0, e.1], vec![]));
            }
        }
        let mut seen: HashSet<u32> = HashSet::new();
        for &v in &vertices {
            if embedded_v.contains(&v) || seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            let mut attach = HashSet::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop_front() {
                for &w in adj.get(&u).map(|v| v.as_slice()).unwrap_or(&[]) {
                    if embedded_v.contains(&w) {
                        attach.insert(w);
                    } else if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            let mut attach: Vec<u32> = attach.into_iter().collect();
            attach.sort_unstable();
            fragments.push((attach, comp));
        }

        // each fragment needs a face containing all its attachments
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (fi, (attach, _)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            let better = match &best {
                None => true,
                Some((_, b)) => admissible.len() < b.len(),
            };
            if better {
                let done = admissible.len() == 1;
                best = Some((fi, admissible));
                if done {
                    break;
                }
            }
        }
        let (fi, admissible) = best.expect("at least one fragment while edges remain");
        let (attach, interior) = &fragments[fi];
        debug_assert!(attach.len() >= 2, "blocks are 2-connected");
        let face_idx = admissible[0];

        // a path through the fragment between two attachments
        let path: Vec<u32> = if interior.is_empty() {
            vec![attach[0], attach[1]]
        } else {
            fragment_path(attach, interior, &adj)
        };
        for w in &path[1..path.len() - 1] {
            embedded_v.insert(*w);
        }
        for i in 0..path.len() - 1 {
            embedded_e.insert(norm((path[i], path[i + 1])));
        }

        // split the face along the path
        let face = faces.swap_remove(face_idx);
        let p1 = face.iter().position(|&v| v == path[0]).expect("attachment on face");
        let p2 = face.iter().position(|&v| v == *path.last().unwrap()).expect("attachment on face");
        let (from, to, path_fwd) = (p1.min(p2), p1.max(p2), p1 <= p2);
        let inner: Vec<u32> = path[1..path.len() - 1].to_vec();
        let mut f1: Vec<u32> = face[from..=to].to_vec();
        {
            let mut back = inner.clone();
            if path_fwd {
                back.reverse();
            }
            f1.extend(back);
        }
        let mut f2: Vec<u32> = face[to..].to_vec();
        f2.extend_from_slice(&face[..=from]);
        {
            let mut fwd = inner;
            if !path_fwd {
                fwd.reverse();
            }
            f2.extend(fwd);
        }
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn find_cycle(
    vertices: &[u32],
    adj: &std::collections::HashMap<u32, Vec<u32>>,
) -> Option<Vec<u32>> {
    // recursive DFS: any non-parent visited neighbor is an ancestor
    fn dfs(
        u: u32,
        from: u32,
        adj: &std::collections::HashMap<u32, Vec<u32>>,
        parent: &mut std::collections::HashMap<u32, u32>,
    ) -> Option<(u32, u32)> {
        for &w in adj.get(&u).map(|v| v.as_slice()).unwrap_or(&[]) {
            if w == from {
                continue;
            }
            if parent.contains_key(&w) {
                return Some((u, w));
            }
            parent.insert(w, u);
            if let Some(found) = dfs(w, u, adj, parent) {
                return Some(found);
            }
        }
        None
    }
    let start = vertices[0];
    let mut parent = std::collections::HashMap::new();
    parent.insert(start, u32::MAX);
    let (u, w) = dfs(start, u32::MAX, adj, &mut parent)?;
    let mut path = vec![u];
    let mut x = u;
    while x != w {
        x = parent[&x];
        path.push(x);
    }
    Some(path)
}

/// Breadth-first path from one attachment through the fragment interior to
/// a different attachment.
fn fragment_path(
    attach: &[u32],
    interior: &[u32],
    adj: &std::collections::HashMap<u32, Vec<u32>>,
) -> Vec<u32> {
    let interior_set: HashSet<u32> = interior.iter().copied().collect();
    let a1 = attach[0];
    // step from a1 into the interior, then walk to any other attachment
    let first_in = adj[&a1]
        .iter()
        .copied()
        .find(|w| interior_set.contains(w))
        .expect("attachment touches its fragment");
    let mut parent: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
    parent.insert(first_in, a1);
    let mut queue = VecDeque::from([first_in]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if w != a1 && attach.contains(&w) {
                // reached another attachment; reconstruct
                let mut path = vec![w, u];
                let mut x = u;
                while x != a1 {
                    x = parent[&x];
                    path.push(x);
                }
                path.reverse();
                return path;
            }
            if interior_set.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("2-connectivity guarantees a second attachment is reachable")
}

/// Ground-truth planarity by exhaustive search over rotation systems,
/// per connected component. Exponential; use only at desk sizes.
pub fn is_planar_by_rotations(n: usize, edges: &[Edge]) -> bool {
    let mut comp = vec![usize::MAX; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    let mut c = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = c;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        c += 1;
    }
    for ci in 0..c {
        let comp_edges: Vec<Edge> =
            edges.iter().copied().filter(|&(u, _)| comp[u as usize] == ci).collect();
        if comp_edges.len() >= 2 && !component_has_planar_rotation(&comp_edges) {
            return false;
        }
    }
    true
}

fn component_has_planar_rotation(edges: &[Edge]) -> bool {
    // darts 2i, 2i+1 for edge i
    let mut vertex_darts: std::collections::HashMap<u32, Vec<u32>> =
        std::collections::HashMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        vertex_darts.entry(u).or_default().push(2 * i as u32);
        vertex_darts.entry(v).or_default().push(2 * i as u32 + 1);
    }
    let nd = 2 * edges.len();
    let nv = vertex_darts.len();
    let darts_by_vertex: Vec<Vec<u32>> = vertex_darts.into_values().collect();

    // enumerate cyclic orders per vertex: fix the first dart, permute the rest
    fn rec(darts_by_vertex: &[Vec<u32>], vi: usize, sigma: &mut Vec<u32>, nd: usize, nv: usize) -> bool {
        if vi == darts_by_vertex.len() {
            // count faces of sigma o alpha
            let mut seen = vec![false; nd];
            let mut faces = 0;
            for start in 0..nd {
                if seen[start] {
                    continue;
                }
                faces += 1;
                let mut d = start;
                while !seen[d] {
                    seen[d] = true;
                    let a = d ^ 1;
                    d = sigma[a] as usize;
                }
            }
            return nv + faces == nd / 2 + 2;
        }
        let ds = &darts_by_vertex[vi];
        if ds.len() == 1 {
            sigma[ds[0] as usize] = ds[0];
            return rec(darts_by_vertex, vi + 1, sigma, nd, nv);
        }
        let mut rest: Vec<u32> = ds[1..].to_vec();
        permute(&mut rest, 0, &mut |perm| {
            let mut prev = ds[0];
            for &d in perm.iter() {
                sigma[prev as usize] = d;
                prev = d;
            }
            sigma[prev as usize] = ds[0];
            rec(darts_by_vertex, vi + 1, sigma, nd, nv)
        })
    }

    fn permute(items: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if k == items.len() {
            return f(items);
        }
        for i in k..items.len() {
            items.swap(k, i);
            if permute(items, k + 1, f) {
                return true;
            }
            items.swap(k, i);
        }
        false
    }

    let mut sigma = vec![0u32; nd];
    rec(&darts_by_vertex, 0, &mut sigma, nd, nv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u32) -> Vec<Edge> {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        e
    }

    fn k33() -> Vec<Edge> {
        let mut e = Vec::new();
        for u in 0..3u32 {
            for v in 3..6u32 {
                e.push((u, v));
            }
        }
        e
    }

    #[test]
    fn small_complete_graphs() {
        assert!(is_planar(4, &complete(4)));
        assert!(!is_planar(5, &complete(5)));
        assert!(is_planar_by_rotations(4, &complete(4)));
        assert!(!is_planar_by_rotations(5, &complete(5)));
    }

    #[test]
    fn k33_is_not_planar() {
        assert!(!is_planar(6, &k33()));
        assert!(!is_planar_by_rotations(6, &k33()));
    }

    #[test]
    fn k5_minus_edge_and_k33_plus_apex() {
        let mut e = complete(5);
        e.pop();
        assert!(is_planar(5, &e));
        assert!(is_planar_by_rotations(5, &e));
        // K33 plus an isolated pendant stays nonplanar
        let mut e = k33();
        e.push((0, 6));
        assert!(!is_planar(7, &e));
    }

    #[test]
    fn prism_and_cube() {
        let prism = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
        assert!(is_planar(6, &prism));
        assert!(is_planar_by_rotations(6, &prism));
        let cube = vec![
            (0, 1), (1, 2), (2, 3), (3, 0),
            (4, 5), (5, 6), (6, 7), (7, 4),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        assert!(is_planar(8, &cube));
        assert!(is_planar_by_rotations(8, &cube));
        // the 4-dimensional analogue is not planar
        let mut k44_ish = cube.clone();
        k44_ish.extend([(0, 6), (1, 7), (2, 4), (3, 5)]);
        assert!(!is_planar(8, &k44_ish));
    }

    #[test]
    fn disconnected_and_cut_vertex_cases() {
        // two K4 blocks sharing vertex 3
        let mut e = complete(4);
        e.extend([(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]);
        assert!(is_planar(7, &e));
        // K5 hanging off a path is still not planar
        let mut e = complete(5);
        e.extend([(4, 5), (5, 6)]);
        assert!(!is_planar(7, &e));
        // two disjoint K4s
        let mut e = complete(4);
        e.extend(complete(4).iter().map(|&(u, v)| (u + 4, v + 4)));
        assert!(is_planar(8, &e));
    }

    #[test]
    fn dmp_agrees_with_rotation_search_on_random_graphs() {
        // deterministic pseudo-random sweep over graphs on 6 vertices
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let all: Vec<Edge> = complete(6);
        for _ in 0..200 {
            let mask = next() as usize % (1 << all.len());
            let edges: Vec<Edge> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            assert_eq!(
                is_planar(6, &edges),
                is_planar_by_rotations(6, &edges),
                "disagreement on {:?}",
                edges
            );
        }
    }
}
