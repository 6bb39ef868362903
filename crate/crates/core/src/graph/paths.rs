//! Enumeration of induced paths and induced cycles.

use super::{above, bit, Bits, Graph};

/// All induced paths with between 2 and `max_vertices` vertices, each
/// reported once (first vertex smaller than last).
pub fn induced_paths(g: &Graph, max_vertices: usize) -> Vec<Vec<usize>> {
    let all = g.vertex_mask();
    induced_paths_between(g, all, all, 2, max_vertices)
}

/// Induced paths whose endpoints lie in `ends` and whose interior vertices
/// lie in `interior`, with `min_vertices..=max_vertices` vertices.
pub fn induced_paths_between(
    g: &Graph,
    ends: u64,
    interior: u64,
    min_vertices: usize,
    max_vertices: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_vertices);
    for s in Bits(ends) {
        path.clear();
        path.push(s);
        extend_path(g, ends, interior, min_vertices.max(2), max_vertices, &mut path, bit(s), 0, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Graph,
    ends: u64,
    interior: u64,
    min_vertices: usize,
    max_vertices: usize,
    path: &mut Vec<usize>,
    on_path: u64,
    // vertices adjacent to some path vertex other than the last
    blocked: u64,
    out: &mut Vec<Vec<usize>>,
) {
    if path.len() >= max_vertices {
        return;
    }
    let last = *path.last().unwrap();
    let candidates = g.neighbors(last) & !on_path & !blocked;
    for w in Bits(candidates) {
        path.push(w);
        if ends & bit(w) != 0 && path.len() >= min_vertices && path[0] < w {
            out.push(path.clone());
        }
        if interior & bit(w) != 0 {
            extend_path(
                g,
                ends,
                interior,
                min_vertices,
                max_vertices,
                path,
                on_path | bit(w),
                blocked | g.neighbors(last),
                out,
            );
        }
        path.pop();
    }
}

/// All induced cycles (length 3..=`max_len`) with every vertex in `within`,
/// each reported once starting from its smallest vertex.
pub fn induced_cycles(g: &Graph, within: u64, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    for s in Bits(within) {
        let allowed = within & above(s);
        for p1 in Bits(g.neighbors(s) & allowed) {
            path.clear();
            path.push(s);
            path.push(p1);
            cycle_step(g, allowed, max_len, &mut path, bit(s) | bit(p1), &mut out);
        }
    }
    out
}

fn cycle_step(
    g: &Graph,
    allowed: u64,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: u64,
    out: &mut Vec<Vec<usize>>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    // w must be adjacent to last and to no interior path vertex
    let interior_nb = path[1..path.len() - 1]
        .iter()
        .fold(0u64, |m, &v| m | g.neighbors(v));
    let candidates = g.neighbors(last) & allowed & !on_path & !interior_nb;
    for w in Bits(candidates) {
        if g.has_edge(w, s) {
            if path[1] < w {
                let mut c = path.clone();
                c.push(w);
                out.push(c);
            }
        } else if path.len() + 1 < max_len {
            path.push(w);
            cycle_step(g, allowed, max_len, path, on_path | bit(w), out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path};

    fn is_induced_path(g: &Graph, p: &[usize]) -> bool {
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if g.has_edge(p[i], p[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn cycles_of_small_graphs() {
        let c6 = cycle(6);
        let cs = induced_cycles(&c6, c6.vertex_mask(), 6);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 6);
        assert!(induced_cycles(&c6, c6.vertex_mask(), 5).is_empty());

        let k4 = complete(4);
        let cs = induced_cycles(&k4, k4.vertex_mask(), 10);
        // four triangles, no induced C4
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.len() == 3));

        // K_{3,3}: nine induced 4-cycles
        let k33 = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        let cs = induced_cycles(&k33, k33.vertex_mask(), 6);
        assert_eq!(cs.len(), 9);
        assert!(cs.iter().all(|c| c.len() == 4));
        assert!(induced_cycles(&path(5), 0b11111, 5).is_empty());
    }

    #[test]
    fn paths_are_induced_and_unique() {
        let g = cycle(5);
        let ps = induced_paths(&g, 5);
        for p in &ps {
            assert!(is_induced_path(&g, p), "{p:?}");
            assert!(p[0] < *p.last().unwrap());
        }
        // 5 edges, 5 paths of 3 vertices, 5 of 4 vertices; no 5-vertex induced path
        assert_eq!(ps.len(), 15);

        let p4 = path(4);
        let ps = induced_paths_between(&p4, 0b1001, 0b0110, 3, 4);
        assert_eq!(ps, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn path_count_matches_brute_force() {
        // ladder P2 x P3 plus a chord to make it irregular
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (0, 4)]).unwrap();
        let fast = induced_paths(&g, 6).len();
        let mut brute = 0;
        // enumerate all sequences of distinct vertices
        fn rec(g: &Graph, seq: &mut Vec<usize>, count: &mut usize) {
            if seq.len() >= 2 && seq[0] < *seq.last().unwrap() && is_induced_path(g, seq) {
                *count += 1;
            }
            if seq.len() == 6 {
                return;
            }
            for v in 0..g.order() {
                if !seq.contains(&v) {
                    seq.push(v);
                    if is_induced_path(g, seq) {
                        rec(g, seq, count);
                    }
                    seq.pop();
                }
            }
        }
        for s in 0..6 {
            rec(&g, &mut vec![s], &mut brute);
        }
        assert_eq!(fast, brute);
    }
}
