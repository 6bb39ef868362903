use super::{above, bit, components_within, Bits, Graph};

/// True iff no vertex has three pairwise non-adjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    let adj = g.adjacency();
    for center in 0..g.order() {
        let nb = adj[center];
        if nb.count_ones() < 3 {
            continue;
        }
        for a in Bits(nb) {
            // b, c > a and both non-adjacent to a
            let rest = nb & !adj[a] & above(a);
            for b in Bits(rest) {
                let third = rest & !adj[b] & above(b);
                if third != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Cograph test by direct recursion on the inductive definition: a single
/// vertex, a disjoint union of cographs, or a join of cographs.
pub fn is_cograph(g: &Graph) -> bool {
    cograph_within(g.adjacency(), g.vertex_mask())
}

fn cograph_within(adj: &[u64], within: u64) -> bool {
    if within.count_ones() <= 1 {
        return true;
    }
    let parts = components_within(adj, within);
    if parts.len() > 1 {
        return parts.into_iter().all(|p| cograph_within(adj, p));
    }
    // G[within] is connected, so it must be a join: split along the
    // components of its complement.
    let co: Vec<u64> = Bits(within).map(|v| !adj[v] & within & !bit(v)).collect();
    let mut co_adj = [0u64; 64];
    for (i, v) in Bits(within).enumerate() {
        co_adj[v] = co[i];
    }
    let co_parts = components_within(&co_adj, within);
    if co_parts.len() > 1 {
        co_parts.into_iter().all(|p| cograph_within(adj, p))
    } else {
        false
    }
}

/// Brute-force search for an induced path on four vertices.
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.order();
    let adj = g.adjacency();
    // induced P4 a-b-c-d: ab, bc, cd edges; ac, bd, ad non-edges
    for b in 0..n {
        for c in Bits(adj[b]) {
            for a in Bits(adj[b] & !adj[c] & !bit(c)) {
                if adj[c] & !adj[b] & !adj[a] & !bit(b) & !bit(a) != 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// Every vertex has degree three.
pub fn is_cubic(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) == 3)
}

/// Connected with `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.order() && g.is_connected()
}
