//! Slow reference implementations used as test oracles.
//!
//! Everything here works through single-edge color queries and explicit
//! loops, deliberately sharing no code with the packed-row fast paths it
//! checks. Runtime is O(n^4)-ish; keep inputs small.

use crate::graph::{BookMeasurement, Color, ColoredCompleteGraph};

/// Common neighbors of u and v in the color, by scanning every vertex.
pub fn codegree(g: &ColoredCompleteGraph, u: usize, v: usize, color: Color) -> usize {
    let n = g.n_vertices();
    (0..n)
        .filter(|&w| w != u && w != v)
        .filter(|&w| g.color_of(w, u) == color && g.color_of(w, v) == color)
        .count()
}

/// Largest edge-based book by direct enumeration, first base wins ties.
pub fn book_size(g: &ColoredCompleteGraph, color: Color) -> BookMeasurement {
    book_size_k(g, color, 2)
}

/// Largest book on a base clique of `order` vertices by enumerating all
/// vertex tuples in lexicographic order; first base wins ties.
pub fn book_size_k(g: &ColoredCompleteGraph, color: Color, order: usize) -> BookMeasurement {
    assert!((2..=4).contains(&order), "oracle supports orders 2..=4");
    let n = g.n_vertices();
    let mut best: Option<(Vec<usize>, usize)> = None;
    let mut tuple = vec![0usize; order];
    enumerate_cliques(g, color, order, 0, &mut tuple, 0, &mut |base| {
        let pages = (0..n)
            .filter(|w| !base.contains(w))
            .filter(|&w| base.iter().all(|&b| g.color_of(b, w) == color))
            .count();
        match &best {
            Some((_, p)) if *p >= pages => {}
            _ => best = Some((base.to_vec(), pages)),
        }
    });
    match best {
        Some((base, pages)) => BookMeasurement { color, order, base: Some(base), pages },
        None => BookMeasurement { color, order, base: None, pages: 0 },
    }
}

fn enumerate_cliques(
    g: &ColoredCompleteGraph,
    color: Color,
    order: usize,
    depth: usize,
    tuple: &mut Vec<usize>,
    start: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == order {
        visit(tuple);
        return;
    }
    for v in start..g.n_vertices() {
        if tuple[..depth].iter().any(|&b| g.color_of(b, v) != color) {
            continue;
        }
        tuple[depth] = v;
        enumerate_cliques(g, color, order, depth + 1, tuple, v + 1, visit);
    }
}

/// Full n x n codegree matrix for one color, by triple loop.
pub fn codegree_matrix(g: &ColoredCompleteGraph, color: Color) -> Vec<Vec<usize>> {
    let n = g.n_vertices();
    let mut m = vec![vec![0usize; n]; n];
    for u in 0..n {
        for v in (u + 1)..n {
            let c = codegree(g, u, v, color);
            m[u][v] = c;
            m[v][u] = c;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_handles_books_on_tiny_graphs() {
        let g = ColoredCompleteGraph::from_red_relation(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = book_size(&g, Color::Red);
        assert_eq!(m.pages, 1);
        assert_eq!(m.base, Some(vec![0, 1]));
        assert_eq!(codegree(&g, 0, 1, Color::Red), 1);
        let b = book_size(&g, Color::Blue);
        assert_eq!(b.base, None);
        assert_eq!(b.pages, 0);
    }
}
