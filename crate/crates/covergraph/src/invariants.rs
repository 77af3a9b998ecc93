use std::collections::VecDeque;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Length of a shortest cycle; `Infinite` exactly when the graph is a forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => std::cmp::Ordering::Less,
            (Girth::Infinite, Girth::Finite(_)) => std::cmp::Ordering::Greater,
            (Girth::Infinite, Girth::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Word(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(g) => Ok(Girth::Finite(g as usize)),
            Repr::Word(w) if w == "infinity" => Ok(Girth::Infinite),
            Repr::Word(w) => Err(de::Error::custom(format!("bad girth value {w:?}"))),
        }
    }
}

/// Exact girth via breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    match shortest_cycle(g) {
        Some(cycle) => Girth::Finite(cycle.len()),
        None => Girth::Infinite,
    }
}

/// A shortest cycle as a vertex index sequence (closed implicitly), or None
/// for forests.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    best_cycle(g, false)
}

/// A shortest odd cycle, or None when the graph is bipartite.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    best_cycle(g, true)
}

/// Scans BFS trees from every root; a non-tree edge (x, y) at distances
/// d(x), d(y) closes a walk of length d(x)+d(y)+1 that contains a cycle of
/// at most that length, and for a root on a shortest (odd) cycle the bound
/// is attained, so the minimum over roots is exact. Restricting to
/// equal-distance endpoints keeps exactly the odd-length walks.
fn best_cycle(g: &Graph, odd_only: bool) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize)> = None; // (walk length, root)
    for root in g.vertices() {
        if let Some(len) = bfs_scan(g, root, odd_only, best.map(|(l, _)| l)) {
            best = Some((len, root));
        }
    }
    let (_, root) = best?;
    let cycle = extract_cycle(g, root, odd_only);
    Some(cycle)
}

/// Returns the best closing-walk length from `root` if it improves `beat`.
fn bfs_scan(g: &Graph, root: usize, odd_only: bool, beat: Option<usize>) -> Option<usize> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    let mut best: Option<usize> = None;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            } else if y != parent[x] && x != parent[y] {
                if odd_only && dist[x] != dist[y] {
                    continue;
                }
                let len = dist[x] + dist[y] + 1;
                if best.map_or(true, |b| len < b) {
                    best = Some(len);
                }
            }
        }
    }
    match (best, beat) {
        (Some(len), Some(b)) if len >= b => None,
        (found, _) => found,
    }
}

/// Rebuilds the BFS tree at `root`, picks the best non-tree edge, and strips
/// the closed walk at the deepest common ancestor, yielding a simple cycle.
fn extract_cycle(g: &Graph, root: usize, odd_only: bool) -> Vec<usize> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    let mut best: Option<(usize, usize, usize)> = None; // (len, x, y)
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            } else if y != parent[x] && x != parent[y] {
                if odd_only && dist[x] != dist[y] {
                    continue;
                }
                let len = dist[x] + dist[y] + 1;
                if best.map_or(true, |(b, _, _)| len < b) {
                    best = Some((len, x, y));
                }
            }
        }
    }
    let (_, x, y) = best.expect("root was chosen because a closing edge exists");

    let chain = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path.reverse(); // root .. v
        path
    };
    let px = chain(x);
    let py = chain(y);
    let mut lca = 0;
    while lca + 1 < px.len() && lca + 1 < py.len() && px[lca + 1] == py[lca + 1] {
        lca += 1;
    }
    // lca..x forward, then y..lca+1 backward; the closing edge y-x and the
    // final edge back to px[lca] are graph edges by construction.
    let mut cycle: Vec<usize> = px[lca..].to_vec();
    cycle.extend(py[lca + 1..].iter().rev());
    debug_assert!(cycle.len() >= 3);
    cycle
}

/// Witness returned by [`is_bipartite`]: either a proper 2-coloring or a
/// shortest odd cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteWitness {
    TwoColoring(Vec<u8>),
    OddCycle(Vec<usize>),
}

pub fn is_bipartite(g: &Graph) -> BipartiteWitness {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    let cycle = shortest_odd_cycle(g)
                        .expect("2-coloring conflict implies an odd cycle");
                    return BipartiteWitness::OddCycle(cycle);
                }
            }
        }
    }
    BipartiteWitness::TwoColoring(color)
}

/// A proper coloring together with the number of colors it uses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub num_colors: usize,
    pub assignment: Vec<u32>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.order()
            && g.edges()
                .iter()
                .all(|&(a, b)| self.assignment[a] != self.assignment[b])
            && self
                .assignment
                .iter()
                .all(|&c| (c as usize) < self.num_colors.max(1))
    }
}

/// Exact chromatic number by branch and bound: greedy clique for the lower
/// bound, DSATUR greedy for the upper bound, then k-colorability searches
/// closing the gap. Returns an optimal proper coloring as witness.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<Coloring> {
    let n = g.order();
    if n > limits.vertex_bound {
        return Err(Error::capacity("chromatic_number", n, limits.vertex_bound));
    }
    if n == 0 {
        return Ok(Coloring {
            num_colors: 0,
            assignment: Vec::new(),
        });
    }
    let lower = greedy_clique(g).len();
    let greedy = dsatur_greedy(g);
    let mut best = greedy.clone();
    for k in lower..best.num_colors {
        match k_colorable(g, k) {
            Some(assignment) => {
                best = Coloring {
                    num_colors: k,
                    assignment,
                };
                break;
            }
            None => continue,
        }
    }
    debug_assert!(best.is_proper(g));
    Ok(best)
}

/// Greedily grown clique, maximized over all start vertices.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best: Vec<usize> = Vec::new();
    for &start in &order {
        let mut clique = vec![start];
        for &cand in &order {
            if cand != start && clique.iter().all(|&c| g.has_edge(c, cand)) {
                clique.push(cand);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.order();
    let mut assignment = vec![u32::MAX; n];
    let mut neighbor_colors: Vec<u64> = vec![0; n];
    for _ in 0..n {
        // Most saturated first, ties by degree then index.
        let v = g
            .vertices()
            .filter(|&v| assignment[v] == u32::MAX)
            .max_by_key(|&v| (neighbor_colors[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let color = (0..64).find(|c| neighbor_colors[v] & (1 << c) == 0).unwrap();
        assignment[v] = color as u32;
        for &w in g.neighbors(v) {
            neighbor_colors[w] |= 1 << color;
        }
    }
    let num_colors = assignment.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    Coloring {
        num_colors,
        assignment,
    }
}

/// Backtracking k-colorability with DSATUR vertex selection and color
/// symmetry breaking (a vertex may open at most one fresh color).
fn k_colorable(g: &Graph, k: usize) -> Option<Vec<u32>> {
    if k == 0 {
        return if g.order() == 0 { Some(Vec::new()) } else { None };
    }
    let n = g.order();
    let mut assignment = vec![u32::MAX; n];
    let mut neighbor_colors: Vec<u64> = vec![0; n];
    fn go(
        g: &Graph,
        k: usize,
        colored: usize,
        max_used: u32,
        assignment: &mut Vec<u32>,
        neighbor_colors: &mut Vec<u64>,
    ) -> bool {
        let n = g.order();
        if colored == n {
            return true;
        }
        let v = g
            .vertices()
            .filter(|&v| assignment[v] == u32::MAX)
            .max_by_key(|&v| (neighbor_colors[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let limit = (max_used + 1).min(k as u32 - 1);
        for color in 0..=limit {
            if neighbor_colors[v] & (1 << color) != 0 {
                continue;
            }
            assignment[v] = color;
            let mut touched = Vec::new();
            for &w in g.neighbors(v) {
                if neighbor_colors[w] & (1 << color) == 0 {
                    neighbor_colors[w] |= 1 << color;
                    touched.push(w);
                }
            }
            if go(g, k, colored + 1, max_used.max(color), assignment, neighbor_colors) {
                return true;
            }
            assignment[v] = u32::MAX;
            for w in touched {
                neighbor_colors[w] &= !(1 << color);
            }
        }
        false
    }
    if go(g, k, 0, 0, &mut assignment, &mut neighbor_colors) {
        // max_used starts at 0 so color 0 is always permitted for the first
        // vertex; the guard above keeps every color below k.
        Some(assignment)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{brute_force_chromatic, enumerate_cycles_brute, is_forest};

    #[test]
    fn girth_small_cases() {
        assert_eq!(girth(&Graph::complete(3).unwrap()), Girth::Finite(3));
        assert_eq!(girth(&Graph::cycle(5).unwrap()), Girth::Finite(5));
        assert_eq!(girth(&Graph::cycle(4).unwrap()), Girth::Finite(4));
        assert_eq!(girth(&Graph::path(4).unwrap()), Girth::Infinite);
        assert_eq!(girth(&Graph::star(5).unwrap()), Girth::Infinite);
        assert_eq!(girth(&Graph::edgeless(3).unwrap()), Girth::Infinite);
    }

    #[test]
    fn girth_matches_brute_force_on_all_5_vertex_graphs() {
        for mask in 0u32..(1 << 10) {
            let g = crate::testutil::graph_from_mask(5, mask as u64);
            let cycles = enumerate_cycles_brute(&g);
            let expect = cycles.iter().map(|c| c.len()).min();
            let got = girth(&g);
            match expect {
                Some(len) => assert_eq!(got, Girth::Finite(len)),
                None => {
                    assert_eq!(got, Girth::Infinite);
                    assert!(is_forest(&g));
                }
            }
        }
    }

    #[test]
    fn shortest_cycle_is_a_valid_cycle() {
        let g = Graph::complete(4).unwrap();
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c.len(), 3);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn bipartite_witnesses() {
        match is_bipartite(&Graph::cycle(4).unwrap()) {
            BipartiteWitness::TwoColoring(c) => {
                assert_eq!(c, vec![0, 1, 0, 1]);
            }
            _ => panic!("C_4 is bipartite"),
        }
        match is_bipartite(&Graph::cycle(5).unwrap()) {
            BipartiteWitness::OddCycle(c) => assert_eq!(c.len(), 5),
            _ => panic!("C_5 is odd"),
        }
        match is_bipartite(&Graph::complete(4).unwrap()) {
            BipartiteWitness::OddCycle(c) => {
                assert_eq!(c.len(), 3);
                let g = Graph::complete(4).unwrap();
                for i in 0..3 {
                    assert!(g.has_edge(c[i], c[(i + 1) % 3]));
                }
            }
            _ => panic!("K_4 has triangles"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_shortest_on_all_5_vertex_graphs() {
        for mask in 0u32..(1 << 10) {
            let g = crate::testutil::graph_from_mask(5, mask as u64);
            let cycles = enumerate_cycles_brute(&g);
            let expect = cycles
                .iter()
                .filter(|c| c.len() % 2 == 1)
                .map(|c| c.len())
                .min();
            match (expect, is_bipartite(&g)) {
                (Some(len), BipartiteWitness::OddCycle(c)) => {
                    assert_eq!(c.len(), len);
                    assert_eq!(c.len() % 2, 1);
                    for i in 0..c.len() {
                        assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                    }
                    let mut seen = c.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    assert_eq!(seen.len(), c.len(), "cycle repeats a vertex");
                }
                (None, BipartiteWitness::TwoColoring(col)) => {
                    for &(a, b) in g.edges() {
                        assert_ne!(col[a], col[b]);
                    }
                }
                (e, w) => panic!("mismatch: expected {e:?}, witness {w:?}"),
            }
        }
    }

    #[test]
    fn chromatic_small_cases() {
        let limits = Limits::default();
        assert_eq!(
            chromatic_number(&Graph::complete(3).unwrap(), &limits)
                .unwrap()
                .num_colors,
            3
        );
        assert_eq!(
            chromatic_number(&Graph::cycle(5).unwrap(), &limits)
                .unwrap()
                .num_colors,
            3
        );
        assert_eq!(
            chromatic_number(&Graph::cycle(4).unwrap(), &limits)
                .unwrap()
                .num_colors,
            2
        );
        assert_eq!(
            chromatic_number(&Graph::edgeless(4).unwrap(), &limits)
                .unwrap()
                .num_colors,
            1
        );
    }

    #[test]
    fn chromatic_matches_brute_force_on_random_graphs() {
        let limits = Limits::default();
        let mut lcg = 0x2545F4914F6CDD1Du64;
        for n in 1..=7usize {
            for _ in 0..40 {
                lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let g = crate::testutil::graph_from_mask(n, lcg >> 11);
                let got = chromatic_number(&g, &limits).unwrap();
                assert!(got.is_proper(&g));
                assert_eq!(got.num_colors, brute_force_chromatic(&g), "n={n}");
            }
        }
    }

    #[test]
    fn chromatic_respects_vertex_bound() {
        let limits = Limits::default().with_vertex_bound(3);
        let err = chromatic_number(&Graph::complete(5).unwrap(), &limits).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }

    #[test]
    fn girth_serde_forms() {
        assert_eq!(serde_json::to_string(&Girth::Finite(4)).unwrap(), "4");
        assert_eq!(
            serde_json::to_string(&Girth::Infinite).unwrap(),
            "\"infinity\""
        );
        assert_eq!(
            serde_json::from_str::<Girth>("\"infinity\"").unwrap(),
            Girth::Infinite
        );
        assert_eq!(serde_json::from_str::<Girth>("7").unwrap(), Girth::Finite(7));
    }
}
