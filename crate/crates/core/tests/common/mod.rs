//! Brute-force oracles shared by the integration tests. Written against raw
//! edge lists so that they share no search code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn is_hom(edges: &[(usize, usize)], target: &[Vec<bool>], map: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| target[map[u]][map[v]])
}

pub fn is_proper(edges: &[(usize, usize)], colors: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| colors[u] != colors[v])
}

fn colorable(adj: &[Vec<bool>], order: &[usize], k: usize, colors: &mut [usize], at: usize, used: usize) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    for c in 0..k.min(used + 1) {
        if order[..at].iter().all(|&u| !adj[v][u] || colors[u] != c) {
            colors[v] = c;
            if colorable(adj, order, k, colors, at + 1, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

/// Whether the graph has a proper `k`-coloring, by plain backtracking.
pub fn k_colorable(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    let adj = adjacency(n, edges);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].iter().filter(|&&b| b).count()));
    colorable(&adj, &order, k, &mut vec![0; n], 0, 0)
}

pub fn chromatic(n: usize, edges: &[(usize, usize)]) -> usize {
    (0..=n).find(|&k| k_colorable(n, edges, k)).unwrap()
}

/// Reduced words over `1..=delta` of length at most `depth`, by length and
/// then lexicographically.
pub fn reduced_words(delta: usize, depth: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 1..=delta as u8 {
                if w.last() != Some(&a) {
                    let mut x = w.clone();
                    x.push(a);
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every map `words → target` with `h(root) = x` such that
/// `edge_ok(h(w), h(wa), a)` holds for each tree edge `w -- wa`.
pub fn tree_homs(
    words: &[Vec<u8>],
    target_n: usize,
    edge_ok: &dyn Fn(usize, usize, usize) -> bool,
    x: usize,
) -> Vec<Vec<usize>> {
    let index: HashMap<&[u8], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let parent: Vec<(usize, usize)> = words
        .iter()
        .map(|w| match w.split_last() {
            Some((&a, rest)) => (index[rest], a as usize),
            None => (0, 0),
        })
        .collect();
    let mut out = vec![vec![x]];
    for &(p, a) in &parent[1..] {
        out = out
            .into_iter()
            .flat_map(|h| {
                (0..target_n)
                    .filter(|&y| edge_ok(h[p], y, a))
                    .map(|y| {
                        let mut g = h.clone();
                        g.push(y);
                        g
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// Turn `t` of `𝔾(x, i)`: word indices at length `t/2 + 1`, starting with `i`
/// on even turns (Alice) and not starting with `i` on odd turns (Bob).
pub fn game_turns(words: &[Vec<u8>], depth: usize, i: usize) -> Vec<Vec<usize>> {
    let mut turns = Vec::new();
    for k in 1..=depth {
        for alice in [true, false] {
            turns.push(
                (0..words.len())
                    .filter(|&v| words[v].len() == k && (words[v][0] as usize == i) == alice)
                    .collect(),
            );
        }
    }
    turns
}

/// Whether Alice wins, by splitting the set of complete plays according to
/// the images chosen at each turn.
pub fn alice_wins(homs: &[&Vec<usize>], turns: &[Vec<usize>], t: usize, alice_final: &dyn Fn(&[usize]) -> bool) -> bool {
    if t == turns.len() {
        assert_eq!(homs.len(), 1);
        return alice_final(homs[0]);
    }
    let mut groups: BTreeMap<Vec<usize>, Vec<&Vec<usize>>> = BTreeMap::new();
    for &h in homs {
        groups
            .entry(turns[t].iter().map(|&v| h[v]).collect())
            .or_default()
            .push(h);
    }
    let mut values = groups.values().map(|g| alice_wins(g, turns, t + 1, alice_final));
    if t.is_multiple_of(2) {
        values.any(|b| b)
    } else {
        values.all(|b| b)
    }
}

/// Length of a shortest cycle in a multigraph, parallel edges included.
pub fn multigraph_girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, id) in &adj[u] {
                if id == via[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = id;
                    queue.push_back(w);
                } else {
                    let c = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

/// Components of an undirected graph given by edge list.
pub fn components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while c[r] != r {
            r = c[r];
        }
        let mut v = v;
        while c[v] != r {
            let next = c[v];
            c[v] = r;
            v = next;
        }
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut comp, u), find(&mut comp, v));
        comp[a] = b;
    }
    (0..n).map(|v| find(&mut comp, v)).collect()
}
