//! Brute-force reference implementations. They share nothing with the
//! library's solvers beyond reading adjacency through `Graph::has_edge`.

#![allow(dead_code)]

use abperfect::graph::{Graph, Named};

pub fn named(s: &str) -> Graph {
    s.parse::<Named>().unwrap().build().unwrap()
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every set partition of `0..n` as a color vector with colors `0..k`,
/// numbered in order of first appearance.
pub fn set_partitions(n: usize) -> Vec<(Vec<usize>, usize)> {
    fn go(colors: &mut Vec<usize>, k: usize, n: usize, out: &mut Vec<(Vec<usize>, usize)>) {
        if colors.len() == n {
            out.push((colors.clone(), k));
            return;
        }
        for c in 0..=k {
            colors.push(c);
            go(colors, k.max(c + 1), n, out);
            colors.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| !g.has_edge(u, v) || colors[u] != colors[v]))
}

/// Every pair of distinct colors appears on the ends of some edge.
pub fn is_complete(g: &Graph, colors: &[usize], k: usize) -> bool {
    let n = g.order();
    let mut seen = vec![vec![false; k]; k];
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                seen[colors[u]][colors[v]] = true;
            }
        }
    }
    (0..k).all(|a| (0..k).all(|b| a == b || seen[a][b]))
}

/// `(omega, chi, alpha, psi)` by exhaustive search over subsets and partitions.
pub fn partition_invariants(g: &Graph) -> (usize, usize, usize, usize) {
    let n = g.order();
    let mut omega = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs
            .iter()
            .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
        {
            omega = omega.max(vs.len());
        }
    }
    let (mut chi, mut alpha, mut psi) = (usize::MAX, 0, 0);
    for (colors, k) in set_partitions(n) {
        let proper = is_proper(g, &colors);
        let complete = is_complete(g, &colors, k);
        if proper {
            chi = chi.min(k);
        }
        if complete {
            psi = psi.max(k);
            if proper {
                alpha = alpha.max(k);
            }
        }
    }
    (omega, chi, alpha, psi)
}

/// Colors used by first-fit greedy along `order`.
pub fn first_fit(g: &Graph, order: &[usize]) -> usize {
    let mut color = vec![usize::MAX; g.order()];
    let mut used = 0;
    for &v in order {
        let c = (0..)
            .find(|&c| (0..g.order()).all(|u| !(g.has_edge(u, v) && color[u] == c)))
            .unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Γ as the worst first-fit count over all vertex orderings.
pub fn grundy_by_orderings(g: &Graph, perms: &[Vec<usize>]) -> usize {
    perms.iter().map(|p| first_fit(g, p)).max().unwrap()
}

/// Adjacency bits of `g` relabelled by `perm`, upper triangle row-major.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

/// Smallest adjacency code over all relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| code_under(g, p)).min().unwrap()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.order();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v]))))
}

/// Lexicographically smallest sorted vertex list inducing a copy of `pattern`,
/// scanning subsets in lexicographic order and trying every bijection.
pub fn brute_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let (n, k) = (g.order(), pattern.order());
    if k > n {
        return None;
    }
    let perms = permutations(k);
    let mut subsets: Vec<Vec<usize>> = (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    subsets.sort();
    subsets.into_iter().find(|s| {
        perms.iter().any(|p| {
            (0..k).all(|i| (0..k).all(|j| pattern.has_edge(i, j) == g.has_edge(s[p[i]], s[p[j]])))
        })
    })
}
