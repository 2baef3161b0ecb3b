//! Brute-force oracles shared by the integration tests. None of these go
//! through the solver code paths they are used to check.

#![allow(dead_code)]

use critfam::Graph;
use rand::Rng;

/// Plain adjacency matrix copied out of a graph, so the oracles below do
/// not depend on anything beyond `has_edge`.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Whether some assignment in `0..k`^n is proper, by odometer enumeration.
pub fn brute_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut a = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| a[u] != a[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_chi(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| brute_colorable(g, k)).unwrap()
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if f(&p) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if f(&p) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

pub fn brute_isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    for_each_permutation(n, |p| {
        (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]]))
    })
}

/// All `t`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < t - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, t, &mut Vec::new(), &mut out);
    out
}

/// Whether some `|h|`-subset of `g` induces a graph isomorphic to `h`.
pub fn brute_contains_induced(g: &Graph, h: &Graph) -> bool {
    let gm = matrix(g);
    let hm = matrix(h);
    let t = h.n();
    if t > g.n() {
        return false;
    }
    subsets(g.n(), t).into_iter().any(|s| {
        let sub: Vec<Vec<bool>> = s
            .iter()
            .map(|&u| s.iter().map(|&v| gm[u][v]).collect())
            .collect();
        brute_isomorphic(&sub, &hm)
    })
}

/// Whether `phi` maps `h` onto an induced copy inside `g`.
pub fn is_induced_embedding(g: &Graph, h: &Graph, phi: &[usize]) -> bool {
    let t = h.n();
    if phi.len() != t {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    phi.iter().all(|&x| x < g.n() && seen.insert(x))
        && (0..t).all(|u| (0..t).all(|v| u == v || h.has_edge(u, v) == g.has_edge(phi[u], phi[v])))
}

/// Proper colouring check written out longhand.
pub fn properly_colored(g: &Graph, colors: &[usize], palette: usize) -> bool {
    colors.len() == g.n()
        && colors.iter().all(|&c| c < palette)
        && (0..g.n()).all(|u| (0..g.n()).all(|v| !g.has_edge(u, v) || colors[u] != colors[v]))
}

/// G(n, p) with `p` itself drawn uniformly, so densities vary.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p: f64 = rng.gen();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}
