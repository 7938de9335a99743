//! Labelled hyperforests, their poset and its Möbius function.
//!
//! Vertices are `0..n` in the API; text forms (`Display`, [`Hyperforest::parse`])
//! use the labels `1..=n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::triangle::{factorial_big, StirlingTables};

/// Largest `n` for which hyperforests are enumerated.
pub const MAX_ENUMERATION: usize = 7;
/// Largest `n` for the recursive Möbius function and the hyperforest sum.
pub const MAX_RECURSIVE: usize = 6;

/// A hyperforest on `n <= 32` vertices; hyperedges are vertex bitmasks in
/// canonical order (lexicographic on sorted vertex lists).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperforest {
    n: usize,
    edges: Vec<u32>,
}

fn vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

fn canonical(mut edges: Vec<u32>) -> Vec<u32> {
    edges.sort_by_key(|&m| vertices(m));
    edges
}

/// Components of the hypergraph as vertex masks, isolated vertices included.
fn component_masks(n: usize, edges: &[u32]) -> Vec<u32> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &e in edges {
        let vs = vertices(e);
        for w in &vs[1..] {
            let (a, b) = (find(&mut parent, vs[0]), find(&mut parent, *w));
            parent[a] = b;
        }
    }
    let mut by_root: HashMap<usize, u32> = HashMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        *by_root.entry(r).or_default() |= 1 << v;
    }
    let mut comps: Vec<u32> = by_root.into_values().collect();
    comps.sort_unstable_by_key(|m| m.trailing_zeros());
    comps
}

fn masks_from_lists(n: usize, edges: &[Vec<usize>]) -> Result<Vec<u32>> {
    if n > 32 {
        return Err(Error::SizeGuard { what: "vertex count", value: n, limit: 32 });
    }
    edges
        .iter()
        .map(|e| {
            let mut mask = 0u32;
            for &v in e {
                if v >= n || mask >> v & 1 == 1 {
                    return Err(Error::InvalidHyperedge(e.clone()));
                }
                mask |= 1 << v;
            }
            if mask.count_ones() < 2 {
                return Err(Error::InvalidHyperedge(e.clone()));
            }
            Ok(mask)
        })
        .collect()
}

fn masks_form_hyperforest(n: usize, edges: &[u32]) -> bool {
    for (a, &e) in edges.iter().enumerate() {
        if e.count_ones() < 2 || (n < 32 && e >> n != 0) {
            return false;
        }
        if edges[a + 1..].iter().any(|&f| (e & f).count_ones() > 1 || e == f) {
            return false;
        }
    }
    component_masks(n, edges).iter().all(|&c| {
        let weight: u32 = edges.iter().filter(|&&e| e & c != 0).map(|e| e.count_ones() - 1).sum();
        weight + 1 == c.count_ones()
    })
}

/// True iff the hyperedges (0-based vertex lists) form a hyperforest on `n` vertices.
pub fn is_hyperforest(n: usize, edges: &[Vec<usize>]) -> bool {
    masks_from_lists(n, edges).is_ok_and(|m| masks_form_hyperforest(n, &m))
}

impl Hyperforest {
    /// The hyperforest with no hyperedges.
    pub fn trivial(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let masks = masks_from_lists(n, edges)?;
        Self::from_masks(n, masks)
    }

    pub fn from_masks(n: usize, edges: Vec<u32>) -> Result<Self> {
        if n > 32 {
            return Err(Error::SizeGuard { what: "vertex count", value: n, limit: 32 });
        }
        if !masks_form_hyperforest(n, &edges) {
            return Err(Error::NotAHyperforest);
        }
        Ok(Self { n, edges: canonical(edges) })
    }

    /// Parses `"1,2,3;3,4"` (1-based labels). `n` defaults to the largest label.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let lists = crate::group::parse_set_list(text)?;
        let err = || Error::Parse { what: "hyperedge list", input: text.to_string() };
        let zero_based = lists
            .iter()
            .map(|e| e.iter().map(|&v| v.checked_sub(1).ok_or_else(err)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let largest = lists.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(largest);
        if largest > n {
            return Err(err());
        }
        Self::new(n, &zero_based)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| vertices(e)).collect()
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&e| e >> v & 1 == 1).count()
    }

    /// `κ_j`, the number of hyperedges with `j` vertices.
    pub fn kappa(&self, j: usize) -> usize {
        self.edges.iter().filter(|e| e.count_ones() as usize == j).count()
    }

    /// Components as vertex masks, isolated vertices included.
    pub fn components(&self) -> Vec<u32> {
        component_masks(self.n, &self.edges)
    }

    /// `c(F)`, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        // each hyperedge merges |e| - 1 components
        self.n - self.edges.iter().map(|e| e.count_ones() as usize - 1).sum::<usize>()
    }

    /// Connected and spanning.
    pub fn is_hypertree(&self) -> bool {
        self.component_count() == 1
    }

    /// Adjacency masks of the primal graph.
    pub fn primal_adjacency(&self) -> Vec<u32> {
        (0..self.n)
            .map(|v| {
                self.edges.iter().filter(|&&e| e >> v & 1 == 1).fold(0, |acc, &e| acc | e) & !(1 << v)
            })
            .collect()
    }

    pub fn primal_edge_count(&self) -> usize {
        self.edges.iter().map(|e| (e.count_ones() * (e.count_ones() - 1) / 2) as usize).sum()
    }

    /// The same hyperforest with `extra` further isolated vertices.
    pub fn widen(&self, extra: usize) -> Result<Self> {
        Self::from_masks(self.n + extra, self.edges.clone())
    }
}

impl fmt::Display for Hyperforest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self
            .edge_lists()
            .iter()
            .map(|e| {
                let labels: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Serialize)]
pub struct HyperforestView {
    pub n: usize,
    /// 1-based labels.
    pub hyperedges: Vec<Vec<usize>>,
}

impl Hyperforest {
    pub fn to_view(&self) -> HyperforestView {
        HyperforestView {
            n: self.n,
            hyperedges: self.edge_lists().into_iter().map(|e| e.into_iter().map(|v| v + 1).collect()).collect(),
        }
    }
}

/// The hyperforest whose primal graph is the given graph, if there is one:
/// the maximal cliques must form a hyperforest.
pub fn from_primal_graph(adjacency: &[u32]) -> Option<Hyperforest> {
    let n = adjacency.len();
    let mut cliques = Vec::new();
    fn bron_kerbosch(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        while p != 0 {
            let v = p.trailing_zeros() as usize;
            bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    bron_kerbosch(adjacency, 0, all, 0, &mut cliques);
    cliques.retain(|c| c.count_ones() >= 2);
    let forest = Hyperforest::from_masks(n, cliques).ok()?;
    (forest.primal_adjacency() == adjacency).then_some(forest)
}

/// All hyperforests on `n` vertices, duplicate-free, in canonical order.
pub fn enumerate_hyperforests(n: usize) -> Result<Vec<Hyperforest>> {
    enumerate_hyperforests_up_to(n, MAX_ENUMERATION)
}

/// As [`enumerate_hyperforests`] with an explicit size guard.
pub fn enumerate_hyperforests_up_to(n: usize, limit: usize) -> Result<Vec<Hyperforest>> {
    if n > limit.min(32) {
        return Err(Error::SizeGuard { what: "vertex count", value: n, limit: limit.min(32) });
    }
    let mut level = vec![Vec::<u32>::new()];
    for k in 1..n {
        // add vertex k: inside each component independently, leave it, extend
        // one of its hyperedges by k, or join one of its vertices to k
        let bit = 1u32 << k;
        let mut next = Vec::new();
        for edges in &level {
            let comps = component_masks(k, edges);
            let mut partial: Vec<Vec<u32>> = vec![edges.clone()];
            for &c in &comps {
                let mut grown = Vec::new();
                for base in &partial {
                    grown.push(base.clone());
                    for (idx, &e) in base.iter().enumerate() {
                        if e & c != 0 && e & bit == 0 && edges.contains(&e) {
                            let mut b = base.clone();
                            b[idx] = e | bit;
                            grown.push(b);
                        }
                    }
                    for v in vertices(c) {
                        let mut b = base.clone();
                        b.push(1 << v | bit);
                        grown.push(b);
                    }
                }
                partial = grown;
            }
            next.extend(partial);
        }
        level = next;
    }
    let mut out: Vec<Hyperforest> =
        level.into_iter().map(|edges| Hyperforest { n, edges: canonical(edges) }).collect();
    out.sort();
    Ok(out)
}

/// Hypertrees on `n` vertices with exactly `k` hyperedges.
pub fn enumerate_hypertrees(n: usize, k: usize) -> Result<Vec<Hyperforest>> {
    Ok(enumerate_hyperforests(n)?
        .into_iter()
        .filter(|f| f.edges.len() == k && f.is_hypertree())
        .collect())
}

/// `F' <= F`: every hyperedge of `F'` lies inside a hyperedge of `F`.
pub fn poset_leq(lower: &Hyperforest, upper: &Hyperforest) -> bool {
    lower.n == upper.n && lower.edges.iter().all(|&e| upper.edges.iter().any(|&f| e & f == e))
}

/// `prod_j (-(j-2)!)^{κ_j}`.
pub fn moebius_closed_form(f: &Hyperforest) -> BigInt {
    f.edges
        .iter()
        .fold(BigInt::one(), |acc, e| -acc * factorial_big(e.count_ones() as usize - 2))
}

/// `μ(F) = -sum_{G < F} μ(G)` over the down-set of `F` in `HF(n)`, `n <= 6`.
pub fn moebius_recursive(f: &Hyperforest) -> Result<BigInt> {
    if f.n > MAX_RECURSIVE {
        return Err(Error::SizeGuard { what: "vertex count", value: f.n, limit: MAX_RECURSIVE });
    }
    let mut down: Vec<Hyperforest> =
        enumerate_hyperforests(f.n)?.into_iter().filter(|g| poset_leq(g, f)).collect();
    let table = moebius_table(&mut down);
    Ok(table[f].clone())
}

/// μ for every forest of a down-closed set, memoized on canonical form.
fn moebius_table(forests: &mut [Hyperforest]) -> HashMap<Hyperforest, BigInt> {
    // strictly smaller forests have strictly fewer primal edges
    forests.sort_by_key(Hyperforest::primal_edge_count);
    let mut memo: HashMap<Hyperforest, BigInt> = HashMap::with_capacity(forests.len());
    for (k, f) in forests.iter().enumerate() {
        let mu = if f.edges.is_empty() {
            BigInt::one()
        } else {
            -forests[..k]
                .iter()
                .filter(|g| g.primal_edge_count() < f.primal_edge_count() && poset_leq(g, f))
                .map(|g| &memo[g])
                .sum::<BigInt>()
        };
        memo.insert(f.clone(), mu);
    }
    memo
}

/// Recursive μ for every forest in `HF(n)`.
pub fn moebius_all(n: usize) -> Result<Vec<(Hyperforest, BigInt)>> {
    if n > MAX_RECURSIVE {
        return Err(Error::SizeGuard { what: "vertex count", value: n, limit: MAX_RECURSIVE });
    }
    let mut forests = enumerate_hyperforests(n)?;
    let table = moebius_table(&mut forests);
    let mut out: Vec<(Hyperforest, BigInt)> = table.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Coefficients `a_c` with `sum_F μ(F) N^{c(F)} prod_j s_j^{deg_F(j)} = sum_c a_c N^c`.
pub fn hyperforest_polynomial(cardinalities: &[u64]) -> Result<Vec<BigInt>> {
    let n = cardinalities.len();
    if n > MAX_RECURSIVE {
        return Err(Error::SizeGuard { what: "subset count", value: n, limit: MAX_RECURSIVE });
    }
    let forests = enumerate_hyperforests(n)?;
    let terms: Vec<(usize, BigInt)> = forests
        .par_iter()
        .map(|f| {
            let weight = (0..n).fold(moebius_closed_form(f), |acc, v| {
                acc * BigInt::from(cardinalities[v]).pow(f.degree(v) as u32)
            });
            (f.component_count(), weight)
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (c, w) in terms {
        coeffs[c] += w;
    }
    Ok(coeffs)
}

/// `sum_{F in HF(n)} μ(F) N^{c(F)} prod_j s_j^{deg_F(j)}`.
pub fn alpha_via_hyperforest_sum(order: &BigInt, cardinalities: &[u64]) -> Result<BigInt> {
    Ok(hyperforest_polynomial(cardinalities)?
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * order + c))
}

/// `n^{k-1} S_2(n-1, k)`, the number of hypertrees with `k` hyperedges on `n` vertices.
pub fn husimi_count(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return if n == 1 { BigInt::one() } else { BigInt::zero() };
    }
    BigInt::from(n).pow(k as u32 - 1) * StirlingTables::new(n - 1).s2(n - 1, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedHypertreeCheck {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// Compares `sum_{T in HT_k(n)} prod_e (|e|-2)! prod_j s_j^{deg j}` with
/// `(-1)^{n+k+1} σ_n σ_1^{k-1} S_1(n-1, k)`, for `k >= 1`.
pub fn weighted_hypertree_sum(n: usize, k: usize, weights: &[BigInt]) -> Result<WeightedHypertreeCheck> {
    if weights.len() != n || k == 0 {
        return Err(Error::SizeGuard { what: "weight vector length", value: weights.len(), limit: n });
    }
    let lhs: BigInt = enumerate_hypertrees(n, k)?
        .iter()
        .map(|t| {
            let shape = t.edges.iter().fold(BigInt::one(), |acc, e| acc * factorial_big(e.count_ones() as usize - 2));
            (0..n).fold(shape, |acc, v| acc * weights[v].pow(t.degree(v) as u32))
        })
        .sum();
    let sigma1: BigInt = weights.iter().sum();
    let sigman: BigInt = weights.iter().product();
    let sign = if (n + k + 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let rhs = sign * sigman * sigma1.pow(k as u32 - 1) * StirlingTables::new(n - 1).s1(n - 1, k);
    Ok(WeightedHypertreeCheck { holds: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() })
}

/// `F_1 ∧ F_2`: the pairwise intersections with at least two vertices.
pub fn meet(a: &Hyperforest, b: &Hyperforest) -> Result<Hyperforest> {
    let mut edges: Vec<u32> = Vec::new();
    for &e in &a.edges {
        for &f in &b.edges {
            let m = e & f;
            if m.count_ones() >= 2 && !edges.contains(&m) {
                edges.push(m);
            }
        }
    }
    Hyperforest::from_masks(a.n, edges)
}

/// `F_1 ∨ F_2`: the smallest hyperforest above both, obtained by merging
/// hyperedges along Berge cycles until none is left.
pub fn join(a: &Hyperforest, b: &Hyperforest) -> Result<Hyperforest> {
    let n = a.n;
    let mut edges: Vec<u32> = a.edges.iter().chain(&b.edges).copied().collect();
    edges.sort_unstable();
    edges.dedup();
    loop {
        // drop hyperedges contained in others
        let snapshot = edges.clone();
        edges.retain(|&e| !snapshot.iter().any(|&f| f != e && e & f == e));
        match berge_cycle(n, &edges) {
            None => return Hyperforest::from_masks(n, edges),
            Some(on_cycle) => {
                let merged = on_cycle.iter().fold(0, |acc, &k| acc | edges[k]);
                let mut rest: Vec<u32> = edges
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !on_cycle.contains(k))
                    .map(|(_, &e)| e)
                    .collect();
                rest.push(merged);
                edges = rest;
            }
        }
    }
}

/// Hyperedge indices along some cycle of the vertex/hyperedge incidence graph.
fn berge_cycle(n: usize, edges: &[u32]) -> Option<Vec<usize>> {
    let m = edges.len();
    let nodes = n + m;
    let neighbours = |x: usize| -> Vec<usize> {
        if x < n {
            (0..m).filter(|&k| edges[k] >> x & 1 == 1).map(|k| n + k).collect()
        } else {
            vertices(edges[x - n])
        }
    };
    let mut parent: Vec<Option<usize>> = vec![None; nodes];
    let mut seen = vec![false; nodes];
    for root in 0..nodes {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in neighbours(x) {
                if Some(y) == parent[x] {
                    continue;
                }
                if seen[y] {
                    // close the cycle through the lowest common ancestor
                    let path_to_root = |mut z: usize| {
                        let mut p = vec![z];
                        while let Some(q) = parent[z] {
                            p.push(q);
                            z = q;
                        }
                        p
                    };
                    let (px, py) = (path_to_root(x), path_to_root(y));
                    let lca = *px.iter().find(|z| py.contains(z))?;
                    let mut cycle: Vec<usize> = px.iter().take_while(|&&z| z != lca).copied().collect();
                    cycle.extend(py.iter().take_while(|&&z| z != lca));
                    cycle.push(lca);
                    return Some(cycle.into_iter().filter(|&z| z >= n).map(|z| z - n).collect());
                }
                seen[y] = true;
                parent[y] = Some(x);
                stack.push(y);
            }
        }
    }
    None
}
