//! Direct enumeration over `G^n`: packings, coverings, intersection graphs.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::{count_ones, intersects, union_into, BitTable};
use crate::error::{Error, Result};
use crate::genericity::is_generic;
use crate::group::SubsetFamily;

/// Default cap on `N^n`.
pub const DEFAULT_SCAN_BUDGET: u128 = 100_000_000;
/// Environment variable overriding [`DEFAULT_SCAN_BUDGET`].
pub const SCAN_BUDGET_ENV: &str = "PACKINGS_SCAN_BUDGET";
/// Largest `n` for the Boolean-lattice sum.
pub const MAX_BOOLEAN_N: usize = 5;

pub fn scan_budget() -> u128 {
    std::env::var(SCAN_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SCAN_BUDGET)
}

fn ensure_budget(order: usize, n: usize) -> Result<()> {
    let budget = scan_budget();
    let needed = (0..n).fold(1u128, |acc, _| acc.saturating_mul(order as u128));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Bitsets of every translate `g S_i`, row `i * N + g`.
struct Translates {
    order: usize,
    table: BitTable,
}

impl Translates {
    fn new(family: &SubsetFamily) -> Self {
        let g = family.group();
        let order = g.order();
        let mut table = BitTable::new(family.len() * order, order);
        for (i, set) in family.sets().iter().enumerate() {
            for h in 0..order {
                for &s in set {
                    table.set(i * order + h, g.mul(h, s));
                }
            }
        }
        Self { order, table }
    }

    #[inline]
    fn get(&self, i: usize, h: usize) -> &[u64] {
        self.table.row(i * self.order + h)
    }

    fn words(&self) -> usize {
        self.table.words()
    }
}

/// The number of tuples `(g_1, ..., g_n)` whose translates `g_i S_i` are pairwise disjoint.
pub fn count_packings_bruteforce(family: &SubsetFamily) -> Result<BigInt> {
    let (n, order) = (family.len(), family.group().order());
    ensure_budget(order, n)?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let tr = Translates::new(family);
    let total: u64 = (0..order)
        .into_par_iter()
        .map(|h0| {
            let mut used = vec![vec![0u64; tr.words()]; n];
            used[0].copy_from_slice(tr.get(0, h0));
            packing_dfs(&tr, 1, n, &mut used)
        })
        .sum();
    Ok(BigInt::from(total))
}

fn packing_dfs(tr: &Translates, k: usize, n: usize, used: &mut [Vec<u64>]) -> u64 {
    if k == n {
        return 1;
    }
    let mut total = 0;
    for h in 0..tr.order {
        let t = tr.get(k, h);
        let (prev, rest) = used.split_at_mut(k);
        let acc = &prev[k - 1];
        if !intersects(acc, t) {
            union_into(&mut rest[0], acc, t);
            total += packing_dfs(tr, k + 1, n, used);
        }
    }
    total
}

/// The number of tuples whose translates cover the whole group.
pub fn count_coverings_bruteforce(family: &SubsetFamily) -> Result<BigInt> {
    let (n, order) = (family.len(), family.group().order());
    ensure_budget(order, n)?;
    if n == 0 {
        return Ok(BigInt::from(u8::from(order == 0)));
    }
    let tr = Translates::new(family);
    fn dfs(tr: &Translates, k: usize, n: usize, used: &mut [Vec<u64>]) -> u64 {
        if k == n {
            return u64::from(count_ones(&used[n - 1]) == tr.order);
        }
        let mut total = 0;
        for h in 0..tr.order {
            let (prev, rest) = used.split_at_mut(k);
            union_into(&mut rest[0], &prev[k - 1], tr.get(k, h));
            total += dfs(tr, k + 1, n, used);
        }
        total
    }
    let total: u64 = (0..order)
        .into_par_iter()
        .map(|h0| {
            let mut used = vec![vec![0u64; tr.words()]; n];
            used[0].copy_from_slice(tr.get(0, h0));
            dfs(&tr, 1, n, &mut used)
        })
        .sum();
    Ok(BigInt::from(total))
}

/// A simple graph on vertices `0..n` (`n <= 32`) stored as adjacency masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionGraph {
    adj: Vec<u32>,
}

impl IntersectionGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 32, "at most 32 vertices");
        Self { adj: vec![0; n] }
    }

    /// Edges as 0-based pairs; loops and repeats are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if a == b || a >= n || b >= n || g.has_edge(a, b) {
                return Err(Error::InvalidHyperedge(vec![a, b]));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// The graph whose edge set is the `mask`-th subset of the pairs
    /// `(0,1), (0,2), ..., (n-2,n-1)`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::empty(n);
        for (k, (a, b)) in pairs(n).enumerate() {
            if mask >> k & 1 == 1 {
                g.adj[a] |= 1 << b;
                g.adj[b] |= 1 << a;
            }
        }
        g
    }

    /// All `2^{C(n,2)}` graphs on `n` vertices.
    pub fn all(n: usize) -> impl Iterator<Item = IntersectionGraph> {
        let count = 1u64 << (n * n.saturating_sub(1) / 2);
        (0..count).map(move |m| Self::from_pair_mask(n, m))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs(self.n()).filter(|&(a, b)| self.has_edge(a, b)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&m| m == 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Smallest vertex of each vertex's component.
    pub fn component_roots(&self) -> Vec<usize> {
        let n = self.n();
        let mut root = vec![usize::MAX; n];
        for start in 0..n {
            if root[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            root[start] = start;
            while let Some(v) = stack.pop() {
                let mut nb = self.adj[v];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if root[w] == usize::MAX {
                        root[w] = start;
                        stack.push(w);
                    }
                }
            }
        }
        root
    }

    /// `c(Γ)`, isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.component_roots().iter().enumerate().filter(|(v, r)| v == *r).count()
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

/// `I(g)`: an edge `{i, j}` whenever `g_i S_i` meets `g_j S_j`.
pub fn intersection_graph(family: &SubsetFamily, tuple: &[usize]) -> Result<IntersectionGraph> {
    let g = family.group();
    if tuple.len() != family.len() {
        return Err(Error::SizeGuard { what: "tuple length", value: tuple.len(), limit: family.len() });
    }
    let translates: Vec<Vec<usize>> = family
        .sets()
        .iter()
        .zip(tuple)
        .map(|(s, &h)| g.translate(h, s))
        .collect::<Result<_>>()?;
    let mut graph = IntersectionGraph::empty(family.len());
    for (a, b) in pairs(family.len()) {
        if translates[a].iter().any(|x| translates[b].binary_search(x).is_ok()) {
            graph.adj[a] |= 1 << b;
            graph.adj[b] |= 1 << a;
        }
    }
    Ok(graph)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct REReport {
    /// `#R_Γ`: tuples whose intersection graph contains `Γ`.
    pub r: u128,
    /// `#E_Γ`: classes of `R_Γ` under per-component left multiplication.
    pub e: u128,
    /// `c(Γ)`.
    pub components: usize,
}

/// Scans `G^n` for `R_Γ` and classifies it by the signature
/// `v ↦ g_{root(v)}^{-1} g_v`, root being the smallest vertex of the component.
pub fn count_r_and_e(family: &SubsetFamily, graph: &IntersectionGraph) -> Result<REReport> {
    let (n, order) = (family.len(), family.group().order());
    if graph.n() != n {
        return Err(Error::SizeGuard { what: "graph vertex count", value: graph.n(), limit: n });
    }
    ensure_budget(order, n)?;
    let roots = graph.component_roots();
    let components = graph.component_count();
    if n == 0 {
        return Ok(REReport { r: 1, e: 1, components });
    }
    let tr = Translates::new(family);
    let group = family.group();
    struct Ctx<'a> {
        tr: &'a Translates,
        graph: &'a IntersectionGraph,
        roots: &'a [usize],
        group: &'a crate::group::FiniteGroup,
        n: usize,
    }
    fn dfs(ctx: &Ctx, k: usize, tuple: &mut Vec<usize>, r: &mut u128, sigs: &mut HashSet<u128>) {
        if k == ctx.n {
            *r += 1;
            let order = ctx.tr.order as u128;
            let sig = (0..ctx.n).fold(0u128, |acc, v| {
                let rel = ctx.group.mul(ctx.group.inv(tuple[ctx.roots[v]]), tuple[v]);
                acc * order + rel as u128
            });
            sigs.insert(sig);
            return;
        }
        for h in 0..ctx.tr.order {
            let t = ctx.tr.get(k, h);
            let ok = (0..k).all(|j| !ctx.graph.has_edge(j, k) || intersects(ctx.tr.get(j, tuple[j]), t));
            if ok {
                tuple.push(h);
                dfs(ctx, k + 1, tuple, r, sigs);
                tuple.pop();
            }
        }
    }
    let ctx = Ctx { tr: &tr, graph, roots: &roots, group, n };
    let parts: Vec<(u128, HashSet<u128>)> = (0..order)
        .into_par_iter()
        .map(|h0| {
            let (mut r, mut sigs) = (0, HashSet::new());
            dfs(&ctx, 1, &mut vec![h0], &mut r, &mut sigs);
            (r, sigs)
        })
        .collect();
    let r = parts.iter().map(|p| p.0).sum();
    let sigs: HashSet<u128> = parts.into_iter().flat_map(|p| p.1).collect();
    Ok(REReport { r, e: sigs.len() as u128, components })
}

/// `sum_Γ (-1)^{e(Γ)} #E_Γ N^{c(Γ)}` over all graphs on `n <= 5` vertices.
pub fn alpha_via_boolean_moebius(family: &SubsetFamily) -> Result<BigInt> {
    let n = family.len();
    if n > MAX_BOOLEAN_N {
        return Err(Error::SizeGuard { what: "subset count", value: n, limit: MAX_BOOLEAN_N });
    }
    let order = BigInt::from(family.group().order());
    let mut total = BigInt::zero();
    for graph in IntersectionGraph::all(n) {
        let re = count_r_and_e(family, &graph)?;
        let term = BigInt::from(re.e) * order.pow(re.components as u32);
        if graph.edge_count() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionBounds {
    /// Packings of `S_1, ..., S_n`.
    pub a: String,
    /// Packings of `S_1, ..., S_{n+1}`.
    pub b: String,
    /// `(N - #S_{n+1} sum #S_i) a`.
    pub lower: String,
    /// `(N - sum #S_i) a`.
    pub upper: String,
    pub within_bounds: bool,
    /// `b = upper` when `S_{n+1}` is a singleton; `true` otherwise.
    pub singleton_equality: bool,
}

/// Counts `a` and `b` by scanning and compares them with the bounds.
pub fn check_extension_bounds(family: &SubsetFamily, extra: &[usize]) -> Result<ExtensionBounds> {
    let extended = family.with_set(extra.to_vec())?;
    let a = count_packings_bruteforce(family)?;
    let b = count_packings_bruteforce(&extended)?;
    let order = BigInt::from(family.group().order());
    let total: BigInt = family.cardinalities().iter().map(|&s| BigInt::from(s)).sum();
    let s_new = BigInt::from(extended.sets()[family.len()].len());
    let lower = (&order - &s_new * &total) * &a;
    let upper = (&order - &total) * &a;
    let within_bounds = lower <= b && b <= upper;
    let singleton_equality = s_new != BigInt::from(1) || b == upper;
    Ok(ExtensionBounds {
        a: a.to_string(),
        b: b.to_string(),
        lower: lower.to_string(),
        upper: upper.to_string(),
        within_bounds,
        singleton_equality,
    })
}

/// The complements `G \ S_i`.
pub fn complement_family(family: &SubsetFamily) -> Result<SubsetFamily> {
    let order = family.group().order();
    let sets = family
        .sets()
        .iter()
        .map(|s| (0..order).filter(|x| s.binary_search(x).is_err()).collect())
        .collect();
    SubsetFamily::new(family.group(), sets)
}

/// `N^n - N prod #S_j`: coverings by the complements of a generic family with `n >= 2`.
pub fn complement_covering_count(family: &SubsetFamily) -> Result<BigInt> {
    if family.len() < 2 || !is_generic(family)?.generic {
        return Err(Error::NotGenericOrTooSmall);
    }
    let order = BigInt::from(family.group().order());
    let product: BigInt = family.cardinalities().iter().map(|&s| BigInt::from(s)).product();
    Ok(order.pow(family.len() as u32) - &order * product)
}

/// The family followed by `N - sum #S_j` copies of the singleton `{e}`.
pub fn tight_covering_family(family: &SubsetFamily) -> Result<SubsetFamily> {
    let order = family.group().order();
    let total: u64 = family.cardinalities().iter().sum();
    let extra = (order as u64).checked_sub(total).ok_or(Error::SizeGuard {
        what: "sum of cardinalities",
        value: total as usize,
        limit: order,
    })?;
    let mut sets = family.sets().to_vec();
    sets.extend((0..extra).map(|_| vec![family.group().identity()]));
    SubsetFamily::new(family.group(), sets)
}
