//! Finite groups on dense element indices and families of subsets.
//!
//! Elements of a group of order `N` are the indices `0..N`, and index `0` is
//! always the identity. Cyclic groups, direct products of cyclic groups and
//! small symmetric groups multiply arithmetically; explicit tables are
//! validated and re-indexed so that the identity lands on `0`.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest `k` accepted for the symmetric group `S_k`.
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

/// How to build a [`FiniteGroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    /// `Z/N`.
    Cyclic(usize),
    /// `Z/n_1 x Z/n_2 x ...`.
    Product(Vec<usize>),
    /// Permutations of `k` points, indexed by Lehmer-code rank.
    Symmetric(usize),
    /// Row-major multiplication table, `table[a][b] = a * b`.
    Explicit(Vec<Vec<usize>>),
}

impl GroupDescriptor {
    /// Parses `"Z8"`, `"Z2xZ3"` or `"S3"`. Anything else is treated as the
    /// path of a table file (`N` followed by `N^2` entries, whitespace
    /// separated).
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        if let Some(desc) = Self::parse_structured(s) {
            return Ok(desc);
        }
        if Path::new(s).is_file() {
            let text = std::fs::read_to_string(s).map_err(|e| Error::Io {
                path: s.to_string(),
                message: e.to_string(),
            })?;
            return Self::parse_table(&text);
        }
        Err(Error::Parse {
            what: "group descriptor",
            input: input.to_string(),
        })
    }

    fn parse_structured(s: &str) -> Option<Self> {
        if let Some(k) = s.strip_prefix('S') {
            return k.parse().ok().map(GroupDescriptor::Symmetric);
        }
        let factors: Option<Vec<usize>> = s
            .split(['x', 'X'])
            .map(|f| f.trim().strip_prefix('Z').and_then(|n| n.parse().ok()))
            .collect();
        match factors? {
            f if f.len() == 1 => Some(GroupDescriptor::Cyclic(f[0])),
            f => Some(GroupDescriptor::Product(f)),
        }
    }

    /// Parses the explicit-table file format.
    pub fn parse_table(text: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "multiplication table",
            input: text.chars().take(80).collect(),
        };
        let nums: Vec<usize> = text
            .split_whitespace()
            .map(|w| w.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let (&n, entries) = nums.split_first().ok_or_else(bad)?;
        if entries.len() != n * n {
            return Err(Error::TableNotSquare {
                expected: n * n,
                found: entries.len(),
            });
        }
        let table = if n == 0 {
            Vec::new()
        } else {
            entries.chunks(n).map(<[usize]>::to_vec).collect()
        };
        Ok(GroupDescriptor::Explicit(table))
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Cyclic(usize),
    Product(Vec<usize>),
    Symmetric { degree: usize, perms: Arc<Vec<Vec<u8>>> },
    Explicit { table: Arc<Vec<u32>>, inverses: Arc<Vec<u32>>, abelian: bool },
}

/// A validated finite group. Cloning is cheap; the value is immutable.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
}

impl FiniteGroup {
    pub fn new(desc: GroupDescriptor) -> Result<Self> {
        match desc {
            GroupDescriptor::Cyclic(n) => Self::cyclic(n),
            GroupDescriptor::Product(orders) => Self::product(&orders),
            GroupDescriptor::Symmetric(k) => Self::symmetric(k),
            GroupDescriptor::Explicit(table) => Self::explicit(&table),
        }
    }

    /// Parses a descriptor string (see [`GroupDescriptor::parse`]) and builds the group.
    pub fn from_descriptor(s: &str) -> Result<Self> {
        Self::new(GroupDescriptor::parse(s)?)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { order: n, repr: Repr::Cyclic(n) })
    }

    pub fn product(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::ZeroOrder);
        }
        let order = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o))
            .ok_or(Error::Overflow)?;
        Ok(Self { order, repr: Repr::Product(orders.to_vec()) })
    }

    pub fn symmetric(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        if k > MAX_SYMMETRIC_DEGREE {
            return Err(Error::SymmetricTooLarge(k));
        }
        let order = (1..=k).product();
        let perms = (0..order).map(|r| unrank_permutation(r, k)).collect();
        Ok(Self {
            order,
            repr: Repr::Symmetric { degree: k, perms: Arc::new(perms) },
        })
    }

    /// Validates `table` (square, Latin square, identity, associativity,
    /// inverses) and re-indexes it so that the identity is element `0`.
    pub fn explicit(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        for row in table {
            if row.len() != n {
                return Err(Error::TableNotSquare { expected: n * n, found: row.len() * n });
            }
            if let Some(&e) = row.iter().find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element: e, order: n });
            }
        }
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut seen_row[table[a][b]], true) {
                    return Err(Error::NotLatinSquare(format!("row {a} repeats {}", table[a][b])));
                }
                if std::mem::replace(&mut seen_col[table[b][a]], true) {
                    return Err(Error::NotLatinSquare(format!("column {a} repeats {}", table[b][a])));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // swap identity <-> 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let inv = (0..n).find(|&b| flat[a * n + b] == 0 && flat[b * n + a] == 0);
            inverses[a] = inv.ok_or(Error::MissingInverse(a))? as u32;
        }
        let abelian = (0..n).all(|a| (0..a).all(|b| flat[a * n + b] == flat[b * n + a]));
        Ok(Self {
            order: n,
            repr: Repr::Explicit {
                table: Arc::new(flat),
                inverses: Arc::new(inverses),
                abelian,
            },
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.order
    }

    pub fn check(&self, a: usize) -> Result<usize> {
        if a < self.order {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange { element: a, order: self.order })
        }
    }

    pub fn is_abelian(&self) -> bool {
        match &self.repr {
            Repr::Cyclic(_) | Repr::Product(_) => true,
            Repr::Symmetric { degree, .. } => *degree <= 2,
            Repr::Explicit { abelian, .. } => *abelian,
        }
    }

    /// The descriptor this group was built from (explicit tables are
    /// returned re-indexed).
    pub fn descriptor(&self) -> GroupDescriptor {
        match &self.repr {
            Repr::Cyclic(n) => GroupDescriptor::Cyclic(*n),
            Repr::Product(o) => GroupDescriptor::Product(o.clone()),
            Repr::Symmetric { degree, .. } => GroupDescriptor::Symmetric(*degree),
            Repr::Explicit { table, .. } => GroupDescriptor::Explicit(
                table
                    .chunks(self.order)
                    .map(|r| r.iter().map(|&x| x as usize).collect())
                    .collect(),
            ),
        }
    }

    /// Group product `a * b`. Panics if an index is out of range.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.order && b < self.order, "element out of range");
        match &self.repr {
            Repr::Cyclic(n) => {
                let s = a + b;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
            Repr::Product(orders) => {
                let (mut a, mut b) = (a, b);
                let (mut out, mut scale) = (0, 1);
                for &o in orders {
                    out += ((a % o + b % o) % o) * scale;
                    a /= o;
                    b /= o;
                    scale *= o;
                }
                out
            }
            Repr::Symmetric { degree, perms } => {
                let (p, q) = (&perms[a], &perms[b]);
                let composed: Vec<u8> = (0..*degree).map(|x| p[q[x] as usize]).collect();
                rank_permutation(&composed)
            }
            Repr::Explicit { table, .. } => table[a * self.order + b] as usize,
        }
    }

    /// Inverse element. Panics if `a` is out of range.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        assert!(a < self.order, "element out of range");
        match &self.repr {
            Repr::Cyclic(n) => (n - a) % n,
            Repr::Product(orders) => {
                let mut a = a;
                let (mut out, mut scale) = (0, 1);
                for &o in orders {
                    out += ((o - a % o) % o) * scale;
                    a /= o;
                    scale *= o;
                }
                out
            }
            Repr::Symmetric { degree, perms } => {
                let p = &perms[a];
                let mut inv = vec![0u8; *degree];
                for (x, &px) in p.iter().enumerate() {
                    inv[px as usize] = x as u8;
                }
                rank_permutation(&inv)
            }
            Repr::Explicit { inverses, .. } => inverses[a] as usize,
        }
    }

    /// Element of a product group from its coordinates (first factor is the
    /// least significant digit). For other groups the single coordinate is
    /// the element itself.
    pub fn from_coords(&self, coords: &[usize]) -> Result<usize> {
        match &self.repr {
            Repr::Product(orders) if coords.len() == orders.len() => {
                let mut out = 0;
                for (&c, &o) in coords.iter().zip(orders).rev() {
                    if c >= o {
                        return Err(Error::ElementOutOfRange { element: c, order: o });
                    }
                    out = out * o + c;
                }
                Ok(out)
            }
            _ if coords.len() == 1 => self.check(coords[0]),
            _ => Err(Error::Parse { what: "element coordinates", input: format!("{coords:?}") }),
        }
    }

    /// Element of `S_k` from its one-line notation (images of `0..k`).
    pub fn from_permutation(&self, images: &[usize]) -> Result<usize> {
        match &self.repr {
            Repr::Symmetric { degree, .. } if images.len() == *degree => {
                let mut seen = vec![false; *degree];
                for &x in images {
                    if x >= *degree || std::mem::replace(&mut seen[x], true) {
                        return Err(Error::Parse { what: "permutation", input: format!("{images:?}") });
                    }
                }
                let p: Vec<u8> = images.iter().map(|&x| x as u8).collect();
                Ok(rank_permutation(&p))
            }
            _ => Err(Error::Parse { what: "permutation", input: format!("{images:?}") }),
        }
    }

    /// Left translate `g S`, sorted.
    pub fn translate(&self, g: usize, set: &[usize]) -> Result<Vec<usize>> {
        self.check(g)?;
        let mut out = set
            .iter()
            .map(|&s| self.check(s).map(|s| self.mul(g, s)))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    /// `S^{-1} = { s^{-1} : s in S }`, sorted.
    pub fn inverse_set(&self, set: &[usize]) -> Result<Vec<usize>> {
        let mut out = set
            .iter()
            .map(|&s| self.check(s).map(|s| self.inv(s)))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    /// `S^{-1} S = { a^{-1} b : a, b in S }`, sorted and deduplicated.
    pub fn difference_set(&self, set: &[usize]) -> Result<Vec<usize>> {
        for &s in set {
            self.check(s)?;
        }
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&a| {
                let ai = self.inv(a);
                set.iter().map(move |&b| (ai, b))
            })
            .map(|(ai, b)| self.mul(ai, b))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Cyclic(n) => write!(f, "Z{n}"),
            Repr::Product(o) => {
                let parts: Vec<String> = o.iter().map(|n| format!("Z{n}")).collect();
                f.write_str(&parts.join("x"))
            }
            Repr::Symmetric { degree, .. } => write!(f, "S{degree}"),
            Repr::Explicit { .. } => write!(f, "table({})", self.order),
        }
    }
}

fn unrank_permutation(mut rank: usize, k: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..k as u8).collect();
    let mut out = Vec::with_capacity(k);
    for i in (0..k).rev() {
        let f: usize = (1..=i).product();
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

fn rank_permutation(p: &[u8]) -> usize {
    let k = p.len();
    let mut rank = 0;
    for i in 0..k {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (k - i) + smaller;
    }
    rank
}

/// An ordered family of non-empty subsets of one group.
#[derive(Clone, Debug)]
pub struct SubsetFamily {
    group: FiniteGroup,
    sets: Vec<Vec<usize>>,
}

impl SubsetFamily {
    /// Each set is sorted and deduplicated; empty sets and out-of-range
    /// elements are rejected.
    pub fn new(group: &FiniteGroup, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptySubset(i));
            }
            for &x in &s {
                group.check(x)?;
            }
            s.sort_unstable();
            s.dedup();
            clean.push(s);
        }
        Ok(Self { group: group.clone(), sets: clean })
    }

    /// Parses `"0,1;0,2;0,4"`.
    pub fn parse(group: &FiniteGroup, text: &str) -> Result<Self> {
        Self::new(group, parse_set_list(text)?)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn cardinalities(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.len() as u64).collect()
    }

    /// The family with `extra` appended.
    pub fn with_set(&self, extra: Vec<usize>) -> Result<Self> {
        let mut sets = self.sets.clone();
        sets.push(extra);
        Self::new(&self.group, sets)
    }

    /// The family `(a_1 S_1, ..., a_n S_n)`.
    pub fn translated(&self, shifts: &[usize]) -> Result<Self> {
        let sets = self
            .sets
            .iter()
            .zip(shifts)
            .map(|(s, &a)| self.group.translate(a, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.group, sets)
    }
}

/// Parses `"0,1;0,2"` into `[[0,1],[0,2]]`. Whitespace is ignored.
pub fn parse_set_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|x| {
                    x.trim().parse::<usize>().map_err(|_| Error::Parse {
                        what: "subset list",
                        input: text.to_string(),
                    })
                })
                .collect()
        })
        .collect()
}
