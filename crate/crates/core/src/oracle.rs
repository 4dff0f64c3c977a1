//! Brute-force orbit counts on `Gⁿ` and on commuting n-tuples.
//!
//! Nothing here uses class equations or generating functions. Tuples are
//! encoded in mixed radix `Σ x_i |G|^i` and orbits are found with union-find
//! over the conjugation action of a generating set. A Burnside count is
//! computed alongside and must agree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::group::FiniteGroup;

/// Default bound on `|G|ⁿ`.
pub const DEFAULT_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("|G|^n = {order}^{n} exceeds the limit {limit}")]
    TooLarge { order: usize, n: u32, limit: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitMethod {
    DirectUnionFind,
    Burnside,
}

impl fmt::Display for OrbitMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitMethod::DirectUnionFind => "direct-union-find",
            OrbitMethod::Burnside => "burnside",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitCount {
    pub n: u32,
    pub count: u64,
    pub method: OrbitMethod,
}

fn guard(g: &FiniteGroup, n: u32, limit: u64) -> Result<u64, OracleError> {
    let too_large = OracleError::TooLarge {
        order: g.order(),
        n,
        limit,
    };
    match (g.order() as u64).checked_pow(n) {
        Some(s) if s <= limit => Ok(s),
        _ => Err(too_large),
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

fn decode(mut idx: u64, order: u64, out: &mut [usize]) {
    for slot in out.iter_mut() {
        *slot = (idx % order) as usize;
        idx /= order;
    }
}

fn encode(tuple: &[usize], order: u64) -> u64 {
    tuple.iter().rev().fold(0, |acc, &x| acc * order + x as u64)
}

fn pairwise_commuting(g: &FiniteGroup, tuple: &[usize]) -> bool {
    tuple
        .iter()
        .enumerate()
        .all(|(i, &a)| tuple[..i].iter().all(|&b| g.commute(a, b)))
}

/// Union-find orbit count over the tuples accepted by `keep`.
fn union_find_orbits(g: &FiniteGroup, n: u32, size: u64, keep: impl Fn(&[usize]) -> bool) -> u64 {
    let order = g.order() as u64;
    let gens = g.generating_set();
    let mut uf = UnionFind::new(size as usize);
    let mut kept = BitSet::new(size as usize);
    let mut tuple = vec![0usize; n as usize];
    let mut image = vec![0usize; n as usize];
    for idx in 0..size {
        decode(idx, order, &mut tuple);
        if !keep(&tuple) {
            continue;
        }
        kept.insert(idx as usize);
        for &h in &gens {
            for (y, &x) in image.iter_mut().zip(&tuple) {
                *y = g.conj(x, h);
            }
            uf.union(idx as u32, encode(&image, order) as u32);
        }
    }
    kept.iter().filter(|&i| uf.find(i as u32) == i as u32).count() as u64
}

fn centralizer_order(g: &FiniteGroup, x: usize) -> u64 {
    (0..g.order()).filter(|&y| g.commute(x, y)).count() as u64
}

/// Orbits of `G` on `Gⁿ` under simultaneous conjugation.
pub fn alpha_bruteforce(g: &FiniteGroup, n: u32) -> Result<OrbitCount, OracleError> {
    alpha_bruteforce_with_limit(g, n, DEFAULT_LIMIT)
}

pub fn alpha_bruteforce_with_limit(g: &FiniteGroup, n: u32, limit: u64) -> Result<OrbitCount, OracleError> {
    let size = guard(g, n, limit)?;
    let direct = union_find_orbits(g, n, size, |_| true);
    let fixed: u128 = (0..g.order()).map(|x| (centralizer_order(g, x) as u128).pow(n)).sum();
    let burnside = (fixed / g.order() as u128) as u64;
    assert_eq!(direct, burnside, "union-find and Burnside counts disagree");
    Ok(OrbitCount {
        n,
        count: direct,
        method: OrbitMethod::DirectUnionFind,
    })
}

/// Orbits of `G` on pairwise-commuting n-tuples.
pub fn beta_bruteforce(g: &FiniteGroup, n: u32) -> Result<OrbitCount, OracleError> {
    beta_bruteforce_with_limit(g, n, DEFAULT_LIMIT)
}

pub fn beta_bruteforce_with_limit(g: &FiniteGroup, n: u32, limit: u64) -> Result<OrbitCount, OracleError> {
    let size = guard(g, n, limit)?;
    let direct = union_find_orbits(g, n, size, |t| pairwise_commuting(g, t));
    let fixed: u128 = (0..g.order())
        .map(|x| {
            let z = BitSet::from_indices(g.order(), (0..g.order()).filter(|&y| g.commute(x, y)));
            count_within(g, &z, n) as u128
        })
        .sum();
    let burnside = (fixed / g.order() as u128) as u64;
    assert_eq!(direct, burnside, "union-find and Burnside counts disagree");
    Ok(OrbitCount {
        n,
        count: direct,
        method: OrbitMethod::DirectUnionFind,
    })
}

/// Number of pairwise-commuting n-tuples in `G`.
pub fn commuting_tuple_count(g: &FiniteGroup, n: u32) -> Result<u64, OracleError> {
    guard(g, n, DEFAULT_LIMIT)?;
    Ok(count_within(g, &BitSet::full(g.order()), n))
}

/// Commuting n-tuples with entries in `s`, extending one entry at a time
/// inside the running centralizer.
fn count_within(g: &FiniteGroup, s: &BitSet, n: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return s.len() as u64;
    }
    s.iter()
        .map(|x| {
            let next = BitSet::from_indices(g.order(), s.iter().filter(|&y| g.commute(x, y)));
            count_within(g, &next, n - 1)
        })
        .sum()
}
