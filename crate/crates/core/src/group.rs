//! Finite groups stored as Cayley tables.
//!
//! Elements are indices `0..order`; the identity is always index `0`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bitset::BitSet;

/// Groups up to this order get an exhaustive associativity check by default.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;
/// Number of random triples tested above the exhaustive limit.
pub const SAMPLED_TRIPLES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty Cayley table")]
    Empty,
    #[error("row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({x},{y}) = {value} is not an element index (order {order})")]
    NotClosed {
        x: usize,
        y: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element set is not a subgroup: {reason}")]
    NotASubgroup { reason: &'static str },
}

/// How thoroughly [`FiniteGroup::from_table`] checks associativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AssociativityCheck {
    /// Exhaustive up to [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`], sampled above.
    #[default]
    Auto,
    Exhaustive,
    Sampled(u64),
}

/// A validated finite group with O(1) multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    generators: Vec<usize>,
    generator_names: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table and relabels the identity to index 0.
    ///
    /// `table[x][y]` is the index of `x*y`.
    pub fn from_table(table: &[Vec<usize>], check: AssociativityCheck) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    order,
                });
            }
            for (y, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::NotClosed {
                        x: row,
                        y,
                        value,
                        order,
                    });
                }
            }
        }
        let e = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                mul[relabel(x) * order + relabel(y)] = relabel(table[x][y]) as u32;
            }
        }
        Self::from_flat(mul, order, check)
    }

    /// Validates a row-major table whose identity is already index 0.
    pub(crate) fn from_flat(mul: Vec<u32>, order: usize, check: AssociativityCheck) -> Result<Self, GroupError> {
        debug_assert_eq!(mul.len(), order * order);
        if (0..order).any(|x| mul[x] as usize != x || mul[x * order] as usize != x) {
            return Err(GroupError::NoIdentity);
        }
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row
                .iter()
                .position(|&v| v == 0)
                .ok_or(GroupError::NoInverse { element: x })?;
            if mul[y * order + x] != 0 {
                return Err(GroupError::NoInverse { element: x });
            }
            inv[x] = y as u32;
        }
        let g = FiniteGroup {
            order,
            mul,
            inv,
            labels: None,
            generators: Vec::new(),
            generator_names: Vec::new(),
        };
        g.check_associativity(check)?;
        Ok(g)
    }

    fn check_associativity(&self, check: AssociativityCheck) -> Result<(), GroupError> {
        let n = self.order;
        let exhaustive = match check {
            AssociativityCheck::Exhaustive => true,
            AssociativityCheck::Auto => n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
            AssociativityCheck::Sampled(_) => false,
        };
        if exhaustive {
            for x in 0..n {
                for y in 0..n {
                    let xy = self.mul(x, y);
                    let row_y = &self.mul[y * n..(y + 1) * n];
                    for (z, &yz) in row_y.iter().enumerate() {
                        if self.mul(xy, z) != self.mul(x, yz as usize) {
                            return Err(GroupError::NotAssociative { x, y, z });
                        }
                    }
                }
            }
        } else {
            let samples = match check {
                AssociativityCheck::Sampled(k) => k,
                _ => SAMPLED_TRIPLES,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_u64 ^ n as u64);
            for _ in 0..samples {
                let x = (rng.next_u64() % n as u64) as usize;
                let y = (rng.next_u64() % n as u64) as usize;
                let z = (rng.next_u64() % n as u64) as usize;
                if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                    return Err(GroupError::NotAssociative { x, y, z });
                }
            }
        }
        Ok(())
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            labels: None,
            generators: Vec::new(),
            generator_names: Vec::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    /// Records a named generating set. Names are used when parsing words.
    pub fn with_generators(mut self, generators: Vec<usize>, names: Vec<String>) -> Self {
        debug_assert_eq!(generators.len(), names.len());
        self.generators = generators;
        self.generator_names = names;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    #[inline]
    pub fn commute(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).map(|x| self.element_order(x)).fold(1, num_integer::lcm)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    /// Stable content hash of the Cayley table (hex SHA-256 prefix).
    pub fn group_id(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order as u64).to_le_bytes());
        for v in &self.mul {
            h.update(v.to_le_bytes());
        }
        let digest = h.finalize();
        let mut out = String::with_capacity(32);
        for b in digest.iter().take(16) {
            out.push(char::from_digit((b >> 4) as u32, 16).unwrap());
            out.push(char::from_digit((b & 15) as u32, 16).unwrap());
        }
        out
    }

    /// A generating set: the recorded one, or a greedy one.
    pub fn generating_set(&self) -> Vec<usize> {
        if !self.generators.is_empty() {
            return self.generators.clone();
        }
        let mut gens = Vec::new();
        let mut span = BitSet::from_indices(self.order, [0]);
        for x in 0..self.order {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`, as a bit set.
    pub(crate) fn closure(&self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::from_indices(self.order, [0]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup<'_> {
        Subgroup::from_bits_unchecked(self, self.closure(gens))
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_bits_unchecked(self, BitSet::full(self.order))
    }

    pub(crate) fn centralizer_bits(&self, g: usize) -> BitSet {
        BitSet::from_indices(self.order, (0..self.order).filter(|&x| self.commute(x, g)))
    }

    /// `{x : xg = gx}`.
    pub fn centralizer(&self, g: usize) -> Subgroup<'_> {
        Subgroup::from_bits_unchecked(self, self.centralizer_bits(g))
    }

    pub fn center(&self) -> Subgroup<'_> {
        let gens = self.generating_set();
        let bits = BitSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| gens.iter().all(|&g| self.commute(x, g))),
        );
        Subgroup::from_bits_unchecked(self, bits)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generating_set();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    /// Orbit partition under conjugation, by direct sweep.
    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order;
        let gens = self.generating_set();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut class_sizes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            class_of[x] = id;
            let mut stack = vec![x];
            let mut size = 1;
            while let Some(y) = stack.pop() {
                for &g in &gens {
                    let z = self.conj(y, g);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        size += 1;
                        stack.push(z);
                    }
                }
            }
            reps.push(x);
            class_sizes.push(size);
        }
        let centralizer_orders = class_sizes.iter().map(|&s| n / s).collect();
        ConjugacyData {
            class_of,
            reps,
            class_sizes,
            centralizer_orders,
        }
    }

    /// The spectrum `m ↦ z_m` of centralizer orders.
    pub fn class_equation(&self) -> CentralizerSpectrum {
        self.conjugacy_classes().spectrum()
    }

    /// True iff every non-central element has an abelian centralizer.
    pub fn is_ac_group(&self) -> bool {
        let z = self.center();
        (0..self.order)
            .filter(|&g| !z.contains(g))
            .all(|g| self.centralizer(g).is_abelian())
    }

    /// Maximal order of an abelian subgroup.
    ///
    /// Closes the set of element centralizers under pairwise intersection and
    /// takes the largest abelian member. Every maximal abelian subgroup `H`
    /// equals the intersection of the centralizers of its elements, so it
    /// appears in the closure.
    pub fn max_abelian_order(&self) -> usize {
        let mut seen: BTreeSet<BitSet> = BTreeSet::new();
        let mut members: Vec<BitSet> = Vec::new();
        for g in 0..self.order {
            let c = self.centralizer_bits(g);
            if seen.insert(c.clone()) {
                members.push(c);
            }
        }
        let mut i = 0;
        while i < members.len() {
            for j in 0..i {
                let meet = members[i].intersection(&members[j]);
                if seen.insert(meet.clone()) {
                    members.push(meet);
                }
            }
            i += 1;
        }
        members
            .iter()
            .filter(|h| self.bits_abelian(h))
            .map(BitSet::len)
            .max()
            .unwrap_or(1)
    }

    pub(crate) fn bits_abelian(&self, h: &BitSet) -> bool {
        let elems = h.to_vec();
        elems
            .iter()
            .enumerate()
            .all(|(i, &a)| elems[..i].iter().all(|&b| self.commute(a, b)))
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let mut comms = BitSet::new(self.order);
        for x in 0..self.order {
            for y in 0..x {
                comms.insert(self.commutator(x, y));
            }
        }
        comms.insert(0);
        let gens = comms.to_vec();
        Subgroup::from_bits_unchecked(self, self.closure(&gens))
    }
}

/// A subgroup of an ambient [`FiniteGroup`].
#[derive(Clone, Debug)]
pub struct Subgroup<'a> {
    ambient: &'a FiniteGroup,
    members: BitSet,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl<'a> Subgroup<'a> {
    /// Checks closure, identity and Lagrange's theorem.
    pub fn new(ambient: &'a FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        if elements.iter().any(|&x| x >= ambient.order()) {
            return Err(GroupError::NotASubgroup {
                reason: "element index out of range",
            });
        }
        let members = BitSet::from_indices(ambient.order(), elements.iter().copied());
        if !members.contains(0) {
            return Err(GroupError::NotASubgroup {
                reason: "missing identity",
            });
        }
        let elems = members.to_vec();
        for &x in &elems {
            if !members.contains(ambient.inv(x)) {
                return Err(GroupError::NotASubgroup {
                    reason: "not closed under inverses",
                });
            }
            for &y in &elems {
                if !members.contains(ambient.mul(x, y)) {
                    return Err(GroupError::NotASubgroup {
                        reason: "not closed under multiplication",
                    });
                }
            }
        }
        assert_eq!(
            ambient.order() % elems.len(),
            0,
            "Lagrange violated: subgroup order does not divide group order"
        );
        Ok(Subgroup {
            ambient,
            members,
            elements: elems,
        })
    }

    pub(crate) fn from_bits_unchecked(ambient: &'a FiniteGroup, members: BitSet) -> Self {
        let elements = members.to_vec();
        Subgroup {
            ambient,
            members,
            elements,
        }
    }

    pub fn ambient(&self) -> &'a FiniteGroup {
        self.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_abelian(&self) -> bool {
        self.ambient.bits_abelian(&self.members)
    }

    pub fn is_normal(&self) -> bool {
        let g = self.ambient;
        g.generating_set()
            .iter()
            .all(|&h| self.elements.iter().all(|&x| self.contains(g.conj(x, h))))
    }

    /// Re-indexed standalone group. Also returns the map from new indices to
    /// ambient indices; the identity stays at 0.
    pub fn as_group(&self) -> (FiniteGroup, Vec<usize>) {
        let g = self.ambient;
        let map = self.elements.clone();
        let n = map.len();
        let mut back = BTreeMap::new();
        for (i, &x) in map.iter().enumerate() {
            back.insert(x, i);
        }
        let mut mul = vec![0u32; n * n];
        for (i, &x) in map.iter().enumerate() {
            for (j, &y) in map.iter().enumerate() {
                mul[i * n + j] = back[&g.mul(x, y)] as u32;
            }
        }
        let inv = map.iter().map(|&x| back[&g.inv(x)] as u32).collect();
        let group = FiniteGroup {
            order: n,
            mul,
            inv,
            labels: g.labels.as_ref().map(|l| map.iter().map(|&x| l[x].clone()).collect()),
            generators: Vec::new(),
            generator_names: Vec::new(),
        };
        (group, map)
    }
}

/// Conjugacy classes of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
}

impl ConjugacyData {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn spectrum(&self) -> CentralizerSpectrum {
        let mut z = BTreeMap::new();
        for (&size, &m) in self.class_sizes.iter().zip(&self.centralizer_orders) {
            *z.entry(m as u64).or_insert(0u64) += size as u64;
        }
        CentralizerSpectrum(z)
    }
}

/// `m ↦ z_m`, the number of elements whose centralizer has order `m`.
/// Only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CentralizerSpectrum(pub BTreeMap<u64, u64>);

impl CentralizerSpectrum {
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Self {
        let mut z = BTreeMap::new();
        for (m, c) in pairs {
            if c != 0 {
                *z.entry(m).or_insert(0) += c;
            }
        }
        CentralizerSpectrum(z)
    }

    pub fn get(&self, m: u64) -> u64 {
        self.0.get(&m).copied().unwrap_or(0)
    }

    /// Σ z_m, which is the group order.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&m, &z)| (m, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, GroupSpec};

    fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect()
    }

    fn s3() -> FiniteGroup {
        build(&GroupSpec::dihedral(6)).unwrap()
    }

    fn q8() -> FiniteGroup {
        build(&GroupSpec::quaternion(8)).unwrap()
    }

    #[test]
    fn c2_table_validates() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], AssociativityCheck::Auto).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C3 with identity stored at index 2
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_table(&t, AssociativityCheck::Auto).unwrap();
        assert!((0..3).all(|x| g.mul(0, x) == x && g.mul(x, 0) == x));
    }

    #[test]
    fn corrupted_c4_is_rejected() {
        let mut t = cyclic_table(4);
        // keep rows/cols 0 intact so the identity survives
        t[1][1] = 3;
        t[1][2] = 2;
        let err = FiniteGroup::from_table(&t, AssociativityCheck::Auto).unwrap_err();
        assert!(matches!(
            err,
            GroupError::NotAssociative { .. } | GroupError::NoInverse { .. }
        ));
        let mut t = cyclic_table(4);
        t[1][2] = 0;
        t[1][3] = 3;
        assert!(FiniteGroup::from_table(&t, AssociativityCheck::Auto).is_err());
    }

    #[test]
    fn non_associative_latin_square() {
        // a Latin square with identity 0 that is not associative (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(&t, AssociativityCheck::Exhaustive).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(
            FiniteGroup::from_table(&[], AssociativityCheck::Auto),
            Err(GroupError::Empty)
        );
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]], AssociativityCheck::Auto),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]], AssociativityCheck::Auto),
            Err(GroupError::NotClosed { value: 2, .. })
        ));
        assert_eq!(
            FiniteGroup::from_table(&[vec![1, 1], vec![1, 1]], AssociativityCheck::Auto),
            Err(GroupError::NoIdentity)
        );
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]], AssociativityCheck::Auto),
            Err(GroupError::NoInverse { element: 1 })
        ));
    }

    #[test]
    fn s3_centralizers_and_center() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.center().order(), 1);
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(g.centralizer(t).order(), 2);
        assert_eq!(g.centralizer(0).order(), 6);
        assert_eq!(g.derived_subgroup().order(), 3);
        assert_eq!(g.max_abelian_order(), 3);
        assert!(g.is_ac_group());
    }

    #[test]
    fn q8_structure() {
        let g = q8();
        assert_eq!(g.center().order(), 2);
        let i = (0..8).find(|&x| g.element_order(x) == 4).unwrap();
        let c = g.centralizer(i);
        assert_eq!(c.order(), 4);
        let (cg, _) = c.as_group();
        assert!(cg.is_abelian());
        assert!((0..4).any(|x| cg.element_order(x) == 4));
        assert_eq!(g.derived_subgroup().order(), 2);
        assert_eq!(g.max_abelian_order(), 4);
        assert!(g.is_ac_group());
        let cls = g.conjugacy_classes();
        let mut sizes = cls.class_sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_equations() {
        assert_eq!(
            s3().class_equation(),
            CentralizerSpectrum::from_pairs([(2, 3), (3, 2), (6, 1)])
        );
        let d18 = build(&GroupSpec::dihedral(18)).unwrap();
        assert_eq!(
            d18.class_equation(),
            CentralizerSpectrum::from_pairs([(2, 9), (9, 8), (18, 1)])
        );
        let c4 = build(&GroupSpec::cyclic(4)).unwrap();
        assert_eq!(c4.class_equation(), CentralizerSpectrum::from_pairs([(4, 4)]));
        let cls = s3().conjugacy_classes();
        let mut sizes = cls.class_sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn abelian_groups() {
        let c6 = build(&GroupSpec::cyclic(6)).unwrap();
        assert_eq!(c6.center().order(), 6);
        assert!(c6.is_abelian());
        assert_eq!(c6.max_abelian_order(), 6);
        assert_eq!(c6.derived_subgroup().order(), 1);
        assert_eq!(c6.conjugacy_classes().class_count(), 6);
    }

    #[test]
    fn d8_squared_is_not_ac() {
        let d8 = GroupSpec::dihedral(8);
        let g = build(&GroupSpec::product([d8.clone(), d8])).unwrap();
        assert!(!g.is_ac_group());
        let z = g.center();
        let witness = (0..g.order())
            .find(|&x| !z.contains(x) && !g.centralizer(x).is_abelian())
            .unwrap();
        assert!(g.centralizer(witness).order() > 4);
    }

    #[test]
    fn subgroup_as_group_trivial_and_whole() {
        let g = q8();
        let (w, map) = g.whole().as_group();
        assert_eq!(
            w,
            FiniteGroup {
                generators: Vec::new(),
                generator_names: Vec::new(),
                labels: None,
                ..g.clone()
            }
        );
        assert_eq!(map, (0..8).collect::<Vec<_>>());
        let t = Subgroup::new(&g, &[0]).unwrap();
        assert_eq!(t.as_group().0.order(), 1);
    }

    #[test]
    fn subgroup_validation() {
        let g = s3();
        assert!(Subgroup::new(&g, &[1]).is_err());
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert!(Subgroup::new(&g, &[0, t]).is_ok());
        let r = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        assert!(Subgroup::new(&g, &[0, r]).is_err());
    }
}
