//! Power-conjugate presentations.
//!
//! The group is built bottom-up as a tower of cyclic extensions
//! `G_n ≤ G_{n-1} ≤ … ≤ G_1`, where `G_i = ⟨g_i, G_{i+1}⟩`. At each layer the
//! conjugation action of `g_i` on `G_{i+1}` is extended from generator images
//! to an automorphism. Whenever the relations force identifications in
//! `G_{i+1}` (the action is not well defined, not injective, or `g_i^r` does
//! not act as the right inner automorphism) the layer is replaced by the
//! forced quotient and the check repeats. The final order is compared with the
//! declared order, or with the product of relative orders.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::BuildError;
use crate::bitset::BitSet;
use crate::group::{AssociativityCheck, FiniteGroup};
use crate::word::{parse_word, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct PcPresentation {
    pub generators: Vec<String>,
    pub relative_orders: Vec<u32>,
    /// `g^r = word`; omitted powers are trivial.
    #[cfg_attr(feature = "serde", serde(default))]
    pub powers: Vec<PowerRelation>,
    /// Omitted pairs commute.
    #[cfg_attr(feature = "serde", serde(default))]
    pub relations: Vec<ConjugateRelation>,
    /// Expected group order; defaults to the product of relative orders.
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct PowerRelation {
    pub generator: String,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)
)]
pub enum ConjugateRelation {
    /// `by⁻¹ generator by = word`.
    Conjugate {
        generator: String,
        by: String,
        word: String,
    },
    /// `by generator by⁻¹ = word`.
    Action {
        by: String,
        generator: String,
        word: String,
    },
    /// `[left, right] = left⁻¹ right⁻¹ left right = word`.
    Commutator { left: String, right: String, word: String },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Direction {
    /// images under `x ↦ g⁻¹ x g`
    Conjugate,
    /// images under `x ↦ g x g⁻¹`
    Action,
}

struct LayerSpec {
    relative_order: usize,
    power: Word,
    direction: Direction,
    images: BTreeMap<usize, Word>,
}

impl PcPresentation {
    /// Convenience constructor from `(name, relative order)` pairs.
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, u32)>) -> Self {
        let (generators, relative_orders) = gens.into_iter().map(|(s, r)| (s.into(), r)).unzip();
        PcPresentation {
            generators,
            relative_orders,
            powers: Vec::new(),
            relations: Vec::new(),
            order: None,
        }
    }

    pub fn power(mut self, generator: &str, word: &str) -> Self {
        self.powers.push(PowerRelation {
            generator: generator.into(),
            word: word.into(),
        });
        self
    }

    pub fn conjugate(mut self, generator: &str, by: &str, word: &str) -> Self {
        self.relations.push(ConjugateRelation::Conjugate {
            generator: generator.into(),
            by: by.into(),
            word: word.into(),
        });
        self
    }

    pub fn action(mut self, by: &str, generator: &str, word: &str) -> Self {
        self.relations.push(ConjugateRelation::Action {
            by: by.into(),
            generator: generator.into(),
            word: word.into(),
        });
        self
    }

    pub fn commutator(mut self, left: &str, right: &str, word: &str) -> Self {
        self.relations.push(ConjugateRelation::Commutator {
            left: left.into(),
            right: right.into(),
            word: word.into(),
        });
        self
    }

    pub fn with_order(mut self, order: u64) -> Self {
        self.order = Some(order);
        self
    }

    /// Product of the relative orders.
    pub fn candidate_order(&self) -> u64 {
        self.relative_orders.iter().map(|&r| r as u64).product()
    }

    fn index(&self, name: &str, context: &str) -> Result<usize, BuildError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| BuildError::BadRelation(format!("{context}: unknown generator `{name}`")))
    }

    fn word(&self, text: &str, above: usize, context: &str) -> Result<Word, BuildError> {
        let w = parse_word(text, &self.generators).map_err(|e| BuildError::BadRelation(format!("{context}: {e}")))?;
        if let Some(&(j, _)) = w.iter().find(|&&(j, _)| j <= above) {
            return Err(BuildError::BadRelation(format!(
                "{context}: word may only use generators after `{}`, found `{}`",
                self.generators[above], self.generators[j]
            )));
        }
        Ok(w)
    }

    fn layers(&self) -> Result<Vec<LayerSpec>, BuildError> {
        let n = self.generators.len();
        if self.relative_orders.len() != n {
            return Err(BuildError::BadRelation(format!(
                "{} generators but {} relative orders",
                n,
                self.relative_orders.len()
            )));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.is_empty() || g.contains(|c: char| c.is_whitespace() || "^*".contains(c)) || g == "1" {
                return Err(BuildError::BadRelation(format!("invalid generator name `{g}`")));
            }
            if self.generators[..i].contains(g) {
                return Err(BuildError::BadRelation(format!("duplicate generator `{g}`")));
            }
            if self.relative_orders[i] < 2 {
                return Err(BuildError::BadRelation(format!(
                    "relative order of `{g}` must be at least 2"
                )));
            }
        }
        let mut layers: Vec<LayerSpec> = self
            .relative_orders
            .iter()
            .map(|&r| LayerSpec {
                relative_order: r as usize,
                power: Vec::new(),
                direction: Direction::Conjugate,
                images: BTreeMap::new(),
            })
            .collect();
        let mut seen_power = vec![false; n];
        for p in &self.powers {
            let ctx = format!("power relation for `{}`", p.generator);
            let i = self.index(&p.generator, &ctx)?;
            if core::mem::replace(&mut seen_power[i], true) {
                return Err(BuildError::BadRelation(format!("{ctx}: given twice")));
            }
            layers[i].power = self.word(&p.word, i, &ctx)?;
        }
        let mut direction: Vec<Option<Direction>> = vec![None; n];
        for rel in &self.relations {
            let (i, j, dir, image, ctx) = match rel {
                ConjugateRelation::Conjugate { generator, by, word } => {
                    let ctx = format!("relation {generator}^{by} = {word}");
                    let (i, j) = (self.index(by, &ctx)?, self.index(generator, &ctx)?);
                    if i >= j {
                        return Err(BuildError::BadRelation(format!(
                            "{ctx}: `{by}` must precede `{generator}`"
                        )));
                    }
                    (i, j, Direction::Conjugate, self.word(word, i, &ctx)?, ctx)
                }
                ConjugateRelation::Action { by, generator, word } => {
                    let ctx = format!("relation {by} {generator} {by}^-1 = {word}");
                    let (i, j) = (self.index(by, &ctx)?, self.index(generator, &ctx)?);
                    if i >= j {
                        return Err(BuildError::BadRelation(format!(
                            "{ctx}: `{by}` must precede `{generator}`"
                        )));
                    }
                    (i, j, Direction::Action, self.word(word, i, &ctx)?, ctx)
                }
                ConjugateRelation::Commutator { left, right, word } => {
                    let ctx = format!("relation [{left},{right}] = {word}");
                    let (a, b) = (self.index(left, &ctx)?, self.index(right, &ctx)?);
                    if a == b {
                        return Err(BuildError::BadRelation(format!("{ctx}: same generator twice")));
                    }
                    let (i, j) = (a.min(b), a.max(b));
                    let w = self.word(word, i, &ctx)?;
                    // [g_j, g_i] = w  gives  g_j^{g_i} = g_j w
                    let w = if a > b {
                        w
                    } else {
                        w.iter().rev().map(|&(g, e)| (g, -e)).collect()
                    };
                    let mut image = vec![(j, 1)];
                    image.extend(w);
                    (i, j, Direction::Conjugate, image, ctx)
                }
            };
            match direction[i] {
                Some(d) if d != dir => {
                    return Err(BuildError::BadRelation(format!(
                        "{ctx}: mixes g x g^-1 and g^-1 x g forms for `{}`",
                        self.generators[i]
                    )))
                }
                _ => direction[i] = Some(dir),
            }
            if layers[i].images.insert(j, image).is_some() {
                return Err(BuildError::BadRelation(format!("{ctx}: conjugate given twice")));
            }
        }
        for (l, d) in layers.iter_mut().zip(direction) {
            l.direction = d.unwrap_or(Direction::Conjugate);
        }
        Ok(layers)
    }
}

/// A group table under construction with exponent-vector labels.
struct Layer {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
    labels: Vec<Vec<u32>>,
}

impl Layer {
    fn trivial() -> Self {
        Layer {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            gens: Vec::new(),
            labels: vec![Vec::new()],
        }
    }

    #[inline]
    fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv[g as usize], x), g)
    }

    fn eval(&self, word: &Word, offset: usize) -> u32 {
        let mut acc = 0;
        for &(j, e) in word {
            let g = self.gens[j - offset];
            let base = if e < 0 { self.inv[g as usize] } else { g };
            for _ in 0..e.unsigned_abs() {
                acc = self.mul(acc, base);
            }
        }
        acc
    }

    fn closure(&self, gens: &[u32]) -> BitSet {
        let mut set = BitSet::from_indices(self.order, [0]);
        let mut stack = vec![0u32];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y as usize) {
                    stack.push(y);
                }
            }
        }
        set
    }

    fn normal_closure(&self, seeds: &[u32]) -> BitSet {
        let mut gens: Vec<u32> = seeds.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        loop {
            let h = self.closure(&gens);
            let mut added = Vec::new();
            for &x in &gens {
                for &k in &self.gens {
                    let c = self.conj(x, k);
                    if !h.contains(c as usize) && !added.contains(&c) {
                        added.push(c);
                    }
                }
            }
            if added.is_empty() {
                return h;
            }
            gens.extend(added);
        }
    }

    /// Quotient by a normal subgroup; returns the element map.
    fn quotient(&self, n: &BitSet) -> (Layer, Vec<u32>) {
        let members = n.to_vec();
        let mut coset = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x as u32);
            for &m in &members {
                coset[self.mul(x as u32, m as u32) as usize] = id;
            }
        }
        let q = reps.len();
        let mut mul = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q + j] = coset[self.mul(a, b) as usize];
            }
        }
        let layer = Layer {
            order: q,
            mul,
            inv: reps.iter().map(|&a| coset[self.inv[a as usize] as usize]).collect(),
            gens: self.gens.iter().map(|&g| coset[g as usize]).collect(),
            labels: reps.iter().map(|&a| self.labels[a as usize].clone()).collect(),
        };
        (layer, coset)
    }

    /// Extends generator images to a map on all elements along a spanning
    /// tree, reporting every edge where the extension is not multiplicative.
    fn extend(&self, images: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let mut sigma = vec![u32::MAX; self.order];
        sigma[0] = 0;
        let mut queue = alloc::collections::VecDeque::from([0u32]);
        let mut bad = Vec::new();
        while let Some(x) = queue.pop_front() {
            for (k, &g) in self.gens.iter().enumerate() {
                let y = self.mul(x, g) as usize;
                let s = self.mul(sigma[x as usize], images[k]);
                if sigma[y] == u32::MAX {
                    sigma[y] = s;
                    queue.push_back(y as u32);
                } else if sigma[y] != s {
                    bad.push(self.mul(self.inv[sigma[y] as usize], s));
                }
            }
        }
        (sigma, bad)
    }
}

fn label_string(names: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Builds the group defined by a presentation, enforcing every relation.
pub fn collect(pc: &PcPresentation) -> Result<FiniteGroup, BuildError> {
    let layers = pc.layers()?;
    let n = layers.len();
    let mut k = Layer::trivial();
    for i in (0..n).rev() {
        let spec = &layers[i];
        let r = spec.relative_order;
        let offset = i + 1;
        loop {
            let w = k.eval(&spec.power, offset);
            let images: Vec<u32> = (0..k.gens.len())
                .map(|t| match spec.images.get(&(offset + t)) {
                    Some(word) => k.eval(word, offset),
                    None => k.gens[t],
                })
                .collect();
            let (sigma, bad) = k.extend(&images);
            let mut forced = bad;
            if forced.is_empty() {
                forced.extend((0..k.order as u32).filter(|&x| x != 0 && sigma[x as usize] == 0));
            }
            if forced.is_empty() {
                if sigma[w as usize] != w {
                    forced.push(k.mul(k.inv[w as usize], sigma[w as usize]));
                }
                for &g in &k.gens {
                    let mut s = g;
                    for _ in 0..r {
                        s = sigma[s as usize];
                    }
                    let expected = match spec.direction {
                        Direction::Conjugate => k.conj(g, w),
                        Direction::Action => k.conj(g, k.inv[w as usize]),
                    };
                    if s != expected {
                        forced.push(k.mul(k.inv[expected as usize], s));
                    }
                }
            }
            if !forced.is_empty() {
                let normal = k.normal_closure(&forced);
                k = k.quotient(&normal).0;
                continue;
            }
            // phi(x) = g^-1 x g
            let phi = match spec.direction {
                Direction::Conjugate => sigma,
                Direction::Action => {
                    let mut inv = vec![0u32; k.order];
                    for (x, &s) in sigma.iter().enumerate() {
                        inv[s as usize] = x as u32;
                    }
                    inv
                }
            };
            if k.order.saturating_mul(r) > super::MAX_ORDER {
                return Err(BuildError::TooLarge {
                    order: k.order as u64 * r as u64,
                });
            }
            k = extend_cyclic(&k, &phi, r, w);
            break;
        }
    }
    let expected = pc.order.unwrap_or_else(|| pc.candidate_order());
    if k.order as u64 != expected {
        return Err(BuildError::InconsistentPresentation {
            expected,
            actual: k.order as u64,
        });
    }
    let labels = k.labels.iter().map(|e| label_string(&pc.generators, e)).collect();
    let gens: Vec<usize> = k.gens.iter().map(|&g| g as usize).collect();
    let g = FiniteGroup::from_flat(k.mul, k.order, AssociativityCheck::Auto).map_err(BuildError::Group)?;
    Ok(g.with_labels(labels).with_generators(gens, pc.generators.clone()))
}

/// `⟨g, K⟩` with `g^r = w` and `g⁻¹ x g = phi(x)`; element `(a, x)` is
/// `g^a x`, stored at index `a·|K| + x`.
#[allow(clippy::needless_range_loop)]
fn extend_cyclic(k: &Layer, phi: &[u32], r: usize, w: u32) -> Layer {
    let m = k.order;
    let mut phi_pow: Vec<Vec<u32>> = vec![(0..m as u32).collect()];
    for b in 1..r {
        let prev = &phi_pow[b - 1];
        phi_pow.push(prev.iter().map(|&x| phi[x as usize]).collect());
    }
    let order = m * r;
    let mut mul = vec![0u32; order * order];
    for a in 0..r {
        for x in 0..m {
            let row = (a * m + x) * order;
            for b in 0..r {
                let px = phi_pow[b][x];
                let (c, head) = if a + b < r {
                    (a + b, px)
                } else {
                    (a + b - r, k.mul(w, px))
                };
                for y in 0..m {
                    mul[row + b * m + y] = (c * m) as u32 + k.mul(head, y as u32);
                }
            }
        }
    }
    let mut inv = vec![0u32; order];
    for x in 0..order {
        let row = &mul[x * order..(x + 1) * order];
        inv[x] = row.iter().position(|&v| v == 0).expect("group extension") as u32;
    }
    let mut gens = vec![m as u32];
    gens.extend(&k.gens);
    let mut labels = Vec::with_capacity(order);
    for a in 0..r {
        for x in 0..m {
            let mut l = vec![a as u32];
            l.extend(&k.labels[x]);
            labels.push(l);
        }
    }
    Layer {
        order,
        mul,
        inv,
        gens,
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_three() {
        let g = collect(&PcPresentation::new([("a", 3)])).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        assert_eq!(g.labels().unwrap(), &["1", "a", "a^2"]);
    }

    #[test]
    fn c4_as_two_layers() {
        let g = collect(&PcPresentation::new([("a", 2), ("b", 2)]).power("a", "b")).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn s3_both_directions() {
        let a = collect(&PcPresentation::new([("s", 2), ("r", 3)]).conjugate("r", "s", "r^2")).unwrap();
        let b = collect(&PcPresentation::new([("s", 2), ("r", 3)]).action("s", "r", "r^-1")).unwrap();
        let c = collect(&PcPresentation::new([("s", 2), ("r", 3)]).commutator("r", "s", "r")).unwrap();
        for g in [a, b, c] {
            assert_eq!(g.order(), 6);
            assert_eq!(g.center().order(), 1);
        }
    }

    #[test]
    fn inconsistent_power_collapses() {
        // s^-1 r s = r^2 with r of order 5 is not an automorphism of order 2
        let pc = PcPresentation::new([("s", 2), ("r", 5)]).conjugate("r", "s", "r^2");
        assert!(matches!(
            collect(&pc),
            Err(BuildError::InconsistentPresentation {
                expected: 10,
                actual: 2
            })
        ));
    }

    #[test]
    fn declared_order_overrides_product() {
        // b has nominal relative order 9 but the action forces b^3 = 1
        let pc = PcPresentation::new([("a", 2), ("b", 9)])
            .conjugate("b", "a", "b^2")
            .with_order(6);
        assert_eq!(collect(&pc).unwrap().order(), 6);
    }

    #[test]
    fn relation_errors() {
        let pc = PcPresentation::new([("a", 2), ("b", 2)]).conjugate("a", "b", "a");
        assert!(matches!(collect(&pc), Err(BuildError::BadRelation(_))));
        let pc = PcPresentation::new([("a", 2), ("b", 2)]).power("b", "a");
        assert!(matches!(collect(&pc), Err(BuildError::BadRelation(_))));
        let pc = PcPresentation::new([("a", 2), ("b", 2)]).power("a", "c");
        assert!(matches!(collect(&pc), Err(BuildError::BadRelation(_))));
        let pc = PcPresentation::new([("a", 1)]);
        assert!(matches!(collect(&pc), Err(BuildError::BadRelation(_))));
    }
}
