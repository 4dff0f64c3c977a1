//! Semidirect products and the Frobenius criterion.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{BuildError, MAX_ORDER};
use crate::bitset::BitSet;
use crate::group::{AssociativityCheck, FiniteGroup, Subgroup};
use crate::word::{eval_word, parse_word};

/// An automorphism of the normal factor, either as a full element
/// permutation or by the images of its named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)
)]
pub enum Automorphism {
    Permutation { images: Vec<usize> },
    Generators { images: Vec<String> },
}

/// Resolves an [`Automorphism`] to an element permutation of `n`.
pub fn automorphism_table(n: &FiniteGroup, aut: &Automorphism) -> Result<Vec<usize>, BuildError> {
    match aut {
        Automorphism::Permutation { images } => {
            check_automorphism(n, images)?;
            Ok(images.clone())
        }
        Automorphism::Generators { images } => {
            let gens = n.generating_set();
            if images.len() != gens.len() {
                return Err(BuildError::NotAutomorphism(format!(
                    "{} generator images for {} generators",
                    images.len(),
                    gens.len()
                )));
            }
            let names = n.generator_names();
            let mut targets = Vec::with_capacity(images.len());
            for text in images {
                let w =
                    parse_word(text, names).map_err(|e| BuildError::NotAutomorphism(format!("image `{text}`: {e}")))?;
                targets.push(eval_word(&w, &gens, 0, &|a, b| n.mul(*a, *b), &|a| n.inv(*a)));
            }
            extend_hom(n, &gens, &targets)
        }
    }
}

/// Extends generator images to an automorphism, or reports why not.
pub fn extend_hom(n: &FiniteGroup, gens: &[usize], targets: &[usize]) -> Result<Vec<usize>, BuildError> {
    let mut sigma = vec![usize::MAX; n.order()];
    sigma[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &t) in gens.iter().zip(targets) {
            let y = n.mul(x, g);
            let s = n.mul(sigma[x], t);
            if sigma[y] == usize::MAX {
                sigma[y] = s;
                queue.push_back(y);
            } else if sigma[y] != s {
                return Err(BuildError::NotAutomorphism(format!(
                    "generator images do not define a homomorphism (element {y})"
                )));
            }
        }
    }
    if sigma.contains(&usize::MAX) {
        return Err(BuildError::NotAutomorphism(
            "generators do not generate the group".into(),
        ));
    }
    let mut hit = BitSet::new(n.order());
    if sigma.iter().any(|&s| !hit.insert(s)) {
        return Err(BuildError::NotAutomorphism("map is not injective".into()));
    }
    Ok(sigma)
}

fn check_automorphism(n: &FiniteGroup, perm: &[usize]) -> Result<(), BuildError> {
    let order = n.order();
    let mut hit = BitSet::new(order);
    if perm.len() != order || perm.iter().any(|&s| s >= order || !hit.insert(s)) {
        return Err(BuildError::NotAutomorphism("not a bijection of the elements".into()));
    }
    for x in 0..order {
        for y in 0..order {
            if perm[n.mul(x, y)] != n.mul(perm[x], perm[y]) {
                return Err(BuildError::NotAutomorphism(format!(
                    "image of {x}*{y} is not the product of images"
                )));
            }
        }
    }
    Ok(())
}

/// `N ⋊ H` where the `k`-th generator of `H` acts on `N` by
/// `gen_actions[k]`. Pair `(n, h)` has index `n·|H| + h` and
/// `(n₁,h₁)(n₂,h₂) = (n₁·θ_{h₁}(n₂), h₁h₂)`.
pub fn semidirect(n: &FiniteGroup, h: &FiniteGroup, gen_actions: &[Vec<usize>]) -> Result<FiniteGroup, BuildError> {
    let hgens = h.generating_set();
    if gen_actions.len() != hgens.len() {
        return Err(BuildError::NotAHomomorphism(format!(
            "{} actions for {} complement generators",
            gen_actions.len(),
            hgens.len()
        )));
    }
    for a in gen_actions {
        check_automorphism(n, a)?;
    }
    let (no, ho) = (n.order(), h.order());
    if no.saturating_mul(ho) > MAX_ORDER {
        return Err(BuildError::TooLarge {
            order: (no * ho) as u64,
        });
    }
    // theta[x] = θ_x, built by θ_{xg} = θ_x ∘ θ_g
    let mut theta: Vec<Option<Vec<usize>>> = vec![None; ho];
    theta[0] = Some((0..no).collect());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, act) in hgens.iter().zip(gen_actions) {
            let y = h.mul(x, g);
            let tx = theta[x].as_ref().unwrap();
            let composed: Vec<usize> = (0..no).map(|m| tx[act[m]]).collect();
            match &theta[y] {
                None => {
                    theta[y] = Some(composed);
                    queue.push_back(y);
                }
                Some(existing) if *existing != composed => {
                    return Err(BuildError::NotAHomomorphism(format!(
                        "action is inconsistent on complement element {y}"
                    )));
                }
                _ => {}
            }
        }
    }
    let theta: Vec<Vec<usize>> = theta.into_iter().map(Option::unwrap).collect();
    let order = no * ho;
    let mut mul = vec![0u32; order * order];
    for n1 in 0..no {
        for (h1, t) in theta.iter().enumerate() {
            let row = (n1 * ho + h1) * order;
            for n2 in 0..no {
                let nn = n.mul(n1, t[n2]) * ho;
                for h2 in 0..ho {
                    mul[row + n2 * ho + h2] = (nn + h.mul(h1, h2)) as u32;
                }
            }
        }
    }
    let g = FiniteGroup::from_flat(mul, order, AssociativityCheck::Auto).map_err(BuildError::Group)?;
    let mut gens: Vec<usize> = n.generating_set().iter().map(|&x| x * ho).collect();
    gens.extend(hgens.iter().copied());
    let mut names: Vec<String> = n.generator_names().to_vec();
    if names.len() != n.generating_set().len() {
        names = (1..=n.generating_set().len()).map(|k| format!("n{k}")).collect();
    }
    let mut hnames: Vec<String> = h.generator_names().to_vec();
    if hnames.len() != hgens.len() {
        hnames = (1..=hgens.len()).map(|k| format!("h{k}")).collect();
    }
    for hn in hnames {
        let mut name = hn;
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let labels = match (n.labels(), h.labels()) {
        (Some(nl), Some(hl)) => Some((0..order).map(|i| format!("({},{})", nl[i / ho], hl[i % ho])).collect()),
        _ => None,
    };
    let g = g.with_generators(gens, names);
    Ok(match labels {
        Some(l) => g.with_labels(l),
        None => g,
    })
}

/// Outcome of [`frobenius_check`].
#[derive(Clone, Debug)]
pub struct FrobeniusCheck<'a> {
    pub is_frobenius: bool,
    pub kernel: Option<Subgroup<'a>>,
    /// Some `g ∉ H` with `H ∩ gHg⁻¹ ≠ 1`, when the check fails.
    pub witness: Option<usize>,
}

/// Tests whether `h` is a Frobenius complement in `g`.
pub fn frobenius_check<'a>(g: &'a FiniteGroup, h: &Subgroup<'a>) -> FrobeniusCheck<'a> {
    let fail = |witness| FrobeniusCheck {
        is_frobenius: false,
        kernel: None,
        witness,
    };
    if h.order() == 1 || h.order() == g.order() {
        return fail(None);
    }
    let mut covered = h.members().clone();
    let mut seen_coset = BitSet::new(g.order());
    for x in 0..g.order() {
        if h.contains(x) || seen_coset.contains(x) {
            continue;
        }
        for &k in h.elements() {
            seen_coset.insert(g.mul(x, k));
        }
        let xinv = g.inv(x);
        for &k in h.elements().iter().skip(1) {
            let c = g.mul(g.mul(x, k), xinv);
            if h.contains(c) {
                return fail(Some(x));
            }
            covered.insert(c);
        }
    }
    let kernel: Vec<usize> = (0..g.order()).filter(|&x| x == 0 || !covered.contains(x)).collect();
    let kernel = Subgroup::new(g, &kernel).expect("Frobenius kernel is a subgroup");
    assert_eq!(kernel.order() * h.order(), g.order(), "Frobenius kernel has index |H|");
    FrobeniusCheck {
        is_frobenius: true,
        kernel: Some(kernel),
        witness: None,
    }
}
