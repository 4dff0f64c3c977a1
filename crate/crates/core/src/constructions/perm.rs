//! Permutation groups of small degree, closed under composition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{BuildError, MAX_ORDER};
use crate::group::{AssociativityCheck, FiniteGroup};

pub const MAX_DEGREE: usize = 64;

/// Group generated by permutations of `0..degree` given as image lists.
///
/// The product `x*y` applies `x` first, then `y`. Elements are numbered in
/// breadth-first order from the identity.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>]) -> Result<FiniteGroup, BuildError> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(BuildError::InvalidParameter(format!(
            "permutation degree must be in 1..={MAX_DEGREE}, got {degree}"
        )));
    }
    let mut perms: Vec<Vec<u8>> = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&i| i >= degree || core::mem::replace(&mut seen[i], true)) {
            return Err(BuildError::InvalidParameter(format!(
                "generator {k} is not a permutation of 0..{degree}"
            )));
        }
        perms.push(g.iter().map(|&i| i as u8).collect());
    }
    let compose = |x: &[u8], y: &[u8]| -> Vec<u8> { x.iter().map(|&i| y[i as usize]).collect() };
    let identity: Vec<u8> = (0..degree as u8).collect();
    let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in &perms {
            let y = compose(&elems[i], g);
            if !index.contains_key(&y) {
                if elems.len() >= MAX_ORDER {
                    return Err(BuildError::TooLarge {
                        order: elems.len() as u64 + 1,
                    });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut mul = vec![0u32; n * n];
    for (a, x) in elems.iter().enumerate() {
        for (b, y) in elems.iter().enumerate() {
            mul[a * n + b] = index[&compose(x, y)] as u32;
        }
    }
    let gen_idx: Vec<usize> = perms.iter().map(|p| index[p]).collect();
    let names = (1..=gen_idx.len()).map(|k| format!("p{k}")).collect();
    let g = FiniteGroup::from_flat(mul, n, AssociativityCheck::Auto).map_err(BuildError::Group)?;
    Ok(g.with_generators(gen_idx, names))
}
