//! Builders turning a [`GroupSpec`] into a validated [`FiniteGroup`].

mod pc;
mod perm;
mod semidirect;
mod stem;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::closed_forms::Family;
use crate::group::{AssociativityCheck, FiniteGroup, GroupError};

pub use pc::{collect, ConjugateRelation, PcPresentation, PowerRelation};
pub use perm::{permutation_group, MAX_DEGREE};
pub use semidirect::{automorphism_table, frobenius_check, semidirect, Automorphism, FrobeniusCheck};
pub use stem::{stem_group, stem_presentation};

/// Largest group order any builder will tabulate.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("inconsistent presentation: expected order {expected}, relations force order {actual}")]
    InconsistentPresentation { expected: u64, actual: u64 },
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("action is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("group of order {order} exceeds the table limit")]
    TooLarge { order: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Which extraspecial group of a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum ExtraspecialKind {
    /// Odd `p`, exponent `p`: central product of Heisenberg groups.
    OddExponentP,
    /// `p = 2`: central product of copies of `D8`.
    TwoType,
}

/// A serializable recipe for a group.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)
)]
pub enum GroupSpec {
    Trivial,
    Cyclic {
        order: u64,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
    },
    /// Dihedral group of the given order `2n`.
    Dihedral {
        order: u64,
    },
    /// Dicyclic group of order `4n ≥ 8`; generalized quaternion when the
    /// order is a power of two.
    Quaternion {
        order: u64,
    },
    /// Semidihedral group of order `2^n ≥ 16`.
    Semidihedral {
        order: u64,
    },
    Extraspecial {
        p: u64,
        order: u64,
        #[cfg_attr(feature = "serde", serde(rename = "type"))]
        kind: ExtraspecialKind,
    },
    /// Permutations of `0..degree` as image lists.
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    /// Cayley table, `rows[x][y] = x*y`.
    Table {
        rows: Vec<Vec<usize>>,
    },
    Pc {
        presentation: PcPresentation,
    },
    /// `normal ⋊ complement`, one automorphism per complement generator.
    Semidirect {
        normal: Box<GroupSpec>,
        complement: Box<GroupSpec>,
        action: Vec<Automorphism>,
    },
    Stem {
        family: Family,
        p: u64,
    },
}

impl GroupSpec {
    pub fn cyclic(order: u64) -> Self {
        GroupSpec::Cyclic { order }
    }

    pub fn dihedral(order: u64) -> Self {
        GroupSpec::Dihedral { order }
    }

    pub fn quaternion(order: u64) -> Self {
        GroupSpec::Quaternion { order }
    }

    pub fn product(factors: impl IntoIterator<Item = GroupSpec>) -> Self {
        GroupSpec::DirectProduct {
            factors: factors.into_iter().collect(),
        }
    }

    pub fn pc(presentation: PcPresentation) -> Self {
        GroupSpec::Pc { presentation }
    }

    /// Order the builder must produce, when it is known without building.
    pub fn predicted_order(&self) -> Option<u64> {
        Some(match self {
            GroupSpec::Trivial => 1,
            GroupSpec::Cyclic { order }
            | GroupSpec::Dihedral { order }
            | GroupSpec::Quaternion { order }
            | GroupSpec::Semidihedral { order }
            | GroupSpec::Extraspecial { order, .. } => *order,
            GroupSpec::DirectProduct { factors } => factors
                .iter()
                .map(GroupSpec::predicted_order)
                .try_fold(1u64, |acc, o| o.map(|o| acc * o))?,
            GroupSpec::Table { rows } => rows.len() as u64,
            GroupSpec::Pc { presentation } => presentation.order.unwrap_or_else(|| presentation.candidate_order()),
            GroupSpec::Semidirect { normal, complement, .. } => {
                normal.predicted_order()? * complement.predicted_order()?
            }
            GroupSpec::Stem { family, p } => p.pow(family.rank()),
            GroupSpec::Permutations { .. } => return None,
        })
    }
}

fn check_order(order: u64) -> Result<usize, BuildError> {
    if order == 0 {
        return Err(BuildError::InvalidParameter("order must be positive".into()));
    }
    if order > MAX_ORDER as u64 {
        return Err(BuildError::TooLarge { order });
    }
    Ok(order as usize)
}

fn power_of_two(order: u64) -> Option<u32> {
    (order.is_power_of_two()).then(|| order.trailing_zeros())
}

/// `⟨a, b⟩` with `a` of order `m`, elements `a^i b^j` at index `i + m j`
/// (`j ∈ {0,1}`), `b a b⁻¹ = a^u` and `b² = a^s`.
fn metacyclic(m: usize, u: usize, s: usize, names: [&str; 2]) -> Result<FiniteGroup, BuildError> {
    let n = 2 * m;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (i, j) = (x % m, x / m);
        for y in 0..n {
            let (k, l) = (y % m, y / m);
            // a^i b^j a^k b^l = a^(i + u^j k) b^(j + l)
            let k2 = if j == 1 { (u * k) % m } else { k };
            let mut e = (i + k2) % m;
            let mut f = j + l;
            if f == 2 {
                e = (e + s) % m;
                f = 0;
            }
            mul[x * n + y] = (e + m * f) as u32;
        }
    }
    let gens = if m > 1 { vec![1, m] } else { vec![m] };
    let gnames: Vec<String> = if m > 1 {
        names.iter().map(|&s| String::from(s)).collect()
    } else {
        vec![String::from(names[1])]
    };
    let g = FiniteGroup::from_flat(mul, n, AssociativityCheck::Auto)?;
    Ok(g.with_generators(gens, gnames))
}

fn cyclic(order: u64) -> Result<FiniteGroup, BuildError> {
    let n = check_order(order)?;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = ((x + y) % n) as u32;
        }
    }
    let g = FiniteGroup::from_flat(mul, n, AssociativityCheck::Auto)?;
    Ok(if n > 1 {
        g.with_generators(vec![1], vec!["a".into()])
    } else {
        g
    })
}

/// Direct product with lexicographic pair labels `(x, y) ↦ x·|H| + y`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, BuildError> {
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    if n > MAX_ORDER {
        return Err(BuildError::TooLarge { order: n as u64 });
    }
    let mut mul = vec![0u32; n * n];
    for x1 in 0..a {
        for y1 in 0..b {
            let row = (x1 * b + y1) * n;
            for x2 in 0..a {
                let base = g.mul(x1, x2) * b;
                for y2 in 0..b {
                    mul[row + x2 * b + y2] = (base + h.mul(y1, y2)) as u32;
                }
            }
        }
    }
    let out = FiniteGroup::from_flat(mul, n, AssociativityCheck::Auto)?;
    let mut gens: Vec<usize> = g.generating_set().iter().map(|&x| x * b).collect();
    gens.extend(h.generating_set());
    let names = factor_names(g, 1).chain(factor_names(h, 2)).collect();
    Ok(out.with_generators(gens, names))
}

fn factor_names(g: &FiniteGroup, k: usize) -> impl Iterator<Item = String> + '_ {
    let names = g.generator_names();
    (0..g.generating_set().len()).map(move |t| {
        let base = names.get(t).cloned().unwrap_or_else(|| format!("g{}", t + 1));
        format!("{base}_{k}")
    })
}

fn product_of(factors: &[GroupSpec]) -> Result<FiniteGroup, BuildError> {
    let built: Vec<FiniteGroup> = factors.iter().map(build).collect::<Result<_, _>>()?;
    let names: Vec<String> = built
        .iter()
        .enumerate()
        .flat_map(|(k, f)| factor_names(f, k + 1))
        .collect();
    let mut acc = FiniteGroup::trivial();
    for f in &built {
        acc = direct_product(&acc, f)?;
    }
    let gens = acc.generators().to_vec();
    Ok(acc.with_generators(gens, names))
}

fn extraspecial(p: u64, order: u64, kind: ExtraspecialKind) -> Result<FiniteGroup, BuildError> {
    check_order(order)?;
    let bad = || BuildError::InvalidParameter(format!("no extraspecial group of order {order} for p = {p}"));
    if p < 2 || !(2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        return Err(bad());
    }
    let mut k = 0u32;
    let mut o = order;
    while o.is_multiple_of(p) {
        o /= p;
        k += 1;
    }
    if o != 1 || k < 3 || k.is_multiple_of(2) {
        return Err(bad());
    }
    match (kind, p == 2) {
        (ExtraspecialKind::OddExponentP, true) | (ExtraspecialKind::TwoType, false) => {
            return Err(BuildError::InvalidParameter(format!(
                "extraspecial type {kind:?} does not exist for p = {p}"
            )))
        }
        _ => {}
    }
    let n = ((k - 1) / 2) as usize;
    let mut gens: Vec<(String, u32)> = Vec::new();
    for i in 1..=n {
        gens.push((format!("x{i}"), p as u32));
    }
    for i in 1..=n {
        gens.push((format!("y{i}"), p as u32));
    }
    gens.push(("z".into(), p as u32));
    let mut pres = PcPresentation::new(gens);
    for i in 1..=n {
        pres = pres.commutator(&format!("y{i}"), &format!("x{i}"), "z");
        if p == 2 {
            pres = pres.power(&format!("x{i}"), "z");
        }
    }
    collect(&pres)
}

/// Builds a group from its recipe.
pub fn build(spec: &GroupSpec) -> Result<FiniteGroup, BuildError> {
    let g = match spec {
        GroupSpec::Trivial => FiniteGroup::trivial(),
        GroupSpec::Cyclic { order } => cyclic(*order)?,
        GroupSpec::DirectProduct { factors } => product_of(factors)?,
        GroupSpec::Dihedral { order } => {
            let n = check_order(*order)?;
            if n % 2 != 0 {
                return Err(BuildError::InvalidParameter(format!(
                    "dihedral order must be even, got {n}"
                )));
            }
            let m = n / 2;
            metacyclic(m, m - 1, 0, ["r", "s"])?
        }
        GroupSpec::Quaternion { order } => {
            let n = check_order(*order)?;
            if n % 4 != 0 || n < 8 {
                return Err(BuildError::InvalidParameter(format!(
                    "quaternion order must be a multiple of 4 and at least 8, got {n}"
                )));
            }
            let m = n / 2;
            metacyclic(m, m - 1, m / 2, ["a", "b"])?
        }
        GroupSpec::Semidihedral { order } => {
            let n = check_order(*order)?;
            if power_of_two(*order).is_none_or(|e| e < 4) {
                return Err(BuildError::InvalidParameter(format!(
                    "semidihedral order must be a power of two >= 16, got {n}"
                )));
            }
            let m = n / 2;
            metacyclic(m, m / 2 - 1, 0, ["a", "b"])?
        }
        GroupSpec::Extraspecial { p, order, kind } => extraspecial(*p, *order, *kind)?,
        GroupSpec::Permutations { degree, generators } => permutation_group(*degree, generators)?,
        GroupSpec::Table { rows } => {
            check_order(rows.len().max(1) as u64)?;
            FiniteGroup::from_table(rows, AssociativityCheck::Auto)?
        }
        GroupSpec::Pc { presentation } => collect(presentation)?,
        GroupSpec::Semidirect {
            normal,
            complement,
            action,
        } => {
            let n = build(normal)?;
            let h = build(complement)?;
            let tables = action
                .iter()
                .map(|a| automorphism_table(&n, a))
                .collect::<Result<Vec<_>, _>>()?;
            semidirect(&n, &h, &tables)?
        }
        GroupSpec::Stem { family, p } => stem_group(*family, *p)?,
    };
    if let Some(expected) = spec.predicted_order() {
        if g.order() as u64 != expected {
            return Err(BuildError::InconsistentPresentation {
                expected,
                actual: g.order() as u64,
            });
        }
    }
    Ok(g)
}
