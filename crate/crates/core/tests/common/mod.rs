#![allow(dead_code)]

use simconj_core::constructions::{Automorphism, ExtraspecialKind};
use simconj_core::{build, FiniteGroup, GroupSpec, PcPresentation, Subgroup};

pub fn a4() -> GroupSpec {
    GroupSpec::Permutations {
        degree: 4,
        generators: vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
    }
}

pub fn heisenberg(p: u64) -> GroupSpec {
    GroupSpec::Extraspecial {
        p,
        order: p * p * p,
        kind: ExtraspecialKind::OddExponentP,
    }
}

/// Modular group of order 16: `b a b⁻¹ = a⁵`, `a` of order 8.
pub fn m16() -> GroupSpec {
    GroupSpec::pc(
        PcPresentation::new([("b", 2), ("a", 2), ("a2", 2), ("a4", 2)])
            .power("a", "a2")
            .power("a2", "a4")
            .conjugate("a", "b", "a a4"),
    )
}

/// Small groups used by the property tests, with names.
pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    let specs: Vec<(&'static str, GroupSpec)> = vec![
        ("C1", GroupSpec::Trivial),
        ("C2", GroupSpec::cyclic(2)),
        ("C4", GroupSpec::cyclic(4)),
        ("V4", GroupSpec::product([GroupSpec::cyclic(2), GroupSpec::cyclic(2)])),
        ("C6", GroupSpec::cyclic(6)),
        ("S3", GroupSpec::dihedral(6)),
        ("D8", GroupSpec::dihedral(8)),
        ("Q8", GroupSpec::quaternion(8)),
        ("C8", GroupSpec::cyclic(8)),
        ("D10", GroupSpec::dihedral(10)),
        ("D12", GroupSpec::dihedral(12)),
        ("Q12", GroupSpec::quaternion(12)),
        ("A4", a4()),
        ("D16", GroupSpec::dihedral(16)),
        ("Q16", GroupSpec::quaternion(16)),
        ("SD16", GroupSpec::Semidihedral { order: 16 }),
        ("M16", m16()),
        (
            "D8xC2",
            GroupSpec::product([GroupSpec::dihedral(8), GroupSpec::cyclic(2)]),
        ),
        (
            "Q8xC2",
            GroupSpec::product([GroupSpec::quaternion(8), GroupSpec::cyclic(2)]),
        ),
        ("D18", GroupSpec::dihedral(18)),
        (
            "S3xC3",
            GroupSpec::product([GroupSpec::dihedral(6), GroupSpec::cyclic(3)]),
        ),
        ("Heis27", heisenberg(3)),
    ];
    specs
        .into_iter()
        .map(|(n, s)| (n, build(&s).unwrap_or_else(|e| panic!("{n}: {e}"))))
        .collect()
}

pub fn group(spec: GroupSpec) -> FiniteGroup {
    build(&spec).unwrap()
}

/// `(C3 × C3) ⋊ Q8`, the Frobenius group of order 72.
pub fn psu32() -> GroupSpec {
    GroupSpec::Semidirect {
        normal: Box::new(GroupSpec::product([GroupSpec::cyclic(3), GroupSpec::cyclic(3)])),
        complement: Box::new(GroupSpec::quaternion(8)),
        action: vec![
            Automorphism::Generators {
                images: vec!["a_2".into(), "a_1^-1".into()],
            },
            Automorphism::Generators {
                images: vec!["a_1 a_2".into(), "a_1 a_2^-1".into()],
            },
        ],
    }
}

/// Heisenberg group of order 343 extended by `C3`, order 1029.
pub fn frobenius_1029() -> GroupSpec {
    GroupSpec::Semidirect {
        normal: Box::new(GroupSpec::pc(
            PcPresentation::new([("x", 7), ("y", 7), ("z", 7)]).commutator("x", "y", "z"),
        )),
        complement: Box::new(GroupSpec::cyclic(3)),
        action: vec![Automorphism::Generators {
            images: vec!["x^2 z".into(), "y^2".into(), "z^4".into()],
        }],
    }
}

/// Complement of a semidirect product: the elements `(1, h)`.
pub fn complement(g: &FiniteGroup, h_order: usize) -> Subgroup<'_> {
    Subgroup::new(g, &(0..h_order).collect::<Vec<_>>()).unwrap()
}
