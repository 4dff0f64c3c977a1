//! Named groups and the built-in catalog.

use anyhow::{anyhow, bail, Context, Result};
use simconj_core::constructions::ExtraspecialKind;
use simconj_core::{Family, GroupSpec};

use crate::format::load_spec;

/// Presentations shipped with the repository.
pub const SHIPPED_SPECS: &[(&str, &str)] = &[
    ("G18_1", include_str!("../../../specs/g18_1.json")),
    ("G18_4", include_str!("../../../specs/g18_4.json")),
    ("G54_6", include_str!("../../../specs/g54_6.json")),
    ("G54_8", include_str!("../../../specs/g54_8.json")),
    ("G72_41", include_str!("../../../specs/psu3_2.json")),
    ("G128_1758", include_str!("../../../specs/g128_1758.json")),
    ("G128_2022", include_str!("../../../specs/g128_2022.json")),
    ("G1029", include_str!("../../../specs/frobenius_1029.json")),
];

fn shipped(name: &str) -> Option<GroupSpec> {
    SHIPPED_SPECS
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, text)| load_spec(text).expect("shipped spec parses"))
}

fn a4() -> GroupSpec {
    GroupSpec::Permutations {
        degree: 4,
        generators: vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
    }
}

fn heisenberg(p: u64) -> GroupSpec {
    GroupSpec::Extraspecial {
        p,
        order: p * p * p,
        kind: ExtraspecialKind::OddExponentP,
    }
}

fn number(s: &str, what: &str) -> Result<u64> {
    s.parse().with_context(|| format!("{what} `{s}` is not a number"))
}

/// Resolves `cyclic:N`, `dihedral:N`, `quaternion:N`, `semidihedral:N`,
/// `extraspecial:P:ORDER[:TYPE]`, `stem:FAMILY:P`, products `X x Y`, and the
/// names of [`builtin_catalog`] and [`SHIPPED_SPECS`].
pub fn named_group(name: &str) -> Result<GroupSpec> {
    let name = name.trim();
    if name.contains(" x ") {
        let factors = name.split(" x ").map(named_group).collect::<Result<Vec<_>>>()?;
        return Ok(GroupSpec::product(factors));
    }
    if let Some(spec) = shipped(name) {
        return Ok(spec);
    }
    let parts: Vec<&str> = name.split(':').collect();
    let spec = match parts.as_slice() {
        ["cyclic", n] => GroupSpec::cyclic(number(n, "order")?),
        ["dihedral", n] => GroupSpec::dihedral(number(n, "order")?),
        ["quaternion", n] => GroupSpec::quaternion(number(n, "order")?),
        ["semidihedral", n] => GroupSpec::Semidihedral {
            order: number(n, "order")?,
        },
        ["extraspecial", p, n, rest @ ..] => {
            let kind = match rest {
                [] | ["odd-exponent-p"] => ExtraspecialKind::OddExponentP,
                ["two-type"] => ExtraspecialKind::TwoType,
                _ => bail!("unknown extraspecial type in `{name}`"),
            };
            GroupSpec::Extraspecial {
                p: number(p, "prime")?,
                order: number(n, "order")?,
                kind,
            }
        }
        ["stem", f, p] => GroupSpec::Stem {
            family: f.parse::<Family>().map_err(|e| anyhow!("{e}"))?,
            p: number(p, "prime")?,
        },
        [single] => builtin_spec(single).ok_or_else(|| anyhow!("unknown group `{name}`"))?,
        _ => bail!("unknown group `{name}`"),
    };
    Ok(spec)
}

fn builtin_spec(name: &str) -> Option<GroupSpec> {
    let upper = name.to_ascii_uppercase();
    if let Some(n) = upper.strip_prefix('C').and_then(|n| n.parse::<u64>().ok()) {
        return Some(GroupSpec::cyclic(n));
    }
    if let Some(n) = upper.strip_prefix('D').and_then(|n| n.parse::<u64>().ok()) {
        return Some(GroupSpec::dihedral(n));
    }
    if let Some(n) = upper.strip_prefix('Q').and_then(|n| n.parse::<u64>().ok()) {
        return Some(GroupSpec::quaternion(n));
    }
    Some(match upper.as_str() {
        "S3" => GroupSpec::dihedral(6),
        "A4" => a4(),
        "HEIS27" => heisenberg(3),
        "PSU32" => shipped("G72_41")?,
        _ => return None,
    })
}

/// The groups every catalog build starts from: all groups of order at most
/// 24 used by the oracle checks, the example pairs, and a few products.
pub fn builtin_catalog() -> Vec<(String, GroupSpec)> {
    let mut out: Vec<(String, GroupSpec)> = Vec::new();
    for n in 2..=12 {
        out.push((format!("C{n}"), GroupSpec::cyclic(n)));
    }
    out.push((
        "V4".into(),
        GroupSpec::product([GroupSpec::cyclic(2), GroupSpec::cyclic(2)]),
    ));
    out.push(("S3".into(), GroupSpec::dihedral(6)));
    out.push(("D8".into(), GroupSpec::dihedral(8)));
    out.push(("Q8".into(), GroupSpec::quaternion(8)));
    out.push(("D10".into(), GroupSpec::dihedral(10)));
    out.push(("D12".into(), GroupSpec::dihedral(12)));
    out.push(("Q12".into(), GroupSpec::quaternion(12)));
    out.push(("A4".into(), a4()));
    out.push(("D16".into(), GroupSpec::dihedral(16)));
    out.push(("Q16".into(), GroupSpec::quaternion(16)));
    out.push(("SD16".into(), GroupSpec::Semidihedral { order: 16 }));
    out.push((
        "D8xC2".into(),
        GroupSpec::product([GroupSpec::dihedral(8), GroupSpec::cyclic(2)]),
    ));
    out.push((
        "Q8xC2".into(),
        GroupSpec::product([GroupSpec::quaternion(8), GroupSpec::cyclic(2)]),
    ));
    out.push((
        "S3xC3".into(),
        GroupSpec::product([GroupSpec::dihedral(6), GroupSpec::cyclic(3)]),
    ));
    out.push(("D18".into(), GroupSpec::dihedral(18)));
    for (name, _) in SHIPPED_SPECS {
        if *name == "G1029" {
            continue;
        }
        out.push((name.to_string(), shipped(name).expect("shipped")));
    }
    out.push((
        "S4".into(),
        GroupSpec::Permutations {
            degree: 4,
            generators: vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]],
        },
    ));
    out.push(("Heis27".into(), heisenberg(3)));
    out.push((
        "Ext27_9".into(),
        GroupSpec::pc(
            simconj_core::PcPresentation::new([("b", 3), ("a", 3), ("c", 3)])
                .power("a", "c")
                .conjugate("a", "b", "a c")
                .with_order(27),
        ),
    ));
    out.push((
        "D8xD8".into(),
        GroupSpec::product([GroupSpec::dihedral(8), GroupSpec::dihedral(8)]),
    ));
    out
}
