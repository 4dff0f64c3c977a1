//! Stem groups of the isoclinism families of rank at most 5.

use alloc::format;

use super::pc::{collect, PcPresentation};
use super::BuildError;
use crate::closed_forms::Family;
use crate::group::FiniteGroup;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The presentation used for the stem group of `family` at prime `p`.
///
/// Φ-families need an odd prime, Γ-families need `p = 2`. Generator names
/// are ASCII: `a`, `a1`, … for α, α₁, … and `b`, `b1`, … for β, β₁, ….
pub fn stem_presentation(family: Family, p: u64) -> Result<PcPresentation, BuildError> {
    use Family::*;
    if !is_prime(p) {
        return Err(BuildError::InvalidParameter(format!("{p} is not prime")));
    }
    if family.is_two_group_family() && p != 2 {
        return Err(BuildError::InvalidParameter(format!("{family} needs p = 2")));
    }
    if family.is_odd_family() && p == 2 {
        return Err(BuildError::InvalidParameter(format!("{family} needs an odd prime")));
    }
    if p > 7 {
        return Err(BuildError::InvalidParameter(format!(
            "stem groups are only built for p <= 7, got {p}"
        )));
    }
    let r = p as u32;
    let p3 = p == 3;
    let pc = |names: &[&str]| PcPresentation::new(names.iter().map(|&n| (n, r)));
    let pres = match family {
        Abelian => PcPresentation::new::<&str>([]),
        Phi2 => pc(&["a", "a1", "a2"]).commutator("a1", "a", "a2"),
        Phi3 => {
            let g = pc(&["a", "a1", "a2", "a3"])
                .commutator("a1", "a", "a2")
                .commutator("a2", "a", "a3");
            if p3 {
                g.power("a1", "a3^-1")
            } else {
                g
            }
        }
        Phi4 => pc(&["a", "a1", "a2", "b1", "b2"])
            .commutator("a1", "a", "b1")
            .commutator("a2", "a", "b2"),
        Phi5 => pc(&["a1", "a2", "a3", "a4", "b"])
            .commutator("a1", "a2", "b")
            .commutator("a3", "a4", "b"),
        Phi6 => pc(&["a1", "a2", "b", "b1", "b2"])
            .commutator("a1", "a2", "b")
            .commutator("b", "a1", "b1")
            .commutator("b", "a2", "b2"),
        Phi7 => {
            let g = pc(&["a", "a1", "a2", "a3", "b"])
                .commutator("a1", "a", "a2")
                .commutator("a2", "a", "a3")
                .commutator("a1", "b", "a3");
            if p3 {
                g.power("a1", "a3^-1")
            } else {
                g
            }
        }
        Phi8 => PcPresentation::new([("a1", r), ("a2", r * r), ("b", r * r)])
            .power("a1", "b")
            .commutator("a1", "a2", "b")
            .commutator("b", "a2", &format!("b^{p}")),
        Phi9 | Phi10 => {
            let mut g = pc(&["a", "a1", "a2", "a3", "a4"])
                .commutator("a1", "a", "a2")
                .commutator("a2", "a", "a3")
                .commutator("a3", "a", "a4");
            if family == Phi10 {
                g = g.commutator("a1", "a2", "a4");
            }
            if p3 {
                g = g.power("a1", "a2^-3 a3^-1").power("a2", "a4^-1");
            }
            g
        }
        Gamma2 => PcPresentation::new([("b", 2), ("a", 4)]).action("b", "a", "a^-1"),
        Gamma3 => PcPresentation::new([("b", 2), ("a", 8)]).action("b", "a", "a^-1"),
        Gamma4 => PcPresentation::new([("b", 2), ("a1", 4), ("a2", 4)])
            .action("b", "a1", "a1^-1")
            .action("b", "a2", "a2^-1"),
        Gamma5 => PcPresentation::new([("a1", 2), ("a2", 2), ("a3", 2), ("a4", 2), ("b", 2)])
            .action("a1", "a2", "b a2^-1")
            .action("a1", "a4", "b a4^-1")
            .action("a2", "a3", "b a3^-1"),
        Gamma6 => PcPresentation::new([("b1", 2), ("b2", 2), ("a", 8)])
            .action("b1", "a", "a^-1")
            .action("b2", "a", "a^5"),
        Gamma7 => PcPresentation::new([("a", 4), ("b3", 2), ("b2", 2), ("b1", 2)])
            .action("a", "b2", "b1 b2")
            .action("a", "b3", "b2 b3"),
        Gamma8 => PcPresentation::new([("b", 2), ("a", 16)]).action("b", "a", "a^-1"),
    };
    Ok(pres.with_order(p.pow(family.rank())))
}

/// Builds the stem group of `family` at prime `p`.
pub fn stem_group(family: Family, p: u64) -> Result<FiniteGroup, BuildError> {
    collect(&stem_presentation(family, p)?)
}
