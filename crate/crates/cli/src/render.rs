//! Text output for `compute`, `table1` and `closed-form`.

use std::fmt::Write;

use anyhow::{bail, Result};
use simconj_core::closed_forms::{self, family_table};
use simconj_core::constructions::stem_group;
use simconj_core::invariants::{normalized_a, normalized_b};
use simconj_core::{Family, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Shape {
    Rational,
    PartialFractions,
    Series,
}

pub fn render(f: &RationalFunction, shape: Shape, terms: usize, poles: &[u64]) -> Result<String> {
    Ok(match shape {
        Shape::Rational => f.to_string(),
        Shape::PartialFractions => {
            let pf = if poles.is_empty() {
                f.to_partial_fractions()?
            } else {
                f.to_partial_fractions_with(poles)?
            };
            pf.to_string()
        }
        Shape::Series => f
            .series_coeffs(terms)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    })
}

/// One verified row of the normalized-invariant table.
pub struct TableRow {
    pub family: Family,
    pub a: String,
    pub b: String,
    /// `Some(pass)` in verify mode.
    pub verified: Option<bool>,
}

pub fn table1(p: u64, verify: bool) -> Result<Vec<TableRow>> {
    if p < 2 || !(2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        bail!("{p} is not prime");
    }
    if verify && p > 7 {
        bail!("stem-group verification supports p <= 7");
    }
    let mut rows = Vec::new();
    for family in Family::for_prime(p) {
        let formula = family_table(family, p)?;
        let verified = if verify {
            let g = stem_group(family, p)?;
            Some(normalized_a(&g) == formula.a && normalized_b(&g)? == formula.b)
        } else {
            None
        };
        rows.push(TableRow {
            family,
            a: formula.render_a(),
            b: formula.render_b(),
            verified,
        });
    }
    Ok(rows)
}

pub fn table1_text(rows: &[TableRow], p: u64) -> String {
    let mut out = String::new();
    writeln!(out, "normalized invariants A_G(t/|G|), B_G(t/|G|) at p = {p}").unwrap();
    for r in rows {
        let status = match r.verified {
            Some(true) => "PASS ",
            Some(false) => "FAIL ",
            None => "",
        };
        writeln!(out, "{status}{}", r.family).unwrap();
        writeln!(out, "  A = {}", r.a).unwrap();
        writeln!(out, "  B = {}", r.b).unwrap();
    }
    out
}

fn arg<T: std::str::FromStr>(args: &[String], i: usize, what: &str) -> Result<T> {
    match args.get(i) {
        Some(s) => s.parse().map_err(|_| anyhow::anyhow!("{what} `{s}` is not valid")),
        None => bail!("missing {what}"),
    }
}

fn has_abelian_maximal(s: &str) -> Result<bool> {
    match s {
        "abelian-maximal" | "true" => Ok(true),
        "no-abelian-maximal" | "false" => Ok(false),
        _ => bail!("expected abelian-maximal or no-abelian-maximal, got `{s}`"),
    }
}

/// Evaluates a named closed form. Returns `(A, B)`; `B` is absent for forms
/// without a B counterpart.
pub fn closed_form(name: &str, args: &[String]) -> Result<(RationalFunction, Option<RationalFunction>)> {
    use closed_forms::*;
    Ok(match name {
        "dihedral-odd" => {
            let n = arg(args, 0, "n")?;
            (a_dihedral_odd(n)?, Some(b_dihedral_odd(n)?))
        }
        "dihedral-even" => {
            let n = arg(args, 0, "n")?;
            (a_dihedral_even(n)?, Some(b_dihedral_even(n)?))
        }
        "central-p2" => {
            let (p, m) = (arg(args, 0, "p")?, arg(args, 1, "m")?);
            (a_central_quotient_p2(p, m)?, Some(b_central_quotient_p2(p, m)?))
        }
        "central-p3" => {
            let (p, m) = (arg(args, 0, "p")?, arg(args, 1, "m")?);
            let am = has_abelian_maximal(args.get(2).map_or("", |s| s.as_str()))?;
            (a_central_quotient_p3(p, m, am)?, Some(b_central_quotient_p3(p, m, am)?))
        }
        "abelian-maximal" => {
            let (g, m, z) = (arg(args, 0, "|G|")?, arg(args, 1, "|M|")?, arg(args, 2, "|Z|")?);
            (a_abelian_maximal(g, m, z)?, None)
        }
        "extraspecial" => {
            let (p, n) = (arg(args, 0, "p")?, arg(args, 1, "n")?);
            (a_extraspecial(p, n)?, Some(b_extraspecial(p, n)?))
        }
        "maximal-class" => {
            let (p, m) = (arg(args, 0, "p")?, arg(args, 1, "m")?);
            let case: MaximalClassCase = arg(args, 2, "case")?;
            (a_maximal_class(p, m, case)?, Some(b_maximal_class(p, m, case)?))
        }
        "frobenius-abelian" => {
            let (n, h) = (arg(args, 0, "|N|")?, arg(args, 1, "|H|")?);
            let (a, b) = frobenius_abelian(n, h)?;
            (a, Some(b))
        }
        "family" => {
            let family: Family = args
                .first()
                .ok_or_else(|| anyhow::anyhow!("missing family"))?
                .parse()
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let row = family_table(family, arg(args, 1, "p")?)?;
            (row.a, Some(row.b))
        }
        _ => bail!("unknown closed form `{name}`"),
    })
}

pub const CLOSED_FORMS: &[&str] = &[
    "dihedral-odd N",
    "dihedral-even N",
    "central-p2 P M",
    "central-p3 P M abelian-maximal|no-abelian-maximal",
    "abelian-maximal |G| |M| |Z|",
    "extraspecial P N",
    "maximal-class P M abelian-maximal|no-abelian-maximal",
    "frobenius-abelian |N| |H|",
    "family FAMILY P",
];
