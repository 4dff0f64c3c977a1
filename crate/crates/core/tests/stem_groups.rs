use simconj_core::closed_forms::family_table;
use simconj_core::constructions::stem_group;
use simconj_core::invariants::{normalized_a, normalized_b};
use simconj_core::Family;

fn check(family: Family, p: u64) {
    let g = stem_group(family, p).unwrap();
    assert_eq!(g.order() as u64, p.pow(family.rank()), "{family} at {p}");
    let row = family_table(family, p).unwrap();
    let a = normalized_a(&g);
    let b = normalized_b(&g).unwrap();
    assert_eq!(a, row.a, "{family} at p = {p}: normalized A is {a}");
    assert_eq!(b, row.b, "{family} at p = {p}: normalized B is {b}");
}

#[test]
fn odd_families_match_the_table_at_three() {
    for f in Family::for_prime(3) {
        check(f, 3);
    }
}

#[test]
fn two_group_families_match_the_table() {
    for f in Family::for_prime(2) {
        check(f, 2);
    }
}
