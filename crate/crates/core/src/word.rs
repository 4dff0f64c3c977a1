//! Words over named generators, e.g. `"x^2 z"` or `"a3^-1 * a2^-3"`.
//!
//! Factors are separated by whitespace or `*`. `"1"` and `""` denote the
//! identity.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad exponent in factor `{0}`")]
    BadExponent(String),
}

/// A word as a list of `(generator index, exponent)` factors.
pub type Word = Vec<(usize, i64)>;

pub fn parse_word(text: &str, names: &[String]) -> Result<Word, WordError> {
    let mut out = Vec::new();
    for factor in text.split(|c: char| c.is_whitespace() || c == '*') {
        if factor.is_empty() || factor == "1" {
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e = e
                    .trim_start_matches('(')
                    .trim_end_matches(')')
                    .parse::<i64>()
                    .map_err(|_| WordError::BadExponent(factor.to_string()))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
        if exp != 0 {
            out.push((idx, exp));
        }
    }
    Ok(out)
}

/// Evaluates a word with `mul`, `inv` and per-generator values.
pub fn eval_word<T: Clone>(
    word: &[(usize, i64)],
    gens: &[T],
    one: T,
    mul: &impl Fn(&T, &T) -> T,
    inv: &impl Fn(&T) -> T,
) -> T {
    let mut acc = one;
    for &(g, e) in word {
        let base = if e < 0 { inv(&gens[g]) } else { gens[g].clone() };
        for _ in 0..e.unsigned_abs() {
            acc = mul(&acc, &base);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn names() -> Vec<String> {
        ["x", "y", "α3"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_factors() {
        assert_eq!(parse_word("x^2 α3", &names()).unwrap(), vec![(0, 2), (2, 1)]);
        assert_eq!(parse_word("y^-1*x", &names()).unwrap(), vec![(1, -1), (0, 1)]);
        assert_eq!(parse_word("1", &names()).unwrap(), vec![]);
        assert_eq!(parse_word("", &names()).unwrap(), vec![]);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_word("w", &names()), Err(WordError::UnknownGenerator("w".into())));
        assert!(matches!(parse_word("x^a", &names()), Err(WordError::BadExponent(_))));
    }

    #[test]
    fn evaluates_in_integers_mod_7() {
        let w = parse_word("x^2 y^-1", &names()).unwrap();
        let v = eval_word(&w, &[3i64, 5, 0], 0, &|a, b| (a + b) % 7, &|a| (7 - a) % 7);
        assert_eq!(v, (6 + 2) % 7);
    }
}
