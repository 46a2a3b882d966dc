//! Random expressions in the uniform syntax-tree model: at each node the
//! production is drawn uniformly among those that can still reach the
//! requested alphabetic width.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{RegEx, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomExprConfig {
    /// Maximum number of consecutive unary operators.
    pub unary_cap: usize,
    /// Also emit `s+λ`, `λ+s`, `s·∅`-style nodes around subtrees. These
    /// never change the alphabetic width.
    pub constants: bool,
}

impl Default for RandomExprConfig {
    fn default() -> Self {
        RandomExprConfig {
            unary_cap: 2,
            constants: false,
        }
    }
}

#[derive(Clone, Copy)]
enum Production {
    Leaf,
    Union,
    Concat,
    Star,
    Optional,
    WithConstant,
}

/// Random expression of exactly `awidth` letters drawn from `alphabet`,
/// deterministic in `seed`.
pub fn random_expr(awidth: usize, alphabet: &[Symbol], seed: u64) -> Result<RegEx> {
    random_expr_with(awidth, alphabet, seed, RandomExprConfig::default())
}

pub fn random_expr_with(
    awidth: usize,
    alphabet: &[Symbol],
    seed: u64,
    config: RandomExprConfig,
) -> Result<RegEx> {
    if awidth == 0 {
        return Err(Error::InvalidArgument(
            "alphabetic width must be at least 1".into(),
        ));
    }
    if alphabet.is_empty() {
        return Err(Error::InvalidArgument("alphabet must not be empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(generate(awidth, 0, alphabet, config, &mut rng))
}

fn generate(
    n: usize,
    unary_run: usize,
    alphabet: &[Symbol],
    config: RandomExprConfig,
    rng: &mut ChaCha8Rng,
) -> RegEx {
    let mut choices = Vec::with_capacity(6);
    if n == 1 {
        choices.push(Production::Leaf);
    } else {
        choices.push(Production::Union);
        choices.push(Production::Concat);
    }
    if unary_run < config.unary_cap {
        choices.push(Production::Star);
        choices.push(Production::Optional);
        if config.constants {
            choices.push(Production::WithConstant);
        }
    }
    let production = *choices.choose(rng).expect("at least one production");
    match production {
        Production::Leaf => RegEx::Sym(alphabet.choose(rng).expect("non-empty").clone()),
        Production::Union | Production::Concat => {
            let k = rng.gen_range(1..n);
            let left = generate(k, 0, alphabet, config, rng);
            let right = generate(n - k, 0, alphabet, config, rng);
            if matches!(production, Production::Union) {
                RegEx::union(left, right)
            } else {
                RegEx::concat(left, right)
            }
        }
        Production::Star => RegEx::star(generate(n, unary_run + 1, alphabet, config, rng)),
        Production::Optional => RegEx::optional(generate(n, unary_run + 1, alphabet, config, rng)),
        Production::WithConstant => {
            let inner = generate(n, unary_run + 1, alphabet, config, rng);
            let constant = if rng.gen_bool(0.5) {
                RegEx::Epsilon
            } else {
                RegEx::Empty
            };
            let union = rng.gen_bool(0.5);
            match (union, rng.gen_bool(0.5)) {
                (true, true) => RegEx::union(constant, inner),
                (true, false) => RegEx::union(inner, constant),
                (false, true) => RegEx::concat(constant, inner),
                (false, false) => RegEx::concat(inner, constant),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alphabet(names: &[&str]) -> Vec<Symbol> {
        names.iter().map(|s| Symbol::new(s).unwrap()).collect()
    }

    #[test]
    fn rejects_zero_width() {
        assert!(random_expr(0, &alphabet(&["a"]), 1).is_err());
        assert!(random_expr(1, &[], 1).is_err());
    }

    #[test]
    fn width_one_shapes() {
        let allowed = ["a", "a*", "a?", "a**", "a*?", "a?*", "a??"];
        for seed in 0..200 {
            let r = random_expr(1, &alphabet(&["a"]), seed).unwrap();
            assert!(allowed.contains(&r.to_string().as_str()), "{r}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let sigma = alphabet(&["a", "b"]);
        assert_eq!(
            random_expr(9, &sigma, 42).unwrap(),
            random_expr(9, &sigma, 42).unwrap()
        );
    }

    #[test]
    fn exact_width() {
        let sigma = alphabet(&["a", "b"]);
        assert_eq!(random_expr(5, &sigma, 7).unwrap().awidth(), 5);
        for seed in 0..100 {
            let cfg = RandomExprConfig {
                constants: true,
                ..Default::default()
            };
            let r = random_expr_with(1 + (seed as usize % 10), &sigma, seed, cfg).unwrap();
            assert_eq!(r.awidth(), 1 + (seed as usize % 10));
        }
    }
}
