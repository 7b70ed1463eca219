use super::expr::Expression;
use super::table::{outcome_expression, CommutationTable};
use super::word::Word;
use crate::exact::CRat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RewriteError {
    /// The step cap was hit: the rule set does not terminate on this
    /// input (or the cap is too small for an unusually deep reduction).
    #[error("rewrite budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },
}

/// Redex selection order. `Leftmost` is the deterministic production
/// strategy; `Seeded` picks random redexes and is used by the
/// confluence tests to show the normal form is order-independent.
#[derive(Clone, Copy, Debug)]
pub enum Strategy {
    Leftmost,
    Seeded(u64),
}

/// Reduce an expression to its normal form under the table: every
/// adjacent out-of-order pair with a known bracket is reordered via
/// `hi lo = lo hi - [lo, hi]` until no redex remains, and like terms
/// are merged. `J` factors are already structural, so only atom-pair
/// rules fire here.
pub fn normalize(e: &Expression, table: &CommutationTable) -> Result<Expression, RewriteError> {
    normalize_with(e, table, Strategy::Leftmost)
}

pub fn normalize_with(
    e: &Expression,
    table: &CommutationTable,
    strategy: Strategy,
) -> Result<Expression, RewriteError> {
    let mut rng = match strategy {
        Strategy::Leftmost => None,
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut remaining = table.step_budget;
    let mut out = Expression::zero();
    let mut work: Vec<(CRat, Word)> = e.terms().map(|t| (t.coeff, t.word)).collect();

    while !work.is_empty() {
        let item = match rng.as_mut() {
            None => work.len() - 1,
            Some(r) => r.random_range(0..work.len()),
        };
        let (coeff, word) = work.swap_remove(item);

        let redexes: Vec<usize> = (0..word.atoms.len().saturating_sub(1))
            .filter(|&i| {
                let (a, b) = (&word.atoms[i], &word.atoms[i + 1]);
                a > b && table.rule_for(b, a).is_some()
            })
            .collect();
        let Some(&pos) = (match rng.as_mut() {
            None => redexes.first(),
            Some(r) => {
                if redexes.is_empty() {
                    None
                } else {
                    Some(&redexes[r.random_range(0..redexes.len())])
                }
            }
        }) else {
            out.add_term(coeff, word);
            continue;
        };

        if remaining == 0 {
            return Err(RewriteError::BudgetExceeded {
                budget: table.step_budget,
            });
        }
        remaining -= 1;

        let hi = word.atoms[pos].clone();
        let lo = word.atoms[pos + 1].clone();
        let outcome = table.rule_for(&lo, &hi).expect("redex had a rule");

        // Swapped word: hi lo -> lo hi.
        let mut swapped = word.clone();
        swapped.atoms.swap(pos, pos + 1);
        work.push((coeff.clone(), swapped));

        // Correction: -(coeff) * prefix * [lo, hi] * suffix.
        let bracket = outcome_expression(&outcome, &lo, &hi);
        if !bracket.is_zero() {
            let prefix = Word {
                jpower: word.jpower,
                atoms: word.atoms[..pos].to_vec(),
            };
            let suffix = Word {
                jpower: 0,
                atoms: word.atoms[pos + 2..].to_vec(),
            };
            let correction = Expression::term(-coeff, prefix)
                .raw_mul(&bracket)
                .raw_mul(&Expression::term(crate::exact::crat(1, 1), suffix));
            for t in correction.terms() {
                work.push((t.coeff, t.word));
            }
        }
    }
    Ok(out)
}

/// `[a, b]` normalized under the table.
pub fn commutator(
    a: &Expression,
    b: &Expression,
    table: &CommutationTable,
) -> Result<Expression, RewriteError> {
    normalize(&a.raw_commutator(b), table)
}

/// Equality in the quotient algebra: `a - b` normalizes to zero.
pub fn equals(
    a: &Expression,
    b: &Expression,
    table: &CommutationTable,
) -> Result<bool, RewriteError> {
    Ok(normalize(&(a - b), table)?.is_zero())
}
