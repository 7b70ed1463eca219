//! Exact non-commutative polynomial algebra with a left-collected
//! time-shift element and rule-driven normal ordering.
//!
//! Words multiply in the shift algebra: `Z J = J Z'` is structural, so
//! every expression always has its `J` factors on the left. A
//! [`CommutationTable`] then fixes which atom pairs commute, produce
//! Kronecker deltas, or produce named field atoms; [`normalize`]
//! reduces expressions to the unique normal form for that table.

mod atom;
mod expr;
mod parse;
mod rewrite;
mod table;
mod word;

pub use atom::{Atom, Family};
pub use expr::{Expression, Term};
pub use parse::{parse, parse_tree, ParseError, ParseTree};
pub use rewrite::{commutator, equals, normalize, normalize_with, RewriteError, Strategy};
pub use table::{CommutationTable, NamedForm, Outcome, PrimeMode, DEFAULT_STEP_BUDGET};
pub use word::Word;

pub(crate) use table::{field_atom, metric_grad_atom};
