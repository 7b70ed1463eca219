use super::atom::Atom;
use std::cmp::Ordering;
use std::fmt;

/// A monomial: `J^jpower` followed by an ordered list of atoms.
///
/// The time-shift element is kept collected at the left as an exponent.
/// That makes the universal relation `Z J = J Z'` a structural property
/// of multiplication rather than a rewrite rule: concatenating words
/// moves the right factor's `J`s past the left factor's atoms, priming
/// them as it goes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    pub jpower: u32,
    pub atoms: Vec<Atom>,
}

impl Word {
    /// The multiplicative unit.
    pub fn one() -> Self {
        Word {
            jpower: 0,
            atoms: Vec::new(),
        }
    }

    pub fn j() -> Self {
        Word {
            jpower: 1,
            atoms: Vec::new(),
        }
    }

    pub fn atom(a: Atom) -> Self {
        Word {
            jpower: 0,
            atoms: vec![a],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.jpower == 0 && self.atoms.is_empty()
    }

    /// Word concatenation with the `Z J = J Z'` exchange applied:
    /// `(J^a u)(J^b v) = J^(a+b) u^(b primes) v`.
    pub fn concat(&self, rhs: &Word) -> Word {
        let mut atoms = Vec::with_capacity(self.atoms.len() + rhs.atoms.len());
        atoms.extend(self.atoms.iter().map(|a| a.shifted(rhs.jpower)));
        atoms.extend(rhs.atoms.iter().cloned());
        Word {
            jpower: self.jpower + rhs.jpower,
            atoms,
        }
    }

    /// Advance every atom one time step. `J' = J`.
    pub fn shifted(&self, n: u32) -> Word {
        Word {
            jpower: self.jpower,
            atoms: self.atoms.iter().map(|a| a.shifted(n)).collect(),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Canonical term order: by `J` power, then word length, then
    /// lexicographically on the atoms. Deterministic printing and
    /// equality depend on this order and nothing else.
    fn cmp(&self, other: &Self) -> Ordering {
        self.jpower
            .cmp(&other.jpower)
            .then_with(|| self.atoms.len().cmp(&other.atoms.len()))
            .then_with(|| self.atoms.cmp(&other.atoms))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for _ in 0..self.jpower {
            write!(f, "J")?;
        }
        for a in &self.atoms {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
