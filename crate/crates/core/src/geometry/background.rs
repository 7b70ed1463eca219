use crate::ncalg::CommutationTable;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: u8, dimension: u8 },
    #[error("rewrite failed: {0}")]
    Rewrite(#[from] crate::ncalg::RewriteError),
    #[error("no formal derivative for atom '{0}'")]
    NoDerivative(String),
}

/// Which commutation background a computation runs in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BackgroundKind {
    /// Bare quantum mechanics: `[X,X] = [P,P] = 0`, `[X,P] = delta`.
    Flat,
    /// Flat plus gauge potentials with named gradients.
    Gauge { abelian: bool },
    /// Position/velocity pairs with a metric-valued bracket.
    Metric { symmetric: bool, constant: bool },
}

/// A dimension together with the rule set it generates.
#[derive(Clone, Debug)]
pub struct BackgroundSpec {
    pub dimension: u8,
    pub kind: BackgroundKind,
    table: CommutationTable,
}

impl BackgroundSpec {
    pub fn flat(dimension: u8) -> Self {
        BackgroundSpec {
            dimension,
            kind: BackgroundKind::Flat,
            table: CommutationTable::flat(),
        }
    }

    pub fn gauge(dimension: u8, abelian: bool) -> Self {
        BackgroundSpec {
            dimension,
            kind: BackgroundKind::Gauge { abelian },
            table: CommutationTable::gauge(abelian),
        }
    }

    /// The metric background with the symmetry g_ij = g_ji imposed.
    pub fn metric(dimension: u8) -> Self {
        Self::metric_with(dimension, true, false)
    }

    pub fn metric_with(dimension: u8, symmetric: bool, constant: bool) -> Self {
        BackgroundSpec {
            dimension,
            kind: BackgroundKind::Metric {
                symmetric,
                constant,
            },
            table: CommutationTable::metric(symmetric, constant),
        }
    }

    pub fn table(&self) -> &CommutationTable {
        &self.table
    }

    pub fn check_index(&self, index: u8) -> Result<(), GeometryError> {
        if index >= 1 && index <= self.dimension {
            Ok(())
        } else {
            Err(GeometryError::IndexOutOfRange {
                index,
                dimension: self.dimension,
            })
        }
    }
}
