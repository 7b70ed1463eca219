use crate::exact::{CMatrix, CRat};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("dimension mismatch between link {link} ({cols} cols) and link {next} ({rows} rows)")]
    DimensionMismatch {
        link: usize,
        cols: usize,
        next: usize,
        rows: usize,
    },
    #[error("state index out of range")]
    BadState,
    #[error("empty chain")]
    Empty,
}

/// Transition amplitude through a chain of intermediate state sets:
/// the `(start, end)` entry of the product of the link matrices, i.e.
/// the sum over all intermediate state sequences of the products of
/// per-link amplitudes.
pub fn chain_amplitude(
    links: &[CMatrix],
    start: usize,
    end: usize,
) -> Result<CRat, ChainError> {
    let (first, rest) = links.split_first().ok_or(ChainError::Empty)?;
    let mut product = first.clone();
    for (idx, m) in rest.iter().enumerate() {
        if product.cols() != m.rows() {
            return Err(ChainError::DimensionMismatch {
                link: idx,
                cols: product.cols(),
                next: idx + 1,
                rows: m.rows(),
            });
        }
        product = &product * m;
    }
    if start >= product.rows() || end >= product.cols() {
        return Err(ChainError::BadState);
    }
    Ok(product[(start, end)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{crat, crat_i};
    use num_traits::Zero;

    fn lr_link() -> CMatrix {
        // <L|L> = <R|R> = 1, <L|R> = <R|L> = i
        CMatrix::from_rows(vec![
            vec![crat(1, 1), crat_i(1, 1)],
            vec![crat_i(1, 1), crat(1, 1)],
        ])
    }

    #[test]
    fn counting_paths_through_one_set() {
        // <A|C_i> = <C_i|B> = 1 with two intermediate states: amplitude 2
        let a_to_c = CMatrix::from_rows(vec![vec![crat(1, 1), crat(1, 1)]]);
        let c_to_b = CMatrix::from_rows(vec![vec![crat(1, 1)], vec![crat(1, 1)]]);
        assert_eq!(chain_amplitude(&[a_to_c, c_to_b], 0, 0).unwrap(), crat(2, 1));
    }

    #[test]
    fn two_step_lr_interference() {
        // L -> L over two links: 1*1 + i*i = 0
        let amp = chain_amplitude(&[lr_link(), lr_link()], 0, 0).unwrap();
        assert!(amp.is_zero());
        // enumerate the two paths by hand
        let by_hand = &(&crat(1, 1) * &crat(1, 1)) + &(&crat_i(1, 1) * &crat_i(1, 1));
        assert_eq!(amp, by_hand);
    }

    #[test]
    fn power_matrix_equivalence() {
        let m = lr_link();
        let m3 = &(&m * &m) * &m;
        for start in 0..2 {
            for end in 0..2 {
                assert_eq!(
                    chain_amplitude(&[m.clone(), m.clone(), m.clone()], start, end).unwrap(),
                    m3[(start, end)]
                );
            }
        }
    }

    #[test]
    fn associativity_of_splitting() {
        let links = [lr_link(), lr_link(), lr_link(), lr_link()];
        // split the chain at link 2: compose partial products
        let left = &links[0] * &links[1];
        let right = &links[2] * &links[3];
        for start in 0..2 {
            for end in 0..2 {
                assert_eq!(
                    chain_amplitude(&links, start, end).unwrap(),
                    (&left * &right)[(start, end)]
                );
            }
        }
    }

    #[test]
    fn errors() {
        let wide = CMatrix::from_rows(vec![vec![crat(1, 1), crat(1, 1)]]);
        assert!(matches!(
            chain_amplitude(&[wide.clone(), wide.clone()], 0, 0),
            Err(ChainError::DimensionMismatch { .. })
        ));
        assert!(matches!(chain_amplitude(&[], 0, 0), Err(ChainError::Empty)));
        assert!(matches!(
            chain_amplitude(&[wide], 5, 0),
            Err(ChainError::BadState)
        ));
    }
}
