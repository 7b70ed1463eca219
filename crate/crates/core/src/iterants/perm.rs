use crate::exact::{crat, CMatrix, CRat};
use itertools::Itertools;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {n} exceeds the enumeration cap {cap}")]
    DimensionCap { n: usize, cap: usize },
    #[error("not a permutation of 0..{n}")]
    BadPermutation { n: usize },
}

/// Factorial enumeration stays desk-sized.
pub const PERM_CAP: usize = 6;

/// One permutation-diagonal component of a matrix: the vector
/// `v(M, pi) = (m_{1 pi(1)}, ..., m_{n pi(n)})` paired with `pi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermComponent {
    pub perm: Vec<usize>,
    pub diagonal: Vec<CRat>,
}

/// Decompose a square matrix into all `n!` permutation-diagonal
/// components. Reconstruction is exact:
/// `M = (1/(n-1)!) sum_pi Delta[M]_pi [pi]`.
pub fn perm_decompose(m: &CMatrix) -> Result<Vec<PermComponent>, PermError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(PermError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if n == 0 || n > PERM_CAP {
        return Err(PermError::DimensionCap { n, cap: PERM_CAP });
    }
    Ok((0..n)
        .permutations(n)
        .map(|perm| {
            let diagonal = (0..n).map(|i| m[(i, perm[i])].clone()).collect();
            PermComponent { perm, diagonal }
        })
        .collect())
}

/// Rebuild the matrix from its components: each entry is hit by
/// exactly `(n-1)!` permutations, hence the prefactor.
pub fn perm_reconstruct(n: usize, components: &[PermComponent]) -> CMatrix {
    let mut sum = CMatrix::zero(n, n);
    for c in components {
        let term = &CMatrix::diagonal(&c.diagonal) * &CMatrix::permutation(&c.perm);
        sum = &sum + &term;
    }
    let factorial: i64 = (1..n as i64).product::<i64>().max(1);
    sum.scale(&crat(1, factorial))
}

/// `[pi] Delta(v) = Delta(v^pi) [pi]` with `v^pi = (v_pi(1), ..)`:
/// exact equality of both matrix products.
pub fn perm_conjugation_check(v: &[CRat], perm: &[usize]) -> Result<bool, PermError> {
    let n = v.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(PermError::BadPermutation { n });
        }
        seen[p] = true;
    }
    if perm.len() != n {
        return Err(PermError::BadPermutation { n });
    }
    let p_mat = CMatrix::permutation(perm);
    let lhs = &p_mat * &CMatrix::diagonal(v);
    let permuted: Vec<CRat> = perm.iter().map(|&i| v[i].clone()).collect();
    let rhs = &CMatrix::diagonal(&permuted) * &p_mat;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::crat_i;

    fn int_matrix(rows: Vec<Vec<i64>>) -> CMatrix {
        CMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| crat(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn two_by_two_decomposition() {
        // [[a,b],[c,d]] = Delta(a,d) I + Delta(b,c) swap, factor 1/1!
        let m = int_matrix(vec![vec![1, 2], vec![3, 4]]);
        let comps = perm_decompose(&m).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(perm_reconstruct(2, &comps), m);
        let identity = comps.iter().find(|c| c.perm == vec![0, 1]).unwrap();
        assert_eq!(identity.diagonal, vec![crat(1, 1), crat(4, 1)]);
        let swap = comps.iter().find(|c| c.perm == vec![1, 0]).unwrap();
        assert_eq!(swap.diagonal, vec![crat(2, 1), crat(3, 1)]);
    }

    #[test]
    fn one_by_one_is_itself() {
        let m = CMatrix::from_rows(vec![vec![crat_i(7, 2)]]);
        let comps = perm_decompose(&m).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(perm_reconstruct(1, &comps), m);
    }

    #[test]
    fn three_by_three_reconstruction() {
        let m = int_matrix(vec![vec![3, -1, 4], vec![1, 5, -9], vec![2, 6, 5]]);
        let comps = perm_decompose(&m).unwrap();
        assert_eq!(comps.len(), 6);
        assert_eq!(perm_reconstruct(3, &comps), m);
    }

    #[test]
    fn each_entry_covered_factorial_times() {
        // the counting argument behind the reconstruction prefactor
        let n = 4usize;
        let m = int_matrix(vec![
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ]);
        let comps = perm_decompose(&m).unwrap();
        let covering = comps.iter().filter(|c| c.perm[0] == 0).count();
        assert_eq!(covering, (1..n).product::<usize>());
        assert_eq!(perm_reconstruct(n, &comps), m);
    }

    #[test]
    fn conjugation_identity() {
        let v = vec![crat(2, 1), crat(-1, 3), crat_i(1, 1), crat(7, 1)];
        assert!(perm_conjugation_check(&v, &[0, 1, 2, 3]).unwrap());
        assert!(perm_conjugation_check(&v[..2], &[1, 0]).unwrap());
        assert!(perm_conjugation_check(&v, &[2, 0, 3, 1]).unwrap());
        assert!(matches!(
            perm_conjugation_check(&v, &[0, 0, 1, 2]),
            Err(PermError::BadPermutation { .. })
        ));
    }

    #[test]
    fn caps_and_shape() {
        let m = CMatrix::zero(7, 7);
        assert!(matches!(
            perm_decompose(&m),
            Err(PermError::DimensionCap { .. })
        ));
        let m = CMatrix::zero(2, 3);
        assert!(matches!(perm_decompose(&m), Err(PermError::NotSquare { .. })));
    }
}
