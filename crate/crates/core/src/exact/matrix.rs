use super::scalar::CRat;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Dense matrix over Gaussian rationals.
///
/// Small and exact: transition-amplitude chains, permutation/diagonal
/// factors and the 2x2 bridge from the eta algebra all live here.
#[derive(Clone, PartialEq, Eq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CRat>,
}

impl CMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![CRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = CRat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CRat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Diagonal matrix from a vector.
    pub fn diagonal(v: &[CRat]) -> Self {
        let mut m = CMatrix::zero(v.len(), v.len());
        for (i, x) in v.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    /// Permutation matrix: row `i` is row `perm[i]` of the identity.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = CMatrix::zero(n, n);
        for (i, &p) in perm.iter().enumerate() {
            assert!(p < n, "permutation entry out of range");
            m[(i, p)] = CRat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn scale(&self, s: &CRat) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = CRat;
    fn index(&self, (r, c): (usize, usize)) -> &CRat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut CRat {
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = CMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    let cur = &out[(i, j)] + &prod;
                    out[(i, j)] = cur;
                }
            }
        }
        out
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
