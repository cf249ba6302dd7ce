//! Exact rational matrices: just enough linear algebra for the
//! representation-algebra actions (inverse via Gauss-Jordan, random
//! sampling for equivariance sweeps).

use rand::Rng;
use thiserror::Error;

use crate::scalar::{int, Scalar, Zero};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is singular")]
    SingularMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    rows: Vec<Vec<Scalar>>,
}

impl QMatrix {
    pub fn zero(n: usize) -> Self {
        QMatrix {
            n,
            rows: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = int(1);
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        QMatrix {
            n,
            rows: rows
                .iter()
                .map(|r| {
                    assert_eq!(r.len(), n, "square matrix expected");
                    r.iter().map(|&v| int(v)).collect()
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based access, matching the index convention of matrix entries
    /// a_{ij} elsewhere in the crate.
    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i - 1][j - 1] = v;
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = Scalar::zero();
                for k in 0..self.n {
                    acc += self.rows[i][k].clone() * other.rows[k][j].clone();
                }
                out.rows[i][j] = acc;
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<QMatrix, MatrixError> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(MatrixError::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= p.clone();
                inv[col][j] /= p.clone();
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let av = a[col][j].clone();
                    let iv = inv[col][j].clone();
                    a[r][j] -= f.clone() * av;
                    inv[r][j] -= f.clone() * iv;
                }
            }
        }
        Ok(QMatrix { n, rows: inv })
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }
}

/// Random matrix with small integer entries.
pub fn random_matrix(n: usize, rng: &mut impl Rng) -> QMatrix {
    let mut m = QMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            m.set(i, j, int(rng.gen_range(-3..=3)));
        }
    }
    m
}

/// Random invertible matrix, by rejection.
pub fn random_invertible(n: usize, rng: &mut impl Rng) -> QMatrix {
    loop {
        let m = random_matrix(n, rng);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=4 {
            for _ in 0..10 {
                let m = random_invertible(n, &mut rng);
                let mi = m.inverse().unwrap();
                assert!(m.mul(&mi).is_identity());
                assert!(mi.mul(&m).is_identity());
            }
        }
    }

    #[test]
    fn singular_is_detected() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse().unwrap_err(), MatrixError::SingularMatrix);
        assert!(QMatrix::zero(3).inverse().is_err());
    }

    #[test]
    fn known_inverse() {
        let m = QMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let mi = m.inverse().unwrap();
        let expected = QMatrix::from_int_rows(&[&[1, -1], &[-1, 2]]);
        assert_eq!(mi, expected);
    }
}
