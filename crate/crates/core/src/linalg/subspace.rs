//! Subspaces in canonical echelon form.

use num_traits::Zero;

use super::matrix::{combine, Matrix};
use super::scalar::{Field, Rational};
use crate::error::{Error, Result};

/// A linear subspace of `T^ambient_dim`, stored as the nonzero rows of its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their echelon bases agree entry by entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<T: Field = Rational> {
    ambient_dim: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::identity(ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        let m = Matrix::from_rows(vectors, ambient_dim)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix<T>) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(rows, m.cols()).expect("rows of rref");
        Self { ambient_dim: m.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Echelon basis matrix (one basis vector per row).
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the corresponding unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient_dim, found: n })
        }
    }

    /// Remainder of `v` after eliminating every pivot coordinate; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[T]) -> Result<Vec<T>> {
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *o = o.clone() - c.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` is outside the subspace.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_len(other.ambient_dim)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_len(other.ambient_dim)?;
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        // Solve Σ α_i a_i − Σ β_j b_j = 0 and map the α part back.
        let system = Matrix::from_fn(self.ambient_dim, p + q, |i, j| {
            if j < p {
                self.basis.get(j, i).clone()
            } else {
                -other.basis.get(j - p, i).clone()
            }
        });
        let rows = self.basis_vectors();
        let vectors = system
            .kernel()
            .basis_vectors()
            .into_iter()
            .map(|k| combine(self.ambient_dim, &k[..p], &rows))
            .collect();
        Self::span(self.ambient_dim, vectors)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of the subspace under a linear map.
    pub fn mapped(&self, f: &Matrix<T>) -> Result<Self> {
        let images = self.basis_vectors().iter().map(|v| f.apply(v)).collect::<Result<Vec<_>>>()?;
        Self::span(f.rows(), images)
    }

    /// Entry-wise transform of the echelon basis, re-echelonized.
    pub fn map_entries<U: Field>(&self, f: impl Fn(&T) -> U) -> Subspace<U> {
        Subspace::row_space(&self.basis.map(f))
    }
}

/// All `X` with `XM = MX` for every `M`, as a subspace of row-major flattened `n×n` matrices.
pub fn commutant<T: Field>(mats: &[Matrix<T>], n: usize) -> Result<Subspace<T>> {
    if let Some(bad) = mats.iter().find(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::ShapeMismatch { left: (n, n), right: (bad.rows(), bad.cols()) });
    }
    let nn = n * n;
    let mut rows = Vec::with_capacity(mats.len() * nn);
    for m in mats {
        for i in 0..n {
            for j in 0..n {
                // (XM − MX)_{ij} = Σ_k X_{ik} M_{kj} − M_{ik} X_{kj}
                let mut row = vec![T::zero(); nn];
                for k in 0..n {
                    row[i * n + k] = row[i * n + k].clone() + m.get(k, j).clone();
                    row[k * n + j] = row[k * n + j].clone() - m.get(i, k).clone();
                }
                rows.push(row);
            }
        }
    }
    Ok(Matrix::from_rows(rows, nn)?.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;
    use crate::linalg::LinearMap;

    fn axis(n: usize, k: usize) -> Subspace {
        Subspace::span(n, vec![crate::linalg::unit_vector(n, k)]).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let (x, y) = (axis(2, 0), axis(2, 1));
        assert!(x.sum(&y).unwrap().is_full());
        assert!(x.intersect(&y).unwrap().is_zero());
        assert!(x.contains(&[rat(3), rat(0)]).unwrap());
        assert!(!x.contains(&[rat(3), rat(1)]).unwrap());
        assert!(x.sum(&axis(3, 0)).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]).unwrap();
        let b = Subspace::span(3, vec![vec![rat(1), rat(1), rat(1)], vec![rat(0), rat(1), rat(1)]]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, axis(3, 0));
    }

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant::<Rational>(&[], 2).unwrap().dim(), 4);
        assert_eq!(commutant(&[LinearMap::identity(2)], 2).unwrap().dim(), 4);
        let bad = commutant(&[LinearMap::identity(3)], 2);
        assert!(bad.is_err());
    }

    #[test]
    fn coordinates_in_echelon_basis() {
        let s = Subspace::span(3, vec![vec![rat(2), rat(4), rat(0)], vec![rat(0), rat(0), rat(1)]]).unwrap();
        let v = vec![rat(1), rat(2), rat(5)];
        assert_eq!(s.coordinates(&v).unwrap(), Some(vec![rat(1), rat(5)]));
        assert_eq!(s.coordinates(&[rat(1), rat(0), rat(0)]).unwrap(), None);
    }
}
