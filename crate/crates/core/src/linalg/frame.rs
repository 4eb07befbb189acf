use super::matrix::Matrix;
use super::scalar::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// An ordered, linearly independent list of vectors with coordinate solving.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame<T: Field> {
    vectors: Vec<Vec<T>>,
    span: Subspace<T>,
    // Maps echelon coordinates to frame coordinates.
    to_frame: Matrix<T>,
}

impl<T: Field> Frame<T> {
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        let span = Subspace::span(ambient_dim, vectors.clone())?;
        if span.dim() != vectors.len() {
            return Err(Error::Singular);
        }
        // given_i = Σ_r E[i][r] echelon_r with E[i][r] = given_i[pivot_r]
        let p = vectors.len();
        let e = Matrix::from_fn(p, p, |i, r| vectors[i][span.pivots()[r]].clone());
        let to_frame = e.transpose().inverse()?;
        Ok(Self { vectors, span, to_frame })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    pub fn span(&self) -> &Subspace<T> {
        &self.span
    }

    /// Coefficients `α` with `v = Σ α_i vectors[i]`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        match self.span.coordinates(v)? {
            Some(c) => Ok(Some(self.to_frame.apply(&c)?)),
            None => Ok(None),
        }
    }

    /// Inclusion map: columns are the frame vectors.
    pub fn inclusion(&self) -> Matrix<T> {
        Matrix::from_columns(&self.vectors, self.span.ambient_dim()).expect("frame vectors share length")
    }
}
