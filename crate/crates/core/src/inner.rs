//! Even, graded symmetric, nondegenerate bilinear forms on a graded space.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{GradedSpace, Vector};
use crate::linalg::invert;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProduct {
    space: Arc<GradedSpace>,
    matrix: Vec<Vec<Scalar>>,
    inverse: Vec<Vec<Scalar>>,
}

impl InnerProduct {
    /// Checks evenness, graded symmetry `⟨v,w⟩ = (−1)^{|v||w|}⟨w,v⟩` and
    /// nondegeneracy of the Gram matrix `matrix[i][j] = ⟨e_i, e_j⟩`.
    pub fn new(space: &Arc<GradedSpace>, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let d = space.dim();
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(Error::arg(format!("inner product matrix must be {d}×{d}")));
        }
        for i in 0..d {
            for j in 0..d {
                let a = &matrix[i][j];
                if a.field() != space.field() {
                    return Err(Error::arg("inner product entries over the wrong field"));
                }
                if !a.is_zero() && space.parity(i) != space.parity(j) {
                    return Err(Error::validation(format!(
                        "inner product is not even: <{},{}> = {a}",
                        space.name(i),
                        space.name(j)
                    )));
                }
                let odd = space.parity(i).is_odd() && space.parity(j).is_odd();
                if *a != matrix[j][i].clone().signed(odd) {
                    return Err(Error::validation(format!(
                        "inner product is not graded symmetric at <{},{}>",
                        space.name(i),
                        space.name(j)
                    )));
                }
            }
        }
        let inverse = invert(space.field(), &matrix)
            .ok_or_else(|| Error::validation("inner product is degenerate"))?;
        Ok(InnerProduct { space: space.clone(), matrix, inverse })
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    /// Inverse Gram matrix.
    pub fn inverse(&self) -> &[Vec<Scalar>] {
        &self.inverse
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i][j]
    }

    pub fn pair(&self, v: &Vector, w: &Vector) -> Scalar {
        let mut acc = self.space.field().zero();
        for (i, a) in v.iter() {
            for (j, b) in w.iter() {
                let g = &self.matrix[i][j];
                if !g.is_zero() {
                    acc += &(a * b) * g;
                }
            }
        }
        acc
    }

    pub(crate) fn check_space(&self, space: &GradedSpace) -> Result<()> {
        if *self.space != *space {
            return Err(Error::arg("inner product is defined on a different space"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Parity::{Even, Odd};

    #[test]
    fn rejects_degenerate_and_odd_forms() {
        let v = GradedSpace::anonymous(&[Even, Even]);
        let q = v.field();
        assert!(InnerProduct::new(&v, vec![vec![q.one(), q.zero()], vec![q.zero(), q.zero()]]).is_err());
        let w = GradedSpace::anonymous(&[Even, Odd]);
        assert!(InnerProduct::new(&w, vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]).is_err());
    }

    #[test]
    fn odd_block_must_be_antisymmetric() {
        let v = GradedSpace::anonymous(&[Odd, Odd]);
        let q = v.field();
        assert!(InnerProduct::new(&v, vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]).is_err());
        let ip = InnerProduct::new(&v, vec![vec![q.zero(), q.one()], vec![q.int(-1), q.zero()]]).unwrap();
        assert_eq!(ip.pair(&Vector::basis(1, q), &Vector::basis(0, q)), q.int(-1));
    }
}
