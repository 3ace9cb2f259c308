//! Exact sparse linear algebra: echelon bases, kernels, span membership and
//! solving, over any [`Field`]. Vectors are [`Vector`]s indexed by `usize`.
//!
//! A fraction-free (Bareiss) rank for dense integer matrices is also
//! provided; the dense cross-check code in [`crate::oracle`] uses it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graded::Vector;
use crate::scalar::{Field, Scalar};

/// Row echelon basis of a subspace. Each stored row has coefficient 1 at its
/// pivot and zeros at every smaller index. Each row optionally carries the
/// combination of input vectors that produced it.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    rows: BTreeMap<usize, (Vector, Vector)>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` (with tracked combination `combo`) against the basis.
    fn reduce_tracked(&self, mut v: Vector, mut combo: Vector) -> (Vector, Vector) {
        let mut cursor = 0usize;
        loop {
            let next = v.iter().map(|(i, _)| i).find(|&i| i >= cursor && self.rows.contains_key(&i));
            let Some(p) = next else { break };
            let c = v.get(p).cloned().expect("present");
            let (row, row_combo) = &self.rows[&p];
            let neg = -c;
            v.add_scaled(&neg, row);
            combo.add_scaled(&neg, row_combo);
            cursor = p + 1;
        }
        (v, combo)
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        self.reduce_tracked(v.clone(), Vector::zero()).0
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`, tagged with combination `combo`. Returns `None` if `v` was
    /// independent, otherwise the combination that reduces it to zero.
    pub fn insert_tracked(&mut self, v: Vector, combo: Vector) -> Option<Vector> {
        let (r, combo) = self.reduce_tracked(v, combo);
        let Some((p, lead)) = r.iter().next().map(|(i, c)| (i, c.clone())) else {
            return Some(combo);
        };
        let inv = lead.inverse().expect("nonzero pivot");
        self.rows.insert(p, (r.scaled(&inv), combo.scaled(&inv)));
        None
    }

    pub fn insert(&mut self, v: Vector) -> bool {
        self.insert_tracked(v, Vector::zero()).is_none()
    }

    /// Solves `Σ x_j · input_j = target` using the tracked combinations.
    pub fn solve(&self, target: &Vector) -> Option<Vector> {
        let (r, combo) = self.reduce_tracked(target.clone(), Vector::zero());
        if r.is_zero() {
            Some(combo.negated())
        } else {
            None
        }
    }

    /// Basis rows in reduced echelon form (pivot columns cleared in every row).
    pub fn reduced_rows(&self) -> Vec<Vector> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows: BTreeMap<usize, Vector> = self.rows.iter().map(|(p, (r, _))| (*p, r.clone())).collect();
        for &p in pivots.iter().rev() {
            let row_p = rows[&p].clone();
            for &q in pivots.iter().filter(|&&q| q < p) {
                let c = rows[&q].get(p).cloned();
                if let Some(c) = c {
                    rows.get_mut(&q).expect("row").add_scaled(&-c, &row_p);
                }
            }
        }
        rows.into_values().collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Result of eliminating the columns of a linear map.
#[derive(Debug, Clone)]
pub struct MapReduction {
    /// Echelon basis of the image, tracking domain combinations.
    pub image: Echelon,
    /// Basis of the kernel in domain coordinates (reduced echelon form).
    pub kernel: Vec<Vector>,
}

/// Eliminates the map whose `j`-th column is `columns[j]`.
pub fn reduce_map(field: Field, columns: &[Vector]) -> MapReduction {
    let mut image = Echelon::new(field);
    let mut kernel = Echelon::new(field);
    for (j, col) in columns.iter().enumerate() {
        if let Some(dep) = image.insert_tracked(col.clone(), Vector::basis(j, field)) {
            kernel.insert(dep);
        }
    }
    MapReduction { image, kernel: kernel.reduced_rows() }
}

pub fn rank(field: Field, vectors: &[Vector]) -> usize {
    let mut e = Echelon::new(field);
    vectors.iter().filter(|v| e.insert((*v).clone())).count()
}

/// Dense matrix inverse by Gauss–Jordan; `None` if singular.
pub fn invert(field: Field, matrix: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Scalar>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inverse().ok()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(field: Field, xs: &[i64]) -> Vector {
        Vector::from_terms(xs.iter().enumerate().map(|(i, &x)| (i, field.int(x))))
    }

    #[test]
    fn kernel_and_image() {
        let q = Field::Rationals;
        // columns: (1,0), (0,1), (1,1)
        let cols = vec![vec_of(q, &[1, 0]), vec_of(q, &[0, 1]), vec_of(q, &[1, 1])];
        let red = reduce_map(q, &cols);
        assert_eq!(red.image.rank(), 2);
        assert_eq!(red.kernel.len(), 1);
        // kernel spanned by (1, 1, -1)
        let k = &red.kernel[0];
        assert_eq!(k.get(0), Some(&q.one()));
        assert_eq!(k.get(1), Some(&q.one()));
        assert_eq!(k.get(2), Some(&q.int(-1)));
        let x = red.image.solve(&vec_of(q, &[2, 3])).unwrap();
        let mut back = Vector::zero();
        for (j, c) in x.iter() {
            back.add_scaled(c, &cols[j]);
        }
        assert_eq!(back, vec_of(q, &[2, 3]));
    }

    #[test]
    fn solve_fails_outside_span() {
        let q = Field::Rationals;
        let cols = vec![vec_of(q, &[1, 1, 0])];
        let red = reduce_map(q, &cols);
        assert!(red.image.solve(&vec_of(q, &[1, 0, 0])).is_none());
    }

    #[test]
    fn bareiss_matches_sparse_rank() {
        let q = Field::Rationals;
        let m: Vec<Vec<i64>> = vec![vec![2, 4, 1, 0], vec![1, 2, 3, 5], vec![3, 6, 4, 5], vec![0, 0, 1, 1]];
        let dense: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let sparse: Vec<Vector> = m.iter().map(|r| vec_of(q, r)).collect();
        assert_eq!(bareiss_rank(dense), rank(q, &sparse));
        assert_eq!(rank(q, &sparse), 3);
    }

    #[test]
    fn inverse_over_prime_field() {
        let f = Field::prime(5).unwrap();
        let m = vec![vec![f.int(0), f.int(1)], vec![f.int(1), f.int(0)]];
        let inv = invert(f, &m).unwrap();
        assert_eq!(inv, m);
        let singular = vec![vec![f.int(1), f.int(2)], vec![f.int(2), f.int(4)]];
        assert!(invert(f, &singular).is_none());
    }
}
