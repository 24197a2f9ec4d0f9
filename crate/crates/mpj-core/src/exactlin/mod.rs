//! Exact rational linear algebra: canonical subspaces, kernels,
//! intersections, complements and rational eigen-decomposition.
//!
//! A [`Subspace`] is identified with its reduced-row-echelon basis, so
//! subspace equality is plain list equality.

mod eigen;

pub use eigen::rational_eigen;

use crate::rational::Rat;
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("subspace of dimension {sub} is not contained in the given space of dimension {space}")]
    NotContained { sub: usize, space: usize },
}

/// A coordinate vector over the rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QVec {
    pub coords: Vec<Rat>,
}

impl QVec {
    pub fn zero(dim: usize) -> Self {
        QVec { coords: vec![Rat::zero(); dim] }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rat::one();
        v
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        QVec { coords: coords.iter().map(|&c| crate::rational::rat(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> QVec {
        QVec { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &QVec) -> QVec {
        debug_assert_eq!(self.dim(), other.dim());
        QVec {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &QVec) -> QVec {
        debug_assert_eq!(self.dim(), other.dim());
        QVec {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    /// axpy: self + c * other.
    pub fn add_scaled(&self, c: &Rat, other: &QVec) -> QVec {
        QVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + c * b)
                .collect(),
        }
    }

    pub fn dot(&self, other: &QVec) -> Rat {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::rational::format_rat).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A rectangular matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: Vec<QVec>,
    cols: usize,
}

impl QMatrix {
    pub fn from_rows(rows: Vec<QVec>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.dim(), cols, "matrix rows must share one length");
        }
        QMatrix { rows, cols }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        QMatrix::from_rows(rows.iter().map(|r| QVec::from_i64(r)).collect(), cols)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows: vec![QVec::zero(cols); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix { rows: (0..n).map(|i| QVec::unit(n, i)).collect(), cols: n }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i].coords[j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.rows[i].coords[j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Matrix-vector product m * v.
    pub fn apply(&self, v: &QVec) -> QVec {
        assert_eq!(v.dim(), self.cols);
        QVec { coords: self.rows.iter().map(|r| r.dot(v)).collect() }
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zero(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.coords.iter().enumerate() {
                t.rows[j].coords[i] = x.clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.row_count());
        let mut out = QMatrix::zero(self.rows.len(), other.cols);
        for i in 0..self.rows.len() {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }
}

/// A rational vector subspace in canonical form: the basis rows are in
/// reduced row echelon form, so two subspaces are equal iff their bases
/// are identical lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<QVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| QVec::unit(ambient_dim, i)).collect(),
        }
    }

    pub fn span(vectors: &[QVec], ambient_dim: usize) -> Self {
        rref(&QMatrix::from_rows(vectors.to_vec(), ambient_dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    /// Pivot column of each basis row. Strictly increasing by the RREF
    /// invariant.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.coords.iter().position(|c| !c.is_zero()).expect("no zero rows in a basis"))
            .collect()
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the
    /// subspace. Reduction against an RREF basis is a single sweep.
    pub fn coordinates_of(&self, v: &QVec) -> Option<Vec<Rat>> {
        assert_eq!(v.dim(), self.ambient_dim);
        let mut rem = v.clone();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (row, &p) in self.basis.iter().zip(self.pivots().iter()) {
            let c = rem.coords[p].clone();
            if !c.is_zero() {
                rem = rem.add_scaled(&(-c.clone()), row);
            }
            coords.push(c);
        }
        if rem.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &QVec) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Canonical basis of the subspace sum (not necessarily direct).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(&rows, self.ambient_dim)
    }

    /// Reconstructs an ambient vector from coordinates in this basis.
    pub fn from_coordinates(&self, coords: &[Rat]) -> QVec {
        assert_eq!(coords.len(), self.basis.len());
        let mut v = QVec::zero(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            v = v.add_scaled(c, b);
        }
        v
    }
}

/// Reduced row echelon form of the row space of `m`, dropping zero rows.
pub fn rref(m: &QMatrix) -> Subspace {
    let cols = m.col_count();
    let mut rows: Vec<QVec> = m.rows().to_vec();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r].coords[col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = {
            let p = &rows[pivot_row].coords[col];
            Rat::one() / p.clone()
        };
        rows[pivot_row] = rows[pivot_row].scale(&inv);
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row.coords[col].is_zero() {
                let c = -row.coords[col].clone();
                *row = row.add_scaled(&c, &pivot);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    Subspace { ambient_dim: cols, basis: rows }
}

/// Canonical basis of {v : m v = 0}.
pub fn kernel(m: &QMatrix) -> Subspace {
    let cols = m.col_count();
    let row_space = rref(m);
    let pivots = row_space.pivots();
    let is_pivot: Vec<bool> = {
        let mut flags = vec![false; cols];
        for &p in &pivots {
            flags[p] = true;
        }
        flags
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = QVec::zero(cols);
        v.coords[free] = Rat::one();
        for (row, &p) in row_space.basis().iter().zip(&pivots) {
            v.coords[p] = -row.coords[free].clone();
        }
        basis.push(v);
    }
    // re-canonicalize so the kernel basis is RREF regardless of the
    // free-variable construction order
    Subspace::span(&basis, cols)
}

/// Canonical basis of s ∩ t via the annihilator: over the rationals the
/// standard bilinear form is nondegenerate, so rowspace(S) is the kernel
/// of a basis of kernel(S) stacked as rows, and intersection is the kernel
/// of both annihilators stacked.
pub fn intersect(s: &Subspace, t: &Subspace) -> Result<Subspace, LinError> {
    if s.ambient_dim != t.ambient_dim {
        return Err(LinError::DimensionMismatch(s.ambient_dim, t.ambient_dim));
    }
    let n = s.ambient_dim;
    let ann = |sp: &Subspace| kernel(&QMatrix::from_rows(sp.basis.clone(), n));
    let mut rows = ann(s).basis;
    rows.extend(ann(t).basis);
    Ok(kernel(&QMatrix::from_rows(rows, n)))
}

/// Deterministic complement of `s` inside `within`: extend the RREF basis
/// of `s` by the first basis vectors of `within` (in order) that grow the
/// span, then return the span of the added vectors.
pub fn complement(s: &Subspace, within: &Subspace) -> Result<Subspace, LinError> {
    if s.ambient_dim != within.ambient_dim {
        return Err(LinError::DimensionMismatch(s.ambient_dim, within.ambient_dim));
    }
    if !within.contains_subspace(s) {
        return Err(LinError::NotContained { sub: s.dim(), space: within.dim() });
    }
    let mut current = s.clone();
    let mut added = Vec::new();
    for cand in within.basis() {
        if !current.contains(cand) {
            added.push(cand.clone());
            let mut rows = current.basis.clone();
            rows.push(cand.clone());
            current = Subspace::span(&rows, s.ambient_dim);
        }
    }
    Ok(Subspace::span(&added, s.ambient_dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rref_collapses_dependent_rows() {
        let s = rref(&QMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(s.basis(), &[QVec::from_i64(&[1, 2])]);
    }

    #[test]
    fn rref_zero_matrix_is_zero_space() {
        let s = rref(&QMatrix::from_i64(&[&[0, 0]]));
        assert!(s.is_zero());
        assert_eq!(s.ambient_dim(), 2);
    }

    #[test]
    fn rref_scales_pivots_to_one() {
        let s = rref(&QMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s, Subspace::full(2));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = QMatrix::from_i64(&[&[2, 4, 6], &[1, 3, 5], &[0, 2, 4]]);
        let s = rref(&m);
        let again = rref(&QMatrix::from_rows(s.basis().to_vec(), 3));
        assert_eq!(s, again);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert!(kernel(&QMatrix::identity(3)).is_zero());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        assert_eq!(kernel(&QMatrix::zero(2, 3)), Subspace::full(3));
    }

    #[test]
    fn kernel_rank_nullity() {
        let m = QMatrix::from_i64(&[&[1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.basis(), &[QVec::from_i64(&[1, -1])]);
        assert_eq!(k.dim() + rref(&m).dim(), 2);
    }

    #[test]
    fn intersect_idempotent_and_disjoint() {
        let e1 = Subspace::span(&[QVec::from_i64(&[1, 0])], 2);
        let e2 = Subspace::span(&[QVec::from_i64(&[0, 1])], 2);
        assert_eq!(intersect(&e1, &e1).unwrap(), e1);
        assert!(intersect(&e1, &e2).unwrap().is_zero());
    }

    #[test]
    fn intersect_of_overlapping_planes() {
        let s = Subspace::span(&[QVec::from_i64(&[1, 0, 0]), QVec::from_i64(&[0, 1, 0])], 3);
        let t = Subspace::span(&[QVec::from_i64(&[0, 1, 0]), QVec::from_i64(&[0, 0, 1])], 3);
        let e2 = Subspace::span(&[QVec::from_i64(&[0, 1, 0])], 3);
        assert_eq!(intersect(&s, &t).unwrap(), e2);
    }

    #[test]
    fn intersect_rejects_dimension_mismatch() {
        let s = Subspace::full(2);
        let t = Subspace::full(3);
        assert_eq!(intersect(&s, &t), Err(LinError::DimensionMismatch(2, 3)));
    }

    #[test]
    fn complement_edge_cases() {
        let w = Subspace::full(2);
        assert!(complement(&w, &w).unwrap().is_zero());
        assert_eq!(complement(&Subspace::zero(2), &w).unwrap(), w);
        let e1 = Subspace::span(&[QVec::from_i64(&[1, 0])], 2);
        let e2 = Subspace::span(&[QVec::from_i64(&[0, 1])], 2);
        assert_eq!(complement(&e1, &w).unwrap(), e2);
    }

    #[test]
    fn complement_rejects_non_subspace() {
        let e1 = Subspace::span(&[QVec::from_i64(&[1, 0])], 2);
        let e2 = Subspace::span(&[QVec::from_i64(&[0, 1])], 2);
        assert!(matches!(complement(&e1, &e2), Err(LinError::NotContained { .. })));
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::span(&[QVec::from_i64(&[1, 2, 0]), QVec::from_i64(&[0, 0, 1])], 3);
        let v = QVec::from_i64(&[3, 6, -2]);
        let coords = s.coordinates_of(&v).unwrap();
        assert_eq!(coords, vec![rat(3), rat(-2)]);
        assert_eq!(s.from_coordinates(&coords), v);
        assert!(!s.contains(&QVec::from_i64(&[1, 0, 0])));
    }
}
