//! Z2-graded algebras presented by structure constants.
//!
//! An algebra lives on a basis e_0, ..., e_{n-1} where the first `d0` vectors
//! are even and the remaining `d1` odd. The product is stored as the dense
//! table c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k. Everything
//! downstream (law checks, searches, classifications) works on this table
//! with exact scalars.

use crate::laws::{LawReport, Violation};
use crate::matrix::Matrix;
use crate::scalar::{FieldDescriptor, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis index {idx} out of range for dimension {n}")]
    IndexOutOfRange { idx: usize, n: usize },
    #[error("structure table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("duplicate structure constant for ({0}, {1}, {2})")]
    DuplicateEntry(usize, usize, usize),
    #[error("scalar at ({0}, {1}, {2}) belongs to a different field")]
    EntryFieldMismatch(usize, usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("basis-change matrix is singular")]
    SingularTransform,
    #[error("basis-change matrix mixes parities at entry ({0}, {1})")]
    TransformNotGraded(usize, usize),
}

/// Parity of a homogeneous element: 0 = even, 1 = odd.
pub type Parity = u8;

/// Koszul sign (-1)^(ij) for parities i, j: true means the sign is -1.
pub fn sign_is_negative(i: Parity, j: Parity) -> bool {
    i == 1 && j == 1
}

/// A coordinate vector over the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVector {
    pub coeffs: Vec<Scalar>,
}

impl GradedVector {
    pub fn zero(n: usize, field: FieldDescriptor) -> Self {
        GradedVector { coeffs: vec![field.zero(); n] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &GradedVector) -> Result<GradedVector, AlgebraError> {
        self.zip(other, Scalar::add_raw)
    }

    pub fn sub(&self, other: &GradedVector) -> Result<GradedVector, AlgebraError> {
        self.zip(other, Scalar::sub_raw)
    }

    pub fn neg(&self) -> GradedVector {
        GradedVector { coeffs: self.coeffs.iter().map(Scalar::neg).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> GradedVector {
        GradedVector { coeffs: self.coeffs.iter().map(|c| c.mul_raw(s)).collect() }
    }

    fn zip(
        &self,
        other: &GradedVector,
        op: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<GradedVector, AlgebraError> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.coeffs.len(),
                other.coeffs.len()
            )));
        }
        if self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .any(|(a, b)| a.field() != b.field())
        {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(GradedVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }
}

/// A finite-dimensional Z2-graded algebra given by structure constants.
///
/// The table is immutable after construction. Construction validates shape
/// and field consistency; the grading condition (the product of homogeneous
/// elements is homogeneous of the summed parity) is checked separately by
/// [`SuperAlgebra::is_graded`] so that violating tables can still be
/// represented and reported on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    d0: usize,
    d1: usize,
    field: FieldDescriptor,
    c: Vec<Scalar>,
}

impl SuperAlgebra {
    pub fn zero(d0: usize, d1: usize, field: FieldDescriptor) -> Self {
        let n = d0 + d1;
        SuperAlgebra { d0, d1, field, c: vec![field.zero(); n * n * n] }
    }

    /// Build from a sparse list of (i, j, k, value). Unlisted entries are
    /// zero; listing the same slot twice is an error, not a sum.
    pub fn from_entries(
        d0: usize,
        d1: usize,
        field: FieldDescriptor,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, AlgebraError> {
        let n = d0 + d1;
        let mut alg = SuperAlgebra::zero(d0, d1, field);
        let mut seen = vec![false; n * n * n];
        for &(i, j, k, ref v) in entries {
            for idx in [i, j, k] {
                if idx >= n {
                    return Err(AlgebraError::IndexOutOfRange { idx, n });
                }
            }
            let flat = (i * n + j) * n + k;
            if seen[flat] {
                return Err(AlgebraError::DuplicateEntry(i, j, k));
            }
            seen[flat] = true;
            if v.field() != field {
                return Err(AlgebraError::EntryFieldMismatch(i, j, k));
            }
            alg.c[flat] = v.clone();
        }
        Ok(alg)
    }

    /// Build from a dense table in (i, j, k) row-major order.
    pub fn from_table(
        d0: usize,
        d1: usize,
        field: FieldDescriptor,
        c: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let n = d0 + d1;
        if c.len() != n * n * n {
            return Err(AlgebraError::TableSize { got: c.len(), expected: n * n * n });
        }
        for (flat, v) in c.iter().enumerate() {
            if v.field() != field {
                let k = flat % n;
                let j = (flat / n) % n;
                let i = flat / (n * n);
                return Err(AlgebraError::EntryFieldMismatch(i, j, k));
            }
        }
        Ok(SuperAlgebra { d0, d1, field, c })
    }

    pub fn n(&self) -> usize {
        self.d0 + self.d1
    }

    pub fn d0(&self) -> usize {
        self.d0
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// Parity of basis vector `idx`, range-checked.
    pub fn parity(&self, idx: usize) -> Result<Parity, AlgebraError> {
        if idx >= self.n() {
            return Err(AlgebraError::IndexOutOfRange { idx, n: self.n() });
        }
        Ok(self.parity_of(idx))
    }

    #[inline]
    pub(crate) fn parity_of(&self, idx: usize) -> Parity {
        debug_assert!(idx < self.n());
        u8::from(idx >= self.d0)
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.n();
        &self.c[(i * n + j) * n + k]
    }

    /// The coordinates of e_i * e_j as a slice of length n.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.n();
        &self.c[(i * n + j) * n..(i * n + j) * n + n]
    }

    pub fn basis_vector(&self, i: usize) -> GradedVector {
        let mut v = GradedVector::zero(self.n(), self.field);
        v.coeffs[i] = self.field.one();
        v
    }

    pub fn table(&self) -> &[Scalar] {
        &self.c
    }

    /// Mutable table access for the search engine, which rewrites candidate
    /// slots in place instead of rebuilding tables.
    pub(crate) fn table_mut(&mut self) -> &mut [Scalar] {
        &mut self.c
    }

    /// Bilinear product of two coordinate vectors.
    pub fn multiply(
        &self,
        x: &GradedVector,
        y: &GradedVector,
    ) -> Result<GradedVector, AlgebraError> {
        let n = self.n();
        if x.coeffs.len() != n || y.coeffs.len() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "vectors of length {} and {} over an algebra of dimension {}",
                x.coeffs.len(),
                y.coeffs.len(),
                n
            )));
        }
        if x
            .coeffs
            .iter()
            .chain(&y.coeffs)
            .any(|c| c.field() != self.field)
        {
            return Err(AlgebraError::FieldMismatch);
        }
        let mut out = GradedVector::zero(n, self.field);
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coeffs.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.mul_raw(yj);
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.coeffs[k].mul_acc(&w, c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every (i, j, k) where the table sends e_i * e_j into the wrong
    /// graded component, i.e. c[i][j][k] != 0 with parity(k) != parity(i) +
    /// parity(j).
    pub fn grading_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let want = self.parity_of(i) ^ self.parity_of(j);
                for k in 0..n {
                    if self.parity_of(k) != want && !self.c(i, j, k).is_zero() {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Allocation-free form of the grading check.
    pub fn grading_ok(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let want = self.parity_of(i) ^ self.parity_of(j);
                for k in 0..n {
                    if self.parity_of(k) != want && !self.c(i, j, k).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Check that the product respects the grading. Each violation records
    /// the offending coefficient as a residual vector supported at k.
    pub fn is_graded(&self) -> LawReport {
        let violations = self
            .grading_violations()
            .into_iter()
            .map(|(i, j, k)| {
                let mut residual = GradedVector::zero(self.n(), self.field);
                residual.coeffs[k] = self.c(i, j, k).clone();
                Violation {
                    law: crate::laws::LAW_GRADING.to_string(),
                    indices: vec![i, j, k],
                    residual,
                }
            })
            .collect();
        LawReport::from_violations(crate::laws::LAW_GRADING, violations)
    }

    /// Whether `v` lies in the graded component of the given parity.
    pub fn is_homogeneous(&self, v: &GradedVector, parity: Parity) -> bool {
        v.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.parity_of(i) == parity)
    }

    /// True when the odd part multiplies to zero: A1 * A1 = 0.
    pub fn odd_square_is_zero(&self) -> bool {
        let n = self.n();
        for i in self.d0..n {
            for j in self.d0..n {
                if !self.basis_product(i, j).iter().all(Scalar::is_zero) {
                    return false;
                }
            }
        }
        true
    }

    /// Re-express the table in the basis e'_i = sum_j P[j][i] e_j (columns of
    /// P are the new basis vectors in old coordinates). P must be invertible
    /// and parity-preserving, so the new basis is graded the same way.
    pub fn transform(&self, p: &Matrix) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.n();
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} basis change over an algebra of dimension {}",
                p.rows(),
                p.cols(),
                n
            )));
        }
        if p.field() != self.field {
            return Err(AlgebraError::FieldMismatch);
        }
        for r in 0..n {
            for c in 0..n {
                if self.parity_of(r) != self.parity_of(c) && !p.get(r, c).is_zero() {
                    return Err(AlgebraError::TransformNotGraded(r, c));
                }
            }
        }
        let q = p.inverse().map_err(|_| AlgebraError::SingularTransform)?;
        let mut out = SuperAlgebra::zero(self.d0, self.d1, self.field);
        // c'[a][b][m] = sum_{i,j,k} P[i][a] P[j][b] c[i][j][k] Q[m][k]
        for a in 0..n {
            for b in 0..n {
                // product of the new basis vectors in old coordinates
                let mut prod = vec![self.field.zero(); n];
                for i in 0..n {
                    let pia = p.get(i, a);
                    if pia.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let pjb = p.get(j, b);
                        if pjb.is_zero() {
                            continue;
                        }
                        let w = pia.mul_raw(pjb);
                        for (k, c) in self.basis_product(i, j).iter().enumerate() {
                            if !c.is_zero() {
                                prod[k].mul_acc(&w, c);
                            }
                        }
                    }
                }
                for m in 0..n {
                    let mut acc = self.field.zero();
                    for (k, pk) in prod.iter().enumerate() {
                        if !pk.is_zero() {
                            acc.mul_acc(q.get(m, k), pk);
                        }
                    }
                    let flat = (a * n + b) * n + m;
                    out.c[flat] = acc;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    /// d0 = 1, d1 = 1, v * v = e.
    fn odd_square_algebra() -> SuperAlgebra {
        SuperAlgebra::from_entries(1, 1, rational(), &[(1, 1, 0, rational().one())]).unwrap()
    }

    /// d0 = 1, d1 = 2, u * v = e, v * u = -e.
    fn odd_pair_algebra() -> SuperAlgebra {
        SuperAlgebra::from_entries(
            1,
            2,
            rational(),
            &[(1, 2, 0, rational().one()), (2, 1, 0, rational().integer(-1))],
        )
        .unwrap()
    }

    #[test]
    fn parity_layout() {
        let a = odd_pair_algebra();
        assert_eq!(a.parity(0).unwrap(), 0);
        assert_eq!(a.parity(1).unwrap(), 1);
        assert_eq!(a.parity(2).unwrap(), 1);
        assert_eq!(
            a.parity(3),
            Err(AlgebraError::IndexOutOfRange { idx: 3, n: 3 })
        );
    }

    #[test]
    fn multiply_basis_vectors() {
        let a = odd_square_algebra();
        let v = a.basis_vector(1);
        let prod = a.multiply(&v, &v).unwrap();
        assert_eq!(prod, a.basis_vector(0));
        let e = a.basis_vector(0);
        assert!(a.multiply(&e, &v).unwrap().is_zero());
    }

    #[test]
    fn multiply_is_bilinear() {
        let a = odd_pair_algebra();
        let f = rational();
        let u = a.basis_vector(1);
        let v = a.basis_vector(2);
        let w = u.scale(&f.integer(2)).add(&v.scale(&f.integer(3))).unwrap();
        // (2u + 3v)(u) = 3 * vu = -3e
        let prod = a.multiply(&w, &u).unwrap();
        assert_eq!(prod, a.basis_vector(0).scale(&f.integer(-3)));
    }

    #[test]
    fn grading_violation_is_reported() {
        // e * e = v would land an even product in the odd part
        let bad =
            SuperAlgebra::from_entries(1, 1, rational(), &[(0, 0, 1, rational().one())]).unwrap();
        assert_eq!(bad.grading_violations(), vec![(0, 0, 1)]);
        let report = bad.is_graded();
        assert!(!report.pass);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].indices, vec![0, 0, 1]);
        assert!(odd_square_algebra().is_graded().pass);
    }

    #[test]
    fn duplicate_entries_are_rejected() {
        let err = SuperAlgebra::from_entries(
            1,
            1,
            rational(),
            &[(1, 1, 0, rational().one()), (1, 1, 0, rational().one())],
        )
        .unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateEntry(1, 1, 0));
    }

    #[test]
    fn homogeneity() {
        let a = odd_pair_algebra();
        assert!(a.is_homogeneous(&a.basis_vector(0), 0));
        assert!(a.is_homogeneous(&a.basis_vector(1), 1));
        assert!(!a.is_homogeneous(&a.basis_vector(1), 0));
        let mixed = a.basis_vector(0).add(&a.basis_vector(1)).unwrap();
        assert!(!a.is_homogeneous(&mixed, 0) && !a.is_homogeneous(&mixed, 1));
        // zero vector is homogeneous of every parity
        let zero = GradedVector::zero(3, rational());
        assert!(a.is_homogeneous(&zero, 0) && a.is_homogeneous(&zero, 1));
    }

    #[test]
    fn odd_square_detection() {
        assert!(!odd_square_algebra().odd_square_is_zero());
        assert!(!odd_pair_algebra().odd_square_is_zero());
        let trivial = SuperAlgebra::zero(1, 2, rational());
        assert!(trivial.odd_square_is_zero());
    }

    #[test]
    fn transform_scaling_odd_vector() {
        // scaling v by 2 scales c[1][1][0] by 4
        let a = odd_square_algebra();
        let p = Matrix::from_i64_rows(rational(), &[&[1, 0], &[0, 2]]);
        let b = a.transform(&p).unwrap();
        assert_eq!(*b.c(1, 1, 0), rational().integer(4));
    }

    #[test]
    fn transform_round_trip() {
        let a = odd_pair_algebra();
        let p = Matrix::from_i64_rows(rational(), &[&[1, 0, 0], &[0, 1, 2], &[0, 1, 1]]);
        let back = a
            .transform(&p)
            .unwrap()
            .transform(&p.inverse().unwrap())
            .unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn transform_rejects_bad_matrices() {
        let a = odd_square_algebra();
        let singular = Matrix::from_i64_rows(rational(), &[&[1, 0], &[0, 0]]);
        assert_eq!(a.transform(&singular), Err(AlgebraError::SingularTransform));
        let mixing = Matrix::from_i64_rows(rational(), &[&[1, 1], &[0, 1]]);
        assert_eq!(
            a.transform(&mixing),
            Err(AlgebraError::TransformNotGraded(0, 1))
        );
    }
}
