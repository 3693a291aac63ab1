use std::sync::Arc;

use super::field::{ExtElement, GaloisField};
use super::census::rank_weight;
use crate::error::{Error, Result};

/// A vector of length `n` over `GF(q^m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeVector(pub Vec<ExtElement>);

impl CodeVector {
    pub fn zero(n: usize) -> Self {
        CodeVector(vec![ExtElement::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[ExtElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn inner(&self, other: &CodeVector, field: &GaloisField) -> ExtElement {
        self.0
            .iter()
            .zip(&other.0)
            .fold(ExtElement::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
    }

    pub fn scaled(&self, c: ExtElement, field: &GaloisField) -> CodeVector {
        CodeVector(self.0.iter().map(|&a| field.mul(c, a)).collect())
    }

    pub fn plus(&self, other: &CodeVector, field: &GaloisField) -> CodeVector {
        CodeVector(self.0.iter().zip(&other.0).map(|(&a, &b)| field.add(a, b)).collect())
    }
}

/// An `(n, k)` linear code over `GF(q^m)` given by a generator matrix with
/// linearly independent rows.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<GaloisField>,
    n: usize,
    generator: Vec<CodeVector>,
}

/// Reduced row echelon form over `GF(q^m)`. Returns the nonzero rows and
/// their pivot columns.
pub(crate) fn rref(rows: &[CodeVector], n: usize, field: &GaloisField) -> (Vec<CodeVector>, Vec<usize>) {
    let mut mat: Vec<CodeVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(sel) = (rank..mat.len()).find(|&r| !mat[r].0[col].is_zero()) else {
            continue;
        };
        mat.swap(rank, sel);
        let inv = field.inv(mat[rank].0[col]).expect("pivot is nonzero");
        mat[rank] = mat[rank].scaled(inv, field);
        for r in 0..mat.len() {
            if r != rank && !mat[r].0[col].is_zero() {
                let factor = field.neg(mat[r].0[col]);
                let add = mat[rank].scaled(factor, field);
                mat[r] = mat[r].plus(&add, field);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    mat.truncate(rank);
    (mat, pivots)
}

impl LinearCode {
    pub fn new(field: Arc<GaloisField>, n: usize, generator: Vec<CodeVector>) -> Result<Self> {
        if let Some(row) = generator.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("generator row has length {} but n = {n}", row.len())));
        }
        if let Some(bad) = generator.iter().flat_map(|r| r.0.iter()).find(|e| e.0 >= field.order()) {
            return Err(Error::ElementOutOfRange { value: bad.0 as u64, q: field.q(), m: field.m() });
        }
        let (reduced, _) = rref(&generator, n, &field);
        if reduced.len() != generator.len() {
            return Err(Error::DependentRows);
        }
        Ok(LinearCode { field, n, generator })
    }

    /// The zero-dimensional code `{0}`.
    pub fn zero(field: Arc<GaloisField>, n: usize) -> Self {
        LinearCode { field, n, generator: Vec::new() }
    }

    /// `GF(q^m)^n`.
    pub fn whole_space(field: Arc<GaloisField>, n: usize) -> Self {
        let generator = (0..n)
            .map(|i| {
                let mut v = CodeVector::zero(n);
                v.0[i] = ExtElement::ONE;
                v
            })
            .collect();
        LinearCode { field, n, generator }
    }

    /// The `(n, 1)` repetition code spanned by the all-ones vector.
    pub fn repetition(field: Arc<GaloisField>, n: usize) -> Self {
        LinearCode { field, n, generator: vec![CodeVector(vec![ExtElement::ONE; n])] }
    }

    /// The code `<v>` spanned by a single vector (the zero code when `v = 0`).
    pub fn span_of(field: Arc<GaloisField>, v: CodeVector) -> Self {
        let n = v.len();
        if v.is_zero() {
            return Self::zero(field, n);
        }
        LinearCode { field, n, generator: vec![v] }
    }

    /// Gabidulin code with Moore-matrix generator: row `i` is
    /// `(g_0^{q^i}, ..., g_{n-1}^{q^i})` for `i < k`.
    pub fn gabidulin(field: Arc<GaloisField>, n: usize, k: usize, points: &[ExtElement]) -> Result<Self> {
        if points.len() != n {
            return Err(Error::Dimension(format!("{} points given for length {n}", points.len())));
        }
        if n > field.m() {
            return Err(Error::OutOfRange(format!("Gabidulin length {n} exceeds m = {}", field.m())));
        }
        if k > n {
            return Err(Error::OutOfRange(format!("dimension {k} exceeds length {n}")));
        }
        let pv = CodeVector(points.to_vec());
        if rank_weight(&pv, &field) != n {
            return Err(Error::DependentPoints);
        }
        let generator = (0..k)
            .map(|i| CodeVector(points.iter().map(|&g| field.frobenius(g, i)).collect()))
            .collect();
        Self::new(field, n, generator)
    }

    /// Gabidulin code on the first `n` power-basis elements `1, x, ..., x^{n-1}`.
    pub fn gabidulin_standard(field: Arc<GaloisField>, n: usize, k: usize) -> Result<Self> {
        let points: Vec<ExtElement> = (0..n.min(field.m())).map(|t| field.basis(t)).collect();
        Self::gabidulin(field, n, k, &points)
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[CodeVector] {
        &self.generator
    }

    /// Canonical basis of the row space.
    pub fn reduced_generator(&self) -> Vec<CodeVector> {
        rref(&self.generator, self.n, &self.field).0
    }

    pub fn same_row_space(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.field.spec() == other.field.spec() && self.reduced_generator() == other.reduced_generator()
    }

    /// The dual code under `u . v = sum u_i v_i`.
    pub fn dual(&self) -> LinearCode {
        let field = &self.field;
        let (reduced, pivots) = rref(&self.generator, self.n, field);
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let generator = free
            .iter()
            .map(|&f| {
                let mut v = CodeVector::zero(self.n);
                v.0[f] = ExtElement::ONE;
                for (row, &p) in reduced.iter().zip(&pivots) {
                    v.0[p] = field.neg(row.0[f]);
                }
                v
            })
            .collect();
        LinearCode { field: Arc::clone(field), n: self.n, generator }
    }

    /// `self x GF(q^m)^s`: block-diagonal generator with an identity block on
    /// the appended coordinates.
    pub fn cartesian_product(&self, s: usize) -> LinearCode {
        let n = self.n + s;
        let mut generator: Vec<CodeVector> = self
            .generator
            .iter()
            .map(|r| {
                let mut v = r.0.clone();
                v.resize(n, ExtElement::ZERO);
                CodeVector(v)
            })
            .collect();
        for i in 0..s {
            let mut v = CodeVector::zero(n);
            v.0[self.n + i] = ExtElement::ONE;
            generator.push(v);
        }
        LinearCode { field: Arc::clone(&self.field), n, generator }
    }

    /// Whether every generator row of `self` is orthogonal to every row of `other`.
    pub fn orthogonal_to(&self, other: &LinearCode) -> bool {
        self.generator
            .iter()
            .all(|u| other.generator.iter().all(|v| u.inner(v, &self.field).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcodes::field::FieldSpec;

    fn gf(q: u32, m: usize) -> Arc<GaloisField> {
        Arc::new(GaloisField::new(FieldSpec::default_for(q, m).unwrap()))
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let f = gf(2, 2);
        let row = CodeVector(vec![ExtElement(1), ExtElement(2)]);
        let twice = row.scaled(ExtElement(3), &f);
        assert_eq!(LinearCode::new(f.clone(), 2, vec![row.clone(), twice]).unwrap_err(), Error::DependentRows);
        assert!(LinearCode::new(f.clone(), 3, vec![row]).is_err());
    }

    #[test]
    fn dual_examples() {
        let f = gf(2, 2);
        let whole = LinearCode::whole_space(f.clone(), 2);
        assert_eq!(whole.dual().k(), 0);
        let rep = LinearCode::repetition(f.clone(), 2);
        assert!(rep.dual().same_row_space(&rep));
        let zero = LinearCode::zero(f.clone(), 3);
        assert!(zero.dual().same_row_space(&LinearCode::whole_space(f, 3)));
    }

    #[test]
    fn dual_is_orthogonal_complement() {
        let f = gf(3, 2);
        let rows = vec![
            CodeVector(vec![ExtElement(1), ExtElement(4), ExtElement(0), ExtElement(7)]),
            CodeVector(vec![ExtElement(0), ExtElement(2), ExtElement(5), ExtElement(3)]),
        ];
        let c = LinearCode::new(f, 4, rows).unwrap();
        let d = c.dual();
        assert_eq!(c.k() + d.k(), 4);
        assert!(c.orthogonal_to(&d));
        assert!(d.dual().same_row_space(&c));
    }

    #[test]
    fn cartesian_product_shape() {
        let f = gf(2, 2);
        let rep = LinearCode::repetition(f.clone(), 2);
        assert!(rep.cartesian_product(0).same_row_space(&rep));
        let c = LinearCode::zero(f.clone(), 0).cartesian_product(1);
        assert!(c.same_row_space(&LinearCode::whole_space(f, 1)));
        let c = rep.cartesian_product(2);
        assert_eq!((c.n(), c.k()), (4, 3));
    }

    #[test]
    fn gabidulin_rejects_dependent_points() {
        let f = gf(2, 3);
        let pts = [ExtElement(1), ExtElement(2), ExtElement(3)];
        assert_eq!(LinearCode::gabidulin(f.clone(), 3, 2, &pts).unwrap_err(), Error::DependentPoints);
        assert!(LinearCode::gabidulin_standard(f.clone(), 3, 2).is_ok());
        let square = LinearCode::gabidulin_standard(f.clone(), 3, 3).unwrap();
        assert!(square.same_row_space(&LinearCode::whole_space(f, 3)));
    }
}
