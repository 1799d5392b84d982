//! Finite-dimensional basic algebras given by structure constants.

mod construct;
mod extension;
pub mod families;
mod iso;
mod quiver;

use std::fmt;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

pub use construct::enveloping;
pub use extension::{Extension, ExtensionPredicates};
pub use iso::{find_isomorphism, AlgebraIso};
pub use quiver::{Arrow, Path, QuiverPresentation, Relation};

use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// A finite-dimensional basic elementary algebra.
///
/// The product is stored as one left-multiplication matrix per basis
/// element: column `b` of `left[a]` holds the coordinates of `e_a * e_b`.
pub struct Algebra {
    field: PrimeField,
    labels: Vec<String>,
    left: Vec<Matrix>,
    unit: Vec<u32>,
    idempotents: Vec<Vec<u32>>,
    presentation: Option<QuiverPresentation>,
    paths: Option<Vec<Path>>,
    radical: OnceLock<Result<Matrix>>,
    generators: OnceLock<Result<Vec<Vec<u32>>>>,
    homogeneous: OnceLock<Vec<Homogeneous>>,
    opposite: OnceLock<Arc<Algebra>>,
    standard: crate::module::StandardCache,
}

/// An element `e_target * x * e_source`; it maps `e_source M` into `e_target M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub source: usize,
    pub target: usize,
    pub element: Vec<u32>,
}

impl Algebra {
    /// Builds and validates an algebra from left-multiplication matrices.
    pub fn from_table(
        field: PrimeField,
        labels: Vec<String>,
        left: Vec<Matrix>,
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let alg = Self::assemble(field, labels, left, unit, idempotents, None, None)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Like [`Algebra::from_table`] with a known radical basis, for
    /// subalgebras of matrix algebras where the trace form of the natural
    /// representation is cheaper and needs a smaller prime.
    pub(crate) fn from_table_with_radical(
        field: PrimeField,
        labels: Vec<String>,
        left: Vec<Matrix>,
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
        radical: Matrix,
    ) -> Result<Self> {
        let alg = Self::assemble(field, labels, left, unit, idempotents, None, None)?;
        let _ = alg.radical.set(Ok(radical));
        alg.validate()?;
        Ok(alg)
    }

    /// Builds from sparse structure constants `e_a * e_b = sum coeff * e_c`.
    pub fn from_structure_constants(
        field: PrimeField,
        labels: Vec<String>,
        triples: &[(usize, usize, usize, i64)],
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut left = vec![Matrix::zeros(field, dim, dim); dim];
        for &(a, b, c, v) in triples {
            if a >= dim || b >= dim || c >= dim {
                return Err(Error::Shape(format!(
                    "structure constant ({a}, {b}, {c}) out of range for dim {dim}"
                )));
            }
            let cur = left[a].get(c, b);
            left[a].set(c, b, field.add(cur, field.reduce(v)));
        }
        Self::from_table(field, labels, left, unit, idempotents)
    }

    pub(crate) fn assemble(
        field: PrimeField,
        labels: Vec<String>,
        left: Vec<Matrix>,
        unit: Vec<u32>,
        idempotents: Vec<Vec<u32>>,
        presentation: Option<QuiverPresentation>,
        paths: Option<Vec<Path>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if left.len() != dim || left.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape(format!(
                "expected {dim} multiplication matrices of size {dim}x{dim}"
            )));
        }
        if unit.len() != dim || idempotents.iter().any(|e| e.len() != dim) {
            return Err(Error::Shape("unit or idempotent has wrong length".into()));
        }
        Ok(Algebra {
            field,
            labels,
            left,
            unit,
            idempotents,
            presentation,
            paths,
            radical: OnceLock::new(),
            generators: OnceLock::new(),
            homogeneous: OnceLock::new(),
            opposite: OnceLock::new(),
            standard: OnceLock::new(),
        })
    }

    fn validate(&self) -> Result<()> {
        let f = self.field;
        let n = self.dim();
        let id = Matrix::identity(f, n);
        if self.left_mul(&self.unit) != id || self.right_mul(&self.unit) != id {
            return Err(Error::InvalidUnit(
                "unit is not a two-sided identity".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.left[a].column(b);
                let lhs = self.left_mul(&ab);
                let rhs = self.left[a].mul(&self.left[b]);
                if lhs != rhs {
                    let c = (0..n)
                        .find(|&c| lhs.column(c) != rhs.column(c))
                        .expect("matrices differ in some column");
                    return Err(Error::NonAssociative(
                        self.labels[a].clone(),
                        self.labels[b].clone(),
                        self.labels[c].clone(),
                    ));
                }
            }
        }
        self.validate_idempotents()?;
        let rad = self.radical()?;
        let quotient = n - rad.cols();
        if quotient != self.idempotents.len() {
            return Err(Error::NotBasic {
                quotient,
                idempotents: self.idempotents.len(),
            });
        }
        Ok(())
    }

    fn validate_idempotents(&self) -> Result<()> {
        let f = self.field;
        if self.idempotents.is_empty() && self.dim() > 0 {
            return Err(Error::InvalidIdempotents("no idempotents given".into()));
        }
        let mut sum = vec![0; self.dim()];
        for (i, e) in self.idempotents.iter().enumerate() {
            if e.iter().all(|&v| v == 0) {
                return Err(Error::InvalidIdempotents(format!("idempotent {i} is zero")));
            }
            for (j, g) in self.idempotents.iter().enumerate() {
                let prod = self.mul(e, g);
                let expected: Vec<u32> = if i == j {
                    e.clone()
                } else {
                    vec![0; self.dim()]
                };
                if prod != expected {
                    return Err(Error::InvalidIdempotents(format!(
                        "e{i} * e{j} should be {}",
                        if i == j { "e_i" } else { "zero" }
                    )));
                }
            }
            for (s, &v) in sum.iter_mut().zip(e) {
                *s = f.add(*s, v);
            }
        }
        if sum != self.unit {
            return Err(Error::InvalidIdempotents(
                "idempotents do not sum to the unit".into(),
            ));
        }
        Ok(())
    }

    /// The one-dimensional algebra `k`.
    pub fn ground(field: PrimeField) -> Arc<Algebra> {
        let one = Matrix::identity(field, 1);
        Arc::new(
            Self::assemble(
                field,
                vec!["1".into()],
                vec![one],
                vec![1],
                vec![vec![1]],
                None,
                None,
            )
            .expect("ground field algebra is well formed"),
        )
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.idempotents
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    /// Display name of vertex `i`: the quiver label, or its 1-based index.
    pub fn vertex_label(&self, i: usize) -> String {
        match &self.presentation {
            Some(p) => p.vertices[i].clone(),
            None => (i + 1).to_string(),
        }
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.presentation.as_ref()
    }

    /// Basis paths, when the algebra came from a quiver.
    pub fn paths(&self) -> Option<&[Path]> {
        self.paths.as_deref()
    }

    /// Left multiplication by basis element `a`.
    pub fn left_matrix(&self, a: usize) -> &Matrix {
        &self.left[a]
    }

    pub fn left_matrices(&self) -> &[Matrix] {
        &self.left
    }

    /// Structure constant: coefficient of `e_c` in `e_a * e_b`.
    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> u32 {
        self.left[a].get(c, b)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Matrix of `u -> x * u`.
    pub fn left_mul(&self, x: &[u32]) -> Matrix {
        let n = self.dim();
        Matrix::combination(self.field, n, n, x, &self.left)
    }

    /// Matrix of `u -> u * y`.
    pub fn right_mul(&self, y: &[u32]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<u32>> = self.left.iter().map(|l| l.mul_vec(y)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.left_mul(x).mul_vec(y)
    }

    /// Basis (as columns) of the Jacobson radical.
    ///
    /// Quiver-built algebras use the span of paths of positive length;
    /// otherwise the radical of the trace form `tr(L_x L_y)`, which is exact
    /// when `p > dim`.
    pub fn radical(&self) -> Result<Matrix> {
        self.radical
            .get_or_init(|| match &self.paths {
                Some(paths) => {
                    let cols: Vec<usize> = paths
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| !p.arrows.is_empty())
                        .map(|(i, _)| i)
                        .collect();
                    Ok(Matrix::identity(self.field, self.dim()).select_columns(&cols))
                }
                None => self.radical_by_trace_form(),
            })
            .clone()
    }

    pub fn radical_by_trace_form(&self) -> Result<Matrix> {
        trace_form_radical(self.field, &self.left)
    }

    /// Idempotents followed by radical elements spanning `rad / rad^2`.
    /// Together they generate the algebra.
    pub fn generators(&self) -> Result<Vec<Vec<u32>>> {
        self.generators
            .get_or_init(|| {
                let mut gens = self.idempotents.clone();
                let rad = self.radical()?;
                let n = self.dim();
                let mut products = Vec::new();
                for i in 0..rad.cols() {
                    let li = self.left_mul(&rad.column(i));
                    for j in 0..rad.cols() {
                        products.push(li.mul_vec(&rad.column(j)));
                    }
                }
                let mut span = Matrix::from_columns(self.field, n, &products).column_basis();
                for i in 0..rad.cols() {
                    let v = Matrix::column_vector(self.field, &rad.column(i));
                    if !span.spans(&v) {
                        span = Matrix::hstack(self.field, n, &[&span, &v]);
                        gens.push(rad.column(i));
                    }
                }
                Ok(gens)
            })
            .clone()
    }

    pub(crate) fn standard_cache(&self) -> &crate::module::StandardCache {
        &self.standard
    }

    /// `e_i * x * e_j`.
    pub fn corner(&self, i: usize, x: &[u32], j: usize) -> Vec<u32> {
        let left = self.mul(&self.idempotents[i], x);
        self.mul(&left, &self.idempotents[j])
    }

    /// Nonzero corners of the radical generators. Together with the
    /// idempotents they generate the algebra; when the radical is
    /// unavailable the corners of every basis element are used instead.
    pub fn homogeneous_generators(&self) -> &[Homogeneous] {
        self.homogeneous.get_or_init(|| {
            let n = self.vertex_count();
            let gens: Vec<Vec<u32>> = match self.generators() {
                Ok(g) => g[n..].to_vec(),
                Err(_) => (0..self.dim()).map(|b| self.basis_vector(b)).collect(),
            };
            let mut out = Vec::new();
            for g in &gens {
                for target in 0..n {
                    for source in 0..n {
                        let element = self.corner(target, g, source);
                        if element.iter().any(|&v| v != 0) {
                            out.push(Homogeneous {
                                source,
                                target,
                                element,
                            });
                        }
                    }
                }
            }
            out
        })
    }

    /// Stable content hash of the structure constants, unit and idempotents.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(b"algebra/v1");
        h.update(self.field.modulus().to_le_bytes());
        h.update((self.dim() as u64).to_le_bytes());
        for m in &self.left {
            for &v in m.data() {
                h.update(v.to_le_bytes());
            }
        }
        for &v in &self.unit {
            h.update(v.to_le_bytes());
        }
        for e in &self.idempotents {
            h.update(b"e");
            for &v in e {
                h.update(v.to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }
}

/// Radical of the trace form of a matrix algebra spanned by `basis`.
///
/// `{x : tr(x y) = 0 for all y}` is a nil ideal when `p` exceeds the size
/// of the matrices, and it contains every nilpotent ideal.
pub(crate) fn trace_form_radical(field: PrimeField, basis: &[Matrix]) -> Result<Matrix> {
    let n = basis.len();
    let size = basis.first().map_or(0, |m| m.rows());
    if n > 0 && field.modulus() as usize <= size {
        return Err(Error::UnsupportedField {
            p: field.modulus(),
            dim: size,
        });
    }
    let gram = Matrix::from_fn(field, n, n, |i, j| basis[i].mul(&basis[j]).trace());
    Ok(gram.nullspace())
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.left == other.left
            && self.unit == other.unit
            && self.idempotents == other.idempotents
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .field("vertices", &self.vertex_count())
            .finish()
    }
}

/// Same algebra: pointer equality or identical structure constants.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Algebra {
        let f = PrimeField::default();
        Algebra::from_structure_constants(
            f,
            vec!["1".into(), "x".into()],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
            vec![1, 0],
            vec![vec![1, 0]],
        )
        .unwrap()
    }

    #[test]
    fn k2_radical_is_x() {
        let a = k2();
        let rad = a.radical().unwrap();
        assert_eq!(rad.cols(), 1);
        assert_eq!(rad.column(0), vec![0, 1]);
        assert_eq!(a.generators().unwrap(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn rejects_semisimple_quotient_of_wrong_size() {
        let f = PrimeField::default();
        // k[x]/(x^2 - x - 1) is semisimple of dimension 2 but declares one idempotent
        let err = Algebra::from_structure_constants(
            f,
            vec!["1".into(), "x".into()],
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (1, 1, 0, 1),
                (1, 1, 1, 1),
            ],
            vec![1, 0],
            vec![vec![1, 0]],
        );
        assert!(matches!(
            err,
            Err(Error::NotBasic {
                quotient: 2,
                idempotents: 1
            })
        ));
    }

    #[test]
    fn rejects_non_associative_table() {
        let f = PrimeField::default();
        // x*y = y but x*x = 0, so (x*x)*y = 0 while x*(x*y) = y
        let err = Algebra::from_structure_constants(
            f,
            vec!["1".into(), "x".into(), "y".into()],
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (0, 2, 2, 1),
                (1, 0, 1, 1),
                (2, 0, 2, 1),
                (1, 2, 2, 1),
            ],
            vec![1, 0, 0],
            vec![vec![1, 0, 0]],
        );
        assert!(matches!(err, Err(Error::NonAssociative(..))), "{err:?}");
    }

    #[test]
    fn trace_form_needs_large_prime() {
        let f = PrimeField::new(2).unwrap();
        let err = Algebra::from_structure_constants(
            f,
            vec!["1".into(), "x".into(), "y".into()],
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (0, 2, 2, 1),
                (1, 0, 1, 1),
                (2, 0, 2, 1),
            ],
            vec![1, 0, 0],
            vec![vec![1, 0, 0]],
        );
        assert!(matches!(err, Err(Error::UnsupportedField { p: 2, dim: 3 })));
    }
}
