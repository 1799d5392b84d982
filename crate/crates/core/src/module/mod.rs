//! Finite-dimensional left modules and their morphisms.

mod hom;
mod morphism;
mod standard;
mod structure;
mod tensor;

use std::fmt;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

pub use hom::{hom_space, is_isomorphic, summand_test, IsoOutcome, ISO_TRIALS};
pub use morphism::Morphism;
pub use standard::Standard;
pub(crate) use standard::StandardCache;
pub use structure::{Cover, Envelope};
pub use tensor::{tensor_over, TensorProduct};

use crate::algebra::{same_algebra, Algebra, Extension};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// A left module given by one action matrix per algebra basis element.
#[derive(Clone)]
pub struct Module {
    inner: Arc<Inner>,
}

struct Inner {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
    adapted: OnceLock<Adapted>,
}

/// Coordinates adapted to the vertex decomposition `M = ⊕ e_i M`.
pub(crate) struct Adapted {
    /// Columns: basis of `e_0 M`, then `e_1 M`, ...
    pub t: Matrix,
    pub t_inv: Matrix,
    pub offsets: Vec<usize>,
    /// Action of each homogeneous generator in adapted coordinates.
    pub gens: Vec<Matrix>,
}

impl Adapted {
    pub fn block_dim(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }
}

impl Module {
    /// Validated construction.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "expected {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape(format!("action matrices must be {dim}x{dim}")));
        }
        let m = Self::new_unchecked(algebra, dim, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Module {
        debug_assert_eq!(action.len(), algebra.dim());
        Module {
            inner: Arc::new(Inner {
                algebra,
                dim,
                action,
                adapted: OnceLock::new(),
            }),
        }
    }

    /// Checks `ρ(unit) = 1` and `ρ(e_a) ρ(e_b) = ρ(e_a e_b)`.
    pub fn validate(&self) -> Result<()> {
        let a = self.algebra();
        let f = a.field();
        if self.act(a.unit()) != Matrix::identity(f, self.dim()) {
            return Err(Error::NotAModule(
                "unit does not act as the identity".into(),
            ));
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let lhs = self.action(x).mul(self.action(y));
                let rhs = self.act(&a.left_matrix(x).column(y));
                if lhs != rhs {
                    return Err(Error::NotAModule(format!(
                        "ρ({})ρ({}) differs from ρ({} * {})",
                        a.labels()[x],
                        a.labels()[y],
                        a.labels()[x],
                        a.labels()[y]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Module {
        let f = algebra.field();
        let action = vec![Matrix::zeros(f, 0, 0); algebra.dim()];
        Self::new_unchecked(algebra, 0, action)
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Module {
        let action = algebra.left_matrices().to_vec();
        let n = algebra.dim();
        Self::new_unchecked(algebra, n, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.inner.algebra
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Action of basis element `a`.
    pub fn action(&self, a: usize) -> &Matrix {
        &self.inner.action[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.inner.action
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &[u32]) -> Matrix {
        let f = self.algebra().field();
        Matrix::combination(f, self.dim(), self.dim(), x, &self.inner.action)
    }

    pub(crate) fn adapted(&self) -> &Adapted {
        self.inner.adapted.get_or_init(|| {
            let a = self.algebra();
            let f = a.field();
            let mut blocks = Vec::with_capacity(a.vertex_count());
            let mut offsets = vec![0];
            for e in a.idempotents() {
                let b = self.act(e).column_basis();
                offsets.push(offsets.last().unwrap() + b.cols());
                blocks.push(b);
            }
            let refs: Vec<&Matrix> = blocks.iter().collect();
            let t = Matrix::hstack(f, self.dim(), &refs);
            let t_inv = t.inverse().expect("vertex components span the module");
            let gens = a
                .homogeneous_generators()
                .iter()
                .map(|g| t_inv.mul(&self.act(&g.element)).mul(&t))
                .collect();
            Adapted {
                t,
                t_inv,
                offsets,
                gens,
            }
        })
    }

    /// `dim e_i M` for each vertex.
    pub fn vertex_dims(&self) -> Vec<usize> {
        let ad = self.adapted();
        (0..ad.offsets.len() - 1).map(|i| ad.block_dim(i)).collect()
    }

    /// Columns spanning `e_i M`.
    pub fn vertex_basis(&self, i: usize) -> Matrix {
        let ad = self.adapted();
        let cols: Vec<usize> = (ad.offsets[i]..ad.offsets[i + 1]).collect();
        ad.t.select_columns(&cols)
    }

    /// The same matrices regarded over a structurally equal algebra.
    pub fn rebind(&self, algebra: &Arc<Algebra>) -> Result<Module> {
        if !same_algebra(self.algebra(), algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self::new_unchecked(
            algebra.clone(),
            self.dim(),
            self.inner.action.clone(),
        ))
    }

    pub fn direct_sum(parts: &[&Module]) -> Result<Module> {
        let Some(first) = parts.first() else {
            return Err(Error::Precondition("direct sum of no modules".into()));
        };
        let alg = first.algebra().clone();
        if parts.iter().any(|m| !same_algebra(m.algebra(), &alg)) {
            return Err(Error::AlgebraMismatch);
        }
        let f = alg.field();
        let dim = parts.iter().map(|m| m.dim()).sum();
        let action = (0..alg.dim())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| m.action(a)).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Ok(Self::new_unchecked(alg, dim, action))
    }

    pub fn oplus(&self, other: &Module) -> Result<Module> {
        Self::direct_sum(&[self, other])
    }

    /// `n` copies of this module.
    pub fn power(&self, n: usize) -> Module {
        if n == 0 {
            return Self::zero(self.algebra().clone());
        }
        let parts: Vec<&Module> = std::iter::repeat_n(self, n).collect();
        Self::direct_sum(&parts).expect("copies share an algebra")
    }

    /// `D(M) = Hom_k(M, k)`, a left module over the opposite algebra with
    /// transposed action matrices.
    pub fn dual(&self) -> Module {
        let op = self.algebra().opposite();
        self.dual_over(&op)
    }

    /// `D(M)` regarded as a right module over the same algebra, i.e. a left
    /// module over the cached opposite algebra.
    pub fn dual_over_opposite(&self) -> Module {
        self.dual_over(&self.algebra().opposite())
    }

    /// As [`Module::dual`], landing over a given copy of the opposite
    /// algebra. The caller guarantees `op` is the opposite.
    pub(crate) fn dual_over(&self, op: &Arc<Algebra>) -> Module {
        let action = self.inner.action.iter().map(|m| m.transpose()).collect();
        Self::new_unchecked(op.clone(), self.dim(), action)
    }

    /// Restriction of scalars along an extension `B ⊆ A`.
    pub fn restrict(&self, ext: &Extension) -> Result<Module> {
        if !same_algebra(self.algebra(), ext.amb()) {
            return Err(Error::AlgebraMismatch);
        }
        let b = ext.sub();
        let action = (0..b.dim())
            .map(|i| self.act(&ext.embed().column(i)))
            .collect();
        Ok(Self::new_unchecked(b.clone(), self.dim(), action))
    }

    /// Submodule spanned by the columns of `basis` (assumed invariant and
    /// linearly independent), with its inclusion.
    pub fn submodule(&self, basis: &Matrix) -> (Module, Morphism) {
        let k = basis.cols();
        let left = basis
            .left_inverse()
            .expect("submodule basis is independent");
        let action = self
            .inner
            .action
            .iter()
            .map(|r| left.mul(&r.mul(basis)))
            .collect();
        let sub = Self::new_unchecked(self.algebra().clone(), k, action);
        let incl = Morphism::new_unchecked(sub.clone(), self.clone(), basis.clone());
        (sub, incl)
    }

    /// Quotient by the submodule spanned by the columns of `sub_span`,
    /// with the projection.
    pub fn quotient(&self, sub_span: &Matrix) -> (Module, Morphism) {
        let f = self.algebra().field();
        // rows of q: functionals vanishing on the submodule
        let q = sub_span.transpose().nullspace().transpose();
        let q = if q.rows() == 0 {
            Matrix::zeros(f, 0, self.dim())
        } else {
            q
        };
        let s = q.right_inverse().expect("quotient map is surjective");
        let action = self
            .inner
            .action
            .iter()
            .map(|r| q.mul(&r.mul(&s)))
            .collect();
        let quot = Self::new_unchecked(self.algebra().clone(), q.rows(), action);
        let proj = Morphism::new_unchecked(self.clone(), quot.clone(), q);
        (quot, proj)
    }

    /// Content hash of the algebra and the action.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(b"module/v1");
        h.update(self.algebra().fingerprint().as_bytes());
        h.update((self.dim() as u64).to_le_bytes());
        for m in &self.inner.action {
            for &v in m.data() {
                h.update(v.to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }
}

impl PartialEq for Module {
    /// Equal algebras and identical action matrices (not isomorphism).
    fn eq(&self, other: &Self) -> bool {
        same_algebra(self.algebra(), other.algebra())
            && self.inner.action == other.inner.action
            && self.dim() == other.dim()
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("dim", &self.dim())
            .field("vertex_dims", &self.vertex_dims())
            .finish()
    }
}
