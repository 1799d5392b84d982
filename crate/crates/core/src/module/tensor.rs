use std::sync::Arc;

use super::Module;
use crate::algebra::{same_algebra, Algebra};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// `X ⊗_A Y` as the quotient of `X ⊗_k Y` by `x a ⊗ y - x ⊗ a y`.
///
/// Coordinates of `X ⊗_k Y` are indexed by `i * dim(Y) + j`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    /// Projection `X ⊗_k Y -> X ⊗_A Y`, full row rank.
    pub projection: Matrix,
    /// A right inverse of `projection`.
    pub section: Matrix,
    x_dim: usize,
    y_dim: usize,
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// Operator on the quotient induced by `u ⊗ v -> (g u) ⊗ (h v)`, for
    /// maps compatible with the relations.
    pub fn induce(&self, g: &Matrix, h: &Matrix) -> Matrix {
        debug_assert_eq!(g.cols(), self.x_dim);
        debug_assert_eq!(h.cols(), self.y_dim);
        self.projection.mul(&g.kron(h)).mul(&self.section)
    }

    /// The quotient as a left `B`-module, given a left `B`-action on `X`
    /// commuting with its right `A`-action.
    pub fn left_module(&self, left: &Module) -> Result<Module> {
        if left.dim() != self.x_dim {
            return Err(Error::Shape("left action has the wrong dimension".into()));
        }
        let f = left.algebra().field();
        let id = Matrix::identity(f, self.y_dim);
        let action = left.actions().iter().map(|g| self.induce(g, &id)).collect();
        Module::new(left.algebra().clone(), self.dim(), action)
    }

    /// The quotient as a left `C`-module, from a left `C`-action on `Y`
    /// commuting with its left `A`-action.
    pub fn right_factor_module(&self, over: &Arc<Algebra>, actions: &[Matrix]) -> Result<Module> {
        let f = over.field();
        let id = Matrix::identity(f, self.x_dim);
        let action = actions.iter().map(|h| self.induce(&id, h)).collect();
        Module::new(over.clone(), self.dim(), action)
    }
}

/// `X ⊗_A Y` for a right `A`-module `X`, given as a module over the
/// opposite algebra, and a left `A`-module `Y`.
pub fn tensor_over(x: &Module, y: &Module) -> Result<TensorProduct> {
    let a = y.algebra();
    if !same_algebra(x.algebra(), &a.opposite()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = a.field();
    let (dx, dy) = (x.dim(), y.dim());
    let ix = Matrix::identity(f, dx);
    let iy = Matrix::identity(f, dy);
    let mut elements: Vec<Vec<u32>> = a.idempotents().to_vec();
    elements.extend(a.homogeneous_generators().iter().map(|h| h.element.clone()));
    let relations: Vec<Matrix> = elements
        .iter()
        .map(|e| x.act(e).kron(&iy).sub(&ix.kron(&y.act(e))))
        .collect();
    let refs: Vec<&Matrix> = relations.iter().collect();
    let span = Matrix::hstack(f, dx * dy, &refs).column_basis();
    let q = span.transpose().nullspace().transpose();
    let projection = if q.rows() == 0 {
        Matrix::zeros(f, 0, dx * dy)
    } else {
        q
    };
    let section = projection
        .right_inverse()
        .expect("projection has full row rank");
    Ok(TensorProduct {
        projection,
        section,
        x_dim: dx,
        y_dim: dy,
    })
}
