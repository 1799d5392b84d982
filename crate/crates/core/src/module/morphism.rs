use super::Module;
use crate::algebra::same_algebra;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// A module homomorphism; `map` is `target.dim() x source.dim()`.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Module,
    target: Module,
    map: Matrix,
}

impl Morphism {
    pub fn new(source: Module, target: Module, map: Matrix) -> Result<Morphism> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "map is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let m = Self::new_unchecked(source, target, map);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, map: Matrix) -> Morphism {
        debug_assert_eq!(map.rows(), target.dim());
        debug_assert_eq!(map.cols(), source.dim());
        Morphism {
            source,
            target,
            map,
        }
    }

    /// Verifies `map ρ_source(e_a) = ρ_target(e_a) map` for every basis element.
    pub fn check(&self) -> Result<()> {
        let a = self.source.algebra();
        for i in 0..a.dim() {
            if self.map.mul(self.source.action(i)) != self.target.action(i).mul(&self.map) {
                return Err(Error::NotIntertwining(a.labels()[i].clone()));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> Morphism {
        let f = m.algebra().field();
        Self::new_unchecked(m.clone(), m.clone(), Matrix::identity(f, m.dim()))
    }

    pub fn zero(source: &Module, target: &Module) -> Morphism {
        let f = source.algebra().field();
        Self::new_unchecked(
            source.clone(),
            target.clone(),
            Matrix::zeros(f, target.dim(), source.dim()),
        )
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if first.target.dim() != self.source.dim()
            || !same_algebra(first.target.algebra(), self.source.algebra())
        {
            return Err(Error::Shape("composition of incompatible morphisms".into()));
        }
        Ok(Self::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            self.map.mul(&first.map),
        ))
    }

    pub fn rank(&self) -> usize {
        self.map.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Module, Morphism) {
        self.source.submodule(&self.map.nullspace())
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (Module, Morphism) {
        self.target.submodule(&self.map.column_basis())
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Module, Morphism) {
        self.target.quotient(&self.map.column_basis())
    }
}
