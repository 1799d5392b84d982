//! Radical, socle, top, projective covers and injective envelopes.

use super::{Module, Morphism, Standard};
use crate::matrix::Matrix;
use crate::Result;

/// A projective cover `⊕ P(v) -> M`, summands listed by vertex.
#[derive(Clone, Debug)]
pub struct Cover {
    pub map: Morphism,
    pub summands: Vec<usize>,
}

/// An injective envelope `M -> ⊕ I(v)`, summands listed by vertex.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub map: Morphism,
    pub summands: Vec<usize>,
}

impl Module {
    /// Columns spanning `rad(A) M`.
    pub fn radical_span(&self) -> Result<Matrix> {
        let f = self.algebra().field();
        let rad = self.algebra().radical()?;
        let parts: Vec<Matrix> = (0..rad.cols()).map(|k| self.act(&rad.column(k))).collect();
        let refs: Vec<&Matrix> = parts.iter().collect();
        Ok(Matrix::hstack(f, self.dim(), &refs).column_basis())
    }

    /// Columns spanning `soc M = {m : rad(A) m = 0}`.
    pub fn socle_span(&self) -> Result<Matrix> {
        let f = self.algebra().field();
        let rad = self.algebra().radical()?;
        let parts: Vec<Matrix> = (0..rad.cols()).map(|k| self.act(&rad.column(k))).collect();
        let refs: Vec<&Matrix> = parts.iter().collect();
        Ok(Matrix::vstack(f, self.dim(), &refs).nullspace())
    }

    pub fn rad_module(&self) -> Result<(Module, Morphism)> {
        Ok(self.submodule(&self.radical_span()?))
    }

    pub fn socle(&self) -> Result<(Module, Morphism)> {
        Ok(self.submodule(&self.socle_span()?))
    }

    pub fn top(&self) -> Result<(Module, Morphism)> {
        Ok(self.quotient(&self.radical_span()?))
    }

    /// Multiplicity of each simple in a semisimple module.
    pub fn semisimple_multiplicities(&self) -> Vec<usize> {
        self.vertex_dims()
    }

    /// Multiplicity of `S(v)` in `top M`.
    pub fn top_multiplicities(&self) -> Result<Vec<usize>> {
        Ok(self.top()?.0.vertex_dims())
    }

    /// Multiplicity of `S(v)` in `soc M`.
    pub fn socle_multiplicities(&self) -> Result<Vec<usize>> {
        Ok(self.socle()?.0.vertex_dims())
    }

    /// Minimal projective cover: one `P(v)` for each copy of `S(v)` in the top.
    pub fn projective_cover(&self) -> Result<Cover> {
        let std = Standard::of(self.algebra())?;
        let f = self.algebra().field();
        let n = self.dim();
        let mut span = self.radical_span()?;
        let mut summands = Vec::new();
        let mut generators = Vec::new();
        for v in 0..std.vertex_count() {
            let vb = self.vertex_basis(v);
            for c in 0..vb.cols() {
                let x = vb.select_columns(&[c]);
                if !span.spans(&x) {
                    span = Matrix::hstack(f, n, &[&span, &x]);
                    summands.push(v);
                    generators.push(x.column(0));
                }
            }
        }
        let mut blocks = Vec::with_capacity(summands.len());
        for (&v, x) in summands.iter().zip(&generators) {
            let basis = std.projective_basis(v);
            let cols: Vec<Vec<u32>> = (0..basis.cols())
                .map(|j| self.act(&basis.column(j)).mul_vec(x))
                .collect();
            blocks.push(Matrix::from_columns(f, n, &cols));
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let map = Matrix::hstack(f, n, &refs);
        let source = std.projective_sum(&summands);
        let map = Morphism::new_unchecked(source, self.clone(), map);
        debug_assert!(map.check().is_ok());
        debug_assert!(map.is_surjective());
        Ok(Cover { map, summands })
    }

    /// Minimal injective envelope, the dual of the projective cover of
    /// `D(M)` over the opposite algebra.
    pub fn injective_envelope(&self) -> Result<Envelope> {
        let alg = self.algebra();
        let std = Standard::of(alg)?;
        let op = alg.opposite();
        let cover = self.dual_over(&op).projective_cover()?;
        let target = std.injective_sum(&cover.summands);
        let map = Morphism::new_unchecked(self.clone(), target, cover.map.map().transpose());
        debug_assert!(map.check().is_ok());
        debug_assert!(map.is_injective());
        Ok(Envelope {
            map,
            summands: cover.summands,
        })
    }

    /// Projective iff the projective cover is an isomorphism.
    pub fn is_projective(&self) -> Result<bool> {
        Ok(self.projective_cover()?.map.source().dim() == self.dim())
    }

    /// Injective iff the injective envelope is an isomorphism.
    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.injective_envelope()?.map.target().dim() == self.dim())
    }
}
