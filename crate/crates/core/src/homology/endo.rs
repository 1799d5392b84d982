use std::sync::Arc;

use crate::algebra::{trace_form_radical, Algebra};
use crate::matrix::Matrix;
use crate::module::{hom_space, is_isomorphic, Module, ISO_TRIALS};
use crate::{Error, Result};

/// `End_Λ(M)` for `M = ⊕ M_i`, with product `f g = f ∘ g`.
///
/// Basis element `k` is `basis[k]`, a map from summand `source[k]` to
/// summand `target[k]`. `M` is a left module over the result through
/// `f · u = f(u)`.
#[derive(Clone, Debug)]
pub struct EndomorphismAlgebra {
    pub algebra: Arc<Algebra>,
    pub module: Module,
    pub basis: Vec<Matrix>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// `M` as a left module over the endomorphism algebra.
    pub end_module: Module,
}

/// Requires pairwise non-isomorphic summands with local endomorphism rings,
/// which makes the result basic elementary with one vertex per summand.
pub fn endomorphism_algebra(summands: &[Module], seed: u64) -> Result<EndomorphismAlgebra> {
    let parts: Vec<&Module> = summands.iter().collect();
    let module = Module::direct_sum(&parts)?;
    let f = module.algebra().field();
    let d = module.dim();
    let mut offsets = vec![0];
    for s in summands {
        offsets.push(offsets.last().unwrap() + s.dim());
    }
    for (i, s) in summands.iter().enumerate() {
        let end: Vec<Matrix> = hom_space(s, s)?.iter().map(|h| h.map().clone()).collect();
        let rad = trace_form_radical(f, &end)?;
        if end.len() - rad.cols() != 1 {
            return Err(Error::NonBasicEndomorphism(i, i));
        }
    }
    for i in 0..summands.len() {
        for j in i + 1..summands.len() {
            if is_isomorphic(&summands[i], &summands[j], seed, ISO_TRIALS)?.isomorphic {
                return Err(Error::NonBasicEndomorphism(i, j));
            }
        }
    }
    let mut basis = Vec::new();
    let (mut source, mut target) = (Vec::new(), Vec::new());
    let mut labels = Vec::new();
    for (i, si) in summands.iter().enumerate() {
        for (j, sj) in summands.iter().enumerate() {
            for (k, h) in hom_space(sj, si)?.iter().enumerate() {
                let mut big = Matrix::zeros(f, d, d);
                big.set_block(offsets[i], offsets[j], h.map());
                basis.push(big);
                source.push(j);
                target.push(i);
                labels.push(format!("{}>{}#{}", j + 1, i + 1, k));
            }
        }
    }
    let n = basis.len();
    let vecs: Vec<Vec<u32>> = basis.iter().map(|b| b.data().to_vec()).collect();
    let coords = Matrix::from_columns(f, d * d, &vecs)
        .left_inverse()
        .expect("hom bases are independent");
    let coord = |m: &Matrix| coords.mul_vec(m.data());
    let left: Vec<Matrix> = basis
        .iter()
        .map(|a| {
            let cols: Vec<Vec<u32>> = basis.iter().map(|b| coord(&a.mul(b))).collect();
            Matrix::from_columns(f, n, &cols)
        })
        .collect();
    let idempotents: Vec<Vec<u32>> = (0..summands.len())
        .map(|i| {
            let mut p = Matrix::zeros(f, d, d);
            p.set_block(
                offsets[i],
                offsets[i],
                &Matrix::identity(f, summands[i].dim()),
            );
            coord(&p)
        })
        .collect();
    let unit = coord(&Matrix::identity(f, d));
    let radical = trace_form_radical(f, &basis)?;
    let algebra = Arc::new(Algebra::from_table_with_radical(
        f,
        labels,
        left,
        unit,
        idempotents,
        radical,
    )?);
    let end_module = Module::new(algebra.clone(), d, basis.clone())?;
    Ok(EndomorphismAlgebra {
        algebra,
        module,
        basis,
        source,
        target,
        end_module,
    })
}
