use crate::algebra::{same_algebra, trace_form_radical};
use crate::matrix::Matrix;
use crate::module::{hom_space, Module, Morphism};
use crate::{Error, Result};

/// A minimal right `add(m)`-approximation `m^r -> x`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: Morphism,
    pub copies: usize,
}

fn vectorize(f: crate::PrimeField, rows: usize, maps: &[Matrix]) -> Matrix {
    let vecs: Vec<Vec<u32>> = maps.iter().map(|m| m.data().to_vec()).collect();
    Matrix::from_columns(f, rows, &vecs)
}

/// `r = dim Hom(m, x) / (Hom(m, x) · rad End(m))`, realised by maps whose
/// classes form a basis of that quotient.
pub fn min_add_approximation(m: &Module, x: &Module) -> Result<Approximation> {
    if !same_algebra(m.algebra(), x.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.algebra().field();
    let to_x: Vec<Matrix> = hom_space(m, x)?.iter().map(|h| h.map().clone()).collect();
    let end: Vec<Matrix> = hom_space(m, m)?.iter().map(|h| h.map().clone()).collect();
    let rows = x.dim() * m.dim();
    if to_x.is_empty() || rows == 0 {
        let source = Module::zero(m.algebra().clone());
        return Ok(Approximation {
            map: Morphism::zero(&source, x),
            copies: 0,
        });
    }
    let rad = trace_form_radical(f, &end)?;
    let rad_maps: Vec<Matrix> = (0..rad.cols())
        .map(|k| Matrix::combination(f, m.dim(), m.dim(), &rad.column(k), &end))
        .collect();
    let through_rad: Vec<Matrix> = to_x
        .iter()
        .flat_map(|h| rad_maps.iter().map(move |r| h.mul(r)))
        .collect();
    let mut span = vectorize(f, rows, &through_rad).column_basis();
    let mut chosen = Vec::new();
    for h in &to_x {
        let v = vectorize(f, rows, std::slice::from_ref(h));
        if !span.spans(&v) {
            span = Matrix::hstack(f, rows, &[&span, &v]);
            chosen.push(h.clone());
        }
    }
    let copies = chosen.len();
    let refs: Vec<&Matrix> = chosen.iter().collect();
    let map = Matrix::hstack(f, x.dim(), &refs);
    let source = m.power(copies);
    let map = Morphism::new_unchecked(source, x.clone(), map);
    debug_assert!(map.check().is_ok());
    // every map m -> x factors: the composites h_k ∘ φ span Hom(m, x)
    let composites: Vec<Matrix> = chosen
        .iter()
        .flat_map(|h| end.iter().map(move |e| h.mul(e)))
        .collect();
    if vectorize(f, rows, &composites).rank() != to_x.len() {
        return Err(Error::Internal(
            "approximation is not surjective on Hom".into(),
        ));
    }
    Ok(Approximation { map, copies })
}
