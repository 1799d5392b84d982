use super::resolution::{minimal_resolution, Resolution, ResolutionKind};
use crate::algebra::same_algebra;
use crate::matrix::Matrix;
use crate::module::{Module, Standard};
use crate::{Error, Result};

/// `dims[i] = dim Ext^i(m, n)` for `i = 0..=cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub dims: Vec<usize>,
}

impl ExtTable {
    pub fn cutoff(&self) -> usize {
        self.dims.len() - 1
    }

    /// First degree `>= 1` with nonzero Ext.
    pub fn first_nonzero_positive(&self) -> Option<usize> {
        (1..self.dims.len()).find(|&i| self.dims[i] != 0)
    }
}

/// Ext from the minimal projective resolution of `m`.
///
/// `Hom(P(v), N) ≅ e_v N`, so each cochain group is a sum of vertex
/// components of `n` and each coboundary acts through the algebra elements
/// that the differentials send generators to.
pub fn ext_dims(m: &Module, n: &Module, cutoff: usize) -> Result<ExtTable> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let res = minimal_resolution(m, ResolutionKind::Projective, cutoff + 1)?;
    ext_from_resolution(&res, n, cutoff)
}

/// Ext dims against `n` from an already computed projective resolution with
/// at least `cutoff + 2` terms or a terminated one.
pub fn ext_from_resolution(res: &Resolution, n: &Module, cutoff: usize) -> Result<ExtTable> {
    debug_assert_eq!(res.kind, ResolutionKind::Projective);
    let std = Standard::of(n.algebra())?;
    let vdims = n.vertex_dims();
    let cochain_dim = |i: usize| -> usize {
        res.summands
            .get(i)
            .map_or(0, |s| s.iter().map(|&v| vdims[v]).sum())
    };
    // rank of d^i : C^i -> C^{i+1}
    let mut ranks = Vec::with_capacity(cutoff + 1);
    for i in 0..=cutoff {
        let rank = match res.differentials.get(i) {
            Some(d) => coboundary(&std, &res.summands[i + 1], &res.summands[i], d.map(), n).rank(),
            None => 0,
        };
        ranks.push(rank);
    }
    let dims = (0..=cutoff)
        .map(|i| cochain_dim(i) - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect();
    Ok(ExtTable { dims })
}

/// Matrix of `Hom(P_i, N) -> Hom(P_{i+1}, N)` in vertex coordinates, for the
/// differential `d: P_{i+1} -> P_i`.
fn coboundary(std: &Standard, upper: &[usize], lower: &[usize], d: &Matrix, n: &Module) -> Matrix {
    let alg = std.algebra();
    let f = alg.field();
    let ad = n.adapted();
    let vdims = n.vertex_dims();
    let row_off = offsets(upper.iter().map(|&v| vdims[v]));
    let col_off = offsets(lower.iter().map(|&v| vdims[v]));
    let upper_off = offsets(upper.iter().map(|&v| std.projective_basis(v).cols()));
    let lower_off = offsets(lower.iter().map(|&v| std.projective_basis(v).cols()));
    let mut out = Matrix::zeros(f, *row_off.last().unwrap(), *col_off.last().unwrap());
    for (t, &w) in upper.iter().enumerate() {
        // image of the generator e_w of summand t
        let gen = d.column(upper_off[t]);
        for (s, &v) in lower.iter().enumerate() {
            let basis = std.projective_basis(v);
            let coords = &gen[lower_off[s]..lower_off[s + 1]];
            if coords.iter().all(|&c| c == 0) || vdims[v] == 0 || vdims[w] == 0 {
                continue;
            }
            let element = basis.mul_vec(coords);
            let act = ad.t_inv.mul(&n.act(&element)).mul(&ad.t);
            let block = act.submatrix(ad.offsets[w], ad.offsets[v], vdims[w], vdims[v]);
            out.set_block(row_off[t], col_off[s], &block);
        }
    }
    out
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for s in sizes {
        out.push(out.last().unwrap() + s);
    }
    out
}
