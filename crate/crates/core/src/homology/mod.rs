//! Resolutions, Ext, dominant dimension, the Nakayama functor and
//! approximations.

mod approx;
mod domdim;
mod endo;
mod ext;
mod nakayama;
mod resolution;

pub use approx::{min_add_approximation, Approximation};
pub use domdim::{
    dominant_dimension, is_self_injective, projective_injective_vertices, DomDim, DomDimEvidence,
};
pub use endo::{endomorphism_algebra, EndomorphismAlgebra};
pub use ext::{ext_dims, ext_from_resolution, ExtTable};
pub use nakayama::{nakayama, nakayama_hom, nakayama_tensor, Nakayama};
pub use resolution::{
    id_bounded, minimal_resolution, pd_bounded, Bounded, Resolution, ResolutionKind,
};

use crate::module::{summand_test, Module, Standard};
use crate::Result;

/// `Ext^i(m, m) = 0` for `1 <= i <= cutoff`; otherwise the first failing degree.
pub fn self_orthogonal(m: &Module, cutoff: usize) -> Result<(bool, Option<usize>)> {
    let table = ext_dims(m, m, cutoff)?;
    let first = table.first_nonzero_positive();
    Ok((first.is_none(), first))
}

/// Every `P(i)` and every `I(i)` is a direct summand of `m`.
pub fn gen_cogen(m: &Module) -> Result<bool> {
    let std = Standard::of(m.algebra())?;
    for i in 0..std.vertex_count() {
        if !summand_test(&std.projective(i), m)? || !summand_test(&std.injective(i), m)? {
            return Ok(false);
        }
    }
    Ok(true)
}
