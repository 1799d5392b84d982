use std::fmt;
use std::sync::Arc;

use super::resolution::{minimal_resolution, ResolutionKind};
use crate::algebra::Algebra;
use crate::module::{Module, Standard};
use crate::Result;

/// Dominant dimension evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomDim {
    /// `I^0..I^{k-1}` projective and `I^k` not.
    Exact(usize),
    /// The first `cutoff` terms are projective.
    AtLeast(usize),
    /// The regular module is injective.
    Infinite,
}

impl DomDim {
    /// Minimum of two pieces of evidence; a lower bound stays a bound unless
    /// an exact value lies strictly below it.
    pub fn min(self, other: DomDim) -> DomDim {
        use DomDim::*;
        match (self, other) {
            (Infinite, x) | (x, Infinite) => x,
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
            (Exact(a), AtLeast(c)) | (AtLeast(c), Exact(a)) => {
                if a < c {
                    Exact(a)
                } else {
                    AtLeast(c)
                }
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DomDim::Exact(_))
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Exact(k) => write!(f, "{k}"),
            DomDim::AtLeast(c) => write!(f, "at-least-{c}"),
            DomDim::Infinite => write!(f, "infinity-certified"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomDimEvidence {
    pub value: DomDim,
    pub cutoff: usize,
    /// Summand vertices of each computed coresolution term.
    pub terms: Vec<Vec<usize>>,
    pub self_injective: bool,
}

/// Whether the regular module is injective: its injective envelope has the
/// same dimension.
pub fn is_self_injective(a: &Arc<Algebra>) -> Result<bool> {
    Module::regular(a.clone()).is_injective()
}

/// Vertices `v` whose injective `I(v)` is also projective.
pub fn projective_injective_vertices(a: &Arc<Algebra>) -> Result<Vec<bool>> {
    let std = Standard::of(a)?;
    (0..std.vertex_count())
        .map(|v| std.injective(v).is_projective())
        .collect()
}

pub fn dominant_dimension(a: &Arc<Algebra>, cutoff: usize) -> Result<DomDimEvidence> {
    assert!(cutoff >= 1, "cutoff must be positive");
    if is_self_injective(a)? {
        return Ok(DomDimEvidence {
            value: DomDim::Infinite,
            cutoff,
            terms: Vec::new(),
            self_injective: true,
        });
    }
    let proj_inj = projective_injective_vertices(a)?;
    let res = minimal_resolution(
        &Module::regular(a.clone()),
        ResolutionKind::Injective,
        cutoff - 1,
    )?;
    let mut value = DomDim::AtLeast(cutoff);
    for (k, summands) in res.summands.iter().enumerate() {
        if summands.iter().any(|&v| !proj_inj[v]) {
            value = DomDim::Exact(k);
            break;
        }
    }
    Ok(DomDimEvidence {
        value,
        cutoff,
        terms: res.summands,
        self_injective: false,
    })
}
