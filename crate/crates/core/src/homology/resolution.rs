use crate::module::{Module, Morphism};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M` or minimal
/// injective coresolution `M -> I^0 -> I^1 -> ...`, truncated at a depth.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    /// `P_i` (resp. `I^i`) for `i = 0..terms.len()`.
    pub terms: Vec<Module>,
    /// Vertex of every indecomposable summand of each term, in order.
    pub summands: Vec<Vec<usize>>,
    /// `P_0 -> M` (resp. `M -> I^0`).
    pub augmentation: Morphism,
    /// `differentials[i-1]`: `P_i -> P_{i-1}` (resp. `I^{i-1} -> I^i`).
    pub differentials: Vec<Morphism>,
    /// `Ω^i(M)` (resp. `Ω^{-i}(M)`) for `i = 1..=terms.len()`.
    pub syzygies: Vec<Module>,
}

impl Resolution {
    /// Whether a zero syzygy was reached, so the resolution is complete.
    pub fn terminated(&self) -> bool {
        self.syzygies.last().is_some_and(|s| s.is_zero())
    }

    /// Length of the resolution if it terminated within the computed depth.
    pub fn length(&self) -> Option<usize> {
        let first_zero = self.syzygies.iter().position(|s| s.is_zero())?;
        Some(first_zero)
    }
}

/// Iterated projective covers (resp. injective envelopes), computing terms
/// with index `0..=depth` or until a syzygy vanishes.
pub fn minimal_resolution(m: &Module, kind: ResolutionKind, depth: usize) -> Result<Resolution> {
    match kind {
        ResolutionKind::Projective => projective(m, depth),
        ResolutionKind::Injective => injective(m, depth),
    }
}

fn projective(m: &Module, depth: usize) -> Result<Resolution> {
    let cover = m.projective_cover()?;
    let (mut syz, mut incl) = cover.map.kernel();
    let mut res = Resolution {
        kind: ResolutionKind::Projective,
        terms: vec![cover.map.source().clone()],
        summands: vec![cover.summands],
        augmentation: cover.map,
        differentials: Vec::new(),
        syzygies: vec![syz.clone()],
    };
    for _ in 1..=depth {
        if syz.is_zero() {
            break;
        }
        let cover = syz.projective_cover()?;
        let d = incl.compose(&cover.map)?;
        let (next, next_incl) = cover.map.kernel();
        res.terms.push(cover.map.source().clone());
        res.summands.push(cover.summands);
        res.differentials.push(d);
        res.syzygies.push(next.clone());
        syz = next;
        incl = next_incl;
    }
    Ok(res)
}

fn injective(m: &Module, depth: usize) -> Result<Resolution> {
    let env = m.injective_envelope()?;
    let (mut cosyz, mut proj) = env.map.cokernel();
    let mut res = Resolution {
        kind: ResolutionKind::Injective,
        terms: vec![env.map.target().clone()],
        summands: vec![env.summands],
        augmentation: env.map,
        differentials: Vec::new(),
        syzygies: vec![cosyz.clone()],
    };
    for _ in 1..=depth {
        if cosyz.is_zero() {
            break;
        }
        let env = cosyz.injective_envelope()?;
        let d = env.map.compose(&proj)?;
        let (next, next_proj) = env.map.cokernel();
        res.terms.push(env.map.target().clone());
        res.summands.push(env.summands);
        res.differentials.push(d);
        res.syzygies.push(next.clone());
        cosyz = next;
        proj = next_proj;
    }
    Ok(res)
}

/// An exact value, or a lower bound when the computation was cut off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bounded {
    Exact(usize),
    AtLeast(usize),
}

impl Bounded {
    pub fn is_finite(&self) -> bool {
        matches!(self, Bounded::Exact(_))
    }
}

impl std::fmt::Display for Bounded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bounded::Exact(n) => write!(f, "{n}"),
            Bounded::AtLeast(n) => write!(f, "at-least-{n}"),
        }
    }
}

fn bounded_length(m: &Module, kind: ResolutionKind, cutoff: usize) -> Result<Bounded> {
    if m.is_zero() {
        return Ok(Bounded::Exact(0));
    }
    if cutoff == 0 {
        return Ok(Bounded::AtLeast(0));
    }
    let res = minimal_resolution(m, kind, cutoff - 1)?;
    Ok(match res.length() {
        Some(n) => Bounded::Exact(n),
        None => Bounded::AtLeast(cutoff),
    })
}

/// Projective dimension if it is below `cutoff`.
pub fn pd_bounded(m: &Module, cutoff: usize) -> Result<Bounded> {
    bounded_length(m, ResolutionKind::Projective, cutoff)
}

/// Injective dimension if it is below `cutoff`.
pub fn id_bounded(m: &Module, cutoff: usize) -> Result<Bounded> {
    bounded_length(m, ResolutionKind::Injective, cutoff)
}
