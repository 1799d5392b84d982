use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Module, Morphism};
use crate::algebra::{same_algebra, trace_form_radical};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// Default number of random combinations tried by [`is_isomorphic`].
pub const ISO_TRIALS: usize = 24;

/// Linear system whose nullspace is `Hom(m, n)` in block coordinates.
struct HomSystem {
    /// Offsets of the per-vertex blocks `X_i : e_i M -> e_i N` in the unknown vector.
    var_off: Vec<usize>,
    constraints: Matrix,
}

fn hom_system(m: &Module, n: &Module) -> Result<HomSystem> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = m.algebra();
    let f = alg.field();
    let (am, an) = (m.adapted(), n.adapted());
    let verts = alg.vertex_count();
    let mut var_off = vec![0];
    for i in 0..verts {
        var_off.push(var_off[i] + am.block_dim(i) * an.block_dim(i));
    }
    let unknowns = var_off[verts];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (g, h) in alg.homogeneous_generators().iter().enumerate() {
        let (s, t) = (h.source, h.target);
        let (dms, dmt) = (am.block_dim(s), am.block_dim(t));
        let (dns, dnt) = (an.block_dim(s), an.block_dim(t));
        if dms == 0 || dnt == 0 {
            continue;
        }
        let gm = am.gens[g].submatrix(am.offsets[t], am.offsets[s], dmt, dms);
        let gn = an.gens[g].submatrix(an.offsets[t], an.offsets[s], dnt, dns);
        // X_t * gm - gn * X_s = 0, entry (r, c)
        for r in 0..dnt {
            for c in 0..dms {
                let mut row = vec![0u32; unknowns];
                for k in 0..dmt {
                    let idx = var_off[t] + r * dmt + k;
                    row[idx] = f.add(row[idx], gm.get(k, c));
                }
                for k in 0..dns {
                    let idx = var_off[s] + k * dms + c;
                    row[idx] = f.sub(row[idx], gn.get(r, k));
                }
                if row.iter().any(|&v| v != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let constraints = Matrix::from_vec(f, rows.len(), unknowns, rows.concat());
    Ok(HomSystem {
        var_off,
        constraints,
    })
}

/// Basis of `Hom_A(m, n)`, in the deterministic order of the nullspace of
/// the intertwining constraints.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<Morphism>> {
    let sys = hom_system(m, n)?;
    let alg = m.algebra();
    let f = alg.field();
    let (am, an) = (m.adapted(), n.adapted());
    let null = sys.constraints.nullspace();
    let mut out = Vec::with_capacity(null.cols());
    for v in 0..null.cols() {
        let col = null.column(v);
        let mut x = Matrix::zeros(f, n.dim(), m.dim());
        for i in 0..alg.vertex_count() {
            let (dm, dn) = (am.block_dim(i), an.block_dim(i));
            for r in 0..dn {
                for c in 0..dm {
                    x.set(
                        an.offsets[i] + r,
                        am.offsets[i] + c,
                        col[sys.var_off[i] + r * dm + c],
                    );
                }
            }
        }
        let map = an.t.mul(&x).mul(&am.t_inv);
        let mor = Morphism::new_unchecked(m.clone(), n.clone(), map);
        debug_assert!(mor.check().is_ok());
        out.push(mor);
    }
    Ok(out)
}

/// `dim Hom_A(m, n)` without materialising the basis.
pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    let sys = hom_system(m, n)?;
    Ok(sys.constraints.cols() - sys.constraints.rank())
}

/// Result of a randomized isomorphism search.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoOutcome {
    pub isomorphic: bool,
    /// Random combinations tried; zero when decided by dimensions.
    pub trials: usize,
    pub hom_dim: usize,
    /// Upper bound on the probability that a "false" verdict is wrong.
    pub error_bound: f64,
    pub witness: Option<Matrix>,
}

/// Searches `Hom(m, n)` for an invertible map using `trials` random
/// combinations drawn from a ChaCha stream seeded with `seed`.
pub fn is_isomorphic(m: &Module, n: &Module, seed: u64, trials: usize) -> Result<IsoOutcome> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let decided = |hom_dim| IsoOutcome {
        isomorphic: false,
        trials: 0,
        hom_dim,
        error_bound: 0.0,
        witness: None,
    };
    if m.dim() != n.dim() {
        return Ok(decided(0));
    }
    let f = m.algebra().field();
    if m.dim() == 0 {
        return Ok(IsoOutcome {
            isomorphic: true,
            trials: 0,
            hom_dim: 0,
            error_bound: 0.0,
            witness: Some(Matrix::zeros(f, 0, 0)),
        });
    }
    if m.vertex_dims() != n.vertex_dims() {
        return Ok(decided(hom_dim(m, n)?));
    }
    let forward = hom_space(m, n)?;
    if forward.is_empty() || hom_dim(n, m)? != forward.len() {
        return Ok(decided(forward.len()));
    }
    let maps: Vec<Matrix> = forward.iter().map(|h| h.map().clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = f.modulus();
    for t in 0..trials {
        let coeffs: Vec<u32> = (0..maps.len()).map(|_| rng.gen_range(0..p)).collect();
        let x = Matrix::combination(f, n.dim(), m.dim(), &coeffs, &maps);
        if x.is_invertible() {
            return Ok(IsoOutcome {
                isomorphic: true,
                trials: t + 1,
                hom_dim: maps.len(),
                error_bound: 0.0,
                witness: Some(x),
            });
        }
    }
    let ratio = m.dim() as f64 / p as f64;
    Ok(IsoOutcome {
        isomorphic: false,
        trials,
        hom_dim: maps.len(),
        error_bound: ratio.powi(trials as i32),
        witness: None,
    })
}

/// Radical of the endomorphism algebra spanned by `basis`, which must be
/// local; `what` names the module in the error.
pub(crate) fn local_radical(basis: &[Matrix], dim: usize, what: &str) -> Result<Matrix> {
    let Some(first) = basis.first() else {
        return Err(Error::NotLocal(what.into()));
    };
    let rad = trace_form_radical(first.field(), basis)?;
    if basis.len() - rad.cols() != 1 {
        return Err(Error::NotLocal(format!("{what} (dim {dim})")));
    }
    Ok(rad)
}

/// Whether the module `p`, whose endomorphism ring is local, is a direct
/// summand of `m`.
///
/// The maps `g ∘ f` with `f: p -> m`, `g: m -> p` span a two-sided ideal of
/// `End(p)`; it contains a unit exactly when `p` splits off. In a local ring
/// the non-units are the radical, so testing the basis products for
/// invertibility suffices.
pub fn summand_test(p: &Module, m: &Module) -> Result<bool> {
    let end: Vec<Matrix> = hom_space(p, p)?.iter().map(|h| h.map().clone()).collect();
    local_radical(&end, p.dim(), "candidate summand")?;
    let into = hom_space(p, m)?;
    let back = hom_space(m, p)?;
    for f in &into {
        for g in &back {
            if g.map().mul(f.map()).is_invertible() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
