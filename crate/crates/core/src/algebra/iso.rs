//! Isomorphism search from a bound quiver algebra to an arbitrary basic algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// An algebra isomorphism `φ: A -> B`, with `A` presented by a quiver.
#[derive(Clone, Debug)]
pub struct AlgebraIso {
    /// Vertex `i` of `A` goes to idempotent `permutation[i]` of `B`.
    pub permutation: Vec<usize>,
    /// Column `k` holds the `B`-coordinates of `φ(basis_k)`.
    pub map: Matrix,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

struct Corners {
    /// Basis of `f_t rad f_s` modulo `rad^2`, per (t, s).
    top: Vec<Vec<Matrix>>,
    /// Basis of `f_t rad^2 f_s`.
    deep: Vec<Vec<Matrix>>,
}

fn corners(b: &Algebra) -> Result<Corners> {
    let f = b.field();
    let n = b.vertex_count();
    let rad = b.radical()?;
    let rad_cols: Vec<Vec<u32>> = (0..rad.cols()).map(|k| rad.column(k)).collect();
    let squares: Vec<Vec<u32>> = rad_cols
        .iter()
        .flat_map(|x| rad_cols.iter().map(move |y| b.mul(x, y)))
        .collect();
    let mut top = vec![vec![Matrix::zeros(f, b.dim(), 0); n]; n];
    let mut deep = top.clone();
    for t in 0..n {
        for s in 0..n {
            let corner = |vs: &[Vec<u32>]| {
                let cols: Vec<Vec<u32>> = vs.iter().map(|x| b.corner(t, x, s)).collect();
                Matrix::from_columns(f, b.dim(), &cols).column_basis()
            };
            let sq = corner(&squares);
            let full = corner(&rad_cols);
            let mut span = sq.clone();
            let mut chosen = Vec::new();
            for k in 0..full.cols() {
                let v = Matrix::column_vector(f, &full.column(k));
                if !span.spans(&v) {
                    span = Matrix::hstack(f, b.dim(), &[&span, &v]);
                    chosen.push(full.column(k));
                }
            }
            top[t][s] = Matrix::from_columns(f, b.dim(), &chosen);
            deep[t][s] = sq;
        }
    }
    Ok(Corners { top, deep })
}

/// Extends arrow images multiplicatively and checks the result.
fn try_images(a: &Algebra, b: &Algebra, perm: &[usize], images: &[Vec<u32>]) -> Option<Matrix> {
    let f = b.field();
    let paths = a.paths()?;
    let cols: Vec<Vec<u32>> = paths
        .iter()
        .map(|p| {
            let mut x = b.idempotents()[perm[p.source]].clone();
            for &arrow in &p.arrows {
                x = b.mul(&images[arrow], &x);
            }
            x
        })
        .collect();
    let map = Matrix::from_columns(f, b.dim(), &cols);
    if !map.is_invertible() {
        return None;
    }
    for x in 0..a.dim() {
        let lx = b.left_mul(&cols[x]);
        for (y, col) in cols.iter().enumerate() {
            let xy = map.mul_vec(&a.left_matrix(x).column(y));
            if xy != lx.mul_vec(col) {
                return None;
            }
        }
    }
    Some(map)
}

/// Searches for an isomorphism `a -> b`, trying every vertex bijection.
///
/// Arrows are first sent to a fixed complement of `rad^2` in the matching
/// corner of `rad b`; then `trials` seeded random choices are tried per
/// bijection. `None` means no isomorphism was found.
pub fn find_isomorphism(
    a: &Algebra,
    b: &Algebra,
    seed: u64,
    trials: usize,
) -> Result<Option<AlgebraIso>> {
    let pres = a
        .presentation()
        .ok_or_else(|| Error::Precondition("source algebra needs a quiver presentation".into()))?;
    if a.field() != b.field() || a.dim() != b.dim() || a.vertex_count() != b.vertex_count() {
        return Ok(None);
    }
    let n = a.vertex_count();
    if n > 8 {
        return Err(Error::Budget(format!(
            "{n} vertices exceed the permutation search limit of 8"
        )));
    }
    let f = b.field();
    let cs = corners(b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for perm in permutations(n) {
        let mut count = vec![vec![0usize; n]; n];
        for arrow in &pres.arrows {
            count[arrow.target][arrow.source] += 1;
        }
        let fits = (0..n).all(|j| (0..n).all(|i| count[j][i] == cs.top[perm[j]][perm[i]].cols()));
        if !fits {
            continue;
        }
        let mut used = vec![vec![0usize; n]; n];
        let canonical: Vec<Vec<u32>> = pres
            .arrows
            .iter()
            .map(|arrow| {
                let (t, s) = (perm[arrow.target], perm[arrow.source]);
                let k = &mut used[arrow.target][arrow.source];
                *k += 1;
                cs.top[t][s].column(*k - 1)
            })
            .collect();
        if let Some(map) = try_images(a, b, &perm, &canonical) {
            return Ok(Some(AlgebraIso {
                permutation: perm,
                map,
            }));
        }
        for _ in 0..trials {
            let images: Vec<Vec<u32>> = pres
                .arrows
                .iter()
                .map(|arrow| {
                    let (t, s) = (perm[arrow.target], perm[arrow.source]);
                    let mut x = vec![0; b.dim()];
                    for basis in [&cs.top[t][s], &cs.deep[t][s]] {
                        for k in 0..basis.cols() {
                            let c = rng.gen_range(0..f.modulus());
                            for (xi, bi) in x.iter_mut().zip(basis.column(k)) {
                                *xi = f.add(*xi, f.mul(c, bi));
                            }
                        }
                    }
                    x
                })
                .collect();
            if let Some(map) = try_images(a, b, &perm, &images) {
                return Ok(Some(AlgebraIso {
                    permutation: perm,
                    map,
                }));
            }
        }
    }
    Ok(None)
}
