//! Ext from the normalized bar resolution relative to the span `E` of the
//! vertex idempotents:
//!
//! `... -> A ⊗_E J^{⊗_E i} ⊗_E M -> ... -> A ⊗_E M -> M`, with `J = rad A`.
//!
//! Cochains are `Hom_E(J^{⊗_E i} ⊗_E M, N)`, and the coboundary is
//!
//! `δφ(x_1 ⊗ .. ⊗ x_{i+1} ⊗ m) = x_1 φ(x_2 ⊗ .. ⊗ m)
//!     + Σ_k (-1)^k φ(.. ⊗ x_k x_{k+1} ⊗ ..) + (-1)^{i+1} φ(x_1 ⊗ .. ⊗ x_{i+1} m)`.
//!
//! Nothing here uses covers, envelopes or minimality.

use std::collections::HashMap;

use crate::algebra::same_algebra;
use crate::homology::ExtTable;
use crate::matrix::Matrix;
use crate::module::Module;
use crate::{Error, Result};

/// Default bound on `dim(m) * dim(A)^(cutoff + 1)`.
pub const DEFAULT_BUDGET: usize = 250_000;

struct Radical {
    /// Homogeneous basis: element, left vertex, right vertex.
    elems: Vec<(Vec<u32>, usize, usize)>,
    /// Coordinates of `elems[a] * elems[b]` when composable.
    products: HashMap<(usize, usize), Vec<(usize, u32)>>,
}

fn radical_basis(m: &Module) -> Result<Radical> {
    let a = m.algebra();
    let f = a.field();
    let rad = a.radical()?;
    let nv = a.vertex_count();
    let mut elems = Vec::new();
    for u in 0..nv {
        for v in 0..nv {
            let corners: Vec<Vec<u32>> = (0..rad.cols())
                .map(|k| a.corner(u, &rad.column(k), v))
                .collect();
            let basis = Matrix::from_columns(f, a.dim(), &corners).column_basis();
            for c in 0..basis.cols() {
                elems.push((basis.column(c), u, v));
            }
        }
    }
    let cols: Vec<Vec<u32>> = elems.iter().map(|e| e.0.clone()).collect();
    let coords = Matrix::from_columns(f, a.dim(), &cols)
        .left_inverse()
        .expect("corner bases are independent");
    let mut products = HashMap::new();
    for (i, (x, _, vx)) in elems.iter().enumerate() {
        for (j, (y, uy, _)) in elems.iter().enumerate() {
            if vx != uy {
                continue;
            }
            let c = coords.mul_vec(&a.mul(x, y));
            let sparse = c.into_iter().enumerate().filter(|&(_, v)| v != 0).collect();
            products.insert((i, j), sparse);
        }
    }
    Ok(Radical { elems, products })
}

/// `dim Ext^i(m, n)` for `i = 0..=cutoff` from the bar resolution.
pub fn bar_ext_oracle(m: &Module, n: &Module, cutoff: usize, budget: usize) -> Result<ExtTable> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let a = m.algebra();
    let estimate = (a.dim() as u128).pow(cutoff as u32 + 1) * m.dim().max(1) as u128;
    if estimate > budget as u128 {
        return Err(Error::Budget(format!(
            "bar resolution needs dim(M)·dim(A)^{} = {estimate} > {budget}",
            cutoff + 1
        )));
    }
    let f = a.field();
    let rad = radical_basis(m)?;
    let (am, an) = (m.adapted(), n.adapted());
    let nv = a.vertex_count();
    let vertex_of =
        |offsets: &[usize], idx: usize| (0..nv).find(|&v| idx < offsets[v + 1]).unwrap();
    let ndims: Vec<usize> = (0..nv).map(|v| an.block_dim(v)).collect();
    // adapted actions of the radical basis
    let act_m: Vec<Matrix> = rad
        .elems
        .iter()
        .map(|(x, _, _)| am.t_inv.mul(&m.act(x)).mul(&am.t))
        .collect();
    let act_n: Vec<Matrix> = rad
        .elems
        .iter()
        .map(|(x, _, _)| an.t_inv.mul(&n.act(x)).mul(&an.t))
        .collect();

    // tuples[i]: (radical indices x_1..x_i, module basis index)
    let mut tuples: Vec<Vec<(Vec<usize>, usize)>> = Vec::with_capacity(cutoff + 2);
    tuples.push((0..m.dim()).map(|mb| (Vec::new(), mb)).collect());
    let left_vertex = |t: &(Vec<usize>, usize)| match t.0.first() {
        Some(&x) => rad.elems[x].1,
        None => vertex_of(&am.offsets, t.1),
    };
    for level in 1..=cutoff + 1 {
        let mut next = Vec::new();
        for t in &tuples[level - 1] {
            let u = left_vertex(t);
            for (x, e) in rad.elems.iter().enumerate() {
                if e.2 == u {
                    let mut seq = Vec::with_capacity(level);
                    seq.push(x);
                    seq.extend_from_slice(&t.0);
                    next.push((seq, t.1));
                }
            }
        }
        tuples.push(next);
    }
    let index: Vec<HashMap<&(Vec<usize>, usize), usize>> = tuples
        .iter()
        .map(|ts| ts.iter().enumerate().map(|(i, t)| (t, i)).collect())
        .collect();
    let offsets: Vec<Vec<usize>> = tuples
        .iter()
        .map(|ts| {
            let mut o = vec![0];
            for t in ts {
                o.push(o.last().unwrap() + ndims[left_vertex(t)]);
            }
            o
        })
        .collect();

    let mut ranks = Vec::with_capacity(cutoff + 1);
    for i in 0..=cutoff {
        let rows_t = &tuples[i + 1];
        let (ro, co) = (&offsets[i + 1], &offsets[i]);
        let mut d = Matrix::zeros(f, *ro.last().unwrap(), *co.last().unwrap());
        let sign = |k: usize, c: u32| if k % 2 == 1 { f.neg(c) } else { c };
        let add_identity = |d: &mut Matrix, r0: usize, c0: usize, len: usize, c: u32| {
            for q in 0..len {
                let cur = d.get(r0 + q, c0 + q);
                d.set(r0 + q, c0 + q, f.add(cur, c));
            }
        };
        for (r, t) in rows_t.iter().enumerate() {
            let (seq, mb) = t;
            let u = left_vertex(t);
            let len = ndims[u];
            if len == 0 {
                continue;
            }
            // x_1 φ(tail)
            let tail = (seq[1..].to_vec(), *mb);
            let c = index[i][&tail];
            let w = left_vertex(&tail);
            let block = act_n[seq[0]].submatrix(an.offsets[u], an.offsets[w], len, ndims[w]);
            for p in 0..len {
                for q in 0..ndims[w] {
                    let cur = d.get(ro[r] + p, co[c] + q);
                    d.set(ro[r] + p, co[c] + q, f.add(cur, block.get(p, q)));
                }
            }
            // (-1)^k φ(.. x_k x_{k+1} ..)
            for k in 1..=i {
                for &(l, coeff) in &rad.products[&(seq[k - 1], seq[k])] {
                    let mut s = Vec::with_capacity(i);
                    s.extend_from_slice(&seq[..k - 1]);
                    s.push(l);
                    s.extend_from_slice(&seq[k + 1..]);
                    let c = index[i][&(s, *mb)];
                    add_identity(&mut d, ro[r], co[c], len, sign(k, coeff));
                }
            }
            // (-1)^{i+1} φ(x_1 .. x_i ⊗ x_{i+1} m)
            let last = seq[i];
            let head = seq[..i].to_vec();
            let image = act_m[last].column(*mb);
            for (mb2, &coeff) in image.iter().enumerate() {
                if coeff == 0 {
                    continue;
                }
                let c = index[i][&(head.clone(), mb2)];
                add_identity(&mut d, ro[r], co[c], len, sign(i + 1, coeff));
            }
        }
        ranks.push(d.rank());
    }
    let dims = (0..=cutoff)
        .map(|i| offsets[i].last().unwrap() - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect();
    Ok(ExtTable { dims })
}
