use std::sync::{Arc, OnceLock};

use super::Module;
use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::Result;

/// Indecomposable projectives, injectives and simples of an algebra.
///
/// `P(i) = A e_i` has the basis returned by [`Standard::projective_basis`],
/// whose first vector is `e_i`. `I(i) = D(e_i A)` is the dual of the
/// projective `A^op e_i`, and `S(i)` is one-dimensional.
#[derive(Clone)]
pub struct Standard {
    algebra: Arc<Algebra>,
    data: Arc<Data>,
}

pub(crate) struct Data {
    proj_basis: Vec<Matrix>,
    proj_action: Vec<Vec<Matrix>>,
    simple_action: Vec<Vec<Matrix>>,
    inj_action: OnceLock<Vec<Vec<Matrix>>>,
}

pub(crate) type StandardCache = OnceLock<Arc<Data>>;

impl Standard {
    /// Needs the radical, so fails only where [`Algebra::radical`] does.
    pub fn of(algebra: &Arc<Algebra>) -> Result<Standard> {
        let cache = algebra.standard_cache();
        let data = match cache.get() {
            Some(d) => d.clone(),
            None => {
                let _ = cache.set(Arc::new(build(algebra)?));
                cache.get().expect("just set").clone()
            }
        };
        Ok(Standard {
            algebra: algebra.clone(),
            data,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn vertex_count(&self) -> usize {
        self.algebra.vertex_count()
    }

    /// `P(i) = A e_i`.
    pub fn projective(&self, i: usize) -> Module {
        let action = self.data.proj_action[i].clone();
        Module::new_unchecked(self.algebra.clone(), self.data.proj_basis[i].cols(), action)
    }

    /// Basis of `A e_i` as columns in algebra coordinates; column 0 is `e_i`.
    pub fn projective_basis(&self, i: usize) -> &Matrix {
        &self.data.proj_basis[i]
    }

    /// `S(i) = top P(i)`.
    pub fn simple(&self, i: usize) -> Module {
        Module::new_unchecked(self.algebra.clone(), 1, self.data.simple_action[i].clone())
    }

    /// `I(i) = D(e_i A)`.
    pub fn injective(&self, i: usize) -> Module {
        let inj = self.data.inj_action.get_or_init(|| {
            let op = Standard::of(&self.algebra.opposite())
                .expect("the opposite algebra shares the radical");
            (0..self.vertex_count())
                .map(|v| {
                    op.data.proj_action[v]
                        .iter()
                        .map(|m| m.transpose())
                        .collect()
                })
                .collect()
        });
        let action = inj[i].clone();
        let dim = action.first().map_or(0, |m: &Matrix| m.rows());
        Module::new_unchecked(self.algebra.clone(), dim, action)
    }

    pub fn regular(&self) -> Module {
        Module::regular(self.algebra.clone())
    }

    /// `D(A_A)`, the left module `Hom_k(A, k)` with `(a φ)(u) = φ(u a)`.
    pub fn dual_regular(&self) -> Module {
        let a = &self.algebra;
        let action = (0..a.dim())
            .map(|b| a.right_mul(&a.basis_vector(b)).transpose())
            .collect();
        Module::new_unchecked(a.clone(), a.dim(), action)
    }

    /// `⊕ P(v)` over the listed vertices, in order.
    pub fn projective_sum(&self, vertices: &[usize]) -> Module {
        self.sum(vertices, |v| self.projective(v))
    }

    /// `⊕ I(v)` over the listed vertices, in order.
    pub fn injective_sum(&self, vertices: &[usize]) -> Module {
        self.sum(vertices, |v| self.injective(v))
    }

    fn sum(&self, vertices: &[usize], part: impl Fn(usize) -> Module) -> Module {
        if vertices.is_empty() {
            return Module::zero(self.algebra.clone());
        }
        let parts: Vec<Module> = vertices.iter().map(|&v| part(v)).collect();
        let refs: Vec<&Module> = parts.iter().collect();
        Module::direct_sum(&refs).expect("same algebra")
    }
}

fn build(a: &Arc<Algebra>) -> Result<Data> {
    let f = a.field();
    let n = a.dim();
    let rad = a.radical()?;
    let mut proj_basis = Vec::new();
    let mut proj_action = Vec::new();
    let mut simple_action = Vec::new();
    for (i, e) in a.idempotents().iter().enumerate() {
        // A e_i = k e_i ⊕ rad e_i for a basic elementary algebra
        let r = a.right_mul(e).mul(&rad);
        let mut basis = Matrix::column_vector(f, e);
        for c in 0..r.cols() {
            let v = Matrix::column_vector(f, &r.column(c));
            if !basis.spans(&v) {
                basis = Matrix::hstack(f, n, &[&basis, &v]);
            }
        }
        let left = basis.left_inverse().expect("independent columns");
        let action: Vec<Matrix> = a
            .left_matrices()
            .iter()
            .map(|l| left.mul(&l.mul(&basis)))
            .collect();
        // e_b acts on S(i) by the e_i-coordinate of e_i e_b e_i
        let simple = (0..n)
            .map(|b| {
                let corner = a.corner(i, &a.basis_vector(b), i);
                let coords = basis_coords(&basis, &left, &corner);
                Matrix::from_vec(f, 1, 1, vec![coords[0]])
            })
            .collect();
        proj_basis.push(basis);
        proj_action.push(action);
        simple_action.push(simple);
    }
    Ok(Data {
        proj_basis,
        proj_action,
        simple_action,
        inj_action: OnceLock::new(),
    })
}

fn basis_coords(basis: &Matrix, left: &Matrix, v: &[u32]) -> Vec<u32> {
    debug_assert_eq!(basis.rows(), v.len());
    left.mul_vec(v)
}
