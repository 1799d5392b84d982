//! Subalgebra extensions `B ⊆ A` and the Frobenius, separable and split
//! predicates.

use std::sync::Arc;

use super::Algebra;
use crate::matrix::Matrix;
use crate::module::{hom_space, is_isomorphic, tensor_over, Module, ISO_TRIALS};
use crate::{Error, Result};

/// `B ⊆ A` via an injective unital algebra map; `embed` is `dim A x dim B`.
#[derive(Clone, Debug)]
pub struct Extension {
    sub: Arc<Algebra>,
    amb: Arc<Algebra>,
    embed: Matrix,
}

/// Outcome of [`Extension::predicates`].
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionPredicates {
    pub frobenius: bool,
    pub separable: bool,
    pub split: bool,
    /// `_B A` is projective.
    pub projective_over_sub: bool,
    /// Random trials used by the bimodule isomorphism search.
    pub iso_trials: usize,
    pub iso_error_bound: f64,
}

impl Extension {
    pub fn new(sub: Arc<Algebra>, amb: Arc<Algebra>, embed: Matrix) -> Result<Extension> {
        if sub.field() != amb.field() {
            return Err(Error::InvalidExtension("different ground fields".into()));
        }
        if embed.rows() != amb.dim() || embed.cols() != sub.dim() {
            return Err(Error::InvalidExtension(format!(
                "embedding must be {}x{}",
                amb.dim(),
                sub.dim()
            )));
        }
        if embed.rank() != sub.dim() {
            return Err(Error::InvalidExtension("embedding is not injective".into()));
        }
        if embed.mul_vec(sub.unit()) != amb.unit() {
            return Err(Error::InvalidExtension("unit is not preserved".into()));
        }
        for x in 0..sub.dim() {
            let ex = embed.column(x);
            for y in 0..sub.dim() {
                let lhs = embed.mul_vec(&sub.left_matrix(x).column(y));
                let rhs = amb.mul(&ex, &embed.column(y));
                if lhs != rhs {
                    return Err(Error::InvalidExtension(format!(
                        "embedding is not multiplicative on ({}, {})",
                        sub.labels()[x],
                        sub.labels()[y]
                    )));
                }
            }
        }
        Ok(Extension { sub, amb, embed })
    }

    /// `k ⊆ A` through the unit.
    pub fn scalars(amb: Arc<Algebra>) -> Extension {
        let f = amb.field();
        let embed = Matrix::column_vector(f, amb.unit());
        Extension {
            sub: Algebra::ground(f),
            amb,
            embed,
        }
    }

    /// `A ⊆ A`.
    pub fn identity(amb: Arc<Algebra>) -> Extension {
        let embed = Matrix::identity(amb.field(), amb.dim());
        Extension {
            sub: amb.clone(),
            amb,
            embed,
        }
    }

    pub fn sub(&self) -> &Arc<Algebra> {
        &self.sub
    }

    pub fn amb(&self) -> &Arc<Algebra> {
        &self.amb
    }

    pub fn embed(&self) -> &Matrix {
        &self.embed
    }

    fn right_by_sub(&self, b: usize) -> Matrix {
        self.amb.right_mul(&self.embed.column(b))
    }

    /// Evaluates the Frobenius, separable and split predicates.
    pub fn predicates(&self, seed: u64) -> Result<ExtensionPredicates> {
        let (projective_over_sub, iso) = self.frobenius_parts(seed)?;
        let frobenius = projective_over_sub && iso.isomorphic;
        Ok(ExtensionPredicates {
            frobenius,
            separable: self.is_separable()?,
            split: self.is_split()?,
            projective_over_sub,
            iso_trials: iso.trials,
            iso_error_bound: iso.error_bound,
        })
    }

    /// `_B A` projective, and `A ≅ Hom_B(A, B)` as `A`-`B`-bimodules,
    /// compared as left modules over `A ⊗ B^op`.
    fn frobenius_parts(&self, seed: u64) -> Result<(bool, crate::module::IsoOutcome)> {
        let (a, b) = (&self.amb, &self.sub);
        let f = a.field();
        let restricted = Module::regular(a.clone()).restrict(self)?;
        let projective = restricted.is_projective()?;

        let env = a.tensor_product(&b.opposite());
        let nb = b.dim();
        let right_b: Vec<Matrix> = (0..nb).map(|j| b.right_mul(&b.basis_vector(j))).collect();

        // A with (x ⊗ y) u = x u y
        let mut action = Vec::with_capacity(env.dim());
        for i in 0..a.dim() {
            for j in 0..nb {
                action.push(a.left_matrix(i).mul(&self.right_by_sub(j)));
            }
        }
        let bimodule_a = Module::new_unchecked(env.clone(), a.dim(), action);

        // Hom_B(A, B) with ((x ⊗ y) φ)(u) = φ(u x) y
        let homs: Vec<Matrix> = hom_space(&restricted, &Module::regular(b.clone()))?
            .iter()
            .map(|h| h.map().clone())
            .collect();
        let h = homs.len();
        let vecs: Vec<Vec<u32>> = homs.iter().map(|m| m.data().to_vec()).collect();
        let basis = Matrix::from_columns(f, nb * a.dim(), &vecs);
        let coords = basis.left_inverse().expect("hom basis is independent");
        let right_a: Vec<Matrix> = (0..a.dim())
            .map(|i| a.right_mul(&a.basis_vector(i)))
            .collect();
        let mut action = Vec::with_capacity(env.dim());
        for ra in &right_a {
            for rb in &right_b {
                let cols: Vec<Vec<u32>> = homs
                    .iter()
                    .map(|phi| coords.mul_vec(rb.mul(phi).mul(ra).data()))
                    .collect();
                action.push(Matrix::from_columns(f, h, &cols));
            }
        }
        let dual_side = Module::new_unchecked(env, h, action);
        debug_assert!(bimodule_a.validate().is_ok());
        debug_assert!(dual_side.validate().is_ok());
        let iso = is_isomorphic(&bimodule_a, &dual_side, seed, ISO_TRIALS)?;
        Ok((projective, iso))
    }

    /// Multiplication `A ⊗_B A -> A` has an `A`-bimodule section: some
    /// `B`-balanced element `w` with `a w = w a` for all `a` and `μ(w) = 1`.
    pub fn is_separable(&self) -> Result<bool> {
        let a = &self.amb;
        let f = a.field();
        let n = a.dim();
        // A as a right B-module (over B^op) and as a left B-module
        let sub_op = self.sub.opposite();
        let x_action: Vec<Matrix> = (0..self.sub.dim()).map(|j| self.right_by_sub(j)).collect();
        let x = Module::new_unchecked(sub_op, n, x_action);
        let restricted = Module::regular(a.clone()).restrict(self)?;
        let t = tensor_over(&x, &restricted)?;
        let d = t.dim();
        let id = Matrix::identity(f, n);
        // μ on A ⊗_k A, then on the quotient
        let mu_full = Matrix::from_fn(f, n, n * n, |r, c| a.structure_constant(c / n, c % n, r));
        let mu = mu_full.mul(&t.section);
        let mut blocks = vec![mu];
        let mut rhs_parts = vec![Matrix::column_vector(f, a.unit())];
        let mut elements: Vec<Vec<u32>> = a.idempotents().to_vec();
        elements.extend(a.homogeneous_generators().iter().map(|h| h.element.clone()));
        for e in &elements {
            let left = t.induce(&a.left_mul(e), &id);
            let right = t.induce(&id, &a.right_mul(e));
            blocks.push(left.sub(&right));
            rhs_parts.push(Matrix::zeros(f, d, 1));
        }
        let lhs_refs: Vec<&Matrix> = blocks.iter().collect();
        let rhs_refs: Vec<&Matrix> = rhs_parts.iter().collect();
        let lhs = Matrix::vstack(f, d, &lhs_refs);
        let rhs = Matrix::vstack(f, 1, &rhs_refs);
        Ok(lhs.solve(&rhs).is_some())
    }

    /// The inclusion `B -> A` has a `B`-bimodule retraction `r`.
    pub fn is_split(&self) -> Result<bool> {
        let (a, b) = (&self.amb, &self.sub);
        let f = a.field();
        let (na, nb) = (a.dim(), b.dim());
        let unknowns = nb * na;
        // vec(r) row-major; (r M)_{i,c} = Σ_k r_{i,k} M_{k,c}, (N r)_{i,c} = Σ_k N_{i,k} r_{k,c}
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut rhs: Vec<u32> = Vec::new();
        let push_intertwine =
            |m: &Matrix, n: &Matrix, rows: &mut Vec<Vec<u32>>, rhs: &mut Vec<u32>| {
                for i in 0..nb {
                    for c in 0..na {
                        let mut row = vec![0u32; unknowns];
                        for k in 0..na {
                            row[i * na + k] = f.add(row[i * na + k], m.get(k, c));
                        }
                        for k in 0..nb {
                            row[k * na + c] = f.sub(row[k * na + c], n.get(i, k));
                        }
                        rows.push(row);
                        rhs.push(0);
                    }
                }
            };
        let mut elements: Vec<Vec<u32>> = b.idempotents().to_vec();
        elements.extend(b.homogeneous_generators().iter().map(|h| h.element.clone()));
        for e in &elements {
            let img = self.embed.mul_vec(e);
            push_intertwine(&a.left_mul(&img), &b.left_mul(e), &mut rows, &mut rhs);
            push_intertwine(&a.right_mul(&img), &b.right_mul(e), &mut rows, &mut rhs);
        }
        // r ∘ embed = id
        for i in 0..nb {
            for c in 0..nb {
                let mut row = vec![0u32; unknowns];
                for k in 0..na {
                    row[i * na + k] = self.embed.get(k, c);
                }
                rows.push(row);
                rhs.push(u32::from(i == c));
            }
        }
        let lhs = Matrix::from_vec(f, rows.len(), unknowns, rows.concat());
        let rhs = Matrix::from_vec(f, rhs.len(), 1, rhs);
        Ok(lhs.solve(&rhs).is_some())
    }
}
