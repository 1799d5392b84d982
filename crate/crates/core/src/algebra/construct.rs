//! Opposite, tensor and enveloping algebras.

use std::sync::Arc;

use super::Algebra;
use crate::matrix::Matrix;
use crate::module::Module;

impl Algebra {
    /// Same basis with `a * b := b * a`. Cached.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| Arc::new(self.build_opposite()))
            .clone()
    }

    fn build_opposite(&self) -> Algebra {
        let f = self.field;
        let n = self.dim();
        // left multiplication in A^op is right multiplication in A
        let left: Vec<Matrix> = (0..n)
            .map(|a| self.right_mul(&self.basis_vector(a)))
            .collect();
        let presentation = self.presentation.as_ref().map(|p| p.opposite());
        let paths = self.paths.as_ref().map(|ps| {
            ps.iter()
                .map(|p| super::Path {
                    source: p.target,
                    target: p.source,
                    arrows: p.arrows.iter().rev().copied().collect(),
                })
                .collect::<Vec<_>>()
        });
        let labels = match (&presentation, &paths) {
            (Some(pr), Some(ps)) => ps.iter().map(|p| pr.path_label(p)).collect(),
            _ => self.labels.clone(),
        };
        let alg = Algebra::assemble(
            f,
            labels,
            left,
            self.unit.clone(),
            self.idempotents.clone(),
            presentation,
            paths,
        )
        .expect("opposite preserves shapes");
        if let Some(Ok(rad)) = self.radical.get() {
            let _ = alg.radical.set(Ok(rad.clone()));
        }
        alg
    }

    /// `A ⊗_k B` with basis index `i * dim(B) + j` and idempotents
    /// `e_i ⊗ f_j` in row-major order.
    pub fn tensor_product(&self, other: &Algebra) -> Arc<Algebra> {
        assert_eq!(
            self.field, other.field,
            "tensor product over different fields"
        );
        let f = self.field;
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut left = Vec::with_capacity(self.dim() * other.dim());
        for (i, la) in self.left.iter().enumerate() {
            for (j, lb) in other.left.iter().enumerate() {
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
                left.push(la.kron(lb));
            }
        }
        let kron_vec = |x: &[u32], y: &[u32]| -> Vec<u32> {
            x.iter()
                .flat_map(|&a| y.iter().map(move |&b| f.mul(a, b)))
                .collect()
        };
        let unit = kron_vec(&self.unit, &other.unit);
        let idempotents = self
            .idempotents
            .iter()
            .flat_map(|e| other.idempotents.iter().map(|g| kron_vec(e, g)))
            .collect();
        Arc::new(
            Algebra::assemble(f, labels, left, unit, idempotents, None, None)
                .expect("tensor product preserves shapes"),
        )
    }
}

/// `A^e = A ⊗ A^op`, together with `A` as a left `A^e`-module via
/// `(x ⊗ y) · u = x u y`.
pub fn enveloping(a: &Arc<Algebra>) -> (Arc<Algebra>, Module) {
    let op = a.opposite();
    let env = a.tensor_product(&op);
    let n = a.dim();
    let rights: Vec<Matrix> = (0..n).map(|j| a.right_mul(&a.basis_vector(j))).collect();
    let mut action = Vec::with_capacity(n * n);
    for i in 0..n {
        for r in &rights {
            action.push(a.left_matrix(i).mul(r));
        }
    }
    let module = Module::new_unchecked(env.clone(), n, action);
    (env, module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Arrow, QuiverPresentation, Relation};
    use crate::field::PrimeField;

    fn dual_numbers() -> Arc<Algebra> {
        let p = QuiverPresentation {
            vertices: vec!["1".into()],
            arrows: vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 0,
            }],
            relations: vec![Relation {
                terms: vec![(1, vec![0, 0])],
            }],
            nilpotency_bound: 1,
        };
        Algebra::from_quiver(&p, PrimeField::default()).unwrap()
    }

    fn a2() -> Arc<Algebra> {
        let p = QuiverPresentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow {
                name: "a".into(),
                source: 0,
                target: 1,
            }],
            relations: vec![],
            nilpotency_bound: 1,
        };
        Algebra::from_quiver(&p, PrimeField::default()).unwrap()
    }

    #[test]
    fn opposite_of_commutative_is_same() {
        let k2 = dual_numbers();
        assert_eq!(*k2.opposite(), *k2);
    }

    #[test]
    fn opposite_reverses_arrow() {
        let a = a2();
        let op = a.opposite();
        let pres = op.presentation().unwrap();
        assert_eq!((pres.arrows[0].source, pres.arrows[0].target), (1, 0));
        // in A^op: e1 * a = a, i.e. a now ends at vertex 1
        assert_eq!(op.structure_constant(0, 2, 2), 1);
        assert_eq!(*op.opposite(), *a);
        let rebuilt = Algebra::from_quiver(pres, PrimeField::default()).unwrap();
        assert_eq!(*rebuilt, *op);
    }

    #[test]
    fn tensor_dimensions() {
        let k2 = dual_numbers();
        let t = k2.tensor_product(&k2);
        assert_eq!(t.dim(), 4);
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.radical().unwrap().cols(), 3);
        let t = a2().tensor_product(&k2);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.vertex_count(), 2);
        let k = Algebra::ground(PrimeField::default());
        assert_eq!(*a2().tensor_product(&k), *a2());
    }

    #[test]
    fn enveloping_sizes() {
        let (env, m) = enveloping(&dual_numbers());
        assert_eq!(env.dim(), 4);
        assert_eq!(m.dim(), 2);
        m.validate().unwrap();
        let (env, m) = enveloping(&a2());
        assert_eq!(env.dim(), 9);
        m.validate().unwrap();
        let k = Algebra::ground(PrimeField::default());
        let (env, _) = enveloping(&k);
        assert_eq!(*env, *k);
    }
}
