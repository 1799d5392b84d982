use crate::matrix::Matrix;
use crate::module::{
    hom_space, is_isomorphic, tensor_over, IsoOutcome, Module, Standard, ISO_TRIALS,
};
use crate::{Error, Result};

/// `ν(M)` with the cross-check between its two constructions.
#[derive(Clone, Debug)]
pub struct Nakayama {
    /// `D(A) ⊗_A M`.
    pub module: Module,
    /// `D Hom_A(M, A)`.
    pub hom_route: Module,
    pub check: IsoOutcome,
}

/// `D(A) ⊗_A M`, where `D(A)` is a right module through `D(_A A)` and a
/// left module through `D(A_A)`.
pub fn nakayama_tensor(m: &Module) -> Result<Module> {
    let alg = m.algebra();
    let std = Standard::of(alg)?;
    let right = std.regular().dual_over_opposite();
    let t = tensor_over(&right, m)?;
    t.left_module(&std.dual_regular())
}

/// `D Hom_A(M, A)`: `Hom_A(M, A)` is a right module by `(f a)(u) = f(u) a`.
pub fn nakayama_hom(m: &Module) -> Result<Module> {
    let alg = m.algebra();
    let f = alg.field();
    let reg = Module::regular(alg.clone());
    let homs: Vec<Matrix> = hom_space(m, &reg)?
        .iter()
        .map(|h| h.map().clone())
        .collect();
    let h = homs.len();
    let vecs: Vec<Vec<u32>> = homs.iter().map(|x| x.data().to_vec()).collect();
    let coords = Matrix::from_columns(f, alg.dim() * m.dim(), &vecs)
        .left_inverse()
        .expect("hom basis is independent");
    // the right action of a, as a matrix on Hom coordinates, transposed for the dual
    let action = (0..alg.dim())
        .map(|a| {
            let r = alg.right_mul(&alg.basis_vector(a));
            let cols: Vec<Vec<u32>> = homs
                .iter()
                .map(|x| coords.mul_vec(r.mul(x).data()))
                .collect();
            Matrix::from_columns(f, h, &cols).transpose()
        })
        .collect();
    Module::new(alg.clone(), h, action)
}

/// Both routes, with an isomorphism check; disagreement is a bug.
pub fn nakayama(m: &Module, seed: u64) -> Result<Nakayama> {
    let module = nakayama_tensor(m)?;
    let hom_route = nakayama_hom(m)?;
    let check = is_isomorphic(&module, &hom_route, seed, ISO_TRIALS)?;
    if !check.isomorphic {
        return Err(Error::Internal(format!(
            "Nakayama routes disagree (dims {} and {})",
            module.dim(),
            hom_route.dim()
        )));
    }
    Ok(Nakayama {
        module,
        hom_route,
        check,
    })
}
