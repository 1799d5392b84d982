use std::sync::Arc;

use homdim::algebra::families::{
    auslander_dual_numbers, build, linear_quiver, truncated_polynomial,
};
use homdim::module::{hom_space, is_isomorphic, summand_test, tensor_over, ISO_TRIALS};
use homdim::{Algebra, Module, Morphism, PrimeField, Standard};

fn k2() -> Arc<Algebra> {
    build(&truncated_polynomial(2), PrimeField::default())
}

fn ka2() -> Arc<Algebra> {
    build(&linear_quiver(2), PrimeField::default())
}

fn aus() -> Arc<Algebra> {
    build(&auslander_dual_numbers(), PrimeField::default())
}

fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_space(m, n).unwrap().len()
}

#[test]
fn hom_space_examples() {
    let s = Standard::of(&k2()).unwrap();
    assert_eq!(hom_dim(&s.regular(), &s.simple(0)), 1);
    assert_eq!(hom_dim(&s.simple(0), &s.regular()), 1);
    let t = Standard::of(&ka2()).unwrap();
    assert_eq!(hom_dim(&t.projective(0), &t.simple(0)), 1);
    assert_eq!(hom_dim(&t.simple(0), &t.simple(1)), 0);
}

#[test]
fn hom_space_elements_intertwine() {
    let s = Standard::of(&aus()).unwrap();
    let m = s.regular().oplus(&s.dual_regular()).unwrap();
    for h in hom_space(&m, &m).unwrap() {
        h.check().unwrap();
    }
}

#[test]
fn yoneda_dimension_identity() {
    for alg in [k2(), ka2(), aus()] {
        let s = Standard::of(&alg).unwrap();
        let mods = [s.regular(), s.dual_regular(), s.simple(0), s.injective(0)];
        for m in &mods {
            for i in 0..s.vertex_count() {
                assert_eq!(hom_dim(&s.projective(i), m), m.vertex_dims()[i]);
            }
        }
    }
}

#[test]
fn standard_module_dimensions() {
    let s = Standard::of(&k2()).unwrap();
    assert_eq!(
        (
            s.projective(0).dim(),
            s.injective(0).dim(),
            s.simple(0).dim()
        ),
        (2, 2, 1)
    );
    let t = Standard::of(&ka2()).unwrap();
    let dims: Vec<usize> = (0..2)
        .flat_map(|i| [t.projective(i).dim(), t.injective(i).dim()])
        .collect();
    assert_eq!(dims, vec![2, 1, 1, 2]);
    let u = Standard::of(&aus()).unwrap();
    assert_eq!((u.projective(0).dim(), u.projective(1).dim()), (3, 2));
    for st in [&s, &t, &u] {
        for i in 0..st.vertex_count() {
            st.projective(i).validate().unwrap();
            st.injective(i).validate().unwrap();
            st.simple(i).validate().unwrap();
        }
        st.dual_regular().validate().unwrap();
    }
}

#[test]
fn kernels_and_cokernels() {
    let t = Standard::of(&ka2()).unwrap();
    let p1 = t.projective(0);
    let id = Morphism::identity(&p1);
    assert_eq!(id.kernel().0.dim(), 0);
    let f = hom_space(&p1, &t.simple(0)).unwrap().remove(0);
    let (ker, incl) = f.kernel();
    assert_eq!(ker.dim(), 1);
    assert!(f.compose(&incl).unwrap().map().is_zero());
    assert!(
        is_isomorphic(&ker, &t.simple(1), 0, ISO_TRIALS)
            .unwrap()
            .isomorphic
    );
    let zero = Module::zero(p1.algebra().clone());
    let (coker, _) = Morphism::zero(&zero, &p1).cokernel();
    assert_eq!(coker, p1);
    let (img, _) = f.image();
    assert_eq!(img.dim(), 1);
}

#[test]
fn socle_top_radical() {
    let s = Standard::of(&k2()).unwrap();
    let soc = s.regular().socle_span().unwrap();
    assert_eq!(soc.cols(), 1);
    assert_eq!(soc.column(0), vec![0, 1]);
    for alg in [k2(), ka2(), aus()] {
        let st = Standard::of(&alg).unwrap();
        for i in 0..st.vertex_count() {
            let (top, _) = st.projective(i).top().unwrap();
            assert!(
                is_isomorphic(&top, &st.simple(i), 0, ISO_TRIALS)
                    .unwrap()
                    .isomorphic
            );
            assert_eq!(st.simple(i).rad_module().unwrap().0.dim(), 0);
            let (soc, _) = st.injective(i).socle().unwrap();
            assert!(
                is_isomorphic(&soc, &st.simple(i), 0, ISO_TRIALS)
                    .unwrap()
                    .isomorphic
            );
        }
    }
}

#[test]
fn covers_and_envelopes() {
    let s = Standard::of(&k2()).unwrap();
    let cover = s.simple(0).projective_cover().unwrap();
    assert_eq!(cover.map.source().dim(), 2);
    let (ker, _) = cover.map.kernel();
    assert!(
        is_isomorphic(&ker, &s.simple(0), 0, ISO_TRIALS)
            .unwrap()
            .isomorphic
    );

    let t = Standard::of(&ka2()).unwrap();
    let env = t.regular().injective_envelope().unwrap();
    assert_eq!(env.summands, vec![1, 1]);
    assert!(env.map.is_injective());
    env.map.check().unwrap();
    for alg in [k2(), ka2(), aus()] {
        let st = Standard::of(&alg).unwrap();
        for i in 0..st.vertex_count() {
            let c = st.projective(i).projective_cover().unwrap();
            assert!(c.map.is_isomorphism());
            assert_eq!(c.summands, vec![i]);
            let e = st.injective(i).injective_envelope().unwrap();
            assert!(e.map.is_isomorphism());
        }
        let m = st.regular().oplus(&st.simple(0)).unwrap();
        let c = m.projective_cover().unwrap();
        c.map.check().unwrap();
        assert!(c.map.is_surjective());
        let (ker, incl) = c.map.kernel();
        // minimality: the kernel lies in the radical of the cover
        let rad = c.map.source().radical_span().unwrap();
        assert!(rad.spans(incl.map()), "{ker:?}");
    }
}

#[test]
fn duality_preserves_hom_dimensions() {
    let alg = aus();
    let s = Standard::of(&alg).unwrap();
    let mods = [
        s.regular(),
        s.simple(0),
        s.simple(1),
        s.injective(0),
        s.projective(1),
    ];
    for m in &mods {
        assert_eq!(m.dual().dim(), m.dim());
        m.dual().validate().unwrap();
        for n in &mods {
            assert_eq!(hom_dim(m, n), hom_dim(&n.dual(), &m.dual()));
        }
    }
}

#[test]
fn tensor_unit_law_and_nakayama_dimension() {
    let alg = k2();
    let s = Standard::of(&alg).unwrap();
    let op = alg.opposite();
    let reg_right = Module::regular(op.clone());
    let m = s.regular().oplus(&s.simple(0)).unwrap();
    let t = tensor_over(&reg_right, &m).unwrap();
    assert_eq!(t.dim(), m.dim());
    let d = s.regular().dual_over_opposite();
    let t = tensor_over(&d, &s.simple(0)).unwrap();
    assert_eq!(t.dim(), 1);
    let zero = Module::zero(alg.clone());
    assert_eq!(tensor_over(&d, &zero).unwrap().dim(), 0);
}

#[test]
fn summand_examples() {
    let t = Standard::of(&ka2()).unwrap();
    let reg = t.regular();
    assert!(summand_test(&t.projective(0), &reg).unwrap());
    assert!(!summand_test(&t.simple(0), &reg).unwrap());
    let m = t.simple(0).oplus(&t.injective(1)).unwrap();
    assert!(summand_test(&t.simple(0), &m).unwrap());
    let s = Standard::of(&k2()).unwrap();
    let err = summand_test(&s.regular().oplus(&s.simple(0)).unwrap(), &s.regular());
    assert!(matches!(err, Err(homdim::Error::NotLocal(_))));
}

#[test]
fn isomorphism_examples() {
    let s = Standard::of(&k2()).unwrap();
    let reg = s.regular();
    assert!(is_isomorphic(&reg, &reg, 0, ISO_TRIALS).unwrap().isomorphic);
    assert!(
        is_isomorphic(&s.dual_regular(), &reg, 0, ISO_TRIALS)
            .unwrap()
            .isomorphic
    );
    let t = Standard::of(&ka2()).unwrap();
    let out = is_isomorphic(&t.simple(0), &t.simple(1), 0, ISO_TRIALS).unwrap();
    assert!(!out.isomorphic);
    assert_eq!(out.trials, 0);
    assert!(
        !is_isomorphic(&t.regular(), &t.dual_regular(), 7, ISO_TRIALS)
            .unwrap()
            .isomorphic
    );
}
