use std::sync::Arc;

use homdim::algebra::families::{
    auslander_dual_numbers, build, linear_quiver, truncated_polynomial,
};
use homdim::algebra::find_isomorphism;
use homdim::homology::*;
use homdim::module::{hom_space, is_isomorphic, ISO_TRIALS};
use homdim::{Algebra, Error, Module, PrimeField, Standard};

fn alg(p: &homdim::QuiverPresentation) -> Arc<Algebra> {
    build(p, PrimeField::default())
}

fn k2() -> Arc<Algebra> {
    alg(&truncated_polynomial(2))
}

fn ka2() -> Arc<Algebra> {
    alg(&linear_quiver(2))
}

fn aus() -> Arc<Algebra> {
    alg(&auslander_dual_numbers())
}

fn corpus() -> Vec<Arc<Algebra>> {
    let k2 = k2();
    vec![
        alg(&linear_quiver(1)),
        k2.clone(),
        alg(&truncated_polynomial(3)),
        ka2(),
        alg(&linear_quiver(3)),
        aus(),
        ka2().tensor_product(&k2),
    ]
}

fn sample_modules(a: &Arc<Algebra>) -> Vec<Module> {
    let s = Standard::of(a).unwrap();
    let mut out = vec![s.regular(), s.dual_regular()];
    for i in 0..s.vertex_count() {
        out.push(s.simple(i));
        out.push(s.injective(i));
        out.push(s.projective(i).rad_module().unwrap().0);
    }
    out.retain(|m| !m.is_zero());
    out
}

#[test]
fn periodic_resolution_over_dual_numbers() {
    let s = Standard::of(&k2()).unwrap();
    let res = minimal_resolution(&s.simple(0), ResolutionKind::Projective, 3).unwrap();
    assert_eq!(res.terms.len(), 4);
    assert!(res.terms.iter().all(|t| t.dim() == 2));
    for syz in &res.syzygies {
        assert!(
            is_isomorphic(syz, &s.simple(0), 0, ISO_TRIALS)
                .unwrap()
                .isomorphic
        );
    }
    assert!(!res.terminated());
}

#[test]
fn hereditary_resolution() {
    let s = Standard::of(&ka2()).unwrap();
    let res = minimal_resolution(&s.simple(0), ResolutionKind::Projective, 2).unwrap();
    assert_eq!(res.summands[0], vec![0]);
    assert_eq!(res.summands[1], vec![1]);
    assert_eq!(res.length(), Some(1));
    for i in 0..2 {
        let res = minimal_resolution(&s.projective(i), ResolutionKind::Projective, 4).unwrap();
        assert_eq!(res.length(), Some(0));
    }
}

#[test]
fn resolutions_are_exact_and_minimal() {
    for a in corpus() {
        for m in sample_modules(&a) {
            for kind in [ResolutionKind::Projective, ResolutionKind::Injective] {
                let res = minimal_resolution(&m, kind, 3).unwrap();
                let mut maps = vec![res.augmentation.clone()];
                maps.extend(res.differentials.iter().cloned());
                for w in maps.windows(2) {
                    let composite = match kind {
                        ResolutionKind::Projective => w[0].map().mul(w[1].map()),
                        ResolutionKind::Injective => w[1].map().mul(w[0].map()),
                    };
                    assert!(composite.is_zero());
                }
                match kind {
                    ResolutionKind::Projective => assert!(res.augmentation.is_surjective()),
                    ResolutionKind::Injective => assert!(res.augmentation.is_injective()),
                }
                for (i, t) in res.terms.iter().enumerate() {
                    let near = if i == 0 {
                        &res.augmentation
                    } else {
                        &res.differentials[i - 1]
                    };
                    let far = res
                        .differentials
                        .get(i)
                        .map_or(res.syzygies[i].dim(), |d| d.rank());
                    assert_eq!(near.rank() + far, t.dim());
                }
                if kind == ResolutionKind::Projective {
                    for d in &res.differentials {
                        let rad = d.target().radical_span().unwrap();
                        assert!(rad.spans(d.map()));
                    }
                }
            }
        }
    }
}

#[test]
fn ext_examples() {
    let s = Standard::of(&k2()).unwrap();
    assert_eq!(
        ext_dims(&s.simple(0), &s.simple(0), 6).unwrap().dims,
        vec![1; 7]
    );
    let t = Standard::of(&ka2()).unwrap();
    assert_eq!(
        ext_dims(&t.simple(0), &t.simple(1), 4).unwrap().dims,
        vec![0, 1, 0, 0, 0]
    );
    for a in corpus() {
        let std = Standard::of(&a).unwrap();
        for n in sample_modules(&a) {
            for i in 0..std.vertex_count() {
                let e = ext_dims(&std.projective(i), &n, 3).unwrap().dims;
                assert_eq!(e[0], hom_space(&std.projective(i), &n).unwrap().len());
                assert!(e[1..].iter().all(|&x| x == 0));
            }
        }
    }
}

#[test]
fn minimality_witness_against_simples() {
    for a in corpus() {
        let std = Standard::of(&a).unwrap();
        for m in sample_modules(&a) {
            let res = minimal_resolution(&m, ResolutionKind::Projective, 4).unwrap();
            for j in 0..std.vertex_count() {
                let ext = ext_from_resolution(&res, &std.simple(j), 3).unwrap().dims;
                for (i, e) in ext.iter().enumerate() {
                    let mult = res
                        .summands
                        .get(i)
                        .map_or(0, |s| s.iter().filter(|&&v| v == j).count());
                    assert_eq!(*e, mult);
                }
            }
        }
    }
}

#[test]
fn ext_duality_with_the_opposite_algebra() {
    for a in corpus() {
        let mods = sample_modules(&a);
        for m in &mods {
            for n in &mods {
                let direct = ext_dims(m, n, 3).unwrap();
                let dual = ext_dims(&n.dual_over_opposite(), &m.dual_over_opposite(), 3).unwrap();
                assert_eq!(direct, dual);
            }
        }
    }
}

#[test]
fn projective_and_injective_dimensions() {
    let t = Standard::of(&ka2()).unwrap();
    assert_eq!(pd_bounded(&t.simple(0), 6).unwrap(), Bounded::Exact(1));
    assert_eq!(id_bounded(&t.simple(0), 6).unwrap(), Bounded::Exact(0));
    let s = Standard::of(&k2()).unwrap();
    assert_eq!(pd_bounded(&s.projective(0), 6).unwrap(), Bounded::Exact(0));
    assert_eq!(pd_bounded(&s.simple(0), 6).unwrap(), Bounded::AtLeast(6));
    assert_eq!(
        pd_bounded(&s.simple(0), 6).unwrap().to_string(),
        "at-least-6"
    );
}

#[test]
fn dominant_dimension_values() {
    let cases = [
        (k2(), DomDim::Infinite),
        (alg(&truncated_polynomial(3)), DomDim::Infinite),
        (alg(&truncated_polynomial(4)), DomDim::Infinite),
        (alg(&linear_quiver(1)), DomDim::Infinite),
        (ka2(), DomDim::Exact(1)),
        (alg(&linear_quiver(3)), DomDim::Exact(1)),
        (aus(), DomDim::Exact(2)),
    ];
    for (a, expected) in cases {
        assert_eq!(dominant_dimension(&a, 6).unwrap().value, expected);
    }
    let ev = dominant_dimension(&ka2(), 6).unwrap();
    assert_eq!(ev.terms, vec![vec![1, 1], vec![0]]);
    assert_eq!(DomDim::Infinite.to_string(), "infinity-certified");
}

#[test]
fn positive_dominant_dimension_iff_envelope_is_projective() {
    for a in corpus() {
        let env = Module::regular(a.clone()).injective_envelope().unwrap();
        let projective = env.map.target().is_projective().unwrap();
        let d = dominant_dimension(&a, 4).unwrap().value;
        assert_eq!(d != DomDim::Exact(0), projective);
    }
}

#[test]
fn nakayama_examples() {
    for a in corpus() {
        let std = Standard::of(&a).unwrap();
        for i in 0..std.vertex_count() {
            let nu = nakayama(&std.projective(i), 0).unwrap();
            assert!(
                is_isomorphic(&nu.module, &std.injective(i), 0, ISO_TRIALS)
                    .unwrap()
                    .isomorphic
            );
        }
        for m in sample_modules(&a) {
            let nu = nakayama(&m, 0).unwrap();
            assert_eq!(nu.module.dim(), nu.hom_route.dim());
        }
    }
    let s = Standard::of(&k2()).unwrap();
    assert_eq!(nakayama(&s.regular(), 0).unwrap().module.dim(), 2);
    let nu_s = nakayama(&s.simple(0), 0).unwrap().module;
    assert!(
        is_isomorphic(&nu_s, &s.simple(0), 0, ISO_TRIALS)
            .unwrap()
            .isomorphic
    );
}

#[test]
fn self_orthogonality_and_generators() {
    let s = Standard::of(&k2()).unwrap();
    let m = s.regular().oplus(&s.simple(0)).unwrap();
    assert_eq!(self_orthogonal(&s.regular(), 6).unwrap(), (true, None));
    assert_eq!(self_orthogonal(&m, 6).unwrap(), (false, Some(1)));
    assert_eq!(self_orthogonal(&s.injective(0), 6).unwrap(), (true, None));
    assert!(gen_cogen(&s.regular()).unwrap());
    assert!(!gen_cogen(&Module::regular(ka2())).unwrap());
    for a in corpus() {
        let std = Standard::of(&a).unwrap();
        assert!(gen_cogen(&std.regular().oplus(&std.dual_regular()).unwrap()).unwrap());
    }
}

#[test]
fn approximation_examples() {
    let s = Standard::of(&k2()).unwrap();
    let m = s.regular().oplus(&s.simple(0)).unwrap();
    let ap = min_add_approximation(&m, &s.simple(0)).unwrap();
    assert_eq!(ap.copies, 1);
    assert!(ap.map.is_surjective());
    let zero = Module::zero(k2());
    assert_eq!(min_add_approximation(&m, &zero).unwrap().copies, 0);
    let t = Standard::of(&aus()).unwrap();
    for x in [t.simple(0), t.injective(1), t.dual_regular()] {
        let ap = min_add_approximation(&t.regular(), &x).unwrap();
        assert_eq!(
            ap.copies,
            x.top_multiplicities().unwrap().iter().sum::<usize>()
        );
        assert!(ap.map.is_surjective());
    }
}

#[test]
fn endomorphism_algebra_examples() {
    let s = Standard::of(&k2()).unwrap();
    let end = endomorphism_algebra(&[s.regular(), s.simple(0)], 0).unwrap();
    assert_eq!(end.algebra.dim(), 5);
    assert!(find_isomorphism(&aus(), &end.algebra, 0, 8)
        .unwrap()
        .is_some());
    end.end_module.validate().unwrap();
    let end = endomorphism_algebra(&[s.regular()], 0).unwrap();
    assert!(find_isomorphism(&k2(), &end.algebra, 0, 8)
        .unwrap()
        .is_some());
    let t = Standard::of(&ka2()).unwrap();
    for i in 0..2 {
        assert_eq!(
            endomorphism_algebra(&[t.simple(i)], 0)
                .unwrap()
                .algebra
                .dim(),
            1
        );
    }
    assert!(matches!(
        endomorphism_algebra(&[s.simple(0), s.simple(0)], 0),
        Err(Error::NonBasicEndomorphism(0, 1))
    ));
    let reg = t.regular();
    assert!(matches!(
        endomorphism_algebra(&[reg], 0),
        Err(Error::NonBasicEndomorphism(0, 0))
    ));
}
