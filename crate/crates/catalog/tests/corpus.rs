use homdim::algebra::find_isomorphism;
use homdim::homology::{dominant_dimension, gen_cogen, is_self_injective, DomDim};
use homdim::module::ISO_TRIALS;
use homdim::Standard;
use homdim_catalog::cli::corpus_modules;
use homdim_catalog::corpus::{self, ENTRIES, TENSOR_PAIRS};
use homdim_catalog::format::ModuleDef;

const P: u32 = 32003;

#[test]
fn entries_are_sorted_and_load() {
    let names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for e in ENTRIES.iter() {
        let l = corpus::load(e.name, P).unwrap();
        assert_eq!(l.name, e.name);
        for (name, m) in corpus_modules(&l).unwrap() {
            m.validate()
                .unwrap_or_else(|err| panic!("{} {name}: {err}", e.name));
        }
    }
    for (x, y) in TENSOR_PAIRS {
        assert!(corpus::entry(x).is_some() && corpus::entry(y).is_some());
    }
    assert!(corpus::load("missing", P).is_err());
}

#[test]
fn required_families_with_dimensions() {
    let dims = [
        ("k", 1),
        ("k2", 2),
        ("k3", 3),
        ("k4", 4),
        ("ka2", 3),
        ("a3", 6),
        ("aus", 5),
        ("k2k2", 4),
        ("ka2k2", 6),
    ];
    for (name, d) in dims {
        assert_eq!(corpus::load(name, P).unwrap().algebra.dim(), d, "{name}");
    }
}

#[test]
fn k2_is_self_injective_and_aus_has_dominant_dimension_two() {
    let k2 = corpus::load("k2", P).unwrap();
    assert!(is_self_injective(&k2.algebra).unwrap());
    let names = k2.module_names();
    assert!(names.contains(&"S".to_string()));
    assert_eq!(k2.module("regular").unwrap().module.dim(), 2);
    let aus = corpus::load("aus", P).unwrap();
    assert_eq!(
        dominant_dimension(&aus.algebra, 6).unwrap().value,
        DomDim::Exact(2)
    );
}

#[test]
fn declared_generator_cogenerators() {
    for e in ENTRIES.iter() {
        let l = corpus::load(e.name, P).unwrap();
        let g = l.module("G").unwrap();
        assert!(gen_cogen(&g.module).unwrap(), "{} G", e.name);
        if l.module_names().iter().any(|n| n == "GC") {
            assert!(
                gen_cogen(&l.module("GC").unwrap().module).unwrap(),
                "{} GC",
                e.name
            );
        }
    }
}

#[test]
fn tensor_entries_match_the_tensor_product() {
    for e in ENTRIES.iter() {
        let Some((x, y)) = e.tensor_of else { continue };
        let l = corpus::load(e.name, P).unwrap();
        let c = corpus::load(x, P)
            .unwrap()
            .algebra
            .tensor_product(&corpus::load(y, P).unwrap().algebra);
        let iso = find_isomorphism(&l.algebra, &c, 0, ISO_TRIALS).unwrap();
        assert!(iso.is_some(), "{} is not {x} ⊗ {y}", e.name);
    }
}

#[test]
fn sums_expand_to_their_summands() {
    let l = corpus::load("ka2", P).unwrap();
    let gc = l.module("GC").unwrap();
    assert_eq!(gc.summand_names, ["P1", "S2", "S1"]);
    assert_eq!(gc.module.dim(), 4);
    let std = Standard::of(&l.algebra).unwrap();
    assert_eq!(
        l.module("P1").unwrap().module.fingerprint(),
        std.projective(0).fingerprint()
    );
    let chained = l.module("GC+S2").unwrap();
    assert_eq!(chained.summands.len(), 4);
    assert!(l.module("S9").is_err());
    let sums = l
        .doc
        .modules
        .iter()
        .filter(|m| matches!(m.def, ModuleDef::Sum(_)))
        .count();
    assert_eq!(sums, 2);
}

#[test]
fn field_override_rebuilds_over_another_prime() {
    let l = corpus::load("aus", 101).unwrap();
    assert_eq!(l.algebra.field().modulus(), 101);
    assert_eq!(
        dominant_dimension(&l.algebra, 6).unwrap().value,
        DomDim::Exact(2)
    );
    assert!(corpus::load("aus", 100).is_err());
}
