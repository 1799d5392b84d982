//! The ten acceptance criteria of the engine and its command line.

use std::sync::Arc;

use homdim::algebra::{families, find_isomorphism};
use homdim::homology::{
    dominant_dimension, endomorphism_algebra, ext_dims, ext_from_resolution, minimal_resolution,
    nakayama, nakayama_tensor, DomDim, ResolutionKind,
};
use homdim::module::{hom_space, ISO_TRIALS};
use homdim::theorems::{
    bar_ext_oracle, ext_dual_regular, format_dims, kunneth_check, muller_check, remark32_check,
    DEFAULT_BUDGET,
};
use homdim::{Algebra, Extension, Module, PrimeField, Standard};
use homdim_catalog::cli::corpus_modules;
use homdim_catalog::corpus::{self, ENTRIES, TENSOR_PAIRS};
use homdim_catalog::Loaded;

const P: u32 = 32003;

/// A one-line detail on success, the first violation on failure.
pub type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn load(name: &str) -> Result<Loaded, String> {
    corpus::load(name, P).map_err(e)
}

fn all_entries() -> Result<Vec<Loaded>, String> {
    ENTRIES.iter().map(|x| load(x.name)).collect()
}

fn module(l: &Loaded, expr: &str) -> Result<Module, String> {
    Ok(l.module(expr).map_err(e)?.module)
}

pub fn oracle_equivalence() -> Outcome {
    let mut pairs = 0;
    for l in all_entries()? {
        if l.algebra.dim() > 6 {
            continue;
        }
        let small: Vec<(String, Module)> = corpus_modules(&l)
            .map_err(e)?
            .into_iter()
            .filter(|(_, m)| m.dim() <= 4)
            .collect();
        for (a, m) in &small {
            for (b, n) in &small {
                let minimal = ext_dims(m, n, 3).map_err(e)?.dims;
                let bar = bar_ext_oracle(m, n, 3, DEFAULT_BUDGET).map_err(e)?.dims;
                ensure(
                    minimal == bar,
                    format!("{} Ext({a}, {b}): {minimal:?} vs {bar:?}", l.name),
                )?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} module pairs agree in degrees 0..3"))
}

pub fn muller_correspondence() -> Outcome {
    let k2 = load("k2")?;
    let m = k2.module("M").map_err(e)?;
    let r = muller_check(&m.summands, 6, 0).map_err(e)?;
    ensure(
        r.passed(),
        format!("muller check on K2 ⊕ S: {:?}", r.witness),
    )?;
    ensure(
        r.get("end_domdim") == Some("2"),
        "dom dim of End(K2 ⊕ S) is not 2",
    )?;
    ensure(
        r.get("first_ext_degree") == Some("1"),
        "first Ext degree is not 1",
    )?;
    let regular = vec![module(&k2, "regular")?];
    let end = endomorphism_algebra(&regular, 0).map_err(e)?;
    let d = dominant_dimension(&end.algebra, 6).map_err(e)?.value;
    ensure(d == DomDim::Infinite, format!("End(K2) has dom dim {d}"))?;
    Ok("End(K2 ⊕ S): domdim 2, first Ext degree 1; End(K2): infinity-certified".into())
}

pub fn nakayama_ext_identity() -> Outcome {
    let aus = load("aus")?;
    let k2 = load("k2")?;
    let m = module(&k2, "M")?;
    let lhs = ext_dual_regular(&aus.algebra, 6).map_err(e)?;
    let rhs = ext_dims(&nakayama_tensor(&m).map_err(e)?, &m, 6)
        .map_err(e)?
        .dims;
    let shown = format!("AUS {} vs K2 {}", format_dims(&lhs), format_dims(&rhs));
    ensure(
        lhs[1] == 1 && rhs[1] == 1,
        format!("degree 1 is not 1 on both sides: {shown}"),
    )?;
    ensure(lhs == rhs, format!("sequences differ: {shown}"))?;
    Ok(shown)
}

pub fn endomorphism_identification() -> Outcome {
    let k2 = load("k2")?;
    let aus = load("aus")?;
    let m = k2.module("M").map_err(e)?;
    let end = endomorphism_algebra(&m.summands, 0).map_err(e)?;
    ensure(
        end.algebra.dim() == 5,
        format!("End has dim {}", end.algebra.dim()),
    )?;
    let iso = find_isomorphism(&aus.algebra, &end.algebra, 0, ISO_TRIALS).map_err(e)?;
    let iso = iso.ok_or("no structure-constant isomorphism with the quiver build of AUS")?;
    Ok(format!("dim 5, vertex permutation {:?}", iso.permutation))
}

pub fn tensor_products() -> Outcome {
    let (k2, ka2) = (load("k2")?, load("ka2")?);
    let c = k2.algebra.tensor_product(&k2.algebra);
    let d = dominant_dimension(&c, 6).map_err(e)?.value;
    ensure(d == DomDim::Infinite, format!("K2⊗K2 has dom dim {d}"))?;
    let ext = ext_dual_regular(&c, 6).map_err(e)?;
    ensure(
        ext == [4, 0, 0, 0, 0, 0, 0],
        format!("K2⊗K2 Ext(D(C), C) = {ext:?}"),
    )?;
    let c = ka2.algebra.tensor_product(&k2.algebra);
    let d = dominant_dimension(&c, 6).map_err(e)?.value;
    ensure(d == DomDim::Exact(1), format!("KA2⊗K2 has dom dim {d}"))?;
    for (x, y) in TENSOR_PAIRS {
        let r = kunneth_check(&load(x)?.algebra, &load(y)?.algebra, 6, 64).map_err(e)?;
        ensure(r.passed(), format!("{x}⊗{y}: {:?}", r.witness))?;
    }
    Ok(format!(
        "K2⊗K2 infinity-certified, KA2⊗K2 → 1, {} convolution pairs",
        TENSOR_PAIRS.len()
    ))
}

pub fn remark32() -> Outcome {
    for name in ["k", "k2", "ka2"] {
        let r = remark32_check(&load(name)?.algebra, 4, 64).map_err(e)?;
        ensure(r.passed(), format!("{name}: {:?}", r.witness))?;
    }
    Ok("k, K2, KA2 agree in degrees 1..4".into())
}

pub fn dominant_dimensions() -> Outcome {
    let expected = [
        ("k2", DomDim::Infinite),
        ("k3", DomDim::Infinite),
        ("k4", DomDim::Infinite),
        ("ka2", DomDim::Exact(1)),
        ("a3", DomDim::Exact(1)),
        ("aus", DomDim::Exact(2)),
    ];
    for (name, want) in expected {
        let got = dominant_dimension(&load(name)?.algebra, 6)
            .map_err(e)?
            .value;
        ensure(got == want, format!("{name}: {got}, expected {want}"))?;
    }
    Ok("K2, k[x]/(x³), k[x]/(x⁴) infinity-certified; KA2 1; A3 1; AUS 2".into())
}

pub fn frobenius_predicates() -> Outcome {
    let f = PrimeField::new(P as u64).map_err(e)?;
    for n in 2..=4 {
        let a = families::build(&families::truncated_polynomial(n), f);
        let p = Extension::scalars(a.clone()).predicates(0).map_err(e)?;
        ensure(p.frobenius && p.split, format!("k ⊆ k[x]/(x^{n}): {p:?}"))?;
        ensure(
            p == Extension::scalars(a).predicates(0).map_err(e)?,
            "predicates differ under a fixed seed",
        )?;
    }
    for l in all_entries()? {
        let p = Extension::identity(l.algebra.clone())
            .predicates(0)
            .map_err(e)?;
        ensure(
            p.frobenius && p.separable && p.split && p.projective_over_sub,
            format!("identity extension of {}: {p:?}", l.name),
        )?;
    }
    let ka2 = load("ka2")?;
    let p = Extension::scalars(ka2.algebra.clone())
        .predicates(0)
        .map_err(e)?;
    ensure(!p.frobenius, "k ⊆ KA2 reported Frobenius")?;
    ensure(
        p == Extension::scalars(ka2.algebra).predicates(0).map_err(e)?,
        "KA2 predicates differ",
    )?;
    Ok("k[x]/(xⁿ) Frobenius and split; identities all-true; KA2 not Frobenius".into())
}

pub fn property_suites() -> Outcome {
    let mut checked = 0;
    for l in all_entries()? {
        let a: &Arc<Algebra> = &l.algebra;
        let std = Standard::of(a).map_err(e)?;
        let modules = corpus_modules(&l).map_err(e)?;
        for (name, m) in &modules {
            let dims = m.vertex_dims();
            for (i, &d) in dims.iter().enumerate() {
                let h = hom_space(&std.projective(i), m).map_err(e)?.len();
                ensure(h == d, format!("{} Yoneda at {name}, vertex {i}", l.name))?;
            }
            let res = minimal_resolution(m, ResolutionKind::Projective, 4).map_err(e)?;
            for j in 0..std.vertex_count() {
                let ext = ext_from_resolution(&res, &std.simple(j), 3)
                    .map_err(e)?
                    .dims;
                for (i, d) in ext.iter().enumerate() {
                    let mult = res
                        .summands
                        .get(i)
                        .map_or(0, |s| s.iter().filter(|&&v| v == j).count());
                    ensure(
                        *d == mult,
                        format!("{} minimality at {name}, degree {i}", l.name),
                    )?;
                }
            }
            nakayama(m, 0).map_err(|err| format!("{} Nakayama routes at {name}: {err}", l.name))?;
            for (other, n) in &modules {
                for f in hom_space(m, n).map_err(e)? {
                    let (ker, _) = f.kernel();
                    ensure(
                        ker.dim() + f.rank() == m.dim(),
                        format!("{} rank-nullity {name} → {other}", l.name),
                    )?;
                }
                let direct = ext_dims(m, n, 3).map_err(e)?;
                let dual =
                    ext_dims(&n.dual_over_opposite(), &m.dual_over_opposite(), 3).map_err(e)?;
                ensure(
                    direct == dual,
                    format!("{} duality at ({name}, {other})", l.name),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} module pairs over {} algebras",
        ENTRIES.len()
    ))
}

pub fn determinism() -> Outcome {
    let run = |extra: &[&str]| {
        let mut args = vec!["homdim", "corpus", "run", "--no-cache"];
        args.extend_from_slice(extra);
        homdim_catalog::run(args)
    };
    let first = run(&[]);
    let second = run(&[]);
    ensure(first.stdout == second.stdout, "two corpus runs differ")?;
    ensure(
        first.stdout.contains("RESULTS"),
        "corpus run printed no RESULTS block",
    )?;
    let dir = tempfile::tempdir().map_err(e)?;
    let catalog = dir.path().to_str().ok_or("temporary path is not UTF-8")?;
    let cold = homdim_catalog::run(["homdim", "corpus", "run", "--catalog", catalog]);
    let warm = homdim_catalog::run(["homdim", "corpus", "run", "--catalog", catalog]);
    ensure(
        cold.stdout == first.stdout,
        "cache-filling run differs from the uncached run",
    )?;
    ensure(
        warm.stdout == first.stdout,
        "cache-hitting run differs from the uncached run",
    )?;
    let blocks = first.stdout.matches("RESULTS\n").count();
    Ok(format!(
        "{blocks} RESULTS blocks byte-identical across 4 runs, cache off and on"
    ))
}

pub struct Criterion {
    pub number: usize,
    pub name: &'static str,
    pub check: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        name: "oracle equivalence",
        check: oracle_equivalence,
    },
    Criterion {
        number: 2,
        name: "Müller correspondence",
        check: muller_correspondence,
    },
    Criterion {
        number: 3,
        name: "Ext(D(A), A) = Ext(νM, M) for AUS = End(K2 ⊕ S)",
        check: nakayama_ext_identity,
    },
    Criterion {
        number: 4,
        name: "End(K2 ⊕ S) ≅ AUS",
        check: endomorphism_identification,
    },
    Criterion {
        number: 5,
        name: "tensor products",
        check: tensor_products,
    },
    Criterion {
        number: 6,
        name: "three Ext sequences for B ⊕ D(B)",
        check: remark32,
    },
    Criterion {
        number: 7,
        name: "dominant dimensions",
        check: dominant_dimensions,
    },
    Criterion {
        number: 8,
        name: "Frobenius predicates",
        check: frobenius_predicates,
    },
    Criterion {
        number: 9,
        name: "property suites",
        check: property_suites,
    },
    Criterion {
        number: 10,
        name: "determinism",
        check: determinism,
    },
];

/// `criterion  N: PASS  name: detail`, or `FAIL`.
pub fn report_line(c: &Criterion, outcome: &Outcome) -> String {
    let (tag, detail) = match outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    format!("criterion {:>2}: {tag}  {}: {detail}", c.number, c.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_are_numbered_in_order() {
        let numbers: Vec<usize> = CRITERIA.iter().map(|c| c.number).collect();
        assert_eq!(numbers, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn report_lines() {
        let c = &CRITERIA[6];
        assert_eq!(
            report_line(c, &Ok("ok".into())),
            "criterion  7: PASS  dominant dimensions: ok"
        );
        assert!(report_line(c, &Err("x".into())).contains(": FAIL  "));
    }

    #[test]
    fn ensure_passes_messages_through() {
        assert_eq!(ensure(true, "unused"), Ok(()));
        assert_eq!(ensure(false, "broken"), Err("broken".to_string()));
    }

    #[test]
    fn corpus_loads_for_every_criterion() {
        assert_eq!(all_entries().unwrap().len(), ENTRIES.len());
    }
}
