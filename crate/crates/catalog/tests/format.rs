use homdim::algebra::{Arrow, QuiverPresentation, Relation};
use homdim_catalog::corpus::{self, ENTRIES};
use homdim_catalog::format::{
    content_hash, parse, serialize, AlgebraDoc, Body, ModuleDef, ModuleDoc, TableDoc,
};
use homdim_catalog::{CatalogError, Loaded};
use proptest::prelude::*;

#[test]
fn corpus_entries_round_trip() {
    for e in ENTRIES.iter() {
        let doc = parse(e.text).unwrap();
        let again = parse(&serialize(&doc)).unwrap();
        assert_eq!(doc, again, "{}", e.name);
        assert_eq!(content_hash(&doc), content_hash(&again));
    }
}

#[test]
fn hash_ignores_comments_and_layout() {
    let text = corpus::entry("aus").unwrap().text;
    let noisy = text
        .replace("bound = 2", "bound   =   2  # longest surviving path")
        .replace('\n', "\n\n");
    assert_eq!(
        content_hash(&parse(text).unwrap()),
        content_hash(&parse(&noisy).unwrap())
    );
}

#[test]
fn hash_tracks_content() {
    let text = corpus::entry("k3").unwrap().text;
    let other = text.replace("relation = x.x.x", "relation = x.x.x + 2*x.x");
    assert_ne!(
        content_hash(&parse(text).unwrap()),
        content_hash(&parse(&other).unwrap())
    );
}

fn parse_err(text: &str) -> (usize, usize, String) {
    let e = parse(text).unwrap_err();
    (e.line, e.column, e.message)
}

#[test]
fn parse_errors_carry_positions() {
    let base = "homdim-alg = 1\nfield = 32003\nmode = quiver\n[quiver]\nvertices = 1\n";
    let (line, col, msg) = parse_err(&format!("{base}arrow x = 1 => 1\nbound = 1\n"));
    assert_eq!(line, 6);
    assert!(col >= 1 && msg.contains("->"), "{col} {msg}");
    let (line, _, msg) = parse_err(&format!("{base}relation = y.y\nbound = 1\n"));
    assert_eq!(line, 6);
    assert!(msg.contains('y'), "{msg}");
    let (line, _, _) = parse_err("homdim-alg = 2\nfield = 32003\nmode = quiver\n");
    assert_eq!(line, 1);
    let (line, _, _) = parse_err(&format!(
        "{base}bound = 1\n[module S]\ndims = 1\narrow x = 1 2\n"
    ));
    assert_eq!(line, 9);
}

#[test]
fn non_associative_table_names_the_triple() {
    let text = "homdim-alg = 1\nfield = 32003\nmode = table\n[table]\ndim = 3\nlabels = 1 x y\n\
        product = 0 0 0 1\nproduct = 0 1 1 1\nproduct = 1 0 1 1\nproduct = 0 2 2 1\nproduct = 2 0 2 1\n\
        product = 1 1 2 1\nproduct = 1 2 1 1\nunit = 1 0 0\nidempotent = 1 0 0\n";
    let doc = parse(text).unwrap();
    let err = Loaded::new("bad", doc, 32003).unwrap_err();
    let CatalogError::Engine(homdim::Error::NonAssociative(a, b, c)) = &err else {
        panic!("unexpected error {err}");
    };
    assert!(err.to_string().contains(&format!("({a}, {b}, {c})")));
    assert!([a, b, c]
        .iter()
        .all(|l| ["1", "x", "y"].contains(&l.as_str())));
}

#[test]
fn table_and_quiver_modes_agree() {
    let q = corpus::load("k2", 32003).unwrap();
    let t = corpus::load("k2table", 32003).unwrap();
    assert_eq!(q.algebra.dim(), t.algebra.dim());
    assert_eq!(
        q.algebra.radical().unwrap().cols(),
        t.algebra.radical().unwrap().cols()
    );
    assert_eq!(
        q.module("M").unwrap().module.dim(),
        t.module("M").unwrap().module.dim()
    );
}

fn quiver_doc() -> impl Strategy<Value = AlgebraDoc> {
    (1usize..=3)
        .prop_flat_map(|n| {
            let arrows = prop::collection::vec((0..n, 0..n), 0..=3);
            (Just(n), arrows, any::<u64>(), 1usize..=4)
        })
        .prop_map(|(n, ends, salt, bound)| {
            let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let arrows: Vec<Arrow> = ends
                .iter()
                .enumerate()
                .map(|(i, &(s, t))| Arrow {
                    name: format!("a{i}"),
                    source: s,
                    target: t,
                })
                .collect();
            let mut relations = Vec::new();
            let mut modules = Vec::new();
            if let Some(first) = arrows
                .iter()
                .position(|a| arrows.iter().any(|b| b.source == a.target))
            {
                let next = arrows
                    .iter()
                    .position(|b| b.source == arrows[first].target)
                    .unwrap();
                let coeff = (salt % 7) as i64 - 3;
                let coeff = if coeff == 0 { 1 } else { coeff };
                relations.push(Relation {
                    terms: vec![(coeff, vec![first, next])],
                });
            }
            let dims: Vec<usize> = (0..n).map(|i| ((salt >> (4 * i)) % 3) as usize).collect();
            let module_arrows = arrows
                .iter()
                .filter(|a| dims[a.source] > 0 && dims[a.target] > 0)
                .map(|a| {
                    let m = (0..dims[a.target])
                        .map(|r| {
                            (0..dims[a.source])
                                .map(|c| ((salt >> (r + 2 * c)) % 5) as i64)
                                .collect()
                        })
                        .collect();
                    (a.name.clone(), m)
                })
                .collect();
            modules.push(ModuleDoc {
                name: "X".into(),
                def: ModuleDef::Quiver {
                    dims,
                    arrows: module_arrows,
                },
            });
            modules.push(ModuleDoc {
                name: "Y".into(),
                def: ModuleDef::Sum(vec!["X".into(), "regular".into()]),
            });
            AlgebraDoc {
                version: 1,
                field: 32003,
                body: Body::Quiver(QuiverPresentation {
                    vertices,
                    arrows,
                    relations,
                    nilpotency_bound: bound,
                }),
                modules,
            }
        })
}

fn table_doc() -> impl Strategy<Value = AlgebraDoc> {
    (1usize..=3)
        .prop_flat_map(|d| {
            let products = prop::collection::vec((0..d, 0..d, 0..d, -9i64..=9), 0..6);
            let unit = prop::collection::vec(0i64..3, d);
            (Just(d), products, unit)
        })
        .prop_map(|(dim, products, unit)| AlgebraDoc {
            version: 1,
            field: 101,
            body: Body::Table(TableDoc {
                dim,
                labels: (0..dim).map(|i| format!("b{i}")).collect(),
                products,
                unit: unit.clone(),
                idempotents: vec![unit],
            }),
            modules: vec![ModuleDoc {
                name: "T".into(),
                def: ModuleDef::Table {
                    dim: 1,
                    actions: vec![(0, vec![vec![1]])],
                },
            }],
        })
}

proptest! {
    #[test]
    fn quiver_documents_round_trip(doc in quiver_doc()) {
        let once = parse(&serialize(&doc)).unwrap();
        let twice = parse(&serialize(&once)).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(content_hash(&once), content_hash(&twice));
        prop_assert_eq!(serialize(&once), serialize(&doc));
    }

    #[test]
    fn table_documents_round_trip(doc in table_doc()) {
        let once = parse(&serialize(&doc)).unwrap();
        let twice = parse(&serialize(&once)).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(content_hash(&once), content_hash(&twice));
    }
}
