//! Presentations of a few standard families.

use std::sync::Arc;

use super::{Algebra, Arrow, QuiverPresentation, Relation};
use crate::field::PrimeField;

/// `k[x]/(x^n)`, one loop with the single relation `x^n`.
pub fn truncated_polynomial(n: usize) -> QuiverPresentation {
    assert!(n >= 2, "relations need length at least 2");
    QuiverPresentation {
        vertices: vec!["1".into()],
        arrows: vec![Arrow {
            name: "x".into(),
            source: 0,
            target: 0,
        }],
        relations: vec![Relation {
            terms: vec![(1, vec![0; n])],
        }],
        nilpotency_bound: n - 1,
    }
}

/// Path algebra of `1 -> 2 -> ... -> n`.
pub fn linear_quiver(n: usize) -> QuiverPresentation {
    assert!(n >= 1);
    QuiverPresentation {
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        arrows: (0..n - 1)
            .map(|i| Arrow {
                name: format!("a{}", i + 1),
                source: i,
                target: i + 1,
            })
            .collect(),
        relations: vec![],
        nilpotency_bound: n.saturating_sub(1).max(1),
    }
}

/// The Auslander algebra of `k[x]/(x^2)`: `alpha: 1 -> 2`, `beta: 2 -> 1`,
/// with `beta` followed by `alpha` equal to zero.
pub fn auslander_dual_numbers() -> QuiverPresentation {
    QuiverPresentation {
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![
            Arrow {
                name: "alpha".into(),
                source: 0,
                target: 1,
            },
            Arrow {
                name: "beta".into(),
                source: 1,
                target: 0,
            },
        ],
        relations: vec![Relation {
            terms: vec![(1, vec![1, 0])],
        }],
        nilpotency_bound: 2,
    }
}

/// Builds a presentation that is known to be valid.
pub fn build(pres: &QuiverPresentation, field: PrimeField) -> Arc<Algebra> {
    Algebra::from_quiver(pres, field).expect("family presentations are admissible")
}
