//! Bound quiver algebras `kQ / I`.
//!
//! Paths are arrow sequences in traversal order: `[a, b]` runs `a` first,
//! then `b`. The product follows composition of maps, so `p * q` is the
//! path "`q` then `p`" and `A e_i` is spanned by the paths leaving `i`.

use std::collections::HashMap;
use std::sync::Arc;

use super::Algebra;
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of paths, each of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// Paths longer than this vanish in the algebra.
    pub nilpotency_bound: usize,
}

/// A path in the quiver; the trivial path at a vertex has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Whether this is the idempotent at a vertex.
    pub fn is_trivial(&self) -> bool {
        self.is_empty()
    }

    /// `self` followed by `next`, if composable.
    fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }
}

impl QuiverPresentation {
    pub fn path_label(&self, path: &Path) -> String {
        if path.is_trivial() {
            format!("e{}", self.vertices[path.source])
        } else {
            path.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Endpoints of an arrow sequence, if it is composable.
    fn endpoints(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut at = first.target;
        for &a in &arrows[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    fn check_admissible(&self) -> Result<Vec<(usize, usize)>> {
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::Shape(format!("arrow {i} has an unknown endpoint")));
            }
        }
        let mut ends = Vec::new();
        for (r, rel) in self.relations.iter().enumerate() {
            let bad = |reason: String| Error::NotAdmissible {
                relation: r,
                reason,
            };
            if rel.terms.is_empty() {
                return Err(bad("empty relation".into()));
            }
            let mut common = None;
            for (_, arrows) in &rel.terms {
                if arrows.len() < 2 {
                    return Err(bad("contains a path of length below 2".into()));
                }
                let Some(e) = self.endpoints(arrows) else {
                    return Err(bad("contains a path that is not composable".into()));
                };
                match common {
                    None => common = Some(e),
                    Some(c) if c != e => {
                        return Err(bad("paths do not share source and target".into()))
                    }
                    _ => {}
                }
            }
            ends.push(common.expect("relation has terms"));
        }
        Ok(ends)
    }

    /// The reversed quiver with reversed relations, presenting the opposite algebra.
    pub fn opposite(&self) -> QuiverPresentation {
        QuiverPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| (*c, p.iter().rev().copied().collect()))
                        .collect(),
                })
                .collect(),
            nilpotency_bound: self.nilpotency_bound,
        }
    }
}

/// All paths of length at most `max_len`, ordered by length, then by
/// extension order from the trivial paths.
fn enumerate_paths(pres: &QuiverPresentation, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..pres.vertices.len())
        .map(|v| Path {
            source: v,
            target: v,
            arrows: vec![],
        })
        .collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in pres.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Path algebra truncated at `max_len` modulo the ideal generated by the
/// relations: row-reduced spanning set of the ideal over the path basis.
struct TruncatedQuotient {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Column of each path in elimination order (longest paths first).
    position: Vec<usize>,
    reduced: Matrix,
    pivots: Vec<usize>,
}

impl TruncatedQuotient {
    fn new(
        pres: &QuiverPresentation,
        field: PrimeField,
        ends: &[(usize, usize)],
        max_len: usize,
    ) -> Self {
        let paths = enumerate_paths(pres, max_len);
        let index: HashMap<Path, usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut order: Vec<usize> = (0..paths.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(paths[i].len()), i));
        let mut position = vec![0; paths.len()];
        for (pos, &i) in order.iter().enumerate() {
            position[i] = pos;
        }

        let n = paths.len();
        let mut rows: Vec<u32> = Vec::new();
        let mut row_count = 0;
        for (rel, &(s, t)) in pres.relations.iter().zip(ends) {
            // v then rel then w, for every v ending at s and w starting at t
            for v in paths.iter().filter(|p| p.target == s) {
                for w in paths.iter().filter(|p| p.source == t) {
                    let mut row = vec![0u32; n];
                    let mut nonzero = false;
                    for (coef, arrows) in &rel.terms {
                        let mid = Path {
                            source: s,
                            target: t,
                            arrows: arrows.clone(),
                        };
                        let full = v
                            .then(&mid)
                            .and_then(|x| x.then(w))
                            .expect("composable by construction");
                        if full.len() > max_len {
                            continue;
                        }
                        let col = position[index[&full]];
                        row[col] = field.add(row[col], field.reduce(*coef));
                        nonzero |= row[col] != 0;
                    }
                    if nonzero {
                        rows.extend(row);
                        row_count += 1;
                    }
                }
            }
        }
        let red = Matrix::from_vec(field, row_count, n, rows).rref();
        let reduced = red.matrix.submatrix(0, 0, red.rank, n);
        TruncatedQuotient {
            paths,
            index,
            position,
            reduced,
            pivots: red.pivots,
        }
    }

    /// Normal form of a single path, as a vector in elimination order.
    fn normal_form(&self, path: &Path) -> Vec<u32> {
        let field = self.reduced.field();
        let n = self.paths.len();
        let mut v = vec![0u32; n];
        let Some(&i) = self.index.get(path) else {
            return v;
        };
        v[self.position[i]] = 1;
        for (r, &c) in self.pivots.iter().enumerate() {
            let coef = v[c];
            if coef != 0 {
                let row = self.reduced.row(r);
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = field.sub(*x, field.mul(coef, y));
                }
            }
        }
        v
    }
}

impl Algebra {
    /// `kQ / (I + J^(bound+1))`, after checking that every path of length
    /// `bound + 1` already lies in `I` modulo longer paths.
    pub fn from_quiver(pres: &QuiverPresentation, field: PrimeField) -> Result<Arc<Algebra>> {
        if pres.vertices.is_empty() {
            return Err(Error::Shape("quiver has no vertices".into()));
        }
        let ends = pres.check_admissible()?;
        let bound = pres.nilpotency_bound;

        let check = TruncatedQuotient::new(pres, field, &ends, bound + 1);
        for p in check.paths.iter().filter(|p| p.len() == bound + 1) {
            if check.normal_form(p).iter().any(|&v| v != 0) {
                return Err(Error::NotNilpotent {
                    bound,
                    path: pres.path_label(p),
                });
            }
        }

        let quot = TruncatedQuotient::new(pres, field, &ends, bound);
        let mut is_pivot = vec![false; quot.paths.len()];
        for &c in &quot.pivots {
            is_pivot[c] = true;
        }
        // basis: surviving paths in enumeration order (short paths first)
        let basis: Vec<usize> = (0..quot.paths.len())
            .filter(|&i| !is_pivot[quot.position[i]])
            .collect();
        let coord_of_position: HashMap<usize, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, &i)| (quot.position[i], k))
            .collect();
        let dim = basis.len();
        let coords = |v: &[u32]| -> Vec<u32> {
            let mut out = vec![0; dim];
            for (pos, &x) in v.iter().enumerate() {
                if x != 0 {
                    let k = coord_of_position[&pos];
                    out[k] = x;
                }
            }
            out
        };

        let basis_paths: Vec<Path> = basis.iter().map(|&i| quot.paths[i].clone()).collect();
        let mut left = vec![Matrix::zeros(field, dim, dim); dim];
        for (a, pa) in basis_paths.iter().enumerate() {
            for (b, pb) in basis_paths.iter().enumerate() {
                // e_a * e_b = "b then a"
                if let Some(prod) = pb.then(pa) {
                    if prod.len() <= bound {
                        let c = coords(&quot.normal_form(&prod));
                        for (k, &v) in c.iter().enumerate() {
                            left[a].set(k, b, v);
                        }
                    }
                }
            }
        }

        let nv = pres.vertices.len();
        let idempotents: Vec<Vec<u32>> = (0..nv)
            .map(|v| {
                let k = basis_paths
                    .iter()
                    .position(|p| p.is_trivial() && p.source == v)
                    .expect("trivial paths never lie in an admissible ideal");
                let mut e = vec![0; dim];
                e[k] = 1;
                e
            })
            .collect();
        let mut unit = vec![0; dim];
        for e in &idempotents {
            for (u, &x) in unit.iter_mut().zip(e) {
                *u = field.add(*u, x);
            }
        }
        let labels = basis_paths.iter().map(|p| pres.path_label(p)).collect();
        Ok(Arc::new(Algebra::assemble(
            field,
            labels,
            left,
            unit,
            idempotents,
            Some(pres.clone()),
            Some(basis_paths),
        )?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(
        vertices: &[&str],
        arrows: &[(&str, usize, usize)],
        relations: Vec<Vec<(i64, Vec<usize>)>>,
        bound: usize,
    ) -> QuiverPresentation {
        QuiverPresentation {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|&(n, s, t)| Arrow {
                    name: n.into(),
                    source: s,
                    target: t,
                })
                .collect(),
            relations: relations
                .into_iter()
                .map(|terms| Relation { terms })
                .collect(),
            nilpotency_bound: bound,
        }
    }

    #[test]
    fn truncated_polynomial_ring() {
        let p = pres(&["1"], &[("x", 0, 0)], vec![vec![(1, vec![0, 0])]], 1);
        let a = Algebra::from_quiver(&p, PrimeField::default()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), &["e1".to_string(), "x".to_string()]);
        assert_eq!(a.structure_constant(1, 1, 1), 0);
        assert_eq!(a.structure_constant(1, 0, 1), 1);
    }

    #[test]
    fn path_algebra_a2() {
        let p = pres(&["1", "2"], &[("a", 0, 1)], vec![], 1);
        let a = Algebra::from_quiver(&p, PrimeField::default()).unwrap();
        assert_eq!(a.dim(), 3);
        // a = e2 * a * e1
        let (e1, e2, arrow) = (0, 1, 2);
        assert_eq!(a.structure_constant(arrow, e1, arrow), 1);
        assert_eq!(a.structure_constant(e2, arrow, arrow), 1);
        assert_eq!(a.structure_constant(e1, arrow, arrow), 0);
    }

    #[test]
    fn auslander_algebra_of_dual_numbers() {
        let p = pres(
            &["1", "2"],
            &[("alpha", 0, 1), ("beta", 1, 0)],
            vec![vec![(1, vec![1, 0])]],
            2,
        );
        let a = Algebra::from_quiver(&p, PrimeField::default()).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.labels()[4], "alpha.beta");
    }

    #[test]
    fn rejects_short_relation() {
        let p = pres(&["1"], &[("x", 0, 0)], vec![vec![(1, vec![0])]], 1);
        let err = Algebra::from_quiver(&p, PrimeField::default()).unwrap_err();
        assert!(matches!(err, Error::NotAdmissible { relation: 0, .. }));
    }

    #[test]
    fn rejects_mixed_endpoints() {
        let p = pres(
            &["1", "2"],
            &[("a", 0, 1), ("b", 1, 0), ("x", 0, 0)],
            vec![vec![(1, vec![0, 1]), (1, vec![2, 0])]],
            3,
        );
        let err = Algebra::from_quiver(&p, PrimeField::default()).unwrap_err();
        assert!(matches!(err, Error::NotAdmissible { relation: 0, .. }));
    }

    #[test]
    fn rejects_insufficient_bound() {
        // alpha.beta is a nonzero path of length 2
        let p = pres(
            &["1", "2"],
            &[("alpha", 0, 1), ("beta", 1, 0)],
            vec![vec![(1, vec![1, 0])]],
            1,
        );
        let err = Algebra::from_quiver(&p, PrimeField::default()).unwrap_err();
        assert!(matches!(err, Error::NotNilpotent { bound: 1, .. }));
        // no relations on a loop: never nilpotent
        let p = pres(&["1"], &[("x", 0, 0)], vec![], 4);
        assert!(Algebra::from_quiver(&p, PrimeField::default()).is_err());
    }

    #[test]
    fn commutative_square_relation() {
        // k[x,y]/(x^2, y^2, xy - yx)
        let p = pres(
            &["1"],
            &[("x", 0, 0), ("y", 0, 0)],
            vec![
                vec![(1, vec![0, 0])],
                vec![(1, vec![1, 1])],
                vec![(1, vec![0, 1]), (-1, vec![1, 0])],
            ],
            2,
        );
        let a = Algebra::from_quiver(&p, PrimeField::default()).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.radical().unwrap().cols(), 3);
    }
}
