//! Builds validated algebras and modules from documents.

use std::collections::BTreeMap;
use std::sync::Arc;

use homdim::{Algebra, Matrix, Module, PrimeField, Standard};

use crate::format::{content_hash, AlgebraDoc, Body, IntMatrix, ModuleDef};
use crate::CatalogError;

/// A module together with its declared summands.
#[derive(Clone, Debug)]
pub struct NamedModule {
    pub module: Module,
    pub summands: Vec<Module>,
    pub summand_names: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub doc: AlgebraDoc,
    pub hash: String,
    pub algebra: Arc<Algebra>,
    /// Modules defined explicitly in the document, before sums.
    explicit: BTreeMap<String, Module>,
}

fn to_matrix(
    f: PrimeField,
    m: &IntMatrix,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Matrix, CatalogError> {
    if rows * cols == 0 && m.is_empty() {
        return Ok(Matrix::zeros(f, rows, cols));
    }
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(CatalogError::Input(format!("{what} must be {rows}x{cols}")));
    }
    Ok(Matrix::from_rows(f, m))
}

fn build_algebra(doc: &AlgebraDoc, f: PrimeField) -> Result<Arc<Algebra>, CatalogError> {
    match &doc.body {
        Body::Quiver(q) => Ok(Algebra::from_quiver(q, f)?),
        Body::Table(t) => {
            let reduce = |v: &[i64]| v.iter().map(|&x| f.reduce(x)).collect::<Vec<u32>>();
            let alg = Algebra::from_structure_constants(
                f,
                t.labels.clone(),
                &t.products,
                reduce(&t.unit),
                t.idempotents.iter().map(|e| reduce(e)).collect(),
            )?;
            Ok(Arc::new(alg))
        }
    }
}

fn quiver_module(
    alg: &Arc<Algebra>,
    dims: &[usize],
    arrows: &[(String, IntMatrix)],
) -> Result<Module, CatalogError> {
    let f = alg.field();
    let (pres, paths) = match (alg.presentation(), alg.paths()) {
        (Some(p), Some(paths)) => (p, paths),
        _ => {
            return Err(CatalogError::Input(
                "`dims` modules need a quiver algebra".into(),
            ))
        }
    };
    if dims.len() != pres.vertices.len() {
        return Err(CatalogError::Input(format!(
            "`dims` needs {} entries",
            pres.vertices.len()
        )));
    }
    let mut offsets = vec![0];
    for d in dims {
        offsets.push(offsets.last().unwrap() + d);
    }
    let total = offsets[dims.len()];
    let mut maps = Vec::with_capacity(pres.arrows.len());
    for arrow in &pres.arrows {
        let (s, t) = (arrow.source, arrow.target);
        let given = arrows.iter().find(|(n, _)| *n == arrow.name);
        let m = match given {
            Some((_, m)) => to_matrix(f, m, dims[t], dims[s], &format!("arrow `{}`", arrow.name))?,
            None => Matrix::zeros(f, dims[t], dims[s]),
        };
        maps.push(m);
    }
    let action = paths
        .iter()
        .map(|p| {
            let mut m = Matrix::identity(f, dims[p.source]);
            for &a in &p.arrows {
                m = maps[a].mul(&m);
            }
            let mut big = Matrix::zeros(f, total, total);
            big.set_block(offsets[p.target], offsets[p.source], &m);
            big
        })
        .collect();
    Ok(Module::new(alg.clone(), total, action)?)
}

fn table_module(
    alg: &Arc<Algebra>,
    dim: usize,
    actions: &[(usize, IntMatrix)],
) -> Result<Module, CatalogError> {
    let f = alg.field();
    let mut mats = vec![Matrix::zeros(f, dim, dim); alg.dim()];
    for (k, m) in actions {
        if *k >= alg.dim() {
            return Err(CatalogError::Input(format!(
                "action index {k} out of range"
            )));
        }
        mats[*k] = to_matrix(f, m, dim, dim, &format!("action {k}"))?;
    }
    Ok(Module::new(alg.clone(), dim, mats)?)
}

impl Loaded {
    /// Validates the document over the field with modulus `modulus`.
    pub fn new(name: &str, doc: AlgebraDoc, modulus: u32) -> Result<Loaded, CatalogError> {
        let f = PrimeField::new(modulus as u64)?;
        let algebra = build_algebra(&doc, f)?;
        let mut explicit = BTreeMap::new();
        for m in &doc.modules {
            let module = match &m.def {
                ModuleDef::Quiver { dims, arrows } => quiver_module(&algebra, dims, arrows),
                ModuleDef::Table { dim, actions } => table_module(&algebra, *dim, actions),
                ModuleDef::Sum(_) => continue,
            }
            .map_err(|e| CatalogError::Input(format!("module `{}`: {e}", m.name)))?;
            explicit.insert(m.name.clone(), module);
        }
        let hash = content_hash(&doc);
        let loaded = Loaded {
            name: name.to_string(),
            doc,
            hash,
            algebra,
            explicit,
        };
        for m in &loaded.doc.modules {
            loaded
                .module(&m.name)
                .map_err(|e| CatalogError::Input(format!("module `{}`: {e}", m.name)))?;
        }
        Ok(loaded)
    }

    pub fn module_names(&self) -> Vec<String> {
        self.doc.modules.iter().map(|m| m.name.clone()).collect()
    }

    fn standard(&self, token: &str) -> Result<Option<Module>, CatalogError> {
        let std = Standard::of(&self.algebra)?;
        let n = std.vertex_count();
        match token {
            "regular" => return Ok(Some(std.regular())),
            "dual" => return Ok(Some(std.dual_regular())),
            "zero" => return Ok(Some(Module::zero(self.algebra.clone()))),
            _ => {}
        }
        let (kind, vertex) = token.split_at(1);
        let index = if vertex.is_empty() && n == 1 {
            Some(0)
        } else {
            (0..n).find(|&i| self.algebra.vertex_label(i) == vertex)
        };
        Ok(match (kind, index) {
            ("P", Some(i)) => Some(std.projective(i)),
            ("I", Some(i)) => Some(std.injective(i)),
            ("S", Some(i)) => Some(std.simple(i)),
            _ => None,
        })
    }

    fn expand(
        &self,
        token: &str,
        depth: usize,
        out: &mut Vec<(String, Module)>,
    ) -> Result<(), CatalogError> {
        if depth > 16 {
            return Err(CatalogError::Input(format!(
                "module `{token}` is defined cyclically"
            )));
        }
        if let Some(m) = self.explicit.get(token) {
            out.push((token.to_string(), m.clone()));
            return Ok(());
        }
        if let Some(doc) = self.doc.modules.iter().find(|m| m.name == token) {
            if let ModuleDef::Sum(parts) = &doc.def {
                for p in parts {
                    self.expand(p, depth + 1, out)?;
                }
                return Ok(());
            }
        }
        match self.standard(token)? {
            Some(m) => {
                out.push((token.to_string(), m));
                Ok(())
            }
            None => Err(CatalogError::Input(format!("unknown module `{token}`"))),
        }
    }

    /// Resolves `name` or `a+b+...`, where each part is a module of the
    /// document or one of `regular`, `dual`, `zero`, `P<v>`, `I<v>`, `S<v>`.
    pub fn module(&self, expr: &str) -> Result<NamedModule, CatalogError> {
        let mut parts = Vec::new();
        for token in expr.split('+') {
            self.expand(token.trim(), 0, &mut parts)?;
        }
        let refs: Vec<&Module> = parts.iter().map(|(_, m)| m).collect();
        let module = Module::direct_sum(&refs)?;
        Ok(NamedModule {
            module,
            summand_names: parts.iter().map(|(n, _)| n.clone()).collect(),
            summands: parts.into_iter().map(|(_, m)| m).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;

    const KA2: &str = "homdim-alg = 1\nfield = 32003\nmode = quiver\n[quiver]\nvertices = 1 2\n\
        arrow a = 1 -> 2\nbound = 1\n[module P]\ndims = 1 1\narrow a = 1\n[module X]\nsum = P + S2\n";

    fn ka2() -> Loaded {
        Loaded::new("ka2", parse(KA2).unwrap(), 32003).unwrap()
    }

    #[test]
    fn builtin_and_declared_modules() {
        let l = ka2();
        assert_eq!(
            l.module("P").unwrap().module.fingerprint(),
            l.module("P1").unwrap().module.fingerprint()
        );
        assert_eq!(l.module("X").unwrap().summand_names, ["P", "S2"]);
        assert_eq!(l.module("regular + dual").unwrap().module.dim(), 6);
        assert_eq!(l.module("zero").unwrap().module.dim(), 0);
        assert!(l.module("P3").is_err());
    }

    #[test]
    fn wrong_matrix_shapes_are_input_errors() {
        let text = KA2.replace("arrow a = 1\n", "arrow a = 1 0\n");
        let err = Loaded::new("bad", parse(&text).unwrap(), 32003).unwrap_err();
        assert!(
            matches!(err, CatalogError::Input(ref m) if m.contains("1x1")),
            "{err}"
        );
    }

    #[test]
    fn cyclic_sums_are_rejected() {
        let text = format!("{KA2}[module Y]\nsum = Z\n[module Z]\nsum = Y\n");
        let err = Loaded::new("bad", parse(&text).unwrap(), 32003).unwrap_err();
        assert!(err.to_string().contains("cyclically"), "{err}");
    }

    #[test]
    fn non_modules_are_rejected() {
        let text = "homdim-alg = 1\nfield = 32003\nmode = quiver\n[quiver]\nvertices = 1\narrow x = 1 -> 1\n\
            relation = x.x\nbound = 1\n[module N]\ndims = 1\narrow x = 1\n";
        assert!(Loaded::new("bad", parse(text).unwrap(), 32003).is_err());
    }
}
