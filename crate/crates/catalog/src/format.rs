//! The `.alg` text format.
//!
//! ```text
//! homdim-alg = 1
//! field = 32003
//! mode = quiver
//!
//! [quiver]
//! vertices = 1 2
//! arrow alpha = 1 -> 2
//! arrow beta = 2 -> 1
//! relation = beta.alpha
//! bound = 2
//!
//! [module S1]
//! dims = 1 0
//!
//! [module M]
//! sum = regular + S1
//! ```
//!
//! Paths are written in traversal order, arrows joined by `.`. A relation
//! is a sum of terms `c*path`. Table mode uses `[table]` with `dim`,
//! `labels`, sparse `product = a b c v` triples (coefficient `v` of `e_c`
//! in `e_a e_b`), `unit` and one `idempotent` line per vertex. Module
//! matrices are rows separated by `;`.

use std::fmt::Write as _;

use homdim::algebra::{Arrow, QuiverPresentation, Relation};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDoc {
    pub dim: usize,
    pub labels: Vec<String>,
    /// `(a, b, c, v)`: coefficient `v` of `e_c` in `e_a e_b`.
    pub products: Vec<(usize, usize, usize, i64)>,
    pub unit: Vec<i64>,
    pub idempotents: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Quiver(QuiverPresentation),
    Table(TableDoc),
}

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    /// Vector space per vertex and a matrix per arrow (missing arrows act by zero).
    Quiver {
        dims: Vec<usize>,
        arrows: Vec<(String, IntMatrix)>,
    },
    /// Action matrix per basis element (missing ones act by zero).
    Table {
        dim: usize,
        actions: Vec<(usize, IntMatrix)>,
    },
    /// Declared decomposition into named or standard summands.
    Sum(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDoc {
    pub name: String,
    pub def: ModuleDef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub version: u32,
    pub field: u32,
    pub body: Body,
    pub modules: Vec<ModuleDoc>,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    /// Column (1-based) of `part`, which must be a subslice of the line.
    fn col(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize + 1
    }
}

enum Section {
    Header,
    Quiver,
    Table,
    Module(usize),
}

fn split_key_value<'a>(line: &Line<'a>) -> Result<(&'a str, &'a str), ParseError> {
    let text = line.text;
    let Some(eq) = text.find('=') else {
        return Err(line.err(1, "expected `key = value`"));
    };
    let key = text[..eq].trim();
    if key.is_empty() {
        return Err(line.err(1, "missing key"));
    }
    Ok((key, text[eq + 1..].trim()))
}

fn parse_int<T: std::str::FromStr>(line: &Line, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| line.err(line.col(token), format!("expected {what}, found `{token}`")))
}

fn parse_ints(line: &Line, value: &str) -> Result<Vec<i64>, ParseError> {
    value
        .split_whitespace()
        .map(|t| parse_int(line, t, "an integer"))
        .collect()
}

fn parse_matrix(line: &Line, value: &str) -> Result<IntMatrix, ParseError> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<Vec<i64>> = value
        .split(';')
        .map(|r| parse_ints(line, r))
        .collect::<Result<_, _>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(line.err(line.col(value), "matrix rows have different lengths"));
    }
    Ok(rows)
}

fn vertex_index(line: &Line, vertices: &[String], token: &str) -> Result<usize, ParseError> {
    vertices
        .iter()
        .position(|v| v == token)
        .ok_or_else(|| line.err(line.col(token), format!("unknown vertex `{token}`")))
}

fn arrow_index(line: &Line, arrows: &[Arrow], token: &str) -> Result<usize, ParseError> {
    arrows
        .iter()
        .position(|a| a.name == token)
        .ok_or_else(|| line.err(line.col(token), format!("unknown arrow `{token}`")))
}

fn parse_relation(line: &Line, arrows: &[Arrow], value: &str) -> Result<Relation, ParseError> {
    let mut terms = Vec::new();
    for term in value.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(line.err(line.col(value), "empty relation term"));
        }
        let (coeff, path) = match term.split_once('*') {
            Some((c, p)) => (parse_int(line, c.trim(), "a coefficient")?, p.trim()),
            None => (1, term),
        };
        let path = path
            .split('.')
            .map(|a| arrow_index(line, arrows, a.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        terms.push((coeff, path));
    }
    Ok(Relation { terms })
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse(text: &str) -> Result<AlgebraDoc, ParseError> {
    let mut version = None;
    let mut field = None;
    let mut mode: Option<String> = None;
    let mut quiver = QuiverPresentation {
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
        nilpotency_bound: 0,
    };
    let mut bound = None;
    let mut table = TableDoc {
        dim: 0,
        labels: Vec::new(),
        products: Vec::new(),
        unit: Vec::new(),
        idempotents: Vec::new(),
    };
    let mut table_dim = None;
    let mut modules: Vec<ModuleDoc> = Vec::new();
    let mut section = Section::Header;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let line = Line {
            number: i + 1,
            text: raw,
        };
        if let Some(inner) = trimmed.strip_prefix('[') {
            let Some(inner) = inner.strip_suffix(']') else {
                return Err(line.err(line.col(trimmed), "unterminated section header"));
            };
            let words: Vec<&str> = inner.split_whitespace().collect();
            section = match words.as_slice() {
                ["quiver"] => Section::Quiver,
                ["table"] => Section::Table,
                ["module", name] if is_name(name) => {
                    if modules.iter().any(|m| m.name == *name) {
                        return Err(
                            line.err(line.col(name), format!("module `{name}` defined twice"))
                        );
                    }
                    modules.push(ModuleDoc {
                        name: name.to_string(),
                        def: ModuleDef::Sum(Vec::new()),
                    });
                    Section::Module(modules.len() - 1)
                }
                _ => {
                    return Err(line.err(line.col(trimmed), format!("unknown section `[{inner}]`")))
                }
            };
            continue;
        }
        let line = Line {
            number: i + 1,
            text: content,
        };
        let (key, value) = split_key_value(&line)?;
        let key_col = line.col(key);
        let words: Vec<&str> = key.split_whitespace().collect();
        match (&section, words.as_slice()) {
            (Section::Header, ["homdim-alg"]) => {
                let v: u32 = parse_int(&line, value, "a format version")?;
                if v != FORMAT_VERSION {
                    return Err(
                        line.err(line.col(value), format!("unsupported format version {v}"))
                    );
                }
                version = Some(v);
            }
            (Section::Header, ["field"]) => {
                field = Some(parse_int(&line, value, "a prime modulus")?)
            }
            (Section::Header, ["mode"]) => {
                if value != "quiver" && value != "table" {
                    return Err(line.err(line.col(value), "mode must be `quiver` or `table`"));
                }
                mode = Some(value.to_string());
            }
            (Section::Quiver, ["vertices"]) => {
                quiver.vertices = value.split_whitespace().map(String::from).collect();
                if let Some(bad) = value.split_whitespace().find(|v| !is_name(v)) {
                    return Err(line.err(line.col(bad), format!("invalid vertex name `{bad}`")));
                }
            }
            (Section::Quiver, ["arrow", name]) => {
                if !is_name(name) {
                    return Err(line.err(key_col, format!("invalid arrow name `{name}`")));
                }
                if quiver.arrows.iter().any(|a| a.name == *name) {
                    return Err(line.err(key_col, format!("arrow `{name}` defined twice")));
                }
                let Some((s, t)) = value.split_once("->") else {
                    return Err(line.err(line.col(value), "expected `source -> target`"));
                };
                let source = vertex_index(&line, &quiver.vertices, s.trim())?;
                let target = vertex_index(&line, &quiver.vertices, t.trim())?;
                quiver.arrows.push(Arrow {
                    name: name.to_string(),
                    source,
                    target,
                });
            }
            (Section::Quiver, ["relation"]) => {
                let rel = parse_relation(&line, &quiver.arrows, value)?;
                quiver.relations.push(rel);
            }
            (Section::Quiver, ["bound"]) => {
                bound = Some(parse_int(&line, value, "a nilpotency bound")?)
            }
            (Section::Table, ["dim"]) => table_dim = Some(parse_int(&line, value, "a dimension")?),
            (Section::Table, ["labels"]) => {
                table.labels = value.split_whitespace().map(String::from).collect()
            }
            (Section::Table, ["product"]) => {
                let v = parse_ints(&line, value)?;
                let &[a, b, c, x] = v.as_slice() else {
                    return Err(line.err(line.col(value), "expected `a b c coefficient`"));
                };
                let dim =
                    table_dim.ok_or_else(|| line.err(key_col, "`dim` must precede products"))?;
                if [a, b, c].iter().any(|&k| k < 0 || k as usize >= dim) {
                    return Err(line.err(
                        line.col(value),
                        format!("basis index out of range 0..{dim}"),
                    ));
                }
                table.products.push((a as usize, b as usize, c as usize, x));
            }
            (Section::Table, ["unit"]) => table.unit = parse_ints(&line, value)?,
            (Section::Table, ["idempotent"]) => table.idempotents.push(parse_ints(&line, value)?),
            (Section::Module(m), _) => {
                parse_module_line(&line, &mut modules[*m], &words, key_col, value, &quiver)?
            }
            _ => return Err(line.err(key_col, format!("unexpected key `{key}` here"))),
        }
    }

    let eof = |message: &str| ParseError {
        line: last_line.max(1),
        column: 1,
        message: message.into(),
    };
    let version = version.ok_or_else(|| eof("missing `homdim-alg` version line"))?;
    let field = field.ok_or_else(|| eof("missing `field`"))?;
    let body = match mode.as_deref() {
        Some("quiver") => {
            quiver.nilpotency_bound = bound.ok_or_else(|| eof("quiver section needs `bound`"))?;
            if quiver.vertices.is_empty() {
                return Err(eof("quiver section needs `vertices`"));
            }
            Body::Quiver(quiver)
        }
        Some("table") => {
            table.dim = table_dim.ok_or_else(|| eof("table section needs `dim`"))?;
            if table.labels.is_empty() {
                table.labels = (0..table.dim).map(|i| format!("b{i}")).collect();
            }
            if table.labels.len() != table.dim || table.unit.len() != table.dim {
                return Err(eof("labels and unit must have `dim` entries"));
            }
            if table.idempotents.iter().any(|e| e.len() != table.dim) {
                return Err(eof("idempotents must have `dim` entries"));
            }
            table.products.sort_unstable();
            Body::Table(table)
        }
        _ => return Err(eof("missing `mode`")),
    };
    for m in &mut modules {
        match &mut m.def {
            ModuleDef::Quiver { arrows, .. } => arrows.sort_by(|a, b| a.0.cmp(&b.0)),
            ModuleDef::Table { actions, .. } => actions.sort_by_key(|a| a.0),
            ModuleDef::Sum(parts) if parts.is_empty() => {
                return Err(eof(&format!("module `{}` has no definition", m.name)));
            }
            ModuleDef::Sum(_) => {}
        }
    }
    Ok(AlgebraDoc {
        version,
        field,
        body,
        modules,
    })
}

fn parse_module_line(
    line: &Line,
    module: &mut ModuleDoc,
    words: &[&str],
    key_col: usize,
    value: &str,
    quiver: &QuiverPresentation,
) -> Result<(), ParseError> {
    let conflict = || {
        line.err(
            key_col,
            format!("module `{}` mixes definition styles", module.name),
        )
    };
    let fresh = matches!(&module.def, ModuleDef::Sum(p) if p.is_empty());
    match words {
        ["sum"] => {
            if !fresh {
                return Err(conflict());
            }
            let parts: Vec<String> = value.split('+').map(|s| s.trim().to_string()).collect();
            if let Some(bad) = parts.iter().find(|p| !is_name(p)) {
                return Err(line.err(line.col(value), format!("invalid summand `{bad}`")));
            }
            module.def = ModuleDef::Sum(parts);
        }
        ["dims"] => {
            if !fresh {
                return Err(conflict());
            }
            let dims = value
                .split_whitespace()
                .map(|t| parse_int(line, t, "a dimension"))
                .collect::<Result<Vec<usize>, _>>()?;
            module.def = ModuleDef::Quiver {
                dims,
                arrows: Vec::new(),
            };
        }
        ["dim"] => {
            if !fresh {
                return Err(conflict());
            }
            module.def = ModuleDef::Table {
                dim: parse_int(line, value, "a dimension")?,
                actions: Vec::new(),
            };
        }
        ["arrow", name] => {
            let ModuleDef::Quiver { arrows, .. } = &mut module.def else {
                return Err(line.err(key_col, "`arrow` needs a preceding `dims`"));
            };
            arrow_index(line, &quiver.arrows, name).map_err(|e| ParseError {
                column: key_col,
                ..e
            })?;
            if arrows.iter().any(|(n, _)| n == name) {
                return Err(line.err(key_col, format!("arrow `{name}` given twice")));
            }
            arrows.push((name.to_string(), parse_matrix(line, value)?));
        }
        ["action", index] => {
            let ModuleDef::Table { actions, .. } = &mut module.def else {
                return Err(line.err(key_col, "`action` needs a preceding `dim`"));
            };
            let k: usize = parse_int(line, index, "a basis index")?;
            if actions.iter().any(|(i, _)| *i == k) {
                return Err(line.err(key_col, format!("action {k} given twice")));
            }
            actions.push((k, parse_matrix(line, value)?));
        }
        _ => {
            return Err(line.err(
                key_col,
                format!("unexpected key `{}` in module", words.join(" ")),
            ))
        }
    }
    Ok(())
}

fn write_matrix(out: &mut String, m: &IntMatrix) {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    out.push_str(&rows.join("; "));
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical text: fixed section order, sorted products and module entries.
pub fn serialize(doc: &AlgebraDoc) -> String {
    let mut out = String::new();
    writeln!(out, "homdim-alg = {}", doc.version).unwrap();
    writeln!(out, "field = {}", doc.field).unwrap();
    match &doc.body {
        Body::Quiver(q) => {
            out.push_str("mode = quiver\n\n[quiver]\n");
            writeln!(out, "vertices = {}", q.vertices.join(" ")).unwrap();
            for a in &q.arrows {
                writeln!(
                    out,
                    "arrow {} = {} -> {}",
                    a.name, q.vertices[a.source], q.vertices[a.target]
                )
                .unwrap();
            }
            for r in &q.relations {
                let terms: Vec<String> = r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        let path: Vec<&str> =
                            p.iter().map(|&a| q.arrows[a].name.as_str()).collect();
                        format!("{c}*{}", path.join("."))
                    })
                    .collect();
                writeln!(out, "relation = {}", terms.join(" + ")).unwrap();
            }
            writeln!(out, "bound = {}", q.nilpotency_bound).unwrap();
        }
        Body::Table(t) => {
            out.push_str("mode = table\n\n[table]\n");
            writeln!(out, "dim = {}", t.dim).unwrap();
            writeln!(out, "labels = {}", t.labels.join(" ")).unwrap();
            for (a, b, c, v) in &t.products {
                writeln!(out, "product = {a} {b} {c} {v}").unwrap();
            }
            writeln!(out, "unit = {}", join(&t.unit)).unwrap();
            for e in &t.idempotents {
                writeln!(out, "idempotent = {}", join(e)).unwrap();
            }
        }
    }
    for m in &doc.modules {
        writeln!(out, "\n[module {}]", m.name).unwrap();
        match &m.def {
            ModuleDef::Sum(parts) => writeln!(out, "sum = {}", parts.join(" + ")).unwrap(),
            ModuleDef::Quiver { dims, arrows } => {
                writeln!(out, "dims = {}", join(dims)).unwrap();
                for (name, mat) in arrows {
                    write!(out, "arrow {name} = ").unwrap();
                    write_matrix(&mut out, mat);
                    out.push('\n');
                }
            }
            ModuleDef::Table { dim, actions } => {
                writeln!(out, "dim = {dim}").unwrap();
                for (k, mat) in actions {
                    write!(out, "action {k} = ").unwrap();
                    write_matrix(&mut out, mat);
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// SHA-256 of the canonical serialization.
pub fn content_hash(doc: &AlgebraDoc) -> String {
    hex::encode(Sha256::digest(serialize(doc).as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const AUS: &str = "homdim-alg = 1\nfield = 32003\nmode = quiver\n[quiver]\nvertices = 1 2\n\
        arrow alpha = 1 -> 2\narrow beta = 2 -> 1\nrelation = beta.alpha\nbound = 2\n";

    #[test]
    fn parses_a_quiver() {
        let doc = parse(AUS).unwrap();
        let Body::Quiver(q) = &doc.body else { panic!() };
        assert_eq!(q.arrows.len(), 2);
        assert_eq!(q.relations[0].terms, vec![(1, vec![1, 0])]);
        assert_eq!(q.nilpotency_bound, 2);
    }

    #[test]
    fn reports_line_and_column() {
        let text = AUS.replace("arrow beta = 2 -> 1", "arrow beta = 2 -> 3");
        let err = parse(&text).unwrap_err();
        assert_eq!((err.line, err.column), (7, 19));
        assert!(err.message.contains("unknown vertex `3`"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!(
            "# header\n\n{}",
            AUS.replace("bound = 2", "bound = 2   # longest path")
        );
        assert_eq!(parse(&text).unwrap(), parse(AUS).unwrap());
    }
}
