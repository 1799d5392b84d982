//! The `homdim` command line.
//!
//! Every command prints one or more `RESULTS` blocks of `key = value` lines
//! followed, unless `--machine` is given, by a short human summary.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use homdim::homology::{
    dominant_dimension, endomorphism_algebra, ext_dims, gen_cogen, is_self_injective,
    min_add_approximation, nakayama_hom, nakayama_tensor, self_orthogonal,
};
use homdim::module::{is_isomorphic, ISO_TRIALS};
use homdim::theorems::{self, format_dims, CheckReport, Verdict, CHECK_IDS, DEFAULT_BUDGET};
use homdim::{Algebra, Extension, Module, Standard};
use sha2::{Digest, Sha256};

use crate::cache::{Cache, InvariantRecord, Lookup, ENGINE_VERSION};
use crate::corpus::{self, ENTRIES, TENSOR_PAIRS};
use crate::format;
use crate::load::Loaded;
use crate::CatalogError;

/// Largest module dimension covered by the bar-oracle sweep.
pub const SWEEP_MAX_DIM: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "homdim",
    version,
    about = "Homological invariants of finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Highest degree checked by statements quantified over all n >= 1.
    #[arg(long, global = true, default_value_t = 6)]
    cutoff: usize,

    /// Prime modulus; overrides the field of the input file.
    #[arg(long, global = true)]
    field: Option<u32>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Random trials for module isomorphism searches.
    #[arg(long, global = true, default_value_t = ISO_TRIALS)]
    trials: usize,

    /// Largest dimension of a constructed enveloping or tensor algebra.
    #[arg(long = "budget-dim", global = true, default_value_t = 64)]
    budget_dim: usize,

    /// Highest degree of the bar-resolution oracle.
    #[arg(long = "bar-degree", global = true, default_value_t = 3)]
    bar_degree: usize,

    /// Cochain budget of the bar-resolution oracle.
    #[arg(long = "bar-budget", global = true, default_value_t = DEFAULT_BUDGET)]
    bar_budget: usize,

    /// Directory of the invariant cache.
    #[arg(long, global = true, env = "HOMDIM_CATALOG")]
    catalog: Option<PathBuf>,

    #[arg(long = "no-cache", global = true)]
    no_cache: bool,

    /// Suppress the human summary.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis, radical, dominant dimension and predicates of k ⊆ A.
    Inspect { algebra: String },
    /// Dominant dimension with its coresolution evidence.
    Domdim { algebra: String },
    /// dim Ext^n(M, N) for n = 0..=cutoff.
    Ext {
        algebra: String,
        m: String,
        n: String,
    },
    /// Whether Ext^n(M, M) = 0 for 1 <= n <= cutoff.
    Selforth { algebra: String, module: String },
    /// Whether M is a generator-cogenerator.
    Gencogen { algebra: String, module: String },
    /// The Nakayama functor by two routes.
    Nakayama { algebra: String, module: String },
    /// The endomorphism algebra of a declared direct sum.
    Endo { algebra: String, module: String },
    /// Minimal right add(M)-approximation of X.
    Approx {
        algebra: String,
        module: String,
        target: String,
    },
    /// Tensor product of two algebras.
    Tensor { left: String, right: String },
    /// Runs one named check.
    Verify {
        check: String,
        #[arg(long = "algebra")]
        algebras: Vec<String>,
        /// `NAME=EXPR` or `EXPR`, where EXPR is `a+b+...`.
        #[arg(long = "module")]
        modules: Vec<String>,
    },
    /// Lists the built-in corpus or runs every check on it.
    Corpus {
        #[command(subcommand)]
        action: Option<CorpusAction>,
    },
    /// Inspects or clears the invariant cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    List,
    Run,
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    Stats,
    Clear,
}

/// Captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

type Payload = Vec<(String, String)>;

struct Block {
    command: String,
    input: String,
    modulus: u32,
    payload: Payload,
}

impl Block {
    fn render(&self, cli: &Cli) -> String {
        let mut s = String::from("RESULTS\n");
        let header = [
            ("engine", ENGINE_VERSION.to_string()),
            ("command", self.command.clone()),
            ("input", self.input.clone()),
            ("modulus", self.modulus.to_string()),
            ("seed", cli.seed.to_string()),
            ("cutoff", cli.cutoff.to_string()),
        ];
        for (k, v) in header
            .iter()
            .map(|(k, v)| (*k, v.as_str()))
            .chain(self.pairs())
        {
            s.push_str(&format!("{k} = {v}\n"));
        }
        s
    }

    fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.payload.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.pairs().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    cache: Option<Cache>,
    warnings: RefCell<Vec<String>>,
}

fn kv(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0]);
    }
    hex::encode(h.finalize())
}

fn short(hash: &str) -> &str {
    &hash[..hash.len().min(16)]
}

impl Ctx<'_> {
    fn modulus(&self, doc: &format::AlgebraDoc) -> u32 {
        self.cli.field.unwrap_or(doc.field)
    }

    /// Resolves an existing file path, or else a corpus entry name.
    fn algebra(&self, arg: &str) -> Result<Loaded, CatalogError> {
        let path = Path::new(arg);
        if path.is_file() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CatalogError::Input(format!("{arg}: {e}")))?;
            let doc = format::parse(&text)?;
            let name = path
                .file_stem()
                .map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
            let modulus = self.modulus(&doc);
            return Loaded::new(&name, doc, modulus);
        }
        let name = arg.strip_suffix(".alg").unwrap_or(arg);
        let entry = corpus::entry(name).ok_or_else(|| {
            CatalogError::Input(format!("`{arg}` is neither a file nor a corpus entry"))
        })?;
        let doc = format::parse(entry.text)?;
        let modulus = self.modulus(&doc);
        Loaded::new(name, doc, modulus)
    }

    /// Looks the payload up in the cache, computing and storing it on a miss.
    fn memo(
        &self,
        input: &str,
        name: &str,
        modulus: u32,
        compute: impl FnOnce() -> Result<Payload, CatalogError>,
    ) -> Result<Payload, CatalogError> {
        let mut rec = InvariantRecord::new(input, name, self.cli.cutoff, modulus, self.cli.seed);
        if let Some(cache) = &self.cache {
            match cache.lookup(&rec) {
                Lookup::Hit(hit) => return Ok(hit.payload),
                Lookup::Corrupt(key) => self
                    .warnings
                    .borrow_mut()
                    .push(format!("warning: ignoring corrupt cache record {key}")),
                Lookup::Miss => {}
            }
        }
        rec.payload = compute()?;
        if let Some(cache) = &self.cache {
            cache.put(&rec)?;
        }
        Ok(rec.payload)
    }

    fn block(
        &self,
        command: &str,
        input: String,
        loaded: &Loaded,
        args: &[&str],
        compute: impl FnOnce() -> Result<Payload, CatalogError>,
    ) -> Result<Block, CatalogError> {
        let modulus = loaded.algebra.field().modulus();
        let mut parts = vec![loaded.hash.as_str(), command];
        parts.extend_from_slice(args);
        let key = digest(&parts);
        let payload = self.memo(&key, command, modulus, compute)?;
        Ok(Block {
            command: command.to_string(),
            input,
            modulus,
            payload,
        })
    }
}

fn report_payload(r: &CheckReport) -> Payload {
    let mut p = vec![
        kv("check", &r.check),
        kv("verdict", r.verdict),
        kv(
            "inputs",
            r.inputs
                .iter()
                .map(|h| short(h))
                .collect::<Vec<_>>()
                .join(","),
        ),
    ];
    p.extend(r.witness.iter().cloned());
    p
}

fn skipped(check: &str, reason: &str) -> Payload {
    vec![
        kv("check", check),
        kv("verdict", Verdict::Skipped),
        kv("reason", reason),
    ]
}

/// Checks whose hypotheses fail on an input report `skipped` instead of
/// an error inside `corpus run`.
fn or_skipped(check: &str, r: homdim::Result<CheckReport>) -> Result<Payload, CatalogError> {
    match r {
        Ok(r) => Ok(report_payload(&r)),
        Err(homdim::Error::Precondition(m)) => Ok(skipped(check, &m)),
        Err(e @ homdim::Error::NonBasicEndomorphism(..)) => Ok(skipped(check, &e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn vertex_labels(a: &Algebra) -> String {
    (0..a.vertex_count())
        .map(|i| a.vertex_label(i))
        .collect::<Vec<_>>()
        .join(" ")
}

fn domdim_payload(a: &Arc<Algebra>, cutoff: usize) -> Result<Payload, CatalogError> {
    let ev = dominant_dimension(a, cutoff)?;
    let terms = ev
        .terms
        .iter()
        .map(|t| {
            if t.is_empty() {
                "0".to_string()
            } else {
                t.iter()
                    .map(|&v| format!("I{}", a.vertex_label(v)))
                    .collect::<Vec<_>>()
                    .join("+")
            }
        })
        .collect::<Vec<_>>()
        .join(" ; ");
    Ok(vec![
        kv("value", ev.value),
        kv("self_injective", ev.self_injective),
        kv(
            "terms",
            if terms.is_empty() {
                "none".into()
            } else {
                terms
            },
        ),
    ])
}

/// Standard modules followed by the document's named modules, without
/// repeats.
pub fn corpus_modules(loaded: &Loaded) -> Result<Vec<(String, Module)>, CatalogError> {
    let a = &loaded.algebra;
    let std = Standard::of(a)?;
    let mut out: Vec<(String, Module)> = Vec::new();
    for i in 0..std.vertex_count() {
        let v = a.vertex_label(i);
        let v = if std.vertex_count() == 1 {
            String::new()
        } else {
            v
        };
        out.push((format!("P{v}"), std.projective(i)));
        out.push((format!("I{v}"), std.injective(i)));
        out.push((format!("S{v}"), std.simple(i)));
    }
    out.push(("regular".into(), std.regular()));
    out.push(("dual".into(), std.dual_regular()));
    for name in loaded.module_names() {
        out.push((name.clone(), loaded.module(&name)?.module));
    }
    let mut seen = BTreeSet::new();
    out.retain(|(_, m)| seen.insert(m.fingerprint()));
    Ok(out)
}

fn sum_modules(loaded: &Loaded) -> Vec<String> {
    loaded
        .doc
        .modules
        .iter()
        .filter(|m| matches!(m.def, format::ModuleDef::Sum(_)))
        .map(|m| m.name.clone())
        .collect()
}

fn split_named(arg: &str) -> (String, String) {
    match arg.split_once('=') {
        Some((n, e)) => (n.trim().to_string(), e.trim().to_string()),
        None => (arg.trim().to_string(), arg.trim().to_string()),
    }
}

fn execute(ctx: &Ctx, cmd: &Command) -> Result<(Vec<Block>, Vec<String>), CatalogError> {
    let cli = ctx.cli;
    let cutoff = cli.cutoff;
    let seed = cli.seed;
    let one = |b: Block, line: String| Ok((vec![b], vec![line]));
    match cmd {
        Command::Inspect { algebra } => {
            let l = ctx.algebra(algebra)?;
            let b = ctx.block("inspect", l.name.clone(), &l, &[], || {
                let a = &l.algebra;
                let mut p = vec![
                    kv("name", &l.name),
                    kv("hash", &l.hash),
                    kv("dim", a.dim()),
                    kv("vertices", vertex_labels(a)),
                    kv("basis", a.labels().join(" ")),
                    kv("radical_dim", a.radical()?.cols()),
                    kv("self_injective", is_self_injective(a)?),
                    kv("domdim", dominant_dimension(a, cutoff)?.value),
                ];
                let mods: Vec<String> = l
                    .module_names()
                    .iter()
                    .map(|n| Ok(format!("{n}:{}", l.module(n)?.module.dim())))
                    .collect::<Result<_, CatalogError>>()?;
                p.push(kv(
                    "modules",
                    if mods.is_empty() {
                        "none".into()
                    } else {
                        mods.join(",")
                    },
                ));
                let pred = Extension::scalars(a.clone()).predicates(seed)?;
                p.push(kv("scalars.frobenius", pred.frobenius));
                p.push(kv("scalars.separable", pred.separable));
                p.push(kv("scalars.split", pred.split));
                p.push(kv("scalars.projective", pred.projective_over_sub));
                p.push(kv("scalars.iso_trials", pred.iso_trials));
                p.push(kv(
                    "scalars.iso_error_bound",
                    format!("{:e}", pred.iso_error_bound),
                ));
                Ok(p)
            })?;
            let line = format!(
                "{}: dim {}, dominant dimension {}",
                l.name,
                b.get("dim").unwrap_or("?"),
                b.get("domdim").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Domdim { algebra } => {
            let l = ctx.algebra(algebra)?;
            let b = ctx.block("domdim", l.name.clone(), &l, &[], || {
                domdim_payload(&l.algebra, cutoff)
            })?;
            let line = format!(
                "dominant dimension of {}: {}",
                l.name,
                b.get("value").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Ext { algebra, m, n } => {
            let l = ctx.algebra(algebra)?;
            let (mm, nn) = (l.module(m)?, l.module(n)?);
            let input = format!("{} {m} {n}", l.name);
            let b = ctx.block("ext", input, &l, &[m, n], || {
                let t = ext_dims(&mm.module, &nn.module, cutoff)?;
                let first = t.first_nonzero_positive();
                Ok(vec![
                    kv("dims", format_dims(&t.dims)),
                    kv(
                        "first_nonzero",
                        first.map_or("none".into(), |d| d.to_string()),
                    ),
                ])
            })?;
            let line = format!(
                "dim Ext^n({m}, {n}), n = 0..{cutoff}: {}",
                b.get("dims").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Selforth { algebra, module } => {
            let l = ctx.algebra(algebra)?;
            let m = l.module(module)?;
            let b = ctx.block(
                "selforth",
                format!("{} {module}", l.name),
                &l,
                &[module],
                || {
                    let (ok, first) = self_orthogonal(&m.module, cutoff)?;
                    Ok(vec![
                        kv("value", ok),
                        kv(
                            "first_failure",
                            first.map_or("none".into(), |d| d.to_string()),
                        ),
                    ])
                },
            )?;
            let line = format!(
                "{module} self-orthogonal up to {cutoff}: {}",
                b.get("value").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Gencogen { algebra, module } => {
            let l = ctx.algebra(algebra)?;
            let m = l.module(module)?;
            let b = ctx.block(
                "gencogen",
                format!("{} {module}", l.name),
                &l,
                &[module],
                || Ok(vec![kv("value", gen_cogen(&m.module)?)]),
            )?;
            let line = format!(
                "{module} generator-cogenerator: {}",
                b.get("value").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Nakayama { algebra, module } => {
            let l = ctx.algebra(algebra)?;
            let m = l.module(module)?;
            let trials = cli.trials.to_string();
            let b = ctx.block(
                "nakayama",
                format!("{} {module}", l.name),
                &l,
                &[module, &trials],
                || {
                    let t = nakayama_tensor(&m.module)?;
                    let h = nakayama_hom(&m.module)?;
                    let iso = is_isomorphic(&t, &h, seed, cli.trials)?;
                    let dims = t
                        .vertex_dims()
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    Ok(vec![
                        kv("dim", t.dim()),
                        kv("vertex_dims", dims),
                        kv("hom_route_dim", h.dim()),
                        kv("routes_agree", iso.isomorphic),
                        kv("iso_trials", iso.trials),
                        kv("iso_error_bound", format!("{:e}", iso.error_bound)),
                    ])
                },
            )?;
            let line = format!(
                "nu({module}) has dim {}; routes agree: {}",
                b.get("dim").unwrap_or("?"),
                b.get("routes_agree").unwrap_or("?")
            );
            if b.get("routes_agree") == Some("false") {
                return Err(CatalogError::Engine(homdim::Error::Internal(
                    "Nakayama routes disagree".into(),
                )));
            }
            one(b, line)
        }
        Command::Endo { algebra, module } => {
            let l = ctx.algebra(algebra)?;
            let m = l.module(module)?;
            let b = ctx.block(
                "endo",
                format!("{} {module}", l.name),
                &l,
                &[module],
                || {
                    let end = endomorphism_algebra(&m.summands, seed)?;
                    let e = &end.algebra;
                    Ok(vec![
                        kv("summands", m.summand_names.join("+")),
                        kv("dim", e.dim()),
                        kv("vertices", e.vertex_count()),
                        kv("radical_dim", e.radical()?.cols()),
                        kv("self_injective", is_self_injective(e)?),
                        kv("domdim", dominant_dimension(e, cutoff)?.value),
                        kv("hash", short(&e.fingerprint())),
                    ])
                },
            )?;
            let line = format!(
                "End({module}) has dim {} and dominant dimension {}",
                b.get("dim").unwrap_or("?"),
                b.get("domdim").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Approx {
            algebra,
            module,
            target,
        } => {
            let l = ctx.algebra(algebra)?;
            let (m, x) = (l.module(module)?, l.module(target)?);
            let input = format!("{} {module} {target}", l.name);
            let b = ctx.block("approx", input, &l, &[module, target], || {
                let ap = min_add_approximation(&m.module, &x.module)?;
                Ok(vec![
                    kv("copies", ap.copies),
                    kv("source_dim", ap.map.source().dim()),
                    kv("target_dim", x.module.dim()),
                    kv("rank", ap.map.rank()),
                    kv("surjective", ap.map.is_surjective()),
                ])
            })?;
            let line = format!(
                "minimal approximation uses {} copies of {module}",
                b.get("copies").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Tensor { left, right } => {
            let (la, lb) = (ctx.algebra(left)?, ctx.algebra(right)?);
            same_modulus(&la, &lb)?;
            let dim = la.algebra.dim() * lb.algebra.dim();
            if dim > cli.budget_dim {
                return Err(homdim::Error::Budget(format!(
                    "tensor product has dim {dim} > {}",
                    cli.budget_dim
                ))
                .into());
            }
            let input = format!("{} {}", la.name, lb.name);
            let b = ctx.block("tensor", input, &la, &[&lb.hash], || {
                let c = la.algebra.tensor_product(&lb.algebra);
                Ok(vec![
                    kv("dim", c.dim()),
                    kv("vertices", c.vertex_count()),
                    kv("self_injective", is_self_injective(&c)?),
                    kv("domdim", dominant_dimension(&c, cutoff)?.value),
                    kv(
                        "ext_dual_regular",
                        format_dims(&theorems::ext_dual_regular(&c, cutoff)?),
                    ),
                    kv("hash", short(&c.fingerprint())),
                ])
            })?;
            let line = format!(
                "{} ⊗ {} has dim {} and dominant dimension {}",
                la.name,
                lb.name,
                b.get("dim").unwrap_or("?"),
                b.get("domdim").unwrap_or("?")
            );
            one(b, line)
        }
        Command::Verify {
            check,
            algebras,
            modules,
        } => {
            let b = verify(ctx, check, algebras, modules)?;
            let line = format!("{check}: {}", b.get("verdict").unwrap_or("?"));
            one(b, line)
        }
        Command::Corpus { action } => match action {
            None | Some(CorpusAction::List) => corpus_list(ctx),
            Some(CorpusAction::Run) => corpus_run(ctx),
        },
        Command::Cache { action } => {
            let cache = ctx.cache.as_ref().ok_or_else(|| {
                CatalogError::Input(
                    "no catalog directory: pass --catalog or set HOMDIM_CATALOG".into(),
                )
            })?;
            let payload = match action {
                CacheAction::Stats => {
                    let (total, current) = cache.stats()?;
                    vec![
                        kv("records", total),
                        kv("current", current),
                        kv("stale", total - current),
                    ]
                }
                CacheAction::Clear => vec![kv("removed", cache.clear()?)],
            };
            let b = Block {
                command: format!(
                    "cache {}",
                    if matches!(action, CacheAction::Stats) {
                        "stats"
                    } else {
                        "clear"
                    }
                ),
                input: cache.dir().display().to_string(),
                modulus: cli.field.unwrap_or(homdim::field::DEFAULT_MODULUS),
                payload,
            };
            let line = format!("cache at {}", cache.dir().display());
            one(b, line)
        }
    }
}

fn same_modulus(a: &Loaded, b: &Loaded) -> Result<(), CatalogError> {
    if a.algebra.field() != b.algebra.field() {
        return Err(CatalogError::Input(
            "algebras are over different fields".into(),
        ));
    }
    Ok(())
}

fn verify(
    ctx: &Ctx,
    check: &str,
    algebras: &[String],
    modules: &[String],
) -> Result<Block, CatalogError> {
    let cli = ctx.cli;
    let (cutoff, seed) = (cli.cutoff, cli.seed);
    if !CHECK_IDS.contains(&check) {
        return Err(CatalogError::Input(format!(
            "unknown check `{check}`; expected one of {}",
            CHECK_IDS.join(", ")
        )));
    }
    let want = if check == "kunneth" { 2 } else { 1 };
    if algebras.len() != want {
        return Err(CatalogError::Input(format!(
            "`{check}` takes {want} --algebra argument(s)"
        )));
    }
    let loaded = algebras
        .iter()
        .map(|a| ctx.algebra(a))
        .collect::<Result<Vec<_>, _>>()?;
    let l = &loaded[0];
    let named: Vec<(String, String)> = modules.iter().map(|m| split_named(m)).collect();
    let mut args: Vec<&str> = vec![check];
    for (n, e) in &named {
        args.push(n);
        args.push(e);
    }
    let hashes: Vec<&str> = loaded.iter().map(|x| x.hash.as_str()).collect();
    args.extend(&hashes[1..]);
    let bar_degree = cli.bar_degree.to_string();
    let bar_budget = cli.bar_budget.to_string();
    let budget_dim = cli.budget_dim.to_string();
    args.extend([
        bar_degree.as_str(),
        bar_budget.as_str(),
        budget_dim.as_str(),
    ]);
    let input = std::iter::once(
        loaded
            .iter()
            .map(|x| x.name.as_str())
            .collect::<Vec<_>>()
            .join(" "),
    )
    .chain(modules.iter().cloned())
    .collect::<Vec<_>>()
    .join(" ");
    let resolve = || -> Result<Vec<(String, Module)>, CatalogError> {
        if named.is_empty() {
            return corpus_modules(l);
        }
        named
            .iter()
            .map(|(n, e)| Ok((n.clone(), l.module(e)?.module)))
            .collect()
    };
    let single = || -> Result<crate::NamedModule, CatalogError> {
        match named.as_slice() {
            [(_, e)] => l.module(e),
            _ => Err(CatalogError::Input(format!(
                "`{check}` takes exactly one --module"
            ))),
        }
    };
    ctx.block("verify", input, l, &args, || {
        let a = &l.algebra;
        let r = match check {
            "muller" => theorems::muller_check(&single()?.summands, cutoff, seed)?,
            "wg-lemma" => theorems::wg_lemma_check(&single()?.summands, cutoff, seed)?,
            "remark32" => theorems::remark32_check(a, cutoff, cli.budget_dim)?,
            "kunneth" => {
                same_modulus(l, &loaded[1])?;
                theorems::kunneth_check(a, &loaded[1].algebra, cutoff, cli.budget_dim)?
            }
            "diamond" => theorems::diamond(a, cutoff)?,
            "nc-scan" => theorems::nc_evidence_scan(a, cutoff)?,
            "thick-shadow" => theorems::thick_shadow_check(a, &resolve()?, cutoff)?,
            "bar-oracle" => match named.as_slice() {
                [(_, m), (_, n)] => theorems::bar_oracle_check(
                    &l.module(m)?.module,
                    &l.module(n)?.module,
                    cli.bar_degree,
                    cli.bar_budget,
                )?,
                _ => theorems::bar_oracle_sweep(
                    &resolve()?,
                    SWEEP_MAX_DIM,
                    cli.bar_degree,
                    cli.bar_budget,
                )?,
            },
            _ => unreachable!(),
        };
        Ok(report_payload(&r))
    })
}

fn corpus_list(ctx: &Ctx) -> Result<(Vec<Block>, Vec<String>), CatalogError> {
    let mut payload = Vec::new();
    let mut modulus = ctx.cli.field.unwrap_or(homdim::field::DEFAULT_MODULUS);
    for e in ENTRIES.iter() {
        let l = ctx.algebra(e.name)?;
        modulus = l.algebra.field().modulus();
        let a = &l.algebra;
        payload.push(kv(&format!("{}.dim", e.name), a.dim()));
        payload.push(kv(&format!("{}.vertices", e.name), a.vertex_count()));
        payload.push(kv(
            &format!("{}.modules", e.name),
            l.module_names().join(","),
        ));
        payload.push(kv(&format!("{}.hash", e.name), short(&l.hash)));
    }
    let b = Block {
        command: "corpus list".into(),
        input: "corpus".into(),
        modulus,
        payload,
    };
    Ok((vec![b], vec![format!("{} corpus entries", ENTRIES.len())]))
}

fn corpus_run(ctx: &Ctx) -> Result<(Vec<Block>, Vec<String>), CatalogError> {
    let cli = ctx.cli;
    let (cutoff, seed) = (cli.cutoff, cli.seed);
    let mut blocks = Vec::new();
    let cfg = format!("{} {} {}", cli.bar_degree, cli.bar_budget, cli.budget_dim);
    for e in ENTRIES.iter() {
        let l = ctx.algebra(e.name)?;
        let a = &l.algebra;
        let modules = corpus_modules(&l)?;
        let mut run =
            |check: &str,
             label: String,
             compute: &mut dyn FnMut() -> Result<Payload, CatalogError>| {
                let b = ctx.block(
                    "corpus run",
                    format!("{} {check} {label}", e.name),
                    &l,
                    &[check, &label, &cfg],
                    compute,
                )?;
                blocks.push(b);
                Ok::<(), CatalogError>(())
            };
        run("diamond", "-".into(), &mut || {
            Ok(report_payload(&theorems::diamond(a, cutoff)?))
        })?;
        run("nc-scan", "-".into(), &mut || {
            Ok(report_payload(&theorems::nc_evidence_scan(a, cutoff)?))
        })?;
        run("remark32", "-".into(), &mut || {
            Ok(report_payload(&theorems::remark32_check(
                a,
                cutoff,
                cli.budget_dim,
            )?))
        })?;
        run("thick-shadow", "-".into(), &mut || {
            Ok(report_payload(&theorems::thick_shadow_check(
                a, &modules, cutoff,
            )?))
        })?;
        run("bar-oracle", "-".into(), &mut || {
            let r = theorems::bar_oracle_sweep(
                &modules,
                SWEEP_MAX_DIM,
                cli.bar_degree,
                cli.bar_budget,
            )?;
            Ok(report_payload(&r))
        })?;
        for name in sum_modules(&l) {
            let m = l.module(&name)?;
            run("muller", name.clone(), &mut || {
                or_skipped("muller", theorems::muller_check(&m.summands, cutoff, seed))
            })?;
            run("wg-lemma", name.clone(), &mut || {
                or_skipped(
                    "wg-lemma",
                    theorems::wg_lemma_check(&m.summands, cutoff, seed),
                )
            })?;
        }
    }
    for (x, y) in TENSOR_PAIRS {
        let (lx, ly) = (ctx.algebra(x)?, ctx.algebra(y)?);
        let b = ctx.block(
            "corpus run",
            format!("{x}*{y} kunneth -"),
            &lx,
            &["kunneth", &ly.hash, &cfg],
            || {
                Ok(report_payload(&theorems::kunneth_check(
                    &lx.algebra,
                    &ly.algebra,
                    cutoff,
                    cli.budget_dim,
                )?))
            },
        )?;
        blocks.push(b);
    }
    let mut counts = [0usize; 4];
    for b in &blocks {
        let i = match b.get("verdict") {
            Some("pass") => 0,
            Some("fail") => 1,
            Some("inconclusive") => 2,
            _ => 3,
        };
        counts[i] += 1;
    }
    let mut lines = vec![format!(
        "{} checks: {} pass, {} fail, {} inconclusive, {} skipped",
        blocks.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    )];
    for b in blocks.iter().filter(|b| b.get("verdict") == Some("fail")) {
        lines.push(format!("failed: {}", b.input));
    }
    Ok((blocks, lines))
}

fn open_cache(cli: &Cli) -> Result<Option<Cache>, CatalogError> {
    match (&cli.catalog, cli.no_cache) {
        (Some(dir), false) => Cache::open(dir).map(Some),
        _ => Ok(None),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let warnings = RefCell::new(Vec::new());
    let result = open_cache(&cli).and_then(|cache| {
        let ctx = Ctx {
            cli: &cli,
            cache,
            warnings: RefCell::new(Vec::new()),
        };
        let out = execute(&ctx, &cli.command);
        warnings.replace(ctx.warnings.take());
        out
    });
    let mut stderr: String = warnings.take().iter().map(|w| format!("{w}\n")).collect();
    match result {
        Ok((blocks, lines)) => {
            let mut stdout = blocks
                .iter()
                .map(|b| b.render(&cli))
                .collect::<Vec<_>>()
                .join("\n");
            if !cli.machine {
                stdout.push('\n');
                for l in lines {
                    stdout.push_str(&l);
                    stdout.push('\n');
                }
            }
            let failed = blocks.iter().any(|b| b.get("verdict") == Some("fail"));
            Output {
                stdout,
                stderr,
                code: if failed { 1 } else { 0 },
            }
        }
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Output {
                stdout: String::new(),
                stderr,
                code: e.exit_code(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_module_arguments() {
        assert_eq!(split_named("M=regular+S"), ("M".into(), "regular+S".into()));
        assert_eq!(split_named("S1"), ("S1".into(), "S1".into()));
    }

    #[test]
    fn digests_separate_their_parts() {
        assert_ne!(digest(&["ab", "c"]), digest(&["a", "bc"]));
        assert_eq!(short(&digest(&["x"])).len(), 16);
    }

    #[test]
    fn blocks_render_header_then_payload() {
        let cli = Cli::try_parse_from(["homdim", "domdim", "k2"]).unwrap();
        let b = Block {
            command: "domdim".into(),
            input: "k2".into(),
            modulus: 32003,
            payload: vec![kv("value", "1")],
        };
        let text = b.render(&cli);
        let keys: Vec<&str> = text
            .lines()
            .skip(1)
            .map(|l| l.split(" = ").next().unwrap())
            .collect();
        assert_eq!(
            keys,
            ["engine", "command", "input", "modulus", "seed", "cutoff", "value"]
        );
        assert_eq!(b.get("value"), Some("1"));
    }

    #[test]
    fn help_is_not_an_error() {
        let out = run(["homdim", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("corpus"));
    }
}
