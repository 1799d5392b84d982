//! Finite checks of homological statements about dominant dimension.
//!
//! Every check compares dimensions of Ext groups computed over a prime field.
//! Statements quantified over all `n >= 1` are checked for `1 <= n <= cutoff`.

mod bar;

use std::fmt;
use std::sync::Arc;

pub use bar::{bar_ext_oracle, DEFAULT_BUDGET};

use crate::algebra::{enveloping, Algebra};
use crate::homology::{
    dominant_dimension, endomorphism_algebra, ext_dims, gen_cogen, id_bounded, is_self_injective,
    nakayama_tensor, pd_bounded, DomDim,
};
use crate::module::{Module, Standard};
use crate::{Error, Result};

/// Stable check identifiers.
pub const CHECK_IDS: [&str; 8] = [
    "muller",
    "wg-lemma",
    "remark32",
    "kunneth",
    "diamond",
    "nc-scan",
    "thick-shadow",
    "bar-oracle",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// The claim is limited by the cutoff.
    Inconclusive,
    /// A hypothesis of the statement does not hold for the input.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    /// Content hashes of the inputs.
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    /// Ordered `key = value` evidence.
    pub witness: Vec<(String, String)>,
    pub cutoff: usize,
}

impl CheckReport {
    fn new(check: &str, inputs: Vec<String>, cutoff: usize) -> Self {
        CheckReport {
            check: check.into(),
            inputs,
            verdict: Verdict::Pass,
            witness: Vec::new(),
            cutoff,
        }
    }

    fn note(&mut self, key: &str, value: impl fmt::Display) {
        self.witness.push((key.into(), value.to_string()));
    }

    fn fail(&mut self, key: &str, value: impl fmt::Display) {
        self.verdict = Verdict::Fail;
        self.note(key, value);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.witness
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

/// Comma-separated dimension list.
pub fn format_dims(dims: &[usize]) -> String {
    dims.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn first_mismatch(a: &[usize], b: &[usize], from: usize) -> Option<usize> {
    (from..a.len().min(b.len())).find(|&i| a[i] != b[i])
}

/// `dim Ext^n(D(A), A)` for `n = 0..=cutoff`.
pub fn ext_dual_regular(a: &Arc<Algebra>, cutoff: usize) -> Result<Vec<usize>> {
    let std = Standard::of(a)?;
    Ok(ext_dims(&std.dual_regular(), &std.regular(), cutoff)?.dims)
}

fn module_sum(summands: &[Module]) -> Result<Module> {
    let parts: Vec<&Module> = summands.iter().collect();
    Module::direct_sum(&parts)
}

fn require_gen_cogen(m: &Module) -> Result<()> {
    if gen_cogen(m)? {
        Ok(())
    } else {
        Err(Error::Precondition(
            "module is not a generator-cogenerator".into(),
        ))
    }
}

fn module_inputs(m: &Module) -> Vec<String> {
    vec![m.algebra().fingerprint(), m.fingerprint()]
}

/// Compares minimal-resolution Ext with the bar-resolution oracle.
pub fn bar_oracle_check(
    m: &Module,
    n: &Module,
    cutoff: usize,
    budget: usize,
) -> Result<CheckReport> {
    let mut r = CheckReport::new(
        "bar-oracle",
        vec![m.algebra().fingerprint(), m.fingerprint(), n.fingerprint()],
        cutoff,
    );
    let minimal = ext_dims(m, n, cutoff)?.dims;
    let bar = bar_ext_oracle(m, n, cutoff, budget)?.dims;
    r.note("ext_minimal", format_dims(&minimal));
    r.note("ext_bar", format_dims(&bar));
    if let Some(i) = first_mismatch(&minimal, &bar, 0) {
        r.fail("first_mismatch", i);
    }
    Ok(r)
}

/// Runs [`bar_oracle_check`] on every ordered pair of `modules` of
/// dimension at most `max_dim`.
pub fn bar_oracle_sweep(
    modules: &[(String, Module)],
    max_dim: usize,
    cutoff: usize,
    budget: usize,
) -> Result<CheckReport> {
    let small: Vec<&(String, Module)> =
        modules.iter().filter(|(_, m)| m.dim() <= max_dim).collect();
    let inputs = small.iter().map(|(_, m)| m.fingerprint()).collect();
    let mut r = CheckReport::new("bar-oracle", inputs, cutoff);
    for (a, m) in &small {
        for (b, n) in &small {
            let pair = bar_oracle_check(m, n, cutoff, budget)?;
            if !pair.passed() {
                let dims = format!(
                    "{} vs {}",
                    pair.get("ext_minimal").unwrap(),
                    pair.get("ext_bar").unwrap()
                );
                r.fail(&format!("mismatch[{a},{b}]"), dims);
            }
        }
    }
    r.note("modules", small.len());
    r.note("pairs", small.len() * small.len());
    Ok(r)
}

/// The dominant dimension of `End(M)` is `e + 1` for the first `e >= 1`
/// with `Ext^e(M, M) != 0`.
pub fn muller_check(summands: &[Module], cutoff: usize, seed: u64) -> Result<CheckReport> {
    let m = module_sum(summands)?;
    require_gen_cogen(&m)?;
    let mut r = CheckReport::new("muller", module_inputs(&m), cutoff);
    let end = endomorphism_algebra(summands, seed)?;
    let d = dominant_dimension(&end.algebra, cutoff)?.value;
    let ext = ext_dims(&m, &m, cutoff)?.dims;
    let e = (1..=cutoff.saturating_sub(2)).find(|&i| ext[i] != 0);
    r.note("end_dim", end.algebra.dim());
    r.note("end_domdim", d);
    r.note("ext_mm", format_dims(&ext));
    r.note(
        "first_ext_degree",
        e.map_or("none".to_string(), |e| e.to_string()),
    );
    let ok = match (e, d) {
        (Some(e), DomDim::Exact(k)) => k == e + 1,
        (None, DomDim::AtLeast(_) | DomDim::Infinite) => true,
        _ => false,
    };
    if !ok {
        r.fail(
            "mismatch",
            format!("domdim {d} against first Ext degree {e:?}"),
        );
    }
    Ok(r)
}

/// `dim Ext^n_A(D(A), A) = dim Ext^n(ν M, M)` for `A = End(M)`, degreewise,
/// plus the biconditional between property (◇) of `A` and the vanishing of
/// `Ext^n(M ⊕ ν M, M)` at the cutoff.
pub fn wg_lemma_check(summands: &[Module], cutoff: usize, seed: u64) -> Result<CheckReport> {
    let m = module_sum(summands)?;
    require_gen_cogen(&m)?;
    let mut r = CheckReport::new("wg-lemma", module_inputs(&m), cutoff);
    let end = endomorphism_algebra(summands, seed)?;
    let lhs = ext_dual_regular(&end.algebra, cutoff)?;
    let nu = nakayama_tensor(&m)?;
    let rhs = ext_dims(&nu, &m, cutoff)?.dims;
    r.note("ext_end_dual_regular", format_dims(&lhs));
    r.note("ext_nu_m_m", format_dims(&rhs));
    let d = dominant_dimension(&end.algebra, cutoff)?.value;
    let diamond_side = !d.is_exact() && lhs[1..].iter().all(|&x| x == 0);
    let sum = m.oplus(&nu)?;
    let vanishing_side = ext_dims(&sum, &m, cutoff)?.dims[1..]
        .iter()
        .all(|&x| x == 0);
    r.note("end_domdim", d);
    r.note("statement_diamond", diamond_side);
    r.note("statement_vanishing", vanishing_side);
    r.note("statement_agrees", diamond_side == vanishing_side);
    if let Some(n) = first_mismatch(&lhs, &rhs, 0) {
        r.note("agree_through", n as i64 - 1);
        r.fail("first_mismatch", n);
    }
    if diamond_side != vanishing_side {
        r.fail("statement_mismatch", "biconditional fails at the cutoff");
    }
    Ok(r)
}

/// `Ext^n_B(B ⊕ DB, B ⊕ DB)`, `Ext^n_B(DB, B)` and `Ext^n_{B^e}(B, B ⊗ B)`
/// for `1 <= n <= cutoff`.
pub fn remark32_check(b: &Arc<Algebra>, cutoff: usize, max_dim: usize) -> Result<CheckReport> {
    let env_dim = b.dim() * b.dim();
    if env_dim > max_dim {
        return Err(Error::Budget(format!(
            "enveloping algebra has dim {env_dim} > {max_dim}"
        )));
    }
    let mut r = CheckReport::new("remark32", vec![b.fingerprint()], cutoff);
    let std = Standard::of(b)?;
    let x = std.regular().oplus(&std.dual_regular())?;
    let first = ext_dims(&x, &x, cutoff)?.dims;
    let second = ext_dual_regular(b, cutoff)?;
    let (env, bimodule) = enveloping(b);
    let free = Module::regular(env.clone());
    let third = ext_dims(&bimodule, &free, cutoff)?.dims;
    r.note("enveloping_dim", env.dim());
    r.note("bimodule_action", "outer: (x ⊗ y°)(u ⊗ v) = xu ⊗ vy");
    r.note("ext_sum_sum", format_dims(&first));
    r.note("ext_dual_regular", format_dims(&second));
    r.note("ext_enveloping", format_dims(&third));
    if let Some(n) = first_mismatch(&first, &second, 1).or(first_mismatch(&second, &third, 1)) {
        r.fail("first_mismatch", n);
    }
    Ok(r)
}

/// `(f * g)[n] = Σ_{p+q=n} f[p] g[q]`.
pub fn convolve(f: &[usize], g: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|n| {
            (0..=n)
                .filter(|&p| p < f.len() && n - p < g.len())
                .map(|p| f[p] * g[n - p])
                .sum()
        })
        .collect()
}

/// Ext of `D(C)` against `C = A ⊗ B` as the convolution of the factors,
/// and dominant dimension of `C` as the minimum.
pub fn kunneth_check(
    a: &Arc<Algebra>,
    b: &Arc<Algebra>,
    cutoff: usize,
    max_dim: usize,
) -> Result<CheckReport> {
    let dim = a.dim() * b.dim();
    if dim > max_dim {
        return Err(Error::Budget(format!(
            "tensor product has dim {dim} > {max_dim}"
        )));
    }
    let mut r = CheckReport::new("kunneth", vec![a.fingerprint(), b.fingerprint()], cutoff);
    let c = a.tensor_product(b);
    let (ea, eb, ec) = (
        ext_dual_regular(a, cutoff)?,
        ext_dual_regular(b, cutoff)?,
        ext_dual_regular(&c, cutoff)?,
    );
    let conv = convolve(&ea, &eb, cutoff + 1);
    let (da, db, dc) = (
        dominant_dimension(a, cutoff)?.value,
        dominant_dimension(b, cutoff)?.value,
        dominant_dimension(&c, cutoff)?.value,
    );
    r.note("ext_a", format_dims(&ea));
    r.note("ext_b", format_dims(&eb));
    r.note("ext_c", format_dims(&ec));
    r.note("convolution", format_dims(&conv));
    r.note("domdim_a", da);
    r.note("domdim_b", db);
    r.note("domdim_c", dc);
    r.note("domdim_min", da.min(db));
    if let Some(n) = first_mismatch(&ec, &conv, 0) {
        r.fail("first_mismatch", n);
    }
    if dc != da.min(db) {
        r.fail("domdim_mismatch", format!("{dc} != min({da}, {db})"));
    }
    Ok(r)
}

/// Outcome of property (◇): infinite dominant dimension and
/// `Ext^n(D(A), A) = 0` for `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diamond {
    HoldsCertified,
    HoldsAtCutoff,
    Fails,
}

impl fmt::Display for Diamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Diamond::HoldsCertified => "holds-certified",
            Diamond::HoldsAtCutoff => "holds-at-cutoff",
            Diamond::Fails => "fails",
        })
    }
}

fn diamond_outcome(a: &Arc<Algebra>, cutoff: usize, r: &mut CheckReport) -> Result<Diamond> {
    let d = dominant_dimension(a, cutoff)?.value;
    let ext = ext_dual_regular(a, cutoff)?;
    r.note("domdim", d);
    r.note("ext_dual_regular", format_dims(&ext));
    let first = (1..ext.len()).find(|&n| ext[n] != 0);
    let outcome = match (d, first) {
        (DomDim::Infinite, None) => Diamond::HoldsCertified,
        (DomDim::AtLeast(_), None) => Diamond::HoldsAtCutoff,
        _ => Diamond::Fails,
    };
    r.note("diamond", outcome);
    if outcome == Diamond::Fails {
        match (d, first) {
            (DomDim::Exact(k), _) => r.note("obstruction", format!("domdim = {k}")),
            (_, Some(n)) => r.note("obstruction", format!("Ext^{n}(D(A), A) = {}", ext[n])),
            _ => unreachable!(),
        }
    }
    Ok(outcome)
}

/// Evaluates property (◇). The verdict is `pass` when the outcome is
/// decided and `inconclusive` when it only holds up to the cutoff.
pub fn diamond(a: &Arc<Algebra>, cutoff: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("diamond", vec![a.fingerprint()], cutoff);
    if diamond_outcome(a, cutoff, &mut r)? == Diamond::HoldsAtCutoff {
        r.verdict = Verdict::Inconclusive;
    }
    Ok(r)
}

/// Flags algebras with property (◇) that are not self-injective.
pub fn nc_evidence_scan(a: &Arc<Algebra>, cutoff: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("nc-scan", vec![a.fingerprint()], cutoff);
    let outcome = diamond_outcome(a, cutoff, &mut r)?;
    let self_inj = is_self_injective(a)?;
    r.note("self_injective", self_inj);
    if outcome != Diamond::Fails && !self_inj {
        r.verdict = Verdict::Inconclusive;
        r.note("specimen", "tension");
    }
    Ok(r)
}

/// Finite shadows of the description of modules of finite projective or
/// injective dimension under property (◇).
pub fn thick_shadow_check(
    a: &Arc<Algebra>,
    modules: &[(String, Module)],
    cutoff: usize,
) -> Result<CheckReport> {
    let mut inputs = vec![a.fingerprint()];
    inputs.extend(modules.iter().map(|(_, m)| m.fingerprint()));
    let mut r = CheckReport::new("thick-shadow", inputs, cutoff);
    if diamond_outcome(a, cutoff, &mut r)? == Diamond::Fails {
        r.verdict = Verdict::Skipped;
        r.note("reason", "hypothesis-not-met");
        return Ok(r);
    }
    let mut dims = Vec::new();
    for (name, m) in modules {
        let (pd, id) = (pd_bounded(m, cutoff)?, id_bounded(m, cutoff)?);
        r.note(&format!("pd[{name}]"), pd);
        r.note(&format!("id[{name}]"), id);
        if pd.is_finite() && id.is_finite() && !(m.is_projective()? && m.is_injective()?) {
            r.fail("not_projective_injective", name);
        }
        dims.push((pd.is_finite(), id.is_finite()));
    }
    for (i, (nu, u)) in modules.iter().enumerate() {
        for (j, (nv, v)) in modules.iter().enumerate() {
            if !dims[i].0 || !dims[j].1 {
                continue;
            }
            let uv = ext_dims(u, v, 1)?.dims[1];
            let vu = ext_dims(v, u, 1)?.dims[1];
            if uv != 0 {
                r.fail("ext1_nonzero", format!("Ext^1({nu}, {nv}) = {uv}"));
            }
            if vu != 0 {
                r.fail("ext1_nonzero", format!("Ext^1({nv}, {nu}) = {vu}"));
            }
        }
    }
    Ok(r)
}
