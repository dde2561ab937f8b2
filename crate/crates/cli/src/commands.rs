use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};
use verma_core::conformal::{self, CuspTriple, HcSix, SignatureCusp, SignatureNC};
use verma_core::multiplet::{self, edge_label};
use verma_core::parabolic::{self, is_ps_dominant};
use verma_core::realforms::{self, format_types, VerificationReport};
use verma_core::weights::{self, hc_parameters};
use verma_core::{
    BuildOptions, LieType, ParabolicSubset, Rational, RealFormSpec, Root, RootSystem, Weight,
};

use crate::parse::{parse_index_list, parse_rational_list};
use crate::table::Table;
use crate::{CliError, ConformalSignature, Output, OutputArgs, OutputFormat, SCHEMA_VERSION};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn to_json(mut v: Value, command: &str) -> String {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        map.insert("command".into(), json!(command));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

fn labels_json(w: &Weight) -> Value {
    Value::Array(w.labels().iter().map(q).collect())
}

fn subset_json(s: &ParabolicSubset) -> Value {
    json!(s.nodes().collect::<Vec<_>>())
}

fn roots_json(roots: &[Root]) -> Value {
    json!(roots.iter().map(|r| r.coeffs().to_vec()).collect::<Vec<_>>())
}

fn types_json(types: &[LieType]) -> Value {
    json!(types.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn latex_root(r: &Root) -> String {
    let mut s = String::new();
    let mut first = true;
    for (i, &c) in r.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !first {
            s.push('+');
        }
        if c != 1 {
            let _ = write!(s, "{c}");
        }
        let _ = write!(s, "\\alpha_{{{}}}", i + 1);
        first = false;
    }
    format!("${s}$")
}

fn latex_subset(s: &ParabolicSubset) -> String {
    if s.is_empty() {
        "$\\emptyset$".into()
    } else {
        format!("$\\{{{}\\}}$", s.nodes().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn join_roots(roots: &[Root]) -> String {
    if roots.is_empty() {
        return "-".into();
    }
    roots.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn ints(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn rats(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_subset(spec: Option<&str>, rank: usize) -> Result<ParabolicSubset, CliError> {
    match spec {
        None => Ok(ParabolicSubset::empty()),
        Some(s) => {
            let nodes = parse_index_list(s).map_err(usage)?;
            ParabolicSubset::new(nodes, rank).map_err(|e| usage(e.to_string()))
        }
    }
}

fn parse_weight(labels: &str, rank: usize) -> Result<Weight, CliError> {
    let labels = parse_rational_list(labels).map_err(usage)?;
    if labels.len() != rank {
        return Err(usage(format!(
            "expected {rank} labels, got {}",
            labels.len()
        )));
    }
    Ok(Weight::new(labels))
}

pub fn roots(t: LieType, out: &OutputArgs) -> Result<String, CliError> {
    let rs = RootSystem::build(t);
    let coroots: Vec<Vec<Rational>> = rs
        .positive_roots()
        .iter()
        .map(|b| rs.coroot_coeffs(b).expect("positive root"))
        .collect();
    if out.format == OutputFormat::Json {
        let roots: Vec<Value> = rs
            .positive_roots()
            .iter()
            .zip(&coroots)
            .map(|(b, c)| {
                json!({
                    "coeffs": b.coeffs(),
                    "height": b.height(),
                    "name": b.to_string(),
                    "norm": rs.pairing_int(b.coeffs(), b.coeffs()),
                    "coroot": c.iter().map(q).collect::<Vec<_>>(),
                    "coroot_simple": rs.coroot_in_simple_coroots(b).expect("positive root"),
                })
            })
            .collect();
        return Ok(to_json(
            json!({
                "type": t.to_string(),
                "rank": t.rank(),
                "cartan": rs.cartan(),
                "symmetrizer": rs.symmetrizer(),
                "positive_roots": roots,
            }),
            "roots",
        ));
    }
    let mut table = Table::new(["#", "root", "coeffs", "height", "(β,β)", "coroot β^∨"]);
    for (i, (b, c)) in rs.positive_roots().iter().zip(&coroots).enumerate() {
        table.row(vec![
            (i + 1).to_string(),
            if out.latex { latex_root(b) } else { b.to_string() },
            ints(b.coeffs()),
            b.height().to_string(),
            rs.pairing_int(b.coeffs(), b.coeffs()).to_string(),
            rats(c),
        ]);
    }
    if out.latex {
        return Ok(table.render_latex());
    }
    Ok(format!(
        "{t}: rank {}, {} positive roots\n\n{}",
        t.rank(),
        rs.positive_roots().len(),
        table.render()
    ))
}

pub fn parabolics(t: LieType, out: &OutputArgs) -> Result<String, CliError> {
    let rs = RootSystem::build(t);
    let all = parabolic::enumerate_all(&rs);
    if out.format == OutputFormat::Json {
        let items: Vec<Value> = all
            .iter()
            .map(|p| {
                json!({
                    "subset": subset_json(&p.subset),
                    "levi_roots": roots_json(&p.levi_roots),
                    "nilradical_roots": roots_json(&p.nilradical_roots),
                    "levi_type": types_json(&p.levi_type),
                    "levi_dim": p.levi_dim(),
                    "nilradical_dim": p.nilradical_dim(),
                    "center_rank": p.center_rank,
                })
            })
            .collect();
        return Ok(to_json(
            json!({"type": t.to_string(), "rank": t.rank(), "parabolics": items}),
            "parabolics",
        ));
    }
    let mut table = Table::new(["S", "Δ^S₊", "|Δ^S₊|", "|Δ₊(S)|", "Levi type", "centre"]);
    for p in &all {
        let levi = if out.latex {
            if p.levi_roots.is_empty() {
                "$\\emptyset$".to_string()
            } else {
                p.levi_roots.iter().map(latex_root).collect::<Vec<_>>().join(", ")
            }
        } else {
            join_roots(&p.levi_roots)
        };
        table.row(vec![
            if out.latex { latex_subset(&p.subset) } else { p.subset.to_string() },
            levi,
            p.levi_dim().to_string(),
            p.nilradical_dim().to_string(),
            format_types(&p.levi_type),
            p.center_rank.to_string(),
        ]);
    }
    if out.latex {
        return Ok(table.render_latex());
    }
    Ok(format!("{t}: {} parabolic subalgebras P_S ⊇ b\n\n{}", all.len(), table.render()))
}

pub fn reduce(
    t: LieType,
    labels: &str,
    parabolic: Option<&str>,
    out: &OutputArgs,
) -> Result<String, CliError> {
    let rs = RootSystem::build(t);
    let weight = parse_weight(labels, t.rank())?;
    let subset = parse_subset(parabolic, t.rank())?;
    let hits = parabolic::pvm_reducibility_set(&rs, &subset, &weight)?;
    if out.format == OutputFormat::Json {
        let items: Vec<Value> = hits
            .iter()
            .map(|h| {
                json!({
                    "beta": h.hit.beta.coeffs(),
                    "m": int_json(&h.hit.m),
                    "target": labels_json(&h.target),
                    "target_dominant": h.target_dominant,
                })
            })
            .collect();
        return Ok(to_json(
            json!({
                "type": t.to_string(),
                "labels": labels_json(&weight),
                "parabolic": parabolic.map(|_| subset_json(&subset)),
                "irreducible": hits.is_empty(),
                "hits": items,
            }),
            "reduce",
        ));
    }
    let mut table = Table::new(["β", "m", "Λ − mβ", "in P_S"]);
    for h in &hits {
        table.row(vec![
            if out.latex { latex_root(&h.hit.beta) } else { h.hit.beta.to_string() },
            h.hit.m.to_string(),
            h.target.to_string(),
            if h.target_dominant { "yes" } else { "no" }.into(),
        ]);
    }
    if out.latex {
        return Ok(table.render_latex());
    }
    let module = if parabolic.is_some() {
        format!("V_S^M(Λ) with S = {subset}")
    } else {
        "V^Λ".to_string()
    };
    let mut s = format!("{module}, Λ = {weight} over {t}: ");
    if hits.is_empty() {
        s.push_str("irreducible\n");
    } else {
        let _ = writeln!(s, "reducible, {} hit(s)\n", hits.len());
        s.push_str(&table.render());
    }
    Ok(s)
}

pub fn multiplet(
    t: LieType,
    labels: &str,
    parabolic: Option<&str>,
    keep_dropped: bool,
    cap: Option<usize>,
    out: &OutputArgs,
) -> Result<String, CliError> {
    let rs = RootSystem::build(t);
    let seed = parse_weight(labels, t.rank())?;
    let subset = parse_subset(parabolic, t.rank())?;
    let opts = BuildOptions { cap, keep_dropped };
    let g = multiplet::build(&rs, &subset, &seed, &opts)?;
    match out.format {
        OutputFormat::Dot => Ok(g.to_dot()),
        OutputFormat::Json => {
            let vertices: Vec<Value> = g
                .vertices
                .iter()
                .zip(&g.depths)
                .enumerate()
                .map(|(i, (v, d))| {
                    json!({
                        "index": i,
                        "labels": labels_json(v),
                        "depth": d.iter().map(int_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let edges: Vec<Value> = g
                .edges
                .iter()
                .map(|e| json!({"from": e.from, "to": e.to, "beta": e.beta.coeffs(), "m": int_json(&e.m)}))
                .collect();
            let dropped: Vec<Value> = g
                .dropped
                .iter()
                .map(|d| {
                    json!({"from": d.from, "beta": d.beta.coeffs(), "m": int_json(&d.m), "target": labels_json(&d.target)})
                })
                .collect();
            Ok(to_json(
                json!({
                    "type": t.to_string(),
                    "seed": labels_json(&seed),
                    "parabolic": subset_json(&subset),
                    "vertices": vertices,
                    "edges": edges,
                    "dropped": dropped,
                }),
                "multiplet",
            ))
        }
        OutputFormat::Text => {
            let mut vt = Table::new(["#", "weight", "seed − weight"]);
            for (i, (v, d)) in g.vertices.iter().zip(&g.depths).enumerate() {
                vt.row(vec![
                    i.to_string(),
                    v.to_string(),
                    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                ]);
            }
            let mut et = Table::new(["from", "to", "m·β"]);
            for e in &g.edges {
                et.row(vec![e.from.to_string(), e.to.to_string(), edge_label(&e.m, &e.beta)]);
            }
            if out.latex {
                return Ok(format!("{}\n{}", vt.render_latex(), et.render_latex()));
            }
            let mut s = format!(
                "multiplet of {seed} over {t}, S = {subset}: {} vertices, {} edges\n\n",
                g.vertices.len(),
                g.edges.len()
            );
            s.push_str(&vt.render());
            s.push('\n');
            s.push_str(&et.render());
            for d in &g.dropped {
                let _ = writeln!(
                    s,
                    "dropped: {} --{}--> {} (not in P_S)",
                    d.from,
                    edge_label(&d.m, &d.beta),
                    d.target
                );
            }
            Ok(s)
        }
    }
}

fn spec_json(spec: &RealFormSpec) -> Value {
    json!({
        "form": spec.name(),
        "family": realforms::record(spec.family).name,
        "params": spec.params,
        "m0": spec.m0_components.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "m0_complexified": types_json(&spec.m0_semisimple_types()),
        "m0_abelian": spec.m0_abelian_count(),
        "dim_a0": spec.dim_a0,
        "dim_n0": spec.dim_n0,
        "dim_n0_stated": spec.dim_n0_stated,
        "complex_type": spec.complex_type.to_string(),
        "complex_subset": subset_json(&spec.complex_subset),
    })
}

fn report_json(rep: &VerificationReport) -> Value {
    json!({
        "passed": rep.passed(),
        "nilradical_dim": rep.nilradical_dim,
        "levi_type": types_json(&rep.levi_type),
        "center_rank": rep.center_rank,
        "checks": rep.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "expected": c.expected,
            "actual": c.actual,
        })).collect::<Vec<_>>(),
    })
}

fn m0_string(spec: &RealFormSpec) -> String {
    if spec.m0_components.is_empty() {
        return "0".into();
    }
    spec.m0_components
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn realform(
    family: &str,
    params: &[usize],
    verify: bool,
    out: &OutputArgs,
) -> Result<Output, CliError> {
    let (fam, params) = match realforms::resolve(family, params) {
        Ok(x) => x,
        Err(e @ verma_core::Error::RealFormConstraint { family: "real form", .. }) => {
            return Err(usage(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let spec = realforms::minimal_parabolic(fam, &params)?;
    let report = verify.then(|| realforms::verify(&spec));
    let exit_code = match &report {
        Some(r) if !r.passed() => 4,
        _ => 0,
    };

    let stdout = if out.format == OutputFormat::Json {
        let mut v = spec_json(&spec);
        if let Some(r) = &report {
            v["verification"] = report_json(r);
        }
        to_json(v, "realform")
    } else if out.latex {
        let mut table = Table::new([
            "$\\mathfrak{g}_0$",
            "$\\mathfrak{m}_0$",
            "$\\dim\\mathfrak{a}_0$",
            "$\\dim\\mathfrak{n}_0$",
            "$\\mathfrak{p}_0^{\\mathbb{C}}$",
        ]);
        table.row(vec![
            format!("${}$", spec.name()),
            format!("${}$", m0_string(&spec)),
            spec.dim_a0.to_string(),
            spec.dim_n0.to_string(),
            format!("$P_{{{}}}$ in ${}$", latex_subset(&spec.complex_subset).trim_matches('$'), spec.complex_type),
        ]);
        table.render_latex()
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "real form        {}", spec.name());
        let _ = writeln!(s, "m0               {}", m0_string(&spec));
        let _ = writeln!(s, "m0 (complex, ss) {}", format_types(&spec.m0_semisimple_types()));
        let _ = writeln!(s, "dim a0           {}", spec.dim_a0);
        let _ = writeln!(
            s,
            "dim n0           {}{}",
            spec.dim_n0,
            if spec.dim_n0_stated { "" } else { " (split form: |Δ₊| of the complexification)" }
        );
        let _ = writeln!(s, "complexification {}", spec.complex_type);
        let _ = writeln!(s, "p0^C             P_S with S = {}", spec.complex_subset);
        if let Some(r) = &report {
            let _ = writeln!(s, "\nverification: {}", if r.passed() { "all checks pass" } else { "MISMATCH" });
            let mut table = Table::new(["check", "expected", "computed", "ok"]);
            for c in &r.checks {
                table.row(vec![
                    c.name.into(),
                    c.expected.clone(),
                    c.actual.clone(),
                    if c.passed { "yes" } else { "NO" }.into(),
                ]);
            }
            s.push_str(&table.render());
        }
        s
    };
    Ok(Output { stdout, exit_code })
}

pub fn grid(max_rank: usize, out: &OutputArgs) -> Result<Output, CliError> {
    if max_rank == 0 {
        return Err(usage("--max-rank must be positive"));
    }
    let specs = realforms::instances_up_to_rank(max_rank);
    // indexed parallel collect keeps catalog order
    let reports: Vec<VerificationReport> = specs.par_iter().map(realforms::verify).collect();
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let exit_code = if failures == 0 { 0 } else { 4 };

    let stdout = if out.format == OutputFormat::Json {
        let results: Vec<Value> = specs
            .iter()
            .zip(&reports)
            .map(|(spec, r)| {
                json!({
                    "form": spec.name(),
                    "complex_type": spec.complex_type.to_string(),
                    "complex_subset": subset_json(&spec.complex_subset),
                    "dim_n0": spec.dim_n0,
                    "nilradical_dim": r.nilradical_dim,
                    "passed": r.passed(),
                })
            })
            .collect();
        to_json(
            json!({
                "max_rank": max_rank,
                "instances": specs.len(),
                "failures": failures,
                "results": results,
            }),
            "grid",
        )
    } else {
        let mut table = Table::new(["form", "g^C", "S", "dim n0", "|Δ₊(S)|", "Levi", "ok"]);
        for (spec, r) in specs.iter().zip(&reports) {
            table.row(vec![
                spec.name(),
                spec.complex_type.to_string(),
                if out.latex { latex_subset(&spec.complex_subset) } else { spec.complex_subset.to_string() },
                spec.dim_n0.to_string(),
                r.nilradical_dim.to_string(),
                format_types(&r.levi_type),
                if r.passed() { "yes" } else { "NO" }.into(),
            ]);
        }
        if out.latex {
            table.render_latex()
        } else {
            format!(
                "{} real forms up to complex rank {max_rank}: {} passed, {failures} failed\n\n{}",
                specs.len(),
                specs.len() - failures,
                table.render()
            )
        }
    };
    Ok(Output { stdout, exit_code })
}

fn hc_json(hc: &HcSix) -> Value {
    json!({
        "m1": q(&hc.m1), "m2": q(&hc.m2), "m3": q(&hc.m3),
        "m12": q(&hc.m12), "m23": q(&hc.m23), "m13": q(&hc.m13),
    })
}

fn su22_table(latex: bool) -> (Table, Value) {
    let rows = conformal::su22_parabolic_table();
    let mut table = Table::new(["parabolic", "m", "m^C", "cuspidal", "S", "dim a", "dim n", "|Δ₊(S)|"]);
    let mut json_rows = Vec::new();
    for r in &rows {
        table.row(vec![
            r.name.into(),
            r.m.into(),
            r.m_complex.into(),
            if r.cuspidal { "yes" } else { "no" }.into(),
            if latex { latex_subset(&r.subset) } else { r.subset.to_string() },
            r.dim_a.to_string(),
            r.dim_n.to_string(),
            r.nilradical_dim.to_string(),
        ]);
        json_rows.push(json!({
            "name": r.name,
            "kind": format!("{:?}", r.kind),
            "m": r.m,
            "m_complex": r.m_complex,
            "cuspidal": r.cuspidal,
            "subset": subset_json(&r.subset),
            "dim_a": r.dim_a,
            "dim_n": r.dim_n,
            "nilradical_dim": r.nilradical_dim,
        }));
    }
    (table, Value::Array(json_rows))
}

struct SignatureReport {
    kind: &'static str,
    signature: Value,
    signature_text: String,
    weight: Weight,
    subset: ParabolicSubset,
    closed_forms: HcSix,
}

fn parse_fields(s: &str, n: usize, what: &str) -> Result<Vec<Rational>, CliError> {
    let v = parse_rational_list(s).map_err(usage)?;
    if v.len() != n {
        return Err(usage(format!("{what} expects {n} comma-separated values, got {}", v.len())));
    }
    Ok(v)
}

fn integer_field(x: &Rational, name: &str) -> Result<BigInt, CliError> {
    if !x.is_integer() {
        return Err(usage(format!("{name} must be an integer, got {x}")));
    }
    Ok(x.to_integer())
}

fn small_int(x: &Rational, name: &str) -> Result<i64, CliError> {
    i64::try_from(integer_field(x, name)?).map_err(|_| usage(format!("{name} is out of range")))
}

fn signature_report(sig: &ConformalSignature) -> Result<Option<SignatureReport>, CliError> {
    if let Some(s) = &sig.signature {
        let v = parse_fields(s, 3, "--signature j1,j2,d")?;
        let nc = SignatureNC::new(v[0].clone(), v[1].clone(), v[2].clone())?;
        return Ok(Some(SignatureReport {
            kind: "noncuspidal",
            signature: json!({"j1": q(nc.j1()), "j2": q(nc.j2()), "d": q(nc.d())}),
            signature_text: format!("[j1, j2; d] = [{}, {}; {}]", nc.j1(), nc.j2(), nc.d()),
            weight: conformal::weight_nc(&nc),
            subset: conformal::nc_subset(),
            closed_forms: conformal::hc_nc(&nc),
        }));
    }
    if let Some(s) = &sig.cuspidal {
        let v = parse_fields(s, 4, "--cuspidal n',k,eps,nu'")?;
        let eps = small_int(&v[2], "eps")?;
        let eps = i8::try_from(eps).map_err(|_| usage("eps must be +1 or -1"))?;
        let cusp = SignatureCusp::new(
            integer_field(&v[0], "n'")?,
            integer_field(&v[1], "k")?,
            eps,
            v[3].clone(),
        )?;
        return Ok(Some(SignatureReport {
            kind: "cuspidal",
            signature: json!({
                "n_prime": int_json(cusp.n_prime()),
                "k": int_json(cusp.k()),
                "eps": cusp.eps(),
                "nu_prime": q(cusp.nu_prime()),
            }),
            signature_text: format!(
                "{{n', k, eps, nu'}} = {{{}, {}, {}, {}}}",
                cusp.n_prime(),
                cusp.k(),
                cusp.eps(),
                cusp.nu_prime()
            ),
            weight: conformal::weight_cusp(&cusp)?,
            subset: conformal::cusp_subset(),
            closed_forms: conformal::hc_cusp(&cusp)?,
        }));
    }
    if let Some(s) = &sig.cusp_triple {
        let v = parse_fields(s, 3, "--cusp-triple p,nu,n")?;
        let t = CuspTriple::new(small_int(&v[0], "p")?, small_int(&v[1], "nu")?, small_int(&v[2], "n")?)?;
        return Ok(Some(SignatureReport {
            kind: "cusp_triple",
            signature: json!({"p": t.p, "nu": t.nu, "n": t.n}),
            signature_text: format!("(p, nu, n) = ({}, {}, {})", t.p, t.nu, t.n),
            weight: conformal::weight_cusp_triple(&t),
            subset: conformal::cusp_subset(),
            closed_forms: conformal::hc_cusp_triple(&t),
        }));
    }
    Ok(None)
}

pub fn conformal(sig: &ConformalSignature, table: bool, out: &OutputArgs) -> Result<String, CliError> {
    let report = signature_report(sig)?;
    if report.is_none() && !table {
        return Err(usage(
            "give one of --signature, --cuspidal, --cusp-triple, or --table",
        ));
    }
    let rs = conformal::sl4();
    let mut json_out = json!({});
    let mut text = String::new();

    if let Some(rep) = &report {
        let hc = hc_parameters(&rs, &rep.weight)?;
        debug_assert_eq!(hc, rep.closed_forms.to_vec());
        let hits = weights::reducibility_set(&rs, &rep.weight)?;
        let dominant = is_ps_dominant(&rep.weight, &rep.subset);
        let pvm_hits = if dominant {
            Some(parabolic::pvm_reducibility_set(&rs, &rep.subset, &rep.weight)?)
        } else {
            None
        };
        let verdict = if hits.is_empty() { "irreducible" } else { "reducible" };
        let verdicts: Vec<(Root, Rational, bool, bool)> = rs
            .positive_roots()
            .iter()
            .zip(&hc)
            .map(|(b, m)| {
                let hit = hits.iter().any(|h| &h.beta == b);
                let essential = b.support().iter().any(|&p| !rep.subset.contains_position(p));
                (b.clone(), m.clone(), hit, essential)
            })
            .collect();

        if out.format == OutputFormat::Json {
            json_out["signature_kind"] = json!(rep.kind);
            json_out["signature"] = rep.signature.clone();
            json_out["weight"] = labels_json(&rep.weight);
            json_out["parabolic"] = subset_json(&rep.subset);
            json_out["ps_dominant"] = json!(dominant);
            json_out["hc"] = hc_json(&HcSix::from_slice(&hc));
            json_out["hc_closed_form_match"] = json!(hc == rep.closed_forms.to_vec());
            json_out["verdict"] = json!(verdict);
            json_out["hits"] = json!(hits
                .iter()
                .map(|h| json!({"beta": h.beta.coeffs(), "m": int_json(&h.m)}))
                .collect::<Vec<_>>());
            json_out["roots"] = json!(verdicts
                .iter()
                .map(|(b, m, hit, essential)| json!({
                    "beta": b.coeffs(),
                    "name": b.to_string(),
                    "m": q(m),
                    "reducible": hit,
                    "pvm_essential": essential,
                }))
                .collect::<Vec<_>>());
            json_out["pvm_hits"] = match &pvm_hits {
                None => Value::Null,
                Some(v) => json!(v
                    .iter()
                    .map(|h| json!({
                        "beta": h.hit.beta.coeffs(),
                        "m": int_json(&h.hit.m),
                        "target": labels_json(&h.target),
                        "target_dominant": h.target_dominant,
                    }))
                    .collect::<Vec<_>>()),
            };
        } else {
            let _ = writeln!(text, "signature   {}", rep.signature_text);
            let _ = writeln!(text, "weight      Λ = {}", rep.weight);
            let _ = writeln!(
                text,
                "parabolic   S = {} ({})",
                rep.subset,
                if dominant { "Λ ∈ P_S" } else { "Λ ∉ P_S" }
            );
            let _ = writeln!(text, "verdict     {verdict} ({} hit(s))", hits.len());
            if let Some(p) = &pvm_hits {
                let _ = writeln!(
                    text,
                    "PVM         {} ({} hit(s) on Δ₊(S))",
                    if p.is_empty() { "irreducible" } else { "reducible" },
                    p.len()
                );
            }
            text.push('\n');
            let mut t = Table::new(["β", "m_β", "m_β ∈ ℕ", "β ∈ Δ₊(S)"]);
            for (b, m, hit, essential) in &verdicts {
                t.row(vec![
                    if out.latex { latex_root(b) } else { b.to_string() },
                    m.to_string(),
                    if *hit { "yes" } else { "no" }.into(),
                    if *essential { "yes" } else { "no" }.into(),
                ]);
            }
            text.push_str(&if out.latex { t.render_latex() } else { t.render() });
        }
    }

    if table {
        let (t, rows) = su22_table(out.latex);
        if out.format == OutputFormat::Json {
            json_out["su22_table"] = rows;
        } else {
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&if out.latex { t.render_latex() } else { t.render() });
        }
    }

    if out.format == OutputFormat::Json {
        return Ok(to_json(json_out, "conformal"));
    }
    Ok(text)
}
