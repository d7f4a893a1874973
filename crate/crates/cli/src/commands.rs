use std::path::Path;

use serde_json::{json, Value};

use ybrace::brace::{
    direct_product, quotient_brace, socle as brace_socle, trivial_brace, wreath_product, BraceSubset, FiniteBrace,
};
use ybrace::bridge::{double_cover_solution, iyb_quotient_brace, solution_from_brace};
use ybrace::constructions::{
    adjoint_embedding, ault_watters_brace, aug_brace_mpl, class2_brace, materialize_aug_brace, six_point_solution,
    sym3_brace, sym3_labels, AugError,
};
use ybrace::enumerate::{
    braces_of_order, census, corpus_sweep, enumerate_all_braces, enumerate_braces, enumerate_solutions, EnumerateError,
    Theorem, THEOREMS,
};
use ybrace::format::{parse_brace_rows, parse_solution_rows, write_brace, write_solution};
use ybrace::group::named;
use ybrace::selftest::{run_suite, Suite};
use ybrace::solution::{validate_solution, FiniteSolution, Mpl};
use ybrace::CayleyGroup;

use crate::output::{invalid, usage, CliError, Output};
use crate::{Input, ProductKind};

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: ybrace::format::FormatError) -> CliError {
    match CliError::from(e) {
        CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn required<'a>(path: Option<&'a Path>, flag: &str) -> Result<&'a Path> {
    path.ok_or_else(|| usage(format!("--{flag} is required")))
}

fn load_solution(path: Option<&Path>) -> Result<FiniteSolution> {
    let path = required(path, "solution")?;
    let rows = parse_solution_rows(&read(path)?).map_err(|e| located(path, e))?;
    validate_solution(&rows).map_err(invalid)
}

fn load_brace_flag(path: Option<&Path>, flag: &str) -> Result<FiniteBrace> {
    let path = required(path, flag)?;
    let (add, mul) = parse_brace_rows(&read(path)?).map_err(|e| located(path, e))?;
    ybrace::brace::validate_brace(&add, &mul).map_err(invalid)
}

fn load_brace(path: Option<&Path>) -> Result<FiniteBrace> {
    load_brace_flag(path, "brace")
}

fn load_left_brace(path: Option<&Path>) -> Result<FiniteBrace> {
    let b = load_brace(path)?;
    if !b.is_left() {
        return Err(invalid("a left brace is required"));
    }
    Ok(b)
}

/// `cyclic:N`, `abelian:AxB…`, `dihedral:M` (order 2M), `quaternion`,
/// `symmetric:K`, `heisenberg:M` (order M³).
pub fn parse_group(spec: &str) -> Result<CayleyGroup> {
    let bad = || usage(format!("unknown group `{spec}`"));
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let num = |s: &str| s.parse::<usize>().ok().filter(|&k| k > 0).ok_or_else(bad);
    let g = match name {
        "cyclic" => named::cyclic(num(arg)?),
        "abelian" => {
            let orders = arg.split('x').map(num).collect::<Result<Vec<_>>>()?;
            named::abelian(&orders)
        }
        "dihedral" if num(arg)? >= 2 => named::dihedral(num(arg)?),
        "quaternion" if arg.is_empty() => named::quaternion(),
        "symmetric" if num(arg)? <= 5 => named::symmetric(num(arg)?),
        "heisenberg" if num(arg)? <= 8 => named::heisenberg(num(arg)?),
        _ => return Err(bad()),
    };
    Ok(g)
}

fn solution_json(s: &FiniteSolution) -> Value {
    json!({ "n": s.size(), "sigma": s.rows() })
}

fn brace_json(b: &FiniteBrace) -> Value {
    json!({ "n": b.order(), "side": b.side().as_str(), "add": b.add_rows(), "mul": b.mul_rows() })
}

fn solution_output(s: &FiniteSolution, comments: Vec<String>) -> Output {
    let mut j = solution_json(s);
    j["comments"] = json!(comments);
    Output::ok(write_solution(s, &comments), j)
}

fn brace_output(b: &FiniteBrace, comments: Vec<String>) -> Output {
    let mut j = brace_json(b);
    j["comments"] = json!(comments);
    Output::ok(write_brace(b, &comments), j)
}

fn lines(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}

fn set_text(elems: &[usize]) -> String {
    let parts: Vec<String> = elems.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn mpl_json(m: Mpl) -> Value {
    match m {
        Mpl::Level(k) => json!({ "mpl": k }),
        Mpl::Irretractable { size } => json!({ "mpl": null, "irretractable_size": size }),
    }
}

pub fn validate(input: &Input) -> Result<Output> {
    match (&input.solution, &input.brace) {
        (Some(_), Some(_)) | (None, None) => Err(usage("give exactly one of --solution and --brace")),
        (Some(p), None) => {
            let s = load_solution(Some(p))?;
            let sf = if s.is_square_free() { "square-free" } else { "not square-free" };
            Ok(Output::ok(
                format!("valid, {sf}, n={}\n", s.size()),
                json!({ "valid": true, "kind": "solution", "n": s.size(), "square_free": s.is_square_free() }),
            ))
        }
        (None, Some(p)) => {
            let b = load_brace(Some(p))?;
            let side = b.side().as_str();
            Ok(Output::ok(
                format!("valid, {side} brace, n={}\n", b.order()),
                json!({ "valid": true, "kind": "brace", "n": b.order(), "side": side }),
            ))
        }
    }
}

pub fn from_brace(path: Option<&Path>) -> Result<Output> {
    let b = load_left_brace(path)?;
    let s = solution_from_brace(&b).map_err(invalid)?;
    Ok(solution_output(&s, vec![format!("solution of a {} brace of order {}", b.side().as_str(), b.order())]))
}

pub fn double_cover(path: Option<&Path>) -> Result<Output> {
    let b = load_left_brace(path)?;
    let (s, labels) = double_cover_solution(&b).map_err(invalid)?;
    let names: Vec<String> = labels.iter().enumerate().map(|(i, (a, k))| format!("{i}=({a},{k})")).collect();
    Ok(solution_output(&s, vec![format!("points: {}", names.join(" "))]))
}

pub fn retract(path: Option<&Path>, chain: bool) -> Result<Output> {
    let s = load_solution(path)?;
    if chain {
        let mut sizes = vec![s.size()];
        let mut current = s.clone();
        while current.size() > 1 {
            let next = current.retract().quotient;
            if next.size() == current.size() {
                break;
            }
            sizes.push(next.size());
            current = next;
        }
        let m = s.mpl();
        let text: Vec<String> = sizes.iter().map(usize::to_string).collect();
        let mut j = mpl_json(m);
        j["sizes"] = json!(sizes);
        return Ok(Output::ok(lines(&[("sizes", text.join(" ")), ("mpl", m.to_string())]), j));
    }
    let step = s.retract();
    let classes: Vec<String> = step.classes.iter().map(|c| set_text(c)).collect();
    let mut out = solution_output(&step.quotient, vec![format!("classes: {}", classes.join(" "))]);
    out.json["classes"] = json!(step.classes);
    Ok(out)
}

fn brace_mpl_by_socles(b: &FiniteBrace) -> Result<Mpl> {
    let mut current = b.clone();
    let mut level = 0;
    while current.order() > 1 {
        let soc = brace_socle(&current).map_err(invalid)?;
        if soc.len() == 1 {
            return Ok(Mpl::Irretractable { size: current.order() });
        }
        current = quotient_brace(&current, &soc).map_err(invalid)?.brace;
        level += 1;
    }
    Ok(Mpl::Level(level))
}

pub fn mpl(input: &Input, via_solution: bool) -> Result<Output> {
    let m = match (&input.solution, &input.brace) {
        (Some(_), Some(_)) | (None, None) => return Err(usage("give exactly one of --solution and --brace")),
        (Some(p), None) => load_solution(Some(p))?.mpl(),
        (None, Some(p)) => {
            let b = load_left_brace(Some(p))?;
            if via_solution {
                solution_from_brace(&b).map_err(invalid)?.mpl()
            } else {
                brace_mpl_by_socles(&b)?
            }
        }
    };
    Ok(Output::ok(format!("mpl = {m}\n"), mpl_json(m)))
}

pub fn socle(path: Option<&Path>) -> Result<Output> {
    let b = load_left_brace(path)?;
    let s = brace_socle(&b).map_err(invalid)?.elements();
    Ok(Output::ok(
        lines(&[("socle", set_text(&s)), ("order", s.len().to_string())]),
        json!({ "socle": s, "order": s.len() }),
    ))
}

pub fn quotient(path: Option<&Path>, ideal: Option<&[usize]>, by_socle: bool) -> Result<Output> {
    let b = load_brace(path)?;
    let n = b.order();
    let subset = match (ideal, by_socle) {
        (Some(elems), false) => {
            if let Some(&e) = elems.iter().find(|&&e| e >= n) {
                return Err(usage(format!("element {e} is outside 0..{n}")));
            }
            BraceSubset::from_elements(n, elems)
        }
        (None, true) => brace_socle(&b).map_err(invalid)?,
        _ => return Err(usage("give --ideal or --socle")),
    };
    let q = quotient_brace(&b, &subset).map_err(invalid)?;
    let mut out = brace_output(&q.brace, vec![format!("coset representatives: {}", set_text(&q.representatives))]);
    out.json["representatives"] = json!(q.representatives);
    out.json["projection"] = json!(q.projection);
    Ok(out)
}

pub fn ybgroup(path: Option<&Path>) -> Result<Output> {
    let s = load_solution(path)?;
    let g = s.yb_group().map_err(invalid)?;
    let c = g.cayley();
    let class = c.nilpotency_class();
    Ok(Output::ok(
        lines(&[
            ("order", g.order().to_string()),
            ("abelian", c.is_abelian().to_string()),
            ("nilpotency class", class.map_or("none".into(), |k| k.to_string())),
        ]),
        json!({ "order": g.order(), "abelian": c.is_abelian(), "nilpotency_class": class }),
    ))
}

pub fn iyb_brace(path: Option<&Path>) -> Result<Output> {
    let s = load_solution(path)?;
    let iyb = iyb_quotient_brace(&s).map_err(invalid)?;
    let comments = iyb
        .group
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let img: Vec<String> = p.images().iter().map(usize::to_string).collect();
            format!("element {i} is the permutation [{}]", img.join(" "))
        })
        .collect();
    Ok(brace_output(&iyb.brace, comments))
}

pub fn product(left: Option<&Path>, right: Option<&Path>, kind: ProductKind) -> Result<Output> {
    let g = load_brace_flag(left, "left")?;
    let h = load_brace_flag(right, "right")?;
    let (p, name) = match kind {
        ProductKind::Direct => (direct_product(&g, &h), "direct"),
        ProductKind::Wreath => (wreath_product(&g, &h), "wreath"),
    };
    let p = p.map_err(invalid)?;
    Ok(brace_output(&p, vec![format!("{name} product of braces of orders {} and {}", g.order(), h.order())]))
}

fn aug_error(e: AugError) -> CliError {
    match e {
        AugError::RankOutOfRange { .. } | AugError::PowerOutOfRange { .. } => usage(e),
        other => invalid(other),
    }
}

pub fn augbrace(n: Option<usize>, with_mpl: bool) -> Result<Output> {
    let n = n.ok_or_else(|| usage("-n is required"))?;
    if !with_mpl {
        let b = materialize_aug_brace(n).map_err(aug_error)?;
        let s = solution_from_brace(&b).map_err(invalid)?;
        return Ok(brace_output(
            &b,
            vec![
                format!("augmentation ideal of F2[(Z/2)^{n}], {} brace", b.side().as_str()),
                format!("associated solution square-free = {}", s.is_square_free()),
            ],
        ));
    }
    let r = aug_brace_mpl(n).map_err(aug_error)?;
    let dims: Vec<String> = r.power_dims.iter().map(usize::to_string).collect();
    let text = format!(
        "mpl = {}\n{}",
        r.mpl,
        lines(&[
            ("n", n.to_string()),
            ("order", format!("2^{}", r.power_dims[0])),
            ("power dimensions", dims.join(" ")),
            ("socle chain is power chain", r.socle_chain_is_power_chain.to_string()),
            ("square-free", r.square_free.to_string()),
            ("lambda group elementary abelian", r.lambda_group_elementary_abelian.to_string()),
            ("lambda group order", r.lambda_group_order.to_string()),
        ])
    );
    let mut j = serde_json::to_value(&r).expect("report serializes");
    j["mpl"] = mpl_json(r.mpl)["mpl"].clone();
    Ok(Output::ok(text, j))
}

pub fn class2(group: Option<&str>, center: Option<&[usize]>, generators: Option<&[usize]>) -> Result<Output> {
    let g = parse_group(group.ok_or_else(|| usage("--group is required"))?)?;
    if let (Some(z), Some(gens)) = (center, generators) {
        if let Some(&e) = z.iter().chain(gens).find(|&&e| e >= g.order()) {
            return Err(usage(format!("element {e} is outside 0..{}", g.order())));
        }
        let b = ault_watters_brace(&g, z, gens).map_err(invalid)?;
        return Ok(brace_output(&b, vec![format!("normal-form brace, center {}, generators {}", set_text(z), set_text(gens))]));
    }
    let (b, elems) = class2_brace(&g).map_err(invalid)?;
    let mut out = brace_output(&b, vec![format!("elements: {}", set_text(&elems))]);
    out.json["elements"] = json!(elems);
    Ok(out)
}

pub fn embed(p: Option<usize>, group: Option<&str>) -> Result<Output> {
    let p = p.ok_or_else(|| usage("-p is required"))?;
    let g = parse_group(group.ok_or_else(|| usage("--group is required"))?)?;
    let r = adjoint_embedding(p, &g).map_err(invalid)?;
    let text = lines(&[
        ("p", r.p.to_string()),
        ("group order", r.group_order.to_string()),
        ("ring order", r.ring_order.to_string()),
        ("injective", r.injective.to_string()),
        ("homomorphism", r.homomorphism.to_string()),
        ("image is a copy of the group", r.image_is_copy_of_group.to_string()),
    ]);
    let j = serde_json::to_value(&r).expect("report serializes");
    if r.injective && r.homomorphism && r.image_is_copy_of_group {
        Ok(Output::ok(text, j))
    } else {
        Ok(Output::failed(text, j))
    }
}

fn enum_error(e: EnumerateError) -> CliError {
    match e {
        EnumerateError::SizeCap { .. } | EnumerateError::UnknownTheorem(_) => usage(e),
        other => invalid(other),
    }
}

fn group_name(orders: &[usize]) -> String {
    if orders.is_empty() {
        return "Z1".into();
    }
    orders.iter().map(|o| format!("Z{o}")).collect::<Vec<_>>().join("x")
}

pub fn enumerate(n: Option<usize>, group: Option<&str>, order: Option<usize>, raw: bool, with_census: bool) -> Result<Output> {
    if with_census && n.is_none() {
        return Err(usage("--census needs -n"));
    }
    if let Some(n) = n {
        if with_census {
            if raw {
                return Err(usage("--census lists isomorphism classes and cannot be combined with --raw"));
            }
            let records = census(n).map_err(enum_error)?;
            let mut text: String = records.iter().map(|r| format!("{r}\n")).collect();
            text.push_str(&format!("count = {}\n", records.len()));
            return Ok(Output::ok(text, json!({ "kind": "solutions", "n": n, "count": records.len(), "census": records })));
        }
        let count = enumerate_solutions(n, !raw).map_err(enum_error)?.len();
        return Ok(Output::ok(
            format!("count = {count}\n"),
            json!({ "kind": "solutions", "n": n, "up_to_iso": !raw, "count": count }),
        ));
    }
    if let Some(spec) = group {
        let a = parse_group(spec)?;
        let count = enumerate_braces(&a, !raw).map_err(enum_error)?.len();
        return Ok(Output::ok(
            format!("count = {count}\n"),
            json!({ "kind": "braces", "group": spec, "up_to_iso": !raw, "count": count }),
        ));
    }
    let order = order.ok_or_else(|| usage("give -n, --group or --order"))?;
    if order == 0 {
        return Err(usage("order must be positive"));
    }
    let mut text = String::new();
    let mut parts = Vec::new();
    let mut total = 0;
    for (orders, a) in named::abelian_groups_of_order(order) {
        let k = if raw { enumerate_all_braces(&a) } else { enumerate_braces(&a, true) }
            .map_err(enum_error)?
            .len();
        let name = group_name(&orders);
        text.push_str(&format!("{name}: {k}\n"));
        parts.push(json!({ "group": name, "count": k }));
        total += k;
    }
    if !raw {
        debug_assert_eq!(total, braces_of_order(order).map_err(enum_error)?.len());
    }
    text.push_str(&format!("count = {total}\n"));
    Ok(Output::ok(text, json!({ "kind": "braces", "order": order, "up_to_iso": !raw, "by_group": parts, "count": total })))
}

pub fn sweep(theorem: Option<&str>, max_n: Option<usize>, raw: bool) -> Result<Output> {
    let name = theorem.ok_or_else(|| usage("--theorem is required"))?;
    let theorems: Vec<Theorem> = if name == "all" {
        THEOREMS.to_vec()
    } else {
        vec![name.parse().map_err(enum_error)?]
    };
    let mut blocks = Vec::new();
    let mut reports = Vec::new();
    let mut failed = false;
    for t in theorems {
        let max = max_n.unwrap_or(t.default_max());
        let r = corpus_sweep(t, max, raw).map_err(enum_error)?;
        let mut block = lines(&[
            ("theorem", t.name().to_string()),
            (if t.on_solutions() { "max-n" } else { "max-order" }, max.to_string()),
            ("corpus", if r.raw { "labelled" } else { "classes" }.to_string()),
            ("checked", r.checked.to_string()),
            ("applicable", r.applicable.to_string()),
        ]);
        if r.passed() {
            block.push_str("0 counterexamples\n");
        } else {
            failed = true;
            block.push_str(&format!("{} counterexample\n", r.counterexamples));
            block.push_str(&format!("witness: {}\n", r.witness.clone().unwrap_or_default()));
        }
        blocks.push(block);
        reports.push(r);
    }
    let json = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
    let text = blocks.join("\n");
    Ok(if failed { Output::failed(text, json) } else { Output::ok(text, json) })
}

enum Fixture {
    Solution(FiniteSolution),
    Brace(FiniteBrace),
}

fn fixture_list() -> Result<Vec<(&'static str, String, Fixture)>> {
    let six = six_point_solution();
    let sym3 = sym3_brace();
    let labels: Vec<String> = sym3_labels().iter().enumerate().map(|(i, l)| format!("{i}={l}")).collect();
    let mut out = vec![
        (
            "six-point.sol",
            "points 0..5 are x1..x6; sigma_4 = (1,2,3) = sigma_5^-1, sigma_6 = (4,5)(2,3)".to_string(),
            Fixture::Solution(six.clone()),
        ),
        ("sym3.brace", format!("left brace on Sym3 with additive group Z6: {}", labels.join(" ")), Fixture::Brace(sym3.clone())),
        ("sym3.sol", "solution of the Sym3 brace".to_string(), Fixture::Solution(solution_from_brace(&sym3).map_err(invalid)?)),
        (
            "trivial8.brace",
            "trivial brace on Z8".to_string(),
            Fixture::Brace(trivial_brace(&named::cyclic(8)).map_err(invalid)?),
        ),
    ];
    for (n, name) in [(1, "aug1.brace"), (2, "aug2.brace"), (3, "aug3.brace")] {
        let b = materialize_aug_brace(n).map_err(aug_error)?;
        out.push((name, format!("augmentation ideal of F2[(Z/2)^{n}]"), Fixture::Brace(b)));
    }
    for (g, name) in [(named::dihedral(4), "class2-dihedral8.brace"), (named::quaternion(), "class2-quaternion8.brace")] {
        let (b, elems) = class2_brace(&g).map_err(invalid)?;
        out.push((name, format!("class-2 brace on the elements {}", set_text(&elems)), Fixture::Brace(b)));
    }
    out.push((
        "ault-watters-dihedral8.brace",
        "normal-form brace on the dihedral group of order 8".to_string(),
        Fixture::Brace(ault_watters_brace(&named::dihedral(4), &[0, 2], &[1, 4]).map_err(invalid)?),
    ));
    out.push((
        "ault-watters-quaternion8.brace",
        "normal-form brace on the quaternion group".to_string(),
        Fixture::Brace(ault_watters_brace(&named::quaternion(), &[0, 1], &[2, 4]).map_err(invalid)?),
    ));
    out.push((
        "iyb-six-point.brace",
        "brace on the permutation group of the six-point solution".to_string(),
        Fixture::Brace(iyb_quotient_brace(&six).map_err(invalid)?.brace),
    ));
    Ok(out)
}

fn fixture_text(comment: &str, f: &Fixture) -> String {
    match f {
        Fixture::Solution(s) => write_solution(s, &[comment.to_string()]),
        Fixture::Brace(b) => write_brace(b, &[comment.to_string()]),
    }
}

fn fixture_json(comment: &str, f: &Fixture) -> Value {
    let mut j = match f {
        Fixture::Solution(s) => solution_json(s),
        Fixture::Brace(b) => brace_json(b),
    };
    j["comments"] = json!([comment]);
    j
}

pub fn fixtures(name: Option<&str>, out_dir: Option<&Path>) -> Result<Output> {
    let all = fixture_list()?;
    if let Some(name) = name {
        let (_, comment, f) = all
            .iter()
            .find(|(n, _, _)| *n == name || n.split('.').next() == Some(name))
            .ok_or_else(|| usage(format!("unknown fixture `{name}`")))?;
        return Ok(Output::ok(fixture_text(comment, f), fixture_json(comment, f)));
    }
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        for (n, comment, f) in &all {
            let path = dir.join(n);
            std::fs::write(&path, fixture_text(comment, f)).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        }
    }
    let text: String = all.iter().map(|(n, c, _)| format!("{n}: {c}\n")).collect();
    let list: Vec<Value> = all.iter().map(|(n, c, _)| json!({ "name": n, "description": c })).collect();
    Ok(Output::ok(text, json!({ "fixtures": list })))
}

fn suites_for(command: &str) -> &'static [Suite] {
    match command {
        "validate" => &[Suite::Format, Suite::Solution, Suite::Brace],
        "from-brace" | "double-cover" | "iyb-brace" => &[Suite::Bridge],
        "retract" | "ybgroup" => &[Suite::Solution],
        "mpl" => &[Suite::Solution, Suite::Bridge],
        "socle" | "quotient" | "product" => &[Suite::CoreAlgebra, Suite::Brace],
        "augbrace" | "class2" | "embed" | "fixtures" => &[Suite::Constructions],
        _ => &[Suite::Enumerate],
    }
}

pub fn selftest(command: &str) -> Output {
    let mut text = String::new();
    let mut records = Vec::new();
    let mut failures = 0;
    for &suite in suites_for(command) {
        for c in run_suite(suite) {
            if c.passed {
                text.push_str(&format!("PASS {suite}: {}\n", c.name));
            } else {
                failures += 1;
                text.push_str(&format!("FAIL {suite}: {} ({})\n", c.name, c.detail));
            }
            records.push(json!({ "suite": suite.name(), "check": c.name, "passed": c.passed, "detail": c.detail }));
        }
    }
    text.push_str(&format!("{} checks, {failures} failed\n", records.len()));
    let j = json!({ "command": command, "checks": records, "failed": failures });
    if failures == 0 {
        Output::ok(text, j)
    } else {
        Output::failed(text, j)
    }
}
