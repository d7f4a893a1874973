//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybrace::brace::{
    brace_isomorphic, lambda_map, radical_ring_violation, socle, theorem_square_report, validate_brace, FiniteBrace,
};
use ybrace::bridge::{
    iyb_quotient_brace, solution_from_brace, DescentPolicy, IStructure, StructureGroupElement,
};
use ybrace::constructions::{
    class2_brace, materialize_aug_brace, six_point_solution, sym3_brace,
};
use ybrace::enumerate::{
    brace_corpus, corpus_sweep, enumerate_all_solutions, enumerate_brace_classes, enumerate_solution_classes, Theorem,
};
use ybrace::group::named;
use ybrace::perm::all_permutations;
use ybrace::solution::{solution_isomorphic, FiniteSolution, Mpl};
use ybrace::{validate_group, CayleyGroup, Permutation};

type Verdict = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn cli(args: &[&str]) -> Result<(i32, String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ybrace")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), start.elapsed()))
}

fn sweep(t: Theorem, max: usize, raw: bool) -> Result<String, String> {
    let r = corpus_sweep(t, max, raw).map_err(|e| e.to_string())?;
    ensure(r.passed(), format!("counterexample: {}", r.witness.clone().unwrap_or_default()))?;
    Ok(format!("{} objects, {} applicable, 0 counterexamples", r.checked, r.applicable))
}

fn lambda_group_elementary_abelian(b: &FiniteBrace) -> bool {
    let maps: Vec<Permutation> = (0..b.order()).map(|a| lambda_map(b, a)).collect();
    maps.iter().all(|p| (p * p).is_identity()) && maps.iter().all(|p| maps.iter().all(|q| p * q == q * p))
}

fn criterion_1() -> Verdict {
    for n in 1..=4 {
        let (code, out, took) = cli(&["augbrace", "-n", &n.to_string(), "--mpl"])?;
        ensure(code == 0, format!("n={n}: exit {code}"))?;
        ensure(out.starts_with(&format!("mpl = {n}\n")), format!("n={n}: {}", out.lines().next().unwrap_or("")))?;
        ensure(out.contains("square-free = true"), format!("n={n}: not square-free"))?;
        ensure(out.contains("lambda group elementary abelian = true"), format!("n={n}: lambda group"))?;
        let limit = if n <= 3 { Duration::from_secs(5) } else { Duration::from_secs(120) };
        ensure(took < limit, format!("n={n}: took {took:?}"))?;
    }
    for n in 1..=3 {
        let b = materialize_aug_brace(n).map_err(|e| e.to_string())?;
        let s = solution_from_brace(&b).map_err(|e| e.to_string())?;
        ensure(s.mpl() == Mpl::Level(n), format!("materialized n={n}: mpl {}", s.mpl()))?;
        ensure(s.is_square_free(), format!("materialized n={n}: not square-free"))?;
        ensure(lambda_group_elementary_abelian(&b), format!("materialized n={n}: lambda group"))?;
    }
    Ok("mpl = n for n = 1..4, square-free, elementary abelian lambda group".into())
}

fn criterion_2() -> Verdict {
    let raw = sweep(Theorem::AbelianRetractable, 5, true)?;
    let classes = sweep(Theorem::AbelianRetractable, 6, false)?;
    Ok(format!("all labelled solutions n <= 5: {raw}; classes n <= 6: {classes}"))
}

fn criterion_3() -> Verdict {
    sweep(Theorem::RetractSocle, 8, false)
}

fn criterion_4() -> Verdict {
    sweep(Theorem::DoubleCover, 8, false)
}

fn criterion_5() -> Verdict {
    let b = sym3_brace();
    ensure(b.is_left() && !b.side().is_right(), "Sym3 brace side")?;
    ensure(socle(&b).map_err(|e| e.to_string())?.len() == 3, "Sym3 socle order")?;
    let s = solution_from_brace(&b).map_err(|e| e.to_string())?;
    ensure(s.mpl() == Mpl::Level(2), "Sym3 solution mpl")?;
    ensure(s.yb_group().map_err(|e| e.to_string())?.order() == 2, "Sym3 solution group order")?;
    let six = six_point_solution();
    ensure(six.is_square_free(), "six-point not square-free")?;
    let g = six.yb_group().map_err(|e| e.to_string())?.cayley();
    ensure(g.is_isomorphic(&named::symmetric(3)), "six-point group is not Sym3")?;
    ensure(g.nilpotency_class().is_none(), "six-point group is nilpotent")?;
    let iyb = iyb_quotient_brace(&six).map_err(|e| e.to_string())?;
    let t = solution_from_brace(&iyb.brace).map_err(|e| e.to_string())?;
    ensure(!t.is_square_free(), "IYB brace solution is square-free")?;
    Ok("Sym3 brace and six-point solution regressions hold".into())
}

fn criterion_6() -> Verdict {
    let mut named = Vec::new();
    for n in 1..=3 {
        named.push((format!("aug-{n}"), materialize_aug_brace(n).map_err(|e| e.to_string())?));
    }
    for (name, g) in [("dihedral-8", named::dihedral(4)), ("quaternion-8", named::quaternion())] {
        named.push((format!("class2-{name}"), class2_brace(&g).map_err(|e| e.to_string())?.0));
    }
    for (name, b) in &named {
        ensure((0..b.order()).all(|a| b.lambda(a, a) == a), format!("{name}: not square-free"))?;
        theorem_square_report(b).map_err(|e| format!("{name}: {e}"))?;
    }
    let corpus = sweep(Theorem::SquareStructure, 8, false)?;
    let reports: Vec<_> = brace_corpus(8)
        .map_err(|e| e.to_string())?
        .iter()
        .filter_map(|(_, b)| theorem_square_report(b).ok())
        .collect();
    let alt = reports.iter().filter(|r| r.alt_product_matches).count();
    Ok(format!("{} named braces; corpus: {corpus}; alternate product form holds on {alt}/{}", named.len(), reports.len()))
}

fn criterion_7() -> Verdict {
    let corpus = sweep(Theorem::RadicalRoundtrip, 8, false)?;
    ensure(radical_ring_violation(&sym3_brace()).is_some(), "star laws hold on Sym3")?;
    Ok(format!("{corpus}; star laws fail on Sym3"))
}

fn criterion_8() -> Verdict {
    let sym3 = sym3_brace();
    let fixtures: Vec<(&str, FiniteSolution)> = vec![
        ("six-point", six_point_solution()),
        ("sym3", solution_from_brace(&sym3).map_err(|e| e.to_string())?),
        ("aug-2", solution_from_brace(&materialize_aug_brace(2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?),
        ("trivial-4", FiniteSolution::trivial(4)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let samples = 1000;
    for (name, s) in &fixtures {
        let st = IStructure::new(s);
        let n = s.size();
        for _ in 0..samples {
            let mut v = || StructureGroupElement { vector: (0..n).map(|_| rng.gen_range(-5..=5)).collect() };
            let (a, b) = (v(), v());
            let lhs = st.phi_eval(&st.sg_mul(&a, &b).vector);
            let rhs = &st.phi_eval(&a.vector) * &st.phi_eval(&b.vector);
            ensure(lhs == rhs, format!("{name}: cocycle law fails at {:?}, {:?}", a.vector, b.vector))?;
            let first = st.phi_with_policy(&a.vector, DescentPolicy::First, &mut rng);
            let random = st.phi_with_policy(&a.vector, DescentPolicy::Random, &mut rng);
            ensure(first == random, format!("{name}: descent order matters at {:?}", a.vector))?;
        }
    }
    Ok(format!("{} fixtures x {samples} vector pairs, 0 failures", fixtures.len()))
}

fn braid(sigma: &[Permutation]) -> bool {
    let n = sigma.len();
    let inv: Vec<Permutation> = sigma.iter().map(Permutation::inverse).collect();
    let r = |x: usize, y: usize| {
        let u = sigma[x].apply(y);
        (u, inv[u].apply(x))
    };
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (u, v) = r(x, y);
            r(u, v) == (x, y)
                && (0..n).all(|z| {
                    let (a, b) = r(x, y);
                    let (b, c) = r(b, z);
                    let (a, b) = r(a, b);
                    let (q, w) = r(y, z);
                    let (p, q) = r(x, q);
                    let (q, w) = r(q, w);
                    (a, b, c) == (p, q, w)
                })
        })
    })
}

fn classes<T>(items: &[T], iso: impl Fn(&T, &T) -> bool) -> usize {
    let mut reps: Vec<&T> = Vec::new();
    for x in items {
        if !reps.iter().any(|r| iso(r, x)) {
            reps.push(x);
        }
    }
    reps.len()
}

fn criterion_9() -> Verdict {
    let mut report = Vec::new();
    for n in 2..=3 {
        let perms = all_permutations(n);
        let mut dense = Vec::new();
        for mut code in 0..perms.len().pow(n as u32) {
            let sigma: Vec<Permutation> = (0..n)
                .map(|_| {
                    let p = perms[code % perms.len()].clone();
                    code /= perms.len();
                    p
                })
                .collect();
            if braid(&sigma) {
                dense.push(FiniteSolution::from_permutations(sigma).map_err(|e| e.to_string())?);
            }
        }
        let raw = enumerate_all_solutions(n).map_err(|e| e.to_string())?;
        ensure(raw.len() == dense.len(), format!("n={n}: raw {} vs dense {}", raw.len(), dense.len()))?;
        ensure(raw.iter().all(|s| dense.contains(s)), format!("n={n}: raw sets differ"))?;
        let iso = classes(&dense, |a, b| solution_isomorphic(a, b).is_some());
        let found = enumerate_solution_classes(n).map_err(|e| e.to_string())?.len();
        ensure(found == iso, format!("n={n}: classes {found} vs dense {iso}"))?;
        report.push(format!("n={n}: {} raw, {iso} classes", dense.len()));
    }
    let mut groups: Vec<CayleyGroup> = Vec::new();
    for mut code in 0..4usize.pow(9) {
        let mut rows: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| if a == 0 { b } else if b == 0 { a } else { 0 }).collect()).collect();
        for row in rows.iter_mut().skip(1) {
            for cell in row.iter_mut().skip(1) {
                *cell = code % 4;
                code /= 4;
            }
        }
        if let Ok(g) = validate_group(&rows) {
            groups.push(g);
        }
    }
    let mut braces = Vec::new();
    for add in groups.iter().filter(|g| g.is_abelian()) {
        for mul in &groups {
            if let Ok(b) = validate_brace(&add.rows(), &mul.rows()) {
                if b.is_left() {
                    braces.push(b);
                }
            }
        }
    }
    let dense = classes(&braces, |a, b| brace_isomorphic(a, b).is_some());
    let found = enumerate_brace_classes(&named::cyclic(4)).map_err(|e| e.to_string())?.len()
        + enumerate_brace_classes(&named::abelian(&[2, 2])).map_err(|e| e.to_string())?.len();
    ensure(found == dense, format!("order 4: {found} vs dense {dense}"))?;
    report.push(format!("order-4 braces: {dense}"));
    Ok(report.join("; "))
}

fn criterion_10() -> Verdict {
    let r = sweep(Theorem::TwosidedSocle, 8, false)?;
    let corpus = brace_corpus(8).map_err(|e| e.to_string())?;
    let nontrivial = corpus.iter().filter(|(_, b)| b.is_two_sided() && b.order() > 1).count();
    ensure(nontrivial > 0, "no two-sided braces in the corpus")?;
    Ok(format!("{r} ({nontrivial} nontrivial two-sided)"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("augmentation ideal level", criterion_1),
        ("abelian group implies retractable", criterion_2),
        ("retraction is the socle quotient", criterion_3),
        ("double cover", criterion_4),
        ("fixture regressions", criterion_5),
        ("square-free brace structure", criterion_6),
        ("radical ring round trip", criterion_7),
        ("structure group evaluator", criterion_8),
        ("enumeration oracles", criterion_9),
        ("two-sided braces have socle", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let took = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({took:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({took:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
