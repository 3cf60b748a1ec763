//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails or exceeds its time budget.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use binders::displayed::{
    check_displayed_category, check_displayed_monoidal, check_section, check_strict_monoidal, lift_section,
    total_category, total_monoidal, DisplayedCategory, DisplayedMonoidal, Section,
};
use binders::fincat::{check_category_laws, check_functor, FinCategory, FinFunctor, Mor, Obj};
use binders::monoidal::{
    check_monad, check_monoidal_laws, check_whiskered_bifunctor, classical_from_whiskered, endofunctor_monoidal,
    enumerate_monoids, monad_to_monoid, monoid_to_monad, whiskered_from_classical, ClassicalBifunctor,
    EndofunctorMonoidal, WhiskeredBifunctor, DEFAULT_FUNCTOR_BOUND,
};
use binders::omega::demos::param_initial_demo;
use binders::omega::{
    adamek_initial_algebra, evenness_step, gen_mendler_iteration, leaf, leftmost_leaf_family, leaves_family, node,
    numeral, parametrized_initiality, IdentityL, MendlerTarget, OmegaError, ParamAlgebraFamily, ParamBifunctor,
    ParamCorpus, ParamFunctor, ParamInitial, ParamMediators, PolyFunctor, PowersetG, Value,
};
use binders::report::LawReport;
use binders::signature::{parse_signature, signature_functor, BindingSignature};
use binders::syntax::{
    check_adamek_oracle, check_monad_laws_with, enumerate_terms, substitute, substitute_without_lift,
    value_to_term, LawBounds, Tm,
};

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: Check,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "substitution monad laws (lambda, depth 3, scope 2) and lift fault",
        budget: Duration::from_secs(60),
        run: monad_laws,
    },
    Criterion {
        id: 2,
        name: "whiskered and classical bifunctors round-trip",
        budget: Duration::from_secs(10),
        run: whiskered_classical,
    },
    Criterion {
        id: 3,
        name: "monoids in endofunctors are monads; structure maps are identities",
        budget: Duration::from_secs(10),
        run: monoids_are_monads,
    },
    Criterion {
        id: 4,
        name: "displayed categories totalize; lifted sections split the projection",
        budget: Duration::from_secs(10),
        run: displayed_layer,
    },
    Criterion {
        id: 5,
        name: "chain stages equal enumerated terms",
        budget: Duration::from_secs(30),
        run: adamek_oracle,
    },
    Criterion {
        id: 6,
        name: "evenness by generalized Mendler iteration",
        budget: Duration::from_secs(10),
        run: mendler_evenness,
    },
    Criterion {
        id: 7,
        name: "parametrized initiality for labelled binary trees",
        budget: Duration::from_secs(60),
        run: param_initiality,
    },
    Criterion {
        id: 8,
        name: "parameter functor needs no cocontinuity witness",
        budget: Duration::from_secs(60),
        run: no_cocontinuity,
    },
    Criterion {
        id: 9,
        name: "negative fixtures fail and malformed inputs error",
        budget: Duration::from_secs(60),
        run: negative_paths,
    },
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(what: &str, r: &LawReport) -> Result<(), String> {
    ensure(r.passed() && r.checks_run > 0, || {
        let first = r.violations.first().map(|v| format!("{}: {}", v.law, v.witness));
        format!("{what}: {} checks, {} violations, first {first:?}", r.checks_run, r.violations.len())
    })
}

fn lambda() -> BindingSignature {
    BindingSignature::lambda()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn two_chain_endofunctors() -> Result<EndofunctorMonoidal, String> {
    endofunctor_monoidal(Arc::new(FinCategory::chain(2)), DEFAULT_FUNCTOR_BOUND).map_err(|e| e.to_string())
}

fn monad_laws() -> Result<String, String> {
    let sig = parse_signature(&std::fs::read_to_string(fixture("lam.sig")).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(sig.constructors == lambda().constructors, || "lam.sig is not the lambda signature".into())?;
    let bounds = LawBounds::new(3, 2);
    let good = check_monad_laws_with(&sig, bounds, substitute);
    passes("monad laws", &good)?;
    let bad = check_monad_laws_with(&sig, bounds, substitute_without_lift);
    let witness = bad
        .violations_of("associativity")
        .find(|v| v.witness.contains("abs"))
        .ok_or("fault produced no associativity violation mentioning abs")?;
    Ok(format!(
        "{} checks; fault: {} violations, e.g. {}",
        good.checks_run,
        bad.violations.len(),
        witness.witness
    ))
}

/// Every object assignment on `walking_arrow × walking_arrow`, with each
/// morphism sent to the unique arrow between the image endpoints when there
/// is one and to an arbitrary arrow otherwise.
fn walking_arrow_corpus() -> (Arc<FinCategory>, Vec<ClassicalBifunctor>) {
    let c = Arc::new(FinCategory::walking_arrow());
    let mut corpus = Vec::new();
    for mask in 0u32..16 {
        let cc = c.clone();
        let pick = move |x: Obj, y: Obj| Obj(((mask >> (2 * x.0 + y.0)) & 1) as usize);
        let on_mor = move |g: Mor, h: Mor| {
            let (s, t) = (pick(cc.src(g), cc.src(h)), pick(cc.tgt(g), cc.tgt(h)));
            cc.hom(s, t).first().copied().unwrap_or(Mor(0))
        };
        corpus.push(ClassicalBifunctor::from_fn(c.clone(), pick, on_mor));
    }
    (c, corpus)
}

fn round_trip(t: &WhiskeredBifunctor, what: &str) -> Result<bool, String> {
    let whiskered_ok = check_whiskered_bifunctor(t).map_err(|e| e.to_string())?.passed();
    let classical = classical_from_whiskered(t).ok();
    let classical_ok = match &classical {
        Some(k) => check_functor(&k.functor).map_err(|e| e.to_string())?.passed(),
        None => false,
    };
    ensure(whiskered_ok == classical_ok, || {
        format!("{what}: whiskered check {whiskered_ok}, classical check {classical_ok}")
    })?;
    if let Some(k) = classical {
        let back = whiskered_from_classical(&k).map_err(|e| e.to_string())?;
        ensure(back == *t, || format!("{what}: whiskered -> classical -> whiskered changed the tables"))?;
    }
    Ok(whiskered_ok)
}

fn whiskered_classical() -> Result<String, String> {
    let (_, corpus) = walking_arrow_corpus();
    let mut lawful = 0;
    for (i, k) in corpus.iter().enumerate() {
        let functor_ok = check_functor(&k.functor).map_err(|e| e.to_string())?.passed();
        let t = whiskered_from_classical(k).map_err(|e| e.to_string())?;
        let whiskered_ok = round_trip(&t, &format!("candidate {i}"))?;
        ensure(functor_ok == whiskered_ok, || format!("candidate {i}: functor {functor_ok}, whiskered {whiskered_ok}"))?;
        if functor_ok {
            lawful += 1;
            let back = classical_from_whiskered(&t).map_err(|e| e.to_string())?;
            ensure(back.functor == k.functor, || format!("candidate {i}: classical round trip changed the tables"))?;
        }
    }
    // Bifunctors 2×2 -> 2 on a thin category are the monotone maps of the grid.
    ensure(lawful == 6, || format!("{lawful} lawful bifunctors, expected 6"))?;

    let e = two_chain_endofunctors()?;
    ensure(round_trip(&e.monoidal.tensor, "endofunctor composition")?, || {
        "endofunctor composition is not a bifunctor".into()
    })?;
    let k = classical_from_whiskered(&e.monoidal.tensor).map_err(|e| e.to_string())?;
    let kk = classical_from_whiskered(&whiskered_from_classical(&k).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(kk.functor == k.functor, || "endofunctor classical round trip changed the tables".into())?;
    Ok(format!("{} candidates, {lawful} lawful; endofunctor tensor exact", corpus.len()))
}

fn monoids_are_monads() -> Result<String, String> {
    let e = two_chain_endofunctors()?;
    let c = &e.category;
    let m = &e.monoidal;
    let monoids = enumerate_monoids(m).map_err(|e| e.to_string())?;
    ensure(!monoids.is_empty(), || "no monoids found".into())?;
    for mon in &monoids {
        let t = monoid_to_monad(&e, mon).map_err(|e| e.to_string())?;
        passes("monad laws", &check_monad(&t).map_err(|e| e.to_string())?)?;
        let back = monad_to_monoid(&e, &t).map_err(|e| e.to_string())?;
        ensure(back == *mon, || format!("monoid {mon:?} came back as {back:?}"))?;
    }
    let identity_at = |mor: Mor, functor: Obj| -> Result<(), String> {
        let nt = &e.transformations[mor.0];
        for x in c.objects() {
            let want = c.id(e.functors[functor.0].obj(x));
            ensure(nt.component(x) == want, || {
                format!("{} at {} is not an identity", m.base.mor_name(mor), c.obj_name(x))
            })?;
        }
        Ok(())
    };
    let mut components = 0;
    for f in m.base.objects() {
        for table in [&m.lunitor, &m.lunitor_inv, &m.runitor, &m.runitor_inv] {
            identity_at(table[f.0], f)?;
            components += c.object_count();
        }
    }
    for f in m.base.objects() {
        for g in m.base.objects() {
            for h in m.base.objects() {
                let fgh = m.tensor(m.tensor(f, g), h);
                identity_at(m.associator_at(f, g, h), fgh)?;
                identity_at(m.associator_inv_at(f, g, h), fgh)?;
                components += 2 * c.object_count();
            }
        }
    }
    Ok(format!("{} monoids; {components} structure components are identities", monoids.len()))
}

fn displayed_layer() -> Result<String, String> {
    let e = two_chain_endofunctors()?;
    let dm = DisplayedMonoidal::trivial(e.monoidal.clone());
    passes("displayed monoidal", &check_displayed_monoidal(&dm).map_err(|e| e.to_string())?)?;
    let (total, p) = total_monoidal(&dm).map_err(|e| e.to_string())?;
    let laws = check_monoidal_laws(&total).map_err(|e| e.to_string())?;
    passes("total monoidal", &laws)?;
    passes("projection", &check_functor(&p).map_err(|e| e.to_string())?)?;
    passes("strict projection", &check_strict_monoidal(&total, &dm.base, &p))?;

    let d = Arc::new(DisplayedCategory::load(&fixture("three_object.json")).map_err(|e| e.to_string())?);
    passes("three-object displayed", &check_displayed_category(&d))?;
    let tc = total_category(&d);
    passes("three-object total", &check_category_laws(&tc.category))?;
    let (no, nm) = (tc.category.object_count(), tc.category.morphism_count());
    ensure((no, nm) == (3, 4), || format!("total has {no} objects and {nm} morphisms"))?;

    let b = d.base.clone();
    let mut on_mor = vec![d.mor("id_p").unwrap(); b.morphism_count()];
    on_mor[b.mor("id_b").unwrap().0] = d.mor("id_q1").unwrap();
    on_mor[b.mor("f").unwrap().0] = d.mor("k").unwrap();
    let s = Section {
        disp: d.clone(),
        on_obj: vec![d.obj("p").unwrap(), d.obj("q1").unwrap()],
        on_mor,
    };
    passes("section", &check_section(&s).map_err(|e| e.to_string())?)?;
    let lifted = lift_section(&s).map_err(|e| e.to_string())?;
    let composite = lifted.then(&tc.projection).map_err(|e| e.to_string())?;
    ensure(composite == FinFunctor::identity(b), || "projection after lifted section is not the identity".into())?;

    let base = dm.disp.base.clone();
    let trivial = Section {
        disp: dm.disp.clone(),
        on_obj: base.objects().map(|x| binders::displayed::DispObj(x.0)).collect(),
        on_mor: base.morphisms().map(|f| binders::displayed::DispMor(f.0)).collect(),
    };
    let lifted = lift_section(&trivial).map_err(|e| e.to_string())?;
    let composite = lifted.then(&total_category(&dm.disp).projection).map_err(|e| e.to_string())?;
    ensure(composite == FinFunctor::identity(base), || "trivial section does not split the projection".into())?;
    Ok(format!("total monoidal: {} checks; three-object total: {no} objects, {nm} morphisms", laws.checks_run))
}

fn adamek_oracle() -> Result<String, String> {
    let sig = lambda();
    let r = check_adamek_oracle(&sig, &[1, 2, 3], &[0, 1, 2]);
    passes("oracle", &r)?;
    ensure(r.checks_run == 9, || format!("{} comparisons, expected 9", r.checks_run))?;
    let alg = adamek_initial_algebra(Arc::new(signature_functor(&sig)));
    let stage: Vec<Tm> = alg
        .stage(2, 0)
        .iter()
        .map(|v| value_to_term(&sig, v))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let want = vec![Tm::op("abs", vec![Tm::var(0)])];
    ensure(stage == want, || format!("level 2 at scope 0 is {stage:?}"))?;
    let enumerated: Vec<Tm> = enumerate_terms(&sig, 0, 2).into_iter().map(|t| t.body).collect();
    ensure(enumerated == want, || format!("depth < 2 at scope 0 enumerates {enumerated:?}"))?;
    let sizes: Vec<usize> = (0..=2).map(|n| alg.stage(3, n).len()).collect();
    Ok(format!("9 level/scope pairs agree; level 3 sizes {sizes:?}"))
}

fn mendler_evenness() -> Result<String, String> {
    let alg = Arc::new(adamek_initial_algebra(Arc::new(PolyFunctor::naturals())));
    let bools = MendlerTarget::finite(vec![Value::Bool(false), Value::Bool(true)]);
    let it = gen_mendler_iteration(alg, Arc::new(IdentityL), bools, evenness_step(), 3).map_err(|e| e.to_string())?;
    passes("fixed point", &it.check_fixed_point(6))?;
    let h = |k| it.apply(&numeral(k)).map_err(|e| e.to_string());
    ensure(h(3)? == Value::Bool(false), || "h(3) is not false".into())?;
    ensure(h(4)? == Value::Bool(true), || "h(4) is not true".into())?;
    for level in 1..=4 {
        let n = it.count_solutions(level, 10_000).map_err(|e| e.to_string())?;
        ensure(n == 1, || format!("{n} solutions at level {level}"))?;
    }
    Ok("fixed point at levels <= 6; unique at levels <= 4".into())
}

fn param_initiality() -> Result<String, String> {
    ensure(ParamCorpus::standard().objects.len() == 3, || "parameter corpus is not 3 objects".into())?;
    let r = param_initial_demo(3).map_err(|e| e.to_string())?;
    passes("param demo", &r)?;
    let pb = ParamBifunctor::trees();
    let nine = ParamInitial::new(&pb, ParamCorpus::discrete(vec![(1..=9).map(Value::Nat).collect()]));
    let hs = parametrized_initiality(&pb, &nine, &leftmost_leaf_family(), 3).map_err(|e| e.to_string())?;
    let t = node(node(leaf(Value::Nat(2)), leaf(Value::Nat(5))), leaf(Value::Nat(9)));
    let got = hs.apply(0, &t).map_err(|e| e.to_string())?;
    ensure(got == Value::Nat(2), || format!("leftmost leaf of {t} is {got}"))?;
    Ok(format!("{} checks; leftmost leaf of {t} = {got}", r.checks_run))
}

/// Finite powerset implemented against the bare interface: only a carrier
/// and an action on maps.
struct Subsets;

impl ParamFunctor for Subsets {
    fn carrier(&self, z: &[Value]) -> Vec<Value> {
        PowersetG.carrier(z)
    }
    fn map(&self, f: &dyn Fn(&Value) -> Value, v: &Value) -> Value {
        PowersetG.map(f, v)
    }
}

fn no_cocontinuity() -> Result<String, String> {
    // These bindings stop compiling if the initiality path grows another input.
    let solve: fn(&ParamBifunctor, &ParamInitial, &ParamAlgebraFamily, usize) -> Result<ParamMediators, OmegaError> =
        parametrized_initiality;
    let build: fn(&ParamBifunctor, ParamCorpus) -> ParamInitial = ParamInitial::new;
    let ParamAlgebraFamily { g: _, phi } = leaves_family();
    let fam = ParamAlgebraFamily {
        g: Arc::new(Subsets),
        phi,
    };
    let pb = ParamBifunctor::trees();
    let mu = build(&pb, ParamCorpus::standard());
    let hs = solve(&pb, &mu, &fam, 3).map_err(|e| e.to_string())?;
    passes("powerset family", &hs.report)?;
    let t = node(leaf(Value::Nat(2)), node(leaf(Value::Nat(1)), leaf(Value::Nat(2))));
    let got = hs.apply(1, &t).map_err(|e| e.to_string())?;
    let want = Value::Set([Value::Nat(1), Value::Nat(2)].into_iter().collect());
    ensure(got == want, || format!("leaves of {t} are {got}"))?;
    Ok(format!("{} checks with G = finite powerset", hs.report.checks_run))
}

fn run_cli(args: &[&str]) -> Result<(i32, serde_json::Value), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_binders"))
        .arg("--json")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by a signal")?;
    let report = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: {e}"))?;
    Ok((code, report))
}

fn negative_paths() -> Result<String, String> {
    let f = |name: &str| fixture(name).display().to_string();
    let failing = [
        ("check-monoidal", "broken_pentagon.json", "pentagon"),
        ("check-cat", "broken_unit_law.json", "left-unit"),
        ("check-displayed", "missing_disp_comp.json", "displayed composition-total"),
    ];
    for (cmd, file, law) in failing {
        let (code, report) = run_cli(&[cmd, &f(file)])?;
        ensure(code == 1, || format!("{file}: exit {code}"))?;
        let named = report["violations"]
            .as_array()
            .is_some_and(|vs| vs.iter().any(|v| v["law"] == law));
        ensure(named, || format!("{file}: no `{law}` violation"))?;
    }
    let malformed = [
        ["check-cat", "truncated.json"],
        ["check-cat", "dangling.json"],
        ["check-displayed", "missing_base.json"],
    ];
    for [cmd, file] in malformed {
        let (code, report) = run_cli(&[cmd, &f(file)])?;
        ensure(code == 2 && report["status"] == "error", || format!("{file}: exit {code}"))?;
    }
    let (code, _) = run_cli(&["gen-terms", "--sig", &f("duplicate.sig")])?;
    ensure(code == 2, || format!("duplicate.sig: exit {code}"))?;
    Ok("3 failing fixtures exit 1; 4 malformed inputs exit 2".into())
}

fn main() {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed <= c.budget => "PASS",
            _ => "FAIL",
        };
        let detail = match result {
            Ok(d) if elapsed <= c.budget => d,
            Ok(d) => format!("over budget; {d}"),
            Err(e) => e,
        };
        println!(
            "criterion {}: {verdict} {} [{:.2}s / {}s] {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", CRITERIA.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", CRITERIA.len());
}
