//! Acceptance criteria, one pass/fail line each. Exits non-zero when any
//! criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use mstt::{parse_program, parse_type, Program, TheoryChoice};
use mstt_core::extract::{extractable_for, HostVal};
use mstt_core::gen::{validate_closed, Gen, GenProfile};
use mstt_core::guarded::{self, CONSTANTLY, FOREVER, LATER, OMEGA, STAR};
use mstt_core::instance::Instantiation;
use mstt_core::mode_theory::{ModalityExpr, Mode};
use mstt_core::model::ty::check_presheaf_laws;
use mstt_core::model::{mod_elim, mod_intro, mod_ty, BaseCategory, Obj, SemCtx, SemTm};
use mstt_core::param::{self, DiffNat, Sign, SignNat, WEDGE};
use mstt_core::syntax::{CtxExpr, TmExpr, TyExpr};
use rand::rngs::SmallRng;
use rand::SeedableRng;

type Outcome = Result<String, String>;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn read(rel: &str) -> String {
    std::fs::read_to_string(root().join(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

fn mstt(args: &[&str]) -> (i32, String, String) {
    let out =
        Command::new(env!("CARGO_BIN_EXE_mstt")).args(args).current_dir(root()).output().expect("run mstt");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn stream_of_naturals() -> Outcome {
    let start = Instant::now();
    for n in 0..=8u32 {
        let stage = n.to_string();
        let (code, out, err) =
            mstt(&["eval", "examples/guarded/g-nats.mstt", "--name", "g-nats", "--stage", &stage]);
        let want = format!("[{}]\n", (0..=n).map(|k| k.to_string()).collect::<Vec<_>>().join(","));
        ensure(code == 0 && out == want, || {
            format!("stage {n}: exit {code}, got {out:?}, want {want:?} {err}")
        })?;
    }
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("stages 0..8 exact in {took:?}"))
}

fn extraction() -> Outcome {
    let start = Instant::now();
    let (code, out, err) =
        mstt(&["extract", "examples/guarded/streams.mstt", "--name", "nats", "--take", "10"]);
    let want = format!("{}\n", (0..10).map(|k: u32| k.to_string()).collect::<Vec<_>>().join(" "));
    ensure(code == 0 && out == want, || format!("exit {code}, got {out:?}, want {want:?} {err}"))?;
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("0..9 in {took:?}"))
}

fn load(t: TheoryChoice, rel: &str) -> (Instantiation, Program) {
    let inst = t.instantiation();
    let prog = parse_program(&inst, &read(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"));
    (inst, prog)
}

fn elaborated_types() -> Outcome {
    // Expected types at A = B = Nat.
    let expected = [
        ("g-map", "⟨constantly | Nat ⇛ Nat⟩ ⇛ GStream Nat ⇛ GStream Nat"),
        ("g-nats", "GStream Nat"),
        ("cons'", "Nat ⇛ ⟨forever | GStream Nat⟩ ⇛ ⟨forever | GStream Nat⟩"),
        ("nats", "⟨forever | GStream Nat⟩"),
    ];
    let (inst, prog) = load(TheoryChoice::Guarded, "examples/guarded/streams.mstt");
    let ck = inst.checker();
    for (name, want) in expected {
        let d = prog.get(name).ok_or(format!("missing def {name}"))?;
        let got = ck.infer_closed(&d.body, &d.mode).map_err(|e| format!("{name}: {e}"))?.ty.to_string();
        ensure(got == want, || format!("{name}: got {got}, want {want}"))?;
    }
    let stream_prime = parse_type(&inst, "<forever | GStream Nat>").map_err(|e| e.to_string())?;
    ck.interpret_ty(&stream_prime, &Mode::new(STAR)).map_err(|e| format!("Stream': {e}"))?;
    ensure(stream_prime.to_string() == "⟨forever | GStream Nat⟩", || {
        format!("Stream' renders as {stream_prime}")
    })?;
    let (inst, prog) = load(TheoryChoice::Guarded, "examples/guarded/g-flipfst.mstt");
    let ck = inst.checker();
    let flip = prog.get("g-flipFst").unwrap();
    ck.infer_closed(&flip.body, &flip.mode).map_err(|e| format!("g-flipFst itself: {e}"))?;
    let bad = prog.get("g-nats-flip").unwrap();
    match ck.infer_closed(&bad.body, &bad.mode) {
        Ok(r) => Err(format!("g-flipFst variant accepted at {}", r.ty)),
        Err(e) => Ok(format!("4 defs + Stream' exact; flipFst variant rejected by {}", e.rule)),
    }
}

/// Canonical form of a guarded type under the two modality equations,
/// computed by string rewriting on atom lists. Two types are equivalent
/// exactly when their canonical forms agree.
fn canon(ty: &TyExpr) -> String {
    match ty {
        TyExpr::Nat => "N".into(),
        TyExpr::Bool => "B".into(),
        TyExpr::Arrow(a, b) => format!("({}->{})", canon(a), canon(b)),
        TyExpr::Prod(a, b) => format!("({}*{})", canon(a), canon(b)),
        TyExpr::Ext(c, args) => format!("{c}({})", args.iter().map(canon).collect::<Vec<_>>().join(",")),
        TyExpr::Modal(mu, a) => {
            let mut atoms: Vec<String> = mu.flatten().iter().map(|s| s.to_string()).collect();
            loop {
                let hit =
                    atoms.windows(2).position(|w| w[0] == FOREVER && (w[1] == LATER || w[1] == CONSTANTLY));
                let Some(i) = hit else { break };
                if atoms[i + 1] == LATER {
                    atoms.remove(i + 1);
                } else {
                    atoms.drain(i..i + 2);
                }
            }
            format!("<{}|{}>", atoms.join(" "), canon(a))
        }
    }
}

fn random_types(profile: GenProfile, m: &str, n: usize, seed: u64) -> Vec<TyExpr> {
    let inst = guarded::instantiation();
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut gen = Gen::new(inst.checker(), &mut rng, profile);
    (0..n).map(|_| gen.ty(&Mode::new(m), 3)).collect()
}

fn type_equivalence() -> Outcome {
    let inst = guarded::instantiation();
    let ck = inst.checker();
    let (star, omega) = (Mode::new(STAR), Mode::new(OMEGA));
    let (forever, later, constantly) =
        (ModalityExpr::atom(FOREVER), ModalityExpr::atom(LATER), ModalityExpr::atom(CONSTANTLY));
    let omega_tys = random_types(guarded::gen_profile(), OMEGA, 40, 41);
    let star_tys = random_types(guarded::gen_profile(), STAR, 40, 43);
    for (t, s) in omega_tys.iter().zip(&star_tys).take(20) {
        let pairs = [
            (TyExpr::modal(forever.then(&later), t.clone()), TyExpr::modal(forever.clone(), t.clone())),
            (TyExpr::modal(forever.then(&constantly), s.clone()), TyExpr::modal(ModalityExpr::Id, s.clone())),
        ];
        for (l, r) in pairs {
            ensure(canon(&l) == canon(&r), || format!("oracle disagrees on {l} / {r}"))?;
            let iso = ck.ty_equiv(&l, &r, &star).map_err(|e| e.to_string())?;
            let (sl, sr) = (ck.interpret_ty(&l, &star).unwrap(), ck.interpret_ty(&r, &star).unwrap());
            iso.check(&sl, &sr, 5, 2).map_err(|e| format!("{l} ≅ {r}: {e}"))?;
        }
    }
    let mut rejected = 0;
    let mut k = 0;
    while rejected < 20 {
        let (t, s) = (&omega_tys[k % 40], &omega_tys[(k * 7 + 3) % 40]);
        let (ts, ss) = (&star_tys[k % 40], &star_tys[(k * 11 + 5) % 40]);
        k += 1;
        let (l, r, m) = match rejected % 4 {
            0 => (
                TyExpr::modal(forever.then(&later), t.clone()),
                TyExpr::modal(forever.clone(), s.clone()),
                &star,
            ),
            1 => (TyExpr::modal(forever.then(&constantly), ts.clone()), ts.clone(), &star),
            2 => (
                TyExpr::modal(constantly.then(&forever), t.clone()),
                TyExpr::modal(ModalityExpr::Id, t.clone()),
                &omega,
            ),
            _ => (ts.clone(), ss.clone(), &star),
        };
        if canon(&l) == canon(&r) {
            continue;
        }
        ensure(ck.ty_equiv(&l, &r, m).is_err(), || format!("accepted inequivalent {l} ≃ {r}"))?;
        rejected += 1;
    }
    Ok(String::from("20 random T accepted for both equations, 20 inequivalent pairs rejected"))
}

fn int_value_diff(d: &DiffNat) -> i64 {
    d.0 as i64 - d.1 as i64
}

fn int_value_sign(s: &SignNat) -> i64 {
    match s.0 {
        Sign::Pos => s.1 as i64,
        Sign::Neg => -(s.1 as i64),
    }
}

fn apply2(f: &HostVal, a: HostVal, b: HostVal) -> HostVal {
    f.as_fun().apply(a).as_fun().apply(b)
}

fn representation_independence() -> Outcome {
    let start = Instant::now();
    let (inst, prog) = load(TheoryChoice::Param, "examples/parametricity/subtract.mstt");
    let ck = inst.checker();
    let host = |name: &str| -> Result<HostVal, String> {
        let d = prog.get(name).ok_or(format!("missing {name}"))?;
        let r = ck.infer_closed(&d.body, &d.mode).map_err(|e| e.to_string())?;
        Ok(extractable_for(&ck, &r.ty).map_err(|e| e.to_string())?.extract(&r.tm))
    };
    let (left, right) = (host("subtract-left")?, host("subtract-right")?);
    let signnats: Vec<SignNat> =
        [Sign::Pos, Sign::Neg].into_iter().flat_map(|s| (0..=6).map(move |n| SignNat(s, n))).collect();
    let mut checked = 0u64;
    for (a, b, c, e) in quadruples(6) {
        let (d1, d2) = (DiffNat(a, b), DiffNat(c, e));
        let out =
            apply2(&left, HostVal::Opaque(param::diffnat_host(d1)), HostVal::Opaque(param::diffnat_host(d2)));
        let out = *out.as_opaque().downcast::<DiffNat>().ok_or("subtract-left returned a non-DiffNat")?;
        ensure(int_value_diff(&out) == int_value_diff(&d1) - int_value_diff(&d2), || {
            format!("subtract-left {d1} {d2} = {out}")
        })?;
        for s1 in signnats.iter().filter(|s| int_value_sign(s) == int_value_diff(&d1)) {
            for s2 in signnats.iter().filter(|s| int_value_sign(s) == int_value_diff(&d2)) {
                let res = apply2(
                    &right,
                    HostVal::Opaque(param::signnat_host(*s1)),
                    HostVal::Opaque(param::signnat_host(*s2)),
                );
                let res =
                    *res.as_opaque().downcast::<SignNat>().ok_or("subtract-right returned a non-SignNat")?;
                ensure(int_value_sign(&res) == int_value_diff(&out), || {
                    format!("{d1} - {d2} = {out} but {s1:?} - {s2:?} = {res:?}")
                })?;
                checked += 1;
            }
        }
    }
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!("{checked} related argument pairs in {took:?}"))
}

/// All `(a, b, c, d)` with components in `0..=max`.
fn quadruples(max: u64) -> impl Iterator<Item = (u64, u64, u64, u64)> {
    (0..=max).flat_map(move |a| {
        (0..=max).flat_map(move |b| (0..=max).flat_map(move |c| (0..=max).map(move |d| (a, b, c, d))))
    })
}

fn corpus_programs() -> Vec<(Instantiation, Program)> {
    let mut out = Vec::new();
    for (dir, t) in [("guarded", TheoryChoice::Guarded), ("parametricity", TheoryChoice::Param)] {
        let mut files: Vec<_> = std::fs::read_dir(root().join("examples").join(dir))
            .unwrap()
            .map(|e| e.unwrap().path())
            .collect();
        files.sort();
        for f in files {
            let rel = f.strip_prefix(root()).unwrap().to_str().unwrap().to_owned();
            out.push(load(t, &rel));
        }
    }
    out
}

fn presheaf_laws() -> Result<String, String> {
    let mut tys = 0;
    for (inst, prog) in corpus_programs() {
        let ck = inst.checker();
        for d in &prog.defs {
            if let Ok(r) = ck.infer_closed(&d.body, &d.mode) {
                let sem = ck.interpret_ty(&r.ty, &d.mode).unwrap();
                check_presheaf_laws(&sem, 5, 3).map_err(|e| format!("{}: {e}", d.name))?;
                tys += 1;
            }
        }
    }
    let cases: [(Instantiation, fn() -> GenProfile, [&str; 2]); 2] = [
        (guarded::instantiation(), guarded::gen_profile, [STAR, OMEGA]),
        (param::instantiation(), param::gen_profile, [param::STAR, WEDGE]),
    ];
    let mut ctxs = 0;
    for (inst, profile, modes) in &cases {
        let ck = inst.checker();
        let mut rng = SmallRng::seed_from_u64(5);
        let mut gen = Gen::new(inst.checker(), &mut rng, profile());
        for m in modes {
            let m = Mode::new(m);
            let mut ctx = CtxExpr::empty(m.clone());
            for i in 0..40 {
                let ty = gen.ty(&m, 3);
                let sem = ck.interpret_ty(&ty, &m).unwrap();
                check_presheaf_laws(&sem, 5, 3).map_err(|e| format!("{ty}: {e}"))?;
                tys += 1;
                if i < 8 {
                    ctx = ctx.bind(ModalityExpr::Id, &format!("x{i}"), ty);
                    let sem_ctx = ck.interpret_ctx(&ctx).unwrap();
                    check_ctx_laws(&sem_ctx, sem_ctx.base())?;
                    ctxs += 1;
                }
            }
        }
        // Contexts with locks and modal binders.
        for (mu, cod) in modal_probes(inst) {
            let cod_m = Mode::new(cod);
            let dom = inst.theory.modality_dom(&mu, &cod_m).unwrap();
            let ty = gen.ty(&dom, 2);
            let ctx = CtxExpr::empty(cod_m.clone()).bind(mu.clone(), "y", ty).lock(mu.clone(), dom);
            let sem_ctx = ck.interpret_ctx(&ctx).unwrap();
            check_ctx_laws(&sem_ctx, sem_ctx.base())?;
            ctxs += 1;
        }
    }
    Ok(format!("{tys} types, {ctxs} contexts"))
}

fn check_ctx_laws(ctx: &SemCtx, base: BaseCategory) -> Result<(), String> {
    let homs = base.morphisms(5);
    for z in base.objects(5) {
        for seed in 0..3 {
            let Some(env) = ctx.sample(&z, seed) else { continue };
            ensure(ctx.probe_eq(&z, &ctx.restrict(&z, &z, &env), &env), || format!("identity law at {z}"))?;
            for &(y, _) in homs.iter().filter(|(_, t)| *t == z) {
                let ey = ctx.restrict(&y, &z, &env);
                ensure(ctx.member(&y, &ey), || format!("restriction to {y} leaves the context"))?;
                for &(x, _) in homs.iter().filter(|(_, t)| *t == y) {
                    let (two, one) = (ctx.restrict(&x, &y, &ey), ctx.restrict(&x, &z, &env));
                    ensure(ctx.probe_eq(&x, &two, &one), || format!("composition law {x} -> {y} -> {z}"))?;
                }
            }
        }
    }
    Ok(())
}

fn modal_probes(inst: &Instantiation) -> Vec<(ModalityExpr, &'static str)> {
    if inst.theory.atom(LATER).is_some() {
        let (l, c, f) =
            (ModalityExpr::atom(LATER), ModalityExpr::atom(CONSTANTLY), ModalityExpr::atom(FOREVER));
        vec![
            (l.clone(), OMEGA),
            (c.clone(), OMEGA),
            (f.clone(), STAR),
            (f.then(&l), STAR),
            (l.then(&c), OMEGA),
            (c.then(&f), OMEGA),
            (ModalityExpr::Id, OMEGA),
        ]
    } else {
        vec![
            (ModalityExpr::atom(param::FORGET_RIGHT), param::STAR),
            (ModalityExpr::atom(param::FORGET_LEFT), param::STAR),
            (ModalityExpr::Id, WEDGE),
        ]
    }
}

fn term_naturality() -> Result<String, String> {
    let mut n = 0;
    for (inst, prog) in corpus_programs() {
        let ck = inst.checker();
        for d in &prog.defs {
            if ck.infer_closed(&d.body, &d.mode).is_ok() {
                validate_closed(&ck, &d.body, &d.mode, 5).map_err(|e| format!("{}: {e}", d.name))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} corpus denotations"))
}

fn dra_round_trips() -> Result<String, String> {
    let mut n = 0;
    for inst in [guarded::instantiation(), param::instantiation()] {
        let ck = inst.checker();
        let mut rng = SmallRng::seed_from_u64(23);
        let profile =
            if inst.theory.atom(LATER).is_some() { guarded::gen_profile() } else { param::gen_profile() };
        let mut gen = Gen::new(inst.checker(), &mut rng, profile);
        for (mu, cod) in modal_probes(&inst) {
            let cod_m = Mode::new(cod);
            let dom = inst.theory.modality_dom(&mu, &cod_m).unwrap();
            let dra = ck.interpret_modality(&mu, &cod_m).unwrap();
            let gamma = SemCtx::empty(dra.cod());
            let locked = gamma.lock(dra.clone());
            for _ in 0..4 {
                let inner = ck.interpret_ty(&gen.ty(&dom, 2), &dom).unwrap();
                for seed in 0..3 {
                    let probe = inner.clone();
                    let t = SemTm::new(move |z, _| probe.sample(z, seed));
                    let back = mod_elim(&dra, &inner, &mod_intro(&dra, &gamma, &inner, &t));
                    for z in dra.dom().objects(5) {
                        let Some(env) = locked.sample(&z, seed) else { continue };
                        ensure(inner.probe_eq(&z, &back.at(&z, &env), &t.at(&z, &env)), || {
                            format!("mod-elim after mod-intro differs for {mu} at {z}")
                        })?;
                    }
                    let modal = mod_ty(&dra, &inner);
                    let probe = modal.clone();
                    let s = SemTm::new(move |x, _| probe.sample(x, seed));
                    let again = mod_intro(&dra, &gamma, &inner, &mod_elim(&dra, &inner, &s));
                    for x in dra.cod().objects(5) {
                        ensure(modal.probe_eq(&x, &again.at(&x, &[]), &s.at(&x, &[])), || {
                            format!("mod-intro after mod-elim differs for {mu} at {x}")
                        })?;
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} probes"))
}

fn loeb_guardedness() -> Result<String, String> {
    let (inst, prog) = load(TheoryChoice::Guarded, "examples/guarded/g-map-examples.mstt");
    let ck = inst.checker();
    let omega = Mode::new(OMEGA);
    let stream = guarded::corpus::gstream(TyExpr::Nat);
    let mut terms: Vec<TmExpr> =
        ["g-nats", "g-nats-succ", "g-evens"].iter().map(|n| prog.get(n).unwrap().body.clone()).collect();
    let mut rng = SmallRng::seed_from_u64(29);
    let mut gen = Gen::new(inst.checker(), &mut rng, guarded::gen_profile());
    while terms.len() < 40 {
        if let Some(t) =
            mstt_core::gen::TermSource::term(&mut gen, &stream, &CtxExpr::empty(omega.clone()), 3)
        {
            if matches!(&t, TmExpr::Ext(code, _) if &**code == "lob") {
                terms.push(t);
            }
        }
    }
    let sem = ck.interpret_ty(&stream, &omega).unwrap();
    for t in &terms {
        let r = ck.infer_closed(t, &omega).map_err(|e| e.to_string())?;
        for n in 0..=8 {
            let (now, next) = (r.tm.at(&Obj::Stage(n), &[]), r.tm.at(&Obj::Stage(n + 1), &[]));
            let restricted = sem.restrict(&Obj::Stage(n), &Obj::Stage(n + 1), &next);
            ensure(restricted.first_order_eq(&now), || {
                format!(
                    "{t}: stage {} restricted is {}, stage {n} is {}",
                    n + 1,
                    restricted.render(),
                    now.render()
                )
            })?;
        }
    }
    Ok(format!("{} fixpoints, n <= 8", terms.len()))
}

fn fuzz_without_panics() -> Result<String, String> {
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut panics = Vec::new();
    let mut total = 0;
    let runs: [(Instantiation, fn() -> GenProfile, [&str; 2], usize, u64); 2] = [
        (guarded::instantiation(), guarded::gen_profile, [OMEGA, STAR], 1000, 31),
        (param::instantiation(), param::gen_profile, [WEDGE, param::STAR], 300, 37),
    ];
    for (inst, profile, modes, count, seed) in &runs {
        let ck = inst.checker();
        let mut rng = SmallRng::seed_from_u64(*seed);
        let mut gen = Gen::new(inst.checker(), &mut rng, profile());
        let mut done = 0;
        let mut k = 0;
        while done < *count {
            let m = Mode::new(modes[k % 2]);
            k += 1;
            let Some((t, _)) = gen.closed(&m, 2, 4) else { continue };
            done += 1;
            let r = panic::catch_unwind(AssertUnwindSafe(|| validate_closed(&ck, &t, &m, 5)));
            match r {
                Ok(Ok(_)) => {}
                Ok(Err(e)) => panics.push(format!("{t}: {e}")),
                Err(p) => panics
                    .push(format!("{t}: panic {}", p.downcast_ref::<String>().cloned().unwrap_or_default())),
            }
        }
        total += done;
    }
    panic::set_hook(hook);
    ensure(panics.is_empty(), || format!("{} failures, first: {}", panics.len(), panics[0]))?;
    Ok(format!("{total} terms, 0 panics"))
}

fn property_suites() -> Outcome {
    let parts: [(&str, fn() -> Result<String, String>); 5] = [
        ("a", presheaf_laws),
        ("b", term_naturality),
        ("c", dra_round_trips),
        ("d", loeb_guardedness),
        ("e", fuzz_without_panics),
    ];
    let mut notes = Vec::new();
    for (tag, f) in parts {
        let r = panic::catch_unwind(f).unwrap_or_else(|_| Err(String::from("panicked")));
        notes.push(format!("({tag}) {}", r.map_err(|e| format!("({tag}) {e}"))?));
    }
    Ok(notes.join("; "))
}

fn golden_files() -> Outcome {
    let dir = root().join("tests").join("golden");
    let mut names: Vec<_> =
        std::fs::read_dir(&dir).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
    names.sort();
    for dir_name in ["guarded", "parametricity"] {
        for e in std::fs::read_dir(root().join("examples").join(dir_name)).unwrap() {
            let stem = e.unwrap().path().file_stem().unwrap().to_str().unwrap().to_owned();
            ensure(names.iter().any(|p| p.ends_with(format!("{stem}.check.out"))), || {
                format!("no check golden for {stem}")
            })?;
        }
    }
    let mut compared = 0;
    for path in &names {
        let want = std::fs::read_to_string(path).unwrap();
        let header = want.lines().next().unwrap_or_default();
        let args: Vec<&str> =
            header.strip_prefix("$ mstt ").ok_or(format!("{path:?}: bad header"))?.split(' ').collect();
        let (code, out, err) = mstt(&args);
        let got = format!("{header}\nexit: {code}\n--- stdout\n{out}--- stderr\n{err}");
        ensure(got == want, || format!("{} differs", path.display()))?;
        compared += 1;
    }
    Ok(format!("{compared} golden files byte-exact"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("g-nats stages", stream_of_naturals),
        ("nats extraction", extraction),
        ("elaborated types", elaborated_types),
        ("modality equivalences", type_equivalence),
        ("subtract representation independence", representation_independence),
        ("property suites", property_suites),
        ("CLI golden files", golden_files),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| String::from("panicked")))
        });
        match r {
            Ok(note) => println!("criterion {} ({name}): PASS - {note}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
