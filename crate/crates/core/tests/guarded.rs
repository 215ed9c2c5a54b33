use mstt_core::extract::extractable_for;
use mstt_core::guarded::{corpus, instantiation, OMEGA, STAR};
use mstt_core::mode_theory::Mode;
use mstt_core::model::Obj;
use mstt_core::syntax::{app, TyExpr};

#[test]
fn corpus_types() {
    let inst = instantiation();
    let ck = inst.checker();
    let omega = Mode::new(OMEGA);
    let star = Mode::new(STAR);
    let nat = TyExpr::Nat;
    let r = ck.infer_closed(&corpus::g_map(&nat, &nat), &omega).unwrap();
    assert_eq!(r.ty.render(true), "⟨constantly | Nat ⇛ Nat⟩ ⇛ GStream Nat ⇛ GStream Nat");
    let r = ck.infer_closed(&corpus::g_nats(), &omega).unwrap();
    assert_eq!(r.ty.render(true), "GStream Nat");
    let r = ck.infer_closed(&corpus::cons_prime(&nat), &star).unwrap();
    assert_eq!(r.ty.render(true), "Nat ⇛ ⟨forever | GStream Nat⟩ ⇛ ⟨forever | GStream Nat⟩");
    let r = ck.infer_closed(&corpus::nats(), &star).unwrap();
    assert_eq!(r.ty.render(true), "⟨forever | GStream Nat⟩");
    ck.interpret_ty(&corpus::stream_prime(&nat), &star).unwrap();
}

#[test]
fn g_nats_stages() {
    let inst = instantiation();
    let ck = inst.checker();
    let r = ck.infer_closed(&corpus::g_nats(), &Mode::new(OMEGA)).unwrap();
    for n in 0..=8u32 {
        let v = r.tm.at(&Obj::Stage(n), &[]);
        let want: Vec<u64> = (0..=n as u64).collect();
        let got: Vec<u64> = v.as_vec().iter().map(|x| x.as_nat()).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn g_map_suc_shifts() {
    let inst = instantiation();
    let ck = inst.checker();
    let t = app(
        mstt_core::syntax::modal_app(
            corpus::g_map(&TyExpr::Nat, &TyExpr::Nat),
            mstt_core::mode_theory::ModalityExpr::atom("constantly"),
            mstt_core::syntax::TmExpr::Suc,
        ),
        corpus::g_nats(),
    );
    let r = ck.infer_closed(&t, &Mode::new(OMEGA)).unwrap();
    assert_eq!(r.tm.at(&Obj::Stage(3), &[]).render(), "[1,2,3,4]");
}

#[test]
fn flip_fst_rejected() {
    let inst = instantiation();
    let ck = inst.checker();
    let omega = Mode::new(OMEGA);
    let r = ck.infer_closed(&corpus::g_flip_fst(&TyExpr::Nat), &omega).unwrap();
    assert_eq!(r.ty.render(true), "GStream Nat ⇛ ⟨later | GStream Nat⟩");
    let err = ck.infer_closed(&corpus::g_nats_flip_fst(), &omega).err().expect("must be rejected");
    eprintln!("{err}");
}

#[test]
fn nats_extracts() {
    let inst = instantiation();
    let ck = inst.checker();
    let star = Mode::new(STAR);
    let r = ck.infer_closed(&corpus::nats(), &star).unwrap();
    let e = extractable_for(&ck, &r.ty).unwrap();
    let s = e.extract(&r.tm);
    let got: Vec<u64> = s.as_stream().take(10).iter().map(|h| h.as_nat()).collect();
    assert_eq!(got, (0..10).collect::<Vec<_>>());
}
