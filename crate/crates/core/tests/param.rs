use mstt_core::extract::{extractable_for, HostVal};
use mstt_core::mode_theory::Mode;
use mstt_core::model::{Obj, Value};
use mstt_core::param::corpus::{self, int_z, subtract, z_int};
use mstt_core::param::int::{self, related_signnats};
use mstt_core::param::{
    diffnat_host, from_rel_ty, instantiation, signnat_host, z_code, DiffNat, Sign, SignNat, STAR, WEDGE,
};
use mstt_core::syntax::{app, apps};

fn integer(d: DiffNat) -> i64 {
    d.0 as i64 - d.1 as i64
}

#[test]
fn z_cells() {
    let z = from_rel_ty(z_code());
    let d = Value::Host(diffnat_host(DiffNat(5, 2)));
    let s = Value::Host(signnat_host(SignNat(Sign::Pos, 3)));
    assert!(z.member(&Obj::Left, &d));
    assert!(z.member(&Obj::Right, &s));
    let pair = z_code().rel_cell(diffnat_host(DiffNat(5, 2)), signnat_host(SignNat(Sign::Pos, 3))).unwrap();
    assert!(z.member(&Obj::Relation, &pair));
    assert_eq!(z.restrict(&Obj::Right, &Obj::Relation, &pair).render(), "(pos,3)");
    assert!(z_code().rel_cell(diffnat_host(DiffNat(5, 2)), signnat_host(SignNat(Sign::Neg, 3))).is_err());
    mstt_core::model::ty::check_presheaf_laws(&z, 3, 40).unwrap();
}

#[test]
fn int_structure_checks() {
    let inst = instantiation();
    let ck = inst.checker();
    z_int().check(&ck, &Mode::new(WEDGE)).unwrap();
    let r = ck.infer_closed(&subtract(&z_int()), &Mode::new(WEDGE)).unwrap();
    assert_eq!(r.ty.render(false), "Z -> Z -> Z");
    let bad = corpus::IntStructure { negate: z_int().add, ..z_int() };
    assert!(bad.check(&ck, &Mode::new(WEDGE)).is_err());
}

#[test]
fn negate_on_relation_cell() {
    let inst = instantiation();
    let ck = inst.checker();
    let r = ck.infer_closed(&z_int().negate, &Mode::new(WEDGE)).unwrap();
    let f = r.tm.at(&Obj::Relation, &[]);
    let pair = z_code().rel_cell(diffnat_host(DiffNat(5, 2)), signnat_host(SignNat(Sign::Pos, 3))).unwrap();
    let out = f.as_fun().apply(&Obj::Relation, &pair);
    assert_eq!(out.render(), "((2,5) ~ (neg,3))");
}

#[test]
fn star_subtractions_type_and_extract() {
    let inst = instantiation();
    let ck = inst.checker();
    let star = Mode::new(STAR);
    let left = ck.infer_closed(&corpus::subtract_star_left(), &star).unwrap();
    assert_eq!(left.ty.render(true), "⟨forget-right | Z⟩ ⇛ ⟨forget-right | Z⟩ ⇛ ⟨forget-right | Z⟩");
    let right = ck.infer_closed(&corpus::subtract_star_right(), &star).unwrap();
    assert_eq!(right.ty.render(true), "⟨forget-left | Z⟩ ⇛ ⟨forget-left | Z⟩ ⇛ ⟨forget-left | Z⟩");
    let sub_l = extractable_for(&ck, &left.ty).unwrap().extract(&left.tm);
    let sub_r = extractable_for(&ck, &right.ty).unwrap().extract(&right.tm);
    let call = |f: &HostVal, a: HostVal, b: HostVal| f.as_fun().apply(a).as_fun().apply(b);
    let out = call(
        &sub_l,
        HostVal::Opaque(diffnat_host(DiffNat(5, 2))),
        HostVal::Opaque(diffnat_host(DiffNat(1, 0))),
    );
    assert_eq!(out.to_string(), "(5,3)");
    let out = call(
        &sub_r,
        HostVal::Opaque(signnat_host(SignNat(Sign::Pos, 3))),
        HostVal::Opaque(signnat_host(SignNat(Sign::Pos, 1))),
    );
    assert_eq!(out.to_string(), "(pos,2)");

    // subtract-∼, exhaustively over components ≤ 6.
    for a in 0..=6 {
        for b in 0..=6 {
            for c in 0..=6 {
                for d in 0..=6 {
                    let (d1, d2) = (DiffNat(a, b), DiffNat(c, d));
                    let l =
                        call(&sub_l, HostVal::Opaque(diffnat_host(d1)), HostVal::Opaque(diffnat_host(d2)));
                    let l = *l.as_opaque().downcast::<DiffNat>().unwrap();
                    assert_eq!(integer(l), integer(d1) - integer(d2));
                    for s1 in related_signnats(&d1) {
                        for s2 in related_signnats(&d2) {
                            let r = call(
                                &sub_r,
                                HostVal::Opaque(signnat_host(s1)),
                                HostVal::Opaque(signnat_host(s2)),
                            );
                            let r = *r.as_opaque().downcast::<SignNat>().unwrap();
                            assert!(int::related(&l, &r), "{l} ≁ {r}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn literals_apply() {
    let inst = instantiation();
    let ck = inst.checker();
    let star = Mode::new(STAR);
    let t = apps(corpus::subtract_star_left(), [corpus::diffnat(5, 2), corpus::diffnat(1, 0)]);
    let r = ck.infer_closed(&t, &star).unwrap();
    let e = extractable_for(&ck, &r.ty).unwrap();
    assert_eq!(e.extract(&r.tm).to_string(), "(5,3)");
    let t =
        app(app(corpus::subtract_star_right(), corpus::signnat(Sign::Pos, 3)), corpus::signnat(Sign::Neg, 1));
    let r = ck.infer_closed(&t, &star).unwrap();
    assert_eq!(extractable_for(&ck, &r.ty).unwrap().extract(&r.tm).to_string(), "(pos,4)");
    assert!(ck.infer_closed(&t, &Mode::new(WEDGE)).is_err());
    let _ = int_z();
}
