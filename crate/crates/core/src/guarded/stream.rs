//! Guarded streams and Löb induction.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{Checker, Inferred};
use crate::instance::{TmExtension, TyExtension};
use crate::mode_theory::{ModalityExpr, Mode};
use crate::model::{BaseCategory, ClosedTy, FunValue, Obj, SemTm, SemType, TyIso, Value};
use crate::syntax::{ArgKind, CtxExpr, ExtArg, TyExpr};
use crate::tcm::{type_error, Tcm, TypeError};

use super::{LATER, OMEGA, STAR};

/// `GStream A⟨n⟩ = Vec (⟨constantly | A⟩⟨n⟩) (n + 1)`; restriction keeps a
/// prefix. Elements are stored as cells of `A` at the point.
pub struct GStreamTy {
    elem: ClosedTy,
}

pub fn gstream_ty(elem: ClosedTy) -> ClosedTy {
    assert_eq!(elem.base(), BaseCategory::Star, "stream elements live over ★");
    ClosedTy::new(GStreamTy { elem })
}

impl SemType for GStreamTy {
    fn base(&self) -> BaseCategory {
        BaseCategory::Omega
    }

    fn member(&self, x: &Obj, v: &Value) -> bool {
        let Value::Vec(items) = v else { return false };
        matches!(x, Obj::Stage(_))
            && items.len() == x.stage() as usize + 1
            && items.iter().all(|a| self.elem.member(&Obj::Point, a))
    }

    fn restrict(&self, x: &Obj, _y: &Obj, v: &Value) -> Value {
        Value::vec(v.as_vec()[..=x.stage() as usize].to_vec())
    }

    fn sample(&self, x: &Obj, seed: u64) -> Value {
        Value::vec(
            (0..=u64::from(x.stage()))
                .map(|i| self.elem.sample(&Obj::Point, seed.wrapping_mul(31).wrapping_add(i)))
                .collect(),
        )
    }

    fn probe_eq(&self, _x: &Obj, a: &Value, b: &Value) -> bool {
        let (a, b) = (a.as_vec(), b.as_vec());
        a.len() == b.len() && a.iter().zip(b).all(|(p, q)| self.elem.probe_eq(&Obj::Point, p, q))
    }

    fn describe(&self) -> String {
        format!("GStream {}", self.elem.describe())
    }
}

/// The `GStream` type former.
pub struct GStream;

impl TyExtension for GStream {
    fn code(&self) -> &str {
        "GStream"
    }

    fn arity(&self) -> usize {
        1
    }

    fn arg_modes(&self, at: &Mode) -> Tcm<Vec<Mode>> {
        if at.name() != OMEGA {
            return type_error("Ty-Ext", format!("GStream lives at mode {OMEGA}, not {at}"));
        }
        Ok(vec![Mode::new(STAR)])
    }

    fn interpret(&self, args: &[ClosedTy]) -> ClosedTy {
        gstream_ty(args[0].clone())
    }

    fn map_iso(&self, _src: &[ClosedTy], _tgt: &[ClosedTy], isos: &[TyIso]) -> TyIso {
        fn elementwise(e: TyIso, fwd: bool) -> impl Fn(&Obj, &Value) -> Value {
            move |_, v| {
                Value::vec(
                    v.as_vec()
                        .iter()
                        .map(|a| if fwd { e.forward(&Obj::Point, a) } else { e.backward(&Obj::Point, a) })
                        .collect(),
                )
            }
        }
        TyIso::new(elementwise(isos[0].clone(), true), elementwise(isos[0].clone(), false))
    }
}

fn stream_of(a: &TyExpr) -> TyExpr {
    TyExpr::ext("GStream", vec![a.clone()])
}

fn constantly(a: &TyExpr) -> TyExpr {
    TyExpr::modal(ModalityExpr::atom(super::CONSTANTLY), a.clone())
}

fn later(a: TyExpr) -> TyExpr {
    TyExpr::modal(ModalityExpr::atom(LATER), a)
}

/// Shared argument checking for the stream primitives: the context must be
/// at mode ω and the element type well formed at ★.
fn element_type(ck: &Checker<'_>, code: &str, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<TyExpr> {
    if ctx.mode().name() != OMEGA {
        return type_error("Tm-Ext", format!("{code} is only available at mode {OMEGA}"));
    }
    let [ExtArg::Ty(a)] = args else {
        return type_error("Tm-Ext", format!("{code} expects one type argument"));
    };
    ck.interpret_ty(a, &Mode::new(STAR))?;
    Ok(a.clone())
}

/// `g-head A : GStream A ⇛ ⟨constantly | A⟩`.
pub struct GHead;

/// `g-tail A : GStream A ⇛ ▻ (GStream A)`.
pub struct GTail;

/// `g-cons A : ⟨constantly | A⟩ ⇛ ▻ (GStream A) ⇛ GStream A`.
pub struct GCons;

impl TmExtension for GHead {
    fn code(&self) -> &str {
        "g-head"
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[ArgKind::Ty]
    }

    fn infer_interpret(&self, ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        let a = element_type(ck, self.code(), args, ctx)?;
        Ok(Inferred {
            ty: TyExpr::arrow(stream_of(&a), constantly(&a)),
            tm: SemTm::new(|x, _| Value::Fun(FunValue::new(*x, |_, s| s.as_vec()[0].clone()))),
        })
    }
}

impl TmExtension for GTail {
    fn code(&self) -> &str {
        "g-tail"
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[ArgKind::Ty]
    }

    fn infer_interpret(&self, ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        let a = element_type(ck, self.code(), args, ctx)?;
        Ok(Inferred {
            ty: TyExpr::arrow(stream_of(&a), later(stream_of(&a))),
            tm: SemTm::new(|x, _| Value::Fun(FunValue::new(*x, g_tail_cell))),
        })
    }
}

/// The tail of a stream cell at stage `y`, as a `▻ GStream` cell.
pub fn g_tail_cell(y: &Obj, s: &Value) -> Value {
    match y.stage() {
        0 => Value::Unit,
        _ => Value::vec(s.as_vec()[1..].to_vec()),
    }
}

/// Prepend a head to a `▻ GStream` cell at stage `y`.
pub fn g_cons_cell(y: &Obj, head: &Value, tail: &Value) -> Value {
    match y.stage() {
        0 => {
            tail.expect_unit();
            Value::vec(vec![head.clone()])
        }
        _ => {
            let mut items = Vec::with_capacity(y.stage() as usize + 1);
            items.push(head.clone());
            items.extend(tail.as_vec().iter().cloned());
            Value::vec(items)
        }
    }
}

impl TmExtension for GCons {
    fn code(&self) -> &str {
        "g-cons"
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[ArgKind::Ty]
    }

    fn infer_interpret(&self, ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        let a = element_type(ck, self.code(), args, ctx)?;
        Ok(Inferred {
            ty: TyExpr::arrows(&[constantly(&a), later(stream_of(&a))], stream_of(&a)),
            tm: SemTm::new(|x, _| {
                Value::Fun(FunValue::new(*x, |y, head| {
                    let head = head.clone();
                    Value::Fun(FunValue::new(*y, move |w, tail| g_cons_cell(w, &head, tail)))
                }))
            }),
        })
    }
}

/// Löb induction `löb[later | x ∈ T] t`.
pub struct Loeb;

impl TmExtension for Loeb {
    fn code(&self) -> &str {
        "lob"
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[ArgKind::Name, ArgKind::Ty, ArgKind::Tm]
    }

    fn infer_interpret(&self, ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        let [ExtArg::Name(x), ExtArg::Ty(ty), ExtArg::Tm(body)] = args else {
            return type_error("Tm-Löb", "löb expects a name, a type and a body");
        };
        if ctx.mode().name() != OMEGA {
            return type_error("Tm-Löb", format!("löb is only available at mode {OMEGA}"));
        }
        ck.interpret_ty(ty, ctx.mode())?;
        let bound = ctx.bind(ModalityExpr::atom(LATER), x, ty.clone());
        let r = ck.infer_interpret(body, &bound)?;
        let e = ck
            .ty_equiv(ty, &r.ty, ctx.mode())
            .map_err(|e| TypeError::new("Tm-Löb", format!("body of löb over {x}: {}", e.message)))?;
        let step = e.transport(&r.tm);
        let sem_ctx = ck.interpret_ctx(ctx)?;
        Ok(Inferred { ty: ty.clone(), tm: loeb(&sem_ctx, &step) })
    }
}

/// The fixpoint of `step : Tm (Γ . ▻ T) T`, computed by induction on the
/// stage: at stage 0 the recursive slot is trivial and at stage `k + 1` it
/// holds the value computed at stage `k`.
pub fn loeb(ctx: &crate::model::SemCtx, step: &SemTm) -> SemTm {
    let (ctx, step) = (ctx.clone(), step.clone());
    SemTm::new(move |x, env| {
        let n = x.stage();
        let mut prev = Value::Unit;
        for k in 0..=n {
            let stage = Obj::Stage(k);
            let mut inner = ctx.restrict(&stage, x, env);
            inner.push(prev);
            prev = step.at(&stage, &inner);
        }
        prev
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{discrete_ty, ty::check_presheaf_laws, DiscreteKind};

    #[test]
    fn restriction_drops_the_freshest_elements() {
        let s = gstream_ty(discrete_ty(DiscreteKind::Nat, BaseCategory::Star));
        let v = Value::vec(vec![Value::Nat(0), Value::Nat(1), Value::Nat(2)]);
        assert!(s.member(&Obj::Stage(2), &v));
        assert_eq!(s.restrict(&Obj::Stage(1), &Obj::Stage(2), &v).render(), "[0,1]");
    }

    #[test]
    fn stream_type_is_a_presheaf() {
        let nat = discrete_ty(DiscreteKind::Nat, BaseCategory::Star);
        check_presheaf_laws(&gstream_ty(nat), 5, 4).unwrap();
    }

    #[test]
    fn cons_at_stage_zero_is_a_singleton() {
        let out = g_cons_cell(&Obj::Stage(0), &Value::Nat(0), &Value::Unit);
        assert_eq!(out.render(), "[0]");
        let tail =
            g_tail_cell(&Obj::Stage(2), &Value::vec(vec![Value::Nat(4), Value::Nat(5), Value::Nat(6)]));
        assert_eq!(tail.render(), "[5,6]");
        assert!(matches!(g_tail_cell(&Obj::Stage(0), &Value::vec(vec![Value::Nat(4)])), Value::Unit));
    }
}
