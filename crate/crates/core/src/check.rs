//! The elaborator: infers the type of a term and builds its denotation in the
//! presheaf model at the same time.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::instance::Instantiation;
use crate::mode_theory::{ModalityExpr, Mode, TwoCellExpr};
use crate::model::tm as sem;
use crate::model::{
    discrete_ty, fun_ty, map_iso, mod_intro, mod_ty, prod_ty, BaseCategory, ClosedTy, DiscreteKind, SemCtx,
    SemTm, TyIso, Value,
};
use crate::syntax::{CtxExpr, CtxNode, ExtArg, TmExpr, TyExpr};
use crate::tcm::{type_error, Tcm, TypeError};

/// Result of elaboration: the inferred type and the denotation over the
/// interpreted context.
#[derive(Clone)]
pub struct Inferred {
    pub ty: TyExpr,
    pub tm: SemTm,
}

/// Outcome of [`Checker::tm_in`]: a denotation, or a marker for a term that
/// did not type check.
#[derive(Clone)]
pub enum TmIn {
    Denotation(SemTm),
    Untypable,
}

impl TmIn {
    pub fn denotation(&self) -> Option<&SemTm> {
        match self {
            TmIn::Denotation(t) => Some(t),
            TmIn::Untypable => None,
        }
    }
}

#[derive(Clone, Copy)]
pub struct Checker<'a> {
    inst: &'a Instantiation,
}

fn show(t: &TmExpr) -> String {
    t.render(true)
}

impl<'a> Checker<'a> {
    pub fn new(inst: &'a Instantiation) -> Self {
        Checker { inst }
    }

    pub fn instantiation(&self) -> &'a Instantiation {
        self.inst
    }

    pub fn interpret_mode(&self, m: &Mode) -> Tcm<BaseCategory> {
        self.inst.theory.interpret_mode(m)
    }

    pub fn interpret_modality(&self, mu: &ModalityExpr, cod: &Mode) -> Tcm<crate::model::DraRef> {
        self.inst.theory.interpret_modality(mu, cod)
    }

    /// `⟦ T ⟧ty` for `T` at mode `m`; fails when `T` is not well formed there.
    pub fn interpret_ty(&self, ty: &TyExpr, m: &Mode) -> Tcm<ClosedTy> {
        let base = self.interpret_mode(m)?;
        match ty {
            TyExpr::Nat => Ok(discrete_ty(DiscreteKind::Nat, base)),
            TyExpr::Bool => Ok(discrete_ty(DiscreteKind::Bool, base)),
            TyExpr::Arrow(a, b) => Ok(fun_ty(self.interpret_ty(a, m)?, self.interpret_ty(b, m)?)),
            TyExpr::Prod(a, b) => Ok(prod_ty(self.interpret_ty(a, m)?, self.interpret_ty(b, m)?)),
            TyExpr::Modal(mu, inner) => {
                let dom = self.inst.theory.modality_dom(mu, m)?;
                let dra = self.interpret_modality(mu, m)?;
                Ok(mod_ty(&dra, &self.interpret_ty(inner, &dom)?))
            }
            TyExpr::Ext(code, args) => {
                let Some(ext) = self.inst.ty_ext(code) else {
                    return type_error("Ty-Ext", format!("unknown type former {code}"));
                };
                let modes = ext.arg_modes(m)?;
                if modes.len() != args.len() {
                    return type_error(
                        "Ty-Ext",
                        format!("{code} expects {} arguments, got {}", modes.len(), args.len()),
                    );
                }
                let sem_args = args
                    .iter()
                    .zip(&modes)
                    .map(|(a, am)| self.interpret_ty(a, am))
                    .collect::<Tcm<Vec<_>>>()?;
                Ok(ext.interpret(&sem_args))
            }
        }
    }

    /// `⟦ Γ ⟧ctx`.
    pub fn interpret_ctx(&self, ctx: &CtxExpr) -> Tcm<SemCtx> {
        match ctx.node() {
            CtxNode::Empty(m) => Ok(SemCtx::empty(self.interpret_mode(m)?)),
            CtxNode::Bind { parent, mu, ty, .. } => {
                let sem = self.interpret_ctx(parent)?;
                let m = parent.mode();
                let dom = self.inst.theory.modality_dom(mu, m)?;
                let dra = self.interpret_modality(mu, m)?;
                Ok(sem.extend(mod_ty(&dra, &self.interpret_ty(ty, &dom)?)))
            }
            CtxNode::Lock { parent, mu, mode } => {
                let sem = self.interpret_ctx(parent)?;
                let dom = self.inst.theory.modality_dom(mu, parent.mode())?;
                self.inst.theory.modes_equal(&dom, mode)?;
                Ok(sem.lock(self.interpret_modality(mu, parent.mode())?))
            }
        }
    }

    /// `Γ ,lock⟨μ⟩`, computing the mode of the result.
    pub fn lock(&self, ctx: &CtxExpr, mu: &ModalityExpr) -> Tcm<CtxExpr> {
        let dom = self.inst.theory.modality_dom(mu, ctx.mode())?;
        Ok(ctx.lock(mu.clone(), dom))
    }

    /// `≃ᵗʸ?`: the congruence generated by modality equivalence, returning
    /// an isomorphism `⟦ T ⟧ ≅ ⟦ S ⟧`.
    pub fn ty_equiv(&self, t: &TyExpr, s: &TyExpr, m: &Mode) -> Tcm<TyIso> {
        self.ty_equiv_inner(t, s, m).map_err(|e| {
            TypeError::new("Ty-Eq", format!("types {t} and {s} are not equivalent: {}", e.message))
        })
    }

    fn ty_equiv_inner(&self, t: &TyExpr, s: &TyExpr, m: &Mode) -> Tcm<TyIso> {
        match (t, s) {
            (TyExpr::Nat, TyExpr::Nat) | (TyExpr::Bool, TyExpr::Bool) => Ok(TyIso::identity()),
            (TyExpr::Arrow(a1, b1), TyExpr::Arrow(a2, b2)) => {
                Ok(TyIso::fun(&self.ty_equiv_inner(a1, a2, m)?, &self.ty_equiv_inner(b1, b2, m)?))
            }
            (TyExpr::Prod(a1, b1), TyExpr::Prod(a2, b2)) => {
                Ok(TyIso::prod(&self.ty_equiv_inner(a1, a2, m)?, &self.ty_equiv_inner(b1, b2, m)?))
            }
            (TyExpr::Modal(mu, a), TyExpr::Modal(rho, b)) => {
                let theory = &self.inst.theory;
                let modiso = theory.modalities_equivalent(mu, rho, m)?;
                let dom = theory.modality_dom(mu, m)?;
                let inner = self.ty_equiv_inner(a, b, &dom)?;
                let (sa, sb) = (self.interpret_ty(a, &dom)?, self.interpret_ty(b, &dom)?);
                let dra = self.interpret_modality(mu, m)?;
                Ok(map_iso(&dra, &sa, &sb, &inner).then(&modiso.at(&sb)))
            }
            (TyExpr::Ext(c1, a1), TyExpr::Ext(c2, a2)) if c1 == c2 && a1.len() == a2.len() => {
                let ext = self
                    .inst
                    .ty_ext(c1)
                    .map_or_else(|| type_error("Ty-Ext", format!("unknown type former {c1}")), Ok)?;
                let modes = ext.arg_modes(m)?;
                let mut isos = Vec::new();
                let (mut src, mut tgt) = (Vec::new(), Vec::new());
                for ((x, y), am) in a1.iter().zip(a2).zip(&modes) {
                    isos.push(self.ty_equiv_inner(x, y, am)?);
                    src.push(self.interpret_ty(x, am)?);
                    tgt.push(self.interpret_ty(y, am)?);
                }
                Ok(ext.map_iso(&src, &tgt, &isos))
            }
            _ => type_error("Ty-Eq", format!("{t} and {s} have different head constructors")),
        }
    }

    /// Tm-Var: find the rightmost binder named `x` and check `α` against
    /// the locks to its right.
    pub fn lookup_var(&self, x: &str, alpha: &TwoCellExpr, ctx: &CtxExpr) -> Tcm<Inferred> {
        let mut locks: Vec<ModalityExpr> = Vec::new();
        let mut cur = ctx.clone();
        loop {
            let next = match cur.node() {
                CtxNode::Empty(_) => {
                    return type_error("Tm-Var", format!("unbound variable {x}"));
                }
                CtxNode::Lock { parent, mu, .. } => {
                    locks.insert(0, mu.clone());
                    parent.clone()
                }
                CtxNode::Bind { parent, mu, x: y, ty } if &**y == x => {
                    return self.var_at(x, alpha, &cur, parent, mu, ty, &locks);
                }
                CtxNode::Bind { parent, .. } => parent.clone(),
            };
            cur = next;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn var_at(
        &self,
        x: &str,
        alpha: &TwoCellExpr,
        binder: &CtxExpr,
        parent: &CtxExpr,
        mu: &ModalityExpr,
        ty: &TyExpr,
        locks: &[ModalityExpr],
    ) -> Tcm<Inferred> {
        let theory = &self.inst.theory;
        let cod = parent.mode();
        let kappa = locks.iter().cloned().reduce(|acc, l| acc.then(&l)).unwrap_or(ModalityExpr::Id);
        let cell = theory.check_two_cell(alpha, mu, &kappa, cod).map_err(|e| {
            let telescope: Vec<String> = locks.iter().map(|l| format!("lock⟨{l}⟩")).collect();
            TypeError::new(
                "Tm-Var",
                format!(
                    "variable {x} bound under {mu} is used behind [{}]: {}",
                    telescope.join(", "),
                    e.message
                ),
            )
        })?;
        let dom = theory.modality_dom(mu, cod)?;
        let inner = self.interpret_ty(ty, &dom)?;
        let binder_sem = self.interpret_ctx(binder)?;
        let dra = self.interpret_modality(mu, cod)?;
        let slot = binder_sem.len();
        let tm = SemTm::new(move |z, env| {
            let moved = cell.transport(&binder_sem, z, &env[..slot]);
            let at = dra.lock_ob(z).expect("variable used outside its lock's domain");
            let top = moved.last().expect("binder slot");
            dra.to_family(&inner, &at, top)(z)
        });
        Ok(Inferred { ty: ty.clone(), tm })
    }

    /// `infer-interpret`.
    pub fn infer_interpret(&self, t: &TmExpr, ctx: &CtxExpr) -> Tcm<Inferred> {
        let m = ctx.mode().clone();
        self.interpret_mode(&m)?;
        match t {
            TmExpr::Ann(inner, ty) => {
                self.interpret_ty(ty, &m).map_err(|e| {
                    TypeError::new("Tm-Ann", format!("annotation {ty} is ill formed: {}", e.message))
                })?;
                let r = self.infer_interpret(inner, ctx)?;
                let e = self
                    .ty_equiv(ty, &r.ty, &m)
                    .map_err(|e| TypeError::new("Tm-Ann", format!("in {}: {}", show(t), e.message)))?;
                Ok(Inferred { ty: ty.clone(), tm: e.transport(&r.tm) })
            }
            TmExpr::Var(x, alpha) => self.lookup_var(x, alpha, ctx),
            TmExpr::Lam(x, ty, body) => {
                self.interpret_ty(ty, &m).map_err(|e| {
                    TypeError::new("Tm-Lam", format!("binder type {ty} is ill formed: {}", e.message))
                })?;
                let inner_ctx = ctx.bind(ModalityExpr::Id, x, ty.clone());
                let b = self.infer_interpret(body, &inner_ctx)?;
                Ok(Inferred {
                    ty: TyExpr::arrow(ty.clone(), b.ty),
                    tm: sem::fun_lam(&self.interpret_ctx(ctx)?, &b.tm),
                })
            }
            TmExpr::App(f, a) => {
                let rf = self.infer_interpret(f, ctx)?;
                let TyExpr::Arrow(dom, cod) = &rf.ty else {
                    return type_error(
                        "Tm-App",
                        format!("{} has type {}, which is not a function type", show(f), rf.ty),
                    );
                };
                let ra = self.infer_interpret(a, ctx)?;
                let e = self.ty_equiv(dom, &ra.ty, &m).map_err(|e| {
                    TypeError::new("Tm-App", format!("argument of {}: {}", show(t), e.message))
                })?;
                Ok(Inferred { ty: (**cod).clone(), tm: sem::fun_app(&rf.tm, &e.transport(&ra.tm)) })
            }
            TmExpr::Lit(n) => Ok(Inferred { ty: TyExpr::Nat, tm: SemTm::constant(Value::Nat(*n)) }),
            TmExpr::Suc => Ok(Inferred { ty: TyExpr::arrow(TyExpr::Nat, TyExpr::Nat), tm: sem::suc() }),
            TmExpr::Plus => {
                Ok(Inferred { ty: TyExpr::arrows(&[TyExpr::Nat, TyExpr::Nat], TyExpr::Nat), tm: sem::plus() })
            }
            TmExpr::NatElim(z, s) => {
                let rz = self.infer_interpret(z, ctx)?;
                let rs = self.infer_interpret(s, ctx)?;
                let step_ty = TyExpr::arrow(rz.ty.clone(), rz.ty.clone());
                let e = self.ty_equiv(&step_ty, &rs.ty, &m).map_err(|e| {
                    TypeError::new("Tm-NatElim", format!("step of {}: {}", show(t), e.message))
                })?;
                let motive = self.interpret_ty(&rz.ty, &m)?;
                Ok(Inferred {
                    ty: TyExpr::arrow(TyExpr::Nat, rz.ty),
                    tm: sem::nat_elim(&motive, &rz.tm, &e.transport(&rs.tm)),
                })
            }
            TmExpr::True | TmExpr::False => {
                Ok(Inferred { ty: TyExpr::Bool, tm: SemTm::constant(Value::Bool(matches!(t, TmExpr::True))) })
            }
            TmExpr::If(c, a, b) => {
                let rc = self.infer_interpret(c, ctx)?;
                let ec = self
                    .ty_equiv(&TyExpr::Bool, &rc.ty, &m)
                    .map_err(|e| TypeError::new("Tm-If", format!("condition {}: {}", show(c), e.message)))?;
                let ra = self.infer_interpret(a, ctx)?;
                let rb = self.infer_interpret(b, ctx)?;
                let eb = self.ty_equiv(&ra.ty, &rb.ty, &m).map_err(|e| {
                    TypeError::new("Tm-If", format!("branches of {}: {}", show(t), e.message))
                })?;
                Ok(Inferred {
                    ty: ra.ty,
                    tm: sem::if_then_else(&ec.transport(&rc.tm), &ra.tm, &eb.transport(&rb.tm)),
                })
            }
            TmExpr::Pair(a, b) => {
                let ra = self.infer_interpret(a, ctx)?;
                let rb = self.infer_interpret(b, ctx)?;
                Ok(Inferred { ty: TyExpr::prod(ra.ty, rb.ty), tm: sem::pair(&ra.tm, &rb.tm) })
            }
            TmExpr::Fst(p) | TmExpr::Snd(p) => {
                let rule = if matches!(t, TmExpr::Fst(_)) { "Tm-Fst" } else { "Tm-Snd" };
                let rp = self.infer_interpret(p, ctx)?;
                let TyExpr::Prod(a, b) = &rp.ty else {
                    return type_error(
                        rule,
                        format!("{} has type {}, which is not a product type", show(p), rp.ty),
                    );
                };
                Ok(match t {
                    TmExpr::Fst(_) => Inferred { ty: (**a).clone(), tm: sem::fst(&rp.tm) },
                    _ => Inferred { ty: (**b).clone(), tm: sem::snd(&rp.tm) },
                })
            }
            TmExpr::ModIntro(mu, inner) => {
                let locked = self
                    .lock(ctx, mu)
                    .map_err(|e| TypeError::new("Tm-ModIntro", format!("in {}: {}", show(t), e.message)))?;
                let r = self.infer_interpret(inner, &locked)?;
                let dra = self.interpret_modality(mu, &m)?;
                let sem_inner = self.interpret_ty(&r.ty, locked.mode())?;
                Ok(Inferred {
                    tm: mod_intro(&dra, &self.interpret_ctx(ctx)?, &sem_inner, &r.tm),
                    ty: TyExpr::modal(mu.clone(), r.ty),
                })
            }
            TmExpr::ModElim { prefix, mu, x, t: scrutinee, s } => {
                if !prefix.flatten().is_empty() {
                    return type_error(
                        "Tm-ModElim",
                        format!(
                            "elimination under the additional modality {prefix} is not supported; only 𝟙 is accepted"
                        ),
                    );
                }
                let rt = self.infer_interpret(scrutinee, ctx)?;
                let TyExpr::Modal(rho, a) = &rt.ty else {
                    return type_error(
                        "Tm-ModElim",
                        format!("{} has type {}, which is not a modal type", show(scrutinee), rt.ty),
                    );
                };
                let theory = &self.inst.theory;
                let modiso = theory
                    .modalities_equivalent(mu, rho, &m)
                    .map_err(|e| TypeError::new("Tm-ModElim", format!("in {}: {}", show(t), e.message)))?;
                let dom = theory.modality_dom(mu, &m)?;
                let sem_a = self.interpret_ty(a, &dom)?;
                let bound = ctx.bind(mu.clone(), x, (**a).clone());
                let rs = self.infer_interpret(s, &bound)?;
                Ok(Inferred { ty: rs.ty, tm: sem::subst_top(&rs.tm, &modiso.at(&sem_a).transport(&rt.tm)) })
            }
            TmExpr::Ext(code, args) => {
                let Some(ext) = self.inst.tm_ext(code) else {
                    return type_error("Tm-Ext", format!("unknown term former {code}"));
                };
                check_arg_kinds(code, ext.arg_kinds(), args)?;
                ext.infer_interpret(self, args, ctx)
            }
        }
    }

    /// Infer the type of a closed term at mode `m`.
    pub fn infer_closed(&self, t: &TmExpr, m: &Mode) -> Tcm<Inferred> {
        self.interpret_mode(m)?;
        self.infer_interpret(t, &CtxExpr::empty(m.clone()))
    }

    /// `⟦ t ⟧tm-in Γ`.
    pub fn tm_in(&self, t: &TmExpr, ctx: &CtxExpr) -> TmIn {
        match self.infer_interpret(t, ctx) {
            Ok(r) => TmIn::Denotation(r.tm),
            Err(_) => TmIn::Untypable,
        }
    }
}

fn check_arg_kinds(code: &str, kinds: &[crate::syntax::ArgKind], args: &[ExtArg]) -> Tcm<()> {
    use crate::syntax::ArgKind;
    let ok = kinds.len() == args.len()
        && kinds.iter().zip(args).all(|(k, a)| {
            matches!(
                (k, a),
                (ArgKind::Ty, ExtArg::Ty(_))
                    | (ArgKind::Tm, ExtArg::Tm(_))
                    | (ArgKind::Name, ExtArg::Name(_))
                    | (ArgKind::Num, ExtArg::Num(_))
            )
        });
    if ok {
        Ok(())
    } else {
        type_error("Tm-Ext", format!("{code} applied to arguments of the wrong shape"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guarded::{self, CONSTANTLY, FOREVER, LATER, OMEGA, ONE_TO_LATER, STAR};
    use crate::model::Obj;
    use crate::syntax::{app, lam, lit, mod_elim, mod_intro, svar, var};

    fn later() -> ModalityExpr {
        ModalityExpr::atom(LATER)
    }

    #[test]
    fn variable_behind_matching_lock() {
        let inst = guarded::instantiation();
        let ck = inst.checker();
        let omega = Mode::new(OMEGA);
        let ctx = CtxExpr::empty(omega.clone()).bind(later(), "x", TyExpr::Nat).lock(later(), omega.clone());
        let r = ck.infer_interpret(&svar("x"), &ctx).unwrap();
        assert_eq!(r.ty, TyExpr::Nat);
        let sem = ck.interpret_ctx(&ctx).unwrap();
        let env = sem.sample(&Obj::Stage(2), 4).unwrap();
        assert_eq!(r.tm.at(&Obj::Stage(2), &env).as_nat(), env[0].as_nat());
    }

    #[test]
    fn variable_behind_missing_lock_is_rejected() {
        let inst = guarded::instantiation();
        let ck = inst.checker();
        let omega = Mode::new(OMEGA);
        let ctx = CtxExpr::empty(omega.clone()).bind(later(), "x", TyExpr::Nat);
        let err = ck.infer_interpret(&svar("x"), &ctx).err().unwrap();
        assert_eq!(err.rule, "Tm-Var");
        // The unit-to-later cell lets an unlocked variable cross one lock.
        let ctx =
            CtxExpr::empty(omega.clone()).bind(ModalityExpr::Id, "y", TyExpr::Bool).lock(later(), omega);
        assert!(ck.infer_interpret(&svar("y"), &ctx).is_err());
        let r = ck.infer_interpret(&var("y", TwoCellExpr::named(ONE_TO_LATER)), &ctx).unwrap();
        assert_eq!(r.ty, TyExpr::Bool);
    }

    #[test]
    fn shadowing_picks_the_rightmost_binder() {
        let inst = guarded::instantiation();
        let ck = inst.checker();
        let t = lam("x", TyExpr::Bool, lam("x", TyExpr::Nat, svar("x")));
        let r = ck.infer_closed(&t, &Mode::new(STAR)).unwrap();
        assert_eq!(r.ty.render(false), "Bool -> Nat -> Nat");
    }

    #[test]
    fn modal_round_trip_typechecks() {
        let inst = guarded::instantiation();
        let ck = inst.checker();
        let omega = Mode::new(OMEGA);
        let t = mod_elim(later(), "y", mod_intro(later(), lit(3)), mod_intro(later(), svar("y")));
        let r = ck.infer_closed(&t, &omega).unwrap();
        assert_eq!(r.ty, TyExpr::modal(later(), TyExpr::Nat));
        assert_eq!(r.tm.at(&Obj::Stage(3), &[]).as_nat(), 3);
        r.tm.at(&Obj::Stage(0), &[]).expect_unit();
    }

    #[test]
    fn application_mismatch_is_reported() {
        let inst = guarded::instantiation();
        let ck = inst.checker();
        let t = app(lam("n", TyExpr::Nat, svar("n")), TmExpr::True);
        let err = ck.infer_closed(&t, &Mode::new(STAR)).err().unwrap();
        assert!(err.message.contains("not equivalent"), "{}", err.message);
    }

    #[test]
    fn type_equivalence_is_modal_congruence() {
        let inst = guarded::instantiation();
        let ck = inst.checker();
        let star = Mode::new(STAR);
        let forever = ModalityExpr::atom(FOREVER);
        let lhs = TyExpr::modal(forever.then(&later()), TyExpr::Nat);
        let rhs = TyExpr::modal(forever.clone(), TyExpr::Nat);
        let iso = ck.ty_equiv(&lhs, &rhs, &star).unwrap();
        let (a, b) = (ck.interpret_ty(&lhs, &star).unwrap(), ck.interpret_ty(&rhs, &star).unwrap());
        iso.check(&a, &b, 5, 4).unwrap();
        let constantly = ModalityExpr::atom(CONSTANTLY);
        let fc = TyExpr::modal(forever.then(&constantly), TyExpr::Bool);
        ck.ty_equiv(&fc, &TyExpr::modal(ModalityExpr::Id, TyExpr::Bool), &star).unwrap();
        assert!(ck.ty_equiv(&lhs, &TyExpr::modal(forever, TyExpr::Bool), &star).is_err());
        assert!(ck.ty_equiv(&TyExpr::Nat, &TyExpr::modal(ModalityExpr::Id, TyExpr::Nat), &star).is_err());
    }
}
