//! Random generation of types and well-typed closed terms, for fuzzing the
//! elaborator and the model.
//!
//! Terms are synthesised by type. Variables are found by asking the checker
//! which `var x α` infer the wanted type, so every two-cell of the mode
//! theory gets exercised. Instantiations contribute introduction forms for
//! their own types and eliminators for variables of those types.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::check::Checker;
use crate::mode_theory::{ModalityExpr, Mode, TwoCellExpr};
use crate::syntax::{ann, CtxExpr, CtxNode, ExtArg, TmExpr, TyExpr};

/// What an introduction hook can ask of the generator.
pub trait TermSource {
    /// A term of type `ty` in `ctx`, if one was found within `depth`.
    fn term(&mut self, ty: &TyExpr, ctx: &CtxExpr, depth: u32) -> Option<TmExpr>;

    /// A variable name not used before.
    fn fresh(&mut self, base: &str) -> String;

    /// A number below `n`.
    fn below(&mut self, n: u32) -> u32;
}

/// An introduction form for some types: `None` when it does not apply.
pub type IntroHook = Rc<dyn Fn(&mut dyn TermSource, &TyExpr, &CtxExpr, u32) -> Option<TmExpr>>;

/// Unary eliminators for a variable type: pairs `(f, R)` with `f ∙ v : R`
/// whenever `v` has the given type.
pub type ElimHook = Rc<dyn Fn(&TyExpr, &Mode) -> Vec<(TmExpr, TyExpr)>>;

/// Instantiation-specific knowledge for the generator.
#[derive(Clone, Default)]
pub struct GenProfile {
    /// Extension types that may appear, with their argument modes checked by
    /// the extension itself.
    pub ext_types: Vec<Rc<str>>,
    pub intros: Vec<IntroHook>,
    pub elims: Vec<ElimHook>,
}

pub struct Gen<'a, 'r> {
    ck: Checker<'a>,
    rng: &'r mut dyn RngCore,
    profile: GenProfile,
    counter: u32,
}

impl<'a, 'r> Gen<'a, 'r> {
    pub fn new(ck: Checker<'a>, rng: &'r mut dyn RngCore, profile: GenProfile) -> Self {
        Gen { ck, rng, profile, counter: 0 }
    }

    /// A random type at mode `m` of nesting depth at most `depth`.
    pub fn ty(&mut self, m: &Mode, depth: u32) -> TyExpr {
        let theory = &self.ck.instantiation().theory;
        let atoms: Vec<(Rc<str>, Mode)> =
            theory.atoms().iter().filter(|a| a.cod == *m).map(|a| (a.name.clone(), a.dom.clone())).collect();
        let inst = self.ck.instantiation();
        let exts: Vec<(Rc<str>, Vec<Mode>)> = self
            .profile
            .ext_types
            .iter()
            .filter_map(|c| Some((c.clone(), inst.ty_ext(c)?.arg_modes(m).ok()?)))
            .collect();
        let leaves: Vec<&(Rc<str>, Vec<Mode>)> = exts.iter().filter(|(_, a)| a.is_empty()).collect();
        if depth == 0 {
            let pick = self.below(2 + leaves.len() as u32) as usize;
            return match pick {
                0 => TyExpr::Nat,
                1 => TyExpr::Bool,
                k => TyExpr::ext(&leaves[k - 2].0, Vec::new()),
            };
        }
        match self.below(6) {
            0 => TyExpr::Nat,
            1 => TyExpr::Bool,
            2 => TyExpr::arrow(self.ty(m, depth - 1), self.ty(m, depth - 1)),
            3 => TyExpr::prod(self.ty(m, depth - 1), self.ty(m, depth - 1)),
            4 if !atoms.is_empty() => {
                let (name, dom) = atoms[self.below(atoms.len() as u32) as usize].clone();
                TyExpr::modal(ModalityExpr::atom(&name), self.ty(&dom, depth - 1))
            }
            5 if !exts.is_empty() => {
                let (code, modes) = exts[self.below(exts.len() as u32) as usize].clone();
                let args = modes.iter().map(|am| self.ty(am, depth - 1)).collect();
                TyExpr::ext(&code, args)
            }
            _ => self.ty(m, 0),
        }
    }

    /// Variables of `ctx` usable at some two-cell, with their inferred types.
    fn usable_vars(&self, ctx: &CtxExpr) -> Vec<(TmExpr, TyExpr)> {
        let mut names: Vec<Rc<str>> = Vec::new();
        let mut cur = ctx.clone();
        loop {
            let next = match cur.node() {
                CtxNode::Empty(_) => break,
                CtxNode::Lock { parent, .. } => parent.clone(),
                CtxNode::Bind { parent, x, .. } => {
                    if !names.contains(x) {
                        names.push(x.clone());
                    }
                    parent.clone()
                }
            };
            cur = next;
        }
        let mut cells = vec![TwoCellExpr::Id];
        cells.extend(
            self.ck.instantiation().theory.cells().iter().map(|c| TwoCellExpr::Named(c.name.clone())),
        );
        let mut out = Vec::new();
        for x in &names {
            for alpha in &cells {
                if let Ok(r) = self.ck.lookup_var(x, alpha, ctx) {
                    out.push((TmExpr::Var(x.clone(), alpha.clone()), r.ty));
                }
            }
        }
        out
    }

    fn equiv(&self, a: &TyExpr, b: &TyExpr, m: &Mode) -> bool {
        self.ck.ty_equiv(a, b, m).is_ok()
    }

    /// Ways to reach `ty` from variables, or eliminator applications to
    /// variables, by one elimination step.
    fn var_candidates(&mut self, ty: &TyExpr, ctx: &CtxExpr, depth: u32) -> Vec<TmExpr> {
        let m = ctx.mode().clone();
        let mut heads = self.usable_vars(ctx);
        let elims: Vec<ElimHook> = self.profile.elims.clone();
        for (v, vty) in heads.clone() {
            for hook in &elims {
                for (f, res) in hook(&vty, &m) {
                    heads.push((TmExpr::App(Rc::new(f), Rc::new(v.clone())), res));
                }
            }
        }
        let mut out = Vec::new();
        for (v, vty) in heads {
            if self.equiv(&vty, ty, &m) {
                out.push(v.clone());
            }
            match &vty {
                TyExpr::Arrow(a, b) if depth > 0 && self.equiv(b, ty, &m) => {
                    if let Some(arg) = self.term(a, ctx, depth - 1) {
                        out.push(TmExpr::App(Rc::new(v.clone()), Rc::new(arg)));
                    }
                }
                TyExpr::Prod(a, b) => {
                    if self.equiv(a, ty, &m) {
                        out.push(TmExpr::Fst(Rc::new(v.clone())));
                    }
                    if self.equiv(b, ty, &m) {
                        out.push(TmExpr::Snd(Rc::new(v.clone())));
                    }
                }
                TyExpr::Modal(rho, inner) if depth > 0 => {
                    let y = self.fresh("m");
                    let bound = ctx.bind(rho.clone(), &y, (**inner).clone());
                    if let Some(body) = self.term(ty, &bound, depth - 1) {
                        out.push(TmExpr::ModElim {
                            prefix: ModalityExpr::Id,
                            mu: rho.clone(),
                            x: y.into(),
                            t: Rc::new(v.clone()),
                            s: Rc::new(body),
                        });
                    }
                }
                _ => {}
            }
        }
        out
    }

    fn intro(&mut self, ty: &TyExpr, ctx: &CtxExpr, depth: u32) -> Option<TmExpr> {
        let d = depth.saturating_sub(1);
        let m = ctx.mode().clone();
        match ty {
            TyExpr::Nat => Some(match self.below(if depth == 0 { 1 } else { 5 }) {
                0 => TmExpr::Lit(u64::from(self.below(4))),
                1 => TmExpr::App(Rc::new(TmExpr::Suc), Rc::new(self.term(ty, ctx, d)?)),
                2 => TmExpr::App(
                    Rc::new(TmExpr::App(Rc::new(TmExpr::Plus), Rc::new(self.term(ty, ctx, d)?))),
                    Rc::new(self.term(ty, ctx, d)?),
                ),
                3 => self.conditional(ty, ctx, d)?,
                _ => self.iteration(ty, ctx, d)?,
            }),
            TyExpr::Bool => Some(match self.below(if depth == 0 { 2 } else { 3 }) {
                0 => TmExpr::True,
                1 => TmExpr::False,
                _ => self.conditional(ty, ctx, d)?,
            }),
            TyExpr::Arrow(a, b) => {
                let x = self.fresh("x");
                let body = self.term(b, &ctx.bind(ModalityExpr::Id, &x, (**a).clone()), d)?;
                Some(TmExpr::Lam(x.into(), (**a).clone(), Rc::new(body)))
            }
            TyExpr::Prod(a, b) => {
                Some(TmExpr::Pair(Rc::new(self.term(a, ctx, d)?), Rc::new(self.term(b, ctx, d)?)))
            }
            TyExpr::Modal(mu, a) => {
                let dom = self.ck.instantiation().theory.modality_dom(mu, &m).ok()?;
                let body = self.term(a, &ctx.lock(mu.clone(), dom), d)?;
                Some(TmExpr::ModIntro(mu.clone(), Rc::new(body)))
            }
            TyExpr::Ext(..) => None,
        }
    }

    fn conditional(&mut self, ty: &TyExpr, ctx: &CtxExpr, d: u32) -> Option<TmExpr> {
        Some(TmExpr::If(
            Rc::new(self.term(&TyExpr::Bool, ctx, d)?),
            Rc::new(self.term(ty, ctx, d)?),
            Rc::new(self.term(ty, ctx, d)?),
        ))
    }

    /// `nat-elim z s ∙ n` at any type.
    fn iteration(&mut self, ty: &TyExpr, ctx: &CtxExpr, d: u32) -> Option<TmExpr> {
        let z = self.term(ty, ctx, d)?;
        let s = self.term(&TyExpr::arrow(ty.clone(), ty.clone()), ctx, d)?;
        let n = TmExpr::Lit(u64::from(self.below(4)));
        Some(TmExpr::App(Rc::new(TmExpr::NatElim(Rc::new(z), Rc::new(s))), Rc::new(n)))
    }

    /// A closed term of a random type at `m`, with its type.
    pub fn closed(&mut self, m: &Mode, ty_depth: u32, tm_depth: u32) -> Option<(TmExpr, TyExpr)> {
        let ty = self.ty(m, ty_depth);
        let t = self.term(&ty, &CtxExpr::empty(m.clone()), tm_depth)?;
        Some((t, ty))
    }
}

impl TermSource for Gen<'_, '_> {
    fn term(&mut self, ty: &TyExpr, ctx: &CtxExpr, depth: u32) -> Option<TmExpr> {
        let mut options =
            if depth == 0 || self.below(3) > 0 { self.var_candidates(ty, ctx, depth) } else { Vec::new() };
        if !options.is_empty() && self.below(3) > 0 {
            return Some(options.swap_remove(self.below(options.len() as u32) as usize));
        }
        let hooks: Vec<IntroHook> = self.profile.intros.clone();
        let start = self.below(hooks.len() as u32 + 1) as usize;
        for i in 0..hooks.len() {
            if let Some(t) = hooks[(start + i) % hooks.len()](self, ty, ctx, depth) {
                options.push(t);
                break;
            }
        }
        if let Some(t) = self.intro(ty, ctx, depth) {
            options.push(t);
        }
        if options.is_empty() {
            options = self.var_candidates(ty, ctx, depth);
        }
        if options.is_empty() {
            return None;
        }
        let t = options.swap_remove(self.below(options.len() as u32) as usize);
        Some(if self.below(8) == 0 { ann(t, ty.clone()) } else { t })
    }

    fn fresh(&mut self, base: &str) -> String {
        self.counter += 1;
        format!("{base}{}", self.counter)
    }

    fn below(&mut self, n: u32) -> u32 {
        if n <= 1 {
            0
        } else {
            self.rng.gen_range(0..n)
        }
    }
}

/// Helper for hooks: an extension term applied to arguments.
pub fn ext_app(code: &str, ty_args: &[TyExpr], args: Vec<TmExpr>) -> TmExpr {
    let head = TmExpr::Ext(code.into(), ty_args.iter().cloned().map(ExtArg::Ty).collect());
    args.into_iter().fold(head, |f, a| TmExpr::App(Rc::new(f), Rc::new(a)))
}

/// Elaborate a closed term at `m` and check its denotation: at every object
/// (ω stages up to `bound`) the value must be a cell of the interpreted
/// type, and values must be natural along every morphism.
pub fn validate_closed(ck: &Checker<'_>, t: &TmExpr, m: &Mode, bound: u32) -> Result<TyExpr, String> {
    let r = ck.infer_closed(t, m).map_err(|e| format!("{e}"))?;
    let ty = ck.interpret_ty(&r.ty, m).map_err(|e| format!("{e}"))?;
    let base = ck.interpret_mode(m).map_err(|e| format!("{e}"))?;
    let values: Vec<_> = base.objects(bound).into_iter().map(|x| (x, r.tm.at(&x, &[]))).collect();
    for (x, v) in &values {
        if !ty.member(x, v) {
            return Err(format!("value at {x} is not a cell of {}", r.ty));
        }
    }
    for (y, x) in base.morphisms(bound) {
        let vx = &values.iter().find(|(o, _)| *o == x).expect("object").1;
        let vy = &values.iter().find(|(o, _)| *o == y).expect("object").1;
        if !ty.probe_eq(&y, &ty.restrict(&y, &x, vx), vy) {
            return Err(format!("denotation not natural along {y} -> {x}"));
        }
    }
    Ok(r.ty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guarded::{self, OMEGA, STAR};
    use rand::rngs::SmallRng;
    use rand::SeedableRng;

    #[test]
    fn generated_terms_have_their_requested_type() {
        let inst = guarded::instantiation();
        let mut rng = SmallRng::seed_from_u64(1);
        let mut gen = Gen::new(inst.checker(), &mut rng, guarded::gen_profile());
        let ck = inst.checker();
        for m in [STAR, OMEGA] {
            let m = Mode::new(m);
            for _ in 0..50 {
                if let Some((t, ty)) = gen.closed(&m, 2, 3) {
                    let got = validate_closed(&ck, &t, &m, 3).unwrap();
                    ck.ty_equiv(&got, &ty, &m).unwrap();
                }
            }
        }
    }

    #[test]
    fn fresh_names_are_distinct() {
        let inst = guarded::instantiation();
        let mut rng = SmallRng::seed_from_u64(2);
        let mut gen = Gen::new(inst.checker(), &mut rng, GenProfile::default());
        let a = gen.fresh("x");
        let b = gen.fresh("x");
        assert_ne!(a, b);
        assert!(gen.below(3) < 3);
    }
}
