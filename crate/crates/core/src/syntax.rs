//! Extrinsically typed syntax of types, contexts and terms.
//!
//! Modes are not stored in type and term trees; the checker computes them
//! from the mode a tree is used at. Rendering produces the textual surface
//! syntax, either in ASCII (accepted by the parser) or with Unicode symbols.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::mode_theory::{ModalityExpr, Mode, TwoCellExpr};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TyExpr {
    Nat,
    Bool,
    Arrow(Rc<TyExpr>, Rc<TyExpr>),
    Prod(Rc<TyExpr>, Rc<TyExpr>),
    Modal(ModalityExpr, Rc<TyExpr>),
    Ext(Rc<str>, Vec<TyExpr>),
}

impl TyExpr {
    pub fn arrow(dom: TyExpr, cod: TyExpr) -> Self {
        TyExpr::Arrow(Rc::new(dom), Rc::new(cod))
    }

    pub fn prod(fst: TyExpr, snd: TyExpr) -> Self {
        TyExpr::Prod(Rc::new(fst), Rc::new(snd))
    }

    pub fn modal(mu: ModalityExpr, ty: TyExpr) -> Self {
        TyExpr::Modal(mu, Rc::new(ty))
    }

    pub fn ext(code: &str, args: Vec<TyExpr>) -> Self {
        TyExpr::Ext(Rc::from(code), args)
    }

    /// `T1 ⇛ … ⇛ Tn ⇛ R`.
    pub fn arrows(args: &[TyExpr], res: TyExpr) -> Self {
        args.iter().rev().fold(res, |acc, a| TyExpr::arrow(a.clone(), acc))
    }

    pub fn render(&self, unicode: bool) -> String {
        let mut out = String::new();
        render_ty(self, 0, unicode, &mut out);
        out
    }
}

impl fmt::Display for TyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

fn ty_level(ty: &TyExpr) -> u8 {
    match ty {
        TyExpr::Arrow(..) => 0,
        TyExpr::Prod(..) => 1,
        TyExpr::Ext(_, args) if !args.is_empty() => 2,
        _ => 3,
    }
}

fn render_ty(ty: &TyExpr, min: u8, unicode: bool, out: &mut String) {
    if ty_level(ty) < min {
        out.push('(');
        render_ty(ty, 0, unicode, out);
        out.push(')');
        return;
    }
    match ty {
        TyExpr::Nat => out.push_str("Nat"),
        TyExpr::Bool => out.push_str("Bool"),
        TyExpr::Arrow(a, b) => {
            render_ty(a, 1, unicode, out);
            out.push_str(if unicode { " ⇛ " } else { " -> " });
            render_ty(b, 0, unicode, out);
        }
        TyExpr::Prod(a, b) => {
            render_ty(a, 2, unicode, out);
            out.push_str(if unicode { " ⊠ " } else { " * " });
            render_ty(b, 1, unicode, out);
        }
        TyExpr::Modal(mu, t) => {
            out.push_str(if unicode { "⟨" } else { "<" });
            out.push_str(&mu.render(unicode));
            out.push_str(" | ");
            render_ty(t, 0, unicode, out);
            out.push_str(if unicode { "⟩" } else { ">" });
        }
        TyExpr::Ext(code, args) => {
            out.push_str(code);
            for a in args {
                out.push(' ');
                render_ty(a, 3, unicode, out);
            }
        }
    }
}

/// Argument of an extension term former.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtArg {
    Ty(TyExpr),
    Tm(TmExpr),
    Name(Rc<str>),
    Num(u64),
}

/// Kinds of extension arguments, used by parsers and generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    Ty,
    Tm,
    Name,
    Num,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TmExpr {
    Ann(Rc<TmExpr>, TyExpr),
    Var(Rc<str>, TwoCellExpr),
    Lam(Rc<str>, TyExpr, Rc<TmExpr>),
    App(Rc<TmExpr>, Rc<TmExpr>),
    Lit(u64),
    Suc,
    Plus,
    NatElim(Rc<TmExpr>, Rc<TmExpr>),
    True,
    False,
    If(Rc<TmExpr>, Rc<TmExpr>, Rc<TmExpr>),
    Pair(Rc<TmExpr>, Rc<TmExpr>),
    Fst(Rc<TmExpr>),
    Snd(Rc<TmExpr>),
    ModIntro(ModalityExpr, Rc<TmExpr>),
    /// `let ⟨prefix | mod⟨μ⟩ x⟩ ← t in s`. Only a unit prefix is accepted
    /// by the checker.
    ModElim {
        prefix: ModalityExpr,
        mu: ModalityExpr,
        x: Rc<str>,
        t: Rc<TmExpr>,
        s: Rc<TmExpr>,
    },
    Ext(Rc<str>, Vec<ExtArg>),
}

pub fn ann(t: TmExpr, ty: TyExpr) -> TmExpr {
    TmExpr::Ann(Rc::new(t), ty)
}

pub fn var(x: &str, alpha: TwoCellExpr) -> TmExpr {
    TmExpr::Var(Rc::from(x), alpha)
}

/// `svar x = var x id-cell`.
pub fn svar(x: &str) -> TmExpr {
    var(x, TwoCellExpr::Id)
}

pub fn lam(x: &str, ty: TyExpr, body: TmExpr) -> TmExpr {
    TmExpr::Lam(Rc::from(x), ty, Rc::new(body))
}

pub fn app(f: TmExpr, a: TmExpr) -> TmExpr {
    TmExpr::App(Rc::new(f), Rc::new(a))
}

/// `f ∙ a1 ∙ … ∙ an`.
pub fn apps(f: TmExpr, args: impl IntoIterator<Item = TmExpr>) -> TmExpr {
    args.into_iter().fold(f, app)
}

pub fn lit(n: u64) -> TmExpr {
    TmExpr::Lit(n)
}

pub fn nat_elim(z: TmExpr, s: TmExpr) -> TmExpr {
    TmExpr::NatElim(Rc::new(z), Rc::new(s))
}

pub fn if_then_else(c: TmExpr, t: TmExpr, e: TmExpr) -> TmExpr {
    TmExpr::If(Rc::new(c), Rc::new(t), Rc::new(e))
}

pub fn pair(a: TmExpr, b: TmExpr) -> TmExpr {
    TmExpr::Pair(Rc::new(a), Rc::new(b))
}

pub fn fst(p: TmExpr) -> TmExpr {
    TmExpr::Fst(Rc::new(p))
}

pub fn snd(p: TmExpr) -> TmExpr {
    TmExpr::Snd(Rc::new(p))
}

pub fn mod_intro(mu: ModalityExpr, t: TmExpr) -> TmExpr {
    TmExpr::ModIntro(mu, Rc::new(t))
}

/// `let mod⟨μ⟩ x ← t in s`.
pub fn mod_elim(mu: ModalityExpr, x: &str, t: TmExpr, s: TmExpr) -> TmExpr {
    TmExpr::ModElim { prefix: ModalityExpr::Id, mu, x: Rc::from(x), t: Rc::new(t), s: Rc::new(s) }
}

pub fn ext(code: &str, args: Vec<ExtArg>) -> TmExpr {
    TmExpr::Ext(Rc::from(code), args)
}

/// `lam[ μ | x ∈ T ] b`, a function out of `⟨μ | T⟩` whose body sees `x`
/// under modality `μ`.
pub fn modal_lam(mu: ModalityExpr, x: &str, ty: TyExpr, body: TmExpr) -> TmExpr {
    lam(x, TyExpr::modal(mu.clone(), ty), mod_elim(mu, x, svar(x), body))
}

/// `f ∙⟨ μ ⟩ t`.
pub fn modal_app(f: TmExpr, mu: ModalityExpr, t: TmExpr) -> TmExpr {
    app(f, mod_intro(mu, t))
}

/// The applicative lifting of a function with `args.len() ≤ 3` arguments
/// through `μ`: a term of type
/// `⟨μ | A1 ⇛ … ⇛ R⟩ ⇛ ⟨μ | A1⟩ ⇛ … ⇛ ⟨μ | R⟩`.
pub fn lift_a(mu: &ModalityExpr, args: &[TyExpr], res: &TyExpr) -> TmExpr {
    assert!(args.len() <= 3, "lifting supports at most three arguments");
    let names: Vec<String> = (1..=args.len()).map(|i| format!("x{i}")).collect();
    let body = mod_intro(mu.clone(), apps(svar("f"), names.iter().map(|n| svar(n))));
    let inner =
        names.iter().zip(args).rev().fold(body, |acc, (n, a)| modal_lam(mu.clone(), n, a.clone(), acc));
    modal_lam(mu.clone(), "f", TyExpr::arrows(args, res.clone()), inner)
}

impl TmExpr {
    pub fn render(&self, unicode: bool) -> String {
        let mut out = String::new();
        render_tm(self, 0, unicode, &mut out);
        out
    }

    /// Recognize the desugared form of a modal lambda.
    pub fn as_modal_lam(&self) -> Option<(&ModalityExpr, &Rc<str>, &TyExpr, &TmExpr)> {
        let TmExpr::Lam(x, TyExpr::Modal(mu, ty), body) = self else { return None };
        let TmExpr::ModElim { prefix: ModalityExpr::Id, mu: mu2, x: x2, t, s } = &**body else {
            return None;
        };
        match &**t {
            TmExpr::Var(y, TwoCellExpr::Id) if y == x && x2 == x && mu2 == mu => Some((mu, x, ty, s)),
            _ => None,
        }
    }
}

impl fmt::Display for TmExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

fn tm_level(t: &TmExpr) -> u8 {
    match t {
        TmExpr::Lam(..) | TmExpr::ModElim { .. } | TmExpr::If(..) => 0,
        TmExpr::Ext(_, args) if is_binder_ext(args) => 0,
        TmExpr::App(..) => 1,
        TmExpr::ModIntro(..) => 2,
        _ => 3,
    }
}

fn is_binder_ext(args: &[ExtArg]) -> bool {
    matches!(args, [ExtArg::Name(_), ExtArg::Ty(_), ExtArg::Tm(_)])
}

fn render_tm(t: &TmExpr, min: u8, u: bool, out: &mut String) {
    if tm_level(t) < min {
        out.push('(');
        render_tm(t, 0, u, out);
        out.push(')');
        return;
    }
    match t {
        TmExpr::Ann(t, ty) => {
            out.push('(');
            render_tm(t, 0, u, out);
            out.push_str(" : ");
            out.push_str(&ty.render(u));
            out.push(')');
        }
        TmExpr::Var(x, TwoCellExpr::Id) => out.push_str(x),
        TmExpr::Var(x, alpha) => {
            out.push_str("var ");
            out.push_str(x);
            out.push(' ');
            out.push_str(alpha.name());
        }
        TmExpr::Lam(x, ty, body) => {
            out.push_str("lam[");
            match t.as_modal_lam() {
                Some((mu, _, inner_ty, inner_body)) => {
                    out.push_str(&mu.render(u));
                    out.push_str(" | ");
                    out.push_str(x);
                    out.push_str(" : ");
                    out.push_str(&inner_ty.render(u));
                    out.push_str("] ");
                    render_tm(inner_body, 0, u, out);
                }
                None => {
                    out.push_str(x);
                    out.push_str(" : ");
                    out.push_str(&ty.render(u));
                    out.push_str("] ");
                    render_tm(body, 0, u, out);
                }
            }
        }
        TmExpr::App(f, a) => {
            render_tm(f, 1, u, out);
            match &**a {
                TmExpr::ModIntro(mu, inner) => {
                    out.push_str(if u { " ∙⟨" } else { " .<" });
                    out.push_str(&mu.render(u));
                    out.push_str(if u { "⟩ " } else { "> " });
                    render_tm(inner, 2, u, out);
                }
                _ => {
                    out.push_str(if u { " ∙ " } else { " . " });
                    render_tm(a, 2, u, out);
                }
            }
        }
        TmExpr::Lit(n) => out.push_str(&n.to_string()),
        TmExpr::Suc => out.push_str("suc"),
        TmExpr::Plus => out.push_str("plus"),
        TmExpr::NatElim(z, s) => {
            out.push_str("nat-elim ");
            render_tm(z, 3, u, out);
            out.push(' ');
            render_tm(s, 3, u, out);
        }
        TmExpr::True => out.push_str("true"),
        TmExpr::False => out.push_str("false"),
        TmExpr::If(c, a, b) => {
            out.push_str("if ");
            render_tm(c, 0, u, out);
            out.push_str(" then ");
            render_tm(a, 0, u, out);
            out.push_str(" else ");
            render_tm(b, 0, u, out);
        }
        TmExpr::Pair(a, b) => {
            out.push('(');
            render_tm(a, 0, u, out);
            out.push_str(", ");
            render_tm(b, 0, u, out);
            out.push(')');
        }
        TmExpr::Fst(p) => {
            out.push_str("fst ");
            render_tm(p, 3, u, out);
        }
        TmExpr::Snd(p) => {
            out.push_str("snd ");
            render_tm(p, 3, u, out);
        }
        TmExpr::ModIntro(mu, inner) => {
            out.push_str(if u { "mod⟨" } else { "mod<" });
            out.push_str(&mu.render(u));
            out.push_str(if u { "⟩ " } else { "> " });
            render_tm(inner, 2, u, out);
        }
        TmExpr::ModElim { prefix, mu, x, t, s } => {
            out.push_str("let ");
            if *prefix != ModalityExpr::Id {
                out.push('[');
                out.push_str(&prefix.render(u));
                out.push_str("] ");
            }
            out.push_str(if u { "mod⟨" } else { "mod<" });
            out.push_str(&mu.render(u));
            out.push_str(if u { "⟩ " } else { "> " });
            out.push_str(x);
            out.push_str(if u { " ← " } else { " <- " });
            render_tm(t, 0, u, out);
            out.push_str(" in ");
            render_tm(s, 0, u, out);
        }
        TmExpr::Ext(code, args) => {
            out.push_str(code);
            if let [ExtArg::Name(x), ExtArg::Ty(ty), ExtArg::Tm(body)] = &args[..] {
                out.push('[');
                out.push_str(x);
                out.push_str(" : ");
                out.push_str(&ty.render(u));
                out.push_str("] ");
                render_tm(body, 0, u, out);
                return;
            }
            for a in args {
                out.push(' ');
                match a {
                    ExtArg::Ty(ty) => render_ty(ty, 3, u, out),
                    ExtArg::Tm(t) => render_tm(t, 3, u, out),
                    ExtArg::Name(n) => out.push_str(n),
                    ExtArg::Num(n) => out.push_str(&n.to_string()),
                }
            }
        }
    }
}

/// Contexts as persistent lists; every node records its mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtxExpr(Rc<CtxNode>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CtxNode {
    Empty(Mode),
    Bind { parent: CtxExpr, mu: ModalityExpr, x: Rc<str>, ty: TyExpr },
    Lock { parent: CtxExpr, mu: ModalityExpr, mode: Mode },
}

impl CtxExpr {
    /// `◇` at mode `m`.
    pub fn empty(m: Mode) -> Self {
        CtxExpr(Rc::new(CtxNode::Empty(m)))
    }

    /// `Γ , μ | x ∈ T`; the result has the mode of `Γ`.
    pub fn bind(&self, mu: ModalityExpr, x: &str, ty: TyExpr) -> Self {
        CtxExpr(Rc::new(CtxNode::Bind { parent: self.clone(), mu, x: Rc::from(x), ty }))
    }

    /// `Γ ,lock⟨μ⟩`; `dom` must be the domain of `μ` at the mode of `Γ`.
    pub fn lock(&self, mu: ModalityExpr, dom: Mode) -> Self {
        CtxExpr(Rc::new(CtxNode::Lock { parent: self.clone(), mu, mode: dom }))
    }

    pub fn node(&self) -> &CtxNode {
        &self.0
    }

    pub fn mode(&self) -> &Mode {
        match &*self.0 {
            CtxNode::Empty(m) => m,
            CtxNode::Bind { parent, .. } => parent.mode(),
            CtxNode::Lock { mode, .. } => mode,
        }
    }

    pub fn render(&self, unicode: bool) -> String {
        match &*self.0 {
            CtxNode::Empty(_) => String::from(if unicode { "◇" } else { "." }),
            CtxNode::Bind { parent, mu, x, ty } => {
                format!("{}, {} | {} : {}", parent.render(unicode), mu.render(unicode), x, ty.render(unicode))
            }
            CtxNode::Lock { parent, mu, .. } => format!(
                "{}, lock{}{}{}",
                parent.render(unicode),
                if unicode { "⟨" } else { "<" },
                mu.render(unicode),
                if unicode { "⟩" } else { ">" },
            ),
        }
    }
}

impl fmt::Display for CtxExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}
