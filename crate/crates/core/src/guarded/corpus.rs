//! The guarded stream programs.

use alloc::vec;

use crate::mode_theory::{ModalityExpr, TwoCellExpr};
use crate::syntax::{
    ann, app, apps, ext, lam, lit, mod_elim, mod_intro, modal_app, modal_lam, svar, var, ExtArg, TmExpr,
    TyExpr,
};

use super::{CONSTANTLY, FOREVER, LATER, ONE_TO_LATER};

fn later() -> ModalityExpr {
    ModalityExpr::atom(LATER)
}

fn constantly() -> ModalityExpr {
    ModalityExpr::atom(CONSTANTLY)
}

fn forever() -> ModalityExpr {
    ModalityExpr::atom(FOREVER)
}

pub fn gstream(a: TyExpr) -> TyExpr {
    TyExpr::ext("GStream", vec![a])
}

pub fn g_head(a: &TyExpr) -> TmExpr {
    ext("g-head", vec![ExtArg::Ty(a.clone())])
}

pub fn g_tail(a: &TyExpr) -> TmExpr {
    ext("g-tail", vec![ExtArg::Ty(a.clone())])
}

pub fn g_cons(a: &TyExpr) -> TmExpr {
    ext("g-cons", vec![ExtArg::Ty(a.clone())])
}

/// `löb[later | x ∈ T] t`.
pub fn lob(x: &str, ty: TyExpr, body: TmExpr) -> TmExpr {
    ext("lob", vec![ExtArg::Name(x.into()), ExtArg::Ty(ty), ExtArg::Tm(body)])
}

/// `g-map A B : ⟨constantly | A ⇛ B⟩ ⇛ GStream A ⇛ GStream B`.
pub fn g_map(a: &TyExpr, b: &TyExpr) -> TmExpr {
    let body = modal_lam(
        constantly(),
        "f",
        TyExpr::arrow(a.clone(), b.clone()),
        lob(
            "m",
            TyExpr::arrow(gstream(a.clone()), gstream(b.clone())),
            lam(
                "s",
                gstream(a.clone()),
                mod_elim(
                    constantly(),
                    "head-s",
                    app(g_head(a), svar("s")),
                    mod_elim(
                        later(),
                        "tail-s",
                        app(g_tail(a), svar("s")),
                        modal_app(
                            modal_app(g_cons(b), constantly(), app(svar("f"), svar("head-s"))),
                            later(),
                            app(svar("m"), svar("tail-s")),
                        ),
                    ),
                ),
            ),
        ),
    );
    ann(body, g_map_ty(a, b))
}

pub fn g_map_ty(a: &TyExpr, b: &TyExpr) -> TyExpr {
    TyExpr::arrows(
        &[TyExpr::modal(constantly(), TyExpr::arrow(a.clone(), b.clone())), gstream(a.clone())],
        gstream(b.clone()),
    )
}

/// The guarded stream of natural numbers, with `step` in place of
/// `g-map ∙⟨constantly⟩ suc`.
pub fn g_nats_with(step: TmExpr) -> TmExpr {
    lob(
        "s",
        gstream(TyExpr::Nat),
        modal_app(modal_app(g_cons(&TyExpr::Nat), constantly(), lit(0)), later(), app(step, svar("s"))),
    )
}

pub fn g_nats() -> TmExpr {
    g_nats_with(modal_app(g_map(&TyExpr::Nat, &TyExpr::Nat), constantly(), TmExpr::Suc))
}

/// `Stream' A = ⟨forever | GStream A⟩`.
pub fn stream_prime(a: &TyExpr) -> TyExpr {
    TyExpr::modal(forever(), gstream(a.clone()))
}

/// `cons' A : A ⇛ Stream' A ⇛ Stream' A`.
pub fn cons_prime(a: &TyExpr) -> TmExpr {
    lam(
        "a",
        a.clone(),
        lam(
            "as",
            stream_prime(a),
            mod_elim(
                forever(),
                "g-as",
                svar("as"),
                mod_intro(
                    forever(),
                    modal_app(modal_app(g_cons(a), constantly(), svar("a")), later(), svar("g-as")),
                ),
            ),
        ),
    )
}

/// `nats = mod⟨forever⟩ g-nats`.
pub fn nats() -> TmExpr {
    mod_intro(forever(), g_nats())
}

/// Swap the first two elements of a guarded stream. The result is only
/// available one step later: `GStream A ⇛ ▻ (GStream A)`.
pub fn g_flip_fst(a: &TyExpr) -> TmExpr {
    let delayed = |x: &str| var(x, TwoCellExpr::named(ONE_TO_LATER));
    let const_a = TyExpr::modal(constantly(), a.clone());
    let later_s = TyExpr::modal(later(), gstream(a.clone()));
    let inner = apps(
        lam(
            "hc2",
            const_a.clone(),
            lam(
                "tt2",
                later_s,
                modal_app(
                    app(g_cons(a), app(g_head(a), svar("t"))),
                    later(),
                    apps(g_cons(a), [delayed("hc2"), delayed("tt2")]),
                ),
            ),
        ),
        [delayed("hc"), app(g_tail(a), svar("t"))],
    );
    lam(
        "s",
        gstream(a.clone()),
        app(
            lam("hc", const_a, mod_elim(later(), "t", app(g_tail(a), svar("s")), mod_intro(later(), inner))),
            app(g_head(a), svar("s")),
        ),
    )
}

/// `g-nats` with `g-map ∙⟨constantly⟩ suc` replaced by `g-flipFst`; this is
/// not productive and must be rejected.
pub fn g_nats_flip_fst() -> TmExpr {
    g_nats_with(g_flip_fst(&TyExpr::Nat))
}
