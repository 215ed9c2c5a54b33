//! Guarded recursion: a time-independent mode `star` and a time-dependent
//! mode `omega`, with the modalities `later`, `constantly` and `forever`,
//! guarded streams and Löb induction.

pub mod corpus;
pub mod dra;
pub mod stream;

use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Checker;
use crate::extract::{extractable_for, Extractable, HostStream, HostVal};
use crate::gen::{ext_app, ElimHook, GenProfile, IntroHook, TermSource};
use crate::instance::{ExtractProvider, Instantiation};
use crate::mode_theory::{ModalityExpr, Mode, ModeTheory, RewriteRule};
use crate::model::{BaseCategory, Obj, Value};
use crate::syntax::{mod_intro, svar, CtxExpr, TyExpr};
use crate::tcm::Tcm;

pub const STAR: &str = "star";
pub const OMEGA: &str = "omega";
pub const LATER: &str = "later";
pub const CONSTANTLY: &str = "constantly";
pub const FOREVER: &str = "forever";
pub const ONE_TO_LATER: &str = "1-to-later";
pub const CONST_FOREV_TO_ONE: &str = "const-forev-to-1";

pub fn mode_theory() -> ModeTheory {
    ModeTheory::new(
        "guarded",
        vec![(Mode::new(STAR), BaseCategory::Star), (Mode::new(OMEGA), BaseCategory::Omega)],
        Mode::new(STAR),
    )
    .with_atom(LATER, OMEGA, OMEGA, Rc::new(dra::Later))
    .with_atom(CONSTANTLY, STAR, OMEGA, Rc::new(dra::Constantly))
    .with_atom(FOREVER, OMEGA, STAR, Rc::new(dra::Forever))
    .with_rule(RewriteRule::new(&[FOREVER, LATER], &[FOREVER]))
    .with_rule(RewriteRule::new(&[FOREVER, CONSTANTLY], &[]))
    .with_cell(ONE_TO_LATER, &[], &[LATER])
    .with_cell(CONST_FOREV_TO_ONE, &[CONSTANTLY, FOREVER], &[])
}

/// Generator support: guarded streams built by `g-cons` and Löb, taken
/// apart by `g-head` and `g-tail`.
pub fn gen_profile() -> GenProfile {
    let intro: IntroHook = Rc::new(|src: &mut dyn TermSource, ty: &TyExpr, ctx: &CtxExpr, depth: u32| {
        let TyExpr::Ext(code, args) = ty else { return None };
        if &**code != "GStream" || ctx.mode().name() != OMEGA {
            return None;
        }
        let a = &args[0];
        let (later, constantly) = (ModalityExpr::atom(LATER), ModalityExpr::atom(CONSTANTLY));
        let d = depth.saturating_sub(1);
        if depth == 0 || src.below(2) == 0 {
            let s = src.fresh("s");
            let inner = ctx.bind(later.clone(), &s, ty.clone());
            let head = src.term(a, &inner.lock(constantly.clone(), Mode::new(STAR)), d)?;
            let cons = ext_app(
                "g-cons",
                core::slice::from_ref(a),
                vec![mod_intro(constantly, head), mod_intro(later, svar(&s))],
            );
            Some(corpus::lob(&s, ty.clone(), cons))
        } else {
            let head = src.term(a, &ctx.lock(constantly.clone(), Mode::new(STAR)), d)?;
            let tail = src.term(ty, &ctx.lock(later.clone(), Mode::new(OMEGA)), d)?;
            Some(ext_app(
                "g-cons",
                core::slice::from_ref(a),
                vec![mod_intro(constantly, head), mod_intro(later, tail)],
            ))
        }
    });
    let elim: ElimHook = Rc::new(|ty: &TyExpr, m: &Mode| {
        let TyExpr::Ext(code, args) = ty else { return Vec::new() };
        if &**code != "GStream" || m.name() != OMEGA {
            return Vec::new();
        }
        let a = &args[0];
        vec![
            (corpus::g_head(a), TyExpr::modal(ModalityExpr::atom(CONSTANTLY), a.clone())),
            (corpus::g_tail(a), TyExpr::modal(ModalityExpr::atom(LATER), ty.clone())),
        ]
    });
    GenProfile { ext_types: vec![Rc::from("GStream")], intros: vec![intro], elims: vec![elim] }
}

pub fn instantiation() -> Instantiation {
    Instantiation::new(mode_theory())
        .with_ty_ext(stream::GStream)
        .with_tm_ext(stream::GHead)
        .with_tm_ext(stream::GTail)
        .with_tm_ext(stream::GCons)
        .with_tm_ext(stream::Loeb)
        .with_provider(StreamExtraction)
}

/// Extraction of `⟨forever | GStream A⟩` to host streams. Element `k` is the
/// last entry of the stage-`k` vector.
pub struct StreamExtraction;

impl ExtractProvider for StreamExtraction {
    fn provide(&self, ck: &Checker<'_>, ty: &TyExpr) -> Option<Tcm<Extractable>> {
        let TyExpr::Modal(mu, inner) = ty else { return None };
        let TyExpr::Ext(code, args) = &**inner else { return None };
        let atoms = mu.flatten();
        if atoms.len() != 1 || &*atoms[0] != FOREVER || &**code != "GStream" || args.len() != 1 {
            return None;
        }
        Some(extractable_for(ck, &args[0]).map(|elem| {
            let (x, e) = (elem.clone(), elem.clone());
            Extractable::new(
                format!("Stream {}", elem.translated_type()),
                move |v| {
                    let (fam, x) = (v.as_fam().clone(), x.clone());
                    HostVal::Stream(HostStream::new(move |k| {
                        let k32 = u32::try_from(k).expect("stream index out of range");
                        let cell = fam(&Obj::Stage(k32));
                        x.extract_cell(&cell.as_vec()[k as usize])
                    }))
                },
                move |h| {
                    let (s, e) = (h.as_stream().clone(), e.clone());
                    Value::Fam(Rc::new(move |z| {
                        let items: Vec<Value> =
                            (0..=u64::from(z.stage())).map(|i| e.embed_cell(&s.at(i))).collect();
                        Value::vec(items)
                    }))
                },
            )
        }))
    }
}
