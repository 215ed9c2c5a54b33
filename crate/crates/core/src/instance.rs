//! A mode theory bundled with the type and term extensions and extraction
//! providers of an application.

use alloc::rc::Rc;
use alloc::vec::Vec;

use crate::check::{Checker, Inferred};
use crate::extract::Extractable;
use crate::mode_theory::{Mode, ModeTheory};
use crate::model::{ClosedTy, TyIso};
use crate::syntax::{ArgKind, CtxExpr, ExtArg, TyExpr};
use crate::tcm::Tcm;

/// An application-specific type former.
pub trait TyExtension {
    fn code(&self) -> &str;

    /// Number of type arguments.
    fn arity(&self) -> usize;

    /// The modes of the type arguments when the type is used at `at`, or a
    /// type error when it cannot live at `at`.
    fn arg_modes(&self, at: &Mode) -> Tcm<Vec<Mode>>;

    fn interpret(&self, args: &[ClosedTy]) -> ClosedTy;

    /// Functorial action on isomorphisms `srcᵢ ≅ tgtᵢ` of the arguments.
    fn map_iso(&self, src: &[ClosedTy], tgt: &[ClosedTy], isos: &[TyIso]) -> TyIso;
}

/// An application-specific term former, with its own typing rule.
pub trait TmExtension {
    fn code(&self) -> &str;

    fn arg_kinds(&self) -> &[ArgKind];

    fn infer_interpret(&self, ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred>;
}

/// Extraction support for types the structural cases do not cover.
pub trait ExtractProvider {
    /// `None` when the provider does not handle `ty`.
    fn provide(&self, ck: &Checker<'_>, ty: &TyExpr) -> Option<Tcm<Extractable>>;
}

pub struct Instantiation {
    pub theory: ModeTheory,
    ty_exts: Vec<Rc<dyn TyExtension>>,
    tm_exts: Vec<Rc<dyn TmExtension>>,
    providers: Vec<Rc<dyn ExtractProvider>>,
}

impl Instantiation {
    pub fn new(theory: ModeTheory) -> Self {
        Instantiation { theory, ty_exts: Vec::new(), tm_exts: Vec::new(), providers: Vec::new() }
    }

    pub fn with_ty_ext(mut self, e: impl TyExtension + 'static) -> Self {
        self.ty_exts.push(Rc::new(e));
        self
    }

    pub fn with_tm_ext(mut self, e: impl TmExtension + 'static) -> Self {
        self.tm_exts.push(Rc::new(e));
        self
    }

    pub fn with_provider(mut self, p: impl ExtractProvider + 'static) -> Self {
        self.providers.push(Rc::new(p));
        self
    }

    pub fn ty_ext(&self, code: &str) -> Option<&Rc<dyn TyExtension>> {
        self.ty_exts.iter().find(|e| e.code() == code)
    }

    pub fn tm_ext(&self, code: &str) -> Option<&Rc<dyn TmExtension>> {
        self.tm_exts.iter().find(|e| e.code() == code)
    }

    pub fn ty_exts(&self) -> &[Rc<dyn TyExtension>] {
        &self.ty_exts
    }

    pub fn tm_exts(&self) -> &[Rc<dyn TmExtension>] {
        &self.tm_exts
    }

    pub fn providers(&self) -> &[Rc<dyn ExtractProvider>] {
        &self.providers
    }

    pub fn checker(&self) -> Checker<'_> {
        Checker::new(self)
    }
}
