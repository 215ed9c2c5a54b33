//! The integer representation-independence example.

use crate::check::Checker;
use crate::mode_theory::{ModalityExpr, Mode};
use crate::syntax::{app, ext, lam, lift_a, mod_intro, modal_app, modal_lam, svar, ExtArg, TmExpr, TyExpr};
use crate::tcm::{Tcm, TypeError};

use super::{Sign, ADD_Z, FORGET_LEFT, FORGET_RIGHT, NEGATE_Z, Z};

/// Integer interface over a type `A`: `add : A ⇛ A ⇛ A` and
/// `negate : A ⇛ A`.
#[derive(Clone, Debug)]
pub struct IntStructure {
    pub ty: TyExpr,
    pub add: TmExpr,
    pub negate: TmExpr,
}

impl IntStructure {
    /// Check the two type-side constraints at mode `m`.
    pub fn check(&self, ck: &Checker<'_>, m: &Mode) -> Tcm<()> {
        let a = &self.ty;
        let wanted = [
            ("add", &self.add, TyExpr::arrows(&[a.clone(), a.clone()], a.clone())),
            ("negate", &self.negate, TyExpr::arrow(a.clone(), a.clone())),
        ];
        for (field, t, ty) in wanted {
            let r = ck.infer_closed(t, m)?;
            ck.ty_equiv(&ty, &r.ty, m).map_err(|e| {
                TypeError::new("IntStructure", alloc::format!("{field} has type {}: {}", r.ty, e.message))
            })?;
        }
        Ok(())
    }
}

pub fn int_z() -> TyExpr {
    TyExpr::ext(Z, alloc::vec::Vec::new())
}

/// `ℤ-int`, built from relation-preserving host operations.
pub fn z_int() -> IntStructure {
    IntStructure {
        ty: int_z(),
        add: ext(ADD_Z, alloc::vec::Vec::new()),
        negate: ext(NEGATE_Z, alloc::vec::Vec::new()),
    }
}

/// `subtract s = lam[a : A] lam[b : A] add s ∙ a ∙ (negate s ∙ b)`.
pub fn subtract(s: &IntStructure) -> TmExpr {
    lam(
        "a",
        s.ty.clone(),
        lam("b", s.ty.clone(), app(app(s.add.clone(), svar("a")), app(s.negate.clone(), svar("b")))),
    )
}

fn forget_right() -> ModalityExpr {
    ModalityExpr::atom(FORGET_RIGHT)
}

fn forget_left() -> ModalityExpr {
    ModalityExpr::atom(FORGET_LEFT)
}

/// `lam[forget-right | x : Z] lam[forget-right | y : Z] mod⟨forget-right⟩ (subtract ℤ-int ∙ x ∙ y)`.
pub fn subtract_star_left() -> TmExpr {
    modal_lam(
        forget_right(),
        "x",
        int_z(),
        modal_lam(
            forget_right(),
            "y",
            int_z(),
            mod_intro(forget_right(), app(app(subtract(&z_int()), svar("x")), svar("y"))),
        ),
    )
}

/// `liftA2 forget-left ∙⟨forget-left⟩ subtract ℤ-int`.
pub fn subtract_star_right() -> TmExpr {
    let z = int_z();
    modal_app(lift_a(&forget_left(), &[z.clone(), z.clone()], &z), forget_left(), subtract(&z_int()))
}

pub fn diffnat(a: u64, b: u64) -> TmExpr {
    ext("diffnat", alloc::vec![ExtArg::Num(a), ExtArg::Num(b)])
}

pub fn signnat(sign: Sign, n: u64) -> TmExpr {
    ext("signnat", alloc::vec![ExtArg::Name(alloc::format!("{sign}").into()), ExtArg::Num(n)])
}
