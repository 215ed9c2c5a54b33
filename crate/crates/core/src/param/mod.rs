//! Binary parametricity: the trivial mode `star` and a mode `wedge`
//! interpreted by the walking cospan, related by `forget-right` and
//! `forget-left`. Ships the built-in integer type `Z` relating [`DiffNat`] and
//! [`SignNat`].

pub mod corpus;
pub mod dra;
pub mod from_rel;
pub mod int;

use alloc::format;
use alloc::rc::Rc;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{Checker, Inferred};
use crate::extract::{Extractable, HostVal};
use crate::gen::{ext_app, ElimHook, GenProfile, IntroHook, TermSource};
use crate::instance::{ExtractProvider, Instantiation, TmExtension};
use crate::mode_theory::{ModalityExpr, Mode, ModeTheory};
use crate::model::{BaseCategory, HostValue, SemTm, Value};
use crate::syntax::{ArgKind, CtxExpr, ExtArg, TyExpr};
use crate::tcm::{type_error, Tcm};

pub use from_rel::{from_rel_ty, FromRel1, FromRel2, FromRelExt, RelCode};
pub use int::{DiffNat, Sign, SignNat};

pub const STAR: &str = "star";
pub const WEDGE: &str = "wedge";
pub const FORGET_RIGHT: &str = "forget-right";
pub const FORGET_LEFT: &str = "forget-left";
pub const Z: &str = "Z";
pub const ADD_Z: &str = "add-Z";
pub const NEGATE_Z: &str = "negate-Z";
pub const DIFFNAT_TAG: &str = "DiffNat";
pub const SIGNNAT_TAG: &str = "SignNat";

pub fn mode_theory() -> ModeTheory {
    ModeTheory::new(
        "parametricity",
        vec![(Mode::new(STAR), BaseCategory::Star), (Mode::new(WEDGE), BaseCategory::Wedge)],
        Mode::new(STAR),
    )
    .with_atom(FORGET_RIGHT, WEDGE, STAR, Rc::new(dra::Forget::right()))
    .with_atom(FORGET_LEFT, WEDGE, STAR, Rc::new(dra::Forget::left()))
}

pub fn diffnat_host(d: DiffNat) -> HostValue {
    HostValue::new(DIFFNAT_TAG, d)
}

pub fn signnat_host(s: SignNat) -> HostValue {
    HostValue::new(SIGNNAT_TAG, s)
}

fn as_diff(h: &HostValue) -> DiffNat {
    *h.downcast::<DiffNat>().expect("expected a DiffNat host value")
}

fn as_sign(h: &HostValue) -> SignNat {
    *h.downcast::<SignNat>().expect("expected a SignNat host value")
}

/// The code of `Z`: `DiffNat` on the left, `SignNat` on the right, related
/// when they denote the same integer.
pub fn z_code() -> RelCode {
    RelCode::new(
        Z,
        DIFFNAT_TAG,
        SIGNNAT_TAG,
        |l, r| match (l.downcast::<DiffNat>(), r.downcast::<SignNat>()) {
            (Some(d), Some(s)) => int::related(d, s),
            _ => false,
        },
        |seed| {
            let d = DiffNat(seed % 7, (seed / 7) % 7);
            let options: Vec<SignNat> = int::related_signnats(&d).collect();
            let s = options[(seed / 49) as usize % options.len()];
            (diffnat_host(d), signnat_host(s))
        },
    )
}

/// `from-rel2 Z Z Z _+D_ _+S_`.
pub fn add_z() -> FromRel2 {
    FromRel2 {
        name: ADD_Z.into(),
        dom: (z_code(), z_code()),
        cod: z_code(),
        f_left: Rc::new(|a, b| diffnat_host(int::add_diff(as_diff(a), as_diff(b)))),
        f_right: Rc::new(|a, b| signnat_host(int::add_sign(as_sign(a), as_sign(b)))),
    }
}

/// `from-rel1 Z Z negateD negateS`.
pub fn negate_z() -> FromRel1 {
    FromRel1 {
        name: NEGATE_Z.into(),
        dom: z_code(),
        cod: z_code(),
        f_left: Rc::new(|a| diffnat_host(int::negate_diff(as_diff(a)))),
        f_right: Rc::new(|a| signnat_host(int::negate_sign(as_sign(a)))),
    }
}

fn at_star(ctx: &CtxExpr, name: &str) -> Tcm<()> {
    if ctx.mode().name() != STAR {
        return type_error("Tm-Ext", format!("{name} is only available at mode {STAR}"));
    }
    Ok(())
}

/// `diffnat a b : ⟨forget-right | Z⟩`.
pub struct DiffNatLit;

impl TmExtension for DiffNatLit {
    fn code(&self) -> &str {
        "diffnat"
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[ArgKind::Num, ArgKind::Num]
    }

    fn infer_interpret(&self, _ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        at_star(ctx, self.code())?;
        let [ExtArg::Num(a), ExtArg::Num(b)] = args else {
            return type_error("Tm-Ext", "diffnat expects two numbers");
        };
        Ok(Inferred {
            ty: TyExpr::modal(ModalityExpr::atom(FORGET_RIGHT), z_code().ty_expr()),
            tm: SemTm::constant(Value::Host(diffnat_host(DiffNat(*a, *b)))),
        })
    }
}

/// `signnat pos n : ⟨forget-left | Z⟩`.
pub struct SignNatLit;

impl TmExtension for SignNatLit {
    fn code(&self) -> &str {
        "signnat"
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[ArgKind::Name, ArgKind::Num]
    }

    fn infer_interpret(&self, _ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        at_star(ctx, self.code())?;
        let [ExtArg::Name(sign), ExtArg::Num(n)] = args else {
            return type_error("Tm-Ext", "signnat expects a sign and a number");
        };
        let Some(sign) = Sign::parse(sign) else {
            return type_error("Tm-Ext", format!("unknown sign {sign}, expected pos or neg"));
        };
        Ok(Inferred {
            ty: TyExpr::modal(ModalityExpr::atom(FORGET_LEFT), z_code().ty_expr()),
            tm: SemTm::constant(Value::Host(signnat_host(SignNat(sign, *n)))),
        })
    }
}

/// Extraction of `⟨forget-right | T⟩` and `⟨forget-left | T⟩` for a
/// `FromRel` type `T` to the opaque host values of the kept leg.
pub struct FromRelExtraction {
    codes: Vec<RelCode>,
}

impl FromRelExtraction {
    pub fn new(codes: Vec<RelCode>) -> Self {
        FromRelExtraction { codes }
    }
}

impl ExtractProvider for FromRelExtraction {
    fn provide(&self, _ck: &Checker<'_>, ty: &TyExpr) -> Option<Tcm<Extractable>> {
        let TyExpr::Modal(mu, inner) = ty else { return None };
        let TyExpr::Ext(name, args) = &**inner else { return None };
        let code = self.codes.iter().find(|c| c.name() == &**name && args.is_empty())?;
        let atoms = mu.flatten();
        let tag = match atoms.as_slice() {
            [a] if &**a == FORGET_RIGHT => code.left_tag().to_string(),
            [a] if &**a == FORGET_LEFT => code.right_tag().to_string(),
            _ => return None,
        };
        let expected = tag.clone();
        Some(Ok(Extractable::new(
            tag,
            |v| HostVal::Opaque(v.as_host().clone()),
            move |h| {
                let h = h.as_opaque();
                assert_eq!(h.tag(), expected, "host value mismatch: expected {expected}");
                Value::Host(h.clone())
            },
        )))
    }
}

/// Generator support: integers at `wedge` come from variables through
/// `add-Z` and `negate-Z`, and at `star` from literals.
pub fn gen_profile() -> GenProfile {
    let intro: IntroHook = Rc::new(|src: &mut dyn TermSource, ty: &TyExpr, ctx: &CtxExpr, depth: u32| {
        let z = z_code().ty_expr();
        if *ty == z && ctx.mode().name() == WEDGE && depth > 0 {
            let d = depth - 1;
            return if src.below(2) == 0 {
                Some(ext_app(NEGATE_Z, &[], vec![src.term(&z, ctx, d)?]))
            } else {
                Some(ext_app(ADD_Z, &[], vec![src.term(&z, ctx, d)?, src.term(&z, ctx, d)?]))
            };
        }
        let TyExpr::Modal(mu, inner) = ty else { return None };
        if **inner != z || ctx.mode().name() != STAR {
            return None;
        }
        let (a, b) = (u64::from(src.below(5)), u64::from(src.below(5)));
        match mu.flatten().as_slice() {
            [m] if &**m == FORGET_RIGHT => Some(corpus::diffnat(a, b)),
            [m] if &**m == FORGET_LEFT => {
                let sign = if src.below(2) == 0 { Sign::Pos } else { Sign::Neg };
                Some(corpus::signnat(sign, a))
            }
            _ => None,
        }
    });
    let elim: ElimHook = Rc::new(|ty: &TyExpr, m: &Mode| {
        if *ty == z_code().ty_expr() && m.name() == WEDGE {
            vec![(ext_app(NEGATE_Z, &[], Vec::new()), ty.clone())]
        } else {
            Vec::new()
        }
    });
    GenProfile { ext_types: vec![Rc::from(Z)], intros: vec![intro], elims: vec![elim] }
}

pub fn instantiation() -> Instantiation {
    Instantiation::new(mode_theory())
        .with_ty_ext(FromRelExt(z_code()))
        .with_tm_ext(add_z())
        .with_tm_ext(negate_z())
        .with_tm_ext(DiffNatLit)
        .with_tm_ext(SignNatLit)
        .with_provider(FromRelExtraction::new(vec![z_code()]))
}
