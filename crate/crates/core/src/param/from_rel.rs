//! Built-in ∧-types given by two host types and a relation between them, and
//! term formers lifting relation-preserving host functions.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;

use crate::check::{Checker, Inferred};
use crate::instance::{TmExtension, TyExtension};
use crate::mode_theory::Mode;
use crate::model::{BaseCategory, ClosedTy, FunValue, HostValue, Obj, SemTm, SemType, TyIso, Value};
use crate::syntax::{ArgKind, CtxExpr, ExtArg, TyExpr};
use crate::tcm::{type_error, Tcm};

use super::WEDGE;

type Rel = Rc<dyn Fn(&HostValue, &HostValue) -> bool>;
type Sampler = Rc<dyn Fn(u64) -> (HostValue, HostValue)>;

/// Description of a `FromRel` type: host type tags for the two legs, the
/// relation, and a sampler of related pairs used by probes.
#[derive(Clone)]
pub struct RelCode {
    name: Rc<str>,
    left_tag: Rc<str>,
    right_tag: Rc<str>,
    rel: Rel,
    sample: Sampler,
}

impl RelCode {
    pub fn new(
        name: &str,
        left_tag: &str,
        right_tag: &str,
        rel: impl Fn(&HostValue, &HostValue) -> bool + 'static,
        sample: impl Fn(u64) -> (HostValue, HostValue) + 'static,
    ) -> Self {
        RelCode {
            name: name.into(),
            left_tag: left_tag.into(),
            right_tag: right_tag.into(),
            rel: Rc::new(rel),
            sample: Rc::new(sample),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn left_tag(&self) -> &str {
        &self.left_tag
    }

    pub fn right_tag(&self) -> &str {
        &self.right_tag
    }

    pub fn related(&self, l: &HostValue, r: &HostValue) -> bool {
        l.tag() == &*self.left_tag && r.tag() == &*self.right_tag && (self.rel)(l, r)
    }

    /// A relation cell; unrelated pairs are rejected.
    pub fn rel_cell(&self, l: HostValue, r: HostValue) -> Result<Value, String> {
        if self.related(&l, &r) {
            Ok(Value::rel(Value::Host(l), Value::Host(r)))
        } else {
            Err(format!("{l} and {r} are not related by {}", self.name))
        }
    }

    /// The syntactic type `FromRel` of this code.
    pub fn ty_expr(&self) -> TyExpr {
        TyExpr::ext(&self.name, Vec::new())
    }

    fn tag_at(&self, x: &Obj) -> &str {
        match x {
            Obj::Left => &self.left_tag,
            _ => &self.right_tag,
        }
    }
}

/// The semantic type of a [`RelCode`] over the walking cospan.
pub struct FromRelTy {
    code: RelCode,
}

pub fn from_rel_ty(code: RelCode) -> ClosedTy {
    ClosedTy::new(FromRelTy { code })
}

/// Restriction along `x -> y` in any `FromRel` type: identity or projection.
fn project(x: &Obj, y: &Obj, v: &Value) -> Value {
    match (x, y) {
        (a, b) if a == b => v.clone(),
        (Obj::Left, Obj::Relation) => v.as_rel().0.clone(),
        (Obj::Right, Obj::Relation) => v.as_rel().1.clone(),
        _ => panic!("no morphism {x} -> {y} in the walking cospan"),
    }
}

impl SemType for FromRelTy {
    fn base(&self) -> BaseCategory {
        BaseCategory::Wedge
    }

    fn member(&self, x: &Obj, v: &Value) -> bool {
        match (x, v) {
            (Obj::Left | Obj::Right, Value::Host(h)) => h.tag() == self.code.tag_at(x),
            (Obj::Relation, Value::Rel(l, r)) => match (&**l, &**r) {
                (Value::Host(l), Value::Host(r)) => self.code.related(l, r),
                _ => false,
            },
            _ => false,
        }
    }

    fn restrict(&self, x: &Obj, y: &Obj, v: &Value) -> Value {
        project(x, y, v)
    }

    fn sample(&self, x: &Obj, seed: u64) -> Value {
        let (l, r) = (self.code.sample)(seed);
        match x {
            Obj::Left => Value::Host(l),
            Obj::Right => Value::Host(r),
            _ => self.code.rel_cell(l, r).expect("sampler produced an unrelated pair"),
        }
    }

    fn probe_eq(&self, _x: &Obj, a: &Value, b: &Value) -> bool {
        a.first_order_eq(b)
    }

    fn describe(&self) -> String {
        String::from(self.code.name())
    }
}

/// The type former `FromRel code`, written by the code's name.
pub struct FromRelExt(pub RelCode);

impl TyExtension for FromRelExt {
    fn code(&self) -> &str {
        self.0.name()
    }

    fn arity(&self) -> usize {
        0
    }

    fn arg_modes(&self, at: &Mode) -> Tcm<Vec<Mode>> {
        if at.name() != WEDGE {
            return type_error("Ty-Ext", format!("{} lives at mode {WEDGE}, not {at}", self.0.name()));
        }
        Ok(Vec::new())
    }

    fn interpret(&self, _args: &[ClosedTy]) -> ClosedTy {
        from_rel_ty(self.0.clone())
    }

    fn map_iso(&self, _src: &[ClosedTy], _tgt: &[ClosedTy], _isos: &[TyIso]) -> TyIso {
        TyIso::identity()
    }
}

pub type HostFn1 = Rc<dyn Fn(&HostValue) -> HostValue>;
pub type HostFn2 = Rc<dyn Fn(&HostValue, &HostValue) -> HostValue>;

fn host(v: &Value) -> &HostValue {
    v.as_host()
}

fn checked_rel(code: &RelCode, l: HostValue, r: HostValue, witness: impl FnOnce() -> String) -> Value {
    match code.rel_cell(l, r) {
        Ok(v) => v,
        Err(e) => panic!("relation preservation failed on {}: {e}", witness()),
    }
}

/// Denotation of `from-rel1`: `f_left` at left, `f_right` at right and both
/// componentwise at relation, where preservation is asserted.
pub fn from_rel1_sem(b: &RelCode, f_left: &HostFn1, f_right: &HostFn1) -> SemTm {
    let (b, fl, fr) = (b.clone(), f_left.clone(), f_right.clone());
    SemTm::new(move |x, _| {
        let (b, fl, fr) = (b.clone(), fl.clone(), fr.clone());
        Value::Fun(FunValue::new(*x, move |y, v| match y {
            Obj::Left => Value::Host(fl(host(v))),
            Obj::Right => Value::Host(fr(host(v))),
            _ => {
                let (l, r) = v.as_rel();
                checked_rel(&b, fl(host(l)), fr(host(r)), || format!("{} ∼ {}", l.render(), r.render()))
            }
        }))
    })
}

/// Denotation of `from-rel2`, curried.
pub fn from_rel2_sem(c: &RelCode, f_left: &HostFn2, f_right: &HostFn2) -> SemTm {
    let (c, fl, fr) = (c.clone(), f_left.clone(), f_right.clone());
    SemTm::new(move |x, _| {
        let (c, fl, fr) = (c.clone(), fl.clone(), fr.clone());
        Value::Fun(FunValue::new(*x, move |y, v1| {
            let (c, fl, fr, v1, y) = (c.clone(), fl.clone(), fr.clone(), v1.clone(), *y);
            Value::Fun(FunValue::new(y, move |w, v2| {
                let v1 = project(w, &y, &v1);
                match w {
                    Obj::Left => Value::Host(fl(host(&v1), host(v2))),
                    Obj::Right => Value::Host(fr(host(&v1), host(v2))),
                    _ => {
                        let ((l1, r1), (l2, r2)) = (v1.as_rel(), v2.as_rel());
                        checked_rel(&c, fl(host(l1), host(l2)), fr(host(r1), host(r2)), || {
                            format!("{} ∼ {} and {} ∼ {}", l1.render(), r1.render(), l2.render(), r2.render())
                        })
                    }
                }
            }))
        }))
    })
}

fn at_wedge(ctx: &CtxExpr, name: &str, args: &[ExtArg]) -> Tcm<()> {
    if ctx.mode().name() != WEDGE {
        return type_error("Tm-Ext", format!("{name} is only available at mode {WEDGE}"));
    }
    if !args.is_empty() {
        return type_error("Tm-Ext", format!("{name} takes no arguments"));
    }
    Ok(())
}

/// A unary function `A ⇛ B` between `FromRel` types.
pub struct FromRel1 {
    pub name: Rc<str>,
    pub dom: RelCode,
    pub cod: RelCode,
    pub f_left: HostFn1,
    pub f_right: HostFn1,
}

impl TmExtension for FromRel1 {
    fn code(&self) -> &str {
        &self.name
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[]
    }

    fn infer_interpret(&self, _ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        at_wedge(ctx, &self.name, args)?;
        Ok(Inferred {
            ty: TyExpr::arrow(self.dom.ty_expr(), self.cod.ty_expr()),
            tm: from_rel1_sem(&self.cod, &self.f_left, &self.f_right),
        })
    }
}

/// A binary function `A ⇛ B ⇛ C` between `FromRel` types.
pub struct FromRel2 {
    pub name: Rc<str>,
    pub dom: (RelCode, RelCode),
    pub cod: RelCode,
    pub f_left: HostFn2,
    pub f_right: HostFn2,
}

impl TmExtension for FromRel2 {
    fn code(&self) -> &str {
        &self.name
    }

    fn arg_kinds(&self) -> &[ArgKind] {
        &[]
    }

    fn infer_interpret(&self, _ck: &Checker<'_>, args: &[ExtArg], ctx: &CtxExpr) -> Tcm<Inferred> {
        at_wedge(ctx, &self.name, args)?;
        Ok(Inferred {
            ty: TyExpr::arrows(&[self.dom.0.ty_expr(), self.dom.1.ty_expr()], self.cod.ty_expr()),
            tm: from_rel2_sem(&self.cod, &self.f_left, &self.f_right),
        })
    }
}
