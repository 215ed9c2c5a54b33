//! Closed semantic types and the standard type formers.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;

use super::category::{BaseCategory, Obj};
use super::ctx::{Env, SemCtx};
use super::value::{FunValue, Value};

/// Stages inspected when a query ranges over infinitely many ω objects.
pub const PROBE_BOUND: u32 = 5;

/// Number of sample inputs used when probing function cells.
const PROBE_SEEDS: u64 = 3;

/// A presheaf over a base category whose cells do not depend on the context.
///
/// Cells are never enumerated. `member` is a testing oracle and `sample`
/// produces global elements (restriction-compatible families of cells) so
/// that function cells can be probed extensionally.
pub trait SemType {
    fn base(&self) -> BaseCategory;

    /// Whether `v` is a cell at `x`.
    fn member(&self, x: &Obj, v: &Value) -> bool;

    /// Restriction along the morphism `x -> y` of a cell at `y`.
    fn restrict(&self, x: &Obj, y: &Obj, v: &Value) -> Value;

    /// The cell at `x` of a deterministic global element chosen by `seed`.
    fn sample(&self, x: &Obj, seed: u64) -> Value;

    /// Equality of cells at `x`; function cells are compared on probes.
    fn probe_eq(&self, x: &Obj, a: &Value, b: &Value) -> bool;

    fn describe(&self) -> String;
}

/// A closed semantic type: it lives in every context over its base category.
#[derive(Clone)]
pub struct ClosedTy(Rc<dyn SemType>);

impl ClosedTy {
    pub fn new(ty: impl SemType + 'static) -> Self {
        ClosedTy(Rc::new(ty))
    }

    /// Instantiate in a semantic context.
    pub fn over(&self, ctx: &SemCtx) -> SemTy {
        assert_eq!(ctx.base(), self.base(), "type and context over different bases");
        SemTy { ctx: ctx.clone(), ty: self.clone() }
    }

    pub fn base(&self) -> BaseCategory {
        self.0.base()
    }

    pub fn member(&self, x: &Obj, v: &Value) -> bool {
        self.0.member(x, v)
    }

    pub fn restrict(&self, x: &Obj, y: &Obj, v: &Value) -> Value {
        assert!(self.base().hom(x, y), "restriction along a non-morphism {x} -> {y}");
        self.0.restrict(x, y, v)
    }

    pub fn sample(&self, x: &Obj, seed: u64) -> Value {
        self.0.sample(x, seed)
    }

    pub fn probe_eq(&self, x: &Obj, a: &Value, b: &Value) -> bool {
        self.0.probe_eq(x, a, b)
    }

    pub fn describe(&self) -> String {
        self.0.describe()
    }
}

impl core::fmt::Debug for ClosedTy {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.describe())
    }
}

/// A closed type instantiated in a context `Γ`.
///
/// Restriction takes the environment at the target object and computes the
/// restricted environment itself instead of receiving an equation for it.
#[derive(Clone)]
pub struct SemTy {
    ctx: SemCtx,
    ty: ClosedTy,
}

impl SemTy {
    pub fn ctx(&self) -> &SemCtx {
        &self.ctx
    }

    pub fn closed(&self) -> &ClosedTy {
        &self.ty
    }

    pub fn member(&self, x: &Obj, env: &[crate::model::Value], v: &Value) -> bool {
        self.ctx.member(x, env) && self.ty.member(x, v)
    }

    /// Restrict `(γy, v)` along `x -> y`, returning `(Γ ⟪ f ⟫ γy, T ⟪ f ⟫ v)`.
    pub fn restrict(&self, x: &Obj, y: &Obj, env: &[Value], v: &Value) -> (Env, Value) {
        (self.ctx.restrict(x, y, env), self.ty.restrict(x, y, v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscreteKind {
    Nat,
    Bool,
    Unit,
}

/// Constant presheaf of naturals, booleans or the unit type.
pub struct Discrete {
    kind: DiscreteKind,
    base: BaseCategory,
}

pub fn discrete_ty(kind: DiscreteKind, base: BaseCategory) -> ClosedTy {
    ClosedTy::new(Discrete { kind, base })
}

impl SemType for Discrete {
    fn base(&self) -> BaseCategory {
        self.base
    }

    fn member(&self, x: &Obj, v: &Value) -> bool {
        x.category() == self.base
            && matches!(
                (self.kind, v),
                (DiscreteKind::Nat, Value::Nat(_))
                    | (DiscreteKind::Bool, Value::Bool(_))
                    | (DiscreteKind::Unit, Value::Unit)
            )
    }

    fn restrict(&self, _x: &Obj, _y: &Obj, v: &Value) -> Value {
        assert!(self.member(_y, v), "not a {:?} cell: {v:?}", self.kind);
        v.clone()
    }

    fn sample(&self, _x: &Obj, seed: u64) -> Value {
        match self.kind {
            DiscreteKind::Nat => Value::Nat(seed.wrapping_mul(7) % 11),
            DiscreteKind::Bool => Value::Bool(seed.is_multiple_of(2)),
            DiscreteKind::Unit => Value::Unit,
        }
    }

    fn probe_eq(&self, _x: &Obj, a: &Value, b: &Value) -> bool {
        a.first_order_eq(b)
    }

    fn describe(&self) -> String {
        format!("{:?}", self.kind)
    }
}

/// Presheaf exponential `T ⇛ S`.
pub struct FunTy {
    dom: ClosedTy,
    cod: ClosedTy,
}

pub fn fun_ty(dom: ClosedTy, cod: ClosedTy) -> ClosedTy {
    assert_eq!(dom.base(), cod.base(), "function type over two bases");
    ClosedTy::new(FunTy { dom, cod })
}

impl SemType for FunTy {
    fn base(&self) -> BaseCategory {
        self.dom.base()
    }

    fn member(&self, x: &Obj, v: &Value) -> bool {
        let Value::Fun(f) = v else { return false };
        if f.at() != *x {
            return false;
        }
        self.base().below(x).iter().all(|y| {
            (0..PROBE_SEEDS).all(|s| {
                let out = f.apply(y, &self.dom.sample(y, s));
                self.cod.member(y, &out)
            })
        })
    }

    fn restrict(&self, x: &Obj, _y: &Obj, v: &Value) -> Value {
        Value::Fun(v.as_fun().restrict_to(x))
    }

    fn sample(&self, x: &Obj, seed: u64) -> Value {
        let cod = self.cod.clone();
        Value::Fun(FunValue::new(*x, move |y, _| cod.sample(y, seed)))
    }

    fn probe_eq(&self, x: &Obj, a: &Value, b: &Value) -> bool {
        let (f, g) = (a.as_fun(), b.as_fun());
        self.base().below(x).iter().all(|y| {
            (0..PROBE_SEEDS).all(|s| {
                let input = self.dom.sample(y, s);
                self.cod.probe_eq(y, &f.apply(y, &input), &g.apply(y, &input))
            })
        })
    }

    fn describe(&self) -> String {
        format!("({} ⇛ {})", self.dom.describe(), self.cod.describe())
    }
}

/// Componentwise product `T ⊠ S`.
pub struct ProdTy {
    fst: ClosedTy,
    snd: ClosedTy,
}

pub fn prod_ty(fst: ClosedTy, snd: ClosedTy) -> ClosedTy {
    assert_eq!(fst.base(), snd.base(), "product type over two bases");
    ClosedTy::new(ProdTy { fst, snd })
}

impl SemType for ProdTy {
    fn base(&self) -> BaseCategory {
        self.fst.base()
    }

    fn member(&self, x: &Obj, v: &Value) -> bool {
        match v {
            Value::Pair(a, b) => self.fst.member(x, a) && self.snd.member(x, b),
            _ => false,
        }
    }

    fn restrict(&self, x: &Obj, y: &Obj, v: &Value) -> Value {
        let (a, b) = v.as_pair();
        Value::pair(self.fst.restrict(x, y, a), self.snd.restrict(x, y, b))
    }

    fn sample(&self, x: &Obj, seed: u64) -> Value {
        Value::pair(self.fst.sample(x, seed), self.snd.sample(x, seed + 1))
    }

    fn probe_eq(&self, x: &Obj, a: &Value, b: &Value) -> bool {
        let ((a1, a2), (b1, b2)) = (a.as_pair(), b.as_pair());
        self.fst.probe_eq(x, a1, b1) && self.snd.probe_eq(x, a2, b2)
    }

    fn describe(&self) -> String {
        format!("({} ⊠ {})", self.fst.describe(), self.snd.describe())
    }
}

/// Check the presheaf identity and composition laws of `ty` on the given
/// sample cells, over all morphisms with endpoints in `objects(bound)`.
pub fn check_presheaf_laws(ty: &ClosedTy, bound: u32, seeds: u64) -> Result<(), String> {
    let cat = ty.base();
    let homs: Vec<(Obj, Obj)> = cat.morphisms(bound);
    for z in cat.objects(bound) {
        for seed in 0..seeds {
            let v = ty.sample(&z, seed);
            if !ty.member(&z, &v) {
                return Err(format!("sample {v:?} at {z} is not a member of {ty:?}"));
            }
            if !ty.probe_eq(&z, &ty.restrict(&z, &z, &v), &v) {
                return Err(format!("identity law fails at {z} for {ty:?}"));
            }
            for &(y, z2) in &homs {
                if z2 != z {
                    continue;
                }
                let vy = ty.restrict(&y, &z, &v);
                if !ty.probe_eq(&y, &vy, &ty.sample(&y, seed)) {
                    return Err(format!("sample of {ty:?} not natural along {y} -> {z}"));
                }
                for &(x, y2) in &homs {
                    if y2 != y {
                        continue;
                    }
                    let two_steps = ty.restrict(&x, &y, &vy);
                    let one_step = ty.restrict(&x, &z, &v);
                    if !ty.probe_eq(&x, &two_steps, &one_step) {
                        return Err(format!("composition law fails for {x} -> {y} -> {z} in {ty:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(base: BaseCategory) -> ClosedTy {
        discrete_ty(DiscreteKind::Nat, base)
    }

    #[test]
    fn discrete_cells_are_constant() {
        let n = nat(BaseCategory::Omega);
        let v = Value::Nat(4);
        assert!(n.member(&Obj::Stage(3), &v));
        assert_eq!(n.restrict(&Obj::Stage(1), &Obj::Stage(3), &v).as_nat(), 4);
        assert!(!n.member(&Obj::Stage(0), &Value::Bool(true)));
    }

    #[test]
    fn function_restriction_then_application_matches_direct_application() {
        let base = BaseCategory::Omega;
        let ty = fun_ty(nat(base), nat(base));
        let f = Value::Fun(FunValue::new(Obj::Stage(2), |y, v| {
            Value::Nat(v.as_nat() + 10 * u64::from(y.stage()))
        }));
        let restricted = ty.restrict(&Obj::Stage(1), &Obj::Stage(2), &f);
        let via_restriction = restricted.as_fun().apply(&Obj::Stage(0), &Value::Nat(3));
        let direct = f.as_fun().apply(&Obj::Stage(0), &Value::Nat(3));
        assert_eq!(via_restriction.as_nat(), direct.as_nat());
        assert_eq!(direct.as_nat(), 3);
    }

    #[test]
    fn product_restriction_commutes_with_projection() {
        let base = BaseCategory::Omega;
        let inner = fun_ty(nat(base), nat(base));
        let ty = prod_ty(inner.clone(), nat(base));
        let v = ty.sample(&Obj::Stage(3), 1);
        let (x, y) = (Obj::Stage(1), Obj::Stage(3));
        let fst_then_restrict = inner.restrict(&x, &y, v.as_pair().0);
        let restrict_then_fst = ty.restrict(&x, &y, &v).as_pair().0.clone();
        assert!(inner.probe_eq(&x, &fst_then_restrict, &restrict_then_fst));
    }

    #[test]
    fn standard_formers_satisfy_presheaf_laws() {
        for base in [BaseCategory::Star, BaseCategory::Omega, BaseCategory::Wedge] {
            let n = nat(base);
            let b = discrete_ty(DiscreteKind::Bool, base);
            for ty in [
                n.clone(),
                b.clone(),
                fun_ty(n.clone(), b.clone()),
                prod_ty(fun_ty(n.clone(), n.clone()), b.clone()),
                fun_ty(fun_ty(n.clone(), n.clone()), n.clone()),
            ] {
                check_presheaf_laws(&ty, 5, 3).unwrap();
            }
        }
    }
}
