//! Dependent right adjoints and the natural transformations between them.
//!
//! Every shipped lock functor is a reindexing: `(Γ.🔒μ)⟨z⟩ = Γ⟨φ z⟩` for a
//! (partial) object map `φ : dom -> cod` whose domain of definition is a
//! sieve. A cell of `⟨μ | A⟩` at `x` is then determined by the family of
//! `A`-cells at all `z` with `φ z -> x`; each DRA chooses a concrete cell
//! representation and converts to and from such families.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;

use super::category::{BaseCategory, Obj};
use super::ctx::SemCtx;
use super::iso::TyIso;
use super::tm::SemTm;
use super::ty::{ClosedTy, SemType, PROBE_BOUND};
use super::value::{Family, Value};

pub trait Dra {
    fn name(&self) -> String;

    /// Base category of the types the modality is applied to.
    fn dom(&self) -> BaseCategory;

    /// Base category of the resulting modal types.
    fn cod(&self) -> BaseCategory;

    /// The object map `φ` of the lock functor.
    fn lock_ob(&self, z: &Obj) -> Option<Obj>;

    /// A modal type with a non-generic representation, if any.
    fn mod_ty_override(&self, _inner: &ClosedTy) -> Option<ClosedTy> {
        None
    }

    /// The family `z ↦ A⟨z⟩` (for `φ z -> x`) represented by a cell at `x`.
    fn to_family(&self, inner: &ClosedTy, x: &Obj, v: &Value) -> Family;

    /// Inverse of [`Dra::to_family`].
    fn from_family(&self, inner: &ClosedTy, x: &Obj, fam: Family) -> Value;

    /// Cheap structural check that `v` has this modality's representation.
    fn shape_ok(&self, _inner: &ClosedTy, _x: &Obj, _v: &Value) -> bool {
        true
    }
}

pub type DraRef = Rc<dyn Dra>;

/// The objects `z` with `φ z -> x`, truncated to stages below
/// `max(PROBE_BOUND, x + 1)` when the domain is ω.
pub fn family_domain(dra: &dyn Dra, x: &Obj) -> Vec<Obj> {
    let bound = match x {
        Obj::Stage(n) => PROBE_BOUND.max(n + 1),
        _ => PROBE_BOUND,
    };
    dra.dom()
        .objects(bound)
        .into_iter()
        .filter(|z| dra.lock_ob(z).is_some_and(|pz| dra.cod().hom(&pz, x)))
        .collect()
}

/// `⟨μ | A⟩`.
pub fn mod_ty(dra: &DraRef, inner: &ClosedTy) -> ClosedTy {
    assert_eq!(inner.base(), dra.dom(), "⟨{} | -⟩ applied to a type over the wrong base", dra.name());
    dra.mod_ty_override(inner)
        .unwrap_or_else(|| ClosedTy::new(ModalTy { dra: dra.clone(), inner: inner.clone() }))
}

/// Generic modal type whose presheaf structure is derived from the family
/// conversions of its DRA.
pub struct ModalTy {
    dra: DraRef,
    inner: ClosedTy,
}

impl SemType for ModalTy {
    fn base(&self) -> BaseCategory {
        self.dra.cod()
    }

    fn member(&self, x: &Obj, v: &Value) -> bool {
        if x.category() != self.base() || !self.dra.shape_ok(&self.inner, x, v) {
            return false;
        }
        let fam = self.dra.to_family(&self.inner, x, v);
        let dom = family_domain(&*self.dra, x);
        dom.iter().all(|z| self.inner.member(z, &fam(z)))
            && dom.iter().all(|z| {
                dom.iter()
                    .filter(|w| self.dra.dom().generates(w, z))
                    .all(|w| self.inner.probe_eq(w, &self.inner.restrict(w, z, &fam(z)), &fam(w)))
            })
    }

    fn restrict(&self, x: &Obj, y: &Obj, v: &Value) -> Value {
        let fam = self.dra.to_family(&self.inner, y, v);
        self.dra.from_family(&self.inner, x, fam)
    }

    fn sample(&self, x: &Obj, seed: u64) -> Value {
        let inner = self.inner.clone();
        self.dra.from_family(&self.inner, x, Rc::new(move |z| inner.sample(z, seed)))
    }

    fn probe_eq(&self, x: &Obj, a: &Value, b: &Value) -> bool {
        let fa = self.dra.to_family(&self.inner, x, a);
        let fb = self.dra.to_family(&self.inner, x, b);
        family_domain(&*self.dra, x).iter().all(|z| self.inner.probe_eq(z, &fa(z), &fb(z)))
    }

    fn describe(&self) -> String {
        format!("⟨{} | {}⟩", self.dra.name(), self.inner.describe())
    }
}

/// The unit DRA on a base category.
pub struct UnitDra(pub BaseCategory);

pub fn dra_unit(base: BaseCategory) -> DraRef {
    Rc::new(UnitDra(base))
}

impl Dra for UnitDra {
    fn name(&self) -> String {
        String::from("𝟙")
    }

    fn dom(&self) -> BaseCategory {
        self.0
    }

    fn cod(&self) -> BaseCategory {
        self.0
    }

    fn lock_ob(&self, z: &Obj) -> Option<Obj> {
        Some(*z)
    }

    fn mod_ty_override(&self, inner: &ClosedTy) -> Option<ClosedTy> {
        Some(inner.clone())
    }

    fn to_family(&self, inner: &ClosedTy, x: &Obj, v: &Value) -> Family {
        let (inner, x, v) = (inner.clone(), *x, v.clone());
        Rc::new(move |z| inner.restrict(z, &x, &v))
    }

    fn from_family(&self, _inner: &ClosedTy, x: &Obj, fam: Family) -> Value {
        fam(x)
    }
}

/// `outer ⓜ inner`: lock with `outer` first, then with `inner`.
pub struct ComposedDra {
    outer: DraRef,
    inner: DraRef,
}

pub fn dra_compose(outer: &DraRef, inner: &DraRef) -> DraRef {
    assert_eq!(outer.dom(), inner.cod(), "cannot compose {} after {}", outer.name(), inner.name());
    Rc::new(ComposedDra { outer: outer.clone(), inner: inner.clone() })
}

/// Compose a list of DRAs, outermost first; the empty list is the unit.
pub fn dra_compose_all(base: BaseCategory, dras: &[DraRef]) -> DraRef {
    match dras {
        [] => dra_unit(base),
        [single] => single.clone(),
        [first, rest @ ..] => dra_compose(first, &dra_compose_all(first.dom(), rest)),
    }
}

impl Dra for ComposedDra {
    fn name(&self) -> String {
        format!("{} ⓜ {}", self.outer.name(), self.inner.name())
    }

    fn dom(&self) -> BaseCategory {
        self.inner.dom()
    }

    fn cod(&self) -> BaseCategory {
        self.outer.cod()
    }

    fn lock_ob(&self, z: &Obj) -> Option<Obj> {
        self.outer.lock_ob(&self.inner.lock_ob(z)?)
    }

    fn mod_ty_override(&self, inner: &ClosedTy) -> Option<ClosedTy> {
        Some(mod_ty(&self.outer, &mod_ty(&self.inner, inner)))
    }

    fn to_family(&self, inner: &ClosedTy, x: &Obj, v: &Value) -> Family {
        let middle_ty = mod_ty(&self.inner, inner);
        let outer_fam = self.outer.to_family(&middle_ty, x, v);
        let (rho, inner) = (self.inner.clone(), inner.clone());
        Rc::new(move |z| {
            let w = rho.lock_ob(z).expect("family queried outside its domain");
            rho.to_family(&inner, &w, &outer_fam(&w))(z)
        })
    }

    fn from_family(&self, inner: &ClosedTy, x: &Obj, fam: Family) -> Value {
        let middle_ty = mod_ty(&self.inner, inner);
        let (rho, inner) = (self.inner.clone(), inner.clone());
        let outer_fam: Family = Rc::new(move |w| rho.from_family(&inner, w, fam.clone()));
        self.outer.from_family(&middle_ty, x, outer_fam)
    }

    fn shape_ok(&self, inner: &ClosedTy, x: &Obj, v: &Value) -> bool {
        mod_ty(&self.outer, &mod_ty(&self.inner, inner)).member(x, v)
    }
}

/// `mod-intro`: from `Tm (Γ.🔒μ) A` to `Tm Γ ⟨μ | A⟩`.
pub fn mod_intro(dra: &DraRef, ctx: &SemCtx, inner: &ClosedTy, t: &SemTm) -> SemTm {
    let (dra, ctx, inner, t) = (dra.clone(), ctx.clone(), inner.clone(), t.clone());
    SemTm::new(move |x, env| {
        let (d, ctx, t, env, at) = (dra.clone(), ctx.clone(), t.clone(), env.to_vec(), *x);
        let fam: Family = Rc::new(move |z| {
            let pz = d.lock_ob(z).expect("mod-intro outside the lock's domain");
            t.at(z, &ctx.restrict(&pz, &at, &env))
        });
        dra.from_family(&inner, x, fam)
    })
}

/// `mod-elim`: from `Tm Γ ⟨μ | A⟩` to `Tm (Γ.🔒μ) A`.
pub fn mod_elim(dra: &DraRef, inner: &ClosedTy, s: &SemTm) -> SemTm {
    let (dra, inner, s) = (dra.clone(), inner.clone(), s.clone());
    SemTm::new(move |z, env| {
        let pz = dra.lock_ob(z).expect("mod-elim outside the lock's domain");
        dra.to_family(&inner, &pz, &s.at(&pz, env))(z)
    })
}

/// `⟨μ | A⟩ ≅ ⟨μ | B⟩` from `A ≅ B`.
pub fn map_iso(dra: &DraRef, a: &ClosedTy, b: &ClosedTy, e: &TyIso) -> TyIso {
    fn along(
        dra: DraRef,
        src: ClosedTy,
        tgt: ClosedTy,
        e: TyIso,
        fwd: bool,
    ) -> impl Fn(&Obj, &Value) -> Value {
        move |x, v| {
            let fam = dra.to_family(&src, x, v);
            let e = e.clone();
            let mapped: Family =
                Rc::new(move |z| if fwd { e.forward(z, &fam(z)) } else { e.backward(z, &fam(z)) });
            dra.from_family(&tgt, x, mapped)
        }
    }
    TyIso::new(
        along(dra.clone(), a.clone(), b.clone(), e.clone(), true),
        along(dra.clone(), b.clone(), a.clone(), e.clone(), false),
    )
}

/// `⟨μ | A⟩ ≅ ⟨ρ | A⟩` for two DRAs with the same lock functor.
pub fn modality_iso(mu: &DraRef, rho: &DraRef, inner: &ClosedTy) -> TyIso {
    fn convert(src: DraRef, tgt: DraRef, inner: ClosedTy) -> impl Fn(&Obj, &Value) -> Value {
        move |x, v| tgt.from_family(&inner, x, src.to_family(&inner, x, v))
    }
    TyIso::new(
        convert(mu.clone(), rho.clone(), inner.clone()),
        convert(rho.clone(), mu.clone(), inner.clone()),
    )
}

/// Whether two DRAs have the same lock functor on objects with stages ≤ `bound`.
pub fn same_lock(mu: &dyn Dra, rho: &dyn Dra, bound: u32) -> bool {
    mu.dom() == rho.dom()
        && mu.cod() == rho.cod()
        && mu.dom().objects(bound).iter().all(|z| mu.lock_ob(z) == rho.lock_ob(z))
}

/// A natural transformation `μ ⇒ κ`, acting on environments as a map
/// `Γ.🔒κ -> Γ.🔒μ`. On reindexing locks it is the restriction along
/// `φμ z -> φκ z`.
#[derive(Clone)]
pub struct SemTwoCell {
    src: DraRef,
    tgt: DraRef,
}

impl SemTwoCell {
    /// Fails unless `φμ z -> φκ z` exists wherever `κ`'s lock is defined.
    pub fn new(src: &DraRef, tgt: &DraRef) -> Result<Self, String> {
        if src.dom() != tgt.dom() || src.cod() != tgt.cod() {
            return Err(format!("{} and {} have different endpoints", src.name(), tgt.name()));
        }
        for z in src.dom().objects(PROBE_BOUND + 2) {
            if let Some(kz) = tgt.lock_ob(&z) {
                match src.lock_ob(&z) {
                    Some(mz) if src.cod().hom(&mz, &kz) => {}
                    _ => return Err(format!("no natural map {} ⇒ {} at {z}", src.name(), tgt.name())),
                }
            }
        }
        Ok(SemTwoCell { src: src.clone(), tgt: tgt.clone() })
    }

    pub fn identity(dra: &DraRef) -> Self {
        SemTwoCell { src: dra.clone(), tgt: dra.clone() }
    }

    pub fn src(&self) -> &DraRef {
        &self.src
    }

    pub fn tgt(&self) -> &DraRef {
        &self.tgt
    }

    /// Map an environment of `Γ.🔒κ` at `z` to one of `Γ.🔒μ` at `z`.
    pub fn transport(&self, ctx: &SemCtx, z: &Obj, env: &[Value]) -> Vec<Value> {
        let kz = self.tgt.lock_ob(z).expect("two-cell applied outside its domain");
        let mz = self.src.lock_ob(z).expect("two-cell applied outside its domain");
        ctx.restrict(&mz, &kz, env)
    }

    /// Vertical composite: `self : μ ⇒ κ` and `other : κ ⇒ ν` give `μ ⇒ ν`.
    pub fn vcompose(&self, other: &SemTwoCell) -> Result<SemTwoCell, String> {
        if !same_lock(&*self.tgt, &*other.src, PROBE_BOUND + 2) {
            return Err(format!(
                "cannot compose two-cells through {} and {}",
                self.tgt.name(),
                other.src.name()
            ));
        }
        SemTwoCell::new(&self.src, &other.tgt)
    }

    /// Horizontal composite of `self : μ ⇒ κ` and `other : ρ ⇒ ν`, giving
    /// `μ ⓜ ρ ⇒ κ ⓜ ν`.
    pub fn hcompose(&self, other: &SemTwoCell) -> Result<SemTwoCell, String> {
        if self.src.dom() != other.src.cod() {
            return Err(String::from("horizontal composite of non-composable two-cells"));
        }
        SemTwoCell::new(&dra_compose(&self.src, &other.src), &dra_compose(&self.tgt, &other.tgt))
    }
}
