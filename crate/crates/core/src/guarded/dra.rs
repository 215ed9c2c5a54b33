//! The modalities of guarded recursion as reindexing DRAs.

use alloc::rc::Rc;
use alloc::string::String;

use crate::model::{BaseCategory, ClosedTy, Dra, Family, Obj, Value};

/// `later`: the lock `◄` shifts stages up by one, `▻ T⟨0⟩` is trivial and
/// `▻ T⟨n + 1⟩ = T⟨n⟩`.
pub struct Later;

impl Dra for Later {
    fn name(&self) -> String {
        String::from("later")
    }

    fn dom(&self) -> BaseCategory {
        BaseCategory::Omega
    }

    fn cod(&self) -> BaseCategory {
        BaseCategory::Omega
    }

    fn lock_ob(&self, z: &Obj) -> Option<Obj> {
        Some(Obj::Stage(z.stage() + 1))
    }

    fn to_family(&self, inner: &ClosedTy, x: &Obj, v: &Value) -> Family {
        match x.stage() {
            0 => Rc::new(|z| panic!("▻ at stage 0 has no component at {z}")),
            n => {
                let (inner, v) = (inner.clone(), v.clone());
                Rc::new(move |z| inner.restrict(z, &Obj::Stage(n - 1), &v))
            }
        }
    }

    fn from_family(&self, _inner: &ClosedTy, x: &Obj, fam: Family) -> Value {
        match x.stage() {
            0 => Value::Unit,
            n => fam(&Obj::Stage(n - 1)),
        }
    }

    fn shape_ok(&self, _inner: &ClosedTy, x: &Obj, v: &Value) -> bool {
        x.stage() > 0 || matches!(v, Value::Unit)
    }
}

/// `constantly : ★ -> ω`; the lock evaluates a context at stage 0 and a
/// cell of `⟨constantly | A⟩` at any stage is a cell of `A`.
pub struct Constantly;

impl Dra for Constantly {
    fn name(&self) -> String {
        String::from("constantly")
    }

    fn dom(&self) -> BaseCategory {
        BaseCategory::Star
    }

    fn cod(&self) -> BaseCategory {
        BaseCategory::Omega
    }

    fn lock_ob(&self, _z: &Obj) -> Option<Obj> {
        Some(Obj::Stage(0))
    }

    fn to_family(&self, _inner: &ClosedTy, _x: &Obj, v: &Value) -> Family {
        let v = v.clone();
        Rc::new(move |_| v.clone())
    }

    fn from_family(&self, _inner: &ClosedTy, _x: &Obj, fam: Family) -> Value {
        fam(&Obj::Point)
    }
}

/// `forever : ω -> ★`; the lock is the constant ω-context and a cell of
/// `⟨forever | T⟩` is a compatible family of `T`-cells at every stage.
pub struct Forever;

impl Dra for Forever {
    fn name(&self) -> String {
        String::from("forever")
    }

    fn dom(&self) -> BaseCategory {
        BaseCategory::Omega
    }

    fn cod(&self) -> BaseCategory {
        BaseCategory::Star
    }

    fn lock_ob(&self, _z: &Obj) -> Option<Obj> {
        Some(Obj::Point)
    }

    fn to_family(&self, _inner: &ClosedTy, _x: &Obj, v: &Value) -> Family {
        v.as_fam().clone()
    }

    fn from_family(&self, _inner: &ClosedTy, _x: &Obj, fam: Family) -> Value {
        Value::Fam(fam)
    }

    fn shape_ok(&self, _inner: &ClosedTy, _x: &Obj, v: &Value) -> bool {
        matches!(v, Value::Fam(_))
    }
}
