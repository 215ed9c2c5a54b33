//! The forget modalities `∧ -> ★`: each keeps one leg of the cospan.

use alloc::rc::Rc;
use alloc::string::String;

use crate::model::{BaseCategory, ClosedTy, Dra, Family, Obj, Value};

/// `forget-right` (`keep = Left`) or `forget-left` (`keep = Right`). The lock
/// places a ★-context at the kept leg and is empty elsewhere, so a cell of
/// `⟨μ | T⟩` is a cell of `T` at the kept leg.
pub struct Forget {
    keep: Obj,
}

impl Forget {
    pub fn right() -> Self {
        Forget { keep: Obj::Left }
    }

    pub fn left() -> Self {
        Forget { keep: Obj::Right }
    }

    pub fn kept(&self) -> Obj {
        self.keep
    }
}

impl Dra for Forget {
    fn name(&self) -> String {
        String::from(match self.keep {
            Obj::Left => super::FORGET_RIGHT,
            _ => super::FORGET_LEFT,
        })
    }

    fn dom(&self) -> BaseCategory {
        BaseCategory::Wedge
    }

    fn cod(&self) -> BaseCategory {
        BaseCategory::Star
    }

    fn lock_ob(&self, z: &Obj) -> Option<Obj> {
        (*z == self.keep).then_some(Obj::Point)
    }

    fn to_family(&self, _inner: &ClosedTy, _x: &Obj, v: &Value) -> Family {
        let (keep, v) = (self.keep, v.clone());
        Rc::new(move |z| {
            assert_eq!(*z, keep, "forget modality queried outside its kept leg");
            v.clone()
        })
    }

    fn from_family(&self, _inner: &ClosedTy, _x: &Obj, fam: Family) -> Value {
        fam(&self.keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{
        discrete_ty, dra::family_domain, mod_ty, ty::check_presheaf_laws, DiscreteKind, DraRef,
    };

    #[test]
    fn forget_keeps_one_leg() {
        let r = Forget::right();
        assert_eq!(r.lock_ob(&Obj::Left), Some(Obj::Point));
        assert_eq!(r.lock_ob(&Obj::Right), None);
        assert_eq!(r.lock_ob(&Obj::Relation), None);
        assert_eq!(family_domain(&r, &Obj::Point), alloc::vec![Obj::Left]);
        assert_eq!(family_domain(&Forget::left(), &Obj::Point), alloc::vec![Obj::Right]);
    }

    #[test]
    fn modal_type_is_a_presheaf() {
        let nat = discrete_ty(DiscreteKind::Nat, BaseCategory::Wedge);
        for d in [Forget::right(), Forget::left()] {
            let d: DraRef = Rc::new(d);
            let t = mod_ty(&d, &nat);
            check_presheaf_laws(&t, 3, 4).unwrap();
            assert!(t.member(&Obj::Point, &Value::Nat(4)));
        }
    }
}
