//! Natural isomorphisms between closed types.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;

use super::category::Obj;
use super::tm::SemTm;
use super::ty::ClosedTy;
use super::value::{FunValue, Value};

type CellMap = Rc<dyn Fn(&Obj, &Value) -> Value>;

/// A pair of mutually inverse natural maps `T ≅ S`, given componentwise.
#[derive(Clone)]
pub struct TyIso {
    forward: CellMap,
    backward: CellMap,
}

impl TyIso {
    pub fn new(
        forward: impl Fn(&Obj, &Value) -> Value + 'static,
        backward: impl Fn(&Obj, &Value) -> Value + 'static,
    ) -> Self {
        TyIso { forward: Rc::new(forward), backward: Rc::new(backward) }
    }

    pub fn identity() -> Self {
        TyIso::new(|_, v| v.clone(), |_, v| v.clone())
    }

    pub fn forward(&self, x: &Obj, v: &Value) -> Value {
        (self.forward)(x, v)
    }

    pub fn backward(&self, x: &Obj, v: &Value) -> Value {
        (self.backward)(x, v)
    }

    pub fn inverse(&self) -> Self {
        TyIso { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// `self : T ≅ S` followed by `next : S ≅ R`.
    pub fn then(&self, next: &TyIso) -> Self {
        let (f1, f2) = (self.forward.clone(), next.forward.clone());
        let (b1, b2) = (self.backward.clone(), next.backward.clone());
        TyIso::new(move |x, v| f2(x, &f1(x, v)), move |x, v| b1(x, &b2(x, v)))
    }

    /// `(T1 ⇛ S1) ≅ (T2 ⇛ S2)` from `T1 ≅ T2` and `S1 ≅ S2`.
    pub fn fun(dom: &TyIso, cod: &TyIso) -> Self {
        fn conj(pre: CellMap, post: CellMap) -> impl Fn(&Obj, &Value) -> Value {
            move |x, v| {
                let f = v.as_fun().clone();
                let (pre, post) = (pre.clone(), post.clone());
                Value::Fun(FunValue::new(*x, move |y, a| post(y, &f.apply(y, &pre(y, a)))))
            }
        }
        TyIso::new(
            conj(dom.backward.clone(), cod.forward.clone()),
            conj(dom.forward.clone(), cod.backward.clone()),
        )
    }

    /// `(T1 ⊠ S1) ≅ (T2 ⊠ S2)` from `T1 ≅ T2` and `S1 ≅ S2`.
    pub fn prod(fst: &TyIso, snd: &TyIso) -> Self {
        let (f1, f2) = (fst.forward.clone(), snd.forward.clone());
        let (b1, b2) = (fst.backward.clone(), snd.backward.clone());
        TyIso::new(
            move |x, v| {
                let (a, b) = v.as_pair();
                Value::pair(f1(x, a), f2(x, b))
            },
            move |x, v| {
                let (a, b) = v.as_pair();
                Value::pair(b1(x, a), b2(x, b))
            },
        )
    }

    /// `ι[e]`: turn a term of `S` into a term of `T` for `e : T ≅ S`.
    pub fn transport(&self, t: &SemTm) -> SemTm {
        let (b, t) = (self.backward.clone(), t.clone());
        SemTm::new(move |x, env| b(x, &t.at(x, env)))
    }

    /// Check on sample cells that this is an isomorphism `src ≅ tgt`.
    pub fn check(&self, src: &ClosedTy, tgt: &ClosedTy, bound: u32, seeds: u64) -> Result<(), String> {
        for x in src.base().objects(bound) {
            for seed in 0..seeds {
                let a = src.sample(&x, seed);
                let fa = self.forward(&x, &a);
                if !tgt.member(&x, &fa) {
                    return Err(format!("forward image at {x} is not a {tgt:?} cell"));
                }
                if !src.probe_eq(&x, &self.backward(&x, &fa), &a) {
                    return Err(format!("backward ∘ forward ≠ id at {x} on {src:?}"));
                }
                let b = tgt.sample(&x, seed);
                if !tgt.probe_eq(&x, &self.forward(&x, &self.backward(&x, &b)), &b) {
                    return Err(format!("forward ∘ backward ≠ id at {x} on {tgt:?}"));
                }
            }
        }
        Ok(())
    }
}
