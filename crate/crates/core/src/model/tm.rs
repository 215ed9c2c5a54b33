//! Semantic terms and the term formers of the base type theory.

use alloc::rc::Rc;
use alloc::vec::Vec;

use super::category::Obj;
use super::ctx::SemCtx;
use super::ty::ClosedTy;
use super::value::{FunValue, Value};

/// A term `Tm Γ T`: an assignment of a `T`-cell to every object and
/// environment. Naturality is a property checked by tests, not enforced.
#[derive(Clone)]
pub struct SemTm(Rc<dyn Fn(&Obj, &[Value]) -> Value>);

impl SemTm {
    pub fn new(f: impl Fn(&Obj, &[Value]) -> Value + 'static) -> Self {
        SemTm(Rc::new(f))
    }

    pub fn at(&self, x: &Obj, env: &[Value]) -> Value {
        (self.0)(x, env)
    }

    /// A term that ignores its environment.
    pub fn constant(v: Value) -> Self {
        SemTm::new(move |_, _| v.clone())
    }

    /// The last environment slot, `ξ`.
    pub fn top() -> Self {
        SemTm::new(|_, env| env.last().expect("empty environment").clone())
    }

    /// Weakening past one extension.
    pub fn weaken(&self) -> Self {
        let t = self.clone();
        SemTm::new(move |x, env| t.at(x, &env[..env.len() - 1]))
    }
}

/// `λ`: from `Tm (Γ.T) S` to `Tm Γ (T ⇛ S)`.
pub fn fun_lam(ctx: &SemCtx, body: &SemTm) -> SemTm {
    let (ctx, body) = (ctx.clone(), body.clone());
    SemTm::new(move |x, env| {
        let (ctx, body, env, at) = (ctx.clone(), body.clone(), env.to_vec(), *x);
        Value::Fun(FunValue::new(at, move |y, arg| {
            let mut inner = ctx.restrict(y, &at, &env);
            inner.push(arg.clone());
            body.at(y, &inner)
        }))
    })
}

pub fn fun_app(f: &SemTm, arg: &SemTm) -> SemTm {
    let (f, arg) = (f.clone(), arg.clone());
    SemTm::new(move |x, env| f.at(x, env).as_fun().apply(x, &arg.at(x, env)))
}

/// `s [ t / ξ ]`.
pub fn subst_top(s: &SemTm, t: &SemTm) -> SemTm {
    let (s, t) = (s.clone(), t.clone());
    SemTm::new(move |x, env| {
        let mut extended: Vec<Value> = env.to_vec();
        extended.push(t.at(x, env));
        s.at(x, &extended)
    })
}

pub fn pair(a: &SemTm, b: &SemTm) -> SemTm {
    let (a, b) = (a.clone(), b.clone());
    SemTm::new(move |x, env| Value::pair(a.at(x, env), b.at(x, env)))
}

pub fn fst(p: &SemTm) -> SemTm {
    let p = p.clone();
    SemTm::new(move |x, env| p.at(x, env).as_pair().0.clone())
}

pub fn snd(p: &SemTm) -> SemTm {
    let p = p.clone();
    SemTm::new(move |x, env| p.at(x, env).as_pair().1.clone())
}

pub fn if_then_else(c: &SemTm, t: &SemTm, e: &SemTm) -> SemTm {
    let (c, t, e) = (c.clone(), t.clone(), e.clone());
    SemTm::new(move |x, env| if c.at(x, env).as_bool() { t.at(x, env) } else { e.at(x, env) })
}

/// `suc : Nat ⇛ Nat`. Arithmetic saturates at `u64::MAX`.
pub fn suc() -> SemTm {
    SemTm::new(|x, _| Value::Fun(FunValue::new(*x, |_, n| Value::Nat(n.as_nat().saturating_add(1)))))
}

/// `plus : Nat ⇛ Nat ⇛ Nat`, curried.
pub fn plus() -> SemTm {
    SemTm::new(|x, _| {
        Value::Fun(FunValue::new(*x, |y, m| {
            let m = m.as_nat();
            Value::Fun(FunValue::new(*y, move |_, n| Value::Nat(m.saturating_add(n.as_nat()))))
        }))
    })
}

/// `nat-elim z s : Nat ⇛ A`, iterating `s` on `z`.
pub fn nat_elim(ty: &ClosedTy, z: &SemTm, s: &SemTm) -> SemTm {
    let (ty, z, s) = (ty.clone(), z.clone(), s.clone());
    SemTm::new(move |x, env| {
        let (ty, at) = (ty.clone(), *x);
        let zero = z.at(x, env);
        let step = s.at(x, env).as_fun().clone();
        Value::Fun(FunValue::new(at, move |y, n| {
            let mut acc = ty.restrict(y, &at, &zero);
            for _ in 0..n.as_nat() {
                acc = step.apply(y, &acc);
            }
            acc
        }))
    })
}
