//! Semantic contexts: presheaves built from the empty context by extension
//! with a type and by applying a lock.
//!
//! An environment at object `z` is a flat list with one slot per extension.
//! Slots that sit under a lock live at the image of `z` under that lock's
//! object map, so a single list serves every shape of context.

use alloc::rc::Rc;
use alloc::vec::Vec;

use super::category::{BaseCategory, Obj};
use super::dra::Dra;
use super::ty::ClosedTy;
use super::value::Value;

pub type Env = Vec<Value>;

#[derive(Clone)]
pub struct SemCtx(Rc<Node>);

enum Node {
    Empty(BaseCategory),
    Extend(SemCtx, ClosedTy),
    Lock(SemCtx, Rc<dyn Dra>),
}

impl SemCtx {
    pub fn empty(base: BaseCategory) -> Self {
        SemCtx(Rc::new(Node::Empty(base)))
    }

    pub fn extend(&self, ty: ClosedTy) -> Self {
        assert_eq!(ty.base(), self.base(), "extending a context with a type over another base");
        SemCtx(Rc::new(Node::Extend(self.clone(), ty)))
    }

    /// `Γ.🔒μ`, defined when the codomain of `μ` is the base of `Γ`.
    pub fn lock(&self, dra: Rc<dyn Dra>) -> Self {
        assert_eq!(dra.cod(), self.base(), "locking with {} over the wrong base", dra.name());
        SemCtx(Rc::new(Node::Lock(self.clone(), dra)))
    }

    pub fn base(&self) -> BaseCategory {
        match &*self.0 {
            Node::Empty(b) => *b,
            Node::Extend(parent, _) => parent.base(),
            Node::Lock(_, dra) => dra.dom(),
        }
    }

    /// Number of environment slots.
    pub fn len(&self) -> usize {
        match &*self.0 {
            Node::Empty(_) => 0,
            Node::Extend(parent, _) => parent.len() + 1,
            Node::Lock(parent, _) => parent.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether `env` is an element of this context at `x`.
    pub fn member(&self, x: &Obj, env: &[Value]) -> bool {
        if x.category() != self.base() {
            return false;
        }
        match &*self.0 {
            Node::Empty(_) => env.is_empty(),
            Node::Extend(parent, ty) => match env.split_last() {
                Some((top, rest)) => parent.member(x, rest) && ty.member(x, top),
                None => false,
            },
            Node::Lock(parent, dra) => match dra.lock_ob(x) {
                Some(px) => parent.member(&px, env),
                None => false,
            },
        }
    }

    /// Restriction of an environment at `y` along `x -> y`.
    pub fn restrict(&self, x: &Obj, y: &Obj, env: &[Value]) -> Env {
        assert!(self.base().hom(x, y), "context restriction along non-morphism {x} -> {y}");
        let mut out = Vec::with_capacity(env.len());
        self.restrict_into(x, y, env, &mut out);
        out
    }

    fn restrict_into(&self, x: &Obj, y: &Obj, env: &[Value], out: &mut Env) {
        match &*self.0 {
            Node::Empty(_) => {}
            Node::Extend(parent, ty) => {
                let (top, rest) = env.split_last().expect("environment shorter than context");
                parent.restrict_into(x, y, rest, out);
                out.push(ty.restrict(x, y, top));
            }
            Node::Lock(parent, dra) => {
                let px = dra.lock_ob(x).expect("restricting outside the lock's domain");
                let py = dra.lock_ob(y).expect("restricting outside the lock's domain");
                parent.restrict_into(&px, &py, env, out);
            }
        }
    }

    /// Slot-wise observational equality of two environments at `x`.
    pub fn probe_eq(&self, x: &Obj, a: &[Value], b: &[Value]) -> bool {
        match &*self.0 {
            Node::Empty(_) => a.is_empty() && b.is_empty(),
            Node::Extend(parent, ty) => match (a.split_last(), b.split_last()) {
                (Some((ta, ra)), Some((tb, rb))) => ty.probe_eq(x, ta, tb) && parent.probe_eq(x, ra, rb),
                _ => false,
            },
            Node::Lock(parent, dra) => match dra.lock_ob(x) {
                Some(px) => parent.probe_eq(&px, a, b),
                None => false,
            },
        }
    }

    /// Sample an environment at `x`, or `None` when the context is empty
    /// there (for instance under a lock that is undefined at `x`).
    pub fn sample(&self, x: &Obj, seed: u64) -> Option<Env> {
        match &*self.0 {
            Node::Empty(_) => Some(Vec::new()),
            Node::Extend(parent, ty) => {
                let mut env = parent.sample(x, seed)?;
                env.push(ty.sample(x, seed.wrapping_add(env.len() as u64)));
                Some(env)
            }
            Node::Lock(parent, dra) => parent.sample(&dra.lock_ob(x)?, seed),
        }
    }
}
