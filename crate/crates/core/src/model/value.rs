//! Dynamically tagged semantic values.
//!
//! A [`Value`] inhabits a cell `T ⟨ x , γ ⟩` of some semantic type. The tag
//! is checked whenever a value is taken apart; a mismatch means the elaborator
//! produced an ill-typed denotation and is reported by a panic.

use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::any::Any;
use core::fmt;

use super::category::Obj;

/// A natural family of values indexed by objects (`z ↦ value at z`).
pub type Family = Rc<dyn Fn(&Obj) -> Value>;

#[derive(Clone)]
pub enum Value {
    Nat(u64),
    Bool(bool),
    Unit,
    Pair(Rc<Value>, Rc<Value>),
    Fun(FunValue),
    Vec(Rc<Vec<Value>>),
    Fam(Family),
    Rel(Rc<Value>, Rc<Value>),
    Host(HostValue),
}

/// A cell of a presheaf function type at object `at`: for every `y -> at`
/// and input at `y` it yields an output at `y`.
#[derive(Clone)]
pub struct FunValue {
    at: Obj,
    body: Rc<dyn Fn(&Obj, &Value) -> Value>,
}

impl FunValue {
    pub fn new(at: Obj, body: impl Fn(&Obj, &Value) -> Value + 'static) -> Self {
        FunValue { at, body: Rc::new(body) }
    }

    pub fn at(&self) -> Obj {
        self.at
    }

    /// Apply along the unique morphism `y -> at`.
    pub fn apply(&self, y: &Obj, input: &Value) -> Value {
        assert!(y.category().hom(y, &self.at), "function cell at {} applied at {y}: no morphism", self.at);
        (self.body)(y, input)
    }

    /// The restriction of this cell along `x -> at`, which precomposes.
    pub fn restrict_to(&self, x: &Obj) -> FunValue {
        assert!(x.category().hom(x, &self.at), "cannot restrict function cell at {} to {x}", self.at);
        FunValue { at: *x, body: self.body.clone() }
    }
}

/// Payload carried by [`HostValue`]s.
pub trait HostPayload: fmt::Debug + fmt::Display {
    fn as_any(&self) -> &dyn Any;
    fn eq_payload(&self, other: &dyn HostPayload) -> bool;
}

impl<T> HostPayload for T
where
    T: Any + fmt::Debug + fmt::Display + PartialEq,
{
    fn as_any(&self) -> &dyn Any {
        self
    }

    fn eq_payload(&self, other: &dyn HostPayload) -> bool {
        other.as_any().downcast_ref::<T>() == Some(self)
    }
}

/// An opaque value of a host type together with its type tag.
#[derive(Clone)]
pub struct HostValue {
    tag: Rc<str>,
    payload: Rc<dyn HostPayload>,
}

impl HostValue {
    pub fn new<T: HostPayload + 'static>(tag: &str, payload: T) -> Self {
        HostValue { tag: Rc::from(tag), payload: Rc::new(payload) }
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn downcast<T: 'static>(&self) -> Option<&T> {
        self.payload.as_any().downcast_ref::<T>()
    }
}

impl PartialEq for HostValue {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.payload.eq_payload(&*other.payload)
    }
}

impl fmt::Debug for HostValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.tag, self.payload)
    }
}

impl fmt::Display for HostValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&*self.payload, f)
    }
}

impl Value {
    pub fn pair(a: Value, b: Value) -> Value {
        Value::Pair(Rc::new(a), Rc::new(b))
    }

    pub fn vec(items: Vec<Value>) -> Value {
        Value::Vec(Rc::new(items))
    }

    pub fn rel(left: Value, right: Value) -> Value {
        Value::Rel(Rc::new(left), Rc::new(right))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Value::Nat(_) => "nat",
            Value::Bool(_) => "bool",
            Value::Unit => "unit",
            Value::Pair(..) => "pair",
            Value::Fun(_) => "function",
            Value::Vec(_) => "vector",
            Value::Fam(_) => "family",
            Value::Rel(..) => "related pair",
            Value::Host(_) => "host",
        }
    }

    fn mismatch(&self, wanted: &str) -> ! {
        panic!("dynamic tag mismatch: expected {wanted}, found {}", self.tag())
    }

    pub fn as_nat(&self) -> u64 {
        match self {
            Value::Nat(n) => *n,
            other => other.mismatch("nat"),
        }
    }

    pub fn as_bool(&self) -> bool {
        match self {
            Value::Bool(b) => *b,
            other => other.mismatch("bool"),
        }
    }

    pub fn as_pair(&self) -> (&Value, &Value) {
        match self {
            Value::Pair(a, b) => (a, b),
            other => other.mismatch("pair"),
        }
    }

    pub fn as_fun(&self) -> &FunValue {
        match self {
            Value::Fun(f) => f,
            other => other.mismatch("function"),
        }
    }

    pub fn as_vec(&self) -> &[Value] {
        match self {
            Value::Vec(v) => v,
            other => other.mismatch("vector"),
        }
    }

    pub fn as_fam(&self) -> &Family {
        match self {
            Value::Fam(f) => f,
            other => other.mismatch("family"),
        }
    }

    pub fn as_rel(&self) -> (&Value, &Value) {
        match self {
            Value::Rel(a, b) => (a, b),
            other => other.mismatch("related pair"),
        }
    }

    pub fn as_host(&self) -> &HostValue {
        match self {
            Value::Host(h) => h,
            other => other.mismatch("host value"),
        }
    }

    pub fn expect_unit(&self) {
        if !matches!(self, Value::Unit) {
            self.mismatch("unit")
        }
    }

    /// Structural equality on first-order values. Functions and families
    /// compare unequal; use a type's `probe_eq` for those.
    pub fn first_order_eq(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Nat(a), Value::Nat(b)) => a == b,
            (Value::Bool(a), Value::Bool(b)) => a == b,
            (Value::Unit, Value::Unit) => true,
            (Value::Pair(a, b), Value::Pair(c, d)) | (Value::Rel(a, b), Value::Rel(c, d)) => {
                a.first_order_eq(c) && b.first_order_eq(d)
            }
            (Value::Vec(a), Value::Vec(b)) => {
                a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x.first_order_eq(y))
            }
            (Value::Host(a), Value::Host(b)) => a == b,
            _ => false,
        }
    }

    /// Human-readable rendering; vectors print as bracketed lists.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        use core::fmt::Write;
        match self {
            Value::Nat(n) => {
                let _ = write!(out, "{n}");
            }
            Value::Bool(b) => {
                let _ = write!(out, "{b}");
            }
            Value::Unit => out.push_str("tt"),
            Value::Pair(a, b) => {
                out.push('(');
                a.render_into(out);
                out.push_str(", ");
                b.render_into(out);
                out.push(')');
            }
            Value::Fun(_) => out.push_str("<function>"),
            Value::Vec(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.render_into(out);
                }
                out.push(']');
            }
            Value::Fam(_) => out.push_str("<family>"),
            Value::Rel(a, b) => {
                out.push('(');
                a.render_into(out);
                out.push_str(" ~ ");
                b.render_into(out);
                out.push(')');
            }
            Value::Host(h) => {
                let _ = write!(out, "{h}");
            }
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
