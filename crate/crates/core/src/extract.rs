//! Extraction of closed denotations at the trivial mode to host values.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::check::Checker;
use crate::model::{BaseCategory, FunValue, HostValue, Obj, SemTm, Value};
use crate::syntax::TyExpr;
use crate::tcm::{type_error, Tcm};

/// A host function.
#[derive(Clone)]
pub struct HostFn(Rc<dyn Fn(HostVal) -> HostVal>);

impl HostFn {
    pub fn new(f: impl Fn(HostVal) -> HostVal + 'static) -> Self {
        HostFn(Rc::new(f))
    }

    pub fn apply(&self, v: HostVal) -> HostVal {
        (self.0)(v)
    }
}

/// An infinite stream given by its element function.
#[derive(Clone)]
pub struct HostStream(Rc<dyn Fn(u64) -> HostVal>);

impl HostStream {
    pub fn new(f: impl Fn(u64) -> HostVal + 'static) -> Self {
        HostStream(Rc::new(f))
    }

    pub fn at(&self, k: u64) -> HostVal {
        (self.0)(k)
    }

    pub fn take(&self, k: u64) -> Vec<HostVal> {
        (0..k).map(|i| self.at(i)).collect()
    }
}

#[derive(Clone)]
pub enum HostVal {
    Nat(u64),
    Bool(bool),
    Pair(Rc<HostVal>, Rc<HostVal>),
    Fun(HostFn),
    Stream(HostStream),
    Opaque(HostValue),
}

impl HostVal {
    pub fn pair(a: HostVal, b: HostVal) -> Self {
        HostVal::Pair(Rc::new(a), Rc::new(b))
    }

    fn kind(&self) -> &'static str {
        match self {
            HostVal::Nat(_) => "natural number",
            HostVal::Bool(_) => "boolean",
            HostVal::Pair(..) => "pair",
            HostVal::Fun(_) => "function",
            HostVal::Stream(_) => "stream",
            HostVal::Opaque(_) => "host value",
        }
    }

    fn mismatch(&self, wanted: &str) -> ! {
        panic!("host value mismatch: expected {wanted}, found {}", self.kind())
    }

    pub fn as_nat(&self) -> u64 {
        match self {
            HostVal::Nat(n) => *n,
            other => other.mismatch("natural number"),
        }
    }

    pub fn as_bool(&self) -> bool {
        match self {
            HostVal::Bool(b) => *b,
            other => other.mismatch("boolean"),
        }
    }

    pub fn as_pair(&self) -> (&HostVal, &HostVal) {
        match self {
            HostVal::Pair(a, b) => (a, b),
            other => other.mismatch("pair"),
        }
    }

    pub fn as_fun(&self) -> &HostFn {
        match self {
            HostVal::Fun(f) => f,
            other => other.mismatch("function"),
        }
    }

    pub fn as_stream(&self) -> &HostStream {
        match self {
            HostVal::Stream(s) => s,
            other => other.mismatch("stream"),
        }
    }

    pub fn as_opaque(&self) -> &HostValue {
        match self {
            HostVal::Opaque(h) => h,
            other => other.mismatch("host value"),
        }
    }

    /// Structural equality; functions and streams compare unequal.
    pub fn first_order_eq(&self, other: &HostVal) -> bool {
        match (self, other) {
            (HostVal::Nat(a), HostVal::Nat(b)) => a == b,
            (HostVal::Bool(a), HostVal::Bool(b)) => a == b,
            (HostVal::Pair(a, b), HostVal::Pair(c, d)) => a.first_order_eq(c) && b.first_order_eq(d),
            (HostVal::Opaque(a), HostVal::Opaque(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for HostVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostVal::Nat(n) => write!(f, "{n}"),
            HostVal::Bool(b) => write!(f, "{b}"),
            HostVal::Pair(a, b) => write!(f, "({a}, {b})"),
            HostVal::Fun(_) => f.write_str("<function>"),
            HostVal::Stream(_) => f.write_str("<stream>"),
            HostVal::Opaque(h) => write!(f, "{h}"),
        }
    }
}

impl fmt::Debug for HostVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Extractor = Rc<dyn Fn(&Value) -> HostVal>;
type Embedder = Rc<dyn Fn(&HostVal) -> Value>;

/// Conversion between cells of a type at the trivial mode and host values.
#[derive(Clone)]
pub struct Extractable {
    translated: String,
    extract: Extractor,
    embed: Embedder,
}

impl Extractable {
    pub fn new(
        translated: impl Into<String>,
        extract: impl Fn(&Value) -> HostVal + 'static,
        embed: impl Fn(&HostVal) -> Value + 'static,
    ) -> Self {
        Extractable { translated: translated.into(), extract: Rc::new(extract), embed: Rc::new(embed) }
    }

    /// Name of the host type.
    pub fn translated_type(&self) -> &str {
        &self.translated
    }

    pub fn extract_cell(&self, v: &Value) -> HostVal {
        (self.extract)(v)
    }

    pub fn embed_cell(&self, h: &HostVal) -> Value {
        (self.embed)(h)
    }

    /// `extract-term` for a term in the empty context.
    pub fn extract(&self, t: &SemTm) -> HostVal {
        self.extract_cell(&t.at(&Obj::Point, &[]))
    }

    /// `embed-term`.
    pub fn embed(&self, h: &HostVal) -> SemTm {
        SemTm::constant(self.embed_cell(h))
    }
}

/// Find an extraction for a type at the trivial mode.
pub fn extractable_for(ck: &Checker<'_>, ty: &TyExpr) -> Tcm<Extractable> {
    let inst = ck.instantiation();
    let trivial = inst.theory.trivial_mode();
    if ck.interpret_mode(trivial)? != BaseCategory::Star {
        return type_error("Extract", "the trivial mode is not interpreted by ★");
    }
    ck.interpret_ty(ty, trivial)?;
    match ty {
        TyExpr::Nat => Ok(Extractable::new("Nat", |v| HostVal::Nat(v.as_nat()), |h| Value::Nat(h.as_nat()))),
        TyExpr::Bool => {
            Ok(Extractable::new("Bool", |v| HostVal::Bool(v.as_bool()), |h| Value::Bool(h.as_bool())))
        }
        TyExpr::Prod(a, b) => {
            let (ea, eb) = (extractable_for(ck, a)?, extractable_for(ck, b)?);
            let (xa, xb) = (ea.clone(), eb.clone());
            Ok(Extractable::new(
                format!("({} × {})", ea.translated, eb.translated),
                move |v| {
                    let (l, r) = v.as_pair();
                    HostVal::pair(xa.extract_cell(l), xb.extract_cell(r))
                },
                move |h| {
                    let (l, r) = h.as_pair();
                    Value::pair(ea.embed_cell(l), eb.embed_cell(r))
                },
            ))
        }
        TyExpr::Arrow(a, b) => {
            let (ea, eb) = (extractable_for(ck, a)?, extractable_for(ck, b)?);
            let (xa, xb) = (ea.clone(), eb.clone());
            Ok(Extractable::new(
                format!("({} → {})", ea.translated, eb.translated),
                move |v| {
                    let (f, xa, xb) = (v.as_fun().clone(), xa.clone(), xb.clone());
                    HostVal::Fun(HostFn::new(move |h| {
                        xb.extract_cell(&f.apply(&Obj::Point, &xa.embed_cell(&h)))
                    }))
                },
                move |h| {
                    let (g, ea, eb) = (h.as_fun().clone(), ea.clone(), eb.clone());
                    Value::Fun(FunValue::new(Obj::Point, move |_, v| {
                        eb.embed_cell(&g.apply(ea.extract_cell(v)))
                    }))
                },
            ))
        }
        _ => {
            for p in inst.providers() {
                if let Some(found) = p.provide(ck, ty) {
                    return found;
                }
            }
            type_error("Extract", format!("type {ty} is not extractable"))
        }
    }
}
