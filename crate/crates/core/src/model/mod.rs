//! The executable presheaf model.

pub mod category;
pub mod ctx;
pub mod dra;
pub mod iso;
pub mod tm;
pub mod ty;
pub mod value;

pub use category::{BaseCategory, Obj};
pub use ctx::{Env, SemCtx};
pub use dra::{
    dra_compose, dra_compose_all, dra_unit, map_iso, mod_elim, mod_intro, mod_ty, modality_iso, Dra, DraRef,
    SemTwoCell,
};
pub use iso::TyIso;
pub use tm::SemTm;
pub use ty::{discrete_ty, fun_ty, prod_ty, ClosedTy, DiscreteKind, SemTy, SemType, PROBE_BOUND};
pub use value::{Family, FunValue, HostValue, Value};
