//! The `check`, `eval` and `extract` commands.

use std::fmt::Write as _;

use mstt_core::check::Inferred;
use mstt_core::extract::{extractable_for, HostVal};
use mstt_core::instance::Instantiation;
use mstt_core::model::{BaseCategory, Obj};
use mstt_core::{guarded, param};

use crate::error::CliError;
use crate::parser::{parse_program, Def, Program};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TheoryChoice {
    /// Guarded recursion.
    #[value(name = "g", alias = "guarded")]
    Guarded,
    /// Parametricity.
    #[value(name = "p", alias = "param", alias = "parametricity")]
    Param,
}

impl TheoryChoice {
    pub fn instantiation(self) -> Instantiation {
        match self {
            TheoryChoice::Guarded => guarded::instantiation(),
            TheoryChoice::Param => param::instantiation(),
        }
    }
}

/// Options shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub name: Option<String>,
    pub stage: Option<u32>,
    pub object: Option<String>,
    pub take: Option<u64>,
}

const DEFAULT_TAKE: u64 = 10;

fn infer(inst: &Instantiation, d: &Def) -> Result<Inferred, CliError> {
    let ck = inst.checker();
    let wrap = |error| CliError::Type { name: d.name.clone(), error };
    let r = ck.infer_closed(&d.body, &d.mode).map_err(wrap)?;
    if let Some(ty) = &d.ann {
        ck.ty_equiv(ty, &r.ty, &d.mode).map_err(wrap)?;
    }
    Ok(r)
}

fn select<'p>(prog: &'p Program, name: Option<&str>) -> Result<&'p Def, CliError> {
    match name {
        Some(n) => prog.get(n).ok_or_else(|| CliError::usage(format!("no def named {n}"))),
        None => prog.defs.last().ok_or_else(|| CliError::usage("the file has no defs")),
    }
}

/// Print `<name> : <type>` for every def, stopping at the first error.
pub fn check(inst: &Instantiation, src: &str, out: &mut String) -> Result<(), CliError> {
    let prog = parse_program(inst, src)?;
    for d in &prog.defs {
        let r = infer(inst, d)?;
        writeln!(out, "{} : {}", d.name, r.ty.render(false)).unwrap();
    }
    Ok(())
}

fn object(base: BaseCategory, d: &Def, opts: &Options) -> Result<Obj, CliError> {
    match base {
        BaseCategory::Star => Ok(Obj::Point),
        BaseCategory::Omega => opts
            .stage
            .map(Obj::Stage)
            .ok_or_else(|| CliError::usage(format!("def {} lives at mode {}; pass --stage", d.name, d.mode))),
        BaseCategory::Wedge => match opts.object.as_deref() {
            Some("left") => Ok(Obj::Left),
            Some("right") => Ok(Obj::Right),
            Some("relation") => Ok(Obj::Relation),
            Some(o) => Err(CliError::usage(format!("unknown object {o}; use left, right or relation"))),
            None => Err(CliError::usage(format!(
                "def {} lives at mode {}; pass --object left|right|relation",
                d.name, d.mode
            ))),
        },
    }
}

/// Print the denotation of one def at one object of its base category.
pub fn eval(inst: &Instantiation, src: &str, opts: &Options, out: &mut String) -> Result<(), CliError> {
    let prog = parse_program(inst, src)?;
    let d = select(&prog, opts.name.as_deref())?;
    let r = infer(inst, d)?;
    let base = inst
        .checker()
        .interpret_mode(&d.mode)
        .map_err(|error| CliError::Type { name: d.name.clone(), error })?;
    let x = object(base, d, opts)?;
    writeln!(out, "{}", r.tm.at(&x, &[]).render()).unwrap();
    Ok(())
}

/// Print the host value of one def at the trivial mode.
pub fn extract(inst: &Instantiation, src: &str, opts: &Options, out: &mut String) -> Result<(), CliError> {
    let prog = parse_program(inst, src)?;
    let d = select(&prog, opts.name.as_deref())?;
    let trivial = inst.theory.trivial_mode();
    if &d.mode != trivial {
        return Err(CliError::usage(format!(
            "def {} lives at mode {}; extraction needs mode {trivial}",
            d.name, d.mode
        )));
    }
    let r = infer(inst, d)?;
    let e = extractable_for(&inst.checker(), &r.ty)
        .map_err(|error| CliError::Type { name: d.name.clone(), error })?;
    match e.extract(&r.tm) {
        HostVal::Stream(s) => {
            let items: Vec<String> =
                s.take(opts.take.unwrap_or(DEFAULT_TAKE)).iter().map(|h| h.to_string()).collect();
            writeln!(out, "{}", items.join(" ")).unwrap();
        }
        h => writeln!(out, "{h}").unwrap(),
    }
    Ok(())
}
