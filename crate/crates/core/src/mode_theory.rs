//! Mode theories: modes, modalities and two-cells together with their
//! interpretation in the presheaf model.
//!
//! Modality equivalence is decided by rewriting flattened compositions to a
//! normal form with rules supplied by the instantiation.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{dra_compose, dra_unit, modality_iso, BaseCategory, ClosedTy, DraRef, SemTwoCell, TyIso};
use crate::tcm::{type_error, Tcm};

/// A mode identifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode(Rc<str>);

impl Mode {
    pub fn new(name: &str) -> Self {
        Mode(Rc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Modality expressions: atoms closed under the unit and composition.
///
/// The unit carries no mode; endpoints are computed relative to the
/// codomain a modality is used at.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModalityExpr {
    Id,
    Atom(Rc<str>),
    /// `Comp(μ, ρ)` is `μ ⓜ ρ`: `ρ` is applied first to types.
    Comp(Rc<ModalityExpr>, Rc<ModalityExpr>),
}

impl ModalityExpr {
    pub fn atom(name: &str) -> Self {
        ModalityExpr::Atom(Rc::from(name))
    }

    /// `self ⓜ rho`, syntactic.
    pub fn then(&self, rho: &ModalityExpr) -> Self {
        ModalityExpr::Comp(Rc::new(self.clone()), Rc::new(rho.clone()))
    }

    /// The atoms in order, outermost first, with units dropped.
    pub fn flatten(&self) -> Vec<Rc<str>> {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        out
    }

    fn flatten_into(&self, out: &mut Vec<Rc<str>>) {
        match self {
            ModalityExpr::Id => {}
            ModalityExpr::Atom(a) => out.push(a.clone()),
            ModalityExpr::Comp(m, r) => {
                m.flatten_into(out);
                r.flatten_into(out);
            }
        }
    }

    /// Right-nested composition of a list of atoms; `[]` is the unit.
    pub fn from_atoms(atoms: &[Rc<str>]) -> Self {
        match atoms {
            [] => ModalityExpr::Id,
            [a] => ModalityExpr::Atom(a.clone()),
            [a, rest @ ..] => ModalityExpr::Atom(a.clone()).then(&ModalityExpr::from_atoms(rest)),
        }
    }

    pub fn render(&self, unicode: bool) -> String {
        match self {
            ModalityExpr::Id => String::from(if unicode { "𝟙" } else { "1" }),
            ModalityExpr::Atom(a) => String::from(&**a),
            ModalityExpr::Comp(m, r) => {
                let left = match &**m {
                    ModalityExpr::Comp(..) => format!("({})", m.render(unicode)),
                    _ => m.render(unicode),
                };
                format!("{left} {} {}", if unicode { "ⓜ" } else { "o" }, r.render(unicode))
            }
        }
    }
}

impl fmt::Display for ModalityExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// Two-cell expressions: the trivial cell or a named cell of the theory.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TwoCellExpr {
    Id,
    Named(Rc<str>),
}

impl TwoCellExpr {
    pub fn named(name: &str) -> Self {
        TwoCellExpr::Named(Rc::from(name))
    }

    pub fn name(&self) -> &str {
        match self {
            TwoCellExpr::Id => "id",
            TwoCellExpr::Named(n) => n,
        }
    }
}

impl fmt::Display for TwoCellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub struct AtomInfo {
    pub name: Rc<str>,
    pub dom: Mode,
    pub cod: Mode,
    pub dra: DraRef,
}

/// A named two-cell `src ⇒ tgt` between normal forms.
pub struct CellInfo {
    pub name: Rc<str>,
    pub src: Vec<Rc<str>>,
    pub tgt: Vec<Rc<str>>,
}

/// `lhs ↦ rhs` on contiguous sublists of flattened compositions.
pub struct RewriteRule {
    pub lhs: Vec<Rc<str>>,
    pub rhs: Vec<Rc<str>>,
}

impl RewriteRule {
    pub fn new(lhs: &[&str], rhs: &[&str]) -> Self {
        RewriteRule {
            lhs: lhs.iter().map(|s| Rc::from(*s)).collect(),
            rhs: rhs.iter().map(|s| Rc::from(*s)).collect(),
        }
    }
}

pub struct ModeTheory {
    pub name: String,
    modes: Vec<(Mode, BaseCategory)>,
    trivial: Mode,
    atoms: Vec<AtomInfo>,
    rules: Vec<RewriteRule>,
    cells: Vec<CellInfo>,
}

/// Witness of `μ ≃ᵐ ρ`: an isomorphism `⟨μ | A⟩ ≅ ⟨ρ | A⟩` for every `A`.
#[derive(Clone)]
pub struct ModalityIso {
    mu: DraRef,
    rho: DraRef,
}

impl ModalityIso {
    pub fn at(&self, inner: &ClosedTy) -> TyIso {
        modality_iso(&self.mu, &self.rho, inner)
    }
}

impl ModeTheory {
    pub fn new(name: &str, modes: Vec<(Mode, BaseCategory)>, trivial: Mode) -> Self {
        assert!(modes.iter().any(|(m, _)| *m == trivial), "trivial mode must be registered");
        ModeTheory {
            name: String::from(name),
            modes,
            trivial,
            atoms: Vec::new(),
            rules: Vec::new(),
            cells: Vec::new(),
        }
    }

    pub fn with_atom(mut self, name: &str, dom: &str, cod: &str, dra: DraRef) -> Self {
        let (dom, cod) = (Mode::new(dom), Mode::new(cod));
        assert_eq!(self.mode_base(&dom), Some(dra.dom()), "atom {name}: domain mismatch");
        assert_eq!(self.mode_base(&cod), Some(dra.cod()), "atom {name}: codomain mismatch");
        self.atoms.push(AtomInfo { name: Rc::from(name), dom, cod, dra });
        self
    }

    pub fn with_rule(mut self, rule: RewriteRule) -> Self {
        self.rules.push(rule);
        self
    }

    pub fn with_cell(mut self, name: &str, src: &[&str], tgt: &[&str]) -> Self {
        self.cells.push(CellInfo {
            name: Rc::from(name),
            src: src.iter().map(|s| Rc::from(*s)).collect(),
            tgt: tgt.iter().map(|s| Rc::from(*s)).collect(),
        });
        self
    }

    pub fn modes(&self) -> impl Iterator<Item = &Mode> {
        self.modes.iter().map(|(m, _)| m)
    }

    pub fn trivial_mode(&self) -> &Mode {
        &self.trivial
    }

    pub fn atoms(&self) -> &[AtomInfo] {
        &self.atoms
    }

    pub fn cells(&self) -> &[CellInfo] {
        &self.cells
    }

    pub fn atom(&self, name: &str) -> Option<&AtomInfo> {
        self.atoms.iter().find(|a| &*a.name == name)
    }

    pub fn mode_base(&self, m: &Mode) -> Option<BaseCategory> {
        self.modes.iter().find(|(n, _)| n == m).map(|(_, b)| *b)
    }

    pub fn parse_mode(&self, name: &str) -> Tcm<Mode> {
        let m = Mode::new(name);
        match self.mode_base(&m) {
            Some(_) => Ok(m),
            None => type_error("mode", format!("unknown mode {name}")),
        }
    }

    /// `⟦ m ⟧mode`.
    pub fn interpret_mode(&self, m: &Mode) -> Tcm<BaseCategory> {
        self.mode_base(m).map_or_else(|| type_error("mode", format!("unknown mode {m}")), Ok)
    }

    /// `=mode?`.
    pub fn modes_equal(&self, m: &Mode, n: &Mode) -> Tcm<()> {
        if m == n {
            Ok(())
        } else {
            type_error("mode-eq", format!("mode {m} is not equal to mode {n}"))
        }
    }

    /// The domain of `μ` used at codomain `cod`, checking well-formedness.
    pub fn modality_dom(&self, mu: &ModalityExpr, cod: &Mode) -> Tcm<Mode> {
        self.interpret_mode(cod)?;
        match mu {
            ModalityExpr::Id => Ok(cod.clone()),
            ModalityExpr::Atom(a) => {
                let info = self
                    .atom(a)
                    .map_or_else(|| type_error("modality", format!("unknown modality {a}")), Ok)?;
                if info.cod != *cod {
                    return type_error(
                        "modality",
                        format!("modality {a} has codomain {} but is used at mode {cod}", info.cod),
                    );
                }
                Ok(info.dom.clone())
            }
            ModalityExpr::Comp(m, r) => {
                let middle = self.modality_dom(m, cod)?;
                self.modality_dom(r, &middle)
            }
        }
    }

    /// `μ ⓜ ρ`, rejected unless the endpoints line up.
    pub fn compose_modalities(&self, mu: &ModalityExpr, rho: &ModalityExpr, cod: &Mode) -> Tcm<ModalityExpr> {
        let composite = mu.then(rho);
        self.modality_dom(&composite, cod)?;
        Ok(composite)
    }

    /// Flatten, drop units and rewrite to a fixed point.
    pub fn normalize(&self, mu: &ModalityExpr) -> Vec<Rc<str>> {
        let mut atoms = mu.flatten();
        'rewrite: loop {
            for rule in &self.rules {
                if rule.lhs.is_empty() || rule.lhs.len() > atoms.len() {
                    continue;
                }
                for start in 0..=atoms.len() - rule.lhs.len() {
                    if atoms[start..start + rule.lhs.len()] == rule.lhs[..] {
                        atoms.splice(start..start + rule.lhs.len(), rule.rhs.iter().cloned());
                        continue 'rewrite;
                    }
                }
            }
            return atoms;
        }
    }

    /// `⟦ μ ⟧modality` for `μ` used at codomain `cod`.
    pub fn interpret_modality(&self, mu: &ModalityExpr, cod: &Mode) -> Tcm<DraRef> {
        self.modality_dom(mu, cod)?;
        self.interpret_unchecked(mu, cod)
    }

    fn interpret_unchecked(&self, mu: &ModalityExpr, cod: &Mode) -> Tcm<DraRef> {
        match mu {
            ModalityExpr::Id => Ok(dra_unit(self.interpret_mode(cod)?)),
            ModalityExpr::Atom(a) => Ok(self.atom(a).expect("checked atom").dra.clone()),
            ModalityExpr::Comp(m, r) => {
                let middle = self.modality_dom(m, cod)?;
                Ok(dra_compose(&self.interpret_unchecked(m, cod)?, &self.interpret_unchecked(r, &middle)?))
            }
        }
    }

    fn render_nf(nf: &[Rc<str>]) -> String {
        if nf.is_empty() {
            return String::from("[]");
        }
        let names: Vec<&str> = nf.iter().map(|a| &**a).collect();
        format!("[{}]", names.join(", "))
    }

    /// `≃ᵐ?` on modalities with codomain `cod`.
    pub fn modalities_equivalent(
        &self,
        mu: &ModalityExpr,
        rho: &ModalityExpr,
        cod: &Mode,
    ) -> Tcm<ModalityIso> {
        let (dm, dr) = (self.modality_dom(mu, cod)?, self.modality_dom(rho, cod)?);
        if dm != dr {
            return type_error(
                "modality-eq",
                format!("modalities {mu} and {rho} have different domains {dm} and {dr}"),
            );
        }
        let (nm, nr) = (self.normalize(mu), self.normalize(rho));
        if nm != nr {
            return type_error(
                "modality-eq",
                format!(
                    "modalities {mu} and {rho} are not equivalent (normal forms {} and {})",
                    Self::render_nf(&nm),
                    Self::render_nf(&nr)
                ),
            );
        }
        Ok(ModalityIso { mu: self.interpret_unchecked(mu, cod)?, rho: self.interpret_unchecked(rho, cod)? })
    }

    /// Check that `α` is a two-cell `μ ⇒ ρ` and interpret it.
    pub fn check_two_cell(
        &self,
        alpha: &TwoCellExpr,
        mu: &ModalityExpr,
        rho: &ModalityExpr,
        cod: &Mode,
    ) -> Tcm<SemTwoCell> {
        let reject = |why: String| {
            type_error("two-cell", format!("two-cell {alpha} cannot be used as {mu} ⇒ {rho}: {why}"))
        };
        let (dm, dr) = (self.modality_dom(mu, cod)?, self.modality_dom(rho, cod)?);
        if dm != dr {
            return reject(format!("domains {dm} and {dr} differ"));
        }
        match alpha {
            TwoCellExpr::Id => {
                if let Err(e) = self.modalities_equivalent(mu, rho, cod) {
                    return reject(e.message);
                }
            }
            TwoCellExpr::Named(name) => {
                let Some(cell) = self.cells.iter().find(|c| c.name == *name) else {
                    return reject(String::from("unknown two-cell"));
                };
                let (nm, nr) = (self.normalize(mu), self.normalize(rho));
                if nm != cell.src || nr != cell.tgt {
                    return reject(format!(
                        "its endpoints are {} ⇒ {} but normal forms are {} ⇒ {}",
                        Self::render_nf(&cell.src),
                        Self::render_nf(&cell.tgt),
                        Self::render_nf(&nm),
                        Self::render_nf(&nr)
                    ));
                }
            }
        }
        let (sm, sr) = (self.interpret_unchecked(mu, cod)?, self.interpret_unchecked(rho, cod)?);
        SemTwoCell::new(&sm, &sr).or_else(reject)
    }
}
