//! Parser for `.mstt` source files.
//!
//! A file is a sequence of `def <name> [@ <mode>] [: <type>] = <term>`
//! declarations. A name that is not bound by an enclosing binder but
//! names an earlier def is replaced by that def's term, so every parsed
//! body is a closed term of the core syntax.

use std::collections::HashMap;

use mstt_core::instance::Instantiation;
use mstt_core::mode_theory::{ModalityExpr, Mode, TwoCellExpr};
use mstt_core::syntax::{
    ann, app, ext, if_then_else, lam, lit, mod_intro, modal_lam, nat_elim, pair, svar, var, ArgKind, ExtArg,
    TmExpr, TyExpr,
};

use crate::error::{CliError, Pos};
use crate::lexer::{lex, Tok, Token};

#[derive(Clone, Debug, PartialEq)]
pub struct Def {
    pub name: String,
    pub mode: Mode,
    pub ann: Option<TyExpr>,
    pub body: TmExpr,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Program {
    pub defs: Vec<Def>,
}

impl Program {
    pub fn get(&self, name: &str) -> Option<&Def> {
        self.defs.iter().find(|d| d.name == name)
    }
}

const KEYWORDS: [&str; 16] = [
    "def", "lam", "let", "in", "if", "then", "else", "mod", "var", "fst", "snd", "nat-elim", "suc", "plus",
    "true", "false",
];

fn binder_kinds(kinds: &[ArgKind]) -> bool {
    matches!(kinds, [ArgKind::Name, ArgKind::Ty, ArgKind::Tm])
}

struct Parser<'a> {
    inst: &'a Instantiation,
    toks: Vec<Token>,
    at: usize,
    end: Pos,
    defs: HashMap<String, TmExpr>,
    bound: Vec<String>,
}

type PResult<T> = Result<T, CliError>;

/// Parse a whole source file.
pub fn parse_program(inst: &Instantiation, src: &str) -> PResult<Program> {
    let mut p = Parser::new(inst, src)?;
    let mut prog = Program::default();
    while !p.done() {
        let def = p.def()?;
        p.defs.insert(def.name.clone(), def.body.clone());
        prog.defs.push(def);
    }
    Ok(prog)
}

/// Parse a single closed term.
pub fn parse_term(inst: &Instantiation, src: &str) -> PResult<TmExpr> {
    let mut p = Parser::new(inst, src)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parse a single type.
pub fn parse_type(inst: &Instantiation, src: &str) -> PResult<TyExpr> {
    let mut p = Parser::new(inst, src)?;
    let t = p.ty()?;
    p.finish()?;
    Ok(t)
}

impl<'a> Parser<'a> {
    fn new(inst: &'a Instantiation, src: &str) -> PResult<Self> {
        let lines: Vec<&str> = src.split('\n').collect();
        let end = Pos { line: lines.len(), col: lines.last().map_or(0, |l| l.chars().count()) + 1 };
        Ok(Parser { inst, toks: lex(src)?, at: 0, end, defs: HashMap::new(), bound: Vec::new() })
    }

    fn done(&self) -> bool {
        self.at >= self.toks.len()
    }

    fn finish(&self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(format!("unexpected {t} after the end of the input"))),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.at + k).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn err(&self, message: impl Into<String>) -> CliError {
        CliError::parse(self.pos(), message)
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| String::from("end of input"), |t| t.to_string())
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x == w)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        let hit = self.is_sym(s);
        if hit {
            self.at += 1;
        }
        hit
    }

    fn eat_word(&mut self, w: &str) -> bool {
        let hit = self.is_word(w);
        if hit {
            self.at += 1;
        }
        hit
    }

    fn expect_sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`, found {}", self.found())))
        }
    }

    fn expect_word(&mut self, w: &str) -> PResult<()> {
        if self.eat_word(w) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{w}`, found {}", self.found())))
        }
    }

    /// A name: any word that is not a keyword.
    fn name(&mut self, what: &str) -> PResult<String> {
        match self.peek() {
            Some(Tok::Word(w)) if !KEYWORDS.contains(&w.as_str()) => {
                let w = w.clone();
                self.at += 1;
                Ok(w)
            }
            _ => Err(self.err(format!("expected {what}, found {}", self.found()))),
        }
    }

    fn def(&mut self) -> PResult<Def> {
        self.expect_word("def")?;
        let at = self.pos();
        let name = self.name("a def name")?;
        if self.defs.contains_key(&name) {
            return Err(CliError::parse(at, format!("def {name} is already defined")));
        }
        let mode = if self.eat_sym("@") {
            let at = self.pos();
            let m = self.name("a mode")?;
            self.inst.theory.parse_mode(&m).map_err(|e| CliError::parse(at, e.message))?
        } else {
            self.inst.theory.trivial_mode().clone()
        };
        let ann = if self.eat_sym(":") { Some(self.ty()?) } else { None };
        self.expect_sym("=")?;
        let body = self.term()?;
        if !self.done() && !self.is_word("def") {
            return Err(
                self.err(format!("expected the next `def` or the end of the file, found {}", self.found()))
            );
        }
        Ok(Def { name, mode, ann, body })
    }

    fn modality(&mut self) -> PResult<ModalityExpr> {
        let left = match self.peek() {
            Some(Tok::Num(1)) => {
                self.at += 1;
                ModalityExpr::Id
            }
            Some(Tok::Sym("(")) => {
                self.at += 1;
                let m = self.modality()?;
                self.expect_sym(")")?;
                m
            }
            Some(Tok::Word(w)) if w != "o" => {
                let m = ModalityExpr::atom(w);
                self.at += 1;
                m
            }
            _ => return Err(self.err(format!("expected a modality, found {}", self.found()))),
        };
        if self.eat_word("o") {
            Ok(left.then(&self.modality()?))
        } else {
            Ok(left)
        }
    }

    pub fn ty(&mut self) -> PResult<TyExpr> {
        let a = self.ty_prod()?;
        if self.eat_sym("->") {
            Ok(TyExpr::arrow(a, self.ty()?))
        } else {
            Ok(a)
        }
    }

    fn ty_prod(&mut self) -> PResult<TyExpr> {
        let a = self.ty_atom()?;
        if self.eat_sym("*") {
            Ok(TyExpr::prod(a, self.ty_prod()?))
        } else {
            Ok(a)
        }
    }

    fn ty_atom(&mut self) -> PResult<TyExpr> {
        match self.peek().cloned() {
            Some(Tok::Sym("(")) => {
                self.at += 1;
                let t = self.ty()?;
                self.expect_sym(")")?;
                Ok(t)
            }
            Some(Tok::Sym("<")) => {
                self.at += 1;
                let mu = self.modality()?;
                self.expect_sym("|")?;
                let t = self.ty()?;
                self.expect_sym(">")?;
                Ok(TyExpr::modal(mu, t))
            }
            Some(Tok::Word(w)) if w == "Nat" => {
                self.at += 1;
                Ok(TyExpr::Nat)
            }
            Some(Tok::Word(w)) if w == "Bool" => {
                self.at += 1;
                Ok(TyExpr::Bool)
            }
            Some(Tok::Word(w)) => {
                let Some(e) = self.inst.ty_ext(&w) else {
                    return Err(self.err(format!("unknown type former `{w}`")));
                };
                let arity = e.arity();
                self.at += 1;
                let args = (0..arity).map(|_| self.ty_atom()).collect::<PResult<Vec<_>>>()?;
                Ok(TyExpr::ext(&w, args))
            }
            _ => Err(self.err(format!("expected a type, found {}", self.found()))),
        }
    }

    fn with_bound<T>(&mut self, x: &str, f: impl FnOnce(&mut Self) -> PResult<T>) -> PResult<T> {
        self.bound.push(x.to_owned());
        let r = f(self);
        self.bound.pop();
        r
    }

    pub fn term(&mut self) -> PResult<TmExpr> {
        match self.peek().cloned() {
            Some(Tok::Word(w)) if w == "lam" => self.lambda(),
            Some(Tok::Word(w)) if w == "let" => self.let_mod(),
            Some(Tok::Word(w)) if w == "if" => {
                self.at += 1;
                let c = self.term()?;
                self.expect_word("then")?;
                let a = self.term()?;
                self.expect_word("else")?;
                let b = self.term()?;
                Ok(if_then_else(c, a, b))
            }
            Some(Tok::Word(w)) if self.binder_ext(&w) && matches!(self.peek_at(1), Some(Tok::Sym("["))) => {
                self.binder_ext_term(&w)
            }
            _ => self.application(),
        }
    }

    fn binder_ext(&self, w: &str) -> bool {
        !self.bound.iter().any(|b| b == w)
            && !self.defs.contains_key(w)
            && self.inst.tm_ext(w).is_some_and(|e| binder_kinds(e.arg_kinds()))
    }

    /// `code[x : T] t`.
    fn binder_ext_term(&mut self, code: &str) -> PResult<TmExpr> {
        self.at += 1;
        self.expect_sym("[")?;
        let x = self.name("a bound name")?;
        self.expect_sym(":")?;
        let ty = self.ty()?;
        self.expect_sym("]")?;
        let body = self.with_bound(&x, |p| p.term())?;
        Ok(ext(code, vec![ExtArg::Name(x.as_str().into()), ExtArg::Ty(ty), ExtArg::Tm(body)]))
    }

    /// `lam[x : T] t` or `lam[mu | x : T] t`.
    fn lambda(&mut self) -> PResult<TmExpr> {
        self.at += 1;
        self.expect_sym("[")?;
        let simple =
            matches!(self.peek(), Some(Tok::Word(_))) && matches!(self.peek_at(1), Some(Tok::Sym(":")));
        let mu = if simple {
            None
        } else {
            let mu = self.modality()?;
            self.expect_sym("|")?;
            Some(mu)
        };
        let x = self.name("a bound name")?;
        self.expect_sym(":")?;
        let ty = self.ty()?;
        self.expect_sym("]")?;
        let body = self.with_bound(&x, |p| p.term())?;
        Ok(match mu {
            None => lam(&x, ty, body),
            Some(mu) => modal_lam(mu, &x, ty, body),
        })
    }

    /// `let [prefix] mod<mu> x <- t in s`.
    fn let_mod(&mut self) -> PResult<TmExpr> {
        self.at += 1;
        let prefix = if self.eat_sym("[") {
            let p = self.modality()?;
            self.expect_sym("]")?;
            p
        } else {
            ModalityExpr::Id
        };
        self.expect_word("mod")?;
        self.expect_sym("<")?;
        let mu = self.modality()?;
        self.expect_sym(">")?;
        let x = self.name("a bound name")?;
        self.expect_sym("<-")?;
        let t = self.term()?;
        self.expect_word("in")?;
        let s = self.with_bound(&x, |p| p.term())?;
        Ok(TmExpr::ModElim { prefix, mu, x: x.as_str().into(), t: t.into(), s: s.into() })
    }

    /// Left-nested `f . a` and `f .<mu> a`.
    fn application(&mut self) -> PResult<TmExpr> {
        let mut f = self.modal_term()?;
        loop {
            if self.eat_sym(".") {
                f = app(f, self.modal_term()?);
            } else if self.eat_sym(".<") {
                let mu = self.modality()?;
                self.expect_sym(">")?;
                f = app(f, mod_intro(mu, self.modal_term()?));
            } else {
                return Ok(f);
            }
        }
    }

    /// `mod<mu> t` or an atom.
    fn modal_term(&mut self) -> PResult<TmExpr> {
        if self.is_word("mod") {
            self.at += 1;
            self.expect_sym("<")?;
            let mu = self.modality()?;
            self.expect_sym(">")?;
            Ok(mod_intro(mu, self.modal_term()?))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> PResult<TmExpr> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err("expected a term, found end of input"));
        };
        match tok {
            Tok::Num(n) => {
                self.at += 1;
                Ok(lit(n))
            }
            Tok::Sym("(") => {
                self.at += 1;
                let t = self.term()?;
                let out = if self.eat_sym(",") {
                    pair(t, self.term()?)
                } else if self.eat_sym(":") {
                    ann(t, self.ty()?)
                } else {
                    t
                };
                self.expect_sym(")")?;
                Ok(out)
            }
            Tok::Word(w) => self.word_atom(&w),
            Tok::Sym(_) => Err(self.err(format!("expected a term, found {tok}"))),
        }
    }

    fn word_atom(&mut self, w: &str) -> PResult<TmExpr> {
        if self.bound.iter().any(|b| b == w) {
            self.at += 1;
            return Ok(svar(w));
        }
        match w {
            "true" | "false" | "suc" | "plus" => {
                self.at += 1;
                Ok(match w {
                    "true" => TmExpr::True,
                    "false" => TmExpr::False,
                    "suc" => TmExpr::Suc,
                    _ => TmExpr::Plus,
                })
            }
            "fst" | "snd" => {
                self.at += 1;
                let p = self.atom()?;
                Ok(if w == "fst" { mstt_core::syntax::fst(p) } else { mstt_core::syntax::snd(p) })
            }
            "nat-elim" => {
                self.at += 1;
                let z = self.atom()?;
                let s = self.atom()?;
                Ok(nat_elim(z, s))
            }
            "var" => {
                self.at += 1;
                let x = self.name("a variable")?;
                let cell = match self.peek().cloned() {
                    Some(Tok::Word(c)) if c == "id" => TwoCellExpr::Id,
                    Some(Tok::Word(c)) => TwoCellExpr::named(&c),
                    Some(Tok::Num(1)) => TwoCellExpr::Id,
                    _ => return Err(self.err(format!("expected a two-cell name, found {}", self.found()))),
                };
                self.at += 1;
                Ok(var(&x, cell))
            }
            _ if KEYWORDS.contains(&w) => Err(self.err(format!("expected a term, found keyword `{w}`"))),
            _ => {
                if let Some(t) = self.defs.get(w) {
                    self.at += 1;
                    return Ok(t.clone());
                }
                if let Some(e) = self.inst.tm_ext(w) {
                    let kinds = e.arg_kinds().to_vec();
                    if binder_kinds(&kinds) {
                        return self.binder_ext_term(w);
                    }
                    self.at += 1;
                    let args = kinds.iter().map(|k| self.ext_arg(*k)).collect::<PResult<Vec<_>>>()?;
                    return Ok(ext(w, args));
                }
                self.at += 1;
                Ok(svar(w))
            }
        }
    }

    fn ext_arg(&mut self, kind: ArgKind) -> PResult<ExtArg> {
        Ok(match kind {
            ArgKind::Ty => ExtArg::Ty(self.ty_atom()?),
            ArgKind::Tm => ExtArg::Tm(self.atom()?),
            ArgKind::Name => ExtArg::Name(self.name("a name")?.as_str().into()),
            ArgKind::Num => match self.peek() {
                Some(Tok::Num(n)) => {
                    let n = *n;
                    self.at += 1;
                    ExtArg::Num(n)
                }
                _ => return Err(self.err(format!("expected a number, found {}", self.found()))),
            },
        })
    }
}
