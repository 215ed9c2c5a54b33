//! Rendering programs back to surface syntax.

use crate::parser::{Def, Program};

/// One `def` per line, ASCII spellings, mode always explicit.
pub fn render_def(d: &Def) -> String {
    let mut out = format!("def {} @ {}", d.name, d.mode);
    if let Some(ty) = &d.ann {
        out.push_str(" : ");
        out.push_str(&ty.render(false));
    }
    out.push_str(" = ");
    out.push_str(&d.body.render(false));
    out
}

pub fn render_program(p: &Program) -> String {
    p.defs.iter().map(|d| render_def(d) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;
    use mstt_core::guarded;

    #[test]
    fn rendering_then_parsing_is_identity() {
        let inst = guarded::instantiation();
        let src = "def f @ omega : Nat -> <later | Nat> = lam[n : Nat] mod<later> (suc . n)\n\
                   def g @ omega = lam[later | x : Nat] (mod<later> x, if true then 1 else 2)\n";
        let p = parse_program(&inst, src).unwrap();
        let text = render_program(&p);
        assert_eq!(parse_program(&inst, &text).unwrap(), p);
        assert_eq!(
            text.lines().next().unwrap(),
            "def f @ omega : Nat -> <later | Nat> = lam[n : Nat] mod<later> (suc . n)"
        );
    }
}
