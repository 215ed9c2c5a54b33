//! Tokens of the surface syntax.

use crate::error::{CliError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Word(String),
    Num(u64),
    /// One of `( ) [ ] < > | : , . * = @` or the digraphs `-> <- .<`.
    Sym(&'static str),
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const DIGRAPHS: [&str; 3] = ["->", "<-", ".<"];
const SINGLES: [&str; 13] = ["(", ")", "[", "]", "<", ">", "|", ":", ",", ".", "*", "=", "@"];

fn word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Split `src` into tokens. `--` starts a comment running to the end of
/// the line. A `-` belongs to a word when both neighbours are word
/// characters, so `g-map` is one word and `Nat->Nat` is three tokens.
pub fn lex(src: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, n: usize| {
        for _ in 0..n {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, 1);
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'-') {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col, 1);
            }
            continue;
        }
        if word_char(c) {
            let start = i;
            let mut end = i;
            while end < chars.len()
                && (word_char(chars[end])
                    || (chars[end] == '-'
                        && end > start
                        && chars.get(end + 1).is_some_and(|&d| word_char(d))))
            {
                end += 1;
            }
            let text: String = chars[start..end].iter().collect();
            let tok = if text.chars().all(|d| d.is_ascii_digit()) {
                let n =
                    text.parse().map_err(|_| CliError::parse(pos, format!("number {text} is too large")))?;
                Tok::Num(n)
            } else {
                Tok::Word(text)
            };
            advance(&mut i, &mut line, &mut col, end - start);
            out.push(Token { tok, pos });
            continue;
        }
        let next = chars.get(i + 1).copied();
        if let Some(d) = DIGRAPHS.iter().find(|d| {
            let mut it = d.chars();
            it.next() == Some(c) && it.next() == next
        }) {
            advance(&mut i, &mut line, &mut col, 2);
            out.push(Token { tok: Tok::Sym(d), pos });
            continue;
        }
        let s = c.to_string();
        match SINGLES.iter().find(|x| **x == s) {
            Some(x) => {
                advance(&mut i, &mut line, &mut col, 1);
                out.push(Token { tok: Tok::Sym(x), pos });
            }
            None => return Err(CliError::parse(pos, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        lex(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn hyphenated_words_and_arrows() {
        assert_eq!(
            toks("g-map Nat->Nat"),
            vec![Tok::Word("g-map".into()), Tok::Word("Nat".into()), Tok::Sym("->"), Tok::Word("Nat".into())]
        );
        assert_eq!(
            toks("var x 1-to-later"),
            vec![Tok::Word("var".into()), Tok::Word("x".into()), Tok::Word("1-to-later".into()),]
        );
    }

    #[test]
    fn digraphs_and_comments() {
        assert_eq!(
            toks("f .<later> x -- trailing\n<- 12"),
            vec![
                Tok::Word("f".into()),
                Tok::Sym(".<"),
                Tok::Word("later".into()),
                Tok::Sym(">"),
                Tok::Word("x".into()),
                Tok::Sym("<-"),
                Tok::Num(12),
            ]
        );
    }

    #[test]
    fn positions_are_one_based() {
        let t = lex("def\n  x ?").err().unwrap();
        assert_eq!(t.to_string(), "parse error at 2:5: unexpected character `?`");
        let ts = lex("a\n  b").unwrap();
        assert_eq!(ts[1].pos, Pos { line: 2, col: 3 });
    }
}
