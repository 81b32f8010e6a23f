//! Tokenizer for `.lspin` session files. `#` starts a comment.

use super::{DslError, ErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    /// One of `{ } ( ) ; : , = * ^ / -`.
    Punct(char),
    Ne,
    Eof,
}

impl Tok {
    pub fn text(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Int(n) => n.to_string(),
            Tok::Punct(c) => c.to_string(),
            Tok::Ne => "!=".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| DslError::new(ErrorKind::Syntax, pos, &s, "integer too large"))?;
            Tok::Int(n)
        } else if c == '!' && chars.get(i + 1) == Some(&'=') {
            i += 2;
            Tok::Ne
        } else if "{}();:,=*^/-".contains(c) {
            i += 1;
            Tok::Punct(c)
        } else {
            return Err(DslError::new(ErrorKind::Syntax, pos, &c.to_string(), "unexpected character"));
        };
        col += i - start;
        out.push(Token { tok, pos });
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col } });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_tokens() {
        let t = lex("chars {\n  xi: unramified order 2; # c\n}\nrelations { chi != nu^{-1/2}; }").unwrap();
        assert_eq!(t[2].tok, Tok::Ident("xi".into()));
        assert_eq!(t[2].pos, Pos { line: 2, col: 3 });
        assert!(t.iter().any(|x| x.tok == Tok::Ne));
        assert_eq!(t.last().unwrap().tok, Tok::Eof);
        let e = lex("repr P = I(@)").unwrap_err();
        assert_eq!((e.line, e.col), (1, 12));
    }
}
