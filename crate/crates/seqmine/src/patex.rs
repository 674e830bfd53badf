//! Pattern expression parsing.
//!
//! # Grammar
//!
//! ```text
//! union   := concat ('|' concat)*
//! concat  := repeat+
//! repeat  := atom ('*' | '+' | '?' | '{' n '}' | '{' n ',' '}' | '{' n ',' m '}')*
//! atom    := item | '.' ['^'] | '(' union ')' | '[' union ']'
//! item    := gid ['='] ['^']
//! gid     := [A-Za-z0-9_]+ | '\'' escaped-string '\''
//! ```
//!
//! Whitespace between tokens is insignificant. Repetition binds tighter than
//! concatenation, which binds tighter than union, so `a|b c*` reads as
//! `a | [b [c]*]`.
//!
//! Item expressions select input items and decide what they produce:
//!
//! | form  | matches            | produces (when captured)        |
//! |-------|--------------------|---------------------------------|
//! | `w`   | any descendant of `w` | the matched item             |
//! | `w=`  | exactly `w`        | `w`                             |
//! | `w^`  | any descendant of `w` | the matched item generalized up to `w` |
//! | `w=^` | any descendant of `w` | `w`                          |
//! | `.`   | any item           | the matched item                |
//! | `.^`  | any item           | the matched item and all its ancestors |
//!
//! `( )` captures: only item expressions inside some capture produce output.
//! `[ ]` merely groups and leaves no trace in the AST. The generalizing forms
//! (`^`) are only meaningful when captured and are rejected otherwise.
//!
//! `{n}` is shorthand for `{n,n}`; `?`, `*`, `+` behave as `{0,1}`, `{0,∞}`,
//! `{1,∞}` but are kept as distinct node kinds so that parsing and printing
//! round-trip exactly.

use std::fmt;

use crate::error::{Error, Result};

/// Parsed pattern expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternAst {
    Item { gid: String, exact: bool, generalize: bool },
    Wildcard { generalize: bool },
    Capture(Box<PatternAst>),
    Concat(Vec<PatternAst>),
    Union(Vec<PatternAst>),
    Optional(Box<PatternAst>),
    Star(Box<PatternAst>),
    Plus(Box<PatternAst>),
    Repeat { child: Box<PatternAst>, min: u32, max: Option<u32> },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Pipe,
    Star,
    Plus,
    Question,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Equals,
    Caret,
    Ident(String),
    Quoted(String),
}

fn syntax(offset: usize, msg: impl Into<String>) -> Error {
    Error::PatternSyntax { offset, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'|' => Tok::Pipe,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'?' => Tok::Question,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b',' => Tok::Comma,
            b'.' => Tok::Dot,
            b'=' => Tok::Equals,
            b'^' => Tok::Caret,
            b'\'' => {
                let start = i;
                let mut gid = String::new();
                i += 1;
                loop {
                    match bytes.get(i) {
                        None => return Err(syntax(start, "unterminated quoted item")),
                        Some(b'\'') => break,
                        Some(b'\\') => match bytes.get(i + 1) {
                            Some(&c @ (b'\'' | b'\\')) => {
                                gid.push(c as char);
                                i += 2;
                            }
                            _ => return Err(syntax(i, "invalid escape in quoted item")),
                        },
                        Some(_) => {
                            // Consume one full character (gids may hold any UTF-8).
                            let ch = text[i..].chars().next().unwrap();
                            gid.push(ch);
                            i += ch.len_utf8();
                        }
                    }
                }
                toks.push((start, Tok::Quoted(gid)));
                i += 1;
                continue;
            }
            _ if b.is_ascii_alphanumeric() || b == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(syntax(i, format!("unexpected character '{ch}'")));
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    capture_depth: u32,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn union(&mut self) -> Result<PatternAst> {
        let first = self.concat()?;
        if self.peek() != Some(&Tok::Pipe) {
            return Ok(first);
        }
        let mut children = vec![first];
        while self.eat(&Tok::Pipe) {
            children.push(self.concat()?);
        }
        Ok(PatternAst::Union(children))
    }

    fn concat(&mut self) -> Result<PatternAst> {
        let mut children = vec![self.repeat()?];
        while matches!(
            self.peek(),
            Some(Tok::LParen | Tok::LBracket | Tok::Dot | Tok::Ident(_) | Tok::Quoted(_))
        ) {
            children.push(self.repeat()?);
        }
        if children.len() == 1 {
            Ok(children.pop().unwrap())
        } else {
            Ok(PatternAst::Concat(children))
        }
    }

    fn repeat(&mut self) -> Result<PatternAst> {
        let mut node = self.atom()?;
        loop {
            node = match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    PatternAst::Star(Box::new(node))
                }
                Some(Tok::Plus) => {
                    self.pos += 1;
                    PatternAst::Plus(Box::new(node))
                }
                Some(Tok::Question) => {
                    self.pos += 1;
                    PatternAst::Optional(Box::new(node))
                }
                Some(Tok::LBrace) => {
                    let brace = self.offset();
                    self.pos += 1;
                    let min = self.number()?;
                    let max = if self.eat(&Tok::Comma) {
                        if self.peek() == Some(&Tok::RBrace) {
                            None
                        } else {
                            Some(self.number()?)
                        }
                    } else {
                        Some(min)
                    };
                    self.expect(Tok::RBrace, "'}'")?;
                    if let Some(m) = max {
                        if min > m {
                            return Err(syntax(brace, format!("empty repeat range {{{min},{m}}}")));
                        }
                    }
                    PatternAst::Repeat { child: Box::new(node), min, max }
                }
                _ => return Ok(node),
            };
        }
    }

    fn number(&mut self) -> Result<u32> {
        let offset = self.offset();
        match self.peek() {
            Some(Tok::Ident(s)) if s.bytes().all(|b| b.is_ascii_digit()) => {
                let n = s
                    .parse::<u32>()
                    .map_err(|_| syntax(offset, "repeat bound out of range"))?;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(syntax(offset, "expected repeat bound")),
        }
    }

    fn atom(&mut self) -> Result<PatternAst> {
        let offset = self.offset();
        let tok = match self.toks.get(self.pos) {
            Some((_, t)) => t.clone(),
            None => return Err(syntax(offset, "expected item, '.', '(' or '['")),
        };
        self.pos += 1;
        match tok {
            Tok::LParen => {
                self.capture_depth += 1;
                let inner = self.union()?;
                self.capture_depth -= 1;
                self.expect(Tok::RParen, "')'")?;
                Ok(PatternAst::Capture(Box::new(inner)))
            }
            Tok::LBracket => {
                let inner = self.union()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(inner)
            }
            Tok::Dot => {
                if self.peek() == Some(&Tok::Equals) {
                    return Err(syntax(self.offset(), "'=' cannot follow '.'"));
                }
                let generalize = self.generalize_suffix()?;
                Ok(PatternAst::Wildcard { generalize })
            }
            Tok::Ident(gid) | Tok::Quoted(gid) => {
                let exact = self.eat(&Tok::Equals);
                let generalize = self.generalize_suffix()?;
                Ok(PatternAst::Item { gid, exact, generalize })
            }
            _ => Err(syntax(offset, "expected item, '.', '(' or '['")),
        }
    }

    fn generalize_suffix(&mut self) -> Result<bool> {
        let offset = self.offset();
        if self.eat(&Tok::Caret) {
            if self.capture_depth == 0 {
                return Err(Error::PatternValidation {
                    offset,
                    msg: "generalization ('^') outside any capture".to_string(),
                });
            }
            Ok(true)
        } else {
            Ok(false)
        }
    }
}

/// Parses and validates a pattern expression.
pub fn parse(text: &str) -> Result<PatternAst> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, capture_depth: 0, end: text.len() };
    let ast = p.union()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "unexpected token"));
    }
    Ok(ast)
}

/// One flag per item-level node (item expression or wildcard) in
/// left-to-right order: true iff it lies inside some capture group.
pub fn captured_spans(ast: &PatternAst) -> Vec<bool> {
    fn walk(ast: &PatternAst, in_capture: bool, out: &mut Vec<bool>) {
        match ast {
            PatternAst::Item { .. } | PatternAst::Wildcard { .. } => out.push(in_capture),
            PatternAst::Capture(c) => walk(c, true, out),
            PatternAst::Concat(cs) | PatternAst::Union(cs) => {
                for c in cs {
                    walk(c, in_capture, out);
                }
            }
            PatternAst::Optional(c)
            | PatternAst::Star(c)
            | PatternAst::Plus(c)
            | PatternAst::Repeat { child: c, .. } => walk(c, in_capture, out),
        }
    }
    let mut out = Vec::new();
    walk(ast, false, &mut out);
    out
}

/// Renders a gid as pattern syntax: bare when it is `[A-Za-z0-9_]+`,
/// single-quoted with escapes otherwise.
pub(crate) fn quote_gid(gid: &str) -> String {
    if !gid.is_empty() && gid.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
        gid.to_string()
    } else {
        let mut out = String::from("'");
        for ch in gid.chars() {
            if ch == '\'' || ch == '\\' {
                out.push('\\');
            }
            out.push(ch);
        }
        out.push('\'');
        out
    }
}

impl PatternAst {
    fn is_postfix_safe(&self) -> bool {
        matches!(
            self,
            PatternAst::Item { .. } | PatternAst::Wildcard { .. } | PatternAst::Capture(_)
        )
    }
}

fn write_child(
    f: &mut fmt::Formatter<'_>,
    child: &PatternAst,
    needs_group: bool,
) -> fmt::Result {
    if needs_group {
        write!(f, "[{child}]")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for PatternAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternAst::Item { gid, exact, generalize } => {
                write!(f, "{}", quote_gid(gid))?;
                if *exact {
                    write!(f, "=")?;
                }
                if *generalize {
                    write!(f, "^")?;
                }
                Ok(())
            }
            PatternAst::Wildcard { generalize } => {
                write!(f, ".")?;
                if *generalize {
                    write!(f, "^")?;
                }
                Ok(())
            }
            PatternAst::Capture(c) => write!(f, "({c})"),
            PatternAst::Concat(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write_child(f, c, matches!(c, PatternAst::Union(_) | PatternAst::Concat(_)))?;
                }
                Ok(())
            }
            PatternAst::Union(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write_child(f, c, matches!(c, PatternAst::Union(_)))?;
                }
                Ok(())
            }
            PatternAst::Optional(c) => {
                write_child(f, c, !c.is_postfix_safe())?;
                write!(f, "?")
            }
            PatternAst::Star(c) => {
                write_child(f, c, !c.is_postfix_safe())?;
                write!(f, "*")
            }
            PatternAst::Plus(c) => {
                write_child(f, c, !c.is_postfix_safe())?;
                write!(f, "+")
            }
            PatternAst::Repeat { child, min, max } => {
                write_child(f, child, !child.is_postfix_safe())?;
                match max {
                    Some(m) if m == min => write!(f, "{{{min}}}"),
                    Some(m) => write!(f, "{{{min},{m}}}"),
                    None => write!(f, "{{{min},}}"),
                }
            }
        }
    }
}
