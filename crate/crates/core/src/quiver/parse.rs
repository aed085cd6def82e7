//! Line-oriented presentation format.
//!
//! ```text
//! field F7
//! vertex v1
//! vertex v2
//! arrow beta v1 v2
//! arrow alpha v2 v1
//! relations
//! alpha*beta
//! end
//! ```
//!
//! Relations may also be written `lhs = rhs`; `#` starts a comment. Vertex
//! names may be used as factors (trivial paths) and `0` is the zero relation.

use super::{Arrow, NcPoly, Path, Presentation};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Star,
    Caret,
    Plus,
    Minus,
    Eq,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' => i += 1,
            '*' => {
                out.push((Tok::Star, col));
                i += 1
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1
            }
            '=' => {
                out.push((Tok::Eq, col));
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s.parse().map_err(|_| syntax(line, col, "integer too large"))?;
                out.push((Tok::Int(v), col));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Name(chars[start..i].iter().collect()), col));
            }
            other => return Err(syntax(line, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct PolyParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    pres: &'a Presentation,
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    // side := ['+'|'-'] term (('+'|'-') term)*
    fn side(&mut self, sign: i64, out: &mut Vec<(i64, Path)>) -> Result<()> {
        let mut s = sign;
        match self.peek() {
            Some(Tok::Minus) => {
                s = -s;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            self.term(s, out)?;
            match self.peek() {
                Some(Tok::Plus) => {
                    s = sign;
                    self.pos += 1;
                }
                Some(Tok::Minus) => {
                    s = -sign;
                    self.pos += 1;
                }
                _ => return Ok(()),
            }
        }
    }

    // term := [int ['*']] word | int
    fn term(&mut self, sign: i64, out: &mut Vec<(i64, Path)>) -> Result<()> {
        let mut coeff = sign;
        if let Some(Tok::Int(v)) = self.peek() {
            coeff *= *v;
            self.pos += 1;
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Name(_)) => {}
                _ => {
                    if coeff == 0 {
                        return Ok(());
                    }
                    return Err(syntax(self.line, self.col(), "constant terms are not paths; use a vertex name"));
                }
            }
        }
        let (path, _) = self.word()?;
        out.push((coeff, path));
        Ok(())
    }

    // word := factor ('*' factor)*
    fn word(&mut self) -> Result<(Path, String)> {
        let mut text = String::new();
        let mut path: Option<Path> = None;
        loop {
            let col = self.col();
            let name = match self.peek() {
                Some(Tok::Name(n)) => n.clone(),
                _ => return Err(syntax(self.line, col, "expected an arrow or vertex name")),
            };
            self.pos += 1;
            let mut exp = 1u32;
            if self.peek() == Some(&Tok::Caret) {
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Int(v)) if *v > 0 => {
                        exp = u32::try_from(*v).map_err(|_| syntax(self.line, self.col(), "exponent too large"))?;
                        self.pos += 1;
                    }
                    _ => return Err(syntax(self.line, self.col(), "expected a positive exponent")),
                }
            }
            if !text.is_empty() {
                text.push('*');
            }
            text.push_str(&name);
            if exp > 1 {
                text.push_str(&format!("^{exp}"));
            }
            let factor = if let Some(a) = self.pres.arrow_index(&name) {
                let ar = &self.pres.arrows[a];
                if exp > 1 && ar.source != ar.target {
                    return Err(Error::NonComposable { word: text, line: self.line });
                }
                Path { source: ar.source, target: ar.target, arrows: vec![a; exp as usize] }
            } else if let Some(v) = self.pres.vertex_index(&name) {
                Path::trivial(v)
            } else {
                return Err(Error::UnknownName { name, line: self.line });
            };
            path = Some(match path {
                None => factor,
                Some(p) => match p.then(&factor) {
                    Some(q) => q,
                    None => return Err(Error::NonComposable { word: text, line: self.line }),
                },
            });
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok((path.unwrap(), text));
            }
        }
    }
}

/// Parses one relation against the quiver of `pres`; `col0` is the column of
/// the first character of `text`.
pub fn parse_poly(text: &str, pres: &Presentation, line: usize, col0: usize) -> Result<NcPoly> {
    let toks = lex(text, line, col0)?;
    if toks.is_empty() {
        return Err(syntax(line, col0, "empty relation"));
    }
    let end_col = col0 + text.chars().count();
    let mut p = PolyParser { toks, pos: 0, line, end_col, pres };
    let mut raw = Vec::new();
    p.side(1, &mut raw)?;
    if p.peek() == Some(&Tok::Eq) {
        p.pos += 1;
        p.side(-1, &mut raw)?;
    }
    if p.pos < p.toks.len() {
        return Err(syntax(line, p.col(), "unexpected token"));
    }
    let mut terms: Vec<(i64, Path)> = Vec::new();
    for (c, path) in raw {
        match terms.iter_mut().find(|(_, q)| *q == path) {
            Some(t) => t.0 += c,
            None => terms.push((c, path)),
        }
    }
    terms.retain(|(c, _)| *c != 0);
    let poly = NcPoly { terms };
    if let Some((s, t)) = poly.endpoints() {
        if poly.terms.iter().any(|(_, q)| q.source != s || q.target != t) {
            return Err(Error::Inhomogeneous { line });
        }
    }
    Ok(poly)
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic()) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut pres = Presentation { field: FieldSpec::Rationals, vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new() };
    #[derive(PartialEq)]
    enum State {
        Start,
        Header,
        Relations,
        Done,
    }
    let mut state = State::Start;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let col0 = body[..indent].chars().count() + 1;
        let content = body.trim();
        if state == State::Done {
            return Err(syntax(line, col0, "content after `end`"));
        }
        if state == State::Relations {
            if content == "end" {
                state = State::Done;
            } else {
                let r = parse_poly(body.trim_start(), &pres, line, col0)?;
                pres.relations.push(r);
            }
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let word_col = |k: usize| {
            let mut pos = 0;
            let mut col = col0;
            for (i, w) in words.iter().enumerate() {
                let at = content[pos..].find(w).unwrap() + pos;
                if i == k {
                    col = col0 + content[..at].chars().count();
                    break;
                }
                pos = at + w.len();
            }
            col
        };
        match (&state, words[0]) {
            (State::Start, "field") => {
                if words.len() != 2 {
                    return Err(syntax(line, col0, "expected `field Q` or `field F<p>`"));
                }
                pres.field = words[1].parse().map_err(|e: Error| syntax(line, word_col(1), e.to_string()))?;
                state = State::Header;
            }
            (State::Start, _) => return Err(syntax(line, col0, "expected `field` declaration")),
            (State::Header, "vertex") => {
                if words.len() != 2 {
                    return Err(syntax(line, col0, "expected `vertex <name>`"));
                }
                if !valid_name(words[1]) {
                    return Err(syntax(line, word_col(1), format!("invalid name `{}`", words[1])));
                }
                if pres.vertex_index(words[1]).is_some() || pres.arrow_index(words[1]).is_some() {
                    return Err(syntax(line, word_col(1), format!("duplicate name `{}`", words[1])));
                }
                pres.vertices.push(words[1].to_string());
            }
            (State::Header, "arrow") => {
                if words.len() != 4 {
                    return Err(syntax(line, col0, "expected `arrow <name> <source> <target>`"));
                }
                if !valid_name(words[1]) {
                    return Err(syntax(line, word_col(1), format!("invalid name `{}`", words[1])));
                }
                if pres.vertex_index(words[1]).is_some() || pres.arrow_index(words[1]).is_some() {
                    return Err(syntax(line, word_col(1), format!("duplicate name `{}`", words[1])));
                }
                let s = pres.vertex_index(words[2]).ok_or_else(|| Error::UnknownName { name: words[2].into(), line })?;
                let t = pres.vertex_index(words[3]).ok_or_else(|| Error::UnknownName { name: words[3].into(), line })?;
                pres.arrows.push(Arrow { name: words[1].to_string(), source: s, target: t });
            }
            (State::Header, "relations") if words.len() == 1 => state = State::Relations,
            (State::Header, "end") if words.len() == 1 => state = State::Done,
            _ => return Err(syntax(line, col0, format!("unexpected `{}`", words[0]))),
        }
    }
    if state != State::Done {
        let last = text.lines().count().max(1);
        return Err(syntax(last, 1, "missing `end`"));
    }
    if pres.vertices.is_empty() {
        return Err(Error::Parse("presentation has no vertices".into()));
    }
    Ok(pres)
}
