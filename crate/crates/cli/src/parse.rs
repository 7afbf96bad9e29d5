//! The line-oriented ring file format.
//!
//! ```text
//! # comment
//! field 32003
//! vars x1 x2 x3 y
//! ideal x1*y, x2*y, x3*y
//! name q = x1 + y, x2, x3
//! ```

use std::fmt;

use socle_core::{AlgebraError, Ideal, PolyRing, Polynomial, PrimeField, TermOrder, DEFAULT_PRIME};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, msg: msg.into() })
}

/// A parsed ring description.
#[derive(Clone, Debug)]
pub struct RingFile {
    pub ring: PolyRing,
    pub ideal: Vec<Polynomial>,
    pub names: Vec<(String, Vec<Polynomial>)>,
}

impl PartialEq for RingFile {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p()
            && self.ring.names() == other.ring.names()
            && self.ideal == other.ideal
            && self.names == other.names
    }
}

impl RingFile {
    pub fn p(&self) -> u32 {
        self.ring.field().characteristic()
    }

    pub fn vars(&self) -> &[String] {
        self.ring.names()
    }

    pub fn defining_ideal(&self) -> Result<Ideal, AlgebraError> {
        Ideal::new(&self.ring, self.ideal.clone())
    }

    pub fn named(&self, name: &str) -> Option<&[Polynomial]> {
        self.names.iter().find(|(n, _)| n == name).map(|(_, g)| g.as_slice())
    }

    /// Serialise back to the file format.
    pub fn render(&self) -> String {
        let list = |gens: &[Polynomial]| gens.iter().map(|g| self.ring.display(g)).collect::<Vec<_>>().join(", ");
        let mut s = format!("field {}\nvars {}\n", self.p(), self.vars().join(" "));
        if self.ideal.is_empty() {
            s.push_str("ideal\n");
        } else {
            s.push_str(&format!("ideal {}\n", list(&self.ideal)));
        }
        for (name, gens) in &self.names {
            s.push_str(&format!("name {name} = {}\n", list(gens)));
        }
        s
    }
}

/// Parse a ring file; `p_override` replaces the `field` line.
pub fn parse_ring(text: &str, p_override: Option<u32>) -> Result<RingFile, ParseError> {
    let mut p: Option<(u32, usize)> = None;
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut bodies: Vec<(usize, usize, &str, &str)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (kw, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed.trim_end(), ""),
        };
        let rest_col = indent + kw.len() + 1;
        match kw {
            "field" => {
                if p.is_some() {
                    return err(line, indent + 1, "duplicate field line");
                }
                let v = rest.trim();
                let value: u32 = v.parse().or_else(|_| err(line, rest_col, format!("invalid characteristic '{v}'")))?;
                p = Some((value, line));
            }
            "vars" => {
                if vars.is_some() {
                    return err(line, indent + 1, "duplicate vars line");
                }
                let mut names: Vec<String> = Vec::new();
                let mut offset = rest_col - 1;
                for tok in rest.split(char::is_whitespace) {
                    if tok.is_empty() {
                        offset += 1;
                        continue;
                    }
                    let col = offset + 1;
                    if !is_ident(tok) {
                        return err(line, col, format!("invalid variable name '{tok}'"));
                    }
                    if names.iter().any(|n| n == tok) {
                        return err(line, col, format!("duplicate variable '{tok}'"));
                    }
                    names.push(tok.to_string());
                    offset += tok.len() + 1;
                }
                if names.is_empty() {
                    return err(line, indent + 1, "vars line lists no variables");
                }
                vars = Some((names, line));
            }
            "ideal" | "name" => bodies.push((line, rest_col, kw, rest)),
            other => return err(line, indent + 1, format!("unknown keyword '{other}'")),
        }
    }

    let (names, vars_line) = match vars {
        Some(v) => v,
        None => return err(1, 1, "missing vars line"),
    };
    let p_val = match (p_override, p) {
        (Some(v), _) => v,
        (None, Some((v, _))) => v,
        (None, None) => DEFAULT_PRIME,
    };
    let field = PrimeField::new(p_val).or_else(|e| err(p.map_or(1, |x| x.1), 1, e.to_string()))?;
    let ring = PolyRing::new(&names, field, TermOrder::GrevLex).or_else(|e| err(vars_line, 1, e.to_string()))?;

    let mut ideal = Vec::new();
    let mut named: Vec<(String, Vec<Polynomial>)> = Vec::new();
    for (line, col, kw, rest) in bodies {
        if kw == "ideal" {
            ideal.extend(parse_list(&ring, rest, line, col, true)?);
        } else {
            let Some(eq) = rest.find('=') else {
                return err(line, col, "expected 'name <ident> = <expr>, ...'");
            };
            let ident = rest[..eq].trim();
            if !is_ident(ident) {
                return err(line, col, format!("invalid name '{ident}'"));
            }
            if named.iter().any(|(n, _)| n == ident) {
                return err(line, col, format!("duplicate name '{ident}'"));
            }
            let gens = parse_list(&ring, &rest[eq + 1..], line, col + eq + 1, true)?;
            named.push((ident.to_string(), gens));
        }
    }
    Ok(RingFile { ring, ideal, names: named })
}

/// Parse comma-separated expressions against an existing ring, as used for
/// `--ideal` and `--q` values given inline.
pub fn parse_exprs(ring: &PolyRing, text: &str) -> Result<Vec<Polynomial>, ParseError> {
    parse_list(ring, text, 1, 1, true)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_list(
    ring: &PolyRing,
    text: &str,
    line: usize,
    col: usize,
    homogeneous: bool,
) -> Result<Vec<Polynomial>, ParseError> {
    let toks = tokenize(text, line, col)?;
    if toks.is_empty() {
        return Ok(Vec::new());
    }
    let mut parser = Parser { ring, toks: &toks, pos: 0, line, end_col: col + text.len() };
    let mut out = Vec::new();
    loop {
        let start = parser.col();
        let start_byte = parser.byte();
        let f = parser.expr()?;
        let source = text[start_byte - col..parser.byte_end() - col].trim();
        if homogeneous && !f.is_homogeneous() {
            return err(line, start, format!("generator is not homogeneous: {source}"));
        }
        if !f.is_zero() {
            out.push(f);
        }
        match parser.peek() {
            None => break,
            Some(Tok { kind: Kind::Comma, .. }) => {
                parser.pos += 1;
                if parser.peek().is_none() {
                    return err(line, parser.end_col, "expected an expression after ','");
                }
            }
            Some(t) => return err(line, t.col, format!("unexpected {}", t.kind.describe())),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Num(n) => format!("number '{n}'"),
            Kind::Ident(s) => format!("identifier '{s}'"),
            Kind::Plus => "'+'".into(),
            Kind::Minus => "'-'".into(),
            Kind::Star => "'*'".into(),
            Kind::Caret => "'^'".into(),
            Kind::LParen => "'('".into(),
            Kind::RParen => "')'".into(),
            Kind::Comma => "','".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Tok {
    kind: Kind,
    /// 1-based column of the first character.
    col: usize,
    len: usize,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<Tok>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Kind::Plus),
            '-' => Some(Kind::Minus),
            '*' => Some(Kind::Star),
            '^' => Some(Kind::Caret),
            '(' => Some(Kind::LParen),
            ')' => Some(Kind::RParen),
            ',' => Some(Kind::Comma),
            _ => None,
        };
        if let Some(kind) = single {
            out.push(Tok { kind, col, len: 1 });
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok { kind: Kind::Num(text[start..i].to_string()), col, len: i - start });
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Tok { kind: Kind::Ident(text[start..i].to_string()), col, len: i - start });
        } else {
            return err(line, col, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: &'a [Tok],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end_col, |t| t.col)
    }

    fn byte(&self) -> usize {
        self.col()
    }

    /// Column just past the last consumed token.
    fn byte_end(&self) -> usize {
        self.toks[..self.pos].last().map_or(self.end_col, |t| t.col + t.len)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        err(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let r = self.ring;
        let mut acc = match self.peek().map(|t| &t.kind) {
            Some(Kind::Minus) => {
                self.pos += 1;
                r.neg(&self.term()?)
            }
            Some(Kind::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(Kind::Plus) => {
                    self.pos += 1;
                    acc = r.add(&acc, &self.term()?);
                }
                Some(Kind::Minus) => {
                    self.pos += 1;
                    acc = r.sub(&acc, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(Kind::Star) => {
                    self.pos += 1;
                    acc = self.ring.mul(&acc, &self.factor()?);
                }
                Some(Kind::Num(_) | Kind::Ident(_) | Kind::LParen) => {
                    return self.fail("expected an operator; write products with '*'");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Kind::Caret) = self.peek().map(|t| &t.kind) {
            self.pos += 1;
            let Some(Tok { kind: Kind::Num(n), .. }) = self.peek().cloned() else {
                return self.fail("expected a non-negative integer exponent after '^'");
            };
            let e: u32 = match n.parse() {
                Ok(e) => e,
                Err(_) => return self.fail(format!("exponent '{n}' is too large")),
            };
            self.pos += 1;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.fail("unexpected end of expression");
        };
        match tok.kind {
            Kind::Num(n) => {
                self.pos += 1;
                let p = self.ring.field().characteristic() as u64;
                let v = n.bytes().fold(0u64, |a, d| (a * 10 + (d - b'0') as u64) % p);
                Ok(self.ring.constant(v as i64))
            }
            Kind::Ident(name) => match self.ring.names().iter().position(|v| *v == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                }
                None => self.fail(format!("unknown variable '{name}'")),
            },
            Kind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek().map(|t| &t.kind) {
                    Some(Kind::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.fail("expected ')'"),
                }
            }
            other => self.fail(format!("unexpected {}", other.describe())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_file() {
        let rf = parse_ring("field 32003\nvars x1 x2 x3 y\nideal x1*y, x2*y, x3*y # the example\n", None).unwrap();
        assert_eq!(rf.p(), 32003);
        assert_eq!(rf.ideal.len(), 3);
        assert_eq!(rf.ring.display(&rf.ideal[1]), "x2*y");
    }

    #[test]
    fn empty_ideal_is_zero() {
        let rf = parse_ring("vars x y\nideal\n", None).unwrap();
        assert!(rf.ideal.is_empty());
        assert_eq!(rf.p(), DEFAULT_PRIME);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ring("vars x x\n", None).unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        assert!(e.msg.contains("duplicate variable"));

        let e = parse_ring("vars x y\nideal x*y, x z\n", None).unwrap_err();
        assert_eq!((e.line, e.col), (2, 14));
        assert!(e.msg.contains("'*'"));

        let e = parse_ring("vars x y\nideal x*w\n", None).unwrap_err();
        assert_eq!((e.line, e.col), (2, 9));
        assert!(e.msg.contains("unknown variable 'w'"));

        let e = parse_ring("vars x y\nideal x^2, x + y^2\n", None).unwrap_err();
        assert_eq!((e.line, e.col), (2, 12));
        assert_eq!(e.msg, "generator is not homogeneous: x + y^2");

        let e = parse_ring("vars x y\nideal (x + y\n", None).unwrap_err();
        assert!(e.msg.contains("')'"));

        let e = parse_ring("field 32004\nvars x\n", None).unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn arithmetic() {
        let rf = parse_ring("field 7\nvars x y\nname f = (x + y)^2 - x*(x + 2*y), -3*x + 10*y\n", None).unwrap();
        let f = rf.named("f").unwrap();
        assert_eq!(rf.ring.display(&f[0]), "y^2");
        assert_eq!(rf.ring.display(&f[1]), "-3*x + 3*y");
    }

    #[test]
    fn render_round_trip() {
        let rf = parse_ring("vars a b c\nideal a*b - c^2, b^3\nname q = a, b + c, c\n", None).unwrap();
        assert_eq!(parse_ring(&rf.render(), None).unwrap(), rf);
    }
}
