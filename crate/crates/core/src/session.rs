//! Session scripts: a ring, named ideals, options, certificates and tasks.
//!
//! ```text
//! # comments run to the end of the line
//! ring S = Q[x, y];            # or Zp(32003)[...], or Q[x | y] for k[x;y]
//! option order = degrevlex;
//! ideal J = x^2, x*y;
//! ideal m = x, y;
//! certify origin J;
//! components J = P:1, m:1;
//! task verify J m;
//! ```
//!
//! Names must be declared before use. [`SessionScript::emit`] prints a script
//! that parses back to an equal value.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::parse::parse_polynomial_at;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TaskKind {
    Gb,
    Hilbert,
    StdPairs,
    Adeg,
    Gg,
    Gmult,
    Ladeg,
    Verify,
}

impl TaskKind {
    pub const ALL: [TaskKind; 8] = [
        TaskKind::Gb,
        TaskKind::Hilbert,
        TaskKind::StdPairs,
        TaskKind::Adeg,
        TaskKind::Gg,
        TaskKind::Gmult,
        TaskKind::Ladeg,
        TaskKind::Verify,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TaskKind::Gb => "gb",
            TaskKind::Hilbert => "hilbert",
            TaskKind::StdPairs => "stdpairs",
            TaskKind::Adeg => "adeg",
            TaskKind::Gg => "gg",
            TaskKind::Gmult => "gmult",
            TaskKind::Ladeg => "ladeg",
            TaskKind::Verify => "verify",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// Number of ideal arguments: `J`, or the pair `J I`.
    pub fn arity(&self) -> usize {
        match self {
            TaskKind::Gb | TaskKind::Hilbert | TaskKind::StdPairs | TaskKind::Adeg => 1,
            _ => 2,
        }
    }

    /// Tasks that localize at the origin and so need `certify origin`.
    pub fn needs_origin(&self) -> bool {
        matches!(
            self,
            TaskKind::Gg | TaskKind::Gmult | TaskKind::Ladeg | TaskKind::Verify
        )
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub kind: TaskKind,
    pub args: Vec<String>,
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: Field,
    pub xs: Vec<String>,
    /// Empty for a standard graded ring.
    pub ys: Vec<String>,
}

impl RingDecl {
    pub fn build(&self) -> Result<RingRef> {
        if self.ys.is_empty() {
            Ring::standard(&self.xs, self.field)
        } else {
            Ring::bigraded(&self.xs, &self.ys, self.field)
        }
    }
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}", self.field, self.xs.join(", "))?;
        if !self.ys.is_empty() {
            write!(f, " | {}", self.ys.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub gens: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertKind {
    /// Every associated prime of `S/J` passes through the origin.
    Origin,
    Equidimensional,
}

impl CertKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertKind::Origin => "origin",
            CertKind::Equidimensional => "equidimensional",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertKind,
    pub ideal: String,
}

/// `components J = P:2, Q:1;`: associated primes of `S/J` with local lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecl {
    pub ideal: String,
    pub parts: Vec<(String, i128)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderName {
    Degrevlex,
    Lex,
}

impl OrderName {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "degrevlex" => Some(OrderName::Degrevlex),
            "lex" => Some(OrderName::Lex),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OrderName::Degrevlex => "degrevlex",
            OrderName::Lex => "lex",
        }
    }

    pub fn term_order(&self) -> crate::monomial::TermOrder {
        match self {
            OrderName::Degrevlex => crate::monomial::TermOrder::Degrevlex,
            OrderName::Lex => crate::monomial::TermOrder::Lex,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub order: Option<OrderName>,
    pub max_deg: Option<u32>,
    pub max_basis: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionScript {
    pub ring: RingDecl,
    pub options: Options,
    pub ideals: Vec<IdealDecl>,
    pub certificates: Vec<Certificate>,
    pub components: Vec<ComponentDecl>,
    pub tasks: Vec<Task>,
}

impl SessionScript {
    pub fn ideal(&self, name: &str) -> Option<&IdealDecl> {
        self.ideals.iter().find(|d| d.name == name)
    }

    pub fn certified(&self, kind: CertKind, ideal: &str) -> bool {
        self.certificates
            .iter()
            .any(|c| c.kind == kind && c.ideal == ideal)
    }

    pub fn components_of(&self, ideal: &str) -> Option<&ComponentDecl> {
        self.components.iter().find(|c| c.ideal == ideal)
    }

    /// Canonical text; parses back to an equal script.
    pub fn emit(&self) -> String {
        let mut out = format!("ring {} = {};\n", self.ring.name, self.ring);
        if let Some(o) = self.options.order {
            out += &format!("option order = {};\n", o.as_str());
        }
        if let Some(d) = self.options.max_deg {
            out += &format!("option max_deg = {d};\n");
        }
        if let Some(b) = self.options.max_basis {
            out += &format!("option max_basis = {b};\n");
        }
        for d in &self.ideals {
            let gens: Vec<String> = d.gens.iter().map(|g| g.to_string()).collect();
            out += &format!("ideal {} = {};\n", d.name, gens.join(", "));
        }
        for c in &self.certificates {
            out += &format!("certify {} {};\n", c.kind.as_str(), c.ideal);
        }
        for c in &self.components {
            let parts: Vec<String> = c.parts.iter().map(|(p, l)| format!("{p}:{l}")).collect();
            out += &format!("components {} = {};\n", c.ideal, parts.join(", "));
        }
        for t in &self.tasks {
            out += &format!("task {t};\n");
        }
        out
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut column = 1;
    for b in src.as_bytes()[..offset].iter() {
        if *b == b'\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    (line, column)
}

impl<'a> Cursor<'a> {
    fn error_at(&self, offset: usize, message: impl Into<String>) -> Error {
        let (line, column) = position(self.src, offset);
        Error::Parse {
            line,
            column,
            offset,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn bytes(&self) -> &'a [u8] {
        self.src.as_bytes()
    }

    fn skip(&mut self) {
        let b = self.bytes();
        while self.pos < b.len() {
            if b[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            } else if b[self.pos] == b'#' {
                while self.pos < b.len() && b[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip();
        self.pos >= self.src.len()
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(f) => format!("'{}'", f as char),
                None => "end of input".into(),
            };
            Err(self.error(format!("expected '{}', found {found}", c as char)))
        }
    }

    /// `(identifier, offset)`.
    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip();
        let b = self.bytes();
        let start = self.pos;
        if start < b.len() && (b[start].is_ascii_alphabetic() || b[start] == b'_') {
            while self.pos < b.len() && (b[self.pos].is_ascii_alphanumeric() || b[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Ok((self.src[start..self.pos].to_string(), start))
        } else {
            Err(self.error("expected a name"))
        }
    }

    fn integer(&mut self) -> Result<(i128, usize)> {
        self.skip();
        let b = self.bytes();
        let start = self.pos;
        while self.pos < b.len() && b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map(|v| (v, start))
            .map_err(|_| self.error_at(start, "integer out of range"))
    }

    /// Comma-separated raw items up to the terminating `;`, with `#` comments
    /// blanked out; commas inside parentheses do not split.
    fn raw_items(&mut self) -> Result<Vec<(String, usize)>> {
        let b = self.bytes();
        let mut items = Vec::new();
        let mut depth = 0i32;
        let mut start = self.pos;
        let mut text = String::new();
        while self.pos < b.len() {
            let c = b[self.pos];
            match c {
                b'#' => {
                    while self.pos < b.len() && b[self.pos] != b'\n' {
                        text.push(' ');
                        self.pos += 1;
                    }
                    continue;
                }
                b'(' => depth += 1,
                b')' => depth -= 1,
                b',' | b';' if depth <= 0 => {
                    items.push((std::mem::take(&mut text), start));
                    self.pos += 1;
                    if c == b';' {
                        return Ok(items);
                    }
                    start = self.pos;
                    continue;
                }
                _ => {}
            }
            text.push(c as char);
            self.pos += 1;
        }
        Err(self.error("expected ';', found end of input"))
    }
}

/// Parses a session script. Errors carry line, column and byte offset.
pub fn parse_session(text: &str) -> Result<SessionScript> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut ring: Option<(RingDecl, RingRef)> = None;
    let mut script_ideals: Vec<IdealDecl> = Vec::new();
    let mut options = Options::default();
    let mut certificates = Vec::new();
    let mut components: Vec<ComponentDecl> = Vec::new();
    let mut tasks = Vec::new();

    while !cur.at_end() {
        let (kw, kw_at) = cur.ident()?;
        if kw != "ring" && ring.is_none() {
            return Err(cur.error_at(kw_at, "the ring must be declared first"));
        }
        let declared = |name: &str, ideals: &[IdealDecl]| ideals.iter().any(|d| d.name == name);
        match kw.as_str() {
            "ring" => {
                if ring.is_some() {
                    return Err(cur.error_at(kw_at, "duplicate ring declaration"));
                }
                let (name, _) = cur.ident()?;
                cur.expect(b'=')?;
                let (fname, f_at) = cur.ident()?;
                let field = match fname.as_str() {
                    "Q" | "QQ" => Field::Rational,
                    "Zp" | "GF" => {
                        cur.expect(b'(')?;
                        let (p, p_at) = cur.integer()?;
                        cur.expect(b')')?;
                        let p = u32::try_from(p)
                            .map_err(|_| cur.error_at(p_at, "characteristic out of range"))?;
                        Field::prime(p).map_err(|e| cur.error_at(p_at, e.to_string()))?
                    }
                    other => return Err(cur.error_at(f_at, format!("unknown field '{other}'"))),
                };
                cur.expect(b'[')?;
                let mut xs = Vec::new();
                let mut ys = Vec::new();
                let mut second = false;
                let mut seen: Vec<String> = Vec::new();
                loop {
                    let (v, v_at) = cur.ident()?;
                    if seen.contains(&v) {
                        return Err(cur.error_at(v_at, format!("duplicate variable '{v}'")));
                    }
                    seen.push(v.clone());
                    if second {
                        ys.push(v);
                    } else {
                        xs.push(v);
                    }
                    if cur.eat(b',') {
                        continue;
                    }
                    if !second && cur.eat(b'|') {
                        second = true;
                        continue;
                    }
                    break;
                }
                let close_at = cur.pos;
                cur.expect(b']')?;
                cur.expect(b';')?;
                let decl = RingDecl {
                    name,
                    field,
                    xs,
                    ys,
                };
                let built = decl
                    .build()
                    .map_err(|e| cur.error_at(close_at, e.to_string()))?;
                ring = Some((decl, built));
            }
            "ideal" => {
                let (name, at) = cur.ident()?;
                let rdecl = &ring.as_ref().unwrap().0;
                if declared(&name, &script_ideals) || name == rdecl.name {
                    return Err(cur.error_at(at, format!("duplicate name '{name}'")));
                }
                cur.expect(b'=')?;
                let r = ring.as_ref().unwrap().1.clone();
                let mut gens = Vec::new();
                let items = cur.raw_items()?;
                let single_empty = items.len() == 1 && items[0].0.trim().is_empty();
                if !single_empty {
                    for (item, off) in items {
                        if item.trim().is_empty() {
                            return Err(cur.error_at(off, "empty generator"));
                        }
                        let (line, column) = position(text, off);
                        let p = parse_polynomial_at(&r, &item, (line, column, off))?;
                        if !p.is_zero() {
                            gens.push(p);
                        }
                    }
                }
                script_ideals.push(IdealDecl { name, gens });
            }
            "option" => {
                let (key, key_at) = cur.ident()?;
                cur.expect(b'=')?;
                match key.as_str() {
                    "order" => {
                        let (v, at) = cur.ident()?;
                        options.order = Some(
                            OrderName::parse(&v)
                                .ok_or_else(|| cur.error_at(at, format!("unknown order '{v}'")))?,
                        );
                    }
                    "max_deg" => {
                        let (v, at) = cur.integer()?;
                        options.max_deg = Some(
                            u32::try_from(v)
                                .map_err(|_| cur.error_at(at, "max_deg out of range"))?,
                        );
                    }
                    "max_basis" => {
                        let (v, at) = cur.integer()?;
                        options.max_basis = Some(
                            usize::try_from(v)
                                .map_err(|_| cur.error_at(at, "max_basis out of range"))?,
                        );
                    }
                    other => return Err(cur.error_at(key_at, format!("unknown option '{other}'"))),
                }
                cur.expect(b';')?;
            }
            "certify" => {
                let (k, k_at) = cur.ident()?;
                let kind = match k.as_str() {
                    "origin" => CertKind::Origin,
                    "equidimensional" => CertKind::Equidimensional,
                    other => {
                        return Err(cur.error_at(k_at, format!("unknown certificate '{other}'")))
                    }
                };
                let (ideal, at) = cur.ident()?;
                if !declared(&ideal, &script_ideals) {
                    return Err(cur.error_at(at, format!("undeclared ideal '{ideal}'")));
                }
                cur.expect(b';')?;
                certificates.push(Certificate { kind, ideal });
            }
            "components" => {
                let (ideal, at) = cur.ident()?;
                if !declared(&ideal, &script_ideals) {
                    return Err(cur.error_at(at, format!("undeclared ideal '{ideal}'")));
                }
                if components.iter().any(|c| c.ideal == ideal) {
                    return Err(cur.error_at(at, format!("duplicate components for '{ideal}'")));
                }
                cur.expect(b'=')?;
                let mut parts = Vec::new();
                loop {
                    let (p, p_at) = cur.ident()?;
                    if !declared(&p, &script_ideals) {
                        return Err(cur.error_at(p_at, format!("undeclared ideal '{p}'")));
                    }
                    cur.expect(b':')?;
                    let (l, l_at) = cur.integer()?;
                    if l == 0 {
                        return Err(cur.error_at(l_at, "local lengths are positive"));
                    }
                    parts.push((p, l));
                    if !cur.eat(b',') {
                        break;
                    }
                }
                cur.expect(b';')?;
                components.push(ComponentDecl { ideal, parts });
            }
            "task" => {
                let (k, k_at) = cur.ident()?;
                let kind = TaskKind::parse(&k)
                    .ok_or_else(|| cur.error_at(k_at, format!("unknown task '{k}'")))?;
                let mut args = Vec::new();
                while cur.peek() != Some(b';') && !cur.at_end() {
                    let (a, at) = cur.ident()?;
                    if !declared(&a, &script_ideals) {
                        return Err(cur.error_at(at, format!("undeclared ideal '{a}'")));
                    }
                    args.push(a);
                }
                if args.len() != kind.arity() {
                    return Err(cur.error_at(
                        k_at,
                        format!(
                            "task {kind} takes {} ideal(s), got {}",
                            kind.arity(),
                            args.len()
                        ),
                    ));
                }
                cur.expect(b';')?;
                tasks.push(Task { kind, args });
            }
            other => return Err(cur.error_at(kw_at, format!("unknown statement '{other}'"))),
        }
    }
    let Some((ring, _)) = ring else {
        return Err(cur.error("empty script: no ring declared"));
    };
    Ok(SessionScript {
        ring,
        options,
        ideals: script_ideals,
        certificates,
        components,
        tasks,
    })
}

#[cfg(test)]
mod tests;
