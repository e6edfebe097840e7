//! Text syntax for signatures and terms.
//!
//! Grammar (`*` binds tighter than `;`, both left-associative; `;` is
//! diagrammatic order, so `t ; u` is `u` after `t`):
//!
//! ```text
//! t ::= name | id[O] | alpha[O,O,O] | alpha'[O,O,O] | lam[O] | lam'[O]
//!     | rho[O] | rho'[O] | sym[O,O] | sym'[O,O] | twist[O] | twist'[O]
//!     | eta[O] | eps[O] | etaL[O] | epsL[O] | piv[O] | piv'[O]
//!     | copy[O] | erase[O] | merge[O] | init[O]
//!     | trR{O}(t) | trL{O}(t) | dg(t) | mate(t) | pair(t,t) | copair(t,t)
//!     | proj1[O,O] | proj2[O,O] | inj1[O,O] | inj2[O,O] | t ; t | t * t | (t)
//! O ::= name | I | O * O | O^r | O^l | (O)
//! ```
//!
//! `pair`, `copair`, `proj*`, `inj*` are surface sugar and desugar to the
//! copy/erase/merge/initial constants during parsing; the core AST has no
//! tupling node.
//!
//! Signature files are line oriented (`#` starts a comment):
//!
//! ```text
//! object A, B, C
//! morphism f : A * B -> C
//! morphism u : I -> A^r * A
//! ```
//!
//! The signature kind is inferred: simple if every type is a single object
//! variable, autonomous if any dual appears, monoidal otherwise.

use std::fmt;

use thiserror::Error;

use crate::signature::{ObjectTerm, Signature, SignatureKind};
use crate::term::{infer_type, Term, TermError};

/// A half-open source region, 1-based line/column plus byte offsets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SourceSpan {
    pub line: u32,
    pub column: u32,
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {span}: {message}")]
    Syntax { span: SourceSpan, message: String },
    #[error("{0}")]
    Term(#[from] TermError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok<'a> {
    Ident(&'a str),
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Star,
    DualR,
    DualL,
    Prime,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok<'a>, SourceSpan)>,
}

fn span_at(src: &str, start: usize, end: usize) -> SourceSpan {
    let mut line = 1u32;
    let mut col = 1u32;
    for (i, ch) in src.char_indices() {
        if i >= start {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    SourceSpan { line, column: col, start, end }
}

fn lex(src: &str) -> Result<Vec<(Tok<'_>, SourceSpan)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            '[' => Some((Tok::LBracket, 1)),
            ']' => Some((Tok::RBracket, 1)),
            '(' => Some((Tok::LParen, 1)),
            ')' => Some((Tok::RParen, 1)),
            '{' => Some((Tok::LBrace, 1)),
            '}' => Some((Tok::RBrace, 1)),
            ',' => Some((Tok::Comma, 1)),
            ';' => Some((Tok::Semi, 1)),
            '*' => Some((Tok::Star, 1)),
            '\'' => Some((Tok::Prime, 1)),
            '^' => {
                let next = bytes.get(i + 1).copied();
                match next {
                    Some(b'r') => Some((Tok::DualR, 2)),
                    Some(b'l') => Some((Tok::DualL, 2)),
                    _ => {
                        return Err(ParseError::Syntax {
                            span: span_at(src, i, i + 1),
                            message: "expected `^r` or `^l`".into(),
                        })
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(&src[start..i]), span_at(src, start, i)));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    span: span_at(src, i, i + 1),
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        let (t, len) = tok.unwrap();
        toks.push((t, span_at(src, i, i + len)));
        i += len;
    }
    Ok(toks)
}

struct Parser<'a> {
    lx: Lexer<'a>,
    pos: usize,
    sig: &'a Signature,
}

const KEYWORDS: &[&str] = &[
    "id", "alpha", "lam", "rho", "sym", "twist", "eta", "eps", "etaL", "epsL", "piv", "copy",
    "erase", "merge", "init", "trR", "trL", "dg", "mate", "pair", "copair", "proj1", "proj2",
    "inj1", "inj2", "I",
];

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Tok<'a>, SourceSpan)> {
        self.lx.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(Tok<'a>, SourceSpan)> {
        let t = self.lx.toks.get(self.pos).copied();
        self.pos += 1;
        t
    }

    fn eof_span(&self) -> SourceSpan {
        let n = self.lx.src.len();
        span_at(self.lx.src, n, n)
    }

    fn err(&self, span: SourceSpan, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { span, message: message.into() }
    }

    fn expect(&mut self, want: Tok<'_>, what: &str) -> Result<SourceSpan, ParseError> {
        match self.next() {
            Some((t, sp)) if t == want => Ok(sp),
            Some((_, sp)) => Err(self.err(sp, format!("expected {what}"))),
            None => Err(self.err(self.eof_span(), format!("expected {what}, found end of input"))),
        }
    }

    // ---- objects ----

    fn parse_obj(&mut self) -> Result<ObjectTerm, ParseError> {
        let mut acc = self.parse_obj_factor()?;
        while matches!(self.peek(), Some((Tok::Star, _))) {
            self.next();
            let rhs = self.parse_obj_factor()?;
            acc = ObjectTerm::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_obj_factor(&mut self) -> Result<ObjectTerm, ParseError> {
        let mut base = match self.next() {
            Some((Tok::Ident("I"), _)) => ObjectTerm::Unit,
            Some((Tok::Ident(name), sp)) => {
                if KEYWORDS.contains(&name) {
                    return Err(self.err(sp, format!("`{name}` is reserved")));
                }
                ObjectTerm::var(name)
            }
            Some((Tok::LParen, _)) => {
                let o = self.parse_obj()?;
                self.expect(Tok::RParen, "`)`")?;
                o
            }
            Some((_, sp)) => return Err(self.err(sp, "expected an object term")),
            None => return Err(self.err(self.eof_span(), "expected an object term")),
        };
        loop {
            match self.peek() {
                Some((Tok::DualR, _)) => {
                    self.next();
                    base = ObjectTerm::right_dual(base);
                }
                Some((Tok::DualL, _)) => {
                    self.next();
                    base = ObjectTerm::left_dual(base);
                }
                _ => break,
            }
        }
        Ok(base)
    }

    fn bracket_objs(&mut self, n: usize) -> Result<Vec<ObjectTerm>, ParseError> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            if k > 0 {
                self.expect(Tok::Comma, "`,`")?;
            }
            out.push(self.parse_obj()?);
        }
        self.expect(Tok::RBracket, "`]`")?;
        Ok(out)
    }

    fn prime(&mut self) -> bool {
        if matches!(self.peek(), Some((Tok::Prime, _))) {
            self.next();
            true
        } else {
            false
        }
    }

    // ---- terms ----

    fn parse_seq(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.parse_tensor()?;
        while matches!(self.peek(), Some((Tok::Semi, _))) {
            self.next();
            let rhs = self.parse_tensor()?;
            acc = Term::compose(rhs, acc);
        }
        Ok(acc)
    }

    fn parse_tensor(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.parse_atom()?;
        while matches!(self.peek(), Some((Tok::Star, _))) {
            self.next();
            let rhs = self.parse_atom()?;
            acc = Term::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Term, ParseError> {
        let (tok, sp) = match self.next() {
            Some(t) => t,
            None => return Err(self.err(self.eof_span(), "expected a term")),
        };
        match tok {
            Tok::LParen => {
                let t = self.parse_seq()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Ident(name) => self.parse_named(name, sp),
            _ => Err(self.err(sp, "expected a term")),
        }
    }

    fn parse_named(&mut self, name: &str, sp: SourceSpan) -> Result<Term, ParseError> {
        match name {
            "id" => {
                let o = self.bracket_objs(1)?.pop().unwrap();
                Ok(Term::Id(o))
            }
            "alpha" => {
                let inv = self.prime();
                let mut os = self.bracket_objs(3)?;
                let c = os.pop().unwrap();
                let b = os.pop().unwrap();
                let a = os.pop().unwrap();
                Ok(Term::Alpha(a, b, c, inv))
            }
            "lam" => {
                let inv = self.prime();
                Ok(Term::Lambda(self.bracket_objs(1)?.pop().unwrap(), inv))
            }
            "rho" => {
                let inv = self.prime();
                Ok(Term::Rho(self.bracket_objs(1)?.pop().unwrap(), inv))
            }
            "sym" => {
                let inv = self.prime();
                let mut os = self.bracket_objs(2)?;
                let b = os.pop().unwrap();
                let a = os.pop().unwrap();
                Ok(Term::Sym(a, b, inv))
            }
            "twist" => {
                let inv = self.prime();
                Ok(Term::Twist(self.bracket_objs(1)?.pop().unwrap(), inv))
            }
            "eta" => Ok(Term::Eta(self.bracket_objs(1)?.pop().unwrap())),
            "eps" => Ok(Term::Eps(self.bracket_objs(1)?.pop().unwrap())),
            "etaL" => Ok(Term::EtaL(self.bracket_objs(1)?.pop().unwrap())),
            "epsL" => Ok(Term::EpsL(self.bracket_objs(1)?.pop().unwrap())),
            "piv" => {
                let inv = self.prime();
                Ok(Term::Piv(self.bracket_objs(1)?.pop().unwrap(), inv))
            }
            "copy" => Ok(Term::Copy(self.bracket_objs(1)?.pop().unwrap())),
            "erase" => Ok(Term::Erase(self.bracket_objs(1)?.pop().unwrap())),
            "merge" => Ok(Term::Merge(self.bracket_objs(1)?.pop().unwrap())),
            "init" => Ok(Term::Init(self.bracket_objs(1)?.pop().unwrap())),
            "trR" | "trL" => {
                self.expect(Tok::LBrace, "`{`")?;
                let x = self.parse_obj()?;
                self.expect(Tok::RBrace, "`}`")?;
                self.expect(Tok::LParen, "`(`")?;
                let body = self.parse_seq()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(if name == "trR" {
                    Term::tr_r(x, body)
                } else {
                    Term::tr_l(x, body)
                })
            }
            "dg" | "mate" => {
                self.expect(Tok::LParen, "`(`")?;
                let body = self.parse_seq()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(if name == "dg" {
                    Term::dagger(body)
                } else {
                    Term::mate(body)
                })
            }
            "pair" | "copair" => {
                self.expect(Tok::LParen, "`(`")?;
                let f = self.parse_seq()?;
                self.expect(Tok::Comma, "`,`")?;
                let g = self.parse_seq()?;
                self.expect(Tok::RParen, "`)`")?;
                self.desugar_tupling(name, f, g, sp)
            }
            "proj1" | "proj2" | "inj1" | "inj2" => {
                let mut os = self.bracket_objs(2)?;
                let b = os.pop().unwrap();
                let a = os.pop().unwrap();
                Ok(match name {
                    // proj1 : A*B -> A  drops the top factor
                    "proj1" => Term::compose(
                        Term::Rho(a.clone(), false),
                        Term::tensor(Term::Id(a), Term::Erase(b)),
                    ),
                    // proj2 : A*B -> B  drops the bottom factor
                    "proj2" => Term::compose(
                        Term::Lambda(b.clone(), false),
                        Term::tensor(Term::Erase(a), Term::Id(b)),
                    ),
                    // inj1 : A -> A*B  inserts an initial top factor
                    "inj1" => Term::compose(
                        Term::tensor(Term::Id(a.clone()), Term::Init(b)),
                        Term::Rho(a, true),
                    ),
                    // inj2 : B -> A*B  inserts an initial bottom factor
                    _ => Term::compose(
                        Term::tensor(Term::Init(a), Term::Id(b.clone())),
                        Term::Lambda(b, true),
                    ),
                })
            }
            "I" => Err(self.err(sp, "`I` is an object, not a term")),
            other => {
                if self.sig.morphism(other).is_some() {
                    Ok(Term::gen(other))
                } else {
                    Err(TermError::UnknownGenerator(other.to_string()).into())
                }
            }
        }
    }

    fn desugar_tupling(
        &self,
        which: &str,
        f: Term,
        g: Term,
        sp: SourceSpan,
    ) -> Result<Term, ParseError> {
        let tf = infer_type(&f, self.sig)?;
        let tg = infer_type(&g, self.sig)?;
        if which == "pair" {
            if tf.dom != tg.dom {
                return Err(self.err(
                    sp,
                    format!("pair components need equal domains, got {} and {}", tf.dom, tg.dom),
                ));
            }
            Ok(Term::compose(Term::tensor(f, g), Term::Copy(tf.dom)))
        } else {
            if tf.cod != tg.cod {
                return Err(self.err(
                    sp,
                    format!(
                        "copair components need equal codomains, got {} and {}",
                        tf.cod, tg.cod
                    ),
                ));
            }
            Ok(Term::compose(Term::Merge(tf.cod), Term::tensor(f, g)))
        }
    }
}

/// Parse a term over the given signature.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { lx: Lexer { src: text, toks }, pos: 0, sig };
    let t = p.parse_seq()?;
    if let Some((_, sp)) = p.peek() {
        return Err(p.err(*sp, "trailing input after term"));
    }
    Ok(t)
}

/// Parse an object term (used by the CLI and binding files).
pub fn parse_object(text: &str) -> Result<ObjectTerm, ParseError> {
    let toks = lex(text)?;
    let sig = Signature::new(SignatureKind::Autonomous);
    let mut p = Parser { lx: Lexer { src: text, toks }, pos: 0, sig: &sig };
    let o = p.parse_obj()?;
    if let Some((_, sp)) = p.peek() {
        return Err(p.err(*sp, "trailing input after object term"));
    }
    Ok(o)
}

/// Pretty-print a term with minimal parentheses; `parse_term` recovers the
/// exact AST, and equal ASTs print byte-identically.
pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    print_at(t, Prec::Seq, &mut out);
    out
}

#[derive(PartialOrd, Ord, PartialEq, Eq, Clone, Copy)]
enum Prec {
    Seq,
    Tensor,
    Atom,
}

fn level(t: &Term) -> Prec {
    match t {
        Term::Compose(..) => Prec::Seq,
        Term::Tensor(..) => Prec::Tensor,
        _ => Prec::Atom,
    }
}

fn print_at(t: &Term, min: Prec, out: &mut String) {
    let parens = level(t) < min;
    if parens {
        out.push('(');
    }
    match t {
        Term::Gen(name) => out.push_str(name),
        Term::Id(o) => {
            out.push_str(&format!("id[{o}]"));
        }
        Term::Compose(after, before) => {
            print_at(before, Prec::Seq, out);
            out.push_str(" ; ");
            print_at(after, Prec::Tensor, out);
        }
        Term::Tensor(bottom, top) => {
            print_at(bottom, Prec::Tensor, out);
            out.push_str(" * ");
            print_at(top, Prec::Atom, out);
        }
        Term::Alpha(a, b, c, inv) => {
            out.push_str(&format!("alpha{}[{a}, {b}, {c}]", if *inv { "'" } else { "" }));
        }
        Term::Lambda(a, inv) => out.push_str(&format!("lam{}[{a}]", if *inv { "'" } else { "" })),
        Term::Rho(a, inv) => out.push_str(&format!("rho{}[{a}]", if *inv { "'" } else { "" })),
        Term::Sym(a, b, inv) => {
            out.push_str(&format!("sym{}[{a}, {b}]", if *inv { "'" } else { "" }));
        }
        Term::Twist(a, inv) => out.push_str(&format!("twist{}[{a}]", if *inv { "'" } else { "" })),
        Term::Eta(a) => out.push_str(&format!("eta[{a}]")),
        Term::Eps(a) => out.push_str(&format!("eps[{a}]")),
        Term::EtaL(a) => out.push_str(&format!("etaL[{a}]")),
        Term::EpsL(a) => out.push_str(&format!("epsL[{a}]")),
        Term::Piv(a, inv) => out.push_str(&format!("piv{}[{a}]", if *inv { "'" } else { "" })),
        Term::Copy(a) => out.push_str(&format!("copy[{a}]")),
        Term::Erase(a) => out.push_str(&format!("erase[{a}]")),
        Term::Merge(a) => out.push_str(&format!("merge[{a}]")),
        Term::Init(a) => out.push_str(&format!("init[{a}]")),
        Term::TrR(x, body) => {
            out.push_str(&format!("trR{{{x}}}("));
            print_at(body, Prec::Seq, out);
            out.push(')');
        }
        Term::TrL(x, body) => {
            out.push_str(&format!("trL{{{x}}}("));
            print_at(body, Prec::Seq, out);
            out.push(')');
        }
        Term::Dagger(body) => {
            out.push_str("dg(");
            print_at(body, Prec::Seq, out);
            out.push(')');
        }
        Term::Mate(body) => {
            out.push_str("mate(");
            print_at(body, Prec::Seq, out);
            out.push(')');
        }
    }
    if parens {
        out.push(')');
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SigFileError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Parse the line-oriented signature file format.
pub fn parse_signature(text: &str) -> Result<Signature, SigFileError> {
    let mut objects = Vec::new();
    let mut morphisms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("object ") {
            for name in rest.split(',') {
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(SigFileError::Malformed {
                        line: line_no,
                        message: format!("bad object name `{name}`"),
                    });
                }
                objects.push(name.to_string());
            }
        } else if let Some(rest) = line.strip_prefix("morphism ") {
            let (name, ty) = rest.split_once(':').ok_or_else(|| SigFileError::Malformed {
                line: line_no,
                message: "expected `morphism name : dom -> cod`".into(),
            })?;
            let (dom, cod) = ty.split_once("->").ok_or_else(|| SigFileError::Malformed {
                line: line_no,
                message: "expected `->` between domain and codomain".into(),
            })?;
            let parse = |s: &str| {
                parse_object(s.trim()).map_err(|e| SigFileError::Malformed {
                    line: line_no,
                    message: e.to_string(),
                })
            };
            morphisms.push((name.trim().to_string(), parse(dom)?, parse(cod)?));
        } else {
            return Err(SigFileError::Malformed {
                line: line_no,
                message: "expected `object ...` or `morphism ...`".into(),
            });
        }
    }

    let any_dual = morphisms
        .iter()
        .any(|(_, d, c)| d.contains_dual() || c.contains_dual());
    let all_atomic = morphisms
        .iter()
        .all(|(_, d, c)| d.is_atomic_var() && c.is_atomic_var());
    let kind = if any_dual {
        SignatureKind::Autonomous
    } else if all_atomic {
        SignatureKind::Simple
    } else {
        SignatureKind::Monoidal
    };

    let mut sig = Signature::new(kind);
    for o in objects {
        sig.add_object(o);
    }
    for (n, d, c) in morphisms {
        sig.add_morphism(n, d, c);
    }
    Ok(sig)
}

/// Render a signature in the file format.
pub fn print_signature(sig: &Signature) -> String {
    let mut out = String::new();
    if !sig.objects.is_empty() {
        let names: Vec<&str> = sig.objects.iter().map(|s| s.as_str()).collect();
        out.push_str(&format!("object {}\n", names.join(", ")));
    }
    for (name, (dom, cod)) in &sig.morphisms {
        out.push_str(&format!("morphism {name} : {dom} -> {cod}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ObjectTerm as O;

    fn sig() -> Signature {
        parse_signature(
            "# three boxes\n\
             object A, B, C, D, E, X\n\
             morphism M : A -> B\n\
             morphism N : B * C -> D\n\
             morphism P : D -> E\n\
             morphism f : A * X -> B * X\n\
             morphism k : A -> A\n",
        )
        .unwrap()
    }

    #[test]
    fn parses_the_three_box_composite() {
        let s = sig();
        let t = parse_term("(M * id[C]) ; N ; P", &s).unwrap();
        let expect = Term::compose(
            Term::gen("P"),
            Term::compose(
                Term::gen("N"),
                Term::tensor(Term::gen("M"), Term::Id(O::var("C"))),
            ),
        );
        assert_eq!(t, expect);
    }

    #[test]
    fn parses_trace_braces() {
        let s = sig();
        let t = parse_term("trR{X}(f)", &s).unwrap();
        assert_eq!(t, Term::tr_r(O::var("X"), Term::gen("f")));
    }

    #[test]
    fn rejects_dangling_semicolons() {
        let s = sig();
        assert!(matches!(
            parse_term("f ; ;", &s),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn unknown_generator() {
        let s = sig();
        assert!(matches!(
            parse_term("nosuch", &s),
            Err(ParseError::Term(TermError::UnknownGenerator(_)))
        ));
    }

    #[test]
    fn print_examples() {
        let s = sig();
        let t = parse_term("M ; dg(N * P)", &s).unwrap();
        assert_eq!(print_term(&t), "M ; dg(N * P)");
        assert_eq!(
            print_term(&Term::compose(Term::gen("P"), Term::gen("M"))),
            "M ; P"
        );
        assert_eq!(
            print_term(&Term::tensor(Term::gen("M"), Term::gen("P"))),
            "M * P"
        );
        assert_eq!(print_term(&Term::dagger(Term::gen("M"))), "dg(M)");
    }

    #[test]
    fn roundtrip_on_constants() {
        let s = sig();
        for text in [
            "id[A * B^r]",
            "alpha[A, B, C] ; alpha'[A, B, C]",
            "sym'[A, B * C]",
            "twist[A] * twist'[B]",
            "eta[A] ; eps[A^r] * id[A] ; lam[A]",
            "etaL[A] ; epsL[A^l]  * id[A] ; lam[A]",
            "piv[A] ; piv'[A]",
            "copy[A] ; erase[A] * id[A] ; lam[A]",
            "merge[A] ; k",
            "init[A]",
            "trL{X}(sym[X, X])",
            "mate(M ; dg(M))",
            "(M ; (M ; k) * P * N) * k",
        ] {
            let t = parse_term(text, &s).unwrap();
            let printed = print_term(&t);
            let t2 = parse_term(&printed, &s).unwrap();
            assert_eq!(t, t2, "round trip through `{printed}`");
            assert_eq!(printed, print_term(&t2), "printer stability for `{printed}`");
        }
    }

    #[test]
    fn pair_desugars_through_copy() {
        let mut s = Signature::with_objects(SignatureKind::Monoidal, &["A", "B", "C"]);
        s.add_morphism("f", O::var("C"), O::var("A"));
        s.add_morphism("g", O::var("C"), O::var("B"));
        let t = parse_term("pair(f, g)", &s).unwrap();
        assert_eq!(
            t,
            Term::compose(
                Term::tensor(Term::gen("f"), Term::gen("g")),
                Term::Copy(O::var("C")),
            )
        );
        let p = parse_term("proj1[A, B]", &s).unwrap();
        assert_eq!(
            p,
            Term::compose(
                Term::Rho(O::var("A"), false),
                Term::tensor(Term::Id(O::var("A")), Term::Erase(O::var("B"))),
            )
        );
    }

    #[test]
    fn signature_kind_inference() {
        let simple = parse_signature("object A\nmorphism f : A -> A\n").unwrap();
        assert_eq!(simple.kind, SignatureKind::Simple);
        let monoidal = parse_signature("object A\nmorphism f : A * A -> I\n").unwrap();
        assert_eq!(monoidal.kind, SignatureKind::Monoidal);
        let aut = parse_signature("object A\nmorphism u : I -> A^r * A\n").unwrap();
        assert_eq!(aut.kind, SignatureKind::Autonomous);
    }

    #[test]
    fn signature_print_parse_roundtrip() {
        let s = sig();
        let printed = print_signature(&s);
        let s2 = parse_signature(&printed).unwrap();
        assert_eq!(s, s2);
    }
}
