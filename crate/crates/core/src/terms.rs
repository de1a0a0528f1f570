//! ω-terms: variables, concatenation and the powers `t^(ω-1)`, `t^ω`,
//! `t^(ω+1)`. Parsing, printing, evaluation in finite semigroups, content
//! and the left/right factorizations at the last new letter.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// The shift `k` in `t^(ω+k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shift {
    Minus,
    Zero,
    Plus,
}

impl Shift {
    pub fn value(self) -> i64 {
        match self {
            Shift::Minus => -1,
            Shift::Zero => 0,
            Shift::Plus => 1,
        }
    }

    fn negate(self) -> Shift {
        match self {
            Shift::Minus => Shift::Plus,
            Shift::Zero => Shift::Zero,
            Shift::Plus => Shift::Minus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaTerm {
    Var(usize),
    /// At least two factors, none of them a `Concat`.
    Concat(Vec<OmegaTerm>),
    /// The base is never itself a `Pow`.
    Pow(Box<OmegaTerm>, Shift),
}

/// Surface name of letter `i`: `x, y, z, t` for the first four, then `x5`,
/// `x6`, ...
pub fn letter_name(i: usize) -> String {
    match i {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        3 => "t".into(),
        _ => format!("x{}", i + 1),
    }
}

// bare letters other than x, y, z, t, in the order they get indices 4, 5, ...
const EXTRA_LETTERS: &str = "abcdefghijklmnopqrsuvw";

impl OmegaTerm {
    pub fn var(i: usize) -> Self {
        OmegaTerm::Var(i)
    }

    /// Flattening concatenation; a single factor is returned unchanged.
    pub fn concat(parts: Vec<OmegaTerm>) -> Self {
        assert!(!parts.is_empty(), "empty concatenation");
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match p {
                OmegaTerm::Concat(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            OmegaTerm::Concat(flat)
        }
    }

    /// `t^(ω+k)`, collapsing nested powers: the outer power acts inside the
    /// maximal subgroup containing the inner one.
    pub fn pow(t: OmegaTerm, k: Shift) -> Self {
        match t {
            OmegaTerm::Pow(base, a) => {
                let shift = match k {
                    Shift::Zero => Shift::Zero,
                    Shift::Plus => a,
                    Shift::Minus => a.negate(),
                };
                OmegaTerm::Pow(base, shift)
            }
            other => OmegaTerm::Pow(Box::new(other), k),
        }
    }

    pub fn omega(t: OmegaTerm) -> Self {
        Self::pow(t, Shift::Zero)
    }

    pub fn content(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_content(&mut out);
        out
    }

    fn collect_content(&self, out: &mut BTreeSet<usize>) {
        match self {
            OmegaTerm::Var(v) => {
                out.insert(*v);
            }
            OmegaTerm::Concat(parts) => parts.iter().for_each(|p| p.collect_content(out)),
            OmegaTerm::Pow(b, _) => b.collect_content(out),
        }
    }

    /// Leftmost variable leaf.
    pub fn first_letter(&self) -> usize {
        match self {
            OmegaTerm::Var(v) => *v,
            OmegaTerm::Concat(parts) => parts[0].first_letter(),
            OmegaTerm::Pow(b, _) => b.first_letter(),
        }
    }

    /// Rightmost variable leaf.
    pub fn last_letter(&self) -> usize {
        match self {
            OmegaTerm::Var(v) => *v,
            OmegaTerm::Concat(parts) => parts[parts.len() - 1].last_letter(),
            OmegaTerm::Pow(b, _) => b.last_letter(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            OmegaTerm::Var(_) => 0,
            OmegaTerm::Concat(parts) => 1 + parts.iter().map(|p| p.depth()).max().unwrap_or(0),
            OmegaTerm::Pow(b, _) => 1 + b.depth(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            OmegaTerm::Var(_) => 1,
            OmegaTerm::Concat(parts) => parts.iter().map(|p| p.leaf_count()).sum(),
            OmegaTerm::Pow(b, _) => b.leaf_count(),
        }
    }

    /// Renames letters through `f`.
    pub fn rename(&self, f: &impl Fn(usize) -> usize) -> OmegaTerm {
        match self {
            OmegaTerm::Var(v) => OmegaTerm::Var(f(*v)),
            OmegaTerm::Concat(parts) => {
                OmegaTerm::concat(parts.iter().map(|p| p.rename(f)).collect())
            }
            OmegaTerm::Pow(b, k) => OmegaTerm::pow(b.rename(f), *k),
        }
    }

    /// The mirror image: factors in reverse order.
    pub fn reversed(&self) -> OmegaTerm {
        match self {
            OmegaTerm::Var(v) => OmegaTerm::Var(*v),
            OmegaTerm::Concat(parts) => {
                OmegaTerm::concat(parts.iter().rev().map(|p| p.reversed()).collect())
            }
            OmegaTerm::Pow(b, k) => OmegaTerm::pow(b.reversed(), *k),
        }
    }

    /// Evaluates under `assignment[letter] = element`.
    pub fn eval(&self, s: &FiniteSemigroup, assignment: &[usize]) -> Result<usize> {
        match self {
            OmegaTerm::Var(v) => assignment
                .get(*v)
                .copied()
                .ok_or_else(|| Error::UnboundVariable {
                    letter: letter_name(*v),
                }),
            OmegaTerm::Concat(parts) => {
                let mut acc = parts[0].eval(s, assignment)?;
                for p in &parts[1..] {
                    acc = s.mul(acc, p.eval(s, assignment)?);
                }
                Ok(acc)
            }
            OmegaTerm::Pow(b, k) => Ok(s.omega_shift(b.eval(s, assignment)?, k.value())),
        }
    }

    pub fn compile(&self) -> CompiledTerm {
        let mut ops = Vec::new();
        self.emit(&mut ops);
        CompiledTerm {
            ops,
            arity: self.content().last().map_or(0, |m| m + 1),
        }
    }

    fn emit(&self, ops: &mut Vec<Op>) {
        match self {
            OmegaTerm::Var(v) => ops.push(Op::Var(*v)),
            OmegaTerm::Concat(parts) => {
                parts[0].emit(ops);
                for p in &parts[1..] {
                    p.emit(ops);
                    ops.push(Op::Mul);
                }
            }
            OmegaTerm::Pow(b, k) => {
                b.emit(ops);
                ops.push(Op::Pow(*k));
            }
        }
    }

    /// `u = u' x u''` where `x` is the last letter of `c(u)` to occur for the
    /// first time, reading left to right.
    pub fn zero_split(&self) -> Split {
        let total = self.content().len();
        let mut seen = BTreeSet::new();
        let (pre, marker, suf) = split_forward(self, &mut seen, total).expect("terms are non-empty");
        Split::new(pre, marker, suf)
    }

    /// `u = u'' x u'` where `x` is the last letter of `c(u)` to occur for the
    /// first time, reading right to left.
    pub fn one_split(&self) -> Split {
        let total = self.content().len();
        let mut seen = BTreeSet::new();
        let (pre, marker, suf) = split_backward(self, &mut seen, total).expect("terms are non-empty");
        Split::new(pre, marker, suf)
    }

    /// `0(u)` (`None` for the empty word) and the marker letter.
    pub fn zero_fn(&self) -> (Option<OmegaTerm>, usize) {
        let s = self.zero_split();
        (s.prefix, s.marker)
    }

    /// `1(u)` (`None` for the empty word) and the marker letter.
    pub fn one_fn(&self) -> (Option<OmegaTerm>, usize) {
        let s = self.one_split();
        (s.suffix, s.marker)
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaTerm::Concat(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

/// Remainder of `b^(ω+k)` after splitting off one copy of `b`.
fn pow_remainder(b: &OmegaTerm, k: Shift) -> Vec<OmegaTerm> {
    let p = |s| OmegaTerm::Pow(Box::new(b.clone()), s);
    match k {
        Shift::Plus => vec![p(Shift::Zero)],
        Shift::Zero => vec![p(Shift::Minus)],
        Shift::Minus => vec![p(Shift::Minus), p(Shift::Minus)],
    }
}

type RawSplit = (Vec<OmegaTerm>, usize, Vec<OmegaTerm>);

fn split_forward(t: &OmegaTerm, seen: &mut BTreeSet<usize>, total: usize) -> Option<RawSplit> {
    match t {
        OmegaTerm::Var(v) => {
            if seen.insert(*v) && seen.len() == total {
                Some((Vec::new(), *v, Vec::new()))
            } else {
                None
            }
        }
        OmegaTerm::Concat(parts) => {
            for (i, p) in parts.iter().enumerate() {
                if let Some((pre, m, suf)) = split_forward(p, seen, total) {
                    let mut prefix = parts[..i].to_vec();
                    prefix.extend(pre);
                    let mut suffix = suf;
                    suffix.extend_from_slice(&parts[i + 1..]);
                    return Some((prefix, m, suffix));
                }
            }
            None
        }
        OmegaTerm::Pow(b, k) => split_forward(b, seen, total).map(|(pre, m, mut suf)| {
            suf.extend(pow_remainder(b, *k));
            (pre, m, suf)
        }),
    }
}

fn split_backward(t: &OmegaTerm, seen: &mut BTreeSet<usize>, total: usize) -> Option<RawSplit> {
    match t {
        OmegaTerm::Var(v) => {
            if seen.insert(*v) && seen.len() == total {
                Some((Vec::new(), *v, Vec::new()))
            } else {
                None
            }
        }
        OmegaTerm::Concat(parts) => {
            for (i, p) in parts.iter().enumerate().rev() {
                if let Some((pre, m, suf)) = split_backward(p, seen, total) {
                    let mut prefix = parts[..i].to_vec();
                    prefix.extend(pre);
                    let mut suffix = suf;
                    suffix.extend_from_slice(&parts[i + 1..]);
                    return Some((prefix, m, suffix));
                }
            }
            None
        }
        OmegaTerm::Pow(b, k) => split_backward(b, seen, total).map(|(pre, m, suf)| {
            let mut prefix = pow_remainder(b, *k);
            prefix.extend(pre);
            (prefix, m, suf)
        }),
    }
}

/// A factorization `prefix · marker · suffix`; empty sides are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub prefix: Option<OmegaTerm>,
    pub marker: usize,
    pub suffix: Option<OmegaTerm>,
}

impl Split {
    fn new(prefix: Vec<OmegaTerm>, marker: usize, suffix: Vec<OmegaTerm>) -> Self {
        let wrap = |v: Vec<OmegaTerm>| (!v.is_empty()).then(|| OmegaTerm::concat(v));
        Split {
            prefix: wrap(prefix),
            marker,
            suffix: wrap(suffix),
        }
    }

    /// The term `prefix · marker · suffix`.
    pub fn rebuild(&self) -> OmegaTerm {
        let mut parts = Vec::new();
        parts.extend(self.prefix.clone());
        parts.push(OmegaTerm::Var(self.marker));
        parts.extend(self.suffix.clone());
        OmegaTerm::concat(parts)
    }
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaTerm::Var(v) => f.write_str(&letter_name(*v)),
            OmegaTerm::Concat(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    p.fmt_factor(f)?;
                }
                Ok(())
            }
            OmegaTerm::Pow(b, k) => {
                b.fmt_factor(f)?;
                match k {
                    Shift::Minus => f.write_str("^(w-1)"),
                    Shift::Zero => f.write_str("^w"),
                    Shift::Plus => f.write_str("^(w+1)"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Var(usize),
    Mul,
    Pow(Shift),
}

/// A term flattened to a postfix program for repeated evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledTerm {
    ops: Vec<Op>,
    arity: usize,
}

impl CompiledTerm {
    /// One more than the largest letter used.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Evaluates with a caller-provided stack; `assignment` must cover
    /// every letter.
    pub fn eval_with(&self, s: &FiniteSemigroup, assignment: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Var(v) => stack.push(assignment[v]),
                Op::Mul => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(s.mul(a, b));
                }
                Op::Pow(k) => {
                    let a = stack.pop().unwrap();
                    stack.push(s.omega_shift(a, k.value()));
                }
            }
        }
        stack[0]
    }

    pub fn eval(&self, s: &FiniteSemigroup, assignment: &[usize]) -> usize {
        self.eval_with(s, assignment, &mut Vec::with_capacity(8))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Equality,
    LessEq,
}

/// `lhs = rhs` or `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: OmegaTerm,
    pub rhs: OmegaTerm,
    pub kind: RelationKind,
}

impl Relation {
    pub fn equality(lhs: OmegaTerm, rhs: OmegaTerm) -> Self {
        Relation {
            lhs,
            rhs,
            kind: RelationKind::Equality,
        }
    }

    pub fn less_eq(lhs: OmegaTerm, rhs: OmegaTerm) -> Self {
        Relation {
            lhs,
            rhs,
            kind: RelationKind::LessEq,
        }
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        let mut v = self.lhs.content();
        v.extend(self.rhs.content());
        v
    }

    /// `v <= u` for `u <= v`; equalities swap sides.
    pub fn reversed(&self) -> Relation {
        Relation {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            kind: self.kind,
        }
    }

    pub fn is_inequality(&self) -> bool {
        self.kind == RelationKind::LessEq
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            RelationKind::Equality => "=",
            RelationKind::LessEq => "<=",
        };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

impl std::str::FromStr for OmegaTerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_term(s)
    }
}

impl std::str::FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_relation(s)
    }
}

pub fn parse_term(text: &str) -> Result<OmegaTerm> {
    let mut p = Parser::new(text);
    let t = p.term()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected {c:?}")));
    }
    Ok(t)
}

pub fn parse_relation(text: &str) -> Result<Relation> {
    let mut p = Parser::new(text);
    let lhs = p.term()?;
    p.skip_ws();
    let kind = if p.eat_str("<=") {
        RelationKind::LessEq
    } else if p.eat_str("=") {
        RelationKind::Equality
    } else {
        return Err(p.error("expected '=' or '<='".into()));
    };
    let rhs = p.term()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected {c:?}")));
    }
    Ok(Relation { lhs, rhs, kind })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            position: self.pos,
            message,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn term(&mut self) -> Result<OmegaTerm> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_lowercase() || c == '(' => factors.extend(self.factor()?),
                _ => break,
            }
        }
        if factors.is_empty() {
            return Err(self.error("expected a letter or '('".into()));
        }
        Ok(OmegaTerm::concat(factors))
    }

    /// One factor; integer powers come back already expanded.
    fn factor(&mut self) -> Result<Vec<OmegaTerm>> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(vec![atom]);
        }
        self.bump();
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('w') => {
                self.bump();
                Ok(vec![OmegaTerm::pow(atom, Shift::Zero)])
            }
            Some('(') => {
                self.bump();
                self.skip_ws();
                if self.bump() != Some('w') {
                    self.pos = start;
                    return Err(self.error("expected w, (w-1) or (w+1)".into()));
                }
                self.skip_ws();
                let k = match self.bump() {
                    Some('-') => Shift::Minus,
                    Some('+') => Shift::Plus,
                    _ => {
                        self.pos = start;
                        return Err(self.error("expected w, (w-1) or (w+1)".into()));
                    }
                };
                self.skip_ws();
                if self.bump() != Some('1') {
                    self.pos = start;
                    return Err(self.error("only shifts by 1 are supported".into()));
                }
                self.expect(')')?;
                Ok(vec![OmegaTerm::pow(atom, k)])
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: usize = digits.parse().map_err(|_| {
                    Error::Syntax {
                        position: start,
                        message: "exponent too large".into(),
                    }
                })?;
                if n == 0 {
                    return Err(Error::Syntax {
                        position: start,
                        message: "exponent must be positive".into(),
                    });
                }
                Ok(vec![atom; n])
            }
            _ => Err(self.error("expected an exponent".into())),
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<OmegaTerm> {
        self.skip_ws();
        let start = self.pos;
        match self.bump() {
            Some('(') => {
                let t = self.term()?;
                self.expect(')')?;
                Ok(t)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let digits = self.digits();
                if digits.is_empty() {
                    let index = match c {
                        'x' => 0,
                        'y' => 1,
                        'z' => 2,
                        't' => 3,
                        _ => 4 + EXTRA_LETTERS.find(c).expect("all other lowercase letters are listed"),
                    };
                    return Ok(OmegaTerm::Var(index));
                }
                if c != 'x' {
                    self.pos = start;
                    return Err(self.error(format!("indexed letters are written x1, x2, ...; got {c}{digits}")));
                }
                match digits.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(OmegaTerm::Var(i - 1)),
                    _ => {
                        self.pos = start;
                        Err(self.error(format!("invalid letter x{digits}")))
                    }
                }
            }
            _ => {
                self.pos = start;
                Err(self.error("expected a letter or '('".into()))
            }
        }
    }
}

/// A random term over letters `0..letters` with nesting depth at most
/// `depth`.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, letters: usize, depth: usize) -> OmegaTerm {
    if depth == 0 || rng.gen_bool(0.3) {
        return OmegaTerm::Var(rng.gen_range(0..letters));
    }
    if rng.gen_bool(0.35) {
        let k = match rng.gen_range(0..3) {
            0 => Shift::Minus,
            1 => Shift::Zero,
            _ => Shift::Plus,
        };
        return OmegaTerm::pow(random_term(rng, letters, depth - 1), k);
    }
    let n = rng.gen_range(2..=3);
    OmegaTerm::concat((0..n).map(|_| random_term(rng, letters, depth - 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> OmegaTerm {
        parse_term(s).unwrap()
    }

    fn cyclic(n: usize) -> FiniteSemigroup {
        let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteSemigroup::new(rows, None).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = parse_relation("x^w y^w x^w <= x^w").unwrap();
        assert_eq!(r.kind, RelationKind::LessEq);
        let xw = OmegaTerm::pow(OmegaTerm::Var(0), Shift::Zero);
        let yw = OmegaTerm::pow(OmegaTerm::Var(1), Shift::Zero);
        assert_eq!(r.lhs, OmegaTerm::Concat(vec![xw.clone(), yw, xw.clone()]));
        assert_eq!(r.rhs, xw);
        let cr = parse_relation("x^(w+1) = x").unwrap();
        assert_eq!(cr.kind, RelationKind::Equality);
        assert_eq!(cr.lhs, OmegaTerm::pow(OmegaTerm::Var(0), Shift::Plus));
        let nb = parse_relation("x y z x = x z y x").unwrap();
        assert_eq!(nb.lhs.leaf_count(), 4);
        assert_eq!(nb.to_string(), "x y z x = x z y x");
    }

    #[test]
    fn letters() {
        assert_eq!(t("x1"), t("x"));
        assert_eq!(t("x4"), t("t"));
        assert_eq!(t("x5"), OmegaTerm::Var(4));
        assert_eq!(t("a"), OmegaTerm::Var(4));
        assert_eq!(t("w"), OmegaTerm::Var(25));
        assert_eq!(t("xy"), t("x y"));
        assert_eq!(t("x12").to_string(), "x12");
        assert!(matches!(parse_term("a1"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_term("x0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn integer_powers_expand() {
        assert_eq!(t("x^2"), t("x x"));
        assert_eq!(t("(x y)^2 z"), t("x y x y z"));
        assert!(parse_term("x^0").is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_term("x ^ q"),
            Err(Error::Syntax {
                position: 4,
                message: "expected an exponent".into()
            })
        );
        assert!(matches!(parse_term("(x y"), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(parse_relation("x y"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_term("x^(w+2)"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_term(""), Err(Error::Syntax { position: 0, .. })));
    }

    #[test]
    fn nested_powers_normalize() {
        assert_eq!(t("(x^w)^w"), t("x^w"));
        assert_eq!(t("(x^(w-1))^(w-1)"), t("x^(w+1)"));
        assert_eq!(t("(x^(w+1))^(w+1)"), t("x^(w+1)"));
        assert_eq!(t("((x y)^w)^(w+1)"), t("(x y)^w"));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "x",
            "x y z",
            "(x y)^w z",
            "x^(w-1) (y x^w)^(w+1) t",
            "x5 x6^w",
        ] {
            let term = t(s);
            assert_eq!(term.to_string(), s);
            assert_eq!(t(&term.to_string()), term);
        }
    }

    #[test]
    fn eval_examples() {
        let c2 = cyclic(2);
        assert_eq!(t("x^w").eval(&c2, &[1]).unwrap(), 0);
        let l = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(t("x y").eval(&l, &[0, 1]).unwrap(), 0);
        // G^T over C2 with T = 2
        let gt = FiniteSemigroup::new(vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]], None)
            .unwrap();
        assert_eq!(t("x^w y^w x^w").eval(&gt, &[0, 2]).unwrap(), 2);
        assert_eq!(
            t("x z").eval(&gt, &[0, 1]),
            Err(Error::UnboundVariable { letter: "z".into() })
        );
        let c = t("x^(w-1) y x^w").compile();
        assert_eq!(c.arity(), 2);
        let c3 = cyclic(3);
        assert_eq!(c.eval(&c3, &[1, 1]), 0);
    }

    #[test]
    fn content_examples() {
        assert_eq!(t("x y x z").content(), BTreeSet::from([0, 1, 2]));
        assert_eq!(t("(x y)^w z").content(), BTreeSet::from([0, 1, 2]));
        assert_eq!(t("x^(w-1)").content(), BTreeSet::from([0]));
    }

    #[test]
    fn zero_and_one_examples() {
        assert_eq!(t("x y x z").zero_fn(), (Some(t("x y x")), 2));
        assert_eq!(t("(x y)^w z").zero_fn(), (Some(t("(x y)^w")), 2));
        assert_eq!(t("x").zero_fn(), (None, 0));
        assert_eq!(t("x y x z").one_fn(), (Some(t("x z")), 1));
        let s = t("(x y)^w").zero_split();
        assert_eq!(s.prefix, Some(t("x")));
        assert_eq!(s.marker, 1);
        assert_eq!(s.suffix, Some(t("(x y)^(w-1)")));
        let s = t("(x y)^(w-1)").one_split();
        assert_eq!(s.prefix, Some(t("(x y)^(w-1) (x y)^(w-1)")));
        assert_eq!(s.marker, 0);
        assert_eq!(s.suffix, Some(t("y")));
    }

    #[test]
    fn first_and_last() {
        let u = t("(x y)^w z x^(w-1)");
        assert_eq!(u.first_letter(), 0);
        assert_eq!(u.last_letter(), 0);
        assert_eq!(t("y (z x)^w").last_letter(), 0);
    }
}
