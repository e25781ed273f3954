//! Parsers for the textual current, set, ideal and module grammars.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := rational | [rational ['*']] factor ('*' factor)*
//! factor := 'pv[1/' mono ']' | 'res[1/' mono ']' | var ['^' int]
//!         | 'conj(' mono ')' | 'dz' i | 'dzb' i
//! mono   := '1' | var ['^' int] ('*' var ['^' int])*
//! ```
//!
//! Factors act from the left, so a term is evaluated right to left:
//! `res[1/z]*pv[1/z]` is `∂̄[1/z^2]` while `pv[1/z]*res[1/z]` is zero.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use rescalc_core::vars::var_index;
use rescalc_core::{
    mul_monomial, pv_mul, res_mul, Current, MonIdeal, MonModule, MonPrime, Monomial, OmegaSet, Piece, PolyCoeff,
    SetExpr, VarSet, MAX_EXPONENT,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> PResult<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
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
            Tok::Int(chars[start..i].iter().collect())
        } else if "+-*/^[](){},:~&|\\".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError { line, column, message: format!("unexpected character '{c}'") });
        };
        column += i - start;
        out.push(Token { tok, line: l0, column: c0 });
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

enum TermFactor {
    Pv(Monomial),
    Res(Monomial),
    Mono(Monomial),
    Form(Piece),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn new(src: &str, n: usize) -> PResult<Parser> {
        if n == 0 || n > rescalc_core::MAX_VARS {
            return Err(ParseError {
                line: 1,
                column: 1,
                message: format!("n must be between 1 and {}", rescalc_core::MAX_VARS),
            });
        }
        Ok(Parser { toks: lex(src)?, pos: 0, n })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here<T>(&self, message: impl Into<String>) -> PResult<T> {
        let t = &self.toks[self.pos];
        Err(ParseError { line: t.line, column: t.column, message: message.into() })
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.error_here(format!("expected '{c}'"))
        }
    }

    fn expect_end(&mut self) -> PResult<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.error_here("unexpected trailing input")
        }
    }

    fn big_int(&mut self) -> PResult<BigInt> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.next();
                Ok(s.parse().expect("digits"))
            }
            _ => self.error_here("expected an integer"),
        }
    }

    fn exponent(&mut self) -> PResult<u32> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let v: Option<u32> = s.parse().ok().filter(|&v| v <= MAX_EXPONENT);
                match v {
                    Some(v) => {
                        self.next();
                        Ok(v)
                    }
                    None => self.error_here(format!("exponent overflow: {s} exceeds {MAX_EXPONENT}")),
                }
            }
            _ => self.error_here("expected an exponent"),
        }
    }

    fn variable(&mut self) -> PResult<usize> {
        match self.peek().clone() {
            Tok::Ident(name) => match var_index(self.n, &name) {
                Some(i) => {
                    self.next();
                    Ok(i)
                }
                None => self.error_here(format!("unknown variable '{name}' for n = {}", self.n)),
            },
            _ => self.error_here("expected a variable"),
        }
    }

    /// Variable given as a 1-based index or a name.
    fn index_or_variable(&mut self) -> PResult<usize> {
        match self.peek().clone() {
            Tok::Int(s) => match s.parse::<usize>().ok().filter(|i| (1..=self.n).contains(i)) {
                Some(i) => {
                    self.next();
                    Ok(i - 1)
                }
                None => self.error_here(format!("variable index {s} out of range for n = {}", self.n)),
            },
            _ => self.variable(),
        }
    }

    fn var_power(&mut self) -> PResult<Monomial> {
        let i = self.variable()?;
        let k = if self.eat_sym('^') { self.exponent()? } else { 1 };
        Ok(Monomial::var_pow(self.n, i, k))
    }

    fn mono(&mut self) -> PResult<Monomial> {
        if let Tok::Int(s) = self.peek() {
            if s == "1" {
                self.next();
                return Ok(Monomial::one(self.n));
            }
            return self.error_here("expected a monomial");
        }
        let mut m = self.var_power()?;
        while self.is_sym('*') && matches!(self.peek_at(1), Tok::Ident(_)) {
            self.next();
            m = m.mul(&self.var_power()?);
        }
        Ok(m)
    }

    fn rational(&mut self) -> PResult<BigRational> {
        let num = self.big_int()?;
        if self.is_sym('/') {
            self.next();
            let den = self.big_int()?;
            if den == BigInt::from(0) {
                return self.error_here("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn inverse(&mut self) -> PResult<Monomial> {
        self.expect_sym('[')?;
        match self.peek() {
            Tok::Int(s) if s == "1" => {
                self.next();
            }
            _ => return self.error_here("expected '1/'"),
        }
        self.expect_sym('/')?;
        let m = self.mono()?;
        self.expect_sym(']')?;
        Ok(m)
    }

    fn form_index(&mut self, digits: &str) -> PResult<usize> {
        match digits.parse::<usize>().ok().filter(|i| (1..=self.n).contains(i)) {
            Some(i) => Ok(i - 1),
            None => self.error_here(format!("unknown variable index {digits} for n = {}", self.n)),
        }
    }

    fn factor(&mut self) -> PResult<TermFactor> {
        let Tok::Ident(name) = self.peek().clone() else {
            return self.error_here("expected a factor");
        };
        let n = self.n;
        match name.as_str() {
            "pv" => {
                self.next();
                Ok(TermFactor::Pv(self.inverse()?))
            }
            "res" => {
                self.next();
                Ok(TermFactor::Res(self.inverse()?))
            }
            "conj" => {
                self.next();
                self.expect_sym('(')?;
                let m = self.mono()?;
                self.expect_sym(')')?;
                Ok(TermFactor::Form(Piece { beta: m, ..Piece::one(n) }))
            }
            _ if name.starts_with("dzb") && name.len() > 3 && name[3..].bytes().all(|b| b.is_ascii_digit()) => {
                let i = self.form_index(&name[3..])?;
                self.next();
                Ok(TermFactor::Form(Piece { dzb: VarSet::singleton(i), ..Piece::one(n) }))
            }
            _ if name.starts_with("dz") && name.len() > 2 && name[2..].bytes().all(|b| b.is_ascii_digit()) => {
                let i = self.form_index(&name[2..])?;
                self.next();
                Ok(TermFactor::Form(Piece { dz: VarSet::singleton(i), ..Piece::one(n) }))
            }
            _ => Ok(TermFactor::Mono(self.var_power()?)),
        }
    }

    fn term(&mut self) -> PResult<Current> {
        let n = self.n;
        let mut scalar = BigRational::one();
        let mut factors = Vec::new();
        if matches!(self.peek(), Tok::Int(_)) {
            scalar = self.rational()?;
            if !self.eat_sym('*') && !matches!(self.peek(), Tok::Ident(_)) {
                return Ok(Current::one(n).scale(&scalar));
            }
        }
        factors.push(self.factor()?);
        while self.eat_sym('*') {
            factors.push(self.factor()?);
        }
        let mut t = Current::one(n);
        for f in factors.iter().rev() {
            t = match f {
                TermFactor::Pv(m) => pv_mul(m, &t),
                TermFactor::Res(m) => res_mul(m, &t),
                TermFactor::Mono(m) => mul_monomial(m, &t),
                TermFactor::Form(p) => t.wedge_left(&PolyCoeff::from_pieces(n, [(p.clone(), BigRational::one())])),
            }
            .expect("dimensions agree");
        }
        Ok(t.scale(&scalar))
    }

    fn current(&mut self) -> PResult<Current> {
        let mut acc = Current::zero(self.n);
        let mut negate = if self.eat_sym('-') {
            true
        } else {
            self.eat_sym('+');
            false
        };
        loop {
            let t = self.term()?;
            let t = if negate { t.neg() } else { t };
            acc = acc.add(&t).expect("dimensions agree");
            if self.eat_sym('+') {
                negate = false;
            } else if self.eat_sym('-') {
                negate = true;
            } else {
                break;
            }
        }
        self.expect_end()?;
        Ok(acc)
    }

    fn set_union(&mut self) -> PResult<SetExpr> {
        let mut e = self.set_inter()?;
        loop {
            if self.eat_sym('|') {
                e = SetExpr::union(e, self.set_inter()?);
            } else if self.eat_sym('\\') {
                e = SetExpr::difference(e, self.set_inter()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn set_inter(&mut self) -> PResult<SetExpr> {
        let mut e = self.set_unary()?;
        while self.eat_sym('&') {
            e = SetExpr::intersection(e, self.set_unary()?);
        }
        Ok(e)
    }

    fn set_unary(&mut self) -> PResult<SetExpr> {
        if self.eat_sym('~') {
            return Ok(SetExpr::complement(self.set_unary()?));
        }
        if self.eat_sym('(') {
            let e = self.set_union()?;
            self.expect_sym(')')?;
            return Ok(e);
        }
        let Tok::Ident(name) = self.peek().clone() else {
            return self.error_here("expected a set expression");
        };
        match name.as_str() {
            "empty" => {
                self.next();
                Ok(SetExpr::Empty)
            }
            "full" => {
                self.next();
                Ok(SetExpr::Full)
            }
            "V" => {
                self.next();
                self.expect_sym('(')?;
                let s = self.index_list(')')?;
                Ok(SetExpr::CoordVariety(s))
            }
            "H" => {
                self.next();
                self.expect_sym('(')?;
                let i = self.index_or_variable()?;
                self.expect_sym(')')?;
                Ok(SetExpr::Hyperplane(i))
            }
            "W" => {
                self.next();
                self.expect_sym('{')?;
                let s = self.index_list('}')?;
                Ok(SetExpr::Cell(s))
            }
            _ => self.error_here(format!("unknown set constructor '{name}'")),
        }
    }

    /// Comma separated variables or indices up to and including `close`.
    fn index_list(&mut self, close: char) -> PResult<VarSet> {
        let mut s = VarSet::EMPTY;
        if self.eat_sym(close) {
            return Ok(s);
        }
        loop {
            s = s.insert(self.index_or_variable()?);
            if self.eat_sym(close) {
                return Ok(s);
            }
            self.expect_sym(',')?;
        }
    }

    fn mono_list(&mut self) -> PResult<Vec<Monomial>> {
        let mut out = Vec::new();
        if *self.peek() == Tok::End {
            return Ok(out);
        }
        loop {
            out.push(self.mono()?);
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_end()?;
        Ok(out)
    }

    fn module_list(&mut self) -> PResult<Vec<(usize, Monomial)>> {
        let mut out = Vec::new();
        if *self.peek() == Tok::End {
            return Ok(out);
        }
        loop {
            let basis = match self.peek().clone() {
                Tok::Ident(s) if s.starts_with('e') && s.len() > 1 && s[1..].bytes().all(|b| b.is_ascii_digit()) => {
                    match s[1..].parse::<usize>().ok().filter(|&k| k >= 1) {
                        Some(k) => k - 1,
                        None => return self.error_here("basis index must be at least 1"),
                    }
                }
                _ => return self.error_here("expected a basis element 'e<i>'"),
            };
            self.next();
            self.expect_sym(':')?;
            out.push((basis, self.mono()?));
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_end()?;
        Ok(out)
    }
}

/// Parse a current in dimension `n`; the result is in normal form.
pub fn parse_current(src: &str, n: usize) -> PResult<Current> {
    Parser::new(src, n)?.current()
}

pub fn parse_set_expr(src: &str, n: usize) -> PResult<SetExpr> {
    let mut p = Parser::new(src, n)?;
    let e = p.set_union()?;
    p.expect_end()?;
    Ok(e)
}

pub fn parse_set(src: &str, n: usize) -> PResult<OmegaSet> {
    let e = parse_set_expr(src, n)?;
    OmegaSet::of(n, &e).map_err(|err| ParseError { line: 1, column: 1, message: err.to_string() })
}

/// An ordered list of monomials, e.g. `z^2, w`; `0` alone is the empty list.
pub fn parse_monomials(src: &str, n: usize) -> PResult<Vec<Monomial>> {
    if src.trim() == "0" {
        return Ok(Vec::new());
    }
    Parser::new(src, n)?.mono_list()
}

pub fn parse_ideal(src: &str, n: usize) -> PResult<MonIdeal> {
    let gens = parse_monomials(src, n)?;
    MonIdeal::new(n, gens).map_err(|err| ParseError { line: 1, column: 1, message: err.to_string() })
}

/// Module generators `e1: z^2, e2: w`; the rank is `rank` or the largest basis index used.
pub fn parse_module(src: &str, n: usize, rank: Option<usize>) -> PResult<MonModule> {
    let gens = Parser::new(src, n)?.module_list()?;
    let used = gens.iter().map(|(k, _)| k + 1).max().unwrap_or(1);
    let rank = rank.unwrap_or(used);
    MonModule::from_gens(n, rank, gens).map_err(|err| ParseError { line: 1, column: 1, message: err.to_string() })
}

/// A prime generated by variables, e.g. `z, w`.
pub fn parse_prime(src: &str, n: usize) -> PResult<MonPrime> {
    let monos = parse_monomials(src, n)?;
    let mut vars = VarSet::EMPTY;
    for m in &monos {
        if m.degree() != 1 {
            return Err(ParseError { line: 1, column: 1, message: format!("'{m}' is not a variable") });
        }
        vars = vars.union(m.support());
    }
    Ok(MonPrime::new(n, vars))
}
