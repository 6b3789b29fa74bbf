//! Exact rational arithmetic and sparse multivariate polynomials.
//!
//! Every bound polynomial in this crate has rational coefficients whose size
//! grows quickly with the dimension, so coefficients are arbitrary precision
//! and nothing here ever touches floating point.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num/den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(big(s.parse().map_err(|_| bad())?)),
    }
}

/// Sort key giving the canonical variable order: `x`, `y`, `z` first, then
/// every other name by alphabetic prefix and numeric suffix (`x0 < x1 < x10`).
fn var_key(name: &str) -> (u8, String, Option<u64>) {
    match name {
        "x" => (0, String::new(), Some(0)),
        "y" => (0, String::new(), Some(1)),
        "z" => (0, String::new(), Some(2)),
        _ => {
            let split = name
                .char_indices()
                .rev()
                .take_while(|(_, c)| c.is_ascii_digit())
                .last()
                .map(|(i, _)| i)
                .unwrap_or(name.len());
            let (prefix, digits) = name.split_at(split);
            (1, prefix.to_owned(), digits.parse().ok())
        }
    }
}

/// Sorts and deduplicates variable names into canonical order.
pub fn canonical_vars<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    let mut vars: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
    vars.sort_by_key(|v| var_key(v));
    vars.dedup();
    vars
}

/// `x0, …, x{d}`.
pub fn indexed_vars(prefix: &str, count: usize) -> Vec<String> {
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

/// Polynomial arithmetic selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial with rational coefficients over an ordered list of
/// named variables.
///
/// Terms are keyed by exponent vectors (one entry per variable); zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolyJson", try_from = "PolyJson")]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    /// The zero polynomial over `vars` (put into canonical order).
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly { vars: canonical_vars(vars), terms: BTreeMap::new() }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        let exps = vec![0; p.vars.len()];
        p.add_term(exps, c);
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.index_of(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.add_term(exps, Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs. `vars` must
    /// already be in canonical order, since the exponents are read against it.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars);
        if p.vars.len() != vars.len() || p.vars.iter().zip(vars).any(|(a, b)| a != b.as_ref()) {
            return invalid("variables must be distinct and in canonical order");
        }
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return invalid(format!("exponent vector of length {} for {} variables", exps.len(), p.vars.len()));
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c · monomial(exps)`, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let idx = self.index_of(name)?;
        Ok(self.terms.keys().map(|e| e[idx]).max().unwrap_or(0))
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return invalid(format!("mismatched variable lists {:?} and {:?}", self.vars, other.vars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    /// `c · self`.
    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Multiplies by the monomial `Π var^exps`.
    pub fn shift(&self, exps: &[u32]) -> MultiPoly {
        assert_eq!(exps.len(), self.vars.len());
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps the terms whose exponent vectors satisfy `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&[u32]) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }

    /// The terms of total degree exactly `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> MultiPoly {
        let mut out = self.clone();
        out.retain(|e| e.iter().sum::<u32>() == deg);
        out
    }

    /// Evaluates at a point given by variable name.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                point.get(v).cloned().ok_or_else(|| Error::InvalidArgument(format!("no value for variable `{v}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.eval_at(&values)
    }

    /// Evaluates at values listed in variable order.
    pub fn eval_at(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.vars.len() {
            return invalid(format!("{} values given for {} variables", values.len(), self.vars.len()));
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(v.clone(), k as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces every variable by a polynomial. All bindings must share one
    /// target variable list, which becomes the variable list of the result.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly> {
        let images = self
            .vars
            .iter()
            .map(|v| bindings.get(v).ok_or_else(|| Error::InvalidArgument(format!("no binding for variable `{v}`"))))
            .collect::<Result<Vec<_>>>()?;
        let target: Vec<String> = match images.first() {
            Some(p) => p.vars.clone(),
            None => bindings.values().next().map(|p| p.vars.clone()).unwrap_or_default(),
        };
        if images.iter().any(|p| p.vars != target) {
            return invalid("substitution bindings use different variable lists");
        }
        let mut out = MultiPoly { vars: target.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    term = &term * &img.pow(k);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Terms in display order: decreasing total degree, then decreasing
    /// exponent vector.
    pub fn sorted_terms(&self) -> Vec<(&[u32], &Rational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }

    /// LaTeX rendering, e.g. `3 x^{2} y - \frac{1}{2} y^{3}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    let v = latex_var(v);
                    if k == 1 {
                        v
                    } else {
                        format!("{v}^{{{k}}}")
                    }
                })
                .collect();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                    out.push(' ');
                }
                out.push_str(&mono.join(" "));
            }
        }
        out
    }

    /// Parses the text format produced by `Display`, e.g.
    /// `3*x^2*y - 1/2*y^3`, over the given variables.
    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<MultiPoly> {
        Parser::new(text, MultiPoly::zero(vars)).parse()
    }
}

fn latex_var(v: &str) -> String {
    let split = v.find(|c: char| c.is_ascii_digit()).unwrap_or(v.len());
    let (head, idx) = v.split_at(split);
    if idx.is_empty() {
        head.to_owned()
    } else {
        format!("{head}_{{{idx}}}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    /// Panics if the variable lists differ; use [`MultiPoly::checked_add`]
    /// when they are not known to agree.
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("aligned variables")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("aligned variables")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("aligned variables")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

/// `a op b`, failing when the variable lists differ.
pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    match op {
        PolyOp::Add => a.checked_add(b),
        PolyOp::Sub => a.checked_sub(b),
        PolyOp::Mul => a.checked_mul(b),
    }
}

/// JSON mirror: `{variables: [...], terms: [{exps: [...], num: "...", den: "..."}]}`.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    variables: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    num: String,
    den: String,
}

impl From<MultiPoly> for PolyJson {
    fn from(p: MultiPoly) -> Self {
        let terms = p
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson { exps: e.to_vec(), num: c.numer().to_string(), den: c.denom().to_string() })
            .collect();
        PolyJson { variables: p.vars.clone(), terms }
    }
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                let c = parse_rational(&format!("{}/{}", t.num, t.den))?;
                Ok((t.exps, c))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(&j.variables, terms)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    shape: MultiPoly,
    error: Option<Error>,
}

impl Parser {
    fn new(text: &str, shape: MultiPoly) -> Self {
        let mut tokens = Vec::new();
        let mut error = None;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                tokens.push(Token::Num(s.parse().expect("digits")));
            } else if c.is_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Ident(chars[start..i].iter().collect()));
            } else {
                let tok = match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    _ => {
                        error.get_or_insert(Error::Parse(format!("unexpected character `{c}`")));
                        i += 1;
                        continue;
                    }
                };
                tokens.push(tok);
                i += 1;
            }
        }
        Parser { tokens, pos: 0, shape, error }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at token {}", self.pos)))
    }

    fn parse(mut self) -> Result<MultiPoly> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        if self.tokens.is_empty() {
            return self.fail("empty polynomial");
        }
        let mut acc = MultiPoly::zero(&self.shape.vars);
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Token::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.term()?;
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
            match self.next() {
                None => break,
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                Some(_) => return self.fail("expected `+` or `-`"),
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(&self.shape.vars);
        loop {
            let factor = self.factor()?;
            acc = &acc * &factor;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Token::Num(num)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(den)) if !den.is_zero() => {
                            Ok(MultiPoly::constant(&self.shape.vars, Rational::new(num, den)))
                        }
                        _ => self.fail("expected nonzero denominator"),
                    }
                } else {
                    Ok(MultiPoly::constant(&self.shape.vars, big(num)))
                }
            }
            Some(Token::Ident(name)) => {
                let v = MultiPoly::var(&self.shape.vars, &name)
                    .map_err(|_| Error::Parse(format!("unknown variable `{name}`")))?;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(k)) => {
                            let k: u32 = k.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                            Ok(v.pow(k))
                        }
                        _ => self.fail("expected exponent"),
                    }
                } else {
                    Ok(v)
                }
            }
            _ => self.fail("expected number or variable"),
        }
    }
}
