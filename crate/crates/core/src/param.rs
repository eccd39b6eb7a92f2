//! The symbolic coefficient field: fractions of polynomials in the formal
//! parameters `b` (the K-theory deformation), `g` (the elliptic deformation),
//! `t`, and an unbounded supply of shift parameters `b1, b2, ...`.
//!
//! Equality of fractions is decided by cross-multiplication, never by
//! representation. A canonicalization pass after every arithmetic operation
//! keeps denominators primitive with a positive leading coefficient (and
//! folds constant denominators away); full multivariate gcd reduction is not
//! attempted, but monomial content, exact-division and single-parameter gcd
//! reductions keep the common cases small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{rational_is_negative, rational_string, Rational, Scalar};

/// A formal parameter of the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    /// Connective K-theory deformation, printed `b`.
    Beta,
    /// Elliptic deformation, printed `g`.
    Gamma,
    /// The Hall-Littlewood deformation, printed `t`.
    T,
    /// Factorial shift parameters, printed `b1`, `b2`, ...
    B(u16),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Beta => write!(f, "b"),
            Param::Gamma => write!(f, "g"),
            Param::T => write!(f, "t"),
            Param::B(k) => write!(f, "b{k}"),
        }
    }
}

impl Param {
    pub fn parse(s: &str) -> Option<Param> {
        match s {
            "b" => Some(Param::Beta),
            "g" => Some(Param::Gamma),
            "t" => Some(Param::T),
            _ => {
                let rest = s.strip_prefix('b')?;
                rest.parse::<u16>().ok().map(Param::B)
            }
        }
    }
}

/// A parameter monomial: sorted `(param, exponent)` pairs, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PMono(Vec<(Param, u16)>);

impl PMono {
    pub fn one() -> Self {
        PMono(Vec::new())
    }

    pub fn var(p: Param) -> Self {
        PMono(vec![(p, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(Param, u16)>) -> Self {
        pairs.retain(|&(_, e)| e != 0);
        pairs.sort_by_key(|&(p, _)| p);
        PMono(pairs)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn degree_of(&self, p: Param) -> u16 {
        self.0
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Param, u16)] {
        &self.0
    }

    pub fn mul(&self, other: &PMono) -> PMono {
        let mut out: Vec<(Param, u16)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        PMono(out)
    }

    /// Componentwise min (gcd of monomials).
    fn gcd(&self, other: &PMono) -> PMono {
        let mut out = Vec::new();
        for &(p, e) in &self.0 {
            let f = other.degree_of(p);
            let m = e.min(f);
            if m > 0 {
                out.push((p, m));
            }
        }
        PMono(out)
    }

    /// Divide by `other`; `None` when an exponent would go negative.
    fn div(&self, other: &PMono) -> Option<PMono> {
        let mut out = self.0.clone();
        for &(p, e) in &other.0 {
            let slot = out.iter_mut().find(|(q, _)| *q == p)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|&(_, e)| e != 0);
        Some(PMono(out))
    }

    /// Lexicographic comparison: earlier parameters with higher exponents
    /// are larger.
    fn cmp_lex(&self, other: &PMono) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(pa, ea)), Some(&(pb, eb))) => match pa.cmp(&pb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Canonical term order: graded, with the lexicographically larger monomial
/// sorting first within a degree (so ascending iteration prints `1`, then
/// `b`, `g`, `t`, then `b^2`, `b*g`, ...).
impl Ord for PMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_lex(other).reverse())
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the parameters over `Rational`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PPoly {
    terms: BTreeMap<PMono, Rational>,
}

impl PPoly {
    pub fn zero() -> Self {
        PPoly::default()
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(PMono::one(), q);
        }
        PPoly { terms }
    }

    pub fn one() -> Self {
        PPoly::constant(Rational::one())
    }

    pub fn var(p: Param) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(PMono::var(p), Rational::one());
        PPoly { terms }
    }

    pub fn term(q: Rational, m: PMono) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        PPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PMono, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, q) = self.terms.iter().next().unwrap();
                m.is_one().then(|| q.clone())
            }
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_of(&self, p: Param) -> u16 {
        self.terms.keys().map(|m| m.degree_of(p)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: PMono, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PPoly) -> PPoly {
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), q.clone());
        }
        out
    }

    pub fn neg(&self) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), -q.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PPoly) -> PPoly {
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), -q.clone());
        }
        out
    }

    pub fn mul(&self, other: &PPoly) -> PPoly {
        let mut out = PPoly::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                out.add_term(ma.mul(mb), qa * qb);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> PPoly {
        if q.is_zero() {
            return PPoly::zero();
        }
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * q))
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&PMono, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Rational content carrying the sign of the leading coefficient:
    /// dividing by it leaves a primitive integer polynomial whose leading
    /// coefficient is positive.
    fn signed_content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for q in self.terms.values() {
            num_gcd = num_gcd.gcd(q.numer());
            den_lcm = den_lcm.lcm(q.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        let mut c = Rational::new(num_gcd, den_lcm);
        if let Some((_, lead)) = self.leading() {
            if lead.is_negative() {
                c = -c;
            }
        }
        c
    }

    fn mono_content(&self) -> PMono {
        let mut it = self.terms.keys();
        let mut acc = match it.next() {
            Some(m) => m.clone(),
            None => return PMono::one(),
        };
        for m in it {
            if acc.is_one() {
                break;
            }
            acc = acc.gcd(m);
        }
        acc
    }

    fn div_mono(&self, m: &PMono) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, q)| (k.div(m).expect("monomial content divides"), q.clone()))
                .collect(),
        }
    }

    /// Exact polynomial division; `None` if `den` does not divide `self`.
    fn div_exact(&self, den: &PPoly) -> Option<PPoly> {
        let (dm, dc) = den.leading()?;
        let mut rem = self.clone();
        let mut quo = PPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(dm)?;
            let c = rc / dc;
            let t = PPoly::term(c, m);
            rem = rem.sub(&t.mul(den));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// `Some(p)` if every monomial involves only the single parameter `p`.
    fn single_param(&self) -> Option<Param> {
        let mut found = None;
        for m in self.terms.keys() {
            for &(p, _) in m.pairs() {
                match found {
                    None => found = Some(p),
                    Some(q) if q == p => {}
                    Some(_) => return None,
                }
            }
        }
        found
    }

    fn to_dense(&self, p: Param) -> Vec<Rational> {
        let deg = self.degree_of(p) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, q) in &self.terms {
            out[m.degree_of(p) as usize] = q.clone();
        }
        out
    }

    fn from_dense(p: Param, coeffs: &[Rational]) -> PPoly {
        let mut out = PPoly::zero();
        for (k, q) in coeffs.iter().enumerate() {
            if !q.is_zero() {
                out.add_term(PMono::from_pairs(vec![(p, k as u16)]), q.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> PPoly {
        let mut out = PPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

fn dense_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Euclidean gcd of dense univariate rational polynomials (monic result).
fn dense_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    dense_trim(&mut a);
    dense_trim(&mut b);
    while !b.is_empty() {
        let r = dense_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c = &*c / &lead;
        }
    }
    a
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = &r[dr] / lead;
        for (i, bc) in b.iter().enumerate() {
            let v = &r[dr - db + i] - &(&f * bc);
            r[dr - db + i] = v;
        }
        // the top coefficient cancels exactly
        dense_trim(&mut r);
    }
    r
}

fn dense_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = &r[dr] / lead;
        q[dr - db] = f.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = &r[dr - db + i] - &(&f * bc);
            r[dr - db + i] = v;
        }
        dense_trim(&mut r);
    }
    q
}

/// A fraction of parameter polynomials. The denominator is never zero;
/// equality is by cross-multiplication.
#[derive(Debug, Clone)]
pub struct ParamFrac {
    num: PPoly,
    den: PPoly,
}

impl ParamFrac {
    fn make(num: PPoly, den: PPoly) -> ParamFrac {
        debug_assert!(!den.is_zero());
        let mut f = ParamFrac { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(num: PPoly) -> ParamFrac {
        ParamFrac::make(num, PPoly::one())
    }

    pub fn param(p: Param) -> ParamFrac {
        ParamFrac::from_poly(PPoly::var(p))
    }

    pub fn numerator(&self) -> &PPoly {
        &self.num
    }

    pub fn denominator(&self) -> &PPoly {
        &self.den
    }

    /// Build `num/den`; fails when `den = 0`.
    pub fn new(num: PPoly, den: PPoly) -> Result<ParamFrac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ParamFrac::make(num, den))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = PPoly::one();
            return;
        }
        if let Some(c) = self.den.as_constant() {
            if !c.is_one() {
                let inv = c.recip();
                self.num = self.num.scale(&inv);
                self.den = PPoly::one();
            }
            return;
        }
        // strip common monomial content
        let m = self.num.mono_content().gcd(&self.den.mono_content());
        if !m.is_one() {
            self.num = self.num.div_mono(&m);
            self.den = self.den.div_mono(&m);
        }
        // exact division
        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = PPoly::one();
            return;
        }
        // single-parameter gcd
        if let (Some(p), Some(q)) = (self.num.single_param(), self.den.single_param()) {
            if p == q {
                let da = self.num.to_dense(p);
                let db = self.den.to_dense(p);
                let g = dense_gcd(da.clone(), db.clone());
                if g.len() > 1 {
                    self.num = PPoly::from_dense(p, &dense_div_exact(&da, &g));
                    self.den = PPoly::from_dense(p, &dense_div_exact(&db, &g));
                }
            }
        }
        // normalize the denominator: primitive, positive leading coefficient
        let c = self.den.signed_content();
        if !c.is_one() {
            let inv = c.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn degree_of(&self, p: Param) -> i32 {
        self.num.degree_of(p) as i32 - self.den.degree_of(p) as i32
    }
}

impl PartialEq for ParamFrac {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Add for ParamFrac {
    type Output = ParamFrac;
    fn add(self, rhs: ParamFrac) -> ParamFrac {
        if self.den == rhs.den {
            return ParamFrac::make(self.num.add(&rhs.num), self.den);
        }
        ParamFrac::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for ParamFrac {
    type Output = ParamFrac;
    fn sub(self, rhs: ParamFrac) -> ParamFrac {
        self + (-rhs)
    }
}

impl Neg for ParamFrac {
    type Output = ParamFrac;
    fn neg(self) -> ParamFrac {
        ParamFrac {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for ParamFrac {
    type Output = ParamFrac;
    fn mul(self, rhs: ParamFrac) -> ParamFrac {
        ParamFrac::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Zero for ParamFrac {
    fn zero() -> Self {
        ParamFrac {
            num: PPoly::zero(),
            den: PPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ParamFrac {
    fn one() -> Self {
        ParamFrac {
            num: PPoly::one(),
            den: PPoly::one(),
        }
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl Scalar for ParamFrac {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ParamFrac::make(self.den.clone(), self.num.clone()))
    }

    fn from_rational(q: &Rational) -> Self {
        ParamFrac::from_poly(PPoly::constant(q.clone()))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn flatten(&self) -> Option<Vec<(Rational, Vec<(Param, u16)>)>> {
        if !self.den.as_constant().is_some_and(|c| c.is_one()) {
            return None;
        }
        Some(
            self.num
                .terms()
                .map(|(m, q)| (q.clone(), m.pairs().to_vec()))
                .collect(),
        )
    }

    fn parse_str(s: &str) -> Result<Self> {
        ParamFrac::parse(s)
    }

    /// A single product needs no parentheses when inlined into a term.
    fn is_single_product(&self) -> bool {
        self.den.as_constant().is_some_and(|c| c.is_one()) && self.num.num_terms() <= 1
    }

    fn leading_is_negative(&self) -> bool {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            if let Some((_, q)) = self.num.terms().next() {
                return rational_is_negative(q);
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// canonical text form

/// Render one `rational * monomial` product, compactly (`-3/2*b*t^2`).
fn term_string(q: &Rational, m: &PMono) -> String {
    let mono: Vec<String> = m
        .pairs()
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    if mono.is_empty() {
        return rational_string(q);
    }
    let mono = mono.join("*");
    if q.is_one() {
        mono
    } else if (-q.clone()).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", rational_string(q))
    }
}

/// Compact sum form, `1-t+2*b`.
fn poly_string(p: &PPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, q)) in p.terms().enumerate() {
        let neg = rational_is_negative(q);
        let body = term_string(&q.abs(), m);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&body);
    }
    out
}

fn wrapped(p: &PPoly) -> String {
    if p.num_terms() > 1 {
        format!("({})", poly_string(p))
    } else {
        poly_string(p)
    }
}

impl fmt::Display for ParamFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", poly_string(&self.num))
        } else {
            write!(f, "{}/{}", wrapped(&self.num), wrapped(&self.den))
        }
    }
}


// ---------------------------------------------------------------------------
// parser

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(s.parse().unwrap())
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(std::str::from_utf8(&self.src[start..self.pos]).unwrap().into())
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{}`",
                    other as char
                )))
            }
        })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Result<Self> {
        let mut lex = Lexer::new(s);
        let cur = lex.next_tok()?;
        Ok(Parser { lex, cur })
    }

    fn bump(&mut self) -> Result<()> {
        self.cur = self.lex.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<ParamFrac> {
        let mut acc = self.mul_chain()?;
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc + self.mul_chain()?;
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc - self.mul_chain()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn mul_chain(&mut self) -> Result<ParamFrac> {
        let mut acc = self.unary()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.bump()?;
                    acc = acc * self.unary()?;
                }
                Tok::Slash => {
                    self.bump()?;
                    let d = self.unary()?;
                    acc = acc * d.inv()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ParamFrac> {
        if self.cur == Tok::Minus {
            self.bump()?;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let e = match std::mem::replace(&mut self.cur, Tok::End) {
                Tok::Int(n) => n,
                other => return Err(Error::Parse(format!("expected exponent, got {other:?}"))),
            };
            self.bump()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::Parse("exponent out of range".into()))?;
            let mut acc = ParamFrac::one();
            for _ in 0..e {
                acc = acc * base.clone();
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamFrac> {
        match std::mem::replace(&mut self.cur, Tok::End) {
            Tok::Int(n) => {
                self.bump()?;
                Ok(ParamFrac::from_rational(&Rational::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.bump()?;
                let p = Param::parse(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown parameter `{name}`")))?;
                Ok(ParamFrac::param(p))
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(Error::Parse("expected `)`".into()));
                }
                self.bump()?;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl ParamFrac {
    /// Parse the canonical text form (`-3/2`, `5*b`, `1-t`, `1/(1-t)`, ...).
    pub fn parse(s: &str) -> Result<ParamFrac> {
        let mut p = Parser::new(s)?;
        let v = p.expr()?;
        if p.cur != Tok::End {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn pf(s: &str) -> ParamFrac {
        ParamFrac::parse(s).unwrap()
    }

    #[test]
    fn cross_multiplication_equality() {
        // (1-t^2)/(1-t) == 1+t regardless of representation
        let a = ParamFrac::new(
            PPoly::one().sub(&PPoly::var(Param::T).pow(2)),
            PPoly::one().sub(&PPoly::var(Param::T)),
        )
        .unwrap();
        let b = pf("1+t");
        assert_eq!(a, b);
        // the reduce pass should have cleared the denominator entirely
        assert!(a.denominator().as_constant().is_some_and(|c| c.is_one()));
    }

    #[test]
    fn add_sub_round_trip() {
        let a = pf("1/(1-t)");
        let b = pf("b/(2-t)");
        let c = (a.clone() + b.clone()) - b;
        assert_eq!(c, a);
    }

    #[test]
    fn denominator_normalization() {
        // den gets a positive leading coefficient and integer content 1
        let f = ParamFrac::new(
            PPoly::one(),
            PPoly::constant(rat(-2, 1)).mul(&PPoly::var(Param::T)).sub(&PPoly::constant(rat(-2, 1))),
        )
        .unwrap();
        // 1/(-2t+2) -> (-1/2)/(t-1)
        assert_eq!(format!("{f}"), "-1/2/(-1+t)");
        let g = f.clone() * pf("-1+t");
        assert_eq!(g, pf("-1/2"));
    }

    #[test]
    fn display_matches_canonical_examples() {
        assert_eq!(format!("{}", pf("5*b")), "5*b");
        assert_eq!(format!("{}", pf("1-t")), "1-t");
        assert_eq!(format!("{}", pf("-2")), "-2");
        assert_eq!(format!("{}", pf("3/2*b*t^2")), "3/2*b*t^2");
        // denominators are normalized to a positive leading coefficient
        assert_eq!(format!("{}", pf("1/(1-t)")), "-1/(-1+t)");
        let roundtrip = pf("1/(1-t)");
        assert_eq!(ParamFrac::parse(&format!("{roundtrip}")).unwrap(), roundtrip);
    }

    #[test]
    fn single_param_gcd_reduces() {
        // (t^2+2t+1)/(t+1) -> t+1
        let f = pf("(t^2+2*t+1)/(t+1)");
        assert_eq!(f, pf("t+1"));
        assert!(f.denominator().as_constant().is_some_and(|c| c.is_one()));
    }

    #[test]
    fn flatten_and_rational_views() {
        assert_eq!(pf("3/2").as_rational(), Some(rat(3, 2)));
        assert_eq!(pf("1/(1-t)").as_rational(), None);
        let f = pf("1+2*b");
        let flat = f.flatten().unwrap();
        assert_eq!(flat.len(), 2);
        assert_eq!(flat[0].0, rat(1, 1));
        assert!(flat[0].1.is_empty());
        assert_eq!(flat[1].0, rat(2, 1));
        assert_eq!(flat[1].1, vec![(Param::Beta, 1)]);
        assert_eq!(pf("1/(1-t)").flatten(), None);
    }

    #[test]
    fn param_parse_names() {
        assert_eq!(Param::parse("b"), Some(Param::Beta));
        assert_eq!(Param::parse("g"), Some(Param::Gamma));
        assert_eq!(Param::parse("t"), Some(Param::T));
        assert_eq!(Param::parse("b3"), Some(Param::B(3)));
        assert_eq!(Param::parse("q"), None);
    }
}
