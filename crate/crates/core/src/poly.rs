//! Sparse multivariate polynomials over an exact scalar.
//!
//! A polynomial carries its variable universe (an ordered list of names);
//! binary operations require both operands to live over the same universe.
//! Exponent vectors are dense small-integer arrays. The term order is
//! graded, and within a degree the variable-1-heavy monomial sorts first, so
//! ascending map iteration yields the canonical output order
//! (`1 + x1 + x2 + x1^2 + x1*x2 + ...`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::param::Param;
use crate::scalar::{rational_string, Scalar};

/// An ordered variable universe, cheaply cloneable.
#[derive(Debug, Clone)]
pub struct Vars(Arc<Vec<String>>);

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Vars {}

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Vars {
        Vars(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// The standard universe `x1..xn`.
    pub fn x(n: usize) -> Vars {
        Vars::new((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>())
    }

    /// Internal one-variable universe for series templates.
    pub fn u() -> Vars {
        Vars::new(vec!["u"])
    }

    /// Internal two-variable universe for series templates.
    pub fn uv() -> Vars {
        Vars::new(vec!["u", "v"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

/// Dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(Vec<u16>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: u16) -> Mono {
        let mut v = vec![0; n];
        v[i] = e;
        Mono(v)
    }

    pub fn from_exps(exps: Vec<u16>) -> Mono {
        Mono(exps)
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn with_exp(&self, i: usize, e: u16) -> Mono {
        let mut v = self.0.clone();
        v[i] = e;
        Mono(v)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Truncation contract: maximum total degree in the polynomial variables,
/// a z-exponent window for Laurent work, and optional per-parameter caps.
#[derive(Debug, Clone)]
pub struct Trunc {
    pub x_degree: usize,
    pub z_lo: i32,
    pub z_hi: i32,
    pub param_caps: Option<Vec<(Param, u16)>>,
}

impl Trunc {
    pub fn degree(d: usize) -> Trunc {
        Trunc {
            x_degree: d,
            z_lo: -(d as i32) - 1,
            z_hi: d as i32,
            param_caps: None,
        }
    }

    pub fn with_window(mut self, lo: i32, hi: i32) -> Trunc {
        assert!(lo <= 0 && 0 <= hi, "window must contain 0");
        self.z_lo = lo;
        self.z_hi = hi;
        self
    }

    pub fn with_param_caps(mut self, caps: Vec<(Param, u16)>) -> Trunc {
        self.param_caps = Some(caps);
        self
    }

    pub fn with_degree(&self, d: usize) -> Trunc {
        let mut t = self.clone();
        t.x_degree = d;
        t
    }
}

/// Sparse multivariate polynomial (also used as a truncated power series).
#[derive(Debug, Clone, PartialEq)]
pub struct MPoly<C: Scalar> {
    vars: Vars,
    terms: BTreeMap<Mono, C>,
}

impl<C: Scalar> MPoly<C> {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        let mut p = MPoly::zero(vars);
        p.add_term(Mono::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        MPoly::constant(vars, C::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut p = MPoly::zero(vars);
        p.add_term(Mono::var(vars.len(), i, 1), C::one());
        p
    }

    pub fn monomial(vars: &Vars, m: Mono, c: C) -> Self {
        let mut p = MPoly::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Mono::one(self.vars.len()))
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        let mut out = MPoly::zero(&self.vars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Product truncated to total degree <= `cap`.
    pub fn mul(&self, other: &Self, cap: usize) -> Result<Self> {
        self.same_universe(other)?;
        let cap = cap as u32;
        let mut out = MPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > cap {
                break; // graded order: everything after is larger
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() > cap {
                    break;
                }
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Untruncated product (exact polynomial multiplication).
    pub fn mul_full(&self, other: &Self) -> Result<Self> {
        self.mul(other, usize::MAX)
    }

    pub fn truncate(&self, cap: usize) -> Self {
        let cap = cap as u32;
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .take_while(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Apply the full truncation contract (degree plus parameter caps).
    pub fn truncate_ctx(&self, ctx: &Trunc) -> Self {
        let mut out = self.truncate(ctx.x_degree);
        if let Some(caps) = &ctx.param_caps {
            out.terms = out
                .terms
                .into_iter()
                .filter_map(|(m, c)| {
                    let capped = cap_params(&c, caps);
                    (!capped.is_zero()).then_some((m, capped))
                })
                .collect();
        }
        out
    }

    pub fn pow(&self, e: u32, cap: usize) -> Result<Self> {
        let mut out = MPoly::one(&self.vars);
        for _ in 0..e {
            out = out.mul(self, cap)?;
        }
        Ok(out)
    }

    /// Substitute variable `i` by zero.
    pub fn set_var_zero(&self, i: usize) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(i) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterpret over `target` vars, sending our variable `j` to
    /// `positions[j]`. Collisions add exponents (so `u,v -> x,x` evaluates
    /// on the diagonal).
    pub fn rename(&self, target: &Vars, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.vars.len());
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.len()];
            for (j, &e) in m.exps().iter().enumerate() {
                exps[positions[j]] += e;
            }
            out.add_term(Mono(exps), c.clone());
        }
        out
    }

    /// Apply a permutation of the variables: exponent of variable `i` moves
    /// to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let positions: Vec<usize> = perm.to_vec();
        self.rename(&self.vars.clone(), &positions)
    }

    /// Exact division by `(x_i - x_j)`. The remainder must vanish; a nonzero
    /// remainder reports `NotDivisible`.
    pub fn divide_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert_ne!(i, j);
        // group terms by the exponent of x_i, with x_i stripped
        let mut buckets: BTreeMap<u16, Vec<(Mono, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.exp(i);
            buckets
                .entry(k)
                .or_default()
                .push((m.with_exp(i, 0), c.clone()));
        }
        // remainder = p with x_i := x_j
        let mut rem = MPoly::zero(&self.vars);
        for (&k, terms) in &buckets {
            for (m, c) in terms {
                let mut e = m.clone();
                e.0[j] += k;
                rem.add_term(e, c.clone());
            }
        }
        if !rem.is_zero() {
            return Err(Error::NotDivisible(
                self.vars.name(i).to_string(),
                self.vars.name(j).to_string(),
            ));
        }
        // quotient = sum_k q_k * (x_i^{k-1} + x_i^{k-2} x_j + ... + x_j^{k-1})
        let mut quo = MPoly::zero(&self.vars);
        for (&k, terms) in &buckets {
            if k == 0 {
                continue;
            }
            for (m, c) in terms {
                for a in 0..k {
                    let mut e = m.clone();
                    e.0[i] += a;
                    e.0[j] += k - 1 - a;
                    quo.add_term(e, c.clone());
                }
            }
        }
        Ok(quo)
    }

    /// First coefficient where the two polynomials differ, as
    /// `(monomial, left, right)`.
    pub fn first_diff(&self, other: &Self) -> Option<(String, C, C)> {
        let mut monos: Vec<&Mono> = self.terms.keys().chain(other.terms.keys()).collect();
        monos.sort();
        monos.dedup();
        for m in monos {
            let a = self.coeff(m);
            let b = other.coeff(m);
            if a != b {
                return Some((mono_string(&self.vars, m), a, b));
            }
        }
        None
    }
}

fn cap_params<C: Scalar>(c: &C, caps: &[(Param, u16)]) -> C {
    match c.flatten() {
        None => c.clone(),
        Some(parts) => {
            let mut out = C::zero();
            'part: for (q, mono) in parts {
                for &(p, cap) in caps {
                    let d: u16 = mono
                        .iter()
                        .filter(|&&(pp, _)| pp == p)
                        .map(|&(_, e)| e)
                        .sum();
                    if d > cap {
                        continue 'part;
                    }
                }
                let mut term = C::from_rational(&q);
                for (p, e) in mono {
                    for _ in 0..e {
                        term = term * param_value::<C>(p);
                    }
                }
                out = out + term;
            }
            out
        }
    }
}

fn param_value<C: Scalar>(p: Param) -> C {
    // only ever called for scalars whose flatten() produced parameters,
    // i.e. ParamFrac; other scalars never reach here with a nonempty mono
    C::parse_str(&p.to_string()).expect("parameter value")
}

// ---------------------------------------------------------------------------
// canonical text form

fn mono_string(vars: &Vars, m: &Mono) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars.name(i).to_string()
            } else {
                format!("{}^{e}", vars.name(i))
            }
        })
        .collect();
    parts.join("*")
}

impl<C: Scalar> MPoly<C> {
    /// Canonical text form: terms in the canonical order, joined with
    /// ` + ` / ` - `; single-product coefficients inline, sums wrapped in
    /// parentheses (`x1 + x2 + b*x1*x2`, `(1-t)*x1 + (1-t)*x2`).
    pub fn canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.leading_is_negative();
            let c_abs = if neg { -c.clone() } else { c.clone() };
            let ms = mono_string(&self.vars, m);
            let body = if ms.is_empty() {
                format!("{c_abs}")
            } else if c_abs.is_one() {
                ms
            } else if c_abs.is_single_product() {
                format!("{c_abs}*{ms}")
            } else {
                format!("({c_abs})*{ms}")
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    /// Canonical JSON form. Coefficients that are polynomial in the
    /// parameters are flattened into combined exponent maps
    /// (`{"coeff":"-3/2","exps":{"x1":2,"b":1}}`); genuine fractions keep
    /// their canonical string as the coefficient.
    pub fn to_json(&self) -> Value {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let base_exps: Vec<(String, u16)> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| (self.vars.name(i).to_string(), e))
                .collect();
            match c.flatten() {
                Some(parts) => {
                    for (q, pmono) in parts {
                        let mut exps = Map::new();
                        for (name, e) in &base_exps {
                            exps.insert(name.clone(), json!(e));
                        }
                        for (p, e) in pmono {
                            exps.insert(p.to_string(), json!(e));
                        }
                        terms.push(json!({
                            "coeff": rational_string(&q),
                            "exps": Value::Object(exps),
                        }));
                    }
                }
                None => {
                    let mut exps = Map::new();
                    for (name, e) in &base_exps {
                        exps.insert(name.clone(), json!(e));
                    }
                    terms.push(json!({
                        "coeff": format!("{c}"),
                        "exps": Value::Object(exps),
                    }));
                }
            }
        }
        json!({ "vars": self.vars.names(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let vars_json = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `vars`".into()))?;
        let names: Vec<String> = vars_json
            .iter()
            .map(|s| {
                s.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Parse("non-string variable name".into()))
            })
            .collect::<Result<_>>()?;
        let vars = Vars::new(names);
        let mut out = MPoly::zero(&vars);
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `terms`".into()))?;
        for t in terms {
            let coeff_str = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing `coeff`".into()))?;
            let mut exps = vec![0u16; vars.len()];
            let mut coeff_expr = format!("({coeff_str})");
            if let Some(map) = t.get("exps").and_then(Value::as_object) {
                for (k, ev) in map {
                    let e = ev
                        .as_u64()
                        .ok_or_else(|| Error::Parse("bad exponent".into()))?
                        as u16;
                    match vars.index_of(k) {
                        Some(i) => exps[i] += e,
                        None => coeff_expr.push_str(&format!("*{k}^{e}")),
                    }
                }
            }
            let c = C::parse_str(&coeff_expr)?;
            out.add_term(Mono::from_exps(exps), c);
        }
        Ok(out)
    }
}

impl<C: Scalar> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::ParamFrac;
    use crate::scalar::{rat_int, Rational};

    fn xvars(n: usize) -> Vars {
        Vars::x(n)
    }

    fn x<C: Scalar>(vars: &Vars, i: usize) -> MPoly<C> {
        MPoly::var(vars, i)
    }

    #[test]
    fn difference_of_squares() {
        let vs = xvars(2);
        let x1 = x::<Rational>(&vs, 0);
        let x2 = x::<Rational>(&vs, 1);
        let prod = x1
            .add(&x2)
            .unwrap()
            .mul(&x1.sub(&x2).unwrap(), 10)
            .unwrap();
        let expect = x1
            .mul(&x1, 10)
            .unwrap()
            .sub(&x2.mul(&x2, 10).unwrap())
            .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn multiply_by_zero_absorbs() {
        let vs = xvars(2);
        let p = x::<Rational>(&vs, 0).add(&MPoly::one(&vs)).unwrap();
        let z = MPoly::zero(&vs);
        assert!(p.mul(&z, 10).unwrap().is_zero());
    }

    #[test]
    fn ck_one_row_product_expands() {
        // (1 + b*x1)(1 + b*x2) = 1 + b*x1 + b*x2 + b^2*x1*x2
        let vs = xvars(2);
        let beta = ParamFrac::param(Param::Beta);
        let f1 = MPoly::one(&vs)
            .add(&x::<ParamFrac>(&vs, 0).scale(&beta))
            .unwrap();
        let f2 = MPoly::one(&vs)
            .add(&x::<ParamFrac>(&vs, 1).scale(&beta))
            .unwrap();
        let p = f1.mul(&f2, 10).unwrap();
        assert_eq!(p.canonical_string(), "1 + b*x1 + b*x2 + b^2*x1*x2");
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let a = MPoly::<Rational>::one(&xvars(2));
        let b = MPoly::<Rational>::one(&xvars(3));
        assert_eq!(a.add(&b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn divide_difference_examples() {
        let vs = xvars(2);
        let x1 = x::<Rational>(&vs, 0);
        let x2 = x::<Rational>(&vs, 1);
        let sq = x1
            .mul(&x1, 10)
            .unwrap()
            .sub(&x2.mul(&x2, 10).unwrap())
            .unwrap();
        let q = sq.divide_difference(0, 1).unwrap();
        assert_eq!(q, x1.add(&x2).unwrap());
        // symmetric polynomial is not divisible
        let sym = x1
            .mul(&x1, 10)
            .unwrap()
            .add(&x2.mul(&x2, 10).unwrap())
            .unwrap();
        assert!(matches!(
            sym.divide_difference(0, 1),
            Err(Error::NotDivisible(_, _))
        ));
    }

    #[test]
    fn divide_difference_round_trip() {
        let vs = xvars(3);
        let p = x::<Rational>(&vs, 0)
            .add(&x(&vs, 2))
            .unwrap()
            .pow(3, 30)
            .unwrap()
            .add(&MPoly::constant(&vs, rat_int(7)))
            .unwrap();
        let diff = x::<Rational>(&vs, 0).sub(&x(&vs, 1)).unwrap();
        let prod = p.mul_full(&diff).unwrap();
        assert_eq!(prod.divide_difference(0, 1).unwrap(), p);
    }

    #[test]
    fn truncation_caps_total_degree() {
        let vs = xvars(2);
        let p = MPoly::<Rational>::one(&vs)
            .add(&x(&vs, 0))
            .unwrap()
            .add(&x(&vs, 1))
            .unwrap();
        let cube = p.pow(3, 2).unwrap();
        assert_eq!(cube.total_degree(), 2);
        let full = p.pow(3, 10).unwrap();
        assert_eq!(full.total_degree(), 3);
        assert_eq!(cube, full.truncate(2));
    }

    #[test]
    fn canonical_order_and_display() {
        let vs = xvars(2);
        let one = MPoly::<Rational>::one(&vs);
        let p = one
            .add(&x(&vs, 1))
            .unwrap()
            .add(&x(&vs, 0))
            .unwrap()
            .add(&x::<Rational>(&vs, 0).mul(&x(&vs, 0), 9).unwrap())
            .unwrap();
        assert_eq!(p.canonical_string(), "1 + x1 + x2 + x1^2");
        let m = x::<Rational>(&vs, 1).scale(&rat_int(-2));
        assert_eq!(
            x::<Rational>(&vs, 0).add(&m).unwrap().canonical_string(),
            "x1 - 2*x2"
        );
    }

    #[test]
    fn json_round_trip_flattens_params() {
        let vs = xvars(1);
        let beta = ParamFrac::param(Param::Beta);
        let p = MPoly::one(&vs)
            .add(&x::<ParamFrac>(&vs, 0).scale(&(beta + ParamFrac::one())))
            .unwrap();
        let v = p.to_json();
        let back = MPoly::<ParamFrac>::from_json(&v).unwrap();
        assert_eq!(back, p);
        // two flattened terms for the coefficient (1 + b)
        assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn permute_and_rename() {
        let vs = xvars(2);
        let p = x::<Rational>(&vs, 0)
            .mul(&x(&vs, 0), 9)
            .unwrap()
            .add(&x(&vs, 1))
            .unwrap();
        let q = p.permute(&[1, 0]);
        let expect = x::<Rational>(&vs, 1)
            .mul(&x(&vs, 1), 9)
            .unwrap()
            .add(&x(&vs, 0))
            .unwrap();
        assert_eq!(q, expect);
        // diagonal rename adds exponents
        let uv = Vars::uv();
        let f = MPoly::<Rational>::var(&uv, 0)
            .mul(&MPoly::var(&uv, 1), 9)
            .unwrap();
        let d = f.rename(&xvars(1), &[0, 0]);
        assert_eq!(d.degree_in(0), 2);
    }
}
