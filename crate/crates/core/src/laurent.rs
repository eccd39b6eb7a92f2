//! Windowed Laurent series.
//!
//! Doubly infinite series are represented on finite exponent windows with an
//! explicit exactness contract. Every value carries
//!
//! * `math_lo` — a mathematical lower support bound: coefficients below it
//!   vanish identically (modulo the ambient x-degree truncation);
//! * a window `[lo, hi]` — stored coefficients inside it are exact; above
//!   `hi` nothing is known, and below `lo` entries may have been discarded
//!   by a product plan.
//!
//! The product of windows exact down to their support is exact on
//! `[lo_a + lo_b, min(hi_a + math_lo_b, hi_b + math_lo_a)]`: this is the
//! window-widening contract — a factor must be built high enough to absorb
//! its partners' pole depth. All expansions use the fixed region
//! `|x_j| << |z_1| << ... << |z_r|`, so `1/(z_i - x_j)` expands into
//! negative powers of `z_i` and cross factors in `(z_i, z_j)` with `i < j`
//! expand as power series in `z_i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Vars};
use crate::scalar::Scalar;

// ---------------------------------------------------------------------------
// scalar-coefficient Laurent series in one variable

/// Univariate Laurent series with scalar coefficients (weights like `H(z)`
/// and `1/P_F(z)` before any `x` enters).
#[derive(Debug, Clone, PartialEq)]
pub struct SLaurent<C: Scalar> {
    pub lo: i32,
    pub hi: i32,
    coeffs: BTreeMap<i32, C>,
}

impl<C: Scalar> SLaurent<C> {
    pub fn new(lo: i32, hi: i32) -> Self {
        assert!(lo <= hi);
        SLaurent {
            lo,
            hi,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(hi: i32) -> Self {
        let mut s = SLaurent::new(0, hi);
        s.set(0, C::one());
        s
    }

    pub fn set(&mut self, e: i32, c: C) {
        assert!((self.lo..=self.hi).contains(&e));
        if c.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, c);
        }
    }

    pub fn coeff(&self, e: i32) -> Result<C> {
        if e > self.hi {
            return Err(Error::WindowTooNarrow {
                var: "z".into(),
                requested: e,
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_else(C::zero))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i32, &C)> {
        self.coeffs.iter()
    }

    /// Lowest exponent with a nonzero stored coefficient (the pole order,
    /// negated), if any.
    pub fn order(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// From a univariate polynomial/truncated power series; exact to `hi`
    /// provided the input is exact to that order.
    pub fn from_series(s: &MPoly<C>, hi: i32) -> Self {
        assert_eq!(s.vars().len(), 1);
        let mut out = SLaurent::new(0, hi);
        for (m, c) in s.terms() {
            let e = m.exp(0) as i32;
            if e <= hi {
                out.set(e, c.clone());
            }
        }
        out
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        SLaurent {
            lo: self.lo + k,
            hi: self.hi + k,
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let lo = self.lo + other.lo;
        let hi = (self.hi + other.lo).min(other.hi + self.lo);
        let mut out = SLaurent::new(lo, hi);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e > hi {
                    continue;
                }
                let prev = out.coeffs.remove(&e).unwrap_or_else(C::zero);
                let sum = prev + ca.clone() * cb.clone();
                if !sum.is_zero() {
                    out.coeffs.insert(e, sum);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = SLaurent::one(self.hi.max(0));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Invert a Laurent series whose lowest-order coefficient is a unit:
    /// `z^m u(z)` maps to `z^{-m} u(z)^{-1}`. The result is exact to
    /// `min(want_hi, self.hi - 2m)`.
    pub fn invert(&self, want_hi: i32) -> Result<Self> {
        let (&m, c0) = self.coeffs.iter().next().ok_or(Error::NonUnitConstant)?;
        let c0_inv = c0.inv()?;
        let exact_hi = (self.hi - 2 * m).min(want_hi);
        if exact_hi < -m {
            return Err(Error::WindowTooNarrow {
                var: "z".into(),
                requested: want_hi,
                lo: self.lo,
                hi: self.hi,
            });
        }
        // unit part u: u_k = coeff(m + k); inverse by the standard recurrence
        let klen = (exact_hi + m) as usize + 1;
        let mut unit = vec![C::zero(); klen];
        for (e, c) in &self.coeffs {
            let k = (e - m) as usize;
            if k < klen {
                unit[k] = c.clone();
            }
        }
        let mut inv = vec![C::zero(); klen];
        inv[0] = c0_inv.clone();
        for k in 1..klen {
            let mut acc = C::zero();
            for j in 1..=k {
                if !unit[j].is_zero() {
                    acc = acc + unit[j].clone() * inv[k - j].clone();
                }
            }
            inv[k] = -(acc * c0_inv.clone());
        }
        let mut out = SLaurent::new(-m, exact_hi);
        for (k, c) in inv.into_iter().enumerate() {
            let e = k as i32 - m;
            if !c.is_zero() {
                out.set(e, c);
            }
        }
        Ok(out)
    }

    pub fn to_zlaurent(&self, vars: &Vars) -> ZLaurent<C> {
        let mut out = ZLaurent::new(vars, self.lo, self.lo, self.hi);
        for (e, c) in &self.coeffs {
            out.set(*e, MPoly::constant(vars, c.clone()));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// single z variable over polynomial coefficients

/// Laurent series in one `z` variable with [`MPoly`] coefficients in the
/// `x` universe.
#[derive(Debug, Clone, PartialEq)]
pub struct ZLaurent<C: Scalar> {
    vars: Vars,
    pub math_lo: i32,
    pub lo: i32,
    pub hi: i32,
    coeffs: BTreeMap<i32, MPoly<C>>,
}

impl<C: Scalar> ZLaurent<C> {
    pub fn new(vars: &Vars, math_lo: i32, lo: i32, hi: i32) -> Self {
        assert!(math_lo <= lo && lo <= hi);
        ZLaurent {
            vars: vars.clone(),
            math_lo,
            lo,
            hi,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars, hi: i32) -> Self {
        let mut s = ZLaurent::new(vars, 0, 0, hi);
        s.set(0, MPoly::one(vars));
        s
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn set(&mut self, e: i32, p: MPoly<C>) {
        assert!((self.lo..=self.hi).contains(&e));
        if p.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, p);
        }
    }

    pub fn add_to(&mut self, e: i32, p: MPoly<C>) {
        let cur = self
            .coeffs
            .remove(&e)
            .unwrap_or_else(|| MPoly::zero(&self.vars));
        let sum = cur.add(&p).expect("same universe");
        self.set(e, sum);
    }

    /// Coefficient of `z^e`; exact zero below `math_lo`, error above `hi`.
    pub fn coeff(&self, e: i32) -> Result<MPoly<C>> {
        if e < self.math_lo {
            return Ok(MPoly::zero(&self.vars));
        }
        if e < self.lo || e > self.hi {
            return Err(Error::WindowTooNarrow {
                var: "z".into(),
                requested: e,
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(self
            .coeffs
            .get(&e)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&self.vars)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i32, &MPoly<C>)> {
        self.coeffs.iter()
    }

    /// Windowed product; `xcap` truncates coefficient degree. Operands must
    /// be exact down to their mathematical support.
    pub fn mul(&self, other: &Self, xcap: usize) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::UniverseMismatch);
        }
        debug_assert!(self.lo == self.math_lo && other.lo == other.math_lo);
        let math_lo = self.math_lo + other.math_lo;
        let hi = (self.hi + other.math_lo).min(other.hi + self.math_lo);
        if math_lo > hi {
            return Err(Error::Precondition(format!(
                "empty product window [{math_lo}, {hi}]"
            )));
        }
        let mut out = ZLaurent::new(&self.vars, math_lo, math_lo, hi);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e > hi {
                    continue;
                }
                let prod = ca.mul(cb, xcap)?;
                if !prod.is_zero() {
                    out.add_to(e, prod);
                }
            }
        }
        Ok(out)
    }

    /// Sum; operands must be exact down to their support.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::UniverseMismatch);
        }
        if self.lo != self.math_lo || other.lo != other.math_lo {
            return Err(Error::Precondition(
                "sum of clipped Laurent windows".into(),
            ));
        }
        let math_lo = self.math_lo.min(other.math_lo);
        let hi = self.hi.min(other.hi);
        let mut out = ZLaurent::new(&self.vars, math_lo, math_lo, hi);
        for e in math_lo..=hi {
            let sum = self.coeff(e)?.add(&other.coeff(e)?)?;
            out.set(e, sum);
        }
        Ok(out)
    }

    pub fn scale_poly(&self, p: &MPoly<C>, xcap: usize) -> Result<Self> {
        let mut out = ZLaurent::new(&self.vars, self.math_lo, self.lo, self.hi);
        for (e, c) in &self.coeffs {
            out.set(*e, c.mul(p, xcap)?);
        }
        Ok(out)
    }

    /// The non-negative power part, `z^0 ..= z^hi`.
    pub fn nonneg_part(&self) -> ZLaurent<C> {
        let mut out = ZLaurent::new(&self.vars, 0, 0, self.hi.max(0));
        for (e, c) in &self.coeffs {
            if *e >= 0 {
                out.set(*e, c.clone());
            }
        }
        out
    }

    /// Embed into a multi-variable Laurent object at slot `pos` of `zvars`.
    pub fn to_multi(&self, zvars: usize, pos: usize) -> MultiZ<C> {
        let mut math_lo = vec![0; zvars];
        let mut lo = vec![0; zvars];
        let mut hi = vec![0; zvars];
        math_lo[pos] = self.math_lo;
        lo[pos] = self.lo;
        hi[pos] = self.hi;
        let mut out = MultiZ::new(&self.vars, math_lo, lo, hi);
        for (e, c) in &self.coeffs {
            let mut key = vec![0; zvars];
            key[pos] = *e;
            out.set(key, c.clone());
        }
        out
    }
}

// ---------------------------------------------------------------------------
// several z variables

/// A per-variable exponent clip box used by product plans.
pub type ClipBox = Vec<(i32, i32)>;

/// Laurent series in `z_1..z_r` with [`MPoly`] coefficients, expanded in
/// the fixed region `|x| << |z_1| << ... << |z_r|`.
#[derive(Debug, Clone)]
pub struct MultiZ<C: Scalar> {
    vars: Vars,
    pub math_lo: Vec<i32>,
    pub lo: Vec<i32>,
    pub hi: Vec<i32>,
    coeffs: BTreeMap<Vec<i32>, MPoly<C>>,
}

impl<C: Scalar> MultiZ<C> {
    pub fn new(vars: &Vars, math_lo: Vec<i32>, lo: Vec<i32>, hi: Vec<i32>) -> Self {
        assert_eq!(math_lo.len(), lo.len());
        assert_eq!(lo.len(), hi.len());
        for v in 0..lo.len() {
            assert!(math_lo[v] <= lo[v] && lo[v] <= hi[v]);
        }
        MultiZ {
            vars: vars.clone(),
            math_lo,
            lo,
            hi,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars, zvars: usize) -> Self {
        let mut out = MultiZ::new(vars, vec![0; zvars], vec![0; zvars], vec![0; zvars]);
        out.coeffs.insert(vec![0; zvars], MPoly::one(vars));
        out
    }

    pub fn zvars(&self) -> usize {
        self.lo.len()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn set(&mut self, key: Vec<i32>, p: MPoly<C>) {
        if p.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, p);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, &MPoly<C>)> {
        self.coeffs.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, key: &[i32]) -> Result<MPoly<C>> {
        let mut below_support = false;
        for v in 0..self.zvars() {
            if key[v] < self.math_lo[v] {
                below_support = true;
            } else if key[v] < self.lo[v] || key[v] > self.hi[v] {
                return Err(Error::WindowTooNarrow {
                    var: format!("z{}", v + 1),
                    requested: key[v],
                    lo: self.lo[v],
                    hi: self.hi[v],
                });
            }
        }
        if below_support {
            return Ok(MPoly::zero(&self.vars));
        }
        Ok(self
            .coeffs
            .get(key)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&self.vars)))
    }

    /// Windowed product with an optional per-variable clip box: entries
    /// outside the clip are neither computed nor stored. Clipping is only
    /// sound under a product plan that certifies the discarded region
    /// cannot reach the requested coefficients.
    pub fn mul(&self, other: &Self, xcap: usize, clip: Option<&ClipBox>) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::UniverseMismatch);
        }
        let r = self.zvars();
        assert_eq!(r, other.zvars());
        let mut math_lo = vec![0; r];
        let mut lo = vec![0; r];
        let mut hi = vec![0; r];
        for v in 0..r {
            math_lo[v] = self.math_lo[v] + other.math_lo[v];
            lo[v] = self.lo[v] + other.lo[v];
            hi[v] = (self.hi[v] + other.math_lo[v]).min(other.hi[v] + self.math_lo[v]);
            if let Some(c) = clip {
                lo[v] = lo[v].max(c[v].0);
                hi[v] = hi[v].min(c[v].1);
            }
            lo[v] = lo[v].max(math_lo[v]);
            if lo[v] > hi[v] {
                return Err(Error::Precondition(format!(
                    "empty product window for z{}",
                    v + 1
                )));
            }
        }
        let mut out = MultiZ::new(&self.vars, math_lo, lo, hi);
        let mut key = vec![0i32; r];
        for (ea, ca) in &self.coeffs {
            'inner: for (eb, cb) in &other.coeffs {
                for v in 0..r {
                    let e = ea[v] + eb[v];
                    if e < out.lo[v] || e > out.hi[v] {
                        continue 'inner;
                    }
                    key[v] = e;
                }
                let prod = ca.mul(cb, xcap)?;
                if prod.is_zero() {
                    continue;
                }
                match out.coeffs.remove(&key) {
                    Some(cur) => out.set(key.clone(), cur.add(&prod)?),
                    None => out.set(key.clone(), prod),
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{Param, ParamFrac};
    use crate::poly::Mono;
    use crate::scalar::{rat_int, Rational};
    use num_traits::{One, Zero};

    /// Naive convolution oracle for the windowed product.
    fn naive_coeff<C: Scalar>(a: &ZLaurent<C>, b: &ZLaurent<C>, e: i32, xcap: usize) -> MPoly<C> {
        let mut acc = MPoly::zero(a.vars());
        for (ea, ca) in a.iter() {
            for (eb, cb) in b.iter() {
                if ea + eb == e {
                    acc = acc.add(&ca.mul(cb, xcap).unwrap()).unwrap();
                }
            }
        }
        acc
    }

    #[test]
    fn display_example_sum() {
        // 1/(1+b z) + x/(z-x) on the fixed region:
        // ... + b^2 z^2 - b z + 1 + (x/z) + (x/z)^2 + ...
        let vars = Vars::x(1);
        let beta = ParamFrac::param(Param::Beta);
        let d = 5usize;
        let mut geo = ZLaurent::<ParamFrac>::new(&vars, 0, 0, 4);
        let mut c = ParamFrac::one();
        for k in 0..=4 {
            geo.set(k, MPoly::constant(&vars, c.clone()));
            c = c * -beta.clone();
        }
        // positive powers of x/(z-x) are known to vanish, so hi = 4
        let mut pole = ZLaurent::<ParamFrac>::new(&vars, -(d as i32), -(d as i32), 4);
        for m in 1..=d {
            pole.set(
                -(m as i32),
                MPoly::monomial(&vars, Mono::var(1, 0, m as u16), ParamFrac::one()),
            );
        }
        let sum = geo.add(&pole).unwrap();
        assert_eq!(sum.coeff(0).unwrap(), MPoly::one(&vars));
        assert_eq!(sum.coeff(-1).unwrap(), MPoly::var(&vars, 0));
        let b2 = beta.clone() * beta.clone();
        assert_eq!(sum.coeff(2).unwrap(), MPoly::constant(&vars, b2));
        // outside the guaranteed window
        assert!(sum.coeff(10).is_err());
        // below mathematical support: exactly zero
        assert!(sum.coeff(-100).unwrap().is_zero());
    }

    #[test]
    fn product_matches_naive_convolution() {
        let vars = Vars::x(2);
        let xcap = 6usize;
        let mk = |lo: i32, hi: i32, seed: i64| {
            let mut z = ZLaurent::<Rational>::new(&vars, lo, lo, hi);
            let mut s = seed;
            for e in lo..=hi {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let c = rat_int((s >> 33) % 7);
                let mut p = MPoly::constant(&vars, c);
                if e < 0 {
                    // negative powers carry matching x-degree
                    p = p
                        .mul(&MPoly::var(&vars, 0).pow((-e) as u32, xcap).unwrap(), xcap)
                        .unwrap();
                }
                z.set(e, p);
            }
            z
        };
        let a = mk(-3, 4, 17);
        let b = mk(-2, 5, 99);
        let p = a.mul(&b, xcap).unwrap();
        assert_eq!(p.math_lo, -5);
        assert_eq!(p.hi, (4 - 2).min(5 - 3));
        for e in p.lo..=p.hi {
            assert_eq!(p.coeff(e).unwrap(), naive_coeff(&a, &b, e, xcap));
        }
    }

    #[test]
    fn slaurent_inversion() {
        // 1/(2 + b z) as scalar Laurent
        let beta = ParamFrac::param(Param::Beta);
        let mut s = SLaurent::<ParamFrac>::new(0, 6);
        s.set(0, ParamFrac::from_int(2));
        s.set(1, beta.clone());
        let inv = s.invert(6).unwrap();
        let prod = s.mul(&inv);
        for e in prod.lo..=prod.hi {
            let expect = if e == 0 {
                ParamFrac::one()
            } else {
                ParamFrac::zero()
            };
            assert_eq!(prod.coeff(e).unwrap(), expect);
        }
        // z^2 (1 + z) inverts to z^{-2} (1 - z + z^2 - ...)
        let mut t = SLaurent::<Rational>::new(2, 8);
        t.set(2, rat_int(1));
        t.set(3, rat_int(1));
        let tinv = t.invert(4).unwrap();
        assert_eq!(tinv.lo, -2);
        assert_eq!(tinv.coeff(-2).unwrap(), rat_int(1));
        assert_eq!(tinv.coeff(-1).unwrap(), rat_int(-1));
        assert_eq!(tinv.coeff(0).unwrap(), rat_int(1));
    }

    #[test]
    fn multi_window_rule() {
        let vars = Vars::x(1);
        let a = ZLaurent::<Rational>::one(&vars, 5).to_multi(2, 0);
        let mut b = MultiZ::<Rational>::new(&vars, vec![0, -2], vec![0, -2], vec![3, 4]);
        b.set(vec![1, -2], MPoly::one(&vars));
        let p = a.mul(&b, 10, None).unwrap();
        // z1: hi = min(5+0, 3+0) = 3; z2: hi = min(0+(-2), 4+0) = -2
        assert_eq!(p.hi, vec![3, -2]);
        assert_eq!(p.math_lo, vec![0, -2]);
        assert_eq!(p.coeff(&[1, -2]).unwrap(), MPoly::one(&vars));
    }
}
