//! Truncated power-series calculus on top of [`MPoly`]: unit inversion,
//! substitution/composition, reversion, differentiation and termwise
//! integration.
//!
//! All operations are exact modulo the total-degree filtration: feeding in
//! series that are exact to degree `cap` yields results exact to degree
//! `cap`. Substitution targets must vanish at the origin, otherwise
//! truncated high-order terms of the outer series would contaminate low
//! degrees of the result.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Mono, Vars};
use crate::scalar::Scalar;

/// Multiplicative inverse of a series with invertible constant term:
/// `s * invert_unit(s) = 1` modulo degree `cap`.
pub fn invert_unit<C: Scalar>(s: &MPoly<C>, cap: usize) -> Result<MPoly<C>> {
    let c0 = s.constant_term();
    if c0.is_zero() {
        return Err(Error::NonUnitConstant);
    }
    let c0_inv = c0.inv()?;
    // s = c0 (1 - u) with ord(u) >= 1; 1/s = c0^{-1} sum u^k
    let u = MPoly::one(s.vars())
        .sub(&s.scale(&c0_inv))?
        .truncate(cap);
    let mut acc = MPoly::one(s.vars());
    let mut upow = MPoly::one(s.vars());
    for _ in 0..cap {
        upow = upow.mul(&u, cap)?;
        if upow.is_zero() {
            break;
        }
        acc = acc.add(&upow)?;
    }
    Ok(acc.scale(&c0_inv))
}

/// `a / b` as truncated series.
pub fn divide<C: Scalar>(a: &MPoly<C>, b: &MPoly<C>, cap: usize) -> Result<MPoly<C>> {
    a.mul(&invert_unit(b, cap)?, cap)
}

/// Substitute `targets[i]` for variable `i`. Every target must have a zero
/// constant term (series-safe substitution); all targets live over a common
/// universe, which becomes the universe of the result.
pub fn subst<C: Scalar>(f: &MPoly<C>, targets: &[MPoly<C>], cap: usize) -> Result<MPoly<C>> {
    for t in targets {
        if !t.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
    }
    subst_unchecked(f, targets, cap)
}

/// Substitution without the origin check. Only sound when `f` is an exact
/// polynomial (not a truncation) or all targets vanish at the origin.
pub fn subst_unchecked<C: Scalar>(
    f: &MPoly<C>,
    targets: &[MPoly<C>],
    cap: usize,
) -> Result<MPoly<C>> {
    assert_eq!(targets.len(), f.vars().len());
    let out_vars = targets
        .first()
        .map(|t| t.vars().clone())
        .unwrap_or_else(|| f.vars().clone());

    // cache powers of each target
    let mut powers: Vec<Vec<MPoly<C>>> = targets
        .iter()
        .map(|t| vec![MPoly::one(&out_vars), t.clone()])
        .collect();
    let mut power = |i: usize, e: usize, powers: &mut Vec<Vec<MPoly<C>>>| -> Result<MPoly<C>> {
        while powers[i].len() <= e {
            let last = powers[i].last().unwrap().clone();
            powers[i].push(last.mul(&targets[i], cap)?);
        }
        Ok(powers[i][e].clone())
    };

    let mut out = MPoly::zero(&out_vars);
    for (m, c) in f.terms() {
        let mut term = MPoly::constant(&out_vars, c.clone());
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                term = term.mul(&power(i, e as usize, &mut powers)?, cap)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Compose a univariate series with `g` (`g(0) = 0`): `sum s_k g^k`.
pub fn compose<C: Scalar>(s: &MPoly<C>, g: &MPoly<C>, cap: usize) -> Result<MPoly<C>> {
    assert_eq!(s.vars().len(), 1, "outer series must be univariate");
    subst(s, std::slice::from_ref(g), cap)
}

/// Compositional inverse of `s = z + O(z^2)`: the unique `g` with
/// `s(g(z)) = z` modulo degree `cap`.
pub fn reversion<C: Scalar>(s: &MPoly<C>, cap: usize) -> Result<MPoly<C>> {
    assert_eq!(s.vars().len(), 1);
    let vars = s.vars().clone();
    if !s.constant_term().is_zero() {
        return Err(Error::LinearCoeffNotOne);
    }
    if s.coeff(&Mono::var(1, 0, 1)) != C::one() {
        return Err(Error::LinearCoeffNotOne);
    }
    let z = MPoly::var(&vars, 0);
    let mut g = z.clone();
    for k in 2..=cap {
        let err = compose(s, &g, k)?.sub(&z)?;
        let e = err.coeff(&Mono::var(1, 0, k as u16));
        if !e.is_zero() {
            g = g.sub(&MPoly::monomial(&vars, Mono::var(1, 0, k as u16), e))?;
        }
    }
    Ok(g)
}

/// Partial derivative with respect to variable `i`.
pub fn differentiate<C: Scalar>(s: &MPoly<C>, i: usize) -> MPoly<C> {
    let mut out = MPoly::zero(s.vars());
    for (m, c) in s.terms() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        let mut exps = m.exps().to_vec();
        exps[i] -= 1;
        out.add_term(Mono::from_exps(exps), c.clone() * C::from_int(e as i64));
    }
    out
}

/// Termwise antiderivative in variable `i`, constant of integration zero.
pub fn integrate<C: Scalar>(s: &MPoly<C>, i: usize) -> Result<MPoly<C>> {
    let mut out = MPoly::zero(s.vars());
    for (m, c) in s.terms() {
        let e = m.exp(i) as i64;
        let mut exps = m.exps().to_vec();
        exps[i] += 1;
        out.add_term(
            Mono::from_exps(exps),
            c.clone() * C::from_int(e + 1).inv()?,
        );
    }
    Ok(out)
}

/// Geometric series `1/(1 - q)` for `ord(q) >= 1`.
pub fn geometric<C: Scalar>(q: &MPoly<C>, cap: usize) -> Result<MPoly<C>> {
    invert_unit(&MPoly::one(q.vars()).sub(q)?, cap)
}

/// Dense view of a univariate series: coefficient of `z^k` at index `k`.
pub fn univariate_coeffs<C: Scalar>(s: &MPoly<C>, len: usize) -> Vec<C> {
    assert_eq!(s.vars().len(), 1);
    let mut out = vec![C::zero(); len];
    for (m, c) in s.terms() {
        let e = m.exp(0) as usize;
        if e < len {
            out[e] = c.clone();
        }
    }
    out
}
