//! Exact univariate polynomial arithmetic over the rationals: dense
//! representation, Euclidean division and gcd, square-free decomposition,
//! and Sturm-sequence isolation of real roots into disjoint rational
//! enclosures. No floating point anywhere — multiplicity patterns are
//! discontinuous and tolerance-free.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub(crate) fn ratio_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form of an exact rational: "n" or "n/d".
pub fn ratio_display(r: &BigRational) -> String {
    ratio_to_string(r)
}

pub(crate) fn ratio_from_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim().parse().map_err(|_| Error::Parse {
            detail: format!("bad rational {s:?}"),
        })
    };
    match s.split_once('/') {
        None => Ok(BigRational::from(parse_int(s)?)),
        Some((n, d)) => {
            let numer = parse_int(n)?;
            let denom = parse_int(d)?;
            if denom.is_zero() {
                return Err(Error::Parse {
                    detail: format!("zero denominator in {s:?}"),
                });
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Serde adaptor: a rational as the string "n" or "n/d".
pub(crate) mod ratio_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&ratio_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let raw = String::deserialize(d)?;
        ratio_from_str(&raw).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A polynomial with exact rational coefficients, dense and ascending
/// (index 0 = constant term). Trailing zeros are trimmed; the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    /// The monic linear factor u − r.
    pub fn linear(root: &BigRational) -> Self {
        Self::new(vec![-root.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Quotient and remainder of exact division over the rationals.
    /// Panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let factor = &rem[i] / &lead;
            if factor.is_zero() {
                continue;
            }
            quot[i - dd] = factor.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = &rem[idx] - &factor * dc;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Substitutes u ↦ u + c.
    pub fn translate(&self, c: &BigRational) -> Self {
        let shift = Self::new(vec![c.clone(), BigRational::one()]);
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Self::constant(coeff.clone());
        }
        acc
    }

    /// Human-readable form with the given variable name.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = ratio_to_string(&c.abs());
            let body = match i {
                0 => mag,
                _ => {
                    let power = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if c.abs().is_one() {
                        power
                    } else {
                        format!("{mag}{power}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for RationalPolynomial {
    /// CLI text form: comma-separated exact coefficients, ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", ratio_to_string(c))?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly[{}]", self.pretty("u"))
    }
}

impl FromStr for RationalPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(ratio_from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            coeffs: Vec<&'a str>,
        }
        let strings: Vec<String> = self.coeffs.iter().map(ratio_to_string).collect();
        Wire {
            coeffs: strings.iter().map(|s| s.as_str()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            coeffs: Vec<String>,
        }
        let wire = Wire::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| ratio_from_str(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(Self::new(coeffs))
    }
}

impl std::ops::Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

/// Monic greatest common divisor over the rationals (zero when both inputs
/// are zero).
pub fn gcd_monic(a: &RationalPolynomial, b: &RationalPolynomial) -> RationalPolynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Square-free decomposition P = c·∏ factorᵢ^multᵢ with pairwise-coprime
/// square-free monic factors and strictly ascending multiplicities.
/// Constants decompose into an empty list.
pub fn squarefree_decomposition(p: &RationalPolynomial) -> Result<Vec<(RationalPolynomial, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let a = p.monic();
    let da = a.derivative();
    let g = gcd_monic(&a, &da);
    if g.degree() == Some(0) {
        return Ok(vec![(a, 1)]);
    }
    let mut out = Vec::new();
    let mut w = a.div_exact(&g);
    let mut y = da.div_exact(&g);
    let mut i = 1u32;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.degree().is_some_and(|d| d >= 1) {
                out.push((w, i));
            }
            break;
        }
        let gi = gcd_monic(&w, &z);
        if gi.degree().is_some_and(|d| d >= 1) {
            out.push((gi.clone(), i));
        }
        w = w.div_exact(&gi);
        y = z.div_exact(&gi);
        i += 1;
    }
    Ok(out)
}

/// An exact enclosure of one real root: either the rational root itself or
/// a half-open interval (lo, hi] with rational endpoints containing exactly
/// one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootEnclosure {
    Point(BigRational),
    Interval { lo: BigRational, hi: BigRational },
}

impl RootEnclosure {
    /// Greatest rational known ≤ the root (the root itself for points;
    /// the open lower endpoint for intervals).
    pub fn lower(&self) -> &BigRational {
        match self {
            RootEnclosure::Point(p) => p,
            RootEnclosure::Interval { lo, .. } => lo,
        }
    }

    /// Least rational known ≥ the root.
    pub fn upper(&self) -> &BigRational {
        match self {
            RootEnclosure::Point(p) => p,
            RootEnclosure::Interval { hi, .. } => hi,
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, RootEnclosure::Point(_))
    }
}

impl fmt::Display for RootEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootEnclosure::Point(p) => write!(f, "{}", ratio_to_string(p)),
            RootEnclosure::Interval { lo, hi } => {
                write!(f, "({},{}]", ratio_to_string(lo), ratio_to_string(hi))
            }
        }
    }
}

impl Serialize for RootEnclosure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "snake_case")]
        enum Wire<'a> {
            Point(&'a str),
            Interval(&'a str, &'a str),
        }
        match self {
            RootEnclosure::Point(p) => Wire::Point(&ratio_to_string(p)).serialize(s),
            RootEnclosure::Interval { lo, hi } => {
                Wire::Interval(&ratio_to_string(lo), &ratio_to_string(hi)).serialize(s)
            }
        }
    }
}

/// One isolated real root: an enclosure plus the root's multiplicity in the
/// polynomial it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    pub enclosure: RootEnclosure,
    pub multiplicity: u32,
}

/// Sturm chain: p, p′, then negated Euclidean remainders down to a constant.
fn sturm_chain(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        chain.push(&RationalPolynomial::zero() - &r);
    }
}

fn sign_variations(chain: &[RationalPolynomial], x: &BigRational) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                count += 1;
            }
        }
        last = Some(positive);
    }
    count
}

/// 1 + max |cᵢ| / |lead|: every real root lies strictly inside (−B, B).
pub fn cauchy_bound(p: &RationalPolynomial) -> BigRational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .expect("nonzero polynomial");
    BigRational::one() + max / lead
}

struct TrackedRoot {
    enclosure: RootEnclosure,
    /// Square-free witness with a single simple root in the enclosure;
    /// sign(factor(lo)) ≠ sign(factor(hi)) for interval enclosures.
    factor: RationalPolynomial,
    multiplicity: u32,
}

impl TrackedRoot {
    /// Halves an interval enclosure (points are already exact).
    fn refine(&mut self) {
        let (lo, hi) = match &self.enclosure {
            RootEnclosure::Point(_) => return,
            RootEnclosure::Interval { lo, hi } => (lo.clone(), hi.clone()),
        };
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        let at_mid = self.factor.eval(&mid);
        if at_mid.is_zero() {
            self.enclosure = RootEnclosure::Point(mid);
            return;
        }
        let at_lo = self.factor.eval(&lo);
        debug_assert!(!at_lo.is_zero());
        self.enclosure = if at_lo.is_positive() != at_mid.is_positive() {
            RootEnclosure::Interval { lo, hi: mid }
        } else {
            RootEnclosure::Interval { lo: mid, hi }
        };
    }
}

/// Isolates the real roots of a square-free polynomial into rational
/// point/interval enclosures, ascending; exact rational roots hit by the
/// bisection are reported as points.
fn isolate_squarefree(q: &RationalPolynomial, multiplicity: u32) -> Vec<TrackedRoot> {
    let mut points: Vec<BigRational> = Vec::new();
    let mut work = q.monic();
    let intervals = 'restart: loop {
        if work.degree().unwrap_or(0) == 0 {
            break Vec::new();
        }
        let chain = sturm_chain(&work);
        let bound = cauchy_bound(&work);
        let lo = -bound.clone();
        let v_lo = sign_variations(&chain, &lo);
        let v_hi = sign_variations(&chain, &bound);
        let mut stack = vec![(lo, v_lo, bound, v_hi)];
        let mut isolated = Vec::new();
        while let Some((a, va, b, vb)) = stack.pop() {
            let count = va - vb;
            if count == 0 {
                continue;
            }
            if count == 1 {
                isolated.push((a, b));
                continue;
            }
            let mid = (&a + &b) / BigRational::from(BigInt::from(2));
            if work.eval(&mid).is_zero() {
                points.push(mid.clone());
                work = work.div_exact(&RationalPolynomial::linear(&mid));
                continue 'restart;
            }
            let vm = sign_variations(&chain, &mid);
            stack.push((a, va, mid.clone(), vm));
            stack.push((mid, vm, b, vb));
        }
        break isolated;
    };

    let mut roots: Vec<TrackedRoot> = points
        .into_iter()
        .map(|p| TrackedRoot {
            enclosure: RootEnclosure::Point(p),
            factor: work.clone(),
            multiplicity,
        })
        .collect();
    for (lo, hi) in intervals {
        debug_assert!(
            work.eval(&lo).is_positive() != work.eval(&hi).is_positive(),
            "a lone simple root flips the sign"
        );
        roots.push(TrackedRoot {
            enclosure: RootEnclosure::Interval { lo, hi },
            factor: work.clone(),
            multiplicity,
        });
    }
    // separate the surviving intervals from the divided-out points
    separate(&mut roots);
    roots
}

/// Two enclosures conflict unless one's upper bound is strictly below the
/// other's lower bound.
fn conflict(a: &RootEnclosure, b: &RootEnclosure) -> bool {
    !(a.upper() < b.lower() || b.upper() < a.lower())
}

/// Refines until all enclosures are pairwise strictly separated, then sorts
/// ascending. The enclosed roots must be pairwise distinct.
fn separate(roots: &mut [TrackedRoot]) {
    loop {
        let mut changed = false;
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if conflict(&roots[i].enclosure, &roots[j].enclosure) {
                    roots[i].refine();
                    roots[j].refine();
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    roots.sort_by(|x, y| x.enclosure.lower().cmp(y.enclosure.lower()));
}

/// Isolates the real roots of a square-free polynomial: pairwise disjoint
/// ordered enclosures, one distinct real root each, multiplicity 1.
pub fn isolate_real_roots(q: &RationalPolynomial) -> Result<Vec<IsolatedRoot>> {
    if q.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if gcd_monic(q, &q.derivative()).degree().unwrap_or(0) >= 1 {
        return Err(Error::NotSquarefree);
    }
    Ok(isolate_squarefree(q, 1)
        .into_iter()
        .map(|t| IsolatedRoot {
            enclosure: t.enclosure,
            multiplicity: t.multiplicity,
        })
        .collect())
}

/// All real roots of an arbitrary nonzero polynomial with their
/// multiplicities, ascending, in pairwise strictly separated enclosures.
pub fn isolated_roots_with_multiplicity(p: &RationalPolynomial) -> Result<Vec<IsolatedRoot>> {
    let mut all: Vec<TrackedRoot> = Vec::new();
    for (factor, multiplicity) in squarefree_decomposition(p)? {
        all.extend(isolate_squarefree(&factor, multiplicity));
    }
    separate(&mut all);
    Ok(all
        .into_iter()
        .map(|t| IsolatedRoot {
            enclosure: t.enclosure,
            multiplicity: t.multiplicity,
        })
        .collect())
}

/// Total number of distinct real roots of a square-free polynomial.
pub fn count_real_roots(q: &RationalPolynomial) -> Result<usize> {
    if q.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if q.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(q);
    let bound = cauchy_bound(q);
    Ok(sign_variations(&chain, &-bound.clone()) - sign_variations(&chain, &bound))
}
