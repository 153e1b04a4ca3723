//! Exact arithmetic in the single variable `q`.
//!
//! [`LaurentPolynomial`] holds finitely many terms with integer (possibly
//! negative) exponents. [`TruncatedSeries`] is a power series known exactly
//! through a declared degree `max_degree`; everything above the cutoff is
//! discarded. Coefficients are arbitrary-precision integers throughout.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Integer-coefficient polynomial in `q` and `q^-1`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exp: i64, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients starting at exponent 0.
    pub fn from_coefficients<C: Into<BigInt> + Clone>(coefs: &[C]) -> Self {
        Self::from_terms(coefs.iter().cloned().enumerate().map(|(i, c)| (i as i64, c)))
    }

    pub(crate) fn add_term(&mut self, exp: i64, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplication by `q^n`.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + n, v.clone())).collect(),
        }
    }

    /// Substitutes `q -> 1/q`.
    pub fn reciprocal_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact division; fails if the remainder is nonzero or a leading
    /// coefficient does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        };
        let lead = divisor.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rhi) = rem.max_exp() {
            let rlo = rem.min_exp().unwrap_or(rhi);
            // The remainder's span shrinks below the divisor's: stop.
            if rhi - rlo < dhi - dlo {
                break;
            }
            let (q, r) = rem.terms[&rhi].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {lead} does not divide {}",
                    rem.terms[&rhi]
                )));
            }
            let e = rhi - dhi;
            let step = divisor.shift(e).scale(&q);
            rem = &rem - &step;
            quot.add_term(e, q);
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!(
                "({self}) / ({divisor}) leaves remainder {rem}"
            )));
        }
        Ok(quot)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "var": "q",
            "max_degree": Value::Null,
            "terms": terms_json(self.terms()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (max_degree, terms) = parse_terms_json(v)?;
        if max_degree.is_some() {
            return Err(Error::Parse("polynomial JSON must have null max_degree".into()));
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms()))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(LaurentPolynomial, Add, add);
forward_owned_binop!(LaurentPolynomial, Sub, sub);
forward_owned_binop!(LaurentPolynomial, Mul, mul);

/// Power series in `q` exact through `max_degree`, with a finite lowest exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    max_degree: i64,
    terms: BTreeMap<i64, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(max_degree: i64) -> Self {
        Self {
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(max_degree: i64) -> Self {
        Self::from_poly(&LaurentPolynomial::one(), max_degree)
    }

    /// Promotion of a polynomial; terms above `max_degree` are dropped.
    pub fn from_poly(p: &LaurentPolynomial, max_degree: i64) -> Self {
        Self {
            max_degree,
            terms: p
                .terms()
                .filter(|(e, _)| *e <= max_degree)
                .map(|(e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn from_terms<I, C>(terms: I, max_degree: i64) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(max_degree);
        for (e, c) in terms {
            s.add_term(e, c.into());
        }
        s
    }

    /// Dense coefficients starting at exponent 0.
    pub fn from_coefficients<C: Into<BigInt> + Clone>(coefs: &[C], max_degree: i64) -> Self {
        Self::from_terms(
            coefs.iter().cloned().enumerate().map(|(i, c)| (i as i64, c)),
            max_degree,
        )
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    pub(crate) fn add_term(&mut self, exp: i64, coef: BigInt) {
        if exp > self.max_degree || coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Drops everything above `max_degree`; a larger cutoff than the current one is an error.
    pub fn truncate(&self, max_degree: i64) -> Result<Self> {
        if max_degree > self.max_degree {
            return Err(Error::InvalidArgument(format!(
                "cannot extend a series known through q^{} to q^{max_degree}",
                self.max_degree
            )));
        }
        Ok(Self {
            max_degree,
            terms: self
                .terms
                .range(..=max_degree)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// The known terms as a polynomial.
    pub fn to_poly(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (e, c.clone())))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (e, v) in self.terms() {
            out.add_term(e, v * c);
        }
        out
    }

    /// Multiplication by `q^n`; the cutoff moves with the series.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            max_degree: self.max_degree + n,
            terms: self.terms.iter().map(|(e, v)| (e + n, v.clone())).collect(),
        }
    }

    /// Exact product with a polynomial: known through `max_degree + min_exp(p)`.
    pub fn mul_poly(&self, p: &LaurentPolynomial) -> Self {
        let cutoff = self.max_degree + p.min_exp().unwrap_or(0);
        let mut out = Self::zero(cutoff);
        for (e1, c1) in self.terms() {
            for (e2, c2) in p.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "var": "q",
            "max_degree": self.max_degree,
            "terms": terms_json(self.terms()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (max_degree, terms) = parse_terms_json(v)?;
        let max_degree =
            max_degree.ok_or_else(|| Error::Parse("series JSON needs an integer max_degree".into()))?;
        if let Some((e, _)) = terms.iter().find(|(e, _)| *e > max_degree) {
            return Err(Error::Parse(format!("term q^{e} lies above max_degree {max_degree}")));
        }
        Ok(Self::from_terms(terms, max_degree))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms()))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.max_degree.min(rhs.max_degree));
        for (e, c) in self.terms().chain(rhs.terms()) {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            max_degree: self.max_degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    /// The cutoff is the smaller of the two, lowered further by any negative valuation.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let va = self.valuation().unwrap_or(0).min(0);
        let vb = rhs.valuation().unwrap_or(0).min(0);
        let cutoff = (self.max_degree + vb).min(rhs.max_degree + va);
        let mut out = TruncatedSeries::zero(cutoff);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                if e1 + e2 > cutoff {
                    break;
                }
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

forward_owned_binop!(TruncatedSeries, Add, add);
forward_owned_binop!(TruncatedSeries, Sub, sub);
forward_owned_binop!(TruncatedSeries, Mul, mul);

/// `(q)_m = (1-q)(1-q^2)...(1-q^m)`; `(q)_0 = 1`.
pub fn q_pochhammer(m: u64) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::one();
    for i in 1..=m as i64 {
        let factor = LaurentPolynomial::from_terms([(0, 1), (i, -1)]);
        p = &p * &factor;
    }
    p
}

/// The Gaussian polynomial `[m+n choose m]_q = (q)_{m+n} / ((q)_m (q)_n)`.
pub fn gaussian_binomial(m: u64, n: u64) -> Result<LaurentPolynomial> {
    let denom = &q_pochhammer(m) * &q_pochhammer(n);
    q_pochhammer(m + n).div_exact(&denom)
}

/// Order of a q-Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerOrder {
    Finite(u64),
    Infinite,
}

/// `1/(q)_m` (or `1/(q)_inf`) through degree `max_degree`.
pub fn inverse_pochhammer_series(order: PochhammerOrder, max_degree: i64) -> TruncatedSeries {
    let coefs = inverse_pochhammer_coefficients(order, max_degree.max(-1));
    TruncatedSeries::from_coefficients(&coefs, max_degree)
}

/// Dense coefficients of `1/(q)_m` for degrees `0..=max_degree`.
pub(crate) fn inverse_pochhammer_coefficients(order: PochhammerOrder, max_degree: i64) -> Vec<BigInt> {
    if max_degree < 0 {
        return Vec::new();
    }
    let len = max_degree as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    let top = match order {
        PochhammerOrder::Finite(m) => (m as usize).min(len - 1),
        PochhammerOrder::Infinite => len - 1,
    };
    // Multiply by 1/(1-q^i) in place: c[n] += c[n-i] in ascending n.
    for i in 1..=top {
        for n in i..len {
            let prev = c[n - i].clone();
            c[n] += prev;
        }
    }
    c
}

pub fn eval_at_one(p: &LaurentPolynomial) -> BigInt {
    p.eval_at_one()
}

impl std::str::FromStr for LaurentPolynomial {
    type Err = Error;

    /// Parses the rendered form, e.g. `1 - 2*q^3 + q^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let mut out = Self::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (coef, exp) = match body.split_once('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some((c, e)) => {
                    let coef = match c {
                        "" => BigInt::one(),
                        _ => c.strip_suffix('*').ok_or_else(bad)?.parse::<BigInt>().map_err(|_| bad())?,
                    };
                    let exp = match e {
                        "" => 1,
                        _ => e.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?,
                    };
                    (coef, exp)
                }
            };
            if coef.is_negative() {
                return Err(bad());
            }
            out.add_term(exp, if neg { -coef } else { coef });
        }
        Ok(out)
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (i64, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (i, (e, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let var = match e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        };
        if var.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{abs}*{var}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn terms_json<'a>(terms: impl Iterator<Item = (i64, &'a BigInt)>) -> Value {
    Value::Array(
        terms
            .map(|(e, c)| json!({ "exp": e, "coef": c.to_string() }))
            .collect(),
    )
}

type ParsedTerms = (Option<i64>, Vec<(i64, BigInt)>);

fn parse_terms_json(v: &Value) -> Result<ParsedTerms> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    if obj.get("var").and_then(Value::as_str) != Some("q") {
        return Err(Error::Parse("expected \"var\": \"q\"".into()));
    }
    let max_degree = match obj.get("max_degree") {
        None | Some(Value::Null) => None,
        Some(d) => Some(
            d.as_i64()
                .ok_or_else(|| Error::Parse("max_degree must be an integer".into()))?,
        ),
    };
    let arr = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing terms array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    let mut last: Option<i64> = None;
    for t in arr {
        let exp = t
            .get("exp")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Parse("term without integer exp".into()))?;
        let coef: BigInt = t
            .get("coef")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("term without string coef".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad coefficient: {e}")))?;
        if last.is_some_and(|l| l >= exp) {
            return Err(Error::Parse("terms must be strictly ascending in exp".into()));
        }
        if coef.is_zero() {
            return Err(Error::Parse("zero coefficients are not stored".into()));
        }
        last = Some(exp);
        terms.push((exp, coef));
    }
    Ok((max_degree, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coefficients(c)
    }

    /// Schoolbook product of dense coefficient vectors; independent of `Mul`.
    fn dense_product(factors: &[Vec<i64>]) -> Vec<i64> {
        factors.iter().fold(vec![1], |acc, f| {
            let mut out = vec![0; acc.len() + f.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        })
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(q_pochhammer(0), LaurentPolynomial::one());
        assert_eq!(q_pochhammer(1), poly(&[1, -1]));
        let expected = dense_product(&[vec![1, -1], vec![1, 0, -1], vec![1, 0, 0, -1]]);
        assert_eq!(expected, vec![1, -1, -1, 0, 1, 1, -1]);
        assert_eq!(q_pochhammer(3), poly(&expected));
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(1, 1).unwrap(), poly(&[1, 1]));
        assert_eq!(gaussian_binomial(5, 0).unwrap(), LaurentPolynomial::one());
        assert_eq!(gaussian_binomial(0, 0).unwrap(), LaurentPolynomial::one());
        // (q)_4 / ((q)_2 (q)_2), checked by multiplying back with the dense oracle.
        let g = gaussian_binomial(2, 2).unwrap();
        assert_eq!(g, poly(&[1, 1, 2, 1, 1]));
        let back = dense_product(&[vec![1, 1, 2, 1, 1], vec![1, -1], vec![1, 0, -1], vec![1, -1], vec![1, 0, -1]]);
        assert_eq!(poly(&back), q_pochhammer(4));
        assert_eq!(g.eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(poly(&[1, 1]).reciprocal_q(), LaurentPolynomial::from_terms([(0, 1), (-1, 1)]));
        assert_eq!(LaurentPolynomial::monomial(2, 1).reciprocal_q(), LaurentPolynomial::monomial(-2, 1));
        let g = gaussian_binomial(2, 1).unwrap();
        assert_eq!(g.reciprocal_q().shift(2), g);
    }

    #[test]
    fn inverse_pochhammer_examples() {
        let p = inverse_pochhammer_series(PochhammerOrder::Infinite, 4);
        // p(d) by brute-force partition counting.
        fn count(n: u32, max: u32) -> u32 {
            if n == 0 {
                return 1;
            }
            (1..=max.min(n)).map(|k| count(n - k, k)).sum()
        }
        let expected: Vec<u32> = (0..=4).map(|d| count(d, d)).collect();
        assert_eq!(expected, vec![1, 1, 2, 3, 5]);
        assert_eq!(p, TruncatedSeries::from_coefficients(&expected, 4));
        assert_eq!(inverse_pochhammer_series(PochhammerOrder::Finite(0), 7), TruncatedSeries::one(7));
        assert_eq!(
            inverse_pochhammer_series(PochhammerOrder::Finite(1), 3),
            TruncatedSeries::from_coefficients(&[1, 1, 1, 1], 3)
        );
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(eval_at_one(&poly(&[0, 1, 1])), BigInt::from(2));
        assert_eq!(eval_at_one(&LaurentPolynomial::zero()), BigInt::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[1, 1, 2]).to_string(), "1 + q + 2*q^2");
        assert_eq!(q_pochhammer(3).to_string(), "1 - q - q^2 + q^4 + q^5 - q^6");
        assert_eq!(LaurentPolynomial::monomial(-3, -1).to_string(), "-q^-3");
        assert_eq!(LaurentPolynomial::from_terms([(-2, 1), (-1, -2), (0, 3)]).to_string(), "q^-2 - 2*q^-1 + 3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::monomial(0, -1).to_string(), "-1");
    }

    #[test]
    fn inexact_division_is_an_error() {
        let err = poly(&[1, 0, 1]).div_exact(&poly(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::InexactDivision(_)));
        assert!(poly(&[1, 2]).div_exact(&poly(&[0, 2])).is_err());
    }

    #[test]
    fn cutoffs_combine_conservatively() {
        let a = TruncatedSeries::from_coefficients(&[1, 1, 1, 1, 1], 4);
        let b = TruncatedSeries::from_coefficients(&[1, 2], 2);
        assert_eq!((&a + &b).max_degree(), 2);
        assert_eq!((&a * &b).max_degree(), 2);
        let neg = TruncatedSeries::from_terms([(-1, 1), (0, 1)], 3);
        assert_eq!((&a * &neg).max_degree(), 3);
        let lowered = TruncatedSeries::from_terms([(-2, 1)], 4);
        assert_eq!((&a * &lowered).max_degree(), 2);
        assert_eq!(a.shift(-3).max_degree(), 1);
    }

    #[test]
    fn json_shape() {
        let s = TruncatedSeries::from_terms([(-1, 3), (2, -5)], 4);
        assert_eq!(
            s.to_json().to_string(),
            r#"{"var":"q","max_degree":4,"terms":[{"exp":-1,"coef":"3"},{"exp":2,"coef":"-5"}]}"#
        );
        assert_eq!(TruncatedSeries::from_json(&s.to_json()).unwrap(), s);
        let p = poly(&[1, 1]);
        assert_eq!(p.to_json()["max_degree"], Value::Null);
        assert_eq!(LaurentPolynomial::from_json(&p.to_json()).unwrap(), p);
        assert!(LaurentPolynomial::from_json(&s.to_json()).is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPolynomial::monomial(3, big.clone());
        let sq = &p * &p;
        assert_eq!(sq.coeff(6), &big * &big);
        assert_eq!(LaurentPolynomial::from_json(&sq.to_json()).unwrap(), sq);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-4i64..6, -5i64..6), 0..6).prop_map(LaurentPolynomial::from_terms)
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row[k as usize].clone()
    }

    proptest! {
        #[test]
        fn gaussian_symmetries(m in 0u64..=8, n in 0u64..=8) {
            let g = gaussian_binomial(m, n).unwrap();
            prop_assert_eq!(&g, &gaussian_binomial(n, m).unwrap());
            prop_assert_eq!(&g.reciprocal_q().shift((m * n) as i64), &g);
            prop_assert_eq!(g.eval_at_one(), binomial(m + n, m));
            prop_assert!(g.all_coefficients_nonnegative());
        }

        #[test]
        fn inverse_pochhammer_inverts(m in 0u64..10, d in 0i64..15) {
            let inv = inverse_pochhammer_series(PochhammerOrder::Finite(m), d);
            let prod = &inv * &TruncatedSeries::from_poly(&q_pochhammer(m), d);
            prop_assert_eq!(prod, TruncatedSeries::one(d));
        }

        #[test]
        fn display_parses_back(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPolynomial>().unwrap(), a);
        }

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &LaurentPolynomial::one(), a.clone());
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a + &(-&a), LaurentPolynomial::zero());
        }

        #[test]
        fn exact_division_recovers_factor(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }
    }
}
