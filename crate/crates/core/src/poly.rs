//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`MultiPoly`] is a finite map from exponent vectors to nonzero `BigInt`
//! coefficients. Variables are named `x1..xN`; the exponent vector always has
//! length `num_vars`, so mixed-arity values cannot be combined silently.
//! The canonical term order is graded lexicographic, descending: higher total
//! degree first, ties broken lexicographically on the exponent vector. This
//! order fixes display, hashing and the serialized forms.
//!
//! Two formats are supported:
//!
//! * text: terms joined by ` + ` / ` - `, a term rendered as
//!   `c*x1^a*x2^b` with `^1` and a unit coefficient elided, constants bare,
//!   e.g. `x1^2*x2 - 3*x1*x2 + 1`;
//! * JSON: `{"vars": n, "terms": [{"c": "<decimal string>", "e": [a1,...,an]}]}`
//!   with terms in canonical order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exponent vector ordered graded-lex ascending; display iterates in reverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse exact multivariate polynomial over the integers.
///
/// Invariants: no stored coefficient is zero, every exponent vector has
/// length `num_vars`, and equality of values is equality of term maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial: an empty term map. `num_vars` is still tracked.
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(num_vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; num_vars]), c);
        }
        p
    }

    /// The variable `x{idx+1}` (0-based index, displayed 1-based).
    pub fn var(num_vars: usize, idx: usize) -> Self {
        assert!(idx < num_vars, "variable index {idx} out of range for {num_vars} variables");
        let mut exps = vec![0; num_vars];
        exps[idx] = 1;
        Self::monomial(num_vars, BigInt::one(), exps)
    }

    /// A single term `c * x1^e1 * ... * xn^en`.
    pub fn monomial(num_vars: usize, c: impl Into<BigInt>, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector length mismatch");
        let mut p = Self::zero(num_vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// zeros so the result is canonical.
    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(num_vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), num_vars, "exponent vector length mismatch");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.0.iter().all(|&e| e == 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximum total degree over all terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Terms in canonical (graded-lex descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(
            self.num_vars, other.num_vars,
            "variable count mismatch: {} vs {}",
            self.num_vars, other.num_vars
        );
    }

    /// Canonical sum. Panics on variable-count mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.check_arity(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_arity(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Canonical product. Panics on variable-count mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_arity(other);
        let mut out = Self::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.num_vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact integer value of the polynomial at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.num_vars, "evaluation point length mismatch");
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term *= point[i].pow(e);
                }
            }
            acc += term;
        }
        acc
    }

    /// Exact division: returns `q` with `q * divisor == self`.
    ///
    /// Division proceeds by recursive single-main-variable long division; the
    /// main variable is the highest-indexed variable present in the divisor.
    /// A nonzero remainder is reported as [`Error::InexactDivision`], never
    /// truncated.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        self.check_arity(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.num_vars));
        }
        match divisor.main_var() {
            None => {
                // Constant divisor: divide every coefficient exactly.
                let c = divisor.terms.values().next().expect("nonzero constant");
                let mut out = Self::zero(self.num_vars);
                for (m, k) in &self.terms {
                    let q = k / c;
                    if &q * c != *k {
                        return Err(Error::InexactDivision);
                    }
                    out.terms.insert(m.clone(), q);
                }
                Ok(out)
            }
            Some(v) => {
                let d_deg = divisor.degree_in(v);
                let d_lead = divisor.coeff_of_power(v, d_deg);
                let mut rem = self.clone();
                let mut quot = Self::zero(self.num_vars);
                while !rem.is_zero() {
                    let r_deg = rem.degree_in(v);
                    if r_deg < d_deg {
                        return Err(Error::InexactDivision);
                    }
                    let r_lead = rem.coeff_of_power(v, r_deg);
                    let t = r_lead.exact_div(&d_lead)?;
                    let t_shifted = t.mul_var_power(v, r_deg - d_deg);
                    rem = rem.sub(&t_shifted.mul(divisor));
                    quot = quot.add(&t_shifted);
                }
                Ok(quot)
            }
        }
    }

    /// Highest-indexed variable that appears with a positive exponent.
    fn main_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|m| m.0.iter().rposition(|&e| e > 0))
            .max()
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    /// Terms whose exponent in `v` equals `d`, with that exponent cleared.
    fn coeff_of_power(&self, v: usize, d: u32) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (m, c) in &self.terms {
            if m.0[v] == d {
                let mut exps = m.0.clone();
                exps[v] = 0;
                out.terms.insert(Monomial(exps), c.clone());
            }
        }
        out
    }

    fn mul_var_power(&self, v: usize, d: u32) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps[v] += d;
            out.terms.insert(Monomial(exps), c.clone());
        }
        out
    }

    /// Parses the text format produced by `Display`.
    ///
    /// Whitespace is ignored; variables must be `x1..x{num_vars}`.
    pub fn parse(input: &str, num_vars: usize) -> Result<Self, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial string".into()));
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut poly = Self::zero(num_vars);
        let mut negative = false;
        if bytes[pos] == b'-' {
            negative = true;
            pos += 1;
        } else if bytes[pos] == b'+' {
            pos += 1;
        }
        loop {
            let (exps, coeff, next) = parse_term(bytes, pos, num_vars)?;
            let c = if negative { -coeff } else { coeff };
            poly.add_term(Monomial(exps), c);
            pos = next;
            if pos == bytes.len() {
                break;
            }
            match bytes[pos] {
                b'+' => negative = false,
                b'-' => negative = true,
                other => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' at byte {pos}, found '{}'",
                        other as char
                    )))
                }
            }
            pos += 1;
        }
        Ok(poly)
    }
}

fn parse_term(bytes: &[u8], mut pos: usize, num_vars: usize) -> Result<(Vec<u32>, BigInt, usize), Error> {
    let mut exps = vec![0u32; num_vars];
    let mut coeff: Option<BigInt> = None;
    let mut saw_factor = false;
    loop {
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            if coeff.is_some() || saw_factor {
                return Err(Error::Parse(format!("unexpected digits at byte {pos}")));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = std::str::from_utf8(&bytes[start..pos]).expect("ascii digits");
            coeff = Some(digits.parse::<BigInt>().expect("digits parse as BigInt"));
        } else if pos < bytes.len() && bytes[pos] == b'x' {
            pos += 1;
            let (idx, next) = parse_number(bytes, pos)?;
            pos = next;
            if idx == 0 || idx as usize > num_vars {
                return Err(Error::Parse(format!(
                    "variable x{idx} out of range for {num_vars} variables"
                )));
            }
            let mut exp = 1u32;
            if pos < bytes.len() && bytes[pos] == b'^' {
                let (e, next) = parse_number(bytes, pos + 1)?;
                exp = e;
                pos = next;
            }
            exps[idx as usize - 1] += exp;
            saw_factor = true;
        } else {
            return Err(Error::Parse(format!("expected a coefficient or variable at byte {pos}")));
        }
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            continue;
        }
        break;
    }
    let c = coeff.unwrap_or_else(BigInt::one);
    Ok((exps, c, pos))
}

fn parse_number(bytes: &[u8], mut pos: usize) -> Result<(u32, usize), Error> {
    let start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if start == pos {
        return Err(Error::Parse(format!("expected digits at byte {start}")));
    }
    let digits = std::str::from_utf8(&bytes[start..pos]).expect("ascii digits");
    let value = digits
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("number too large at byte {start}")))?;
    Ok((value, pos))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let is_const = m.0.iter().all(|&e| e == 0);
            if is_const {
                write!(f, "{abs}")?;
            } else {
                let mut lead = if abs.is_one() {
                    false
                } else {
                    write!(f, "{abs}")?;
                    true
                };
                for (v, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if lead {
                        write!(f, "*")?;
                    }
                    lead = true;
                    write!(f, "x{}", v + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.num_vars,
            terms: self
                .terms()
                .map(|(e, c)| TermRepr {
                    c: c.to_string(),
                    e: e.to_vec(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut poly = MultiPoly::zero(repr.vars);
        for term in repr.terms {
            if term.e.len() != repr.vars {
                return Err(D::Error::custom(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    term.e.len(),
                    repr.vars
                )));
            }
            let c = term
                .c
                .parse::<BigInt>()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", term.c)))?;
            poly.add_term(Monomial(term.e), c);
        }
        Ok(poly)
    }
}
