//! Sparse multivariate polynomials in `x1..xn` and a formal parameter `β`
//! over arbitrary-precision integers.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is a
//! graded monomial order: total degree (x-block plus β) first, then the
//! x-exponent vector in descending lexicographic order, then the β exponent.
//! Iterating the map therefore yields the canonical serialization order,
//! and the last key is the leading monomial used by division.
//!
//! `β` is written `b` in the text form, e.g. `x1^2*x2 + x1*x2^2 + b*x1^2*x2^2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    beta: u32,
}

impl Monomial {
    pub fn new(x: Vec<u32>, beta: u32) -> Self {
        Monomial { x, beta }
    }

    pub fn one(n: usize) -> Self {
        Monomial { x: vec![0; n], beta: 0 }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn beta_exponent(&self) -> u32 {
        self.beta
    }

    pub fn arity(&self) -> usize {
        self.x.len()
    }

    /// Total degree in the x variables only.
    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.beta
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            beta: self.beta + other.beta,
        }
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let x = self
            .x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { x, beta: self.beta.checked_sub(other.beta)? })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `x1..xn` and `β` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        Poly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(arity, Monomial::one(arity), c)
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range for arity {arity}");
        let mut x = vec![0; arity];
        x[index] = 1;
        Self::monomial(arity, Monomial::new(x, 0), 1)
    }

    pub fn beta(arity: usize) -> Self {
        Self::monomial(arity, Monomial::new(vec![0; arity], 1), 1)
    }

    pub fn monomial(arity: usize, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(m.arity(), arity, "monomial arity mismatch");
        let mut p = Poly::zero(arity);
        p.add_term(m, c.into());
        p
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Poly::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: m.arity() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn contains_beta(&self) -> bool {
        self.terms.keys().any(|m| m.beta > 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    fn check_arity(&self, other: &Poly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = Poly::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one(self.arity);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `num / den` in `Z[x1..xn, β]`.
    ///
    /// Runs multivariate division by the leading term; any remainder is an
    /// error since a nonzero remainder means `den` does not divide `num`.
    pub fn exact_div(&self, den: &Poly) -> Result<Poly> {
        self.check_arity(den)?;
        let (lead_m, lead_c) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.arity);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lead_m).ok_or(Error::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (dm, dc) in &den.terms {
                rem.add_term(qm.mul(dm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Evaluates `β` at an integer, keeping the x variables formal.
    pub fn substitute_beta(&self, value: &BigInt) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let scale: BigInt = Pow::pow(value, m.beta);
            out.add_term(Monomial { x: m.x.clone(), beta: 0 }, c * scale);
        }
        out
    }

    /// The formal map `p ↦ β^d · p(x/β)`: each term `c·x^a·β^b` becomes
    /// `c·x^a·β^(d − |a| + b)`.
    pub fn beta_rescale(&self, degree: i64) -> Result<Poly> {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let e = degree - i64::from(m.x_degree()) + i64::from(m.beta);
            let beta = u32::try_from(e).map_err(|_| Error::NegativeBetaExponent { degree })?;
            out.add_term(Monomial { x: m.x.clone(), beta }, c.clone());
        }
        Ok(out)
    }

    /// Exchanges `x_{i+1}` and `x_{j+1}` (0-based indices).
    pub fn swap_vars(&self, i: usize, j: usize) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut x = m.x.clone();
            x.swap(i, j);
            out.add_term(Monomial { x, beta: m.beta }, c.clone());
        }
        out
    }

    /// Parses the text form produced by `Display` for a ring of the given arity.
    pub fn parse(s: &str, arity: usize) -> Result<Poly> {
        Parser::new(s, arity).parse()
    }
}

impl Add for &Poly {
    type Output = Poly;

    /// Panics on arity mismatch; see [`Poly::checked_add`].
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.beta {
            0 => {}
            1 => factors.push("b".to_string()),
            e => factors.push(format!("b^{e}")),
        }
        for (i, &e) in self.x.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", i + 1)),
                e => factors.push(format!("x{}^{e}", i + 1)),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    arity: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, arity: usize) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0, arity }
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.src[start..self.pos].parse().map_err(|_| self.error("bad number"))
    }

    fn small(&mut self) -> Result<u32> {
        let n = self.number()?;
        u32::try_from(n).map_err(|_| self.error("exponent out of range"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.small()
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut m = Monomial::one(self.arity);
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some(b'b') => {
                    self.pos += 1;
                    m.beta += self.exponent()?;
                }
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self.small()? as usize;
                    if idx == 0 || idx > self.arity {
                        return Err(self.error("variable index out of range"));
                    }
                    m.x[idx - 1] += self.exponent()?;
                }
                _ => return Err(self.error("expected a factor")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((m, coeff));
            }
        }
    }

    fn parse(mut self) -> Result<Poly> {
        let mut p = Poly::zero(self.arity);
        let mut sign = BigInt::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.error("empty input")),
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, sign * c);
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                Some(_) => return Err(self.error("expected `+` or `-`")),
            }
            self.pos += 1;
        }
    }
}

/// The integer `β`-monomial `coeff · β^beta_power` attached to a basis
/// element in an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BetaCoeff {
    coeff: BigInt,
    beta_power: u32,
}

impl BetaCoeff {
    /// A zero coefficient is normalized to `beta_power = 0`.
    pub fn new(coeff: impl Into<BigInt>, beta_power: u32) -> Self {
        let coeff = coeff.into();
        let beta_power = if coeff.is_zero() { 0 } else { beta_power };
        BetaCoeff { coeff, beta_power }
    }

    pub fn zero() -> Self {
        BetaCoeff::default()
    }

    pub fn integer(coeff: impl Into<BigInt>) -> Self {
        BetaCoeff::new(coeff, 0)
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    pub fn beta_power(&self) -> u32 {
        self.beta_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// `coeff · β^beta_power` as a constant polynomial of the given arity.
    pub fn to_poly(&self, arity: usize) -> Poly {
        Poly::monomial(arity, Monomial::new(vec![0; arity], self.beta_power), self.coeff.clone())
    }

    /// The value at `β = value`.
    pub fn at_beta(&self, value: &BigInt) -> BigInt {
        &self.coeff * Pow::pow(value, self.beta_power)
    }
}

impl fmt::Display for BetaCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.beta_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}*b", self.coeff),
            d => write!(f, "{}*b^{d}", self.coeff),
        }
    }
}

/// A square matrix of polynomials sharing one arity.
pub type PolyMatrix = Vec<Vec<Poly>>;

fn check_square(m: &[Vec<Poly>]) -> Result<usize> {
    let size = m.len();
    for row in m {
        if row.len() != size {
            return Err(Error::NotSquare { rows: size, cols: row.len() });
        }
    }
    if let Some(first) = m.first().and_then(|r| r.first()) {
        for entry in m.iter().flatten() {
            first.check_arity(entry)?;
        }
    }
    Ok(size)
}

/// Determinant by cofactor expansion for sizes up to 4, fraction-free
/// elimination above.
pub fn determinant(m: &[Vec<Poly>], arity: usize) -> Result<Poly> {
    if check_square(m)? <= 4 {
        determinant_cofactor(m, arity)
    } else {
        determinant_bareiss(m, arity)
    }
}

/// Laplace expansion along the first row.
pub fn determinant_cofactor(m: &[Vec<Poly>], arity: usize) -> Result<Poly> {
    let size = check_square(m)?;
    if let Some(entry) = m.first().and_then(|r| r.first()) {
        Poly::zero(arity).check_arity(entry)?;
    }
    fn expand(m: &[Vec<Poly>], rows: &[usize], cols: &[usize], arity: usize) -> Poly {
        if rows.is_empty() {
            return Poly::one(arity);
        }
        let row = rows[0];
        let mut acc = Poly::zero(arity);
        for (pos, &col) in cols.iter().enumerate() {
            let entry = &m[row][col];
            if entry.is_zero() {
                continue;
            }
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let minor = expand(m, &rows[1..], &minor_cols, arity);
            let term = entry * &minor;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let idx: Vec<usize> = (0..size).collect();
    Ok(expand(m, &idx, &idx, arity))
}

/// Bareiss fraction-free elimination; every intermediate division is exact.
pub fn determinant_bareiss(m: &[Vec<Poly>], arity: usize) -> Result<Poly> {
    let size = check_square(m)?;
    if let Some(entry) = m.first().and_then(|r| r.first()) {
        Poly::zero(arity).check_arity(entry)?;
    }
    if size == 0 {
        return Ok(Poly::one(arity));
    }
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one(arity);
    let mut negate = false;
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(arity)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i - 1)
    }

    fn b(n: usize) -> Poly {
        Poly::beta(n)
    }

    fn parse(s: &str, n: usize) -> Poly {
        Poly::parse(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 1), x(2, 2));
        assert_eq!(&(&x1 + &x2) * &(&x1 - &x2), parse("x1^2 - x2^2", 2));
    }

    #[test]
    fn additive_identity() {
        let p = parse("3*x1*x2 - b*x2^4 + 7", 2);
        assert_eq!(&Poly::zero(2) + &p, p);
    }

    #[test]
    fn grothendieck_one_times_p1() {
        let (x1, x2, beta) = (x(2, 1), x(2, 2), b(2));
        let g1 = &(&x1 + &x2) + &(&beta * &(&x1 * &x2));
        let lhs = &g1 * &(&x1 + &x2);
        assert_eq!(lhs, parse("x1^2 + 2*x1*x2 + x2^2 + b*x1^2*x2 + b*x1*x2^2", 2));
    }

    #[test]
    fn arity_mismatch() {
        assert_eq!(
            x(2, 1).checked_add(&x(3, 1)),
            Err(Error::ArityMismatch { left: 2, right: 3 })
        );
        assert!(x(2, 1).checked_mul(&x(1, 1)).is_err());
        assert!(x(2, 1).exact_div(&x(1, 1)).is_err());
    }

    #[test]
    fn exact_division() {
        let (x1, x2) = (x(2, 1), x(2, 2));
        let d = &x1 - &x2;
        assert_eq!(parse("x1^2 - x2^2", 2).exact_div(&d).unwrap(), &x1 + &x2);
        assert_eq!(parse("x1^3 - x2^3", 2).exact_div(&d).unwrap(), parse("x1^2 + x1*x2 + x2^2", 2));

        let num = parse("x1^3*x2 + b*x1^3*x2^2 - x1*x2^3 - b*x1^2*x2^3", 2);
        assert_eq!(
            num.exact_div(&d).unwrap(),
            parse("x1^2*x2 + x1*x2^2 + b*x1^2*x2^2", 2)
        );
    }

    #[test]
    fn division_failures() {
        let d = &x(2, 1) - &x(2, 2);
        assert_eq!(parse("x1^2 + x2^2", 2).exact_div(&d), Err(Error::NotDivisible));
        assert_eq!(parse("3*x1", 2).exact_div(&parse("2", 2)), Err(Error::NotDivisible));
        assert_eq!(x(2, 1).exact_div(&Poly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn two_by_two_determinant() {
        let m = vec![
            vec![parse("x1^3", 2), parse("x1 + b*x1^2", 2)],
            vec![parse("x2^3", 2), parse("x2 + b*x2^2", 2)],
        ];
        let expected = parse("x1^3*x2 + b*x1^3*x2^2 - x1*x2^3 - b*x1^2*x2^3", 2);
        assert_eq!(determinant(&m, 2).unwrap(), expected);
        assert_eq!(determinant_bareiss(&m, 2).unwrap(), expected);
    }

    #[test]
    fn trivial_determinants() {
        let id: Vec<Vec<Poly>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { Poly::one(2) } else { Poly::zero(2) }).collect())
            .collect();
        assert_eq!(determinant(&id, 2).unwrap(), Poly::one(2));
        assert_eq!(determinant_bareiss(&id, 2).unwrap(), Poly::one(2));

        let rep = vec![vec![x(2, 1), x(2, 2)], vec![x(2, 1), x(2, 2)]];
        assert!(determinant(&rep, 2).unwrap().is_zero());
        assert!(determinant_bareiss(&rep, 2).unwrap().is_zero());

        let ragged = vec![vec![x(2, 1), x(2, 2)], vec![x(2, 1)]];
        assert!(matches!(determinant(&ragged, 2), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        // [[0, 1], [1, 0]] has determinant −1.
        let m = vec![
            vec![Poly::zero(1), Poly::one(1)],
            vec![Poly::one(1), Poly::zero(1)],
        ];
        assert_eq!(determinant_bareiss(&m, 1).unwrap(), Poly::constant(1, -1));
    }

    #[test]
    fn beta_substitution() {
        let g21 = parse("x1^2*x2 + x1*x2^2 + b*x1^2*x2^2", 2);
        assert_eq!(g21.substitute_beta(&0.into()), parse("x1^2*x2 + x1*x2^2", 2));
        let plain = parse("x1 + 4*x2^3", 2);
        assert_eq!(plain.substitute_beta(&0.into()), plain);
        assert!(parse("x1 + b*x1", 2).substitute_beta(&(-1).into()).is_zero());
        assert_eq!(parse("b^2*x1", 1).substitute_beta(&3.into()), parse("9*x1", 1));
    }

    #[test]
    fn beta_rescaling() {
        let g21 = parse("x1^2*x2 + x1*x2^2 + b*x1^2*x2^2", 2);
        assert_eq!(g21.beta_rescale(3).unwrap(), parse("x1^2*x2 + x1*x2^2 + x1^2*x2^2", 2));
        assert_eq!(Poly::one(2).beta_rescale(0).unwrap(), Poly::one(2));
        assert_eq!(parse("b*x1", 1).beta_rescale(0).unwrap(), parse("x1", 1));
        assert_eq!(x(1, 1).beta_rescale(0), Err(Error::NegativeBetaExponent { degree: 0 }));
    }

    #[test]
    fn canonical_text() {
        let p = parse("b*x1^2*x2^2 + x1*x2^2 + x1^2*x2", 2);
        assert_eq!(p.to_string(), "x1^2*x2 + x1*x2^2 + b*x1^2*x2^2");
        assert_eq!(parse("-x1 + 2 - 3*b", 2).to_string(), "2 - x1 - 3*b");
        assert_eq!(Poly::zero(3).to_string(), "0");
        assert_eq!(Poly::constant(1, -5).to_string(), "-5");
        assert!(Poly::parse("x3", 2).is_err());
        assert!(Poly::parse("", 2).is_err());
        assert!(Poly::parse("x1 +", 2).is_err());
        assert!(Poly::parse("x1 x2", 2).is_err());
    }

    #[test]
    fn beta_coeff_normalization() {
        assert_eq!(BetaCoeff::new(0, 5), BetaCoeff::zero());
        let c = BetaCoeff::new(-1, 1);
        assert_eq!(c.to_string(), "-1*b");
        assert_eq!(c.to_poly(2), -&Poly::beta(2));
        assert_eq!(c.at_beta(&2.into()), BigInt::from(-2));
    }
}
