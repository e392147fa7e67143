//! Murnaghan–Nakayama rule for Grassmannian Grothendieck polynomials.
//!
//! For `k ≥ 1`,
//!
//! ```text
//! G_λ · p_k = Σ_μ (−β)^(|μ/λ| − k) (−1)^(k − c) C(r − 1, k − c) G_μ
//! G̃_λ · p_k = Σ_μ (−1)^(|μ/λ| − c) C(r − 1, k − c) G̃_μ
//! ```
//!
//! with `r`, `c` the rows and columns of `μ/λ`, summed over `μ ⊇ λ` with
//! `l(μ) ≤ n`, `μ/λ` connected, `c ≤ k` and `r + c − 1 ≥ k`.
//!
//! Besides the closed form, this module evaluates the intermediate count
//! over composite tableaux, expressed through the cell sets
//!
//! * `B`: the bottom cell of each column of `μ/λ`;
//! * `γ = B ∩ (λ + (1^n))/λ`;
//! * `η = ((λ + (1^n))/λ ∩ μ/λ) \ γ`;
//!
//! which must agree with the closed form for every `μ`, connected or not.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansion::{Basis, Expansion, Factor};
use crate::poly::BetaCoeff;
use crate::shapes::{contains, enumerate_mu, Cell, Partition, SkewShape};

/// Cardinalities of `γ`, `η` and `B` for a nonempty `μ/λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StripGeometry {
    pub gamma_size: usize,
    pub eta_size: usize,
    pub b_size: usize,
}

/// `C(a, b)`, zero outside `0 ≤ b ≤ a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    (0..b).fold(BigInt::one(), |acc, i| acc * (a - i) / (i + 1))
}

fn sign(exponent: i64) -> BigInt {
    if exponent.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn skew(lambda: &Partition, mu: &Partition, n: usize) -> Result<SkewShape> {
    lambda.check_fits(n)?;
    mu.check_fits(n)?;
    if !contains(lambda, mu) {
        return Err(Error::NotContained { inner: lambda.to_string(), outer: mu.to_string() });
    }
    SkewShape::new(lambda.clone(), mu.clone())
}

pub fn strip_geometry(lambda: &Partition, mu: &Partition, n: usize) -> Result<StripGeometry> {
    let shape = skew(lambda, mu, n)?;
    if shape.is_empty() {
        return Err(Error::EmptyShape(shape.to_string()));
    }
    let strip: Vec<Cell> = (1..=n).map(|i| (i, lambda[i - 1] + 1)).collect();
    let bottoms = shape.column_bottoms();
    let gamma: Vec<Cell> = bottoms.iter().copied().filter(|c| strip.contains(c)).collect();
    let eta_size = strip
        .iter()
        .filter(|c| shape.contains_cell(**c) && !gamma.contains(c))
        .count();
    Ok(StripGeometry { gamma_size: gamma.len(), eta_size, b_size: bottoms.len() })
}

/// `Σ_{j=c−γ}^{c} (−1)^(c−j) j C(γ, c−j)`, which is 1 for `γ = 1` and 0 for
/// `γ > 1`.
pub fn binomial_lemma_sum(c: i64, gamma: i64) -> BigInt {
    (c - gamma..=c)
        .map(|j| sign(c - j) * BigInt::from(j) * binomial(gamma, c - j))
        .sum()
}

fn closed_form(shape: &SkewShape, k: usize) -> Option<(BigInt, u32)> {
    if !shape.is_connected() {
        return None;
    }
    let (r, c, size) = (shape.rows(), shape.cols(), shape.size());
    if c > k || r + c - 1 < k {
        return None;
    }
    let coeff = sign((size - c) as i64) * binomial((r - 1) as i64, (k - c) as i64);
    Some((coeff, (size - k) as u32))
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroPowerSum)
    } else {
        Ok(())
    }
}

/// Coefficient of `G_μ` in `G_λ · p_k`: `(−1)^(|μ/λ| − c) C(r − 1, k − c)`
/// times `β^(|μ/λ| − k)`, or zero when `μ` is outside the index set.
pub fn mn_coefficient(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<BetaCoeff> {
    check_k(k)?;
    let shape = skew(lambda, mu, n)?;
    Ok(closed_form(&shape, k)
        .map(|(c, d)| BetaCoeff::new(c, d))
        .unwrap_or_default())
}

/// Coefficient of `G̃_μ` in `G̃_λ · p_k`; always a plain integer.
pub fn mn_coefficient_tilde(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<BetaCoeff> {
    let c = mn_coefficient(lambda, mu, k, n)?;
    Ok(BetaCoeff::integer(c.coeff().clone()))
}

/// The `G̃`-basis coefficient evaluated before the binomial lemma collapses
/// it: `Σ_j (−1)^(|μ/λ| − j) j C(|γ|, c − j) C(|η|, k − c)`.
pub fn mn_coefficient_jsum(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<BetaCoeff> {
    check_k(k)?;
    let shape = skew(lambda, mu, n)?;
    if shape.is_empty() {
        // No tableau on the empty shape has α₁ = k ≥ 1.
        return Ok(BetaCoeff::zero());
    }
    let geo = strip_geometry(lambda, mu, n)?;
    let c = shape.cols() as i64;
    let size = shape.size() as i64;
    let gamma = geo.gamma_size as i64;
    let eta_choices = binomial(geo.eta_size as i64, k as i64 - c);
    let total: BigInt = (c - gamma..=c)
        .map(|j| sign(size - j) * BigInt::from(j) * binomial(gamma, c - j))
        .sum::<BigInt>()
        * eta_choices;
    Ok(BetaCoeff::integer(total))
}

/// The full expansion of `G_λ · p_k` (or `G̃_λ · p_k`), terms keyed by `μ`.
pub fn mn_expand(lambda: &Partition, k: usize, n: usize, basis: Basis) -> Result<Expansion> {
    let mut exp = Expansion::new(basis, Factor::PowerSum, lambda.clone(), k, n);
    for mu in enumerate_mu(lambda, k, n)? {
        let coeff = match basis {
            Basis::G => mn_coefficient(lambda, &mu, k, n)?,
            Basis::GTilde => mn_coefficient_tilde(lambda, &mu, k, n)?,
        };
        debug_assert!(!coeff.is_zero(), "zero coefficient inside the index set at {mu}");
        exp.insert(mu, coeff);
    }
    Ok(exp)
}
