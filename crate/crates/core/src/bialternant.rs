//! Grothendieck polynomials of Grassmannian type from the bi-alternant
//! formula, and the classical symmetric-polynomial generators.
//!
//! `G_λ(x1..xn) = det(x_i^(λ_j + n − j) (1 + β x_i)^(j − 1)) / Π_{i<j} (x_i − x_j)`.
//!
//! These are the oracle polynomials against which every combinatorial
//! expansion is checked.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{determinant, Poly};
use crate::shapes::Partition;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroVariables)
    } else {
        Ok(())
    }
}

/// Divides by `Π_{i<j} (x_i − x_j)`, one linear factor at a time.
pub fn divide_by_vandermonde(p: &Poly) -> Result<Poly> {
    let n = p.arity();
    let mut q = p.clone();
    for i in 0..n {
        for j in i + 1..n {
            q = q.exact_div(&(&Poly::var(n, i) - &Poly::var(n, j)))?;
        }
    }
    Ok(q)
}

/// `G_λ(x1..xn)` with formal `β`.
pub fn grothendieck(lambda: &Partition, n: usize) -> Result<Poly> {
    lambda.check_fits(n)?;
    let one_plus_beta_x: Vec<Poly> = (0..n)
        .map(|i| &Poly::one(n) + &(&Poly::beta(n) * &Poly::var(n, i)))
        .collect();
    let matrix: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x_power = (lambda[j] + n - 1 - j) as u32;
                    &Poly::var(n, i).pow(x_power) * &one_plus_beta_x[i].pow(j as u32)
                })
                .collect()
        })
        .collect();
    divide_by_vandermonde(&determinant(&matrix, n)?)
}

/// `G̃_λ = β^|λ| G_λ(x/β)`, computed as the formal term map; the result is
/// free of `β`.
pub fn grothendieck_tilde(lambda: &Partition, n: usize) -> Result<Poly> {
    grothendieck(lambda, n)?.beta_rescale(lambda.size() as i64)
}

/// `e_k(x1..xn)`, zero when `k > n`.
pub fn elementary(k: usize, n: usize) -> Result<Poly> {
    check_n(n)?;
    // Coefficients of Π (1 + x_i t), built one variable at a time.
    let mut coeffs = vec![Poly::one(n)];
    for i in 0..n {
        let xi = Poly::var(n, i);
        let mut next = coeffs.clone();
        next.push(Poly::zero(n));
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] = &next[d + 1] + &(c * &xi);
        }
        coeffs = next;
    }
    Ok(coeffs.get(k).cloned().unwrap_or_else(|| Poly::zero(n)))
}

/// `h_k(x1..xn)`.
pub fn complete(k: usize, n: usize) -> Result<Poly> {
    check_n(n)?;
    // h_k(x1..xi) = h_k(x1..x(i-1)) + x_i h_(k-1)(x1..xi)
    let mut h: Vec<Poly> = (0..=k).map(|d| if d == 0 { Poly::one(n) } else { Poly::zero(n) }).collect();
    for i in 0..n {
        let xi = Poly::var(n, i);
        for d in 1..=k {
            h[d] = &h[d] + &(&h[d - 1] * &xi);
        }
    }
    Ok(h.swap_remove(k))
}

/// `p_k(x1..xn) = Σ x_i^k`.
pub fn powersum(k: usize, n: usize) -> Result<Poly> {
    check_n(n)?;
    if k == 0 {
        return Err(Error::ZeroPowerSum);
    }
    Ok((0..n).fold(Poly::zero(n), |acc, i| &acc + &Poly::var(n, i).pow(k as u32)))
}

/// The right-hand side `Σ_{i<k} (−1)^i (k − i) e_i h_(k−i)` of the power-sum
/// identity.
pub fn powersum_via_e_h(k: usize, n: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::ZeroPowerSum);
    }
    let mut acc = Poly::zero(n);
    for i in 0..k {
        let weight = BigInt::from(k - i) * if i % 2 == 0 { 1 } else { -1 };
        let term = &elementary(i, n)? * &complete(k - i, n)?;
        acc = &acc + &term.scalar_mul(&weight);
    }
    Ok(acc)
}

/// Checks `p_k = Σ_{i=0}^{k−1} (−1)^i (k − i) e_i h_(k−i)` as an exact
/// polynomial identity.
pub fn verify_powersum_identity(k: usize, n: usize) -> Result<bool> {
    Ok(powersum(k, n)? == powersum_via_e_h(k, n)?)
}
