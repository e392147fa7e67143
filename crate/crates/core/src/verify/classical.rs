//! The classical rule `s_λ · p_k = Σ (−1)^(r(μ/λ) − 1) s_μ` over ribbons
//! `μ/λ` of size `k`, implemented without any of the Grothendieck
//! machinery: ribbons are found by sliding beads on the abacus of `λ`, and
//! Schur polynomials come straight from `det(x_i^(λ_j + n − j))`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::error::Result;
use crate::poly::{determinant, Poly};
use crate::shapes::Partition;

/// `s_λ(x1..xn)` as a ratio of alternants.
pub fn schur(lambda: &Partition, n: usize) -> Result<Poly> {
    lambda.check_fits(n)?;
    let alternant = |exponents: Vec<usize>| -> Result<Poly> {
        let m: Vec<Vec<Poly>> = (0..n)
            .map(|i| exponents.iter().map(|&e| Poly::var(n, i).pow(e as u32)).collect())
            .collect();
        determinant(&m, n)
    };
    let num = alternant((0..n).map(|j| lambda[j] + n - 1 - j).collect())?;
    let vandermonde = alternant((0..n).map(|j| n - 1 - j).collect())?;
    num.exact_div(&vandermonde)
}

/// Coefficients of `s_μ` in `s_λ · p_k` with `l(μ) ≤ n`.
///
/// With beads at `λ_i + n − i`, adding a ribbon of size `k` moves one bead
/// up by `k` onto an empty position; the height of the ribbon is the number
/// of beads jumped over.
pub fn ribbon_rule(lambda: &Partition, k: usize, n: usize) -> Result<BTreeMap<Partition, BigInt>> {
    lambda.check_fits(n)?;
    let beads: BTreeSet<usize> = (0..n).map(|i| lambda[i] + n - 1 - i).collect();
    let mut out = BTreeMap::new();
    for &bead in &beads {
        let target = bead + k;
        if beads.contains(&target) {
            continue;
        }
        let jumped = beads.range(bead + 1..target).count();
        let mut moved: Vec<usize> = beads.iter().copied().filter(|&b| b != bead).collect();
        moved.push(target);
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &b)| b - (n - 1 - i)).collect();
        let mu = Partition::new(parts)?;
        let sign = if jumped.is_multiple_of(2) { 1 } else { -1 };
        out.insert(mu, BigInt::from(sign));
    }
    Ok(out)
}
