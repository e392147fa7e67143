//! Binary tableaux and the Pieri rules for `G̃_λ · e_k` and `G̃_λ · h_k`.
//!
//! A binary tableau is a 0/1 filling of a skew shape in which the bottom
//! cell of every column holds 1. Both rules sum `(−1)^α₀(T)` over tableaux
//! with `α₁(T) = k`:
//!
//! * `e_k`: shapes `μ/λ` with `λ ≤ μ ≤ λ + (1^n)`;
//! * `h_k`: any `μ ⊇ λ` with `l(μ) ≤ n` and no two 1's in a column.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expansion::{Basis, Expansion, Factor};
use crate::poly::BetaCoeff;
use crate::shapes::{partitions_above, Cell, Partition, SkewShape};

/// `(α₀, α₁)`: the number of 0 and 1 entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Content {
    pub alpha0: usize,
    pub alpha1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryTableau {
    shape: SkewShape,
    ones: BTreeSet<Cell>,
}

impl BinaryTableau {
    /// `ones` lists the cells filled with 1; every other cell holds 0.
    pub fn new(shape: SkewShape, ones: BTreeSet<Cell>) -> Result<Self> {
        if let Some(cell) = ones.iter().find(|c| !shape.contains_cell(**c)) {
            return Err(Error::InvalidTableau(format!("{cell:?} lies outside {shape}")));
        }
        if let Some(cell) = shape.column_bottoms().into_iter().find(|c| !ones.contains(c)) {
            return Err(Error::InvalidTableau(format!("column bottom {cell:?} is not 1")));
        }
        Ok(BinaryTableau { shape, ones })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entry(&self, cell: Cell) -> Option<u8> {
        self.shape.contains_cell(cell).then(|| u8::from(self.ones.contains(&cell)))
    }

    pub fn filling(&self) -> BTreeMap<Cell, u8> {
        self.shape
            .cells()
            .into_iter()
            .map(|c| (c, u8::from(self.ones.contains(&c))))
            .collect()
    }

    pub fn content(&self) -> Content {
        let alpha1 = self.ones.len();
        Content { alpha0: self.shape.size() - alpha1, alpha1 }
    }

    /// `(−1)^α₀`
    pub fn sign(&self) -> i64 {
        if self.content().alpha0.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// One line per row; cells of the inner partition are drawn as `.`.
    pub fn render(&self) -> String {
        let outer = self.shape.outer();
        if outer.is_empty() {
            return "(empty)".to_string();
        }
        (1..=outer.length())
            .map(|row| {
                (1..=outer[row - 1])
                    .map(|col| match self.entry((row, col)) {
                        None => ".".to_string(),
                        Some(v) => v.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for BinaryTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All binary fillings of `shape` with exactly `alpha1` ones. With
/// `one_per_column`, each column holds a single 1, which is forced to sit at
/// the bottom.
fn fillings(shape: &SkewShape, alpha1: usize, one_per_column: bool) -> Vec<BinaryTableau> {
    let bottoms: BTreeSet<Cell> = shape.column_bottoms().into_iter().collect();
    if alpha1 < bottoms.len() {
        return Vec::new();
    }
    let mut free: Vec<Cell> = if one_per_column {
        Vec::new()
    } else {
        shape.cells().into_iter().filter(|c| !bottoms.contains(c)).collect()
    };
    // column by column, left to right
    free.sort_by_key(|&(row, col)| (col, row));
    let extra = alpha1 - bottoms.len();
    if extra > free.len() {
        return Vec::new();
    }

    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(extra);
    choose(&free, extra, 0, &mut chosen, &mut |picked| {
        let mut ones = bottoms.clone();
        ones.extend(picked.iter().copied());
        out.push(BinaryTableau { shape: shape.clone(), ones });
    });
    out
}

fn choose(items: &[Cell], k: usize, start: usize, chosen: &mut Vec<Cell>, emit: &mut dyn FnMut(&[Cell])) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..items.len() {
        if items.len() - i < need {
            break;
        }
        chosen.push(items[i]);
        choose(items, k, i + 1, chosen, emit);
        chosen.pop();
    }
}

/// Tableaux of the `e_k` rule: shapes `μ/λ` with `λ ≤ μ ≤ λ + (1^n)` and
/// `α₁ = k`, ordered by `μ`.
pub fn enumerate_e_tableaux(lambda: &Partition, k: usize, n: usize) -> Result<Vec<BinaryTableau>> {
    lambda.check_fits(n)?;
    let strip = lambda.plus_column(n);
    let mut out = Vec::new();
    for mu in partitions_above(lambda, lambda.first() + 1, n) {
        if !(0..n).all(|i| mu[i] <= strip[i]) {
            continue;
        }
        let shape = SkewShape::new(lambda.clone(), mu)?;
        out.extend(fillings(&shape, k, false));
    }
    Ok(out)
}

/// Tableaux of the `h_k` rule: `μ ⊇ λ`, `l(μ) ≤ n`, `α₁ = k` and no two 1's
/// in a column. Every column then holds exactly one 1, so `c(μ/λ) = k` and
/// `μ_1 ≤ λ_1 + k`.
pub fn enumerate_h_tableaux(lambda: &Partition, k: usize, n: usize) -> Result<Vec<BinaryTableau>> {
    lambda.check_fits(n)?;
    let mut out = Vec::new();
    for mu in partitions_above(lambda, lambda.first() + k, n) {
        let shape = SkewShape::new(lambda.clone(), mu)?;
        out.extend(fillings(&shape, k, true));
    }
    Ok(out)
}

fn signed_sum(tableaux: &[BinaryTableau], factor: Factor, lambda: &Partition, k: usize, n: usize) -> Expansion {
    let mut exp = Expansion::new(Basis::GTilde, factor, lambda.clone(), k, n);
    for t in tableaux {
        exp.insert(t.shape().outer().clone(), BetaCoeff::integer(BigInt::from(t.sign())));
    }
    exp
}

/// `G̃_λ · e_k` in the `G̃` basis.
pub fn pieri_e(lambda: &Partition, k: usize, n: usize) -> Result<Expansion> {
    Ok(signed_sum(&enumerate_e_tableaux(lambda, k, n)?, Factor::Elementary, lambda, k, n))
}

/// `G̃_λ · h_k` in the `G̃` basis.
pub fn pieri_h(lambda: &Partition, k: usize, n: usize) -> Result<Expansion> {
    Ok(signed_sum(&enumerate_h_tableaux(lambda, k, n)?, Factor::Complete, lambda, k, n))
}
