//! Finite linear combinations of `G_μ` or `G̃_μ`, and their text, LaTeX and
//! JSON renderings.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::BetaCoeff;
use crate::shapes::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// `G_μ`, coefficients carry powers of `β`.
    G,
    /// `G̃_μ`, coefficients are plain integers.
    GTilde,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::G => "g",
            Basis::GTilde => "gtilde",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "g" => Ok(Basis::G),
            "gtilde" => Ok(Basis::GTilde),
            other => Err(Error::Parse(format!("unknown basis `{other}`"))),
        }
    }

    fn text_symbol(self) -> &'static str {
        match self {
            Basis::G => "G",
            Basis::GTilde => "Gt",
        }
    }

    fn latex_symbol(self) -> &'static str {
        match self {
            Basis::G => "G",
            Basis::GTilde => "\\widetilde{G}",
        }
    }
}

/// The symmetric polynomial multiplied onto the basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    PowerSum,
    Elementary,
    Complete,
}

impl Factor {
    pub fn tag(self) -> &'static str {
        match self {
            Factor::PowerSum => "p",
            Factor::Elementary => "e",
            Factor::Complete => "h",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "p" => Ok(Factor::PowerSum),
            "e" => Ok(Factor::Elementary),
            "h" => Ok(Factor::Complete),
            other => Err(Error::Parse(format!("unknown factor `{other}`"))),
        }
    }
}

/// `basis_λ · factor_k = Σ_μ coeff_μ · basis_μ` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    factor: Factor,
    lambda: Partition,
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, BetaCoeff>,
}

impl Expansion {
    pub fn new(basis: Basis, factor: Factor, lambda: Partition, k: usize, n: usize) -> Self {
        Expansion { basis, factor, lambda, k, n, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn factor(&self) -> Factor {
        self.factor
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Stores a nonzero coefficient; zero coefficients are dropped.
    ///
    /// Panics if `mu` already has a coefficient with a different β-power.
    pub fn insert(&mut self, mu: Partition, coeff: BetaCoeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&mu) {
            None => {
                self.terms.insert(mu, coeff);
            }
            Some(old) => {
                assert_eq!(old.beta_power(), coeff.beta_power(), "mixed beta powers for {mu}");
                let sum = BetaCoeff::new(old.coeff() + coeff.coeff(), coeff.beta_power());
                if !sum.is_zero() {
                    self.terms.insert(mu, sum);
                }
            }
        }
    }

    /// Terms sorted lexicographically by `μ`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BetaCoeff)> {
        self.terms.iter()
    }

    pub fn get(&self, mu: &Partition) -> Option<&BetaCoeff> {
        self.terms.get(mu)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The expansion at `β = 0`: only terms without a β factor survive.
    pub fn at_beta_zero(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .filter(|(_, c)| c.beta_power() == 0)
            .map(|(mu, c)| (mu.clone(), c.coeff().clone()))
            .collect()
    }

    /// Terms by size of `μ`, then reverse lexicographic order, which lists
    /// one-row shapes before one-column ones.
    fn display_order(&self) -> Vec<(&Partition, &BetaCoeff)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(mu, _)| (mu.size(), Reverse(*mu)));
        terms
    }

    /// `G_() * p_2 = G_(2) - G_(1,1) - b*G_(2,1) + b^2*G_(2,2)`
    pub fn to_text(&self) -> String {
        let symbol = self.basis.text_symbol();
        let mut out = format!("{symbol}_{} * {}_{} = ", self.lambda, self.factor.tag(), self.k);
        if self.is_empty() {
            out.push('0');
            return out;
        }
        for (idx, (mu, c)) in self.display_order().into_iter().enumerate() {
            push_sign(&mut out, idx, c.coeff());
            let mut factors = Vec::new();
            let magnitude = c.coeff().abs();
            if !magnitude.is_one() {
                factors.push(magnitude.to_string());
            }
            match c.beta_power() {
                0 => {}
                1 => factors.push("b".to_string()),
                d => factors.push(format!("b^{d}")),
            }
            factors.push(format!("{symbol}_{mu}"));
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// `G_{()} p_{2} = G_{(2)} - G_{(1,1)} - \beta G_{(2,1)} + \beta^{2} G_{(2,2)}`
    pub fn to_latex(&self) -> String {
        let symbol = self.basis.latex_symbol();
        let mut out = String::new();
        let _ = write!(
            out,
            "{symbol}_{{{}}} {}_{{{}}} = ",
            self.lambda,
            self.factor.tag(),
            self.k
        );
        if self.is_empty() {
            out.push('0');
            return out;
        }
        for (idx, (mu, c)) in self.display_order().into_iter().enumerate() {
            push_sign(&mut out, idx, c.coeff());
            let magnitude = c.coeff().abs();
            if !magnitude.is_one() {
                let _ = write!(out, "{magnitude}");
            }
            match c.beta_power() {
                0 => {}
                1 => out.push_str("\\beta"),
                d => {
                    let _ = write!(out, "\\beta^{{{d}}}");
                }
            }
            if !magnitude.is_one() || c.beta_power() > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{symbol}_{{{mu}}}");
        }
        out
    }

    fn to_dto(&self) -> Result<ExpansionJson> {
        let terms = self
            .terms
            .iter()
            .map(|(mu, c)| {
                Ok(TermJson {
                    mu: mu.parts().to_vec(),
                    coeff: c
                        .coeff()
                        .to_i64()
                        .ok_or_else(|| Error::CoefficientOverflow(c.coeff().to_string()))?,
                    beta_power: c.beta_power(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpansionJson {
            basis: self.basis.tag().to_string(),
            factor: match self.factor {
                Factor::PowerSum => None,
                f => Some(f.tag().to_string()),
            },
            lambda: self.lambda.parts().to_vec(),
            k: self.k,
            n: self.n,
            terms,
        })
    }

    pub fn to_json_value(&self) -> Result<serde_json::Value> {
        serde_json::to_value(self.to_dto()?).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Compact JSON, terms sorted lexicographically by `μ`.
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(&self.to_dto()?).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let dto: ExpansionJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let factor = match dto.factor.as_deref() {
            None => Factor::PowerSum,
            Some(tag) => Factor::from_tag(tag)?,
        };
        let mut out = Expansion::new(
            Basis::from_tag(&dto.basis)?,
            factor,
            Partition::new(dto.lambda)?,
            dto.k,
            dto.n,
        );
        for t in dto.terms {
            out.insert(Partition::new(t.mu)?, BetaCoeff::new(t.coeff, t.beta_power));
        }
        Ok(out)
    }
}

fn push_sign(out: &mut String, idx: usize, coeff: &BigInt) {
    match (idx, coeff.is_negative()) {
        (0, true) => out.push('-'),
        (0, false) => {}
        (_, true) => out.push_str(" - "),
        (_, false) => out.push_str(" + "),
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factor: Option<String>,
    lambda: Vec<usize>,
    k: usize,
    n: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    mu: Vec<usize>,
    coeff: i64,
    beta_power: u32,
}
