//! Partitions, skew Young diagrams and the shape statistics used by the
//! expansion rules.
//!
//! Diagrams use English notation. Cells are `(row, col)` pairs, both
//! 1-indexed, so the skew diagram `μ/λ` holds `(i, j)` exactly when
//! `λ_i < j ≤ μ_i`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell `(row, col)` of a Young diagram, 1-indexed.
pub type Cell = (usize, usize);

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction, so `(3,3,2,1,0,0)` and
/// `(3,3,2,1)` are the same value. Ordering is lexicographic on the parts.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self[0]
    }

    /// Parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self[i]).collect()
    }

    /// `λ + (1^n)`.
    pub fn plus_column(&self, n: usize) -> Partition {
        Partition { parts: (0..n).map(|i| self[i] + 1).collect() }
    }

    /// Fails unless `l(λ) ≤ n` and `n ≥ 1`.
    pub fn check_fits(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroVariables);
        }
        if self.length() > n {
            return Err(Error::LengthExceeds {
                partition: self.to_string(),
                len: self.length(),
                n,
            });
        }
        Ok(())
    }

    /// The partition as comma-separated parts, the inverse of [`FromStr`].
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// 0-indexed part; missing parts read as 0.
    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,3,2,1`. The empty string and `0` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// `λ ≤ μ`: every part of `λ` is at most the matching part of `μ`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    (0..lambda.length()).all(|i| lambda[i] <= mu[i])
}

/// The skew diagram `μ/λ` for `λ ≤ μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    inner: Partition,
    outer: Partition,
}

impl SkewShape {
    pub fn new(inner: Partition, outer: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { inner, outer })
    }

    /// The straight shape `μ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { inner: Partition::empty(), outer }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// `|μ/λ| = |μ| − |λ|`
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && self.inner[i - 1] < j && j <= self.outer[i - 1]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.length())
            .flat_map(|r| (self.inner[r] + 1..=self.outer[r]).map(move |c| (r + 1, c)))
            .collect()
    }

    /// `r(μ/λ)`: rows holding at least one cell.
    pub fn rows(&self) -> usize {
        (0..self.outer.length())
            .filter(|&r| self.outer[r] > self.inner[r])
            .count()
    }

    /// `c(μ/λ)`: columns holding at least one cell.
    pub fn cols(&self) -> usize {
        self.cells().into_iter().map(|(_, c)| c).collect::<BTreeSet<_>>().len()
    }

    /// The lowest cell of every occupied column, left to right.
    pub fn column_bottoms(&self) -> Vec<Cell> {
        let mut bottoms: Vec<Cell> = Vec::new();
        for col in 1..=self.outer.first() {
            let bottom = (1..=self.outer.length())
                .rev()
                .find(|&row| self.contains_cell((row, col)));
            if let Some(row) = bottom {
                bottoms.push((row, col));
            }
        }
        bottoms
    }

    /// Number of edge-connected components, by flood fill.
    pub fn components(&self) -> usize {
        let cells: HashSet<Cell> = self.cells().into_iter().collect();
        let mut seen: HashSet<Cell> = HashSet::new();
        let mut count = 0;
        for &start in &cells {
            if !seen.insert(start) {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            while let Some((i, j)) = queue.pop_front() {
                let neighbours = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
                for nb in neighbours {
                    if cells.contains(&nb) && seen.insert(nb) {
                        queue.push_back(nb);
                    }
                }
            }
        }
        count
    }

    /// Nonempty and edge-connected. The empty shape counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// Connected with no 2×2 block of cells.
    pub fn is_ribbon(&self) -> bool {
        self.is_connected()
            && !self.cells().into_iter().any(|(i, j)| {
                self.contains_cell((i, j + 1))
                    && self.contains_cell((i + 1, j))
                    && self.contains_cell((i + 1, j + 1))
            })
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyShape(self.to_string()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected(self.to_string()));
        }
        Ok(())
    }

    /// Size of the maximal ribbon along the northwest border, `r + c − 1`.
    pub fn max_nw_ribbon_size(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self.rows() + self.cols() - 1)
    }

    /// The cells `(i, j)` whose diagonal neighbour `(i−1, j−1)` lies outside
    /// the shape, returned as a skew shape with the same inner partition.
    pub fn nw_border_trace(&self) -> Result<SkewShape> {
        self.require_connected()?;
        let mut counts = vec![0usize; self.outer.length()];
        for (i, j) in self.cells() {
            if !self.contains_cell((i - 1, j.wrapping_sub(1))) {
                counts[i - 1] += 1;
            }
        }
        let parts = counts
            .iter()
            .enumerate()
            .map(|(r, &extra)| self.inner[r] + extra)
            .collect();
        let outer = Partition::new(parts)?;
        let trace = SkewShape::new(self.inner.clone(), outer)?;
        debug_assert!(trace
            .cells()
            .into_iter()
            .all(|(i, j)| self.contains_cell((i, j)) && !self.contains_cell((i - 1, j.wrapping_sub(1)))));
        Ok(trace)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Every partition `μ` with `λ ≤ μ`, `l(μ) ≤ n` and `μ_1 ≤ max_first`, in
/// lexicographic order.
pub fn partitions_above(lambda: &Partition, max_first: usize, n: usize) -> Vec<Partition> {
    fn extend(
        lambda: &Partition,
        n: usize,
        row: usize,
        cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == n {
            out.push(Partition::new(current.clone()).expect("weakly decreasing by construction"));
            return;
        }
        for part in lambda[row]..=cap {
            current.push(part);
            extend(lambda, n, row + 1, part, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    if lambda.length() > n || lambda.first() > max_first {
        return out;
    }
    extend(lambda, n, 0, max_first, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// Every partition fitting in a `max_len × max_part` box, in lexicographic order.
pub fn partitions_in_box(max_part: usize, max_len: usize) -> Vec<Partition> {
    partitions_above(&Partition::empty(), max_part, max_len)
}

/// The index set of the expansion of `G_λ · p_k`: every `μ ⊇ λ` with
/// `l(μ) ≤ n`, `μ/λ` connected, `c(μ/λ) ≤ k` and a northwest border ribbon
/// of size at least `k`. Sorted lexicographically.
pub fn enumerate_mu(lambda: &Partition, k: usize, n: usize) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::ZeroPowerSum);
    }
    lambda.check_fits(n)?;
    // Columns λ_1+1..μ_1 are all occupied, so μ_1 − λ_1 ≤ c(μ/λ) ≤ k.
    Ok(partitions_above(lambda, lambda.first() + k, n)
        .into_iter()
        .filter(|mu| {
            let shape = SkewShape { inner: lambda.clone(), outer: mu.clone() };
            shape.is_connected() && shape.cols() <= k && shape.rows() + shape.cols() > k
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(inner: &[usize], outer: &[usize]) -> SkewShape {
        SkewShape::new(p(inner), p(outer)).unwrap()
    }

    #[test]
    fn partition_canonical_form() {
        let lambda = p(&[3, 3, 2, 1, 0, 0]);
        assert_eq!(lambda.parts(), &[3, 3, 2, 1]);
        assert_eq!(lambda.length(), 4);
        assert_eq!(lambda.size(), 9);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn partition_text_format() {
        assert_eq!("3,3,2,1".parse::<Partition>().unwrap(), p(&[3, 3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_csv().parse::<Partition>().unwrap(), p(&[3, 1]));
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[3, 3, 2, 1]), &p(&[4, 3, 3, 3, 1, 1])));
        assert!(contains(&p(&[2, 1]), &p(&[2, 1])));
        assert!(!contains(&p(&[2, 2]), &p(&[3, 1])));
        assert!(SkewShape::new(p(&[2, 2]), p(&[3, 1])).is_err());
    }

    #[test]
    fn statistics_of_the_six_row_example() {
        let s = skew(&[3, 3, 2, 1], &[4, 3, 3, 3, 1, 1]);
        assert_eq!(s.rows(), 5);
        assert_eq!(s.cols(), 4);
        assert_eq!(s.size(), 6);
        assert!(!s.is_connected());
        assert!(!s.is_ribbon());
        assert_eq!(s.components(), 3);
        assert_eq!(s.column_bottoms(), vec![(6, 1), (4, 2), (4, 3), (1, 4)]);
    }

    #[test]
    fn connectivity_and_ribbons() {
        let single = skew(&[], &[1]);
        assert!(single.is_connected());
        assert!(single.is_ribbon());

        let hook = skew(&[1], &[2, 2]);
        assert_eq!(hook.cells(), vec![(1, 2), (2, 1), (2, 2)]);
        assert!(hook.is_connected());
        assert!(hook.is_ribbon());

        assert!(!skew(&[], &[2, 2]).is_ribbon());
        assert!(skew(&[], &[2, 2]).is_connected());
        assert!(!skew(&[2], &[3, 2]).is_connected());
        assert!(!skew(&[1], &[1]).is_connected());
    }

    #[test]
    fn max_ribbon_size() {
        assert_eq!(skew(&[1], &[2, 2]).max_nw_ribbon_size().unwrap(), 3);
        assert_eq!(skew(&[], &[1]).max_nw_ribbon_size().unwrap(), 1);
        assert!(matches!(
            skew(&[2], &[3, 2]).max_nw_ribbon_size(),
            Err(Error::Disconnected(_))
        ));
        assert!(matches!(skew(&[2], &[2]).max_nw_ribbon_size(), Err(Error::EmptyShape(_))));
    }

    #[test]
    fn nw_trace() {
        let single = skew(&[], &[1]);
        assert_eq!(single.nw_border_trace().unwrap(), single);

        let trace = skew(&[1, 1], &[3, 3]).nw_border_trace().unwrap();
        assert_eq!(trace.cells(), vec![(1, 2), (1, 3), (2, 2)]);
        assert!(trace.is_ribbon());

        let fat = skew(&[1], &[3, 3]);
        let trace = fat.nw_border_trace().unwrap();
        assert_eq!(trace.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert_eq!(trace.size(), fat.max_nw_ribbon_size().unwrap());
        assert!(skew(&[3], &[4, 3, 1]).nw_border_trace().is_err());
    }

    #[test]
    fn straight_shapes_are_connected() {
        for mu in partitions_in_box(4, 4).into_iter().filter(|m| !m.is_empty()) {
            assert!(SkewShape::straight(mu).is_connected());
        }
    }

    #[test]
    fn enumerate_mu_examples() {
        assert_eq!(
            enumerate_mu(&Partition::empty(), 2, 2).unwrap(),
            vec![p(&[1, 1]), p(&[2]), p(&[2, 1]), p(&[2, 2])]
        );
        assert_eq!(enumerate_mu(&p(&[1]), 1, 2).unwrap(), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(enumerate_mu(&p(&[1]), 1, 1).unwrap(), vec![p(&[2])]);
        assert_eq!(enumerate_mu(&p(&[1]), 0, 1), Err(Error::ZeroPowerSum));
        assert!(matches!(enumerate_mu(&p(&[2, 1]), 1, 1), Err(Error::LengthExceeds { .. })));
    }

    #[test]
    fn box_enumeration_counts() {
        // C(a+b, b) partitions fit in an a×b box.
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 1).len(), 4);
    }
}
