//! Integer partitions and Young-diagram statistics.
//!
//! Cells are addressed 1-based as `(row, column)`; for a cell `s = (i, j)` of
//! `k` the arm is `kᵢ − j`, the arm colength `j − 1`, the leg `k′ⱼ − i` and the
//! leg colength `i − 1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::rational::{factorial, int};
use crate::scalars::{Coupling, Rational, Scalar};

/// Non-increasing sequence of positive integers. Trailing zeros are never stored.
///
/// `Ord` is lexicographic on the parts. Restricted to one weight this is a
/// linear extension of dominance: `a ≥ b` in dominance implies `a ≥ b` here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Outcome of comparing two partitions of equal weight in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellStats {
    pub arm: usize,
    pub arm_colength: usize,
    pub leg: usize,
    pub leg_colength: usize,
}

/// Products over the cells of `k` of the upper hooks `l(s) + (1+a(s))/A` and
/// lower hooks `l(s) + 1 + a(s)/A`; `norm` is their product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookProducts {
    pub upper: Scalar,
    pub lower: Scalar,
    pub norm: Scalar,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates a non-increasing sequence of non-negative values and strips zeros.
    pub fn new(values: &[i64]) -> Result<Self> {
        if let Some(&neg) = values.iter().find(|&&v| v < 0) {
            return Err(Error::NegativePart(neg));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing(values.to_vec()));
        }
        Ok(Partition {
            parts: values.iter().filter(|&&v| v > 0).map(|&v| v as usize).collect(),
        })
    }

    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing(parts.iter().map(|&p| p as i64).collect()));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative values into a partition.
    pub fn sort_to_partition(values: &[i64]) -> Result<Self> {
        let mut v = values.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(&v)
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_k = Π i^{m_i} m_i!`, the power-sum norm factor.
    pub fn z(&self) -> Rational {
        self.multiplicities().into_iter().fold(int(1), |acc, (value, m)| {
            acc * num_traits::pow(int(value as i64), m) * factorial(m as u64)
        })
    }

    fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        if self.weight() != other.weight() {
            return Err(Error::UnequalWeight(self.weight(), other.weight()));
        }
        let len = self.len().max(other.len());
        let (a, b) = (self.prefix_sums(len), other.prefix_sums(len));
        let mut le = true;
        let mut ge = true;
        for (x, y) in a.iter().zip(&b) {
            le &= x <= y;
            ge &= x >= y;
        }
        Ok(match (le, ge) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `self ≤ other` in dominance (false for unequal weights).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(
            self.dominance_compare(other),
            Ok(Dominance::Less | Dominance::Equal)
        )
    }

    /// Cells `(i, j)` in row-major order, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    pub fn cell_stats(&self, row: usize, col: usize) -> Result<CellStats> {
        if row == 0 || col == 0 || row > self.len() || col > self.parts[row - 1] {
            return Err(Error::CellOutOfDiagram { row, col });
        }
        let column_height = self.parts.iter().take_while(|&&p| p >= col).count();
        Ok(CellStats {
            arm: self.parts[row - 1] - col,
            arm_colength: col - 1,
            leg: column_height - row,
            leg_colength: row - 1,
        })
    }

    fn all_cell_stats(&self) -> impl Iterator<Item = CellStats> + '_ {
        self.cells().map(|(i, j)| self.cell_stats(i, j).expect("cell inside diagram"))
    }

    /// Upper and lower hook products and their product, the Jack norm `j_k`.
    pub fn hook_products(&self, coupling: &Coupling) -> Result<HookProducts> {
        let inv_a = coupling.a_inverse()?;
        let mut upper = coupling.one();
        let mut lower = coupling.one();
        for s in self.all_cell_stats() {
            // l(s) + (1 + a(s))/A
            let up = coupling.int(s.leg as i64) + inv_a.scale(&int(1 + s.arm as i64));
            // l(s) + 1 + a(s)/A
            let low = coupling.int(s.leg as i64 + 1) + inv_a.scale(&int(s.arm as i64));
            upper = upper * up;
            lower = lower * low;
        }
        let norm = &upper * &lower;
        Ok(HookProducts { upper, lower, norm })
    }

    /// `Π (l′(s) + 1 + a(s)/A)`: the lower hook with the leg colength in place
    /// of the leg. Kept for comparison only; it is not the Jack norm factor
    /// once a row and a column both have length ≥ 2.
    pub fn lower_hook_product_colength(&self, coupling: &Coupling) -> Result<Scalar> {
        let inv_a = coupling.a_inverse()?;
        let mut acc = coupling.one();
        for s in self.all_cell_stats() {
            acc = acc * (coupling.int(s.leg_colength as i64 + 1) + inv_a.scale(&int(s.arm as i64)));
        }
        Ok(acc)
    }

    /// Both sides of `Σᵢ (i−1)kᵢ = Σⱼ C(k′ⱼ, 2)`.
    pub fn conjugation_identity(&self) -> (usize, usize) {
        let lhs = self.parts.iter().enumerate().map(|(i, &k)| i * k).sum();
        let rhs = self.conjugate().parts.iter().map(|&c| c * c.saturating_sub(1) / 2).sum();
        (lhs, rhs)
    }

    /// One row of `■` per part.
    pub fn young_diagram(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "■".repeat(p))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Comma-separated parts, e.g. `6,4,3,1`; empty string for the empty partition.
    pub fn label(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(d)?;
        Partition::new(&parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_with_max_len(n, n)
}

/// Partitions of `n` with at most `max_len` parts, in decreasing lexicographic order.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    fn go(rest: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// Orders equal-weight partitions for matrix indexing: larger in the
/// dominance-compatible total order first.
pub fn descending(a: &Partition, b: &Partition) -> Ordering {
    b.cmp(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::frac;
    use crate::scalars::{Poly, RatFunc};

    fn part(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn make_partition() {
        let k = part(&[6, 4, 3, 1]);
        assert_eq!((k.len(), k.weight()), (4, 14));
        let e = part(&[]);
        assert_eq!((e.len(), e.weight()), (0, 0));
        assert!(matches!(Partition::new(&[3, 5, 1]), Err(Error::NotNonIncreasing(_))));
        assert_eq!(Partition::new(&[2, -1]), Err(Error::NegativePart(-1)));
        assert_eq!(part(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert_eq!(Partition::sort_to_partition(&[1, 3, 0, 2]).unwrap(), part(&[3, 2, 1]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(part(&[6, 4, 3, 1]).conjugate(), part(&[4, 3, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[5, 5, 3, 1]).conjugate(), part(&[4, 3, 3, 2, 2]));
    }

    #[test]
    fn dominance_examples() {
        let cmp = |a: &[i64], b: &[i64]| part(a).dominance_compare(&part(b)).unwrap();
        assert_eq!(cmp(&[4, 4, 3, 3], &[6, 4, 3, 1]), Dominance::Less);
        assert_eq!(cmp(&[5, 5, 3, 1], &[6, 4, 2, 2]), Dominance::Incomparable);
        assert_eq!(cmp(&[2, 1], &[2, 1]), Dominance::Equal);
        assert_eq!(cmp(&[6, 4, 3, 1], &[4, 4, 3, 3]), Dominance::Greater);
        assert_eq!(
            part(&[2]).dominance_compare(&part(&[1])),
            Err(Error::UnequalWeight(2, 1))
        );
    }

    #[test]
    fn cell_statistics() {
        let k = part(&[6, 4, 3, 1]);
        assert_eq!(
            k.cell_stats(1, 1).unwrap(),
            CellStats { arm: 5, arm_colength: 0, leg: 3, leg_colength: 0 }
        );
        assert_eq!(
            part(&[1]).cell_stats(1, 1).unwrap(),
            CellStats { arm: 0, arm_colength: 0, leg: 0, leg_colength: 0 }
        );
        assert_eq!(
            part(&[2]).cell_stats(1, 2).unwrap(),
            CellStats { arm: 0, arm_colength: 1, leg: 0, leg_colength: 0 }
        );
        assert_eq!(k.cell_stats(4, 2), Err(Error::CellOutOfDiagram { row: 4, col: 2 }));
        assert_eq!(k.cell_stats(0, 1), Err(Error::CellOutOfDiagram { row: 0, col: 1 }));
        assert_eq!(k.cells().count(), 14);
    }

    #[test]
    fn hook_products_small() {
        let h = part(&[1]).hook_products(&Coupling::Fixed(int(3))).unwrap();
        assert_eq!(h.upper, Scalar::Rational(frac(1, 3)));
        assert_eq!(h.lower, Scalar::Rational(int(1)));
        assert_eq!(h.norm, Scalar::Rational(frac(1, 3)));

        // k = (2): (2/A)(1/A)(1 + 1/A) = 2(A+1)/A^3
        let h = part(&[2]).hook_products(&Coupling::Symbolic).unwrap();
        let expected = RatFunc::new(
            Poly::linear(int(2), int(2)),
            Poly::new(vec![int(0), int(0), int(0), int(1)]),
        )
        .unwrap();
        assert_eq!(h.norm, Scalar::Symbolic(expected));

        let e = Partition::empty().hook_products(&Coupling::Symbolic).unwrap();
        assert_eq!(e.norm, Coupling::Symbolic.one());

        assert_eq!(
            part(&[2, 1]).hook_products(&Coupling::Fixed(int(0))),
            Err(Error::ZeroCoupling)
        );
    }

    #[test]
    fn colength_variant_differs_from_leg_at_21() {
        let k = part(&[2, 1]);
        let c = Coupling::Symbolic;
        let leg = k.hook_products(&c).unwrap().lower;
        let colength = k.lower_hook_product_colength(&c).unwrap();
        // leg: (2 + 1/A)·1·1, colength: (1 + 1/A)·1·2
        assert_eq!(leg.eval(&int(1)).unwrap(), int(3));
        assert_eq!(colength.eval(&int(1)).unwrap(), int(4));
        // they agree on single rows and columns
        for k in [part(&[3]), part(&[1, 1, 1])] {
            assert_eq!(
                k.hook_products(&c).unwrap().lower,
                k.lower_hook_product_colength(&c).unwrap()
            );
        }
    }

    #[test]
    fn conjugation_identity_example() {
        assert_eq!(part(&[6, 4, 3, 1]).conjugation_identity(), (13, 13));
    }

    #[test]
    fn enumeration() {
        let p4: Vec<String> = partitions_of(4).iter().map(|p| p.label()).collect();
        assert_eq!(p4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(10).len(), 42);
        assert_eq!(partitions_with_max_len(6, 2).len(), 4);
    }

    #[test]
    fn z_factor() {
        assert_eq!(part(&[1]).z(), int(1));
        assert_eq!(part(&[2]).z(), int(2));
        assert_eq!(part(&[1, 1]).z(), int(2));
        // (2,2,1): 2^2 * 2! * 1 * 1! = 8
        assert_eq!(part(&[2, 2, 1]).z(), int(8));
    }

    #[test]
    fn young_rendering() {
        assert_eq!(part(&[3, 1]).young_diagram(), "■■■\n■");
        let json = serde_json::to_string(&part(&[6, 4, 3, 1])).unwrap();
        assert_eq!(json, "[6,4,3,1]");
    }
}
