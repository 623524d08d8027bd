//! The Hamiltonian `H̃ = H₀ + A·H₁` as an upper-triangular matrix on a sector.
//!
//! Matrix coefficients always come from the oracle. The closed-form action of
//! `H₁` on permutation-sum kets and the path-weight formula for off-diagonal
//! elements are provided alongside for comparison.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{apply_h0, apply_h1, decompose_in_monomials, expand_monomial_state};
use crate::scalars::rational::int;
use crate::scalars::{Coupling, Rational, Scalar};
use crate::states::{SectorState, SqueezeGraph};

/// `E⁰ = Σ nⱼ² + A Σ_{j<k}(nⱼ − n_k)`, in units of `π²/L²`.
pub fn diagonal_energy(state: &SectorState, coupling: &Coupling) -> Scalar {
    coupling.linear(int(state.square_sum()), int(state.gap_sum()))
}

/// Coefficients of `H₀ m_s` and `H₁ m_s` in the monomial basis, from the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialImage {
    pub h0: BTreeMap<SectorState, Rational>,
    pub h1: BTreeMap<SectorState, Rational>,
}

impl MonomialImage {
    /// Every state with a nonzero coefficient in either part.
    pub fn support(&self) -> impl Iterator<Item = &SectorState> {
        let mut all: Vec<&SectorState> = self.h0.keys().chain(self.h1.keys()).collect();
        all.sort();
        all.dedup();
        all.into_iter()
    }

    /// `h0[t] + A·h1[t]`
    pub fn coefficient(&self, target: &SectorState, coupling: &Coupling) -> Scalar {
        let get = |m: &BTreeMap<SectorState, Rational>| m.get(target).cloned().unwrap_or_else(Rational::zero);
        coupling.linear(get(&self.h0), get(&self.h1))
    }
}

pub fn monomial_image(state: &SectorState) -> Result<MonomialImage> {
    let m = expand_monomial_state(state)?;
    Ok(MonomialImage {
        h0: decompose_in_monomials(&apply_h0(&m))?,
        h1: decompose_in_monomials(&apply_h1(&m)?)?,
    })
}

/// Upper-triangular Hamiltonian on an ordered basis.
///
/// Row `r` holds the image of basis state `r`: entry `(r, c)` is the
/// coefficient of `m_c` in `H̃ m_r`. With the basis in descending order every
/// image lands at `c ≥ r`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriMatrix {
    basis: Vec<SectorState>,
    coupling: Coupling,
    entries: BTreeMap<(usize, usize), Scalar>,
}

#[derive(Serialize)]
struct EntryWire<'a> {
    r: usize,
    c: usize,
    value: &'a Scalar,
}

#[derive(Serialize)]
struct TriMatrixWire<'a> {
    basis: &'a [SectorState],
    entries: Vec<EntryWire<'a>>,
}

impl Serialize for TriMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriMatrixWire {
            basis: &self.basis,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), value)| EntryWire { r, c, value })
                .collect(),
        }
        .serialize(s)
    }
}

impl TriMatrix {
    pub fn basis(&self) -> &[SectorState] {
        &self.basis
    }

    pub fn coupling(&self) -> &Coupling {
        &self.coupling
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, state: &SectorState) -> Option<usize> {
        self.basis.iter().position(|s| s == state)
    }

    /// Entry `(r, c)`, zero if absent.
    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| self.coupling.zero())
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.entry(i, i)).collect()
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Nonzero entries strictly below the diagonal. Always empty for a matrix
    /// returned by [`h_matrix`]; exposed for audits.
    pub fn lower_entries(&self) -> Vec<(usize, usize)> {
        self.entries.keys().filter(|(r, c)| c < r).copied().collect()
    }

    /// `Σ_r v_r · row_r`: the image of `Σ v_r m_r` as coefficients on the basis.
    pub fn apply_rows(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.coupling.zero(); self.dim()];
        for (&(r, c), x) in &self.entries {
            if !v[r].is_zero() {
                out[c] = &out[c] + &(&v[r] * x);
            }
        }
        out
    }

    /// Aligned triangular dump: one line per row, `.` for zeros.
    pub fn render_text(&self) -> String {
        let n = self.dim();
        let cells: Vec<Vec<String>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| match self.entries.get(&(r, c)) {
                        Some(v) => v.to_string(),
                        None => ".".to_string(),
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        let label_width = self.basis.iter().map(|s| s.to_string().chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (r, row) in cells.iter().enumerate() {
            let label = self.basis[r].to_string();
            let _ = write!(out, "{label}{} ", " ".repeat(label_width - label.chars().count()));
            for cell in row {
                let _ = write!(out, " {}{cell}", " ".repeat(width - cell.chars().count()));
            }
            out.push('\n');
        }
        out
    }
}

/// Builds `H̃` on `basis` from oracle images of each monomial.
///
/// Fails with `BasisNotClosed` if an image leaves the basis and with
/// `NotTriangular` if an image has a component on an earlier basis state.
pub fn h_matrix(basis: &[SectorState], coupling: &Coupling) -> Result<TriMatrix> {
    let index: HashMap<&SectorState, usize> = basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let rows = basis
        .par_iter()
        .enumerate()
        .map(|(r, s)| {
            let image = monomial_image(s)?;
            let mut row = Vec::new();
            for t in image.support() {
                let c = *index.get(t).ok_or_else(|| Error::BasisNotClosed(t.to_string()))?;
                if c < r {
                    return Err(Error::NotTriangular { from: s.to_string(), to: t.to_string() });
                }
                let value = image.coefficient(t, coupling);
                if !value.is_zero() {
                    row.push(((r, c), value));
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TriMatrix {
        basis: basis.to_vec(),
        coupling: coupling.clone(),
        entries: rows.into_iter().flatten().collect(),
    })
}

/// Which squeeze amounts the closed-form `H₁` action sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiteralReading {
    /// `1 ≤ p` with `nⱼ − p ≥ n_k + p`: each unordered target pair once.
    OrderPreserving,
    /// `1 ≤ p ≤ nⱼ − n_k − 1`: a target pair and its mirror image both counted.
    AsWritten,
}

/// `H₁|n⟩ = Σ_{j<k} (nⱼ − n_k) (|n⟩ + 2 Σ_p |…, nⱼ − p, …, n_k + p, …⟩)` on
/// permutation-sum kets, summed over position pairs of the ordered quantum
/// numbers with no multiplicity correction.
pub fn h1_literal_action(state: &SectorState, reading: LiteralReading) -> BTreeMap<SectorState, Rational> {
    let ns = state.quantum_numbers();
    let mut out: BTreeMap<SectorState, Rational> = BTreeMap::new();
    let mut add = |s: SectorState, c: Rational| {
        let e = out.entry(s).or_insert_with(Rational::zero);
        *e += c;
    };
    for j in 0..ns.len() {
        for k in j + 1..ns.len() {
            let gap = ns[j] - ns[k];
            if gap == 0 {
                continue;
            }
            add(state.clone(), int(gap));
            let max_p = match reading {
                LiteralReading::OrderPreserving => gap / 2,
                LiteralReading::AsWritten => gap - 1,
            };
            for p in 1..=max_p {
                let mut next = ns.clone();
                next[j] -= p;
                next[k] += p;
                next.sort_unstable_by(|a, b| b.cmp(a));
                let target = SectorState::from_quantum_numbers(&next).expect("sorted");
                add(target, int(2 * gap));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// [`h1_literal_action`] rewritten on monomials: `H₁ m_n` with
/// `|s⟩ = (Π mᵢ!) m_s`.
pub fn h1_literal_monomial(state: &SectorState, reading: LiteralReading) -> BTreeMap<SectorState, Rational> {
    let source = int(state.ket_factor() as i64);
    h1_literal_action(state, reading)
        .into_iter()
        .map(|(t, c)| {
            let f = int(t.ket_factor() as i64);
            (t, c * f / &source)
        })
        .collect()
}

/// One monomial coefficient of `H₁ m_n` where the closed form and the oracle differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiteralDiscrepancy {
    pub source: SectorState,
    pub target: SectorState,
    #[serde(with = "crate::scalars::rational")]
    pub literal: Rational,
    #[serde(with = "crate::scalars::rational")]
    pub oracle: Rational,
    /// `oracle / literal`, when the literal coefficient is nonzero.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt")]
    pub factor: Option<Rational>,
}

fn serialize_opt<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => crate::scalars::rational::serialize(r, s),
        None => s.serialize_none(),
    }
}

/// Compares [`h1_literal_monomial`] with the oracle on every coefficient.
pub fn literal_audit(state: &SectorState, reading: LiteralReading) -> Result<Vec<LiteralDiscrepancy>> {
    let oracle = monomial_image(state)?.h1;
    let literal = h1_literal_monomial(state, reading);
    let mut targets: Vec<&SectorState> = oracle.keys().chain(literal.keys()).collect();
    targets.sort();
    targets.dedup();
    let zero = Rational::zero();
    Ok(targets
        .into_iter()
        .filter_map(|t| {
            let l = literal.get(t).unwrap_or(&zero);
            let o = oracle.get(t).unwrap_or(&zero);
            (l != o).then(|| LiteralDiscrepancy {
                source: state.clone(),
                target: t.clone(),
                literal: l.clone(),
                oracle: o.clone(),
                factor: (!l.is_zero()).then(|| o / l),
            })
        })
        .collect())
}

/// `E¹ = 2A Σ_{j<k}(nⱼ − n_k)`
pub fn first_order_energy(state: &SectorState, coupling: &Coupling) -> Scalar {
    coupling.linear(Rational::zero(), int(2 * state.gap_sum()))
}

/// Path-weight estimate of `⟨to|H̃|from⟩`: the sum over directed paths of the
/// product of edge weights, times `E¹(from)`. Zero when `to` is not strictly
/// below `from` in level. For `from == to` the single empty path gives `E¹`.
pub fn path_weight_offdiag(
    graph: &SqueezeGraph,
    from: &SectorState,
    to: &SectorState,
    coupling: &Coupling,
) -> Result<Scalar> {
    let fi = graph.node_index(from).ok_or_else(|| Error::NodeNotInGraph(from.to_string()))?;
    let ti = graph.node_index(to).ok_or_else(|| Error::NodeNotInGraph(to.to_string()))?;
    let e1 = first_order_energy(from, coupling);
    if fi == ti {
        return Ok(e1);
    }
    if graph.nodes[ti].level >= graph.nodes[fi].level {
        return Ok(coupling.zero());
    }
    let (_, weight) = graph.path_weight_sum(fi, ti);
    Ok(e1.scale(&int(weight as i64)))
}

/// Path-weight estimate against the matrix entry for one ordered pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathWeightComparison {
    pub from: SectorState,
    pub to: SectorState,
    pub paths: u64,
    pub path_value: Scalar,
    pub matrix_value: Scalar,
    pub agrees: bool,
}

/// Every ordered pair `from ≠ to` of a family with at least one path or a
/// nonzero matrix entry.
pub fn compare_path_weights(graph: &SqueezeGraph, coupling: &Coupling) -> Result<Vec<PathWeightComparison>> {
    let basis = graph.states();
    let matrix = h_matrix(&basis, coupling)?;
    let mut out = Vec::new();
    for (fi, from) in basis.iter().enumerate() {
        for (ti, to) in basis.iter().enumerate().skip(fi + 1) {
            let (paths, _) = graph.path_weight_sum(fi, ti);
            let matrix_value = matrix.entry(fi, ti);
            if paths == 0 && matrix_value.is_zero() {
                continue;
            }
            let path_value = path_weight_offdiag(graph, from, to, coupling)?;
            out.push(PathWeightComparison {
                from: from.clone(),
                to: to.clone(),
                paths,
                agrees: path_value == matrix_value,
                path_value,
                matrix_value,
            });
        }
    }
    Ok(out)
}
