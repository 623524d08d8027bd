//! Eigenvalues and eigenvectors of the triangular Hamiltonian, pseudo-momenta,
//! and the gauge prefactor that turns a symmetric polynomial back into a
//! physical wavefunction.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operator::{diagonal_energy, TriMatrix};
use crate::scalars::rational::{frac, int};
use crate::scalars::{coupling_from_lambda, Branch, Coupling, Poly, Rational, Scalar};
use crate::states::SectorState;

/// The diagonal paired with the basis, in basis order.
pub fn eigenvalues(m: &TriMatrix) -> Vec<(SectorState, Scalar)> {
    m.basis().iter().cloned().zip(m.diagonal()).collect()
}

/// An eigenvector in the monomial basis, with coefficient 1 on its label.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenPair {
    #[serde(rename = "state")]
    pub label: SectorState,
    pub energy: Scalar,
    #[serde(serialize_with = "serialize_vector")]
    pub vector: BTreeMap<SectorState, Scalar>,
}

/// `{"2,0": "1/1", "1,1": {...}}`, highest state first.
fn serialize_vector<S: Serializer>(v: &BTreeMap<SectorState, Scalar>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, x) in v.iter().rev() {
        map.serialize_entry(&k.label(), x)?;
    }
    map.end()
}

/// `E⁰(label) − E⁰(other)` as a polynomial in `A`.
pub fn pivot_polynomial(label: &SectorState, other: &SectorState) -> Poly {
    Poly::linear(
        int(label.square_sum() - other.square_sum()),
        int(label.gap_sum() - other.gap_sum()),
    )
}

/// Pivots of the back-substitution for `label`: one per basis state strictly
/// dominated by it.
pub fn pivot_polynomials(m: &TriMatrix, label: &SectorState) -> Vec<(SectorState, Poly)> {
    m.basis()
        .iter()
        .filter(|s| *s != label && s.dominated_by(label))
        .map(|s| (s.clone(), pivot_polynomial(label, s)))
        .collect()
}

/// Rational couplings at which some eigenvector of the basis cannot be
/// obtained by back-substitution.
pub fn degenerate_couplings(m: &TriMatrix) -> Vec<Rational> {
    let mut roots: Vec<Rational> = m
        .basis()
        .iter()
        .flat_map(|label| pivot_polynomials(m, label))
        .flat_map(|(_, p)| p.rational_roots())
        .collect();
    roots.sort();
    roots.dedup();
    roots
}

fn degeneracy(label: &SectorState, other: &SectorState) -> Error {
    let pivot = pivot_polynomial(label, other);
    if pivot.is_zero() {
        Error::StructuralDegeneracy { label: label.to_string(), other: other.to_string() }
    } else {
        Error::DegenerateDiagonal {
            label: label.to_string(),
            other: other.to_string(),
            roots: pivot.rational_roots(),
        }
    }
}

/// Back-substitution from `label` down the basis:
/// `v_c = Σ_{r<c} v_r M[r,c] / (E⁰(label) − E⁰(c))`, restricted to states
/// dominated by the label.
pub fn eigenvector(m: &TriMatrix, label: &SectorState) -> Result<EigenPair> {
    let li = m.index_of(label).ok_or_else(|| Error::NodeNotInGraph(label.to_string()))?;
    let coupling = m.coupling();
    let energy = m.entry(li, li);
    let basis = m.basis();
    let mut v: Vec<Scalar> = vec![coupling.zero(); m.dim()];
    v[li] = coupling.one();
    for c in li + 1..m.dim() {
        if !basis[c].dominated_by(label) {
            continue;
        }
        let mut rhs = coupling.zero();
        for r in li..c {
            if !v[r].is_zero() {
                rhs = &rhs + &(&v[r] * &m.entry(r, c));
            }
        }
        let pivot = &energy - &m.entry(c, c);
        if pivot.is_zero() {
            return Err(degeneracy(label, &basis[c]));
        }
        v[c] = rhs.checked_div(&pivot)?;
    }
    let vector = basis
        .iter()
        .zip(v)
        .filter(|(_, x)| !x.is_zero())
        .map(|(s, x)| (s.clone(), x))
        .collect();
    Ok(EigenPair { label: label.clone(), energy, vector })
}

/// One eigenpair per basis state, solved in parallel.
pub fn all_eigenpairs(m: &TriMatrix) -> Vec<Result<EigenPair>> {
    m.basis().par_iter().map(|s| eigenvector(m, s)).collect()
}

/// `H̃v − Ev` on the basis; all zeros for an exact eigenpair.
pub fn residual(m: &TriMatrix, pair: &EigenPair) -> Vec<Scalar> {
    let v: Vec<Scalar> = m
        .basis()
        .iter()
        .map(|s| pair.vector.get(s).cloned().unwrap_or_else(|| m.coupling().zero()))
        .collect();
    m.apply_rows(&v)
        .into_iter()
        .zip(&v)
        .map(|(hv, x)| &hv - &(&pair.energy * x))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoMomenta {
    #[serde(rename = "I", serialize_with = "serialize_rationals")]
    pub i: Vec<Rational>,
    /// In units of `π/L`.
    #[serde(serialize_with = "serialize_rationals")]
    pub k: Vec<Rational>,
    /// `Σ kⱼ²` in units of `π²/L²`.
    #[serde(with = "crate::scalars::rational")]
    pub energy: Rational,
    /// `k` strictly decreasing, so the assumed sign pattern is realized.
    pub self_consistent: bool,
}

fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::scalars::rational::to_pq))
}

/// `(N + 1 − 2j)/2` for 1-based `j`.
fn centered_offsets(n: usize) -> impl Iterator<Item = Rational> {
    (1..=n as i64).map(move |j| frac(n as i64 + 1 - 2 * j, 2))
}

/// `Iⱼ = nⱼ + (N+1−2j)/2` and `kⱼL/π = Iⱼ + (A−1)(N+1−2j)/2`.
///
/// Fails with `SgnInconsistent` if some `kⱼ < k_{j+1}`. Ties (possible at
/// `A = 0`) are returned with `self_consistent = false`.
pub fn pseudo_momenta(state: &SectorState, a: &Rational) -> Result<PseudoMomenta> {
    let n = state.n_particles();
    let (i, k): (Vec<Rational>, Vec<Rational>) = state
        .quantum_numbers()
        .into_iter()
        .zip(centered_offsets(n))
        .map(|(nj, c)| {
            let ij = int(nj) + &c;
            let kj = &ij + (a - int(1)) * c;
            (ij, kj)
        })
        .unzip();
    if k.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::SgnInconsistent(state.to_string()));
    }
    let self_consistent = k.windows(2).all(|w| w[0] > w[1]);
    let energy = k.iter().map(|x| x * x).sum();
    Ok(PseudoMomenta { i, k, energy, self_consistent })
}

/// `A² Σⱼ ((N+1−2j)/2)²`
pub fn predicted_offset(n: usize, a: &Rational) -> Rational {
    let s: Rational = centered_offsets(n).map(|c| &c * &c).sum();
    a * a * s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffsetReport {
    #[serde(with = "crate::scalars::rational")]
    pub coupling: Rational,
    /// `(state, E_pseudo − E⁰)` per state.
    #[serde(serialize_with = "serialize_deltas")]
    pub deltas: Vec<(SectorState, Rational)>,
    /// The common offset if every state has the same one.
    #[serde(serialize_with = "serialize_opt")]
    pub constant: Option<Rational>,
    #[serde(with = "crate::scalars::rational")]
    pub predicted: Rational,
    pub matches_prediction: bool,
}

fn serialize_deltas<S: Serializer>(v: &[(SectorState, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|(st, d)| (st.label(), crate::scalars::rational::to_pq(d))),
    )
}

fn serialize_opt<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&crate::scalars::rational::to_pq(r)),
        None => s.serialize_none(),
    }
}

/// `Δ(s) = E_pseudo(s) − E⁰(s)` over a set of states with a common `N`.
pub fn compare_pseudomomentum_energy(states: &[SectorState], a: &Rational) -> Result<OffsetReport> {
    let coupling = Coupling::fixed(a.clone());
    let deltas = states
        .iter()
        .map(|s| {
            let pm = pseudo_momenta(s, a)?;
            let e0 = diagonal_energy(s, &coupling).eval(a)?;
            Ok((s.clone(), pm.energy - e0))
        })
        .collect::<Result<Vec<_>>>()?;
    let constant = match deltas.first() {
        Some((_, d)) if deltas.iter().all(|(_, x)| x == d) => Some(d.clone()),
        _ => None,
    };
    let n = states.first().map_or(0, |s| s.n_particles());
    let predicted = predicted_offset(n, a);
    let matches_prediction = constant.as_ref() == Some(&predicted)
        && states.iter().all(|s| s.n_particles() == n);
    Ok(OffsetReport { coupling: a.clone(), deltas, constant, predicted, matches_prediction })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaugePrefactor {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub lambda: f64,
    pub beta: f64,
    pub branch: Branch,
}

impl GaugePrefactor {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Principal power of a nonzero real `x`: `|x|^p e^{ipπ}` when `x < 0`.
fn real_power(x: f64, p: f64) -> Complex64 {
    if p == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let arg = if x < 0.0 { std::f64::consts::PI } else { 0.0 };
    Complex64::from_polar(x.abs().powf(p), p * arg)
}

/// `Π_{j<k} (ωⱼ/ω_k − ω_k/ωⱼ)^λ (ωⱼ/ω_k + ω_k/ωⱼ − 2)^{β/2}` with
/// `ωⱼ = e^{iπxⱼ/L}` and principal-branch powers.
///
/// With `θ = π(xⱼ − x_k)/L` the two bases are `2i·sin θ` and `2cos θ − 2`;
/// they are evaluated in that closed form so the branch choice does not
/// depend on the sign of a rounding-level imaginary part.
pub fn gauge_prefactor_eval(x: &[f64], lambda: f64, branch: Branch, length: f64) -> Result<GaugePrefactor> {
    for j in 0..x.len() {
        for k in j + 1..x.len() {
            if x[j] == x[k] {
                return Err(Error::CoincidentPositions(j, k));
            }
        }
    }
    let beta = coupling_from_lambda(lambda, branch).beta;
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..x.len() {
        for k in j + 1..x.len() {
            let theta = std::f64::consts::PI * (x[j] - x[k]) / length;
            let s = 2.0 * theta.sin();
            // (i s)^λ, principal: arg is ±π/2
            let first = if lambda == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                let arg = if s >= 0.0 { std::f64::consts::FRAC_PI_2 } else { -std::f64::consts::FRAC_PI_2 };
                Complex64::from_polar(s.abs().powf(lambda), lambda * arg)
            };
            let second = real_power(2.0 * theta.cos() - 2.0, beta / 2.0);
            acc *= first * second;
        }
    }
    Ok(GaugePrefactor {
        re: acc.re,
        im: acc.im,
        modulus: acc.norm(),
        lambda,
        beta,
        branch,
    })
}

/// `|a − b| ≤ tol`, for comparing floating-point prefactors.
pub fn approx_eq(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}
