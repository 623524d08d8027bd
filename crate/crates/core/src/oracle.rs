//! Ground-truth symbolic engine.
//!
//! Symmetric functions are realized as sparse Laurent polynomials in
//! `ω₁ … ω_N`, and the two parts of the Hamiltonian are applied as the
//! differential operators they are:
//!
//! - `H₀ = Σⱼ (ωⱼ∂ⱼ)²`
//! - `H₁ = Σ_{j<k} (ωⱼ+ω_k)/(ωⱼ−ω_k) · (ωⱼ∂ⱼ − ω_k∂_k)`
//!
//! The division by `ωⱼ − ω_k` is carried out exactly by synthetic division in
//! `ωⱼ`; it leaves no remainder whenever the input is symmetric.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalars::rational::{factorial, int, to_i64};
use crate::scalars::Rational;
use crate::states::SectorState;

/// Guard on dense permutation expansions (`N!` terms).
pub const MAX_VARIABLES: usize = 8;

type Exponents = Vec<i32>;

/// Sparse Laurent polynomial over the rationals in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(exponents: &[i32], c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents.to_vec(), c);
        p
    }

    /// The single variable `ω_{index}` (0-based).
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(&e, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[i32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exponents: Exponents, c: Rational) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `ω → ω⁻¹` in every variable (complex conjugation on the unit torus
    /// for real coefficients).
    pub fn conj(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> LaurentPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Invariance under a transposition and an `N`-cycle, which generate `S_N`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.nvars;
        if n < 2 {
            return true;
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        self.permute(&swap) == *self && self.permute(&cycle) == *self
    }

    /// Sum of exponents, if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Exact quotient by `ω_j − ω_k`.
    pub fn divide_by_difference(&self, j: usize, k: usize) -> Result<LaurentPoly> {
        // Group by the exponent of ω_j; inner keys have that slot zeroed.
        let mut groups: BTreeMap<i32, BTreeMap<Exponents, Rational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = std::mem::replace(&mut rest[j], 0);
            groups.entry(d).or_default().insert(rest, c.clone());
        }
        let (Some(&lo), Some(&hi)) = (groups.keys().next(), groups.keys().next_back()) else {
            return Ok(Self::zero(self.nvars));
        };
        // g_d = q_{d-1} − ω_k q_d  ⇒  q_{d-1} = g_d + ω_k q_d, from the top down.
        let mut quotient = Self::zero(self.nvars);
        let mut carry: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for d in (lo..=hi).rev() {
            let mut current = carry;
            if let Some(g) = groups.get(&d) {
                for (e, c) in g {
                    let entry = current.entry(e.clone()).or_insert_with(Rational::zero);
                    *entry += c;
                }
                current.retain(|_, c| !c.is_zero());
            }
            if d == lo {
                if !current.is_empty() {
                    return Err(Error::InexactDivision { j, k });
                }
                break;
            }
            carry = BTreeMap::new();
            for (e, c) in current {
                let mut qe = e.clone();
                qe[j] = d - 1;
                quotient.add_term(qe, c.clone());
                let mut shifted = e;
                shifted[k] += 1;
                carry.insert(shifted, c);
            }
        }
        Ok(quotient)
    }

    /// Coefficient of `ω⁰`.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars])
    }
}

/// Debug dump: one `coeff * w1^a w2^b …` line per term, sorted by exponent.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (e, c) in &self.terms {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, x)| format!("w{}^{}", i + 1, x))
                .collect();
            if vars.is_empty() {
                writeln!(f, "{c}")?;
            } else {
                writeln!(f, "{c} * {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARIABLES {
        return Err(Error::TooManyVariables(n));
    }
    Ok(())
}

/// Visits every permutation of `items` (Heap's algorithm), with its sign.
fn for_each_permutation(items: &[i32], mut visit: impl FnMut(&[i32], bool)) {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    let mut even = true;
    visit(&a, even);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            even = !even;
            visit(&a, even);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Next lexicographic permutation in place; false once wrapped around.
fn next_permutation(a: &mut [i32]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn quantum_exponents(state: &SectorState) -> Vec<i32> {
    state.quantum_numbers().iter().map(|&v| v as i32).collect()
}

/// The permutation-sum ket: `Σ_P Π ωⱼ^{n_{Pⱼ}}` over all `N!` permutations.
pub fn expand_state(state: &SectorState) -> Result<LaurentPoly> {
    let n = state.n_particles();
    check_vars(n)?;
    let mut out = LaurentPoly::zero(n);
    for_each_permutation(&quantum_exponents(state), |perm, _| {
        out.add_term(perm.to_vec(), Rational::one());
    });
    Ok(out)
}

/// The monomial symmetric function: one term per distinct rearrangement of
/// `(k₁ + shift, …, k_N + shift)`.
pub fn expand_monomial(shape: &Partition, shift: i64, n: usize) -> Result<LaurentPoly> {
    if shape.len() > n {
        return Err(Error::LengthExceedsN { len: shape.len(), n });
    }
    check_vars(n)?;
    let mut e: Vec<i32> = (0..n).map(|i| (shape.part(i) as i64 + shift) as i32).collect();
    e.sort_unstable();
    let mut out = LaurentPoly::zero(n);
    loop {
        out.add_term(e.clone(), Rational::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    Ok(out)
}

pub fn expand_monomial_state(state: &SectorState) -> Result<LaurentPoly> {
    expand_monomial(state.shape(), state.shift(), state.n_particles())
}

/// `Σ_σ sgn(σ) ω^{σ(e)}`.
pub fn alternant(exponents: &[i32]) -> Result<LaurentPoly> {
    check_vars(exponents.len())?;
    let mut out = LaurentPoly::zero(exponents.len());
    for_each_permutation(exponents, |perm, even| {
        out.add_term(perm.to_vec(), if even { int(1) } else { int(-1) });
    });
    Ok(out)
}

/// `Σⱼ (ωⱼ∂ⱼ)²`: multiplies each term by the sum of its squared exponents.
pub fn apply_h0(f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.nvars);
    for (e, c) in &f.terms {
        let s: i64 = e.iter().map(|&x| (x as i64) * (x as i64)).sum();
        out.add_term(e.clone(), c * int(s));
    }
    out
}

/// `(ωⱼ+ω_k)/(ωⱼ−ω_k) · (ωⱼ∂ⱼ − ω_k∂_k) f` for one pair.
pub fn apply_h1_pair(f: &LaurentPoly, j: usize, k: usize) -> Result<LaurentPoly> {
    let n = f.nvars;
    let mut numerator = LaurentPoly::zero(n);
    for (e, c) in &f.terms {
        let euler = (e[j] - e[k]) as i64;
        if euler == 0 {
            continue;
        }
        let c = c * int(euler);
        let mut up_j = e.clone();
        up_j[j] += 1;
        let mut up_k = e.clone();
        up_k[k] += 1;
        numerator.add_term(up_j, c.clone());
        numerator.add_term(up_k, c);
    }
    numerator.divide_by_difference(j, k)
}

/// `Σ_{j<k} (ωⱼ+ω_k)/(ωⱼ−ω_k) · (ωⱼ∂ⱼ − ω_k∂_k)` on a symmetric polynomial.
pub fn apply_h1(f: &LaurentPoly) -> Result<LaurentPoly> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.nvars;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k))).collect();
    let parts = pairs
        .par_iter()
        .map(|&(j, k)| apply_h1_pair(f, j, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.iter().fold(LaurentPoly::zero(n), |acc, p| acc.add(p)))
}

/// Coefficients of a symmetric polynomial in the monomial basis, keyed by
/// the sector state whose quantum numbers are the sorted exponents.
pub fn decompose_in_monomials(f: &LaurentPoly) -> Result<BTreeMap<SectorState, Rational>> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut out = BTreeMap::new();
    for (e, c) in &f.terms {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            let ns: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            out.insert(SectorState::from_quantum_numbers(&ns)?, c.clone());
        }
    }
    Ok(out)
}

/// `Σ c_s · m_s`, the inverse of [`decompose_in_monomials`].
pub fn recompose(n: usize, coeffs: &BTreeMap<SectorState, Rational>) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(n);
    for (s, c) in coeffs {
        out = out.add(&expand_monomial_state(s)?.scale(c));
    }
    Ok(out)
}

/// `Π_{i<j} (ωᵢ−ωⱼ)^A (ωᵢ⁻¹−ωⱼ⁻¹)^A = Π_{i<j} |ωᵢ − ωⱼ|^{2A}` on the torus.
pub fn torus_weight(n: usize, a: u32) -> LaurentPoly {
    let mut out = LaurentPoly::constant(n, Rational::one());
    for i in 0..n {
        for j in i + 1..n {
            let mut factor = LaurentPoly::constant(n, int(2));
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = -1;
            factor.add_term(e.clone(), int(-1));
            e[i] = -1;
            e[j] = 1;
            factor.add_term(e, int(-1));
            out = out.mul(&factor.pow(a));
        }
    }
    out
}

/// `CT[f·g]` without forming the full product.
pub fn constant_term_of_product(f: &LaurentPoly, g: &LaurentPoly) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in &f.terms {
        let neg: Exponents = e.iter().map(|x| -x).collect();
        if let Some(d) = g.terms.get(&neg) {
            acc += c * d;
        }
    }
    acc
}

fn integer_coupling(a: &Rational) -> Result<u32> {
    to_i64(a)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::NonIntegerCoupling(a.clone()))
}

/// `Γ(1+A)^N / Γ(1+AN)`: the inverse of the Dyson constant term.
pub fn dyson_normalization(n: usize, a: u32) -> Rational {
    let num = num_traits::pow(factorial(a as u64), n);
    num / factorial(a as u64 * n as u64)
}

/// Torus scalar product `(A!)^N/(AN)! · CT[f̄ g Π|ωᵢ−ωⱼ|^{2A}]`, normalized so
/// that `⟨1, 1⟩ = 1`.
pub fn torus_inner_product(f: &LaurentPoly, g: &LaurentPoly, a: &Rational, n: usize) -> Result<Rational> {
    let a = integer_coupling(a)?;
    if f.nvars != n || g.nvars != n {
        return Err(Error::LengthExceedsN { len: f.nvars.max(g.nvars), n });
    }
    if !f.is_symmetric() || !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let weight = torus_weight(n, a);
    let integrand = f.conj().mul(g);
    Ok(constant_term_of_product(&integrand, &weight) * dyson_normalization(n, a))
}
