//! Symmetric functions at fixed weight: monomial and power-sum bases, the
//! pairing `⟨p_k, p_n⟩ = δ_{k,n} z_k A^{−ℓ(k)}`, Jack polynomials by
//! Gram–Schmidt, and their comparison with Hamiltonian eigenvectors, Schur
//! functions and torus integrals.
//!
//! Everything here lives in the ring of symmetric functions (unboundedly many
//! variables); a concrete number of variables only enters through the oracle.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operator::h_matrix;
use crate::oracle::{self, LaurentPoly};
use crate::partitions::{partitions_of, Partition};
use crate::scalars::rational::{factorial, int};
use crate::scalars::{Coupling, Poly, RatFunc, Rational, Scalar};
use crate::spectrum::eigenvector;
use crate::states::{enumerate_sector, SectorState};

/// Partitions of `weight` in ascending lexicographic order, `(1^p)` first.
pub fn ascending_partitions(weight: usize) -> Vec<Partition> {
    let mut v = partitions_of(weight);
    v.sort();
    v
}

/// `p_r · m_μ = Σ_ν m_{v+r}(ν) m_ν`, over distinct values `v` of `μ` and `v = 0`,
/// where `ν` is `μ` with one part `v` raised to `v + r`.
fn multiply_power_sum(r: usize, mu: &Partition) -> BTreeMap<Partition, Rational> {
    let mut values: Vec<usize> = mu.parts().to_vec();
    values.dedup();
    values.push(0);
    let mut out = BTreeMap::new();
    for v in values {
        let mut parts = mu.parts().to_vec();
        match parts.iter().position(|&x| x == v) {
            Some(i) => parts[i] += r,
            None => parts.push(r),
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mult = parts.iter().filter(|&&x| x == v + r).count();
        let nu = Partition::from_parts(parts).expect("sorted");
        out.insert(nu, int(mult as i64));
    }
    out
}

/// Monomial expansion of `p_μ`.
pub fn power_sum_in_monomials(mu: &Partition) -> BTreeMap<Partition, Rational> {
    let mut acc = BTreeMap::from([(Partition::empty(), Rational::one())]);
    for &r in mu.parts() {
        let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (lambda, c) in &acc {
            for (nu, d) in multiply_power_sum(r, lambda) {
                *next.entry(nu).or_insert_with(Rational::zero) += c * d;
            }
        }
        acc = next;
    }
    acc
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible transition matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

/// Change of basis between power sums and monomials at one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub partitions: Vec<Partition>,
    /// `p_i = Σ_j p_in_m[i][j] m_j`
    pub p_in_m: Vec<Vec<Rational>>,
    /// `m_i = Σ_j m_in_p[i][j] p_j`
    pub m_in_p: Vec<Vec<Rational>>,
}

pub fn monomial_to_powersum(weight: usize) -> Transition {
    let partitions = ascending_partitions(weight);
    let p_in_m: Vec<Vec<Rational>> = partitions
        .iter()
        .map(|mu| {
            let e = power_sum_in_monomials(mu);
            partitions
                .iter()
                .map(|nu| e.get(nu).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let m_in_p = invert(&p_in_m);
    Transition { partitions, p_in_m, m_in_p }
}

/// `Σ_ℓ c_ℓ A^{−ℓ}` in the coupling's scalar mode.
fn series_in_inverse_a(cs: &[Rational], coupling: &Coupling) -> Result<Scalar> {
    coupling.require_nonzero()?;
    match coupling {
        Coupling::Fixed(a) => {
            let inv = Rational::one() / a;
            let mut acc = Rational::zero();
            let mut pow = Rational::one();
            for c in cs {
                acc += c * &pow;
                pow *= &inv;
            }
            Ok(Scalar::Rational(acc))
        }
        Coupling::Symbolic => {
            let w = cs.len().saturating_sub(1);
            let mut num = vec![Rational::zero(); w + 1];
            for (l, c) in cs.iter().enumerate() {
                num[w - l] = c.clone();
            }
            let mut den = vec![Rational::zero(); w + 1];
            den[w] = Rational::one();
            Ok(Scalar::Symbolic(RatFunc::new(Poly::new(num), Poly::new(den))?))
        }
    }
}

/// Symmetric function of one weight in the monomial or power-sum basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SymFunc {
    pub weight: usize,
    pub basis: SymBasis,
    pub coeffs: BTreeMap<Partition, Scalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymBasis {
    Monomial,
    PowerSum,
}

impl SymFunc {
    pub fn new(weight: usize, basis: SymBasis, coeffs: BTreeMap<Partition, Scalar>) -> Result<Self> {
        if let Some(p) = coeffs.keys().find(|p| p.weight() != weight) {
            return Err(Error::WeightMismatch(p.weight(), weight));
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(SymFunc { weight, basis, coeffs })
    }

    /// A single basis element with coefficient 1.
    pub fn basis_element(basis: SymBasis, p: &Partition, coupling: &Coupling) -> Self {
        SymFunc {
            weight: p.weight(),
            basis,
            coeffs: BTreeMap::from([(p.clone(), coupling.one())]),
        }
    }

    /// Coefficients on the power sums, in `t.partitions` order.
    fn power_sum_vector(&self, t: &Transition, coupling: &Coupling) -> Vec<Scalar> {
        let index: BTreeMap<&Partition, usize> = t.partitions.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut v = vec![coupling.zero(); t.partitions.len()];
        for (p, c) in &self.coeffs {
            let i = index[p];
            match self.basis {
                SymBasis::PowerSum => v[i] = &v[i] + c,
                SymBasis::Monomial => {
                    for (j, q) in t.m_in_p[i].iter().enumerate() {
                        if !q.is_zero() {
                            v[j] = &v[j] + &c.scale(q);
                        }
                    }
                }
            }
        }
        v
    }
}

/// `⟨f, g⟩ = Σ_μ f̂_μ ĝ_μ z_μ A^{−ℓ(μ)}` on power-sum coefficients.
pub fn inner_product_psum(f: &SymFunc, g: &SymFunc, coupling: &Coupling) -> Result<Scalar> {
    if f.weight != g.weight {
        return Err(Error::WeightMismatch(f.weight, g.weight));
    }
    let inv_a = coupling.a_inverse()?;
    let t = monomial_to_powersum(f.weight);
    let (fv, gv) = (f.power_sum_vector(&t, coupling), g.power_sum_vector(&t, coupling));
    let mut acc = coupling.zero();
    for (i, mu) in t.partitions.iter().enumerate() {
        if fv[i].is_zero() || gv[i].is_zero() {
            continue;
        }
        let mut w = coupling.constant(mu.z());
        for _ in 0..mu.len() {
            w = &w * &inv_a;
        }
        acc = &acc + &(&(&fv[i] * &gv[i]) * &w);
    }
    Ok(acc)
}

/// `⟨m_λ, m_κ⟩` for all pairs at one weight, in ascending lexicographic order.
pub fn monomial_gram(weight: usize, coupling: &Coupling) -> Result<Vec<Vec<Scalar>>> {
    let t = monomial_to_powersum(weight);
    let n = t.partitions.len();
    let mut gram = vec![vec![coupling.zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut by_length = vec![Rational::zero(); weight + 1];
            for (k, mu) in t.partitions.iter().enumerate() {
                let (a, b) = (&t.m_in_p[i][k], &t.m_in_p[j][k]);
                if !a.is_zero() && !b.is_zero() {
                    by_length[mu.len()] += a * b * mu.z();
                }
            }
            let v = series_in_inverse_a(&by_length, coupling)?;
            gram[j][i] = v.clone();
            gram[i][j] = v;
        }
    }
    Ok(gram)
}

/// A Jack polynomial in the monomial basis, normalized so the coefficient
/// of `m_{(1^p)}` is `p!`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JackPoly {
    pub label: Partition,
    #[serde(serialize_with = "serialize_coeffs")]
    pub coeffs: BTreeMap<Partition, Scalar>,
}

/// `{"2": ..., "1,1": ...}`, highest partition first.
fn serialize_coeffs<S: Serializer>(c: &BTreeMap<Partition, Scalar>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(c.len()))?;
    for (p, x) in c.iter().rev() {
        map.serialize_entry(&p.label(), x)?;
    }
    map.end()
}

impl JackPoly {
    pub fn weight(&self) -> usize {
        self.label.weight()
    }

    pub fn coefficient(&self, p: &Partition) -> Option<&Scalar> {
        self.coeffs.get(p)
    }

    pub fn as_symfunc(&self) -> SymFunc {
        SymFunc {
            weight: self.weight(),
            basis: SymBasis::Monomial,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Every coefficient at a rational `A`.
    pub fn eval(&self, a: &Rational) -> Result<BTreeMap<Partition, Rational>> {
        let mut out = BTreeMap::new();
        for (p, c) in &self.coeffs {
            let v = c.eval(a)?;
            if !v.is_zero() {
                out.insert(p.clone(), v);
            }
        }
        Ok(out)
    }

    /// Realization in `n` variables at a rational `A`; monomials with more
    /// than `n` parts vanish.
    pub fn to_laurent(&self, n: usize, a: &Rational) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(n);
        for (p, c) in self.eval(a)? {
            if p.len() <= n {
                out = out.add(&oracle::expand_monomial(&p, 0, n)?.scale(&c));
            }
        }
        Ok(out)
    }

    /// Partitions in the support that are not dominated by the label.
    pub fn support_outside_down_set(&self) -> Vec<Partition> {
        self.coeffs.keys().filter(|p| !p.dominated_by(&self.label)).cloned().collect()
    }
}

/// All Jack polynomials of one weight, built by Gram–Schmidt on the monomials
/// in ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct JackBasis {
    pub weight: usize,
    pub coupling: Coupling,
    pub jacks: Vec<JackPoly>,
    pub norms: Vec<Scalar>,
}

impl JackBasis {
    pub fn new(weight: usize, coupling: &Coupling) -> Result<Self> {
        coupling.require_nonzero()?;
        let partitions = ascending_partitions(weight);
        let n = partitions.len();
        let gram = monomial_gram(weight, coupling)?;
        // Monic orthogonal vectors, coefficient arrays over `partitions`.
        let mut monic: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        let mut monic_norms: Vec<Scalar> = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![coupling.zero(); n];
            v[i] = coupling.one();
            for j in 0..i {
                // ⟨m_i, J_j⟩; J_j is supported on indices ≤ j.
                let mut proj = coupling.zero();
                for k in 0..=j {
                    if !monic[j][k].is_zero() {
                        proj = &proj + &(&monic[j][k] * &gram[i][k]);
                    }
                }
                if proj.is_zero() {
                    continue;
                }
                let coef = proj.checked_div(&monic_norms[j])?;
                for k in 0..=j {
                    if !monic[j][k].is_zero() {
                        v[k] = &v[k] - &(&coef * &monic[j][k]);
                    }
                }
            }
            let mut norm = coupling.zero();
            for a in 0..=i {
                if v[a].is_zero() {
                    continue;
                }
                let mut row = coupling.zero();
                for b in 0..=i {
                    if !v[b].is_zero() {
                        row = &row + &(&gram[a][b] * &v[b]);
                    }
                }
                norm = &norm + &(&v[a] * &row);
            }
            if norm.is_zero() {
                return Err(Error::SingularGram {
                    label: partitions[i].to_string(),
                    reason: format!("vanishing norm at A = {coupling}"),
                });
            }
            monic.push(v);
            monic_norms.push(norm);
        }

        let p_factorial = coupling.constant(factorial(weight as u64));
        let mut jacks = Vec::with_capacity(n);
        let mut norms = Vec::with_capacity(n);
        for (i, v) in monic.into_iter().enumerate() {
            let bottom = &v[0];
            if bottom.is_zero() {
                return Err(Error::SingularGram {
                    label: partitions[i].to_string(),
                    reason: "coefficient of the column partition vanishes".into(),
                });
            }
            let scale = p_factorial.checked_div(bottom)?;
            let coeffs = partitions
                .iter()
                .zip(&v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p.clone(), &scale * c))
                .collect();
            norms.push(&(&monic_norms[i] * &scale) * &scale);
            jacks.push(JackPoly { label: partitions[i].clone(), coeffs });
        }
        Ok(JackBasis { weight, coupling: coupling.clone(), jacks, norms })
    }

    fn position(&self, label: &Partition) -> Option<usize> {
        self.jacks.iter().position(|j| &j.label == label)
    }

    pub fn get(&self, label: &Partition) -> Option<&JackPoly> {
        self.position(label).map(|i| &self.jacks[i])
    }

    /// `⟨J_k, J_k⟩` as produced by the orthogonalization.
    pub fn norm(&self, label: &Partition) -> Option<&Scalar> {
        self.position(label).map(|i| &self.norms[i])
    }
}

pub fn jack_gram_schmidt(label: &Partition, coupling: &Coupling) -> Result<JackPoly> {
    let basis = JackBasis::new(label.weight(), coupling)?;
    Ok(basis.get(label).expect("label has the basis weight").clone())
}

/// `⟨J_k, J_k⟩` recomputed from the coefficients through the power-sum pairing.
pub fn jack_norm(label: &Partition, coupling: &Coupling) -> Result<Scalar> {
    let j = jack_gram_schmidt(label, coupling)?;
    let f = j.as_symfunc();
    inner_product_psum(&f, &f, coupling)
}

/// Rescales a monomial-basis eigenvector to the Jack normalization.
///
/// With `n ≥ |label|` the coefficient of `m_{(1^p)}` is set to `p!`. With
/// fewer variables that monomial is absent, and the leading coefficient is
/// set to `Π_s (l(s) + 1 + a(s)/A)` instead, its value in the same
/// normalization.
fn normalize_eigenvector(
    label: &Partition,
    vector: BTreeMap<Partition, Scalar>,
    coupling: &Coupling,
) -> Result<JackPoly> {
    let weight = label.weight();
    let column = Partition::column(weight);
    let (reference, target) = match vector.get(&column) {
        Some(c) => (c.clone(), coupling.constant(factorial(weight as u64))),
        None => (
            vector.get(label).cloned().unwrap_or_else(|| coupling.zero()),
            label.hook_products(coupling)?.lower,
        ),
    };
    if reference.is_zero() {
        return Err(Error::SingularGram {
            label: label.to_string(),
            reason: "normalizing coefficient vanishes".into(),
        });
    }
    let scale = target.checked_div(&reference)?;
    let coeffs = vector
        .into_iter()
        .map(|(p, c)| (p, &scale * &c))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(JackPoly { label: label.clone(), coeffs })
}

fn eigenvector_as_partitions(v: BTreeMap<SectorState, Scalar>) -> Result<BTreeMap<Partition, Scalar>> {
    v.into_iter()
        .map(|(s, c)| {
            let p = s.as_partition().ok_or_else(|| Error::NegativePart(s.shift()))?;
            Ok((p, c))
        })
        .collect()
}

/// The Hamiltonian eigenvector of `label` in `n` variables, normalized as a
/// Jack polynomial.
pub fn jack_from_eigenvector(label: &Partition, coupling: &Coupling, n: usize) -> Result<JackPoly> {
    if n < label.len() {
        return Err(Error::NTooSmall { n, len: label.len() });
    }
    coupling.require_nonzero()?;
    let root = SectorState::from_partition(label, n)?;
    let basis = enumerate_sector(n, root.total(), Some(&root))?;
    let m = h_matrix(&basis, coupling)?;
    let pair = eigenvector(&m, &root)?;
    normalize_eigenvector(label, eigenvector_as_partitions(pair.vector)?, coupling)
}

/// Same as [`jack_from_eigenvector`] for every partition of a weight, sharing
/// one Hamiltonian matrix on the full `n`-particle sector.
pub fn jacks_from_sector(weight: usize, coupling: &Coupling, n: usize) -> Result<Vec<JackPoly>> {
    coupling.require_nonzero()?;
    let basis = enumerate_sector(n, weight as i64, None)?;
    let m = h_matrix(&basis, coupling)?;
    basis
        .iter()
        .map(|s| {
            let pair = eigenvector(&m, s)?;
            let label = s.as_partition().expect("non-negative sector");
            normalize_eigenvector(&label, eigenvector_as_partitions(pair.vector)?, coupling)
        })
        .collect()
}

/// `s_λ` in the monomial basis, from `a_{λ+δ}/a_δ` in `|λ|` variables.
pub fn schur(label: &Partition) -> Result<BTreeMap<Partition, Rational>> {
    let n = label.weight().max(1);
    let exponents: Vec<i32> = (0..n).map(|i| (label.part(i) + n - 1 - i) as i32).collect();
    let mut q = oracle::alternant(&exponents)?;
    for j in 0..n {
        for k in j + 1..n {
            q = q.divide_by_difference(j, k)?;
        }
    }
    oracle::decompose_in_monomials(&q)?
        .into_iter()
        .map(|(s, c)| Ok((s.as_partition().ok_or_else(|| Error::NegativePart(s.shift()))?, c)))
        .collect()
}

/// `e_μ = Π e_{μᵢ}` in the monomial basis: the coefficient of `m_ν` counts
/// 0-1 matrices with row sums `μ` and column sums `ν`.
pub fn elementary_in_monomials(mu: &Partition) -> BTreeMap<Partition, Rational> {
    fn count(rows: &[usize], cols: &mut Vec<usize>) -> u64 {
        let Some((&r, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        // choose r distinct columns with remaining capacity
        fn choose(r: usize, start: usize, rest: &[usize], cols: &mut Vec<usize>) -> u64 {
            if r == 0 {
                return count(rest, cols);
            }
            let mut total = 0;
            for c in start..cols.len() {
                if cols[c] > 0 {
                    cols[c] -= 1;
                    total += choose(r - 1, c + 1, rest, cols);
                    cols[c] += 1;
                }
            }
            total
        }
        choose(r, 0, rest, cols)
    }
    ascending_partitions(mu.weight())
        .into_iter()
        .filter_map(|nu| {
            let c = count(mu.parts(), &mut nu.parts().to_vec());
            (c > 0).then(|| (nu, int(c as i64)))
        })
        .collect()
}

/// How a Jack polynomial at `A = 1` compares with the Schur function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurComparison {
    pub label: Partition,
    /// `J/s`, if the two are proportional.
    #[serde(serialize_with = "serialize_opt")]
    pub constant: Option<Rational>,
}

fn serialize_opt<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&crate::scalars::rational::to_pq(r)),
        None => s.serialize_none(),
    }
}

/// The common ratio `f/g`, if `f` is a constant multiple of a nonzero `g`.
pub fn proportionality(f: &BTreeMap<Partition, Rational>, g: &BTreeMap<Partition, Rational>) -> Option<Rational> {
    let (p, gv) = g.iter().next()?;
    let ratio = f.get(p)? / gv;
    let same_support = f.len() == g.len() && f.keys().all(|k| g.contains_key(k));
    (same_support && g.iter().all(|(k, v)| f[k] == v * &ratio)).then_some(ratio)
}

pub fn schur_comparison(jack: &JackPoly) -> Result<SchurComparison> {
    let at_one = jack.eval(&int(1))?;
    let s = schur(&jack.label)?;
    Ok(SchurComparison { label: jack.label.clone(), constant: proportionality(&at_one, &s) })
}

/// Limits of `J/(leading coefficient)` as `A → 0` and `A → ∞`, compared with
/// `m_λ` and `e_{λ′}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitComparison {
    pub label: Partition,
    pub zero_limit_is_monomial: bool,
    pub infinite_limit_is_elementary: bool,
}

pub fn limit_comparison(jack: &JackPoly) -> Result<LimitComparison> {
    let lead = jack
        .coefficient(&jack.label)
        .and_then(|c| c.as_ratfunc())
        .ok_or_else(|| Error::MixedScalarMode)?
        .clone();
    let mut at_zero = BTreeMap::new();
    let mut at_inf = BTreeMap::new();
    let mut finite = true;
    for (p, c) in &jack.coeffs {
        let f = c.as_ratfunc().ok_or(Error::MixedScalarMode)?.div(&lead)?;
        match (f.limit_at_zero(), f.limit_at_infinity()) {
            (Some(z), Some(i)) => {
                if !z.is_zero() {
                    at_zero.insert(p.clone(), z);
                }
                if !i.is_zero() {
                    at_inf.insert(p.clone(), i);
                }
            }
            _ => finite = false,
        }
    }
    let monomial = BTreeMap::from([(jack.label.clone(), Rational::one())]);
    let elementary = elementary_in_monomials(&jack.label.conjugate());
    Ok(LimitComparison {
        label: jack.label.clone(),
        zero_limit_is_monomial: finite && at_zero == monomial,
        infinite_limit_is_elementary: finite && at_inf == elementary,
    })
}

/// `Π_s (N + a′(s)/A − l′(s)) / (N + (a′(s)+1)/A − l′(s) − 1)`
pub fn torus_product(label: &Partition, a: &Rational, n: usize) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::ZeroCoupling);
    }
    let n = int(n as i64);
    let mut acc = Rational::one();
    for (row, col) in label.cells() {
        let s = label.cell_stats(row, col)?;
        let (ac, lc) = (int(s.arm_colength as i64), int(s.leg_colength as i64));
        let num = &n + &ac / a - &lc;
        let den = &n + (&ac + int(1)) / a - &lc - int(1);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        acc *= num / den;
    }
    Ok(acc)
}

/// Both sides of the torus orthogonality relation for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusReport {
    pub k: Partition,
    pub n: Partition,
    #[serde(with = "crate::scalars::rational")]
    pub coupling: Rational,
    pub n_particles: usize,
    #[serde(with = "crate::scalars::rational")]
    pub lhs: Rational,
    #[serde(with = "crate::scalars::rational")]
    pub rhs: Rational,
    pub matches: bool,
}

/// Constant-term scalar product of `J_k` and `J_n` in `N` variables against
/// `δ_{k,n} j_k Π_s (…)`.
pub fn verify_torus_orthogonality(k: &Partition, n: &Partition, a: &Rational, n_particles: usize) -> Result<TorusReport> {
    if k.weight() != n.weight() {
        return Err(Error::WeightMismatch(k.weight(), n.weight()));
    }
    let longest = k.len().max(n.len());
    if n_particles < longest {
        return Err(Error::NTooSmall { n: n_particles, len: longest });
    }
    let coupling = Coupling::fixed(a.clone());
    let basis = JackBasis::new(k.weight(), &coupling)?;
    verify_torus_with(&basis, k, n, n_particles)
}

/// [`verify_torus_orthogonality`] with a prebuilt Jack basis at a fixed coupling.
pub fn verify_torus_with(basis: &JackBasis, k: &Partition, n: &Partition, n_particles: usize) -> Result<TorusReport> {
    let Coupling::Fixed(a) = &basis.coupling else {
        return Err(Error::MixedScalarMode);
    };
    let jk = basis.get(k).ok_or_else(|| Error::WeightMismatch(k.weight(), basis.weight))?;
    let jn = basis.get(n).ok_or_else(|| Error::WeightMismatch(n.weight(), basis.weight))?;
    let lhs = oracle::torus_inner_product(
        &jk.to_laurent(n_particles, a)?,
        &jn.to_laurent(n_particles, a)?,
        a,
        n_particles,
    )?;
    let rhs = if k == n {
        let j = k.hook_products(&basis.coupling)?.norm.eval(a)?;
        j * torus_product(k, a, n_particles)?
    } else {
        Rational::zero()
    };
    Ok(TorusReport {
        k: k.clone(),
        n: n.clone(),
        coupling: a.clone(),
        n_particles,
        matches: lhs == rhs,
        lhs,
        rhs,
    })
}
