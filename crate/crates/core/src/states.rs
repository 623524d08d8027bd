//! Sector states, squeezing, and the mother/daughter graph.
//!
//! A state `|n₁ … n_N⟩` is stored as a partition shape plus a Galilean shift:
//! `nⱼ = shapeⱼ + shift`, with the shift chosen so the smallest quantum number
//! maps to 0. `|4,4,3,3⟩` is shape `(1,1)` with shift 3.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_with_max_len, Dominance, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SectorState {
    shape: Partition,
    shift: i64,
    n: usize,
}

impl SectorState {
    /// From non-increasing quantum numbers `n₁ ≥ … ≥ n_N` (any sign).
    pub fn from_quantum_numbers(ns: &[i64]) -> Result<Self> {
        if ns.is_empty() {
            return Err(Error::InvalidRoot("a state needs at least one particle".into()));
        }
        if ns.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing(ns.to_vec()));
        }
        let shift = *ns.last().unwrap();
        let shifted: Vec<i64> = ns.iter().map(|&v| v - shift).collect();
        Ok(SectorState {
            shape: Partition::new(&shifted)?,
            shift,
            n: ns.len(),
        })
    }

    /// `shape` padded with zeros to `n` particles, every entry raised by `shift`.
    pub fn new(shape: Partition, shift: i64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRoot("a state needs at least one particle".into()));
        }
        if shape.len() > n {
            return Err(Error::LengthExceedsN { len: shape.len(), n });
        }
        let ns: Vec<i64> = (0..n).map(|i| shape.part(i) as i64 + shift).collect();
        Self::from_quantum_numbers(&ns)
    }

    /// The zero-shift state labelled by a partition.
    pub fn from_partition(shape: &Partition, n: usize) -> Result<Self> {
        Self::new(shape.clone(), 0, n)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn n_particles(&self) -> usize {
        self.n
    }

    pub fn quantum_numbers(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.shape.part(i) as i64 + self.shift).collect()
    }

    /// `Σ nⱼ`
    pub fn total(&self) -> i64 {
        self.shape.weight() as i64 + self.shift * self.n as i64
    }

    /// The partition `(n₁, …, n_N)` if every quantum number is non-negative.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(&self.quantum_numbers()).ok()
    }

    /// `ν(η)`: how many quantum numbers equal `value`.
    pub fn multiplicity(&self, value: i64) -> usize {
        self.quantum_numbers().iter().filter(|&&v| v == value).count()
    }

    /// `Σ nⱼ²`
    pub fn square_sum(&self) -> i64 {
        self.quantum_numbers().iter().map(|v| v * v).sum()
    }

    /// `Σ_{j<k} (nⱼ − n_k)`
    pub fn gap_sum(&self) -> i64 {
        let n = self.n as i64;
        self.quantum_numbers()
            .iter()
            .enumerate()
            .map(|(j, v)| (n - 1 - 2 * j as i64) * v)
            .sum()
    }

    /// `Π_i m_i!` over the multiplicities of all N quantum numbers: the factor
    /// between a full permutation-sum ket and the monomial symmetric function.
    pub fn ket_factor(&self) -> u64 {
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for v in self.quantum_numbers() {
            *counts.entry(v).or_default() += 1;
        }
        counts.values().map(|&m| (1..=m).product::<u64>()).product()
    }

    pub fn dominance_compare(&self, other: &SectorState) -> Result<Dominance> {
        if self.n != other.n || self.total() != other.total() {
            return Err(Error::UnequalWeight(
                self.shape.weight(),
                other.shape.weight(),
            ));
        }
        let (a, b) = (self.quantum_numbers(), other.quantum_numbers());
        let (mut pa, mut pb) = (0i64, 0i64);
        let (mut le, mut ge) = (true, true);
        for (x, y) in a.iter().zip(&b) {
            pa += x;
            pb += y;
            le &= pa <= pb;
            ge &= pa >= pb;
        }
        Ok(match (le, ge) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `self ≤ other` in dominance (false when not comparable at all).
    pub fn dominated_by(&self, other: &SectorState) -> bool {
        matches!(
            self.dominance_compare(other),
            Ok(Dominance::Less | Dominance::Equal)
        )
    }

    /// `|n₁,…,n_N⟩` as comma-separated quantum numbers.
    pub fn label(&self) -> String {
        self.quantum_numbers()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Lexicographic on the quantum numbers (a linear extension of dominance
/// inside a sector), then by particle number.
impl Ord for SectorState {
    fn cmp(&self, other: &Self) -> Ordering {
        self.quantum_numbers()
            .cmp(&other.quantum_numbers())
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for SectorState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SectorState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩", self.label())
    }
}

impl Serialize for SectorState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.quantum_numbers().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SectorState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ns = Vec::<i64>::deserialize(d)?;
        SectorState::from_quantum_numbers(&ns).map_err(serde::de::Error::custom)
    }
}

/// Moves `p` units from position `j` to position `k` (0-based, `j < k`) and
/// re-sorts. Requires `1 ≤ p ≤ nⱼ − n_k − 1`.
pub fn squeeze(state: &SectorState, j: usize, k: usize, p: i64) -> Result<SectorState> {
    let mut ns = state.quantum_numbers();
    let out_of_range = Error::SqueezeOutOfRange { j, k, p };
    if j >= k || k >= ns.len() {
        return Err(out_of_range);
    }
    if p < 1 || p > ns[j] - ns[k] - 1 {
        return Err(out_of_range);
    }
    ns[j] -= p;
    ns[k] += p;
    ns.sort_unstable_by(|a, b| b.cmp(a));
    SectorState::from_quantum_numbers(&ns)
}

/// A one-unit squeeze of the value pair `(high, low)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Daughter {
    pub state: SectorState,
    /// `W = ν(high)·ν(low)` in the mother.
    pub weight: u64,
    pub high: i64,
    pub low: i64,
    pub high_multiplicity: usize,
    pub low_multiplicity: usize,
}

/// One daughter per pair of distinct values `high > low` with `high − low ≥ 2`:
/// one copy of each moves one unit toward the other. Pairs are visited with
/// `high` descending, then `low` descending.
pub fn daughters(state: &SectorState) -> Vec<Daughter> {
    let ns = state.quantum_numbers();
    let mut values: Vec<(i64, usize)> = Vec::new();
    for &v in &ns {
        match values.last_mut() {
            Some((x, m)) if *x == v => *m += 1,
            _ => values.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    for (ai, &(high, mh)) in values.iter().enumerate() {
        for &(low, ml) in &values[ai + 1..] {
            if high - low < 2 {
                continue;
            }
            let mut next = ns.clone();
            let hp = next.iter().position(|&v| v == high).unwrap();
            next[hp] -= 1;
            let lp = next.iter().rposition(|&v| v == low).unwrap();
            next[lp] += 1;
            next.sort_unstable_by(|a, b| b.cmp(a));
            out.push(Daughter {
                state: SectorState::from_quantum_numbers(&next).expect("sorted"),
                weight: (mh * ml) as u64,
                high,
                low,
                high_multiplicity: mh,
                low_multiplicity: ml,
            });
        }
    }
    out
}

/// States of a sector, in descending (dominance-compatible) order.
///
/// With a root: the root and everything reachable from it by squeezing.
/// Without: all `N`-particle states with quantum numbers ≥ 0 summing to `total`.
pub fn enumerate_sector(n: usize, total: i64, root: Option<&SectorState>) -> Result<Vec<SectorState>> {
    if n == 0 {
        return Err(Error::InvalidRoot("N must be at least 1".into()));
    }
    match root {
        Some(root) => {
            if root.n_particles() != n || root.total() != total {
                return Err(Error::InvalidRoot(format!(
                    "{root} does not have {n} particles with total {total}"
                )));
            }
            let (mut states, _) = reachable(root);
            states.sort_unstable_by(|a, b| b.cmp(a));
            Ok(states)
        }
        None => {
            if total < 0 {
                return Ok(Vec::new());
            }
            partitions_with_max_len(total as usize, n)
                .iter()
                .map(|p| SectorState::from_partition(p, n))
                .collect()
        }
    }
}

/// Breadth-first closure under [`daughters`], in discovery order.
fn reachable(root: &SectorState) -> (Vec<SectorState>, HashMap<SectorState, usize>) {
    let mut order = vec![root.clone()];
    let mut seen: HashMap<SectorState, usize> = HashMap::from([(root.clone(), 0)]);
    let mut queue = VecDeque::from([root.clone()]);
    while let Some(s) = queue.pop_front() {
        for d in daughters(&s) {
            if !seen.contains_key(&d.state) {
                seen.insert(d.state.clone(), order.len());
                order.push(d.state.clone());
                queue.push_back(d.state);
            }
        }
    }
    (order, seen)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub state: SectorState,
    /// `u`: 1 for the irreducible bottom, maximal for the root.
    pub level: usize,
    /// `μ`: 1-based position inside the level, in breadth-first discovery order.
    pub index: usize,
}

impl GraphNode {
    /// `|u⟩_μ`
    pub fn tag(&self) -> String {
        format!("|{}⟩_{}", self.level, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    #[serde(rename = "w")]
    pub weight: u64,
    #[serde(skip)]
    pub high_multiplicity: usize,
    #[serde(skip)]
    pub low_multiplicity: usize,
}

/// Mother → daughter graph of one root. Nodes are in descending sector order,
/// edges sorted by (source, target) node index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SqueezeGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<Edge>,
}

pub fn build_squeeze_graph(root: &SectorState) -> SqueezeGraph {
    let (discovered, discovery) = reachable(root);
    let mut states = discovered;
    states.sort_unstable_by(|a, b| b.cmp(a));
    let index: HashMap<&SectorState, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let mut edges = Vec::new();
    for (i, s) in states.iter().enumerate() {
        for d in daughters(s) {
            edges.push(Edge {
                from: i,
                to: index[&d.state],
                weight: d.weight,
                high_multiplicity: d.high_multiplicity,
                low_multiplicity: d.low_multiplicity,
            });
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));

    // Longest path from the root; descending order is topological.
    let mut depth = vec![0usize; states.len()];
    for e in &edges {
        depth[e.to] = depth[e.to].max(depth[e.from] + 1);
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0);

    let mut by_level: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &d) in depth.iter().enumerate() {
        by_level.entry(max_depth - d + 1).or_default().push(i);
    }
    let mut level_index = vec![(0, 0); states.len()];
    for (level, mut members) in by_level {
        members.sort_by_key(|&i| discovery[&states[i]]);
        for (mu, i) in members.into_iter().enumerate() {
            level_index[i] = (level, mu + 1);
        }
    }

    let nodes = states
        .into_iter()
        .zip(level_index)
        .map(|(state, (level, index))| GraphNode { state, level, index })
        .collect();
    SqueezeGraph { nodes, edges }
}

impl SqueezeGraph {
    pub fn node_index(&self, state: &SectorState) -> Option<usize> {
        self.nodes.iter().position(|n| &n.state == state)
    }

    pub fn states(&self) -> Vec<SectorState> {
        self.nodes.iter().map(|n| n.state.clone()).collect()
    }

    pub fn max_level(&self) -> usize {
        self.nodes.iter().map(|n| n.level).max().unwrap_or(0)
    }

    /// Node indices per level, highest level first, ordered by `μ`.
    pub fn levels(&self) -> Vec<(usize, Vec<usize>)> {
        let mut by_level: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            by_level.entry(n.level).or_default().push(i);
        }
        by_level
            .into_iter()
            .rev()
            .map(|(l, mut v)| {
                v.sort_by_key(|&i| self.nodes[i].index);
                (l, v)
            })
            .collect()
    }

    /// Edges ordered as in the mother/daughter tables: by the source's
    /// `(level desc, μ)`, then the target's.
    pub fn edges_in_table_order(&self) -> Vec<&Edge> {
        let key = |i: usize| (std::cmp::Reverse(self.nodes[i].level), self.nodes[i].index);
        let mut edges: Vec<&Edge> = self.edges.iter().collect();
        edges.sort_by_key(|e| (key(e.from), key(e.to)));
        edges
    }

    /// Number of directed paths between two nodes and the sum over them of the
    /// product of edge weights.
    pub fn path_weight_sum(&self, from: usize, to: usize) -> (u64, u64) {
        let mut count = vec![0u64; self.nodes.len()];
        let mut weight = vec![0u64; self.nodes.len()];
        count[from] = 1;
        weight[from] = 1;
        // Edges sorted by source index follow the topological order.
        for e in &self.edges {
            if count[e.from] == 0 {
                continue;
            }
            count[e.to] += count[e.from];
            weight[e.to] += weight[e.from] * e.weight;
        }
        (count[to], weight[to])
    }

    /// Mother/daughter association table.
    pub fn render_association_table(&self) -> String {
        let mut out = String::from("Mother State | Daughter State\n");
        let mut last_from = None;
        for e in self.edges_in_table_order() {
            let mother = if last_from == Some(e.from) {
                String::new()
            } else {
                let m = &self.nodes[e.from];
                format!("{} = {}", m.state, m.tag())
            };
            last_from = Some(e.from);
            let d = &self.nodes[e.to];
            let note = if classify_irreducible(&d.state) == Irreducibility::Reducible {
                ""
            } else {
                " (irreducible daughter state)"
            };
            out.push_str(&format!("{mother} | {} = {}{note}\n", d.state, d.tag()));
        }
        out
    }

    /// Transition/weight table, one row per edge.
    pub fn render_weight_table(&self) -> String {
        let mut out = String::from("Transition | Weight (W)\n");
        for e in self.edges_in_table_order() {
            out.push_str(&format!(
                "{} → {} | {}·{} = {}\n",
                self.nodes[e.from].tag(),
                self.nodes[e.to].tag(),
                e.high_multiplicity,
                e.low_multiplicity,
                e.weight
            ));
        }
        out
    }

    /// Indented level diagram: each level with its states and outgoing arrows.
    pub fn render_levels(&self) -> String {
        let mut out = String::new();
        for (level, members) in self.levels() {
            out.push_str(&format!("level {level}\n"));
            for i in members {
                let node = &self.nodes[i];
                out.push_str(&format!("  {} {}\n", node.tag(), node.state));
                for e in self.edges.iter().filter(|e| e.from == i) {
                    out.push_str(&format!("      → {} (W={})\n", self.nodes[e.to].tag(), e.weight));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Irreducibility {
    Reducible,
    /// All quantum numbers equal: a Galilean-boosted ground state.
    Type1,
    /// Exactly two values `m` and `m − 1`: a single hole excitation.
    Type2,
}

pub fn classify_irreducible(state: &SectorState) -> Irreducibility {
    let ns = state.quantum_numbers();
    let (max, min) = (ns[0], ns[ns.len() - 1]);
    match max - min {
        0 => Irreducibility::Type1,
        1 => Irreducibility::Type2,
        _ => Irreducibility::Reducible,
    }
}
