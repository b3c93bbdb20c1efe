//! Weights of colorings and the cocycle invariant `Φ(L, θ; i)`.
//!
//! At a crossing with over-color `y`, the under-strand's component receives
//! `+θ(x, y)` if the crossing is positive and `x` is the incoming
//! under-color, or `−θ(x, y)` if it is negative and `x` is the outgoing
//! under-color. In both cases the other under-color is `x ∗ y`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{coloring_violation, orbit_tuples, ArcColoring, ColoringError, ColoringProblem};
use crate::diagram::{LinkDiagram, Sign};
use crate::exec::Exec;
use crate::homology::{reduce, Cochain2, CocycleViolation, DegeneracyMode, HomologyError, QuandleComplex};
use crate::quandle::{Elem, FiniteQuandle};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvariantMode {
    /// Requires a quasi-trivial quandle and a cocycle vanishing on orbits.
    #[default]
    LinkHomotopy,
    /// Any quandle and 2-cocycle; the result is an isotopy invariant only.
    Ambient,
}

impl InvariantMode {
    pub fn degeneracy(self) -> DegeneracyMode {
        match self {
            InvariantMode::LinkHomotopy => DegeneracyMode::QuasiTrivial,
            InvariantMode::Ambient => DegeneracyMode::Standard,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("link-homotopy mode needs a quasi-trivial quandle, but {x} * {y} != {x} with {y} in the orbit of {x}")]
    NotQuasiTrivial { x: Elem, y: Elem },
    #[error("cochain is not a 2-cocycle: {0:?} fails at {1:?}")]
    NotACocycle(crate::homology::CocycleCondition, Vec<Elem>),
    #[error("cochain is defined on {cochain} elements, quandle has {quandle}")]
    Size { cochain: usize, quandle: usize },
    #[error("invalid coloring at crossing {}", .0 + 1)]
    InvalidColoring(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("reports differ in shape: {0}")]
    ShapeMismatch(String),
}

/// Per-component weights of one coloring, reduced into the coefficient group.
pub type WeightVector = Vec<i64>;

/// Weights without validating the coloring.
pub fn weights_unchecked(d: &LinkDiagram, theta: &Cochain2, a: &ArcColoring) -> WeightVector {
    let m = theta.modulus();
    let mut w = vec![0i64; d.component_count()];
    for (k, &[e1, e2, e3, _]) in d.crossings().iter().enumerate() {
        let y = a.color(e2);
        let term = match d.sign(k) {
            Sign::Positive => theta.value(a.color(e1), y),
            Sign::Negative => -theta.value(a.color(e3), y),
        };
        let i = d.under_component(k);
        w[i] = reduce(w[i] + term, m);
    }
    w
}

pub fn weights(
    d: &LinkDiagram,
    q: &FiniteQuandle,
    theta: &Cochain2,
    a: &ArcColoring,
) -> Result<WeightVector, InvariantError> {
    check_size(q, theta)?;
    if let Some(v) = coloring_violation(d, q, a)? {
        return Err(InvariantError::InvalidColoring(v.crossing));
    }
    Ok(weights_unchecked(d, theta, a))
}

fn check_size(q: &FiniteQuandle, theta: &Cochain2) -> Result<(), InvariantError> {
    if theta.size() != q.size() {
        return Err(InvariantError::Size { cochain: theta.size(), quandle: q.size() });
    }
    Ok(())
}

/// Checks that `(q, θ)` is admissible for `mode`.
pub fn check_pair(q: &FiniteQuandle, theta: &Cochain2, mode: InvariantMode) -> Result<(), InvariantError> {
    check_size(q, theta)?;
    if mode == InvariantMode::LinkHomotopy {
        if let Some((x, y)) = q.quasi_triviality_witness() {
            return Err(InvariantError::NotQuasiTrivial { x, y });
        }
    }
    let report = QuandleComplex::new(q, mode.degeneracy())?.check_cocycle(theta)?;
    if let Some(CocycleViolation { condition, witness }) = report.violations.into_iter().next() {
        return Err(InvariantError::NotACocycle(condition, witness));
    }
    Ok(())
}

/// `Φ(L, θ; i)` for every component `i`, as value → multiplicity maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub modulus: u64,
    /// Number of colorings; every component's multiplicities sum to it.
    pub colorings: u64,
    pub components: Vec<BTreeMap<i64, u64>>,
}

impl InvariantReport {
    pub fn empty(modulus: u64, components: usize) -> Self {
        InvariantReport { modulus, colorings: 0, components: vec![BTreeMap::new(); components] }
    }

    pub fn add(&mut self, w: &[i64]) {
        self.colorings += 1;
        for (map, &v) in self.components.iter_mut().zip(w) {
            *map.entry(v).or_default() += 1;
        }
    }

    /// Multiset union.
    pub fn merge(&mut self, other: &InvariantReport) {
        self.colorings += other.colorings;
        for (mine, theirs) in self.components.iter_mut().zip(&other.components) {
            for (&v, &c) in theirs {
                *mine.entry(v).or_default() += c;
            }
        }
    }

    pub fn multiplicity(&self, component: usize, value: i64) -> u64 {
        self.components[component].get(&value).copied().unwrap_or(0)
    }

    /// Every weight of every component is zero.
    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(|m| m.keys().all(|&v| v == 0))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, map) in self.components.iter().enumerate() {
            writeln!(f, "component {}", i + 1)?;
            for (v, c) in map {
                writeln!(f, "{v} x{c}")?;
            }
        }
        Ok(())
    }
}

/// `Φ(L, θ; X_λ₁, …, X_λₙ; i)` for every orbit tuple, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedReport {
    pub modulus: u64,
    pub orbit_count: usize,
    pub entries: Vec<(Vec<usize>, InvariantReport)>,
}

impl RefinedReport {
    /// The unrefined report recovered as a multiset union.
    pub fn union(&self) -> InvariantReport {
        let comps = self.entries.first().map_or(0, |(t, _)| t.len());
        let mut total = InvariantReport::empty(self.modulus, comps);
        for (_, r) in &self.entries {
            total.merge(r);
        }
        total
    }

    pub fn get(&self, tuple: &[usize]) -> Option<&InvariantReport> {
        self.entries.iter().find(|(t, _)| t == tuple).map(|(_, r)| r)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RefinedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (tuple, r) in &self.entries {
            let t: Vec<String> = tuple.iter().map(|o| o.to_string()).collect();
            writeln!(f, "orbits {} colorings {}", t.join(" "), r.colorings)?;
            for (i, map) in r.components.iter().enumerate() {
                let items: Vec<String> = map.iter().map(|(v, c)| format!("{v} x{c}")).collect();
                writeln!(f, "  component {}: {}", i + 1, items.join(", "))?;
            }
        }
        Ok(())
    }
}

fn aggregate(d: &LinkDiagram, theta: &Cochain2, problem: &ColoringProblem<'_>, exec: Exec) -> InvariantReport {
    let comps = d.component_count();
    let m = theta.modulus();
    let parts =
        problem.fold_branches(exec, || InvariantReport::empty(m, comps), |r, a| r.add(&weights_unchecked(d, theta, a)));
    let mut total = InvariantReport::empty(m, comps);
    for p in &parts {
        total.merge(p);
    }
    total
}

pub fn cocycle_invariant(
    d: &LinkDiagram,
    q: &FiniteQuandle,
    theta: &Cochain2,
    mode: InvariantMode,
    exec: Exec,
) -> Result<InvariantReport, InvariantError> {
    check_pair(q, theta, mode)?;
    Ok(aggregate(d, theta, &ColoringProblem::new(d, q), exec))
}

pub fn refined_invariant(
    d: &LinkDiagram,
    q: &FiniteQuandle,
    theta: &Cochain2,
    mode: InvariantMode,
    exec: Exec,
) -> Result<RefinedReport, InvariantError> {
    check_pair(q, theta, mode)?;
    let orbit_count = q.orbits().len();
    let tuples = orbit_tuples(orbit_count, d.component_count());
    let problems = tuples.iter().map(|t| ColoringProblem::in_orbits(d, q, t)).collect::<Result<Vec<_>, _>>()?;
    let reports = exec.map(problems, |p| aggregate(d, theta, &p, Exec::Sequential));
    Ok(RefinedReport { modulus: theta.modulus(), orbit_count, entries: tuples.into_iter().zip(reports).collect() })
}

/// Whether two reports have equal multisets on every component.
pub fn compare_reports(r1: &InvariantReport, r2: &InvariantReport) -> Result<bool, InvariantError> {
    if r1.modulus != r2.modulus {
        return Err(InvariantError::ShapeMismatch(format!("modulus {} vs {}", r1.modulus, r2.modulus)));
    }
    if r1.components.len() != r2.components.len() {
        return Err(InvariantError::ShapeMismatch(format!(
            "{} vs {} components",
            r1.components.len(),
            r2.components.len()
        )));
    }
    Ok(r1.components == r2.components)
}
