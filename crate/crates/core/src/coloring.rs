//! Arc colorings of link diagrams by finite quandles.
//!
//! A coloring assigns an element to every edge and every free loop. Both
//! halves of an over-strand carry the same color `y`; at a positive crossing
//! the outgoing under-edge is `x ∗ y` for the incoming color `x`, at a
//! negative crossing it is `x ∗⁻¹ y`.
//!
//! Enumeration is backtracking with propagation. Knowing the incoming
//! under-color and `y` fixes the outgoing one and vice versa; `y` itself is
//! never solved for. When nothing propagates, the search branches on the
//! lowest uncolored edge in ascending color order, so the stream order is
//! canonical. Free loops are filled in last, as an odometer over their
//! allowed colors.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Edge, LinkDiagram, Sign};
use crate::exec::Exec;
use crate::quandle::{Elem, FiniteQuandle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {color} on {place} is out of range for a quandle of size {size}")]
    Range { place: String, color: Elem, size: usize },
    #[error("coloring has {found} {what}, diagram has {expected}")]
    Shape { what: &'static str, found: usize, expected: usize },
    #[error("orbit tuple has {found} entries for {expected} components")]
    OrbitTupleLength { found: usize, expected: usize },
    #[error("orbit id {id} out of range ({count} orbits)")]
    OrbitIndex { id: usize, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcColoring {
    /// `colors[e - 1]` is the color of edge `e`.
    pub colors: Vec<Elem>,
    pub free_loop_colors: Vec<Elem>,
}

impl ArcColoring {
    pub fn monochromatic(d: &LinkDiagram, x: Elem) -> Self {
        ArcColoring { colors: vec![x; d.edge_count()], free_loop_colors: vec![x; d.free_loops()] }
    }

    #[inline]
    pub fn color(&self, e: Edge) -> Elem {
        self.colors[e as usize - 1]
    }

    /// Color of any edge of component `i` (or of the free loop it stands for).
    pub fn component_color(&self, d: &LinkDiagram, i: usize) -> Elem {
        let traced = d.traced_component_count();
        if i < traced {
            self.color(d.component_edges(i)[0])
        } else {
            self.free_loop_colors[i - traced]
        }
    }

    /// `edge=color` pairs sorted by edge, then `oK=color` for free loops.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.colors.iter().enumerate() {
            if !s.is_empty() {
                s.push(' ');
            }
            let _ = write!(s, "{}={c}", i + 1);
        }
        for (i, c) in self.free_loop_colors.iter().enumerate() {
            if !s.is_empty() {
                s.push(' ');
            }
            let _ = write!(s, "o{}={c}", i + 1);
        }
        s
    }
}

/// Which coloring rule fails at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringRule {
    OverContinuity,
    CrossingRelation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringViolation {
    pub crossing: usize,
    pub rule: ColoringRule,
}

/// The first crossing where `a` breaks a coloring rule, if any.
pub fn coloring_violation(
    d: &LinkDiagram,
    q: &FiniteQuandle,
    a: &ArcColoring,
) -> Result<Option<ColoringViolation>, ColoringError> {
    if a.colors.len() != d.edge_count() {
        return Err(ColoringError::Shape { what: "edge colors", found: a.colors.len(), expected: d.edge_count() });
    }
    if a.free_loop_colors.len() != d.free_loops() {
        return Err(ColoringError::Shape {
            what: "free loop colors",
            found: a.free_loop_colors.len(),
            expected: d.free_loops(),
        });
    }
    let n = q.size();
    for (i, &c) in a.colors.iter().enumerate() {
        if c >= n {
            return Err(ColoringError::Range { place: format!("edge {}", i + 1), color: c, size: n });
        }
    }
    for (i, &c) in a.free_loop_colors.iter().enumerate() {
        if c >= n {
            return Err(ColoringError::Range { place: format!("free loop {}", i + 1), color: c, size: n });
        }
    }
    for (k, &[e1, e2, e3, e4]) in d.crossings().iter().enumerate() {
        let y = a.color(e2);
        if a.color(e4) != y {
            return Ok(Some(ColoringViolation { crossing: k, rule: ColoringRule::OverContinuity }));
        }
        let expected = match d.sign(k) {
            Sign::Positive => q.op(a.color(e1), y),
            Sign::Negative => q.inv_op(a.color(e1), y),
        };
        if a.color(e3) != expected {
            return Ok(Some(ColoringViolation { crossing: k, rule: ColoringRule::CrossingRelation }));
        }
    }
    Ok(None)
}

pub fn is_valid_coloring(d: &LinkDiagram, q: &FiniteQuandle, a: &ArcColoring) -> Result<bool, ColoringError> {
    coloring_violation(d, q, a).map(|v| v.is_none())
}

#[derive(Clone, Copy, Debug)]
struct Cross {
    e: [usize; 4],
    positive: bool,
}

/// A diagram and quandle, optionally with each component restricted to one
/// orbit.
#[derive(Clone, Debug)]
pub struct ColoringProblem<'a> {
    q: &'a FiniteQuandle,
    edge_count: usize,
    crossings: Vec<Cross>,
    incident: Vec<Vec<usize>>,
    edge_domain: Vec<Vec<Elem>>,
    allowed: Vec<Vec<bool>>,
    free_domain: Vec<Vec<Elem>>,
    /// `over[x * n + z]`: every `y` with `x * y = z`.
    over: Vec<Vec<Elem>>,
}

impl<'a> ColoringProblem<'a> {
    pub fn new(d: &LinkDiagram, q: &'a FiniteQuandle) -> Self {
        let n = q.size();
        let all: Vec<Elem> = (0..n).collect();
        Self::build(d, q, |_| all.clone())
    }

    /// Colorings sending component `i` into orbit `tuple[i]`.
    pub fn in_orbits(d: &LinkDiagram, q: &'a FiniteQuandle, tuple: &[usize]) -> Result<Self, ColoringError> {
        if tuple.len() != d.component_count() {
            return Err(ColoringError::OrbitTupleLength { found: tuple.len(), expected: d.component_count() });
        }
        let orbits = q.orbits();
        if let Some(&id) = tuple.iter().find(|&&id| id >= orbits.len()) {
            return Err(ColoringError::OrbitIndex { id, count: orbits.len() });
        }
        Ok(Self::build(d, q, |i| orbits.orbit_members[tuple[i]].clone()))
    }

    fn build(d: &LinkDiagram, q: &'a FiniteQuandle, domain_of: impl Fn(usize) -> Vec<Elem>) -> Self {
        let n = q.size();
        let edge_count = d.edge_count();
        let crossings: Vec<Cross> = d
            .crossings()
            .iter()
            .enumerate()
            .map(|(k, rec)| Cross { e: rec.map(|e| e as usize - 1), positive: d.sign(k) == Sign::Positive })
            .collect();
        let mut incident = vec![Vec::new(); edge_count];
        for (k, c) in crossings.iter().enumerate() {
            for &e in &c.e {
                if !incident[e].contains(&k) {
                    incident[e].push(k);
                }
            }
        }
        let component_domains: Vec<Vec<Elem>> = (0..d.component_count()).map(&domain_of).collect();
        let edge_domain: Vec<Vec<Elem>> =
            (1..=edge_count as Edge).map(|e| component_domains[d.component_of(e)].clone()).collect();
        let allowed = edge_domain
            .iter()
            .map(|dom| {
                let mut mask = vec![false; n];
                for &x in dom {
                    mask[x] = true;
                }
                mask
            })
            .collect();
        let free_domain = component_domains[d.traced_component_count()..].to_vec();
        let mut over = vec![Vec::new(); n * n];
        for x in 0..n {
            for y in 0..n {
                over[x * n + q.op(x, y)].push(y);
            }
        }
        ColoringProblem { q, edge_count, crossings, incident, edge_domain, allowed, free_domain, over }
    }

    /// The canonical stream of colorings.
    pub fn iter(&self) -> Colorings<'_, 'a> {
        Colorings::new(self, None)
    }

    /// Number of ways to color the free loops.
    fn free_factor(&self) -> u64 {
        self.free_domain.iter().map(|d| d.len() as u64).product()
    }

    /// Independent sub-streams whose concatenation is [`Self::iter`]: one per
    /// color of edge 1, or the whole stream when there are no edges.
    pub fn branches(&self) -> Vec<Colorings<'_, 'a>> {
        if self.edge_count == 0 {
            return vec![self.iter()];
        }
        self.edge_domain[0].iter().map(|&v| Colorings::new(self, Some(v))).collect()
    }

    pub fn count(&self, exec: Exec) -> u64 {
        let free = self.free_factor();
        let counts = exec.map(self.branches(), |mut b| b.count_edge_solutions());
        counts.into_iter().sum::<u64>() * free
    }

    /// Folds each branch into its own accumulator; results are in canonical
    /// branch order.
    pub fn fold_branches<A, I, F>(&self, exec: Exec, init: I, step: F) -> Vec<A>
    where
        A: Send,
        I: Fn() -> A + Send + Sync,
        F: Fn(&mut A, &ArcColoring) + Send + Sync,
    {
        exec.map(self.branches(), |b| {
            let mut acc = init();
            for a in b {
                step(&mut acc, &a);
            }
            acc
        })
    }

    pub fn collect(&self, exec: Exec) -> Vec<ArcColoring> {
        self.fold_branches(exec, Vec::new, |v, a| v.push(a.clone())).into_iter().flatten().collect()
    }
}

/// Iterator over the colorings of a [`ColoringProblem`].
pub struct Colorings<'p, 'a> {
    p: &'p ColoringProblem<'a>,
    colors: Vec<Option<Elem>>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    stack: Vec<(usize, usize, usize)>,
    descending: bool,
    dead: bool,
    free: Option<Vec<usize>>,
}

impl<'p, 'a> Colorings<'p, 'a> {
    fn new(p: &'p ColoringProblem<'a>, first: Option<Elem>) -> Self {
        let mut it = Colorings {
            p,
            colors: vec![None; p.edge_count],
            trail: Vec::new(),
            queue: Vec::new(),
            stack: Vec::new(),
            descending: true,
            dead: false,
            free: None,
        };
        if let Some(v) = first {
            it.dead = !it.assign(0, v);
            it.trail.clear();
        }
        it
    }

    fn set(&mut self, e: usize, v: Elem) -> bool {
        match self.colors[e] {
            Some(old) => old == v,
            None => {
                if !self.p.allowed[e][v] {
                    return false;
                }
                self.colors[e] = Some(v);
                self.trail.push(e);
                self.queue.extend_from_slice(&self.p.incident[e]);
                true
            }
        }
    }

    fn assign(&mut self, e: usize, v: Elem) -> bool {
        self.queue.clear();
        if !self.set(e, v) {
            return false;
        }
        let q = self.p.q;
        while let Some(k) = self.queue.pop() {
            let Cross { e: [a, b, c, d], positive } = self.p.crossings[k];
            let y = match (self.colors[b], self.colors[d]) {
                (Some(y), Some(z)) if y != z => return false,
                (Some(y), None) => {
                    if !self.set(d, y) {
                        return false;
                    }
                    Some(y)
                }
                (None, Some(z)) => {
                    if !self.set(b, z) {
                        return false;
                    }
                    Some(z)
                }
                (y, _) => y,
            };
            let Some(y) = y else {
                // prune when no over-color links the two known under-colors
                if let (Some(x), Some(z)) = (self.colors[a], self.colors[c]) {
                    let (from, to) = if positive { (x, z) } else { (z, x) };
                    let n = q.size();
                    if !self.p.over[from * n + to].iter().any(|&y| self.p.allowed[b][y]) {
                        return false;
                    }
                }
                continue;
            };
            let ok = match (self.colors[a], self.colors[c]) {
                (Some(x), _) => self.set(c, if positive { q.op(x, y) } else { q.inv_op(x, y) }),
                (None, Some(z)) => self.set(a, if positive { q.inv_op(z, y) } else { q.op(z, y) }),
                (None, None) => true,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("nonempty");
            self.colors[e] = None;
        }
    }

    /// Moves to the next complete edge coloring.
    fn advance(&mut self) -> bool {
        if self.dead {
            return false;
        }
        loop {
            if self.descending {
                match self.colors.iter().position(Option::is_none) {
                    None => {
                        self.descending = false;
                        if self.stack.is_empty() {
                            self.dead = true;
                        }
                        return true;
                    }
                    Some(e) => self.stack.push((e, 0, self.trail.len())),
                }
            }
            let p = self.p;
            let Some(&mut (e, ref mut next, mark)) = self.stack.last_mut() else {
                self.dead = true;
                return false;
            };
            let domain = &p.edge_domain[e];
            let Some(&v) = domain.get(*next) else {
                self.stack.pop();
                self.undo_to(mark);
                self.descending = false;
                continue;
            };
            *next += 1;
            self.undo_to(mark);
            self.descending = self.assign(e, v);
        }
    }

    fn count_edge_solutions(&mut self) -> u64 {
        let mut n = 0;
        while self.advance() {
            n += 1;
        }
        n
    }

    fn current(&self, free: &[usize]) -> ArcColoring {
        ArcColoring {
            colors: self.colors.iter().map(|c| c.expect("complete")).collect(),
            free_loop_colors: free.iter().zip(&self.p.free_domain).map(|(&i, d)| d[i]).collect(),
        }
    }
}

impl Iterator for Colorings<'_, '_> {
    type Item = ArcColoring;

    fn next(&mut self) -> Option<ArcColoring> {
        let domains = &self.p.free_domain;
        if let Some(free) = &mut self.free {
            // odometer, last loop fastest
            let mut i = free.len();
            loop {
                if i == 0 {
                    self.free = None;
                    break;
                }
                i -= 1;
                free[i] += 1;
                if free[i] < domains[i].len() {
                    let free = free.clone();
                    return Some(self.current(&free));
                }
                free[i] = 0;
            }
        }
        if domains.iter().any(Vec::is_empty) || !self.advance() {
            return None;
        }
        let start = vec![0; domains.len()];
        let a = self.current(&start);
        self.free = Some(start);
        Some(a)
    }
}

pub fn enumerate_colorings(d: &LinkDiagram, q: &FiniteQuandle) -> Vec<ArcColoring> {
    ColoringProblem::new(d, q).collect(Exec::Sequential)
}

pub fn enumerate_in_orbits(
    d: &LinkDiagram,
    q: &FiniteQuandle,
    tuple: &[usize],
) -> Result<Vec<ArcColoring>, ColoringError> {
    Ok(ColoringProblem::in_orbits(d, q, tuple)?.collect(Exec::Sequential))
}

pub fn count_colorings(d: &LinkDiagram, q: &FiniteQuandle) -> u64 {
    ColoringProblem::new(d, q).count(Exec::default())
}

pub fn count_colorings_with(d: &LinkDiagram, q: &FiniteQuandle, exec: Exec) -> u64 {
    ColoringProblem::new(d, q).count(exec)
}

/// Every orbit tuple in lexicographic order, one orbit id per component.
pub fn orbit_tuples(orbit_count: usize, components: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..components {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..orbit_count).map(move |o| {
                    let mut t = t.clone();
                    t.push(o);
                    t
                })
            })
            .collect();
    }
    out
}
