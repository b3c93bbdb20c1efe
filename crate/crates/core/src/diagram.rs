//! Oriented, ordered link diagrams given as PD codes.
//!
//! A crossing `X a b c d` lists its four edge labels counterclockwise,
//! starting at the incoming under-edge, so `a → c` is the under-strand and
//! `b`, `d` are the two halves of the over-strand. Edges are numbered
//! consecutively along each component in the direction of its orientation
//! (wrapping from the largest label of a component back to its smallest).
//!
//! The direction of each over-strand is recovered by tracing edge ends: every
//! edge enters exactly one crossing and leaves exactly one, and at each
//! crossing one over slot is entered and the other left. This determines the
//! orientation even on components with only two edges, where label
//! arithmetic alone is ambiguous.
//!
//! A two-edge component that only ever passes over is the one case the
//! numbering leaves open; an `enter e k` directive (edge `e` enters crossing
//! `k`, 1-based) fixes it, and otherwise the first occurrence of the smaller
//! label is taken as its entering end.
//!
//! Sign convention: a crossing is positive when its over-strand runs from
//! slot `b` to slot `d`. With it, `X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3` has
//! writhe `+3`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Edge = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Which pair of slots a transition along a component passes through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strand {
    Under,
    Over,
}

/// A failed diagram invariant with a witness. [`validate`] reports at most
/// one entry per kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Labels in `1..=max` that do not occur exactly twice, with their counts.
    EdgeMultiplicity { offenders: Vec<(Edge, usize)> },
    /// An edge that would have to enter (or leave) crossings twice.
    Orientation { edge: Edge, crossing: usize },
    /// A component whose labels are not one contiguous range.
    NonContiguousComponent { edges: Vec<Edge> },
    /// A strand through `crossing` goes `from → to`, which is not the next
    /// label along its component.
    NotConsecutive { crossing: usize, strand: Strand, from: Edge, to: Edge },
    /// The `order` directive does not name exactly one edge per component.
    Order { reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeMultiplicity { offenders } => {
                let list: Vec<String> = offenders.iter().map(|(e, c)| format!("{e} (x{c})")).collect();
                write!(f, "edges not used exactly twice: {}", list.join(", "))
            }
            Violation::Orientation { edge, crossing } => {
                write!(f, "inconsistent orientation of edge {edge} at crossing {}", crossing + 1)
            }
            Violation::NonContiguousComponent { edges } => {
                write!(f, "component edges are not a contiguous range: {edges:?}")
            }
            Violation::NotConsecutive { crossing, strand, from, to } => {
                let s = match strand {
                    Strand::Under => "under",
                    Strand::Over => "over",
                };
                write!(f, "{s}-strand edges {from} -> {to} at crossing {} are not consecutive", crossing + 1)
            }
            Violation::Order { reason } => write!(f, "bad order directive: {reason}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid diagram: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Validation(Vec<Violation>),
    #[error("crossing index {index} out of range ({count} crossings)")]
    CrossingIndex { index: usize, count: usize },
    #[error("component index {index} out of range ({count} components)")]
    ComponentIndex { index: usize, count: usize },
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("odd signed crossing count {sum} between components {i} and {j}")]
    OddLinkingSum { i: usize, j: usize, sum: i64 },
}

/// Unvalidated PD data as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<[Edge; 4]>,
    pub free_loops: usize,
    /// One edge per traced component, in the desired component order.
    pub order: Option<Vec<Edge>>,
    /// `(e, k)`: edge `e` enters crossing `k` (0-based).
    pub enters: Vec<(Edge, usize)>,
}

impl PdCode {
    /// Parses one directive per line; `/` also separates directives and `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<PdCode, DiagramError> {
        let mut pd = PdCode::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            for directive in content.split('/') {
                let mut tokens = directive.split_whitespace();
                let Some(head) = tokens.next() else {
                    continue;
                };
                let args: Vec<&str> = tokens.collect();
                let edge = |t: &str| -> Result<Edge, DiagramError> {
                    match t.parse::<Edge>() {
                        Ok(e) if e >= 1 => Ok(e),
                        _ => Err(DiagramError::Parse {
                            line,
                            msg: format!("edge labels are positive integers, got {t:?}"),
                        }),
                    }
                };
                match head {
                    "X" => {
                        if args.len() != 4 {
                            return Err(DiagramError::Parse {
                                line,
                                msg: format!("a crossing needs 4 edges, got {}", args.len()),
                            });
                        }
                        let mut rec = [0; 4];
                        for (slot, t) in rec.iter_mut().zip(&args) {
                            *slot = edge(t)?;
                        }
                        pd.crossings.push(rec);
                    }
                    "O" => {
                        let k = match args.as_slice() {
                            [k] => k.parse::<usize>().ok(),
                            _ => None,
                        };
                        let k = k.ok_or_else(|| DiagramError::Parse { line, msg: "`O` takes one count".into() })?;
                        pd.free_loops += k;
                    }
                    "order" => {
                        if pd.order.is_some() {
                            return Err(DiagramError::Parse { line, msg: "duplicate order directive".into() });
                        }
                        pd.order = Some(args.iter().map(|t| edge(t)).collect::<Result<_, _>>()?);
                    }
                    "enter" => {
                        let pair = match args.as_slice() {
                            [e, k] => edge(e).ok().zip(k.parse::<usize>().ok().filter(|&k| k >= 1)),
                            _ => None,
                        };
                        let (e, k) = pair.ok_or_else(|| DiagramError::Parse {
                            line,
                            msg: "`enter` takes an edge and a 1-based crossing index".into(),
                        })?;
                        pd.enters.push((e, k - 1));
                    }
                    other => {
                        return Err(DiagramError::Parse { line, msg: format!("unknown directive {other:?}") });
                    }
                }
            }
        }
        Ok(pd)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for [a, b, c, d] in &self.crossings {
            s.push_str(&format!("X {a} {b} {c} {d}\n"));
        }
        if self.free_loops > 0 {
            s.push_str(&format!("O {}\n", self.free_loops));
        }
        if let Some(order) = &self.order {
            let list: Vec<String> = order.iter().map(|e| e.to_string()).collect();
            s.push_str(&format!("order {}\n", list.join(" ")));
        }
        for (e, k) in &self.enters {
            s.push_str(&format!("enter {e} {}\n", k + 1));
        }
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum End {
    Head,
    Tail,
}

impl End {
    fn flip(self) -> End {
        match self {
            End::Head => End::Tail,
            End::Tail => End::Head,
        }
    }
}

/// Everything derived from a PD code by tracing, or the violations found.
struct Trace {
    over_forward: Vec<bool>,
    next_edge: Vec<Edge>,
    components: Vec<Vec<Edge>>,
}

fn trace(pd: &PdCode) -> Result<Trace, Vec<Violation>> {
    let max = pd.crossings.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); max + 1];
    for (c, rec) in pd.crossings.iter().enumerate() {
        for (s, &e) in rec.iter().enumerate() {
            occurrences[e as usize].push((c, s));
        }
    }
    let offenders: Vec<(Edge, usize)> =
        (1..=max).filter(|&e| occurrences[e].len() != 2).map(|e| (e as Edge, occurrences[e].len())).collect();
    if !offenders.is_empty() {
        return Err(vec![Violation::EdgeMultiplicity { offenders }]);
    }

    // assign Head/Tail to every slot
    let mut ends: Vec<[Option<End>; 4]> = vec![[Some(End::Head), None, Some(End::Tail), None]; pd.crossings.len()];
    let mut orientation_error: Option<Violation> = None;
    loop {
        let mut changed = true;
        while changed {
            changed = false;
            for e in 1..=max {
                let [(c1, s1), (c2, s2)] = [occurrences[e][0], occurrences[e][1]];
                match (ends[c1][s1], ends[c2][s2]) {
                    (Some(a), None) => {
                        ends[c2][s2] = Some(a.flip());
                        changed = true;
                    }
                    (None, Some(b)) => {
                        ends[c1][s1] = Some(b.flip());
                        changed = true;
                    }
                    (Some(a), Some(b)) if a == b => {
                        orientation_error.get_or_insert(Violation::Orientation { edge: e as Edge, crossing: c2 });
                    }
                    _ => {}
                }
            }
            for (c, slot) in ends.iter_mut().enumerate() {
                match (slot[1], slot[3]) {
                    (Some(a), None) => {
                        slot[3] = Some(a.flip());
                        changed = true;
                    }
                    (None, Some(b)) => {
                        slot[1] = Some(b.flip());
                        changed = true;
                    }
                    (Some(a), Some(b)) if a == b => {
                        orientation_error
                            .get_or_insert(Violation::Orientation { edge: pd.crossings[c][1], crossing: c });
                    }
                    _ => {}
                }
            }
        }
        if let Some(v) = orientation_error {
            return Err(vec![v]);
        }
        // components that only ever pass over: orient so labels increase
        let open = |e: usize| e <= max && occurrences[e].iter().any(|&(c, s)| ends[c][s].is_none());
        let hinted = pd.enters.iter().find_map(|&(h, k)| {
            let h = h as usize;
            if open(h) {
                occurrences[h].iter().copied().find(|&(c, _)| c == k)
            } else {
                None
            }
        });
        let pick = match hinted {
            Some(p) => p,
            None => {
                let Some(e) = (1..=max).find(|&e| open(e)) else {
                    break;
                };
                occurrences[e]
                    .iter()
                    .copied()
                    .find(|&(c, s)| pd.crossings[c][s ^ 2] as usize == e + 1)
                    .unwrap_or(occurrences[e][0])
            }
        };
        ends[pick.0][pick.1] = Some(End::Head);
    }

    for &(e, k) in &pd.enters {
        let ok = (e as usize) <= max
            && occurrences[e as usize].iter().any(|&(c, s)| c == k && ends[c][s] == Some(End::Head));
        if !ok {
            return Err(vec![Violation::Orientation { edge: e, crossing: k }]);
        }
    }

    let mut next_edge = vec![0 as Edge; max + 1];
    let mut over_forward = Vec::with_capacity(pd.crossings.len());
    for (c, rec) in pd.crossings.iter().enumerate() {
        next_edge[rec[0] as usize] = rec[2];
        let forward = ends[c][1] == Some(End::Head);
        over_forward.push(forward);
        if forward {
            next_edge[rec[1] as usize] = rec[3];
        } else {
            next_edge[rec[3] as usize] = rec[1];
        }
    }

    let mut seen = vec![false; max + 1];
    let mut components: Vec<Vec<Edge>> = Vec::new();
    for start in 1..=max {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            comp.push(e as Edge);
            e = next_edge[e] as usize;
        }
        components.push(comp);
    }

    let mut violations = Vec::new();
    let mut succ = vec![0 as Edge; max + 1];
    for comp in &components {
        let mut sorted = comp.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[1] != w[0] + 1)
            && !violations.iter().any(|v| matches!(v, Violation::NonContiguousComponent { .. }))
        {
            violations.push(Violation::NonContiguousComponent { edges: sorted.clone() });
        }
        for (i, &e) in sorted.iter().enumerate() {
            succ[e as usize] = sorted[(i + 1) % sorted.len()];
        }
    }
    for strand in [Strand::Under, Strand::Over] {
        let bad = pd.crossings.iter().enumerate().find_map(|(c, rec)| {
            let (from, to) = match strand {
                Strand::Under => (rec[0], rec[2]),
                Strand::Over if over_forward[c] => (rec[1], rec[3]),
                Strand::Over => (rec[3], rec[1]),
            };
            (succ[from as usize] != to).then_some(Violation::NotConsecutive { crossing: c, strand, from, to })
        });
        violations.extend(bad);
    }

    // component order
    let mut by_min: Vec<Vec<Edge>> = components
        .into_iter()
        .map(|mut comp| {
            let pos = comp.iter().enumerate().min_by_key(|&(_, &e)| e).map_or(0, |(i, _)| i);
            comp.rotate_left(pos);
            comp
        })
        .collect();
    by_min.sort_by_key(|c| c[0]);
    let components = match &pd.order {
        None => by_min,
        Some(order) => {
            let mut out = Vec::with_capacity(by_min.len());
            let mut used = vec![false; by_min.len()];
            let mut reason = None;
            for &e in order {
                match by_min.iter().position(|c| c.contains(&e)) {
                    None => {
                        reason.get_or_insert(format!("edge {e} does not exist"));
                    }
                    Some(i) if used[i] => {
                        reason.get_or_insert(format!("edge {e} names a component twice"));
                    }
                    Some(i) => {
                        used[i] = true;
                        out.push(by_min[i].clone());
                    }
                }
            }
            if reason.is_none() && out.len() != by_min.len() {
                reason = Some(format!("{} edges given for {} components", order.len(), by_min.len()));
            }
            if let Some(reason) = reason {
                violations.push(Violation::Order { reason });
                by_min
            } else {
                out
            }
        }
    };

    if violations.is_empty() {
        Ok(Trace { over_forward, next_edge, components })
    } else {
        Err(violations)
    }
}

/// All violated diagram invariants of `pd`, empty when it is valid.
pub fn validate(pd: &PdCode) -> Vec<Violation> {
    trace(pd).err().unwrap_or_default()
}

/// A validated, traced link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    pd: PdCode,
    over_forward: Vec<bool>,
    next_edge: Vec<Edge>,
    component_of: Vec<usize>,
    components: Vec<Vec<Edge>>,
}

/// Result of [`LinkDiagram::flip_crossing`].
#[derive(Clone, Debug)]
pub struct Flip {
    pub diagram: LinkDiagram,
    /// Both strands of the crossing belong to the same component.
    pub self_crossing: bool,
}

impl LinkDiagram {
    pub fn from_pd(pd: PdCode) -> Result<Self, DiagramError> {
        let t = trace(&pd).map_err(DiagramError::Validation)?;
        let mut component_of = vec![usize::MAX; t.next_edge.len()];
        for (i, comp) in t.components.iter().enumerate() {
            for &e in comp {
                component_of[e as usize] = i;
            }
        }
        Ok(LinkDiagram {
            pd,
            over_forward: t.over_forward,
            next_edge: t.next_edge,
            component_of,
            components: t.components,
        })
    }

    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    pub fn to_pd_text(&self) -> String {
        self.pd.to_text()
    }

    pub fn crossings(&self) -> &[[Edge; 4]] {
        &self.pd.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.crossings.len()
    }

    /// Edges are labelled `1..=edge_count`.
    pub fn edge_count(&self) -> usize {
        self.next_edge.len().saturating_sub(1)
    }

    pub fn free_loops(&self) -> usize {
        self.pd.free_loops
    }

    /// Components with at least one crossing; they come first in the ordering.
    pub fn traced_component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.pd.free_loops
    }

    /// Edges of a traced component in orientation order, starting at its
    /// smallest label.
    pub fn component_edges(&self, i: usize) -> &[Edge] {
        &self.components[i]
    }

    pub fn component_of(&self, e: Edge) -> usize {
        self.component_of[e as usize]
    }

    pub fn next_edge(&self, e: Edge) -> Edge {
        self.next_edge[e as usize]
    }

    fn check_crossing(&self, c: usize) -> Result<(), DiagramError> {
        if c < self.crossing_count() {
            Ok(())
        } else {
            Err(DiagramError::CrossingIndex { index: c, count: self.crossing_count() })
        }
    }

    /// Sign without bounds checking beyond the slice index.
    #[inline]
    pub fn sign(&self, c: usize) -> Sign {
        if self.over_forward[c] {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn crossing_sign(&self, c: usize) -> Result<Sign, DiagramError> {
        self.check_crossing(c)?;
        Ok(self.sign(c))
    }

    /// `(incoming, outgoing)` edges of the over-strand at `c`.
    pub fn over_edges(&self, c: usize) -> (Edge, Edge) {
        let [_, b, _, d] = self.pd.crossings[c];
        if self.over_forward[c] {
            (b, d)
        } else {
            (d, b)
        }
    }

    pub fn under_component(&self, c: usize) -> usize {
        self.component_of(self.pd.crossings[c][0])
    }

    pub fn over_component(&self, c: usize) -> usize {
        self.component_of(self.pd.crossings[c][1])
    }

    pub fn is_self_crossing(&self, c: usize) -> bool {
        self.under_component(c) == self.over_component(c)
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|c| self.sign(c).value()).sum()
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, DiagramError> {
        let n = self.component_count();
        for k in [i, j] {
            if k >= n {
                return Err(DiagramError::ComponentIndex { index: k, count: n });
            }
        }
        if i == j {
            return Err(DiagramError::SameComponent(i));
        }
        let sum: i64 = (0..self.crossing_count())
            .filter(|&c| {
                let (u, o) = (self.under_component(c), self.over_component(c));
                (u == i && o == j) || (u == j && o == i)
            })
            .map(|c| self.sign(c).value())
            .sum();
        if sum % 2 != 0 {
            return Err(DiagramError::OddLinkingSum { i, j, sum });
        }
        Ok(sum / 2)
    }

    /// Symmetric matrix of pairwise linking numbers, zero diagonal.
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>, DiagramError> {
        let n = self.component_count();
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let lk = self.linking_number(i, j)?;
                m[i][j] = lk;
                m[j][i] = lk;
            }
        }
        Ok(m)
    }

    /// Exchanges over and under at crossing `c`. The record is rotated to
    /// start at the formerly incoming over-edge; labels, orientation and
    /// components are unchanged. `enter` directives are regenerated for
    /// exactly the components that need one.
    pub fn flip_crossing(&self, c: usize) -> Result<Flip, DiagramError> {
        self.check_crossing(c)?;
        let [a, b, cc, d] = self.pd.crossings[c];
        let mut pd = self.pd.clone();
        pd.crossings[c] = if self.over_forward[c] { [b, cc, d, a] } else { [d, a, b, cc] };
        // a two-edge component left passing only over needs its direction pinned
        pd.enters.clear();
        for comp in &self.components {
            let &[lo, _] = comp.as_slice() else { continue };
            if !pd.crossings.iter().any(|r| comp.contains(&r[0])) {
                let k = (0..pd.crossings.len())
                    .find(|&k| self.pd.crossings[k][0] == lo || self.over_edges(k).0 == lo)
                    .expect("every edge enters some crossing");
                pd.enters.push((lo, k));
            }
        }
        let diagram = LinkDiagram::from_pd(pd)?;
        Ok(Flip { diagram, self_crossing: self.is_self_crossing(c) })
    }

    /// Number of crossings whose under-strand lies on each component.
    pub fn under_crossing_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in 0..self.crossing_count() {
            *m.entry(self.under_component(c)).or_default() += 1;
        }
        m
    }
}

/// Parses and validates a diagram.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    LinkDiagram::from_pd(PdCode::parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3";

    #[test]
    fn trefoil_traces_to_one_component() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_edges(0), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(d.writhe(), 3);
        assert!((0..3).all(|c| d.crossing_sign(c).unwrap() == Sign::Positive));
        assert!(d.crossing_sign(3).is_err());
    }

    #[test]
    fn mirrored_trefoil_is_negative() {
        let d = parse_pd("X 1 5 2 4 / X 3 1 4 6 / X 5 3 6 2").unwrap();
        assert_eq!(d.writhe(), -3);
    }

    #[test]
    fn free_loops_only() {
        let d = parse_pd("O 3").unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 3);
        assert_eq!(d.linking_number(0, 2).unwrap(), 0);
    }

    #[test]
    fn single_crossing_kinks_are_oriented() {
        let pos = parse_pd("X 1 2 2 1").unwrap();
        assert_eq!(pos.crossing_sign(0).unwrap(), Sign::Positive);
        let neg = parse_pd("X 1 1 2 2").unwrap();
        assert_eq!(neg.crossing_sign(0).unwrap(), Sign::Negative);
        assert_eq!(neg.component_count(), 1);
    }

    #[test]
    fn label_used_four_times_is_rejected() {
        let err = parse_pd("X 1 1 1 1").unwrap_err();
        assert_eq!(err, DiagramError::Validation(vec![Violation::EdgeMultiplicity { offenders: vec![(1, 4)] }]));
    }

    #[test]
    fn edge_used_once_is_one_violation() {
        let pd = PdCode::parse("X 1 4 2 5 / X 3 6 4 1 / X 5 2 7 3").unwrap();
        let v = validate(&pd);
        assert_eq!(v, vec![Violation::EdgeMultiplicity { offenders: vec![(6, 1), (7, 1)] }]);
    }

    #[test]
    fn non_consecutive_over_edges_is_one_violation() {
        // trefoil with labels 3<->5 and 4<->6 exchanged
        let pd = PdCode::parse("X 1 6 2 3 / X 5 4 6 1 / X 3 2 4 5").unwrap();
        let v = validate(&pd);
        assert_eq!(v.len(), 1, "{v:?}");
        assert!(matches!(v[0], Violation::NotConsecutive { strand: Strand::Over, .. }));
    }

    #[test]
    fn inconsistent_orientation() {
        let pd = PdCode::parse("X 1 4 2 6 / X 3 5 4 1 / X 5 2 6 3").unwrap();
        let v = validate(&pd);
        assert!(matches!(v.as_slice(), [Violation::Orientation { .. }]), "{v:?}");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(PdCode::parse("X 1 2 3"), Err(DiagramError::Parse { line: 1, .. })));
        assert!(matches!(PdCode::parse("X 1 2 3 0"), Err(DiagramError::Parse { .. })));
        assert!(matches!(PdCode::parse("\nY 1 2 3 4"), Err(DiagramError::Parse { line: 2, .. })));
        assert!(matches!(PdCode::parse("O"), Err(DiagramError::Parse { .. })));
    }

    #[test]
    fn order_directive() {
        let hopf = "X 4 1 3 2 / X 2 3 1 4";
        let d = parse_pd(hopf).unwrap();
        assert_eq!(d.component_edges(0), &[1, 2]);
        let d = parse_pd(&format!("{hopf} / order 4 2")).unwrap();
        assert_eq!(d.component_edges(0), &[3, 4]);
        let err = parse_pd(&format!("{hopf} / order 1 2")).unwrap_err();
        assert!(matches!(err, DiagramError::Validation(ref v) if matches!(v[0], Violation::Order { .. })));
        let err = parse_pd(&format!("{hopf} / order 1")).unwrap_err();
        assert!(matches!(err, DiagramError::Validation(_)));
    }

    #[test]
    fn hopf_linking_and_flip() {
        let d = parse_pd("X 4 1 3 2 / X 2 3 1 4").unwrap();
        assert_eq!(d.linking_number(0, 1).unwrap(), 1);
        assert_eq!(d.linking_number(1, 0).unwrap(), 1);
        assert!(matches!(d.linking_number(0, 0), Err(DiagramError::SameComponent(0))));
        assert!(matches!(d.linking_number(0, 2), Err(DiagramError::ComponentIndex { .. })));
        let f = d.flip_crossing(0).unwrap();
        assert!(!f.self_crossing);
        assert_eq!(f.diagram.writhe(), 0);
        assert_eq!(f.diagram.linking_number(0, 1).unwrap(), 0);
    }

    #[test]
    fn over_only_two_edge_component_keeps_direction() {
        let d = parse_pd("X 4 1 3 2 / X 2 3 1 4").unwrap();
        for c in 0..2 {
            let f = d.flip_crossing(c).unwrap().diagram;
            assert_eq!(f.pd().enters.len(), 1);
            assert_eq!(f.sign(1 - c), d.sign(1 - c));
            assert_ne!(f.sign(c), d.sign(c));
            assert_eq!(parse_pd(&f.to_pd_text()).unwrap(), f);
            assert_eq!(f.flip_crossing(c).unwrap().diagram, d);
        }
        let one = parse_pd("X 1 3 2 4 / X 2 3 1 4 / enter 4 1").unwrap();
        let other = parse_pd("X 1 3 2 4 / X 2 3 1 4 / enter 3 1").unwrap();
        assert_eq!((one.sign(0), one.sign(1)), (Sign::Negative, Sign::Positive));
        assert_eq!((other.sign(0), other.sign(1)), (Sign::Positive, Sign::Negative));
        let bad = PdCode::parse("X 4 1 3 2 / X 2 3 1 4 / enter 1 2").unwrap();
        assert!(matches!(validate(&bad).as_slice(), [Violation::Orientation { edge: 1, crossing: 1 }]));
    }

    #[test]
    fn double_flip_is_identity() {
        let d = parse_pd(TREFOIL).unwrap();
        for c in 0..3 {
            let once = d.flip_crossing(c).unwrap();
            assert!(once.self_crossing);
            assert_eq!(once.diagram.writhe(), 1);
            let twice = once.diagram.flip_crossing(c).unwrap().diagram;
            assert_eq!(twice, d);
        }
    }

    #[test]
    fn text_round_trip() {
        let d = parse_pd("X 4 1 3 2\nX 2 3 1 4\nO 2\norder 3 1\n").unwrap();
        assert_eq!(parse_pd(&d.to_pd_text()).unwrap(), d);
        assert_eq!(d.component_count(), 4);
    }
}
