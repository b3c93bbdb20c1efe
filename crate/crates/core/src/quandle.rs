//! Finite quandles given by operation tables.
//!
//! Elements are the indices `0..n`. Row `x`, column `y` of the table holds
//! `x * y`. Tables are validated against the three quandle axioms on
//! construction:
//!
//! * idempotence: `x * x = x`,
//! * right invertibility: every right translation `• * y` is a bijection,
//! * right self-distributivity: `(x * y) * z = (x * z) * (y * z)`.
//!
//! The inner automorphism group is generated by the right translations. Its
//! orbit through `x` is exactly `{ φ(x) : φ ∈ Inn(X) }`, which is the
//! connected component of `x` under all right translations and their inverses.
//! Quasi-triviality (`x * φ(x) = x` for every inner `φ`) is therefore checked
//! by orbit membership without materializing the group.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// An element of a finite quandle.
pub type Elem = usize;

/// Default bound on the number of permutations materialized by
/// [`FiniteQuandle::inner_group`].
pub const DEFAULT_INN_CAP: usize = 1_000_000;

/// The first failing instance of a quandle axiom, in row-major scan order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x * x != x`.
    Idempotence { x: Elem },
    /// `x1 * y == x2 * y` with `x1 < x2`, so `• * y` is not injective.
    RightInvertibility { y: Elem, x1: Elem, x2: Elem },
    /// `(x * y) * z != (x * z) * (y * z)`.
    SelfDistributivity { x: Elem, y: Elem, z: Elem },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { x } => write!(f, "Q1 fails at x={x}"),
            AxiomViolation::RightInvertibility { y, x1, x2 } => {
                write!(f, "Q2 fails at y={y}: {x1}*{y} = {x2}*{y}")
            }
            AxiomViolation::SelfDistributivity { x, y, z } => {
                write!(f, "Q3 fails at (x,y,z)=({x},{y},{z})")
            }
        }
    }
}

/// Group axioms checked by [`conjugation_quandle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupAxiomViolation {
    Associativity { a: Elem, b: Elem, c: Elem },
    NoIdentity,
    NoInverse { a: Elem },
}

impl fmt::Display for GroupAxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupAxiomViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a},{b},{c})")
            }
            GroupAxiomViolation::NoIdentity => write!(f, "no identity element"),
            GroupAxiomViolation::NoInverse { a } => write!(f, "element {a} has no inverse"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("a quandle needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({x},{y}) is out of range for size {size}")]
    EntryOutOfRange { x: Elem, y: Elem, value: i64, size: usize },
    #[error("element {element} is out of range for size {size}")]
    ElementOutOfRange { element: Elem, size: usize },
    #[error("axiom violation: {0}")]
    Axiom(AxiomViolation),
    #[error("group table violation: {0}")]
    GroupAxiom(GroupAxiomViolation),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<Elem>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Builds a permutation, returning `None` unless `images` is a bijection.
    pub fn from_images(images: Vec<Elem>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    pub fn images(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<Elem>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// The inner automorphism group, or a truncated prefix of it.
#[derive(Clone, Debug)]
pub struct InnerGroup {
    /// Distinct permutations in breadth-first discovery order; the identity
    /// comes first.
    pub elements: Vec<Perm>,
    /// The right translations `• * y`, indexed by `y`.
    pub generators: Vec<Perm>,
    /// Set when the closure was cut off at the cap.
    pub truncated: bool,
}

impl InnerGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|a| self.generators.iter().all(|g| a.compose(g) == g.compose(a)))
    }
}

/// Partition of the elements into inner-automorphism orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbit index of every element. Orbits are numbered by their smallest member.
    pub orbit_id: Vec<usize>,
    /// Members of each orbit in ascending order.
    pub orbit_members: Vec<Vec<Elem>>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbit_members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit_members.is_empty()
    }

    pub fn same_orbit(&self, x: Elem, y: Elem) -> bool {
        self.orbit_id[x] == self.orbit_id[y]
    }

    pub fn members_of(&self, x: Elem) -> &[Elem] {
        &self.orbit_members[self.orbit_id[x]]
    }
}

/// A finite quandle with a validated operation table.
#[derive(Clone, Debug)]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteQuandle {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.table == other.table
    }
}

impl Eq for FiniteQuandle {}

impl FiniteQuandle {
    /// Validates a square table, reporting the first axiom failure.
    pub fn from_table<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(QuandleError::NotSquare { row: x, len: row.len(), expected: n });
            }
            for (y, &v) in row.iter().enumerate() {
                if v < 0 || v as usize >= n {
                    return Err(QuandleError::EntryOutOfRange { x, y, value: v, size: n });
                }
                table.push(v as usize);
            }
        }
        Self::from_flat(n, table)
    }

    fn from_flat(n: usize, table: Vec<Elem>) -> Result<Self, QuandleError> {
        if let Some(v) = check_axioms(n, &table) {
            return Err(QuandleError::Axiom(v));
        }
        let mut inverse = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                inverse[table[x * n + y] * n + y] = x;
            }
        }
        Ok(FiniteQuandle { size: n, table, inverse, labels: None })
    }

    /// Attaches display names. Labels do not take part in equality of the algebra.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`: its label when present, otherwise the index.
    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks an element up by label or by decimal index.
    pub fn element(&self, name: &str) -> Option<Elem> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i < self.size)
    }

    /// `x * y` without range checks.
    #[inline]
    pub fn op(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.size + y]
    }

    /// The unique `z` with `z * y = x`, without range checks.
    #[inline]
    pub fn inv_op(&self, x: Elem, y: Elem) -> Elem {
        self.inverse[x * self.size + y]
    }

    pub fn try_op(&self, x: Elem, y: Elem) -> Result<Elem, QuandleError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.op(x, y))
    }

    pub fn try_inv_op(&self, x: Elem, y: Elem) -> Result<Elem, QuandleError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.inv_op(x, y))
    }

    fn check(&self, x: Elem) -> Result<(), QuandleError> {
        if x < self.size {
            Ok(())
        } else {
            Err(QuandleError::ElementOutOfRange { element: x, size: self.size })
        }
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// The automorphism `x ↦ x * y`.
    pub fn right_translation(&self, y: Elem) -> Result<Perm, QuandleError> {
        self.check(y)?;
        Ok(Perm((0..self.size).map(|x| self.op(x, y)).collect()))
    }

    /// Breadth-first closure of the right translations under composition.
    ///
    /// Stops with `truncated = true` as soon as one more permutation would
    /// exceed `cap`.
    pub fn inner_group(&self, cap: usize) -> InnerGroup {
        let cap = cap.max(1);
        let generators: Vec<Perm> =
            (0..self.size).map(|y| Perm((0..self.size).map(|x| self.op(x, y)).collect())).collect();
        let mut distinct: Vec<Perm> = Vec::new();
        for g in &generators {
            if !distinct.contains(g) {
                distinct.push(g.clone());
            }
        }
        let id = Perm::identity(self.size);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut elements = vec![id.clone()];
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        let mut truncated = false;
        'outer: while let Some(p) = queue.pop_front() {
            for g in &distinct {
                let next = g.compose(&p);
                if seen.contains(&next) {
                    continue;
                }
                if elements.len() == cap {
                    truncated = true;
                    break 'outer;
                }
                seen.insert(next.clone());
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
        InnerGroup { elements, generators, truncated }
    }

    /// Connected components of the elements under all right translations.
    pub fn orbits(&self) -> OrbitPartition {
        let n = self.size;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for x in 0..n {
            for y in 0..n {
                let a = find(&mut parent, x);
                let b = find(&mut parent, self.op(x, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbit_id = vec![usize::MAX; n];
        let mut orbit_members: Vec<Vec<Elem>> = Vec::new();
        let mut root_to_id = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if root_to_id[r] == usize::MAX {
                root_to_id[r] = orbit_members.len();
                orbit_members.push(Vec::new());
            }
            orbit_id[x] = root_to_id[r];
            orbit_members[root_to_id[r]].push(x);
        }
        OrbitPartition { orbit_id, orbit_members }
    }

    /// First pair `(x, y)` with `y` in the orbit of `x` but `x * y != x`.
    pub fn quasi_triviality_witness(&self) -> Option<(Elem, Elem)> {
        let orbits = self.orbits();
        (0..self.size).find_map(|x| orbits.members_of(x).iter().find(|&&y| self.op(x, y) != x).map(|&y| (x, y)))
    }

    pub fn is_quasi_trivial(&self) -> bool {
        self.quasi_triviality_witness().is_none()
    }

    /// Serializes into the quandle text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.size);
        for row in self.table.chunks(self.size) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                s.push_str(&format!("label {i} {l}\n"));
            }
        }
        s
    }
}

fn check_axioms(n: usize, t: &[Elem]) -> Option<AxiomViolation> {
    let op = |x: usize, y: usize| t[x * n + y];
    if let Some(x) = (0..n).find(|&x| op(x, x) != x) {
        return Some(AxiomViolation::Idempotence { x });
    }
    let mut first_row = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let slot = &mut first_row[op(x, y) * n + y];
            if *slot != usize::MAX {
                return Some(AxiomViolation::RightInvertibility { y, x1: *slot, x2: x });
            }
            *slot = x;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                if op(xy, z) != op(op(x, z), op(y, z)) {
                    return Some(AxiomViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    None
}

/// `x * y = x`.
pub fn trivial_quandle(n: usize) -> Result<FiniteQuandle, QuandleError> {
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    FiniteQuandle::from_flat(n, (0..n * n).map(|i| i / n).collect())
}

/// `x * y = 2y - x (mod n)`.
pub fn dihedral_quandle(n: usize) -> Result<FiniteQuandle, QuandleError> {
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    let table = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            (2 * y + n - x) % n
        })
        .collect();
    FiniteQuandle::from_flat(n, table)
}

/// Conjugation quandle `x * y = y⁻¹ x y` of a finite group given by its
/// multiplication table (`table[a][b] = ab`).
pub fn conjugation_quandle<R: AsRef<[i64]>>(group_table: &[R]) -> Result<FiniteQuandle, QuandleError> {
    let n = group_table.len();
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    let mut g = Vec::with_capacity(n * n);
    for (a, row) in group_table.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != n {
            return Err(QuandleError::NotSquare { row: a, len: row.len(), expected: n });
        }
        for (b, &v) in row.iter().enumerate() {
            if v < 0 || v as usize >= n {
                return Err(QuandleError::EntryOutOfRange { x: a, y: b, value: v, size: n });
            }
            g.push(v as usize);
        }
    }
    let mul = |a: usize, b: usize| g[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(QuandleError::GroupAxiom(GroupAxiomViolation::Associativity { a, b, c }));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
        .ok_or(QuandleError::GroupAxiom(GroupAxiomViolation::NoIdentity))?;
    let mut inv = vec![0; n];
    for a in 0..n {
        inv[a] = (0..n)
            .find(|&b| mul(a, b) == e && mul(b, a) == e)
            .ok_or(QuandleError::GroupAxiom(GroupAxiomViolation::NoInverse { a }))?;
    }
    let table = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            mul(mul(inv[y], x), y)
        })
        .collect();
    FiniteQuandle::from_flat(n, table)
}

/// Parses the quandle text format: the size `n`, then `n * n` entries in
/// row-major order, then optional `label i name` directives. Whitespace
/// layout is free and `#` starts a comment.
pub fn parse_quandle(text: &str) -> Result<FiniteQuandle, QuandleError> {
    let mut numbers: Vec<(usize, i64)> = Vec::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace().peekable();
        if tokens.peek() == Some(&"label") {
            tokens.next();
            let idx = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| QuandleError::Parse { line, msg: "label needs an element index".into() })?;
            let name = tokens.next().ok_or_else(|| QuandleError::Parse { line, msg: "label needs a name".into() })?;
            if tokens.next().is_some() {
                return Err(QuandleError::Parse { line, msg: "trailing tokens after label".into() });
            }
            labels.push((line, idx, name.to_string()));
            continue;
        }
        if !labels.is_empty() && tokens.peek().is_some() {
            return Err(QuandleError::Parse { line, msg: "table entries after label directives".into() });
        }
        for tok in tokens {
            let v = tok
                .parse::<i64>()
                .map_err(|_| QuandleError::Parse { line, msg: format!("not an integer: {tok:?}") })?;
            numbers.push((line, v));
        }
    }
    let (&(_, n), rest) = numbers.split_first().ok_or(QuandleError::Parse { line: 1, msg: "missing size".into() })?;
    if n <= 0 {
        return Err(QuandleError::Empty);
    }
    let n = n as usize;
    if rest.len() != n * n {
        let line = rest.last().map_or(1, |&(l, _)| l);
        return Err(QuandleError::Parse {
            line,
            msg: format!("expected {} table entries, found {}", n * n, rest.len()),
        });
    }
    let rows: Vec<Vec<i64>> = rest.chunks(n).map(|c| c.iter().map(|&(_, v)| v).collect()).collect();
    let q = FiniteQuandle::from_table(&rows)?;
    if labels.is_empty() {
        return Ok(q);
    }
    let mut names: Vec<Option<String>> = vec![None; n];
    for (line, idx, name) in labels {
        if idx >= n {
            return Err(QuandleError::Parse { line, msg: format!("label index {idx} out of range") });
        }
        if names[idx].replace(name).is_some() {
            return Err(QuandleError::Parse { line, msg: format!("element {idx} labelled twice") });
        }
    }
    let names = names.into_iter().enumerate().map(|(i, l)| l.unwrap_or_else(|| i.to_string())).collect();
    Ok(q.with_labels(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_two_is_valid() {
        let q = FiniteQuandle::from_table(&[[0i64, 0], [1, 1]]).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.is_quasi_trivial());
    }

    #[test]
    fn idempotence_failure_reports_first_x() {
        let err = FiniteQuandle::from_table(&[[1i64, 0], [1, 1]]).unwrap_err();
        assert_eq!(err, QuandleError::Axiom(AxiomViolation::Idempotence { x: 0 }));
    }

    #[test]
    fn out_of_range_entry() {
        let err = FiniteQuandle::from_table(&[[0i64, 2], [1, 1]]).unwrap_err();
        assert!(matches!(err, QuandleError::EntryOutOfRange { x: 0, y: 1, value: 2, .. }));
        assert!(matches!(
            FiniteQuandle::from_table(&[vec![0i64, 0], vec![1]]),
            Err(QuandleError::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn right_invertibility_failure() {
        // column 1 maps both 0 and 2 to 0
        let err = FiniteQuandle::from_table(&[[0i64, 0, 0], [1, 1, 1], [2, 0, 2]]).unwrap_err();
        assert_eq!(err, QuandleError::Axiom(AxiomViolation::RightInvertibility { y: 1, x1: 0, x2: 2 }));
    }

    #[test]
    fn self_distributivity_failure() {
        // columns are bijections fixing the diagonal, yet (0*1)*0 = 1 and (0*0)*(1*0) = 0
        let err = FiniteQuandle::from_table(&[[0i64, 2, 0], [2, 1, 1], [1, 0, 2]]).unwrap_err();
        assert_eq!(err, QuandleError::Axiom(AxiomViolation::SelfDistributivity { x: 0, y: 1, z: 0 }));
    }

    #[test]
    fn op_examples() {
        assert_eq!(trivial_quandle(5).unwrap().try_op(3, 4).unwrap(), 3);
        let d3 = dihedral_quandle(3).unwrap();
        assert_eq!(d3.try_op(0, 1).unwrap(), 2);
        assert_eq!(d3.try_inv_op(2, 1).unwrap(), 0);
        assert!(matches!(d3.try_op(3, 0), Err(QuandleError::ElementOutOfRange { element: 3, size: 3 })));
        let t = trivial_quandle(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(t.inv_op(x, y), x);
            }
        }
    }

    #[test]
    fn right_translations() {
        let d3 = dihedral_quandle(3).unwrap();
        let p = d3.right_translation(0).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 2]]);
        assert!(trivial_quandle(4).unwrap().right_translation(2).unwrap().is_identity());
        assert!(d3.right_translation(7).is_err());
    }

    #[test]
    fn inner_group_sizes() {
        assert_eq!(trivial_quandle(7).unwrap().inner_group(DEFAULT_INN_CAP).order(), 1);
        let g = dihedral_quandle(3).unwrap().inner_group(DEFAULT_INN_CAP);
        assert_eq!(g.order(), 6);
        assert!(!g.truncated);
        assert!(!g.is_abelian());
        let t = dihedral_quandle(3).unwrap().inner_group(4);
        assert!(t.truncated);
        assert_eq!(t.order(), 4);
    }

    #[test]
    fn orbit_examples() {
        let o = trivial_quandle(3).unwrap().orbits();
        assert_eq!(o.orbit_members, vec![vec![0], vec![1], vec![2]]);
        let o = dihedral_quandle(3).unwrap().orbits();
        assert_eq!(o.orbit_members, vec![vec![0, 1, 2]]);
        // dihedral(4) splits into evens and odds
        let o = dihedral_quandle(4).unwrap().orbits();
        assert_eq!(o.orbit_members, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(o.orbit_id, vec![0, 1, 0, 1]);
    }

    #[test]
    fn quasi_triviality_examples() {
        assert!(trivial_quandle(6).unwrap().is_quasi_trivial());
        assert_eq!(dihedral_quandle(3).unwrap().quasi_triviality_witness(), Some((0, 1)));
        // dihedral(4): orbits {0,2},{1,3}; 0*2 = 4 mod 4 = 0 and 1*3 = 5 mod 4 = 1
        assert!(dihedral_quandle(4).unwrap().is_quasi_trivial());
    }

    #[test]
    fn conjugation_of_abelian_group_is_trivial() {
        let z4: Vec<Vec<i64>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        assert_eq!(conjugation_quandle(&z4).unwrap(), trivial_quandle(4).unwrap());
    }

    #[test]
    fn conjugation_rejects_bad_groups() {
        let not_assoc: Vec<Vec<i64>> = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 1, 0]];
        assert!(matches!(conjugation_quandle(&not_assoc), Err(QuandleError::GroupAxiom(_))));
        // left-zero semigroup: associative but no identity
        let no_id: Vec<Vec<i64>> = vec![vec![0, 0], vec![1, 1]];
        assert_eq!(conjugation_quandle(&no_id), Err(QuandleError::GroupAxiom(GroupAxiomViolation::NoIdentity)));
    }

    #[test]
    fn text_format_round_trip() {
        let q = dihedral_quandle(5).unwrap();
        assert_eq!(parse_quandle(&q.to_text()).unwrap(), q);
        let src = "# two points\n2\n0 0   1 1 # rows\nlabel 0 p\nlabel 1 q\n";
        let q = parse_quandle(src).unwrap();
        assert_eq!(q.label(1), "q");
        assert_eq!(q.element("p"), Some(0));
        assert!(matches!(parse_quandle("2\n0 0 1"), Err(QuandleError::Parse { .. })));
        assert!(matches!(parse_quandle("2\n0 0 1 x"), Err(QuandleError::Parse { .. })));
    }
}
