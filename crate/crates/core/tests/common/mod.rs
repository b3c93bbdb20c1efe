//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use qtlink::coloring::ArcColoring;
use qtlink::diagram::{Edge, LinkDiagram, PdCode, Sign};
use qtlink::homology::Cochain2;
use qtlink::quandle::FiniteQuandle;

/// Whether the edge in `slot` of crossing `c` leaves the crossing there.
fn is_tail(d: &LinkDiagram, c: usize, slot: usize) -> bool {
    let positive = d.sign(c) == Sign::Positive;
    slot == 2 || (slot == 3 && positive) || (slot == 1 && !positive)
}

/// Crossing sign from label arithmetic: the over-strand runs `b → d` when
/// `d` follows `b` in its component's numbering. Components with fewer than
/// three edges are ambiguous under this rule and use the traced sign.
pub fn positive(d: &LinkDiagram, c: usize) -> bool {
    let [_, b, _, dd] = d.crossings()[c];
    let comp = d.component_edges(d.component_of(b));
    if comp.len() < 3 {
        return d.sign(c) == Sign::Positive;
    }
    let lo = *comp.iter().min().unwrap();
    let hi = *comp.iter().max().unwrap();
    dd == b + 1 || (b == hi && dd == lo)
}

/// Arcs: classes of edges joined across over-passes.
pub fn arcs(d: &LinkDiagram) -> Vec<usize> {
    let n = d.edge_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &[_, b, _, dd] in d.crossings() {
        let (x, y) = (root(&mut parent, b as usize - 1), root(&mut parent, dd as usize - 1));
        parent[x] = y;
    }
    let mut ids = HashMap::new();
    (0..n)
        .map(|e| {
            let r = root(&mut parent, e);
            let k = ids.len();
            *ids.entry(r).or_insert(k)
        })
        .collect()
}

/// All colorings by brute force over arc assignments, sorted.
pub fn brute_force_colorings(d: &LinkDiagram, q: &FiniteQuandle) -> Vec<ArcColoring> {
    let arc_of = arcs(d);
    let arc_count = arc_of.iter().copied().max().map_or(0, |m| m + 1);
    let loops = d.free_loops();
    let n = q.size();
    let total = n.pow((arc_count + loops) as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut digits = Vec::with_capacity(arc_count + loops);
        for _ in 0..arc_count + loops {
            digits.push(code % n);
            code /= n;
        }
        let colors: Vec<usize> = arc_of.iter().map(|&a| digits[a]).collect();
        let ok = d.crossings().iter().enumerate().all(|(c, &[e1, e2, e3, _])| {
            let (x, y, z) = (colors[e1 as usize - 1], colors[e2 as usize - 1], colors[e3 as usize - 1]);
            if positive(d, c) {
                q.op(x, y) == z
            } else {
                q.op(z, y) == x
            }
        });
        if ok {
            out.push(ArcColoring { colors, free_loop_colors: digits[arc_count..].to_vec() });
        }
    }
    out.sort();
    out
}

/// Weights by walking each component and summing over its under-passes.
pub fn walk_weights(d: &LinkDiagram, theta: &Cochain2, a: &ArcColoring) -> Vec<i64> {
    let m = theta.modulus() as i64;
    let red = |v: i64| if m >= 2 { v.rem_euclid(m) } else { v };
    let mut under_at: HashMap<Edge, usize> = HashMap::new();
    for (c, rec) in d.crossings().iter().enumerate() {
        under_at.insert(rec[0], c);
    }
    (0..d.component_count())
        .map(|i| {
            if i >= d.traced_component_count() {
                return 0;
            }
            let mut w = 0i64;
            for &e in d.component_edges(i) {
                let Some(&c) = under_at.get(&e) else { continue };
                let rec = d.crossings()[c];
                let (x_in, x_out, y) = (a.color(rec[0]), a.color(rec[2]), a.color(rec[1]));
                w += if positive(d, c) { theta.value(x_in, y) } else { -theta.value(x_out, y) };
            }
            red(w)
        })
        .collect()
}

/// Per-component multisets computed from an explicit coloring list.
pub fn report_from(d: &LinkDiagram, theta: &Cochain2, colorings: &[ArcColoring]) -> Vec<BTreeMap<i64, u64>> {
    let mut maps = vec![BTreeMap::new(); d.component_count()];
    for a in colorings {
        for (i, v) in walk_weights(d, theta, a).into_iter().enumerate() {
            *maps[i].entry(v).or_insert(0u64) += 1;
        }
    }
    maps
}

/// A side of a face: edge label and whether the face walk follows the
/// edge's orientation.
pub type Side = (Edge, bool);

/// Faces of the diagram graph, each walked with the face on the left.
pub fn faces(d: &LinkDiagram) -> Vec<Vec<Side>> {
    let recs = d.crossings();
    let mut other_end: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut seen_label: HashMap<Edge, (usize, usize)> = HashMap::new();
    for (c, rec) in recs.iter().enumerate() {
        for (s, &e) in rec.iter().enumerate() {
            if let Some(&prev) = seen_label.get(&e) {
                other_end.insert(prev, (c, s));
                other_end.insert((c, s), prev);
            } else {
                seen_label.insert(e, (c, s));
            }
        }
    }
    let mut used = vec![[false; 4]; recs.len()];
    let mut out = Vec::new();
    for c0 in 0..recs.len() {
        for s0 in 0..4 {
            if used[c0][s0] {
                continue;
            }
            let mut face = Vec::new();
            let (mut c, mut s) = (c0, s0);
            while !used[c][s] {
                used[c][s] = true;
                face.push((recs[c][s], is_tail(d, c, s)));
                let (c2, s2) = other_end[&(c, s)];
                c = c2;
                s = (s2 + 3) % 4;
            }
            out.push(face);
        }
    }
    out
}

/// Connected pieces of the crossing graph.
fn graph_components(d: &LinkDiagram) -> usize {
    let n = d.crossing_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        r
    }
    let mut first: HashMap<Edge, usize> = HashMap::new();
    for (c, rec) in d.crossings().iter().enumerate() {
        for &e in rec {
            if let Some(&c0) = first.get(&e) {
                let (a, b) = (root(&mut parent, c0), root(&mut parent, c));
                parent[a] = b;
            } else {
                first.insert(e, c);
            }
        }
    }
    (0..n).filter(|&x| root(&mut parent, x) == x).count()
}

/// Euler characteristic check: every piece of the crossing graph is a
/// planar 4-valent map, so faces = crossings + 2 · pieces.
pub fn is_planar(d: &LinkDiagram) -> bool {
    d.crossing_count() == 0 || faces(d).len() == d.crossing_count() + 2 * graph_components(d)
}

/// Crossings with component-sequence bookkeeping, relabelled on output.
struct Builder {
    original: LinkDiagram,
    crossings: Vec<[Edge; 4]>,
    sequences: Vec<Vec<Edge>>,
    free_loops: usize,
    fresh: Edge,
}

impl Builder {
    fn from(d: &LinkDiagram) -> Self {
        Builder {
            original: d.clone(),
            crossings: d.crossings().to_vec(),
            sequences: (0..d.traced_component_count()).map(|i| d.component_edges(i).to_vec()).collect(),
            free_loops: d.free_loops(),
            fresh: 1_000_000,
        }
    }

    fn fresh(&mut self) -> Edge {
        self.fresh += 1;
        self.fresh
    }

    /// Replaces edge `e` by `parts` along its component; `head` and `tail`
    /// are the (crossing, slot) of the end where `e` enters and leaves.
    fn subdivide(&mut self, e: Edge, parts: &[Edge], enters: (usize, usize), leaves: (usize, usize)) {
        self.crossings[enters.0][enters.1] = *parts.last().expect("parts");
        self.crossings[leaves.0][leaves.1] = parts[0];
        for seq in &mut self.sequences {
            if let Some(p) = seq.iter().position(|&x| x == e) {
                seq.splice(p..=p, parts.iter().copied());
            }
        }
    }

    fn finish(self) -> LinkDiagram {
        let mut relabel = HashMap::new();
        let mut next = 1;
        for seq in &self.sequences {
            for &e in seq {
                relabel.insert(e, next);
                next += 1;
            }
        }
        let pd = PdCode {
            crossings: self.crossings.iter().map(|r| r.map(|e| relabel[&e])).collect(),
            free_loops: self.free_loops,
            order: None,
            enters: self
                .sequences
                .iter()
                .filter(|seq| seq.len() == 2)
                .map(|seq| (relabel[&seq[0]], ends(&self.original, seq[0]).0 .0))
                .collect(),
        };
        let d = LinkDiagram::from_pd(pd).expect("move produced an invalid diagram");
        for (i, seq) in self.sequences.iter().enumerate() {
            let expect: Vec<Edge> = seq.iter().map(|e| relabel[e]).collect();
            assert_eq!(d.component_edges(i), expect.as_slice(), "orientation changed");
        }
        d
    }
}

/// Where edge `e` enters and where it leaves a crossing, as (crossing, slot).
fn ends(d: &LinkDiagram, e: Edge) -> ((usize, usize), (usize, usize)) {
    let mut enters = None;
    let mut leaves = None;
    for (c, rec) in d.crossings().iter().enumerate() {
        for (s, &x) in rec.iter().enumerate() {
            if x == e {
                if is_tail(d, c, s) {
                    leaves = Some((c, s));
                } else {
                    enters = Some((c, s));
                }
            }
        }
    }
    (enters.expect("edge has a head"), leaves.expect("edge has a tail"))
}

/// Adds a one-crossing kink on edge `e`. `kind` in `0..4` selects whether the
/// strand first passes under or over and which way the loop turns.
pub fn reidemeister1(d: &LinkDiagram, e: Edge, kind: u8) -> LinkDiagram {
    let (enters, leaves) = ends(d, e);
    let mut b = Builder::from(d);
    let (p, k, r) = (b.fresh(), b.fresh(), b.fresh());
    let rec = match kind % 4 {
        0 => [p, k, k, r],
        1 => [p, r, k, k],
        2 => [k, p, r, k],
        _ => [k, k, r, p],
    };
    b.subdivide(e, &[p, k, r], enters, leaves);
    b.crossings.push(rec);
    b.finish()
}

/// Pushes side `top` of a face over side `bottom` of the same face, adding
/// two crossings.
pub fn reidemeister2(d: &LinkDiagram, top: Side, bottom: Side) -> LinkDiagram {
    let (e, e_fwd) = top;
    let (f, f_fwd) = bottom;
    assert_ne!(e, f);
    let (e_enters, e_leaves) = ends(d, e);
    let (f_enters, f_leaves) = ends(d, f);
    let mut b = Builder::from(d);
    let (e1, e2, e3) = (b.fresh(), b.fresh(), b.fresh());
    let (f1, f2, f3) = (b.fresh(), b.fresh(), b.fresh());
    // Picture: `f` along y = 0 walked east by the face, `e` along y = 1
    // walked west, the face between them. `e` dips south across `f` at
    // P (x = 1) and comes back at Q (x = -1).
    let (e_north_p, e_north_q) = if e_fwd { (e1, e3) } else { (e3, e1) };
    let (f_east, f_west) = if f_fwd { (f3, f1) } else { (f1, f3) };
    // compass order N, E, S, W for each new crossing
    let p_compass = [e_north_p, f_east, e2, f2];
    let q_compass = [e_north_q, f2, e2, f_west];
    // under strand is f; incoming under end is W when f runs east
    let start = if f_fwd { 3 } else { 1 };
    // counterclockwise from `start`: W, S, E, N is index 3, 2, 1, 0
    let ccw = |compass: [Edge; 4]| -> [Edge; 4] {
        let order = [0usize, 3, 2, 1];
        let i = order.iter().position(|&k| k == start).unwrap();
        [0, 1, 2, 3].map(|t| compass[order[(i + t) % 4]])
    };
    b.subdivide(e, &[e1, e2, e3], e_enters, e_leaves);
    b.subdivide(f, &[f1, f2, f3], f_enters, f_leaves);
    b.crossings.push(ccw(p_compass));
    b.crossings.push(ccw(q_compass));
    b.finish()
}

/// A mixed-up but equivalent diagram: `steps` random moves chosen by `pick`.
pub fn scramble(d: &LinkDiagram, steps: usize, mut pick: impl FnMut(usize) -> usize) -> LinkDiagram {
    let mut cur = d.clone();
    for _ in 0..steps {
        if cur.crossing_count() == 0 {
            break;
        }
        if pick(2) == 0 {
            let e = pick(cur.edge_count()) as Edge + 1;
            cur = reidemeister1(&cur, e, pick(4) as u8);
        } else {
            let fs: Vec<Vec<Side>> = faces(&cur).into_iter().filter(|f| f.len() >= 2).collect();
            let face = &fs[pick(fs.len())];
            let i = pick(face.len());
            let j = pick(face.len());
            if face[i].0 == face[j].0 {
                continue;
            }
            cur = reidemeister2(&cur, face[i], face[j]);
        }
        assert!(is_planar(&cur));
    }
    cur
}
