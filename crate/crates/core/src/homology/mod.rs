//! Rack and quandle chain complexes and 2-cocycles.
//!
//! `C_n` is free on `n`-tuples of elements with boundary
//!
//! ```text
//! ∂(x₁,…,xₙ) = Σ_{i=2..n} (-1)^i [ (x₁,…,x̂ᵢ,…,xₙ) − (x₁*xᵢ,…,x_{i-1}*xᵢ,x_{i+1},…,xₙ) ]
//! ```
//!
//! The degenerate tuples (some `xᵢ = xᵢ₊₁`, and in quasi-trivial mode also
//! `x₂` in the orbit of `x₁`) span a subcomplex that is itself a subset of
//! the standard basis, so the quotient is free on the remaining tuples. Every
//! matrix here is expressed in that non-degenerate basis, with degenerate
//! images projected to zero.

mod cochain;
mod matrix;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cochain::{parse_cochain, reduce, Cochain1, Cochain2};
pub use matrix::{BigMatrix, IntMatrix};
pub use snf::{invariant_factors, smith_normal_form, SmithForm};

use crate::exec::Exec;
use crate::quandle::{Elem, FiniteQuandle, OrbitPartition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("quasi-trivial mode needs a quasi-trivial quandle ({x}*{y} != {x} with {y} in the orbit of {x})")]
    Mode { x: Elem, y: Elem },
    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),
    #[error("modulus {0} is not allowed (use 0 for integers or m >= 2)")]
    Modulus(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Which tuples are divided out of the rack complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegeneracyMode {
    /// Tuples with two equal neighbours.
    Standard,
    /// Additionally, tuples whose second entry lies in the orbit of the first.
    QuasiTrivial,
}

impl fmt::Display for DegeneracyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegeneracyMode::Standard => "standard",
            DegeneracyMode::QuasiTrivial => "quasi-trivial",
        })
    }
}

/// Non-degenerate `n`-tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBasis {
    pub degree: usize,
    pub mode: DegeneracyMode,
    pub tuples: Vec<Vec<Elem>>,
    codes: Vec<u64>,
    size: usize,
}

impl ChainBasis {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Position of `tuple` in the basis, `None` if it is degenerate.
    pub fn index_of(&self, tuple: &[Elem]) -> Option<usize> {
        self.codes.binary_search(&encode(tuple, self.size)).ok()
    }
}

fn encode(tuple: &[Elem], size: usize) -> u64 {
    tuple.iter().fold(0u64, |acc, &x| acc * size as u64 + x as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CocycleCondition {
    /// `θ(x, x) = 0`.
    C1,
    /// `θ(x,y) + θ(x*y,z) = θ(x,z) + θ(x*z,y*z)`.
    C2,
    /// `θ(x, y) = 0` for `y` in the orbit of `x`.
    C3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleViolation {
    pub condition: CocycleCondition,
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleReport {
    pub mode: DegeneracyMode,
    pub c1_ok: bool,
    pub c2_ok: bool,
    /// Always `true` in standard mode, where C3 is not checked.
    pub c3_ok: bool,
    /// Every failing instance, C1 first, then C2 and C3, each in
    /// lexicographic witness order.
    pub violations: Vec<CocycleViolation>,
}

impl CocycleReport {
    pub fn is_cocycle(&self) -> bool {
        self.c1_ok && self.c2_ok && self.c3_ok
    }

    pub fn count(&self, condition: CocycleCondition) -> usize {
        self.violations.iter().filter(|v| v.condition == condition).count()
    }

    pub fn first(&self, condition: CocycleCondition) -> Option<&CocycleViolation> {
        self.violations.iter().find(|v| v.condition == condition)
    }
}

/// `H²` as `⊕ Z_{dᵢ}` with `dᵢ = 0` standing for `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub modulus: u64,
    pub mode: DegeneracyMode,
    /// Finite factors ascending, then the free `Z` summands as zeros.
    pub factors: Vec<u64>,
    /// Dimension over `F_p` when the modulus is a prime `p`.
    pub rank: Option<usize>,
}

impl CohomologyResult {
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, &d| (d != 0).then(|| acc * d as u128))
    }
}

impl fmt::Display for CohomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let d = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&e| e == d).count();
            let base = if d == 0 { "Z".to_string() } else { format!("Z{d}") };
            parts.push(if run > 1 { format!("{base}^{run}") } else { base });
            i += run;
        }
        f.write_str(&parts.join(" + "))
    }
}

/// A quandle paired with a degeneracy mode, caching its orbit partition.
#[derive(Clone, Debug)]
pub struct QuandleComplex<'q> {
    q: &'q FiniteQuandle,
    mode: DegeneracyMode,
    orbits: OrbitPartition,
    exec: Exec,
}

impl<'q> QuandleComplex<'q> {
    pub fn new(q: &'q FiniteQuandle, mode: DegeneracyMode) -> Result<Self, HomologyError> {
        if mode == DegeneracyMode::QuasiTrivial {
            if let Some((x, y)) = q.quasi_triviality_witness() {
                return Err(HomologyError::Mode { x, y });
            }
        }
        Ok(QuandleComplex { q, mode, orbits: q.orbits(), exec: Exec::default() })
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        self.q
    }

    pub fn mode(&self) -> DegeneracyMode {
        self.mode
    }

    pub fn is_degenerate(&self, tuple: &[Elem]) -> bool {
        if tuple.windows(2).any(|w| w[0] == w[1]) {
            return true;
        }
        self.mode == DegeneracyMode::QuasiTrivial && tuple.len() >= 2 && self.orbits.same_orbit(tuple[0], tuple[1])
    }

    pub fn basis(&self, degree: usize) -> ChainBasis {
        let n = self.q.size();
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(degree);
        self.extend_basis(degree, &mut cur, &mut tuples);
        let codes = tuples.iter().map(|t| encode(t, n)).collect();
        ChainBasis { degree, mode: self.mode, tuples, codes, size: n }
    }

    fn extend_basis(&self, degree: usize, cur: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if cur.len() == degree {
            out.push(cur.clone());
            return;
        }
        for x in 0..self.q.size() {
            if let Some(&last) = cur.last() {
                if last == x {
                    continue;
                }
                if cur.len() == 1 && self.mode == DegeneracyMode::QuasiTrivial && self.orbits.same_orbit(cur[0], x) {
                    continue;
                }
            }
            cur.push(x);
            self.extend_basis(degree, cur, out);
            cur.pop();
        }
    }

    /// Matrix of `∂ₙ : Cₙ → Cₙ₋₁` in the non-degenerate bases.
    pub fn boundary(&self, degree: usize) -> IntMatrix {
        assert!(degree >= 1, "boundary maps start in degree 1");
        let src = self.basis(degree);
        let dst = self.basis(degree - 1);
        if degree == 1 {
            return IntMatrix::zeros(dst.len(), src.len());
        }
        let columns = self.exec.map_range(0..src.len(), |j| {
            let t = &src.tuples[j];
            let mut col: Vec<(usize, i64)> = Vec::new();
            let mut face = Vec::with_capacity(degree - 1);
            for i in 1..degree {
                // deleting entry i (0-based) carries the sign (-1)^(i+1)
                let sign: i64 = if i % 2 == 1 { 1 } else { -1 };
                face.clear();
                face.extend(t.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x));
                if let Some(r) = dst.index_of(&face) {
                    col.push((r, sign));
                }
                face.clear();
                face.extend(t[..i].iter().map(|&x| self.q.op(x, t[i])));
                face.extend_from_slice(&t[i + 1..]);
                if let Some(r) = dst.index_of(&face) {
                    col.push((r, -sign));
                }
            }
            col
        });
        IntMatrix::from_columns(dst.len(), columns)
    }

    /// Checks C1 on the diagonal, C2 by scanning every triple, and C3 on
    /// every orbit pair (quasi-trivial mode only).
    pub fn check_cocycle(&self, theta: &Cochain2) -> Result<CocycleReport, HomologyError> {
        self.check_size(theta.size())?;
        let n = self.q.size();
        let m = theta.modulus();
        let mut violations: Vec<CocycleViolation> = (0..n)
            .filter(|&x| reduce(theta.value(x, x), m) != 0)
            .map(|x| CocycleViolation { condition: CocycleCondition::C1, witness: vec![x, x] })
            .collect();
        let c1_ok = violations.is_empty();
        let rows = self.exec.map_range(0..n, |x| {
            let mut found = Vec::new();
            for y in 0..n {
                let xy = self.q.op(x, y);
                let lhs = theta.value(x, y);
                for z in 0..n {
                    let v =
                        lhs + theta.value(xy, z) - theta.value(x, z) - theta.value(self.q.op(x, z), self.q.op(y, z));
                    if reduce(v, m) != 0 {
                        found.push(CocycleViolation { condition: CocycleCondition::C2, witness: vec![x, y, z] });
                    }
                }
            }
            found
        });
        let before = violations.len();
        violations.extend(rows.into_iter().flatten());
        let c2_ok = violations.len() == before;
        let before = violations.len();
        if self.mode == DegeneracyMode::QuasiTrivial {
            for x in 0..n {
                for &y in self.orbits.members_of(x) {
                    if reduce(theta.value(x, y), m) != 0 {
                        violations.push(CocycleViolation { condition: CocycleCondition::C3, witness: vec![x, y] });
                    }
                }
            }
        }
        let c3_ok = violations.len() == before;
        Ok(CocycleReport { mode: self.mode, c1_ok, c2_ok, c3_ok, violations })
    }

    /// `θ` evaluated on the degree-2 basis.
    pub fn cochain_vector(&self, theta: &Cochain2) -> Vec<i64> {
        self.basis(2).tuples.iter().map(|t| theta.value(t[0], t[1])).collect()
    }

    /// Whether `θ ∘ ∂₃` vanishes (mod m), i.e. `θ` is closed as a cochain on
    /// the non-degenerate basis. This is the matrix counterpart of the C2
    /// triple scan.
    pub fn is_closed_via_matrix(&self, theta: &Cochain2, d3: &IntMatrix) -> bool {
        let v = self.cochain_vector(theta);
        d3.left_apply(&v).into_iter().all(|x| reduce(x, theta.modulus()) == 0)
    }

    /// `(δf)(x, y) = f(x) − f(x * y)`.
    pub fn coboundary(&self, f: &Cochain1) -> Result<Cochain2, HomologyError> {
        coboundary(self.q, f)
    }

    /// `H²` of the cochain complex `Hom(Cₙ, A)` for `A = Z_m` or `Z`.
    ///
    /// Prime moduli use ranks over `F_p`. Other moduli go through integral
    /// homology and the universal coefficient theorem:
    /// `H² ≅ Hom(H₂, A) ⊕ Ext(H₁, A)`.
    pub fn cohomology_h2(&self, modulus: u64) -> Result<CohomologyResult, HomologyError> {
        if modulus == 1 {
            return Err(HomologyError::Modulus(1));
        }
        if modulus >= 2 && is_prime(modulus) {
            Ok(self.h2_over_prime_field(modulus))
        } else {
            Ok(self.h2_by_universal_coefficients(modulus))
        }
    }

    /// `dim H²` over `F_p` from ranks: `c₂ − rank ∂₃ − rank ∂₂`.
    pub fn h2_over_prime_field(&self, p: u64) -> CohomologyResult {
        let c2 = self.basis(2).len();
        let r2 = rank_mod_p(&self.boundary(2), p);
        let r3 = rank_mod_p(&self.boundary(3), p);
        let dim = c2 - r3 - r2;
        CohomologyResult { modulus: p, mode: self.mode, factors: vec![p; dim], rank: Some(dim) }
    }

    /// `H²` through integral homology; valid for every modulus including 0.
    pub fn h2_by_universal_coefficients(&self, modulus: u64) -> CohomologyResult {
        let c2 = self.basis(2).len();
        let f2 = invariant_factors(&self.boundary(2));
        let f3 = invariant_factors(&self.boundary(3));
        let free_h2 = c2 - f2.len() - f3.len();
        let torsion = |f: &[BigInt]| -> Vec<u64> {
            f.iter().filter(|d| !d.is_one()).map(|d| d.to_u64().expect("torsion coefficient fits in u64")).collect()
        };
        let tors_h1 = torsion(&f2);
        let tors_h2 = torsion(&f3);
        let mut factors: Vec<u64> = Vec::new();
        if modulus == 0 {
            // Hom(H₂, Z) = Z^free, Ext(H₁, Z) = tors(H₁)
            factors.extend(tors_h1);
            factors.extend(std::iter::repeat_n(0, free_h2));
        } else {
            factors.extend(std::iter::repeat_n(modulus, free_h2));
            for d in tors_h2.into_iter().chain(tors_h1) {
                let g = d.gcd(&modulus);
                if g > 1 {
                    factors.push(g);
                }
            }
        }
        factors.sort_by_key(|&d| if d == 0 { u64::MAX } else { d });
        let rank = (modulus >= 2 && is_prime(modulus)).then_some(factors.len());
        CohomologyResult { modulus, mode: self.mode, factors, rank }
    }

    /// Some `f` with `δf = θ`, or `None` when `θ` is not a coboundary.
    pub fn is_coboundary(&self, theta: &Cochain2) -> Result<Option<Cochain1>, HomologyError> {
        let report = self.check_cocycle(theta)?;
        if !report.is_cocycle() {
            let v = &report.violations[0];
            return Err(HomologyError::NotACocycle(format!("{:?} fails at {:?}", v.condition, v.witness)));
        }
        let m = theta.modulus();
        // δ₁ = ∂₂ᵀ; solve U δ₁ V = D, D g = U θ, f = V g
        let delta1 = self.boundary(2).transpose();
        let snf = smith_normal_form(&delta1);
        let rhs: Vec<BigInt> = self.cochain_vector(theta).into_iter().map(BigInt::from).collect();
        let ut = snf.left.mul_vec(&rhs);
        let big_m = BigInt::from(m);
        let c1 = delta1.cols();
        let mut g = vec![BigInt::zero(); c1];
        for (i, b) in ut.iter().enumerate() {
            let d = snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
            match solve_scalar(&d, b, &big_m) {
                Some(z) => {
                    if i < c1 {
                        g[i] = z;
                    }
                }
                None => return Ok(None),
            }
        }
        let f: Vec<i64> = snf
            .right
            .mul_vec(&g)
            .into_iter()
            .map(|v| {
                let v = if m >= 2 { v.mod_floor(&big_m) } else { v };
                v.to_i64().expect("solution entry fits in i64")
            })
            .collect();
        let f = Cochain1::new(m, f)?;
        debug_assert_eq!(&coboundary(self.q, &f)?, theta);
        Ok(Some(f))
    }

    fn check_size(&self, size: usize) -> Result<(), HomologyError> {
        if size != self.q.size() {
            return Err(HomologyError::Shape(format!(
                "cochain is {size}×{size} but the quandle has {} elements",
                self.q.size()
            )));
        }
        Ok(())
    }
}

/// Solves `d · z ≡ b (mod m)` (`m = 0`: over `Z`).
fn solve_scalar(d: &BigInt, b: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_zero() {
        if d.is_zero() {
            return b.is_zero().then(BigInt::zero);
        }
        return b.is_multiple_of(d).then(|| b / d);
    }
    let b = b.mod_floor(m);
    let d = d.mod_floor(m);
    let g = d.gcd(m);
    if g.is_zero() || !b.is_multiple_of(&g) {
        return if b.is_zero() { Some(BigInt::zero()) } else { None };
    }
    let m2 = m / &g;
    let d2 = &d / &g;
    let b2 = &b / &g;
    if m2.is_one() {
        return Some(BigInt::zero());
    }
    let inv = mod_inverse(&d2, &m2)?;
    Some((b2 * inv).mod_floor(&m2))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn is_prime(m: u64) -> bool {
    m >= 2 && (2..).take_while(|d: &u64| d * d <= m).all(|d| !m.is_multiple_of(d))
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let p = p as i64;
    let mut rows: Vec<Vec<i64>> =
        m.to_dense().into_iter().map(|r| r.into_iter().map(|v| v.rem_euclid(p)).collect()).collect();
    let (nr, nc) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..nc {
        let Some(pr) = (rank..nr).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = (*x - k * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn is_degenerate(q: &FiniteQuandle, tuple: &[Elem], mode: DegeneracyMode) -> Result<bool, HomologyError> {
    Ok(QuandleComplex::new(q, mode)?.is_degenerate(tuple))
}

pub fn chain_basis(q: &FiniteQuandle, degree: usize, mode: DegeneracyMode) -> Result<ChainBasis, HomologyError> {
    Ok(QuandleComplex::new(q, mode)?.basis(degree))
}

pub fn boundary_matrix(q: &FiniteQuandle, degree: usize, mode: DegeneracyMode) -> Result<IntMatrix, HomologyError> {
    Ok(QuandleComplex::new(q, mode)?.boundary(degree))
}

pub fn check_cocycle(
    q: &FiniteQuandle,
    theta: &Cochain2,
    mode: DegeneracyMode,
) -> Result<CocycleReport, HomologyError> {
    QuandleComplex::new(q, mode)?.check_cocycle(theta)
}

/// `(δf)(x, y) = f(x) − f(x * y)`.
pub fn coboundary(q: &FiniteQuandle, f: &Cochain1) -> Result<Cochain2, HomologyError> {
    if f.values.len() != q.size() {
        return Err(HomologyError::Shape(format!(
            "1-cochain has {} values but the quandle has {} elements",
            f.values.len(),
            q.size()
        )));
    }
    let n = q.size();
    let rows: Vec<Vec<i64>> = (0..n).map(|x| (0..n).map(|y| f.values[x] - f.values[q.op(x, y)]).collect()).collect();
    Cochain2::from_rows(f.modulus, &rows)
}

pub fn cohomology_h2(q: &FiniteQuandle, modulus: u64, mode: DegeneracyMode) -> Result<CohomologyResult, HomologyError> {
    QuandleComplex::new(q, mode)?.cohomology_h2(modulus)
}

pub fn is_coboundary(
    q: &FiniteQuandle,
    theta: &Cochain2,
    mode: DegeneracyMode,
) -> Result<Option<Cochain1>, HomologyError> {
    QuandleComplex::new(q, mode)?.is_coboundary(theta)
}

/// `true` when `θ` is zero on every degenerate pair of `mode`, so that it
/// is determined by its values on the degree-2 basis.
pub fn vanishes_on_degenerate(
    q: &FiniteQuandle,
    theta: &Cochain2,
    mode: DegeneracyMode,
) -> Result<bool, HomologyError> {
    let cx = QuandleComplex::new(q, mode)?;
    let n = q.size();
    Ok((0..n).all(|x| (0..n).all(|y| !cx.is_degenerate(&[x, y]) || theta.value(x, y) == 0)))
}
