use serde::{Deserialize, Serialize};

use super::HomologyError;
use crate::quandle::Elem;

/// Reduces `v` into `0..m` when `m >= 2`; integer coefficients (`m = 0`)
/// are left as they are.
pub fn reduce(v: i64, modulus: u64) -> i64 {
    if modulus >= 2 {
        v.rem_euclid(modulus as i64)
    } else {
        v
    }
}

/// A function `X → A` with `A = Z_m` (`m >= 2`) or `A = Z` (`m = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain1 {
    pub modulus: u64,
    pub values: Vec<i64>,
}

impl Cochain1 {
    pub fn new(modulus: u64, values: Vec<i64>) -> Result<Self, HomologyError> {
        check_modulus(modulus)?;
        let values = values.into_iter().map(|v| reduce(v, modulus)).collect();
        Ok(Cochain1 { modulus, values })
    }

    pub fn zero(modulus: u64, size: usize) -> Self {
        Cochain1 { modulus, values: vec![0; size] }
    }

    /// The indicator function of one element.
    pub fn indicator(modulus: u64, size: usize, x: Elem) -> Self {
        let mut values = vec![0; size];
        values[x] = 1;
        Cochain1 { modulus, values }
    }
}

/// A function `θ: X × X → A`, stored row-major: `value(x, y) = θ(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain2 {
    modulus: u64,
    size: usize,
    values: Vec<i64>,
}

impl Cochain2 {
    pub fn from_rows<R: AsRef<[i64]>>(modulus: u64, rows: &[R]) -> Result<Self, HomologyError> {
        check_modulus(modulus)?;
        let size = rows.len();
        let mut values = Vec::with_capacity(size * size);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != size {
                return Err(HomologyError::Shape(format!("cochain row {x} has {} values, expected {size}", row.len())));
            }
            values.extend(row.iter().map(|&v| reduce(v, modulus)));
        }
        Ok(Cochain2 { modulus, size, values })
    }

    pub fn zero(modulus: u64, size: usize) -> Self {
        Cochain2 { modulus, size, values: vec![0; size * size] }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn value(&self, x: Elem, y: Elem) -> i64 {
        self.values[x * self.size + y]
    }

    pub fn set(&mut self, x: Elem, y: Elem, v: i64) {
        self.values[x * self.size + y] = reduce(v, self.modulus);
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        if self.size == 0 {
            return Vec::new();
        }
        self.values.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Same values read in `Z_m` for a different modulus.
    pub fn with_modulus(&self, modulus: u64) -> Result<Self, HomologyError> {
        Cochain2::from_rows(modulus, &self.rows())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Cochain2) -> Result<Self, HomologyError> {
        if self.size != other.size || self.modulus != other.modulus {
            return Err(HomologyError::Shape("adding cochains of different shape".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| reduce(a + b, self.modulus)).collect();
        Ok(Cochain2 { modulus: self.modulus, size: self.size, values })
    }

    /// Serializes into the cochain text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("mod {}\n", self.modulus);
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

fn check_modulus(m: u64) -> Result<(), HomologyError> {
    if m == 1 {
        Err(HomologyError::Modulus(m))
    } else {
        Ok(())
    }
}

/// Parses the cochain text format: a `mod m` line followed by the `n × n`
/// values of `θ` in row-major order. `#` starts a comment.
pub fn parse_cochain(text: &str) -> Result<Cochain2, HomologyError> {
    let mut modulus: Option<u64> = None;
    let mut values: Vec<i64> = Vec::new();
    let mut rows_seen: Vec<usize> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        if modulus.is_none() {
            if tokens.next() != Some("mod") {
                return Err(HomologyError::Parse { line, msg: "expected `mod m` header".into() });
            }
            let m = tokens
                .next()
                .and_then(|t| t.parse::<u64>().ok())
                .ok_or_else(|| HomologyError::Parse { line, msg: "bad modulus".into() })?;
            if tokens.next().is_some() {
                return Err(HomologyError::Parse { line, msg: "trailing tokens after modulus".into() });
            }
            check_modulus(m)?;
            modulus = Some(m);
            continue;
        }
        let before = values.len();
        for tok in tokens {
            let v = tok
                .parse::<i64>()
                .map_err(|_| HomologyError::Parse { line, msg: format!("not an integer: {tok:?}") })?;
            values.push(v);
        }
        rows_seen.push(values.len() - before);
    }
    let modulus = modulus.ok_or(HomologyError::Parse { line: 1, msg: "missing `mod m` header".into() })?;
    let n = rows_seen.len();
    if let Some(bad) = rows_seen.iter().position(|&len| len != n) {
        return Err(HomologyError::Parse {
            line: bad + 2,
            msg: format!("row {bad} has {} values, expected {n}", rows_seen[bad]),
        });
    }
    let rows: Vec<&[i64]> = if n == 0 { Vec::new() } else { values.chunks(n).collect() };
    Cochain2::from_rows(modulus, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        let c = parse_cochain("# t\nmod 3\n0 4\n-1 0 # row two\n").unwrap();
        assert_eq!(c.modulus(), 3);
        assert_eq!(c.rows(), vec![vec![0, 1], vec![2, 0]]);
        assert_eq!(parse_cochain(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn integer_coefficients_keep_sign() {
        let c = parse_cochain("mod 0\n0 -2\n5 0\n").unwrap();
        assert_eq!(c.value(0, 1), -2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cochain("0 1\n1 0\n"), Err(HomologyError::Parse { line: 1, .. })));
        assert!(matches!(parse_cochain("mod 2\n0 1\n1\n"), Err(HomologyError::Parse { .. })));
        assert!(matches!(parse_cochain("mod 1\n0\n"), Err(HomologyError::Modulus(1))));
    }
}
