//! Exact arithmetic over GF(p^m) and the sparse matrices every rank and
//! kernel computation in the crate runs on.
//!
//! Field elements are packed into a `u64` as base-p digits (for p = 2 that
//! is a plain bitmask), so matrices stay flat `Vec<u64>` buffers. The
//! modulus polynomial of an extension field is certified irreducible at
//! construction by trial division over GF(p).

use std::sync::{Arc, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::util::DetRng;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field too large to certify (p^m over 2^32)")]
    FieldTooLarge,
    #[error("cannot parse field spec {0:?}; expected \"p\" or \"p^m\"")]
    BadSpec(String),
    #[error("matrix shapes are incompatible: {0}")]
    ShapeMismatch(String),
    #[error("matrices live over different fields")]
    FieldMismatch,
}

/// Log/antilog tables for small extension fields; multiplication becomes
/// two lookups. Shared behind an Arc so cloning a `FieldSpec` stays cheap.
#[derive(Debug)]
struct LogTables {
    log: Vec<u16>,
    exp: Vec<u16>,
}

/// A finite field GF(p^m), with its modulus polynomial when m > 1.
#[derive(Debug, Clone, Serialize)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    /// Monic modulus, coefficients low to high, length m + 1. For m = 1
    /// this is x itself and is never used.
    modulus: Vec<u64>,
    #[serde(skip)]
    tables: OnceLock<Option<Arc<LogTables>>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.m == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.m)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec {
            p,
            m: 1,
            modulus: vec![0, 1],
            tables: OnceLock::new(),
        })
    }

    /// GF(p^m). The modulus is found by seeded random search and certified
    /// irreducible by trial division, so construction is reproducible.
    pub fn extension(p: u64, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::BadDegree);
        }
        if m == 1 {
            return FieldSpec::prime(p);
        }
        let size = (p as u128)
            .checked_pow(m)
            .ok_or(FieldError::FieldTooLarge)?;
        if size > u64::MAX as u128 / 4 {
            return Err(FieldError::FieldTooLarge);
        }
        // Trial division must enumerate all monic polynomials of degree
        // at most m/2; refuse if that blows up.
        let half = m / 2;
        if (p as u128).pow(half) > 1 << 21 {
            return Err(FieldError::FieldTooLarge);
        }
        let mut rng = DetRng::derive(
            0x6f6c_7946_6c64u64,
            p.wrapping_mul(31).wrapping_add(m as u64),
        );
        loop {
            let mut coeffs: Vec<u64> = (0..m).map(|_| rng.below(p)).collect();
            coeffs.push(1); // monic
            if poly_is_irreducible(&coeffs, p) {
                return Ok(FieldSpec {
                    p,
                    m,
                    modulus: coeffs,
                    tables: OnceLock::new(),
                });
            }
        }
    }

    /// Parses "p" or "p^m", e.g. "5" or "2^16".
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        match s.split_once('^') {
            None => {
                let p: u64 = s.parse().map_err(|_| FieldError::BadSpec(s.into()))?;
                FieldSpec::prime(p)
            }
            Some((ps, ms)) => {
                let p: u64 = ps
                    .trim()
                    .parse()
                    .map_err(|_| FieldError::BadSpec(s.into()))?;
                let m: u32 = ms
                    .trim()
                    .parse()
                    .map_err(|_| FieldError::BadSpec(s.into()))?;
                FieldSpec::extension(p, m)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u64 {
        (self.p as u128).pow(self.m) as u64
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    fn decode(&self, mut x: u64) -> Vec<u64> {
        let mut digits = vec![0; self.m as usize];
        for d in digits.iter_mut() {
            *d = x % self.p;
            x /= self.p;
        }
        digits
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let mut x = 0u64;
        for &d in digits.iter().rev() {
            x = x * self.p + d;
        }
        x
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.m == 1 {
            return (self.p - a % self.p) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let da = self.decode(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Lazily built multiplication tables; only for extension fields that
    /// fit in 16 bits, which covers every hot path in the crate.
    fn log_tables(&self) -> Option<&Arc<LogTables>> {
        self.tables
            .get_or_init(|| {
                let size = self.size();
                if self.m == 1 || size > 1 << 16 {
                    return None;
                }
                let order = size - 1;
                let mut divisors = Vec::new();
                let mut rest = order;
                let mut q = 2;
                while q * q <= rest {
                    if rest.is_multiple_of(q) {
                        divisors.push(q);
                        while rest.is_multiple_of(q) {
                            rest /= q;
                        }
                    }
                    q += 1;
                }
                if rest > 1 {
                    divisors.push(rest);
                }
                let generator = (2..size)
                    .find(|&g| divisors.iter().all(|&d| self.pow_slow(g, order / d) != 1))
                    .expect("multiplicative group is cyclic");
                let mut log = vec![0u16; size as usize];
                let mut exp = vec![0u16; 2 * order as usize];
                let mut acc = 1u64;
                for i in 0..order {
                    exp[i as usize] = acc as u16;
                    exp[(i + order) as usize] = acc as u16;
                    log[acc as usize] = i as u16;
                    acc = self.mul_slow(acc, generator);
                }
                Some(Arc::new(LogTables { log, exp }))
            })
            .as_ref()
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return a * b % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = self.log_tables() {
            return t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize] as u64;
        }
        self.mul_slow(a, b)
    }

    fn pow_slow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            exp >>= 1;
        }
        acc
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return a * b % self.p;
        }
        if self.p == 2 {
            return self.mul_gf2(a, b);
        }
        let (da, db) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.m as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let reduced = poly_mod(&prod, &self.modulus, self.p);
        self.encode(&reduced)
    }

    /// Carryless multiply then reduce; intermediate words stay below
    /// 2m < 64 bits.
    fn mul_gf2(&self, a: u64, b: u64) -> u64 {
        let modulus_bits: u64 = self
            .modulus
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| acc | (c << i));
        let mut acc = 0u64;
        for i in 0..64 - b.leading_zeros() {
            if (b >> i) & 1 == 1 {
                acc ^= a << i;
            }
        }
        while acc != 0 {
            let deg = 63 - acc.leading_zeros();
            if deg < self.m {
                break;
            }
            acc ^= modulus_bits << (deg - self.m);
        }
        acc
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by table lookup or Fermat: a^(q-2).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        if self.m == 1 {
            return self.pow(a, self.p - 2);
        }
        if let Some(t) = self.log_tables() {
            let order = self.size() as usize - 1;
            return t.exp[order - t.log[a as usize] as usize] as u64;
        }
        self.pow(a, self.size() - 2)
    }

    /// Uniform random element.
    pub fn random(&self, rng: &mut DetRng) -> u64 {
        rng.below(self.size())
    }

    /// Canonical embedding of a signed integer (boundary-map coefficients
    /// are always ±1).
    pub fn from_i64(&self, v: i64) -> u64 {
        let p = self.p as i64;
        let r = ((v % p) + p) % p;
        // Constant digits live in the prime subfield.
        r as u64
    }
}

/// Remainder of `poly` modulo monic `modulus` over GF(p).
fn poly_mod(poly: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut rem: Vec<u64> = poly.to_vec();
    while rem.len() > m {
        let lead = *rem.last().unwrap() % p;
        let deg = rem.len() - 1;
        if lead != 0 {
            for (i, &mc) in modulus.iter().enumerate() {
                let idx = deg - m + i;
                let sub = lead * mc % p;
                rem[idx] = (rem[idx] + p * p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.resize(m, 0);
    rem
}

fn poly_divides(divisor: &[u64], poly: &[u64], p: u64) -> bool {
    poly_mod(poly, divisor, p).iter().all(|&c| c == 0)
}

/// Trial factorization: a degree-m polynomial is irreducible iff no monic
/// polynomial of degree 1..=m/2 divides it.
fn poly_is_irreducible(poly: &[u64], p: u64) -> bool {
    let m = poly.len() - 1;
    if poly[0] == 0 {
        return m == 1; // divisible by x
    }
    for deg in 1..=m / 2 {
        let count = (p as u128).pow(deg as u32);
        for idx in 0..count {
            let mut divisor = vec![0u64; deg + 1];
            let mut rest = idx;
            for c in divisor.iter_mut().take(deg) {
                *c = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            divisor[deg] = 1;
            if poly_divides(&divisor, poly, p) {
                return false;
            }
        }
    }
    true
}

/// A matrix over a fixed finite field, stored as sparse (row, col, value)
/// triples. Rank-type queries run dense elimination internally; every
/// matrix in this crate is desk-sized.
#[derive(Debug, Clone, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, u64)>,
    field: FieldSpec,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            entries: Vec::new(),
            field,
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::new(n, n, field);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Records a (reduced, nonzero) entry; zero values are dropped.
    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        debug_assert!(row < self.rows && col < self.cols);
        if value != 0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn dense(&self) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![0u64; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            rows[r][c] = self.field.add(rows[r][c], v);
        }
        rows
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect(),
            field: self.field.clone(),
        }
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.dense();
        row_reduce(&mut rows, &self.field)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Columns spanning the null space, as a new matrix with `kernel_dim`
    /// columns.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let mut rows = self.dense();
        let rank = row_reduce(&mut rows, f);
        // Locate pivot columns of the reduced form.
        let mut pivot_col_of_row = Vec::with_capacity(rank);
        let mut is_pivot = vec![false; self.cols];
        for row in rows.iter().take(rank) {
            let col = row.iter().position(|&v| v != 0).expect("nonzero row");
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::new(self.cols, free_cols.len(), f.clone());
        for (k, &fc) in free_cols.iter().enumerate() {
            basis.set(fc, k, 1);
            // Back-substitute: pivot rows are already fully reduced.
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                let coeff = rows[r][fc];
                if coeff != 0 {
                    basis.set(pc, k, f.neg(coeff));
                }
            }
        }
        basis
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, FieldError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(FieldError::ShapeMismatch(format!(
                "hstack rows {} vs {}",
                self.rows, other.rows
            )));
        }
        let mut m = Matrix::new(self.rows, self.cols + other.cols, self.field.clone());
        m.entries.extend(self.entries.iter().copied());
        m.entries
            .extend(other.entries.iter().map(|&(r, c, v)| (r, c + self.cols, v)));
        Ok(m)
    }

    /// Matrix product self * other.
    pub fn multiply(&self, other: &Matrix) -> Result<Matrix, FieldError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(FieldError::ShapeMismatch(format!(
                "multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let rhs = other.dense();
        let mut out = vec![vec![0u64; other.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            for j in 0..other.cols {
                let t = f.mul(v, rhs[c][j]);
                if t != 0 {
                    out[r][j] = f.add(out[r][j], t);
                }
            }
        }
        let mut m = Matrix::new(self.rows, other.cols, f.clone());
        for (r, row) in out.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                if v != 0 {
                    m.set(r, c, v);
                }
            }
        }
        Ok(m)
    }
}

/// In-place row echelon reduction; returns the rank. Rows end up reduced
/// (pivots 1, pivot columns cleared above and below).
fn row_reduce(rows: &mut [Vec<u64>], f: &FieldSpec) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]);
        for cell in rows[rank][col..].iter_mut() {
            *cell = f.mul(*cell, inv);
        }
        let (before, rest) = rows.split_at_mut(rank);
        let (pivot_row, after) = rest.split_first_mut().expect("rank < nrows");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let coeff = row[col];
            if coeff != 0 {
                for (cell, &p) in row[col..].iter_mut().zip(pivot_row[col..].iter()) {
                    *cell = f.sub(*cell, f.mul(coeff, p));
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// rank of [U | V]: dimension of the sum of the two column spans.
pub fn sum_dim(u: &Matrix, v: &Matrix) -> Result<usize, FieldError> {
    Ok(u.hstack(v)?.rank())
}

/// dim ((span A + span B) / span B) = rank([A|B]) - rank(B), the image
/// dimension of A's columns in the quotient by B's columns.
pub fn image_dim_mod(a: &Matrix, b: &Matrix) -> Result<usize, FieldError> {
    Ok(a.hstack(b)?.rank() - b.rank())
}
