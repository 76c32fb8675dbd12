use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::poly::{laurent_div_exact, laurent_gcd, laurent_lcm};
use super::LaurentScalar;
use crate::error::QgrError;

/// Dense matrix over `Q[q, q^-1]`, read as a matrix over the fraction field
/// `Q(q)` for rank and kernel purposes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentScalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentScalar>>) -> Result<Self, QgrError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(QgrError::RaggedMatrix {
                row: bad,
                expected: cols,
            });
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(rows: usize, columns: Vec<Vec<LaurentScalar>>) -> Result<Self, QgrError> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (c, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(QgrError::RaggedMatrix {
                    row: c,
                    expected: rows,
                });
            }
            for (r, x) in col.into_iter().enumerate() {
                m.entries[r * cols + c] = x;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn check(&self, r: usize, c: usize) -> Result<usize, QgrError> {
        if r >= self.rows || c >= self.cols {
            return Err(QgrError::MatrixIndex {
                row: r,
                col: c,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(r * self.cols + c)
    }

    pub fn get(&self, r: usize, c: usize) -> Result<&LaurentScalar, QgrError> {
        let idx = self.check(r, c)?;
        Ok(&self.entries[idx])
    }

    pub fn set(&mut self, r: usize, c: usize, x: LaurentScalar) -> Result<(), QgrError> {
        let idx = self.check(r, c)?;
        self.entries[idx] = x;
        Ok(())
    }

    fn row(&self, r: usize) -> &[LaurentScalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[LaurentScalar]) -> Result<Vec<LaurentScalar>, QgrError> {
        if v.len() != self.cols {
            return Err(QgrError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = LaurentScalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Entrywise evaluation at `q = v`, giving a matrix of constants.
    pub fn specialize(&self, v: &BigRational) -> Result<Self, QgrError> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.specialize(v).map(LaurentScalar::from_rational))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of the right kernel over `Q(q)`.
    ///
    /// Each vector has Laurent-polynomial entries with polynomial and rational
    /// content removed, lowest exponent 0, and a positive leading coefficient
    /// on its first nonzero entry. There are `cols - rank` of them and each
    /// satisfies `M v = 0` exactly.
    pub fn kernel_basis(&self) -> Vec<Vec<LaurentScalar>> {
        let ech = self.echelon();
        let mut basis = Vec::new();
        let mut pivot_iter = ech.pivots.iter().peekable();
        for f in 0..self.cols {
            if pivot_iter.peek().is_some_and(|&&p| p == f) {
                pivot_iter.next();
                continue;
            }
            let mut scale = LaurentScalar::one();
            for (r, &pc) in ech.pivots.iter().enumerate() {
                if !ech.rows[r][f].is_zero() {
                    scale = laurent_lcm(&scale, &ech.rows[r][pc]);
                }
            }
            let mut v = vec![LaurentScalar::zero(); self.cols];
            v[f] = scale.clone();
            for (r, &pc) in ech.pivots.iter().enumerate() {
                let e = &ech.rows[r][f];
                if e.is_zero() {
                    continue;
                }
                let factor =
                    laurent_div_exact(&scale, &ech.rows[r][pc]).expect("lcm is divisible by pivot");
                v[pc] = -(e * &factor);
            }
            normalize_vector(&mut v);
            debug_assert!(self.mul_vec(&v).unwrap().iter().all(LaurentScalar::is_zero));
            basis.push(v);
        }
        basis
    }

    /// Fraction-free Gauss-Jordan elimination. Rows are combined by
    /// cross-multiplication and made primitive after every update.
    fn echelon(&self) -> Echelon {
        let mut work: Vec<Vec<LaurentScalar>> = (0..self.rows)
            .map(|r| self.row(r).to_vec())
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut p = 0;
        for c in 0..self.cols {
            if p == work.len() {
                break;
            }
            let best = (p..work.len())
                .filter(|&r| !work[r][c].is_zero())
                .min_by_key(|&r| (work[r][c].term_count(), r));
            let Some(b) = best else { continue };
            work.swap(p, b);
            make_primitive(&mut work[p]);
            let pivot_row = work[p].clone();
            let piv = pivot_row[c].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r == p || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    let scaled = if x.is_zero() { LaurentScalar::zero() } else { &piv * x };
                    *x = if y.is_zero() { scaled } else { &scaled - &(&f * y) };
                }
                debug_assert!(row[c].is_zero());
                make_primitive(row);
            }
            pivots.push(c);
            p += 1;
        }
        work.truncate(p);
        Echelon { rows: work, pivots }
    }
}

struct Echelon {
    rows: Vec<Vec<LaurentScalar>>,
    pivots: Vec<usize>,
}

/// Divides a row by the gcd of its entries (a unit multiple of a monic
/// polynomial), then clears rational content and the common power of `q`.
fn make_primitive(row: &mut [LaurentScalar]) {
    let mut g = LaurentScalar::zero();
    for x in row.iter().filter(|x| !x.is_zero()) {
        g = laurent_gcd(&g, x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    if !g.is_one() {
        for x in row.iter_mut().filter(|x| !x.is_zero()) {
            *x = laurent_div_exact(x, &g).expect("gcd divides every entry");
        }
    }
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    let mut min_exp = i32::MAX;
    for x in row.iter() {
        for (e, c) in x.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
            min_exp = min_exp.min(e);
        }
    }
    let factor = BigRational::new(denom_lcm, numer_gcd);
    for x in row.iter_mut().filter(|x| !x.is_zero()) {
        *x = x.scale(&factor).shift(-min_exp);
    }
}

fn normalize_vector(v: &mut [LaurentScalar]) {
    make_primitive(v);
    let flip = v
        .iter()
        .find(|x| !x.is_zero())
        .and_then(LaurentScalar::leading_coeff)
        .is_some_and(|c| c.is_negative());
    if flip {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
}
