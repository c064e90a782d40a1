//! A finite slice of rational matrices with Kronecker powers as the action.
//!
//! Objects are dimensions `0..=nmax`, a morphism `n → n'` is an `n' × n`
//! matrix, and `m` acts by `n ↦ n^m`, `A ↦ A^{⊗m}`. The slice is infinite as
//! a category, so membership in the first vertical stage is decided directly:
//! a non-globular square `(m, φ)` with `m > 1` lies there exactly when
//! `φ = η · ψ^{⊗m}` for a row `ψ` and a column `η`, i.e. through the unit
//! object `1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::malformed("matrix", format!("{} entries for a {rows} × {cols} matrix", data.len())));
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::precondition(format!(
                "cannot multiply {} × {} by {} × {}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(self.get(r / other.rows, c / other.cols) * other.get(r % other.rows, c % other.cols));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn kron_pow(&self, m: usize) -> QMatrix {
        (0..m).fold(Self::identity(1), |acc, _| acc.kron(self))
    }

    pub fn scale(&self, s: &BigRational) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Exact rank by fraction-free elimination on the row-wise integer clearing.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                row.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect()
            })
            .collect();
        bareiss_rank(&mut a, self.cols)
    }
}


fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].abs();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatMembership {
    /// `m = 1`: the square is globular.
    Globular,
    /// `φ = η · ψ^{⊗m}`.
    Factors { psi: QMatrix, eta: QMatrix },
    /// Rank at least two cannot pass through a one-dimensional object.
    RankObstruction { rank: usize },
    /// Rank one, but the row space is not spanned by a Kronecker power.
    NotAPower,
}

impl MatMembership {
    pub fn member(&self) -> bool {
        matches!(self, MatMembership::Globular | MatMembership::Factors { .. })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MatSlice {
    nmax: usize,
}

impl MatSlice {
    pub fn new(nmax: usize) -> Result<Self> {
        if nmax < 4 {
            return Err(Error::precondition(format!("matrix slice needs nmax >= 4, got {nmax}")));
        }
        Ok(MatSlice { nmax })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// `n^m` when it stays inside the slice.
    pub fn act(&self, m: usize, n: usize) -> Option<usize> {
        let mut acc: usize = 1;
        for _ in 0..m {
            acc = acc.checked_mul(n).filter(|&v| v <= self.nmax.max(1))?;
        }
        (acc <= self.nmax).then_some(acc)
    }

    /// Decides membership of the square `(m, φ)` with upper dimension `source`.
    pub fn decide(&self, m: usize, source: usize, payload: &QMatrix) -> Result<MatMembership> {
        if m == 0 {
            return Err(Error::precondition("the acting monoid is the positive integers"));
        }
        let dom = self
            .act(m, source)
            .ok_or_else(|| Error::precondition(format!("{source}^{m} leaves the slice")))?;
        if payload.cols() != dom || payload.rows() > self.nmax {
            return Err(Error::precondition(format!(
                "payload is {} × {}, expected target × {dom}",
                payload.rows(),
                payload.cols()
            )));
        }
        if m == 1 {
            return Ok(MatMembership::Globular);
        }
        let rank = payload.rank();
        if rank >= 2 {
            return Ok(MatMembership::RankObstruction { rank });
        }
        if rank == 0 {
            let psi = QMatrix::zero(1, source);
            let eta = QMatrix::zero(payload.rows(), 1);
            return Ok(MatMembership::Factors { psi, eta });
        }
        let (r0, j0) = (0..payload.rows())
            .flat_map(|r| (0..dom).map(move |c| (r, c)))
            .find(|&(r, c)| !payload.get(r, c).is_zero())
            .expect("rank one has a nonzero entry");
        // Digits of j0 in base `source`, most significant first.
        let digits: Vec<usize> = (0..m).rev().map(|k| (j0 / source.pow(k as u32)) % source).collect();
        let tail: usize = digits[1..].iter().fold(0, |acc, &d| acc * source + d);
        let stride = source.pow((m - 1) as u32);
        let psi = QMatrix {
            rows: 1,
            cols: source,
            data: (0..source).map(|i| payload.get(r0, i * stride + tail).clone()).collect(),
        };
        let power = psi.kron_pow(m);
        if power.get(0, j0).is_zero() {
            return Ok(MatMembership::NotAPower);
        }
        let eta = QMatrix {
            rows: payload.rows(),
            cols: 1,
            data: (0..payload.rows()).map(|r| payload.get(r, j0) / power.get(0, j0)).collect(),
        };
        if &eta.mul(&power)? != payload {
            return Ok(MatMembership::NotAPower);
        }
        Ok(MatMembership::Factors { psi, eta })
    }
}

#[derive(Debug, Clone)]
pub struct MatReport {
    pub nmax: usize,
    pub square: (usize, usize),
    pub rank: usize,
    pub membership: MatMembership,
}

/// The square `(2, id_4)` over source dimension `2`.
pub fn build_mat_fixture(nmax: usize) -> Result<MatReport> {
    let slice = MatSlice::new(nmax)?;
    let payload = QMatrix::identity(4);
    let membership = slice.decide(2, 2, &payload)?;
    Ok(MatReport { nmax, square: (2, 2), rank: payload.rank(), membership })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn identity_of_four_is_blocked_by_rank() {
        let r = build_mat_fixture(4).unwrap();
        assert_eq!(r.rank, 4);
        assert_eq!(r.membership, MatMembership::RankObstruction { rank: 4 });
        assert!(MatSlice::new(3).is_err());
    }

    #[test]
    fn rank_one_tensor_power_factors() {
        let s = MatSlice::new(9).unwrap();
        let psi = QMatrix::new(1, 2, vec![q(1, 2), q(-3, 1)]).unwrap();
        let eta = QMatrix::from_ints(3, 1, &[2, 0, -1]).unwrap();
        let phi = eta.mul(&psi.kron_pow(2)).unwrap();
        match s.decide(2, 2, &phi).unwrap() {
            MatMembership::Factors { psi, eta } => assert_eq!(eta.mul(&psi.kron_pow(2)).unwrap(), phi),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rank_one_non_power_is_rejected() {
        let s = MatSlice::new(4).unwrap();
        let phi = QMatrix::from_ints(1, 4, &[0, 1, 0, 0]).unwrap();
        assert_eq!(s.decide(2, 2, &phi).unwrap(), MatMembership::NotAPower);
        let zero = QMatrix::zero(2, 4);
        assert!(s.decide(2, 2, &zero).unwrap().member());
        assert_eq!(s.decide(1, 3, &QMatrix::identity(3)).unwrap(), MatMembership::Globular);
    }
}
