//! Linear algebra over [`Scalar`] on the 8-dimensional core module.
//!
//! Matrices follow the column-as-image convention: entry `(i, j)` is the
//! coefficient of basis element `i` in the image of basis element `j`.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use serde::{Deserialize, Serialize};

use crate::ring::{render, Format, Scalar};

pub const DIM: usize = 8;

/// The core basis, in its fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisIndex {
    /// Unit over the identity.
    T1,
    /// Unit over minus the identity.
    Tm1,
    /// Unit over the Jordan class of trace 2.
    Tp,
    /// Unit over the Jordan class of trace -2.
    Tm,
    /// Unit over the regular stratum, traces other than 2 and -2.
    TB,
    /// Double cover of the regular stratum branched at trace 2.
    S2,
    /// Double cover of the regular stratum branched at trace -2.
    Sm2,
    /// Product of the two double covers.
    S2Sm2,
}

impl BasisIndex {
    pub const ALL: [BasisIndex; DIM] = [
        BasisIndex::T1,
        BasisIndex::Tm1,
        BasisIndex::Tp,
        BasisIndex::Tm,
        BasisIndex::TB,
        BasisIndex::S2,
        BasisIndex::Sm2,
        BasisIndex::S2Sm2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn label(self) -> &'static str {
        match self {
            BasisIndex::T1 => "T1",
            BasisIndex::Tm1 => "Tm1",
            BasisIndex::Tp => "Tp",
            BasisIndex::Tm => "Tm",
            BasisIndex::TB => "TB",
            BasisIndex::S2 => "S2",
            BasisIndex::Sm2 => "Sm2",
            BasisIndex::S2Sm2 => "S2Sm2",
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("matrix is singular: no nonzero pivot in column {column}")]
    Singular { column: BasisIndex },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoreVector {
    entries: [Scalar; DIM],
}

impl CoreVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisIndex) -> Self {
        let mut v = Self::zero();
        v[b] = Scalar::one();
        v
    }

    pub fn from_entries(entries: [Scalar; DIM]) -> Self {
        CoreVector { entries }
    }

    pub fn entries(&self) -> &[Scalar; DIM] {
        &self.entries
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        CoreVector {
            entries: std::array::from_fn(|i| &self.entries[i] * k),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisIndex, &Scalar)> {
        BasisIndex::ALL.into_iter().zip(self.entries.iter())
    }
}

impl Index<BasisIndex> for CoreVector {
    type Output = Scalar;
    fn index(&self, b: BasisIndex) -> &Scalar {
        &self.entries[b.index()]
    }
}

impl IndexMut<BasisIndex> for CoreVector {
    fn index_mut(&mut self, b: BasisIndex) -> &mut Scalar {
        &mut self.entries[b.index()]
    }
}

impl fmt::Debug for CoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().filter(|(_, s)| !s.is_zero()))
            .finish()
    }
}

/// A dense 8x8 matrix over [`Scalar`], stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoreMatrix {
    rows: [[Scalar; DIM]; DIM],
}

impl Default for CoreMatrix {
    fn default() -> Self {
        Self::zero()
    }
}

impl CoreMatrix {
    pub fn zero() -> Self {
        CoreMatrix {
            rows: Default::default(),
        }
    }

    pub fn identity() -> Self {
        Self::diagonal(std::array::from_fn(|_| Scalar::one()))
    }

    pub fn diagonal(d: [Scalar; DIM]) -> Self {
        let mut m = Self::zero();
        for (i, x) in d.into_iter().enumerate() {
            m.rows[i][i] = x;
        }
        m
    }

    pub fn from_rows(rows: [[Scalar; DIM]; DIM]) -> Self {
        CoreMatrix { rows }
    }

    /// Matrix whose column `j` is `cols[j]`, the image of basis element `j`.
    pub fn from_columns(cols: [CoreVector; DIM]) -> Self {
        CoreMatrix {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| cols[j].entries[i].clone())),
        }
    }

    pub fn get(&self, row: BasisIndex, col: BasisIndex) -> &Scalar {
        &self.rows[row.index()][col.index()]
    }

    pub fn set(&mut self, row: BasisIndex, col: BasisIndex, value: Scalar) {
        self.rows[row.index()][col.index()] = value;
    }

    pub fn rows(&self) -> &[[Scalar; DIM]; DIM] {
        &self.rows
    }

    /// The image of basis element `b`.
    pub fn column(&self, b: BasisIndex) -> CoreVector {
        CoreVector {
            entries: std::array::from_fn(|i| self.rows[i][b.index()].clone()),
        }
    }

    pub fn transpose(&self) -> Self {
        CoreMatrix {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].clone())),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        CoreMatrix {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| &self.rows[i][j] * k)),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (BasisIndex, BasisIndex, &Scalar)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, x)| (BasisIndex::ALL[i], BasisIndex::ALL[j], x))
        })
    }

    pub fn apply(&self, v: &CoreVector) -> CoreVector {
        CoreVector {
            entries: std::array::from_fn(|i| {
                self.rows[i]
                    .iter()
                    .zip(&v.entries)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            }),
        }
    }

    /// `self * rhs`: apply `rhs` first, then `self`.
    pub fn mul(&self, rhs: &CoreMatrix) -> CoreMatrix {
        CoreMatrix {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..DIM)
                        .filter(|&k| !self.rows[i][k].is_zero() && !rhs.rows[k][j].is_zero())
                        .map(|k| &self.rows[i][k] * &rhs.rows[k][j])
                        .sum()
                })
            }),
        }
    }

    /// Binary exponentiation; `m^0` is the identity.
    pub fn pow(&self, mut n: u32) -> CoreMatrix {
        let mut acc = CoreMatrix::identity();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gauss-Jordan elimination over `Q(q)`, pivoting on the first nonzero
    /// entry scanning down each column.
    pub fn inv(&self) -> Result<CoreMatrix, ModuleError> {
        let mut a = self.rows.clone();
        let mut inv = CoreMatrix::identity().rows;
        for col in 0..DIM {
            let pivot = (col..DIM)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(ModuleError::Singular {
                    column: BasisIndex::ALL[col],
                })?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv().expect("pivot is nonzero");
            for j in 0..DIM {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..DIM {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..DIM {
                    if !a[col][j].is_zero() {
                        a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    }
                    if !inv[col][j].is_zero() {
                        inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                    }
                }
            }
        }
        Ok(CoreMatrix { rows: inv })
    }

    /// Determinant by fraction-field elimination.
    pub fn det(&self) -> Scalar {
        let mut a = self.rows.clone();
        let mut det = Scalar::one();
        for col in 0..DIM {
            let Some(pivot) = (col..DIM).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            det = &det * &a[col][col];
            let p = a[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..DIM {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &p;
                for j in col..DIM {
                    if !a[col][j].is_zero() {
                        a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    }
                }
            }
        }
        det
    }

    pub fn commutes_with(&self, other: &CoreMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// First entry where `self` and `other` differ, in row-major order.
    pub fn first_difference(&self, other: &CoreMatrix) -> Option<(BasisIndex, BasisIndex)> {
        self.entries()
            .zip(other.entries())
            .find(|((_, _, a), (_, _, b))| a != b)
            .map(|((r, c, _), _)| (r, c))
    }

    pub fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => serde_json::to_string(&MatrixJson::from(self)).expect("serializes"),
            Format::Latex => {
                let body: Vec<String> = self
                    .rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(render::latex)
                            .collect::<Vec<_>>()
                            .join(" & ")
                    })
                    .collect();
                format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", body.join(" \\\\\n"))
            }
            Format::Text => {
                let mut out = String::new();
                for (i, row) in self.rows.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(render::text).collect();
                    out.push_str(&format!(
                        "{:<6}| {}\n",
                        BasisIndex::ALL[i].label(),
                        cells.join(" | ")
                    ));
                }
                out
            }
        }
    }
}

impl Mul for &CoreMatrix {
    type Output = CoreMatrix;
    fn mul(self, rhs: &CoreMatrix) -> CoreMatrix {
        CoreMatrix::mul(self, rhs)
    }
}

impl Mul<&CoreVector> for &CoreMatrix {
    type Output = CoreVector;
    fn mul(self, rhs: &CoreVector) -> CoreVector {
        self.apply(rhs)
    }
}

impl fmt::Debug for CoreMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

/// JSON form of a matrix: basis labels plus row-major entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub basis: Vec<String>,
    pub convention: String,
    pub rows: Vec<Vec<render::ScalarJson>>,
}

impl From<&CoreMatrix> for MatrixJson {
    fn from(m: &CoreMatrix) -> Self {
        MatrixJson {
            basis: BasisIndex::ALL.iter().map(|b| b.label().to_string()).collect(),
            convention: "entry (i, j) is the coefficient of basis element i in the image of basis element j".into(),
            rows: m
                .rows
                .iter()
                .map(|row| row.iter().map(render::ScalarJson::from).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisIndex::*;

    fn q2_block() -> CoreMatrix {
        // [[q^2, q], [q, q^2]] on (TB, S2Sm2), identity elsewhere.
        let mut m = CoreMatrix::identity();
        m.set(TB, TB, Scalar::poly(&[0, 0, 1]));
        m.set(TB, S2Sm2, Scalar::q());
        m.set(S2Sm2, TB, Scalar::q());
        m.set(S2Sm2, S2Sm2, Scalar::poly(&[0, 0, 1]));
        m
    }

    #[test]
    fn identity_application() {
        let v = CoreVector::from_entries(std::array::from_fn(|i| Scalar::from_int(i as i64 - 3)));
        assert_eq!(CoreMatrix::identity().apply(&v), v);
    }

    #[test]
    fn diagonal_on_basis_vector() {
        let d: [Scalar; DIM] = std::array::from_fn(|i| Scalar::poly(&[i as i64, 1]));
        let m = CoreMatrix::diagonal(d.clone());
        for b in BasisIndex::ALL {
            assert_eq!(m.apply(&CoreVector::basis(b)), CoreVector::basis(b).scale(&d[b.index()]));
        }
    }

    #[test]
    fn power_of_symmetric_block() {
        // frozen by direct 2x2 multiplication
        let sq = q2_block().pow(2);
        assert_eq!(sq.get(TB, TB), &Scalar::poly(&[0, 0, 1, 0, 1]));
        assert_eq!(sq.get(TB, S2Sm2), &Scalar::poly(&[0, 0, 0, 2]));
        assert_eq!(sq.get(S2Sm2, TB), &Scalar::poly(&[0, 0, 0, 2]));
        assert_eq!(sq.get(S2Sm2, S2Sm2), &Scalar::poly(&[0, 0, 1, 0, 1]));
        assert_eq!(q2_block().pow(0), CoreMatrix::identity());
    }

    #[test]
    fn inverse_of_block() {
        let inv = q2_block().inv().unwrap();
        let expected = Scalar::from_fraction(
            crate::ring::IntPoly::one(),
            crate::ring::IntPoly::from_i64s(&[-1, 0, 1]),
        )
        .unwrap();
        assert_eq!(inv.get(TB, TB), &expected);
        assert_eq!(q2_block().mul(&inv), CoreMatrix::identity());
        assert_eq!(CoreMatrix::identity().inv().unwrap(), CoreMatrix::identity());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let mut m = CoreMatrix::identity();
        m.set(Sm2, Sm2, Scalar::zero());
        assert_eq!(m.inv(), Err(ModuleError::Singular { column: Sm2 }));
        assert!(m.det().is_zero());
    }

    #[test]
    fn inversion_needs_a_row_swap() {
        let mut m = CoreMatrix::zero();
        for (i, b) in BasisIndex::ALL.iter().enumerate() {
            m.set(BasisIndex::ALL[(i + 1) % DIM], *b, Scalar::poly(&[1, i as i64]));
        }
        let inv = m.inv().unwrap();
        assert_eq!(m.mul(&inv), CoreMatrix::identity());
        assert_eq!(inv.mul(&m), CoreMatrix::identity());
    }

    #[test]
    fn columns_are_images() {
        let mut m = CoreMatrix::zero();
        m.set(Tm1, T1, Scalar::one());
        assert_eq!(m.apply(&CoreVector::basis(T1)), CoreVector::basis(Tm1));
        assert_eq!(m.column(T1), CoreVector::basis(Tm1));
        assert_eq!(CoreMatrix::from_columns(std::array::from_fn(|j| m.column(BasisIndex::ALL[j]))), m);
    }
}
