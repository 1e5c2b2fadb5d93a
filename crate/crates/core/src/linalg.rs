//! Vectors, matrices, and subspaces over GF(q).
//!
//! A `Subspace` is always held in reduced row echelon form, which makes the
//! representation unique: two subspaces are equal iff their basis matrices are
//! entry-wise equal. Over GF(2) the elimination kernels run on bit-packed
//! machine words (ambient dimension up to 64); other fields use byte entries
//! and the table-driven field operations.

use crate::error::{Error, Result};
use crate::field::{field, FieldElem, FieldSpec};

/// A vector with entries in GF(q).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector {
    q: u16,
    entries: Vec<u8>,
}

impl Vector {
    pub fn from_indices(q: u16, entries: Vec<u8>) -> Result<Vector> {
        let f = field(q)?;
        for &e in &entries {
            if e as u16 >= f.order() {
                return Err(Error::ElementOutOfRange {
                    q,
                    index: e as usize,
                });
            }
        }
        Ok(Vector { q, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn order_q(&self) -> u16 {
        self.q
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> FieldElem {
        field(self.q)
            .unwrap()
            .elem(self.entries[i] as usize)
            .unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Standard dot product sum(x_i * y_i).
    pub fn dot(&self, other: &Vector) -> Result<FieldElem> {
        if self.q != other.q {
            return Err(Error::FieldMismatch(self.q, other.q));
        }
        if self.len() != other.len() {
            return Err(Error::AmbientMismatch(self.len(), other.len()));
        }
        let f = field(self.q)?;
        let mut acc = 0u8;
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            acc = f.add_idx(acc, f.mul_idx(a, b));
        }
        f.elem(acc as usize)
    }
}

/// A rectangular matrix over GF(q), row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    q: u16,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(q: u16, rows: usize, cols: usize) -> Result<Matrix> {
        field(q)?;
        Ok(Matrix {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(q: u16, n: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(q, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    pub fn from_rows(q: u16, rows: &[Vec<u8>]) -> Result<Matrix> {
        let f = field(q)?;
        if rows.is_empty() {
            return Err(Error::invalid("matrix needs at least one row"));
        }
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::invalid("matrix rows must have equal length"));
            }
            for &e in row {
                if e as u16 >= f.order() {
                    return Err(Error::ElementOutOfRange {
                        q,
                        index: e as usize,
                    });
                }
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            q,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_vectors(rows: &[Vector]) -> Result<Matrix> {
        if rows.is_empty() {
            return Err(Error::invalid("matrix needs at least one row"));
        }
        let q = rows[0].q;
        if rows.iter().any(|r| r.q != q) {
            return Err(Error::FieldMismatch(
                q,
                rows.iter().find(|r| r.q != q).unwrap().q,
            ));
        }
        let owned: Vec<Vec<u8>> = rows.iter().map(|r| r.entries.clone()).collect();
        Matrix::from_rows(q, &owned)
    }

    pub fn order_q(&self) -> u16 {
        self.q
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!((v as u16) < self.q);
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.q != other.q {
            return Err(Error::FieldMismatch(self.q, other.q));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = field(self.q)?;
        let mut out = Matrix::zeros(self.q, self.rows, other.cols)?;
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul_idx(a, other.get(l, j));
                    let cur = out.get(i, j);
                    out.set(i, j, f.add_idx(cur, prod));
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let f = field(self.q).unwrap();
        let mut data = self.data.clone();
        rank_bytes(f, &mut data, self.rows, self.cols)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// A k-dimensional subspace of GF(q)^n in reduced row echelon form.
///
/// Derived ordering is lexicographic on the concatenated entry sequence
/// (after field order and ambient dimension), giving a deterministic total
/// order for reports.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    q: u16,
    n: u16,
    entries: Vec<u8>,
    pivots: Vec<u16>,
}

impl Subspace {
    pub(crate) fn from_rref_unchecked(
        q: u16,
        n: u16,
        entries: Vec<u8>,
        pivots: Vec<u16>,
    ) -> Subspace {
        debug_assert_eq!(entries.len(), pivots.len() * n as usize);
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        #[cfg(debug_assertions)]
        {
            let k = pivots.len();
            for r in 0..k {
                let p = pivots[r] as usize;
                debug_assert!(entries[r * n as usize..r * n as usize + p]
                    .iter()
                    .all(|&e| e == 0));
                debug_assert_eq!(entries[r * n as usize + p], 1);
                for s in 0..k {
                    if s != r {
                        debug_assert_eq!(entries[s * n as usize + p], 0);
                    }
                }
            }
        }
        Subspace {
            q,
            n,
            entries,
            pivots,
        }
    }

    /// Canonical form of the row space of arbitrary generators.
    pub fn span(q: u16, rows: &[Vec<u8>]) -> Result<Subspace> {
        canonicalize(&Matrix::from_rows(q, rows)?)
    }

    pub fn order_q(&self) -> u16 {
        self.q
    }

    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[u16] {
        &self.pivots
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.entries[r * self.n as usize..(r + 1) * self.n as usize]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.dim()).map(move |r| self.row(r))
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix {
            q: self.q,
            rows: self.dim(),
            cols: self.n as usize,
            data: self.entries.clone(),
        }
    }

    /// Key realizing the enumeration order: pivot sets colexicographically,
    /// then the free entries in row-major scan order.
    pub fn canon_key(&self) -> (Vec<u16>, Vec<u8>) {
        let mut piv = self.pivots.clone();
        piv.reverse();
        let n = self.n as usize;
        let mut free = Vec::new();
        for r in 0..self.dim() {
            for c in self.pivots[r] as usize + 1..n {
                if !self.pivots.contains(&(c as u16)) {
                    free.push(self.entries[r * n + c]);
                }
            }
        }
        (piv, free)
    }

    /// Reduces `v` against the RREF basis; the residual is zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.n as usize {
            return Err(Error::AmbientMismatch(v.len(), self.n as usize));
        }
        let f = field(self.q)?;
        let mut res = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = res[p as usize];
            if c != 0 {
                let row = self.row(r);
                for j in 0..res.len() {
                    res[j] = f.sub_idx(res[j], f.mul_idx(c, row[j]));
                }
            }
        }
        Ok(res)
    }

    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&e| e == 0))
    }

    pub fn contains_vector(&self, v: &Vector) -> Result<bool> {
        if v.q != self.q {
            return Err(Error::FieldMismatch(v.q, self.q));
        }
        self.contains(v.as_slice())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        for r in other.rows_iter() {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.q != other.q {
            return Err(Error::FieldMismatch(self.q, other.q));
        }
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n as usize, other.n as usize));
        }
        Ok(())
    }

    /// X + Y: canonical form of the stacked bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let mut data = self.entries.clone();
        data.extend_from_slice(&other.entries);
        canonicalize_rows(self.q, self.n as usize, data)
    }

    /// dim(X + Y) without materializing the sum.
    pub fn sum_dim(&self, other: &Subspace) -> Result<usize> {
        self.compatible(other)?;
        let n = self.n as usize;
        if self.q == 2 && n <= 64 {
            let mut words: Vec<u64> = Vec::with_capacity(self.dim() + other.dim());
            words.extend(self.rows_iter().map(pack_row));
            words.extend(other.rows_iter().map(pack_row));
            return Ok(rank_words(&mut words));
        }
        let f = field(self.q)?;
        let mut data = self.entries.clone();
        data.extend_from_slice(&other.entries);
        Ok(rank_bytes(f, &mut data, self.dim() + other.dim(), n))
    }

    /// X intersect Y, via the kernel of the stacked-basis coefficient system.
    /// Returns the dimension, and the subspace when it is nontrivial.
    pub fn intersect(&self, other: &Subspace) -> Result<(usize, Option<Subspace>)> {
        self.compatible(other)?;
        let f = field(self.q)?;
        let n = self.n as usize;
        let ka = self.dim();
        let m = ka + other.dim();

        // stacked rows augmented with an identity to track coefficients
        let width = n + m;
        let mut data = vec![0u8; m * width];
        for (i, row) in self.rows_iter().chain(other.rows_iter()).enumerate() {
            data[i * width..i * width + n].copy_from_slice(row);
            data[i * width + n + i] = 1;
        }
        let pivots = rref_bytes_partial(f, &mut data, m, width, n);
        let rank = pivots.len();
        let dim = m - rank;
        if dim == 0 {
            return Ok((0, None));
        }

        // rows with a zero left block hold kernel combinations; apply the
        // first-basis coefficients to recover intersection vectors
        let mut vecs = Vec::with_capacity(dim);
        for r in rank..m {
            let combo = &data[r * width + n..(r + 1) * width];
            let mut v = vec![0u8; n];
            for (i, &c) in combo[..ka].iter().enumerate() {
                if c != 0 {
                    let row = self.row(i);
                    for j in 0..n {
                        v[j] = f.add_idx(v[j], f.mul_idx(c, row[j]));
                    }
                }
            }
            vecs.push(v);
        }
        let flat: Vec<u8> = vecs.concat();
        let sub = canonicalize_rows(self.q, n, flat)?;
        debug_assert_eq!(sub.dim(), dim);
        Ok((dim, Some(sub)))
    }

    /// dim(X intersect Y) alone.
    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum_dim(other)?)
    }

    /// Orthogonal complement under the standard dot product.
    /// Errors with `ZeroSubspace` when the input is the full space.
    pub fn orthocomplement(&self) -> Result<Subspace> {
        let n = self.n as usize;
        let k = self.dim();
        if k == n {
            return Err(Error::ZeroSubspace);
        }
        let f = field(self.q)?;
        let free: Vec<usize> = (0..n)
            .filter(|&c| !self.pivots.contains(&(c as u16)))
            .collect();
        let mut rows = Vec::with_capacity(free.len() * n);
        for &fc in &free {
            let mut y = vec![0u8; n];
            y[fc] = 1;
            for (r, &p) in self.pivots.iter().enumerate() {
                y[p as usize] = f.neg_idx(self.entries[r * n + fc]);
            }
            rows.extend_from_slice(&y);
        }
        let sub = canonicalize_rows(self.q, n, rows)?;
        debug_assert_eq!(sub.dim(), n - k);
        Ok(sub)
    }

    /// One canonical text line per basis row, entries as digit characters.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() + self.dim());
        for r in 0..self.dim() {
            if r > 0 {
                out.push('\n');
            }
            for &e in self.row(r) {
                out.push(digit_char(e));
            }
        }
        out
    }

    /// Single-line form: basis rows joined by spaces. Used in label sidecars
    /// and reports.
    pub fn to_line(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() + self.dim());
        for r in 0..self.dim() {
            if r > 0 {
                out.push(' ');
            }
            for &e in self.row(r) {
                out.push(digit_char(e));
            }
        }
        out
    }

    /// Parses the output of `to_text` or `to_line`.
    pub fn from_text(q: u16, text: &str) -> Result<Subspace> {
        let rows: Vec<Vec<u8>> = text
            .split(['\n', ' '])
            .filter(|s| !s.is_empty())
            .map(|line| line.chars().map(char_digit).collect::<Result<Vec<u8>>>())
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::ZeroSubspace);
        }
        Subspace::span(q, &rows)
    }
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt.write_str(&self.to_line())
    }
}

fn digit_char(e: u8) -> char {
    if e < 10 {
        (b'0' + e) as char
    } else {
        (b'a' + e - 10) as char
    }
}

fn char_digit(ch: char) -> Result<u8> {
    match ch {
        '0'..='9' => Ok(ch as u8 - b'0'),
        'a'..='z' => Ok(ch as u8 - b'a' + 10),
        _ => Err(Error::invalid(format!("invalid digit character {ch:?}"))),
    }
}

/// Gaussian elimination to reduced row echelon form; zero rows are dropped.
/// Errors with `ZeroSubspace` when the rank is zero.
pub fn canonicalize(m: &Matrix) -> Result<Subspace> {
    canonicalize_rows(m.q, m.cols, m.data.clone())
}

pub(crate) fn canonicalize_rows(q: u16, n: usize, mut data: Vec<u8>) -> Result<Subspace> {
    debug_assert_eq!(data.len() % n.max(1), 0);
    let rows = data.len() / n;
    let pivots = if q == 2 && n <= 64 {
        let mut words: Vec<u64> = (0..rows)
            .map(|r| pack_row(&data[r * n..(r + 1) * n]))
            .collect();
        let pivots = rref_words(&mut words, n);
        data.truncate(words.len() * n);
        for (r, &w) in words.iter().enumerate() {
            unpack_row(w, &mut data[r * n..(r + 1) * n]);
        }
        pivots
    } else {
        let f = field(q)?;
        let pivots = rref_bytes_partial(f, &mut data, rows, n, n);
        data.truncate(pivots.len() * n);
        pivots
    };
    if pivots.is_empty() {
        return Err(Error::ZeroSubspace);
    }
    Ok(Subspace::from_rref_unchecked(q, n as u16, data, pivots))
}

/// RREF restricted to pivot columns `0..pivot_cols`; returns the pivot list.
/// Pivot rows end up first, in pivot order; remaining rows are zero on the
/// pivot-column block.
fn rref_bytes_partial(
    f: &FieldSpec,
    data: &mut [u8],
    rows: usize,
    width: usize,
    pivot_cols: usize,
) -> Vec<u16> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        let Some(pr) = (r..rows).find(|&i| data[i * width + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..width {
                data.swap(r * width + j, pr * width + j);
            }
        }
        let inv = f.inv_idx(data[r * width + c]);
        if inv != 1 {
            for j in 0..width {
                data[r * width + j] = f.mul_idx(data[r * width + j], inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * width + c];
            if factor != 0 {
                for j in 0..width {
                    let sub = f.mul_idx(factor, data[r * width + j]);
                    data[i * width + j] = f.sub_idx(data[i * width + j], sub);
                }
            }
        }
        pivots.push(c as u16);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub(crate) fn rank_bytes(f: &FieldSpec, data: &mut [u8], rows: usize, cols: usize) -> usize {
    // forward elimination only
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                data.swap(r * cols + j, pr * cols + j);
            }
        }
        let inv = f.inv_idx(data[r * cols + c]);
        for i in r + 1..rows {
            let factor = data[i * cols + c];
            if factor != 0 {
                let scale = f.mul_idx(factor, inv);
                for j in c..cols {
                    let sub = f.mul_idx(scale, data[r * cols + j]);
                    data[i * cols + j] = f.sub_idx(data[i * cols + j], sub);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

// GF(2) kernels: column j lives at bit j.

#[inline]
pub(crate) fn pack_row(row: &[u8]) -> u64 {
    debug_assert!(row.len() <= 64);
    row.iter()
        .enumerate()
        .fold(0u64, |acc, (j, &e)| acc | ((e as u64 & 1) << j))
}

#[inline]
fn unpack_row(w: u64, out: &mut [u8]) {
    for (j, e) in out.iter_mut().enumerate() {
        *e = ((w >> j) & 1) as u8;
    }
}

pub(crate) fn rref_words(rows: &mut Vec<u64>, cols: usize) -> Vec<u16> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let bit = 1u64 << c;
        let Some(pr) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(c as u16);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let mut v = rows[i];
        for b in rows[..rank].iter() {
            let low = b & b.wrapping_neg();
            if v & low != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            rows[rank] = v;
            // keep basis sorted by lowest set bit so reduction stays valid
            let mut j = rank;
            while j > 0
                && (rows[j - 1] & rows[j - 1].wrapping_neg()) > (rows[j] & rows[j].wrapping_neg())
            {
                rows.swap(j - 1, j);
                j -= 1;
            }
            rank += 1;
        }
    }
    rank
}
