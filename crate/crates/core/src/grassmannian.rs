//! Enumeration of k-dimensional subspaces of GF(q)^n, Gaussian counting,
//! adjacency, and Grassmann distance.
//!
//! The enumeration walks pivot sets in colexicographic order and, within a
//! pivot set, fills the free cells lexicographically (row-major scan, first
//! cell most significant). Every generated basis is already in reduced row
//! echelon form, so the stream needs no canonicalization and its order is
//! reproducible across runs; graph builders use this order for vertex ids.

use crate::error::{Error, Result};
use crate::field::field;
use crate::linalg::Subspace;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Default cap on the number of subspaces any enumeration may touch.
pub const DEFAULT_VERTEX_BUDGET: u64 = 2_000_000;

/// Parameters of a Grassmannian G_k(GF(q)^n).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct GrassmannianParams {
    pub q: u16,
    pub n: u16,
    pub k: u16,
}

impl GrassmannianParams {
    pub fn new(q: u16, n: u16, k: u16) -> Result<GrassmannianParams> {
        field(q)?;
        if n == 0 || k == 0 || k > n {
            return Err(Error::invalid(format!(
                "need 1 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        Ok(GrassmannianParams { q, n, k })
    }

    pub fn vertex_count(&self) -> BigUint {
        gaussian_binomial(self.n as u32, self.k as u32, self.q as u64)
    }
}

/// The Gaussian number [m]_q = (q^m - 1)/(q - 1): the number of 1-dimensional
/// subspaces (and of hyperplanes) of an m-dimensional space.
pub fn gaussian_number(m: u32, q: u64) -> BigUint {
    if m == 0 {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    (q.pow(m) - 1u32) / (q - 1u32)
}

/// The Gaussian binomial coefficient: |G_k(GF(q)^m)|.
pub fn gaussian_binomial(m: u32, k: u32, q: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: the partial product is gauss(m, i+1)
        acc = acc * (q.pow(m - i) - 1u32) / (q.pow(i + 1) - 1u32);
    }
    acc
}

/// Ordinary binomial coefficient, exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All k-element subsets of {0..n-1} in colexicographic order.
fn pivot_sets_colex(n: usize, k: usize) -> Vec<Vec<u16>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in (k - 1)..n {
        for mut s in pivot_sets_colex(m, k - 1) {
            s.push(m as u16);
            out.push(s);
        }
    }
    out
}

/// Streaming enumeration of G_k(GF(q)^n) in canonical order.
#[derive(Debug)]
pub struct SubspaceIter {
    params: GrassmannianParams,
    pivot_sets: Vec<Vec<u16>>,
    set_idx: usize,
    free_cells: Vec<(u16, u16)>,
    vals: Vec<u8>,
    exhausted: bool,
}

impl SubspaceIter {
    fn free_cells_for(pivots: &[u16], n: u16) -> Vec<(u16, u16)> {
        let mut cells = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    cells.push((r as u16, c));
                }
            }
        }
        cells
    }

    fn current(&self) -> Subspace {
        let n = self.params.n as usize;
        let pivots = &self.pivot_sets[self.set_idx];
        let k = pivots.len();
        let mut entries = vec![0u8; k * n];
        for (r, &p) in pivots.iter().enumerate() {
            entries[r * n + p as usize] = 1;
        }
        for (&(r, c), &v) in self.free_cells.iter().zip(&self.vals) {
            entries[r as usize * n + c as usize] = v;
        }
        Subspace::from_rref_unchecked(self.params.q, self.params.n, entries, pivots.clone())
    }

    fn advance(&mut self) {
        let q = self.params.q as u8;
        // odometer over the free cells, rightmost fastest
        for i in (0..self.vals.len()).rev() {
            if self.vals[i] + 1 < q {
                self.vals[i] += 1;
                for v in self.vals[i + 1..].iter_mut() {
                    *v = 0;
                }
                return;
            }
        }
        self.set_idx += 1;
        if self.set_idx == self.pivot_sets.len() {
            self.exhausted = true;
            return;
        }
        self.free_cells = Self::free_cells_for(&self.pivot_sets[self.set_idx], self.params.n);
        self.vals = vec![0; self.free_cells.len()];
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.exhausted {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}

/// Enumerates G_k(GF(q)^n), refusing when the count exceeds `budget`.
pub fn enumerate_grassmannian(params: GrassmannianParams, budget: u64) -> Result<SubspaceIter> {
    let required = params.vertex_count();
    if required > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(enumerate_unchecked(params))
}

pub(crate) fn enumerate_unchecked(params: GrassmannianParams) -> SubspaceIter {
    let pivot_sets = pivot_sets_colex(params.n as usize, params.k as usize);
    let free_cells = SubspaceIter::free_cells_for(&pivot_sets[0], params.n);
    let vals = vec![0; free_cells.len()];
    SubspaceIter {
        params,
        pivot_sets,
        set_idx: 0,
        free_cells,
        vals,
        exhausted: false,
    }
}

fn check_same_dim(x: &Subspace, y: &Subspace) -> Result<()> {
    if x.order_q() != y.order_q() {
        return Err(Error::FieldMismatch(x.order_q(), y.order_q()));
    }
    if x.ambient() != y.ambient() {
        return Err(Error::AmbientMismatch(x.ambient(), y.ambient()));
    }
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    Ok(())
}

/// Two k-dimensional subspaces are adjacent when their intersection has
/// dimension k-1, equivalently their sum has dimension k+1.
pub fn is_adjacent(x: &Subspace, y: &Subspace) -> Result<bool> {
    check_same_dim(x, y)?;
    Ok(x.sum_dim(y)? == x.dim() + 1)
}

/// k - dim(X intersect Y): the path metric of the Grassmann graph.
pub fn grassmann_distance(x: &Subspace, y: &Subspace) -> Result<usize> {
    check_same_dim(x, y)?;
    Ok(x.sum_dim(y)? - x.dim())
}

/// All d-dimensional subspaces of `outer`, via the sub-Grassmannian of its
/// coordinate space.
pub fn subspaces_of(outer: &Subspace, d: usize) -> Result<Vec<Subspace>> {
    let dim = outer.dim();
    if d == 0 || d > dim {
        return Err(Error::invalid(format!(
            "need 1 <= d <= dim, got d = {d}, dim = {dim}"
        )));
    }
    if d == dim {
        return Ok(vec![outer.clone()]);
    }
    let q = outer.order_q();
    let f = field(q)?;
    let n = outer.ambient();
    let params = GrassmannianParams::new(q, dim as u16, d as u16)?;
    let mut out = Vec::new();
    for small in enumerate_unchecked(params) {
        // rows of `small` give coefficients against outer's basis
        let mut rows = vec![0u8; d * n];
        for r in 0..d {
            let coeff = small.row(r);
            for (i, &c) in coeff.iter().enumerate() {
                if c != 0 {
                    let basis_row = outer.row(i);
                    for j in 0..n {
                        rows[r * n + j] = f.add_idx(rows[r * n + j], f.mul_idx(c, basis_row[j]));
                    }
                }
            }
        }
        out.push(crate::linalg::canonicalize_rows(q, n, rows)?);
    }
    Ok(out)
}

/// All d-dimensional subspaces of the ambient space containing `inner`,
/// lifted from the quotient modulo `inner`.
pub fn superspaces_of(inner: &Subspace, d: usize) -> Result<Vec<Subspace>> {
    let dim = inner.dim();
    let n = inner.ambient();
    if d < dim || d > n {
        return Err(Error::invalid(format!(
            "need dim <= d <= n, got d = {d}, dim = {dim}, n = {n}"
        )));
    }
    if d == dim {
        return Ok(vec![inner.clone()]);
    }
    let q = inner.order_q();
    // the unit vectors on non-pivot columns form a transversal of the quotient
    let transversal: Vec<usize> = (0..n)
        .filter(|&c| !inner.pivots().contains(&(c as u16)))
        .collect();
    let m = transversal.len();
    let params = GrassmannianParams::new(q, m as u16, (d - dim) as u16)?;
    let mut out = Vec::new();
    for quot in enumerate_unchecked(params) {
        let mut rows = Vec::with_capacity(d * n);
        for r in 0..quot.dim() {
            let mut row = vec![0u8; n];
            for (t, &col) in transversal.iter().enumerate() {
                row[col] = quot.row(r)[t];
            }
            rows.extend_from_slice(&row);
        }
        for r in inner.rows_iter() {
            rows.extend_from_slice(r);
        }
        out.push(crate::linalg::canonicalize_rows(q, n, rows)?);
    }
    Ok(out)
}

/// The subspaces strictly between `inner` and `outer` (one dimension above
/// `inner`), i.e. the line joining a star and a top when the gap is two.
pub fn between(inner: &Subspace, outer: &Subspace) -> Result<Vec<Subspace>> {
    if inner.order_q() != outer.order_q() {
        return Err(Error::FieldMismatch(inner.order_q(), outer.order_q()));
    }
    if inner.ambient() != outer.ambient() {
        return Err(Error::AmbientMismatch(inner.ambient(), outer.ambient()));
    }
    if !outer.contains_subspace(inner)? {
        return Err(Error::invalid("inner subspace is not contained in outer"));
    }
    let q = inner.order_q();
    let n = inner.ambient();
    // residuals of outer's basis modulo inner span a transversal
    let mut residuals = Vec::new();
    for row in outer.rows_iter() {
        let red = inner.reduce(row)?;
        if red.iter().any(|&e| e != 0) {
            residuals.push(red);
        }
    }
    let trans = Subspace::span(q, &residuals)?;
    let gap = trans.dim();
    debug_assert_eq!(gap, outer.dim() - inner.dim());
    let f = field(q)?;
    let params = GrassmannianParams::new(q, gap as u16, 1)?;
    let mut out = Vec::new();
    for point in enumerate_unchecked(params) {
        let coeff = point.row(0);
        let mut lift = vec![0u8; n];
        for (i, &c) in coeff.iter().enumerate() {
            if c != 0 {
                for j in 0..n {
                    lift[j] = f.add_idx(lift[j], f.mul_idx(c, trans.row(i)[j]));
                }
            }
        }
        let mut rows: Vec<u8> = inner.rows_iter().flat_map(|r| r.to_vec()).collect();
        rows.extend_from_slice(&lift);
        out.push(crate::linalg::canonicalize_rows(q, n, rows)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Brute-force count of 1-dimensional subspaces of GF(q)^m.
    fn count_points_brute(q: u16, m: u32) -> usize {
        let params = GrassmannianParams::new(q, m as u16, 1).unwrap();
        enumerate_unchecked(params).count()
    }

    /// Independent oracle: canonicalize the span of every pair of distinct
    /// nonzero vectors and count distinct results.
    fn count_planes_brute(q: u16, n: usize) -> usize {
        let qn = (q as usize).pow(n as u32);
        let to_vec = |mut v: usize| -> Vec<u8> {
            let mut out = vec![0u8; n];
            for e in out.iter_mut() {
                *e = (v % q as usize) as u8;
                v /= q as usize;
            }
            out
        };
        let mut seen = HashSet::new();
        for a in 1..qn {
            for b in 1..qn {
                if a == b {
                    continue;
                }
                let rows = vec![to_vec(a), to_vec(b)];
                if let Ok(s) = Subspace::span(q, &rows) {
                    if s.dim() == 2 {
                        seen.insert(s);
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn gaussian_number_values() {
        assert_eq!(gaussian_number(3, 2), BigUint::from(7u32));
        assert_eq!(gaussian_number(0, 5), BigUint::zero());
        assert_eq!(gaussian_number(2, 3), BigUint::from(4u32));
        // brute-force confirmation by enumerating points
        assert_eq!(count_points_brute(2, 3), 7);
        assert_eq!(count_points_brute(3, 2), 4);
    }

    /// [m]_q also counts the hyperplanes of an m-dimensional space.
    #[test]
    fn gaussian_number_counts_hyperplanes() {
        for (q, m) in [(2u16, 4u16), (3, 3), (5, 2)] {
            let params = GrassmannianParams::new(q, m, m - 1).unwrap();
            let count = enumerate_unchecked(params).count();
            assert_eq!(BigUint::from(count), gaussian_number(m as u32, q as u64));
        }
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(5, 0, 3), BigUint::one());
        assert_eq!(gaussian_binomial(4, 2, 3), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::zero());
        // oracle: span all pairs of nonzero vectors and dedupe
        assert_eq!(count_planes_brute(2, 4), 35);
        assert_eq!(count_planes_brute(3, 4), 130);
    }

    #[test]
    fn enumeration_order_smallest_case() {
        let params = GrassmannianParams::new(2, 2, 1).unwrap();
        let subs: Vec<Subspace> = enumerate_grassmannian(params, 10).unwrap().collect();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[0].row(0), &[1, 0]);
        assert_eq!(subs[1].row(0), &[1, 1]);
        assert_eq!(subs[2].row(0), &[0, 1]);
    }

    #[test]
    fn enumeration_full_space() {
        let params = GrassmannianParams::new(2, 3, 3).unwrap();
        let subs: Vec<Subspace> = enumerate_unchecked(params).collect();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].dim(), 3);
    }

    /// The canonical sort key must reproduce the enumeration order; graph
    /// builders rely on this to renumber permuted vertex sets.
    #[test]
    fn canon_key_agrees_with_enumeration_order() {
        for (q, n, k) in [(2u16, 5u16, 2u16), (3, 4, 2), (2, 6, 3)] {
            let params = GrassmannianParams::new(q, n, k).unwrap();
            let subs: Vec<Subspace> = enumerate_unchecked(params).collect();
            let mut sorted = subs.clone();
            sorted.sort_by_key(|s| s.canon_key());
            assert_eq!(subs, sorted, "q={q} n={n} k={k}");
        }
    }

    #[test]
    fn enumeration_no_duplicates() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let subs: Vec<Subspace> = enumerate_unchecked(params).collect();
        assert_eq!(subs.len(), 35);
        let set: HashSet<&Subspace> = subs.iter().collect();
        assert_eq!(set.len(), 35);
    }

    #[test]
    fn enumeration_count_matches_formula_on_grid() {
        for q in [2u16, 3, 4] {
            for n in 1..=5u16 {
                for k in 1..=n {
                    let params = GrassmannianParams::new(q, n, k).unwrap();
                    let count = enumerate_unchecked(params).count();
                    assert_eq!(
                        BigUint::from(count),
                        gaussian_binomial(n as u32, k as u32, q as u64),
                        "mismatch at q={q} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_refusal_names_required() {
        let params = GrassmannianParams::new(2, 9, 2).unwrap();
        match enumerate_grassmannian(params, 100) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, BigUint::from(43435u32));
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn adjacency_examples() {
        let x = Subspace::span(2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let y = Subspace::span(2, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        assert!(!is_adjacent(&x, &x).unwrap());
        assert!(is_adjacent(&x, &y).unwrap());

        let p = Subspace::span(2, &[vec![1, 0, 0]]).unwrap();
        assert!(matches!(
            is_adjacent(&x, &p),
            Err(Error::AmbientMismatch(_, _))
        ));
    }

    #[test]
    fn distance_examples() {
        let x = Subspace::span(2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let y = Subspace::span(2, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let z = Subspace::span(2, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert_eq!(grassmann_distance(&x, &x).unwrap(), 0);
        assert_eq!(grassmann_distance(&x, &y).unwrap(), 1);
        assert_eq!(grassmann_distance(&x, &z).unwrap(), 2);
    }

    #[test]
    fn pivot_fill_count_identity() {
        // sum over pivot sets of q^(free cells) equals the Gaussian binomial
        for q in [2u64, 3, 5] {
            for n in 1..=6usize {
                for k in 1..=n {
                    let mut total = BigUint::zero();
                    for pivots in pivot_sets_colex(n, k) {
                        let cells = SubspaceIter::free_cells_for(&pivots, n as u16);
                        total += BigUint::from(q).pow(cells.len() as u32);
                    }
                    assert_eq!(total, gaussian_binomial(n as u32, k as u32, q));
                }
            }
        }
    }

    #[test]
    fn sub_and_superspace_counts() {
        let y = Subspace::span(
            2,
            &[
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 1, 1, 0],
            ],
        )
        .unwrap();
        // G_2 of a 3-dimensional space has [3]_2 = 7 elements
        let subs = subspaces_of(&y, 2).unwrap();
        assert_eq!(subs.len(), 7);
        assert_eq!(
            subs.iter().collect::<HashSet<_>>().len(),
            7,
            "subspaces must be distinct"
        );
        for s in &subs {
            assert!(y.contains_subspace(s).unwrap());
        }

        let x = Subspace::span(2, &[vec![1, 1, 0, 0, 1]]).unwrap();
        // 2-dimensional superspaces of a line in GF(2)^5: [4]_2 = 15
        let sups = superspaces_of(&x, 2).unwrap();
        assert_eq!(sups.len(), 15);
        for s in &sups {
            assert!(s.contains_subspace(&x).unwrap());
        }

        let lines = between(&x, &y);
        assert!(lines.is_err(), "x is not inside y");

        let x2 = Subspace::span(2, &[vec![1, 0, 0, 0, 0]]).unwrap();
        let mids = between(&x2, &y).unwrap();
        assert_eq!(mids.len(), 3, "q+1 subspaces through a gap of two");
        for m in &mids {
            assert!(m.contains_subspace(&x2).unwrap());
            assert!(y.contains_subspace(m).unwrap());
            assert_eq!(m.dim(), 2);
        }
    }
}
