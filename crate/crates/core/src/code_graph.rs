//! Non-degenerate codes, coordinate-hyperplane combinatorics, and the graphs
//! built on them.
//!
//! A linear [n,k]_q code is a k-dimensional subspace of GF(q)^n; it is
//! non-degenerate when no generator matrix has a zero column, i.e. the code
//! lies in no coordinate hyperplane. The full Grassmann graph, its
//! restriction to non-degenerate codes, and the orthocomplement image of the
//! latter (for n = 2k) are all materialized through `GraphHandle`.

use crate::error::{Error, Result};
use crate::field::field;
use crate::grassmannian::{
    binomial, enumerate_grassmannian, gaussian_binomial, subspaces_of, superspaces_of,
    GrassmannianParams,
};
use crate::linalg::{canonicalize_rows, Subspace};
use crate::util::map_indexed;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use std::collections::{HashMap, HashSet, VecDeque};
use std::time::Instant;

/// True iff no coordinate hyperplane contains the subspace, i.e. every column
/// of the RREF basis is nonzero.
pub fn is_nondegenerate(x: &Subspace) -> bool {
    let n = x.ambient();
    (0..n).all(|c| x.rows_iter().any(|row| row[c] != 0))
}

/// Column statistics of a subspace's canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CoordinateProfile {
    /// Number of coordinate hyperplanes containing the subspace (zero columns).
    pub c: usize,
    /// Indices of nonzero columns.
    pub support: Vec<u16>,
    /// Number of nonzero coordinates; only meaningful for 1-dimensional
    /// subspaces, where it is the weight of the spanning vector.
    pub weight: Option<usize>,
}

pub fn coordinate_profile(x: &Subspace) -> CoordinateProfile {
    let n = x.ambient();
    let support: Vec<u16> = (0..n)
        .filter(|&c| x.rows_iter().any(|row| row[c] != 0))
        .map(|c| c as u16)
        .collect();
    let c = n - support.len();
    let weight = (x.dim() == 1).then_some(support.len());
    CoordinateProfile { c, support, weight }
}

/// Number of columns of the RREF basis holding exactly one nonzero entry.
/// Used to steer witness searches toward coordinate-heavy vertices.
pub fn unit_column_count(x: &Subspace) -> usize {
    let n = x.ambient();
    (0..n)
        .filter(|&c| x.rows_iter().filter(|row| row[c] != 0).count() == 1)
        .count()
}

/// The sections of Y by the n coordinate hyperplanes C_i. Requires Y
/// non-degenerate so that every section is a hyperplane of Y.
pub fn coordinate_sections(y: &Subspace) -> Result<Vec<Subspace>> {
    if !is_nondegenerate(y) {
        return Err(Error::DegenerateSubspace);
    }
    let f = field(y.order_q())?;
    let n = y.ambient();
    let k1 = y.dim();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // kernel of the i-th coordinate functional on Y's coefficient space
        let anchor = (0..k1).find(|&r| y.row(r)[i] != 0).expect("nonzero column");
        let anchor_inv = f.inv_idx(y.row(anchor)[i]);
        let mut rows = Vec::with_capacity((k1 - 1) * n);
        for r in 0..k1 {
            if r == anchor {
                continue;
            }
            let factor = f.mul_idx(y.row(r)[i], anchor_inv);
            let mut v = y.row(r).to_vec();
            if factor != 0 {
                for (j, e) in v.iter_mut().enumerate() {
                    *e = f.sub_idx(*e, f.mul_idx(factor, y.row(anchor)[j]));
                }
            }
            rows.extend_from_slice(&v);
        }
        out.push(canonicalize_rows(y.order_q(), n, rows)?);
    }
    Ok(out)
}

/// n(Y): the number of distinct subspaces among the coordinate sections of a
/// non-degenerate (k+1)-dimensional Y. Satisfies k+1 <= n(Y) <= n.
pub fn n_count(y: &Subspace) -> Result<usize> {
    let sections = coordinate_sections(y)?;
    let distinct: HashSet<&Subspace> = sections.iter().collect();
    Ok(distinct.len())
}

/// |C(n,k)_q| by inclusion-exclusion over coordinate subspaces.
pub fn count_codes(n: u32, k: u32, q: u64) -> BigUint {
    let mut acc = BigInt::zero();
    for j in 0..=n.saturating_sub(k) {
        let term = BigInt::from_biguint(
            if j % 2 == 0 { Sign::Plus } else { Sign::Minus },
            binomial(n as u64, j as u64) * gaussian_binomial(n - j, k, q),
        );
        acc += term;
    }
    let (sign, mag) = acc.into_parts();
    assert!(
        sign != Sign::Minus,
        "inclusion-exclusion must be nonnegative"
    );
    mag
}

/// Which vertex set a graph carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphVariant {
    /// All of G_k(GF(q)^n).
    Full,
    /// The non-degenerate codes C(n,k)_q.
    Nondegenerate,
    /// Orthocomplements of C(2k,k)_q members; requires n = 2k.
    DualNondegenerate,
    /// Caller-supplied vertex set and edges.
    Custom,
}

impl GraphVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphVariant::Full => "full",
            GraphVariant::Nondegenerate => "nondeg",
            GraphVariant::DualNondegenerate => "dual-nondeg",
            GraphVariant::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Result<GraphVariant> {
        match s {
            "full" => Ok(GraphVariant::Full),
            "nondeg" => Ok(GraphVariant::Nondegenerate),
            "dual-nondeg" => Ok(GraphVariant::DualNondegenerate),
            "custom" => Ok(GraphVariant::Custom),
            other => Err(Error::invalid(format!("unknown graph variant {other:?}"))),
        }
    }
}

/// A materialized graph: ordered vertices plus sorted adjacency lists.
pub struct GraphHandle {
    params: GrassmannianParams,
    variant: GraphVariant,
    vertices: Vec<Subspace>,
    index: HashMap<Subspace, u32>,
    adj: Vec<Vec<u32>>,
}

impl GraphHandle {
    /// Builds the requested variant. Vertices keep the canonical enumeration
    /// order (the dual variant is sorted back into it), and edges join
    /// adjacent subspaces.
    pub fn build(
        params: GrassmannianParams,
        variant: GraphVariant,
        budget: u64,
        jobs: usize,
    ) -> Result<GraphHandle> {
        let vertices: Vec<Subspace> = match variant {
            GraphVariant::Full => enumerate_grassmannian(params, budget)?.collect(),
            GraphVariant::Nondegenerate => enumerate_grassmannian(params, budget)?
                .filter(is_nondegenerate)
                .collect(),
            GraphVariant::DualNondegenerate => {
                if params.n != 2 * params.k {
                    return Err(Error::invalid(format!(
                        "dual-nondeg requires n = 2k, got n = {}, k = {}",
                        params.n, params.k
                    )));
                }
                let mut perps = enumerate_grassmannian(params, budget)?
                    .filter(is_nondegenerate)
                    .map(|x| x.orthocomplement())
                    .collect::<Result<Vec<Subspace>>>()?;
                perps.sort_by_key(|a| a.canon_key());
                perps
            }
            GraphVariant::Custom => {
                return Err(Error::invalid("custom graphs are built with from_parts"));
            }
        };
        Self::with_computed_edges(params, variant, vertices, jobs)
    }

    fn with_computed_edges(
        params: GrassmannianParams,
        variant: GraphVariant,
        vertices: Vec<Subspace>,
        jobs: usize,
    ) -> Result<GraphHandle> {
        let index: HashMap<Subspace, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect();
        if index.len() != vertices.len() {
            return Err(Error::invalid("duplicate vertices"));
        }
        let k = params.k as usize;
        let adj: Vec<Vec<u32>> = if k == 1 || vertices.len() <= 1 {
            // any two distinct subspaces of the same dimension are adjacent
            // in the complete regime k = 1; n = k gives a single vertex
            let all: Vec<u32> = (0..vertices.len() as u32).collect();
            (0..vertices.len())
                .map(|i| {
                    let mut row = all.clone();
                    row.remove(i);
                    row
                })
                .collect()
        } else {
            map_indexed(vertices.len(), jobs, |i| {
                let x = &vertices[i];
                let mut neigh = Vec::new();
                for w in subspaces_of(x, k - 1).expect("hyperplanes of a vertex") {
                    for z in superspaces_of(&w, k).expect("extensions of a hyperplane") {
                        if let Some(&j) = index.get(&z) {
                            if j != i as u32 {
                                neigh.push(j);
                            }
                        }
                    }
                }
                neigh.sort_unstable();
                neigh.dedup();
                neigh
            })
        };
        Ok(GraphHandle {
            params,
            variant,
            vertices,
            index,
            adj,
        })
    }

    /// A graph with explicit vertices and edges (no self-loops; edges are
    /// stored symmetrically). Used for pulled-back edge sets that are not
    /// induced by adjacency.
    pub fn from_parts(
        params: GrassmannianParams,
        vertices: Vec<Subspace>,
        edges: &[(u32, u32)],
    ) -> Result<GraphHandle> {
        let index: HashMap<Subspace, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect();
        if index.len() != vertices.len() {
            return Err(Error::invalid("duplicate vertices"));
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::invalid("self-loops are not allowed"));
            }
            if a as usize >= vertices.len() || b as usize >= vertices.len() {
                return Err(Error::invalid("edge endpoint out of range"));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
        }
        Ok(GraphHandle {
            params,
            variant: GraphVariant::Custom,
            vertices,
            index,
            adj,
        })
    }

    pub fn params(&self) -> GrassmannianParams {
        self.params
    }

    pub fn variant(&self) -> GraphVariant {
        self.variant
    }

    /// k = 1 and k = n-1 make the Grassmann graph complete; reports flag
    /// these because the clique taxonomy degenerates there.
    pub fn is_complete_regime(&self) -> bool {
        self.params.k == 1 || self.params.k + 1 == self.params.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Subspace] {
        &self.vertices
    }

    pub fn vertex(&self, i: u32) -> &Subspace {
        &self.vertices[i as usize]
    }

    pub fn index_of(&self, s: &Subspace) -> Option<u32> {
        self.index.get(s).copied()
    }

    pub fn neighbors(&self, i: u32) -> &[u32] {
        &self.adj[i as usize]
    }

    pub fn degree(&self, i: u32) -> usize {
        self.adj[i as usize].len()
    }

    pub fn is_edge(&self, i: u32, j: u32) -> bool {
        self.adj[i as usize].binary_search(&j).is_ok()
    }

    /// BFS distances from `src`; unreachable vertices get u32::MAX.
    pub fn bfs(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertices.len()];
        dist[src as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize] + 1;
            for &w in &self.adj[v as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertices.len()];
        let mut components = 0;
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::new();
            seen[start] = true;
            queue.push_back(start as u32);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }
}

/// A pair whose path distance in the subgraph exceeds its Grassmann distance.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DistanceWitness {
    pub a: String,
    pub b: String,
    pub path_distance: Option<u32>,
    pub grassmann_distance: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct DistanceReport {
    /// No pair with path distance above Grassmann distance was found.
    pub coincides: bool,
    /// All BFS sources were scanned; only then is `coincides` conclusive.
    pub sources_exhausted: bool,
    pub sources_scanned: usize,
    pub witness: Option<DistanceWitness>,
}

/// Full-graph threshold: up to this many vertices every vertex serves as a
/// BFS source; beyond it the capped, guided source order is a witness search.
pub const DISTANCE_FULL_SCAN_LIMIT: usize = 5000;

/// Compares BFS path distance against the Grassmann distance from every
/// source (or a guided subset on very large graphs). Sources are ordered by
/// descending unit-column count, which reaches coordinate-heavy bottleneck
/// vertices first.
pub fn distance_coincidence(
    g: &GraphHandle,
    source_cap: Option<usize>,
    time_budget_secs: Option<u64>,
) -> Result<DistanceReport> {
    let nv = g.vertex_count();
    let k = g.params().k as usize;
    let mut order: Vec<u32> = (0..nv as u32).collect();
    let guide: Vec<usize> = g.vertices().iter().map(unit_column_count).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(guide[i as usize]));

    let cap = source_cap.unwrap_or(if nv > DISTANCE_FULL_SCAN_LIMIT {
        DISTANCE_FULL_SCAN_LIMIT
    } else {
        nv
    });
    let start = Instant::now();
    let mut scanned = 0usize;
    for &src in order.iter().take(cap) {
        if let Some(limit) = time_budget_secs {
            if start.elapsed().as_secs() >= limit {
                return Err(Error::TimeBudget {
                    limit_secs: limit,
                    context: "distance coincidence scan",
                });
            }
        }
        let dist = g.bfs(src);
        scanned += 1;
        for t in 0..nv as u32 {
            if t == src {
                continue;
            }
            let d_grass = if k == 2 {
                // k = 2 pairs are at Grassmann distance 1 exactly when they
                // share an edge, which BFS already reflects; only distance-2
                // pairs need checking
                if g.is_edge(src, t) {
                    continue;
                }
                2
            } else {
                crate::grassmannian::grassmann_distance(g.vertex(src), g.vertex(t))? as u32
            };
            let d_path = dist[t as usize];
            if d_path > d_grass {
                return Ok(DistanceReport {
                    coincides: false,
                    sources_exhausted: false,
                    sources_scanned: scanned,
                    witness: Some(DistanceWitness {
                        a: g.vertex(src).to_line(),
                        b: g.vertex(t).to_line(),
                        path_distance: (d_path != u32::MAX).then_some(d_path),
                        grassmann_distance: d_grass,
                    }),
                });
            }
        }
    }
    Ok(DistanceReport {
        coincides: true,
        sources_exhausted: scanned == nv,
        sources_scanned: scanned,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmannian::{enumerate_unchecked, is_adjacent};

    fn sp(q: u16, rows: &[&[u8]]) -> Subspace {
        let owned: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        Subspace::span(q, &owned).unwrap()
    }

    #[test]
    fn nondegeneracy_examples() {
        assert!(is_nondegenerate(&sp(2, &[&[1, 1, 1, 1]])));
        assert!(!is_nondegenerate(&sp(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])));
    }

    #[test]
    fn nondeg_filter_matches_inclusion_exclusion() {
        for (q, n, k) in [
            (2u16, 4u16, 2u16),
            (2, 5, 2),
            (3, 4, 2),
            (2, 5, 3),
            (3, 5, 3),
        ] {
            let params = GrassmannianParams::new(q, n, k).unwrap();
            let filtered = enumerate_unchecked(params).filter(is_nondegenerate).count();
            assert_eq!(
                BigUint::from(filtered),
                count_codes(n as u32, k as u32, q as u64),
                "mismatch at q={q} n={n} k={k}"
            );
        }
    }

    #[test]
    fn count_codes_values() {
        assert_eq!(count_codes(4, 2, 2), BigUint::from(13u32));
        assert_eq!(count_codes(5, 5, 3), BigUint::from(1u32));
        for n in [4u32, 5, 6] {
            assert_eq!(
                count_codes(n, 1, 2),
                BigUint::from(1u32),
                "C(n,1)_2 is a single code"
            );
        }
    }

    #[test]
    fn coordinate_profile_examples() {
        let all_ones = sp(2, &[&[1, 1, 1, 1, 1]]);
        let p = coordinate_profile(&all_ones);
        assert_eq!((p.c, p.weight), (0, Some(5)));

        let e1 = sp(2, &[&[1, 0, 0, 0]]);
        let p = coordinate_profile(&e1);
        assert_eq!((p.c, p.weight), (3, Some(1)));

        let v = sp(2, &[&[0, 0, 1, 1, 1]]);
        let p = coordinate_profile(&v);
        assert_eq!((p.c, p.weight), (2, Some(3)));
        assert_eq!(p.support, vec![2, 3, 4]);
    }

    /// Non-degeneracy and a zero coordinate profile are the same predicate.
    #[test]
    fn nondegeneracy_matches_profile() {
        for (q, n, k) in [(2u16, 5u16, 2u16), (3, 4, 2), (2, 4, 3)] {
            let params = GrassmannianParams::new(q, n, k).unwrap();
            for x in enumerate_unchecked(params) {
                assert_eq!(is_nondegenerate(&x), coordinate_profile(&x).c == 0);
            }
        }
    }

    #[test]
    fn weight_and_c_are_consistent_for_points() {
        // for 1-dimensional subspaces, weight >= 3 iff c <= n-3
        let params = GrassmannianParams::new(2, 6, 1).unwrap();
        for p in enumerate_unchecked(params) {
            let prof = coordinate_profile(&p);
            assert_eq!(prof.weight.unwrap() >= 3, prof.c <= 6 - 3);
        }
    }

    #[test]
    fn n_count_full_space() {
        let y = sp(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(n_count(&y).unwrap(), 3);
    }

    #[test]
    fn n_count_with_coincident_sections() {
        // Y = {x : x_1 = x_2} in GF(2)^4 glues the first two sections
        let y = sp(2, &[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(is_nondegenerate(&y));
        let sections = coordinate_sections(&y).unwrap();
        assert_eq!(sections[0], sections[1]);
        assert_eq!(n_count(&y).unwrap(), 3);
        // bounds k+1 <= n(Y) <= n with k+1 = 3
        assert!(n_count(&y).unwrap() >= 3);
    }

    #[test]
    fn n_count_rejects_degenerate() {
        let y = sp(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(matches!(n_count(&y), Err(Error::DegenerateSubspace)));
    }

    #[test]
    fn full_graph_regular_and_oracle_edges() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Full, 10_000, 1).unwrap();
        assert_eq!(g.vertex_count(), 35);
        // degree q*[k]_q*[n-k]_q = 2*3*3 = 18
        for i in 0..g.vertex_count() as u32 {
            assert_eq!(g.degree(i), 18);
        }
        // oracle: brute-force pairwise adjacency scan
        let mut edges = 0;
        for i in 0..g.vertex_count() {
            for j in i + 1..g.vertex_count() {
                let adjacent = is_adjacent(&g.vertices()[i], &g.vertices()[j]).unwrap();
                assert_eq!(adjacent, g.is_edge(i as u32, j as u32));
                edges += usize::from(adjacent);
            }
        }
        assert_eq!(g.edge_count(), edges);
    }

    /// Regularity of the full Grassmann graph: degree q*[k]_q*[n-k]_q.
    #[test]
    fn full_graph_degree_regularity_on_grid() {
        for (q, n, k) in [(2u16, 4u16, 2u16), (3, 4, 2), (2, 5, 2), (2, 5, 3)] {
            let params = GrassmannianParams::new(q, n, k).unwrap();
            let g = GraphHandle::build(params, GraphVariant::Full, 10_000, 1).unwrap();
            let expected = BigUint::from(q as u64)
                * crate::grassmannian::gaussian_number(k as u32, q as u64)
                * crate::grassmannian::gaussian_number((n - k) as u32, q as u64);
            for i in 0..g.vertex_count() as u32 {
                assert_eq!(BigUint::from(g.degree(i)), expected, "q={q} n={n} k={k}");
            }
        }
    }

    #[test]
    fn nondeg_graph_has_thirteen_vertices() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 1).unwrap();
        assert_eq!(g.vertex_count(), 13);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn dual_graph_isomorphic_via_orthocomplement() {
        let params = GrassmannianParams::new(2, 4, 2).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 1).unwrap();
        let d = GraphHandle::build(params, GraphVariant::DualNondegenerate, 10_000, 1).unwrap();
        assert_eq!(d.vertex_count(), 13);
        for i in 0..g.vertex_count() as u32 {
            let img = g.vertex(i).orthocomplement().unwrap();
            let j = d.index_of(&img).expect("perp is a dual vertex");
            let mut mapped: Vec<u32> = g
                .neighbors(i)
                .iter()
                .map(|&w| d.index_of(&g.vertex(w).orthocomplement().unwrap()).unwrap())
                .collect();
            mapped.sort_unstable();
            assert_eq!(mapped, d.neighbors(j));
        }
    }

    #[test]
    fn dual_variant_requires_even_split() {
        let params = GrassmannianParams::new(2, 5, 2).unwrap();
        let err = GraphHandle::build(params, GraphVariant::DualNondegenerate, 10_000, 1);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn single_vertex_graph_is_connected() {
        let params = GrassmannianParams::new(2, 3, 3).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Full, 10, 1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn bfs_matches_grassmann_distance_on_full_graph() {
        for (q, n, k) in [(2u16, 4u16, 2u16), (3, 4, 2), (2, 5, 2), (2, 5, 3)] {
            let params = GrassmannianParams::new(q, n, k).unwrap();
            let g = GraphHandle::build(params, GraphVariant::Full, 10_000, 1).unwrap();
            for s in 0..g.vertex_count() as u32 {
                let dist = g.bfs(s);
                for t in 0..g.vertex_count() as u32 {
                    let expected = crate::grassmannian::grassmann_distance(g.vertex(s), g.vertex(t))
                        .unwrap() as u32;
                    assert_eq!(dist[t as usize], expected);
                }
            }
        }
    }

    /// the larger grid points with at most 2000 vertices, forward-checked
    /// from every source
    #[test]
    fn bfs_matches_grassmann_distance_midsize() {
        let params = GrassmannianParams::new(2, 6, 3).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Full, 10_000, 1).unwrap();
        assert_eq!(g.vertex_count(), 1395);
        for s in (0..g.vertex_count() as u32).step_by(7) {
            let dist = g.bfs(s);
            for t in 0..g.vertex_count() as u32 {
                let expected = crate::grassmannian::grassmann_distance(g.vertex(s), g.vertex(t))
                    .unwrap() as u32;
                assert_eq!(dist[t as usize], expected);
            }
        }
    }

    #[test]
    fn graph_build_independent_of_jobs() {
        let params = GrassmannianParams::new(2, 5, 2).unwrap();
        let a = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 1).unwrap();
        let b = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 4).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        for i in 0..a.vertex_count() as u32 {
            assert_eq!(a.neighbors(i), b.neighbors(i));
        }
    }

    #[test]
    fn distance_coincides_below_threshold() {
        let params = GrassmannianParams::new(2, 5, 2).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Nondegenerate, 10_000, 1).unwrap();
        let report = distance_coincidence(&g, None, None).unwrap();
        assert!(report.coincides);
        assert!(report.sources_exhausted);
        assert!(report.witness.is_none());
    }

    #[test]
    fn complete_regime_flag() {
        let params = GrassmannianParams::new(2, 4, 1).unwrap();
        let g = GraphHandle::build(params, GraphVariant::Full, 100, 1).unwrap();
        assert!(g.is_complete_regime());
        assert_eq!(g.vertex_count(), 15);
        for i in 0..15u32 {
            assert_eq!(g.degree(i), 14);
        }
    }
}
