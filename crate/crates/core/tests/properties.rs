//! Property tests over randomized inputs: canonical-form invariants, the
//! modular law, orthocomplement involution, and serialization round-trips.

use grasscode_core::code_graph::GraphHandle;
use grasscode_core::export::{parse_graph6, to_graph6};
use grasscode_core::field::field;
use grasscode_core::grassmannian::{enumerate_grassmannian, GrassmannianParams};
use grasscode_core::linalg::Subspace;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORDERS: [u16; 5] = [2, 3, 4, 5, 9];

fn rows_strategy() -> impl Strategy<Value = (u16, Vec<Vec<u8>>)> {
    (0usize..ORDERS.len(), 1usize..6, 1usize..5).prop_flat_map(|(qi, n, k)| {
        let q = ORDERS[qi];
        proptest::collection::vec(proptest::collection::vec(0u8..q as u8, n), k)
            .prop_map(move |rows| (q, rows))
    })
}

proptest! {
    /// Canonical forms are constant on row-operation orbits.
    #[test]
    fn canonical_form_orbit_invariance((q, rows) in rows_strategy(), seed: u64) {
        prop_assume!(rows.iter().any(|r| r.iter().any(|&e| e != 0)));
        let original = Subspace::span(q, &rows).unwrap();

        let f = field(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut scrambled = rows.clone();
        let k = scrambled.len();
        let n = scrambled[0].len();
        for _ in 0..25 {
            match rng.gen_range(0..3u8) {
                0 => {
                    let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
                    scrambled.swap(i, j);
                }
                1 => {
                    let i = rng.gen_range(0..k);
                    let s = rng.gen_range(1..q) as u8;
                    for e in scrambled[i].iter_mut() {
                        *e = f.mul_idx(*e, s);
                    }
                }
                _ => {
                    let i = rng.gen_range(0..k);
                    let j = rng.gen_range(0..k);
                    if i != j {
                        let s = rng.gen_range(0..q) as u8;
                        for c in 0..n {
                            let add = f.mul_idx(s, scrambled[j][c]);
                            scrambled[i][c] = f.add_idx(scrambled[i][c], add);
                        }
                    }
                }
            }
        }
        // row operations of the kinds above never shrink the row space below
        // the original span only if a scaling/addition zeroed rows; the span
        // itself is unchanged, so the canonical forms must agree
        let rescrambled = Subspace::span(q, &scrambled).unwrap();
        prop_assert_eq!(original, rescrambled);
    }

    /// dim(X+Y) + dim(X meet Y) = dim X + dim Y.
    #[test]
    fn modular_law((q, rows_a) in rows_strategy(), rows_b_raw in proptest::collection::vec(proptest::collection::vec(0u8..9u8, 1..6), 1..5)) {
        prop_assume!(rows_a.iter().any(|r| r.iter().any(|&e| e != 0)));
        let n = rows_a[0].len();
        let rows_b: Vec<Vec<u8>> = rows_b_raw
            .iter()
            .map(|r| (0..n).map(|c| r.get(c).copied().unwrap_or(0) % q as u8).collect())
            .collect();
        prop_assume!(rows_b.iter().any(|r| r.iter().any(|&e| e != 0)));
        let x = Subspace::span(q, &rows_a).unwrap();
        let y = Subspace::span(q, &rows_b).unwrap();
        let s = x.sum_dim(&y).unwrap();
        let m = x.intersect_dim(&y).unwrap();
        prop_assert_eq!(s + m, x.dim() + y.dim());

        // the materialized intersection agrees with the dimension count
        let (dim, sub) = x.intersect(&y).unwrap();
        prop_assert_eq!(dim, m);
        if let Some(sub) = sub {
            prop_assert!(x.contains_subspace(&sub).unwrap());
            prop_assert!(y.contains_subspace(&sub).unwrap());
        }
    }

    /// Orthocomplement is a dimension-complementing involution; the full
    /// space has no representable complement.
    #[test]
    fn orthocomplement_involution((q, rows) in rows_strategy()) {
        prop_assume!(rows.iter().any(|r| r.iter().any(|&e| e != 0)));
        let x = Subspace::span(q, &rows).unwrap();
        match x.orthocomplement() {
            Ok(perp) => {
                prop_assert!(x.dim() < x.ambient());
                prop_assert_eq!(perp.dim(), x.ambient() - x.dim());
                prop_assert_eq!(perp.orthocomplement().unwrap(), x);
            }
            Err(grasscode_core::Error::ZeroSubspace) => {
                prop_assert_eq!(x.dim(), x.ambient());
            }
            Err(other) => prop_assert!(false, "unexpected error {other:?}"),
        }
    }

    /// Text serialization round-trips through both the multi-line and
    /// single-line forms.
    #[test]
    fn text_round_trip((q, rows) in rows_strategy()) {
        prop_assume!(rows.iter().any(|r| r.iter().any(|&e| e != 0)));
        let x = Subspace::span(q, &rows).unwrap();
        prop_assert_eq!(&Subspace::from_text(q, &x.to_text()).unwrap(), &x);
        prop_assert_eq!(&Subspace::from_text(q, &x.to_line()).unwrap(), &x);
    }

    /// graph6 encoding round-trips the edge set of arbitrary small graphs.
    #[test]
    fn graph6_round_trip(n in 1usize..40, seed: u64) {
        let params = GrassmannianParams::new(2, 6, 2).unwrap();
        let vertices: Vec<Subspace> = enumerate_grassmannian(params, 1000)
            .unwrap()
            .take(n)
            .collect();
        prop_assume!(vertices.len() == n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for i in 0..n as u32 {
            for j in i + 1..n as u32 {
                if rng.gen_bool(0.3) {
                    edges.push((i, j));
                }
            }
        }
        let g = GraphHandle::from_parts(params, vertices, &edges).unwrap();
        let enc = to_graph6(&g).unwrap();
        let (parsed_n, mut parsed_edges) = parse_graph6(&enc).unwrap();
        parsed_edges.sort_unstable();
        edges.sort_unstable();
        prop_assert_eq!(parsed_n, n);
        prop_assert_eq!(parsed_edges, edges);
    }
}
