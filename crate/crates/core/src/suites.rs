//! Verification suites: each one turns a quantitative claim into an
//! exhaustive instance check and reports pass/fail with counterexamples.
//!
//! Reports serialize to JSON with struct-order keys, and every randomized
//! suite records its seed, so identical configurations yield byte-identical
//! output.

use crate::cliques::{
    check_star_maximality, check_top_maximality, maximal_clique_census, restricted_star_size, star,
    top, CensusReport, StarMaximalityReport, TopMaximalityReport,
};
use crate::code_graph::{
    coordinate_profile, count_codes, distance_coincidence, is_nondegenerate, n_count,
    DistanceReport, GraphHandle, GraphVariant,
};
use crate::error::{Error, Result};
use crate::field::field;
use crate::grassmannian::{
    enumerate_grassmannian, gaussian_binomial, gaussian_number, superspaces_of, GrassmannianParams,
};
use crate::linalg::Subspace;
use crate::maps::{
    orthocomplement_check, verify_automorphism, verify_fold_counterexample, FoldReport,
    MonomialMap, OrthocomplementReport,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Default vertex budget for suite runs; sized so the largest counting-grid
/// instance (q=5, n=6, k=3 with 2,558,556 subspaces) fits.
pub const SUITE_VERTEX_BUDGET: u64 = 3_000_000;

/// Cap for the clique census; the default instance list peaks at the 680
/// vertices of the (q=3, n=5, k=2) graph.
pub const SUITE_CENSUS_CAP: usize = 1000;

/// How many random monomial maps the automorphism suite samples per point.
pub const MAP_SAMPLES: usize = 50;

/// All-pairs cap for the orthocomplement adjacency scan.
pub const ORTHO_PAIR_CAP: usize = 2000;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Restrict a suite to a single (q, n, k) point instead of its grid.
    pub point: Option<GrassmannianParams>,
    pub budget: u64,
    pub census_cap: usize,
    pub seed: u64,
    pub jobs: usize,
    /// Adds the long-running distance witness case (q=2, n=9, k=2).
    pub long: bool,
    pub time_budget_secs: Option<u64>,
    pub map_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            point: None,
            budget: SUITE_VERTEX_BUDGET,
            census_cap: SUITE_CENSUS_CAP,
            seed: 0,
            jobs: 1,
            long: false,
            time_budget_secs: None,
            map_samples: MAP_SAMPLES,
        }
    }
}

/// The grid every structural suite sweeps: q in {2,3}, 4 <= n <= 6,
/// 1 < k < n-1.
pub fn default_grid() -> Vec<GrassmannianParams> {
    let mut out = Vec::new();
    for q in [2u16, 3] {
        for n in 4u16..=6 {
            for k in 2..=n - 2 {
                out.push(GrassmannianParams::new(q, n, k).unwrap());
            }
        }
    }
    out
}

/// The counting grid: q in {2,3,4,5}, n <= 6, every k.
pub fn counting_grid() -> Vec<GrassmannianParams> {
    let mut out = Vec::new();
    for q in [2u16, 3, 4, 5] {
        for n in 1u16..=6 {
            for k in 1..=n {
                out.push(GrassmannianParams::new(q, n, k).unwrap());
            }
        }
    }
    out
}

fn grid_or_point(cfg: &SuiteConfig, restrict: bool) -> Result<Vec<GrassmannianParams>> {
    match cfg.point {
        Some(p) => {
            if restrict && (p.k < 2 || p.k + 1 >= p.n) {
                return Err(Error::invalid(format!(
                    "suite requires 1 < k < n-1, got n = {}, k = {}",
                    p.n, p.k
                )));
            }
            Ok(vec![p])
        }
        None => Ok(if restrict {
            default_grid()
        } else {
            counting_grid()
        }),
    }
}

#[derive(Serialize)]
struct SuiteReport<D: Serialize> {
    suite: &'static str,
    claim: &'static str,
    status: &'static str,
    seed: Option<u64>,
    details: D,
}

/// One executed suite: its name, verdict, and rendered JSON report.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub json: String,
}

fn outcome<D: Serialize>(
    name: &'static str,
    claim: &'static str,
    seed: Option<u64>,
    passed: bool,
    details: D,
) -> SuiteOutcome {
    let report = SuiteReport {
        suite: name,
        claim,
        status: if passed { "pass" } else { "fail" },
        seed,
        details,
    };
    SuiteOutcome {
        name,
        passed,
        json: serde_json::to_string_pretty(&report).expect("report serialization"),
    }
}

// ---------------------------------------------------------------------------
// counts
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CountCheck {
    q: u16,
    n: u16,
    k: u16,
    expected: String,
    counted: u64,
    ok: bool,
}

#[derive(Serialize)]
struct CountsDetails {
    gaussian_checks: Vec<CountCheck>,
    nondeg_checks: Vec<CountCheck>,
}

pub fn counts_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, false)?;
    let mut gaussian_checks = Vec::new();
    for p in &grid {
        let expected = gaussian_binomial(p.n as u32, p.k as u32, p.q as u64);
        let counted = enumerate_grassmannian(*p, cfg.budget)?.count() as u64;
        gaussian_checks.push(CountCheck {
            q: p.q,
            n: p.n,
            k: p.k,
            expected: expected.to_string(),
            counted,
            ok: BigUint::from(counted) == expected,
        });
    }

    // non-degenerate counts: filter enumeration against inclusion-exclusion
    let mut nondeg_grid: Vec<GrassmannianParams> = Vec::new();
    match cfg.point {
        Some(p) => nondeg_grid.push(p),
        None => {
            for q in [2u16, 3] {
                for n in 1u16..=6 {
                    for k in 1..=n {
                        nondeg_grid.push(GrassmannianParams::new(q, n, k).unwrap());
                    }
                }
            }
        }
    }
    let mut nondeg_checks = Vec::new();
    for p in &nondeg_grid {
        let expected = count_codes(p.n as u32, p.k as u32, p.q as u64);
        let counted = enumerate_grassmannian(*p, cfg.budget)?
            .filter(is_nondegenerate)
            .count() as u64;
        nondeg_checks.push(CountCheck {
            q: p.q,
            n: p.n,
            k: p.k,
            expected: expected.to_string(),
            counted,
            ok: BigUint::from(counted) == expected,
        });
    }

    let passed = gaussian_checks.iter().all(|c| c.ok) && nondeg_checks.iter().all(|c| c.ok);
    Ok(outcome(
        "counts",
        "subspace enumeration counts equal the Gaussian binomial, and non-degenerate code counts \
         equal the inclusion-exclusion closed form",
        None,
        passed,
        CountsDetails {
            gaussian_checks,
            nondeg_checks,
        },
    ))
}

// ---------------------------------------------------------------------------
// star-formula (sizes)
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SizeViolation {
    q: u16,
    n: u16,
    k: u16,
    object: String,
    anchor: String,
    expected: String,
    actual: usize,
}

#[derive(Serialize)]
struct SizesPoint {
    q: u16,
    n: u16,
    k: u16,
    star_anchors: usize,
    top_anchors: usize,
    lines_checked: usize,
    restricted_tops_checked: usize,
}

#[derive(Serialize)]
struct SizesDetails {
    points: Vec<SizesPoint>,
    violations: Vec<SizeViolation>,
}

pub fn sizes_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, true)?;
    let mut points = Vec::new();
    let mut violations: Vec<SizeViolation> = Vec::new();

    for p in &grid {
        let (q, n, k) = (p.q, p.n as usize, p.k as usize);
        let star_size = gaussian_number((n - k + 1) as u32, q as u64);
        let top_size = gaussian_number((k + 1) as u32, q as u64);
        let mut lines_checked = 0usize;
        let mut restricted_tops = 0usize;

        let low = GrassmannianParams::new(q, p.n, p.k - 1)?;
        let mut star_anchors = 0usize;
        for x in enumerate_grassmannian(low, cfg.budget)? {
            star_anchors += 1;
            let s = star(&x)?;
            if BigUint::from(s.len()) != star_size {
                violations.push(SizeViolation {
                    q,
                    n: p.n,
                    k: p.k,
                    object: "star".into(),
                    anchor: x.to_line(),
                    expected: star_size.to_string(),
                    actual: s.len(),
                });
            }
            let c = coordinate_profile(&x).c;
            let restricted: Vec<&Subspace> =
                s.members.iter().filter(|m| is_nondegenerate(m)).collect();
            let expected_restricted = if c == 0 {
                star_size.clone()
            } else {
                restricted_star_size(c, n, k, q as u64)?
            };
            if BigUint::from(restricted.len()) != expected_restricted {
                violations.push(SizeViolation {
                    q,
                    n: p.n,
                    k: p.k,
                    object: "restricted star".into(),
                    anchor: x.to_line(),
                    expected: expected_restricted.to_string(),
                    actual: restricted.len(),
                });
            }
            // every (k+1)-space over x carries a line of q+1 subspaces
            for y in superspaces_of(&x, k + 1)? {
                lines_checked += 1;
                let members = crate::grassmannian::between(&x, &y)?;
                let distinct: std::collections::HashSet<&Subspace> = members.iter().collect();
                let good = members.len() == q as usize + 1
                    && distinct.len() == members.len()
                    && members.iter().all(|m| {
                        m.contains_subspace(&x).unwrap() && y.contains_subspace(m).unwrap()
                    });
                if !good {
                    violations.push(SizeViolation {
                        q,
                        n: p.n,
                        k: p.k,
                        object: "line".into(),
                        anchor: format!("{x} | {y}"),
                        expected: format!("{}", q + 1),
                        actual: members.len(),
                    });
                }
            }
        }

        let high = GrassmannianParams::new(q, p.n, p.k + 1)?;
        let mut top_anchors = 0usize;
        for y in enumerate_grassmannian(high, cfg.budget)? {
            top_anchors += 1;
            let t = top(&y)?;
            if BigUint::from(t.len()) != top_size {
                violations.push(SizeViolation {
                    q,
                    n: p.n,
                    k: p.k,
                    object: "top".into(),
                    anchor: y.to_line(),
                    expected: top_size.to_string(),
                    actual: t.len(),
                });
            }
            if is_nondegenerate(&y) {
                restricted_tops += 1;
                let ny = n_count(&y)?;
                if !(k < ny && ny <= n) {
                    violations.push(SizeViolation {
                        q,
                        n: p.n,
                        k: p.k,
                        object: "section count bounds".into(),
                        anchor: y.to_line(),
                        expected: format!("{}..={}", k + 1, n),
                        actual: ny,
                    });
                }
                let restricted = t.members.iter().filter(|m| is_nondegenerate(m)).count();
                let expected = top_size.clone() - BigUint::from(ny);
                if BigUint::from(restricted) != expected {
                    violations.push(SizeViolation {
                        q,
                        n: p.n,
                        k: p.k,
                        object: "restricted top".into(),
                        anchor: y.to_line(),
                        expected: expected.to_string(),
                        actual: restricted,
                    });
                }
            }
        }

        points.push(SizesPoint {
            q,
            n: p.n,
            k: p.k,
            star_anchors,
            top_anchors,
            lines_checked,
            restricted_tops_checked: restricted_tops,
        });
    }

    let passed = violations.is_empty();
    Ok(outcome(
        "star-formula",
        "clique sizes match their closed forms: |S(X)| = [n-k+1]_q, |T(Y)| = [k+1]_q, lines hold \
         q+1 subspaces, |S^c(X)| = (q-1)^(c-1) q^(n-k-c+1) when c(X) >= 1, and \
         |T^c(Y)| = [k+1]_q - n(Y)",
        None,
        passed,
        SizesDetails { points, violations },
    ))
}

// ---------------------------------------------------------------------------
// prop-star / prop-top
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct PointReport<D: Serialize> {
    q: u16,
    n: u16,
    k: u16,
    report: D,
}

pub fn star_maximality_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, true)?;
    let mut reports: Vec<PointReport<StarMaximalityReport>> = Vec::new();
    for p in &grid {
        let g = GraphHandle::build(*p, GraphVariant::Nondegenerate, cfg.budget, cfg.jobs)?;
        let report = check_star_maximality(&g, cfg.jobs)?;
        reports.push(PointReport {
            q: p.q,
            n: p.n,
            k: p.k,
            report,
        });
    }
    let passed = reports.iter().all(|r| r.report.passed());
    Ok(outcome(
        "prop-star",
        "restricted stars are maximal cliques for q >= 3; for q = 2 exactly when c(X) <= n-k-1 \
         (with two members at c = n-k and one at c = n-k+1); no maximal restricted star equals a \
         restricted top",
        None,
        passed,
        reports,
    ))
}

pub fn top_maximality_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, true)?;
    let mut reports: Vec<PointReport<TopMaximalityReport>> = Vec::new();
    for p in &grid {
        let g = GraphHandle::build(*p, GraphVariant::Nondegenerate, cfg.budget, cfg.jobs)?;
        let report = check_top_maximality(&g, cfg.jobs)?;
        reports.push(PointReport {
            q: p.q,
            n: p.n,
            k: p.k,
            report,
        });
    }
    let passed = reports.iter().all(|r| r.report.passed());
    Ok(outcome(
        "prop-top",
        "every restricted top is a maximal clique exactly when [k+1]_q - (q+1) > n; when the \
         inequality fails a defective anchor is exhibited",
        None,
        passed,
        reports,
    ))
}

// ---------------------------------------------------------------------------
// connectivity
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ConnectivityPoint {
    q: u16,
    n: u16,
    k: u16,
    vertices: usize,
    components: usize,
}

pub fn connectivity_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, true)?;
    let mut points = Vec::new();
    for p in &grid {
        let g = GraphHandle::build(*p, GraphVariant::Nondegenerate, cfg.budget, cfg.jobs)?;
        points.push(ConnectivityPoint {
            q: p.q,
            n: p.n,
            k: p.k,
            vertices: g.vertex_count(),
            components: g.component_count(),
        });
    }
    let passed = points.iter().all(|p| p.components == 1);
    Ok(outcome(
        "connectivity",
        "the graph of non-degenerate [n,k]_q codes is connected",
        None,
        passed,
        points,
    ))
}

// ---------------------------------------------------------------------------
// distance
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DistancePoint {
    q: u16,
    n: u16,
    k: u16,
    vertices: usize,
    below_threshold: bool,
    expected_coincides: bool,
    report: DistanceReport,
    ok: bool,
}

pub fn distance_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid: Vec<GrassmannianParams> = match cfg.point {
        Some(p) => vec![p],
        None => {
            let mut g: Vec<GrassmannianParams> = (5u16..=8)
                .map(|n| GrassmannianParams::new(2, n, 2).unwrap())
                .collect();
            if cfg.long {
                g.push(GrassmannianParams::new(2, 9, 2).unwrap());
            }
            g
        }
    };
    let mut points = Vec::new();
    for p in &grid {
        let g = GraphHandle::build(*p, GraphVariant::Nondegenerate, cfg.budget, cfg.jobs)?;
        let threshold = (p.q as u32 + 1).pow(2) + p.k as u32 - 2;
        let below = (p.n as u32) < threshold;
        let report = distance_coincidence(&g, None, cfg.time_budget_secs)?;
        let ok = if below {
            report.coincides && report.sources_exhausted
        } else {
            report.witness.is_some()
        };
        points.push(DistancePoint {
            q: p.q,
            n: p.n,
            k: p.k,
            vertices: g.vertex_count(),
            below_threshold: below,
            expected_coincides: below,
            report,
            ok,
        });
    }
    let passed = points.iter().all(|p| p.ok);
    Ok(outcome(
        "distance",
        "path distances in the non-degenerate code graph coincide with Grassmann distances exactly \
         when n < (q+1)^2 + k - 2; above the threshold a pair with strictly larger path distance \
         exists",
        None,
        passed,
        points,
    ))
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

pub fn census_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid: Vec<GrassmannianParams> = match cfg.point {
        Some(p) => {
            if p.k < 2 || p.k + 1 >= p.n {
                return Err(Error::invalid("census requires 1 < k < n-1"));
            }
            vec![p]
        }
        None => vec![
            GrassmannianParams::new(2, 4, 2).unwrap(),
            GrassmannianParams::new(2, 5, 2).unwrap(),
            GrassmannianParams::new(3, 5, 2).unwrap(),
        ],
    };
    let mut reports: Vec<PointReport<CensusReport>> = Vec::new();
    for p in &grid {
        let g = GraphHandle::build(*p, GraphVariant::Nondegenerate, cfg.budget, cfg.jobs)?;
        let report = maximal_clique_census(&g, cfg.census_cap)?;
        reports.push(PointReport {
            q: p.q,
            n: p.n,
            k: p.k,
            report,
        });
    }
    let passed = reports.iter().all(|r| r.report.passed());
    Ok(outcome(
        "census",
        "every maximal clique found by exhaustive enumeration is a maximal restricted star or a \
         maximal restricted top, and vice versa",
        None,
        passed,
        reports,
    ))
}

// ---------------------------------------------------------------------------
// automorphisms
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct AutomorphismPoint {
    q: u16,
    n: u16,
    k: u16,
    vertices: usize,
    maps_checked: usize,
    all_automorphisms: bool,
    first_failure: Option<String>,
}

pub fn automorphism_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, true)?;
    let mut points = Vec::new();
    for p in &grid {
        let g = GraphHandle::build(*p, GraphVariant::Nondegenerate, cfg.budget, cfg.jobs)?;
        let mut rng = ChaCha8Rng::seed_from_u64(
            cfg.seed ^ ((p.q as u64) << 32 | (p.n as u64) << 16 | p.k as u64),
        );
        let mut all = true;
        let mut first_failure = None;
        for _ in 0..cfg.map_samples {
            let map = MonomialMap::random(p.q, p.n as usize, &mut rng)?.to_semilinear(p.q)?;
            let check = verify_automorphism(&map, &g)?;
            if !check.is_automorphism() {
                all = false;
                if first_failure.is_none() {
                    first_failure = Some(format!("{check:?}"));
                }
            }
        }
        points.push(AutomorphismPoint {
            q: p.q,
            n: p.n,
            k: p.k,
            vertices: g.vertex_count(),
            maps_checked: cfg.map_samples,
            all_automorphisms: all,
            first_failure,
        });
    }
    let passed = points.iter().all(|p| p.all_automorphisms);
    Ok(outcome(
        "automorphisms",
        "random monomial semilinear maps act on the non-degenerate code graph as automorphisms: \
         they permute the vertex set and preserve adjacency in both directions",
        Some(cfg.seed),
        passed,
        points,
    ))
}

// ---------------------------------------------------------------------------
// orthocomplement
// ---------------------------------------------------------------------------

pub fn orthocomplement_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let grid = grid_or_point(cfg, true)?;
    let mut reports: Vec<OrthocomplementReport> = Vec::new();
    for p in &grid {
        reports.push(orthocomplement_check(
            *p,
            cfg.budget,
            ORTHO_PAIR_CAP,
            cfg.jobs,
        )?);
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(outcome(
        "orthocomplement",
        "orthocomplementation is an involutive bijection exchanging the k- and (n-k)-Grassmannians \
         and preserving adjacency both ways; for n = 2k it maps the non-degenerate code graph \
         isomorphically onto the dual graph",
        None,
        passed,
        reports,
    ))
}

// ---------------------------------------------------------------------------
// counterexample
// ---------------------------------------------------------------------------

pub fn counterexample_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let ns: Vec<usize> = match cfg.point {
        Some(p) => {
            if p.q != 2 || p.k != 2 {
                return Err(Error::invalid(
                    "the counterexample suite runs at q = 2, k = 2",
                ));
            }
            vec![p.n as usize]
        }
        None => vec![4, 5, 6],
    };
    let mut reports: Vec<FoldReport> = Vec::new();
    for n in ns {
        reports.push(verify_fold_counterexample(n, cfg.budget, cfg.jobs)?);
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(outcome(
        "counterexample",
        "the fold map on non-degenerate [n,2]_2 codes is well defined, injective, and adjacency \
         preserving in one direction only; its witness pair is nonadjacent with adjacent images, \
         so the map extends to no automorphism of the Grassmann graph, while pulling edges back \
         through it recovers an isomorphic copy of the code graph",
        None,
        passed,
        reports,
    ))
}

// ---------------------------------------------------------------------------
// linear-algebra properties (acceptance criterion; not a CLI suite)
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct LinalgPoint {
    q: u16,
    n: u16,
    k: u16,
    pairs_checked: usize,
    modular_law_ok: bool,
    double_orthocomplement_ok: bool,
    scramblings_checked: usize,
    orbit_invariance_ok: bool,
}

pub fn linalg_properties_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let points = [
        GrassmannianParams::new(2, 4, 2).unwrap(),
        GrassmannianParams::new(2, 5, 2).unwrap(),
        GrassmannianParams::new(3, 4, 2).unwrap(),
        GrassmannianParams::new(4, 4, 2).unwrap(),
        GrassmannianParams::new(5, 4, 2).unwrap(),
    ];
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for p in points {
        let subs: Vec<Subspace> = enumerate_grassmannian(p, cfg.budget)?.collect();
        let mut modular = true;
        for (i, x) in subs.iter().enumerate() {
            for y in subs.iter().skip(i) {
                let s = x.sum_dim(y)?;
                let m = x.intersect_dim(y)?;
                if s + m != x.dim() + y.dim() {
                    modular = false;
                }
            }
        }
        let mut double_orth = true;
        for x in &subs {
            let perp = x.orthocomplement()?;
            if perp.dim() != p.n as usize - x.dim() || perp.orthocomplement()? != *x {
                double_orth = false;
            }
        }
        // canonical form must be constant on row-operation orbits
        let mut orbit_ok = true;
        let scramblings = 100;
        let f = field(p.q)?;
        for _ in 0..scramblings {
            let x = &subs[rng.gen_range(0..subs.len())];
            let k = x.dim();
            let n = x.ambient();
            let mut rows: Vec<Vec<u8>> = x.rows_iter().map(|r| r.to_vec()).collect();
            for _ in 0..20 {
                match rng.gen_range(0..3u8) {
                    0 => {
                        let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
                        rows.swap(i, j);
                    }
                    1 => {
                        let i = rng.gen_range(0..k);
                        let scalar = rng.gen_range(1..p.q) as u8;
                        for e in rows[i].iter_mut() {
                            *e = f.mul_idx(*e, scalar);
                        }
                    }
                    _ => {
                        let i = rng.gen_range(0..k);
                        let j = rng.gen_range(0..k);
                        if i != j {
                            let scalar = rng.gen_range(0..p.q) as u8;
                            for c in 0..n {
                                let add = f.mul_idx(scalar, rows[j][c]);
                                rows[i][c] = f.add_idx(rows[i][c], add);
                            }
                        }
                    }
                }
            }
            let rescrambled = Subspace::span(p.q, &rows)?;
            if rescrambled != *x {
                orbit_ok = false;
            }
        }
        out.push(LinalgPoint {
            q: p.q,
            n: p.n,
            k: p.k,
            pairs_checked: subs.len() * (subs.len() + 1) / 2,
            modular_law_ok: modular,
            double_orthocomplement_ok: double_orth,
            scramblings_checked: scramblings,
            orbit_invariance_ok: orbit_ok,
        });
    }
    let passed = out
        .iter()
        .all(|p| p.modular_law_ok && p.double_orthocomplement_ok && p.orbit_invariance_ok);
    Ok(outcome(
        "linalg-properties",
        "dim(X+Y) + dim(X meet Y) = dim X + dim Y for all pairs; orthocomplementation is a \
         dimension-complementing involution; canonical forms are invariant under row scrambling",
        Some(cfg.seed),
        passed,
        out,
    ))
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

pub const SUITE_NAMES: &[&str] = &[
    "counts",
    "star-formula",
    "prop-star",
    "prop-top",
    "connectivity",
    "distance",
    "census",
    "automorphisms",
    "orthocomplement",
    "counterexample",
];

/// Runs one named suite, or all of them.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    match name {
        "counts" => Ok(vec![counts_suite(cfg)?]),
        "star-formula" => Ok(vec![sizes_suite(cfg)?]),
        "prop-star" => Ok(vec![star_maximality_suite(cfg)?]),
        "prop-top" => Ok(vec![top_maximality_suite(cfg)?]),
        "connectivity" => Ok(vec![connectivity_suite(cfg)?]),
        "distance" => Ok(vec![distance_suite(cfg)?]),
        "census" => Ok(vec![census_suite(cfg)?]),
        "automorphisms" => Ok(vec![automorphism_suite(cfg)?]),
        "orthocomplement" => Ok(vec![orthocomplement_suite(cfg)?]),
        "counterexample" => Ok(vec![counterexample_suite(cfg)?]),
        "all" => {
            let mut out = Vec::new();
            for name in SUITE_NAMES {
                out.extend(run_suite(name, cfg)?);
            }
            Ok(out)
        }
        other => Err(Error::invalid(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?} or \"all\""
        ))),
    }
}
