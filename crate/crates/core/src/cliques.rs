//! The clique taxonomy of the restricted graph: stars, tops, lines, their
//! non-degenerate restrictions, size formulas, and the maximality checks run
//! as executable suites.
//!
//! For 1 < k < n-1 every maximal clique of the Grassmann graph is a star
//! S(X) (all k-spaces over a fixed (k-1)-space X) or a top T(Y) (all
//! k-spaces inside a fixed (k+1)-space Y). Restricting to non-degenerate
//! codes keeps these cliques but can break maximality; the suites here test
//! exactly when, against the materialized graph rather than symbolically.

use crate::code_graph::{coordinate_profile, is_nondegenerate, GraphHandle, GraphVariant};
use crate::error::{Error, Result};
use crate::grassmannian::{
    between, enumerate_unchecked, gaussian_number, subspaces_of, superspaces_of, GrassmannianParams,
};
use crate::linalg::Subspace;
use crate::util::{intersect_sorted, map_indexed};
use num_bigint::BigUint;
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum CliqueKind {
    Star,
    Top,
    StarRestricted,
    TopRestricted,
    Line,
}

/// A symbolic maximal-clique candidate with its members resolved.
#[derive(Clone, Debug)]
pub struct CliqueDescriptor {
    pub kind: CliqueKind,
    /// X for stars and lines: a (k-1)-dimensional subspace.
    pub anchor_low: Option<Subspace>,
    /// Y for tops and lines: a (k+1)-dimensional subspace.
    pub anchor_high: Option<Subspace>,
    pub members: Vec<Subspace>,
}

impl CliqueDescriptor {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// S(X): all (dim X + 1)-dimensional subspaces containing X.
pub fn star(x: &Subspace) -> Result<CliqueDescriptor> {
    let mut members = superspaces_of(x, x.dim() + 1)?;
    members.sort();
    Ok(CliqueDescriptor {
        kind: CliqueKind::Star,
        anchor_low: Some(x.clone()),
        anchor_high: None,
        members,
    })
}

/// T(Y): all (dim Y - 1)-dimensional subspaces of Y.
pub fn top(y: &Subspace) -> Result<CliqueDescriptor> {
    if y.dim() < 2 {
        return Err(Error::invalid("top anchor must have dimension at least 2"));
    }
    let mut members = subspaces_of(y, y.dim() - 1)?;
    members.sort();
    Ok(CliqueDescriptor {
        kind: CliqueKind::Top,
        anchor_low: None,
        anchor_high: Some(y.clone()),
        members,
    })
}

/// The line S(X) meet T(Y): requires X inside Y with a dimension gap of two;
/// contains exactly q+1 subspaces.
pub fn line(x: &Subspace, y: &Subspace) -> Result<CliqueDescriptor> {
    if y.dim() != x.dim() + 2 {
        return Err(Error::DimensionMismatch {
            expected: x.dim() + 2,
            got: y.dim(),
        });
    }
    let mut members = between(x, y)?;
    members.sort();
    Ok(CliqueDescriptor {
        kind: CliqueKind::Line,
        anchor_low: Some(x.clone()),
        anchor_high: Some(y.clone()),
        members,
    })
}

/// S^c(X): the star restricted to non-degenerate codes.
pub fn star_restricted(x: &Subspace) -> Result<CliqueDescriptor> {
    let mut d = star(x)?;
    d.kind = CliqueKind::StarRestricted;
    d.members.retain(is_nondegenerate);
    Ok(d)
}

/// T^c(Y): the top restricted to non-degenerate codes.
pub fn top_restricted(y: &Subspace) -> Result<CliqueDescriptor> {
    let mut d = top(y)?;
    d.kind = CliqueKind::TopRestricted;
    d.members.retain(is_nondegenerate);
    Ok(d)
}

/// |S^c(X)| = (q-1)^(c-1) * q^(n-k-c+1) for 0 < c(X) <= n-k+1; inapplicable
/// when c(X) = 0, where the restricted star is the whole star of size
/// [n-k+1]_q.
pub fn restricted_star_size(c: usize, n: usize, k: usize, q: u64) -> Result<BigUint> {
    if c == 0 {
        return Err(Error::FormulaInapplicable);
    }
    if k > n || c > n - k + 1 {
        return Err(Error::invalid(format!(
            "c(X) = {c} out of range for n = {n}, k = {k}"
        )));
    }
    let q = BigUint::from(q);
    let qm1 = &q - 1u32;
    Ok(qm1.pow(c as u32 - 1) * q.pow((n - k + 1 - c) as u32))
}

/// Maximality of a clique against the materialized graph: no vertex outside
/// the members is adjacent to all of them. Errors when the members are not
/// all vertices of `g` or do not form a clique.
pub fn is_maximal_clique(members: &[Subspace], g: &GraphHandle) -> Result<bool> {
    if members.is_empty() {
        return Err(Error::invalid("empty member set has no maximality verdict"));
    }
    let idx: Vec<u32> = members
        .iter()
        .map(|m| {
            g.index_of(m)
                .ok_or_else(|| Error::invalid(format!("member {m} is not a vertex of the graph")))
        })
        .collect::<Result<_>>()?;
    for (a, &i) in idx.iter().enumerate() {
        for &j in idx.iter().skip(a + 1) {
            if !g.is_edge(i, j) {
                return Err(Error::NotAClique);
            }
        }
    }
    Ok(common_neighbor_free(&idx, g))
}

/// True when the common neighborhood of `idx` is empty. Members never appear
/// in their own adjacency lists, so the intersection excludes them
/// automatically.
fn common_neighbor_free(idx: &[u32], g: &GraphHandle) -> bool {
    let mut common: Vec<u32> = g.neighbors(idx[0]).to_vec();
    for &i in &idx[1..] {
        if common.is_empty() {
            return true;
        }
        common = intersect_sorted(&common, g.neighbors(i));
    }
    common.is_empty()
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AnchorViolation {
    pub anchor: String,
    pub assertion: String,
    pub detail: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct StarMaximalityReport {
    pub anchors_checked: usize,
    /// q >= 3: every restricted star must be maximal.
    pub all_maximal_when_q_ge_3: Option<bool>,
    /// q = 2: maximal exactly when c(X) <= n-k-1; includes the edge sizes
    /// |S^c| = 2 at c = n-k and |S^c| = 1 at c = n-k+1.
    pub q2_partition_matches: Option<bool>,
    /// A maximal restricted star never coincides with a restricted top.
    pub no_star_equals_top: bool,
    pub violations: Vec<AnchorViolation>,
}

impl StarMaximalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the three restricted-star assertions over every (k-1)-dimensional
/// anchor. `g` must be the non-degenerate variant.
pub fn check_star_maximality(g: &GraphHandle, jobs: usize) -> Result<StarMaximalityReport> {
    let params = g.params();
    if g.variant() != GraphVariant::Nondegenerate {
        return Err(Error::invalid("star maximality runs on the nondeg variant"));
    }
    if params.k < 2 || params.k + 1 >= params.n {
        return Err(Error::invalid("star maximality requires 1 < k < n-1"));
    }
    let (q, n, k) = (params.q, params.n as usize, params.k as usize);
    let anchor_params = GrassmannianParams::new(q, params.n, params.k - 1)?;
    let anchors: Vec<Subspace> = enumerate_unchecked(anchor_params).collect();

    let per_anchor: Vec<Vec<AnchorViolation>> = map_indexed(anchors.len(), jobs, |ai| {
        let x = &anchors[ai];
        let mut violations = Vec::new();
        let c = coordinate_profile(x).c;
        let desc = star_restricted(x).expect("restricted star");
        if desc.is_empty() {
            violations.push(AnchorViolation {
                anchor: x.to_line(),
                assertion: "restricted star nonempty".into(),
                detail: "no non-degenerate extension".into(),
            });
            return violations;
        }
        let idx: Vec<u32> = desc
            .members
            .iter()
            .map(|m| g.index_of(m).expect("nondeg member is a vertex"))
            .collect();
        let maximal = common_neighbor_free(&idx, g);

        if q >= 3 && !maximal {
            violations.push(AnchorViolation {
                anchor: x.to_line(),
                assertion: "q >= 3 implies restricted star maximal".into(),
                detail: format!("c = {c}, size = {}", desc.len()),
            });
        }
        if q == 2 {
            let expected = c + k < n; // c <= n-k-1
            if maximal != expected {
                violations.push(AnchorViolation {
                    anchor: x.to_line(),
                    assertion: "q = 2: maximal iff c(X) <= n-k-1".into(),
                    detail: format!("c = {c}, maximal = {maximal}"),
                });
            }
            if c == n - k && desc.len() != 2 {
                violations.push(AnchorViolation {
                    anchor: x.to_line(),
                    assertion: "q = 2, c = n-k: restricted star has two elements".into(),
                    detail: format!("size = {}", desc.len()),
                });
            }
            if c == n - k + 1 && desc.len() != 1 {
                violations.push(AnchorViolation {
                    anchor: x.to_line(),
                    assertion: "q = 2, c = n-k+1: restricted star is a single element".into(),
                    detail: format!("size = {}", desc.len()),
                });
            }
        }
        if maximal {
            // a restricted top equal to S^c(X) would force its anchor to
            // contain every member, so the (k+1)-spaces over one member
            // exhaust the candidates
            for y in superspaces_of(&desc.members[0], k + 1).expect("extensions") {
                let t = top_restricted(&y).expect("restricted top");
                if t.members == desc.members {
                    violations.push(AnchorViolation {
                        anchor: x.to_line(),
                        assertion: "maximal restricted star equals no restricted top".into(),
                        detail: format!("coincides with the top over {y}"),
                    });
                }
            }
        }
        violations
    });

    let violations: Vec<AnchorViolation> = per_anchor.into_iter().flatten().collect();
    Ok(StarMaximalityReport {
        anchors_checked: anchors.len(),
        all_maximal_when_q_ge_3: (q >= 3).then_some(violations.is_empty()),
        q2_partition_matches: (q == 2).then_some(violations.is_empty()),
        no_star_equals_top: !violations
            .iter()
            .any(|v| v.assertion.contains("no restricted top")),
        violations,
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub enum DefectiveTopKind {
    Empty,
    ProperSubsetOfStar { star_anchor: String },
    Other,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct DefectiveTop {
    pub anchor: String,
    pub kind: DefectiveTopKind,
    pub size: usize,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct TopMaximalityReport {
    pub anchors_checked: usize,
    /// Every restricted top over a non-degenerate (k+1)-space is maximal.
    pub all_tops_maximal: bool,
    /// [k+1]_q - (q+1) > n.
    pub size_inequality_holds: bool,
    /// The two sides must agree.
    pub equivalence_holds: bool,
    /// When the inequality fails, some defective top must exist.
    pub defective: Option<DefectiveTop>,
    pub violations: Vec<AnchorViolation>,
}

impl TopMaximalityReport {
    pub fn passed(&self) -> bool {
        self.equivalence_holds && self.violations.is_empty()
    }
}

/// Tests the equivalence: every restricted top is maximal iff
/// [k+1]_q - (q+1) > n. When the inequality fails, exhibits a defective
/// anchor (empty restriction or a proper subset of a star).
pub fn check_top_maximality(g: &GraphHandle, jobs: usize) -> Result<TopMaximalityReport> {
    let params = g.params();
    if g.variant() != GraphVariant::Nondegenerate {
        return Err(Error::invalid("top maximality runs on the nondeg variant"));
    }
    if params.k < 2 || params.k + 1 >= params.n {
        return Err(Error::invalid("top maximality requires 1 < k < n-1"));
    }
    let (q, n, k) = (params.q, params.n as usize, params.k as usize);
    let anchor_params = GrassmannianParams::new(q, params.n, params.k + 1)?;
    let anchors: Vec<Subspace> = enumerate_unchecked(anchor_params)
        .filter(is_nondegenerate)
        .collect();

    let results: Vec<Option<DefectiveTop>> = map_indexed(anchors.len(), jobs, |ai| {
        let y = &anchors[ai];
        let desc = top_restricted(y).expect("restricted top");
        if desc.is_empty() {
            return Some(DefectiveTop {
                anchor: y.to_line(),
                kind: DefectiveTopKind::Empty,
                size: 0,
            });
        }
        let idx: Vec<u32> = desc
            .members
            .iter()
            .map(|m| g.index_of(m).expect("nondeg member is a vertex"))
            .collect();
        if common_neighbor_free(&idx, g) {
            return None;
        }
        // not maximal: a (k-1)-space under all the members whose restricted
        // star properly contains them means the restriction sits inside a star
        let mut kind = DefectiveTopKind::Other;
        let mut common = Some(desc.members[0].clone());
        for m in &desc.members[1..] {
            common = match common {
                Some(c) => c.intersect(m).expect("intersection").1,
                None => None,
            };
        }
        if let Some(c) = common {
            let candidates = if c.dim() == k - 1 {
                vec![c]
            } else if c.dim() >= k {
                subspaces_of(&c, k - 1).expect("hyperplanes of the common core")
            } else {
                Vec::new()
            };
            for x in candidates {
                let full_star = star_restricted(&x).expect("restricted star");
                let covers = desc
                    .members
                    .iter()
                    .all(|m| full_star.members.binary_search(m).is_ok());
                if covers && full_star.len() > desc.len() {
                    kind = DefectiveTopKind::ProperSubsetOfStar {
                        star_anchor: x.to_line(),
                    };
                    break;
                }
            }
        }
        Some(DefectiveTop {
            anchor: y.to_line(),
            kind,
            size: desc.len(),
        })
    });

    let all_tops_maximal = results.iter().all(Option::is_none);
    let defects: Vec<DefectiveTop> = results.into_iter().flatten().collect();
    // exhibit a classified defect: the defective restrictions are empty or
    // proper star subsets, so an unclassifiable one is itself a violation
    let defective = defects
        .iter()
        .find(|d| !matches!(d.kind, DefectiveTopKind::Other))
        .or(defects.first())
        .cloned();
    let rhs = BigUint::from(q as u64 + 1) + BigUint::from(n);
    let size_inequality_holds = gaussian_number(k as u32 + 1, q as u64) > rhs;
    let equivalence_holds = all_tops_maximal == size_inequality_holds;
    let mut violations = Vec::new();
    if !equivalence_holds {
        violations.push(AnchorViolation {
            anchor: String::new(),
            assertion: "all tops maximal iff [k+1]_q - (q+1) > n".into(),
            detail: format!(
                "all_maximal = {all_tops_maximal}, inequality = {size_inequality_holds}"
            ),
        });
    }
    if !size_inequality_holds {
        match &defective {
            None => violations.push(AnchorViolation {
                anchor: String::new(),
                assertion: "failing inequality must produce a defective top".into(),
                detail: "no defective anchor found".into(),
            }),
            Some(d) if matches!(d.kind, DefectiveTopKind::Other) => {
                violations.push(AnchorViolation {
                    anchor: d.anchor.clone(),
                    assertion: "defective tops are empty or proper subsets of stars".into(),
                    detail: format!("unclassified defect of size {}", d.size),
                })
            }
            _ => {}
        }
    }
    Ok(TopMaximalityReport {
        anchors_checked: anchors.len(),
        all_tops_maximal,
        size_inequality_holds,
        equivalence_holds,
        defective,
        violations,
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CensusReport {
    pub vertex_count: usize,
    pub clique_count: usize,
    pub star_count: usize,
    pub top_count: usize,
    /// Cliques found by enumeration that match no catalog entry.
    pub unmatched: Vec<Vec<String>>,
    /// Catalog entries the enumeration failed to produce.
    pub missing: Vec<Vec<String>>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty() && self.missing.is_empty()
    }
}

/// Enumerates every maximal clique of the graph (Bron-Kerbosch with
/// pivoting) and matches each against the catalog of maximal restricted
/// stars and tops. Refuses graphs above `cap` vertices.
pub fn maximal_clique_census(g: &GraphHandle, cap: usize) -> Result<CensusReport> {
    let nv = g.vertex_count();
    if nv > cap {
        return Err(Error::BudgetExceeded {
            required: BigUint::from(nv),
            budget: cap as u64,
        });
    }
    let params = g.params();
    if params.k < 2 || params.k + 1 >= params.n {
        return Err(Error::invalid("census requires 1 < k < n-1"));
    }

    let cliques = bron_kerbosch(g);

    // catalog of maximal restricted stars and tops, as vertex-index sets
    let mut catalog: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    let mut star_count = 0usize;
    let mut top_count = 0usize;
    let to_set = |members: &[Subspace]| -> BTreeSet<u32> {
        members.iter().map(|m| g.index_of(m).unwrap()).collect()
    };
    let low = GrassmannianParams::new(params.q, params.n, params.k - 1)?;
    for x in enumerate_unchecked(low) {
        let d = star_restricted(&x)?;
        if !d.is_empty() && is_maximal_clique(&d.members, g)? && catalog.insert(to_set(&d.members))
        {
            star_count += 1;
        }
    }
    let high = GrassmannianParams::new(params.q, params.n, params.k + 1)?;
    for y in enumerate_unchecked(high).filter(is_nondegenerate) {
        let d = top_restricted(&y)?;
        if !d.is_empty() && is_maximal_clique(&d.members, g)? && catalog.insert(to_set(&d.members))
        {
            top_count += 1;
        }
    }

    let found: BTreeSet<BTreeSet<u32>> = cliques.into_iter().collect();
    let render =
        |s: &BTreeSet<u32>| -> Vec<String> { s.iter().map(|&i| g.vertex(i).to_line()).collect() };
    let unmatched: Vec<Vec<String>> = found.difference(&catalog).map(render).collect();
    let missing: Vec<Vec<String>> = catalog.difference(&found).map(render).collect();

    Ok(CensusReport {
        vertex_count: nv,
        clique_count: found.len(),
        star_count,
        top_count,
        unmatched,
        missing,
    })
}

/// Bron-Kerbosch with pivoting over word-packed candidate sets.
fn bron_kerbosch(g: &GraphHandle) -> Vec<BTreeSet<u32>> {
    let nv = g.vertex_count();
    let words = nv.div_ceil(64).max(1);
    let mut nbr = vec![vec![0u64; words]; nv];
    for v in 0..nv {
        for &w in g.neighbors(v as u32) {
            nbr[v][w as usize / 64] |= 1u64 << (w % 64);
        }
    }
    let mut p = vec![0u64; words];
    for v in 0..nv {
        p[v / 64] |= 1u64 << (v % 64);
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    bk_recurse(&nbr, &mut r, p, vec![0u64; words], &mut out);
    out
}

fn bk_recurse(
    nbr: &[Vec<u64>],
    r: &mut Vec<u32>,
    p: Vec<u64>,
    x: Vec<u64>,
    out: &mut Vec<BTreeSet<u32>>,
) {
    if p.iter().all(|&w| w == 0) {
        if x.iter().all(|&w| w == 0) {
            out.push(r.iter().copied().collect());
        }
        return;
    }
    // pivot: the vertex in P or X leaving the fewest uncovered candidates
    let mut pivot = None;
    let mut best = usize::MAX;
    for set in [&p, &x] {
        for v in iter_bits(set) {
            let uncovered = p
                .iter()
                .zip(&nbr[v as usize])
                .map(|(&pw, &nw)| (pw & !nw).count_ones() as usize)
                .sum::<usize>();
            if uncovered < best {
                best = uncovered;
                pivot = Some(v);
            }
        }
    }
    let pivot_nbr = nbr[pivot.unwrap() as usize].clone();
    let todo: Vec<u32> = iter_bits(&p)
        .filter(|&v| pivot_nbr[v as usize / 64] & (1u64 << (v % 64)) == 0)
        .collect();

    let mut p = p;
    let mut x = x;
    for v in todo {
        let vn = &nbr[v as usize];
        let next_p: Vec<u64> = p.iter().zip(vn).map(|(&a, &b)| a & b).collect();
        let next_x: Vec<u64> = x.iter().zip(vn).map(|(&a, &b)| a & b).collect();
        r.push(v);
        bk_recurse(nbr, r, next_p, next_x, out);
        r.pop();
        p[v as usize / 64] &= !(1u64 << (v % 64));
        x[v as usize / 64] |= 1u64 << (v % 64);
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = u32> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros();
            w &= w - 1;
            Some(wi as u32 * 64 + b)
        })
    })
}
