//! Totally odd subdivisions of `K_{r+2}` in `KG(2k+r, k)` for `k >= 2`,
//! `r >= 3`, so the pattern order equals the chromatic number.
//!
//! For `k >= 3` the terminals are `Y = [1,k]` and `X_i = [k+1,2k-1] ∪ {2k+i}`,
//! `i = 0..=r`; `Y` is adjacent to every `X_i` and each `X_i, X_j` pair gets a
//! path from one of three formula families (`k = 3`, `r >= k >= 4`, `r < k`).
//! For `k = 2` the terminals are pairs of consecutive integers.
//!
//! The published formulas for `r >= k` are not collision-free in general, so
//! [`build`] keeps every formula path that is valid and disjoint from the
//! ones already accepted and re-routes the rest through a lexicographic
//! search for a length-3 path. Re-routed pairs are listed in the metadata.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{check_chain, PathFamily};
use crate::certify::{verify_subdivision, CertPath, Certificate, PatternKind};
use crate::error::{invalid, Error, Result};
use crate::host::{for_each_combination, HostGraph, Vertex};
use crate::kset::{KSubset, SetBuilder, MAX_GROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChromaticCliqueParams {
    k: u32,
    r: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `k = 2`: consecutive-pair terminals.
    Pairs,
    /// `k = 3`, `r >= 3`: tabulated length-3 paths.
    Three,
    /// `r >= k >= 4`: length-3 paths with interval-built middle sets.
    Wide,
    /// `r < k`: paths of length `2⌈(k-1)/r⌉ + 1`.
    Narrow,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::Pairs => "pairs",
            Regime::Three => "three",
            Regime::Wide => "wide",
            Regime::Narrow => "narrow",
        }
    }
}

impl ChromaticCliqueParams {
    pub fn new(k: u32, r: u32) -> Result<Self> {
        if k < 2 {
            return Err(invalid(format!("k must be at least 2, got {k}")));
        }
        if r < 3 {
            return Err(invalid(format!("r must be at least 3, got {r}")));
        }
        if 2 * k + r > MAX_GROUND {
            return Err(invalid(format!(
                "ground set 2k+r = {} exceeds {MAX_GROUND}",
                2 * k + r
            )));
        }
        Ok(ChromaticCliqueParams { k, r })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn ground(&self) -> u32 {
        2 * self.k + self.r
    }

    pub fn regime(&self) -> Regime {
        match self.k {
            2 => Regime::Pairs,
            3 => Regime::Three,
            k if self.r >= k => Regime::Wide,
            _ => Regime::Narrow,
        }
    }

    fn pairs_x_count(&self) -> u32 {
        self.r / 2 + 2
    }
}

/// Terminal role, used for names and formula dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    /// `Y` for `k >= 3`, `Y_i` for `k = 2`.
    Y(u32),
    X(u32),
}

fn roles(p: &ChromaticCliqueParams) -> Vec<Role> {
    if p.k == 2 {
        let xs = (1..=p.pairs_x_count()).map(Role::X);
        let ys = (2..=p.r.div_ceil(2) + 1).map(Role::Y);
        xs.chain(ys).collect()
    } else {
        core::iter::once(Role::Y(0))
            .chain((0..=p.r).map(Role::X))
            .collect()
    }
}

pub fn terminal_names(p: &ChromaticCliqueParams) -> Vec<String> {
    roles(p)
        .into_iter()
        .map(|role| match (p.k, role) {
            (2, Role::Y(i)) => format!("Y_{i}"),
            (_, Role::Y(_)) => "Y".to_string(),
            (_, Role::X(i)) => format!("X_{i}"),
        })
        .collect()
}

fn role_set(p: &ChromaticCliqueParams, role: Role) -> Result<KSubset> {
    let (k, n) = (p.k as i64, p.ground());
    let b = match (p.k, role) {
        (2, Role::X(i)) => SetBuilder::new(n).elems(&[2 * i as i64 - 1, 2 * i as i64]),
        (2, Role::Y(i)) => SetBuilder::new(n).elems(&[2 * i as i64, 2 * i as i64 + 1]),
        (_, Role::Y(_)) => SetBuilder::new(n).span(1, k),
        (_, Role::X(i)) => SetBuilder::new(n).span(k + 1, 2 * k - 1).elem(2 * k + i as i64),
    };
    b.finish(p.k, "terminal")
}

pub fn terminals(p: &ChromaticCliqueParams) -> Result<Vec<KSubset>> {
    roles(p).into_iter().map(|r| role_set(p, r)).collect()
}

fn sb(n: u32) -> SetBuilder {
    SetBuilder::new(n)
}

/// Middle sets for the `k = 3` table, `0 <= i < j <= r`.
fn three_sets(r: i64, i: i64, j: i64) -> (&'static str, SetBuilder, SetBuilder) {
    let n = (6 + r) as u32;
    if i > 0 && j < r {
        if j - i == 1 {
            return match (i, r) {
                (1, 3) => ("consecutive-first", sb(n).elems(&[1, 6, 8]), sb(n).elems(&[2, 7, 9])),
                (1, 4) => ("consecutive-first", sb(n).elems(&[1, 6, 8]), sb(n).elems(&[3, 9, 10])),
                (1, _) => ("consecutive-first", sb(n).elems(&[1, 6, 8]), sb(n).elems(&[3, 7, 10])),
                _ => (
                    "consecutive",
                    sb(n).elems(&[1, 5 + i, 7 + i]),
                    sb(n).elems(&[3, 4 + i, 8 + i]),
                ),
            };
        }
        return (
            "spread",
            sb(n).elems(&[1, 5 + i, 6 + j]),
            sb(n).elems(&[2, 6 + i, 5 + j]),
        );
    }
    if i == 0 && j < r {
        let b = sb(n).elems(&[1, 2, 6 + j]);
        return if j <= 2 {
            ("from-zero-low", b, sb(n).elem(3).span(7, 5 + j).span(7 + j, 9))
        } else {
            ("from-zero", b, sb(n).elems(&[3, 5 + j, 7 + j]))
        };
    }
    if i == 0 {
        return (
            "zero-last",
            sb(n).elems(&[1, 2, 6 + r]),
            sb(n).elems(&[3, 4 + r, 5 + r]),
        );
    }
    if i == r - 1 {
        return (
            "to-last-adjacent",
            sb(n).elems(&[1, 4 + r, 6 + r]),
            sb(n).elems(&[2, 3, 5 + r]),
        );
    }
    (
        "to-last",
        sb(n).elems(&[1, 5 + i, 6 + r]),
        sb(n).elems(&[2, 3, 6 + i]),
    )
}

/// Middle sets for `r >= k >= 4`, `0 <= i < j <= r`. Where the free
/// endpoints `a, b` are not forced, the smallest choice keeping both end
/// intervals non-empty is taken.
fn wide_sets(k: i64, r: i64, i: i64, j: i64) -> (&'static str, SetBuilder, SetBuilder) {
    let n = (2 * k + r) as u32;
    if i > 0 && j < r {
        let b_set = sb(n).span(1, k - 2).elems(&[2 * k + i - 1, 2 * k + j]);
        if j - i >= k - 2 {
            let a = 2 * k + i;
            let b = a + (j - i - (k - 3));
            let c = sb(n).span(k - 1, k).span(2 * k + i, a).span(b, 2 * k + j - 1);
            return ("long-gap", b_set, c);
        }
        if i >= 2 && j - i <= k - 4 {
            let a = (2 * k).max(k + j + 2);
            let b = a + k - 1;
            let c = sb(n)
                .span(k - 1, k)
                .span(a, 2 * k + i - 2)
                .span(2 * k + i, 2 * k + j - 1)
                .span(2 * k + j + 1, b);
            return ("short-gap", b_set, c);
        }
        let b = 3 * k + i - 2;
        let c = sb(n)
            .span(k - 1, k)
            .span(2 * k + i, 2 * k + j - 1)
            .span(2 * k + j + 1, b);
        return ("remainder", b_set, c);
    }
    if i == 0 && j < r {
        let b_set = sb(n).span(1, k - 1).elem(2 * k + j);
        if j < k {
            let c = sb(n).elem(k).span(2 * k + 1, 2 * k + j - 1).span(2 * k + j + 1, 3 * k);
            return ("from-zero-low", b_set, c);
        }
        let a = k + j + 2;
        let b = a + k - 1;
        let c = sb(n).elem(k).span(a, 2 * k + j - 1).span(2 * k + j + 1, b);
        return ("from-zero", b_set, c);
    }
    if i == 0 {
        return (
            "zero-last",
            sb(n).span(1, k - 1).elem(2 * k + r),
            sb(n).elem(k).span(k + r + 1, 2 * k + r - 1),
        );
    }
    if r - k + 2 <= i {
        return (
            "to-last-high",
            sb(n).span(1, k - 2).elems(&[2 * k + i - 1, 2 * k + r]),
            sb(n)
                .span(k - 1, k)
                .span(k + r + 1, 2 * k + i - 2)
                .span(2 * k + i, 2 * k + r - 1),
        );
    }
    (
        "to-last-low",
        sb(n).span(1, k - 3).elems(&[2 * k + i - 1, 2 * k + r - 1, 2 * k + r]),
        sb(n)
            .span(k - 1, k)
            .elems(&[2 * k + i - 2, 2 * k + i])
            .span(k + r + 3, 2 * k + r - 2),
    )
}

/// `B^1..B^S` then `C^S..C^1` for `r < k`, `S = ⌈(k-1)/r⌉`.
fn narrow_sets(k: i64, r: i64, i: i64, j: i64) -> Vec<(String, SetBuilder)> {
    let n = (2 * k + r) as u32;
    let steps = (k - 1 + r - 1) / r;
    let mut bs = Vec::new();
    let mut cs = Vec::new();
    for s in 1..=steps {
        let (b, c) = if s % 2 == 1 {
            let pr = (s - 1) / 2 * r;
            if i > 0 {
                (
                    sb(n)
                        .span(1, k - 2 - pr)
                        .span(k + 1, k + pr)
                        .elems(&[2 * k + i - 1, 2 * k + j]),
                    sb(n)
                        .span(pr + r, k)
                        .span(2 * k - pr, 2 * k + i - 2)
                        .span(2 * k + i, 2 * k + j - 1)
                        .span(2 * k + j + 1, 2 * k + r),
                )
            } else {
                (
                    sb(n).span(1, k - 1 - pr).span(k + 1, k + pr).elem(2 * k + j),
                    sb(n)
                        .span(pr + r + 1, k)
                        .span(2 * k - pr, 2 * k + j - 1)
                        .span(2 * k + j + 1, 2 * k + r),
                )
            }
        } else {
            let pr = (s - 2) / 2 * r;
            let next = pr + r;
            if i > 0 {
                (
                    sb(n)
                        .span(k - 1 - pr, k)
                        .span(k + next + 1, 2 * k + i - 2)
                        .span(2 * k + i, 2 * k + j - 1)
                        .span(2 * k + j + 1, 2 * k + r),
                    sb(n)
                        .span(1, next - 1)
                        .span(k + 1, 2 * k - next - 1)
                        .elems(&[2 * k + i - 1, 2 * k + j]),
                )
            } else {
                (
                    sb(n)
                        .span(k - pr, k)
                        .span(k + next + 1, 2 * k + j - 1)
                        .span(2 * k + j + 1, 2 * k + r),
                    sb(n)
                        .span(1, next)
                        .span(k + 1, 2 * k - next - 1)
                        .elem(2 * k + j),
                )
            }
        };
        bs.push((format!("B^{s}"), b));
        cs.push((format!("C^{s}"), c));
    }
    bs.extend(cs.into_iter().rev());
    bs
}

/// Internal sets prescribed by the formulas for terminals `a < b`, plus the
/// case label. Cardinality faults are construction bugs.
fn formula_internal(p: &ChromaticCliqueParams, a: usize, b: usize) -> Result<(String, Vec<KSubset>)> {
    let rs = roles(p);
    let names = terminal_names(p);
    let label = format!("{}–{}", names[a], names[b]);
    let n = p.ground();
    let (k, r) = (p.k as i64, p.r as i64);
    let first = role_set(p, rs[a])?;
    let second = role_set(p, rs[b])?;
    if first.is_disjoint(&second) {
        return Ok(("edge".into(), Vec::new()));
    }
    match (p.regime(), rs[a], rs[b]) {
        (Regime::Pairs, Role::X(x), Role::Y(y)) => {
            // X_y joined through {1,2y-1},{2,2y+1}; X_{y+1} through {1,2y+2},{2,2y}.
            let (y, x) = (y as i64, x as i64);
            let (s1, s2) = if x == y {
                (sb(n).elems(&[1, 2 * y - 1]), sb(n).elems(&[2, 2 * y + 1]))
            } else {
                (sb(n).elems(&[1, 2 * y + 2]), sb(n).elems(&[2, 2 * y]))
            };
            let s1 = s1.finish(p.k, &label)?;
            let s2 = s2.finish(p.k, &label)?;
            // Formula path runs from Y_y; reversed so it starts at X.
            let case = if x == y { "same-index" } else { "next-index" };
            Ok((case.into(), vec![s2, s1]))
        }
        (Regime::Three, Role::X(i), Role::X(j)) => {
            let (case, bset, cset) = three_sets(r, i as i64, j as i64);
            Ok((case.into(), vec![bset.finish(p.k, &label)?, cset.finish(p.k, &label)?]))
        }
        (Regime::Wide, Role::X(i), Role::X(j)) => {
            let (case, bset, cset) = wide_sets(k, r, i as i64, j as i64);
            Ok((case.into(), vec![bset.finish(p.k, &label)?, cset.finish(p.k, &label)?]))
        }
        (Regime::Narrow, Role::X(i), Role::X(j)) => {
            let case = if i == 0 { "from-zero" } else { "general" };
            let sets = narrow_sets(k, r, i as i64, j as i64)
                .into_iter()
                .map(|(name, bld)| bld.finish(p.k, &format!("{label} {name}")))
                .collect::<Result<Vec<_>>>()?;
            Ok((case.into(), sets))
        }
        _ => Err(invalid(format!("no formula joins {label}"))),
    }
}

/// The formula path between terminals `a < b` (indices into [`terminals`]).
/// Fails with a construction bug when the formula does not give a valid
/// odd path; see [`build`] for how such pairs are handled.
pub fn path(p: &ChromaticCliqueParams, a: usize, b: usize) -> Result<PathFamily> {
    let terms = terminals(p)?;
    if a >= b || b >= terms.len() {
        return Err(invalid(format!(
            "({a},{b}) is not an increasing pair of terminal indices below {}",
            terms.len()
        )));
    }
    let (_, internal) = formula_internal(p, a, b)?;
    let mut vertices = Vec::with_capacity(internal.len() + 2);
    vertices.push(terms[a]);
    vertices.extend(internal);
    vertices.push(terms[b]);
    let names = terminal_names(p);
    check_chain(&vertices, &format!("{}–{}", names[a], names[b]))?;
    Ok(PathFamily {
        pair: (a, b),
        vertices,
    })
}

/// Lexicographically first length-3 path `from, B, C, to` whose middle sets
/// avoid `forbidden`. A `preferred` first set is tried before the search.
fn reroute(
    p: &ChromaticCliqueParams,
    from: &KSubset,
    to: &KSubset,
    preferred: Option<KSubset>,
    forbidden: &BTreeSet<KSubset>,
) -> Option<(KSubset, KSubset)> {
    let n = p.ground();
    let k = p.k as usize;
    let second_for = |b: &KSubset| -> Option<KSubset> {
        let pool = to.union(b).complement().to_vec();
        let mut hit = None;
        for_each_combination(pool.len(), k, |idx| {
            if hit.is_some() {
                return;
            }
            let c = KSubset::new(n, idx.iter().map(|&x| pool[x])).unwrap();
            if !forbidden.contains(&c) && c != *b {
                hit = Some(c);
            }
        });
        hit
    };
    if let Some(b) = preferred {
        if b.len() == p.k && b.is_disjoint(from) && !forbidden.contains(&b) {
            if let Some(c) = second_for(&b) {
                return Some((b, c));
            }
        }
    }
    let pool = from.complement().to_vec();
    let mut hit = None;
    for_each_combination(pool.len(), k, |idx| {
        if hit.is_some() {
            return;
        }
        let b = KSubset::new(n, idx.iter().map(|&x| pool[x])).unwrap();
        if forbidden.contains(&b) {
            return;
        }
        if let Some(c) = second_for(&b) {
            hit = Some((b, c));
        }
    });
    hit
}

/// Certificate for `K_{r+2}` over the lazy `KG(2k+r, k)` oracle.
pub fn build(p: &ChromaticCliqueParams) -> Result<Certificate> {
    let terms = terminals(p)?;
    let names = terminal_names(p);
    let t = terms.len();
    let term_set: BTreeSet<KSubset> = terms.iter().copied().collect();
    let mut used: BTreeSet<KSubset> = BTreeSet::new();
    let mut accepted: Vec<Option<Vec<KSubset>>> = Vec::new();
    let mut pending = Vec::new();
    let mut cases = Vec::new();
    let mut pairs = Vec::new();
    for a in 0..t {
        for b in a + 1..t {
            pairs.push((a, b));
        }
    }
    for (slot, &(a, b)) in pairs.iter().enumerate() {
        let formula = formula_internal(p, a, b);
        let fresh = |sets: &[KSubset]| {
            let mut mine = BTreeSet::new();
            sets.iter()
                .all(|s| !used.contains(s) && !term_set.contains(s) && mine.insert(*s))
        };
        match formula {
            Ok((case, sets)) => {
                let mut chain = vec![terms[a]];
                chain.extend(sets.iter().copied());
                chain.push(terms[b]);
                if check_chain(&chain, "").is_ok() && fresh(&sets) {
                    used.extend(sets.iter().copied());
                    cases.push(format!("{}–{}:{case}", names[a], names[b]));
                    accepted.push(Some(chain));
                } else {
                    cases.push(format!("{}–{}:{case}*", names[a], names[b]));
                    accepted.push(None);
                    pending.push((slot, sets.first().copied()));
                }
            }
            Err(Error::ConstructionBug(_)) => {
                cases.push(format!("{}–{}:invalid*", names[a], names[b]));
                accepted.push(None);
                pending.push((slot, None));
            }
            Err(e) => return Err(e),
        }
    }
    let mut repaired = Vec::new();
    for (slot, preferred) in pending {
        let (a, b) = pairs[slot];
        let mut forbidden = used.clone();
        forbidden.extend(term_set.iter().copied());
        let Some((x, y)) = reroute(p, &terms[a], &terms[b], preferred, &forbidden) else {
            return Err(Error::ConstructionBug(format!(
                "no length-3 detour for {}–{}",
                names[a], names[b]
            )));
        };
        used.insert(x);
        used.insert(y);
        accepted[slot] = Some(vec![terms[a], x, y, terms[b]]);
        repaired.push(format!("{}–{}", names[a], names[b]));
    }

    let host = HostGraph::kneser(p.ground(), p.k)?;
    let mut cert = Certificate::new(
        PatternKind::Subdivision,
        host,
        terms.iter().copied().map(Vertex::Set).collect(),
    );
    for (slot, chain) in accepted.into_iter().enumerate() {
        let chain = chain.expect("every pair routed");
        cert.paths.push(CertPath {
            pair: pairs[slot],
            vertices: chain.into_iter().map(Vertex::Set).collect(),
        });
    }
    cert.note("construction", "chromatic-clique");
    cert.note("k", p.k.to_string());
    cert.note("r", p.r.to_string());
    cert.note("regime", p.regime().name());
    cert.note("terminal_names", names.join(","));
    cert.note("cases", cases.join(";"));
    cert.note("rerouted_pairs", repaired.join(","));
    let report = verify_subdivision(&cert, true);
    if !report.passed() {
        return Err(Error::ConstructionBug(format!(
            "certificate failed verification: {:?}",
            report.violations.first()
        )));
    }
    Ok(cert)
}
