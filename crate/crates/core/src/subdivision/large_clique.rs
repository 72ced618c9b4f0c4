//! Totally odd subdivisions of large complete graphs in `KG(2k+r, k)` with
//! `k >= 13`, `r >= 6` and `2r | k-1`. Terminals are `X_i = [1,k-1] ∪ {k+i}`
//! for `i` in the index set below; each pair is joined by a path of
//! `2(k-1)/r + 1` edges whose sets are told apart by their isles and gaps.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{check_chain, PathFamily};
use crate::certify::{verify_subdivision, CertPath, Certificate, PatternKind};
use crate::error::{invalid, Error, Result};
use crate::host::{HostGraph, Vertex};
use crate::kset::{KSubset, SetBuilder, MAX_GROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LargeCliqueParams {
    k: u32,
    r: u32,
}

impl LargeCliqueParams {
    pub fn new(k: u32, r: u32) -> Result<Self> {
        if k < 13 {
            return Err(invalid(format!("k must be at least 13, got {k}")));
        }
        if r < 6 {
            return Err(invalid(format!("r must be at least 6, got {r}")));
        }
        if (k - 1) % (2 * r) != 0 {
            return Err(invalid(format!("2r must divide k-1 (k={k}, r={r})")));
        }
        if 2 * k + r > MAX_GROUND {
            return Err(invalid(format!(
                "ground set 2k+r = {} exceeds {MAX_GROUND}",
                2 * k + r
            )));
        }
        Ok(LargeCliqueParams { k, r })
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

    /// Number of `B` (and of `C`) sets on each path.
    pub fn half_length(&self) -> u32 {
        (self.k - 1) / self.r
    }

    /// The pattern order promised for these parameters, `⌈(k+r)/8⌉`.
    pub fn promised_order(&self) -> usize {
        (self.k + self.r).div_ceil(8) as usize
    }
}

/// Indices `i ≡ 0 (mod 4)` with `(k-1)/2 + 1 <= i <= k+r-3`.
pub fn terminal_indices(p: &LargeCliqueParams) -> Vec<u32> {
    let lo = (p.k - 1) / 2 + 1;
    let hi = p.k + p.r - 3;
    (lo..=hi).filter(|i| i % 4 == 0).collect()
}

pub fn terminal(p: &LargeCliqueParams, i: u32) -> Result<KSubset> {
    SetBuilder::new(p.ground())
        .span(1, p.k as i64 - 1)
        .elem((p.k + i) as i64)
        .finish(p.k, "terminal")
}

pub fn terminals(p: &LargeCliqueParams) -> Result<Vec<KSubset>> {
    terminal_indices(p).into_iter().map(|i| terminal(p, i)).collect()
}

/// Which of the four `C`-set cases applied at each step `s = 1..=half_length`.
pub fn c_cases(p: &LargeCliqueParams, i: u32, j: u32) -> Vec<u8> {
    (1..=p.half_length())
        .map(|s| c_case(p, i, j, (s - 1) / 2))
        .collect()
}

fn c_case(p: &LargeCliqueParams, i: u32, j: u32, q: u32) -> u8 {
    let (k, i, j, pr) = (p.k as i64, i as i64, j as i64, (q * p.r) as i64);
    if pr >= k - i - 1 {
        1
    } else if pr <= k - j {
        2
    } else if pr >= k - j + 2 {
        3
    } else {
        4
    }
}

/// The path joining `X_i` and `X_j`; `pair` holds `(i, j)`.
pub fn path(p: &LargeCliqueParams, i: u32, j: u32) -> Result<PathFamily> {
    let idx = terminal_indices(p);
    if !idx.contains(&i) || !idx.contains(&j) || i >= j {
        return Err(invalid(format!(
            "({i},{j}) is not an increasing pair of terminal indices {idx:?}"
        )));
    }
    let n = p.ground();
    let (k, r, ii, jj) = (p.k as i64, p.r as i64, i as i64, j as i64);
    let s_pair = [k + ii - 1, k + jj];
    let t_quad = [k + ii - 2, k + ii, k + jj - 1, k + jj + 1];
    let half = p.half_length();
    let mut bs = Vec::with_capacity(half as usize);
    let mut cs = Vec::with_capacity(half as usize);
    for s in 1..=half {
        let q = ((s - 1) / 2) as i64;
        let pr = q * r;
        let label = format!("X_{i}–X_{j} step {s}");
        let b = if s % 2 == 1 {
            SetBuilder::new(n)
                .span(1, pr)
                .elems(&s_pair)
                .span(k + (q + 1) * r - 3, k + ii - 3)
                .span(k + ii + 1, k + jj - 2)
                .span(k + jj + 2, 2 * k + r)
        } else {
            SetBuilder::new(n)
                .span((q + 1) * r + 1, k + (q + 1) * r - 4)
                .elems(&t_quad)
        };
        bs.push(b.finish(p.k, &format!("{label} B"))?);

        let lower = SetBuilder::new(n).span(1, k - (q + 1) * r - 1).elems(&s_pair);
        let (odd, even) = match c_case(p, i, j, q as u32) {
            1 => (
                SetBuilder::new(n).span(k - pr, 2 * k - pr - 5).elems(&t_quad),
                lower
                    .span(2 * k - pr - 4, k + ii - 3)
                    .span(k + ii + 1, k + jj - 2)
                    .span(k + jj + 2, 2 * k + r),
            ),
            2 => (
                SetBuilder::new(n)
                    .span(k - pr, k + ii - 2)
                    .span(k + ii, k + jj - 1)
                    .span(k + jj + 1, 2 * k - pr + 1),
                lower.span(2 * k - pr + 2, 2 * k + r),
            ),
            3 => (
                SetBuilder::new(n)
                    .span(k - pr, k + ii - 2)
                    .span(k + ii, 2 * k - pr - 2)
                    .elems(&[k + jj - 1, k + jj + 1]),
                lower.span(2 * k - pr - 1, k + jj - 2).span(k + jj + 2, 2 * k + r),
            ),
            _ => (
                SetBuilder::new(n)
                    .span(k - pr, k + ii - 2)
                    .span(k + ii, 2 * k - pr - 3)
                    .elems(&[k + jj - 1, k + jj + 1, k + jj + 2]),
                lower.span(2 * k - pr - 2, k + jj - 2).span(k + jj + 3, 2 * k + r),
            ),
        };
        let c = if s % 2 == 1 { odd } else { even };
        cs.push(c.finish(p.k, &format!("{label} C"))?);
    }
    let mut vertices = Vec::with_capacity(2 * half as usize + 2);
    vertices.push(terminal(p, i)?);
    vertices.extend(bs);
    vertices.extend(cs.into_iter().rev());
    vertices.push(terminal(p, j)?);
    check_chain(&vertices, &format!("X_{i}–X_{j}"))?;
    Ok(PathFamily {
        pair: (i as usize, j as usize),
        vertices,
    })
}

/// Certificate over the lazy `KG(2k+r, k)` oracle on all terminals.
pub fn build(p: &LargeCliqueParams) -> Result<Certificate> {
    let idx = terminal_indices(p);
    let host = HostGraph::kneser(p.ground(), p.k)?;
    let terms = terminals(p)?;
    let mut cert = Certificate::new(
        PatternKind::Subdivision,
        host,
        terms.into_iter().map(Vertex::Set).collect(),
    );
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            let fam = path(p, idx[a], idx[b])?;
            cert.paths.push(CertPath {
                pair: (a, b),
                vertices: fam.vertices.into_iter().map(Vertex::Set).collect(),
            });
        }
    }
    cert.note("construction", "large-clique");
    cert.note("k", p.k.to_string());
    cert.note("r", p.r.to_string());
    let idx_text: Vec<_> = idx.iter().map(|i| i.to_string()).collect();
    cert.note("terminal_indices", idx_text.join(","));
    cert.note("promised_order", p.promised_order().to_string());
    if idx.len() < p.promised_order() {
        cert.note(
            "order_shortfall",
            format!("{} terminals available, {} promised", idx.len(), p.promised_order()),
        );
    }
    let report = verify_subdivision(&cert, true);
    if !report.passed() {
        return Err(Error::ConstructionBug(format!(
            "certificate failed verification: {:?}",
            report.violations.first()
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kset::{gaps, isles};

    fn set(n: u32, parts: &[(i64, i64)]) -> KSubset {
        parts
            .iter()
            .fold(SetBuilder::new(n), |b, &(lo, hi)| b.span(lo, hi))
            .build()
            .unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(LargeCliqueParams::new(13, 5).is_err());
        assert!(LargeCliqueParams::new(14, 6).is_err());
        assert!(LargeCliqueParams::new(11, 6).is_err());
        assert!(LargeCliqueParams::new(61, 10).is_err()); // 2k+r = 132
    }

    #[test]
    fn index_sets() {
        let p = LargeCliqueParams::new(13, 6).unwrap();
        assert_eq!(terminal_indices(&p), [8, 12, 16]);
        assert_eq!(terminal(&p, 8).unwrap(), set(32, &[(1, 12), (21, 21)]));
        let p = LargeCliqueParams::new(25, 6).unwrap();
        assert_eq!(terminal_indices(&p), [16, 20, 24, 28]);
        let p = LargeCliqueParams::new(25, 12).unwrap();
        assert_eq!(terminal_indices(&p), [16, 20, 24, 28, 32]);
        let p = LargeCliqueParams::new(49, 6).unwrap();
        assert_eq!(terminal_indices(&p), [28, 32, 36, 40, 44, 48, 52]);
    }

    #[test]
    fn frozen_path() {
        let p = LargeCliqueParams::new(13, 6).unwrap();
        let fam = path(&p, 8, 12).unwrap();
        let want = [
            set(32, &[(1, 12), (21, 21)]),
            set(32, &[(20, 20), (25, 25), (16, 18), (22, 23), (27, 32)]),
            set(32, &[(7, 15), (19, 19), (21, 21), (24, 24), (26, 26)]),
            set(32, &[(1, 6), (20, 20), (25, 25), (28, 32)]),
            set(32, &[(13, 19), (21, 24), (26, 27)]),
            set(32, &[(1, 12), (25, 25)]),
        ];
        assert_eq!(fam.vertices, want);
        assert_eq!(fam.edge_count(), 5);
        assert_eq!(c_cases(&p, 8, 12), [2, 2]);
        assert_eq!(isles(&fam.vertices[1]), [20, 25]);
        assert_eq!(gaps(&fam.vertices[2]), [20, 25]);
    }

    #[test]
    fn off_index_pairs_rejected() {
        let p = LargeCliqueParams::new(13, 6).unwrap();
        assert!(path(&p, 12, 8).is_err());
        assert!(path(&p, 8, 9).is_err());
    }

    #[test]
    fn shortfall_is_recorded() {
        // |I| = 3 while ⌈25/8⌉ = 4.
        let p = LargeCliqueParams::new(17, 8).unwrap();
        let cert = build(&p).unwrap();
        assert_eq!(cert.terminals.len(), 3);
        assert!(cert.metadata.contains_key("order_shortfall"));
    }
}
