//! F₂ homology of bigraded complexes and the symmetrized ĤFK table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::StructureError;
use crate::tensor::{BigradedComplex, TensorGenerator};

pub const SCHEMA: &str = "floerbox/1";

/// Generator indices grouped by `A_rel`; the differential is block diagonal.
fn columns(c: &BigradedComplex) -> BTreeMap<i64, Vec<usize>> {
    let mut cols: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, g) in c.generators.iter().enumerate() {
        cols.entry(g.alexander_rel).or_default().push(i);
    }
    cols
}

/// Cancels arrows inside one column, visiting generators in name order.
/// Returns the surviving global indices.
fn cancel_column(c: &BigradedComplex, mut members: Vec<usize>, arrows: &[(usize, usize)]) -> Vec<usize> {
    members.sort_by(|&x, &y| c.generators[x].name.cmp(&c.generators[y].name));
    let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(l, &g)| (g, l)).collect();
    let k = members.len();
    let mut out = vec![BTreeSet::new(); k];
    let mut inc = vec![BTreeSet::new(); k];
    for &(s, d) in arrows {
        let (s, d) = (local[&s], local[&d]);
        out[s].insert(d);
        inc[d].insert(s);
    }
    let mut alive = vec![true; k];
    for x in 0..k {
        let Some(&y) = out[x].iter().next() else { continue };
        let sources: Vec<usize> = inc[y].iter().copied().filter(|&z| z != x).collect();
        let targets: Vec<usize> = out[x].iter().copied().filter(|&w| w != y).collect();
        for &z in &sources {
            for &w in &targets {
                if !out[z].remove(&w) {
                    out[z].insert(w);
                    inc[w].insert(z);
                } else {
                    inc[w].remove(&z);
                }
            }
        }
        for v in [x, y] {
            for w in std::mem::take(&mut out[v]) {
                inc[w].remove(&v);
            }
            for z in std::mem::take(&mut inc[v]) {
                out[z].remove(&v);
            }
            alive[v] = false;
        }
    }
    members.into_iter().zip(alive).filter_map(|(g, a)| a.then_some(g)).collect()
}

fn arrows_by_column(c: &BigradedComplex) -> BTreeMap<i64, Vec<(usize, usize)>> {
    let mut by: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for &(s, d) in &c.differential {
        by.entry(c.generators[s].alexander_rel).or_default().push((s, d));
    }
    by
}

/// The homology as a complex with zero differential whose generators are
/// a homology basis drawn from the input generators.
pub fn homology(c: &BigradedComplex) -> Result<BigradedComplex, StructureError> {
    let defect = c.d_squared_defect();
    if defect != 0 {
        return Err(StructureError::NotAComplex(defect));
    }
    c.check_bigrading()?;
    let arrows = arrows_by_column(c);
    let jobs: Vec<(Vec<usize>, &[(usize, usize)])> = columns(c)
        .into_iter()
        .map(|(a, members)| (members, arrows.get(&a).map_or(&[][..], |v| v.as_slice())))
        .collect();
    #[cfg(feature = "parallel")]
    let survivors: Vec<Vec<usize>> = {
        use rayon::prelude::*;
        jobs.into_par_iter().map(|(m, a)| cancel_column(c, m, a)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let survivors: Vec<Vec<usize>> = jobs.into_iter().map(|(m, a)| cancel_column(c, m, a)).collect();
    let mut keep: Vec<usize> = survivors.into_iter().flatten().collect();
    keep.sort_unstable();
    Ok(BigradedComplex { generators: keep.into_iter().map(|i| c.generators[i].clone()).collect(), differential: vec![] })
}

/// Rank of a dense F₂ matrix given as bit rows, eliminating pivots in the
/// given column order.
fn rank_gf2(mut rows: Vec<Vec<u64>>, col_order: impl Iterator<Item = usize>) -> usize {
    let mut rank = 0;
    for col in col_order {
        let (word, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[word] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// Total homology rank by Gaussian elimination on each column, independent
/// of the cancellation routine.
pub fn homology_rank_by_elimination(c: &BigradedComplex, reversed: bool) -> usize {
    let arrows = arrows_by_column(c);
    let mut total = 0;
    for (a, members) in columns(c) {
        let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let k = members.len();
        let words = k.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; k];
        for &(s, d) in arrows.get(&a).into_iter().flatten() {
            let (s, d) = (local[&s], local[&d]);
            rows[s][d / 64] ^= 1 << (d % 64);
        }
        if reversed {
            rows.reverse();
        }
        let r = if reversed { rank_gf2(rows, (0..k).rev()) } else { rank_gf2(rows, 0..k) };
        total += k - 2 * r;
    }
    total
}

/// ĤFK ranks by absolute Alexander grading and relative δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfkTable {
    pub ranks: BTreeMap<(i64, i64), usize>,
    pub total_rank: usize,
    /// Added to `A_rel` to obtain `A`.
    pub shift_applied: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfkRow {
    #[serde(rename = "A")]
    pub alexander: i64,
    pub delta_rel: i64,
    pub rank: usize,
}

#[derive(Serialize, Deserialize)]
struct HfkJson {
    schema: String,
    total_rank: usize,
    shift_applied: i64,
    rows: Vec<HfkRow>,
}

impl HfkTable {
    pub fn rows(&self) -> Vec<HfkRow> {
        self.ranks.iter().map(|(&(a, d), &rank)| HfkRow { alexander: a, delta_rel: d, rank }).collect()
    }

    /// Rank summed over δ.
    pub fn alexander_rank(&self, a: i64) -> usize {
        self.ranks.range((a, i64::MIN)..=(a, i64::MAX)).map(|(_, r)| r).sum()
    }

    pub fn max_alexander(&self) -> Option<i64> {
        self.ranks.keys().map(|k| k.0).max()
    }

    pub fn delta_range(&self) -> Option<(i64, i64)> {
        let ds = self.ranks.keys().map(|k| k.1);
        Some((ds.clone().min()?, ds.max()?))
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("A\tdelta_rel\trank\n");
        for r in self.rows() {
            let _ = writeln!(s, "{}\t{}\t{}", r.alexander, r.delta_rel, r.rank);
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(HfkJson {
            schema: SCHEMA.into(),
            total_rank: self.total_rank,
            shift_applied: self.shift_applied,
            rows: self.rows(),
        })
        .expect("table serializes")
    }
}

/// Translates `A_rel` so the Alexander rank distribution is symmetric about 0.
pub fn symmetrize(c: &BigradedComplex) -> Result<HfkTable, StructureError> {
    if !c.differential.is_empty() {
        return Err(StructureError::NotAComplex(c.differential.len()));
    }
    let lo = c.generators.iter().map(|g| g.alexander_rel).min().ok_or(StructureError::Empty)?;
    let hi = c.generators.iter().map(|g| g.alexander_rel).max().ok_or(StructureError::Empty)?;
    if (lo + hi) % 2 != 0 {
        return Err(StructureError::OddWidth(hi - lo));
    }
    let shift = -(lo + hi) / 2;
    let mut ranks: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut by_a: BTreeMap<i64, usize> = BTreeMap::new();
    for TensorGenerator { alexander_rel, .. } in &c.generators {
        *by_a.entry(alexander_rel + shift).or_default() += 1;
    }
    if by_a.iter().any(|(a, r)| by_a.get(&-a) != Some(r)) {
        return Err(StructureError::NoSymmetricShift);
    }
    for g in &c.generators {
        *ranks.entry((g.alexander_rel + shift, g.delta_rel())).or_default() += 1;
    }
    Ok(HfkTable { ranks, total_rank: c.generators.len(), shift_applied: shift })
}
