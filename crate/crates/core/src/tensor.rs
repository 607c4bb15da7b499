//! Box tensor product of a bounded type A structure with a type D structure.

use std::collections::HashMap;

use crate::algebra::AlgebraElement;
use crate::cfd::TypeDStructure;
use crate::error::StructureError;
use crate::grading::DoubleCosetContext;
use crate::pattern::TypeAStructure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorGenerator {
    pub name: String,
    /// z-normalized Maslov grading.
    pub maslov: i64,
    /// Alexander grading up to an overall translation.
    pub alexander_rel: i64,
}

impl TensorGenerator {
    pub fn delta_rel(&self) -> i64 {
        self.maslov + self.alexander_rel
    }
}

/// An F₂ complex with `(N, A_rel)` bigrading; arrows are `(src, dst)` indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedComplex {
    pub generators: Vec<TensorGenerator>,
    pub differential: Vec<(usize, usize)>,
}

/// One pairing of an A-operation with a D-path, before mod-2 reduction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusArrow {
    pub src: String,
    pub dst: String,
    pub sequence: Vec<AlgebraElement>,
}

impl BigradedComplex {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Every arrow lowers `N` by one and preserves `A_rel`.
    pub fn check_bigrading(&self) -> Result<(), StructureError> {
        for &(s, d) in &self.differential {
            let (gs, gd) = (&self.generators[s], &self.generators[d]);
            if gd.maslov != gs.maslov - 1 || gd.alexander_rel != gs.alexander_rel {
                return Err(StructureError::BadArrowGrading { src: gs.name.clone(), dst: gd.name.clone() });
            }
        }
        Ok(())
    }

    /// Number of nonzero entries of `∂²` over F₂.
    pub fn d_squared_defect(&self) -> usize {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.generators.len()];
        for &(s, d) in &self.differential {
            out[s].push(d);
        }
        let mut parity: HashMap<(usize, usize), bool> = HashMap::new();
        for (s, mids) in out.iter().enumerate() {
            for &m in mids {
                for &t in &out[m] {
                    *parity.entry((s, t)).or_default() ^= true;
                }
            }
        }
        parity.values().filter(|&&odd| odd).count()
    }
}

struct Pairing {
    index: Vec<Vec<Option<usize>>>,
    generators: Vec<TensorGenerator>,
}

fn pair_generators(a: &TypeAStructure, d: &TypeDStructure) -> Result<Pairing, StructureError> {
    let ctx = DoubleCosetContext::new(a.h_a, d.h_d)?;
    let mut index = vec![vec![None; d.generators.len()]; a.generators.len()];
    let mut generators = Vec::new();
    for (i, x) in a.generators.iter().enumerate() {
        for (j, y) in d.generators.iter().enumerate() {
            if x.idempotent != y.idempotent {
                continue;
            }
            let (maslov, alexander_rel) = ctx.normalize(&(x.grading * y.grading))?;
            index[i][j] = Some(generators.len());
            generators.push(TensorGenerator { name: format!("{}⊠{}", x.name, y.name), maslov, alexander_rel });
        }
    }
    Ok(Pairing { index, generators })
}

/// All D-paths starting at `start` whose labels read `seq`, by endpoint.
fn paths(d: &TypeDStructure, start: usize, seq: &[AlgebraElement], out: &mut Vec<usize>) {
    match seq.split_first() {
        None => out.push(start),
        Some((first, rest)) => {
            for e in d.out_edges(start) {
                if e.label == *first {
                    paths(d, e.dst, rest, out);
                }
            }
        }
    }
}

fn raw_arrows(a: &TypeAStructure, d: &TypeDStructure, index: &[Vec<Option<usize>>]) -> Vec<(usize, usize, usize)> {
    let mut arrows = Vec::new();
    let mut ends = Vec::new();
    for (k, op) in a.operations.iter().enumerate() {
        if op.u_power != 0 {
            continue;
        }
        for (j, slot) in index[op.input].iter().enumerate() {
            let Some(src) = *slot else { continue };
            ends.clear();
            paths(d, j, &op.sequence, &mut ends);
            for &end in &ends {
                if let Some(dst) = index[op.output][end] {
                    arrows.push((src, dst, k));
                }
            }
        }
    }
    arrows
}

fn require_bounded(a: &TypeAStructure) -> Result<(), StructureError> {
    if a.is_bounded() {
        Ok(())
    } else {
        Err(StructureError::Model(crate::error::ModelError::Invalid(
            "type A structure is not bounded".into(),
        )))
    }
}

/// `ĈFA ⊠ ĈFD` with arrows reduced mod 2 and `(N, A_rel)` gradings.
pub fn box_tensor(a: &TypeAStructure, d: &TypeDStructure) -> Result<BigradedComplex, StructureError> {
    require_bounded(a)?;
    let Pairing { index, generators } = pair_generators(a, d)?;
    let mut counts: HashMap<(usize, usize), u32> = HashMap::new();
    for (s, t, _) in raw_arrows(a, d, &index) {
        *counts.entry((s, t)).or_default() += 1;
    }
    let mut differential: Vec<(usize, usize)> =
        counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(k, _)| k).collect();
    differential.sort_unstable();
    let complex = BigradedComplex { generators, differential };
    complex.check_bigrading()?;
    Ok(complex)
}

/// The unreduced list of pairings, sorted for diffing.
pub fn differential_census(a: &TypeAStructure, d: &TypeDStructure) -> Result<Vec<CensusArrow>, StructureError> {
    require_bounded(a)?;
    let Pairing { index, generators } = pair_generators(a, d)?;
    let mut out: Vec<CensusArrow> = raw_arrows(a, d, &index)
        .into_iter()
        .map(|(s, t, k)| CensusArrow {
            src: generators[s].name.clone(),
            dst: generators[t].name.clone(),
            sequence: a.operations[k].sequence.clone(),
        })
        .collect();
    out.sort();
    Ok(out)
}
