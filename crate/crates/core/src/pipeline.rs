//! End-to-end satellite computations and sweeps over the framing.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cfd::build_cfd;
use crate::cfk::CfkModel;
use crate::error::StructureError;
use crate::homology::{homology, symmetrize, HfkTable};
use crate::pattern::{cable21_cfa_hat, mazur_cfa_hat, TypeAStructure};
use crate::poly::LaurentPoly;
use crate::tensor::{box_tensor, BigradedComplex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    #[default]
    Mazur,
    Cable21,
}

impl Pattern {
    pub fn type_a(self) -> &'static TypeAStructure {
        static MAZUR: OnceLock<TypeAStructure> = OnceLock::new();
        static CABLE: OnceLock<TypeAStructure> = OnceLock::new();
        match self {
            Pattern::Mazur => MAZUR.get_or_init(mazur_cfa_hat),
            Pattern::Cable21 => CABLE.get_or_init(cable21_cfa_hat),
        }
    }

    /// Algebraic winding number of the pattern in the solid torus.
    pub fn winding_number(self) -> i64 {
        match self {
            Pattern::Mazur => 1,
            Pattern::Cable21 => 2,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Mazur => "mazur",
            Pattern::Cable21 => "cable21",
        })
    }
}

impl FromStr for Pattern {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mazur" => Ok(Pattern::Mazur),
            "cable21" => Ok(Pattern::Cable21),
            other => Err(format!("unknown pattern {other:?} (expected mazur or cable21)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Satellite {
    pub complex: BigradedComplex,
    pub homology: BigradedComplex,
    pub table: HfkTable,
}

pub fn satellite_complex(model: &CfkModel, pattern: Pattern, n: i64) -> Result<BigradedComplex, StructureError> {
    box_tensor(pattern.type_a(), &build_cfd(model, n)?)
}

pub fn satellite(model: &CfkModel, pattern: Pattern, n: i64) -> Result<Satellite, StructureError> {
    let complex = satellite_complex(model, pattern, n)?;
    let homology = homology(&complex)?;
    let table = symmetrize(&homology)?;
    Ok(Satellite { complex, homology, table })
}

pub fn satellite_hfk(model: &CfkModel, pattern: Pattern, n: i64) -> Result<HfkTable, StructureError> {
    satellite(model, pattern, n).map(|s| s.table)
}

/// `Σ (-1)^N t^(A_rel + shift)` over the generators of `c`.
pub fn euler_characteristic(c: &BigradedComplex, shift: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        c.generators.iter().map(|g| (g.alexander_rel + shift, if g.maslov.rem_euclid(2) == 0 { 1 } else { -1 })),
    )
}

/// `Δ_{Q_n(U)}` read off the unknot-companion computation, symmetrically normalized.
pub fn pattern_alexander(pattern: Pattern, n: i64) -> Result<LaurentPoly, StructureError> {
    let s = satellite(&crate::cfk::catalog::unknot(), pattern, n)?;
    Ok(euler_characteristic(&s.homology, s.table.shift_applied).symmetric_normalized())
}

/// `Δ_P(U)(t) · Δ_K(t^w)` with `w` the winding number.
pub fn satellite_alexander(model: &CfkModel, pattern: Pattern, n: i64) -> Result<LaurentPoly, StructureError> {
    let w = pattern.winding_number();
    let dk = model.alexander_polynomial()?;
    let dk_w = LaurentPoly::from_terms(dk.terms().map(|(e, c)| (w * e, c)));
    Ok((&pattern_alexander(pattern, n)? * &dk_w).symmetric_normalized())
}

/// Applies `f` to every framing in `range`, results ordered by `n`.
#[cfg(feature = "parallel")]
pub fn sweep<T, F>(range: std::ops::RangeInclusive<i64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn sweep<T, F>(range: std::ops::RangeInclusive<i64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    sweep_sequential(range, f)
}

pub fn sweep_sequential<T, F: Fn(i64) -> T>(range: std::ops::RangeInclusive<i64>, f: F) -> Vec<T> {
    range.map(f).collect()
}

/// Caps the global worker pool. Must run before the first parallel call;
/// later calls and the sequential build ignore it.
pub fn init_thread_pool(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}
