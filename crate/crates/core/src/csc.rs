//! Cosmetic surgery screen for Mazur satellites.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cfk::CfkModel;
use crate::error::CscError;
use crate::invariants::derive_invariants;
use crate::pipeline::{satellite, satellite_alexander, Pattern};
use crate::poly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CscStatus {
    Verified,
    Exceptional,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    BoyerLines,
    NiWu,
    HanselmanF,
    HanselmanSlopes,
    None,
}

/// A pair of opposite slopes `{r, -r}` not ruled out by the screen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SlopePair {
    OneOver(i64),
    Two,
}

impl fmt::Display for SlopePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopePair::OneOver(1) => f.write_str("±1"),
            SlopePair::OneOver(q) => write!(f, "±1/{q}"),
            SlopePair::Two => f.write_str("±2"),
        }
    }
}

impl Serialize for SlopePair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exceptional Alexander polynomials of thin companions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `2t - 5 + 2t⁻¹`, n = -1.
    SixOne,
    /// `bt² - (4b+2)t + (6b+5) - …`, b ≥ 1, n = -1.
    MinusOneA,
    /// `bt² - (4b-2)t + (6b-5) - …`, b ≥ 2, n = -1.
    MinusOneB,
    /// `(b+1)t² - (4b+6)t + (6b+11) - …`, b ≥ 0, n = -1.
    MinusOneC,
    /// `bt² - 4bt + (6b-1) - …`, b ≥ 1, n = 0.
    ZeroA,
    /// `bt² - 4bt + (6b+1) - …`, b ≥ 1, n = 0.
    ZeroB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub family: Family,
    pub b: Option<i64>,
}

/// Which n = 0 families carry the side condition `τ(K) = -1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TauScope {
    /// No condition on τ(K); the largest exceptional set.
    #[default]
    Unscoped,
    SecondFamily,
    BothFamilies,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CscInputs {
    pub n: i64,
    pub genus: i64,
    pub thickness: i64,
    pub delta_second_derivative: i64,
    pub tau_satellite: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CscVerdict {
    pub status: CscStatus,
    #[serde(rename = "obstruction")]
    pub obstruction_used: Obstruction,
    #[serde(rename = "slopes")]
    pub candidate_slope_pairs: Vec<SlopePair>,
    #[serde(rename = "family")]
    pub matched_exceptional_family: Option<FamilyMatch>,
    pub inputs: CscInputs,
}

pub fn alexander_second_derivative_at_one(p: &LaurentPoly) -> i64 {
    p.second_derivative_at_one()
}

fn quadratic(top: i64, lin: i64, constant: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(2, top), (1, -lin), (0, constant), (-1, -lin), (-2, top)]).symmetric_normalized()
}

fn family_poly(family: Family, b: i64) -> LaurentPoly {
    match family {
        Family::SixOne => LaurentPoly::from_terms([(1, 2), (0, -5), (-1, 2)]).symmetric_normalized(),
        Family::MinusOneA => quadratic(b, 4 * b + 2, 6 * b + 5),
        Family::MinusOneB => quadratic(b, 4 * b - 2, 6 * b - 5),
        Family::MinusOneC => quadratic(b + 1, 4 * b + 6, 6 * b + 11),
        Family::ZeroA => quadratic(b, 4 * b, 6 * b - 1),
        Family::ZeroB => quadratic(b, 4 * b, 6 * b + 1),
    }
}

/// Matches a symmetrically normalized `Δ_K` against the families listed for framing `n`.
pub fn match_family(delta_k: &LaurentPoly, n: i64, tau: i64, scope: TauScope) -> Option<FamilyMatch> {
    let delta_k = delta_k.symmetric_normalized();
    let top = delta_k.coeff(2).abs();
    let candidates: &[(Family, i64)] = match n {
        -1 => &[(Family::SixOne, 0), (Family::MinusOneA, 1), (Family::MinusOneB, 2), (Family::MinusOneC, 0)],
        0 => &[(Family::ZeroA, 1), (Family::ZeroB, 1)],
        _ => &[],
    };
    for &(family, b_min) in candidates {
        let tau_ok = match (family, scope) {
            (Family::ZeroA, TauScope::BothFamilies) | (Family::ZeroB, TauScope::SecondFamily | TauScope::BothFamilies) => {
                tau == -1
            }
            _ => true,
        };
        if !tau_ok {
            continue;
        }
        if family == Family::SixOne {
            if delta_k == family_poly(family, 0) {
                return Some(FamilyMatch { family, b: None });
            }
            continue;
        }
        let b = if family == Family::MinusOneC { top - 1 } else { top };
        if b >= b_min && delta_k == family_poly(family, b) {
            return Some(FamilyMatch { family, b: Some(b) });
        }
    }
    None
}

/// Slope pairs that survive the genus/thickness constraints.
pub fn surviving_slopes(genus: i64, thickness: i64) -> Vec<SlopePair> {
    let mut out = Vec::new();
    if genus >= 2 {
        let q_max = (thickness + 2 * genus).div_euclid(2 * genus * (genus - 1));
        out.extend((1..=q_max).map(SlopePair::OneOver));
    }
    if genus == 2 {
        out.push(SlopePair::Two);
    }
    out
}

pub fn check_csc(
    model: &CfkModel,
    n: i64,
    tau_satellite: Option<i64>,
    scope: TauScope,
) -> Result<CscVerdict, CscError> {
    if model.is_unknot() && n == 0 {
        return Err(CscError::TrivialSatellite);
    }
    let sat = satellite(model, Pattern::Mazur, n)?;
    let inv = derive_invariants(&sat.table);
    let delta_j = satellite_alexander(model, Pattern::Mazur, n)?;
    let inputs = CscInputs {
        n,
        genus: inv.genus,
        thickness: inv.thickness,
        delta_second_derivative: alexander_second_derivative_at_one(&delta_j),
        tau_satellite,
    };
    let verified = |obstruction| CscVerdict {
        status: CscStatus::Verified,
        obstruction_used: obstruction,
        candidate_slope_pairs: vec![],
        matched_exceptional_family: None,
        inputs,
    };
    if inputs.delta_second_derivative != 0 {
        return Ok(verified(Obstruction::BoyerLines));
    }
    if tau_satellite.is_some_and(|t| t != 0) {
        return Ok(verified(Obstruction::NiWu));
    }
    let (g, th) = (inv.genus, inv.thickness);
    if g >= 3 && 2 * g * g - 4 * g - th > 0 {
        return Ok(verified(Obstruction::HanselmanF));
    }
    let slopes = surviving_slopes(g, th);
    if slopes.is_empty() {
        return Ok(verified(Obstruction::HanselmanSlopes));
    }
    let family = if model.is_thin() {
        match_family(&model.alexander_polynomial().map_err(crate::error::StructureError::from)?, n, model.tau, scope)
    } else {
        None
    };
    Ok(CscVerdict {
        status: if family.is_some() { CscStatus::Exceptional } else { CscStatus::Inconclusive },
        obstruction_used: Obstruction::None,
        candidate_slope_pairs: slopes,
        matched_exceptional_family: family,
        inputs,
    })
}
