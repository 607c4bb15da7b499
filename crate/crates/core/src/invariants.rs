//! Genus, fiberedness and δ-thickness, read off ĤFK and from closed forms.

use serde::{Deserialize, Serialize};

use crate::cfk::{CfkModel, ModelOrigin};
use crate::homology::HfkTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub genus: i64,
    pub fibered: bool,
    pub thickness: i64,
    pub top_rank: usize,
}

pub fn derive_invariants(t: &HfkTable) -> InvariantReport {
    let genus = t.max_alexander().unwrap_or(0);
    let top_rank = t.alexander_rank(genus);
    let thickness = t.delta_range().map_or(0, |(lo, hi)| hi - lo);
    InvariantReport { genus, fibered: top_rank == 1, thickness, top_rank }
}

/// Genus of the Mazur satellite `Q_n(K)`.
pub fn genus_formula(model: &CfkModel, n: i64) -> i64 {
    let g = model.genus();
    match (model.is_unknot(), n) {
        (true, n) if n <= 0 => -n,
        (true, n) => n + 1,
        (false, n) if n <= -1 => g - n,
        (false, n) => g + n + 1,
    }
}

/// Fiberedness of the Mazur satellite `Q_n(K)`.
pub fn fibered_formula(model: &CfkModel, n: i64) -> bool {
    if model.is_unknot() {
        n != -1
    } else {
        model.is_fibered() && n != -1 && n != 0
    }
}

fn general_thin_thickness(g: i64, n: i64) -> i64 {
    if n <= -2 * g {
        2 * g - n - 1
    } else if n <= 2 * g - 2 {
        4 * g - 2
    } else {
        2 * g + n
    }
}

fn thin_thickness(model: &CfkModel, tau: i64, squares: usize, n: i64) -> i64 {
    if model.is_unknot() {
        return if n <= -1 { -n - 1 } else { n };
    }
    if tau == 1 && squares == 0 && model.genus() == 1 {
        return match n {
            n if n <= -1 => -n + 1,
            0 | 1 => 2,
            n => n + 2,
        };
    }
    general_thin_thickness(model.genus(), n)
}

/// δ-thickness of the Mazur satellite `Q_n(K)` where a closed form is known:
/// thin companions, and positive L-space companions whose gaps satisfy
/// `ℓ₁ ≥ … ≥ ℓ_{k-1} ≥ r_k`.
pub fn thickness_formula(model: &CfkModel, n: i64) -> Option<i64> {
    match &model.origin {
        ModelOrigin::Thin { tau, squares } => Some(thin_thickness(model, *tau, squares.values().sum(), n)),
        ModelOrigin::Lspace(spec) if spec.k() == 0 => Some(thin_thickness(model, model.tau, 0, n)),
        ModelOrigin::Lspace(spec) => {
            if spec.sign != 1 || !spec.satisfies_ell_condition() {
                return None;
            }
            let (g, r2) = (spec.genus(), spec.r2());
            Some(if n <= -2 * g {
                2 * g - n - 1
            } else if n <= g + r2 {
                4 * g - 2
            } else {
                3 * g - r2 + n - 2
            })
        }
        ModelOrigin::Explicit => None,
    }
}
