mod common;

use std::collections::BTreeMap;

use floerbox::cfk::{build_lspace_model, build_thin_model, CfkModel, LspaceSpec};
use floerbox::homology::homology_rank_by_elimination;
use floerbox::pipeline::{euler_characteristic, satellite, satellite_alexander, sweep, Pattern};

/// Thin models with τ ∈ [-2, 2] and at most three squares.
fn thin_matrix() -> Vec<CfkModel> {
    let layouts: [&[(i64, usize)]; 5] = [&[], &[(0, 1)], &[(0, 2)], &[(0, 3)], &[(1, 1), (-1, 1), (0, 1)]];
    let mut out = Vec::new();
    for tau in -2..=2 {
        for layout in layouts {
            let squares: BTreeMap<i64, usize> = layout.iter().copied().collect();
            out.push(build_thin_model(tau, &squares).unwrap());
        }
    }
    out
}

/// L-space staircases of genus at most 6, both signs.
fn lspace_matrix() -> Vec<CfkModel> {
    let lists: [&[i64]; 7] = [&[1], &[2, 1], &[3, 2], &[3, 2, 1], &[4, 3, 1], &[5, 4, 2, 1], &[6, 5, 3, 1]];
    let mut out = Vec::new();
    for sign in [1, -1] {
        for r in lists {
            out.push(build_lspace_model(&LspaceSpec::new(sign, r.to_vec()).unwrap()).unwrap());
        }
    }
    out
}

fn check(model: &CfkModel, pattern: Pattern, n: i64) {
    let s = satellite(model, pattern, n).unwrap();
    assert_eq!(s.complex.d_squared_defect(), 0);
    s.complex.check_bigrading().unwrap();
    let rank = s.homology.generators.len();
    assert_eq!(homology_rank_by_elimination(&s.complex, false), rank);
    assert_eq!(homology_rank_by_elimination(&s.complex, true), rank);
    assert_eq!(rank % 2, 1, "total rank is odd");
    let t = &s.table;
    for &(a, _) in t.ranks.keys() {
        assert_eq!(t.alexander_rank(a), t.alexander_rank(-a));
    }
    // χ of the chain complex, χ of homology and the product formula all agree
    let chi_chain = euler_characteristic(&s.complex, t.shift_applied).symmetric_normalized();
    let chi_hom = euler_characteristic(&s.homology, t.shift_applied).symmetric_normalized();
    assert_eq!(chi_chain, chi_hom);
    assert_eq!(chi_hom, satellite_alexander(model, pattern, n).unwrap());
}

#[test]
fn mazur_matrix() {
    let models: Vec<CfkModel> = thin_matrix().into_iter().chain(lspace_matrix()).collect();
    for model in &models {
        sweep(-12..=12, |n| check(model, Pattern::Mazur, n));
    }
}

#[test]
fn cable_matrix() {
    for model in &thin_matrix() {
        sweep(-12..=12, |n| check(model, Pattern::Cable21, n));
    }
}

#[test]
fn output_is_deterministic() {
    let model = thin_matrix().pop().unwrap();
    let a = satellite(&model, Pattern::Mazur, -3).unwrap();
    let b = satellite(&model, Pattern::Mazur, -3).unwrap();
    assert_eq!(a.homology, b.homology);
    assert_eq!(a.table.to_tsv(), b.table.to_tsv());
}

#[test]
fn thickness_grows_along_the_unstable_chain() {
    for (_, model) in common::companions() {
        for n in [-40i64, -25, 25, 40] {
            let s = satellite(&model, Pattern::Mazur, n).unwrap();
            let (lo, hi) = s.table.delta_range().unwrap();
            assert!(hi - lo >= (2 * model.tau - n).abs() - 1);
        }
    }
}
