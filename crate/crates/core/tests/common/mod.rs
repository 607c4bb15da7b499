#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use floerbox::algebra::AlgebraElement::{self, *};
use floerbox::cfd::iota0_grading;
use floerbox::cfk::catalog::*;
use floerbox::cfk::CfkModel;
use floerbox::grading::GroupElement;
use floerbox::tensor::BigradedComplex;

pub fn companions() -> Vec<(&'static str, CfkModel)> {
    vec![
        ("unknot", unknot()),
        ("rht", right_trefoil()),
        ("lht", left_trefoil()),
        ("figure-eight", figure_eight()),
        ("thin-g2", thin_genus_two()),
        ("T(2,5)", torus_2_5()),
        ("T(3,4)", torus_3_4()),
    ]
}

/// Generator name → `A_rel`, with multiplicity.
pub fn a_rel_multiset(c: &BigradedComplex) -> BTreeMap<String, Vec<i64>> {
    let mut m: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for g in &c.generators {
        m.entry(g.name.clone()).or_default().push(g.alexander_rel);
    }
    m
}

fn t(a: &str, d: &str) -> String {
    format!("{a}⊠{d}")
}

/// Surviving generators for the right-handed trefoil at framing `n < -1`.
pub fn rht_survivors(n: i64) -> BTreeMap<String, Vec<i64>> {
    assert!(n < -1);
    let mut rows: Vec<(String, i64)> = vec![
        (t("x0", "eta0"), 1),
        (t("x2", "eta0"), 1 + n),
        (t("y2", "eta0"), 2 + n),
        (t("x4", "eta0"), 2 * n + 2),
        (t("y4", "eta0"), 2 * n + 3),
        (t("x0", "eta1"), 0),
        (t("y2", "eta1"), n + 1),
        (t("y1", "lambda1^eta1"), 1),
        (t("x5", "lambda1^eta1"), 1),
        (t("y5", "lambda1^eta1"), 2),
        (t("x6", "lambda1^eta1"), n + 2),
        (t("y6", "lambda1^eta1"), n + 3),
        (t("y1", "kappa1^eta1"), n + 2),
        (t("x5", "kappa1^eta1"), n + 2),
        (t("y5", "kappa1^eta1"), n + 3),
        (t("x6", "kappa1^eta1"), 2 * n + 3),
        (t("y6", "kappa1^eta1"), 2 * n + 4),
    ];
    for j in 2..=2 - n {
        let mu = format!("mu{j}");
        rows.push((t("x1", &mu), n + j - 2));
        rows.push((t("y1", &mu), n + j));
        rows.push((t("x3", &mu), 2 * n + j - 1));
        rows.push((t("y3", &mu), 2 * n + j));
    }
    for j in 1..=2 - n {
        let mu = format!("mu{j}");
        rows.push((t("x5", &mu), n + j));
        rows.push((t("y5", &mu), n + j + 1));
        rows.push((t("x6", &mu), 2 * n + j + 1));
        rows.push((t("y6", &mu), 2 * n + j + 2));
    }
    let mut m: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for (name, a) in rows {
        m.entry(name).or_default().push(a);
    }
    m
}

pub type Extremes = ((i64, BTreeSet<String>), (i64, BTreeSet<String>));

fn set(names: &[String]) -> BTreeSet<String> {
    names.iter().cloned().collect()
}

/// Minimal and maximal `A_rel` with the generators attaining them, right-handed trefoil.
pub fn rht_extremes(n: i64) -> Extremes {
    let mu = |j: i64| format!("mu{j}");
    match n {
        n if n < -1 => (
            (2 * n + 1, set(&[t("x3", "mu2")])),
            (3, set(&[t("y5", &mu(2 - n))])),
        ),
        -1 => ((-1, set(&[t("x1", "mu2"), t("x3", "mu2")])), (3, set(&[t("y5", "mu3"), t("y6", "mu3")]))),
        0 => (
            (0, set(&[t("x0", "eta1"), t("x1", "mu2")])),
            (4, set(&[t("y6", "kappa1^eta1"), t("y6", "mu2")])),
        ),
        n => ((0, set(&[t("x0", "eta1")])), (2 * n + 4, set(&[t("y6", "kappa1^eta1")]))),
    }
}

/// Same for the unknot companion, where defined.
pub fn unknot_extremes(n: i64) -> Option<Extremes> {
    let mu = |j: i64| format!("mu{j}");
    match n {
        n if n < -1 => Some(((2 * n + 2, set(&[t("x3", "mu2")])), (2, set(&[t("y5", &mu(-n))])))),
        1 => Some(((1, set(&[t("x2", "eta0")])), (5, set(&[t("y6", "mu1")])))),
        n if n > 1 => Some(((1, set(&[t("x1", &mu(n - 1))])), (2 * n + 3, set(&[t("y6", "mu1")])))),
        _ => None,
    }
}

pub fn extremes(c: &BigradedComplex) -> Extremes {
    let lo = c.generators.iter().map(|g| g.alexander_rel).min().unwrap();
    let hi = c.generators.iter().map(|g| g.alexander_rel).max().unwrap();
    let at = |a: i64| c.generators.iter().filter(|g| g.alexander_rel == a).map(|g| g.name.clone()).collect();
    ((lo, at(lo)), (hi, at(hi)))
}

fn rho(e: AlgebraElement) -> GroupElement {
    e.grading().unwrap()
}

/// Grading of `y` for a coefficient map `x → D_ρ y`.
pub fn forward(r: AlgebraElement, x: GroupElement) -> GroupElement {
    GroupElement::LAMBDA.inv() * rho(r).inv() * x
}

/// Grading of `x` for a coefficient map `x → D_ρ y`.
pub fn backward(r: AlgebraElement, y: GroupElement) -> GroupElement {
    rho(r) * GroupElement::LAMBDA * y
}

#[derive(Clone, Copy, Debug)]
pub enum DSide {
    /// ι₀ generator with gradings `(M, A)`.
    Iota0,
    /// `λ_j` on a horizontal chain whose source has `(M, A)`.
    Lambda(i64),
    /// `κ_j` on a vertical chain whose source has `(M, A)`.
    Kappa(i64),
    /// `μ_j` on the unstable chain, `n < 2τ`.
    MuBelow(i64),
    /// `μ_j` on the unstable chain, `n > 2τ`.
    MuAbove(i64),
}

/// Grading of a D-side generator from the coefficient-map rules alone.
pub fn d_grading(side: DSide, m: i64, a: i64, tau: i64) -> GroupElement {
    let s = iota0_grading(m, a);
    let xi0 = iota0_grading(0, tau);
    match side {
        DSide::Iota0 => s,
        DSide::Kappa(j) => (1..j).fold(forward(Rho1, s), |k, _| backward(Rho23, k)),
        DSide::Lambda(j) => (1..j).fold(forward(Rho3, s), |l, _| forward(Rho23, l)),
        DSide::MuBelow(j) => (1..j).fold(forward(Rho1, xi0), |u, _| backward(Rho23, u)),
        DSide::MuAbove(j) => (1..j).fold(forward(Rho123, xi0), |u, _| forward(Rho23, u)),
    }
}

/// Closed-form `(N, A_rel)` of `x_A ⊠ x_D`.
pub fn coset_grading_oracle(a_gen: &str, side: DSide, m: i64, a: i64, n: i64, tau: i64) -> Option<(i64, i64)> {
    use DSide::*;
    Some(match (a_gen, side) {
        ("x0", Iota0) => (m - 2 * a, -a),
        ("x2", Iota0) => (m + 1, -a + n),
        ("y2", Iota0) => (m, -a + n + 1),
        ("x4", Iota0) => (m + 2 * a - 2 * n + 1, -a + 2 * n + 1),
        ("y4", Iota0) => (m + 2 * a - 2 * n, -a + 2 * n + 2),
        ("x1", Lambda(j)) => (m - 2 * a, -a - j),
        ("y1", Lambda(j)) => (m - 2 * a - 1, -a - j + 2),
        ("x1", Kappa(j)) => (m, -a + j + n - 1),
        ("y1", Kappa(j)) => (m - 1, -a + j + n + 1),
        ("x3", Lambda(j)) => (m + 2 * j, -a - j + n + 1),
        ("y3", Lambda(j)) => (m + 2 * j - 1, -a - j + n + 2),
        ("x3", Kappa(j)) => (m + 2 * a - 2 * j - 2 * n + 2, -a + j + 2 * n),
        ("y3", Kappa(j)) => (m + 2 * a - 2 * j - 2 * n + 1, -a + j + 2 * n + 1),
        ("x5", Lambda(j)) => (m - 2 * a - 1, -a - j + 2),
        ("y5", Lambda(j)) => (m - 2 * a - 2, -a - j + 3),
        ("x5", Kappa(j)) => (m - 1, -a + j + n + 1),
        ("y5", Kappa(j)) => (m - 2, -a + j + n + 2),
        ("x6", Lambda(j)) => (m + 2 * j - 3, -a - j + n + 3),
        ("y6", Lambda(j)) => (m + 2 * j - 4, -a - j + n + 4),
        ("x6", Kappa(j)) => (m + 2 * a - 2 * j - 2 * n - 1, -a + j + 2 * n + 2),
        ("y6", Kappa(j)) => (m + 2 * a - 2 * j - 2 * n - 2, -a + j + 2 * n + 3),
        ("x1", MuBelow(j)) => (0, -tau + j + n - 1),
        ("y1", MuBelow(j)) => (-1, -tau + j + n + 1),
        ("x3", MuBelow(j)) => (2 * tau - 2 * j - 2 * n + 2, -tau + j + 2 * n),
        ("y3", MuBelow(j)) => (2 * tau - 2 * j - 2 * n + 1, -tau + j + 2 * n + 1),
        ("x5", MuBelow(j)) => (-1, -tau + j + n + 1),
        ("y5", MuBelow(j)) => (-2, -tau + j + n + 2),
        ("x6", MuBelow(j)) => (2 * tau - 2 * j - 2 * n - 1, -tau + j + 2 * n + 2),
        ("y6", MuBelow(j)) => (2 * tau - 2 * j - 2 * n - 2, -tau + j + 2 * n + 3),
        ("x1", MuAbove(j)) => (1, -tau - j + n),
        ("y1", MuAbove(j)) => (0, -tau - j + n + 2),
        ("x3", MuAbove(j)) => (2 * tau + 2 * j - 2 * n + 1, -tau - j + 2 * n + 1),
        ("y3", MuAbove(j)) => (2 * tau + 2 * j - 2 * n, -tau - j + 2 * n + 2),
        ("x5", MuAbove(j)) => (0, -tau - j + n + 2),
        ("y5", MuAbove(j)) => (-1, -tau - j + n + 3),
        ("x6", MuAbove(j)) => (2 * tau + 2 * j - 2 * n - 2, -tau - j + 2 * n + 3),
        ("y6", MuAbove(j)) => (2 * tau + 2 * j - 2 * n - 3, -tau - j + 2 * n + 4),
        _ => return None,
    })
}

pub const IOTA0_A: [&str; 5] = ["x0", "x2", "y2", "x4", "y4"];
pub const IOTA1_A: [&str; 8] = ["x1", "y1", "x3", "y3", "x5", "y5", "x6", "y6"];

fn pairs(list: &[(&str, &str, &str, &str)]) -> BTreeSet<(String, String)> {
    list.iter().map(|&(a, d, b, e)| (t(a, d), t(b, e))).collect()
}

/// The case table of differentials for a one-step staircase companion
/// (both trefoils), as `(src, dst)` pairs.
pub fn trefoil_census(tau: i64, n: i64) -> BTreeSet<(String, String)> {
    // names of the staircase pieces in the model
    let (v_src, h_dst, kappa, lambda) = if tau == 1 {
        ("eta1", "xi0", "kappa1^eta1", "lambda1^eta1")
    } else {
        ("eta0", "eta1", "kappa1^eta0", "lambda1^xi0")
    };
    let mut out = pairs(&[
        ("x1", lambda, "x0", h_dst),
        ("x3", lambda, "y2", h_dst),
        ("x2", v_src, "x1", kappa),
        ("x4", v_src, "x3", kappa),
        ("y4", v_src, "y3", kappa),
    ]);
    let epsilon = tau.signum();
    let m = 2 * tau - n;
    let mu_m = format!("mu{}", m.abs());
    if m > 0 {
        out.extend(pairs(&[("x2", "xi0", "x1", "mu1"), ("x4", "xi0", "x3", "mu1"), ("y4", "xi0", "y3", "mu1")]));
        if epsilon == 1 {
            out.extend(pairs(&[("y3", lambda, "y1", "mu1")]));
        }
    } else if m == 0 {
        out.extend(pairs(&[("x2", "xi0", "x0", "eta0"), ("x4", "xi0", "y2", "eta0")]));
        if epsilon == -1 {
            out.extend(pairs(&[("y4", "xi0", "y1", kappa)]));
        }
    } else {
        out.extend(pairs(&[("x1", &mu_m, "x0", "eta0"), ("x3", &mu_m, "y2", "eta0")]));
        if epsilon == -1 {
            out.extend(pairs(&[("y3", &mu_m, "y1", kappa)]));
        }
    }
    out
}

/// Nontrivial differentials on a square summand with global index `idx`.
pub fn square_arrows(idx: usize) -> BTreeSet<(String, String)> {
    let s = |k: u8| format!("s{k}_{idx}");
    let (kappa, kappa2) = (format!("kappa1^s1_{idx}"), format!("kappa1^s2_{idx}"));
    let (lambda, lambda2) = (format!("lambda1^s1_{idx}"), format!("lambda1^s3_{idx}"));
    [
        ("x1", &lambda, "x0", s(2)),
        ("x1", &lambda2, "x0", s(4)),
        ("x3", &lambda, "y2", s(2)),
        ("x3", &lambda2, "y2", s(4)),
        ("x2", &s(1), "x1", kappa.clone()),
        ("x2", &s(2), "x1", kappa2.clone()),
        ("x4", &s(1), "x3", kappa.clone()),
        ("x4", &s(2), "x3", kappa2.clone()),
        ("y4", &s(1), "y3", kappa.clone()),
        ("y4", &s(2), "y3", kappa2.clone()),
        ("y3", &lambda, "y1", kappa2.clone()),
    ]
    .into_iter()
    .map(|(a, d, b, e)| (t(a, d), t(b, &e)))
    .collect()
}

/// Surviving generators of a square summand centered at `a` with their `δ_rel`.
pub fn square_summand_survivors(idx: usize, a: i64, tau: i64, n: i64) -> BTreeMap<String, i64> {
    let s = |k: u8| format!("s{k}_{idx}");
    let (k1, k2) = (format!("kappa1^s1_{idx}"), format!("kappa1^s2_{idx}"));
    let (l1, l2) = (format!("lambda1^s1_{idx}"), format!("lambda1^s3_{idx}"));
    let base = -tau + n + 1;
    let lo = -tau - 2 * a;
    let hi = -tau + 2 * a;
    [
        ("x2", s(3), base),
        ("x2", s(4), base),
        ("x0", s(1), lo),
        ("x0", s(3), lo + 2),
        ("x4", s(3), hi),
        ("x4", s(4), hi + 2),
        ("y2", s(1), base),
        ("y2", s(3), base),
        ("y4", s(3), hi),
        ("y4", s(4), hi + 2),
        ("x5", k1.clone(), base),
        ("y5", k1.clone(), base),
        ("x6", k1.clone(), hi),
        ("y6", k1.clone(), hi),
        ("x5", k2.clone(), base),
        ("y5", k2.clone(), base),
        ("x6", k2.clone(), hi + 2),
        ("y6", k2.clone(), hi + 2),
        ("y1", k1.clone(), base),
        ("x5", l1.clone(), lo),
        ("y5", l1.clone(), lo),
        ("x6", l1.clone(), base),
        ("y6", l1.clone(), base),
        ("x5", l2.clone(), lo + 2),
        ("y5", l2.clone(), lo + 2),
        ("x6", l2.clone(), base),
        ("y6", l2.clone(), base),
        ("y1", l1.clone(), lo),
        ("y1", l2.clone(), lo + 2),
        ("y3", l2.clone(), base + 1),
    ]
    .into_iter()
    .map(|(x, d, delta)| (t(x, &d), delta))
    .collect()
}

/// Generators of a complex that live on square summand `idx`.
pub fn on_square(name: &str, idx: usize) -> bool {
    let d = name.split('⊠').nth(1).unwrap();
    d.ends_with(&format!("s1_{idx}"))
        || d.ends_with(&format!("s2_{idx}"))
        || d.ends_with(&format!("s3_{idx}"))
        || d.ends_with(&format!("s4_{idx}"))
}

pub const ALLOWED_SEQUENCES: [&[AlgebraElement]; 5] =
    [&[Rho1], &[Rho2], &[Rho12], &[Rho2, Rho1], &[Rho12, Rho1]];
