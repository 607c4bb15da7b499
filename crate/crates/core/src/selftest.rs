//! Golden checks runnable from the command line.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cfd::build_cfd;
use crate::cfk::catalog::*;
use crate::cfk::{build_thin_model, CfkModel};
use crate::pattern::mazur_cfa_hat;
use crate::pipeline::{satellite, satellite_complex, Pattern};
use crate::tensor::{differential_census, BigradedComplex};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn t(a: &str, d: &str) -> String {
    format!("{a}⊠{d}")
}

/// Closed-form `(N, A_rel)` for `x_A ⊠ x_D` where `x_D` is an ι₀ generator
/// `(M, A)`, a chain element `κ_j` / `λ_j` whose source has `(M, A)`, or `μ_j`.
fn closed_form(x: &str, d: DKind, n: i64, tau: i64) -> Option<(i64, i64)> {
    use DKind::*;
    Some(match (x, d) {
        ("x0", Iota0(m, a)) => (m - 2 * a, -a),
        ("x2", Iota0(m, a)) => (m + 1, -a + n),
        ("y2", Iota0(m, a)) => (m, -a + n + 1),
        ("x4", Iota0(m, a)) => (m + 2 * a - 2 * n + 1, -a + 2 * n + 1),
        ("y4", Iota0(m, a)) => (m + 2 * a - 2 * n, -a + 2 * n + 2),
        ("x1", Lambda(m, a, j)) => (m - 2 * a, -a - j),
        ("y1", Lambda(m, a, j)) => (m - 2 * a - 1, -a - j + 2),
        ("x3", Lambda(m, a, j)) => (m + 2 * j, -a - j + n + 1),
        ("y3", Lambda(m, a, j)) => (m + 2 * j - 1, -a - j + n + 2),
        ("x5", Lambda(m, a, j)) => (m - 2 * a - 1, -a - j + 2),
        ("y5", Lambda(m, a, j)) => (m - 2 * a - 2, -a - j + 3),
        ("x6", Lambda(m, a, j)) => (m + 2 * j - 3, -a - j + n + 3),
        ("y6", Lambda(m, a, j)) => (m + 2 * j - 4, -a - j + n + 4),
        ("x1", Kappa(m, a, j)) => (m, -a + j + n - 1),
        ("y1", Kappa(m, a, j)) => (m - 1, -a + j + n + 1),
        ("x3", Kappa(m, a, j)) => (m + 2 * a - 2 * j - 2 * n + 2, -a + j + 2 * n),
        ("y3", Kappa(m, a, j)) => (m + 2 * a - 2 * j - 2 * n + 1, -a + j + 2 * n + 1),
        ("x5", Kappa(m, a, j)) => (m - 1, -a + j + n + 1),
        ("y5", Kappa(m, a, j)) => (m - 2, -a + j + n + 2),
        ("x6", Kappa(m, a, j)) => (m + 2 * a - 2 * j - 2 * n - 1, -a + j + 2 * n + 2),
        ("y6", Kappa(m, a, j)) => (m + 2 * a - 2 * j - 2 * n - 2, -a + j + 2 * n + 3),
        (x, Mu(j)) if n < 2 * tau => {
            let base = -tau + j;
            match x {
                "x1" => (0, base + n - 1),
                "y1" => (-1, base + n + 1),
                "x3" => (2 * tau - 2 * j - 2 * n + 2, base + 2 * n),
                "y3" => (2 * tau - 2 * j - 2 * n + 1, base + 2 * n + 1),
                "x5" => (-1, base + n + 1),
                "y5" => (-2, base + n + 2),
                "x6" => (2 * tau - 2 * j - 2 * n - 1, base + 2 * n + 2),
                "y6" => (2 * tau - 2 * j - 2 * n - 2, base + 2 * n + 3),
                _ => return None,
            }
        }
        (x, Mu(j)) => {
            let base = -tau - j;
            match x {
                "x1" => (1, base + n),
                "y1" => (0, base + n + 2),
                "x3" => (2 * tau + 2 * j - 2 * n + 1, base + 2 * n + 1),
                "y3" => (2 * tau + 2 * j - 2 * n, base + 2 * n + 2),
                "x5" => (0, base + n + 2),
                "y5" => (-1, base + n + 3),
                "x6" => (2 * tau + 2 * j - 2 * n - 2, base + 2 * n + 3),
                "y6" => (2 * tau + 2 * j - 2 * n - 3, base + 2 * n + 4),
                _ => return None,
            }
        }
        _ => return None,
    })
}

#[derive(Clone, Copy, Debug)]
enum DKind {
    Iota0(i64, i64),
    Lambda(i64, i64, i64),
    Kappa(i64, i64, i64),
    Mu(i64),
}

fn classify(model: &CfkModel, d: &str) -> Option<DKind> {
    let grading = |name: &str| model.index_of(name).map(|i| (model.generators[i].maslov, model.generators[i].alexander));
    if let Some((m, a)) = grading(d) {
        return Some(DKind::Iota0(m, a));
    }
    if let Some(j) = d.strip_prefix("mu") {
        return j.parse().ok().map(DKind::Mu);
    }
    let (head, src) = d.split_once('^')?;
    let (m, a) = grading(src)?;
    if let Some(j) = head.strip_prefix("kappa") {
        return j.parse().ok().map(|j| DKind::Kappa(m, a, j));
    }
    head.strip_prefix("lambda")?.parse().ok().map(|j| DKind::Lambda(m, a, j))
}

fn tensor_gradings() -> Result<(), String> {
    let models = [right_trefoil(), left_trefoil(), figure_eight(), thin_genus_two(), torus_2_7(), unknot()];
    for model in &models {
        for n in -5..=5 {
            if n == 2 * model.tau {
                continue;
            }
            let c = satellite_complex(model, Pattern::Mazur, n).map_err(|e| e.to_string())?;
            for g in &c.generators {
                let (x, d) = g.name.split_once('⊠').ok_or("unnamed generator")?;
                let kind = classify(model, d).ok_or_else(|| format!("cannot classify {d}"))?;
                let want = closed_form(x, kind, n, model.tau).ok_or_else(|| format!("no closed form for {}", g.name))?;
                if (g.maslov, g.alexander_rel) != want {
                    return Err(format!("{} at n = {n}: got {:?}, want {want:?}", g.name, (g.maslov, g.alexander_rel)));
                }
            }
        }
    }
    Ok(())
}

fn names_at(c: &BigradedComplex, a: i64) -> BTreeSet<String> {
    c.generators.iter().filter(|g| g.alexander_rel == a).map(|g| g.name.clone()).collect()
}

fn trefoil_survivors() -> Result<(), String> {
    for n in [-2i64, -3, -4] {
        let s = satellite(&right_trefoil(), Pattern::Mazur, n).map_err(|e| e.to_string())?;
        let mut want: Vec<(String, i64)> = vec![
            (t("x0", "eta0"), 1),
            (t("x2", "eta0"), 1 + n),
            (t("y2", "eta0"), 2 + n),
            (t("x4", "eta0"), 2 * n + 2),
            (t("y4", "eta0"), 2 * n + 3),
            (t("x0", "eta1"), 0),
            (t("y2", "eta1"), n + 1),
        ];
        for (x, a) in [("y1", 1), ("x5", 1), ("y5", 2), ("x6", n + 2), ("y6", n + 3)] {
            want.push((t(x, "lambda1^eta1"), a));
        }
        for (x, a) in [("y1", n + 2), ("x5", n + 2), ("y5", n + 3), ("x6", 2 * n + 3), ("y6", 2 * n + 4)] {
            want.push((t(x, "kappa1^eta1"), a));
        }
        for j in 1..=2 - n {
            let mu = format!("mu{j}");
            if j >= 2 {
                for (x, a) in [("x1", n + j - 2), ("y1", n + j), ("x3", 2 * n + j - 1), ("y3", 2 * n + j)] {
                    want.push((t(x, &mu), a));
                }
            }
            for (x, a) in [("x5", n + j), ("y5", n + j + 1), ("x6", 2 * n + j + 1), ("y6", 2 * n + j + 2)] {
                want.push((t(x, &mu), a));
            }
        }
        want.sort();
        let mut got: Vec<(String, i64)> = s.homology.generators.iter().map(|g| (g.name.clone(), g.alexander_rel)).collect();
        got.sort();
        if got != want {
            return Err(format!("n = {n}: survivors differ"));
        }
    }
    Ok(())
}

fn trefoil_extremes() -> Result<(), String> {
    let set = |v: &[String]| v.iter().cloned().collect::<BTreeSet<_>>();
    for n in -4..=5i64 {
        let s = satellite(&right_trefoil(), Pattern::Mazur, n).map_err(|e| e.to_string())?;
        let lo = s.homology.generators.iter().map(|g| g.alexander_rel).min().unwrap_or(0);
        let hi = s.homology.generators.iter().map(|g| g.alexander_rel).max().unwrap_or(0);
        let mu = |j: i64| t("y5", &format!("mu{j}"));
        let want = match n {
            n if n < -1 => ((2 * n + 1, set(&[t("x3", "mu2")])), (3, set(&[mu(2 - n)]))),
            -1 => ((-1, set(&[t("x1", "mu2"), t("x3", "mu2")])), (3, set(&[mu(3), t("y6", "mu3")]))),
            0 => ((0, set(&[t("x0", "eta1"), t("x1", "mu2")])), (4, set(&[t("y6", "kappa1^eta1"), t("y6", "mu2")]))),
            n => ((0, set(&[t("x0", "eta1")])), (2 * n + 4, set(&[t("y6", "kappa1^eta1")]))),
        };
        if ((lo, names_at(&s.homology, lo)), (hi, names_at(&s.homology, hi))) != want {
            return Err(format!("n = {n}: extremes differ"));
        }
    }
    Ok(())
}

fn square_homology() -> Result<(), String> {
    for (tau, center) in [(0i64, 0i64), (1, 0), (-1, 1), (2, 1), (0, 2)] {
        let mut squares = BTreeMap::new();
        squares.insert(center, 1);
        squares.insert(-center, 1);
        let model = build_thin_model(tau, &squares).map_err(|e| e.to_string())?;
        for n in -4..=4 {
            let s = satellite(&model, Pattern::Mazur, n).map_err(|e| e.to_string())?;
            let a = model.generators[model.index_of("s1_1").ok_or("missing square")?].alexander;
            let (base, lo, hi) = (-tau + n + 1, -tau - 2 * a, -tau + 2 * a);
            let (k1, k2, l1, l2) = ("kappa1^s1_1", "kappa1^s2_1", "lambda1^s1_1", "lambda1^s3_1");
            let want: BTreeMap<String, i64> = [
                ("x2", "s3_1", base),
                ("x2", "s4_1", base),
                ("x0", "s1_1", lo),
                ("x0", "s3_1", lo + 2),
                ("x4", "s3_1", hi),
                ("x4", "s4_1", hi + 2),
                ("y2", "s1_1", base),
                ("y2", "s3_1", base),
                ("y4", "s3_1", hi),
                ("y4", "s4_1", hi + 2),
                ("x5", k1, base),
                ("y5", k1, base),
                ("x6", k1, hi),
                ("y6", k1, hi),
                ("x5", k2, base),
                ("y5", k2, base),
                ("x6", k2, hi + 2),
                ("y6", k2, hi + 2),
                ("y1", k1, base),
                ("x5", l1, lo),
                ("y5", l1, lo),
                ("x6", l1, base),
                ("y6", l1, base),
                ("x5", l2, lo + 2),
                ("y5", l2, lo + 2),
                ("x6", l2, base),
                ("y6", l2, base),
                ("y1", l1, lo),
                ("y1", l2, lo + 2),
                ("y3", l2, base + 1),
            ]
            .into_iter()
            .map(|(x, d, delta)| (t(x, d), delta))
            .collect();
            let got: BTreeMap<String, i64> = s
                .homology
                .generators
                .iter()
                .filter(|g| g.name.ends_with("_1"))
                .map(|g| (g.name.clone(), g.delta_rel()))
                .collect();
            if got != want {
                return Err(format!("τ = {tau}, center {center}, n = {n}: square survivors differ"));
            }
        }
    }
    Ok(())
}

fn census() -> Result<(), String> {
    let pattern = mazur_cfa_hat();
    for n in [-1i64, 2, 3] {
        let d = build_cfd(&right_trefoil(), n).map_err(|e| e.to_string())?;
        let got: BTreeSet<(String, String)> =
            differential_census(&pattern, &d).map_err(|e| e.to_string())?.into_iter().map(|c| (c.src, c.dst)).collect();
        let mut want: BTreeSet<(String, String)> = [
            ("x1", "lambda1^eta1", "x0", "xi0"),
            ("x3", "lambda1^eta1", "y2", "xi0"),
            ("x2", "eta1", "x1", "kappa1^eta1"),
            ("x4", "eta1", "x3", "kappa1^eta1"),
            ("y4", "eta1", "y3", "kappa1^eta1"),
        ]
        .iter()
        .map(|&(a, b, c, d)| (t(a, b), t(c, d)))
        .collect();
        let extra: &[(&str, &str, &str, &str)] = match n {
            -1 => &[
                ("x2", "xi0", "x1", "mu1"),
                ("x4", "xi0", "x3", "mu1"),
                ("y4", "xi0", "y3", "mu1"),
                ("y3", "lambda1^eta1", "y1", "mu1"),
            ],
            2 => &[("x2", "xi0", "x0", "eta0"), ("x4", "xi0", "y2", "eta0")],
            _ => &[("x1", "mu1", "x0", "eta0"), ("x3", "mu1", "y2", "eta0")],
        };
        want.extend(extra.iter().map(|&(a, b, c, d)| (t(a, b), t(c, d))));
        if got != want {
            return Err(format!("n = {n}: census differs"));
        }
    }
    Ok(())
}

pub fn run_selftest() -> Vec<CheckResult> {
    let checks: [(&'static str, fn() -> Result<(), String>); 5] = [
        ("tensor gradings", tensor_gradings),
        ("trefoil survivors", trefoil_survivors),
        ("trefoil extremes", trefoil_extremes),
        ("square summand homology", square_homology),
        ("differential census", census),
    ];
    checks
        .iter()
        .map(|&(name, f)| match f() {
            Ok(()) => CheckResult { name, passed: true, detail: String::new() },
            Err(detail) => CheckResult { name, passed: false, detail },
        })
        .collect()
}
