//! Simplified CFK⁻ models: thin staircases with squares, L-space staircases,
//! and explicit user-supplied bases.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfkGenerator {
    pub name: String,
    pub alexander: i64,
    pub maslov: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    Horizontal,
    Vertical,
}

/// An arrow between generators, by index into `CfkModel::generators`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CfkArrow {
    pub kind: ArrowKind,
    pub src: usize,
    pub dst: usize,
    pub length: i64,
}

/// Positive or negative L-space staircase with exponents `r_0 > r_1 > ... > r_k > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LspaceSpec {
    pub sign: i64,
    pub r: Vec<i64>,
}

impl LspaceSpec {
    pub fn new(sign: i64, r: Vec<i64>) -> Result<Self, ModelError> {
        let spec = LspaceSpec { sign, r };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<(), ModelError> {
        if self.sign != 1 && self.sign != -1 {
            return Err(ModelError::BadLspace(format!("sign must be ±1, got {}", self.sign)));
        }
        let r = &self.r;
        if r.is_empty() {
            return Err(ModelError::BadLspace("exponent list is empty".into()));
        }
        if r.windows(2).any(|w| w[0] <= w[1]) || *r.last().unwrap() <= 0 {
            return Err(ModelError::BadLspace(format!("{r:?} is not strictly decreasing and positive")));
        }
        if r.len() == 1 && r[0] != 1 {
            return Err(ModelError::BadLspace(format!("k = 0 forces a trefoil (r = [1]), got {r:?}")));
        }
        if r.len() >= 2 && r[1] != r[0] - 1 {
            return Err(ModelError::BadLspace(format!("r_1 must equal g - 1, got {r:?}")));
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.r.len() - 1
    }

    pub fn genus(&self) -> i64 {
        self.r[0]
    }

    /// `ℓ_i = r_i - r_{i+1}` for `i = 1..k-1`.
    pub fn ells(&self) -> Vec<i64> {
        self.r[1..].windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// `ℓ_1 ≥ ℓ_2 ≥ ... ≥ ℓ_{k-1} ≥ r_k`.
    pub fn satisfies_ell_condition(&self) -> bool {
        let mut chain = self.ells();
        chain.push(*self.r.last().unwrap());
        if self.k() <= 1 {
            return true;
        }
        chain.windows(2).all(|w| w[0] >= w[1])
    }

    /// `r_2`, read as 0 when `k = 1`.
    pub fn r2(&self) -> i64 {
        self.r.get(2).copied().unwrap_or(0)
    }

    /// The alternating Alexander polynomial determined by the exponents.
    pub fn alexander_polynomial(&self) -> LaurentPoly {
        let k = self.k() as i64;
        let mut p = LaurentPoly::mono(0, if (k + 1) % 2 == 0 { 1 } else { -1 });
        for (j, &rj) in self.r.iter().enumerate() {
            let s = if j % 2 == 0 { 1 } else { -1 };
            p.add_term(rj, s);
            p.add_term(-rj, s);
        }
        p
    }
}

/// How a model was produced; selects which closed forms apply to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelOrigin {
    Thin { tau: i64, squares: BTreeMap<i64, usize> },
    Lspace(LspaceSpec),
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfkModel {
    pub generators: Vec<CfkGenerator>,
    pub arrows: Vec<CfkArrow>,
    pub tau: i64,
    pub epsilon: i64,
    pub xi0: usize,
    pub eta0: usize,
    pub origin: ModelOrigin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateName(String),
    BadIndex(usize),
    NonPositiveLength { src: String, dst: String },
    VerticalMaslov { src: String, dst: String },
    VerticalAlexander { src: String, dst: String },
    HorizontalMaslov { src: String, dst: String },
    HorizontalAlexander { src: String, dst: String },
    Anchor(&'static str),
    AsymmetricAlexander,
    EvenRank(usize),
    NotSimplified(String),
    Epsilon(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateName(n) => write!(f, "duplicate generator name {n}"),
            Violation::BadIndex(i) => write!(f, "generator index {i} out of range"),
            Violation::NonPositiveLength { src, dst } => write!(f, "arrow {src} -> {dst} has length < 1"),
            Violation::VerticalMaslov { src, dst } => {
                write!(f, "vertical arrow {src} -> {dst}: M(dst) != M(src) - 1")
            }
            Violation::VerticalAlexander { src, dst } => {
                write!(f, "vertical arrow {src} -> {dst}: A(dst) != A(src) - length")
            }
            Violation::HorizontalMaslov { src, dst } => {
                write!(f, "horizontal arrow {src} -> {dst}: M(dst) != M(src) + 2 length - 1")
            }
            Violation::HorizontalAlexander { src, dst } => {
                write!(f, "horizontal arrow {src} -> {dst}: A(dst) != A(src) + length")
            }
            Violation::Anchor(what) => write!(f, "anchor violated: {what}"),
            Violation::AsymmetricAlexander => f.write_str("Alexander gradings are not symmetric under a -> -a"),
            Violation::EvenRank(n) => write!(f, "even number of generators ({n})"),
            Violation::NotSimplified(msg) => write!(f, "basis is not simultaneously simplified: {msg}"),
            Violation::Epsilon(msg) => write!(f, "epsilon: {msg}"),
        }
    }
}

impl CfkModel {
    pub fn generator(&self, i: usize) -> &CfkGenerator {
        &self.generators[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn genus(&self) -> i64 {
        self.generators.iter().map(|g| g.alexander).max().unwrap_or(0)
    }

    pub fn is_unknot(&self) -> bool {
        self.generators.len() == 1
    }

    /// Rank of ĤFK in the top Alexander grading.
    pub fn top_rank(&self) -> usize {
        let g = self.genus();
        self.generators.iter().filter(|x| x.alexander == g).count()
    }

    pub fn is_fibered(&self) -> bool {
        self.top_rank() == 1
    }

    pub fn is_thin(&self) -> bool {
        let mut deltas = self.generators.iter().map(|g| g.maslov - g.alexander);
        let first = deltas.next();
        deltas.all(|d| Some(d) == first)
    }

    pub fn arrows_of(&self, kind: ArrowKind) -> impl Iterator<Item = &CfkArrow> + '_ {
        self.arrows.iter().filter(move |a| a.kind == kind)
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let gens = &self.generators;
        let mut seen = HashSet::new();
        for g in gens {
            if !seen.insert(g.name.as_str()) {
                out.push(Violation::DuplicateName(g.name.clone()));
            }
        }
        for &i in [self.xi0, self.eta0].iter() {
            if i >= gens.len() {
                out.push(Violation::BadIndex(i));
            }
        }
        for a in &self.arrows {
            for i in [a.src, a.dst] {
                if i >= gens.len() {
                    out.push(Violation::BadIndex(i));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        for a in &self.arrows {
            let (s, d) = (&gens[a.src], &gens[a.dst]);
            let names = || (s.name.clone(), d.name.clone());
            if a.length < 1 {
                let (src, dst) = names();
                out.push(Violation::NonPositiveLength { src, dst });
            }
            match a.kind {
                ArrowKind::Vertical => {
                    if d.maslov != s.maslov - 1 {
                        let (src, dst) = names();
                        out.push(Violation::VerticalMaslov { src, dst });
                    }
                    if d.alexander != s.alexander - a.length {
                        let (src, dst) = names();
                        out.push(Violation::VerticalAlexander { src, dst });
                    }
                }
                ArrowKind::Horizontal => {
                    if d.maslov != s.maslov + 2 * a.length - 1 {
                        let (src, dst) = names();
                        out.push(Violation::HorizontalMaslov { src, dst });
                    }
                    if d.alexander != s.alexander + a.length {
                        let (src, dst) = names();
                        out.push(Violation::HorizontalAlexander { src, dst });
                    }
                }
            }
        }

        let (xi, eta) = (&gens[self.xi0], &gens[self.eta0]);
        if xi.alexander != self.tau {
            out.push(Violation::Anchor("A(xi0) = tau"));
        }
        if xi.maslov != 0 {
            out.push(Violation::Anchor("M(xi0) = 0"));
        }
        if eta.alexander != -self.tau {
            out.push(Violation::Anchor("A(eta0) = -tau"));
        }
        if eta.maslov != -2 * self.tau {
            out.push(Violation::Anchor("M(eta0) = -2 tau"));
        }

        let mut counts: HashMap<i64, i64> = HashMap::new();
        for g in gens {
            *counts.entry(g.alexander).or_default() += 1;
        }
        if counts.iter().any(|(a, c)| counts.get(&-a) != Some(c)) {
            out.push(Violation::AsymmetricAlexander);
        }
        if gens.len() % 2 == 0 {
            out.push(Violation::EvenRank(gens.len()));
        }

        for kind in [ArrowKind::Vertical, ArrowKind::Horizontal] {
            let mut degree = vec![0usize; gens.len()];
            for a in self.arrows_of(kind) {
                degree[a.src] += 1;
                degree[a.dst] += 1;
            }
            let free = if kind == ArrowKind::Vertical { self.xi0 } else { self.eta0 };
            for (i, &deg) in degree.iter().enumerate() {
                let expected = usize::from(i != free);
                if deg != expected {
                    out.push(Violation::NotSimplified(format!(
                        "{} meets {deg} {kind:?} arrow(s), expected {expected}",
                        gens[i].name
                    )));
                }
            }
        }

        let horizontal_target = |i| self.arrows_of(ArrowKind::Horizontal).any(|a| a.dst == i);
        let vertical_source = |i| self.arrows_of(ArrowKind::Vertical).any(|a| a.src == i);
        match self.epsilon {
            0 if self.xi0 != self.eta0 => out.push(Violation::Epsilon("epsilon = 0 needs xi0 = eta0".into())),
            1 if !horizontal_target(self.xi0) => {
                out.push(Violation::Epsilon("epsilon = 1 needs xi0 to end a horizontal arrow".into()))
            }
            -1 if !vertical_source(self.eta0) => {
                out.push(Violation::Epsilon("epsilon = -1 needs eta0 to start a vertical arrow".into()))
            }
            e if !(-1..=1).contains(&e) => out.push(Violation::Epsilon(format!("{e} is not in {{-1, 0, 1}}"))),
            _ => {}
        }
        out
    }

    /// Graded Euler characteristic `Σ (-1)^M t^A`.
    pub fn alexander_polynomial(&self) -> Result<LaurentPoly, ModelError> {
        let p = LaurentPoly::from_terms(
            self.generators.iter().map(|g| (g.alexander, if g.maslov.rem_euclid(2) == 0 { 1 } else { -1 })),
        );
        match p.eval_at_one() {
            1 | -1 => Ok(p),
            v => Err(ModelError::NotAKnot(v)),
        }
    }

    fn ensure_valid(self) -> Result<Self, ModelError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            Err(ModelError::Invalid(msgs.join("; ")))
        }
    }
}

/// Builds a staircase from its Alexander exponents `e_0 > e_1 > ... > e_m`
/// (symmetric, `m` even). `positive` selects the orientation whose first
/// generator is ξ₀. Maslov gradings are propagated from the ξ₀ anchor.
fn staircase(exps: &[i64], positive: bool, names: Vec<String>) -> (Vec<CfkGenerator>, Vec<CfkArrow>) {
    let m = exps.len() - 1;
    let mut arrows = Vec::with_capacity(m);
    for j in 1..=m {
        let len = exps[j - 1] - exps[j];
        let arrow = match (positive, j % 2 == 1) {
            // odd corners start a horizontal arrow back and a vertical arrow forward
            (true, true) => CfkArrow { kind: ArrowKind::Horizontal, src: j, dst: j - 1, length: len },
            (true, false) => CfkArrow { kind: ArrowKind::Vertical, src: j - 1, dst: j, length: len },
            (false, true) => CfkArrow { kind: ArrowKind::Vertical, src: j - 1, dst: j, length: len },
            (false, false) => CfkArrow { kind: ArrowKind::Horizontal, src: j, dst: j - 1, length: len },
        };
        arrows.push(arrow);
    }
    let xi0 = if positive { 0 } else { m };
    let maslov = propagate_maslov(exps.len(), &arrows, xi0, 0);
    let gens = names
        .into_iter()
        .zip(exps.iter().zip(maslov))
        .map(|(name, (&alexander, maslov))| CfkGenerator { name, alexander, maslov })
        .collect();
    (gens, arrows)
}

fn propagate_maslov(n: usize, arrows: &[CfkArrow], anchor: usize, value: i64) -> Vec<i64> {
    let mut m: Vec<Option<i64>> = vec![None; n];
    m[anchor] = Some(value);
    let mut queue = VecDeque::from([anchor]);
    while let Some(i) = queue.pop_front() {
        for a in arrows {
            // M(dst) - M(src) for this arrow
            let step = match a.kind {
                ArrowKind::Vertical => -1,
                ArrowKind::Horizontal => 2 * a.length - 1,
            };
            let (other, val) = if a.src == i {
                (a.dst, m[i].unwrap() + step)
            } else if a.dst == i {
                (a.src, m[i].unwrap() - step)
            } else {
                continue;
            };
            if m[other].is_none() {
                m[other] = Some(val);
                queue.push_back(other);
            }
        }
    }
    m.into_iter().map(|x| x.expect("staircase is connected")).collect()
}

/// A thin knot: one staircase with unit steps plus squares with top right
/// corner (the Alexander grading of `s1`) at each key of `squares`.
pub fn build_thin_model(tau: i64, squares: &BTreeMap<i64, usize>) -> Result<CfkModel, ModelError> {
    for (&c, &count) in squares {
        let mirror = squares.get(&-c).copied().unwrap_or(0);
        if mirror != count {
            return Err(ModelError::AsymmetricSquares { center: c, count_pos: count, count_neg: mirror });
        }
    }
    let t = tau.abs();
    let exps: Vec<i64> = (-t..=t).rev().collect();
    let m = exps.len() - 1;
    let names: Vec<String> = (0..=m)
        .map(|j| {
            if tau > 0 {
                if j == 0 { "xi0".into() } else { format!("eta{}", m - j) }
            } else if tau < 0 && j == m {
                "xi0".into()
            } else {
                format!("eta{j}")
            }
        })
        .collect();
    let (mut generators, mut arrows) = staircase(&exps, tau >= 0, names);
    let (xi0, eta0) = match tau.signum() {
        1 => (0, m),
        -1 => (m, 0),
        _ => (0, 0),
    };

    let mut idx = 0;
    for (&c, &count) in squares {
        for _ in 0..count {
            idx += 1;
            let base = generators.len();
            let m1 = c - tau;
            for (corner, a, mm) in [(1, c, m1), (2, c + 1, m1 + 1), (3, c - 1, m1 - 1), (4, c, m1)] {
                generators.push(CfkGenerator { name: format!("s{corner}_{idx}"), alexander: a, maslov: mm });
            }
            let edge = |kind, s: usize, d: usize| CfkArrow { kind, src: base + s, dst: base + d, length: 1 };
            arrows.push(edge(ArrowKind::Horizontal, 0, 1));
            arrows.push(edge(ArrowKind::Vertical, 0, 2));
            arrows.push(edge(ArrowKind::Vertical, 1, 3));
            arrows.push(edge(ArrowKind::Horizontal, 2, 3));
        }
    }
    CfkModel {
        generators,
        arrows,
        tau,
        epsilon: tau.signum(),
        xi0,
        eta0,
        origin: ModelOrigin::Thin { tau, squares: squares.clone() },
    }
    .ensure_valid()
}

/// The staircase of an L-space knot (or its mirror for `sign = -1`).
pub fn build_lspace_model(spec: &LspaceSpec) -> Result<CfkModel, ModelError> {
    spec.check()?;
    if spec.k() == 0 {
        let mut model = build_thin_model(spec.sign, &BTreeMap::new())?;
        model.origin = ModelOrigin::Lspace(spec.clone());
        return Ok(model);
    }
    let k = spec.k();
    let mut exps = spec.r.clone();
    exps.push(0);
    exps.extend(spec.r.iter().rev().map(|r| -r));
    let m = exps.len() - 1;
    let positive = spec.sign > 0;
    let (first, last) = if positive { ("xi0", "eta0") } else { ("eta0", "xi0") };
    let mut names = vec![first.to_string()];
    names.extend((1..=k + 1).map(|i| format!("omega{i}")));
    names.extend((1..=k).rev().map(|i| format!("theta{i}")));
    names.push(last.to_string());
    let (generators, arrows) = staircase(&exps, positive, names);
    let g = spec.genus();
    let (xi0, eta0) = if positive { (0, m) } else { (m, 0) };
    CfkModel {
        generators,
        arrows,
        tau: spec.sign * g,
        epsilon: spec.sign,
        xi0,
        eta0,
        origin: ModelOrigin::Lspace(spec.clone()),
    }
    .ensure_valid()
}

/// Input schema for companion models.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ModelSpec {
    Thin { tau: i64, #[serde(default)] squares: Vec<SquareSpec> },
    Lspace(LspaceSpec),
    Explicit(ExplicitSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSpec {
    pub center: i64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitArrow {
    pub kind: ArrowKind,
    pub src: String,
    pub dst: String,
    pub length: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitSpec {
    pub generators: Vec<CfkGenerator>,
    pub arrows: Vec<ExplicitArrow>,
    pub tau: i64,
    pub epsilon: i64,
    pub xi0: String,
    pub eta0: String,
}

impl ModelSpec {
    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Invalid(format!("model JSON: {e}")))
    }

    pub fn build(&self) -> Result<CfkModel, ModelError> {
        match self {
            ModelSpec::Thin { tau, squares } => {
                let mut map = BTreeMap::new();
                for s in squares {
                    *map.entry(s.center).or_insert(0) += s.count;
                }
                map.retain(|_, c| *c > 0);
                build_thin_model(*tau, &map)
            }
            ModelSpec::Lspace(spec) => build_lspace_model(spec),
            ModelSpec::Explicit(spec) => {
                let lookup = |name: &str| {
                    spec.generators
                        .iter()
                        .position(|g| g.name == name)
                        .ok_or_else(|| ModelError::Invalid(format!("unknown generator {name}")))
                };
                let arrows = spec
                    .arrows
                    .iter()
                    .map(|a| Ok(CfkArrow { kind: a.kind, src: lookup(&a.src)?, dst: lookup(&a.dst)?, length: a.length }))
                    .collect::<Result<Vec<_>, ModelError>>()?;
                CfkModel {
                    generators: spec.generators.clone(),
                    arrows,
                    tau: spec.tau,
                    epsilon: spec.epsilon,
                    xi0: lookup(&spec.xi0)?,
                    eta0: lookup(&spec.eta0)?,
                    origin: ModelOrigin::Explicit,
                }
                .ensure_valid()
            }
        }
    }
}

/// Canned companions used throughout the tests and the self-test.
pub mod catalog {
    use super::*;

    pub fn unknot() -> CfkModel {
        build_thin_model(0, &BTreeMap::new()).unwrap()
    }

    pub fn right_trefoil() -> CfkModel {
        build_thin_model(1, &BTreeMap::new()).unwrap()
    }

    pub fn left_trefoil() -> CfkModel {
        build_thin_model(-1, &BTreeMap::new()).unwrap()
    }

    pub fn figure_eight() -> CfkModel {
        build_thin_model(0, &BTreeMap::from([(0, 1)])).unwrap()
    }

    /// Thin, τ = 0, genus 2: one square at each of ±1.
    pub fn thin_genus_two() -> CfkModel {
        build_thin_model(0, &BTreeMap::from([(-1, 1), (1, 1)])).unwrap()
    }

    /// Thin, τ = 0, two squares at 0: Δ = 2t - 5 + 2t⁻¹ up to sign.
    pub fn six_one() -> CfkModel {
        build_thin_model(0, &BTreeMap::from([(0, 2)])).unwrap()
    }

    pub fn torus_2_5() -> CfkModel {
        build_lspace_model(&LspaceSpec { sign: 1, r: vec![2, 1] }).unwrap()
    }

    pub fn torus_3_4() -> CfkModel {
        build_lspace_model(&LspaceSpec { sign: 1, r: vec![3, 2] }).unwrap()
    }

    pub fn torus_2_7() -> CfkModel {
        build_lspace_model(&LspaceSpec { sign: 1, r: vec![3, 2, 1] }).unwrap()
    }
}
