//! The type D structure of the `n`-framed knot complement, built from a
//! simultaneously simplified CFK⁻ basis.

use std::fmt::Write as _;

use crate::algebra::{AlgebraElement, Idempotent};
use crate::cfk::{ArrowKind, CfkModel};
use crate::error::{ModelError, StructureError};
use crate::grading::{h_d, GroupElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGenerator {
    pub name: String,
    pub idempotent: Idempotent,
    pub grading: GroupElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DEdge {
    pub src: usize,
    pub dst: usize,
    pub label: AlgebraElement,
}

#[derive(Clone, Debug)]
pub struct TypeDStructure {
    pub generators: Vec<DGenerator>,
    pub edges: Vec<DEdge>,
    pub h_d: GroupElement,
    pub framing: i64,
    out: Vec<Vec<usize>>,
}

/// `gr(y) = λ⁻¹ gr(ρ)⁻¹ gr(x)` for an edge `x → y`.
fn forward(label: AlgebraElement, x: GroupElement) -> GroupElement {
    GroupElement::LAMBDA.inv() * label.grading().expect("edge labels are Reeb chords").inv() * x
}

/// Inverse of `forward`: the source grading given the target.
fn backward(label: AlgebraElement, y: GroupElement) -> GroupElement {
    label.grading().expect("edge labels are Reeb chords") * GroupElement::LAMBDA * y
}

/// `gr(s) = (M - 3A/2; 0, -A; 0)` for an ι₀ generator.
pub fn iota0_grading(maslov: i64, alexander: i64) -> GroupElement {
    GroupElement::new(2 * maslov - 3 * alexander, 0, -2 * alexander, 0).expect("integral b + c")
}

impl TypeDStructure {
    pub fn new(generators: Vec<DGenerator>, edges: Vec<DEdge>, h_d: GroupElement, framing: i64) -> Self {
        let mut out = vec![Vec::new(); generators.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.src].push(i);
        }
        TypeDStructure { generators, edges, h_d, framing, out }
    }

    pub fn out_edges(&self, gen: usize) -> impl Iterator<Item = &DEdge> + '_ {
        self.out[gen].iter().map(move |&i| &self.edges[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn count(&self, idem: Idempotent) -> usize {
        self.generators.iter().filter(|g| g.idempotent == idem).count()
    }

    /// Checks idempotent compatibility and the edge grading relation modulo `h_D`.
    pub fn check(&self) -> Result<(), StructureError> {
        for e in &self.edges {
            let (s, d) = (&self.generators[e.src], &self.generators[e.dst]);
            let err = || StructureError::EdgeGrading {
                src: s.name.clone(),
                dst: d.name.clone(),
                label: e.label.to_string(),
            };
            let (l, r) = e.label.idempotents().ok_or_else(err)?;
            if !e.label.is_reeb() || l != s.idempotent || r != d.idempotent {
                return Err(err());
            }
            let expected = forward(e.label, s.grading);
            let diff = expected.inv() * d.grading;
            let q = diff.b2() / self.h_d.b2();
            if self.h_d.pow(q) != diff {
                return Err(err());
            }
        }
        Ok(())
    }

    /// Graphviz rendering with edges labeled `D_I`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph cfd {\n");
        for g in &self.generators {
            let shape = if g.idempotent == Idempotent::Iota0 { "box" } else { "ellipse" };
            let _ = writeln!(s, "  \"{}\" [shape={shape}];", g.name);
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"D{}\"];",
                self.generators[e.src].name,
                self.generators[e.dst].name,
                e.label.label()
            );
        }
        s.push_str("}\n");
        s
    }
}

/// Builds the type D structure for the `n`-framed complement of the knot
/// described by `model`.
pub fn build_cfd(model: &CfkModel, n: i64) -> Result<TypeDStructure, StructureError> {
    let violations = model.validate();
    if let Some(v) = violations.first() {
        return Err(ModelError::Invalid(v.to_string()).into());
    }
    use AlgebraElement::*;
    let mut gens: Vec<DGenerator> = model
        .generators
        .iter()
        .map(|g| DGenerator {
            name: g.name.clone(),
            idempotent: Idempotent::Iota0,
            grading: iota0_grading(g.maslov, g.alexander),
        })
        .collect();
    let mut edges = Vec::new();
    let push = |gens: &mut Vec<DGenerator>, name: String, grading| {
        gens.push(DGenerator { name, idempotent: Idempotent::Iota1, grading });
        gens.len() - 1
    };

    for a in &model.arrows {
        let len = a.length as usize;
        let src_name = model.generators[a.src].name.clone();
        match a.kind {
            ArrowKind::Vertical => {
                // src →D1 κ1 ←D23 κ2 ← ... ←D23 κ_k ←D123 dst
                let mut gr = forward(Rho1, gens[a.src].grading);
                let mut prev = None;
                for j in 1..=len {
                    let idx = push(&mut gens, format!("kappa{j}^{src_name}"), gr);
                    match prev {
                        None => edges.push(DEdge { src: a.src, dst: idx, label: Rho1 }),
                        Some(p) => edges.push(DEdge { src: idx, dst: p, label: Rho23 }),
                    }
                    prev = Some(idx);
                    gr = backward(Rho23, gr);
                }
                edges.push(DEdge { src: a.dst, dst: prev.unwrap(), label: Rho123 });
            }
            ArrowKind::Horizontal => {
                // src →D3 λ1 →D23 ... →D23 λ_l →D2 dst
                let mut gr = forward(Rho3, gens[a.src].grading);
                let mut prev = None;
                for j in 1..=len {
                    let idx = push(&mut gens, format!("lambda{j}^{src_name}"), gr);
                    match prev {
                        None => edges.push(DEdge { src: a.src, dst: idx, label: Rho3 }),
                        Some(p) => edges.push(DEdge { src: p, dst: idx, label: Rho23 }),
                    }
                    prev = Some(idx);
                    gr = forward(Rho23, gr);
                }
                edges.push(DEdge { src: prev.unwrap(), dst: a.dst, label: Rho2 });
            }
        }
    }

    let (xi0, eta0) = (model.xi0, model.eta0);
    let m = 2 * model.tau - n;
    if m == 0 {
        edges.push(DEdge { src: xi0, dst: eta0, label: Rho12 });
    } else if m > 0 {
        // ξ0 →D1 μ1 ←D23 μ2 ← ... ← μ_m ←D3 η0
        let mut gr = forward(Rho1, gens[xi0].grading);
        let mut prev = None;
        for j in 1..=m {
            let idx = push(&mut gens, format!("mu{j}"), gr);
            match prev {
                None => edges.push(DEdge { src: xi0, dst: idx, label: Rho1 }),
                Some(p) => edges.push(DEdge { src: idx, dst: p, label: Rho23 }),
            }
            prev = Some(idx);
            gr = backward(Rho23, gr);
        }
        edges.push(DEdge { src: eta0, dst: prev.unwrap(), label: Rho3 });
    } else {
        // ξ0 →D123 μ1 →D23 ... →D23 μ_m →D2 η0
        let mut gr = forward(Rho123, gens[xi0].grading);
        let mut prev = None;
        for j in 1..=-m {
            let idx = push(&mut gens, format!("mu{j}"), gr);
            match prev {
                None => edges.push(DEdge { src: xi0, dst: idx, label: Rho123 }),
                Some(p) => edges.push(DEdge { src: p, dst: idx, label: Rho23 }),
            }
            prev = Some(idx);
            gr = forward(Rho23, gr);
        }
        edges.push(DEdge { src: prev.unwrap(), dst: eta0, label: Rho2 });
    }

    let d = TypeDStructure::new(gens, edges, h_d(n), n);
    d.check()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfk::catalog::*;
    use crate::cfk::{build_lspace_model, build_thin_model, LspaceSpec};
    use crate::grading::DoubleCosetContext;
    use proptest::prelude::*;
    use std::collections::{BTreeMap, BTreeSet};
    use AlgebraElement::*;

    fn half(a2: i64, b2: i64, c2: i64) -> GroupElement {
        GroupElement::new(a2, b2, c2, 0).unwrap()
    }

    fn edge_set(d: &TypeDStructure) -> BTreeSet<(String, String, AlgebraElement)> {
        d.edges
            .iter()
            .map(|e| (d.generators[e.src].name.clone(), d.generators[e.dst].name.clone(), e.label))
            .collect()
    }

    fn same_coset(d: &TypeDStructure, x: GroupElement, y: GroupElement) -> bool {
        let diff = y.inv() * x;
        let q = diff.b2() / d.h_d.b2();
        d.h_d.pow(q) == diff
    }

    #[test]
    fn trefoil_structure() {
        for n in [-3, 2, 5] {
            let d = build_cfd(&right_trefoil(), n).unwrap();
            let e = edge_set(&d);
            let fixed = [
                ("eta1", "lambda1^eta1", Rho3),
                ("lambda1^eta1", "xi0", Rho2),
                ("eta1", "kappa1^eta1", Rho1),
                ("eta0", "kappa1^eta1", Rho123),
            ];
            for (s, t, l) in fixed {
                assert!(e.contains(&(s.into(), t.into(), l)), "n={n}: {s} -> {t}");
            }
            assert_eq!(d.count(Idempotent::Iota0), 3);
            assert_eq!(d.count(Idempotent::Iota1), 2 + (2 - n).unsigned_abs() as usize);
        }
    }

    #[test]
    fn unknot_zero_framing_self_edge() {
        let d = build_cfd(&unknot(), 0).unwrap();
        assert_eq!(d.generators.len(), 1);
        assert_eq!(d.edges, vec![DEdge { src: 0, dst: 0, label: Rho12 }]);
    }

    #[test]
    fn unknot_minus_two() {
        let d = build_cfd(&unknot(), -2).unwrap();
        let e = edge_set(&d);
        let expect: BTreeSet<_> = [
            ("eta0".to_string(), "mu1".to_string(), Rho1),
            ("mu2".to_string(), "mu1".to_string(), Rho23),
            ("eta0".to_string(), "mu2".to_string(), Rho3),
        ]
        .into_iter()
        .collect();
        assert_eq!(e, expect);
        let mu1 = &d.generators[d.index_of("mu1").unwrap()];
        assert!(same_coset(&d, mu1.grading, half(-1, -1, 1)));
    }

    /// Closed forms for the ι₁ gradings, read off the chain descriptions.
    fn closed_form(model: &CfkModel, n: i64, name: &str) -> Option<GroupElement> {
        let tau = model.tau;
        let (stem, src) = name.split_once('^').unwrap_or((name, ""));
        let gen = model.index_of(src).map(|i| &model.generators[i]);
        if let Some(j) = stem.strip_prefix("kappa") {
            let j: i64 = j.parse().unwrap();
            let g = gen?;
            return Some(half(2 * (g.maslov - g.alexander + j) - 3, -1, 2 * (-g.alexander + j) - 1));
        }
        if let Some(j) = stem.strip_prefix("lambda") {
            let j: i64 = j.parse().unwrap();
            let g = gen?;
            return Some(half(2 * (g.maslov - 2 * g.alexander) - 1, 1, 2 * (-g.alexander - j) + 1));
        }
        if let Some(j) = stem.strip_prefix("mu") {
            let j: i64 = j.parse().unwrap();
            return Some(if n < 2 * tau {
                half(2 * (-tau + j) - 3, -1, 2 * (-tau + j) - 1)
            } else {
                half(2 * (-tau - j) + 1, -1, 2 * (-tau - j) + 1)
            });
        }
        None
    }

    fn models() -> Vec<CfkModel> {
        vec![
            unknot(),
            right_trefoil(),
            left_trefoil(),
            figure_eight(),
            thin_genus_two(),
            six_one(),
            torus_2_5(),
            torus_3_4(),
            torus_2_7(),
            build_lspace_model(&LspaceSpec { sign: -1, r: vec![4, 3, 1] }).unwrap(),
            build_thin_model(-2, &BTreeMap::from([(0, 1), (2, 2), (-2, 2)])).unwrap(),
        ]
    }

    #[test]
    fn gradings_match_closed_forms_and_counts() {
        for model in models() {
            for n in -7..=7 {
                let d = build_cfd(&model, n).unwrap();
                let verticals: i64 = model.arrows_of(ArrowKind::Vertical).map(|a| a.length).sum();
                let horizontals: i64 = model.arrows_of(ArrowKind::Horizontal).map(|a| a.length).sum();
                assert_eq!(d.count(Idempotent::Iota0), model.generators.len());
                assert_eq!(
                    d.count(Idempotent::Iota1) as i64,
                    verticals + horizontals + (2 * model.tau - n).abs()
                );
                for g in d.generators.iter().filter(|g| g.idempotent == Idempotent::Iota1) {
                    let expect = closed_form(&model, n, &g.name).unwrap();
                    assert!(same_coset(&d, g.grading, expect), "{} n={n}: {}", g.name, g.grading);
                    assert_eq!(g.grading.d(), 0);
                }
            }
        }
    }

    #[test]
    fn x1_kappa_normalizes_to_closed_form() {
        let ctx = DoubleCosetContext::new(GroupElement::new(-1, 0, 2, -1).unwrap(), h_d(0)).unwrap();
        let kappa = half(2 * (0 - 1 + 1) - 3, -1, 2 * (-1 + 1) - 1);
        let x1 = GroupElement::new(1, -1, -1, 0).unwrap();
        assert_eq!(ctx.normalize(&(x1 * kappa)).unwrap(), (0, -1));
    }

    #[test]
    fn square_summand_shape() {
        let d = build_cfd(&figure_eight(), 0).unwrap();
        let e = edge_set(&d);
        for (s, t, l) in [
            ("s1_1", "lambda1^s1_1", Rho3),
            ("lambda1^s1_1", "s2_1", Rho2),
            ("s1_1", "kappa1^s1_1", Rho1),
            ("s3_1", "kappa1^s1_1", Rho123),
            ("s2_1", "kappa1^s2_1", Rho1),
            ("s4_1", "kappa1^s2_1", Rho123),
            ("s3_1", "lambda1^s3_1", Rho3),
            ("lambda1^s3_1", "s4_1", Rho2),
        ] {
            assert!(e.contains(&(s.into(), t.into(), l)), "{s} -> {t}");
        }
    }

    #[test]
    fn dot_dump_lists_edges() {
        let dot = build_cfd(&right_trefoil(), 2).unwrap().to_dot();
        assert!(dot.contains("\"xi0\" -> \"eta0\" [label=\"D12\"]"));
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn tampered_grading_is_rejected() {
        let mut d = build_cfd(&right_trefoil(), -1).unwrap();
        let i = d.index_of("mu1").unwrap();
        d.generators[i].grading = d.generators[i].grading * GroupElement::LAMBDA;
        assert!(matches!(d.check(), Err(StructureError::EdgeGrading { .. })));
    }

    proptest! {
        #[test]
        fn every_edge_is_graded(tau in -3i64..=3, n in -12i64..=12, c in 0i64..3, count in 0usize..3) {
            let mut sq = BTreeMap::new();
            if count > 0 {
                sq.insert(c, count);
                sq.insert(-c, count);
            }
            let model = build_thin_model(tau, &sq).unwrap();
            let d = build_cfd(&model, n).unwrap();
            prop_assert!(d.check().is_ok());
        }
    }
}
