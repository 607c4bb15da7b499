//! Type A structures of the Mazur pattern and the (2,1)-cable in the solid torus.

use std::collections::VecDeque;

use crate::algebra::{AlgebraElement, Idempotent};
use crate::error::{GradingError, StructureError};
use crate::grading::GroupElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AGenerator {
    pub name: String,
    pub idempotent: Idempotent,
    pub grading: GroupElement,
}

/// `m_{l+1}(input, ρ_1, ..., ρ_l) = U^u_power · output`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AOperation {
    pub input: usize,
    pub sequence: Vec<AlgebraElement>,
    pub output: usize,
    pub u_power: u32,
}

#[derive(Clone, Debug)]
pub struct TypeAStructure {
    pub generators: Vec<AGenerator>,
    pub operations: Vec<AOperation>,
    pub h_a: GroupElement,
}

impl TypeAStructure {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// The `U = 0` truncation.
    pub fn hat(&self) -> TypeAStructure {
        TypeAStructure {
            generators: self.generators.clone(),
            operations: self.operations.iter().filter(|o| o.u_power == 0).cloned().collect(),
            h_a: self.h_a,
        }
    }

    pub fn is_hat(&self) -> bool {
        self.operations.iter().all(|o| o.u_power == 0)
    }

    /// No `m_1` terms in the hat flavor, so every box tensor sum is finite.
    pub fn is_bounded(&self) -> bool {
        self.operations.iter().all(|o| o.u_power > 0 || !o.sequence.is_empty())
    }

    pub fn max_sequence_len(&self) -> usize {
        self.operations.iter().map(|o| o.sequence.len()).max().unwrap_or(0)
    }

    /// The grading the operation predicts for its output:
    /// `gr(x) λ^{l-1} gr(ρ_1) ... gr(ρ_l) (0; 0, 0; u)`.
    pub fn predicted_grading(&self, op: &AOperation) -> Result<GroupElement, GradingError> {
        let mut g = self.generators[op.input].grading * GroupElement::LAMBDA.pow(op.sequence.len() as i64 - 1);
        for rho in &op.sequence {
            g = g * rho.grading()?;
        }
        Ok(g * GroupElement::u_power(op.u_power as i64))
    }

    fn op_error(&self, op: &AOperation) -> StructureError {
        StructureError::EdgeGrading {
            src: self.generators[op.input].name.clone(),
            dst: self.generators[op.output].name.clone(),
            label: op.sequence.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
        }
    }

    /// Idempotent compatibility and the operation grading relation modulo `h_A`.
    pub fn check(&self) -> Result<(), StructureError> {
        for op in &self.operations {
            let mut idem = self.generators[op.input].idempotent;
            for rho in &op.sequence {
                match rho.idempotents() {
                    Some((l, r)) if rho.is_reeb() && l == idem => idem = r,
                    _ => return Err(self.op_error(op)),
                }
            }
            if idem != self.generators[op.output].idempotent {
                return Err(self.op_error(op));
            }
            let predicted = self.predicted_grading(op)?;
            if !self.same_left_coset(&self.generators[op.output].grading, &predicted) {
                return Err(self.op_error(op));
            }
        }
        Ok(())
    }

    fn same_left_coset(&self, x: &GroupElement, y: &GroupElement) -> bool {
        let diff = *x * y.inv();
        let p = diff.c2() / self.h_a.c2();
        self.h_a.pow(p) == diff
    }

    /// Re-derives every grading from the first generator along a spanning
    /// tree of the operation graph and compares with the stored values.
    pub fn gradings_reachable_from_root(&self) -> bool {
        let n = self.generators.len();
        let mut derived: Vec<Option<GroupElement>> = vec![None; n];
        derived[0] = Some(self.generators[0].grading);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for op in &self.operations {
                let Ok(step) = self.predicted_grading(op) else {
                    return false;
                };
                // weight of the operation: gr(output) = gr(input) · w
                let w = self.generators[op.input].grading.inv() * step;
                let here = derived[i].unwrap();
                let (other, g) = if op.input == i {
                    (op.output, here * w)
                } else if op.output == i {
                    (op.input, here * w.inv())
                } else {
                    continue;
                };
                if derived[other].is_none() {
                    derived[other] = Some(g);
                    queue.push_back(other);
                }
            }
        }
        derived
            .iter()
            .zip(&self.generators)
            .all(|(d, g)| d.is_some_and(|d| self.same_left_coset(&g.grading, &d)))
    }
}

fn gen(name: &str, idempotent: Idempotent, a2: i64, b2: i64, c2: i64, d: i64) -> AGenerator {
    AGenerator { name: name.into(), idempotent, grading: GroupElement::lit(a2, b2, c2, d) }
}

/// `h_A` of the Mazur pattern.
pub const MAZUR_H_A: GroupElement = GroupElement::lit(-1, 0, 2, -1);
/// `h_A'` of the (2,1)-cable.
pub const CABLE_H_A: GroupElement = GroupElement::lit(-1, 0, 2, 2);

/// CFA⁻ of the Mazur pattern: 13 generators, 25 operations. The arrow
/// `x1 → y1` labeled `U² + Uρ23` contributes two of them.
pub fn mazur_cfa_minus() -> TypeAStructure {
    use AlgebraElement::*;
    use Idempotent::{Iota0 as I0, Iota1 as I1};
    let generators = vec![
        gen("x0", I0, 0, 0, 0, 0),
        gen("x1", I1, 1, -1, -1, 0),
        gen("x2", I0, 1, -2, 0, 0),
        gen("x3", I1, 1, -3, -1, 1),
        gen("x4", I0, 0, -4, 0, 1),
        gen("x5", I1, -1, -1, 1, 1),
        gen("x6", I1, -3, -3, 1, 2),
        gen("y1", I1, -1, -1, 1, 1),
        gen("y2", I0, -1, -2, 0, 1),
        gen("y3", I1, -1, -3, -1, 2),
        gen("y4", I0, -2, -4, 0, 2),
        gen("y5", I1, -3, -1, 1, 2),
        gen("y6", I1, -5, -3, 1, 3),
    ];
    let idx = |n: &str| generators.iter().position(|g| g.name == n).unwrap();
    let table: &[(&str, &[AlgebraElement], &str, u32)] = &[
        ("x1", &[Rho2], "x0", 0),
        ("x2", &[Rho1], "x1", 0),
        ("x4", &[Rho1], "x3", 0),
        ("y4", &[Rho1], "y3", 0),
        ("x2", &[Rho12], "x0", 0),
        ("x3", &[Rho2], "y2", 0),
        ("x4", &[Rho12], "y2", 0),
        ("y3", &[Rho2, Rho1], "y1", 0),
        ("y4", &[Rho12, Rho1], "y1", 0),
        ("y2", &[Rho1], "y1", 1),
        ("x4", &[Rho3, Rho2, Rho1], "x6", 1),
        ("x2", &[Rho3, Rho2, Rho1], "x5", 1),
        ("x1", &[], "y1", 2),
        ("x1", &[Rho23], "y1", 1),
        ("x4", &[Rho123, Rho2, Rho1], "y5", 1),
        ("x3", &[Rho23, Rho2, Rho1], "y5", 1),
        ("x2", &[], "y2", 1),
        ("x3", &[], "y3", 1),
        ("x4", &[], "y4", 1),
        ("x5", &[], "y5", 1),
        ("x6", &[], "y6", 1),
        ("y4", &[Rho3, Rho2, Rho1], "y6", 1),
        ("y2", &[Rho3, Rho2, Rho1], "y5", 1),
        ("x0", &[Rho3], "y1", 1),
        ("x2", &[Rho123], "y1", 1),
    ];
    let operations = table
        .iter()
        .map(|&(i, seq, o, u)| AOperation { input: idx(i), sequence: seq.to_vec(), output: idx(o), u_power: u })
        .collect();
    TypeAStructure { generators, operations, h_a: MAZUR_H_A }
}

/// ĈFA of the Mazur pattern: the nine `U⁰` operations.
pub fn mazur_cfa_hat() -> TypeAStructure {
    mazur_cfa_minus().hat()
}

/// ĈFA of the (2,1)-cable pattern.
pub fn cable21_cfa_hat() -> TypeAStructure {
    use Idempotent::{Iota0 as I0, Iota1 as I1};
    TypeAStructure {
        generators: vec![gen("a", I0, 0, 0, 0, 0), gen("b1", I1, 1, 1, -1, -1), gen("b2", I1, -1, 1, -1, 0)],
        operations: vec![AOperation { input: 0, sequence: vec![AlgebraElement::Rho1], output: 2, u_power: 0 }],
        h_a: CABLE_H_A,
    }
}
