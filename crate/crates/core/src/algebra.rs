//! The torus algebra: two idempotents and six Reeb chords over F2, zero differential.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GradingError;
use crate::grading::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Idempotent {
    #[serde(rename = "0")]
    Iota0,
    #[serde(rename = "1")]
    Iota1,
}

impl Idempotent {
    pub fn as_element(self) -> AlgebraElement {
        match self {
            Idempotent::Iota0 => AlgebraElement::Iota0,
            Idempotent::Iota1 => AlgebraElement::Iota1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraElement {
    Iota0,
    Iota1,
    Rho1,
    Rho2,
    Rho3,
    Rho12,
    Rho23,
    Rho123,
    Zero,
}

use AlgebraElement::*;

impl AlgebraElement {
    pub const ALL: [AlgebraElement; 9] = [Iota0, Iota1, Rho1, Rho2, Rho3, Rho12, Rho23, Rho123, Zero];
    pub const REEB: [AlgebraElement; 6] = [Rho1, Rho2, Rho3, Rho12, Rho23, Rho123];

    /// `(left, right)` idempotents with `ι_l · self · ι_r = self`.
    pub fn idempotents(self) -> Option<(Idempotent, Idempotent)> {
        use Idempotent::*;
        Some(match self {
            AlgebraElement::Iota0 => (Iota0, Iota0),
            AlgebraElement::Iota1 => (Iota1, Iota1),
            Rho1 | Rho3 | Rho123 => (Iota0, Iota1),
            Rho2 => (Iota1, Iota0),
            Rho12 => (Iota0, Iota0),
            Rho23 => (Iota1, Iota1),
            Zero => return None,
        })
    }

    pub fn is_reeb(self) -> bool {
        !matches!(self, Iota0 | Iota1 | Zero)
    }

    pub fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        match (self, rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (Iota0 | Iota1, _) | (_, Iota0 | Iota1) => {
                let (_, r) = self.idempotents().unwrap();
                let (l, _) = rhs.idempotents().unwrap();
                if r != l {
                    Zero
                } else if matches!(self, Iota0 | Iota1) {
                    rhs
                } else {
                    self
                }
            }
            (Rho1, Rho2) => Rho12,
            (Rho2, Rho3) => Rho23,
            (Rho1, Rho23) => Rho123,
            (Rho12, Rho3) => Rho123,
            _ => Zero,
        }
    }

    pub fn grading(self) -> Result<GroupElement, GradingError> {
        const R1: GroupElement = GroupElement::lit(-1, 1, -1, 0);
        const R2: GroupElement = GroupElement::lit(-1, 1, 1, 0);
        const R3: GroupElement = GroupElement::lit(-1, -1, 1, 0);
        Ok(match self {
            Rho1 => R1,
            Rho2 => R2,
            Rho3 => R3,
            Rho12 => R1 * R2,
            Rho23 => R2 * R3,
            Rho123 => R1 * R2 * R3,
            Iota0 | Iota1 => return Err(GradingError::Ungraded("idempotent")),
            Zero => return Err(GradingError::Ungraded("zero")),
        })
    }

    /// Subscript label: `"1"`, `"23"`, ...
    pub fn label(self) -> &'static str {
        match self {
            Iota0 => "ι0",
            Iota1 => "ι1",
            Rho1 => "1",
            Rho2 => "2",
            Rho3 => "3",
            Rho12 => "12",
            Rho23 => "23",
            Rho123 => "123",
            Zero => "0",
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_reeb() {
            write!(f, "ρ{}", self.label())
        } else {
            f.write_str(self.label())
        }
    }
}
