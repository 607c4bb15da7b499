//! The grading group `G` of the torus algebra and double-coset normalization.
//!
//! Elements are quadruples `(a; b, c; d)` with `a, b, c` half-integers,
//! `b + c` an integer and `d` an integer. Half-integers are stored doubled.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::GradingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct GroupElement {
    a2: i64,
    b2: i64,
    c2: i64,
    d: i64,
}

#[derive(Serialize, Deserialize)]
struct RawElement {
    a2: i64,
    b2: i64,
    c2: i64,
    d: i64,
}

impl TryFrom<RawElement> for GroupElement {
    type Error = GradingError;
    fn try_from(r: RawElement) -> Result<Self, Self::Error> {
        GroupElement::new(r.a2, r.b2, r.c2, r.d)
    }
}

impl From<GroupElement> for RawElement {
    fn from(g: GroupElement) -> Self {
        RawElement { a2: g.a2, b2: g.b2, c2: g.c2, d: g.d }
    }
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { a2: 0, b2: 0, c2: 0, d: 0 };

    /// The central element `λ = (1; 0, 0; 0)`.
    pub const LAMBDA: GroupElement = GroupElement { a2: 2, b2: 0, c2: 0, d: 0 };

    /// Builds `(a2/2; b2/2, c2/2; d)`. Fails unless `b + c` is an integer.
    pub fn new(a2: i64, b2: i64, c2: i64, d: i64) -> Result<Self, GradingError> {
        if (b2 + c2).rem_euclid(2) != 0 {
            return Err(GradingError::Malformed { a2, b2, c2, d });
        }
        Ok(GroupElement { a2, b2, c2, d })
    }

    /// Like [`GroupElement::new`] for literals known to be valid.
    pub(crate) const fn lit(a2: i64, b2: i64, c2: i64, d: i64) -> Self {
        assert!((b2 + c2) % 2 == 0);
        GroupElement { a2, b2, c2, d }
    }

    /// The element `U^k = (0; 0, 0; k)`.
    pub const fn u_power(k: i64) -> Self {
        GroupElement { a2: 0, b2: 0, c2: 0, d: k }
    }

    pub fn a2(&self) -> i64 {
        self.a2
    }
    pub fn b2(&self) -> i64 {
        self.b2
    }
    pub fn c2(&self) -> i64 {
        self.c2
    }
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn checked_mul(&self, other: &GroupElement) -> Result<GroupElement, GradingError> {
        // det [[b1, c1], [b2, c2]] in doubled units is (b2_1*c2_2 - c2_1*b2_2) / 2,
        // which is exact because b2 and c2 share parity in both factors.
        let cross = self
            .b2
            .checked_mul(other.c2)
            .zip(self.c2.checked_mul(other.b2))
            .and_then(|(x, y)| x.checked_sub(y))
            .ok_or(GradingError::Overflow)?;
        debug_assert!(cross % 2 == 0);
        let a2 = self
            .a2
            .checked_add(other.a2)
            .and_then(|s| s.checked_add(cross / 2))
            .ok_or(GradingError::Overflow)?;
        let b2 = self.b2.checked_add(other.b2).ok_or(GradingError::Overflow)?;
        let c2 = self.c2.checked_add(other.c2).ok_or(GradingError::Overflow)?;
        let d = self.d.checked_add(other.d).ok_or(GradingError::Overflow)?;
        Ok(GroupElement { a2, b2, c2, d })
    }

    pub fn inv(&self) -> GroupElement {
        // (a; b, c; d)^-1 = (-a; -b, -c; -d): the determinant term vanishes
        // for the pair (g, g^-1) since their (b, c) rows are proportional.
        GroupElement { a2: -self.a2, b2: -self.b2, c2: -self.c2, d: -self.d }
    }

    /// `g^k` for any integer `k`. Powers of a single element never pick up a
    /// determinant term, so this is linear in `k`.
    pub fn pow(&self, k: i64) -> GroupElement {
        GroupElement {
            a2: self.a2 * k,
            b2: self.b2 * k,
            c2: self.c2 * k,
            d: self.d * k,
        }
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.checked_mul(&rhs).expect("grading arithmetic overflow")
    }
}

impl<'a> Mul<&'a GroupElement> for &'a GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        *self * *rhs
    }
}

fn fmt_half(f: &mut fmt::Formatter<'_>, x2: i64) -> fmt::Result {
    if x2 % 2 == 0 {
        write!(f, "{}", x2 / 2)
    } else {
        write!(f, "{}/2", x2)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_half(f, self.a2)?;
        write!(f, "; ")?;
        fmt_half(f, self.b2)?;
        write!(f, ", ")?;
        fmt_half(f, self.c2)?;
        write!(f, "; {})", self.d)
    }
}

/// The pair of subgroup generators defining `<h_A> \ G / <h_D>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleCosetContext {
    h_a: GroupElement,
    h_d: GroupElement,
}

impl DoubleCosetContext {
    /// `h_D` must have `b = -1` and `h_A` must have `b = 0`, `c = ±1`.
    pub fn new(h_a: GroupElement, h_d: GroupElement) -> Result<Self, GradingError> {
        if h_d.b2 != -2 {
            return Err(GradingError::BadContext("h_D must have b-component -1"));
        }
        if h_a.b2 != 0 || h_a.c2.abs() != 2 {
            return Err(GradingError::BadContext("h_A must have b = 0 and c = ±1"));
        }
        Ok(DoubleCosetContext { h_a, h_d })
    }

    pub fn h_a(&self) -> GroupElement {
        self.h_a
    }
    pub fn h_d(&self) -> GroupElement {
        self.h_d
    }

    /// Reduces `g` to the canonical `(N; 0, 0; A_rel)` representative of
    /// `<h_A> g <h_D>` and returns `(N, A_rel)`.
    pub fn normalize(&self, g: &GroupElement) -> Result<(i64, i64), GradingError> {
        // right by h_D^q: b-slot becomes b - q
        if g.b2 % 2 != 0 {
            return Err(GradingError::NonIntegral { stage: "b", element: *g });
        }
        let q = g.b2 / 2;
        let g1 = g.checked_mul(&self.h_d.pow(q))?;
        debug_assert_eq!(g1.b2, 0);
        // left by h_A^p: c-slot becomes c + p*c(h_A)
        if g1.c2 % self.h_a.c2 != 0 {
            return Err(GradingError::NonIntegral { stage: "c", element: g1 });
        }
        let p = -g1.c2 / self.h_a.c2;
        let g2 = self.h_a.pow(p).checked_mul(&g1)?;
        debug_assert_eq!((g2.b2, g2.c2), (0, 0));
        if g2.a2 % 2 != 0 {
            return Err(GradingError::NonIntegral { stage: "a", element: g2 });
        }
        Ok((g2.a2 / 2, g2.d))
    }

    /// Whether `x` and `y` agree in `G / <h_D>`, returning the power `q`
    /// with `x = y * h_D^q`.
    pub fn right_coset_offset(&self, x: &GroupElement, y: &GroupElement) -> Option<i64> {
        let diff = y.inv() * *x;
        let q = diff.b2 / self.h_d.b2;
        (self.h_d.pow(q) == diff).then_some(q)
    }

    /// Whether `x` and `y` agree in `<h_A> \ G`, returning `p` with
    /// `x = h_A^p * y`.
    pub fn left_coset_offset(&self, x: &GroupElement, y: &GroupElement) -> Option<i64> {
        let diff = *x * y.inv();
        let p = diff.c2 / self.h_a.c2;
        (self.h_a.pow(p) == diff).then_some(p)
    }
}

/// `h_D = (-n/2 - 1/2; -1, -n; 0)` for the `n`-framed knot complement.
pub fn h_d(n: i64) -> GroupElement {
    GroupElement::lit(-n - 1, -2, -2 * n, 0)
}
