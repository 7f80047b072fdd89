//! Chern classes in the cohomology ring of the projective plane, truncated
//! above degree two, and the quartic intersection form of a K3^[2]-type
//! fourfold.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{q, Q};

/// `c0 + c1 H + c2 H^2`, with `H^2` the class of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedClass {
    pub c0: Q,
    pub c1: Q,
    pub c2: Q,
}

impl TruncatedClass {
    pub fn new(c0: i64, c1: i64, c2: i64) -> Self {
        TruncatedClass {
            c0: q(c0),
            c1: q(c1),
            c2: q(c2),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn pow(self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self)
    }
}

impl Mul for TruncatedClass {
    type Output = TruncatedClass;

    fn mul(self, o: TruncatedClass) -> TruncatedClass {
        TruncatedClass {
            c0: self.c0 * o.c0,
            c1: self.c0 * o.c1 + self.c1 * o.c0,
            c2: self.c0 * o.c2 + self.c1 * o.c1 + self.c2 * o.c0,
        }
    }
}

impl fmt::Display for TruncatedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c0)?;
        for (c, m) in [(self.c1, "H"), (self.c2, "H^2")] {
            if c.is_zero() {
                continue;
            }
            if c < Q::zero() {
                write!(f, "-{}{m}", -c)?;
            } else {
                write!(f, "+{c}{m}")?;
            }
        }
        Ok(())
    }
}

/// Total Chern class of the cotangent bundle of the plane.
pub const OMEGA_P2: TruncatedClass = TruncatedClass {
    c0: Q::new_raw(1, 1),
    c1: Q::new_raw(-3, 1),
    c2: Q::new_raw(3, 1),
};

/// `c(base (x) O(twist))^power` for a bundle of the given rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub rank: i64,
    pub twist: i64,
    pub power: u32,
    pub base: TruncatedClass,
}

impl Factor {
    /// `(1 + tH)^power`.
    pub fn line(twist: i64, power: u32) -> Self {
        Factor {
            rank: 1,
            twist,
            power,
            base: TruncatedClass::one(),
        }
    }

    pub fn twisted(&self) -> TruncatedClass {
        let r = self.rank;
        let t = q(self.twist);
        let b = self.base;
        TruncatedClass {
            c0: b.c0,
            c1: b.c1 + t * r,
            c2: b.c2 + b.c1 * t * (r - 1) + t * t * (r * (r - 1) / 2),
        }
    }
}

pub fn chern_product(factors: &[Factor]) -> TruncatedClass {
    factors.iter().fold(TruncatedClass::one(), |acc, f| {
        acc * f.twisted().pow(f.power)
    })
}

/// `c2(A) = -(9/2) r (r-1) + c2(pi_* A)` for a sheaf of rank `r`.
pub fn pushforward_c2(r: i64, c_push: &TruncatedClass) -> Result<i64> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!(
            "rank {r} must be positive"
        )));
    }
    if c_push.c1 != q(-3 * r) {
        return Err(Error::Precondition(format!(
            "c1 = {} but expected {}",
            c_push.c1,
            -3 * r
        )));
    }
    let v = Q::new(-9 * r * (r - 1), 2) + c_push.c2;
    if !v.is_integer() {
        return Err(Error::NotIntegral);
    }
    Ok(v.to_integer())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedExample {
    pub name: &'static str,
    pub rank: i64,
    pub push: TruncatedClass,
    pub c2: i64,
}

pub const EXAMPLE_NAMES: [&str; 4] = ["order-two", "odd-theta", "even-theta", "bx"];

fn push_class(name: &str) -> Option<(i64, Vec<Factor>)> {
    let omega = Factor {
        rank: 2,
        twist: 0,
        power: 2,
        base: OMEGA_P2,
    };
    match name {
        "odd-theta" => Some((
            4,
            alloc::vec![
                Factor::line(-1, 3),
                Factor::line(-2, 3),
                Factor::line(-3, 1)
            ],
        )),
        "even-theta" => Some((
            16,
            alloc::vec![
                Factor::line(-1, 15),
                Factor::line(-2, 15),
                Factor::line(-3, 1)
            ],
        )),
        "bx" => Some((
            4,
            alloc::vec![
                Factor::line(-2, 1),
                omega,
                Factor::line(-1, 1),
                Factor::line(-3, 1)
            ],
        )),
        _ => None,
    }
}

pub fn named_example(name: &str) -> Result<NamedExample> {
    if name == "order-two" {
        let o = order_two_example();
        return Ok(NamedExample {
            name: "order-two",
            rank: 3,
            push: TruncatedClass::one(),
            c2: o.c2,
        });
    }
    let (rank, factors) = push_class(name).ok_or_else(|| Error::UnknownName(name.into()))?;
    let push = chern_product(&factors);
    let c2 = pushforward_c2(rank, &push)?;
    let name = EXAMPLE_NAMES
        .into_iter()
        .find(|n| *n == name)
        .expect("listed");
    Ok(NamedExample {
        name,
        rank,
        push,
        c2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderTwo {
    /// `c2` of the dual of the rank-three bundle, `3h^2` with `h^2 = 2`.
    pub chain: i64,
    /// `[C]^2 - c1(L(3))` pushed forward, `9h^2 - 9h^2`.
    pub correction: i64,
    pub c2: i64,
}

/// `c(E^vee) = (1+h)^3` on the degree-two K3, corrected along the curve.
pub fn order_two_example() -> OrderTwo {
    let h2 = 2;
    // (1+h)^3 = 1 + 3h + 3h^2
    let chain = 3 * h2;
    let curve_sq = 9 * h2;
    let restricted = 3 * 3 * h2;
    let correction = curve_sq - restricted;
    OrderTwo {
        chain,
        correction,
        c2: chain + correction,
    }
}

/// `(ab)(ce) + (ac)(be) + (ae)(bc)` for a rank-two quadratic form.
pub fn fujiki_product(gram: &[[Q; 2]; 2], a: &[Q; 2], b: &[Q; 2], c: &[Q; 2], e: &[Q; 2]) -> Q {
    let p = |x: &[Q; 2], y: &[Q; 2]| -> Q {
        let mut s = Q::zero();
        for i in 0..2 {
            for j in 0..2 {
                s += x[i] * gram[i][j] * y[j];
            }
        }
        s
    };
    p(a, b) * p(c, e) + p(a, c) * p(b, e) + p(a, e) * p(b, c)
}

/// `E^i (H-E)^(4-i)` for `i = 1, 2, 3` on `<2d> + <-2>`.
pub fn exceptional_products(d: i64) -> [Q; 3] {
    let g = [[q(2 * d), Q::zero()], [Q::zero(), q(-2)]];
    let e = [Q::zero(), Q::one()];
    let f = [Q::one(), -Q::one()];
    [
        fujiki_product(&g, &e, &f, &f, &f),
        fujiki_product(&g, &e, &e, &f, &f),
        fujiki_product(&g, &e, &e, &e, &f),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicInvariants {
    pub ke3: i64,
    pub c2w: i64,
    pub c2e_fiber_coeff: i64,
    pub c3e: i64,
    /// `(h00, h10, h20, h11, h30, h21)`.
    pub hodge: [i64; 6],
}

impl ConicInvariants {
    pub fn new(c2w: i64) -> Self {
        ConicInvariants {
            ke3: 2 * c2w,
            c2w,
            c2e_fiber_coeff: 24,
            c3e: 48,
            hodge: [1, 0, 1, 21, 0, 0],
        }
    }

    /// Betti numbers of the threefold from its Hodge numbers.
    pub fn betti(&self) -> [i64; 7] {
        let [h00, h10, h20, h11, h30, h21] = self.hodge;
        let b0 = h00;
        let b1 = 2 * h10;
        let b2 = 2 * h20 + h11;
        let b3 = 2 * (h30 + h21);
        [b0, b1, b2, b3, b2, b1, b0]
    }

    pub fn euler(&self) -> i64 {
        self.betti()
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 0 { *b } else { -b })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let a = chern_product(&[
            Factor::line(-1, 3),
            Factor::line(-2, 3),
            Factor::line(-3, 1),
        ]);
        assert_eq!(a, TruncatedClass::new(1, -12, 60));
        let b = chern_product(&[
            Factor::line(-1, 15),
            Factor::line(-2, 15),
            Factor::line(-3, 1),
        ]);
        assert_eq!(b, TruncatedClass::new(1, -48, 1110));
        let omega = Factor {
            rank: 2,
            twist: 0,
            power: 2,
            base: OMEGA_P2,
        };
        let c = chern_product(&[
            Factor::line(-2, 1),
            omega,
            Factor::line(-1, 1),
            Factor::line(-3, 1),
        ]);
        assert_eq!(c, TruncatedClass::new(1, -12, 62));
        assert_eq!(format!("{c}"), "1-12H+62H^2");
    }

    #[test]
    fn twist_rank_two() {
        // Omega(3) is the tangent bundle, c = (1+H)^3
        let f = Factor {
            rank: 2,
            twist: 3,
            power: 1,
            base: OMEGA_P2,
        };
        assert_eq!(f.twisted(), TruncatedClass::new(1, 3, 3));
    }

    #[test]
    fn pushforwards() {
        assert_eq!(
            pushforward_c2(4, &TruncatedClass::new(1, -12, 60)).unwrap(),
            6
        );
        assert_eq!(
            pushforward_c2(16, &TruncatedClass::new(1, -48, 1110)).unwrap(),
            30
        );
        assert_eq!(
            pushforward_c2(4, &TruncatedClass::new(1, -12, 62)).unwrap(),
            8
        );
        assert!(pushforward_c2(4, &TruncatedClass::new(1, -11, 62)).is_err());
    }

    #[test]
    fn named() {
        let got: Vec<i64> = EXAMPLE_NAMES
            .iter()
            .map(|n| named_example(n).unwrap().c2)
            .collect();
        assert_eq!(got, [6, 6, 30, 8]);
        let o = order_two_example();
        assert_eq!((o.chain, o.correction, o.c2), (6, 0, 6));
        assert!(named_example("nope").is_err());
    }

    #[test]
    fn fujiki() {
        for d in 1..=10 {
            assert_eq!(
                exceptional_products(d),
                [q(12 * (d - 1)), q(4 * (3 - d)), q(-12)]
            );
        }
    }

    #[test]
    fn conic() {
        let c = ConicInvariants::new(6);
        assert_eq!(c.ke3, 12);
        assert_eq!(c.betti(), [1, 0, 23, 0, 23, 0, 1]);
        assert_eq!(c.euler(), c.c3e);
    }
}
