//! Simple algebraic extensions `Q[x]/(m(x))` with `m` monic and irreducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A monic integer polynomial, coefficients from low to high degree.
#[derive(Debug, PartialEq, Eq)]
pub struct Modulus {
    pub symbol: &'static str,
    pub coeffs: &'static [i64],
}

impl Modulus {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// The rationals, as `Q[x]/(x)`.
pub static RATIONALS: Modulus = Modulus {
    symbol: "x",
    coeffs: &[0, 1],
};
/// `Q(r)` with `r^5 = 18`.
pub static FIFTH_ROOT_18: Modulus = Modulus {
    symbol: "r",
    coeffs: &[-18, 0, 0, 0, 0, 1],
};
/// `Q(z)` with `z` a primitive eighth root of unity.
pub static CYCLOTOMIC_8: Modulus = Modulus {
    symbol: "z",
    coeffs: &[1, 0, 0, 0, 1],
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nf {
    pub modulus: &'static Modulus,
    /// Always exactly `degree` coefficients.
    pub coeffs: Vec<BigRational>,
}

impl Nf {
    pub fn zero(m: &'static Modulus) -> Nf {
        Nf {
            modulus: m,
            coeffs: vec![BigRational::zero(); m.degree()],
        }
    }

    pub fn from_rational(m: &'static Modulus, c: BigRational) -> Nf {
        let mut z = Nf::zero(m);
        z.coeffs[0] = c;
        z
    }

    pub fn from_int(m: &'static Modulus, c: i64) -> Nf {
        Nf::from_rational(m, BigRational::from_integer(c.into()))
    }

    pub fn one(m: &'static Modulus) -> Nf {
        Nf::from_int(m, 1)
    }

    /// The class of `x`. In the rationals this is zero.
    pub fn generator(m: &'static Modulus) -> Nf {
        Nf::from_poly(m, vec![BigRational::zero(), BigRational::one()])
    }

    /// Reduces an arbitrary polynomial modulo `m`.
    pub fn from_poly(m: &'static Modulus, mut p: Vec<BigRational>) -> Nf {
        let n = m.degree();
        while p.len() > n {
            let top = p.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - n;
            for (i, c) in m.coeffs[..n].iter().enumerate() {
                p[shift + i] -= &top * BigInt::from(*c);
            }
        }
        p.resize(n, BigRational::zero());
        Nf {
            modulus: m,
            coeffs: p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    pub fn pow(&self, e: u32) -> Nf {
        let mut acc = Nf::one(self.modulus);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Nf {
        Nf {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self) -> Option<Nf> {
        if self.is_zero() {
            return None;
        }
        let m = self.modulus;
        let mut r0: Vec<BigRational> = m
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer((*c).into()))
            .collect();
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1);
            if rem.is_empty() {
                // nontrivial gcd: the modulus is reducible
                return None;
            }
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
        }
        let c = r1[0].recip();
        Some(Nf::from_poly(m, s1.into_iter().map(|x| x * &c).collect()))
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") / &lead;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl Add for &Nf {
    type Output = Nf;
    fn add(self, o: &Nf) -> Nf {
        assert!(core::ptr::eq(self.modulus, o.modulus), "mixed fields");
        Nf {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Nf {
    type Output = Nf;
    fn sub(self, o: &Nf) -> Nf {
        assert!(core::ptr::eq(self.modulus, o.modulus), "mixed fields");
        Nf {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Nf {
    type Output = Nf;
    fn mul(self, o: &Nf) -> Nf {
        assert!(core::ptr::eq(self.modulus, o.modulus), "mixed fields");
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Nf::from_poly(self.modulus, prod)
    }
}

impl Neg for &Nf {
    type Output = Nf;
    fn neg(self) -> Nf {
        Nf {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let a = c.abs();
            let sym = self.modulus.symbol;
            match i {
                0 => write!(f, "{sign}{a}")?,
                _ => {
                    let pow = if i == 1 {
                        sym.into()
                    } else {
                        alloc::format!("{sym}^{i}")
                    };
                    if a.is_one() {
                        write!(f, "{sign}{pow}")?
                    } else {
                        write!(f, "{sign}{a}*{pow}")?
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let r = Nf::generator(&FIFTH_ROOT_18);
        assert_eq!(r.pow(5), Nf::from_int(&FIFTH_ROOT_18, 18));
        let z = Nf::generator(&CYCLOTOMIC_8);
        assert_eq!(z.pow(4), Nf::from_int(&CYCLOTOMIC_8, -1));
        assert!(z.pow(8).is_one());
        assert_eq!(
            alloc::format!("{}", &(&r * &r) - &Nf::from_int(&FIFTH_ROOT_18, 3)),
            "-3+r^2"
        );
    }

    #[test]
    fn inverses() {
        let r = Nf::generator(&FIFTH_ROOT_18);
        let x = &(&r * &r) + &Nf::from_int(&FIFTH_ROOT_18, 7);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        let z = Nf::generator(&CYCLOTOMIC_8);
        assert_eq!(&z * &z.inv().unwrap(), Nf::one(&CYCLOTOMIC_8));
        assert!(Nf::zero(&RATIONALS).inv().is_none());
        let half = Nf::from_int(&RATIONALS, 2).inv().unwrap();
        assert_eq!(
            half.as_rational().unwrap(),
            &BigRational::new(1.into(), 2.into())
        );
    }
}
