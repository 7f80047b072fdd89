//! Sparse multivariate polynomials over a number field, stored in graded
//! lexicographic order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::{Modulus, Nf, RATIONALS};
use crate::error::{ensure_len, Error, Result};

/// An exponent vector, ordered by total degree and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub vars: Vec<String>,
    pub field: &'static Modulus,
    terms: BTreeMap<Mono, Nf>,
}

pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl MultiPoly {
    pub fn zero(vars: &[String], field: &'static Modulus) -> MultiPoly {
        MultiPoly {
            vars: vars.to_vec(),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Nf) -> MultiPoly {
        let mut p = MultiPoly::zero(vars, c.modulus);
        p.add_term(Mono(vec![0; vars.len()]), c);
        p
    }

    pub fn var(vars: &[String], field: &'static Modulus, i: usize) -> MultiPoly {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        MultiPoly::monomial(vars, Nf::one(field), &e)
    }

    pub fn monomial(vars: &[String], c: Nf, exps: &[u32]) -> MultiPoly {
        assert_eq!(exps.len(), vars.len(), "exponent length");
        let mut p = MultiPoly::zero(vars, c.modulus);
        p.add_term(Mono(exps.to_vec()), c);
        p
    }

    /// Integer-coefficient terms over the rationals.
    pub fn from_int_terms(vars: &[String], terms: &[(i64, &[u32])]) -> MultiPoly {
        let mut p = MultiPoly::zero(vars, &RATIONALS);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length");
            p.add_term(Mono(e.to_vec()), Nf::from_int(&RATIONALS, *c));
        }
        p
    }

    /// Parses one term per line, `+c e0 e1 ... ek` or `-c e0 ... ek`.
    pub fn parse(text: &str, vars: &[String]) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(vars, &RATIONALS);
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: ln + 1, msg };
            let mut fields = line.split_whitespace();
            let head = fields.next().expect("nonempty line");
            let (neg, digits) = match head.as_bytes()[0] {
                b'+' => (false, &head[1..]),
                b'-' => (true, &head[1..]),
                _ => return Err(err(format!("coefficient `{head}` lacks a sign"))),
            };
            let c: BigInt = digits
                .parse()
                .map_err(|_| err(format!("bad coefficient `{head}`")))?;
            if c <= BigInt::zero() {
                return Err(err(format!(
                    "coefficient `{head}` is not a positive integer"
                )));
            }
            let exps = fields
                .map(|f| {
                    f.parse::<u32>()
                        .map_err(|_| err(format!("bad exponent `{f}`")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if exps.len() != vars.len() {
                return Err(err(format!(
                    "{} exponents for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            let c = BigRational::from_integer(if neg { -c } else { c });
            let mono = Mono(exps);
            if p.terms.contains_key(&mono) {
                return Err(err("repeated monomial".to_string()));
            }
            p.add_term(mono, Nf::from_rational(&RATIONALS, c));
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Mono, c: Nf) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Nf)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Nf {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| Nf::zero(self.field))
    }

    pub fn leading(&self) -> Option<(&Mono, &Nf)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Reinterprets rational coefficients in a larger field.
    pub fn over(&self, field: &'static Modulus) -> MultiPoly {
        let mut p = MultiPoly::zero(&self.vars, field);
        for (m, c) in &self.terms {
            let r = c.as_rational().expect("rational coefficients").clone();
            p.add_term(m.clone(), Nf::from_rational(field, r));
        }
        p
    }

    fn same_ring(&self, o: &MultiPoly) {
        assert_eq!(self.vars, o.vars, "different variables");
        assert!(core::ptr::eq(self.field, o.field), "different fields");
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        self.same_ring(o);
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> MultiPoly {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -&*c;
        }
        p
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Nf) -> MultiPoly {
        let mut p = MultiPoly::zero(&self.vars, self.field);
        for (m, x) in &self.terms {
            p.add_term(m.clone(), x * c);
        }
        p
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        self.same_ring(o);
        let mut p = MultiPoly::zero(&self.vars, self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let one = MultiPoly::constant(&self.vars, Nf::one(self.field));
        (0..e).fold(one, |acc, _| acc.mul(self))
    }

    /// Substitutes `subst[i]` for the `i`-th variable.
    pub fn compose(&self, subst: &[MultiPoly]) -> Result<MultiPoly> {
        ensure_len(self.nvars(), subst.len())?;
        let first = subst.first().ok_or(Error::Dimension {
            expected: 1,
            got: 0,
        })?;
        let (vars, field) = (&first.vars, first.field);
        for s in subst {
            if &s.vars != vars || !core::ptr::eq(s.field, field) {
                return Err(Error::InvalidParameter(
                    "substitutions live in different rings".into(),
                ));
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = subst
            .iter()
            .map(|s| vec![MultiPoly::constant(vars, Nf::one(field)), s.clone()])
            .collect();
        let mut out = MultiPoly::zero(vars, field);
        for (m, c) in &self.terms {
            let c = match c.as_rational() {
                Some(r) if !core::ptr::eq(c.modulus, field) => Nf::from_rational(field, r.clone()),
                _ if !core::ptr::eq(c.modulus, field) => {
                    return Err(Error::InvalidParameter("coefficient field mismatch".into()))
                }
                _ => c.clone(),
            };
            let mut t = MultiPoly::constant(vars, c);
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().expect("nonempty").mul(&subst[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Nf]) -> Result<Nf> {
        ensure_len(self.nvars(), point.len())?;
        let mut acc = Nf::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Evaluation at a rational point, for polynomials over the rationals.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        ensure_len(self.nvars(), point.len())?;
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c
                .as_rational()
                .ok_or_else(|| Error::InvalidParameter("irrational coefficient".into()))?
                .clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(&self.vars, self.field);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            p.add_term(m2, c.scale(&BigRational::from_integer(e.into())));
        }
        p
    }

    /// Division with remainder by a single divisor: `self = q * g + r` with
    /// no term of `r` divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        self.same_ring(g);
        let (lm, lc) = g.leading().ok_or(Error::ZeroVector)?;
        let lc_inv = lc.inv().ok_or(Error::ZeroVector)?;
        let mut p = self.clone();
        let mut quot = MultiPoly::zero(&self.vars, self.field);
        let mut rem = MultiPoly::zero(&self.vars, self.field);
        while let Some((m, c)) = p
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            if lm.divides(&m) {
                let t = MultiPoly::monomial(&self.vars, &c * &lc_inv, &m.div(lm).0);
                quot = quot.add(&t);
                p = p.sub(&t.mul(g));
            } else {
                p.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
        Ok((quot, rem))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> =
                m.0.iter()
                    .zip(&self.vars)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, v)| {
                        if *e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            let coeff = format!("{c}");
            let bracketed = if c.as_rational().is_some() {
                coeff
            } else {
                format!("({coeff})")
            };
            let sep = if k == 0 || bracketed.starts_with('-') {
                ""
            } else {
                "+"
            };
            if mono.is_empty() {
                write!(f, "{sep}{bracketed}")?;
            } else if c.is_one() {
                write!(f, "{sep}{}", mono.join("*"))?;
            } else if bracketed == "-1" {
                write!(f, "-{}", mono.join("*"))?;
            } else {
                write!(f, "{sep}{bracketed}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `BigRational` helper for integer literals.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st() -> Vec<String> {
        vec!["s".into(), "t".into()]
    }

    #[test]
    fn order_and_display() {
        let v = st();
        let p = MultiPoly::from_int_terms(&v, &[(1, &[0, 2]), (-3, &[2, 1]), (2, &[1, 0])]);
        assert_eq!(p.to_string(), "-3*s^2*t+t^2+2*s");
        assert_eq!(p.total_degree(), Some(3));
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let v = st();
        let p = MultiPoly::parse("+1 2 0\n-4 1 1\n", &v).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&[1, 1]), Nf::from_int(&RATIONALS, -4));
        assert!(matches!(
            MultiPoly::parse("1 2 0", &v),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            MultiPoly::parse("+1 2 0\n+2 1", &v),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(MultiPoly::parse("+0 1 1", &v).is_err());
        assert!(MultiPoly::parse("+1 1 1\n-1 1 1", &v).is_err());
    }

    #[test]
    fn division() {
        let v = st();
        let s = MultiPoly::var(&v, &RATIONALS, 0);
        let t = MultiPoly::var(&v, &RATIONALS, 1);
        let g = s.mul(&s).sub(&t.mul(&t));
        let h = s.mul(&t).add(&t.pow(2)).sub(&s);
        let (q, r) = g.mul(&h).div_rem(&g).unwrap();
        assert_eq!(q, h);
        assert!(r.is_zero());
        let (_, r) = s.pow(3).add(&t).div_rem(&g).unwrap();
        assert_eq!(r, s.mul(&t.pow(2)).add(&t));
    }

    #[test]
    fn derivative_and_eval() {
        let v = st();
        let p = MultiPoly::from_int_terms(&v, &[(1, &[3, 1]), (5, &[0, 2])]);
        assert_eq!(
            p.derivative(0),
            MultiPoly::from_int_terms(&v, &[(3, &[2, 1])])
        );
        assert_eq!(p.eval_rational(&[rat(2), rat(-1)]).unwrap(), rat(-3));
        let n = [Nf::from_int(&RATIONALS, 2), Nf::from_int(&RATIONALS, -1)];
        assert_eq!(p.eval(&n).unwrap(), Nf::from_int(&RATIONALS, -3));
    }
}
