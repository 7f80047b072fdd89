//! Order-two Brauer classes on a K3 surface of degree `2d`.
//!
//! A class is a pair `(a, lambda mod 2)` with `a` in `{0,1}` and `lambda` in
//! `Lambda' = U^2 + E8(-1)^2`, the orthogonal complement of the first `U`
//! block. The polarization is `h = (1,d)_1`, and `v = (1,-d)_1` spans the rest
//! of that block.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{ensure_len, Error, Result};
use crate::lattice::{self, q, DiscriminantGroup, Lattice, Sublattice, Q};
use crate::report::Report;

/// Offset of `Lambda'` inside the 22 K3 coordinates.
pub const PRIME_OFFSET: usize = 2;
pub const PRIME_RANK: usize = 20;
pub const K3_RANK: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerClass {
    pub d: i64,
    pub a: u8,
    /// Integral lift of `lambda mod 2`.
    pub lambda: Vec<i64>,
}

impl BrauerClass {
    pub fn new(d: i64, a: u8, lambda: Vec<i64>) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter(format!("d = {d} must be positive")));
        }
        if a > 1 {
            return Err(Error::InvalidParameter(format!("a = {a} must be 0 or 1")));
        }
        ensure_len(PRIME_RANK, lambda.len())?;
        Ok(BrauerClass { d, a, lambda })
    }

    pub fn is_trivial(&self) -> bool {
        self.a == 0 && self.lambda.iter().all(|x| x % 2 == 0)
    }

    pub fn lambda_sq(&self) -> Result<i64> {
        lattice::lambda_prime().inner_int(&self.lambda, &self.lambda)
    }
}

/// Half-integral class in the 22 K3 coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BField {
    pub d: i64,
    pub coords: Vec<Q>,
}

impl BField {
    pub fn new(d: i64, coords: Vec<Q>) -> Result<Self> {
        ensure_len(K3_RANK, coords.len())?;
        if coords.iter().any(|c| !(*c * 2).is_integer()) {
            return Err(Error::InvalidParameter("2B must be integral".into()));
        }
        Ok(BField { d, coords })
    }

    pub fn zero(d: i64) -> Self {
        BField {
            d,
            coords: vec![Q::zero(); K3_RANK],
        }
    }

    pub fn twice(&self) -> Vec<i64> {
        self.coords.iter().map(|c| (*c * 2).to_integer()).collect()
    }

    pub fn bh(&self) -> Q {
        lattice::inner(
            &lattice::k3(),
            &self.coords,
            &lattice::qv(&polarization(self.d)),
        )
        .expect("rank 22")
    }

    pub fn square(&self) -> Q {
        lattice::inner(&lattice::k3(), &self.coords, &self.coords).expect("rank 22")
    }
}

pub fn polarization(d: i64) -> Vec<i64> {
    lattice::u_vec(K3_RANK, 1, 1, d)
}

fn frac(x: Q) -> Q {
    x - x.floor()
}

pub fn bfield_of_class(c: &BrauerClass) -> BField {
    let mut coords = vec![Q::zero(); K3_RANK];
    coords[1] = Q::new(i64::from(c.a), 2);
    for (i, l) in c.lambda.iter().enumerate() {
        coords[PRIME_OFFSET + i] = Q::new(*l, 2);
    }
    BField { d: c.d, coords }
}

/// Recovers `(a, lambda mod 2)` from any representative.
pub fn class_of_bfield(b: &BField) -> BrauerClass {
    let mut w: Vec<i64> = b.twice().iter().map(|x| x.mod_floor(&2)).collect();
    if w[0] == 1 {
        // subtract h/2 = (1/2, d/2)_1
        w[0] = 0;
        w[1] = (w[1] - b.d).mod_floor(&2);
    }
    BrauerClass {
        d: b.d,
        a: w[1] as u8,
        lambda: w[PRIME_OFFSET..].to_vec(),
    }
}

pub fn invariant_bh(b: &BField) -> Q {
    frac(b.bh())
}

/// `B^2 mod Z`, defined only when `4Bh + h^2 = 0 mod 4`.
pub fn invariant_b2(b: &BField) -> Option<Q> {
    let t = b.bh() * 4 + Q::from_integer(2 * b.d);
    if t.is_integer() && t.to_integer() % 4 == 0 {
        Some(frac(b.square()))
    } else {
        None
    }
}

/// Canonical representative of the class of `b` with `Bh, B^2` in `{0, 1/2}`
/// and `2B` primitive. Depends only on the class, so it is idempotent.
pub fn normalize_bfield(b: &BField) -> Result<BField> {
    let c = class_of_bfield(b);
    if c.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let base = bfield_of_class(&c);
    let mut coords = base.coords.clone();
    let sq = base.square();
    let k = (sq - frac(sq)).to_integer();

    // U_2, U_3 coordinates of K3 are 2..6
    if let Some(j) = (2..6).find(|&j| c.lambda[j - PRIME_OFFSET] % 2 != 0) {
        // pairing with e_partner picks out the 1/2 at j; e_partner^2 = 0
        coords[j ^ 1] -= q(k);
    } else if c.lambda.iter().any(|x| x % 2 != 0) {
        let mut k = k;
        if k % 2 != 0 {
            let g = lattice::lambda_prime();
            let gl: Vec<i64> = (0..PRIME_RANK)
                .map(|i| g.gram()[i].iter().zip(&c.lambda).map(|(a, b)| a * b).sum())
                .collect();
            let i = (0..PRIME_RANK)
                .find(|&i| gl[i] % 2 != 0)
                .expect("E8 part is unimodular");
            // (B + e_i)^2 = B^2 + (G lambda)_i - 2
            coords[PRIME_OFFSET + i] += q(1);
            k += gl[i] - 2;
        }
        // (1, -k/2)_2 has square -k and is orthogonal to B; it also makes 2B primitive
        coords[2] += q(1);
        coords[3] -= q(k / 2);
    }
    Ok(BField { d: b.d, coords })
}

/// The three isometry types of `Gamma_alpha` for a given parity of `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrauerType {
    /// `d` even, `Bh = 0`, `B^2 = 0`.
    Bh0Sq0,
    /// `d` even, `Bh = 0`, `B^2 = 1/2`.
    Bh0Sq2,
    /// `d` even, `Bh = 1/2`.
    BhHalf,
    /// `d` odd, `Bh = 0`.
    Bh0,
    /// `d` odd, `Bh = 1/2`, `B^2 = 0`.
    BhHalfSq0,
    /// `d` odd, `Bh = 1/2`, `B^2 = 1/2`.
    BhHalfSq2,
}

impl BrauerType {
    pub const ALL: [BrauerType; 6] = [
        BrauerType::Bh0Sq0,
        BrauerType::Bh0Sq2,
        BrauerType::BhHalf,
        BrauerType::Bh0,
        BrauerType::BhHalfSq0,
        BrauerType::BhHalfSq2,
    ];

    pub fn for_parity(d: i64) -> [BrauerType; 3] {
        if d % 2 == 0 {
            [BrauerType::Bh0Sq0, BrauerType::Bh0Sq2, BrauerType::BhHalf]
        } else {
            [
                BrauerType::Bh0,
                BrauerType::BhHalfSq0,
                BrauerType::BhHalfSq2,
            ]
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BrauerType::Bh0Sq0 => "Bh=0,B2=0",
            BrauerType::Bh0Sq2 => "Bh=0,B2=1/2",
            BrauerType::BhHalf => "Bh=1/2",
            BrauerType::Bh0 => "Bh=0",
            BrauerType::BhHalfSq0 => "Bh=1/2,B2=0",
            BrauerType::BhHalfSq2 => "Bh=1/2,B2=1/2",
        }
    }

    /// Names used for the double plane (`d = 1`).
    pub fn geometric_name(self, d: i64) -> Option<&'static str> {
        if d != 1 {
            return None;
        }
        match self {
            BrauerType::Bh0 => Some("order-two point"),
            BrauerType::BhHalfSq0 => Some("even theta"),
            BrauerType::BhHalfSq2 => Some("odd theta"),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Option<BrauerType> {
        Self::ALL.into_iter().find(|t| t.label() == s).or(match s {
            "order-two-point" | "order-two point" => Some(BrauerType::Bh0),
            "even-theta" | "even theta" => Some(BrauerType::BhHalfSq0),
            "odd-theta" | "odd theta" => Some(BrauerType::BhHalfSq2),
            _ => None,
        })
    }

    pub fn matches_parity(self, d: i64) -> bool {
        Self::for_parity(d).contains(&self)
    }

    /// `Bh` of the type.
    pub fn bh(self) -> Q {
        match self {
            BrauerType::Bh0Sq0 | BrauerType::Bh0Sq2 | BrauerType::Bh0 => Q::zero(),
            _ => Q::new(1, 2),
        }
    }

    /// `B^2 mod Z` when it is an invariant of the type.
    pub fn b2(self) -> Option<Q> {
        match self {
            BrauerType::Bh0Sq0 | BrauerType::BhHalfSq0 => Some(Q::zero()),
            BrauerType::Bh0Sq2 | BrauerType::BhHalfSq2 => Some(Q::new(1, 2)),
            _ => None,
        }
    }
}

pub fn brauer_type(c: &BrauerClass) -> Result<BrauerType> {
    if c.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let sq2 = c.lambda_sq()?.mod_floor(&4) == 2;
    Ok(match (c.d % 2 == 0, c.a == 1, sq2) {
        (true, false, false) => BrauerType::Bh0Sq0,
        (true, false, true) => BrauerType::Bh0Sq2,
        (true, true, _) => BrauerType::BhHalf,
        (false, false, _) => BrauerType::Bh0,
        (false, true, false) => BrauerType::BhHalfSq0,
        (false, true, true) => BrauerType::BhHalfSq2,
    })
}

/// A class of the given `(a, lambda^2 mod 4)` shape. `lambda` is `0` or
/// `(1,0)_2` when `lambda^2 = 0 mod 4`, and `(1,1)_2` otherwise.
pub fn representative(d: i64, a: u8, lambda_sq_mod4: u8) -> Result<BrauerClass> {
    let mut lambda = vec![0i64; PRIME_RANK];
    match lambda_sq_mod4 {
        0 if a == 0 => lambda[0] = 1,
        0 => {}
        2 => {
            lambda[0] = 1;
            lambda[1] = 1;
        }
        x => {
            return Err(Error::InvalidParameter(format!(
                "lambda^2 mod 4 = {x} must be 0 or 2"
            )))
        }
    }
    BrauerClass::new(d, a, lambda)
}

/// `T_K = <-2d> + Lambda'` with `v` as coordinate 0.
pub fn transcendental_k(d: i64) -> Result<Lattice> {
    Ok(lattice::direct_sum(&[
        lattice::diag(-2 * d)?,
        lattice::lambda_prime(),
    ]))
}

fn functional(c: &BrauerClass) -> Vec<i64> {
    let g = lattice::lambda_prime();
    let mut f = vec![i64::from(c.a)];
    for row in g.gram() {
        let s: i64 = row.iter().zip(&c.lambda).map(|(a, b)| a * b).sum();
        f.push(s.mod_floor(&2));
    }
    f
}

/// Kernel of `(n v, x) -> a n + lambda.x mod 2` in `T_K`, as a rank-21 sublattice.
pub fn gamma_alpha(c: &BrauerClass) -> Result<Sublattice> {
    if c.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let f = functional(c);
    let n = f.len();
    let i = f
        .iter()
        .position(|&x| x == 1)
        .expect("nontrivial functional");
    let mut basis = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0i64; n];
        if j == i {
            e[i] = 2;
        } else {
            e[j] = 1;
            if f[j] == 1 {
                e[i] = -1;
            }
        }
        basis.push(e);
    }
    let lattice = transcendental_k(c.d)?.restrict(&basis)?;
    Ok(Sublattice { basis, lattice })
}

/// Coordinates of `x` (in `T_K`) with respect to the basis of `gamma_alpha(c)`.
pub fn gamma_coords(c: &BrauerClass, x: &[Q]) -> Result<Vec<Q>> {
    let f = functional(c);
    ensure_len(f.len(), x.len())?;
    let i = f.iter().position(|&v| v == 1).ok_or(Error::TrivialClass)?;
    let mut y = x.to_vec();
    let mut acc = x[i];
    for j in 0..f.len() {
        if j != i && f[j] == 1 {
            acc += x[j];
        }
    }
    y[i] = acc / 2;
    Ok(y)
}

fn pairing_one(w: &[i64]) -> Option<Vec<i64>> {
    let mut coeffs = vec![0i64; w.len()];
    let mut g = 0i64;
    for (k, &x) in w.iter().enumerate() {
        let e = g.extended_gcd(&x);
        for c in coeffs.iter_mut() {
            *c *= e.x;
        }
        coeffs[k] = e.y;
        g = e.gcd;
    }
    match g {
        1 => Some(coeffs),
        -1 => Some(coeffs.into_iter().map(|c| -c).collect()),
        _ => None,
    }
}

/// Dual lifts `v/2d`, `lambda/2`, `mu` (with `lambda.mu = 1`) for `a = 0`.
pub fn gamma_dual_generators(c: &BrauerClass) -> Result<[Vec<Q>; 3]> {
    if c.a != 0 || c.is_trivial() {
        return Err(Error::Precondition(
            "dual generators need a = 0 and a nontrivial class".into(),
        ));
    }
    let g = lattice::lambda_prime();
    let w: Vec<i64> = g
        .gram()
        .iter()
        .map(|row| row.iter().zip(&c.lambda).map(|(a, b)| a * b).sum())
        .collect();
    let mu = pairing_one(&w).ok_or(Error::Precondition("lambda is not primitive".into()))?;
    let mut x1 = vec![Q::zero(); 21];
    x1[0] = Q::new(1, 2 * c.d);
    let mut x2 = vec![Q::zero(); 21];
    let mut x3 = vec![Q::zero(); 21];
    for k in 0..PRIME_RANK {
        x2[k + 1] = Q::new(c.lambda[k], 2);
        x3[k + 1] = q(mu[k]);
    }
    Ok([x1, x2, x3])
}

/// The discriminant form in the dual basis `v/2d, lambda/2, mu`:
/// `q(i v/2d + j lambda/2 + k mu) = -i^2/2d + j^2 lambda^2/4 + jk mod 2`.
/// The sign of the first term is the sign of `v^2 = -2d`.
pub fn gamma_q_closed_form(d: i64, lambda_sq: i64, i: i64, j: i64, k: i64) -> Q {
    lattice::reduce_mod(
        Q::new(-i * i, 2 * d) + Q::new(j * j * lambda_sq, 4) + q(j * k),
        2,
    )
}

/// Verifies the discriminant group of `Gamma_alpha` against the expected
/// cyclic structure and, for `a = 0`, against the closed form above.
pub fn gamma_discriminant_report(c: &BrauerClass) -> Result<Report> {
    let mut r = Report::new(format!("gamma d={} a={}", c.d, c.a));
    let gamma = gamma_alpha(c)?;
    let dg = lattice::discriminant_group(&gamma.lattice)?;
    let expect: Vec<u64> = if c.a == 0 {
        vec![2, 2, 2 * c.d as u64]
    } else {
        vec![8 * c.d as u64]
    };
    let expect: Vec<u64> = expect.into_iter().filter(|&x| x > 1).collect();
    r.check(
        "cyclic orders",
        fmt_list(&expect),
        fmt_list(&dg.cyclic_orders),
    );
    r.check("|det|", 8 * c.d as u64, gamma.lattice.abs_det()?);
    r.check("order", gamma.lattice.abs_det()?, dg.order());
    if c.a == 1 {
        return Ok(r);
    }
    let tk = transcendental_k(c.d)?;
    let gens = gamma_dual_generators(c)?;
    let lsq = c.lambda_sq()?;
    let dual_ok = gens.iter().all(|x| {
        gamma.basis.iter().all(|b| {
            tk.inner(x, &lattice::qv(b))
                .map(|v| v.is_integer())
                .unwrap_or(false)
        })
    });
    r.truth(
        "v/2d, lambda/2, mu lie in the dual",
        dual_ok,
        "non-integral pairing",
    );
    let coords: Vec<Vec<Q>> = gens
        .iter()
        .map(|x| gamma_coords(c, x))
        .collect::<Result<_>>()?;
    r.check(
        "generated subgroup order",
        dg.order(),
        lattice::quotient_order(21, &coords)?,
    );
    let mut mismatches = 0usize;
    let mut closed = Vec::new();
    for i in 0..2 * c.d {
        for j in 0..2 {
            for k in 0..2 {
                let x: Vec<Q> = (0..21)
                    .map(|t| gens[0][t] * i + gens[1][t] * j + gens[2][t] * k)
                    .collect();
                let direct = lattice::reduce_mod(tk.inner(&x, &x)?, 2);
                let formula = gamma_q_closed_form(c.d, lsq, i, j, k);
                if direct != formula {
                    mismatches += 1;
                }
                closed.push(formula);
            }
        }
    }
    r.check("closed-form q mismatches", 0, mismatches);
    closed.sort();
    r.truth(
        "q multiset agrees with SNF generators",
        q_multiset(&dg) == closed,
        "multisets differ",
    );
    Ok(r)
}

fn fmt_list(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", parts.join(","))
}

/// Sorted list of `q(x)` over every element of the group.
pub fn q_multiset(dg: &DiscriminantGroup) -> Vec<Q> {
    let k = dg.cyclic_orders.len();
    let mut out = Vec::new();
    let mut idx = vec![0u64; k];
    loop {
        let mut val = Q::zero();
        for a in 0..k {
            let ia = idx[a] as i64;
            val += dg.q_values[a] * (ia * ia);
            for b in a + 1..k {
                val += dg.b_values[a][b] * (2 * ia * idx[b] as i64);
            }
        }
        out.push(lattice::reduce_mod(val, 2));
        let mut t = 0;
        loop {
            if t == k {
                out.sort();
                return out;
            }
            idx[t] += 1;
            if idx[t] < dg.cyclic_orders[t] {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassCounts {
    pub bh0_sq0: u64,
    pub bh0_sq2: u64,
    pub bhhalf_sq0: u64,
    pub bhhalf_sq2: u64,
}

impl ClassCounts {
    pub fn total(&self) -> u64 {
        self.bh0_sq0 + self.bh0_sq2 + self.bhhalf_sq0 + self.bhhalf_sq2
    }
}

/// Buckets all nonzero `(a, lambda)` with `lambda` in `{0,1}^20` by `a` and
/// `lambda^2 mod 4`, walking `lambda` in Gray-code order.
pub fn count_classes() -> ClassCounts {
    let g = lattice::lambda_prime();
    let gram = g.gram();
    let mut lam = [0i64; PRIME_RANK];
    let mut gl = [0i64; PRIME_RANK];
    let mut sq: i64 = 0;
    let mut counts = ClassCounts::default();
    let tally = |sq: i64, zero: bool, counts: &mut ClassCounts| {
        let s2 = sq.mod_floor(&4) == 2;
        if !zero {
            if s2 {
                counts.bh0_sq2 += 1;
            } else {
                counts.bh0_sq0 += 1;
            }
        }
        if s2 {
            counts.bhhalf_sq2 += 1;
        } else {
            counts.bhhalf_sq0 += 1;
        }
    };
    tally(0, true, &mut counts);
    for step in 1u32..(1 << PRIME_RANK) {
        let k = step.trailing_zeros() as usize;
        let sign = if lam[k] == 0 { 1 } else { -1 };
        sq += sign * 2 * gl[k] + gram[k][k];
        lam[k] += sign;
        for (i, row) in gram.iter().enumerate() {
            gl[i] += sign * row[k];
        }
        tally(sq, false, &mut counts);
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(pairs: &[(usize, i64)]) -> Vec<i64> {
        let mut v = vec![0i64; PRIME_RANK];
        for &(i, x) in pairs {
            v[i] = x;
        }
        v
    }

    #[test]
    fn bfield_examples() {
        let c = BrauerClass::new(1, 1, lam(&[])).unwrap();
        let b = bfield_of_class(&c);
        assert_eq!(b.coords[1], Q::new(1, 2));
        assert_eq!(b.bh(), Q::new(1, 2));
        assert_eq!(b.square(), Q::zero());

        let c = BrauerClass::new(2, 0, lam(&[(0, 1), (1, 1)])).unwrap();
        let b = bfield_of_class(&c);
        assert_eq!(b.bh(), Q::zero());
        assert_eq!(b.square(), Q::new(1, 2));
        assert_eq!(invariant_b2(&b), Some(Q::new(1, 2)));

        assert_eq!(
            bfield_of_class(&BrauerClass::new(3, 0, lam(&[])).unwrap()),
            BField::zero(3)
        );
    }

    #[test]
    fn b2_invariance_condition() {
        let c = BrauerClass::new(1, 0, lam(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!(invariant_b2(&bfield_of_class(&c)), None);
        let c = BrauerClass::new(1, 1, lam(&[])).unwrap();
        assert_eq!(invariant_b2(&bfield_of_class(&c)), Some(Q::zero()));
    }

    #[test]
    fn normalize_examples() {
        let mut coords = vec![Q::zero(); 22];
        coords[1] = Q::new(3, 2);
        let b = normalize_bfield(&BField::new(1, coords).unwrap()).unwrap();
        assert_eq!(b.coords[1], Q::new(1, 2));
        assert!(b
            .coords
            .iter()
            .enumerate()
            .all(|(i, c)| i == 1 || c.is_zero()));

        let mut coords = vec![Q::zero(); 22];
        coords[2] = Q::new(3, 2);
        coords[3] = Q::new(3, 2);
        let b = normalize_bfield(&BField::new(1, coords).unwrap()).unwrap();
        let mut want = vec![Q::zero(); 22];
        want[2] = Q::new(1, 2);
        want[3] = Q::new(1, 2);
        assert_eq!(b.coords, want);

        // Bh = 1 integral
        let mut coords = vec![Q::zero(); 22];
        coords[1] = q(1);
        coords[2] = Q::new(1, 2);
        let b = normalize_bfield(&BField::new(4, coords).unwrap()).unwrap();
        assert_eq!(b.bh(), Q::zero());

        assert_eq!(normalize_bfield(&BField::zero(2)), Err(Error::TrivialClass));
    }

    #[test]
    fn normalize_e8_support() {
        // lambda supported on E8 blocks with lambda^2 = 2 mod 4 but not in {0,1/2}
        let c = BrauerClass::new(3, 0, lam(&[(4, 1), (6, 1), (12, 1)])).unwrap();
        let b = normalize_bfield(&bfield_of_class(&c)).unwrap();
        assert_eq!(class_of_bfield(&b), c);
        let s = b.square();
        assert!(s == Q::zero() || s == Q::new(1, 2), "{s}");
        assert_eq!(b.bh(), Q::zero());
    }

    #[test]
    fn types() {
        let c = BrauerClass::new(1, 0, lam(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!(brauer_type(&c).unwrap(), BrauerType::Bh0);
        assert_eq!(BrauerType::Bh0.geometric_name(1), Some("order-two point"));
        let c = BrauerClass::new(1, 1, lam(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!(brauer_type(&c).unwrap(), BrauerType::BhHalfSq2);
        let c = BrauerClass::new(2, 0, lam(&[(0, 1)])).unwrap();
        assert_eq!(brauer_type(&c).unwrap(), BrauerType::Bh0Sq0);
        assert_eq!(
            brauer_type(&BrauerClass::new(2, 0, lam(&[])).unwrap()),
            Err(Error::TrivialClass)
        );
        for t in BrauerType::ALL {
            assert_eq!(BrauerType::parse(t.label()), Some(t));
        }
    }

    #[test]
    fn gamma_index_two() {
        for d in [1, 2, 5] {
            for (a, l) in [
                (0u8, lam(&[(0, 1)])),
                (1, lam(&[])),
                (1, lam(&[(5, 1), (9, 1)])),
            ] {
                let c = BrauerClass::new(d, a, l).unwrap();
                let g = gamma_alpha(&c).unwrap();
                assert_eq!(g.lattice.abs_det().unwrap(), 8 * d as u64);
            }
        }
    }

    #[test]
    fn gamma_reports() {
        for d in [1, 2, 3] {
            for (a, l) in [
                (0u8, lam(&[(0, 1), (1, 1)])),
                (0, lam(&[(2, 1)])),
                (1, lam(&[])),
            ] {
                let c = BrauerClass::new(d, a, l).unwrap();
                let r = gamma_discriminant_report(&c).unwrap();
                assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
            }
        }
    }
}
