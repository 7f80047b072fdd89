//! Integral lattices given by Gram matrices.
//!
//! Basis conventions for the standard lattices:
//!
//! * `K3` is `U,U,U,E8(-1),E8(-1)` (rank 22). The class written `(a,b)_i` lives
//!   in coordinates `2i-2, 2i-1`.
//! * `Lambda_K3_2` appends `<-2>` as coordinate 22 (the class `delta`).
//! * `Lambda_prime` is `U,U,E8(-1),E8(-1)`, i.e. the last 20 coordinates of `K3`.
//! * `MukaiK3` is `(r, K3, s)` with `<(r,l,s),(r',l',s')> = ll' - rs' - r's`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ensure_len, Error, Result};

pub type Q = Ratio<i64>;

/// Coordinate of `delta` in `Lambda_K3_2`.
pub const DELTA: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    /// Checks squareness, symmetry and evenness.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            ensure_len(n, row.len())?;
        }
        for i in 0..n {
            if gram[i][i] % 2 != 0 {
                return Err(Error::OddDiagonal(i));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Lattice { gram })
    }

    pub fn zero() -> Self {
        Lattice { gram: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn det(&self) -> BigInt {
        determinant(&self.gram)
    }

    /// `|det|` as a machine integer.
    pub fn abs_det(&self) -> Result<u64> {
        self.det().abs().to_u64().ok_or(Error::Overflow)
    }

    pub fn inner(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        inner(self, x, y)
    }

    pub fn inner_int(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        ensure_len(self.rank(), x.len())?;
        ensure_len(self.rank(), y.len())?;
        let mut acc: i128 = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let mut r: i128 = 0;
            for (j, g) in row.iter().enumerate() {
                r += *g as i128 * y[j] as i128;
            }
            acc = acc
                .checked_add(r.checked_mul(x[i] as i128).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }

    /// Gram matrix of the given integral vectors.
    pub fn restrict(&self, basis: &[Vec<i64>]) -> Result<Lattice> {
        let mut g = vec![vec![0i64; basis.len()]; basis.len()];
        for i in 0..basis.len() {
            for j in 0..=i {
                let v = self.inner_int(&basis[i], &basis[j])?;
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        Ok(Lattice { gram: g })
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qv(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn to_integral(x: &[Q]) -> Result<Vec<i64>> {
    x.iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NotIntegral)
            }
        })
        .collect()
}

pub fn inner(l: &Lattice, x: &[Q], y: &[Q]) -> Result<Q> {
    ensure_len(l.rank(), x.len())?;
    ensure_len(l.rank(), y.len())?;
    let mut acc = Q::zero();
    for (i, row) in l.gram.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        let mut r = Q::zero();
        for (j, g) in row.iter().enumerate() {
            if *g != 0 && !y[j].is_zero() {
                r += y[j] * *g;
            }
        }
        acc += x[i] * r;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// standard lattices

pub fn hyperbolic() -> Lattice {
    Lattice {
        gram: vec![vec![0, 1], vec![1, 0]],
    }
}

/// Negated Cartan matrix of E8 (Bourbaki labelling, node 2 attached to node 4).
pub fn e8_minus() -> Lattice {
    let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
    let mut g = vec![vec![0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in edges {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    Lattice { gram: g }
}

pub fn diag(n: i64) -> Result<Lattice> {
    if n % 2 != 0 {
        return Err(Error::InvalidParameter(format!("diag({n}) is odd")));
    }
    Ok(Lattice {
        gram: vec![vec![n]],
    })
}

pub fn direct_sum(parts: &[Lattice]) -> Lattice {
    let n: usize = parts.iter().map(Lattice::rank).sum();
    let mut g = vec![vec![0i64; n]; n];
    let mut off = 0;
    for p in parts {
        for i in 0..p.rank() {
            for j in 0..p.rank() {
                g[off + i][off + j] = p.gram[i][j];
            }
        }
        off += p.rank();
    }
    Lattice { gram: g }
}

pub fn k3() -> Lattice {
    direct_sum(&[
        hyperbolic(),
        hyperbolic(),
        hyperbolic(),
        e8_minus(),
        e8_minus(),
    ])
}

pub fn lambda_prime() -> Lattice {
    direct_sum(&[hyperbolic(), hyperbolic(), e8_minus(), e8_minus()])
}

pub fn lambda_k3_2() -> Lattice {
    direct_sum(&[
        k3(),
        Lattice {
            gram: vec![vec![-2]],
        },
    ])
}

pub fn mukai_k3() -> Lattice {
    let inner = k3();
    let n = inner.rank() + 2;
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..inner.rank() {
        for j in 0..inner.rank() {
            g[i + 1][j + 1] = inner.gram[i][j];
        }
    }
    g[0][n - 1] = -1;
    g[n - 1][0] = -1;
    Lattice { gram: g }
}

pub fn make_standard(name: &str, params: &[i64]) -> Result<Lattice> {
    match name {
        "U" => Ok(hyperbolic()),
        "E8_minus" => Ok(e8_minus()),
        "diag" => match params {
            [n] => diag(*n),
            _ => Err(Error::InvalidParameter(
                "diag takes one parameter".to_string(),
            )),
        },
        "K3" => Ok(k3()),
        "Lambda_K3_2" => Ok(lambda_k3_2()),
        "MukaiK3" => Ok(mukai_k3()),
        "Lambda_prime" => Ok(lambda_prime()),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// `(a,b)_i` as a vector of the given length (1-based block index).
pub fn u_vec(len: usize, block: usize, a: i64, b: i64) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[2 * block - 2] = a;
    v[2 * block - 1] = b;
    v
}

pub fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale(c: i64, x: &[i64]) -> Vec<i64> {
    x.iter().map(|a| c * a).collect()
}

// ---------------------------------------------------------------------------
// Smith normal form

/// `u * m * v == d`, `vinv == v^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub u: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub vinv: Vec<Vec<i64>>,
}

impl Snf {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<i64> {
        let k = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..k).map(|i| self.d[i][i]).filter(|&x| x != 0).collect()
    }
}

type M128 = Vec<Vec<i128>>;

fn ident(n: usize) -> M128 {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn axpy_rows(m: &mut M128, dst: usize, src: usize, c: i128) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    for j in 0..m[dst].len() {
        let t = m[src][j].checked_mul(c).ok_or(Error::Overflow)?;
        m[dst][j] = m[dst][j].checked_add(t).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn axpy_cols(m: &mut M128, dst: usize, src: usize, c: i128) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        let t = row[src].checked_mul(c).ok_or(Error::Overflow)?;
        row[dst] = row[dst].checked_add(t).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn swap_cols(m: &mut M128, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn narrow(m: M128) -> Result<Vec<Vec<i64>>> {
    m.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
                .collect()
        })
        .collect()
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<Snf> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for r in m {
        ensure_len(cols, r.len())?;
    }
    let mut a: M128 = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u = ident(rows);
    let mut v = ident(cols);
    let mut vinv = ident(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut piv: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && piv.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs()) {
                        piv = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = piv else {
                return finish(a, u, v, vinv);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);
            vinv.swap(t, pj);

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let c = a[i][t] / p;
                axpy_rows(&mut a, i, t, -c)?;
                axpy_rows(&mut u, i, t, -c)?;
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let c = a[t][j] / p;
                axpy_cols(&mut a, j, t, -c)?;
                axpy_cols(&mut v, j, t, -c)?;
                axpy_rows(&mut vinv, t, j, c)?;
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    axpy_rows(&mut a, t, i, 1)?;
                    axpy_rows(&mut u, t, i, 1)?;
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    finish(a, u, v, vinv)
}

fn finish(a: M128, u: M128, v: M128, vinv: M128) -> Result<Snf> {
    Ok(Snf {
        u: narrow(u)?,
        d: narrow(a)?,
        v: narrow(v)?,
        vinv: narrow(vinv)?,
    })
}

/// Bareiss fraction-free elimination over big integers.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

// ---------------------------------------------------------------------------
// discriminant group

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    /// Invariant factors greater than one, each dividing the next.
    pub cyclic_orders: Vec<u64>,
    /// Dual-lattice lifts of the generators, in basis coordinates.
    pub generators: Vec<Vec<Q>>,
    /// `q(g_i)` in `[0,2)`.
    pub q_values: Vec<Q>,
    /// `b(g_i, g_j)` in `[0,1)`.
    pub b_values: Vec<Vec<Q>>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }
}

pub fn reduce_mod(x: Q, m: i64) -> Q {
    let m = q(m);
    let k = (x / m).floor();
    x - k * m
}

pub fn discriminant_group(l: &Lattice) -> Result<DiscriminantGroup> {
    if l.det().is_zero() {
        return Err(Error::Degenerate);
    }
    let snf = smith_normal_form(&l.gram)?;
    let n = l.rank();
    let mut lifts: Vec<Vec<i64>> = Vec::new();
    let mut orders = Vec::new();
    for i in 0..n {
        let di = snf.d[i][i];
        if di > 1 {
            orders.push(di);
            lifts.push((0..n).map(|r| snf.v[r][i]).collect());
        }
    }
    let k = orders.len();
    let mut q_values = Vec::with_capacity(k);
    let mut b_values = vec![vec![Q::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let num = l.inner_int(&lifts[i], &lifts[j])?;
            let val = Q::new(num, orders[i] * orders[j]);
            b_values[i][j] = reduce_mod(val, 1);
            if i == j {
                q_values.push(reduce_mod(val, 2));
            }
        }
    }
    let generators = lifts
        .iter()
        .zip(&orders)
        .map(|(w, &d)| w.iter().map(|&c| Q::new(c, d)).collect())
        .collect();
    Ok(DiscriminantGroup {
        cyclic_orders: orders.into_iter().map(|x| x as u64).collect(),
        generators,
        q_values,
        b_values,
    })
}

/// Order of the subgroup of `Q^n / Z^n` generated by `gens`.
pub fn quotient_order(n: usize, gens: &[Vec<Q>]) -> Result<u64> {
    let mut den: i64 = 1;
    for g in gens {
        ensure_len(n, g.len())?;
        for c in g {
            den = den.lcm(c.denom());
        }
    }
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { den } else { 0 }).collect())
        .collect();
    for g in gens {
        rows.push(g.iter().map(|c| c.numer() * (den / c.denom())).collect());
    }
    let snf = smith_normal_form(&rows)?;
    let mut order: u64 = 1;
    for f in snf.invariant_factors() {
        order = order.checked_mul((den / f) as u64).ok_or(Error::Overflow)?;
    }
    Ok(order)
}

// ---------------------------------------------------------------------------
// divisibility, complements, saturation

pub fn divisibility(l: &Lattice, x: &[Q]) -> Result<u64> {
    let xi = to_integral(x)?;
    divisibility_int(l, &xi)
}

pub fn divisibility_int(l: &Lattice, x: &[i64]) -> Result<u64> {
    ensure_len(l.rank(), x.len())?;
    if x.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    let mut g: i64 = 0;
    for i in 0..l.rank() {
        let mut e = vec![0i64; l.rank()];
        e[i] = 1;
        g = g.gcd(&l.inner_int(x, &e)?);
    }
    if g == 0 {
        return Err(Error::Degenerate);
    }
    Ok(g as u64)
}

/// Divisibility of `x` inside the sublattice spanned by `basis` (ambient coordinates).
pub fn divisibility_in(l: &Lattice, basis: &[Vec<i64>], x: &[i64]) -> Result<u64> {
    let g = basis
        .iter()
        .try_fold(0i64, |g, b| Ok::<_, Error>(g.gcd(&l.inner_int(x, b)?)))?;
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(g as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sublattice {
    pub basis: Vec<Vec<i64>>,
    pub lattice: Lattice,
}

/// Integer kernel `{x : m x = 0}`. The columns of the unimodular SNF factor
/// give a primitive basis directly.
pub fn integer_kernel(m: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    if m.is_empty() {
        return Ok((0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect());
    }
    for r in m {
        ensure_len(n, r.len())?;
    }
    let snf = smith_normal_form(m)?;
    let rank = snf.invariant_factors().len();
    Ok((rank..n)
        .map(|c| (0..n).map(|r| snf.v[r][c]).collect())
        .collect())
}

pub fn orthogonal_complement(l: &Lattice, s: &[Vec<Q>]) -> Result<Sublattice> {
    let n = l.rank();
    let mut rows = Vec::with_capacity(s.len());
    for x in s {
        let xi = to_integral(x)?;
        ensure_len(n, xi.len())?;
        let row: Vec<i64> = (0..n)
            .map(|j| {
                let mut e = vec![0i64; n];
                e[j] = 1;
                l.inner_int(&xi, &e)
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let basis = integer_kernel(&rows, n)?;
    let lattice = l.restrict(&basis)?;
    Ok(Sublattice { basis, lattice })
}

/// Basis of `span_Q(vectors) ∩ Z^n`.
pub fn saturate(vectors: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let snf = smith_normal_form(vectors)?;
    let rank = snf.invariant_factors().len();
    Ok(snf.vinv[..rank].to_vec())
}

/// Index of `span(rows)` inside `span_Q(rows) ∩ Z^n`.
pub fn index_in_saturation(rows: &[Vec<i64>]) -> Result<u64> {
    if rows.is_empty() {
        return Ok(1);
    }
    let snf = smith_normal_form(rows)?;
    snf.invariant_factors().iter().try_fold(1u64, |acc, &f| {
        acc.checked_mul(f.unsigned_abs()).ok_or(Error::Overflow)
    })
}

/// Some `w` in `span(basis)` with `<x, w>` equal to the gcd of the pairings
/// of `x` with `basis`, returned as `(gcd, w)`.
pub fn gcd_witness(l: &Lattice, basis: &[Vec<i64>], x: &[i64]) -> Result<(i64, Vec<i64>)> {
    let mut g = 0i64;
    let mut w = vec![0i64; l.rank()];
    for b in basis {
        let p = l.inner_int(x, b)?;
        if p == 0 || (g != 0 && p % g == 0) {
            continue;
        }
        let e = g.extended_gcd(&p);
        w = w
            .iter()
            .zip(b)
            .map(|(wi, bi)| e.x * wi + e.y * bi)
            .collect();
        g = e.gcd;
    }
    if g < 0 {
        g = -g;
        w = scale(-1, &w);
    }
    Ok((g, w))
}

pub fn verify_isometry(s: &[Vec<i64>], m1: &Lattice, m2: &Lattice) -> Result<bool> {
    let n = s.len();
    ensure_len(n, m1.rank())?;
    ensure_len(n, m2.rank())?;
    for r in s {
        ensure_len(n, r.len())?;
    }
    if determinant(s).abs() != BigInt::one() {
        return Ok(false);
    }
    Ok(m1.restrict(s)?.gram == m2.gram)
}

pub fn default_pair_bound(l: &Lattice) -> i64 {
    let m = l.gram.iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
    (2 * m * l.rank() as i64).max(1)
}

/// Bounded search for `u, v` with `u^2 = v^2 = 0`, `uv = 1`; `None` means
/// nothing in the box, not that no pair exists.
pub fn find_hyperbolic_pair(l: &Lattice, bound: i64) -> Option<(Vec<i64>, Vec<i64>)> {
    let n = l.rank();
    if n < 2 {
        return None;
    }
    let mut seen: Vec<Vec<i64>> = Vec::new();
    for radius in 1..=bound {
        let mut found = None;
        for_each_shell(n, radius, &mut |x| {
            if found.is_some() || x.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                return;
            }
            if l.inner_int(x, x) != Ok(0) {
                return;
            }
            for w in &seen {
                match l.inner_int(x, w) {
                    Ok(1) => found = Some((w.clone(), x.to_vec())),
                    Ok(-1) => found = Some((w.iter().map(|c| -c).collect(), x.to_vec())),
                    _ => continue,
                }
                break;
            }
            if found.is_none() {
                seen.push(x.to_vec());
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Visits every vector with sup-norm exactly `radius`.
fn for_each_shell(n: usize, radius: i64, f: &mut dyn FnMut(&[i64])) {
    let mut x = vec![-radius; n];
    loop {
        if x.iter().any(|c| c.abs() == radius) {
            f(&x);
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if x[i] < radius {
                x[i] += 1;
                break;
            }
            x[i] = -radius;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_determinants() {
        assert_eq!(hyperbolic().det(), BigInt::from(-1));
        assert_eq!(e8_minus().det(), BigInt::from(1));
        assert_eq!(k3().det().abs(), BigInt::from(1));
        assert_eq!(lambda_k3_2().rank(), 23);
        assert_eq!(lambda_k3_2().abs_det().unwrap(), 2);
        assert_eq!(mukai_k3().abs_det().unwrap(), 1);
        assert_eq!(lambda_prime().abs_det().unwrap(), 1);
        assert_eq!(make_standard("diag", &[-2]).unwrap().gram(), &[vec![-2]]);
        assert!(make_standard("diag", &[3]).is_err());
        assert!(matches!(
            make_standard("A2", &[]),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn inner_examples() {
        let u2 = direct_sum(&[hyperbolic(), hyperbolic()]);
        let h = qv(&[1, 5, 0, 0]);
        assert_eq!(inner(&u2, &h, &h).unwrap(), q(10));
        let b = [Q::zero(), Q::new(1, 2), Q::zero(), Q::zero()];
        assert_eq!(inner(&u2, &b, &h).unwrap(), Q::new(1, 2));
        let mut e1 = vec![Q::zero(); 8];
        e1[0] = q(1);
        assert_eq!(inner(&e8_minus(), &e1, &e1).unwrap(), q(-2));
        assert!(inner(&u2, &h, &e1).is_err());
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&[vec![2, 0], vec![0, 4]]).unwrap();
        assert_eq!(s.invariant_factors(), vec![2, 4]);
        let s = smith_normal_form(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(s.invariant_factors(), vec![1, 1]);
        let s = smith_normal_form(&[vec![6, 0], vec![0, -2]]).unwrap();
        assert_eq!(s.invariant_factors(), vec![2, 6]);
    }

    #[test]
    fn snf_transforms_reconstruct() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith_normal_form(&m).unwrap();
        let mul = |a: &[Vec<i64>], b: &[Vec<i64>]| -> Vec<Vec<i64>> {
            (0..a.len())
                .map(|i| {
                    (0..b[0].len())
                        .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                        .collect()
                })
                .collect()
        };
        assert_eq!(mul(&mul(&s.u, &m), &s.v), s.d);
        assert_eq!(
            mul(&s.v, &s.vinv),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(s.invariant_factors(), vec![2, 6, 12]);
    }

    #[test]
    fn discriminant_examples() {
        assert!(discriminant_group(&hyperbolic())
            .unwrap()
            .cyclic_orders
            .is_empty());
        let l = direct_sum(&[diag(6).unwrap(), diag(-2).unwrap()]);
        let dg = discriminant_group(&l).unwrap();
        assert_eq!(dg.cyclic_orders, vec![2, 6]);
        let delta = discriminant_group(&diag(-2).unwrap()).unwrap();
        assert_eq!(delta.q_values, vec![Q::new(3, 2)]);
        assert!(matches!(
            discriminant_group(&Lattice::new(vec![vec![0, 0], vec![0, 2]]).unwrap()),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn divisibility_examples() {
        let l = lambda_k3_2();
        let mut delta = vec![0i64; 23];
        delta[DELTA] = 1;
        assert_eq!(divisibility_int(&l, &delta).unwrap(), 2);
        assert_eq!(divisibility_int(&l, &u_vec(23, 2, 1, -1)).unwrap(), 1);
        let mut h = add(&u_vec(23, 1, 1, 10), &u_vec(23, 2, 2, -2));
        h[DELTA] = -2;
        assert_eq!(divisibility_int(&l, &h).unwrap(), 1);
        assert_eq!(divisibility_int(&l, &[0; 23]), Err(Error::ZeroVector));
    }

    #[test]
    fn complement_examples() {
        let c = orthogonal_complement(&hyperbolic(), &[qv(&[1, 3])]).unwrap();
        assert_eq!(c.basis.len(), 1);
        let b = &c.basis[0];
        assert!(b == &vec![1, -3] || b == &vec![-1, 3]);
        assert_eq!(c.lattice.gram(), &[vec![-6]]);

        let all = orthogonal_complement(&hyperbolic(), &[qv(&[1, 0]), qv(&[0, 1])]).unwrap();
        assert_eq!(all.basis.len(), 0);
        let none = orthogonal_complement(&hyperbolic(), &[]).unwrap();
        assert_eq!(none.lattice, hyperbolic());

        // complement of h = (1,1)_1 and delta inside the rank-23 lattice
        let l = lambda_k3_2();
        let mut delta = vec![Q::zero(); 23];
        delta[DELTA] = q(1);
        let h: Vec<Q> = qv(&u_vec(23, 1, 1, 1));
        let c = orthogonal_complement(&l, &[h, delta]).unwrap();
        assert_eq!(c.basis.len(), 21);
        assert_eq!(c.lattice.det(), BigInt::from(-2));
    }

    #[test]
    fn saturation() {
        let s = saturate(&[vec![2, 4, 0], vec![0, 0, 3]]).unwrap();
        assert_eq!(s.len(), 2);
        let l = Lattice::new(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(l.restrict(&s).unwrap().det().abs(), BigInt::from(20));
    }

    #[test]
    fn isometry_examples() {
        let m = Lattice::new(vec![vec![-2]]).unwrap();
        assert!(!verify_isometry(&[vec![2]], &m, &m).unwrap());
        let id = vec![vec![1, 0], vec![0, 1]];
        assert!(verify_isometry(&id, &hyperbolic(), &hyperbolic()).unwrap());
        assert!(verify_isometry(&id, &hyperbolic(), &m).is_err());
    }

    #[test]
    fn hyperbolic_pairs() {
        assert_eq!(
            find_hyperbolic_pair(&hyperbolic(), 1),
            Some((vec![1, 0], vec![0, 1]))
        );
        assert_eq!(find_hyperbolic_pair(&diag(-2).unwrap(), 5), None);
        let m = Lattice::new(vec![vec![0, 0, 2], vec![0, -4, 1], vec![2, 1, -2]]).unwrap();
        let (u, v) = find_hyperbolic_pair(&m, default_pair_bound(&m)).unwrap();
        assert_eq!(m.inner_int(&u, &u).unwrap(), 0);
        assert_eq!(m.inner_int(&v, &v).unwrap(), 0);
        assert_eq!(m.inner_int(&u, &v).unwrap(), 1);
    }
}
