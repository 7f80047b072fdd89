//! Twisted Mukai lattices of a K3 surface with an order-two B-field.
//!
//! Elements are triples `(r, lambda, s)` with `lambda` in the 22 K3
//! coordinates and pairing `lambda.lambda' - r s' - r' s`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::brauer::{self, BField, BrauerType, K3_RANK};
use crate::error::{ensure_len, Error, Result};
use crate::lattice::{self, q, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MukaiElement {
    pub r: Q,
    pub lam: Vec<Q>,
    pub s: Q,
}

impl MukaiElement {
    pub fn new(r: Q, lam: Vec<Q>, s: Q) -> Result<Self> {
        ensure_len(K3_RANK, lam.len())?;
        Ok(MukaiElement { r, lam, s })
    }

    pub fn int(r: i64, lam: &[i64], s: i64) -> Result<Self> {
        Self::new(q(r), lattice::qv(lam), q(s))
    }

    pub fn add(&self, o: &MukaiElement) -> MukaiElement {
        MukaiElement {
            r: self.r + o.r,
            lam: self.lam.iter().zip(&o.lam).map(|(a, b)| a + b).collect(),
            s: self.s + o.s,
        }
    }

    pub fn scale(&self, c: Q) -> MukaiElement {
        MukaiElement {
            r: self.r * c,
            lam: self.lam.iter().map(|a| a * c).collect(),
            s: self.s * c,
        }
    }

    pub fn square(&self) -> Q {
        mukai_pairing(self, self)
    }

    /// Coordinates `[r, lambda, s]` in the rank-24 Mukai lattice.
    pub fn coords(&self) -> Vec<Q> {
        let mut v = Vec::with_capacity(K3_RANK + 2);
        v.push(self.r);
        v.extend_from_slice(&self.lam);
        v.push(self.s);
        v
    }

    pub fn integral_coords(&self) -> Result<Vec<i64>> {
        lattice::to_integral(&self.coords())
    }

    pub fn from_coords(c: &[Q]) -> Result<Self> {
        ensure_len(K3_RANK + 2, c.len())?;
        Self::new(c[0], c[1..=K3_RANK].to_vec(), c[K3_RANK + 1])
    }
}

impl fmt::Display for MukaiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [", self.r)?;
        for (i, c) in self.lam.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "], {})", self.s)
    }
}

pub fn mukai_pairing(x: &MukaiElement, y: &MukaiElement) -> Q {
    lattice::inner(&lattice::k3(), &x.lam, &y.lam).expect("rank 22") - x.r * y.s - y.r * x.s
}

pub fn vperp_member(v: &MukaiElement, x: &MukaiElement) -> bool {
    mukai_pairing(v, x).is_zero()
}

/// `(0, h, 0)` with `h = (1,d)_1`.
pub fn h_element(d: i64) -> MukaiElement {
    MukaiElement {
        r: Q::zero(),
        lam: lattice::qv(&brauer::polarization(d)),
        s: Q::zero(),
    }
}

fn half_k3(entries: &[(usize, i64)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); K3_RANK];
    for &(i, x) in entries {
        v[i] = Q::new(x, 2);
    }
    v
}

/// Canonical B-field with the given `(Bh, B^2)`:
/// `(1/2,1/2) -> (0,1/2)_1 + (1/2,1/2)_2`, `(0,1/2) -> (1/2,1/2)_2`,
/// `(1/2,0) -> (0,1/2)_1`, `(0,0) -> (1/2,0)_2`.
pub fn canonical_bfield(d: i64, bh: Q, b2: Q) -> Result<BField> {
    let half = Q::new(1, 2);
    let coords = match (bh == half, b2 == half) {
        (true, true) => half_k3(&[(1, 1), (2, 1), (3, 1)]),
        (false, true) => half_k3(&[(2, 1), (3, 1)]),
        (true, false) => half_k3(&[(1, 1)]),
        (false, false) => half_k3(&[(2, 1)]),
    };
    if !(bh.is_zero() || bh == half) || !(b2.is_zero() || b2 == half) {
        return Err(Error::InvalidParameter(format!(
            "Bh = {bh}, B^2 = {b2} must lie in {{0, 1/2}}"
        )));
    }
    BField::new(d, coords)
}

/// Representative for a type; collapsed types use `B^2 = 1/2`.
pub fn bfield_for_type(d: i64, t: BrauerType) -> Result<BField> {
    if !t.matches_parity(d) {
        return Err(Error::InvalidParameter(format!(
            "type {} does not occur for d = {d}",
            t.label()
        )));
    }
    canonical_bfield(d, t.bh(), t.b2().unwrap_or(Q::new(1, 2)))
}

pub fn exp_b(b: &BField, r: Q) -> MukaiElement {
    MukaiElement {
        r,
        lam: b.coords.iter().map(|c| c * r).collect(),
        s: Q::zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedNs {
    pub d: i64,
    pub b: BField,
    pub basis: [MukaiElement; 3],
    pub gram: [[i64; 3]; 3],
}

impl TwistedNs {
    /// Whether `x = r(1,B,0) + (0,D,0) + (0,0,s)` with `r, s` integral and `D` in `Zh`.
    pub fn contains(&self, x: &MukaiElement) -> bool {
        if !x.r.is_integer() || !x.s.is_integer() {
            return false;
        }
        let h = brauer::polarization(self.d);
        let rest: Vec<Q> = x
            .lam
            .iter()
            .zip(&self.b.coords)
            .map(|(l, b)| l - b * x.r)
            .collect();
        let m = rest[0];
        m.is_integer() && rest.iter().zip(&h).all(|(c, hc)| *c == m * *hc)
    }
}

pub fn build_ns(d: i64, b: &BField) -> Result<TwistedNs> {
    let first = if b.coords.iter().all(Zero::is_zero) {
        MukaiElement::new(q(1), vec![Q::zero(); K3_RANK], Q::zero())?
    } else {
        exp_b(b, q(2))
    };
    let basis = [
        first,
        h_element(d),
        MukaiElement::new(Q::zero(), vec![Q::zero(); K3_RANK], q(1))?,
    ];
    let mut gram = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let v = mukai_pairing(&basis[i], &basis[j]);
            if !v.is_integer() {
                return Err(Error::NotIntegral);
            }
            gram[i][j] = v.to_integer();
        }
    }
    Ok(TwistedNs {
        d,
        b: b.clone(),
        basis,
        gram,
    })
}

/// `(c2(A), K_E^3)` for a rank-two twisted Mukai vector.
pub fn conic_bundle_c2(vu: &MukaiElement) -> Result<(i64, i64)> {
    if vu.r != q(2) {
        return Err(Error::Precondition(format!("rank {} is not 2", vu.r)));
    }
    let sq = vu.square();
    if !sq.is_integer() {
        return Err(Error::NotIntegral);
    }
    let c2 = sq.to_integer() + 8;
    Ok((c2, 2 * c2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minus2Answer {
    pub exists: bool,
    /// `(k, v)` with `v = (2, 2B + kh, s)` of square `-2`.
    pub witness: Option<(i64, MukaiElement)>,
    /// `v^2 mod 4` for `k = 0, 1` (independent of `s`).
    pub residues: [i64; 2],
}

/// Whether a rank-two vector `(2, 2B + kh, s)` of square `-2` exists.
pub fn exists_minus2_sheaf(d: i64, t: BrauerType) -> Result<Minus2Answer> {
    let b = bfield_for_type(d, t)?;
    let bh = b.bh();
    let b2 = b.square();
    let mut residues = [0i64; 2];
    let mut witness = None;
    for k in 0..2i64 {
        let x = b2 * 4 + bh * (4 * k) + q(2 * d * k * k);
        let x = x.to_integer();
        residues[k as usize] = x.mod_floor(&4);
        if witness.is_none() && x.mod_floor(&4) == 2 {
            let s = (x + 2) / 4;
            let v = exp_b(&b, q(2)).add(&h_element(d).scale(q(k)));
            let v = MukaiElement { s: q(s), ..v };
            witness = Some((k, v));
        }
    }
    Ok(Minus2Answer {
        exists: witness.is_some(),
        witness,
        residues,
    })
}

/// The parity criterion: no such vector iff `4Bh + h^2 = 0 mod 4` and `B^2` is integral.
pub fn minus2_predicted(d: i64, t: BrauerType) -> bool {
    let t4 = t.bh() * 4 + q(2 * d);
    let b2_integral = t.b2() == Some(Q::zero());
    !(t4.to_integer() % 4 == 0 && b2_integral)
}

/// Twists `ch = (2, 2B + kh, s)` by `-(k/2) h` to reach `(2, 2B, 1)`.
pub fn normalize_u(d: i64, b: &BField, ch: &MukaiElement) -> Result<MukaiElement> {
    let bh = b.bh();
    let t = bh * 4 + q(2 * d);
    if !t.is_integer() || t.to_integer().mod_floor(&4) != 2 {
        return Err(Error::Precondition("4Bh + h^2 is not 2 mod 4".into()));
    }
    if b.square() != Q::new(1, 2) {
        return Err(Error::Precondition("B^2 is not 1/2".into()));
    }
    if ch.r != q(2) {
        return Err(Error::Precondition("rank is not 2".into()));
    }
    if ch.square() != q(-2) {
        return Err(Error::Precondition("Mukai square is not -2".into()));
    }
    let h = brauer::polarization(d);
    let rest: Vec<Q> = ch
        .lam
        .iter()
        .zip(&b.coords)
        .map(|(l, bc)| l - bc * 2)
        .collect();
    let k = rest[0];
    if !k.is_integer() || rest.iter().zip(&h).any(|(c, hc)| *c != k * *hc) {
        return Err(Error::Precondition("middle term is not 2B + kh".into()));
    }
    let k = k.to_integer();
    if k % 2 != 0 {
        return Err(Error::Precondition("k is odd".into()));
    }
    let m = k / 2;
    // ch . (1, l, l^2/2) with l = -m h
    let l: Vec<Q> = h.iter().map(|&x| q(-m * x)).collect();
    let k3 = lattice::k3();
    let cl = lattice::inner(&k3, &ch.lam, &l)?;
    let ll = lattice::inner(&k3, &l, &l)?;
    let out = MukaiElement {
        r: ch.r,
        lam: ch.lam.iter().zip(&l).map(|(a, b)| a + ch.r * b).collect(),
        s: ch.s + cl + ch.r * ll / 2,
    };
    let target = exp_b(b, q(2));
    if out.lam != target.lam || out.s != q(1) {
        return Err(Error::Precondition(format!("twist produced {out}")));
    }
    Ok(out)
}

/// `(2, h, (d+1)/2)`, the Mukai vector of the rank-two bundle for odd `d`.
pub fn mukai_bundle_vector(d: i64) -> Result<MukaiElement> {
    if d % 2 == 0 || d < 1 {
        return Err(Error::InvalidParameter(format!(
            "d = {d} must be odd and positive"
        )));
    }
    let v = MukaiElement {
        r: q(2),
        lam: h_element(d).lam,
        s: q((d + 1) / 2),
    };
    debug_assert_eq!(v.square(), q(-2));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Q {
        Q::new(1, 2)
    }

    #[test]
    fn pairing_examples() {
        let b = canonical_bfield(1, Q::zero(), half()).unwrap();
        let v = exp_b(&b, q(2));
        assert_eq!(v.square(), q(2));
        let s = MukaiElement {
            s: q(1),
            ..v.clone()
        };
        assert_eq!(s.square(), q(-2));
        assert_eq!(mukai_pairing(&v, &s), Q::zero());
        let hc = MukaiElement::int(1, &[0; 22], -1).unwrap();
        assert_eq!(hc.square(), q(2));
    }

    #[test]
    fn ns_examples() {
        let b = canonical_bfield(1, Q::zero(), half()).unwrap();
        assert_eq!(
            build_ns(1, &b).unwrap().gram,
            [[2, 0, -2], [0, 2, 0], [-2, 0, 0]]
        );
        assert_eq!(
            build_ns(3, &BField::zero(3)).unwrap().gram,
            [[0, 0, -1], [0, 6, 0], [-1, 0, 0]]
        );
        let b = canonical_bfield(2, half(), Q::zero()).unwrap();
        assert_eq!(build_ns(2, &b).unwrap().gram[0][1], 1);
    }

    #[test]
    fn vperp_examples() {
        let b = canonical_bfield(2, Q::zero(), half()).unwrap();
        let v = exp_b(&b, q(2));
        assert!(vperp_member(&v, &h_element(2)));
        assert!(vperp_member(
            &v,
            &MukaiElement::int(1, &[0; 22], 0).unwrap()
        ));
        assert!(!vperp_member(&v, &v));
    }

    #[test]
    fn c2_values() {
        let v = mukai_bundle_vector(1).unwrap();
        assert_eq!(conic_bundle_c2(&v).unwrap(), (6, 12));
        let z = MukaiElement::int(2, &[0; 22], 0).unwrap();
        assert_eq!(conic_bundle_c2(&z).unwrap(), (8, 16));
        assert!(conic_bundle_c2(&MukaiElement::int(1, &[0; 22], 0).unwrap()).is_err());
        assert_eq!(mukai_bundle_vector(11).unwrap().s, q(6));
        assert!(mukai_bundle_vector(4).is_err());
    }

    #[test]
    fn minus2_examples() {
        let even = exists_minus2_sheaf(1, BrauerType::BhHalfSq0).unwrap();
        assert!(!even.exists);
        assert_eq!(even.residues, [0, 0]);
        let point = exists_minus2_sheaf(1, BrauerType::Bh0).unwrap();
        let (k, v) = point.witness.unwrap();
        assert_eq!(k, 0);
        assert_eq!(
            v,
            MukaiElement {
                s: q(1),
                ..exp_b(&bfield_for_type(1, BrauerType::Bh0).unwrap(), q(2))
            }
        );
        assert!(
            exists_minus2_sheaf(1, BrauerType::BhHalfSq2)
                .unwrap()
                .exists
        );
        assert!(exists_minus2_sheaf(1, BrauerType::Bh0Sq0).is_err());
    }

    #[test]
    fn normalize_u_examples() {
        let b = canonical_bfield(1, Q::zero(), half()).unwrap();
        let base = MukaiElement {
            s: q(1),
            ..exp_b(&b, q(2))
        };
        assert_eq!(normalize_u(1, &b, &base).unwrap(), base);
        // k = 2: (2, 2B + 2h, s) with s chosen so the square is -2
        let mid = base.add(&h_element(1).scale(q(2)));
        let s = (mid.square() + q(4) * mid.s + q(2)) / 4;
        let ch = MukaiElement { s, ..mid };
        assert_eq!(ch.square(), q(-2));
        assert_eq!(normalize_u(1, &b, &ch).unwrap(), base);
        let b4 = canonical_bfield(4, Q::zero(), half()).unwrap();
        let ch4 = MukaiElement {
            s: q(1),
            ..exp_b(&b4, q(2))
        };
        assert!(matches!(
            normalize_u(4, &b4, &ch4),
            Err(Error::Precondition(_))
        ));
    }
}
