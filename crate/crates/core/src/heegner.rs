//! The five Heegner-divisor columns: twisted Mukai data, embeddings of the
//! Picard lattice into `Lambda_K3_2`, transcendental lattices, the index-two
//! image of the restriction map to the base K3, and the classical examples.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::brauer::{self, BField, K3_RANK};
use crate::error::{Error, Result};
use crate::lattice::{self, q, u_vec, Lattice, DELTA, Q};
use crate::mukai::{self, mukai_pairing, MukaiElement};
use crate::report::Report;

const LAMBDA_RANK: usize = 23;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    Hc2d2d,
    Bn8k8k,
    Bn2d8d,
    Bn8k2,
    Bn8k6,
}

impl Column {
    pub const ALL: [Column; 5] = [
        Column::Hc2d2d,
        Column::Bn8k8k,
        Column::Bn2d8d,
        Column::Bn8k2,
        Column::Bn8k6,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Column::Hc2d2d => "HC_2d2d_a",
            Column::Bn8k8k => "BN_8k8k_b",
            Column::Bn2d8d => "BN_2d8d_a",
            Column::Bn8k2 => "BN_8k2_b",
            Column::Bn8k6 => "BN_8k6_a",
        }
    }

    pub fn parse(s: &str) -> Option<Column> {
        Column::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s))
    }

    /// Whether the parameter is `k` (otherwise it is `d`).
    pub fn param_is_k(self) -> bool {
        matches!(self, Column::Bn8k8k | Column::Bn8k2 | Column::Bn8k6)
    }

    pub fn is_bn(self) -> bool {
        self != Column::Hc2d2d
    }

    pub fn min_param(self) -> i64 {
        match self {
            Column::Bn8k2 | Column::Bn8k6 => 0,
            _ => 1,
        }
    }

    /// `H^2 / 2` on the fourfold.
    pub fn d(self, p: i64) -> i64 {
        match self {
            Column::Hc2d2d | Column::Bn2d8d => p,
            Column::Bn8k8k => 4 * p,
            Column::Bn8k2 => 4 * p + 1,
            Column::Bn8k6 => 4 * p + 3,
        }
    }

    /// `h_T^2 / 2` on the K3 surface.
    pub fn d_t(self, p: i64) -> i64 {
        match self {
            Column::Bn8k8k => p,
            _ => self.d(p),
        }
    }

    /// `(div_Lambda(E), div_{H^perp}(E), div_Lambda(H))` as tabulated.
    pub fn expected_divisibilities(self) -> [u64; 3] {
        match self {
            Column::Hc2d2d => [2, 2, 1],
            Column::Bn8k8k => [1, 2, 1],
            Column::Bn2d8d => [1, 1, 1],
            Column::Bn8k2 => [1, 2, 1],
            Column::Bn8k6 => [1, 1, 2],
        }
    }

    /// `|det T_X|` as a function of `d`.
    pub fn expected_det(self, d: i64) -> i64 {
        match self {
            Column::Bn2d8d => 8 * d,
            _ => 2 * d,
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegnerCase {
    pub column: Column,
    pub param: i64,
    pub d: i64,
    pub d_t: i64,
    pub gamma: u64,
    pub b: BField,
    pub v: MukaiElement,
    pub h: MukaiElement,
    /// Primitive exceptional class of square `-2`.
    pub e: MukaiElement,
    /// Exceptional class as tabulated; twice `e` in the Hilbert-Chow column.
    pub e_table: MukaiElement,
}

fn k3_vec(parts: &[(usize, i64, i64)]) -> Vec<i64> {
    let mut v = vec![0i64; K3_RANK];
    for &(blk, a, b) in parts {
        v[2 * blk - 2] += a;
        v[2 * blk - 1] += b;
    }
    v
}

fn lam_vec(parts: &[(usize, i64, i64)], delta: i64) -> Vec<i64> {
    let mut v = k3_vec(parts);
    v.push(delta);
    v
}

fn mk(r: i64, lam: &[Q], s: i64) -> MukaiElement {
    MukaiElement {
        r: q(r),
        lam: lam.to_vec(),
        s: q(s),
    }
}

fn check_param(col: Column, p: i64) -> Result<()> {
    if p < col.min_param() {
        let name = if col.param_is_k() { "k" } else { "d" };
        return Err(Error::InvalidParameter(format!(
            "{col} needs {name} >= {}, got {p}",
            col.min_param()
        )));
    }
    Ok(())
}

pub fn build_case(col: Column, p: i64) -> Result<HeegnerCase> {
    check_param(col, p)?;
    let d = col.d(p);
    let d_t = col.d_t(p);
    let h = lattice::qv(&brauer::polarization(d_t));
    let zero = vec![Q::zero(); K3_RANK];
    let half = Q::new(1, 2);
    let b = match col {
        Column::Bn8k8k => mukai::canonical_bfield(d_t, half, half)?,
        Column::Bn2d8d => mukai::canonical_bfield(d_t, Q::zero(), half)?,
        _ => BField::zero(d_t),
    };
    let two_b: Vec<Q> = b.coords.iter().map(|c| c * 2).collect();
    let h2: Vec<Q> = h.iter().map(|c| c * 2).collect();
    let (v, hh, e, e_table) = match col {
        Column::Hc2d2d => (
            mk(1, &zero, -1),
            mk(0, &h, 0),
            mk(1, &zero, 1),
            mk(2, &zero, 2),
        ),
        Column::Bn8k8k => {
            let e = mk(2, &two_b, 1);
            (mk(2, &two_b, 0), mk(0, &h2, 1), e.clone(), e)
        }
        Column::Bn2d8d => {
            let e = mk(2, &two_b, 1);
            (mk(2, &two_b, 0), mk(0, &h, 0), e.clone(), e)
        }
        Column::Bn8k2 => {
            let e = mk(2, &h, 2 * p + 1);
            (mk(2, &h, 2 * p), mk(0, &h, 4 * p + 1), e.clone(), e)
        }
        Column::Bn8k6 => {
            let e = mk(2, &h, 2 * p + 2);
            (mk(2, &h, 2 * p + 1), mk(0, &h, 4 * p + 3), e.clone(), e)
        }
    };
    Ok(HeegnerCase {
        column: col,
        param: p,
        d,
        d_t,
        gamma: col.expected_divisibilities()[2],
        b,
        v,
        h: hh,
        e,
        e_table,
    })
}

fn mukai_int(x: &MukaiElement) -> Result<Vec<i64>> {
    x.integral_coords()
}

fn mukai_from_int(r: i64, lam: &[i64], s: i64) -> Vec<i64> {
    let mut c = vec![r];
    c.extend_from_slice(lam);
    c.push(s);
    c
}

/// Checks the pairings, membership in `NS(T,B)` and the three
/// divisibilities, each both by gcd over a basis and by an explicit witness.
pub fn verify_case(c: &HeegnerCase) -> Result<Report> {
    let mut r = Report::new(format!("{}({})", c.column, c.param));
    r.check("v^2", q(2), c.v.square());
    r.check("E^2", q(-2), c.e.square());
    r.check("H^2", q(2 * c.d), c.h.square());
    r.check("<v,H>", Q::zero(), mukai_pairing(&c.v, &c.h));
    r.check("<v,E>", Q::zero(), mukai_pairing(&c.v, &c.e));
    r.check("<H,E>", Q::zero(), mukai_pairing(&c.h, &c.e));
    if c.e_table != c.e {
        r.check("tabulated E^2", q(-8), c.e_table.square());
        r.check("tabulated E = 2 E", c.e.scale(q(2)), c.e_table.clone());
    }
    let ns = mukai::build_ns(c.d_t, &c.b)?;
    for (name, x) in [("v", &c.v), ("H", &c.h), ("E", &c.e)] {
        r.truth(format!("{name} in NS(T,B)"), ns.contains(x), x);
    }
    r.check(
        "B.h",
        if c.column == Column::Bn8k8k {
            Q::new(1, 2)
        } else {
            Q::zero()
        },
        c.b.bh(),
    );

    let m = lattice::mukai_k3();
    let v = mukai_int(&c.v)?;
    let h = mukai_int(&c.h)?;
    let e = mukai_int(&c.e)?;
    let lam = lattice::orthogonal_complement(&m, &[lattice::qv(&v)])?;
    let hperp = lattice::orthogonal_complement(&m, &[lattice::qv(&v), lattice::qv(&h)])?;
    let [de, dhe, gamma] = c.column.expected_divisibilities();
    for (name, basis, x, want, extra) in [
        ("div_Lambda(E)", &lam.basis, &e, de, None),
        ("div_Hperp(E)", &hperp.basis, &e, dhe, Some(&h)),
        ("div_Lambda(H)", &lam.basis, &h, gamma, None),
    ] {
        r.check(name, want, lattice::divisibility_in(&m, basis, x)?);
        let (g, w) = lattice::gcd_witness(&m, basis, x)?;
        let mut ok = m.inner_int(&v, &w)? == 0 && g as u64 == want && m.inner_int(x, &w)? == g;
        if let Some(hv) = extra {
            ok &= m.inner_int(hv, &w)? == 0;
        }
        r.truth(format!("{name} witness"), ok, format!("{w:?}"));
    }
    named_witnesses(c, &m, &v, &h, &e, &mut r)?;
    Ok(r)
}

fn named_witnesses(
    c: &HeegnerCase,
    m: &Lattice,
    v: &[i64],
    h: &[i64],
    e: &[i64],
    r: &mut Report,
) -> Result<()> {
    let k = c.param;
    let t = k3_vec(&[(1, 0, 1)]);
    let pair = |x: &[i64], y: &[i64]| m.inner_int(x, y);
    match c.column {
        Column::Hc2d2d => {
            // v-perp is {r = s}; E pairs to -2r with it
            let w = mukai_from_int(1, &[0; K3_RANK], 1);
            r.check("<v,(1,0,1)>", 0, pair(v, &w)?);
            r.check("<E,(1,0,1)>", -2, pair(e, &w)?);
        }
        Column::Bn8k8k => {
            let w = mukai_from_int(1, &[0; K3_RANK], 0);
            r.check("<v,(1,0,0)>", 0, pair(v, &w)?);
            r.check("|<H,(1,0,0)>|", 1, pair(h, &w)?.abs());
            r.check("|<E,(1,0,0)>|", 1, pair(e, &w)?.abs());
            // (2h.eta, eta, B.eta) spans H-perp; E pairs to -2 h.eta
            let b = &c.b;
            let hk = brauer::polarization(c.d_t);
            let k3 = lattice::k3();
            let mut all_even = true;
            for i in 0..K3_RANK {
                let mut eta = vec![0i64; K3_RANK];
                eta[i] = 1;
                let be = lattice::inner(&k3, &b.coords, &lattice::qv(&eta))?;
                if !be.is_integer() {
                    eta[i] = 2;
                }
                let he = k3.inner_int(&hk, &eta)?;
                let be = lattice::inner(&k3, &b.coords, &lattice::qv(&eta))?.to_integer();
                let x = mukai_from_int(2 * he, &eta, be);
                all_even &= pair(v, &x)? == 0 && pair(h, &x)? == 0 && pair(e, &x)? % 2 == 0;
            }
            r.truth("E even on (2h.eta, eta, B.eta)", all_even, "odd pairing");
        }
        Column::Bn2d8d => {
            let w0 = mukai_from_int(0, &t, 0);
            r.check("<v,(0,t,0)>", 0, pair(v, &w0)?);
            r.check("<H,(0,t,0)>", 1, pair(h, &w0)?);
            let w = mukai_from_int(-1, &[0; K3_RANK], 0);
            r.check("<v,(-1,0,0)>", 0, pair(v, &w)?);
            r.check("<H,(-1,0,0)>", 0, pair(h, &w)?);
            r.check("<E,(-1,0,0)>", 1, pair(e, &w)?);
        }
        Column::Bn8k2 | Column::Bn8k6 => {
            let a = if c.column == Column::Bn8k2 {
                2 * k
            } else {
                2 * k + 1
            };
            let t1 = mukai_from_int(1, &lattice::scale(a, &t), 0);
            let t2 = mukai_from_int(0, &lattice::scale(2, &t), 1);
            r.check("<v,t1>", 0, pair(v, &t1)?);
            r.check("<v,t2>", 0, pair(v, &t2)?);
            r.check("|<E,t1>|", 1, pair(e, &t1)?.abs());
            let comb =
                |x: i64, y: i64| lattice::add(&lattice::scale(x, &t1), &lattice::scale(y, &t2));
            if c.column == Column::Bn8k2 {
                r.check("<H, t1 + (k+1) t2>", 1, pair(h, &comb(1, k + 1))?);
                let x = comb(2, 2 * k + 1);
                r.check("<H, 2t1 + (2k+1) t2>", 0, pair(h, &x)?);
                r.check("<E, 2t1 + (2k+1) t2> mod 2", 0, pair(e, &x)?.rem_euclid(2));
            } else {
                r.check("<H,t1> mod 2", 0, pair(h, &t1)?.rem_euclid(2));
                r.check("<H,t2> mod 2", 0, pair(h, &t2)?.rem_euclid(2));
                let x = comb(1, k + 1);
                r.check("<H, t1 + (k+1) t2>", 0, pair(h, &x)?);
                r.check("<E, t1 + (k+1) t2>", -1, pair(e, &x)?);
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// embeddings into Lambda_K3_2 and transcendental lattices

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicEmbedding {
    pub ambient: Lattice,
    pub h: Vec<i64>,
    pub e: Vec<i64>,
}

impl PicEmbedding {
    fn new(h: Vec<i64>, e: Vec<i64>) -> Self {
        PicEmbedding {
            ambient: lattice::lambda_k3_2(),
            h,
            e,
        }
    }

    pub fn complement(&self) -> Result<lattice::Sublattice> {
        lattice::orthogonal_complement(&self.ambient, &[lattice::qv(&self.h), lattice::qv(&self.e)])
    }

    pub fn gram(&self) -> Result<[[i64; 2]; 2]> {
        let l = &self.ambient;
        Ok([
            [
                l.inner_int(&self.h, &self.h)?,
                l.inner_int(&self.h, &self.e)?,
            ],
            [
                l.inner_int(&self.e, &self.h)?,
                l.inner_int(&self.e, &self.e)?,
            ],
        ])
    }
}

pub fn pic_embedding(col: Column, p: i64) -> Result<PicEmbedding> {
    check_param(col, p)?;
    let d = col.d(p);
    let h = lam_vec(&[(1, 1, d)], 0);
    Ok(match col {
        Column::Hc2d2d => PicEmbedding::new(h, lam_vec(&[], 1)),
        Column::Bn8k8k => PicEmbedding::new(h, lam_vec(&[(1, 1, -d), (2, 2, 2 * p)], 1)),
        Column::Bn2d8d => PicEmbedding::new(h, lam_vec(&[(2, 1, -1)], 0)),
        Column::Bn8k2 => {
            let e1 = lam_vec(&[(1, 1, 0), (2, 1, p)], 0);
            PicEmbedding::new(
                h.clone(),
                lattice::add(&lattice::scale(2, &e1), &lattice::scale(-1, &h)),
            )
        }
        Column::Bn8k6 => {
            PicEmbedding::new(lam_vec(&[(1, 2, 2 * p + 2)], 1), lam_vec(&[(2, 1, -1)], 0))
        }
    })
}

/// Generators of the non-standard part of `T_X`, in `Lambda_K3_2`.
pub fn block_generators(col: Column, p: i64) -> Result<Vec<Vec<i64>>> {
    check_param(col, p)?;
    let d = col.d(p);
    Ok(match col {
        Column::Hc2d2d => vec![lam_vec(&[(1, 1, -d)], 0)],
        Column::Bn8k8k => vec![
            lam_vec(&[(1, 1, -4 * p), (2, 2, 2 * p)], 0),
            lam_vec(&[(2, 1, -p)], 0),
            lam_vec(&[(2, 0, 1)], 1),
        ],
        Column::Bn2d8d => vec![
            lam_vec(&[(1, 1, -d)], 0),
            lam_vec(&[(2, 1, 1)], 0),
            lam_vec(&[], 1),
        ],
        Column::Bn8k2 => vec![
            lam_vec(&[(1, 1, -d), (2, 2, 2 * p + 1)], 0),
            lam_vec(&[(2, 1, -p)], 0),
            lam_vec(&[], 1),
        ],
        Column::Bn8k6 => vec![
            lam_vec(&[(1, 1, -p - 1)], 0),
            lam_vec(&[(1, 0, 1)], 1),
            lam_vec(&[(2, 1, 1)], 0),
        ],
    })
}

/// The unimodular rest `U_3 + E8(-1)^2` (or `U_2 + U_3 + ...` when only
/// `U_1` is used) that completes the block to all of `T_X`.
fn rest_basis(col: Column) -> Vec<Vec<i64>> {
    let first = match col {
        Column::Hc2d2d => 2,
        _ => 4,
    };
    (first..DELTA)
        .map(|i| {
            let mut v = vec![0i64; LAMBDA_RANK];
            v[i] = 1;
            v
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcendental {
    pub block: Lattice,
    pub generators: Vec<Vec<i64>>,
    pub det_tx: u64,
    pub det_pic: i64,
}

pub fn transcendental_gram(col: Column, p: i64) -> Result<Transcendental> {
    let emb = pic_embedding(col, p)?;
    let comp = emb.complement()?;
    let generators = block_generators(col, p)?;
    let block = emb.ambient.restrict(&generators)?;
    let [[a, b], [c, d]] = emb.gram()?;
    Ok(Transcendental {
        block,
        generators,
        det_tx: comp.lattice.abs_det()?,
        det_pic: a * d - b * c,
    })
}

fn expected_block(col: Column, p: i64) -> Vec<Vec<i64>> {
    let d = col.d(p);
    match col {
        Column::Hc2d2d => vec![vec![-2 * d]],
        Column::Bn8k8k => vec![vec![0, 0, 2], vec![0, -d / 2, 1], vec![2, 1, -2]],
        Column::Bn2d8d => vec![vec![-2 * d, 0, 0], vec![0, 2, 0], vec![0, 0, -2]],
        Column::Bn8k2 => vec![vec![2, 1, 0], vec![1, -2 * p, 0], vec![0, 0, -2]],
        Column::Bn8k6 => vec![vec![-2 * (p + 1), 1, 0], vec![1, -2, 0], vec![0, 0, 2]],
    }
}

/// Checks the embedding, that the generators together with the unimodular
/// rest span the full complement, and the determinants.
pub fn verify_transcendental(col: Column, p: i64) -> Result<Report> {
    let mut r = Report::new(format!("{col}({p}) T_X"));
    let d = col.d(p);
    let emb = pic_embedding(col, p)?;
    let l = &emb.ambient;
    let g = emb.gram()?;
    r.check("H^2", 2 * d, g[0][0]);
    r.check("E^2", -2, g[1][1]);
    r.check("HE", 0, g[0][1]);
    let [de, dhe, gamma] = col.expected_divisibilities();
    r.check("div_Lambda(E)", de, lattice::divisibility_int(l, &emb.e)?);
    let hperp = lattice::orthogonal_complement(l, &[lattice::qv(&emb.h)])?;
    r.check(
        "div_Hperp(E)",
        dhe,
        lattice::divisibility_in(l, &hperp.basis, &emb.e)?,
    );
    r.check(
        "div_Lambda(H)",
        gamma,
        lattice::divisibility_int(l, &emb.h)?,
    );
    r.check(
        "Pic primitive",
        if col == Column::Bn8k2 { 2 } else { 1 },
        lattice::index_in_saturation(&[emb.h.clone(), emb.e.clone()])?,
    );

    let t = transcendental_gram(col, p)?;
    let mut orth = true;
    for x in &t.generators {
        orth &= l.inner_int(x, &emb.h)? == 0 && l.inner_int(x, &emb.e)? == 0;
    }
    r.truth("generators orthogonal to Pic", orth, "nonzero pairing");
    r.check(
        "block Gram",
        fmt_matrix(&expected_block(col, p)),
        fmt_matrix(t.block.gram()),
    );
    r.check("|det T_X|", col.expected_det(d) as u64, t.det_tx);
    r.check("|det block|", t.det_tx, t.block.abs_det()?);
    let mut all = t.generators.clone();
    all.extend(rest_basis(col));
    let span = l.restrict(&all)?;
    r.check("rank of span", 21, span.rank());
    r.check("|det span| = |det T_X|", t.det_tx, span.abs_det()?);
    if col == Column::Bn8k2 {
        // the Picard lattice is spanned by H and (H+E)/2
        r.check("|det <H,(H+E)/2>|", d, t.det_pic.abs() / 4);
    }
    match col {
        Column::Bn8k8k => pair_report(p, &t.block, &mut r),
        Column::Bn8k2 => {
            r.truth("S M S^T", isometry_8k2(p)?, "identity fails");
        }
        Column::Bn8k6 => {
            r.truth("f3,f1,f2 basis change", isometry_8k6(p)?, "identity fails");
        }
        _ => {}
    }
    Ok(r)
}

fn pair_report(k: i64, m: &Lattice, r: &mut Report) {
    if k % 2 != 0 {
        return;
    }
    // (d/4, 1, 0), (d/8, 1, 1)
    let u = [k, 1, 0];
    let w = [k / 2, 1, 1];
    let uu = m.inner_int(&u, &u).unwrap_or(i64::MIN);
    let ww = m.inner_int(&w, &w).unwrap_or(i64::MIN);
    let uw = m.inner_int(&u, &w).unwrap_or(i64::MIN);
    r.note(
        "candidate pair (u^2, w^2, uw)",
        format!("({uu}, {ww}, {uw})"),
    );
    let unimodular_even = uu % 2 == 0 && ww % 2 == 0 && uu * ww - uw * uw == -1;
    r.truth(
        "candidate pair spans an even unimodular plane",
        unimodular_even,
        format!("({uu}, {ww}, {uw})"),
    );
    let found = lattice::find_hyperbolic_pair(m, lattice::default_pair_bound(m));
    r.truth(
        "hyperbolic pair found",
        found.is_some(),
        "not found (bounded search)",
    );
    if let Some((a, b)) = found {
        r.note("hyperbolic pair", format!("{a:?}, {b:?}"));
    }
}

/// `S M S^T = U + <-2d>` for `d = 4k+1`.
pub fn isometry_8k2(k: i64) -> Result<bool> {
    let d = 4 * k + 1;
    let m = Lattice::new(expected_block(Column::Bn8k2, k))?;
    let s = vec![vec![1, 0, 1], vec![k, 1, k], vec![4 * k, 2, 4 * k + 1]];
    let target = Lattice::new(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2 * d]])?;
    lattice::verify_isometry(&s, &m, &target)
}

/// Rows `f3, f1, f2` in the `g`-basis turn the block into `<-2d> + U`.
pub fn isometry_8k6(k: i64) -> Result<bool> {
    let d = 4 * k + 3;
    let m = Lattice::new(expected_block(Column::Bn8k6, k))?;
    let f1 = vec![0, 1, 1];
    let f2 = vec![1, k + 1, k + 1];
    let g3 = vec![0, 0, 1];
    let f3 = lattice::add(
        &lattice::add(&g3, &lattice::scale(-(2 * k + 2), &f1)),
        &lattice::scale(-2, &f2),
    );
    let target = Lattice::new(vec![vec![-2 * d, 0, 0], vec![0, 0, 1], vec![0, 1, 0]])?;
    lattice::verify_isometry(&[f3, f1, f2], &m, &target)
}

fn fmt_matrix(m: &[Vec<i64>]) -> String {
    format!("{m:?}")
}

// ---------------------------------------------------------------------------
// restriction to the base of the conic bundle

fn projection_index(
    m: &Lattice,
    v: &[i64],
    s: &[i64],
    project: impl Fn(&[i64]) -> Vec<i64>,
) -> Result<u64> {
    let both = lattice::orthogonal_complement(m, &[lattice::qv(v), lattice::qv(s)])?;
    let rows: Vec<Vec<i64>> = both.basis.iter().map(|b| project(b)).collect();
    lattice::index_in_saturation(&rows)
}

/// The abstract computation in `U + U` with `v = (1,1)_1`, `s = (1,-1)_2`.
pub fn index_two_abstract() -> Result<Report> {
    let mut r = Report::new("abstract");
    let m = lattice::direct_sum(&[lattice::hyperbolic(), lattice::hyperbolic()]);
    let v = u_vec(4, 1, 1, 1);
    let s = u_vec(4, 2, 1, -1);
    let vs = lattice::add(&v, &lattice::scale(-1, &s));
    r.check("v^2", 2, m.inner_int(&v, &v)?);
    r.check("s^2", -2, m.inner_int(&s, &s)?);
    r.check("(v-s)^2", 0, m.inner_int(&vs, &vs)?);
    let both = lattice::orthogonal_complement(&m, &[lattice::qv(&v), lattice::qv(&s)])?;
    let mut rows = both.basis.clone();
    rows.push(vs);
    r.check("index of image", 2, lattice::index_in_saturation(&rows)?);
    Ok(r)
}

/// The concrete computation in the Mukai lattice of a BN column.
pub fn index_two_image(col: Column, p: i64) -> Result<Report> {
    if !col.is_bn() {
        return Err(Error::InvalidParameter(format!("{col} is not a BN column")));
    }
    let c = build_case(col, p)?;
    let mut r = Report::new(format!("{col}({p}) image"));
    let m = lattice::mukai_k3();
    let v = mukai_int(&c.v)?;
    let s = mukai_int(&c.e)?;
    let vs = lattice::add(&v, &lattice::scale(-1, &s));
    r.check(
        "v - s",
        format!("{:?}", mukai_from_int(0, &[0; K3_RANK], -1)),
        format!("{vs:?}"),
    );

    let both = lattice::orthogonal_complement(&m, &[lattice::qv(&v), lattice::qv(&s)])?;
    let mut rows = both.basis.clone();
    rows.push(vs.clone());
    r.check(
        "index in (v-s)-perp",
        2,
        lattice::index_in_saturation(&rows)?,
    );
    // (v-s)-perp is {r = 0}; modulo v-s it is the K3 lattice itself
    let lam = |x: &[i64]| x[1..=K3_RANK].to_vec();
    r.check("index in H^2(K)", 2, projection_index(&m, &v, &s, lam)?);

    let t = k3_vec(&[(1, 0, 1)]);
    let s_star = match col {
        Column::Bn8k2 => mukai_from_int(-1, &lattice::scale(-2 * p, &t), 0),
        Column::Bn8k6 => mukai_from_int(-1, &lattice::scale(-(2 * p + 1), &t), 0),
        _ => mukai_from_int(-1, &[0; K3_RANK], 0),
    };
    r.check("<s,s*>", 1, m.inner_int(&s, &s_star)?);
    r.check("s*^2", 0, m.inner_int(&s_star, &s_star)?);
    r.check("<v,s*>", 0, m.inner_int(&v, &s_star)?);
    let w = lattice::add(&s, &lattice::scale(2, &s_star));
    let bx = BField::new(c.d_t, lam(&w).iter().map(|&x| Q::new(x, 2)).collect())?;
    let k3 = lattice::k3();
    let mut integral = true;
    for b in &both.basis {
        integral &= lattice::inner(&k3, &bx.coords, &lattice::qv(&lam(b)))?.is_integer();
    }
    r.truth(
        "B_X integral on the image",
        integral,
        "half-integral pairing",
    );
    r.truth(
        "B_X not integral",
        bx.coords.iter().any(|x| !x.is_integer()),
        "B_X is integral",
    );
    let got = brauer::class_of_bfield(&bx);
    let want = brauer::class_of_bfield(&c.b);
    r.check(
        "class of B_X",
        format!("{:?}", (want.a, &want.lambda)),
        format!("{:?}", (got.a, &got.lambda)),
    );
    r.check(
        "B_X trivial",
        !c.b.coords.iter().any(|x| !x.is_zero()),
        got.is_trivial(),
    );
    Ok(r)
}

// ---------------------------------------------------------------------------
// classical examples

pub const CLASSICAL_NAMES: [&str; 6] = ["fano_plane", "boss", "dv", "ir", "s4k", "div416"];

fn combo(terms: &[(i64, &[i64])]) -> Vec<i64> {
    let n = terms[0].1.len();
    terms.iter().fold(vec![0i64; n], |acc, (c, v)| {
        lattice::add(&acc, &lattice::scale(*c, v))
    })
}

pub fn classical_example(name: &str) -> Result<(PicEmbedding, Report)> {
    let l = lattice::lambda_k3_2();
    let delta = lam_vec(&[], 1);
    let ip = |x: &[i64], y: &[i64]| l.inner_int(x, y);
    let mut r = Report::new(name);
    let emb = match name {
        "fano_plane" => {
            let emb = pic_embedding(Column::Bn8k8k, 1)?;
            let g = combo(&[(1, &emb.h), (-1, &emb.e)]);
            let tau = &emb.e;
            r.check("g^2", 6, ip(&g, &g)?);
            r.check("tau^2", -2, ip(tau, tau)?);
            r.check("g.tau", 2, ip(&g, tau)?);
            r.check("div g", 2, lattice::divisibility_int(&l, &g)?);
            r.check("div tau", 1, lattice::divisibility_int(&l, tau)?);
            r.check("div (g + tau)", 1, lattice::divisibility_int(&l, &emb.h)?);
            let hperp = lattice::orthogonal_complement(&l, &[lattice::qv(&emb.h)])?;
            r.check("|det H-perp|", 16, hperp.lattice.abs_det()?);
            r.check("|det K8-perp|", 8, emb.complement()?.lattice.abs_det()?);
            emb
        }
        "boss" => {
            let h = lam_vec(&[(1, 1, 8)], 0);
            let h16 = combo(&[(3, &h), (-8, &delta)]);
            let z = combo(&[(1, &h), (-3, &delta)]);
            r.check("H^2", 16, ip(&h, &h)?);
            r.check("xi^2", -2, ip(&delta, &delta)?);
            r.check("H.xi", 0, ip(&h, &delta)?);
            r.check("(3H-8xi)^2", 16, ip(&h16, &h16)?);
            r.check("(H-3xi)^2", -2, ip(&z, &z)?);
            r.check("(H-3xi).(3H-8xi)", 0, ip(&z, &h16)?);
            r.check("xi.H", 0, ip(&delta, &h)?);
            r.check("div (H-3xi)", 1, lattice::divisibility_int(&l, &z)?);
            PicEmbedding::new(h16, z)
        }
        "dv" => {
            let h = lam_vec(&[(1, 1, 11)], 0);
            let hh = combo(&[(10, &h), (-33, &delta)]);
            let e = combo(&[(3, &h), (-10, &delta)]);
            let flop = combo(&[(2, &h), (-7, &delta)]);
            r.check("10^2*22 - 33^2*2", 22, 100 * 22 - 33 * 33 * 2);
            r.check("H^2", 22, ip(&hh, &hh)?);
            r.check("E^2", -2, ip(&e, &e)?);
            r.check("HE", 0, ip(&hh, &e)?);
            r.check("div H", 2, lattice::divisibility_int(&l, &hh)?);
            r.check("(2h-7delta)^2", -10, ip(&flop, &flop)?);
            PicEmbedding::new(hh, e)
        }
        "ir" => {
            let h = lam_vec(&[(1, 1, 19)], 0);
            r.check("38*170^2 - 2*741^2", 38, 38 * 170 * 170 - 2 * 741 * 741);
            r.check("38*39^2 - 2*170^2", -2, 38 * 39 * 39 - 2 * 170 * 170);
            r.check("170^2 - 19*39^2", 1, 170 * 170 - 19 * 39 * 39);
            r.check("741", 19 * 39, 741);
            let mut first = None;
            for sign in [-1i64, 1] {
                let hh = combo(&[(170, &h), (sign * 741, &delta)]);
                let e = combo(&[(39, &h), (sign * 170, &delta)]);
                let tag = if sign < 0 { "-" } else { "+" };
                r.check(format!("H^2 ({tag})"), 38, ip(&hh, &hh)?);
                r.check(format!("E^2 ({tag})"), -2, ip(&e, &e)?);
                r.check(format!("HE ({tag})"), 0, ip(&hh, &e)?);
                r.check(format!("H.h > 0 ({tag})"), true, ip(&hh, &h)? > 0);
                r.check(
                    format!("div H ({tag})"),
                    2,
                    lattice::divisibility_int(&l, &hh)?,
                );
                r.check(
                    format!("div E ({tag})"),
                    1,
                    lattice::divisibility_int(&l, &e)?,
                );
                first.get_or_insert((hh, e));
            }
            let flop = combo(&[(2, &h), (-9, &delta)]);
            r.check("(2h-9delta)^2", -10, ip(&flop, &flop)?);
            r.check("div (2h-9delta)", 2, lattice::divisibility_int(&l, &flop)?);
            let (hh, e) = first.expect("two signs");
            PicEmbedding::new(hh, e)
        }
        "s4k" => {
            let h = lam_vec(&[(1, 1, 2)], 0);
            let n = lam_vec(&[(1, 0, 4), (2, 1, -1)], 0);
            let h12 = combo(&[(1, &h), (2, &n)]);
            let hh = combo(&[(1, &h12), (-2, &delta)]);
            r.check("hn", 4, ip(&h, &n)?);
            r.check("n^2", -2, ip(&n, &n)?);
            r.check(
                "h12",
                format!("{:?}", lam_vec(&[(1, 1, 10), (2, 2, -2)], 0)),
                format!("{h12:?}"),
            );
            r.check("h12^2", 12, ip(&h12, &h12)?);
            r.check("h12.n", 0, ip(&h12, &n)?);
            r.check("H^2", 4, ip(&hh, &hh)?);
            r.check("HN", 0, ip(&hh, &n)?);
            r.check("N.(0,1)_2", 1, ip(&n, &lam_vec(&[(2, 0, 1)], 0))?);
            r.check("div N", 1, lattice::divisibility_int(&l, &n)?);
            r.check("div H", 1, lattice::divisibility_int(&l, &hh)?);
            let emb = PicEmbedding::new(hh, n);
            r.check("|det K-perp|", 16, emb.complement()?.lattice.abs_det()?);
            emb
        }
        "div416" => {
            let (emb, _) = classical_example("s4k")?;
            let (h, e) = (&emb.h, &emb.e);
            let h1 = combo(&[(3, h), (-4, e)]);
            let e1 = combo(&[(2, h), (-3, e)]);
            let ll = combo(&[(1, h), (-1, e)]);
            r.check("H^2", 4, ip(h, h)?);
            r.check("(H')^2", 4, ip(&h1, &h1)?);
            r.check("(E')^2", -2, ip(&e1, &e1)?);
            r.check("H'E'", 0, ip(&h1, &e1)?);
            r.check(
                "E + E' = 2L",
                format!("{:?}", lattice::scale(2, &ll)),
                format!("{:?}", lattice::add(e, &e1)),
            );
            r.check("L^2", 2, ip(&ll, &ll)?);
            r.check("HE", 0, ip(h, e)?);
            emb
        }
        other => return Err(Error::UnknownName(other.into())),
    };
    Ok((emb, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_build() {
        let c = build_case(Column::Bn2d8d, 1).unwrap();
        assert_eq!(c.b.coords[2], Q::new(1, 2));
        assert_eq!(c.v.r, q(2));
        assert_eq!(c.e.s, q(1));
        let hc = build_case(Column::Hc2d2d, 3).unwrap();
        assert_eq!(hc.e_table.square(), q(-8));
        let c6 = build_case(Column::Bn8k6, 0).unwrap();
        assert_eq!((c6.v.s, c6.h.s, c6.e.s), (q(1), q(3), q(2)));
        assert!(build_case(Column::Bn8k8k, 0).is_err());
    }

    #[test]
    fn cases_verify() {
        for col in Column::ALL {
            for p in 0..=4 {
                if p < col.min_param() {
                    continue;
                }
                let rep = verify_case(&build_case(col, p).unwrap()).unwrap();
                let bad: Vec<_> = rep.failures().collect();
                assert!(bad.is_empty(), "{col} {p}: {bad:?}");
            }
        }
    }

    #[test]
    fn transcendental() {
        for col in Column::ALL {
            for p in 0..=5 {
                if p < col.min_param() {
                    continue;
                }
                let rep = verify_transcendental(col, p).unwrap();
                let bad: Vec<_> = rep.failures().collect();
                assert!(bad.is_empty(), "{col} {p}: {bad:?}");
            }
        }
        assert_eq!(transcendental_gram(Column::Bn8k8k, 2).unwrap().det_tx, 16);
        assert_eq!(transcendental_gram(Column::Bn2d8d, 1).unwrap().det_tx, 8);
        assert_eq!(transcendental_gram(Column::Hc2d2d, 2).unwrap().det_tx, 4);
    }

    #[test]
    fn restriction_index() {
        assert!(index_two_abstract().unwrap().passed());
        for col in [Column::Bn8k8k, Column::Bn2d8d, Column::Bn8k2, Column::Bn8k6] {
            for p in 1..=3 {
                let rep = index_two_image(col, p).unwrap();
                let bad: Vec<_> = rep.failures().collect();
                assert!(bad.is_empty(), "{col} {p}: {bad:?}");
            }
        }
        assert!(index_two_image(Column::Hc2d2d, 1).is_err());
    }

    #[test]
    fn classical() {
        for n in CLASSICAL_NAMES {
            let (_, rep) = classical_example(n).unwrap();
            let bad: Vec<_> = rep.failures().collect();
            assert!(bad.is_empty(), "{n}: {bad:?}");
        }
        assert!(classical_example("nope").is_err());
    }

    #[test]
    fn isometries() {
        for k in 0..=5 {
            assert!(isometry_8k2(k).unwrap());
            assert!(isometry_8k6(k).unwrap());
        }
    }
}
