//! Polynomial identities around the quartic surface
//! `z1^4 + z2^4 = z0 z3 (z0^2 + z3^2)`: two rational curves on it, its
//! degree-ten model inside a quintic Del Pezzo threefold, and the EPW sextic
//! obtained from pairs of points on that model.

pub mod field;
pub mod poly;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ensure_len, Error, Result};
use crate::report::Report;
use field::{Nf, CYCLOTOMIC_8, FIFTH_ROOT_18, RATIONALS};
use poly::{rat, var_names, MultiPoly};

/// Raw data files, one term per line.
pub mod data {
    pub const QUARTIC: &str = include_str!("../../data/quartic_f.txt");
    pub const QUADRIC_Q: &str = include_str!("../../data/quadric_q.txt");
    pub const CUBICS: [&str; 3] = [
        include_str!("../../data/cubic_f1.txt"),
        include_str!("../../data/cubic_f2.txt"),
        include_str!("../../data/cubic_f3.txt"),
    ];
    pub const QUADRICS: [&str; 6] = [
        include_str!("../../data/quadric_F0.txt"),
        include_str!("../../data/quadric_F1.txt"),
        include_str!("../../data/quadric_F2.txt"),
        include_str!("../../data/quadric_F3.txt"),
        include_str!("../../data/quadric_F4.txt"),
        include_str!("../../data/quadric_F5.txt"),
    ];
    pub const TARGET_QUADRICS: [&str; 5] = [
        include_str!("../../data/quadric_A0.txt"),
        include_str!("../../data/quadric_A1.txt"),
        include_str!("../../data/quadric_A2.txt"),
        include_str!("../../data/quadric_A3.txt"),
        include_str!("../../data/quadric_A4.txt"),
    ];
    pub const SEXTIC: &str = include_str!("../../data/sextic.txt");
}

pub fn z_vars() -> Vec<String> {
    var_names("z", 4)
}

pub fn y_vars() -> Vec<String> {
    var_names("y", 7)
}

pub fn h_vars() -> Vec<String> {
    var_names("h", 7)
}

pub fn x_vars() -> Vec<String> {
    var_names("x", 6)
}

pub fn st_vars() -> Vec<String> {
    vec!["s".into(), "t".into()]
}

fn load(text: &str, vars: &[String]) -> MultiPoly {
    MultiPoly::parse(text, vars).expect("bundled data parses")
}

pub fn quartic() -> MultiPoly {
    load(data::QUARTIC, &z_vars())
}

pub fn quadric_q() -> MultiPoly {
    load(data::QUADRIC_Q, &z_vars())
}

pub fn cubics() -> [MultiPoly; 3] {
    data::CUBICS.map(|t| load(t, &z_vars()))
}

/// The six quadrics in seven variables; the first five cut out the quintic.
pub fn quadrics() -> [MultiPoly; 6] {
    data::QUADRICS.map(|t| load(t, &y_vars()))
}

pub fn target_quadrics() -> [MultiPoly; 5] {
    data::TARGET_QUADRICS.map(|t| load(t, &h_vars()))
}

pub fn sextic() -> MultiPoly {
    load(data::SEXTIC, &x_vars())
}

/// `x1 x4 - x2 x5`.
pub fn quadric_qn() -> MultiPoly {
    MultiPoly::from_int_terms(
        &x_vars(),
        &[(1, &[0, 1, 0, 0, 1, 0]), (-1, &[0, 0, 1, 0, 0, 1])],
    )
}

fn st_mono(a: u32, b: u32) -> MultiPoly {
    MultiPoly::from_int_terms(&st_vars(), &[(1, &[a, b])])
}

/// `(s^4 : s t^3 : s^3 t : t^4)`.
pub fn curve_n() -> [MultiPoly; 4] {
    [st_mono(4, 0), st_mono(1, 3), st_mono(3, 1), st_mono(0, 4)]
}

/// `(s^4 : s^3 t : s t^3 : t^4)`.
pub fn curve_n_prime() -> [MultiPoly; 4] {
    [st_mono(4, 0), st_mono(3, 1), st_mono(1, 3), st_mono(0, 4)]
}

/// The degree-ten map `(sign z_i q, f1, f2, f3)`. With `sign = -1` its image
/// lies on the five quadrics as stored.
pub fn ten_map(sign: i64) -> Vec<MultiPoly> {
    let zs = z_vars();
    let q = quadric_q().scale(&Nf::from_int(&RATIONALS, sign));
    let mut out: Vec<MultiPoly> = (0..4)
        .map(|i| MultiPoly::var(&zs, &RATIONALS, i).mul(&q))
        .collect();
    out.extend(cubics());
    out
}

pub const TEN_MAP_SIGN: i64 = -1;

/// `y = (18h1, -3r^3 h2, -3r^4 h4, -18r^2 h5, r^2 h0, 12r h3, 18h6)`.
pub fn mukai_umemura_substitution() -> Vec<MultiPoly> {
    let hs = h_vars();
    let m = &FIFTH_ROOT_18;
    let r = Nf::generator(m);
    let term =
        |c: i64, rp: u32, var: usize| MultiPoly::var(&hs, m, var).scale(&r.pow(rp).scale(&rat(c)));
    vec![
        term(18, 0, 1),
        term(-3, 3, 2),
        term(-3, 4, 4),
        term(-18, 2, 5),
        term(1, 2, 0),
        term(12, 1, 3),
        term(18, 0, 6),
    ]
}

/// `(i s : i t : z t : s : z^3 t : 0 : t)` with `z` a primitive eighth root of
/// unity and `i = z^2`.
pub fn line_on_quintic() -> Vec<MultiPoly> {
    let v = st_vars();
    let m = &CYCLOTOMIC_8;
    let z = Nf::generator(m);
    let s = MultiPoly::var(&v, m, 0);
    let t = MultiPoly::var(&v, m, 1);
    vec![
        s.scale(&z.pow(2)),
        t.scale(&z.pow(2)),
        t.scale(&z),
        s.clone(),
        t.scale(&z.pow(3)),
        MultiPoly::zero(&v, m),
        t,
    ]
}

/// Clears denominators and content; the first nonzero entry is positive.
pub fn normalize(coords: &[BigRational]) -> Result<Vec<BigInt>> {
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let den = coords
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords.iter().map(|c| (c * &den).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(Signed::is_negative)
    {
        g = -g;
    }
    Ok(ints.into_iter().map(|c| c / &g).collect())
}

fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Symmetric matrix `B` with `F(x) = x^T B x`.
pub fn bilinear_form(f: &MultiPoly) -> Result<Vec<Vec<BigRational>>> {
    let n = f.nvars();
    let mut b = vec![vec![BigRational::zero(); n]; n];
    for (m, c) in f.terms() {
        if m.degree() != 2 {
            return Err(Error::InvalidParameter(format!(
                "term of degree {} in a quadratic form",
                m.degree()
            )));
        }
        let c = c
            .as_rational()
            .ok_or_else(|| Error::InvalidParameter("irrational coefficient".into()))?;
        let idx: Vec<usize> =
            m.0.iter()
                .enumerate()
                .flat_map(|(i, &e)| core::iter::repeat_n(i, e as usize))
                .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            b[i][i] += c;
        } else {
            let half = c / rat(2);
            b[i][j] += &half;
            b[j][i] += &half;
        }
    }
    Ok(b)
}

pub fn pair(b: &[Vec<BigRational>], p: &[BigRational], q: &[BigRational]) -> BigRational {
    let mut s = BigRational::zero();
    for (i, row) in b.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                s += x * &p[i] * &q[j];
            }
        }
    }
    s
}

/// Order in which the six polarized quadrics become sextic coordinates.
pub const PAIR_MAP_ORDER: [usize; 6] = [5, 0, 1, 2, 4, 3];

/// Sends two points of the degree-ten surface to the sextic.
pub fn phi_l(p: &[BigInt], q: &[BigInt]) -> Result<Vec<BigInt>> {
    ensure_len(7, p.len())?;
    ensure_len(7, q.len())?;
    let forms = quadrics();
    let (pr, qr) = (to_rational(p), to_rational(q));
    for (j, f) in forms.iter().enumerate() {
        for x in [&pr, &qr] {
            if !f.eval_rational(x)?.is_zero() {
                return Err(Error::Precondition(format!(
                    "point is off the quadric F{j}"
                )));
            }
        }
    }
    if normalize(&pr)? == normalize(&qr)? {
        return Err(Error::Precondition("the two points coincide".into()));
    }
    let vals: Vec<BigRational> = PAIR_MAP_ORDER
        .iter()
        .map(|&k| bilinear_form(&forms[k]).map(|b| pair(&b, &pr, &qr)))
        .collect::<Result<_>>()?;
    normalize(&vals).map_err(|_| Error::Indeterminate)
}

/// Image of a point of `n` under the degree-ten map, after removing the
/// common factor `s t (s^8 - t^8)`.
pub fn conic_point(s: i64, t: i64) -> Vec<BigInt> {
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    vec![
        0.into(),
        0.into(),
        0.into(),
        0.into(),
        -(&s * &s),
        &s * &t,
        &t * &t,
    ]
}

fn det3(m: [[&BigRational; 3]; 3]) -> BigRational {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn rank_three(rows: [&[BigRational]; 3]) -> bool {
    let cols = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    cols.iter().any(|c| {
        !det3([0, 1, 2].map(|r| [&rows[r][c[0]], &rows[r][c[1]], &rows[r][c[2]]])).is_zero()
    })
}

/// The degree-ten map vanishes on the cone over `n'`; its value on the
/// blow-up is the derivative along a surface tangent direction transverse to
/// the curve.
pub fn base_curve_point(s: i64, t: i64) -> Result<Vec<BigInt>> {
    let param = curve_n_prime();
    let at = [rat(s), rat(t)];
    let p: Vec<BigRational> = param
        .iter()
        .map(|c| c.eval_rational(&at))
        .collect::<Result<_>>()?;
    let f = quartic();
    let grad: Vec<BigRational> = (0..4)
        .map(|i| f.derivative(i).eval_rational(&p))
        .collect::<Result<_>>()?;
    let t1: Vec<BigRational> = param
        .iter()
        .map(|c| c.derivative(0).eval_rational(&at))
        .collect::<Result<_>>()?;
    let t2: Vec<BigRational> = param
        .iter()
        .map(|c| c.derivative(1).eval_rational(&at))
        .collect::<Result<_>>()?;
    let i0 = grad
        .iter()
        .position(|g| !g.is_zero())
        .ok_or(Error::Indeterminate)?;
    let dir = (0..4)
        .filter(|&j| j != i0)
        .map(|j| {
            let mut w = vec![BigRational::zero(); 4];
            w[j] = grad[i0].clone();
            w[i0] = -&grad[j];
            w
        })
        .find(|w| rank_three([&t1, &t2, w]))
        .ok_or(Error::Indeterminate)?;
    let image: Vec<BigRational> = ten_map(TEN_MAP_SIGN)
        .iter()
        .map(|phi| {
            let mut acc = BigRational::zero();
            for (i, w) in dir.iter().enumerate() {
                if !w.is_zero() {
                    acc += phi.derivative(i).eval_rational(&p)? * w;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    normalize(&image).map_err(|_| Error::Indeterminate)
}

pub fn verify_curves() -> Result<Report> {
    let mut r = Report::new("curves");
    let (f, q) = (quartic(), quadric_q());
    for (name, c) in [("n", curve_n()), ("n'", curve_n_prime())] {
        r.check(
            format!("quartic on {name}"),
            "0".to_string(),
            f.compose(&c)?.to_string(),
        );
        r.check(
            format!("q on {name}"),
            "0".to_string(),
            q.compose(&c)?.to_string(),
        );
    }
    let ident: Vec<MultiPoly> = (0..4)
        .map(|i| MultiPoly::var(&z_vars(), &RATIONALS, i))
        .collect();
    r.truth("quartic under identity", f.compose(&ident)? == f, "changed");
    Ok(r)
}

pub fn verify_del_pezzo() -> Result<Report> {
    let mut r = Report::new("del-pezzo");
    let forms = quadrics();
    let phi = ten_map(TEN_MAP_SIGN);
    for (j, fj) in forms.iter().enumerate().take(5) {
        let c = fj.compose(&phi)?;
        r.check(format!("F{j} on image"), "0".to_string(), c.to_string());
    }
    let c5 = forms[5].compose(&phi)?;
    r.check("F5 on image degree", 6, c5.total_degree().unwrap_or(0));
    let (quot, rem) = c5.div_rem(&quartic())?;
    r.check("F5 on image mod quartic", "0".to_string(), rem.to_string());
    r.truth(
        "quotient is a quadratic form",
        quot.is_homogeneous() && quot.total_degree() == Some(2),
        &quot,
    );
    r.note("quotient", &quot);
    let flipped = ten_map(-TEN_MAP_SIGN);
    let nonzero: Vec<String> = forms
        .iter()
        .take(5)
        .enumerate()
        .filter(|(_, fj)| !fj.compose(&flipped).is_ok_and(|c| c.is_zero()))
        .map(|(j, _)| format!("F{j}"))
        .collect();
    r.note(
        "quadrics nonvanishing with +q in the first four coordinates",
        nonzero.join(","),
    );
    Ok(r)
}

pub const MUKAI_UMEMURA_FACTOR: i64 = 324;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionalityFactor {
    pub index: usize,
    pub factor: Option<Nf>,
}

/// For each target quadric, the constant `c` with `F_j(subst) = c A_j` if one
/// exists.
pub fn mukai_umemura_factors() -> Result<Vec<ProportionalityFactor>> {
    let sub = mukai_umemura_substitution();
    let forms = quadrics();
    let targets = target_quadrics();
    let mut out = Vec::new();
    for (j, a) in targets.iter().enumerate() {
        let g = forms[j].compose(&sub)?;
        let a = a.over(&FIFTH_ROOT_18);
        let (m, lead) = a.leading().expect("nonzero target");
        let c = &g.coefficient(&m.0) * &lead.inv().expect("nonzero");
        let factor = (g == a.scale(&c)).then_some(c);
        out.push(ProportionalityFactor { index: j, factor });
    }
    Ok(out)
}

pub fn verify_mukai_umemura() -> Result<Report> {
    let mut r = Report::new("mukai-umemura");
    let expected = Nf::from_int(&FIFTH_ROOT_18, MUKAI_UMEMURA_FACTOR);
    for pf in mukai_umemura_factors()? {
        let j = pf.index;
        r.truth(
            format!("F{j} proportional to A{j}"),
            pf.factor.is_some(),
            "no constant factor",
        );
        let got = pf.factor.map_or("none".to_string(), |c| c.to_string());
        r.check(format!("factor for j={j}"), expected.to_string(), got);
    }
    let r_gen = Nf::generator(&FIFTH_ROOT_18);
    r.check("r^5", "18".to_string(), r_gen.pow(5).to_string());
    let a0 = target_quadrics()[0].over(&FIFTH_ROOT_18).scale(&expected);
    r.check(
        "h0*h4 coefficient of 324*A0",
        expected.to_string(),
        a0.coefficient(&[1, 0, 0, 0, 1, 0, 0]).to_string(),
    );
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    BaseBase,
    BaseConic,
    ConicConic,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::BaseBase => "n'xn'",
            PairKind::BaseConic => "n'xn",
            PairKind::ConicConic => "nxn",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticSample {
    pub kind: PairKind,
    pub params: [(i64, i64); 2],
    pub image: Vec<BigInt>,
    pub value: BigInt,
}

fn draw_params(rng: &mut ChaCha8Rng) -> (i64, i64) {
    loop {
        let s = rng.random_range(1..=7i64);
        let t = rng.random_range(-7..=7i64);
        if t != 0 && s != t.abs() {
            return (s, t);
        }
    }
}

/// Draws `count` image points of the pair map, skipping coincident or
/// indeterminate pairs. Returns the samples and the number of skipped draws.
pub fn sample_sextic_points(count: usize, seed: u64) -> Result<(Vec<SexticSample>, usize)> {
    let sx = sextic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut skipped = 0;
    while out.len() < count {
        let kind = match out.len() % 4 {
            0 | 1 => PairKind::BaseBase,
            2 => PairKind::BaseConic,
            _ => PairKind::ConicConic,
        };
        let (a, b) = (draw_params(&mut rng), draw_params(&mut rng));
        let point = |on_base: bool, (s, t): (i64, i64)| {
            if on_base {
                base_curve_point(s, t)
            } else {
                Ok(conic_point(s, t))
            }
        };
        let (p, q) = match kind {
            PairKind::BaseBase => (point(true, a), point(true, b)),
            PairKind::BaseConic => (point(true, a), point(false, b)),
            PairKind::ConicConic => (point(false, a), point(false, b)),
        };
        let image = match (p, q) {
            (Ok(p), Ok(q)) => phi_l(&p, &q),
            (Err(e), _) | (_, Err(e)) => Err(e),
        };
        match image {
            Ok(image) => {
                let value = sx.eval_rational(&to_rational(&image))?.to_integer();
                out.push(SexticSample {
                    kind,
                    params: [a, b],
                    image,
                    value,
                });
            }
            Err(Error::Indeterminate | Error::Precondition(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((out, skipped))
}

pub const SEXTIC_TERMS: usize = 53;

pub fn verify_sextic(samples: usize, seed: u64) -> Result<Report> {
    let mut r = Report::new("sextic");
    let sx = sextic();
    r.check("terms", SEXTIC_TERMS, sx.len());
    r.check("degree", 6, sx.total_degree().unwrap_or(0));
    r.truth("homogeneous", sx.is_homogeneous(), "mixed degrees");
    let (pts, skipped) = sample_sextic_points(samples, seed)?;
    let zeros = pts.iter().filter(|p| p.value.is_zero()).count();
    r.check("vanishing samples", samples, zeros);
    for p in pts.iter().filter(|p| !p.value.is_zero()) {
        r.check(
            format!("value at {:?}", p.image),
            "0".to_string(),
            p.value.to_string(),
        );
    }
    let qn = quadric_qn();
    let mixed: Vec<&SexticSample> = pts
        .iter()
        .filter(|p| p.kind != PairKind::BaseBase)
        .collect();
    let on_qn = mixed
        .iter()
        .filter(|p| {
            qn.eval_rational(&to_rational(&p.image))
                .is_ok_and(|v| v.is_zero())
        })
        .count();
    r.check(
        "pairs through the conic satisfy x1x4 = x2x5",
        mixed.len(),
        on_qn,
    );
    r.note("skipped draws", skipped);
    r.note("seed", seed);
    Ok(r)
}

/// The two rational points with vanishing gradient.
pub const RATIONAL_SINGULAR_POINTS: [[i64; 6]; 2] = [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]];

pub fn verify_very_singular() -> Result<Report> {
    let mut r = Report::new("very-singular");
    let sx = sextic();
    for pt in RATIONAL_SINGULAR_POINTS {
        let x: Vec<BigRational> = pt.iter().map(|&c| rat(c)).collect();
        r.check(format!("value at {pt:?}"), rat(0), sx.eval_rational(&x)?);
        let grad: Vec<String> = (0..6)
            .map(|i| sx.derivative(i).eval_rational(&x).map(|v| v.to_string()))
            .collect::<Result<_>>()?;
        r.check(
            format!("gradient at {pt:?}"),
            "0,0,0,0,0,0".to_string(),
            grad.join(","),
        );
    }
    Ok(r)
}

pub fn verify_line_on_s10() -> Result<Report> {
    let mut r = Report::new("line");
    let z = Nf::generator(&CYCLOTOMIC_8);
    r.truth("z^8 = 1", z.pow(8).is_one(), z.pow(8));
    r.check("(z^2)^2", "-1".to_string(), z.pow(2).pow(2).to_string());
    let line = line_on_quintic();
    for (j, fj) in quadrics().iter().enumerate() {
        r.check(
            format!("F{j} on line"),
            "0".to_string(),
            fj.compose(&line)?.to_string(),
        );
    }
    Ok(r)
}

pub fn verify_conic_image() -> Result<Report> {
    let mut r = Report::new("conic");
    let v = st_vars();
    let n = curve_n();
    let image: Vec<MultiPoly> = ten_map(TEN_MAP_SIGN)
        .iter()
        .map(|c| c.compose(&n))
        .collect::<Result<_>>()?;
    // s t (s^8 - t^8)
    let content = MultiPoly::from_int_terms(&v, &[(1, &[9, 1]), (-1, &[1, 9])]);
    let expected = [
        MultiPoly::zero(&v, &RATIONALS),
        MultiPoly::zero(&v, &RATIONALS),
        MultiPoly::zero(&v, &RATIONALS),
        MultiPoly::zero(&v, &RATIONALS),
        MultiPoly::from_int_terms(&v, &[(-1, &[2, 0])]),
        MultiPoly::from_int_terms(&v, &[(1, &[1, 1])]),
        MultiPoly::from_int_terms(&v, &[(1, &[0, 2])]),
    ];
    let mut reduced = Vec::new();
    for (k, c) in image.iter().enumerate() {
        let (quot, rem) = c.div_rem(&content)?;
        r.check(
            format!("y{k} divisible by st(s^8-t^8)"),
            "0".to_string(),
            rem.to_string(),
        );
        reduced.push(quot);
    }
    let sign = if reduced[6] == expected[6] { 1 } else { -1 };
    let signed: Vec<MultiPoly> = reduced
        .iter()
        .map(|p| p.scale(&Nf::from_int(&RATIONALS, sign)))
        .collect();
    let show = |ps: &[MultiPoly]| {
        ps.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" : ")
    };
    r.check("reduced image", show(&expected), show(&signed));
    let conic = MultiPoly::from_int_terms(
        &y_vars(),
        &[(1, &[0, 0, 0, 0, 1, 0, 1]), (1, &[0, 0, 0, 0, 0, 2, 0])],
    );
    r.check(
        "y4y6 + y5^2 on image",
        "0".to_string(),
        conic.compose(&signed)?.to_string(),
    );
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FermatCheck {
    Curves,
    DelPezzo,
    MukaiUmemura,
    Sextic,
    VerySingular,
    Line,
    Conic,
}

impl FermatCheck {
    pub const ALL: [FermatCheck; 7] = [
        FermatCheck::Curves,
        FermatCheck::DelPezzo,
        FermatCheck::MukaiUmemura,
        FermatCheck::Sextic,
        FermatCheck::VerySingular,
        FermatCheck::Line,
        FermatCheck::Conic,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FermatCheck::Curves => "curves",
            FermatCheck::DelPezzo => "del-pezzo",
            FermatCheck::MukaiUmemura => "mu",
            FermatCheck::Sextic => "sextic",
            FermatCheck::VerySingular => "very-singular",
            FermatCheck::Line => "line",
            FermatCheck::Conic => "conic",
        }
    }

    pub fn parse(s: &str) -> Result<FermatCheck> {
        FermatCheck::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }

    pub fn run(self, samples: usize, seed: u64) -> Result<Report> {
        match self {
            FermatCheck::Curves => verify_curves(),
            FermatCheck::DelPezzo => verify_del_pezzo(),
            FermatCheck::MukaiUmemura => verify_mukai_umemura(),
            FermatCheck::Sextic => verify_sextic(samples, seed),
            FermatCheck::VerySingular => verify_very_singular(),
            FermatCheck::Line => verify_line_on_s10(),
            FermatCheck::Conic => verify_conic_image(),
        }
    }
}

pub const DEFAULT_SAMPLES: usize = 25;

pub fn fermat_report(samples: usize, seed: u64) -> Result<Report> {
    let mut r = Report::new("fermat");
    for c in FermatCheck::ALL {
        r.extend(c.run(samples, seed)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_checksums() {
        assert_eq!((quartic().len(), quartic().total_degree()), (4, Some(4)));
        assert_eq!(
            (quadric_q().len(), quadric_q().total_degree()),
            (2, Some(2))
        );
        for c in cubics() {
            assert_eq!((c.len(), c.total_degree()), (2, Some(3)));
        }
        let counts: Vec<usize> = quadrics().iter().map(MultiPoly::len).collect();
        assert_eq!(counts, [3, 3, 3, 3, 3, 4]);
        let counts: Vec<usize> = target_quadrics().iter().map(MultiPoly::len).collect();
        assert_eq!(counts, [3, 3, 3, 3, 3]);
        assert_eq!((sextic().len(), sextic().total_degree()), (53, Some(6)));
    }

    #[test]
    fn curves_and_quintic() {
        assert!(verify_curves().unwrap().passed());
        let r = verify_del_pezzo().unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let phi = ten_map(TEN_MAP_SIGN);
        let (quot, _) = quadrics()[5]
            .compose(&phi)
            .unwrap()
            .div_rem(&quartic())
            .unwrap();
        assert_eq!(quot, quadric_q().neg());
    }

    #[test]
    fn polarization() {
        let b = bilinear_form(&quadrics()[5]).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(b[0][0], rat(1));
        assert_eq!(b[3][3], rat(1));
        assert_eq!(b[1][4], half);
        assert_eq!(b[6][2], half);
        let y05 = MultiPoly::from_int_terms(&y_vars(), &[(1, &[1, 0, 0, 0, 0, 1, 0])]);
        let b = bilinear_form(&y05).unwrap();
        assert_eq!((b[0][5].clone(), b[5][0].clone()), (half.clone(), half));
        assert!(bilinear_form(&quartic()).is_err());
    }

    #[test]
    fn conic_and_line() {
        assert!(verify_conic_image().unwrap().passed());
        assert!(verify_line_on_s10().unwrap().passed());
        assert!(verify_very_singular().unwrap().passed());
    }

    #[test]
    fn pair_map() {
        let p = base_curve_point(2, 1).unwrap();
        let q = conic_point(1, 3);
        let x = phi_l(&p, &q).unwrap();
        assert!(sextic().eval_rational(&to_rational(&x)).unwrap().is_zero());
        assert!(quadric_qn()
            .eval_rational(&to_rational(&x))
            .unwrap()
            .is_zero());
        assert!(matches!(phi_l(&p, &p), Err(Error::Precondition(_))));
        assert_eq!(
            phi_l(&conic_point(1, 2), &conic_point(3, 1)).unwrap(),
            [0, 0, 0, 1, 0, 0].map(BigInt::from)
        );
    }

    #[test]
    fn sextic_samples() {
        let r = verify_sextic(12, 7).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn mukai_umemura_factors_found() {
        let f = mukai_umemura_factors().unwrap();
        assert!(f.iter().all(|p| p.factor.is_some()));
        let r = Nf::generator(&FIFTH_ROOT_18);
        let expect = [
            r.scale(&rat(54)),
            r.pow(4).scale(&rat(18)),
            r.pow(2).scale(&rat(18)),
            Nf::from_int(&FIFTH_ROOT_18, -324),
            r.pow(3).scale(&rat(54)),
        ];
        for (p, e) in f.iter().zip(expect) {
            assert_eq!(p.factor.as_ref().unwrap(), &e);
        }
    }
}
