//! Pell-type equations `b^2 - D a^2 = N` and the Hilbert-square and
//! nef-cone criteria built on them.
//!
//! Nonexistence is only reported together with a certificate that can be
//! rechecked by finite enumeration.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::heegner::{self, Column};
use crate::lattice;
use crate::report::Report;

/// Parity requirements on `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Parity {
    pub a_odd: bool,
    pub b_odd: bool,
    pub b_even: bool,
}

impl Parity {
    pub const ANY: Parity = Parity {
        a_odd: false,
        b_odd: false,
        b_even: false,
    };
    pub const ODD_ODD: Parity = Parity {
        a_odd: true,
        b_odd: true,
        b_even: false,
    };
    pub const B_EVEN: Parity = Parity {
        a_odd: false,
        b_odd: false,
        b_even: true,
    };

    /// Comma separated list of `a-odd`, `b-odd`, `b-even`.
    pub fn parse(s: &str) -> Result<Parity> {
        let mut p = Parity::ANY;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "a-odd" => p.a_odd = true,
                "b-odd" => p.b_odd = true,
                "b-even" => p.b_even = true,
                other => return Err(Error::InvalidParameter(format!("unknown parity `{other}`"))),
            }
        }
        if p.b_odd && p.b_even {
            return Err(Error::InvalidParameter(
                "b cannot be both odd and even".into(),
            ));
        }
        Ok(p)
    }

    pub fn accepts(&self, a: &BigInt, b: &BigInt) -> bool {
        self.accepts_bits(a.is_odd(), b.is_odd())
    }

    fn accepts_bits(&self, a_odd: bool, b_odd: bool) -> bool {
        (!self.a_odd || a_odd) && (!self.b_odd || b_odd) && (!self.b_even || !b_odd)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.a_odd {
            parts.push("a-odd");
        }
        if self.b_odd {
            parts.push("b-odd");
        }
        if self.b_even {
            parts.push("b-even");
        }
        if parts.is_empty() {
            f.write_str("any")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// `b^2 - D a^2 = N` with `a > 0`, `b >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub a: BigInt,
    pub b: BigInt,
    pub d: i64,
    pub n: i64,
    pub fundamental: bool,
}

impl PellSolution {
    pub fn holds(&self) -> bool {
        &self.b * &self.b - BigInt::from(self.d) * &self.a * &self.a == BigInt::from(self.n)
    }
}

fn is_square(n: i64) -> bool {
    n >= 0 && n.sqrt() * n.sqrt() == n
}

/// Fundamental solution of `b^2 - D a^2 = 1` from the continued fraction of
/// `sqrt(D)`, as `(a, b)`.
pub fn fundamental(d: i64) -> Result<(BigInt, BigInt)> {
    if d <= 0 || is_square(d) {
        return Err(Error::InvalidParameter(format!(
            "D = {d} must be a positive nonsquare"
        )));
    }
    let a0 = d.sqrt();
    let (mut m, mut den, mut a) = (0i64, 1i64, a0);
    // convergents p/q of sqrt(D)
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    let big_d = BigInt::from(d);
    loop {
        if &p * &p - &big_d * &q * &q == BigInt::one() {
            return Ok((q, p));
        }
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        let p_next = BigInt::from(a) * &p + &p_prev;
        let q_next = BigInt::from(a) * &q + &q_prev;
        p_prev = core::mem::replace(&mut p, p_next);
        q_prev = core::mem::replace(&mut q, q_next);
    }
}

/// `(a, b) * (a1, b1)` in `Z[sqrt D]`, written `b + a sqrt D`.
fn compose(d: &BigInt, x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let (a, b) = x;
    let (a1, b1) = y;
    (a * b1 + b * a1, b * b1 + d * a * a1)
}

/// All solutions with `0 < a <= bound` meeting the parity constraints.
///
/// For `N = 1` and nonsquare `D` the solutions are the powers of the
/// fundamental unit; otherwise every `a` up to `bound` is tried.
pub fn solve_pell(d: i64, n: i64, parity: Parity, bound: u64) -> Result<Vec<PellSolution>> {
    if d <= 0 {
        return Err(Error::InvalidParameter(format!("D = {d} must be positive")));
    }
    if n == 1 && is_square(d) {
        return Err(Error::InvalidParameter(format!(
            "D = {d} is a square; use a certificate instead"
        )));
    }
    let bound_big = BigInt::from(bound);
    let mut out = Vec::new();
    if n == 1 {
        let f = fundamental(d)?;
        let big_d = BigInt::from(d);
        let mut cur = f.clone();
        let mut first = true;
        while cur.0 <= bound_big {
            if parity.accepts(&cur.0, &cur.1) {
                out.push(PellSolution {
                    a: cur.0.clone(),
                    b: cur.1.clone(),
                    d,
                    n,
                    fundamental: first,
                });
            }
            first = false;
            cur = compose(&big_d, &cur, &f);
        }
        return Ok(out);
    }
    for a in 1..=bound {
        let rhs = i128::from(d) * i128::from(a) * i128::from(a) + i128::from(n);
        if rhs < 0 {
            continue;
        }
        let b = rhs.sqrt();
        if b * b == rhs {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            if parity.accepts(&a, &b) {
                out.push(PellSolution {
                    a,
                    b,
                    d,
                    n,
                    fundamental: false,
                });
            }
        }
    }
    Ok(out)
}

/// First solution with `a <= bound` by direct search; the test oracle.
pub fn brute_force_minimal(d: i64, n: i64, parity: Parity, bound: u64) -> Option<(u64, u64)> {
    (1..=bound).find_map(|a| {
        let rhs = i128::from(d) * i128::from(a) * i128::from(a) + i128::from(n);
        if rhs < 0 {
            return None;
        }
        let b = rhs.sqrt();
        (b * b == rhs && parity.accepts_bits(a % 2 == 1, b % 2 == 1)).then_some((a, b as u64))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    SquareFactorization,
    Modular(i64),
    ParityCycle,
}

impl CertificateKind {
    pub fn parse(s: &str, modulus: Option<i64>) -> Result<Self> {
        match s {
            "square-factorization" => Ok(CertificateKind::SquareFactorization),
            "parity-cycle" => Ok(CertificateKind::ParityCycle),
            "modular" => match modulus {
                Some(m) if m > 1 => Ok(CertificateKind::Modular(m)),
                _ => Err(Error::InvalidParameter(
                    "modular certificate needs a modulus > 1".into(),
                )),
            },
            other => Err(Error::UnknownName(other.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `D = m^2`: `(b - m a)(b + m a) = N` leaves finitely many candidates,
    /// none of which is admissible.
    SquareFactorization {
        root: i64,
        candidates: Vec<(i64, i64)>,
    },
    /// Residues of `(a, b)` modulo `modulus` solving the congruence; when
    /// they are all zero and `modulus^2` does not divide `N`, descending to
    /// `modulus^2` leaves nothing (`lifted_modulus`).
    Modular {
        modulus: i64,
        residues: Vec<(i64, i64)>,
        lifted_modulus: Option<i64>,
    },
    /// Parities of the powers of the fundamental unit repeat with period
    /// `cycle.len()` and never meet the constraint.
    ParityCycle {
        fundamental: (BigInt, BigInt),
        cycle: Vec<(bool, bool)>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::SquareFactorization { .. } => "square factorization",
            Certificate::Modular { .. } => "modular",
            Certificate::ParityCycle { .. } => "parity cycle",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::SquareFactorization { root, candidates } => {
                write!(
                    f,
                    "(b - {root}a)(b + {root}a) = N gives only (a,b) in {candidates:?}"
                )
            }
            Certificate::Modular {
                modulus,
                residues,
                lifted_modulus,
            } => {
                write!(f, "residues mod {modulus}: {residues:?}")?;
                if let Some(m) = lifted_modulus {
                    write!(f, "; none mod {m}")?;
                }
                Ok(())
            }
            Certificate::ParityCycle { fundamental, cycle } => {
                write!(
                    f,
                    "fundamental (a,b) = ({}, {}), parity cycle {cycle:?}",
                    fundamental.0, fundamental.1
                )
            }
        }
    }
}

fn residues(d: i64, n: i64, parity: Parity, m: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if (b * b - d * a * a - n).mod_floor(&m) != 0 {
                continue;
            }
            // parity is only visible through an even modulus
            if m % 2 == 0 && !parity.accepts_bits(a % 2 == 1, b % 2 == 1) {
                continue;
            }
            out.push((a, b));
        }
    }
    out
}

/// A certificate that `b^2 - D a^2 = N` has no admissible solution, or an
/// error when the requested argument does not apply.
pub fn no_solution_certificate(
    d: i64,
    n: i64,
    parity: Parity,
    kind: CertificateKind,
) -> Result<Certificate> {
    match kind {
        CertificateKind::SquareFactorization => {
            if !is_square(d) {
                return Err(Error::Certificate(format!("D = {d} is not a square")));
            }
            if n == 0 {
                return Err(Error::Certificate(
                    "N = 0 has infinitely many solutions".into(),
                ));
            }
            let m = d.sqrt();
            let mut candidates = Vec::new();
            for x in 1..=n.abs() {
                if n % x != 0 {
                    continue;
                }
                for x in [x, -x] {
                    let y = n / x;
                    // b - m a = x, b + m a = y
                    if (x + y) % 2 != 0 || m == 0 || (y - x) % (2 * m) != 0 {
                        continue;
                    }
                    let (a, b) = ((y - x) / (2 * m), (x + y) / 2);
                    candidates.push((a, b));
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            if let Some(&(a, b)) = candidates
                .iter()
                .find(|(a, b)| *a != 0 && parity.accepts_bits(a % 2 != 0, b % 2 != 0))
            {
                return Err(Error::Certificate(format!("({a}, {b}) is a solution")));
            }
            Ok(Certificate::SquareFactorization {
                root: m,
                candidates,
            })
        }
        CertificateKind::Modular(m) => {
            let res = residues(d, n, parity, m);
            if res.is_empty() {
                return Ok(Certificate::Modular {
                    modulus: m,
                    residues: res,
                    lifted_modulus: None,
                });
            }
            let m2 = m.checked_mul(m).ok_or(Error::Overflow)?;
            let only_zero = res.iter().all(|&(a, b)| a == 0 && b == 0);
            if only_zero && n % m2 != 0 && residues(d, n, parity, m2).is_empty() {
                return Ok(Certificate::Modular {
                    modulus: m,
                    residues: res,
                    lifted_modulus: Some(m2),
                });
            }
            Err(Error::Certificate(format!(
                "residues mod {m} survive: {res:?}"
            )))
        }
        CertificateKind::ParityCycle => {
            if n != 1 {
                return Err(Error::Certificate("parity cycle needs N = 1".into()));
            }
            let f = fundamental(d).map_err(|e| Error::Certificate(format!("{e}")))?;
            let big_d = BigInt::from(d);
            let mut cycle: Vec<(bool, bool)> = Vec::new();
            let mut cur = f.clone();
            loop {
                let bits = (cur.0.is_odd(), cur.1.is_odd());
                if cycle.contains(&bits) {
                    break;
                }
                cycle.push(bits);
                cur = compose(&big_d, &cur, &f);
            }
            // the parity of the next power only depends on the current one
            if let Some(&(a, b)) = cycle.iter().find(|(a, b)| parity.accepts_bits(*a, *b)) {
                return Err(Error::Certificate(format!(
                    "a power has parities (a odd: {a}, b odd: {b})"
                )));
            }
            Ok(Certificate::ParityCycle {
                fundamental: f,
                cycle,
            })
        }
    }
}

/// Rechecks a modular certificate by exhaustive enumeration.
pub fn recheck_modular(d: i64, n: i64, parity: Parity, c: &Certificate) -> bool {
    match c {
        Certificate::Modular {
            modulus,
            residues: res,
            lifted_modulus,
        } => {
            let again = residues(d, n, parity, *modulus);
            if &again != res {
                return false;
            }
            match lifted_modulus {
                None => res.is_empty(),
                Some(m2) => residues(d, n, parity, *m2).is_empty(),
            }
        }
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hilb2Column {
    /// The second component with `d = 0 mod 8`; needs `a, b` odd.
    Beta8d,
    /// The `gamma = 2` divisor with `d = 3 mod 4`; needs `b` even.
    Alpha2d2d2,
}

impl Hilb2Column {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "8d8d_b" => Some(Hilb2Column::Beta8d),
            "2d2d_2" => Some(Hilb2Column::Alpha2d2d2),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Hilb2Column::Beta8d => "8d8d_b",
            Hilb2Column::Alpha2d2d2 => "2d2d_2",
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Hilb2Column::Beta8d => Parity::ODD_ODD,
            Hilb2Column::Alpha2d2d2 => Parity::B_EVEN,
        }
    }

    fn heegner(self, d: i64) -> Result<(Column, i64)> {
        match self {
            Hilb2Column::Beta8d if d > 0 && d % 8 == 0 => Ok((Column::Bn8k8k, d / 4)),
            Hilb2Column::Alpha2d2d2 if d > 0 && d % 4 == 3 => Ok((Column::Bn8k6, (d - 3) / 4)),
            Hilb2Column::Beta8d => Err(Error::InvalidParameter(format!("d = {d} is not 0 mod 8"))),
            Hilb2Column::Alpha2d2d2 => {
                Err(Error::InvalidParameter(format!("d = {d} is not 3 mod 4")))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hilb2Decision {
    pub column: Hilb2Column,
    pub d: i64,
    pub birational: bool,
    /// Minimal admissible `(a, b)`.
    pub witness: Option<(BigInt, BigInt)>,
    pub certificate: Option<Certificate>,
    /// Checks of `delta = aH + bE` in the Picard lattice of the column.
    pub report: Report,
}

/// Whether the Picard lattice contains a `-2` class of divisibility two.
pub fn birational_to_hilb2(column: Hilb2Column, d: i64) -> Result<Hilb2Decision> {
    let (col, p) = column.heegner(d)?;
    let parity = column.parity();
    let mut report = Report::new(format!("{}({d})", column.label()));
    if is_square(d) {
        let cert = no_solution_certificate(d, 1, parity, CertificateKind::SquareFactorization)?;
        report.note("certificate", &cert);
        return Ok(Hilb2Decision {
            column,
            d,
            birational: false,
            witness: None,
            certificate: Some(cert),
            report,
        });
    }
    let (fa, fb) = fundamental(d)?;
    let big_d = BigInt::from(d);
    let mut cur = (fa.clone(), fb.clone());
    // the parity cycle has length at most 3, so a few powers suffice
    let mut witness = None;
    for _ in 0..4 {
        if parity.accepts(&cur.0, &cur.1) {
            witness = Some(cur.clone());
            break;
        }
        cur = compose(&big_d, &cur, &(fa.clone(), fb.clone()));
    }
    let Some((a, b)) = witness else {
        let cert = no_solution_certificate(d, 1, parity, CertificateKind::ParityCycle)?;
        report.note("certificate", &cert);
        return Ok(Hilb2Decision {
            column,
            d,
            birational: false,
            witness: None,
            certificate: Some(cert),
            report,
        });
    };
    let emb = heegner::pic_embedding(col, p)?;
    let l = &emb.ambient;
    if let (Some(ai), Some(bi)) = (a.to_i64(), b.to_i64()) {
        let delta = lattice::add(&lattice::scale(ai, &emb.h), &lattice::scale(bi, &emb.e));
        report.check("delta^2", -2, l.inner_int(&delta, &delta)?);
        report.check("div delta", 2, lattice::divisibility_int(l, &delta)?);
    } else {
        report.note("witness too large for lattice check", format!("({a}, {b})"));
    }
    Ok(Hilb2Decision {
        column,
        d,
        birational: true,
        witness: Some((a, b)),
        certificate: None,
        report,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefRays {
    /// Rays as `(x, y)` for `xH + y xi`.
    pub rays: [(i64, i64); 2],
    pub contracted: [(i64, i64); 2],
    pub report: Report,
}

/// Nef cone of the Hilbert square of a degree-16 K3 with `Pic = <16> + <-2>`.
pub fn nef_rays_boss() -> Result<NefRays> {
    let mut r = Report::new("nef cone, degree 16");
    let sols = solve_pell(8, 1, Parity::ANY, 10)?;
    let f = sols
        .iter()
        .find(|s| s.fundamental)
        .ok_or(Error::Precondition("no fundamental unit".into()))?;
    let (a, b) = (
        f.b.to_i64().ok_or(Error::Overflow)?,
        f.a.to_i64().ok_or(Error::Overflow)?,
    );
    r.check(
        "minimal solution of x^2 - 8y^2 = 1",
        "(3, 1)".to_string(),
        format!("({a}, {b})"),
    );
    // H - 8(b/a) xi, scaled
    let ray = (a, -8 * b);
    let g = ray.0.gcd(&ray.1);
    let ray = (ray.0 / g, ray.1 / g);
    // (u H + w xi).(a H - 8b xi) = 16(ua + bw)
    let perp = (b, -a);
    let form = |x: (i64, i64), y: (i64, i64)| 16 * x.0 * y.0 - 2 * x.1 * y.1;
    let h = (1, 0);
    let xi = (0, 1);
    r.check("(3H-8xi)^2", 16, form(ray, ray));
    r.check("(H-3xi)^2", -2, form(perp, perp));
    r.check("(H-3xi).(3H-8xi)", 0, form(perp, ray));
    r.check("xi.H", 0, form(xi, h));
    r.check("xi^2", -2, form(xi, xi));
    let cert = no_solution_certificate(32, 5, Parity::ANY, CertificateKind::Modular(5))?;
    r.truth(
        "a^2 - 32b^2 = 5 insolvable",
        recheck_modular(32, 5, Parity::ANY, &cert),
        &cert,
    );
    r.note("certificate", &cert);
    Ok(NefRays {
        rays: [h, ray],
        contracted: [xi, perp],
        report: r,
    })
}

/// Checks every Pell statement against the closed forms and a direct search.
pub fn pell_report(brute_bound: u64) -> Result<Report> {
    let mut r = Report::new("pell");
    let nef = nef_rays_boss()?;
    r.extend(nef.report.clone());
    let cases: [(i64, Parity, (u64, u64)); 6] = [
        (8, Parity::ODD_ODD, (1, 3)),
        (24, Parity::ODD_ODD, (1, 5)),
        (32, Parity::ODD_ODD, (3, 17)),
        (3, Parity::B_EVEN, (1, 2)),
        (11, Parity::B_EVEN, (3, 10)),
        (19, Parity::B_EVEN, (39, 170)),
    ];
    for (d, parity, want) in cases {
        let sols = solve_pell(d, 1, parity, 1000)?;
        let got = sols
            .first()
            .map(|s| (s.a.to_u64().unwrap_or(0), s.b.to_u64().unwrap_or(0)));
        r.check(
            format!("minimal D={d} {parity}"),
            format!("{want:?}"),
            format!("{:?}", got.unwrap_or((0, 0))),
        );
        let bf = brute_force_minimal(d, 1, parity, brute_bound);
        r.check(
            format!("brute force D={d} {parity}"),
            format!("{want:?}"),
            format!("{:?}", bf.unwrap_or((0, 0))),
        );
        let col = if parity == Parity::ODD_ODD {
            Hilb2Column::Beta8d
        } else {
            Hilb2Column::Alpha2d2d2
        };
        let dec = birational_to_hilb2(col, d)?;
        r.truth(
            format!("{} d={d} birational", col.label()),
            dec.birational,
            "no witness",
        );
        r.extend(dec.report);
    }
    let fund19 = fundamental(19)?;
    r.check(
        "fundamental D=19",
        "(39, 170)".to_string(),
        format!("({}, {})", fund19.0, fund19.1),
    );

    let dec = birational_to_hilb2(Hilb2Column::Beta8d, 16)?;
    r.check("8d8d_b d=16 birational", false, dec.birational);
    r.check(
        "8d8d_b d=16 certificate",
        "square factorization",
        dec.certificate.as_ref().map_or("none", Certificate::kind),
    );
    r.check(
        "brute force D=16 odd-odd",
        "None".to_string(),
        format!(
            "{:?}",
            brute_force_minimal(16, 1, Parity::ODD_ODD, brute_bound)
        ),
    );
    let cert = no_solution_certificate(32, 5, Parity::ANY, CertificateKind::Modular(5))?;
    r.truth(
        "a^2 - 32b^2 = 5 modular certificate",
        recheck_modular(32, 5, Parity::ANY, &cert),
        &cert,
    );
    r.check(
        "brute force a^2 - 32b^2 = 5",
        "None".to_string(),
        format!("{:?}", brute_force_minimal(32, 5, Parity::ANY, brute_bound)),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn minimal_solutions() {
        assert_eq!(fundamental(8).unwrap(), (BigInt::from(1), BigInt::from(3)));
        assert_eq!(
            fundamental(19).unwrap(),
            (BigInt::from(39), BigInt::from(170))
        );
        let s = solve_pell(8, 1, Parity::ODD_ODD, 100).unwrap();
        assert_eq!(
            (s[0].a.clone(), s[0].b.clone()),
            (BigInt::from(1), BigInt::from(3))
        );
        assert!(s.iter().all(PellSolution::holds));
        assert!(solve_pell(16, 1, Parity::ANY, 10).is_err());
        assert!(fundamental(61).is_ok());
    }

    #[test]
    fn certificates() {
        let c =
            no_solution_certificate(16, 1, Parity::ODD_ODD, CertificateKind::SquareFactorization)
                .unwrap();
        assert_eq!(
            c,
            Certificate::SquareFactorization {
                root: 4,
                candidates: vec![(0, -1), (0, 1)]
            }
        );
        let m = no_solution_certificate(32, 5, Parity::ANY, CertificateKind::Modular(5)).unwrap();
        assert_eq!(
            m,
            Certificate::Modular {
                modulus: 5,
                residues: vec![(0, 0)],
                lifted_modulus: Some(25)
            }
        );
        assert!(recheck_modular(32, 5, Parity::ANY, &m));
        assert!(no_solution_certificate(2, 1, Parity::ANY, CertificateKind::ParityCycle).is_err());
        assert!(
            no_solution_certificate(2, 1, Parity::ANY, CertificateKind::SquareFactorization)
                .is_err()
        );
        assert!(no_solution_certificate(2, 1, Parity::ANY, CertificateKind::Modular(5)).is_err());
        // 3^2 - 2*2^2 = 1: a = 2 is even, so a-odd has no solutions at all
        let p = no_solution_certificate(
            2,
            1,
            Parity {
                a_odd: true,
                ..Parity::ANY
            },
            CertificateKind::ParityCycle,
        );
        assert!(p.is_ok());
    }

    #[test]
    fn hilb2() {
        let d16 = birational_to_hilb2(Hilb2Column::Beta8d, 16).unwrap();
        assert!(!d16.birational);
        assert_eq!(d16.certificate.unwrap().kind(), "square factorization");
        let d24 = birational_to_hilb2(Hilb2Column::Beta8d, 24).unwrap();
        assert_eq!(d24.witness, Some((BigInt::from(1), BigInt::from(5))));
        assert!(d24.report.passed());
        let d11 = birational_to_hilb2(Hilb2Column::Alpha2d2d2, 11).unwrap();
        assert_eq!(d11.witness, Some((BigInt::from(3), BigInt::from(10))));
        assert!(d11.report.passed());
        assert!(birational_to_hilb2(Hilb2Column::Beta8d, 12).is_err());
    }

    #[test]
    fn boss_rays() {
        let n = nef_rays_boss().unwrap();
        assert_eq!(n.rays, [(1, 0), (3, -8)]);
        assert_eq!(n.contracted, [(0, 1), (1, -3)]);
        assert!(n.report.passed());
    }

    #[test]
    fn full_report() {
        let r = pell_report(2000).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
