#![allow(clippy::needless_range_loop)]

use hk_core::brauer::{
    bfield_of_class, brauer_type, class_of_bfield, gamma_alpha, invariant_b2, invariant_bh,
    normalize_bfield, q_multiset, BField, BrauerClass, BrauerType, K3_RANK, PRIME_RANK,
};
use hk_core::chern::{chern_product, fujiki_product, Factor, TruncatedClass};
use hk_core::fermat::field::{Nf, CYCLOTOMIC_8, FIFTH_ROOT_18};
use hk_core::fermat::poly::{var_names, MultiPoly};
use hk_core::fermat::{base_curve_point, conic_point, phi_l};
use hk_core::lattice::{discriminant_group, q, Lattice};
use hk_core::mukai::{exists_minus2_sheaf, minus2_predicted};
use hk_core::pell::{
    fundamental, no_solution_certificate, recheck_modular, solve_pell, CertificateKind, Parity,
};
use hk_core::Q;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn det3(g: &[Vec<i64>]) -> i64 {
    match g.len() {
        1 => g[0][0],
        2 => g[0][0] * g[1][1] - g[0][1] * g[1][0],
        _ => {
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        }
    }
}

/// Counts `x in [0,1)^n` with denominators dividing `D` and `G x` integral.
fn dual_cosets(g: &[Vec<i64>], den: i64) -> u64 {
    let n = g.len();
    let mut count = 0;
    let mut k = vec![0i64; n];
    loop {
        if g.iter()
            .all(|row| row.iter().zip(&k).map(|(a, b)| a * b).sum::<i64>() % den == 0)
        {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            k[i] += 1;
            if k[i] < den {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

fn small_gram() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |v| {
            let mut g = vec![vec![0; n]; n];
            let mut it = v.into_iter();
            for i in 0..n {
                for j in i..n {
                    let x = it.next().expect("enough entries");
                    let x = if i == j { 2 * x } else { x };
                    g[i][j] = x;
                    g[j][i] = x;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn discriminant_order_matches_dual_cosets(g in small_gram()) {
        let d = det3(&g).abs();
        prop_assume!(d != 0 && d <= 40);
        let l = Lattice::new(g.clone()).unwrap();
        let dg = discriminant_group(&l).unwrap();
        prop_assert_eq!(dg.order(), dual_cosets(&g, d));
        prop_assert_eq!(dg.order(), d as u64);
    }
}

fn brauer_class() -> impl Strategy<Value = BrauerClass> {
    (
        1i64..=24,
        0u8..=1,
        proptest::collection::vec(0i64..=1, PRIME_RANK),
    )
        .prop_map(|(d, a, lam)| BrauerClass::new(d, a, lam).unwrap())
        .prop_filter("nontrivial", |c| !c.is_trivial())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normalize_bfield_idempotent(c in brauer_class(), shift in proptest::collection::vec(-3i64..=3, K3_RANK)) {
        let base = bfield_of_class(&c);
        let coords: Vec<Q> = base.coords.iter().zip(&shift).map(|(x, s)| *x + q(*s)).collect();
        let b = BField::new(c.d, coords).unwrap();
        let n = normalize_bfield(&b).unwrap();
        prop_assert_eq!(&normalize_bfield(&n).unwrap(), &n);
        prop_assert_eq!(class_of_bfield(&n), class_of_bfield(&b));
        prop_assert_eq!(invariant_bh(&n), invariant_bh(&b));
        prop_assert_eq!(invariant_b2(&n), invariant_b2(&b));
        let half = Q::new(1, 2);
        prop_assert!(n.bh() == Q::zero() || n.bh() == half);
        let tw = n.twice();
        prop_assert_eq!(tw.iter().fold(0i64, |g, x| num_integer::gcd(g, *x)), 1);
    }
}

#[test]
fn minus2_parity_prediction() {
    for d in 1..=50 {
        for t in BrauerType::for_parity(d) {
            let ans = exists_minus2_sheaf(d, t).unwrap();
            assert_eq!(ans.exists, minus2_predicted(d, t), "d = {d}, {t:?}");
            if let Some((_, v)) = ans.witness {
                assert_eq!(v.square(), q(-2));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn brauer_type_constant_on_q_multisets(d in 1i64..=3, pairs in proptest::collection::vec((0u8..=1, proptest::collection::vec(0i64..=1, PRIME_RANK)), 4)) {
        let mut seen: BTreeMap<Vec<Q>, BrauerType> = BTreeMap::new();
        for (a, lam) in pairs {
            let c = BrauerClass::new(d, a, lam).unwrap();
            if c.is_trivial() {
                continue;
            }
            let t = brauer_type(&c).unwrap();
            let g = gamma_alpha(&c).unwrap();
            let ms = q_multiset(&discriminant_group(&g.lattice).unwrap());
            if let Some(prev) = seen.insert(ms, t) {
                prop_assert_eq!(prev, t);
            }
        }
    }
}

fn factor() -> impl Strategy<Value = Factor> {
    (1i64..=3, -3i64..=3, 0u32..=4, -3i64..=3, -3i64..=3).prop_map(
        |(rank, twist, power, c1, c2)| Factor {
            rank,
            twist,
            power,
            base: TruncatedClass::new(1, c1, c2),
        },
    )
}

fn q2() -> impl Strategy<Value = [Q; 2]> {
    (-5i64..=5, -5i64..=5).prop_map(|(a, b)| [q(a), q(b)])
}

proptest! {
    #[test]
    fn chern_product_order_independent(fs in proptest::collection::vec(factor(), 1..5), seed in any::<u64>()) {
        let mut shuffled = fs.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            shuffled.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        prop_assert_eq!(chern_product(&fs), chern_product(&shuffled));
    }

    #[test]
    fn fujiki_symmetric(d in 1i64..=10, a in q2(), b in q2(), c in q2(), e in q2()) {
        let g = [[q(2 * d), Q::zero()], [Q::zero(), q(-2)]];
        let x = fujiki_product(&g, &a, &b, &c, &e);
        prop_assert_eq!(x, fujiki_product(&g, &b, &a, &e, &c));
        prop_assert_eq!(x, fujiki_product(&g, &e, &c, &b, &a));
        let sq = a[0] * a[0] * 2 * d - a[1] * a[1] * 2;
        prop_assert_eq!(fujiki_product(&g, &a, &a, &a, &a), sq * sq * 3);
    }
}

fn small_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(
        (-4i64..=4, proptest::collection::vec(0u32..=2, nvars)),
        0..4,
    )
    .prop_map(move |ts| {
        let vars = var_names("u", nvars);
        let terms: Vec<(i64, &[u32])> = ts.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        MultiPoly::from_int_terms(&vars, &terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_distributes(f in small_poly(3), g in small_poly(3), s in proptest::collection::vec(small_poly(2), 3)) {
        let fs = f.add(&g).compose(&s).unwrap();
        prop_assert_eq!(fs, f.compose(&s).unwrap().add(&g.compose(&s).unwrap()));
        let fg = f.mul(&g).compose(&s).unwrap();
        prop_assert_eq!(fg, f.compose(&s).unwrap().mul(&g.compose(&s).unwrap()));
    }
}

fn nf_elem(m: &'static hk_core::fermat::field::Modulus) -> impl Strategy<Value = Nf> {
    proptest::collection::vec(-6i64..=6, m.degree()).prop_map(move |cs| {
        Nf::from_poly(
            m,
            cs.into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    })
}

fn ring_axioms(a: &Nf, b: &Nf, c: &Nf) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(a * b), &(b * a));
    prop_assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
    prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
    prop_assert_eq!(&(&(a + b) - b), a);
    if let Some(inv) = a.inv() {
        prop_assert!((a * &inv).is_one());
    } else {
        prop_assert!(a.is_zero());
    }
    Ok(())
}

proptest! {
    #[test]
    fn fifth_root_field(a in nf_elem(&FIFTH_ROOT_18), b in nf_elem(&FIFTH_ROOT_18), c in nf_elem(&FIFTH_ROOT_18)) {
        ring_axioms(&a, &b, &c)?;
        prop_assert_eq!(Nf::generator(&FIFTH_ROOT_18).pow(5), Nf::from_int(&FIFTH_ROOT_18, 18));
    }

    #[test]
    fn cyclotomic_field(a in nf_elem(&CYCLOTOMIC_8), b in nf_elem(&CYCLOTOMIC_8), c in nf_elem(&CYCLOTOMIC_8)) {
        ring_axioms(&a, &b, &c)?;
        prop_assert_eq!(Nf::generator(&CYCLOTOMIC_8).pow(4), Nf::from_int(&CYCLOTOMIC_8, -1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pell_powers_stay_solutions(d in 2i64..=300) {
        prop_assume!((d as f64).sqrt().fract() != 0.0);
        let (a, b) = fundamental(d).unwrap();
        prop_assert!(&b * &b - BigInt::from(d) * &a * &a == BigInt::one());
        let sols = solve_pell(d, 1, Parity::ANY, u64::MAX).unwrap();
        prop_assume!(!sols.is_empty());
        prop_assert_eq!(&sols[0].a, &a);
        for w in sols.windows(2) {
            prop_assert!(w[1].holds());
            // (b + a sqrt D)^k: successive a grow by the recurrence a' = a b1 + b a1
            prop_assert_eq!(&w[1].a, &(&w[0].a * &b + &w[0].b * &a));
        }
    }

    #[test]
    fn modular_certificates_agree_with_search(d in 2i64..=60, n in -30i64..=30, m in 2i64..=12) {
        prop_assume!(n != 0);
        if let Ok(cert) = no_solution_certificate(d, n, Parity::ANY, CertificateKind::Modular(m)) {
            prop_assert!(recheck_modular(d, n, Parity::ANY, &cert));
            prop_assert!(solve_pell(d, n, Parity::ANY, 2000).unwrap().is_empty());
        }
    }

    #[test]
    fn pair_map_ignores_scaling(s1 in 1i64..=5, t1 in 1i64..=5, s2 in 1i64..=5, t2 in 1i64..=5, l in 1i64..=9, mu in -9i64..=-1) {
        prop_assume!(s1 != t1);
        let p = base_curve_point(s1, t1).unwrap();
        let q2 = conic_point(s2, t2);
        let lp: Vec<BigInt> = p.iter().map(|x| x * l).collect();
        let mq: Vec<BigInt> = q2.iter().map(|x| x * mu).collect();
        prop_assert_eq!(phi_l(&p, &q2).unwrap(), phi_l(&lp, &mq).unwrap());
    }
}
